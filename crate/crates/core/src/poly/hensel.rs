//! Units of `R[x]`, their inverses, and the unit × monic factorization.

use super::Poly;
use crate::error::{Error, Result};
use crate::ring::{ceil_log2, PrincipalRing};

/// The highest coefficient that is not nilpotent, classified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pivot<E> {
    /// Index of a unit coefficient with only nilpotent coefficients above it.
    Unit(usize),
    /// The highest non-nilpotent coefficient is a splitting element.
    Split(E),
    /// Every coefficient is nilpotent (includes the zero polynomial).
    AllNilpotent,
}

pub fn pivot<R: PrincipalRing>(f: &Poly<R>) -> Pivot<R::Elem> {
    let r = f.ring();
    for (i, c) in f.coeffs().iter().enumerate().rev() {
        if r.is_unit(c) {
            return Pivot::Unit(i);
        }
        if !r.is_nilpotent(c) {
            return Pivot::Split(c.clone());
        }
    }
    Pivot::AllNilpotent
}

/// `f = u * gtilde` with `u` a unit of `R[x]` and `gtilde` monic of degree `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct FunFactorization<R: PrincipalRing> {
    pub u: Poly<R>,
    pub gtilde: Poly<R>,
    pub k: usize,
}

/// Factors `f` as a unit times a monic polynomial whose degree is the index
/// of the pivot coefficient, by Hensel lifting the factorization modulo the
/// nilradical.
pub fn fun_factor<R: PrincipalRing>(f: &Poly<R>) -> Result<FunFactorization<R>> {
    let r = f.ring();
    let k = match pivot(f) {
        Pivot::Unit(k) => k,
        Pivot::Split(c) => return Err(Error::NeedsSplit(r.format_elem(&c))),
        Pivot::AllNilpotent => return Err(Error::NotPrimitive),
    };
    let a = f.coeff(k);
    let ainv = r.inverse(&a).expect("pivot is a unit");
    if Some(k) == f.degree() {
        let gtilde = f.scale(&ainv);
        return Ok(FunFactorization { u: Poly::constant(r, a), gtilde, k });
    }
    if k == 0 {
        return Ok(FunFactorization { u: f.clone(), gtilde: Poly::one(r), k });
    }
    let fs = f.scale(&ainv);
    let mut g = fs.truncate(k + 1);
    let mut u = fs.quo(&g)?;
    let mut s = Poly::one(r);
    let one = Poly::one(r);
    let rounds = ceil_log2(r.nilpotency_bound() as u64) + 2;
    for _ in 0..=rounds {
        let e = fs.sub(&u.mul(&g));
        if e.is_zero() {
            return Ok(FunFactorization { u: u.scale(&a), gtilde: g, k });
        }
        g = g.add(&s.mul(&e).rem(&g)?);
        u = fs.quo(&g)?;
        let err = s.mul(&u).sub(&one);
        s = s.sub(&s.mul(&err).rem(&g)?);
    }
    Err(Error::Internal("Hensel lifting did not converge".into()))
}

/// Inverse of a unit of `R[x]` by Newton iteration `v <- v (2 - v f)`.
pub fn invert_unit<R: PrincipalRing>(f: &Poly<R>) -> Result<Poly<R>> {
    let r = f.ring();
    if !f.is_unit() {
        return Err(Error::NotAUnit(f.to_string()));
    }
    if r.is_zero_ring() {
        return Ok(Poly::zero(r));
    }
    let c0 = r.inverse(&f.coeff(0)).expect("constant term is a unit");
    let mut v = Poly::constant(r, c0);
    let deg = f.deg0();
    if deg == 0 {
        return Ok(v);
    }
    let target = r.nilpotency_bound() as usize * deg + 1;
    let two = Poly::constant(r, r.from_i64(2));
    let one = Poly::one(r);
    let mut prec = 1;
    loop {
        let vf = v.mul(f);
        if vf == one {
            return Ok(v);
        }
        if prec >= target {
            break;
        }
        prec = (2 * prec).min(target);
        v = v.mul(&two.sub(&vf.truncate(prec))).truncate(prec);
    }
    Err(Error::Internal("unit inversion did not converge".into()))
}

/// Inverse of the unit `u` modulo `f` (invertible leading coefficient),
/// reduced to degree below `deg f`.
pub fn invert_mod<R: PrincipalRing>(u: &Poly<R>, f: &Poly<R>) -> Result<Poly<R>> {
    let r = f.ring();
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !r.is_unit(&f.lc()) {
        return Err(Error::NonInvertibleLeadingCoefficient);
    }
    if !u.is_unit() {
        return Err(Error::NotAUnit(u.to_string()));
    }
    let m = f.deg0();
    if m == 0 || r.is_zero_ring() {
        return Ok(Poly::zero(r));
    }
    let two = Poly::constant(r, r.from_i64(2));
    let one = Poly::one(r);
    let c0 = r.inverse(&u.coeff(0)).expect("constant term is a unit");
    let mut v = Poly::constant(r, c0);
    let mut prec = 1;
    while prec < m {
        prec = (2 * prec).min(m);
        let w = v.mul(u).truncate(prec);
        v = v.mul(&two.sub(&w)).truncate(prec);
    }
    v = v.rem(f)?;
    let rounds = ceil_log2(r.nilpotency_bound() as u64) + 4;
    for _ in 0..=rounds {
        let w = v.mul(u).rem(f)?;
        if w == one {
            return Ok(v);
        }
        v = v.mul(&two.sub(&w)).rem(f)?;
    }
    Err(Error::Internal("modular inversion did not converge".into()))
}

/// Division with remainder by a primitive non-constant `g`, splitting the
/// ring where the pivot of `g` is a zero divisor.
pub fn divrem_primitive<R: PrincipalRing>(f: &Poly<R>, g: &Poly<R>) -> Result<(Poly<R>, Poly<R>)> {
    if g.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if !g.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    divrem_primitive_inner(f, g)
}

fn divrem_primitive_inner<R: PrincipalRing>(f: &Poly<R>, g: &Poly<R>) -> Result<(Poly<R>, Poly<R>)> {
    let r = f.ring();
    if r.is_zero_ring() {
        return Ok((Poly::zero(r), Poly::zero(r)));
    }
    match pivot(g) {
        Pivot::Unit(_) => {
            let ff = fun_factor(g)?;
            let (q0, rem) = f.divrem(&ff.gtilde)?;
            Ok((q0.mul(&invert_unit(&ff.u)?), rem))
        }
        Pivot::Split(c) => {
            let (r1, r2) = r.split(&c)?;
            let (q1, s1) = divrem_primitive_inner(&f.project(&r1), &g.project(&r1))?;
            let (q2, s2) = divrem_primitive_inner(&f.project(&r2), &g.project(&r2))?;
            Ok((Poly::crt(r, (&r1, &r2), &q1, &q2)?, Poly::crt(r, (&r1, &r2), &s1, &s2)?))
        }
        Pivot::AllNilpotent => Err(Error::NotPrimitive),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Zn;

    fn z(n: u64) -> Zn {
        Zn::from_u64(n).unwrap()
    }

    fn p(r: &Zn, c: &[i64]) -> Poly<Zn> {
        Poly::from_i64s(r, c)
    }

    #[test]
    fn fun_factor_example() {
        let r = z(8);
        let ff = fun_factor(&p(&r, &[1, 0, 0, 1, 0, 2])).unwrap();
        assert_eq!(ff.u, p(&r, &[1, 4, 2]));
        assert_eq!(ff.gtilde, p(&r, &[1, 4, 6, 1]));
        assert_eq!(ff.k, 3);
    }

    #[test]
    fn fun_factor_monic_and_small() {
        let r = z(8);
        let f = p(&r, &[3, 5, 1]);
        let ff = fun_factor(&f).unwrap();
        assert_eq!((ff.u, ff.gtilde), (Poly::one(&r), f));
        let r = z(4);
        let f = p(&r, &[3, 1, 0, 2]);
        let ff = fun_factor(&f).unwrap();
        assert_eq!(ff.k, 1);
        assert!(ff.gtilde.is_monic());
        assert!(ff.u.is_unit());
        assert_eq!(ff.u.mul(&ff.gtilde), f);
    }

    #[test]
    fn fun_factor_needs_split() {
        let r = z(12);
        assert_eq!(fun_factor(&p(&r, &[0, 1, 4])), Err(Error::NeedsSplit("4".into())));
        assert_eq!(fun_factor(&p(&r, &[6, 6])), Err(Error::NotPrimitive));
    }

    #[test]
    fn invert_unit_examples() {
        let r = z(8);
        assert_eq!(invert_unit(&p(&r, &[1, 6])).unwrap(), p(&r, &[1, 2, 4]));
        assert_eq!(invert_unit(&p(&r, &[3])).unwrap(), p(&r, &[3]));
        let r = z(4);
        let f = p(&r, &[3, 2]);
        assert_eq!(f.mul(&invert_unit(&f).unwrap()), Poly::one(&r));
        assert!(matches!(invert_unit(&p(&r, &[2, 1])), Err(Error::NotAUnit(_))));
    }

    #[test]
    fn invert_mod_examples() {
        let r = z(8);
        let f = p(&r, &[0, 0, 0, 1]);
        assert_eq!(invert_mod(&Poly::one(&r), &f).unwrap(), Poly::one(&r));
        assert_eq!(invert_mod(&p(&r, &[1, 6]), &f).unwrap(), p(&r, &[1, 2, 4]));
        let r = z(4);
        let (u, f) = (p(&r, &[1, 2]), p(&r, &[1, 1, 1]));
        let v = invert_mod(&u, &f).unwrap();
        assert!(v.deg0() < 2);
        assert_eq!(v.mul(&u).rem(&f).unwrap(), Poly::one(&r));
    }

    #[test]
    fn divrem_primitive_examples() {
        let r = z(12);
        let (f, g) = (p(&r, &[0, 0, 0, 1]), p(&r, &[0, 1, 4]));
        let (q, rem) = divrem_primitive(&f, &g).unwrap();
        assert_eq!(q.mul(&g).add(&rem), f);
        assert!(rem.degree().is_none_or(|d| d < 2));
        let r = z(8);
        let (f, g) = (p(&r, &[0, 0, 0, 0, 1]), p(&r, &[1, 1, 0, 2]));
        let (q, rem) = divrem_primitive(&f, &g).unwrap();
        assert_eq!(q.mul(&g).add(&rem), f);
        assert!(rem.degree().is_none_or(|d| d < 3));
        let g = p(&r, &[5, 0, 1]);
        assert_eq!(divrem_primitive(&f, &g).unwrap(), f.divrem(&g).unwrap());
    }
}
