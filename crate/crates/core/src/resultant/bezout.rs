use super::ppa::divide_content;
use crate::error::{Error, Result};
use crate::poly::{fun_factor, invert_mod, invert_unit, pivot, Pivot, Poly};
use crate::ring::PrincipalRing;

/// `u f + v g = r`, where `(r)` is the reduced resultant ideal.
#[derive(Debug, Clone, PartialEq)]
pub struct BezoutCertificate<R: PrincipalRing> {
    pub r: R::Elem,
    pub u: Poly<R>,
    pub v: Poly<R>,
}

impl<R: PrincipalRing> BezoutCertificate<R> {
    /// Checks `u f + v g = r` by multiplying out.
    pub fn verify(&self, f: &Poly<R>, g: &Poly<R>) -> bool {
        let lhs = self.u.mul(f).add(&self.v.mul(g));
        lhs == Poly::constant(f.ring(), self.r.clone())
    }
}

type Triple<R> = (<R as PrincipalRing>::Elem, Poly<R>, Poly<R>);

/// Reduced resultant together with cofactors; `r` is the canonical generator.
pub fn rres_bezout<R: PrincipalRing>(f: &Poly<R>, g: &Poly<R>) -> Result<BezoutCertificate<R>> {
    let ring = f.ring();
    let (r, u, v) = bezout(f, g)?;
    let w = ring.unit_normalizer(&r);
    Ok(BezoutCertificate { r: ring.mul(&w, &r), u: u.scale(&w), v: v.scale(&w) })
}

fn split_bezout<R: PrincipalRing>(f: &Poly<R>, g: &Poly<R>, a: &R::Elem) -> Result<Triple<R>> {
    let ring = f.ring();
    let (r1, r2) = ring.split(a)?;
    let (x1, u1, v1) = bezout(&f.project(&r1), &g.project(&r1))?;
    let (x2, u2, v2) = bezout(&f.project(&r2), &g.project(&r2))?;
    let parts = (&r1, &r2);
    Ok((
        ring.crt(parts, &x1, &x2)?,
        Poly::crt(ring, parts, &u1, &u2)?,
        Poly::crt(ring, parts, &v1, &v2)?,
    ))
}

/// `(r, s)` with `s f = r` and `(r) = (f) ∩ R`.
fn contraction_bezout<R: PrincipalRing>(f: &Poly<R>) -> Result<(R::Elem, Poly<R>)> {
    let r = f.ring();
    if r.is_zero_ring() || f.is_zero() {
        return Ok((r.zero(), Poly::zero(r)));
    }
    if f.is_constant() {
        return Ok((f.coeff(0), Poly::one(r)));
    }
    let split = |a: &R::Elem| -> Result<(R::Elem, Poly<R>)> {
        let (r1, r2) = r.split(a)?;
        let (x1, s1) = contraction_bezout(&f.project(&r1))?;
        let (x2, s2) = contraction_bezout(&f.project(&r2))?;
        Ok((r.crt((&r1, &r2), &x1, &x2)?, Poly::crt(r, (&r1, &r2), &s1, &s2)?))
    };
    let c = f.content();
    if r.is_splitting(&c) {
        return split(&c);
    }
    if r.is_unit(&c) {
        return match pivot(f) {
            Pivot::Unit(0) => Ok((r.one(), invert_unit(f)?)),
            Pivot::Unit(_) => Ok((r.zero(), Poly::zero(r))),
            Pivot::Split(a) => split(&a),
            Pivot::AllNilpotent => unreachable!("primitive polynomial has a non-nilpotent coefficient"),
        };
    }
    let (_, h) = divide_content(f, &c);
    let (x, s) = contraction_bezout(&h)?;
    Ok((r.mul(&c, &r.lift(&x)), s.lift_to(r)))
}

/// Certificate for `(f, c)` with `c` constant and `f` non-constant.
fn constant_bezout<R: PrincipalRing>(f: &Poly<R>, c: &R::Elem) -> Result<Triple<R>> {
    let r = f.ring();
    let q = r.quotient(c);
    let (rb, sb) = contraction_bezout(&f.project(&q))?;
    let s = sb.lift_to(r);
    let rho = r.lift(&rb);
    let diff = s.mul(f).sub(&Poly::constant(r, rho.clone()));
    let w = diff
        .divide_scalar(c)
        .ok_or_else(|| Error::Internal("lifted contraction is not congruent modulo c".into()))?;
    let (x, alpha, beta) = r.gcd_bezout(&rho, c);
    let u = s.scale(&alpha);
    let v = Poly::constant(r, beta).sub(&w.scale(&alpha));
    Ok((x, u, v))
}

/// Certificate for `(nil, prim)`: `nil` has nilpotent content, `prim` is
/// primitive and non-constant.
fn mixed_bezout<R: PrincipalRing>(nil: &Poly<R>, prim: &Poly<R>) -> Result<Triple<R>> {
    let r = nil.ring();
    match pivot(prim) {
        Pivot::Split(a) => split_bezout(nil, prim, &a),
        Pivot::Unit(0) => Ok((r.one(), Poly::zero(r), invert_unit(prim)?)),
        Pivot::Unit(_) => {
            let ff = fun_factor(prim)?;
            let c = nil.content();
            let (sub, h) = divide_content(nil, &c);
            let (x, a, b) = bezout(&h, &ff.gtilde.project(&sub))?;
            let uinv = invert_unit(&ff.u)?;
            let v = b.lift_to(r).scale(&c).mul(&uinv);
            Ok((r.mul(&c, &r.lift(&x)), a.lift_to(r), v))
        }
        Pivot::AllNilpotent => unreachable!("primitive polynomial has a non-nilpotent coefficient"),
    }
}

fn bezout<R: PrincipalRing>(f: &Poly<R>, g: &Poly<R>) -> Result<Triple<R>> {
    let r = f.ring();
    if r.is_zero_ring() {
        return Ok((r.zero(), Poly::zero(r), Poly::zero(r)));
    }
    if f.deg0() < g.deg0() {
        let (x, u, v) = bezout(g, f)?;
        return Ok((x, v, u));
    }
    if g.is_zero() {
        let (x, s) = contraction_bezout(f)?;
        return Ok((x, s, Poly::zero(r)));
    }
    if g.is_constant() {
        let c = g.coeff(0);
        if f.is_constant() {
            let (x, s, t) = r.gcd_bezout(&f.coeff(0), &c);
            return Ok((x, Poly::constant(r, s), Poly::constant(r, t)));
        }
        return constant_bezout(f, &c);
    }
    let (cf, cg) = (f.content(), g.content());
    for c in [&cf, &cg] {
        if r.is_splitting(c) {
            return split_bezout(f, g, c);
        }
    }
    match (r.is_unit(&cf), r.is_unit(&cg)) {
        (true, true) => euclid_bezout(f, g),
        (false, false) => {
            let d = r.ideal_gcd(&cf, &cg);
            let (sub, f1) = divide_content(f, &d);
            let g1 = g.divide_scalar(&d).expect("gcd divides g").project(&sub);
            let (x, u, v) = bezout(&f1, &g1)?;
            Ok((r.mul(&d, &r.lift(&x)), u.lift_to(r), v.lift_to(r)))
        }
        (false, true) => mixed_bezout(f, g),
        (true, false) => {
            let (x, v, u) = mixed_bezout(g, f)?;
            Ok((x, u, v))
        }
    }
}

/// A polynomial with its cofactors with respect to the pair being reduced.
struct Row<R: PrincipalRing> {
    p: Poly<R>,
    a: Poly<R>,
    b: Poly<R>,
}

impl<R: PrincipalRing> Row<R> {
    fn combine(&self, s: &Poly<R>, other: &Row<R>, t: &Poly<R>) -> (Poly<R>, Poly<R>) {
        (s.mul(&self.a).add(&t.mul(&other.a)), s.mul(&self.b).add(&t.mul(&other.b)))
    }
}

/// Keeps cofactor degrees bounded by reducing modulo whichever of the
/// original polynomials has an invertible leading coefficient.
fn reduce_cofactors<R: PrincipalRing>(row: &mut Row<R>, f: &Poly<R>, g: &Poly<R>) -> Result<()> {
    let r = f.ring();
    let (big, small, a_first) = if !f.is_constant() && r.is_unit(&f.lc()) {
        (f, g, false)
    } else if !g.is_constant() && r.is_unit(&g.lc()) {
        (g, f, true)
    } else {
        return Ok(());
    };
    // With big = f: b <- b mod f, a <- (p - b g) / f.
    let keep = if a_first { &row.a } else { &row.b };
    if keep.deg0() < big.deg0() {
        return Ok(());
    }
    let reduced = keep.rem(big)?;
    let (quo, rem) = row.p.sub(&reduced.mul(small)).divrem(big)?;
    if !rem.is_zero() {
        return Err(Error::Internal("cofactor reduction is not exact".into()));
    }
    if a_first {
        row.a = reduced;
        row.b = quo;
    } else {
        row.b = reduced;
        row.a = quo;
    }
    Ok(())
}

/// Euclidean chain for a primitive pair, tracking cofactors.
fn euclid_bezout<R: PrincipalRing>(f0: &Poly<R>, g0: &Poly<R>) -> Result<Triple<R>> {
    let r = f0.ring();
    let one = Poly::one(r);
    let zero = Poly::zero(r);
    let mut x = Row { p: f0.clone(), a: one.clone(), b: zero.clone() };
    let mut y = Row { p: g0.clone(), a: zero, b: one };
    loop {
        if x.p.deg0() < y.p.deg0() {
            std::mem::swap(&mut x, &mut y);
        }
        let (f, g) = (&x.p, &y.p);
        let leave = g.is_constant() || !f.is_primitive() || !g.is_primitive();
        let sub = if leave {
            Some(bezout(f, g)?)
        } else {
            match pivot(g) {
                Pivot::Split(a) => Some(split_bezout(f, g, &a)?),
                Pivot::Unit(0) => {
                    let w = invert_unit(g)?;
                    Some((r.one(), zero_poly(r), w))
                }
                Pivot::Unit(_) => None,
                Pivot::AllNilpotent => unreachable!("primitive polynomial has a non-nilpotent coefficient"),
            }
        };
        if let Some((res, s, t)) = sub {
            let (u, v) = x.combine(&s, &y, &t);
            return Ok((res, u, v));
        }
        let ff = fun_factor(g)?;
        let gt = ff.gtilde;
        let (ga, gb) = if r.is_unit(&f.lc()) {
            let vinv = invert_mod(&ff.u, f)?;
            let (yq, rem) = gt.sub(&vinv.mul(g)).divrem(f)?;
            if !rem.is_zero() {
                return Err(Error::Internal("unit cofactor is not exact".into()));
            }
            y.combine(&vinv, &x, &yq)
        } else {
            let w = invert_unit(&ff.u)?;
            (w.mul(&y.a), w.mul(&y.b))
        };
        let (q, rem) = f.divrem(&gt)?;
        let mut new_x = Row { p: gt, a: ga, b: gb };
        let mut new_y = Row { p: rem, a: x.a.sub(&q.mul(&new_x.a)), b: x.b.sub(&q.mul(&new_x.b)) };
        reduce_cofactors(&mut new_x, f0, g0)?;
        reduce_cofactors(&mut new_y, f0, g0)?;
        x = new_x;
        y = new_y;
    }
}

fn zero_poly<R: PrincipalRing>(r: &R) -> Poly<R> {
    Poly::zero(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resultant::rres;
    use crate::ring::Zn;

    fn p(r: &Zn, c: &[i64]) -> Poly<Zn> {
        Poly::from_i64s(r, c)
    }

    fn check(n: u64, f: &[i64], g: &[i64]) -> BezoutCertificate<Zn> {
        let r = Zn::from_u64(n).unwrap();
        let (f, g) = (p(&r, f), p(&r, g));
        let cert = rres_bezout(&f, &g).unwrap();
        assert!(cert.verify(&f, &g), "{f} {g} {cert:?}");
        assert_eq!(cert.r, rres(&f, &g).unwrap(), "{f} {g}");
        cert
    }

    #[test]
    fn examples() {
        let cert = check(12, &[3, 2, 1], &[1, 0, 1]);
        assert_eq!(cert.r, 4u32.into());
        let cert = check(12, &[3, 2, 1], &[8]);
        assert_eq!(cert.r, 4u32.into());
        check(9, &[3, 0, 1], &[3, 3]);
        check(8, &[1, 2], &[4]);
        check(8, &[0, 2], &[4]);
        check(4, &[1, 0, 1], &[2, 2]);
        check(8, &[1, 3, 0, 2], &[5, 0, 4, 1]);
        check(36, &[6, 7, 0, 12], &[3, 4, 9]);
        check(12, &[0], &[3, 1]);
        check(12, &[4], &[6]);
    }
}
