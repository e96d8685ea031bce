//! Polynomials over a complete discrete valuation ring at fixed precision,
//! modelled as `Z/p^k`: unit × monic factorization and greatest common
//! divisors with explicit precision-loss accounting.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{fun_factor, Poly};
use crate::resultant::res_ideal;
use crate::ring::{is_prime_u64, PrincipalRing, Zn};

/// `Z/p^k` viewed as the `p`-adic integers at precision `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicCtx {
    p: u64,
    k: u32,
    ring: Zn,
}

impl PadicCtx {
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(Error::InvalidRing("precision must be at least 1".into()));
        }
        let ring = Zn::new(BigUint::from(p).pow(k))?;
        Ok(PadicCtx { p, k, ring })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.k
    }

    /// The residue ring `Z/p^k`.
    pub fn ring(&self) -> &Zn {
        &self.ring
    }

    /// The residue ring at precision `j`.
    pub fn ring_at(&self, j: u32) -> Zn {
        Zn::new(BigUint::from(self.p).pow(j)).expect("positive modulus")
    }

    /// Largest `i <= precision` with `p^i | a`; an exact zero reports the
    /// precision itself.
    pub fn valuation(&self, ring: &Zn, a: &BigUint) -> u32 {
        valuation(self.p, ring, a)
    }

    /// Minimum valuation of the coefficients of `f`.
    pub fn content_valuation(&self, f: &Poly<Zn>) -> u32 {
        content_valuation(self.p, f)
    }
}

fn precision_of(p: u64, ring: &Zn) -> u32 {
    let pb = BigUint::from(p);
    let mut m = ring.modulus().clone();
    let mut j = 0;
    while m > BigUint::from(1u32) {
        m /= &pb;
        j += 1;
    }
    j
}

fn valuation(p: u64, ring: &Zn, a: &BigUint) -> u32 {
    let cap = precision_of(p, ring);
    if a.is_zero() {
        return cap;
    }
    let pb = BigUint::from(p);
    let mut a = a.clone();
    let mut v = 0;
    while v < cap && (&a % &pb).is_zero() {
        a /= &pb;
        v += 1;
    }
    v
}

fn content_valuation(p: u64, f: &Poly<Zn>) -> u32 {
    let ring = f.ring();
    f.coeffs()
        .iter()
        .map(|c| valuation(p, ring, c))
        .min()
        .unwrap_or_else(|| precision_of(p, ring))
}

/// `f = f1 * f2` with `f1` congruent to a unit constant modulo `p` and `f2`
/// monic of degree equal to the highest index of a unit coefficient.
pub fn fun_factor_padic(f: &Poly<Zn>) -> Result<(Poly<Zn>, Poly<Zn>)> {
    if !f.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    let ff = fun_factor(f)?;
    Ok((ff.u, ff.gtilde))
}

/// Result of [`padic_gcd`].
#[derive(Debug, Clone, PartialEq)]
pub struct PadicGcd {
    /// The gcd, over `Z/p^(k - delta)`.
    pub gcd: Poly<Zn>,
    /// Digits of precision lost along the way.
    pub delta: u32,
    /// Whether `gcd` is `p^v` times a monic polynomial.
    pub normalized: bool,
}

/// Greatest common divisor of `f` and `g` over `Z/p^k`. The result divides
/// both inputs modulo `p^(k - delta)`.
pub fn padic_gcd(ctx: &PadicCtx, f: &Poly<Zn>, g: &Poly<Zn>) -> Result<PadicGcd> {
    if f.ring() != ctx.ring() || g.ring() != ctx.ring() {
        return Err(Error::ContextMismatch);
    }
    if f.is_zero() && g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (d, prec) = gcd_rec(ctx.p, f.clone(), g.clone(), ctx.k)?;
    let (gcd, normalized) = normalize(ctx.p, &d, prec);
    Ok(PadicGcd { gcd, delta: ctx.k - prec, normalized })
}

fn p_power(p: u64, ring: &Zn, v: u32) -> BigUint {
    ring.from_int(&BigUint::from(p).pow(v).into())
}

fn insufficient(p: u64, ring: &Zn, loss: u32) -> Error {
    let precision = precision_of(p, ring);
    Error::InsufficientPrecision { loss, precision }
}

/// Returns the gcd together with the precision at which it is known.
fn gcd_rec(p: u64, mut f: Poly<Zn>, mut g: Poly<Zn>, prec: u32) -> Result<(Poly<Zn>, u32)> {
    loop {
        let ring = f.ring().clone();
        if g.is_zero() {
            return Ok((f, prec));
        }
        if f.is_zero() {
            return Ok((g, prec));
        }
        let (vf, vg) = (content_valuation(p, &f), content_valuation(p, &g));
        if f.is_constant() || g.is_constant() {
            let v = if f.is_constant() { vf.min(vg) } else { vg.min(vf) };
            return Ok((Poly::constant(&ring, p_power(p, &ring, v)), prec));
        }
        if vf > 0 || vg > 0 {
            let loss = vf.max(vg);
            if loss >= prec {
                return Err(insufficient(p, &ring, loss));
            }
            let sub = Zn::new(BigUint::from(p).pow(prec - loss))?;
            let ff = f.divide_scalar(&p_power(p, &ring, vf)).expect("content divides").project(&sub);
            let gg = g.divide_scalar(&p_power(p, &ring, vg)).expect("content divides").project(&sub);
            let (h, hp) = gcd_rec(p, ff, gg, prec - loss)?;
            let shift = vf.min(vg);
            let out_prec = (hp + shift).min(prec);
            let out_ring = Zn::new(BigUint::from(p).pow(out_prec))?;
            let lifted = h.lift_to(&ring).project(&out_ring);
            return Ok((lifted.scale(&p_power(p, &out_ring, shift)), out_prec));
        }
        if f.deg0() < g.deg0() {
            std::mem::swap(&mut f, &mut g);
        }
        if !ring.is_unit(&g.lc()) {
            let (g1, g2) = fun_factor_padic(&g)?;
            if ring.is_unit(&f.lc()) {
                // f and g1 are coprime
                g = g2;
            } else {
                let (f1, f2) = fun_factor_padic(&f)?;
                let (a, pa) = gcd_rec(p, f2, g2, prec)?;
                let (b, pb) = unit_like_gcd(p, &f1, &g1, prec)?;
                let out = pa.min(pb);
                let out_ring = Zn::new(BigUint::from(p).pow(out))?;
                let a = a.lift_to(&ring).project(&out_ring);
                let b = b.lift_to(&ring).project(&out_ring);
                return Ok((a.mul(&b), out));
            }
        }
        if g.is_constant() {
            return Ok((Poly::one(&ring), prec));
        }
        let g_monic = g.scale(&ring.inverse(&g.lc()).expect("unit leading coefficient"));
        let r = f.rem(&g_monic)?;
        f = g_monic;
        g = r;
    }
}

/// gcd of two polynomials congruent to unit constants modulo `p`, through
/// their reciprocals.
fn unit_like_gcd(p: u64, f1: &Poly<Zn>, g1: &Poly<Zn>, prec: u32) -> Result<(Poly<Zn>, u32)> {
    let ring = f1.ring();
    if f1.is_constant() || g1.is_constant() || ring.is_unit(&res_ideal(f1, g1)?) {
        return Ok((Poly::one(ring), prec));
    }
    let (h, hp) = gcd_rec(p, f1.reciprocal()?, g1.reciprocal()?, prec)?;
    Ok((h.reciprocal()?, hp))
}

/// Rescales `d` to `p^v` times a monic polynomial when possible.
fn normalize(p: u64, d: &Poly<Zn>, prec: u32) -> (Poly<Zn>, bool) {
    let ring = d.ring();
    if d.is_zero() {
        return (d.clone(), true);
    }
    let lc = d.lc();
    if let Some(inv) = ring.inverse(&lc) {
        return (d.scale(&inv), true);
    }
    let v = valuation(p, ring, &lc);
    if content_valuation(p, d) != v || v >= prec {
        return (d.clone(), false);
    }
    let sub = Zn::new(BigUint::from(p).pow(prec - v)).expect("positive modulus");
    let h = d.divide_scalar(&p_power(p, ring, v)).expect("content divides").project(&sub);
    let h = h.scale(&sub.inverse(&h.lc()).expect("unit after removing content"));
    (h.lift_to(ring).scale(&p_power(p, ring, v)), true)
}

/// Whether `d` divides `f` over `Z/p^j`; both rings must be multiples of
/// `p^j`.
pub fn divides_at_precision(p: u64, d: &Poly<Zn>, f: &Poly<Zn>, j: u32) -> bool {
    if j == 0 {
        return true;
    }
    let ring = Zn::new(BigUint::from(p).pow(j)).expect("positive modulus");
    let (d, f) = (d.project(&ring), f.project(&ring));
    if d.is_zero() {
        return f.is_zero();
    }
    let v = content_valuation(p, &d);
    let pv = p_power(p, &ring, v);
    // d = p^v h with h primitive; h = unit * monic, so d | f iff p^v | f and
    // the monic part divides f / p^v modulo p^(j - v)
    let Some(fq) = f.divide_scalar(&pv) else { return false };
    let sub = Zn::new(BigUint::from(p).pow(j - v)).expect("positive modulus");
    let h = d.divide_scalar(&pv).expect("content divides").project(&sub);
    match fun_factor(&h) {
        Ok(ff) => fq.project(&sub).rem(&ff.gtilde).is_ok_and(|r| r.is_zero()),
        Err(_) => false,
    }
}

/// `gcd` of the coefficients' `p`-parts, as a power of `p`.
pub fn content_gcd(p: u64, f: &Poly<Zn>) -> BigUint {
    BigUint::from(p).pow(content_valuation(p, f)).gcd(f.ring().modulus())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(r: &Zn, c: &[i64]) -> Poly<Zn> {
        Poly::from_i64s(r, c)
    }

    #[test]
    fn valuations() {
        let ctx = PadicCtx::new(3, 4).unwrap();
        let r = ctx.ring();
        assert_eq!(ctx.valuation(r, &BigUint::from(18u32)), 2);
        assert_eq!(ctx.valuation(r, &BigUint::from(0u32)), 4);
        assert_eq!(ctx.content_valuation(&p(r, &[9, 27])), 2);
        assert!(PadicCtx::new(4, 2).is_err());
        assert!(PadicCtx::new(5, 0).is_err());
    }

    #[test]
    fn unit_times_monic() {
        let ctx = PadicCtx::new(2, 3).unwrap();
        let r = ctx.ring();
        let (f1, f2) = fun_factor_padic(&p(r, &[1, 0, 0, 1, 0, 2])).unwrap();
        assert_eq!(f1, p(r, &[1, 4, 2]));
        assert_eq!(f2, p(r, &[1, 4, 6, 1]));
        let f = p(r, &[3, 1, 1]);
        assert_eq!(fun_factor_padic(&f).unwrap(), (Poly::one(r), f));
        assert!(fun_factor_padic(&p(r, &[2, 4])).is_err());

        let ctx = PadicCtx::new(3, 2).unwrap();
        let r = ctx.ring();
        let f = p(r, &[2, 5, 1, 3, 6]);
        let (f1, f2) = fun_factor_padic(&f).unwrap();
        assert_eq!(f1.mul(&f2), f);
        assert!(f2.is_monic() && f2.deg0() == 2);
        assert!(r.is_unit(&res_ideal(&f1, &f2).unwrap()));
    }

    #[test]
    fn trivial_cases() {
        let ctx = PadicCtx::new(5, 3).unwrap();
        let r = ctx.ring();
        let f = p(r, &[2, 3, 2]);
        let out = padic_gcd(&ctx, &f, &Poly::zero(r)).unwrap();
        assert_eq!(out.gcd, f.scale(&r.inverse(&r.elem(2)).unwrap()));
        assert_eq!(out.delta, 0);
        let out = padic_gcd(&ctx, &p(r, &[5, 10]), &p(r, &[25])).unwrap();
        assert_eq!(out.gcd, p(r, &[5]));
    }

    #[test]
    fn common_linear_factor() {
        let ctx = PadicCtx::new(5, 6).unwrap();
        let r = ctx.ring();
        let d = p(r, &[-1, 1]);
        let f = d.mul(&p(r, &[1, 0, 1]));
        let g = d.mul(&p(r, &[2, 1]));
        let out = padic_gcd(&ctx, &f, &g).unwrap();
        // the cofactors have resultant 5, so one digit is spent on the
        // remainder 5(x - 1)
        assert_eq!(out.delta, 1);
        let prec = ctx.precision() - out.delta;
        assert_eq!(out.gcd, d.project(&ctx.ring_at(prec)));
        assert!(out.normalized);
    }

    #[test]
    fn planted_factor_with_coprime_cofactors() {
        let ctx = PadicCtx::new(2, 8).unwrap();
        let r = ctx.ring();
        let d = p(r, &[2, 1]);
        let f = d.mul(&p(r, &[1, 1, 1]));
        let g = d.mul(&p(r, &[1, 0, 1, 1]));
        let out = padic_gcd(&ctx, &f, &g).unwrap();
        assert_eq!(out.delta, 0);
        assert_eq!(out.gcd, d);
        // non-unit leading coefficients on both sides
        let f = d.mul(&p(r, &[1, 1, 2]));
        let g = d.mul(&p(r, &[1, 1, 1, 4]));
        let out = padic_gcd(&ctx, &f, &g).unwrap();
        assert_eq!(out.delta, 0);
        assert_eq!(out.gcd, d);
    }

    #[test]
    fn divisibility_contract() {
        let ctx = PadicCtx::new(3, 5).unwrap();
        let r = ctx.ring();
        let f = p(r, &[3, 1, 9, 3]);
        let g = p(r, &[1, 3, 0, 9, 6]);
        let out = padic_gcd(&ctx, &f, &g).unwrap();
        let j = ctx.precision() - out.delta;
        assert!(divides_at_precision(3, &out.gcd, &f, j));
        assert!(divides_at_precision(3, &out.gcd, &g, j));
    }
}
