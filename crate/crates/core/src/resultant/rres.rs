use super::ppa::{divide_content, ppa, PpaOutcome};
use crate::error::Result;
use crate::poly::{fun_factor, pivot, Pivot, Poly};
use crate::ring::PrincipalRing;

/// Splits along `a`, applies `op` on both factors and recombines.
fn on_split<R: PrincipalRing>(
    ring: &R,
    a: &R::Elem,
    op: impl Fn(&R) -> Result<R::Elem>,
) -> Result<R::Elem> {
    let (r1, r2) = ring.split(a)?;
    let (x1, x2) = (op(&r1)?, op(&r2)?);
    Ok(ring.ideal_gen(&ring.crt((&r1, &r2), &x1, &x2)?))
}

/// Canonical generator of `(f) ∩ R`.
pub fn contraction<R: PrincipalRing>(f: &Poly<R>) -> Result<R::Elem> {
    let r = f.ring();
    if r.is_zero_ring() || f.is_zero() {
        return Ok(r.zero());
    }
    if f.is_constant() {
        return Ok(r.ideal_gen(&f.coeff(0)));
    }
    let c = f.content();
    if r.is_splitting(&c) {
        return on_split(r, &c, |s| contraction(&f.project(s)));
    }
    if r.is_unit(&c) {
        return match pivot(f) {
            Pivot::Unit(0) => Ok(r.one()),
            Pivot::Unit(_) => Ok(r.zero()),
            Pivot::Split(a) => on_split(r, &a, |s| contraction(&f.project(s))),
            Pivot::AllNilpotent => unreachable!("primitive polynomial has a non-nilpotent coefficient"),
        };
    }
    let (_, h) = divide_content(f, &c);
    let inner = contraction(&h)?;
    Ok(r.ideal_gen(&r.mul(&c, &r.lift(&inner))))
}

/// Canonical generator of `(f, c) ∩ R` for a constant `c`.
fn rres_constant<R: PrincipalRing>(f: &Poly<R>, c: &R::Elem) -> Result<R::Elem> {
    let r = f.ring();
    let q = r.quotient(c);
    let inner = contraction(&f.project(&q))?;
    Ok(r.ideal_gcd(c, &r.lift(&inner)))
}

/// Canonical generator of the reduced resultant ideal `(f, g) ∩ R`.
pub fn rres<R: PrincipalRing>(f: &Poly<R>, g: &Poly<R>) -> Result<R::Elem> {
    let r = f.ring().clone();
    if r.is_zero_ring() {
        return Ok(r.zero());
    }
    let (mut f, mut g) = (f.clone(), g.clone());
    loop {
        if f.is_zero() {
            return contraction(&g);
        }
        if g.is_zero() {
            return contraction(&f);
        }
        if f.deg0() < g.deg0() {
            std::mem::swap(&mut f, &mut g);
        }
        if g.is_constant() {
            if f.is_constant() {
                return Ok(r.ideal_gcd(&f.coeff(0), &g.coeff(0)));
            }
            return rres_constant(&f, &g.coeff(0));
        }
        match ppa(&f, &g)? {
            PpaOutcome::Split(a) => {
                return on_split(&r, &a, |s| rres(&f.project(s), &g.project(s)));
            }
            PpaOutcome::Reduced { c, ring: _, f: f1, g: g1 } if !r.is_unit(&c) => {
                let inner = rres(&f1, &g1)?;
                return Ok(r.ideal_gen(&r.mul(&c, &r.lift(&inner))));
            }
            PpaOutcome::Reduced { f: f1, g: g1, .. } => {
                let (f1, g1) = if f1.deg0() >= g1.deg0() { (f1, g1) } else { (g1, f1) };
                if g1.is_constant() {
                    f = f1;
                    g = g1;
                    continue;
                }
                match pivot(&g1) {
                    Pivot::Unit(0) => return Ok(r.one()),
                    Pivot::Unit(_) => {
                        let monic = fun_factor(&g1)?.gtilde;
                        g = f1.rem(&monic)?;
                        f = monic;
                    }
                    Pivot::Split(a) => {
                        return on_split(&r, &a, |s| rres(&f1.project(s), &g1.project(s)));
                    }
                    Pivot::AllNilpotent => unreachable!("primitive polynomial has a non-nilpotent coefficient"),
                }
            }
        }
    }
}
