use crate::error::Result;
use crate::poly::{fun_factor, pivot, Pivot, Poly};
use crate::ring::PrincipalRing;

/// Outcome of reducing a pair of polynomials to primitive ones.
#[derive(Debug, Clone, PartialEq)]
pub enum PpaOutcome<R: PrincipalRing> {
    /// A splitting element of the ring was found.
    Split(R::Elem),
    /// `rres(f, g) = c * rres(f1, g1)`, where `f1`, `g1` are primitive over
    /// `ring = R/Ann(c)`.
    Reduced {
        c: R::Elem,
        ring: R,
        f: Poly<R>,
        g: Poly<R>,
    },
}

/// `f = c * h` with `h` over `R/Ann(c)`.
pub(crate) fn divide_content<R: PrincipalRing>(f: &Poly<R>, c: &R::Elem) -> (R, Poly<R>) {
    let r = f.ring();
    let sub = r.ann_quotient(c);
    let h = f
        .divide_scalar(c)
        .expect("content divides every coefficient")
        .project(&sub);
    (sub, h)
}

/// Reduces `(f, g)` to a primitive pair, or finds a splitting element.
pub fn ppa<R: PrincipalRing>(f: &Poly<R>, g: &Poly<R>) -> Result<PpaOutcome<R>> {
    let r = f.ring();
    let (cf, cg) = (f.content(), g.content());
    if r.is_unit(&cf) && r.is_unit(&cg) {
        return Ok(PpaOutcome::Reduced { c: r.one(), ring: r.clone(), f: f.clone(), g: g.clone() });
    }
    for c in [&cf, &cg] {
        if r.is_splitting(c) {
            return Ok(PpaOutcome::Split(c.clone()));
        }
    }
    if !r.is_unit(&cf) && !r.is_unit(&cg) {
        let d = r.ideal_gcd(&cf, &cg);
        let (sub, f1) = divide_content(f, &d);
        let g1 = g.divide_scalar(&d).expect("gcd divides g").project(&sub);
        return Ok(match ppa(&f1, &g1)? {
            PpaOutcome::Split(a) => PpaOutcome::Split(r.lift(&a)),
            PpaOutcome::Reduced { c, ring, f, g } => PpaOutcome::Reduced {
                c: r.ideal_gen(&r.mul(&d, &r.lift(&c))),
                ring,
                f,
                g,
            },
        });
    }
    let (nil, prim, c) = if r.is_unit(&cf) { (g, f, cg) } else { (f, g, cf) };
    match pivot(prim) {
        // a unit polynomial generates the unit ideal
        Pivot::Unit(0) => Ok(PpaOutcome::Reduced { c: r.one(), ring: r.clone(), f: Poly::one(r), g: Poly::one(r) }),
        Pivot::Unit(_) => {
            let monic = fun_factor(prim)?.gtilde;
            let (sub, h) = divide_content(nil, &c);
            let monic = monic.project(&sub);
            Ok(PpaOutcome::Reduced { c, ring: sub, f: h, g: monic })
        }
        Pivot::Split(a) => Ok(PpaOutcome::Split(a)),
        Pivot::AllNilpotent => unreachable!("primitive polynomial has a non-nilpotent coefficient"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Zn;

    fn p(r: &Zn, c: &[i64]) -> Poly<Zn> {
        Poly::from_i64s(r, c)
    }

    #[test]
    fn primitive_pair_is_unchanged() {
        let r = Zn::from_u64(12).unwrap();
        let (f, g) = (p(&r, &[3, 2, 1]), p(&r, &[1, 0, 1]));
        assert_eq!(
            ppa(&f, &g).unwrap(),
            PpaOutcome::Reduced { c: r.one(), ring: r.clone(), f, g }
        );
    }

    #[test]
    fn splitting_content() {
        let r = Zn::from_u64(12).unwrap();
        assert_eq!(ppa(&p(&r, &[2, 2]), &p(&r, &[1, 0, 1])).unwrap(), PpaOutcome::Split(r.elem(2)));
    }

    #[test]
    fn both_nilpotent() {
        let r = Zn::from_u64(4).unwrap();
        let s = Zn::from_u64(2).unwrap();
        assert_eq!(
            ppa(&p(&r, &[2, 0, 2]), &p(&r, &[2, 2])).unwrap(),
            PpaOutcome::Reduced { c: r.elem(2), ring: s.clone(), f: p(&s, &[1, 0, 1]), g: p(&s, &[1, 1]) }
        );
    }

    #[test]
    fn nilpotent_against_primitive() {
        let r = Zn::from_u64(8).unwrap();
        let out = ppa(&p(&r, &[2, 4]), &p(&r, &[1, 1, 2])).unwrap();
        let PpaOutcome::Reduced { c, ring, f, g } = out else { panic!("expected reduction") };
        assert_eq!(c, r.elem(2));
        assert_eq!(ring, Zn::from_u64(4).unwrap());
        assert!(f.is_primitive() && g.is_monic());
    }

    #[test]
    fn nilpotent_against_unit() {
        let r = Zn::from_u64(125).unwrap();
        let out = ppa(&p(&r, &[5, 10]), &p(&r, &[82, 45])).unwrap();
        assert_eq!(out, PpaOutcome::Reduced { c: r.one(), ring: r.clone(), f: Poly::one(&r), g: Poly::one(&r) });
    }
}
