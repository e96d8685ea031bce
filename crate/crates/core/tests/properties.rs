//! Randomized invariants over small rings.

use artres::linalg::{det, howell, in_row_span, sylvester, Matrix};
use artres::padic::{divides_at_precision, padic_gcd, PadicCtx};
use artres::poly::{divrem_primitive, fun_factor, invert_unit, Poly};
use artres::resultant::{res, res_ideal, rres, rres_bezout};
use artres::ring::{sign, PrincipalRing, Zn};
use artres::text::{format_poly, parse_poly};
use artres::Error;
use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;

const MODULI: [u64; 10] = [2, 4, 6, 8, 9, 12, 25, 30, 36, 49];

fn ring() -> impl Strategy<Value = Zn> {
    prop::sample::select(MODULI.to_vec()).prop_map(|n| Zn::new(BigUint::from(n)).unwrap())
}

fn poly(r: &Zn, max_len: usize) -> impl Strategy<Value = Poly<Zn>> {
    let r = r.clone();
    prop::collection::vec(0i64..1000, 1..=max_len).prop_map(move |c| Poly::from_i64s(&r, &c))
}

fn pair(max_len: usize) -> impl Strategy<Value = (Poly<Zn>, Poly<Zn>)> {
    ring()
        .prop_flat_map(move |r| (poly(&r, max_len), poly(&r, max_len)))
        .prop_filter("nonzero", |(f, g)| !f.is_zero() && !g.is_zero())
}

/// `a` lies in the ideal generated by `b` in `Z/n`.
fn in_ideal(r: &Zn, a: &BigUint, b: &BigUint) -> bool {
    let g = r.ideal_gen(b);
    let g = if g.is_zero() { r.modulus().clone() } else { g };
    (a % g).is_zero()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn resultant_is_sylvester_determinant((f, g) in pair(6)) {
        prop_assert_eq!(res(&f, &g).unwrap(), det(&sylvester(&f, &g).unwrap()).unwrap());
    }

    #[test]
    fn resultant_ideal_matches_resultant((f, g) in pair(6)) {
        let r = f.ring();
        prop_assert_eq!(res_ideal(&f, &g).unwrap(), r.ideal_gen(&res(&f, &g).unwrap()));
    }

    #[test]
    fn swap_changes_sign_by_degree_product((f, g) in pair(6)) {
        let r = f.ring();
        let s = sign(r, (f.deg0() * g.deg0()) as u64);
        prop_assert_eq!(res(&g, &f).unwrap(), r.mul(&s, &res(&f, &g).unwrap()));
    }

    #[test]
    fn resultant_lies_in_reduced_resultant((f, g) in pair(6)) {
        // the empty Sylvester matrix of two constants has determinant 1
        prop_assume!(f.deg0() + g.deg0() > 0);
        let r = f.ring();
        prop_assert!(in_ideal(r, &res(&f, &g).unwrap(), &rres(&f, &g).unwrap()));
    }

    #[test]
    fn reduced_resultant_is_symmetric((f, g) in pair(6)) {
        prop_assert_eq!(rres(&f, &g).unwrap(), rres(&g, &f).unwrap());
    }

    #[test]
    fn bezout_certificate_recombines((f, g) in pair(6)) {
        let cert = rres_bezout(&f, &g).unwrap();
        prop_assert!(cert.verify(&f, &g));
        prop_assert_eq!(cert.r, rres(&f, &g).unwrap());
    }

    #[test]
    fn fun_factor_is_unit_times_monic(f in ring().prop_flat_map(|r| poly(&r, 6))) {
        match fun_factor(&f) {
            Ok(ff) => {
                prop_assert!(ff.gtilde.is_monic());
                prop_assert!(ff.u.is_unit());
                prop_assert_eq!(ff.gtilde.deg0(), ff.k);
                prop_assert_eq!(ff.u.mul(&ff.gtilde), f);
            }
            Err(Error::NotPrimitive | Error::NeedsSplit(_) | Error::ZeroPolynomial) => {}
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn unit_inverse((r, c, tail) in (ring(), 0i64..1000, prop::collection::vec(0i64..1000, 0..5))) {
        // a unit constant plus a nilpotent tail is a unit of R[x]
        let unit = (1..).map(|k| c + k).find(|&x| r.is_unit(&r.from_i64(x))).unwrap();
        let n = r.modulus().to_u64().unwrap() as i64;
        let rad: i64 = (2..=n).filter(|p| n % p == 0 && (2..*p).all(|q| p % q != 0)).product();
        let mut coeffs = vec![unit];
        coeffs.extend(tail.iter().map(|t| t * rad));
        let f = Poly::from_i64s(&r, &coeffs);
        let inv = invert_unit(&f).unwrap();
        prop_assert_eq!(f.mul(&inv), Poly::one(&r));
    }

    #[test]
    fn primitive_division_reconstructs((f, g) in pair(7)) {
        if g.is_primitive() && !g.is_constant() {
            let (q, rem) = divrem_primitive(&f, &g).unwrap();
            prop_assert_eq!(q.mul(&g).add(&rem), f);
            prop_assert!(rem.is_zero() || rem.deg0() < g.deg0());
        }
    }

    #[test]
    fn howell_form_is_stable_and_spans(
        (r, rows) in ring().prop_flat_map(|r| (Just(r), prop::collection::vec(prop::collection::vec(0i64..100, 3), 1..5)))
    ) {
        let slices: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let m = Matrix::from_i64_rows(&r, &slices);
        let h = howell(&m);
        prop_assert_eq!(howell(&h), h.clone());
        for row in m.row_vecs() {
            prop_assert!(in_row_span(&h, &row));
        }
        for row in h.row_vecs() {
            prop_assert!(in_row_span(&howell(&m), &row));
        }
    }

    #[test]
    fn polynomial_text_round_trip(f in ring().prop_flat_map(|r| poly(&r, 8))) {
        prop_assert_eq!(parse_poly(f.ring(), &format_poly(&f)).unwrap(), f);
    }

    #[test]
    fn padic_gcd_divides_both(
        (p, k, a, b) in (prop::sample::select(vec![2u64, 3, 5]), 1u32..6,
                         prop::collection::vec(0i64..10_000, 1..6), prop::collection::vec(0i64..10_000, 1..6))
    ) {
        let ctx = PadicCtx::new(p, k).unwrap();
        let (f, g) = (Poly::from_i64s(ctx.ring(), &a), Poly::from_i64s(ctx.ring(), &b));
        match padic_gcd(&ctx, &f, &g) {
            Ok(out) => {
                let j = k - out.delta;
                prop_assert!(divides_at_precision(p, &out.gcd, &f, j));
                prop_assert!(divides_at_precision(p, &out.gcd, &g, j));
            }
            Err(Error::InsufficientPrecision { .. }) => {}
            Err(Error::ZeroPolynomial) => prop_assert!(f.is_zero() && g.is_zero()),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }
}
