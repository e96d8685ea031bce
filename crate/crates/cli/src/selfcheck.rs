//! Oracle-equivalence checks at fixed seeds.

use artres::bivariate::res_y;
use artres::linalg::{det, sylvester};
use artres::numberfield::{ideal_min, ideal_norm};
use artres::oracle::{bivariate_sylvester_det, ideal_hnf, rres_extended_degree};
use artres::padic::{padic_gcd, PadicCtx};
use artres::poly::Poly;
use artres::resultant::{res, rres, rres_bezout};
use artres::ring::{PrincipalRing, Zn};
use artres::sample::{
    planted_gcd_instance, random_bipoly, random_modulus, random_monogenic_field, random_normal_ideal, random_poly,
    ModulusClass,
};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Suite {
    pub name: &'static str,
    pub cases: usize,
    check: fn(&mut ChaCha8Rng) -> bool,
}

pub const SUITES: [Suite; 5] = [
    Suite { name: "res-vs-determinant", cases: 1000, check: res_vs_det },
    Suite { name: "rres-vs-howell", cases: 400, check: rres_vs_howell },
    Suite { name: "bivariate-vs-cofactor", cases: 100, check: bivariate_vs_cofactor },
    Suite { name: "padic-planted", cases: 300, check: padic_planted },
    Suite { name: "number-field-vs-hnf", cases: 100, check: number_field_vs_hnf },
];

pub struct SuiteResult {
    pub name: &'static str,
    pub passed: usize,
    pub total: usize,
    /// Seeds of the failing cases.
    pub failing: Vec<u64>,
}

/// Seed of case `i` of suite `s` under the base seed.
pub fn case_seed(base: u64, s: usize, i: usize) -> u64 {
    base.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(((s as u64) << 32) | i as u64)
}

pub fn run(base: u64) -> Vec<SuiteResult> {
    SUITES
        .iter()
        .enumerate()
        .map(|(s, suite)| {
            let failing: Vec<u64> = (0..suite.cases)
                .map(|i| case_seed(base, s, i))
                .filter(|&seed| !(suite.check)(&mut ChaCha8Rng::seed_from_u64(seed)))
                .collect();
            SuiteResult { name: suite.name, passed: suite.cases - failing.len(), total: suite.cases, failing }
        })
        .collect()
}

fn zn(n: u64) -> Zn {
    Zn::new(BigUint::from(n)).expect("modulus >= 2")
}

fn random_class(rng: &mut ChaCha8Rng) -> ModulusClass {
    ModulusClass::ALL[rng.gen_range(0..ModulusClass::ALL.len())]
}

fn nonzero(rng: &mut ChaCha8Rng, r: &Zn, max_deg: usize) -> Poly<Zn> {
    loop {
        let f = random_poly(rng, r, max_deg);
        if !f.is_zero() {
            return f;
        }
    }
}

fn res_vs_det(rng: &mut ChaCha8Rng) -> bool {
    let class = random_class(rng);
    let r = zn(random_modulus(rng, class, 1_000_000));
    let (f, g) = (nonzero(rng, &r, 10), nonzero(rng, &r, 10));
    let want = sylvester(&f, &g).and_then(|s| det(&s));
    res(&f, &g).ok() == want.ok()
}

fn rres_vs_howell(rng: &mut ChaCha8Rng) -> bool {
    let class = random_class(rng);
    let r = zn(random_modulus(rng, class, 10_000));
    let (f, g) = (nonzero(rng, &r, 8), nonzero(rng, &r, 8));
    let want = r.ideal_gen(&rres_extended_degree(&f, &g));
    let got = rres(&f, &g).map(|v| r.ideal_gen(&v));
    let cert = rres_bezout(&f, &g);
    got.as_ref() == Ok(&want) && cert.is_ok_and(|c| c.verify(&f, &g) && r.ideal_gen(&c.r) == want)
}

fn bivariate_vs_cofactor(rng: &mut ChaCha8Rng) -> bool {
    let n = [12u64, 27, 35, 100][rng.gen_range(0..4)];
    let r = zn(n);
    let (f, g) = (random_bipoly(rng, &r, 3, 3), random_bipoly(rng, &r, 3, 3));
    if f.is_zero() || g.is_zero() {
        return true;
    }
    res_y(&f, &g).is_ok_and(|v| v == bivariate_sylvester_det(&f, &g))
}

fn padic_planted(rng: &mut ChaCha8Rng) -> bool {
    let p = [2u64, 3, 5][rng.gen_range(0..3)];
    let k = rng.gen_range(1..=10);
    let (f, g, d) = planted_gcd_instance(rng, p, k);
    let Ok(ctx) = PadicCtx::new(p, k) else { return false };
    padic_gcd(&ctx, &f, &g).is_ok_and(|out| out.delta == 0 && out.gcd == d.scale(&out.gcd.lc()))
}

fn number_field_vs_hnf(rng: &mut ChaCha8Rng) -> bool {
    let k = random_monogenic_field(rng);
    let ideal = random_normal_ideal(rng, &k);
    let want = ideal_hnf(&k, &ideal.a, &ideal.alpha);
    match (ideal_norm(&k, &ideal), ideal_min(&k, &ideal)) {
        (Ok(n), Ok(m)) => (n, m) == want,
        _ => false,
    }
}
