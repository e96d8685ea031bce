//! Seeded random instances shared by the self-check, the benchmark and the
//! test suites.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::bivariate::BiPoly;
use crate::numberfield::{discriminant, FieldElem, Ideal2, NumberField};
use crate::poly::Poly;
use crate::resultant::res_ideal;
use crate::ring::{is_irreducible_mod_p, is_prime_u64, PrincipalRing, Zn};

/// Shape of a random modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModulusClass {
    Prime,
    PrimePower,
    Composite,
}

impl ModulusClass {
    pub const ALL: [ModulusClass; 3] = [ModulusClass::Prime, ModulusClass::PrimePower, ModulusClass::Composite];
}

/// Uniform prime in `[lo, hi]`; `hi` must be at least 2.
pub fn random_prime<G: Rng>(rng: &mut G, lo: u64, hi: u64) -> u64 {
    let lo = lo.max(2);
    loop {
        let c = rng.gen_range(lo..=hi);
        if is_prime_u64(c) {
            return c;
        }
    }
}

/// Random modulus in `[2, max]` of the given shape; `max >= 8`.
pub fn random_modulus<G: Rng>(rng: &mut G, class: ModulusClass, max: u64) -> u64 {
    match class {
        ModulusClass::Prime => random_prime(rng, 2, max),
        ModulusClass::PrimePower => loop {
            let p = random_prime(rng, 2, ((max as f64).sqrt() as u64).max(2));
            let mut q = p * p;
            while q <= max / p && rng.gen_bool(0.5) {
                q *= p;
            }
            if q <= max {
                return q;
            }
        },
        ModulusClass::Composite => loop {
            let c = rng.gen_range(4..=max);
            if !is_prime_u64(c) {
                return c;
            }
        },
    }
}

/// Random polynomial of degree at most `max_deg` with a nonzero leading
/// coefficient.
pub fn random_poly<G: Rng>(rng: &mut G, ring: &Zn, max_deg: usize) -> Poly<Zn> {
    let deg = rng.gen_range(0..=max_deg);
    random_poly_of_degree(rng, ring, deg)
}

/// Random polynomial of exactly the given degree (the zero ring aside).
pub fn random_poly_of_degree<G: Rng>(rng: &mut G, ring: &Zn, deg: usize) -> Poly<Zn> {
    let n = ring.modulus().to_u64().expect("modulus fits in 64 bits");
    let mut coeffs: Vec<BigUint> = (0..=deg).map(|_| BigUint::from(rng.gen_range(0..n))).collect();
    if n > 1 {
        coeffs[deg] = BigUint::from(rng.gen_range(1..n));
    }
    Poly::new(ring.clone(), coeffs)
}

/// Random polynomial whose coefficients are drawn from a small set, to make
/// zero divisors and nilpotents frequent.
pub fn random_sparse_poly<G: Rng>(rng: &mut G, ring: &Zn, max_deg: usize) -> Poly<Zn> {
    let n = ring.modulus().to_u64().expect("modulus fits in 64 bits");
    let divisors: Vec<u64> = (1..=n.min(10_000)).filter(|d| n % d == 0).collect();
    let deg = rng.gen_range(0..=max_deg);
    let coeffs = (0..=deg)
        .map(|_| {
            let d = divisors[rng.gen_range(0..divisors.len())];
            BigUint::from(d * rng.gen_range(0..n.div_ceil(d).max(1)) % n)
        })
        .collect();
    Poly::new(ring.clone(), coeffs)
}

/// Random bivariate polynomial with `deg_y <= max_dy` and `deg_x <= max_dx`.
pub fn random_bipoly<G: Rng>(rng: &mut G, ring: &Zn, max_dx: usize, max_dy: usize) -> BiPoly {
    let dy = rng.gen_range(0..=max_dy);
    let coeffs = (0..=dy).map(|_| random_poly(rng, ring, max_dx)).collect();
    BiPoly::new(ring, coeffs)
}

/// `(f, g, d)` with `f = d f1`, `g = d g1`, `d` monic and `(f1, g1) = (1)`
/// over `Z/p^k`, so that `gcd(f, g) = d` exactly.
pub fn planted_gcd_instance<G: Rng>(rng: &mut G, p: u64, k: u32) -> (Poly<Zn>, Poly<Zn>, Poly<Zn>) {
    let ring = Zn::new(BigUint::from(p).pow(k)).expect("modulus >= 2");
    let dd = rng.gen_range(1..=3);
    let mut d = random_poly_of_degree(rng, &ring, dd);
    let lc_inv = ring.inverse(&d.lc()).unwrap_or_else(|| ring.one());
    d = d.scale(&lc_inv);
    if !d.is_monic() {
        let mut c = d.into_coeffs();
        c[dd] = ring.one();
        d = Poly::new(ring.clone(), c);
    }
    loop {
        let f1 = random_cofactor(rng, &ring, p);
        let g1 = random_cofactor(rng, &ring, p);
        let r = res_ideal(&f1, &g1).expect("resultant over Z/p^k");
        if ring.is_unit(&r) {
            return (d.mul(&f1), d.mul(&g1), d);
        }
    }
}

/// Primitive cofactor of degree 1..=3 whose leading coefficient is a
/// multiple of `p` half of the time.
fn random_cofactor<G: Rng>(rng: &mut G, ring: &Zn, p: u64) -> Poly<Zn> {
    loop {
        let deg = rng.gen_range(1..=3);
        let mut f = random_poly_of_degree(rng, ring, deg);
        if rng.gen_bool(0.5) {
            let mut c = f.into_coeffs();
            c[deg] = ring.mul(&c[deg], &BigUint::from(p));
            if ring.is_zero(&c[deg]) {
                c[deg] = BigUint::from(p);
            }
            f = Poly::new(ring.clone(), c);
        }
        if f.is_primitive() && f.deg0() >= 1 {
            return f;
        }
    }
}

/// A pair over `Z/p^k` with non-unit leading coefficients and arbitrary
/// content.
pub fn adversarial_gcd_instance<G: Rng>(rng: &mut G, p: u64, k: u32) -> (Poly<Zn>, Poly<Zn>) {
    let ring = Zn::new(BigUint::from(p).pow(k)).expect("modulus >= 2");
    let make = |rng: &mut G| loop {
        let deg = rng.gen_range(1..=5);
        let f = random_poly_of_degree(rng, &ring, deg);
        let mut c = f.into_coeffs();
        let scale = BigUint::from(p).pow(rng.gen_range(1..k.max(2)));
        c[deg] = ring.mul(&c[deg], &scale);
        if rng.gen_bool(0.3) {
            let s = BigUint::from(p);
            c = c.iter().map(|x| ring.mul(x, &s)).collect();
        }
        let f = Poly::new(ring.clone(), c);
        if !f.is_zero() {
            return f;
        }
    };
    let f = make(rng);
    let g = make(rng);
    if rng.gen_bool(0.5) {
        let common = random_poly(rng, &ring, 2);
        return (f.mul(&common), g.mul(&common));
    }
    (f, g)
}

/// Trial-division squarefree test for a nonzero integer.
pub fn is_squarefree(n: &BigInt) -> bool {
    let mut m = n.abs();
    if m.is_zero() {
        return false;
    }
    let mut p = BigInt::from(2);
    while &p * &p <= m {
        if (&m % &p).is_zero() {
            m /= &p;
            if (&m % &p).is_zero() {
                return false;
            }
        }
        p += 1;
    }
    true
}

fn mod_p(f: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    f.iter().map(|c| c.mod_floor(&pb).to_u64().expect("below p")).collect()
}

/// Random monic polynomial of degree 2..=4 with small coefficients that is
/// irreducible (certified modulo a prime) with squarefree discriminant, so
/// that `Z[γ]` is the maximal order.
pub fn random_monogenic_field<G: Rng>(rng: &mut G) -> NumberField {
    loop {
        let n = rng.gen_range(2..=4);
        let mut f: Vec<BigInt> = (0..n).map(|_| BigInt::from(rng.gen_range(-6..=6))).collect();
        f.push(BigInt::one());
        let disc = discriminant(&f);
        if !is_squarefree(&disc) {
            continue;
        }
        let certified = (2u64..60)
            .filter(|&p| is_prime_u64(p))
            .any(|p| is_irreducible_mod_p(&mod_p(&f, p), p));
        if certified {
            return NumberField::new(f).expect("monic of degree >= 2");
        }
    }
}

fn eval_int(f: &[BigInt], x: &BigInt) -> BigInt {
    f.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn mul_mod_f(field: &NumberField, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let f = field.minpoly();
    let n = field.degree();
    let mut prod = vec![BigInt::zero(); a.len() + b.len()];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            prod[i + j] += x * y;
        }
    }
    while prod.len() > n {
        let c = prod.pop().expect("non-empty");
        let shift = prod.len() - n;
        for (i, fi) in f[..n].iter().enumerate() {
            prod[shift + i] -= &c * fi;
        }
    }
    prod
}

/// Random ideal of `Z[γ]` in normal presentation: a product of degree-one
/// primes `P_i^(e_i)` with `a = s * prod p_i^(e_i)` and `α` congruent to
/// `(γ - r_i)^(e_i)` modulo `p_i^(e_i + 1)` and to 1 modulo `s`.
pub fn random_normal_ideal<G: Rng>(rng: &mut G, field: &NumberField) -> Ideal2 {
    let f = field.minpoly();
    let n = field.degree();
    let disc = discriminant(f);
    let primes: Vec<u64> = (2u64..40).filter(|&p| is_prime_u64(p)).collect();
    let mut parts: Vec<(Vec<BigInt>, BigInt)> = Vec::new();
    let mut a = BigUint::one();
    let mut used = Vec::new();
    let count = rng.gen_range(0..=2);
    for _ in 0..20 {
        if parts.len() >= count {
            break;
        }
        let p = primes[rng.gen_range(0..primes.len())];
        let pb = BigInt::from(p);
        if used.contains(&p) || (&disc % &pb).is_zero() {
            continue;
        }
        let roots: Vec<i64> = (0..p as i64)
            .filter(|&r| (eval_int(f, &BigInt::from(r)) % &pb).is_zero())
            .collect();
        if roots.is_empty() {
            continue;
        }
        let mut r = BigInt::from(roots[rng.gen_range(0..roots.len())]);
        if (eval_int(f, &r) % (&pb * &pb)).is_zero() {
            r += &pb;
        }
        let e = rng.gen_range(1..=2u32);
        let lin = vec![-r, BigInt::one()];
        let mut pow = vec![BigInt::one()];
        for _ in 0..e {
            pow = mul_mod_f(field, &pow, &lin);
        }
        parts.push((pow, pb.pow(e + 1)));
        a *= BigUint::from(p).pow(e);
        used.push(p);
    }
    let s = loop {
        let s = if rng.gen_bool(0.5) { 1 } else { primes[rng.gen_range(0..primes.len())] };
        if !used.contains(&s) {
            break s;
        }
    };
    if s > 1 {
        parts.push((vec![BigInt::one()], BigInt::from(s)));
        a *= BigUint::from(s);
    }
    // coefficientwise CRT
    let mut alpha = vec![BigInt::zero(); n];
    let mut modulus = BigInt::one();
    for (target, m) in &parts {
        for (k, slot) in alpha.iter_mut().enumerate() {
            let t = target.get(k).cloned().unwrap_or_default();
            let diff = (t - &*slot).mod_floor(m);
            let inv = modinv(&modulus, m);
            *slot += &modulus * (diff * inv).mod_floor(m);
        }
        modulus *= m;
    }
    if parts.is_empty() {
        alpha[0] = BigInt::one();
    }
    for c in alpha.iter_mut() {
        *c += &modulus * BigInt::from(rng.gen_range(-2..=2));
    }
    let alpha = FieldElem::new(field, alpha, BigUint::one()).expect("denominator 1");
    Ideal2::new(a, alpha).expect("a >= 1")
}

fn modinv(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}
