//! Timing harness for `res` and `rres` over fixed modulus classes.

use std::time::Instant;

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::resultant::{res, rres};
use crate::ring::Zn;
use crate::sample::random_poly_of_degree;
use crate::Result;

/// Degrees timed by default.
pub const DEGREES: [usize; 5] = [64, 128, 256, 512, 1024];

/// `2^64 - 59`, the largest prime below `2^64`.
pub const PRIME_64: u64 = 18_446_744_073_709_551_557;

/// Eight primes whose product has 63 bits.
pub const COMPOSITE_FACTORS: [u64; 8] = [211, 223, 227, 229, 233, 239, 241, 251];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Res,
    Rres,
}

impl Algorithm {
    pub const ALL: [Algorithm; 2] = [Algorithm::Res, Algorithm::Rres];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Res => "res",
            Algorithm::Rres => "rres",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NClass {
    /// A 64-bit prime.
    Prime,
    /// `3^40`, a 64-bit prime power.
    PrimePower,
    /// A product of eight distinct primes of similar bit size.
    Composite,
}

impl NClass {
    pub const ALL: [NClass; 3] = [NClass::Prime, NClass::PrimePower, NClass::Composite];

    pub fn name(self) -> &'static str {
        match self {
            NClass::Prime => "prime",
            NClass::PrimePower => "prime-power",
            NClass::Composite => "composite",
        }
    }

    pub fn modulus(self) -> BigUint {
        match self {
            NClass::Prime => BigUint::from(PRIME_64),
            NClass::PrimePower => BigUint::from(3u32).pow(40),
            NClass::Composite => COMPOSITE_FACTORS.iter().map(|&p| BigUint::from(p)).product(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Timing {
    pub algorithm: Algorithm,
    pub degree: usize,
    pub class: NClass,
    pub seconds: f64,
}

/// Times one call on a seeded pair of degree-`d` polynomials; the best of
/// `reps` runs is reported.
pub fn time_case(algorithm: Algorithm, degree: usize, class: NClass, seed: u64, reps: usize) -> Result<Timing> {
    let ring = Zn::new(class.modulus())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ degree as u64);
    let f = random_poly_of_degree(&mut rng, &ring, degree);
    let g = random_poly_of_degree(&mut rng, &ring, degree);
    let mut best = f64::INFINITY;
    for _ in 0..reps.max(1) {
        let start = Instant::now();
        match algorithm {
            Algorithm::Res => drop(res(&f, &g)?),
            Algorithm::Rres => drop(rres(&f, &g)?),
        }
        best = best.min(start.elapsed().as_secs_f64());
    }
    Ok(Timing { algorithm, degree, class, seconds: best })
}

/// Times every algorithm, degree and modulus class.
pub fn run(degrees: &[usize], seed: u64, reps: usize) -> Result<Vec<Timing>> {
    let mut out = Vec::new();
    for algorithm in Algorithm::ALL {
        for class in NClass::ALL {
            for &d in degrees {
                out.push(time_case(algorithm, d, class, seed, reps)?);
            }
        }
    }
    Ok(out)
}

/// CSV with header `algorithm,d,n-class,seconds`.
pub fn to_csv(timings: &[Timing]) -> String {
    let mut s = String::from("algorithm,d,n-class,seconds\n");
    for t in timings {
        s.push_str(&format!("{},{},{},{:.6}\n", t.algorithm.name(), t.degree, t.class.name(), t.seconds));
    }
    s
}

fn lookup(timings: &[Timing], algorithm: Algorithm, degree: usize, class: NClass) -> Option<f64> {
    timings
        .iter()
        .find(|t| t.algorithm == algorithm && t.degree == degree && t.class == class)
        .map(|t| t.seconds)
}

/// `time(2d) / time(d)` for each algorithm and each `d` whose double was
/// also timed, at the given class.
pub fn doubling_ratios(timings: &[Timing], class: NClass) -> Vec<(Algorithm, usize, f64)> {
    let mut out = Vec::new();
    for algorithm in Algorithm::ALL {
        for t in timings.iter().filter(|t| t.algorithm == algorithm && t.class == class) {
            if let Some(t2) = lookup(timings, algorithm, 2 * t.degree, class) {
                out.push((algorithm, t.degree, t2 / t.seconds));
            }
        }
    }
    out
}

/// `time(composite) / time(prime)` for each algorithm and degree.
pub fn composite_ratios(timings: &[Timing]) -> Vec<(Algorithm, usize, f64)> {
    let mut out = Vec::new();
    for t in timings.iter().filter(|t| t.class == NClass::Prime) {
        if let Some(c) = lookup(timings, t.algorithm, t.degree, NClass::Composite) {
            out.push((t.algorithm, t.degree, c / t.seconds));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moduli_have_64_bits_or_close() {
        assert_eq!(NClass::Prime.modulus().bits(), 64);
        assert_eq!(NClass::PrimePower.modulus().bits(), 64);
        assert_eq!(NClass::Composite.modulus().bits(), 63);
    }

    #[test]
    fn csv_shape() {
        let t = run(&[4, 8], 1, 1).unwrap();
        let csv = to_csv(&t);
        assert_eq!(csv.lines().count(), 1 + 2 * 3 * 2);
        assert!(csv.starts_with("algorithm,d,n-class,seconds\nres,4,prime,"));
        assert_eq!(doubling_ratios(&t, NClass::Prime).len(), 2);
        assert_eq!(composite_ratios(&t).len(), 4);
    }
}
