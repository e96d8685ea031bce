//! Norms and minima of ideals of a maximal order given by a two-element
//! normal presentation `(a, α)`, computed through resultants over `Z/mZ`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::resultant::{res, rres, rres_bezout};
use crate::ring::Zn;

/// `K = Q[x]/(f)` with `f` monic, together with a positive multiple of the
/// exponent of `O_K / Z[γ]` (1 when `Z[γ]` is maximal).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberField {
    f: Vec<BigInt>,
    exponent_hint: BigUint,
}

impl NumberField {
    /// `f` is given by ascending integer coefficients.
    pub fn new(f: Vec<BigInt>) -> Result<Self> {
        Self::with_hint(f, BigUint::one())
    }

    pub fn with_hint(mut f: Vec<BigInt>, exponent_hint: BigUint) -> Result<Self> {
        while f.last().is_some_and(Zero::is_zero) {
            f.pop();
        }
        if f.len() < 3 {
            return Err(Error::InvalidRing("defining polynomial must have degree >= 2".into()));
        }
        if !f.last().is_some_and(One::is_one) {
            return Err(Error::InvalidRing("defining polynomial must be monic".into()));
        }
        if exponent_hint.is_zero() {
            return Err(Error::InvalidRing("exponent hint must be positive".into()));
        }
        Ok(NumberField { f, exponent_hint })
    }

    pub fn from_i64s(f: &[i64]) -> Result<Self> {
        Self::new(f.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.f.len() - 1
    }

    pub fn minpoly(&self) -> &[BigInt] {
        &self.f
    }

    pub fn exponent_hint(&self) -> &BigUint {
        &self.exponent_hint
    }

    /// Reduces an integer polynomial modulo `f`.
    fn reduce(&self, mut g: Vec<BigInt>) -> Vec<BigInt> {
        let n = self.degree();
        while g.len() > n {
            let c = g.pop().expect("non-empty");
            let shift = g.len() - n;
            for (i, fi) in self.f[..n].iter().enumerate() {
                g[shift + i] -= &c * fi;
            }
        }
        while g.last().is_some_and(Zero::is_zero) {
            g.pop();
        }
        g
    }

    fn minpoly_over(&self, ring: &Zn) -> Poly<Zn> {
        Poly::from_ints(ring, &self.f)
    }
}

/// `num(γ) / den` in lowest terms, with `deg num < deg f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldElem {
    num: Vec<BigInt>,
    den: BigUint,
}

impl FieldElem {
    pub fn new(field: &NumberField, num: Vec<BigInt>, den: BigUint) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidRing("denominator must be positive".into()));
        }
        let num = field.reduce(num);
        let content = num.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        let g = content.magnitude().gcd(&den);
        let g = if g.is_zero() { den.clone() } else { g };
        let gi = BigInt::from(g.clone());
        let num = num.into_iter().map(|c| c / &gi).collect();
        Ok(FieldElem { num, den: den / g })
    }

    pub fn from_i64s(field: &NumberField, num: &[i64], den: u64) -> Result<Self> {
        Self::new(field, num.iter().map(|&c| BigInt::from(c)).collect(), BigUint::from(den))
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigUint {
        &self.den
    }
}

/// The ideal `a O_K + α O_K`, assumed to be a normal presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal2 {
    pub a: BigUint,
    pub alpha: FieldElem,
}

impl Ideal2 {
    pub fn new(a: BigUint, alpha: FieldElem) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::InvalidRing("first generator must be positive".into()));
        }
        Ok(Ideal2 { a, alpha })
    }
}

/// Largest divisor of `d` whose prime factors all divide `a`.
fn a_part(d: &BigUint, a: &BigUint) -> BigUint {
    let mut part = BigUint::one();
    let mut rest = d.clone();
    loop {
        let g = rest.gcd(a);
        if g.is_one() || g.is_zero() {
            return part;
        }
        rest /= &g;
        part *= g;
    }
}

fn to_unsigned(v: &BigInt) -> BigUint {
    v.to_biguint().expect("nonnegative")
}

/// `N(α) mod m`, via `res(f, num)` over `Z/(m den^n)` divided by `den^n`.
pub fn elem_norm_mod(field: &NumberField, alpha: &FieldElem, m: &BigUint) -> Result<BigUint> {
    if m.is_zero() {
        return Err(Error::InvalidRing("modulus must be positive".into()));
    }
    let n = field.degree() as u32;
    let scale = alpha.den.pow(n);
    let r = norm_scaled(field, &alpha.num, &(m * &scale))?;
    if !(&r % &scale).is_zero() {
        return Err(Error::NotIntegral);
    }
    Ok((r / scale) % m)
}

/// `res(f, num) mod m`, as an integer in `[0, m)`.
fn norm_scaled(field: &NumberField, num: &[BigInt], m: &BigUint) -> Result<BigUint> {
    let ring = Zn::new(m.clone())?;
    let f = field.minpoly_over(&ring);
    let g = Poly::from_ints(&ring, num);
    res(&f, &g)
}

/// `N(I) = gcd(a^n, N(α))`, with the denominator of `α` split into its
/// `a`-part `c` (handled by working modulo `c^n a^n`) and a part coprime to
/// `a` (which does not change the gcd).
pub fn ideal_norm(field: &NumberField, ideal: &Ideal2) -> Result<BigUint> {
    let n = field.degree() as u32;
    let an = ideal.a.pow(n);
    if an.is_one() {
        return Ok(an);
    }
    let cn = a_part(&ideal.alpha.den, &ideal.a).pow(n);
    let r = norm_scaled(field, &ideal.alpha.num, &(&an * &cn))?;
    if !(&r % &cn).is_zero() {
        return Err(Error::NotIntegral);
    }
    Ok((r / cn).gcd(&an))
}

/// Which procedure [`ideal_min`] uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinPath {
    /// `a` is coprime to the denominator and to the index exponent: one
    /// reduced resultant over `Z/a`.
    Coprime,
    /// Bézout identity modulo `a e0 d0`.
    General,
}

pub fn min_path(field: &NumberField, ideal: &Ideal2) -> MinPath {
    if ideal.a.gcd(&ideal.alpha.den).is_one() && ideal.a.gcd(&field.exponent_hint).is_one() {
        MinPath::Coprime
    } else {
        MinPath::General
    }
}

/// `min(I)`, the positive generator of `I ∩ Z`.
pub fn ideal_min(field: &NumberField, ideal: &Ideal2) -> Result<BigUint> {
    match min_path(field, ideal) {
        MinPath::Coprime => ideal_min_coprime(field, ideal),
        MinPath::General => ideal_min_general(field, ideal),
    }
}

fn ideal_min_coprime(field: &NumberField, ideal: &Ideal2) -> Result<BigUint> {
    let ring = Zn::new(ideal.a.clone())?;
    let f = field.minpoly_over(&ring);
    let g = Poly::from_ints(&ring, &ideal.alpha.num);
    let r = rres(&g, &f)?;
    Ok(if r.is_zero() { ideal.a.clone() } else { r })
}

/// `min(I) = gcd(a, den(α^-1))`. A Bézout identity `u (dα) + v f = r`
/// modulo `a e0 d0` gives `α^-1 = d u(γ) / r`, whose denominator is
/// `r / gcd(r, d cont(u))`. The denominator is taken with respect to
/// `Z[γ]`, so the result is exact when `Z[γ]` is maximal at the primes
/// dividing `a`; otherwise it can exceed `min(I)` by a divisor of `e0`.
fn ideal_min_general(field: &NumberField, ideal: &Ideal2) -> Result<BigUint> {
    let a = &ideal.a;
    let d = &ideal.alpha.den;
    let e0 = a_part(&field.exponent_hint, a);
    let d0 = a_part(d, a);
    let m = a * &e0 * &d0;
    let ring = Zn::new(m.clone())?;
    let f = field.minpoly_over(&ring);
    let g = Poly::from_ints(&ring, &ideal.alpha.num);
    let cert = rres_bezout(&g, &f)?;
    if cert.r.is_zero() {
        return Err(Error::InsufficientHint(format!(
            "the Bézout value vanishes modulo {m}; retry with a larger exponent hint"
        )));
    }
    let cont_u = cert.u.coeffs().iter().fold(m.clone(), |acc, c| acc.gcd(c));
    let num_part = (d * cont_u).gcd(&cert.r);
    let den = &cert.r / num_part;
    Ok(a.gcd(&den))
}

/// Integer resultant `res(f, g)` of integer polynomials, as an exact
/// Sylvester determinant.
pub fn integer_resultant(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let (n, m) = (f.len().saturating_sub(1), g.len().saturating_sub(1));
    let size = n + m;
    if size == 0 {
        return BigInt::one();
    }
    let mut rows = vec![vec![BigInt::zero(); size]; size];
    for i in 0..m {
        for (j, c) in f.iter().rev().enumerate() {
            rows[i][i + j] = c.clone();
        }
    }
    for i in 0..n {
        for (j, c) in g.iter().rev().enumerate() {
            rows[m + i][i + j] = c.clone();
        }
    }
    crate::linalg::bareiss_det(rows)
}

/// Discriminant of a monic integer polynomial.
pub fn discriminant(f: &[BigInt]) -> BigInt {
    let n = f.len() - 1;
    let df: Vec<BigInt> = f.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
    let r = integer_resultant(f, &df);
    if (n * (n - 1) / 2) % 2 == 1 {
        -r
    } else {
        r
    }
}

/// `N(α)` exactly, for integral `α` (denominator 1).
pub fn elem_norm(field: &NumberField, alpha: &FieldElem) -> Result<BigInt> {
    if !alpha.den.is_one() {
        return Err(Error::NotIntegral);
    }
    let r = integer_resultant(&field.f, &alpha.num);
    // res over Z of a zero polynomial is 0 as well
    Ok(if alpha.num.is_empty() { BigInt::zero() } else { r })
}

/// Residue of `x` in `[0, m)`.
pub fn residue(x: &BigInt, m: &BigUint) -> BigUint {
    let mi = BigInt::from(m.clone());
    to_unsigned(&x.mod_floor(&mi))
}
