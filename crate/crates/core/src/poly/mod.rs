//! Dense univariate polynomials over a [`PrincipalRing`].

mod hensel;
mod mul;

pub use hensel::{divrem_primitive, fun_factor, invert_mod, invert_unit, pivot, FunFactorization, Pivot};
pub use mul::{mul_coeffs, mul_with_crossover, KARATSUBA_CROSSOVER};

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::PrincipalRing;

/// A polynomial with ascending coefficients and nonzero leading coefficient
/// (the zero polynomial has no coefficients and no degree).
#[derive(Clone, PartialEq)]
pub struct Poly<R: PrincipalRing> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: PrincipalRing> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]", self)
    }
}

/// Comma-separated ascending coefficients; `0` for the zero polynomial.
impl<R: PrincipalRing> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| self.ring.format_elem(c)).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl<R: PrincipalRing> Poly<R> {
    pub fn new(ring: R, mut coeffs: Vec<R::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        Poly { ring, coeffs }
    }

    pub fn from_i64s(ring: &R, coeffs: &[i64]) -> Self {
        let c = coeffs.iter().map(|&v| ring.from_i64(v)).collect();
        Self::new(ring.clone(), c)
    }

    pub fn from_ints(ring: &R, coeffs: &[BigInt]) -> Self {
        let c = coeffs.iter().map(|v| ring.from_int(v)).collect();
        Self::new(ring.clone(), c)
    }

    pub fn zero(ring: &R) -> Self {
        Poly { ring: ring.clone(), coeffs: Vec::new() }
    }

    pub fn one(ring: &R) -> Self {
        Self::constant(ring, ring.one())
    }

    pub fn constant(ring: &R, c: R::Elem) -> Self {
        Self::new(ring.clone(), vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(ring: &R, c: R::Elem, k: usize) -> Self {
        let mut coeffs = vec![ring.zero(); k];
        coeffs.push(c);
        Self::new(ring.clone(), coeffs)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R::Elem> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, with the zero polynomial counted as degree 0.
    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for constants, including zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, i: usize) -> R::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ring.zero())
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> R::Elem {
        self.coeffs.last().cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| *c == self.ring.one())
    }

    fn same_ring(&self, other: &Self) {
        debug_assert!(self.ring == other.ring, "polynomials over different rings");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_ring(other);
        let r = &self.ring;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|i| r.add(&self.coeff(i), &other.coeff(i))).collect();
        Self::new(r.clone(), c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.same_ring(other);
        let r = &self.ring;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|i| r.sub(&self.coeff(i), &other.coeff(i))).collect();
        Self::new(r.clone(), c)
    }

    pub fn neg(&self) -> Self {
        let c = self.coeffs.iter().map(|x| self.ring.neg(x)).collect();
        Self::new(self.ring.clone(), c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_ring(other);
        Self::new(self.ring.clone(), mul_coeffs(&self.ring, &self.coeffs, &other.coeffs))
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|x| self.ring.mul(x, c)).collect();
        Self::new(self.ring.clone(), coeffs)
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.ring.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { ring: self.ring.clone(), coeffs }
    }

    /// Reduction modulo `x^k`.
    pub fn truncate(&self, k: usize) -> Self {
        let coeffs = self.coeffs.iter().take(k).cloned().collect();
        Self::new(self.ring.clone(), coeffs)
    }

    pub fn eval(&self, a: &R::Elem) -> R::Elem {
        let r = &self.ring;
        self.coeffs
            .iter()
            .rev()
            .fold(r.zero(), |acc, c| r.add(&r.mul(&acc, a), c))
    }

    /// Canonical generator of the ideal spanned by the coefficients.
    pub fn content(&self) -> R::Elem {
        let r = &self.ring;
        let mut g = r.zero();
        for c in &self.coeffs {
            g = r.ideal_gcd(&g, c);
            if r.is_unit(&g) {
                return r.one();
            }
        }
        g
    }

    pub fn is_primitive(&self) -> bool {
        self.ring.is_unit(&self.content())
    }

    /// A unit of `R[x]`: unit constant term, all other coefficients nilpotent.
    pub fn is_unit(&self) -> bool {
        let r = &self.ring;
        match self.coeffs.split_first() {
            None => r.is_zero_ring(),
            Some((c0, rest)) => r.is_unit(c0) && rest.iter().all(|c| r.is_nilpotent(c)),
        }
    }

    /// `x^deg(f) f(1/x)`, renormalized.
    pub fn reciprocal(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let coeffs = self.coeffs.iter().rev().cloned().collect();
        Ok(Self::new(self.ring.clone(), coeffs))
    }

    /// Division with remainder by a polynomial with invertible leading
    /// coefficient.
    pub fn divrem(&self, g: &Self) -> Result<(Self, Self)> {
        self.same_ring(g);
        let r = &self.ring;
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let inv = r.inverse(&g.lc()).ok_or(Error::NonInvertibleLeadingCoefficient)?;
        let m = g.coeffs.len() - 1;
        if self.coeffs.len() <= m {
            return Ok((Self::zero(r), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut q = vec![r.zero(); rem.len() - m];
        let monic = g.lc() == r.one();
        for i in (m..rem.len()).rev() {
            if r.is_zero(&rem[i]) {
                continue;
            }
            let c = if monic { rem[i].clone() } else { r.mul(&rem[i], &inv) };
            for (j, gj) in g.coeffs[..m].iter().enumerate() {
                if !r.is_zero(gj) {
                    rem[i - m + j] = r.sub(&rem[i - m + j], &r.mul(&c, gj));
                }
            }
            rem[i] = r.zero();
            q[i - m] = c;
        }
        rem.truncate(m);
        Ok((Self::new(r.clone(), q), Self::new(r.clone(), rem)))
    }

    pub fn rem(&self, g: &Self) -> Result<Self> {
        Ok(self.divrem(g)?.1)
    }

    pub fn quo(&self, g: &Self) -> Result<Self> {
        Ok(self.divrem(g)?.0)
    }

    /// Image over a quotient ring of `self.ring()`.
    pub fn project(&self, target: &R) -> Self {
        let c = self.coeffs.iter().map(|x| self.ring.project(x, target)).collect();
        Self::new(target.clone(), c)
    }

    /// Representative over `parent`, of which `self.ring()` is a quotient.
    pub fn lift_to(&self, parent: &R) -> Self {
        let c = self.coeffs.iter().map(|x| parent.lift(x)).collect();
        Self::new(parent.clone(), c)
    }

    /// Coefficientwise exact division by a scalar, if every coefficient is
    /// a multiple of `c`.
    pub fn divide_scalar(&self, c: &R::Elem) -> Option<Self> {
        let r = &self.ring;
        let coeffs = self
            .coeffs
            .iter()
            .map(|x| r.try_divide(x, c))
            .collect::<Option<Vec<_>>>()?;
        Some(Self::new(r.clone(), coeffs))
    }

    /// Recombines two polynomials over the factors of a split of `ring`.
    pub fn crt(ring: &R, parts: (&R, &R), p1: &Self, p2: &Self) -> Result<Self> {
        let n = p1.coeffs.len().max(p2.coeffs.len());
        let coeffs = (0..n)
            .map(|i| ring.crt(parts, &p1.coeff(i), &p2.coeff(i)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(ring.clone(), coeffs))
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
    fn multiplication() {
        let r = z(8);
        assert_eq!(p(&r, &[1, 4, 2]).mul(&p(&r, &[1, 4, 6, 1])), p(&r, &[1, 0, 0, 1, 0, 2]));
        let f = p(&r, &[3, 1, 4]);
        assert_eq!(f.mul(&Poly::one(&r)), f);
        let r = z(12);
        assert_eq!(p(&r, &[2, 6]).mul(&p(&r, &[3, 2])), p(&r, &[6, 10]));
    }

    #[test]
    fn content_examples() {
        let r = z(12);
        assert_eq!(p(&r, &[8, 0, 4]).content(), r.elem(4));
        assert_eq!(p(&r, &[5, 7, 1]).content(), r.elem(1));
        assert_eq!(p(&r, &[9, 6]).content(), r.elem(3));
        assert_eq!(Poly::zero(&r).content(), r.elem(0));
    }

    #[test]
    fn divrem_examples() {
        let r = z(12);
        let (q, rem) = p(&r, &[3, 2, 1]).divrem(&p(&r, &[1, 0, 1])).unwrap();
        assert_eq!(q, p(&r, &[1]));
        assert_eq!(rem, p(&r, &[2, 2]));
        let g = p(&r, &[1, 0, 1]);
        let (q, rem) = g.divrem(&g).unwrap();
        assert_eq!((q, rem), (Poly::one(&r), Poly::zero(&r)));
        let r = z(4);
        let (_, rem) = p(&r, &[1, 2, 0, 1]).divrem(&p(&r, &[2, 0, 2, 1])).unwrap();
        assert_eq!(rem, p(&r, &[3, 2, 2]));
        assert_eq!(
            p(&r, &[1, 1]).divrem(&p(&r, &[1, 2])),
            Err(Error::NonInvertibleLeadingCoefficient)
        );
    }

    #[test]
    fn reciprocal_examples() {
        let r = z(8);
        assert_eq!(p(&r, &[1, 2, 0, 1]).reciprocal().unwrap(), p(&r, &[1, 0, 2, 1]));
        let pal = p(&r, &[1, 3, 1]);
        assert_eq!(pal.reciprocal().unwrap(), pal);
        assert_eq!(p(&r, &[0, 4, 2]).reciprocal().unwrap(), p(&r, &[2, 4]));
        assert_eq!(Poly::zero(&r).reciprocal(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn display() {
        let r = z(12);
        assert_eq!(p(&r, &[3, 2, 1]).to_string(), "3,2,1");
        assert_eq!(Poly::zero(&r).to_string(), "0");
    }

    #[test]
    fn crt_recombination() {
        let r = z(12);
        let (a, b) = r.split(&r.elem(4)).unwrap();
        let f = p(&r, &[7, 11, 5]);
        let back = Poly::crt(&r, (&a, &b), &f.project(&a), &f.project(&b)).unwrap();
        assert_eq!(back, f);
    }
}
