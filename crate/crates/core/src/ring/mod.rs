//! Artinian principal ideal rings.
//!
//! Two concrete instances are provided: residue rings `Z/nZ` ([`Zn`]) and
//! Galois rings `(Z/p^e)[t]/(λ)` ([`GaloisRing`]). Both implement
//! [`PrincipalRing`], the set of basic operations every algorithm in this
//! crate is written against.

mod fp_poly;
mod galois;
pub(crate) mod zn;

pub use galois::GaloisRing;
pub use zn::Zn;

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Basic operations of a finite Artinian principal ideal ring.
///
/// A ring value is a *context*: elements are plain values interpreted
/// relative to it. Quotients and factor rings produced by [`split`],
/// [`quotient`] and [`ann_quotient`] have the same type as the parent, and
/// an element of a quotient is also a valid representative in the parent
/// (see [`lift`]).
///
/// [`split`]: PrincipalRing::split
/// [`quotient`]: PrincipalRing::quotient
/// [`ann_quotient`]: PrincipalRing::ann_quotient
/// [`lift`]: PrincipalRing::lift
pub trait PrincipalRing: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: &BigInt) -> Self::Elem;

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_int(&BigInt::from(n))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// True for the ring with one element (`0 = 1`).
    fn is_zero_ring(&self) -> bool;

    /// Upper bound `E` on the nilpotency index of the nilradical.
    fn nilpotency_bound(&self) -> u32;

    fn is_unit(&self, a: &Self::Elem) -> bool;
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Returns `c` with `b * c = a` if `a ∈ (b)`.
    fn try_divide(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;

    /// Returns `(g, s, t)` with `(g) = (a, b)` and `g = s*a + t*b`, where `g`
    /// is the canonical generator of the ideal.
    fn gcd_bezout(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem, Self::Elem);

    /// Canonical generator of the colon ideal `((a) : (b))`.
    fn colon(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// A unit `w` with `w * a = ideal_gen(a)`.
    fn unit_normalizer(&self, a: &Self::Elem) -> Self::Elem;

    /// Canonical generator of the principal ideal `(a)`.
    fn ideal_gen(&self, a: &Self::Elem) -> Self::Elem;

    /// Canonical generator of `(a, b)`.
    fn ideal_gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.gcd_bezout(a, b).0
    }

    /// Splits along a splitting element `a`: the first factor is the ring in
    /// which `a` is nilpotent, the second the one in which it is a unit.
    fn split(&self, a: &Self::Elem) -> Result<(Self, Self)>;

    /// Recombines residues of the two factors of a split.
    fn crt(&self, parts: (&Self, &Self), r1: &Self::Elem, r2: &Self::Elem) -> Result<Self::Elem>;

    /// The quotient `R/(c)`.
    fn quotient(&self, c: &Self::Elem) -> Self;

    /// The quotient `R/Ann(c)`; multiplying `c` by any lift of one of its
    /// elements is well defined.
    fn ann_quotient(&self, c: &Self::Elem) -> Self;

    /// Image of `a` in a quotient `target` of `self`.
    fn project(&self, a: &Self::Elem, target: &Self) -> Self::Elem;

    /// A representative in `self` of an element of one of its quotients.
    fn lift(&self, a: &Self::Elem) -> Self::Elem;

    fn format_elem(&self, a: &Self::Elem) -> String;

    fn pow(&self, a: &Self::Elem, mut exp: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `a^E = 0`, checked by `⌈log₂ E⌉ + 1` squarings.
    fn is_nilpotent(&self, a: &Self::Elem) -> bool {
        let bound = self.nilpotency_bound().max(1);
        let rounds = ceil_log2(bound as u64) + 1;
        let mut x = a.clone();
        for _ in 0..rounds {
            if self.is_zero(&x) {
                return true;
            }
            x = self.mul(&x, &x);
        }
        self.is_zero(&x)
    }

    /// A non-nilpotent zero divisor.
    fn is_splitting(&self, a: &Self::Elem) -> bool {
        !self.is_zero(a) && !self.is_unit(a) && !self.is_nilpotent(a)
    }
}

/// Coarse classification of a ring element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElemKind {
    Unit,
    Nilpotent,
    Splitting,
}

pub fn classify<R: PrincipalRing>(ring: &R, a: &R::Elem) -> ElemKind {
    if ring.is_unit(a) {
        ElemKind::Unit
    } else if ring.is_nilpotent(a) {
        ElemKind::Nilpotent
    } else {
        ElemKind::Splitting
    }
}

/// `(-1)^k` as a ring element.
pub fn sign<R: PrincipalRing>(ring: &R, k: u64) -> R::Elem {
    if k % 2 == 0 {
        ring.one()
    } else {
        ring.neg(&ring.one())
    }
}

/// Deterministic primality test for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    fp_poly::is_prime(n)
}

/// Whether the monic polynomial `f` (ascending coefficients in `[0, p)`) is
/// irreducible over `F_p`.
pub fn is_irreducible_mod_p(f: &[u64], p: u64) -> bool {
    fp_poly::is_irreducible(f, p)
}

pub(crate) fn ceil_log2(x: u64) -> u32 {
    if x <= 1 {
        0
    } else {
        64 - (x - 1).leading_zeros()
    }
}

/// Ring operations exposed through [`checked_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Eq,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArithValue<E> {
    Elem(E),
    Bool(bool),
}

/// Applies `op` to elements tagged with their contexts, rejecting operands
/// from different rings.
pub fn checked_arith<R: PrincipalRing>(
    lhs: (&R, &R::Elem),
    rhs: (&R, &R::Elem),
    op: ArithOp,
) -> Result<ArithValue<R::Elem>> {
    if lhs.0 != rhs.0 {
        return Err(Error::ContextMismatch);
    }
    let ring = lhs.0;
    let (a, b) = (lhs.1, rhs.1);
    Ok(match op {
        ArithOp::Add => ArithValue::Elem(ring.add(a, b)),
        ArithOp::Sub => ArithValue::Elem(ring.sub(a, b)),
        ArithOp::Mul => ArithValue::Elem(ring.mul(a, b)),
        ArithOp::Eq => ArithValue::Bool(a == b),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceil_log2_values() {
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(3), 2);
        assert_eq!(ceil_log2(4), 2);
        assert_eq!(ceil_log2(5), 3);
    }

    #[test]
    fn mixed_contexts_are_rejected() {
        let r12 = Zn::new(12u32.into()).unwrap();
        let r8 = Zn::new(8u32.into()).unwrap();
        let a = r12.from_i64(7);
        let b = r8.from_i64(4);
        assert_eq!(
            checked_arith((&r12, &a), (&r8, &b), ArithOp::Add),
            Err(Error::ContextMismatch)
        );
        let c = r12.from_i64(4);
        assert_eq!(
            checked_arith((&r12, &a), (&r12, &c), ArithOp::Mul),
            Ok(ArithValue::Elem(r12.from_i64(4)))
        );
        assert_eq!(
            checked_arith((&r12, &a), (&r12, &a), ArithOp::Eq),
            Ok(ArithValue::Bool(true))
        );
    }
}
