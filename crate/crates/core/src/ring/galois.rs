use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::fp_poly;
use super::zn::mod_signed;
use super::{ceil_log2, PrincipalRing};
use crate::error::{Error, Result};

/// The Galois ring `(Z/p^e)[t]/(λ)` with `λ` monic of degree `k` and
/// irreducible modulo `p`.
///
/// Elements are coefficient vectors of length `k` with entries in
/// `[0, p^e)`. Every nonzero element is `p^v` times a unit. `e = 0` is the
/// zero ring.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct GaloisRing {
    p: u64,
    e: u32,
    q: BigUint,
    lambda: Vec<BigUint>,
}

impl GaloisRing {
    /// Builds the ring from an explicit modulus `λ` (ascending coefficients,
    /// monic).
    pub fn new(p: u64, e: u32, lambda: Vec<BigUint>) -> Result<Self> {
        if !fp_poly::is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        if e == 0 {
            return Err(Error::InvalidRing("exponent must be at least 1".into()));
        }
        if lambda.len() < 2 || !lambda.last().is_some_and(|c| c.is_one()) {
            return Err(Error::InvalidRing("λ must be monic of degree >= 1".into()));
        }
        let q = BigUint::from(p).pow(e);
        let lambda: Vec<BigUint> = lambda.into_iter().map(|c| c % &q).collect();
        let reduced: Vec<u64> = lambda
            .iter()
            .map(|c| (c % p).to_u64().expect("below p"))
            .collect();
        if !fp_poly::is_irreducible(&reduced, p) {
            return Err(Error::InvalidRing("λ is not irreducible modulo p".into()));
        }
        Ok(GaloisRing { p, e, q, lambda })
    }

    /// Builds the ring with a `λ` of degree `k` found by seeded random
    /// sampling of monic polynomials.
    pub fn with_degree(p: u64, e: u32, k: usize, seed: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidRing("extension degree must be at least 1".into()));
        }
        if !fp_poly::is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let mut cand: Vec<u64> = (0..k).map(|_| rng.gen_range(0..p)).collect();
            cand.push(1);
            if fp_poly::is_irreducible(&cand, p) {
                let lambda = cand.into_iter().map(BigUint::from).collect();
                return Self::new(p, e, lambda);
            }
        }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn exponent(&self) -> u32 {
        self.e
    }

    pub fn degree(&self) -> usize {
        self.lambda.len() - 1
    }

    pub fn lambda(&self) -> &[BigUint] {
        &self.lambda
    }

    /// Size of the residue field, `p^k`.
    pub fn residue_field_size(&self) -> BigUint {
        BigUint::from(self.p).pow(self.degree() as u32)
    }

    /// Element with the given coefficients (reduced).
    pub fn elem(&self, coeffs: &[BigUint]) -> Vec<BigUint> {
        let mut out = vec![BigUint::zero(); self.degree()];
        let x: Vec<BigUint> = coeffs.iter().map(|c| c % &self.q).collect();
        let reduced = self.reduce_poly(x);
        for (o, c) in out.iter_mut().zip(reduced) {
            *o = c;
        }
        out
    }

    /// The element `t`.
    pub fn generator(&self) -> Vec<BigUint> {
        self.elem(&[BigUint::zero(), BigUint::one()])
    }

    /// Enumerates lifts of all residue-field elements (coefficients in
    /// `[0, p)`); `p^k` elements, pairwise distinct modulo `p`.
    pub fn residue_lifts(&self) -> Vec<Vec<BigUint>> {
        let k = self.degree();
        let total = self.p.checked_pow(k as u32).expect("residue field too large to enumerate");
        (0..total)
            .map(|mut idx| {
                (0..k)
                    .map(|_| {
                        let c = idx % self.p;
                        idx /= self.p;
                        BigUint::from(c) % &self.q
                    })
                    .collect()
            })
            .collect()
    }

    /// The ring with the same `λ` and exponent `e2 <= e`.
    fn with_exponent(&self, e2: u32) -> Self {
        let q = BigUint::from(self.p).pow(e2);
        let lambda = self.lambda.iter().map(|c| c % &q).collect();
        GaloisRing { p: self.p, e: e2, q, lambda }
    }

    fn reduce_poly(&self, mut x: Vec<BigUint>) -> Vec<BigUint> {
        let k = self.degree();
        while x.len() > k {
            let top = x.pop().expect("nonempty");
            if top.is_zero() {
                continue;
            }
            let base = x.len() - k;
            for (j, l) in self.lambda[..k].iter().enumerate() {
                let sub = (&top * l) % &self.q;
                let cur = &x[base + j];
                x[base + j] = if *cur >= sub { cur - &sub } else { &self.q - (&sub - cur) };
            }
        }
        x.resize(k, BigUint::zero());
        x
    }

    fn val_int(&self, c: &BigUint) -> u32 {
        if c.is_zero() {
            return self.e;
        }
        let mut v = 0;
        let mut c = c.clone();
        let p = BigUint::from(self.p);
        while v < self.e {
            let (q, r) = c.div_rem(&p);
            if !r.is_zero() {
                break;
            }
            c = q;
            v += 1;
        }
        v
    }

    /// `v` with `a = p^v * unit`; `e` for zero.
    pub fn valuation(&self, a: &[BigUint]) -> u32 {
        a.iter().map(|c| self.val_int(c)).min().unwrap_or(self.e)
    }

    fn p_power(&self, v: u32) -> Vec<BigUint> {
        self.from_int(&BigInt::from(self.p).pow(v))
    }

    /// `a / p^v` as an element of `GR(p^{e-v})`; requires `v <= valuation(a)`.
    fn shift_down(&self, a: &[BigUint], v: u32) -> (Self, Vec<BigUint>) {
        let sub = self.with_exponent(self.e - v);
        let pv = BigUint::from(self.p).pow(v);
        let coeffs = a.iter().map(|c| (c / &pv) % &sub.q).collect();
        (sub, coeffs)
    }

    fn inverse_mod_p(&self, a: &[BigUint]) -> Option<Vec<u64>> {
        let p = self.p;
        let ap: Vec<u64> = a.iter().map(|c| (c % p).to_u64().expect("below p")).collect();
        let lp: Vec<u64> = self.lambda.iter().map(|c| (c % p).to_u64().expect("below p")).collect();
        fp_poly::inverse_mod(&fp_poly::trim(ap), &lp, p)
    }
}

impl PrincipalRing for GaloisRing {
    type Elem = Vec<BigUint>;

    fn zero(&self) -> Vec<BigUint> {
        vec![BigUint::zero(); self.degree()]
    }

    fn one(&self) -> Vec<BigUint> {
        let mut out = self.zero();
        out[0] = BigUint::one() % &self.q;
        out
    }

    fn from_int(&self, n: &BigInt) -> Vec<BigUint> {
        let mut out = self.zero();
        out[0] = mod_signed(n, &self.q);
        out
    }

    fn add(&self, a: &Vec<BigUint>, b: &Vec<BigUint>) -> Vec<BigUint> {
        a.iter().zip(b).map(|(x, y)| (x + y) % &self.q).collect()
    }

    fn sub(&self, a: &Vec<BigUint>, b: &Vec<BigUint>) -> Vec<BigUint> {
        a.iter()
            .zip(b)
            .map(|(x, y)| if x >= y { x - y } else { &self.q - (y - x) })
            .collect()
    }

    fn neg(&self, a: &Vec<BigUint>) -> Vec<BigUint> {
        a.iter()
            .map(|x| if x.is_zero() { BigUint::zero() } else { &self.q - x })
            .collect()
    }

    fn mul(&self, a: &Vec<BigUint>, b: &Vec<BigUint>) -> Vec<BigUint> {
        let k = self.degree();
        let mut prod = vec![BigUint::zero(); 2 * k - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        let prod = prod.into_iter().map(|c| c % &self.q).collect();
        self.reduce_poly(prod)
    }

    fn is_zero(&self, a: &Vec<BigUint>) -> bool {
        a.iter().all(|c| c.is_zero())
    }

    fn is_zero_ring(&self) -> bool {
        self.e == 0
    }

    fn nilpotency_bound(&self) -> u32 {
        self.e.max(1)
    }

    fn is_unit(&self, a: &Vec<BigUint>) -> bool {
        self.valuation(a) == 0
    }

    fn inverse(&self, a: &Vec<BigUint>) -> Option<Vec<BigUint>> {
        if self.is_zero_ring() {
            return Some(self.zero());
        }
        let inv = self.inverse_mod_p(a)?;
        let mut x = self.elem(&inv.into_iter().map(BigUint::from).collect::<Vec<_>>());
        let two = self.from_int(&BigInt::from(2));
        for _ in 0..=ceil_log2(self.e as u64) {
            let ax = self.mul(a, &x);
            x = self.mul(&x, &self.sub(&two, &ax));
        }
        debug_assert_eq!(self.mul(a, &x), self.one());
        Some(x)
    }

    fn try_divide(&self, a: &Vec<BigUint>, b: &Vec<BigUint>) -> Option<Vec<BigUint>> {
        let vb = self.valuation(b);
        let va = self.valuation(a);
        if va < vb {
            return None;
        }
        if vb == self.e {
            return Some(self.zero());
        }
        let (sub, u) = self.shift_down(b, vb);
        let (_, a1) = self.shift_down(a, vb);
        let uinv = sub.inverse(&u)?;
        Some(sub.mul(&a1, &uinv))
    }

    fn gcd_bezout(&self, a: &Vec<BigUint>, b: &Vec<BigUint>) -> (Vec<BigUint>, Vec<BigUint>, Vec<BigUint>) {
        let (va, vb) = (self.valuation(a), self.valuation(b));
        if va == self.e && vb == self.e {
            return (self.zero(), self.zero(), self.zero());
        }
        if va <= vb {
            (self.p_power(va), self.unit_normalizer(a), self.zero())
        } else {
            (self.p_power(vb), self.zero(), self.unit_normalizer(b))
        }
    }

    fn colon(&self, a: &Vec<BigUint>, b: &Vec<BigUint>) -> Vec<BigUint> {
        let (va, vb) = (self.valuation(a), self.valuation(b));
        self.p_power(va.saturating_sub(vb))
    }

    fn unit_normalizer(&self, a: &Vec<BigUint>) -> Vec<BigUint> {
        let v = self.valuation(a);
        if v == self.e {
            return self.one();
        }
        let (sub, u) = self.shift_down(a, v);
        let inv = sub.inverse(&u).expect("unit after removing p-power");
        self.elem(&inv)
    }

    fn ideal_gen(&self, a: &Vec<BigUint>) -> Vec<BigUint> {
        self.p_power(self.valuation(a))
    }

    fn split(&self, a: &Vec<BigUint>) -> Result<(Self, Self)> {
        Err(Error::NotSplitting(format!(
            "{} (Galois rings are local)",
            self.format_elem(a)
        )))
    }

    fn crt(&self, _parts: (&Self, &Self), _r1: &Vec<BigUint>, _r2: &Vec<BigUint>) -> Result<Vec<BigUint>> {
        Err(Error::NotCoprime)
    }

    fn quotient(&self, c: &Vec<BigUint>) -> Self {
        self.with_exponent(self.valuation(c))
    }

    fn ann_quotient(&self, c: &Vec<BigUint>) -> Self {
        self.with_exponent(self.e - self.valuation(c))
    }

    fn project(&self, a: &Vec<BigUint>, target: &Self) -> Vec<BigUint> {
        a.iter().map(|c| c % &target.q).collect()
    }

    fn lift(&self, a: &Vec<BigUint>) -> Vec<BigUint> {
        self.elem(a)
    }

    fn format_elem(&self, a: &Vec<BigUint>) -> String {
        if a.iter().skip(1).all(|c| c.is_zero()) {
            return a.first().map(|c| c.to_string()).unwrap_or_else(|| "0".into());
        }
        let parts: Vec<String> = a.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(" "))
    }

    fn is_nilpotent(&self, a: &Vec<BigUint>) -> bool {
        self.valuation(a) >= 1 || self.is_zero_ring()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    fn gr(p: u64, e: u32, lambda: &[u64]) -> GaloisRing {
        GaloisRing::new(p, e, b(lambda)).unwrap()
    }

    #[test]
    fn t_squared() {
        let r = gr(2, 3, &[1, 1, 1]);
        let t = r.generator();
        assert_eq!(r.mul(&t, &t), b(&[7, 7]));
    }

    #[test]
    fn rejects_reducible_lambda() {
        assert!(GaloisRing::new(2, 3, b(&[1, 0, 1])).is_err());
        assert!(GaloisRing::new(4, 3, b(&[1, 1, 1])).is_err());
    }

    #[test]
    fn random_lambda_is_irreducible() {
        for (p, k) in [(2, 3), (3, 2), (5, 4), (7, 1)] {
            let r = GaloisRing::with_degree(p, 2, k, 11).unwrap();
            assert_eq!(r.degree(), k);
        }
    }

    #[test]
    fn inverse_of_units() {
        let r = gr(3, 3, &[1, 0, 1]);
        for a in r.residue_lifts() {
            let a = r.add(&a, &r.from_i64(9));
            match r.inverse(&a) {
                Some(x) => assert_eq!(r.mul(&a, &x), r.one()),
                None => assert!(!r.is_unit(&a)),
            }
        }
    }

    #[test]
    fn p_power_times_unit_decomposition() {
        for (p, e, lambda) in [
            (2u64, 1u32, vec![1u64, 1]),
            (2, 2, vec![1, 1, 1]),
            (2, 3, vec![1, 1, 0, 1]),
            (3, 2, vec![1, 0, 1]),
            (3, 3, vec![2, 1]),
        ] {
            let r = gr(p, e, &lambda);
            let q = p.pow(e);
            let k = lambda.len() - 1;
            for idx in 0..q.pow(k as u32) {
                let a: Vec<BigUint> = (0..k).map(|i| BigUint::from(idx / q.pow(i as u32) % q)).collect();
                if r.is_zero(&a) {
                    continue;
                }
                let v = r.valuation(&a);
                assert!(v < e);
                let w = r.unit_normalizer(&a);
                assert!(r.is_unit(&w));
                assert_eq!(r.mul(&w, &a), r.p_power(v));
                let c = r.try_divide(&a, &r.p_power(v)).unwrap();
                assert!(r.is_unit(&c));
                assert_eq!(r.mul(&c, &r.p_power(v)), a);
            }
        }
    }

    #[test]
    fn divisibility_and_colon() {
        let r = gr(2, 3, &[1, 1, 1]);
        let two = r.from_i64(2);
        let four = r.from_i64(4);
        let t = r.generator();
        assert_eq!(r.try_divide(&four, &two), Some(r.from_i64(2)));
        assert_eq!(r.try_divide(&two, &four), None);
        let two_t = r.mul(&two, &t);
        let c = r.try_divide(&four, &two_t).unwrap();
        assert_eq!(r.mul(&c, &two_t), four);
        assert_eq!(r.colon(&four, &two), two);
        assert_eq!(r.colon(&r.zero(), &two), four);
        assert_eq!(r.colon(&two, &r.zero()), r.one());
        let (g, s, tt) = r.gcd_bezout(&four, &two_t);
        assert_eq!(g, two);
        assert_eq!(r.add(&r.mul(&s, &four), &r.mul(&tt, &two_t)), two);
    }

    #[test]
    fn local_ring_never_splits() {
        let r = gr(2, 3, &[1, 1, 1]);
        for a in r.residue_lifts() {
            assert!(!r.is_splitting(&a));
            assert!(!r.is_splitting(&r.mul(&a, &r.from_i64(2))));
        }
        assert!(r.split(&r.from_i64(2)).is_err());
    }

    #[test]
    fn quotients() {
        let r = gr(2, 3, &[1, 1, 1]);
        assert_eq!(r.ann_quotient(&r.from_i64(2)).exponent(), 2);
        assert_eq!(r.quotient(&r.from_i64(4)).exponent(), 2);
        assert!(r.ann_quotient(&r.zero()).is_zero_ring());
        let z = r.ann_quotient(&r.zero());
        assert!(z.is_unit(&z.zero()));
        assert_eq!(z.one(), z.zero());
    }
}
