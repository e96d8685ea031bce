use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::PrincipalRing;
use crate::error::{Error, Result};

/// The residue ring `Z/nZ`, elements stored as residues in `[0, n)`.
///
/// `n = 1` is allowed and denotes the zero ring, which quotients and
/// splittings can produce.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Zn {
    modulus: BigUint,
    bound: u32,
}

impl Zn {
    pub fn new(modulus: BigUint) -> Result<Self> {
        if modulus.is_zero() {
            return Err(Error::InvalidRing("modulus must be positive".into()));
        }
        let bound = (modulus.bits() as u32).max(1);
        Ok(Zn { modulus, bound })
    }

    pub fn from_u64(modulus: u64) -> Result<Self> {
        Self::new(BigUint::from(modulus))
    }

    pub fn modulus(&self) -> &BigUint {
        &self.modulus
    }

    pub fn elem(&self, v: u64) -> BigUint {
        BigUint::from(v) % &self.modulus
    }

    fn reduce(&self, v: BigUint) -> BigUint {
        if v < self.modulus {
            v
        } else {
            v % &self.modulus
        }
    }

    /// Lifts a unit of `Z/m` (with `m | n`) to a unit of `Z/n` congruent to
    /// it modulo `m`.
    pub fn lift_unit(&self, x: &BigUint, m: &BigUint) -> BigUint {
        if m.is_one() || m.is_zero() {
            return self.one();
        }
        // Split n = full * rest where full carries exactly the primes of m.
        let mut rest = self.modulus.clone();
        loop {
            let g = rest.gcd(m);
            if g.is_one() {
                break;
            }
            rest /= g;
        }
        let full = &self.modulus / &rest;
        let x = x % &full;
        crt_pair(&x, &full, &BigUint::one(), &rest).expect("coprime by construction")
    }
}

/// Integer extended gcd: `(g, s, t)` with `g = s*a + t*b`, `g >= 0`.
pub(crate) fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.sign() == Sign::Minus {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

pub(crate) fn to_signed(v: &BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, v.clone())
}

pub(crate) fn mod_signed(v: &BigInt, n: &BigUint) -> BigUint {
    let n = to_signed(n);
    v.mod_floor(&n).to_biguint().expect("nonnegative after mod_floor")
}

/// Solves `r ≡ r1 (mod n1)`, `r ≡ r2 (mod n2)` for coprime moduli.
pub(crate) fn crt_pair(r1: &BigUint, n1: &BigUint, r2: &BigUint, n2: &BigUint) -> Option<BigUint> {
    if !n1.gcd(n2).is_one() {
        return None;
    }
    if n2.is_one() {
        return Some(r1 % n1);
    }
    let inv = (n1 % n2).modinv(n2)?;
    let r1s = to_signed(&(r1 % n1));
    let diff = to_signed(&(r2 % n2)) - &r1s;
    let k = mod_signed(&(diff * to_signed(&inv)), n2);
    Some(r1 % n1 + n1 * k)
}

impl PrincipalRing for Zn {
    type Elem = BigUint;

    fn zero(&self) -> BigUint {
        BigUint::zero()
    }

    fn one(&self) -> BigUint {
        self.reduce(BigUint::one())
    }

    fn from_int(&self, n: &BigInt) -> BigUint {
        mod_signed(n, &self.modulus)
    }

    fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        self.reduce(a + b)
    }

    fn sub(&self, a: &BigUint, b: &BigUint) -> BigUint {
        if a >= b {
            a - b
        } else {
            &self.modulus - (b - a)
        }
    }

    fn neg(&self, a: &BigUint) -> BigUint {
        if a.is_zero() {
            BigUint::zero()
        } else {
            &self.modulus - a
        }
    }

    fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        (a * b) % &self.modulus
    }

    fn is_zero(&self, a: &BigUint) -> bool {
        a.is_zero()
    }

    fn is_zero_ring(&self) -> bool {
        self.modulus.is_one()
    }

    fn nilpotency_bound(&self) -> u32 {
        self.bound
    }

    fn is_unit(&self, a: &BigUint) -> bool {
        a.gcd(&self.modulus).is_one()
    }

    fn inverse(&self, a: &BigUint) -> Option<BigUint> {
        if self.is_zero_ring() {
            return Some(BigUint::zero());
        }
        a.modinv(&self.modulus)
    }

    fn try_divide(&self, a: &BigUint, b: &BigUint) -> Option<BigUint> {
        let g = b.gcd(&self.modulus);
        if !(a % &g).is_zero() {
            return None;
        }
        let m = &self.modulus / &g;
        if m.is_one() {
            return Some(BigUint::zero());
        }
        let inv = (b / &g % &m).modinv(&m)?;
        Some((a / &g) * inv % m)
    }

    fn gcd_bezout(&self, a: &BigUint, b: &BigUint) -> (BigUint, BigUint, BigUint) {
        let (h, s, t) = ext_gcd(&to_signed(a), &to_signed(b));
        let (g, s2, _) = ext_gcd(&h, &to_signed(&self.modulus));
        let g = self.reduce(g.to_biguint().expect("gcd is nonnegative"));
        let s = mod_signed(&(&s * &s2), &self.modulus);
        let t = mod_signed(&(&t * &s2), &self.modulus);
        (g, s, t)
    }

    fn colon(&self, a: &BigUint, b: &BigUint) -> BigUint {
        let d = a.gcd(&self.modulus);
        self.reduce(&d / d.gcd(b))
    }

    fn unit_normalizer(&self, a: &BigUint) -> BigUint {
        let g = a.gcd(&self.modulus);
        let m = &self.modulus / &g;
        if m.is_one() {
            return self.one();
        }
        let cof = (a / &g) % &m;
        let inv = cof.modinv(&m).expect("cofactor is a unit modulo n/g");
        self.lift_unit(&inv, &m)
    }

    fn ideal_gen(&self, a: &BigUint) -> BigUint {
        self.reduce(a.gcd(&self.modulus))
    }

    fn ideal_gcd(&self, a: &BigUint, b: &BigUint) -> BigUint {
        self.reduce(a.gcd(b).gcd(&self.modulus))
    }

    fn split(&self, a: &BigUint) -> Result<(Self, Self)> {
        if !self.is_splitting(a) {
            return Err(Error::NotSplitting(format!("{a} in Z/{}", self.modulus)));
        }
        let power = a.modpow(&BigUint::from(self.bound), &self.modulus);
        let n1 = power.gcd(&self.modulus);
        let n2 = &self.modulus / &n1;
        Ok((Zn::new(n1)?, Zn::new(n2)?))
    }

    fn crt(&self, parts: (&Self, &Self), r1: &BigUint, r2: &BigUint) -> Result<BigUint> {
        let (n1, n2) = (&parts.0.modulus, &parts.1.modulus);
        if n1 * n2 != self.modulus {
            return Err(Error::NotCoprime);
        }
        crt_pair(r1, n1, r2, n2).ok_or(Error::NotCoprime)
    }

    fn quotient(&self, c: &BigUint) -> Self {
        let g = c.gcd(&self.modulus);
        Zn::new(g).expect("gcd with modulus is positive")
    }

    fn ann_quotient(&self, c: &BigUint) -> Self {
        let g = c.gcd(&self.modulus);
        Zn::new(&self.modulus / g).expect("quotient modulus is positive")
    }

    fn project(&self, a: &BigUint, target: &Self) -> BigUint {
        a % &target.modulus
    }

    fn lift(&self, a: &BigUint) -> BigUint {
        self.reduce(a.clone())
    }

    fn format_elem(&self, a: &BigUint) -> String {
        a.to_string()
    }

    fn pow(&self, a: &BigUint, exp: u64) -> BigUint {
        a.modpow(&BigUint::from(exp), &self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> Zn {
        Zn::from_u64(n).unwrap()
    }

    fn e(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn arithmetic() {
        let r = z(12);
        assert_eq!(r.mul(&e(7), &e(4)), e(4));
        for a in 0..12 {
            assert_eq!(r.add(&e(a), &r.zero()), e(a));
        }
        assert_eq!(r.sub(&e(3), &e(5)), e(10));
        assert_eq!(r.neg(&e(0)), e(0));
        assert_eq!(r.from_i64(-1), e(11));
    }

    #[test]
    fn divide() {
        let r = z(12);
        assert_eq!(r.try_divide(&e(8), &e(4)), Some(e(2)));
        assert_eq!(r.try_divide(&e(1), &e(1)), Some(e(1)));
        assert_eq!(r.try_divide(&e(3), &e(2)), None);
        assert_eq!(r.try_divide(&e(0), &e(0)), Some(e(0)));
        assert_eq!(r.try_divide(&e(4), &e(0)), None);
    }

    #[test]
    fn divide_is_smallest_solution() {
        let r = z(36);
        for a in 0..36u64 {
            for b in 0..36u64 {
                let scan = (0..36u64).find(|c| (b * c) % 36 == a);
                assert_eq!(r.try_divide(&e(a), &e(b)), scan.map(e), "{a}/{b}");
            }
        }
    }

    #[test]
    fn bezout() {
        let r = z(12);
        let (g, s, t) = r.gcd_bezout(&e(8), &e(6));
        assert_eq!(g, e(2));
        assert_eq!(r.add(&r.mul(&s, &e(8)), &r.mul(&t, &e(6))), e(2));
        assert_eq!(r.gcd_bezout(&e(0), &e(0)), (e(0), e(0), e(0)));
        let (g, s, t) = r.gcd_bezout(&e(5), &e(0));
        assert_eq!((g, s, t), (e(1), e(5), e(0)));
    }

    #[test]
    fn colon_examples() {
        let r = z(12);
        assert_eq!(r.colon(&e(4), &e(2)), e(2));
        assert_eq!(r.colon(&e(0), &e(3)), e(4));
        for a in 0..12 {
            assert_eq!(r.colon(&e(a), &e(1)), r.ideal_gen(&e(a)));
        }
    }

    #[test]
    fn nilpotency_and_splitting() {
        let r = z(12);
        assert!(r.is_nilpotent(&e(6)));
        assert!(r.is_splitting(&e(4)));
        assert!(!r.is_splitting(&e(6)));
        assert!(r.is_unit(&e(1)));
        assert!(r.is_nilpotent(&e(0)));
    }

    #[test]
    fn split_examples() {
        let r = z(12);
        assert_eq!(r.split(&e(2)).unwrap(), (z(4), z(3)));
        assert_eq!(r.split(&e(4)).unwrap(), (z(4), z(3)));
        assert!(matches!(z(100).split(&e(10)), Err(Error::NotSplitting(_))));
    }

    #[test]
    fn crt_examples() {
        let r = z(12);
        let (a, b) = (z(4), z(3));
        assert_eq!(r.crt((&a, &b), &e(0), &e(1)).unwrap(), e(4));
        assert_eq!(r.crt((&a, &b), &e(0), &e(0)).unwrap(), e(0));
        assert_eq!(r.crt((&a, &b), &e(3), &e(2)).unwrap(), e(11));
        assert_eq!(r.crt((&z(2), &z(6)), &e(0), &e(0)), Err(Error::NotCoprime));
    }

    #[test]
    fn ann_quotient_examples() {
        assert_eq!(z(12).ann_quotient(&e(4)), z(3));
        assert_eq!(z(12).ann_quotient(&e(1)), z(12));
        assert_eq!(z(8).ann_quotient(&e(2)), z(4));
        assert!(z(8).ann_quotient(&e(0)).is_zero_ring());
    }

    #[test]
    fn zero_ring() {
        let r = z(1);
        assert!(r.is_zero_ring());
        assert!(r.is_unit(&r.zero()));
        assert_eq!(r.one(), r.zero());
        assert_eq!(r.inverse(&r.zero()), Some(e(0)));
        assert_eq!(r.mul(&e(0), &e(0)), e(0));
    }

    #[test]
    fn unit_normalizer_gives_canonical_generator() {
        for n in 2..60u64 {
            let r = z(n);
            for a in 0..n {
                let w = r.unit_normalizer(&e(a));
                assert!(r.is_unit(&w), "n={n} a={a}");
                assert_eq!(r.mul(&w, &e(a)), r.ideal_gen(&e(a)), "n={n} a={a}");
            }
        }
    }

    #[test]
    fn lift_unit_keeps_residue() {
        let r = z(360);
        for m in [2u64, 3, 4, 5, 6, 8, 9, 10, 12, 18, 20, 40, 45, 72, 90] {
            for x in 1..m {
                if num_integer::gcd(x, m) != 1 {
                    continue;
                }
                let y = r.lift_unit(&e(x), &e(m));
                assert!(r.is_unit(&y));
                assert_eq!(&y % m, e(x));
            }
        }
    }
}
