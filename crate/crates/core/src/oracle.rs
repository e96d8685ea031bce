//! Slow reference computations used to check the fast algorithms. None of
//! them shares code with the Euclidean resultant path.

use std::collections::VecDeque;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::bivariate::BiPoly;
use crate::linalg::{howell, integer_hnf, Matrix};
use crate::numberfield::{FieldElem, NumberField};
use crate::poly::Poly;
use crate::ring::{PrincipalRing, Zn};

/// Consecutive equal generators required before the extended-degree oracle
/// accepts a value.
pub const STABLE_ROUNDS: usize = 3;
/// Cofactor degrees tried by the extended-degree oracle beyond the
/// Sylvester degrees.
pub const MAX_EXTRA_DEGREE: usize = 64;

/// Generator of the constants reachable as `s f + t g` with
/// `deg s, deg t <= d`, from the Howell form of the stacked shifts.
pub fn rres_at_degree(f: &Poly<Zn>, g: &Poly<Zn>, d: usize) -> BigUint {
    let r = f.ring();
    let width = d + f.deg0().max(g.deg0()) + 1;
    let mut entries = Vec::new();
    let mut rows = 0;
    for p in [f, g] {
        for i in 0..=d {
            // descending basis x^(width-1), ..., x, 1
            let mut row = vec![BigUint::zero(); width];
            for (k, c) in p.coeffs().iter().enumerate() {
                row[width - 1 - (k + i)] = c.clone();
            }
            entries.extend(row);
            rows += 1;
        }
    }
    let h = howell(&Matrix::new(r, rows, width, entries));
    h.get(width - 1, width - 1).clone()
}

/// Canonical generator of `(f, g) ∩ R` by growing the cofactor degree until
/// the generator is unchanged for [`STABLE_ROUNDS`] consecutive degrees.
pub fn rres_extended_degree(f: &Poly<Zn>, g: &Poly<Zn>) -> BigUint {
    let r = f.ring();
    let mut last = None;
    let mut streak = 0;
    // below this the cofactors cannot reach every Sylvester combination
    let start = f.deg0().max(g.deg0());
    for d in start..=start + MAX_EXTRA_DEGREE {
        let cur = r.ideal_gen(&rres_at_degree(f, g, d));
        if last.as_ref() == Some(&cur) {
            streak += 1;
            if streak + 1 >= STABLE_ROUNDS {
                return cur;
            }
        } else {
            streak = 0;
        }
        last = Some(cur);
    }
    last.expect("at least one degree tried")
}

/// Largest module size (`n^width`) [`rres_enumerate`] will walk.
pub const MAX_ENUMERATION: u64 = 1 << 24;

/// Generator of the constants in the `R`-module spanned by `x^i f, x^i g`
/// for `i < cofactor_len`, by breadth-first enumeration of the module.
/// Vectors are packed as base-`n` integers, so this is practical only for
/// tiny rings and degrees; panics above [`MAX_ENUMERATION`].
pub fn rres_enumerate(f: &Poly<Zn>, g: &Poly<Zn>, cofactor_len: usize) -> BigUint {
    let r = f.ring();
    let n = r.modulus().to_u64().filter(|&n| n >= 2).expect("small modulus");
    let width = cofactor_len + f.deg0().max(g.deg0());
    let size = (0..width).try_fold(1u64, |acc, _| acc.checked_mul(n)).filter(|&s| s <= MAX_ENUMERATION);
    let size = size.expect("module too large to enumerate") as usize;
    let digits = |p: &Poly<Zn>| -> Vec<u64> { p.coeffs().iter().map(|c| c.to_u64().expect("reduced")).collect() };
    let mut gens: Vec<Vec<u64>> = Vec::new();
    for p in [f, g] {
        let d = digits(p);
        for i in 0..cofactor_len {
            let mut v = vec![0; width];
            v[i..i + d.len()].copy_from_slice(&d);
            gens.push(v);
        }
    }
    let pack = |v: &[u64]| v.iter().rev().fold(0u64, |acc, &c| acc * n + c) as usize;
    let unpack = |mut x: usize| -> Vec<u64> {
        (0..width)
            .map(|_| {
                let c = x as u64 % n;
                x /= n as usize;
                c
            })
            .collect()
    };
    let mut seen = vec![false; size];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    let mut best = 0u64;
    while let Some(x) = queue.pop_front() {
        if x < n as usize {
            best = best.gcd(&(x as u64));
        }
        let v = unpack(x);
        for gv in &gens {
            let w: Vec<u64> = v.iter().zip(gv).map(|(a, b)| (a + b) % n).collect();
            let y = pack(&w);
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    r.ideal_gen(&BigUint::from(best))
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det<R: PrincipalRing>(ring: &R, m: &[Vec<R::Elem>]) -> R::Elem {
    let n = m.len();
    if n == 0 {
        return ring.one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = ring.zero();
    for j in 0..n {
        if ring.is_zero(&m[0][j]) {
            continue;
        }
        let minor: Vec<Vec<R::Elem>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, e)| e.clone()).collect())
            .collect();
        let term = ring.mul(&m[0][j], &cofactor_det(ring, &minor));
        acc = if j % 2 == 0 { ring.add(&acc, &term) } else { ring.sub(&acc, &term) };
    }
    acc
}

/// Determinant by cofactor expansion with polynomial entries.
pub fn poly_cofactor_det(ring: &Zn, m: &[Vec<Poly<Zn>>]) -> Poly<Zn> {
    let n = m.len();
    if n == 0 {
        return Poly::one(ring);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Poly::zero(ring);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly<Zn>>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, e)| e.clone()).collect())
            .collect();
        let term = m[0][j].mul(&poly_cofactor_det(ring, &minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// `res_y(f, g)` as the determinant of the Sylvester matrix in `y` whose
/// entries are polynomials in `x`.
pub fn bivariate_sylvester_det(f: &BiPoly, g: &BiPoly) -> Poly<Zn> {
    let ring = f.ring();
    let (n, m) = (f.deg_y(), g.deg_y());
    let size = n + m;
    let zero = Poly::zero(ring);
    let coeff = |p: &BiPoly, k: usize| p.coeffs().get(k).cloned().unwrap_or_else(|| zero.clone());
    let mut rows = vec![vec![zero.clone(); size]; size];
    for i in 0..m {
        for k in 0..=n {
            rows[i][i + n - k] = coeff(f, k);
        }
    }
    for i in 0..n {
        for k in 0..=m {
            rows[m + i][i + m - k] = coeff(g, k);
        }
    }
    poly_cofactor_det(ring, &rows)
}

/// Norm and minimum of the ideal `a Z[γ] + α Z[γ]` from the integer Hermite
/// form of its generators. Valid as norm and minimum over `O_K` when
/// `Z[γ]` is maximal.
pub fn ideal_hnf(field: &NumberField, a: &BigUint, alpha: &FieldElem) -> (BigUint, BigUint) {
    let n = field.degree();
    let f = field.minpoly();
    let d = BigInt::from(alpha.denominator().clone());
    let ad = BigInt::from(a.clone()) * &d;
    // d I = a d Z[γ] + num Z[γ], coordinates in the basis γ^(n-1), ..., γ, 1
    let mut rows = Vec::new();
    for j in 0..n {
        let mut row = vec![BigInt::zero(); n];
        row[n - 1 - j] = ad.clone();
        rows.push(row);
    }
    let mut cur: Vec<BigInt> = alpha.numerator().to_vec();
    cur.resize(n, BigInt::zero());
    for _ in 0..n {
        rows.push(cur.iter().rev().cloned().collect());
        // multiply by γ and reduce with the monic f
        let top = cur[n - 1].clone();
        let mut next = vec![BigInt::zero(); n];
        for k in (1..n).rev() {
            next[k] = cur[k - 1].clone();
        }
        for k in 0..n {
            next[k] -= &top * &f[k];
        }
        cur = next;
    }
    let h = integer_hnf(&rows);
    let det: BigInt = h.iter().enumerate().map(|(i, row)| row[i].clone()).product();
    let dn = d.pow(n as u32);
    let norm = (det / &dn).to_biguint().expect("positive determinant");
    // d I ∩ Z is generated by the last pivot; I ∩ Z = (d I ∩ d Z) / d
    let last = h[n - 1][n - 1].clone();
    let min = (last.lcm(&d) / &d).to_biguint().expect("positive pivot");
    (norm, min)
}

/// `u f + v g` for the certificate check of Bézout coefficients.
pub fn combination<R: PrincipalRing>(u: &Poly<R>, f: &Poly<R>, v: &Poly<R>, g: &Poly<R>) -> Poly<R> {
    u.mul(f).add(&v.mul(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(r: &Zn, c: &[i64]) -> Poly<Zn> {
        Poly::from_i64s(r, c)
    }

    #[test]
    fn extended_degree() {
        let r = Zn::from_u64(12).unwrap();
        assert_eq!(rres_extended_degree(&p(&r, &[3, 2, 1]), &p(&r, &[1, 0, 1])), r.elem(4));
        let r = Zn::from_u64(4).unwrap();
        // (2x + 1) is a unit of Z/4[x]: needs cofactor degree 1
        assert_eq!(rres_extended_degree(&p(&r, &[1, 2]), &p(&r, &[2])), r.elem(1));
        assert_eq!(rres_at_degree(&p(&r, &[1, 2]), &p(&r, &[2]), 0), r.elem(2));
    }

    #[test]
    fn enumeration() {
        let r = Zn::from_u64(4).unwrap();
        assert_eq!(rres_enumerate(&p(&r, &[1, 0, 1]), &p(&r, &[2, 2]), 4), r.elem(0));
        assert_eq!(rres_enumerate(&p(&r, &[1, 2]), &p(&r, &[2]), 4), r.elem(1));
        let f = p(&r, &[3, 1, 1]);
        let g = p(&r, &[1, 0, 1]);
        assert_eq!(rres_enumerate(&f, &g, 4), rres_extended_degree(&f, &g));
    }

    #[test]
    fn determinants() {
        let r = Zn::from_u64(4).unwrap();
        let m = vec![vec![r.elem(2), r.elem(1)], vec![r.elem(2), r.elem(3)]];
        assert_eq!(cofactor_det(&r, &m), r.elem(0));
        // S(x^3+2x+1, x^3+2x^2+2) over Z/4
        let rows: Vec<Vec<i64>> = vec![
            vec![1, 0, 2, 1, 0, 0],
            vec![0, 1, 0, 2, 1, 0],
            vec![0, 0, 1, 0, 2, 1],
            vec![1, 2, 0, 2, 0, 0],
            vec![0, 1, 2, 0, 2, 0],
            vec![0, 0, 1, 2, 0, 2],
        ];
        let m: Vec<Vec<BigUint>> = rows.iter().map(|row| row.iter().map(|&x| r.from_i64(x)).collect()).collect();
        assert_eq!(cofactor_det(&r, &m), r.elem(1));
    }

    #[test]
    fn bivariate_determinant() {
        let r = Zn::from_u64(35).unwrap();
        let f = BiPoly::from_i64s(&r, &[&[0, 1], &[], &[1]]);
        let g = BiPoly::from_i64s(&r, &[&[1], &[1]]);
        assert_eq!(bivariate_sylvester_det(&f, &g), p(&r, &[1, 1]));
        let g = BiPoly::from_i64s(&r, &[&[1], &[0, 1]]);
        assert_eq!(bivariate_sylvester_det(&f, &g), p(&r, &[1, 0, 0, 1]));
    }

    #[test]
    fn ideal_module() {
        let k = NumberField::from_i64s(&[1, 0, 1]).unwrap();
        let alpha = FieldElem::from_i64s(&k, &[2, 1], 1).unwrap();
        assert_eq!(ideal_hnf(&k, &BigUint::from(5u32), &alpha), (BigUint::from(5u32), BigUint::from(5u32)));
        let k = NumberField::from_i64s(&[5, 0, 1]).unwrap();
        let alpha = FieldElem::from_i64s(&k, &[1, 1], 1).unwrap();
        assert_eq!(ideal_hnf(&k, &BigUint::from(2u32), &alpha), (BigUint::from(2u32), BigUint::from(2u32)));
        let k = NumberField::from_i64s(&[-2, 0, 0, 1]).unwrap();
        let alpha = FieldElem::from_i64s(&k, &[0, 1], 1).unwrap();
        // (2, γ) with γ^3 = 2 is the ramified prime above 2: norm 2, min 2
        assert_eq!(ideal_hnf(&k, &BigUint::from(2u32), &alpha), (BigUint::from(2u32), BigUint::from(2u32)));
    }
}
