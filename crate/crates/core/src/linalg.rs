//! Matrices over `Z/nZ`: Sylvester matrices, determinants, Howell form,
//! and the matrix route to reduced resultants and Bézout coefficients.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::zn::{ext_gcd, to_signed};
use crate::ring::{PrincipalRing, Zn};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    ring: Zn,
    rows: usize,
    cols: usize,
    entries: Vec<BigUint>,
}

impl Matrix {
    pub fn new(ring: &Zn, rows: usize, cols: usize, entries: Vec<BigUint>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count does not match shape");
        let entries = entries.into_iter().map(|e| ring.lift(&e)).collect();
        Matrix { ring: ring.clone(), rows, cols, entries }
    }

    pub fn zeros(ring: &Zn, rows: usize, cols: usize) -> Self {
        Matrix { ring: ring.clone(), rows, cols, entries: vec![BigUint::zero(); rows * cols] }
    }

    pub fn identity(ring: &Zn, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn from_rows(ring: &Zn, rows: &[Vec<BigInt>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Parse {
                position: 0,
                message: "rows have different lengths".into(),
                expected: "rows of equal length",
            });
        }
        let entries = rows.iter().flatten().map(|v| ring.from_int(v)).collect();
        Ok(Matrix { ring: ring.clone(), rows: rows.len(), cols, entries })
    }

    pub fn from_i64_rows(ring: &Zn, rows: &[&[i64]]) -> Self {
        let rows: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
        Self::from_rows(ring, &rows).expect("rectangular input")
    }

    pub fn ring(&self) -> &Zn {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigUint {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigUint) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigUint] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigUint>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "incompatible shapes");
        let r = &self.ring;
        let mut out = Matrix::zeros(r, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = BigUint::zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * other.get(k, j);
                }
                out.set(i, j, r.lift(&acc));
            }
        }
        out
    }
}

/// Rows separated by newlines, entries by commas.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "{}", row.join(","))?;
        }
        Ok(())
    }
}

/// Matrix of `(s, t) -> s f + t g` on coefficient vectors in the basis
/// `x^{n+m-1}, ..., x, 1`: `deg g` shifted rows of `f`, then `deg f` of `g`.
pub fn sylvester(f: &Poly<Zn>, g: &Poly<Zn>) -> Result<Matrix> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (n, m) = (f.deg0(), g.deg0());
    let size = n + m;
    let mut s = Matrix::zeros(f.ring(), size, size);
    for i in 0..m {
        for (k, c) in f.coeffs().iter().rev().enumerate() {
            s.set(i, i + k, c.clone());
        }
    }
    for j in 0..n {
        for (k, c) in g.coeffs().iter().rev().enumerate() {
            s.set(m + j, j + k, c.clone());
        }
    }
    Ok(s)
}

/// Determinant of an integer matrix by fraction-free elimination.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Determinant over `Z/nZ`, computed on integer lifts and reduced at the end.
pub fn det(m: &Matrix) -> Result<BigUint> {
    if m.rows != m.cols {
        return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
    }
    let lifted = (0..m.rows).map(|i| m.row(i).iter().map(to_signed).collect()).collect();
    Ok(m.ring.from_int(&bareiss_det(lifted)))
}

fn lin_comb(r: &Zn, x: &[BigUint], cx: &BigUint, y: &[BigUint], cy: &BigUint) -> Vec<BigUint> {
    x.iter()
        .zip(y)
        .map(|(a, b)| r.lift(&(a * cx + b * cy)))
        .collect()
}

fn scaled(r: &Zn, x: &[BigUint], c: &BigUint) -> Vec<BigUint> {
    x.iter().map(|a| r.mul(a, c)).collect()
}

struct Tracked {
    row: Vec<BigUint>,
    comb: Vec<BigUint>,
}

/// Howell form, optionally with each output row expressed as a combination
/// of the input rows.
fn howell_impl(m: &Matrix, track: bool) -> (Matrix, Vec<Vec<BigUint>>) {
    let r = &m.ring;
    let n = r.modulus().clone();
    let c = m.cols;
    let width = if track { m.rows } else { 0 };
    let mut pending: Vec<Tracked> = (0..m.rows)
        .map(|i| {
            let mut comb = vec![BigUint::zero(); width];
            if track {
                comb[i] = r.one();
            }
            Tracked { row: m.row(i).to_vec(), comb }
        })
        .filter(|t| t.row.iter().any(|e| !e.is_zero()))
        .collect();
    let mut h = Matrix::zeros(r, c, c);
    let mut combs = vec![vec![BigUint::zero(); width]; c];
    for col in 0..c {
        let mut pivot: Option<Tracked> = None;
        let mut rest = Vec::new();
        for t in pending {
            if t.row[col].is_zero() {
                rest.push(t);
                continue;
            }
            let Some(p) = pivot.take() else {
                pivot = Some(t);
                continue;
            };
            let a = to_signed(&p.row[col]);
            let b = to_signed(&t.row[col]);
            let (g, s, tt) = ext_gcd(&a, &b);
            let (s, tt) = (r.from_int(&s), r.from_int(&tt));
            let (na, nb) = (r.from_int(&(&a / &g)), r.from_int(&(-(&b / &g))));
            let new_t = Tracked {
                row: lin_comb(r, &p.row, &nb, &t.row, &na),
                comb: lin_comb(r, &p.comb, &nb, &t.comb, &na),
            };
            pivot = Some(Tracked {
                row: lin_comb(r, &p.row, &s, &t.row, &tt),
                comb: lin_comb(r, &p.comb, &s, &t.comb, &tt),
            });
            debug_assert!(new_t.row[col].is_zero());
            if new_t.row.iter().any(|e| !e.is_zero()) {
                rest.push(new_t);
            }
        }
        if let Some(p) = pivot {
            let w = r.unit_normalizer(&p.row[col]);
            let row = scaled(r, &p.row, &w);
            let comb = scaled(r, &p.comb, &w);
            let ann = &n / &row[col];
            let ann_row = scaled(r, &row, &ann);
            if ann_row.iter().any(|e| !e.is_zero()) {
                rest.push(Tracked { row: ann_row, comb: scaled(r, &comb, &ann) });
            }
            for (j, e) in row.into_iter().enumerate() {
                h.set(col, j, e);
            }
            combs[col] = comb;
        }
        pending = rest;
    }
    // Size reduction above each pivot.
    for col in 0..c {
        let d = h.get(col, col).clone();
        if d.is_zero() {
            continue;
        }
        for i in 0..col {
            let q = h.get(i, col) / &d;
            if q.is_zero() {
                continue;
            }
            let neg_q = r.neg(&r.lift(&q));
            let row = lin_comb(r, h.row(i), &r.one(), h.row(col), &neg_q);
            for (j, e) in row.into_iter().enumerate() {
                h.set(i, j, e);
            }
            if track {
                combs[i] = lin_comb(r, &combs[i], &r.one(), &combs[col], &neg_q);
            }
        }
    }
    (h, combs)
}

/// Howell (strong echelon) form: square, pivots on the diagonal dividing
/// `n`, rows spanning the same module as the input.
pub fn howell(m: &Matrix) -> Matrix {
    howell_impl(m, false).0
}

/// Reduces `v` against a Howell form; the result is zero iff `v` lies in
/// the row span. Also returns the multipliers used for each row of `h`.
pub fn reduce_against(h: &Matrix, v: &[BigUint]) -> (Vec<BigUint>, Vec<BigUint>) {
    let r = &h.ring;
    let mut v = v.to_vec();
    let mut mult = vec![BigUint::zero(); h.rows];
    for col in 0..h.cols {
        if v[col].is_zero() {
            continue;
        }
        let d = h.get(col, col);
        if d.is_zero() {
            break;
        }
        let (q, rem) = v[col].div_rem(d);
        if !rem.is_zero() {
            break;
        }
        let neg_q = r.neg(&q);
        v = lin_comb(r, &v, &r.one(), h.row(col), &neg_q);
        mult[col] = q;
    }
    (v, mult)
}

pub fn in_row_span(h: &Matrix, v: &[BigUint]) -> bool {
    reduce_against(h, v).0.iter().all(|e| e.is_zero())
}

/// Canonical generator of `(f, g) ∩ R` from the Howell form of the
/// Sylvester matrix; requires an invertible leading coefficient.
pub fn rres_linalg(f: &Poly<Zn>, g: &Poly<Zn>) -> Result<BigUint> {
    let r = f.ring();
    if !r.is_unit(&f.lc()) && !r.is_unit(&g.lc()) {
        return Err(Error::NoInvertibleLeadingCoefficient);
    }
    if f.is_constant() && g.is_constant() {
        return Ok(r.ideal_gcd(&f.coeff(0), &g.coeff(0)));
    }
    let s = sylvester(f, g)?;
    let h = howell(&s);
    let k = h.rows - 1;
    Ok(r.ideal_gen(h.get(k, k)))
}

/// `(res(f, g), u, v)` with `u f + v g = res(f, g)`, `deg u < deg g`,
/// `deg v < deg f`, by solving the transposed Sylvester system.
pub fn res_bezout_linalg(f: &Poly<Zn>, g: &Poly<Zn>) -> Result<(BigUint, Poly<Zn>, Poly<Zn>)> {
    let r = f.ring();
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() && g.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let s = sylvester(f, g)?;
    let res = det(&s)?;
    let size = s.rows;
    let (h, combs) = howell_impl(&s, true);
    let mut target = vec![BigUint::zero(); size];
    target[size - 1] = res.clone();
    let (left, mult) = reduce_against(&h, &target);
    if left.iter().any(|e| !e.is_zero()) {
        return Err(Error::Internal("resultant not in the Sylvester row span".into()));
    }
    let mut w = vec![BigUint::zero(); size];
    for (q, comb) in mult.iter().zip(&combs) {
        if q.is_zero() {
            continue;
        }
        w = lin_comb(r, &w, &r.one(), comb, q);
    }
    let (n, m) = (f.deg0(), g.deg0());
    let u: Vec<BigUint> = (0..m).map(|k| w[m - 1 - k].clone()).collect();
    let v: Vec<BigUint> = (0..n).map(|k| w[m + n - 1 - k].clone()).collect();
    Ok((res, Poly::new(r.clone(), u), Poly::new(r.clone(), v)))
}

/// Integer Hermite normal form (row style, upper triangular, nonnegative
/// pivots, entries above each pivot reduced into `[0, pivot)`), zero rows
/// dropped.
pub fn integer_hnf(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut work: Vec<Vec<BigInt>> = rows.to_vec();
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    for col in 0..cols {
        let mut pivot: Option<Vec<BigInt>> = None;
        let mut rest = Vec::new();
        for row in work {
            if row[col].is_zero() {
                rest.push(row);
                continue;
            }
            let Some(p) = pivot.take() else {
                pivot = Some(row);
                continue;
            };
            let (g, s, t) = ext_gcd(&p[col], &row[col]);
            let (a, b) = (&p[col] / &g, &row[col] / &g);
            let new_p: Vec<BigInt> = p.iter().zip(&row).map(|(x, y)| &s * x + &t * y).collect();
            let new_r: Vec<BigInt> = p.iter().zip(&row).map(|(x, y)| -&b * x + &a * y).collect();
            pivot = Some(new_p);
            if new_r.iter().any(|e| !e.is_zero()) {
                rest.push(new_r);
            }
        }
        if let Some(mut p) = pivot {
            if p[col].is_negative() {
                p = p.into_iter().map(|e| -e).collect();
            }
            out.push(p);
        }
        work = rest;
    }
    for i in 0..out.len() {
        let pc = (0..cols).find(|&j| !out[i][j].is_zero()).expect("pivot rows are nonzero");
        let d = out[i][pc].clone();
        for k in 0..i {
            let q = out[k][pc].div_floor(&d);
            if q.is_zero() {
                continue;
            }
            let row_i = out[i].clone();
            for (x, y) in out[k].iter_mut().zip(row_i) {
                *x -= &q * y;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> Zn {
        Zn::from_u64(n).unwrap()
    }

    fn p(r: &Zn, c: &[i64]) -> Poly<Zn> {
        Poly::from_i64s(r, c)
    }

    #[test]
    fn sylvester_examples() {
        let r = z(4);
        let s = sylvester(&p(&r, &[1, 2]), &p(&r, &[3, 2])).unwrap();
        assert_eq!(s, Matrix::from_i64_rows(&r, &[&[2, 1], &[2, 3]]));
        let s = sylvester(&p(&r, &[0, 1]), &p(&r, &[0, 1])).unwrap();
        assert_eq!(s, Matrix::from_i64_rows(&r, &[&[1, 0], &[1, 0]]));
        let r = z(12);
        let s = sylvester(&p(&r, &[3, 2, 1]), &p(&r, &[1, 0, 1])).unwrap();
        let expect: &[&[i64]] = &[&[1, 2, 3, 0], &[0, 1, 2, 3], &[1, 0, 1, 0], &[0, 1, 0, 1]];
        assert_eq!(s, Matrix::from_i64_rows(&r, expect));
        assert_eq!(sylvester(&p(&r, &[3]), &p(&r, &[5])).unwrap().rows(), 0);
    }

    #[test]
    fn det_examples() {
        let r = z(4);
        assert_eq!(det(&Matrix::from_i64_rows(&r, &[&[2, 1], &[2, 3]])).unwrap(), BigUint::zero());
        assert_eq!(det(&Matrix::identity(&r, 5)).unwrap(), BigUint::one());
        assert_eq!(det(&Matrix::zeros(&r, 0, 0)).unwrap(), BigUint::one());
        // The integer resultant of these two polynomials is 37.
        let s = sylvester(&p(&r, &[1, 2, 0, 1]), &p(&r, &[2, 0, 2, 1])).unwrap();
        assert_eq!(det(&s).unwrap(), BigUint::from(1u32));
        let s = sylvester(&p(&r, &[2, 0, 2, 1]), &p(&r, &[1, 2, 0, 1])).unwrap();
        assert_eq!(det(&s).unwrap(), BigUint::from(3u32));
        assert_eq!(det(&Matrix::zeros(&r, 2, 3)), Err(Error::NotSquare { rows: 2, cols: 3 }));
    }

    #[test]
    fn bareiss_needs_pivoting() {
        let a = vec![
            vec![BigInt::from(0), BigInt::from(2), BigInt::from(1)],
            vec![BigInt::from(3), BigInt::from(1), BigInt::from(0)],
            vec![BigInt::from(1), BigInt::from(0), BigInt::from(4)],
        ];
        // 0*(4-0) - 2*(12-0) + 1*(0-1) = -25
        assert_eq!(bareiss_det(a), BigInt::from(-25));
    }

    #[test]
    fn howell_examples() {
        let r = z(4);
        let h = howell(&Matrix::from_i64_rows(&r, &[&[2, 1], &[2, 3]]));
        assert_eq!(h, Matrix::from_i64_rows(&r, &[&[2, 1], &[0, 2]]));
        assert_eq!(howell(&Matrix::identity(&r, 3)), Matrix::identity(&r, 3));
        let m = Matrix::from_i64_rows(&r, &[&[2, 0], &[0, 0]]);
        assert_eq!(howell(&m), m);
        for q in [2i64, 3, 5] {
            let r = z((q * q) as u64);
            let h = howell(&Matrix::from_i64_rows(&r, &[&[q, 1], &[q, 1 + q]]));
            assert_eq!(h, Matrix::from_i64_rows(&r, &[&[q, 1], &[0, q]]));
        }
    }

    #[test]
    fn rres_linalg_examples() {
        let r = z(12);
        assert_eq!(rres_linalg(&p(&r, &[3, 2, 1]), &p(&r, &[1, 0, 1])).unwrap(), BigUint::from(4u32));
        assert_eq!(rres_linalg(&p(&r, &[3, 2, 1]), &p(&r, &[1])).unwrap(), BigUint::one());
        let r = z(4);
        assert_eq!(
            rres_linalg(&p(&r, &[1, 2]), &p(&r, &[3, 2])),
            Err(Error::NoInvertibleLeadingCoefficient)
        );
    }

    #[test]
    fn res_bezout_linalg_examples() {
        let r = z(97);
        let (a, b) = (5i64, 17i64);
        let (f, g) = (p(&r, &[-a, 1]), p(&r, &[-b, 1]));
        let (res, u, v) = res_bezout_linalg(&f, &g).unwrap();
        assert_eq!(res, r.from_i64(a - b));
        assert_eq!(u.mul(&f).add(&v.mul(&g)), Poly::constant(&r, res));
        let r = z(4);
        let (f, g) = (p(&r, &[1, 2, 0, 1]), p(&r, &[2, 0, 2, 1]));
        let (res, u, v) = res_bezout_linalg(&f, &g).unwrap();
        assert_eq!(res, BigUint::from(1u32));
        assert!(u.deg0() < 3 && v.deg0() < 3);
        assert_eq!(u.mul(&f).add(&v.mul(&g)), Poly::constant(&r, res));
        let (res, u, v) = res_bezout_linalg(&f, &Poly::one(&r)).unwrap();
        assert_eq!((res, u.is_zero(), v), (BigUint::one(), true, Poly::one(&r)));
    }

    #[test]
    fn integer_hnf_basic() {
        let rows = vec![
            vec![BigInt::from(4), BigInt::from(6)],
            vec![BigInt::from(6), BigInt::from(9)],
            vec![BigInt::from(0), BigInt::from(3)],
        ];
        let h = integer_hnf(&rows);
        assert_eq!(h, vec![vec![BigInt::from(2), BigInt::from(0)], vec![BigInt::from(0), BigInt::from(3)]]);
    }
}
