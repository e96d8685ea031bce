use crate::error::{Error, Result};
use crate::poly::{fun_factor, pivot, Pivot, Poly};
use crate::ring::{sign, PrincipalRing};

/// The resultant `res(f, g)`, equal to the determinant of the Sylvester
/// matrix. A zero polynomial counts as the constant 0, so
/// `res(f, c) = c^deg(f)` and `res(c, d) = 1` for constants.
pub fn res<R: PrincipalRing>(f: &Poly<R>, g: &Poly<R>) -> Result<R::Elem> {
    res_impl(f, g, false)
}

/// Canonical generator of the ideal `(res(f, g))`. Unit factors that do not
/// change the ideal are not computed.
pub fn res_ideal<R: PrincipalRing>(f: &Poly<R>, g: &Poly<R>) -> Result<R::Elem> {
    let ring = f.ring();
    Ok(ring.ideal_gen(&res_impl(f, g, true)?))
}

/// Resultant of `f` with the formal degrees `(n, m)` given the resultant of
/// the same pair at their actual degrees; covers leading coefficients that
/// vanish after passing to a quotient.
pub fn formal_degree_correction<R: PrincipalRing>(
    f: &Poly<R>,
    g: &Poly<R>,
    n: usize,
    m: usize,
    value: &R::Elem,
) -> R::Elem {
    let r = f.ring();
    let f_full = f.degree() == Some(n) && n > 0 || n == 0;
    let g_full = g.degree() == Some(m) && m > 0 || m == 0;
    match (f_full, g_full) {
        (true, true) => value.clone(),
        (false, false) => r.zero(),
        (false, true) => {
            let drop = (n - f.deg0()) as u64;
            let lc = r.pow(&g.lc(), drop);
            r.mul(&r.mul(&sign(r, m as u64 * drop), &lc), value)
        }
        (true, false) => {
            let drop = (m - g.deg0()) as u64;
            r.mul(&r.pow(&f.lc(), drop), value)
        }
    }
}

fn split_res<R: PrincipalRing>(f: &Poly<R>, g: &Poly<R>, a: &R::Elem, ideal_only: bool) -> Result<R::Elem> {
    let ring = f.ring();
    let (n, m) = (f.deg0(), g.deg0());
    let (r1, r2) = ring.split(a)?;
    let part = |s: &R| -> Result<R::Elem> {
        let (fs, gs) = (f.project(s), g.project(s));
        let raw = res_impl(&fs, &gs, ideal_only)?;
        Ok(formal_degree_correction(&fs, &gs, n, m, &raw))
    };
    let (x1, x2) = (part(&r1)?, part(&r2)?);
    ring.crt((&r1, &r2), &x1, &x2)
}

/// `res(f, u)` for a unit `u` of `R[x]` of positive degree, through the
/// reciprocal polynomials: `res(f, u) = lc(i(u))^(deg f - deg f3) res(i(u), f3)`
/// with `f3 = i(f) mod i(u)`.
fn unit_res<R: PrincipalRing>(f: &Poly<R>, u: &Poly<R>, ideal_only: bool) -> Result<R::Elem> {
    let ring = f.ring();
    if ideal_only && ring.is_unit(&f.lc()) {
        return Ok(ring.one());
    }
    let iu = u.reciprocal()?;
    let f3 = f.reciprocal()?.rem(&iu)?;
    let exp = (f.deg0() - f3.deg0()) as u64;
    let inner = res_impl(&iu, &f3, ideal_only)?;
    Ok(ring.mul(&ring.pow(&iu.lc(), exp), &inner))
}

fn res_impl<R: PrincipalRing>(f: &Poly<R>, g: &Poly<R>, ideal_only: bool) -> Result<R::Elem> {
    let r = f.ring().clone();
    if r.is_zero_ring() {
        return Ok(r.zero());
    }
    let mut acc = r.one();
    let (mut f, mut g) = (f.clone(), g.clone());
    loop {
        let (n, m) = (f.deg0(), g.deg0());
        if m == 0 {
            return Ok(r.mul(&acc, &r.pow(&g.coeff(0), n as u64)));
        }
        if n == 0 {
            return Ok(r.mul(&acc, &r.pow(&f.coeff(0), m as u64)));
        }
        if n < m {
            std::mem::swap(&mut f, &mut g);
            acc = r.mul(&acc, &sign(&r, (n * m) as u64));
            continue;
        }
        if n == 1 && m == 1 {
            let d = r.sub(&r.mul(&f.coeff(1), &g.coeff(0)), &r.mul(&f.coeff(0), &g.coeff(1)));
            return Ok(r.mul(&acc, &d));
        }
        let cf = f.content();
        if !r.is_unit(&cf) {
            if r.is_splitting(&cf) {
                return Ok(r.mul(&acc, &split_res(&f, &g, &cf, ideal_only)?));
            }
            f = f.divide_scalar(&cf).expect("content divides every coefficient");
            acc = r.mul(&acc, &r.pow(&cf, m as u64));
            continue;
        }
        let cg = g.content();
        if !r.is_unit(&cg) {
            if r.is_splitting(&cg) {
                return Ok(r.mul(&acc, &split_res(&f, &g, &cg, ideal_only)?));
            }
            g = g.divide_scalar(&cg).expect("content divides every coefficient");
            acc = r.mul(&acc, &r.pow(&cg, n as u64));
            continue;
        }
        match pivot(&g) {
            Pivot::Split(a) => return Ok(r.mul(&acc, &split_res(&f, &g, &a, ideal_only)?)),
            Pivot::AllNilpotent => return Err(Error::Internal("primitive polynomial without pivot".into())),
            Pivot::Unit(0) => return Ok(r.mul(&acc, &unit_res(&f, &g, ideal_only)?)),
            Pivot::Unit(k) if k == m => {
                let lc = g.lc();
                acc = r.mul(&acc, &r.pow(&lc, n as u64));
                g = g.scale(&r.inverse(&lc).expect("pivot is a unit"));
            }
            Pivot::Unit(_) => {
                let ff = fun_factor(&g)?;
                acc = r.mul(&acc, &unit_res(&f, &ff.u, ideal_only)?);
                g = ff.gtilde;
            }
        }
        // g is monic of degree k >= 1: res(f, g) = (-1)^(nk + k d) res(f mod g, g).
        let k = g.deg0();
        let rem = f.rem(&g)?;
        acc = r.mul(&acc, &sign(&r, (n * k + k * rem.deg0()) as u64));
        f = rem;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{det, sylvester};
    use crate::ring::Zn;

    fn p(r: &Zn, c: &[i64]) -> Poly<Zn> {
        Poly::from_i64s(r, c)
    }

    fn check_det(n: u64, f: &[i64], g: &[i64]) {
        let r = Zn::from_u64(n).unwrap();
        let (f, g) = (p(&r, f), p(&r, g));
        let expect = det(&sylvester(&f, &g).unwrap()).unwrap();
        assert_eq!(res(&f, &g).unwrap(), expect, "res({f}; {g}) mod {n}");
        assert_eq!(res_ideal(&f, &g).unwrap(), r.ideal_gen(&expect), "res_ideal({f}; {g}) mod {n}");
    }

    #[test]
    fn examples() {
        let r = Zn::from_u64(4).unwrap();
        assert_eq!(res(&p(&r, &[1, 2, 0, 1]), &p(&r, &[2, 0, 2, 1])).unwrap(), r.elem(1));
        assert_eq!(res(&p(&r, &[2, 0, 2, 1]), &p(&r, &[1, 2, 0, 1])).unwrap(), r.elem(3));
        let r = Zn::from_u64(12).unwrap();
        assert_eq!(res(&p(&r, &[1, 1, 0, 0, 1]), &p(&r, &[2])).unwrap(), r.elem(4));
        let r = Zn::from_u64(7).unwrap();
        assert_eq!(res(&p(&r, &[3, 1]), &p(&r, &[5])).unwrap(), r.elem(5));
        assert_eq!(res(&p(&r, &[5]), &p(&r, &[3, 1])).unwrap(), r.elem(5));
        assert_eq!(res(&p(&r, &[3, 1]), &Poly::zero(&r)).unwrap(), r.elem(0));
        assert_eq!(res(&p(&r, &[3]), &Poly::zero(&r)).unwrap(), r.elem(1));
    }

    #[test]
    fn matches_determinant() {
        check_det(4, &[1, 2, 0, 1], &[2, 0, 2, 1]);
        check_det(8, &[1, 0, 0, 1, 0, 2], &[3, 1, 4]);
        check_det(12, &[3, 2, 1], &[1, 0, 1]);
        check_det(12, &[0, 1, 4], &[5, 3, 0, 2]);
        check_det(36, &[6, 7, 0, 12], &[3, 4, 9]);
        check_det(8, &[1, 2, 2, 4], &[0, 0, 2, 6]);
        check_det(9, &[3, 1, 3], &[1, 3, 6, 3]);
        check_det(100, &[10, 5, 20, 50], &[3, 0, 70, 10, 4]);
    }

    #[test]
    fn degree_correction_signs() {
        let r = Zn::from_u64(97).unwrap();
        // f = 0*x + 5 with formal degree 1, g = x - 3: det [[0,5],[1,-3]] = -5.
        let f = p(&r, &[5]);
        let g = p(&r, &[-3, 1]);
        let raw = res(&f, &g).unwrap();
        assert_eq!(formal_degree_correction(&f, &g, 1, 1, &raw), r.from_i64(-5));
        // f = x - 3, g = 0*x + 5: det [[1,-3],[0,5]] = 5.
        let raw = res(&g, &f).unwrap();
        assert_eq!(formal_degree_correction(&g, &f, 1, 1, &raw), r.from_i64(5));
    }
}
