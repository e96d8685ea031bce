//! Resultants of bivariate polynomials with respect to `y` over `Z/nZ`, by
//! evaluation in `x` and interpolation.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::resultant::{formal_degree_correction, res};
use crate::ring::zn::{crt_pair, to_signed};
use crate::ring::{GaloisRing, PrincipalRing, Zn};

/// Seed for the choice of the Galois-ring modulus in interpolation branches.
const LAMBDA_SEED: u64 = 0x5eed;

/// Polynomial in `y` whose coefficients are polynomials in `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct BiPoly {
    ring: Zn,
    coeffs: Vec<Poly<Zn>>,
}

impl BiPoly {
    /// `coeffs` are ascending in `y`; trailing zero coefficients are dropped.
    pub fn new(ring: &Zn, mut coeffs: Vec<Poly<Zn>>) -> Self {
        while coeffs.last().is_some_and(Poly::is_zero) {
            coeffs.pop();
        }
        BiPoly { ring: ring.clone(), coeffs }
    }

    pub fn from_i64s(ring: &Zn, coeffs: &[&[i64]]) -> Self {
        Self::new(ring, coeffs.iter().map(|c| Poly::from_i64s(ring, c)).collect())
    }

    pub fn ring(&self) -> &Zn {
        &self.ring
    }

    pub fn coeffs(&self) -> &[Poly<Zn>] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `y`; 0 for the zero polynomial.
    pub fn deg_y(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Degree in `x`; 0 for the zero polynomial.
    pub fn deg_x(&self) -> usize {
        self.coeffs.iter().map(Poly::deg0).max().unwrap_or(0)
    }

    /// The polynomial in `y` obtained by mapping coefficients into `target`
    /// and substituting `x = a`.
    pub fn eval_x<S: PrincipalRing>(&self, target: &S, a: &S::Elem) -> Poly<S> {
        let coeffs = self.coeffs.iter().map(|c| map_poly(c, target).eval(a)).collect();
        Poly::new(target.clone(), coeffs)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(";"))
    }
}

fn map_poly<S: PrincipalRing>(p: &Poly<Zn>, target: &S) -> Poly<S> {
    let coeffs = p.coeffs().iter().map(|c| target.from_int(&to_signed(c))).collect();
    Poly::new(target.clone(), coeffs)
}

/// Upper bound on `deg_x res_y(f, g)`.
pub fn degree_bound(f: &BiPoly, g: &BiPoly) -> usize {
    g.deg_y() * f.deg_x() + f.deg_y() * g.deg_x()
}

/// One factor of the modulus together with evaluation points whose pairwise
/// differences are units.
#[derive(Debug, Clone)]
pub enum Branch {
    /// `Z/m` with `m` free of primes up to the bound; points `0, ..., B`.
    Direct { ring: Zn, points: Vec<BigUint> },
    /// `Z/p^e` handled inside a Galois extension of degree `k`.
    Galois { base: Zn, ring: GaloisRing, points: Vec<Vec<BigUint>> },
}

impl Branch {
    pub fn modulus(&self) -> &BigUint {
        match self {
            Branch::Direct { ring, .. } | Branch::Galois { base: ring, .. } => ring.modulus(),
        }
    }

    pub fn num_points(&self) -> usize {
        match self {
            Branch::Direct { points, .. } => points.len(),
            Branch::Galois { points, .. } => points.len(),
        }
    }
}

/// Factors the modulus by trial division with the primes up to `bound` and
/// assigns `bound + 1` evaluation points to every factor.
pub fn interpolation_plan(ring: &Zn, bound: usize) -> Result<Vec<Branch>> {
    let mut m = ring.modulus().clone();
    let mut branches = Vec::new();
    let count = bound + 1;
    for p in 2..=bound as u64 {
        if !crate::ring::is_prime_u64(p) {
            continue;
        }
        let pb = BigUint::from(p);
        let mut e = 0u32;
        while !m.is_zero() && (&m % &pb).is_zero() {
            m /= &pb;
            e += 1;
        }
        if e == 0 {
            continue;
        }
        // smallest k with p^k >= bound + 1
        let mut k = 1usize;
        let mut size = p as u128;
        while size < count as u128 {
            size *= p as u128;
            k += 1;
        }
        let gr = GaloisRing::with_degree(p, e, k, LAMBDA_SEED)?;
        let points = gr.residue_lifts().into_iter().take(count).collect();
        let base = Zn::new(pb.pow(e))?;
        branches.push(Branch::Galois { base, ring: gr, points });
    }
    if !m.is_one() {
        let points = (0..count as u64).map(|i| BigUint::from(i) % &m).collect();
        branches.push(Branch::Direct { ring: Zn::new(m)?, points });
    }
    Ok(branches)
}

/// Polynomial of degree below `points.len()` through `(points[i], values[i])`.
/// Pairwise differences of the points must be units.
pub fn interpolate<R: PrincipalRing>(ring: &R, points: &[R::Elem], values: &[R::Elem]) -> Result<Poly<R>> {
    if points.len() != values.len() {
        return Err(Error::Internal("points and values differ in length".into()));
    }
    // Newton divided differences
    let mut dd = values.to_vec();
    for j in 1..points.len() {
        for i in (j..points.len()).rev() {
            let den = ring.sub(&points[i], &points[i - j]);
            let inv = ring
                .inverse(&den)
                .ok_or_else(|| Error::NotAUnit(ring.format_elem(&den)))?;
            dd[i] = ring.mul(&ring.sub(&dd[i], &dd[i - 1]), &inv);
        }
    }
    let mut acc = Poly::zero(ring);
    for i in (0..points.len()).rev() {
        let lin = Poly::new(ring.clone(), vec![ring.neg(&points[i]), ring.one()]);
        acc = acc.mul(&lin).add(&Poly::constant(ring, dd[i].clone()));
    }
    Ok(acc)
}

/// Resultant of `f(a, y)` and `g(a, y)` taken at the formal `y`-degrees of
/// `f` and `g`.
pub fn specialized_res<S: PrincipalRing>(f: &BiPoly, g: &BiPoly, target: &S, a: &S::Elem) -> Result<S::Elem> {
    specialized_res_at(f, g, (f.deg_y(), g.deg_y()), target, a)
}

/// As [`specialized_res`] with the formal degrees given explicitly; they can
/// exceed the actual ones after reduction to a factor of the modulus.
fn specialized_res_at<S: PrincipalRing>(
    f: &BiPoly,
    g: &BiPoly,
    (n, m): (usize, usize),
    target: &S,
    a: &S::Elem,
) -> Result<S::Elem> {
    let (fa, ga) = (f.eval_x(target, a), g.eval_x(target, a));
    let raw = res(&fa, &ga)?;
    Ok(formal_degree_correction(&fa, &ga, n, m, &raw))
}

fn branch_values<S: PrincipalRing>(
    f: &BiPoly,
    g: &BiPoly,
    degrees: (usize, usize),
    ring: &S,
    points: &[S::Elem],
) -> Result<Poly<S>> {
    let values = points
        .iter()
        .map(|a| specialized_res_at(f, g, degrees, ring, a))
        .collect::<Result<Vec<_>>>()?;
    interpolate(ring, points, &values)
}

/// `res_y(f, g)` as a polynomial in `x`.
pub fn res_y(f: &BiPoly, g: &BiPoly) -> Result<Poly<Zn>> {
    if f.ring() != g.ring() {
        return Err(Error::ContextMismatch);
    }
    let ring = f.ring();
    if ring.is_zero_ring() {
        return Ok(Poly::zero(ring));
    }
    let bound = degree_bound(f, g);
    let degrees = (f.deg_y(), g.deg_y());
    let mut acc: Option<(Vec<BigUint>, BigUint)> = None;
    for branch in interpolation_plan(ring, bound)? {
        let coeffs: Vec<BigUint> = match &branch {
            Branch::Direct { ring: zm, points } => {
                let pf = BiPoly::new(zm, f.coeffs.iter().map(|c| c.project(zm)).collect());
                let pg = BiPoly::new(zm, g.coeffs.iter().map(|c| c.project(zm)).collect());
                let interp = branch_values(&pf, &pg, degrees, zm, points)?;
                interp.into_coeffs()
            }
            Branch::Galois { base, ring: gr, points } => {
                let pf = BiPoly::new(base, f.coeffs.iter().map(|c| c.project(base)).collect());
                let pg = BiPoly::new(base, g.coeffs.iter().map(|c| c.project(base)).collect());
                let interp = branch_values(&pf, &pg, degrees, gr, points)?;
                interp
                    .into_coeffs()
                    .into_iter()
                    .map(|c| {
                        if c.iter().skip(1).any(|x| !x.is_zero()) {
                            Err(Error::Internal("interpolated resultant left the base ring".into()))
                        } else {
                            Ok(c.into_iter().next().unwrap_or_default())
                        }
                    })
                    .collect::<Result<_>>()?
            }
        };
        let modulus = branch.modulus().clone();
        acc = Some(match acc {
            None => (coeffs, modulus),
            Some((prev, pm)) => {
                let len = prev.len().max(coeffs.len());
                let zero = BigUint::zero();
                let merged = (0..len)
                    .map(|i| {
                        let a = prev.get(i).unwrap_or(&zero);
                        let b = coeffs.get(i).unwrap_or(&zero);
                        crt_pair(a, &pm, b, &modulus).ok_or(Error::NotCoprime)
                    })
                    .collect::<Result<Vec<_>>>()?;
                (merged, pm * modulus)
            }
        });
    }
    let (coeffs, _) = acc.ok_or_else(|| Error::Internal("empty interpolation plan".into()))?;
    let coeffs = coeffs.iter().map(|c| ring.from_int(&BigInt::from(c.clone()))).collect();
    Ok(Poly::new(ring.clone(), coeffs))
}

/// Number of evaluation points per branch, for reporting.
pub fn plan_summary(plan: &[Branch]) -> Vec<(String, usize)> {
    plan.iter()
        .map(|b| {
            let label = match b {
                Branch::Direct { ring, .. } => format!("Z/{}", ring.modulus()),
                Branch::Galois { ring, .. } => format!(
                    "GR({}^{}, {})",
                    ring.prime(),
                    ring.exponent(),
                    ring.degree().to_u64().unwrap_or(0)
                ),
            };
            (label, b.num_points())
        })
        .collect()
}
