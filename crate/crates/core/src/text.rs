//! Text formats: ascending coefficient lists, bivariate polynomials,
//! ring descriptions and matrices.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::bivariate::BiPoly;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::Poly;
use crate::ring::{GaloisRing, PrincipalRing, Zn};

pub const INT_GRAMMAR: &str = "a decimal integer such as -12";
pub const POLY_GRAMMAR: &str = "coeff(,coeff)* with decimal coefficients in ascending degree, e.g. 3,2,1";
pub const GALOIS_POLY_GRAMMAR: &str =
    "coeff(,coeff)* where coeff is a decimal integer or [c0 c1 ...] in powers of t";
pub const BIPOLY_GRAMMAR: &str = "poly(;poly)* with x-polynomials in ascending powers of y, e.g. 0,1;1";
pub const MODULUS_GRAMMAR: &str = "a decimal modulus n >= 2, or p^e;k or p^e;k;l0,...,lk for a Galois ring";

/// Seed used when a Galois ring is given without an explicit modulus.
pub const DEFAULT_LAMBDA_SEED: u64 = 1;

fn parse_error(position: usize, message: impl Into<String>, expected: &'static str) -> Error {
    Error::Parse { position, message: message.into(), expected }
}

/// Splits on `sep` outside square brackets, returning each piece with its
/// byte offset.
fn split_top(s: &str, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            c if c == sep && depth == 0 => {
                out.push((start, &s[start..i]));
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push((start, &s[start..]));
    out
}

/// Parses a decimal integer; `offset` is added to reported positions.
pub fn parse_int(s: &str, offset: usize, expected: &'static str) -> Result<BigInt> {
    let lead = s.len() - s.trim_start().len();
    let t = s.trim();
    if t.is_empty() {
        return Err(parse_error(offset + lead, "empty coefficient", expected));
    }
    let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
    let sign_len = t.len() - digits.len();
    if digits.is_empty() {
        return Err(parse_error(offset + lead + sign_len, "missing digits", expected));
    }
    if let Some((i, ch)) = digits.char_indices().find(|(_, c)| !c.is_ascii_digit()) {
        return Err(parse_error(offset + lead + sign_len + i, format!("unexpected character '{ch}'"), expected));
    }
    Ok(t.parse::<BigInt>().expect("validated decimal"))
}

/// Parses a nonnegative decimal integer.
pub fn parse_uint(s: &str, offset: usize, expected: &'static str) -> Result<BigUint> {
    let v = parse_int(s, offset, expected)?;
    v.to_biguint().ok_or_else(|| parse_error(offset, "value must be nonnegative", expected))
}

/// Parses a comma-separated list of decimal integers.
pub fn parse_int_list(s: &str) -> Result<Vec<BigInt>> {
    split_top(s, ',')
        .into_iter()
        .map(|(pos, tok)| parse_int(tok, pos, POLY_GRAMMAR))
        .collect()
}

/// Rings whose elements can be read from a coefficient token.
pub trait ParseElem: PrincipalRing {
    fn grammar(&self) -> &'static str;
    fn parse_elem(&self, tok: &str, offset: usize) -> Result<Self::Elem>;
}

impl ParseElem for Zn {
    fn grammar(&self) -> &'static str {
        POLY_GRAMMAR
    }

    fn parse_elem(&self, tok: &str, offset: usize) -> Result<BigUint> {
        Ok(self.from_int(&parse_int(tok, offset, POLY_GRAMMAR)?))
    }
}

impl ParseElem for GaloisRing {
    fn grammar(&self) -> &'static str {
        GALOIS_POLY_GRAMMAR
    }

    fn parse_elem(&self, tok: &str, offset: usize) -> Result<Vec<BigUint>> {
        let lead = tok.len() - tok.trim_start().len();
        let t = tok.trim();
        let Some(inner) = t.strip_prefix('[') else {
            return Ok(self.from_int(&parse_int(tok, offset, GALOIS_POLY_GRAMMAR)?));
        };
        let Some(inner) = inner.strip_suffix(']') else {
            return Err(parse_error(offset + lead + t.len(), "missing ']'", GALOIS_POLY_GRAMMAR));
        };
        let base = offset + lead + 1;
        let mut acc = self.zero();
        let mut power = self.one();
        let t_elem = self.generator();
        let mut pos = 0;
        for part in inner.split(' ') {
            if !part.is_empty() {
                let c = parse_int(part, base + pos, GALOIS_POLY_GRAMMAR)?;
                acc = self.add(&acc, &self.mul(&self.from_int(&c), &power));
                power = self.mul(&power, &t_elem);
            }
            pos += part.len() + 1;
        }
        Ok(acc)
    }
}

/// Parses a polynomial in ascending-coefficient format.
pub fn parse_poly<R: ParseElem>(ring: &R, s: &str) -> Result<Poly<R>> {
    let coeffs = split_top(s, ',')
        .into_iter()
        .map(|(pos, tok)| ring.parse_elem(tok, pos))
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(ring.clone(), coeffs))
}

/// Parses a bivariate polynomial: `;`-separated x-polynomials, ascending in
/// `y`.
pub fn parse_bipoly(ring: &Zn, s: &str) -> Result<BiPoly> {
    let coeffs = split_top(s, ';')
        .into_iter()
        .map(|(pos, part)| {
            split_top(part, ',')
                .into_iter()
                .map(|(p, tok)| parse_int(tok, pos + p, BIPOLY_GRAMMAR).map(|c| ring.from_int(&c)))
                .collect::<Result<Vec<_>>>()
                .map(|c| Poly::new(ring.clone(), c))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BiPoly::new(ring, coeffs))
}

/// A coefficient ring read from the command line.
#[derive(Debug, Clone, PartialEq)]
pub enum RingSpec {
    Zn(Zn),
    Galois(GaloisRing),
}

/// Parses `n` or `p^e;k[;λ]`.
pub fn parse_modulus(s: &str) -> Result<RingSpec> {
    let parts = split_top(s, ';');
    if parts.len() == 1 {
        let n = parse_uint(s, 0, MODULUS_GRAMMAR)?;
        if n < BigUint::from(2u32) {
            return Err(parse_error(0, "modulus must be at least 2", MODULUS_GRAMMAR));
        }
        return Ok(RingSpec::Zn(Zn::new(n)?));
    }
    if parts.len() > 3 {
        return Err(parse_error(parts[3].0, "too many ';'-separated fields", MODULUS_GRAMMAR));
    }
    let (pos, pe) = parts[0];
    let Some(caret) = pe.find('^') else {
        return Err(parse_error(pos + pe.len(), "missing '^' in p^e", MODULUS_GRAMMAR));
    };
    let p = small(parse_uint(&pe[..caret], pos, MODULUS_GRAMMAR)?, pos)?;
    let e = small(parse_uint(&pe[caret + 1..], pos + caret + 1, MODULUS_GRAMMAR)?, pos + caret + 1)?;
    let (kpos, ktok) = parts[1];
    let k = small(parse_uint(ktok, kpos, MODULUS_GRAMMAR)?, kpos)?;
    let e = u32::try_from(e).map_err(|_| parse_error(pos + caret + 1, "exponent too large", MODULUS_GRAMMAR))?;
    let ring = match parts.get(2) {
        None => GaloisRing::with_degree(p, e, k as usize, DEFAULT_LAMBDA_SEED)?,
        Some(&(lpos, ltok)) => {
            let lambda = split_top(ltok, ',')
                .into_iter()
                .map(|(p2, tok)| parse_uint(tok, lpos + p2, MODULUS_GRAMMAR))
                .collect::<Result<Vec<_>>>()?;
            if lambda.len() != k as usize + 1 {
                return Err(parse_error(lpos, format!("λ needs {} coefficients", k + 1), MODULUS_GRAMMAR));
            }
            GaloisRing::new(p, e, lambda)?
        }
    };
    Ok(RingSpec::Galois(ring))
}

fn small(v: BigUint, pos: usize) -> Result<u64> {
    u64::try_from(v).map_err(|_| parse_error(pos, "value too large", MODULUS_GRAMMAR))
}

/// Formats a ring description in the format accepted by [`parse_modulus`].
pub fn format_modulus(spec: &RingSpec) -> String {
    match spec {
        RingSpec::Zn(r) => r.modulus().to_string(),
        RingSpec::Galois(g) => {
            let lambda: Vec<String> = g.lambda().iter().map(|c| c.to_string()).collect();
            format!("{}^{};{};{}", g.prime(), g.exponent(), g.degree(), lambda.join(","))
        }
    }
}

/// Matrix rows as lines of comma-separated entries.
pub fn format_matrix(m: &Matrix) -> String {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join("\n")
}

/// Polynomial in ascending-coefficient format; `0` for the zero polynomial.
pub fn format_poly<R: PrincipalRing>(p: &Poly<R>) -> String {
    p.to_string()
}

/// Integers as a comma-separated list; `0` when empty.
pub fn format_ints(v: &[BigInt]) -> String {
    if v.is_empty() || v.iter().all(Zero::is_zero) {
        return "0".into();
    }
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}
