use crate::ring::PrincipalRing;

/// Below this length (of the shorter operand) multiplication is schoolbook.
pub const KARATSUBA_CROSSOVER: usize = 32;

fn schoolbook<R: PrincipalRing>(r: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    let mut out = vec![r.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if r.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = r.mul(x, y);
            out[i + j] = r.add(&out[i + j], &t);
        }
    }
    out
}

fn add_into<R: PrincipalRing>(r: &R, out: &mut [R::Elem], offset: usize, src: &[R::Elem]) {
    for (i, c) in src.iter().enumerate() {
        out[offset + i] = r.add(&out[offset + i], c);
    }
}

fn sub_into<R: PrincipalRing>(r: &R, out: &mut [R::Elem], src: &[R::Elem]) {
    for (i, c) in src.iter().enumerate() {
        out[i] = r.sub(&out[i], c);
    }
}

fn sum<R: PrincipalRing>(r: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    let mut out = a.to_vec();
    if b.len() > out.len() {
        out.resize(b.len(), r.zero());
    }
    for (i, c) in b.iter().enumerate() {
        out[i] = r.add(&out[i], c);
    }
    out
}

/// Product of two coefficient slices (ascending), unnormalized, of length
/// `a.len() + b.len() - 1` (empty when either input is empty).
pub fn mul_coeffs<R: PrincipalRing>(r: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    mul_with_crossover(r, a, b, KARATSUBA_CROSSOVER)
}

pub fn mul_with_crossover<R: PrincipalRing>(
    r: &R,
    a: &[R::Elem],
    b: &[R::Elem],
    crossover: usize,
) -> Vec<R::Elem> {
    let (a, b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    if b.is_empty() {
        return Vec::new();
    }
    if b.len() < crossover.max(2) {
        return schoolbook(r, a, b);
    }
    let len = a.len() + b.len() - 1;
    let m = a.len().div_ceil(2);
    let mut out = vec![r.zero(); 2 * a.len() + 1];
    if b.len() <= m {
        let lo = mul_with_crossover(r, &a[..m], b, crossover);
        let hi = mul_with_crossover(r, &a[m..], b, crossover);
        add_into(r, &mut out, 0, &lo);
        add_into(r, &mut out, m, &hi);
    } else {
        let (a0, a1) = a.split_at(m);
        let (b0, b1) = b.split_at(m);
        let z0 = mul_with_crossover(r, a0, b0, crossover);
        let z2 = mul_with_crossover(r, a1, b1, crossover);
        let mut z1 = mul_with_crossover(r, &sum(r, a0, a1), &sum(r, b0, b1), crossover);
        sub_into(r, &mut z1, &z0);
        sub_into(r, &mut z1, &z2);
        add_into(r, &mut out, 0, &z0);
        add_into(r, &mut out, m, &z1);
        add_into(r, &mut out, 2 * m, &z2);
    }
    out.truncate(len);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Zn;
    use num_bigint::BigUint;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn karatsuba_matches_schoolbook() {
        let r = Zn::from_u64(1_000_003 * 12).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let la = rng.gen_range(1..150);
            let lb = rng.gen_range(1..150);
            let a: Vec<BigUint> = (0..la).map(|_| r.elem(rng.gen())).collect();
            let b: Vec<BigUint> = (0..lb).map(|_| r.elem(rng.gen())).collect();
            assert_eq!(mul_with_crossover(&r, &a, &b, 4), schoolbook(&r, &a, &b));
            assert_eq!(mul_coeffs(&r, &a, &b), schoolbook(&r, &a, &b));
        }
    }
}
