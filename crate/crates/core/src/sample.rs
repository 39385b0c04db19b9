//! Seeded random samples with small integer coefficients in `[-9, 9]`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::actions::{mat2, mul2, GroupPair, LiePair, Mat2};
use crate::forms::{BiForm, BinaryForm, TernaryForm};
use crate::linalg::Subspace;
use crate::rat::{self, Rat};

pub const COEFF_BOUND: i64 = 9;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// An independent stream of the generator seeded with `seed`.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

pub fn coeff<R: Rng>(rng: &mut R) -> Rat {
    rat::int(rng.gen_range(-COEFF_BOUND..=COEFF_BOUND))
}

pub fn vector<R: Rng>(rng: &mut R, n: usize) -> Vec<Rat> {
    (0..n).map(|_| coeff(rng)).collect()
}

fn nonzero_vector<R: Rng>(rng: &mut R, n: usize) -> Vec<Rat> {
    loop {
        let v = vector(rng, n);
        if !rat::vec_is_zero(&v) {
            return v;
        }
    }
}

/// A nonzero binary form of degree `d`.
pub fn binary_form<R: Rng>(rng: &mut R, d: u32) -> BinaryForm {
    BinaryForm::from_coefficients(d, &nonzero_vector(rng, d as usize + 1)).expect("length matches")
}

/// A nonzero biform of bidegree `(a, b)`.
pub fn biform<R: Rng>(rng: &mut R, a: u32, b: u32) -> BiForm {
    BiForm::from_coefficients(a, b, &nonzero_vector(rng, BiForm::dim(a, b))).expect("length matches")
}

/// A nonzero ternary form of degree `d`.
pub fn ternary_form<R: Rng>(rng: &mut R, d: u32) -> TernaryForm {
    let n = TernaryForm::basis_exponents(d).len();
    TernaryForm::from_coefficients(d, &nonzero_vector(rng, n)).expect("length matches")
}

/// A subspace of `Q^ambient` of exactly dimension `dim <= ambient`.
pub fn subspace<R: Rng>(rng: &mut R, ambient: usize, dim: usize) -> Subspace {
    assert!(dim <= ambient, "dimension {dim} exceeds ambient {ambient}");
    loop {
        let vs: Vec<Vec<Rat>> = (0..dim).map(|_| vector(rng, ambient)).collect();
        let w = Subspace::span(ambient, &vs).expect("vector lengths match");
        if w.dim() == dim {
            return w;
        }
    }
}

/// An element of SL2 as a product of elementary matrices and a diagonal one.
pub fn sl2<R: Rng>(rng: &mut R) -> Mat2 {
    let small = |rng: &mut R| rng.gen_range(-3i64..=3);
    let upper = mat2(1, small(rng), 0, 1);
    let lower = mat2(1, 0, small(rng), 1);
    let upper2 = mat2(1, small(rng), 0, 1);
    let mut lambda = 0;
    while lambda == 0 {
        lambda = small(rng);
    }
    let l = rat::int(lambda);
    let diag = [l.clone(), rat::int(0), rat::int(0), l.recip()];
    mul2(&mul2(&upper, &lower), &mul2(&upper2, &diag))
}

/// An invertible 2x2 matrix with entries in `[-9, 9]`.
pub fn gl2<R: Rng>(rng: &mut R) -> Mat2 {
    loop {
        let m: Mat2 = std::array::from_fn(|_| coeff(rng));
        if !crate::actions::det2(&m).eq(&rat::int(0)) {
            return m;
        }
    }
}

pub fn sl2_pair<R: Rng>(rng: &mut R) -> GroupPair {
    GroupPair::new(sl2(rng), sl2(rng)).expect("determinant one")
}

pub fn gl2_pair<R: Rng>(rng: &mut R) -> GroupPair {
    GroupPair::new(gl2(rng), gl2(rng)).expect("invertible")
}

/// A traceless 2x2 matrix.
pub fn sl2_lie<R: Rng>(rng: &mut R) -> Mat2 {
    let (h, e, f) = (coeff(rng), coeff(rng), coeff(rng));
    [h.clone(), e, f, -h]
}

pub fn lie_pair<R: Rng>(rng: &mut R) -> LiePair {
    LiePair::new(sl2_lie(rng), sl2_lie(rng)).expect("traceless")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::det2;

    #[test]
    fn deterministic_and_well_formed() {
        let (mut r1, mut r2) = (rng(5), rng(5));
        assert_eq!(biform(&mut r1, 2, 3), biform(&mut r2, 2, 3));
        let (mut s1, mut s2) = (stream_rng(5, 1), stream_rng(5, 2));
        assert_ne!(vector(&mut s1, 8), vector(&mut s2, 8));
        let mut r = rng(11);
        for _ in 0..20 {
            assert_eq!(det2(&sl2(&mut r)), rat::int(1));
            assert!(!biform(&mut r, 1, 4).is_zero());
            assert_eq!(subspace(&mut r, 6, 3).dim(), 3);
        }
    }
}
