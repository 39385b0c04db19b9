//! Explicit forms and decompositions that the checks verify.

use biforms::rat::{int, Rat};
use biforms::{BiForm, G3Element, Subspace, TernaryForm, Torus};

fn bi(s: &str) -> BiForm {
    BiForm::parse(s).expect("fixture parses")
}

/// `H ∈ V_{1,8}` of the (1,8) non-degeneracy witness.
pub fn h18() -> BiForm {
    bi("X1*X2^2*Y2^6 + Y1*X2^6*Y2^2")
}

/// `H' ∈ V_{1,4}` paired with [`h18`].
pub fn h14() -> BiForm {
    bi("X1*Y2^4 + Y1*X2^4")
}

/// `H ∈ V_{1,6}` whose operator `T^(1,2)(H, ·)` on `V_{1,2}` has full rank.
pub fn h16() -> BiForm {
    bi("X1*X2^3*Y2^3 + Y1*(X2^4*Y2^2 + X2^2*Y2^4)")
}

/// The smooth `(1,2)` curve `C`.
pub fn c12() -> BiForm {
    bi("X1*Y2^2 + Y1*X2^2")
}

/// Bases of the summands `W_0, ..., W_4` of the slice `V ⊂ V_{1,6}`.
pub fn w_summands() -> Vec<Vec<BiForm>> {
    [
        &["X1*X2^2*Y2^4 + Y1*X2^4*Y2^2"][..],
        &["10*X1*X2^3*Y2^3 + 3*Y1*X2^5*Y2", "3*X1*X2*Y2^5 + 10*Y1*X2^3*Y2^3"],
        &["15*X1*X2^4*Y2^2 + Y1*X2^6", "X1*Y2^6 + 15*Y1*X2^2*Y2^4"],
        &["X1*X2^5*Y2", "Y1*X2*Y2^5"],
        &["X1*X2^6", "Y1*Y2^6"],
    ]
    .iter()
    .map(|list| list.iter().map(|s| bi(s)).collect())
    .collect()
}

/// `α · P1(X1, Y1) P2(X2, Y2) = α^-4 P1(X1, α² Y1) P2(X2, α Y2)`.
pub fn slice_torus() -> Torus {
    Torus::new([0, 2, 0, 1], -4)
}

/// The untwisted torus of the stabilizer of `C`.
pub fn stabilizer_torus() -> Torus {
    Torus::new([0, 2, 0, 1], 0)
}

/// Sample values of the torus parameter.
pub fn torus_samples() -> Vec<Rat> {
    vec![int(2), int(-3), Rat::new(5.into(), 7.into())]
}

pub fn ternary_span(d: u32, list: &[&str]) -> Subspace {
    let vs: Vec<Vec<Rat>> =
        list.iter().map(|s| TernaryForm::parse(s).expect("fixture parses").coefficients()).collect();
    Subspace::span(TernaryForm::basis_exponents(d).len(), &vs).expect("fixture lengths")
}

/// A linear system with its claimed direct-sum decomposition.
pub struct Slice {
    pub name: &'static str,
    pub degree: u32,
    pub points: Vec<[i64; 3]>,
    pub expected_dim: usize,
    pub summands: Vec<Vec<&'static str>>,
    pub generators: Vec<(String, G3Element)>,
}

fn diag(a: Rat, b: Rat, c: Rat) -> G3Element {
    G3Element::diagonal(a, b, c).expect("nonzero diagonal")
}

/// `(Z/2) ⋉ C^×` fixing `[0,1,0]` and the conic `XZ = Y²`.
pub fn cubic_generators() -> Vec<(String, G3Element)> {
    let mut g = vec![("[X,Y,Z] -> [Z,Y,X]".to_string(), G3Element::permutation([2, 1, 0]))];
    for a in torus_samples() {
        g.push((format!("diag({}, 1, {})", a.recip(), a), diag(a.recip(), int(1), a.clone())));
    }
    g
}

/// `S_3 ⋉ (C^×)^3` fixing `[1,0,0] + [0,1,0] + [0,0,1]`.
pub fn triangle_generators() -> Vec<(String, G3Element)> {
    let mut g = vec![
        ("(X Y)".to_string(), G3Element::permutation([1, 0, 2])),
        ("(X Y Z)".to_string(), G3Element::permutation([1, 2, 0])),
    ];
    let ts = [
        (int(2), int(-1), Rat::new(1.into(), 3.into())),
        (int(-5), int(7), int(1)),
        (int(1), Rat::new(2.into(), 9.into()), int(4)),
    ];
    for (a, b, c) in ts {
        g.push((format!("diag({a}, {b}, {c})"), diag(a, b, c)));
    }
    g
}

pub fn slices() -> Vec<Slice> {
    vec![
        Slice {
            name: "cubics singular at [0,1,0]",
            degree: 3,
            points: vec![[0, 1, 0]],
            expected_dim: 7,
            summands: vec![vec!["X*Y*Z"], vec!["X^2*Z", "Z^2*X"], vec!["X^2*Y", "Y*Z^2"], vec!["X^3", "Z^3"]],
            generators: cubic_generators(),
        },
        Slice {
            name: "conics",
            degree: 2,
            points: vec![],
            expected_dim: 6,
            summands: vec![vec!["X^2", "Y^2", "Z^2"], vec!["X*Y", "Y*Z", "Z*X"]],
            generators: triangle_generators(),
        },
        Slice {
            name: "conics singular at [0,1,0]",
            degree: 2,
            points: vec![[0, 1, 0]],
            expected_dim: 3,
            summands: vec![vec!["X^2", "Z^2"], vec!["X*Z"]],
            generators: cubic_generators(),
        },
        Slice {
            name: "quartics singular at [1,0,0] + [0,1,0] + [0,0,1]",
            degree: 4,
            points: vec![[1, 0, 0], [0, 1, 0], [0, 0, 1]],
            expected_dim: 6,
            summands: vec![vec!["X^2*Y^2", "Y^2*Z^2", "Z^2*X^2"], vec!["X^2*Y*Z", "Y^2*Z*X", "Z^2*X*Y"]],
            generators: triangle_generators(),
        },
    ]
}

/// The bidegrees sampled for the branch, hyperplane and span checks.
pub const CURVE_GRID: [(u32, u32); 7] = [(1, 4), (1, 6), (1, 8), (2, 3), (2, 4), (2, 5), (3, 4)];

/// `b` values of the almost-freeness samples; every `a < b` is used.
pub const ALMOST_FREE_B: std::ops::RangeInclusive<u32> = 5..=8;
