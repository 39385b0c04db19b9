//! Actions of (S)L2 x (S)L2 on biforms, GL3 on ternary forms, and the
//! corresponding Lie algebra actions.
//!
//! Convention: direct substitution on row vectors. A matrix `g` sends a form
//! `F(X, Y)` to `F((X, Y) g)`, i.e. `X ↦ g11 X + g21 Y`, `Y ↦ g12 X + g22 Y`.
//! This is a left action: `act(gh, F) = act(g, act(h, F))`. The derivative of
//! `t ↦ act(I + t x, F)` at `t = 0` is `lie_act(x, F)`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::forms::{BiForm, BinaryForm, TernaryForm};
use crate::linalg::{QMat, Subspace};
use crate::poly::{MPoly, Ring};
use crate::rat::{self, Rat};

/// A 2x2 matrix `[[m0, m1], [m2, m3]]`, row-major.
pub type Mat2 = [Rat; 4];

pub fn mat2(a: i64, b: i64, c: i64, d: i64) -> Mat2 {
    [rat::int(a), rat::int(b), rat::int(c), rat::int(d)]
}

pub fn det2(m: &Mat2) -> Rat {
    &m[0] * &m[3] - &m[1] * &m[2]
}

pub fn mul2(x: &Mat2, y: &Mat2) -> Mat2 {
    [
        &x[0] * &y[0] + &x[1] * &y[2],
        &x[0] * &y[1] + &x[1] * &y[3],
        &x[2] * &y[0] + &x[3] * &y[2],
        &x[2] * &y[1] + &x[3] * &y[3],
    ]
}

pub fn identity2() -> Mat2 {
    mat2(1, 0, 0, 1)
}

/// Substitution images of the variables at `offset`, `offset + 1` of `ring`
/// under the 2x2 matrix `g`.
fn pair_images(ring: Ring, offset: usize, g: &Mat2) -> (MPoly, MPoly) {
    let x = MPoly::var(ring, offset);
    let y = MPoly::var(ring, offset + 1);
    let new_x = &x.scale(&g[0]) + &y.scale(&g[2]);
    let new_y = &x.scale(&g[1]) + &y.scale(&g[3]);
    (new_x, new_y)
}

/// `g · f` for a single binary form.
pub fn act_binary(g: &Mat2, f: &BinaryForm) -> BinaryForm {
    let (x, y) = pair_images(Ring::Binary, 0, g);
    let poly = f.poly().substitute(&[x, y]).expect("binary arity");
    BinaryForm::new(f.degree(), poly).expect("substitution preserves degree")
}

/// `g · W` for a subspace `W` of `V_b` in monomial coordinates.
pub fn act_subspace(g: &Mat2, w: &Subspace) -> Result<Subspace> {
    let b = w.ambient_dim().checked_sub(1).ok_or_else(|| Error::Shape("empty ambient".into()))? as u32;
    let images = w
        .basis_vectors()
        .iter()
        .map(|v| Ok(act_binary(g, &BinaryForm::from_coefficients(b, v)?).coefficients()))
        .collect::<Result<Vec<_>>>()?;
    Subspace::span(w.ambient_dim(), &images)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupPair {
    g1: Mat2,
    g2: Mat2,
}

impl GroupPair {
    pub fn new(g1: Mat2, g2: Mat2) -> Result<Self> {
        if det2(&g1).is_zero() || det2(&g2).is_zero() {
            return Err(Error::Singular);
        }
        Ok(GroupPair { g1, g2 })
    }

    pub fn identity() -> Self {
        GroupPair { g1: identity2(), g2: identity2() }
    }

    /// `(s1 · I, s2 · I)`.
    pub fn scalar(s1: i64, s2: i64) -> Result<Self> {
        Self::new(mat2(s1, 0, 0, s1), mat2(s2, 0, 0, s2))
    }

    /// `[X_i, Y_i] ↦ [Y_i, X_i]` in both factors.
    pub fn swap() -> Self {
        GroupPair { g1: mat2(0, 1, 1, 0), g2: mat2(0, 1, 1, 0) }
    }

    pub fn first(&self) -> &Mat2 {
        &self.g1
    }

    pub fn second(&self) -> &Mat2 {
        &self.g2
    }

    pub fn is_sl(&self) -> bool {
        det2(&self.g1).is_one() && det2(&self.g2).is_one()
    }

    /// The product `self · other` in each factor.
    pub fn compose(&self, other: &GroupPair) -> GroupPair {
        GroupPair { g1: mul2(&self.g1, &other.g1), g2: mul2(&self.g2, &other.g2) }
    }

    pub fn act(&self, f: &BiForm) -> BiForm {
        let (x1, y1) = pair_images(Ring::Bi, 0, &self.g1);
        let (x2, y2) = pair_images(Ring::Bi, 2, &self.g2);
        let poly = f.poly().substitute(&[x1, y1, x2, y2]).expect("bi arity");
        let (a, b) = f.bidegree();
        BiForm::new(a, b, poly).expect("substitution preserves bidegree")
    }
}

/// `g · F`.
pub fn act(g: &GroupPair, f: &BiForm) -> BiForm {
    g.act(f)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct G3Element {
    m: [Rat; 9],
}

impl G3Element {
    pub fn new(m: [Rat; 9]) -> Result<Self> {
        let g = G3Element { m };
        if g.det().is_zero() {
            return Err(Error::Singular);
        }
        Ok(g)
    }

    pub fn from_i64(m: [i64; 9]) -> Result<Self> {
        Self::new(m.map(rat::int))
    }

    /// Substitution sending variable `i` to variable `perm[i]`.
    pub fn permutation(perm: [usize; 3]) -> Self {
        let mut m: [Rat; 9] = std::array::from_fn(|_| Rat::zero());
        for (j, &p) in perm.iter().enumerate() {
            m[p * 3 + j] = Rat::one();
        }
        G3Element::new(m).expect("permutation matrices are invertible")
    }

    pub fn diagonal(a: Rat, b: Rat, c: Rat) -> Result<Self> {
        let z = Rat::zero;
        Self::new([a, z(), z(), z(), b, z(), z(), z(), c])
    }

    pub fn det(&self) -> Rat {
        QMat::new(3, 3, self.m.to_vec()).expect("3x3").determinant().expect("square")
    }

    pub fn act(&self, f: &TernaryForm) -> TernaryForm {
        let images: Vec<MPoly> = (0..3)
            .map(|j| {
                (0..3).fold(MPoly::zero(Ring::Ternary), |acc, i| {
                    &acc + &MPoly::var(Ring::Ternary, i).scale(&self.m[i * 3 + j])
                })
            })
            .collect();
        let poly = f.poly().substitute(&images).expect("ternary arity");
        TernaryForm::new(f.degree(), poly).expect("substitution preserves degree")
    }
}

pub fn act_ternary(g: &G3Element, f: &TernaryForm) -> TernaryForm {
    g.act(f)
}

/// `g · W` for a subspace `W` of ternary forms of degree `d`.
pub fn act_ternary_subspace(g: &G3Element, d: u32, w: &Subspace) -> Result<Subspace> {
    let images = w
        .basis_vectors()
        .iter()
        .map(|v| Ok(g.act(&TernaryForm::from_coefficients(d, v)?).coefficients()))
        .collect::<Result<Vec<_>>>()?;
    Subspace::span(w.ambient_dim(), &images)
}

/// An element of sl2 x sl2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LiePair {
    x1: Mat2,
    x2: Mat2,
}

impl LiePair {
    pub fn new(x1: Mat2, x2: Mat2) -> Result<Self> {
        if !(&x1[0] + &x1[3]).is_zero() || !(&x2[0] + &x2[3]).is_zero() {
            return Err(Error::NotTraceless);
        }
        Ok(LiePair { x1, x2 })
    }

    pub fn zero() -> Self {
        LiePair { x1: mat2(0, 0, 0, 0), x2: mat2(0, 0, 0, 0) }
    }

    /// `h = diag(1, -1)`, `e = X ∂/∂Y`, `f = Y ∂/∂X` for one factor.
    pub fn sl2_basis() -> [Mat2; 3] {
        [mat2(1, 0, 0, -1), mat2(0, 1, 0, 0), mat2(0, 0, 1, 0)]
    }

    /// The six basis elements: `(h,0), (e,0), (f,0), (0,h), (0,e), (0,f)`.
    pub fn basis() -> Vec<LiePair> {
        let z = mat2(0, 0, 0, 0);
        let mut out: Vec<LiePair> = Self::sl2_basis().into_iter().map(|x| LiePair { x1: x, x2: z.clone() }).collect();
        out.extend(Self::sl2_basis().into_iter().map(|x| LiePair { x1: z.clone(), x2: x }));
        out
    }

    pub fn first(&self) -> &Mat2 {
        &self.x1
    }

    pub fn second(&self) -> &Mat2 {
        &self.x2
    }

    pub fn bracket(&self, other: &LiePair) -> LiePair {
        let br = |x: &Mat2, y: &Mat2| {
            let (p, q) = (mul2(x, y), mul2(y, x));
            [&p[0] - &q[0], &p[1] - &q[1], &p[2] - &q[2], &p[3] - &q[3]]
        };
        LiePair { x1: br(&self.x1, &other.x1), x2: br(&self.x2, &other.x2) }
    }

    pub fn act(&self, f: &BiForm) -> BiForm {
        let poly = &derivation(f.poly(), 0, &self.x1) + &derivation(f.poly(), 2, &self.x2);
        let (a, b) = f.bidegree();
        BiForm::new(a, b, poly).expect("derivation preserves bidegree")
    }
}

/// `∂F/∂X (x11 X + x21 Y) + ∂F/∂Y (x12 X + x22 Y)` on the pair at `offset`.
fn derivation(f: &MPoly, offset: usize, x: &Mat2) -> MPoly {
    let (ix, iy) = pair_images(f.ring(), offset, x);
    &(&f.differentiate(offset, 1) * &ix) + &(&f.differentiate(offset + 1, 1) * &iy)
}

/// Action of a single sl2 element on a binary form.
pub fn lie_act_binary(x: &Mat2, f: &BinaryForm) -> BinaryForm {
    BinaryForm::new(f.degree(), derivation(f.poly(), 0, x)).expect("derivation preserves degree")
}

pub fn lie_act(x: &LiePair, f: &BiForm) -> BiForm {
    x.act(f)
}

/// Dimension of `{(x, c) ∈ sl2 x sl2 x Q : x · F = c F}`. Since `F ≠ 0` this
/// is the dimension of the Lie algebra of the stabilizer of `[F]`.
pub fn projective_stabilizer_dim(f: &BiForm) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    let mut cols: Vec<Vec<Rat>> = LiePair::basis().iter().map(|x| x.act(f).coefficients()).collect();
    cols.push(f.scale(&-Rat::one()).coefficients());
    let m = QMat::from_columns(f.coefficients().len(), &cols)?;
    Ok(cols.len() - m.rank())
}

/// Dimension of `{(x, c) ∈ sl2 x Q : x · f_i = c f_i for all i}`, the
/// infinitesimal stabilizer of a point of `P(V_d^{⊕k})`.
pub fn tuple_stabilizer_dim(forms: &[BinaryForm]) -> Result<usize> {
    if forms.iter().all(BinaryForm::is_zero) {
        return Err(Error::ZeroForm);
    }
    let stack = |g: &dyn Fn(&BinaryForm) -> Vec<Rat>| forms.iter().flat_map(g).collect::<Vec<Rat>>();
    let mut cols: Vec<Vec<Rat>> =
        LiePair::sl2_basis().iter().map(|x| stack(&|f: &BinaryForm| lie_act_binary(x, f).coefficients())).collect();
    cols.push(stack(&|f: &BinaryForm| f.scale(&-Rat::one()).coefficients()));
    let m = QMat::from_columns(cols[0].len(), &cols)?;
    Ok(cols.len() - m.rank())
}

/// Dimension of `{x ∈ sl2 : x · W ⊆ W}` for a proper nonzero `W ⊂ V_b`.
pub fn subspace_stabilizer_dim(w: &Subspace) -> Result<usize> {
    let n = w.ambient_dim();
    if w.dim() == 0 || w.dim() >= n {
        return Err(Error::TrivialSubspace { dim: w.dim(), ambient: n });
    }
    let b = (n - 1) as u32;
    let basis: Vec<BinaryForm> =
        w.basis_vectors().iter().map(|v| BinaryForm::from_coefficients(b, v)).collect::<Result<_>>()?;
    let cols = LiePair::sl2_basis()
        .iter()
        .map(|x| {
            let mut col = Vec::with_capacity(n * basis.len());
            for f in &basis {
                col.extend(w.residual(&lie_act_binary(x, f).coefficients())?);
            }
            Ok(col)
        })
        .collect::<Result<Vec<_>>>()?;
    let m = QMat::from_columns(n * basis.len(), &cols)?;
    Ok(3 - m.rank())
}

/// The scalar by which `g` acts on the top exterior power of a `g`-invariant
/// subspace `W ⊂ V_b`.
pub fn det_scalar(g: &Mat2, w: &Subspace) -> Result<Rat> {
    let n = w.ambient_dim();
    let b = n.checked_sub(1).ok_or_else(|| Error::Shape("empty ambient".into()))? as u32;
    let mut cols = Vec::with_capacity(w.dim());
    for v in w.basis_vectors() {
        let image = act_binary(g, &BinaryForm::from_coefficients(b, &v)?).coefficients();
        cols.push(w.coordinates(&image)?.ok_or(Error::NotInvariant)?);
    }
    QMat::from_columns(w.dim(), &cols)?.determinant()
}

/// A one-parameter torus `α ↦ α^twist · F(α^w0 X1, α^w1 Y1, α^w2 X2, α^w3 Y2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Torus {
    pub exponents: [i32; 4],
    pub twist: i32,
}

impl Torus {
    pub fn new(exponents: [i32; 4], twist: i32) -> Self {
        Torus { exponents, twist }
    }

    pub fn monomial_weight(&self, exps: &[u32]) -> i32 {
        self.twist + exps.iter().zip(&self.exponents).map(|(&e, &w)| e as i32 * w).sum::<i32>()
    }

    /// The action of a nonzero scalar `alpha`.
    pub fn act(&self, alpha: &Rat, f: &BiForm) -> BiForm {
        let ipow = |k: i32| {
            let p = rat::pow(alpha, k.unsigned_abs());
            if k < 0 {
                p.recip()
            } else {
                p
            }
        };
        let poly =
            MPoly::from_terms(Ring::Bi, f.poly().terms().map(|(e, c)| (e.clone(), c * ipow(self.monomial_weight(e)))));
        let (a, b) = f.bidegree();
        BiForm::new(a, b, poly).expect("torus preserves bidegree")
    }
}

/// The weight `k` with `α · F = α^k F`, or `None` if `F` is zero or not an
/// eigenvector.
pub fn weight_of(f: &BiForm, torus: &Torus) -> Option<i32> {
    let mut ws = f.poly().terms().map(|(e, _)| torus.monomial_weight(e));
    let first = ws.next()?;
    ws.all(|w| w == first).then_some(first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, int};

    fn bi(s: &str) -> BiForm {
        BiForm::parse(s).unwrap()
    }

    #[test]
    fn scalar_parity() {
        let f = bi("X1^2*X2^3 - 5*Y1^2*X2*Y2^2 + X1*Y1*Y2^3");
        let minus = GroupPair::scalar(-1, -1).unwrap();
        assert_eq!(minus.act(&f), f.scale(&int(-1)));
        let g = bi("X1^3*X2^4 + Y1^3*Y2^4 - 2*X1*Y1^2*X2^2*Y2^2");
        assert_eq!(GroupPair::scalar(1, -1).unwrap().act(&g), g);
        assert_eq!(GroupPair::scalar(-1, 1).unwrap().act(&g), g.scale(&int(-1)));
    }

    #[test]
    fn swap_fixes_c() {
        let c = bi("X1*Y2^2 + Y1*X2^2");
        assert_eq!(GroupPair::swap().act(&c), c);
        assert!(!GroupPair::swap().is_sl());
    }

    #[test]
    fn singular_rejected() {
        assert_eq!(GroupPair::new(mat2(1, 2, 2, 4), identity2()), Err(Error::Singular));
        assert!(G3Element::from_i64([1, 0, 0, 0, 0, 0, 0, 0, 1]).is_err());
        assert_eq!(LiePair::new(mat2(1, 0, 0, 1), mat2(0, 0, 0, 0)), Err(Error::NotTraceless));
    }

    #[test]
    fn ternary_examples() {
        let f = TernaryForm::parse("X^2*Y").unwrap();
        let cyc = G3Element::permutation([1, 2, 0]);
        assert_eq!(cyc.act(&f), TernaryForm::parse("Y^2*Z").unwrap());
        assert_eq!(G3Element::from_i64([1, 0, 0, 0, 1, 0, 0, 0, 1]).unwrap().act(&f), f);
        let xyz = TernaryForm::parse("X*Y*Z").unwrap();
        let d = G3Element::diagonal(int(2), int(3), frac(1, 5)).unwrap();
        assert_eq!(d.act(&xyz), xyz.scale(&frac(6, 5)));
    }

    #[test]
    fn lie_examples() {
        let h1 = LiePair::new(mat2(1, 0, 0, -1), mat2(0, 0, 0, 0)).unwrap();
        let f = bi("X1^3*X2^4");
        assert_eq!(h1.act(&f), f.scale(&int(3)));
        let f2 = LiePair::new(mat2(0, 0, 0, 0), mat2(0, 0, 1, 0)).unwrap();
        assert_eq!(f2.act(&bi("X2^5")), bi("5*X2^4*Y2"));
        assert!(LiePair::zero().act(&f).is_zero());
    }

    #[test]
    fn stabilizer_examples() {
        assert!(projective_stabilizer_dim(&bi("X1^2*X2^3")).unwrap() >= 2);
        assert_eq!(projective_stabilizer_dim(&bi("X1*Y2^2 + Y1*X2^2")).unwrap(), 1);
        assert_eq!(projective_stabilizer_dim(&BiForm::zero(1, 2)), Err(Error::ZeroForm));

        let top = Subspace::span(6, &[crate::rat::ints(&[1, 0, 0, 0, 0, 0])]).unwrap();
        assert_eq!(subspace_stabilizer_dim(&top).unwrap(), 2);
        assert!(subspace_stabilizer_dim(&Subspace::full(6)).is_err());
        assert!(subspace_stabilizer_dim(&Subspace::zero(6)).is_err());
    }

    #[test]
    fn det_scalar_examples() {
        let w3 = Subspace::span(
            6,
            &[
                crate::rat::ints(&[1, 2, 0, 0, 1, 0]),
                crate::rat::ints(&[0, 1, 1, 0, 0, 3]),
                crate::rat::ints(&[0, 0, 0, 1, 1, 1]),
            ],
        )
        .unwrap();
        assert_eq!(det_scalar(&mat2(-1, 0, 0, -1), &w3).unwrap(), int(-1));
        assert_eq!(det_scalar(&identity2(), &w3).unwrap(), int(1));
        let w2 = Subspace::span(6, &w3.basis_vectors()[..2]).unwrap();
        assert_eq!(det_scalar(&mat2(-1, 0, 0, -1), &w2).unwrap(), int(1));
        assert_eq!(det_scalar(&mat2(1, 1, 0, 1), &w2), Err(Error::NotInvariant));
    }

    #[test]
    fn weight_examples() {
        let torus = Torus::new([0, 2, 0, 1], -4);
        assert_eq!(weight_of(&bi("Y1*Y2^6"), &torus), Some(4));
        assert_eq!(weight_of(&bi("X1*X2^2*Y2^4 + Y1*X2^4*Y2^2"), &torus), Some(0));
        assert_eq!(weight_of(&bi("X1*X2^6 + Y1*Y2^6"), &torus), None);
        assert_eq!(weight_of(&bi("X1*X2^6 - 3*Y1*X2^5*Y2"), &Torus::new([0; 4], 0)), Some(0));
        let f = bi("Y1*Y2^6");
        assert_eq!(torus.act(&frac(2, 3), &f), f.scale(&frac(16, 81)));
    }
}
