//! Biforms as rational curves in `P(V_b)`, and plane-curve linear systems.
//!
//! A biform `F` of bidegree `(a, b)` is read as a family of binary forms in
//! `(X2, Y2)` parametrized by `(X1, Y1)`:
//! `F = Σ_j c_j(X1, Y1) X2^j Y2^(b-j)`. Forms in `(X1, Y1)` are returned as
//! [`BinaryForm`]s in the plain `[X,Y]` ring.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::forms::{BiForm, BinaryForm, TernaryForm};
use crate::linalg::{QMat, Subspace};
use crate::poly::{MPoly, Ring};
use crate::rat::{self, Rat};
use crate::univariate;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CurveMap {
    a: u32,
    components: Vec<BinaryForm>,
}

impl CurveMap {
    pub fn new(a: u32, components: Vec<BinaryForm>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Shape("a curve map needs at least one component".into()));
        }
        if let Some(c) = components.iter().find(|c| c.degree() != a) {
            return Err(Error::NotHomogeneous(format!("component of degree {} in a degree-{a} map", c.degree())));
        }
        if components.iter().all(BinaryForm::is_zero) {
            return Err(Error::ZeroForm);
        }
        Ok(CurveMap { a, components })
    }

    pub fn source_degree(&self) -> u32 {
        self.a
    }

    pub fn target_degree(&self) -> u32 {
        self.components.len() as u32 - 1
    }

    /// `c_j`, the coefficient of `X2^j Y2^(b-j)`.
    pub fn components(&self) -> &[BinaryForm] {
        &self.components
    }

    /// `Σ_j c_j X2^j Y2^(b-j)`.
    pub fn to_biform(&self) -> BiForm {
        let b = self.target_degree();
        let poly = self.components.iter().enumerate().fold(MPoly::zero(Ring::Bi), |acc, (j, c)| {
            let j = j as u32;
            let m = MPoly::monomial(Ring::Bi, vec![0, 0, j, b - j], Rat::one());
            &acc + &(&c.in_first_pair() * &m)
        });
        BiForm::new(self.a, b, poly).expect("bihomogeneous by construction")
    }

    /// The `(a+1) x (b+1)` matrix whose column `j` is the coefficient vector
    /// of `c_j` in `V_a`.
    pub fn coefficient_matrix(&self) -> QMat {
        let cols: Vec<Vec<Rat>> = self.components.iter().map(BinaryForm::coefficients).collect();
        QMat::from_columns(self.a as usize + 1, &cols).expect("uniform component degree")
    }

    /// `Σ_j λ_j c_j`.
    pub fn compose(&self, lambda: &[Rat]) -> Result<BinaryForm> {
        if lambda.len() != self.components.len() {
            return Err(Error::ArityMismatch { expected: self.components.len(), got: lambda.len() });
        }
        let poly =
            self.components.iter().zip(lambda).fold(MPoly::zero(Ring::Binary), |acc, (c, l)| &acc + &c.poly().scale(l));
        BinaryForm::new(self.a, poly)
    }

    /// The gcd of all components, i.e. the base locus of the map.
    pub fn base_locus(&self) -> BinaryForm {
        self.components.iter().fold(BinaryForm::zero(0), |g, c| g.gcd(c))
    }
}

pub fn phi_components(f: &BiForm) -> Result<CurveMap> {
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    let (a, b) = f.bidegree();
    let mut parts: Vec<Vec<(Vec<u32>, Rat)>> = vec![Vec::new(); b as usize + 1];
    for (e, c) in f.poly().terms() {
        parts[e[2] as usize].push((vec![e[0], e[1]], c.clone()));
    }
    let components = parts
        .into_iter()
        .map(|terms| BinaryForm::new(a, MPoly::from_terms(Ring::Binary, terms)))
        .collect::<Result<Vec<_>>>()?;
    CurveMap::new(a, components)
}

/// Projective dimension of the linear span of the curve.
pub fn span_dim(cm: &CurveMap) -> usize {
    cm.coefficient_matrix().rank() - 1
}

/// The linear span of the curve as a subspace of `V_b`, in the monomial
/// coordinates of `V_b` (`X^b, X^(b-1) Y, ..., Y^b`).
pub fn image_subspace(f: &BiForm) -> Result<Subspace> {
    let cm = phi_components(f)?;
    let b = cm.target_degree() as usize;
    // Row i of the coefficient matrix lists the coefficients of X2^j Y2^(b-j);
    // that monomial sits at index b - j of V_b.
    let rows: Vec<Vec<Rat>> =
        cm.coefficient_matrix().row_vecs().into_iter().map(|r| r.into_iter().rev().collect()).collect();
    Subspace::span(b + 1, &rows)
}

/// Degree of `λ ∘ φ` after removing the base locus, for a functional `λ`
/// with entries drawn from `[-9, 9]` by a generator seeded with `seed`.
pub fn hyperplane_degree(cm: &CurveMap, seed: u64) -> u32 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let composed = loop {
        let lambda: Vec<Rat> = (0..cm.components.len()).map(|_| rat::int(rng.gen_range(-9..=9))).collect();
        let c = cm.compose(&lambda).expect("length matches");
        if !c.is_zero() {
            break c;
        }
    };
    let base = cm.base_locus();
    composed.degree() - base.degree()
}

/// Homogeneous Sylvester determinant of forms of degrees `d, e` (either may
/// be zero). Coefficient vectors are in descending powers of `X`.
fn sylvester(p: &[Rat], q: &[Rat]) -> Rat {
    let (d, e) = (p.len() - 1, q.len() - 1);
    let n = d + e;
    if n == 0 {
        return Rat::one();
    }
    let mut m = QMat::zeros(n, n);
    for shift in 0..e {
        for (k, c) in p.iter().enumerate() {
            m.set(shift, shift + k, c.clone());
        }
    }
    for shift in 0..d {
        for (k, c) in q.iter().enumerate() {
            m.set(e + shift, shift + k, c.clone());
        }
    }
    m.determinant().expect("square")
}

/// The resultant of two binary forms of positive degree; zero exactly when
/// they share a projective root.
pub fn sylvester_resultant(p: &BinaryForm, q: &BinaryForm) -> Result<Rat> {
    if p.degree() == 0 || q.degree() == 0 {
        return Err(Error::Degenerate(format!("resultant of forms of degrees {} and {}", p.degree(), q.degree())));
    }
    Ok(sylvester(&p.coefficients(), &q.coefficients()))
}

/// The binary form in `(X1, Y1)` cutting out the branch points of the
/// projection of `F = 0` to the first factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchForm {
    /// `Res_(X2,Y2)(∂F/∂X2, ∂F/∂Y2)`, of degree `2a(b-1)`; zero when degenerate.
    pub form: BinaryForm,
}

impl BranchForm {
    pub fn expected_degree(&self) -> u32 {
        self.form.degree()
    }

    pub fn is_degenerate(&self) -> bool {
        self.form.is_zero()
    }

    /// Number of distinct branch points.
    pub fn root_count(&self) -> u32 {
        self.form.distinct_root_count()
    }

    pub fn is_squarefree(&self) -> bool {
        self.form.is_squarefree()
    }
}

/// Computes the branch form by evaluating the resultant at `D + 1` points of
/// the base and interpolating.
pub fn branch_form(f: &BiForm) -> Result<BranchForm> {
    let (a, b) = f.bidegree();
    if a == 0 || b < 2 {
        return Err(Error::Degenerate(format!("branch form needs a >= 1 and b >= 2, got ({a},{b})")));
    }
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    let cm = phi_components(f)?;
    let big_d = 2 * a * (b - 1);
    let xs: Vec<Rat> = (0..=big_d).map(|t| rat::int(t as i64)).collect();
    let one = Rat::one();
    let ys: Vec<Rat> = xs
        .iter()
        .map(|t| {
            // F(t, 1; X2, Y2) in descending powers of X2.
            let fiber: Vec<Rat> = cm.components.iter().rev().map(|c| c.evaluate(t, &one)).collect();
            let fx: Vec<Rat> =
                fiber[..b as usize].iter().enumerate().map(|(k, c)| c * rat::int((b as usize - k) as i64)).collect();
            let fy: Vec<Rat> = fiber[1..].iter().enumerate().map(|(k, c)| c * rat::int(k as i64 + 1)).collect();
            sylvester(&fx, &fy)
        })
        .collect();
    let u = univariate::interpolate(&xs, &ys);
    let poly = MPoly::from_terms(
        Ring::Binary,
        u.iter().enumerate().map(|(k, c)| (vec![k as u32, big_d - k as u32], c.clone())),
    );
    Ok(BranchForm { form: BinaryForm::new(big_d, poly)? })
}

/// For `F = X1 P + Y1 Q` of bidegree `(1, b)`: the curve `F = 0` is the graph
/// of `[X1 : Y1] = [Q : -P]` and is smooth iff `P, Q` have no common root.
pub fn linear_curve_is_smooth(f: &BiForm) -> Result<bool> {
    let (p, q) = f.split_linear()?;
    if p.is_zero() || q.is_zero() {
        return Ok(false);
    }
    Ok(!sylvester_resultant(&p, &q)?.is_zero())
}

/// `(∂F/∂X1, ∂F/∂Y1, ∂F/∂X2, ∂F/∂Y2)` at a point of `P¹ x P¹`.
pub fn gradient_at(f: &BiForm, point: &[Rat; 4]) -> Result<[Rat; 4]> {
    let mut out: [Rat; 4] = std::array::from_fn(|_| Rat::zero());
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = f.poly().differentiate(i, 1).evaluate(point)?;
    }
    Ok(out)
}

/// The ternary forms of degree `d` singular at every given point, in the
/// monomial coordinates of [`TernaryForm::basis_exponents`].
pub fn singular_system(points: &[[Rat; 3]], d: u32) -> Result<Subspace> {
    let exps = TernaryForm::basis_exponents(d);
    let monomials: Vec<MPoly> = exps.iter().map(|e| MPoly::monomial(Ring::Ternary, e.clone(), Rat::one())).collect();
    let mut rows = Vec::new();
    for p in points {
        if p.iter().all(Zero::is_zero) {
            return Err(Error::Degenerate("the zero vector is not a point of P²".into()));
        }
        let mut value = Vec::with_capacity(monomials.len());
        let mut partials: [Vec<Rat>; 3] = Default::default();
        for m in &monomials {
            value.push(m.evaluate(p)?);
            for (v, row) in partials.iter_mut().enumerate() {
                row.push(m.differentiate(v, 1).evaluate(p)?);
            }
        }
        rows.push(value);
        rows.extend(partials);
    }
    if rows.is_empty() {
        return Ok(Subspace::full(exps.len()));
    }
    Ok(QMat::from_rows(exps.len(), &rows)?.kernel_basis())
}
