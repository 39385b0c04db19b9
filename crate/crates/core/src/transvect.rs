//! Transvectants of binary forms and bi-transvectants of biforms.
//!
//! The normalization is fixed by the Cayley sum
//!
//! ```text
//! T^(r)(P, P') = Σ_{i=0..r} (-1)^i C(r,i) ∂^r P/∂X^(r-i)∂Y^i · ∂^r P'/∂X^i∂Y^(r-i)
//! ```
//!
//! with no extra factorial factor, and `T^(r,s)` is the double sum over both
//! variable pairs, so that on decomposable biforms it factors exactly as
//! `T^(r)(P1, P1') · T^(s)(P2, P2')`.

use crate::error::{Error, Result};
use crate::forms::{BiForm, BinaryForm};
use crate::linalg::QMat;
use crate::poly::{MPoly, Ring};
use crate::rat::{binomial, factorial, sign, Rat};

fn check_order(name: &str, r: u32, d1: u32, d2: u32) -> Result<()> {
    if r > d1.min(d2) {
        return Err(Error::IndexOutOfRange(format!("{name} = {r} exceeds min({d1}, {d2})")));
    }
    Ok(())
}

/// The `r`-th transvectant, of degree `d + d' - 2r`.
pub fn transvectant(p: &BinaryForm, q: &BinaryForm, r: u32) -> Result<BinaryForm> {
    check_order("r", r, p.degree(), q.degree())?;
    let mut acc = MPoly::zero(Ring::Binary);
    for i in 0..=r {
        let c = sign(i) * Rat::from_integer(binomial(r, i));
        let dp = p.poly().partial(&[r - i, i]);
        let dq = q.poly().partial(&[i, r - i]);
        acc = &acc + &(&dp * &dq).scale(&c);
    }
    BinaryForm::new(p.degree() + q.degree() - 2 * r, acc)
}

/// `d'! · q(-∂/∂Y, ∂/∂X) p` for `q` of degree `d' <= deg p`.
pub fn apolar_diffop(p: &BinaryForm, q: &BinaryForm) -> Result<BinaryForm> {
    let (d, e) = (p.degree(), q.degree());
    if e > d {
        return Err(Error::IndexOutOfRange(format!("apolar operator of degree {e} on a form of degree {d}")));
    }
    let mut acc = MPoly::zero(Ring::Binary);
    for (exps, c) in q.poly().terms() {
        // X^k Y^(e-k)  ->  (-∂/∂Y)^k (∂/∂X)^(e-k)
        let k = exps[0];
        let term = p.poly().partial(&[e - k, k]).scale(&(sign(k) * c));
        acc = &acc + &term;
    }
    BinaryForm::new(d - e, acc.scale(&Rat::from_integer(factorial(e))))
}

/// `T^(r,s)(F, G)` of bidegree `(a + a' - 2r, b + b' - 2s)`.
pub fn bitransvectant(f: &BiForm, g: &BiForm, r: u32, s: u32) -> Result<BiForm> {
    let ((a, b), (a2, b2)) = (f.bidegree(), g.bidegree());
    check_order("r", r, a, a2)?;
    check_order("s", s, b, b2)?;
    let mut acc = MPoly::zero(Ring::Bi);
    for i in 0..=r {
        let ci = sign(i) * Rat::from_integer(binomial(r, i));
        for j in 0..=s {
            let c = &ci * sign(j) * Rat::from_integer(binomial(s, j));
            let df = f.poly().partial(&[r - i, i, s - j, j]);
            if df.is_zero() {
                continue;
            }
            let dg = g.poly().partial(&[i, r - i, j, s - j]);
            acc = &acc + &(&df * &dg).scale(&c);
        }
    }
    BiForm::new(a + a2 - 2 * r, b + b2 - 2 * s, acc)
}

/// `T^(1,s)` for two forms of bidegree `(1, ·)`, through the identity
/// `T^(1,s)(X1 P + Y1 Q, X1 P' + Y1 Q') = T^(s)(P, Q') - T^(s)(Q, P')`.
pub fn specialized_1s(f: &BiForm, g: &BiForm, s: u32) -> Result<BiForm> {
    let (p, q) = f.split_linear()?;
    let (p2, q2) = g.split_linear()?;
    check_order("s", s, p.degree(), p2.degree())?;
    let plus = transvectant(&p, &q2, s)?;
    let minus = transvectant(&q, &p2, s)?;
    let t = BinaryForm::new(plus.degree(), plus.poly() - minus.poly())?;
    Ok(BiForm::from_second(&t))
}

fn matrix_of<F>(source: (u32, u32), target: (u32, u32), map: F) -> Result<QMat>
where
    F: Fn(&BiForm) -> Result<BiForm>,
{
    let cols =
        BiForm::basis(source.0, source.1).iter().map(|e| Ok(map(e)?.coefficients())).collect::<Result<Vec<_>>>()?;
    QMat::from_columns(BiForm::dim(target.0, target.1), &cols)
}

fn target_bidegree(f: (u32, u32), g: (u32, u32), r: u32, s: u32) -> Result<(u32, u32)> {
    check_order("r", r, f.0, g.0)?;
    check_order("s", s, f.1, g.1)?;
    Ok((f.0 + g.0 - 2 * r, f.1 + g.1 - 2 * s))
}

/// Matrix of `G ↦ T^(r,s)(F, G)` on `V_{a',b'}`, in monomial bases.
pub fn transvectant_matrix(f: &BiForm, r: u32, s: u32, source: (u32, u32)) -> Result<QMat> {
    let target = target_bidegree(f.bidegree(), source, r, s)?;
    matrix_of(source, target, |e| bitransvectant(f, e, r, s))
}

/// Matrix of `H ↦ T^(r,s)(H, G)` on `V_{a',b'}`, in monomial bases.
pub fn transvectant_matrix_right(g: &BiForm, r: u32, s: u32, source: (u32, u32)) -> Result<QMat> {
    let target = target_bidegree(source, g.bidegree(), r, s)?;
    matrix_of(source, target, |e| bitransvectant(e, g, r, s))
}

/// Degrees of the irreducible summands of `V_d ⊗ V_d'`.
pub fn cg_components(d: u32, d2: u32) -> Vec<u32> {
    (0..=d.min(d2)).map(|r| d + d2 - 2 * r).collect()
}
