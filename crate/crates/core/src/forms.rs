//! Homogeneous forms: binary forms `V_d`, biforms `V_{a,b}` and ternary forms.
//!
//! Each wraps an [`MPoly`] together with its declared degree, which is kept
//! even for the zero form. Coefficient vectors are always taken in the
//! descending canonical monomial order, so the first basis element of `V_d`
//! is `X^d` and the first of `V_{a,b}` is `X1^a X2^b`.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::parse::parse_form;
use crate::poly::{MPoly, Ring};
use crate::rat::{binomial, Rat};
use crate::univariate;

fn coefficient_vector(poly: &MPoly, basis: &[Vec<u32>]) -> Vec<Rat> {
    basis.iter().map(|e| poly.coeff(e)).collect()
}

fn poly_from_vector(ring: Ring, basis: &[Vec<u32>], v: &[Rat]) -> Result<MPoly> {
    if v.len() != basis.len() {
        return Err(Error::ArityMismatch { expected: basis.len(), got: v.len() });
    }
    Ok(MPoly::from_terms(ring, basis.iter().cloned().zip(v.iter().cloned())))
}

fn check_ring(poly: &MPoly, ring: Ring) -> Result<()> {
    if poly.ring() != ring {
        return Err(Error::RingMismatch(ring, poly.ring()));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Binary forms

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    degree: u32,
    poly: MPoly,
}

impl BinaryForm {
    pub fn new(degree: u32, poly: MPoly) -> Result<Self> {
        check_ring(&poly, Ring::Binary)?;
        if !poly.is_homogeneous_in(0..2, degree) {
            return Err(Error::NotHomogeneous(format!("{poly} (degree {degree})")));
        }
        Ok(BinaryForm { degree, poly })
    }

    /// Infers the degree; rejects the zero polynomial.
    pub fn from_poly(poly: MPoly) -> Result<Self> {
        check_ring(&poly, Ring::Binary)?;
        if poly.is_zero() {
            return Err(Error::ZeroForm);
        }
        let d = poly.homogeneous_degree_in(0..2).ok_or_else(|| Error::NotHomogeneous(poly.to_string()))?;
        Ok(BinaryForm { degree: d, poly })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::from_poly(parse_form(text, Ring::Binary)?)
    }

    pub fn zero(degree: u32) -> Self {
        BinaryForm { degree, poly: MPoly::zero(Ring::Binary) }
    }

    /// `c * X^i * Y^j`, of degree `i + j`.
    pub fn monomial(i: u32, j: u32, c: Rat) -> Self {
        BinaryForm { degree: i + j, poly: MPoly::monomial(Ring::Binary, vec![i, j], c) }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn poly(&self) -> &MPoly {
        &self.poly
    }

    pub fn into_poly(self) -> MPoly {
        self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// `X^d, X^(d-1) Y, ..., Y^d`.
    pub fn basis_exponents(d: u32) -> Vec<Vec<u32>> {
        (0..=d).map(|k| vec![d - k, k]).collect()
    }

    pub fn basis(d: u32) -> Vec<BinaryForm> {
        Self::basis_exponents(d)
            .into_iter()
            .map(|e| BinaryForm::monomial(e[0], e[1], Rat::from_integer(1.into())))
            .collect()
    }

    pub fn coefficients(&self) -> Vec<Rat> {
        coefficient_vector(&self.poly, &Self::basis_exponents(self.degree))
    }

    pub fn from_coefficients(d: u32, v: &[Rat]) -> Result<Self> {
        Ok(BinaryForm { degree: d, poly: poly_from_vector(Ring::Binary, &Self::basis_exponents(d), v)? })
    }

    /// Plain coefficient of `X^i Y^(d-i)`.
    pub fn coeff_x(&self, i: u32) -> Rat {
        if i > self.degree {
            return Rat::zero();
        }
        self.poly.coeff(&[i, self.degree - i])
    }

    pub fn evaluate(&self, x: &Rat, y: &Rat) -> Rat {
        self.poly.evaluate(&[x.clone(), y.clone()]).expect("binary ring")
    }

    pub fn scale(&self, c: &Rat) -> Self {
        BinaryForm { degree: self.degree, poly: self.poly.scale(c) }
    }

    pub fn checked_add(&self, other: &BinaryForm) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::NotHomogeneous(format!("degree {} + degree {}", self.degree, other.degree)));
        }
        Ok(BinaryForm { degree: self.degree, poly: &self.poly + &other.poly })
    }

    pub fn mul(&self, other: &BinaryForm) -> Self {
        BinaryForm { degree: self.degree + other.degree, poly: &self.poly * &other.poly }
    }

    /// `∂/∂X` (`var = 0`) or `∂/∂Y` (`var = 1`), `order` times.
    pub fn derivative(&self, var: usize, order: u32) -> Self {
        BinaryForm { degree: self.degree.saturating_sub(order), poly: self.poly.differentiate(var, order) }
    }

    /// The form written in the variables `(X1, Y1)` of the biform ring.
    pub fn in_first_pair(&self) -> MPoly {
        self.poly.rename(Ring::Bi, &[0, 1])
    }

    /// The form written in the variables `(X2, Y2)` of the biform ring.
    pub fn in_second_pair(&self) -> MPoly {
        self.poly.rename(Ring::Bi, &[2, 3])
    }

    /// Dehomogenization at `Y = 1` (ascending in the power of `X`), and the
    /// multiplicity of the root at `Y = 0`.
    fn affine_part(&self) -> (Vec<Rat>, u32) {
        let u = univariate::trim((0..=self.degree).map(|i| self.coeff_x(i)).collect());
        let deg = univariate::degree(&u).map(|d| d as u32).unwrap_or(0);
        (u, self.degree - deg)
    }

    fn from_affine(u: &[Rat], y_mult: u32) -> Self {
        let du = univariate::degree(u).map(|d| d as u32).unwrap_or(0);
        let d = du + y_mult;
        let poly = MPoly::from_terms(
            Ring::Binary,
            u.iter().enumerate().map(|(i, c)| (vec![i as u32, d - i as u32], c.clone())),
        );
        BinaryForm { degree: d, poly }
    }

    /// Greatest common divisor, normalized so its dehomogenization is monic.
    /// `gcd(0, f)` is `f` normalized; `gcd(0, 0)` is the zero form of degree 0.
    pub fn gcd(&self, other: &BinaryForm) -> BinaryForm {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => BinaryForm::zero(0),
            (true, false) => other.gcd(other),
            (false, true) => self.gcd(self),
            (false, false) => {
                let (u, m) = self.affine_part();
                let (v, n) = other.affine_part();
                Self::from_affine(&univariate::gcd(&u, &v), m.min(n))
            }
        }
    }

    /// Exact quotient by a divisor. The caller guarantees divisibility.
    pub fn div_exact(&self, divisor: &BinaryForm) -> Result<BinaryForm> {
        if divisor.is_zero() {
            return Err(Error::ZeroForm);
        }
        if divisor.degree > self.degree {
            return Err(Error::Degenerate(format!("degree {} does not divide degree {}", divisor.degree, self.degree)));
        }
        if self.is_zero() {
            return Ok(BinaryForm::zero(self.degree - divisor.degree));
        }
        let (u, m) = self.affine_part();
        let (v, n) = divisor.affine_part();
        let q = univariate::div_exact(&u, &v);
        Ok(Self::from_affine(&q, m - n))
    }

    /// Number of distinct projective roots over the algebraic closure.
    pub fn distinct_root_count(&self) -> u32 {
        if self.is_zero() || self.degree == 0 {
            return 0;
        }
        let g = self.derivative(0, 1).gcd(&self.derivative(1, 1));
        self.degree - g.degree
    }

    /// A nonzero form of positive degree with no repeated projective root.
    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.degree > 0 && self.distinct_root_count() == self.degree
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// `(α_0, ..., α_d)` with `f = Σ C(d,i) α_i X^i Y^(d-i)`.
pub fn binomial_coeffs(f: &BinaryForm) -> Vec<Rat> {
    let d = f.degree();
    (0..=d).map(|i| f.coeff_x(i) / Rat::from_integer(binomial(d, i))).collect()
}

/// Inverse of [`binomial_coeffs`].
pub fn from_binomial_coeffs(d: u32, alphas: &[Rat]) -> Result<BinaryForm> {
    if alphas.len() != d as usize + 1 {
        return Err(Error::ArityMismatch { expected: d as usize + 1, got: alphas.len() });
    }
    let poly = MPoly::from_terms(
        Ring::Binary,
        alphas
            .iter()
            .enumerate()
            .map(|(i, a)| (vec![i as u32, d - i as u32], a * Rat::from_integer(binomial(d, i as u32)))),
    );
    BinaryForm::new(d, poly)
}

// ---------------------------------------------------------------------------
// Biforms

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiForm {
    a: u32,
    b: u32,
    poly: MPoly,
}

impl BiForm {
    pub fn new(a: u32, b: u32, poly: MPoly) -> Result<Self> {
        check_ring(&poly, Ring::Bi)?;
        if !poly.is_homogeneous_in(0..2, a) || !poly.is_homogeneous_in(2..4, b) {
            return Err(Error::NotHomogeneous(format!("{poly} (bidegree ({a},{b}))")));
        }
        Ok(BiForm { a, b, poly })
    }

    pub fn from_poly(poly: MPoly) -> Result<Self> {
        check_ring(&poly, Ring::Bi)?;
        if poly.is_zero() {
            return Err(Error::ZeroForm);
        }
        let not_homog = || Error::NotHomogeneous(poly.to_string());
        let a = poly.homogeneous_degree_in(0..2).ok_or_else(not_homog)?;
        let b = poly.homogeneous_degree_in(2..4).ok_or_else(not_homog)?;
        Ok(BiForm { a, b, poly })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::from_poly(parse_form(text, Ring::Bi)?)
    }

    pub fn zero(a: u32, b: u32) -> Self {
        BiForm { a, b, poly: MPoly::zero(Ring::Bi) }
    }

    pub fn bidegree(&self) -> (u32, u32) {
        (self.a, self.b)
    }

    pub fn poly(&self) -> &MPoly {
        &self.poly
    }

    pub fn into_poly(self) -> MPoly {
        self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// `P1(X1,Y1) * P2(X2,Y2)`.
    pub fn from_product(p1: &BinaryForm, p2: &BinaryForm) -> Self {
        BiForm { a: p1.degree(), b: p2.degree(), poly: &p1.in_first_pair() * &p2.in_second_pair() }
    }

    /// A form of bidegree `(0, d)` in the second pair.
    pub fn from_second(p: &BinaryForm) -> Self {
        BiForm { a: 0, b: p.degree(), poly: p.in_second_pair() }
    }

    /// A form of bidegree `(d, 0)` in the first pair.
    pub fn from_first(p: &BinaryForm) -> Self {
        BiForm { a: p.degree(), b: 0, poly: p.in_first_pair() }
    }

    /// For bidegree `(0, b)`, the binary form in `(X2, Y2)` renamed to `(X, Y)`.
    pub fn second_as_binary(&self) -> Result<BinaryForm> {
        if self.a != 0 {
            return Err(Error::Degenerate(format!("bidegree ({},{}) is not (0,b)", self.a, self.b)));
        }
        let poly = MPoly::from_terms(Ring::Binary, self.poly.terms().map(|(e, c)| (vec![e[2], e[3]], c.clone())));
        BinaryForm::new(self.b, poly)
    }

    /// `X1 * P + Y1 * Q` with `P, Q` of degree `b` in the second pair.
    pub fn from_linear(p: &BinaryForm, q: &BinaryForm) -> Result<Self> {
        if p.degree() != q.degree() {
            return Err(Error::NotHomogeneous(format!("degrees {} and {}", p.degree(), q.degree())));
        }
        let x1 = MPoly::var(Ring::Bi, 0);
        let y1 = MPoly::var(Ring::Bi, 1);
        let poly = &(&x1 * &p.in_second_pair()) + &(&y1 * &q.in_second_pair());
        Ok(BiForm { a: 1, b: p.degree(), poly })
    }

    /// Splits a form of bidegree `(1, b)` as `X1 * P + Y1 * Q`.
    pub fn split_linear(&self) -> Result<(BinaryForm, BinaryForm)> {
        if self.a != 1 {
            return Err(Error::Degenerate(format!("bidegree ({},{}) is not (1,b)", self.a, self.b)));
        }
        let part = |idx: usize| {
            let poly = MPoly::from_terms(
                Ring::Binary,
                self.poly.terms().filter(|(e, _)| e[idx] == 1).map(|(e, c)| (vec![e[2], e[3]], c.clone())),
            );
            BinaryForm::new(self.b, poly).expect("homogeneous")
        };
        Ok((part(0), part(1)))
    }

    /// Monomials of bidegree `(a, b)` in descending canonical order.
    pub fn basis_exponents(a: u32, b: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::with_capacity(((a + 1) * (b + 1)) as usize);
        for k1 in 0..=a {
            for k2 in 0..=b {
                out.push(vec![a - k1, k1, b - k2, k2]);
            }
        }
        out
    }

    pub fn dim(a: u32, b: u32) -> usize {
        ((a + 1) * (b + 1)) as usize
    }

    pub fn basis(a: u32, b: u32) -> Vec<BiForm> {
        Self::basis_exponents(a, b)
            .into_iter()
            .map(|e| BiForm { a, b, poly: MPoly::monomial(Ring::Bi, e, Rat::from_integer(1.into())) })
            .collect()
    }

    pub fn coefficients(&self) -> Vec<Rat> {
        coefficient_vector(&self.poly, &Self::basis_exponents(self.a, self.b))
    }

    pub fn from_coefficients(a: u32, b: u32, v: &[Rat]) -> Result<Self> {
        Ok(BiForm { a, b, poly: poly_from_vector(Ring::Bi, &Self::basis_exponents(a, b), v)? })
    }

    pub fn scale(&self, c: &Rat) -> Self {
        BiForm { a: self.a, b: self.b, poly: self.poly.scale(c) }
    }

    pub fn checked_add(&self, other: &BiForm) -> Result<Self> {
        if self.bidegree() != other.bidegree() {
            return Err(Error::NotHomogeneous(format!("bidegrees {:?} and {:?}", self.bidegree(), other.bidegree())));
        }
        Ok(BiForm { a: self.a, b: self.b, poly: &self.poly + &other.poly })
    }

    pub fn mul(&self, other: &BiForm) -> Self {
        BiForm { a: self.a + other.a, b: self.b + other.b, poly: &self.poly * &other.poly }
    }
}

impl fmt::Display for BiForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

// ---------------------------------------------------------------------------
// Ternary forms

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TernaryForm {
    degree: u32,
    poly: MPoly,
}

impl TernaryForm {
    pub fn new(degree: u32, poly: MPoly) -> Result<Self> {
        check_ring(&poly, Ring::Ternary)?;
        if !poly.is_homogeneous_in(0..3, degree) {
            return Err(Error::NotHomogeneous(format!("{poly} (degree {degree})")));
        }
        Ok(TernaryForm { degree, poly })
    }

    pub fn from_poly(poly: MPoly) -> Result<Self> {
        check_ring(&poly, Ring::Ternary)?;
        if poly.is_zero() {
            return Err(Error::ZeroForm);
        }
        let d = poly.homogeneous_degree_in(0..3).ok_or_else(|| Error::NotHomogeneous(poly.to_string()))?;
        Ok(TernaryForm { degree: d, poly })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::from_poly(parse_form(text, Ring::Ternary)?)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn poly(&self) -> &MPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn basis_exponents(d: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for ex in (0..=d).rev() {
            for ey in (0..=d - ex).rev() {
                out.push(vec![ex, ey, d - ex - ey]);
            }
        }
        out
    }

    pub fn coefficients(&self) -> Vec<Rat> {
        coefficient_vector(&self.poly, &Self::basis_exponents(self.degree))
    }

    pub fn from_coefficients(d: u32, v: &[Rat]) -> Result<Self> {
        Ok(TernaryForm { degree: d, poly: poly_from_vector(Ring::Ternary, &Self::basis_exponents(d), v)? })
    }

    pub fn scale(&self, c: &Rat) -> Self {
        TernaryForm { degree: self.degree, poly: self.poly.scale(c) }
    }
}

impl fmt::Display for TernaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}
