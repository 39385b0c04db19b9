//! Dense exact linear algebra over `Q`.
//!
//! Elimination clears denominators row by row and runs a fraction-free
//! (Bareiss) forward pass over the integers; the reduced echelon form is then
//! recovered by exact back-substitution. Subspaces are stored by the reduced
//! row-echelon form of a basis, so two subspaces are equal iff their stored
//! representations are equal.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: QMat,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl QMat {
    pub fn new(rows: usize, cols: usize, data: Vec<Rat>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(QMat { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rat::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<Rat>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Shape(format!("row of length {} in a matrix with {cols} columns", r.len())));
            }
            data.extend(r.iter().cloned());
        }
        Ok(QMat { rows: rows.len(), cols, data })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, cols: &[Vec<Rat>]) -> Result<Self> {
        Ok(Self::from_rows(rows, cols)?.transpose())
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<Rat>> = rows.iter().map(|r| crate::rat::ints(r)).collect();
        Self::from_rows(cols, &rows).expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> QMat {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &QMat) -> Result<QMat> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!("{}x{} times {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if v.len() != self.cols {
            return Err(Error::ArityMismatch { expected: self.cols, got: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).filter(|(a, _)| !a.is_zero()).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Row-wise integer form: each row multiplied by the lcm of its denominators.
    /// Returns the integer rows and the per-row scale factors.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
        let mut rows = Vec::with_capacity(self.rows);
        let mut scales = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let r = self.row(i);
            let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            rows.push(r.iter().map(|x| x.numer() * (&l / x.denom())).collect());
            scales.push(l);
        }
        (rows, scales)
    }

    /// Fraction-free forward elimination in place. Returns the pivot columns
    /// and the number of row swaps.
    fn bareiss(a: &mut [Vec<BigInt>], cols: usize) -> (Vec<usize>, usize) {
        let n = a.len();
        let mut prev = BigInt::one();
        let mut pivots = Vec::new();
        let mut swaps = 0;
        let mut r = 0;
        for c in 0..cols {
            if r == n {
                break;
            }
            let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) else { continue };
            if p != r {
                a.swap(p, r);
                swaps += 1;
            }
            let (top, bottom) = a.split_at_mut(r + 1);
            let piv_row = &top[r];
            for row in bottom.iter_mut() {
                let f = row[c].clone();
                for j in c + 1..cols {
                    let v = &piv_row[c] * &row[j] - &f * &piv_row[j];
                    let (q, rem) = v.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                    row[j] = q;
                }
                row[c] = BigInt::zero();
            }
            prev = a[r][c].clone();
            pivots.push(c);
            r += 1;
        }
        (pivots, swaps)
    }

    pub fn rref(&self) -> Rref {
        let (mut a, _) = self.integer_rows();
        let (pivots, _) = Self::bareiss(&mut a, self.cols);
        let rank = pivots.len();
        let mut m: Vec<Vec<Rat>> = a.into_iter().map(|r| r.into_iter().map(Rat::from_integer).collect()).collect();
        for (k, &c) in pivots.iter().enumerate().rev() {
            let p = m[k][c].clone();
            for x in m[k].iter_mut().skip(c) {
                *x /= &p;
            }
            let pivot_row = m[k].clone();
            for row in m.iter_mut().take(k) {
                let f = row[c].clone();
                if f.is_zero() {
                    continue;
                }
                for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        let matrix = Self::from_rows(self.cols, &m).expect("shape preserved");
        Rref { matrix, rank, pivots }
    }

    pub fn rank(&self) -> usize {
        let (mut a, _) = self.integer_rows();
        Self::bareiss(&mut a, self.cols).0.len()
    }

    pub fn kernel_basis(&self) -> Subspace {
        let Rref { matrix, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let vectors: Vec<Vec<Rat>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![Rat::zero(); self.cols];
                v[f] = Rat::one();
                for (k, &p) in pivots.iter().enumerate() {
                    v[p] = -matrix.get(k, f).clone();
                }
                v
            })
            .collect();
        Subspace::span(self.cols, &vectors).expect("kernel vectors have ambient length")
    }

    pub fn column_space(&self) -> Subspace {
        Subspace::from_matrix(&self.transpose())
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::from_matrix(self)
    }

    pub fn determinant(&self) -> Result<Rat> {
        if self.rows != self.cols {
            return Err(Error::Shape(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rat::one());
        }
        let (mut a, scales) = self.integer_rows();
        let (pivots, swaps) = Self::bareiss(&mut a, n);
        if pivots.len() < n {
            return Ok(Rat::zero());
        }
        let mut det = Rat::from_integer(a[n - 1][n - 1].clone());
        if swaps % 2 == 1 {
            det = -det;
        }
        let scale: BigInt = scales.iter().product();
        Ok(det / Rat::from_integer(scale))
    }

    /// Maximal minors of a tall matrix: one `cols x cols` determinant per
    /// choice of `cols` rows, row subsets in lexicographic order. These are
    /// the Plücker coordinates of the column span.
    pub fn top_minors(&self) -> Result<Vec<Rat>> {
        if self.cols > self.rows {
            return Err(Error::Shape(format!("top minors of a {}x{} matrix need rows >= cols", self.rows, self.cols)));
        }
        (0..self.rows)
            .combinations(self.cols)
            .map(|rows| {
                let sub: Vec<Vec<Rat>> = rows.iter().map(|&i| self.row(i).to_vec()).collect();
                Self::from_rows(self.cols, &sub)?.determinant()
            })
            .collect()
    }
}

impl fmt::Display for QMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let r: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", r.join(", "))?;
        }
        Ok(())
    }
}

/// A linear subspace of `Q^n`, held as the reduced row-echelon basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: QMat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: QMat::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_matrix(&QMat::identity(ambient))
    }

    /// The row space of `m`.
    pub fn from_matrix(m: &QMat) -> Self {
        let Rref { matrix, rank, pivots } = m.rref();
        let rows: Vec<Vec<Rat>> = (0..rank).map(|i| matrix.row(i).to_vec()).collect();
        Subspace { ambient: m.cols, basis: QMat::from_rows(m.cols, &rows).expect("shape"), pivots }
    }

    pub fn span(ambient: usize, vectors: &[Vec<Rat>]) -> Result<Self> {
        Ok(Self::from_matrix(&QMat::from_rows(ambient, vectors)?))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    /// Canonical basis rows.
    pub fn basis(&self) -> &QMat {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rat>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection along the canonical basis: zero exactly when
    /// `v` lies in the subspace. Linear in `v`.
    pub fn residual(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if v.len() != self.ambient {
            return Err(Error::ArityMismatch { expected: self.ambient, got: v.len() });
        }
        let mut r = v.to_vec();
        for (k, &p) in self.pivots.iter().enumerate() {
            let f = r[p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in r.iter_mut().zip(self.basis.row(k)) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        Ok(r)
    }

    pub fn contains(&self, v: &[Rat]) -> Result<bool> {
        Ok(crate::rat::vec_is_zero(&self.residual(v)?))
    }

    /// Coordinates of a member `v` in the canonical basis.
    pub fn coordinates(&self, v: &[Rat]) -> Result<Option<Vec<Rat>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool> {
        if self.ambient != other.ambient {
            return Err(Error::ArityMismatch { expected: self.ambient, got: other.ambient });
        }
        Ok(self == other)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        for v in self.basis_vectors() {
            if !other.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(Error::ArityMismatch { expected: self.ambient, got: other.ambient });
        }
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Subspace::span(self.ambient, &rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, ints};

    #[test]
    fn rref_examples() {
        let id = QMat::identity(3);
        let r = id.rref();
        assert_eq!((r.matrix.clone(), r.rank), (id, 3));
        let z = QMat::zeros(2, 3);
        assert_eq!(z.rref().rank, 0);
        assert_eq!(z.rref().matrix, z);
        let m = QMat::from_i64(&[&[1, 2], &[2, 4]]);
        let r = m.rref();
        assert_eq!(r.matrix, QMat::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(QMat::identity(3).kernel_basis().dim(), 0);
        let k = QMat::from_i64(&[&[1, 1]]).kernel_basis();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&ints(&[1, -1])).unwrap());
        assert!(!k.contains(&ints(&[1, 1])).unwrap());
    }

    #[test]
    fn column_space_examples() {
        assert_eq!(QMat::identity(2).column_space(), Subspace::full(2));
        assert_eq!(QMat::zeros(3, 2).column_space(), Subspace::zero(3));
        let s = QMat::from_i64(&[&[1], &[2]]).column_space();
        assert_eq!(s, Subspace::span(2, &[ints(&[1, 2])]).unwrap());
    }

    #[test]
    fn subspace_membership_and_equality() {
        let a = Subspace::span(2, &[ints(&[1, 0]), ints(&[0, 1])]).unwrap();
        let b = Subspace::span(2, &[ints(&[1, 1]), ints(&[1, -1])]).unwrap();
        assert!(a.equals(&b).unwrap());
        let w = Subspace::span(3, &[ints(&[1, 2, 3]), ints(&[0, 1, 1])]).unwrap();
        for v in w.basis_vectors() {
            assert!(w.contains(&v).unwrap());
        }
        assert!(w.contains(&ints(&[0, 0, 0])).unwrap());
        assert!(w.contains(&ints(&[1, 3, 4])).unwrap());
        assert!(w.equals(&a).is_err());
        assert!(w.contains(&ints(&[1, 0])).is_err());
    }

    #[test]
    fn top_minor_examples() {
        assert_eq!(QMat::identity(2).top_minors().unwrap(), vec![int(1)]);
        let m = QMat::from_columns(3, &[ints(&[1, 0, 0]), ints(&[0, 1, 0])]).unwrap();
        assert_eq!(m.top_minors().unwrap(), ints(&[1, 0, 0]));
        let deficient = QMat::from_columns(3, &[ints(&[1, 2, 3]), ints(&[2, 4, 6])]).unwrap();
        assert!(crate::rat::vec_is_zero(&deficient.top_minors().unwrap()));
        assert!(QMat::zeros(2, 3).top_minors().is_err());
    }

    #[test]
    fn determinants() {
        assert_eq!(QMat::from_i64(&[&[0, 1], &[1, 0]]).determinant().unwrap(), int(-1));
        assert_eq!(QMat::from_i64(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]).determinant().unwrap(), int(6));
        let half = QMat::new(1, 1, vec![crate::rat::frac(1, 2)]).unwrap();
        assert_eq!(half.determinant().unwrap(), crate::rat::frac(1, 2));
        assert_eq!(QMat::zeros(0, 0).determinant().unwrap(), int(1));
        assert!(QMat::zeros(2, 3).determinant().is_err());
    }
}
