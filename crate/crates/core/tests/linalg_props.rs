use biforms::rat::{int, Rat};
use biforms::{QMat, Subspace};
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Textbook Gauss-Jordan over Q with first-nonzero pivoting.
fn naive_rref(m: &QMat) -> (Vec<Vec<Rat>>, Vec<usize>) {
    let mut a = m.row_vecs();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols() {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pr = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pr) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    (a, pivots)
}

/// Laplace expansion along the first row.
fn laplace(m: &[Vec<Rat>]) -> Rat {
    if m.is_empty() {
        return Rat::one();
    }
    let mut acc = Rat::zero();
    for j in 0..m.len() {
        let minor: Vec<Vec<Rat>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * laplace(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = QMat> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop_oneof![3 => Just(0i64), 5 => -9i64..=9, 1 => -2000i64..2000], r * c)
            .prop_map(move |v| QMat::new(r, c, v.into_iter().map(int).collect()).unwrap())
    })
}

fn fraction_matrix(n: usize) -> impl Strategy<Value = QMat> {
    prop::collection::vec((-9i64..=9, 1i64..8), n * n)
        .prop_map(move |v| QMat::new(n, n, v.into_iter().map(|(p, q)| int(p) / int(q)).collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rref_matches_gauss_jordan(m in matrix(7, 8)) {
        let (reduced, pivots) = naive_rref(&m);
        let rr = m.rref();
        prop_assert_eq!(&rr.pivots, &pivots);
        prop_assert_eq!(rr.rank, pivots.len());
        prop_assert_eq!(rr.matrix.row_vecs(), reduced);
    }

    #[test]
    fn rank_nullity(m in matrix(7, 9)) {
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.dim(), m.cols());
        for v in kernel.basis_vectors() {
            prop_assert!(biforms::rat::vec_is_zero(&m.mul_vec(&v).unwrap()));
        }
        prop_assert_eq!(m.rank(), m.transpose().rank());
        prop_assert_eq!(m.column_space().dim(), m.rank());
    }

    #[test]
    fn determinant_matches_laplace(m in fraction_matrix(4)) {
        prop_assert_eq!(m.determinant().unwrap(), laplace(&m.row_vecs()));
    }

    #[test]
    fn determinant_is_multiplicative(a in fraction_matrix(3), b in fraction_matrix(3)) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.determinant().unwrap(), a.determinant().unwrap() * b.determinant().unwrap());
    }

    #[test]
    fn plucker_scaling(m in matrix(6, 3), a in fraction_matrix(3)) {
        prop_assume!(m.cols() <= m.rows());
        let k = m.cols();
        let a = QMat::new(k, k, (0..k * k).map(|i| a.get(i / k, i % k).clone()).collect()).unwrap();
        let det = a.determinant().unwrap();
        let lhs = m.mul(&a).unwrap().top_minors().unwrap();
        let rhs: Vec<Rat> = m.top_minors().unwrap().into_iter().map(|x| x * &det).collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn subspace_canonical_form(m in matrix(5, 6), a in fraction_matrix(5)) {
        // Row operations by an invertible matrix leave the row space unchanged.
        prop_assume!(!a.determinant().unwrap().is_zero());
        let rows = m.rows();
        let a = QMat::new(rows, rows, (0..rows * rows).map(|i| a.get(i / rows, i % rows).clone()).collect()).unwrap();
        prop_assume!(!a.determinant().unwrap().is_zero());
        let w = Subspace::from_matrix(&m);
        let w2 = Subspace::from_matrix(&a.mul(&m).unwrap());
        prop_assert!(w.equals(&w2).unwrap());
        prop_assert_eq!(&w, &w2);
        for v in m.row_vecs() {
            prop_assert!(w.contains(&v).unwrap());
            let c = w.coordinates(&v).unwrap().unwrap();
            let back = w.basis().transpose().mul_vec(&c).unwrap();
            prop_assert_eq!(back, v);
        }
    }

    #[test]
    fn sum_dimension(m in matrix(4, 6), n in matrix(4, 6)) {
        prop_assume!(m.cols() == n.cols());
        let (u, w) = (Subspace::from_matrix(&m), Subspace::from_matrix(&n));
        let s = u.sum(&w).unwrap();
        prop_assert!(u.is_subspace_of(&s).unwrap() && w.is_subspace_of(&s).unwrap());
        prop_assert!(s.dim() <= u.dim() + w.dim());
        let mut both = m.row_vecs();
        both.extend(n.row_vecs());
        prop_assert_eq!(s.dim(), QMat::from_rows(m.cols(), &both).unwrap().rank());
    }
}
