use biforms::actions::{
    act_binary, act_subspace, det2, det_scalar, lie_act_binary, mat2, mul2, projective_stabilizer_dim,
    subspace_stabilizer_dim, weight_of, Mat2,
};
use biforms::rat::{self, int, Rat};
use biforms::{sample, BiForm, BinaryForm, G3Element, GroupPair, LiePair, Subspace, TernaryForm, Torus};
use num_traits::Zero;
use proptest::prelude::*;

fn nilpotent(kind: bool, c: i64) -> Mat2 {
    if kind {
        mat2(0, c, 0, 0)
    } else {
        mat2(0, 0, c, 0)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn left_action_law(s in any::<u64>(), a in 0u32..4, b in 0u32..5) {
        let mut rng = sample::rng(s);
        let f = sample::biform(&mut rng, a, b);
        let (g, h) = (sample::gl2_pair(&mut rng), sample::gl2_pair(&mut rng));
        prop_assert_eq!(g.compose(&h).act(&f), g.act(&h.act(&f)));
        prop_assert_eq!(GroupPair::identity().act(&f), f);
    }

    #[test]
    fn ternary_left_action_law(s in any::<u64>(), d in 1u32..5) {
        let mut rng = sample::rng(s);
        let f = sample::ternary_form(&mut rng, d);
        let m = |rng: &mut _| loop {
            let v: [Rat; 9] = std::array::from_fn(|_| sample::coeff(rng));
            if let Ok(g) = G3Element::new(v.clone()) {
                return (g, v);
            }
        };
        let ((g, gv), (h, hv)) = (m(&mut rng), m(&mut rng));
        let prod: [Rat; 9] = std::array::from_fn(|k| (0..3).map(|t| &gv[(k / 3) * 3 + t] * &hv[t * 3 + k % 3]).sum());
        prop_assert_eq!(G3Element::new(prod).unwrap().act(&f), g.act(&h.act(&f)));
    }

    #[test]
    fn exponential_of_nilpotent(s in any::<u64>(), b in 1u32..7, kind in any::<bool>(), c in -5i64..=5) {
        // act(I + x, f) = Σ_k ρ(x)^k f / k! for x nilpotent.
        let f = sample::binary_form(&mut sample::rng(s), b);
        let x = nilpotent(kind, c);
        let g = [int(1) + &x[0], x[1].clone(), x[2].clone(), int(1) + &x[3]];
        let mut term = f.clone();
        let mut total = f.clone();
        for k in 1..=b {
            term = lie_act_binary(&x, &term).scale(&rat::frac(1, k as i64));
            total = total.checked_add(&term).unwrap();
        }
        prop_assert!(lie_act_binary(&x, &term).is_zero());
        prop_assert_eq!(act_binary(&g, &f), total);
    }

    #[test]
    fn lie_bracket_is_commutator(s in any::<u64>(), a in 0u32..3, b in 0u32..5) {
        let mut rng = sample::rng(s);
        let f = sample::biform(&mut rng, a, b);
        let (x, y) = (sample::lie_pair(&mut rng), sample::lie_pair(&mut rng));
        let lhs = x.bracket(&y).act(&f);
        let rhs = x.act(&y.act(&f)).checked_add(&y.act(&x.act(&f)).scale(&int(-1))).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lie_action_is_conjugation_equivariant(s in any::<u64>(), b in 1u32..6) {
        // g ρ(x) g⁻¹ = ρ(g x g⁻¹) with the substitution convention ρ(x) ↔ right multiplication.
        let mut rng = sample::rng(s);
        let f = sample::binary_form(&mut rng, b);
        let g = sample::sl2(&mut rng);
        let x = sample::sl2_lie(&mut rng);
        let ginv = [g[3].clone(), -g[1].clone(), -g[2].clone(), g[0].clone()];
        let lhs = act_binary(&g, &lie_act_binary(&x, &act_binary(&ginv, &f)));
        let rhs = lie_act_binary(&mul2(&mul2(&g, &x), &ginv), &f);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn stabilizers_are_conjugation_invariant(s in any::<u64>(), b in 3u32..7, k in 1usize..3) {
        let mut rng = sample::rng(s);
        let w = sample::subspace(&mut rng, b as usize + 1, k);
        let g = sample::sl2(&mut rng);
        let gw = act_subspace(&g, &w).unwrap();
        prop_assert_eq!(gw.dim(), w.dim());
        prop_assert_eq!(subspace_stabilizer_dim(&gw).unwrap(), subspace_stabilizer_dim(&w).unwrap());
        let f = sample::biform(&mut rng, 1, b);
        let h = sample::sl2_pair(&mut rng);
        prop_assert_eq!(projective_stabilizer_dim(&h.act(&f)).unwrap(), projective_stabilizer_dim(&f).unwrap());
    }

    #[test]
    fn det_scalar_on_full_space(s in any::<u64>(), b in 0u32..6) {
        // On all of V_b the determinant is det(g)^(b(b+1)/2).
        let g = sample::gl2(&mut sample::rng(s));
        let full = Subspace::full(b as usize + 1);
        let expected = rat::pow(&det2(&g), b * (b + 1) / 2);
        prop_assert_eq!(det_scalar(&g, &full).unwrap(), expected);
    }

    #[test]
    fn det_scalar_is_multiplicative(s in any::<u64>(), b in 2u32..7) {
        // Torus-invariant subspaces: spans of monomials.
        let mut rng = sample::rng(s);
        let picks: Vec<usize> = (0..=b as usize).filter(|_| rand::Rng::gen_bool(&mut rng, 0.5)).collect();
        let vs: Vec<Vec<Rat>> = picks.iter().map(|&i| {
            let mut v = vec![Rat::zero(); b as usize + 1];
            v[i] = int(1);
            v
        }).collect();
        let w = Subspace::span(b as usize + 1, &vs).unwrap();
        let d = |x: i64, y: i64| [int(x), int(0), int(0), rat::frac(1, y)];
        let (g, h) = (d(2, 3), d(-5, 7));
        let gh = mul2(&g, &h);
        prop_assert_eq!(det_scalar(&gh, &w).unwrap(), det_scalar(&g, &w).unwrap() * det_scalar(&h, &w).unwrap());
    }

    #[test]
    fn torus_weight_matches_action(exps in prop::array::uniform4(-3i32..=3), twist in -4i32..=4, a in 0u32..3, b in 0u32..4, i in 0usize..12) {
        let basis = BiForm::basis(a, b);
        let m = &basis[i % basis.len()];
        let t = Torus::new(exps, twist);
        let w = weight_of(m, &t).unwrap();
        let alpha = rat::frac(3, 2);
        let scale = if w < 0 { rat::pow(&alpha, w.unsigned_abs()).recip() } else { rat::pow(&alpha, w as u32) };
        prop_assert_eq!(t.act(&alpha, m), m.scale(&scale));
    }
}

#[test]
fn scalar_pairs_act_by_parity() {
    for a in 0..=4u32 {
        for b in 0..=6u32 {
            for (s1, s2) in [(-1, 1), (1, -1), (-1, -1)] {
                let g = GroupPair::scalar(s1, s2).unwrap();
                let expected = rat::sign(if s1 < 0 { a } else { 0 }) * rat::sign(if s2 < 0 { b } else { 0 });
                for m in BiForm::basis(a, b) {
                    assert_eq!(g.act(&m), m.scale(&expected));
                }
            }
        }
    }
}

#[test]
fn permutations_compose() {
    let f = TernaryForm::parse("X^3 + 2*X*Y*Z - Y^2*Z").unwrap();
    let c = G3Element::permutation([1, 2, 0]);
    assert_eq!(c.act(&c.act(&c.act(&f))), f);
    let t = G3Element::permutation([1, 0, 2]);
    assert_eq!(t.act(&t.act(&f)), f);
}

#[test]
fn lie_basis_relations() {
    let [h, e, f] = LiePair::sl2_basis();
    let z = mat2(0, 0, 0, 0);
    let pair = |x: &Mat2| LiePair::new(x.clone(), z.clone()).unwrap();
    assert_eq!(pair(&h).bracket(&pair(&e)), LiePair::new(mat2(0, 2, 0, 0), z.clone()).unwrap());
    assert_eq!(pair(&h).bracket(&pair(&f)), LiePair::new(mat2(0, 0, -2, 0), z.clone()).unwrap());
    assert_eq!(pair(&e).bracket(&pair(&f)), pair(&h));
    // Weights on V_d: X^i Y^(d-i) has h-weight 2i - d.
    for d in 0..6u32 {
        for m in BinaryForm::basis(d) {
            let i = m.poly().terms().next().unwrap().0[0] as i64;
            assert_eq!(lie_act_binary(&h, &m), m.scale(&int(2 * i - d as i64)));
        }
    }
}
