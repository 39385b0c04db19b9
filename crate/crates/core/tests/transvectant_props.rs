use biforms::rat::{int, sign, Rat};
use biforms::sample;
use biforms::transvect::{apolar_diffop, bitransvectant, cg_components, specialized_1s, transvectant};
use biforms::{BiForm, BinaryForm, MPoly, Ring};
use proptest::prelude::*;

fn form(seed: u64, d: u32) -> BinaryForm {
    sample::binary_form(&mut sample::rng(seed), d)
}

/// Direct expansion of the Cayley sum through explicit monomial derivatives,
/// independent of `MPoly::partial`.
fn transvectant_oracle(p: &BinaryForm, q: &BinaryForm, r: u32) -> MPoly {
    let ff = |n: u32, k: u32| (0..k).fold(int(1), |acc, t| acc * int(n as i64 - t as i64));
    let mut out = MPoly::zero(Ring::Binary);
    for i in 0..=r {
        let c = sign(i) * Rat::from_integer(biforms::rat::binomial(r, i));
        for (ep, cp) in p.poly().terms() {
            for (eq, cq) in q.poly().terms() {
                let (px, py, qx, qy) = (ep[0], ep[1], eq[0], eq[1]);
                if px < r - i || py < i || qx < i || qy < r - i {
                    continue;
                }
                let k = c.clone() * cp * cq * ff(px, r - i) * ff(py, i) * ff(qx, i) * ff(qy, r - i);
                let m = MPoly::monomial(Ring::Binary, vec![px + qx - r, py + qy - r], k);
                out = &out + &m;
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn matches_cayley_oracle(s1 in any::<u64>(), s2 in any::<u64>(), d in 0u32..7, e in 0u32..7, r in 0u32..7) {
        prop_assume!(r <= d.min(e));
        let (p, q) = (form(s1, d), form(s2, e));
        let t = transvectant(&p, &q, r).unwrap();
        prop_assert_eq!(t.poly(), &transvectant_oracle(&p, &q, r));
    }

    #[test]
    fn symmetry(s1 in any::<u64>(), s2 in any::<u64>(), d in 0u32..7, e in 0u32..7, r in 0u32..7) {
        prop_assume!(r <= d.min(e));
        let (p, q) = (form(s1, d), form(s2, e));
        let pq = transvectant(&p, &q, r).unwrap();
        let qp = transvectant(&q, &p, r).unwrap();
        prop_assert_eq!(pq, qp.scale(&sign(r)));
    }

    #[test]
    fn bilinearity(s in any::<u64>(), d in 1u32..6, e in 1u32..6, r in 0u32..6, c in -9i64..=9) {
        prop_assume!(r <= d.min(e));
        let mut rng = sample::rng(s);
        let (p, p2, q) = (sample::binary_form(&mut rng, d), sample::binary_form(&mut rng, d), sample::binary_form(&mut rng, e));
        let c = int(c);
        let lhs = transvectant(&p.scale(&c).checked_add(&p2).unwrap(), &q, r).unwrap();
        let rhs = transvectant(&p, &q, r).unwrap().scale(&c).checked_add(&transvectant(&p2, &q, r).unwrap()).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        let lhs = transvectant(&q, &p.scale(&c).checked_add(&p2).unwrap(), r).unwrap();
        let rhs = transvectant(&q, &p, r).unwrap().scale(&c).checked_add(&transvectant(&q, &p2, r).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn apolar_is_extreme_transvectant(s1 in any::<u64>(), s2 in any::<u64>(), d in 1u32..7, e in 1u32..7) {
        prop_assume!(e <= d);
        let (p, q) = (form(s1, d), form(s2, e));
        prop_assert_eq!(apolar_diffop(&p, &q).unwrap(), transvectant(&p, &q, e).unwrap());
    }

    #[test]
    fn factorization_on_decomposables(s in any::<u64>(), a in 0u32..4, b in 0u32..5, a2 in 0u32..4, b2 in 0u32..5, r in 0u32..4, t in 0u32..5) {
        prop_assume!(r <= a.min(a2) && t <= b.min(b2));
        let mut rng = sample::rng(s);
        let (p1, p2) = (sample::binary_form(&mut rng, a), sample::binary_form(&mut rng, b));
        let (q1, q2) = (sample::binary_form(&mut rng, a2), sample::binary_form(&mut rng, b2));
        let lhs = bitransvectant(&BiForm::from_product(&p1, &p2), &BiForm::from_product(&q1, &q2), r, t).unwrap();
        let rhs = BiForm::from_product(&transvectant(&p1, &q1, r).unwrap(), &transvectant(&p2, &q2, t).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn specialized_agrees(s in any::<u64>(), b in 1u32..8, b2 in 1u32..8, t in 0u32..8) {
        prop_assume!(b2 <= b && t <= b2);
        let mut rng = sample::rng(s);
        let (f, g) = (sample::biform(&mut rng, 1, b), sample::biform(&mut rng, 1, b2));
        prop_assert_eq!(specialized_1s(&f, &g, t).unwrap(), bitransvectant(&f, &g, 1, t).unwrap());
    }

    #[test]
    fn equivariance(s in any::<u64>(), a in 0u32..3, b in 0u32..4, a2 in 0u32..3, b2 in 0u32..4, r in 0u32..3, t in 0u32..4) {
        prop_assume!(r <= a.min(a2) && t <= b.min(b2));
        let mut rng = sample::rng(s);
        let (f, g) = (sample::biform(&mut rng, a, b), sample::biform(&mut rng, a2, b2));
        let h = sample::sl2_pair(&mut rng);
        let lhs = bitransvectant(&h.act(&f), &h.act(&g), r, t).unwrap();
        prop_assert_eq!(lhs, h.act(&bitransvectant(&f, &g, r, t).unwrap()));
    }
}

#[test]
fn clebsch_gordan_dimensions() {
    for d in 0..=10u32 {
        for e in 0..=10u32 {
            let total: u32 = cg_components(d, e).iter().map(|k| k + 1).sum();
            assert_eq!(total, (d + 1) * (e + 1));
        }
    }
}

#[test]
fn gl2_scales_by_determinant_power() {
    let mut rng = sample::rng(17);
    for _ in 0..30 {
        let g = sample::gl2(&mut rng);
        let det = biforms::actions::det2(&g);
        let (p, q) = (sample::binary_form(&mut rng, 4), sample::binary_form(&mut rng, 3));
        for r in 0..=3 {
            let lhs =
                transvectant(&biforms::actions::act_binary(&g, &p), &biforms::actions::act_binary(&g, &q), r).unwrap();
            let rhs =
                biforms::actions::act_binary(&g, &transvectant(&p, &q, r).unwrap()).scale(&biforms::rat::pow(&det, r));
            assert_eq!(lhs, rhs);
        }
    }
}
