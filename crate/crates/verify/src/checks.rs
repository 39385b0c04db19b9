//! The check registry C01-C14.
//!
//! Every check is a deterministic function of the run seed. Random samples
//! come from independent ChaCha streams keyed by the check index, the grid
//! point and the sample number, so checks and samples can run in any order.

use std::time::Instant;

use biforms::actions::{
    self, act_binary, det_scalar, mat2, projective_stabilizer_dim, subspace_stabilizer_dim, tuple_stabilizer_dim,
    weight_of,
};
use biforms::curves::{
    branch_form, gradient_at, hyperplane_degree, linear_curve_is_smooth, phi_components, singular_system, span_dim,
};
use biforms::rat::{self, int, sign, Rat};
use biforms::transvect::{
    apolar_diffop, bitransvectant, cg_components, specialized_1s, transvectant, transvectant_matrix,
    transvectant_matrix_right,
};
use biforms::{sample, BiForm, BinaryForm, GroupPair, QMat, Subspace, TernaryForm};
use num_traits::{One, Zero};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::bookkeeping;
use crate::fixtures::{self, Slice};
use crate::report::{CheckResult, Report, Status};

pub const SAMPLES: usize = 100;
pub const GENERIC_THRESHOLD: usize = 95;
pub const ALMOST_FREE_SAMPLES: usize = 50;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown check `{0}`")]
pub struct UnknownCheck(pub String);

pub struct CheckSpec {
    pub id: &'static str,
    pub title: &'static str,
    run: fn(&mut Ctx),
}

pub const REGISTRY: [CheckSpec; 14] = [
    CheckSpec { id: "C01", title: "transvectant symmetry and bilinearity", run: c01 },
    CheckSpec { id: "C02", title: "bitransvectant factorization on decomposables", run: c02 },
    CheckSpec { id: "C03", title: "T^(1,s) through transvectants of the components", run: c03 },
    CheckSpec { id: "C04", title: "apolar covariant against the extreme transvectant", run: c04 },
    CheckSpec { id: "C05", title: "Clebsch-Gordan decomposition of V_d ⊗ V_d'", run: c05 },
    CheckSpec { id: "C06", title: "SL2 x SL2 equivariance of T^(r,s)", run: c06 },
    CheckSpec { id: "C07", title: "branch form degree 2a(b-1)", run: c07 },
    CheckSpec { id: "C08", title: "hyperplane degree and linear span of φ_F", run: c08 },
    CheckSpec { id: "C09", title: "infinitesimal almost-freeness on G(a, PV_b) and PV_{a,b}", run: c09 },
    CheckSpec { id: "C10", title: "action of -1 on V_b and on the Plücker line", run: c10 },
    CheckSpec { id: "C11", title: "the (1,6) slice", run: c11 },
    CheckSpec { id: "C12", title: "the (1,8) non-degenerate pair", run: c12 },
    CheckSpec { id: "C13", title: "plane-curve linear systems and their decompositions", run: c13 },
    CheckSpec { id: "C14", title: "dimension bookkeeping of the reduction propositions", run: c14 },
];

pub fn check_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|c| c.id).collect()
}

/// Accumulates witnesses and failed assertions for one check.
pub struct Ctx {
    seed: u64,
    index: u64,
    witnesses: Map<String, Value>,
    failures: Vec<String>,
    shortfalls: Vec<String>,
}

impl Ctx {
    fn new(seed: u64, index: usize) -> Self {
        Ctx { seed, index: index as u64 + 1, witnesses: Map::new(), failures: Vec::new(), shortfalls: Vec::new() }
    }

    /// Generator for sample `k` at grid point `point`.
    fn rng(&self, point: u64, k: u64) -> impl Rng {
        sample::stream_rng(self.seed, (self.index << 48) | (point << 24) | k)
    }

    fn put(&mut self, key: &str, value: impl Serialize) {
        self.witnesses.insert(key.to_string(), serde_json::to_value(value).expect("witness serializes"));
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) -> bool {
        if !ok {
            self.failures.push(what.into());
        }
        ok
    }

    fn ok<T>(&mut self, r: biforms::Result<T>, what: &str) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.failures.push(format!("{what}: {e}"));
                None
            }
        }
    }

    /// Records that a genericity threshold was missed without a counterexample.
    fn short(&mut self, what: impl Into<String>) {
        self.shortfalls.push(what.into());
    }

    fn finish(mut self, id: &str, ms: u64) -> CheckResult {
        let status = if !self.failures.is_empty() {
            Status::Fail
        } else if !self.shortfalls.is_empty() {
            Status::Degenerate
        } else {
            Status::Pass
        };
        if !self.failures.is_empty() {
            let f = std::mem::take(&mut self.failures);
            self.put("failures", f);
        }
        if !self.shortfalls.is_empty() {
            let s = std::mem::take(&mut self.shortfalls);
            self.put("shortfalls", s);
        }
        self.put("seed", self.seed);
        CheckResult { id: id.to_string(), status, witnesses: self.witnesses, ms }
    }
}

fn run_spec(index: usize, spec: &CheckSpec, seed: u64) -> CheckResult {
    let start = Instant::now();
    let mut ctx = Ctx::new(seed, index);
    (spec.run)(&mut ctx);
    ctx.finish(spec.id, start.elapsed().as_millis() as u64)
}

pub fn run_check(id: &str, seed: u64) -> Result<CheckResult, UnknownCheck> {
    let (index, spec) =
        REGISTRY.iter().enumerate().find(|(_, c)| c.id == id).ok_or_else(|| UnknownCheck(id.to_string()))?;
    Ok(run_spec(index, spec, seed))
}

/// Runs every check, concurrently, and reports them in registry order.
pub fn run_all(seed: u64) -> Report {
    let checks = REGISTRY.par_iter().enumerate().map(|(i, spec)| run_spec(i, spec, seed)).collect();
    Report::new(seed, checks)
}

// ---------------------------------------------------------------------------
// Helpers

fn show<T: std::fmt::Display>(x: &T) -> String {
    x.to_string()
}

fn pick<R: Rng>(rng: &mut R, lo: u32, hi: u32) -> u32 {
    rng.gen_range(lo..=hi)
}

fn bi_subspace(forms: &[BiForm]) -> Option<Subspace> {
    let (a, b) = forms.first()?.bidegree();
    let vs: Vec<Vec<Rat>> = forms.iter().map(BiForm::coefficients).collect();
    Subspace::span(BiForm::dim(a, b), &vs).ok()
}

/// Renders the rows of an RREF as `v_p = Σ c_j v_j`.
fn render_equations(rows: &[Vec<Rat>], names: &[String]) -> Vec<String> {
    rows.iter()
        .filter_map(|row| {
            let p = row.iter().position(|c| !c.is_zero())?;
            let rhs: Vec<String> = row
                .iter()
                .enumerate()
                .skip(p + 1)
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| {
                    let c = -c;
                    if c.is_one() {
                        names[j].clone()
                    } else {
                        format!("{c}*{}", names[j])
                    }
                })
                .collect();
            let rhs = if rhs.is_empty() { "0".to_string() } else { rhs.join(" + ") };
            Some(format!("{} = {rhs}", names[p]))
        })
        .collect()
}

// ---------------------------------------------------------------------------
// C01-C06: transvectant identities

fn c01(ctx: &mut Ctx) {
    let (mut sym, mut lin) = (0, 0);
    for k in 0..SAMPLES as u64 {
        let mut rng = ctx.rng(0, k);
        let (d, e) = (pick(&mut rng, 0, 6), pick(&mut rng, 0, 6));
        let r = pick(&mut rng, 0, d.min(e));
        let (p, p2, q) =
            (sample::binary_form(&mut rng, d), sample::binary_form(&mut rng, d), sample::binary_form(&mut rng, e));
        let c = sample::coeff(&mut rng);
        let (Some(pq), Some(qp)) =
            (ctx.ok(transvectant(&p, &q, r), "T(P,Q)"), ctx.ok(transvectant(&q, &p, r), "T(Q,P)"))
        else {
            continue;
        };
        if ctx.require(pq == qp.scale(&sign(r)), format!("symmetry fails for d={d}, d'={e}, r={r}, P={p}, Q={q}")) {
            sym += 1;
        }
        let combo = p.scale(&c).checked_add(&p2).expect("same degree");
        let lhs = transvectant(&combo, &q, r).expect("orders checked");
        let p2q = transvectant(&p2, &q, r).expect("orders checked");
        let rhs = pq.scale(&c).checked_add(&p2q).expect("same degree");
        let lhs2 = transvectant(&q, &combo, r).expect("orders checked");
        let rhs2 = qp.scale(&c).checked_add(&transvectant(&q, &p2, r).expect("orders checked")).expect("same degree");
        if ctx.require(lhs == rhs && lhs2 == rhs2, format!("bilinearity fails for d={d}, d'={e}, r={r}")) {
            lin += 1;
        }
    }
    ctx.put("samples", SAMPLES);
    ctx.put("symmetric", sym);
    ctx.put("bilinear", lin);
}

fn c02(ctx: &mut Ctx) {
    let mut held = 0;
    for k in 0..SAMPLES as u64 {
        let mut rng = ctx.rng(0, k);
        let (a, b, a2, b2) = (pick(&mut rng, 0, 3), pick(&mut rng, 0, 5), pick(&mut rng, 0, 3), pick(&mut rng, 0, 5));
        let (r, s) = (pick(&mut rng, 0, a.min(a2)), pick(&mut rng, 0, b.min(b2)));
        let (p1, p2) = (sample::binary_form(&mut rng, a), sample::binary_form(&mut rng, b));
        let (q1, q2) = (sample::binary_form(&mut rng, a2), sample::binary_form(&mut rng, b2));
        let Some(lhs) =
            ctx.ok(bitransvectant(&BiForm::from_product(&p1, &p2), &BiForm::from_product(&q1, &q2), r, s), "T^(r,s)")
        else {
            continue;
        };
        let rhs = BiForm::from_product(
            &transvectant(&p1, &q1, r).expect("r checked"),
            &transvectant(&p2, &q2, s).expect("s checked"),
        );
        if ctx.require(lhs == rhs, format!("factorization fails at ({a},{b}) x ({a2},{b2}), (r,s)=({r},{s})")) {
            held += 1;
        }
    }
    ctx.put("samples", SAMPLES);
    ctx.put("factorized", held);
}

fn c03(ctx: &mut Ctx) {
    let mut held = 0;
    for k in 0..SAMPLES as u64 {
        let mut rng = ctx.rng(0, k);
        let b = pick(&mut rng, 1, 8);
        let b2 = pick(&mut rng, 1, b);
        let s = pick(&mut rng, 0, b2);
        let (f, g) = (sample::biform(&mut rng, 1, b), sample::biform(&mut rng, 1, b2));
        let (Some(x), Some(y)) =
            (ctx.ok(specialized_1s(&f, &g, s), "specialized"), ctx.ok(bitransvectant(&f, &g, 1, s), "T^(1,s)"))
        else {
            continue;
        };
        if ctx.require(x == y, format!("T^(1,{s}) disagrees for F={f}, G={g}")) {
            held += 1;
        }
    }
    ctx.put("samples", SAMPLES);
    ctx.put("agreeing", held);
}

fn c04(ctx: &mut Ctx) {
    let mut table = Map::new();
    for d in 1..=6u32 {
        for e in 1..=d {
            let mut ratio: Option<Rat> = None;
            for k in 0..3u64 {
                let mut rng = ctx.rng((d * 8 + e) as u64, k);
                let (p, q) = (sample::binary_form(&mut rng, d), sample::binary_form(&mut rng, e));
                let (Some(apolar), Some(t)) =
                    (ctx.ok(apolar_diffop(&p, &q), "apolar"), ctx.ok(transvectant(&p, &q, e), "T^(d')"))
                else {
                    continue;
                };
                if t.is_zero() {
                    ctx.require(apolar.is_zero(), format!("apolar nonzero where T^({e}) vanishes, d={d}"));
                    continue;
                }
                let (exps, tc) = t.poly().terms().next().expect("nonzero");
                let c = apolar.poly().coeff(exps) / tc;
                ctx.require(apolar == t.scale(&c), format!("apolar not proportional to T^({e}) for d={d}"));
                match &ratio {
                    None => ratio = Some(c),
                    Some(r0) => {
                        ctx.require(*r0 == c, format!("ratio depends on the sample for (d,d')=({d},{e})"));
                    }
                }
            }
            match ratio {
                Some(r) => {
                    ctx.require(!r.is_zero(), format!("zero ratio at ({d},{e})"));
                    table.insert(format!("{d},{e}"), Value::String(show(&r)));
                }
                None => ctx.short(format!("no nonzero sample at ({d},{e})")),
            }
        }
    }
    ctx.put("ratio", table);
}

fn c05(ctx: &mut Ctx) {
    let mut pairs = 0;
    for d in 0..=10u32 {
        for e in 0..=10u32 {
            let total: u32 = cg_components(d, e).iter().map(|k| k + 1).sum();
            ctx.require(total == (d + 1) * (e + 1), format!("dimension count fails for ({d},{e})"));
            pairs += 1;
        }
    }
    ctx.put("pairs", pairs);
    // The map P ⊗ Q ↦ (T^(0)(P,Q), ..., T^(m)(P,Q)) is an isomorphism onto ⊕ V_{d+d'-2r}.
    let mut iso = 0;
    for d in 0..=5u32 {
        for e in 0..=d {
            let mut cols = Vec::new();
            for p in BinaryForm::basis(d) {
                for q in BinaryForm::basis(e) {
                    let col: Vec<Rat> =
                        (0..=e).flat_map(|r| transvectant(&p, &q, r).expect("r <= e").coefficients()).collect();
                    cols.push(col);
                }
            }
            let n = ((d + 1) * (e + 1)) as usize;
            let m = QMat::from_columns(n, &cols).expect("square");
            if ctx.require(m.rank() == n, format!("transvectants do not separate V_{d} ⊗ V_{e}")) {
                iso += 1;
            }
        }
    }
    ctx.put("isomorphisms", iso);
}

fn c06(ctx: &mut Ctx) {
    let mut held = 0;
    for k in 0..SAMPLES as u64 {
        let mut rng = ctx.rng(0, k);
        let (a, b, a2, b2) = (pick(&mut rng, 0, 2), pick(&mut rng, 0, 4), pick(&mut rng, 0, 2), pick(&mut rng, 0, 4));
        let (r, s) = (pick(&mut rng, 0, a.min(a2)), pick(&mut rng, 0, b.min(b2)));
        let (f, g) = (sample::biform(&mut rng, a, b), sample::biform(&mut rng, a2, b2));
        let h = sample::sl2_pair(&mut rng);
        let Some(t) = ctx.ok(bitransvectant(&f, &g, r, s), "T^(r,s)") else { continue };
        let lhs = bitransvectant(&h.act(&f), &h.act(&g), r, s).expect("same bidegrees");
        if ctx.require(lhs == h.act(&t), format!("equivariance fails at ({a},{b}) x ({a2},{b2}), (r,s)=({r},{s})")) {
            held += 1;
        }
    }
    ctx.put("samples", SAMPLES);
    ctx.put("equivariant", held);
}

// ---------------------------------------------------------------------------
// C07-C09: sampled genericity certificates

#[derive(Serialize)]
struct GridPoint {
    a: u32,
    b: u32,
    expected: u32,
    generic: usize,
    exceptions: Vec<Value>,
}

fn grid_verdict(ctx: &mut Ctx, name: &str, points: &[GridPoint], threshold: usize) {
    for p in points {
        if p.generic < threshold {
            ctx.short(format!("{name}: only {} of the samples at ({},{}) are generic", p.generic, p.a, p.b));
        }
    }
}

fn c07(ctx: &mut Ctx) {
    let seed = ctx.seed;
    let index = ctx.index;
    let results: Vec<(GridPoint, Vec<String>)> = fixtures::CURVE_GRID
        .par_iter()
        .enumerate()
        .map(|(gi, &(a, b))| {
            let expected = 2 * a * (b - 1);
            let (mut generic, mut exceptions, mut failures) = (0, Vec::new(), Vec::new());
            for k in 0..SAMPLES as u64 {
                let mut rng = sample::stream_rng(seed, (index << 48) | ((gi as u64) << 24) | k);
                let f = sample::biform(&mut rng, a, b);
                match branch_form(&f) {
                    Err(e) => failures.push(format!("branch form of {f}: {e}")),
                    Ok(br) if br.is_degenerate() => {
                        exceptions.push(json!({"sample": k, "form": show(&f), "reason": "resultant vanishes identically"}))
                    }
                    Ok(br) => {
                        let roots = br.root_count();
                        if br.expected_degree() != expected {
                            failures.push(format!("branch form of {f} has degree {}", br.expected_degree()));
                        } else if roots == expected {
                            generic += 1;
                        } else {
                            exceptions.push(json!({"sample": k, "form": show(&f), "reason": "repeated branch point", "distinct": roots}));
                        }
                    }
                }
            }
            (GridPoint { a, b, expected, generic, exceptions }, failures)
        })
        .collect();
    let mut points = Vec::new();
    for (p, failures) in results {
        for f in failures {
            ctx.require(false, f);
        }
        // The Riemann-Hurwitz count 2g - 2 + 2b with g = (a-1)(b-1).
        let g = (p.a as i64 - 1) * (p.b as i64 - 1);
        ctx.require(
            2 * g - 2 + 2 * p.b as i64 == p.expected as i64,
            format!("branch count mismatch at ({},{})", p.a, p.b),
        );
        points.push(p);
    }
    grid_verdict(ctx, "branch", &points, GENERIC_THRESHOLD);
    ctx.put("samples_per_point", SAMPLES);
    ctx.put("grid", points);
}

fn c08(ctx: &mut Ctx) {
    let seed = ctx.seed;
    let index = ctx.index;
    let results: Vec<(GridPoint, Vec<String>)> = fixtures::CURVE_GRID
        .par_iter()
        .enumerate()
        .map(|(gi, &(a, b))| {
            let (mut generic, mut exceptions, mut failures) = (0, Vec::new(), Vec::new());
            for k in 0..SAMPLES as u64 {
                let mut rng = sample::stream_rng(seed, (index << 48) | ((gi as u64) << 24) | k);
                let f = sample::biform(&mut rng, a, b);
                let lambda_seed: u64 = rng.gen();
                let cm = phi_components(&f).expect("nonzero sample");
                let (deg, span) = (hyperplane_degree(&cm, lambda_seed), span_dim(&cm));
                if deg > a || span > a as usize {
                    failures.push(format!("{f}: hyperplane degree {deg}, span {span} exceed {a}"));
                } else if deg == a && span == a as usize {
                    generic += 1;
                } else {
                    let base = cm.base_locus();
                    exceptions.push(json!({
                        "sample": k, "form": show(&f), "hyperplane_degree": deg, "span_dim": span,
                        "base_locus": show(&base), "lambda_seed": lambda_seed,
                    }));
                }
            }
            (GridPoint { a, b, expected: a, generic, exceptions }, failures)
        })
        .collect();
    let mut points = Vec::new();
    for (p, failures) in results {
        for f in failures {
            ctx.require(false, f);
        }
        points.push(p);
    }
    grid_verdict(ctx, "hyperplane degree and span", &points, GENERIC_THRESHOLD);
    ctx.put("samples_per_point", SAMPLES);
    ctx.put("grid", points);
}

fn c09(ctx: &mut Ctx) {
    let seed = ctx.seed;
    let index = ctx.index;
    let mut jobs = Vec::new();
    for b in fixtures::ALMOST_FREE_B {
        for a in 0..b {
            jobs.push((false, a, b));
            if a >= 1 {
                jobs.push((true, a, b));
            }
        }
    }
    let results: Vec<(bool, GridPoint, Vec<String>)> = jobs
        .par_iter()
        .enumerate()
        .map(|(gi, &(is_biform, a, b))| {
            let (mut generic, mut exceptions, mut failures) = (0, Vec::new(), Vec::new());
            for k in 0..ALMOST_FREE_SAMPLES as u64 {
                let mut rng = sample::stream_rng(seed, (index << 48) | ((gi as u64) << 24) | k);
                let dim = if is_biform {
                    let f = sample::biform(&mut rng, a, b);
                    projective_stabilizer_dim(&f)
                } else {
                    let w = sample::subspace(&mut rng, b as usize + 1, a as usize + 1);
                    subspace_stabilizer_dim(&w)
                };
                match dim {
                    Ok(0) => generic += 1,
                    Ok(d) => exceptions.push(json!({"sample": k, "stabilizer_dim": d})),
                    Err(e) => failures.push(format!("({a},{b}): {e}")),
                }
            }
            (is_biform, GridPoint { a, b, expected: 0, generic, exceptions }, failures)
        })
        .collect();
    let (mut grass, mut forms) = (Vec::new(), Vec::new());
    for (is_biform, p, failures) in results {
        for f in failures {
            ctx.require(false, f);
        }
        if is_biform {
            forms.push(p);
        } else {
            grass.push(p);
        }
    }
    grid_verdict(ctx, "G(a, PV_b)", &grass, ALMOST_FREE_SAMPLES);
    grid_verdict(ctx, "PV_{a,b}", &forms, ALMOST_FREE_SAMPLES);
    ctx.put("samples_per_point", ALMOST_FREE_SAMPLES);
    ctx.put("grassmannian", grass);
    ctx.put("biforms", forms);
}

// ---------------------------------------------------------------------------
// C10: scalars

fn c10(ctx: &mut Ctx) {
    let minus = mat2(-1, 0, 0, -1);
    let mut even = Vec::new();
    for b in 0..=10u32 {
        let expected = sign(b);
        let ok = BinaryForm::basis(b).iter().all(|m| act_binary(&minus, m) == m.scale(&expected));
        ctx.require(ok, format!("-1 does not act by {expected} on V_{b}"));
        if b % 2 == 0 {
            let g = GroupPair::scalar(1, -1).expect("invertible");
            let trivial = (0..=3).all(|a| BiForm::basis(a, b).iter().all(|m| g.act(m) == *m));
            ctx.require(trivial, format!("(1,-1) acts nontrivially on V_(a,{b})"));
            even.push(b);
        }
    }
    ctx.put("trivial_on_even_b", even);

    let mut signs = Map::new();
    for b in [3u32, 5, 7, 9] {
        for a in 0..b {
            let expected = sign(a + 1);
            let mut seen = Vec::new();
            for k in 0..5u64 {
                let mut rng = ctx.rng((b * 16 + a) as u64, k);
                let w = sample::subspace(&mut rng, b as usize + 1, a as usize + 1);
                let Some(s) = ctx.ok(det_scalar(&minus, &w), "det_scalar") else { continue };
                ctx.require(s == expected, format!("det_scalar(-1, W) = {s} for dim W = {}, b = {b}", a + 1));
                seen.push(show(&s));
            }
            seen.dedup();
            signs.insert(format!("{a},{b}"), json!(seen));
        }
    }
    ctx.put("plucker_sign", signs);
    let even_a: Vec<String> = (0..9u32).step_by(2).map(|a| show(&sign(a + 1))).collect();
    ctx.put("plucker_sign_even_a", even_a);
}

// ---------------------------------------------------------------------------
// C11: the (1,6) slice

fn c11(ctx: &mut Ctx) {
    let c = fixtures::c12();
    let h = fixtures::h16();

    // Non-degeneracy of T^(1,2)(H, ·): V_{1,2} -> V_{0,4}.
    if let Some(m) = ctx.ok(transvectant_matrix(&h, 1, 2, (1, 2)), "T^(1,2)(H, ·)") {
        let rank = m.rank();
        ctx.require(rank == m.rows(), format!("T^(1,2)(H, ·) has rank {rank} < {}", m.rows()));
        let kernel = m.kernel_basis();
        ctx.put("H_rank", json!([rank, m.rows()]));
        ctx.put("H_kernel_dim", kernel.dim());
        if ctx.require(kernel.dim() == 1, format!("kernel has dimension {}", kernel.dim())) {
            let g = BiForm::from_coefficients(1, 2, &kernel.basis_vectors()[0]).expect("length matches");
            smooth_curve_witness(ctx, &g);
        }
    }

    // The slice V = {F ∈ V_{1,6} : T^(1,2)(F, C) = 0}.
    let Some(m) = ctx.ok(transvectant_matrix_right(&c, 1, 2, (1, 6)), "T^(1,2)(·, C)") else { return };
    let v = m.kernel_basis();
    ctx.require(v.dim() == 9, format!("dim V = {}", v.dim()));
    ctx.put("dimV", v.dim());
    slice_equations(ctx, &m);

    // Cross-check with the (1,s) formula.
    let t_ok = v.basis_vectors().iter().all(|x| {
        let f = BiForm::from_coefficients(1, 6, x).expect("length matches");
        specialized_1s(&f, &c, 2).map(|t| t.is_zero()).unwrap_or(false)
    });
    ctx.require(t_ok, "V is not annihilated by the (1,s) formula");

    // W_i.
    let summands = fixtures::w_summands();
    let torus = fixtures::slice_torus();
    let swap = GroupPair::swap();
    let mut all = Vec::new();
    let mut weights = Vec::new();
    let mut per_summand = Vec::new();
    for (i, w) in summands.iter().enumerate() {
        let mut ws = Vec::new();
        for f in w {
            ctx.require(v.contains(&f.coefficients()).unwrap_or(false), format!("W_{i} vector {f} is not in V"));
            match weight_of(f, &torus) {
                Some(k) => ws.push(k),
                None => {
                    ctx.require(false, format!("W_{i} vector {f} is not a torus eigenvector"));
                }
            }
            all.push(f.coefficients());
        }
        let mut expected: Vec<i32> = if i == 0 { vec![0] } else { vec![-(i as i32), i as i32] };
        let mut sorted = ws.clone();
        sorted.sort();
        expected.sort();
        ctx.require(sorted == expected, format!("W_{i} has weights {ws:?}"));
        // The swap exchanges the two weight lines of W_i (fixes W_0).
        if let Some(span) = bi_subspace(w) {
            let image: Vec<BiForm> = w.iter().map(|f| swap.act(f)).collect();
            let img = bi_subspace(&image).expect("nonempty");
            ctx.require(img == span, format!("W_{i} is not swap-invariant"));
            if w.len() == 2 {
                let exchanged = bi_subspace(&[w[1].clone()]).expect("nonempty")
                    == bi_subspace(&[image[0].clone()]).expect("nonempty");
                ctx.require(exchanged, format!("swap does not exchange the weight lines of W_{i}"));
            }
        }
        per_summand.push(json!({"summand": i, "dim": w.len(), "weights": ws}));
        weights.extend(ws);
    }
    match Subspace::span(14, &all) {
        Ok(sum) => {
            ctx.require(sum.dim() == 9 && sum == v, format!("the W_i span a space of dimension {}", sum.dim()));
        }
        Err(e) => {
            ctx.require(false, format!("W_i span: {e}"));
        }
    }
    // V itself is stable under the generators of the stabilizer.
    for x in v.basis_vectors() {
        let f = BiForm::from_coefficients(1, 6, &x).expect("length matches");
        ctx.require(v.contains(&swap.act(&f).coefficients()).unwrap_or(false), "V is not swap-invariant");
        for alpha in fixtures::torus_samples() {
            ctx.require(v.contains(&torus.act(&alpha, &f).coefficients()).unwrap_or(false), "V is not torus-invariant");
        }
    }
    weights.sort();
    ctx.put("weights", weights);
    ctx.put("W", per_summand);

    // Stabilizer of C.
    ctx.require(swap.act(&c) == c, "swap does not fix C");
    let st = fixtures::stabilizer_torus();
    let wc = weight_of(&c, &st);
    ctx.require(wc == Some(2), format!("C has torus weight {wc:?}"));
    for alpha in fixtures::torus_samples() {
        ctx.require(st.act(&alpha, &c) == c.scale(&rat::pow(&alpha, 2)), "torus does not scale C by α²");
    }
    ctx.put("swap_fixes_C", swap.act(&c) == c);
    ctx.put("C_weight", wc);
    if let Some(d) = ctx.ok(projective_stabilizer_dim(&c), "stabilizer of C") {
        ctx.require(d == 1, format!("stabilizer of [C] has dimension {d}"));
        ctx.put("C_stabilizer_dim", d);
    }
}

/// Smoothness of a `(1,b)` curve: squarefree branch form, nonzero resultant
/// of its two components, and nonvanishing gradient at sampled points.
fn smooth_curve_witness(ctx: &mut Ctx, g: &BiForm) {
    ctx.put("kernel_generator", show(g));
    let Some(br) = ctx.ok(branch_form(g), "branch form") else { return };
    ctx.require(br.is_squarefree(), format!("branch form {} of {g} is not squarefree", br.form));
    ctx.put("branch_form", show(&br.form));
    ctx.put("branch_squarefree", br.is_squarefree());
    let smooth = linear_curve_is_smooth(g).unwrap_or(false);
    ctx.require(smooth, "the components of the kernel generator share a root");
    let (p, q) = g.split_linear().expect("bidegree (1,b)");
    let mut checked = 0;
    let params: Vec<(Rat, Rat)> = (-3..=3).map(|t| (int(t), Rat::one())).chain([(Rat::one(), Rat::zero())]).collect();
    for (x2, y2) in params {
        let (pv, qv) = (p.evaluate(&x2, &y2), q.evaluate(&x2, &y2));
        if pv.is_zero() && qv.is_zero() {
            ctx.require(false, format!("whole fiber over [{x2}:{y2}] lies on the curve"));
            continue;
        }
        let point = [qv, -pv, x2, y2];
        let on_curve = g.poly().evaluate(&point).map(|v| v.is_zero()).unwrap_or(false);
        let grad = gradient_at(g, &point).map(|gr| !gr.iter().all(Zero::is_zero)).unwrap_or(false);
        if ctx.require(on_curve && grad, "singular or off-curve sample point") {
            checked += 1;
        }
    }
    ctx.put("smooth_points_checked", checked);
}

/// The equations of V in the coordinates `α_i, β_i` of
/// `X1 Σ C(6,i) α_i X2^i Y2^(6-i) + Y1 Σ C(6,i) β_i X2^i Y2^(6-i)`.
fn slice_equations(ctx: &mut Ctx, m: &QMat) {
    let n = 14;
    let mut d = QMat::zeros(n, n);
    for i in 0..=6usize {
        let c = Rat::from_integer(rat::binomial(6, i as u32));
        d.set(6 - i, i, c.clone());
        d.set(7 + 6 - i, 7 + i, c);
    }
    let eqs = Subspace::from_matrix(&m.mul(&d).expect("shapes match"));
    let expected: Vec<Vec<Rat>> = (0..=4)
        .map(|i| {
            let mut row = vec![Rat::zero(); n];
            row[i] = Rat::one();
            row[7 + i + 2] = -Rat::one();
            row
        })
        .collect();
    let names: Vec<String> =
        (0..=6).map(|i| format!("alpha_{i}")).chain((0..=6).map(|i| format!("beta_{i}"))).collect();
    let rows = eqs.basis_vectors();
    ctx.require(rows == expected, "the slice equations are not alpha_i = beta_(i+2)");
    ctx.put("equations", render_equations(&rows, &names));
}

// ---------------------------------------------------------------------------
// C12: the (1,8) pair

fn c12(ctx: &mut Ctx) {
    check_pair(ctx, &fixtures::h18(), &fixtures::h14());
}

/// Runs the C12 assertions on an arbitrary pair `(H, H')` of bidegrees
/// `(1,8)` and `(1,4)`.
pub fn run_pair_check(h: &BiForm, h_prime: &BiForm, seed: u64) -> CheckResult {
    let start = Instant::now();
    let index = REGISTRY.iter().position(|c| c.id == "C12").expect("registered");
    let mut ctx = Ctx::new(seed, index);
    check_pair(&mut ctx, h, h_prime);
    ctx.finish("C12", start.elapsed().as_millis() as u64)
}

fn check_pair(ctx: &mut Ctx, h: &BiForm, h_prime: &BiForm) {
    let Some(t) = ctx.ok(bitransvectant(h, h_prime, 1, 2), "T^(1,2)(H, H')") else { return };
    ctx.require(t.is_zero(), format!("T^(1,2)(H, H') = {t}"));
    ctx.put("T", show(&t));
    if let Some(t2) = ctx.ok(specialized_1s(h, h_prime, 2), "(1,s) formula") {
        ctx.require(t2 == t, "the (1,s) formula disagrees with the double sum");
    }
    if let Some(m) = ctx.ok(transvectant_matrix(h, 1, 2, h_prime.bidegree()), "T^(1,2)(H, ·)") {
        let r = m.rank();
        ctx.require(r == m.rows(), format!("T^(1,2)(H, ·) has rank {r} of {}", m.rows()));
        ctx.put("rank1", json!([r, m.rows()]));
    }
    if let Some(m) = ctx.ok(transvectant_matrix_right(h_prime, 1, 2, h.bidegree()), "T^(1,2)(·, H')") {
        let r = m.rank();
        ctx.require(r == m.rows(), format!("T^(1,2)(·, H') has rank {r} of {}", m.rows()));
        ctx.put("rank2", json!([r, m.rows()]));
        let fiber = m.cols() - r;
        ctx.require(fiber == 9, format!("fiber of the bundle has rank {fiber}"));
        ctx.put("bundle_rank", fiber);
    }
}

// ---------------------------------------------------------------------------
// C13: plane-curve slices

fn c13(ctx: &mut Ctx) {
    let mut out = Vec::new();
    for s in fixtures::slices() {
        out.push(check_slice(ctx, &s));
    }
    ctx.put("slices", out);
}

fn check_slice(ctx: &mut Ctx, s: &Slice) -> Value {
    let pts: Vec<[Rat; 3]> = s.points.iter().map(|p| p.map(int)).collect();
    let Some(v) = ctx.ok(singular_system(&pts, s.degree), s.name) else { return json!({"name": s.name}) };
    ctx.require(v.dim() == s.expected_dim, format!("{}: dimension {} instead of {}", s.name, v.dim(), s.expected_dim));
    let spans: Vec<Subspace> = s.summands.iter().map(|list| fixtures::ternary_span(s.degree, list)).collect();
    let total: usize = spans.iter().map(Subspace::dim).sum();
    let sum = spans.iter().skip(1).fold(spans[0].clone(), |acc, w| acc.sum(w).expect("same ambient"));
    ctx.require(total == sum.dim() && sum == v, format!("{}: the listed summands do not decompose the system", s.name));
    let mut invariant = true;
    for (gname, g) in &s.generators {
        for w in spans.iter().chain(std::iter::once(&v)) {
            let img = actions::act_ternary_subspace(g, s.degree, w).expect("same ambient");
            if img != *w {
                invariant = false;
                ctx.require(false, format!("{}: a summand is not invariant under {gname}", s.name));
            }
        }
    }
    let conic = TernaryForm::parse("X*Z - Y^2").expect("fixture parses");
    let fixes_conic = s.generators.iter().all(|(_, g)| {
        let img = g.act(&conic);
        let (e, c) = conic.poly().terms().next().expect("nonzero");
        img == conic.scale(&(img.poly().coeff(e) / c))
    });
    json!({
        "name": s.name,
        "dim": v.dim(),
        "summand_dims": spans.iter().map(Subspace::dim).collect::<Vec<_>>(),
        "generators": s.generators.iter().map(|(n, _)| n.clone()).collect::<Vec<_>>(),
        "invariant": invariant,
        "generators_fix_conic_XZ_Y2": fixes_conic,
    })
}

// ---------------------------------------------------------------------------
// C14: bookkeeping

fn c14(ctx: &mut Ctx) {
    let mut rows = Vec::new();
    for (a, b) in bookkeeping::grid(10) {
        let row = bookkeeping::row(a, b, a);
        ctx.require(row.identity_i, format!("general method I bookkeeping fails at ({a},{b})"));
        ctx.require(row.identity_ii, format!("general method II bookkeeping fails at ({a},{b})"));
        rows.push(row);
    }
    ctx.put("rows", rows);

    // Finite generic stabilizers, so that the quotient dimensions are dim - 3.
    let mut tuples = Map::new();
    for a in 2..=9u32 {
        let mut rng = ctx.rng(a as u64, 0);
        let forms: Vec<BinaryForm> = (0..a).map(|_| sample::binary_form(&mut rng, a)).collect();
        if let Some(d) = ctx.ok(tuple_stabilizer_dim(&forms), "tuple stabilizer") {
            ctx.require(d == 0, format!("a random {a}-tuple in V_{a} has a {d}-dimensional stabilizer"));
            tuples.insert(a.to_string(), json!(d));
        }
    }
    let mut singles = Map::new();
    for b in 3..=10u32 {
        let mut rng = ctx.rng(100 + b as u64, 0);
        let f = sample::binary_form(&mut rng, b);
        if let Some(d) = ctx.ok(tuple_stabilizer_dim(&[f]), "form stabilizer") {
            ctx.require(d == 0, format!("a random form in V_{b} has a {d}-dimensional stabilizer"));
            singles.insert(b.to_string(), json!(d));
        }
    }
    ctx.put("stabilizer_dim_PVa_sum_a", tuples);
    ctx.put("stabilizer_dim_PVb", singles);
}
