//! Dimension counts behind the two reduction propositions for
//! `V_{a,b} = V_a ⊗ V_b` under `SL2 x SL2`.
//!
//! Quotient dimensions are `dim X - dim G` for actions with finite generic
//! stabilizers; the checks certify that finiteness at sampled points.

/// `dim P(V_a ⊗ V_b)`.
pub fn dim_p_tensor(a: i64, b: i64) -> i64 {
    (a + 1) * (b + 1) - 1
}

/// `dim P(V_a^{⊕k}) / SL2`.
pub fn dim_pv_sum_quotient(a: i64, k: i64) -> i64 {
    k * (a + 1) - 1 - 3
}

/// `dim P(V_b) / SL2`.
pub fn dim_pw_quotient(b: i64) -> i64 {
    b - 3
}

/// `N = (a+1)(a-a') + 1 + a(b-a)`.
pub fn n_general_i(a: i64, b: i64, a_prime: i64) -> i64 {
    (a + 1) * (a - a_prime) + 1 + a * (b - a)
}

/// `d = dim P(V_a^{⊕(a+1)}) / SL2 = a² + 2a - 3`.
pub fn d_general_ii(a: i64) -> i64 {
    dim_pv_sum_quotient(a, a + 1)
}

/// `M = d - a + a(b-a)`.
pub fn m_general_ii(a: i64, b: i64) -> i64 {
    d_general_ii(a) - a + a * (b - a)
}

/// `(a, b)` with `1 < a < b <= max_b` and `ab` even.
pub fn grid(max_b: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for b in 3..=max_b {
        for a in 2..b {
            if (a * b) % 2 == 0 {
                out.push((a, b));
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Row {
    pub a: i64,
    pub b: i64,
    pub a_prime: i64,
    pub lhs: i64,
    pub n: i64,
    pub m: i64,
    pub d: i64,
    pub identity_i: bool,
    pub identity_ii: bool,
}

pub fn row(a: i64, b: i64, a_prime: i64) -> Row {
    let lhs = dim_p_tensor(a, b) - 6;
    let n = n_general_i(a, b, a_prime);
    let m = m_general_ii(a, b);
    let d = d_general_ii(a);
    Row {
        a,
        b,
        a_prime,
        lhs,
        n,
        m,
        d,
        identity_i: lhs == n + dim_pv_sum_quotient(a, a_prime) + dim_pw_quotient(b),
        identity_ii: lhs == m + dim_pw_quotient(b) && m == a * (b + 1) - 3 && d >= a,
    }
}
