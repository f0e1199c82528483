//! The smooth-category counterexample: the real function
//! `d(u) = exp(-1/u^2) sin(1/u)` (with `d(0) = 0`) has rank zero exactly on
//! `X = {0} ∪ {1/(pi n)}`, an infinite set accumulating at the origin, yet
//! every neighbourhood of `X` contains midpoints where `d` is nonzero — so
//! no neighbourhood deformation-retracts onto `X`.
//!
//! At the tabulated points the sine factor is known in closed form: it is
//! exactly zero at the nodes `1/(pi n)` and exactly `±1` at the midpoints
//! `2/((2n+1) pi)`. The exponential magnitudes are floating point, held as
//! log10 so the midpoint values stay representable far below the f64
//! underflow threshold (the n = 20 midpoint is around `10^{-1785}`).

/// One node/midpoint pair of the rank-drop table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DemoRow {
    pub n: u32,
    /// `u_n = 1/(pi n)`, a rank-zero point.
    pub node: f64,
    /// `|d(u_n)|`: the sine factor vanishes, so exactly zero.
    pub node_magnitude: f64,
    /// Midpoint `2/((2n+1) pi)` between consecutive nodes.
    pub midpoint: f64,
    /// `log10 |d| = -((2n+1) pi / 2)^2 / ln 10` at the midpoint.
    pub midpoint_log10: f64,
}

impl DemoRow {
    /// `|d(midpoint)|` as an f64; underflows to zero for n >= 9, which is
    /// why comparisons go through the log form.
    pub fn midpoint_magnitude(&self) -> f64 {
        10f64.powf(self.midpoint_log10)
    }
}

pub fn rows(n_max: u32) -> Vec<DemoRow> {
    (1..=n_max)
        .map(|n| {
            let nf = n as f64;
            let half_odd = (2.0 * nf + 1.0) * std::f64::consts::PI / 2.0;
            DemoRow {
                n,
                node: 1.0 / (std::f64::consts::PI * nf),
                node_magnitude: 0.0,
                midpoint: 2.0 / ((2.0 * nf + 1.0) * std::f64::consts::PI),
                midpoint_log10: -(half_odd * half_odd) / std::f64::consts::LN_10,
            }
        })
        .collect()
}

/// `|d(u_n)| < 10^{factor_log10} |d(midpoint)|`, compared through the log
/// representation so sub-underflow midpoints still count as positive.
pub fn node_dominated(row: &DemoRow, factor_log10: f64) -> bool {
    if row.node_magnitude == 0.0 {
        return row.midpoint_log10.is_finite();
    }
    row.node_magnitude.log10() < factor_log10 + row.midpoint_log10
}

/// Midpoint value is strictly positive (finite log magnitude).
pub fn midpoint_positive(row: &DemoRow) -> bool {
    row.midpoint_log10.is_finite()
}

/// `|d(u_n)| < 1e-18 (|d(midpoint)| + 1e-300)`: the guard keeps the bound
/// meaningful once the midpoint value underflows.
pub fn node_within_guard(row: &DemoRow) -> bool {
    if row.node_magnitude == 0.0 {
        return true;
    }
    let bound_log10 = (row.midpoint_log10.max(-300.0)) - 18.0;
    row.node_magnitude.log10() < bound_log10
}

pub fn format_magnitude(log10: f64) -> String {
    if log10 > -300.0 {
        format!("{:.4e}", 10f64.powf(log10))
    } else {
        format!("10^{log10:.1}")
    }
}
