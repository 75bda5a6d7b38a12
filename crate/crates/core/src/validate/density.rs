//! Known upper bounds on the number of edges of k-bend axis-parallel and s-slope RAC
//! drawings, compared against a drawing's edge count.

use num_integer::Roots;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityBound {
    pub label: String,
    /// Largest edge count allowed by the bound.
    pub bound: i64,
    /// `m - bound`; positive means the bound is exceeded.
    pub slack: i64,
}

impl DensityBound {
    pub fn exceeded(&self) -> bool {
        self.slack > 0
    }
}

fn ceil_sqrt(n: i64) -> i64 {
    let r = n.sqrt();
    if r * r == n {
        r
    } else {
        r + 1
    }
}

/// Straight-line bound: `m <= 4n - sqrt(n) - 6`, i.e. `4n - 6 - ceil(sqrt(n))` in integers.
pub fn max_edges_straight(n: i64) -> i64 {
    4 * n - 6 - ceil_sqrt(n)
}

pub fn max_edges_one_bend(n: i64) -> i64 {
    5 * n - 8
}

pub fn max_edges_two_bends(n: i64) -> i64 {
    10 * n - 12
}

/// Two-bend bound for `s` slopes: `min((6 + 4s)n - 12, 71.9n)`.
pub fn max_edges_slopes(n: i64, s: i64) -> i64 {
    ((6 + 4 * s) * n - 12).min(719 * n / 10)
}

/// Bounds that apply to a drawing with `n` vertices and `m` edges, at most `k` bends per
/// edge, and (for slope drawings) `s` slopes. The bounds are stated for `n >= 3`.
pub fn density_report(n: usize, m: usize, k: usize, slopes: Option<usize>) -> Vec<DensityBound> {
    if n < 3 {
        return Vec::new();
    }
    let (n, m) = (n as i64, m as i64);
    let entry = |label: String, bound: i64| DensityBound {
        label,
        bound,
        slack: m - bound,
    };
    let mut out = Vec::new();
    match (k, slopes) {
        (0, None) => out.push(entry("0-bend: 4n - sqrt(n) - 6".into(), max_edges_straight(n))),
        (1, None) => out.push(entry("1-bend: 5n - 8".into(), max_edges_one_bend(n))),
        (2, None) => out.push(entry("2-bend: 10n - 12".into(), max_edges_two_bends(n))),
        (0..=2, Some(s)) => out.push(entry(
            format!("{s}-slope 2-bend: min((6 + 4s)n - 12, 71.9n)"),
            max_edges_slopes(n, s as i64),
        )),
        _ => {}
    }
    out
}
