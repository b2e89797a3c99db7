//! Degree lower bounds and the counting evaluator.
//!
//! The counting evaluator compares, in the log domain, a lower bound on the
//! number of labelled `D`-regular graphs on `n` vertices with an upper bound
//! on the number of such graphs drawable with `k` slopes.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Serialize, Serializer};
use statrs::function::gamma::ln_gamma;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundsError {
    #[error("n * degree must be even for a regular graph, got n = {n}, degree = {degree}")]
    Parity { n: u64, degree: u64 },
    #[error("invalid counting parameters: {0}")]
    InvalidParameter(String),
}

/// `(max(ceil(D/2), d), D)` for maximum degree `D` and minimum degree `d`:
/// lower bounds on the slopes of any drawing and of any convex drawing.
pub fn elementary_lower_bounds(g: &Graph) -> (usize, usize) {
    let (max, min) = (g.max_degree(), g.min_degree());
    (max.div_ceil(2).max(min), max)
}

/// `ln((n / 3D)^(D n / 2))`.
pub fn log_count_regular(n: u64, degree: u64) -> f64 {
    let (n, d) = (n as f64, degree as f64);
    d * n / 2.0 * (n.ln() - (3.0 * d).ln())
}

/// Below this `n` binomials are evaluated exactly.
const EXACT_BINOMIAL_LIMIT: u64 = 50;

fn ln_binomial(top: u64, bottom: u64) -> f64 {
    if bottom > top {
        return f64::NEG_INFINITY;
    }
    if bottom == 0 || bottom == top {
        return 0.0;
    }
    let (t, b) = (top as f64, bottom as f64);
    ln_gamma(t + 1.0) - ln_gamma(b + 1.0) - ln_gamma(t - b + 1.0)
}

/// Exact `C(top, bottom)`.
pub fn binomial_exact(top: u64, bottom: u64) -> BigUint {
    if bottom > top {
        return BigUint::default();
    }
    let bottom = bottom.min(top - bottom);
    let mut acc = BigUint::one();
    for i in 0..bottom {
        acc = acc * (top - i) / (i + 1);
    }
    acc
}

/// Natural log of a big integer.
fn ln_big(v: &BigUint) -> f64 {
    let bits = v.bits();
    if bits <= 1000 {
        return v.to_f64().expect("fits").ln();
    }
    let shift = bits - 900;
    (v >> shift).to_f64().expect("fits").ln() + shift as f64 * std::f64::consts::LN_2
}

/// `(2n + k) ln(c n^2 (k + 1) / (2n + k)) + ln C(k(n - 1), m)`; negative
/// infinity when `m > k(n - 1)`.
pub fn log_count_slopeable(n: u64, m: u64, k: u64, c: f64) -> f64 {
    let top = k * n.saturating_sub(1);
    if m > top {
        return f64::NEG_INFINITY;
    }
    let (nf, kf) = (n as f64, k as f64);
    let base = (2.0 * nf + kf) * (c * nf * nf * (kf + 1.0) / (2.0 * nf + kf)).ln();
    let binom = if n <= EXACT_BINOMIAL_LIMIT { ln_big(&binomial_exact(top, m)) } else { ln_binomial(top, m) };
    base + binom
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CountingParams {
    pub degree: u64,
    pub epsilon: f64,
    pub n: u64,
    pub c: f64,
}

impl CountingParams {
    pub const DEFAULT_C: f64 = 50.0;

    pub fn new(degree: u64, epsilon: f64, n: u64) -> Result<Self, BoundsError> {
        let p = CountingParams { degree, epsilon, n, c: Self::DEFAULT_C };
        p.check()?;
        Ok(p)
    }

    pub fn with_c(mut self, c: f64) -> Self {
        self.c = c;
        self
    }

    fn check(&self) -> Result<(), BoundsError> {
        if self.degree < 3 {
            return Err(BoundsError::InvalidParameter(format!("degree must be at least 3, got {}", self.degree)));
        }
        if !(self.epsilon > 0.0) || !(self.c > 0.0) || self.n == 0 {
            return Err(BoundsError::InvalidParameter("epsilon, c and n must be positive".into()));
        }
        if (self.n * self.degree) % 2 == 1 {
            return Err(BoundsError::Parity { n: self.n, degree: self.degree });
        }
        Ok(())
    }
}

fn inf_as_text<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
    if v.is_infinite() {
        s.serialize_str(if *v > 0.0 { "inf" } else { "-inf" })
    } else {
        s.serialize_f64(*v)
    }
}

/// One evaluated `n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GapRow {
    pub n: u64,
    pub k: u64,
    #[serde(serialize_with = "inf_as_text")]
    pub log_regular: f64,
    #[serde(serialize_with = "inf_as_text")]
    pub log_slopeable: f64,
    #[serde(serialize_with = "inf_as_text")]
    pub gap: f64,
}

/// `k = ceil(n^(1 - (8 + eps)/(D + 4)))`, `m = D n / 2` and the difference
/// of the two log counts. A positive gap means some `D`-regular graph on
/// `n` vertices needs more than `k` slopes.
pub fn counting_gap(p: &CountingParams) -> Result<GapRow, BoundsError> {
    p.check()?;
    let exponent = 1.0 - (8.0 + p.epsilon) / (p.degree as f64 + 4.0);
    let k = ((p.n as f64).powf(exponent).ceil() as u64).max(1);
    let m = p.degree * p.n / 2;
    let log_regular = log_count_regular(p.n, p.degree);
    let log_slopeable = log_count_slopeable(p.n, m, k, p.c);
    Ok(GapRow { n: p.n, k, log_regular, log_slopeable, gap: log_regular - log_slopeable })
}

/// Gap rows over a grid of `n`, plus the smallest `n` with a positive gap.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapScan {
    pub rows: Vec<GapRow>,
    pub first_positive: Option<u64>,
}

/// Evaluate [`counting_gap`] at each `n` (skipping none: every `n` must
/// satisfy the parity condition).
pub fn counting_scan(degree: u64, epsilon: f64, c: f64, ns: &[u64]) -> Result<GapScan, BoundsError> {
    let rows = ns
        .iter()
        .map(|&n| counting_gap(&CountingParams::new(degree, epsilon, n)?.with_c(c)))
        .collect::<Result<Vec<_>, _>>()?;
    let first_positive = rows.iter().find(|r| r.gap > 0.0).map(|r| r.n);
    Ok(GapScan { rows, first_positive })
}

/// `10^lo, 10^(lo+1), ..., 10^hi`.
pub fn decade_grid(lo: u32, hi: u32) -> Vec<u64> {
    (lo..=hi).map(|e| 10u64.pow(e)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_complete_multipartite, make_path};
    use num_bigint::BigUint;

    #[test]
    fn degree_bounds() {
        assert_eq!(elementary_lower_bounds(&make_complete(5).unwrap()), (4, 4));
        assert_eq!(elementary_lower_bounds(&make_path(4).unwrap()), (1, 2));
        assert_eq!(elementary_lower_bounds(&make_complete_multipartite(&[4, 4]).unwrap()), (4, 4));
        assert_eq!(elementary_lower_bounds(&Graph::empty(1)), (0, 0));
    }

    #[test]
    fn regular_count() {
        assert_eq!(log_count_regular(15, 5), 0.0);
        assert!((log_count_regular(30, 5) - 75.0 * 2f64.ln()).abs() < 1e-9);
        assert!((log_count_regular(300, 5) - 750.0 * 20f64.ln()).abs() < 1e-9);
    }

    /// Exact value of the slopeable count as a ratio of big integers.
    fn exact_log(n: u64, m: u64, k: u64, c: u64) -> f64 {
        let e = (2 * n + k) as u32;
        let num = BigUint::from(c * n * n * (k + 1)).pow(e) * binomial_exact(k * (n - 1), m);
        let den = BigUint::from(2 * n + k).pow(e);
        ln_big(&num) - ln_big(&den)
    }

    #[test]
    fn slopeable_count_matches_exact() {
        for n in [2u64, 10, 27, 50] {
            for k in 1..=10 {
                for m in [0, k * (n - 1) / 3, k * (n - 1)] {
                    let fast = log_count_slopeable(n, m, k, 50.0);
                    let exact = exact_log(n, m, k, 50);
                    assert!(((fast - exact) / exact).abs() < 1e-9, "n={n} k={k} m={m}: {fast} vs {exact}");
                }
            }
        }
        assert_eq!(log_count_slopeable(10, 28, 3, 50.0), f64::NEG_INFINITY);
        // Above the exact limit the log-gamma path is used.
        let a = log_count_slopeable(60, 100, 4, 50.0);
        let b = exact_log(60, 100, 4, 50);
        assert!(((a - b) / b).abs() < 1e-9);
    }

    #[test]
    fn gap_rows() {
        assert!(matches!(CountingParams::new(5, 1.0, 11), Err(BoundsError::Parity { .. })));
        let row = counting_gap(&CountingParams::new(5, 1.0, 1000).unwrap()).unwrap();
        assert_eq!(row.k, 1);
        assert_eq!(row.gap, f64::INFINITY);
        let text = serde_json::to_string(&row).unwrap();
        assert!(text.contains("\"log_slopeable\":\"-inf\""));
        let scan = counting_scan(20, 1.0, 50.0, &decade_grid(3, 8)).unwrap();
        assert_eq!(scan.rows.len(), 6);
    }
}
