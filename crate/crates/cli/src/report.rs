//! Human-readable and JSON reports.

use std::fmt::Write as _;

use anyhow::{bail, Context, Result};
use serde::Serialize;
use slopeforge::bounds::{counting_scan, decade_grid, elementary_lower_bounds, CountingParams, GapScan};
use slopeforge::constructions::{kab_slope_bounds, Certificate, Verification};
use slopeforge::geometry::AnyDrawing;
use slopeforge::Graph;

use crate::source::canonical_key;

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn theorem_name(c: &Certificate) -> String {
    serde_json::to_value(c.theorem).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default()
}

pub fn verification(d: &AnyDrawing, v: &Verification, cert: Option<&Certificate>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "mode: {}", if d.is_exact() { "exact" } else { "numeric" });
    let _ = writeln!(out, "vertices: {}", d.n());
    let _ = writeln!(out, "edges: {}", d.edges().len());
    let _ = writeln!(out, "bends: {}", yes(d.has_bends()));
    let _ = writeln!(out, "slopes: {}", v.slopes);
    match v.lengths {
        Some(l) => _ = writeln!(out, "lengths: {l}"),
        None => _ = writeln!(out, "lengths: not measured"),
    }
    let _ = writeln!(out, "crossings: {}", v.crossings);
    let _ = writeln!(out, "valid: {}", yes(v.validity.is_valid()));
    for (a, b) in &v.validity.coincident {
        let _ = writeln!(out, "  coincident: {a:?} and {b:?}");
    }
    for (p, e) in &v.validity.point_on_edge {
        let _ = writeln!(out, "  {p:?} lies on edge {e}");
    }
    let _ = writeln!(out, "convex: {}", yes(v.convex));
    let consistent = v.slopes >= v.sn_lower_bound && (!v.convex || v.slopes >= v.csn_lower_bound);
    let _ = writeln!(
        out,
        "lower bounds: sn >= {}, csn >= {} ({})",
        v.sn_lower_bound,
        v.csn_lower_bound,
        if consistent { "consistent" } else { "violated" }
    );
    match cert {
        Some(c) => {
            let _ = write!(out, "certificate: {}, slopes <= {}", theorem_name(c), c.claimed_slope_bound);
            if let Some(l) = c.claimed_length_bound {
                let _ = write!(out, ", lengths <= {l}");
            }
            if c.claimed_plane {
                let _ = write!(out, ", plane");
            }
            if c.claimed_convex {
                let _ = write!(out, ", convex");
            }
            let _ = writeln!(out, ": {}", if v.violations.is_empty() { "ok" } else { "VIOLATED" });
        }
        None => _ = writeln!(out, "certificate: none"),
    }
    for s in &v.violations {
        let _ = writeln!(out, "  violation: {s}");
    }
    for s in &v.notes {
        let _ = writeln!(out, "  note: {s}");
    }
    out
}

/// One line for a verified construction.
pub fn summary(v: &Verification, c: &Certificate) -> String {
    let mut s = format!("{}: {} slopes (claimed <= {})", theorem_name(c), v.slopes, c.claimed_slope_bound);
    if let (Some(l), Some(b)) = (v.lengths, c.claimed_length_bound) {
        let _ = write!(s, ", {l} lengths (claimed <= {b})");
    }
    let _ = write!(s, ", {} crossings, verified", v.crossings);
    s
}

/// Why a drawing failed.
pub fn failure(v: &Verification) -> String {
    let mut parts = Vec::new();
    if !v.validity.is_valid() {
        parts.push(format!(
            "invalid drawing: {} coincident pairs, {} points on foreign edges",
            v.validity.coincident.len(),
            v.validity.point_on_edge.len()
        ));
    }
    parts.extend(v.violations.iter().cloned());
    parts.join("; ")
}

#[derive(Debug, Serialize)]
pub struct GraphBounds {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub sn_lower: usize,
    pub csn_lower: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complete_bipartite: Option<BipartiteBounds>,
}

#[derive(Debug, Serialize)]
pub struct BipartiteBounds {
    pub a: usize,
    pub b: usize,
    pub sn_lower: usize,
    pub sn_upper: usize,
}

pub fn graph_bounds(g: &Graph) -> Result<GraphBounds> {
    let (sn_lower, csn_lower) = elementary_lower_bounds(g);
    let complete_bipartite = match g.complete_multipartite_parts() {
        Some(parts) if parts.len() == 2 => {
            let (a, b) = (parts[0].len().min(parts[1].len()), parts[0].len().max(parts[1].len()));
            let (lo, hi) = kab_slope_bounds(a, b)?;
            Some(BipartiteBounds { a, b, sn_lower: lo.max(sn_lower), sn_upper: hi })
        }
        _ => None,
    };
    Ok(GraphBounds {
        n: g.n(),
        m: g.m(),
        max_degree: g.max_degree(),
        min_degree: g.min_degree(),
        sn_lower,
        csn_lower,
        complete_bipartite,
    })
}

pub fn graph_bounds_text(b: &GraphBounds) -> String {
    let mut out = format!(
        "n = {}, m = {}, max degree {}, min degree {}\nsn >= {}\ncsn >= {}\n",
        b.n, b.m, b.max_degree, b.min_degree, b.sn_lower, b.csn_lower
    );
    if let Some(k) = &b.complete_bipartite {
        let _ = writeln!(out, "K_{{{},{}}}: {} <= sn <= {}", k.a, k.b, k.sn_lower, k.sn_upper);
    }
    out
}

#[derive(Debug, Serialize)]
pub struct CountingTable {
    pub degree: u64,
    pub epsilon: f64,
    pub c: f64,
    #[serde(flatten)]
    pub scan: GapScan,
}

/// Parse `Δ=5 ε=1 c=50 n=10,100` and evaluate the gap. Without `n=`, the
/// grid is the decades `10^from..=10^to`.
pub fn counting(tokens: &[String], from: u32, to: u32) -> Result<CountingTable> {
    let (mut degree, mut epsilon, mut c, mut ns) = (None, 1.0, CountingParams::DEFAULT_C, None);
    for t in tokens {
        let (k, v) = t.split_once('=').with_context(|| format!("expected key=value, got {t:?}"))?;
        let bad = || format!("bad value {v:?} for {k}");
        match canonical_key(k.trim()).as_str() {
            "degree" => degree = Some(v.parse::<u64>().with_context(bad)?),
            "epsilon" => epsilon = v.parse::<f64>().with_context(bad)?,
            "c" => c = v.parse::<f64>().with_context(bad)?,
            "n" => {
                ns = Some(v.split(',').map(|x| x.trim().parse::<u64>().with_context(bad)).collect::<Result<Vec<_>>>()?)
            }
            other => bail!("unknown counting parameter {other}"),
        }
    }
    let degree = degree.context("counting needs a degree, e.g. Δ=5")?;
    if from > to || to > 18 {
        bail!("decade range {from}..{to} is empty or too large");
    }
    let ns = ns.unwrap_or_else(|| decade_grid(from, to));
    let scan = counting_scan(degree, epsilon, c, &ns)?;
    Ok(CountingTable { degree, epsilon, c, scan })
}

fn num(x: f64) -> String {
    if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.into()
    } else {
        format!("{x:.3}")
    }
}

pub fn counting_text(t: &CountingTable) -> String {
    let mut out = format!("degree {}, epsilon {}, c {}\n", t.degree, t.epsilon, t.c);
    let _ = writeln!(out, "{:>20} {:>12} {:>20} {:>20} {:>20}", "n", "k", "log_regular", "log_slopeable", "gap");
    for r in &t.scan.rows {
        let _ = writeln!(
            out,
            "{:>20} {:>12} {:>20} {:>20} {:>20}",
            r.n,
            r.k,
            num(r.log_regular),
            num(r.log_slopeable),
            num(r.gap)
        );
    }
    match t.scan.first_positive {
        Some(n) => _ = writeln!(out, "first positive gap at n = {n}"),
        None => _ = writeln!(out, "no positive gap on this grid"),
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use slopeforge::graph::{make_complete_multipartite, make_petersen};

    #[test]
    fn bipartite_bounds_detected() {
        let b = graph_bounds(&make_complete_multipartite(&[4, 4]).unwrap()).unwrap();
        assert_eq!(b.sn_lower, 4);
        let k = b.complete_bipartite.unwrap();
        assert_eq!((k.a, k.b, k.sn_lower, k.sn_upper), (4, 4, 4, 4));
        assert!(graph_bounds(&make_petersen()).unwrap().complete_bipartite.is_none());
        assert_eq!(graph_bounds(&Graph::empty(1)).unwrap().sn_lower, 0);
    }

    #[test]
    fn counting_params() {
        let t = counting(&["Δ=5".into(), "ε=1".into()], 1, 3).unwrap();
        assert_eq!(t.scan.rows.len(), 3);
        assert!(counting(&["ε=1".into()], 1, 3).is_err());
        assert!(counting(&["Δ=5".into(), "n=11".into()], 1, 3).is_err());
        assert!(counting(&["Δ=5".into(), "x=1".into()], 1, 3).is_err());
    }
}
