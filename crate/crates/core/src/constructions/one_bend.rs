//! 1-bend drawings on `D + 1` slopes, `D` the maximum degree.
//!
//! Slope `i` is the direction `(1, i)`. Vertex `j` sits at `(j N, y_j)` with
//! `y_j` the least non-negative integer such that no slope line through it
//! meets another vertex and no slope line through it passes through the
//! meeting point of two slope lines of other vertices. Each edge `vw` then
//! bends where an unused line at `v` meets an unused line at `w`.

use std::cmp::Ordering;

use num_bigint::BigInt;

use super::{Certificate, Construction, ConstructionError, Theorem};
use crate::geometry::{Drawing, Point};
use crate::graph::Graph;
use crate::Rational;

/// Bookkeeping from the edge routing.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OneBendTrace {
    /// Fewest unused lines seen at an endpoint just before routing an edge.
    pub min_unused_before_routing: Option<usize>,
    /// Slope lines used per vertex after routing.
    pub lines_used: Vec<usize>,
}

/// Least `y >= 0` avoiding every forbidden position for a vertex at `x0`.
fn free_height(x0: i128, placed: &[(i128, i128)], slopes: i128) -> i128 {
    let j = placed.len();
    let pairs = j * j.saturating_sub(1) / 2;
    let budget = j * slopes as usize + pairs * (slopes * slopes * slopes) as usize;
    let mut forbidden = vec![false; budget + 1];
    let mut mark = |y: i128| {
        if y >= 0 && (y as usize) < forbidden.len() {
            forbidden[y as usize] = true;
        }
    };
    for &(xw, yw) in placed {
        for c in 0..slopes {
            mark(yw + c * (x0 - xw));
        }
    }
    for (qi, &(xq, yq)) in placed.iter().enumerate() {
        for &(xr, yr) in &placed[qi + 1..] {
            for a in 0..slopes {
                for b in 0..slopes {
                    if a == b {
                        continue;
                    }
                    // Meeting point of slope a through q and slope b through r,
                    // with x = num / den.
                    let den = a - b;
                    let num = yr - yq + a * xq - b * xr;
                    for c in 0..slopes {
                        // y = X_y + c (x0 - X_x), scaled by den.
                        let scaled = yq * den + a * (num - xq * den) + c * (x0 * den - num);
                        if scaled % den == 0 {
                            mark(scaled / den);
                        }
                    }
                }
            }
        }
    }
    forbidden.iter().position(|&f| !f).expect("more candidates than forbidden values") as i128
}

/// `(x numerator, y numerator, denominator)` of the meeting point of slope
/// `a` through `p` and slope `b` through `q`.
fn meet(p: (i128, i128), a: i128, q: (i128, i128), b: i128) -> (i128, i128, i128) {
    let den = a - b;
    let xn = q.1 - p.1 + a * p.0 - b * q.0;
    let yn = p.1 * den + a * (xn - p.0 * den);
    (xn, yn, den)
}

/// Squared distance from a meeting point to the midpoint of `p q`, as a
/// fraction `num / den`.
fn midpoint_distance(p: (i128, i128), q: (i128, i128), m: (i128, i128, i128)) -> (i128, i128) {
    let (xn, yn, den) = m;
    let dx = 2 * xn - (p.0 + q.0) * den;
    let dy = 2 * yn - (p.1 + q.1) * den;
    (dx * dx + dy * dy, 4 * den * den)
}

fn exact(num: i128, den: i128) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact 1-bend drawing of `g` (every edge bent) on `D + 1` slopes.
pub fn draw_one_bend(g: &Graph) -> Result<(Construction<Rational>, OneBendTrace), ConstructionError> {
    let n = g.n();
    let delta = g.max_degree();
    let slopes = delta as i128 + 1;
    let spacing = (n as i128) * (delta as i128 + 2);
    let mut placed: Vec<(i128, i128)> = Vec::with_capacity(n);
    for j in 0..n {
        let x0 = j as i128 * spacing;
        let y = free_height(x0, &placed, slopes);
        placed.push((x0, y));
    }

    let mut used = vec![0u64; n];
    let mut trace = OneBendTrace::default();
    let mut d = Drawing::new(
        placed.iter().map(|&(x, y)| Point::new(exact(x, 1), exact(y, 1))).collect(),
        g.edges().to_vec(),
    );
    for (e, &(v, w)) in g.edges().iter().enumerate() {
        let free = |u: usize| -> Vec<i128> { (0..slopes).filter(|&s| used[u] & (1 << s) == 0).collect() };
        let (free_v, free_w) = (free(v), free(w));
        let unused = free_v.len().min(free_w.len());
        assert!(unused >= 2, "fewer than two unused slope lines at an endpoint of ({v}, {w})");
        trace.min_unused_before_routing = Some(trace.min_unused_before_routing.map_or(unused, |m| m.min(unused)));
        let (p, q) = (placed[v], placed[w]);
        let mut best: Option<((i128, i128), i128, i128)> = None;
        for &a in &free_v {
            for &b in &free_w {
                if a == b {
                    continue;
                }
                let dist = midpoint_distance(p, q, meet(p, a, q, b));
                let closer = match best {
                    None => true,
                    Some((bd, _, _)) => (dist.0 * bd.1).cmp(&(bd.0 * dist.1)) == Ordering::Less,
                };
                if closer {
                    best = Some((dist, a, b));
                }
            }
        }
        let (_, a, b) = best.expect("two unused lines at each endpoint leave a distinct pair");
        used[v] |= 1 << a;
        used[w] |= 1 << b;
        let (xn, yn, den) = meet(p, a, q, b);
        d.bends.insert(e, Point::new(exact(xn, den), exact(yn, den)));
    }
    trace.lines_used = used.iter().map(|m| m.count_ones() as usize).collect();
    let certificate = Certificate::slopes(Theorem::OneBend, delta + 1);
    Ok((Construction { graph: g.clone(), drawing: d, certificate }, trace))
}
