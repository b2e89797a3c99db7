//! Blow-up of a host drawing along an H-partition, and its two
//! specialisations: bandwidth rows and tree-partitions.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use super::tree::draw_forest;
use super::{Certificate, Construction, ConstructionError, Theorem};
use crate::geometry::{length_classes, slope_classes, validate_drawing, Drawing, Point};
use crate::graph::{Graph, VertexOrdering};
use crate::scalar::Scalar;
use crate::Rational;

const RADIUS_HALVINGS: usize = 64;
const ROTATION_GRID: usize = 1024;

/// A map from the vertices of `G` to the nodes of a host graph `H` such that
/// every edge of `G` stays inside a node or runs along an edge of `H`.
/// Each block is ordered; a vertex's position in its block is its slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPartition {
    host: Graph,
    assign: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl HPartition {
    /// Blocks ordered by vertex id.
    pub fn new(g: &Graph, host: Graph, assign: Vec<usize>) -> Result<Self, ConstructionError> {
        if assign.len() != g.n() {
            return Err(ConstructionError::InvalidPartition(format!(
                "{} assignments for {} vertices",
                assign.len(),
                g.n()
            )));
        }
        let mut blocks = vec![Vec::new(); host.n()];
        for (v, &x) in assign.iter().enumerate() {
            if x >= host.n() {
                return Err(ConstructionError::InvalidPartition(format!("vertex {v} mapped to missing node {x}")));
            }
            blocks[x].push(v);
        }
        Self::from_blocks(g, host, blocks)
    }

    /// Blocks given explicitly, `blocks[x]` being the preimage of node `x`.
    pub fn from_blocks(g: &Graph, host: Graph, blocks: Vec<Vec<usize>>) -> Result<Self, ConstructionError> {
        if blocks.len() != host.n() {
            return Err(ConstructionError::InvalidPartition(format!(
                "{} blocks for {} host nodes",
                blocks.len(),
                host.n()
            )));
        }
        let mut assign = vec![usize::MAX; g.n()];
        for (x, block) in blocks.iter().enumerate() {
            for &v in block {
                if v >= g.n() || assign[v] != usize::MAX {
                    return Err(ConstructionError::InvalidPartition(format!("vertex {v} missing or repeated")));
                }
                assign[v] = x;
            }
        }
        if let Some(v) = assign.iter().position(|&x| x == usize::MAX) {
            return Err(ConstructionError::InvalidPartition(format!("vertex {v} is unassigned")));
        }
        for &(u, v) in g.edges() {
            let (x, y) = (assign[u], assign[v]);
            if x != y && !host.has_edge(x, y) {
                return Err(ConstructionError::InvalidPartition(format!(
                    "edge ({u}, {v}) maps to non-adjacent nodes {x}, {y}"
                )));
            }
        }
        Ok(HPartition { host, assign, blocks })
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn assign(&self) -> &[usize] {
        &self.assign
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Largest block size.
    pub fn width(&self) -> usize {
        self.blocks.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// Slope, length and slope-length pair counts of a host drawing, with the
/// per-edge class ids behind them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HostDrawingStats {
    pub s: usize,
    pub l: usize,
    pub t: usize,
    pub edge_slope: Vec<usize>,
    pub edge_length: Vec<usize>,
    pub edge_pair: Vec<usize>,
}

/// Measure a straight-line host drawing.
pub fn host_stats<S: Scalar>(d: &Drawing<S>) -> Result<HostDrawingStats, ConstructionError> {
    if !d.bends.is_empty() {
        return Err(ConstructionError::InvalidHostDrawing);
    }
    let mut plain = d.clone();
    plain.slope_class.clear();
    plain.length_class.clear();
    let edge_slope = slope_classes(&plain)?;
    let edge_length = length_classes(&plain)?;
    let mut pairs = BTreeMap::new();
    let edge_pair = edge_slope
        .iter()
        .zip(&edge_length)
        .map(|(&a, &b)| {
            let next = pairs.len();
            *pairs.entry((a, b)).or_insert(next)
        })
        .collect();
    Ok(HostDrawingStats {
        s: edge_slope.iter().max().map_or(0, |m| m + 1),
        l: edge_length.iter().max().map_or(0, |m| m + 1),
        t: pairs.len(),
        edge_slope,
        edge_length,
        edge_pair,
    })
}

/// Rotation of the `k`-gon maximising the smallest angle between a chord
/// slope and a host slope, with that angle.
fn best_rotation(k: usize, host_angles: &[f64]) -> (f64, f64) {
    if k < 2 || host_angles.is_empty() {
        return (0.0, PI / 2.0);
    }
    let period = PI / k as f64;
    // Chord slopes are theta + pi/2 + m pi/k, so only theta mod pi/k matters.
    let gap = |theta: f64| {
        host_angles
            .iter()
            .map(|&h| {
                let d = (h - theta - PI / 2.0).rem_euclid(period);
                d.min(period - d)
            })
            .fold(f64::INFINITY, f64::min)
    };
    let mut best = (0.0, gap(0.0));
    for i in 1..ROTATION_GRID {
        let theta = period * i as f64 / ROTATION_GRID as f64;
        let g = gap(theta);
        if g > best.1 {
            best = (theta, g);
        }
    }
    let mut step = period / ROTATION_GRID as f64;
    for _ in 0..40 {
        for theta in [best.0 - step, best.0 + step] {
            let g = gap(theta);
            if g > best.1 {
                best = (theta, g);
            }
        }
        step /= 2.0;
    }
    best
}

fn distance_to_segment(p: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let len2 = dx * dx + dy * dy;
    let t = if len2 > 0.0 { (((p.0 - a.0) * dx + (p.1 - a.1) * dy) / len2).clamp(0.0, 1.0) } else { 0.0 };
    (p.0 - a.0 - t * dx).hypot(p.1 - a.1 - t * dy)
}

/// Replace every host node by a small regular `k`-gon carrying its block,
/// slot `i` on corner `i`. Slope and length labels record the classes the
/// construction guarantees.
pub fn blow_up<S: Scalar>(
    g: &Graph,
    host_drawing: &Drawing<S>,
    part: &HPartition,
) -> Result<Construction<f64>, ConstructionError> {
    let host = part.host();
    if !validate_drawing(host, host_drawing).is_valid() || !host_drawing.bends.is_empty() {
        return Err(ConstructionError::InvalidHostDrawing);
    }
    let stats = host_stats(host_drawing)?;
    let k = part.width().max(1);
    let pos: Vec<(f64, f64)> = host_drawing.vertices.iter().map(Point::to_f64).collect();

    // Representative direction per host slope class and canonical
    // orientation of every host edge along it.
    let mut class_dir: Vec<Option<(f64, f64)>> = vec![None; stats.s];
    let mut tail = Vec::with_capacity(host.m());
    for (e, &(x, y)) in host_drawing.edges.iter().enumerate() {
        let v = (pos[y].0 - pos[x].0, pos[y].1 - pos[x].1);
        let rep = *class_dir[stats.edge_slope[e]].get_or_insert_with(|| {
            let a = crate::geometry::normalize_angle(v.1.atan2(v.0));
            (a.cos(), a.sin())
        });
        tail.push(if v.0 * rep.0 + v.1 * rep.1 > 0.0 { x } else { y });
    }
    let host_angles: Vec<f64> = class_dir.iter().flatten().map(|&(c, s)| s.atan2(c)).collect();
    let (theta, eps) = best_rotation(k, &host_angles);

    let mut slot = vec![0usize; g.n()];
    for block in part.blocks() {
        for (i, &v) in block.iter().enumerate() {
            slot[v] = i;
        }
    }
    let host_edge: BTreeMap<(usize, usize), usize> = host_drawing
        .edges
        .iter()
        .enumerate()
        .map(|(e, &(x, y))| ((x.min(y), x.max(y)), e))
        .collect();

    let min_dist = (0..pos.len())
        .flat_map(|a| (a + 1..pos.len()).map(move |b| (a, b)))
        .map(|(a, b)| (pos[a].0 - pos[b].0).hypot(pos[a].1 - pos[b].1))
        .fold(f64::INFINITY, f64::min);
    let mut r = if min_dist.is_finite() { min_dist / 3.0 } else { 1.0 };

    for _ in 0..RADIUS_HALVINGS {
        let fits = host_drawing.edges.iter().all(|&(x, y)| {
            let len = (pos[x].0 - pos[y].0).hypot(pos[x].1 - pos[y].1);
            2.0 * r < len
                && (2.0 * r / len).asin() < eps
                && (0..pos.len()).filter(|&z| z != x && z != y).all(|z| distance_to_segment(pos[z], pos[x], pos[y]) > 2.0 * r)
        });
        if fits {
            let d = place(g, part, &pos, &stats, &tail, &host_edge, &slot, k, theta, r);
            if validate_drawing(g, &d).is_valid() {
                let t = stats.t;
                let cross = t * (k * k - k);
                let mut certificate = Certificate::slopes(Theorem::BlowUp, k + stats.s + cross);
                certificate.claimed_length_bound = Some(k / 2 + stats.l + cross);
                certificate.claimed_length_bound_ceil = Some(k.div_ceil(2) + stats.l + cross);
                return Ok(Construction { graph: g.clone(), drawing: d, certificate });
            }
        }
        r /= 2.0;
    }
    Err(ConstructionError::RadiusSearch(RADIUS_HALVINGS))
}

#[allow(clippy::too_many_arguments)]
fn place(
    g: &Graph,
    part: &HPartition,
    pos: &[(f64, f64)],
    stats: &HostDrawingStats,
    tail: &[usize],
    host_edge: &BTreeMap<(usize, usize), usize>,
    slot: &[usize],
    k: usize,
    theta: f64,
    r: f64,
) -> Drawing<f64> {
    let corner = |x: usize, i: usize| {
        if k == 1 {
            return Point::new(pos[x].0, pos[x].1);
        }
        let a = theta + 2.0 * PI * i as f64 / k as f64;
        Point::new(pos[x].0 + r * a.cos(), pos[x].1 + r * a.sin())
    };
    let assign = part.assign();
    let vertices = (0..g.n()).map(|v| corner(assign[v], slot[v])).collect();
    let mut d = Drawing::new(vertices, g.edges().to_vec());
    let (k64, s64, l64) = (k as i64, stats.s as i64, stats.l as i64);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let (x, y) = (assign[u], assign[v]);
        let (slope, length) = if x == y {
            let (i, j) = (slot[u], slot[v]);
            let step = i.abs_diff(j).min(k - i.abs_diff(j));
            (((i + j) % k) as i64, step as i64 - 1)
        } else {
            let he = host_edge[&(x.min(y), x.max(y))];
            // Orient (u, v) along the canonical direction of the host edge.
            let (i, j) = if tail[he] == x { (slot[u], slot[v]) } else { (slot[v], slot[u]) };
            if i == j {
                (k64 + stats.edge_slope[he] as i64, k64 + stats.edge_length[he] as i64)
            } else {
                let c = ((stats.edge_pair[he] * k + i) * k + j) as i64;
                (k64 + s64 + c, k64 + l64 + c)
            }
        };
        d.slope_class.insert(e, slope);
        d.length_class.insert(e, length);
    }
    d
}

/// Blow-up of a horizontal path host whose nodes carry consecutive runs of
/// `b` vertices of the ordering, `b` its width.
pub fn draw_bandwidth(g: &Graph, o: &VertexOrdering) -> Result<Construction<f64>, ConstructionError> {
    if o.order().len() != g.n() || o.recompute_width(g) != o.width() {
        return Err(ConstructionError::InvalidParameter("ordering does not belong to the graph".into()));
    }
    let b = o.width().max(1);
    let blocks: Vec<Vec<usize>> = o.order().chunks(b).map(<[usize]>::to_vec).collect();
    let m = blocks.len();
    let host = Graph::from_edges(m, (1..m).map(|i| (i - 1, i)))?;
    let host_drawing: Drawing<Rational> =
        Drawing::new((0..m as i64).map(|i| Point::from_ints(i, 0)).collect(), host.edges().to_vec());
    let part = HPartition::from_blocks(g, host, blocks)?;
    let mut c = blow_up(g, &host_drawing, &part)?;
    c.certificate = Certificate::slopes(Theorem::Bandwidth, b * (b + 1) / 2 + 1);
    Ok(c)
}

/// Draw the forest host with few slopes, then blow it up.
pub fn draw_tree_partitioned(g: &Graph, part: &HPartition) -> Result<Construction<f64>, ConstructionError> {
    if !part.host().is_forest() {
        return Err(ConstructionError::InvalidPartition("host is not a forest".into()));
    }
    let host = draw_forest(part.host())?;
    let mut c = blow_up(g, &host.drawing, part)?;
    c.certificate.theorem = Theorem::TreePartition;
    Ok(c)
}
