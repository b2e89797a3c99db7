//! Drawing validity, crossings and convexity.
//!
//! All predicates run on the normalized drawing. Exact drawings use exact
//! orientation signs; a cheap f64 bounding-box filter with a relative margin
//! far above conversion error skips pairs that cannot touch.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use serde::Serialize;

use super::drawing::{Node, Segment};
use super::{Drawing, GeometryError, Point};
use crate::graph::Graph;
use crate::scalar::{sign_with_tol, Scalar};

/// Problems found by [`validate_drawing`]. Empty lists mean a valid drawing.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct ValidityReport {
    /// Structural mismatch between the drawing and the graph.
    pub structure: Vec<String>,
    /// Pairs of points (vertices or bends) placed at the same position.
    pub coincident: Vec<(Node, Node)>,
    /// A point lying on a segment it is not an endpoint of: (point, edge).
    pub point_on_edge: Vec<(Node, usize)>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.structure.is_empty() && self.coincident.is_empty() && self.point_on_edge.is_empty()
    }
}

/// Normalized points plus f64 shadows for filtering.
struct Kernel<S> {
    pub(crate) d: Drawing<S>,
    approx: Vec<(f64, f64)>,
    bend_slot: std::collections::HashMap<usize, usize>,
    margin: f64,
    tol: f64,
}

impl<S: Scalar> Kernel<S> {
    pub(crate) fn new(d: &Drawing<S>) -> Self {
        let d = d.normalized();
        let mut approx: Vec<(f64, f64)> = d.vertices.iter().map(Point::to_f64).collect();
        let mut bend_slot = std::collections::HashMap::new();
        for (&e, p) in &d.bends {
            bend_slot.insert(e, approx.len());
            approx.push(p.to_f64());
        }
        let scale = approx.iter().fold(1.0f64, |m, &(x, y)| m.max(x.abs()).max(y.abs()));
        let tol = S::LENGTH_TOL;
        let margin = if S::EXACT { 1e-9 * scale } else { 2.0 * tol + 1e-12 * scale };
        Kernel { d, approx, bend_slot, margin, tol }
    }

    fn slot(&self, n: Node) -> usize {
        match n {
            Node::Vertex(v) => v,
            Node::Bend(e) => self.bend_slot[&e],
        }
    }

    fn approx(&self, n: Node) -> (f64, f64) {
        self.approx[self.slot(n)]
    }

    fn point(&self, n: Node) -> &Point<S> {
        self.d.point(n)
    }

    /// Orientation of `c` relative to the directed line `a -> b`. Floating
    /// kernels report `Equal` when `c` is within the tolerance of the line.
    pub(crate) fn orient(&self, a: &Point<S>, b: &Point<S>, c: &Point<S>) -> Ordering {
        let (bx, by) = b.sub(a);
        let (cx, cy) = c.sub(a);
        let cross = bx.clone() * cy - by.clone() * cx;
        if S::EXACT {
            sign_with_tol(&cross, 0.0)
        } else {
            let len = bx.to_f64_lossy().hypot(by.to_f64_lossy());
            sign_with_tol(&cross, self.tol * len.max(f64::MIN_POSITIVE))
        }
    }

    fn same_position(&self, a: Node, b: Node) -> bool {
        let (pa, pb) = (self.approx(a), self.approx(b));
        if (pa.0 - pb.0).abs() > self.margin || (pa.1 - pb.1).abs() > self.margin {
            return false;
        }
        if S::EXACT {
            self.point(a) == self.point(b)
        } else {
            (pa.0 - pb.0).hypot(pa.1 - pb.1) <= self.tol
        }
    }

    fn boxes_apart(&self, a: (f64, f64), b: (f64, f64), c: (f64, f64), d: (f64, f64)) -> bool {
        let m = self.margin;
        a.0.max(b.0) + m < c.0.min(d.0)
            || c.0.max(d.0) + m < a.0.min(b.0)
            || a.1.max(b.1) + m < c.1.min(d.1)
            || c.1.max(d.1) + m < a.1.min(b.1)
    }

    /// Whether `c`, known collinear with `a b`, lies within the closed
    /// segment (tolerance-padded on floating kernels).
    fn within(&self, a: &Point<S>, b: &Point<S>, c: &Point<S>) -> bool {
        let (bx, by) = b.sub(a);
        let (cx, cy) = c.sub(a);
        let dot = bx.clone() * cx.clone() + by.clone() * cy.clone();
        let len2 = bx.clone() * bx + by.clone() * by;
        if S::EXACT {
            dot >= S::zero() && dot <= len2
        } else {
            let len = len2.to_f64_lossy().sqrt();
            let t = dot.to_f64_lossy();
            t >= -self.tol * len && t <= len2.to_f64_lossy() + self.tol * len
        }
    }

    /// Whether point node `p` lies on segment `s`.
    fn on_segment(&self, p: Node, s: &Segment) -> bool {
        let (a, b, c) = (self.approx(s.from), self.approx(s.to), self.approx(p));
        if self.boxes_apart(a, b, c, c) {
            return false;
        }
        let (pa, pb, pc) = (self.point(s.from), self.point(s.to), self.point(p));
        self.orient(pa, pb, pc) == Ordering::Equal && self.within(pa, pb, pc)
    }

    /// Whether two segments share a point other than a common endpoint node.
    fn segments_meet(&self, s: &Segment, t: &Segment) -> bool {
        let (a, b, c, d) = (self.approx(s.from), self.approx(s.to), self.approx(t.from), self.approx(t.to));
        if self.boxes_apart(a, b, c, d) {
            return false;
        }
        let shared: Vec<Node> =
            [s.from, s.to].into_iter().filter(|n| *n == t.from || *n == t.to).collect();
        let (pa, pb, pc, pd) = (self.point(s.from), self.point(s.to), self.point(t.from), self.point(t.to));
        if let Some(&x) = shared.first() {
            if shared.len() == 2 {
                return true;
            }
            // Common endpoint: they meet elsewhere only when collinear and
            // pointing the same way from it.
            let other_s = if s.from == x { s.to } else { s.from };
            let other_t = if t.from == x { t.to } else { t.from };
            let px = self.point(x);
            let (po, pt) = (self.point(other_s), self.point(other_t));
            if self.orient(px, po, pt) != Ordering::Equal {
                return false;
            }
            let (ux, uy) = po.sub(px);
            let (vx, vy) = pt.sub(px);
            return ux * vx + uy * vy > S::zero();
        }
        let o1 = self.orient(pa, pb, pc);
        let o2 = self.orient(pa, pb, pd);
        let o3 = self.orient(pc, pd, pa);
        let o4 = self.orient(pc, pd, pb);
        if o1 != o2 && o3 != o4 && o1 != Ordering::Equal && o2 != Ordering::Equal && o3 != Ordering::Equal && o4 != Ordering::Equal {
            return true;
        }
        (o1 == Ordering::Equal && self.within(pa, pb, pc))
            || (o2 == Ordering::Equal && self.within(pa, pb, pd))
            || (o3 == Ordering::Equal && self.within(pc, pd, pa))
            || (o4 == Ordering::Equal && self.within(pc, pd, pb))
    }
}

fn structure_issues<S: Scalar>(g: &Graph, d: &Drawing<S>) -> Vec<String> {
    let mut out = Vec::new();
    if d.vertices.len() != g.n() {
        out.push(format!("drawing places {} vertices, graph has {}", d.vertices.len(), g.n()));
    }
    let mut de: Vec<(usize, usize)> = d.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    de.sort_unstable();
    if de != g.edges() {
        out.push("drawing edge set differs from graph edge set".into());
    }
    if let Some(&e) = d.bends.keys().find(|&&e| e >= d.edges.len()) {
        out.push(format!("bend on nonexistent edge {e}"));
    }
    out
}

/// Check that `d` is a drawing of `g`: distinct points, and no segment
/// passes through a point other than its own endpoints. Bent drawings are
/// checked as the subdivided graph, bends included.
pub fn validate_drawing<S: Scalar>(g: &Graph, d: &Drawing<S>) -> ValidityReport {
    let mut report = ValidityReport { structure: structure_issues(g, d), ..Default::default() };
    if d.vertices.len() != g.n() || d.edges.iter().any(|&(u, v)| u >= d.n() || v >= d.n()) {
        return report;
    }
    if d.bends.keys().any(|&e| e >= d.edges.len()) {
        return report;
    }
    let k = Kernel::new(d);
    let nodes = k.d.nodes();
    for (i, &a) in nodes.iter().enumerate() {
        for &b in &nodes[i + 1..] {
            if k.same_position(a, b) {
                report.coincident.push((a, b));
            }
        }
    }
    for s in k.d.segments() {
        for &p in &nodes {
            if p == s.from || p == s.to {
                continue;
            }
            if k.on_segment(p, &s) {
                report.point_on_edge.push((p, s.edge));
            }
        }
    }
    report
}

/// Number of edge pairs that share a point other than a common endpoint.
pub fn count_crossings<S: Scalar>(g: &Graph, d: &Drawing<S>) -> Result<usize, GeometryError> {
    if !structure_issues(g, d).is_empty() {
        return Err(GeometryError::GraphMismatch);
    }
    let k = Kernel::new(d);
    let segs = k.d.segments();
    let mut pairs = BTreeSet::new();
    for (i, s) in segs.iter().enumerate() {
        for t in &segs[i + 1..] {
            if s.edge == t.edge || pairs.contains(&(s.edge, t.edge)) {
                continue;
            }
            if k.segments_meet(s, t) {
                pairs.insert((s.edge, t.edge));
            }
        }
    }
    Ok(pairs.len())
}

/// Every vertex on the convex hull and no three vertices collinear.
pub fn is_convex_drawing<S: Scalar>(g: &Graph, d: &Drawing<S>) -> bool {
    if !structure_issues(g, d).is_empty() {
        return false;
    }
    let k = Kernel::new(d);
    let pts = &k.d.vertices;
    let n = pts.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if k.orient(&pts[a], &pts[b], &pts[c]) == Ordering::Equal {
                    return false;
                }
            }
        }
    }
    if n <= 3 {
        return true;
    }
    // Monotone chain; with no three collinear, hull size == n iff every
    // vertex is extreme.
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| {
        pts[a]
            .x
            .partial_cmp(&pts[b].x)
            .unwrap_or(Ordering::Equal)
            .then(pts[a].y.partial_cmp(&pts[b].y).unwrap_or(Ordering::Equal))
    });
    let mut hull: Vec<usize> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let seq: Vec<usize> = if pass == 0 { idx.clone() } else { idx.iter().rev().copied().collect() };
        for &p in &seq {
            while hull.len() >= start + 2
                && k.orient(&pts[hull[hull.len() - 2]], &pts[hull[hull.len() - 1]], &pts[p]) != Ordering::Greater
            {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull.len() == n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_path};
    use crate::Rational;

    fn exact(pts: &[(i64, i64)], edges: &[(usize, usize)]) -> Drawing<Rational> {
        Drawing::new(pts.iter().map(|&(x, y)| Point::from_ints(x, y)).collect(), edges.to_vec())
    }

    #[test]
    fn vertex_on_edge_is_reported() {
        // K_2 on (0,0)-(2,0) plus a third vertex at the midpoint.
        let g = Graph::from_edges(3, [(0, 2)]).unwrap();
        let d = exact(&[(0, 0), (1, 0), (2, 0)], &[(0, 2)]);
        let r = validate_drawing(&g, &d);
        assert_eq!(r.point_on_edge, vec![(Node::Vertex(1), 0)]);
        assert!(!r.is_valid());
    }

    #[test]
    fn duplicate_positions_are_reported() {
        let g = make_path(3).unwrap();
        let d = exact(&[(0, 0), (1, 0), (0, 0)], &[(0, 1), (1, 2)]);
        let r = validate_drawing(&g, &d);
        assert!(r.coincident.contains(&(Node::Vertex(0), Node::Vertex(2))));
    }

    #[test]
    fn bend_on_vertex_is_a_violation() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let mut d = exact(&[(0, 0), (2, 0), (1, 1)], &[(0, 1)]);
        d.bends.insert(0, Point::from_ints(1, 1));
        assert!(!validate_drawing(&g, &d).is_valid());
    }

    #[test]
    fn square_k4() {
        let g = make_complete(4).unwrap();
        let d = exact(&[(0, 0), (1, 0), (1, 1), (0, 1)], g.edges());
        assert!(validate_drawing(&g, &d).is_valid());
        assert_eq!(count_crossings(&g, &d).unwrap(), 1);
        assert!(is_convex_drawing(&g, &d));
    }

    #[test]
    fn plane_path_and_interior_vertex() {
        let g = make_path(4).unwrap();
        let d = exact(&[(0, 0), (1, 0), (2, 1), (3, 0)], g.edges());
        assert_eq!(count_crossings(&g, &d).unwrap(), 0);
        let g = Graph::empty(4);
        let d = exact(&[(0, 0), (4, 0), (0, 4), (1, 1)], &[]);
        assert!(!is_convex_drawing(&g, &d));
        let collinear = exact(&[(0, 0), (1, 0), (2, 0), (0, 4)], &[]);
        assert!(!is_convex_drawing(&g, &collinear));
    }

    #[test]
    fn overlapping_adjacent_edges_cross() {
        // Edges 0-1 and 0-2 overlap along the x axis.
        let g = Graph::from_edges(3, [(0, 1), (0, 2)]).unwrap();
        let d = exact(&[(0, 0), (1, 0), (2, 0)], g.edges());
        assert_eq!(count_crossings(&g, &d).unwrap(), 1);
        assert!(!validate_drawing(&g, &d).is_valid());
    }
}
