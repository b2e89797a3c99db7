use std::collections::BTreeMap;

use serde::Serialize;

use super::Point;
use crate::scalar::Scalar;

/// Endpoint of a segment in the (possibly subdivided) drawing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Node {
    Vertex(usize),
    /// The bend point of the edge with this index.
    Bend(usize),
}

/// One straight piece of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Segment {
    pub edge: usize,
    pub from: Node,
    pub to: Node,
}

/// A placement of the vertices of a graph, with optional bend points and
/// slope/length class labels keyed by edge index.
///
/// With bends present the drawing describes the subdivided graph: edge
/// `(u, v)` with bend `x` is the path `u x v`.
#[derive(Debug, Clone, PartialEq)]
pub struct Drawing<S> {
    pub vertices: Vec<Point<S>>,
    pub edges: Vec<(usize, usize)>,
    pub bends: BTreeMap<usize, Point<S>>,
    pub slope_class: BTreeMap<usize, i64>,
    pub length_class: BTreeMap<usize, i64>,
}

impl<S: Scalar> Drawing<S> {
    pub fn new(vertices: Vec<Point<S>>, edges: Vec<(usize, usize)>) -> Self {
        Drawing {
            vertices,
            edges,
            bends: BTreeMap::new(),
            slope_class: BTreeMap::new(),
            length_class: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn point(&self, node: Node) -> &Point<S> {
        match node {
            Node::Vertex(v) => &self.vertices[v],
            Node::Bend(e) => &self.bends[&e],
        }
    }

    /// Every point of the subdivided drawing: vertices first, then bends in
    /// edge order.
    pub fn nodes(&self) -> Vec<Node> {
        (0..self.vertices.len())
            .map(Node::Vertex)
            .chain(self.bends.keys().map(|&e| Node::Bend(e)))
            .collect()
    }

    /// Straight pieces: one per straight edge, two per bent edge.
    pub fn segments(&self) -> Vec<Segment> {
        let mut out = Vec::with_capacity(self.edges.len() + self.bends.len());
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if self.bends.contains_key(&e) {
                out.push(Segment { edge: e, from: Node::Vertex(u), to: Node::Bend(e) });
                out.push(Segment { edge: e, from: Node::Bend(e), to: Node::Vertex(v) });
            } else {
                out.push(Segment { edge: e, from: Node::Vertex(u), to: Node::Vertex(v) });
            }
        }
        out
    }

    pub fn has_slope_labels(&self) -> bool {
        self.bends.is_empty() && !self.edges.is_empty() && (0..self.edges.len()).all(|e| self.slope_class.contains_key(&e))
    }

    pub fn has_length_labels(&self) -> bool {
        self.bends.is_empty() && !self.edges.is_empty() && (0..self.edges.len()).all(|e| self.length_class.contains_key(&e))
    }

    /// For floating drawings: translate and scale so the bounding box has
    /// diameter 1. Exact drawings are returned unchanged.
    pub fn normalized(&self) -> Drawing<S> {
        if S::EXACT {
            return self.clone();
        }
        let pts: Vec<(f64, f64)> =
            self.vertices.iter().chain(self.bends.values()).map(Point::to_f64).collect();
        if pts.is_empty() {
            return self.clone();
        }
        let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
        for &(x, y) in &pts {
            x0 = x0.min(x);
            y0 = y0.min(y);
            x1 = x1.max(x);
            y1 = y1.max(y);
        }
        let diam = (x1 - x0).hypot(y1 - y0);
        let scale = if diam > 0.0 { 1.0 / diam } else { 1.0 };
        let map = |p: &Point<S>| {
            let (x, y) = p.to_f64();
            Point {
                x: S::from_f64((x - x0) * scale).expect("finite"),
                y: S::from_f64((y - y0) * scale).expect("finite"),
            }
        };
        Drawing {
            vertices: self.vertices.iter().map(map).collect(),
            edges: self.edges.clone(),
            bends: self.bends.iter().map(|(&e, p)| (e, map(p))).collect(),
            slope_class: self.slope_class.clone(),
            length_class: self.length_class.clone(),
        }
    }

    /// The subdivided straight-line drawing: each bend becomes a vertex,
    /// numbered after the original vertices in edge order.
    pub fn subdivision(&self) -> Drawing<S> {
        let mut vertices = self.vertices.clone();
        let mut edges = Vec::with_capacity(self.edges.len() + self.bends.len());
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            match self.bends.get(&e) {
                Some(b) => {
                    let x = vertices.len();
                    vertices.push(b.clone());
                    edges.push((u.min(x), u.max(x)));
                    edges.push((v.min(x), v.max(x)));
                }
                None => edges.push((u.min(v), u.max(v))),
            }
        }
        edges.sort_unstable();
        Drawing::new(vertices, edges)
    }

    /// Convert coordinates to another scalar type through f64.
    pub fn cast<T: Scalar>(&self) -> Drawing<T> {
        Drawing {
            vertices: self.vertices.iter().map(Point::cast).collect(),
            edges: self.edges.clone(),
            bends: self.bends.iter().map(|(&e, p)| (e, p.cast())).collect(),
            slope_class: self.slope_class.clone(),
            length_class: self.length_class.clone(),
        }
    }

    /// Rename vertices: vertex `v` of `self` becomes `perm[v]`. Edges are
    /// re-canonicalised and sorted; labels and bends follow their edges.
    pub fn relabel(&self, perm: &[usize]) -> Drawing<S> {
        let n = self.vertices.len();
        let mut vertices = vec![None; n];
        for (v, p) in self.vertices.iter().enumerate() {
            vertices[perm[v]] = Some(p.clone());
        }
        let mut edges: Vec<(usize, (usize, usize))> = self
            .edges
            .iter()
            .enumerate()
            .map(|(e, &(u, v))| {
                let (a, b) = (perm[u], perm[v]);
                (e, (a.min(b), a.max(b)))
            })
            .collect();
        edges.sort_by_key(|&(_, uv)| uv);
        let mut out = Drawing::new(
            vertices.into_iter().map(|p| p.expect("perm is a bijection")).collect(),
            edges.iter().map(|&(_, uv)| uv).collect(),
        );
        for (new, &(old, _)) in edges.iter().enumerate() {
            if let Some(b) = self.bends.get(&old) {
                // Bends are direction-agnostic: the point stays where it is.
                out.bends.insert(new, b.clone());
            }
            if let Some(&c) = self.slope_class.get(&old) {
                out.slope_class.insert(new, c);
            }
            if let Some(&c) = self.length_class.get(&old) {
                out.length_class.insert(new, c);
            }
        }
        out
    }
}
