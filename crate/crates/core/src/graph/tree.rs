//! Trees, tree pathwidth and backbones.
//!
//! Pathwidth is computed by the backbone recursion: `pw(K_1) = 0`, the
//! pathwidth of a forest is the maximum over its components, and for a tree
//! with at least two vertices `pw(T) = min_P (1 + pw(T - V(P)))` over paths
//! `P`. The minimum is always attained by a leaf-to-leaf path, so only those
//! are enumerated. Results are memoized on the vertex set of each subtree.

use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;

use super::{Graph, GraphError};

/// A connected acyclic graph with an optional root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    graph: Graph,
    root: Option<usize>,
}

impl Tree {
    pub fn new(graph: Graph) -> Result<Self, GraphError> {
        if graph.n() == 0 {
            return Err(GraphError::NotATree("empty graph".into()));
        }
        if graph.m() + 1 != graph.n() {
            return Err(GraphError::NotATree(format!(
                "{} vertices but {} edges",
                graph.n(),
                graph.m()
            )));
        }
        if !graph.is_connected() {
            return Err(GraphError::NotATree("disconnected".into()));
        }
        Ok(Tree { graph, root: None })
    }

    pub fn with_root(mut self, root: usize) -> Result<Self, GraphError> {
        if root >= self.graph.n() {
            return Err(GraphError::VertexOutOfRange { vertex: root, n: self.graph.n() });
        }
        self.root = Some(root);
        Ok(self)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }
}

/// Exact pathwidth of a tree.
pub fn tree_pathwidth(t: &Tree) -> usize {
    PathwidthOracle::new(t.graph()).whole_pathwidth()
}

/// Exact pathwidth of a forest: the maximum over its components.
pub fn forest_pathwidth(g: &Graph) -> Result<usize, GraphError> {
    if !g.is_forest() {
        return Err(GraphError::NotATree("graph has a cycle".into()));
    }
    Ok(PathwidthOracle::new(g).whole_pathwidth())
}

/// A leaf-to-leaf path whose removal lowers the pathwidth; the
/// lexicographically least such vertex sequence.
pub fn find_backbone(t: &Tree) -> Vec<usize> {
    let mut oracle = PathwidthOracle::new(t.graph());
    let all = oracle.full_set();
    oracle.backbone(&all, None).expect("every tree has a backbone")
}

#[derive(Debug, Clone, Copy)]
struct Bounds {
    lo: usize,
    hi: usize,
}

/// Memoized pathwidth queries on vertex subsets of one forest.
pub struct PathwidthOracle<'g> {
    g: &'g Graph,
    memo: HashMap<FixedBitSet, Bounds>,
}

impl<'g> PathwidthOracle<'g> {
    /// `g` must be a forest.
    pub fn new(g: &'g Graph) -> Self {
        debug_assert!(g.is_forest());
        PathwidthOracle { g, memo: HashMap::new() }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn full_set(&self) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.g.n());
        s.insert_range(..);
        s
    }

    pub fn set_of(&self, vertices: &[usize]) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.g.n());
        for &v in vertices {
            s.insert(v);
        }
        s
    }

    fn whole_pathwidth(&mut self) -> usize {
        let all = self.full_set();
        self.pathwidth(&all)
    }

    /// Pathwidth of the subforest induced by `set` (0 when empty).
    pub fn pathwidth(&mut self, set: &FixedBitSet) -> usize {
        self.components(set).into_iter().map(|c| self.tree_pathwidth(&c)).max().unwrap_or(0)
    }

    /// Connected components of the subforest induced by `set`.
    pub fn components(&self, set: &FixedBitSet) -> Vec<FixedBitSet> {
        let mut left = set.clone();
        let mut out = Vec::new();
        while let Some(s) = left.ones().next() {
            let mut comp = FixedBitSet::with_capacity(self.g.n());
            comp.insert(s);
            left.set(s, false);
            let mut q = VecDeque::from([s]);
            while let Some(v) = q.pop_front() {
                for &w in self.g.neighbors(v) {
                    if left.contains(w) {
                        left.set(w, false);
                        comp.insert(w);
                        q.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Pathwidth of a subtree (connected `comp`).
    pub fn tree_pathwidth(&mut self, comp: &FixedBitSet) -> usize {
        let mut k = match self.memo.get(comp) {
            Some(b) if b.lo == b.hi => return b.lo,
            Some(b) => b.lo,
            None => 0,
        };
        while !self.tree_at_most(comp, k) {
            k += 1;
        }
        k
    }

    /// Whether the subtree `comp` has pathwidth at most `k`.
    fn tree_at_most(&mut self, comp: &FixedBitSet, k: usize) -> bool {
        let size = comp.count_ones(..);
        if size <= 1 {
            return true;
        }
        if k == 0 {
            return false;
        }
        if let Some(b) = self.memo.get(comp) {
            if k >= b.hi {
                return true;
            }
            if k < b.lo {
                return false;
            }
        }
        let mut found = false;
        for path in self.leaf_paths(comp, true) {
            let mut rest = comp.clone();
            for &v in &path {
                rest.set(v, false);
            }
            let comps = self.components(&rest);
            if comps.iter().all(|c| self.tree_at_most(c, k - 1)) {
                found = true;
                break;
            }
        }
        let entry = self.memo.entry(comp.clone()).or_insert(Bounds { lo: 1, hi: size });
        if found {
            entry.hi = entry.hi.min(k);
        } else {
            entry.lo = entry.lo.max(k + 1);
        }
        found
    }

    fn leaves(&self, comp: &FixedBitSet) -> Vec<usize> {
        comp.ones()
            .filter(|&v| self.g.neighbors(v).iter().filter(|&&w| comp.contains(w)).count() <= 1)
            .collect()
    }

    /// Vertex sequence of the unique path from `a` to `b` inside `comp`.
    pub fn path_between(&self, comp: &FixedBitSet, a: usize, b: usize) -> Vec<usize> {
        let mut parent = HashMap::from([(a, a)]);
        let mut q = VecDeque::from([a]);
        while let Some(v) = q.pop_front() {
            if v == b {
                break;
            }
            for &w in self.g.neighbors(v) {
                if comp.contains(w) && !parent.contains_key(&w) {
                    parent.insert(w, v);
                    q.push_back(w);
                }
            }
        }
        let mut path = vec![b];
        let mut v = b;
        while v != a {
            v = parent[&v];
            path.push(v);
        }
        path.reverse();
        path
    }

    /// All leaf-to-leaf paths of `comp`, each starting at its smaller
    /// endpoint. Sorted longest first when `by_length`, otherwise
    /// lexicographically.
    fn leaf_paths(&self, comp: &FixedBitSet, by_length: bool) -> Vec<Vec<usize>> {
        let leaves = self.leaves(comp);
        if leaves.len() == 1 {
            return vec![leaves];
        }
        let mut paths = Vec::with_capacity(leaves.len() * (leaves.len() - 1) / 2);
        for (i, &a) in leaves.iter().enumerate() {
            for &b in &leaves[i + 1..] {
                paths.push(self.path_between(comp, a, b));
            }
        }
        if by_length {
            paths.sort_by(|x, y| y.len().cmp(&x.len()).then_with(|| x.cmp(y)));
        } else {
            paths.sort();
        }
        paths
    }

    /// Lexicographically least backbone of the subtree `comp`, optionally
    /// restricted to backbones containing `through`.
    pub fn backbone(&mut self, comp: &FixedBitSet, through: Option<usize>) -> Option<Vec<usize>> {
        let k = self.tree_pathwidth(comp);
        if comp.count_ones(..) == 1 {
            let v = comp.ones().next().expect("nonempty");
            return (through.is_none() || through == Some(v)).then(|| vec![v]);
        }
        for path in self.leaf_paths(comp, false) {
            if let Some(r) = through {
                if !path.contains(&r) {
                    continue;
                }
            }
            let mut rest = comp.clone();
            for &v in &path {
                rest.set(v, false);
            }
            let comps = self.components(&rest);
            if comps.iter().all(|c| self.tree_at_most(c, k - 1)) {
                return Some(path);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_path, make_star};

    fn spider(legs: usize, len: usize) -> Graph {
        let mut edges = Vec::new();
        let mut next = 1;
        for _ in 0..legs {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Graph::from_edges(next, edges).unwrap()
    }

    #[test]
    fn small_pathwidths() {
        assert_eq!(tree_pathwidth(&Tree::new(Graph::empty(1)).unwrap()), 0);
        for n in 2..8 {
            assert_eq!(tree_pathwidth(&Tree::new(make_path(n).unwrap()).unwrap()), 1);
        }
        assert_eq!(tree_pathwidth(&Tree::new(make_star(5).unwrap()).unwrap()), 1);
        // Spider with three legs of length 2 or more has pathwidth 2.
        assert_eq!(tree_pathwidth(&Tree::new(spider(3, 3)).unwrap()), 2);
        assert_eq!(tree_pathwidth(&Tree::new(spider(3, 1)).unwrap()), 1);
    }

    #[test]
    fn backbone_examples() {
        let p5 = Tree::new(make_path(5).unwrap()).unwrap();
        assert_eq!(find_backbone(&p5), vec![0, 1, 2, 3, 4]);

        let star = Tree::new(make_star(4).unwrap()).unwrap();
        let b = find_backbone(&star);
        assert_eq!(b, vec![1, 0, 2]);

        let sp = Tree::new(spider(3, 3)).unwrap();
        let b = find_backbone(&sp);
        assert_eq!(b.len(), 7);
        assert!(b.contains(&0));
        let mut oracle = PathwidthOracle::new(sp.graph());
        let mut rest = oracle.full_set();
        for &v in &b {
            rest.set(v, false);
        }
        assert_eq!(oracle.pathwidth(&rest), 1);
    }

    #[test]
    fn forest_pathwidth_is_component_max() {
        let g = Graph::from_edges(7, [(0, 1), (2, 3), (2, 4), (2, 5)]).unwrap();
        assert_eq!(forest_pathwidth(&g).unwrap(), 1);
        assert_eq!(forest_pathwidth(&Graph::empty(3)).unwrap(), 0);
        assert!(forest_pathwidth(&crate::graph::make_cycle(4).unwrap()).is_err());
    }

    #[test]
    fn tree_constructor_validates() {
        assert!(Tree::new(crate::graph::make_cycle(3).unwrap()).is_err());
        assert!(Tree::new(Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap()).is_err());
        assert!(Tree::new(Graph::empty(0)).is_err());
    }
}
