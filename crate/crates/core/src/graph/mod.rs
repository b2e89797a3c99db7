//! Simple undirected graphs and the combinatorics the drawing constructions
//! consume: generators, bandwidth orderings, path-partitions and tree
//! pathwidth.

mod bandwidth;
mod generators;
mod io;
mod tree;

pub use bandwidth::{
    bandwidth_exact, bandwidth_heuristic, ordering_from_path_partition,
    path_partition_from_ordering, PathPartition, VertexOrdering, DEFAULT_NODE_LIMIT,
};
pub use generators::{
    make_complete, make_complete_multipartite, make_cycle, make_grid, make_path,
    make_petersen, make_random_graph, make_random_tree, make_star,
};
pub use io::{parse_graph, serialize_graph};
pub use tree::{find_backbone, forest_pathwidth, tree_pathwidth, PathwidthOracle, Tree};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph has {n} vertices, exact search is limited to {limit}")]
    SizeLimit { n: usize, limit: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),
    #[error("invalid path-partition: {0}")]
    InvalidPartition(String),
}

/// A finite simple undirected graph on vertices `0..n`.
///
/// Edges are stored canonically as `(u, v)` with `u < v`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new(), adjacency: vec![Vec::new(); n] }
    }

    /// Build a graph, rejecting loops, duplicates and out-of-range ids.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut canon = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &canon {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { n, edges: canon, adjacency })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Index of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// True when the graph has no cycle.
    pub fn is_forest(&self) -> bool {
        self.m() + self.components().len() == self.n
    }

    /// Subgraph induced by `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        Graph::from_edges(vertices.len(), edges).expect("induced subgraph of a simple graph")
    }

    /// Re-derive adjacency from the edge list and compare. Always true for
    /// graphs built through the public constructors.
    pub fn is_consistent(&self) -> bool {
        match Graph::from_edges(self.n, self.edges.iter().copied()) {
            Ok(g) => g.adjacency == self.adjacency,
            Err(_) => false,
        }
    }

    /// Detect a complete multipartite structure: returns the parts (each
    /// sorted, ordered by smallest member) when the complement is a disjoint
    /// union of cliques with at least two parts.
    pub fn complete_multipartite_parts(&self) -> Option<Vec<Vec<usize>>> {
        if self.n < 2 {
            return None;
        }
        let mut part_of = vec![usize::MAX; self.n];
        let mut parts: Vec<Vec<usize>> = Vec::new();
        for v in 0..self.n {
            if part_of[v] != usize::MAX {
                continue;
            }
            let id = parts.len();
            let members: Vec<usize> = (0..self.n).filter(|&w| w == v || !self.has_edge(v, w)).collect();
            for &w in &members {
                if part_of[w] != usize::MAX {
                    return None;
                }
                part_of[w] = id;
            }
            parts.push(members);
        }
        if parts.len() < 2 {
            return None;
        }
        let expected: usize = {
            let total = self.n * self.n;
            let same: usize = parts.iter().map(|p| p.len() * p.len()).sum();
            (total - same) / 2
        };
        // Non-edges inside parts are guaranteed; all cross pairs must be edges.
        if expected != self.m() {
            return None;
        }
        for &(u, v) in &self.edges {
            if part_of[u] == part_of[v] {
                return None;
            }
        }
        Some(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(Graph::from_edges(2, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(Graph::from_edges(2, [(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn multipartite_detection() {
        let g = make_complete_multipartite(&[1, 2, 2]).unwrap();
        let parts = g.complete_multipartite_parts().unwrap();
        assert_eq!(parts, vec![vec![0], vec![1, 2], vec![3, 4]]);
        assert!(make_cycle(5).unwrap().complete_multipartite_parts().is_none());
        // C_4 is K_{2,2}.
        let c4 = make_cycle(4).unwrap();
        assert_eq!(c4.complete_multipartite_parts().unwrap(), vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn components_and_forest() {
        let g = Graph::from_edges(5, [(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert!(g.is_forest());
        assert!(!make_cycle(3).unwrap().is_forest());
    }
}
