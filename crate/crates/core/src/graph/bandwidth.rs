//! Vertex orderings, path-partitions, and the transforms between them.

use std::collections::{HashSet, VecDeque};

use super::{Graph, GraphError};

/// Default vertex cap for [`bandwidth_exact`].
pub const DEFAULT_NODE_LIMIT: usize = 20;

/// A permutation of the vertices together with its width, the largest index
/// gap over an edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrdering {
    order: Vec<usize>,
    position: Vec<usize>,
    width: usize,
}

impl VertexOrdering {
    pub fn new(g: &Graph, order: Vec<usize>) -> Result<Self, GraphError> {
        if order.len() != g.n() {
            return Err(GraphError::InvalidOrdering(format!(
                "ordering has {} entries for {} vertices",
                order.len(),
                g.n()
            )));
        }
        let mut position = vec![usize::MAX; g.n()];
        for (i, &v) in order.iter().enumerate() {
            if v >= g.n() || position[v] != usize::MAX {
                return Err(GraphError::InvalidOrdering(format!("vertex {v} repeated or out of range")));
            }
            position[v] = i;
        }
        let width = ordering_width(g, &position);
        Ok(VertexOrdering { order, position, width })
    }

    pub fn identity(g: &Graph) -> Self {
        Self::new(g, (0..g.n()).collect()).expect("identity is a permutation")
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Width recomputed from scratch against `g`.
    pub fn recompute_width(&self, g: &Graph) -> usize {
        ordering_width(g, &self.position)
    }
}

fn ordering_width(g: &Graph, position: &[usize]) -> usize {
    g.edges()
        .iter()
        .map(|&(u, v)| position[u].abs_diff(position[v]))
        .max()
        .unwrap_or(0)
}

/// An ordered sequence of disjoint blocks covering the vertices, with every
/// edge inside one block or between consecutive blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathPartition {
    blocks: Vec<Vec<usize>>,
    width: usize,
}

impl PathPartition {
    pub fn new(g: &Graph, blocks: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let mut block_of = vec![usize::MAX; g.n()];
        for (i, b) in blocks.iter().enumerate() {
            for &v in b {
                if v >= g.n() || block_of[v] != usize::MAX {
                    return Err(GraphError::InvalidPartition(format!("vertex {v} repeated or out of range")));
                }
                block_of[v] = i;
            }
        }
        if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(GraphError::InvalidPartition(format!("vertex {v} not covered")));
        }
        for &(u, v) in g.edges() {
            if block_of[u].abs_diff(block_of[v]) > 1 {
                return Err(GraphError::InvalidPartition(format!(
                    "edge {u}-{v} joins non-consecutive blocks {} and {}",
                    block_of[u], block_of[v]
                )));
            }
        }
        let width = blocks.iter().map(Vec::len).max().unwrap_or(0);
        Ok(PathPartition { blocks, width })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Block index of each vertex.
    pub fn assignment(&self, n: usize) -> Vec<usize> {
        let mut out = vec![0; n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                out[v] = i;
            }
        }
        out
    }
}

/// Cut an ordering of width `b` into consecutive blocks of `b` vertices.
pub fn path_partition_from_ordering(
    g: &Graph,
    o: &VertexOrdering,
) -> Result<PathPartition, GraphError> {
    if o.order().len() != g.n() || o.recompute_width(g) != o.width() {
        return Err(GraphError::InvalidOrdering("ordering does not match graph".into()));
    }
    let b = o.width().max(1);
    let blocks = o.order().chunks(b).map(<[usize]>::to_vec).collect();
    PathPartition::new(g, blocks)
}

/// List the blocks of a path-partition in sequence. Width is at most
/// `2k - 1` for a partition of width `k`.
pub fn ordering_from_path_partition(
    g: &Graph,
    p: &PathPartition,
) -> Result<VertexOrdering, GraphError> {
    let order = p.blocks().iter().flatten().copied().collect();
    VertexOrdering::new(g, order)
}

/// Minimum-width ordering by branch and bound.
///
/// Widths are tried in increasing order from a degree/diameter lower bound;
/// each feasibility search places vertices left to right and prunes with a
/// Hall-type condition on the open window of the last `b` positions.
pub fn bandwidth_exact(g: &Graph, node_limit: usize) -> Result<VertexOrdering, GraphError> {
    let n = g.n();
    if n > node_limit || n > 64 {
        return Err(GraphError::SizeLimit { n, limit: node_limit.min(64) });
    }
    if g.m() == 0 {
        return Ok(VertexOrdering::identity(g));
    }
    let lb = bandwidth_lower_bound(g);
    for b in lb..n {
        let mut search = Search::new(g, b);
        if search.run() {
            return VertexOrdering::new(g, search.order);
        }
    }
    unreachable!("width n-1 is always feasible")
}

fn bandwidth_lower_bound(g: &Graph) -> usize {
    let mut lb = g.max_degree().div_ceil(2).max(1);
    for comp in g.components() {
        if comp.len() < 2 {
            continue;
        }
        let diam = comp.iter().map(|&s| eccentricity(g, s).0).max().unwrap_or(1).max(1);
        lb = lb.max((comp.len() - 1).div_ceil(diam));
    }
    lb
}

/// (eccentricity, vertices of the last BFS level)
fn eccentricity(g: &Graph, s: usize) -> (usize, Vec<usize>) {
    let mut dist = vec![usize::MAX; g.n()];
    dist[s] = 0;
    let mut q = VecDeque::from([s]);
    let mut far = 0;
    while let Some(v) = q.pop_front() {
        far = far.max(dist[v]);
        for &w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
        }
    }
    let last = (0..g.n()).filter(|&v| dist[v] == far).collect();
    (far, last)
}

struct Search<'g> {
    g: &'g Graph,
    b: usize,
    order: Vec<usize>,
    pos: Vec<usize>,
    placed: u64,
    /// Unplaced-neighbour count per vertex.
    open: Vec<usize>,
    failed: HashSet<(u64, Vec<usize>)>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, b: usize) -> Self {
        Search {
            g,
            b,
            order: Vec::with_capacity(g.n()),
            pos: vec![usize::MAX; g.n()],
            placed: 0,
            open: (0..g.n()).map(|v| g.degree(v)).collect(),
            failed: HashSet::new(),
        }
    }

    fn run(&mut self) -> bool {
        let p = self.order.len();
        if p == self.g.n() {
            return true;
        }
        let window_start = p.saturating_sub(self.b);
        let key = (self.placed, self.order[window_start..].to_vec());
        if self.failed.contains(&key) {
            return false;
        }
        if !self.window_feasible(p) {
            self.failed.insert(key);
            return false;
        }
        // Candidates: unplaced vertices whose placed neighbours lie in the
        // window. Earliest deadline first, then low degree.
        let mut cands: Vec<(usize, usize, usize)> = Vec::new();
        for v in 0..self.g.n() {
            if self.placed >> v & 1 == 1 {
                continue;
            }
            let mut deadline = usize::MAX;
            let mut ok = true;
            for &w in self.g.neighbors(v) {
                if self.placed >> w & 1 == 1 {
                    if self.pos[w] + self.b < p {
                        ok = false;
                        break;
                    }
                    deadline = deadline.min(self.pos[w] + self.b);
                }
            }
            // A vertex with more unplaced neighbours than the band allows
            // can never be placed here.
            let unplaced_nbrs = self.g.neighbors(v).iter().filter(|&&w| self.placed >> w & 1 == 0).count();
            if ok && unplaced_nbrs <= self.b.min(self.g.n() - p - 1) {
                cands.push((deadline, self.g.degree(v), v));
            }
        }
        cands.sort_unstable();
        for (_, _, v) in cands {
            self.place(v, p);
            if self.run() {
                return true;
            }
            self.unplace(v);
        }
        self.failed.insert(key);
        false
    }

    /// Hall condition: the unplaced neighbours of the open vertices with
    /// position <= t must fit in positions p..=t+b.
    fn window_feasible(&self, p: usize) -> bool {
        let start = p.saturating_sub(self.b);
        let mut union: u64 = 0;
        for t in start..p {
            let u = self.order[t];
            if self.open[u] == 0 {
                continue;
            }
            if t + self.b < p {
                return false;
            }
            for &w in self.g.neighbors(u) {
                if self.placed >> w & 1 == 0 {
                    union |= 1 << w;
                }
            }
            if union.count_ones() as usize > t + self.b + 1 - p {
                return false;
            }
        }
        // Open vertices that fell out of the window are dead ends.
        self.order[..start].iter().all(|&u| self.open[u] == 0)
    }

    fn place(&mut self, v: usize, p: usize) {
        self.order.push(v);
        self.pos[v] = p;
        self.placed |= 1 << v;
        for &w in self.g.neighbors(v) {
            self.open[w] -= 1;
        }
    }

    fn unplace(&mut self, v: usize) {
        self.order.pop();
        self.pos[v] = usize::MAX;
        self.placed &= !(1 << v);
        for &w in self.g.neighbors(v) {
            self.open[w] += 1;
        }
    }
}

/// Breadth-first level ordering (Cuthill-McKee) from a pseudo-peripheral
/// vertex of each component; components are concatenated.
pub fn bandwidth_heuristic(g: &Graph) -> VertexOrdering {
    let mut order = Vec::with_capacity(g.n());
    let mut seen = vec![false; g.n()];
    for comp in g.components() {
        let mut start = *comp.iter().min_by_key(|&&v| (g.degree(v), v)).expect("nonempty component");
        let mut ecc = eccentricity(g, start).0;
        loop {
            let (_, last) = eccentricity(g, start);
            let cand = *last.iter().min_by_key(|&&v| (g.degree(v), v)).expect("nonempty level");
            let e = eccentricity(g, cand).0;
            if e > ecc {
                ecc = e;
                start = cand;
            } else {
                break;
            }
        }
        seen[start] = true;
        let mut q = VecDeque::from([start]);
        while let Some(v) = q.pop_front() {
            order.push(v);
            let mut next: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| !seen[w]).collect();
            next.sort_by_key(|&w| (g.degree(w), w));
            for w in next {
                seen[w] = true;
                q.push_back(w);
            }
        }
    }
    VertexOrdering::new(g, order).expect("BFS visits every vertex once")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_cycle, make_grid, make_path, make_star};

    fn brute_force_bandwidth(g: &Graph) -> usize {
        fn rec(g: &Graph, perm: &mut Vec<usize>, used: &mut Vec<bool>, best: &mut usize) {
            if perm.len() == g.n() {
                let mut pos = vec![0; g.n()];
                for (i, &v) in perm.iter().enumerate() {
                    pos[v] = i;
                }
                *best = (*best).min(ordering_width(g, &pos));
                return;
            }
            for v in 0..g.n() {
                if !used[v] {
                    used[v] = true;
                    perm.push(v);
                    rec(g, perm, used, best);
                    perm.pop();
                    used[v] = false;
                }
            }
        }
        let mut best = usize::MAX;
        rec(g, &mut Vec::new(), &mut vec![false; g.n()], &mut best);
        best
    }

    #[test]
    fn exact_bandwidth_examples() {
        assert_eq!(bandwidth_exact(&make_path(5).unwrap(), 20).unwrap().width(), 1);
        assert_eq!(bandwidth_exact(&make_complete(5).unwrap(), 20).unwrap().width(), 4);
        let c6 = make_cycle(6).unwrap();
        assert_eq!(brute_force_bandwidth(&c6), 2);
        assert_eq!(bandwidth_exact(&c6, 20).unwrap().width(), 2);
        assert_eq!(bandwidth_exact(&make_grid(3, 4).unwrap(), 20).unwrap().width(), 3);
    }

    #[test]
    fn exact_bandwidth_respects_node_limit() {
        let g = make_path(25).unwrap();
        assert_eq!(
            bandwidth_exact(&g, DEFAULT_NODE_LIMIT),
            Err(GraphError::SizeLimit { n: 25, limit: 20 })
        );
    }

    #[test]
    fn exact_matches_brute_force_on_small_graphs() {
        for seed in 0..25 {
            let g = crate::graph::make_random_graph(7, 4, 0.5, seed).unwrap();
            let o = bandwidth_exact(&g, 20).unwrap();
            assert_eq!(o.width(), brute_force_bandwidth(&g), "seed {seed}");
            assert_eq!(o.width(), o.recompute_width(&g));
        }
    }

    #[test]
    fn heuristic_examples() {
        assert_eq!(bandwidth_heuristic(&make_path(10).unwrap()).width(), 1);
        assert_eq!(bandwidth_heuristic(&make_complete(4).unwrap()).width(), 3);
        let star = make_star(5).unwrap();
        let o = bandwidth_heuristic(&star);
        assert!(o.width() <= 5 && o.width() >= 3);
        let two = Graph::from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        assert_eq!(bandwidth_heuristic(&two).width(), 1);
    }

    #[test]
    fn partition_transforms() {
        let p6 = make_path(6).unwrap();
        let o = bandwidth_exact(&p6, 20).unwrap();
        let pp = path_partition_from_ordering(&p6, &o).unwrap();
        assert_eq!(pp.blocks().len(), 6);
        assert_eq!(pp.width(), 1);
        let back = ordering_from_path_partition(&p6, &pp).unwrap();
        assert_eq!(back.width(), 1);

        let k4 = make_complete(4).unwrap();
        let o = VertexOrdering::identity(&k4);
        let pp = path_partition_from_ordering(&k4, &o).unwrap();
        assert_eq!(pp.blocks(), &[vec![0, 1, 2], vec![3]]);
        let two = PathPartition::new(&k4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert!(ordering_from_path_partition(&k4, &two).unwrap().width() <= 3);

        let c6 = make_cycle(6).unwrap();
        let o = bandwidth_exact(&c6, 20).unwrap();
        let pp = path_partition_from_ordering(&c6, &o).unwrap();
        assert_eq!(pp.blocks().len(), 3);
        assert!(pp.blocks().iter().all(|b| b.len() == 2));
        assert!(ordering_from_path_partition(&c6, &pp).unwrap().width() <= 3);
    }

    #[test]
    fn invalid_partitions_rejected() {
        let p4 = make_path(4).unwrap();
        assert!(PathPartition::new(&p4, vec![vec![0], vec![2], vec![1, 3]]).is_err());
        assert!(PathPartition::new(&p4, vec![vec![0, 1], vec![2]]).is_err());
        assert!(VertexOrdering::new(&p4, vec![0, 1, 1, 2]).is_err());
    }
}
