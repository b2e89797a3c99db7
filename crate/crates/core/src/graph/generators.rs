use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, GraphError};

/// K_n.
pub fn make_complete(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidParameter("K_n needs n >= 1".into()));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges)
}

/// K_{n_1, ..., n_k}; part `i` occupies a contiguous block of ids.
pub fn make_complete_multipartite(part_sizes: &[usize]) -> Result<Graph, GraphError> {
    if part_sizes.len() < 2 {
        return Err(GraphError::InvalidParameter("need at least two parts".into()));
    }
    if part_sizes.contains(&0) {
        return Err(GraphError::InvalidParameter("part sizes must be positive".into()));
    }
    let mut part = Vec::new();
    for (i, &s) in part_sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, s));
    }
    let n = part.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part[u] != part[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

pub fn make_path(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidParameter("path needs n >= 1".into()));
    }
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

pub fn make_cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter("cycle needs n >= 3".into()));
    }
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// K_{1,leaves} with centre 0.
pub fn make_star(leaves: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
}

/// `rows x cols` grid, vertex `(r, c)` at id `r * cols + c`.
pub fn make_grid(rows: usize, cols: usize) -> Result<Graph, GraphError> {
    if rows == 0 || cols == 0 {
        return Err(GraphError::InvalidParameter("grid dimensions must be positive".into()));
    }
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                edges.push((v, v + 1));
            }
            if r + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    Graph::from_edges(rows * cols, edges)
}

pub fn make_petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, edges).expect("Petersen graph is simple")
}

/// Random tree on `n` vertices with maximum degree at most `max_degree`:
/// vertex `i` attaches to a uniformly chosen earlier vertex that still has
/// room. Deterministic in `seed`.
pub fn make_random_tree(n: usize, max_degree: usize, seed: u64) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidParameter("tree needs n >= 1".into()));
    }
    if n > 2 && max_degree < 2 {
        return Err(GraphError::InvalidParameter("max degree must be >= 2 for n > 2".into()));
    }
    if n == 2 && max_degree < 1 {
        return Err(GraphError::InvalidParameter("max degree must be >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut degree = vec![0usize; n];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for v in 1..n {
        let open: Vec<usize> = (0..v).filter(|&u| degree[u] < max_degree).collect();
        let u = *open.choose(&mut rng).expect("a leaf always has spare degree");
        degree[u] += 1;
        degree[v] += 1;
        edges.push((u, v));
    }
    Graph::from_edges(n, edges)
}

/// Random graph on `n` vertices with maximum degree at most `max_degree`:
/// candidate pairs are shuffled and kept while both endpoints have room.
/// Each pair is kept with probability `density`.
pub fn make_random_graph(
    n: usize,
    max_degree: usize,
    density: f64,
    seed: u64,
) -> Result<Graph, GraphError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(&mut rng);
    let mut degree = vec![0usize; n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if degree[u] < max_degree && degree[v] < max_degree && rng.gen_bool(density.clamp(0.0, 1.0)) {
            degree[u] += 1;
            degree[v] += 1;
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges)
}
