//! Method dispatch: run a construction on an input graph and map the result
//! back onto the input's vertex ids.

use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use serde::Deserialize;
use slopeforge::constructions::{
    blow_up, draw_bandwidth, draw_forest, draw_kab_rows, draw_knn, draw_multipartite_power2, draw_one_bend,
    draw_tree_partitioned, power2_partition, Certificate, HPartition, Theorem,
};
use slopeforge::geometry::{ngon_slope_count, realize_ngon, AnyDrawing, Drawing, DrawingDocument, PolygonAssignment};
use slopeforge::graph::{bandwidth_exact, bandwidth_heuristic, VertexOrdering};
use slopeforge::Graph;

use crate::source::read_text;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Ngon,
    Knn,
    KabRows,
    MultipartitePow2,
    Blowup,
    Bandwidth,
    Tree,
    TreePartition,
    OneBend,
}

impl Method {
    pub fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

/// Side inputs some methods need.
#[derive(Debug, Clone, Default)]
pub struct Extras {
    pub ordering: Option<Vec<usize>>,
    pub partition: Option<PartitionFile>,
    pub host_drawing: Option<AnyDrawing>,
    pub exact_bandwidth_limit: usize,
}

/// H-partition file: the host graph and each vertex's host node.
#[derive(Debug, Clone, Deserialize)]
pub struct PartitionFile {
    pub host_n: usize,
    pub host_edges: Vec<[usize; 2]>,
    pub assign: Vec<usize>,
    #[serde(default)]
    pub host_drawing: Option<DrawingDocument>,
}

pub fn read_ordering(path: &Path) -> Result<Vec<usize>> {
    read_text(path)?
        .split_whitespace()
        .map(|t| t.parse().with_context(|| format!("{}: bad vertex id {t:?}", path.display())))
        .collect()
}

pub fn read_partition(path: &Path) -> Result<PartitionFile> {
    serde_json::from_str(&read_text(path)?).with_context(|| format!("parsing partition {}", path.display()))
}

pub fn read_drawing(path: &Path) -> Result<DrawingDocument> {
    serde_json::from_str(&read_text(path)?).with_context(|| format!("parsing drawing {}", path.display()))
}

/// Run `method` on `g`. Errors are usage errors; the caller verifies.
pub fn run(g: &Graph, method: Method, extras: &Extras) -> Result<(AnyDrawing, Certificate)> {
    match method {
        Method::Ngon => ngon(g),
        Method::Knn => {
            let parts = bipartition(g, method)?;
            if parts[0].len() != parts[1].len() {
                bail!("knn needs K_{{n,n}}; parts have sizes {} and {}", parts[0].len(), parts[1].len());
            }
            let c = draw_knn(parts[0].len())?;
            Ok((AnyDrawing::from(c.drawing).relabel(&concat(&parts)), c.certificate))
        }
        Method::KabRows => {
            let mut parts = bipartition(g, method)?;
            if parts[0].len() > parts[1].len() {
                parts.swap(0, 1);
            }
            let c = draw_kab_rows(parts[0].len(), parts[1].len())?;
            Ok((AnyDrawing::from(c.drawing).relabel(&concat(&parts)), c.certificate))
        }
        Method::MultipartitePow2 => multipartite_pow2(g),
        Method::Blowup => {
            let file = extras.partition.as_ref().context("blowup needs --partition FILE")?;
            let part = partition(g, file)?;
            let host = match (&extras.host_drawing, &file.host_drawing) {
                (Some(d), _) => d.clone(),
                (None, Some(doc)) => AnyDrawing::from_document(doc).context("host drawing in partition file")?,
                (None, None) => default_host_drawing(part.host())?,
            };
            let c = match &host {
                AnyDrawing::Exact(d) => blow_up(g, d, &part),
                AnyDrawing::Numeric(d) => blow_up(g, d, &part),
            }?;
            Ok((c.drawing.into(), c.certificate))
        }
        Method::Bandwidth => {
            let o = match &extras.ordering {
                Some(order) => VertexOrdering::new(g, order.clone()).context("ordering file")?,
                None if g.n() <= extras.exact_bandwidth_limit => {
                    bandwidth_exact(g, extras.exact_bandwidth_limit).unwrap_or_else(|_| bandwidth_heuristic(g))
                }
                None => bandwidth_heuristic(g),
            };
            let c = draw_bandwidth(g, &o)?;
            Ok((c.drawing.into(), c.certificate))
        }
        Method::Tree => {
            if !g.is_forest() {
                bail!("tree method needs a forest; the input has a cycle");
            }
            let c = draw_forest(g)?;
            Ok((c.drawing.into(), c.certificate))
        }
        Method::TreePartition => {
            let file = extras.partition.as_ref().context("tree-partition needs --partition FILE")?;
            let part = partition(g, file)?;
            if !part.host().is_forest() {
                bail!("tree-partition needs a forest host");
            }
            let c = draw_tree_partitioned(g, &part)?;
            Ok((c.drawing.into(), c.certificate))
        }
        Method::OneBend => {
            let (c, _) = draw_one_bend(g)?;
            Ok((c.drawing.into(), c.certificate))
        }
    }
}

/// Any graph on the regular `n`-gon, vertex `i` on corner `i`.
fn ngon(g: &Graph) -> Result<(AnyDrawing, Certificate)> {
    if g.n() < 3 {
        bail!("ngon needs at least 3 vertices, got {}", g.n());
    }
    let a = PolygonAssignment::identity(g.n());
    let bound = ngon_slope_count(g, &a)?;
    let d: Drawing<f64> = realize_ngon(g, &a)?;
    let mut cert = Certificate::slopes(Theorem::CompleteNgon, bound);
    cert.claimed_convex = true;
    Ok((d.into(), cert))
}

fn bipartition(g: &Graph, method: Method) -> Result<Vec<Vec<usize>>> {
    match g.complete_multipartite_parts() {
        Some(parts) if parts.len() == 2 => Ok(parts),
        _ => bail!("{} needs a complete bipartite graph", method.name()),
    }
}

/// Construction vertex `i` of the concatenated parts maps to input vertex
/// `concat(parts)[i]`.
fn concat(parts: &[Vec<usize>]) -> Vec<usize> {
    parts.iter().flatten().copied().collect()
}

fn multipartite_pow2(g: &Graph) -> Result<(AnyDrawing, Certificate)> {
    let parts = g.complete_multipartite_parts().context("multipartite-pow2 needs a complete multipartite graph")?;
    let k = parts.len();
    let small = parts.iter().map(Vec::len).min().expect("at least two parts");
    if !small.is_power_of_two() || !(k - 1).is_power_of_two() {
        bail!("multipartite-pow2 needs k parts with k-1 and the smallest part size powers of two; got {k} parts, smallest {small}");
    }
    let p = small.trailing_zeros();
    let built = power2_partition(p, k)?;
    let mut want: Vec<usize> = built.iter().map(Vec::len).collect();
    let mut have: Vec<usize> = parts.iter().map(Vec::len).collect();
    want.sort_unstable();
    have.sort_unstable();
    if want != have {
        bail!("part sizes {have:?} do not match the required {want:?}");
    }
    let c = draw_multipartite_power2(p, k)?;
    let mut built_order: Vec<usize> = (0..k).collect();
    built_order.sort_by_key(|&i| built[i].len());
    let mut input_order: Vec<usize> = (0..k).collect();
    input_order.sort_by_key(|&i| parts[i].len());
    let mut perm = vec![0; g.n()];
    for (&b, &i) in built_order.iter().zip(&input_order) {
        for (&u, &v) in built[b].iter().zip(&parts[i]) {
            perm[u] = v;
        }
    }
    Ok((AnyDrawing::from(c.drawing).relabel(&perm), c.certificate))
}

fn partition(g: &Graph, f: &PartitionFile) -> Result<HPartition> {
    let host = Graph::from_edges(f.host_n, f.host_edges.iter().map(|&[u, v]| (u, v))).context("host graph")?;
    Ok(HPartition::new(g, host, f.assign.clone())?)
}

/// Forest hosts get the plane tree drawing; others the regular polygon.
fn default_host_drawing(host: &Graph) -> Result<AnyDrawing> {
    if host.is_forest() {
        return Ok(draw_forest(host)?.drawing.into());
    }
    let d: Drawing<f64> = realize_ngon(host, &PolygonAssignment::identity(host.n()))?;
    Ok(d.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use slopeforge::constructions::verify;
    use slopeforge::graph::{make_complete, make_complete_multipartite, make_cycle, make_path};

    fn check(g: &Graph, m: Method, extras: &Extras) -> usize {
        let (d, cert) = run(g, m, extras).unwrap();
        let v = verify(g, &d, Some(&cert)).unwrap();
        assert!(v.ok(), "{m:?}: {:?}", v.violations);
        v.slopes
    }

    #[test]
    fn relabelled_bipartite_drawings() {
        // K_{2,3} with interleaved part ids.
        let g = Graph::from_edges(5, [(0, 1), (0, 3), (2, 1), (2, 3), (4, 1), (4, 3)]).unwrap();
        let e = Extras::default();
        assert_eq!(check(&g, Method::KabRows, &e), 3);
        let k33 = make_complete_multipartite(&[3, 3]).unwrap();
        assert_eq!(check(&k33, Method::Knn, &e), 3);
        assert!(run(&g, Method::Knn, &e).is_err());
    }

    #[test]
    fn pow2_with_permuted_parts() {
        // Parts of sizes 2, 4, 2 (p = 1, k = 3) listed as 4, 2, 2.
        let g = make_complete_multipartite(&[4, 2, 2]).unwrap();
        assert!(check(&g, Method::MultipartitePow2, &Extras::default()) <= 6);
        let bad = make_complete_multipartite(&[3, 3]).unwrap();
        assert!(run(&bad, Method::MultipartitePow2, &Extras::default()).is_err());
    }

    #[test]
    fn partition_methods() {
        let g = make_cycle(6).unwrap();
        let file = PartitionFile {
            host_n: 3,
            host_edges: vec![[0, 1], [1, 2]],
            assign: vec![0, 0, 1, 2, 2, 1],
            host_drawing: None,
        };
        let e = Extras { partition: Some(file), ..Extras::default() };
        check(&g, Method::TreePartition, &e);
        check(&g, Method::Blowup, &e);
        assert!(run(&g, Method::Blowup, &Extras::default()).is_err());
    }

    #[test]
    fn method_graph_mismatch() {
        let e = Extras { exact_bandwidth_limit: 20, ..Extras::default() };
        assert!(run(&make_cycle(5).unwrap(), Method::Tree, &e).is_err());
        assert!(run(&make_path(2).unwrap(), Method::Ngon, &e).is_err());
        assert_eq!(check(&make_complete(8).unwrap(), Method::Ngon, &e), 8);
        assert_eq!(check(&make_path(9).unwrap(), Method::Tree, &e), 1);
        check(&make_cycle(7).unwrap(), Method::Bandwidth, &e);
    }
}
