//! Drawings on a regular polygon.

use std::collections::BTreeSet;
use std::f64::consts::TAU;

use super::{Drawing, GeometryError, Point};
use crate::graph::Graph;
use crate::scalar::FloatScalar;

/// Vertex `v` sits on corner `index[v]` of a regular `n`-gon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonAssignment {
    n: usize,
    index: Vec<usize>,
}

impl PolygonAssignment {
    pub fn new(n: usize, index: Vec<usize>) -> Result<Self, GeometryError> {
        let mut seen = vec![false; n];
        for (v, &i) in index.iter().enumerate() {
            if i >= n {
                return Err(GeometryError::InvalidAssignment(format!("vertex {v} on corner {i} of an {n}-gon")));
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(GeometryError::InvalidAssignment(format!("corner {i} used twice")));
            }
        }
        Ok(PolygonAssignment { n, index })
    }

    /// Vertex `v` on corner `v`.
    pub fn identity(n: usize) -> Self {
        PolygonAssignment { n, index: (0..n).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn index(&self) -> &[usize] {
        &self.index
    }

    fn covers(&self, g: &Graph) -> Result<(), GeometryError> {
        if self.index.len() != g.n() {
            return Err(GeometryError::InvalidAssignment(format!(
                "assignment places {} vertices, graph has {}",
                self.index.len(),
                g.n()
            )));
        }
        Ok(())
    }
}

/// Number of residues `(index(u) + index(v)) mod n` over the edges.
pub fn ngon_slope_count(g: &Graph, a: &PolygonAssignment) -> Result<usize, GeometryError> {
    a.covers(g)?;
    let classes: BTreeSet<usize> = g.edges().iter().map(|&(u, v)| (a.index[u] + a.index[v]) % a.n).collect();
    Ok(classes.len())
}

/// Place corner `i` at angle `2 pi i / n` on the unit circle. Edge slopes are
/// labelled by their residue `(i + j) mod n`.
pub fn realize_ngon<F: FloatScalar>(g: &Graph, a: &PolygonAssignment) -> Result<Drawing<F>, GeometryError> {
    a.covers(g)?;
    if a.n < 3 {
        return Err(GeometryError::InvalidAssignment(format!("{}-gon cannot be realized", a.n)));
    }
    let vertices = a
        .index
        .iter()
        .map(|&i| {
            let (c, s) = F::unit_vector(TAU * i as f64 / a.n as f64);
            Point::new(c, s)
        })
        .collect();
    let mut d = Drawing::new(vertices, g.edges().to_vec());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        d.slope_class.insert(e, ((a.index[u] + a.index[v]) % a.n) as i64);
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{count_lengths, count_slopes, is_convex_drawing, validate_drawing};
    use crate::graph::{make_complete, make_complete_multipartite, make_random_graph};
    use proptest::prelude::*;

    #[test]
    fn complete_graphs_on_their_polygon() {
        for n in 3..=12 {
            let g = make_complete(n).unwrap();
            let a = PolygonAssignment::identity(n);
            assert_eq!(ngon_slope_count(&g, &a).unwrap(), n);
            let d: Drawing<f64> = realize_ngon(&g, &a).unwrap();
            assert_eq!(count_slopes(&d).unwrap(), n);
            let mut bare = d.clone();
            bare.slope_class.clear();
            assert_eq!(count_slopes(&bare).unwrap(), n);
            assert!(is_convex_drawing(&g, &d));
            assert!(validate_drawing(&g, &d).is_valid());
        }
        let d: Drawing<f64> = realize_ngon(&make_complete(4).unwrap(), &PolygonAssignment::identity(4)).unwrap();
        assert_eq!(count_lengths(&d).unwrap(), 2);
        let d: Drawing<f64> = realize_ngon(&make_complete(6).unwrap(), &PolygonAssignment::identity(6)).unwrap();
        assert_eq!(count_lengths(&d).unwrap(), 3);
    }

    #[test]
    fn alternating_k44() {
        let g = make_complete_multipartite(&[4, 4]).unwrap();
        let index = (0..4).map(|i| 2 * i).chain((0..4).map(|i| 2 * i + 1)).collect();
        let a = PolygonAssignment::new(8, index).unwrap();
        assert_eq!(ngon_slope_count(&g, &a).unwrap(), 4);
    }

    #[test]
    fn bad_assignments() {
        assert!(PolygonAssignment::new(3, vec![0, 0]).is_err());
        assert!(PolygonAssignment::new(3, vec![3]).is_err());
        let g = make_complete(2).unwrap();
        assert_eq!(ngon_slope_count(&g, &PolygonAssignment::new(7, vec![2, 5]).unwrap()).unwrap(), 1);
    }

    proptest! {
        #[test]
        fn modular_identity_matches_measurement(n in 3usize..=16, density in 0.0f64..1.0, seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let g = make_random_graph(n, n - 1, density, seed).unwrap();
            let mut idx: Vec<usize> = (0..n).collect();
            idx.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let a = PolygonAssignment::new(n, idx).unwrap();
            let mut d: Drawing<f64> = realize_ngon(&g, &a).unwrap();
            d.slope_class.clear();
            prop_assert_eq!(count_slopes(&d).unwrap(), ngon_slope_count(&g, &a).unwrap());
        }
    }
}
