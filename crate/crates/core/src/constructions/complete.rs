//! Complete, complete bipartite and complete multipartite graphs.

use super::{Certificate, Construction, ConstructionError, Theorem};
use crate::geometry::{ngon_slope_count, realize_ngon, Drawing, Point, PolygonAssignment};
use crate::graph::{make_complete, make_complete_multipartite, Graph};
use crate::Rational;

/// `K_n` on the regular `n`-gon.
pub fn draw_complete_ngon(n: usize) -> Result<Construction<f64>, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::InvalidParameter(format!("K_n on an n-gon needs n >= 3, got {n}")));
    }
    let graph = make_complete(n)?;
    let drawing = realize_ngon(&graph, &PolygonAssignment::identity(n))?;
    let mut certificate = Certificate::slopes(Theorem::CompleteNgon, n);
    certificate.claimed_convex = true;
    Ok(Construction { graph, drawing, certificate })
}

/// `K_{n,n}` on the regular `2n`-gon, parts alternating. Vertices `0..n`
/// take the even corners.
pub fn draw_knn(n: usize) -> Result<Construction<f64>, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::InvalidParameter("K_{n,n} needs n >= 1".into()));
    }
    let graph = make_complete_multipartite(&[n, n])?;
    let drawing = if n == 1 {
        let mut d = Drawing::new(vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0)], graph.edges().to_vec());
        d.slope_class.insert(0, 0);
        d
    } else {
        let index = (0..n).map(|i| 2 * i).chain((0..n).map(|i| 2 * i + 1)).collect();
        realize_ngon(&graph, &PolygonAssignment::new(2 * n, index)?)?
    };
    let mut certificate = Certificate::slopes(Theorem::BalancedBipartite, n);
    certificate.claimed_convex = true;
    Ok(Construction { graph, drawing, certificate })
}

/// `(ceil((a+b-1)/2), min(b, ceil(b/2)+a-1))` for `1 <= a <= b`.
pub fn kab_slope_bounds(a: usize, b: usize) -> Result<(usize, usize), ConstructionError> {
    check_kab(a, b)?;
    Ok(((a + b - 1).div_ceil(2), b.min(b.div_ceil(2) + a - 1)))
}

fn check_kab(a: usize, b: usize) -> Result<(), ConstructionError> {
    if a == 0 || a > b {
        return Err(ConstructionError::InvalidParameter(format!("K_{{a,b}} needs 1 <= a <= b, got ({a}, {b})")));
    }
    Ok(())
}

/// Three-row drawing of `K_{a,b}` with integer coordinates. Vertices `0..a`
/// form the middle row; the `b` others split over the top and bottom rows.
pub fn draw_kab_rows(a: usize, b: usize) -> Result<Construction<Rational>, ConstructionError> {
    check_kab(a, b)?;
    let graph = make_complete_multipartite(&[a, b])?;
    let half = b.div_ceil(2) as i64;
    let mut vertices = Vec::with_capacity(a + b);
    for i in 1..=a as i64 {
        vertices.push(Point::from_ints(half + i, 0));
    }
    for j in 1..=half {
        vertices.push(Point::from_ints(j, 1));
    }
    // Odd b: the padded bottom row loses its last vertex.
    for j in 1..=(b as i64 - half) {
        vertices.push(Point::from_ints(half + a as i64 + j, -1));
    }
    let drawing = Drawing::new(vertices, graph.edges().to_vec());
    let certificate = Certificate::slopes(Theorem::BipartiteRows, b.div_ceil(2) + a - 1);
    Ok(Construction { graph, drawing, certificate })
}

/// The better of the three-row drawing and the `2b`-gon drawing (`K_{a,b}`
/// inside the alternating `K_{b,b}`), as an exact or numeric drawing.
pub fn draw_kab(a: usize, b: usize) -> Result<(Graph, crate::geometry::AnyDrawing, Certificate), ConstructionError> {
    check_kab(a, b)?;
    if b.div_ceil(2) + a - 1 <= b || b < 2 {
        return Ok(draw_kab_rows(a, b)?.into_any());
    }
    let graph = make_complete_multipartite(&[a, b])?;
    let index = (0..a).map(|i| 2 * i).chain((0..b).map(|j| 2 * j + 1)).collect();
    let assignment = PolygonAssignment::new(2 * b, index)?;
    let drawing: Drawing<f64> = realize_ngon(&graph, &assignment)?;
    let mut certificate = Certificate::slopes(Theorem::BipartitePolygon, b);
    certificate.claimed_convex = true;
    Ok((graph, drawing.into(), certificate))
}

/// Parts `P_0..P_{k-1}` of `{0..n-1}`, `n = (k-1) 2^(p+1)`, with `j` in
/// `P_i` when `j = +-i mod 2(k-1)`.
pub fn power2_partition(p: u32, k: usize) -> Result<Vec<Vec<usize>>, ConstructionError> {
    if k < 2 || !(k - 1).is_power_of_two() || p > 20 {
        return Err(ConstructionError::InvalidParameter(format!(
            "need k >= 2 with k-1 a power of two and small p, got p={p}, k={k}"
        )));
    }
    let modulus = 2 * (k - 1);
    let n = (k - 1) << (p + 1);
    let mut parts = vec![Vec::new(); k];
    for j in 0..n {
        let r = j % modulus;
        parts[r.min(modulus - r)].push(j);
    }
    Ok(parts)
}

/// The complete multipartite graph on the parts of [`power2_partition`],
/// vertex `j` on corner `j` of the regular `n`-gon.
pub fn draw_multipartite_power2(p: u32, k: usize) -> Result<Construction<f64>, ConstructionError> {
    let parts = power2_partition(p, k)?;
    let n = (k - 1) << (p + 1);
    let small = 1usize << p;
    for (i, part) in parts.iter().enumerate() {
        let want = if i == 0 || i == k - 1 { small } else { 2 * small };
        if part.len() != want {
            return Err(ConstructionError::InvalidPartition(format!("part {i} has {} vertices, expected {want}", part.len())));
        }
    }
    let mut part_of = vec![0; n];
    for (i, part) in parts.iter().enumerate() {
        for &j in part {
            part_of[j] = i;
        }
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| part_of[u] != part_of[v]);
    let graph = Graph::from_edges(n, edges)?;
    let modulus = n / small;
    if let Some(&(u, v)) = graph.edges().iter().find(|&&(u, v)| (u + v) % modulus == 0) {
        return Err(ConstructionError::InvalidPartition(format!("edge ({u}, {v}) has a sum divisible by {modulus}")));
    }
    let assignment = PolygonAssignment::identity(n);
    let bound = n - small;
    debug_assert!(ngon_slope_count(&graph, &assignment)? <= bound);
    let drawing = if n >= 3 {
        realize_ngon(&graph, &assignment)?
    } else {
        let mut d = Drawing::new(vec![Point::new(1.0, 0.0), Point::new(-1.0, 0.0)], graph.edges().to_vec());
        d.slope_class.insert(0, 1);
        d
    };
    let mut certificate = Certificate::slopes(Theorem::PowerTwoMultipartite, bound);
    certificate.claimed_convex = true;
    Ok(Construction { graph, drawing, certificate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{count_slopes, is_convex_drawing, validate_drawing};

    #[test]
    fn complete_and_balanced_bipartite() {
        for n in [3, 4, 8] {
            let c = draw_complete_ngon(n).unwrap();
            assert_eq!(count_slopes(&c.drawing).unwrap(), n);
            assert!(c.verify().unwrap().ok());
        }
        assert!(draw_complete_ngon(2).is_err());
        for n in [1, 4, 6] {
            let c = draw_knn(n).unwrap();
            assert_eq!(count_slopes(&c.drawing).unwrap(), n);
            assert!(c.verify().unwrap().ok());
        }
    }

    #[test]
    fn three_rows() {
        let c = draw_kab_rows(3, 12).unwrap();
        assert_eq!(count_slopes(&c.drawing).unwrap(), 8);
        assert!(validate_drawing(&c.graph, &c.drawing).is_valid());
        assert!(!is_convex_drawing(&c.graph, &c.drawing));
        assert_eq!(count_slopes(&draw_kab_rows(1, 2).unwrap().drawing).unwrap(), 1);
        assert!(count_slopes(&draw_kab_rows(2, 4).unwrap().drawing).unwrap() <= 3);
        assert!(count_slopes(&draw_kab_rows(2, 5).unwrap().drawing).unwrap() <= 4);
        assert!(draw_kab_rows(4, 3).is_err());
    }

    #[test]
    fn kab_bounds() {
        assert_eq!(kab_slope_bounds(3, 12).unwrap(), (7, 8));
        assert_eq!(kab_slope_bounds(4, 4).unwrap(), (4, 4));
        assert_eq!(kab_slope_bounds(1, 1).unwrap(), (1, 1));
    }

    #[test]
    fn best_bipartite_drawing() {
        let (g, d, cert) = draw_kab(12, 12).unwrap();
        assert_eq!(cert.theorem, Theorem::BipartitePolygon);
        assert_eq!(d.count_slopes().unwrap(), 12);
        assert!(d.validate(&g).is_valid());
        let (_, d, cert) = draw_kab(3, 12).unwrap();
        assert_eq!(cert.theorem, Theorem::BipartiteRows);
        assert_eq!(d.count_slopes().unwrap(), 8);
    }

    #[test]
    fn power_of_two_parts() {
        let parts = power2_partition(1, 2).unwrap();
        assert_eq!(parts, vec![vec![0, 2], vec![1, 3]]);
        let c = draw_multipartite_power2(0, 3).unwrap();
        assert_eq!(c.graph.n(), 4);
        assert_eq!(count_slopes(&c.drawing).unwrap(), 3);
        let c = draw_multipartite_power2(0, 2).unwrap();
        assert_eq!(c.graph.m(), 1);
        assert_eq!(count_slopes(&c.drawing).unwrap(), 1);
        assert!(draw_multipartite_power2(0, 4).is_err());
        let c = draw_multipartite_power2(2, 5).unwrap();
        assert_eq!(count_slopes(&c.drawing).unwrap(), c.graph.max_degree());
        assert!(c.verify().unwrap().ok());
    }
}
