//! Randomised invariants of the constructions and the kernel.

use std::collections::HashMap;

use proptest::prelude::*;
use slopeforge::bounds::elementary_lower_bounds;
use slopeforge::constructions::{
    blow_up, draw_bandwidth, draw_forest, draw_one_bend, host_stats, HPartition,
};
use slopeforge::geometry::{
    angle_gap, count_lengths, count_slopes, is_convex_drawing, normalize_angle, validate_drawing, AnyDrawing,
    Drawing, DrawingDocument, Point,
};
use slopeforge::graph::{bandwidth_heuristic, make_path, make_random_graph, make_random_tree, Graph};
use slopeforge::Rational;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn degree_bounds_hold_for_any_valid_drawing(
        pts in prop::collection::vec((-20i64..=20, -20i64..=20), 2..9),
        density in 0.1f64..1.0,
        seed in any::<u64>(),
    ) {
        let n = pts.len();
        let g = make_random_graph(n, n - 1, density, seed).unwrap();
        let d: Drawing<Rational> = Drawing::new(pts.iter().map(|&(x, y)| Point::from_ints(x, y)).collect(), g.edges().to_vec());
        prop_assume!(validate_drawing(&g, &d).is_valid());
        let (sn, csn) = elementary_lower_bounds(&g);
        let slopes = count_slopes(&d).unwrap();
        prop_assert!(slopes >= sn);
        if is_convex_drawing(&g, &d) {
            prop_assert!(slopes >= csn);
        }
    }

    #[test]
    fn bandwidth_drawings_meet_their_certificate(n in 2usize..=14, d in 1usize..=4, density in 0.1f64..0.9, seed in any::<u64>()) {
        let g = make_random_graph(n, d, density, seed).unwrap();
        let o = bandwidth_heuristic(&g);
        let c = draw_bandwidth(&g, &o).unwrap();
        let v = c.verify().unwrap();
        prop_assert!(v.ok(), "{:?}", v);
    }

    #[test]
    fn tree_drawings_meet_their_certificate(n in 1usize..=40, d in 2usize..=7, seed in any::<u64>()) {
        let g = make_random_tree(n, d, seed).unwrap();
        let c = draw_forest(&g).unwrap();
        let v = c.verify().unwrap();
        prop_assert!(v.ok(), "{:?}", v);
    }

    #[test]
    fn one_bend_routing_invariants(n in 1usize..=20, d in 1usize..=6, density in 0.1f64..0.9, seed in any::<u64>()) {
        let g = make_random_graph(n, d, density, seed).unwrap();
        let (c, trace) = draw_one_bend(&g).unwrap();
        prop_assert!(c.verify().unwrap().ok());
        for v in 0..n {
            prop_assert!(trace.lines_used[v] <= g.degree(v));
        }
        if g.m() > 0 {
            prop_assert!(trace.min_unused_before_routing.unwrap() >= 2);
        }
    }

    #[test]
    fn blow_up_keeps_corresponding_edges_parallel(k in 1usize..=4, density in 0.3f64..1.0, seed in any::<u64>()) {
        // Path host drawn with repeated slopes and lengths.
        let host = make_path(5).unwrap();
        let hd: Drawing<Rational> = Drawing::new(
            [(0, 0), (2, 0), (3, 1), (5, 1), (6, 2)].iter().map(|&(x, y)| Point::from_ints(x, y)).collect(),
            host.edges().to_vec(),
        );
        let assign: Vec<usize> = (0..5 * k).map(|v| v / k).collect();
        let n = assign.len();
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if assign[v] <= assign[u] + 1 && rand::Rng::gen_bool(&mut rng, density) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges).unwrap();
        let part = HPartition::new(&g, host.clone(), assign.clone()).unwrap();
        let c = blow_up(&g, &hd, &part).unwrap();
        prop_assert!(c.verify().unwrap().ok());
        let stats = host_stats(&hd).unwrap();
        // Group cross edges by (host pair class, slot at left node, slot at right node).
        let mut groups: HashMap<(usize, usize, usize), Vec<f64>> = HashMap::new();
        for &(u, v) in g.edges() {
            let (x, y) = (assign[u], assign[v]);
            if x == y {
                continue;
            }
            let (u, v) = if x < y { (u, v) } else { (v, u) };
            let he = host.edge_index(assign[u], assign[v]).unwrap();
            let (a, b) = (c.drawing.vertices[u].to_f64(), c.drawing.vertices[v].to_f64());
            let angle = normalize_angle((b.1 - a.1).atan2(b.0 - a.0));
            groups.entry((stats.edge_pair[he], u % k, v % k)).or_default().push(angle);
        }
        let distinct_pairs: std::collections::BTreeSet<usize> = stats.edge_pair.iter().copied().collect();
        for ((pair, _, _), angles) in &groups {
            prop_assert!(distinct_pairs.contains(pair));
            for a in angles {
                prop_assert!(angle_gap(*a, angles[0]) < 1e-9);
            }
        }
        prop_assert!(count_lengths(&c.drawing).unwrap() <= c.certificate.claimed_length_bound.unwrap());
    }

    #[test]
    fn documents_round_trip(pts in prop::collection::vec((-1000i64..1000, 1i64..50, -1000i64..1000, 1i64..50), 2..6)) {
        let n = pts.len();
        let g = make_path(n).unwrap();
        let d: Drawing<Rational> = Drawing::new(
            pts.iter().map(|&(a, b, c, e)| Point::new(Rational::new(a.into(), b.into()), Rational::new(c.into(), e.into()))).collect(),
            g.edges().to_vec(),
        );
        for any in [AnyDrawing::Exact(d.clone()), AnyDrawing::Numeric(d.cast())] {
            let text = serde_json::to_string(&any.to_document(None)).unwrap();
            let doc: DrawingDocument = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(&AnyDrawing::from_document(&doc).unwrap(), &any);
        }
    }
}
