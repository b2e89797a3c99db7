//! Plane tree drawings with few slopes and few edge lengths.
//!
//! A path through the root is drawn horizontally with unit edges; every other
//! neighbour of a path vertex hangs below it on the unit circle, the `j`-th
//! one along slope `pi/2 (1 + j/(D-2))` where `D` is the maximum degree. The
//! remaining subtrees are drawn the same way, scaled by `l` per level. The
//! drawing is exact: the child directions are rational points on the unit
//! circle, so every edge at depth `d` has length exactly `l^d`.

use std::f64::consts::FRAC_PI_2;

use fixedbitset::FixedBitSet;

use super::{Certificate, Construction, ConstructionError, Theorem};
use crate::geometry::{count_crossings, validate_drawing, Drawing, Point};
use crate::graph::{Graph, PathwidthOracle, Tree};
use crate::scalar::Scalar;
use crate::Rational;

const SCALE_HALVINGS: usize = 64;

/// How one vertex is positioned relative to an already placed anchor.
#[derive(Debug, Clone, Copy)]
enum Step {
    /// `steps` unit edges to the right of the anchor.
    Along(i64),
    /// Below the anchor in child direction `slot`.
    Child(usize),
}

#[derive(Debug, Clone, Copy)]
struct Placement {
    vertex: usize,
    anchor: usize,
    step: Step,
    depth: u32,
}

/// Placement order for one component, root first.
struct Plan {
    root: usize,
    steps: Vec<Placement>,
    /// Per edge of the component, in discovery order: (u, v, slope label, depth).
    edges: Vec<(usize, usize, i64, u32)>,
}

fn plan_component(oracle: &mut PathwidthOracle, comp: &FixedBitSet, delta0: usize) -> Plan {
    let g = oracle.graph();
    let root = if delta0 <= 2 {
        comp.ones().find(|&v| g.neighbors(v).iter().filter(|&&w| comp.contains(w)).count() <= 1)
    } else {
        oracle.backbone(comp, None).map(|b| b[0])
    }
    .expect("nonempty component");
    let mut plan = Plan { root, steps: Vec::new(), edges: Vec::new() };
    let horizontal = delta0.saturating_sub(2) as i64;
    let mut stack = vec![(comp.clone(), root, 0u32)];
    while let Some((comp, r, depth)) = stack.pop() {
        if comp.count_ones(..) == 1 {
            continue;
        }
        let path = if delta0 <= 2 {
            // A path: walk it from its end.
            let end = comp.ones().filter(|&v| v != r).find(|&v| g.neighbors(v).iter().filter(|&&w| comp.contains(w)).count() <= 1);
            oracle.path_between(&comp, r, end.expect("a path has two ends"))
        } else {
            match oracle.backbone(&comp, Some(r)) {
                Some(b) => b,
                None => {
                    let b = oracle.backbone(&comp, None).expect("every tree has a backbone");
                    let to_first = oracle.path_between(&comp, r, b[0]);
                    let to_last = oracle.path_between(&comp, r, b[b.len() - 1]);
                    if to_last.len() < to_first.len() {
                        to_last
                    } else {
                        to_first
                    }
                }
            }
        };
        let at = path.iter().position(|&v| v == r).expect("path contains its root") as i64;
        let mut rest = comp.clone();
        for &v in &path {
            rest.set(v, false);
        }
        for w in path.windows(2) {
            plan.edges.push((w[0], w[1], horizontal, depth));
        }
        for (i, &v) in path.iter().enumerate() {
            if v != r {
                plan.steps.push(Placement { vertex: v, anchor: r, step: Step::Along(i as i64 - at), depth });
            }
        }
        for &x in &path {
            let mut children: Vec<usize> = g.neighbors(x).iter().copied().filter(|&y| rest.contains(y)).collect();
            children.sort_unstable();
            assert!(children.len() <= delta0.saturating_sub(2), "degree budget exceeded at {x}");
            for (j, &y) in children.iter().enumerate() {
                plan.steps.push(Placement { vertex: y, anchor: x, step: Step::Child(j), depth });
                plan.edges.push((x, y, j as i64, depth));
            }
        }
        for sub in oracle.components(&rest) {
            let r2 = sub
                .ones()
                .find(|&y| g.neighbors(y).iter().any(|w| path.contains(w)))
                .expect("subtree hangs off the path");
            stack.push((sub, r2, depth + 1));
        }
    }
    plan
}

/// Child direction vectors, exact unit vectors pointing below the path.
fn directions(delta0: usize) -> Vec<(Rational, Rational)> {
    (0..delta0.saturating_sub(2))
        .map(|j| {
            let slope = FRAC_PI_2 * (1.0 + j as f64 / (delta0 - 2) as f64);
            // The downward direction along this slope.
            Rational::unit_vector(slope + std::f64::consts::PI)
        })
        .collect()
}

fn realize(plan: &Plan, pos: &mut [Option<Point<Rational>>], origin: Point<Rational>, ell: &Rational, dirs: &[(Rational, Rational)]) {
    pos[plan.root] = Some(origin);
    let mut powers = vec![Rational::from_int(1)];
    for p in &plan.steps {
        while powers.len() <= p.depth as usize {
            let next = powers.last().expect("nonempty").clone() * ell.clone();
            powers.push(next);
        }
        let scale = &powers[p.depth as usize];
        let a = pos[p.anchor].clone().expect("anchor placed first");
        let (dx, dy) = match p.step {
            Step::Along(s) => (Rational::from_int(s), Rational::from_int(0)),
            Step::Child(j) => dirs[j].clone(),
        };
        pos[p.vertex] = Some(Point::new(a.x + dx * scale.clone(), a.y + dy * scale.clone()));
    }
}

/// Plane drawing of a forest; components side by side.
pub fn draw_forest(g: &Graph) -> Result<Construction<Rational>, ConstructionError> {
    if !g.is_forest() {
        return Err(ConstructionError::InvalidParameter("graph is not a forest".into()));
    }
    let n = g.n();
    if n == 0 {
        return Err(ConstructionError::InvalidParameter("empty graph".into()));
    }
    let delta0 = g.max_degree();
    let mut oracle = PathwidthOracle::new(g);
    let k = oracle.pathwidth(&oracle.full_set());
    let comps = oracle.components(&oracle.full_set());
    let plans: Vec<Plan> = comps.iter().map(|c| plan_component(&mut oracle, c, delta0)).collect();
    let dirs = directions(delta0);

    let mut slope_of_edge = vec![0i64; g.m()];
    let mut depth_of_edge = vec![0u32; g.m()];
    for plan in &plans {
        for &(u, v, s, d) in &plan.edges {
            let e = g.edge_index(u, v).expect("tree edge");
            slope_of_edge[e] = s;
            depth_of_edge[e] = d;
        }
    }

    let mut ell = Rational::new(1.into(), (2 * n as i64).into());
    for _ in 0..SCALE_HALVINGS {
        let mut pos: Vec<Option<Point<Rational>>> = vec![None; n];
        let mut cursor = Rational::from_int(0);
        let mut widths = Vec::new();
        // Lay out each component at the origin first, then shift.
        for (plan, comp) in plans.iter().zip(&comps) {
            realize(plan, &mut pos, Point::from_ints(0, 0), &ell, &dirs);
            let xs: Vec<&Rational> = comp.ones().map(|v| &pos[v].as_ref().expect("placed").x).collect();
            let lo = xs.iter().copied().min_by(|a, b| a.cmp(b)).expect("nonempty").clone();
            let hi = xs.iter().copied().max_by(|a, b| a.cmp(b)).expect("nonempty").clone();
            widths.push((lo, hi));
        }
        let gap = widths.iter().map(|(lo, hi)| hi - lo).max().filter(|w| *w > Rational::from_int(0)).unwrap_or_else(|| Rational::from_int(1));
        for (comp, (lo, hi)) in comps.iter().zip(&widths) {
            let shift = cursor.clone() - lo;
            for v in comp.ones() {
                let p = pos[v].as_mut().expect("placed");
                p.x = p.x.clone() + shift.clone();
            }
            cursor = cursor + (hi - lo) + gap.clone();
        }
        let mut d = Drawing::new(pos.into_iter().map(|p| p.expect("placed")).collect(), g.edges().to_vec());
        for e in 0..g.m() {
            d.slope_class.insert(e, slope_of_edge[e]);
            d.length_class.insert(e, depth_of_edge[e] as i64);
        }
        if validate_drawing(g, &d).is_valid() && count_crossings(g, &d)? == 0 {
            let mut certificate = Certificate::slopes(Theorem::Tree, delta0.saturating_sub(1).max(1));
            certificate.claimed_length_bound = Some((2 * k).saturating_sub(1));
            certificate.claimed_plane = true;
            return Ok(Construction { graph: g.clone(), drawing: d, certificate });
        }
        ell /= Rational::from_int(2);
    }
    Err(ConstructionError::ScaleSearch(SCALE_HALVINGS))
}

/// Plane drawing of a tree.
pub fn draw_tree(t: &Tree) -> Result<Construction<Rational>, ConstructionError> {
    draw_forest(t.graph())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{count_lengths, count_slopes};
    use crate::graph::{make_path, make_random_tree, make_star};

    fn check(g: &Graph) -> Construction<Rational> {
        let c = draw_forest(g).unwrap();
        let v = c.verify().unwrap();
        assert!(v.ok(), "{v:?}");
        c
    }

    #[test]
    fn paths_and_stars() {
        let c = check(&make_path(9).unwrap());
        assert_eq!(count_slopes(&c.drawing).unwrap(), 1);
        assert_eq!(count_lengths(&c.drawing).unwrap(), 1);
        let c = check(&make_star(3).unwrap());
        assert!(count_slopes(&c.drawing).unwrap() <= 2);
        assert_eq!(count_lengths(&c.drawing).unwrap(), 1);
        check(&Graph::empty(1));
    }

    #[test]
    fn complete_binary_tree() {
        let g = Graph::from_edges(15, (1..15).map(|v| ((v - 1) / 2, v))).unwrap();
        let c = check(&g);
        assert!(count_slopes(&c.drawing).unwrap() <= 2);
        assert!(count_lengths(&c.drawing).unwrap() <= 3);
    }

    #[test]
    fn random_trees_and_forests() {
        for seed in 0..10 {
            check(&make_random_tree(30, 3 + seed as usize % 5, seed).unwrap());
        }
        let forest = Graph::from_edges(7, [(0, 1), (1, 2), (1, 3), (4, 5)]).unwrap();
        check(&forest);
    }
}
