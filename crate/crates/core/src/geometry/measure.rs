//! Slope and length counting.
//!
//! Exact drawings compare canonical keys. Floating drawings are normalized to
//! diameter 1 and clustered: values within the tolerance merge, values
//! separated by more than ten times the tolerance are distinct, and anything
//! in between is reported as a precision error rather than guessed. Drawings
//! carrying class labels on every edge are counted by label, after checking
//! that each label really groups equal values.

use std::f64::consts::PI;

use super::point::{angle_gap, slope_of, Slope};
use super::{Drawing, GeometryError};
use crate::scalar::Scalar;

/// Ratio between the ambiguity band's upper edge and the tolerance.
pub const AMBIGUITY_FACTOR: f64 = 10.0;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Quantity {
    Slope,
    Length,
}

/// Class id of every segment's slope, in [`Drawing::segments`] order.
/// Ids are dense, starting at 0.
pub fn slope_classes<S: Scalar>(d: &Drawing<S>) -> Result<Vec<usize>, GeometryError> {
    let d = d.normalized();
    let segs = d.segments();
    let slopes = segs
        .iter()
        .map(|s| slope_of(d.point(s.from), d.point(s.to)))
        .collect::<Result<Vec<_>, _>>()?;
    if S::EXACT {
        let keys: Vec<_> = slopes
            .into_iter()
            .map(|s| match s {
                Slope::Direction { dx, dy } => (dx, dy),
                Slope::Angle(_) => unreachable!("exact scalars give directions"),
            })
            .collect();
        return Ok(dense_ids(&keys));
    }
    let angles: Vec<f64> = slopes.iter().map(Slope::angle).collect();
    if d.has_slope_labels() {
        let labels: Vec<i64> = segs.iter().map(|s| d.slope_class[&s.edge]).collect();
        labelled_classes(&angles, &labels, S::ANGLE_TOL, Quantity::Slope)
    } else {
        cluster(&angles, S::ANGLE_TOL, Some(PI), true, Quantity::Slope)
    }
}

/// Number of distinct slopes over all segments (both halves of bent edges).
pub fn count_slopes<S: Scalar>(d: &Drawing<S>) -> Result<usize, GeometryError> {
    Ok(slope_classes(d)?.into_iter().max().map_or(0, |m| m + 1))
}

/// Class id of every segment's length, in [`Drawing::segments`] order.
pub fn length_classes<S: Scalar>(d: &Drawing<S>) -> Result<Vec<usize>, GeometryError> {
    let d = d.normalized();
    let segs = d.segments();
    if S::EXACT {
        let sq: Vec<S> = segs.iter().map(|s| d.point(s.from).squared_distance(d.point(s.to))).collect();
        let mut idx: Vec<usize> = (0..sq.len()).collect();
        idx.sort_by(|&a, &b| sq[a].partial_cmp(&sq[b]).expect("exact scalars are totally ordered"));
        let mut out = vec![0; sq.len()];
        let mut next = 0;
        for (i, &j) in idx.iter().enumerate() {
            if i > 0 && sq[idx[i - 1]] != sq[j] {
                next += 1;
            }
            out[j] = next;
        }
        return Ok(out);
    }
    let lens: Vec<f64> = segs
        .iter()
        .map(|s| {
            let (x0, y0) = d.point(s.from).to_f64();
            let (x1, y1) = d.point(s.to).to_f64();
            (x1 - x0).hypot(y1 - y0)
        })
        .collect();
    if d.has_length_labels() {
        let labels: Vec<i64> = segs.iter().map(|s| d.length_class[&s.edge]).collect();
        labelled_classes(&lens, &labels, S::LENGTH_TOL, Quantity::Length)
    } else {
        cluster(&lens, S::LENGTH_TOL, None, true, Quantity::Length)
    }
}

/// Number of distinct segment lengths.
pub fn count_lengths<S: Scalar>(d: &Drawing<S>) -> Result<usize, GeometryError> {
    Ok(length_classes(d)?.into_iter().max().map_or(0, |m| m + 1))
}

fn dense_ids<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(k).expect("present")).collect()
}

fn gap(a: f64, b: f64, period: Option<f64>) -> f64 {
    match period {
        Some(_) => angle_gap(a, b),
        None => (a - b).abs(),
    }
}

/// Single-linkage clustering of sorted values at `tol`; with `strict`, a gap
/// inside the ambiguity band is an error.
fn cluster(
    values: &[f64],
    tol: f64,
    period: Option<f64>,
    strict: bool,
    what: Quantity,
) -> Result<Vec<usize>, GeometryError> {
    if values.is_empty() {
        return Ok(Vec::new());
    }
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut raw = vec![0usize; values.len()];
    let mut next = 0;
    let check = |a: f64, b: f64, g: f64| -> Result<bool, GeometryError> {
        if g <= tol {
            Ok(true)
        } else if strict && g < AMBIGUITY_FACTOR * tol {
            Err(ambiguous(what, a, b, g, tol))
        } else {
            Ok(false)
        }
    };
    for w in 1..idx.len() {
        let (a, b) = (values[idx[w - 1]], values[idx[w]]);
        if !check(a, b, b - a)? {
            next += 1;
        }
        raw[idx[w]] = next;
    }
    // Wrap-around for periodic values: the last cluster may join the first.
    if let Some(p) = period {
        let (first, last) = (values[idx[0]], values[idx[idx.len() - 1]]);
        if next > 0 && check(last, first, first + p - last)? {
            for r in raw.iter_mut() {
                if *r == next {
                    *r = 0;
                }
            }
        }
    }
    Ok(dense_ids(&raw))
}

/// Count by label after verifying each label's members agree within `tol`;
/// labels whose representatives agree within `tol` are merged.
fn labelled_classes(
    values: &[f64],
    labels: &[i64],
    tol: f64,
    what: Quantity,
) -> Result<Vec<usize>, GeometryError> {
    let period = (what == Quantity::Slope).then_some(PI);
    let label_ids = dense_ids(labels);
    let count = label_ids.iter().max().map_or(0, |m| m + 1);
    let mut rep: Vec<Option<f64>> = vec![None; count];
    for (i, &l) in label_ids.iter().enumerate() {
        match rep[l] {
            None => rep[l] = Some(values[i]),
            Some(r) => {
                let g = gap(r, values[i], period);
                if g > tol {
                    return Err(GeometryError::LabelMismatch {
                        what: quantity_name(what),
                        label: labels[i],
                        spread: g,
                    });
                }
            }
        }
    }
    let reps: Vec<f64> = rep.into_iter().map(|r| r.expect("every label has a member")).collect();
    let merged = cluster(&reps, tol, period, false, what)?;
    Ok(label_ids.iter().map(|&l| merged[l]).collect())
}

fn quantity_name(q: Quantity) -> &'static str {
    match q {
        Quantity::Slope => "slope",
        Quantity::Length => "length",
    }
}

fn ambiguous(what: Quantity, a: f64, b: f64, g: f64, tol: f64) -> GeometryError {
    GeometryError::Precision {
        what: quantity_name(what),
        a,
        b,
        gap: g,
        tol,
    }
}
