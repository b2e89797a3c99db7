//! Drawing constructions. Each returns the drawing together with a
//! [`Certificate`] of the bounds it promises; [`verify_certificate`] measures
//! the drawing and compares.

mod blowup;
mod complete;
mod one_bend;
mod tree;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use blowup::{blow_up, draw_bandwidth, draw_tree_partitioned, host_stats, HPartition, HostDrawingStats};
pub use complete::{
    draw_complete_ngon, draw_kab, draw_kab_rows, draw_knn, draw_multipartite_power2, kab_slope_bounds,
    power2_partition,
};
pub use one_bend::{draw_one_bend, OneBendTrace};
pub use tree::{draw_forest, draw_tree};

use crate::bounds::elementary_lower_bounds;
use crate::geometry::{AnyDrawing, Drawing, GeometryError, ValidityReport};
use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("host drawing is not a valid straight-line drawing of the host graph")]
    InvalidHostDrawing,
    #[error("no disc radius passed the placement checks after {0} halvings")]
    RadiusSearch(usize),
    #[error("no subtree scale factor gave a plane drawing after {0} halvings")]
    ScaleSearch(usize),
}

/// Which construction produced a drawing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    CompleteNgon,
    BalancedBipartite,
    BipartiteRows,
    BipartitePolygon,
    PowerTwoMultipartite,
    BlowUp,
    Bandwidth,
    Tree,
    TreePartition,
    OneBend,
}

/// Bounds a construction promises for its own output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub theorem: Theorem,
    pub claimed_slope_bound: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed_length_bound: Option<usize>,
    /// Blow-up only: the length bound counting `ceil(k/2)` polygon lengths.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed_length_bound_ceil: Option<usize>,
    #[serde(default)]
    pub claimed_plane: bool,
    #[serde(default)]
    pub claimed_convex: bool,
}

impl Certificate {
    pub fn slopes(theorem: Theorem, bound: usize) -> Self {
        Certificate {
            theorem,
            claimed_slope_bound: bound,
            claimed_length_bound: None,
            claimed_length_bound_ceil: None,
            claimed_plane: false,
            claimed_convex: false,
        }
    }
}

/// A constructed drawing of `graph`.
#[derive(Debug, Clone)]
pub struct Construction<S> {
    pub graph: Graph,
    pub drawing: Drawing<S>,
    pub certificate: Certificate,
}

/// Measurements of a drawing and their comparison with a certificate.
#[derive(Debug, Clone, Serialize)]
pub struct Verification {
    pub slopes: usize,
    pub lengths: Option<usize>,
    pub crossings: usize,
    pub convex: bool,
    pub validity: ValidityReport,
    pub sn_lower_bound: usize,
    pub csn_lower_bound: usize,
    pub violations: Vec<String>,
    pub notes: Vec<String>,
}

impl Verification {
    pub fn ok(&self) -> bool {
        self.validity.is_valid() && self.violations.is_empty()
    }
}

/// Measure `d` as a drawing of `g`. With a certificate, every claim is
/// checked; without one only validity and the degree lower bounds are.
pub fn verify(g: &Graph, d: &AnyDrawing, cert: Option<&Certificate>) -> Result<Verification, GeometryError> {
    let validity = d.validate(g);
    if !validity.structure.is_empty() {
        return Err(GeometryError::GraphMismatch);
    }
    let slopes = d.count_slopes()?;
    let want_lengths = cert.is_none_or(|c| c.claimed_length_bound.is_some());
    let lengths = if want_lengths { Some(d.count_lengths()?) } else { None };
    let crossings = d.count_crossings(g)?;
    let convex = !d.has_bends() && d.is_convex(g);
    let (sn_lb, csn_lb) =
        if d.has_bends() { elementary_lower_bounds(&d.subdivision_graph()) } else { elementary_lower_bounds(g) };
    let mut violations = Vec::new();
    let mut notes = Vec::new();
    if validity.is_valid() {
        if slopes < sn_lb {
            violations.push(format!("{slopes} slopes is below the degree lower bound {sn_lb}"));
        }
        if convex && slopes < csn_lb {
            violations.push(format!("convex drawing with {slopes} slopes is below the bound {csn_lb}"));
        }
    }
    if let Some(c) = cert {
        if slopes > c.claimed_slope_bound {
            violations.push(format!("{slopes} slopes exceeds the claimed {}", c.claimed_slope_bound));
        }
        if let (Some(bound), Some(l)) = (c.claimed_length_bound, lengths) {
            if l > bound {
                let mut msg = format!("{l} lengths exceeds the claimed {bound}");
                if let Some(ceil) = c.claimed_length_bound_ceil {
                    if l <= ceil {
                        msg.push_str(&format!(" (within the ceiling variant {ceil})"));
                    }
                }
                violations.push(msg);
            } else if let Some(ceil) = c.claimed_length_bound_ceil {
                if ceil != bound {
                    notes.push(format!("{l} lengths within both the floor bound {bound} and the ceiling bound {ceil}"));
                }
            }
        }
        if c.claimed_plane && crossings > 0 {
            violations.push(format!("claimed plane but found {crossings} crossings"));
        }
        if c.claimed_convex && !convex {
            violations.push("claimed convex but the drawing is not".into());
        }
    }
    Ok(Verification {
        slopes,
        lengths,
        crossings,
        convex,
        validity,
        sn_lower_bound: sn_lb,
        csn_lower_bound: csn_lb,
        violations,
        notes,
    })
}

impl<S: crate::scalar::Scalar> Construction<S>
where
    AnyDrawing: From<Drawing<S>>,
{
    pub fn into_any(self) -> (Graph, AnyDrawing, Certificate) {
        (self.graph, AnyDrawing::from(self.drawing), self.certificate)
    }

    pub fn verify(&self) -> Result<Verification, GeometryError> {
        verify(&self.graph, &AnyDrawing::from(self.drawing.clone()), Some(&self.certificate))
    }
}
