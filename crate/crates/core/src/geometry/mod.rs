//! Points, slopes, drawings and the verification kernel.

mod drawing;
mod json;
mod measure;
mod point;
mod polygon;
mod svg;
mod validate;

use thiserror::Error;

pub use drawing::{Drawing, Node, Segment};
pub use json::{AnyDrawing, DrawingDocument};
pub use measure::{count_lengths, count_slopes, length_classes, slope_classes, AMBIGUITY_FACTOR};
pub use point::{angle_gap, normalize_angle, slope_of, Point, Slope};
pub use polygon::{ngon_slope_count, realize_ngon, PolygonAssignment};
pub use svg::render_svg;
pub use validate::{count_crossings, is_convex_drawing, validate_drawing, ValidityReport};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("coincident points have no slope")]
    CoincidentPoints,
    #[error(
        "{what} values {a} and {b} differ by {gap:e}, inside the ambiguity band above tolerance {tol:e}; use exact mode or class labels"
    )]
    Precision { what: &'static str, a: f64, b: f64, gap: f64, tol: f64 },
    #[error("{what} label {label} groups values spread by {spread:e}")]
    LabelMismatch { what: &'static str, label: i64, spread: f64 },
    #[error("drawing does not match the graph")]
    GraphMismatch,
    #[error("invalid polygon assignment: {0}")]
    InvalidAssignment(String),
    #[error("drawing document: {0}")]
    Document(String),
}
