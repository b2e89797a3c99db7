//! Straight-line and 1-bend graph drawings with few edge slopes.

pub mod bounds;
pub mod constructions;
pub mod geometry;
pub mod graph;
pub mod scalar;

pub use geometry::{Drawing, Point};
pub use graph::Graph;

/// Exact coordinate type.
pub type Rational = num_rational::BigRational;
pub type ExactPoint = Point<Rational>;
pub type NumericPoint = Point<f64>;
pub type ExactDrawing = Drawing<Rational>;
pub type NumericDrawing = Drawing<f64>;
