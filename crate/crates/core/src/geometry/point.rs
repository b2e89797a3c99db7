use std::f64::consts::PI;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::GeometryError;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Point<S> {
    pub x: S,
    pub y: S,
}

impl<S: Scalar> Point<S> {
    pub fn new(x: S, y: S) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point { x: S::from_int(x), y: S::from_int(y) }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64_lossy(), self.y.to_f64_lossy())
    }

    pub fn sub(&self, o: &Point<S>) -> (S, S) {
        (self.x.clone() - o.x.clone(), self.y.clone() - o.y.clone())
    }

    pub fn squared_distance(&self, o: &Point<S>) -> S {
        let (dx, dy) = self.sub(o);
        dx.clone() * dx + dy.clone() * dy
    }

    /// Convert to another scalar type through f64.
    pub fn cast<T: Scalar>(&self) -> Point<T> {
        let (x, y) = self.to_f64();
        Point {
            x: T::from_f64(x).expect("finite coordinate"),
            y: T::from_f64(y).expect("finite coordinate"),
        }
    }
}

/// The slope of a line: an equivalence class of directions.
///
/// Exact drawings produce a reduced integer direction with `dy > 0`, or
/// `(1, 0)` for horizontal lines; floating drawings produce an angle in
/// `[0, pi)`.
#[derive(Debug, Clone, PartialEq, PartialOrd)]
pub enum Slope {
    Direction { dx: BigInt, dy: BigInt },
    Angle(f64),
}

impl Slope {
    pub fn horizontal() -> Self {
        Slope::Direction { dx: BigInt::from(1), dy: BigInt::zero() }
    }

    pub fn vertical() -> Self {
        Slope::Direction { dx: BigInt::zero(), dy: BigInt::from(1) }
    }

    /// The slope as an angle in `[0, pi)`.
    pub fn angle(&self) -> f64 {
        match self {
            Slope::Direction { dx, dy } => {
                let a = dy.to_f64().unwrap_or(0.0).atan2(dx.to_f64().unwrap_or(1.0));
                normalize_angle(a)
            }
            Slope::Angle(a) => *a,
        }
    }
}

/// Map any angle to the slope range `[0, pi)`.
pub fn normalize_angle(a: f64) -> f64 {
    let r = a.rem_euclid(PI);
    if r >= PI {
        0.0
    } else {
        r
    }
}

/// Distance between two slopes on the circle of period pi.
pub fn angle_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(PI);
    d.min(PI - d)
}

/// Slope of the line through `p` and `q`.
pub fn slope_of<S: Scalar>(p: &Point<S>, q: &Point<S>) -> Result<Slope, GeometryError> {
    let (dx, dy) = q.sub(p);
    if dx.is_zero() && dy.is_zero() {
        return Err(GeometryError::CoincidentPoints);
    }
    if S::EXACT {
        let (dx, dy) = S::direction_key(&dx, &dy).ok_or(GeometryError::CoincidentPoints)?;
        Ok(Slope::Direction { dx, dy })
    } else {
        Ok(Slope::Angle(normalize_angle(dy.to_f64_lossy().atan2(dx.to_f64_lossy()))))
    }
}
