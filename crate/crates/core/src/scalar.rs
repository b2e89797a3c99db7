//! Coordinate scalars.
//!
//! Every drawing is generic over one [`Scalar`]. Exact scalars (big rationals)
//! answer every predicate without tolerance; floating scalars answer them with
//! the tolerances declared on the type, measured after the drawing has been
//! normalized to bounding-box diameter 1.

use std::cmp::Ordering;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive, Zero};

/// A coordinate type usable in a [`Drawing`](crate::geometry::Drawing).
pub trait Scalar:
    Clone + Debug + PartialOrd + Num + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    /// True for types whose arithmetic and comparisons are exact.
    const EXACT: bool;
    /// Angular tolerance (radians) for slope clustering. Zero for exact types.
    const ANGLE_TOL: f64;
    /// Distance tolerance for incidence tests and length clustering, relative
    /// to a drawing of diameter 1. Zero for exact types.
    const LENGTH_TOL: f64;

    /// `num / den` in this scalar type.
    fn ratio(num: i64, den: i64) -> Self;

    fn from_int(v: i64) -> Self {
        Self::ratio(v, 1)
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Reduced integer direction `(dx, dy)` with `dy > 0`, or `(1, 0)` for
    /// horizontal. Only available on exact types.
    fn direction_key(dx: &Self, dy: &Self) -> Option<(BigInt, BigInt)>;

    /// A unit vector `(cos a, sin a)`. Exact types return a rational point on
    /// the unit circle close to the requested angle; the vector still has
    /// length exactly one.
    fn unit_vector(angle: f64) -> (Self, Self);
}

/// Floating scalars: the numeric mode.
pub trait FloatScalar: Scalar + num_traits::Float + num_traits::FloatConst {}

impl<T> FloatScalar for T where T: Scalar + num_traits::Float + num_traits::FloatConst {}

impl Scalar for f64 {
    const EXACT: bool = false;
    const ANGLE_TOL: f64 = 1e-9;
    const LENGTH_TOL: f64 = 1e-9;

    fn ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn direction_key(_: &Self, _: &Self) -> Option<(BigInt, BigInt)> {
        None
    }

    fn unit_vector(angle: f64) -> (Self, Self) {
        (angle.cos(), angle.sin())
    }
}

impl Scalar for f32 {
    const EXACT: bool = false;
    const ANGLE_TOL: f64 = 1e-5;
    const LENGTH_TOL: f64 = 1e-5;

    fn ratio(num: i64, den: i64) -> Self {
        (num as f64 / den as f64) as f32
    }

    fn direction_key(_: &Self, _: &Self) -> Option<(BigInt, BigInt)> {
        None
    }

    fn unit_vector(angle: f64) -> (Self, Self) {
        (angle.cos() as f32, angle.sin() as f32)
    }
}

/// Denominator used for the half-angle tangent of rational unit vectors.
const UNIT_VECTOR_DENOM: i64 = 1 << 16;

impl Scalar for BigRational {
    const EXACT: bool = true;
    const ANGLE_TOL: f64 = 0.0;
    const LENGTH_TOL: f64 = 0.0;

    fn ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn direction_key(dx: &Self, dy: &Self) -> Option<(BigInt, BigInt)> {
        // Scale both components by the product of denominators, then reduce.
        let mut x = dx.numer() * dy.denom();
        let mut y = dy.numer() * dx.denom();
        if x.is_zero() && y.is_zero() {
            return None;
        }
        let g = x.gcd(&y);
        x /= &g;
        y /= &g;
        if y.is_negative() || (y.is_zero() && x.is_negative()) {
            x = -x;
            y = -y;
        }
        Some((x, y))
    }

    fn unit_vector(angle: f64) -> (Self, Self) {
        // Reduce to [0, 2pi), then handle the quadrant by symmetry so the
        // half-angle tangent stays in [0, 1].
        let two_pi = std::f64::consts::TAU;
        let a = angle.rem_euclid(two_pi);
        let quarter = std::f64::consts::FRAC_PI_2;
        let quadrant = (a / quarter).floor() as i64 % 4;
        let rest = a - quadrant as f64 * quarter;
        let t = (rest / 2.0).tan();
        let p = (t * UNIT_VECTOR_DENOM as f64).round() as i64;
        let q = UNIT_VECTOR_DENOM;
        // (q^2 - p^2, 2pq) / (q^2 + p^2) lies exactly on the unit circle.
        let den = q * q + p * p;
        let c = BigRational::new(BigInt::from(q * q - p * p), BigInt::from(den));
        let s = BigRational::new(BigInt::from(2 * p * q), BigInt::from(den));
        match quadrant {
            0 => (c, s),
            1 => (-s, c),
            2 => (-c, -s),
            _ => (s, -c),
        }
    }
}

/// Sign of `v`, treating magnitudes up to `tol` as zero on floating types.
pub(crate) fn sign_with_tol<S: Scalar>(v: &S, tol: f64) -> Ordering {
    if S::EXACT {
        v.partial_cmp(&S::zero()).unwrap_or(Ordering::Equal)
    } else {
        let f = v.to_f64_lossy();
        if f.abs() <= tol {
            Ordering::Equal
        } else if f > 0.0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

/// Parse a rational written as `p/q` or `p`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(BigRational::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// Format a rational as `p/q`, always including the denominator.
pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn direction_key_is_reduced_and_oriented() {
        let r = |a, b| BigRational::ratio(a, b);
        assert_eq!(
            BigRational::direction_key(&r(2, 1), &r(4, 1)),
            Some((BigInt::from(1), BigInt::from(2)))
        );
        assert_eq!(
            BigRational::direction_key(&r(-2, 1), &r(-4, 1)),
            Some((BigInt::from(1), BigInt::from(2)))
        );
        assert_eq!(
            BigRational::direction_key(&r(-3, 1), &r(0, 1)),
            Some((BigInt::from(1), BigInt::from(0)))
        );
        assert_eq!(
            BigRational::direction_key(&r(0, 1), &r(-5, 7)),
            Some((BigInt::from(0), BigInt::from(1)))
        );
        assert_eq!(
            BigRational::direction_key(&r(1, 2), &r(1, 3)),
            Some((BigInt::from(3), BigInt::from(2)))
        );
        assert_eq!(BigRational::direction_key(&r(0, 1), &r(0, 1)), None);
    }

    #[test]
    fn rational_unit_vectors_have_unit_length() {
        for i in 0..64 {
            let a = i as f64 * 0.1 - 3.0;
            let (c, s) = BigRational::unit_vector(a);
            assert!((&c * &c + &s * &s).is_one());
            assert!((c.to_f64().unwrap() - a.cos()).abs() < 1e-4);
            assert!((s.to_f64().unwrap() - a.sin()).abs() < 1e-4);
        }
        let (c, s) = BigRational::unit_vector(-std::f64::consts::FRAC_PI_2);
        assert!(c.is_zero());
        assert_eq!(s, -BigRational::one());
    }

    #[test]
    fn rational_text_round_trip() {
        let r = parse_rational("-6/4").unwrap();
        assert_eq!(format_rational(&r), "-3/2");
        assert_eq!(parse_rational("7").unwrap(), BigRational::from_integer(7.into()));
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("x").is_none());
    }
}
