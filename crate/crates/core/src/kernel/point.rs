use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{format_rational, int, parse_rational, Rational};
use crate::error::{Error, Result};

/// A point of `Q^N` with exact rational coordinates.
///
/// Ordering is lexicographic on the coordinates; it is the canonical order used
/// everywhere vertices or point sets are sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(Vec<Rational>);

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        Point(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point(coords.iter().map(|&c| int(c)).collect())
    }

    /// Parses `"x,y[,z...]"` where each entry is a rational string.
    pub fn parse(s: &str) -> Result<Self> {
        let coords = s
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        if coords.is_empty() {
            return Err(Error::Parse("empty point".into()));
        }
        Ok(Point(coords))
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    /// Coordinate vector `self - other`.
    pub fn sub(&self, other: &Point) -> Vec<Rational> {
        self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()
    }

    /// `self + t (other - self)`.
    pub fn lerp(&self, other: &Point, t: &Rational) -> Point {
        Point(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + t * (b - a))
                .collect(),
        )
    }

    /// Average of the given points.
    pub fn barycenter<'a>(points: impl IntoIterator<Item = &'a Point>) -> Point {
        let mut iter = points.into_iter();
        let first = iter.next().expect("barycenter of no points");
        let mut sum = first.0.clone();
        let mut count = 1i64;
        for p in iter {
            for (s, c) in sum.iter_mut().zip(&p.0) {
                *s += c;
            }
            count += 1;
        }
        let n = int(count);
        Point(sum.into_iter().map(|s| s / &n).collect())
    }

    pub(crate) fn check_dim(&self, expected: usize) -> Result<()> {
        if self.dim() == expected {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected,
                found: self.dim(),
            })
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", format_rational(c))?;
        }
        write!(f, ")")
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.0.iter().map(format_rational).collect();
        strings.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        let coords = strings
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(Point(coords))
    }
}

/// Conversion used by [`pt!`]: integers and `(numerator, denominator)` pairs.
pub trait IntoRational {
    fn into_rational(self) -> Rational;
}

impl IntoRational for i64 {
    fn into_rational(self) -> Rational {
        int(self)
    }
}

impl IntoRational for i32 {
    fn into_rational(self) -> Rational {
        int(self as i64)
    }
}

impl IntoRational for (i64, i64) {
    fn into_rational(self) -> Rational {
        super::rational::rat(self.0, self.1)
    }
}

impl IntoRational for (i32, i32) {
    fn into_rational(self) -> Rational {
        super::rational::rat(self.0 as i64, self.1 as i64)
    }
}

impl IntoRational for Rational {
    fn into_rational(self) -> Rational {
        self
    }
}

/// Shorthand for building points in tests and examples: `pt![1, (1, 2)]` is `(1, 1/2)`.
#[macro_export]
macro_rules! pt {
    ($($c:expr),+ $(,)?) => {
        $crate::kernel::Point::new(vec![$($crate::kernel::IntoRational::into_rational($c)),+])
    };
}

/// A finite set of distinct points, kept sorted so that equality ignores input order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PointSet(Vec<Point>);

impl PointSet {
    pub fn new(mut points: Vec<Point>) -> Self {
        points.sort();
        points.dedup();
        PointSet(points)
    }

    pub fn empty() -> Self {
        PointSet(Vec::new())
    }

    pub fn points(&self) -> &[Point] {
        &self.0
    }

    pub fn into_points(self) -> Vec<Point> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.0.binary_search(p).is_ok()
    }

    /// Ambient dimension, or `None` for the empty set.
    pub fn ambient(&self) -> Option<usize> {
        self.0.first().map(Point::dim)
    }
}

impl FromIterator<Point> for PointSet {
    fn from_iter<I: IntoIterator<Item = Point>>(iter: I) -> Self {
        PointSet::new(iter.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat;

    #[test]
    fn parse_and_display() {
        let p = Point::parse("1/2, -3").unwrap();
        assert_eq!(p, pt![(1, 2), -3]);
        assert_eq!(p.to_string(), "(1/2,-3)");
        assert!(Point::parse("1,a").is_err());
    }

    #[test]
    fn point_set_is_order_insensitive() {
        let a = PointSet::new(vec![pt![1, 0], pt![0, 0], pt![1, 0]]);
        let b = PointSet::new(vec![pt![0, 0], pt![1, 0]]);
        assert_eq!(a, b);
        assert_eq!(a.len(), 2);
    }

    #[test]
    fn barycenter_and_lerp() {
        let c = Point::barycenter(&[pt![0, 0], pt![1, 0], pt![0, 1]]);
        assert_eq!(c, pt![(1, 3), (1, 3)]);
        assert_eq!(pt![0, 0].lerp(&pt![2, 4], &rat(1, 4)), pt![(1, 2), 1]);
    }
}
