use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::kernel::{
    int, linalg, point_in_simplex, sqrt_exact, Chart, Membership, Point, Rational,
};

/// A nondegenerate simplex with canonically sorted vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    vertices: Vec<Point>,
}

impl Simplex {
    /// Checks that the vertices are affinely independent and share a dimension.
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        let s = Simplex::new_unchecked(vertices);
        s.check()?;
        Ok(s)
    }

    pub(crate) fn new_unchecked(mut vertices: Vec<Point>) -> Self {
        vertices.sort();
        Simplex { vertices }
    }

    pub(crate) fn check(&self) -> Result<()> {
        let first = self.vertices.first().ok_or(Error::Empty)?;
        for v in &self.vertices {
            v.check_dim(first.dim())?;
        }
        if self.vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Degenerate(format!("repeated vertex in {self}")));
        }
        if Chart::of(&self.vertices)?.dim() + 1 != self.vertices.len() {
            return Err(Error::Degenerate(format!("{self} is affinely dependent")));
        }
        Ok(())
    }

    pub fn is_degenerate(&self) -> bool {
        self.check().is_err()
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn ambient(&self) -> usize {
        self.vertices[0].dim()
    }

    pub fn has_vertex(&self, p: &Point) -> bool {
        self.vertices.binary_search(p).is_ok()
    }

    /// The facet not containing vertex `p`.
    pub fn without(&self, p: &Point) -> Simplex {
        Simplex {
            vertices: self.vertices.iter().filter(|v| *v != p).cloned().collect(),
        }
    }

    /// The cone `[self, apex]` (unchecked; the caller knows apex is off the hull).
    pub fn cone(&self, apex: &Point) -> Simplex {
        let mut v = self.vertices.clone();
        v.push(apex.clone());
        Simplex::new_unchecked(v)
    }

    pub fn facets(&self) -> Vec<Simplex> {
        self.vertices.iter().map(|v| self.without(v)).collect()
    }

    pub fn barycenter(&self) -> Point {
        Point::barycenter(&self.vertices)
    }

    pub fn locate(&self, p: &Point) -> Membership {
        point_in_simplex(p, &self.vertices).unwrap_or(Membership::Outside)
    }

    pub fn contains_point(&self, p: &Point) -> bool {
        self.locate(p) != Membership::Outside
    }

    /// Determinant volume `|det| / n!`; requires `dim == ambient`.
    pub fn volume(&self) -> Result<Rational> {
        if self.dim() != self.ambient() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient(),
                found: self.dim(),
            });
        }
        Ok(signed_volume(&self.vertices).abs())
    }

    /// Volume as height times base volume divided by the dimension, applied
    /// recursively. Returns `None` when the result is irrational.
    pub fn volume_recursive(&self) -> Option<Rational> {
        sqrt_exact(&squared_volume_recursive(&self.vertices))
    }
}

/// Signed determinant volume of `n + 1` points in `Q^n`.
pub(crate) fn signed_volume(vertices: &[Point]) -> Rational {
    let n = vertices.len() - 1;
    let m: Vec<Vec<Rational>> = vertices[1..].iter().map(|v| v.sub(&vertices[0])).collect();
    let mut fact = int(1);
    for k in 2..=n as i64 {
        fact *= int(k);
    }
    linalg::determinant(m) / fact
}

/// Squared volume via base and height; the height is the distance from the last
/// vertex to the affine hull of the others, found by orthogonal projection.
fn squared_volume_recursive(vertices: &[Point]) -> Rational {
    let k = vertices.len() - 1;
    if k == 0 {
        return int(1);
    }
    let (apex, base) = vertices.split_last().unwrap();
    let o = &base[0];
    let dirs: Vec<Vec<Rational>> = base[1..].iter().map(|b| b.sub(o)).collect();
    let rel = apex.sub(o);
    let foot_offset: Vec<Rational> = if dirs.is_empty() {
        vec![Rational::zero(); rel.len()]
    } else {
        let gram: Vec<Vec<Rational>> = dirs
            .iter()
            .map(|a| dirs.iter().map(|b| linalg::dot(a, b)).collect())
            .collect();
        let rhs: Vec<Rational> = dirs.iter().map(|a| linalg::dot(a, &rel)).collect();
        let lambda = linalg::solve(gram, rhs).unwrap_or_default();
        let mut f = vec![Rational::zero(); rel.len()];
        for (l, d) in lambda.iter().zip(&dirs) {
            for (fi, di) in f.iter_mut().zip(d) {
                *fi += l * di;
            }
        }
        f
    };
    let h: Vec<Rational> = rel.iter().zip(&foot_offset).map(|(r, f)| r - f).collect();
    let h2 = linalg::dot(&h, &h);
    let kk = int(k as i64);
    h2 * squared_volume_recursive(base) / (&kk * &kk)
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for Simplex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.vertices.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Simplex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<Point>::deserialize(d)?;
        Simplex::new(v).map_err(serde::de::Error::custom)
    }
}

/// `simplex_volume` by the determinant formula.
pub fn simplex_volume(s: &Simplex) -> Result<Rational> {
    s.volume()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat;
    use crate::pt;

    #[test]
    fn volumes() {
        let t = Simplex::new(vec![pt![0, 0], pt![1, 0], pt![0, 1]]).unwrap();
        assert_eq!(t.volume().unwrap(), rat(1, 2));
        let tet = Simplex::new(vec![pt![0, 0, 0], pt![1, 0, 0], pt![0, 1, 0], pt![0, 0, 1]]).unwrap();
        assert_eq!(tet.volume().unwrap(), rat(1, 6));
        let big = Simplex::new(vec![pt![0, 0], pt![2, 0], pt![0, 2]]).unwrap();
        assert_eq!(big.volume().unwrap(), int(2));
        for s in [&t, &tet, &big] {
            assert_eq!(s.volume_recursive(), Some(s.volume().unwrap()));
        }
    }

    #[test]
    fn recursive_volume_irrational_case() {
        // equilateral-ish with irrational area
        let s = Simplex::new(vec![pt![0, 0, 0], pt![1, 1, 0], pt![0, 1, 1]]).unwrap();
        assert_eq!(s.volume_recursive(), None);
        let seg = Simplex::new(vec![pt![0, 0], pt![3, 4]]).unwrap();
        assert_eq!(seg.volume_recursive(), Some(int(5)));
    }

    #[test]
    fn rejects_degenerate() {
        assert!(Simplex::new(vec![pt![0, 0], pt![1, 1], pt![2, 2]]).is_err());
        assert!(Simplex::new(vec![pt![0, 0], pt![0, 0]]).is_err());
    }

    #[test]
    fn canonical_vertex_order() {
        let a = Simplex::new(vec![pt![1, 0], pt![0, 0], pt![0, 1]]).unwrap();
        let b = Simplex::new(vec![pt![0, 1], pt![1, 0], pt![0, 0]]).unwrap();
        assert_eq!(a, b);
    }
}
