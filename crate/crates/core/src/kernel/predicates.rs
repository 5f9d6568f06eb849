use dashu_int::ops::{Gcd, UnsignedAbs};
use dashu_int::{IBig, UBig};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::chart::Chart;
use super::linalg::{determinant, dot, null_space, solve};
use super::point::{Point, PointSet};
use super::rational::{sign, Rational};
use crate::error::{Error, Result};

fn check_same_dim(points: &[Point]) -> Result<usize> {
    let n = points.first().ok_or(Error::Empty)?.dim();
    for p in points {
        p.check_dim(n)?;
    }
    Ok(n)
}

/// Sign of the determinant of the edge vectors of `d + 1` points.
///
/// When `d` is smaller than the ambient dimension the sign is taken in the
/// chart of the points' affine hull; it is zero iff the points are affinely
/// dependent.
pub fn orientation(points: &[Point]) -> Result<i8> {
    let n = check_same_dim(points)?;
    let d = points.len() - 1;
    if d > n {
        return Err(Error::DimensionMismatch {
            expected: n + 1,
            found: points.len(),
        });
    }
    let (base, rest): (Point, Vec<Point>) = if d == n {
        (points[0].clone(), points[1..].to_vec())
    } else {
        let chart = Chart::of(points)?;
        if chart.dim() < d {
            return Ok(0);
        }
        let proj: Vec<Point> = points.iter().map(|p| chart.project(p)).collect();
        (proj[0].clone(), proj[1..].to_vec())
    };
    if d == 0 {
        return Ok(1);
    }
    let m: Vec<Vec<Rational>> = rest.iter().map(|p| p.sub(&base)).collect();
    Ok(sign(&determinant(m)))
}

/// Dimension of the affine hull.
pub fn affine_rank(ps: &PointSet) -> Result<usize> {
    Ok(Chart::of(ps.points())?.dim())
}

pub fn affine_rank_of(points: &[Point]) -> Result<usize> {
    Ok(Chart::of(points)?.dim())
}

/// Oriented hyperplane `normal . x = offset`, stored in canonical form: the
/// coefficients `(normal, offset)` are coprime integers and the first nonzero
/// normal entry is positive, so equal hyperplanes compare equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Hyperplane {
    #[serde(with = "serde_rational_vec")]
    normal: Vec<Rational>,
    #[serde(with = "super::rational::serde_rational")]
    offset: Rational,
}

impl Hyperplane {
    pub fn new(normal: Vec<Rational>, offset: Rational) -> Result<Self> {
        if normal.iter().all(Zero::is_zero) {
            return Err(Error::Precondition("hyperplane normal is zero".into()));
        }
        let mut lcm = UBig::ONE;
        for x in normal.iter().chain(std::iter::once(&offset)) {
            let g = (&lcm).gcd(x.denominator());
            lcm = &lcm / g * x.denominator();
        }
        let lcm = IBig::from(lcm);
        let mut ints: Vec<IBig> = normal
            .iter()
            .chain(std::iter::once(&offset))
            .map(|x| x.numerator() * (&lcm / IBig::from(x.denominator().clone())))
            .collect();
        let mut g = UBig::ZERO;
        for x in ints.iter().filter(|x| !x.is_zero()) {
            g = if g.is_zero() { x.unsigned_abs() } else { (&g).gcd(x) };
        }
        let mut g = IBig::from(g);
        let first_neg = normal.iter().find(|x| !x.is_zero()).unwrap().is_negative();
        if first_neg {
            g = -g;
        }
        for x in ints.iter_mut() {
            *x = &*x / &g;
        }
        let offset = Rational::from(ints.pop().unwrap());
        let normal = ints.into_iter().map(Rational::from).collect();
        Ok(Hyperplane { normal, offset })
    }

    /// Hyperplane through points spanning an `(N-1)`-dimensional affine subspace.
    pub fn through(points: &[Point]) -> Result<Self> {
        let n = check_same_dim(points)?;
        let chart = Chart::of(points)?;
        if chart.dim() + 1 != n {
            return Err(Error::Span {
                expected: n.saturating_sub(1),
                found: chart.dim(),
            });
        }
        let normal = null_space(chart.directions().to_vec(), n)
            .pop()
            .ok_or_else(|| Error::Internal("missing normal".into()))?;
        let offset = dot(&normal, points[0].coords());
        Hyperplane::new(normal, offset)
    }

    pub fn normal(&self) -> &[Rational] {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn ambient(&self) -> usize {
        self.normal.len()
    }

    /// `normal . p - offset`.
    pub fn eval(&self, p: &Point) -> Rational {
        dot(&self.normal, p.coords()) - &self.offset
    }

    pub fn side(&self, p: &Point) -> i8 {
        sign(&self.eval(p))
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p).is_zero()
    }

    /// Parameter `t` with `u + t (v - u)` on the hyperplane, if the line is not parallel.
    pub fn line_parameter(&self, u: &Point, v: &Point) -> Option<Rational> {
        let denom = dot(&self.normal, &v.sub(u));
        if denom.is_zero() {
            None
        } else {
            Some(-self.eval(u) / denom)
        }
    }
}

pub fn hyperplane_through(points: &[Point]) -> Result<Hyperplane> {
    Hyperplane::through(points)
}

pub fn side_of(h: &Hyperplane, p: &Point) -> Result<i8> {
    p.check_dim(h.ambient())?;
    Ok(h.side(p))
}

/// Position of a point relative to a simplex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Interior,
    Boundary,
    Outside,
}

/// Classification by exact barycentric coordinates, relative to the affine
/// hull of the simplex.
pub fn point_in_simplex(p: &Point, vertices: &[Point]) -> Result<Membership> {
    let n = check_same_dim(vertices)?;
    p.check_dim(n)?;
    let chart = Chart::of(vertices)?;
    let d = vertices.len() - 1;
    if chart.dim() != d {
        return Err(Error::Degenerate("simplex vertices are affinely dependent".into()));
    }
    if !chart.contains(p) {
        return Ok(Membership::Outside);
    }
    if d == 0 {
        return Ok(Membership::Interior);
    }
    let base = chart.project(&vertices[0]);
    let cols: Vec<Vec<Rational>> = vertices[1..]
        .iter()
        .map(|v| chart.project(v).sub(&base))
        .collect();
    // rows of the system are coordinates, columns the edge vectors
    let a: Vec<Vec<Rational>> = (0..d)
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect();
    let rhs = chart.project(p).sub(&base);
    let lambda = solve(a, rhs).ok_or_else(|| Error::Internal("singular barycentric system".into()))?;
    let first = Rational::one() - lambda.iter().fold(Rational::zero(), |s, x| s + x);
    let mut any_zero = false;
    for l in std::iter::once(&first).chain(&lambda) {
        match sign(l) {
            -1 => return Ok(Membership::Outside),
            0 => any_zero = true,
            _ => {}
        }
    }
    Ok(if any_zero {
        Membership::Boundary
    } else {
        Membership::Interior
    })
}

pub(crate) mod serde_rational_vec {
    use super::super::rational::{format_rational, parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        v.iter().map(format_rational).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{int, rat};
    use crate::pt;

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(&[pt![0, 0], pt![1, 0], pt![0, 1]]).unwrap(), 1);
        assert_eq!(orientation(&[pt![0, 0], pt![1, 0], pt![2, 0]]).unwrap(), 0);
        assert_eq!(orientation(&[pt![0, 0], pt![0, 1], pt![1, 0]]).unwrap(), -1);
        assert!(orientation(&[pt![0, 0], pt![1, 0, 0]]).is_err());
    }

    #[test]
    fn affine_rank_examples() {
        let r = |v: Vec<Point>| affine_rank(&PointSet::new(v)).unwrap();
        assert_eq!(r(vec![pt![0, 0]]), 0);
        assert_eq!(r(vec![pt![0, 0], pt![1, 0], pt![2, 0]]), 1);
        assert_eq!(r(vec![pt![0, 0], pt![1, 0], pt![0, 1], pt![1, 1]]), 2);
        assert!(affine_rank(&PointSet::empty()).is_err());
    }

    #[test]
    fn hyperplane_examples() {
        let h = hyperplane_through(&[pt![0, 0], pt![1, 1]]).unwrap();
        assert_eq!(h.normal(), &[int(1), int(-1)]);
        assert_eq!(h.offset(), &int(0));
        let h = hyperplane_through(&[pt![1, 0], pt![1, 5]]).unwrap();
        assert_eq!((h.normal(), h.offset()), (&[int(1), int(0)][..], &int(1)));
        let h = hyperplane_through(&[pt![1, 0, 0], pt![0, 1, 0], pt![0, 0, 1]]).unwrap();
        assert_eq!((h.normal(), h.offset()), (&[int(1), int(1), int(1)][..], &int(1)));
        assert!(matches!(hyperplane_through(&[pt![0, 0]]), Err(Error::Span { .. })));
        assert!(hyperplane_through(&[pt![0, 0], pt![1, 0], pt![0, 1]]).is_err());
    }

    #[test]
    fn canonical_scaling() {
        let a = Hyperplane::new(vec![rat(-1, 2), rat(-1, 2)], rat(-1, 2)).unwrap();
        let b = Hyperplane::new(vec![int(3), int(3)], int(3)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn side_examples() {
        let h = Hyperplane::new(vec![int(1), int(1)], int(1)).unwrap();
        assert_eq!(side_of(&h, &pt![0, 0]).unwrap(), -1);
        assert_eq!(side_of(&h, &pt![(1, 2), (1, 2)]).unwrap(), 0);
        assert_eq!(side_of(&h, &pt![1, 1]).unwrap(), 1);
        assert!(side_of(&h, &pt![1]).is_err());
    }

    #[test]
    fn point_in_simplex_examples() {
        let t = [pt![0, 0], pt![1, 0], pt![0, 1]];
        assert_eq!(point_in_simplex(&pt![(1, 3), (1, 3)], &t).unwrap(), Membership::Interior);
        assert_eq!(point_in_simplex(&pt![(1, 2), 0], &t).unwrap(), Membership::Boundary);
        assert_eq!(point_in_simplex(&pt![1, 1], &t).unwrap(), Membership::Outside);
        let seg = [pt![0, 0, 0], pt![2, 2, 0]];
        assert_eq!(point_in_simplex(&pt![1, 1, 0], &seg).unwrap(), Membership::Interior);
        assert_eq!(point_in_simplex(&pt![1, 1, 1], &seg).unwrap(), Membership::Outside);
    }
}
