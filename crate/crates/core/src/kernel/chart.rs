
use super::linalg::rref;
use super::point::Point;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Coordinate chart of an affine subspace.
///
/// Projection keeps the pivot coordinates selected by row reduction of the
/// direction vectors; on the subspace it is an affine bijection onto `Q^dim`.
/// Incidence and convexity are preserved, and volumes are scaled by a
/// constant factor.
#[derive(Clone, Debug)]
pub struct Chart {
    origin: Point,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Chart {
    pub fn of(points: &[Point]) -> Result<Chart> {
        let origin = points.first().ok_or(Error::Empty)?.clone();
        let n = origin.dim();
        let mut dirs = Vec::with_capacity(points.len());
        for p in &points[1..] {
            p.check_dim(n)?;
            let d = p.sub(&origin);
            if d.iter().any(|x| !x.is_zero()) {
                dirs.push(d);
            }
        }
        let (rows, pivots) = if dirs.is_empty() {
            (Vec::new(), Vec::new())
        } else {
            rref(dirs)
        };
        Ok(Chart {
            origin,
            rows,
            pivots,
        })
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.origin.dim()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Direction basis of the subspace in reduced row echelon form.
    pub fn directions(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn origin(&self) -> &Point {
        &self.origin
    }

    pub fn project(&self, p: &Point) -> Point {
        Point::new(self.pivots.iter().map(|&c| p.coords()[c].clone()).collect())
    }

    /// Inverse of [`Chart::project`] on the affine subspace.
    pub fn lift(&self, y: &Point) -> Point {
        let mut coords = self.origin.coords().to_vec();
        for ((row, &piv), yi) in self.rows.iter().zip(&self.pivots).zip(y.coords()) {
            let t = yi - &self.origin.coords()[piv];
            if t.is_zero() {
                continue;
            }
            for (c, r) in coords.iter_mut().zip(row) {
                if !r.is_zero() {
                    *c += &t * r;
                }
            }
        }
        Point::new(coords)
    }

    /// Whether `p` lies on the affine subspace.
    pub fn contains(&self, p: &Point) -> bool {
        p.dim() == self.ambient() && &self.lift(&self.project(p)) == p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pt;

    #[test]
    fn project_lift_round_trip() {
        let pts = [pt![1, 0, 0], pt![0, 1, 0], pt![0, 0, 1]];
        let c = Chart::of(&pts).unwrap();
        assert_eq!(c.dim(), 2);
        for p in &pts {
            assert_eq!(&c.lift(&c.project(p)), p);
        }
        assert!(c.contains(&pt![(1, 3), (1, 3), (1, 3)]));
        assert!(!c.contains(&pt![0, 0, 0]));
    }

    #[test]
    fn single_point_chart() {
        let c = Chart::of(&[pt![2, 3]]).unwrap();
        assert_eq!(c.dim(), 0);
        assert!(c.contains(&pt![2, 3]));
        assert!(!c.contains(&pt![2, 4]));
    }
}
