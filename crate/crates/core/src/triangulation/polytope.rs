use std::cmp::Ordering;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use num_traits::Zero;

use super::simplex::Simplex;
use crate::error::{Error, Result};
use crate::kernel::{hull, Chart, HRep, Hyperplane, Point, PointSet, Rational};

/// Convex hull of finitely many points, kept as its generators and extreme points.
#[derive(Clone, Debug)]
pub struct Polytope {
    generators: PointSet,
    vertices: Vec<Point>,
    dim: usize,
    facets: OnceLock<Vec<Vec<Point>>>,
}

impl Polytope {
    pub fn new(generators: Vec<Point>) -> Result<Self> {
        let generators = PointSet::new(generators);
        let h = hull(generators.points())?;
        let mut sets: Vec<Vec<Point>> = h.facets.into_iter().map(|(_, _, on)| on).collect();
        sets.sort();
        Ok(Polytope {
            dim: h.chart.dim(),
            vertices: h.vertices,
            generators,
            facets: OnceLock::from(sets),
        })
    }

    /// Builds from points already known to be the sorted extreme points.
    pub(crate) fn from_vertices(vertices: Vec<Point>) -> Self {
        let dim = Chart::of(&vertices).map(|c| c.dim()).unwrap_or(0);
        Self::with_dim(vertices, dim)
    }

    fn with_dim(vertices: Vec<Point>, dim: usize) -> Self {
        Polytope {
            generators: PointSet::new(vertices.clone()),
            vertices,
            dim,
            facets: OnceLock::new(),
        }
    }

    pub fn from_simplex(s: &Simplex) -> Self {
        Self::with_dim(s.vertices().to_vec(), s.dim())
    }

    pub fn generators(&self) -> &PointSet {
        &self.generators
    }

    /// Extreme points, sorted.
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn hull_vertices(&self) -> PointSet {
        PointSet::new(self.vertices.clone())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ambient(&self) -> usize {
        self.vertices[0].dim()
    }

    pub fn is_simplex(&self) -> bool {
        self.vertices.len() == self.dim + 1
    }

    pub fn as_simplex(&self) -> Option<Simplex> {
        self.is_simplex()
            .then(|| Simplex::new_unchecked(self.vertices.clone()))
    }

    /// Average of the extreme points; lies in the relative interior.
    pub fn vertex_barycenter(&self) -> Point {
        Point::barycenter(&self.vertices)
    }

    /// Facets inside the affine hull, in canonical order.
    pub fn facets(&self) -> Vec<Polytope> {
        if self.dim == 0 {
            return Vec::new();
        }
        let sets = self.facets.get_or_init(|| {
            if self.is_simplex() {
                let mut sets: Vec<Vec<Point>> = (0..self.vertices.len())
                    .map(|i| {
                        let mut v = self.vertices.clone();
                        v.remove(i);
                        v
                    })
                    .collect();
                sets.sort();
                sets
            } else {
                crate::kernel::facet_vertex_sets(&self.vertices).unwrap_or_default()
            }
        });
        sets.iter()
            .map(|v| Polytope::with_dim(v.clone(), self.dim - 1))
            .collect()
    }

    pub fn hrep(&self) -> HRep {
        HRep::of(&self.vertices).expect("polytope has vertices")
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.dim() == self.ambient() && self.hrep().contains(p)
    }

    /// Whether `p` lies on the affine hull.
    pub fn spans(&self, p: &Point) -> bool {
        Chart::of(&self.vertices).map(|c| c.contains(p)).unwrap_or(false)
    }

    /// Volume of a full-dimensional polytope, summed over a starring at a vertex.
    pub fn volume(&self) -> Result<Rational> {
        if self.dim != self.ambient() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient(),
                found: self.dim,
            });
        }
        let mut total = Rational::zero();
        for s in super::star::star_cells(self, &self.vertices[0]) {
            total += s.volume()?;
        }
        Ok(total)
    }

    /// Splits along `h` when `h` has vertices strictly on both sides.
    pub fn cut(&self, h: &Hyperplane) -> Option<Cut> {
        let sides: Vec<i8> = self.vertices.iter().map(|v| h.side(v)).collect();
        if !sides.contains(&1) || !sides.contains(&-1) {
            return None;
        }
        let mut section = Vec::new();
        for (i, u) in self.vertices.iter().enumerate() {
            if sides[i] == 0 {
                section.push(u.clone());
            }
            if sides[i] != 1 {
                continue;
            }
            for (j, v) in self.vertices.iter().enumerate() {
                if sides[j] == -1 {
                    let t = h.line_parameter(u, v).expect("crossing segment");
                    section.push(u.lerp(v, &t));
                }
            }
        }
        let side_part = |s: i8| {
            let mut pts: Vec<Point> = self
                .vertices
                .iter()
                .zip(&sides)
                .filter(|(_, &x)| x == s)
                .map(|(p, _)| p.clone())
                .collect();
            pts.extend(section.iter().cloned());
            Polytope::new(pts).expect("nonempty cut")
        };
        Some(Cut {
            plus: side_part(1),
            minus: side_part(-1),
            section: Polytope::new(section).expect("nonempty section"),
        })
    }
}

/// The two closed halves of a polytope and the section by the cutting hyperplane.
#[derive(Clone, Debug)]
pub struct Cut {
    pub plus: Polytope,
    pub minus: Polytope,
    pub section: Polytope,
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
    }
}

impl Eq for Polytope {}

impl Hash for Polytope {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.vertices.hash(state)
    }
}

impl PartialOrd for Polytope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Polytope {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vertices.cmp(&other.vertices)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{int, rat};
    use crate::pt;

    fn square() -> Polytope {
        Polytope::new(vec![pt![0, 0], pt![1, 0], pt![1, 1], pt![0, 1], pt![(1, 2), (1, 2)]]).unwrap()
    }

    #[test]
    fn derived_fields() {
        let s = square();
        assert_eq!(s.vertices().len(), 4);
        assert_eq!(s.generators().len(), 5);
        assert_eq!(s.dim(), 2);
        assert!(!s.is_simplex());
        assert_eq!(s.vertex_barycenter(), pt![(1, 2), (1, 2)]);
        assert_eq!(s.facets().len(), 4);
        assert_eq!(s.volume().unwrap(), int(1));
    }

    #[test]
    fn cut_square_by_diagonal() {
        let h = Hyperplane::new(vec![int(1), int(-1)], int(0)).unwrap();
        let c = square().cut(&h).unwrap();
        assert!(c.plus.is_simplex() && c.minus.is_simplex());
        assert_eq!(c.section.vertices(), &[pt![0, 0], pt![1, 1]]);
        let h = Hyperplane::new(vec![int(1), int(0)], rat(1, 3)).unwrap();
        let c = square().cut(&h).unwrap();
        assert_eq!(c.plus.volume().unwrap() + c.minus.volume().unwrap(), int(1));
        // supporting line does not cut
        let h = Hyperplane::new(vec![int(1), int(0)], int(1)).unwrap();
        assert!(square().cut(&h).is_none());
    }
}
