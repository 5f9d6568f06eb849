use super::polytope::Polytope;
use super::simplex::Simplex;
use super::star::canonical_cells;
use super::Triangulation;
use crate::error::{Error, Result};
use crate::kernel::{affine_rank_of, Chart, HRep, Point};

/// A finite union of polytopes of one dimension.
#[derive(Clone, Debug)]
pub struct Polyhedron {
    pieces: Vec<Polytope>,
    cached: Option<Triangulation>,
}

impl Polyhedron {
    pub fn new(pieces: Vec<Polytope>) -> Result<Self> {
        let first = pieces.first().ok_or(Error::Empty)?;
        let (ambient, dim) = (first.ambient(), first.dim());
        for p in &pieces {
            if p.ambient() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: p.ambient(),
                });
            }
            if p.dim() != dim {
                return Err(Error::Unsupported(
                    "polyhedron pieces must share one dimension".into(),
                ));
            }
        }
        Ok(Polyhedron {
            pieces,
            cached: None,
        })
    }

    pub fn from_triangulation(t: &Triangulation) -> Self {
        Polyhedron {
            pieces: t.iter().map(Polytope::from_simplex).collect(),
            cached: Some(t.clone()),
        }
    }

    pub fn pieces(&self) -> &[Polytope] {
        &self.pieces
    }

    pub fn dim(&self) -> usize {
        self.pieces[0].dim()
    }

    pub fn ambient(&self) -> usize {
        self.pieces[0].ambient()
    }

    /// A triangulation of the union. Overlapping pieces are made disjoint by
    /// subtracting earlier cells, each remaining convex part triangulated
    /// canonically.
    pub fn triangulation(&self) -> Result<Triangulation> {
        if let Some(t) = &self.cached {
            return Ok(t.clone());
        }
        self.normalize()
    }

    /// Computes and stores the triangulation.
    pub fn normalized(mut self) -> Result<Self> {
        self.cached = Some(self.normalize()?);
        Ok(self)
    }

    fn normalize(&self) -> Result<Triangulation> {
        let n = self.dim();
        if n == 0 {
            return Err(Error::Unsupported("polyhedron of dimension 0".into()));
        }
        let all: Vec<Point> = self
            .pieces
            .iter()
            .flat_map(|p| p.vertices().iter().cloned())
            .collect();
        let chart = Chart::of(&all)?;
        if chart.dim() != n {
            // pieces in different affine hulls meet in lower dimension or not at all
            let cells = self.pieces.iter().flat_map(canonical_cells).collect();
            let t = Triangulation::from_cells_unchecked(self.ambient(), n, cells);
            if !t.validate().is_valid() {
                return Err(Error::Unsupported(
                    "overlapping pieces in different affine hulls".into(),
                ));
            }
            return Ok(t);
        }
        let mut cells: Vec<Vec<Point>> = Vec::new();
        for piece in &self.pieces {
            let local: Vec<Point> = piece.vertices().iter().map(|v| chart.project(v)).collect();
            let mut parts = vec![local];
            for c in &cells {
                parts = parts
                    .into_iter()
                    .flat_map(|r| difference(&r, c, n))
                    .collect();
            }
            for r in parts {
                let p = Polytope::from_vertices(sorted_hull(r)?);
                cells.extend(canonical_cells(&p).into_iter().map(|s| s.vertices().to_vec()));
            }
        }
        let lifted = cells
            .into_iter()
            .map(|c| Simplex::new_unchecked(c.iter().map(|y| chart.lift(y)).collect()))
            .collect();
        Ok(Triangulation::from_cells_unchecked(self.ambient(), n, lifted))
    }
}

fn sorted_hull(points: Vec<Point>) -> Result<Vec<Point>> {
    Ok(crate::kernel::hull(&points)?.vertices)
}

/// Full-dimensional closed convex parts of `conv(r) \ int conv(c)`.
fn difference(r: &[Point], c: &[Point], n: usize) -> Vec<Vec<Point>> {
    let common = crate::kernel::intersect_points(r, c);
    if common.len() <= n || affine_rank_of(&common).unwrap_or(0) < n {
        return vec![r.to_vec()];
    }
    let (Ok(hr), Ok(hc)) = (HRep::of(r), HRep::of(c)) else {
        return vec![r.to_vec()];
    };
    let mut out = Vec::new();
    let mut acc = hr;
    for (a, b) in &hc.ineqs {
        let mut part = acc.clone();
        let neg: Vec<_> = a.iter().map(|x| -x).collect();
        part.ineqs.push((neg, -b));
        let verts = part.vertices(n);
        if verts.len() > n && affine_rank_of(&verts).unwrap_or(0) == n {
            out.push(verts);
        }
        acc.ineqs.push((a.clone(), b.clone()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{int, rat};
    use crate::pt;

    #[test]
    fn overlapping_squares() {
        let a = Polytope::new(vec![pt![0, 0], pt![2, 0], pt![2, 2], pt![0, 2]]).unwrap();
        let b = Polytope::new(vec![pt![1, 1], pt![3, 1], pt![3, 3], pt![1, 3]]).unwrap();
        let q = Polyhedron::new(vec![a, b]).unwrap();
        let t = q.triangulation().unwrap();
        assert!(t.validate().is_valid());
        assert_eq!(t.volume().unwrap(), int(7));
    }

    #[test]
    fn disjoint_and_nested() {
        let a = Polytope::new(vec![pt![0, 0], pt![1, 0], pt![0, 1]]).unwrap();
        let b = Polytope::new(vec![pt![(1, 4), (1, 4)], pt![(1, 2), (1, 4)], pt![(1, 4), (1, 2)]]).unwrap();
        let t = Polyhedron::new(vec![a, b]).unwrap().triangulation().unwrap();
        assert_eq!(t.volume().unwrap(), rat(1, 2));
        assert!(t.validate().is_valid());
    }

    #[test]
    fn planar_pieces_in_space() {
        let a = Polytope::new(vec![pt![0, 0, 1], pt![2, 0, 1], pt![0, 2, 1]]).unwrap();
        let b = Polytope::new(vec![pt![1, 0, 1], pt![2, 0, 1], pt![2, 2, 1]]).unwrap();
        let t = Polyhedron::new(vec![a, b]).unwrap().triangulation().unwrap();
        assert!(t.validate().is_valid());
        assert_eq!(t.dim(), 2);
    }
}
