//! Triangulations of polytopes and polyhedra: validity, cover checks,
//! starrings and common refinements.

mod io;
mod polyhedron;
mod polytope;
mod refine;
mod simplex;
mod star;

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Serialize;
use sha2::{Digest, Sha256};

pub use io::TriangulationFile;
pub use polyhedron::Polyhedron;
pub use polytope::{Cut, Polytope};
pub use refine::{common_refinement, restrict};
pub use simplex::{simplex_volume, Simplex};
pub(crate) use simplex::signed_volume;
pub use star::{canonical_triangulation, star_polytope};
pub(crate) use star::{canonical_cells, star_cells};

use crate::error::{Error, Result};
use crate::kernel::{affine_rank_of, bbox_disjoint, intersect_points, PointSet, Rational};

/// A finite set of `n`-simplices in `Q^N` with pairwise intersections of
/// dimension below `n` (checked by [`Triangulation::validate`]).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangulation {
    ambient: usize,
    dim: usize,
    simplices: BTreeSet<Simplex>,
}

impl Triangulation {
    /// Structural checks only: nonempty, common dimensions, no repeats.
    pub fn new(simplices: impl IntoIterator<Item = Simplex>) -> Result<Self> {
        let list: Vec<Simplex> = simplices.into_iter().collect();
        let first = list.first().ok_or(Error::Empty)?;
        let (ambient, dim) = (first.ambient(), first.dim());
        let mut set = BTreeSet::new();
        for s in list {
            if s.ambient() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: s.ambient(),
                });
            }
            if s.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: s.dim(),
                });
            }
            if !set.insert(s.clone()) {
                return Err(Error::Precondition(format!("duplicate simplex {s}")));
            }
        }
        Ok(Triangulation {
            ambient,
            dim,
            simplices: set,
        })
    }

    pub(crate) fn from_cells_unchecked(ambient: usize, dim: usize, cells: Vec<Simplex>) -> Self {
        Triangulation {
            ambient,
            dim,
            simplices: cells.into_iter().collect(),
        }
    }

    pub(crate) fn from_set(ambient: usize, dim: usize, simplices: BTreeSet<Simplex>) -> Self {
        Triangulation {
            ambient,
            dim,
            simplices,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn simplices(&self) -> &BTreeSet<Simplex> {
        &self.simplices
    }

    pub(crate) fn simplices_mut(&mut self) -> &mut BTreeSet<Simplex> {
        &mut self.simplices
    }

    pub fn into_simplices(self) -> BTreeSet<Simplex> {
        self.simplices
    }

    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.simplices.contains(s)
    }

    pub fn vertices(&self) -> PointSet {
        self.iter().flat_map(|s| s.vertices().iter().cloned()).collect()
    }

    /// Sum of determinant volumes; requires a full-dimensional triangulation.
    pub fn volume(&self) -> Result<Rational> {
        let mut v = Rational::zero();
        for s in &self.simplices {
            v += s.volume()?;
        }
        Ok(v)
    }

    /// SHA-256 of the canonical JSON form.
    pub fn digest(&self) -> String {
        let json = serde_json::to_vec(&TriangulationFile::from(self)).expect("serializable");
        hex::encode(Sha256::digest(&json))
    }

    pub fn validate(&self) -> ValidityReport {
        let cells: Vec<&Simplex> = self.simplices.iter().collect();
        let degenerate = cells
            .iter()
            .filter(|s| s.is_degenerate())
            .map(|s| (*s).clone())
            .collect();
        let mut offending = Vec::new();
        for (i, a) in cells.iter().enumerate() {
            for b in &cells[i + 1..] {
                if overlap_full(a, b, self.dim) {
                    offending.push(((*a).clone(), (*b).clone()));
                }
            }
        }
        ValidityReport {
            offending_pairs: offending,
            degenerate,
        }
    }
}

/// Whether two `n`-simplices meet in a set of dimension `n`.
pub fn overlap_full(a: &Simplex, b: &Simplex, n: usize) -> bool {
    if bbox_disjoint(a.vertices(), b.vertices()) {
        return false;
    }
    let common = intersect_points(a.vertices(), b.vertices());
    !common.is_empty() && affine_rank_of(&common).map_or(false, |r| r == n)
}

/// Result of [`Triangulation::validate`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidityReport {
    pub offending_pairs: Vec<(Simplex, Simplex)>,
    pub degenerate: Vec<Simplex>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.offending_pairs.is_empty() && self.degenerate.is_empty()
    }
}

pub fn validate(t: &Triangulation) -> ValidityReport {
    t.validate()
}

/// Whether a valid triangulation covers the full-dimensional polytope `p`:
/// every simplex lies in `p` and the volumes agree exactly.
pub fn validate_cover(t: &Triangulation, p: &Polytope) -> Result<bool> {
    if t.ambient() != p.ambient() {
        return Err(Error::DimensionMismatch {
            expected: p.ambient(),
            found: t.ambient(),
        });
    }
    if t.dim() != p.dim() || p.dim() != p.ambient() {
        return Ok(false);
    }
    let h = p.hrep();
    if !t.iter().all(|s| s.vertices().iter().all(|v| h.contains(v))) {
        return Ok(false);
    }
    Ok(t.volume()? == p.volume()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::Point;
    use crate::pt;

    fn tri(v: Vec<Point>) -> Simplex {
        Simplex::new(v).unwrap()
    }

    fn diagonal() -> Triangulation {
        Triangulation::new([
            tri(vec![pt![0, 0], pt![1, 0], pt![1, 1]]),
            tri(vec![pt![0, 0], pt![1, 1], pt![0, 1]]),
        ])
        .unwrap()
    }

    #[test]
    fn validity_examples() {
        assert!(diagonal().validate().is_valid());
        let nested = Triangulation::new([
            tri(vec![pt![0, 0], pt![2, 0], pt![0, 2]]),
            tri(vec![pt![0, 0], pt![1, 0], pt![0, 1]]),
        ])
        .unwrap();
        assert_eq!(nested.validate().offending_pairs.len(), 1);
        let single = Triangulation::new([tri(vec![pt![0, 0], pt![1, 0], pt![0, 1]])]).unwrap();
        assert!(single.validate().is_valid());
    }

    #[test]
    fn cover_examples() {
        let sq = Polytope::new(vec![pt![0, 0], pt![1, 0], pt![1, 1], pt![0, 1]]).unwrap();
        assert!(validate_cover(&diagonal(), &sq).unwrap());
        let one = Triangulation::new([tri(vec![pt![0, 0], pt![1, 0], pt![1, 1]])]).unwrap();
        assert!(!validate_cover(&one, &sq).unwrap());
        let star = star_polytope(&sq, &pt![(1, 2), (1, 2)]).unwrap();
        assert!(star.iter().all(|s| s.volume().unwrap() == crate::kernel::rat(1, 4)));
        assert!(validate_cover(&star, &sq).unwrap());
    }

    #[test]
    fn structural_errors() {
        assert!(Triangulation::new(Vec::<Simplex>::new()).is_err());
        let s = tri(vec![pt![0, 0], pt![1, 0], pt![0, 1]]);
        assert!(Triangulation::new([s.clone(), s]).is_err());
        assert!(Triangulation::new([
            tri(vec![pt![0, 0], pt![1, 0], pt![0, 1]]),
            tri(vec![pt![0, 0], pt![1, 0]]),
        ])
        .is_err());
    }

    #[test]
    fn order_insensitive_equality() {
        let a = diagonal();
        let b = Triangulation::new([
            tri(vec![pt![1, 1], pt![0, 1], pt![0, 0]]),
            tri(vec![pt![1, 1], pt![1, 0], pt![0, 0]]),
        ])
        .unwrap();
        assert_eq!(a, b);
        assert_eq!(a.digest(), b.digest());
    }
}
