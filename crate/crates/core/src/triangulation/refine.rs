use super::polytope::Polytope;
use super::simplex::Simplex;
use super::star::canonical_cells;
use super::Triangulation;
use crate::error::{Error, Result};
use crate::kernel::{affine_rank_of, intersect_points};

/// Every `n`-dimensional intersection of a simplex of `a` with a simplex of
/// `b`, triangulated canonically (simplices kept, other cells starred at
/// their vertex barycenter).
pub fn common_refinement(a: &Triangulation, b: &Triangulation) -> Result<Triangulation> {
    if a.ambient() != b.ambient() || a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    let n = a.dim();
    if n == a.ambient() && a.volume()? != b.volume()? {
        return Err(Error::Precondition(
            "triangulations cover different volumes".into(),
        ));
    }
    let mut cells = Vec::new();
    for s in a.iter() {
        for t in b.iter() {
            if s == t {
                cells.push(s.clone());
                continue;
            }
            let common = intersect_points(s.vertices(), t.vertices());
            if common.len() <= n || affine_rank_of(&common)? < n {
                continue;
            }
            cells.extend(canonical_cells(&Polytope::from_vertices(common)));
        }
    }
    let g = Triangulation::from_cells_unchecked(a.ambient(), n, cells);
    if n == a.ambient() && g.volume()? != a.volume()? {
        return Err(Error::Precondition(
            "triangulations do not cover the same set".into(),
        ));
    }
    Ok(g)
}

/// The simplices of `g` lying in `s`.
pub fn restrict(g: &Triangulation, s: &Simplex) -> Result<Triangulation> {
    let cells: Vec<Simplex> = g
        .iter()
        .filter(|c| c.vertices().iter().all(|v| s.contains_point(v)))
        .cloned()
        .collect();
    if cells.is_empty() {
        return Err(Error::Precondition(format!("no cell of the refinement lies in {s}")));
    }
    let r = Triangulation::from_cells_unchecked(g.ambient(), g.dim(), cells);
    if s.dim() == s.ambient() && r.volume()? != s.volume()? {
        return Err(Error::Precondition(format!("refinement does not cover {s}")));
    }
    Ok(r)
}
