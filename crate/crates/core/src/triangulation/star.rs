//! Starrings: triangulations in which every top simplex has a given point as a vertex.

use super::polytope::Polytope;
use super::simplex::Simplex;
use super::Triangulation;
use crate::error::{Error, Result};
use crate::kernel::Point;

/// Simplices of the starring of `p` at `a`: each facet not containing `a` is
/// triangulated canonically and coned to `a`. Assumes `a ∈ p`.
pub(crate) fn star_cells(p: &Polytope, a: &Point) -> Vec<Simplex> {
    match p.dim() {
        0 => vec![Simplex::new_unchecked(p.vertices().to_vec())],
        1 => {
            let (u, v) = (&p.vertices()[0], &p.vertices()[1]);
            if a == u || a == v {
                vec![Simplex::new_unchecked(vec![u.clone(), v.clone()])]
            } else {
                vec![
                    Simplex::new_unchecked(vec![u.clone(), a.clone()]),
                    Simplex::new_unchecked(vec![a.clone(), v.clone()]),
                ]
            }
        }
        _ => {
            let mut out = Vec::new();
            for f in p.facets() {
                if f.spans(a) {
                    continue;
                }
                out.extend(canonical_cells(&f).into_iter().map(|s| s.cone(a)));
            }
            out.sort();
            out
        }
    }
}

/// The canonical triangulation of a polytope: itself when it is a simplex,
/// otherwise its starring at the vertex barycenter.
pub(crate) fn canonical_cells(p: &Polytope) -> Vec<Simplex> {
    match p.as_simplex() {
        Some(s) => vec![s],
        None => star_cells(p, &p.vertex_barycenter()),
    }
}

/// A starring of `p` at `a ∈ p`, built by starring each facet not containing
/// `a` (at its vertex barycenter, facets that are simplices kept whole) and
/// coning to `a`.
pub fn star_polytope(p: &Polytope, a: &Point) -> Result<Triangulation> {
    a.check_dim(p.ambient())?;
    if p.dim() == 0 {
        return Err(Error::Precondition("cannot star a point".into()));
    }
    if !p.contains(a) {
        return Err(Error::Outside(a.to_string()));
    }
    Ok(Triangulation::from_cells_unchecked(
        p.ambient(),
        p.dim(),
        star_cells(p, a),
    ))
}

pub fn canonical_triangulation(p: &Polytope) -> Triangulation {
    Triangulation::from_cells_unchecked(p.ambient(), p.dim(), canonical_cells(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pt;

    fn square() -> Polytope {
        Polytope::new(vec![pt![0, 0], pt![1, 0], pt![1, 1], pt![0, 1]]).unwrap()
    }

    #[test]
    fn square_starrings() {
        let center = star_polytope(&square(), &pt![(1, 2), (1, 2)]).unwrap();
        assert_eq!(center.len(), 4);
        let corner = star_polytope(&square(), &pt![0, 0]).unwrap();
        assert_eq!(corner.len(), 2);
        for t in [&center, &corner] {
            assert!(t.validate().is_valid());
            assert!(super::super::validate_cover(t, &square()).unwrap());
        }
        assert!(corner.iter().all(|s| s.has_vertex(&pt![0, 0])));
        assert!(star_polytope(&square(), &pt![2, 0]).is_err());
    }

    #[test]
    fn triangle_at_barycenter() {
        let t = Polytope::new(vec![pt![0, 0], pt![1, 0], pt![0, 1]]).unwrap();
        let s = star_polytope(&t, &pt![(1, 3), (1, 3)]).unwrap();
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn cube_starring_at_edge_midpoint() {
        let mut v = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    v.push(pt![x, y, z]);
                }
            }
        }
        let cube = Polytope::new(v).unwrap();
        let a = pt![(1, 2), 0, 0];
        let s = star_polytope(&cube, &a).unwrap();
        // four faces avoid the edge, each starred at its center into 4 triangles
        assert_eq!(s.len(), 16);
        assert!(super::super::validate_cover(&s, &cube).unwrap());
    }
}
