//! Brute-force convex hull: facets by exhaustive subset search, vertices as
//! the points lying on facets whose normals span the space.

use std::collections::HashSet;

use num_traits::Signed;

use super::chart::Chart;
use super::linalg::rank;
use super::point::{Point, PointSet};
use super::predicates::Hyperplane;
use super::rational::Rational;
use crate::error::{Error, Result};

/// A facet of a full-dimensional polytope: the supporting hyperplane, the sign
/// of `hyperplane.eval` on the polytope's side, and the polytope's vertices on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub hyperplane: Hyperplane,
    pub inner_side: i8,
    pub vertices: PointSet,
}

impl Facet {
    /// Whether `p` lies in the closed halfspace containing the polytope.
    pub fn admits(&self, p: &Point) -> bool {
        let s = self.hyperplane.side(p);
        s == 0 || s == self.inner_side
    }
}

/// Calls `f` with every strictly increasing `k`-subset of `0..n`.
pub(crate) fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

struct RawFacet {
    hyperplane: Hyperplane,
    inner: i8,
    on: Vec<usize>,
}

fn cross(o: &Point, a: &Point, b: &Point) -> Rational {
    let (o, a, b) = (o.coords(), a.coords(), b.coords());
    (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
}

/// Monotone chain over distinct, full-dimensional planar points.
fn planar_hull(points: &[Point]) -> (Vec<RawFacet>, Vec<usize>) {
    let mut sorted: Vec<usize> = (0..points.len()).collect();
    sorted.sort_by(|&a, &b| points[a].cmp(&points[b]));
    let mut chain: Vec<usize> = Vec::with_capacity(2 * points.len());
    for pass in 0..2 {
        let start = chain.len();
        let order: Box<dyn Iterator<Item = &usize>> = if pass == 0 {
            Box::new(sorted.iter())
        } else {
            Box::new(sorted.iter().rev())
        };
        for &i in order {
            while chain.len() >= start + 2
                && !cross(&points[chain[chain.len() - 2]], &points[chain[chain.len() - 1]], &points[i])
                    .is_positive()
            {
                chain.pop();
            }
            chain.push(i);
        }
        chain.pop();
    }
    let k = chain.len();
    let mut facets = Vec::with_capacity(k);
    for j in 0..k {
        let (p, q) = (&points[chain[j]], &points[chain[(j + 1) % k]]);
        let (pc, qc) = (p.coords(), q.coords());
        let normal = vec![&qc[1] - &pc[1], &pc[0] - &qc[0]];
        let offset = &normal[0] * &pc[0] + &normal[1] * &pc[1];
        let h = Hyperplane::new(normal, offset).expect("distinct hull vertices");
        let other = &points[chain[(j + 2) % k]];
        let on = (0..points.len()).filter(|&i| h.contains(&points[i])).collect();
        facets.push(RawFacet {
            inner: h.side(other),
            hyperplane: h,
            on,
        });
    }
    let mut ext = chain;
    ext.sort();
    (facets, ext)
}

/// Facets of distinct points that are full-dimensional in their own space.
fn raw_facets(points: &[Point]) -> Vec<RawFacet> {
    let d = points[0].dim();
    if d == 1 {
        let (lo, _) = points.iter().enumerate().min_by(|a, b| a.1.cmp(b.1)).unwrap();
        let (hi, _) = points.iter().enumerate().max_by(|a, b| a.1.cmp(b.1)).unwrap();
        let at = |i: usize| {
            Hyperplane::new(vec![super::rational::one()], points[i].coords()[0].clone()).unwrap()
        };
        return vec![
            RawFacet { hyperplane: at(lo), inner: 1, on: vec![lo] },
            RawFacet { hyperplane: at(hi), inner: -1, on: vec![hi] },
        ];
    }
    let mut seen = HashSet::new();
    let mut facets = Vec::new();
    let mut subset = Vec::with_capacity(d);
    for_each_combination(points.len(), d, |idx| {
        subset.clear();
        subset.extend(idx.iter().map(|&i| points[i].clone()));
        let Ok(h) = Hyperplane::through(&subset) else {
            return;
        };
        if !seen.insert(h.clone()) {
            return;
        }
        let (mut pos, mut neg) = (false, false);
        let mut on = Vec::new();
        for (i, p) in points.iter().enumerate() {
            match h.side(p) {
                0 => on.push(i),
                1 => pos = true,
                _ => neg = true,
            }
            if pos && neg {
                return;
            }
        }
        facets.push(RawFacet {
            hyperplane: h,
            inner: if pos { 1 } else { -1 },
            on,
        });
    });
    facets
}

fn extreme_indices(points: &[Point], facets: &[RawFacet]) -> Vec<usize> {
    let d = points[0].dim();
    (0..points.len())
        .filter(|&i| {
            let normals: Vec<Vec<Rational>> = facets
                .iter()
                .filter(|f| f.on.contains(&i))
                .map(|f| f.hyperplane.normal().to_vec())
                .collect();
            normals.len() >= d && rank(normals) == d
        })
        .collect()
}

/// Hull of an arbitrary finite point set, described inside its affine hull.
#[derive(Clone, Debug)]
pub(crate) struct Hull {
    pub chart: Chart,
    /// Extreme points, sorted.
    pub vertices: Vec<Point>,
    /// Facets in chart coordinates with the original vertices lying on them.
    pub facets: Vec<(Hyperplane, i8, Vec<Point>)>,
}

pub(crate) fn hull(points: &[Point]) -> Result<Hull> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    let chart = Chart::of(&pts)?;
    if chart.dim() == 0 {
        return Ok(Hull {
            chart,
            vertices: pts,
            facets: Vec::new(),
        });
    }
    let proj: Vec<Point> = pts.iter().map(|p| chart.project(p)).collect();
    let (raw, ext) = if chart.dim() == 2 {
        planar_hull(&proj)
    } else {
        let raw = raw_facets(&proj);
        let ext = extreme_indices(&proj, &raw);
        (raw, ext)
    };
    let vertices: Vec<Point> = ext.iter().map(|&i| pts[i].clone()).collect();
    let facets = raw
        .into_iter()
        .map(|f| {
            let on: Vec<Point> = f
                .on
                .iter()
                .filter(|i| ext.contains(i))
                .map(|&i| pts[i].clone())
                .collect();
            (f.hyperplane, f.inner, on)
        })
        .collect();
    Ok(Hull {
        chart,
        vertices,
        facets,
    })
}

/// Points of `ps` not in the convex hull of the others.
pub fn extreme_points(ps: &PointSet) -> PointSet {
    if ps.is_empty() {
        return PointSet::empty();
    }
    match hull(ps.points()) {
        Ok(h) => PointSet::new(h.vertices),
        Err(_) => PointSet::empty(),
    }
}

/// Facets of a full-dimensional point set, each with its supporting hyperplane.
pub fn facet_enumeration(ps: &PointSet) -> Result<Vec<Facet>> {
    let n = ps.ambient().ok_or(Error::Empty)?;
    let h = hull(ps.points())?;
    if !h.chart.is_full() {
        return Err(Error::Span {
            expected: n,
            found: h.chart.dim(),
        });
    }
    // full-dimensional charts keep every coordinate, so chart hyperplanes are ambient ones
    let mut facets: Vec<Facet> = h
        .facets
        .into_iter()
        .map(|(hyperplane, inner_side, on)| Facet {
            hyperplane,
            inner_side,
            vertices: PointSet::new(on),
        })
        .collect();
    facets.sort_by(|a, b| a.hyperplane.cmp(&b.hyperplane));
    Ok(facets)
}

/// Vertex sets of the facets of `conv(points)` taken inside its affine hull.
pub fn facet_vertex_sets(points: &[Point]) -> Result<Vec<Vec<Point>>> {
    let h = hull(points)?;
    let mut sets: Vec<Vec<Point>> = h.facets.into_iter().map(|(_, _, on)| on).collect();
    sets.sort();
    Ok(sets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pt;

    fn set(v: Vec<Point>) -> PointSet {
        PointSet::new(v)
    }

    #[test]
    fn combinations_enumerated() {
        let mut all = Vec::new();
        for_each_combination(4, 2, |c| all.push(c.to_vec()));
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1]);
        assert_eq!(all[5], vec![2, 3]);
    }

    #[test]
    fn extreme_point_examples() {
        let e = extreme_points(&set(vec![pt![0, 0], pt![1, 0], pt![(1, 2), 0]]));
        assert_eq!(e, set(vec![pt![0, 0], pt![1, 0]]));
        let tri = set(vec![pt![0, 0], pt![1, 0], pt![0, 1]]);
        assert_eq!(extreme_points(&tri), tri);
        let e = extreme_points(&set(vec![pt![0, 0], pt![2, 0], pt![0, 2], pt![(1, 2), (1, 2)]]));
        assert_eq!(e, set(vec![pt![0, 0], pt![2, 0], pt![0, 2]]));
    }

    #[test]
    fn facet_counts() {
        let square = set(vec![pt![0, 0], pt![1, 0], pt![1, 1], pt![0, 1]]);
        assert_eq!(facet_enumeration(&square).unwrap().len(), 4);
        let tri = set(vec![pt![0, 0], pt![1, 0], pt![0, 1]]);
        assert_eq!(facet_enumeration(&tri).unwrap().len(), 3);
        let mut cube = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    cube.push(pt![x, y, z]);
                }
            }
        }
        let facets = facet_enumeration(&set(cube)).unwrap();
        assert_eq!(facets.len(), 6);
        assert!(facets.iter().all(|f| f.vertices.len() == 4));
        assert!(facet_enumeration(&set(vec![pt![0, 0], pt![1, 1]])).is_err());
    }

    #[test]
    fn lower_dimensional_facets() {
        // triangle embedded in 3-space has three edges as facets
        let sets = facet_vertex_sets(&[pt![1, 0, 0], pt![0, 1, 0], pt![0, 0, 1]]).unwrap();
        assert_eq!(sets.len(), 3);
        let sets = facet_vertex_sets(&[pt![0, 0], pt![2, 2], pt![1, 1]]).unwrap();
        assert_eq!(sets, vec![vec![pt![0, 0]], vec![pt![2, 2]]]);
    }
}
