use std::collections::{BTreeMap, HashMap};

use super::{GroupValue, Valuation};
use crate::error::{Error, Result};
use crate::kernel::{bbox_disjoint, intersect_points, Chart, Facets, Point};
use crate::moves::Move;
use crate::triangulation::{canonical_cells, Polyhedron, Polytope, Simplex, Triangulation};

/// Cells together with their facet halfspaces, for enumerating terms.
struct Arrangement<'c> {
    cells: &'c [Simplex],
    facets: Vec<Option<Facets>>,
}

impl<'c> Arrangement<'c> {
    fn new(cells: &'c [Simplex]) -> Self {
        Arrangement {
            cells,
            facets: cells.iter().map(|c| Facets::of(c.vertices())).collect(),
        }
    }

    fn meet(&self, r: &[Point], i: usize) -> Vec<Point> {
        let c = self.cells[i].vertices();
        match &self.facets[i] {
            Some(f) if !bbox_disjoint(r, c) => f.clip(r),
            Some(_) => Vec::new(),
            None => intersect_points(r, c),
        }
    }

    fn contains_all(&self, i: usize, r: &[Point]) -> bool {
        match &self.facets[i] {
            Some(f) => r.iter().all(|x| f.contains(x)),
            None => r.iter().all(|x| self.cells[i].contains_point(x)),
        }
    }

    /// Signed intersection polytopes of inclusion-exclusion over the cells,
    /// restricted to index sets that meet `0..roots`, as vertex lists with
    /// their accumulated coefficients.
    ///
    /// Index sets are enumerated in increasing order. When some later cell
    /// contains the running intersection `R`, adding or removing that cell
    /// pairs up the whole subtree into terms of opposite sign on the same
    /// `R`, so the subtree is skipped.
    fn terms(&self, roots: usize) -> BTreeMap<Vec<Point>, i64> {
        let mut out = BTreeMap::new();
        let all: Vec<usize> = (0..self.cells.len()).collect();
        for i in 0..roots.min(self.cells.len()) {
            self.visit(self.cells[i].vertices().to_vec(), &all[i + 1..], 1, &mut out);
        }
        out.retain(|_, k| *k != 0);
        out
    }

    /// `later` holds the cells after the last one taken that may still meet
    /// `r`: a cell missing some intersection misses every smaller one.
    fn visit(&self, r: Vec<Point>, later: &[usize], size: usize, out: &mut BTreeMap<Vec<Point>, i64>) {
        if later.iter().any(|&j| self.contains_all(j, &r)) {
            return;
        }
        let meets: Vec<(usize, Vec<Point>)> = later
            .iter()
            .map(|&j| (j, self.meet(&r, j)))
            .filter(|(_, m)| !m.is_empty())
            .collect();
        let hit: Vec<usize> = meets.iter().map(|(j, _)| *j).collect();
        for (k, (_, m)) in meets.into_iter().enumerate() {
            self.visit(m, &hit[k + 1..], size + 1, out);
        }
        let sign = if size % 2 == 1 { 1 } else { -1 };
        *out.entry(r).or_insert(0) += sign;
    }
}

fn terms(cells: &[Simplex], roots: usize) -> BTreeMap<Vec<Point>, i64> {
    Arrangement::new(cells).terms(roots)
}

/// Past this many memoized values an evaluator starts afresh.
const MEMO_LIMIT: usize = 200_000;

/// Values of one valuation on polytopes given by their vertices, memoized.
struct Evaluator<'a> {
    mu: &'a Valuation,
    memo: HashMap<Vec<Point>, GroupValue>,
}

impl<'a> Evaluator<'a> {
    fn new(mu: &'a Valuation) -> Self {
        Evaluator {
            mu,
            memo: HashMap::new(),
        }
    }

    /// `mu` on the polytope with vertex list `r`: directly on a simplex,
    /// otherwise by inclusion-exclusion over its canonical triangulation.
    fn polytope(&mut self, r: &[Point]) -> Result<GroupValue> {
        if let Some(v) = self.memo.get(r) {
            return Ok(v.clone());
        }
        let value = if Chart::of(r)?.dim() + 1 == r.len() {
            self.mu.evaluate(&Simplex::new(r.to_vec())?)?
        } else {
            let cells = canonical_cells(&Polytope::new(r.to_vec())?);
            self.sum(&cells, cells.len())?
        };
        self.memo.insert(r.to_vec(), value.clone());
        Ok(value)
    }

    fn sum(&mut self, cells: &[Simplex], roots: usize) -> Result<GroupValue> {
        let mut total = self.mu.zero();
        for (r, k) in terms(cells, roots) {
            total += &self.polytope(&r)?.times(k);
        }
        Ok(total)
    }
}

/// The inclusion-exclusion sum of `mu` over the cells of a triangulation.
pub fn extend_triangulation(mu: &Valuation, t: &Triangulation) -> Result<GroupValue> {
    if t.dim() > mu.max_dim() {
        return Err(Error::DimensionMismatch {
            expected: mu.max_dim(),
            found: t.dim(),
        });
    }
    let cells: Vec<Simplex> = t.iter().cloned().collect();
    Evaluator::new(mu).sum(&cells, cells.len())
}

/// `mu` extended to the polyhedron `q` by inclusion-exclusion over its
/// triangulation.
pub fn extend(mu: &Valuation, q: &Polyhedron) -> Result<GroupValue> {
    extend_triangulation(mu, &q.triangulation()?)
}

/// Compares the inclusion-exclusion sums before and after moves, for several
/// valuations at once.
///
/// Only index sets containing a moved cell can differ between the two sums;
/// the rest cancel exactly and are not evaluated.
pub struct InvarianceChecker<'a> {
    evaluators: Vec<Evaluator<'a>>,
}

impl<'a> InvarianceChecker<'a> {
    pub fn new(valuations: &'a [Valuation]) -> Self {
        InvarianceChecker {
            evaluators: valuations.iter().map(Evaluator::new).collect(),
        }
    }

    /// For each valuation, whether applying `m` to the cells `state` leaves
    /// the inclusion-exclusion sum unchanged.
    pub fn check<'s>(
        &mut self,
        state: impl IntoIterator<Item = &'s Simplex>,
        m: &Move,
    ) -> Result<Vec<bool>> {
        let (removed, added) = m.effect()?;
        let mut found = 0;
        let mut neighbors = Vec::new();
        for c in state {
            if removed.contains(c) {
                found += 1;
            } else if removed.iter().any(|r| !bbox_disjoint(r.vertices(), c.vertices())) {
                neighbors.push(c.clone());
            }
        }
        if found != removed.len() {
            return Err(Error::IllegalMove("move removes a simplex that is not present".into()));
        }
        let side = |moved: &[Simplex]| {
            let mut cells = moved.to_vec();
            cells.extend(neighbors.iter().cloned());
            terms(&cells, moved.len())
        };
        let (before, after) = (side(&removed), side(&added));
        let mut out = Vec::with_capacity(self.evaluators.len());
        for ev in &mut self.evaluators {
            if ev.memo.len() > MEMO_LIMIT {
                ev.memo.clear();
            }
            let mut diff = ev.mu.zero();
            for (r, k) in &before {
                diff += &ev.polytope(r)?.times(*k);
            }
            for (r, k) in &after {
                diff += &ev.polytope(r)?.times(-*k);
            }
            out.push(diff.is_zero());
        }
        Ok(out)
    }
}

/// Whether `m` leaves the inclusion-exclusion sum of `mu` over `t` unchanged.
pub fn check_move_invariance(mu: &Valuation, t: &Triangulation, m: &Move) -> Result<bool> {
    let mus = [mu.clone()];
    let mut checker = InvarianceChecker::new(&mus);
    Ok(checker.check(t.iter(), m)?[0])
}

#[cfg(test)]
mod tests {
    use super::super::{builtin_euler, builtin_mixed, builtin_moment, builtin_volume, builtins, squared_volume};
    use super::*;
    use crate::kernel::{int, rat, Rational};
    use crate::pt;
    use crate::triangulation::star_polytope;

    fn s(v: Vec<Point>) -> Simplex {
        Simplex::new(v).unwrap()
    }

    fn scalar(v: GroupValue) -> Rational {
        v.as_scalar().unwrap().clone()
    }

    fn square() -> Polytope {
        Polytope::new(vec![pt![0, 0], pt![1, 0], pt![1, 1], pt![0, 1]]).unwrap()
    }

    fn diagonal() -> Triangulation {
        Triangulation::new([
            s(vec![pt![0, 0], pt![1, 0], pt![1, 1]]),
            s(vec![pt![0, 0], pt![1, 1], pt![0, 1]]),
        ])
        .unwrap()
    }

    #[test]
    fn square_examples() {
        let t = diagonal();
        assert_eq!(scalar(extend_triangulation(&builtin_volume(2), &t).unwrap()), int(1));
        assert_eq!(scalar(extend_triangulation(&builtin_euler(2), &t).unwrap()), int(1));
        let star = star_polytope(&square(), &pt![(1, 2), (1, 2)]).unwrap();
        assert_eq!(scalar(extend_triangulation(&builtin_moment(2, 0), &star).unwrap()), rat(1, 2));
        assert_eq!(scalar(extend_triangulation(&builtin_moment(2, 0), &t).unwrap()), rat(1, 2));
        // area 1, extent 1, Euler characteristic 1
        assert_eq!(scalar(extend_triangulation(&builtin_mixed(2), &star).unwrap()), int(3));
    }

    #[test]
    fn euler_through_a_shared_vertex() {
        let a = square();
        let b = Polytope::new(vec![pt![1, 1], pt![2, 1], pt![2, 2], pt![1, 2]]).unwrap();
        let q = Polyhedron::new(vec![a, b]).unwrap();
        assert_eq!(scalar(extend(&builtin_euler(2), &q).unwrap()), int(1));
        assert_eq!(scalar(extend(&builtin_volume(2), &q).unwrap()), int(2));
    }

    #[test]
    fn lower_dimensional_polyhedron() {
        // a square lying in the plane z = 0 of 3-space
        let p = Polytope::new(vec![pt![0, 0, 0], pt![2, 0, 0], pt![2, 2, 0], pt![0, 2, 0]]).unwrap();
        let q = Polyhedron::new(vec![p]).unwrap();
        assert_eq!(scalar(extend(&builtin_volume(2), &q).unwrap()), int(4));
        assert_eq!(scalar(extend(&builtin_euler(2), &q).unwrap()), int(1));
        assert!(extend(&builtin_volume(1), &q).is_err());
    }

    #[test]
    fn split_invariance() {
        let t = diagonal();
        let m = Move::split(
            s(vec![pt![0, 0], pt![1, 0], pt![1, 1]]),
            pt![0, 0],
            pt![1, 1],
            pt![(1, 2), (1, 2)],
        );
        for mu in builtins(2) {
            assert!(check_move_invariance(&mu, &t, &m).unwrap(), "{}", mu.name());
        }
        assert!(!check_move_invariance(&squared_volume(2), &t, &m).unwrap());
        let unit = Triangulation::new([s(vec![pt![0, 0], pt![1, 0], pt![0, 1]])]).unwrap();
        let m = Move::split(
            s(vec![pt![0, 0], pt![1, 0], pt![0, 1]]),
            pt![1, 0],
            pt![0, 1],
            pt![(1, 2), (1, 2)],
        );
        assert!(check_move_invariance(&builtin_volume(2), &unit, &m).unwrap());
        let absent = Move::merge(
            s(vec![pt![0, 0], pt![1, 0], pt![(1, 2), (1, 2)]]),
            s(vec![pt![0, 0], pt![(1, 2), (1, 2)], pt![0, 1]]),
        );
        assert!(check_move_invariance(&builtin_volume(2), &unit, &absent).is_err());
    }

    #[test]
    fn pruning_matches_plain_enumeration() {
        // every index set of a star meets at the center
        let star = star_polytope(&square(), &pt![(1, 2), (1, 2)]).unwrap();
        let cells: Vec<Simplex> = star.iter().cloned().collect();
        let mut plain: BTreeMap<Vec<Point>, i64> = BTreeMap::new();
        for mask in 1u32..(1 << cells.len()) {
            let mut r: Option<Vec<Point>> = None;
            for (i, c) in cells.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    r = Some(match r {
                        None => c.vertices().to_vec(),
                        Some(r) => intersect_points(&r, c.vertices()),
                    });
                }
            }
            let r = r.unwrap();
            if !r.is_empty() {
                let sign = if mask.count_ones() % 2 == 1 { 1 } else { -1 };
                *plain.entry(r).or_insert(0) += sign;
            }
        }
        plain.retain(|_, k| *k != 0);
        assert_eq!(terms(&cells, cells.len()), plain);
    }
}
