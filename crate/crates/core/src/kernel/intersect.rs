//! H-representations and brute-force vertex enumeration.

use std::cmp::Ordering;

use dashu_int::ops::Gcd;
use dashu_int::{IBig, UBig};
use num_traits::Zero;

use super::hull::{for_each_combination, hull};
use super::linalg::{dot, null_space, rref, solve};
use super::point::{Point, PointSet};
use super::rational::Rational;
use crate::error::Result;

type Constraint = (Vec<Rational>, Rational);

/// `eqs`: `a . x = b`; `ineqs`: `a . x <= b`.
#[derive(Clone, Debug, Default)]
pub struct HRep {
    pub eqs: Vec<Constraint>,
    pub ineqs: Vec<Constraint>,
}

impl HRep {
    pub fn of(points: &[Point]) -> Result<HRep> {
        let h = hull(points)?;
        let n = h.chart.ambient();
        let d = h.chart.dim();
        let origin = h.chart.origin().clone();
        let eqs = if d == n {
            Vec::new()
        } else if d == 0 {
            (0..n)
                .map(|i| {
                    let mut a = vec![Rational::zero(); n];
                    a[i] = super::rational::one();
                    (a, origin.coords()[i].clone())
                })
                .collect()
        } else {
            null_space(h.chart.directions().to_vec(), n)
                .into_iter()
                .map(|a| {
                    let b = dot(&a, origin.coords());
                    (a, b)
                })
                .collect()
        };
        let pivots = h.chart.pivots().to_vec();
        let ineqs = h
            .facets
            .iter()
            .map(|(hp, inner, _)| {
                // inner * (c . y - o) >= 0  <=>  (-inner c) . y <= -inner o
                let s = Rational::from(-*inner as i64);
                let mut a = vec![Rational::zero(); n];
                for (c, &p) in hp.normal().iter().zip(&pivots) {
                    a[p] = c * &s;
                }
                (a, hp.offset() * &s)
            })
            .collect();
        Ok(HRep { eqs, ineqs })
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eqs.iter().all(|(a, b)| &dot(a, p.coords()) == b)
            && self.ineqs.iter().all(|(a, b)| &dot(a, p.coords()) <= b)
    }

    pub fn extend(&mut self, other: HRep) {
        self.eqs.extend(other.eqs);
        self.ineqs.extend(other.ineqs);
    }

    /// Vertices of the (bounded) polyhedron, by solving every square subsystem.
    pub fn vertices(&self, n: usize) -> Vec<Point> {
        let mut ineqs = self.ineqs.clone();
        ineqs.sort();
        ineqs.dedup();
        let eq_rows: Vec<Vec<Rational>> = self
            .eqs
            .iter()
            .map(|(a, b)| {
                let mut r = a.clone();
                r.push(b.clone());
                r
            })
            .collect();
        let (reduced, pivots) = if eq_rows.is_empty() {
            (Vec::new(), Vec::new())
        } else {
            rref(eq_rows)
        };
        if pivots.contains(&n) {
            return Vec::new(); // inconsistent equalities
        }
        let eqs: Vec<Constraint> = reduced
            .into_iter()
            .map(|mut r| {
                let b = r.pop().unwrap();
                (r, b)
            })
            .collect();
        let need = n - eqs.len();
        let mut out = Vec::new();
        for_each_combination(ineqs.len(), need, |idx| {
            let (mut a, mut b): (Vec<_>, Vec<_>) = eqs.iter().cloned().unzip();
            for &i in idx {
                a.push(ineqs[i].0.clone());
                b.push(ineqs[i].1.clone());
            }
            if let Some(x) = solve(a, b) {
                let p = Point::new(x);
                if ineqs.iter().all(|(a, b)| &dot(a, p.coords()) <= b) {
                    out.push(p);
                }
            }
        });
        out.sort();
        out.dedup();
        out
    }
}

pub(crate) fn bbox_disjoint(a: &[Point], b: &[Point]) -> bool {
    let n = a[0].dim();
    (0..n).any(|i| {
        let amin = a.iter().map(|p| &p.coords()[i]).min().unwrap();
        let amax = a.iter().map(|p| &p.coords()[i]).max().unwrap();
        let bmin = b.iter().map(|p| &p.coords()[i]).min().unwrap();
        let bmax = b.iter().map(|p| &p.coords()[i]).max().unwrap();
        amax < bmin || bmax < amin
    })
}

/// Vertices of `conv(a) ∩ conv(b)`; empty when the hulls are disjoint.
pub fn polytope_intersection(a: &PointSet, b: &PointSet) -> PointSet {
    if a.is_empty() || b.is_empty() {
        return PointSet::empty();
    }
    PointSet::new(intersect_points(a.points(), b.points()))
}

pub(crate) fn intersect_points(a: &[Point], b: &[Point]) -> Vec<Point> {
    let n = a[0].dim();
    if b[0].dim() != n || bbox_disjoint(a, b) {
        return Vec::new();
    }
    if let Some(hs) = simplex_halfspaces(b) {
        return clip(a, &hs);
    }
    if let Some(hs) = simplex_halfspaces(a) {
        return clip(b, &hs);
    }
    by_vertex_enumeration(a, b)
}

fn by_vertex_enumeration(a: &[Point], b: &[Point]) -> Vec<Point> {
    let n = a[0].dim();
    let (Ok(mut h), Ok(hb)) = (HRep::of(a), HRep::of(b)) else {
        return Vec::new();
    };
    h.extend(hb);
    let verts = h.vertices(n);
    if verts.len() <= 1 {
        return verts;
    }
    hull(&verts).map(|h| h.vertices).unwrap_or_default()
}

/// `a . x <= b` for the facets of a full-dimensional simplex, or `None` when
/// the points are not one.
fn simplex_halfspaces(s: &[Point]) -> Option<Vec<Constraint>> {
    let n = s[0].dim();
    if s.len() != n + 1 {
        return None;
    }
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let base = if i == 0 { &s[1] } else { &s[0] };
        let dirs: Vec<Vec<Rational>> = s
            .iter()
            .enumerate()
            .filter(|&(j, p)| j != i && !std::ptr::eq(p, base))
            .map(|(_, p)| p.sub(base))
            .collect();
        let normal = match n {
            1 => vec![super::rational::one()],
            2 => vec![-dirs[0][1].clone(), dirs[0][0].clone()],
            3 => {
                let (u, v) = (&dirs[0], &dirs[1]);
                vec![
                    &u[1] * &v[2] - &u[2] * &v[1],
                    &u[2] * &v[0] - &u[0] * &v[2],
                    &u[0] * &v[1] - &u[1] * &v[0],
                ]
            }
            _ => null_space(dirs, n).into_iter().next()?,
        };
        let offset = dot(&normal, base.coords());
        let at = dot(&normal, s[i].coords());
        if at == offset {
            return None;
        }
        // orient so the opposite vertex satisfies the inequality
        out.push(if at < offset { (normal, offset) } else { (normal.iter().map(|x| -x).collect(), -offset) });
    }
    Some(out)
}

/// `a . x <= b` with the coefficients scaled to integers, so a point can be
/// classified without reducing fractions.
struct Scaled {
    a: Vec<IBig>,
    b: IBig,
}

impl Scaled {
    fn of((a, b): &Constraint) -> Scaled {
        let mut l = UBig::ONE;
        for x in a.iter().chain([b]) {
            let d = x.denominator();
            l = &l / (&l).gcd(d) * d;
        }
        let l = IBig::from(l);
        let scale = |x: &Rational| x.numerator() * (&l / IBig::from(x.denominator().clone()));
        Scaled {
            a: a.iter().map(scale).collect(),
            b: scale(b),
        }
    }

    /// How `a . p` compares with `b`.
    fn side(&self, p: &Point) -> Ordering {
        let mut num = IBig::ZERO;
        let mut den = IBig::ONE;
        for (a, x) in self.a.iter().zip(p.coords()) {
            if a.is_zero() {
                continue;
            }
            let d = IBig::from(x.denominator().clone());
            num = num * &d + a * x.numerator() * &den;
            den *= d;
        }
        num.cmp(&(&self.b * den))
    }
}

/// A full-dimensional simplex as its facet halfspaces, for repeated
/// membership tests and intersections.
pub(crate) struct Facets {
    exact: Vec<Constraint>,
    scaled: Vec<Scaled>,
}

impl Facets {
    pub(crate) fn of(s: &[Point]) -> Option<Facets> {
        let exact = simplex_halfspaces(s)?;
        let scaled = exact.iter().map(Scaled::of).collect();
        Some(Facets { exact, scaled })
    }

    pub(crate) fn contains(&self, p: &Point) -> bool {
        self.scaled.iter().all(|h| h.side(p) != Ordering::Greater)
    }

    /// Vertices of `conv(points)` intersected with the simplex.
    pub(crate) fn clip(&self, points: &[Point]) -> Vec<Point> {
        clip_scaled(points, &self.exact, &self.scaled)
    }
}

/// Vertices of `conv(points)` cut down by each halfspace in turn.
fn clip(points: &[Point], halfspaces: &[Constraint]) -> Vec<Point> {
    let scaled: Vec<Scaled> = halfspaces.iter().map(Scaled::of).collect();
    clip_scaled(points, halfspaces, &scaled)
}

fn clip_scaled(points: &[Point], halfspaces: &[Constraint], scaled: &[Scaled]) -> Vec<Point> {
    let mut cur = points.to_vec();
    for (h, scaled) in halfspaces.iter().zip(scaled) {
        if cur.is_empty() {
            return cur;
        }
        let sides: Vec<Ordering> = cur.iter().map(|p| scaled.side(p)).collect();
        if sides.iter().all(|o| *o != Ordering::Greater) {
            continue;
        }
        let (a, b) = h;
        let vals: Vec<Option<Rational>> = cur
            .iter()
            .zip(&sides)
            .map(|(p, o)| (*o != Ordering::Equal).then(|| dot(a, p.coords())))
            .collect();
        let mut next: Vec<Point> = cur
            .iter()
            .zip(&sides)
            .filter(|(_, o)| **o != Ordering::Greater)
            .map(|(p, _)| p.clone())
            .collect();
        for (u, fu) in cur.iter().zip(&vals).filter(|(_, f)| f.as_ref().is_some_and(|f| f < b)) {
            let fu = fu.as_ref().unwrap();
            for (v, fv) in cur.iter().zip(&vals).filter(|(_, f)| f.as_ref().is_some_and(|f| f > b)) {
                let fv = fv.as_ref().unwrap();
                next.push(u.lerp(v, &((b - fu) / (fv - fu))));
            }
        }
        if next.len() <= 1 {
            cur = next;
            continue;
        }
        cur = match hull(&next) {
            Ok(h) => h.vertices,
            Err(_) => return Vec::new(),
        };
    }
    if cur.len() <= 1 {
        return cur;
    }
    hull(&cur).map(|h| h.vertices).unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pt;

    fn set(v: Vec<Point>) -> PointSet {
        PointSet::new(v)
    }

    #[test]
    fn triangle_pair() {
        let t1 = set(vec![pt![0, 0], pt![1, 0], pt![1, 1]]);
        let u1 = set(vec![pt![0, 0], pt![1, 0], pt![0, 1]]);
        let r = polytope_intersection(&t1, &u1);
        assert_eq!(r, set(vec![pt![0, 0], pt![1, 0], pt![(1, 2), (1, 2)]]));
        assert_eq!(polytope_intersection(&u1, &t1), r);
    }

    #[test]
    fn idempotent_and_disjoint() {
        let sq = set(vec![pt![0, 0], pt![1, 0], pt![1, 1], pt![0, 1]]);
        assert_eq!(polytope_intersection(&sq, &sq), sq);
        let a = set(vec![pt![0, 0], pt![1, 0]]);
        let b = set(vec![pt![2, 0], pt![3, 0]]);
        assert!(polytope_intersection(&a, &b).is_empty());
    }

    #[test]
    fn lower_dimensional_operands() {
        let seg = set(vec![pt![-1, (1, 2)], pt![2, (1, 2)]]);
        let sq = set(vec![pt![0, 0], pt![1, 0], pt![1, 1], pt![0, 1]]);
        let r = polytope_intersection(&seg, &sq);
        assert_eq!(r, set(vec![pt![0, (1, 2)], pt![1, (1, 2)]]));
        // touching triangles meet in an edge
        let t1 = set(vec![pt![0, 0], pt![1, 0], pt![0, 1]]);
        let t2 = set(vec![pt![1, 0], pt![0, 1], pt![1, 1]]);
        assert_eq!(polytope_intersection(&t1, &t2), set(vec![pt![1, 0], pt![0, 1]]));
        let p = set(vec![pt![(1, 2), (1, 2)]]);
        assert_eq!(polytope_intersection(&p, &t1), p);
    }

    #[test]
    fn clipping_matches_vertex_enumeration() {
        // a small deterministic generator keeps this free of dev-dependencies
        let mut state = 0x2545_f491_4f6c_dd1du64;
        let mut next = |m: u64| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % m) as i64
        };
        for (n, rounds) in [(2usize, 300), (3, 60)] {
            for _ in 0..rounds {
                let k = 2 + next(4) as usize;
                let mut random = |k: usize| -> Vec<Point> {
                    (0..k)
                        .map(|_| Point::new((0..n).map(|_| crate::kernel::rat(next(9) as i64 - 2, 1 + next(2))).collect()))
                        .collect()
                };
                let s = random(n + 1);
                let other = random(k);
                let Ok(h) = hull(&other) else { continue };
                let o = h.vertices;
                if simplex_halfspaces(&s).is_none() || o.is_empty() {
                    continue;
                }
                let mut s_sorted = s.clone();
                s_sorted.sort();
                assert_eq!(intersect_points(&o, &s_sorted), by_vertex_enumeration(&o, &s_sorted), "{o:?} {s:?}");
                assert_eq!(intersect_points(&s_sorted, &o), by_vertex_enumeration(&s_sorted, &o));
            }
        }
    }
}
