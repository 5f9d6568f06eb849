use num_traits::{One, Zero};

use super::arrangement::connect_any;
use super::starring::{lemma1, same_apex, star_set};
use super::Cells;
use crate::error::{Error, Result};
use crate::kernel::{Chart, Hyperplane, Point, Rational};
use crate::moves::{invert, Move, MoveScript};
use crate::triangulation::{canonical_cells, star_cells, Polytope, Simplex};

/// From the starring of the full-dimensional `p` at `a` to the one at `b`.
pub(crate) fn lemma2(p: &Polytope, a: &Point, b: &Point) -> Result<MoveScript> {
    if a == b {
        return Ok(MoveScript::default());
    }
    if let Some(t) = p.as_simplex() {
        let mut s = lemma1(&t, a, &star_set(p, a))?;
        s.extend(invert(&lemma1(&t, b, &star_set(p, b))?)?);
        return Ok(s);
    }
    let d = p.dim();
    for v in p.vertices().iter().rev() {
        if let Some(minus) = deletion(p, v) {
            if minus.contains(a) && minus.contains(b) {
                return via_vertex(p, v, &minus, a, b);
            }
        }
    }
    // no single vertex deletion keeps both points: pass through a point common
    // to two deletions
    let vs = p.vertices();
    for (i, v) in vs.iter().enumerate().rev() {
        let Some(mv) = deletion(p, v) else { continue };
        if !mv.contains(a) {
            continue;
        }
        for (j, w) in vs.iter().enumerate().rev() {
            if i == j {
                continue;
            }
            let Some(mw) = deletion(p, w) else { continue };
            if !mw.contains(b) {
                continue;
            }
            let common = crate::kernel::intersect_points(mv.vertices(), mw.vertices());
            if common.len() <= d || Chart::of(&common)?.dim() < d {
                continue;
            }
            let c = Point::barycenter(&common);
            let mut s = lemma2(p, a, &c)?;
            s.extend(lemma2(p, &c, b)?);
            return Ok(s);
        }
    }
    Err(Error::Internal("no vertex deletion available for restarring".into()))
}

fn deletion(p: &Polytope, v: &Point) -> Option<Polytope> {
    let rest: Vec<Point> = p.vertices().iter().filter(|x| *x != v).cloned().collect();
    let minus = Polytope::new(rest).ok()?;
    (minus.dim() == p.dim()).then_some(minus)
}

/// Facets of `minus` that `v` sees, with their hyperplanes.
fn visible_facets(minus: &Polytope, v: &Point) -> Result<Vec<(Polytope, Hyperplane)>> {
    let inside = minus.vertex_barycenter();
    let mut out = Vec::new();
    for g in minus.facets() {
        let h = Hyperplane::through(g.vertices())?;
        let sv = h.side(v);
        if sv != 0 && sv != h.side(&inside) {
            out.push((g, h));
        }
    }
    out.sort_by(|x, y| x.1.cmp(&y.1));
    Ok(out)
}

/// The triangulation a starring of a polytope at `a` induces on its facet `g`.
fn induced(g: &Polytope, a: &Point) -> Vec<Simplex> {
    if g.spans(a) {
        star_cells(g, a)
    } else {
        canonical_cells(g)
    }
}

fn via_vertex(p: &Polytope, v: &Point, minus: &Polytope, a: &Point, b: &Point) -> Result<MoveScript> {
    let mut s = vk_plus(p, v, minus, a)?;
    s.extend(lemma2(minus, a, b)?);
    for (g, _) in visible_facets(minus, v)? {
        let from: Cells = induced(&g, a).into_iter().collect();
        let to: Cells = induced(&g, b).into_iter().collect();
        if from != to {
            s.extend(connect_any(&from, &to)?.cone(v));
        }
    }
    s.extend(invert(&vk_plus(p, v, minus, b)?)?);
    Ok(s)
}

fn apply(cells: &mut Cells, script: &mut MoveScript, m: Move) -> Result<()> {
    m.apply_to(cells)
        .map_err(|e| Error::Internal(format!("sweep move failed: {e}")))?;
    script.push(m);
    Ok(())
}

fn bases_on(cells: &Cells, apex: &Point, h: &Hyperplane) -> Cells {
    cells
        .iter()
        .filter(|s| s.has_vertex(apex))
        .map(|s| s.without(apex))
        .filter(|b| b.vertices().iter().all(|x| h.contains(x)))
        .collect()
}

/// From the starring of `p` at `a` to the starring of `minus` at `a` together
/// with the pyramids from `v` over the facets of `minus` visible from `v`.
fn vk_plus(p: &Polytope, v: &Point, minus: &Polytope, a: &Point) -> Result<MoveScript> {
    let visible = visible_facets(minus, v)?;
    let mut cells: Cells = star_set(minus, a);
    for (g, _) in &visible {
        cells.extend(induced(g, a).into_iter().map(|s| s.cone(v)));
    }

    // cut points of the visible hyperplanes on [a, v], grouped by position
    let mut blocks: Vec<(Rational, Vec<&Hyperplane>)> = Vec::new();
    let mut params: Vec<(Rational, &Hyperplane)> = visible
        .iter()
        .map(|(_, h)| {
            let t = h.line_parameter(a, v).expect("v is strictly beyond");
            (t, h)
        })
        .collect();
    params.sort();
    for (t, h) in params {
        if t < Rational::zero() || t >= Rational::one() {
            return Err(Error::Internal(format!("cut parameter {t} outside [0, 1)")));
        }
        match blocks.last_mut() {
            Some((last, hs)) if *last == t => hs.push(h),
            _ => blocks.push((t, vec![h])),
        }
    }
    let points: Vec<Point> = blocks.iter().map(|(t, _)| a.lerp(v, t)).collect();

    let mut sweep = MoveScript::default();
    for (bi, (_, hs)) in blocks.iter().enumerate() {
        let x = &points[bi];
        let next = points.get(bi + 1).unwrap_or(v);
        if x != a {
            for h in hs {
                let from_v = bases_on(&cells, v, h);
                let from_a = bases_on(&cells, a, h);
                if from_v != from_a {
                    return Err(Error::Internal("sweep bases differ on the two sides".into()));
                }
                if from_v.is_empty() {
                    continue;
                }
                let f = Polytope::new(super::lift::cell_vertices(&[&from_v]))?;
                if !f.contains(x) {
                    return Err(Error::Internal(format!("cut point {x} is off its facet")));
                }
                let target: Cells = star_cells(&f, x).into_iter().collect();
                if target == from_v {
                    continue;
                }
                let s = connect_any(&from_v, &target)?;
                for apex in [a, v] {
                    for m in s.cone(apex).moves {
                        apply(&mut cells, &mut sweep, m)?;
                    }
                }
            }
        }
        let advancing: Vec<Simplex> = cells
            .iter()
            .filter(|s| s.has_vertex(v) && s.has_vertex(x))
            .cloned()
            .collect();
        for s in advancing {
            let base = s.without(x).without(v);
            if next != v {
                apply(&mut cells, &mut sweep, Move::split(s, x.clone(), v.clone(), next.clone()))?;
                if x != a {
                    let m = Move::merge(base.cone(a).cone(x), base.cone(x).cone(next));
                    apply(&mut cells, &mut sweep, m)?;
                }
            } else if x != a {
                let m = Move::merge(base.cone(a).cone(x), base.cone(x).cone(v));
                apply(&mut cells, &mut sweep, m)?;
            }
        }
    }
    if let Some(s) = cells.iter().find(|s| !s.has_vertex(a)) {
        return Err(Error::Internal(format!("sweep left {s} without {a}")));
    }
    let mut script = same_apex(p, a, &star_set(p, a), &cells)?;
    script.extend(invert(&sweep)?);
    Ok(script)
}
