use std::cmp::Reverse;

use num_traits::Zero;

use super::lift::{in_chart, project_cells, singleton};
use super::restar::lemma2;
use super::starring::{lemma1, same_apex, star_set};
use super::Cells;
use crate::error::{Error, Result};
use crate::kernel::{Hyperplane, Point, Rational};
use crate::moves::{invert, mergeable, Move, MoveScript};
use crate::triangulation::{common_refinement, Cut, Polytope, Simplex, Triangulation};

/// Merges a chain of segments subdividing one segment into that segment.
pub(crate) fn merge_chain(cells: &Cells) -> Result<MoveScript> {
    let mut script = MoveScript::default();
    let mut it = cells.iter();
    let Some(first) = it.next() else {
        return Ok(script);
    };
    let mut current = first.clone();
    for next in it {
        script.push(Move::merge(current.clone(), next.clone()));
        current = Simplex::new_unchecked(vec![
            current.vertices()[0].clone(),
            next.vertices()[1].clone(),
        ]);
    }
    Ok(script)
}

/// From `a` to `b`, two triangulations of the same full-dimensional set:
/// both are connected to their common refinement simplex by simplex.
pub(crate) fn connect(a: &Cells, b: &Cells) -> Result<MoveScript> {
    let mut script = MoveScript::default();
    if a == b {
        return Ok(script);
    }
    if let (Some((p, x)), Some((_, y))) = (starring(a)?, starring(b)?) {
        let mut script = same_apex(&p, &x, a, &star_set(&p, &x))?;
        script.extend(lemma2(&p, &x, &y)?);
        script.extend(same_apex(&p, &y, &star_set(&p, &y), b)?);
        return Ok(script);
    }
    let d = a.iter().next().ok_or(Error::Empty)?.dim();
    let ta = Triangulation::from_set(d, d, a.clone());
    let tb = Triangulation::from_set(d, d, b.clone());
    let g = common_refinement(&ta, &tb)?;
    let inside = |s: &Simplex| -> Cells {
        g.iter()
            .filter(|c| c.vertices().iter().all(|v| s.contains_point(v)))
            .cloned()
            .collect()
    };
    for s in a {
        let part = inside(s);
        if part != singleton(s) {
            script.extend(invert(&proposition(&part, s)?)?);
        }
    }
    for s in b {
        let part = inside(s);
        if part != singleton(s) {
            script.extend(proposition(&part, s)?);
        }
    }
    Ok(script)
}

pub(crate) fn connect_any(a: &Cells, b: &Cells) -> Result<MoveScript> {
    if a == b {
        return Ok(MoveScript::default());
    }
    let first = a.iter().next().ok_or(Error::Empty)?;
    if first.dim() == 0 {
        return Err(Error::Internal("distinct triangulations of a point".into()));
    }
    if first.dim() == first.ambient() {
        return connect(a, b);
    }
    in_chart(&[a, b], &[], |chart| connect(&project_cells(chart, a), &project_cells(chart, b)))
}

/// When every cell of `cells` has a common vertex and together they fill
/// their convex hull, that hull and the least common vertex.
fn starring(cells: &Cells) -> Result<Option<(Polytope, Point)>> {
    let mut it = cells.iter();
    let Some(first) = it.next() else {
        return Ok(None);
    };
    let mut common: Vec<Point> = first.vertices().to_vec();
    for s in it {
        common.retain(|v| s.has_vertex(v));
    }
    let Some(apex) = common.into_iter().next() else {
        return Ok(None);
    };
    let p = Polytope::new(super::lift::cell_vertices(&[cells]))?;
    let mut total = Rational::zero();
    for s in cells {
        total += s.volume()?;
    }
    Ok((p.volume()? == total).then_some((p, apex)))
}

/// Merges mergeable pairs of `cells` until none is left.
fn greedy_merges(cells: &Cells, script: &mut MoveScript) -> Cells {
    let mut cells = cells.clone();
    'outer: loop {
        for x in &cells {
            for y in cells.range(x..).skip(1) {
                if let Some((merged, _)) = mergeable(x, y) {
                    script.push(Move::merge(x.clone(), y.clone()));
                    let (x, y) = (x.clone(), y.clone());
                    cells.remove(&x);
                    cells.remove(&y);
                    cells.insert(merged);
                    continue 'outer;
                }
            }
        }
        return cells;
    }
}

/// From a triangulation `alpha` of the full-dimensional simplex `t` to `{t}`,
/// through the dissections of `t` and of each simplex of `alpha` by a
/// partition along hyperplanes spanned by facets of `alpha`.
pub(crate) fn proposition(alpha: &Cells, t: &Simplex) -> Result<MoveScript> {
    if *alpha == singleton(t) {
        return Ok(MoveScript::default());
    }
    if t.dim() == 1 {
        return merge_chain(alpha);
    }
    let mut script = MoveScript::default();
    let alpha = &greedy_merges(alpha, &mut script);
    if *alpha == singleton(t) {
        return Ok(script);
    }
    if let Some((_, a)) = starring(alpha)? {
        script.extend(lemma1(t, &a, alpha)?);
        return Ok(script);
    }
    let tv = t.vertices();
    let mut hyperplanes: Vec<Hyperplane> = alpha
        .iter()
        .flat_map(|s| s.facets())
        .map(|f| Hyperplane::through(f.vertices()))
        .collect::<Result<_>>()?;
    hyperplanes.sort();
    hyperplanes.dedup();
    hyperplanes.retain(|h| {
        let sides: Vec<i8> = tv.iter().map(|v| h.side(v)).collect();
        sides.contains(&1) && sides.contains(&-1)
    });
    let tree = Partition::build(&Polytope::from_simplex(t), &hyperplanes, alpha);
    let mut from = Vec::new();
    for s in alpha {
        let (moves, cells) = dissect(s, &tree)?;
        script.extend(moves);
        from.extend(cells);
    }
    let (moves, mut to) = dissect(t, &tree)?;
    from.sort_by(|x, y| x.0.vertices().cmp(y.0.vertices()));
    to.sort_by(|x, y| x.0.vertices().cmp(y.0.vertices()));
    if from.len() != to.len() {
        return Err(Error::Internal("dissections disagree".into()));
    }
    for ((p, a), (q, b)) in from.iter().zip(&to) {
        if p.vertices() != q.vertices() {
            return Err(Error::Internal("dissections disagree".into()));
        }
        script.extend(restar(p, a, b)?);
    }
    script.extend(invert(&moves)?);
    Ok(script)
}

/// A binary partition of a simplex by facet hyperplanes of a triangulation
/// of it, refined only until every region lies in one cell.
enum Partition {
    Leaf,
    Split {
        h: Hyperplane,
        plus: Box<Partition>,
        minus: Box<Partition>,
    },
}

impl Partition {
    fn build(p: &Polytope, hyperplanes: &[Hyperplane], alpha: &Cells) -> Partition {
        if alpha
            .iter()
            .any(|s| p.vertices().iter().all(|v| s.contains_point(v)))
        {
            return Partition::Leaf;
        }
        // prefer cuts through vertices of the region, where restarring is
        // cheap, then cuts splitting fewer cells
        let best = hyperplanes
            .iter()
            .filter_map(|h| p.cut(h).map(|cut| (h, cut)))
            .max_by_key(|(h, _)| {
                let on = p.vertices().iter().filter(|v| h.contains(v)).count();
                let split = alpha
                    .iter()
                    .filter(|s| {
                        let sides: Vec<i8> = s.vertices().iter().map(|v| h.side(v)).collect();
                        sides.contains(&1) && sides.contains(&-1)
                    })
                    .count();
                (on, Reverse(split), Reverse((*h).clone()))
            });
        if let Some((h, cut)) = best {
            let rest: Vec<Hyperplane> = hyperplanes.iter().filter(|g| *g != h).cloned().collect();
            return Partition::Split {
                h: h.clone(),
                plus: Box::new(Partition::build(&cut.plus, &rest, alpha)),
                minus: Box::new(Partition::build(&cut.minus, &rest, alpha)),
            };
        }
        Partition::Leaf
    }
}

/// A cell of a dissection together with the point its current triangulation
/// is starred at; `None` stands for a simplex cell left whole.
type Starred = (Polytope, Option<Point>);

fn cells_of(p: &Polytope, apex: &Option<Point>) -> Cells {
    match apex {
        Some(a) => star_set(p, a),
        None => star_set(p, &p.vertices()[0]),
    }
}

/// Between two triangulations of `p`, each whole or a starring.
fn restar(p: &Polytope, from: &Option<Point>, to: &Option<Point>) -> Result<MoveScript> {
    if cells_of(p, from) == cells_of(p, to) {
        return Ok(MoveScript::default());
    }
    match (from, to) {
        (Some(a), Some(b)) => lemma2(p, a, b),
        (Some(a), None) => lemma1(&p.as_simplex().expect("whole cells are simplices"), a, &star_set(p, a)),
        (None, Some(_)) => invert(&restar(p, to, from)?),
        (None, None) => Ok(MoveScript::default()),
    }
}

/// From `{s}` to a starring of every region `tree` cuts `s` into.
fn dissect(s: &Simplex, tree: &Partition) -> Result<(MoveScript, Vec<Starred>)> {
    fn walk(p: Polytope, apex: Option<Point>, node: &Partition, script: &mut MoveScript, out: &mut Vec<Starred>) -> Result<()> {
        let Partition::Split { h, plus, minus } = node else {
            out.push((p, apex));
            return Ok(());
        };
        match p.cut(h) {
            Some(cut) => {
                let b = match &apex {
                    Some(c) if h.contains(c) => c.clone(),
                    _ => p
                        .vertices()
                        .iter()
                        .find(|v| h.contains(v))
                        .cloned()
                        .unwrap_or_else(|| cut.section.vertex_barycenter()),
                };
                script.extend(cut_cell(&p, &apex, &cut, &b)?);
                walk(cut.plus, Some(b.clone()), plus, script, out)?;
                walk(cut.minus, Some(b), minus, script, out)
            }
            None => {
                let side = p.vertices().iter().map(|v| h.side(v)).find(|&x| x != 0).unwrap_or(1);
                walk(p, apex, if side > 0 { plus } else { minus }, script, out)
            }
        }
    }
    let mut script = MoveScript::default();
    let mut cells = Vec::new();
    walk(Polytope::from_simplex(s), None, tree, &mut script, &mut cells)?;
    Ok((script, cells))
}

/// Restars `p` at the point `b` of the section and splits the starring
/// along the cut.
fn cut_cell(p: &Polytope, apex: &Option<Point>, cut: &Cut, b: &Point) -> Result<MoveScript> {
    let mut script = restar(p, apex, &Some(b.clone()))?;
    let mut halves = star_set(&cut.plus, b);
    halves.extend(star_set(&cut.minus, b));
    script.extend(same_apex(p, b, &star_set(p, b), &halves)?);
    Ok(script)
}
