use std::collections::BTreeMap;

use super::arrangement::{connect_any, merge_chain};
use super::lift::{in_chart, project_cells, project_simplex, singleton};
use super::Cells;
use crate::error::{Error, Result};
use crate::kernel::{Chart, Hyperplane, Membership, Point};
use crate::moves::{Move, MoveScript};
use crate::triangulation::{star_cells, Polytope, Simplex};

pub(crate) fn star_set(p: &Polytope, a: &Point) -> Cells {
    star_cells(p, a).into_iter().collect()
}

/// Connects two starrings of the full-dimensional `p` at the same point by
/// retriangulating their bases facet by facet.
pub(crate) fn same_apex(p: &Polytope, apex: &Point, from: &Cells, to: &Cells) -> Result<MoveScript> {
    let mut script = MoveScript::default();
    if from == to {
        return Ok(script);
    }
    let facets: Vec<Chart> = p
        .facets()
        .iter()
        .filter(|f| !f.spans(apex))
        .map(|f| Chart::of(f.vertices()))
        .collect::<Result<_>>()?;
    let group = |cells: &Cells| -> Result<BTreeMap<usize, Cells>> {
        let mut out: BTreeMap<usize, Cells> = BTreeMap::new();
        for s in cells {
            if !s.has_vertex(apex) {
                return Err(Error::Internal(format!("{s} does not contain the apex {apex}")));
            }
            let base = s.without(apex);
            let i = facets
                .iter()
                .position(|c| base.vertices().iter().all(|x| c.contains(x)))
                .ok_or_else(|| Error::Internal(format!("base {base} is not on the boundary")))?;
            out.entry(i).or_default().insert(base);
        }
        Ok(out)
    };
    let (gf, gt) = (group(from)?, group(to)?);
    for (i, bases) in &gf {
        let target = gt
            .get(i)
            .ok_or_else(|| Error::Internal("starrings cover different facets".into()))?;
        if bases != target {
            script.extend(connect_any(bases, target)?.cone(apex));
        }
    }
    Ok(script)
}

/// From a starring `alpha` of the full-dimensional simplex `t` at `a` to `{t}`.
pub(crate) fn lemma1(t: &Simplex, a: &Point, alpha: &Cells) -> Result<MoveScript> {
    if *alpha == singleton(t) {
        return Ok(MoveScript::default());
    }
    if t.dim() == 1 {
        return merge_chain(alpha);
    }
    let tp = Polytope::from_simplex(t);
    let mut script = same_apex(&tp, a, alpha, &star_set(&tp, a))?;
    match t.locate(a) {
        Membership::Outside => return Err(Error::Outside(a.to_string())),
        Membership::Boundary => {
            if t.has_vertex(a) {
                return Ok(script);
            }
            let s0 = t
                .facets()
                .into_iter()
                .filter(|f| f.contains_point(a))
                .min()
                .expect("boundary point lies on a facet");
            let v = t
                .vertices()
                .iter()
                .find(|x| !s0.has_vertex(x))
                .unwrap()
                .clone();
            let sub = star_set(&Polytope::from_simplex(&s0), a);
            script.extend(lemma1_any(&s0, a, &sub)?.cone(&v));
        }
        Membership::Interior => {
            let vs = t.vertices();
            let (u, v) = (&vs[0], &vs[1]);
            let mut through: Vec<Point> = vs[2..].to_vec();
            through.push(a.clone());
            let h = Hyperplane::through(&through)?;
            let w = u.lerp(v, &h.line_parameter(u, v).expect("u and v lie on opposite sides"));
            for f in t.facets() {
                if f.has_vertex(u) && f.has_vertex(v) {
                    script.push(Move::split(f.cone(a), u.clone(), v.clone(), w.clone()));
                }
            }
            let base = t.without(u).without(v);
            let plus = base.cone(u).cone(&w);
            let minus = base.cone(&w).cone(v);
            for half in [&plus, &minus] {
                let star = star_set(&Polytope::from_simplex(half), a);
                script.extend(lemma1(half, a, &star)?);
            }
            script.push(Move::merge(plus, minus));
        }
    }
    Ok(script)
}

pub(crate) fn lemma1_any(t: &Simplex, a: &Point, alpha: &Cells) -> Result<MoveScript> {
    if t.dim() == t.ambient() {
        return lemma1(t, a, alpha);
    }
    in_chart(&[alpha], &[a], |chart| {
        lemma1(&project_simplex(chart, t), &chart.project(a), &project_cells(chart, alpha))
    })
}
