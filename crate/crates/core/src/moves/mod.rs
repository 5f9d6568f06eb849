//! Elementary moves: splitting a simplex through a codimension-2 face and
//! merging two simplices whose union is a simplex.

mod oracle;
mod script;

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use oracle::bfs_oracle;
pub use script::{invert, replay, replay_with, MoveScript, ReplayOptions};

use crate::error::{Error, Result};
use crate::kernel::{Point, Rational};
use crate::triangulation::{Simplex, Triangulation};

/// One elementary move, addressing simplices by value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum Move {
    /// Replace `target` by `[B,u,w]` and `[B,w,v]`, `B` the vertices other than `u, v`.
    Split {
        target: Simplex,
        u: Point,
        v: Point,
        w: Point,
    },
    /// Replace two simplices by their union, which must be a simplex.
    Merge { first: Simplex, second: Simplex },
}

impl Move {
    pub fn split(target: Simplex, u: Point, v: Point, w: Point) -> Move {
        Move::Split { target, u, v, w }
    }

    pub fn merge(first: Simplex, second: Simplex) -> Move {
        Move::Merge { first, second }
    }

    /// Simplices removed and added by the move, after checking legality of
    /// the move in isolation.
    pub fn effect(&self) -> Result<(Vec<Simplex>, Vec<Simplex>)> {
        match self {
            Move::Split { target, u, v, w } => {
                let (a, b) = split_simplex(target, u, v, w)?;
                Ok((vec![target.clone()], vec![a, b]))
            }
            Move::Merge { first, second } => {
                let (m, _) = mergeable(first, second).ok_or_else(|| {
                    Error::IllegalMove(format!("{first} and {second} are not mergeable"))
                })?;
                Ok((vec![first.clone(), second.clone()], vec![m]))
            }
        }
    }

    /// The move undoing this one.
    pub fn inverse(&self) -> Result<Move> {
        match self {
            Move::Split { target, u, v, w } => {
                let (a, b) = split_simplex(target, u, v, w)?;
                Ok(Move::Merge {
                    first: a,
                    second: b,
                })
            }
            Move::Merge { first, second } => {
                let m = merge_parts(first, second).ok_or_else(|| {
                    Error::IllegalMove(format!("{first} and {second} are not mergeable"))
                })?;
                Ok(Move::Split {
                    target: m.merged,
                    u: m.u,
                    v: m.v,
                    w: m.hinge,
                })
            }
        }
    }

    /// Every simplex mentioned by the move gains `apex` as a vertex.
    pub fn cone(&self, apex: &Point) -> Move {
        match self {
            Move::Split { target, u, v, w } => Move::Split {
                target: target.cone(apex),
                u: u.clone(),
                v: v.clone(),
                w: w.clone(),
            },
            Move::Merge { first, second } => Move::Merge {
                first: first.cone(apex),
                second: second.cone(apex),
            },
        }
    }

    /// Applies every point map to the move's points.
    pub fn map_points(&self, f: &impl Fn(&Point) -> Point) -> Move {
        let ms = |s: &Simplex| Simplex::new_unchecked(s.vertices().iter().map(f).collect());
        match self {
            Move::Split { target, u, v, w } => Move::Split {
                target: ms(target),
                u: f(u),
                v: f(v),
                w: f(w),
            },
            Move::Merge { first, second } => Move::Merge {
                first: ms(first),
                second: ms(second),
            },
        }
    }

    /// Applies the move to a simplex set without any check beyond presence.
    pub(crate) fn apply_to(&self, cells: &mut BTreeSet<Simplex>) -> Result<()> {
        let (removed, added) = self.effect()?;
        for r in &removed {
            if !cells.remove(r) {
                return Err(Error::IllegalMove(format!("{r} is not in the triangulation")));
            }
        }
        for a in added {
            if !cells.insert(a) {
                return Err(Error::IllegalMove("move creates a duplicate simplex".into()));
            }
        }
        Ok(())
    }
}

/// Parameter `t` with `w = u + t (v - u)`, if `w` is on the line through `u, v`.
fn segment_parameter(u: &Point, v: &Point, w: &Point) -> Option<Rational> {
    let d = v.sub(u);
    let e = w.sub(u);
    let i = d.iter().position(|x| !x.is_zero())?;
    let t = &e[i] / &d[i];
    d.iter().zip(&e).all(|(a, b)| &(a * &t) == b).then_some(t)
}

/// Whether `w` lies in the open segment `(u, v)`.
pub fn strictly_between(u: &Point, v: &Point, w: &Point) -> bool {
    segment_parameter(u, v, w).map_or(false, |t| t > Rational::zero() && t < Rational::one())
}

/// The two halves of a split, `([B,u,w], [B,w,v])`.
pub fn split_simplex(target: &Simplex, u: &Point, v: &Point, w: &Point) -> Result<(Simplex, Simplex)> {
    if u == v || !target.has_vertex(u) || !target.has_vertex(v) {
        return Err(Error::IllegalMove(format!(
            "{u} and {v} are not two vertices of {target}"
        )));
    }
    if !strictly_between(u, v, w) {
        return Err(Error::IllegalMove(format!("{w} is not strictly between {u} and {v}")));
    }
    let base = target.without(u).without(v);
    Ok((base.cone(u).cone(w), base.cone(w).cone(v)))
}

pub(crate) struct MergeParts {
    pub merged: Simplex,
    pub u: Point,
    pub v: Point,
    pub hinge: Point,
}

pub(crate) fn merge_parts(s1: &Simplex, s2: &Simplex) -> Option<MergeParts> {
    if s1 == s2 || s1.dim() != s2.dim() || s1.ambient() != s2.ambient() {
        return None;
    }
    let only1: Vec<&Point> = s1.vertices().iter().filter(|p| !s2.has_vertex(p)).collect();
    let only2: Vec<&Point> = s2.vertices().iter().filter(|p| !s1.has_vertex(p)).collect();
    if only1.len() != 1 || only2.len() != 1 {
        return None;
    }
    let (u, v) = (only1[0], only2[0]);
    let hinge = s1
        .vertices()
        .iter()
        .find(|w| *w != u && strictly_between(u, v, w))?;
    Some(MergeParts {
        merged: s1.without(hinge).cone(v),
        u: u.clone(),
        v: v.clone(),
        hinge: hinge.clone(),
    })
}

/// The union of two simplices and the hinge vertex, when the union is a simplex.
pub fn mergeable(s1: &Simplex, s2: &Simplex) -> Option<(Simplex, Point)> {
    merge_parts(s1, s2).map(|m| (m.merged, m.hinge))
}

/// Applies a split, checking that the target is present and the split is legal.
pub fn split(t: &Triangulation, m: &Move) -> Result<Triangulation> {
    match m {
        Move::Split { .. } => apply(t, m),
        _ => Err(Error::IllegalMove("expected a split".into())),
    }
}

/// Applies a merge, checking presence and mergeability.
pub fn merge(t: &Triangulation, m: &Move) -> Result<Triangulation> {
    match m {
        Move::Merge { .. } => apply(t, m),
        _ => Err(Error::IllegalMove("expected a merge".into())),
    }
}

/// Applies any move. Legal moves keep a valid triangulation valid: the
/// replaced cells have the same union.
pub fn apply(t: &Triangulation, m: &Move) -> Result<Triangulation> {
    let mut cells = t.simplices().clone();
    m.apply_to(&mut cells)?;
    Ok(Triangulation::from_set(t.ambient(), t.dim(), cells))
}
