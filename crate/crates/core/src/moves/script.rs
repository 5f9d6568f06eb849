use std::collections::HashMap;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::Move;
use crate::error::{Error, Result};
use crate::kernel::{Chart, Hyperplane, Point, Rational};
use crate::triangulation::{overlap_full, signed_volume, Simplex, Triangulation};

/// An ordered list of moves, optionally declaring the digests of the
/// triangulations it starts and ends at.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveScript {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source_digest: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target_digest: Option<String>,
    pub moves: Vec<Move>,
}

impl MoveScript {
    pub fn new(moves: Vec<Move>) -> Self {
        MoveScript {
            source_digest: None,
            target_digest: None,
            moves,
        }
    }

    pub fn with_endpoints(mut self, source: &Triangulation, target: &Triangulation) -> Self {
        self.source_digest = Some(source.digest());
        self.target_digest = Some(target.digest());
        self
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn push(&mut self, m: Move) {
        self.moves.push(m);
    }

    /// Appends another script's moves; declared digests are dropped.
    pub fn extend(&mut self, other: MoveScript) {
        self.moves.extend(other.moves);
        self.source_digest = None;
        self.target_digest = None;
    }

    /// Every simplex in every move gains `apex` as a vertex.
    pub fn cone(&self, apex: &Point) -> MoveScript {
        MoveScript::new(self.moves.iter().map(|m| m.cone(apex)).collect())
    }

    pub fn map_points(&self, f: &impl Fn(&Point) -> Point) -> MoveScript {
        MoveScript::new(self.moves.iter().map(|m| m.map_points(f)).collect())
    }

    /// Removes pairs of mutually inverse moves until none remain. A pair need
    /// not be adjacent: when no move in between touches any of its cells, the
    /// pair commutes past those moves and cancels. Scripts containing an
    /// illegal move are returned unchanged.
    pub fn simplified(self) -> MoveScript {
        let mut cur = self;
        loop {
            let before = cur.len();
            cur = cur.cancel_pass();
            if cur.len() == before {
                return cur;
            }
        }
    }

    fn cancel_pass(self) -> MoveScript {
        let Ok(effects) = self
            .moves
            .iter()
            .map(|m| {
                m.effect().map(|(mut r, mut a)| {
                    r.sort();
                    a.sort();
                    (r, a)
                })
            })
            .collect::<Result<Vec<_>>>()
        else {
            return self;
        };
        let mut alive = vec![true; effects.len()];
        // moves still alive that touched each cell, oldest first
        let mut history: HashMap<&Simplex, Vec<usize>> = HashMap::new();
        for (j, (removed, added)) in effects.iter().enumerate() {
            let last = |c: &Simplex| history.get(c).and_then(|h| h.last()).copied();
            if let Some(i) = removed.first().and_then(last) {
                let (ri, ai) = &effects[i];
                if ai == removed && ri == added && removed.iter().chain(added).all(|c| last(c) == Some(i)) {
                    alive[i] = false;
                    alive[j] = false;
                    for c in removed.iter().chain(added) {
                        history.get_mut(c).expect("touched").pop();
                    }
                    continue;
                }
            }
            for c in removed.iter().chain(added) {
                history.entry(c).or_default().push(j);
            }
        }
        MoveScript {
            source_digest: self.source_digest,
            target_digest: self.target_digest,
            moves: self
                .moves
                .into_iter()
                .zip(alive)
                .filter_map(|(m, keep)| keep.then_some(m))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<MoveScript> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl FromIterator<Move> for MoveScript {
    fn from_iter<I: IntoIterator<Item = Move>>(iter: I) -> Self {
        MoveScript::new(iter.into_iter().collect())
    }
}

/// Reversed script with each move replaced by its inverse; digests swap.
pub fn invert(s: &MoveScript) -> Result<MoveScript> {
    let moves = s
        .moves
        .iter()
        .rev()
        .map(Move::inverse)
        .collect::<Result<Vec<_>>>()?;
    Ok(MoveScript {
        source_digest: s.target_digest.clone(),
        target_digest: s.source_digest.clone(),
        moves,
    })
}

/// Checks performed at every replay step in addition to move legality.
#[derive(Clone, Copy, Debug)]
pub struct ReplayOptions {
    /// Validate the initial triangulation, then require at every step that
    /// the added simplices exactly tile the removed ones (containment and
    /// equal volume). By induction every intermediate state is valid.
    pub check_validity: bool,
    /// Additionally test every new simplex against every other simplex for
    /// an `n`-dimensional overlap. Quadratic; meant for small inputs.
    pub check_pairwise: bool,
    /// Compare declared digests with the actual endpoints.
    pub check_digests: bool,
}

impl Default for ReplayOptions {
    fn default() -> Self {
        ReplayOptions {
            check_validity: true,
            check_pairwise: false,
            check_digests: true,
        }
    }
}

impl ReplayOptions {
    pub fn unchecked() -> Self {
        ReplayOptions {
            check_validity: false,
            check_pairwise: false,
            check_digests: false,
        }
    }

    pub fn exhaustive() -> Self {
        ReplayOptions {
            check_pairwise: true,
            ..ReplayOptions::default()
        }
    }
}

/// Applies the moves in order with the default checks.
pub fn replay(t0: &Triangulation, s: &MoveScript) -> Result<Triangulation> {
    replay_with(t0, s, ReplayOptions::default(), |_, _| Ok(()))
}

/// Volumes of `cells`, measured in a common chart when they are not full-dimensional.
fn volumes(cells: &[&Simplex]) -> Result<Vec<Rational>> {
    let s0 = cells[0];
    if s0.dim() == s0.ambient() {
        return cells.iter().map(|s| s.volume()).collect();
    }
    let pts: Vec<Point> = cells.iter().flat_map(|s| s.vertices().iter().cloned()).collect();
    let chart = Chart::of(&pts)?;
    if chart.dim() != s0.dim() {
        return Err(Error::IllegalMove("cells do not share an affine hull".into()));
    }
    Ok(cells
        .iter()
        .map(|s| {
            let proj: Vec<Point> = s.vertices().iter().map(|p| chart.project(p)).collect();
            signed_volume(&proj).abs()
        })
        .collect())
}

/// Whether `parts` exactly tile `whole`: contained in it, with equal total
/// volume and no two parts overlapping.
fn tiles(whole: &Simplex, parts: &[Simplex]) -> Result<bool> {
    if !parts.iter().all(|p| {
        p.vertices()
            .iter()
            .all(|v| whole.has_vertex(v) || whole.contains_point(v))
    }) {
        return Ok(false);
    }
    let mut all: Vec<&Simplex> = vec![whole];
    all.extend(parts);
    let vols = volumes(&all)?;
    let sum: Rational = vols[1..].iter().fold(Rational::zero(), |a, b| a + b);
    if sum != vols[0] {
        return Ok(false);
    }
    for (i, a) in parts.iter().enumerate() {
        if parts[i + 1..].iter().any(|b| !interiors_disjoint(a, b)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact disjointness test; two simplices sharing a facet are separated by
/// its hyperplane exactly when their other vertices lie on opposite sides.
fn interiors_disjoint(a: &Simplex, b: &Simplex) -> bool {
    let shared: Vec<Point> = a.vertices().iter().filter(|v| b.has_vertex(v)).cloned().collect();
    if shared.len() != a.dim() {
        return !overlap_full(a, b, a.dim());
    }
    let u = a.vertices().iter().find(|v| !b.has_vertex(v)).unwrap();
    let v = b.vertices().iter().find(|x| !a.has_vertex(x)).unwrap();
    let mut pts = shared.clone();
    pts.push(u.clone());
    let Ok(chart) = Chart::of(&pts) else { return false };
    if !chart.contains(v) {
        return false;
    }
    let proj: Vec<Point> = shared.iter().map(|p| chart.project(p)).collect();
    match Hyperplane::through(&proj) {
        Ok(h) => h.side(&chart.project(u)) * h.side(&chart.project(v)) == -1,
        Err(_) => false,
    }
}

/// Replays `s`, calling `observe(step, state)` after each move.
pub fn replay_with(
    t0: &Triangulation,
    s: &MoveScript,
    opts: ReplayOptions,
    mut observe: impl FnMut(usize, &Triangulation) -> Result<()>,
) -> Result<Triangulation> {
    if opts.check_digests {
        if let Some(d) = &s.source_digest {
            if *d != t0.digest() {
                return Err(Error::Replay {
                    step: 0,
                    reason: "source digest does not match the input triangulation".into(),
                });
            }
        }
    }
    if opts.check_validity && !t0.validate().is_valid() {
        return Err(Error::Replay {
            step: 0,
            reason: "initial triangulation is not valid".into(),
        });
    }
    let mut t = t0.clone();
    for (i, m) in s.moves.iter().enumerate() {
        let fail = |reason: String| Error::Replay { step: i, reason };
        let (removed, added) = m.effect().map_err(|e| fail(e.to_string()))?;
        if added.iter().any(|a| a.dim() != t.dim() || a.ambient() != t.ambient()) {
            return Err(fail("move has the wrong dimension".into()));
        }
        let cells = t.simplices_mut();
        for r in &removed {
            if !cells.remove(r) {
                return Err(fail(format!("{r} is not in the triangulation")));
            }
        }
        if opts.check_validity {
            if let Some(a) = added.iter().find(|a| a.is_degenerate()) {
                return Err(fail(format!("{a} is degenerate")));
            }
            let ok = match (removed.as_slice(), added.as_slice()) {
                ([whole], parts) | (parts, [whole]) => tiles(whole, parts).map_err(|e| fail(e.to_string()))?,
                _ => false,
            };
            if !ok {
                return Err(fail("added simplices do not tile the removed ones".into()));
            }
        }
        if opts.check_pairwise {
            for a in &added {
                if let Some(o) = cells.iter().find(|c| overlap_full(a, c, a.dim())) {
                    return Err(fail(format!("{a} overlaps {o}")));
                }
            }
        }
        for a in added {
            if !cells.insert(a) {
                return Err(fail("move creates a duplicate simplex".into()));
            }
        }
        observe(i, &t)?;
    }
    if opts.check_digests {
        if let Some(d) = &s.target_digest {
            if *d != t.digest() {
                return Err(Error::Replay {
                    step: s.len(),
                    reason: "final triangulation does not match the target digest".into(),
                });
            }
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pt;

    fn s(v: Vec<Point>) -> Simplex {
        Simplex::new(v).unwrap()
    }

    fn diag(flip: bool) -> Triangulation {
        let cells = if flip {
            [vec![pt![0, 0], pt![1, 0], pt![0, 1]], vec![pt![1, 0], pt![1, 1], pt![0, 1]]]
        } else {
            [vec![pt![0, 0], pt![1, 0], pt![1, 1]], vec![pt![0, 0], pt![1, 1], pt![0, 1]]]
        };
        Triangulation::new(cells.map(s)).unwrap()
    }

    fn flip_script() -> MoveScript {
        let c = pt![(1, 2), (1, 2)];
        MoveScript::new(vec![
            Move::split(s(vec![pt![0, 0], pt![1, 0], pt![1, 1]]), pt![0, 0], pt![1, 1], c.clone()),
            Move::split(s(vec![pt![0, 0], pt![1, 1], pt![0, 1]]), pt![0, 0], pt![1, 1], c.clone()),
            Move::merge(s(vec![pt![0, 0], pt![1, 0], c.clone()]), s(vec![pt![0, 0], pt![0, 1], c.clone()])),
            Move::merge(s(vec![pt![1, 0], pt![1, 1], c.clone()]), s(vec![pt![0, 1], pt![1, 1], c.clone()])),
        ])
        .with_endpoints(&diag(false), &diag(true))
    }

    #[test]
    fn replay_examples() {
        let t = diag(false);
        assert_eq!(replay(&t, &MoveScript::default()).unwrap(), t);
        assert_eq!(replay(&t, &flip_script()).unwrap(), diag(true));
        let all = ReplayOptions::exhaustive();
        assert_eq!(replay_with(&t, &flip_script(), all, |_, _| Ok(())).unwrap(), diag(true));
        let inv = invert(&flip_script()).unwrap();
        assert_eq!(replay(&diag(true), &inv).unwrap(), t);
        assert!(invert(&MoveScript::default()).unwrap().is_empty());
    }

    #[test]
    fn replay_errors_carry_step() {
        let mut sc = flip_script();
        sc.moves.swap(1, 2);
        match replay(&diag(false), &sc) {
            Err(Error::Replay { step, .. }) => assert_eq!(step, 1),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(replay(&diag(true), &flip_script()), Err(Error::Replay { step: 0, .. })));
    }

    #[test]
    fn split_then_merge_cancels() {
        let m = flip_script().moves[0].clone();
        let sc = MoveScript::new(vec![m.clone(), m.inverse().unwrap()]);
        assert_eq!(replay(&diag(false), &sc).unwrap(), diag(false));
        assert!(sc.simplified().is_empty());
        assert_eq!(flip_script().simplified().len(), 4);
    }

    #[test]
    fn json_round_trip() {
        let sc = flip_script();
        let back = MoveScript::from_json(&sc.to_json()).unwrap();
        assert_eq!(back, sc);
        assert!(sc.to_json().contains("\"op\": \"split\""));
    }
}
