use std::collections::{BTreeSet, HashMap, VecDeque};

use super::{merge_parts, strictly_between, Move, MoveScript};
use crate::kernel::PointSet;
use crate::triangulation::{Simplex, Triangulation};

fn neighbors(cells: &BTreeSet<Simplex>, candidates: &PointSet) -> Vec<Move> {
    let mut out = Vec::new();
    for t in cells {
        let vs = t.vertices();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                for w in candidates.points() {
                    if strictly_between(&vs[i], &vs[j], w) {
                        out.push(Move::split(t.clone(), vs[i].clone(), vs[j].clone(), w.clone()));
                    }
                }
            }
        }
    }
    let list: Vec<&Simplex> = cells.iter().collect();
    for (i, a) in list.iter().enumerate() {
        for b in &list[i + 1..] {
            if merge_parts(a, b).is_some() {
                out.push(Move::merge((*a).clone(), (*b).clone()));
            }
        }
    }
    out
}

/// Shortest script from `a` to `b` in the move graph whose splits only use
/// points of `candidates`, searched breadth-first up to `max_depth` moves.
pub fn bfs_oracle(
    a: &Triangulation,
    b: &Triangulation,
    candidates: &PointSet,
    max_depth: usize,
) -> Option<MoveScript> {
    if a.ambient() != b.ambient() || a.dim() != b.dim() {
        return None;
    }
    let start = a.simplices().clone();
    let goal = b.simplices().clone();
    let mut parent: HashMap<BTreeSet<Simplex>, Option<(BTreeSet<Simplex>, Move)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([(start, 0usize)]);
    while let Some((state, depth)) = queue.pop_front() {
        if state == goal {
            let mut moves = Vec::new();
            let mut cur = state;
            while let Some(Some((prev, m))) = parent.get(&cur) {
                moves.push(m.clone());
                cur = prev.clone();
            }
            moves.reverse();
            return Some(MoveScript::new(moves).with_endpoints(a, b));
        }
        if depth == max_depth {
            continue;
        }
        for m in neighbors(&state, candidates) {
            let mut next = state.clone();
            if m.apply_to(&mut next).is_err() || parent.contains_key(&next) {
                continue;
            }
            parent.insert(next.clone(), Some((state.clone(), m)));
            queue.push_back((next, depth + 1));
        }
    }
    None
}
