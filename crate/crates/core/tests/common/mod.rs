#![allow(dead_code)]

use num_traits::Zero;
use polymove::kernel::{rat, Point, Rational};
use polymove::moves::{apply, Move};
use polymove::triangulation::{star_polytope, Polytope, Triangulation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_2d_7a1;

pub fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// Convex polygon with integer vertices in `[0, 12]^2` and `lo..=hi` vertices.
pub fn random_polygon(rng: &mut impl Rng, lo: usize, hi: usize) -> Polytope {
    loop {
        let k = rng.gen_range(lo..=hi + 4);
        let pts: Vec<Point> = (0..k)
            .map(|_| Point::from_ints(&[rng.gen_range(0..=12), rng.gen_range(0..=12)]))
            .collect();
        if let Ok(p) = Polytope::new(pts) {
            if p.dim() == 2 && (lo..=hi).contains(&p.vertices().len()) {
                return p;
            }
        }
    }
}

/// A point of `p` as a convex combination of its vertices with small weights.
pub fn random_point(rng: &mut impl Rng, p: &Polytope) -> Point {
    let vs = p.vertices();
    match rng.gen_range(0..4) {
        0 => vs.choose(rng).unwrap().clone(),
        1 => {
            let a = vs.choose(rng).unwrap();
            let b = vs.choose(rng).unwrap();
            a.lerp(b, &rat(rng.gen_range(1..4), 4))
        }
        _ => {
            let weights: Vec<i64> = vs.iter().map(|_| rng.gen_range(0..4)).collect();
            let total: i64 = weights.iter().sum();
            if total == 0 {
                return p.vertex_barycenter();
            }
            let n = vs[0].dim();
            let mut c = vec![Rational::zero(); n];
            for (v, w) in vs.iter().zip(&weights) {
                for (ci, x) in c.iter_mut().zip(v.coords()) {
                    *ci += x * rat(*w, total);
                }
            }
            Point::new(c)
        }
    }
}

/// Random legal splits applied to `t`.
pub fn random_splits(rng: &mut impl Rng, mut t: Triangulation, count: usize) -> Triangulation {
    for _ in 0..count {
        let cells: Vec<_> = t.iter().cloned().collect();
        let s = cells.choose(rng).unwrap().clone();
        let mut vs = s.vertices().to_vec();
        vs.shuffle(rng);
        let (u, v) = (vs[0].clone(), vs[1].clone());
        let w = u.lerp(&v, &rat(rng.gen_range(1..4), 4));
        t = apply(&t, &Move::split(s, u, v, w)).expect("legal split");
    }
    t
}

/// A starring of `p` at a random point followed by up to `splits` random splits.
pub fn random_triangulation(rng: &mut impl Rng, p: &Polytope, splits: usize) -> Triangulation {
    let a = random_point(rng, p);
    let t = star_polytope(p, &a).expect("point inside");
    let k = rng.gen_range(0..=splits);
    random_splits(rng, t, k)
}

pub fn cube() -> Polytope {
    let mut v = Vec::new();
    for x in 0..2 {
        for y in 0..2 {
            for z in 0..2 {
                v.push(Point::from_ints(&[x, y, z]));
            }
        }
    }
    Polytope::new(v).unwrap()
}

pub fn tetrahedron() -> Polytope {
    Polytope::new(vec![
        Point::from_ints(&[0, 0, 0]),
        Point::from_ints(&[1, 0, 0]),
        Point::from_ints(&[0, 1, 0]),
        Point::from_ints(&[0, 0, 1]),
    ])
    .unwrap()
}

pub fn prism() -> Polytope {
    let mut v = Vec::new();
    for z in 0..2 {
        v.push(Point::from_ints(&[0, 0, z]));
        v.push(Point::from_ints(&[1, 0, z]));
        v.push(Point::from_ints(&[0, 1, z]));
    }
    Polytope::new(v).unwrap()
}

pub fn unit_square() -> Polytope {
    Polytope::new(vec![
        Point::from_ints(&[0, 0]),
        Point::from_ints(&[1, 0]),
        Point::from_ints(&[1, 1]),
        Point::from_ints(&[0, 1]),
    ])
    .unwrap()
}
