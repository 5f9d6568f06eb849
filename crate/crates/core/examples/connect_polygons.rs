//! Connects two unrelated triangulations of a random polygon by a move
//! script and replays it. Pass a seed as the first argument.

use polymove::kernel::Point;
use polymove::moves::{apply, replay, Move};
use polymove::synthesis::theorem1_connect;
use polymove::triangulation::{star_polytope, Polytope, Triangulation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn polygon(rng: &mut ChaCha8Rng) -> Polytope {
    loop {
        let pts: Vec<Point> = (0..9).map(|_| Point::from_ints(&[rng.gen_range(0..=10), rng.gen_range(0..=10)])).collect();
        if let Ok(p) = Polytope::new(pts) {
            if p.dim() == 2 && p.vertices().len() >= 5 {
                return p;
            }
        }
    }
}

fn scrambled(rng: &mut ChaCha8Rng, p: &Polytope) -> Triangulation {
    let apex = p.vertices().choose(rng).unwrap();
    let mut t = star_polytope(p, apex).unwrap();
    for _ in 0..4 {
        let s = t.iter().collect::<Vec<_>>().choose(rng).copied().unwrap().clone();
        let (u, v) = (s.vertices()[0].clone(), s.vertices()[1].clone());
        let w = u.lerp(&v, &polymove::kernel::rat(1, 3));
        t = apply(&t, &Move::split(s, u, v, w)).unwrap();
    }
    t
}

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = polygon(&mut rng);
    let a = scrambled(&mut rng, &p);
    let b = star_polytope(&p, &p.vertex_barycenter()).unwrap();
    let script = theorem1_connect(&a, &b).unwrap();
    let (splits, merges) = script.moves().iter().fold((0, 0), |(s, m), mv| match mv {
        Move::Split { .. } => (s + 1, m),
        Move::Merge { .. } => (s, m + 1),
    });
    println!("polygon with {} vertices, {} -> {} triangles", p.vertices().len(), a.len(), b.len());
    println!("{} moves ({splits} splits, {merges} merges)", script.len());
    assert_eq!(replay(&a, &script).unwrap(), b);
    println!("replay reaches the target");
}
