//! Moves the apex of a starring of the unit cube from a corner to an
//! interior point.

use polymove::kernel::{rat, Point};
use polymove::moves::replay;
use polymove::synthesis::lemma2_restar;
use polymove::triangulation::{star_polytope, Polytope};

fn main() {
    let corners: Vec<Point> = (0..8).map(|i| Point::from_ints(&[i & 1, (i >> 1) & 1, i >> 2])).collect();
    let cube = Polytope::new(corners).unwrap();
    let a = Point::from_ints(&[0, 0, 0]);
    let b = Point::new(vec![rat(1, 3), rat(2, 3), rat(1, 2)]);
    let script = lemma2_restar(&cube, &a, &b).unwrap();
    let from = star_polytope(&cube, &a).unwrap();
    let to = replay(&from, &script).unwrap();
    println!("{} tetrahedra at {a}, {} at {b}, {} moves", from.len(), to.len(), script.len());
    assert_eq!(to, star_polytope(&cube, &b).unwrap());
}
