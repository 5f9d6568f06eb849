//! Builtin valuations on a triangulated polygon, and on two squares meeting
//! in a single vertex.

use polymove::kernel::Point;
use polymove::triangulation::{star_polytope, Polyhedron, Polytope};
use polymove::valuations::{builtins, extend, extend_triangulation};

fn square(x: i64, y: i64) -> Polytope {
    Polytope::new(vec![
        Point::from_ints(&[x, y]),
        Point::from_ints(&[x + 1, y]),
        Point::from_ints(&[x + 1, y + 1]),
        Point::from_ints(&[x, y + 1]),
    ])
    .unwrap()
}

fn main() {
    let pentagon = Polytope::new(
        [[0, 0], [4, 0], [5, 3], [2, 5], [-1, 3]].iter().map(|c| Point::from_ints(c)).collect(),
    )
    .unwrap();
    let t = star_polytope(&pentagon, &Point::from_ints(&[2, 2])).unwrap();
    let touching = Polyhedron::new(vec![square(0, 0), square(1, 1)]).unwrap();
    println!("{:<10} {:>10} {:>10}", "valuation", "pentagon", "2 squares");
    for mu in builtins(2) {
        let a = extend_triangulation(&mu, &t).unwrap();
        let b = extend(&mu, &touching).unwrap();
        println!("{:<10} {:>10} {:>10}", mu.name(), a.to_string(), b.to_string());
    }
}
