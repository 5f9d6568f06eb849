//! Flips the diagonal of the unit square with four elementary moves: split
//! both triangles at the centre, then merge the pieces the other way.

use polymove::kernel::{rat, Point};
use polymove::moves::{replay, Move, MoveScript};
use polymove::triangulation::{Simplex, Triangulation};

fn p(x: i64, y: i64) -> Point {
    Point::from_ints(&[x, y])
}

fn tri(a: Point, b: Point, c: Point) -> Simplex {
    Simplex::new(vec![a, b, c]).unwrap()
}

fn main() {
    let centre = Point::new(vec![rat(1, 2), rat(1, 2)]);
    let start = Triangulation::new([tri(p(0, 0), p(1, 0), p(1, 1)), tri(p(0, 0), p(1, 1), p(0, 1))]).unwrap();
    let script = MoveScript::new(vec![
        Move::split(tri(p(0, 0), p(1, 0), p(1, 1)), p(0, 0), p(1, 1), centre.clone()),
        Move::split(tri(p(0, 0), p(1, 1), p(0, 1)), p(0, 0), p(1, 1), centre.clone()),
        Move::merge(tri(p(0, 0), p(1, 0), centre.clone()), tri(p(0, 0), centre.clone(), p(0, 1))),
        Move::merge(tri(p(1, 0), p(1, 1), centre.clone()), tri(p(1, 1), p(0, 1), centre.clone())),
    ]);
    let end = replay(&start, &script).expect("every step is legal");
    for s in end.iter() {
        println!("{s}");
    }
    println!("{}", script.to_json());
}
