//! Breadth-first search over the move graph of the unit square, with the
//! centre as the only point splits may introduce.

use polymove::kernel::{rat, Point, PointSet};
use polymove::moves::bfs_oracle;
use polymove::triangulation::{Simplex, Triangulation};

fn square(flipped: bool) -> Triangulation {
    let p = |x, y| Point::from_ints(&[x, y]);
    let cells = if flipped {
        [[p(0, 0), p(1, 0), p(0, 1)], [p(1, 0), p(1, 1), p(0, 1)]]
    } else {
        [[p(0, 0), p(1, 0), p(1, 1)], [p(0, 0), p(1, 1), p(0, 1)]]
    };
    Triangulation::new(cells.map(|c| Simplex::new(c.to_vec()).unwrap())).unwrap()
}

fn main() {
    let candidates = PointSet::new(vec![Point::new(vec![rat(1, 2), rat(1, 2)])]);
    for depth in 1..=4 {
        match bfs_oracle(&square(false), &square(true), &candidates, depth) {
            Some(script) => {
                println!("depth {depth}: found {} moves", script.len());
                for m in script.moves() {
                    println!("  {}", serde_json::to_string(m).unwrap());
                }
                break;
            }
            None => println!("depth {depth}: none"),
        }
    }
}
