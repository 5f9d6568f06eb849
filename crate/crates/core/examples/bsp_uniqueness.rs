//! Cuts the cube and a triangular prism into simplices by a binary space
//! partition and evaluates every builtin valuation along the tree and by
//! inclusion-exclusion over a starring.

use polymove::kernel::Point;
use polymove::triangulation::Polytope;
use polymove::valuations::{builtins, corollary3_uniqueness_check, tverberg_bsp};

fn main() {
    let cube = Polytope::new((0..8).map(|i| Point::from_ints(&[i & 1, (i >> 1) & 1, i >> 2])).collect()).unwrap();
    let prism = Polytope::new(
        [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 0, 1], [0, 1, 1]]
            .iter()
            .map(|c| Point::from_ints(c))
            .collect(),
    )
    .unwrap();
    for (name, p) in [("cube", cube), ("prism", prism)] {
        let tree = tverberg_bsp(&p).unwrap();
        println!("{name}: {} cuts, {} simplices", tree.inner_nodes(), tree.leaves().len());
        for mu in builtins(3) {
            let value = tree.evaluate(&mu).unwrap();
            let agree = corollary3_uniqueness_check(&mu, &p).unwrap();
            println!("  {:<9} {:>6}  paths agree: {agree}", mu.name(), value.to_string());
        }
    }
}
