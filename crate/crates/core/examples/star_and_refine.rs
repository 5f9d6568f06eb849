//! Stars a hexagon at two points and builds their common refinement.

use polymove::kernel::{rat, Point};
use polymove::triangulation::{common_refinement, star_polytope, validate_cover, Polytope};

fn main() {
    let hexagon = Polytope::new(
        [[0, 0], [2, 0], [3, 1], [2, 2], [0, 2], [-1, 1]]
            .iter()
            .map(|c| Point::from_ints(c))
            .collect(),
    )
    .unwrap();
    let a = star_polytope(&hexagon, &Point::new(vec![rat(1, 2), rat(1, 2)])).unwrap();
    let b = star_polytope(&hexagon, &Point::from_ints(&[2, 0])).unwrap();
    let g = common_refinement(&a, &b).unwrap();
    println!("star at (1/2,1/2): {} triangles", a.len());
    println!("star at (2,0):     {} triangles", b.len());
    println!("refinement:        {} cells, covers the hexagon: {}", g.len(), validate_cover(&g, &hexagon).unwrap());
    println!("area {}", g.volume().unwrap());
}
