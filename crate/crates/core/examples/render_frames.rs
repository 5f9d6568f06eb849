//! Writes one SVG per step of a script connecting two triangulations of a
//! pentagon. The output directory is the first argument, by default
//! `polymove-frames` under the system temporary directory.

use polymove::cli::render_svg;
use polymove::kernel::Point;
use polymove::moves::{apply, MoveScript};
use polymove::synthesis::theorem1_connect;
use polymove::triangulation::{star_polytope, Polytope};

fn main() {
    let dir = std::env::args().nth(1).unwrap_or_else(|| {
        std::env::temp_dir().join("polymove-frames").display().to_string()
    });
    std::fs::create_dir_all(&dir).unwrap();
    let pentagon = Polytope::new(
        [[0, 0], [4, 0], [5, 3], [2, 5], [-1, 3]].iter().map(|c| Point::from_ints(c)).collect(),
    )
    .unwrap();
    let a = star_polytope(&pentagon, &Point::from_ints(&[0, 0])).unwrap();
    let b = star_polytope(&pentagon, &Point::from_ints(&[2, 5])).unwrap();
    let script: MoveScript = theorem1_connect(&a, &b).unwrap();
    let mut t = a;
    for k in 0..=script.len() {
        std::fs::write(format!("{dir}/frame_{k:04}.svg"), render_svg(&t).unwrap()).unwrap();
        if let Some(m) = script.moves().get(k) {
            t = apply(&t, m).unwrap();
        }
    }
    println!("wrote {} frames to {dir}/", script.len() + 1);
}
