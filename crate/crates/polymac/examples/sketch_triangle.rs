//! Render a plane decomposition as a static SVG: the polytope, the wall
//! arrangement, the base point with its projections, and one translucent
//! polarized cone per surviving term.

use polymac::decomposition::{find_interior_epsilon, Polarization};
use polymac::polytope::builtins;
use polymac::rational::format_point;
use polymac::sketch::sketch_svg;

fn main() {
    let p = builtins::t2();
    let eps = find_interior_epsilon(&p);
    let (svg, stats) = sketch_svg(&p, &eps, Polarization::Toward).unwrap();
    let out = "triangle-decomposition.svg";
    std::fs::write(out, &svg).unwrap();
    println!(
        "wrote {out}: base point {}, {} cones, {} wall elements",
        format_point(&eps),
        stats.cones,
        stats.walls
    );

    let outside = vec![polymac::rational::rat(5, 1), polymac::rational::rat(7, 1)];
    let (svg, stats) = sketch_svg(&p, &outside, Polarization::Toward).unwrap();
    let out = "triangle-decomposition-exterior.svg";
    std::fs::write(out, &svg).unwrap();
    println!(
        "wrote {out}: base point {}, {} cones (only surviving terms are drawn)",
        format_point(&outside),
        stats.cones
    );
}
