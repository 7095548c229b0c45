//! Build a simple polytope from half-space data and walk its face lattice:
//! vertices, index sets, affine spans and tangent-cone generators.

use polymac::polytope::builtins;
use polymac::rational::{format_point, format_rational};

fn main() {
    for name in ["square", "t2", "simplex3"] {
        let p = builtins::by_name(name).unwrap();
        println!("== {name}: {} facets, {} vertices, {} faces", p.num_facets(), p.vertices.len(), p.faces.len());
        for (i, f) in p.facets.iter().enumerate() {
            println!("  facet {i}: normal {:?}, offset {}", f.normal, format_rational(&f.offset));
        }
        let vrep: Vec<String> = p.v_representation().iter().map(|v| format_point(v)).collect();
        println!("  vertex representation: {}", vrep.join(" "));
        for fid in 0..p.faces.len() {
            let face = p.face(fid);
            let gens = p.cone_generators(fid).unwrap();
            let gens: Vec<String> = gens.iter().map(|g| format_point(g)).collect();
            println!(
                "  face {:?}: dim {}, {} vertices, base {}, generators [{}]",
                face.jset,
                face.dim,
                face.vertex_ids.len(),
                format_point(&face.base_point),
                gens.join(", ")
            );
        }
        println!();
    }
}
