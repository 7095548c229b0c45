//! The finite groups attached to the faces of a polytope: orders from Smith
//! normal form, canonical representatives, boundary subsets and the
//! partition identity that drives the operator regrouping.

use num_bigint::BigInt;
use polymac::lattice::{all_gamma_groups, working_order};
use polymac::polytope::builtins;
use polymac::rational::format_rational;

fn main() {
    for name in ["square", "t2", "simplex3"] {
        let p = builtins::by_name(name).unwrap();
        let groups = all_gamma_groups(&p);
        println!("== {name} (working cyclotomic order {})", working_order(&p));
        for g in &groups {
            let reps: Vec<String> = g
                .elements
                .iter()
                .map(|e| {
                    let b: Vec<String> = e.b.iter().map(format_rational).collect();
                    format!("[{}]", b.join(", "))
                })
                .collect();
            println!(
                "  face {:?}: |group| = {}, boundary {}, representatives {}",
                g.jset,
                g.order,
                g.boundary_indices().len(),
                reps.join(" ")
            );
        }
        // partition identity: boundary subsets of superfaces tile each group
        for f in 0..p.faces.len() {
            let total: usize = p
                .superfaces(f)
                .into_iter()
                .map(|s| groups[s].boundary_indices().len())
                .sum();
            assert_eq!(BigInt::from(total), groups[f].order);
        }
        println!("  partition identity holds on all {} faces\n", p.faces.len());
    }
}
