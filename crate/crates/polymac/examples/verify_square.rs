//! Decompose the weighted indicator of the unit square into polarized cone
//! indicators and verify the identity pointwise over the sample policy.

use polymac::decomposition::{
    decomposition_terms, find_interior_epsilon, verify_terms, Polarization, Weights,
};
use polymac::polytope::builtins;
use polymac::rational::{format_point, rat};
use polymac::samples::{sample_points, SamplePolicy};

fn main() {
    let p = builtins::square();
    let w = Weights::from_rationals(&[rat(1, 2), rat(1, 3), rat(2, 5), rat(3, 7)]);
    let eps = find_interior_epsilon(&p);
    println!("base point: {}", format_point(&eps));

    let terms = decomposition_terms(&p, &eps, Polarization::Toward).unwrap();
    println!("{:<12} {:>5} {:>6} {:>4} flips", "face", "sign", "phi", "m");
    for t in &terms.terms {
        println!(
            "{:<12} {:>5} {:>6} {:>4} {:?}",
            format!("{:?}", t.cone.jset),
            t.sign,
            t.phi,
            t.cone.m_flips,
            t.cone.flips
        );
    }

    let points = sample_points(&p, &SamplePolicy { seed: 7, ..Default::default() });
    let outcome = verify_terms(&p, &w, &terms, &points);
    println!(
        "\nchecked {} points: {} ({} failures)",
        outcome.points.len(),
        if outcome.ok() { "all identities hold" } else { "VIOLATIONS FOUND" },
        outcome.failures()
    );
}
