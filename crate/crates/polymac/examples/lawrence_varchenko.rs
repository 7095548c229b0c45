//! With a base point chosen so that only vertex terms survive, the away
//! polarization collapses to the polar (Lawrence-Varchenko style) vertex
//! decomposition; the flips and signs agree term for term.

use polymac::decomposition::{
    decomposition_terms, find_vertex_only_epsilon, furthest_vertex,
    lawrence_varchenko_terms, verify_terms, Polarization, Weights,
};
use polymac::polytope::builtins;
use polymac::rational::{format_point, rat, vec_sub};
use polymac::samples::{sample_points, SamplePolicy};

fn main() {
    let p = builtins::t2();
    let eps = find_vertex_only_epsilon(&p).expect("vertex-only base point");
    let v0 = furthest_vertex(&p, &eps).unwrap();
    let xi = vec_sub(&eps, &p.vertices[v0]);
    println!("base point {}  (furthest vertex: {})", format_point(&eps), format_point(&p.vertices[v0]));
    println!("polarizing vector xi = {}\n", format_point(&xi));

    let away = decomposition_terms(&p, &eps, Polarization::Away).unwrap();
    let lv = lawrence_varchenko_terms(&p, &xi).unwrap();
    println!("{:<12} {:>10} {:>16}", "vertex", "away sign", "polar sign/flips");
    for t in &lv.terms {
        let a = away.terms.iter().find(|u| u.face_id == t.face_id).unwrap();
        println!(
            "{:<12} {:>10} {:>8} {:?}",
            format_point(&t.cone.base_projection),
            a.sign,
            t.sign,
            t.cone.flips
        );
        assert_eq!(a.sign, t.sign);
        assert_eq!(a.cone.flips, t.cone.flips);
    }

    let w = Weights::from_rationals(&[rat(1, 2), rat(2, 3), rat(1, 5)]);
    let points = sample_points(&p, &SamplePolicy { seed: 3, ..Default::default() });
    let outcome = verify_terms(&p, &w, &lv, &points);
    println!(
        "\npolar decomposition verified at {} points: {}",
        outcome.points.len(),
        outcome.ok()
    );
}
