//! The unpolarized alternating sum over all tangent cones: with unit
//! weights it is the classical indicator decomposition; with arbitrary
//! weights the boundary strata still match via the subset-product expansion.

use polymac::decomposition::{
    brianchon_gram_terms, verify_terms, weighted_indicator_polytope, Weights,
};
use polymac::polytope::builtins;
use polymac::rational::{format_point, rat};
use polymac::samples::{sample_points, SamplePolicy};

fn main() {
    for name in ["square", "cube", "t2"] {
        let p = builtins::by_name(name).unwrap();
        let terms = brianchon_gram_terms(&p);
        let ones = Weights::ones(p.num_facets());
        let c = p.centroid();
        println!(
            "{name}: classical alternating sum at the centroid {} = {}",
            format_point(&c),
            terms.sum_at(&ones, &c)
        );

        let w = Weights::from_rationals(
            &(0..p.num_facets()).map(|i| rat(i as i64 + 1, 7)).collect::<Vec<_>>(),
        );
        for v in p.vertices.iter().take(2) {
            println!(
                "  weighted sum at vertex {} = {} (indicator: {})",
                format_point(v),
                terms.sum_at(&w, v),
                weighted_indicator_polytope(&p, &w, v)
            );
        }
        let points = sample_points(&p, &SamplePolicy { seed: 1, ..Default::default() });
        let outcome = verify_terms(&p, &w, &terms, &points);
        println!("  verified at {} points: {}\n", outcome.points.len(), outcome.ok());
    }
}
