//! Exact weighted polynomial sums over lattice points of integral simple
//! polytopes: one twisted operator per face/group-element pair applied to
//! the dilated-polytope integral reproduces brute-force enumeration.

use polymac::config::parse_poly;
use polymac::decomposition::Weights;
use polymac::empoly::em_poly_run;
use polymac::polytope::builtins;
use polymac::rational::rat;

fn main() {
    for (name, poly_text, weights) in [
        ("t2", "1", Weights::ones(3)),
        ("t2", "x^2*y", Weights::from_rationals(&[rat(1, 2), rat(1, 3), rat(2, 5)])),
        ("simplex3", "x + z^2", Weights::from_rationals(&[rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)])),
        ("cube", "x*y*z", Weights::from_rationals(&vec![rat(1, 3); 6])),
    ] {
        let p = builtins::by_name(name).unwrap();
        let integrand = parse_poly(poly_text, p.dim).unwrap();
        let run = em_poly_run(&p, &weights, &integrand, None).unwrap();
        println!("{name}, p = {poly_text}, truncation {}:", run.truncation);
        for (face, element, value) in &run.contributions {
            let tag = if element.is_empty() {
                "plain".to_string()
            } else {
                let b: Vec<String> =
                    element.iter().map(polymac::rational::format_rational).collect();
                format!("twist [{}]", b.join(", "))
            };
            println!("  face {face:?} ({tag}): {value}");
        }
        println!("  formula = {}", run.formula);
        println!("  oracle  = {}", run.oracle);
        println!("  exact   : {}\n", run.matches());
        assert!(run.matches());
    }
}
