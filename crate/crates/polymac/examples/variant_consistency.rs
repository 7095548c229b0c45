//! Cross-checks between the two polarization variants and the operator
//! formula: pointwise agreement for different base points, stability of the
//! bookkeeping under outward dilation, and the symbolic zero-contribution
//! argument behind the operator regrouping.

use polymac::decomposition::{find_interior_epsilon, Weights};
use polymac::empoly::em_variant_consistency;
use polymac::multipoly::MultiPoly;
use polymac::polytope::builtins;
use polymac::rational::{rat, rat_int};

fn main() {
    let p = builtins::t2();
    let w = Weights::from_rationals(&[rat(1, 2), rat(1, 3), rat(3, 4)]);
    let integrand = MultiPoly::var(2, 0).mul(&MultiPoly::var(2, 1));
    let eps1 = find_interior_epsilon(&p);
    let eps2 = vec![rat_int(5), rat_int(7)];
    let run = em_variant_consistency(&p, &w, &integrand, &eps1, &eps2).unwrap();
    for (variant, label, ok) in &run.decomposition_checks {
        println!("decomposition {variant} with {label}: {}", if *ok { "exact" } else { "FAILED" });
    }
    println!("dilation bookkeeping stable : {}", run.dilation_bookkeeping_ok);
    println!("zero-contribution argument  : {}", run.zero_contribution_ok);
    println!("operator formula vs oracle  : {}", run.formula_vs_oracle_ok);
    println!("all consistent              : {}", run.ok());
    assert!(run.ok());
}
