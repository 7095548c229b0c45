//! Twisted sums over a half-ray: samples are weighted by powers of a root
//! of unity, the operator series and the remainder kernel live in the
//! cyclotomic field, and the identity is exact there.

use polymac::cyclo::CycloNumber;
use polymac::em1d::em_twisted_halfray;
use polymac::periodic::twisted_kernel_at_zero;
use polymac::rational::rat;
use polymac::series::twisted_todd_series;
use polymac::spline::bspline;

fn main() {
    let lambda = CycloNumber::root_of_unity(1, 3);
    let q = CycloNumber::from_rational(rat(1, 3));
    let f = bspline(5, &rat(-3, 2), 1);
    for k in [2usize, 3, 4] {
        let rep = em_twisted_halfray(&f, &lambda, &q, k).unwrap();
        println!("{}:", rep.kind);
        println!("  twisted samples  = {}", rep.lhs);
        println!("  main term        = {}", rep.main);
        println!("  kernel remainder = {}", rep.remainder);
        println!("  exact in Q(zeta) : {}\n", rep.holds());
        assert!(rep.holds());
    }

    // the kernel values at zero are the coefficients of the operator series
    let series = twisted_todd_series(&CycloNumber::one(), &lambda, 6).unwrap();
    println!("kernel values at 0 vs series coefficients:");
    for m in 2..=6usize {
        let kv = twisted_kernel_at_zero(m, &lambda).unwrap();
        println!("  degree {m}: {} == {}", kv, series.coefficient(m));
        assert_eq!(kv, series.coefficient(m));
    }
}
