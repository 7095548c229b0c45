//! The weighted summation identity on an interval, with an exact remainder:
//! endpoint samples carry the weight q, everything is a rational number, and
//! the two sides agree bit for bit.

use polymac::cyclo::CycloNumber;
use polymac::em1d::em_interval;
use polymac::rational::{rat, rat_int};
use polymac::spline::bspline;

fn main() {
    let f = bspline(4, &rat(-1, 2), 1); // cubic, support [-1/2, 7/2]
    for (m, qa, qb) in [
        (1, rat(1, 2), rat(1, 2)),
        (2, rat(2, 3), rat(-1, 5)),
        (2, rat_int(0), rat_int(1)),
    ] {
        let rep = em_interval(
            &f,
            0,
            3,
            &CycloNumber::from_rational(qa.clone()),
            &CycloNumber::from_rational(qb.clone()),
            m,
        )
        .unwrap();
        println!("{} with weights ({qa}, {qb}), remainder order {m}:", rep.kind);
        println!("  weighted samples   = {}", rep.lhs);
        println!("  operator main term = {}", rep.main);
        println!("  kernel remainder   = {}", rep.remainder);
        println!("  exact identity     : {}\n", rep.holds());
        assert!(rep.holds());
    }
}
