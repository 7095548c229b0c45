//! The integral of a polynomial over the outward-dilated polytope is itself
//! a polynomial in the per-facet shift variables; print a few of these
//! dilation polynomials and evaluate one.

use polymac::empoly::DilatedIntegral;
use polymac::multipoly::MultiPoly;
use polymac::polytope::builtins;
use polymac::rational::rat;

fn main() {
    let square = builtins::square();
    let vol = DilatedIntegral::compute(&square, &MultiPoly::one(2)).unwrap();
    println!("square, p = 1 (variables are the four facet shifts):");
    println!("  {}", vol.poly);

    let t2 = builtins::t2();
    let vol = DilatedIntegral::compute(&t2, &MultiPoly::one(2)).unwrap();
    println!("\ntriangle, p = 1:");
    println!("  {}", vol.poly);
    println!("  value at zero shift: {}", vol.at_zero());

    let moment = DilatedIntegral::compute(&t2, &MultiPoly::var(2, 0)).unwrap();
    println!("\ntriangle, p = x:");
    println!("  {}", moment.poly);

    // shifting the hypotenuse outward by 2 doubles the triangle
    let shifted = vol.poly.eval_rational(&[rat(0, 1), rat(0, 1), rat(2, 1)]);
    println!("\narea after shifting the hypotenuse out by 2: {shifted}");
}
