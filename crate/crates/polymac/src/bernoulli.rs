//! Bernoulli numbers and polynomials, in the convention pinned by the Todd
//! expansion `S/(1 - e^-S) = 1 + S/2 + sum b_{2k}/(2k)! S^{2k}`, i.e.
//! `b_1 = -1/2`.

use num_traits::{One, Zero};

use crate::rational::{binomial, Rational};

/// The `m`-th Bernoulli number (`b_1 = -1/2` convention).
pub fn bernoulli_number(m: usize) -> Rational {
    bernoulli_numbers(m).pop().unwrap()
}

/// `b_0, ..., b_m` via the recurrence `sum_{j=0}^{m} C(m+1, j) b_j = 0`.
pub fn bernoulli_numbers(m: usize) -> Vec<Rational> {
    let mut b = Vec::with_capacity(m + 1);
    b.push(Rational::one());
    for n in 1..=m {
        let mut acc = Rational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += binomial(n + 1, j) * bj;
        }
        b.push(-acc / binomial(n + 1, n));
    }
    b
}

/// Evaluate the `m`-th Bernoulli polynomial at a rational point:
/// `B_m(x) = sum_k C(m, k) b_k x^(m-k)`.
pub fn bernoulli_polynomial(m: usize, x: &Rational) -> Rational {
    coeffs_of_bernoulli_polynomial(m)
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Coefficients of `B_m`, constant term first.
pub fn coeffs_of_bernoulli_polynomial(m: usize) -> Vec<Rational> {
    let b = bernoulli_numbers(m);
    (0..=m).map(|i| binomial(m, m - i) * &b[m - i]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use crate::series::{todd_series, TruncatedSeries};
    use crate::cyclo::CycloNumber;

    // Oracle: expand t*e^(x t)/(e^t - 1) as a truncated series in t; the
    // coefficient of t^m is B_m(x)/m!.
    fn bernoulli_poly_oracle(m: usize, x: &Rational) -> Rational {
        let ord = m + 2;
        // e^(x t)
        let ext = TruncatedSeries::from_fn(ord, |n| {
            CycloNumber::from_rational(x.clone()).pow(n as i64).scale(
                &crate::rational::factorial(n).recip(),
            )
        });
        // (e^t - 1)/t
        let den = TruncatedSeries::from_fn(ord, |n| {
            CycloNumber::from_rational(crate::rational::factorial(n + 1).recip())
        });
        let series = ext.div(&den);
        series.coefficient(m).as_rational().unwrap() * crate::rational::factorial(m)
    }

    #[test]
    fn small_bernoulli_numbers() {
        assert_eq!(bernoulli_number(0), rat_int(1));
        assert_eq!(bernoulli_number(1), rat(-1, 2));
        assert_eq!(bernoulli_number(2), rat(1, 6));
        assert_eq!(bernoulli_number(4), rat(-1, 30));
        assert_eq!(bernoulli_number(6), rat(1, 42));
        assert_eq!(bernoulli_number(8), rat(-1, 30));
        assert_eq!(bernoulli_number(12), rat(-691, 2730));
    }

    #[test]
    fn odd_bernoulli_numbers_vanish() {
        for m in (3..=15usize).step_by(2) {
            assert!(bernoulli_number(m).is_zero(), "b_{m} should be 0");
        }
    }

    #[test]
    fn sign_convention_matches_todd_series_division() {
        // Dividing S by (1 - e^-S): linear coefficient must be +1/2 and the
        // S^2 coefficient 1/12 = b_2/2!.
        let td = todd_series(8);
        assert_eq!(td.coefficient(0).as_rational().unwrap(), rat_int(1));
        assert_eq!(td.coefficient(1).as_rational().unwrap(), rat(1, 2));
        assert_eq!(td.coefficient(2).as_rational().unwrap(), rat(1, 12));
        for m in (2..=8usize).step_by(2) {
            assert_eq!(
                td.coefficient(m).as_rational().unwrap(),
                bernoulli_number(m) / crate::rational::factorial(m),
                "S^{m} coefficient of the Todd series"
            );
        }
        // odd coefficients beyond S vanish
        for m in (3..=7usize).step_by(2) {
            assert!(td.coefficient(m).is_zero());
        }
    }

    #[test]
    fn bernoulli_polynomial_values() {
        // B_0 == 1
        assert_eq!(bernoulli_polynomial(0, &rat(7, 3)), rat_int(1));
        // B_1(x) = x - 1/2
        assert_eq!(bernoulli_polynomial(1, &rat_int(0)), rat(-1, 2));
        assert_eq!(bernoulli_polynomial(1, &rat(1, 4)), rat(-1, 4));
        // B_2(x) = x^2 - x + 1/6
        assert_eq!(bernoulli_polynomial(2, &rat(1, 2)), rat(-1, 12));
        // B_m(0) = b_m
        for m in [0usize, 2, 3, 4, 5, 6] {
            assert_eq!(bernoulli_polynomial(m, &rat_int(0)), bernoulli_number(m));
        }
    }

    #[test]
    fn bernoulli_polynomial_matches_generating_function_oracle() {
        for m in 0..=6usize {
            for x in [rat_int(0), rat(1, 2), rat(7, 3), rat(-2, 5)] {
                assert_eq!(
                    bernoulli_polynomial(m, &x),
                    bernoulli_poly_oracle(m, &x),
                    "B_{m}({x})"
                );
            }
        }
    }

    #[test]
    fn difference_identity() {
        // B_m(x+1) - B_m(x) = m x^(m-1)
        for m in 1..=6usize {
            for x in [rat(2, 3), rat_int(2), rat(-5, 7)] {
                let lhs = bernoulli_polynomial(m, &(&x + rat_int(1)))
                    - bernoulli_polynomial(m, &x);
                let mut pow = Rational::one();
                for _ in 0..(m - 1) {
                    pow *= &x;
                }
                assert_eq!(lhs, rat_int(m as i64) * pow);
            }
        }
    }
}
