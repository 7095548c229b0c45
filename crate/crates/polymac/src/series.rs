//! Exact truncated power series in one formal variable `S`, with cyclotomic
//! coefficients. These are the operator symbols of the summation formulas:
//! the Todd series, its weighted variant and the twisted variant.


use crate::bernoulli::bernoulli_numbers;
use crate::cyclo::CycloNumber;
use crate::error::Error;
use crate::rational::{factorial, rat};

/// A power series truncated at `order`: `coeffs[i]` is the coefficient of
/// `S^i`, `i <= order`. Ring operations truncate consistently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<CycloNumber>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { order, coeffs: vec![CycloNumber::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = CycloNumber::one();
        s
    }

    pub fn from_coeffs(order: usize, mut coeffs: Vec<CycloNumber>) -> Self {
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, CycloNumber::zero());
        TruncatedSeries { order, coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> CycloNumber) -> Self {
        TruncatedSeries { order, coeffs: (0..=order).map(f).collect() }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coefficient(&self, i: usize) -> CycloNumber {
        self.coeffs.get(i).cloned().unwrap_or_else(CycloNumber::zero)
    }

    pub fn coefficients(&self) -> &[CycloNumber] {
        &self.coeffs
    }

    /// Re-truncate (or zero-pad) to a new order.
    pub fn truncated(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        Self::from_fn(order, |i| self.coefficient(i).add(&other.coefficient(i)))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        Self::from_fn(order, |i| self.coefficient(i).sub(&other.coefficient(i)))
    }

    pub fn scale(&self, c: &CycloNumber) -> Self {
        Self::from_fn(self.order, |i| self.coefficient(i).mul(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut coeffs = vec![CycloNumber::zero(); order + 1];
        for i in 0..=order {
            if self.coefficient(i).is_zero() {
                continue;
            }
            for j in 0..=(order - i) {
                let t = self.coefficient(i).mul(&other.coefficient(j));
                coeffs[i + j] = coeffs[i + j].add(&t);
            }
        }
        TruncatedSeries { order, coeffs }
    }

    /// Multiplicative inverse; requires an invertible constant term.
    pub fn inv(&self) -> Self {
        assert!(!self.coefficient(0).is_zero(), "series with zero constant term");
        let c0_inv = self.coefficient(0).inv();
        let mut coeffs = vec![CycloNumber::zero(); self.order + 1];
        coeffs[0] = c0_inv.clone();
        for n in 1..=self.order {
            let mut acc = CycloNumber::zero();
            for k in 1..=n {
                acc = acc.add(&self.coefficient(k).mul(&coeffs[n - k]));
            }
            coeffs[n] = acc.neg().mul(&c0_inv);
        }
        TruncatedSeries { order: self.order, coeffs }
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    /// Substitute `S |-> -S`.
    pub fn compose_neg(&self) -> Self {
        Self::from_fn(self.order, |i| {
            if i % 2 == 0 {
                self.coefficient(i)
            } else {
                self.coefficient(i).neg()
            }
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

/// The Todd series `S/(1 - e^-S)` truncated at `order`, computed by exact
/// series division: `(1 - e^-S)/S = sum (-1)^n S^n/(n+1)!`, inverted.
pub fn todd_series(order: usize) -> TruncatedSeries {
    let den = TruncatedSeries::from_fn(order, |n| {
        let c = factorial(n + 1).recip();
        let c = if n % 2 == 0 { c } else { -c };
        CycloNumber::from_rational(c)
    });
    den.inv()
}

/// The weighted Todd series truncated at the even order `order2`:
/// `1 + (q - 1/2) S + sum_{j=1..order2/2} b_{2j}/(2j)! S^{2j}`.
///
/// Equivalently `(q - 1) S + Td(S)` truncated at `order2` (the tests assert
/// both routes agree).
pub fn weighted_todd_series(q: &CycloNumber, order2: usize) -> TruncatedSeries {
    assert!(order2.is_multiple_of(2), "truncation order of the weighted Todd series must be even");
    let b = bernoulli_numbers(order2);
    let mut s = TruncatedSeries::zero(order2);
    let mut coeffs = vec![CycloNumber::zero(); order2 + 1];
    coeffs[0] = CycloNumber::one();
    if order2 >= 1 {
        coeffs[1] = q.sub(&CycloNumber::from_rational(rat(1, 2)));
    }
    for j in 1..=(order2 / 2) {
        coeffs[2 * j] = CycloNumber::from_rational(&b[2 * j] / factorial(2 * j));
    }
    s.coeffs = coeffs;
    s
}

/// The twisted weighted series truncated at `k`:
/// for a root of unity `lambda != 1`, `(q - 1) S + S/(1 - lambda e^-S)`,
/// with every coefficient in the cyclotomic field of `lambda`; the constant
/// term is zero. For `lambda == 1` this delegates to the weighted Todd
/// series truncated at `2*floor(k/2)`.
pub fn twisted_todd_series(
    q: &CycloNumber,
    lambda: &CycloNumber,
    k: usize,
) -> Result<TruncatedSeries, Error> {
    assert!(k >= 1, "truncation order must be positive");
    if lambda.root_of_unity_order().is_none() {
        return Err(Error::NotRootOfUnity { value: lambda.to_string() });
    }
    if lambda.is_one() {
        return Ok(weighted_todd_series(q, 2 * (k / 2)));
    }
    // 1 - lambda e^-S = (1 - lambda) + lambda S - lambda S^2/2 + ...
    let den = TruncatedSeries::from_fn(k, |n| {
        if n == 0 {
            CycloNumber::one().sub(lambda)
        } else {
            let c = factorial(n).recip();
            let c = if n % 2 == 0 { -c } else { c };
            lambda.scale(&c)
        }
    });
    let inv = den.inv();
    // T(lambda, S) = S * inv : shift coefficients up by one
    let mut coeffs = vec![CycloNumber::zero(); k + 1];
    #[allow(clippy::needless_range_loop)]
    for i in 1..=k {
        coeffs[i] = inv.coefficient(i - 1);
    }
    coeffs[1] = coeffs[1].add(&q.sub(&CycloNumber::one()));
    Ok(TruncatedSeries { order: k, coeffs })
}
