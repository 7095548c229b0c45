//! Periodic remainder kernels: the periodic Bernoulli functions
//! `B_m({x})/m!` and their twisted analogues for a root of unity
//! `lambda != 1`, built by exact piecewise antidifferentiation with zero-mean
//! normalization. Coefficients live in the cyclotomic field of `lambda` so
//! every remainder integral below stays exact.


use crate::bernoulli::{bernoulli_polynomial, coeffs_of_bernoulli_polynomial};
use crate::cyclo::CycloNumber;
use crate::error::Error;
use crate::rational::{factorial, floor_int, frac, rat_int, Rational};
use crate::spline::Poly1;

// ---- univariate polynomials with cyclotomic coefficients --------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CPoly {
    pub coeffs: Vec<CycloNumber>,
}

impl CPoly {
    pub fn zero() -> Self {
        CPoly { coeffs: vec![CycloNumber::zero()] }
    }

    pub fn constant(c: CycloNumber) -> Self {
        CPoly { coeffs: vec![c] }
    }

    pub fn from_rational_poly(p: &Poly1) -> Self {
        CPoly {
            coeffs: p
                .coeffs
                .iter()
                .map(|c| CycloNumber::from_rational(c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, x: &Rational) -> CycloNumber {
        let mut acc = CycloNumber::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.scale(x).add(c);
        }
        acc
    }

    pub fn add(&self, other: &CPoly) -> CPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![CycloNumber::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] = coeffs[i].add(c);
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] = coeffs[i].add(c);
        }
        CPoly { coeffs }
    }

    pub fn mul(&self, other: &CPoly) -> CPoly {
        let mut coeffs =
            vec![CycloNumber::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        CPoly { coeffs }
    }

    pub fn scale(&self, c: &CycloNumber) -> CPoly {
        CPoly { coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect() }
    }

    pub fn derivative(&self) -> CPoly {
        if self.coeffs.len() == 1 {
            return CPoly::zero();
        }
        CPoly {
            coeffs: self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c.scale(&rat_int(i as i64 + 1)))
                .collect(),
        }
    }

    pub fn antiderivative(&self) -> CPoly {
        let mut coeffs = vec![CycloNumber::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i + 1] = c.scale(&rat_int(i as i64 + 1).recip());
        }
        CPoly { coeffs }
    }

    pub fn integral_on(&self, a: &Rational, b: &Rational) -> CycloNumber {
        let f = self.antiderivative();
        f.eval(b).sub(&f.eval(a))
    }

    /// Compose with `x -> x + t`.
    pub fn compose_shift(&self, t: &Rational) -> CPoly {
        let mut acc = CPoly::zero();
        let lin = CPoly {
            coeffs: vec![
                CycloNumber::from_rational(t.clone()),
                CycloNumber::one(),
            ],
        };
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&CPoly::constant(c.clone()));
        }
        acc
    }
}

// ---- periodic kernels --------------------------------------------------------

/// A `period`-periodic piecewise polynomial: on `[n, n+1)` the value is
/// `pieces[n mod period](x - n)`.
#[derive(Debug, Clone)]
pub struct PeriodicPiece {
    pub period: u64,
    pub pieces: Vec<CPoly>,
}

impl PeriodicPiece {
    pub fn value(&self, x: &Rational) -> CycloNumber {
        let n = floor_int(x);
        let idx: usize = (((&n % self.period as i64) + self.period as i64)
            % self.period as i64)
            .try_into()
            .unwrap();
        self.pieces[idx].eval(&frac(x))
    }

    /// Piece valid on `[n, n+1)` expressed in the absolute coordinate
    /// (composed with `x -> x - n`).
    pub fn piece_on_unit_interval(&self, n: &num_bigint::BigInt) -> CPoly {
        let idx: usize = (((n % self.period as i64) + self.period as i64)
            % self.period as i64)
            .try_into()
            .unwrap();
        let shift = -Rational::from_integer(n.clone());
        self.pieces[idx].compose_shift(&shift)
    }

    pub fn integral_over_period(&self) -> CycloNumber {
        let mut acc = CycloNumber::zero();
        for p in &self.pieces {
            acc = acc.add(&p.integral_on(&rat_int(0), &rat_int(1)));
        }
        acc
    }
}

/// `B_m({x})/m!` as an exact rational.
pub fn periodic_bernoulli(m: usize, x: &Rational) -> Rational {
    assert!(m >= 1);
    bernoulli_polynomial(m, &frac(x)) / factorial(m)
}

/// The periodic Bernoulli kernel as a period-1 piecewise polynomial.
pub fn periodic_bernoulli_kernel(m: usize) -> PeriodicPiece {
    assert!(m >= 1);
    let coeffs = coeffs_of_bernoulli_polynomial(m);
    let inv = factorial(m).recip();
    let piece = CPoly {
        coeffs: coeffs
            .into_iter()
            .map(|c| CycloNumber::from_rational(c * &inv))
            .collect(),
    };
    PeriodicPiece { period: 1, pieces: vec![piece] }
}

/// The twisted kernel for a root of unity `lambda != 1` of order `K`:
/// the base case is the piecewise constant `lambda/(1-lambda) * lambda^n` on
/// `[n, n+1)`; each next kernel is the piecewise antiderivative, continuous
/// at the junctions, normalized to zero mean over one period.
pub fn twisted_kernel(m: usize, lambda: &CycloNumber) -> Result<PeriodicPiece, Error> {
    assert!(m >= 1);
    if lambda.is_one() {
        return Err(Error::LambdaIsOne);
    }
    let Some(k) = lambda.root_of_unity_order() else {
        return Err(Error::NotRootOfUnity { value: lambda.to_string() });
    };
    let factor = lambda.mul(&CycloNumber::one().sub(lambda).inv());
    let mut pieces: Vec<CPoly> = (0..k)
        .map(|n| CPoly::constant(factor.mul(&lambda.pow(n as i64))))
        .collect();
    for _ in 1..m {
        let antis: Vec<CPoly> = pieces.iter().map(|p| p.antiderivative()).collect();
        // continuity at the junctions: c_{n+1} = c_n + (anti_n(1) - anti_n(0))
        let mut consts = vec![CycloNumber::zero()];
        for n in 0..(k as usize - 1) {
            let jump = antis[n].eval(&rat_int(1)).sub(&antis[n].eval(&rat_int(0)));
            consts.push(consts[n].add(&jump));
        }
        // zero-mean normalization over [0, K]
        let mut total = CycloNumber::zero();
        for (n, anti) in antis.iter().enumerate() {
            total = total
                .add(&anti.integral_on(&rat_int(0), &rat_int(1)))
                .add(&consts[n]);
        }
        let c0 = total.scale(&rat_int(k as i64).recip()).neg();
        pieces = antis
            .into_iter()
            .zip(consts)
            .map(|(anti, c)| anti.add(&CPoly::constant(c.add(&c0))))
            .collect();
    }
    Ok(PeriodicPiece { period: k, pieces })
}

/// Value of the twisted kernel at `0` (from the piece on `[0, 1)`).
pub fn twisted_kernel_at_zero(m: usize, lambda: &CycloNumber) -> Result<CycloNumber, Error> {
    Ok(twisted_kernel(m, lambda)?.pieces[0].eval(&rat_int(0)))
}
