//! Sparse multivariate polynomials with cyclotomic coefficients, used for
//! input polynomials in the space variables and for the dilation variables
//! of the shifted polytope.

use std::collections::BTreeMap;
use std::fmt;


use crate::cyclo::CycloNumber;
use crate::rational::{format_rational, Rational};

/// A polynomial in `nvars` variables; maps exponent vectors to nonzero
/// coefficients. Addition, multiplication and partial differentiation are
/// exact; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, CycloNumber>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: CycloNumber) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, CycloNumber::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, CycloNumber::one());
        p
    }

    pub fn monomial(nvars: usize, exponents: Vec<u32>, c: CycloNumber) -> Self {
        assert_eq!(exponents.len(), nvars);
        let mut p = Self::zero(nvars);
        p.add_term(exponents, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &CycloNumber)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: CycloNumber) {
        assert_eq!(exponents.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().add(&c);
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, c: &CycloNumber) -> Self {
        let mut out = Self::zero(self.nvars);
        if c.is_zero() {
            return out;
        }
        for (e, coef) in &self.terms {
            out.add_term(e.clone(), coef.mul(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.mul(cb));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact partial derivative in variable `var`.
    pub fn partial_derivative(&self, var: usize) -> Self {
        assert!(var < self.nvars);
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[var] -= 1;
            out.add_term(e2, c.scale(&Rational::from_integer(e[var].into())));
        }
        out
    }

    pub fn constant_term(&self) -> CycloNumber {
        self.terms
            .get(&vec![0; self.nvars])
            .cloned()
            .unwrap_or_else(CycloNumber::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    /// True iff the polynomial does not involve variable `var`.
    pub fn independent_of(&self, var: usize) -> bool {
        self.terms.keys().all(|e| e[var] == 0)
    }

    /// Substitute each variable by the given polynomial (all in the same
    /// target variable set).
    pub fn substitute(&self, values: &[MultiPoly]) -> MultiPoly {
        assert_eq!(values.len(), self.nvars);
        let target_vars = values.first().map(|p| p.nvars).unwrap_or(0);
        let mut out = MultiPoly::zero(target_vars);
        // memoized powers per variable
        let mut powers: Vec<Vec<MultiPoly>> =
            values.iter().map(|v| vec![MultiPoly::one(v.nvars)]).collect();
        for (e, c) in &self.terms {
            let mut term = MultiPoly::constant(target_vars, c.clone());
            for (i, &exp) in e.iter().enumerate() {
                while powers[i].len() <= exp as usize {
                    let next = powers[i].last().unwrap().mul(&values[i]);
                    powers[i].push(next);
                }
                if exp > 0 {
                    term = term.mul(&powers[i][exp as usize]);
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Evaluate at a rational point.
    pub fn eval_rational(&self, x: &[Rational]) -> CycloNumber {
        assert_eq!(x.len(), self.nvars);
        let mut acc = CycloNumber::zero();
        for (e, c) in &self.terms {
            let mut v = Rational::from_integer(1.into());
            for (xi, &ei) in x.iter().zip(e) {
                for _ in 0..ei {
                    v *= xi;
                }
            }
            acc = acc.add(&c.scale(&v));
        }
        acc
    }

    /// Restrict by setting variable `var` to zero.
    pub fn set_var_zero(&self, var: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                out.add_term(e.clone(), c.clone());
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (e, c) in &self.terms {
            let mut factors = Vec::new();
            let coeff = match c.as_rational() {
                Some(r) => format_rational(&r),
                None => format!("({c})"),
            };
            factors.push(coeff);
            for (i, &exp) in e.iter().enumerate() {
                if exp == 1 {
                    factors.push(format!("x{i}"));
                } else if exp > 1 {
                    factors.push(format!("x{i}^{exp}"));
                }
            }
            parts.push(factors.join("*"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn c(n: i64) -> CycloNumber {
        CycloNumber::from_int(n)
    }

    #[test]
    fn no_zero_terms_stored() {
        let x = MultiPoly::var(2, 0);
        let p = x.sub(&x);
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
        let q = MultiPoly::one(2).add(&MultiPoly::constant(2, c(-1)));
        assert!(q.is_zero());
    }

    #[test]
    fn arithmetic_and_derivative() {
        // p = (x + y)^2 = x^2 + 2xy + y^2
        let x = MultiPoly::var(2, 0);
        let y = MultiPoly::var(2, 1);
        let p = x.add(&y).pow(2);
        assert_eq!(p.num_terms(), 3);
        // d/dx p = 2x + 2y
        let dp = p.partial_derivative(0);
        assert_eq!(dp, x.add(&y).scale(&c(2)));
        assert_eq!(p.total_degree(), 2);
        assert!(p.partial_derivative(0).partial_derivative(1).constant_term() == c(2));
    }

    #[test]
    fn substitute_expands_affine_images() {
        // p(x, y) = x*y, substitute x = 1 + s, y = s - t (2 target vars)
        let p = MultiPoly::var(2, 0).mul(&MultiPoly::var(2, 1));
        let s = MultiPoly::var(2, 0);
        let t = MultiPoly::var(2, 1);
        let sub = p.substitute(&[MultiPoly::one(2).add(&s), s.sub(&t)]);
        // (1+s)(s-t) = s - t + s^2 - st
        let expect = s
            .sub(&t)
            .add(&s.pow(2))
            .sub(&s.mul(&t));
        assert_eq!(sub, expect);
    }

    #[test]
    fn eval_matches_substitution() {
        let p = MultiPoly::var(2, 0)
            .pow(2)
            .add(&MultiPoly::var(2, 1).scale(&c(3)));
        let v = p.eval_rational(&[rat(1, 2), rat(2, 3)]);
        assert_eq!(v.as_rational().unwrap(), rat(1, 4) + rat_int(2));
    }

    #[test]
    fn independence_and_restriction() {
        let p = MultiPoly::var(3, 0).add(&MultiPoly::var(3, 2));
        assert!(p.independent_of(1));
        assert!(!p.independent_of(0));
        let q = p.set_var_zero(0);
        assert_eq!(q, MultiPoly::var(3, 2));
    }
}
