//! Exact arithmetic in cyclotomic fields.
//!
//! A [`CycloNumber`] represents an element of the field obtained by adjoining
//! a primitive `L`-th root of unity `z` to the rationals, written in the
//! power basis `1, z, ..., z^(phi(L)-1)` and reduced modulo the `L`-th
//! cyclotomic polynomial. Because that polynomial is irreducible over the
//! rationals, the representation is canonical: two equal field elements have
//! identical coefficient vectors, and an element is rational iff its
//! non-constant coefficients vanish.
//!
//! Elements of different orders interoperate by embedding into the field of
//! order `lcm` of the two orders (`z_K |-> z_L^(L/K)`).

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::rational::{format_rational, lcm_u64, parse_rational, Rational};

pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

// ---- dense rational polynomials (internal helpers) -------------------------

fn poly_trim(p: &mut Vec<Rational>) {
    while p.len() > 1 && p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    poly_trim(&mut out);
    out
}

/// Quotient and remainder by a nonzero divisor (synthetic long division).
fn poly_divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = num.to_vec();
    poly_trim(&mut rem);
    let mut den = den.to_vec();
    poly_trim(&mut den);
    assert!(!den.iter().all(|c| c.is_zero()), "division by zero polynomial");
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    if rem.len() - 1 < dd {
        return (vec![Rational::zero()], rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - dd];
    for rd in (dd..rem.len()).rev() {
        let f = &rem[rd] / &lead;
        if f.is_zero() {
            continue;
        }
        quot[rd - dd] = f.clone();
        for i in 0..=dd {
            let v = &rem[rd - dd + i] - &f * &den[i];
            rem[rd - dd + i] = v;
        }
    }
    poly_trim(&mut quot);
    poly_trim(&mut rem);
    (quot, rem)
}

/// Extended gcd `s*a + t*b = g` over the rational polynomial ring
/// (only `s` and `g` are tracked; `g` is made monic).
fn poly_ext_gcd_s(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    poly_trim(&mut r0);
    poly_trim(&mut r1);
    let mut s0 = vec![Rational::one()];
    let mut s1 = vec![Rational::zero()];
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = poly_divmod(&r0, &r1);
        let qs1 = poly_mul(&q, &s1);
        let mut s_new = vec![Rational::zero(); s0.len().max(qs1.len())];
        for (i, c) in s0.iter().enumerate() {
            s_new[i] += c;
        }
        for (i, c) in qs1.iter().enumerate() {
            s_new[i] -= c;
        }
        poly_trim(&mut s_new);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s_new);
    }
    // normalize g monic
    let lead = r0.last().unwrap().clone();
    if !lead.is_one() {
        for c in r0.iter_mut() {
            *c /= lead.clone();
        }
        for c in s0.iter_mut() {
            *c /= lead.clone();
        }
    }
    (s0, r0)
}

/// The `L`-th cyclotomic polynomial as a dense coefficient vector
/// (constant term first, monic). Computed by dividing `x^L - 1` by the
/// cyclotomic polynomials of all proper divisors of `L`; memoized.
pub fn cyclotomic_polynomial(l: u64) -> Vec<Rational> {
    assert!(l >= 1);
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<Rational>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&l) {
        return p.clone();
    }
    let poly = if l == 1 {
        vec![-Rational::one(), Rational::one()]
    } else {
        let mut num = vec![Rational::zero(); (l + 1) as usize];
        num[0] = -Rational::one();
        num[l as usize] = Rational::one();
        let mut p = num;
        for d in divisors(l) {
            if d == l {
                continue;
            }
            let phi_d = cyclotomic_polynomial(d);
            let (q, r) = poly_divmod(&p, &phi_d);
            assert!(r.iter().all(|c| c.is_zero()), "x^L - 1 not divisible by Phi_d");
            p = q;
        }
        p
    };
    assert_eq!(poly.len() as u64 - 1, euler_phi(l));
    cache.lock().unwrap().insert(l, poly.clone());
    poly
}

// ---- cyclotomic numbers -----------------------------------------------------

/// An element of the cyclotomic field of order `order`, in the power basis
/// reduced modulo the cyclotomic polynomial. `coeffs.len() == phi(order)`.
#[derive(Debug, Clone)]
pub struct CycloNumber {
    order: u64,
    coeffs: Vec<Rational>,
}

impl CycloNumber {
    pub fn zero() -> Self {
        CycloNumber { order: 1, coeffs: vec![Rational::zero()] }
    }

    pub fn one() -> Self {
        CycloNumber { order: 1, coeffs: vec![Rational::one()] }
    }

    pub fn from_rational(r: Rational) -> Self {
        CycloNumber { order: 1, coeffs: vec![r] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(crate::rational::rat_int(n))
    }

    /// Construct from raw power-basis coefficients in the field of `order`;
    /// reduces modulo the cyclotomic polynomial if too long, pads if short.
    pub fn from_coeffs(order: u64, coeffs: Vec<Rational>) -> Self {
        let deg = euler_phi(order) as usize;
        let mut c = coeffs;
        if c.len() > deg {
            let phi = cyclotomic_polynomial(order);
            let (_, r) = poly_divmod(&c, &phi);
            c = r;
        }
        c.resize(deg, Rational::zero());
        CycloNumber { order, coeffs: c }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The root of unity `e^(2*pi*i*j/k)` represented in its own field of
    /// order `k` (negative `j` allowed).
    pub fn root_of_unity(j: i64, k: u64) -> Self {
        assert!(k >= 1);
        let jm = j.rem_euclid(k as i64) as u64;
        let mut coeffs = vec![Rational::zero(); jm as usize + 1];
        coeffs[jm as usize] = Rational::one();
        Self::from_coeffs(k, coeffs)
    }

    /// Canonical representation of `e^(2*pi*i*j/k)` inside the field of order
    /// `l`; requires `k | l`.
    pub fn root_of_unity_in(j: i64, k: u64, l: u64) -> Result<Self, Error> {
        if k == 0 || !l.is_multiple_of(k) {
            return Err(Error::IncompatibleOrder { needed: k, working: l });
        }
        Ok(Self::root_of_unity(j, k).promote(l).expect("k | l"))
    }

    /// `e^(2*pi*i*x)` for a rational `x`, in the field of order `denom(x)`.
    pub fn unit_from_exponent(x: &Rational) -> Self {
        let k: u64 = x.denom().try_into().expect("exponent denominator fits in u64");
        let j: i64 = (x.numer() % x.denom()).try_into().expect("reduced numerator fits");
        Self::root_of_unity(j, k)
    }

    /// Embed into the field of order `l` (requires `order | l`).
    pub fn promote(&self, l: u64) -> Result<Self, Error> {
        if !l.is_multiple_of(self.order) {
            return Err(Error::IncompatibleOrder { needed: self.order, working: l });
        }
        if l == self.order {
            return Ok(self.clone());
        }
        let step = (l / self.order) as usize;
        let mut raw = vec![Rational::zero(); self.coeffs.len() * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            raw[i * step] = c.clone();
        }
        Ok(Self::from_coeffs(l, raw))
    }

    fn unify(&self, other: &Self) -> (Self, Self) {
        if self.order == other.order {
            return (self.clone(), other.clone());
        }
        let l = lcm_u64(self.order, other.order);
        (self.promote(l).unwrap(), other.promote(l).unwrap())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// True iff all non-constant coefficients are zero.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.unify(other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (mut a, b) = self.unify(other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x -= y;
        }
        a
    }

    pub fn neg(&self) -> Self {
        let mut a = self.clone();
        for x in a.coeffs.iter_mut() {
            *x = -x.clone();
        }
        a
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.unify(other);
        let prod = poly_mul(&a.coeffs, &b.coeffs);
        Self::from_coeffs(a.order, prod)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut a = self.clone();
        for x in a.coeffs.iter_mut() {
            *x *= r;
        }
        a
    }

    /// Multiplicative inverse via the extended Euclidean algorithm modulo the
    /// (irreducible) cyclotomic polynomial. Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero cyclotomic number");
        if self.is_rational() {
            return Self::from_rational(self.coeffs[0].recip());
        }
        let phi = cyclotomic_polynomial(self.order);
        let (s, g) = poly_ext_gcd_s(&self.coeffs, &phi);
        assert!(
            g.len() == 1 && g[0].is_one(),
            "cyclotomic polynomial must be coprime to any nonzero element"
        );
        Self::from_coeffs(self.order, s)
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        acc
    }

    /// Multiplicative order if this is a root of unity in its field, else
    /// `None`. Roots of unity of the field of order `L` have order dividing
    /// `lcm(2, L)`.
    pub fn root_of_unity_order(&self) -> Option<u64> {
        let bound = lcm_u64(2, self.order);
        let mut pow = self.clone();
        for n in 1..=bound {
            if pow.is_one() {
                return Some(n);
            }
            pow = pow.mul(self);
        }
        None
    }
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.unify(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycloNumber {}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{}", format_rational(&r));
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = match i {
                0 => format_rational(c),
                1 => format!("{}*z", format_rational(c)),
                _ => format!("{}*z^{}", format_rational(c), i),
            };
            parts.push(term);
        }
        write!(f, "{} (z = root of unity of order {})", parts.join(" + "), self.order)
    }
}

/// Serialization form: `{ "order": L, "coeffs": ["p/q", ...] }`.
#[derive(Serialize, Deserialize)]
struct CycloRepr {
    order: u64,
    coeffs: Vec<String>,
}

impl Serialize for CycloNumber {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CycloRepr {
            order: self.order,
            coeffs: self.coeffs.iter().map(format_rational).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycloNumber {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = CycloRepr::deserialize(d)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CycloNumber::from_coeffs(repr.order, coeffs))
    }
}

/// Sum of an iterator of cyclotomic numbers.
pub fn cyclo_sum<I: IntoIterator<Item = CycloNumber>>(iter: I) -> CycloNumber {
    iter.into_iter().fold(CycloNumber::zero(), |a, b| a.add(&b))
}
