//! Exact one-dimensional weighted and twisted Euler-Maclaurin identities
//! with remainder, for spline test functions: finite interval, half-rays,
//! the whole line, the twisted half-ray, and tensor-product sectors in
//! several variables. Every report asserts an equality of field elements.
//!
//! Main terms arise from operator series acting on the integral over the
//! dilated domain. For rays the differentiation rule is applied directly
//! (`d^r/dh^r` of the integral from `a - h` is `(-1)^(r-1) f^(r-1)(a)`);
//! for the finite interval the bivariate dilation polynomial is materialized
//! and differentiated term by term.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::cyclo::CycloNumber;
use crate::error::Error;
use crate::multipoly::MultiPoly;
use crate::periodic::{periodic_bernoulli_kernel, twisted_kernel, CPoly, PeriodicPiece};
use crate::rational::{rat_int, Rational};
use crate::series::{twisted_todd_series, weighted_todd_series, TruncatedSeries};
use crate::spline::{Poly1, Spline1D};

/// Both sides of one identity, all exact.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub kind: String,
    pub lhs: CycloNumber,
    pub main: CycloNumber,
    pub remainder: CycloNumber,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.main.add(&self.remainder)
    }
}

/// Operator series for a remainder of order `m`: the weighted Todd series
/// truncated at `2*floor(m/2)`, except that the weighted linear term is
/// always kept. At `m = 1` the plain even truncation would be the constant
/// `1`, and the identity with the order-1 periodic kernel then forces the
/// boundary weight `1/2`; retaining the linear term makes the identity hold
/// for every weight (the exactness tests check this at each `m`).
fn operator_series(q: &CycloNumber, m: usize) -> TruncatedSeries {
    if m == 1 {
        weighted_todd_series(q, 2).truncated(1)
    } else {
        weighted_todd_series(q, 2 * (m / 2))
    }
}

fn require_class(f: &Spline1D, order: usize) -> Result<(), Error> {
    // Integrating by parts `order` times needs the (order-1)-th derivative
    // absolutely continuous, i.e. order <= smoothness + 1.
    if (order as i64) > f.smoothness() + 1 {
        return Err(Error::SmoothnessTooLow {
            required: order,
            required_class: order as i64 - 1,
            got: f.smoothness(),
        });
    }
    Ok(())
}

fn integer_support_range(f: &Spline1D) -> (BigInt, BigInt) {
    let (lo, hi) = f.support();
    (lo.ceil().to_integer(), hi.floor().to_integer())
}

/// `sum over integers n in [lo, hi] of coeff(n) * f(n)`.
fn integer_sum(
    f: &Spline1D,
    lo: &BigInt,
    hi: &BigInt,
    mut coeff: impl FnMut(&BigInt) -> CycloNumber,
) -> CycloNumber {
    let mut acc = CycloNumber::zero();
    let mut n = lo.clone();
    while &n <= hi {
        let v = f.eval(&Rational::from_integer(n.clone()));
        if !v.is_zero() {
            acc = acc.add(&coeff(&n).scale(&v));
        }
        n += 1;
    }
    acc
}

/// Exact integral of `kernel(x) * g(x)` over `[a, b] (clipped to the support
/// of g)`, on the common refinement of integer points and spline breakpoints.
pub fn integral_kernel_times_spline(
    kernel: &PeriodicPiece,
    g: &Spline1D,
    a: Option<&Rational>,
    b: Option<&Rational>,
) -> CycloNumber {
    let (slo, shi) = g.support();
    let lo = match a {
        Some(x) => slo.max(x.clone()),
        None => slo,
    };
    let hi = match b {
        Some(x) => shi.min(x.clone()),
        None => shi,
    };
    if lo >= hi {
        return CycloNumber::zero();
    }
    // refinement: spline breakpoints, integers, and the clip bounds
    let mut cuts: Vec<Rational> = g
        .breakpoints()
        .iter()
        .filter(|t| **t > lo && **t < hi)
        .cloned()
        .collect();
    let mut n = lo.ceil().to_integer();
    while Rational::from_integer(n.clone()) < hi {
        let r = Rational::from_integer(n.clone());
        if r > lo {
            cuts.push(r);
        }
        n += 1;
    }
    cuts.push(lo.clone());
    cuts.push(hi.clone());
    cuts.sort();
    cuts.dedup();

    let mut acc = CycloNumber::zero();
    for w in cuts.windows(2) {
        let (u, v) = (&w[0], &w[1]);
        let nfloor = u.floor().to_integer();
        let kpiece = kernel.piece_on_unit_interval(&nfloor);
        let gpiece = match g.breakpoints().iter().rposition(|t| t <= u) {
            Some(i) if i < g.pieces().len() => CPoly::from_rational_poly(&g.pieces()[i]),
            _ => CPoly::zero(),
        };
        acc = acc.add(&kpiece.mul(&gpiece).integral_on(u, v));
    }
    acc
}

/// Cumulative antiderivative piece of `f` valid just left of `y` (the
/// polynomial `Y -> integral of f from -infinity to Y` on the piece ending
/// at `y`).
fn antiderivative_piece_left(f: &Spline1D, y: &Rational) -> Poly1 {
    antiderivative_piece(f, y, true)
}

/// The same, valid just right of `y`.
fn antiderivative_piece_right(f: &Spline1D, y: &Rational) -> Poly1 {
    antiderivative_piece(f, y, false)
}

fn antiderivative_piece(f: &Spline1D, y: &Rational, left: bool) -> Poly1 {
    let bps = f.breakpoints();
    let k = f.pieces().len();
    // piece index valid on the requested side of y
    let idx = if left {
        bps.iter().rposition(|t| t < y)
    } else {
        bps.iter().rposition(|t| t <= y)
    };
    match idx {
        None => Poly1::zero(), // entirely left of the support
        Some(i) if i >= k => Poly1::constant(f.total_integral()),
        Some(i) => {
            // F(Y) = mass before piece i + anti_i(Y) - anti_i(t_i)
            let mut mass = Rational::zero();
            for j in 0..i {
                mass += f.pieces()[j].integral_on(&bps[j], &bps[j + 1]);
            }
            let anti = f.pieces()[i].antiderivative();
            let c = mass - anti.eval(&bps[i]);
            anti.add(&Poly1::constant(c))
        }
    }
}

/// Boundary contribution of a ray operator applied at `a`:
/// `sum_{r >= 1} c_r * sign^(r-1) * f^(r-1)(a)` where `sign = -1` for the
/// right ray (integral from `a - h`) and `+1` for the left ray.
fn boundary_sum(f: &Spline1D, a: &Rational, series: &TruncatedSeries, right_ray: bool) -> CycloNumber {
    let mut acc = CycloNumber::zero();
    let mut deriv = f.clone();
    for r in 1..=series.order() {
        let c = series.coefficient(r);
        if !c.is_zero() {
            let v = deriv.eval(a);
            let signed = if right_ray && (r - 1) % 2 == 1 { -v } else { v };
            acc = acc.add(&c.scale(&signed));
        }
        deriv = deriv.derivative();
    }
    acc
}

/// Weighted identity on `[a, b]`: weight `q_a` at `a`, `q_b` at `b`, interior
/// samples at weight 1; the main term applies the weighted operator series
/// in both dilation variables to the materialized dilation polynomial of
/// `integral from a - h1 to b + h2`.
pub fn em_interval(
    f: &Spline1D,
    a: i64,
    b: i64,
    q_a: &CycloNumber,
    q_b: &CycloNumber,
    m: usize,
) -> Result<IdentityReport, Error> {
    assert!(a < b, "need a < b");
    assert!(m >= 1);
    require_class(f, m)?;

    let lhs = integer_sum(f, &BigInt::from(a), &BigInt::from(b), |n| {
        if *n == BigInt::from(a) {
            q_a.clone()
        } else if *n == BigInt::from(b) {
            q_b.clone()
        } else {
            CycloNumber::one()
        }
    });

    // dilation polynomial: F_right(b + h2) - F_left(a - h1), materialized in
    // the two dilation variables
    let ra = rat_int(a);
    let rb = rat_int(b);
    let f_left = antiderivative_piece_left(f, &ra);
    let f_right = antiderivative_piece_right(f, &rb);
    let at_b = f_right.compose_affine(&Rational::from_integer(1.into()), &rb); // in h2
    let at_a = f_left.compose_affine(&rat_int(-1), &ra); // in h1
    let mut poly = MultiPoly::zero(2);
    for (i, c) in at_b.coeffs.iter().enumerate() {
        poly.add_term(vec![0, i as u32], CycloNumber::from_rational(c.clone()));
    }
    for (i, c) in at_a.coeffs.iter().enumerate() {
        poly.add_term(
            vec![i as u32, 0],
            CycloNumber::from_rational(c.clone()).neg(),
        );
    }
    let sa = operator_series(q_a, m);
    let sb = operator_series(q_b, m);
    let poly = apply_series_in_var(&sa, &poly, 0);
    let poly = apply_series_in_var(&sb, &poly, 1);
    let main = poly.constant_term();

    let remainder = interval_remainder(f, Some(&ra), Some(&rb), m);
    Ok(IdentityReport { kind: format!("interval [{a}, {b}]"), lhs, main, remainder })
}

/// `(-1)^(m-1) * integral of P_m(x) f^(m)(x)` over the clipped range.
fn interval_remainder(
    f: &Spline1D,
    a: Option<&Rational>,
    b: Option<&Rational>,
    m: usize,
) -> CycloNumber {
    let kernel = periodic_bernoulli_kernel(m);
    let mut fm = f.clone();
    for _ in 0..m {
        fm = fm.derivative();
    }
    let integral = integral_kernel_times_spline(&kernel, &fm, a, b);
    if (m - 1).is_multiple_of(2) {
        integral
    } else {
        integral.neg()
    }
}

/// Apply a series of derivatives in one variable of a multivariate
/// polynomial: `sum_r c_r * d^r/dx_var^r`.
pub fn apply_series_in_var(
    series: &TruncatedSeries,
    poly: &MultiPoly,
    var: usize,
) -> MultiPoly {
    let mut acc = MultiPoly::zero(poly.nvars());
    let mut deriv = poly.clone();
    for r in 0..=series.order() {
        let c = series.coefficient(r);
        if !c.is_zero() {
            acc = acc.add(&deriv.scale(&c));
        }
        if r < series.order() {
            deriv = deriv.partial_derivative(var);
            if deriv.is_zero() {
                break;
            }
        }
    }
    acc
}

/// Weighted identity on the half-ray `[a, infinity)`.
pub fn em_halfray(
    f: &Spline1D,
    a: i64,
    q: &CycloNumber,
    m: usize,
) -> Result<IdentityReport, Error> {
    assert!(m >= 1);
    require_class(f, m)?;
    let (_, hi) = integer_support_range(f);
    let ra = rat_int(a);

    let lhs = integer_sum(f, &BigInt::from(a), &hi.max(BigInt::from(a)), |n| {
        if *n == BigInt::from(a) {
            q.clone()
        } else {
            CycloNumber::one()
        }
    });
    let series = operator_series(q, m);
    let (_, send) = f.support();
    let tail = f.integral_on(&ra.clone().min(send.clone()), &send);
    let main = CycloNumber::from_rational(tail).add(&boundary_sum(f, &ra, &series, true));
    let remainder = interval_remainder(f, Some(&ra), None, m);
    Ok(IdentityReport { kind: format!("half-ray [{a}, inf)"), lhs, main, remainder })
}

/// Weighted identity on the half-ray `(-infinity, a]`.
pub fn em_halfray_left(
    f: &Spline1D,
    a: i64,
    q: &CycloNumber,
    m: usize,
) -> Result<IdentityReport, Error> {
    assert!(m >= 1);
    require_class(f, m)?;
    let (lo, _) = integer_support_range(f);
    let ra = rat_int(a);

    let lhs = integer_sum(f, &lo.min(BigInt::from(a)), &BigInt::from(a), |n| {
        if *n == BigInt::from(a) {
            q.clone()
        } else {
            CycloNumber::one()
        }
    });
    let series = operator_series(q, m);
    let (sstart, _) = f.support();
    let head = f.integral_on(&sstart, &ra.clone().max(sstart.clone()));
    let main = CycloNumber::from_rational(head).add(&boundary_sum(f, &ra, &series, false));
    let remainder = interval_remainder(f, None, Some(&ra), m);
    Ok(IdentityReport { kind: format!("half-ray (-inf, {a}]"), lhs, main, remainder })
}

/// Identity on the whole line: plain sum, plain integral, one remainder.
pub fn em_line(f: &Spline1D, m: usize) -> Result<IdentityReport, Error> {
    assert!(m >= 1);
    require_class(f, m)?;
    let (lo, hi) = integer_support_range(f);
    let lhs = integer_sum(f, &lo, &hi, |_| CycloNumber::one());
    let main = CycloNumber::from_rational(f.total_integral());
    let remainder = interval_remainder(f, None, None, m);
    Ok(IdentityReport { kind: "whole line".into(), lhs, main, remainder })
}

/// Twisted identity on `[0, infinity)` for a root of unity `lambda != 1`:
/// `q f(0) + sum_{n >= 1} lambda^n f(n)` equals the twisted operator applied
/// to the dilated ray integral plus the twisted-kernel remainder, all in the
/// cyclotomic field of `lambda`.
pub fn em_twisted_halfray(
    f: &Spline1D,
    lambda: &CycloNumber,
    q: &CycloNumber,
    k: usize,
) -> Result<IdentityReport, Error> {
    assert!(k >= 1);
    if lambda.is_one() {
        return Err(Error::LambdaIsOne);
    }
    require_class(f, k)?;
    let (_, hi) = integer_support_range(f);
    let lhs = integer_sum(f, &BigInt::zero(), &hi.max(BigInt::zero()), |n| {
        if n.is_zero() {
            q.clone()
        } else {
            lambda.pow(i64::try_from(n).expect("desk-scale support"))
        }
    });
    let series = twisted_todd_series(q, lambda, k)?;
    // the twisted series has zero constant term, so the main term is pure
    // boundary data at 0
    let main = boundary_sum(f, &rat_int(0), &series, true);
    let kernel = twisted_kernel(k, lambda)?;
    let mut fk = f.clone();
    for _ in 0..k {
        fk = fk.derivative();
    }
    let integral =
        integral_kernel_times_spline(&kernel, &fk, Some(&rat_int(0)), None);
    let remainder = if (k - 1).is_multiple_of(2) { integral } else { integral.neg() };
    Ok(IdentityReport { kind: format!("twisted half-ray, k = {k}"), lhs, main, remainder })
}

/// Tensor-product sector identity report.
#[derive(Debug, Clone)]
pub struct SectorReport {
    pub per_axis: Vec<IdentityReport>,
    /// Product of the per-axis main terms: the sector operator applied to
    /// the dilated sector integral.
    pub main: CycloNumber,
    /// All cross terms involving at least one per-axis remainder.
    pub remainder: CycloNumber,
    /// Weighted lattice sum over the sector, by direct grid enumeration.
    pub lhs_enumerated: CycloNumber,
}

impl SectorReport {
    pub fn holds(&self) -> bool {
        let product: CycloNumber = self
            .per_axis
            .iter()
            .fold(CycloNumber::one(), |acc, r| acc.mul(&r.lhs));
        product == self.main.add(&self.remainder) && product == self.lhs_enumerated
    }
}

/// Identity for the standard sector `{x : x_j >= 0 for j in sector_axes}`
/// and the tensor function `prod_i f_i(x_i)`: the main term is the product
/// of per-axis main operators, the remainder collects every cross term, and
/// the total is checked against direct enumeration of the weighted lattice
/// sum.
pub fn em_sector_tensor(
    sector_axes: &[usize],
    factors: &[Spline1D],
    weights: &[CycloNumber],
    m: usize,
) -> Result<SectorReport, Error> {
    let d = factors.len();
    assert_eq!(weights.len(), d, "one weight per axis (used on sector axes)");
    assert!(sector_axes.iter().all(|&j| j < d));
    let mut per_axis = Vec::with_capacity(d);
    for (i, f) in factors.iter().enumerate() {
        let rep = if sector_axes.contains(&i) {
            em_halfray(f, 0, &weights[i], m)?
        } else {
            em_line(f, m)?
        };
        per_axis.push(rep);
    }
    let main = per_axis.iter().fold(CycloNumber::one(), |acc, r| acc.mul(&r.main));
    // cross terms: every nonempty subset of axes contributes its remainders
    let mut remainder = CycloNumber::zero();
    for mask in 1u32..(1 << d) {
        let mut term = CycloNumber::one();
        for (i, r) in per_axis.iter().enumerate() {
            let factor = if mask & (1 << i) != 0 { &r.remainder } else { &r.main };
            term = term.mul(factor);
        }
        remainder = remainder.add(&term);
    }

    // direct enumeration oracle
    let mut ranges = Vec::with_capacity(d);
    for (i, f) in factors.iter().enumerate() {
        let (lo, hi) = integer_support_range(f);
        let lo = if sector_axes.contains(&i) { lo.max(BigInt::zero()) } else { lo };
        ranges.push((lo, hi));
    }
    let mut lhs_enumerated = CycloNumber::zero();
    let mut cur: Vec<BigInt> = ranges.iter().map(|(lo, _)| lo.clone()).collect();
    if cur.iter().zip(&ranges).all(|(c, (_, hi))| c <= hi) {
        'outer: loop {
            let mut val = CycloNumber::one();
            for (i, f) in factors.iter().enumerate() {
                let fx = f.eval(&Rational::from_integer(cur[i].clone()));
                val = val.scale(&fx);
                if sector_axes.contains(&i) && cur[i].is_zero() {
                    val = val.mul(&weights[i]);
                }
            }
            lhs_enumerated = lhs_enumerated.add(&val);
            let mut i = 0;
            loop {
                if i == d {
                    break 'outer;
                }
                cur[i] += 1;
                if cur[i] <= ranges[i].1 {
                    break;
                }
                cur[i] = ranges[i].0.clone();
                i += 1;
            }
        }
    }

    Ok(SectorReport { per_axis, main, remainder, lhs_enumerated })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::spline::bspline;

    fn cy(p: i64, q: i64) -> CycloNumber {
        CycloNumber::from_rational(rat(p, q))
    }

    /// Partition-of-unity spline equal to 1 on [a, b].
    fn plateau(order: usize, a: i64, b: i64) -> Spline1D {
        let mut acc = bspline(order, &rat_int(a - order as i64), 1);
        for k in (a - order as i64 + 1)..=b {
            acc = acc.add(&bspline(order, &rat_int(k), 1));
        }
        acc
    }

    #[test]
    fn interval_constant_pattern() {
        // f = 1 on a neighborhood of [0, 2]: weighted sum is q + 1 + q, the
        // main term is 2 + 2(q - 1/2) and the remainder vanishes
        let f = plateau(4, -1, 3);
        let q = cy(2, 7);
        for m in 1..=3usize {
            let rep = em_interval(&f, 0, 2, &q, &q, m).unwrap();
            assert!(rep.holds());
            assert_eq!(
                rep.lhs,
                q.scale(&rat_int(2)).add(&CycloNumber::one())
            );
            assert!(rep.remainder.is_zero(), "m = {m}");
        }
    }

    #[test]
    fn interval_identity_various() {
        let cases: Vec<(Spline1D, i64, i64)> = vec![
            (bspline(3, &rat_int(0), 1), 0, 3),
            (bspline(4, &rat(-3, 2), 1), -1, 2),
            (bspline(5, &rat_int(-2), 1), 0, 2),
            (
                bspline(4, &rat_int(0), 1).add(&bspline(6, &rat(1, 2), 2).scale(&rat(5, 3))),
                -1,
                4,
            ),
            (bspline(4, &rat(1, 3), 1), 1, 3),
        ];
        for (f, a, b) in &cases {
            let smax = (f.smoothness() + 1) as usize;
            for m in 1..=smax.min(4) {
                for (qa, qb) in [(cy(1, 2), cy(1, 2)), (cy(0, 1), cy(1, 1)), (cy(2, 3), cy(-1, 5))] {
                    let rep = em_interval(f, *a, *b, &qa, &qb, m).unwrap();
                    assert!(
                        rep.holds(),
                        "interval [{a},{b}] m={m}: {} != {} + {}",
                        rep.lhs,
                        rep.main,
                        rep.remainder
                    );
                }
            }
        }
    }

    #[test]
    fn trapezoid_flavored_case() {
        // q = 1/2, m = 2 on C^2 splines; at least one case has a genuinely
        // nonzero remainder (symmetric placements can cancel it)
        let mut saw_nonzero = false;
        for (shift, a, b) in [(rat_int(0), 1, 3), (rat(1, 2), 0, 5), (rat(1, 3), 1, 2)] {
            let f = bspline(4, &shift, 1);
            let rep = em_interval(&f, a, b, &cy(1, 2), &cy(1, 2), 2).unwrap();
            assert!(rep.holds(), "shift {shift}");
            saw_nonzero |= !rep.remainder.is_zero();
        }
        assert!(saw_nonzero);
    }

    #[test]
    fn halfray_identities() {
        let f = bspline(5, &rat(-5, 2), 1);
        for m in 1..=4usize {
            let r = em_halfray(&f, -1, &cy(3, 7), m).unwrap();
            assert!(r.holds(), "right ray m={m}");
            let l = em_halfray_left(&f, 1, &cy(3, 7), m).unwrap();
            assert!(l.holds(), "left ray m={m}");
        }
        // support strictly right of a: the weight term drops out
        let g = bspline(4, &rat_int(2), 1);
        let r = em_halfray(&g, 0, &cy(9, 2), 1).unwrap();
        assert!(r.holds());
        assert_eq!(
            r.lhs,
            integer_sum(&g, &BigInt::from(2), &BigInt::from(6), |_| CycloNumber::one())
        );
    }

    #[test]
    fn line_identity_and_splitting() {
        let f = bspline(4, &rat(-7, 3), 2);
        for m in 1..=3usize {
            let line = em_line(&f, m).unwrap();
            assert!(line.holds(), "line m={m}");
            // splitting: left ray at 0 with weight q plus right ray with 1-q
            let q = cy(2, 5);
            let left = em_halfray_left(&f, 0, &q, m).unwrap();
            let right = em_halfray(&f, 0, &CycloNumber::one().sub(&q), m).unwrap();
            assert_eq!(left.lhs.add(&right.lhs), line.lhs);
            assert_eq!(left.main.add(&right.main), line.main);
            assert_eq!(left.remainder.add(&right.remainder), line.remainder);
        }
    }

    #[test]
    fn line_identity_m2_explicit() {
        // sum_Z f = int f + int P_2 f'' for any C^1 spline
        let f = bspline(3, &rat(1, 4), 1).scale(&rat(7, 5));
        let rep = em_line(&f, 2).unwrap();
        assert!(rep.holds());
        assert_eq!(rep.main.as_rational().unwrap(), rat(7, 5));
    }

    #[test]
    fn twisted_halfray_identities() {
        for (j, kk) in [(1i64, 2u64), (1, 3), (1, 4), (1, 6)] {
            let lam = CycloNumber::root_of_unity(j, kk);
            for k in [2usize, 3, 4] {
                let f = bspline(6, &rat(-3, 2), 1);
                let rep = em_twisted_halfray(&f, &lam, &cy(1, 3), k).unwrap();
                assert!(rep.holds(), "twist {j}/{kk}, k = {k}");
            }
        }
    }

    #[test]
    fn twisted_halfray_low_smoothness_combination() {
        // combination of quadratic B-splines (class C^1), k = 2
        let lam = CycloNumber::from_int(-1);
        let f = bspline(3, &rat(-5, 4), 1)
            .scale(&rat(2, 3))
            .add(&bspline(3, &rat(1, 2), 2));
        let rep = em_twisted_halfray(&f, &lam, &cy(1, 2), 2).unwrap();
        assert!(rep.holds());
    }

    #[test]
    fn twisted_halfray_support_away_from_zero() {
        let lam = CycloNumber::from_int(-1);
        let f = bspline(4, &rat_int(1), 1);
        let rep = em_twisted_halfray(&f, &lam, &cy(9, 4), 2).unwrap();
        assert!(rep.holds());
        // q never multiplies anything: f(0) = 0
        let direct = integer_sum(&f, &BigInt::from(1), &BigInt::from(5), |n| {
            lam.pow(i64::try_from(n).unwrap())
        });
        assert_eq!(rep.lhs, direct);
    }

    #[test]
    fn twisted_symmetry_by_reflection() {
        // replacing (q, lambda, f(x)) by (1-q, lambda^-1, f(-x)) turns the
        // right-ray twisted sum into the left-ray one; the identity holds on
        // both sides
        let lam = CycloNumber::root_of_unity(1, 3);
        let q = cy(2, 7);
        let f = bspline(5, &rat(-9, 4), 1);
        let direct = em_twisted_halfray(&f, &lam, &q, 3).unwrap();
        let mirrored = em_twisted_halfray(
            &f.reflected(),
            &lam.inv(),
            &CycloNumber::one().sub(&q),
            3,
        )
        .unwrap();
        assert!(direct.holds() && mirrored.holds());
        // the mirrored left-hand side is the left-ray twisted sum of f
        let (lo, _) = integer_support_range(&f);
        let mut expect = CycloNumber::one().sub(&q).scale(&f.eval(&rat_int(0)));
        let mut n = lo;
        while n < BigInt::zero() {
            let fx = f.eval(&Rational::from_integer(n.clone()));
            let e = -i64::try_from(&n).unwrap();
            expect = expect.add(&lam.inv().pow(e).scale(&fx));
            n += 1;
        }
        assert_eq!(mirrored.lhs, expect);
    }

    #[test]
    fn twisted_errors() {
        let f = bspline(4, &rat_int(0), 1);
        assert!(matches!(
            em_twisted_halfray(&f, &CycloNumber::one(), &cy(1, 2), 2),
            Err(Error::LambdaIsOne)
        ));
        assert!(matches!(
            em_twisted_halfray(&f, &CycloNumber::from_int(-1), &cy(1, 2), 5),
            Err(Error::SmoothnessTooLow { .. })
        ));
    }

    #[test]
    fn smoothness_gate() {
        let hat = bspline(2, &rat_int(0), 1);
        assert!(em_interval(&hat, 0, 2, &cy(1, 2), &cy(1, 2), 1).is_ok());
        assert!(matches!(
            em_interval(&hat, 0, 2, &cy(1, 2), &cy(1, 2), 2),
            Err(Error::SmoothnessTooLow { .. })
        ));
    }

    #[test]
    fn sector_tensor_identities() {
        // full space (product of line identities)
        let fs = vec![bspline(4, &rat(-2, 1), 1), bspline(3, &rat(1, 2), 1)];
        let ws = vec![cy(1, 2), cy(1, 2)];
        let rep = em_sector_tensor(&[], &fs, &ws, 2).unwrap();
        assert!(rep.holds());
        // half-plane sector in the plane
        let rep = em_sector_tensor(&[0], &fs, &ws, 2).unwrap();
        assert!(rep.holds());
        // full quadrant
        let rep = em_sector_tensor(&[0, 1], &fs, &ws, 1).unwrap();
        assert!(rep.holds());
        // three dimensions, mixed
        let fs3 = vec![
            bspline(4, &rat(-2, 1), 1),
            bspline(4, &rat(-1, 2), 1),
            bspline(4, &rat(-3, 1), 1),
        ];
        let ws3 = vec![cy(2, 3), cy(1, 5), cy(1, 2)];
        let rep = em_sector_tensor(&[0, 2], &fs3, &ws3, 2).unwrap();
        assert!(rep.holds());
    }
}
