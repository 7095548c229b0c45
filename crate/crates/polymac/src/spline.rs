//! Compactly supported piecewise-polynomial test functions with exact
//! rational breakpoints and coefficients. Because every test function is a
//! spline, every integral in the summation identities reduces to exact
//! polynomial integration over a common refinement of breakpoints.

use num_traits::{One, Zero};

use crate::error::Error;
use crate::rational::{rat_int, Rational};

// ---- dense univariate rational polynomials ---------------------------------

/// Polynomial with rational coefficients, constant term first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly1 {
    pub coeffs: Vec<Rational>,
}

impl Poly1 {
    pub fn zero() -> Self {
        Poly1 { coeffs: vec![Rational::zero()] }
    }

    pub fn constant(c: Rational) -> Self {
        Poly1 { coeffs: vec![c] }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = Poly1 { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().unwrap().is_zero() {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.coeffs.push(Rational::zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn add(&self, other: &Poly1) -> Poly1 {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Poly1::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Poly1 {
        Poly1::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &Poly1) -> Poly1 {
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly1::from_coeffs(coeffs)
    }

    pub fn derivative(&self) -> Poly1 {
        if self.coeffs.len() == 1 {
            return Poly1::zero();
        }
        Poly1::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat_int(i as i64 + 1))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Poly1 {
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i + 1] = c / rat_int(i as i64 + 1);
        }
        Poly1::from_coeffs(coeffs)
    }

    pub fn integral_on(&self, a: &Rational, b: &Rational) -> Rational {
        let f = self.antiderivative();
        f.eval(b) - f.eval(a)
    }

    /// Compose with the affine map `x -> s*x + t`.
    pub fn compose_affine(&self, s: &Rational, t: &Rational) -> Poly1 {
        let mut acc = Poly1::zero();
        let lin = Poly1::from_coeffs(vec![t.clone(), s.clone()]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Poly1::constant(c.clone()));
        }
        acc
    }
}

// ---- splines ----------------------------------------------------------------

/// A compactly supported piecewise polynomial with declared smoothness class
/// `m` (continuous derivatives up to order `m`; `m = -1` means possibly
/// discontinuous). The function is `pieces[i]` on `[breakpoints[i],
/// breakpoints[i+1])` and zero outside the support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spline1D {
    breakpoints: Vec<Rational>,
    pieces: Vec<Poly1>,
    smoothness: i64,
}

impl Spline1D {
    /// Validates the declared smoothness: pieces agree in value and
    /// derivatives up to order `m` at interior breakpoints, and the function
    /// and its derivatives up to `m` vanish at the support endpoints.
    pub fn new(
        breakpoints: Vec<Rational>,
        pieces: Vec<Poly1>,
        smoothness: i64,
    ) -> Result<Self, Error> {
        if breakpoints.len() < 2 || pieces.len() + 1 != breakpoints.len() {
            return Err(Error::InvalidSpline(format!(
                "{} breakpoints with {} pieces",
                breakpoints.len(),
                pieces.len()
            )));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSpline("breakpoints must increase".into()));
        }
        let s = Spline1D { breakpoints, pieces, smoothness };
        for r in 0..=smoothness.max(-1) {
            let zero = Poly1::zero();
            for (i, t) in s.breakpoints.iter().enumerate() {
                let left = if i == 0 { &zero } else { &s.pieces[i - 1] };
                let right = if i == s.pieces.len() { &zero } else { &s.pieces[i] };
                let mut l = left.clone();
                let mut rr = right.clone();
                for _ in 0..r {
                    l = l.derivative();
                    rr = rr.derivative();
                }
                if l.eval(t) != rr.eval(t) {
                    return Err(Error::InvalidSpline(format!(
                        "derivative {r} jumps at breakpoint {t}"
                    )));
                }
            }
        }
        Ok(s)
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn pieces(&self) -> &[Poly1] {
        &self.pieces
    }

    /// Declared smoothness class (`C^m`).
    pub fn smoothness(&self) -> i64 {
        self.smoothness
    }

    pub fn support(&self) -> (Rational, Rational) {
        (
            self.breakpoints[0].clone(),
            self.breakpoints[self.breakpoints.len() - 1].clone(),
        )
    }

    /// Value at a point (half-open convention on each piece; zero outside).
    pub fn eval(&self, x: &Rational) -> Rational {
        match self.piece_index(x) {
            Some(i) => self.pieces[i].eval(x),
            None => Rational::zero(),
        }
    }

    fn piece_index(&self, x: &Rational) -> Option<usize> {
        if x < &self.breakpoints[0] || x >= &self.breakpoints[self.breakpoints.len() - 1] {
            return None;
        }
        let mut i = 0;
        while &self.breakpoints[i + 1] <= x {
            i += 1;
        }
        Some(i)
    }

    /// `r`-th derivative value at `x`. Well-defined (side-independent) for
    /// `r <= smoothness`; evaluated from the right piece at breakpoints.
    pub fn derivative_value(&self, x: &Rational, r: usize) -> Rational {
        let mut s = self.clone();
        for _ in 0..r {
            s = s.derivative();
        }
        s.eval(x)
    }

    /// Derivative as a spline, one smoothness class lower.
    pub fn derivative(&self) -> Spline1D {
        Spline1D {
            breakpoints: self.breakpoints.clone(),
            pieces: self.pieces.iter().map(|p| p.derivative()).collect(),
            smoothness: self.smoothness - 1,
        }
    }

    /// Exact integral over `[a, b]`.
    pub fn integral_on(&self, a: &Rational, b: &Rational) -> Rational {
        assert!(a <= b);
        let mut acc = Rational::zero();
        for i in 0..self.pieces.len() {
            let lo = (&self.breakpoints[i]).max(a).clone();
            let hi = (&self.breakpoints[i + 1]).min(b).clone();
            if lo < hi {
                acc += self.pieces[i].integral_on(&lo, &hi);
            }
        }
        acc
    }

    /// Integral over the whole support.
    pub fn total_integral(&self) -> Rational {
        let (a, b) = self.support();
        self.integral_on(&a, &b)
    }

    /// Pointwise sum, on the common breakpoint refinement; the declared
    /// class is the minimum of the two (cancellation can only help).
    pub fn add(&self, other: &Spline1D) -> Spline1D {
        let mut bps: Vec<Rational> = self
            .breakpoints
            .iter()
            .chain(&other.breakpoints)
            .cloned()
            .collect();
        bps.sort();
        bps.dedup();
        let pieces = bps
            .windows(2)
            .map(|w| {
                let probe = &w[0];
                let a = self
                    .piece_index(probe)
                    .map(|i| self.pieces[i].clone())
                    .unwrap_or_else(Poly1::zero);
                let b = other
                    .piece_index(probe)
                    .map(|i| other.pieces[i].clone())
                    .unwrap_or_else(Poly1::zero);
                a.add(&b)
            })
            .collect();
        Spline1D {
            breakpoints: bps,
            pieces,
            smoothness: self.smoothness.min(other.smoothness),
        }
    }

    pub fn scale(&self, c: &Rational) -> Spline1D {
        Spline1D {
            breakpoints: self.breakpoints.clone(),
            pieces: self.pieces.iter().map(|p| p.scale(c)).collect(),
            smoothness: self.smoothness,
        }
    }

    /// The mirror image `x -> f(-x)`; requires a continuous spline so the
    /// half-open piece convention is immaterial.
    pub fn reflected(&self) -> Spline1D {
        assert!(self.smoothness >= 0, "reflection needs a continuous spline");
        let breakpoints: Vec<Rational> =
            self.breakpoints.iter().rev().map(|t| -t.clone()).collect();
        let minus_one = -Rational::one();
        let pieces = self
            .pieces
            .iter()
            .rev()
            .map(|p| p.compose_affine(&minus_one, &Rational::zero()))
            .collect();
        Spline1D { breakpoints, pieces, smoothness: self.smoothness }
    }

    /// Reparametrize as `x -> f(scale * (x - shift))`.
    pub fn rescaled(&self, shift: &Rational, scale: u64) -> Spline1D {
        assert!(scale >= 1);
        let s = rat_int(scale as i64);
        let breakpoints: Vec<Rational> =
            self.breakpoints.iter().map(|t| shift + t / &s).collect();
        // piece(x) = old_piece(s * x - s * shift)
        let t = -(&s * shift);
        let pieces = self.pieces.iter().map(|p| p.compose_affine(&s, &t)).collect();
        Spline1D { breakpoints, pieces, smoothness: self.smoothness }
    }
}

/// The cardinal B-spline of order `n` (degree `n - 1`, class `C^(n-2)`,
/// support `[0, n]`, unit integral), built by the convolution recursion on
/// polynomial pieces, then shifted and dilated: the result is
/// `x -> B_n(scale * (x - shift))`.
pub fn bspline(order: usize, shift: &Rational, scale: u64) -> Spline1D {
    assert!(order >= 1);
    // B_1 = indicator of [0, 1)
    let mut pieces: Vec<Poly1> = vec![Poly1::constant(Rational::one())];
    for n in 2..=order {
        // B_n(x) = (x * B_{n-1}(x) + (n - x) * B_{n-1}(x - 1)) / (n - 1)
        let prev = pieces;
        let mut next: Vec<Poly1> = Vec::with_capacity(n);
        let x = Poly1::from_coeffs(vec![Rational::zero(), Rational::one()]);
        let inv = rat_int(n as i64 - 1).recip();
        for k in 0..n {
            let mut piece = Poly1::zero();
            if k < prev.len() {
                piece = piece.add(&x.mul(&prev[k]));
            }
            if k >= 1 && k - 1 < prev.len() {
                // B_{n-1}(x-1) piece on [k, k+1) is prev[k-1] shifted right
                let shifted = prev[k - 1].compose_affine(&Rational::one(), &rat_int(-1));
                let n_minus_x = Poly1::from_coeffs(vec![rat_int(n as i64), rat_int(-1)]);
                piece = piece.add(&n_minus_x.mul(&shifted));
            }
            next.push(piece.scale(&inv));
        }
        pieces = next;
    }
    let breakpoints: Vec<Rational> = (0..=order).map(|k| rat_int(k as i64)).collect();
    let base = Spline1D { breakpoints, pieces, smoothness: order as i64 - 2 };
    debug_assert!(Spline1D::new(
        base.breakpoints.clone(),
        base.pieces.clone(),
        base.smoothness
    )
    .is_ok());
    base.rescaled(shift, scale)
}
