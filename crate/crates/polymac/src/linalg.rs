//! Exact dense linear algebra over the rationals and Smith normal form over
//! the integers. Sizes here are desk scale (dimension <= 4, a handful of
//! rows), so plain Gaussian elimination with exact pivots is the right tool.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Dense rational matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rational>,
}

impl QMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMat { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMat::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Rational>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().cloned());
        }
        QMat { rows: r, cols: c, data }
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form; returns the pivot column of each pivot row.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.at(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self.at(r, c).recip();
            for j in c..self.cols {
                let v = self.at(r, j) * &inv;
                *self.at_mut(r, j) = v;
            }
            for i in 0..self.rows {
                if i != r && !self.at(i, c).is_zero() {
                    let f = self.at(i, c).clone();
                    for j in c..self.cols {
                        let v = self.at(i, j) - &f * self.at(r, j);
                        *self.at_mut(i, j) = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    pub fn det(&self) -> Rational {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.at(i, c).is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            det *= m.at(c, c).clone();
            let inv = m.at(c, c).recip();
            for i in (c + 1)..n {
                if !m.at(i, c).is_zero() {
                    let f = m.at(i, c) * &inv;
                    for j in c..n {
                        let v = m.at(i, j) - &f * m.at(c, j);
                        *m.at_mut(i, j) = v;
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<QMat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = QMat::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, n + i) = Rational::one();
        }
        let pivots = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return None;
        }
        let mut inv = QMat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                *inv.at_mut(i, j) = aug.at(i, n + j).clone();
            }
        }
        Some(inv)
    }

    pub fn mat_mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows);
        let mut out = QMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.at(i, k).is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.at(i, j) + self.at(i, k) * other.at(k, j);
                    *out.at_mut(i, j) = v;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j) * &v[j]).sum())
            .collect()
    }
}

/// Outcome of an exact linear solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solve {
    Unique(Vec<Rational>),
    /// A particular solution; the system has a nontrivial kernel.
    Underdetermined(Vec<Rational>),
    Inconsistent,
}

impl Solve {
    pub fn unique(self) -> Option<Vec<Rational>> {
        match self {
            Solve::Unique(x) => Some(x),
            _ => None,
        }
    }

    pub fn any_solution(self) -> Option<Vec<Rational>> {
        match self {
            Solve::Unique(x) | Solve::Underdetermined(x) => Some(x),
            Solve::Inconsistent => None,
        }
    }
}

/// Solve `A x = b` exactly.
pub fn solve(a: &QMat, b: &[Rational]) -> Solve {
    assert_eq!(a.rows, b.len());
    let mut aug = QMat::zero(a.rows, a.cols + 1);
    #[allow(clippy::needless_range_loop)]
    for i in 0..a.rows {
        for j in 0..a.cols {
            *aug.at_mut(i, j) = a.at(i, j).clone();
        }
        *aug.at_mut(i, a.cols) = b[i].clone();
    }
    let pivots = aug.rref();
    if pivots.last() == Some(&a.cols) {
        return Solve::Inconsistent;
    }
    let mut x = vec![Rational::zero(); a.cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug.at(r, a.cols).clone();
    }
    if pivots.len() == a.cols {
        Solve::Unique(x)
    } else {
        Solve::Underdetermined(x)
    }
}

/// Basis of the kernel of `A` (as row vectors).
pub fn nullspace(a: &QMat) -> Vec<Vec<Rational>> {
    let mut m = a.clone();
    let pivots = m.rref();
    let free: Vec<usize> = (0..a.cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        let mut v = vec![Rational::zero(); a.cols];
        v[f] = Rational::one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = -m.at(r, f).clone();
        }
        basis.push(v);
    }
    basis
}

/// Reduce a list of rational vectors to a linearly independent subset
/// spanning the same space (keeps the earliest spanning vectors).
pub fn independent_subset(vectors: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let mut out: Vec<Vec<Rational>> = Vec::new();
    for v in vectors {
        let mut cand = out.clone();
        cand.push(v.clone());
        if QMat::from_rows(&cand).rank() == cand.len() {
            out.push(v.clone());
        }
    }
    out
}

// ---- integer matrices and Smith normal form --------------------------------

/// Dense integer matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IMat { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IMat::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<BigInt>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().cloned());
        }
        IMat { rows: r, cols: c, data }
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn to_rational(&self) -> QMat {
        let mut q = QMat::zero(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *q.at_mut(i, j) = Rational::from_integer(self.at(i, j).clone());
            }
        }
        q
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[a] -= f * row[b]
    fn row_sub(&mut self, a: usize, b: usize, f: &BigInt) {
        for j in 0..self.cols {
            let v = self.at(a, j) - f * self.at(b, j);
            *self.at_mut(a, j) = v;
        }
    }

    /// col[a] -= f * col[b]
    fn col_sub(&mut self, a: usize, b: usize, f: &BigInt) {
        for i in 0..self.rows {
            let v = self.at(i, a) - f * self.at(i, b);
            *self.at_mut(i, a) = v;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -self.at(a, j).clone();
            *self.at_mut(a, j) = v;
        }
    }
}

/// Smith normal form `U * M * V = D` with `U`, `V` unimodular and `D`
/// diagonal with non-negative entries `d_1 | d_2 | ...`.
#[derive(Debug, Clone)]
pub struct Snf {
    pub d: IMat,
    pub u: IMat,
    pub v: IMat,
    /// Invariant factors (positive entries of the diagonal).
    pub factors: Vec<BigInt>,
}

pub fn smith_normal_form(m: &IMat) -> Snf {
    let mut d = m.clone();
    let mut u = IMat::identity(m.rows);
    let mut v = IMat::identity(m.cols);
    let n = m.rows.min(m.cols);

    for t in 0..n {
        loop {
            // Find the nonzero entry of smallest absolute value in the
            // remaining block and move it to (t, t).
            let mut best: Option<(usize, usize)> = None;
            for i in t..d.rows {
                for j in t..d.cols {
                    if !d.at(i, j).is_zero()
                        && best
                            .map(|(bi, bj)| d.at(i, j).abs() < d.at(bi, bj).abs())
                            .unwrap_or(true)
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                break; // remaining block is zero
            };
            d.swap_rows(t, bi);
            u.swap_rows(t, bi);
            d.swap_cols(t, bj);
            v.swap_cols(t, bj);

            let mut clean = true;
            for i in (t + 1)..d.rows {
                if !d.at(i, t).is_zero() {
                    let f = d.at(i, t).div_floor(d.at(t, t));
                    d.row_sub(i, t, &f);
                    u.row_sub(i, t, &f);
                    if !d.at(i, t).is_zero() {
                        clean = false;
                    }
                }
            }
            for j in (t + 1)..d.cols {
                if !d.at(t, j).is_zero() {
                    let f = d.at(t, j).div_floor(d.at(t, t));
                    d.col_sub(j, t, &f);
                    v.col_sub(j, t, &f);
                    if !d.at(t, j).is_zero() {
                        clean = false;
                    }
                }
            }
            if clean
                && (t + 1..d.rows).all(|i| d.at(i, t).is_zero())
                && (t + 1..d.cols).all(|j| d.at(t, j).is_zero())
            {
                break;
            }
        }
        if t < d.rows && d.at(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }

    // Enforce the divisibility chain d_t | d_{t+1}.
    loop {
        let mut fixed = true;
        for t in 0..n.saturating_sub(1) {
            let a = d.at(t, t).clone();
            let b = d.at(t + 1, t + 1).clone();
            if !a.is_zero() && !b.is_zero() && !(&b % &a).is_zero() {
                // col t += col t+1, then re-diagonalize the 2x2 block.
                let minus_one = -BigInt::one();
                d.col_sub(t, t + 1, &minus_one);
                v.col_sub(t, t + 1, &minus_one);
                // local elimination on rows/cols t, t+1
                loop {
                    if d.at(t + 1, t).is_zero() && d.at(t, t + 1).is_zero() {
                        break;
                    }
                    if !d.at(t + 1, t).is_zero() {
                        if d.at(t, t).is_zero()
                            || d.at(t + 1, t).abs() < d.at(t, t).abs()
                        {
                            d.swap_rows(t, t + 1);
                            u.swap_rows(t, t + 1);
                        }
                        let f = d.at(t + 1, t).div_floor(d.at(t, t));
                        d.row_sub(t + 1, t, &f);
                        u.row_sub(t + 1, t, &f);
                        if !d.at(t + 1, t).is_zero() {
                            continue;
                        }
                    }
                    if !d.at(t, t + 1).is_zero() {
                        let f = d.at(t, t + 1).div_floor(d.at(t, t));
                        d.col_sub(t + 1, t, &f);
                        v.col_sub(t + 1, t, &f);
                    }
                }
                if d.at(t, t).is_negative() {
                    d.negate_row(t);
                    u.negate_row(t);
                }
                if d.at(t + 1, t + 1).is_negative() {
                    d.negate_row(t + 1);
                    u.negate_row(t + 1);
                }
                fixed = false;
            }
        }
        if fixed {
            break;
        }
    }

    let factors: Vec<BigInt> =
        (0..n).map(|t| d.at(t, t).clone()).filter(|x| !x.is_zero()).collect();
    Snf { d, u, v, factors }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn qm(rows: &[&[i64]]) -> QMat {
        QMat::from_rows(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| rat_int(x)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        )
    }

    fn im(rows: &[&[i64]]) -> IMat {
        IMat::from_rows(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn solve_unique_2x2() {
        // the dual-basis solve from the triangle with hypotenuse (-2,-1):
        // <a, (0,1)> = 1, <a, (-2,-1)> = 0  =>  a = (-1/2, 1)
        let a = qm(&[&[0, 1], &[-2, -1]]);
        let x = solve(&a, &[rat_int(1), rat_int(0)]).unique().unwrap();
        assert_eq!(x, vec![rat(-1, 2), rat_int(1)]);
    }

    #[test]
    fn solve_detects_inconsistency_and_kernel() {
        let a = qm(&[&[1, 1], &[2, 2]]);
        assert_eq!(solve(&a, &[rat_int(1), rat_int(3)]), Solve::Inconsistent);
        match solve(&a, &[rat_int(1), rat_int(2)]) {
            Solve::Underdetermined(x) => {
                assert_eq!(&x[0] + &x[1], rat_int(1));
            }
            other => panic!("expected underdetermined, got {other:?}"),
        }
        assert_eq!(nullspace(&a).len(), 1);
    }

    #[test]
    fn det_and_inverse_agree() {
        let a = qm(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 2]]);
        let det = a.det();
        assert_eq!(det, rat_int(8));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mat_mul(&inv), QMat::identity(3));
    }

    #[test]
    fn snf_of_known_matrix() {
        // normals at the triangle vertex (1,0): det 2, quotient Z/2
        let m = im(&[&[0, 1], &[-2, -1]]);
        let s = smith_normal_form(&m);
        assert_eq!(s.factors, vec![BigInt::from(1), BigInt::from(2)]);
        // U M V = D
        let umv = s.u.to_rational().mat_mul(&m.to_rational()).mat_mul(&s.v.to_rational());
        assert_eq!(umv, s.d.to_rational());
        // U, V unimodular
        assert_eq!(s.u.to_rational().det().abs(), rat_int(1));
        assert_eq!(s.v.to_rational().det().abs(), rat_int(1));
    }

    #[test]
    fn snf_random_matrices_satisfy_contract() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..40 {
            let rows = rng.gen_range(1..=4);
            let cols = rng.gen_range(1..=4);
            let mut m = IMat::zero(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    *m.at_mut(i, j) = BigInt::from(rng.gen_range(-6i64..=6));
                }
            }
            let s = smith_normal_form(&m);
            let umv =
                s.u.to_rational().mat_mul(&m.to_rational()).mat_mul(&s.v.to_rational());
            assert_eq!(umv, s.d.to_rational(), "U M V != D for {m:?}");
            assert_eq!(s.u.to_rational().det().abs(), rat_int(1));
            assert_eq!(s.v.to_rational().det().abs(), rat_int(1));
            // diagonal, non-negative, divisibility chain
            for i in 0..rows {
                for j in 0..cols {
                    if i != j {
                        assert!(s.d.at(i, j).is_zero());
                    }
                }
            }
            for w in s.factors.windows(2) {
                assert!((&w[1] % &w[0]).is_zero(), "divisibility {:?}", s.factors);
            }
            // product of invariant factors = gcd-free volume check via rank
            assert_eq!(s.factors.len(), m.to_rational().rank());
        }
    }

    #[test]
    fn independent_subset_reduces_spanning_set() {
        let vs = vec![
            vec![rat_int(1), rat_int(0)],
            vec![rat_int(2), rat_int(0)],
            vec![rat_int(1), rat_int(1)],
        ];
        let basis = independent_subset(&vs);
        assert_eq!(basis.len(), 2);
        assert_eq!(basis[0], vs[0]);
        assert_eq!(basis[1], vs[2]);
    }
}
