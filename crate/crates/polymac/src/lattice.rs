//! Integer linear algebra attached to the faces of a polytope: the finite
//! quotient groups measuring how far each tangent cone is from regular, the
//! root-of-unity data of their elements, and brute-force weighted
//! lattice-sum oracles.
//!
//! For a face with active normals `eta_j`, the group is
//! `(integer vectors in the rational span of the eta_j) / (Z-span of the
//! eta_j)`, computed via Smith normal form. Every element has a canonical
//! representative `gamma = sum b_j eta_j` with all `b_j` in `[0, 1)`; the
//! `b_j` are exactly the pairing exponents against the dual-basis
//! generators, so the root of unity attached to facet `j` is `e^(2 pi i b_j)`
//! (and `1` for facets not through the face).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cyclo::CycloNumber;
use crate::decomposition::{weighted_indicator_polytope, Weights};
use crate::error::Error;
use crate::linalg::{smith_normal_form, solve, IMat, QMat};
use crate::polytope::Polytope;
use crate::rational::{
    frac, is_integer, lcm_u64, rat_int, Rational,
};

/// One group element: canonical coefficients `b` (aligned with the face's
/// facet index set, entries in `[0,1)`) and the integer vector
/// `gamma = sum b_j eta_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaElement {
    pub b: Vec<Rational>,
    pub gamma: Vec<BigInt>,
}

impl GammaElement {
    pub fn is_identity(&self) -> bool {
        self.b.iter().all(|x| x.is_zero())
    }

    /// All coefficients non-integral (equivalently nonzero, since they lie
    /// in `[0,1)`): the element survives to the boundary subset.
    pub fn is_boundary(&self) -> bool {
        self.b.iter().all(|x| !is_integer(x))
    }
}

/// The finite group of a face, with explicit coset representatives.
/// Serializes as `{"order": n, "representatives": [["p/q", ...], ...]}`.
#[derive(Debug, Clone)]
pub struct GammaGroup {
    pub face_id: usize,
    pub jset: Vec<usize>,
    pub order: BigInt,
    pub elements: Vec<GammaElement>,
}

impl serde::Serialize for GammaGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("GammaGroup", 2)?;
        st.serialize_field("order", &self.order.to_string().parse::<u64>().map_err(
            |_| serde::ser::Error::custom("group order out of range"),
        )?)?;
        let reps: Vec<Vec<String>> = self
            .elements
            .iter()
            .map(|e| e.b.iter().map(crate::rational::format_rational).collect())
            .collect();
        st.serialize_field("representatives", &reps)?;
        st.end()
    }
}

impl GammaGroup {
    /// Indices of the elements in the boundary subset (all `b_j` nonzero);
    /// for the top face (empty index set) this is the identity alone.
    pub fn boundary_indices(&self) -> Vec<usize> {
        (0..self.elements.len())
            .filter(|&i| self.elements[i].is_boundary())
            .collect()
    }

    /// Least common multiple of the denominators of all coefficients.
    pub fn exponent_order(&self) -> u64 {
        let mut l = 1u64;
        for e in &self.elements {
            for b in &e.b {
                let den: u64 = b.denom().try_into().expect("small group order");
                l = lcm_u64(l, den);
            }
        }
        l
    }
}

/// Compute the group of a face from the Smith normal form of its active
/// normal matrix.
pub fn gamma_group(p: &Polytope, face_id: usize) -> GammaGroup {
    let jset = p.face(face_id).jset.clone();
    let n = jset.len();
    let d = p.dim;
    if n == 0 {
        return GammaGroup {
            face_id,
            jset,
            order: BigInt::one(),
            elements: vec![GammaElement { b: Vec::new(), gamma: vec![BigInt::zero(); d] }],
        };
    }
    let rows: Vec<Vec<BigInt>> = jset.iter().map(|&j| p.facets[j].normal.clone()).collect();
    let m = IMat::from_rows(&rows);
    let snf = smith_normal_form(&m);
    assert_eq!(snf.factors.len(), n, "active normals of a simple face are independent");

    // With U M V = D, the rows W_i of V^{-1} satisfy: row lattice of M is
    // spanned by d_i * W_i, and the saturated lattice by the W_i themselves.
    let v_inv_q = snf.v.to_rational().inverse().expect("V is unimodular");
    let w_rows: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let x = v_inv_q.at(i, j);
                    assert!(is_integer(x), "inverse of a unimodular matrix is integral");
                    x.numer().clone()
                })
                .collect()
        })
        .collect();

    // Transposed normal matrix for solving gamma = sum b_j eta_j.
    let mt_rows: Vec<Vec<Rational>> = (0..d)
        .map(|c| rows.iter().map(|r| Rational::from_integer(r[c].clone())).collect())
        .collect();
    let mt = QMat::from_rows(&mt_rows);

    let factors: Vec<u64> = snf
        .factors
        .iter()
        .map(|f| u64::try_from(f).expect("desk-scale group order"))
        .collect();
    let order: BigInt = snf.factors.iter().product();

    let mut elements = Vec::new();
    let mut counter = vec![0u64; n];
    loop {
        // gamma_raw = sum counter_i * W_i
        let mut gamma_raw = vec![BigInt::zero(); d];
        for (i, &c) in counter.iter().enumerate() {
            for (gj, wj) in gamma_raw.iter_mut().zip(&w_rows[i]) {
                *gj += BigInt::from(c) * wj;
            }
        }
        let rhs: Vec<Rational> =
            gamma_raw.iter().map(|x| Rational::from_integer(x.clone())).collect();
        let b_raw = solve(&mt, &rhs)
            .unique()
            .expect("saturated lattice vectors lie in the span of the normals");
        let b: Vec<Rational> = b_raw.iter().map(frac).collect();
        // canonical representative gamma = sum {b_j} eta_j
        let mut gamma = vec![Rational::zero(); d];
        for (bj, row) in b.iter().zip(&rows) {
            for (gc, rc) in gamma.iter_mut().zip(row) {
                *gc += bj * Rational::from_integer(rc.clone());
            }
        }
        let gamma: Vec<BigInt> = gamma
            .iter()
            .map(|x| {
                assert!(is_integer(x), "representative must be an integer vector");
                x.numer().clone()
            })
            .collect();
        let elem = GammaElement { b, gamma };
        assert!(!elements.contains(&elem), "coset representatives are distinct");
        elements.push(elem);

        // advance the mixed-radix counter
        let mut i = 0;
        loop {
            if i == n {
                break;
            }
            counter[i] += 1;
            if counter[i] < factors[i].max(1) {
                break;
            }
            counter[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    elements.sort_by(|a, b| a.b.partial_cmp(&b.b).unwrap());
    assert_eq!(BigInt::from(elements.len()), order);
    GammaGroup { face_id, jset, order, elements }
}

/// The root of unity attached to `(element, facet j)` in the field of order
/// `l`: `e^(2 pi i b_j)` for facets through the face, exactly `1` otherwise.
pub fn lambda_value(
    group: &GammaGroup,
    element: usize,
    facet: usize,
    l: u64,
) -> Result<CycloNumber, Error> {
    let exponent = lambda_exponent(group, element, facet);
    let den: u64 = exponent.denom().try_into().expect("small order");
    if !l.is_multiple_of(den) {
        return Err(Error::IncompatibleOrder { needed: den, working: l });
    }
    Ok(CycloNumber::unit_from_exponent(&exponent).promote(l).expect("den | l"))
}

/// The exponent `b_j` of the root of unity for `(element, facet)`, `0` for
/// facets not through the face.
pub fn lambda_exponent(group: &GammaGroup, element: usize, facet: usize) -> Rational {
    match group.jset.iter().position(|&j| j == facet) {
        Some(pos) => group.elements[element].b[pos].clone(),
        None => Rational::zero(),
    }
}

/// Groups of every face, in face order.
pub fn all_gamma_groups(p: &Polytope) -> Vec<GammaGroup> {
    (0..p.faces.len()).map(|f| gamma_group(p, f)).collect()
}

/// Working cyclotomic order of the polytope: the lcm of the denominators of
/// all coefficients over all faces.
pub fn working_order(p: &Polytope) -> u64 {
    all_gamma_groups(p)
        .iter()
        .fold(1u64, |l, g| lcm_u64(l, g.exponent_order()))
}

/// All lattice points of the polytope, by bounding-box scan and exact facet
/// filtering, in lexicographic order.
pub fn enumerate_lattice_points(p: &Polytope) -> Vec<Vec<BigInt>> {
    let (lo, hi) = p.bounding_box();
    let lo: Vec<BigInt> = lo.iter().map(|x| x.ceil().to_integer()).collect();
    let hi: Vec<BigInt> = hi.iter().map(|x| x.floor().to_integer()).collect();
    let mut out = Vec::new();
    let mut cur = lo.clone();
    if lo.iter().zip(&hi).any(|(a, b)| a > b) {
        return out;
    }
    loop {
        let as_rat: Vec<Rational> =
            cur.iter().map(|x| Rational::from_integer(x.clone())).collect();
        if p.contains(&as_rat) {
            out.push(cur.clone());
        }
        // advance odometer (last coordinate fastest for lexicographic order)
        let mut i = p.dim;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] <= hi[i] {
                break;
            }
            cur[i] = lo[i].clone();
            if i == 0 {
                return out;
            }
        }
    }
}

/// `sum over lattice points of w(x) * f(x)`, the brute-force oracle for the
/// operator formulas.
pub fn weighted_lattice_sum(
    p: &Polytope,
    w: &Weights,
    mut f: impl FnMut(&[BigInt]) -> CycloNumber,
) -> CycloNumber {
    let mut acc = CycloNumber::zero();
    for pt in enumerate_lattice_points(p) {
        let as_rat: Vec<Rational> =
            pt.iter().map(|x| Rational::from_integer(x.clone())).collect();
        let weight = weighted_indicator_polytope(p, w, &as_rat);
        if weight.is_zero() {
            continue;
        }
        acc = acc.add(&weight.mul(&f(&pt)));
    }
    acc
}

/// Character average `(1/|G|) sum_gamma prod_j lambda_j^(c_j)` over the
/// group, for a point `x = sum c_j alpha_j` of the generator lattice. By the
/// averaging theorem for characters this is `1` when `x` is an integer
/// vector and `0` otherwise.
pub fn character_average(group: &GammaGroup, c: &[i64], l: u64) -> Result<CycloNumber, Error> {
    let mut acc = CycloNumber::zero();
    for e in 0..group.elements.len() {
        let mut ch = CycloNumber::one();
        for (pos, &cj) in c.iter().enumerate() {
            let lam = lambda_value(group, e, group.jset[pos], l)?;
            ch = ch.mul(&lam.pow(cj));
        }
        acc = acc.add(&ch);
    }
    let order = rat_int(group.elements.len() as i64);
    Ok(acc.scale(&order.recip()))
}
