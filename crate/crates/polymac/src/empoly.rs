//! The exact weighted summation formula for polynomials on simple integral
//! polytopes: the integral of the polynomial over the outward-dilated
//! polytope is a polynomial in the dilation variables; applying one twisted
//! operator per face/group-element pair and evaluating at zero dilation
//! reproduces the weighted lattice sum exactly.
//!
//! The dilated integral is computed symbolically: vertices of the dilated
//! polytope are affine-linear in the dilation variables, the polytope is
//! triangulated combinatorially once (pulling from the lowest-index vertex),
//! and each simplex is integrated by barycentric substitution and the
//! Dirichlet integral formula, with the Jacobian determinant kept as an
//! exact polynomial.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::cyclo::CycloNumber;
use crate::decomposition::{
    decomposition_terms, weighted_indicator_polytope, Polarization, Weights,
};
use crate::em1d::apply_series_in_var;
use crate::error::Error;
use crate::lattice::{
    all_gamma_groups, lambda_value, weighted_lattice_sum, working_order, GammaGroup,
};
use crate::multipoly::MultiPoly;
use crate::polytope::Polytope;
use crate::rational::{factorial, lcm_u64, Rational};
use crate::samples::{sample_points, SamplePolicy};
use crate::series::{twisted_todd_series, weighted_todd_series, TruncatedSeries};

/// `integral over P(h) of p`, as an exact polynomial in the dilation
/// variables `h_1 .. h_N` (facet `i` of `P(h)` is shifted outward by `h_i`).
#[derive(Debug, Clone)]
pub struct DilatedIntegral {
    pub nfacets: usize,
    pub poly: MultiPoly,
}

impl DilatedIntegral {
    pub fn compute(p: &Polytope, integrand: &MultiPoly) -> Result<Self, Error> {
        Self::compute_pulling(p, integrand, false)
    }

    /// Same computation pulling from the highest-index vertex instead; used
    /// as an independent cross-check of the triangulation.
    pub fn compute_with_reversed_pulling(
        p: &Polytope,
        integrand: &MultiPoly,
    ) -> Result<Self, Error> {
        Self::compute_pulling(p, integrand, true)
    }

    fn compute_pulling(
        p: &Polytope,
        integrand: &MultiPoly,
        reverse: bool,
    ) -> Result<Self, Error> {
        assert_eq!(integrand.nvars(), p.dim, "integrand lives in the space variables");
        let n = p.num_facets();
        let d = p.dim;
        let nv = n + d; // variables: h_1..h_N, then the barycentric t_1..t_d

        // dilated vertices: v(h) = v - sum_j h_j alpha_{v, j}, per coordinate
        let mut vertex_polys: Vec<Vec<MultiPoly>> = Vec::with_capacity(p.vertices.len());
        for (vi, v) in p.vertices.iter().enumerate() {
            let face_id = p
                .face_by_jset(&p.vertex_active[vi])
                .expect("vertex face exists");
            let gens = p.cone_generators(face_id)?;
            let mut coords = Vec::with_capacity(d);
            for c in 0..d {
                let mut poly = MultiPoly::constant(
                    nv,
                    CycloNumber::from_rational(v[c].clone()),
                );
                for (gen, &j) in gens.iter().zip(&p.vertex_active[vi]) {
                    let mut e = vec![0u32; nv];
                    e[j] = 1;
                    poly.add_term(
                        e,
                        CycloNumber::from_rational(-gen[c].clone()),
                    );
                }
                coords.push(poly);
            }
            vertex_polys.push(coords);
        }

        let simplices = pulling_triangulation(p, reverse);
        let mut total = MultiPoly::zero(n);
        for simplex in &simplices {
            let v0 = &vertex_polys[simplex[0]];
            // edge matrix E[c][i] = v_i(h)_c - v_0(h)_c
            let edges: Vec<Vec<MultiPoly>> = (0..d)
                .map(|c| {
                    (1..=d)
                        .map(|i| vertex_polys[simplex[i]][c].sub(&v0[c]))
                        .collect()
                })
                .collect();
            let jac = det_multipoly(&edges);
            let jac0 = jac.constant_term();
            let Some(jac0) = jac0.as_rational() else {
                return Err(Error::TriangulationFailure {
                    detail: format!("{simplex:?}"),
                });
            };
            if jac0.is_zero() {
                return Err(Error::TriangulationFailure {
                    detail: format!("{simplex:?}"),
                });
            }
            let signed_jac = if jac0 < Rational::zero() { jac.neg() } else { jac };

            // substitute x_c = v0_c(h) + sum_i t_i * E[c][i]
            let subs: Vec<MultiPoly> = (0..d)
                .map(|c| {
                    let mut poly = v0[c].clone();
                    for (i, e) in edges[c].iter().enumerate() {
                        let t = MultiPoly::var(nv, n + i);
                        poly = poly.add(&t.mul(e));
                    }
                    poly
                })
                .collect();
            let integrand_sub = integrand.substitute(&subs);

            // integrate the barycentric monomials over the standard simplex
            let mut integrated = MultiPoly::zero(n);
            let mut weight_cache: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
            for (e, c) in integrand_sub.terms() {
                let (h_part, t_part) = e.split_at(n);
                let weight = weight_cache
                    .entry(t_part.to_vec())
                    .or_insert_with(|| dirichlet_weight(d, t_part))
                    .clone();
                integrated.add_term(h_part.to_vec(), c.scale(&weight));
            }
            // restrict the Jacobian to the dilation variables
            let mut jac_h = MultiPoly::zero(n);
            for (e, c) in signed_jac.terms() {
                debug_assert!(e[n..].iter().all(|&x| x == 0));
                jac_h.add_term(e[..n].to_vec(), c.clone());
            }
            total = total.add(&jac_h.mul(&integrated));
        }
        Ok(DilatedIntegral { nfacets: n, poly: total })
    }

    /// The exact integral of the integrand over the undilated polytope.
    pub fn at_zero(&self) -> CycloNumber {
        self.poly.constant_term()
    }
}

/// `integral over the standard simplex of prod t_i^(a_i) dt
///  = prod a_i! / (d + sum a_i)!`.
fn dirichlet_weight(d: usize, exponents: &[u32]) -> Rational {
    let total: u32 = exponents.iter().sum();
    let mut num = Rational::from_integer(1.into());
    for &a in exponents {
        num *= factorial(a as usize);
    }
    num / factorial(d + total as usize)
}

fn det_multipoly(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    if n == 0 {
        return MultiPoly::one(0);
    }
    let nv = m[0][0].nvars();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = MultiPoly::zero(nv);
    for col in 0..n {
        let minor: Vec<Vec<MultiPoly>> = (1..n)
            .map(|r| {
                (0..n)
                    .filter(|&c| c != col)
                    .map(|c| m[r][c].clone())
                    .collect()
            })
            .collect();
        let cofactor = m[0][col].mul(&det_multipoly(&minor));
        acc = if col % 2 == 0 { acc.add(&cofactor) } else { acc.sub(&cofactor) };
    }
    acc
}

/// Triangulation of the polytope into `d`-simplices using only its vertices,
/// by recursive pulling at the lowest-index (or highest-index) vertex of
/// each face.
pub fn pulling_triangulation(p: &Polytope, reverse: bool) -> Vec<Vec<usize>> {
    fn rec(
        p: &Polytope,
        face_id: usize,
        reverse: bool,
        memo: &mut BTreeMap<usize, Vec<Vec<usize>>>,
    ) -> Vec<Vec<usize>> {
        if let Some(hit) = memo.get(&face_id) {
            return hit.clone();
        }
        let face = p.face(face_id);
        let result = if face.vertex_ids.len() == face.dim + 1 {
            vec![face.vertex_ids.clone()]
        } else {
            let apex = if reverse {
                *face.vertex_ids.iter().max().unwrap()
            } else {
                *face.vertex_ids.iter().min().unwrap()
            };
            let mut simplices = Vec::new();
            for child in p.face_children(face_id) {
                if p.face(child).vertex_ids.contains(&apex) {
                    continue;
                }
                for sub in rec(p, child, reverse, memo) {
                    let mut s = vec![apex];
                    s.extend(sub);
                    simplices.push(s);
                }
            }
            simplices
        };
        memo.insert(face_id, result.clone());
        result
    }
    let mut memo = BTreeMap::new();
    rec(p, p.top_face(), reverse, &mut memo)
}

/// One operator of the exact formula: for a face and a boundary group
/// element, the product over all facets of a twisted (or plain weighted)
/// series in the corresponding dilation derivative.
#[derive(Debug, Clone)]
pub struct EmOperator {
    pub face_id: usize,
    pub element: usize,
    pub truncation: usize,
    pub factors: Vec<TruncatedSeries>,
}

impl EmOperator {
    /// Apply to a dilation polynomial and evaluate at zero dilation.
    pub fn apply(&self, poly: &MultiPoly) -> CycloNumber {
        let mut acc = poly.clone();
        for (j, series) in self.factors.iter().enumerate() {
            if acc.is_zero() {
                break;
            }
            acc = apply_series_in_var(series, &acc, j);
        }
        acc.constant_term()
    }
}

/// Assemble the operator for `(face, group element)`: facets through the
/// face with a nontrivial root of unity get the twisted series, all other
/// facets the even-truncated weighted Todd series. Requires the element to
/// be in the boundary subset.
pub fn build_operator(
    p: &Polytope,
    groups: &[GammaGroup],
    face_id: usize,
    element: usize,
    k: usize,
    w: &Weights,
    field_order: u64,
) -> Result<EmOperator, Error> {
    let group = &groups[face_id];
    if !group.elements[element].is_boundary() {
        return Err(Error::GammaNotBoundary {
            face: format!("{:?}", group.jset),
            element: format!("{:?}", group.elements[element].b),
        });
    }
    let mut factors = Vec::with_capacity(p.num_facets());
    for j in 0..p.num_facets() {
        let lambda = lambda_value(group, element, j, field_order)?;
        let series = if lambda.is_one() {
            weighted_todd_series(&w.q[j], 2 * (k / 2))
        } else {
            twisted_todd_series(&w.q[j], &lambda, k)?
        };
        factors.push(series);
    }
    Ok(EmOperator { face_id, element, truncation: k, factors })
}

/// Everything the exact-formula run produces, including the per-term ledger.
#[derive(Debug, Clone)]
pub struct EmPolyRun {
    pub truncation: usize,
    pub field_order: u64,
    pub formula: CycloNumber,
    pub oracle: CycloNumber,
    /// `(face jset, group element coefficients, contribution)`.
    pub contributions: Vec<(Vec<usize>, Vec<Rational>, CycloNumber)>,
}

impl EmPolyRun {
    pub fn matches(&self) -> bool {
        self.formula == self.oracle
    }
}

/// Run the exact formula against the enumeration oracle. `truncation`
/// defaults to `deg p + d + 1`.
pub fn em_poly_run(
    p: &Polytope,
    w: &Weights,
    integrand: &MultiPoly,
    truncation: Option<usize>,
) -> Result<EmPolyRun, Error> {
    for v in &p.vertices {
        if !v.iter().all(crate::rational::is_integer) {
            return Err(Error::NonIntegralVertex {
                vertex: crate::rational::format_point(v),
            });
        }
    }
    assert_eq!(w.q.len(), p.num_facets());
    let k = truncation
        .unwrap_or(integrand.total_degree() as usize + p.dim + 1)
        .max(1);
    let field_order = lcm_u64(working_order(p), w.order());
    let groups = all_gamma_groups(p);
    let dilated = DilatedIntegral::compute(p, integrand)?;

    let mut formula = CycloNumber::zero();
    let mut contributions = Vec::new();
    for face_id in 0..p.faces.len() {
        for element in groups[face_id].boundary_indices() {
            let op = build_operator(p, &groups, face_id, element, k, w, field_order)?;
            let value = op.apply(&dilated.poly);
            formula = formula.add(&value);
            contributions.push((
                p.face(face_id).jset.clone(),
                groups[face_id].elements[element].b.clone(),
                value,
            ));
        }
    }
    let oracle = weighted_lattice_sum(p, w, |pt| {
        let x: Vec<Rational> =
            pt.iter().map(|c| Rational::from_integer(c.clone())).collect();
        integrand.eval_rational(&x)
    });
    Ok(EmPolyRun { truncation: k, field_order, formula, oracle, contributions })
}

/// The exact weighted polynomial sum; asserts agreement with the brute-force
/// oracle, and that rational weights certify a rational value.
pub fn em_exact_polynomial_sum(
    p: &Polytope,
    w: &Weights,
    integrand: &MultiPoly,
    truncation: Option<usize>,
) -> Result<CycloNumber, Error> {
    let run = em_poly_run(p, w, integrand, truncation)?;
    if !run.matches() {
        return Err(Error::MismatchWithOracle {
            formula: run.formula.to_string(),
            oracle: run.oracle.to_string(),
        });
    }
    if w.all_rational() {
        assert!(
            run.formula.is_rational(),
            "rational weights must certify a rational sum"
        );
    }
    Ok(run.formula)
}

/// Consistency of the assembled formula across decomposition variants and
/// base points, plus the symbolic zero-contribution argument that lets the
/// per-face cone sums regroup into the single dilated-polytope integral.
#[derive(Debug, Clone)]
pub struct ConsistencyRun {
    /// (variant, base point label, all sample identities hold)
    pub decomposition_checks: Vec<(String, String, bool)>,
    /// flips and phi flags agree between the polytope and a small outward
    /// dilation of it, face by face
    pub dilation_bookkeeping_ok: bool,
    /// every twisted factor of a boundary element kills polynomials
    /// independent of its dilation variable
    pub zero_contribution_ok: bool,
    pub formula_vs_oracle_ok: bool,
}

impl ConsistencyRun {
    pub fn ok(&self) -> bool {
        self.decomposition_checks.iter().all(|(_, _, ok)| *ok)
            && self.dilation_bookkeeping_ok
            && self.zero_contribution_ok
            && self.formula_vs_oracle_ok
    }
}

pub fn em_variant_consistency(
    p: &Polytope,
    w: &Weights,
    integrand: &MultiPoly,
    eps1: &[Rational],
    eps2: &[Rational],
) -> Result<ConsistencyRun, Error> {
    let policy = SamplePolicy { interior: 40, exterior: 40, per_facet: 3, seed: 5 };
    let pts = sample_points(p, &policy);

    // 1. both variants, both base points: pointwise decomposition identity,
    //    and pairwise agreement of the sums
    let mut decomposition_checks = Vec::new();
    let mut all_sums: Vec<Vec<CycloNumber>> = Vec::new();
    for (label, eps) in [("eps1", eps1), ("eps2", eps2)] {
        for variant in [Polarization::Toward, Polarization::Away] {
            let terms = decomposition_terms(p, eps, variant)?;
            let mut ok = true;
            let mut sums = Vec::with_capacity(pts.len());
            for x in &pts {
                let s = terms.sum_at(w, x);
                ok &= s == weighted_indicator_polytope(p, w, x);
                sums.push(s);
            }
            decomposition_checks.push((format!("{variant:?}"), label.to_string(), ok));
            all_sums.push(sums);
        }
    }
    let agree = all_sums.windows(2).all(|w2| w2[0] == w2[1]);

    // 2. outward dilation keeps the combinatorics and polarization data:
    //    the dilated polytope has identical face index sets, flips and phi
    //    flags for the same base point
    let h: Vec<Rational> = (0..p.num_facets())
        .map(|j| crate::rational::rat(1, 17 + j as i64))
        .collect();
    let dilated_polytope = p.dilated(&h)?;
    let mut bookkeeping = dilated_polytope.faces.len() == p.faces.len();
    for variant in [Polarization::Toward, Polarization::Away] {
        let t_orig = decomposition_terms(p, eps1, variant)?;
        let t_dil = decomposition_terms(&dilated_polytope, eps1, variant)?;
        for (a, b) in t_orig.terms.iter().zip(&t_dil.terms) {
            bookkeeping &= a.cone.jset == b.cone.jset && a.cone.flips == b.cone.flips;
        }
        // the dilated decomposition is itself exact
        for x in pts.iter().take(60) {
            bookkeeping &= t_dil.sum_at(w, x)
                == weighted_indicator_polytope(&dilated_polytope, w, x);
        }
    }

    // 3. zero-contribution argument: for faces delta not below delta~, some
    //    facet j lies in J(delta~) \ J(delta); the j-th factor of the
    //    operator has zero constant term, and the cone integral of delta
    //    does not involve h_j, so the term vanishes. Symbolically: applying
    //    the factor to any polynomial independent of h_j gives zero.
    let field_order = lcm_u64(working_order(p), w.order());
    let groups = all_gamma_groups(p);
    let k = integrand.total_degree() as usize + p.dim + 1;
    let dilated = DilatedIntegral::compute(p, integrand)?;
    let mut zero_ok = true;
    #[allow(clippy::needless_range_loop)]
    for tilde in 0..p.faces.len() {
        for element in groups[tilde].boundary_indices() {
            for delta in 0..p.faces.len() {
                let j_tilde = &p.face(tilde).jset;
                let j_delta = &p.face(delta).jset;
                let Some(&j) = j_tilde.iter().find(|j| !j_delta.contains(j)) else {
                    continue; // delta is below tilde
                };
                let lambda = lambda_value(&groups[tilde], element, j, field_order)?;
                let factor = twisted_todd_series(&w.q[j], &lambda, k)?;
                zero_ok &= factor.coefficient(0).is_zero();
                // restrict the dilated integral to the variables of delta
                let mut restricted = dilated.poly.clone();
                for v in 0..p.num_facets() {
                    if !j_delta.contains(&v) {
                        restricted = restricted.set_var_zero(v);
                    }
                }
                let killed = apply_series_in_var(&factor, &restricted, j);
                zero_ok &= killed.is_zero();
            }
        }
    }

    // 4. the assembled formula agrees with the oracle (grouped form is
    //    variant- and base-point-free by construction)
    let run = em_poly_run(p, w, integrand, None)?;

    Ok(ConsistencyRun {
        decomposition_checks,
        dilation_bookkeeping_ok: bookkeeping && agree,
        zero_contribution_ok: zero_ok,
        formula_vs_oracle_ok: run.matches(),
    })
}
