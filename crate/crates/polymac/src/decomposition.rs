//! Weighted decompositions of a simple polytope into polarized tangent cones.
//!
//! For a base point `epsilon` off the walls spanned by the faces and their
//! perpendiculars, every face span gets a polarizing
//! vector from the orthogonal projection of `epsilon`; flipping tangent-cone
//! generators against it yields signed, weighted cone indicators that sum
//! pointwise to the weighted indicator of the polytope. Two sign conventions
//! are supported (polarizing toward the projection or away from it), along
//! with the vertex-only Lawrence-Varchenko and the unpolarized
//! Brianchon-Gram specializations.
//!
//! All membership and sign decisions are exact rational comparisons; there is
//! no tolerance parameter anywhere.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::cyclo::CycloNumber;
use crate::error::Error;
use crate::linalg::{solve, QMat};
use crate::polytope::{Location, Polytope};
use crate::rational::{dot, vec_add, vec_scale, vec_sub, Rational};

/// Per-facet weights. Rationals embed; cyclotomic weights keep every
/// identity exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weights {
    pub q: Vec<CycloNumber>,
}

impl Weights {
    pub fn uniform(n: usize, q: CycloNumber) -> Self {
        Weights { q: vec![q; n] }
    }

    pub fn ones(n: usize) -> Self {
        Self::uniform(n, CycloNumber::one())
    }

    pub fn from_rationals(qs: &[Rational]) -> Self {
        Weights { q: qs.iter().map(|r| CycloNumber::from_rational(r.clone())).collect() }
    }

    pub fn all_rational(&self) -> bool {
        self.q.iter().all(|q| q.is_rational())
    }

    /// Least common multiple of the cyclotomic orders of the weights.
    pub fn order(&self) -> u64 {
        self.q.iter().fold(1, |l, q| crate::rational::lcm_u64(l, q.order()))
    }
}

/// Which direction the polarizing vector points, relative to the projection
/// `beta` of `epsilon` onto the face span.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Polarization {
    /// Polarize with respect to `beta - epsilon`.
    Toward,
    /// Polarize with respect to `epsilon - beta`; term signs gain
    /// `(-1)^(dim face)`.
    Away,
}

/// A face's tangent cone with per-generator flip flags.
#[derive(Debug, Clone)]
pub struct PolarizedCone {
    pub face_id: usize,
    /// Facet indices of the cone (the face's active set).
    pub jset: Vec<usize>,
    /// Projection of `epsilon` onto the face span (equals `epsilon` for the
    /// top face); for assembled specializations this is the face base point.
    pub base_projection: Vec<Rational>,
    pub flips: Vec<bool>,
    /// Number of flipped generators.
    pub m_flips: usize,
    /// Polarized generators `+-alpha_j` (dual basis, possibly negated).
    pub generators: Vec<Vec<Rational>>,
    /// Effective inward normals `+-eta_j` of the polarized cone.
    pub eff_normals: Vec<Vec<BigInt>>,
    /// Effective offsets `+-lambda_j`.
    pub eff_offsets: Vec<Rational>,
}

/// Exact geometry of one cone evaluation at a point: either some coordinate
/// is negative (the point is outside the cone) or the list of facets the
/// point sits on, with their flip state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeGeometry {
    pub outside: bool,
    /// `(facet index, flipped)` for every tight cone facet.
    pub zero_set: Vec<(usize, bool)>,
}

impl PolarizedCone {
    /// The cone coordinates of `x` are `<x, eff_normal_j> + eff_offset_j`.
    pub fn geometry_at(&self, x: &[Rational]) -> ConeGeometry {
        let mut zero_set = Vec::new();
        for (i, j) in self.jset.iter().enumerate() {
            let c = crate::rational::dot_int(x, &self.eff_normals[i]) + &self.eff_offsets[i];
            if c < Rational::zero() {
                return ConeGeometry { outside: true, zero_set: Vec::new() };
            }
            if c.is_zero() {
                zero_set.push((*j, self.flips[i]));
            }
        }
        ConeGeometry { outside: false, zero_set }
    }
}

impl ConeGeometry {
    /// Weighted indicator value: `0` outside; otherwise the product over the
    /// tight facets of `q_j` (unflipped) or `1 - q_j` (flipped).
    pub fn value(&self, w: &Weights) -> CycloNumber {
        if self.outside {
            return CycloNumber::zero();
        }
        let mut acc = CycloNumber::one();
        for &(j, flipped) in &self.zero_set {
            let f = if flipped {
                CycloNumber::one().sub(&w.q[j])
            } else {
                w.q[j].clone()
            };
            acc = acc.mul(&f);
        }
        acc
    }
}

/// One signed term of a decomposition.
#[derive(Debug, Clone)]
pub struct Term {
    pub face_id: usize,
    pub sign: i8,
    /// Whether the projection of `epsilon` onto the face span lies in the
    /// polytope; terms with `phi == false` contribute zero.
    pub phi: bool,
    pub cone: PolarizedCone,
}

/// A full decomposition: one term per face span.
#[derive(Debug, Clone)]
pub struct TermList {
    pub kind: String,
    pub epsilon: Option<Vec<Rational>>,
    pub terms: Vec<Term>,
}

impl TermList {
    /// Pointwise evaluation of the signed weighted sum.
    pub fn sum_at(&self, w: &Weights, x: &[Rational]) -> CycloNumber {
        let mut acc = CycloNumber::zero();
        for t in &self.terms {
            if !t.phi {
                continue;
            }
            let v = t.cone.geometry_at(x).value(w);
            if v.is_zero() {
                continue;
            }
            let signed = if t.sign < 0 { v.neg() } else { v };
            acc = acc.add(&signed);
        }
        acc
    }

    /// Precomputed geometry per contributing term, for evaluating many
    /// weight vectors at the same point.
    pub fn geometry_at(&self, x: &[Rational]) -> Vec<(i8, ConeGeometry)> {
        self.terms
            .iter()
            .filter(|t| t.phi)
            .map(|t| (t.sign, t.cone.geometry_at(x)))
            .collect()
    }
}

/// Signed sum from precomputed geometry.
pub fn sum_from_geometry(geoms: &[(i8, ConeGeometry)], w: &Weights) -> CycloNumber {
    let mut acc = CycloNumber::zero();
    for (sign, g) in geoms {
        let v = g.value(w);
        if v.is_zero() {
            continue;
        }
        acc = acc.add(&if *sign < 0 { v.neg() } else { v });
    }
    acc
}

/// Orthogonal projection of `point` onto the affine span `base + <dirs>`
/// under the standard inner product, by an exact normal-equation solve.
pub fn project_onto_span(
    point: &[Rational],
    base: &[Rational],
    dirs: &[Vec<Rational>],
) -> Vec<Rational> {
    if dirs.is_empty() {
        return base.to_vec();
    }
    let k = dirs.len();
    let mut gram = QMat::zero(k, k);
    for a in 0..k {
        for b in 0..k {
            *gram.at_mut(a, b) = dot(&dirs[a], &dirs[b]);
        }
    }
    let rel = vec_sub(point, base);
    let rhs: Vec<Rational> = dirs.iter().map(|v| dot(v, &rel)).collect();
    let c = solve(&gram, &rhs)
        .unique()
        .expect("direction basis is linearly independent");
    let mut beta = base.to_vec();
    for (ci, v) in c.iter().zip(dirs) {
        beta = vec_add(&beta, &vec_scale(ci, v));
    }
    beta
}

/// Projection of `epsilon` onto the span of a face.
pub fn project(p: &Polytope, epsilon: &[Rational], face_id: usize) -> Vec<Rational> {
    let f = p.face(face_id);
    project_onto_span(epsilon, &f.base_point, &f.directions)
}

/// Whether the projection of `epsilon` onto the face span lands in the
/// polytope (the phi flag of the face's term).
pub fn phi(p: &Polytope, epsilon: &[Rational], face_id: usize) -> bool {
    p.contains(&project(p, epsilon, face_id))
}

/// A wall certificate produced when `epsilon` is not in an open chamber of the wall arrangement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WallWitness {
    /// The projection onto the span of `face_id` lies on a proper subface.
    ProjectionOnSubface { face_id: usize, subface_id: usize },
    /// A generator of the face's tangent cone pairs to zero with
    /// `beta - epsilon`. The subface condition does not imply this one: a
    /// base point ON the span of a proper face (off its perpendicular walls)
    /// passes every projection check yet has a zero polarizing vector there,
    /// so it is checked and reported independently.
    ZeroPairing { face_id: usize, generator: usize },
}

/// Check whether `epsilon` avoids every wall: for each face span, (a) the
/// projection does not lie on any proper subface, and (b) it pairs
/// nontrivially with every tangent-cone generator. Returns the first wall
/// hit, or `None` when `epsilon` is in an open chamber of the wall arrangement.
pub fn wall_witness(p: &Polytope, epsilon: &[Rational]) -> Option<WallWitness> {
    for face_id in 0..p.faces.len() {
        let beta = project(p, epsilon, face_id);
        for sub in p.proper_subfaces(face_id) {
            if p.point_on_face(sub, &beta) {
                return Some(WallWitness::ProjectionOnSubface { face_id, subface_id: sub });
            }
        }
        let beta_pol = vec_sub(&beta, epsilon);
        let gens = p.cone_generators(face_id).expect("valid simple polytope");
        for (g, alpha) in gens.iter().enumerate() {
            if dot(alpha, &beta_pol).is_zero() {
                return Some(WallWitness::ZeroPairing { face_id, generator: g });
            }
        }
    }
    None
}

pub fn in_open_chamber(p: &Polytope, epsilon: &[Rational]) -> bool {
    wall_witness(p, epsilon).is_none()
}

/// Polarize the tangent cone of a face with respect to `epsilon` and the
/// chosen variant. Requires `epsilon` off the walls (checked per generator:
/// a zero pairing is reported as an error).
pub fn polarize(
    p: &Polytope,
    face_id: usize,
    epsilon: &[Rational],
    variant: Polarization,
) -> Result<PolarizedCone, Error> {
    let face = p.face(face_id);
    let beta = project(p, epsilon, face_id);
    let beta_pol = match variant {
        Polarization::Toward => vec_sub(&beta, epsilon),
        Polarization::Away => vec_sub(epsilon, &beta),
    };
    let gens = p.cone_generators(face_id)?;
    let mut flips = Vec::with_capacity(gens.len());
    let mut generators = Vec::with_capacity(gens.len());
    let mut eff_normals = Vec::with_capacity(gens.len());
    let mut eff_offsets = Vec::with_capacity(gens.len());
    for (i, alpha) in gens.iter().enumerate() {
        let pairing = dot(alpha, &beta_pol);
        if pairing.is_zero() {
            return Err(Error::ZeroPairing {
                face: format!("{:?}", face.jset),
                generator: i,
            });
        }
        let flip = pairing < Rational::zero();
        let j = face.jset[i];
        if flip {
            generators.push(vec_scale(&-Rational::from_integer(1.into()), alpha));
            eff_normals.push(p.facets[j].normal.iter().map(|c| -c.clone()).collect());
            eff_offsets.push(-p.facets[j].offset.clone());
        } else {
            generators.push(alpha.clone());
            eff_normals.push(p.facets[j].normal.clone());
            eff_offsets.push(p.facets[j].offset.clone());
        }
        flips.push(flip);
    }
    let m_flips = flips.iter().filter(|&&f| f).count();
    // flip law: every polarized generator pairs positively
    debug_assert!(generators
        .iter()
        .all(|g| dot(g, &beta_pol) > Rational::zero() || gens.is_empty()));
    Ok(PolarizedCone {
        face_id,
        jset: face.jset.clone(),
        base_projection: beta,
        flips,
        m_flips,
        generators,
        eff_normals,
        eff_offsets,
    })
}

/// The unpolarized tangent cone of a face (no flips).
pub fn tangent_cone(p: &Polytope, face_id: usize) -> PolarizedCone {
    let face = p.face(face_id);
    let gens = p.cone_generators(face_id).expect("valid simple polytope");
    PolarizedCone {
        face_id,
        jset: face.jset.clone(),
        base_projection: face.base_point.clone(),
        flips: vec![false; face.jset.len()],
        m_flips: 0,
        generators: gens,
        eff_normals: face.jset.iter().map(|&j| p.facets[j].normal.clone()).collect(),
        eff_offsets: face.jset.iter().map(|&j| p.facets[j].offset.clone()).collect(),
    }
}

/// Weighted indicator of the polytope: `0` outside, else the product of the
/// weights of the facets through the smallest face containing `x`.
pub fn weighted_indicator_polytope(
    p: &Polytope,
    w: &Weights,
    x: &[Rational],
) -> CycloNumber {
    match p.smallest_face_containing(x) {
        Location::Outside { .. } => CycloNumber::zero(),
        Location::OnFace(id) => {
            let mut acc = CycloNumber::one();
            for &j in &p.face(id).jset {
                acc = acc.mul(&w.q[j]);
            }
            acc
        }
    }
}

/// Weighted indicator of a polarized cone at `x` (flipped facets weigh
/// `1 - q`).
pub fn weighted_indicator_cone(
    cone: &PolarizedCone,
    w: &Weights,
    x: &[Rational],
) -> CycloNumber {
    cone.geometry_at(x).value(w)
}

/// One term per face span, with sign `(-1)^m` (toward) or `(-1)^(m + dim)`
/// (away) and the phi flag.
pub fn decomposition_terms(
    p: &Polytope,
    epsilon: &[Rational],
    variant: Polarization,
) -> Result<TermList, Error> {
    let mut terms = Vec::with_capacity(p.faces.len());
    for face_id in 0..p.faces.len() {
        let cone = polarize(p, face_id, epsilon, variant)?;
        let phi_flag = p.contains(&cone.base_projection);
        let exponent = match variant {
            Polarization::Toward => cone.m_flips,
            Polarization::Away => cone.m_flips + p.face(face_id).dim,
        };
        let sign = if exponent % 2 == 0 { 1 } else { -1 };
        terms.push(Term { face_id, sign, phi: phi_flag, cone });
    }
    Ok(TermList {
        kind: match variant {
            Polarization::Toward => "toward".into(),
            Polarization::Away => "away".into(),
        },
        epsilon: Some(epsilon.to_vec()),
        terms,
    })
}

/// Unpolarized tangent cones with sign `(-1)^(dim face)` and `phi == 1`.
pub fn brianchon_gram_terms(p: &Polytope) -> TermList {
    let terms = (0..p.faces.len())
        .map(|face_id| Term {
            face_id,
            sign: if p.face(face_id).dim.is_multiple_of(2) { 1 } else { -1 },
            phi: true,
            cone: tangent_cone(p, face_id),
        })
        .collect();
    TermList { kind: "brianchon-gram".into(), epsilon: None, terms }
}

/// Vertex terms only, generators polarized to pair positively with `xi`,
/// flipped facets weighted `1 - q`, sign `(-1)^(number of flips)`.
pub fn lawrence_varchenko_terms(p: &Polytope, xi: &[Rational]) -> Result<TermList, Error> {
    let mut terms = Vec::new();
    for face_id in 0..p.faces.len() {
        let face = p.face(face_id);
        if face.dim != 0 {
            continue;
        }
        let gens = p.cone_generators(face_id)?;
        let mut flips = Vec::new();
        let mut generators = Vec::new();
        let mut eff_normals = Vec::new();
        let mut eff_offsets = Vec::new();
        for (i, alpha) in gens.iter().enumerate() {
            let pairing = dot(alpha, xi);
            if pairing.is_zero() {
                return Err(Error::NonGenericXi {
                    vertex: crate::rational::format_point(&face.base_point),
                    generator: i,
                });
            }
            let flip = pairing < Rational::zero();
            let j = face.jset[i];
            if flip {
                generators
                    .push(vec_scale(&-Rational::from_integer(1.into()), alpha));
                eff_normals
                    .push(p.facets[j].normal.iter().map(|c| -c.clone()).collect::<Vec<BigInt>>());
                eff_offsets.push(-p.facets[j].offset.clone());
            } else {
                generators.push(alpha.clone());
                eff_normals.push(p.facets[j].normal.clone());
                eff_offsets.push(p.facets[j].offset.clone());
            }
            flips.push(flip);
        }
        let m_flips = flips.iter().filter(|&&f| f).count();
        terms.push(Term {
            face_id,
            sign: if m_flips % 2 == 0 { 1 } else { -1 },
            phi: true,
            cone: PolarizedCone {
                face_id,
                jset: face.jset.clone(),
                base_projection: face.base_point.clone(),
                flips,
                m_flips,
                generators,
                eff_normals,
                eff_offsets,
            },
        });
    }
    Ok(TermList { kind: "lawrence-varchenko".into(), epsilon: None, terms })
}

/// Outcome of checking one point of a verification run.
#[derive(Debug, Clone)]
pub struct PointOutcome {
    pub point: Vec<Rational>,
    pub expected: CycloNumber,
    pub got: CycloNumber,
    /// Signed weighted value of every term (in term order), for the ledger.
    pub term_values: Vec<CycloNumber>,
}

impl PointOutcome {
    pub fn ok(&self) -> bool {
        self.expected == self.got
    }
}

/// Outcome of a full verification sweep.
#[derive(Debug, Clone)]
pub struct VerifyOutcome {
    pub points: Vec<PointOutcome>,
}

impl VerifyOutcome {
    pub fn ok(&self) -> bool {
        self.points.iter().all(|p| p.ok())
    }

    pub fn failures(&self) -> usize {
        self.points.iter().filter(|p| !p.ok()).count()
    }

    pub fn into_result(self) -> Result<VerifyOutcome, Error> {
        match self.points.iter().find(|p| !p.ok()) {
            None => Ok(self),
            Some(bad) => Err(Error::IdentityViolation {
                point: crate::rational::format_point(&bad.point),
                expected: bad.expected.to_string(),
                got: bad.got.to_string(),
            }),
        }
    }
}

/// Assert, at every sample point, that the signed weighted cone sum equals
/// the weighted indicator of the polytope, recording a per-term ledger.
pub fn verify_terms(
    p: &Polytope,
    w: &Weights,
    terms: &TermList,
    points: &[Vec<Rational>],
) -> VerifyOutcome {
    let mut outcomes = Vec::with_capacity(points.len());
    for x in points {
        let mut term_values = Vec::with_capacity(terms.terms.len());
        let mut got = CycloNumber::zero();
        for t in &terms.terms {
            let v = if t.phi {
                let v = t.cone.geometry_at(x).value(w);
                if t.sign < 0 {
                    v.neg()
                } else {
                    v
                }
            } else {
                CycloNumber::zero()
            };
            got = got.add(&v);
            term_values.push(v);
        }
        let expected = weighted_indicator_polytope(p, w, x);
        outcomes.push(PointOutcome { point: x.clone(), expected, got, term_values });
    }
    VerifyOutcome { points: outcomes }
}

/// End-to-end verification for a polarization variant: build the term list
/// for `epsilon` and sweep the sample set.
pub fn verify_decomposition(
    p: &Polytope,
    w: &Weights,
    epsilon: &[Rational],
    variant: Polarization,
    points: &[Vec<Rational>],
) -> Result<(TermList, VerifyOutcome), Error> {
    let terms = decomposition_terms(p, epsilon, variant)?;
    let outcome = verify_terms(p, w, &terms, points);
    Ok((terms, outcome))
}

/// The vertex of `P` furthest from `epsilon` (exact squared distances);
/// `None` when the maximum is not unique.
pub fn furthest_vertex(p: &Polytope, epsilon: &[Rational]) -> Option<usize> {
    let mut best: Option<(usize, Rational)> = None;
    let mut unique = true;
    for (vi, v) in p.vertices.iter().enumerate() {
        let d2 = crate::rational::norm_sq(&vec_sub(v, epsilon));
        match &best {
            None => best = Some((vi, d2)),
            Some((_, bd)) => {
                if d2 == *bd {
                    unique = false;
                } else if d2 > *bd {
                    best = Some((vi, d2));
                    unique = true;
                }
            }
        }
    }
    best.filter(|_| unique).map(|(vi, _)| vi)
}

/// Per-face polarization signature of an open chamber of the wall arrangement: flip patterns and phi
/// flags are locally constant on a region, so distinct signatures certify
/// distinct regions.
pub fn region_signature(
    p: &Polytope,
    epsilon: &[Rational],
    variant: Polarization,
) -> Result<Vec<(Vec<bool>, bool)>, Error> {
    let terms = decomposition_terms(p, epsilon, variant)?;
    Ok(terms.terms.iter().map(|t| (t.cone.flips.clone(), t.phi)).collect())
}

/// Deterministic certified interior base point: the centroid, perturbed by
/// shrinking prime-denominator jitters until it lies strictly inside and in an
/// open wall chamber.
pub fn find_interior_epsilon(p: &Polytope) -> Vec<Rational> {
    let c = p.centroid();
    if p.strictly_contains(&c) && in_open_chamber(p, &c) {
        return c;
    }
    let primes = [7i64, 11, 13, 17, 19, 23, 29, 31, 37, 41];
    for (k, &q) in primes.iter().enumerate() {
        for dir in 0..p.dim {
            let mut cand = c.clone();
            for (i, ci) in cand.iter_mut().enumerate() {
                *ci += crate::rational::rat(1 + ((dir + i + k) % 3) as i64, q * (i as i64 + 2));
            }
            if p.strictly_contains(&cand) && in_open_chamber(p, &cand) {
                return cand;
            }
        }
    }
    panic!("no certified interior point found (polytope too thin for the fixed jitter table)");
}

/// Deterministic certified base point for which only vertex terms survive
/// (`phi == 0` for every face of positive dimension, including the top face).
pub fn find_vertex_only_epsilon(p: &Polytope) -> Option<Vec<Rational>> {
    let c = p.centroid();
    let primes = [5i64, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    let mut candidates: Vec<Vec<Rational>> = Vec::new();
    // fixed prime points in the positive orthant, then rays through vertices
    for shift in 0..4i64 {
        candidates.push(
            (0..p.dim)
                .map(|i| crate::rational::rat_int(primes[(i + shift as usize) % primes.len()]))
                .collect(),
        );
    }
    for t in [5i64, 9, 17, 33] {
        for v in &p.vertices {
            let dirv = vec_sub(v, &c);
            if crate::rational::vec_is_zero(&dirv) {
                continue;
            }
            let cand = vec_add(v, &vec_scale(&crate::rational::rat(t, 1), &dirv));
            candidates.push(cand);
        }
    }
    for (k, cand) in candidates.into_iter().enumerate() {
        // avoid symmetric ties with a deterministic jitter
        let jit: Vec<Rational> = cand
            .iter()
            .enumerate()
            .map(|(i, x)| x + crate::rational::rat(1, primes[(i + k) % primes.len()] * 3))
            .collect();
        for eps in [cand, jit] {
            if !in_open_chamber(p, &eps) {
                continue;
            }
            let vertex_only = (0..p.faces.len())
                .all(|f| p.face(f).dim == 0 || !phi(p, &eps, f));
            if vertex_only && furthest_vertex(p, &eps).is_some() {
                return Some(eps);
            }
        }
    }
    None
}
