//! Simple convex polytopes from a half-space representation.
//!
//! A polytope is given by `N` half-spaces `{x : <x, eta_i> + lambda_i >= 0}`
//! with primitive integer inward normals `eta_i` and rational offsets.
//! Construction enumerates vertices exactly by solving all feasible
//! `d`-subsets of facet hyperplanes, then validates that the polytope is
//! bounded, nonempty, full-dimensional, simple (every vertex on exactly `d`
//! facets) and irredundant, and builds the full face lattice.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::linalg::{independent_subset, nullspace, solve, QMat};
use crate::rational::{
    dot_int, format_point, int_vec_gcd, int_vec_to_rational, rat_int, vec_sub, Rational,
};

/// One half-space `{x : <x, normal> + offset >= 0}` with a primitive integer
/// inward normal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vec<BigInt>,
    pub offset: Rational,
}

/// A nonempty face of the polytope, including the polytope itself
/// (`jset = []`). For a simple polytope `dim = d - |jset|` and `jset` is
/// exactly the set of facets containing the face.
#[derive(Debug, Clone)]
pub struct Face {
    /// Sorted indices of the facets containing this face.
    pub jset: Vec<usize>,
    /// Indices into `Polytope::vertices` of the vertices of this face.
    pub vertex_ids: Vec<usize>,
    pub dim: usize,
    /// A vertex of the face, used as base point of its affine span.
    pub base_point: Vec<Rational>,
    /// Basis of the direction space of the affine span (`dim` vectors).
    pub directions: Vec<Vec<Rational>>,
}

/// Result of locating a point relative to the polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Location {
    Outside { violated_facet: usize },
    /// Index of the smallest face whose affine span contains the point;
    /// interior points map to the face `P` itself.
    OnFace(usize),
}

#[derive(Debug, Clone)]
pub struct Polytope {
    pub dim: usize,
    pub facets: Vec<Facet>,
    pub vertices: Vec<Vec<Rational>>,
    /// All nonempty faces, sorted by (codimension, facet index set);
    /// `faces[0]` is the polytope itself.
    pub faces: Vec<Face>,
    jset_index: BTreeMap<Vec<usize>, usize>,
    /// Active facet set of each vertex (sorted, length `dim`).
    pub vertex_active: Vec<Vec<usize>>,
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in (i + 1)..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

impl Polytope {
    pub fn build(normals: Vec<Vec<BigInt>>, offsets: Vec<Rational>) -> Result<Self, Error> {
        assert_eq!(normals.len(), offsets.len(), "one offset per normal");
        let n = normals.len();
        assert!(n > 0, "need at least one facet");
        let d = normals[0].len();
        assert!(normals.iter().all(|v| v.len() == d), "mixed dimensions");

        for (i, eta) in normals.iter().enumerate() {
            let g = int_vec_gcd(eta);
            if g != BigInt::one() {
                return Err(Error::NonPrimitiveNormal {
                    facet: i,
                    normal: format!("{eta:?}"),
                });
            }
        }

        let normal_rows: Vec<Vec<Rational>> =
            normals.iter().map(|v| int_vec_to_rational(v)).collect();
        let normal_mat = QMat::from_rows(&normal_rows);
        if normal_mat.rank() < d {
            let dir = nullspace(&normal_mat).into_iter().next().unwrap();
            return Err(Error::Unbounded { direction: format_point(&dir) });
        }
        // A nonzero recession direction satisfies d-1 independent equalities.
        for subset in combinations(n, d - 1) {
            let rows: Vec<Vec<Rational>> =
                subset.iter().map(|&i| normal_rows[i].clone()).collect();
            let m = QMat::from_rows(&rows);
            if d > 1 && m.rank() != d - 1 {
                continue;
            }
            let basis = if d == 1 {
                vec![vec![Rational::one()]]
            } else {
                nullspace(&m)
            };
            for y in basis {
                for cand in [y.clone(), y.iter().map(|c| -c.clone()).collect::<Vec<_>>()] {
                    let recedes = normal_rows
                        .iter()
                        .all(|eta| crate::rational::dot(eta, &cand) >= Rational::zero());
                    if recedes {
                        return Err(Error::Unbounded { direction: format_point(&cand) });
                    }
                }
            }
        }

        // Vertex enumeration over all d-subsets of facet hyperplanes.
        let mut vertices: Vec<Vec<Rational>> = Vec::new();
        for subset in combinations(n, d) {
            let rows: Vec<Vec<Rational>> =
                subset.iter().map(|&i| normal_rows[i].clone()).collect();
            let rhs: Vec<Rational> = subset.iter().map(|&i| -offsets[i].clone()).collect();
            let Some(x) = solve(&QMat::from_rows(&rows), &rhs).unique() else {
                continue;
            };
            let feasible = (0..n).all(|i| {
                dot_int(&x, &normals[i]) + &offsets[i] >= Rational::zero()
            });
            if feasible && !vertices.contains(&x) {
                vertices.push(x);
            }
        }
        if vertices.is_empty() {
            return Err(Error::Empty);
        }
        vertices.sort_by(|a, b| {
            a.partial_cmp(b).expect("total order on rational points")
        });

        let mut vertex_active: Vec<Vec<usize>> = Vec::new();
        for v in &vertices {
            let active: Vec<usize> = (0..n)
                .filter(|&i| (dot_int(v, &normals[i]) + &offsets[i]).is_zero())
                .collect();
            if active.len() != d {
                return Err(Error::NotSimple {
                    vertex: format_point(v),
                    active: active.len(),
                    dim: d,
                });
            }
            vertex_active.push(active);
        }

        for i in 0..n {
            if !vertex_active.iter().any(|a| a.contains(&i)) {
                return Err(Error::RedundantFacet { facet: i });
            }
        }

        // Face lattice: a sorted index set J indexes a face iff some vertex's
        // active set contains J.
        let mut jsets: BTreeSet<Vec<usize>> = BTreeSet::new();
        for active in &vertex_active {
            let k = active.len();
            for mask in 0..(1u32 << k) {
                let subset: Vec<usize> = (0..k)
                    .filter(|&b| mask & (1 << b) != 0)
                    .map(|b| active[b])
                    .collect();
                jsets.insert(subset);
            }
        }
        let mut jsets: Vec<Vec<usize>> = jsets.into_iter().collect();
        jsets.sort_by_key(|j| (j.len(), j.clone()));

        let mut faces = Vec::with_capacity(jsets.len());
        let mut jset_index = BTreeMap::new();
        for jset in jsets {
            let vertex_ids: Vec<usize> = (0..vertices.len())
                .filter(|&vi| jset.iter().all(|j| vertex_active[vi].contains(j)))
                .collect();
            let base_point = vertices[vertex_ids[0]].clone();
            let diffs: Vec<Vec<Rational>> = vertex_ids[1..]
                .iter()
                .map(|&vi| vec_sub(&vertices[vi], &base_point))
                .collect();
            let directions = independent_subset(&diffs);
            let dim = d - jset.len();
            assert_eq!(
                directions.len(),
                dim,
                "affine span of face {jset:?} has unexpected dimension"
            );
            jset_index.insert(jset.clone(), faces.len());
            faces.push(Face { jset, vertex_ids, dim, base_point, directions });
        }

        Ok(Polytope { dim: d, facets: normals
            .into_iter()
            .zip(offsets)
            .map(|(normal, offset)| Facet { normal, offset })
            .collect(), vertices, faces, jset_index, vertex_active })
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn face(&self, id: usize) -> &Face {
        &self.faces[id]
    }

    pub fn face_by_jset(&self, jset: &[usize]) -> Option<usize> {
        self.jset_index.get(jset).copied()
    }

    /// The face `P` itself (empty index set).
    pub fn top_face(&self) -> usize {
        self.face_by_jset(&[]).expect("face lattice includes P")
    }

    /// Exact value of `<x, eta_i> + lambda_i`.
    pub fn facet_value(&self, i: usize, x: &[Rational]) -> Rational {
        dot_int(x, &self.facets[i].normal) + &self.facets[i].offset
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        (0..self.facets.len()).all(|i| self.facet_value(i, x) >= Rational::zero())
    }

    pub fn strictly_contains(&self, x: &[Rational]) -> bool {
        (0..self.facets.len()).all(|i| self.facet_value(i, x) > Rational::zero())
    }

    /// Locate `x`: outside (with a violated facet) or the face indexed by its
    /// active set.
    pub fn smallest_face_containing(&self, x: &[Rational]) -> Location {
        let mut active = Vec::new();
        for i in 0..self.facets.len() {
            let v = self.facet_value(i, x);
            if v < Rational::zero() {
                return Location::Outside { violated_facet: i };
            }
            if v.is_zero() {
                active.push(i);
            }
        }
        let id = self
            .face_by_jset(&active)
            .expect("active set of a contained point indexes a face");
        Location::OnFace(id)
    }

    /// Tangent-cone generators of a face: the dual basis inside
    /// `span{eta_l : l in jset}`, normalized by `<alpha_k, eta_l> = delta_kl`.
    /// For the top face this is the empty list.
    pub fn cone_generators(&self, face_id: usize) -> Result<Vec<Vec<Rational>>, Error> {
        let face = &self.faces[face_id];
        let k = face.jset.len();
        if k == 0 {
            return Ok(Vec::new());
        }
        let etas: Vec<Vec<Rational>> = face
            .jset
            .iter()
            .map(|&j| int_vec_to_rational(&self.facets[j].normal))
            .collect();
        // Gram matrix of the active normals.
        let mut gram = QMat::zero(k, k);
        for a in 0..k {
            for b in 0..k {
                *gram.at_mut(a, b) = crate::rational::dot(&etas[a], &etas[b]);
            }
        }
        let mut generators = Vec::with_capacity(k);
        for target in 0..k {
            let mut e = vec![Rational::zero(); k];
            e[target] = Rational::one();
            let c = solve(&gram, &e).unique().ok_or_else(|| Error::DegenerateNormals {
                face: format!("{:?}", face.jset),
            })?;
            let mut alpha = vec![Rational::zero(); self.dim];
            for (cm, eta) in c.iter().zip(&etas) {
                for (ai, ei) in alpha.iter_mut().zip(eta) {
                    *ai += cm * ei;
                }
            }
            generators.push(alpha);
        }
        Ok(generators)
    }

    /// Faces containing this one (superfaces), i.e. faces whose index set is
    /// a subset; includes the face itself and `P`.
    pub fn superfaces(&self, face_id: usize) -> Vec<usize> {
        let jset = &self.faces[face_id].jset;
        (0..self.faces.len())
            .filter(|&g| self.faces[g].jset.iter().all(|j| jset.contains(j)))
            .collect()
    }

    /// Faces contained in this one (subfaces), including itself.
    pub fn subfaces(&self, face_id: usize) -> Vec<usize> {
        let jset = &self.faces[face_id].jset;
        (0..self.faces.len())
            .filter(|&g| jset.iter().all(|j| self.faces[g].jset.contains(j)))
            .collect()
    }

    /// Proper subfaces (strictly smaller dimension).
    pub fn proper_subfaces(&self, face_id: usize) -> Vec<usize> {
        self.subfaces(face_id)
            .into_iter()
            .filter(|&g| g != face_id)
            .collect()
    }

    /// Codimension-1 subfaces within the face lattice.
    pub fn face_children(&self, face_id: usize) -> Vec<usize> {
        let jlen = self.faces[face_id].jset.len();
        self.subfaces(face_id)
            .into_iter()
            .filter(|&g| self.faces[g].jset.len() == jlen + 1)
            .collect()
    }

    /// True iff `x` lies on the (closed) face.
    pub fn point_on_face(&self, face_id: usize, x: &[Rational]) -> bool {
        if !self.contains(x) {
            return false;
        }
        self.faces[face_id]
            .jset
            .iter()
            .all(|&j| self.facet_value(j, x).is_zero())
    }

    pub fn face_centroid(&self, face_id: usize) -> Vec<Rational> {
        let ids = &self.faces[face_id].vertex_ids;
        let k = rat_int(ids.len() as i64);
        let mut c = vec![Rational::zero(); self.dim];
        for &vi in ids {
            for (ci, xi) in c.iter_mut().zip(&self.vertices[vi]) {
                *ci += xi;
            }
        }
        c.into_iter().map(|ci| ci / &k).collect()
    }

    pub fn centroid(&self) -> Vec<Rational> {
        self.face_centroid(self.top_face())
    }

    /// Componentwise min/max over the vertices.
    pub fn bounding_box(&self) -> (Vec<Rational>, Vec<Rational>) {
        let mut lo = self.vertices[0].clone();
        let mut hi = self.vertices[0].clone();
        for v in &self.vertices[1..] {
            for i in 0..self.dim {
                if v[i] < lo[i] {
                    lo[i] = v[i].clone();
                }
                if v[i] > hi[i] {
                    hi[i] = v[i].clone();
                }
            }
        }
        (lo, hi)
    }

    pub fn is_integral(&self) -> bool {
        self.vertices
            .iter()
            .all(|v| v.iter().all(crate::rational::is_integer))
    }

    /// The same combinatorial polytope with every facet shifted outward by
    /// the given amounts (`offset_i + h_i`).
    pub fn dilated(&self, h: &[Rational]) -> Result<Polytope, Error> {
        assert_eq!(h.len(), self.facets.len());
        Polytope::build(
            self.facets.iter().map(|f| f.normal.clone()).collect(),
            self.facets
                .iter()
                .zip(h)
                .map(|(f, hi)| &f.offset + hi)
                .collect(),
        )
    }

    /// V-representation (vertex list) for debugging and export.
    pub fn v_representation(&self) -> Vec<Vec<Rational>> {
        self.vertices.clone()
    }
}

/// Builtin polytope library.
pub mod builtins {
    use super::*;

    fn mk(normals: &[&[i64]], offsets: &[i64], denom: i64) -> Polytope {
        let normals: Vec<Vec<BigInt>> = normals
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let offsets: Vec<Rational> =
            offsets.iter().map(|&x| crate::rational::rat(x, denom)).collect();
        Polytope::build(normals, offsets).expect("builtin polytope is valid")
    }

    /// `[0, 3]` on the line.
    pub fn interval() -> Polytope {
        mk(&[&[1], &[-1]], &[0, 3], 1)
    }

    /// The unit square.
    pub fn square() -> Polytope {
        mk(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]], &[0, 1, 0, 1], 1)
    }

    /// The unit cube.
    pub fn cube() -> Polytope {
        mk(
            &[&[1, 0, 0], &[-1, 0, 0], &[0, 1, 0], &[0, -1, 0], &[0, 0, 1], &[0, 0, -1]],
            &[0, 1, 0, 1, 0, 1],
            1,
        )
    }

    /// The triangle with vertices `(0,0)`, `(1,0)`, `(0,2)`; its vertex cone
    /// at `(1,0)` has index 2.
    pub fn t2() -> Polytope {
        mk(&[&[1, 0], &[0, 1], &[-2, -1]], &[0, 0, 2], 1)
    }

    /// Integral 3-simplex `conv{0, e1, e2, (0,1,2)}` with two vertex cones of
    /// index 2.
    pub fn simplex3() -> Polytope {
        mk(
            &[&[1, 0, 0], &[0, 0, 1], &[0, 2, -1], &[-1, -1, 0]],
            &[0, 0, 0, 1],
            1,
        )
    }

    pub const NAMES: [&str; 5] = ["interval", "square", "cube", "t2", "simplex3"];

    pub fn by_name(name: &str) -> Option<Polytope> {
        match name {
            "interval" => Some(interval()),
            "square" => Some(square()),
            "cube" => Some(cube()),
            "t2" => Some(t2()),
            "simplex3" => Some(simplex3()),
            _ => None,
        }
    }

    pub fn all() -> Vec<(&'static str, Polytope)> {
        NAMES.iter().map(|&n| (n, by_name(n).unwrap())).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn pt(coords: &[i64]) -> Vec<Rational> {
        coords.iter().map(|&c| rat_int(c)).collect()
    }

    #[test]
    fn square_combinatorics() {
        let p = builtins::square();
        assert_eq!(p.vertices.len(), 4);
        // 4 vertices + 4 edges + P itself
        assert_eq!(p.faces.len(), 9);
        assert_eq!(p.faces.iter().filter(|f| f.dim == 0).count(), 4);
        assert_eq!(p.faces.iter().filter(|f| f.dim == 1).count(), 4);
        assert_eq!(p.faces.iter().filter(|f| f.dim == 2).count(), 1);
    }

    #[test]
    fn t2_combinatorics() {
        let p = builtins::t2();
        assert_eq!(p.vertices.len(), 3);
        assert_eq!(p.faces.len(), 7);
        let expect: Vec<Vec<Rational>> = vec![
            pt(&[0, 0]),
            pt(&[0, 2]),
            pt(&[1, 0]),
        ];
        assert_eq!(p.vertices, expect);
    }

    #[test]
    fn cube_and_simplex_builtins_are_valid() {
        let c = builtins::cube();
        assert_eq!(c.vertices.len(), 8);
        assert_eq!(c.faces.len(), 27); // 8 + 12 + 6 + 1
        let s = builtins::simplex3();
        assert_eq!(s.vertices.len(), 4);
        assert_eq!(s.faces.len(), 15); // 4 + 6 + 4 + 1
        assert!(s.is_integral());
    }

    #[test]
    fn non_simple_square_pyramid_rejected() {
        // base z = 0, apex (0,0,1) on all 4 slanted facets
        let r = Polytope::build(
            vec![
                vec![BigInt::from(0), BigInt::from(0), BigInt::from(1)],
                vec![BigInt::from(1), BigInt::from(0), BigInt::from(-1)],
                vec![BigInt::from(-1), BigInt::from(0), BigInt::from(-1)],
                vec![BigInt::from(0), BigInt::from(1), BigInt::from(-1)],
                vec![BigInt::from(0), BigInt::from(-1), BigInt::from(-1)],
            ],
            vec![rat_int(0), rat_int(1), rat_int(1), rat_int(1), rat_int(1)],
        );
        match r {
            Err(Error::NotSimple { active, dim, vertex }) => {
                assert_eq!(active, 4);
                assert_eq!(dim, 3);
                assert_eq!(vertex, "(0, 0, 1)");
            }
            other => panic!("expected NotSimple, got {other:?}"),
        }
    }

    #[test]
    fn error_paths() {
        // non-primitive normal
        assert!(matches!(
            Polytope::build(vec![vec![BigInt::from(2), BigInt::from(0)]], vec![rat_int(0)]),
            Err(Error::NonPrimitiveNormal { facet: 0, .. })
        ));
        // unbounded: half-plane strip
        assert!(matches!(
            Polytope::build(
                vec![
                    vec![BigInt::from(1), BigInt::from(0)],
                    vec![BigInt::from(-1), BigInt::from(0)],
                ],
                vec![rat_int(0), rat_int(1)],
            ),
            Err(Error::Unbounded { .. })
        ));
        // empty: x >= 1 and -x >= 0
        assert!(matches!(
            Polytope::build(
                vec![vec![BigInt::from(1)], vec![BigInt::from(-1)]],
                vec![rat_int(-1), rat_int(0)],
            ),
            Err(Error::Empty)
        ));
        // redundant facet: x + 5 >= 0 never tight on [0,1]
        assert!(matches!(
            Polytope::build(
                vec![vec![BigInt::from(1)], vec![BigInt::from(-1)], vec![BigInt::from(1)]],
                vec![rat_int(0), rat_int(1), rat_int(5)],
            ),
            Err(Error::RedundantFacet { facet: 2 })
        ));
    }

    #[test]
    fn cone_generators_square_vertex() {
        let p = builtins::square();
        let v00 = p.face_by_jset(&[0, 2]).unwrap(); // x>=0, y>=0
        let gens = p.cone_generators(v00).unwrap();
        assert_eq!(gens, vec![pt(&[1, 0]), pt(&[0, 1])]);
    }

    #[test]
    fn cone_generators_t2_vertex() {
        let p = builtins::t2();
        // vertex (1,0): active facets are y>=0 (index 1) and the hypotenuse
        // (index 2, normal (-2,-1)).
        let f = p.face_by_jset(&[1, 2]).unwrap();
        assert_eq!(p.faces[f].base_point, pt(&[1, 0]));
        let gens = p.cone_generators(f).unwrap();
        assert_eq!(gens[0], vec![rat(-1, 2), rat_int(1)]);
        assert_eq!(gens[1], vec![rat(-1, 2), rat_int(0)]);
    }

    #[test]
    fn facet_generator_is_scaled_normal() {
        for (_, p) in builtins::all() {
            for (fid, face) in p.faces.iter().enumerate() {
                if face.jset.len() != 1 {
                    continue;
                }
                let eta = int_vec_to_rational(&p.facets[face.jset[0]].normal);
                let expect =
                    crate::rational::vec_scale(&crate::rational::norm_sq(&eta).recip(), &eta);
                assert_eq!(p.cone_generators(fid).unwrap(), vec![expect]);
            }
        }
    }

    #[test]
    fn dual_basis_property_everywhere() {
        for (name, p) in builtins::all() {
            for fid in 0..p.faces.len() {
                let gens = p.cone_generators(fid).unwrap();
                let jset = &p.faces[fid].jset;
                for (a, alpha) in gens.iter().enumerate() {
                    for (b, &j) in jset.iter().enumerate() {
                        let v = dot_int(alpha, &p.facets[j].normal);
                        let expect = if a == b { rat_int(1) } else { rat_int(0) };
                        assert_eq!(v, expect, "{name} face {jset:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn cone_contains_all_vertices_in_generator_coordinates() {
        // every vertex of P, shifted by the base point, has non-negative
        // coordinates along the generators (modulo the span directions)
        for (name, p) in builtins::all() {
            for (fid, face) in p.faces.iter().enumerate() {
                let gens = p.cone_generators(fid).unwrap();
                for v in &p.vertices {
                    // coordinate along alpha_j is <v - base, eta_j> since the
                    // generators are the dual basis
                    for (g, &j) in gens.iter().zip(&face.jset) {
                        let _ = g;
                        let c = dot_int(&vec_sub(v, &face.base_point), &p.facets[j].normal);
                        assert!(
                            c >= Rational::zero(),
                            "{name}: vertex outside tangent cone of {:?}",
                            face.jset
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn smallest_face_examples() {
        let p = builtins::square();
        let interior = vec![rat(1, 2), rat(1, 2)];
        assert_eq!(p.smallest_face_containing(&interior), Location::OnFace(p.top_face()));
        let left_edge = vec![rat_int(0), rat(1, 2)];
        assert_eq!(
            p.smallest_face_containing(&left_edge),
            Location::OnFace(p.face_by_jset(&[0]).unwrap())
        );
        assert_eq!(
            p.smallest_face_containing(&pt(&[2, 0])),
            Location::Outside { violated_facet: 1 }
        );
        assert_eq!(
            p.smallest_face_containing(&pt(&[0, 0])),
            Location::OnFace(p.face_by_jset(&[0, 2]).unwrap())
        );
    }

    #[test]
    fn face_lattice_closure() {
        // J_{F1} subset of J_{F2} iff F2 subset of F1 (on vertex sets)
        for (_, p) in builtins::all() {
            for a in 0..p.faces.len() {
                for b in 0..p.faces.len() {
                    let ja_in_jb =
                        p.faces[a].jset.iter().all(|j| p.faces[b].jset.contains(j));
                    let vb_in_va = p.faces[b]
                        .vertex_ids
                        .iter()
                        .all(|v| p.faces[a].vertex_ids.contains(v));
                    assert_eq!(ja_in_jb, vb_in_va);
                }
            }
        }
    }

    #[test]
    fn euler_alternating_sum() {
        for (name, p) in builtins::all() {
            let mut sum = 0i64;
            for f in &p.faces {
                sum += if f.dim % 2 == 0 { 1 } else { -1 };
            }
            assert_eq!(sum, 1, "{name}: alternating face-count sum");
        }
    }

    #[test]
    fn dilation_preserves_combinatorics() {
        let p = builtins::t2();
        let h = vec![rat(1, 7), rat(1, 11), rat(1, 13)];
        let q = p.dilated(&h).unwrap();
        assert_eq!(q.faces.len(), p.faces.len());
        for (a, b) in p.faces.iter().zip(&q.faces) {
            assert_eq!(a.jset, b.jset);
        }
    }
}
