//! End-to-end acceptance suite: every criterion is an exact identity (no
//! tolerances anywhere) with a wall-clock budget. Run with `--nocapture` to
//! see one pass line per criterion.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Signed;
use polymac::cyclo::CycloNumber;
use polymac::decomposition::{
    brianchon_gram_terms, decomposition_terms, find_interior_epsilon,
    find_vertex_only_epsilon, furthest_vertex, in_open_chamber,
    lawrence_varchenko_terms, region_signature, sum_from_geometry,
    weighted_indicator_polytope, Polarization, Weights,
};
use polymac::empoly::em_poly_run;
use polymac::lattice::{
    all_gamma_groups, character_average, gamma_group, working_order,
};
use polymac::multipoly::MultiPoly;
use polymac::polytope::{builtins, Polytope};
use polymac::rational::{rat, rat_int, vec_scale, vec_sub, Rational};
use polymac::samples::{sample_points, SamplePolicy};
use polymac::series::twisted_todd_series;
use polymac::spline::bspline;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_weights(rng: &mut ChaCha8Rng, n: usize) -> Weights {
    Weights::from_rationals(
        &(0..n)
            .map(|_| rat(rng.gen_range(-3i64..=4), rng.gen_range(1i64..=5)))
            .collect::<Vec<_>>(),
    )
}

/// Three certified base points in pairwise distinct regions.
fn three_epsilons(p: &Polytope) -> Vec<Vec<Rational>> {
    let mut out = vec![find_interior_epsilon(p)];
    out.push(find_vertex_only_epsilon(p).expect("vertex-only base point"));
    // near-outside candidates: facet centroids pushed slightly outward
    'search: for facet in 0..p.num_facets() {
        let face_id = p.face_by_jset(&[facet]).unwrap();
        let fc = p.face_centroid(face_id);
        for t in [rat(1, 7), rat(2, 11), rat(3, 13)] {
            let eta = polymac::rational::int_vec_to_rational(&p.facets[facet].normal);
            let cand = vec_sub(&fc, &vec_scale(&t, &eta));
            if in_open_chamber(p, &cand) {
                let sig = region_signature(p, &cand, Polarization::Toward).unwrap();
                let distinct = out.iter().all(|e| {
                    region_signature(p, e, Polarization::Toward).unwrap() != sig
                });
                if distinct {
                    out.push(cand);
                    break 'search;
                }
            }
        }
    }
    assert_eq!(out.len(), 3, "need three certified base points");
    let sigs: Vec<_> = out
        .iter()
        .map(|e| region_signature(p, e, Polarization::Toward).unwrap())
        .collect();
    for i in 0..3 {
        for j in (i + 1)..3 {
            assert_ne!(sigs[i], sigs[j], "base points share a region");
        }
    }
    out
}

/// Shared sweep for criteria 1 and 2.
fn decomposition_sweep(variant: Polarization) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checks = 0;
    for (name, p) in builtins::all() {
        let points = sample_points(&p, &SamplePolicy { seed: 42, ..Default::default() });
        assert!(points.len() >= 200, "{name}: sample policy too small");
        let weight_vectors: Vec<Weights> =
            (0..5).map(|_| random_weights(&mut rng, p.num_facets())).collect();
        for eps in three_epsilons(&p) {
            let terms = decomposition_terms(&p, &eps, variant).unwrap();
            for x in &points {
                let geoms = terms.geometry_at(x);
                for w in &weight_vectors {
                    let got = sum_from_geometry(&geoms, w);
                    let expected = weighted_indicator_polytope(&p, w, x);
                    assert_eq!(
                        got, expected,
                        "{name}: {variant:?} decomposition fails at {x:?}"
                    );
                    checks += 1;
                }
            }
        }
    }
    checks
}

#[test]
fn criterion_1_decomposition_identity_toward() {
    let t = Instant::now();
    let checks = decomposition_sweep(Polarization::Toward);
    let elapsed = t.elapsed();
    println!(
        "criterion 1 (pointwise decomposition identity, toward variant): PASS \
         [{checks} point-weight checks in {elapsed:?}]"
    );
    assert!(elapsed < Duration::from_secs(10), "budget exceeded: {elapsed:?}");
}

#[test]
fn criterion_2_variant_equivalence_and_vertex_only_specialization() {
    let t = Instant::now();
    let checks = decomposition_sweep(Polarization::Away);
    // vertex-only base point reproduces the polar vertex decomposition
    // term for term
    for (name, p) in builtins::all() {
        let eps = find_vertex_only_epsilon(&p).expect("vertex-only base point");
        let away = decomposition_terms(&p, &eps, Polarization::Away).unwrap();
        for term in &away.terms {
            if p.face(term.face_id).dim > 0 {
                assert!(!term.phi, "{name}: non-vertex face survives");
            }
        }
        let v0 = furthest_vertex(&p, &eps).expect("unique furthest vertex");
        let xi = vec_sub(&eps, &p.vertices[v0]);
        let lv = lawrence_varchenko_terms(&p, &xi).unwrap();
        for lt in &lv.terms {
            let at = away.terms.iter().find(|t| t.face_id == lt.face_id).unwrap();
            assert!(at.phi, "{name}: vertex term dropped");
            assert_eq!(at.sign, lt.sign, "{name}: sign differs at a vertex");
            assert_eq!(at.cone.flips, lt.cone.flips, "{name}: flips differ");
        }
    }
    let elapsed = t.elapsed();
    println!(
        "criterion 2 (away variant + vertex-only polar specialization): PASS \
         [{checks} point-weight checks in {elapsed:?}]"
    );
    assert!(elapsed < Duration::from_secs(10), "budget exceeded: {elapsed:?}");
}

#[test]
fn criterion_3_brianchon_gram_specializations() {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    let mut interior_checks = 0;
    let mut exterior_checks = 0;
    let mut boundary_checks = 0;
    for (name, p) in builtins::all() {
        let terms = brianchon_gram_terms(&p);
        let ones = Weights::ones(p.num_facets());
        let points = sample_points(&p, &SamplePolicy { seed: 77, ..Default::default() });
        let interior: Vec<_> =
            points.iter().filter(|x| p.strictly_contains(x)).take(50).collect();
        let exterior: Vec<_> = points.iter().filter(|x| !p.contains(x)).take(50).collect();
        assert!(interior.len() >= 50, "{name}: not enough interior samples");
        assert!(exterior.len() >= 50, "{name}: not enough exterior samples");
        for x in interior {
            assert!(terms.sum_at(&ones, x).is_one(), "{name}: classical sum at {x:?}");
            interior_checks += 1;
        }
        for x in exterior {
            assert!(terms.sum_at(&ones, x).is_zero(), "{name}: classical sum at {x:?}");
            exterior_checks += 1;
        }
        // weighted version on every boundary sample point
        for _ in 0..2 {
            let w = random_weights(&mut rng, p.num_facets());
            for x in points.iter().filter(|x| p.contains(x) && !p.strictly_contains(x)) {
                assert_eq!(
                    terms.sum_at(&w, x),
                    weighted_indicator_polytope(&p, &w, x),
                    "{name}: weighted boundary value at {x:?}"
                );
                boundary_checks += 1;
            }
        }
    }
    let elapsed = t.elapsed();
    println!(
        "criterion 3 (classical and weighted unpolarized specialization): PASS \
         [{interior_checks} interior, {exterior_checks} exterior, \
         {boundary_checks} weighted boundary checks in {elapsed:?}]"
    );
}

#[test]
fn criterion_4_one_dimensional_identities() {
    let t = Instant::now();
    let q_pairs = [
        (rat(1, 2), rat(1, 2)),
        (rat(2, 3), rat(-1, 5)),
        (rat_int(0), rat_int(1)),
    ];
    let intervals = [(0i64, 3i64), (-2, 2)];
    let mut combos = 0;
    for order in 3..=6usize {
        let shifts = [rat_int(0), rat(-3, 2), rat(1, 3)];
        let shift = &shifts[order % 3];
        let scale = if order == 5 { 2 } else { 1 };
        let f = bspline(order, shift, scale);
        for m in 1..=(order - 2).min(4) {
            for (a, b) in intervals {
                for (qa, qb) in &q_pairs {
                    let rep = polymac::em1d::em_interval(
                        &f,
                        a,
                        b,
                        &CycloNumber::from_rational(qa.clone()),
                        &CycloNumber::from_rational(qb.clone()),
                        m,
                    )
                    .unwrap();
                    assert!(
                        rep.holds(),
                        "interval identity fails: order {order}, m {m}, [{a},{b}]"
                    );
                    combos += 1;
                }
            }
            // rays and the whole line at the same smoothness
            let q = CycloNumber::from_rational(rat(3, 7));
            assert!(polymac::em1d::em_halfray(&f, -1, &q, m).unwrap().holds());
            assert!(polymac::em1d::em_halfray_left(&f, 2, &q, m).unwrap().holds());
            assert!(polymac::em1d::em_line(&f, m).unwrap().holds());
            combos += 3;
        }
    }
    let elapsed = t.elapsed();
    println!(
        "criterion 4 (interval/ray/line identities with remainder): PASS \
         [{combos} combinations in {elapsed:?}]"
    );
    assert!(combos >= 40);
    assert!(elapsed < Duration::from_secs(5), "budget exceeded: {elapsed:?}");
}

#[test]
fn criterion_5_twisted_identities_and_kernel_characterization() {
    let t = Instant::now();
    let mut identity_checks = 0;
    for (j, kk) in [(1i64, 2u64), (1, 3), (1, 4), (1, 6)] {
        let lam = CycloNumber::root_of_unity(j, kk);
        for k in [2usize, 3, 4] {
            for q in [rat(1, 2), rat(1, 3), rat_int(0)] {
                let f = bspline(6, &rat(-5, 2), 1);
                let rep = polymac::em1d::em_twisted_halfray(
                    &f,
                    &lam,
                    &CycloNumber::from_rational(q.clone()),
                    k,
                )
                .unwrap();
                assert!(rep.holds(), "twisted identity fails: order {kk}, k {k}, q {q}");
                identity_checks += 1;
            }
        }
        // kernel value at zero vs series coefficients, through degree 8
        let series = twisted_todd_series(&CycloNumber::one(), &lam, 8).unwrap();
        for m in 2..=8usize {
            assert_eq!(
                polymac::periodic::twisted_kernel_at_zero(m, &lam).unwrap(),
                series.coefficient(m),
                "kernel/series disagreement at twist order {kk}, degree {m}"
            );
        }
    }
    let elapsed = t.elapsed();
    println!(
        "criterion 5 (twisted half-ray identities + kernel characterization): PASS \
         [{identity_checks} identities in {elapsed:?}]"
    );
    assert!(elapsed < Duration::from_secs(5), "budget exceeded: {elapsed:?}");
}

fn monomials_up_to(d: usize, deg: u32) -> Vec<MultiPoly> {
    let mut out = Vec::new();
    let mut stack = vec![vec![0u32; d]];
    // enumerate exponent vectors with total degree <= deg
    let mut seen = std::collections::BTreeSet::new();
    while let Some(e) = stack.pop() {
        if !seen.insert(e.clone()) {
            continue;
        }
        out.push(MultiPoly::monomial(d, e.clone(), CycloNumber::one()));
        for i in 0..d {
            let total: u32 = e.iter().sum();
            if total < deg {
                let mut e2 = e.clone();
                e2[i] += 1;
                stack.push(e2);
            }
        }
    }
    out
}

#[test]
fn criterion_6_exact_polynomial_formula() {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    let mut runs = 0;
    for (name, p) in builtins::all() {
        let weight_vectors: Vec<Weights> =
            (0..5).map(|_| random_weights(&mut rng, p.num_facets())).collect();
        for integrand in monomials_up_to(p.dim, 3) {
            let mut first_formula: Option<CycloNumber> = None;
            for w in &weight_vectors {
                let run = em_poly_run(&p, w, &integrand, None).unwrap();
                assert!(
                    run.matches(),
                    "{name}: formula {} vs oracle {} for {integrand}",
                    run.formula,
                    run.oracle
                );
                assert!(
                    run.formula.is_rational(),
                    "{name}: cyclotomic part must vanish for rational weights"
                );
                first_formula.get_or_insert(run.formula);
                runs += 1;
            }
            // truncation stability for the first weight vector
            let k0 = integrand.total_degree() as usize + p.dim + 1;
            for extra in 1..=2usize {
                let run =
                    em_poly_run(&p, &weight_vectors[0], &integrand, Some(k0 + extra))
                        .unwrap();
                assert_eq!(
                    &run.formula,
                    first_formula.as_ref().unwrap(),
                    "{name}: value moved at truncation {}",
                    k0 + extra
                );
                runs += 1;
            }
        }
    }
    let elapsed = t.elapsed();
    println!(
        "criterion 6 (exact polynomial formula vs enumeration, k-stability): PASS \
         [{runs} runs in {elapsed:?}]"
    );
    assert!(elapsed < Duration::from_secs(60), "budget exceeded: {elapsed:?}");
}

#[test]
fn criterion_7_group_structure() {
    let t = Instant::now();
    let mut partition_checks = 0;
    for (name, p) in builtins::all() {
        let groups = all_gamma_groups(&p);
        #[allow(clippy::needless_range_loop)]
        for f in 0..p.faces.len() {
            let total: usize = p
                .superfaces(f)
                .into_iter()
                .map(|g| groups[g].boundary_indices().len())
                .sum();
            assert_eq!(
                BigInt::from(total),
                groups[f].order,
                "{name}: partition identity at face {:?}",
                p.face(f).jset
            );
            partition_checks += 1;
        }
        // vertex group order = |det of the active normal matrix|
        #[allow(clippy::needless_range_loop)]
        for f in 0..p.faces.len() {
            if p.face(f).dim != 0 {
                continue;
            }
            let rows: Vec<Vec<Rational>> = p
                .face(f)
                .jset
                .iter()
                .map(|&j| polymac::rational::int_vec_to_rational(&p.facets[j].normal))
                .collect();
            let det = polymac::linalg::QMat::from_rows(&rows).det();
            assert_eq!(
                Rational::from_integer(groups[f].order.clone()),
                det.abs(),
                "{name}: vertex group order"
            );
        }
    }
    // averaging check over the index-2 cone of the triangle, 10 x 10 grid
    let p = builtins::t2();
    let f10 = (0..p.faces.len())
        .find(|&f| p.face(f).dim == 0 && p.face(f).base_point == vec![rat_int(1), rat_int(0)])
        .unwrap();
    let g = gamma_group(&p, f10);
    assert_eq!(g.order, BigInt::from(2));
    let l = working_order(&p);
    let gens = p.cone_generators(f10).unwrap();
    let mut grid_checks = 0;
    for c1 in 0..10i64 {
        for c2 in 0..10i64 {
            let x: Vec<Rational> = (0..2)
                .map(|i| rat_int(c1) * &gens[0][i] + rat_int(c2) * &gens[1][i])
                .collect();
            let avg = character_average(&g, &[c1, c2], l).unwrap();
            let expect = if x.iter().all(polymac::rational::is_integer) {
                CycloNumber::one()
            } else {
                CycloNumber::zero()
            };
            assert_eq!(avg, expect, "grid ({c1}, {c2})");
            grid_checks += 1;
        }
    }
    let elapsed = t.elapsed();
    println!(
        "criterion 7 (group partition, vertex determinants, character averaging): PASS \
         [{partition_checks} faces, {grid_checks} grid points in {elapsed:?}]"
    );
}

#[test]
fn criterion_8_wall_crossing_regression() {
    let t = Instant::now();
    let p = builtins::square();
    // wall lines of the square are the four facet span lines; regions inside
    // the box [-1, 2]^2 are the nine open cells of that axis-aligned grid
    let cuts = [rat_int(-1), rat_int(0), rat_int(1), rat_int(2)];
    let mut epsilons = Vec::new();
    for ix in 0..3 {
        for iy in 0..3 {
            let ex = (&cuts[ix] + &cuts[ix + 1]) / rat_int(2);
            let ey = (&cuts[iy] + &cuts[iy + 1]) / rat_int(2);
            // off-center nudge so no accidental symmetry hides a region
            let eps = vec![ex + rat(1, 17), ey + rat(1, 23)];
            assert!(in_open_chamber(&p, &eps), "cell midpoint on a wall");
            epsilons.push(eps);
        }
    }
    assert_eq!(epsilons.len(), 9);
    // pairwise distinct regions
    let sigs: Vec<_> = epsilons
        .iter()
        .map(|e| region_signature(&p, e, Polarization::Toward).unwrap())
        .collect();
    for i in 0..sigs.len() {
        for j in (i + 1)..sigs.len() {
            assert_ne!(sigs[i], sigs[j], "cells {i} and {j} share a signature");
        }
    }
    // identical pointwise sums across all regions
    let mut rng = ChaCha8Rng::seed_from_u64(808);
    let points = sample_points(&p, &SamplePolicy { seed: 4, ..Default::default() });
    let weight_vectors: Vec<Weights> =
        (0..2).map(|_| random_weights(&mut rng, p.num_facets())).collect();
    let mut checks = 0;
    let reference: Vec<_> = epsilons
        .iter()
        .map(|e| decomposition_terms(&p, e, Polarization::Toward).unwrap())
        .collect();
    for x in &points {
        let geoms: Vec<_> = reference.iter().map(|t| t.geometry_at(x)).collect();
        for w in &weight_vectors {
            let expected = weighted_indicator_polytope(&p, w, x);
            for g in &geoms {
                assert_eq!(
                    sum_from_geometry(g, w),
                    expected,
                    "wall-crossing disagreement at {x:?}"
                );
                checks += 1;
            }
        }
    }
    let elapsed = t.elapsed();
    println!(
        "criterion 8 (wall-crossing regression over 9 regions): PASS \
         [{checks} checks in {elapsed:?}]"
    );
    assert!(elapsed < Duration::from_secs(10), "budget exceeded: {elapsed:?}");
}
