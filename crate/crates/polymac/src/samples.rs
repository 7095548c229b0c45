//! Deterministic sample-point policy for pointwise identity verification:
//! all vertices, all face centroids, points on each facet, seeded random
//! rational points inside and outside, and the integer grid of a margin-1
//! bounding box. Identical seeds give identical point lists.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::polytope::Polytope;
use crate::rational::{rat_int, vec_add, vec_scale, vec_sub, Rational};

#[derive(Debug, Clone)]
pub struct SamplePolicy {
    pub interior: usize,
    pub exterior: usize,
    pub per_facet: usize,
    pub seed: u64,
}

impl Default for SamplePolicy {
    fn default() -> Self {
        SamplePolicy { interior: 110, exterior: 110, per_facet: 5, seed: 0 }
    }
}

fn random_convex_combination(
    rng: &mut ChaCha8Rng,
    points: &[&[Rational]],
    strictly_positive: bool,
) -> Vec<Rational> {
    let dim = points[0].len();
    let lo = if strictly_positive { 1 } else { 0 };
    let weights: Vec<i64> = (0..points.len()).map(|_| rng.gen_range(lo..=97)).collect();
    let total: i64 = weights.iter().sum::<i64>().max(1);
    let mut out = vec![Rational::zero(); dim];
    for (w, pt) in weights.iter().zip(points) {
        for (o, c) in out.iter_mut().zip(*pt) {
            *o += crate::rational::rat(*w, total) * c;
        }
    }
    out
}

/// The fixed sample-point policy; includes every vertex, every face
/// centroid and several points on each facet, so boundary strata are always
/// exercised.
pub fn sample_points(p: &Polytope, policy: &SamplePolicy) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(policy.seed);
    let mut out: Vec<Vec<Rational>> = Vec::new();

    for v in &p.vertices {
        out.push(v.clone());
    }
    for f in 0..p.faces.len() {
        out.push(p.face_centroid(f));
    }
    for facet in 0..p.num_facets() {
        // vertices on this facet
        let vs: Vec<&[Rational]> = p
            .vertices
            .iter()
            .enumerate()
            .filter(|(vi, _)| p.vertex_active[*vi].contains(&facet))
            .map(|(_, v)| v.as_slice())
            .collect();
        for _ in 0..policy.per_facet {
            out.push(random_convex_combination(&mut rng, &vs, false));
        }
    }
    let all: Vec<&[Rational]> = p.vertices.iter().map(|v| v.as_slice()).collect();
    for _ in 0..policy.interior {
        out.push(random_convex_combination(&mut rng, &all, true));
    }
    let centroid = p.centroid();
    for i in 0..policy.exterior {
        if i % 2 == 0 {
            // beyond a random vertex on the ray from the centroid
            let v = &p.vertices[rng.gen_range(0..p.vertices.len())];
            let t = crate::rational::rat(rng.gen_range(1i64..=40), rng.gen_range(7i64..=23));
            let dir = vec_sub(v, &centroid);
            out.push(vec_add(v, &vec_scale(&t, &dir)));
        } else {
            // outward from a random facet centroid along its normal
            let facet = rng.gen_range(0..p.num_facets());
            let face_id = p.face_by_jset(&[facet]).expect("facet face");
            let fc = p.face_centroid(face_id);
            let t = crate::rational::rat(rng.gen_range(1i64..=40), rng.gen_range(11i64..=29));
            let eta = crate::rational::int_vec_to_rational(&p.facets[facet].normal);
            out.push(vec_sub(&fc, &vec_scale(&t, &eta)));
        }
    }
    // margin-1 integer grid around the bounding box
    let (lo, hi) = p.bounding_box();
    let lo: Vec<i64> = lo
        .iter()
        .map(|x| i64::try_from(x.floor().to_integer()).unwrap() - 1)
        .collect();
    let hi: Vec<i64> = hi
        .iter()
        .map(|x| i64::try_from(x.ceil().to_integer()).unwrap() + 1)
        .collect();
    let mut cur = lo.clone();
    'grid: loop {
        out.push(cur.iter().map(|&c| rat_int(c)).collect());
        let mut i = 0;
        loop {
            if i == p.dim {
                break 'grid;
            }
            cur[i] += 1;
            if cur[i] <= hi[i] {
                break;
            }
            cur[i] = lo[i];
            i += 1;
        }
    }

    out.sort_by(|a, b| a.partial_cmp(b).unwrap());
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::builtins;

    #[test]
    fn policy_is_deterministic_and_large_enough() {
        for (name, p) in builtins::all() {
            let policy = SamplePolicy::default();
            let a = sample_points(&p, &policy);
            let b = sample_points(&p, &policy);
            assert_eq!(a, b, "{name}: determinism");
            assert!(a.len() >= 200, "{name}: only {} samples", a.len());
            // contains all vertices
            for v in &p.vertices {
                assert!(a.contains(v), "{name}: vertex missing");
            }
            // contains interior and exterior points
            assert!(a.iter().any(|x| p.strictly_contains(x)), "{name}: no interior");
            assert!(a.iter().any(|x| !p.contains(x)), "{name}: no exterior");
            // contains points on each facet (several, unless the facet is a
            // single point)
            for facet in 0..p.num_facets() {
                let on = a
                    .iter()
                    .filter(|x| {
                        p.contains(x) && p.facet_value(facet, x).is_zero()
                    })
                    .count();
                let needed = if p.dim == 1 { 1 } else { 3 };
                assert!(on >= needed, "{name}: facet {facet} has only {on} samples");
            }
        }
    }

    #[test]
    fn different_seeds_differ() {
        let p = builtins::square();
        let a = sample_points(&p, &SamplePolicy { seed: 1, ..Default::default() });
        let b = sample_points(&p, &SamplePolicy { seed: 2, ..Default::default() });
        assert_ne!(a, b);
    }
}
