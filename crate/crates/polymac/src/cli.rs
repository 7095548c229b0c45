//! Command implementations behind the thin binary: each takes a [`JobSpec`]
//! and returns an exit code with a JSON report.
//!
//! Exit codes: `0` all identities hold, `1` a recorded identity violation or
//! oracle mismatch, `2` an invalid job (bad flags, base point on a wall,
//! wrong dimension).

use crate::config::{
    load_polytope, parse_epsilon, parse_lambda, parse_poly, parse_spline, parse_variant,
    parse_weights, JobSpec,
};
use crate::decomposition::{
    brianchon_gram_terms, furthest_vertex, in_open_chamber, lawrence_varchenko_terms,
    wall_witness, verify_terms, Weights,
};
use crate::error::Error;
use crate::rational::vec_sub;
use crate::report::{self, ErrorReport};
use crate::samples::{sample_points, SamplePolicy};

fn fail(command: &str, code: i32, err: impl ToString) -> (i32, String) {
    let rep = ErrorReport { command: command.into(), error: err.to_string() };
    (code, report::to_json_pretty(&rep))
}

fn polytope_and_weights(
    command: &str,
    spec: &JobSpec,
) -> Result<(String, crate::polytope::Polytope, Weights), (i32, String)> {
    let source = spec
        .polytope
        .as_deref()
        .ok_or_else(|| fail(command, 2, "missing polytope"))?;
    let (p, file_weights) =
        load_polytope(source).map_err(|e| fail(command, 2, e))?;
    let weights = match &spec.weights {
        Some(w) => {
            parse_weights(w, p.num_facets(), spec.seed).map_err(|e| fail(command, 2, e))?
        }
        None => file_weights.unwrap_or_else(|| Weights::ones(p.num_facets())),
    };
    if weights.q.len() != p.num_facets() {
        return Err(fail(command, 2, "weight count differs from facet count"));
    }
    Ok((source.to_string(), p, weights))
}

/// Verify a decomposition pointwise over the fixed sample policy.
pub fn cmd_verify_decomposition(spec: &JobSpec) -> (i32, String) {
    let command = "verify-decomposition";
    let (name, p, w) = match polytope_and_weights(command, spec) {
        Ok(v) => v,
        Err(e) => return e,
    };
    let variant_name = spec.variant.as_deref().unwrap_or("thm41");

    let terms = match variant_name {
        "bg" | "brianchon-gram" => brianchon_gram_terms(&p),
        "lv" | "lawrence-varchenko" => {
            // xi comes from the base point: either an explicit vector or the
            // certified vertex-only construction
            let xi = match spec.epsilon.as_deref() {
                Some(s) if s != "auto" && s != "auto-vertex" => {
                    match parse_epsilon(s, &p) {
                        Ok(v) => v,
                        Err(e) => return fail(command, 2, e),
                    }
                }
                _ => {
                    let Some(eps) = crate::decomposition::find_vertex_only_epsilon(&p)
                    else {
                        return fail(command, 2, "no vertex-only base point found");
                    };
                    let v0 = furthest_vertex(&p, &eps).expect("certified unique");
                    vec_sub(&eps, &p.vertices[v0])
                }
            };
            match lawrence_varchenko_terms(&p, &xi) {
                Ok(t) => t,
                Err(e) => return fail(command, 2, e),
            }
        }
        v => {
            let variant = match parse_variant(v) {
                Ok(v) => v,
                Err(e) => return fail(command, 2, e),
            };
            let eps = match parse_epsilon(spec.epsilon.as_deref().unwrap_or("auto"), &p) {
                Ok(e) => e,
                Err(e) => return fail(command, 2, e),
            };
            if let Some(witness) = wall_witness(&p, &eps) {
                return fail(
                    command,
                    2,
                    format!("base point lies on a wall: {witness:?}"),
                );
            }
            match crate::decomposition::decomposition_terms(&p, &eps, variant) {
                Ok(t) => t,
                Err(e) => return fail(command, 2, e),
            }
        }
    };

    let policy = SamplePolicy { seed: spec.seed, ..Default::default() };
    let points = sample_points(&p, &policy);
    let outcome = verify_terms(&p, &w, &terms, &points);
    let rep = report::decomposition_report(command, &name, &p, &w, &terms, &outcome, spec.seed);
    let code = if outcome.ok() { 0 } else { 1 };
    (code, report::to_json_pretty(&rep))
}

/// The exact polynomial formula against the enumeration oracle.
pub fn cmd_em_poly(spec: &JobSpec) -> (i32, String) {
    let command = "em-poly";
    let (name, p, w) = match polytope_and_weights(command, spec) {
        Ok(v) => v,
        Err(e) => return e,
    };
    let poly_text = spec.poly.as_deref().unwrap_or("1");
    let integrand = match parse_poly(poly_text, p.dim) {
        Ok(q) => q,
        Err(e) => return fail(command, 2, e),
    };
    let run = match crate::empoly::em_poly_run(&p, &w, &integrand, spec.k) {
        Ok(r) => r,
        Err(e) => return fail(command, 2, e),
    };
    let rep = report::em_poly_report(command, &name, &w, poly_text, &run);
    let code = if run.matches() { 0 } else { 1 };
    (code, report::to_json_pretty(&rep))
}

/// One-dimensional identities with remainder.
pub fn cmd_em_1d(spec: &JobSpec) -> (i32, String) {
    let command = "em-1d";
    let identity = spec.identity.as_deref().unwrap_or("interval");
    let spline_text = match spec.spline.as_deref() {
        Some(s) => s,
        None => return fail(command, 2, "missing spline"),
    };
    let f = match parse_spline(spline_text) {
        Ok(f) => f,
        Err(e) => return fail(command, 2, e),
    };
    let q = match spec.q.as_deref() {
        Some(s) => match crate::config::parse_weight(s) {
            Ok(q) => q,
            Err(e) => return fail(command, 2, e),
        },
        None => crate::cyclo::CycloNumber::from_rational(crate::rational::rat(1, 2)),
    };
    let m = spec.m.unwrap_or(1);
    let rep = match identity {
        "interval" => {
            let a = spec.a.unwrap_or(0);
            let b = spec.b.unwrap_or(a + 2);
            let q_right = match spec.q_right.as_deref() {
                Some(s) => match crate::config::parse_weight(s) {
                    Ok(q) => q,
                    Err(e) => return fail(command, 2, e),
                },
                None => q.clone(),
            };
            crate::em1d::em_interval(&f, a, b, &q, &q_right, m)
        }
        "halfray" => crate::em1d::em_halfray(&f, spec.a.unwrap_or(0), &q, m),
        "halfray-left" => crate::em1d::em_halfray_left(&f, spec.a.unwrap_or(0), &q, m),
        "line" => crate::em1d::em_line(&f, m),
        "twisted" => {
            let lambda = match spec.lambda.as_deref() {
                Some(s) => match parse_lambda(s) {
                    Ok(l) => l,
                    Err(e) => return fail(command, 2, e),
                },
                None => return fail(command, 2, "twisted identity needs a twist"),
            };
            let k = spec.k.unwrap_or(2);
            crate::em1d::em_twisted_halfray(&f, &lambda, &q, k)
        }
        other => return fail(command, 2, format!("unknown identity {other:?}")),
    };
    match rep {
        Ok(r) => {
            let code = if r.holds() { 0 } else { 1 };
            (code, report::to_json_pretty(&report::em1d_report(command, &r)))
        }
        Err(e @ Error::SmoothnessTooLow { .. }) | Err(e @ Error::LambdaIsOne) => {
            fail(command, 2, e)
        }
        Err(e) => fail(command, 2, e),
    }
}

/// Dispatch to the polynomial or one-dimensional machinery.
pub fn cmd_em(spec: &JobSpec) -> (i32, String) {
    if spec.poly.is_some() || spec.polytope.is_some() {
        cmd_em_poly(spec)
    } else {
        cmd_em_1d(spec)
    }
}

/// Render a plane sketch to the output path.
pub fn cmd_sketch(spec: &JobSpec) -> (i32, String) {
    let command = "sketch";
    let source = match spec.polytope.as_deref() {
        Some(s) => s,
        None => return fail(command, 2, "missing polytope"),
    };
    let (p, _) = match load_polytope(source) {
        Ok(v) => v,
        Err(e) => return fail(command, 2, e),
    };
    let eps = match parse_epsilon(spec.epsilon.as_deref().unwrap_or("auto"), &p) {
        Ok(e) => e,
        Err(e) => return fail(command, 2, e),
    };
    if !in_open_chamber(&p, &eps) {
        return fail(command, 2, "base point lies on a wall");
    }
    let variant = match parse_variant(spec.variant.as_deref().unwrap_or("thm41")) {
        Ok(v) => v,
        Err(e) => return fail(command, 2, e),
    };
    let (svg, stats) = match crate::sketch::sketch_svg(&p, &eps, variant) {
        Ok(v) => v,
        Err(e) => return fail(command, 2, e),
    };
    let out = spec.out.as_deref().unwrap_or("sketch.svg");
    if let Err(e) = std::fs::write(out, &svg) {
        return fail(command, 2, e);
    }
    #[derive(serde::Serialize)]
    struct SketchDone {
        command: String,
        out: String,
        cones: usize,
        walls: usize,
    }
    let rep = SketchDone {
        command: command.into(),
        out: out.to_string(),
        cones: stats.cones,
        walls: stats.walls,
    };
    (0, report::to_json_pretty(&rep))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(fields: &[(&str, &str)]) -> JobSpec {
        let mut s = JobSpec::default();
        for (k, v) in fields {
            match *k {
                "polytope" => s.polytope = Some(v.to_string()),
                "weights" => s.weights = Some(v.to_string()),
                "epsilon" => s.epsilon = Some(v.to_string()),
                "variant" => s.variant = Some(v.to_string()),
                "poly" => s.poly = Some(v.to_string()),
                "spline" => s.spline = Some(v.to_string()),
                "identity" => s.identity = Some(v.to_string()),
                "lambda" => s.lambda = Some(v.to_string()),
                "q" => s.q = Some(v.to_string()),
                "k" => s.k = Some(v.parse().unwrap()),
                "m" => s.m = Some(v.parse().unwrap()),
                "seed" => s.seed = v.parse().unwrap(),
                _ => panic!("unknown field {k}"),
            }
        }
        s
    }

    #[test]
    fn verify_square_ok() {
        let (code, json) = cmd_verify_decomposition(&spec(&[
            ("polytope", "square"),
            ("weights", "1/2"),
            ("seed", "7"),
        ]));
        assert_eq!(code, 0, "{json}");
        assert!(json.contains(r#""ok": true"#));
    }

    #[test]
    fn verify_wall_epsilon_rejected() {
        let (code, json) = cmd_verify_decomposition(&spec(&[
            ("polytope", "square"),
            ("epsilon", "0,5"),
        ]));
        assert_eq!(code, 2);
        assert!(json.contains("wall"));
    }

    #[test]
    fn verify_brianchon_gram_cube() {
        let (code, _) = cmd_verify_decomposition(&spec(&[
            ("polytope", "cube"),
            ("variant", "bg"),
            ("weights", "random"),
            ("seed", "3"),
        ]));
        assert_eq!(code, 0);
    }

    #[test]
    fn verify_lawrence_varchenko() {
        let (code, _) = cmd_verify_decomposition(&spec(&[
            ("polytope", "t2"),
            ("variant", "lv"),
            ("weights", "1/3"),
        ]));
        assert_eq!(code, 0);
    }

    #[test]
    fn em_poly_t2_count() {
        let (code, json) = cmd_em_poly(&spec(&[
            ("polytope", "t2"),
            ("poly", "1"),
            ("weights", "1"),
        ]));
        assert_eq!(code, 0, "{json}");
        assert!(json.contains(r#""formula": "4""#), "{json}");
    }

    #[test]
    fn em_poly_under_truncation_is_exit_one() {
        let (code, json) = cmd_em_poly(&spec(&[
            ("polytope", "t2"),
            ("poly", "x*y"),
            ("weights", "1"),
            ("k", "1"),
        ]));
        assert_eq!(code, 1);
        assert!(json.contains(r#""ok": false"#));
    }

    #[test]
    fn em_1d_twisted() {
        let (code, json) = cmd_em_1d(&spec(&[
            ("identity", "twisted"),
            ("lambda", "-1"),
            ("k", "2"),
            ("spline", "bspline:4"),
        ]));
        assert_eq!(code, 0, "{json}");
    }

    #[test]
    fn em_1d_rough_spline_is_spec_error() {
        let (code, _) = cmd_em_1d(&spec(&[
            ("identity", "interval"),
            ("spline", "bspline:2"),
            ("m", "3"),
        ]));
        assert_eq!(code, 2);
    }

    #[test]
    fn reports_are_deterministic() {
        let s = spec(&[("polytope", "t2"), ("weights", "random"), ("seed", "11")]);
        let (c1, j1) = cmd_verify_decomposition(&s);
        let (c2, j2) = cmd_verify_decomposition(&s);
        assert_eq!((c1, &j1), (c2, &j2));
        let s2 = spec(&[("polytope", "t2"), ("weights", "random"), ("seed", "12")]);
        let (_, j3) = cmd_verify_decomposition(&s2);
        assert_ne!(j1, j3);
    }

    #[test]
    fn em_dispatcher_routes_by_spec_shape() {
        let (code, json) = cmd_em(&spec(&[("polytope", "t2"), ("poly", "1")]));
        assert_eq!(code, 0);
        assert!(json.contains(r#""command": "em-poly""#));
        let (code, json) = cmd_em(&spec(&[
            ("identity", "line"),
            ("spline", "bspline:4"),
            ("m", "2"),
        ]));
        assert_eq!(code, 0);
        assert!(json.contains(r#""command": "em-1d""#));
    }

    #[test]
    fn sketch_rejects_three_dimensions() {
        let (code, _) = cmd_sketch(&spec(&[("polytope", "cube")]));
        assert_eq!(code, 2);
    }
}
