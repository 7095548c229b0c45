//! Static SVG sketches of plane decompositions: the polytope, the wall
//! arrangement, the base point with its projections, and the polarized cone
//! fans. Coordinates are rendered in floating point at fixed precision and
//! are not authoritative; every exact statement lives in the JSON reports.

use std::fmt::Write as _;

use crate::decomposition::{decomposition_terms, Polarization, TermList};
use crate::error::Error;
use crate::polytope::Polytope;
use crate::rational::{vec_sub, Rational};

use num_traits::Zero;

#[derive(Debug, Clone)]
pub struct SketchStats {
    pub cones: usize,
    pub walls: usize,
}

fn f(x: &Rational) -> f64 {
    let n: f64 = x.numer().to_string().parse().unwrap_or(0.0);
    let d: f64 = x.denom().to_string().parse().unwrap_or(1.0);
    n / d
}

struct View {
    min: [f64; 2],
    scale: f64,
    size: f64,
}

impl View {
    fn new(points: &[[f64; 2]]) -> View {
        let mut lo = [f64::MAX; 2];
        let mut hi = [f64::MIN; 2];
        for p in points {
            for i in 0..2 {
                lo[i] = lo[i].min(p[i]);
                hi[i] = hi[i].max(p[i]);
            }
        }
        let margin = 1.0 + 0.15 * ((hi[0] - lo[0]).max(hi[1] - lo[1]));
        lo[0] -= margin;
        lo[1] -= margin;
        hi[0] += margin;
        hi[1] += margin;
        let size = 640.0;
        let scale = size / (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-9);
        View { min: lo, scale, size }
    }

    fn map(&self, p: [f64; 2]) -> (f64, f64) {
        (
            (p[0] - self.min[0]) * self.scale,
            self.size - (p[1] - self.min[1]) * self.scale,
        )
    }

    /// Corners of the world-coordinate viewport, counterclockwise.
    fn world_rect(&self) -> Vec<[f64; 2]> {
        let hi = [
            self.min[0] + self.size / self.scale,
            self.min[1] + self.size / self.scale,
        ];
        vec![
            [self.min[0], self.min[1]],
            [hi[0], self.min[1]],
            [hi[0], hi[1]],
            [self.min[0], hi[1]],
        ]
    }
}

/// Clip a convex polygon by the half-plane `{x : n.x + c >= 0}`.
fn clip_halfplane(poly: &[[f64; 2]], n: [f64; 2], c: f64) -> Vec<[f64; 2]> {
    let inside = |p: [f64; 2]| n[0] * p[0] + n[1] * p[1] + c >= -1e-12;
    let mut out = Vec::new();
    for i in 0..poly.len() {
        let a = poly[i];
        let b = poly[(i + 1) % poly.len()];
        let ia = inside(a);
        let ib = inside(b);
        if ia {
            out.push(a);
        }
        if ia != ib {
            let fa = n[0] * a[0] + n[1] * a[1] + c;
            let fb = n[0] * b[0] + n[1] * b[1] + c;
            let t = fa / (fa - fb);
            out.push([a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])]);
        }
    }
    out
}

const CONE_COLORS: [&str; 6] =
    ["#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1", "#76b7b2"];

/// Render the polytope, walls, base point, projections and polarized cone
/// fans (one translucent region per term with a nonzero flag). Only defined
/// in the plane.
pub fn sketch_svg(
    p: &Polytope,
    epsilon: &[Rational],
    variant: Polarization,
) -> Result<(String, SketchStats), Error> {
    if p.dim != 2 {
        return Err(Error::InvalidSpec(format!(
            "sketching is only available in the plane (dimension {})",
            p.dim
        )));
    }
    let terms = decomposition_terms(p, epsilon, variant)?;

    let mut anchor_points: Vec<[f64; 2]> =
        p.vertices.iter().map(|v| [f(&v[0]), f(&v[1])]).collect();
    anchor_points.push([f(&epsilon[0]), f(&epsilon[1])]);
    for t in &terms.terms {
        anchor_points.push([f(&t.cone.base_projection[0]), f(&t.cone.base_projection[1])]);
    }
    let view = View::new(&anchor_points);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{s}" height="{s}" viewBox="0 0 {s} {s}">"#,
        s = view.size
    );
    let _ = writeln!(svg, r#"<rect width="{s}" height="{s}" fill="white"/>"#, s = view.size);

    // cone fans, most transparent layer first
    let mut cones = 0;
    for (ti, t) in terms.terms.iter().enumerate() {
        if !t.phi {
            continue;
        }
        cones += 1;
        let color = CONE_COLORS[ti % CONE_COLORS.len()];
        let mut region = view.world_rect();
        for (i, eta) in t.cone.eff_normals.iter().enumerate() {
            let n = [
                eta[0].to_string().parse::<f64>().unwrap_or(0.0),
                eta[1].to_string().parse::<f64>().unwrap_or(0.0),
            ];
            region = clip_halfplane(&region, n, f(&t.cone.eff_offsets[i]));
            if region.is_empty() {
                break;
            }
        }
        let _ = writeln!(
            svg,
            r#"<g class="cone" data-face="{:?}" data-sign="{}" data-flips="{}">"#,
            t.cone.jset, t.sign, t.cone.m_flips
        );
        if !region.is_empty() {
            let pts: Vec<String> = region
                .iter()
                .map(|&q| {
                    let (x, y) = view.map(q);
                    format!("{x:.3},{y:.3}")
                })
                .collect();
            let _ = writeln!(
                svg,
                r#"<polygon points="{}" fill="{color}" fill-opacity="0.12" stroke="none"/>"#,
                pts.join(" ")
            );
        }
        // generator arrows from the base projection
        let base = [f(&t.cone.base_projection[0]), f(&t.cone.base_projection[1])];
        for g in &t.cone.generators {
            let dir = [f(&g[0]), f(&g[1])];
            let len = (dir[0] * dir[0] + dir[1] * dir[1]).sqrt().max(1e-9);
            let tip = [base[0] + 0.8 * dir[0] / len, base[1] + 0.8 * dir[1] / len];
            let (x1, y1) = view.map(base);
            let (x2, y2) = view.map(tip);
            let _ = writeln!(
                svg,
                r#"<line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="{color}" stroke-width="2"/>"#
            );
        }
        let _ = writeln!(svg, "</g>");
    }

    // wall lines: through each vertex of each edge span, perpendicular to it
    let mut walls = 0;
    for face_id in 0..p.faces.len() {
        let face = p.face(face_id);
        if face.dim != 1 {
            continue;
        }
        let dir = [f(&face.directions[0][0]), f(&face.directions[0][1])];
        for sub in p.proper_subfaces(face_id) {
            let v = &p.face(sub).base_point;
            let base = [f(&v[0]), f(&v[1])];
            // long segment in the perpendicular direction
            let perp = [-dir[1], dir[0]];
            let norm = (perp[0] * perp[0] + perp[1] * perp[1]).sqrt().max(1e-9);
            let reach = 2.0 * view.size / view.scale;
            let a = [base[0] - reach * perp[0] / norm, base[1] - reach * perp[1] / norm];
            let b = [base[0] + reach * perp[0] / norm, base[1] + reach * perp[1] / norm];
            let (x1, y1) = view.map(a);
            let (x2, y2) = view.map(b);
            let _ = writeln!(
                svg,
                r##"<line id="wall-f{face_id}-v{sub}" class="wall" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="#bbbbbb" stroke-width="1" stroke-dasharray="6 4"/>"##
            );
            walls += 1;
        }
    }

    // polytope boundary: edges as strong segments (they are walls too)
    for face_id in 0..p.faces.len() {
        let face = p.face(face_id);
        if face.dim != 1 {
            continue;
        }
        let a = &p.vertices[face.vertex_ids[0]];
        let b = &p.vertices[face.vertex_ids[1]];
        let (x1, y1) = view.map([f(&a[0]), f(&a[1])]);
        let (x2, y2) = view.map([f(&b[0]), f(&b[1])]);
        let _ = writeln!(
            svg,
            r##"<line id="wall-face-f{face_id}" class="wall-face" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="#222222" stroke-width="2.5"/>"##
        );
        walls += 1;
    }

    // projections: dashed connector and a dot per face span
    for t in &terms.terms {
        let beta = [f(&t.cone.base_projection[0]), f(&t.cone.base_projection[1])];
        let e = [f(&epsilon[0]), f(&epsilon[1])];
        if vec_sub(&t.cone.base_projection, epsilon)
            .iter()
            .all(|c| c.is_zero())
        {
            continue;
        }
        let (x1, y1) = view.map(e);
        let (x2, y2) = view.map(beta);
        let _ = writeln!(
            svg,
            r##"<line class="projection" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="#888888" stroke-width="1" stroke-dasharray="2 3"/>"##
        );
        let _ = writeln!(
            svg,
            r##"<circle class="beta" data-face="{:?}" cx="{x2:.3}" cy="{y2:.3}" r="3" fill="#555555"/>"##,
            t.cone.jset
        );
    }

    // vertices and the base point on top
    for v in &p.vertices {
        let (x, y) = view.map([f(&v[0]), f(&v[1])]);
        let _ = writeln!(svg, r##"<circle cx="{x:.3}" cy="{y:.3}" r="3.5" fill="#000000"/>"##);
    }
    let (ex, ey) = view.map([f(&epsilon[0]), f(&epsilon[1])]);
    let _ = writeln!(
        svg,
        r##"<circle class="epsilon" cx="{ex:.3}" cy="{ey:.3}" r="5" fill="#d62728"/>"##
    );
    let _ = writeln!(svg, "</svg>");

    Ok((svg, SketchStats { cones, walls }))
}

/// The term list used for a sketch (same construction the renderer uses).
pub fn sketch_terms(
    p: &Polytope,
    epsilon: &[Rational],
    variant: Polarization,
) -> Result<TermList, Error> {
    decomposition_terms(p, epsilon, variant)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{wall_witness, WallWitness};
    use crate::polytope::builtins;
    use crate::rational::rat;

    #[test]
    fn interior_epsilon_draws_all_cones() {
        let p = builtins::t2();
        let eps = crate::decomposition::find_interior_epsilon(&p);
        let (svg, stats) = sketch_svg(&p, &eps, Polarization::Toward).unwrap();
        assert_eq!(stats.cones, 7);
        assert_eq!(svg.matches(r#"class="cone""#).count(), 7);
        assert!(svg.contains(r#"class="epsilon""#));
    }

    #[test]
    fn exterior_epsilon_draws_only_live_cones() {
        let p = builtins::t2();
        let eps = vec![rat(5, 1), rat(7, 1)];
        let terms = decomposition_terms(&p, &eps, Polarization::Toward).unwrap();
        let live = terms.terms.iter().filter(|t| t.phi).count();
        assert!(live < 7);
        let (svg, stats) = sketch_svg(&p, &eps, Polarization::Toward).unwrap();
        assert_eq!(stats.cones, live);
        assert_eq!(svg.matches(r#"class="cone""#).count(), live);
    }

    #[test]
    fn rejects_other_dimensions() {
        let p = builtins::cube();
        let eps = vec![rat(1, 2); 3];
        assert!(matches!(
            sketch_svg(&p, &eps, Polarization::Toward),
            Err(Error::InvalidSpec(_))
        ));
    }

    #[test]
    fn wall_overlay_matches_witnesses() {
        let p = builtins::square();
        // epsilon straight above a vertex: the projection onto the left edge
        // span lands on the vertex (0, 1)
        let bad = vec![rat(0, 1), rat(5, 1)];
        let witness = wall_witness(&p, &bad).unwrap();
        let good = crate::decomposition::find_interior_epsilon(&p);
        let (svg, _) = sketch_svg(&p, &good, Polarization::Toward).unwrap();
        match witness {
            WallWitness::ProjectionOnSubface { face_id, subface_id } => {
                if p.face(face_id).dim == 1 {
                    let id = format!("wall-f{face_id}-v{subface_id}");
                    assert!(svg.contains(&id), "missing {id}");
                } else {
                    // the violated wall is a face of P itself
                    assert!(svg.contains(&format!("wall-face-f{subface_id}"))
                        || p.face(subface_id).dim == 0);
                }
            }
            WallWitness::ZeroPairing { .. } => {}
        }
    }
}
