//! Job specifications and the JSON / CLI-literal formats for polytopes,
//! weights, polynomials and splines. All numbers cross this boundary as
//! exact strings (`"p/q"`) or explicit cyclotomic coefficient vectors.

use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::cyclo::CycloNumber;
use crate::decomposition::{Polarization, Weights};
use crate::error::Error;
use crate::multipoly::MultiPoly;
use crate::polytope::{builtins, Polytope};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::spline::{bspline, Poly1, Spline1D};

/// One half-space in the JSON polytope format.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FacetSpec {
    pub normal: Vec<i64>,
    pub offset: String,
}

/// JSON polytope: `{"d": 2, "facets": [{"normal": [1,0], "offset": "0"}...],
/// "weights": ["1/2", {"order": 4, "coeffs": ["0","1"]}]?}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolytopeSpec {
    pub d: usize,
    pub facets: Vec<FacetSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<WeightSpec>>,
}

/// A weight: a rational string or an explicit cyclotomic element.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WeightSpec {
    Rational(String),
    Cyclo(CycloNumber),
}

impl WeightSpec {
    pub fn to_cyclo(&self) -> Result<CycloNumber, Error> {
        match self {
            WeightSpec::Rational(s) => Ok(CycloNumber::from_rational(parse_rational(s)?)),
            WeightSpec::Cyclo(c) => Ok(c.clone()),
        }
    }
}

impl PolytopeSpec {
    pub fn build(&self) -> Result<Polytope, Error> {
        let normals: Vec<Vec<BigInt>> = self
            .facets
            .iter()
            .map(|f| f.normal.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let offsets = self
            .facets
            .iter()
            .map(|f| parse_rational(&f.offset))
            .collect::<Result<Vec<_>, _>>()?;
        if normals.iter().any(|n| n.len() != self.d) {
            return Err(Error::InvalidSpec("normal length differs from d".into()));
        }
        Polytope::build(normals, offsets)
    }

    pub fn weights(&self) -> Result<Option<Weights>, Error> {
        match &self.weights {
            None => Ok(None),
            Some(ws) => {
                let q = ws.iter().map(|w| w.to_cyclo()).collect::<Result<Vec<_>, _>>()?;
                Ok(Some(Weights { q }))
            }
        }
    }

    pub fn from_polytope(p: &Polytope) -> Self {
        PolytopeSpec {
            d: p.dim,
            facets: p
                .facets
                .iter()
                .map(|f| FacetSpec {
                    normal: f
                        .normal
                        .iter()
                        .map(|x| i64::try_from(x).expect("desk-scale normal"))
                        .collect(),
                    offset: format_rational(&f.offset),
                })
                .collect(),
            weights: None,
        }
    }
}

/// Spline literal: a bare B-spline, a linear combination, or explicit
/// breakpoints and pieces.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SplineSpec {
    BSpline { bspline: BsplineParams },
    Combo { combo: Vec<ComboTerm> },
    Literal { breakpoints: Vec<String>, pieces: Vec<Vec<String>>, smoothness: i64 },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BsplineParams {
    pub order: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shift: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scale: Option<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComboTerm {
    pub coeff: String,
    pub spline: Box<SplineSpec>,
}

impl SplineSpec {
    pub fn build(&self) -> Result<Spline1D, Error> {
        match self {
            SplineSpec::BSpline { bspline: params } => {
                let shift = match &params.shift {
                    Some(s) => parse_rational(s)?,
                    None => Rational::from_integer(0.into()),
                };
                let scale = params.scale.unwrap_or(1);
                if params.order == 0 || scale == 0 {
                    return Err(Error::InvalidSpec("bspline order/scale must be positive".into()));
                }
                Ok(bspline(params.order, &shift, scale))
            }
            SplineSpec::Combo { combo } => {
                if combo.is_empty() {
                    return Err(Error::InvalidSpec("empty spline combination".into()));
                }
                let mut acc: Option<Spline1D> = None;
                for term in combo {
                    let c = parse_rational(&term.coeff)?;
                    let s = term.spline.build()?.scale(&c);
                    acc = Some(match acc {
                        None => s,
                        Some(a) => a.add(&s),
                    });
                }
                Ok(acc.unwrap())
            }
            SplineSpec::Literal { breakpoints, pieces, smoothness } => {
                let bps = breakpoints
                    .iter()
                    .map(|s| parse_rational(s))
                    .collect::<Result<Vec<_>, _>>()?;
                let ps = pieces
                    .iter()
                    .map(|cs| {
                        Ok(Poly1::from_coeffs(
                            cs.iter()
                                .map(|s| parse_rational(s))
                                .collect::<Result<Vec<_>, Error>>()?,
                        ))
                    })
                    .collect::<Result<Vec<_>, Error>>()?;
                Spline1D::new(bps, ps, *smoothness)
            }
        }
    }
}

/// Sparse monomial: `{"exponents": [1, 2], "coeff": "3/4"}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MonomialSpec {
    pub exponents: Vec<u32>,
    pub coeff: String,
}

pub fn poly_from_monomials(d: usize, monomials: &[MonomialSpec]) -> Result<MultiPoly, Error> {
    let mut p = MultiPoly::zero(d);
    for m in monomials {
        if m.exponents.len() != d {
            return Err(Error::InvalidSpec(format!(
                "monomial has {} exponents in dimension {d}",
                m.exponents.len()
            )));
        }
        p.add_term(
            m.exponents.clone(),
            CycloNumber::from_rational(parse_rational(&m.coeff)?),
        );
    }
    Ok(p)
}

/// A complete, deterministic job description: everything a CLI run needs.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct JobSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polytope: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poly: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spline: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identity: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_right: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<String>,
}

/// Load a polytope: a builtin name, an inline JSON object, or a file path.
pub fn load_polytope(source: &str) -> Result<(Polytope, Option<Weights>), Error> {
    if let Some(p) = builtins::by_name(source) {
        return Ok((p, None));
    }
    let text = if source.trim_start().starts_with('{') {
        source.to_string()
    } else if Path::new(source).exists() {
        std::fs::read_to_string(source)?
    } else {
        return Err(Error::InvalidSpec(format!(
            "polytope {source:?} is neither a builtin ({}), inline JSON, nor a file",
            builtins::NAMES.join(", ")
        )));
    };
    let spec: PolytopeSpec = serde_json::from_str(&text)?;
    let p = spec.build()?;
    let w = spec.weights()?;
    Ok((p, w))
}

/// Parse a weight literal: a rational string, `root:j/K` for a root of
/// unity, or an explicit cyclotomic JSON object.
pub fn parse_weight(s: &str) -> Result<CycloNumber, Error> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix("root:") {
        let (j, k) = parse_root_exponent(rest)?;
        return Ok(CycloNumber::root_of_unity(j, k));
    }
    if s.starts_with('{') {
        return Ok(serde_json::from_str(s)?);
    }
    Ok(CycloNumber::from_rational(parse_rational(s)?))
}

fn parse_root_exponent(s: &str) -> Result<(i64, u64), Error> {
    let err = || Error::InvalidSpec(format!("invalid root exponent {s:?}; expected j/K"));
    let (j, k) = s.split_once('/').ok_or_else(err)?;
    let j: i64 = j.trim().parse().map_err(|_| err())?;
    let k: u64 = k.trim().parse().map_err(|_| err())?;
    if k == 0 {
        return Err(err());
    }
    Ok((j, k))
}

/// Parse the `--weights` flag: a single literal (uniform), a comma list
/// (one per facet), or `random` (seeded rationals).
pub fn parse_weights(s: &str, nfacets: usize, seed: u64) -> Result<Weights, Error> {
    use rand::{Rng, SeedableRng};
    let s = s.trim();
    if s == "random" {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0x77ca75);
        let q = (0..nfacets)
            .map(|_| {
                CycloNumber::from_rational(crate::rational::rat(
                    rng.gen_range(-4i64..=5),
                    rng.gen_range(1i64..=6),
                ))
            })
            .collect();
        return Ok(Weights { q });
    }
    if s.contains(',') {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != nfacets {
            return Err(Error::InvalidSpec(format!(
                "{} weights for {nfacets} facets",
                parts.len()
            )));
        }
        let q = parts.iter().map(|p| parse_weight(p)).collect::<Result<Vec<_>, _>>()?;
        return Ok(Weights { q });
    }
    Ok(Weights::uniform(nfacets, parse_weight(s)?))
}

/// Parse `--epsilon`: `auto` (certified interior search), `auto-vertex`
/// (certified base point with vertex-only terms), or a comma list of
/// rationals.
pub fn parse_epsilon(s: &str, p: &Polytope) -> Result<Vec<Rational>, Error> {
    let s = s.trim();
    if s == "auto" {
        return Ok(crate::decomposition::find_interior_epsilon(p));
    }
    if s == "auto-vertex" {
        return crate::decomposition::find_vertex_only_epsilon(p).ok_or_else(|| {
            Error::InvalidSpec("no vertex-only base point found".into())
        });
    }
    let coords = s
        .split(',')
        .map(parse_rational)
        .collect::<Result<Vec<_>, _>>()?;
    if coords.len() != p.dim {
        return Err(Error::InvalidSpec(format!(
            "epsilon has {} coordinates in dimension {}",
            coords.len(),
            p.dim
        )));
    }
    Ok(coords)
}

pub fn parse_variant(s: &str) -> Result<Polarization, Error> {
    match s {
        "thm41" | "toward" => Ok(Polarization::Toward),
        "thm42" | "away" => Ok(Polarization::Away),
        other => Err(Error::InvalidSpec(format!(
            "unknown polarization variant {other:?} (expected thm41 or thm42)"
        ))),
    }
}

/// Parse `--poly`: a shorthand like `1`, `x0`, `2/3*x0^2*x1 + x1`, an inline
/// JSON monomial list, or a path to one. Variables `x`, `y`, `z` alias
/// `x0`, `x1`, `x2`.
pub fn parse_poly(s: &str, d: usize) -> Result<MultiPoly, Error> {
    let s = s.trim();
    if s.starts_with('[') {
        let monomials: Vec<MonomialSpec> = serde_json::from_str(s)?;
        return poly_from_monomials(d, &monomials);
    }
    if Path::new(s).exists() && s.ends_with(".json") {
        let monomials: Vec<MonomialSpec> =
            serde_json::from_str(&std::fs::read_to_string(s)?)?;
        return poly_from_monomials(d, &monomials);
    }
    let mut out = MultiPoly::zero(d);
    for term in s.replace('-', "+-").split('+') {
        let term = term.trim();
        if term.is_empty() {
            continue;
        }
        let mut coeff = Rational::from_integer(1.into());
        let mut negate = false;
        let mut exponents = vec![0u32; d];
        for (idx, factor) in term.split('*').enumerate() {
            let mut factor = factor.trim();
            if factor.starts_with('-') {
                negate = !negate;
                factor = factor[1..].trim();
            }
            if factor.is_empty() {
                continue;
            }
            let (var, exp) = match factor.split_once('^') {
                Some((v, e)) => (
                    v.trim(),
                    e.trim().parse::<u32>().map_err(|_| {
                        Error::InvalidSpec(format!("bad exponent in {factor:?}"))
                    })?,
                ),
                None => (factor, 1),
            };
            let var_index = match var {
                "x" => Some(0),
                "y" => Some(1),
                "z" => Some(2),
                v if v.starts_with('x') && v[1..].chars().all(|c| c.is_ascii_digit()) => {
                    Some(v[1..].parse::<usize>().unwrap())
                }
                _ => None,
            };
            match var_index {
                Some(i) => {
                    if i >= d {
                        return Err(Error::InvalidSpec(format!(
                            "variable x{i} out of range for dimension {d}"
                        )));
                    }
                    exponents[i] += exp;
                }
                None => {
                    if idx == 0 || var.chars().next().map(|c| c.is_ascii_digit()).unwrap_or(false) {
                        coeff *= parse_rational(var)?;
                        if exp != 1 {
                            return Err(Error::InvalidSpec(format!(
                                "cannot exponentiate the coefficient in {term:?}"
                            )));
                        }
                    } else {
                        return Err(Error::InvalidSpec(format!("bad factor {factor:?}")));
                    }
                }
            }
        }
        if negate {
            coeff = -coeff;
        }
        out.add_term(exponents, CycloNumber::from_rational(coeff));
    }
    Ok(out)
}

/// Parse `--spline`: `bspline:order[:shift[:scale]]`, inline JSON, or a
/// path.
pub fn parse_spline(s: &str) -> Result<Spline1D, Error> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix("bspline:") {
        let parts: Vec<&str> = rest.split(':').collect();
        let order: usize = parts[0]
            .parse()
            .map_err(|_| Error::InvalidSpec(format!("bad bspline order {:?}", parts[0])))?;
        let shift = if parts.len() > 1 {
            parse_rational(parts[1])?
        } else {
            Rational::from_integer(0.into())
        };
        let scale: u64 = if parts.len() > 2 {
            parts[2]
                .parse()
                .map_err(|_| Error::InvalidSpec(format!("bad bspline scale {:?}", parts[2])))?
        } else {
            1
        };
        if order == 0 || scale == 0 {
            return Err(Error::InvalidSpec("bspline order/scale must be positive".into()));
        }
        return Ok(bspline(order, &shift, scale));
    }
    let text = if s.starts_with('{') {
        s.to_string()
    } else if Path::new(s).exists() {
        std::fs::read_to_string(s)?
    } else {
        return Err(Error::InvalidSpec(format!("unrecognized spline literal {s:?}")));
    };
    let spec: SplineSpec = serde_json::from_str(&text)?;
    spec.build()
}

/// Parse `--lambda`: `1`, `-1`, or an exponent `j/K` meaning
/// `e^(2 pi i j/K)`.
pub fn parse_lambda(s: &str) -> Result<CycloNumber, Error> {
    match s.trim() {
        "1" => Ok(CycloNumber::one()),
        "-1" => Ok(CycloNumber::root_of_unity(1, 2)),
        other => {
            let (j, k) = parse_root_exponent(other)?;
            Ok(CycloNumber::root_of_unity(j, k))
        }
    }
}
