//! Crate error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("polytope is not simple: vertex {vertex} lies on {active} facets (dimension {dim})")]
    NotSimple { vertex: String, active: usize, dim: usize },

    #[error("polytope is unbounded (recession direction {direction})")]
    Unbounded { direction: String },

    #[error("polytope is empty: no vertex satisfies all facet inequalities")]
    Empty,

    #[error("facet {facet} has a non-primitive normal {normal}")]
    NonPrimitiveNormal { facet: usize, normal: String },

    #[error("facet {facet} is redundant: it supports no face of codimension 1")]
    RedundantFacet { facet: usize },

    #[error("active normals of face {face} are linearly dependent")]
    DegenerateNormals { face: String },

    #[error("zero pairing of generator {generator} of face {face} with the polarizing vector; the base point is on a wall")]
    ZeroPairing { face: String, generator: usize },

    #[error("polarizing vector pairs to zero with generator {generator} at vertex {vertex}")]
    NonGenericXi { vertex: String, generator: usize },

    #[error("decomposition identity violated at {point}: expected {expected}, got {got}")]
    IdentityViolation { point: String, expected: String, got: String },

    #[error("twist parameter is 1; use the untwisted operators instead")]
    LambdaIsOne,

    #[error("{value} is not a root of unity in the working field")]
    NotRootOfUnity { value: String },

    #[error("order {needed} is not compatible with working order {working}")]
    IncompatibleOrder { needed: u64, working: u64 },

    #[error("test function is too rough: identity of order {required} needs smoothness class >= {required_class}, got {got}")]
    SmoothnessTooLow { required: usize, required_class: i64, got: i64 },

    #[error("vertex {vertex} is not integral; the exact polynomial formula requires integer vertices")]
    NonIntegralVertex { vertex: String },

    #[error("operator/oracle mismatch: formula gives {formula}, enumeration gives {oracle}")]
    MismatchWithOracle { formula: String, oracle: String },

    #[error("group element {element} is not in the boundary subset of face {face}")]
    GammaNotBoundary { face: String, element: String },

    #[error("triangulation produced a degenerate simplex at faces {detail}")]
    TriangulationFailure { detail: String },

    #[error("invalid spline: {0}")]
    InvalidSpline(String),

    #[error("invalid job spec: {0}")]
    InvalidSpec(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
