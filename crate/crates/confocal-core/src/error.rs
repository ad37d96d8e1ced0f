use thiserror::Error;

/// Errors raised by the confocal-geometry primitives.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("family axes must satisfy a1 > a2 > ... > ad > 0 with d >= 2, got {0:?}")]
    InvalidFamily(Vec<f64>),

    #[error("input contains a non-finite value")]
    NonfiniteInput,

    #[error("quadric parameter {0} coincides with an axis value (degenerate quadric)")]
    DegenerateQuadric(f64),

    #[error("line passes through a focal singularity; caustic degenerates at a{0}")]
    DegenerateLine(usize),

    #[error("point is not on the quadric: |Q_lambda(p) - 1| = {residual:e} exceeds tolerance {tol:e}")]
    NotOnQuadric { residual: f64, tol: f64 },

    #[error("direction must be a unit vector: | |v| - 1 | = {0:e}")]
    NotUnitDirection(f64),

    #[error("zero direction vector")]
    ZeroDirection,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("caustic values violate the interval-count rule: {0}")]
    CausticIntervalRule(String),

    #[error("no tangent direction exists for the requested caustics at this point")]
    NoTangentDirection,
}
