use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CayleyError {
    #[error("expansion point is a branch point of the curve (P(x0) = 0)")]
    BranchPoint,

    #[error("period {n} is below the dimension {d}; the condition is attainable only inside a symmetry plane")]
    PeriodTooShort { n: usize, d: usize },

    #[error("parameter ordering violated: {0}")]
    OutOfRange(String),

    #[error("period must be at least 3, got {0}")]
    PeriodTooSmall(usize),

    #[error("the quadratic extension degenerates (a surd is rational or the surds are dependent); perturb the inputs")]
    DegenerateExtension,

    #[error("polynomial has the wrong degree: expected {expected}, got {got}")]
    WrongDegree { expected: usize, got: usize },
}
