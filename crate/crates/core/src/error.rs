use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("lattice is not saturated in its ambient integer lattice")]
    NotSaturated,
    #[error("subtori are not complementary")]
    NotComplementary,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("polyhedron is unbounded")]
    Unbounded,
    #[error("polytope is not full-dimensional")]
    NotFullDimensional,
    #[error("sigma_t is not antisymmetric; its kernel is undefined")]
    IrrationalKernel,
    #[error("schema error: {0}")]
    Schema(String),
    #[error("curvature value c({i},{j}) is not integral")]
    Condition5aViolated { i: usize, j: usize },
    #[error("operands belong to different frames")]
    FrameMismatch,
    #[error("form oracle has no value for {0}")]
    OracleMissing(String),
    #[error("stabilizer basis is not a basis of a saturated sublattice")]
    SingularChart,
    #[error("complement does not split the curvature (c_h is nonzero)")]
    SplittingAbsent,
    #[error("period vectors do not lie in the lineality space")]
    PeriodsNotInLineality,
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
