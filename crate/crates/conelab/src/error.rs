use thiserror::Error;

/// Errors shared by every engine in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("radicand {0} is not a squarefree integer >= 2")]
    BadRadicand(u64),

    #[error("mixed quadratic radicands: {0} vs {1}")]
    MixedRadicand(u64, u64),

    #[error("irrational entry where rational data is required")]
    IrrationalInput,

    #[error("operation requires a rational cone")]
    QuadraticUnsupported,

    #[error("quadratic cones are supported in rank <= 2 only (rank {0})")]
    QuadraticRankUnsupported(usize),

    #[error("matrix is not a basis of a saturated sublattice (quotient has torsion)")]
    NotSaturated,

    #[error("vector is not in the cone generated by the given set")]
    NotInCone,

    #[error("cone has nonzero lineality; quotient it out first")]
    LinealityNonzero,

    #[error("cone is not full-dimensional")]
    NotFullDimensional,

    #[error("point is not in the cone's lattice monoid")]
    AlphaOutsideCone,

    #[error("point is not in the relative interior of the cone")]
    AlphaNotInterior,

    #[error("functional is not in the dual cone")]
    NotInDualCone,

    #[error("functional is not in the relative interior of the dual cone")]
    NuNotInRelint,

    #[error("zero normal vector")]
    ZeroNormal,

    #[error("valuation weight must be positive; got a non-positive entry")]
    NonPositiveWeight,

    #[error("order weight entries are linearly dependent over the rationals")]
    DependentWeights,

    #[error("value map kills a nonzero exponent of the monoid's group")]
    NonInjective,

    #[error("zero algebra element")]
    ZeroElement,

    #[error("element has an exponent outside the cone monoid")]
    SupportOutsideCone,

    #[error("direction has rational slope; the translate set is not dense")]
    RationalDirection,

    #[error("search exhausted (bound {0}) without a hit; inconclusive")]
    NotFound(u64),

    #[error("membership is undecidable with the available functional")]
    Undecided,

    #[error("invalid lattice section: {0}")]
    InvalidSection(String),

    #[error("cone has no representation")]
    EmptyRepresentation,

    #[error("representations disagree: {0}")]
    RepresentationMismatch(String),

    #[error("invalid input: {0}")]
    Parse(String),

    #[error("{0} is not prime")]
    NotPrime(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
