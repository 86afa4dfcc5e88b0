use thiserror::Error;

/// Errors raised across the workbench.
///
/// Variants map one-to-one onto the failure modes of the individual
/// operations; the CLI turns them into exit codes via [`Error::kind`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // field and polynomial layer
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("value {0} is not representable in the field (denominator divisible by the characteristic)")]
    NotRepresentable(String),
    #[error("the zero form has no roots to count")]
    ZeroForm,
    #[error("characteristic {p} is too small for degree {degree}")]
    SmallCharacteristic { p: u64, degree: usize },
    #[error("both resultant arguments vanish identically")]
    BothZero,
    #[error("f(a) is not the square of the supplied branch value")]
    NotASquare,
    #[error("operation requires characteristic different from 2")]
    EvenCharacteristic,
    #[error("branch value is zero (a Weierstrass x-coordinate); the square root is not a power series there")]
    BranchZero,
    #[error("parse error: {0}")]
    Parse(String),

    // zero-dimensional schemes
    #[error("point does not lie on the named ruling")]
    PointNotOnLine,
    #[error("the cone vertex cannot support a scheme")]
    VertexSupport,
    #[error("tangent direction is zero")]
    ZeroTangent,
    #[error("point is not on the ambient surface")]
    PointNotOnSurface,
    #[error("scheme generators must have pairwise disjoint supports")]
    OverlappingSupport,
    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),
    #[error("degree must be non-negative (cone degree at least 1)")]
    DegreeNegative,

    // linear systems
    #[error("the linear system is empty (h0 = 0)")]
    EmptySystem,
    #[error("no member passed certification after {attempts} draws")]
    RetriesExhausted { attempts: usize },
    #[error("invalid construction input: {0}")]
    InvalidInput(String),

    // projections
    #[error("the projection center lies on the curve")]
    CenterOnCurve,
    #[error("the projection center is the cone vertex")]
    CenterIsVertex,
    #[error("the point does not lie on the curve")]
    PointNotOnCurve,
    #[error("the point is a singular point of the curve")]
    SingularPoint,
    #[error("bidegree (1,1) is excluded for inner projections")]
    DegenerateBidegree,
    #[error("the parametrization has a common factor")]
    NotCoprime,
    #[error("degenerate input: {0}")]
    Degenerate(String),

    // hyperelliptic curves
    #[error("invalid hyperelliptic model: {0}")]
    InvalidCurve(String),
    #[error("divisor has a negative multiplicity")]
    NonEffective,
    #[error("the Riemann-Roch space is zero")]
    ZeroSpace,
    #[error("h1(g p) does not vanish for this p")]
    SpecialP,
    #[error("u1(p) coincides with u2(o); choose another p")]
    CoincidentQ,
    #[error("o is not a Weierstrass point")]
    NotWeierstrass,
    #[error("p must not be a Weierstrass point")]
    WeierstrassP,
    #[error("pipeline check failed: {0}")]
    PipelineCheck(String),

    // formulas
    #[error("degree too small: {0}")]
    DTooSmall(i64),
}

/// Coarse error classes used for the CLI exit-code contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Construction,
    Geometry,
    Field,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            Parse(_) | NotPrime(_) | InvalidField(_) | NotRepresentable(_) => ErrorKind::Parse,
            RetriesExhausted { .. } | EmptySystem | InvalidInput(_) | PipelineCheck(_) => ErrorKind::Construction,
            SmallCharacteristic { .. } | EvenCharacteristic => ErrorKind::Field,
            _ => ErrorKind::Geometry,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
