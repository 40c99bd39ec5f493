use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("cannot parse rational number from {0:?}")]
    Rational(String),
    #[error("cannot parse surd from {0:?} (expected \"q\" or \"q*sqrt(r)\")")]
    Surd(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("the normal vector is zero")]
    ZeroNormal,
    #[error("dimension {0} is too small (need at least 2)")]
    DimensionTooSmall(usize),
    #[error("dimension {found} exceeds the exact-pipeline limit of {max}")]
    DimensionTooLarge { found: usize, max: usize },
    #[error("expected dimension {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("axis {axis} is out of range for dimension {dimension}")]
    AxisOutOfRange { axis: usize, dimension: usize },
    #[error("body has affine dimension {0}, expected 3")]
    NotThreeDimensional(usize),
    #[error("exact volume is not available for bodies of affine dimension {0}")]
    VolumeDimensionUnsupported(usize),
    #[error("zonotope recognition is not supported in affine dimension {0}")]
    DimensionUnsupported(usize),
    #[error("points do not span a plane (affine dimension {0})")]
    NotPlanar(usize),
    #[error("vertex list is not a convex cyclic traversal")]
    NotConvexCycle,
    #[error("polygon is not centrally symmetric")]
    NotCentrallySymmetric,
    #[error("generator {0} is the zero vector")]
    ZeroGenerator(usize),
    #[error("at least one generator is required")]
    NoGenerators,
    #[error("generators must all be {expected}-dimensional")]
    MixedDimensions { expected: usize },
    #[error("projection direction is the zero vector")]
    ZeroDirection,
    #[error("the plane misses the body or touches it in fewer than 3 points")]
    EmptyOrLowerDimensional,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalyticError {
    #[error("power p = {0} is outside the supported range 2..=64")]
    InvalidPower(u32),
    #[error("tolerance {0:e} is below the supported floor of 1e-12 or not positive")]
    ToleranceTooSmall(f64),
    #[error("tolerance {requested:e} not reached: best error bound {achieved:e} after {panels} panels")]
    ToleranceUnreachable {
        requested: f64,
        achieved: f64,
        panels: usize,
    },
    #[error("every entry of the normal vector is zero")]
    AllZeroNormal,
    #[error("the normal vector needs at least 2 entries")]
    DimensionTooSmall,
    #[error("normal entries are too large for the frequency expansion")]
    NormalTooLarge,
}
