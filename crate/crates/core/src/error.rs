use thiserror::Error;

/// Errors raised by domain checks across the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("root of unity order must be at least 1")]
    ZeroOrder,
    #[error("not a unit imaginary: {0}")]
    NotUnitImaginary(String),
    #[error("quadrature underresolved: {nodes} nodes, need at least {required}")]
    QuadratureUnderresolved { nodes: usize, required: usize },
    #[error("reciprocal undefined at center")]
    ReciprocalUndefined,
    #[error("twist undefined (zero of f^c)")]
    TwistUndefined,
    #[error("near zero set of symmetrization")]
    NearZeroSet,
    #[error("imaginary units are not orthogonal (inner product {0:e})")]
    NotOrthogonal(f64),
    #[error("split pairs live on different slices")]
    SliceMismatch,
    #[error("pole: |qa+b| = {0:e}")]
    Pole(f64),
    #[error("singular fractional linear transformation (Dieudonne determinant {0:e})")]
    Singular(f64),
    #[error("degenerate Cayley center: Re(w0) = 0")]
    DegenerateCayley,
    #[error("disk map parameter {0} outside [0, 1)")]
    DiskParameter(f64),
    #[error("center must be real, got imaginary part of modulus {0:e}")]
    NonRealCenter(f64),
    #[error("no witness exists / out of domain: |q0| = {0}")]
    NoWitness(f64),
    #[error("invalid series: {0}")]
    InvalidSeries(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroInverse => "zero_inverse",
            Error::ZeroOrder => "zero_order",
            Error::NotUnitImaginary(_) => "not_unit_imaginary",
            Error::QuadratureUnderresolved { .. } => "quadrature_underresolved",
            Error::ReciprocalUndefined => "reciprocal_undefined",
            Error::TwistUndefined => "twist_undefined",
            Error::NearZeroSet => "near_zero_set",
            Error::NotOrthogonal(_) => "not_orthogonal",
            Error::SliceMismatch => "slice_mismatch",
            Error::Pole(_) => "pole",
            Error::Singular(_) => "singular",
            Error::DegenerateCayley => "degenerate_cayley",
            Error::DiskParameter(_) => "disk_parameter",
            Error::NonRealCenter(_) => "non_real_center",
            Error::NoWitness(_) => "no_witness",
            Error::InvalidSeries(_) => "invalid_series",
            Error::InvalidArgument(_) => "invalid_argument",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
