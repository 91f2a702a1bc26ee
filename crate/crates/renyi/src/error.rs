//! Error type shared by every module of the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when validating inputs or inverting
/// entropy relations.
///
/// Variants are grouped by the operation family that raises them; all carry
/// enough context to print an actionable one-line diagnostic.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A probability component is more negative than the clamping tolerance.
    #[error("component {index} is {value:e}, below the negative tolerance")]
    NegativeComponent { index: usize, value: f64 },

    /// Strict construction saw a sum too far from one.
    #[error("components sum to {sum:.17}, outside the strict normalization window")]
    NotNormalized { sum: f64 },

    /// Renormalizing construction saw a non-positive total.
    #[error("components sum to {sum:e}; cannot renormalize a non-positive total")]
    ZeroSum { sum: f64 },

    /// Flat-distribution index out of range.
    #[error("flat distribution index k={k} must satisfy 1 <= k <= N={n}")]
    BadK { k: usize, n: usize },

    /// Entropy order must be a non-negative real (or the infinity tag).
    #[error("entropy order q={q} must be a non-negative number")]
    NegativeOrder { q: f64 },

    /// Order grids must be strictly increasing.
    #[error("order grid must be strictly increasing")]
    UnsortedGrid,

    /// Invalid two-level interpolating distribution parameters.
    #[error("interpolating distribution requires 1 <= k < l and a in [0,1]; got k={k}, l={l}, a={a}")]
    BadInterp { k: usize, l: usize, a: f64 },

    /// A scalar input lies outside its admissible interval by more than the
    /// noise window.
    #[error("{what}={value} lies outside [{min}, {max}] beyond tolerance")]
    OutOfRange {
        what: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    /// The inversion cubic has no root in the unit interval: the supplied
    /// entropy/length combination is inconsistent.
    #[error("no root of the cubic lies in [0,1]; inputs are inconsistent")]
    NoRootInUnitInterval,

    /// A unique root was required but the scan found several.
    #[error("cubic has multiple roots in [0,1] where a unique root was required")]
    MultipleRoots,

    /// Bounds relating H_q to H_s need q != s.
    #[error("orders q and s must differ")]
    EqualOrders,

    /// The requested order is outside the range where the bound is valid.
    #[error("order q={q} is outside the validity range of this bound")]
    OrderOutsideValidity { q: f64 },

    /// Entropy inputs violate the ordering the operation assumes
    /// (entropies are non-increasing in the order).
    #[error("entropy inputs must be ordered: {what}")]
    Disordered { what: &'static str },

    /// Histograms need at least two bins.
    #[error("histogram needs at least 2 bins; got {bins}")]
    BadBins { bins: usize },

    /// Deviation studies need at least one sample.
    #[error("deviation study needs at least one sample")]
    EmptySample,

    /// Contour levels must lie strictly inside the attainable range.
    #[error("contour level {level} must lie strictly inside (0, {max})")]
    LevelOutOfRange { level: f64, max: f64 },

    /// Plane-boundary datasets need two distinct finite orders.
    #[error("plane boundary requires distinct finite orders q and s")]
    DegenerateOrders,

    /// A figure or profile grid is unusable for the stated reason.
    #[error("{0}")]
    BadGrid(&'static str),

    /// Input text could not be parsed as a probability vector.
    #[error("could not parse input vector: {0}")]
    ParseInput(String),
}
