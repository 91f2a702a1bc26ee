//! Validated probability vectors and the distinguished flat distributions.
//!
//! A [`ProbVec`] is an immutable N-point discrete distribution: every
//! component non-negative, components summing to one within [`NORM_TOL`].
//! Components stay in user order; nothing here sorts (operations that need a
//! maximum, like the infinite-order entropy, scan locally).

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Width of the strict normalization window: |sum − 1| must not exceed this.
///
/// Double-precision summation of up to a million well-scaled terms stays
/// comfortably inside it.
pub const NORM_TOL: f64 = 1e-12;

/// Components above `-NEG_TOL` but below zero are treated as sign noise and
/// clamped to zero when renormalizing; anything more negative is rejected.
pub const NEG_TOL: f64 = 1e-14;

/// Orders within this distance of one evaluate with the Shannon formula;
/// the 1/(1−q) prefactor has no precision left there.
pub const Q_ONE_EPS: f64 = 1e-9;

/// How to treat the input sum when constructing a [`ProbVec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalizeMode {
    /// Require the input to already sum to one within [`NORM_TOL`].
    Strict,
    /// Clamp sign noise to zero and divide by the sum.
    Renormalize,
}

/// A validated discrete probability distribution.
///
/// Construction goes through [`make_prob_vec`], [`flat_k`], or the parsers;
/// after that the value is immutable and freely shareable across threads.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ProbVec {
    components: Vec<f64>,
}

impl ProbVec {
    /// The components in their original order.
    pub fn values(&self) -> &[f64] {
        &self.components
    }

    /// Number of components N.
    pub fn len(&self) -> usize {
        self.components.len()
    }

    /// True only for the (impossible after validation) empty vector; kept so
    /// clippy-style callers can pair it with `len`.
    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Internal constructor for components already known to satisfy the
    /// invariants exactly (used by the interpolating-family builder and the
    /// sampler, both of which normalize by construction).
    pub(crate) fn from_normalized(components: Vec<f64>) -> Self {
        debug_assert!(!components.is_empty());
        debug_assert!(components.iter().all(|&x| x >= 0.0));
        debug_assert!((components.iter().sum::<f64>() - 1.0).abs() <= NORM_TOL);
        ProbVec { components }
    }

    /// Lossless JSON serialization: a plain array of numbers, printed with
    /// shortest round-trip formatting (never fewer digits than needed to
    /// reconstruct the exact double, at most 17 significant digits).
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.components).expect("serializing a float vector cannot fail")
    }

    /// Parse a JSON array of numbers, validating in the given mode.
    pub fn from_json_str(text: &str, mode: NormalizeMode) -> Result<Self> {
        let values: Vec<f64> =
            serde_json::from_str(text).map_err(|e| Error::ParseInput(e.to_string()))?;
        make_prob_vec(&values, mode)
    }

    /// Parse whitespace- and/or comma-separated numeric tokens.
    pub fn from_text_tokens(text: &str, mode: NormalizeMode) -> Result<Self> {
        let mut values = Vec::new();
        for token in text.split(|c: char| c.is_whitespace() || c == ',') {
            if token.is_empty() {
                continue;
            }
            let x: f64 = token
                .parse()
                .map_err(|_| Error::ParseInput(format!("bad number {token:?}")))?;
            values.push(x);
        }
        make_prob_vec(&values, mode)
    }
}

/// Build a validated probability vector from raw values.
///
/// `Strict` mode demands the values already sum to one within [`NORM_TOL`].
/// `Renormalize` clamps components in `(-NEG_TOL, 0)` to zero and divides by
/// the sum. Components at or below `-NEG_TOL` are rejected in both modes.
pub fn make_prob_vec(values: &[f64], mode: NormalizeMode) -> Result<ProbVec> {
    if values.is_empty() {
        return Err(Error::ParseInput("empty vector".into()));
    }
    for (index, &value) in values.iter().enumerate() {
        if value.is_nan() || value < -NEG_TOL {
            return Err(Error::NegativeComponent { index, value });
        }
    }
    // Sign noise inside the tolerance is clamped before the sum check so the
    // stored components satisfy non-negativity exactly.
    let clamped: Vec<f64> = values.iter().map(|&x| x.max(0.0)).collect();
    match mode {
        NormalizeMode::Strict => {
            let sum: f64 = clamped.iter().sum();
            if (sum - 1.0).abs() > NORM_TOL {
                return Err(Error::NotNormalized { sum });
            }
            Ok(ProbVec { components: clamped })
        }
        NormalizeMode::Renormalize => {
            let sum: f64 = clamped.iter().sum();
            if sum <= 0.0 {
                return Err(Error::ZeroSum { sum });
            }
            let components = clamped.into_iter().map(|x| x / sum).collect();
            Ok(ProbVec { components })
        }
    }
}

/// The flat distribution with `k` equal positive components out of `n`:
/// the first `k` components are 1/k, the remaining `n − k` are zero.
pub fn flat_k(k: usize, n: usize) -> Result<ProbVec> {
    if k < 1 || k > n {
        return Err(Error::BadK { k, n });
    }
    let mut components = vec![0.0; n];
    let level = 1.0 / k as f64;
    components[..k].fill(level);
    Ok(ProbVec::from_normalized(components))
}

/// Entropy order q ∈ [0, ∞], with exact tags for the three special cases
/// that have their own formulas.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RenyiOrder {
    /// q = 0: logarithm of the support size.
    Zero,
    /// q = 1 (within [`Q_ONE_EPS`]): the Shannon limit.
    Shannon,
    /// q = ∞: negative log of the largest component.
    Infinity,
    /// Any other non-negative finite order.
    General(f64),
}

impl RenyiOrder {
    /// Classify a floating-point order, rejecting negatives and NaN.
    pub fn new(q: f64) -> Result<Self> {
        if q.is_nan() || q < 0.0 {
            return Err(Error::NegativeOrder { q });
        }
        Ok(if q == 0.0 {
            RenyiOrder::Zero
        } else if q.is_infinite() {
            RenyiOrder::Infinity
        } else if (q - 1.0).abs() <= Q_ONE_EPS {
            RenyiOrder::Shannon
        } else {
            RenyiOrder::General(q)
        })
    }

    /// The numeric order (infinity for the tag).
    pub fn value(self) -> f64 {
        match self {
            RenyiOrder::Zero => 0.0,
            RenyiOrder::Shannon => 1.0,
            RenyiOrder::Infinity => f64::INFINITY,
            RenyiOrder::General(q) => q,
        }
    }
}

impl std::fmt::Display for RenyiOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RenyiOrder::Zero => write!(f, "0"),
            RenyiOrder::Shannon => write!(f, "1"),
            RenyiOrder::Infinity => write!(f, "inf"),
            RenyiOrder::General(q) => write!(f, "{q}"),
        }
    }
}

impl std::str::FromStr for RenyiOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "Inf" | "∞" => Ok(RenyiOrder::Infinity),
            other => {
                let q: f64 = other
                    .parse()
                    .map_err(|_| Error::ParseInput(format!("bad order {other:?}")))?;
                RenyiOrder::new(q)
            }
        }
    }
}

impl Serialize for RenyiOrder {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            RenyiOrder::Infinity => serializer.serialize_str("inf"),
            other => serializer.serialize_f64(other.value()),
        }
    }
}
