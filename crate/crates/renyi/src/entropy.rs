//! Pointwise entropy functionals of a known probability vector.
//!
//! The one-parameter family H_q = ln(Σᵢ xᵢ^q)/(1−q) in natural-log units,
//! with dedicated formulas for the special orders: q=0 counts the support,
//! q=1 is the Shannon limit −Σ xᵢ ln xᵢ (with 0·ln 0 = 0), and q=∞ is
//! −ln max xᵢ. Alongside live the purity family (coincidence index,
//! participation ratio, linear entropy), the structural entropy H₁ − H₂, and
//! the non-extensive entropy (Σ xᵢ^q − 1)/(1−q).
//!
//! For q > 1 power sums are evaluated in the log domain (stabilized by the
//! largest component) so large orders like q = 50 stay usable; for q < 1 the
//! direct sum cannot under- or overflow.

use crate::error::{Error, Result};
use crate::prob::{ProbVec, RenyiOrder, Q_ONE_EPS};
use serde::Serialize;

/// An entropy value in nats together with the order it was computed at.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EntropyValue {
    /// The order q.
    pub order: RenyiOrder,
    /// The value in natural-log units; always in [0, ln N].
    pub nats: f64,
}

/// The three purity-derived statistics of a distribution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PurityStats {
    /// r = Σ xᵢ²: the probability that two independent draws coincide.
    /// Always in [1/N, 1]; equals exp(−H₂).
    pub coincidence_index: f64,
    /// R = 1/r: the effective number of distinct outcomes, in [1, N].
    pub participation_ratio: f64,
    /// L = 1 − r, in [0, 1 − 1/N]; the non-extensive entropy of order two.
    pub linear_entropy: f64,
}

/// Shannon entropy −Σ xᵢ ln xᵢ with the convention 0·ln 0 = 0.
pub fn shannon(p: &ProbVec) -> EntropyValue {
    EntropyValue {
        order: RenyiOrder::Shannon,
        nats: shannon_slice(p.values()),
    }
}

/// Entropy of the given order.
///
/// Dispatches on the order tag; `General` values within [`Q_ONE_EPS`] of one
/// are re-routed to the Shannon formula defensively even when the tag was
/// built by hand rather than through [`RenyiOrder::new`].
pub fn renyi(p: &ProbVec, q: RenyiOrder) -> EntropyValue {
    EntropyValue {
        order: q,
        nats: renyi_slice(p.values(), q),
    }
}

/// Order-zero entropy with an explicit support threshold: ln of the number
/// of components strictly greater than `support_eps`.
///
/// The default threshold used by [`renyi`] is exactly zero; a positive
/// threshold suppresses noise components in measured data.
pub fn hartley(p: &ProbVec, support_eps: f64) -> EntropyValue {
    let m = p.values().iter().filter(|&&x| x > support_eps).count();
    EntropyValue {
        order: RenyiOrder::Zero,
        // A validated vector has at least one positive component unless the
        // threshold swallowed everything; guard the log anyway.
        nats: if m == 0 { 0.0 } else { (m as f64).ln() },
    }
}

/// Coincidence index, participation ratio, and linear entropy.
pub fn purity_stats(p: &ProbVec) -> PurityStats {
    let r: f64 = p.values().iter().map(|&x| x * x).sum();
    PurityStats {
        coincidence_index: r,
        participation_ratio: 1.0 / r,
        linear_entropy: 1.0 - r,
    }
}

/// Structural entropy H₁ − H₂ (non-negative for every distribution).
pub fn structural_entropy(p: &ProbVec) -> f64 {
    shannon(p).nats - renyi(p, RenyiOrder::General(2.0)).nats
}

/// Non-extensive entropy (Σ xᵢ^q − 1)/(1−q) for q ≥ 0, q ≠ 1; q = 1
/// dispatches to the Shannon limit. Order two equals the linear entropy.
pub fn tsallis(p: &ProbVec, q: f64) -> Result<f64> {
    if q.is_nan() || q < 0.0 {
        return Err(Error::NegativeOrder { q });
    }
    if (q - 1.0).abs() <= Q_ONE_EPS {
        return Ok(shannon(p).nats);
    }
    Ok((power_sum_slice(p.values(), q) - 1.0) / (1.0 - q))
}

/// The power sum Σᵢ xᵢ^q = exp((1−q)·H_q), evaluated stably.
///
/// Exposed because its centered q-derivative at q = 1 is −H₁, which the
/// test suite checks as a finite-difference identity.
pub fn power_sum(p: &ProbVec, q: f64) -> Result<f64> {
    if q.is_nan() || q < 0.0 {
        return Err(Error::NegativeOrder { q });
    }
    Ok(power_sum_slice(p.values(), q))
}

/// Entropies over a strictly increasing grid of orders.
pub fn renyi_profile(p: &ProbVec, q_grid: &[RenyiOrder]) -> Result<Vec<EntropyValue>> {
    for pair in q_grid.windows(2) {
        if pair[0].value() >= pair[1].value() {
            return Err(Error::UnsortedGrid);
        }
    }
    Ok(q_grid.iter().map(|&q| renyi(p, q)).collect())
}

/// Shannon entropy of raw components (slice form shared with the
/// interpolating-family and figure modules, which evaluate on vectors they
/// construct themselves).
pub(crate) fn shannon_slice(xs: &[f64]) -> f64 {
    let h: f64 = -xs
        .iter()
        .filter(|&&x| x > 0.0)
        .map(|&x| x * x.ln())
        .sum::<f64>();
    // Rounding can leave a negative of a few ulps for near-certain events.
    h.max(0.0)
}

/// General-order entropy of raw components.
pub(crate) fn renyi_slice(xs: &[f64], q: RenyiOrder) -> f64 {
    match q {
        RenyiOrder::Zero => {
            let m = xs.iter().filter(|&&x| x > 0.0).count();
            if m == 0 {
                0.0
            } else {
                (m as f64).ln()
            }
        }
        RenyiOrder::Shannon => shannon_slice(xs),
        RenyiOrder::Infinity => {
            let max = xs.iter().cloned().fold(0.0_f64, f64::max);
            (-max.ln()).max(0.0)
        }
        RenyiOrder::General(q) if (q - 1.0).abs() <= Q_ONE_EPS => shannon_slice(xs),
        RenyiOrder::General(q) => {
            let h = log_power_sum_slice(xs, q) / (1.0 - q);
            h.max(0.0)
        }
    }
}

/// ln Σᵢ xᵢ^q for finite q ≥ 0, q ≠ 1, stabilized for q > 1 by factoring
/// out the largest component so no term can underflow.
fn log_power_sum_slice(xs: &[f64], q: f64) -> f64 {
    if q > 1.0 {
        let max = xs.iter().cloned().fold(0.0_f64, f64::max);
        let scaled: f64 = xs
            .iter()
            .filter(|&&x| x > 0.0)
            .map(|&x| (q * (x / max).ln()).exp())
            .sum();
        q * max.ln() + scaled.ln()
    } else {
        let sum: f64 = xs
            .iter()
            .filter(|&&x| x > 0.0)
            .map(|&x| x.powf(q))
            .sum();
        sum.ln()
    }
}

/// Σᵢ xᵢ^q for finite q ≥ 0.
fn power_sum_slice(xs: &[f64], q: f64) -> f64 {
    if q == 0.0 {
        return xs.iter().filter(|&&x| x > 0.0).count() as f64;
    }
    log_power_sum_slice(xs, q).exp()
}
