//! Two-level interpolating distributions and the entropy inversions on them.
//!
//! The boundary of the achievable entropy region is swept by mixtures of two
//! flat distributions, `a·Q_k + (1−a)·Q_l` with `k < l`: `k` components at
//! level `a/k + (1−a)/l` and `l − k` components at `(1−a)/l`. Two families
//! matter downstream: the long chord `(1, N)` (upper boundary) and the
//! adjacent cascade arcs `(k−1, k)` (lower boundary). This module provides
//! the closed-form entropies of such distributions, the arc selector, and
//! the four inversions that recover the mixing weight `a` from a known
//! order-2 or order-3 entropy: two closed forms and two monic cubics that
//! are strictly monotone on the unit interval. A general cubic solver with
//! sign-change bracketing is also exposed for callers whose cubics carry no
//! monotonicity guarantee.
//!
//! Endpoint conditioning: at the top of each family (a → 0) the entropy is
//! stationary in `a`, so recovering `a` there divides by a vanishing
//! derivative. Inputs within [`SNAP_EPS`] of an endpoint entropy snap to the
//! exact endpoint weight; inputs beyond the admissible interval by at most
//! [`RANGE_SLACK`] are treated as measurement noise and clamped; anything
//! further out is an error.

use crate::error::{Error, Result};
use crate::prob::{ProbVec, RenyiOrder, Q_ONE_EPS};

/// Boundary ties in arc selection within this tolerance resolve to the
/// smaller arc index; both adjacent arcs give identical bounds at the tie.
pub const ARC_TIE_TOL: f64 = 1e-12;

/// Inputs within this distance of a family's endpoint entropy snap to the
/// exact endpoint weight (0 or 1).
pub const SNAP_EPS: f64 = 1e-12;

/// Inputs (and computed weights) may overshoot their admissible interval by
/// at most this much before being rejected instead of clamped.
pub const RANGE_SLACK: f64 = 1e-9;

/// Residual target for the cubic root refinement.
pub const CUBIC_RESIDUAL_TOL: f64 = 1e-13;

/// Bracket-width target for the cubic root refinement.
pub const CUBIC_WIDTH_TOL: f64 = 1e-14;

/// A two-level interpolating distribution `a·Q_k + (1−a)·Q_l`, living on
/// `l` components (the implied vector length is `l`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterpDist {
    k: usize,
    l: usize,
    a: f64,
}

impl InterpDist {
    /// Validate `1 ≤ k < l` and `a ∈ [0, 1]` (overshoot up to 1e−12 is
    /// clamped; more is an error).
    pub fn new(k: usize, l: usize, a: f64) -> Result<Self> {
        if k < 1 || k >= l || !(-1e-12..=1.0 + 1e-12).contains(&a) {
            return Err(Error::BadInterp { k, l, a });
        }
        Ok(InterpDist {
            k,
            l,
            a: a.clamp(0.0, 1.0),
        })
    }

    /// Index of the flat distribution mixed with weight `a`.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Index of the flat distribution mixed with weight `1 − a`; also the
    /// number of components.
    pub fn l(&self) -> usize {
        self.l
    }

    /// The mixing weight.
    pub fn a(&self) -> f64 {
        self.a
    }

    /// The two component levels: `k` components at the first value,
    /// `l − k` at the second.
    pub fn levels(&self) -> (f64, f64) {
        let lo = (1.0 - self.a) / self.l as f64;
        let hi = self.a / self.k as f64 + lo;
        (hi, lo)
    }
}

/// Materialize the distribution as a validated probability vector.
pub fn interp_vector(d: InterpDist) -> ProbVec {
    let (hi, lo) = d.levels();
    let mut components = vec![lo; d.l];
    components[..d.k].fill(hi);
    // The construction sums to one up to a couple of ulps; renormalizing by
    // the actual sum keeps strict validation exact without changing any
    // component by more than one ulp.
    let sum: f64 = components.iter().sum();
    if sum != 1.0 {
        for x in &mut components {
            *x /= sum;
        }
    }
    ProbVec::from_normalized(components)
}

/// Entropy of the two-level distribution, computed from the levels without
/// materializing the vector. Agrees with the entropy module applied to
/// [`interp_vector`] to within a few ulps.
pub fn interp_renyi(d: InterpDist, q: RenyiOrder) -> f64 {
    let (hi, lo) = d.levels();
    let k = d.k as f64;
    let rest = (d.l - d.k) as f64;
    match q {
        RenyiOrder::Zero => {
            if lo > 0.0 {
                (d.l as f64).ln()
            } else {
                k.ln()
            }
        }
        RenyiOrder::Shannon => two_level_shannon(hi, k, lo, rest),
        RenyiOrder::Infinity => (-hi.ln()).max(0.0),
        RenyiOrder::General(qv) if (qv - 1.0).abs() <= Q_ONE_EPS => {
            two_level_shannon(hi, k, lo, rest)
        }
        RenyiOrder::General(qv) => {
            let log_sum = if qv > 1.0 && lo > 0.0 {
                // Factor out the high level so the low-level term cannot
                // underflow at large orders.
                qv * hi.ln() + (k + rest * (qv * (lo / hi).ln()).exp()).ln()
            } else {
                let low_term = if lo > 0.0 { rest * lo.powf(qv) } else { 0.0 };
                (k * hi.powf(qv) + low_term).ln()
            };
            (log_sum / (1.0 - qv)).max(0.0)
        }
    }
}

fn two_level_shannon(hi: f64, k: f64, lo: f64, rest: f64) -> f64 {
    let mut h = -k * hi * hi.ln();
    if lo > 0.0 {
        h -= rest * lo * lo.ln();
    }
    h.max(0.0)
}

/// The cascade arc index for a known entropy value: the smallest `k ≥ 2`
/// with `H_s ≤ ln k` (ties within [`ARC_TIE_TOL`] keep the smaller arc).
///
/// The returned index satisfies `ln(k−1) ≤ H_s ≤ ln k` and `k ≤ N`.
pub fn select_arc(h_s: f64, n: usize) -> Result<usize> {
    let h = clamp_entropy(h_s, (n as f64).ln(), "H_s")?;
    if n < 2 {
        // A one-component space has no arcs; callers special-case it.
        return Err(Error::BadK { k: 2, n });
    }
    let mut k = (h.exp().floor() as usize).max(2);
    while k < n && h > (k as f64).ln() + ARC_TIE_TOL {
        k += 1;
    }
    Ok(k)
}

/// Recover `a` for the `(1, N)` family from an order-2 entropy:
/// `a = sqrt((N·e^{−H₂} − 1)/(N − 1))`.
pub fn invert_a_from_h2_top(h2: f64, n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::BadK { k: 1, n });
    }
    let top = (n as f64).ln();
    let h = clamp_entropy(h2, top, "H2")?;
    if h >= top - SNAP_EPS {
        return Ok(0.0);
    }
    if h <= SNAP_EPS {
        return Ok(1.0);
    }
    let radicand = (n as f64 * (-h).exp() - 1.0) / (n as f64 - 1.0);
    finish_sqrt_inversion(radicand)
}

/// Recover `a` for the cascade arc `(k−1, k)` from an order-2 entropy:
/// `a = sqrt(k(k−1)·e^{−H₂} + 1 − k)`, valid for `ln(k−1) ≤ H₂ ≤ ln k`.
pub fn invert_a_from_h2_bottom(h2: f64, k: usize) -> Result<f64> {
    if k < 2 {
        return Err(Error::BadK { k, n: k });
    }
    let kf = k as f64;
    let (lo_end, hi_end) = ((kf - 1.0).ln(), kf.ln());
    let h = clamp_entropy_interval(h2, lo_end, hi_end, "H2")?;
    if h >= hi_end - SNAP_EPS {
        return Ok(0.0);
    }
    if h <= lo_end + SNAP_EPS {
        return Ok(1.0);
    }
    let radicand = kf * (kf - 1.0) * (-h).exp() + 1.0 - kf;
    finish_sqrt_inversion(radicand)
}

/// Recover `a` for the `(1, N)` family from an order-3 entropy.
///
/// For `N ≥ 3` this is the largest unit-interval root of the monic cubic
/// `a³ + 3a²/(N−2) − (N²e^{−2H₃} − 1)/((N−1)(N−2))`. For `N = 2` the family
/// is a two-point distribution and the closed form
/// `a = sqrt((4e^{−2H₃} − 1)/3)` applies instead (the cubic's coefficients
/// divide by `N − 2`).
pub fn invert_a_from_h3_top(h3: f64, n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::BadK { k: 1, n });
    }
    let top = (n as f64).ln();
    let h = clamp_entropy(h3, top, "H3")?;
    if h >= top - SNAP_EPS {
        return Ok(0.0);
    }
    if h <= SNAP_EPS {
        return Ok(1.0);
    }
    if n == 2 {
        return two_point_a_from_h3(h);
    }
    let nf = n as f64;
    let c2 = 3.0 / (nf - 2.0);
    let c0 = -(nf * nf * (-2.0 * h).exp() - 1.0) / ((nf - 1.0) * (nf - 2.0));
    Ok(solve_monotone_unit_cubic(c2, c0))
}

/// Recover `a` for the cascade arc `(k−1, k)` from an order-3 entropy,
/// valid for `ln(k−1) ≤ H₃ ≤ ln k`.
///
/// `k = 2` has the closed form `a = sqrt((4e^{−2H₃} − 1)/3)`; larger arcs
/// take the unique unit-interval root of
/// `a³ + 3a²(k−1)/(2−k) + ((k−1)²/(2−k))·(1 − k²e^{−2H₃})`.
pub fn invert_a_from_h3_bottom(h3: f64, k: usize) -> Result<f64> {
    if k < 2 {
        return Err(Error::BadK { k, n: k });
    }
    let kf = k as f64;
    let (lo_end, hi_end) = ((kf - 1.0).ln(), kf.ln());
    let h = clamp_entropy_interval(h3, lo_end, hi_end, "H3")?;
    if h >= hi_end - SNAP_EPS {
        return Ok(0.0);
    }
    if h <= lo_end + SNAP_EPS {
        return Ok(1.0);
    }
    if k == 2 {
        return two_point_a_from_h3(h);
    }
    let c2 = 3.0 * (kf - 1.0) / (2.0 - kf);
    let c0 = (kf - 1.0) * (kf - 1.0) / (2.0 - kf) * (1.0 - kf * kf * (-2.0 * h).exp());
    Ok(solve_monotone_unit_cubic(c2, c0))
}

/// Bisection for the inversion cubics `a³ + c₂a² + c₀`, whose derivative
/// `a(3a + 2c₂)` has its interior critical point outside (0, 1) for every
/// admissible coefficient here, making the cubic strictly monotone on the
/// unit interval with exactly one root after the endpoint snaps.
fn solve_monotone_unit_cubic(c2: f64, c0: f64) -> f64 {
    let w = |a: f64| ((a + c2) * a) * a + c0;
    let increasing = w(1.0) >= w(0.0);
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    for _ in 0..100 {
        if hi - lo <= CUBIC_WIDTH_TOL {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if (w(mid) > 0.0) == increasing {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Shared closed form for two-point distributions (the `(1,2)` chord): the
/// third-power sum is `(1 + 3a²)/4`, so `a = sqrt((4e^{−2H₃} − 1)/3)`.
fn two_point_a_from_h3(h3: f64) -> Result<f64> {
    finish_sqrt_inversion((4.0 * (-2.0 * h3).exp() - 1.0) / 3.0)
}

/// Which root of the cubic the caller wants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootSelect {
    /// The largest root in [0, 1] (the geometry guarantees it is the one on
    /// the family).
    Largest,
    /// The root must be unique in [0, 1]; finding several is an error.
    Unique,
}

/// Root of the monic cubic `a³ + c₂a² + c₁a + c₀` in the unit interval.
///
/// A 10⁻³ scan brackets every sign change (and catches exact zeros at scan
/// points, which is how double roots at the ends appear); each bracket is
/// refined by bisection with Newton acceleration until the bracket is
/// narrower than [`CUBIC_WIDTH_TOL`] and the residual below
/// [`CUBIC_RESIDUAL_TOL`]. No bracket means the inputs were inconsistent.
pub fn solve_cubic_in_unit_interval(
    c2: f64,
    c1: f64,
    c0: f64,
    select: RootSelect,
) -> Result<f64> {
    let w = |a: f64| ((a + c2) * a + c1) * a + c0;
    let dw = |a: f64| (3.0 * a + 2.0 * c2) * a + c1;

    const STEPS: usize = 1000;
    let mut brackets: Vec<(f64, f64)> = Vec::new();
    let mut prev_a = 0.0;
    let mut prev_w = w(0.0);
    if prev_w == 0.0 {
        brackets.push((0.0, 0.0));
    }
    for i in 1..=STEPS {
        let a = i as f64 / STEPS as f64;
        let wa = w(a);
        if wa == 0.0 {
            brackets.push((a, a));
        } else if prev_w != 0.0 && (prev_w < 0.0) != (wa < 0.0) {
            brackets.push((prev_a, a));
        }
        prev_a = a;
        prev_w = wa;
    }

    if brackets.is_empty() {
        return Err(Error::NoRootInUnitInterval);
    }
    if select == RootSelect::Unique && brackets.len() > 1 {
        return Err(Error::MultipleRoots);
    }
    let (mut lo, mut hi) = *brackets.last().unwrap();
    if lo == hi {
        return Ok(lo);
    }

    let mut w_lo = w(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= CUBIC_WIDTH_TOL && w(mid).abs() <= CUBIC_RESIDUAL_TOL {
            break;
        }
        let w_mid = w(mid);
        if w_mid == 0.0 {
            return Ok(mid);
        }
        // Try a Newton step from the midpoint; fall back to plain bisection
        // whenever it would leave the bracket.
        let d = dw(mid);
        let newton = mid - w_mid / d;
        let candidate = if d != 0.0 && newton > lo && newton < hi {
            newton
        } else {
            mid
        };
        let w_cand = w(candidate);
        if w_cand == 0.0 {
            return Ok(candidate);
        }
        if (w_lo < 0.0) != (w_cand < 0.0) {
            hi = candidate;
        } else {
            lo = candidate;
            w_lo = w_cand;
        }
    }
    Ok((0.5 * (lo + hi)).clamp(0.0, 1.0))
}

/// Square root with the noise windows applied: radicands in [−1e−12, 0)
/// clamp to zero, weights in (1, 1 + RANGE_SLACK] clamp to one, anything
/// further out signals inconsistent inputs.
fn finish_sqrt_inversion(radicand: f64) -> Result<f64> {
    if radicand < -1e-12 {
        return Err(Error::OutOfRange {
            what: "a^2",
            value: radicand,
            min: 0.0,
            max: 1.0,
        });
    }
    let a = radicand.max(0.0).sqrt();
    if a > 1.0 + RANGE_SLACK {
        return Err(Error::OutOfRange {
            what: "a",
            value: a,
            min: 0.0,
            max: 1.0,
        });
    }
    Ok(a.min(1.0))
}

/// Clamp an entropy to [0, max], tolerating [`RANGE_SLACK`] of noise on
/// both sides.
pub(crate) fn clamp_entropy(h: f64, max: f64, what: &'static str) -> Result<f64> {
    clamp_entropy_interval(h, 0.0, max, what)
}

pub(crate) fn clamp_entropy_interval(
    h: f64,
    min: f64,
    max: f64,
    what: &'static str,
) -> Result<f64> {
    if h.is_nan() || h < min - RANGE_SLACK || h > max + RANGE_SLACK {
        return Err(Error::OutOfRange {
            what,
            value: h,
            min,
            max,
        });
    }
    Ok(h.clamp(min, max))
}

/// Convenience used by the bounds and figure modules: entropy of a family
/// member without the validation overhead of [`InterpDist::new`].
pub(crate) fn family_entropy(k: usize, l: usize, a: f64, q: RenyiOrder) -> f64 {
    interp_renyi(InterpDist { k, l, a }, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entropy::renyi;
    use crate::prob::flat_k;

    const LN2: f64 = std::f64::consts::LN_2;
    const H2_WORKED: f64 = 0.9808292530117262; // ln(8/3)
    const H3_WORKED: f64 = 0.9281489951828131; // 0.5 ln(32/5)

    #[test]
    fn interp_vector_examples() {
        let v = interp_vector(InterpDist::new(1, 3, 0.25).unwrap());
        for (got, want) in v.values().iter().zip([0.5, 0.25, 0.25]) {
            assert!((got - want).abs() < 1e-15);
        }
        let v = interp_vector(InterpDist::new(2, 3, 0.5).unwrap());
        for (got, want) in v.values().iter().zip([5.0 / 12.0, 5.0 / 12.0, 1.0 / 6.0]) {
            assert!((got - want).abs() < 1e-15);
        }
    }

    #[test]
    fn interp_endpoints_are_the_flat_distributions() {
        let d0 = interp_vector(InterpDist::new(2, 5, 0.0).unwrap());
        assert_eq!(d0.values(), flat_k(5, 5).unwrap().values());
        let d1 = interp_vector(InterpDist::new(2, 5, 1.0).unwrap());
        assert_eq!(d1.values(), flat_k(2, 5).unwrap().values());
    }

    #[test]
    fn interp_rejects_bad_parameters() {
        assert!(matches!(
            InterpDist::new(3, 3, 0.5),
            Err(Error::BadInterp { .. })
        ));
        assert!(matches!(
            InterpDist::new(0, 3, 0.5),
            Err(Error::BadInterp { .. })
        ));
        assert!(matches!(
            InterpDist::new(1, 3, 1.5),
            Err(Error::BadInterp { .. })
        ));
        // Overshoot within the clamp window is accepted.
        assert_eq!(InterpDist::new(1, 3, 1.0 + 1e-13).unwrap().a(), 1.0);
    }

    #[test]
    fn interp_renyi_matches_the_vector_evaluation() {
        for (k, l) in [(1, 3), (2, 3), (1, 10), (4, 5), (3, 7)] {
            for a in [0.0, 0.1, 0.37, 0.5, 0.99, 1.0] {
                let d = InterpDist::new(k, l, a).unwrap();
                let v = interp_vector(d);
                for q in [0.5, 1.0, 2.0, 3.0, 8.0] {
                    let direct = interp_renyi(d, RenyiOrder::new(q).unwrap());
                    let via_vec = renyi(&v, RenyiOrder::new(q).unwrap()).nats;
                    assert!(
                        (direct - via_vec).abs() < 1e-12,
                        "k={k} l={l} a={a} q={q}: {direct} vs {via_vec}"
                    );
                }
            }
        }
    }

    #[test]
    fn interp_renyi_closed_form_examples() {
        // Order two of the long chord, written out explicitly.
        let n = 5.0;
        let a = 0.3;
        let d = InterpDist::new(1, 5, a).unwrap();
        let expect = -(((1.0 + (n - 1.0) * a) / n).powi(2) + (n - 1.0) * ((1.0 - a) / n).powi(2))
            .ln();
        assert!((interp_renyi(d, RenyiOrder::General(2.0)) - expect).abs() < 1e-14);

        // Order two of the second cascade arc at the worked-vector purity.
        let d = InterpDist::new(2, 3, 0.5).unwrap();
        assert!((interp_renyi(d, RenyiOrder::General(2.0)) - (8.0_f64 / 3.0).ln()).abs() < 1e-14);

        // Order zero sees all components while the mix is proper.
        let d = InterpDist::new(2, 7, 0.9).unwrap();
        assert!((interp_renyi(d, RenyiOrder::Zero) - 7.0_f64.ln()).abs() < 1e-14);
        let d = InterpDist::new(2, 7, 1.0).unwrap();
        assert!((interp_renyi(d, RenyiOrder::Zero) - 2.0_f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn chord_entropy_is_strictly_decreasing_in_a() {
        for q in [2.0, 3.0] {
            for n in [3usize, 8, 20] {
                let mut prev = f64::INFINITY;
                for i in 0..=50 {
                    let a = i as f64 / 50.0;
                    let h = interp_renyi(
                        InterpDist::new(1, n, a).unwrap(),
                        RenyiOrder::new(q).unwrap(),
                    );
                    assert!(h < prev, "not decreasing at n={n} q={q} a={a}");
                    prev = h;
                }
            }
        }
    }

    #[test]
    fn select_arc_examples() {
        assert_eq!(select_arc(0.98, 3).unwrap(), 3);
        assert_eq!(select_arc(LN2, 3).unwrap(), 2);
        assert_eq!(select_arc(0.1, 20).unwrap(), 2);
        assert_eq!(select_arc(0.0, 5).unwrap(), 2);
        assert_eq!(select_arc(5.0_f64.ln(), 5).unwrap(), 5);
        assert_eq!(select_arc(3.0_f64.ln() + 1e-13, 3).unwrap(), 3);
        assert!(select_arc(1.2, 3).is_err());
        assert!(select_arc(-0.5, 3).is_err());
    }

    #[test]
    fn select_arc_boundary_tie_gives_identical_bounds_from_both_arcs() {
        // At H2 = ln 2 the point sits where arcs 2 and 3 meet; inverting on
        // either arc reconstructs the same flat distribution.
        let h = LN2;
        let a2 = invert_a_from_h2_bottom(h, 2).unwrap();
        let a3 = invert_a_from_h2_bottom(h, 3).unwrap();
        let from_arc2 = interp_renyi(InterpDist::new(1, 2, a2).unwrap(), RenyiOrder::Shannon);
        let from_arc3 = interp_renyi(InterpDist::new(2, 3, a3).unwrap(), RenyiOrder::Shannon);
        assert!((from_arc2 - LN2).abs() < 1e-12);
        assert!((from_arc3 - LN2).abs() < 1e-12);
    }

    #[test]
    fn h2_top_inversion_examples() {
        assert_eq!(invert_a_from_h2_top(3.0_f64.ln(), 3).unwrap(), 0.0);
        assert_eq!(invert_a_from_h2_top(0.0, 3).unwrap(), 1.0);
        assert!((invert_a_from_h2_top(H2_WORKED, 3).unwrap() - 0.25).abs() < 1e-12);
    }

    #[test]
    fn h2_bottom_inversion_examples() {
        assert_eq!(invert_a_from_h2_bottom(3.0_f64.ln(), 3).unwrap(), 0.0);
        assert_eq!(invert_a_from_h2_bottom(LN2, 3).unwrap(), 1.0);
        assert!((invert_a_from_h2_bottom(H2_WORKED, 3).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn h3_top_inversion_examples() {
        assert_eq!(invert_a_from_h3_top(3.0_f64.ln(), 3).unwrap(), 0.0);
        assert_eq!(invert_a_from_h3_top(0.0, 3).unwrap(), 1.0);
        assert!((invert_a_from_h3_top(H3_WORKED, 3).unwrap() - 0.25).abs() < 1e-12);
    }

    #[test]
    fn h3_bottom_inversion_examples() {
        assert_eq!(invert_a_from_h3_bottom(LN2, 2).unwrap(), 0.0);
        assert_eq!(invert_a_from_h3_bottom(0.0, 2).unwrap(), 1.0);
        let a = invert_a_from_h3_bottom(H3_WORKED, 3).unwrap();
        assert!((a - 0.545836543402008).abs() < 1e-12);
    }

    #[test]
    fn two_point_closed_form_used_for_n_2() {
        // The (1,2) chord is also the first cascade arc, so top and bottom
        // inversions agree there.
        for i in 1..=9 {
            let a = i as f64 / 10.0;
            let h3 = interp_renyi(InterpDist::new(1, 2, a).unwrap(), RenyiOrder::General(3.0));
            let top = invert_a_from_h3_top(h3, 2).unwrap();
            let bottom = invert_a_from_h3_bottom(h3, 2).unwrap();
            assert!((top - a).abs() < 1e-12);
            assert!((bottom - a).abs() < 1e-12);
        }
    }

    #[test]
    fn cubic_solver_examples() {
        let r = solve_cubic_in_unit_interval(3.0, 0.0, -13.0 / 64.0, RootSelect::Largest).unwrap();
        assert!((r - 0.25).abs() < 1e-13);
        let r = solve_cubic_in_unit_interval(-6.0, 0.0, 1.625, RootSelect::Unique).unwrap();
        assert!((r - 0.545836543402008).abs() < 1e-12);
        let r = solve_cubic_in_unit_interval(3.0, 0.0, 0.0, RootSelect::Largest).unwrap();
        assert_eq!(r, 0.0);
    }

    #[test]
    fn cubic_solver_error_cases() {
        // (a − 0.2)(a − 0.7)(a − 5) has two unit-interval roots.
        let (c2, c1, c0) = (-5.9, 4.64, -0.7);
        assert!(matches!(
            solve_cubic_in_unit_interval(c2, c1, c0, RootSelect::Unique),
            Err(Error::MultipleRoots)
        ));
        let r = solve_cubic_in_unit_interval(c2, c1, c0, RootSelect::Largest).unwrap();
        assert!((r - 0.7).abs() < 1e-12);
        assert!(matches!(
            solve_cubic_in_unit_interval(0.0, 0.0, 1.0, RootSelect::Largest),
            Err(Error::NoRootInUnitInterval)
        ));
    }

    #[test]
    fn round_trips_on_a_coarse_grid() {
        for n in [3usize, 7, 20] {
            for i in 0..=20 {
                let a = i as f64 / 20.0;
                let h2 = interp_renyi(InterpDist::new(1, n, a).unwrap(), RenyiOrder::General(2.0));
                assert!((invert_a_from_h2_top(h2, n).unwrap() - a).abs() < 1e-9);
                let h3 = interp_renyi(InterpDist::new(1, n, a).unwrap(), RenyiOrder::General(3.0));
                let got = invert_a_from_h3_top(h3, n).unwrap();
                assert!(
                    (got - a).abs() < 1e-9,
                    "h3 top n={n} a={a}: got {got} (err {:e})",
                    got - a
                );
            }
        }
        for k in [2usize, 5, 13, 20] {
            for i in 0..=20 {
                let a = i as f64 / 20.0;
                let d = InterpDist::new(k - 1, k, a).unwrap();
                let h2 = interp_renyi(d, RenyiOrder::General(2.0));
                assert!((invert_a_from_h2_bottom(h2, k).unwrap() - a).abs() < 1e-9);
                let h3 = interp_renyi(d, RenyiOrder::General(3.0));
                assert!((invert_a_from_h3_bottom(h3, k).unwrap() - a).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn inversions_reject_far_out_of_range_inputs() {
        assert!(invert_a_from_h2_top(1.2, 3).is_err());
        assert!(invert_a_from_h2_bottom(0.2, 3).is_err());
        assert!(invert_a_from_h3_top(-0.2, 3).is_err());
        assert!(invert_a_from_h3_bottom(1.2, 3).is_err());
        // Noise within the slack window is clamped instead.
        assert_eq!(invert_a_from_h2_top(3.0_f64.ln() + 1e-10, 3).unwrap(), 0.0);
    }
}
