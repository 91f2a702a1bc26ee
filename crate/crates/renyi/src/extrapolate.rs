//! Heuristic Shannon-entropy estimates extrapolated from low-order data.
//!
//! The rigorous bounds in [`crate::bounds`] leave a window around the true
//! Shannon entropy. The estimators here pick a point inside (usually) that
//! window by treating the entropy as roughly linear, or concave, in the
//! order near q = 1 and extrapolating from the values at orders 0, 2 and 3.
//!
//! None of these are bounds. The entropy family is not concave in the
//! order for every vector (a long near-uniform tail under a single heavy
//! component bends it the other way), and when concavity fails, the
//! "upper" estimates can land below the true value. Every result therefore
//! carries [`Rigor::Heuristic`], and the test suite includes an explicit
//! vector where the midpoint estimate undershoots the true entropy.

use serde::Serialize;

use crate::bounds::{shannon_bounds_from_h2, shannon_bounds_from_h3, Rigor};
use crate::entropy::renyi;
use crate::error::{Error, Result};
use crate::prob::{ProbVec, RenyiOrder};

/// Which inputs an estimate consumed; serialized alongside the value so
/// downstream tooling can tell the variants apart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Ingredients {
    pub h0: bool,
    pub h2: bool,
    pub h3: bool,
    pub n: bool,
}

/// A heuristic point estimate with its provenance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Estimate {
    /// The estimated Shannon entropy, in nats.
    pub value: f64,
    /// Always [`Rigor::Heuristic`]; kept explicit so serialized output
    /// cannot be mistaken for a proven bound.
    pub rigor: Rigor,
    pub ingredients: Ingredients,
    /// Stable machine-readable label for the construction.
    pub source: &'static str,
}

fn heuristic(value: f64, ingredients: Ingredients, source: &'static str) -> Estimate {
    Estimate {
        value,
        rigor: Rigor::Heuristic,
        ingredients,
        source,
    }
}

const USES_H0_H2: Ingredients = Ingredients {
    h0: true,
    h2: true,
    h3: false,
    n: false,
};
const USES_H2_H3: Ingredients = Ingredients {
    h0: false,
    h2: true,
    h3: true,
    n: false,
};
const USES_ALL_H: Ingredients = Ingredients {
    h0: true,
    h2: true,
    h3: true,
    n: false,
};
const USES_H2_H3_N: Ingredients = Ingredients {
    h0: false,
    h2: true,
    h3: true,
    n: true,
};

fn require_ordered(hi: f64, lo: f64, what: &'static str) -> Result<()> {
    if hi.is_nan() || lo.is_nan() || lo > hi + 1e-12 {
        return Err(Error::Disordered { what });
    }
    Ok(())
}

/// Midpoint of the support entropy and the collision entropy,
/// `(H₀ + H₂)/2`. Exact whenever the entropy is linear in the order
/// between 0 and 2; an upper estimate when it is concave there.
pub fn upper_interp_h0_h2(h0: f64, h2: f64) -> Result<Estimate> {
    require_ordered(h0, h2, "H0 >= H2")?;
    Ok(heuristic(0.5 * (h0 + h2), USES_H0_H2, "midpoint-h0-h2"))
}

/// Estimated ceiling on the structural gap `H₁ − H₂`, namely
/// `(H₀ − H₂)/2`. The same concavity heuristic as
/// [`upper_interp_h0_h2`], rearranged around the collision entropy.
pub fn structural_gap_upper(h0: f64, h2: f64) -> Result<Estimate> {
    require_ordered(h0, h2, "H0 >= H2")?;
    Ok(heuristic(0.5 * (h0 - h2), USES_H0_H2, "structural-gap"))
}

/// Linear extrapolation of the orders 2 and 3 back to order 1:
/// `2H₂ − H₃`. A lower estimate when the entropy is concave in the order.
pub fn lower_extrap_h2_h3(h2: f64, h3: f64) -> Result<Estimate> {
    require_ordered(h2, h3, "H2 >= H3")?;
    Ok(heuristic(2.0 * h2 - h3, USES_H2_H3, "line-through-h2-h3"))
}

/// Average of the two one-sided estimates that need no inversion:
/// `(H₀ + 5H₂ − 2H₃)/4`, the midpoint of [`upper_interp_h0_h2`] and
/// [`lower_extrap_h2_h3`].
pub fn estimate_023(h0: f64, h2: f64, h3: f64) -> Result<Estimate> {
    require_ordered(h0, h2, "H0 >= H2")?;
    require_ordered(h2, h3, "H2 >= H3")?;
    Ok(heuristic(
        0.25 * (h0 + 5.0 * h2 - 2.0 * h3),
        USES_ALL_H,
        "blend-h0-h2-h3",
    ))
}

/// Linear extrapolation through the two chord upper bounds:
/// `2·U(H₂) − U(H₃)` where `U` maps a known entropy to the sharp Shannon
/// upper bound on `N` components.
pub fn upper_extrap_bounds(h2: f64, h3: f64, n: usize) -> Result<Estimate> {
    require_ordered(h2, h3, "H2 >= H3")?;
    let (_, u2) = shannon_bounds_from_h2(h2, n)?;
    let (_, u3) = shannon_bounds_from_h3(h3, n)?;
    Ok(heuristic(
        2.0 * u2.value - u3.value,
        USES_H2_H3_N,
        "line-through-upper-bounds",
    ))
}

/// Linear extrapolation through the two cascade lower bounds:
/// `2·L(H₂) − L(H₃)`.
pub fn lower_extrap_bounds(h2: f64, h3: f64, n: usize) -> Result<Estimate> {
    require_ordered(h2, h3, "H2 >= H3")?;
    let (l2, _) = shannon_bounds_from_h2(h2, n)?;
    let (l3, _) = shannon_bounds_from_h3(h3, n)?;
    Ok(heuristic(
        2.0 * l2.value - l3.value,
        USES_H2_H3_N,
        "line-through-lower-bounds",
    ))
}

/// The symmetrized chord estimate `U(H₂) + H₂ − (U(H₃) + H₃)/2`, which is
/// also the midpoint of [`upper_extrap_bounds`] and
/// [`lower_extrap_h2_h3`].
pub fn estimate_star_prime(h2: f64, h3: f64, n: usize) -> Result<Estimate> {
    require_ordered(h2, h3, "H2 >= H3")?;
    let (_, u2) = shannon_bounds_from_h2(h2, n)?;
    let (_, u3) = shannon_bounds_from_h3(h3, n)?;
    Ok(heuristic(
        u2.value + h2 - 0.5 * (u3.value + h3),
        USES_H2_H3_N,
        "star-prime",
    ))
}

/// The composite point estimate: the mean of an upper-leaning and a
/// lower-leaning estimate.
///
/// The upper half is [`upper_extrap_bounds`], capped by
/// [`upper_interp_h0_h2`] when the support entropy is supplied. The lower
/// half is whichever of [`lower_extrap_h2_h3`] and the cascade lower bound
/// at H₂ lies higher.
pub fn estimate_star(h2: f64, h3: f64, n: usize, h0: Option<f64>) -> Result<Estimate> {
    require_ordered(h2, h3, "H2 >= H3")?;
    let mut upper = upper_extrap_bounds(h2, h3, n)?.value;
    if let Some(h0) = h0 {
        require_ordered(h0, h2, "H0 >= H2")?;
        upper = upper.min(upper_interp_h0_h2(h0, h2)?.value);
    }
    let (l2, _) = shannon_bounds_from_h2(h2, n)?;
    let lower = lower_extrap_h2_h3(h2, h3)?.value.max(l2.value);
    let ingredients = Ingredients {
        h0: h0.is_some(),
        ..USES_H2_H3_N
    };
    Ok(heuristic(0.5 * (upper + lower), ingredients, "star"))
}

/// The three entropies the estimators consume, `(H₀, H₂, H₃)`, evaluated
/// on an explicit vector. Support counting uses a zero threshold: any
/// strictly positive component counts.
pub fn entropies_for_extrapolation(p: &ProbVec) -> (f64, f64, f64) {
    (
        renyi(p, RenyiOrder::Zero).nats,
        renyi(p, RenyiOrder::General(2.0)).nats,
        renyi(p, RenyiOrder::General(3.0)).nats,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entropy::shannon;
    use crate::prob::{make_prob_vec, NormalizeMode};

    const H0_WORKED: f64 = 1.0986122886681098;
    const H1_WORKED: f64 = 1.039720770839918;
    const H2_WORKED: f64 = 0.9808292530117262;
    const H3_WORKED: f64 = 0.9281489951828131;

    #[test]
    fn worked_vector_estimates() {
        // (1/2, 1/4, 1/4) lies on the chord family, which makes several
        // estimates collapse to its exact Shannon entropy.
        let e = upper_interp_h0_h2(H0_WORKED, H2_WORKED).unwrap();
        assert!((e.value - H1_WORKED).abs() < 1e-12);
        assert_eq!(e.source, "midpoint-h0-h2");

        let e = lower_extrap_h2_h3(H2_WORKED, H3_WORKED).unwrap();
        assert!((e.value - 1.0335095108406394).abs() < 1e-12);

        let e = estimate_023(H0_WORKED, H2_WORKED, H3_WORKED).unwrap();
        assert!((e.value - 1.0366151408402786).abs() < 1e-12);

        let e = upper_extrap_bounds(H2_WORKED, H3_WORKED, 3).unwrap();
        assert!((e.value - H1_WORKED).abs() < 1e-11);

        let e = lower_extrap_bounds(H2_WORKED, H3_WORKED, 3).unwrap();
        assert!((e.value - 1.0430457120593486).abs() < 1e-11);

        let e = estimate_star_prime(H2_WORKED, H3_WORKED, 3).unwrap();
        assert!((e.value - 1.0366151408402786).abs() < 1e-11);

        let e = estimate_star(H2_WORKED, H3_WORKED, 3, None).unwrap();
        assert!((e.value - 1.0366151408402786).abs() < 1e-11);
        let e = estimate_star(H2_WORKED, H3_WORKED, 3, Some(H0_WORKED)).unwrap();
        assert!((e.value - 1.0366151408402786).abs() < 1e-11);
    }

    #[test]
    fn structural_gap_on_worked_vector() {
        let e = structural_gap_upper(H0_WORKED, H2_WORKED).unwrap();
        assert!((e.value - 0.5 * (H0_WORKED - H2_WORKED)).abs() < 1e-15);
        // On this vector the heuristic gap ceiling does hold.
        assert!(H1_WORKED - H2_WORKED <= e.value + 1e-12);
    }

    #[test]
    fn star_prime_is_the_midpoint_identity() {
        for (h2, h3, n) in [
            (H2_WORKED, H3_WORKED, 3usize),
            (1.9, 1.7, 12),
            (0.4, 0.35, 5),
        ] {
            let sp = estimate_star_prime(h2, h3, n).unwrap().value;
            let up = upper_extrap_bounds(h2, h3, n).unwrap().value;
            let d23 = lower_extrap_h2_h3(h2, h3).unwrap().value;
            assert!((sp - 0.5 * (up + d23)).abs() < 1e-12, "h2={h2} h3={h3} n={n}");
        }
    }

    #[test]
    fn everything_is_heuristic() {
        let estimates = [
            upper_interp_h0_h2(H0_WORKED, H2_WORKED).unwrap(),
            structural_gap_upper(H0_WORKED, H2_WORKED).unwrap(),
            lower_extrap_h2_h3(H2_WORKED, H3_WORKED).unwrap(),
            estimate_023(H0_WORKED, H2_WORKED, H3_WORKED).unwrap(),
            upper_extrap_bounds(H2_WORKED, H3_WORKED, 3).unwrap(),
            lower_extrap_bounds(H2_WORKED, H3_WORKED, 3).unwrap(),
            estimate_star_prime(H2_WORKED, H3_WORKED, 3).unwrap(),
            estimate_star(H2_WORKED, H3_WORKED, 3, Some(H0_WORKED)).unwrap(),
        ];
        for e in estimates {
            assert_eq!(e.rigor, Rigor::Heuristic, "{}", e.source);
        }
    }

    #[test]
    fn midpoint_estimate_can_undershoot_the_true_entropy() {
        // One heavy component over a long near-flat tail: the entropy is
        // convex in the order between 0 and 2 here, so the "upper"
        // midpoint estimate lands strictly below the true value. This is
        // why none of these estimators may claim rigor.
        let mut raw = vec![0.03; 20];
        raw[0] = 0.43;
        let p = make_prob_vec(&raw, NormalizeMode::Strict).unwrap();
        let (h0, h2, _) = entropies_for_extrapolation(&p);
        let h1 = shannon(&p).nats;
        let e = upper_interp_h0_h2(h0, h2).unwrap();
        assert!(
            e.value < h1 - 1e-3,
            "midpoint {} should sit below H1 {}",
            e.value,
            h1
        );
    }

    #[test]
    fn ordering_violations_are_rejected() {
        assert!(matches!(
            upper_interp_h0_h2(0.5, 0.9),
            Err(Error::Disordered { .. })
        ));
        assert!(matches!(
            lower_extrap_h2_h3(0.5, 0.9),
            Err(Error::Disordered { .. })
        ));
        assert!(matches!(
            estimate_023(1.0, 0.5, 0.9),
            Err(Error::Disordered { .. })
        ));
        assert!(matches!(
            estimate_star(0.5, 0.9, 3, None),
            Err(Error::Disordered { .. })
        ));
        // Equal values within noise are fine.
        assert!(upper_interp_h0_h2(0.5, 0.5 + 1e-13).is_ok());
    }

    #[test]
    fn entropies_for_extrapolation_match_direct_evaluation() {
        let p = make_prob_vec(&[0.5, 0.25, 0.25], NormalizeMode::Strict).unwrap();
        let (h0, h2, h3) = entropies_for_extrapolation(&p);
        assert!((h0 - H0_WORKED).abs() < 1e-15);
        assert!((h2 - H2_WORKED).abs() < 1e-15);
        assert!((h3 - H3_WORKED).abs() < 1e-15);
    }

    #[test]
    fn estimate_star_window_behavior_on_chord_vectors() {
        // Away from the flat end the composite estimate stays strictly
        // inside the rigorous window.
        for n in [4usize, 9] {
            for i in 3..10 {
                let a = i as f64 / 10.0;
                let p = crate::interp::interp_vector(
                    crate::interp::InterpDist::new(1, n, a).unwrap(),
                );
                let (_, h2, h3) = entropies_for_extrapolation(&p);
                let star = estimate_star(h2, h3, n, None).unwrap().value;
                let (lo, hi) = shannon_bounds_from_h2(h2, n).unwrap();
                assert!(
                    lo.value - 1e-9 <= star && star <= hi.value + 1e-9,
                    "n={n} a={a}"
                );
            }
        }
        // Near the flat end the line through H2 and H3 overshoots the true
        // entropy, and the composite leaves the window with it. This exit
        // is expected, is why the sampling study counts such events, and is
        // the second reason (after non-concave profiles) these estimates
        // carry heuristic rigor only.
        let p = crate::interp::interp_vector(crate::interp::InterpDist::new(1, 9, 0.1).unwrap());
        let (_, h2, h3) = entropies_for_extrapolation(&p);
        let star = estimate_star(h2, h3, 9, None).unwrap().value;
        let (_, hi) = shannon_bounds_from_h2(h2, 9).unwrap();
        assert!(star > hi.value + 1e-4);
    }

    #[test]
    fn single_component_space_estimates_zero() {
        let e = estimate_star(0.0, 0.0, 1, Some(0.0)).unwrap();
        assert_eq!(e.value, 0.0);
    }
}
