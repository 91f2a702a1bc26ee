//! Entropies of discrete probability vectors, and what one entropy value
//! reveals about the others.
//!
//! The crate has two halves. The first evaluates the order-q entropy family
//! (support, Shannon, collision, min-entropy and every order in between) on
//! validated probability vectors. The second inverts that map: given the
//! order-2 or order-3 entropy of an otherwise unknown vector on `N`
//! components, it computes rigorous two-sided bounds on the Shannon entropy
//! (and on other orders), heuristic point estimates that sit between those
//! bounds, a Monte Carlo study of how tight the estimates are under a
//! natural geometric sampling measure, and the datasets behind the standard
//! plots of the achievable entropy region.
//!
//! The bounds come from one geometric fact: among all vectors with a given
//! value of some entropy order, the extremes of every other order are
//! attained on two-level mixtures of flat distributions. Sweeping the
//! mixture weight traces the boundary of the achievable region, so bounding
//! reduces to inverting a scalar function on [0, 1].

pub mod bounds;
pub mod entropy;
pub mod error;
pub mod extrapolate;
pub mod figures;
pub mod interp;
pub mod prob;
pub mod sampling;

pub use bounds::{
    general_bounds, invert_a_on_family, monotonicity_bound, renyi_bounds_from_h2,
    shannon_bounds_from_h2, shannon_bounds_from_h3, simple_upper, BoundResult, Rigor, Side,
};

pub use entropy::{
    hartley, power_sum, purity_stats, renyi, renyi_profile, shannon, structural_entropy, tsallis,
    EntropyValue, PurityStats,
};
pub use error::{Error, Result};
pub use extrapolate::{
    entropies_for_extrapolation, estimate_023, estimate_star, estimate_star_prime,
    lower_extrap_bounds, lower_extrap_h2_h3, structural_gap_upper, upper_extrap_bounds,
    upper_interp_h0_h2, Estimate, Ingredients,
};
pub use figures::{
    entropy_plane_boundary, iso_entropy_contours, profile_with_bounds, PlaneBoundary, Polyline,
    ProfileWithBounds,
};
pub use interp::{
    interp_renyi, interp_vector, invert_a_from_h2_bottom, invert_a_from_h2_top,
    invert_a_from_h3_bottom, invert_a_from_h3_top, select_arc, solve_cubic_in_unit_interval,
    InterpDist, RootSelect, ARC_TIE_TOL,
};
pub use prob::{
    flat_k, make_prob_vec, NormalizeMode, ProbVec, RenyiOrder, NEG_TOL, NORM_TOL, Q_ONE_EPS,
};
pub use sampling::{
    deviation_study, sample_fisher_rao, Channel, DeviationStudy, EdgedChannel, RngHandle,
    SAMPLER_ALGORITHM,
};
