//! Monte Carlo study of the heuristic estimates under geometric sampling.
//!
//! Vectors are drawn from the measure induced by the round metric on the
//! probability simplex: squared standard normals, normalized. Under this
//! measure the expected first component is `1/N` and the expected
//! coincidence index `Σxᵢ²` is `3/(N + 2)`, both of which the tests check.
//!
//! For every sample the study records how far the point estimates land
//! from the true Shannon entropy, histograms those deviations, and counts
//! two structural events: the composite estimate escaping the rigorous
//! window, and the order-2 window failing to sit inside the order-3 window.
//!
//! Determinism: sampling is split into fixed chunks of 1024 vectors, each
//! drawn from its own counter-indexed stream of a seeded ChaCha8 generator.
//! Chunks run in parallel but are reduced in index order, so the study is
//! reproducible bit for bit regardless of thread count.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{shannon_bounds_from_h2, shannon_bounds_from_h3};
use crate::entropy::{renyi, shannon};
use crate::error::{Error, Result};
use crate::extrapolate::{estimate_star, lower_extrap_bounds, lower_extrap_h2_h3};
use crate::prob::{make_prob_vec, NormalizeMode, ProbVec, RenyiOrder};

/// Identifier of the sampling scheme, serialized with every study so the
/// provenance of archived results stays checkable.
pub const SAMPLER_ALGORITHM: &str = "chacha8-substreams-v1";

/// Samples per RNG substream; chunk `i` always uses stream `i`.
const CHUNK: usize = 1024;

/// Tolerance window for the structural event counters.
const EVENT_TOL: f64 = 1e-9;

/// A seed wrapper that hands out independent, reproducible substreams.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RngHandle {
    seed: u64,
}

impl RngHandle {
    pub fn new(seed: u64) -> Self {
        RngHandle { seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// The generator for substream `index`. Streams with different indices
    /// never overlap, which is what makes chunked parallel sampling safe.
    pub fn stream(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        rng
    }
}

/// One draw from the round-metric measure on the simplex: `N` standard
/// normals, squared and normalized.
pub fn sample_fisher_rao(n: usize, rng: &mut ChaCha8Rng) -> Result<ProbVec> {
    if n < 1 {
        return Err(Error::BadK { k: 1, n });
    }
    loop {
        let mut v: Vec<f64> = (0..n)
            .map(|_| {
                let g: f64 = StandardNormal.sample(rng);
                g * g
            })
            .collect();
        let sum: f64 = v.iter().sum();
        if sum > 0.0 {
            for x in &mut v {
                *x /= sum;
            }
            return make_prob_vec(&v, NormalizeMode::Strict);
        }
    }
}

/// Histogram and moments of one deviation channel. Moments are population
/// moments over all samples, not just the binned range (the shared binning
/// always covers every sample, so the two views agree here).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Channel {
    /// Samples per bin; sums to the study's `count`.
    pub counts: Vec<u64>,
    /// `counts[i] / (count · bin_width)`, so the histogram integrates to 1.
    pub densities: Vec<f64>,
    pub mean: f64,
    pub stddev: f64,
    pub mean_abs: f64,
}

/// A channel binned over its own symmetric range instead of the shared one.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EdgedChannel {
    /// Bin edges, length `bins + 1`, symmetric around zero.
    pub edges: Vec<f64>,
    #[serde(flatten)]
    pub channel: Channel,
}

/// Full output of [`deviation_study`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeviationStudy {
    pub n: usize,
    pub count: usize,
    pub seed: u64,
    pub bins: usize,
    pub algorithm: &'static str,
    /// Shared bin edges for the `star` and `line_h2_h3` channels, length
    /// `bins + 1`, symmetric around zero.
    pub edges: Vec<f64>,
    /// Deviation of the composite point estimate from the true Shannon
    /// entropy.
    pub star: Channel,
    /// Deviation of the plain linear extrapolation `2H₂ − H₃`.
    pub line_h2_h3: Channel,
    /// Deviation of the extrapolation through the two cascade lower
    /// bounds, binned over its own range.
    pub lower_extrapolation: EdgedChannel,
    /// Samples whose composite estimate left the rigorous window
    /// `[L(H₃), U(H₂)]` by more than 1e-9.
    pub star_outside_sandwich: u64,
    /// Samples where the order-2 window failed to lie inside the order-3
    /// window by more than 1e-9.
    pub dominance_violations: u64,
}

struct ChunkOut {
    d_star: Vec<f64>,
    d_line: Vec<f64>,
    d_lower: Vec<f64>,
    outside: u64,
    dominance: u64,
}

/// Run the Monte Carlo deviation study: `count` samples on `n` components,
/// three deviation channels, `bins` histogram bins per channel.
pub fn deviation_study(
    n: usize,
    count: usize,
    handle: RngHandle,
    bins: usize,
) -> Result<DeviationStudy> {
    if bins < 2 {
        return Err(Error::BadBins { bins });
    }
    if count < 1 {
        return Err(Error::EmptySample);
    }
    let chunks = count.div_ceil(CHUNK);
    let partials: Result<Vec<ChunkOut>> = (0..chunks)
        .into_par_iter()
        .map(|ci| {
            let mut rng = handle.stream(ci as u64);
            let take = CHUNK.min(count - ci * CHUNK);
            let mut out = ChunkOut {
                d_star: Vec::with_capacity(take),
                d_line: Vec::with_capacity(take),
                d_lower: Vec::with_capacity(take),
                outside: 0,
                dominance: 0,
            };
            for _ in 0..take {
                let p = sample_fisher_rao(n, &mut rng)?;
                let h1 = shannon(&p).nats;
                let h2 = renyi(&p, RenyiOrder::General(2.0)).nats;
                let h3 = renyi(&p, RenyiOrder::General(3.0)).nats;
                let star = estimate_star(h2, h3, n, None)?.value;
                let line = lower_extrap_h2_h3(h2, h3)?.value;
                let lower = lower_extrap_bounds(h2, h3, n)?.value;
                out.d_star.push(star - h1);
                out.d_line.push(line - h1);
                out.d_lower.push(lower - h1);
                let (l2, u2) = shannon_bounds_from_h2(h2, n)?;
                let (l3, u3) = shannon_bounds_from_h3(h3, n)?;
                if star < l3.value - EVENT_TOL || star > u2.value + EVENT_TOL {
                    out.outside += 1;
                }
                if u2.value > u3.value + EVENT_TOL || l2.value < l3.value - EVENT_TOL {
                    out.dominance += 1;
                }
            }
            Ok(out)
        })
        .collect();
    let partials = partials?;

    let mut d_star = Vec::with_capacity(count);
    let mut d_line = Vec::with_capacity(count);
    let mut d_lower = Vec::with_capacity(count);
    let mut outside = 0u64;
    let mut dominance = 0u64;
    for part in partials {
        d_star.extend_from_slice(&part.d_star);
        d_line.extend_from_slice(&part.d_line);
        d_lower.extend_from_slice(&part.d_lower);
        outside += part.outside;
        dominance += part.dominance;
    }

    let shared_half = symmetric_half_range(d_star.iter().chain(d_line.iter()));
    let edges = symmetric_edges(shared_half, bins);
    let own_half = symmetric_half_range(d_lower.iter());
    let own_edges = symmetric_edges(own_half, bins);

    Ok(DeviationStudy {
        n,
        count,
        seed: handle.seed(),
        bins,
        algorithm: SAMPLER_ALGORITHM,
        star: bin_channel(&d_star, shared_half, bins),
        line_h2_h3: bin_channel(&d_line, shared_half, bins),
        lower_extrapolation: EdgedChannel {
            edges: own_edges,
            channel: bin_channel(&d_lower, own_half, bins),
        },
        edges,
        star_outside_sandwich: outside,
        dominance_violations: dominance,
    })
}

/// Half-width of the smallest symmetric interval covering every value;
/// falls back to 1.0 when all deviations are zero so the binning stays
/// well defined.
fn symmetric_half_range<'a>(values: impl Iterator<Item = &'a f64>) -> f64 {
    let m = values.fold(0.0_f64, |acc, v| acc.max(v.abs()));
    if m > 0.0 {
        m
    } else {
        1.0
    }
}

fn symmetric_edges(half: f64, bins: usize) -> Vec<f64> {
    let width = 2.0 * half / bins as f64;
    let mut edges: Vec<f64> = (0..=bins).map(|i| -half + i as f64 * width).collect();
    edges[bins] = half;
    edges
}

fn bin_channel(values: &[f64], half: f64, bins: usize) -> Channel {
    let width = 2.0 * half / bins as f64;
    let mut counts = vec![0u64; bins];
    for v in values {
        let idx = (((v + half) / width) as usize).min(bins - 1);
        counts[idx] += 1;
    }
    let total = values.len() as f64;
    let densities = counts
        .iter()
        .map(|&c| c as f64 / (total * width))
        .collect();
    let mean = values.iter().sum::<f64>() / total;
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / total;
    let mean_abs = values.iter().map(|v| v.abs()).sum::<f64>() / total;
    Channel {
        counts,
        densities,
        mean,
        stddev: var.sqrt(),
        mean_abs,
    }
}
