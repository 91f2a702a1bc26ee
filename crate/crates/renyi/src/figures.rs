//! Plot-ready datasets: iso-entropy contours on the 3-component simplex,
//! the achievable region in an (H_s, H_q) plane, and a full entropy
//! profile with its bound curves and extrapolation lines.
//!
//! Everything is returned as labeled polylines in plain coordinates, so
//! the rendering layer (CSV, gnuplot, anything else) stays trivial.
//!
//! The simplex contours use the equilateral embedding that sends the three
//! unit vectors to `(0,0)`, `(1,0)` and `(1/2, √3/2)`. In that embedding
//! collision-entropy contours are exact circles around the barycenter,
//! which the tests exploit.

use std::collections::HashMap;

use serde::Serialize;

use crate::entropy::{renyi, renyi_slice};
use crate::error::{Error, Result};
use crate::extrapolate::{entropies_for_extrapolation, estimate_star};
use crate::interp::{family_entropy, invert_a_from_h2_top, invert_a_from_h3_top, select_arc};
use crate::interp::{invert_a_from_h2_bottom, invert_a_from_h3_bottom};
use crate::prob::{ProbVec, RenyiOrder};

/// A labeled sequence of points; the basic unit every figure is built of.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Polyline {
    pub label: String,
    pub points: Vec<[f64; 2]>,
}

/// The boundary of the achievable region in the `(H_s, H_q)` plane.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlaneBoundary {
    /// The chord family `(1, N)`, swept from the flat end to the point
    /// mass. One envelope of the region.
    pub upper_arc: Polyline,
    /// The cascade arcs `(k−1, k)` for `k = N` down to 2, together the
    /// other envelope.
    pub lower_cascade: Vec<Polyline>,
    /// `(ln k, ln k)` for `k = 1..=N`: where adjacent arcs meet and both
    /// envelopes touch the diagonal.
    pub lattice_points: Vec<[f64; 2]>,
    /// Straight or closed-form reference curves: the monotonicity diagonal
    /// always, the purity upper-bound curve when the plane is `(H₂, H₁)`
    /// or `(H₁, H₂)`.
    pub reference_curves: Vec<Polyline>,
}

/// An entropy profile over a grid of orders, with the two pairs of bound
/// curves pinned at the profile's own order-2 and order-3 values, the two
/// straight extrapolation lines, and point markers at order 1.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProfileWithBounds {
    /// `(q, H_q)` of the vector itself.
    pub profile: Polyline,
    /// Chord family pinned at the vector's H₂, evaluated across the grid.
    /// A rigorous upper bound for orders below 2, a lower bound above.
    pub h2_upper: Polyline,
    /// Cascade arc pinned at H₂; the opposite side of the same window.
    pub h2_lower: Polyline,
    /// Chord family pinned at H₃.
    pub h3_upper: Polyline,
    /// Cascade arc pinned at H₃.
    pub h3_lower: Polyline,
    /// The line through `(2, H₂)` and `(3, H₃)`.
    pub lower_line: Polyline,
    /// The line through `(2, U(H₂))` and `(3, U(H₃))`, where `U` is the
    /// sharp Shannon upper bound.
    pub upper_line: Polyline,
    /// `(1, H₁)`: the true Shannon entropy.
    pub shannon_marker: [f64; 2],
    /// `(1, H*)`: the composite point estimate.
    pub star_marker: [f64; 2],
}

const SQRT3_2: f64 = 0.8660254037844386;

/// Map simplex coordinates (x₁ implied) to the equilateral embedding.
fn embed(x2: f64, x3: f64) -> [f64; 2] {
    [x2 + 0.5 * x3, SQRT3_2 * x3]
}

/// Iso-entropy contour lines of the order-q entropy on the 3-component
/// simplex, one polyline per connected contour piece, for each requested
/// level in `(0, ln 3)`.
///
/// The simplex is triangulated on a `grid × grid` lattice (two triangles
/// per cell), crossings are linearly interpolated on triangle edges, and
/// the resulting segments are chained into polylines. Orders 0 and ∞ are
/// rejected: the support entropy is piecewise constant and the min-entropy
/// has contour kinks that a fixed lattice renders poorly.
pub fn iso_entropy_contours(
    q: RenyiOrder,
    levels: &[f64],
    grid: usize,
) -> Result<Vec<Polyline>> {
    match q {
        RenyiOrder::Zero => return Err(Error::OrderOutsideValidity { q: 0.0 }),
        RenyiOrder::Infinity => {
            return Err(Error::OrderOutsideValidity { q: f64::INFINITY })
        }
        _ => {}
    }
    if grid < 32 {
        return Err(Error::BadGrid("contour grid must be at least 32"));
    }
    let max_level = 3.0_f64.ln();
    for &level in levels {
        if !(level > 0.0 && level < max_level) {
            return Err(Error::LevelOutOfRange {
                level,
                max: max_level,
            });
        }
    }

    let g = grid;
    let stride = g + 1;
    let mut vals = vec![f64::NAN; stride * stride];
    for i in 0..=g {
        for j in 0..=(g - i) {
            let x1 = i as f64 / g as f64;
            let x2 = j as f64 / g as f64;
            let x3 = (1.0 - x1 - x2).max(0.0);
            vals[i * stride + j] = renyi_slice(&[x1, x2, x3], q);
        }
    }

    let mut out = Vec::new();
    for &level in levels {
        let mut segments: Vec<([f64; 2], [f64; 2])> = Vec::new();
        // Triangle vertices are given in (i, j) lattice steps of x₁ and
        // x₂; the lower cell triangle always fits the simplex when its
        // right-angle corner does, the upper one needs the far corner in.
        for i in 0..g {
            for j in 0..g - i {
                let lower = [(i, j), (i + 1, j), (i, j + 1)];
                triangle_crossings(&vals, stride, g, level, lower, &mut segments);
                if i + j + 2 <= g {
                    let upper = [(i + 1, j), (i + 1, j + 1), (i, j + 1)];
                    triangle_crossings(&vals, stride, g, level, upper, &mut segments);
                }
            }
        }
        for chain in chain_segments(&segments) {
            out.push(Polyline {
                label: format!("q={q} level={level:.6}"),
                points: chain,
            });
        }
    }
    Ok(out)
}

fn triangle_crossings(
    vals: &[f64],
    stride: usize,
    g: usize,
    level: f64,
    tri: [(usize, usize); 3],
    segments: &mut Vec<([f64; 2], [f64; 2])>,
) {
    let f = |(i, j): (usize, usize)| vals[i * stride + j];
    let above = |v: f64| v >= level;
    let mut crossings: Vec<[f64; 2]> = Vec::with_capacity(2);
    for e in 0..3 {
        let a = tri[e];
        let b = tri[(e + 1) % 3];
        let (fa, fb) = (f(a), f(b));
        if above(fa) == above(fb) {
            continue;
        }
        let t = (level - fa) / (fb - fa);
        let x1 = (a.0 as f64 + t * (b.0 as f64 - a.0 as f64)) / g as f64;
        let x2 = (a.1 as f64 + t * (b.1 as f64 - a.1 as f64)) / g as f64;
        let x3 = (1.0 - x1 - x2).max(0.0);
        crossings.push(embed(x2, x3));
    }
    if crossings.len() == 2 {
        segments.push((crossings[0], crossings[1]));
    }
}

/// Chain loose segments into polylines by matching endpoints quantized to
/// a nanometer-scale lattice. Shared triangle edges produce bitwise-equal
/// crossing points, so the quantization only has to absorb exact ties.
fn chain_segments(segments: &[([f64; 2], [f64; 2])]) -> Vec<Vec<[f64; 2]>> {
    let key = |p: [f64; 2]| ((p[0] * 1e9).round() as i64, (p[1] * 1e9).round() as i64);
    let mut at_point: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    for (idx, (a, b)) in segments.iter().enumerate() {
        at_point.entry(key(*a)).or_default().push(idx);
        at_point.entry(key(*b)).or_default().push(idx);
    }
    let mut used = vec![false; segments.len()];
    let mut chains = Vec::new();
    for start in 0..segments.len() {
        if used[start] {
            continue;
        }
        used[start] = true;
        let (a, b) = segments[start];
        let mut chain = vec![a, b];
        // Walk forward from the tail, then extend backwards from the head.
        for pass in 0..2 {
            loop {
                let tip = *chain.last().unwrap();
                let Some(candidates) = at_point.get(&key(tip)) else {
                    break;
                };
                let Some(&next) = candidates.iter().find(|&&s| !used[s]) else {
                    break;
                };
                used[next] = true;
                let (na, nb) = segments[next];
                chain.push(if key(na) == key(tip) { nb } else { na });
            }
            if pass == 0 {
                chain.reverse();
            }
        }
        chains.push(chain);
    }
    chains
}

/// The achievable region in the `(H_s, H_q)` plane for vectors on `n`
/// components: both boundary envelopes, the lattice points where they
/// meet, and reference curves.
pub fn entropy_plane_boundary(
    q: f64,
    s: f64,
    n: usize,
    samples_per_arc: usize,
) -> Result<PlaneBoundary> {
    for order in [q, s] {
        if order.is_nan() || order < 0.0 || order.is_infinite() {
            return Err(Error::OrderOutsideValidity { q: order });
        }
    }
    if (q - s).abs() <= 1e-12 {
        return Err(Error::EqualOrders);
    }
    if n < 2 {
        return Err(Error::BadK { k: 2, n });
    }
    if samples_per_arc < 2 {
        return Err(Error::BadGrid("samples_per_arc must be at least 2"));
    }
    let q_ord = RenyiOrder::new(q)?;
    let s_ord = RenyiOrder::new(s)?;

    let sweep = |k: usize, l: usize| -> Vec<[f64; 2]> {
        (0..samples_per_arc)
            .map(|i| {
                let a = i as f64 / (samples_per_arc - 1) as f64;
                [family_entropy(k, l, a, s_ord), family_entropy(k, l, a, q_ord)]
            })
            .collect()
    };

    let upper_arc = Polyline {
        label: format!("arc(1,{n})"),
        points: sweep(1, n),
    };
    let lower_cascade: Vec<Polyline> = (2..=n)
        .rev()
        .map(|k| Polyline {
            label: format!("arc({},{})", k - 1, k),
            points: sweep(k - 1, k),
        })
        .collect();
    let lattice_points: Vec<[f64; 2]> = (1..=n)
        .map(|k| {
            let h = (k as f64).ln();
            [h, h]
        })
        .collect();

    let mut reference_curves = vec![Polyline {
        label: "monotonicity".to_string(),
        points: vec![[0.0, 0.0], [(n as f64).ln(), (n as f64).ln()]],
    }];
    let nf = n as f64;
    let cap = nf.ln() + 1.0 / nf;
    if (s - 2.0).abs() < 1e-9 && (q - 1.0).abs() < 1e-9 {
        // x = H₂, y = the closed-form ceiling on H₁.
        let points = (0..samples_per_arc)
            .map(|i| {
                let h2 = nf.ln() * i as f64 / (samples_per_arc - 1) as f64;
                [h2, cap - (-h2).exp()]
            })
            .collect();
        reference_curves.push(Polyline {
            label: "purity-upper".to_string(),
            points,
        });
    } else if (s - 1.0).abs() < 1e-9 && (q - 2.0).abs() < 1e-9 {
        // Same ceiling solved for H₂ as a function of H₁.
        let points = (0..samples_per_arc)
            .map(|i| {
                let h1 = nf.ln() * i as f64 / (samples_per_arc - 1) as f64;
                [h1, -(cap - h1).ln()]
            })
            .collect();
        reference_curves.push(Polyline {
            label: "purity-upper".to_string(),
            points,
        });
    }

    Ok(PlaneBoundary {
        upper_arc,
        lower_cascade,
        lattice_points,
        reference_curves,
    })
}

/// Entropy profile of `p` over `q_grid`, with the four bound curves pinned
/// at the profile's own order-2 and order-3 entropies, the two linear
/// extrapolation lines, and the order-1 markers.
///
/// Grid orders must be finite, non-negative and strictly increasing. The
/// bound curves are evaluated across the whole grid: each is a rigorous
/// bound only on its side of the pinning order (the chord curve bounds
/// from above below the pin and from below above it), and the curves all
/// intersect the profile at their pinning order.
pub fn profile_with_bounds(p: &ProbVec, q_grid: &[f64]) -> Result<ProfileWithBounds> {
    if q_grid.len() < 2 {
        return Err(Error::BadGrid("order grid needs at least two points"));
    }
    for &q in q_grid {
        if q.is_nan() || q < 0.0 {
            return Err(Error::NegativeOrder { q });
        }
        if q.is_infinite() {
            return Err(Error::OrderOutsideValidity { q });
        }
    }
    if q_grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::UnsortedGrid);
    }
    let n = p.len();
    let (h0, h2, h3) = entropies_for_extrapolation(p);
    let h1 = renyi(p, RenyiOrder::Shannon).nats;

    let line = |label: &str, f: &dyn Fn(f64) -> f64| Polyline {
        label: label.to_string(),
        points: q_grid.iter().map(|&x| [x, f(x)]).collect(),
    };

    let profile = Polyline {
        label: "profile".to_string(),
        points: q_grid
            .iter()
            .map(|&x| [x, renyi(p, RenyiOrder::new(x).unwrap()).nats])
            .collect(),
    };

    if n == 1 {
        let zero = |label: &str| line(label, &|_| 0.0);
        return Ok(ProfileWithBounds {
            profile,
            h2_upper: zero("interp-arc-h2"),
            h2_lower: zero("cascade-h2"),
            h3_upper: zero("interp-arc-h3"),
            h3_lower: zero("cascade-h3"),
            lower_line: zero("line-through-h2-h3"),
            upper_line: zero("line-through-upper-bounds"),
            shannon_marker: [1.0, 0.0],
            star_marker: [1.0, 0.0],
        });
    }

    let a2_top = invert_a_from_h2_top(h2, n)?;
    let k2 = select_arc(h2, n)?;
    let a2_bot = invert_a_from_h2_bottom(h2, k2)?;
    let a3_top = invert_a_from_h3_top(h3, n)?;
    let k3 = select_arc(h3, n)?;
    let a3_bot = invert_a_from_h3_bottom(h3, k3)?;

    let curve = |label: &str, k: usize, l: usize, a: f64| Polyline {
        label: label.to_string(),
        points: q_grid
            .iter()
            .map(|&x| [x, family_entropy(k, l, a, RenyiOrder::new(x).unwrap())])
            .collect(),
    };

    let u2 = family_entropy(1, n, a2_top, RenyiOrder::Shannon);
    let u3 = family_entropy(1, n, a3_top, RenyiOrder::Shannon);
    let star = estimate_star(h2, h3, n, Some(h0))?.value;

    Ok(ProfileWithBounds {
        profile,
        h2_upper: curve("interp-arc-h2", 1, n, a2_top),
        h2_lower: curve("cascade-h2", k2 - 1, k2, a2_bot),
        h3_upper: curve("interp-arc-h3", 1, n, a3_top),
        h3_lower: curve("cascade-h3", k3 - 1, k3, a3_bot),
        lower_line: line("line-through-h2-h3", &|x| {
            (3.0 - x) * h2 + (x - 2.0) * h3
        }),
        upper_line: line("line-through-upper-bounds", &|x| {
            (3.0 - x) * u2 + (x - 2.0) * u3
        }),
        shannon_marker: [1.0, h1],
        star_marker: [1.0, star],
    })
}
