//! Closed-form tail bounds and thresholds behind the pipeline's guarantee.
//! Everything here is pure arithmetic on `f64` (in log space where the
//! quantities overflow), so the certificate can be re-derived and audited
//! at any degree, including degrees far beyond what the pipeline will ever
//! run on.

use serde::Serialize;

/// Pinned values the evaluators are expected to reproduce. `THEORY_THRESHOLD`
/// is the degree above which the full guarantee applies; runs below it are
/// desk-scale and say so in their reports.
pub mod reference {
    /// Optimal triple fraction.
    pub const K_STAR: f64 = 0.038895;
    /// Smallest degree satisfying the clique-event inequality at `K_STAR`.
    pub const DELTA_MIN: u64 = 7_327_700_972;
    /// Smallest degree where the leftover events pass the local lemma.
    pub const LLL_THRESHOLD: u64 = 1_055_000_000;
    /// Degree above which every certificate component holds.
    pub const THEORY_THRESHOLD: f64 = 7.4e9;
    /// Slack used when evaluating the triple mean coefficient.
    pub const EPSILON: f64 = 1e-17;
}

/// Probability that a fixed non-adjacent neighbor pair draws one shared
/// color and both survive conflict deletion, from below.
pub fn pair_retention_lower(delta: u64) -> f64 {
    assert!(delta >= 2);
    let d = delta as f64;
    (-3.0 - 3.0 / (d - 1.0)).exp() / (d - 1.0)
}

/// Mean number of disjoint surviving repeat pairs at a leftover vertex,
/// from below: the guaranteed non-adjacent pair count times the retention
/// probability.
pub fn leftover_pair_mean_lower(delta: u64) -> f64 {
    let d = delta as f64;
    (d * d / 50.0 - d / 10.0).max(0.0) * pair_retention_lower(delta)
}

/// Coefficient of the squared-increment budget: `4 + 16 / e^2`.
pub fn increment_budget_coeff() -> f64 {
    4.0 + 16.0 * (-2.0f64).exp()
}

/// Sum of squared martingale increments for the pair count, from above.
pub fn leftover_increment_budget(delta: u64) -> f64 {
    increment_budget_coeff() * delta as f64
}

/// One-sided martingale tail: `exp(-t^2 / (2 * budget))`.
pub fn azuma_tail(t: f64, increment_budget: f64) -> f64 {
    assert!(increment_budget > 0.0);
    (-t * t / (2.0 * increment_budget)).exp()
}

/// Tail probability of a leftover vertex keeping fewer than two pairs,
/// from above; vacuous (1) until the mean clears 2.
pub fn leftover_event_prob_upper(delta: u64) -> f64 {
    leftover_event_log_prob_upper(delta).exp().min(1.0)
}

/// Natural log of the leftover tail bound; stays finite at degrees where
/// the probability itself underflows.
pub fn leftover_event_log_prob_upper(delta: u64) -> f64 {
    let mu = leftover_pair_mean_lower(delta);
    if mu <= 2.0 {
        return 0.0;
    }
    let t = mu - 2.0;
    2.0f64.ln() - t * t / (2.0 * leftover_increment_budget(delta))
}

/// Number of events a leftover event can depend on, plus itself.
pub fn leftover_dependency(delta: u64) -> f64 {
    (delta as f64).powi(4) + 1.0
}

/// Symmetric local lemma condition `e * p * (d + 1) <= 1`.
pub fn lll_check(prob: f64, dependency: f64) -> bool {
    lll_check_log(prob.ln(), dependency)
}

/// Log-space form `1 + ln p + ln(d + 1) <= 0`, usable when `p` underflows
/// or `d` overflows integer range.
pub fn lll_check_log(ln_prob: f64, dependency: f64) -> bool {
    1.0 + ln_prob + (dependency + 1.0).ln() <= 0.0
}

fn leftover_lll_holds(delta: u64) -> bool {
    leftover_pair_mean_lower(delta) > 2.0
        && lll_check_log(
            leftover_event_log_prob_upper(delta),
            leftover_dependency(delta),
        )
}

/// Smallest degree at which the leftover events pass the local lemma. The
/// condition's margin is convex in the degree, so the first crossing found
/// by doubling and bisecting is the only one.
pub fn leftover_lll_threshold() -> u64 {
    first_true(8, leftover_lll_holds)
}

/// Center of the special-vertex tail at this degree; positive once the
/// expected uncolored count clears its offset.
pub fn near_clique_tail_center(delta: u64) -> f64 {
    let d = delta as f64;
    let decay = (-0.8f64).exp();
    (decay - 0.2) * d - (1.0 + 2.4 * decay)
}

/// Tail probability of a special vertex keeping fewer than two uncolored
/// clique neighbors, from above; vacuous (1) while the center is negative.
pub fn near_clique_event_prob_upper(delta: u64) -> f64 {
    let t = near_clique_tail_center(delta);
    if t <= 0.0 {
        return 1.0;
    }
    azuma_tail(t, 0.8 * delta as f64)
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct NearCliqueReport {
    pub delta: u64,
    pub tail_center: f64,
    pub log_prob_upper: f64,
    pub prob_upper: f64,
    /// Bound beats `delta^-2`.
    pub beats_quadratic: bool,
    /// Bound beats `delta^-6`.
    pub beats_sextic: bool,
}

/// Compares the special-vertex tail against the two polynomial envelopes
/// used elsewhere, in log space so huge degrees do not underflow.
pub fn near_clique_exponent_report(delta: u64) -> NearCliqueReport {
    let t = near_clique_tail_center(delta);
    let log_prob = if t <= 0.0 {
        0.0
    } else {
        -t * t / (1.6 * delta as f64)
    };
    let log_delta = (delta as f64).ln();
    NearCliqueReport {
        delta,
        tail_center: t,
        log_prob_upper: log_prob,
        prob_upper: log_prob.exp().min(1.0),
        beats_quadratic: log_prob <= -2.0 * log_delta,
        beats_sextic: log_prob <= -6.0 * log_delta,
    }
}

/// Mean coefficient of the per-triple savings at fraction `k`, shaved by
/// `epsilon`.
pub fn triple_mean_coeff(k: f64, epsilon: f64) -> f64 {
    assert!(k > 0.0 && k < 1.0 / 3.0, "fraction must lie in (0, 1/3)");
    let shape = 0.6 - k;
    (1.0 - epsilon) * k * shape * shape * (1.0 - 3.0 * k) * (-5.0f64).exp()
}

/// Variance coefficient of the savings count at fraction `k`.
pub fn triple_variance_coeff(k: f64) -> f64 {
    let edge = 4.0 * k + 1.0;
    36.0 * k * k + 3.0 * k * edge * edge
}

fn clique_margin(delta: f64, mean_coeff: f64, var_coeff: f64) -> f64 {
    let gap = mean_coeff * delta - 2.0;
    gap * gap / (2.0 * var_coeff * delta) - 1.0 - (2.0 * (delta.powi(4) + 2.0)).ln()
}

/// Smallest degree where the clique-event tail beats its dependency count
/// at triple fraction `k`. The margin is convex in the degree and negative
/// just past the vertex `2 / mean_coeff`, where the search starts; below
/// the vertex the squared gap is spuriously large and must be ignored.
pub fn clique_event_delta_min(k: f64, epsilon: f64) -> u64 {
    let a = triple_mean_coeff(k, epsilon);
    let b = triple_variance_coeff(k);
    let start = (2.0 / a).ceil() as u64 + 1;
    first_true(start, |delta| clique_margin(delta as f64, a, b) >= 0.0)
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct TripleOptimum {
    pub k_star: f64,
    pub delta_min: u64,
}

/// Minimizes `clique_event_delta_min` over the admissible fractions
/// `(0, 1/9]` by iterated grid refinement.
pub fn optimize_triple_fraction(epsilon: f64, grid: usize) -> TripleOptimum {
    assert!(grid >= 8);
    let mut lo = 1e-4;
    let mut hi = 1.0 / 9.0;
    let mut best = (u64::MAX, lo);
    for _ in 0..6 {
        let step = (hi - lo) / grid as f64;
        best = (u64::MAX, lo);
        for i in 0..=grid {
            let k = lo + step * i as f64;
            let dm = clique_event_delta_min(k, epsilon);
            if dm < best.0 {
                best = (dm, k);
            }
        }
        lo = (best.1 - step).max(1e-5);
        hi = (best.1 + step).min(1.0 / 9.0);
    }
    TripleOptimum {
        k_star: best.1,
        delta_min: best.0,
    }
}

/// First `x >= start` satisfying a predicate that is false at `start` and
/// true from its sole crossing onward: doubling to bracket, then bisection.
fn first_true(start: u64, pred: impl Fn(u64) -> bool) -> u64 {
    if pred(start) {
        return start;
    }
    let mut lo = start;
    let mut hi = start.max(1) * 2;
    while !pred(hi) {
        lo = hi;
        hi = hi.checked_mul(2).expect("crossing within u64 range");
    }
    while lo + 1 < hi {
        let mid = lo + (hi - lo) / 2;
        if pred(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}
