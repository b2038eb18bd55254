//! Resampling loop: draw a full random coloring, delete conflicts, then
//! repeatedly redraw the variables of the first bad event still holding
//! until none does or the step cap is hit. Redraws are counter-based per
//! vertex, so resampling one event never disturbs colors outside its
//! variable set.

use crate::decompose::Partition;
use crate::events::{event_family, occurs, variables, BadEvent};
use crate::graph::{Coloring, Graph};
use crate::partial::{conflict_delete, PartialColoring};
use crate::rng::RandomSource;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub step: usize,
    pub event: BadEvent,
    pub resampled: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResampleTrace {
    /// Per-step records; empty unless recording was requested.
    pub steps: Vec<TraceStep>,
    /// False when the step cap was reached with an event still holding.
    pub terminated: bool,
    pub total_steps: usize,
}

#[derive(Clone, Debug)]
pub struct ResampleOutcome {
    pub coloring: PartialColoring,
    pub trace: ResampleTrace,
}

/// Runs the resampler against every event of the partition. The returned
/// coloring is always proper on its support; `trace.terminated` reports
/// honestly whether the event family was actually extinguished.
pub fn moser_tardos(
    g: &Graph,
    p: &Partition,
    q: usize,
    src: RandomSource,
    cap: usize,
    record_steps: bool,
) -> ResampleOutcome {
    let n = g.n();
    let mut total: Vec<usize> = (0..n).map(|v| src.color(v, 0, q)).collect();
    let mut rounds: Vec<u64> = vec![1; n];
    let mut current = derive(g, &total, q);

    let events = event_family(p);
    let mut steps = Vec::new();
    let mut total_steps = 0;
    let mut terminated = true;
    loop {
        let holding = events
            .iter()
            .find(|e| occurs(g, p, &current, e).expect("event family matches partition"));
        let Some(&event) = holding else { break };
        if total_steps == cap {
            terminated = false;
            break;
        }
        let vbl = variables(g, p, &event).expect("event family matches partition");
        for v in vbl.iter() {
            total[v] = src.color(v, rounds[v], q);
            rounds[v] += 1;
        }
        current = derive(g, &total, q);
        total_steps += 1;
        if record_steps {
            steps.push(TraceStep {
                step: total_steps,
                event,
                resampled: vbl.iter().collect(),
            });
        }
    }

    ResampleOutcome {
        coloring: current,
        trace: ResampleTrace {
            steps,
            terminated,
            total_steps,
        },
    }
}

fn derive(g: &Graph, total: &[usize], q: usize) -> PartialColoring {
    let coloring = Coloring::new(total.to_vec(), q).expect("draws stay inside the palette");
    conflict_delete(g, &coloring)
}

/// Expected total resamples when every event is resampled at most `1/d`
/// times in expectation: `num_events / d`.
pub fn expected_resample_bound(num_events: usize, dependency_degree: f64) -> f64 {
    assert!(dependency_degree >= 1.0);
    num_events as f64 / dependency_degree
}

/// Step cap: ten times the expected-resample bound, rounded up, never below
/// ten. The dependency degree is estimated as `3 * delta^5` capped by
/// `num_events - 1`.
pub fn default_resample_cap(g: &Graph, num_events: usize) -> usize {
    let delta = g.delta() as f64;
    let d_est = (3.0 * delta.powi(5)).min(num_events.saturating_sub(1).max(1) as f64);
    let d_est = d_est.max(1.0);
    10 * (((num_events as f64 / d_est).ceil() as usize).max(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::{DecompositionParams, Partition};
    use crate::families;
    use crate::graph::VertexSet;
    use crate::partial::is_proper_on_support;

    fn leftover_only(g: &Graph, vertices: Vec<usize>) -> Partition {
        Partition {
            dense_sets: Vec::new(),
            leftover: VertexSet::from_unsorted(vertices),
            params: DecompositionParams::default_for(g.delta()),
        }
    }

    #[test]
    fn empty_event_family_stops_immediately() {
        let g = families::complete(6);
        let p = leftover_only(&g, Vec::new());
        let out = moser_tardos(&g, &p, 5, RandomSource { seed: 1 }, 50, true);
        assert!(out.trace.terminated);
        assert_eq!(out.trace.total_steps, 0);
        assert!(out.trace.steps.is_empty());
        assert!(is_proper_on_support(&g, &out.coloring));
    }

    #[test]
    fn star_center_event_is_extinguished() {
        // center of a 9-leaf star wants two colors repeated among its
        // leaves; seed pinned to a run that terminates
        let g = families::star(9);
        let p = leftover_only(&g, vec![0]);
        let src = RandomSource { seed: 3 };
        let out = moser_tardos(&g, &p, 3, src, 200, true);
        assert!(out.trace.terminated);
        assert!(is_proper_on_support(&g, &out.coloring));
        assert_eq!(
            occurs(&g, &p, &out.coloring, &BadEvent::Leftover(0)),
            Ok(false)
        );
        assert_eq!(out.trace.steps.len(), out.trace.total_steps);
    }

    #[test]
    fn unsatisfiable_events_hit_the_cap_honestly() {
        // in a complete graph no leftover vertex can ever see a repeated
        // color, so the resampler must give up at the cap
        let g = families::complete(6);
        let p = leftover_only(&g, (0..6).collect());
        let out = moser_tardos(&g, &p, 5, RandomSource { seed: 7 }, 17, false);
        assert!(!out.trace.terminated);
        assert_eq!(out.trace.total_steps, 17);
        assert!(out.trace.steps.is_empty());
        assert!(is_proper_on_support(&g, &out.coloring));
    }

    #[test]
    fn same_seed_reruns_identically() {
        let g = families::star(9);
        let p = leftover_only(&g, vec![0]);
        let a = moser_tardos(&g, &p, 3, RandomSource { seed: 11 }, 60, true);
        let b = moser_tardos(&g, &p, 3, RandomSource { seed: 11 }, 60, true);
        assert_eq!(a.coloring.assignment(), b.coloring.assignment());
        assert_eq!(a.trace, b.trace);
    }

    #[test]
    fn resample_touches_only_event_variables() {
        // two stars joined at nothing: resampling the first star's center
        // event must never redraw the second component
        let g = families::disjoint_union(&[families::star(9), families::star(9)]);
        let p = leftover_only(&g, vec![0]);
        let src = RandomSource { seed: 3 };
        let out = moser_tardos(&g, &p, 3, src, 200, true);
        for step in &out.trace.steps {
            assert!(step.resampled.iter().all(|&v| v < 10));
        }
        // second component keeps its round-0 draws wherever supported
        for v in 10..20 {
            if let Some(c) = out.coloring.color(v) {
                assert_eq!(c, src.color(v, 0, 3));
            }
        }
    }

    #[test]
    fn bound_and_cap_formulas() {
        assert_eq!(expected_resample_bound(100, 50.0), 2.0);
        assert_eq!(expected_resample_bound(4, 1.0e9), 4.0e-9);

        // four events, tiny dependency estimate: 10 * ceil(4 / 3)
        let g = families::complete(6);
        assert_eq!(default_resample_cap(&g, 4), 20);
        assert_eq!(default_resample_cap(&g, 0), 10);
        assert_eq!(default_resample_cap(&g, 1), 10);
        // path: delta = 2, 3 * 2^5 = 96 < 999
        let path = families::path(1000);
        assert_eq!(default_resample_cap(&path, 1000), 110);
    }
}
