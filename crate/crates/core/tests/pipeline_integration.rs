//! End-to-end runs where every pipeline stage does real work.

use bkcolor::events::BadEvent;
use bkcolor::families;
use bkcolor::graph::Verdict;
use bkcolor::pipeline::{color_graph, Mode, PipelineConfig};

// Six cliques of 360 vertices matched in a ring: degree 361 everywhere but
// no clique of that size, so auto mode commits to the resample pipeline
// with a palette of 360.
#[test]
fn clique_ring_runs_every_stage() {
    let g = families::clique_ring(6, 360);
    assert_eq!(g.delta(), 361);

    let cfg = PipelineConfig {
        seed: 5,
        record_trace: true,
        ..PipelineConfig::default()
    };
    let out = color_graph(&g, &cfg).unwrap();

    assert_eq!(out.report.mode_used, Mode::Pipeline);
    assert_eq!(out.report.routing, "attempting resample pipeline");
    assert!(!out.report.fallback_taken);
    assert_eq!(out.report.verification, Verdict::Proper);
    assert_eq!(out.report.q, 360);
    assert_eq!(out.report.colors_used, 360);
    assert_eq!(out.report.num_events, 6);
    assert_eq!(out.report.resample_steps, 2);

    // seed 5 needs exactly two repairs, each redrawing the two-ball of one
    // clique: three consecutive cliques plus the matched vertices next out
    let trace = out.trace.unwrap();
    assert!(trace.terminated);
    assert_eq!(trace.steps.len(), 2);
    assert!(matches!(trace.steps[0].event, BadEvent::Clique(_)));
    assert!(trace.steps.iter().all(|s| s.resampled.len() == 5 * 360));
}

#[test]
fn sparse_graphs_peel_to_nothing_and_skip_resampling() {
    let g = families::gnp(12, 300, 0.02);
    let cfg = PipelineConfig {
        mode: Mode::Pipeline,
        seed: 12,
        ..PipelineConfig::default()
    };
    let out = color_graph(&g, &cfg).unwrap();
    assert_eq!(out.report.mode_used, Mode::Pipeline);
    assert!(!out.report.fallback_taken);
    assert_eq!(out.report.resample_steps, 0);
    assert_eq!(out.report.num_events, 0);
    assert_eq!(out.report.verification, Verdict::Proper);
    assert!(out.report.colors_used <= out.report.q);
}

#[test]
fn end_to_end_runs_are_reproducible() {
    let g = families::clique_ring(6, 360);
    let cfg = PipelineConfig {
        seed: 0,
        ..PipelineConfig::default()
    };
    let a = color_graph(&g, &cfg).unwrap();
    let b = color_graph(&g, &cfg).unwrap();
    assert_eq!(a.coloring.assignment(), b.coloring.assignment());
    assert_eq!(a.report.resample_steps, b.report.resample_steps);
    assert_eq!(a.report.colors_used, b.report.colors_used);
}
