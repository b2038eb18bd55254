//! Graph coloring with one color less than the maximum degree.
//!
//! The headline routine, [`color_graph`], peels low-degree vertices, splits
//! the dense remainder into near-disjoint cliques, draws a random partial
//! coloring which a resampling loop repairs until a greedy extension is
//! guaranteed to finish, and then reinserts the peeled vertices. Graphs the
//! guarantee does not reach are colored by a constructive degree-bound
//! routine instead, and the report says which path ran. Supporting modules
//! expose the individual stages, exact baselines for cross-checking, and
//! the numeric bounds behind the palette guarantee.

pub mod bounds;
pub mod brooks;
pub mod decompose;
pub mod dimacs;
pub mod events;
pub mod extend;
pub mod families;
pub mod graph;
pub mod oracle;
pub mod partial;
pub mod peel;
pub mod pipeline;
pub mod resample;
pub mod rng;

pub use graph::{verify_coloring, Coloring, Graph, GraphError, Verdict, VertexSet};
pub use pipeline::{
    color_graph, Mode, PipelineConfig, PipelineError, PipelineOutcome, PipelineReport,
};
