//! Low-degree peeling: vertices below a degree threshold are set aside on a
//! stack (smallest id first), leaving a core where every vertex has at
//! least `threshold` surviving neighbors. After the core is colored the
//! stack unwinds greedily; each reinserted vertex sees fewer than
//! `threshold` colored neighbors, so `threshold` colors always suffice.

use crate::graph::{Coloring, Graph};
use std::collections::BTreeSet;

#[derive(Clone, Debug)]
pub struct PeelResult {
    pub core: Graph,
    /// Core vertex id to original id.
    pub core_to_orig: Vec<usize>,
    /// Peeled original ids, in removal order.
    pub stack: Vec<usize>,
}

pub fn peel_low_degree(g: &Graph, threshold: usize) -> PeelResult {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut ready: BTreeSet<usize> = (0..n).filter(|&v| degree[v] < threshold).collect();
    let mut stack = Vec::new();
    while let Some(&v) = ready.iter().next() {
        ready.remove(&v);
        removed[v] = true;
        stack.push(v);
        for &u in g.neighbors(v) {
            if !removed[u] {
                degree[u] -= 1;
                if degree[u] < threshold {
                    ready.insert(u);
                }
            }
        }
    }
    let survivors: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    let (core, core_to_orig) = g.induced(&survivors);
    PeelResult {
        core,
        core_to_orig,
        stack,
    }
}

/// Lifts a full coloring of the core back to the whole graph, unwinding the
/// peel stack with the smallest free color.
///
/// Panics if some reinserted vertex has no free color; that cannot happen
/// when `q` is at least the peel threshold.
pub fn reinsert_and_color(
    g: &Graph,
    peel: &PeelResult,
    core_coloring: &Coloring,
    q: usize,
) -> Coloring {
    assert_eq!(core_coloring.len(), peel.core.n());
    let mut assignment = vec![0usize; g.n()];
    for (i, &orig) in peel.core_to_orig.iter().enumerate() {
        assignment[orig] = core_coloring.color(i);
    }
    for &v in peel.stack.iter().rev() {
        let mut worn: Vec<usize> = g.neighbors(v).iter().map(|&u| assignment[u]).collect();
        worn.sort_unstable();
        let mut c = 1;
        for w in worn {
            if w == c {
                c += 1;
            }
        }
        assert!(
            c <= q,
            "no free color for reinserted vertex {v}: {c} exceeds palette {q}"
        );
        assignment[v] = c;
    }
    Coloring::new(assignment, q.max(core_coloring.q())).expect("reinsertion stays in palette")
}
