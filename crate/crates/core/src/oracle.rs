//! Exact reference oracles for small graphs.
//!
//! Both oracles are branch-and-bound searches meant for cross-checking the
//! main algorithms, not for production-size inputs; they refuse graphs above
//! their size cutoff instead of silently running forever.

use crate::graph::{Coloring, Graph};
use thiserror::Error;

pub const DEFAULT_CHROMATIC_CUTOFF: usize = 40;
pub const DEFAULT_CLIQUE_CUTOFF: usize = 60;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {n} vertices, oracle cutoff is {max_n}")]
    TooLarge { n: usize, max_n: usize },
    #[error("chromatic number exceeds palette limit {limit}")]
    PaletteExceeded { limit: usize },
}

#[derive(Clone, Debug)]
pub struct ChromaticResult {
    pub chi: usize,
    pub witness: Coloring,
}

/// Exact chromatic number with a witness coloring, for graphs up to the
/// default cutoff. `limit` bounds the palette: if `chi > limit` the search
/// reports failure instead of a number.
pub fn brute_force_chromatic(g: &Graph, limit: usize) -> Result<ChromaticResult, OracleError> {
    brute_force_chromatic_with_cutoff(g, limit, DEFAULT_CHROMATIC_CUTOFF)
}

pub fn brute_force_chromatic_with_cutoff(
    g: &Graph,
    limit: usize,
    max_n: usize,
) -> Result<ChromaticResult, OracleError> {
    let n = g.n();
    if n > max_n {
        return Err(OracleError::TooLarge { n, max_n });
    }
    if n == 0 {
        return Ok(ChromaticResult {
            chi: 0,
            witness: Coloring::new(vec![], 0).expect("empty coloring"),
        });
    }
    let (ub, greedy) = dsatur_greedy(g);
    let lb = greedy_clique_lower_bound(g).max(1);
    let mut best = (ub, greedy);
    // saturation-ordered backtracking closes the gap from below
    let mut k = lb;
    while k < best.0 {
        if k > limit {
            return Err(OracleError::PaletteExceeded { limit });
        }
        match k_colorable(g, k) {
            Some(assignment) => {
                best = (k, assignment);
                break;
            }
            None => k += 1,
        }
    }
    let (chi, assignment) = best;
    if chi > limit {
        return Err(OracleError::PaletteExceeded { limit });
    }
    let witness = Coloring::new(assignment, chi).expect("witness colors fit palette");
    Ok(ChromaticResult { chi, witness })
}

/// Exact clique number for graphs up to the default cutoff.
pub fn clique_number_exact(g: &Graph) -> Result<usize, OracleError> {
    clique_number_exact_with_cutoff(g, DEFAULT_CLIQUE_CUTOFF)
}

pub fn clique_number_exact_with_cutoff(g: &Graph, max_n: usize) -> Result<usize, OracleError> {
    let n = g.n();
    if n > max_n {
        return Err(OracleError::TooLarge { n, max_n });
    }
    if n == 0 {
        return Ok(0);
    }
    let mut best = greedy_clique_lower_bound(g);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    expand_clique(g, 0, &order, &mut best);
    Ok(best)
}

/// Cheap clique lower bound: grow greedily (ascending id) inside the closed
/// neighborhoods of a few highest-degree seeds.
pub fn greedy_clique_lower_bound(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let mut seeds: Vec<usize> = (0..n).collect();
    seeds.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    seeds.truncate(8);
    let mut best = 1;
    for seed in seeds {
        let mut clique = vec![seed];
        for &u in g.neighbors(seed) {
            if clique.iter().all(|&w| g.has_edge(u, w)) {
                clique.push(u);
            }
        }
        best = best.max(clique.len());
    }
    best
}

/// Branch and bound on cliques: candidates are greedily colored and a branch
/// is cut when `depth + color classes <= best`.
fn expand_clique(g: &Graph, depth: usize, candidates: &[usize], best: &mut usize) {
    if candidates.is_empty() {
        *best = (*best).max(depth);
        return;
    }
    // greedy coloring of the candidate set; class index bounds the largest
    // clique extending through that vertex
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![0usize; candidates.len()];
    for (idx, &v) in candidates.iter().enumerate() {
        let mut placed = false;
        for (ci, class) in classes.iter_mut().enumerate() {
            if class.iter().all(|&w| !g.has_edge(v, w)) {
                class.push(v);
                class_of[idx] = ci + 1;
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push(vec![v]);
            class_of[idx] = classes.len();
        }
    }
    let mut ordered: Vec<(usize, usize)> = candidates
        .iter()
        .copied()
        .zip(class_of.iter().copied())
        .collect();
    ordered.sort_by_key(|&(_, c)| c);
    let mut pool: Vec<usize> = ordered.iter().map(|&(v, _)| v).collect();
    for i in (0..ordered.len()).rev() {
        let (v, bound) = ordered[i];
        if depth + bound <= *best {
            return;
        }
        pool.truncate(i);
        let next: Vec<usize> = pool.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        if depth + 1 + next.len() > *best {
            if next.is_empty() {
                *best = (*best).max(depth + 1);
            } else {
                expand_clique(g, depth + 1, &next, best);
            }
        }
    }
}

/// Saturation-first greedy coloring; returns (colors used, assignment).
fn dsatur_greedy(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.n();
    let mut colors = vec![0usize; n];
    let mut used = 0;
    for _ in 0..n {
        let v = pick_most_saturated(g, &colors).expect("uncolored vertex remains");
        let c = smallest_free_color(g, &colors, v, usize::MAX).expect("unbounded palette");
        colors[v] = c;
        used = used.max(c);
    }
    (used, colors)
}

fn pick_most_saturated(g: &Graph, colors: &[usize]) -> Option<usize> {
    let mut best: Option<(usize, usize, usize)> = None; // (sat, degree, v) maximized
    for v in 0..g.n() {
        if colors[v] != 0 {
            continue;
        }
        let mut seen = std::collections::BTreeSet::new();
        for &u in g.neighbors(v) {
            if colors[u] != 0 {
                seen.insert(colors[u]);
            }
        }
        let key = (seen.len(), g.degree(v), usize::MAX - v);
        if best.is_none_or(|b| key > b) {
            best = Some(key);
        }
    }
    best.map(|(_, _, iv)| usize::MAX - iv)
}

fn smallest_free_color(g: &Graph, colors: &[usize], v: usize, cap: usize) -> Option<usize> {
    let mut taken: Vec<usize> = g
        .neighbors(v)
        .iter()
        .map(|&u| colors[u])
        .filter(|&c| c != 0)
        .collect();
    taken.sort_unstable();
    taken.dedup();
    let mut c = 1;
    for t in taken {
        if t > c {
            break;
        }
        if t == c {
            c += 1;
        }
    }
    (c <= cap).then_some(c)
}

fn k_colorable(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let mut colors = vec![0usize; g.n()];
    if color_rest(g, k, &mut colors, 0) {
        Some(colors)
    } else {
        None
    }
}

fn color_rest(g: &Graph, k: usize, colors: &mut [usize], max_used: usize) -> bool {
    let Some(v) = pick_most_saturated(g, colors) else {
        return true;
    };
    let mut forbidden = vec![false; k + 1];
    for &u in g.neighbors(v) {
        if colors[u] != 0 {
            forbidden[colors[u]] = true;
        }
    }
    // a fresh color beyond max_used+1 is symmetric to max_used+1
    let ceiling = k.min(max_used + 1);
    for c in (1..=ceiling).filter(|&c| !forbidden[c]) {
        colors[v] = c;
        if color_rest(g, k, colors, max_used.max(c)) {
            return true;
        }
        colors[v] = 0;
    }
    false
}
