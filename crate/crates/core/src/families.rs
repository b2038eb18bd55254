//! Deterministic graph constructors used by tests, benchmarks, and the
//! command line's built-in instances.

use crate::graph::Graph;
use crate::rng::RandomSource;

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).expect("complete graph edges are in range")
}

/// Path 0 - 1 - ... - (n-1).
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).expect("path edges are in range")
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices, got {n}");
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((0, n - 1));
    Graph::from_edges(n, &edges).expect("cycle edges are in range")
}

/// Star with center 0 and leaves 1..=`leaves`.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_edges(leaves + 1, &edges).expect("star edges are in range")
}

/// Complete bipartite graph with sides 0..a and a..a+b.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..(a + b) {
            edges.push((u, v));
        }
    }
    Graph::from_edges(a + b, &edges).expect("bipartite edges are in range")
}

/// The Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10, spokes
/// between them.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).expect("petersen edges are in range")
}

/// Erdos-Renyi sample: each pair becomes an edge with probability `p`,
/// decided by a hash of the pair, so the same seed always yields the same
/// graph.
pub fn gnp(seed: u64, n: usize, p: f64) -> Graph {
    let src = RandomSource { seed };
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if src.unit(u as u64, v as u64) < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("sampled pairs are in range")
}

/// Resamples [`gnp`] with derived seeds until the graph is connected.
pub fn gnp_connected(seed: u64, n: usize, p: f64) -> Graph {
    for attempt in 0u64..10_000 {
        let g = gnp(
            seed.wrapping_add(attempt.wrapping_mul(0x9e37_79b9_7f4a_7c15)),
            n,
            p,
        );
        if g.is_connected() {
            return g;
        }
    }
    panic!("no connected sample among 10000 attempts at n = {n}, p = {p}");
}

/// Places the given graphs side by side with shifted vertex ids and no
/// edges between them.
pub fn disjoint_union(parts: &[Graph]) -> Graph {
    let n = parts.iter().map(Graph::n).sum();
    let mut edges = Vec::new();
    let mut offset = 0;
    for g in parts {
        edges.extend(g.edges().map(|(u, v)| (u + offset, v + offset)));
        offset += g.n();
    }
    Graph::from_edges(n, &edges).expect("shifted edges are in range")
}

/// Two complete graphs on five vertices sharing the pair {3, 4}; eight
/// vertices in all.
pub fn two_overlapping_k5() -> Graph {
    let mut edges = Vec::new();
    for block in [[0, 1, 2, 3, 4], [3, 4, 5, 6, 7]] {
        for i in 0..5 {
            for j in (i + 1)..5 {
                let (u, v) = (block[i], block[j]);
                if !edges.contains(&(u, v)) {
                    edges.push((u, v));
                }
            }
        }
    }
    Graph::from_edges(8, &edges).expect("overlap edges are in range")
}

/// Ring of `num_cliques >= 4` complete graphs of the given size, with a
/// perfect matching by index between consecutive cliques. Every vertex has
/// degree `size + 1` while the largest clique stays at `size`, so the
/// resample pipeline applies with a palette of `size` colors.
pub fn clique_ring(num_cliques: usize, size: usize) -> Graph {
    assert!(
        num_cliques >= 4,
        "ring needs at least 4 cliques, got {num_cliques}"
    );
    assert!(size >= 2, "cliques need at least 2 vertices, got {size}");
    let base = |i: usize| i * size;
    let mut edges = Vec::new();
    for i in 0..num_cliques {
        for a in 0..size {
            for b in (a + 1)..size {
                edges.push((base(i) + a, base(i) + b));
            }
        }
        let next = (i + 1) % num_cliques;
        for j in 0..size {
            edges.push((base(i) + j, base(next) + j));
        }
    }
    Graph::from_edges(num_cliques * size, &edges).expect("ring edges are in range")
}
