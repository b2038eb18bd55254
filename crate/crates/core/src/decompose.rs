//! Dense-set decomposition: vertices whose neighborhoods are close to
//! cliques are grouped into large disjoint cliques, optionally with one
//! attached near-clique vertex each; everything else is leftover.
//!
//! The builder is deterministic: scans run in ascending id order and all
//! threshold comparisons use exact integer arithmetic, so identical inputs
//! produce byte-identical partitions.

use crate::graph::{Graph, VertexSet};
use serde::{Deserialize, Serialize};

/// Exact rational threshold, `num/den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub const fn new(num: u64, den: u64) -> Self {
        assert!(den > 0);
        Ratio { num, den }
    }

    /// `ceil(self * total)`.
    pub fn ceil_of(self, total: usize) -> usize {
        let prod = self.num * total as u64;
        (prod.div_ceil(self.den)) as usize
    }

    /// `floor(self * total)`.
    pub fn floor_of(self, total: usize) -> usize {
        (self.num * total as u64 / self.den) as usize
    }

    pub fn as_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

/// Knobs for the decomposition. `density_threshold` is an absolute count of
/// non-adjacent pairs; the two ratios scale with clique size and maximum
/// degree respectively.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionParams {
    pub density_threshold: usize,
    pub near_clique_ratio: Ratio,
    pub min_clique_fraction: Ratio,
}

impl DecompositionParams {
    /// Defaults scale with the maximum degree: a vertex is dense when its
    /// neighborhood has fewer than `delta^2/50 - delta/10` non-adjacent
    /// pairs (floored, never negative), and a clique is kept only at 4/5 of
    /// the maximum degree.
    pub fn default_for(delta: usize) -> Self {
        let d = delta as u64;
        let density_threshold = if d * d > 5 * d {
            (d * d - 5 * d) / 50
        } else {
            0
        };
        DecompositionParams {
            density_threshold: density_threshold as usize,
            near_clique_ratio: Ratio::new(4, 5),
            min_clique_fraction: Ratio::new(4, 5),
        }
    }
}

/// One clique of the decomposition plus its optional near-clique vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DenseSet {
    pub clique: VertexSet,
    pub special: Option<usize>,
}

impl DenseSet {
    /// Clique members plus the special vertex, ascending.
    pub fn members(&self) -> VertexSet {
        match self.special {
            None => self.clique.clone(),
            Some(s) => {
                let mut v: Vec<usize> = self.clique.iter().collect();
                v.push(s);
                VertexSet::from_unsorted(v)
            }
        }
    }

    pub fn is_near_clique(&self) -> bool {
        self.special.is_some()
    }
}

/// Disjoint dense sets plus the leftover vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    pub dense_sets: Vec<DenseSet>,
    pub leftover: VertexSet,
    pub params: DecompositionParams,
}

impl Partition {
    pub fn trivial(g: &Graph, params: DecompositionParams) -> Self {
        Partition {
            dense_sets: Vec::new(),
            leftover: (0..g.n()).collect(),
            params,
        }
    }
}

/// Vertices whose neighborhoods have strictly fewer non-adjacent pairs than
/// the threshold.
pub fn find_dense_vertices(g: &Graph, params: &DecompositionParams) -> VertexSet {
    (0..g.n())
        .filter(|&v| g.nonedge_pairs_in_neighborhood(v) < params.density_threshold)
        .collect()
}

/// Greedy decomposition. Dense vertices are scanned in ascending id order;
/// each unclaimed one seeds a maximal clique grown through its unclaimed
/// neighbors (ascending), kept only if it reaches `min_clique_fraction` of
/// the maximum degree. Afterwards each kept clique may attach one special
/// vertex: the smallest unclaimed id with at least `near_clique_ratio` of
/// the clique as neighbors.
pub fn build_partition(g: &Graph, params: &DecompositionParams) -> Partition {
    let n = g.n();
    let delta = g.delta();
    let mut assigned = vec![false; n];
    let mut dense_sets: Vec<DenseSet> = Vec::new();

    let min_size = params.min_clique_fraction.ceil_of(delta);
    for seed in find_dense_vertices(g, params).iter() {
        if assigned[seed] {
            continue;
        }
        let mut clique = vec![seed];
        for &u in g.neighbors(seed) {
            if !assigned[u] && clique.iter().all(|&w| g.has_edge(u, w)) {
                clique.push(u);
            }
        }
        if clique.len() >= min_size && !clique.is_empty() {
            for &v in &clique {
                assigned[v] = true;
            }
            dense_sets.push(DenseSet {
                clique: VertexSet::from_unsorted(clique),
                special: None,
            });
        }
    }

    for ds in dense_sets.iter_mut() {
        let need = params.near_clique_ratio.ceil_of(ds.clique.len());
        let candidate = (0..n).find(|&u| {
            !assigned[u] && {
                let inside = g
                    .neighbors(u)
                    .iter()
                    .filter(|&&w| ds.clique.contains(w))
                    .count();
                inside >= need
            }
        });
        if let Some(u) = candidate {
            assigned[u] = true;
            ds.special = Some(u);
        }
    }

    let leftover = (0..n).filter(|&v| !assigned[v]).collect();
    Partition {
        dense_sets,
        leftover,
        params: *params,
    }
}

/// Structural statement violated by a partition. Diagnostics only — the
/// pipeline never aborts on findings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum AuditFinding {
    /// Two cliques of size `delta - 1` intersect at all.
    MaxCliquesShareVertices {
        a: usize,
        b: usize,
        shared: Vec<usize>,
    },
    /// Intersecting cliques where the smaller keeps more than one private
    /// vertex.
    OverlapLeavesTwo {
        smaller: usize,
        larger: usize,
        private: usize,
    },
    /// One clique intersecting two or more others.
    TouchesSeveral { index: usize, touches: Vec<usize> },
    /// Outside vertex with too many neighbors in a near-maximum clique
    /// (cap 4 at size `delta - 1`, cap 5 at size `delta - 2`).
    ExternalDegreeHigh {
        clique: usize,
        vertex: usize,
        neighbors_inside: usize,
        cap: usize,
    },
    /// A clique member with two or more outside neighbors that each see
    /// more than `p + 3` clique vertices, `p` the clique's defect.
    CrowdedOutsideNeighbors {
        clique: usize,
        member: usize,
        heavy: Vec<usize>,
        cap: usize,
    },
}

/// Checks the structural statements a decomposition of a high-degree graph
/// is supposed to satisfy, on any partition (including hand-built ones).
pub fn audit_partition(g: &Graph, p: &Partition) -> Vec<AuditFinding> {
    let delta = g.delta();
    let mut findings = Vec::new();
    let cliques: Vec<&VertexSet> = p.dense_sets.iter().map(|d| &d.clique).collect();

    let mut touches: Vec<Vec<usize>> = vec![Vec::new(); cliques.len()];
    for i in 0..cliques.len() {
        for j in (i + 1)..cliques.len() {
            let shared: Vec<usize> = cliques[i]
                .iter()
                .filter(|&v| cliques[j].contains(v))
                .collect();
            if shared.is_empty() {
                continue;
            }
            touches[i].push(j);
            touches[j].push(i);
            if delta >= 1 && cliques[i].len() == delta - 1 && cliques[j].len() == delta - 1 {
                findings.push(AuditFinding::MaxCliquesShareVertices { a: i, b: j, shared });
            }
            let (smaller, larger) = if cliques[i].len() <= cliques[j].len() {
                (i, j)
            } else {
                (j, i)
            };
            let private = cliques[smaller]
                .iter()
                .filter(|&v| !cliques[larger].contains(v))
                .count();
            if private > 1 {
                findings.push(AuditFinding::OverlapLeavesTwo {
                    smaller,
                    larger,
                    private,
                });
            }
        }
    }
    for (index, t) in touches.into_iter().enumerate() {
        if t.len() >= 2 {
            findings.push(AuditFinding::TouchesSeveral { index, touches: t });
        }
    }

    for (ci, clique) in cliques.iter().enumerate() {
        let cap = if delta >= 1 && clique.len() == delta - 1 {
            Some(4)
        } else if delta >= 2 && clique.len() == delta - 2 {
            Some(5)
        } else {
            None
        };
        if let Some(cap) = cap {
            for v in 0..g.n() {
                if clique.contains(v) {
                    continue;
                }
                let inside = g
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| clique.contains(w))
                    .count();
                if inside > cap {
                    findings.push(AuditFinding::ExternalDegreeHigh {
                        clique: ci,
                        vertex: v,
                        neighbors_inside: inside,
                        cap,
                    });
                }
            }
        }

        // members may keep at most one heavy outside neighbor
        let defect = delta.saturating_sub(clique.len());
        let heavy_cap = defect + 3;
        for member in clique.iter() {
            let heavy: Vec<usize> = g
                .neighbors(member)
                .iter()
                .copied()
                .filter(|&u| !clique.contains(u))
                .filter(|&u| {
                    g.neighbors(u)
                        .iter()
                        .filter(|&&w| clique.contains(w))
                        .count()
                        > heavy_cap
                })
                .collect();
            if heavy.len() > 1 {
                findings.push(AuditFinding::CrowdedOutsideNeighbors {
                    clique: ci,
                    member,
                    heavy,
                    cap: heavy_cap,
                });
            }
        }
    }

    findings
}

/// One anchored triple: a clique vertex plus two of its outside neighbors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triple {
    pub anchor: usize,
    pub outer: (usize, usize),
}

/// Pairwise vertex-disjoint triples harvested around one clique.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleFamily {
    pub clique_index: usize,
    pub triples: Vec<Triple>,
}

/// Greedy family of disjoint triples around clique `index`: each anchor is a
/// clique member scanned ascending, each outer pair the lexicographically
/// first pair of its outside neighbors that have at most `defect + 3`
/// neighbors inside the clique. At most `floor(k * delta)` triples are kept;
/// `k` must lie in `(0, 1/9]`.
pub fn find_triples(g: &Graph, p: &Partition, index: usize, k: Ratio) -> TripleFamily {
    assert!(k.num >= 1 && k.num * 9 <= k.den, "k must lie in (0, 1/9]");
    let clique = &p.dense_sets[index].clique;
    let delta = g.delta();
    let cap = k.floor_of(delta);
    let defect_cap = delta.saturating_sub(clique.len()) + 3;

    let mut used = vec![false; g.n()];
    let mut triples = Vec::new();
    for anchor in clique.iter() {
        if triples.len() >= cap {
            break;
        }
        if used[anchor] {
            continue;
        }
        let outside: Vec<usize> = g
            .neighbors(anchor)
            .iter()
            .copied()
            .filter(|&u| !clique.contains(u) && !used[u])
            .filter(|&u| {
                g.neighbors(u)
                    .iter()
                    .filter(|&&w| clique.contains(w))
                    .count()
                    <= defect_cap
            })
            .collect();
        if let [a, b, ..] = outside[..] {
            used[anchor] = true;
            used[a] = true;
            used[b] = true;
            triples.push(Triple {
                anchor,
                outer: (a, b),
            });
        }
    }
    TripleFamily {
        clique_index: index,
        triples,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn default_thresholds() {
        assert_eq!(DecompositionParams::default_for(100).density_threshold, 190);
        assert_eq!(DecompositionParams::default_for(5).density_threshold, 0);
        assert_eq!(
            DecompositionParams::default_for(1000).density_threshold,
            19900
        );
        assert_eq!(DecompositionParams::default_for(0).density_threshold, 0);
    }

    #[test]
    fn ratio_arithmetic_is_exact() {
        let r = Ratio::new(4, 5);
        assert_eq!(r.ceil_of(10), 8);
        assert_eq!(r.ceil_of(11), 9);
        assert_eq!(r.floor_of(11), 8);
        assert_eq!(Ratio::new(1, 9).floor_of(72), 8);
    }

    #[test]
    fn complete_graph_vertices_are_dense_cycle_vertices_are_not() {
        let k6 = families::complete(6);
        let mut params = DecompositionParams::default_for(k6.delta());
        params.density_threshold = 1;
        assert_eq!(find_dense_vertices(&k6, &params).len(), 6);

        let c5 = families::cycle(5);
        let mut params = DecompositionParams::default_for(c5.delta());
        params.density_threshold = 1;
        assert!(find_dense_vertices(&c5, &params).is_empty());

        let petersen = families::petersen();
        let mut params = DecompositionParams::default_for(petersen.delta());
        params.density_threshold = 3;
        assert!(find_dense_vertices(&petersen, &params).is_empty());
    }

    #[test]
    fn two_complete_components_become_two_dense_sets() {
        let g = families::disjoint_union(&[families::complete(6), families::complete(6)]);
        let params = DecompositionParams {
            density_threshold: 1,
            near_clique_ratio: Ratio::new(4, 5),
            min_clique_fraction: Ratio::new(4, 5),
        };
        let p = build_partition(&g, &params);
        assert_eq!(p.dense_sets.len(), 2);
        assert!(p.leftover.is_empty());
        assert!(p
            .dense_sets
            .iter()
            .all(|d| d.clique.len() == 6 && d.special.is_none()));
        assert!(audit_partition(&g, &p).is_empty());
    }

    #[test]
    fn sparse_graphs_fall_entirely_into_leftover() {
        let c5 = families::cycle(5);
        let p = build_partition(&c5, &DecompositionParams::default_for(c5.delta()));
        assert!(p.dense_sets.is_empty());
        assert_eq!(p.leftover.len(), 5);
        assert!(audit_partition(&c5, &p).is_empty());

        let empty = families::complete(0);
        let p = build_partition(&empty, &DecompositionParams::default_for(0));
        assert!(p.dense_sets.is_empty());
        assert!(p.leftover.is_empty());
    }

    #[test]
    fn partition_covers_and_respects_invariants() {
        for seed in 0..20 {
            let g = families::gnp(seed, 40, 0.4);
            let mut params = DecompositionParams::default_for(g.delta());
            params.density_threshold = 2;
            params.min_clique_fraction = Ratio::new(1, 4);
            let p = build_partition(&g, &params);
            let mut seen = vec![0usize; g.n()];
            for ds in &p.dense_sets {
                assert!(g.is_clique(&ds.clique));
                for v in ds.clique.iter() {
                    seen[v] += 1;
                }
                if let Some(s) = ds.special {
                    assert!(!ds.clique.contains(s));
                    seen[s] += 1;
                    let inside = g
                        .neighbors(s)
                        .iter()
                        .filter(|&&w| ds.clique.contains(w))
                        .count();
                    assert!(inside >= params.near_clique_ratio.ceil_of(ds.clique.len()));
                }
            }
            for v in p.leftover.iter() {
                seen[v] += 1;
            }
            assert!(seen.iter().all(|&c| c == 1), "not a partition of V");
        }
    }

    #[test]
    fn special_attachment_found() {
        // K5 plus a vertex adjacent to four of it: the clique is accepted
        // first, then the outsider qualifies as its special vertex
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in (u + 1)..5 {
                edges.push((u, v));
            }
        }
        for v in 0..4 {
            edges.push((v, 5));
        }
        let g = Graph::from_edges(6, &edges).unwrap();
        let params = DecompositionParams {
            density_threshold: 4,
            near_clique_ratio: Ratio::new(4, 5),
            min_clique_fraction: Ratio::new(4, 5),
        };
        let p = build_partition(&g, &params);
        assert_eq!(p.dense_sets.len(), 1);
        assert_eq!(p.dense_sets[0].clique.len(), 5);
        assert_eq!(p.dense_sets[0].special, Some(5));
        assert!(p.leftover.is_empty());
    }

    #[test]
    fn audit_flags_overlapping_cliques() {
        let g = families::two_overlapping_k5();
        // hand-built partition: both K5s listed as cliques despite sharing
        // an edge; builders never emit this, fixtures can
        let p = Partition {
            dense_sets: vec![
                DenseSet {
                    clique: VertexSet::from_sorted(vec![0, 1, 2, 3, 4]),
                    special: None,
                },
                DenseSet {
                    clique: VertexSet::from_sorted(vec![3, 4, 5, 6, 7]),
                    special: None,
                },
            ],
            leftover: VertexSet::new(),
            params: DecompositionParams::default_for(g.delta()),
        };
        let findings = audit_partition(&g, &p);
        assert!(findings
            .iter()
            .any(|f| matches!(f, AuditFinding::OverlapLeavesTwo { private: 3, .. })));
    }

    #[test]
    fn audit_flags_heavy_external_vertex() {
        // K7 whose first five members also see an outside vertex, plus a
        // star pumping the maximum degree to 8 so the K7 has size delta - 1
        let mut edges = Vec::new();
        for u in 0..7 {
            for v in (u + 1)..7 {
                edges.push((u, v));
            }
        }
        for v in 0..5 {
            edges.push((v, 7));
        }
        for leaf in 9..17 {
            edges.push((8, leaf));
        }
        let g = Graph::from_edges(17, &edges).unwrap();
        assert_eq!(g.delta(), 8);
        let params = DecompositionParams {
            density_threshold: 20,
            near_clique_ratio: Ratio::new(9, 10),
            min_clique_fraction: Ratio::new(1, 2),
        };
        let p = build_partition(&g, &params);
        assert!(p.dense_sets.iter().any(|d| d.clique.len() == 7));
        let findings = audit_partition(&g, &p);
        assert!(findings.iter().any(|f| matches!(
            f,
            AuditFinding::ExternalDegreeHigh {
                vertex: 7,
                neighbors_inside: 5,
                cap: 4,
                ..
            }
        )));
    }

    #[test]
    fn isolated_clique_yields_no_triples() {
        let g = families::complete(6);
        let params = DecompositionParams {
            density_threshold: 1,
            near_clique_ratio: Ratio::new(4, 5),
            min_clique_fraction: Ratio::new(4, 5),
        };
        let p = build_partition(&g, &params);
        let fam = find_triples(&g, &p, 0, Ratio::new(1, 9));
        assert!(fam.triples.is_empty());
    }

    #[test]
    fn triple_cap_of_zero_yields_nothing() {
        let (g, p) = anchored_triples_fixture();
        let fam = find_triples(&g, &p, 0, Ratio::new(1, 1000));
        assert!(fam.triples.is_empty());
    }

    #[test]
    fn greedy_triples_anchor_every_clique_vertex() {
        let (g, p) = anchored_triples_fixture();
        let fam = find_triples(&g, &p, 0, Ratio::new(1, 9));
        assert_eq!(fam.triples.len(), 8);
        let mut seen = std::collections::BTreeSet::new();
        for t in &fam.triples {
            for v in [t.anchor, t.outer.0, t.outer.1] {
                assert!(seen.insert(v), "triples overlap at {v}");
            }
        }
    }

    /// K8 whose members each see a private outside pair, plus a star that
    /// pumps the maximum degree to 72 so `floor(k * delta)` allows 8 triples.
    fn anchored_triples_fixture() -> (Graph, Partition) {
        let mut edges = Vec::new();
        for u in 0..8 {
            for v in (u + 1)..8 {
                edges.push((u, v));
            }
        }
        for j in 0..8 {
            edges.push((j, 8 + 2 * j));
            edges.push((j, 8 + 2 * j + 1));
        }
        let hub = 24;
        for leaf in 0..72 {
            edges.push((hub, 25 + leaf));
        }
        let g = Graph::from_edges(97, &edges).unwrap();
        assert_eq!(g.delta(), 72);
        let p = Partition {
            dense_sets: vec![DenseSet {
                clique: VertexSet::from_sorted((0..8).collect()),
                special: None,
            }],
            leftover: (8..97).collect(),
            params: DecompositionParams::default_for(g.delta()),
        };
        (g, p)
    }
}
