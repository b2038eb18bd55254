//! Bad events over a partial coloring: the conditions that block the later
//! greedy extension, one per leftover vertex and up to two per dense set.

use crate::decompose::{Partition, TripleFamily};
use crate::graph::{Graph, VertexSet};
use crate::partial::{repeated_color_count, unique_repeat_pairs, PartialColoring};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// An event that must not hold when the resampler stops.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "index", rename_all = "snake_case")]
pub enum BadEvent {
    /// Leftover vertex with fewer than two disjoint repeated-color pairs in
    /// its neighborhood.
    Leftover(usize),
    /// Dense set whose special vertex has fewer than two uncolored
    /// neighbors inside the clique.
    NearClique(usize),
    /// Dense set with fewer than two uncolored clique members that each see
    /// two repeated colors.
    Clique(usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EventError {
    #[error("dense set index {index} out of range")]
    UnknownDenseSet { index: usize },
    #[error("dense set {index} has no special vertex")]
    NoSpecialVertex { index: usize },
    #[error("vertex {vertex} is not a leftover vertex")]
    NotLeftover { vertex: usize },
}

/// Every event of the partition, in the resampler's scan order: leftover
/// vertices ascending, then special-vertex events, then reserve-pair events.
pub fn event_family(p: &Partition) -> Vec<BadEvent> {
    let mut events: Vec<BadEvent> = p.leftover.iter().map(BadEvent::Leftover).collect();
    for (i, ds) in p.dense_sets.iter().enumerate() {
        if ds.special.is_some() {
            events.push(BadEvent::NearClique(i));
        }
    }
    for i in 0..p.dense_sets.len() {
        events.push(BadEvent::Clique(i));
    }
    events
}

/// Whether `event` holds under `coloring`.
pub fn occurs(
    g: &Graph,
    p: &Partition,
    coloring: &PartialColoring,
    event: &BadEvent,
) -> Result<bool, EventError> {
    match *event {
        BadEvent::Leftover(v) => {
            if !p.leftover.contains(v) {
                return Err(EventError::NotLeftover { vertex: v });
            }
            Ok(unique_repeat_pairs(g, coloring, v) < 2)
        }
        BadEvent::NearClique(i) => {
            let ds = p
                .dense_sets
                .get(i)
                .ok_or(EventError::UnknownDenseSet { index: i })?;
            let s = ds.special.ok_or(EventError::NoSpecialVertex { index: i })?;
            let uncolored_inside = g
                .neighbors(s)
                .iter()
                .filter(|&&w| ds.clique.contains(w) && !coloring.is_colored(w))
                .count();
            Ok(uncolored_inside < 2)
        }
        BadEvent::Clique(i) => {
            let ds = p
                .dense_sets
                .get(i)
                .ok_or(EventError::UnknownDenseSet { index: i })?;
            let reserves = ds
                .clique
                .iter()
                .filter(|&w| !coloring.is_colored(w) && repeated_color_count(g, coloring, w) >= 2)
                .count();
            Ok(reserves < 2)
        }
    }
}

/// The vertices whose colors the event reads; redrawing exactly these is
/// enough to resample it.
pub fn variables(g: &Graph, p: &Partition, event: &BadEvent) -> Result<VertexSet, EventError> {
    match *event {
        BadEvent::Leftover(v) => {
            if !p.leftover.contains(v) {
                return Err(EventError::NotLeftover { vertex: v });
            }
            Ok(g.ball(&[v], 2))
        }
        BadEvent::NearClique(i) => {
            let ds = p
                .dense_sets
                .get(i)
                .ok_or(EventError::UnknownDenseSet { index: i })?;
            if ds.special.is_none() {
                return Err(EventError::NoSpecialVertex { index: i });
            }
            let members: Vec<usize> = ds.members().iter().collect();
            Ok(g.ball(&members, 1))
        }
        BadEvent::Clique(i) => {
            let ds = p
                .dense_sets
                .get(i)
                .ok_or(EventError::UnknownDenseSet { index: i })?;
            let members: Vec<usize> = ds.members().iter().collect();
            Ok(g.ball(&members, 2))
        }
    }
}

/// Diagnostic: how many triples of the family currently have both outer
/// vertices colored alike. Large counts mean the anchor keeps free colors.
pub fn good_triple_count(coloring: &PartialColoring, family: &TripleFamily) -> usize {
    family
        .triples
        .iter()
        .filter(|t| {
            let (a, b) = t.outer;
            match (coloring.color(a), coloring.color(b)) {
                (Some(ca), Some(cb)) => ca == cb,
                _ => false,
            }
        })
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::{DecompositionParams, DenseSet, Partition, Triple};
    use crate::families;
    use crate::graph::Graph;

    fn trivial_partition(g: &Graph) -> Partition {
        Partition::trivial(g, DecompositionParams::default_for(g.delta()))
    }

    #[test]
    fn family_lists_leftover_then_special_then_reserve_events() {
        let g = families::complete(6);
        let p = Partition {
            dense_sets: vec![
                DenseSet {
                    clique: VertexSet::from_sorted(vec![0, 1, 2]),
                    special: None,
                },
                DenseSet {
                    clique: VertexSet::from_sorted(vec![3, 4]),
                    special: Some(5),
                },
            ],
            leftover: VertexSet::new(),
            params: DecompositionParams::default_for(g.delta()),
        };
        assert_eq!(
            event_family(&p),
            vec![
                BadEvent::NearClique(1),
                BadEvent::Clique(0),
                BadEvent::Clique(1)
            ]
        );

        let q = trivial_partition(&g);
        assert_eq!(
            event_family(&q),
            (0..6).map(BadEvent::Leftover).collect::<Vec<_>>()
        );
    }

    #[test]
    fn leftover_event_counts_disjoint_repeat_pairs() {
        let g = families::star(4);
        let p = trivial_partition(&g);
        let mut c = PartialColoring::new_uncolored(5, 4);
        for (v, color) in [(1, 1), (2, 1), (3, 2), (4, 3)] {
            c.set(v, color);
        }
        // one repeated color only
        assert_eq!(occurs(&g, &p, &c, &BadEvent::Leftover(0)), Ok(true));
        c.set(4, 2);
        // colors 1 and 2 both repeat: the event is gone
        assert_eq!(occurs(&g, &p, &c, &BadEvent::Leftover(0)), Ok(false));
        assert_eq!(
            occurs(&g, &p, &c, &BadEvent::Leftover(9)),
            Err(EventError::NotLeftover { vertex: 9 })
        );
    }

    #[test]
    fn special_event_needs_two_uncolored_clique_neighbors() {
        // K5 with vertex 5 attached to members 0..4
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
        let p = Partition {
            dense_sets: vec![DenseSet {
                clique: VertexSet::from_sorted(vec![0, 1, 2, 3, 4]),
                special: Some(5),
            }],
            leftover: VertexSet::new(),
            params: DecompositionParams::default_for(g.delta()),
        };
        let mut c = PartialColoring::new_uncolored(6, 4);
        assert_eq!(occurs(&g, &p, &c, &BadEvent::NearClique(0)), Ok(false));
        c.set(0, 1);
        c.set(1, 2);
        c.set(2, 3);
        // only vertex 3 is still an uncolored neighbor of the special
        assert_eq!(occurs(&g, &p, &c, &BadEvent::NearClique(0)), Ok(true));
        assert_eq!(
            occurs(&g, &p, &c, &BadEvent::NearClique(7)),
            Err(EventError::UnknownDenseSet { index: 7 })
        );
        assert_eq!(
            variables(&g, &p, &BadEvent::NearClique(3)),
            Err(EventError::UnknownDenseSet { index: 3 })
        );
    }

    #[test]
    fn reserve_event_needs_two_members_with_double_repeats() {
        // K4 on 0..4; members 0 and 1 each see two same-colored outside pairs
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in (u + 1)..4 {
                edges.push((u, v));
            }
        }
        for out in 4..8 {
            edges.push((0, out));
        }
        for out in 8..12 {
            edges.push((1, out));
        }
        let g = Graph::from_edges(12, &edges).unwrap();
        let p = Partition {
            dense_sets: vec![DenseSet {
                clique: VertexSet::from_sorted(vec![0, 1, 2, 3]),
                special: None,
            }],
            leftover: (4..12).collect(),
            params: DecompositionParams::default_for(g.delta()),
        };
        let mut c = PartialColoring::new_uncolored(12, 6);
        for (v, color) in [
            (4, 1),
            (5, 1),
            (6, 2),
            (7, 2),
            (8, 3),
            (9, 3),
            (10, 4),
            (11, 4),
        ] {
            c.set(v, color);
        }
        c.set(2, 5);
        c.set(3, 6);
        assert_eq!(occurs(&g, &p, &c, &BadEvent::Clique(0)), Ok(false));
        // coloring one reserve vertex leaves a single qualified member
        c.set(0, 5);
        assert_eq!(occurs(&g, &p, &c, &BadEvent::Clique(0)), Ok(true));
    }

    #[test]
    fn variables_cover_the_right_radius() {
        let g = families::path(7);
        let p = trivial_partition(&g);
        let ball = variables(&g, &p, &BadEvent::Leftover(3)).unwrap();
        assert_eq!(ball.as_slice(), &[1, 2, 3, 4, 5]);

        let g = families::complete(6);
        let p = Partition {
            dense_sets: vec![
                DenseSet {
                    clique: VertexSet::from_sorted(vec![0, 1]),
                    special: Some(2),
                },
                DenseSet {
                    clique: VertexSet::from_sorted(vec![3, 4]),
                    special: None,
                },
            ],
            leftover: VertexSet::from_sorted(vec![5]),
            params: DecompositionParams::default_for(g.delta()),
        };
        // complete graph: one hop already reaches everything
        let near = variables(&g, &p, &BadEvent::NearClique(0)).unwrap();
        assert_eq!(near.len(), 6);
        let clique = variables(&g, &p, &BadEvent::Clique(1)).unwrap();
        assert_eq!(clique.len(), 6);
    }

    #[test]
    fn good_triples_require_matching_outer_colors() {
        let fam = TripleFamily {
            clique_index: 0,
            triples: vec![
                Triple {
                    anchor: 0,
                    outer: (4, 5),
                },
                Triple {
                    anchor: 1,
                    outer: (6, 7),
                },
                Triple {
                    anchor: 2,
                    outer: (8, 9),
                },
            ],
        };
        let mut c = PartialColoring::new_uncolored(10, 4);
        c.set(4, 1);
        c.set(5, 1);
        c.set(6, 2);
        c.set(7, 3);
        c.set(8, 2);
        assert_eq!(good_triple_count(&c, &fam), 1);
    }
}
