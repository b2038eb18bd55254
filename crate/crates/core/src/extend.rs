//! Greedy completion of a partial coloring that survived the resampler.
//! The preconditions are exactly "no bad event holds"; under them every
//! greedy step below has a free color, so extension never backtracks.
//!
//! Order matters: special vertices first (two uncolored clique neighbors
//! pay for the full degree), then each clique with its two best reserve
//! members withheld until last, then the leftover vertices.

use crate::decompose::{DecompositionParams, DenseSet, Partition, Ratio};
use crate::events::{event_family, occurs, BadEvent};
use crate::graph::{Coloring, Graph, VertexSet};
use crate::partial::{
    repeated_color_count, repeated_color_count_slice, unique_repeat_pairs, PartialColoring,
};
use crate::rng::RandomSource;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PreconditionViolation {
    #[error("leftover vertex {vertex} has {pairs} repeated-color pairs, needs 2")]
    LeftoverLacksPairs { vertex: usize, pairs: usize },
    #[error("special vertex of dense set {dense_set} has {uncolored} uncolored clique neighbors, needs 2")]
    SpecialLacksUncolored { dense_set: usize, uncolored: usize },
    #[error("dense set {dense_set} has {qualified} uncolored members with two repeats, needs 2")]
    CliqueLacksReserves { dense_set: usize, qualified: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtendError {
    #[error("no free color for vertex {vertex}")]
    OutOfColors { vertex: usize },
}

/// Fails with the first bad event still holding, annotated with the count
/// that fell short.
pub fn check_extension_preconditions(
    g: &Graph,
    p: &Partition,
    phi: &PartialColoring,
) -> Result<(), PreconditionViolation> {
    for event in event_family(p) {
        if !occurs(g, p, phi, &event).expect("event family matches partition") {
            continue;
        }
        return Err(match event {
            BadEvent::Leftover(v) => PreconditionViolation::LeftoverLacksPairs {
                vertex: v,
                pairs: unique_repeat_pairs(g, phi, v),
            },
            BadEvent::NearClique(i) => {
                let ds = &p.dense_sets[i];
                let s = ds.special.expect("near-clique events carry a special");
                let uncolored = g
                    .neighbors(s)
                    .iter()
                    .filter(|&&w| ds.clique.contains(w) && !phi.is_colored(w))
                    .count();
                PreconditionViolation::SpecialLacksUncolored {
                    dense_set: i,
                    uncolored,
                }
            }
            BadEvent::Clique(i) => {
                let ds = &p.dense_sets[i];
                let qualified = ds
                    .clique
                    .iter()
                    .filter(|&w| !phi.is_colored(w) && repeated_color_count(g, phi, w) >= 2)
                    .count();
                PreconditionViolation::CliqueLacksReserves {
                    dense_set: i,
                    qualified,
                }
            }
        });
    }
    Ok(())
}

/// Completes `phi` to a total coloring without touching already-colored
/// vertices. Callers wanting the success guarantee should check the
/// preconditions first; without them the greedy can run out of colors.
pub fn extend_coloring(
    g: &Graph,
    p: &Partition,
    phi: &PartialColoring,
) -> Result<Coloring, ExtendError> {
    let q = phi.q();
    let mut assign: Vec<Option<usize>> = phi.assignment().to_vec();

    for ds in &p.dense_sets {
        if let Some(s) = ds.special {
            if assign[s].is_none() {
                assign[s] = Some(smallest_free(g, &assign, s, q)?);
            }
        }
    }

    for ds in &p.dense_sets {
        let uncolored: Vec<usize> = ds.clique.iter().filter(|&v| assign[v].is_none()).collect();
        let mut withheld: Vec<usize> = uncolored
            .iter()
            .copied()
            .filter(|&v| repeated_color_count_slice(g, &assign, v) >= 2)
            .take(2)
            .collect();
        for &v in &uncolored {
            if withheld.len() >= 2 {
                break;
            }
            if !withheld.contains(&v) {
                withheld.push(v);
            }
        }
        withheld.sort_unstable();
        for &v in &uncolored {
            if !withheld.contains(&v) {
                assign[v] = Some(smallest_free(g, &assign, v, q)?);
            }
        }
        for &v in &withheld {
            assign[v] = Some(smallest_free(g, &assign, v, q)?);
        }
    }

    for v in p.leftover.iter() {
        if assign[v].is_none() {
            assign[v] = Some(smallest_free(g, &assign, v, q)?);
        }
    }
    // partitions normally cover every vertex; stragglers are colored too so
    // the result is always total
    for v in 0..g.n() {
        if assign[v].is_none() {
            assign[v] = Some(smallest_free(g, &assign, v, q)?);
        }
    }

    let full: Vec<usize> = assign
        .iter()
        .map(|c| c.expect("every vertex was colored"))
        .collect();
    Ok(Coloring::new(full, q).expect("greedy colors stay in the palette"))
}

fn smallest_free(
    g: &Graph,
    assign: &[Option<usize>],
    v: usize,
    q: usize,
) -> Result<usize, ExtendError> {
    let mut worn: Vec<usize> = g.neighbors(v).iter().filter_map(|&u| assign[u]).collect();
    worn.sort_unstable();
    let mut c = 1;
    for w in worn {
        if w == c {
            c += 1;
        }
    }
    if c <= q {
        Ok(c)
    } else {
        Err(ExtendError::OutOfColors { vertex: v })
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("extension instances need maximum degree at least 6, got {delta}")]
    MaxDegreeTooSmall { delta: usize },
    #[error("extension instances need at least one dense set")]
    NoDenseSets,
}

#[derive(Clone, Debug)]
pub struct ExtensionInstance {
    pub graph: Graph,
    pub partition: Partition,
    pub coloring: PartialColoring,
}

/// Builds a graph, partition and partial coloring that satisfy every
/// extension precondition, with maximum degree exactly `delta` and palette
/// `delta - 1`.
///
/// Each dense set is a clique of size `delta - 2` whose first two members
/// are reserve vertices wired into a six-vertex pad (an octahedron colored
/// with three doubled colors); two further members are precolored so the
/// reserves see two repeats. Specials are attached per clique with
/// probability `near_fraction`. Pads absorb up to `delta - 4` attachments;
/// the first pad is topped up with client vertices, pinning the maximum
/// degree at `delta`.
pub fn generate_extension_instance(
    delta: usize,
    num_cliques: usize,
    near_fraction: f64,
    seed: u64,
) -> Result<ExtensionInstance, GeneratorError> {
    if delta < 6 {
        return Err(GeneratorError::MaxDegreeTooSmall { delta });
    }
    if num_cliques == 0 {
        return Err(GeneratorError::NoDenseSets);
    }
    let s = delta - 2;
    let capacity = delta - 4;
    let src = RandomSource { seed };

    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut next_id = 0;
    let alloc = |count: usize, next_id: &mut usize| {
        let base = *next_id;
        *next_id += count;
        base
    };

    let mut member_lists: Vec<Vec<usize>> = Vec::new();
    let mut specials: Vec<Option<usize>> = Vec::new();
    for i in 0..num_cliques {
        let base = alloc(s, &mut next_id);
        let members: Vec<usize> = (base..base + s).collect();
        for a in 0..s {
            for b in (a + 1)..s {
                edges.push((members[a], members[b]));
            }
        }
        if src.unit(i as u64, 0) < near_fraction {
            let sp = alloc(1, &mut next_id);
            let reach = Ratio::new(4, 5).ceil_of(s);
            for &m in members.iter().take(reach) {
                edges.push((m, sp));
            }
            specials.push(Some(sp));
        } else {
            specials.push(None);
        }
        member_lists.push(members);
    }

    let num_pads = num_cliques.div_ceil(capacity);
    let mut pad_bases = Vec::with_capacity(num_pads);
    for _ in 0..num_pads {
        let base = alloc(6, &mut next_id);
        pad_bases.push(base);
        // three classes of two, all cross edges
        for class_a in 0..3 {
            for class_b in (class_a + 1)..3 {
                for da in 0..2 {
                    for db in 0..2 {
                        edges.push((base + 2 * class_a + da, base + 2 * class_b + db));
                    }
                }
            }
        }
    }
    for (i, members) in member_lists.iter().enumerate() {
        let pad = pad_bases[i / capacity];
        edges.push((members[0], pad));
        edges.push((members[0], pad + 2));
        edges.push((members[1], pad + 1));
        edges.push((members[1], pad + 3));
    }

    let clients = capacity - num_cliques.min(capacity);
    let mut client_ids = Vec::with_capacity(clients);
    for _ in 0..clients {
        let c = alloc(1, &mut next_id);
        for off in 0..4 {
            edges.push((c, pad_bases[0] + off));
        }
        client_ids.push(c);
    }

    let graph = Graph::from_edges(next_id, &edges).expect("generator emits simple edges");
    debug_assert_eq!(graph.delta(), delta);

    let q = delta - 1;
    let mut assign: Vec<Option<usize>> = vec![None; next_id];
    for members in &member_lists {
        assign[members[2]] = Some(1);
        assign[members[3]] = Some(2);
    }
    for &base in &pad_bases {
        for class in 0..3 {
            assign[base + 2 * class] = Some(class + 1);
            assign[base + 2 * class + 1] = Some(class + 1);
        }
    }
    let coloring = PartialColoring::from_parts(assign, q).expect("pad colors fit the palette");

    let dense_sets: Vec<DenseSet> = member_lists
        .iter()
        .zip(&specials)
        .map(|(members, &special)| DenseSet {
            clique: VertexSet::from_sorted(members.clone()),
            special,
        })
        .collect();
    let mut leftover: Vec<usize> = client_ids;
    for &base in &pad_bases {
        leftover.extend(base..base + 6);
    }
    let partition = Partition {
        dense_sets,
        leftover: VertexSet::from_unsorted(leftover),
        params: DecompositionParams::default_for(delta),
    };

    Ok(ExtensionInstance {
        graph,
        partition,
        coloring,
    })
}
