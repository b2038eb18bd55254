//! Partial colorings and the statistics the resampling loop inspects.
//!
//! A `PartialColoring` assigns colors from `1..=q` to a subset of vertices.
//! Conflict deletion uncolors *both* endpoints of every monochromatic edge,
//! so its output is always proper on its support, and reapplying it changes
//! nothing.

use crate::graph::{Coloring, Graph, GraphError};
use crate::rng::RandomSource;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

/// Coloring of a subset of vertices; `None` marks an uncolored vertex.
///
/// Serializes as a bare JSON array with `null` holes, matching trace dumps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialColoring {
    assignment: Vec<Option<usize>>,
    q: usize,
}

impl PartialColoring {
    pub fn new_uncolored(n: usize, q: usize) -> Self {
        PartialColoring {
            assignment: vec![None; n],
            q,
        }
    }

    pub fn from_parts(assignment: Vec<Option<usize>>, q: usize) -> Result<Self, GraphError> {
        for (vertex, &slot) in assignment.iter().enumerate() {
            if let Some(color) = slot {
                if color == 0 || color > q {
                    return Err(GraphError::ColorOutOfPalette { vertex, color, q });
                }
            }
        }
        Ok(PartialColoring { assignment, q })
    }

    pub fn from_total(coloring: &Coloring) -> Self {
        PartialColoring {
            assignment: coloring.assignment().iter().map(|&c| Some(c)).collect(),
            q: coloring.q(),
        }
    }

    pub fn color(&self, v: usize) -> Option<usize> {
        self.assignment[v]
    }

    pub fn is_colored(&self, v: usize) -> bool {
        self.assignment[v].is_some()
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn colored_count(&self) -> usize {
        self.assignment.iter().filter(|s| s.is_some()).count()
    }

    pub fn assignment(&self) -> &[Option<usize>] {
        &self.assignment
    }

    #[cfg(test)]
    pub(crate) fn set(&mut self, v: usize, color: usize) {
        debug_assert!(color >= 1 && color <= self.q);
        self.assignment[v] = Some(color);
    }

    #[cfg(test)]
    pub(crate) fn clear(&mut self, v: usize) {
        self.assignment[v] = None;
    }
}

impl Serialize for PartialColoring {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.assignment.len()))?;
        for slot in &self.assignment {
            seq.serialize_element(slot)?;
        }
        seq.end()
    }
}

/// Independent uniform color per vertex, drawn in ascending id order at
/// round 0 of the seed's stream.
pub fn random_coloring(g: &Graph, q: usize, src: RandomSource) -> Coloring {
    let assignment: Vec<usize> = (0..g.n()).map(|v| src.color(v, 0, q)).collect();
    Coloring::new(assignment, q).expect("draws stay inside the palette")
}

/// Uncolors both endpoints of every monochromatic edge.
pub fn conflict_delete(g: &Graph, coloring: &Coloring) -> PartialColoring {
    conflict_delete_partial(g, &PartialColoring::from_total(coloring))
}

/// Conflict deletion on an already partial coloring; uncolored slots never
/// create new conflicts, so this is idempotent.
pub fn conflict_delete_partial(g: &Graph, phi: &PartialColoring) -> PartialColoring {
    let mut keep = phi.assignment.clone();
    for (u, v) in g.edges() {
        if let (Some(cu), Some(cv)) = (phi.assignment[u], phi.assignment[v]) {
            if cu == cv {
                keep[u] = None;
                keep[v] = None;
            }
        }
    }
    PartialColoring {
        assignment: keep,
        q: phi.q,
    }
}

/// True iff no edge has both endpoints colored alike.
pub fn is_proper_on_support(g: &Graph, phi: &PartialColoring) -> bool {
    g.edges()
        .all(|(u, v)| match (phi.assignment[u], phi.assignment[v]) {
            (Some(cu), Some(cv)) => cu != cv,
            _ => true,
        })
}

/// Number of colors worn by exactly two neighbors of `v`, those two being
/// non-adjacent. Each such color contributes one candidate pair that can be
/// merged when `v` is colored later.
pub fn unique_repeat_pairs(g: &Graph, phi: &PartialColoring, v: usize) -> usize {
    unique_repeat_pairs_slice(g, &phi.assignment, v)
}

/// Number of colors appearing on at least two colored neighbors of `v`.
pub fn repeated_color_count(g: &Graph, phi: &PartialColoring, v: usize) -> usize {
    repeated_color_count_slice(g, &phi.assignment, v)
}

pub(crate) fn unique_repeat_pairs_slice(g: &Graph, assign: &[Option<usize>], v: usize) -> usize {
    let mut worn = colored_neighbors(g, assign, v);
    worn.sort_unstable();
    let mut count = 0;
    let mut i = 0;
    while i < worn.len() {
        let mut j = i + 1;
        while j < worn.len() && worn[j].0 == worn[i].0 {
            j += 1;
        }
        if j - i == 2 && !g.has_edge(worn[i].1, worn[i + 1].1) {
            count += 1;
        }
        i = j;
    }
    count
}

pub(crate) fn repeated_color_count_slice(g: &Graph, assign: &[Option<usize>], v: usize) -> usize {
    let mut worn = colored_neighbors(g, assign, v);
    worn.sort_unstable();
    let mut count = 0;
    let mut i = 0;
    while i < worn.len() {
        let mut j = i + 1;
        while j < worn.len() && worn[j].0 == worn[i].0 {
            j += 1;
        }
        if j - i >= 2 {
            count += 1;
        }
        i = j;
    }
    count
}

fn colored_neighbors(g: &Graph, assign: &[Option<usize>], v: usize) -> Vec<(usize, usize)> {
    g.neighbors(v)
        .iter()
        .filter_map(|&u| assign[u].map(|c| (c, u)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn star_with_leaf_colors(colors: &[usize]) -> (Graph, PartialColoring) {
        let g = families::star(colors.len());
        let mut assignment = vec![None];
        assignment.extend(colors.iter().map(|&c| Some(c)));
        let q = colors.iter().copied().max().unwrap_or(1);
        (g, PartialColoring::from_parts(assignment, q).unwrap())
    }

    #[test]
    fn single_color_palette() {
        let g = families::path(4);
        let c = random_coloring(&g, 1, RandomSource::new(99));
        assert!(c.assignment().iter().all(|&x| x == 1));
    }

    #[test]
    fn empty_graph_empty_coloring() {
        let g = families::complete(0);
        let c = random_coloring(&g, 3, RandomSource::new(0));
        assert!(c.is_empty());
    }

    #[test]
    fn pinned_draws_for_seed_42() {
        let g = families::path(3);
        let c = random_coloring(&g, 2, RandomSource::new(42));
        assert_eq!(c.assignment(), &[2, 2, 1]);
    }

    #[test]
    fn proper_coloring_survives_conflict_delete() {
        let g = families::path(3);
        let c = Coloring::new(vec![1, 2, 1], 2).unwrap();
        let phi = conflict_delete(&g, &c);
        assert_eq!(phi.assignment(), &[Some(1), Some(2), Some(1)]);
    }

    #[test]
    fn monochromatic_triangle_fully_uncolored() {
        let g = families::complete(3);
        let c = Coloring::new(vec![1, 1, 1], 1).unwrap();
        let phi = conflict_delete(&g, &c);
        assert_eq!(phi.colored_count(), 0);
    }

    #[test]
    fn path_keeps_unconflicted_endpoint() {
        let g = families::path(3);
        let c = Coloring::new(vec![1, 1, 2], 2).unwrap();
        let phi = conflict_delete(&g, &c);
        assert_eq!(phi.assignment(), &[None, None, Some(2)]);
    }

    #[test]
    fn conflict_delete_output_is_proper_and_stable() {
        let g = families::petersen();
        let c = random_coloring(&g, 2, RandomSource::new(5));
        let phi = conflict_delete(&g, &c);
        assert!(is_proper_on_support(&g, &phi));
        assert_eq!(conflict_delete_partial(&g, &phi), phi);
    }

    #[test]
    fn repeat_pair_needs_exactly_two_wearers() {
        let (g, phi) = star_with_leaf_colors(&[1, 1, 2, 3]);
        assert_eq!(unique_repeat_pairs(&g, &phi, 0), 1);
        let (g, phi) = star_with_leaf_colors(&[1, 2, 3, 4]);
        assert_eq!(unique_repeat_pairs(&g, &phi, 0), 0);
        let (g, phi) = star_with_leaf_colors(&[1, 1, 1, 2]);
        assert_eq!(unique_repeat_pairs(&g, &phi, 0), 0);
    }

    #[test]
    fn repeat_pair_wearers_must_be_nonadjacent() {
        // triangle hanging off a center: both wearers of color 1 adjacent
        let g = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let phi = PartialColoring::from_parts(vec![None, Some(1), Some(1)], 1).unwrap();
        assert_eq!(unique_repeat_pairs(&g, &phi, 0), 0);
        assert_eq!(repeated_color_count(&g, &phi, 0), 1);
    }

    #[test]
    fn repeated_color_counting() {
        let (g, phi) = star_with_leaf_colors(&[1, 1, 1, 2]);
        assert_eq!(repeated_color_count(&g, &phi, 0), 1);
        let (g, phi) = star_with_leaf_colors(&[1, 1, 2, 2]);
        assert_eq!(repeated_color_count(&g, &phi, 0), 2);
        let g = families::complete(4);
        let phi = PartialColoring::from_parts(vec![Some(1), Some(2), Some(3), Some(4)], 4).unwrap();
        for v in 0..4 {
            assert_eq!(repeated_color_count(&g, &phi, v), 0);
        }
    }

    #[test]
    fn pair_count_never_exceeds_repeat_count() {
        let g = families::petersen();
        for seed in 0..40 {
            let c = random_coloring(&g, 3, RandomSource::new(seed));
            let phi = conflict_delete(&g, &c);
            for v in 0..g.n() {
                assert!(unique_repeat_pairs(&g, &phi, v) <= repeated_color_count(&g, &phi, v));
            }
        }
    }

    #[test]
    fn partial_serializes_as_array_with_nulls() {
        let phi = PartialColoring::from_parts(vec![Some(2), None, Some(1)], 3).unwrap();
        assert_eq!(serde_json::to_string(&phi).unwrap(), "[2,null,1]");
    }
}
