//! Simple undirected graphs with sorted adjacency lists.
//!
//! Vertices are `0..n` internally; the DIMACS layer shifts to 1-based ids at
//! the boundary. Self-loops are rejected at construction and duplicate edges
//! collapse, so `m` always counts distinct unordered pairs.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {id} out of range for graph on {n} vertices")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("self-loop at vertex {id}")]
    SelfLoop { id: usize },
    #[error("assignment covers {got} vertices, graph has {expected}")]
    AssignmentSizeMismatch { got: usize, expected: usize },
    #[error("color {color} at vertex {vertex} outside palette 1..={q}")]
    ColorOutOfPalette {
        vertex: usize,
        color: usize,
        q: usize,
    },
}

/// Undirected simple graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    m: usize,
    delta: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Duplicate edges (in
    /// either orientation) collapse; self-loops and out-of-range endpoints
    /// are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { id: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { id: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { id: u });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut m = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        debug_assert!(m % 2 == 0);
        let delta = adjacency.iter().map(Vec::len).max().unwrap_or(0);
        Ok(Graph {
            adjacency,
            m: m / 2,
            delta,
        })
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Maximum degree.
    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        n <= 1 || self.m == n * (n - 1) / 2
    }

    /// Number of unordered non-adjacent pairs inside `N(v)`.
    pub fn nonedge_pairs_in_neighborhood(&self, v: usize) -> usize {
        let nbrs = &self.adjacency[v];
        let mut count = 0;
        for (i, &u) in nbrs.iter().enumerate() {
            for &w in &nbrs[i + 1..] {
                if !self.has_edge(u, w) {
                    count += 1;
                }
            }
        }
        count
    }

    /// True iff every pair in `set` is adjacent. Empty sets and singletons
    /// are cliques.
    pub fn is_clique(&self, set: &VertexSet) -> bool {
        let members = set.as_slice();
        for (i, &u) in members.iter().enumerate() {
            for &w in &members[i + 1..] {
                if !self.has_edge(u, w) {
                    return false;
                }
            }
        }
        true
    }

    /// Vertices within distance `radius` of any seed, seeds included.
    pub fn ball(&self, seeds: &[usize], radius: usize) -> VertexSet {
        let mut dist = vec![usize::MAX; self.n()];
        let mut queue: std::collections::VecDeque<usize> = std::collections::VecDeque::new();
        for &s in seeds {
            if dist[s] == usize::MAX {
                dist[s] = 0;
                queue.push_back(s);
            }
        }
        let mut members = Vec::new();
        while let Some(u) = queue.pop_front() {
            members.push(u);
            if dist[u] == radius {
                continue;
            }
            for &w in self.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        VertexSet::from_unsorted(members)
    }

    /// Connected components, each listed ascending, ordered by smallest
    /// member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for &w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Induced subgraph on `vertices` (ascending, no duplicates). Returns the
    /// subgraph and the map from new ids back to the originals.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        let mut old_to_new = vec![usize::MAX; self.n()];
        for (new, &old) in vertices.iter().enumerate() {
            old_to_new[old] = new;
        }
        let mut edges = Vec::new();
        for (new_u, &old_u) in vertices.iter().enumerate() {
            for &old_w in self.neighbors(old_u) {
                let new_w = old_to_new[old_w];
                if new_w != usize::MAX && new_u < new_w {
                    edges.push((new_u, new_w));
                }
            }
        }
        let sub = Graph::from_edges(vertices.len(), &edges).expect("induced edges are valid");
        (sub, vertices.to_vec())
    }
}

/// Sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new() -> Self {
        VertexSet {
            members: Vec::new(),
        }
    }

    pub fn from_unsorted(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    /// Wraps a vector that is already sorted and duplicate-free.
    pub fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet { members }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }
}

impl Default for VertexSet {
    fn default() -> Self {
        Self::new()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_unsorted(iter.into_iter().collect())
    }
}

/// Total coloring with palette `1..=q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    assignment: Vec<usize>,
    q: usize,
}

impl Coloring {
    pub fn new(assignment: Vec<usize>, q: usize) -> Result<Self, GraphError> {
        for (vertex, &color) in assignment.iter().enumerate() {
            if color == 0 || color > q {
                return Err(GraphError::ColorOutOfPalette { vertex, color, q });
            }
        }
        Ok(Coloring { assignment, q })
    }

    pub fn color(&self, v: usize) -> usize {
        self.assignment[v]
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

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        let mut seen = vec![false; self.q + 1];
        let mut count = 0;
        for &c in &self.assignment {
            if !seen[c] {
                seen[c] = true;
                count += 1;
            }
        }
        count
    }
}

/// Outcome of checking a coloring against a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    Proper,
    /// Lexicographically smallest monochromatic edge, `u < v`.
    Violation {
        u: usize,
        v: usize,
    },
}

impl Verdict {
    pub fn is_proper(&self) -> bool {
        matches!(self, Verdict::Proper)
    }
}

/// Checks properness; on failure reports the smallest violating edge.
pub fn verify_coloring(g: &Graph, coloring: &Coloring) -> Result<Verdict, GraphError> {
    if coloring.len() != g.n() {
        return Err(GraphError::AssignmentSizeMismatch {
            got: coloring.len(),
            expected: g.n(),
        });
    }
    for u in 0..g.n() {
        for &v in g.neighbors(u) {
            if v > u && coloring.color(u) == coloring.color(v) {
                return Ok(Verdict::Violation { u, v });
            }
        }
    }
    Ok(Verdict::Proper)
}
