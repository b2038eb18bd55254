//! Fallback colorer with the classical guarantee: every connected component
//! gets at most `max(3, delta)` colors, and exactly `delta` unless it is a
//! complete graph or an odd cycle. Works on every input, so the pipeline
//! can always land here.

use crate::graph::{Coloring, Graph};
use std::collections::VecDeque;

/// Colors each component independently; the palette size of the result is
/// the largest color actually used (1 for an empty graph).
pub fn brooks_coloring(g: &Graph) -> Coloring {
    let mut assignment = vec![0usize; g.n()];
    let mut qmax = 1;
    for comp in g.components() {
        let (sub, map) = g.induced(&comp);
        let colors = color_connected(&sub);
        for (i, &c) in colors.iter().enumerate() {
            assignment[map[i]] = c;
            qmax = qmax.max(c);
        }
    }
    Coloring::new(assignment, qmax).expect("component colors are positive")
}

fn color_connected(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    if g.is_complete() {
        return (1..=n).collect();
    }
    let delta = g.delta();
    if (0..n).all(|v| g.degree(v) == 2) {
        return cycle_walk(g);
    }
    if let Some(root) = (0..n).find(|&v| g.degree(v) < delta) {
        return greedy_from_root(g, root, &[]);
    }
    if let Some(x) = articulation_points(g).iter().position(|&a| a) {
        return color_regular_with_cut(g, x);
    }
    color_two_connected_regular(g)
}

/// Walks a cycle, alternating two colors; an odd cycle closes on a third.
fn cycle_walk(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors = vec![0usize; n];
    let mut prev = 0;
    let mut cur = g.neighbors(0)[0];
    colors[0] = 1;
    let mut parity = 0;
    while cur != 0 {
        parity ^= 1;
        colors[cur] = 1 + parity;
        let next = *g
            .neighbors(cur)
            .iter()
            .find(|&&u| u != prev)
            .expect("cycle vertices have two neighbors");
        prev = cur;
        cur = next;
    }
    if n % 2 == 1 {
        colors[prev] = 3;
    }
    colors
}

/// Greedy coloring in reverse breadth-first order from `root`: every vertex
/// except the root still has an uncolored neighbor (its tree parent) when
/// colored, so it sees at most `delta - 1` colors; the root must make up
/// for its full degree elsewhere (low degree, or two precolored neighbors
/// sharing a color). `precolored` pairs are applied first and skipped by
/// the walk.
fn greedy_from_root(g: &Graph, root: usize, precolored: &[(usize, usize)]) -> Vec<usize> {
    let n = g.n();
    let mut colors = vec![0usize; n];
    let mut skip = vec![false; n];
    for &(v, c) in precolored {
        colors[v] = c;
        skip[v] = true;
    }
    let mut order = Vec::with_capacity(n);
    let mut seen = skip.clone();
    let mut queue = VecDeque::new();
    seen[root] = true;
    queue.push_back(root);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                queue.push_back(u);
            }
        }
    }
    for &v in order.iter().rev() {
        let mut worn: Vec<usize> = g.neighbors(v).iter().map(|&u| colors[u]).collect();
        worn.sort_unstable();
        let mut c = 1;
        for w in worn {
            if w == c {
                c += 1;
            }
        }
        colors[v] = c;
    }
    colors
}

/// Regular graph with a cut vertex `x`: color each piece of `g - x`
/// together with `x` (whose degree is short there), then relabel every
/// piece so `x` wears color 1 throughout.
fn color_regular_with_cut(g: &Graph, x: usize) -> Vec<usize> {
    let n = g.n();
    let mut colors = vec![0usize; n];
    colors[x] = 1;
    let rest: Vec<usize> = (0..n).filter(|&v| v != x).collect();
    let (without_x, map) = g.induced(&rest);
    for piece in without_x.components() {
        let mut members: Vec<usize> = piece.iter().map(|&i| map[i]).collect();
        members.push(x);
        members.sort_unstable();
        let (sub, submap) = g.induced(&members);
        let local_x = submap.iter().position(|&v| v == x).expect("x was included");
        let mut piece_colors = greedy_from_root(&sub, local_x, &[]);
        let cx = piece_colors[local_x];
        if cx != 1 {
            for c in piece_colors.iter_mut() {
                if *c == cx {
                    *c = 1;
                } else if *c == 1 {
                    *c = cx;
                }
            }
        }
        for (i, &c) in piece_colors.iter().enumerate() {
            colors[submap[i]] = c;
        }
    }
    colors
}

/// Two-connected regular graph, neither complete nor a cycle: some vertex
/// has two non-adjacent neighbors whose removal keeps the rest connected.
/// Those two share color 1, and the greedy walk ends at their common
/// neighbor, which then sees a repeat.
fn color_two_connected_regular(g: &Graph) -> Vec<usize> {
    let n = g.n();
    for v in 0..n {
        let nv = g.neighbors(v);
        for (i, &u) in nv.iter().enumerate() {
            for &w in &nv[i + 1..] {
                if g.has_edge(u, w) {
                    continue;
                }
                let rest: Vec<usize> = (0..n).filter(|&z| z != u && z != w).collect();
                let (sub, _) = g.induced(&rest);
                if sub.is_connected() {
                    return greedy_from_root(g, v, &[(u, 1), (w, 1)]);
                }
            }
        }
    }
    unreachable!(
        "a two-connected regular graph that is neither complete nor a cycle has a splitting triple"
    );
}

/// `out[v]` is true when removing `v` disconnects its component.
fn articulation_points(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_art = vec![false; n];
    let mut timer = 0;
    for start in 0..n {
        if disc[start] != usize::MAX {
            continue;
        }
        let mut root_children = 0;
        disc[start] = timer;
        low[start] = timer;
        timer += 1;
        // frames: (vertex, parent, next neighbor index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(start, usize::MAX, 0)];
        while let Some(frame) = stack.last_mut() {
            let (v, parent) = (frame.0, frame.1);
            if frame.2 < g.neighbors(v).len() {
                let u = g.neighbors(v)[frame.2];
                frame.2 += 1;
                if u == parent {
                    continue;
                }
                if disc[u] == usize::MAX {
                    disc[u] = timer;
                    low[u] = timer;
                    timer += 1;
                    if v == start {
                        root_children += 1;
                    }
                    stack.push((u, v, 0));
                } else {
                    low[v] = low[v].min(disc[u]);
                }
            } else {
                stack.pop();
                if let Some(pframe) = stack.last() {
                    let p = pframe.0;
                    low[p] = low[p].min(low[v]);
                    if p != start && low[v] >= disc[p] {
                        is_art[p] = true;
                    }
                }
            }
        }
        if root_children >= 2 {
            is_art[start] = true;
        }
    }
    is_art
}
