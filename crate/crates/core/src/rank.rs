//! Rank functions: vertex labelings with `ρ(tail) + 1 = ρ(head)` on every edge.
//!
//! A rank function exists exactly when the quiver is asymmetric and every
//! undirected cycle has as many forward as backward edges. Two independent
//! routes are provided: [`find_rank_function`] propagates labels along walks,
//! [`check_cycle_balance`] inspects a fundamental cycle basis.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::quiver::{components, Edge, Quiver};

/// A rank function normalized so each connected component has minimum 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RankFunction {
    values: Vec<i64>,
}

impl RankFunction {
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn value(&self, v: usize) -> i64 {
        self.values[v]
    }

    /// Checks the defining identity against `q`.
    pub fn is_rank_function_of(&self, q: &Quiver) -> bool {
        self.values.len() == q.vertex_count()
            && q
                .edges()
                .iter()
                .all(|e| self.values[e.tail] + 1 == self.values[e.head])
    }

    /// `ρ(v) - ρ(w) + 1` for the edge `(v, w)`; zero exactly on edges the
    /// function ranks.
    pub fn defect(&self, e: Edge) -> i64 {
        self.values[e.tail] - self.values[e.head] + 1
    }
}

/// Finds the normalized rank function of `q`, if one exists.
pub fn find_rank_function(q: &Quiver) -> Option<RankFunction> {
    let n = q.vertex_count();
    // (neighbor, +1 if the edge leaves v, -1 if it enters v)
    let mut adjacency: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
    for e in q.edges() {
        adjacency[e.tail].push((e.head, 1));
        adjacency[e.head].push((e.tail, -1));
    }
    let mut values: Vec<Option<i64>> = vec![None; n];
    for root in 0..n {
        if values[root].is_some() {
            continue;
        }
        values[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let rv = values[v].expect("queued vertices are labeled");
            for &(w, step) in &adjacency[v] {
                match values[w] {
                    None => {
                        values[w] = Some(rv + step);
                        queue.push_back(w);
                    }
                    Some(rw) if rw != rv + step => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let mut values: Vec<i64> = values.into_iter().map(|v| v.unwrap()).collect();
    for comp in components(q).components() {
        let min = comp.iter().map(|&v| values[v]).min().unwrap_or(0);
        for &v in comp {
            values[v] -= min;
        }
    }
    Some(RankFunction { values })
}

/// Asymmetry plus forward/backward balance on every cycle of a fundamental
/// cycle basis of the underlying graph.
pub fn check_cycle_balance(q: &Quiver) -> bool {
    if !q.is_asymmetric() {
        return false;
    }
    let n = q.vertex_count();
    let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (i, e) in q.edges().iter().enumerate() {
        adjacency[e.tail].push((e.head, i));
        adjacency[e.head].push((e.tail, i));
    }
    // BFS forest: parent vertex, parent edge, depth.
    let mut parent = vec![usize::MAX; n];
    let mut parent_edge = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut seen = vec![false; n];
    let mut tree_edge = vec![false; q.edge_count()];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &(w, i) in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    parent_edge[w] = i;
                    depth[w] = depth[v] + 1;
                    tree_edge[i] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    // Signed count of a step a -> b along the cycle: +1 forward, -1 backward.
    let step = |a: usize, i: usize| -> i64 {
        if q.edge(i).tail == a {
            1
        } else {
            -1
        }
    };
    for (i, e) in q.edges().iter().enumerate() {
        if tree_edge[i] {
            continue;
        }
        // Cycle: tail -> head along the edge, then head back to tail in the tree.
        let mut balance = step(e.tail, i);
        let (mut a, mut b) = (e.head, e.tail);
        let mut up_from_a = 0i64;
        let mut down_to_b = 0i64;
        while a != b {
            if depth[a] >= depth[b] {
                up_from_a += step(a, parent_edge[a]);
                a = parent[a];
            } else {
                // Walking b upward; the cycle traverses these steps downward.
                down_to_b -= step(b, parent_edge[b]);
                b = parent[b];
            }
        }
        balance += up_from_a + down_to_b;
        if balance != 0 {
            return false;
        }
    }
    true
}
