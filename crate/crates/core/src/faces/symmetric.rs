//! Facets of symmetric edge polytopes `SE(G) = DE(D(G))`.

use std::collections::VecDeque;

use thiserror::Error;

use crate::mask::EdgeMask;
use crate::quiver::{components, double, Edge, EdgeSubset, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmetricError {
    #[error("the subquiver's parent is not the double of the graph")]
    ParentNotDouble,
}

/// Facet test on `SE(G)` via a potential with prescribed differences.
///
/// Returns whether `r` keeps the component count of `D(G)` and some `ρ`
/// satisfies `ρ(v) - ρ(w) = 1` on kept edges `(v, w)`, `-1` when the reverse
/// is kept, `0` when neither is. When `G` has an edge this already forces `r`
/// to have facet dimension, so the answer agrees with [`is_facet`] on every
/// lluf subquiver of `D(G)`.
///
/// [`is_facet`]: crate::faces::is_facet
pub fn is_facet_symmetric(g: &Graph, r: &EdgeSubset<'_>) -> Result<bool, SymmetricError> {
    let dg = double(g);
    if r.parent() != &dg {
        return Err(SymmetricError::ParentNotDouble);
    }
    if g.edges().is_empty() {
        return Ok(false);
    }
    if r.components().len() != components(&dg).len() {
        return Ok(false);
    }
    let n = g.vertex_count();
    let mut constraints: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
    for &(a, b) in g.edges() {
        let forward = r.contains(Edge::new(a, b));
        let backward = r.contains(Edge::new(b, a));
        let diff = match (forward, backward) {
            (true, true) => return Ok(false),
            (true, false) => 1,
            (false, true) => -1,
            (false, false) => 0,
        };
        // ρ(a) - ρ(b) = diff
        constraints[a].push((b, -diff));
        constraints[b].push((a, diff));
    }
    Ok(solve_differences(&constraints).is_some())
}

/// Finds `ρ` with `ρ(w) = ρ(v) + d` for every `(w, d)` in `constraints[v]`.
fn solve_differences(constraints: &[Vec<(usize, i64)>]) -> Option<Vec<i64>> {
    let n = constraints.len();
    let mut rho: Vec<Option<i64>> = vec![None; n];
    for root in 0..n {
        if rho[root].is_some() {
            continue;
        }
        rho[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let rv = rho[v]?;
            for &(w, d) in &constraints[v] {
                match rho[w] {
                    None => {
                        rho[w] = Some(rv + d);
                        queue.push_back(w);
                    }
                    Some(rw) if rw != rv + d => return None,
                    Some(_) => {}
                }
            }
        }
    }
    rho.into_iter().collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HigashitaniReject {
    #[error("labeling has {actual} entries for {expected} vertices")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("the graph is not connected")]
    GraphDisconnected,
    #[error("edge {{{0}, {1}}} has a label gap of {2}")]
    GapTooLarge(usize, usize, i64),
    #[error("the edges with ρ(v) = ρ(w) + 1 do not form a connected spanning subgraph")]
    NotSpanning,
}

/// Validates an integer labeling of a connected graph and returns the edge
/// set `E^ρ = {(v, w) : ρ(v) = ρ(w) + 1}` as a mask over `double(g)`.
///
/// Accepted labelings are those with `|ρ(v) - ρ(w)| <= 1` on every edge whose
/// `E^ρ` is connected and spans `G`. Each such `E^ρ` is a facet of `SE(G)`;
/// `ρ` is the negative of a rank function of `E^ρ`.
pub fn higashitani_check(g: &Graph, rho: &[i64]) -> Result<EdgeMask, HigashitaniReject> {
    let n = g.vertex_count();
    if rho.len() != n {
        return Err(HigashitaniReject::LengthMismatch {
            expected: n,
            actual: rho.len(),
        });
    }
    if !g.is_connected() {
        return Err(HigashitaniReject::GraphDisconnected);
    }
    for &(a, b) in g.edges() {
        let gap = (rho[a] - rho[b]).abs();
        if gap > 1 {
            return Err(HigashitaniReject::GapTooLarge(a, b, gap));
        }
    }
    let dg = double(g);
    let mask = EdgeMask::from_indices(
        dg.edge_count(),
        dg.edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| rho[e.tail] == rho[e.head] + 1)
            .map(|(i, _)| i),
    );
    let e_rho = dg.subset(mask);
    if e_rho.components().len() != 1 {
        return Err(HigashitaniReject::NotSpanning);
    }
    Ok(e_rho.into_mask())
}
