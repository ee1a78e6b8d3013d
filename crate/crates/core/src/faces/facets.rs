//! Facet decision and enumeration.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::geometry::dim_de;
use crate::mask::EdgeMask;
use crate::quiver::{components, contract, is_full, EdgeSubset, Quiver};
use crate::rank::find_rank_function;
use crate::Limits;

/// Which facet condition held, or which check failed first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FacetReason {
    /// One more component than `Q`, every component full, `Q/R` acyclic.
    AcyclicContraction,
    /// Same components as `Q`, and the rank function of `R` gives every
    /// excluded edge a nonzero defect of one common sign.
    SignConsistentRank,
    WrongDimension { expected: i64, actual: i64 },
    ComponentCount { quiver: usize, subquiver: usize },
    NotComponentwiseFull,
    CyclicContraction,
    SubquiverUnranked,
    /// An excluded edge has `ρ(v) - ρ(w) + 1 = 0`.
    ZeroDefect,
    MixedSigns,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetVerdict {
    pub is_facet: bool,
    pub reason: FacetReason,
}

impl FacetVerdict {
    fn yes(reason: FacetReason) -> Self {
        FacetVerdict {
            is_facet: true,
            reason,
        }
    }

    fn no(reason: FacetReason) -> Self {
        FacetVerdict {
            is_facet: false,
            reason,
        }
    }
}

/// Precomputed data about `Q` shared by many facet tests.
struct FacetContext<'q> {
    q: &'q Quiver,
    dim: i64,
    component_count: usize,
}

impl<'q> FacetContext<'q> {
    fn new(q: &'q Quiver) -> Self {
        FacetContext {
            q,
            dim: dim_de(q),
            component_count: components(q).len(),
        }
    }

    fn check(&self, r: &EdgeSubset<'_>) -> FacetVerdict {
        let actual = dim_de(&r.to_quiver());
        if actual != self.dim - 1 {
            return FacetVerdict::no(FacetReason::WrongDimension {
                expected: self.dim - 1,
                actual,
            });
        }
        let sub_components = r.components().len();
        if sub_components == self.component_count + 1 {
            if !is_full(r, true) {
                return FacetVerdict::no(FacetReason::NotComponentwiseFull);
            }
            let contracted = contract(r).expect("fullness checked above");
            if contracted.is_acyclic() {
                FacetVerdict::yes(FacetReason::AcyclicContraction)
            } else {
                FacetVerdict::no(FacetReason::CyclicContraction)
            }
        } else if sub_components == self.component_count {
            // Every excluded edge lies inside one component of R, so the
            // defect does not depend on the per-component normalization.
            let Some(rho) = find_rank_function(&r.to_quiver()) else {
                return FacetVerdict::no(FacetReason::SubquiverUnranked);
            };
            let mut sign = 0i64;
            for (i, &e) in self.q.edges().iter().enumerate() {
                if r.mask().contains(i) {
                    continue;
                }
                let s = rho.defect(e).signum();
                if s == 0 {
                    return FacetVerdict::no(FacetReason::ZeroDefect);
                }
                if sign != 0 && s != sign {
                    return FacetVerdict::no(FacetReason::MixedSigns);
                }
                sign = s;
            }
            FacetVerdict::yes(FacetReason::SignConsistentRank)
        } else {
            FacetVerdict::no(FacetReason::ComponentCount {
                quiver: self.component_count,
                subquiver: sub_components,
            })
        }
    }
}

/// Decides whether `DE(r)` is a facet of `DE(q)`.
pub fn is_facet(q: &Quiver, r: &EdgeSubset<'_>) -> FacetVerdict {
    assert!(std::ptr::eq(q, r.parent()) || q == r.parent(), "r must be a subquiver of q");
    FacetContext::new(q).check(r)
}

/// All facets of `DE(q)`, ordered by mask, using the default limits.
pub fn enumerate_facets(q: &Quiver) -> Vec<EdgeSubset<'_>> {
    enumerate_facets_with(q, &Limits::default())
}

/// Exhaustive search for quivers within `limits.exhaustive_edges`, pruned
/// search beyond.
pub fn enumerate_facets_with<'q>(q: &'q Quiver, limits: &Limits) -> Vec<EdgeSubset<'q>> {
    if q.edge_count() <= limits.exhaustive_edges.min(MAX_EXHAUSTIVE) {
        enumerate_facets_exhaustive(q)
    } else {
        enumerate_facets_pruned(q)
    }
}

const MAX_EXHAUSTIVE: usize = 40;

/// Tests every edge subset. Panics beyond 40 edges.
pub fn enumerate_facets_exhaustive(q: &Quiver) -> Vec<EdgeSubset<'_>> {
    let m = q.edge_count();
    assert!(m <= MAX_EXHAUSTIVE, "exhaustive facet search over {m} edges");
    let ctx = FacetContext::new(q);
    if ctx.dim < 0 {
        return Vec::new();
    }
    // A (dim - 1)-dimensional face needs at least dim vertices.
    let min_size = ctx.dim.max(0) as u32;
    (0..1u64 << m)
        .filter(|bits| bits.count_ones() >= min_size)
        .map(|bits| q.subset(EdgeMask::from_bits(m, bits)))
        .filter(|r| ctx.check(r).is_facet)
        .collect()
}

/// Generates only candidates of the two facet shapes and confirms each with
/// the facet test.
///
/// One extra component: some component of `Q` splits into vertex sets `A`,
/// `B` with every crossing edge directed `A -> B`; the candidate drops the
/// crossing edges. Same components: `R` is the set of edges ranked by an
/// integer potential `ρ` whose defect `ρ(v) - ρ(w) + 1` has one sign on every
/// edge; potentials are searched component by component.
pub fn enumerate_facets_pruned(q: &Quiver) -> Vec<EdgeSubset<'_>> {
    let ctx = FacetContext::new(q);
    if ctx.dim < 0 {
        return Vec::new();
    }
    let comps = components(q);
    let mut found: BTreeSet<EdgeMask> = BTreeSet::new();
    let m = q.edge_count();

    for comp in comps.components() {
        let k = comp.len();
        if k < 2 {
            continue;
        }
        assert!(k <= 40, "component of {k} vertices is too large to split");
        let mut side = vec![false; q.vertex_count()];
        // Keep comp[0] on side A; B is the other side and may be the source.
        for bits in 0..(1u64 << (k - 1)) {
            for (j, &v) in comp.iter().enumerate() {
                side[v] = j == 0 || bits & (1 << (j - 1)) != 0;
            }
            if comp.iter().all(|&v| side[v]) {
                continue;
            }
            let mut a_to_b = false;
            let mut b_to_a = false;
            let mut mask = EdgeMask::full(m);
            for (i, e) in q.edges().iter().enumerate() {
                if comps.component_of(e.tail) != comps.component_of(comp[0]) {
                    continue;
                }
                match (side[e.tail], side[e.head]) {
                    (true, false) => a_to_b = true,
                    (false, true) => b_to_a = true,
                    _ => continue,
                }
                mask.remove(i);
            }
            if a_to_b && b_to_a {
                continue;
            }
            if ctx.check(&q.subset(mask.clone())).is_facet {
                found.insert(mask);
            }
        }
    }

    if ctx.dim == (q.vertex_count() - comps.len()) as i64 {
        for sign in [1i64, -1] {
            let mut partial: Vec<EdgeMask> = vec![EdgeMask::empty(m)];
            for comp in comps.components() {
                let sub = ranked_edge_sets(q, comp, sign);
                let mut next = Vec::new();
                for base in &partial {
                    for s in &sub {
                        let mut merged = base.clone();
                        for i in s.iter() {
                            merged.insert(i);
                        }
                        next.push(merged);
                    }
                }
                partial = next;
                if partial.is_empty() {
                    break;
                }
            }
            for mask in partial {
                if ctx.check(&q.subset(mask.clone())).is_facet {
                    found.insert(mask);
                }
            }
        }
    }

    found.into_iter().map(|mask| q.subset(mask)).collect()
}

/// Edge sets `E ⊂ Q1` inside `comp` of the form `{(v,w) : ρ(w) = ρ(v) + 1}`
/// that connect `comp`, over integer potentials with `sign · (ρ(v) - ρ(w) + 1)
/// >= 0` on every edge of `comp`.
fn ranked_edge_sets(q: &Quiver, comp: &[usize], sign: i64) -> Vec<EdgeMask> {
    let m = q.edge_count();
    let k = comp.len();
    if k == 1 {
        return vec![EdgeMask::empty(m)];
    }
    let n = q.vertex_count();
    // Neighbors with orientation: (other, edge index, true if v is the tail).
    let mut adjacency: Vec<Vec<(usize, usize, bool)>> = vec![Vec::new(); n];
    for (i, e) in q.edges().iter().enumerate() {
        adjacency[e.tail].push((e.head, i, true));
        adjacency[e.head].push((e.tail, i, false));
    }
    // BFS order from comp[0]: every later vertex has an earlier neighbor.
    let mut order = vec![comp[0]];
    let mut position = vec![usize::MAX; n];
    position[comp[0]] = 0;
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &(w, _, _) in &adjacency[v] {
            if position[w] == usize::MAX {
                position[w] = order.len();
                order.push(w);
            }
        }
    }
    debug_assert_eq!(order.len(), k);

    let mut search = PotentialSearch {
        adjacency: &adjacency,
        order: &order,
        position: &position,
        sign,
        bound: k as i64 - 1,
        rho: vec![0; n],
        out: Vec::new(),
        m,
    };
    search.rho[comp[0]] = 0;
    search.descend(1);
    search.out
}

struct PotentialSearch<'a> {
    adjacency: &'a [Vec<(usize, usize, bool)>],
    order: &'a [usize],
    position: &'a [usize],
    sign: i64,
    bound: i64,
    rho: Vec<i64>,
    out: Vec<EdgeMask>,
    m: usize,
}

impl PotentialSearch<'_> {
    fn descend(&mut self, depth: usize) {
        if depth == self.order.len() {
            self.emit();
            return;
        }
        let u = self.order[depth];
        let (mut lo, mut hi) = (-self.bound, self.bound);
        for &(x, _, u_is_tail) in &self.adjacency[u] {
            if self.position[x] >= depth {
                continue;
            }
            let rx = self.rho[x];
            // Edge (u, x) when u is the tail, (x, u) otherwise.
            match (u_is_tail, self.sign > 0) {
                (true, true) => lo = lo.max(rx - 1),
                (true, false) => hi = hi.min(rx - 1),
                (false, true) => hi = hi.min(rx + 1),
                (false, false) => lo = lo.max(rx + 1),
            }
        }
        for value in lo..=hi {
            self.rho[u] = value;
            if self.completed_vertices_ranked(u, depth) {
                self.descend(depth + 1);
            }
        }
    }

    /// Every vertex whose neighbors are all assigned must meet a ranked edge.
    fn completed_vertices_ranked(&self, u: usize, depth: usize) -> bool {
        let done = |v: usize| {
            self.adjacency[v]
                .iter()
                .all(|&(w, _, _)| self.position[w] <= depth)
        };
        let has_ranked = |v: usize| {
            self.adjacency[v].iter().any(|&(w, _, v_is_tail)| {
                let (t, h) = if v_is_tail { (v, w) } else { (w, v) };
                self.rho[h] == self.rho[t] + 1
            })
        };
        std::iter::once(u)
            .chain(
                self.adjacency[u]
                    .iter()
                    .map(|&(w, _, _)| w)
                    .filter(|&w| self.position[w] < depth),
            )
            .all(|v| !done(v) || has_ranked(v))
    }

    fn emit(&mut self) {
        let mut mask = EdgeMask::empty(self.m);
        let mut parent: Vec<usize> = (0..self.order.len()).collect();
        let local = |v: usize| self.position[v];
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        let mut joined = 0;
        for &v in self.order {
            for &(w, idx, v_is_tail) in &self.adjacency[v] {
                if !v_is_tail {
                    continue;
                }
                if self.rho[w] == self.rho[v] + 1 {
                    mask.insert(idx);
                    let (a, b) = (find(&mut parent, local(v)), find(&mut parent, local(w)));
                    if a != b {
                        parent[a] = b;
                        joined += 1;
                    }
                }
            }
        }
        if joined + 1 == self.order.len() {
            self.out.push(mask);
        }
    }
}
