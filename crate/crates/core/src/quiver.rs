//! Quivers, lluf subquivers, connectivity, contraction and doubles.
//!
//! A [`Quiver`] is a finite directed graph without loops or parallel edges.
//! Vertices carry opaque string ids; internally they are numbered in order of
//! first appearance. Edges are kept sorted by `(tail, head)` index so that an
//! [`EdgeMask`] over a quiver is a stable, hashable name for a subquiver.

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::mask::EdgeMask;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("loop edge at vertex {0:?}")]
    LoopEdge(String),
    #[error("duplicate edge ({0:?}, {1:?})")]
    DuplicateEdge(String, String),
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
    #[error("edge endpoint {0:?} is not a vertex")]
    UnknownVertex(String),
    #[error("some connected component of the subquiver is not full in the parent")]
    NotComponentwiseFull,
}

/// A directed edge, as a pair of vertex indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
}

impl Edge {
    pub fn new(tail: usize, head: usize) -> Self {
        Edge { tail, head }
    }

    pub fn reversed(self) -> Self {
        Edge::new(self.head, self.tail)
    }
}

/// A finite quiver without loops and multiedges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    names: Vec<String>,
    edges: Vec<Edge>,
    lookup: HashMap<Edge, usize>,
}

impl Quiver {
    /// Builds a quiver from explicit vertex ids and edges given by id.
    pub fn new<V, E, S>(vertices: V, edges: E) -> Result<Self, QuiverError>
    where
        V: IntoIterator<Item = S>,
        E: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let mut names = Vec::new();
        let mut index = HashMap::new();
        for v in vertices {
            let v = v.as_ref().to_string();
            if index.insert(v.clone(), names.len()).is_some() {
                return Err(QuiverError::DuplicateVertex(v));
            }
            names.push(v);
        }
        let mut indexed = Vec::new();
        for (t, h) in edges {
            let (t, h) = (t.as_ref(), h.as_ref());
            let ti = *index
                .get(t)
                .ok_or_else(|| QuiverError::UnknownVertex(t.to_string()))?;
            let hi = *index
                .get(h)
                .ok_or_else(|| QuiverError::UnknownVertex(h.to_string()))?;
            indexed.push(Edge::new(ti, hi));
        }
        Self::from_parts(names, indexed)
    }

    /// Builds a quiver from edges given by id; vertices are the endpoints in
    /// order of first appearance.
    pub fn from_edge_list<E, S>(edges: E) -> Result<Self, QuiverError>
    where
        E: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let mut names: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut intern = |s: &str| -> usize {
            if let Some(&i) = index.get(s) {
                return i;
            }
            index.insert(s.to_string(), names.len());
            names.push(s.to_string());
            names.len() - 1
        };
        let mut indexed = Vec::new();
        for (t, h) in edges {
            let ti = intern(t.as_ref());
            let hi = intern(h.as_ref());
            indexed.push(Edge::new(ti, hi));
        }
        Self::from_parts(names, indexed)
    }

    /// Vertices `"0"`, …, `"n-1"` and edges given by index pairs.
    pub fn with_vertex_count(n: usize, edges: &[(usize, usize)]) -> Result<Self, QuiverError> {
        let names = (0..n).map(|i| i.to_string()).collect();
        for &(t, h) in edges {
            if t >= n || h >= n {
                return Err(QuiverError::UnknownVertex(t.max(h).to_string()));
            }
        }
        Self::from_parts(names, edges.iter().map(|&(t, h)| Edge::new(t, h)).collect())
    }

    fn from_parts(names: Vec<String>, mut edges: Vec<Edge>) -> Result<Self, QuiverError> {
        for e in &edges {
            if e.tail == e.head {
                return Err(QuiverError::LoopEdge(names[e.tail].clone()));
            }
        }
        edges.sort();
        for pair in edges.windows(2) {
            if pair[0] == pair[1] {
                return Err(QuiverError::DuplicateEdge(
                    names[pair[0].tail].clone(),
                    names[pair[0].head].clone(),
                ));
            }
        }
        let lookup = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        Ok(Quiver {
            names,
            edges,
            lookup,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Edges in canonical `(tail, head)` order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> Edge {
        self.edges[i]
    }

    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.lookup.get(&e).copied()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.lookup.contains_key(&e)
    }

    /// Looks up an edge by vertex ids.
    pub fn find_edge(&self, tail: &str, head: &str) -> Option<usize> {
        let t = self.vertex_index(tail)?;
        let h = self.vertex_index(head)?;
        self.edge_index(Edge::new(t, h))
    }

    /// `true` iff `(v, w)` in Q1 implies `(w, v)` not in Q1.
    pub fn is_asymmetric(&self) -> bool {
        self.edges.iter().all(|e| !self.contains_edge(e.reversed()))
    }

    pub fn is_symmetric(&self) -> bool {
        self.edges.iter().all(|e| self.contains_edge(e.reversed()))
    }

    pub fn full_subset(&self) -> EdgeSubset<'_> {
        EdgeSubset::new(self, EdgeMask::full(self.edge_count()))
    }

    pub fn empty_subset(&self) -> EdgeSubset<'_> {
        EdgeSubset::new(self, EdgeMask::empty(self.edge_count()))
    }

    pub fn subset(&self, mask: EdgeMask) -> EdgeSubset<'_> {
        EdgeSubset::new(self, mask)
    }

    /// The lluf subquiver with the given edges (by index).
    pub fn subquiver(&self, mask: &EdgeMask) -> Quiver {
        assert_eq!(mask.universe(), self.edge_count());
        let edges: Vec<Edge> = mask.iter().map(|i| self.edges[i]).collect();
        let lookup = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        Quiver {
            names: self.names.clone(),
            edges,
            lookup,
        }
    }

    /// Same quiver with vertices renumbered so that ids sort naturally:
    /// numerically when every id is an integer, lexicographically otherwise.
    pub fn canonicalize(&self) -> Quiver {
        let numeric: Option<Vec<i128>> = self.names.iter().map(|n| n.parse().ok()).collect();
        let mut order: Vec<usize> = (0..self.vertex_count()).collect();
        match numeric {
            Some(nums) => order.sort_by_key(|&i| nums[i]),
            None => order.sort_by(|&a, &b| self.names[a].cmp(&self.names[b])),
        }
        self.relabel(&order)
    }

    /// Renumbers vertices: new vertex `i` is old vertex `order[i]`.
    pub fn relabel(&self, order: &[usize]) -> Quiver {
        assert_eq!(order.len(), self.vertex_count());
        let mut new_index = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        let names = order.iter().map(|&old| self.names[old].clone()).collect();
        let edges = self
            .edges
            .iter()
            .map(|e| Edge::new(new_index[e.tail], new_index[e.head]))
            .collect();
        Self::from_parts(names, edges).expect("relabeling preserves validity")
    }

    pub fn is_acyclic(&self) -> bool {
        is_directed_acyclic(self)
    }
}

/// A lluf subquiver, identified by a subset of the parent's edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSubset<'q> {
    parent: &'q Quiver,
    mask: EdgeMask,
}

impl<'q> EdgeSubset<'q> {
    pub fn new(parent: &'q Quiver, mask: EdgeMask) -> Self {
        assert_eq!(
            mask.universe(),
            parent.edge_count(),
            "mask universe does not match parent edge count"
        );
        EdgeSubset { parent, mask }
    }

    /// Subset given by vertex-id pairs; `None` if some pair is not an edge.
    pub fn from_pairs<S: AsRef<str>>(parent: &'q Quiver, pairs: &[(S, S)]) -> Option<Self> {
        let mut mask = EdgeMask::empty(parent.edge_count());
        for (t, h) in pairs {
            mask.insert(parent.find_edge(t.as_ref(), h.as_ref())?);
        }
        Some(EdgeSubset { parent, mask })
    }

    pub fn parent(&self) -> &'q Quiver {
        self.parent
    }

    pub fn mask(&self) -> &EdgeMask {
        &self.mask
    }

    pub fn into_mask(self) -> EdgeMask {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count()
    }

    pub fn is_empty(&self) -> bool {
        self.mask.is_empty()
    }

    /// `R1` is a proper subset of `Q1`.
    pub fn is_proper(&self) -> bool {
        !self.mask.is_full()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.mask.iter().map(|i| self.parent.edge(i))
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.parent
            .edge_index(e)
            .is_some_and(|i| self.mask.contains(i))
    }

    /// The subquiver as a standalone quiver on all parent vertices.
    pub fn to_quiver(&self) -> Quiver {
        self.parent.subquiver(&self.mask)
    }

    pub fn components(&self) -> ComponentDecomposition {
        ComponentDecomposition::from_edges(self.parent.vertex_count(), self.edges())
    }
}

/// Partition of the vertices into undirected-connected classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    components: Vec<Vec<usize>>,
    component_of: Vec<usize>,
}

impl ComponentDecomposition {
    fn from_edges(n: usize, edges: impl Iterator<Item = Edge>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for e in edges {
            adjacency[e.tail].push(e.head);
            adjacency[e.head].push(e.tail);
        }
        let mut component_of = vec![usize::MAX; n];
        let mut components = Vec::new();
        for start in 0..n {
            if component_of[start] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut members = vec![start];
            component_of[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &adjacency[v] {
                    if component_of[w] == usize::MAX {
                        component_of[w] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        ComponentDecomposition {
            components,
            component_of,
        }
    }

    /// Components, each sorted; ordered by smallest member.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.component_of[v]
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn same_component(&self, v: usize, w: usize) -> bool {
        self.component_of[v] == self.component_of[w]
    }
}

pub fn components(q: &Quiver) -> ComponentDecomposition {
    ComponentDecomposition::from_edges(q.vertex_count(), q.edges().iter().copied())
}

/// `c(Q) = |Q0| - |π0(Q)|`.
pub fn coconnectivity(q: &Quiver) -> usize {
    q.vertex_count() - components(q).len()
}

/// Fullness of a lluf subquiver.
///
/// With `component_restricted` set, asks whether every connected component of
/// `r` contains every parent edge between its own vertices. Without it, asks
/// whether `r` itself is full, which for a lluf subquiver means `r = Q`.
pub fn is_full(r: &EdgeSubset<'_>, component_restricted: bool) -> bool {
    if !component_restricted {
        return r.mask().is_full();
    }
    let comps = r.components();
    r.parent()
        .edges()
        .iter()
        .enumerate()
        .all(|(i, e)| !comps.same_component(e.tail, e.head) || r.mask().contains(i))
}

/// Anything with numbered nodes and directed arcs.
pub trait DirectedGraph {
    fn node_count(&self) -> usize;
    fn arcs(&self) -> Vec<(usize, usize)>;
}

impl DirectedGraph for Quiver {
    fn node_count(&self) -> usize {
        self.vertex_count()
    }

    fn arcs(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|e| (e.tail, e.head)).collect()
    }
}

/// `true` iff there is no directed cycle. A loop counts as a cycle.
pub fn is_directed_acyclic<G: DirectedGraph + ?Sized>(g: &G) -> bool {
    let n = g.node_count();
    let arcs = g.arcs();
    let mut indegree = vec![0usize; n];
    let mut out = vec![Vec::new(); n];
    for &(a, b) in &arcs {
        if a == b {
            return false;
        }
        indegree[b] += 1;
        out[a].push(b);
    }
    let mut ready: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
    let mut removed = 0;
    while let Some(v) = ready.pop() {
        removed += 1;
        for &w in &out[v] {
            indegree[w] -= 1;
            if indegree[w] == 0 {
                ready.push(w);
            }
        }
    }
    removed == n
}

/// The quiver `Q/R` obtained by collapsing each connected component of `R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractedQuiver {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl ContractedQuiver {
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    /// Deduplicated class-level edges, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_acyclic(&self) -> bool {
        is_directed_acyclic(self)
    }
}

impl DirectedGraph for ContractedQuiver {
    fn node_count(&self) -> usize {
        self.classes.len()
    }

    fn arcs(&self) -> Vec<(usize, usize)> {
        self.edges.clone()
    }
}

/// Contracts `r` in its parent. Every component of `r` must be full.
pub fn contract(r: &EdgeSubset<'_>) -> Result<ContractedQuiver, QuiverError> {
    if !is_full(r, true) {
        return Err(QuiverError::NotComponentwiseFull);
    }
    let comps = r.components();
    let mut edges: Vec<(usize, usize)> = r
        .parent()
        .edges()
        .iter()
        .enumerate()
        .filter(|(i, _)| !r.mask().contains(*i))
        .map(|(_, e)| (comps.component_of(e.tail), comps.component_of(e.head)))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    Ok(ContractedQuiver {
        classes: comps.components.clone(),
        class_of: comps.component_of.clone(),
        edges,
    })
}

/// A finite simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Vertices `"0"`, …, `"n-1"`. Each undirected edge may be listed once or
    /// in both orientations; it is stored once.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, QuiverError> {
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let mut stored = Vec::new();
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(QuiverError::UnknownVertex(a.max(b).to_string()));
            }
            if a == b {
                return Err(QuiverError::LoopEdge(names[a].clone()));
            }
            stored.push((a.min(b), a.max(b)));
        }
        stored.sort_unstable();
        stored.dedup();
        Ok(Graph {
            names,
            edges: stored,
        })
    }

    pub fn path(vertices: usize) -> Self {
        let edges: Vec<_> = (1..vertices).map(|i| (i - 1, i)).collect();
        Graph::new(vertices, &edges).expect("path is simple")
    }

    pub fn cycle(m: usize) -> Self {
        assert!(m >= 3, "a cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..m).map(|i| (i, (i + 1) % m)).collect();
        Graph::new(m, &edges).expect("cycle is simple")
    }

    pub fn complete(m: usize) -> Self {
        let edges: Vec<_> = (0..m)
            .flat_map(|a| (a + 1..m).map(move |b| (a, b)))
            .collect();
        Graph::new(m, &edges).expect("complete graph is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    /// Undirected edges as `(smaller, larger)` pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn without_edge(&self, a: usize, b: usize) -> Self {
        let key = (a.min(b), a.max(b));
        let edges: Vec<_> = self.edges.iter().copied().filter(|&e| e != key).collect();
        Graph {
            names: self.names.clone(),
            edges,
        }
    }

    pub fn is_connected(&self) -> bool {
        let q = double(self);
        components(&q).len() <= 1
    }
}

/// `D(G)`: both orientations of every undirected edge.
pub fn double(g: &Graph) -> Quiver {
    let edges: Vec<Edge> = g
        .edges
        .iter()
        .flat_map(|&(a, b)| [Edge::new(a, b), Edge::new(b, a)])
        .collect();
    Quiver::from_parts(g.names.clone(), edges).expect("double of a simple graph is a quiver")
}

/// Greedy spanning polyforest: scans edges in canonical order and keeps each
/// edge that joins two different trees.
pub fn spanning_polyforest(q: &Quiver) -> EdgeSubset<'_> {
    let mut parent: Vec<usize> = (0..q.vertex_count()).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    let mut mask = EdgeMask::empty(q.edge_count());
    for (i, e) in q.edges().iter().enumerate() {
        let (a, b) = (find(&mut parent, e.tail), find(&mut parent, e.head));
        if a != b {
            parent[a] = b;
            mask.insert(i);
        }
    }
    EdgeSubset::new(q, mask)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: usize, edges: &[(usize, usize)]) -> Quiver {
        Quiver::with_vertex_count(n, edges).unwrap()
    }

    fn diamond() -> Quiver {
        q(4, &[(0, 1), (0, 2), (1, 3), (2, 3)])
    }

    fn sub<'a>(parent: &'a Quiver, pairs: &[(usize, usize)]) -> EdgeSubset<'a> {
        let mask = EdgeMask::from_indices(
            parent.edge_count(),
            pairs
                .iter()
                .map(|&(t, h)| parent.edge_index(Edge::new(t, h)).unwrap()),
        );
        parent.subset(mask)
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(matches!(
            Quiver::from_edge_list([("0", "0")]),
            Err(QuiverError::LoopEdge(_))
        ));
        assert!(matches!(
            Quiver::from_edge_list([("0", "1"), ("0", "1")]),
            Err(QuiverError::DuplicateEdge(..))
        ));
        assert!(matches!(
            Quiver::new(["a"], [("a", "b")]),
            Err(QuiverError::UnknownVertex(_))
        ));
    }

    #[test]
    fn vertex_order_follows_first_appearance() {
        let q = Quiver::from_edge_list([("b", "a"), ("a", "c")]).unwrap();
        assert_eq!(q.vertex_names(), ["b", "a", "c"]);
        assert_eq!(q.edges(), [Edge::new(0, 1), Edge::new(1, 2)]);
    }

    #[test]
    fn components_examples() {
        assert_eq!(components(&q(3, &[(0, 1), (1, 2)])).len(), 1);
        let c = components(&q(3, &[(0, 1)]));
        assert_eq!(c.components(), [vec![0, 1], vec![2]]);
        let dc4 = double(&Graph::cycle(4));
        assert_eq!(components(&dc4).components(), [vec![0, 1, 2, 3]]);
    }

    #[test]
    fn coconnectivity_examples() {
        assert_eq!(coconnectivity(&q(3, &[(0, 1), (1, 2)])), 2);
        assert_eq!(coconnectivity(&q(3, &[])), 0);
        assert_eq!(coconnectivity(&double(&Graph::cycle(4))), 3);
    }

    #[test]
    fn fullness_examples() {
        let path = q(3, &[(0, 1), (1, 2)]);
        assert!(is_full(&sub(&path, &[(0, 1)]), true));
        let two = q(2, &[(0, 1), (1, 0)]);
        assert!(!is_full(&sub(&two, &[(0, 1)]), true));
        let d = diamond();
        assert!(is_full(&sub(&d, &[(0, 1), (2, 3)]), true));
        assert!(!is_full(&sub(&d, &[(0, 1), (2, 3)]), false));
        assert!(is_full(&d.full_subset(), false));
    }

    #[test]
    fn acyclicity_examples() {
        assert!(!q(3, &[(0, 1), (1, 2), (2, 0)]).is_acyclic());
        assert!(q(3, &[(0, 1), (1, 2)]).is_acyclic());
        assert!(!double(&Graph::path(2)).is_acyclic());
    }

    #[test]
    fn contraction_of_diamond() {
        let d = diamond();
        let c = contract(&sub(&d, &[(0, 1), (2, 3)])).unwrap();
        assert_eq!(c.classes(), [vec![0, 1], vec![2, 3]]);
        assert_eq!(c.edges(), [(0, 1)]);
        assert!(c.is_acyclic());

        let all = contract(&d.full_subset()).unwrap();
        assert_eq!(all.classes().len(), 1);
        assert!(all.edges().is_empty());

        let c = contract(&sub(&d, &[(0, 1), (1, 3)])).unwrap();
        assert_eq!(c.classes(), [vec![0, 1, 3], vec![2]]);
        assert_eq!(c.edges(), [(0, 1), (1, 0)]);
        assert!(!c.is_acyclic());
    }

    #[test]
    fn contraction_requires_full_components() {
        let two = q(2, &[(0, 1), (1, 0)]);
        assert_eq!(
            contract(&sub(&two, &[(0, 1)])),
            Err(QuiverError::NotComponentwiseFull)
        );
    }

    #[test]
    fn doubles() {
        assert_eq!(double(&Graph::cycle(3)).edge_count(), 6);
        let e = double(&Graph::path(2));
        assert_eq!(e.edges(), [Edge::new(0, 1), Edge::new(1, 0)]);
        assert_eq!(double(&Graph::complete(4)).edge_count(), 12);
        assert!(matches!(
            Graph::new(2, &[(1, 1)]),
            Err(QuiverError::LoopEdge(_))
        ));
    }

    #[test]
    fn polyforest_examples() {
        let path = q(3, &[(0, 1), (1, 2)]);
        assert!(spanning_polyforest(&path).mask().is_full());
        let dc3 = double(&Graph::cycle(3));
        let f = spanning_polyforest(&dc3);
        assert_eq!(f.len(), 2);
        let undirected: std::collections::BTreeSet<_> = f
            .edges()
            .map(|e| (e.tail.min(e.head), e.tail.max(e.head)))
            .collect();
        assert_eq!(undirected.len(), 2);
        assert!(spanning_polyforest(&q(3, &[])).is_empty());
    }

    #[test]
    fn canonicalize_sorts_numeric_ids() {
        let a = Quiver::from_edge_list([("10", "2"), ("2", "1")]).unwrap();
        let c = a.canonicalize();
        assert_eq!(c.vertex_names(), ["1", "2", "10"]);
        assert_eq!(c.edges(), [Edge::new(1, 0), Edge::new(2, 1)]);
    }
}
