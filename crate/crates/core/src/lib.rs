//! Faces of directed edge polytopes.
//!
//! For a finite quiver `Q` (a directed graph without loops or parallel edges)
//! the directed edge polytope `DE(Q)` is the convex hull of the vectors
//! `e_v - e_w` over all edges `(v, w)`. Every face is `DE(R)` for a lluf
//! subquiver `R`, so faces are named by edge subsets ([`EdgeMask`]).
//!
//! This crate decides dimensions, facets and full face lattices
//! combinatorially (through connectivity, rank functions and contractions),
//! and ships an independent exact-LP [`oracle`] to cross-check them.
//!
//! ```
//! use qface::{double, f_vector, Graph};
//!
//! let q = double(&Graph::cycle(4));
//! let f = f_vector(&q);
//! assert_eq!(f.dim, 3);
//! assert_eq!(f.counts, vec![8, 12, 6]);
//! ```

pub mod faces;
pub mod families;
pub mod geometry;
pub mod mask;
pub mod oracle;
pub mod quiver;
pub mod rank;

pub use faces::{
    enumerate_facets, f_vector, face_lattice, higashitani_check, is_face_ranked, is_facet,
    is_facet_symmetric, FVector, FaceLattice, FacetReason, FacetVerdict,
};
pub use geometry::{affine_dim, dim_de, edge_vector, incidence_matrix, Rational, RationalVector};
pub use mask::EdgeMask;
pub use quiver::{
    coconnectivity, components, contract, double, is_directed_acyclic, is_full,
    spanning_polyforest, ComponentDecomposition, ContractedQuiver, Edge, EdgeSubset, Graph,
    Quiver, QuiverError,
};
pub use rank::{check_cycle_balance, find_rank_function, RankFunction};

/// Default edge count up to which facets are found by exhaustive subset search.
pub const DEFAULT_EXHAUSTIVE_EDGES: usize = 16;
/// Default edge count up to which the brute-force oracle will run.
pub const DEFAULT_ORACLE_EDGES: usize = 14;
/// Environment variable overriding both limits.
pub const EDGE_LIMIT_VAR: &str = "QFACE_EDGE_LIMIT";

/// Size thresholds for the exponential parts of the library.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Quivers with at most this many edges get exhaustive facet search;
    /// larger ones use the pruned search.
    pub exhaustive_edges: usize,
    /// The brute-force oracle refuses quivers with more edges than this.
    pub oracle_edges: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            exhaustive_edges: DEFAULT_EXHAUSTIVE_EDGES,
            oracle_edges: DEFAULT_ORACLE_EDGES,
        }
    }
}

impl Limits {
    /// Defaults, with both limits replaced by `QFACE_EDGE_LIMIT` when it is set
    /// to an integer.
    pub fn from_env() -> Self {
        match std::env::var(EDGE_LIMIT_VAR).ok().and_then(|v| v.trim().parse().ok()) {
            Some(n) => Limits {
                exhaustive_edges: n,
                oracle_edges: n,
            },
            None => Limits::default(),
        }
    }
}
