//! Faces of `DE(Q)`: facet tests, face tests, and face-lattice construction.
//!
//! Quivers with a rank function have a direct face criterion: a proper
//! lluf subquiver `R` gives a face exactly when each connected component of
//! `R` is full and the contraction `Q/R` is acyclic ([`is_face_ranked`]).
//! Other quivers are handled by taking facets of facets until nothing new
//! appears; every face of a face of `DE(Q)` is a face of `DE(Q)`, and each
//! face `DE(R)` is itself the directed edge polytope of `R`.

mod facets;
mod lattice;
mod symmetric;

use thiserror::Error;

pub use facets::{
    enumerate_facets, enumerate_facets_exhaustive, enumerate_facets_pruned,
    enumerate_facets_with, is_facet, FacetReason, FacetVerdict,
};
pub use lattice::{FVector, FaceLattice};
pub use symmetric::{higashitani_check, is_facet_symmetric, HigashitaniReject, SymmetricError};

use crate::geometry::dim_de;
use crate::mask::EdgeMask;
use crate::quiver::{contract, is_full, EdgeSubset, Quiver};
use crate::rank::find_rank_function;
use crate::Limits;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FaceError {
    #[error("the quiver has no rank function")]
    NoRankFunction,
}

/// Face test for quivers with a rank function.
pub fn is_face_ranked(q: &Quiver, r: &EdgeSubset<'_>) -> Result<bool, FaceError> {
    if find_rank_function(q).is_none() {
        return Err(FaceError::NoRankFunction);
    }
    Ok(ranked_face_test(r))
}

fn ranked_face_test(r: &EdgeSubset<'_>) -> bool {
    is_full(r, true) && contract(r).map(|c| c.is_acyclic()).unwrap_or(false)
}

/// Edge count up to which ranked quivers are scanned subset by subset.
const RANKED_SCAN_EDGES: usize = 24;

pub fn face_lattice(q: &Quiver) -> FaceLattice {
    face_lattice_with(q, &Limits::default())
}

pub fn face_lattice_with(q: &Quiver, limits: &Limits) -> FaceLattice {
    if find_rank_function(q).is_some() && q.edge_count() <= RANKED_SCAN_EDGES {
        ranked_lattice(q)
    } else {
        recursive_lattice(q, limits)
    }
}

/// Scans every proper edge subset with the ranked face test.
pub fn ranked_lattice(q: &Quiver) -> FaceLattice {
    let m = q.edge_count();
    assert!(m < 64, "ranked scan over {m} edges");
    let mut lattice = FaceLattice::new(m, dim_de(q));
    let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    for bits in 0..full {
        let r = q.subset(EdgeMask::from_bits(m, bits));
        if ranked_face_test(&r) {
            let d = dim_de(&r.to_quiver());
            lattice.insert(r.into_mask(), d);
        }
    }
    lattice
}

/// Closes `{Q}` under taking facets.
pub fn recursive_lattice(q: &Quiver, limits: &Limits) -> FaceLattice {
    let m = q.edge_count();
    let mut lattice = FaceLattice::new(m, dim_de(q));
    let mut pending = vec![EdgeMask::full(m)];
    while let Some(face) = pending.pop() {
        let positions: Vec<usize> = face.iter().collect();
        let sub = q.subquiver(&face);
        for facet in enumerate_facets_with(&sub, limits) {
            let lifted = EdgeMask::from_indices(m, facet.mask().iter().map(|i| positions[i]));
            if lattice.contains(&lifted) {
                continue;
            }
            let d = dim_de(&q.subquiver(&lifted));
            lattice.insert(lifted.clone(), d);
            pending.push(lifted);
        }
    }
    lattice
}

pub fn f_vector(q: &Quiver) -> FVector {
    face_lattice(q).f_vector()
}
