use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::mask::EdgeMask;

/// All faces of a directed edge polytope, keyed by edge mask.
///
/// Includes the empty face (dimension -1) and the polytope itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceLattice {
    edge_count: usize,
    dim: i64,
    faces: BTreeMap<EdgeMask, i64>,
}

impl FaceLattice {
    /// A lattice holding just the improper faces.
    pub fn new(edge_count: usize, dim: i64) -> Self {
        let mut faces = BTreeMap::new();
        faces.insert(EdgeMask::empty(edge_count), -1);
        faces.insert(EdgeMask::full(edge_count), dim);
        FaceLattice {
            edge_count,
            dim,
            faces,
        }
    }

    /// Inserts a face; re-inserting an existing mask is a no-op.
    pub fn insert(&mut self, mask: EdgeMask, dim: i64) -> bool {
        assert_eq!(mask.universe(), self.edge_count);
        if self.faces.contains_key(&mask) {
            return false;
        }
        self.faces.insert(mask, dim);
        true
    }

    pub fn remove(&mut self, mask: &EdgeMask) -> Option<i64> {
        self.faces.remove(mask)
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Dimension of the whole polytope.
    pub fn dim(&self) -> i64 {
        self.dim
    }

    /// Number of faces, improper ones included.
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, mask: &EdgeMask) -> bool {
        self.faces.contains_key(mask)
    }

    pub fn dim_of(&self, mask: &EdgeMask) -> Option<i64> {
        self.faces.get(mask).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&EdgeMask, i64)> {
        self.faces.iter().map(|(m, &d)| (m, d))
    }

    pub fn faces_of_dim(&self, d: i64) -> Vec<&EdgeMask> {
        self.faces
            .iter()
            .filter(|(_, &fd)| fd == d)
            .map(|(m, _)| m)
            .collect()
    }

    /// Faces of dimension `dim - 1`.
    pub fn facets(&self) -> Vec<&EdgeMask> {
        if self.dim < 0 {
            return Vec::new();
        }
        self.faces_of_dim(self.dim - 1)
    }

    pub fn f_vector(&self) -> FVector {
        let len = self.dim.max(0) as usize;
        let mut counts = vec![0u64; len];
        for (_, d) in self.iter() {
            if d >= 0 && d < self.dim {
                counts[d as usize] += 1;
            }
        }
        FVector {
            dim: self.dim,
            counts,
        }
    }

    /// Whether the intersection of any two faces is again a face.
    pub fn is_closed_under_intersection(&self) -> bool {
        let masks: Vec<&EdgeMask> = self.faces.keys().collect();
        masks.iter().enumerate().all(|(i, a)| {
            masks[i + 1..]
                .iter()
                .all(|b| self.faces.contains_key(&a.intersection(b)))
        })
    }

    /// First mask at which the two lattices differ, with both dimensions.
    pub fn first_difference(&self, other: &FaceLattice) -> Option<(EdgeMask, Option<i64>, Option<i64>)> {
        let mut keys: Vec<&EdgeMask> = self.faces.keys().chain(other.faces.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().find_map(|k| {
            let (a, b) = (self.dim_of(k), other.dim_of(k));
            (a != b).then(|| (k.clone(), a, b))
        })
    }
}

/// Proper nonempty face counts by dimension: `counts[d]` is `f_d` for
/// `0 <= d < dim`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector {
    pub dim: i64,
    pub counts: Vec<u64>,
}

impl FVector {
    /// `Σ (-1)^i f_i` over the stored entries.
    pub fn euler_sum(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    /// Euler's relation `Σ (-1)^i f_i = 1 - (-1)^dim` for a nonempty polytope.
    pub fn satisfies_euler(&self) -> bool {
        if self.dim < 0 {
            return self.counts.is_empty();
        }
        let expected = if self.dim % 2 == 0 { 0 } else { 2 };
        self.euler_sum() == expected
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim {}; f =", self.dim)?;
        for c in &self.counts {
            write!(f, " {c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_matches_cli_format() {
        let f = FVector {
            dim: 3,
            counts: vec![8, 12, 6],
        };
        assert_eq!(f.to_string(), "dim 3; f = 8 12 6");
        assert!(f.satisfies_euler());
    }

    #[test]
    fn improper_faces_only() {
        let l = FaceLattice::new(1, 0);
        assert_eq!(l.len(), 2);
        assert_eq!(l.f_vector().counts, Vec::<u64>::new());
        assert_eq!(l.facets().len(), 1);
    }
}
