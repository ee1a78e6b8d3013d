//! Exact-rational model of `DE(Q)` inside `R^{Q0}`.
//!
//! The polytope is the convex hull of the incidence-matrix columns
//! `ε_(v,w) = κ_{v} - κ_{w}`. Its dimension is available two ways: from the
//! combinatorial formula in [`dim_de`] and from linear algebra in
//! [`affine_dim`]. The two are checked against each other in the tests.

use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::quiver::{components, Edge, Quiver};
use crate::rank::find_rank_function;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("({0}, {1}) is not an edge of the quiver")]
    UnknownEdge(usize, usize),
}

/// A point of `R^{Q0}`, one exact coordinate per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalVector {
    coords: Vec<Rational>,
}

impl RationalVector {
    pub fn zero(n: usize) -> Self {
        RationalVector {
            coords: vec![Rational::zero(); n],
        }
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(values: I) -> Self {
        RationalVector {
            coords: values
                .into_iter()
                .map(|v| Rational::from_integer(v.into()))
                .collect(),
        }
    }

    pub fn from_coords(coords: Vec<Rational>) -> Self {
        RationalVector { coords }
    }

    /// The indicator vector `κ_V`.
    pub fn indicator(n: usize, members: &[usize]) -> Self {
        let mut v = Self::zero(n);
        for &i in members {
            v.coords[i] = Rational::one();
        }
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Rational {
        &self.coords[i]
    }

    /// The standard inner product.
    pub fn dot(&self, other: &RationalVector) -> Rational {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        self.coords
            .iter()
            .zip(&other.coords)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        RationalVector {
            coords: self.coords.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

impl Add for &RationalVector {
    type Output = RationalVector;

    fn add(self, rhs: &RationalVector) -> RationalVector {
        RationalVector {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &RationalVector {
    type Output = RationalVector;

    fn sub(self, rhs: &RationalVector) -> RationalVector {
        RationalVector {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

/// `ε_(v,w)`: +1 at the tail, -1 at the head.
pub fn edge_vector(q: &Quiver, e: Edge) -> Result<RationalVector, GeometryError> {
    if !q.contains_edge(e) {
        return Err(GeometryError::UnknownEdge(e.tail, e.head));
    }
    Ok(unchecked_edge_vector(q.vertex_count(), e))
}

pub(crate) fn unchecked_edge_vector(n: usize, e: Edge) -> RationalVector {
    let mut v = RationalVector::zero(n);
    v.coords[e.tail] = Rational::one();
    v.coords[e.head] = -Rational::one();
    v
}

/// All vertices of `DE(Q)`, in canonical edge order.
pub fn vertex_vectors(q: &Quiver) -> Vec<RationalVector> {
    q.edges()
        .iter()
        .map(|&e| unchecked_edge_vector(q.vertex_count(), e))
        .collect()
}

/// Dimension of the affine hull of a point set; `-1` for no points.
pub fn affine_dim(vectors: &[RationalVector]) -> i64 {
    if vectors.is_empty() {
        return -1;
    }
    // Rows are the homogenized points (x, 1); row rank equals column rank.
    let rows: Vec<Vec<BigInt>> = vectors
        .iter()
        .map(|v| {
            let mut row: Vec<Rational> = v.coords.clone();
            row.push(Rational::one());
            clear_denominators(&row)
        })
        .collect();
    bareiss_rank(rows) as i64 - 1
}

fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    row.iter().map(|r| r.numer() * (&lcm / r.denom())).collect()
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev_pivot = BigInt::one();
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                m[r][c] = v / &prev_pivot;
            }
            m[r][col] = BigInt::zero();
        }
        prev_pivot = m[rank][col].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// `dim DE(Q)` from connectivity and rank-function existence; `-1` when `Q`
/// has no edges.
pub fn dim_de(q: &Quiver) -> i64 {
    if q.edge_count() == 0 {
        return -1;
    }
    let c = (q.vertex_count() - components(q).len()) as i64;
    if find_rank_function(q).is_some() {
        c - 1
    } else {
        c
    }
}

/// The `{-1, 0, 1}` vertex-by-edge incidence matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i8>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> i8 {
        self.entries[row * self.cols + col]
    }

    pub fn column(&self, col: usize) -> Vec<i8> {
        (0..self.rows).map(|r| self.get(r, col)).collect()
    }

    /// Linear rank over the rationals.
    pub fn rank(&self) -> usize {
        let m = (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| BigInt::from(self.get(r, c)))
                    .collect()
            })
            .collect();
        bareiss_rank(m)
    }
}

pub fn incidence_matrix(q: &Quiver) -> IncidenceMatrix {
    let (rows, cols) = (q.vertex_count(), q.edge_count());
    let mut entries = vec![0i8; rows * cols];
    for (j, e) in q.edges().iter().enumerate() {
        entries[e.tail * cols + j] = 1;
        entries[e.head * cols + j] = -1;
    }
    IncidenceMatrix {
        rows,
        cols,
        entries,
    }
}
