//! Ground truth for face questions, independent of the combinatorial theory.
//!
//! An edge subset `s` is the vertex set of a face of `DE(Q)` exactly when some
//! functional `c` and offset `b` satisfy
//!
//! ```text
//! ⟨c, ε_e⟩ = b        for e in s
//! b - ⟨c, ε_e⟩ >= 1   for e not in s
//! ```
//!
//! (the slack of 1 is no loss of generality because the system is
//! homogeneous). This module decides that system with an exact LP and
//! returns the pair as a [`SupportCertificate`]. It looks only at the edge
//! vectors: no rank functions, components or contractions.

mod lp;

use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use lp::{LpProblem, LpRow};

use crate::faces::FaceLattice;
use crate::geometry::{affine_dim, dim_de, unchecked_edge_vector, Rational, RationalVector};
use crate::mask::EdgeMask;
use crate::quiver::{EdgeSubset, Quiver};
use crate::Limits;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{edges} edges exceed the oracle limit of {limit}")]
    TooLarge { edges: usize, limit: usize },
}

/// A supporting hyperplane `⟨c, x⟩ = b` that cuts out a face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportCertificate {
    pub normal: RationalVector,
    pub offset: Rational,
}

impl SupportCertificate {
    /// Re-checks the certificate by direct evaluation: equality on `s`,
    /// slack at least 1 off `s`.
    pub fn validate(&self, q: &Quiver, s: &EdgeMask) -> bool {
        if self.normal.dim() != q.vertex_count() || s.universe() != q.edge_count() {
            return false;
        }
        q.edges().iter().enumerate().all(|(i, e)| {
            let value = self.normal.coord(e.tail) - self.normal.coord(e.head);
            if s.contains(i) {
                value == self.offset
            } else {
                &self.offset - value >= Rational::one()
            }
        })
    }

    /// Both `c` and `b` multiplied by `factor`, which must be positive.
    pub fn scaled(&self, factor: &Rational) -> Self {
        assert!(factor.is_positive(), "certificates scale by positive factors");
        SupportCertificate {
            normal: self.normal.scale(factor),
            offset: &self.offset * factor,
        }
    }

    /// Rescales so the smallest slack over edges outside `s` is exactly 1.
    /// Certificates with no positive slack to normalize are returned as is.
    pub fn normalized(&self, q: &Quiver, s: &EdgeMask) -> Self {
        let min_slack = q
            .edges()
            .iter()
            .enumerate()
            .filter(|(i, _)| !s.contains(*i))
            .map(|(_, e)| &self.offset - (self.normal.coord(e.tail) - self.normal.coord(e.head)))
            .min();
        match min_slack {
            Some(m) if m.is_positive() => self.scaled(&(Rational::one() / m)),
            _ => self.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleVerdict {
    Face(SupportCertificate),
    NotAFace,
}

impl OracleVerdict {
    pub fn is_face(&self) -> bool {
        matches!(self, OracleVerdict::Face(_))
    }

    pub fn certificate(&self) -> Option<&SupportCertificate> {
        match self {
            OracleVerdict::Face(c) => Some(c),
            OracleVerdict::NotAFace => None,
        }
    }
}

/// Decides whether `s` is exactly the vertex set of a face of `DE(Q)`.
pub fn is_face_oracle(q: &Quiver, s: &EdgeSubset<'_>) -> OracleVerdict {
    face_certificate(q, s.mask())
}

fn face_certificate(q: &Quiver, s: &EdgeMask) -> OracleVerdict {
    let n = q.vertex_count();
    if s.is_empty() {
        return OracleVerdict::Face(SupportCertificate {
            normal: RationalVector::zero(n),
            offset: Rational::one(),
        });
    }
    if s.is_full() {
        return OracleVerdict::Face(SupportCertificate {
            normal: RationalVector::zero(n),
            offset: Rational::zero(),
        });
    }
    // Adding a constant to c changes nothing, so the last coordinate is
    // pinned to 0. Variables: c_0 .. c_{n-2}, then b.
    let vars = n;
    let b = n - 1;
    let mut lp = LpProblem::new(vars);
    for (i, e) in q.edges().iter().enumerate() {
        let mut row = vec![Rational::zero(); vars];
        if e.tail < n - 1 {
            row[e.tail] = Rational::one();
        }
        if e.head < n - 1 {
            row[e.head] = -Rational::one();
        }
        if s.contains(i) {
            // c_t - c_h - b = 0
            row[b] = -Rational::one();
            lp.add_equality(row, Rational::zero());
        } else {
            // b - c_t + c_h >= 1
            for v in &mut row {
                *v = -&*v;
            }
            row[b] = Rational::one();
            lp.add_inequality(row, Rational::one());
        }
    }
    match lp.solve() {
        Some(x) => {
            let mut coords: Vec<Rational> = x[..n - 1].to_vec();
            coords.push(Rational::zero());
            OracleVerdict::Face(SupportCertificate {
                normal: RationalVector::from_coords(coords),
                offset: x[b].clone(),
            })
        }
        None => OracleVerdict::NotAFace,
    }
}

/// A face found by the oracle, with its dimension and certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedFace {
    pub mask: EdgeMask,
    pub dim: i64,
    pub certificate: SupportCertificate,
}

pub fn brute_force_lattice(q: &Quiver) -> Result<FaceLattice, OracleError> {
    brute_force_lattice_with(q, &Limits::default())
}

/// Tests every edge subset with [`is_face_oracle`].
pub fn brute_force_lattice_with(q: &Quiver, limits: &Limits) -> Result<FaceLattice, OracleError> {
    Ok(certified_lattice(q, limits)?.0)
}

/// The brute-force lattice together with the certificate for each face.
pub fn certified_lattice(
    q: &Quiver,
    limits: &Limits,
) -> Result<(FaceLattice, Vec<CertifiedFace>), OracleError> {
    let faces = certified_faces(q, limits)?;
    let full = EdgeMask::full(q.edge_count());
    let mut lattice = FaceLattice::new(q.edge_count(), affine_dim(&face_vectors(q, &full)));
    for f in &faces {
        lattice.insert(f.mask.clone(), f.dim);
    }
    Ok((lattice, faces))
}

/// Every face of `DE(Q)`, improper ones included, each with its certificate.
pub fn certified_faces(q: &Quiver, limits: &Limits) -> Result<Vec<CertifiedFace>, OracleError> {
    let m = q.edge_count();
    if m > limits.oracle_edges || m >= 64 {
        return Err(OracleError::TooLarge {
            edges: m,
            limit: limits.oracle_edges.min(63),
        });
    }
    let mut out = Vec::new();
    for bits in 0..(1u64 << m) {
        let mask = EdgeMask::from_bits(m, bits);
        if let OracleVerdict::Face(certificate) = face_certificate(q, &mask) {
            let dim = affine_dim(&face_vectors(q, &mask));
            out.push(CertifiedFace {
                mask,
                dim,
                certificate,
            });
        }
    }
    Ok(out)
}

fn face_vectors(q: &Quiver, mask: &EdgeMask) -> Vec<RationalVector> {
    mask.iter()
        .map(|i| unchecked_edge_vector(q.vertex_count(), q.edge(i)))
        .collect()
}

/// Where the theorem pipeline and the oracle first disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Discrepancy {
    Dimension {
        formula: i64,
        linear: i64,
    },
    Face {
        mask: EdgeMask,
        /// The subset's edges by vertex id.
        edges: Vec<(String, String)>,
        theorem: Option<i64>,
        oracle: Option<i64>,
    },
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Discrepancy::Dimension { formula, linear } => {
                write!(f, "dimension formula gives {formula}, affine hull gives {linear}")
            }
            Discrepancy::Face {
                edges,
                theorem,
                oracle,
                ..
            } => {
                let list: Vec<String> = edges.iter().map(|(t, h)| format!("({t},{h})")).collect();
                let show = |d: &Option<i64>| match d {
                    Some(d) => format!("face of dim {d}"),
                    None => "not a face".to_string(),
                };
                write!(
                    f,
                    "{{{}}}: theorem says {}, oracle says {}",
                    list.join(" "),
                    show(theorem),
                    show(oracle)
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub dim_formula: i64,
    pub dim_linear: i64,
    /// Faces in the oracle lattice, improper ones included.
    pub faces: usize,
    pub discrepancy: Option<Discrepancy>,
}

impl VerifyReport {
    pub fn is_match(&self) -> bool {
        self.discrepancy.is_none()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.discrepancy {
            None => write!(f, "MATCH: {} faces, dim {}", self.faces, self.dim_formula),
            Some(d) => write!(f, "MISMATCH: {d}"),
        }
    }
}

/// Compares a lattice built from the theory against the oracle's.
pub fn compare(q: &Quiver, theorem: &FaceLattice, oracle: &FaceLattice) -> VerifyReport {
    let dim_formula = dim_de(q);
    let dim_linear = affine_dim(&face_vectors(q, &EdgeMask::full(q.edge_count())));
    let discrepancy = if dim_formula != dim_linear {
        Some(Discrepancy::Dimension {
            formula: dim_formula,
            linear: dim_linear,
        })
    } else {
        theorem
            .first_difference(oracle)
            .map(|(mask, theorem, oracle)| Discrepancy::Face {
                edges: mask
                    .iter()
                    .map(|i| {
                        let e = q.edge(i);
                        (q.vertex_name(e.tail).to_string(), q.vertex_name(e.head).to_string())
                    })
                    .collect(),
                mask,
                theorem,
                oracle,
            })
    };
    VerifyReport {
        dim_formula,
        dim_linear,
        faces: oracle.len(),
        discrepancy,
    }
}

/// Builds both lattices and compares them.
pub fn verify(q: &Quiver, limits: &Limits) -> Result<VerifyReport, OracleError> {
    let oracle = brute_force_lattice_with(q, limits)?;
    let theorem = crate::faces::face_lattice_with(q, limits);
    Ok(compare(q, &theorem, &oracle))
}
