//! Example quiver families and their closed-form f-vectors.
//!
//! Polygons are labeled `0..m` cyclically and edge `i` (for `1 <= i <= m`)
//! joins `i - 1` and `i mod m`. Random quivers come from a ChaCha8 stream
//! seeded with the given `u64`, so the same parameters always give the same
//! quiver.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::faces::FVector;
use crate::quiver::{double, Graph, Quiver};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("bad family parameters: {0}")]
    BadParams(String),
    #[error("no closed form: {0}")]
    Unavailable(String),
}

/// Orientation of each edge of a polygon: `true` for forward (`i-1 -> i`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrientationWord {
    signs: Vec<bool>,
}

impl OrientationWord {
    pub fn new(signs: Vec<bool>) -> Result<Self, FamilyError> {
        if signs.len() < 3 {
            return Err(FamilyError::BadParams(format!(
                "orientation word of length {} is shorter than 3",
                signs.len()
            )));
        }
        Ok(OrientationWord { signs })
    }

    pub fn signs(&self) -> &[bool] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn forward_count(&self) -> usize {
        self.signs.iter().filter(|&&s| s).count()
    }

    pub fn backward_count(&self) -> usize {
        self.len() - self.forward_count()
    }

    /// Equal numbers of forward and backward edges.
    pub fn is_balanced(&self) -> bool {
        self.forward_count() == self.backward_count()
    }
}

impl FromStr for OrientationWord {
    type Err = FamilyError;

    /// Accepts `+` and `-`; the Unicode minus sign also counts as `-`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let signs = s
            .chars()
            .map(|c| match c {
                '+' => Ok(true),
                '-' | '\u{2212}' => Ok(false),
                other => Err(FamilyError::BadParams(format!(
                    "unexpected character {other:?} in orientation word"
                ))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        OrientationWord::new(signs)
    }
}

impl fmt::Display for OrientationWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.signs {
            f.write_str(if s { "+" } else { "-" })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// The path `0 -> 1 -> ... -> n` with `n` edges.
    Path(usize),
    /// An oriented `m`-gon.
    Polygon(OrientationWord),
    /// `D(C_m)`.
    DoubleCycle(usize),
    /// `D(K_m)`.
    DoubleComplete(usize),
    /// A uniformly sampled quiver on `vertices` vertices with `edges` edges.
    Random {
        vertices: usize,
        edges: usize,
        seed: u64,
    },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path {n}"),
            Family::Polygon(w) => write!(f, "polygon {w}"),
            Family::DoubleCycle(m) => write!(f, "double-cycle {m}"),
            Family::DoubleComplete(m) => write!(f, "double-complete {m}"),
            Family::Random {
                vertices,
                edges,
                seed,
            } => write!(f, "random {vertices} {edges} {seed}"),
        }
    }
}

/// Builds the quiver of a family instance.
pub fn gen(family: &Family) -> Result<Quiver, FamilyError> {
    match family {
        Family::Path(n) => {
            let edges: Vec<_> = (1..=*n).map(|i| (i - 1, i)).collect();
            Ok(Quiver::with_vertex_count(n + 1, &edges).expect("path is a quiver"))
        }
        Family::Polygon(word) => {
            let m = word.len();
            let edges: Vec<_> = word
                .signs()
                .iter()
                .enumerate()
                .map(|(k, &forward)| {
                    let (a, b) = (k, (k + 1) % m);
                    if forward {
                        (a, b)
                    } else {
                        (b, a)
                    }
                })
                .collect();
            Quiver::with_vertex_count(m, &edges).map_err(|e| FamilyError::BadParams(e.to_string()))
        }
        Family::DoubleCycle(m) => {
            if *m < 3 {
                return Err(FamilyError::BadParams(format!("cycle length {m} is below 3")));
            }
            Ok(double(&Graph::cycle(*m)))
        }
        Family::DoubleComplete(m) => {
            if *m < 2 {
                return Err(FamilyError::BadParams(format!(
                    "complete graph on {m} vertices has no edges"
                )));
            }
            Ok(double(&Graph::complete(*m)))
        }
        Family::Random {
            vertices,
            edges,
            seed,
        } => random_quiver(*vertices, *edges, *seed),
    }
}

fn random_quiver(v: usize, e: usize, seed: u64) -> Result<Quiver, FamilyError> {
    if v == 0 {
        return Err(FamilyError::BadParams("random quiver needs a vertex".into()));
    }
    let max = v * (v - 1);
    if e > max {
        return Err(FamilyError::BadParams(format!(
            "{e} edges do not fit on {v} vertices (at most {max})"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen = std::collections::BTreeSet::new();
    while chosen.len() < e {
        let (t, h) = (rng.gen_range(0..v), rng.gen_range(0..v));
        if t != h {
            chosen.insert((t, h));
        }
    }
    let edges: Vec<_> = chosen.into_iter().collect();
    Ok(Quiver::with_vertex_count(v, &edges).expect("sampled edges are simple"))
}

/// `binom(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> u64 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n as u128 - i) / (i + 1);
    }
    u64::try_from(acc).expect("binomial overflows u64")
}

/// Paper-style sum `binom(m, d+1) Σ_{i ∈ I} binom(d+1, i)` with
/// `I = {i : i <= bound, d+1-i <= bound}`.
fn cycle_sum(m: i64, d: i64, bound: i64) -> u64 {
    let k = d + 1;
    let inner: u64 = (0..=k)
        .filter(|&i| i <= bound && k - i <= bound)
        .map(|i| binomial(k, i))
        .sum();
    binomial(m, k) * inner
}

/// `f_d` of `SE(C_2n)` for `d + 1 < n`, in the simplified form
/// `binom(2n, d+1) 2^(d+1)`. `None` outside that range.
pub fn even_cycle_simplified(n: u32, d: u32) -> Option<u64> {
    (d + 1 < n).then(|| binomial(2 * n as i64, d as i64 + 1) << (d + 1))
}

/// Face counts predicted by closed formulas.
///
/// Covered: paths (simplices), balanced polygons, and doubled cycles of either
/// parity. Everything else is [`FamilyError::Unavailable`].
pub fn closed_form_fvector(family: &Family) -> Result<FVector, FamilyError> {
    match family {
        Family::Path(n) => {
            let m = *n as i64;
            Ok(FVector {
                dim: m - 1,
                counts: (0..(m - 1).max(0)).map(|d| binomial(m, d + 1)).collect(),
            })
        }
        Family::Polygon(word) => {
            if !word.is_balanced() {
                return Err(FamilyError::Unavailable(format!(
                    "polygon {word} is not balanced"
                )));
            }
            let n = (word.len() / 2) as i64;
            let dim = 2 * n - 2;
            Ok(FVector {
                dim,
                counts: (0..dim)
                    .map(|d| binomial(2 * n, d + 1) - 2 * binomial(n, d + 1 - n))
                    .collect(),
            })
        }
        Family::DoubleCycle(m) => {
            if *m < 3 {
                return Err(FamilyError::BadParams(format!("cycle length {m} is below 3")));
            }
            let m = *m as i64;
            let dim = m - 1;
            let counts = if m % 2 == 0 {
                let n = m / 2;
                (0..dim)
                    .map(|d| {
                        if d == 2 * n - 2 {
                            binomial(2 * n, n)
                        } else {
                            cycle_sum(m, d, n - 1)
                        }
                    })
                    .collect()
            } else {
                // Every proper face is a simplex on at most n forward and at
                // most n backward edges, so the bound is inclusive here.
                let n = (m - 1) / 2;
                (0..dim).map(|d| cycle_sum(m, d, n)).collect()
            };
            Ok(FVector { dim, counts })
        }
        Family::DoubleComplete(_) | Family::Random { .. } => Err(FamilyError::Unavailable(
            format!("{family} has no closed form"),
        )),
    }
}
