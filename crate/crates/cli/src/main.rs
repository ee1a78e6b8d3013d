//! `qface`: dimensions, facets and face lattices of directed edge polytopes.
//!
//! Exit codes: 0 on success, 1 on bad input or other errors, 2 when `verify`
//! finds a mismatch between the theory and the oracle.

mod input;
mod report;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use qface::faces::face_lattice_with;
use qface::families::{gen, Family, FamilyError, OrientationWord};
use qface::oracle::{brute_force_lattice_with, compare, OracleError};
use qface::{
    components, dim_de, enumerate_facets, find_rank_function, EdgeMask, EdgeSubset, Limits, Quiver,
};
use thiserror::Error;

use input::{parse_pairs, parse_quiver, InputError};
use report::{digest, edge_names, FaceEntry, Payload, Report};

#[derive(Debug, Parser)]
#[command(name = "qface", version, about = "Faces of directed edge polytopes")]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dimension of DE(Q).
    Dim { file: PathBuf },
    /// Normalized rank function, if one exists.
    Rank { file: PathBuf },
    /// All facets.
    Facets { file: PathBuf },
    /// The face lattice.
    Faces {
        file: PathBuf,
        /// Only print faces up to this dimension.
        #[arg(long)]
        max_dim: Option<i64>,
    },
    /// Face counts by dimension.
    Fvector { file: PathBuf },
    /// Whether an edge subset is a face.
    IsFace {
        file: PathBuf,
        /// Edges of the subset as vertex-id pairs, e.g. "0 1, 1 2".
        #[arg(long)]
        sub: String,
    },
    /// Compare the face lattice against the brute-force LP oracle.
    Verify {
        file: PathBuf,
        /// Corrupt the computed lattice before comparing (for testing the
        /// mismatch path).
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Print a quiver from one of the built-in families.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
}

#[derive(Debug, Subcommand)]
enum GenFamily {
    /// Path 0 -> 1 -> ... -> n.
    Path { n: usize },
    /// Oriented polygon from a word over + and -.
    Polygon {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Both orientations of every edge of an m-cycle.
    DoubleCycle { m: usize },
    /// Both orientations of every edge of the complete graph on m vertices.
    DoubleComplete { m: usize },
    /// Seeded random quiver.
    Random {
        vertices: usize,
        edges: usize,
        seed: u64,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("({0}, {1}) is not an edge of the quiver")]
    NotAnEdge(String, String),
    #[error("cannot write output: {0}")]
    Output(#[from] serde_json::Error),
}

struct Outcome {
    input: Option<String>,
    args: Vec<String>,
    digest: Option<String>,
    payload: Payload,
}

fn read_input(path: &PathBuf) -> Result<Quiver, InputError> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|source| InputError::Io {
                path: "<stdin>".into(),
                source,
            })?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|source| InputError::Io {
            path: path.display().to_string(),
            source,
        })?
    };
    Ok(parse_quiver(&text)?.canonicalize())
}

fn with_input(
    path: &PathBuf,
    args: Vec<String>,
    f: impl FnOnce(&Quiver) -> Result<Payload, CliError>,
) -> Result<Outcome, CliError> {
    let q = read_input(path)?;
    Ok(Outcome {
        input: Some(path.display().to_string()),
        args,
        digest: Some(digest(&q)),
        payload: f(&q)?,
    })
}

fn run(command: &Command, limits: &Limits) -> Result<Outcome, CliError> {
    match command {
        Command::Dim { file } => with_input(file, vec![], |q| {
            Ok(Payload::Dim {
                dim: dim_de(q),
                vertices: q.vertex_count(),
                edges: q.edge_count(),
                components: components(q).len(),
                ranked: find_rank_function(q).is_some(),
                edgeless: q.edge_count() == 0,
            })
        }),
        Command::Rank { file } => with_input(file, vec![], |q| {
            let rank = find_rank_function(q).map(|rho| {
                rho.values()
                    .iter()
                    .enumerate()
                    .map(|(v, &r)| (q.vertex_name(v).to_string(), r))
                    .collect()
            });
            Ok(Payload::Rank { rank })
        }),
        Command::Facets { file } => with_input(file, vec![], |q| {
            let facets = enumerate_facets(q)
                .into_iter()
                .map(|r| {
                    let dim = dim_de(&r.to_quiver());
                    FaceEntry::new(q, r.mask(), dim)
                })
                .collect();
            Ok(Payload::Facets { facets })
        }),
        Command::Faces { file, max_dim } => {
            let args = max_dim
                .map(|m| vec!["--max-dim".to_string(), m.to_string()])
                .unwrap_or_default();
            with_input(file, args, |q| {
                let lattice = face_lattice_with(q, limits);
                let mut faces: Vec<FaceEntry> = lattice
                    .iter()
                    .filter(|&(_, d)| d >= 0 && max_dim.map_or(true, |m| d <= m))
                    .map(|(mask, d)| FaceEntry::new(q, mask, d))
                    .collect();
                faces.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.edges.cmp(&b.edges)));
                Ok(Payload::Faces {
                    dim: lattice.dim(),
                    max_dim: *max_dim,
                    total: lattice.len(),
                    faces,
                })
            })
        }
        Command::Fvector { file } => with_input(file, vec![], |q| {
            let f = face_lattice_with(q, limits).f_vector();
            Ok(Payload::Fvector {
                dim: f.dim,
                counts: f.counts,
            })
        }),
        Command::IsFace { file, sub } => {
            with_input(file, vec!["--sub".to_string(), sub.clone()], |q| {
                let pairs = parse_pairs(sub)?;
                let mut mask = EdgeMask::empty(q.edge_count());
                for (t, h) in &pairs {
                    let i = q
                        .find_edge(t, h)
                        .ok_or_else(|| CliError::NotAnEdge(t.clone(), h.clone()))?;
                    mask.insert(i);
                }
                let r = EdgeSubset::new(q, mask);
                let dim = face_lattice_with(q, limits).dim_of(r.mask());
                Ok(Payload::IsFace {
                    face: dim.is_some(),
                    dim,
                })
            })
        }
        Command::Verify { file, inject_fault } => {
            let args = if *inject_fault {
                vec!["--inject-fault".to_string()]
            } else {
                vec![]
            };
            with_input(file, args, |q| {
                let oracle = brute_force_lattice_with(q, limits)?;
                let mut theorem = face_lattice_with(q, limits);
                if *inject_fault {
                    inject(&mut theorem);
                }
                let report = compare(q, &theorem, &oracle);
                Ok(Payload::Verify {
                    matched: report.is_match(),
                    faces: report.faces,
                    dim: report.dim_formula,
                    discrepancy: report.discrepancy.map(|d| d.to_string()),
                })
            })
        }
        Command::Gen { family } => {
            let family = match family {
                GenFamily::Path { n } => Family::Path(*n),
                GenFamily::Polygon { word } => Family::Polygon(word.parse::<OrientationWord>()?),
                GenFamily::DoubleCycle { m } => Family::DoubleCycle(*m),
                GenFamily::DoubleComplete { m } => Family::DoubleComplete(*m),
                GenFamily::Random {
                    vertices,
                    edges,
                    seed,
                } => Family::Random {
                    vertices: *vertices,
                    edges: *edges,
                    seed: *seed,
                },
            };
            let q = gen(&family)?;
            Ok(Outcome {
                input: None,
                args: family.to_string().split(' ').map(String::from).collect(),
                digest: Some(digest(&q)),
                payload: Payload::Gen {
                    family: family.to_string(),
                    vertices: q.vertex_names().to_vec(),
                    edges: edge_names(&q, &EdgeMask::full(q.edge_count())),
                },
            })
        }
    }
}

/// Drops one proper face, or shifts the top dimension when there is none.
fn inject(lattice: &mut qface::FaceLattice) {
    let victim = lattice
        .iter()
        .find(|(m, _)| !m.is_empty() && !m.is_full())
        .map(|(m, _)| m.clone());
    match victim {
        Some(m) => {
            lattice.remove(&m);
        }
        None => {
            let full = EdgeMask::full(lattice.edge_count());
            let d = lattice.remove(&full).unwrap_or(-1);
            lattice.insert(full, d + 1);
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let limits = Limits::from_env();
    let start = Instant::now();
    let outcome = match run(&cli.command, &limits) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let elapsed_us = start.elapsed().as_micros() as u64;
    let mismatch = matches!(outcome.payload, Payload::Verify { matched: false, .. });
    if cli.json {
        let report = Report {
            command: command_name(&cli.command).to_string(),
            input: outcome.input,
            args: outcome.args,
            input_digest: outcome.digest,
            result: outcome.payload,
            elapsed_us,
            version: env!("CARGO_PKG_VERSION").to_string(),
        };
        match serde_json::to_string_pretty(&report) {
            Ok(s) => println!("{s}"),
            Err(e) => {
                eprintln!("error: {}", CliError::from(e));
                return ExitCode::from(1);
            }
        }
    } else {
        println!("{}", outcome.payload.render());
    }
    if mismatch {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Dim { .. } => "dim",
        Command::Rank { .. } => "rank",
        Command::Facets { .. } => "facets",
        Command::Faces { .. } => "faces",
        Command::Fvector { .. } => "fvector",
        Command::IsFace { .. } => "is-face",
        Command::Verify { .. } => "verify",
        Command::Gen { .. } => "gen",
    }
}
