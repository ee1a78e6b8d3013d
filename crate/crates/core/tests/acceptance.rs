//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{all_subsets, diamond, polygon_orientations, random_corpus, random_forest, small_corpus};
use qface::families::{binomial, closed_form_fvector, gen, Family, OrientationWord};
use qface::geometry::vertex_vectors;
use qface::oracle::{certified_lattice, CertifiedFace};
use qface::{
    affine_dim, check_cycle_balance, dim_de, double, enumerate_facets, f_vector, face_lattice,
    find_rank_function, higashitani_check, is_facet, is_facet_symmetric, FacetReason,
    Graph, Limits, Quiver,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const DIMENSION_BUDGET: Duration = Duration::from_secs(10);
const ORACLE_BUDGET: Duration = Duration::from_secs(120);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

/// Certificates emitted while checking other criteria, kept for re-validation.
type Emitted = Vec<(Quiver, CertifiedFace)>;

fn dimension_corpus() -> Vec<Quiver> {
    let mut corpus = small_corpus(4, 6);
    corpus.extend(random_corpus(200, 8, 10, 0x5eed_0001));
    corpus
}

fn dimension_theorem() -> Outcome {
    let start = Instant::now();
    let corpus = dimension_corpus();
    let mismatches = corpus
        .iter()
        .filter(|q| dim_de(q) != affine_dim(&vertex_vectors(q)))
        .count();
    let elapsed = start.elapsed();
    outcome(
        mismatches == 0 && elapsed < DIMENSION_BUDGET,
        format!(
            "{} quivers, {mismatches} mismatches, {:.2}s (limit {}s)",
            corpus.len(),
            elapsed.as_secs_f64(),
            DIMENSION_BUDGET.as_secs()
        ),
    )
}

fn rank_equivalence() -> Outcome {
    let corpus = dimension_corpus();
    let mismatches = corpus
        .iter()
        .filter(|q| find_rank_function(q).is_some() != check_cycle_balance(q))
        .count();
    outcome(
        mismatches == 0,
        format!("{} quivers, {mismatches} mismatches", corpus.len()),
    )
}

fn oracle_corpus() -> Vec<Quiver> {
    let mut corpus = polygon_orientations(4);
    corpus.extend(polygon_orientations(6));
    corpus.push(double(&Graph::cycle(3)));
    corpus.push(double(&Graph::cycle(4)));
    corpus.push(diamond());
    for n in 1..=5 {
        corpus.push(gen(&Family::Path(n)).unwrap());
    }
    corpus.extend(random_corpus(100, 6, 8, 0x5eed_0003));
    corpus
}

fn oracle_equivalence(emitted: &mut Emitted) -> Outcome {
    let start = Instant::now();
    let corpus = oracle_corpus();
    let mut mismatches = 0;
    for q in &corpus {
        let (oracle, faces) = certified_lattice(q, &Limits::default()).unwrap();
        if face_lattice(q).first_difference(&oracle).is_some() {
            mismatches += 1;
        }
        emitted.extend(faces.into_iter().map(|f| (q.clone(), f)));
    }
    let elapsed = start.elapsed();
    outcome(
        mismatches == 0 && elapsed < ORACLE_BUDGET,
        format!(
            "{} quivers, {mismatches} mismatches, {:.2}s (limit {}s)",
            corpus.len(),
            elapsed.as_secs_f64(),
            ORACLE_BUDGET.as_secs()
        ),
    )
}

fn even_cycles(emitted: &mut Emitted) -> Outcome {
    let mut failures = Vec::new();
    let cases: [(usize, &[u64], usize); 2] = [(4, &[8, 12, 6], 6), (6, &[12, 60, 120, 90, 20], 20)];
    for (m, expected, facets) in cases {
        let q = double(&Graph::cycle(m));
        let f = f_vector(&q);
        if f.counts != expected || f.dim != m as i64 - 1 {
            failures.push(format!("C{m}: f = {:?}", f.counts));
        }
        if f.euler_sum() != 2 {
            failures.push(format!("C{m}: euler sum {}", f.euler_sum()));
        }
        let n = enumerate_facets(&q).len();
        if n != facets || n as u64 != binomial(m as i64, m as i64 / 2) {
            failures.push(format!("C{m}: {n} facets"));
        }
        if closed_form_fvector(&Family::DoubleCycle(m)).unwrap() != f {
            failures.push(format!("C{m}: closed form disagrees"));
        }
        if m == 4 {
            let (oracle, faces) = certified_lattice(&q, &Limits::default()).unwrap();
            if oracle.f_vector() != f {
                failures.push("C4: oracle disagrees".into());
            }
            emitted.extend(faces.into_iter().map(|f| (q.clone(), f)));
        }
    }
    outcome(
        failures.is_empty(),
        if failures.is_empty() {
            "C4 (8,12,6) and C6 (12,60,120,90,20); 6 and 20 facets; Euler sums 2".to_string()
        } else {
            failures.join("; ")
        },
    )
}

fn odd_cycle() -> Outcome {
    let q = double(&Graph::cycle(5));
    let facets = enumerate_facets(&q);
    let mut bad = 0;
    for r in &facets {
        let sub = r.to_quiver();
        let lattice = face_lattice(&sub);
        let boolean = lattice.len() == 1 << sub.edge_count();
        if r.len() != 4 || dim_de(&sub) != 3 || !boolean {
            bad += 1;
        }
    }
    outcome(
        facets.len() == 30 && bad == 0,
        format!("{} facets, {bad} not 3-simplices on 4 vertices", facets.len()),
    )
}

fn balanced_polygons() -> Outcome {
    let mut failures = Vec::new();

    let word: OrientationWord = "+-+-".parse().unwrap();
    let q = gen(&Family::Polygon(word.clone())).unwrap();
    if f_vector(&q).counts != [4, 4] {
        failures.push(format!("+-+-: f = {:?}", f_vector(&q).counts));
    }
    let facets = enumerate_facets(&q);
    let forward = |i: usize| {
        let e = q.edge(i);
        (e.tail + 1) % 4 == e.head
    };
    let shaped = facets.iter().all(|r| {
        let dropped: Vec<usize> = r.mask().complement().iter().collect();
        dropped.len() == 2 && forward(dropped[0]) != forward(dropped[1])
    });
    if facets.len() != 4 || !shaped {
        failures.push(format!("+-+-: {} facets, one of each sign: {shaped}", facets.len()));
    }

    let word: OrientationWord = "++---+".parse().unwrap();
    let q = gen(&Family::Polygon(word.clone())).unwrap();
    let f = f_vector(&q);
    let expected: Vec<u64> = (0..=3)
        .map(|d| binomial(6, d + 1) - 2 * binomial(3, d + 1 - 3))
        .collect();
    if f.counts != expected {
        failures.push(format!("++---+: f = {:?}, formula {expected:?}", f.counts));
    }
    if closed_form_fvector(&Family::Polygon(word)).unwrap() != f {
        failures.push("++---+: closed form disagrees".into());
    }
    outcome(
        failures.is_empty(),
        if failures.is_empty() {
            format!("+-+- (4,4) with 4 one-of-each facets; ++---+ {expected:?}")
        } else {
            failures.join("; ")
        },
    )
}

fn simplex_corollary() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let mut bad = 0;
    for _ in 0..25 {
        let q = random_forest(&mut rng, 10);
        let m = q.edge_count();
        let lattice = face_lattice(&q);
        let every_subset = all_subsets(&q).all(|r| lattice.contains(r.mask()));
        let proper: u64 = lattice.f_vector().counts.iter().sum();
        let expected = if m == 0 { 0 } else { (1u64 << m) - 2 };
        if !every_subset || proper != expected {
            bad += 1;
        }
    }
    outcome(bad == 0, format!("25 forests, {bad} failures"))
}

fn symmetric_corollary() -> Outcome {
    let k4_minus = Graph::complete(4).without_edge(0, 1);
    let graphs = [
        ("C3", Graph::cycle(3)),
        ("C4", Graph::cycle(4)),
        ("path4", Graph::path(4)),
        ("K4-e", k4_minus),
    ];
    let mut disagreements = 0;
    let mut checked = 0;
    let mut round_trip_failures = 0;
    let mut facets_seen = 0;
    for (_, g) in &graphs {
        let dg = double(g);
        let target = dim_de(&dg) - 1;
        for r in all_subsets(&dg) {
            if dim_de(&r.to_quiver()) != target {
                continue;
            }
            checked += 1;
            if is_facet_symmetric(g, &r).unwrap() != is_facet(&dg, &r).is_facet {
                disagreements += 1;
            }
        }
        for r in enumerate_facets(&dg) {
            if is_facet(&dg, &r).reason != FacetReason::SignConsistentRank {
                continue;
            }
            facets_seen += 1;
            let rho = find_rank_function(&r.to_quiver()).unwrap();
            let labels: Vec<i64> = rho.values().iter().map(|v| -v).collect();
            if higashitani_check(g, &labels).ok().as_ref() != Some(r.mask()) {
                round_trip_failures += 1;
            }
        }
    }
    outcome(
        disagreements == 0 && round_trip_failures == 0 && facets_seen > 0,
        format!(
            "{checked} subquivers at facet dimension, {disagreements} disagreements; \
             {facets_seen} facets, {round_trip_failures} round-trip failures"
        ),
    )
}

fn certificate_soundness(emitted: &Emitted) -> Outcome {
    let failures = emitted
        .iter()
        .filter(|(q, f)| !f.certificate.validate(q, &f.mask))
        .count();
    outcome(
        failures == 0 && !emitted.is_empty(),
        format!("{} certificates, {failures} failures", emitted.len()),
    )
}

fn main() -> ExitCode {
    let mut emitted = Emitted::new();
    let results: Vec<(&str, Outcome)> = vec![
        ("dimension formula vs affine hull", dimension_theorem()),
        ("rank function iff balanced cycles", rank_equivalence()),
        ("face lattice vs brute-force oracle", oracle_equivalence(&mut emitted)),
        ("even cycle golden values", even_cycles(&mut emitted)),
        ("odd cycle facets are simplices", odd_cycle()),
        ("balanced polygon golden values", balanced_polygons()),
        ("forests give simplices", simplex_corollary()),
        ("symmetric facet test and labelings", symmetric_corollary()),
        ("certificate soundness", certificate_soundness(&emitted)),
    ];
    let mut failed = 0;
    for (i, (name, o)) in results.iter().enumerate() {
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("{tag} [{}] {name}: {}", i + 1, o.detail);
        if !o.pass {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
