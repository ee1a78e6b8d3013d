#![allow(dead_code)]

use proptest::prelude::*;
use qface::families::{gen, Family, OrientationWord};
use qface::{Edge, EdgeMask, EdgeSubset, Quiver};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn quiver(n: usize, edges: &[(usize, usize)]) -> Quiver {
    Quiver::with_vertex_count(n, edges).unwrap()
}

pub fn diamond() -> Quiver {
    quiver(4, &[(0, 1), (0, 2), (1, 3), (2, 3)])
}

pub fn subset<'a>(parent: &'a Quiver, pairs: &[(usize, usize)]) -> EdgeSubset<'a> {
    let mask = EdgeMask::from_indices(
        parent.edge_count(),
        pairs
            .iter()
            .map(|&(t, h)| parent.edge_index(Edge::new(t, h)).unwrap()),
    );
    parent.subset(mask)
}

/// Every edge subset of `q`, as lluf subquivers.
pub fn all_subsets(q: &Quiver) -> impl Iterator<Item = EdgeSubset<'_>> {
    let m = q.edge_count();
    assert!(m < 64);
    (0..1u64 << m).map(move |bits| q.subset(EdgeMask::from_bits(m, bits)))
}

/// All quivers on `1..=max_vertices` vertices with at most `max_edges` edges,
/// on labeled vertices.
pub fn small_corpus(max_vertices: usize, max_edges: usize) -> Vec<Quiver> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|t| (0..n).filter(move |&h| h != t).map(move |h| (t, h)))
            .collect();
        for bits in 0u64..1 << pairs.len() {
            if bits.count_ones() as usize > max_edges {
                continue;
            }
            let edges: Vec<_> = (0..pairs.len())
                .filter(|i| bits >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            out.push(quiver(n, &edges));
        }
    }
    out
}

/// `count` reproducible random quivers with at most `max_edges` edges.
pub fn random_corpus(count: usize, max_vertices: usize, max_edges: usize, seed: u64) -> Vec<Quiver> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let v = rng.gen_range(2..=max_vertices);
            let e = rng.gen_range(1..=max_edges.min(v * (v - 1)));
            gen(&Family::Random {
                vertices: v,
                edges: e,
                seed: rng.gen(),
            })
            .unwrap()
        })
        .collect()
}

/// A random quiver whose underlying graph is a forest.
pub fn random_forest(rng: &mut ChaCha8Rng, max_edges: usize) -> Quiver {
    let v = rng.gen_range(2..=max_edges + 1);
    let mut edges = Vec::new();
    for w in 1..v {
        if rng.gen_bool(0.85) {
            let u = rng.gen_range(0..w);
            edges.push(if rng.gen() { (u, w) } else { (w, u) });
        }
    }
    quiver(v, &edges)
}

/// All `2^m` orientations of an `m`-gon.
pub fn polygon_orientations(m: usize) -> Vec<Quiver> {
    (0u64..1 << m)
        .map(|bits| {
            let signs = (0..m).map(|i| bits >> i & 1 == 1).collect();
            gen(&Family::Polygon(OrientationWord::new(signs).unwrap())).unwrap()
        })
        .collect()
}

/// Quivers on up to `max_vertices` vertices with up to `max_edges` edges.
pub fn arb_quiver(max_vertices: usize, max_edges: usize) -> impl Strategy<Value = Quiver> {
    (1..=max_vertices).prop_flat_map(move |n| {
        proptest::collection::vec((0..n, 0..n), 0..=max_edges).prop_map(move |pairs| {
            let mut edges: Vec<_> = pairs.into_iter().filter(|(t, h)| t != h).collect();
            edges.sort_unstable();
            edges.dedup();
            quiver(n, &edges)
        })
    })
}

/// Connected simple graphs given by a spanning tree plus extra edges.
pub fn arb_connected_graph(max_vertices: usize, extra: usize) -> impl Strategy<Value = qface::Graph> {
    (2..=max_vertices).prop_flat_map(move |n| {
        (
            proptest::collection::vec(any::<prop::sample::Index>(), n - 1),
            proptest::collection::vec((0..n, 0..n), 0..=extra),
        )
            .prop_map(move |(parents, more)| {
                let mut edges: Vec<_> = parents
                    .iter()
                    .enumerate()
                    .map(|(i, p)| (p.index(i + 1), i + 1))
                    .collect();
                edges.extend(more.into_iter().filter(|(a, b)| a != b));
                qface::Graph::new(n, &edges).unwrap()
            })
    })
}
