//! Seeded random graph generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Adjacency, Arc, Digraph, VertexId};
use crate::strong::is_2vsb_adj;

/// A random 2-vertex strongly biconnected digraph on vertices `1..=n`.
///
/// Starts from a bidirected Hamiltonian cycle over a shuffled vertex order,
/// adds shuffled non-duplicate arcs one at a time until the graph is
/// 2-vertex strongly biconnected, then adds `extra_arcs` more (fewer if the
/// graph becomes complete).
pub fn random_2vsb(n: usize, extra_arcs: usize, seed: u64) -> Result<Digraph> {
    if n < 4 {
        return Err(Error::TooFewVertices { n, min: 4 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);

    let mut present = vec![vec![false; n]; n];
    let mut arcs = Vec::new();
    for i in 0..n {
        let (u, w) = (perm[i], perm[(i + 1) % n]);
        for (a, b) in [(u, w), (w, u)] {
            present[a][b] = true;
            arcs.push((a, b));
        }
    }

    let mut candidates: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |w| (u, w)))
        .filter(|&(u, w)| u != w && !present[u][w])
        .collect();
    candidates.shuffle(&mut rng);
    let mut pending = candidates.into_iter();

    while !is_2vsb_adj(&Adjacency::directed(n, arcs.iter().copied())) {
        let next = pending
            .next()
            .expect("the complete bidirected graph is 2-vertex strongly biconnected");
        arcs.push(next);
    }
    arcs.extend(pending.take(extra_arcs));

    let label = |i: usize| (i + 1) as VertexId;
    Digraph::from_arcs(arcs.into_iter().map(|(u, w)| Arc::new(label(u), label(w))))
}

/// An Erdős–Rényi style digraph on `1..=n`: each ordered pair becomes an
/// arc independently with probability `p`.
pub fn random_digraph(n: usize, p: f64, seed: u64) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::new();
    for u in 1..=n as VertexId {
        for w in 1..=n as VertexId {
            if u != w && rng.gen_bool(p) {
                arcs.push(Arc::new(u, w));
            }
        }
    }
    Digraph::with_vertices(1..=n as VertexId, arcs).expect("no self-loops generated")
}
