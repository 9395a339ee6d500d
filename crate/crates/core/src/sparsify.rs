//! Inclusion-minimal spanning subgraphs by greedy deletion.
//!
//! Edges are visited once in a chosen order; an edge is dropped if the
//! property still holds without it. Both properties are monotone under edge
//! deletion, so one pass leaves no removable edge behind.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::connectivity::{is_2vc_adj, is_3vc_adj};
use crate::error::{Error, Result};
use crate::graph::{Adjacency, Arc, ArcSet, Digraph, Edge, EdgeSet, UGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum OrderMode {
    /// The order arcs were supplied in (canonical order for undirected graphs).
    Input,
    #[default]
    Lexicographic,
    /// A seeded shuffle of the canonical order.
    Random,
}

impl FromStr for OrderMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "input" => Ok(OrderMode::Input),
            "lex" | "lexicographic" => Ok(OrderMode::Lexicographic),
            "random" => Ok(OrderMode::Random),
            other => Err(Error::InvalidArgument(format!(
                "unknown order {other:?} (expected input, lex or random)"
            ))),
        }
    }
}

impl fmt::Display for OrderMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderMode::Input => "input",
            OrderMode::Lexicographic => "lex",
            OrderMode::Random => "random",
        })
    }
}

/// Edge visitation order for the greedy pass. `seed` only matters for
/// [`OrderMode::Random`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct DeletionOrder {
    pub mode: OrderMode,
    pub seed: u64,
}

impl DeletionOrder {
    pub const fn lexicographic() -> Self {
        DeletionOrder {
            mode: OrderMode::Lexicographic,
            seed: 0,
        }
    }

    pub const fn input() -> Self {
        DeletionOrder {
            mode: OrderMode::Input,
            seed: 0,
        }
    }

    pub const fn random(seed: u64) -> Self {
        DeletionOrder {
            mode: OrderMode::Random,
            seed,
        }
    }

    fn arrange<T: Copy>(&self, canonical: &[T], input: impl FnOnce() -> Vec<T>) -> Vec<T> {
        match self.mode {
            OrderMode::Lexicographic => canonical.to_vec(),
            OrderMode::Input => input(),
            OrderMode::Random => {
                let mut items = canonical.to_vec();
                items.shuffle(&mut ChaCha8Rng::seed_from_u64(self.seed));
                items
            }
        }
    }
}

/// Drops items from `sequence` one at a time, keeping each only when
/// `holds` fails without it.
fn greedy_delete<T: Copy>(sequence: Vec<T>, holds: impl Fn(&[T]) -> bool) -> Vec<T> {
    let mut kept = sequence;
    let mut i = 0;
    while i < kept.len() {
        let candidate = kept.remove(i);
        if holds(&kept) {
            continue;
        }
        kept.insert(i, candidate);
        i += 1;
    }
    kept
}

/// A minimal 2-vertex-connected spanning subgraph of `g`.
pub fn minimal_2vc_subgraph(g: &Digraph, order: DeletionOrder) -> Result<ArcSet> {
    if !is_2vc_adj(&g.adjacency()) {
        return Err(Error::Not2VertexConnected);
    }
    let sequence = order.arrange(g.arcs(), || g.arcs_in_input_order().collect());
    let kept = greedy_delete(sequence, |arcs: &[Arc]| {
        is_2vc_adj(&Adjacency::directed(
            g.n(),
            arcs.iter().map(|a| g.dense_arc(a)),
        ))
    });
    Ok(kept.into_iter().collect())
}

/// A minimal 3-vertex-connected spanning subgraph of `ug`.
pub fn minimal_3vc_subgraph(ug: &UGraph, order: DeletionOrder) -> Result<EdgeSet> {
    if !is_3vc_adj(&ug.adjacency()) {
        return Err(Error::Not3VertexConnected);
    }
    let sequence = order.arrange(ug.edges(), || ug.edges().to_vec());
    let kept = greedy_delete(sequence, |edges: &[Edge]| {
        is_3vc_adj(&Adjacency::undirected(
            ug.n(),
            edges.iter().map(|e| {
                let (a, b) = e.endpoints();
                (
                    ug.index_of(a).expect("endpoint"),
                    ug.index_of(b).expect("endpoint"),
                )
            }),
        ))
    });
    Ok(kept.into_iter().collect())
}
