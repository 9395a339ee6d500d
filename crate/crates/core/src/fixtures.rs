//! Bundled example graphs.
//!
//! `fig1a` is a 2-vertex strongly biconnected graph on seven vertices,
//! `fig1b` a minimum 2-vertex-connected spanning subgraph of it (a
//! bidirected 7-cycle) that is not 2-vertex strongly biconnected, and
//! `fig1c` a minimum 2-vertex strongly biconnected spanning subgraph with
//! `2n = 14` arcs.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Arc, Digraph, VertexId};

const FIG1A: [(VertexId, VertexId); 24] = [
    (1, 2),
    (2, 1),
    (1, 5),
    (5, 1),
    (5, 7),
    (7, 5),
    (7, 6),
    (6, 7),
    (6, 4),
    (4, 6),
    (4, 3),
    (3, 4),
    (3, 2),
    (2, 3),
    (1, 7),
    (5, 6),
    (6, 3),
    (4, 2),
    (3, 1),
    (4, 5),
    (2, 5),
    (2, 6),
    (3, 5),
    (7, 4),
];

// Cycle 1-2-3-4-6-7-5-1 in both directions.
const FIG1B: [(VertexId, VertexId); 14] = [
    (1, 2),
    (2, 1),
    (2, 3),
    (3, 2),
    (3, 4),
    (4, 3),
    (4, 6),
    (6, 4),
    (6, 7),
    (7, 6),
    (7, 5),
    (5, 7),
    (5, 1),
    (1, 5),
];

const FIG1C: [(VertexId, VertexId); 14] = [
    (2, 5),
    (2, 1),
    (1, 5),
    (5, 7),
    (7, 6),
    (6, 4),
    (4, 3),
    (3, 2),
    (1, 7),
    (5, 6),
    (6, 3),
    (4, 2),
    (3, 1),
    (7, 4),
];

const TRI: [(VertexId, VertexId); 3] = [(1, 2), (2, 3), (3, 1)];

const K4BI: [(VertexId, VertexId); 12] = [
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 1),
    (2, 3),
    (2, 4),
    (3, 1),
    (3, 2),
    (3, 4),
    (4, 1),
    (4, 2),
    (4, 3),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Fixture {
    Fig1a,
    Fig1b,
    Fig1c,
    Tri,
    K4bi,
}

impl Fixture {
    pub const ALL: [Fixture; 5] = [
        Fixture::Fig1a,
        Fixture::Fig1b,
        Fixture::Fig1c,
        Fixture::Tri,
        Fixture::K4bi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::Fig1a => "fig1a",
            Fixture::Fig1b => "fig1b",
            Fixture::Fig1c => "fig1c",
            Fixture::Tri => "tri",
            Fixture::K4bi => "k4bi",
        }
    }

    pub fn arcs(self) -> Vec<Arc> {
        let pairs: &[(VertexId, VertexId)] = match self {
            Fixture::Fig1a => &FIG1A,
            Fixture::Fig1b => &FIG1B,
            Fixture::Fig1c => &FIG1C,
            Fixture::Tri => &TRI,
            Fixture::K4bi => &K4BI,
        };
        pairs.iter().map(|&p| Arc::from(p)).collect()
    }

    pub fn digraph(self) -> Digraph {
        Digraph::from_arcs(self.arcs()).expect("fixtures are simple digraphs")
    }

    /// Canonical edge-list text for the fixture.
    pub fn edge_list(self) -> String {
        self.digraph().to_edge_list()
    }
}

impl FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Fixture::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown fixture {s:?}")))
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
