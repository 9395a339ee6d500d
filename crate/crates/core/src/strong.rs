//! Strong biconnectivity: a digraph is strongly biconnected when it is
//! strongly connected and its underlying graph is biconnected.

use std::collections::{BTreeMap, BTreeSet};

use crate::connectivity::{biconnected, raw_blocks, scc_ids, strongly_connected};
use crate::error::{Error, Result};
use crate::graph::{Adjacency, Arc, Digraph, VertexId};

type DenseEdges = Vec<(usize, usize)>;

/// Strongly biconnected components.
///
/// Inside each strongly connected component the blocks of the underlying
/// induced graph are the components; vertices of trivial SCCs become
/// singleton components. Components overlap at cut vertices, arcs do not:
/// every arc inside an SCC belongs to exactly one component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SbccDecomposition {
    /// Sorted vertex sets, in lexicographic order.
    pub components: Vec<Vec<VertexId>>,
    /// Component id of every intra-SCC arc. Arcs between SCCs are absent.
    pub arc_component: BTreeMap<Arc, usize>,
}

impl SbccDecomposition {
    /// The component count `t`.
    pub fn t(&self) -> usize {
        self.components.len()
    }

    /// Whether some component contains both `u` and `w`.
    pub fn same_component(&self, u: VertexId, w: VertexId) -> bool {
        self.components
            .iter()
            .any(|c| c.binary_search(&u).is_ok() && c.binary_search(&w).is_ok())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BapReport {
    pub points: BTreeSet<VertexId>,
    pub l: usize,
}

pub(crate) fn strongly_biconnected_adj(adj: &Adjacency, skip: &[usize]) -> bool {
    strongly_connected(adj, skip) && biconnected(adj, skip)
}

pub(crate) fn is_2vsb_adj(adj: &Adjacency) -> bool {
    let n = adj.n();
    n >= 3
        && strongly_biconnected_adj(adj, &[])
        && (0..n).all(|v| strongly_biconnected_adj(adj, &[v]))
}

pub fn is_strongly_biconnected(g: &Digraph) -> bool {
    strongly_biconnected_adj(&g.adjacency(), &[])
}

pub fn sbcc(g: &Digraph) -> SbccDecomposition {
    let (_, scc) = scc_ids(&g.adjacency());
    let intra: Vec<(usize, usize)> = g.dense_arcs().filter(|&(u, w)| scc[u] == scc[w]).collect();
    let adj = Adjacency::directed(g.n(), intra.iter().copied());
    // With inter-SCC arcs gone, each SCC is one connected piece of the
    // underlying graph, so its blocks are exactly the blocks below.
    let raw = raw_blocks(&adj, &[]);

    let mut labelled: Vec<(Vec<VertexId>, DenseEdges)> = raw
        .blocks
        .into_iter()
        .map(|(verts, edges)| (verts.into_iter().map(|i| g.label(i)).collect(), edges))
        .collect();
    labelled.sort();

    let mut edge_component = BTreeMap::new();
    for (id, (_, edges)) in labelled.iter().enumerate() {
        for &(a, b) in edges {
            edge_component.insert((a.min(b), a.max(b)), id);
        }
    }
    let arc_component = g
        .arcs()
        .iter()
        .zip(g.dense_arcs())
        .filter(|&(_, (u, w))| scc[u] == scc[w])
        .map(|(arc, (u, w))| (*arc, edge_component[&(u.min(w), u.max(w))]))
        .collect();

    SbccDecomposition {
        components: labelled.into_iter().map(|(v, _)| v).collect(),
        arc_component,
    }
}

/// Vertices whose deletion leaves a graph that is not strongly biconnected.
/// Only defined on strongly biconnected input.
pub fn b_articulation_points(g: &Digraph) -> Result<BapReport> {
    let adj = g.adjacency();
    if !strongly_biconnected_adj(&adj, &[]) {
        return Err(Error::NotStronglyBiconnected);
    }
    let points: BTreeSet<VertexId> = (0..g.n())
        .filter(|&v| !strongly_biconnected_adj(&adj, &[v]))
        .map(|v| g.label(v))
        .collect();
    Ok(BapReport {
        l: points.len(),
        points,
    })
}

/// 2-vertex strong biconnectivity: at least three vertices and strongly
/// biconnected after deleting any single vertex.
pub fn is_2vsb(g: &Digraph) -> bool {
    is_2vsb_adj(&g.adjacency())
}
