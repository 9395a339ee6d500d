//! Strongly connected components, blocks, and vertex-deletion connectivity
//! checks.
//!
//! The k-connectivity predicates are deliberately naive: they delete every
//! vertex (or vertex pair) in turn and re-run a plain traversal. Everything
//! else in the crate is validated against them.

use std::collections::BTreeSet;

use crate::graph::{Adjacency, Digraph, Edge, UGraph, VertexId};

/// A partition of the vertex set into disjoint classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    /// Classes in ascending order of their smallest vertex; each class sorted.
    pub blocks: Vec<Vec<VertexId>>,
    index: Vec<(VertexId, usize)>,
}

impl Partition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Class id of `v`, or `None` for an unknown vertex.
    pub fn block_of(&self, v: VertexId) -> Option<usize> {
        self.index
            .binary_search_by_key(&v, |&(x, _)| x)
            .ok()
            .map(|i| self.index[i].1)
    }
}

/// Block / cut-vertex decomposition of an undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex set of each block, sorted; blocks ordered lexicographically.
    pub blocks: Vec<Vec<VertexId>>,
    /// Edges of each block, aligned with `blocks`.
    pub block_edges: Vec<Vec<Edge>>,
    pub articulation_points: BTreeSet<VertexId>,
}

impl BlockDecomposition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Index of the block holding edge `e`.
    pub fn block_of_edge(&self, e: &Edge) -> Option<usize> {
        self.block_edges
            .iter()
            .position(|edges| edges.binary_search(e).is_ok())
    }
}

/// Tarjan's algorithm, iterative. Returns a component id per vertex index,
/// ids assigned in order of completion.
pub(crate) fn scc_ids(adj: &Adjacency) -> (usize, Vec<usize>) {
    const UNSEEN: usize = usize::MAX;
    let n = adj.n();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSEEN; n];
    let mut stack = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();
    let mut counter = 0;
    let mut count = 0;

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut next)) = call.last_mut() {
            if let Some(&w) = adj.out[v].get(*next) {
                *next += 1;
                if index[w] == UNSEEN {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().expect("scc stack");
                    on_stack[w] = false;
                    comp[w] = count;
                    if w == v {
                        break;
                    }
                }
                count += 1;
            }
        }
    }
    (count, comp)
}

fn alive_vertices(n: usize, skip: &[usize]) -> impl Iterator<Item = usize> + '_ {
    (0..n).filter(move |v| !skip.contains(v))
}

fn reaches_all(lists: &[Vec<usize>], start: usize, skip: &[usize], alive: usize) -> bool {
    let mut seen = vec![false; lists.len()];
    for &s in skip {
        seen[s] = true;
    }
    seen[start] = true;
    let mut stack = vec![start];
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for &w in &lists[v] {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == alive
}

/// Strong connectivity of the graph with the `skip` vertices deleted.
/// False when nothing is left.
pub(crate) fn strongly_connected(adj: &Adjacency, skip: &[usize]) -> bool {
    let n = adj.n();
    let alive = n - skip.len();
    let Some(start) = alive_vertices(n, skip).next() else {
        return false;
    };
    reaches_all(&adj.out, start, skip, alive) && reaches_all(&adj.inc, start, skip, alive)
}

/// Connectivity of the underlying graph with `skip` deleted.
pub(crate) fn connected(adj: &Adjacency, skip: &[usize]) -> bool {
    let n = adj.n();
    let alive = n - skip.len();
    let Some(start) = alive_vertices(n, skip).next() else {
        return false;
    };
    reaches_all(&adj.und, start, skip, alive)
}

/// Vertex indices and edge list of one block.
pub(crate) type RawBlock = (Vec<usize>, Vec<(usize, usize)>);

/// Raw block structure over dense indices: the edge list of each block,
/// isolated vertices as edge-free singleton blocks, and articulation flags.
pub(crate) struct RawBlocks {
    pub blocks: Vec<RawBlock>,
    pub articulation: Vec<bool>,
}

/// Hopcroft–Tarjan biconnected components, iterative, on `adj.und` with the
/// `skip` vertices deleted.
pub(crate) fn raw_blocks(adj: &Adjacency, skip: &[usize]) -> RawBlocks {
    const UNSEEN: usize = usize::MAX;
    let n = adj.n();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut articulation = vec![false; n];
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut time = 0;

    for root in alive_vertices(n, skip) {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbour position)
        let mut call: Vec<(usize, usize, usize)> = vec![(root, UNSEEN, 0)];
        while let Some(frame) = call.last_mut() {
            let (v, parent) = (frame.0, frame.1);
            if let Some(&w) = adj.und[v].get(frame.2) {
                frame.2 += 1;
                if skip.contains(&w) {
                    continue;
                }
                if disc[w] == UNSEEN {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    call.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            call.pop();
            let Some(&(p, _, _)) = call.last() else {
                continue;
            };
            low[p] = low[p].min(low[v]);
            if low[v] >= disc[p] {
                if p != root {
                    articulation[p] = true;
                }
                let mut edges = Vec::new();
                while let Some(e) = edge_stack.pop() {
                    edges.push(e);
                    if e == (p, v) {
                        break;
                    }
                }
                let mut verts: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
                verts.sort_unstable();
                verts.dedup();
                blocks.push((verts, edges));
            }
        }
        if root_children >= 2 {
            articulation[root] = true;
        }
        if root_children == 0 {
            blocks.push((vec![root], Vec::new()));
        }
    }
    RawBlocks {
        blocks,
        articulation,
    }
}

/// Biconnectivity with `skip` deleted: connected, no articulation point.
/// One vertex and a single edge both count as biconnected.
pub(crate) fn biconnected(adj: &Adjacency, skip: &[usize]) -> bool {
    if !connected(adj, skip) {
        return false;
    }
    let raw = raw_blocks(adj, skip);
    raw.blocks.len() == 1
}

pub(crate) fn is_2vc_adj(adj: &Adjacency) -> bool {
    let n = adj.n();
    n >= 3 && strongly_connected(adj, &[]) && (0..n).all(|v| strongly_connected(adj, &[v]))
}

pub(crate) fn is_3vc_adj(adj: &Adjacency) -> bool {
    let n = adj.n();
    if n < 4 || !connected(adj, &[]) {
        return false;
    }
    (0..n).all(|u| (u + 1..n).all(|v| connected(adj, &[u, v])))
}

/// Strongly connected components of `g`.
pub fn scc(g: &Digraph) -> Partition {
    let (count, ids) = scc_ids(&g.adjacency());
    let mut blocks = vec![Vec::new(); count];
    for (i, &c) in ids.iter().enumerate() {
        blocks[c].push(g.label(i));
    }
    // Labels are pushed in ascending order, so each class is already sorted.
    blocks.sort();
    let mut index: Vec<(VertexId, usize)> = blocks
        .iter()
        .enumerate()
        .flat_map(|(id, b)| b.iter().map(move |&v| (v, id)))
        .collect();
    index.sort_unstable();
    Partition { blocks, index }
}

pub fn is_strongly_connected(g: &Digraph) -> bool {
    strongly_connected(&g.adjacency(), &[])
}

/// Blocks and articulation points of `ug`.
pub fn blocks(ug: &UGraph) -> BlockDecomposition {
    let raw = raw_blocks(&ug.adjacency(), &[]);
    let mut pairs: Vec<(Vec<VertexId>, Vec<Edge>)> = raw
        .blocks
        .into_iter()
        .map(|(verts, edges)| {
            let verts = verts.into_iter().map(|i| ug.label(i)).collect();
            let mut edges: Vec<Edge> = edges
                .into_iter()
                .map(|(a, b)| Edge::new(ug.label(a), ug.label(b)))
                .collect();
            edges.sort_unstable();
            (verts, edges)
        })
        .collect();
    pairs.sort();
    let articulation_points = raw
        .articulation
        .iter()
        .enumerate()
        .filter(|&(_, &cut)| cut)
        .map(|(i, _)| ug.label(i))
        .collect();
    let (blocks, block_edges) = pairs.into_iter().unzip();
    BlockDecomposition {
        blocks,
        block_edges,
        articulation_points,
    }
}

pub fn is_biconnected(ug: &UGraph) -> bool {
    biconnected(&ug.adjacency(), &[])
}

/// 2-vertex-connectivity of a digraph: at least three vertices, strongly
/// connected, and still strongly connected after deleting any one vertex.
pub fn is_2vc_digraph(g: &Digraph) -> bool {
    is_2vc_adj(&g.adjacency())
}

/// 3-vertex-connectivity of an undirected graph: at least four vertices,
/// connected, and connected after deleting any two vertices.
pub fn is_3vc_ugraph(ug: &UGraph) -> bool {
    is_3vc_adj(&ug.adjacency())
}
