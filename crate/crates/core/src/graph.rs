//! Simple directed and undirected graphs over external vertex labels.
//!
//! Both graph types are immutable once built. Labels are arbitrary
//! non-negative integers; internally every vertex also has a dense index
//! (its position in the ascending label order) which the algorithms use.
//! Vertices iterate in ascending label order and arcs in lexicographic
//! `(tail, head)` order, so everything built on top is deterministic.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::io::BufRead;

use crate::error::{Error, Result};

pub type VertexId = u32;

/// A directed arc `tail -> head`. Ordering is lexicographic on `(tail, head)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub tail: VertexId,
    pub head: VertexId,
}

impl Arc {
    pub const fn new(tail: VertexId, head: VertexId) -> Self {
        Arc { tail, head }
    }

    pub fn reversed(self) -> Self {
        Arc::new(self.head, self.tail)
    }

    /// The undirected edge this arc collapses to in the underlying graph.
    pub fn edge(self) -> Edge {
        Edge::new(self.tail, self.head)
    }
}

impl From<(VertexId, VertexId)> for Arc {
    fn from((tail, head): (VertexId, VertexId)) -> Self {
        Arc::new(tail, head)
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.tail, self.head)
    }
}

/// An unordered pair `{u, w}`, stored with the smaller label first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    lo: VertexId,
    hi: VertexId,
}

impl Edge {
    pub fn new(a: VertexId, b: VertexId) -> Self {
        Edge {
            lo: a.min(b),
            hi: a.max(b),
        }
    }

    pub fn endpoints(self) -> (VertexId, VertexId) {
        (self.lo, self.hi)
    }

    pub fn contains(self, v: VertexId) -> bool {
        self.lo == v || self.hi == v
    }
}

impl From<(VertexId, VertexId)> for Edge {
    fn from((a, b): (VertexId, VertexId)) -> Self {
        Edge::new(a, b)
    }
}

pub type EdgeSet = BTreeSet<Edge>;

/// An ordered set of arcs, typically a subset of one parent [`Digraph`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ArcSet(BTreeSet<Arc>);

impl ArcSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, arc: &Arc) -> bool {
        self.0.contains(arc)
    }

    pub fn insert(&mut self, arc: Arc) -> bool {
        self.0.insert(arc)
    }

    pub fn remove(&mut self, arc: &Arc) -> bool {
        self.0.remove(arc)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = &Arc> + ExactSizeIterator + '_ {
        self.0.iter()
    }

    pub fn is_subset(&self, other: &ArcSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &ArcSet) -> ArcSet {
        ArcSet(self.0.union(&other.0).copied().collect())
    }

    pub fn to_vec(&self) -> Vec<Arc> {
        self.0.iter().copied().collect()
    }
}

impl FromIterator<Arc> for ArcSet {
    fn from_iter<I: IntoIterator<Item = Arc>>(iter: I) -> Self {
        ArcSet(iter.into_iter().collect())
    }
}

impl Extend<Arc> for ArcSet {
    fn extend<I: IntoIterator<Item = Arc>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl IntoIterator for ArcSet {
    type Item = Arc;
    type IntoIter = std::collections::btree_set::IntoIter<Arc>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a ArcSet {
    type Item = &'a Arc;
    type IntoIter = std::collections::btree_set::Iter<'a, Arc>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Dense adjacency lists over vertex indices `0..n`.
///
/// `und` is the underlying undirected adjacency with antiparallel arcs
/// merged. All lists are sorted and duplicate-free.
#[derive(Debug, Clone)]
pub(crate) struct Adjacency {
    pub out: Vec<Vec<usize>>,
    pub inc: Vec<Vec<usize>>,
    pub und: Vec<Vec<usize>>,
}

impl Adjacency {
    pub fn directed(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        let mut und = vec![Vec::new(); n];
        for (u, w) in arcs {
            out[u].push(w);
            inc[w].push(u);
            und[u].push(w);
            und[w].push(u);
        }
        for list in out.iter_mut().chain(inc.iter_mut()).chain(und.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        Adjacency { out, inc, und }
    }

    pub fn undirected(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut und = vec![Vec::new(); n];
        for (u, w) in edges {
            und[u].push(w);
            und[w].push(u);
        }
        for list in und.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        Adjacency {
            out: Vec::new(),
            inc: Vec::new(),
            und,
        }
    }

    pub fn n(&self) -> usize {
        self.und.len()
    }
}

fn sorted_labels(vertices: impl IntoIterator<Item = VertexId>) -> Vec<VertexId> {
    let set: BTreeSet<VertexId> = vertices.into_iter().collect();
    set.into_iter().collect()
}

fn dense_index(labels: &[VertexId], v: VertexId) -> Option<usize> {
    labels.binary_search(&v).ok()
}

/// A simple directed graph: no self-loops, no parallel arcs.
///
/// Equality compares vertex and arc sets only, not the order arcs were supplied in.
#[derive(Debug, Clone)]
pub struct Digraph {
    labels: Vec<VertexId>,
    arcs: Vec<Arc>,
    // Indices into `arcs`, in the order arcs were first supplied.
    input_order: Vec<usize>,
}

impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.arcs == other.arcs
    }
}

impl Eq for Digraph {}

impl Digraph {
    /// Builds a digraph whose vertex set is exactly the arc endpoints.
    pub fn from_arcs(arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        Self::with_vertices(std::iter::empty(), arcs)
    }

    /// Builds a digraph on `vertices` plus every arc endpoint.
    /// Duplicate arcs collapse; self-loops are rejected.
    pub fn with_vertices(
        vertices: impl IntoIterator<Item = VertexId>,
        arcs: impl IntoIterator<Item = Arc>,
    ) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut supplied = Vec::new();
        for arc in arcs {
            if arc.tail == arc.head {
                return Err(Error::SelfLoopArc(arc.tail));
            }
            if seen.insert(arc) {
                supplied.push(arc);
            }
        }
        let labels = sorted_labels(
            vertices
                .into_iter()
                .chain(supplied.iter().flat_map(|a| [a.tail, a.head])),
        );
        let arcs: Vec<Arc> = seen.into_iter().collect();
        let input_order = supplied
            .iter()
            .map(|a| arcs.binary_search(a).expect("arc present"))
            .collect();
        Ok(Digraph {
            labels,
            arcs,
            input_order,
        })
    }

    /// Parses the edge-list text format: one `tail head` pair per line,
    /// `#` comments and blank lines ignored.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        Self::read_edge_list(text.as_bytes())
    }

    pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Self> {
        let mut arcs = Vec::new();
        for (i, line) in reader.lines().enumerate() {
            let line_no = i + 1;
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected two integers \"tail head\", got {trimmed:?}"),
                });
            }
            let parse = |s: &str| {
                s.parse::<VertexId>().map_err(|e| Error::Parse {
                    line: line_no,
                    message: format!("invalid vertex label {s:?}: {e}"),
                })
            };
            let tail = parse(fields[0])?;
            let head = parse(fields[1])?;
            if tail == head {
                return Err(Error::SelfLoop {
                    line: line_no,
                    vertex: tail,
                });
            }
            arcs.push(Arc::new(tail, head));
        }
        Self::from_arcs(arcs)
    }

    /// Canonical edge-list text: arcs in lexicographic order, LF endings.
    pub fn to_edge_list(&self) -> String {
        write_arcs(self.arcs.iter())
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.arcs.len()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.labels
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Arcs in the order they were first supplied to the constructor.
    pub fn arcs_in_input_order(&self) -> impl Iterator<Item = Arc> + '_ {
        self.input_order.iter().map(|&i| self.arcs[i])
    }

    pub fn arc_set(&self) -> ArcSet {
        self.arcs.iter().copied().collect()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.index_of(v).is_some()
    }

    pub fn contains_arc(&self, arc: &Arc) -> bool {
        self.arcs.binary_search(arc).is_ok()
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.arcs.iter().filter(|a| a.tail == v).count()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.arcs.iter().filter(|a| a.head == v).count()
    }

    pub(crate) fn index_of(&self, v: VertexId) -> Option<usize> {
        dense_index(&self.labels, v)
    }

    pub(crate) fn label(&self, i: usize) -> VertexId {
        self.labels[i]
    }

    pub(crate) fn dense_arc(&self, arc: &Arc) -> (usize, usize) {
        (
            self.index_of(arc.tail).expect("tail in graph"),
            self.index_of(arc.head).expect("head in graph"),
        )
    }

    pub(crate) fn dense_arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().map(|a| self.dense_arc(a))
    }

    pub(crate) fn adjacency(&self) -> Adjacency {
        Adjacency::directed(self.n(), self.dense_arcs())
    }

    /// Underlying undirected graph: antiparallel arcs merge into one edge.
    pub fn underlying(&self) -> UGraph {
        UGraph::from_parts(
            self.labels.clone(),
            self.arcs.iter().map(|a| a.edge()).collect(),
        )
    }

    /// Induced subgraph on every vertex except `v`.
    pub fn remove_vertex(&self, v: VertexId) -> Result<Digraph> {
        if !self.contains_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
        Ok(self.restrict(|x| x != v))
    }

    /// Induced subgraph on `keep`; every listed vertex must exist.
    pub fn induced_subgraph(&self, keep: &[VertexId]) -> Result<Digraph> {
        for &v in keep {
            if !self.contains_vertex(v) {
                return Err(Error::UnknownVertex(v));
            }
        }
        let keep: BTreeSet<VertexId> = keep.iter().copied().collect();
        Ok(self.restrict(|x| keep.contains(&x)))
    }

    fn restrict(&self, keep: impl Fn(VertexId) -> bool) -> Digraph {
        let labels: Vec<VertexId> = self.labels.iter().copied().filter(|&x| keep(x)).collect();
        let mut remap = vec![None; self.arcs.len()];
        let mut arcs = Vec::new();
        for (i, a) in self.arcs.iter().enumerate() {
            if keep(a.tail) && keep(a.head) {
                remap[i] = Some(arcs.len());
                arcs.push(*a);
            }
        }
        let input_order = self.input_order.iter().filter_map(|&i| remap[i]).collect();
        Digraph {
            labels,
            arcs,
            input_order,
        }
    }

    /// Spanning subgraph: same vertex set, arcs exactly `arcs`.
    pub fn subgraph_with_arcs(&self, arcs: &ArcSet) -> Result<Digraph> {
        let mut keep = vec![false; self.arcs.len()];
        for arc in arcs {
            match self.arcs.binary_search(arc) {
                Ok(i) => keep[i] = true,
                Err(_) => return Err(Error::ArcNotInGraph(*arc)),
            }
        }
        let mut remap = vec![None; self.arcs.len()];
        let mut kept = Vec::new();
        for (i, a) in self.arcs.iter().enumerate() {
            if keep[i] {
                remap[i] = Some(kept.len());
                kept.push(*a);
            }
        }
        let input_order = self.input_order.iter().filter_map(|&i| remap[i]).collect();
        Ok(Digraph {
            labels: self.labels.clone(),
            arcs: kept,
            input_order,
        })
    }

    /// Spanning subgraph with `extra` arcs added. Arcs may be new.
    pub fn with_arcs_added(&self, extra: impl IntoIterator<Item = Arc>) -> Result<Digraph> {
        Digraph::with_vertices(
            self.labels.iter().copied(),
            self.arcs_in_input_order().chain(extra),
        )
    }
}

pub(crate) fn write_arcs<'a>(arcs: impl IntoIterator<Item = &'a Arc>) -> String {
    let mut out = String::new();
    for a in arcs {
        writeln!(out, "{} {}", a.tail, a.head).expect("write to String");
    }
    out
}

/// A simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UGraph {
    labels: Vec<VertexId>,
    edges: Vec<Edge>,
}

impl UGraph {
    pub fn new(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Result<Self> {
        let edges: BTreeSet<Edge> = edges.into_iter().collect();
        if let Some(e) = edges.iter().find(|e| e.lo == e.hi) {
            return Err(Error::SelfLoopArc(e.lo));
        }
        let labels = sorted_labels(
            vertices
                .into_iter()
                .chain(edges.iter().flat_map(|e| [e.lo, e.hi])),
        );
        Ok(UGraph {
            labels,
            edges: edges.into_iter().collect(),
        })
    }

    fn from_parts(labels: Vec<VertexId>, edges: BTreeSet<Edge>) -> Self {
        UGraph {
            labels,
            edges: edges.into_iter().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.labels
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges.iter().copied().collect()
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    pub(crate) fn index_of(&self, v: VertexId) -> Option<usize> {
        dense_index(&self.labels, v)
    }

    pub(crate) fn label(&self, i: usize) -> VertexId {
        self.labels[i]
    }

    pub(crate) fn dense_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|e| {
            (
                self.index_of(e.lo).expect("endpoint in graph"),
                self.index_of(e.hi).expect("endpoint in graph"),
            )
        })
    }

    pub(crate) fn adjacency(&self) -> Adjacency {
        Adjacency::undirected(self.n(), self.dense_edges())
    }

    pub fn remove_vertex(&self, v: VertexId) -> Result<UGraph> {
        if self.index_of(v).is_none() {
            return Err(Error::UnknownVertex(v));
        }
        Ok(UGraph {
            labels: self.labels.iter().copied().filter(|&x| x != v).collect(),
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|e| !e.contains(v))
                .collect(),
        })
    }

    /// Spanning subgraph with exactly `edges`.
    pub fn subgraph_with_edges(&self, edges: &EdgeSet) -> Result<UGraph> {
        for e in edges {
            if !self.contains_edge(e) {
                return Err(Error::InvalidArgument(format!(
                    "edge {{{}, {}}} is not in the graph",
                    e.lo, e.hi
                )));
            }
        }
        Ok(UGraph {
            labels: self.labels.clone(),
            edges: edges.iter().copied().collect(),
        })
    }
}
