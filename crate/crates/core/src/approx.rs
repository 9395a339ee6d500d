//! Approximations for the minimum 2-vertex strongly biconnected spanning
//! subgraph.
//!
//! [`approx_m2vsbss_alg1`] starts from a minimal 2-vertex-connected core and
//! repairs it around each of its b-articulation points: while deleting `b`
//! leaves a graph that is not strongly biconnected, it adds an input arc
//! joining two different strongly biconnected components of that graph.
//! Because the graph minus `b` stays strongly connected, every such arc
//! closes a cycle through both components and the component count drops by
//! at least one, so at most `n - 2` arcs are added per `b`.
//!
//! [`union_algorithm`] instead combines a minimal 2-vertex-connected core
//! `L` with the arcs `A` lying over a minimal 3-vertex-connected subgraph
//! `U` of the underlying graph.

use std::fmt;
use std::str::FromStr;

use crate::connectivity::is_2vc_digraph;
use crate::error::{Error, Result};
use crate::graph::{Arc, ArcSet, Digraph, EdgeSet, VertexId};
use crate::sparsify::{minimal_2vc_subgraph, minimal_3vc_subgraph, DeletionOrder};
use crate::strong::{b_articulation_points, is_2vsb, is_strongly_biconnected, sbcc};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Alg1,
    Union,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "alg1" => Ok(Method::Alg1),
            "union" => Ok(Method::Union),
            other => Err(Error::InvalidArgument(format!(
                "unknown method {other:?} (expected alg1 or union)"
            ))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Alg1 => "alg1",
            Method::Union => "union",
        })
    }
}

/// Arcs added while repairing the core around one b-articulation point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Augmentation {
    pub b: VertexId,
    pub added: Vec<Arc>,
    /// Component count of the `b`-deleted subgraph before each addition,
    /// followed by the final count (1).
    pub t_history: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxResult {
    pub method: Method,
    pub arcs: ArcSet,
    pub n: usize,
    pub m: usize,
    /// b-articulation points of the minimal 2-vertex-connected core.
    pub l: usize,
    /// Guaranteed size bound: `l(n-1) + 4n` for alg1, `7n` for union.
    pub bound: usize,
    pub core_size: usize,
    pub trace: Vec<Augmentation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnionResult {
    pub core_l: ArcSet,
    pub undirected_u: EdgeSet,
    pub lifted_a: ArcSet,
    pub union_arcs: ArcSet,
}

/// Sizes and ratios for one approximation run.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub l: usize,
    pub result_size: usize,
    pub bound: usize,
    pub lower_bound: usize,
    pub exact_size: Option<usize>,
    pub ratio: f64,
}

pub fn alg1_bound(l: usize, n: usize) -> usize {
    l * n.saturating_sub(1) + 4 * n
}

/// Grows `current` until deleting `b` leaves a strongly biconnected graph.
/// Candidates are the lexicographically smallest arcs of `g` outside
/// `current`, not incident to `b`, whose endpoints share no component.
pub fn augment_for_bap(g: &Digraph, current: &ArcSet, b: VertexId) -> Result<Augmentation> {
    if !g.contains_vertex(b) {
        return Err(Error::UnknownVertex(b));
    }
    if !is_2vsb(g) {
        return Err(Error::Not2Vsb);
    }
    let mut grown = current.clone();
    if !is_2vc_digraph(&g.subgraph_with_arcs(&grown)?) {
        return Err(Error::Not2VertexConnected);
    }

    let mut added = Vec::new();
    let mut t_history = Vec::new();
    loop {
        let without_b = g.subgraph_with_arcs(&grown)?.remove_vertex(b)?;
        if is_strongly_biconnected(&without_b) {
            t_history.push(1);
            break;
        }
        let components = sbcc(&without_b);
        t_history.push(components.t());
        let pick = g
            .arcs()
            .iter()
            .find(|a| {
                a.tail != b
                    && a.head != b
                    && !grown.contains(a)
                    && !components.same_component(a.tail, a.head)
            })
            .copied()
            .ok_or(Error::Not2Vsb)?;
        grown.insert(pick);
        added.push(pick);
    }
    Ok(Augmentation {
        b,
        added,
        t_history,
    })
}

pub fn approx_m2vsbss_alg1(g: &Digraph, order: DeletionOrder) -> Result<ApproxResult> {
    if !is_2vsb(g) {
        return Err(Error::Not2Vsb);
    }
    let core = minimal_2vc_subgraph(g, order)?;
    let core_graph = g.subgraph_with_arcs(&core)?;
    let (n, m) = (g.n(), g.m());
    if is_2vsb(&core_graph) {
        return Ok(ApproxResult {
            method: Method::Alg1,
            core_size: core.len(),
            arcs: core,
            n,
            m,
            l: 0,
            bound: alg1_bound(0, n),
            trace: Vec::new(),
        });
    }

    let baps = b_articulation_points(&core_graph)?;
    let mut arcs = core.clone();
    let mut trace = Vec::with_capacity(baps.l);
    for &b in &baps.points {
        let step = augment_for_bap(g, &arcs, b)?;
        arcs.extend(step.added.iter().copied());
        trace.push(step);
    }
    // The b-articulation points were taken from the core only; adding arcs
    // never breaks what earlier iterations repaired.
    debug_assert!(is_2vsb(&g.subgraph_with_arcs(&arcs)?));
    Ok(ApproxResult {
        method: Method::Alg1,
        core_size: core.len(),
        arcs,
        n,
        m,
        l: baps.l,
        bound: alg1_bound(baps.l, n),
        trace,
    })
}

pub fn union_algorithm(g: &Digraph, order: DeletionOrder) -> Result<UnionResult> {
    if g.n() < 4 {
        return Err(Error::TooFewVertices { n: g.n(), min: 4 });
    }
    if !is_2vsb(g) {
        return Err(Error::Not2Vsb);
    }
    let core_l = minimal_2vc_subgraph(g, order)?;
    let undirected_u = minimal_3vc_subgraph(&g.underlying(), order)?;
    let lifted_a: ArcSet = g
        .arcs()
        .iter()
        .filter(|a| undirected_u.contains(&a.edge()))
        .copied()
        .collect();
    let union_arcs = core_l.union(&lifted_a);
    Ok(UnionResult {
        core_l,
        undirected_u,
        lifted_a,
        union_arcs,
    })
}

impl UnionResult {
    /// Packages the union as an [`ApproxResult`] with bound `7n`.
    pub fn into_approx(self, g: &Digraph) -> Result<ApproxResult> {
        let core = g.subgraph_with_arcs(&self.core_l)?;
        let l = b_articulation_points(&core)?.l;
        Ok(ApproxResult {
            method: Method::Union,
            core_size: self.core_l.len(),
            arcs: self.union_arcs,
            n: g.n(),
            m: g.m(),
            l,
            bound: 7 * g.n(),
            trace: Vec::new(),
        })
    }
}

/// Runs `method` and returns a uniform result.
pub fn approximate(g: &Digraph, method: Method, order: DeletionOrder) -> Result<ApproxResult> {
    match method {
        Method::Alg1 => approx_m2vsbss_alg1(g, order),
        Method::Union => union_algorithm(g, order)?.into_approx(g),
    }
}

pub fn bound_report(r: &ApproxResult, exact_size: Option<usize>) -> BoundReport {
    let lower_bound = 2 * r.n;
    let reference = exact_size.map_or(lower_bound, |e| e.max(lower_bound));
    BoundReport {
        n: r.n,
        m: r.m,
        l: r.l,
        result_size: r.arcs.len(),
        bound: r.bound,
        lower_bound,
        exact_size,
        ratio: r.arcs.len() as f64 / reference as f64,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bidirected_complete(n: u32) -> Digraph {
        let arcs = (1..=n).flat_map(|a| {
            (1..=n)
                .filter(move |&b| b != a)
                .map(move |b| Arc::new(a, b))
        });
        Digraph::from_arcs(arcs).unwrap()
    }

    #[test]
    fn method_parsing() {
        assert_eq!("alg1".parse::<Method>().unwrap(), Method::Alg1);
        assert_eq!("union".parse::<Method>().unwrap(), Method::Union);
        assert!("lp".parse::<Method>().is_err());
    }

    #[test]
    fn bound_formula() {
        assert_eq!(alg1_bound(0, 7), 28);
        assert_eq!(alg1_bound(2, 7), 40);
    }

    #[test]
    fn alg1_on_bidirected_k4() {
        let g = bidirected_complete(4);
        let r = approx_m2vsbss_alg1(&g, DeletionOrder::lexicographic()).unwrap();
        assert!(is_2vsb(&g.subgraph_with_arcs(&r.arcs).unwrap()));
        assert!((8..=12).contains(&r.arcs.len()));
        assert!(r.arcs.len() <= r.bound);
    }

    #[test]
    fn union_on_bidirected_k4_keeps_everything() {
        let g = bidirected_complete(4);
        let u = union_algorithm(&g, DeletionOrder::lexicographic()).unwrap();
        assert_eq!(u.undirected_u.len(), 6);
        assert_eq!(u.lifted_a.len(), 12);
        assert_eq!(u.union_arcs.len(), 12);
    }

    #[test]
    fn union_rejects_three_vertices() {
        let g = bidirected_complete(3);
        assert!(matches!(
            union_algorithm(&g, DeletionOrder::lexicographic()),
            Err(Error::TooFewVertices { n: 3, min: 4 })
        ));
    }

    #[test]
    fn alg1_rejects_non_2vsb() {
        let tri = Digraph::from_edge_list("1 2\n2 3\n3 1\n").unwrap();
        assert!(matches!(
            approx_m2vsbss_alg1(&tri, DeletionOrder::lexicographic()),
            Err(Error::Not2Vsb)
        ));
    }

    #[test]
    fn report_without_augmentation() {
        let g = bidirected_complete(4);
        let r = approx_m2vsbss_alg1(&g, DeletionOrder::lexicographic()).unwrap();
        let rep = bound_report(&r, None);
        assert_eq!(rep.lower_bound, 8);
        if r.l == 0 {
            assert_eq!(rep.bound, 16);
            assert!(rep.ratio <= 2.0);
        }
    }
}
