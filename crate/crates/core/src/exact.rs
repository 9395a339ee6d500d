//! Exact minimum 2-vertex strongly biconnected spanning subgraph by
//! include/exclude branch-and-bound over the arcs in canonical order.
//!
//! Pruning:
//! * every vertex of a feasible subgraph has in- and out-degree at least 2,
//!   so each missing unit of degree costs one more arc;
//! * any feasible subgraph has at least `2n` arcs;
//! * the property is monotone under arc addition, so a branch whose
//!   included plus undecided arcs are infeasible is dead;
//! * once the included arcs are feasible, extending them only grows the
//!   solution.
//!
//! Arcs are branched include-first, so among equal-size solutions the first
//! one found is the lexicographically least sorted arc list. The incumbent
//! only changes on strict improvement, which makes the answer unique.

use std::time::{Duration, Instant};

use crate::approx::approx_m2vsbss_alg1;
use crate::error::{Error, Result};
use crate::graph::{Adjacency, ArcSet, Digraph};
use crate::sparsify::DeletionOrder;
use crate::strong::is_2vsb_adj;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactLimits {
    pub max_n: usize,
    pub max_m: usize,
    pub time_limit: Option<Duration>,
}

impl Default for ExactLimits {
    fn default() -> Self {
        ExactLimits {
            max_n: 10,
            max_m: 32,
            time_limit: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub arcs: ArcSet,
    pub size: usize,
    pub nodes_explored: u64,
    pub proven_optimal: bool,
    pub time_limit_hit: bool,
}

/// Lower bound on any 2-vertex strongly biconnected spanning subgraph: `2n`.
pub fn lower_bound(g: &Digraph) -> Result<usize> {
    if !is_2vsb_adj(&g.adjacency()) {
        return Err(Error::Not2Vsb);
    }
    Ok(2 * g.n())
}

pub fn exact_m2vsbss(g: &Digraph, limits: ExactLimits) -> Result<ExactResult> {
    if !is_2vsb_adj(&g.adjacency()) {
        return Err(Error::Not2Vsb);
    }
    if g.n() > limits.max_n || g.m() > limits.max_m {
        // Too large to search: report the cheapest feasible answer at hand.
        let incumbent = approx_m2vsbss_alg1(g, DeletionOrder::lexicographic())?.arcs;
        return Ok(ExactResult {
            size: incumbent.len(),
            arcs: incumbent,
            nodes_explored: 0,
            proven_optimal: false,
            time_limit_hit: true,
        });
    }

    let arcs: Vec<(usize, usize)> = g.dense_arcs().collect();
    let n = g.n();
    let mut search = Search {
        n,
        arcs: &arcs,
        included: vec![false; arcs.len()],
        excluded: vec![false; arcs.len()],
        best: vec![true; arcs.len()],
        best_size: arcs.len(),
        floor: 2 * n,
        nodes: 0,
        deadline: limits.time_limit.map(|d| Instant::now() + d),
        aborted: false,
        out_inc: vec![0; n],
        in_inc: vec![0; n],
        out_avail: vec![0; n],
        in_avail: vec![0; n],
    };
    for &(u, w) in &arcs {
        search.out_avail[u] += 1;
        search.in_avail[w] += 1;
    }
    search.branch(0, 0);

    let chosen: ArcSet = g
        .arcs()
        .iter()
        .zip(&search.best)
        .filter(|&(_, &keep)| keep)
        .map(|(a, _)| *a)
        .collect();
    Ok(ExactResult {
        size: chosen.len(),
        arcs: chosen,
        nodes_explored: search.nodes,
        proven_optimal: !search.aborted,
        time_limit_hit: search.aborted,
    })
}

struct Search<'a> {
    n: usize,
    arcs: &'a [(usize, usize)],
    included: Vec<bool>,
    excluded: Vec<bool>,
    best: Vec<bool>,
    best_size: usize,
    floor: usize,
    nodes: u64,
    deadline: Option<Instant>,
    aborted: bool,
    out_inc: Vec<usize>,
    in_inc: Vec<usize>,
    out_avail: Vec<usize>,
    in_avail: Vec<usize>,
}

impl Search<'_> {
    fn deficit(&self) -> usize {
        let out: usize = self.out_inc.iter().map(|&d| 2usize.saturating_sub(d)).sum();
        let inc: usize = self.in_inc.iter().map(|&d| 2usize.saturating_sub(d)).sum();
        out.max(inc)
    }

    fn adjacency(&self, pick: impl Fn(usize) -> bool) -> Adjacency {
        Adjacency::directed(
            self.n,
            self.arcs
                .iter()
                .enumerate()
                .filter(|&(i, _)| pick(i))
                .map(|(_, &a)| a),
        )
    }

    fn branch(&mut self, next: usize, count: usize) {
        if self.aborted {
            return;
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.aborted = true;
                    return;
                }
            }
        }

        let deficit = self.deficit();
        if (count + deficit).max(self.floor) >= self.best_size {
            return;
        }
        if deficit == 0 && is_2vsb_adj(&self.adjacency(|i| self.included[i])) {
            self.best = self.included.clone();
            self.best_size = count;
            return;
        }
        if next == self.arcs.len() {
            return;
        }

        let (u, w) = self.arcs[next];

        self.included[next] = true;
        self.out_inc[u] += 1;
        self.in_inc[w] += 1;
        self.branch(next + 1, count + 1);
        self.included[next] = false;
        self.out_inc[u] -= 1;
        self.in_inc[w] -= 1;

        if self.out_avail[u] <= 2 || self.in_avail[w] <= 2 {
            return;
        }
        self.excluded[next] = true;
        self.out_avail[u] -= 1;
        self.in_avail[w] -= 1;
        if is_2vsb_adj(&self.adjacency(|i| !self.excluded[i])) {
            self.branch(next + 1, count);
        }
        self.excluded[next] = false;
        self.out_avail[u] += 1;
        self.in_avail[w] += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Arc;

    fn bidirected_complete(n: u32) -> Digraph {
        let arcs = (1..=n).flat_map(|a| {
            (1..=n)
                .filter(move |&b| b != a)
                .map(move |b| Arc::new(a, b))
        });
        Digraph::from_arcs(arcs).unwrap()
    }

    #[test]
    fn lower_bound_is_twice_n() {
        assert_eq!(lower_bound(&bidirected_complete(4)).unwrap(), 8);
        assert_eq!(lower_bound(&bidirected_complete(3)).unwrap(), 6);
        let tri = Digraph::from_edge_list("1 2\n2 3\n3 1\n").unwrap();
        assert!(matches!(lower_bound(&tri), Err(Error::Not2Vsb)));
    }

    #[test]
    fn bidirected_k4_optimum_has_eight_arcs() {
        let g = bidirected_complete(4);
        let r = exact_m2vsbss(&g, ExactLimits::default()).unwrap();
        assert_eq!(r.size, 8);
        assert!(r.proven_optimal);
        assert!(!r.time_limit_hit);
        assert!(is_2vsb_adj(
            &g.subgraph_with_arcs(&r.arcs).unwrap().adjacency()
        ));
    }

    #[test]
    fn oversized_input_reports_unproven_incumbent() {
        let g = bidirected_complete(5);
        let limits = ExactLimits {
            max_n: 4,
            ..ExactLimits::default()
        };
        let r = exact_m2vsbss(&g, limits).unwrap();
        assert!(!r.proven_optimal);
        assert!(r.time_limit_hit);
        assert!(is_2vsb_adj(
            &g.subgraph_with_arcs(&r.arcs).unwrap().adjacency()
        ));
    }

    #[test]
    fn zero_time_budget_aborts_without_lying() {
        let g = bidirected_complete(5);
        let limits = ExactLimits {
            time_limit: Some(Duration::ZERO),
            ..ExactLimits::default()
        };
        let r = exact_m2vsbss(&g, limits).unwrap();
        if r.time_limit_hit {
            assert!(!r.proven_optimal);
        }
        assert!(is_2vsb_adj(
            &g.subgraph_with_arcs(&r.arcs).unwrap().adjacency()
        ));
    }
}
