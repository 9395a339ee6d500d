//! Brute-force reference implementations, written straight from the
//! definitions and sharing no code with the library's algorithms.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeSet;

use sb2v::{Arc, Digraph, VertexId};

pub fn bidirected_complete(n: VertexId) -> Digraph {
    let arcs = (1..=n).flat_map(|a| {
        (1..=n)
            .filter(move |&b| b != a)
            .map(move |b| Arc::new(a, b))
    });
    Digraph::from_arcs(arcs).unwrap()
}

/// `reach[i][j]`: vertex j reachable from vertex i using only vertices in
/// `alive`. Floyd–Warshall transitive closure.
fn closure(vs: &[VertexId], arcs: &[(VertexId, VertexId)]) -> Vec<Vec<bool>> {
    let k = vs.len();
    let pos = |v: VertexId| vs.iter().position(|&x| x == v);
    let mut r = vec![vec![false; k]; k];
    for i in 0..k {
        r[i][i] = true;
    }
    for &(a, b) in arcs {
        if let (Some(i), Some(j)) = (pos(a), pos(b)) {
            r[i][j] = true;
        }
    }
    for m in 0..k {
        for i in 0..k {
            if r[i][m] {
                for j in 0..k {
                    if r[m][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
    }
    r
}

fn arcs_of(g: &Digraph) -> Vec<(VertexId, VertexId)> {
    g.arcs().iter().map(|a| (a.tail, a.head)).collect()
}

/// Mutual-reachability classes on the given vertex subset.
pub fn reachability_classes(vs: &[VertexId], arcs: &[(VertexId, VertexId)]) -> Vec<Vec<VertexId>> {
    let r = closure(vs, arcs);
    let mut classes: Vec<Vec<VertexId>> = Vec::new();
    let mut done = vec![false; vs.len()];
    for i in 0..vs.len() {
        if done[i] {
            continue;
        }
        let class: Vec<VertexId> = (0..vs.len())
            .filter(|&j| r[i][j] && r[j][i])
            .inspect(|&j| done[j] = true)
            .map(|j| vs[j])
            .collect();
        classes.push(class);
    }
    classes.sort();
    classes
}

pub fn sc_on(vs: &[VertexId], arcs: &[(VertexId, VertexId)]) -> bool {
    !vs.is_empty() && reachability_classes(vs, arcs).len() == 1
}

/// Connected components of the underlying graph restricted to `vs`.
pub fn undirected_components(vs: &[VertexId], arcs: &[(VertexId, VertexId)]) -> usize {
    let sym: Vec<(VertexId, VertexId)> = arcs.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect();
    reachability_classes(vs, &sym).len()
}

pub fn connected_on(vs: &[VertexId], arcs: &[(VertexId, VertexId)]) -> bool {
    !vs.is_empty() && undirected_components(vs, arcs) == 1
}

/// Vertices whose deletion increases the number of connected components.
pub fn brute_articulation(vs: &[VertexId], arcs: &[(VertexId, VertexId)]) -> BTreeSet<VertexId> {
    let base = undirected_components(vs, arcs);
    vs.iter()
        .copied()
        .filter(|&v| {
            let rest: Vec<VertexId> = vs.iter().copied().filter(|&x| x != v).collect();
            undirected_components(&rest, arcs) > base
        })
        .collect()
}

/// Biconnected: connected and no articulation point (K1 and K2 included).
pub fn bicon_on(vs: &[VertexId], arcs: &[(VertexId, VertexId)]) -> bool {
    connected_on(vs, arcs) && brute_articulation(vs, arcs).is_empty()
}

pub fn sb_on(vs: &[VertexId], arcs: &[(VertexId, VertexId)]) -> bool {
    sc_on(vs, arcs) && bicon_on(vs, arcs)
}

pub fn brute_sb(g: &Digraph) -> bool {
    sb_on(g.vertices(), &arcs_of(g))
}

pub fn brute_2vsb_arcs(vs: &[VertexId], arcs: &[(VertexId, VertexId)]) -> bool {
    vs.len() >= 3
        && sb_on(vs, arcs)
        && vs.iter().all(|&v| {
            let rest: Vec<VertexId> = vs.iter().copied().filter(|&x| x != v).collect();
            sb_on(&rest, arcs)
        })
}

pub fn brute_2vsb(g: &Digraph) -> bool {
    brute_2vsb_arcs(g.vertices(), &arcs_of(g))
}

pub fn brute_2vc(g: &Digraph) -> bool {
    let vs = g.vertices();
    let arcs = arcs_of(g);
    vs.len() >= 3
        && sc_on(vs, &arcs)
        && vs.iter().all(|&v| {
            let rest: Vec<VertexId> = vs.iter().copied().filter(|&x| x != v).collect();
            sc_on(&rest, &arcs)
        })
}

/// Every maximal vertex subset (by inclusion) whose induced subgraph is
/// strongly biconnected. Exponential; n <= 8.
pub fn maximal_sb_sets(g: &Digraph) -> Vec<Vec<VertexId>> {
    let vs = g.vertices();
    let arcs = arcs_of(g);
    let n = vs.len();
    let mut good: Vec<u32> = Vec::new();
    for mask in 1u32..(1 << n) {
        let sub: Vec<VertexId> = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| vs[i])
            .collect();
        let inside: Vec<(VertexId, VertexId)> = arcs
            .iter()
            .copied()
            .filter(|(a, b)| sub.contains(a) && sub.contains(b))
            .collect();
        if sb_on(&sub, &inside) {
            good.push(mask);
        }
    }
    let mut out: Vec<Vec<VertexId>> = good
        .iter()
        .filter(|&&m| !good.iter().any(|&o| o != m && o & m == m))
        .map(|&m| (0..n).filter(|i| m >> i & 1 == 1).map(|i| vs[i]).collect())
        .collect();
    out.sort();
    out
}

/// Size of a minimum 2VSB spanning subgraph and the lexicographically least
/// optimum, by enumerating arc subsets in increasing size. m <= 24.
pub fn brute_minimum_2vsb(g: &Digraph) -> (usize, Vec<Arc>) {
    let arcs = g.arcs().to_vec();
    let vs = g.vertices();
    for k in 0..=arcs.len() {
        let mut best: Option<Vec<Arc>> = None;
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let pick: Vec<(VertexId, VertexId)> =
                idx.iter().map(|&i| (arcs[i].tail, arcs[i].head)).collect();
            if brute_2vsb_arcs(vs, &pick) {
                // Combinations are generated in lexicographic index order.
                best = Some(idx.iter().map(|&i| arcs[i]).collect());
                break;
            }
            // next combination
            let mut i = k;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if idx[i] < arcs.len() - k + i {
                    idx[i] += 1;
                    for j in i + 1..k {
                        idx[j] = idx[j - 1] + 1;
                    }
                    i = usize::MAX;
                    break;
                }
            }
            if i != usize::MAX {
                break;
            }
        }
        if let Some(b) = best {
            return (k, b);
        }
    }
    unreachable!("input must be 2VSB")
}
