//! Vertex connectivity via unit-capacity flows on the vertex-split network,
//! plus an exhaustive cut enumeration kept as an independent test oracle.

use super::{Graph, Vertex};
use crate::error::{precondition, Result};
use crate::flow::FlowNetwork;

pub fn is_connected(g: &Graph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == g.n()
}

/// Number of internally vertex-disjoint `s`-`t` paths, capped at `limit`.
/// `s` and `t` must be distinct and nonadjacent.
fn local_connectivity(g: &Graph, s: Vertex, t: Vertex, limit: usize) -> usize {
    let n = g.n();
    // node 2v = v_in, 2v + 1 = v_out
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        let cap = if v == s || v == t { n } else { 1 };
        net.add_arc(2 * v, 2 * v + 1, cap);
    }
    for (u, v) in g.edges() {
        net.add_arc(2 * u + 1, 2 * v, n);
        net.add_arc(2 * v + 1, 2 * u, n);
    }
    net.max_flow(2 * s + 1, 2 * t, limit)
}

/// `true` iff `g` has more than `k` vertices and no vertex cut of fewer than
/// `k` vertices. `k = 0` always holds; `K_n` is `(n-1)`-connected.
pub fn vertex_connectivity_at_least(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if g.n() <= k || g.min_degree() < k {
        return false;
    }
    for s in 0..g.n() {
        for t in s + 1..g.n() {
            if !g.has_edge(s, t) && local_connectivity(g, s, t, k) < k {
                return false;
            }
        }
    }
    true
}

/// The vertex connectivity `κ(g)`.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let mut k = 0;
    while k < g.n() && vertex_connectivity_at_least(g, k + 1) {
        k += 1;
    }
    k
}

/// Exhaustive check over every vertex subset of size `< k`; only for
/// `n <= 12`. Kept independent of the flow path so it can serve as a test
/// oracle.
pub fn vertex_connectivity_at_least_exhaustive(g: &Graph, k: usize) -> Result<bool> {
    let n = g.n();
    if n > 12 {
        return precondition(format!("exhaustive connectivity is limited to n <= 12, got {n}"));
    }
    if k == 0 {
        return Ok(true);
    }
    if n <= k {
        return Ok(false);
    }
    for removed in 0u32..(1 << n) {
        if (removed.count_ones() as usize) >= k {
            continue;
        }
        let rest: Vec<Vertex> = (0..n).filter(|&v| removed & (1 << v) == 0).collect();
        let h = g.induced_subgraph(&rest).expect("subset of a valid graph");
        if !is_connected(&h) {
            return Ok(false);
        }
    }
    Ok(true)
}
