//! Small helpers over `u64` vertex masks.

use crate::graph::Vertex;

pub(crate) fn bit(v: Vertex) -> u64 {
    1u64 << v
}

pub(crate) fn ones(mut mask: u64) -> impl Iterator<Item = Vertex> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let v = mask.trailing_zeros() as Vertex;
        mask &= mask - 1;
        Some(v)
    })
}

pub(crate) fn count(mask: u64) -> usize {
    mask.count_ones() as usize
}

pub(crate) fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Vertices of `within` reachable from `start` inside `within`.
pub(crate) fn reach(adj: &[u64], start: Vertex, within: u64) -> u64 {
    let mut seen = bit(start);
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in ones(frontier) {
            next |= adj[v];
        }
        next &= within & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// `true` when `target` lies in a single component of `G[within]`.
pub(crate) fn joined(adj: &[u64], target: u64, within: u64) -> bool {
    if target == 0 {
        return true;
    }
    let start = target.trailing_zeros() as Vertex;
    reach(adj, start, within) & target == target
}
