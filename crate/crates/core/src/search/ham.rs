use super::bits::{bit, count, full, ones, reach};
use super::budget::Ticker;
use crate::graph::Vertex;

/// Result of a budgeted sub-search.
pub(crate) enum Sub<T> {
    Found(T),
    Absent,
    Exhausted,
}

/// Lexicographically least normalized Hamiltonian cycle of `G[mask]`: the
/// sequence starts at the smallest vertex and is the first one met by a
/// depth-first search that tries neighbors in increasing order.
pub(crate) fn lexmin_cycle(adj: &[u64], mask: u64, ticker: &mut Ticker) -> Sub<Vec<Vertex>> {
    if count(mask) < 3 {
        return Sub::Absent;
    }
    let v0 = mask.trailing_zeros() as Vertex;
    let mut path = vec![v0];
    let mut dfs = CycleDfs { adj, mask, v0, ticker };
    if dfs.run(&mut path, bit(v0)) {
        Sub::Found(path)
    } else if dfs.ticker.exhausted {
        Sub::Exhausted
    } else {
        Sub::Absent
    }
}

struct CycleDfs<'a, 't> {
    adj: &'a [u64],
    mask: u64,
    v0: Vertex,
    ticker: &'t mut Ticker,
}

impl CycleDfs<'_, '_> {
    fn run(&mut self, path: &mut Vec<Vertex>, visited: u64) -> bool {
        if !self.ticker.tick() {
            return false;
        }
        let cur = *path.last().unwrap();
        if visited == self.mask {
            return self.adj[cur] & bit(self.v0) != 0;
        }
        let rest = self.mask & !visited;
        let ends = bit(cur) | bit(self.v0);
        if ones(rest).any(|w| count(self.adj[w] & (rest | ends)) < 2) {
            return false;
        }
        if reach(self.adj, cur, rest | bit(cur)) & rest != rest {
            return false;
        }
        for w in ones(self.adj[cur] & rest) {
            path.push(w);
            if self.run(path, visited | bit(w)) {
                return true;
            }
            path.pop();
            if self.ticker.exhausted {
                return false;
            }
        }
        false
    }
}

/// Exhaustive Hamiltonian `(x,y)`-path search on an `n`-vertex graph given
/// by adjacency masks.
pub(crate) fn path_between(adj: &[u64], n: usize, x: Vertex, y: Vertex) -> Option<Vec<Vertex>> {
    let all = full(n);
    let mut path = vec![x];
    if path_dfs(adj, all, y, &mut path, bit(x)) {
        Some(path)
    } else {
        None
    }
}

fn path_dfs(adj: &[u64], all: u64, y: Vertex, path: &mut Vec<Vertex>, visited: u64) -> bool {
    let cur = *path.last().unwrap();
    if visited == all {
        return cur == y;
    }
    let rest = all & !visited;
    if ones(rest).any(|w| count(adj[w] & (rest | bit(cur))) < if w == y { 1 } else { 2 }) {
        return false;
    }
    if reach(adj, cur, rest | bit(cur)) & rest != rest {
        return false;
    }
    let mut candidates = adj[cur] & rest;
    if rest != bit(y) {
        candidates &= !bit(y);
    }
    for w in ones(candidates) {
        path.push(w);
        if path_dfs(adj, all, y, path, visited | bit(w)) {
            return true;
        }
        path.pop();
    }
    false
}
