//! For a fixed split of the vertices into leaves `L` and internal vertices
//! `S`: does a HIST with exactly that leaf set exist? Equivalently, is there
//! a spanning tree of `G[S]` and an attachment of every leaf to an
//! `S`-neighbor such that every vertex of `S` ends with degree at least 3?

use super::bits::{bit, count, joined, ones};
use super::ham::Sub;
use super::budget::Ticker;
use crate::certify::Edge;
use crate::flow::FlowNetwork;
use crate::graph::Vertex;
use std::collections::HashMap;

/// Edges that must or must not appear, as symmetric adjacency masks.
#[derive(Clone)]
pub(crate) struct EdgeRules {
    pub(crate) force: Vec<u64>,
    pub(crate) ban: Vec<u64>,
}

impl EdgeRules {
    pub(crate) fn none(n: usize) -> Self {
        Self { force: vec![0; n], ban: vec![0; n] }
    }

    pub(crate) fn forced(&mut self, u: Vertex, v: Vertex) {
        self.force[u] |= bit(v);
        self.force[v] |= bit(u);
    }

    pub(crate) fn banned(&mut self, u: Vertex, v: Vertex) {
        self.ban[u] |= bit(v);
        self.ban[v] |= bit(u);
    }
}

pub(crate) struct TreeSolver<'a> {
    adj: &'a [u64],
    s: u64,
    s_list: Vec<Vertex>,
    /// Leaves whose attachment is still open, with their allowed targets.
    free: Vec<(Vertex, u64)>,
    /// Fixed leaf edges `(leaf, target)`.
    fixed: Vec<(Vertex, Vertex)>,
    fixed_at: Vec<usize>,
    /// Open `S`-edges in increasing order.
    open: Vec<Edge>,
    /// Current tree edges.
    chosen: Vec<Edge>,
    /// Neighbors via chosen or still-open edges.
    avail: Vec<u64>,
    tree_deg: Vec<usize>,
    leaf_cap: Vec<usize>,
    memo: HashMap<Vec<u8>, bool>,
}

impl<'a> TreeSolver<'a> {
    /// Returns `None` when the rules already make the split infeasible.
    pub(crate) fn new(adj: &'a [u64], s: u64, l: u64, rules: &EdgeRules) -> Option<Self> {
        let n = adj.len();
        let mut fixed = Vec::new();
        let mut fixed_at = vec![0; n];
        let mut free = Vec::new();
        let mut leaf_cap = vec![0; n];
        for leaf in ones(l) {
            let forced = rules.force[leaf];
            if forced & !s != 0 || count(forced) > 1 {
                return None;
            }
            if forced != 0 {
                let t = forced.trailing_zeros() as Vertex;
                fixed.push((leaf, t));
                fixed_at[t] += 1;
                leaf_cap[t] += 1;
            } else {
                let allowed = adj[leaf] & s & !rules.ban[leaf];
                if allowed == 0 {
                    return None;
                }
                for t in ones(allowed) {
                    leaf_cap[t] += 1;
                }
                free.push((leaf, allowed));
            }
        }
        let s_list: Vec<Vertex> = ones(s).collect();
        let mut solver = Self {
            adj,
            s,
            s_list,
            free,
            fixed,
            fixed_at,
            open: Vec::new(),
            chosen: Vec::new(),
            avail: vec![0; n],
            tree_deg: vec![0; n],
            leaf_cap,
            memo: HashMap::new(),
        };
        let mut dsu: Vec<Vertex> = (0..n).collect();
        for &u in &solver.s_list {
            for v in ones(adj[u] & s & !rules.ban[u]) {
                if v <= u {
                    continue;
                }
                solver.avail[u] |= bit(v);
                solver.avail[v] |= bit(u);
                if rules.force[u] & bit(v) != 0 {
                    let (ru, rv) = (find(&mut dsu, u), find(&mut dsu, v));
                    if ru == rv {
                        return None;
                    }
                    dsu[ru] = rv;
                    solver.chosen.push((u, v));
                    solver.tree_deg[u] += 1;
                    solver.tree_deg[v] += 1;
                } else {
                    solver.open.push((u, v));
                }
            }
        }
        for &u in &solver.s_list {
            if rules.force[u] & s & !solver.avail[u] != 0 {
                return None;
            }
        }
        Some(solver)
    }

    /// Searches for a witness: the full tree edge list.
    pub(crate) fn solve(&mut self, ticker: &mut Ticker) -> Sub<Vec<Edge>> {
        if self.s_list.is_empty() || !self.optimistic_ok() || !joined(&self.avail, self.s, self.s) {
            return Sub::Absent;
        }
        let n = self.adj.len();
        let mut dsu: Vec<Vertex> = (0..n).collect();
        for &(u, v) in &self.chosen {
            let (ru, rv) = (find(&mut dsu, u), find(&mut dsu, v));
            dsu[ru] = rv;
        }
        match self.dfs(0, &mut dsu, ticker) {
            Some(edges) => Sub::Found(edges),
            None if ticker.exhausted => Sub::Exhausted,
            None => Sub::Absent,
        }
    }

    /// Demand check with every vertex at its best conceivable tree degree.
    fn optimistic_ok(&mut self) -> bool {
        let k = self.s_list.len();
        let degs: Vec<usize> =
            self.s_list.iter().map(|&v| count(self.avail[v]).min(k.saturating_sub(1)).max(self.tree_deg[v])).collect();
        self.assign(&degs).is_some()
    }

    fn dfs(&mut self, idx: usize, dsu: &mut Vec<Vertex>, ticker: &mut Ticker) -> Option<Vec<Edge>> {
        if !ticker.tick() {
            return None;
        }
        if self.chosen.len() + 1 == self.s_list.len() {
            return self.finish();
        }
        let needed = self.s_list.len() - 1 - self.chosen.len();
        if idx >= self.open.len() || self.open.len() - idx < needed {
            return None;
        }
        let (u, v) = self.open[idx];
        let (ru, rv) = (find(dsu, u), find(dsu, v));
        if ru != rv {
            let saved = dsu.clone();
            dsu[ru] = rv;
            self.chosen.push((u, v));
            self.tree_deg[u] += 1;
            self.tree_deg[v] += 1;
            let found = self.dfs(idx + 1, dsu, ticker);
            self.chosen.pop();
            self.tree_deg[u] -= 1;
            self.tree_deg[v] -= 1;
            *dsu = saved;
            if found.is_some() || ticker.exhausted {
                return found;
            }
        }
        // leave the edge out
        self.avail[u] &= !bit(v);
        self.avail[v] &= !bit(u);
        let viable = [u, v].iter().all(|&w| count(self.avail[w]) + self.leaf_cap[w] >= 3)
            && joined(&self.avail, self.s, self.s);
        let found = if viable { self.dfs(idx + 1, dsu, ticker) } else { None };
        self.avail[u] |= bit(v);
        self.avail[v] |= bit(u);
        found
    }

    fn finish(&mut self) -> Option<Vec<Edge>> {
        let degs: Vec<usize> = self.s_list.iter().map(|&v| self.tree_deg[v]).collect();
        let key: Vec<u8> = degs.iter().map(|&d| d as u8).collect();
        if self.memo.get(&key) == Some(&false) {
            return None;
        }
        let attach = self.assign(&degs);
        self.memo.insert(key, attach.is_some());
        let mut edges = self.chosen.clone();
        for (leaf, t) in attach? {
            edges.push(if leaf < t { (leaf, t) } else { (t, leaf) });
        }
        edges.sort_unstable();
        Some(edges)
    }

    /// Attaches every leaf so that each internal vertex reaches degree 3.
    fn assign(&self, degs: &[usize]) -> Option<Vec<(Vertex, Vertex)>> {
        let k = self.s_list.len();
        let mut index = vec![usize::MAX; self.adj.len()];
        for (i, &v) in self.s_list.iter().enumerate() {
            index[v] = i;
        }
        let demand: Vec<usize> =
            self.s_list.iter().zip(degs).map(|(&v, &d)| 3usize.saturating_sub(d + self.fixed_at[v])).collect();
        let total: usize = demand.iter().sum();
        if total > self.free.len() {
            return None;
        }
        let f = self.free.len();
        let (source, sink) = (f + k, f + k + 1);
        let mut net = FlowNetwork::new(f + k + 2);
        let mut arcs = Vec::new();
        for (i, &(_, allowed)) in self.free.iter().enumerate() {
            net.add_arc(source, i, 1);
            for t in ones(allowed) {
                arcs.push((i, t, net.add_arc(i, f + index[t], 1)));
            }
        }
        for (j, &d) in demand.iter().enumerate() {
            if d > 0 {
                net.add_arc(f + j, sink, d);
            }
        }
        if net.max_flow(source, sink, total) < total {
            return None;
        }
        let mut target = vec![None; f];
        for &(i, t, id) in &arcs {
            if net.flow_on(id) > 0 {
                target[i] = Some(t);
            }
        }
        let mut out = self.fixed.clone();
        for (i, &(leaf, allowed)) in self.free.iter().enumerate() {
            out.push((leaf, target[i].unwrap_or(allowed.trailing_zeros() as Vertex)));
        }
        Some(out)
    }
}

fn find(dsu: &mut [Vertex], mut x: Vertex) -> Vertex {
    while dsu[x] != x {
        dsu[x] = dsu[dsu[x]];
        x = dsu[x];
    }
    x
}
