//! Branching on vertex roles. Every vertex is eventually labelled leaf or
//! internal; constraint propagation keeps the labelling consistent with a
//! HIST (and, when a leaf cycle is wanted, with a Hamiltonian cycle on the
//! leaves). Complete labellings are handed to the tree subsolver.

use super::bits::{bit, count, full, joined, ones};
use super::budget::{SearchMode, Ticker};
use super::ham::{lexmin_cycle, Sub};
use super::tree::{EdgeRules, TreeSolver};
use crate::certify::Edge;
use crate::graph::{Graph, Vertex};

pub(crate) struct Engine {
    adj: Vec<u64>,
    degree: Vec<usize>,
    n: usize,
    all: u64,
    cap: usize,
    want_cycle: bool,
    balance: Option<(u64, u64)>,
    mode: SearchMode,
    pub(crate) ticker: Ticker,
    pub(crate) solutions: u64,
    pub(crate) best: Option<(Vec<Edge>, Vec<Vertex>)>,
    stop: bool,
}

impl Engine {
    /// Requires `3 <= n <= 64`.
    pub(crate) fn new(g: &Graph, want_cycle: bool, balance: Option<(u64, u64)>, mode: SearchMode, ticker: Ticker) -> Self {
        let n = g.n();
        Self {
            adj: (0..n).map(|v| g.mask(v)).collect(),
            degree: (0..n).map(|v| g.degree(v)).collect(),
            n,
            all: full(n),
            cap: (n - 2) / 2,
            want_cycle,
            balance,
            mode,
            ticker,
            solutions: 0,
            best: None,
            stop: false,
        }
    }

    pub(crate) fn run(&mut self) {
        let low: u64 = (0..self.n).filter(|&v| self.degree[v] < 3).map(bit).fold(0, |a, b| a | b);
        self.search(low, 0);
    }

    pub(crate) fn exhausted(&self) -> bool {
        self.ticker.exhausted
    }

    fn search(&mut self, l: u64, s: u64) {
        if self.stop || !self.ticker.tick() {
            self.stop = true;
            return;
        }
        let Some((l, s)) = self.propagate(l, s) else { return };
        let open = self.all & !(l | s);
        if open == 0 {
            self.evaluate(l, s);
            return;
        }
        let v = ones(open).max_by_key(|&v| (self.degree[v], std::cmp::Reverse(v))).unwrap();
        self.search(l, s | bit(v));
        if !self.stop {
            self.search(l | bit(v), s);
        }
    }

    fn propagate(&self, mut l: u64, mut s: u64) -> Option<(u64, u64)> {
        loop {
            let open = self.all & !(l | s);
            let ns = count(s);
            if ns > self.cap {
                return None;
            }
            if ns == self.cap && open != 0 {
                l |= open;
                continue;
            }
            let mut changed = false;
            for v in ones(l) {
                let open = self.all & !(l | s);
                let cand = self.adj[v] & (s | open);
                if cand == 0 {
                    return None;
                }
                if self.adj[v] & s == 0 && count(cand) == 1 {
                    s |= cand;
                    changed = true;
                }
                if self.want_cycle {
                    let ring = self.adj[v] & (l | open);
                    if count(ring) < 2 {
                        return None;
                    }
                    if count(ring) == 2 && ring & open != 0 {
                        l |= ring;
                        changed = true;
                    }
                }
                if l & s != 0 {
                    return None;
                }
            }
            if !changed {
                break;
            }
        }
        let open = self.all & !(l | s);
        if s | open == 0 || !joined(&self.adj, s, s | open) {
            return None;
        }
        if self.want_cycle && (count(l | open) < 3 || !joined(&self.adj, l, l | open)) {
            return None;
        }
        if let Some((a, b)) = self.balance {
            let (la, lb) = (count(l & a), count(l & b));
            let (ua, ub) = (count(open & a), count(open & b));
            if la > lb + ub || lb > la + ua {
                return None;
            }
        }
        Some((l, s))
    }

    fn evaluate(&mut self, l: u64, s: u64) {
        if s == 0 {
            return;
        }
        if let Some((a, b)) = self.balance {
            if count(l & a) != count(l & b) {
                return;
            }
        }
        let cycle = if self.want_cycle {
            match lexmin_cycle(&self.adj, l, &mut self.ticker) {
                Sub::Found(c) => c,
                Sub::Absent => return,
                Sub::Exhausted => {
                    self.stop = true;
                    return;
                }
            }
        } else {
            Vec::new()
        };
        let tree = match self.mode {
            SearchMode::First => self.feasible(l, s, &EdgeRules::none(self.n)),
            _ => self.canonical_tree(l, s),
        };
        match tree {
            Sub::Found(edges) => {
                self.solutions += 1;
                let candidate = (edges, cycle);
                if self.best.as_ref().is_none_or(|b| candidate < *b) {
                    self.best = Some(candidate);
                }
                if self.mode == SearchMode::First {
                    self.stop = true;
                }
            }
            Sub::Absent => {}
            Sub::Exhausted => self.stop = true,
        }
    }

    fn feasible(&mut self, l: u64, s: u64, rules: &EdgeRules) -> Sub<Vec<Edge>> {
        match TreeSolver::new(&self.adj, s, l, rules) {
            Some(mut solver) => solver.solve(&mut self.ticker),
            None => Sub::Absent,
        }
    }

    /// Lexicographically least tree edge list with leaf set `l`, built by
    /// deciding candidate edges in increasing order.
    fn canonical_tree(&mut self, l: u64, s: u64) -> Sub<Vec<Edge>> {
        let mut rules = EdgeRules::none(self.n);
        match self.feasible(l, s, &rules) {
            Sub::Found(_) => {}
            other => return other,
        }
        let mut chosen = Vec::with_capacity(self.n - 1);
        for u in 0..self.n {
            for v in ones(self.adj[u] & !full(u + 1)) {
                if chosen.len() == self.n - 1 {
                    return Sub::Found(chosen);
                }
                let leafy = |w: Vertex| l & bit(w) != 0;
                if leafy(u) && leafy(v) {
                    continue;
                }
                if (leafy(u) && rules.force[u] != 0) || (leafy(v) && rules.force[v] != 0) {
                    continue;
                }
                rules.forced(u, v);
                match self.feasible(l, s, &rules) {
                    Sub::Found(_) => chosen.push((u, v)),
                    Sub::Absent => {
                        rules.force[u] &= !bit(v);
                        rules.force[v] &= !bit(u);
                        rules.banned(u, v);
                    }
                    Sub::Exhausted => return Sub::Exhausted,
                }
            }
        }
        if chosen.len() == self.n - 1 {
            Sub::Found(chosen)
        } else {
            Sub::Absent
        }
    }
}
