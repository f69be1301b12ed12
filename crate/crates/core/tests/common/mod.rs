//! Brute-force oracles shared by the integration tests. None of these call
//! into the search code of the crate; they only use `Graph` accessors.
#![allow(dead_code)]

use halin_core::{Graph, Vertex};
use petgraph::graph::UnGraph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    Graph::from_fn(n, |_, _| rng.gen_bool(p))
}

pub fn to_petgraph(g: &Graph) -> UnGraph<(), ()> {
    let mut p = UnGraph::with_capacity(g.n(), g.edge_count());
    for _ in 0..g.n() {
        p.add_node(());
    }
    p.extend_with_edges(g.edges().map(|(u, v)| (u as u32, v as u32)));
    p
}

/// Calls `f` on every permutation of `items` (Heap's algorithm); stops
/// early when `f` returns `true`.
pub fn any_permutation(items: &mut [Vertex], f: &mut impl FnMut(&[Vertex]) -> bool) -> bool {
    fn go(k: usize, items: &mut [Vertex], f: &mut impl FnMut(&[Vertex]) -> bool) -> bool {
        if k <= 1 {
            return f(items);
        }
        for i in 0..k {
            if go(k - 1, items, f) {
                return true;
            }
            let j = if k.is_multiple_of(2) { i } else { 0 };
            items.swap(j, k - 1);
        }
        false
    }
    let k = items.len();
    go(k, items, f)
}

/// Hamiltonian cycle through exactly `set` in `g`, by trying all orders.
pub fn brute_ham_cycle(g: &Graph, set: &[Vertex]) -> bool {
    if set.len() < 3 {
        return false;
    }
    let first = set[0];
    let mut rest: Vec<Vertex> = set[1..].to_vec();
    any_permutation(&mut rest, &mut |perm| {
        g.has_edge(first, perm[0])
            && g.has_edge(*perm.last().unwrap(), first)
            && perm.windows(2).all(|w| g.has_edge(w[0], w[1]))
    })
}

/// Hamiltonian `(x,y)`-path in `g`, by trying all orders of the middle.
pub fn brute_ham_path(g: &Graph, x: Vertex, y: Vertex) -> bool {
    let n = g.n();
    if n == 2 {
        return g.has_edge(x, y);
    }
    let mut mid: Vec<Vertex> = (0..n).filter(|&v| v != x && v != y).collect();
    any_permutation(&mut mid, &mut |perm| {
        g.has_edge(x, perm[0]) && g.has_edge(*perm.last().unwrap(), y) && perm.windows(2).all(|w| g.has_edge(w[0], w[1]))
    })
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        x = parent[x];
    }
    x
}

/// Enumerates every spanning tree of `g` by include/exclude over the edge
/// list, calling `f` with the degree sequence of each.
pub fn for_each_spanning_tree(g: &Graph, f: &mut impl FnMut(&[usize])) {
    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    let n = g.n();
    if n == 0 {
        return;
    }
    fn go(
        i: usize,
        chosen: usize,
        edges: &[(Vertex, Vertex)],
        n: usize,
        parent: &mut Vec<usize>,
        deg: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]),
    ) {
        if chosen == n - 1 {
            f(deg);
            return;
        }
        if edges.len() - i < n - 1 - chosen {
            return;
        }
        let (u, v) = edges[i];
        let (ru, rv) = (find(parent, u), find(parent, v));
        if ru != rv {
            parent[ru] = rv;
            deg[u] += 1;
            deg[v] += 1;
            go(i + 1, chosen + 1, edges, n, parent, deg, f);
            deg[u] -= 1;
            deg[v] -= 1;
            parent[ru] = ru;
        }
        go(i + 1, chosen, edges, n, parent, deg, f);
    }
    let mut parent: Vec<usize> = (0..n).collect();
    let mut deg = vec![0; n];
    go(0, 0, &edges, n, &mut parent, &mut deg, f);
}

/// Leaf sets (as bit masks) of all HISTs of `g`.
pub fn hist_leaf_sets(g: &Graph) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    if g.n() < 2 {
        return out;
    }
    for_each_spanning_tree(g, &mut |deg| {
        if deg.iter().all(|&d| d != 2) {
            out.insert(deg.iter().enumerate().filter(|(_, &d)| d == 1).fold(0u64, |m, (v, _)| m | 1 << v));
        }
    });
    out
}

/// Leaf sets of all spanning generalized Halin subgraphs of `g`.
pub fn sghg_leaf_sets(g: &Graph) -> BTreeSet<u64> {
    if g.n() < 4 {
        return BTreeSet::new();
    }
    hist_leaf_sets(g)
        .into_iter()
        .filter(|&mask| {
            let leaves: Vec<Vertex> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
            brute_ham_cycle(g, &leaves)
        })
        .collect()
}

/// HIST whose leaves are split evenly between `left` and the rest.
pub fn balanced_hist_exists(g: &Graph, left: &[Vertex]) -> bool {
    let lmask = left.iter().fold(0u64, |m, &v| m | 1 << v);
    hist_leaf_sets(g).into_iter().any(|mask| (mask & lmask).count_ones() == (mask & !lmask).count_ones())
}

/// Vertex connectivity at least `k`, by deleting every set of fewer than
/// `k` vertices.
pub fn brute_connectivity_at_least(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if k == 0 {
        return true;
    }
    if n <= k {
        // K_n has connectivity n - 1
        return false;
    }
    fn connected_without(g: &Graph, removed: &[bool]) -> bool {
        let keep: Vec<Vertex> = (0..g.n()).filter(|&v| !removed[v]).collect();
        let mut seen = vec![false; g.n()];
        let mut stack = vec![keep[0]];
        seen[keep[0]] = true;
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !removed[w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        keep.iter().all(|&v| seen[v])
    }
    fn subsets(g: &Graph, from: usize, left: usize, removed: &mut Vec<bool>) -> bool {
        if !connected_without(g, removed) {
            return false;
        }
        if left == 0 {
            return true;
        }
        (from..g.n()).all(|v| {
            removed[v] = true;
            let ok = subsets(g, v + 1, left - 1, removed);
            removed[v] = false;
            ok
        })
    }
    subsets(g, 0, k - 1, &mut vec![false; n])
}

/// Random graph with minimum degree at least `need`: G(n, p) for a random
/// dense `p`, then edges added at deficient vertices.
pub fn dense_host(r: &mut impl Rng, n: usize, need: usize) -> Graph {
    let mut adj = vec![vec![false; n]; n];
    let p = r.gen_range(0.55..0.8);
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(p) {
                adj[u][v] = true;
                adj[v][u] = true;
            }
        }
    }
    for u in 0..n {
        let mut others: Vec<usize> = (0..n).filter(|&v| v != u && !adj[u][v]).collect();
        others.shuffle(r);
        while adj[u].iter().filter(|&&e| e).count() < need {
            let v = others.pop().unwrap();
            adj[u][v] = true;
            adj[v][u] = true;
        }
    }
    Graph::from_fn(n, |u, v| adj[u][v])
}
