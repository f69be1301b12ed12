//! Immutable simple undirected graphs over dense vertex ids `0..n`.

mod connectivity;
mod families;

pub use connectivity::{
    is_connected, vertex_connectivity, vertex_connectivity_at_least,
    vertex_connectivity_at_least_exhaustive,
};

use crate::error::{precondition, Error, Result};
use std::collections::VecDeque;

pub type Vertex = usize;

/// A simple undirected graph. Neighborhoods are kept both as sorted lists and
/// as bit rows so that membership and common-neighborhood queries are cheap.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<Vertex>>,
    rows: Vec<Vec<u64>>,
}

fn words(n: usize) -> usize {
    n.div_ceil(64)
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Self {
        Self { n, m: 0, adj: vec![Vec::new(); n], rows: vec![vec![0; words(n)]; n] }
    }

    /// Builds a graph from an edge list, rejecting loops, out-of-range ids and
    /// repeated edges.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Self::edgeless(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return precondition(format!("edge {u}-{v} out of range for n = {n}"));
            }
            if u == v {
                return precondition(format!("self-loop at {u}"));
            }
            if g.has_edge(u, v) {
                return precondition(format!("duplicate edge {u}-{v}"));
            }
            g.insert(u, v);
        }
        g.finish();
        Ok(g)
    }

    /// Builds a graph whose edges are the pairs `u < v` accepted by `keep`.
    pub fn from_fn(n: usize, mut keep: impl FnMut(Vertex, Vertex) -> bool) -> Self {
        let mut g = Self::edgeless(n);
        for u in 0..n {
            for v in u + 1..n {
                if keep(u, v) {
                    g.insert(u, v);
                }
            }
        }
        g.finish();
        g
    }

    fn insert(&mut self, u: Vertex, v: Vertex) {
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.rows[u][v / 64] |= 1 << (v % 64);
        self.rows[v][u / 64] |= 1 << (u % 64);
        self.m += 1;
    }

    fn finish(&mut self) {
        for list in &mut self.adj {
            list.sort_unstable();
        }
    }

    /// Returns a copy of `self` with the extra edges added; edges already
    /// present are ignored.
    pub fn with_edges<I>(&self, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = self.clone();
        for (u, v) in edges {
            if u >= g.n || v >= g.n || u == v {
                return precondition(format!("cannot add edge {u}-{v} to a graph on {} vertices", g.n));
            }
            if !g.has_edge(u, v) {
                g.insert(u, v);
            }
        }
        g.finish();
        Ok(g)
    }

    /// Disjoint union with `extra` new isolated vertices appended.
    pub fn with_new_vertices(&self, extra: usize) -> Self {
        Self::from_edges(self.n + extra, self.edges()).expect("edges of a valid graph")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.rows[u][v / 64] & (1 << (v % 64)) != 0
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().copied().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Number of common neighbors of `u` and `v`.
    pub fn common_neighbor_count(&self, u: Vertex, v: Vertex) -> usize {
        self.rows[u].iter().zip(&self.rows[v]).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    /// Neighborhood as a 64-bit mask. Only valid for `n <= 64`; used by the
    /// exponential searches, which refuse larger hosts up front.
    pub(crate) fn mask(&self, v: Vertex) -> u64 {
        debug_assert!(self.n <= 64);
        self.rows[v][0]
    }

    /// Induced subgraph on `vertices` (in the given order); vertex `i` of the
    /// result is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Result<Graph> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return precondition(format!("vertex {v} out of range"));
            }
            if index[v] != usize::MAX {
                return precondition(format!("vertex {v} listed twice"));
            }
            index[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v)| (index[u], index[v]));
        Graph::from_edges(vertices.len(), edges)
    }

    /// Number of edges with both ends in `set`.
    pub fn edges_within(&self, set: &[Vertex]) -> usize {
        let mut inside = vec![false; self.n];
        for &v in set {
            inside[v] = true;
        }
        self.edges().filter(|&(u, v)| inside[u] && inside[v]).count()
    }
}

/// An ordered pair of disjoint vertex sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSetPair {
    pub left: Vec<Vertex>,
    pub right: Vec<Vertex>,
}

impl VertexSetPair {
    pub fn new(left: Vec<Vertex>, right: Vec<Vertex>) -> Self {
        Self { left, right }
    }

    /// Checks disjointness and range against a host with `n` vertices.
    pub fn validate(&self, n: usize) -> Result<()> {
        let mut seen = vec![false; n];
        for &v in self.left.iter().chain(&self.right) {
            if v >= n {
                return precondition(format!("vertex {v} out of range for n = {n}"));
            }
            if seen[v] {
                return precondition(format!("vertex {v} appears twice across the pair"));
            }
            seen[v] = true;
        }
        Ok(())
    }

    pub fn swapped(&self) -> Self {
        Self { left: self.right.clone(), right: self.left.clone() }
    }

    /// `true` when the pair covers all `n` vertices.
    pub fn covers(&self, n: usize) -> bool {
        self.left.len() + self.right.len() == n && self.validate(n).is_ok()
    }
}

/// Degree statistics from `left` into `right`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeBetween {
    /// `min { deg(u, right) : u in left }`, 0 when `left` is empty.
    pub min_deg: usize,
    /// `max { deg(u, right) : u in left }`, 0 when `left` is empty.
    pub max_deg: usize,
    /// Number of edges with one end in each set.
    pub edge_count: usize,
}

pub fn degree_between(g: &Graph, p: &VertexSetPair) -> Result<DegreeBetween> {
    p.validate(g.n())?;
    let mut in_right = vec![false; g.n()];
    for &v in &p.right {
        in_right[v] = true;
    }
    let degs: Vec<usize> =
        p.left.iter().map(|&u| g.neighbors(u).iter().filter(|&&w| in_right[w]).count()).collect();
    Ok(DegreeBetween {
        min_deg: degs.iter().copied().min().unwrap_or(0),
        max_deg: degs.iter().copied().max().unwrap_or(0),
        edge_count: degs.iter().sum(),
    })
}

/// A proper 2-coloring when `g` is bipartite. In every connected component the
/// lowest-indexed vertex is placed on the left. Both sides come out sorted.
pub fn bipartition(g: &Graph) -> Option<VertexSetPair> {
    let mut color: Vec<Option<bool>> = vec![None; g.n()];
    for start in 0..g.n() {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &w in g.neighbors(u) {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let left = (0..g.n()).filter(|&v| color[v] == Some(false)).collect();
    let right = (0..g.n()).filter(|&v| color[v] == Some(true)).collect();
    Some(VertexSetPair { left, right })
}

/// `true` when `p` is a partition of `V(g)` with no edge inside either side.
pub fn is_bipartition(g: &Graph, p: &VertexSetPair) -> bool {
    p.covers(g.n()) && g.edges_within(&p.left) == 0 && g.edges_within(&p.right) == 0
}

pub(crate) fn ensure_search_size(g: &Graph) -> Result<()> {
    if g.n() > 64 {
        return Err(Error::Unsupported(format!(
            "exact search is limited to 64 vertices, host has {}",
            g.n()
        )));
    }
    Ok(())
}
