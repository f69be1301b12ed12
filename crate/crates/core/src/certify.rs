//! Certificates and their verifiers. Every solver and builder in the crate is
//! checked against these functions; they are deliberately simple and share no
//! code with the searches.

use crate::graph::{vertex_connectivity_at_least, Graph, Vertex};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

pub type Edge = (Vertex, Vertex);

pub(crate) fn normalize_edge(u: Vertex, v: Vertex) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

fn normalize_edges(edges: impl IntoIterator<Item = Edge>) -> Vec<Edge> {
    let mut out: Vec<Edge> = edges.into_iter().map(|(u, v)| normalize_edge(u, v)).collect();
    out.sort_unstable();
    out
}

/// An edge set claimed to be a tree (or, with `is_spanning == false`, a
/// forest) inside a host graph on `host_n` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TreeCertificate {
    pub host_n: usize,
    pub edges: Vec<Edge>,
    pub is_spanning: bool,
}

impl TreeCertificate {
    /// A spanning-tree certificate; edges are normalized to `u < v` and sorted.
    pub fn spanning(host_n: usize, edges: impl IntoIterator<Item = Edge>) -> Self {
        Self { host_n, edges: normalize_edges(edges), is_spanning: true }
    }

    /// A (not necessarily spanning) tree or forest certificate.
    pub fn forest(host_n: usize, edges: impl IntoIterator<Item = Edge>) -> Self {
        Self { host_n, edges: normalize_edges(edges), is_spanning: false }
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.host_n];
        for &(u, v) in &self.edges {
            if u < self.host_n && v < self.host_n {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        deg
    }

    /// `V(T)`: all host vertices for a spanning certificate, otherwise the
    /// vertices touched by an edge.
    pub fn vertices(&self) -> Vec<Vertex> {
        if self.is_spanning {
            return (0..self.host_n).collect();
        }
        let deg = self.degrees();
        (0..self.host_n).filter(|&v| deg[v] > 0).collect()
    }

    /// `L(T)`: vertices of degree one.
    pub fn leaves(&self) -> Vec<Vertex> {
        let deg = self.degrees();
        self.vertices().into_iter().filter(|&v| deg[v] == 1).collect()
    }

    /// `S(T) = V(T) - L(T)`.
    pub fn internal(&self) -> Vec<Vertex> {
        let deg = self.degrees();
        self.vertices().into_iter().filter(|&v| deg[v] != 1).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Vertices of `V(T)` with degree exactly two.
    pub fn degree_two_vertices(&self) -> Vec<Vertex> {
        let deg = self.degrees();
        self.vertices().into_iter().filter(|&v| deg[v] == 2).collect()
    }

    /// Connected components of the subgraph `(V(T), E(T))`.
    pub fn component_count(&self) -> usize {
        let mut dsu = Dsu::new(self.host_n);
        let mut comps = self.vertices().len();
        for &(u, v) in &self.edges {
            if u < self.host_n && v < self.host_n && dsu.union(u, v) {
                comps -= 1;
            }
        }
        comps
    }

    pub fn contains_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.binary_search(&normalize_edge(u, v)).is_ok()
    }
}

pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `false` when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Why a tree certificate was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeReason {
    HostMismatch { certificate_n: usize, host_n: usize },
    VertexOutOfRange(Vertex),
    LoopEdge(Vertex),
    DuplicateEdge(Vertex, Vertex),
    EdgeNotInHost(Vertex, Vertex),
    Cycle(Vertex, Vertex),
    NotMarkedSpanning,
    HostTooSmall,
    WrongEdgeCount { expected: usize, found: usize },
    Disconnected,
    DegreeTwo(Vertex),
}

impl fmt::Display for TreeReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::HostMismatch { certificate_n, host_n } => {
                write!(f, "certificate is for {certificate_n} vertices, host has {host_n}")
            }
            Self::VertexOutOfRange(v) => write!(f, "vertex {v} out of range"),
            Self::LoopEdge(v) => write!(f, "loop at {v}"),
            Self::DuplicateEdge(u, v) => write!(f, "edge {u}-{v} listed twice"),
            Self::EdgeNotInHost(u, v) => write!(f, "edge {u}-{v} is not a host edge"),
            Self::Cycle(u, v) => write!(f, "edge {u}-{v} closes a cycle"),
            Self::NotMarkedSpanning => write!(f, "certificate is not marked spanning"),
            Self::HostTooSmall => write!(f, "host has fewer than two vertices"),
            Self::WrongEdgeCount { expected, found } => {
                write!(f, "expected {expected} edges, found {found}")
            }
            Self::Disconnected => write!(f, "edges do not connect all vertices"),
            Self::DegreeTwo(v) => write!(f, "vertex {v} has degree 2"),
        }
    }
}

/// Edges valid, inside the host, acyclic.
pub fn check_forest(g: &Graph, t: &TreeCertificate) -> Result<(), TreeReason> {
    if t.host_n != g.n() {
        return Err(TreeReason::HostMismatch { certificate_n: t.host_n, host_n: g.n() });
    }
    let mut seen = BTreeSet::new();
    let mut dsu = Dsu::new(g.n());
    for &(a, b) in &t.edges {
        for v in [a, b] {
            if v >= g.n() {
                return Err(TreeReason::VertexOutOfRange(v));
            }
        }
        if a == b {
            return Err(TreeReason::LoopEdge(a));
        }
        let (u, v) = normalize_edge(a, b);
        if !seen.insert((u, v)) {
            return Err(TreeReason::DuplicateEdge(u, v));
        }
        if !g.has_edge(u, v) {
            return Err(TreeReason::EdgeNotInHost(u, v));
        }
        if !dsu.union(u, v) {
            return Err(TreeReason::Cycle(u, v));
        }
    }
    Ok(())
}

/// Spanning tree of `g`, with no requirement on degrees.
pub fn check_spanning_tree(g: &Graph, t: &TreeCertificate) -> Result<(), TreeReason> {
    check_forest(g, t)?;
    if !t.is_spanning {
        return Err(TreeReason::NotMarkedSpanning);
    }
    if g.n() == 0 {
        return Err(TreeReason::HostTooSmall);
    }
    if t.edges.len() != g.n() - 1 {
        return Err(TreeReason::WrongEdgeCount { expected: g.n() - 1, found: t.edges.len() });
    }
    if t.component_count() != 1 {
        return Err(TreeReason::Disconnected);
    }
    Ok(())
}

/// A homeomorphically irreducible spanning tree: spanning tree of `g` with no
/// vertex of degree two. Hosts with fewer than two vertices are rejected.
pub fn check_hist(g: &Graph, t: &TreeCertificate) -> Result<(), TreeReason> {
    if g.n() < 2 {
        return Err(TreeReason::HostTooSmall);
    }
    check_spanning_tree(g, t)?;
    if let Some(v) = t.degree_two_vertices().first() {
        return Err(TreeReason::DegreeTwo(*v));
    }
    Ok(())
}

pub fn is_hist(g: &Graph, t: &TreeCertificate) -> bool {
    check_hist(g, t).is_ok()
}

/// A HIST together with a cyclic order on its leaves.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HalinCertificate {
    pub tree: TreeCertificate,
    pub leaf_cycle: Vec<Vertex>,
}

impl HalinCertificate {
    pub fn new(tree: TreeCertificate, leaf_cycle: Vec<Vertex>) -> Self {
        Self { tree, leaf_cycle }
    }

    /// Same certificate with the leaf cycle rotated to its minimum vertex and
    /// oriented so that the second entry is smaller than the last.
    pub fn normalized(&self) -> Self {
        Self { tree: self.tree.clone(), leaf_cycle: normalize_cycle(&self.leaf_cycle) }
    }

    pub fn cycle_edges(&self) -> Vec<Edge> {
        cycle_edges(&self.leaf_cycle)
    }
}

pub fn cycle_edges(cycle: &[Vertex]) -> Vec<Edge> {
    let k = cycle.len();
    if k < 2 {
        return Vec::new();
    }
    (0..k).map(|i| normalize_edge(cycle[i], cycle[(i + 1) % k])).collect()
}

/// Canonical representative of a cyclic sequence under rotation and
/// reflection.
pub fn normalize_cycle(cycle: &[Vertex]) -> Vec<Vertex> {
    let k = cycle.len();
    if k == 0 {
        return Vec::new();
    }
    let start = (0..k).min_by_key(|&i| cycle[i]).unwrap();
    let forward: Vec<Vertex> = (0..k).map(|i| cycle[(start + i) % k]).collect();
    if k >= 3 && forward[1] > forward[k - 1] {
        let mut back = vec![forward[0]];
        back.extend(forward[1..].iter().rev());
        back
    } else {
        forward
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HalinReason {
    NotAHist(TreeReason),
    CycleTooShort,
    VertexOutOfRange(Vertex),
    CycleRepeatsVertex(Vertex),
    CycleUsesNonleaf(Vertex),
    CycleMissesLeaf(Vertex),
    CycleEdgeAbsent(Vertex, Vertex),
}

impl fmt::Display for HalinReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotAHist(r) => write!(f, "not-a-hist: {r}"),
            Self::CycleTooShort => write!(f, "cycle-too-short"),
            Self::VertexOutOfRange(v) => write!(f, "cycle vertex {v} out of range"),
            Self::CycleRepeatsVertex(v) => write!(f, "cycle repeats vertex {v}"),
            Self::CycleUsesNonleaf(v) => write!(f, "cycle-uses-nonleaf: {v}"),
            Self::CycleMissesLeaf(v) => write!(f, "cycle-misses-leaf: {v}"),
            Self::CycleEdgeAbsent(u, v) => write!(f, "cycle-edge-absent: {u}-{v}"),
        }
    }
}

pub fn check_generalized_halin(g: &Graph, h: &HalinCertificate) -> Result<(), HalinReason> {
    check_hist(g, &h.tree).map_err(HalinReason::NotAHist)?;
    if h.leaf_cycle.len() < 3 {
        return Err(HalinReason::CycleTooShort);
    }
    let deg = h.tree.degrees();
    let mut on_cycle = vec![false; g.n()];
    for &v in &h.leaf_cycle {
        if v >= g.n() {
            return Err(HalinReason::VertexOutOfRange(v));
        }
        if on_cycle[v] {
            return Err(HalinReason::CycleRepeatsVertex(v));
        }
        on_cycle[v] = true;
        if deg[v] != 1 {
            return Err(HalinReason::CycleUsesNonleaf(v));
        }
    }
    if let Some(v) = (0..g.n()).find(|&v| deg[v] == 1 && !on_cycle[v]) {
        return Err(HalinReason::CycleMissesLeaf(v));
    }
    for (u, v) in h.cycle_edges() {
        if !g.has_edge(u, v) {
            return Err(HalinReason::CycleEdgeAbsent(u, v));
        }
    }
    Ok(())
}

pub fn is_generalized_halin(g: &Graph, h: &HalinCertificate) -> bool {
    check_generalized_halin(g, h).is_ok()
}

/// The graph `T ∪ C` on the host's vertex set.
pub fn halin_subgraph(h: &HalinCertificate) -> Graph {
    let edges: BTreeSet<Edge> = h.tree.edges.iter().copied().chain(h.cycle_edges()).collect();
    Graph::from_edges(h.tree.host_n, edges).expect("verified certificate has in-range edges")
}

/// Result of contracting `S(T)` to a single hub.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WheelMinor {
    /// `|L(T)| + 1`.
    pub hub_order: usize,
    /// The rim, in normalized cyclic order.
    pub rim: Vec<Vertex>,
}

pub fn wheel_minor(g: &Graph, h: &HalinCertificate) -> crate::Result<WheelMinor> {
    check_generalized_halin(g, h)
        .map_err(|r| crate::Error::Precondition(format!("certificate does not verify: {r}")))?;
    let minor = WheelMinor { hub_order: h.leaf_cycle.len() + 1, rim: normalize_cycle(&h.leaf_cycle) };
    if 2 * minor.hub_order < g.n() {
        return Err(crate::Error::Falsification(format!(
            "wheel minor of order {} on {} vertices",
            minor.hub_order,
            g.n()
        )));
    }
    Ok(minor)
}

/// Structural facts every generalized Halin graph is expected to satisfy,
/// computed independently of the verifier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalinAudit {
    pub leaves: usize,
    pub internal: usize,
    pub three_connected: bool,
    pub wheel_order: usize,
    pub tree_cycle_disjoint: bool,
}

impl HalinAudit {
    pub fn holds(&self, n: usize) -> bool {
        self.leaves > self.internal
            && self.three_connected
            && 2 * self.wheel_order >= n
            && self.tree_cycle_disjoint
    }
}

pub fn audit_generalized_halin(h: &HalinCertificate) -> HalinAudit {
    let tree_edges: BTreeSet<Edge> = h.tree.edges.iter().copied().collect();
    HalinAudit {
        leaves: h.tree.leaves().len(),
        internal: h.tree.internal().len(),
        three_connected: vertex_connectivity_at_least(&halin_subgraph(h), 3),
        wheel_order: h.leaf_cycle.len() + 1,
        tree_cycle_disjoint: h.cycle_edges().iter().all(|e| !tree_edges.contains(e)),
    }
}

/// One star `K_{1,k}` of a star pack.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Star {
    pub center: Vertex,
    pub tips: Vec<Vertex>,
}

/// Vertex-disjoint stars with a common tip count: `arity` 1 is a matching,
/// 2 a ∧-matching, 3 a claw-matching.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StarPack {
    pub arity: usize,
    pub stars: Vec<Star>,
}

impl StarPack {
    pub fn centers(&self) -> Vec<Vertex> {
        self.stars.iter().map(|s| s.center).collect()
    }

    pub fn len(&self) -> usize {
        self.stars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stars.is_empty()
    }

    pub fn edges(&self) -> Vec<Edge> {
        normalize_edges(self.stars.iter().flat_map(|s| s.tips.iter().map(move |&t| (s.center, t))))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StarPackReason {
    ZeroArity,
    VertexOutOfRange(Vertex),
    WrongTipCount { center: Vertex, tips: usize },
    TipNotAdjacent { center: Vertex, tip: Vertex },
    SharedVertex(Vertex),
    CentersMismatch,
}

impl fmt::Display for StarPackReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

pub fn check_star_pack(g: &Graph, p: &StarPack, required_centers: &[Vertex]) -> Result<(), StarPackReason> {
    if p.arity == 0 {
        return Err(StarPackReason::ZeroArity);
    }
    let mut used = vec![false; g.n()];
    for star in &p.stars {
        for &v in std::iter::once(&star.center).chain(&star.tips) {
            if v >= g.n() {
                return Err(StarPackReason::VertexOutOfRange(v));
            }
            if used[v] {
                return Err(StarPackReason::SharedVertex(v));
            }
            used[v] = true;
        }
        if star.tips.len() != p.arity {
            return Err(StarPackReason::WrongTipCount { center: star.center, tips: star.tips.len() });
        }
        for &t in &star.tips {
            if !g.has_edge(star.center, t) {
                return Err(StarPackReason::TipNotAdjacent { center: star.center, tip: t });
            }
        }
    }
    let have: BTreeSet<Vertex> = p.stars.iter().map(|s| s.center).collect();
    let want: BTreeSet<Vertex> = required_centers.iter().copied().collect();
    if have != want {
        return Err(StarPackReason::CentersMismatch);
    }
    Ok(())
}

pub fn verify_star_pack(g: &Graph, p: &StarPack, required_centers: &[Vertex]) -> bool {
    check_star_pack(g, p, required_centers).is_ok()
}

/// `true` when `path` visits every vertex of `g` exactly once along host
/// edges, starting at `x` and ending at `y`.
pub fn is_hamiltonian_path(g: &Graph, path: &[Vertex], x: Vertex, y: Vertex) -> bool {
    path.len() == g.n()
        && path.first() == Some(&x)
        && path.last() == Some(&y)
        && visits_each_once(g.n(), path)
        && path.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

/// `true` when `cycle` is a Hamiltonian cycle of `g` (at least 3 vertices).
pub fn is_hamiltonian_cycle(g: &Graph, cycle: &[Vertex]) -> bool {
    cycle.len() == g.n()
        && cycle.len() >= 3
        && visits_each_once(g.n(), cycle)
        && cycle_edges(cycle).iter().all(|&(u, v)| g.has_edge(u, v))
}

fn visits_each_once(n: usize, seq: &[Vertex]) -> bool {
    let mut seen = vec![false; n];
    seq.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
}
