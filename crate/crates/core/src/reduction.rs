//! The pipeline `G -> G' -> G''` turning "Hamiltonian (x,y)-path in G" into
//! "spanning generalized Halin graph in G''", with certificate lifting and
//! projection in both directions.

use crate::certify::{
    check_generalized_halin, cycle_edges, is_hamiltonian_path, normalize_cycle, Edge,
    HalinCertificate, TreeCertificate,
};
use crate::graph::{Graph, Vertex};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Bookkeeping after the pendant stage.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeTrace {
    pub base_n: usize,
    pub base_edges: Vec<Edge>,
    pub terminals: (Vertex, Vertex),
    /// The non-terminal vertices `z_1 < ... < z_t`.
    pub z_order: Vec<Vertex>,
    /// `pendant_ids[i]` is the pendant `z_i'` attached to `z_order[i]`.
    pub pendant_ids: Vec<Vertex>,
}

/// Full correspondence between `G`, `G'` and `G''`. The base edge list makes
/// the trace self-contained: `G''` can be rebuilt from it alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub base_n: usize,
    pub base_edges: Vec<Edge>,
    pub terminals: (Vertex, Vertex),
    pub z_order: Vec<Vertex>,
    pub pendant_ids: Vec<Vertex>,
    /// `gadget_ids[i]` is the triple `(z'_{i1}, z'_{i2}, z'_{i3})`.
    pub gadget_ids: Vec<[Vertex; 3]>,
    /// Edges of the forced cycle `C''`, normalized and sorted.
    pub cycle_cpp: Vec<Edge>,
}

impl ReductionTrace {
    pub fn t(&self) -> usize {
        self.z_order.len()
    }

    /// `|V(G'')| = n + 4t`.
    pub fn total_n(&self) -> usize {
        self.base_n + 4 * self.t()
    }

    /// `C''` as a vertex sequence: `x`, the gadget blocks in order, then `y`.
    pub fn cycle_order(&self) -> Vec<Vertex> {
        let (x, y) = self.terminals;
        let mut order = vec![x];
        order.extend(self.gadget_ids.iter().flatten());
        order.push(y);
        order
    }

    pub fn base_graph(&self) -> Result<Graph> {
        Graph::from_edges(self.base_n, self.base_edges.iter().copied())
    }

    /// Rebuilds `G''` from the stored base graph and terminals.
    pub fn host(&self) -> Result<Graph> {
        Ok(reduce(&self.base_graph()?, self.terminals.0, self.terminals.1)?.0)
    }

    /// Checks that the trace is exactly what the reduction produces for its
    /// base graph and terminals.
    pub fn validate(&self) -> Result<()> {
        let g = self.base_graph().map_err(|e| Error::Document(format!("base graph: {e}")))?;
        let (_, expected) = reduce(&g, self.terminals.0, self.terminals.1).map_err(|e| Error::Document(e.to_string()))?;
        if &expected != self {
            return Err(Error::Document("reduction trace does not match its base graph".into()));
        }
        Ok(())
    }

    fn is_gadget(&self, v: Vertex) -> bool {
        v >= self.base_n + self.t()
    }

    fn is_pendant(&self, v: Vertex) -> bool {
        v >= self.base_n && !self.is_gadget(v)
    }
}

/// Attaches a pendant vertex to every non-terminal vertex of `g`.
pub fn build_g_prime(g: &Graph, x: Vertex, y: Vertex) -> Result<(Graph, PrimeTrace)> {
    let n = g.n();
    if x >= n || y >= n {
        return crate::error::precondition(format!("terminals ({x}, {y}) out of range for n = {n}"));
    }
    if x == y {
        return crate::error::precondition("terminals must be distinct");
    }
    if n < 3 {
        return Err(Error::Unsupported("the reduction needs at least one non-terminal vertex".into()));
    }
    let z_order: Vec<Vertex> = (0..n).filter(|&v| v != x && v != y).collect();
    let pendant_ids: Vec<Vertex> = (0..z_order.len()).map(|i| n + i).collect();
    let gp = g
        .with_new_vertices(z_order.len())
        .with_edges(z_order.iter().zip(&pendant_ids).map(|(&z, &p)| (z, p)))?;
    let trace = PrimeTrace { base_n: n, base_edges: g.edges().collect(), terminals: (x, y), z_order, pendant_ids };
    Ok((gp, trace))
}

/// Adds the triple gadgets and the cycle `C''` to `G'`.
pub fn build_g_double_prime(gp: &Graph, trace: &PrimeTrace) -> Result<(Graph, ReductionTrace)> {
    let t = trace.z_order.len();
    if gp.n() != trace.base_n + t {
        return crate::error::precondition("graph does not match the pendant-stage trace");
    }
    let base = gp.n();
    let gadget_ids: Vec<[Vertex; 3]> = (0..t).map(|i| [base + 3 * i, base + 3 * i + 1, base + 3 * i + 2]).collect();
    let mut edges = Vec::new();
    for (&p, g3) in trace.pendant_ids.iter().zip(&gadget_ids) {
        edges.extend(g3.iter().map(|&z| (p, z)));
        edges.push((g3[0], g3[1]));
        edges.push((g3[1], g3[2]));
    }
    let mut full = ReductionTrace {
        base_n: trace.base_n,
        base_edges: trace.base_edges.clone(),
        terminals: trace.terminals,
        z_order: trace.z_order.clone(),
        pendant_ids: trace.pendant_ids.clone(),
        gadget_ids,
        cycle_cpp: Vec::new(),
    };
    let mut cycle = cycle_edges(&full.cycle_order());
    cycle.sort_unstable();
    edges.extend(cycle.iter().copied());
    let gpp = gp.with_new_vertices(3 * t).with_edges(edges)?;
    full.cycle_cpp = cycle;
    Ok((gpp, full))
}

/// Both stages at once.
pub fn reduce(g: &Graph, x: Vertex, y: Vertex) -> Result<(Graph, ReductionTrace)> {
    let (gp, partial) = build_g_prime(g, x, y)?;
    build_g_double_prime(&gp, &partial)
}

/// Turns a Hamiltonian `(x,y)`-path of `G` into the SGHG `T'' ∪ C''` of `G''`.
pub fn lift_certificate(trace: &ReductionTrace, path: &[Vertex]) -> Result<HalinCertificate> {
    let g = trace.base_graph()?;
    let (x, y) = trace.terminals;
    if !is_hamiltonian_path(&g, path, x, y) {
        return crate::error::precondition("not a Hamiltonian path between the terminals");
    }
    let mut edges: Vec<Edge> = path.windows(2).map(|w| (w[0], w[1])).collect();
    for ((&z, &p), g3) in trace.z_order.iter().zip(&trace.pendant_ids).zip(&trace.gadget_ids) {
        edges.push((z, p));
        edges.extend(g3.iter().map(|&q| (p, q)));
    }
    let h = HalinCertificate::new(TreeCertificate::spanning(trace.total_n(), edges), normalize_cycle(&trace.cycle_order()));
    let host = trace.host()?;
    check_generalized_halin(&host, &h)
        .map_err(|r| Error::Falsification(format!("lifted certificate fails verification: {r}")))?;
    Ok(h)
}

/// Strips gadgets and pendants from an SGHG of `G''`, returning the
/// Hamiltonian `(x,y)`-path of `G` that remains.
pub fn project_certificate(trace: &ReductionTrace, h: &HalinCertificate) -> Result<Vec<Vertex>> {
    let host = trace.host()?;
    check_generalized_halin(&host, h)
        .map_err(|r| Error::Precondition(format!("certificate does not verify on G'': {r}")))?;
    let falsified = |what: String| Error::Falsification(format!("projection: {what}"));
    let deg = h.tree.degrees();
    if let Some(&v) = trace.gadget_ids.iter().flatten().find(|&&v| deg[v] != 1) {
        return Err(falsified(format!("gadget vertex {v} is internal")));
    }
    let n = trace.base_n;
    let kept: Vec<Edge> = h.tree.edges.iter().copied().filter(|&(u, v)| u < n && v < n).collect();
    for (&z, &p) in trace.z_order.iter().zip(&trace.pendant_ids) {
        if !h.tree.contains_edge(z, p) {
            return Err(falsified(format!("pendant {p} is not attached to {z}")));
        }
    }
    if h.tree.edges.iter().any(|&(u, v)| trace.is_pendant(u) && trace.is_pendant(v)) {
        return Err(falsified("pendants adjacent in the tree".into()));
    }
    let path_graph = Graph::from_edges(n, kept.iter().copied())?;
    let (x, y) = trace.terminals;
    let mut path = vec![x];
    let mut prev = usize::MAX;
    let mut cur = x;
    while path.len() < n {
        let next: Vec<Vertex> = path_graph.neighbors(cur).iter().copied().filter(|&w| w != prev).collect();
        if next.len() != 1 {
            return Err(falsified(format!("remaining tree branches or stops at {cur}")));
        }
        prev = cur;
        cur = next[0];
        path.push(cur);
    }
    if !is_hamiltonian_path(&trace.base_graph()?, &path, x, y) || kept.len() != n - 1 {
        return Err(falsified("remaining tree is not a Hamiltonian path between the terminals".into()));
    }
    Ok(path)
}

/// `true` when the certificate's leaf cycle is `C''` up to rotation and
/// reflection.
pub fn uses_forced_cycle(trace: &ReductionTrace, h: &HalinCertificate) -> bool {
    normalize_cycle(&h.leaf_cycle) == normalize_cycle(&trace.cycle_order())
}
