//! Insertion gadgets: small trees and forests that absorb a set `I` of
//! outside vertices into a bipartite pair. Operation I hangs claws from `I`
//! into `B`, Operation II into `A`, Operation III into `F` with the tips
//! matched into `B`.
//!
//! Every anchor is the smallest valid vertex id. Each builder checks its own
//! output against the count formulas and reports a mismatch as a
//! falsification event.

use crate::certify::{check_forest, Edge, TreeCertificate};
use crate::graph::{Graph, Vertex};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Which of the three insertion operations to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Operation {
    /// Claws into `B`; the result is a HIT.
    HitB,
    /// Claws into `A`; the result is a tree with at most one degree-2 vertex.
    TreeA,
    /// Claws into `F`, tips matched into `B`; the result is a forest.
    ForestF,
}

impl Operation {
    pub const ALL: [Operation; 3] = [Operation::HitB, Operation::TreeA, Operation::ForestF];

    pub fn name(self) -> &'static str {
        match self {
            Self::HitB => "hit-b",
            Self::TreeA => "tree-a",
            Self::ForestF => "forest-f",
        }
    }
}

/// A host with two disjoint sides and an inserted set `I`. The claw side
/// receives the claws from `I` (`B` for Operation I, `A` for Operation II,
/// `F` for Operation III); the far side is the other part of the pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionInstance {
    pub graph: Graph,
    pub inserted: Vec<Vertex>,
    pub claw_side: Vec<Vertex>,
    pub far_side: Vec<Vertex>,
}

/// Vertex and leaf counts of a gadget, split by side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetCounts {
    pub claw_vertices: usize,
    pub claw_leaves: usize,
    pub far_vertices: usize,
    pub far_leaves: usize,
    pub components: usize,
    pub degree_two: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gadget {
    pub tree: TreeCertificate,
    pub counts: GadgetCounts,
}

impl InsertionInstance {
    /// Far side `0..far`, claw side `far..far+claw`, `I` after that. The two
    /// sides are completely joined and every vertex of `I` is joined to the
    /// whole claw side.
    pub fn complete(far: usize, claw: usize, k: usize) -> Self {
        let n = far + claw + k;
        let graph = Graph::from_fn(n, |u, v| (u < far && (far..far + claw).contains(&v)) || ((far..far + claw).contains(&u) && v >= far + claw));
        Self {
            graph,
            inserted: (far + claw..n).collect(),
            claw_side: (far..far + claw).collect(),
            far_side: (0..far).collect(),
        }
    }

    /// The smallest complete host on which `op` meets its preconditions
    /// with `|I| = k`.
    pub fn complete_for(op: Operation, k: usize) -> Self {
        match op {
            Operation::HitB => Self::complete(4 * k + 1, 4 * k + 1, k),
            Operation::TreeA => Self::complete(3 * k + 1, 3 * k + 1, k),
            Operation::ForestF => Self::complete(6 * k, 3 * k, k),
        }
    }

    fn labels(&self) -> Result<Vec<u8>> {
        let n = self.graph.n();
        let mut label = vec![0u8; n];
        for (tag, set) in [(1u8, &self.inserted), (2, &self.claw_side), (3, &self.far_side)] {
            for &v in set.iter() {
                if v >= n {
                    return crate::error::precondition(format!("vertex {v} out of range"));
                }
                if label[v] != 0 {
                    return crate::error::precondition(format!("vertex {v} belongs to two of I, claw side, far side"));
                }
                label[v] = tag;
            }
        }
        if self.inserted.is_empty() {
            return crate::error::precondition("I is empty");
        }
        for (u, v) in self.graph.edges() {
            if (label[u], label[v]) == (2, 2) || (label[u], label[v]) == (3, 3) {
                return crate::error::precondition(format!("edge {u}-{v} lies inside one side of the pair"));
            }
        }
        Ok(label)
    }

    fn side_degree(&self, v: Vertex, label: &[u8], side: u8) -> usize {
        self.graph.neighbors(v).iter().filter(|&&w| label[w] == side).count()
    }

    fn common_on(&self, vs: &[Vertex], label: &[u8], side: u8) -> usize {
        self.graph.neighbors(vs[0]).iter().filter(|&&w| label[w] == side && vs[1..].iter().all(|&u| self.graph.has_edge(u, w))).count()
    }

    /// Anchors on the claw side: neighbors of `I` there.
    fn claw_anchors(&self, label: &[u8]) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self.claw_side.iter().copied().filter(|&c| self.inserted.iter().any(|&x| self.graph.has_edge(x, c))).collect();
        out.sort_unstable();
        out.dedup();
        debug_assert!(out.iter().all(|&v| label[v] == 2));
        out
    }

    /// Checks the integer degree conditions of `op`.
    pub fn check(&self, op: Operation) -> Result<()> {
        let label = self.labels()?;
        let k = self.inserted.len();
        let fail = |msg: String| crate::error::precondition(msg);
        for &x in &self.inserted {
            let d = self.side_degree(x, &label, 2);
            if d < 3 * k {
                return fail(format!("deg({x}) into the claw side is {d} < {}", 3 * k));
            }
        }
        let (claw_need, far_need) = match op {
            Operation::HitB => (4 * k + 1, 4 * k + 1),
            Operation::TreeA => (3 * k + 1, 0),
            Operation::ForestF => (6 * k, 0),
        };
        for &c in &self.claw_side {
            let d = self.side_degree(c, &label, 3);
            if d < claw_need {
                return fail(format!("claw-side vertex {c} has {d} far-side neighbors, need {claw_need}"));
            }
        }
        for &a in &self.far_side {
            let d = self.side_degree(a, &label, 2);
            if d < far_need {
                return fail(format!("far-side vertex {a} has {d} claw-side neighbors, need {far_need}"));
            }
        }
        let anchors = self.claw_anchors(&label);
        match op {
            Operation::HitB => {
                for (i, &u) in anchors.iter().enumerate() {
                    for &v in &anchors[i + 1..] {
                        if self.common_on(&[u, v], &label, 3) < k {
                            return fail(format!("{u} and {v} share fewer than {k} far-side neighbors"));
                        }
                    }
                }
            }
            Operation::TreeA => {
                for (i, &u) in anchors.iter().enumerate() {
                    for (j, &v) in anchors.iter().enumerate().skip(i + 1) {
                        for &w in &anchors[j + 1..] {
                            if self.common_on(&[u, v, w], &label, 3) < k {
                                return fail(format!("{u}, {v}, {w} share fewer than {k} far-side neighbors"));
                            }
                        }
                    }
                }
            }
            Operation::ForestF => {}
        }
        Ok(())
    }

    /// Runs `op`, checks the result, and returns it.
    pub fn build(&self, op: Operation) -> Result<Gadget> {
        match op {
            Operation::HitB => insertion_hit_b(self),
            Operation::TreeA => insertion_tree_a(self),
            Operation::ForestF => insertion_forest_f(self),
        }
    }
}

/// The count formulas for `|I| = k`.
pub fn expected_counts(op: Operation, k: usize) -> GadgetCounts {
    match op {
        Operation::HitB => GadgetCounts {
            claw_vertices: 4 * k - 1,
            claw_leaves: (2 * k + 1).min(3 * k - 1),
            far_vertices: 4 * k - 1,
            far_leaves: 3 * k,
            components: 1,
            degree_two: 0,
        },
        Operation::TreeA => {
            let leaves = if k <= 2 { 2 * k } else { 2 * k - (k - 3).div_ceil(2) };
            GadgetCounts {
                claw_vertices: 3 * k,
                claw_leaves: leaves,
                far_vertices: if k == 1 { 2 } else { 2 * k + 1 },
                far_leaves: leaves,
                components: 1,
                degree_two: usize::from(k == 2 || (k > 2 && k.is_multiple_of(2))),
            }
        }
        Operation::ForestF => GadgetCounts {
            claw_vertices: 3 * k,
            claw_leaves: 0,
            far_vertices: 6 * k,
            far_leaves: 6 * k,
            components: k,
            degree_two: 0,
        },
    }
}

/// Greedy anchor selection shared by the three operations.
struct Picker<'a> {
    inst: &'a InsertionInstance,
    label: Vec<u8>,
    used: Vec<bool>,
    edges: Vec<Edge>,
}

impl<'a> Picker<'a> {
    fn new(inst: &'a InsertionInstance) -> Result<Self> {
        let label = inst.labels()?;
        let mut used = vec![false; inst.graph.n()];
        for &x in &inst.inserted {
            used[x] = true;
        }
        Ok(Self { inst, label, used, edges: Vec::new() })
    }

    fn stall(what: &str) -> Error {
        Error::Falsification(format!("no valid anchor for {what} although the preconditions hold"))
    }

    /// The smallest unused vertex on `side` adjacent to all of `to`.
    fn common(&mut self, to: &[Vertex], side: u8, what: &str) -> Result<Vertex> {
        let g = &self.inst.graph;
        let v = g.neighbors(to[0]).iter().copied().find(|&w| self.label[w] == side && !self.used[w] && to[1..].iter().all(|&u| g.has_edge(u, w))).ok_or_else(|| Self::stall(what))?;
        self.used[v] = true;
        for &u in to {
            self.edges.push((u, v));
        }
        Ok(v)
    }

    /// `count` smallest unused neighbors of `v` on `side`, joined to `v`.
    fn star(&mut self, v: Vertex, side: u8, count: usize, what: &str) -> Result<Vec<Vertex>> {
        (0..count).map(|_| self.common(&[v], side, what)).collect()
    }

    fn finish(self, op: Operation) -> Result<Gadget> {
        let tree = TreeCertificate::forest(self.inst.graph.n(), self.edges);
        if let Err(reason) = check_forest(&self.inst.graph, &tree) {
            return Err(Error::Falsification(format!("{} output is not a forest of the host: {reason}", op.name())));
        }
        let deg = tree.degrees();
        let on = |side: u8, leaf: bool| (0..deg.len()).filter(|&v| self.label[v] == side && deg[v] > 0 && (!leaf || deg[v] == 1)).count();
        let counts = GadgetCounts {
            claw_vertices: on(2, false),
            claw_leaves: on(2, true),
            far_vertices: on(3, false),
            far_leaves: on(3, true),
            components: tree.component_count(),
            degree_two: tree.degree_two_vertices().len(),
        };
        let k = self.inst.inserted.len();
        if self.inst.inserted.iter().any(|&x| deg[x] != 3) {
            return Err(Error::Falsification(format!("{}: some vertex of I is not a claw center", op.name())));
        }
        let expected = expected_counts(op, k);
        if counts != expected {
            return Err(Error::Falsification(format!("{} with |I| = {k}: counts {counts:?} differ from {expected:?}", op.name())));
        }
        Ok(Gadget { tree, counts })
    }
}

const CLAW: u8 = 2;
const FAR: u8 = 3;

/// Claws `x_i -> x_i1, x_i2, x_i3` in sorted order of `I`.
fn claws(p: &mut Picker<'_>) -> Result<Vec<[Vertex; 3]>> {
    let mut inserted = p.inst.inserted.clone();
    inserted.sort_unstable();
    inserted
        .into_iter()
        .map(|x| {
            let tips = p.star(x, CLAW, 3, "a claw tip")?;
            Ok([tips[0], tips[1], tips[2]])
        })
        .collect()
}

/// Operation I: a HIT with all of `I` internal and its claws in `B`.
pub fn insertion_hit_b(inst: &InsertionInstance) -> Result<Gadget> {
    inst.check(Operation::HitB)?;
    let mut p = Picker::new(inst)?;
    let x = claws(&mut p)?;
    let k = x.len();
    let y: Vec<Vertex> = (0..k - 1).map(|i| p.common(&[x[i][2], x[i + 1][0]], FAR, "y_i")).collect::<Result<_>>()?;
    for xi in &x[..k - 1] {
        p.star(xi[2], FAR, 2, "the ∧-matching at x_i3")?;
    }
    for xi in &x[1..] {
        p.star(xi[0], FAR, 1, "the matching at x_i1")?;
    }
    for &yi in &y {
        p.star(yi, CLAW, 1, "the matching at y_i")?;
    }
    p.star(x[0][2], FAR, 3, "the leaves of x_13")?;
    p.finish(Operation::HitB)
}

/// Operation II: a tree with all of `I` internal and its claws in `A`. For
/// `|I| = 2` and for even `|I| > 2` one vertex of `B` keeps degree two.
pub fn insertion_tree_a(inst: &InsertionInstance) -> Result<Gadget> {
    inst.check(Operation::TreeA)?;
    let mut p = Picker::new(inst)?;
    let x = claws(&mut p)?;
    let k = x.len();
    match k {
        1 => {
            p.star(x[0][2], FAR, 2, "the leaves of x_13")?;
        }
        2 => {
            p.common(&[x[0][2], x[1][0]], FAR, "y")?;
            p.star(x[0][2], FAR, 2, "the leaves of x_13")?;
            p.star(x[1][0], FAR, 2, "the leaves of x_21")?;
        }
        _ => {
            let h = (k - 3).div_ceil(2);
            p.common(&[x[0][2], x[1][2], x[2][2]], FAR, "y_0")?;
            // y_j joins x_{1+2j} through its second tip and the next two
            // claws through their third tips; the last y_j of an even |I|
            // has only two neighbors
            let mut second = Vec::with_capacity(h);
            for j in 1..=h {
                let mut to = vec![x[2 * j][1], x[2 * j + 1][2]];
                if 2 * j + 2 < k {
                    to.push(x[2 * j + 2][2]);
                }
                p.common(&to, FAR, "y_j")?;
                second.push(x[2 * j][1]);
            }
            for xi in &x {
                p.star(xi[2], FAR, 1, "the matching M")?;
            }
            for &v in &second {
                p.star(v, FAR, 1, "the matching M")?;
            }
            p.star(x[0][2], FAR, if k % 2 == 0 { 2 } else { 3 }, "the leaves of x_13")?;
        }
    }
    p.finish(Operation::TreeA)
}

/// Operation III: `|I|` disjoint trees, each a claw into `F` whose tips carry
/// two leaves in `B`.
pub fn insertion_forest_f(inst: &InsertionInstance) -> Result<Gadget> {
    inst.check(Operation::ForestF)?;
    let mut p = Picker::new(inst)?;
    let x = claws(&mut p)?;
    for tip in x.iter().flatten() {
        p.star(*tip, FAR, 2, "the ∧-matching into B")?;
    }
    p.finish(Operation::ForestF)
}
