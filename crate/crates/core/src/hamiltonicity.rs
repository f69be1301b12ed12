//! Constructive Hamiltonian paths and cycles under degree-sum conditions.
//!
//! Both routines start from a greedy arrangement of all vertices in a cycle,
//! where consecutive non-adjacent pairs are gaps, and remove gaps one at a
//! time by a rotation: for a gap `v_N v_1` on `v_1 .. v_N`, the smallest `i`
//! with `v_1 ~ v_{i+1}` and `v_N ~ v_i` gives `v_1 .. v_i v_N .. v_{i+1}`.
//! The degree-sum condition guarantees such an `i`, so a missing pivot is a
//! falsification event.

use crate::graph::{is_bipartition, Graph, Vertex, VertexSetPair};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Outcome of the Ore-type check `d(x) + d(y) >= n + 1` over non-adjacent
/// pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OreWitness {
    /// The lexicographically first non-adjacent pair with `d(u) + d(v) <= n`.
    pub violating_pair: Option<(Vertex, Vertex)>,
}

impl OreWitness {
    pub fn holds(&self) -> bool {
        self.violating_pair.is_none()
    }
}

pub fn check_ore_plus(g: &Graph) -> OreWitness {
    let n = g.n();
    let violating_pair = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).find(|&(u, v)| !g.has_edge(u, v) && g.degree(u) + g.degree(v) <= n);
    OreWitness { violating_pair }
}

/// The walk together with the work done to find it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamRun {
    pub walk: Vec<Vertex>,
    /// Gaps left by the greedy extension.
    pub initial_gaps: usize,
    pub rotations: usize,
}

/// Cyclic arrangement with a custom adjacency test. Gaps are consecutive
/// pairs that fail the test.
struct Rotator<F: Fn(Vertex, Vertex) -> bool> {
    order: Vec<Vertex>,
    adj: F,
    rotations: usize,
}

impl<F: Fn(Vertex, Vertex) -> bool> Rotator<F> {
    fn gaps(&self) -> usize {
        let n = self.order.len();
        (0..n).filter(|&i| !(self.adj)(self.order[i], self.order[(i + 1) % n])).count()
    }

    fn first_gap(&self) -> Option<usize> {
        let n = self.order.len();
        (0..n).find(|&i| !(self.adj)(self.order[i], self.order[(i + 1) % n]))
    }

    /// Removes every gap, allowing at most `limit` rotations.
    fn close(&mut self, limit: usize) -> Result<()> {
        while let Some(j) = self.first_gap() {
            if self.rotations >= limit {
                return Err(Error::Falsification(format!("rotation limit {limit} reached with gaps remaining")));
            }
            let n = self.order.len();
            // v_1 .. v_N with the gap between v_N and v_1
            let mut v: Vec<Vertex> = (1..=n).map(|s| self.order[(j + s) % n]).collect();
            let (first, last) = (v[0], v[n - 1]);
            let pivot = (1..n - 1).find(|&i| (self.adj)(first, v[i]) && (self.adj)(last, v[i - 1])).ok_or_else(|| {
                Error::Falsification(format!("no rotation pivot for the gap {last}-{first} although the degree condition holds"))
            })?;
            v[pivot..].reverse();
            self.order = v;
            self.rotations += 1;
        }
        Ok(())
    }
}

/// Default rotation budget for `n` vertices.
pub fn default_rotation_limit(n: usize) -> usize {
    (n * n).max(1)
}

/// Hamiltonian `(x,y)`-path of a graph meeting the Ore-type condition.
pub fn ore_ham_path(g: &Graph, x: Vertex, y: Vertex) -> Result<HamRun> {
    ore_ham_path_bounded(g, x, y, default_rotation_limit(g.n()))
}

/// [`ore_ham_path`] with an explicit rotation budget.
pub fn ore_ham_path_bounded(g: &Graph, x: Vertex, y: Vertex, rotation_limit: usize) -> Result<HamRun> {
    let n = g.n();
    if x >= n || y >= n || x == y {
        return crate::error::precondition("terminals must be distinct vertices of the graph");
    }
    if let Some((u, v)) = check_ore_plus(g).violating_pair {
        return crate::error::precondition(format!("non-adjacent {u}, {v} have degree sum {} < n + 1", g.degree(u) + g.degree(v)));
    }
    // a virtual vertex w = n adjacent to x and y closes the path into a cycle
    let w = n;
    let mut order = vec![w, x];
    let mut used = vec![false; n];
    used[x] = true;
    used[y] = true;
    let mut cur = x;
    while let Some(&next) = g.neighbors(cur).iter().find(|&&u| !used[u]) {
        used[next] = true;
        order.push(next);
        cur = next;
    }
    order.extend((0..n).filter(|&v| !used[v]));
    order.push(y);
    let adj = |u: Vertex, v: Vertex| {
        if u == w || v == w {
            let other = u.min(v);
            other == x || other == y
        } else {
            g.has_edge(u, v)
        }
    };
    let mut rot = Rotator { order, adj, rotations: 0 };
    let initial_gaps = rot.gaps();
    rot.close(rotation_limit)?;
    let pos = rot.order.iter().position(|&v| v == w).expect("w is on the cycle");
    let mut walk: Vec<Vertex> = (1..=n).map(|s| rot.order[(pos + s) % (n + 1)]).collect();
    if walk[0] != x {
        walk.reverse();
    }
    debug_assert!(crate::certify::is_hamiltonian_path(g, &walk, x, y));
    Ok(HamRun { walk, initial_gaps, rotations: rot.rotations })
}

/// Checks the balanced bipartite degree condition: sides of equal size
/// `m >= 2` and `d(x) + d(y) >= m + 1` for every non-adjacent cross pair.
pub fn check_moon_moser(g: &Graph, sides: &VertexSetPair) -> Result<()> {
    sides.validate(g.n())?;
    if !sides.covers(g.n()) || !is_bipartition(g, sides) {
        return crate::error::precondition("sides are not a bipartition of the graph");
    }
    let m = sides.left.len();
    if m != sides.right.len() || m < 2 {
        return crate::error::precondition(format!("sides have sizes {} and {}; need equal sizes of at least 2", m, sides.right.len()));
    }
    for &a in &sides.left {
        for &b in &sides.right {
            if !g.has_edge(a, b) && g.degree(a) + g.degree(b) <= m {
                return crate::error::precondition(format!("non-adjacent {a}, {b} have degree sum {} < m + 1", g.degree(a) + g.degree(b)));
            }
        }
    }
    Ok(())
}

/// Hamiltonian cycle of a balanced bipartite graph meeting the degree
/// condition; the cycle alternates sides and starts at the smallest left
/// vertex.
pub fn moon_moser_cycle(g: &Graph, sides: &VertexSetPair) -> Result<HamRun> {
    check_moon_moser(g, sides)?;
    let n = g.n();
    let mut left = vec![false; n];
    for &v in &sides.left {
        left[v] = true;
    }
    let mut rest: [Vec<Vertex>; 2] = [sides.right.clone(), sides.left.clone()];
    rest[0].sort_unstable();
    rest[1].sort_unstable();
    let mut used = vec![false; n];
    let start = rest[1][0];
    used[start] = true;
    let mut order = vec![start];
    // extend greedily, alternating; a stuck end jumps to the smallest unused
    // vertex of the side it needs
    while order.len() < n {
        let cur = *order.last().unwrap();
        let want = usize::from(!left[cur]);
        let next = g.neighbors(cur).iter().copied().find(|&u| !used[u] && left[u] == (want == 1)).or_else(|| rest[want].iter().copied().find(|&u| !used[u])).expect("balanced sides");
        used[next] = true;
        order.push(next);
    }
    // a gap v_N v_1 always joins opposite sides, and the pivot rule keeps
    // the alternation
    let mut rot = Rotator { order, adj: |u: Vertex, v: Vertex| g.has_edge(u, v), rotations: 0 };
    let initial_gaps = rot.gaps();
    rot.close(default_rotation_limit(n))?;
    let pos = rot.order.iter().position(|&v| v == start).expect("start is on the cycle");
    let mut walk: Vec<Vertex> = (0..n).map(|s| rot.order[(pos + s) % n]).collect();
    if walk[1] > walk[n - 1] {
        walk[1..].reverse();
    }
    debug_assert!(crate::certify::is_hamiltonian_cycle(g, &walk));
    Ok(HamRun { walk, initial_gaps, rotations: rot.rotations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::{is_hamiltonian_cycle, is_hamiltonian_path};

    fn minus_edge(g: &Graph, e: (Vertex, Vertex)) -> Graph {
        Graph::from_fn(g.n(), |u, v| (u, v) != e && g.has_edge(u, v))
    }

    #[test]
    fn ore_check_examples() {
        assert!(check_ore_plus(&Graph::complete(5)).holds());
        assert!(!check_ore_plus(&Graph::cycle(5)).holds());
        assert!(check_ore_plus(&minus_edge(&Graph::complete(5), (0, 1))).holds());
    }

    #[test]
    fn ore_paths() {
        let k4 = Graph::complete(4);
        for x in 0..4 {
            for y in 0..4 {
                if x != y {
                    let r = ore_ham_path(&k4, x, y).unwrap();
                    assert_eq!(r.walk.len(), 4);
                    assert!(is_hamiltonian_path(&k4, &r.walk, x, y));
                }
            }
        }
        let g = minus_edge(&Graph::complete(5), (0, 1));
        let r = ore_ham_path(&g, 0, 1).unwrap();
        assert!(is_hamiltonian_path(&g, &r.walk, 0, 1));
        assert!(ore_ham_path(&Graph::cycle(5), 0, 2).is_err());
        assert!(ore_ham_path(&k4, 2, 2).is_err());
    }

    #[test]
    fn rotations_are_needed_and_bounded() {
        // greedy from 0 walks 0,2,3,.. and must repair gaps
        let g = minus_edge(&minus_edge(&Graph::complete(7), (0, 1)), (2, 6));
        for x in 0..7 {
            for y in 0..7 {
                if x != y {
                    let r = ore_ham_path(&g, x, y).unwrap();
                    assert!(is_hamiltonian_path(&g, &r.walk, x, y));
                    assert!(r.rotations <= r.initial_gaps);
                }
            }
        }
    }

    #[test]
    fn moon_moser_examples() {
        let split = |m: usize| VertexSetPair::new((0..m).collect(), (m..2 * m).collect());
        for m in [2, 3] {
            let g = Graph::complete_bipartite(m, m);
            let r = moon_moser_cycle(&g, &split(m)).unwrap();
            assert_eq!(r.walk.len(), 2 * m);
            assert!(is_hamiltonian_cycle(&g, &r.walk));
        }
        let g = Graph::from_fn(8, |u, v| u < 4 && v >= 4 && v != u + 4);
        let r = moon_moser_cycle(&g, &split(4)).unwrap();
        assert!(is_hamiltonian_cycle(&g, &r.walk));
        assert!(moon_moser_cycle(&Graph::complete_bipartite(2, 3), &VertexSetPair::new(vec![0, 1], vec![2, 3, 4])).is_err());
        assert!(moon_moser_cycle(&Graph::cycle(8), &VertexSetPair::new(vec![0, 2, 4, 6], vec![1, 3, 5, 7])).is_err());
    }
}
