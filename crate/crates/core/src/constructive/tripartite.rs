use super::{cut, fill_blocks};
use crate::certify::{check_hist, TreeCertificate};
use crate::graph::{Graph, Vertex};
use crate::{Error, Result};

/// Integer plan for a HIST of the half-complete tripartite host on
/// `A = 0..a`, `B = a..a+b`, `F = a+b..a+b+f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TripartiteHistPlan {
    /// `Δ'`: number of hubs `b_1..b_Δ'` in `B`.
    pub hub_count: usize,
    /// `D`: `F` blocks have at most `D` vertices, `A` blocks at most `2D`.
    pub block_bound: usize,
}

/// The tree together with an alternating `(b,f)`-path on its leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripartiteHist {
    pub tree: TreeCertificate,
    /// `b, f, b, f, ..., b, f` over all of `L(T) ∩ F` and as many leaves of
    /// `B`; empty when every vertex of `F` is internal.
    pub path: Vec<Vertex>,
    /// `l' = |A ∪ F| - |B| - l`, the number of extra internal vertices
    /// taken from `A ∪ F`.
    pub l_prime: usize,
}

impl TripartiteHistPlan {
    pub fn new(hub_count: usize, block_bound: usize) -> Self {
        Self { hub_count, block_bound }
    }

    /// Returns `l'` when the plan is feasible.
    pub fn check(&self, a: usize, b: usize, f: usize, l: usize) -> Result<usize> {
        let (h, d) = (self.hub_count, self.block_bound);
        let fail = |msg: String| crate::error::precondition(msg);
        if h == 0 || d < 3 {
            return fail("need at least one hub and block bound at least 3".into());
        }
        if f < 3 * h || f > d * h {
            return fail(format!("|F| = {f} outside [{}, {}]", 3 * h, d * h));
        }
        if a < 2 * h + 1 || a > (2 * d - 1) * h + 1 {
            return fail(format!("|A| = {a} outside the chain range [{}, {}]", 2 * h + 1, (2 * d - 1) * h + 1));
        }
        let l_prime = match (a + f).checked_sub(b + l) {
            Some(v) if v >= 1 => v,
            _ => return fail("l' = |A ∪ F| - |B| - l must be positive".into()),
        };
        if l_prime > f + a - h {
            return fail(format!("l' = {l_prime} exceeds the available vertices of (A - hubs) ∪ F"));
        }
        if b < h + 2 * l_prime + h + 1 {
            return fail(format!("|B'| = |B| - Δ' - 2l' must be at least Δ' + 1 (|B| = {b}, l' = {l_prime})"));
        }
        let f_leaves = f.saturating_sub(l_prime);
        if b - h < f_leaves {
            return fail("too few B-leaves to pair with the F-leaves".into());
        }
        Ok(l_prime)
    }
}

/// HIST with `|L(T) ∩ B| = |L(T) ∩ (A ∪ F)| - l`, plus the `(b,f)`-path.
pub fn tripartite_hist(a_size: usize, b_size: usize, f_size: usize, l: usize, plan: &TripartiteHistPlan) -> Result<TripartiteHist> {
    let l_prime = plan.check(a_size, b_size, f_size, l)?;
    let (h, d) = (plan.hub_count, plan.block_bound);
    let a: Vec<Vertex> = (0..a_size).collect();
    let b: Vec<Vertex> = (a_size..a_size + b_size).collect();
    let f: Vec<Vertex> = (a_size + b_size..a_size + b_size + f_size).collect();
    let infeasible = || Error::Precondition("block sizes cannot be met".into());

    let b_hubs = &b[..h];
    let f_blocks = cut(&f, &fill_blocks(f_size, 3, &vec![d; h]).ok_or_else(infeasible)?, false);
    let a_blocks = cut(&a, &fill_blocks(a_size + h - 1, 3, &vec![2 * d; h]).ok_or_else(infeasible)?, true);
    let mut a_hubs: Vec<Vertex> = a_blocks.iter().take(h - 1).map(|blk| *blk.last().unwrap()).collect();
    let last_hub = *a_blocks[h - 1].iter().find(|v| !a_hubs.contains(v)).ok_or_else(infeasible)?;
    a_hubs.push(last_hub);

    let extra: Vec<Vertex> = f.iter().chain(a.iter().filter(|v| !a_hubs.contains(v))).copied().take(l_prime).collect();
    let pair_pool = &b[h..h + 2 * l_prime];
    let rest_b = &b[h + 2 * l_prime..];
    let mut mins = vec![1; h];
    mins[h - 1] = 2;
    let b_rest_sizes = {
        // one vertex per block, two for the last, remainder round-robin
        let mut sizes = mins.clone();
        let mut left = rest_b.len() - (h + 1);
        while left > 0 {
            for s in sizes.iter_mut() {
                if left > 0 {
                    *s += 1;
                    left -= 1;
                }
            }
        }
        sizes
    };
    let b_rest_blocks = cut(rest_b, &b_rest_sizes, false);

    let mut edges = Vec::with_capacity(a_size + b_size + f_size - 1);
    for i in 0..h {
        edges.extend(f_blocks[i].iter().map(|&v| (b_hubs[i], v)));
        edges.extend(a_blocks[i].iter().map(|&v| (b_hubs[i], v)));
        edges.extend(b_rest_blocks[i].iter().map(|&v| (a_hubs[i], v)));
    }
    for (i, &x) in extra.iter().enumerate() {
        edges.push((x, pair_pool[2 * i]));
        edges.push((x, pair_pool[2 * i + 1]));
    }
    let n = a_size + b_size + f_size;
    let tree = TreeCertificate::spanning(n, edges);
    let host = Graph::half_complete_tripartite(a_size, b_size, f_size);
    check_hist(&host, &tree).map_err(|r| Error::Falsification(format!("tripartite construction: {r}")))?;

    let leaves = tree.leaves();
    let in_b = |v: &&Vertex| (a_size..a_size + b_size).contains(*v);
    let leaves_b: Vec<Vertex> = leaves.iter().filter(in_b).copied().collect();
    let leaves_f: Vec<Vertex> = leaves.iter().filter(|&&v| v >= a_size + b_size).copied().collect();
    if leaves_b.len() + l != leaves.len() - leaves_b.len() {
        return Err(Error::Falsification("tripartite construction broke the leaf count identity".into()));
    }
    let path = leaves_b.iter().zip(&leaves_f).flat_map(|(&x, &y)| [x, y]).collect();
    Ok(TripartiteHist { tree, path, l_prime })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_path(r: &TripartiteHist, a: usize, b: usize) {
        let host_b = |v: Vertex| (a..a + b).contains(&v);
        for (i, &v) in r.path.iter().enumerate() {
            assert_eq!(host_b(v), i % 2 == 0);
            assert_eq!(r.tree.degrees()[v], 1);
        }
    }

    #[test]
    fn substitute_example() {
        let r = tripartite_hist(12, 12, 5, 2, &TripartiteHistPlan::new(1, 6)).unwrap();
        assert_eq!(r.l_prime, 3);
        assert_eq!(r.path.len(), 4);
        check_path(&r, 12, 12);
    }

    #[test]
    fn literal_example_is_infeasible() {
        assert!(tripartite_hist(12, 12, 5, 0, &TripartiteHistPlan::new(2, 6)).is_err());
    }

    #[test]
    fn fully_internal_f() {
        let r = tripartite_hist(9, 9, 3, 0, &TripartiteHistPlan::new(1, 5)).unwrap();
        assert!(r.path.is_empty());
        assert!((18..21).all(|v| r.tree.degrees()[v] >= 3));
    }

    #[test]
    fn rejects_nonpositive_l_prime() {
        // |A ∪ F| - |B| - 1 = 4, so l = 5 leaves l' = 0
        assert!(tripartite_hist(12, 12, 5, 5, &TripartiteHistPlan::new(1, 6)).is_err());
    }
}
