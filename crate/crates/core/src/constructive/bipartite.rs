use super::{cut, fill_blocks};
use crate::certify::{check_hist, TreeCertificate};
use crate::graph::{Graph, Vertex};
use crate::{Error, Result};

/// Integer plan for a HIST of `K_{a,b}` (`A = 0..a`, `B = a..a+b`) whose
/// leaf counts differ by `imbalance`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BipartiteHistPlan {
    /// `Δ'`: number of hubs `a_1..a_Δ'` in `A`.
    pub hub_count: usize,
    /// `D`: largest block size.
    pub block_bound: usize,
    /// `ℓ = |L(T) ∩ A| - |L(T) ∩ B|`.
    pub imbalance: usize,
}

impl BipartiteHistPlan {
    pub fn new(hub_count: usize, block_bound: usize, imbalance: usize) -> Self {
        Self { hub_count, block_bound, imbalance }
    }

    /// Checks the chain bound on `B` and the cover bound on
    /// `A - {a_1, ..., a_Δ'}`.
    pub fn check(&self, a_size: usize, b_size: usize) -> Result<()> {
        let (h, d, l) = (self.hub_count, self.block_bound, self.imbalance);
        let fail = |msg: String| crate::error::precondition(msg);
        if a_size != b_size {
            return fail(format!("sides must be balanced, got {a_size} and {b_size}"));
        }
        if h == 0 || d < 3 {
            return fail("need at least one hub and block bound at least 3".into());
        }
        if b_size < 2 * h + 1 || b_size > (d - 1) * h + 1 {
            return fail(format!("|B| = {b_size} outside the chain range [{}, {}]", 2 * h + 1, (d - 1) * h + 1));
        }
        let rest = a_size.saturating_sub(h);
        let cover_max = (d - 1) * (h - 1) + d * (l + 1);
        if rest < 2 * (l + h) || rest > cover_max {
            return fail(format!("|A| - Δ' = {rest} outside the cover range [{}, {cover_max}]", 2 * (l + h)));
        }
        Ok(())
    }
}

/// HIST of `K_{a,b}` with `|S ∩ A| = Δ'`, `|S ∩ B| = Δ' + ℓ`, hence leaf
/// imbalance exactly `ℓ`, and maximum degree at most `D + 1`.
pub fn bipartite_hist(a_size: usize, b_size: usize, plan: &BipartiteHistPlan) -> Result<TreeCertificate> {
    plan.check(a_size, b_size)?;
    let (h, d, l) = (plan.hub_count, plan.block_bound, plan.imbalance);
    let a: Vec<Vertex> = (0..a_size).collect();
    let b: Vec<Vertex> = (a_size..a_size + b_size).collect();
    let infeasible = || Error::Precondition("block sizes cannot be met".into());

    let hubs = &a[..h];
    let chain_sizes = fill_blocks(b_size + h - 1, 3, &vec![d; h]).ok_or_else(infeasible)?;
    let b_blocks = cut(&b, &chain_sizes, true);
    let chain_links: Vec<Vertex> = b_blocks.iter().take(h - 1).map(|blk| *blk.last().unwrap()).collect();
    let extra: Vec<Vertex> = b.iter().copied().filter(|v| !chain_links.contains(v)).take(l + 1).collect();
    let b_hubs: Vec<Vertex> = chain_links.iter().chain(&extra).copied().collect();

    let caps: Vec<usize> = (0..h + l).map(|j| if j + 1 < h { d - 1 } else { d }).collect();
    let residual = &a[h..];
    let a_sizes = fill_blocks(residual.len(), 2, &caps).ok_or_else(infeasible)?;
    let a_blocks = cut(residual, &a_sizes, false);

    let mut edges = Vec::with_capacity(a_size + b_size - 1);
    for (&hub, blk) in hubs.iter().zip(&b_blocks) {
        edges.extend(blk.iter().map(|&v| (hub, v)));
    }
    for (&hub, blk) in b_hubs.iter().zip(&a_blocks) {
        edges.extend(blk.iter().map(|&v| (v, hub)));
    }
    let tree = TreeCertificate::spanning(a_size + b_size, edges);
    let host = Graph::complete_bipartite(a_size, b_size);
    check_hist(&host, &tree).map_err(|r| Error::Falsification(format!("bipartite construction: {r}")))?;
    let internal = tree.internal();
    let in_a = internal.iter().filter(|&&v| v < a_size).count();
    if in_a != h || internal.len() - in_a != h + l || tree.max_degree() > d + 1 {
        return Err(Error::Falsification("bipartite construction broke its bookkeeping".into()));
    }
    Ok(tree)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn leaf_split(t: &TreeCertificate, a: usize) -> (usize, usize) {
        let leaves = t.leaves();
        let in_a = leaves.iter().filter(|&&v| v < a).count();
        (in_a, leaves.len() - in_a)
    }

    #[test]
    fn balanced_and_imbalanced_examples() {
        let t = bipartite_hist(9, 9, &BipartiteHistPlan::new(2, 6, 0)).unwrap();
        let (la, lb) = leaf_split(&t, 9);
        assert_eq!(la, lb);
        let t = bipartite_hist(9, 9, &BipartiteHistPlan::new(2, 6, 1)).unwrap();
        let (la, lb) = leaf_split(&t, 9);
        assert_eq!(la, lb + 1);
        assert!(t.max_degree() <= 7);
    }

    #[test]
    fn infeasible_plans() {
        assert!(matches!(bipartite_hist(9, 9, &BipartiteHistPlan::new(2, 6, 3)), Err(Error::Precondition(_))));
        assert!(bipartite_hist(9, 8, &BipartiteHistPlan::new(2, 6, 0)).is_err());
        assert!(bipartite_hist(9, 9, &BipartiteHistPlan::new(5, 6, 0)).is_err());
        assert!(bipartite_hist(9, 9, &BipartiteHistPlan::new(1, 6, 0)).is_err());
        assert!(bipartite_hist(9, 9, &BipartiteHistPlan::new(2, 2, 0)).is_err());
    }
}
