//! Exact searches for HISTs, spanning generalized Halin graphs and
//! Hamiltonian paths, with explicit budgets and a three-valued outcome.

mod bits;
mod budget;
mod ham;
mod roles;
mod tree;

pub use budget::{Outcome, SearchBudget, SearchMode, SearchReport};

use crate::certify::{is_generalized_halin, is_hist, HalinCertificate, TreeCertificate};
use crate::graph::{ensure_search_size, is_bipartition, is_connected, Graph, Vertex, VertexSetPair};
use crate::Result;
use budget::Ticker;
use roles::Engine;

fn finished<T>(outcome: Outcome<T>, nodes: u64, solutions: Option<u64>) -> SearchReport<T> {
    SearchReport { outcome, nodes, solutions }
}

fn run_engine(g: &Graph, want_cycle: bool, balance: Option<(u64, u64)>, budget: &SearchBudget) -> SearchReport<HalinCertificate> {
    let mut engine = Engine::new(g, want_cycle, balance, budget.mode, Ticker::new(budget));
    engine.run();
    let nodes = engine.ticker.nodes;
    let complete = !engine.exhausted();
    let best = engine.best.take().map(|(edges, cycle)| HalinCertificate::new(TreeCertificate::spanning(g.n(), edges), cycle));
    let outcome = match (budget.mode, best, complete) {
        (SearchMode::First, Some(h), _) => Outcome::Found(h),
        (_, _, false) => Outcome::Unknown,
        (_, Some(h), true) => Outcome::Found(h),
        (_, None, true) => Outcome::None,
    };
    let solutions = (budget.mode == SearchMode::ExhaustiveCount && complete).then_some(engine.solutions);
    finished(outcome, nodes, solutions)
}

fn trivial<T>(found: Option<T>, budget: &SearchBudget) -> SearchReport<T> {
    let solutions = (budget.mode == SearchMode::ExhaustiveCount).then_some(found.is_some() as u64);
    finished(found.map_or(Outcome::None, Outcome::Found), 0, solutions)
}

/// Searches for a homeomorphically irreducible spanning tree.
pub fn find_hist(g: &Graph, budget: &SearchBudget) -> Result<SearchReport<TreeCertificate>> {
    ensure_search_size(g)?;
    if g.n() < 3 || !is_connected(g) {
        let k2 = (g.n() == 2 && g.has_edge(0, 1)).then(|| TreeCertificate::spanning(2, [(0, 1)]));
        return Ok(trivial(k2, budget));
    }
    let report = run_engine(g, false, None, budget);
    let report = SearchReport { outcome: report.outcome.map(|h| h.tree), nodes: report.nodes, solutions: report.solutions };
    debug_assert!(report.outcome.found().is_none_or(|t| is_hist(g, t)));
    Ok(report)
}

/// Searches for a spanning generalized Halin subgraph.
pub fn find_sghg(g: &Graph, budget: &SearchBudget) -> Result<SearchReport<HalinCertificate>> {
    ensure_search_size(g)?;
    if g.n() < 4 || !is_connected(g) {
        return Ok(trivial(None, budget));
    }
    let report = run_engine(g, true, None, budget);
    debug_assert!(report.outcome.found().is_none_or(|h| is_generalized_halin(g, h)));
    Ok(report)
}

fn side_masks(g: &Graph, partition: &VertexSetPair) -> Result<(u64, u64)> {
    partition.validate(g.n())?;
    if !partition.covers(g.n()) || !is_bipartition(g, partition) {
        return crate::error::precondition("partition is not a bipartition of the graph");
    }
    let mask = |side: &[Vertex]| side.iter().fold(0u64, |m, &v| m | 1 << v);
    Ok((mask(&partition.left), mask(&partition.right)))
}

/// Searches for a HIST with as many leaves on the left side as on the right.
pub fn balanced_leaf_hist(g: &Graph, partition: &VertexSetPair, budget: &SearchBudget) -> Result<SearchReport<TreeCertificate>> {
    ensure_search_size(g)?;
    let sides = side_masks(g, partition)?;
    if g.n() < 3 || !is_connected(g) {
        // K_2 has one leaf per side
        let k2 = (g.n() == 2 && g.has_edge(0, 1)).then(|| TreeCertificate::spanning(2, [(0, 1)]));
        return Ok(trivial(k2, budget));
    }
    let report = run_engine(g, false, Some(sides), budget);
    Ok(SearchReport { outcome: report.outcome.map(|h| h.tree), nodes: report.nodes, solutions: report.solutions })
}

/// Exhaustive form of [`balanced_leaf_hist`].
pub fn balanced_leaf_hist_exists(g: &Graph, partition: &VertexSetPair) -> Result<bool> {
    let report = balanced_leaf_hist(g, partition, &SearchBudget::unlimited(SearchMode::First))?;
    Ok(report.outcome.is_found())
}

/// Exhaustive Hamiltonian `(x,y)`-path search; `None` is a proof of
/// nonexistence.
pub fn ham_path_oracle(g: &Graph, x: Vertex, y: Vertex) -> Result<Option<Vec<Vertex>>> {
    ensure_search_size(g)?;
    if x >= g.n() || y >= g.n() || x == y {
        return crate::error::precondition("terminals must be distinct vertices of the graph");
    }
    let adj: Vec<u64> = (0..g.n()).map(|v| g.mask(v)).collect();
    Ok(ham::path_between(&adj, g.n(), x, y))
}

/// Exhaustive Hamiltonian cycle search returning the normalized,
/// lexicographically least cycle.
pub fn ham_cycle_oracle(g: &Graph) -> Result<Option<Vec<Vertex>>> {
    ensure_search_size(g)?;
    let adj: Vec<u64> = (0..g.n()).map(|v| g.mask(v)).collect();
    let mut ticker = Ticker::new(&SearchBudget::unlimited(SearchMode::First));
    Ok(match ham::lexmin_cycle(&adj, bits::full(g.n()), &mut ticker) {
        ham::Sub::Found(c) => Some(c),
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::{check_generalized_halin, is_hamiltonian_cycle, is_hamiltonian_path};

    fn exhaustive() -> SearchBudget {
        SearchBudget::unlimited(SearchMode::ExhaustiveCount)
    }

    fn canonical() -> SearchBudget {
        SearchBudget::unlimited(SearchMode::CanonicalFirst)
    }

    #[test]
    fn hist_examples() {
        assert!(find_hist(&Graph::cycle(5), &exhaustive()).unwrap().outcome.is_none());
        let k4 = find_hist(&Graph::complete(4), &canonical()).unwrap();
        assert_eq!(k4.outcome.found().unwrap().edges, vec![(0, 1), (0, 2), (0, 3)]);
        let k34 = Graph::complete_bipartite(3, 4);
        let t = find_hist(&k34, &SearchBudget::unlimited(SearchMode::First)).unwrap();
        assert!(is_hist(&k34, t.outcome.found().unwrap()));
        assert!(find_hist(&Graph::edgeless(1), &exhaustive()).unwrap().outcome.is_none());
        assert!(find_hist(&Graph::complete(2), &exhaustive()).unwrap().outcome.is_found());
        assert!(find_hist(&Graph::complete(3), &exhaustive()).unwrap().outcome.is_none());
    }

    #[test]
    fn sghg_examples() {
        let k4 = find_sghg(&Graph::complete(4), &canonical()).unwrap();
        let h = k4.outcome.found().unwrap();
        assert_eq!(h.tree.edges, vec![(0, 1), (0, 2), (0, 3)]);
        assert_eq!(h.leaf_cycle, vec![1, 2, 3]);
        assert!(find_sghg(&Graph::complete_bipartite(3, 4), &exhaustive()).unwrap().outcome.is_none());
        let k7 = Graph::complete(7);
        let h = find_sghg(&k7, &SearchBudget::unlimited(SearchMode::First)).unwrap();
        assert_eq!(check_generalized_halin(&k7, h.outcome.found().unwrap()), Ok(()));
        let w5 = Graph::wheel(5);
        assert!(find_sghg(&w5, &exhaustive()).unwrap().outcome.is_found());
        let pet = Graph::petersen();
        let h = find_sghg(&pet, &canonical()).unwrap().outcome.into_found().unwrap();
        assert!(is_generalized_halin(&pet, &h));
        assert_eq!((h.tree.leaves().len(), h.tree.internal().len()), (6, 4));
    }

    #[test]
    fn node_limit_gives_unknown() {
        let k7 = Graph::complete(7);
        for mode in [SearchMode::First, SearchMode::CanonicalFirst, SearchMode::ExhaustiveCount] {
            let r = find_sghg(&k7, &SearchBudget::nodes(1, mode)).unwrap();
            assert!(r.outcome.is_unknown(), "{mode:?}");
        }
    }

    #[test]
    fn exhaustive_counts_leaf_sets() {
        // K_4: the four stars
        let r = find_hist(&Graph::complete(4), &exhaustive()).unwrap();
        assert_eq!(r.solutions, Some(4));
        let r = find_sghg(&Graph::complete(5), &exhaustive()).unwrap();
        assert_eq!(r.solutions, Some(5));
    }

    #[test]
    fn balanced_examples() {
        let split = |a: usize, b: usize| VertexSetPair::new((0..a).collect(), (a..a + b).collect());
        let g = Graph::complete_bipartite(3, 4);
        assert!(!balanced_leaf_hist_exists(&g, &split(3, 4)).unwrap());
        let g = Graph::complete_bipartite(3, 3);
        assert!(balanced_leaf_hist_exists(&g, &split(3, 3)).unwrap());
        let g = Graph::complete_bipartite(2, 2);
        assert!(!balanced_leaf_hist_exists(&g, &split(2, 2)).unwrap());
        let bad = VertexSetPair::new(vec![0, 3], vec![1, 2, 4, 5]);
        assert!(balanced_leaf_hist_exists(&Graph::complete_bipartite(3, 3), &bad).is_err());
    }

    #[test]
    fn ham_path_examples() {
        let p4 = Graph::path(4);
        assert_eq!(ham_path_oracle(&p4, 0, 3).unwrap(), Some(vec![0, 1, 2, 3]));
        assert_eq!(ham_path_oracle(&Graph::star(3), 1, 2).unwrap(), None);
        let pet = Graph::petersen();
        let p = ham_path_oracle(&pet, 0, 1).unwrap();
        // Petersen has no Hamiltonian cycle, so adjacent endpoints cannot be joined
        assert_eq!(p, None);
        let p = ham_path_oracle(&pet, 0, 2).unwrap().unwrap();
        assert!(is_hamiltonian_path(&pet, &p, 0, 2));
        assert!(ham_path_oracle(&p4, 1, 1).is_err());
    }

    #[test]
    fn ham_cycle_examples() {
        assert_eq!(ham_cycle_oracle(&Graph::petersen()).unwrap(), None);
        let c = ham_cycle_oracle(&Graph::complete(5)).unwrap().unwrap();
        assert_eq!(c, vec![0, 1, 2, 3, 4]);
        assert!(is_hamiltonian_cycle(&Graph::complete(5), &c));
    }
}
