mod common;

use common::{balanced_hist_exists, brute_ham_cycle, brute_ham_path, hist_leaf_sets, random_graph, rng, sghg_leaf_sets};
use halin_core::certify::{audit_generalized_halin, check_generalized_halin, check_hist, is_hamiltonian_cycle, is_hamiltonian_path};
use halin_core::graph::bipartition;
use halin_core::search::{balanced_leaf_hist, find_hist, find_sghg, ham_cycle_oracle, ham_path_oracle, SearchBudget, SearchMode};
use halin_core::{Graph, VertexSetPair};
use proptest::prelude::*;

fn exhaustive() -> SearchBudget {
    SearchBudget::unlimited(SearchMode::ExhaustiveCount)
}

#[test]
fn sghg_and_hist_counts_match_enumeration() {
    let mut r = rng(21);
    for trial in 0..150 {
        let n = 4 + trial % 4;
        let g = random_graph(&mut r, n, 0.45 + 0.1 * (trial % 5) as f64);
        let sghg = find_sghg(&g, &exhaustive()).unwrap();
        let want = sghg_leaf_sets(&g);
        assert_eq!(sghg.solutions, Some(want.len() as u64), "trial {trial}");
        if let Some(h) = sghg.outcome.found() {
            assert_eq!(check_generalized_halin(&g, h), Ok(()));
            assert!(audit_generalized_halin(h).holds(n));
        }
        let hist = find_hist(&g, &exhaustive()).unwrap();
        assert_eq!(hist.solutions, Some(hist_leaf_sets(&g).len() as u64), "trial {trial}");
        if let Some(t) = hist.outcome.found() {
            assert_eq!(check_hist(&g, t), Ok(()));
        }
    }
}

#[test]
fn canonical_and_exhaustive_return_the_same_certificate() {
    let g = Graph::wheel(6);
    let a = find_sghg(&g, &SearchBudget::unlimited(SearchMode::CanonicalFirst)).unwrap();
    let b = find_sghg(&g, &exhaustive()).unwrap();
    assert_eq!(a.outcome.found(), b.outcome.found());
}

#[test]
fn balanced_search_matches_enumeration() {
    let mut r = rng(22);
    let mut checked = 0;
    while checked < 60 {
        let n = 4 + checked % 4;
        let g = random_graph(&mut r, n, 0.6);
        let Some(p) = bipartition(&g) else { continue };
        let got = balanced_leaf_hist(&g, &p, &exhaustive()).unwrap();
        assert_eq!(got.outcome.is_found(), balanced_hist_exists(&g, &p.left));
        checked += 1;
    }
    for (a, b) in [(3, 4), (4, 5), (3, 3), (4, 4)] {
        let g = Graph::complete_bipartite(a, b);
        let p = VertexSetPair::new((0..a).collect(), (a..a + b).collect());
        let got = balanced_leaf_hist(&g, &p, &exhaustive()).unwrap();
        assert_eq!(got.outcome.is_found(), balanced_hist_exists(&g, &p.left), "K_{a},{b}");
    }
}

#[test]
fn ham_oracles_match_permutations() {
    let mut r = rng(23);
    for trial in 0..200 {
        let n = 3 + trial % 5;
        let g = random_graph(&mut r, n, 0.5);
        let all: Vec<usize> = (0..n).collect();
        let c = ham_cycle_oracle(&g).unwrap();
        assert_eq!(c.is_some(), brute_ham_cycle(&g, &all));
        if let Some(c) = c {
            assert!(is_hamiltonian_cycle(&g, &c));
        }
        for x in 0..n {
            for y in x + 1..n {
                let p = ham_path_oracle(&g, x, y).unwrap();
                assert_eq!(p.is_some(), brute_ham_path(&g, x, y));
                if let Some(p) = p {
                    assert!(is_hamiltonian_path(&g, &p, x, y));
                }
            }
        }
    }
}

fn arb_small_graph() -> impl Strategy<Value = Graph> {
    (4usize..=8, any::<u64>(), 0.3f64..0.95).prop_map(|(n, seed, p)| random_graph(&mut rng(seed), n, p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn found_certificates_verify(g in arb_small_graph()) {
        let r = find_sghg(&g, &SearchBudget::unlimited(SearchMode::First)).unwrap();
        if let Some(h) = r.outcome.found() {
            prop_assert_eq!(check_generalized_halin(&g, h), Ok(()));
        }
        let r = find_hist(&g, &SearchBudget::unlimited(SearchMode::First)).unwrap();
        if let Some(t) = r.outcome.found() {
            prop_assert_eq!(check_hist(&g, t), Ok(()));
        }
    }

    #[test]
    fn budget_never_flips_a_verdict(g in arb_small_graph(), limit in 1u64..200) {
        let full = find_sghg(&g, &exhaustive()).unwrap();
        for mode in [SearchMode::First, SearchMode::CanonicalFirst, SearchMode::ExhaustiveCount] {
            let part = find_sghg(&g, &SearchBudget::nodes(limit, mode)).unwrap();
            if !part.outcome.is_unknown() {
                prop_assert_eq!(part.outcome.is_found(), full.outcome.is_found());
            }
            if mode != SearchMode::First && part.outcome.is_found() {
                prop_assert_eq!(part.outcome.found(), full.outcome.found());
            }
        }
    }

    #[test]
    fn larger_budget_keeps_conclusive_verdicts(g in arb_small_graph(), limit in 1u64..100) {
        let small = find_hist(&g, &SearchBudget::nodes(limit, SearchMode::ExhaustiveCount)).unwrap();
        let large = find_hist(&g, &SearchBudget::nodes(limit * 10, SearchMode::ExhaustiveCount)).unwrap();
        if !small.outcome.is_unknown() {
            prop_assert!(!large.outcome.is_unknown());
            prop_assert_eq!(small.solutions, large.solutions);
        }
    }
}
