mod common;

use common::{brute_ham_path, random_graph, rng};
use halin_core::certify::{is_hamiltonian_cycle, is_hamiltonian_path};
use halin_core::hamiltonicity::{check_moon_moser, check_ore_plus, moon_moser_cycle, ore_ham_path};
use halin_core::{Error, Graph, VertexSetPair};
use proptest::prelude::*;
use rand::Rng;
use std::time::Instant;

fn ore_brute(g: &Graph) -> bool {
    let n = g.n();
    (0..n).all(|u| (0..n).all(|v| u == v || g.has_edge(u, v) || g.degree(u) + g.degree(v) > n))
}

#[test]
fn ore_check_matches_definition() {
    let mut r = rng(51);
    for trial in 0..300 {
        let g = random_graph(&mut r, 2 + trial % 9, 0.5 + 0.05 * (trial % 10) as f64);
        assert_eq!(check_ore_plus(&g).holds(), ore_brute(&g));
    }
}

#[test]
fn ore_paths_exist_exactly_when_brute_force_finds_them() {
    let mut r = rng(52);
    let mut tested = 0;
    while tested < 150 {
        let n = 3 + tested % 6;
        let g = random_graph(&mut r, n, 0.75);
        if !check_ore_plus(&g).holds() {
            continue;
        }
        for x in 0..n {
            for y in 0..n {
                if x != y {
                    assert!(brute_ham_path(&g, x, y), "degree condition without a Hamiltonian path");
                    let run = ore_ham_path(&g, x, y).unwrap();
                    assert!(is_hamiltonian_path(&g, &run.walk, x, y));
                }
            }
        }
        tested += 1;
    }
}

#[test]
fn fifty_vertex_harness() {
    let mut r = rng(53);
    let n = 50;
    for _ in 0..5 {
        // minimum degree 26 forces d(u) + d(v) >= 52 > n
        let g = loop {
            let g = random_graph(&mut r, n, 0.62);
            if check_ore_plus(&g).holds() {
                break g;
            }
        };
        let (x, y) = (r.gen_range(0..n), r.gen_range(0..n));
        if x == y {
            continue;
        }
        let start = Instant::now();
        let run = ore_ham_path(&g, x, y).unwrap();
        assert!(start.elapsed().as_secs_f64() < 0.1);
        assert!(is_hamiltonian_path(&g, &run.walk, x, y));
        assert!(run.rotations <= n * n);
    }
}

#[test]
fn moon_moser_on_random_instances() {
    let mut r = rng(54);
    let mut tested = 0;
    while tested < 100 {
        let m = 2 + tested % 7;
        let g = Graph::from_fn(2 * m, |u, v| u < m && v >= m && r.gen_bool(0.8));
        let sides = VertexSetPair::new((0..m).collect(), (m..2 * m).collect());
        match check_moon_moser(&g, &sides) {
            Ok(()) => {
                let run = moon_moser_cycle(&g, &sides).unwrap();
                assert!(is_hamiltonian_cycle(&g, &run.walk));
                for (i, &v) in run.walk.iter().enumerate() {
                    assert_eq!(v < m, i % 2 == 0);
                }
                tested += 1;
            }
            Err(e) => assert!(matches!(e, Error::Precondition(_))),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(80))]

    #[test]
    fn ore_path_is_valid(seed in any::<u64>(), n in 2usize..=30) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n, 0.8);
        prop_assume!(check_ore_plus(&g).holds());
        let x = r.gen_range(0..n);
        let y = (x + 1 + r.gen_range(0..n - 1)) % n;
        let run = ore_ham_path(&g, x, y).unwrap();
        prop_assert!(is_hamiltonian_path(&g, &run.walk, x, y));
        prop_assert!(run.rotations <= run.initial_gaps);
    }
}
