mod common;

use common::{balanced_hist_exists, sghg_leaf_sets};
use halin_core::certify::is_generalized_halin;
use halin_core::extremal::{certificate_digest, confirm_sharpness, report_csv, sharpness_instance, threshold_experiment, ThresholdParams, TrialOutcome};
use halin_core::io::{emit_certificate, parse_certificate, parse_graph6, CertificateDocument};
use halin_core::search::{find_sghg, SearchBudget, SearchMode};
use num_rational::Rational64;

fn params(n: usize, fraction: f64, trials: usize, seed: u64) -> ThresholdParams<f64> {
    ThresholdParams { n, delta_fraction: fraction, trials, seed, budget: SearchBudget::nodes(2_000_000, SearchMode::First), injected: Vec::new() }
}

#[test]
fn sharpness_agrees_with_enumeration() {
    for a in 2..=4 {
        let (g, s) = sharpness_instance(a).unwrap();
        let left: Vec<usize> = (0..a).collect();
        assert!(!balanced_hist_exists(&g, &left), "a = {a}");
        assert!(sghg_leaf_sets(&g).is_empty(), "a = {a}");
        let report = confirm_sharpness(a, &SearchBudget::unlimited(SearchMode::ExhaustiveCount)).unwrap();
        assert!(report.confirmed());
        assert_eq!(g.min_degree(), s.predicted_delta);
    }
}

#[test]
fn empty_experiment_is_valid() {
    let r = threshold_experiment(&params(10, 0.5, 0, 1)).unwrap();
    assert_eq!((r.trials, r.records.len(), r.found_rate), (0, 0, 0.0));
    let doc = CertificateDocument::ExperimentReport(r);
    assert_eq!(parse_certificate(&emit_certificate(&doc)).unwrap(), doc);
}

#[test]
fn dense_experiment_finds_verified_certificates() {
    let r = threshold_experiment(&params(12, 0.9, 20, 7)).unwrap();
    assert!(r.found_rate >= 0.9, "{}", r.found_rate);
    for rec in &r.records {
        if rec.outcome == TrialOutcome::SghgFound {
            let g = parse_graph6(rec.graph6.as_ref().unwrap().as_bytes()).unwrap();
            assert!(g.min_degree() >= 11);
            let h = find_sghg(&g, &SearchBudget::unlimited(SearchMode::First)).unwrap().outcome.into_found().unwrap();
            assert!(is_generalized_halin(&g, &h));
            assert_eq!(rec.digest.as_deref(), Some(certificate_digest(&h).as_str()));
            assert_eq!(rec.audit_ok, Some(true));
        }
    }
}

#[test]
fn injected_sharpness_instance_is_negative() {
    let (g, _) = sharpness_instance(3).unwrap();
    let mut p = params(7, 0.4, 3, 9);
    p.budget = SearchBudget::unlimited(SearchMode::ExhaustiveCount);
    p.injected = vec![g];
    let r = threshold_experiment(&p).unwrap();
    assert_eq!(r.records[0].outcome, TrialOutcome::None);
    assert!(r.records[0].injected);
}

#[test]
fn reports_are_reproducible_across_thread_counts() {
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| threshold_experiment(&params(11, 0.7, 12, 42)).unwrap())
    };
    let (a, b) = (run(1), run(4));
    assert_eq!(emit_certificate(&CertificateDocument::ExperimentReport(a.clone())), emit_certificate(&CertificateDocument::ExperimentReport(b)));
    let csv = report_csv(&a);
    assert_eq!(csv.lines().count(), 13);
    assert!(csv.starts_with("index,seed_hash,outcome,runtime_ms,certificate_digest\n"));
}

#[test]
fn exact_fraction_gives_exact_degree() {
    let p = ThresholdParams { n: 10, delta_fraction: Rational64::new(3, 5), trials: 2, seed: 3, budget: SearchBudget::nodes(100_000, SearchMode::First), injected: Vec::new() };
    let r = threshold_experiment(&p).unwrap();
    assert_eq!(r.min_degree, 6);
    let skipped_or_dense = r.records.iter().all(|rec| rec.graph6.as_ref().is_none_or(|s| parse_graph6(s.as_bytes()).unwrap().min_degree() >= 6));
    assert!(skipped_or_dense);
}
