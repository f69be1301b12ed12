//! The complete bipartite sharpness family and randomized threshold
//! experiments around the `(2n+3)/5` minimum-degree bound.

use crate::certify::{audit_generalized_halin, is_generalized_halin, HalinCertificate, TreeCertificate};
use crate::graph::{vertex_connectivity_at_least, Graph, VertexSetPair};
use crate::io::{emit_certificate, emit_graph6, CertificateDocument};
use crate::scalar::Scalar;
use crate::search::{balanced_leaf_hist, find_sghg, Outcome, SearchBudget, SearchMode};
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::fmt::Write;
use std::time::Instant;

/// Metadata of `K_{a,b}` with `b = (3a-1)/2` for odd `a` and `(3a-2)/2` for
/// even `a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharpnessInstance {
    pub a: usize,
    pub b: usize,
    pub n: usize,
    /// `(2n+1)/5` for odd `a`, `(2n+2)/5` for even `a`.
    pub predicted_delta: usize,
}

impl SharpnessInstance {
    /// The arithmetic facts the family is built on.
    pub fn metadata_holds(&self) -> bool {
        let numerator = 2 * self.n + if self.a % 2 == 1 { 1 } else { 2 };
        2 * self.b > 3 * (self.a - 1)
            && self.n == self.a + self.b
            && numerator.is_multiple_of(5)
            && numerator / 5 == self.predicted_delta
            && self.predicted_delta == self.a.min(self.b)
    }

    pub fn partition(&self) -> VertexSetPair {
        VertexSetPair::new((0..self.a).collect(), (self.a..self.n).collect())
    }
}

pub fn sharpness_instance(a: usize) -> Result<(Graph, SharpnessInstance)> {
    if a < 2 {
        return crate::error::precondition("the sharpness family starts at a = 2");
    }
    let b = if a % 2 == 1 { (3 * a - 1) / 2 } else { (3 * a - 2) / 2 };
    let n = a + b;
    let predicted_delta = if a % 2 == 1 { (2 * n + 1) / 5 } else { (2 * n + 2) / 5 };
    let inst = SharpnessInstance { a, b, n, predicted_delta };
    let g = Graph::complete_bipartite(a, b);
    if !inst.metadata_holds() || g.min_degree() != predicted_delta {
        return Err(Error::Falsification(format!("sharpness metadata inconsistent for a = {a}")));
    }
    Ok((g, inst))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SharpnessReport {
    pub instance: SharpnessInstance,
    pub balanced_hist: Outcome<TreeCertificate>,
    pub sghg: Outcome<HalinCertificate>,
    pub nodes: u64,
}

impl SharpnessReport {
    /// Both searches completed, and both came back empty.
    pub fn confirmed(&self) -> bool {
        self.balanced_hist.is_none() && self.sghg.is_none()
    }

    pub fn conclusive(&self) -> bool {
        !self.balanced_hist.is_unknown() && !self.sghg.is_unknown()
    }
}

/// Runs the balanced-leaf HIST search and the SGHG search on the sharpness
/// instance. A certificate from either search is a falsification event.
pub fn confirm_sharpness(a: usize, budget: &SearchBudget) -> Result<SharpnessReport> {
    let (g, instance) = sharpness_instance(a)?;
    let budget = SearchBudget { mode: SearchMode::ExhaustiveCount, ..*budget };
    let balanced = balanced_leaf_hist(&g, &instance.partition(), &budget)?;
    let sghg = find_sghg(&g, &budget)?;
    if balanced.outcome.is_found() || sghg.outcome.is_found() {
        return Err(Error::Falsification(format!(
            "K_{{{},{}}} has a balanced-leaf HIST or a spanning generalized Halin graph",
            instance.a, instance.b
        )));
    }
    Ok(SharpnessReport {
        instance,
        nodes: balanced.nodes + sghg.nodes,
        balanced_hist: balanced.outcome,
        sghg: sghg.outcome,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TrialOutcome {
    SghgFound,
    None,
    Unknown,
    Skipped,
}

impl TrialOutcome {
    pub fn label(self) -> &'static str {
        match self {
            Self::SghgFound => "sghg-found",
            Self::None => "none",
            Self::Unknown => "unknown",
            Self::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub index: usize,
    pub seed_hash: u64,
    pub outcome: TrialOutcome,
    pub injected: bool,
    /// The host in graph6, absent for skipped trials.
    pub graph6: Option<String>,
    /// SHA-256 of the certificate document, present exactly when found.
    pub digest: Option<String>,
    /// Whether the found certificate passed the structural audit.
    pub audit_ok: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub n: usize,
    pub delta_fraction: f64,
    pub min_degree: usize,
    pub trials: usize,
    pub seed: u64,
    pub records: Vec<TrialRecord>,
    pub found: usize,
    pub none: usize,
    pub unknown: usize,
    pub skipped: usize,
    /// Found trials over non-skipped trials; zero when nothing ran.
    pub found_rate: f64,
    /// Wall-clock time per trial. Not part of the reproducible document.
    #[serde(skip)]
    pub runtime_ms: Vec<u64>,
}

pub struct ThresholdParams<S> {
    pub n: usize,
    pub delta_fraction: S,
    pub trials: usize,
    pub seed: u64,
    pub budget: SearchBudget,
    /// Hosts used verbatim for the first trials instead of random graphs.
    pub injected: Vec<Graph>,
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of the RNG stream for one trial.
pub fn trial_seed(seed: u64, index: usize) -> u64 {
    splitmix64(seed ^ splitmix64(index as u64))
}

const GENERATOR_ATTEMPTS: usize = 400;

/// Samples `G(n, p)` at increasing `p` until a 3-connected graph with
/// minimum degree at least `min_degree` appears.
pub fn random_three_connected<R: Rng + ?Sized>(n: usize, min_degree: usize, rng: &mut R) -> Option<Graph> {
    if n < 4 || min_degree >= n {
        return None;
    }
    let start = (min_degree as f64 / (n - 1) as f64).clamp(0.05, 1.0);
    for attempt in 0..GENERATOR_ATTEMPTS {
        let p = (start + (1.0 - start) * (attempt / 20) as f64 / 19.0).min(1.0);
        let g = Graph::random_gnp(n, p, rng);
        if g.min_degree() >= min_degree && vertex_connectivity_at_least(&g, 3) {
            return Some(g);
        }
    }
    None
}

pub fn certificate_digest(h: &HalinCertificate) -> String {
    let text = emit_certificate(&CertificateDocument::Sghg(h.normalized()));
    Sha256::digest(text.as_bytes()).iter().fold(String::new(), |mut s, b| {
        write!(s, "{b:02x}").unwrap();
        s
    })
}

fn run_trial<S: Scalar>(params: &ThresholdParams<S>, min_degree: usize, index: usize) -> Result<(TrialRecord, u64)> {
    let started = Instant::now();
    let seed_hash = trial_seed(params.seed, index);
    let injected = index < params.injected.len();
    let host = if injected {
        Some(params.injected[index].clone())
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed_hash);
        random_three_connected(params.n, min_degree, &mut rng)
    };
    let mut record =
        TrialRecord { index, seed_hash, outcome: TrialOutcome::Skipped, injected, graph6: None, digest: None, audit_ok: None };
    if let Some(g) = host {
        record.graph6 = Some(String::from_utf8(emit_graph6(&g)).expect("graph6 is ASCII"));
        let report = find_sghg(&g, &params.budget)?;
        record.outcome = match report.outcome {
            Outcome::Found(h) => {
                if !is_generalized_halin(&g, &h) {
                    return Err(Error::Falsification(format!("trial {index}: certificate failed verification")));
                }
                record.digest = Some(certificate_digest(&h));
                record.audit_ok = Some(audit_generalized_halin(&h).holds(g.n()));
                TrialOutcome::SghgFound
            }
            Outcome::None => TrialOutcome::None,
            Outcome::Unknown => TrialOutcome::Unknown,
        };
    }
    Ok((record, started.elapsed().as_millis() as u64))
}

/// Runs the trials in parallel; the report depends only on the parameters.
pub fn threshold_experiment<S: Scalar>(params: &ThresholdParams<S>) -> Result<ExperimentReport> {
    if params.injected.iter().any(|g| g.n() != params.n) {
        return crate::error::precondition("injected hosts must have the experiment's vertex count");
    }
    let fraction = params.delta_fraction;
    if fraction < S::zero() || fraction > S::one() {
        return crate::error::precondition("degree fraction must lie in [0, 1]");
    }
    let min_degree = (fraction * <S as Scalar>::from_usize(params.n)).ceil_to_i64().max(0) as usize;
    let results: Vec<(TrialRecord, u64)> =
        (0..params.trials).into_par_iter().map(|i| run_trial(params, min_degree, i)).collect::<Result<_>>()?;
    let (records, runtime_ms): (Vec<TrialRecord>, Vec<u64>) = results.into_iter().unzip();
    let tally = |o: TrialOutcome| records.iter().filter(|r| r.outcome == o).count();
    let (found, none, unknown, skipped) =
        (tally(TrialOutcome::SghgFound), tally(TrialOutcome::None), tally(TrialOutcome::Unknown), tally(TrialOutcome::Skipped));
    let ran = params.trials - skipped;
    Ok(ExperimentReport {
        n: params.n,
        delta_fraction: fraction.to_f64().unwrap_or(f64::NAN),
        min_degree,
        trials: params.trials,
        seed: params.seed,
        found_rate: if ran == 0 { 0.0 } else { found as f64 / ran as f64 },
        records,
        found,
        none,
        unknown,
        skipped,
        runtime_ms,
    })
}

/// One row per trial: index, seed hash, outcome, runtime in milliseconds,
/// certificate digest.
pub fn report_csv(report: &ExperimentReport) -> String {
    let mut out = String::from("index,seed_hash,outcome,runtime_ms,certificate_digest\n");
    for (i, r) in report.records.iter().enumerate() {
        let runtime = report.runtime_ms.get(i).copied().unwrap_or(0);
        writeln!(out, "{},{},{},{},{}", r.index, r.seed_hash, r.outcome.label(), runtime, r.digest.as_deref().unwrap_or(""))
            .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sharpness_examples() {
        let (g, s) = sharpness_instance(3).unwrap();
        assert_eq!((s.a, s.b, s.n, s.predicted_delta), (3, 4, 7, 3));
        assert_eq!(g.min_degree(), 3);
        let (_, s) = sharpness_instance(4).unwrap();
        assert_eq!((s.b, s.n, s.predicted_delta), (5, 9, 4));
        let (_, s) = sharpness_instance(5).unwrap();
        assert_eq!((s.b, s.n, s.predicted_delta), (7, 12, 5));
        assert!(sharpness_instance(1).is_err());
    }

    #[test]
    fn sharpness_metadata_over_range() {
        for a in 2..=100 {
            let (_, s) = sharpness_instance(a).unwrap();
            assert!(s.metadata_holds(), "a = {a}");
        }
    }

    #[test]
    fn small_sharpness_confirmations() {
        let budget = SearchBudget::unlimited(SearchMode::ExhaustiveCount);
        for a in 2..=3 {
            let r = confirm_sharpness(a, &budget).unwrap();
            assert!(r.confirmed(), "a = {a}");
        }
    }

    fn params(n: usize, fraction: f64, trials: usize, seed: u64) -> ThresholdParams<f64> {
        ThresholdParams {
            n,
            delta_fraction: fraction,
            trials,
            seed,
            budget: SearchBudget::nodes(200_000, SearchMode::First),
            injected: Vec::new(),
        }
    }

    #[test]
    fn empty_experiment() {
        let r = threshold_experiment(&params(10, 0.5, 0, 1)).unwrap();
        assert_eq!((r.records.len(), r.found, r.found_rate), (0, 0, 0.0));
        assert_eq!(report_csv(&r).lines().count(), 1);
    }

    #[test]
    fn injected_sharpness_trial() {
        let mut p = params(7, 0.4, 1, 3);
        p.injected.push(Graph::complete_bipartite(3, 4));
        p.budget = SearchBudget::unlimited(SearchMode::First);
        let r = threshold_experiment(&p).unwrap();
        assert_eq!(r.records[0].outcome, TrialOutcome::None);
        assert!(r.records[0].injected);
    }

    #[test]
    fn experiments_are_reproducible() {
        let a = threshold_experiment(&params(10, 0.6, 6, 42)).unwrap();
        let b = threshold_experiment(&params(10, 0.6, 6, 42)).unwrap();
        let doc = |r: &ExperimentReport| emit_certificate(&CertificateDocument::ExperimentReport(r.clone()));
        assert_eq!(doc(&a), doc(&b));
        for r in &a.records {
            assert_eq!(r.digest.is_some(), r.outcome == TrialOutcome::SghgFound);
            assert_ne!(r.outcome, TrialOutcome::Skipped);
        }
    }

    #[test]
    fn generator_respects_requests() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let g = random_three_connected(12, 8, &mut rng).unwrap();
        assert!(g.min_degree() >= 8 && vertex_connectivity_at_least(&g, 3));
        assert!(random_three_connected(3, 2, &mut rng).is_none());
        assert!(random_three_connected(8, 8, &mut rng).is_none());
    }
}
