use crate::certify::{normalize_cycle, Edge, HalinCertificate, Star, StarPack, TreeCertificate};
use crate::extremal::ExperimentReport;
use crate::graph::Vertex;
use crate::reduction::ReductionTrace;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// A certificate or report in its interchange form.
#[derive(Clone, Debug, PartialEq)]
pub enum CertificateDocument {
    Hist(TreeCertificate),
    Sghg(HalinCertificate),
    Matching { n: usize, pack: StarPack },
    ReductionTrace(ReductionTrace),
    ExperimentReport(ExperimentReport),
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum Wire {
    Hist(HistBody),
    Sghg(SghgBody),
    Matching(MatchingBody),
    ReductionTrace {
        n: usize,
        #[serde(flatten)]
        trace: ReductionTrace,
    },
    ExperimentReport {
        #[serde(flatten)]
        report: ExperimentReport,
    },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HistBody {
    n: usize,
    #[serde(default = "yes")]
    spanning: bool,
    edges: Vec<Edge>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SghgBody {
    n: usize,
    edges: Vec<Edge>,
    leaf_cycle: Vec<Vertex>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatchingBody {
    n: usize,
    arity: usize,
    stars: Vec<Star>,
}

fn yes() -> bool {
    true
}

impl CertificateDocument {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Hist(_) => "hist",
            Self::Sghg(_) => "sghg",
            Self::Matching { .. } => "matching",
            Self::ReductionTrace(_) => "reduction-trace",
            Self::ExperimentReport(_) => "experiment-report",
        }
    }

    /// Vertex count of the graph the payload refers to.
    pub fn n(&self) -> usize {
        match self {
            Self::Hist(t) => t.host_n,
            Self::Sghg(h) => h.tree.host_n,
            Self::Matching { n, .. } => *n,
            Self::ReductionTrace(t) => t.total_n(),
            Self::ExperimentReport(r) => r.n,
        }
    }

    fn to_wire(&self) -> Wire {
        match self {
            Self::Hist(t) => Wire::Hist(HistBody {
                n: t.host_n,
                spanning: t.is_spanning,
                edges: TreeCertificate::forest(t.host_n, t.edges.iter().copied()).edges,
            }),
            Self::Sghg(h) => Wire::Sghg(SghgBody {
                n: h.tree.host_n,
                edges: TreeCertificate::forest(h.tree.host_n, h.tree.edges.iter().copied()).edges,
                leaf_cycle: normalize_cycle(&h.leaf_cycle),
            }),
            Self::Matching { n, pack } => {
                let mut stars = pack.stars.clone();
                for s in &mut stars {
                    s.tips.sort_unstable();
                }
                stars.sort_by_key(|s| s.center);
                Wire::Matching(MatchingBody { n: *n, arity: pack.arity, stars })
            }
            Self::ReductionTrace(t) => Wire::ReductionTrace { n: t.total_n(), trace: t.clone() },
            Self::ExperimentReport(r) => Wire::ExperimentReport { report: r.clone() },
        }
    }

    fn from_wire(w: Wire) -> Result<Self> {
        let doc = match w {
            Wire::Hist(HistBody { n, spanning, edges }) => {
                let t = if spanning { TreeCertificate::spanning(n, edges) } else { TreeCertificate::forest(n, edges) };
                Self::Hist(t)
            }
            Wire::Sghg(SghgBody { n, edges, leaf_cycle }) => {
                Self::Sghg(HalinCertificate::new(TreeCertificate::spanning(n, edges), leaf_cycle))
            }
            Wire::Matching(MatchingBody { n, arity, stars }) => Self::Matching { n, pack: StarPack { arity, stars } },
            Wire::ReductionTrace { n, trace } => {
                if n != trace.total_n() {
                    return Err(Error::Document(format!(
                        "declared n = {n} but the trace describes {} vertices",
                        trace.total_n()
                    )));
                }
                Self::ReductionTrace(trace)
            }
            Wire::ExperimentReport { report } => Self::ExperimentReport(report),
        };
        doc.validate()?;
        Ok(doc)
    }

    /// Checks that every referenced vertex id lies below the declared `n`.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        let ids: Vec<Vertex> = match self {
            Self::Hist(t) => t.edges.iter().flat_map(|&(u, v)| [u, v]).collect(),
            Self::Sghg(h) => h.tree.edges.iter().flat_map(|&(u, v)| [u, v]).chain(h.leaf_cycle.iter().copied()).collect(),
            Self::Matching { pack, .. } => {
                pack.stars.iter().flat_map(|s| std::iter::once(s.center).chain(s.tips.iter().copied())).collect()
            }
            Self::ReductionTrace(t) => return t.validate(),
            Self::ExperimentReport(_) => Vec::new(),
        };
        match ids.into_iter().find(|&v| v >= n) {
            Some(v) => Err(Error::Document(format!("vertex {v} out of range for n = {n}"))),
            None => Ok(()),
        }
    }
}

/// Deterministic serialization: one JSON object with sorted keys, sorted edge
/// lists and normalized leaf cycles, followed by a newline.
pub fn emit_certificate(doc: &CertificateDocument) -> String {
    let value = serde_json::to_value(doc.to_wire()).expect("documents serialize");
    let mut text = serde_json::to_string(&value).expect("values serialize");
    text.push('\n');
    text
}

pub fn parse_certificate(text: &str) -> Result<CertificateDocument> {
    let wire: Wire = serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
    CertificateDocument::from_wire(wire)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hist_document_for_k4_star() {
        let t = TreeCertificate::spanning(4, [(0, 3), (2, 0), (0, 1)]);
        let text = emit_certificate(&CertificateDocument::Hist(t.clone()));
        assert_eq!(text, "{\"edges\":[[0,1],[0,2],[0,3]],\"kind\":\"hist\",\"n\":4,\"spanning\":true}\n");
        assert_eq!(parse_certificate(&text).unwrap(), CertificateDocument::Hist(t));
    }

    #[test]
    fn sghg_document_is_normalized() {
        let h = HalinCertificate::new(TreeCertificate::spanning(4, [(0, 1), (0, 2), (0, 3)]), vec![3, 2, 1]);
        let text = emit_certificate(&CertificateDocument::Sghg(h));
        assert!(text.contains("\"leaf_cycle\":[1,2,3]"));
        let again = emit_certificate(&parse_certificate(&text).unwrap());
        assert_eq!(text, again);
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(parse_certificate("{\"kind\":\"sghg\",\"n\":4,\"edges\":[]}").is_err());
        assert!(parse_certificate("{\"kind\":\"tree\",\"n\":4,\"edges\":[]}").is_err());
        assert!(parse_certificate("{\"kind\":\"hist\",\"n\":2,\"edges\":[[0,5]]}").is_err());
        assert!(parse_certificate("{\"kind\":\"hist\",\"n\":2,\"edges\":[],\"extra\":1}").is_err());
        assert!(parse_certificate("not json").is_err());
    }

    #[test]
    fn matching_document_round_trip() {
        let pack = StarPack { arity: 2, stars: vec![Star { center: 4, tips: vec![1, 0] }, Star { center: 2, tips: vec![3, 5] }] };
        let doc = CertificateDocument::Matching { n: 6, pack };
        let text = emit_certificate(&doc);
        assert!(text.starts_with("{\"arity\":2,\"kind\":\"matching\",\"n\":6,\"stars\":[{\"center\":2,"));
        assert_eq!(emit_certificate(&parse_certificate(&text).unwrap()), text);
    }
}
