use crate::certify::{check_hist, TreeCertificate};
use crate::graph::{Graph, Vertex};
use crate::scalar::{int_at_least, int_at_most, Scalar};
use crate::{Error, Result};

/// Parameters of the dense HIST construction: the slack `alpha_prime` in the
/// degree condition `δ(H) ≥ (2/3 - α')n` and the root `v_R`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DenseHistParams<S> {
    pub alpha_prime: S,
    pub root: Vertex,
}

impl<S: Scalar> DenseHistParams<S> {
    pub fn new(alpha_prime: S, root: Vertex) -> Self {
        Self { alpha_prime, root }
    }

    /// `(2/3 - α')n`.
    pub fn degree_bound(&self, n: usize) -> S {
        (S::ratio(2, 3) - self.alpha_prime) * <S as Scalar>::from_usize(n)
    }

    /// `⌈(2/3 - α')n⌉`, the minimum degree the host must have.
    pub fn required_min_degree(&self, n: usize) -> usize {
        self.degree_bound(n).ceil_to_i64().max(0) as usize
    }

    /// `(1/6 + α'/2)n + 2`.
    pub fn internal_bound(&self, n: usize) -> S {
        (S::ratio(1, 6) + self.alpha_prime / S::ratio(2, 1)) * <S as Scalar>::from_usize(n) + S::ratio(2, 1)
    }

    /// `α' < 1/24` and `n(1/3 - 8α') > 6`: the regime in which every
    /// absorption step is guaranteed to succeed.
    pub fn in_guaranteed_regime(&self, n: usize) -> bool {
        self.alpha_prime < S::ratio(1, 24)
            && (S::ratio(1, 3) - S::ratio(8, 1) * self.alpha_prime) * <S as Scalar>::from_usize(n) > S::ratio(6, 1)
    }

    /// Hard preconditions: `α' > 0`, root in range, minimum degree met.
    pub fn check(&self, h: &Graph) -> Result<()> {
        if self.alpha_prime <= S::zero() {
            return crate::error::precondition("alpha' must be positive");
        }
        if self.root >= h.n() {
            return crate::error::precondition(format!("root {} out of range", self.root));
        }
        let need = self.required_min_degree(h.n());
        if h.min_degree() < need {
            return crate::error::precondition(format!(
                "minimum degree {} is below the required {need}",
                h.min_degree()
            ));
        }
        Ok(())
    }

    fn failure(&self, n: usize, what: String) -> Error {
        if self.in_guaranteed_regime(n) {
            Error::Falsification(what)
        } else {
            Error::Construction(what)
        }
    }
}

/// The construction with its intermediate trees `T^0 ⊂ T^1 ⊂ ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseHistRun {
    pub tree: TreeCertificate,
    /// Every intermediate tree, starting with the star at the root.
    pub steps: Vec<TreeCertificate>,
    /// Absorbed `(u, w, common neighbor)` triples in order.
    pub absorbed: Vec<(Vertex, Vertex, Vertex)>,
}

fn first_pair(h: &Graph, in_tree: &[bool]) -> Option<(Vertex, Vertex, Vertex)> {
    let outside: Vec<Vertex> = (0..h.n()).filter(|&v| !in_tree[v]).collect();
    for (i, &u) in outside.iter().enumerate() {
        for &w in &outside[i + 1..] {
            if let Some(&c) = h.neighbors(u).iter().find(|&&c| in_tree[c] && h.has_edge(w, c)) {
                return Some((u, w, c));
            }
        }
    }
    None
}

/// Two vertices outside `v1` with a common neighbor inside `v1`; the
/// lexicographically first triple `(u, w, c)` is returned.
pub fn absorb_pair<S: Scalar>(h: &Graph, v1: &[Vertex], params: &DenseHistParams<S>) -> Result<(Vertex, Vertex, Vertex)> {
    params.check(h)?;
    let n = h.n();
    let mut in_tree = vec![false; n];
    for &v in v1 {
        if v >= n || std::mem::replace(&mut in_tree[v], true) {
            return crate::error::precondition(format!("V1 entry {v} is out of range or repeated"));
        }
    }
    if !int_at_least(v1.len(), params.degree_bound(n) - S::one()) {
        return crate::error::precondition("|V1| is below (2/3 - alpha')n - 1");
    }
    if v1.len() % 2 != n % 2 {
        return crate::error::precondition("|V1| and n differ in parity");
    }
    if v1.len() == n {
        return crate::error::precondition("V0 is empty");
    }
    first_pair(h, &in_tree).ok_or_else(|| params.failure(n, "no two vertices of V0 share a neighbor in V1".into()))
}

pub fn dense_hist_run<S: Scalar>(h: &Graph, params: &DenseHistParams<S>) -> Result<DenseHistRun> {
    params.check(h)?;
    let n = h.n();
    let root = params.root;
    let mut star: Vec<Vertex> = h.neighbors(root).to_vec();
    if n % 2 != (star.len() + 1) % 2 {
        star.pop();
    }
    let mut in_tree = vec![false; n];
    in_tree[root] = true;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::with_capacity(n.saturating_sub(1));
    for &v in &star {
        in_tree[v] = true;
        edges.push((root, v));
    }
    let mut steps = vec![TreeCertificate::forest(n, edges.iter().copied())];
    let mut absorbed = Vec::new();
    while in_tree.iter().any(|&t| !t) {
        let (u, w, c) = first_pair(h, &in_tree).ok_or_else(|| {
            params.failure(n, format!("absorption stalled with {} vertices outside the tree", in_tree.iter().filter(|&&t| !t).count()))
        })?;
        in_tree[u] = true;
        in_tree[w] = true;
        edges.push((c, u));
        edges.push((c, w));
        absorbed.push((u, w, c));
        steps.push(TreeCertificate::forest(n, edges.iter().copied()));
    }
    let tree = TreeCertificate::spanning(n, edges);
    check_hist(h, &tree).map_err(|r| params.failure(n, format!("result is not a HIST: {r}")))?;
    let root_degree = tree.degrees()[root];
    if !int_at_least(root_degree, params.degree_bound(n) - S::one()) {
        return Err(Error::Falsification(format!("root degree {root_degree} below (2/3 - alpha')n - 1")));
    }
    let internal = tree.internal().len();
    if !int_at_most(internal, params.internal_bound(n)) {
        return Err(Error::Falsification(format!("{internal} internal vertices exceed (1/6 + alpha'/2)n + 2")));
    }
    Ok(DenseHistRun { tree, steps, absorbed })
}

/// A HIST with a high-degree root and few internal vertices.
pub fn dense_hist<S: Scalar>(h: &Graph, params: &DenseHistParams<S>) -> Result<TreeCertificate> {
    Ok(dense_hist_run(h, params)?.tree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::is_hist;
    use num_rational::Rational64;

    fn alpha() -> Rational64 {
        Rational64::new(1, 20)
    }

    #[test]
    fn complete_graphs_give_stars() {
        for n in 4..12 {
            let g = Graph::complete(n);
            for root in [0, n - 1] {
                let t = dense_hist(&g, &DenseHistParams::new(alpha(), root)).unwrap();
                assert!(is_hist(&g, &t));
                assert_eq!(t.degrees()[root], n - 1);
                assert!(t.internal().len() <= 2);
            }
        }
    }

    #[test]
    fn k7_minus_matching() {
        // delete {0-1, 2-3, 4-5}: minimum degree 5 = ceil((2/3 - 1/20) * 7)
        let g = Graph::from_fn(7, |u, v| !matches!((u, v), (0, 1) | (2, 3) | (4, 5)));
        assert_eq!(g.min_degree(), 5);
        let params = DenseHistParams::new(alpha(), 0);
        assert_eq!(params.required_min_degree(7), 5);
        let run = dense_hist_run(&g, &params).unwrap();
        assert!(is_hist(&g, &run.tree));
        // deg(0) + 1 = 6 and n = 7 differ in parity, so neighbor 6 is dropped
        assert_eq!(run.steps[0].edges, vec![(0, 2), (0, 3), (0, 4), (0, 5)]);
        assert_eq!(run.absorbed.len(), 1);
    }

    #[test]
    fn absorb_pair_examples() {
        let k6 = Graph::complete(6);
        let params = DenseHistParams::new(alpha(), 0);
        assert_eq!(absorb_pair(&k6, &[2, 3, 4, 5], &params).unwrap(), (0, 1, 2));
        let c6 = Graph::cycle(6);
        assert!(matches!(absorb_pair(&c6, &[0, 1, 2, 3], &params), Err(Error::Precondition(_))));
        assert!(matches!(absorb_pair(&k6, &[2, 3, 4], &params), Err(Error::Precondition(_))));
        assert!(matches!(absorb_pair(&k6, &[0, 1, 2, 3, 4, 5], &params), Err(Error::Precondition(_))));
    }

    #[test]
    fn precondition_checks() {
        let g = Graph::cycle(8);
        assert!(matches!(dense_hist(&g, &DenseHistParams::new(alpha(), 0)), Err(Error::Precondition(_))));
        let k5 = Graph::complete(5);
        assert!(matches!(dense_hist(&k5, &DenseHistParams::new(Rational64::from(0), 0)), Err(Error::Precondition(_))));
        assert!(matches!(dense_hist(&k5, &DenseHistParams::new(alpha(), 5)), Err(Error::Precondition(_))));
        assert!(dense_hist(&k5, &DenseHistParams::new(0.05f64, 2)).is_ok());
    }

    #[test]
    fn guaranteed_regime() {
        let p = DenseHistParams::new(Rational64::new(1, 100), 0);
        assert!(!p.in_guaranteed_regime(23));
        assert!(p.in_guaranteed_regime(24));
        assert!(!DenseHistParams::new(alpha(), 0).in_guaranteed_regime(10_000));
    }
}
