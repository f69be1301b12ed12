//! Standard graph families used throughout tests, examples and generators.

use super::{Graph, Vertex};
use rand::Rng;

impl Graph {
    pub fn complete(n: usize) -> Self {
        Self::from_fn(n, |_, _| true)
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::from_fn(n, |u, v| v == u + 1)
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`; for `n < 3` this is a path.
    pub fn cycle(n: usize) -> Self {
        Self::from_fn(n, |u, v| v == u + 1 || (n >= 3 && u == 0 && v == n - 1))
    }

    /// Star `K_{1,k}` centered at 0.
    pub fn star(k: usize) -> Self {
        Self::from_fn(k + 1, |u, _| u == 0)
    }

    /// Wheel with hub 0 and rim `1 - 2 - ... - k - 1`.
    pub fn wheel(k: usize) -> Self {
        Self::from_fn(k + 1, |u, v| u == 0 || v == u + 1 || (u == 1 && v == k))
    }

    /// `K_{a,b}` with side `A = 0..a` and side `B = a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Self::from_fn(a + b, |u, v| (u < a) != (v < a))
    }

    /// Tripartite host on `A = 0..a`, `B = a..a+b`, `F = a+b..a+b+f` in which
    /// `A-B` and `B-F` are complete and `A-F` is empty.
    pub fn half_complete_tripartite(a: usize, b: usize, f: usize) -> Self {
        let side = |v: Vertex| {
            if v < a {
                0
            } else if v < a + b {
                1
            } else {
                2
            }
        };
        Self::from_fn(a + b + f, |u, v| {
            let (su, sv) = (side(u), side(v));
            su != sv && (su == 1 || sv == 1)
        })
    }

    /// The Petersen graph: outer 5-cycle `0..5`, spokes `i - i+5`, inner
    /// pentagram on `5..10`.
    pub fn petersen() -> Self {
        Self::from_fn(10, |u, v| {
            (u < 5 && v < 5 && (v == u + 1 || (u == 0 && v == 4)))
                || (u < 5 && v == u + 5)
                || (u >= 5 && v >= 5 && ((v - 5) == (u - 5 + 2) % 5 || (u - 5) == (v - 5 + 2) % 5))
        })
    }

    /// Erdős–Rényi `G(n, p)`; pairs are sampled in lexicographic order.
    pub fn random_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Self {
        Self::from_fn(n, |_, _| rng.gen_bool(p.clamp(0.0, 1.0)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        assert_eq!(Graph::complete(5).edge_count(), 10);
        assert_eq!(Graph::cycle(6).edge_count(), 6);
        assert_eq!(Graph::path(4).edge_count(), 3);
        assert_eq!(Graph::star(3).edge_count(), 3);
        assert_eq!(Graph::wheel(5).edge_count(), 10);
        assert_eq!(Graph::complete_bipartite(3, 4).edge_count(), 12);
        assert_eq!(Graph::half_complete_tripartite(2, 3, 4).edge_count(), 6 + 12);
        let p = Graph::petersen();
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
    }

    #[test]
    fn handshake_on_random_graphs() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for n in 0..20 {
            let g = Graph::random_gnp(n, 0.4, &mut rng);
            let sum: usize = (0..n).map(|v| g.degree(v)).sum();
            assert_eq!(sum, 2 * g.edge_count());
        }
    }
}
