//! Deterministic builders: the dense-graph HIST, HISTs of complete bipartite
//! and half-complete tripartite hosts with prescribed leaf imbalance,
//! greedy matchings, and exact star packs.

mod bipartite;
mod dense;
mod matching;
mod tripartite;

pub use bipartite::{bipartite_hist, BipartiteHistPlan};
pub use dense::{absorb_pair, dense_hist, dense_hist_run, DenseHistParams, DenseHistRun};
pub use matching::{matching_lower_bound, star_pack};
pub use tripartite::{tripartite_hist, TripartiteHist, TripartiteHistPlan};

/// Block sizes summing to `total`: every block starts at `min`, then the
/// remainder is handed out one vertex at a time, left to right, skipping
/// blocks at their cap.
pub(crate) fn fill_blocks(total: usize, min: usize, caps: &[usize]) -> Option<Vec<usize>> {
    let mut sizes = vec![min; caps.len()];
    let mut rest = total.checked_sub(min * caps.len())?;
    if caps.iter().any(|&c| c < min) {
        return None;
    }
    while rest > 0 {
        let mut progress = false;
        for (size, &cap) in sizes.iter_mut().zip(caps) {
            if rest > 0 && *size < cap {
                *size += 1;
                rest -= 1;
                progress = true;
            }
        }
        if !progress {
            return None;
        }
    }
    Some(sizes)
}

/// Cuts `items` into consecutive blocks of the given sizes, where block `i`
/// and block `i+1` share one element when `overlap` is set.
pub(crate) fn cut<T: Copy>(items: &[T], sizes: &[usize], overlap: bool) -> Vec<Vec<T>> {
    let mut out = Vec::with_capacity(sizes.len());
    let mut start = 0;
    for &size in sizes {
        out.push(items[start..start + size].to_vec());
        start += size - overlap as usize;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_filling() {
        assert_eq!(fill_blocks(10, 3, &[5, 5, 5]), Some(vec![4, 3, 3]));
        assert_eq!(fill_blocks(12, 2, &[3, 6, 6]), Some(vec![3, 5, 4]));
        assert_eq!(fill_blocks(5, 3, &[5, 5]), None);
        assert_eq!(fill_blocks(11, 3, &[5, 5]), None);
        assert_eq!(fill_blocks(0, 2, &[]), Some(vec![]));
    }

    #[test]
    fn overlapping_cut() {
        let v: Vec<usize> = (0..7).collect();
        assert_eq!(cut(&v, &[3, 3, 3], true), vec![vec![0, 1, 2], vec![2, 3, 4], vec![4, 5, 6]]);
        assert_eq!(cut(&v, &[3, 4], false), vec![vec![0, 1, 2], vec![3, 4, 5, 6]]);
    }
}
