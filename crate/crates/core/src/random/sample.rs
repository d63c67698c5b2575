use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::prufer::{prufer_decode, random_prufer};
use crate::graph::Tree;

/// Master seed for reproducible sampling.
///
/// Trial `i` draws from its own ChaCha stream keyed by `(seed, i)`, so a
/// trial's tree does not depend on how many other trials run or in which
/// order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Seed(pub u64);

impl Seed {
    /// Generator for trial `trial`.
    pub fn trial_rng(self, trial: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.0);
        rng.set_stream(trial);
        rng
    }
}

/// A uniform labeled tree on `n >= 1` vertices drawn from `rng`.
pub fn sample_labeled_tree_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Tree {
    assert!(n >= 1, "a tree needs at least one vertex");
    if n == 1 {
        return Tree::from_edges(1, &[]).expect("single vertex");
    }
    prufer_decode(&random_prufer(n, rng), n).expect("random entries are in range")
}

/// A uniform labeled tree on `n` vertices, reproducible from `seed`.
///
/// ```
/// use arbor::random::{sample_labeled_tree, Seed};
///
/// let a = sample_labeled_tree(50, Seed(7));
/// assert_eq!(a, sample_labeled_tree(50, Seed(7)));
/// assert_eq!(a.edge_count(), 49);
/// ```
pub fn sample_labeled_tree(n: usize, seed: Seed) -> Tree {
    sample_labeled_tree_with(n, &mut seed.trial_rng(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_independent_of_order() {
        let s = Seed(11);
        let a: Vec<u32> = (0..4).map(|t| s.trial_rng(t).gen()).collect();
        let b: Vec<u32> = (0..4).rev().map(|t| s.trial_rng(t).gen()).collect();
        assert_eq!(a, b.into_iter().rev().collect::<Vec<_>>());
        assert_ne!(a[0], a[1]);
    }

    #[test]
    fn two_vertices() {
        assert_eq!(sample_labeled_tree(2, Seed(3)), Tree::path(2));
    }
}
