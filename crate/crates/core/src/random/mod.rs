//! Uniform random labeled trees, exhaustive enumeration and per-tree
//! statistics.
//!
//! Labeled trees on `1..=n` are in bijection with Prüfer sequences of length
//! `n - 2` over `1..=n`, so there are `n^(n-2)` of them and drawing the
//! entries independently and uniformly samples a uniform tree.

mod canonical;
mod enumerate;
mod prufer;
mod sample;
mod stats;

pub use canonical::{canonical_form, unlabeled_trees};
pub use enumerate::{enumerate_labeled_trees, LabeledTrees, MAX_ENUMERATION_N};
pub use prufer::{prufer_decode, prufer_encode, random_prufer};
pub use sample::{sample_labeled_tree, sample_labeled_tree_with, Seed};
pub use stats::{stats_from_prufer, tree_stats, TreeStats};
