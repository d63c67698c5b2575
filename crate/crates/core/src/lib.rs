//! Balanced and equitable colorings of trees.
//!
//! The crate covers three related questions about a finite tree `T`:
//!
//! * whether `T` has a *balanced* 2-coloring (vertex classes and
//!   monochromatic edge counts each differ by at most one), which reduces to
//!   a number-partitioning problem on the degree sequence ([`balance`]);
//! * whether `T` has an *equitable* proper `k`-coloring (class sizes differ
//!   by at most one), built constructively when the maximum degree is at most
//!   `n / k` ([`equitable`]);
//! * how often random labeled trees satisfy these, via Prüfer sampling and
//!   Monte Carlo drivers ([`random`], [`experiments`]).
//!
//! ```
//! use arbor::{balance_exact, Tree};
//!
//! let t = Tree::double_star(3, 4);
//! let b = balance_exact(&t.degrees()).unwrap();
//! assert!(b.is_balanced());
//! ```

pub mod balance;
pub mod coloring;
pub mod equitable;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod io;
pub mod random;

pub use balance::{
    balance_exact, brute_force_balanced, greedy_pair_partition, is_balanced_graph, k_balanced_brute,
    ones_twos_partition, verify_balanced, Balance, BalanceReport, DegreeSequence, Partition,
};
pub use coloring::KColoring;
pub use equitable::{
    brute_force_equitable, equitable3, equitable_k, lemma_w2_coloring, verify_strong_k, EquitableCertificate,
};
pub use error::{Error, NotATreeReason, Result};
pub use graph::{complete_forest_to_tree, Graph, InducedSubgraph, Tree, VertexClass};
