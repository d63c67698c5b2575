use super::prufer::prufer_decode;
use crate::error::{Error, Result};
use crate::graph::Tree;

/// Largest `n` accepted by [`enumerate_labeled_trees`] (`8^6 = 262144` trees).
pub const MAX_ENUMERATION_N: usize = 8;

/// Every labeled tree on `1..=n`, in lexicographic Prüfer order.
///
/// ```
/// assert_eq!(arbor::random::enumerate_labeled_trees(4).unwrap().count(), 16);
/// ```
pub fn enumerate_labeled_trees(n: usize) -> Result<LabeledTrees> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::TooLarge(format!(
            "enumeration supports n <= {MAX_ENUMERATION_N}, got {n}"
        )));
    }
    if n == 0 {
        return Err(Error::PreconditionViolated("a tree needs at least one vertex".into()));
    }
    Ok(LabeledTrees {
        n,
        next: Some(vec![1; n.saturating_sub(2)]),
    })
}

/// Iterator returned by [`enumerate_labeled_trees`].
#[derive(Debug, Clone)]
pub struct LabeledTrees {
    n: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for LabeledTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        let code = self.next.take()?;
        if self.n == 1 {
            return Some(Tree::from_edges(1, &[]).expect("single vertex"));
        }
        let tree = prufer_decode(&code, self.n).expect("odometer stays in range");
        let mut succ = code;
        // Odometer increment, last position fastest.
        let mut i = succ.len();
        while i > 0 {
            i -= 1;
            if succ[i] < self.n {
                succ[i] += 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = 1;
        }
        Some(tree)
    }
}
