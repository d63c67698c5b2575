use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Tree;

/// Decodes a Prüfer sequence of length `n - 2` into its labeled tree.
///
/// Repeatedly joins the smallest current leaf to the next entry; the last
/// edge joins the two survivors.
///
/// ```
/// let star = arbor::random::prufer_decode(&[1, 1], 4).unwrap();
/// assert_eq!(star.neighbors(1), &[2, 3, 4]);
/// ```
pub fn prufer_decode(code: &[usize], n: usize) -> Result<Tree> {
    if n < 2 || code.len() != n - 2 {
        return Err(Error::PreconditionViolated(format!(
            "a Prüfer sequence for n = {n} needs n - 2 entries and n >= 2, got {}",
            code.len()
        )));
    }
    if let Some(&entry) = code.iter().find(|&&a| a == 0 || a > n) {
        return Err(Error::BadEntry { entry, n });
    }
    let mut remaining = vec![0usize; n + 1];
    for &a in code {
        remaining[a] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (1..=n).filter(|&v| remaining[v] == 0).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &a in code {
        let Reverse(leaf) = leaves.pop().expect("a leaf always exists");
        edges.push((leaf, a));
        remaining[a] -= 1;
        if remaining[a] == 0 {
            leaves.push(Reverse(a));
        }
    }
    let Reverse(u) = leaves.pop().expect("two vertices remain");
    let Reverse(v) = leaves.pop().expect("two vertices remain");
    edges.push((u, v));
    Tree::from_edges(n, &edges)
}

/// Prüfer sequence of a tree (empty for `n <= 2`).
pub fn prufer_encode(t: &Tree) -> Vec<usize> {
    let n = t.n();
    if n <= 2 {
        return Vec::new();
    }
    let mut degree: Vec<usize> = (0..=n).map(|v| if v == 0 { 0 } else { t.degree(v) }).collect();
    let mut removed = vec![false; n + 1];
    let mut leaves: BinaryHeap<Reverse<usize>> = (1..=n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut code = Vec::with_capacity(n - 2);
    while code.len() < n - 2 {
        let Reverse(leaf) = leaves.pop().expect("a tree with 3+ vertices has a leaf");
        removed[leaf] = true;
        let parent = *t
            .neighbors(leaf)
            .iter()
            .find(|&&u| !removed[u])
            .expect("a leaf keeps one neighbor");
        code.push(parent);
        degree[parent] -= 1;
        if degree[parent] == 1 {
            leaves.push(Reverse(parent));
        }
    }
    code
}

/// `n - 2` independent uniform entries in `1..=n`.
pub fn random_prufer<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<usize> {
    (0..n.saturating_sub(2)).map(|_| rng.gen_range(1..=n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decode_examples() {
        assert_eq!(prufer_decode(&[], 2).unwrap().edges().collect::<Vec<_>>(), vec![(1, 2)]);
        assert_eq!(prufer_decode(&[1, 1], 4).unwrap(), Tree::star(4));
        assert_eq!(prufer_decode(&[2], 3).unwrap(), Tree::path(3));
        assert_eq!(prufer_decode(&[5, 1], 4), Err(Error::BadEntry { entry: 5, n: 4 }));
        assert!(prufer_decode(&[1], 4).is_err());
    }

    #[test]
    fn encode_examples() {
        assert_eq!(prufer_encode(&Tree::path(3)), vec![2]);
        assert_eq!(prufer_encode(&Tree::star(4)), vec![1, 1]);
        assert_eq!(prufer_encode(&Tree::path(2)), Vec::<usize>::new());
        assert_eq!(prufer_encode(&Tree::path(5)), vec![2, 3, 4]);
    }
}
