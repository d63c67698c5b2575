use serde::{Deserialize, Serialize};

use crate::graph::Tree;

/// Degree observables of one tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TreeStats {
    pub max_degree: usize,
    /// Number of leaves.
    pub x1: usize,
    /// Number of degree-2 vertices.
    pub x2: usize,
}

pub fn tree_stats(t: &Tree) -> TreeStats {
    stats_of(t.vertices().map(|v| t.degree(v)))
}

/// Same tallies as [`tree_stats`], read off a Prüfer sequence without
/// building the tree: `deg(v)` is one more than the multiplicity of `v`.
pub fn stats_from_prufer(code: &[usize], n: usize) -> TreeStats {
    if n == 1 {
        return TreeStats {
            max_degree: 0,
            x1: 0,
            x2: 0,
        };
    }
    let mut degree = vec![1usize; n + 1];
    for &a in code {
        degree[a] += 1;
    }
    stats_of(degree[1..].iter().copied())
}

fn stats_of(degrees: impl Iterator<Item = usize>) -> TreeStats {
    let mut s = TreeStats {
        max_degree: 0,
        x1: 0,
        x2: 0,
    };
    for d in degrees {
        s.max_degree = s.max_degree.max(d);
        s.x1 += (d == 1) as usize;
        s.x2 += (d == 2) as usize;
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{prufer_decode, prufer_encode};

    #[test]
    fn examples() {
        let star = tree_stats(&Tree::star(6));
        assert_eq!((star.max_degree, star.x1, star.x2), (5, 5, 0));
        let path = tree_stats(&Tree::path(6));
        assert_eq!((path.max_degree, path.x1, path.x2), (2, 2, 4));
        let t = prufer_decode(&[1, 1], 4).unwrap();
        assert_eq!(
            tree_stats(&t),
            TreeStats {
                max_degree: 3,
                x1: 3,
                x2: 0
            }
        );
    }

    #[test]
    fn prufer_shortcut_agrees() {
        let t = Tree::double_star(3, 4);
        assert_eq!(stats_from_prufer(&prufer_encode(&t), t.n()), tree_stats(&t));
    }
}
