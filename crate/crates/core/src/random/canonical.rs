use std::collections::HashSet;

use crate::graph::Tree;

/// Isomorphism-invariant encoding of a tree.
///
/// Each vertex is encoded as `(` + sorted child encodings + `)` with the tree
/// rooted at its center; with two centers the smaller encoding wins. Two
/// trees are isomorphic exactly when their forms are equal.
pub fn canonical_form(t: &Tree) -> String {
    centers(t)
        .into_iter()
        .map(|c| rooted_form(t, c))
        .min()
        .expect("a tree has a center")
}

/// One representative per isomorphism class of trees on `n` vertices,
/// obtained by hanging a leaf on every vertex of the `n - 1` classes.
///
/// Meant for small exhaustive sweeps; the class count grows roughly like
/// `2.96^n`.
pub fn unlabeled_trees(n: usize) -> Vec<Tree> {
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![Tree::from_edges(1, &[]).expect("single vertex")];
    for m in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in t.vertices() {
                let mut edges: Vec<_> = t.edges().collect();
                edges.push((v, m));
                let grown = Tree::from_edges(m, &edges).expect("adding a leaf keeps a tree");
                if seen.insert(canonical_form(&grown)) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level
}

fn centers(t: &Tree) -> Vec<usize> {
    let n = t.n();
    if n <= 2 {
        return t.vertices().collect();
    }
    let mut degree: Vec<usize> = (0..=n).map(|v| if v == 0 { 0 } else { t.degree(v) }).collect();
    let mut layer: Vec<usize> = t.vertices().filter(|&v| degree[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for &u in t.neighbors(leaf) {
                if degree[u] > 1 {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_form(t: &Tree, root: usize) -> String {
    // BFS order, then children before parents.
    let mut order = vec![root];
    let mut parent = vec![0; t.n() + 1];
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for &u in t.neighbors(v) {
            if u != parent[v] {
                parent[u] = v;
                order.push(u);
            }
        }
        i += 1;
    }
    let mut forms: Vec<Vec<String>> = vec![Vec::new(); t.n() + 1];
    let mut root_form = String::new();
    for &v in order.iter().rev() {
        let mut kids = std::mem::take(&mut forms[v]);
        kids.sort_unstable();
        let form = format!("({})", kids.concat());
        if v == root {
            root_form = form;
        } else {
            forms[parent[v]].push(form);
        }
    }
    root_form
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| unlabeled_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn relabeling_preserves_form() {
        let a = Tree::from_edges(5, &[(1, 2), (2, 3), (3, 4), (3, 5)]).unwrap();
        let b = Tree::from_edges(5, &[(5, 4), (4, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_ne!(canonical_form(&a), canonical_form(&Tree::path(5)));
    }
}
