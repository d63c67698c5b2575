use std::collections::HashMap;

use arbor::io::{format_tree, parse_tree};
use arbor::random::{
    canonical_form, enumerate_labeled_trees, prufer_encode, sample_labeled_tree_with, unlabeled_trees, Seed,
};
use arbor::{brute_force_balanced, Tree};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn enumeration_counts_follow_cayley() {
    for n in 2..=8 {
        let count = enumerate_labeled_trees(n).unwrap().count();
        assert_eq!(count, n.pow(n as u32 - 2), "n = {n}");
    }
    assert_eq!(enumerate_labeled_trees(1).unwrap().count(), 1);
}

#[test]
fn enumeration_has_no_duplicates() {
    let mut seen = std::collections::HashSet::new();
    for t in enumerate_labeled_trees(6).unwrap() {
        assert!(seen.insert(prufer_encode(&t)));
    }
}

#[test]
fn unlabeled_counts() {
    // Free trees on n vertices, n = 1..=12.
    let expected = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];
    for (i, &e) in expected.iter().enumerate() {
        assert_eq!(unlabeled_trees(i + 1).len(), e, "n = {}", i + 1);
    }
}

#[test]
fn canonical_form_ignores_labels() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let t = sample_labeled_tree_with(25, &mut rng);
        let mut perm: Vec<usize> = (1..=25).collect();
        perm.shuffle(&mut rng);
        let edges: Vec<_> = t.edges().map(|(u, v)| (perm[u - 1], perm[v - 1])).collect();
        let u = Tree::from_edges(25, &edges).unwrap();
        assert_eq!(canonical_form(&t), canonical_form(&u));
    }
    assert_ne!(canonical_form(&Tree::path(6)), canonical_form(&Tree::star(6)));
}

/// Pearson statistic over the 16 labeled trees on 4 vertices. With 15
/// degrees of freedom the 0.999 quantile is about 37.70.
#[test]
fn sampler_is_uniform_on_four_vertices() {
    let trials = 32_000u64;
    let mut counts: HashMap<Vec<usize>, u64> = HashMap::new();
    for i in 0..trials {
        let t = sample_labeled_tree_with(4, &mut Seed(11).trial_rng(i));
        *counts.entry(prufer_encode(&t)).or_insert(0) += 1;
    }
    assert_eq!(counts.len(), 16);
    let e = trials as f64 / 16.0;
    let chi2: f64 = counts.values().map(|&c| (c as f64 - e).powi(2) / e).sum();
    assert!(chi2 < 37.70, "chi-square {chi2}");
}

#[test]
fn trial_streams_do_not_depend_on_trial_count() {
    let a: Vec<_> = (0..10)
        .map(|i| sample_labeled_tree_with(30, &mut Seed(5).trial_rng(i)))
        .collect();
    let b = sample_labeled_tree_with(30, &mut Seed(5).trial_rng(7));
    assert_eq!(a[7], b);
    assert_ne!(a[0], a[1]);
}

#[test]
fn tree_files_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for n in 1..40 {
        let t = sample_labeled_tree_with(n, &mut rng);
        assert_eq!(parse_tree(&format_tree(&t)).unwrap(), t);
    }
    let t = parse_tree("P: 3 3 3  # star on five vertices\n").unwrap();
    assert_eq!(t.degree(3), 4);
    assert!(parse_tree("3\n1 2\n1 2\n").is_err());
    assert!(parse_tree("3\n1 2\n").is_err());
    assert!(parse_tree("3\n1 2\n2 3\n3 1\n").is_err());
    assert!(parse_tree("P: 9").is_err());
    assert!(parse_tree("").is_err());
}

#[test]
fn family_verdicts() {
    for n in 2..=10 {
        assert_eq!(brute_force_balanced(&Tree::star(n)).unwrap(), n <= 5, "star {n}");
    }
    for p in 1..=5 {
        for q in 1..=5 {
            let b = brute_force_balanced(&Tree::double_star(p, q)).unwrap();
            assert_eq!(b, p.abs_diff(q) <= 3, "S_{p},{q}");
        }
    }
}
