use super::*;
use crate::random::unlabeled_trees;

fn pre_leaves(t: &Tree) -> Vec<usize> {
    t.pre_leaves()
}

#[test]
fn verify_examples() {
    let p9 = Tree::path(9);
    let c = KColoring::new(3, vec![1, 2, 3, 1, 2, 3, 1, 2, 3]).unwrap();
    let cert = verify_strong_k(&p9, &c).unwrap();
    assert!(cert.valid);
    assert_eq!(cert.coloring.class_sizes(), &[3, 3, 3]);

    let p3 = Tree::path(3);
    let bad = KColoring::new(3, vec![1, 1, 2]).unwrap();
    let cert = verify_strong_k(&p3, &bad).unwrap();
    assert!(!cert.valid);
    assert_eq!(cert.mono_edges, vec![1, 0, 0]);

    let two = KColoring::new(2, vec![1, 2, 1]).unwrap();
    assert!(verify_strong_k(&p3, &two).unwrap().valid);

    let short = KColoring::new(3, vec![1, 2]).unwrap();
    assert_eq!(verify_strong_k(&p3, &short), Err(Error::PartialColoring(3)));
}

#[test]
fn equitable3_examples() {
    let c = equitable3(&Tree::path(9), None).unwrap();
    assert_eq!(c.class_sizes(), &[3, 3, 3]);
    assert!(matches!(
        equitable3(&Tree::star(7), None),
        Err(Error::DegreeTooHigh { .. })
    ));
    assert_eq!(
        equitable3(&Tree::path(9), Some((2, 2))),
        Err(Error::NoTwoPreLeaves(2, 2))
    );
    assert_eq!(
        equitable3(&Tree::path(9), Some((1, 8))),
        Err(Error::NoTwoPreLeaves(1, 8))
    );
    let c = equitable3(&Tree::path(9), Some((2, 8))).unwrap();
    assert_ne!(c.color(2), c.color(8));
    assert_eq!(
        equitable3(&Tree::from_edges(1, &[]).unwrap(), None).unwrap().colors(),
        &[1]
    );
}

#[test]
fn two_hub_examples() {
    let t = Tree::double_star(3, 3);
    let c = lemma_w2_coloring(&t, 1, 2, 1, 2).unwrap();
    assert!(verify_strong_k(&t, &c).unwrap().valid);
    assert_ne!(c.color(1), c.color(2));

    let h = Tree::double_star(2, 2);
    let c = lemma_w2_coloring(&h, 1, 2, 1, 2).unwrap();
    assert_eq!(c.class_sizes(), &[2, 2, 2]);

    assert!(matches!(
        lemma_w2_coloring(&h, 1, 1, 1, 2),
        Err(Error::PreconditionViolated(_))
    ));
}

#[test]
fn equitable_k_examples() {
    let c = equitable_k(&Tree::path(10), 5).unwrap();
    assert_eq!(c.class_sizes(), &[2, 2, 2, 2, 2]);
    let t = Tree::from_edges(9, &[(1, 2), (2, 3), (2, 4), (4, 5), (5, 6), (5, 7), (7, 8), (8, 9)]).unwrap();
    assert_eq!(equitable_k(&t, 3).unwrap(), equitable3(&t, None).unwrap());
    assert!(matches!(
        equitable_k(&Tree::path(5), 2),
        Err(Error::PreconditionViolated(_))
    ));
}

#[test]
fn brute_force_examples() {
    assert!(brute_force_equitable(&Tree::path(3), 3).unwrap().is_some());
    assert!(brute_force_equitable(&Tree::star(7), 3).unwrap().is_none());
    assert!(brute_force_equitable(&Tree::from_edges(1, &[]).unwrap(), 4)
        .unwrap()
        .is_some());
}

#[test]
fn all_small_trees_with_every_pair() {
    for n in 9..=11 {
        for t in unlabeled_trees(n) {
            if 3 * t.max_degree() > n {
                continue;
            }
            let c = equitable3(&t, None).unwrap_or_else(|e| panic!("{e} on {:?}", t.edges().collect::<Vec<_>>()));
            assert!(verify_strong_k(&t, &c).unwrap().valid);
            let pre = pre_leaves(&t);
            for (i, &p) in pre.iter().enumerate() {
                for &q in &pre[i + 1..] {
                    let c = equitable3(&t, Some((p, q)))
                        .unwrap_or_else(|e| panic!("{e} on {:?} with ({p}, {q})", t.edges().collect::<Vec<_>>()));
                    assert!(verify_strong_k(&t, &c).unwrap().valid);
                    assert_ne!(c.color(p), c.color(q));
                }
            }
        }
    }
}

#[test]
fn class_sizes_follow_division() {
    for k in 3..=6 {
        let n = 4 * k + 3;
        let t = Tree::path(n);
        let c = equitable_k(&t, k).unwrap();
        let (q, r) = (n / k, n % k);
        let mut sizes = c.class_sizes().to_vec();
        sizes.sort_unstable();
        let mut expected = vec![q; k - r];
        expected.extend(vec![q + 1; r]);
        assert_eq!(sizes, expected);
    }
}
