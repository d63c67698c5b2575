use arbor::balance::{balance_exact, greedy_pair_partition, ones_twos_partition, verify_balanced, DegreeSequence};
use arbor::random::{prufer_decode, prufer_encode, stats_from_prufer, tree_stats};
use arbor::{is_balanced_graph, Graph, KColoring, Tree};
use proptest::prelude::*;

fn prufer_code() -> impl Strategy<Value = (Vec<usize>, usize)> {
    (2usize..60).prop_flat_map(|n| (prop::collection::vec(1..=n, n - 2), Just(n)))
}

/// Minimum over all splits with `|I| - |J|` in {-1, 0, 1}, by enumeration.
fn balance_oracle(values: &[u32]) -> u64 {
    let n = values.len();
    let total: u64 = values.iter().map(|&v| v as u64).sum();
    let mut best = u64::MAX;
    for mask in 0u32..1 << n {
        let ones = mask.count_ones() as usize;
        if ones.abs_diff(n - ones) > 1 {
            continue;
        }
        let s: u64 = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| values[i] as u64).sum();
        best = best.min(s.abs_diff(total - s));
    }
    best
}

proptest! {
    #[test]
    fn decode_then_encode_is_identity((code, n) in prufer_code()) {
        let t = prufer_decode(&code, n).unwrap();
        prop_assert_eq!(prufer_encode(&t), code);
    }

    #[test]
    fn degree_is_multiplicity_plus_one((code, n) in prufer_code()) {
        let t = prufer_decode(&code, n).unwrap();
        for v in 1..=n {
            prop_assert_eq!(t.degree(v), code.iter().filter(|&&a| a == v).count() + 1);
        }
    }

    #[test]
    fn stats_agree_and_sum_to_twice_edges((code, n) in prufer_code()) {
        let t = prufer_decode(&code, n).unwrap();
        let s = tree_stats(&t);
        prop_assert_eq!(s, stats_from_prufer(&code, n));
        let weighted: usize = t.vertices().map(|v| t.degree(v)).sum();
        prop_assert_eq!(weighted, 2 * n - 2);
        prop_assert!(s.x1 >= 2);
    }

    #[test]
    fn exact_balance_matches_enumeration(values in prop::collection::vec(1u32..30, 1..13)) {
        let b = balance_exact(&values).unwrap();
        prop_assert!(b.witness.is_valid_for(&values));
        prop_assert!(b.witness.cardinality_diff() <= 1);
        prop_assert_eq!(b.witness.diff(), b.value);
        prop_assert_eq!(b.value, balance_oracle(&values));
    }

    #[test]
    fn balance_has_the_parity_of_the_total(values in prop::collection::vec(1u32..1000, 1..80)) {
        let b = balance_exact(&values).unwrap();
        let total: u64 = values.iter().map(|&v| v as u64).sum();
        prop_assert_eq!(b.value % 2, total % 2);
        prop_assert!(b.value <= greedy_pair_partition(&values).unwrap().diff());
    }

    #[test]
    fn greedy_is_within_the_maximum(values in prop::collection::vec(1u32..=50, 1..=40)) {
        let p = greedy_pair_partition(&values).unwrap();
        prop_assert!(p.is_valid_for(&values));
        prop_assert!(p.diff() <= *values.iter().max().unwrap() as u64);
        prop_assert!(p.cardinality_diff() <= 1);
    }

    #[test]
    fn reserved_ones_and_twos_give_balance(
        rest in prop::collection::vec(1u32..=12, 0..30),
        extra_ones in 0usize..5,
        extra_twos in 0usize..5,
    ) {
        let m = rest.iter().copied().max().unwrap_or(2).max(2) as usize;
        let mut values = rest.clone();
        values.extend(std::iter::repeat_n(1, m + extra_ones));
        values.extend(std::iter::repeat_n(2, m + extra_twos));
        let seq = DegreeSequence::new(values.clone()).unwrap();
        let p = ones_twos_partition(&seq).unwrap();
        prop_assert!(p.is_valid_for(&values));
        prop_assert!(p.diff() <= 2);
        prop_assert!(p.cardinality_diff() <= 1);
    }

    /// Edges between the two colors equal `(sum_I - 2 e_I + sum_J - 2 e_J) / 2`
    /// in any graph, so the balanced verdict certifies itself.
    #[test]
    fn balanced_certificates_check_out((code, n) in prufer_code()) {
        let t = prufer_decode(&code, n).unwrap();
        if let Some(c) = is_balanced_graph(&t) {
            let r = verify_balanced(&t, &c).unwrap();
            prop_assert!(r.balanced);
            prop_assert_eq!(r.e1 + r.e2 + r.cross, n - 1);
            let deg = |color: usize| c.class(color).iter().map(|&v| t.degree(v)).sum::<usize>();
            prop_assert_eq!(deg(1), 2 * r.e1 + r.cross);
            prop_assert_eq!(deg(2), 2 * r.e2 + r.cross);
        } else {
            prop_assert!(balance_exact(&t.degrees()).unwrap().value > 2);
        }
    }
}

fn graph_and_coloring() -> impl Strategy<Value = (Graph, Vec<usize>)> {
    (1usize..14).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            prop::collection::vec(any::<bool>(), pairs),
            prop::collection::vec(1usize..=2, n),
        )
            .prop_map(move |(keep, colors)| {
                let all = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
                let edges: Vec<_> = all.zip(&keep).filter(|(_, &k)| k).map(|(e, _)| e).collect();
                (Graph::from_edges(n, &edges).unwrap(), colors)
            })
    })
}

proptest! {
    /// `|e1 - e2|` is half the gap between the two classes' degree sums.
    #[test]
    fn cross_edge_identity((g, colors) in graph_and_coloring()) {
        let c = KColoring::new(2, colors).unwrap();
        let r = verify_balanced(&g, &c).unwrap();
        let deg = |color: usize| c.class(color).iter().map(|&v| g.degree(v)).sum::<usize>();
        prop_assert_eq!(2 * r.e1.abs_diff(r.e2), deg(1).abs_diff(deg(2)));
    }
}

#[test]
fn tiny_trees_have_expected_stats() {
    let s = tree_stats(&Tree::path(2));
    assert_eq!((s.max_degree, s.x1, s.x2), (1, 2, 0));
    let g = Graph::complete(4);
    assert_eq!(g.degrees(), vec![3, 3, 3, 3]);
}
