//! Balanced 2-colorings and the balance of integer sequences.
//!
//! A graph is balanced when some 2-coloring has vertex classes and
//! monochromatic edge classes that each differ by at most one. Whether that
//! happens depends only on the degree sequence: for any 2-coloring with
//! classes `I`, `J`, `|e1 - e2| = |sum_I deg - sum_J deg| / 2`. So a graph is
//! balanced exactly when its degree sequence splits into two halves of
//! near-equal size whose sums differ by at most two.
//!
//! The *balance* `F(a)` of a sequence is the least achievable difference of
//! side sums over such splits. [`balance_exact`] computes it;
//! [`greedy_pair_partition`] and [`ones_twos_partition`] are the two
//! constructive bounds used to show that typical trees are balanced.

mod check;
mod exact;

use std::ops::Deref;

use serde::{Deserialize, Serialize};

pub use check::{
    brute_force_balanced, k_balanced_brute, k_balanced_brute_with_limit, verify_balanced, BalanceReport,
    DEFAULT_SEARCH_LIMIT,
};

use crate::coloring::KColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A nonempty sequence of positive integers with cached summary counts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeSequence {
    values: Vec<u32>,
    max: u32,
    total: u64,
    ones: usize,
    twos: usize,
}

impl DegreeSequence {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some(i) = values.iter().position(|&v| v == 0) {
            return Err(Error::ZeroEntry(i + 1));
        }
        Ok(DegreeSequence {
            max: *values.iter().max().unwrap(),
            total: values.iter().map(|&v| v as u64).sum(),
            ones: values.iter().filter(|&&v| v == 1).count(),
            twos: values.iter().filter(|&&v| v == 2).count(),
            values,
        })
    }

    /// Degree sequence of a graph without isolated vertices.
    pub fn of_graph(g: &Graph) -> Result<Self> {
        DegreeSequence::new(g.degrees())
    }

    pub fn max(&self) -> u32 {
        self.max
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// Number of entries equal to 1.
    pub fn ones(&self) -> usize {
        self.ones
    }

    /// Number of entries equal to 2.
    pub fn twos(&self) -> usize {
        self.twos
    }
}

impl Deref for DegreeSequence {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.values
    }
}

/// A split of sequence positions into two sides.
///
/// Positions are 0-based indices into the sequence, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    pub i: Vec<usize>,
    pub j: Vec<usize>,
    pub sum_i: u64,
    pub sum_j: u64,
}

impl Partition {
    fn from_membership(values: &[u32], in_i: &[bool]) -> Self {
        let mut p = Partition {
            i: Vec::new(),
            j: Vec::new(),
            sum_i: 0,
            sum_j: 0,
        };
        for (pos, (&v, &side)) in values.iter().zip(in_i).enumerate() {
            if side {
                p.i.push(pos);
                p.sum_i += v as u64;
            } else {
                p.j.push(pos);
                p.sum_j += v as u64;
            }
        }
        p
    }

    /// `|sum_I - sum_J|`.
    pub fn diff(&self) -> u64 {
        self.sum_i.abs_diff(self.sum_j)
    }

    /// `|card(I) - card(J)|`.
    pub fn cardinality_diff(&self) -> usize {
        self.i.len().abs_diff(self.j.len())
    }

    /// True when the sides cover `0..n` exactly once and the cached sums agree
    /// with `values`.
    pub fn is_valid_for(&self, values: &[u32]) -> bool {
        let mut seen = vec![false; values.len()];
        for &p in self.i.iter().chain(&self.j) {
            if p >= values.len() || seen[p] {
                return false;
            }
            seen[p] = true;
        }
        let sum = |side: &[usize]| side.iter().map(|&p| values[p] as u64).sum::<u64>();
        seen.iter().all(|&s| s) && sum(&self.i) == self.sum_i && sum(&self.j) == self.sum_j
    }
}

/// The balance of a sequence together with a split attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Balance {
    pub value: u64,
    pub witness: Partition,
}

impl Balance {
    /// A sequence is balanced when its balance is at most two.
    pub fn is_balanced(&self) -> bool {
        self.value <= 2
    }
}

/// Exact balance of a nonempty sequence of non-negative integers.
///
/// ```
/// let b = arbor::balance_exact(&[1, 3, 12, 2, 1, 1, 4, 3]).unwrap();
/// assert_eq!(b.value, 3);
/// assert_eq!(b.witness.diff(), 3);
/// ```
pub fn balance_exact(values: &[u32]) -> Result<Balance> {
    if values.is_empty() {
        return Err(Error::EmptySequence);
    }
    let (value, witness) = exact::exact_balance(values);
    Ok(Balance { value, witness })
}

/// Greedy pairing split whose side sums differ by at most `max(values)`.
///
/// Sort ascending (prepending a virtual 0 when the length is odd), then walk
/// the consecutive pairs from the top. The side with the larger running sum
/// takes the smaller element of each pair; on a tie `I` takes the larger.
pub fn greedy_pair_partition(values: &[u32]) -> Result<Partition> {
    if values.is_empty() {
        return Err(Error::EmptySequence);
    }
    let mut order: Vec<Option<usize>> = (0..values.len()).map(Some).collect();
    order.sort_by_key(|p| (p.map(|i| values[i]), *p));
    if order.len() % 2 == 1 {
        order.insert(0, None);
    }
    let value = |p: Option<usize>| p.map_or(0, |i| values[i] as u64);
    let mut in_i = vec![false; values.len()];
    let (mut sum_i, mut sum_j) = (0u64, 0u64);
    for pair in order.chunks(2).rev() {
        let (small, large) = (pair[0], pair[1]);
        let (to_i, to_j) = if sum_i > sum_j { (small, large) } else { (large, small) };
        sum_i += value(to_i);
        sum_j += value(to_j);
        if let Some(i) = to_i {
            in_i[i] = true;
        }
    }
    Ok(Partition::from_membership(values, &in_i))
}

/// Split with side sums differing by at most two, for sequences holding at
/// least `max` ones and at least `max` twos.
///
/// `max` ones and `max` twos are set aside; the rest is split greedily (so
/// its imbalance `D` is at most `max`); then the reserved block is dealt
/// `max` per side, the lighter side receiving `t = (D + max) / 2` twos, which
/// cancels `D` up to parity.
pub fn ones_twos_partition(seq: &DegreeSequence) -> Result<Partition> {
    let m = seq.max() as usize;
    if seq.ones() < m || seq.twos() < m {
        return Err(Error::HypothesisViolated(format!(
            "need at least {m} ones and {m} twos, found {} and {}",
            seq.ones(),
            seq.twos()
        )));
    }
    let ones: Vec<usize> = seq
        .iter()
        .enumerate()
        .filter(|(_, &v)| v == 1)
        .map(|(i, _)| i)
        .take(m)
        .collect();
    let twos: Vec<usize> = seq
        .iter()
        .enumerate()
        .filter(|(_, &v)| v == 2)
        .map(|(i, _)| i)
        .take(m)
        .collect();
    let mut reserved = vec![false; seq.len()];
    for &p in ones.iter().chain(&twos) {
        reserved[p] = true;
    }
    let rest: Vec<usize> = (0..seq.len()).filter(|&p| !reserved[p]).collect();

    let mut in_i = vec![false; seq.len()];
    let mut d: i64 = 0;
    if !rest.is_empty() {
        let values: Vec<u32> = rest.iter().map(|&p| seq[p]).collect();
        let part = greedy_pair_partition(&values)?;
        for &k in &part.i {
            in_i[rest[k]] = true;
        }
        d = part.sum_i as i64 - part.sum_j as i64;
    }
    let t = (d.unsigned_abs() as usize + m) / 2;
    let light_is_i = d < 0;
    // Lighter side: t twos and m - t ones. Heavier side: the rest of the block.
    for (k, &p) in twos.iter().enumerate() {
        in_i[p] = (k < t) == light_is_i;
    }
    for (k, &p) in ones.iter().enumerate() {
        in_i[p] = (k < m - t) == light_is_i;
    }
    Ok(Partition::from_membership(seq, &in_i))
}

/// A balanced 2-coloring of `g` when one exists.
///
/// The coloring puts the `I` side of an optimal degree split in color 1 and
/// the `J` side in color 2; any split with sum difference at most two works.
pub fn is_balanced_graph(g: &Graph) -> Option<KColoring> {
    if g.n() == 0 {
        return Some(KColoring::new(2, Vec::new()).unwrap());
    }
    let b = balance_exact(&g.degrees()).expect("graph has vertices");
    if !b.is_balanced() {
        return None;
    }
    let mut colors = vec![2; g.n()];
    for &p in &b.witness.i {
        colors[p] = 1;
    }
    Some(KColoring::new(2, colors).expect("colors are 1 or 2"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Tree;

    #[test]
    fn exact_examples() {
        let b = balance_exact(&[1, 3, 12, 2, 1, 1, 4, 3]).unwrap();
        assert_eq!(b.value, 3);
        assert!(b.witness.is_valid_for(&[1, 3, 12, 2, 1, 1, 4, 3]));
        assert_eq!(balance_exact(&[5, 5]).unwrap().value, 0);
        assert_eq!(balance_exact(&[1, 2, 3, 4, 5, 6]).unwrap().value, 1);
        assert_eq!(balance_exact(&[]), Err(Error::EmptySequence));
    }

    #[test]
    fn greedy_examples() {
        let p = greedy_pair_partition(&[1, 1, 2, 2]).unwrap();
        assert_eq!(p.diff(), 0);
        assert_eq!((p.sum_i, p.sum_j), (3, 3));

        let seq = [1, 3, 12, 2, 1, 1, 4, 3];
        let p = greedy_pair_partition(&seq).unwrap();
        assert_eq!((p.sum_i, p.sum_j), (17, 10));
        assert!(p.is_valid_for(&seq));

        let p = greedy_pair_partition(&[2, 2, 2]).unwrap();
        assert_eq!((p.sum_i, p.sum_j), (4, 2));
        assert_eq!(p.cardinality_diff(), 1);
    }

    #[test]
    fn ones_twos_examples() {
        let seq = DegreeSequence::new(vec![1, 1, 1, 2, 2, 2, 3, 3]).unwrap();
        let p = ones_twos_partition(&seq).unwrap();
        assert!(p.diff() <= 2 && p.cardinality_diff() <= 1);
        assert!(p.is_valid_for(&seq));
        assert!(balance_exact(&seq).unwrap().value <= 2);

        let seq = DegreeSequence::new(vec![1, 1, 2, 2]).unwrap();
        assert_eq!(ones_twos_partition(&seq).unwrap().diff(), 0);

        let seq = DegreeSequence::new(vec![1, 2, 3, 3]).unwrap();
        assert!(matches!(ones_twos_partition(&seq), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn sequence_validation() {
        assert_eq!(DegreeSequence::new(vec![]), Err(Error::EmptySequence));
        assert_eq!(DegreeSequence::new(vec![1, 0]), Err(Error::ZeroEntry(2)));
        let s = DegreeSequence::new(vec![1, 2, 2, 5, 1]).unwrap();
        assert_eq!((s.ones(), s.twos(), s.max(), s.total()), (2, 2, 5, 11));
    }

    #[test]
    fn closed_form_families() {
        assert!(is_balanced_graph(&Graph::complete(4)).is_some());
        assert!(is_balanced_graph(&Graph::complete(5)).is_none());
        assert!(is_balanced_graph(&Tree::star(5)).is_some());
        assert!(is_balanced_graph(&Tree::star(7)).is_none());
        assert!(is_balanced_graph(&Tree::double_star(2, 6)).is_none());
        assert!(is_balanced_graph(&Tree::double_star(2, 5)).is_some());
    }

    #[test]
    fn certificate_verifies() {
        let g = Tree::double_star(3, 5);
        let c = is_balanced_graph(&g).unwrap();
        assert!(verify_balanced(&g, &c).unwrap().balanced);
    }
}
