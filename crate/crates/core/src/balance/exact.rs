//! Exact balance by dynamic programming over (cardinality, sum) states.
//!
//! Equal values are grouped and split into binary chunks (1, 2, 4, ...
//! copies), so the forward pass costs `O(G * (n/2) * S / 64)` word operations
//! with `G` the number of chunks and `S` the relevant sum range. The witness
//! is recovered by divide and conquer over the chunk list, which keeps
//! memory at a single `(n/2) x S` bit table per recursion level.

use super::Partition;

#[derive(Debug, Clone, Copy)]
struct Chunk {
    value: u32,
    count: usize,
    sum: u64,
}

/// Reachability table: bit `s` of row `c` is set when some sub-multiset of
/// `c` elements sums to `s`.
struct Table {
    words: usize,
    rows: Vec<Vec<u64>>,
    max_sum: u64,
}

impl Table {
    fn new(max_count: usize, max_sum: u64) -> Self {
        let words = (max_sum as usize + 64) / 64;
        let mut rows = vec![vec![0u64; words]; max_count + 1];
        rows[0][0] = 1;
        Table { words, rows, max_sum }
    }

    fn get(&self, c: usize, s: u64) -> bool {
        c < self.rows.len() && s <= self.max_sum && (self.rows[c][(s / 64) as usize] >> (s % 64)) & 1 == 1
    }

    /// 0/1 knapsack step for one chunk.
    fn add(&mut self, chunk: Chunk) {
        if chunk.sum > self.max_sum || chunk.count >= self.rows.len() {
            return;
        }
        let word_shift = (chunk.sum / 64) as usize;
        let bit_shift = (chunk.sum % 64) as u32;
        for c in (chunk.count..self.rows.len()).rev() {
            let (lo, hi) = self.rows.split_at_mut(c);
            let src = &lo[c - chunk.count];
            let dst = &mut hi[0];
            for w in (word_shift..self.words).rev() {
                let i = w - word_shift;
                let mut v = src[i] << bit_shift;
                if bit_shift != 0 && i > 0 {
                    v |= src[i - 1] >> (64 - bit_shift);
                }
                dst[w] |= v;
            }
        }
        // Clear bits past max_sum so they never leak into lookups.
        let tail = (self.max_sum % 64) as u32;
        if tail != 63 {
            let mask = (1u64 << (tail + 1)) - 1;
            for row in &mut self.rows {
                row[self.words - 1] &= mask;
            }
        }
    }
}

fn reach(chunks: &[Chunk], max_count: usize, max_sum: u64) -> Table {
    let mut t = Table::new(max_count, max_sum);
    for &ch in chunks {
        t.add(ch);
    }
    t
}

/// Marks which chunks form a sub-multiset with exactly `count` elements
/// summing to `sum`. The target must be reachable.
fn select(chunks: &[Chunk], count: usize, sum: u64, chosen: &mut [bool]) {
    match chunks.len() {
        0 => debug_assert!(count == 0 && sum == 0),
        1 => {
            let take = count == chunks[0].count && sum == chunks[0].sum;
            debug_assert!(take || (count == 0 && sum == 0));
            chosen[0] = take;
        }
        len => {
            let mid = len / 2;
            let (left, right) = chunks.split_at(mid);
            let lt = reach(left, count, sum);
            let rt = reach(right, count, sum);
            let (lc, ls) = (0..=count)
                .flat_map(|c| (0..=sum).map(move |s| (c, s)))
                .find(|&(c, s)| lt.get(c, s) && rt.get(count - c, sum - s))
                .expect("target reachable by construction");
            let (cl, cr) = chosen.split_at_mut(mid);
            select(left, lc, ls, cl);
            select(right, count - lc, sum - ls, cr);
        }
    }
}

/// Exact minimum of `|sum(I) - sum(J)|` over near-equicardinal splits,
/// with a witness attaining it. `values` must be nonempty.
pub(super) fn exact_balance(values: &[u32]) -> (u64, Partition) {
    let n = values.len();
    let total: u64 = values.iter().map(|&v| v as u64).sum();
    let max = values.iter().copied().max().unwrap_or(0) as u64;
    let big = n.div_ceil(2);
    // Any optimal side sum is at most (total + F) / 2 and F <= max.
    let max_sum = (total + max) / 2;

    let mut distinct: Vec<u32> = values.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let mut chunks = Vec::new();
    for &x in &distinct {
        let mut left = values.iter().filter(|&&v| v == x).count();
        let mut size = 1;
        while left > 0 {
            let take = size.min(left);
            chunks.push(Chunk {
                value: x,
                count: take,
                sum: take as u64 * x as u64,
            });
            left -= take;
            size *= 2;
        }
    }

    let table = reach(&chunks, big, max_sum);
    let mut best: Option<(u64, usize, u64)> = None;
    for c in [big, n / 2] {
        for s in 0..=max_sum {
            if table.get(c, s) {
                let diff = (2 * s).abs_diff(total);
                if best.is_none_or(|(d, _, _)| diff < d) {
                    best = Some((diff, c, s));
                }
            }
        }
    }
    let (f, count, sum) = best.expect("some split is always reachable");

    let mut chosen = vec![false; chunks.len()];
    select(&chunks, count, sum, &mut chosen);
    let mut take_per_value = std::collections::BTreeMap::new();
    for (ch, &on) in chunks.iter().zip(&chosen) {
        if on {
            *take_per_value.entry(ch.value).or_insert(0usize) += ch.count;
        }
    }
    let mut in_i = vec![false; n];
    for (pos, &v) in values.iter().enumerate() {
        if let Some(left) = take_per_value.get_mut(&v) {
            if *left > 0 {
                *left -= 1;
                in_i[pos] = true;
            }
        }
    }
    (f, Partition::from_membership(values, &in_i))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exhaustive minimum over all near-equicardinal subsets.
    fn oracle(values: &[u32]) -> u64 {
        let n = values.len();
        let total: u64 = values.iter().map(|&v| v as u64).sum();
        (0u32..1 << n)
            .filter(|m| (2 * m.count_ones() as i64 - n as i64).abs() <= 1)
            .map(|m| {
                let s: u64 = (0..n).filter(|i| m >> i & 1 == 1).map(|i| values[i] as u64).sum();
                (2 * s).abs_diff(total)
            })
            .min()
            .unwrap()
    }

    #[test]
    fn matches_enumeration_on_small_inputs() {
        let cases: &[&[u32]] = &[
            &[1, 3, 12, 2, 1, 1, 4, 3],
            &[5, 5],
            &[1, 2, 3, 4, 5, 6],
            &[7],
            &[0, 0, 9],
            &[1, 1, 1, 1, 1, 1, 1, 100],
            &[64, 63, 1, 130, 2, 66, 65],
        ];
        for &c in cases {
            let (f, w) = exact_balance(c);
            assert_eq!(f, oracle(c), "{c:?}");
            assert_eq!(w.diff(), f);
            assert!(w.cardinality_diff() <= 1);
        }
    }

    #[test]
    fn table_handles_word_boundaries() {
        let values = [63u32, 64, 65, 127, 128, 1, 1, 2];
        let (f, w) = exact_balance(&values);
        assert_eq!(f, oracle(&values));
        assert_eq!(w.diff(), f);
    }
}
