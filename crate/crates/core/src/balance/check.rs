use serde::{Deserialize, Serialize};

use crate::coloring::{spread, KColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default cap on `k^n` for the exhaustive searches (`3^15`).
pub const DEFAULT_SEARCH_LIMIT: u128 = 14_348_907;

/// Class and monochromatic-edge counts of a 2-coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BalanceReport {
    pub v1: usize,
    pub v2: usize,
    pub e1: usize,
    pub e2: usize,
    /// Edges whose endpoints get different colors.
    pub cross: usize,
    pub balanced: bool,
}

/// Counts the classes of a 2-coloring of `g`.
pub fn verify_balanced(g: &Graph, c: &KColoring) -> Result<BalanceReport> {
    if c.k() != 2 {
        return Err(Error::PreconditionViolated(format!(
            "expected a 2-coloring, got k = {}",
            c.k()
        )));
    }
    c.check_total(g)?;
    let mono = c.monochromatic_edges(g);
    let sizes = c.class_sizes();
    let (v1, v2, e1, e2) = (sizes[0], sizes[1], mono[0], mono[1]);
    Ok(BalanceReport {
        v1,
        v2,
        e1,
        e2,
        cross: g.edge_count() - e1 - e2,
        balanced: v1.abs_diff(v2) <= 1 && e1.abs_diff(e2) <= 1,
    })
}

/// Decides balance by trying every near-equal vertex split. `n <= 24`.
pub fn brute_force_balanced(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n > 24 {
        return Err(Error::TooLarge(format!("brute-force balance needs n <= 24, got {n}")));
    }
    let adj: Vec<u32> = (1..=n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << (u - 1)))
        .collect();
    let full: u32 = (1u32 << n) - 1;
    let inside = |mask: u32| -> u32 {
        let mut twice = 0;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            twice += (adj[v] & mask).count_ones();
            rest &= rest - 1;
        }
        twice / 2
    };
    Ok((0..=full).any(|mask| {
        let size = mask.count_ones() as usize;
        (size == n / 2 || size == n.div_ceil(2)) && inside(mask).abs_diff(inside(full & !mask)) <= 1
    }))
}

/// A strongly `k`-balanced coloring found by exhaustive search, if any.
///
/// Guarded by `k^n <= DEFAULT_SEARCH_LIMIT`.
pub fn k_balanced_brute(g: &Graph, k: usize) -> Result<Option<KColoring>> {
    k_balanced_brute_with_limit(g, k, DEFAULT_SEARCH_LIMIT)
}

/// [`k_balanced_brute`] with an explicit bound on `k^n`.
pub fn k_balanced_brute_with_limit(g: &Graph, k: usize, limit: u128) -> Result<Option<KColoring>> {
    if k == 0 {
        return Err(Error::PreconditionViolated("k must be at least 1".into()));
    }
    let space = (k as u128).checked_pow(g.n() as u32).unwrap_or(u128::MAX);
    if space > limit {
        return Err(Error::TooLarge(format!(
            "{k}^{} exceeds the search limit {limit}",
            g.n()
        )));
    }
    let mut search = Search {
        g,
        k,
        hi: g.n().div_ceil(k),
        lo: g.n() / k,
        colors: vec![0; g.n() + 1],
        sizes: vec![0; k + 1],
        mono: vec![0; k + 1],
    };
    Ok(search
        .run(1, 0)
        .then(|| KColoring::new(k, search.colors[1..].to_vec()).expect("search assigns colors in 1..=k")))
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    hi: usize,
    lo: usize,
    colors: Vec<usize>,
    sizes: Vec<usize>,
    mono: Vec<usize>,
}

impl Search<'_> {
    /// Colors vertices `v..=n`; `used` is the largest color so far, and new
    /// colors are opened in order to skip permuted duplicates.
    fn run(&mut self, v: usize, used: usize) -> bool {
        let n = self.g.n();
        let deficit: usize = self.sizes[1..].iter().map(|&s| self.lo.saturating_sub(s)).sum();
        if deficit > n + 1 - v {
            return false;
        }
        if v > n {
            return spread(&self.mono[1..]) <= 1;
        }
        for c in 1..=(used + 1).min(self.k) {
            if self.sizes[c] == self.hi {
                continue;
            }
            let same = self
                .g
                .neighbors(v)
                .iter()
                .filter(|&&u| u < v && self.colors[u] == c)
                .count();
            self.colors[v] = c;
            self.sizes[c] += 1;
            self.mono[c] += same;
            if self.run(v + 1, used.max(c)) {
                return true;
            }
            self.colors[v] = 0;
            self.sizes[c] -= 1;
            self.mono[c] -= same;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Tree;

    #[test]
    fn brute_force_agrees_on_small_families() {
        assert!(brute_force_balanced(&Graph::complete(4)).unwrap());
        assert!(!brute_force_balanced(&Graph::complete(5)).unwrap());
        assert!(!brute_force_balanced(&Tree::star(7)).unwrap());
        assert!(brute_force_balanced(&Tree::path(9)).unwrap());
        assert!(matches!(
            brute_force_balanced(&Graph::empty(25)),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn report_counts() {
        let g = Tree::path(4);
        let c = KColoring::new(2, vec![1, 1, 2, 2]).unwrap();
        let r = verify_balanced(&g, &c).unwrap();
        assert_eq!((r.v1, r.v2, r.e1, r.e2, r.cross), (2, 2, 1, 1, 1));
        assert!(r.balanced);
        let c3 = KColoring::new(3, vec![1, 2, 3, 1]).unwrap();
        assert!(verify_balanced(&g, &c3).is_err());
    }

    #[test]
    fn k_balanced_complete_graphs() {
        assert!(k_balanced_brute(&Graph::complete(5), 4).unwrap().is_some());
        assert!(k_balanced_brute(&Graph::complete(5), 2).unwrap().is_none());
        assert!(matches!(
            k_balanced_brute(&Graph::empty(16), 3),
            Err(Error::TooLarge(_))
        ));
    }
}
