//! Equitable (strongly `k`-balanced) colorings of trees.
//!
//! A coloring is strongly `k`-balanced when it is proper and its class sizes
//! differ by at most one. Every tree with maximum degree at most `n / k`
//! admits one for `k >= 3`; [`equitable3`] and [`equitable_k`] build it.
//!
//! The 3-color construction shrinks the tree by deleting a few leaves (or a
//! leaf and its degree-2 neighbor) at a time while keeping the degree bound,
//! and colors the deleted vertices on the way back. Larger `k` peels off an
//! independent set of low-degree vertices as color `k`, reconnects the rest
//! into a tree without raising the maximum degree, and recurses on `k - 1`.
//!
//! ```
//! use arbor::{equitable::{equitable3, verify_strong_k}, Tree};
//!
//! let t = Tree::path(9);
//! let c = equitable3(&t, None).unwrap();
//! assert!(verify_strong_k(&t, &c).unwrap().valid);
//! assert_eq!(c.class_sizes(), &[3, 3, 3]);
//! ```

mod machine;
mod small;
mod terminal;
mod work;

use serde::{Deserialize, Serialize};

use crate::balance::DEFAULT_SEARCH_LIMIT;
use crate::coloring::{spread, KColoring};
use crate::error::{Error, Result};
use crate::graph::{complete_forest_to_tree, Graph, Tree};
use machine::Task;

/// Tallies of a coloring together with the steps that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquitableCertificate {
    pub coloring: KColoring,
    /// Per-color count of monochromatic edges.
    pub mono_edges: Vec<usize>,
    /// True when all `mono_edges` are zero and class sizes differ by at most one.
    pub valid: bool,
    /// Construction steps, outermost first. Empty for colorings checked
    /// without being built here.
    pub trace: Vec<String>,
}

/// A coloring produced by one of the constructions, with its step labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Traced {
    pub coloring: KColoring,
    pub trace: Vec<String>,
}

/// Checks that `c` is proper and equitable on `g`.
pub fn verify_strong_k(g: &Graph, c: &KColoring) -> Result<EquitableCertificate> {
    c.check_total(g)?;
    let mono_edges = c.monochromatic_edges(g);
    let valid = mono_edges.iter().all(|&e| e == 0) && spread(c.class_sizes()) <= 1;
    Ok(EquitableCertificate {
        coloring: c.clone(),
        mono_edges,
        valid,
        trace: Vec::new(),
    })
}

fn check_degree(t: &Tree, k: usize) -> Result<()> {
    let d = t.max_degree();
    if k * d > t.n() {
        return Err(Error::DegreeTooHigh {
            max_degree: d,
            n: t.n(),
            k,
        });
    }
    Ok(())
}

fn finish(t: &Tree, k: usize, colors: Vec<usize>, trace: Vec<String>) -> Result<Traced> {
    let coloring = KColoring::new(k, colors).map_err(|e| Error::Internal(format!("incomplete coloring: {e}")))?;
    if !verify_strong_k(t, &coloring)?.valid {
        return Err(Error::Internal("construction produced an invalid coloring".into()));
    }
    Ok(Traced { coloring, trace })
}

/// Strongly 3-balanced coloring of a tree with `3 * maxdeg <= n`.
///
/// With `pair = Some((p, q))`, `p` and `q` must be distinct pre-leaves and
/// receive different colors.
pub fn equitable3(t: &Tree, pair: Option<(usize, usize)>) -> Result<KColoring> {
    equitable3_traced(t, pair).map(|r| r.coloring)
}

/// [`equitable3`] with the construction trace.
pub fn equitable3_traced(t: &Tree, pair: Option<(usize, usize)>) -> Result<Traced> {
    if let Some((p, q)) = pair {
        let pre = |x: usize| t.contains(x) && t.classify(x).is_ok_and(|c| c.is_pre_leaf());
        if p == q || !pre(p) || !pre(q) {
            return Err(Error::NoTwoPreLeaves(p, q));
        }
    }
    check_degree(t, 3)?;
    let out = machine::run(t, Task::Plain { pair })?;
    finish(t, 3, out.colors, out.trace)
}

/// Strongly 3-balanced coloring with `c(u) != c(v)` and `c(p) != c(q)`, for
/// distinct `u`, `v` of degree at least `n / 3` and distinct pre-leaves `p`,
/// `q`. No bound on the other degrees is needed.
pub fn lemma_w2_coloring(t: &Tree, u: usize, v: usize, p: usize, q: usize) -> Result<KColoring> {
    lemma_w2_coloring_traced(t, u, v, p, q).map(|r| r.coloring)
}

/// [`lemma_w2_coloring`] with the construction trace.
pub fn lemma_w2_coloring_traced(t: &Tree, u: usize, v: usize, p: usize, q: usize) -> Result<Traced> {
    let n = t.n();
    for x in [u, v, p, q] {
        if !t.contains(x) {
            return Err(Error::BadVertex(x));
        }
    }
    if u == v {
        return Err(Error::PreconditionViolated("the two hubs must differ".into()));
    }
    if 3 * t.degree(u) < n || 3 * t.degree(v) < n {
        return Err(Error::PreconditionViolated(format!(
            "hubs {u} and {v} need degree at least n/3"
        )));
    }
    let pre = |x: usize| t.classify(x).is_ok_and(|c| c.is_pre_leaf());
    if p == q || !pre(p) || !pre(q) {
        return Err(Error::PreconditionViolated(format!(
            "{p} and {q} must be distinct pre-leaves"
        )));
    }
    let out = machine::run(t, Task::TwoHub { u, v, p, q })?;
    finish(t, 3, out.colors, out.trace)
}

/// Strongly `k`-balanced coloring of a tree with `k * maxdeg <= n`, `k >= 3`.
///
/// The output has `n mod k` classes of size `ceil(n/k)` and the rest of size
/// `floor(n/k)`.
pub fn equitable_k(t: &Tree, k: usize) -> Result<KColoring> {
    equitable_k_traced(t, k).map(|r| r.coloring)
}

/// [`equitable_k`] with the construction trace.
pub fn equitable_k_traced(t: &Tree, k: usize) -> Result<Traced> {
    if k < 3 {
        return Err(Error::PreconditionViolated(format!("k must be at least 3, got {k}")));
    }
    check_degree(t, k)?;
    if k == 3 {
        return equitable3_traced(t, None);
    }
    // Level j colors `trees[j]` with `k - j` colors; `peeled[j]` gets color
    // `k - j` and `maps[j]` sends vertices of `trees[j + 1]` to `trees[j]`.
    let mut trees = vec![t.clone()];
    let mut peeled = Vec::new();
    let mut maps = Vec::new();
    let mut trace = Vec::new();
    for colors in (4..=k).rev() {
        let cur = trees.last().unwrap();
        let m = cur.n() / colors;
        let set = low_degree_independent_set(cur, m)?;
        let sub = cur.induced_subgraph(&set)?;
        let next = complete_forest_to_tree(&sub.graph, cur.max_degree())?;
        trace.push(format!("peel-{colors}"));
        peeled.push(set);
        maps.push(sub.to_old);
        trees.push(next);
    }
    let base = equitable3_traced(trees.last().unwrap(), None)?;
    trace.extend(base.trace);
    let mut colors = base.coloring.colors().to_vec();
    for j in (0..peeled.len()).rev() {
        let n = trees[j].n();
        let mut up = vec![0; n];
        for (i, &c) in colors.iter().enumerate() {
            up[maps[j][i + 1] - 1] = c;
        }
        for &x in &peeled[j] {
            up[x - 1] = k - j;
        }
        colors = up;
    }
    finish(t, k, colors, trace)
}

/// `m` pairwise non-adjacent vertices of degree at most 2.
///
/// Greedy by increasing id first; if that falls short, the vertices of
/// degree at most 2 induce disjoint paths, and taking every other vertex of
/// each path from one end gives a maximum independent set.
fn low_degree_independent_set(t: &Tree, m: usize) -> Result<Vec<usize>> {
    let low = |x: usize| t.degree(x) <= 2;
    let mut taken = vec![false; t.n() + 1];
    let mut greedy = Vec::new();
    for x in t.vertices().filter(|&x| low(x)) {
        if greedy.len() == m {
            break;
        }
        if t.neighbors(x).iter().all(|&y| !taken[y]) {
            taken[x] = true;
            greedy.push(x);
        }
    }
    if greedy.len() == m {
        return Ok(greedy);
    }
    let mut seen = vec![false; t.n() + 1];
    let mut best = Vec::new();
    for x in t.vertices().filter(|&x| low(x)) {
        let low_nbrs = t.neighbors(x).iter().filter(|&&y| low(y)).count();
        if seen[x] || low_nbrs > 1 {
            continue;
        }
        // `x` ends a path of low vertices; walk it and keep alternate ones.
        let (mut prev, mut cur, mut i) = (0, x, 0);
        loop {
            seen[cur] = true;
            if i % 2 == 0 {
                best.push(cur);
            }
            match t.neighbors(cur).iter().copied().find(|&y| y != prev && low(y)) {
                Some(next) => {
                    prev = cur;
                    cur = next;
                    i += 1;
                }
                None => break,
            }
        }
    }
    if best.len() < m {
        return Err(Error::IndependentSetNotFound {
            needed: m,
            found: best.len(),
        });
    }
    best.sort_unstable();
    best.truncate(m);
    Ok(best)
}

/// An equitable proper `k`-coloring found by exhaustive search, if any.
///
/// Guarded by `k^n <= DEFAULT_SEARCH_LIMIT`.
pub fn brute_force_equitable(g: &Graph, k: usize) -> Result<Option<KColoring>> {
    brute_force_equitable_with_limit(g, k, DEFAULT_SEARCH_LIMIT)
}

/// [`brute_force_equitable`] with an explicit bound on `k^n`.
pub fn brute_force_equitable_with_limit(g: &Graph, k: usize, limit: u128) -> Result<Option<KColoring>> {
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
    let n = g.n();
    let mut s = Search {
        g,
        k,
        hi: n.div_ceil(k),
        lo: n / k,
        colors: vec![0; n + 1],
        sizes: vec![0; k + 1],
    };
    Ok(s.run(1, 0)
        .then(|| KColoring::new(k, s.colors[1..].to_vec()).expect("colors in range")))
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    hi: usize,
    lo: usize,
    colors: Vec<usize>,
    sizes: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, v: usize, used: usize) -> bool {
        let n = self.g.n();
        let deficit: usize = self.sizes[1..].iter().map(|&s| self.lo.saturating_sub(s)).sum();
        if deficit > n + 1 - v {
            return false;
        }
        if v > n {
            return true;
        }
        for c in 1..=(used + 1).min(self.k) {
            if self.sizes[c] == self.hi || self.g.neighbors(v).iter().any(|&u| u < v && self.colors[u] == c) {
                continue;
            }
            self.colors[v] = c;
            self.sizes[c] += 1;
            if self.run(v + 1, used.max(c)) {
                return true;
            }
            self.colors[v] = 0;
            self.sizes[c] -= 1;
        }
        false
    }
}

#[cfg(test)]
mod tests;
