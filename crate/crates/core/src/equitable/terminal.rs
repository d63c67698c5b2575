//! Exact finish for the two-hub configuration.
//!
//! Reached when every leaf hangs off `u`, `v`, `p` or `q` and neither `p`
//! nor `q` has spare leaves. The tree is then a small skeleton `S` (all
//! vertices except the leaves at `u` and `v`) with two leaf bundles.
//!
//! Runs of three degree-2 skeleton vertices `a - b - c` between `s` and `t`
//! are first contracted to an edge `s - t`: any coloring of the contracted
//! tree extends by `c(a) = c(t)`, `c(c) = c(s)`, `c(b)` = the third color,
//! which adds one vertex to each class. The remaining skeleton is solved by a
//! dynamic program over `(#color 0, #color 1)` counts per subtree, and the
//! leaf bundles absorb whatever imbalance is left.

use super::work::Work;

/// Contracted skeletons are tiny by construction; anything bigger means the
/// configuration is not the one this module expects.
const MAX_SKELETON: usize = 300;

struct Skeleton {
    /// Local index -> vertex id.
    ids: Vec<usize>,
    adj: Vec<Vec<usize>>,
    /// Contracted runs `(s, run, t)` in vertex ids, `run` ordered from `s`.
    runs: Vec<(usize, Vec<usize>, usize)>,
}

fn build_skeleton(w: &Work, in_s: &[bool], root: usize, protected: &[usize]) -> Skeleton {
    let s_nbrs = |x: usize| w.nbrs(x).filter(|&y| in_s[y]);
    let contractible = |x: usize| in_s[x] && !protected.contains(&x) && s_nbrs(x).count() == 2;
    let n = in_s.len();
    let mut removed = vec![false; n];
    let mut seen = vec![false; n];
    let mut extra_edges = Vec::new();
    let mut runs = Vec::new();
    for x in w.vertices() {
        if seen[x] || !contractible(x) {
            continue;
        }
        // Extend the chain through contractible vertices on both sides.
        let ends: Vec<usize> = s_nbrs(x).collect();
        let mut sides = [Vec::new(), Vec::new()];
        let mut stops = [0; 2];
        for (side, &first) in ends.iter().enumerate() {
            let (mut prev, mut cur) = (x, first);
            while contractible(cur) {
                sides[side].push(cur);
                let next = s_nbrs(cur).find(|&y| y != prev).expect("two skeleton neighbors");
                prev = cur;
                cur = next;
            }
            stops[side] = cur;
        }
        let mut chain: Vec<usize> = sides[0].iter().rev().copied().collect();
        chain.push(x);
        chain.extend(&sides[1]);
        for &y in &chain {
            seen[y] = true;
        }
        let (s, t) = (stops[0], stops[1]);
        let take = chain.len() / 3 * 3;
        if take == 0 {
            continue;
        }
        let target = if take < chain.len() { chain[take] } else { t };
        for &y in &chain[..take] {
            removed[y] = true;
        }
        extra_edges.push((s, target));
        runs.push((s, chain[..take].to_vec(), target));
    }

    let mut ids = vec![root];
    ids.extend(w.vertices().filter(|&x| x != root && in_s[x] && !removed[x]));
    let mut local = vec![usize::MAX; n];
    for (i, &x) in ids.iter().enumerate() {
        local[x] = i;
    }
    let mut adj = vec![Vec::new(); ids.len()];
    for (i, &x) in ids.iter().enumerate() {
        for y in s_nbrs(x) {
            if !removed[y] {
                adj[i].push(local[y]);
            }
        }
    }
    for (s, t) in extra_edges {
        adj[local[s]].push(local[t]);
        adj[local[t]].push(local[s]);
    }
    Skeleton { ids, adj, runs }
}

/// Square grid of reachable `(s0, s1)` counts.
#[derive(Clone)]
struct Grid {
    dim: usize,
    cells: Vec<bool>,
}

impl Grid {
    fn new(dim: usize) -> Self {
        Grid {
            dim,
            cells: vec![false; dim * dim],
        }
    }

    fn get(&self, a: usize, b: usize) -> bool {
        a < self.dim && b < self.dim && self.cells[a * self.dim + b]
    }

    fn set(&mut self, a: usize, b: usize) {
        self.cells[a * self.dim + b] = true;
    }

    fn union(&mut self, other: &Grid) {
        for (x, &y) in self.cells.iter_mut().zip(&other.cells) {
            *x |= y;
        }
    }

    /// Minkowski sum, with `self` supported on sizes `<= ls` and `other` on
    /// sizes `<= rs`.
    fn plus(&self, ls: usize, other: &Grid, rs: usize) -> Grid {
        let mut out = Grid::new(self.dim);
        for a in 0..=ls {
            for b in 0..=ls - a {
                if !self.get(a, b) {
                    continue;
                }
                for c in 0..=rs {
                    for d in 0..=rs - c {
                        if other.get(c, d) {
                            out.set(a + c, b + d);
                        }
                    }
                }
            }
        }
        out
    }
}

struct Dp {
    allowed: Vec<u8>,
    parent: Vec<usize>,
    children: Vec<Vec<usize>>,
    size: Vec<usize>,
    /// `prefix[x][c][i]`: counts over `x` (colored `c`) and its first `i`
    /// children. Empty when `c` is not allowed at `x`.
    prefix: Vec<[Vec<Grid>; 3]>,
}

impl Dp {
    fn run(sk: &Skeleton, allowed: Vec<u8>) -> Self {
        let m = sk.ids.len();
        let dim = m + 1;
        let mut parent = vec![usize::MAX; m];
        let mut order = vec![0];
        parent[0] = 0;
        let mut i = 0;
        while i < order.len() {
            let x = order[i];
            for &y in &sk.adj[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    order.push(y);
                }
            }
            i += 1;
        }
        let mut children = vec![Vec::new(); m];
        for &x in &order[1..] {
            children[parent[x]].push(x);
        }
        let mut dp = Dp {
            allowed,
            parent,
            children,
            size: vec![1; m],
            prefix: (0..m).map(|_| [Vec::new(), Vec::new(), Vec::new()]).collect(),
        };
        for &x in order.iter().rev() {
            for &y in &dp.children[x] {
                dp.size[x] += dp.size[y];
            }
            for c in 0..3 {
                if dp.allowed[x] >> c & 1 == 0 {
                    continue;
                }
                let mut g = Grid::new(dim);
                g.set((c == 0) as usize, (c == 1) as usize);
                let mut acc_size = 1;
                let mut tables = vec![g];
                for &y in &dp.children[x] {
                    let mut other = Grid::new(dim);
                    for c2 in (0..3).filter(|&c2| c2 != c) {
                        if let Some(t) = dp.prefix[y][c2].last() {
                            other.union(t);
                        }
                    }
                    let next = tables.last().unwrap().plus(acc_size, &other, dp.size[y]);
                    acc_size += dp.size[y];
                    tables.push(next);
                }
                dp.prefix[x][c] = tables;
            }
        }
        debug_assert!(dp.parent[0] == 0);
        dp
    }

    fn assign(&self, x: usize, c: usize, mut s0: usize, mut s1: usize, out: &mut [u8]) {
        out[x] = c as u8;
        let tables = &self.prefix[x][c];
        for (i, &y) in self.children[x].iter().enumerate().rev() {
            let before = &tables[i];
            let mut found = None;
            'search: for c2 in (0..3).filter(|&c2| c2 != c) {
                let Some(t) = self.prefix[y][c2].last() else { continue };
                for a in 0..=s0.min(self.size[y]) {
                    for b in 0..=s1.min(self.size[y] - a) {
                        if t.get(a, b) && before.get(s0 - a, s1 - b) {
                            found = Some((c2, a, b));
                            break 'search;
                        }
                    }
                }
            }
            let (c2, a, b) = found.expect("table entries are witnessed");
            self.assign(y, c2, a, b, out);
            s0 -= a;
            s1 -= b;
        }
    }
}

/// Colors every alive vertex with `c(u) != c(v)`, `c(p) != c(q)`, properly
/// and equitably. Returns `Err` when the skeleton is unexpectedly large and
/// `Ok(false)` when no such coloring exists.
pub(super) fn solve(w: &mut Work, u: usize, v: usize, p: usize, q: usize) -> Result<bool, String> {
    let n = w.t.n();
    let hubs_ok = |x: usize| x != p && x != q;
    let bundle_u: Vec<usize> = w.leaves_at(u).filter(|&x| x != v && hubs_ok(x)).collect();
    let bundle_v: Vec<usize> = w.leaves_at(v).filter(|&x| x != u && hubs_ok(x)).collect();
    let mut in_s = vec![false; n + 1];
    for x in w.vertices() {
        in_s[x] = true;
    }
    for &x in bundle_u.iter().chain(&bundle_v) {
        in_s[x] = false;
    }
    let sk = build_skeleton(w, &in_s, u, &[u, v, p, q]);
    let m = sk.ids.len();
    if m > MAX_SKELETON {
        return Err(format!("two-hub skeleton has {m} vertices after contraction"));
    }
    let (a, b) = (bundle_u.len(), bundle_v.len());
    let total = m + a + b;
    let (iu, iv, ip, iq) = (pos_in(&sk, u), pos_in(&sk, v), pos_in(&sk, p), pos_in(&sk, q));
    for cp in 0..3 {
        for cq in (0..3).filter(|&cq| cq != cp) {
            let mut allowed = vec![0b111u8; m];
            allowed[iu] &= 1;
            allowed[iv] &= 2;
            allowed[ip] &= 1 << cp;
            allowed[iq] &= 1 << cq;
            if allowed.contains(&0) {
                continue;
            }
            let dp = Dp::run(&sk, allowed);
            let Some(root_table) = dp.prefix[0][0].last() else {
                continue;
            };
            let Some((s0, s1, x, y)) = pick_counts(root_table, m, a, b, total) else {
                continue;
            };
            let mut local = vec![0u8; m];
            dp.assign(0, 0, s0, s1, &mut local);
            for (i, &id) in sk.ids.iter().enumerate() {
                w.set_color(id, local[i] + 1);
            }
            for (s, run, t) in sk.runs.iter().rev() {
                let (cs, ct) = (w.color[*s], w.color[*t]);
                let third = 6 - cs - ct;
                for (i, &z) in run.iter().enumerate() {
                    w.set_color(z, [ct, third, cs][i % 3]);
                }
            }
            for (i, &z) in bundle_u.iter().enumerate() {
                w.set_color(z, if i < x { 2 } else { 3 });
            }
            for (i, &z) in bundle_v.iter().enumerate() {
                w.set_color(z, if i < y { 1 } else { 3 });
            }
            return Ok(true);
        }
    }
    Ok(false)
}

fn pos_in(sk: &Skeleton, x: usize) -> usize {
    sk.ids
        .iter()
        .position(|&y| y == x)
        .expect("pinned vertex is in the skeleton")
}

/// Skeleton counts `(s0, s1)` plus the number `x` of u-leaves taking color 1
/// and `y` of v-leaves taking color 0 that make all classes equitable.
fn pick_counts(t: &Grid, m: usize, a: usize, b: usize, total: usize) -> Option<(usize, usize, usize, usize)> {
    let (base, r) = (total / 3, total % 3);
    for s0 in 0..=m {
        for s1 in 0..=m - s0 {
            if !t.get(s0, s1) {
                continue;
            }
            for mask in 0u8..8 {
                if mask.count_ones() as usize != r {
                    continue;
                }
                let target = |c: usize| base + (mask >> c & 1) as usize;
                let (t0, t1) = (target(0), target(1));
                if t1 >= s1 && t1 - s1 <= a && t0 >= s0 && t0 - s0 <= b {
                    return Some((s0, s1, t1 - s1, t0 - s0));
                }
            }
        }
    }
    None
}
