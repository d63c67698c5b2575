//! Mutable view of a tree that shrinks by leaf deletion and grows back.

use std::collections::BTreeSet;

use crate::graph::Tree;

pub(super) struct Work<'a> {
    pub t: &'a Tree,
    alive: Vec<bool>,
    deg: Vec<usize>,
    count: usize,
    leaves: BTreeSet<usize>,
    by_deg: Vec<BTreeSet<usize>>,
    /// Alive vertices of current degree at least 3.
    high: usize,
    /// 0 means uncolored.
    pub color: Vec<u8>,
    /// `class[c]` counts colored vertices (alive or not) with color `c`.
    pub class: [usize; 4],
}

impl<'a> Work<'a> {
    pub fn new(t: &'a Tree) -> Self {
        let n = t.n();
        let mut w = Work {
            t,
            alive: vec![true; n + 1],
            deg: vec![0; n + 1],
            count: n,
            leaves: BTreeSet::new(),
            by_deg: vec![BTreeSet::new(); n + 1],
            high: 0,
            color: vec![0; n + 1],
            class: [0; 4],
        };
        w.alive[0] = false;
        for v in 1..=n {
            w.deg[v] = t.degree(v);
            w.index(v);
        }
        w
    }

    fn index(&mut self, v: usize) {
        let d = self.deg[v];
        self.by_deg[d].insert(v);
        if d == 1 {
            self.leaves.insert(v);
        }
        if d >= 3 {
            self.high += 1;
        }
    }

    fn unindex(&mut self, v: usize) {
        let d = self.deg[v];
        self.by_deg[d].remove(&v);
        if d == 1 {
            self.leaves.remove(&v);
        }
        if d >= 3 {
            self.high -= 1;
        }
    }

    pub fn n(&self) -> usize {
        self.count
    }

    pub fn alive(&self, v: usize) -> bool {
        self.alive[v]
    }

    pub fn deg(&self, v: usize) -> usize {
        self.deg[v]
    }

    /// Alive vertices in increasing order.
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.alive.len()).filter(|&v| self.alive[v])
    }

    pub fn nbrs(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.t.neighbors(v).iter().copied().filter(|&u| self.alive[u])
    }

    /// True when every alive vertex has degree at most 2.
    pub fn is_string(&self) -> bool {
        self.high == 0
    }

    pub fn with_degree(&self, d: usize) -> impl Iterator<Item = usize> + '_ {
        self.by_deg.get(d).into_iter().flatten().copied()
    }

    pub fn leaves(&self) -> impl Iterator<Item = usize> + '_ {
        self.leaves.iter().copied()
    }

    /// Leaf neighbors of `v`, smallest first.
    pub fn leaves_at(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.nbrs(v).filter(|&u| self.deg[u] == 1)
    }

    /// The single alive neighbor of a leaf.
    pub fn parent(&self, leaf: usize) -> usize {
        self.nbrs(leaf).next().expect("a leaf has a neighbor")
    }

    pub fn is_pre_leaf(&self, v: usize) -> bool {
        self.alive[v] && self.deg[v] >= 2 && self.nbrs(v).filter(|&u| self.deg[u] >= 2).count() <= 1
    }

    /// Pre-leaf of degree 2.
    pub fn is_special(&self, v: usize) -> bool {
        self.deg[v] == 2 && self.is_pre_leaf(v)
    }

    /// Neighbor of degree at least 2 (the non-leaf side of a pre-leaf).
    pub fn inner_nbr(&self, v: usize) -> Option<usize> {
        self.nbrs(v).find(|&u| self.deg[u] >= 2)
    }

    /// Deletes `v`, which must be a leaf or the last vertex.
    pub fn remove(&mut self, v: usize) {
        debug_assert!(self.alive[v] && self.deg[v] <= 1);
        self.unindex(v);
        self.alive[v] = false;
        self.count -= 1;
        let nbrs: Vec<usize> = self.nbrs(v).collect();
        for u in nbrs {
            self.unindex(u);
            self.deg[u] -= 1;
            self.index(u);
        }
        self.deg[v] = 0;
    }

    /// Undoes [`Work::remove`]; restores must run in reverse removal order.
    pub fn restore(&mut self, v: usize) {
        debug_assert!(!self.alive[v]);
        let nbrs: Vec<usize> = self.nbrs(v).collect();
        for &u in &nbrs {
            self.unindex(u);
            self.deg[u] += 1;
            self.index(u);
        }
        self.alive[v] = true;
        self.count += 1;
        self.deg[v] = nbrs.len();
        self.index(v);
    }

    pub fn set_color(&mut self, v: usize, c: u8) {
        let old = self.color[v];
        if old != 0 {
            self.class[old as usize] -= 1;
        }
        if c != 0 {
            self.class[c as usize] += 1;
        }
        self.color[v] = c;
    }

    /// Class sizes among alive vertices.
    pub fn alive_classes(&self) -> [usize; 4] {
        let mut sizes = [0; 4];
        for v in self.vertices() {
            sizes[self.color[v] as usize] += 1;
        }
        sizes
    }

    /// True when the alive vertices are all colored, properly, with class
    /// sizes within one of each other.
    pub fn alive_equitable(&self) -> bool {
        let sizes = self.alive_classes();
        if sizes[0] != 0 {
            return false;
        }
        let (lo, hi) = (sizes[1..].iter().min().unwrap(), sizes[1..].iter().max().unwrap());
        hi - lo <= 1
            && self
                .vertices()
                .all(|v| self.nbrs(v).all(|u| self.color[u] != self.color[v]))
    }
}
