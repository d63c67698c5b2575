//! The reduction machine behind [`equitable3`](super::equitable3) and
//! [`lemma_w2_coloring`](super::lemma_w2_coloring).
//!
//! Each step deletes one to three vertices (always current leaves, in
//! order), records what the restored vertices must satisfy, and continues on
//! the smaller tree. Once a directly colorable shape is reached, the frames
//! are unwound: deleted vertices come back and receive colors.
//!
//! The tasks mirror the three inductive statements:
//!
//! * `Plain`: `3 * maxdeg <= n`, optionally with two pre-leaves that must
//!   get different colors;
//! * `Inner`: as `Plain` with `n = 3k` and a required pair; split on the
//!   set `W` of vertices of degree exactly `k` (cases A to F);
//! * `TwoHub`: hubs `u != v` of degree at least `n / 3` that must differ,
//!   plus a required pre-leaf pair.

use super::small::{color_path, exhaustive};
use super::terminal;
use super::work::Work;
use crate::error::{Error, Result};
use crate::graph::Tree;

#[derive(Debug, Clone, Copy)]
pub(super) enum Task {
    Plain { pair: Option<(usize, usize)> },
    Inner { p: usize, q: usize },
    TwoHub { u: usize, v: usize, p: usize, q: usize },
}

struct Frame {
    /// Deleted vertices in deletion order.
    removed: Vec<usize>,
    /// Pairs that must differ once the frame is restored.
    distinct: Vec<(usize, usize)>,
    /// Hubs, when a single restored leaf may be placed by recoloring a leaf
    /// in a hub branch.
    hubs: Option<(usize, usize)>,
}

enum Step {
    /// Delete the frame's vertices (if any) and continue with the task.
    Descend(Option<Frame>, Task),
    /// All alive vertices are colored.
    Done,
}

pub(super) struct Outcome {
    /// `colors[i]` is the color of vertex `i + 1`.
    pub colors: Vec<usize>,
    pub trace: Vec<String>,
}

pub(super) fn run(t: &Tree, task: Task) -> Result<Outcome> {
    let mut m = Machine {
        w: Work::new(t),
        frames: Vec::new(),
        trace: Vec::new(),
    };
    let mut task = task;
    while let Step::Descend(frame, next) = m.step(task)? {
        if let Some(frame) = frame {
            for &x in &frame.removed {
                if !(m.w.alive(x) && m.w.deg(x) <= 1) {
                    return Err(internal(format!("vertex {x} is not a leaf when deleted")));
                }
                m.w.remove(x);
            }
            m.frames.push(frame);
        }
        task = next;
    }
    while let Some(frame) = m.frames.pop() {
        for &x in frame.removed.iter().rev() {
            m.w.restore(x);
        }
        m.extend(&frame)?;
    }
    if !m.w.alive_equitable() {
        return Err(internal("final coloring is not equitable".into()));
    }
    let colors = (1..=t.n()).map(|v| m.w.color[v] as usize).collect();
    Ok(Outcome { colors, trace: m.trace })
}

fn internal(msg: String) -> Error {
    Error::Internal(msg)
}

struct Machine<'a> {
    w: Work<'a>,
    frames: Vec<Frame>,
    trace: Vec<String>,
}

impl Machine<'_> {
    fn label(&mut self, s: &str) {
        self.trace.push(s.to_string());
    }

    fn step(&mut self, task: Task) -> Result<Step> {
        match task {
            Task::Plain { pair } => self.plain(pair),
            Task::Inner { p, q } => self.inner(p, q),
            Task::TwoHub { u, v, p, q } => self.two_hub(u, v, p, q),
        }
    }

    fn finish_directly(&mut self, distinct: &[(usize, usize)]) -> Result<Step> {
        let ok = if self.w.n() == 1 {
            let v = self.w.vertices().next().expect("one vertex");
            self.w.set_color(v, 1);
            self.label("single");
            true
        } else if self.w.is_string() {
            self.label("string");
            color_path(&mut self.w, distinct)
        } else {
            self.label("exhaustive");
            exhaustive(&mut self.w, distinct)
        };
        if ok {
            Ok(Step::Done)
        } else {
            Err(internal(format!(
                "no direct coloring of a {}-vertex remainder",
                self.w.n()
            )))
        }
    }

    fn first_leaf(&self, mut ok: impl FnMut(usize, usize) -> bool) -> Option<usize> {
        self.w.leaves().find(|&l| ok(l, self.w.parent(l)))
    }

    fn plain(&mut self, pair: Option<(usize, usize)>) -> Result<Step> {
        let n = self.w.n();
        let distinct: Vec<_> = pair.into_iter().collect();
        if let Some((p, q)) = pair {
            if !(self.w.is_pre_leaf(p) && self.w.is_pre_leaf(q)) {
                return Err(internal(format!("{p} and {q} stopped being pre-leaves")));
            }
        }
        if n <= 9 || self.w.is_string() {
            return self.finish_directly(&distinct);
        }
        let constrained = |x: usize| pair.is_some_and(|(p, q)| x == p || x == q);
        match n % 3 {
            1 => {
                let w = &self.w;
                let leaf = self
                    .first_leaf(|_, s| !(constrained(s) && w.is_special(s)))
                    .ok_or_else(|| internal("no removable leaf".into()))?;
                self.label("one-leaf");
                Ok(Step::Descend(
                    Some(Frame {
                        removed: vec![leaf],
                        distinct,
                        hubs: None,
                    }),
                    Task::Plain { pair },
                ))
            }
            2 => {
                let w = &self.w;
                let candidates: Vec<(usize, usize)> = w
                    .leaves()
                    .map(|l| (l, w.parent(l)))
                    .filter(|&(_, s)| !(constrained(s) && w.is_special(s)))
                    .collect();
                let mut chosen = None;
                'outer: for (i, &(l1, s1)) in candidates.iter().enumerate() {
                    for &(l2, s2) in &candidates[i + 1..] {
                        let drains = s1 == s2 && constrained(s1) && w.deg(s1) < 4;
                        if !drains {
                            chosen = Some((l1, l2));
                            break 'outer;
                        }
                    }
                }
                if let Some((l1, l2)) = chosen {
                    self.label("two-leaves");
                    return Ok(Step::Descend(
                        Some(Frame {
                            removed: vec![l1, l2],
                            distinct,
                            hubs: None,
                        }),
                        Task::Plain { pair },
                    ));
                }
                let (p, q) = pair.ok_or_else(|| internal("fewer than two leaves".into()))?;
                let (s, other) = if self.w.is_special(p) {
                    (p, q)
                } else if self.w.is_special(q) {
                    (q, p)
                } else {
                    return Err(internal("no leaf pair and no special constrained vertex".into()));
                };
                let ls = self.w.leaves_at(s).next().expect("special vertex has a leaf");
                self.label("pendant-pair");
                Ok(Step::Descend(
                    Some(Frame {
                        removed: vec![ls, s],
                        distinct: vec![(s, other)],
                        hubs: None,
                    }),
                    Task::Plain { pair: None },
                ))
            }
            _ => {
                let (p, q) = match pair {
                    Some(pq) => pq,
                    None => {
                        let mut pre = self.w.vertices().filter(|&x| self.w.is_pre_leaf(x));
                        match (pre.next(), pre.next()) {
                            (Some(p), Some(q)) => (p, q),
                            _ => return Err(internal("fewer than two pre-leaves".into())),
                        }
                    }
                };
                Ok(Step::Descend(None, Task::Inner { p, q }))
            }
        }
    }

    fn inner(&mut self, p: usize, q: usize) -> Result<Step> {
        let n = self.w.n();
        if n <= 9 || self.w.is_string() {
            return self.finish_directly(&[(p, q)]);
        }
        if !(self.w.is_pre_leaf(p) && self.w.is_pre_leaf(q)) {
            return Err(internal(format!("{p} and {q} stopped being pre-leaves")));
        }
        let (p, q) = if self.w.deg(p) > self.w.deg(q) { (q, p) } else { (p, q) };
        let k = n / 3;
        let hubs: Vec<usize> = self.w.with_degree(k).collect();
        let frame = |removed: Vec<usize>, distinct: Vec<(usize, usize)>| Frame {
            removed,
            distinct,
            hubs: None,
        };
        let leaf_at = |w: &Work, x: usize, skip: usize| w.leaves_at(x).nth(skip);
        let missing = || internal("expected leaf is missing".into());

        if hubs.len() >= 2 {
            self.label("case-F");
            return Ok(Step::Descend(
                None,
                Task::TwoHub {
                    u: hubs[0],
                    v: hubs[1],
                    p,
                    q,
                },
            ));
        }
        let constrained = Task::Plain { pair: Some((p, q)) };
        let free = Task::Plain { pair: None };
        let p_special = self.w.deg(p) == 2;

        if hubs.is_empty() {
            if !p_special {
                let lp = leaf_at(&self.w, p, 0).ok_or_else(missing)?;
                let lq = leaf_at(&self.w, q, 0).ok_or_else(missing)?;
                if let Some(lw) = self.first_leaf(|_, s| s != p && s != q) {
                    self.label("case-A");
                    return Ok(Step::Descend(Some(frame(vec![lp, lq, lw], vec![(p, q)])), constrained));
                }
                if self.w.deg(q) >= 4 {
                    let lq2 = leaf_at(&self.w, q, 1).ok_or_else(missing)?;
                    self.label("case-A");
                    return Ok(Step::Descend(Some(frame(vec![lp, lq, lq2], vec![(p, q)])), constrained));
                }
                let lp2 = leaf_at(&self.w, p, 1).ok_or_else(missing)?;
                self.label("case-A");
                return Ok(Step::Descend(Some(frame(vec![lp, lp2, p], vec![(p, q)])), free));
            }
            let lp = leaf_at(&self.w, p, 0).ok_or_else(missing)?;
            let up = self.w.inner_nbr(p).ok_or_else(missing)?;
            let v2 = self
                .first_leaf(|l, s| l != lp && s != up)
                .or_else(|| self.first_leaf(|l, _| l != lp))
                .ok_or_else(missing)?;
            self.label("case-B");
            return Ok(Step::Descend(Some(frame(vec![lp, p, v2], vec![(p, q)])), free));
        }

        let v0 = hubs[0];
        if let Some(l0) = leaf_at(&self.w, v0, 0) {
            if !p_special {
                if p == v0 {
                    return Err(internal("hub coincides with the lower-degree pre-leaf".into()));
                }
                let lp = leaf_at(&self.w, p, 0).ok_or_else(missing)?;
                if q != v0 {
                    let lq = leaf_at(&self.w, q, 0).ok_or_else(missing)?;
                    self.label("case-C");
                    return Ok(Step::Descend(Some(frame(vec![lp, lq, l0], vec![(p, q)])), constrained));
                }
                let third = self
                    .first_leaf(|_, s| s != p && s != q)
                    .or_else(|| leaf_at(&self.w, q, 1))
                    .ok_or_else(missing)?;
                self.label("case-C");
                return Ok(Step::Descend(
                    Some(frame(vec![lp, l0, third], vec![(p, q)])),
                    constrained,
                ));
            }
            let lp = leaf_at(&self.w, p, 0).ok_or_else(missing)?;
            self.label("case-D");
            return Ok(Step::Descend(Some(frame(vec![lp, p, l0], vec![(p, q)])), free));
        }

        let w = &self.w;
        let v = w
            .nbrs(v0)
            .find(|&x| w.is_special(x))
            .ok_or_else(|| internal(format!("hub {v0} has no leaf and no special neighbor")))?;
        let lv = leaf_at(w, v, 0).ok_or_else(missing)?;
        let v2 = self
            .first_leaf(|_, s| s != p && s != q && s != v)
            .ok_or_else(|| internal("no leaf away from the constrained vertices".into()))?;
        self.label("case-E");
        if v != p && v != q {
            return Ok(Step::Descend(Some(frame(vec![lv, v, v2], vec![(p, q)])), constrained));
        }
        let other = if v == p { q } else { p };
        Ok(Step::Descend(Some(frame(vec![lv, v, v2], vec![(v, other)])), free))
    }

    fn two_hub(&mut self, u: usize, v: usize, p: usize, q: usize) -> Result<Step> {
        let distinct = vec![(u, v), (p, q)];
        if self.w.n() <= 5 {
            return self.finish_directly(&distinct);
        }
        let task = Task::TwoHub { u, v, p, q };
        let single = |leaf: usize| Frame {
            removed: vec![leaf],
            distinct: distinct.clone(),
            hubs: Some((u, v)),
        };
        for z in [p, q] {
            if z != u && z != v && self.w.deg(z) >= 3 {
                let leaf = self
                    .w
                    .leaves_at(z)
                    .next()
                    .ok_or_else(|| internal("pre-leaf without leaf".into()))?;
                self.label("two-hubs-c1");
                return Ok(Step::Descend(Some(single(leaf)), task));
            }
        }
        let keep = [u, v, p, q];
        if let Some(leaf) = self.first_leaf(|_, s| !keep.contains(&s)) {
            self.label("two-hubs-c2");
            return Ok(Step::Descend(Some(single(leaf)), task));
        }
        self.label("two-hubs-terminal");
        match terminal::solve(&mut self.w, u, v, p, q) {
            Ok(true) => Ok(Step::Done),
            Ok(false) => Err(internal("two-hub configuration has no admissible coloring".into())),
            Err(msg) => Err(internal(msg)),
        }
    }

    /// Colors the just-restored vertices of `frame`.
    fn extend(&mut self, frame: &Frame) -> Result<()> {
        let r = &frame.removed;
        let combos = 3usize.pow(r.len() as u32);
        for code in 0..combos {
            let mut rest = code;
            for &x in r.iter().rev() {
                self.w.set_color(x, (rest % 3) as u8 + 1);
                rest /= 3;
            }
            if self.frame_ok(frame) {
                return Ok(());
            }
        }
        for &x in r {
            self.w.set_color(x, 0);
        }
        if let (Some((u, v)), &[leaf]) = (frame.hubs, r.as_slice()) {
            return self.swap_into_branch(frame, leaf, u, v);
        }
        Err(internal(format!("no extension for restored vertices {r:?}")))
    }

    fn frame_ok(&self, frame: &Frame) -> bool {
        let w = &self.w;
        let proper = frame
            .removed
            .iter()
            .all(|&x| w.nbrs(x).all(|y| w.color[y] != w.color[x]));
        let sizes = &w.class[1..];
        proper
            && frame.distinct.iter().all(|&(a, b)| w.color[a] != w.color[b])
            && sizes.iter().max().unwrap() - sizes.iter().min().unwrap() <= 1
    }

    /// Restores a leaf whose parent holds the only smallest class.
    ///
    /// Some hub `r` avoids that class `alpha`; it has more branches than
    /// `alpha` has vertices, so one branch `B` contains no `alpha` vertex.
    /// A leaf `x` of `B` moves to `alpha` and the restored leaf takes `x`'s
    /// old color.
    fn swap_into_branch(&mut self, frame: &Frame, leaf: usize, u: usize, v: usize) -> Result<()> {
        let w = &self.w;
        let parent = w.parent(leaf);
        let alpha = w.color[parent];
        let r = [u, v]
            .into_iter()
            .find(|&h| w.color[h] != alpha)
            .ok_or_else(|| internal("both hubs share a color".into()))?;
        let mut x = None;
        for y in w.nbrs(r).filter(|&y| y != leaf) {
            let mut stack = vec![(y, r)];
            let mut clean = true;
            let mut best: Option<usize> = None;
            while let Some((z, from)) = stack.pop() {
                if w.color[z] == alpha {
                    clean = false;
                    break;
                }
                if w.deg(z) == 1 {
                    best = Some(best.map_or(z, |b| b.min(z)));
                }
                stack.extend(w.nbrs(z).filter(|&t| t != from).map(|t| (t, z)));
            }
            if clean {
                x = best;
                break;
            }
        }
        let x = x.ok_or_else(|| internal(format!("no branch at hub {r} avoids color {alpha}")))?;
        let old = w.color[x];
        self.w.set_color(x, alpha);
        self.w.set_color(leaf, old);
        let w = &self.w;
        let around_ok = [x, leaf].iter().all(|&z| w.nbrs(z).all(|y| w.color[y] != w.color[z]));
        if around_ok && self.frame_ok(frame) {
            Ok(())
        } else {
            Err(internal(format!("leaf swap at {x} broke a constraint")))
        }
    }
}
