//! Direct colorings for the shapes where the case machine bottoms out.

use super::work::Work;

/// Colors the alive path so that every pair in `distinct` differs.
///
/// The cyclic pattern 1, 2, 3, 1, 2, 3, ... is equitable and proper. When it
/// merges a required pair, the path is colored 1, 2, 3 followed by repeats of
/// 1, 3, 2 instead; remaining failures fall back to exhaustive search.
pub(super) fn color_path(w: &mut Work, distinct: &[(usize, usize)]) -> bool {
    let Some(start) = w.vertices().find(|&v| w.deg(v) <= 1) else {
        return false;
    };
    let mut order = vec![start];
    let mut prev = 0;
    let mut cur = start;
    while let Some(next) = w.nbrs(cur).find(|&u| u != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    if order.len() != w.n() {
        return false;
    }
    let patterns: [fn(usize) -> u8; 2] = [
        |i| (i % 3) as u8 + 1,
        |i| if i < 3 { i as u8 + 1 } else { [1, 3, 2][i % 3] },
    ];
    for pattern in patterns {
        for (i, &v) in order.iter().enumerate() {
            w.set_color(v, pattern(i));
        }
        if distinct.iter().all(|&(a, b)| w.color[a] != w.color[b]) {
            return true;
        }
    }
    exhaustive(w, distinct)
}

/// Exhaustive equitable proper 3-coloring of the alive vertices subject to
/// `distinct`. Meant for a handful of vertices.
pub(super) fn exhaustive(w: &mut Work, distinct: &[(usize, usize)]) -> bool {
    let order: Vec<usize> = w.vertices().collect();
    for &v in &order {
        w.set_color(v, 0);
    }
    let cap = order.len().div_ceil(3);
    let ok = search(w, &order, 0, cap, distinct);
    if !ok {
        for &v in &order {
            w.set_color(v, 0);
        }
    }
    ok
}

fn search(w: &mut Work, order: &[usize], i: usize, cap: usize, distinct: &[(usize, usize)]) -> bool {
    if i == order.len() {
        return w.alive_equitable() && distinct.iter().all(|&(a, b)| w.color[a] != w.color[b]);
    }
    let v = order[i];
    for c in 1..=3u8 {
        if w.class[c as usize] >= cap || w.nbrs(v).any(|u| w.color[u] == c) {
            continue;
        }
        w.set_color(v, c);
        if search(w, order, i + 1, cap, distinct) {
            return true;
        }
        w.set_color(v, 0);
    }
    false
}
