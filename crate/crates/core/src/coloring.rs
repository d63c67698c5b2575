use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A total map from vertices `1..=n` to colors `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KColoring {
    k: usize,
    /// `colors[i]` is the color of vertex `i + 1`.
    colors: Vec<usize>,
    class_sizes: Vec<usize>,
}

impl KColoring {
    /// Checks that every entry lies in `1..=k`.
    pub fn new(k: usize, colors: Vec<usize>) -> Result<Self> {
        let mut class_sizes = vec![0; k];
        for (i, &c) in colors.iter().enumerate() {
            if c == 0 || c > k {
                return Err(Error::PartialColoring(i + 1));
            }
            class_sizes[c - 1] += 1;
        }
        Ok(KColoring { k, colors, class_sizes })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    /// Color of vertex `v` (1-based).
    pub fn color(&self, v: usize) -> usize {
        self.colors[v - 1]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    /// Vertices carrying color `c`, in increasing order.
    pub fn class(&self, c: usize) -> Vec<usize> {
        (1..=self.n()).filter(|&v| self.color(v) == c).collect()
    }

    /// Fails unless this coloring covers exactly the vertices of `g`.
    pub fn check_total(&self, g: &Graph) -> Result<()> {
        if self.n() < g.n() {
            return Err(Error::PartialColoring(self.n() + 1));
        }
        if self.n() > g.n() {
            return Err(Error::BadVertex(g.n() + 1));
        }
        Ok(())
    }

    /// Per-color count of edges whose endpoints share that color.
    pub fn monochromatic_edges(&self, g: &Graph) -> Vec<usize> {
        let mut mono = vec![0; self.k];
        for (u, v) in g.edges() {
            let c = self.color(u);
            if c == self.color(v) {
                mono[c - 1] += 1;
            }
        }
        mono
    }
}

pub(crate) fn spread(values: &[usize]) -> usize {
    match (values.iter().max(), values.iter().min()) {
        (Some(hi), Some(lo)) => hi - lo,
        _ => 0,
    }
}
