//! Simple undirected graphs and trees on vertices `1..=n`.
//!
//! Adjacency lists are kept sorted, so iteration order (and every tie-break
//! built on it) is deterministic.

use std::collections::VecDeque;
use std::ops::Deref;

use crate::error::{Error, NotATreeReason, Result};

/// A finite simple graph on the vertex set `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    // Slot 0 is unused so that vertex ids index directly.
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n + 1],
            edge_count: 0,
        }
    }

    /// Builds a simple graph, rejecting self-loops, repeated edges and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::NotSimple(NotATreeReason::BadVertexId));
            }
            if u == v {
                return Err(Error::NotSimple(NotATreeReason::SelfLoop));
            }
            if g.adj[u].contains(&v) {
                return Err(Error::NotSimple(NotATreeReason::DuplicateEdge));
            }
            g.adj[u].push(v);
            g.adj[v].push(u);
            g.edge_count += 1;
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 1..=n {
            for v in u + 1..=n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).expect("complete graph is simple")
    }

    pub fn n(&self) -> usize {
        self.adj.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n()
    }

    /// Sorted neighbors of `v`. Panics if `v` is not a vertex.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        assert!(self.contains(v), "vertex {v} out of range");
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    pub fn contains(&self, v: usize) -> bool {
        v >= 1 && v <= self.n()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.contains(u) && self.contains(v) && self.adj[u].binary_search(&v).is_ok()
    }

    /// Degrees in vertex order: entry `i` is the degree of vertex `i + 1`.
    pub fn degrees(&self) -> Vec<u32> {
        self.adj[1..].iter().map(|a| a.len() as u32).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj[1..].iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices()
            .flat_map(move |u| self.adj[u].iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Connected components, each sorted, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for s in 1..=n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.components().len() == 1
    }

    /// Acyclic iff every component with `c` vertices carries `c - 1` edges.
    pub fn is_forest(&self) -> bool {
        self.edge_count + self.components().len() == self.n()
    }
}

/// A connected acyclic [`Graph`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree(Graph);

impl Deref for Tree {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.0
    }
}

impl Tree {
    /// Validates an edge list as a tree on `1..=n`.
    ///
    /// ```
    /// use arbor::{Tree, Error, NotATreeReason};
    ///
    /// assert!(Tree::from_edges(2, &[(1, 2)]).is_ok());
    /// assert_eq!(
    ///     Tree::from_edges(3, &[(1, 2), (2, 3), (3, 1)]),
    ///     Err(Error::NotATree(NotATreeReason::Cycle)),
    /// );
    /// ```
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotATree(NotATreeReason::Disconnected));
        }
        let mut parent: Vec<usize> = (0..=n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut adj = vec![Vec::new(); n + 1];
        let mut components = n;
        for &(u, v) in edges {
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::NotATree(NotATreeReason::BadVertexId));
            }
            if u == v {
                return Err(Error::NotATree(NotATreeReason::SelfLoop));
            }
            if adj[u].contains(&v) {
                return Err(Error::NotATree(NotATreeReason::DuplicateEdge));
            }
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return Err(Error::NotATree(NotATreeReason::Cycle));
            }
            parent[ru] = rv;
            components -= 1;
            adj[u].push(v);
            adj[v].push(u);
        }
        if components != 1 {
            return Err(Error::NotATree(NotATreeReason::Disconnected));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Tree(Graph { adj, edge_count: n - 1 }))
    }

    /// Promotes a graph that is already known to be a tree.
    pub fn try_from_graph(g: Graph) -> Result<Self> {
        if g.n() == 0 || !g.is_connected() {
            return Err(Error::NotATree(NotATreeReason::Disconnected));
        }
        if g.edge_count() != g.n() - 1 {
            return Err(Error::NotATree(NotATreeReason::Cycle));
        }
        Ok(Tree(g))
    }

    /// The path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Tree::from_edges(n, &edges).expect("path is a tree")
    }

    /// The star on `n` vertices: center 1 joined to `2..=n`.
    pub fn star(n: usize) -> Self {
        let edges: Vec<_> = (2..=n).map(|i| (1, i)).collect();
        Tree::from_edges(n, &edges).expect("star is a tree")
    }

    /// Two adjacent centers `1` and `2` carrying `p` and `q` pendant leaves.
    pub fn double_star(p: usize, q: usize) -> Self {
        let mut edges = vec![(1, 2)];
        edges.extend((0..p).map(|i| (1, 3 + i)));
        edges.extend((0..q).map(|i| (2, 3 + p + i)));
        Tree::from_edges(p + q + 2, &edges).expect("double star is a tree")
    }

    pub fn as_graph(&self) -> &Graph {
        &self.0
    }

    pub fn into_graph(self) -> Graph {
        self.0
    }

    /// Kind of `v` with respect to the leaves around it.
    pub fn classify(&self, v: usize) -> Result<VertexClass> {
        if !self.contains(v) {
            return Err(Error::BadVertex(v));
        }
        let d = self.degree(v);
        if d == 1 {
            return Ok(VertexClass::Leaf);
        }
        if d == 0 {
            return Ok(VertexClass::Internal);
        }
        let leaf_neighbors = self.neighbors(v).iter().filter(|&&u| self.degree(u) == 1).count();
        Ok(if leaf_neighbors + 1 < d {
            VertexClass::Internal
        } else if d == 2 {
            VertexClass::SpecialPreLeaf
        } else {
            VertexClass::PreLeaf
        })
    }

    /// Pre-leaf vertices (special ones included), in increasing order.
    pub fn pre_leaves(&self) -> Vec<usize> {
        self.vertices()
            .filter(|&v| self.classify(v).map(VertexClass::is_pre_leaf).unwrap_or(false))
            .collect()
    }

    /// True iff the maximum degree is at most two, i.e. the tree is a path.
    pub fn is_string(&self) -> bool {
        self.max_degree() <= 2
    }

    /// The component of `self - v` containing the neighbor `u`, sorted.
    pub fn branch(&self, v: usize, u: usize) -> Result<Vec<usize>> {
        for x in [v, u] {
            if !self.contains(x) {
                return Err(Error::BadVertex(x));
            }
        }
        if !self.has_edge(v, u) {
            return Err(Error::NotAdjacent(v, u));
        }
        let mut seen = vec![false; self.n() + 1];
        seen[v] = true;
        seen[u] = true;
        let mut out = vec![u];
        let mut stack = vec![u];
        while let Some(x) = stack.pop() {
            for &y in self.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    stack.push(y);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Deletes `removed` and relabels the survivors to `1..=n'` in increasing
    /// order of their old ids.
    pub fn induced_subgraph(&self, removed: &[usize]) -> Result<InducedSubgraph> {
        let n = self.n();
        let mut gone = vec![false; n + 1];
        for &v in removed {
            if !self.contains(v) {
                return Err(Error::BadVertex(v));
            }
            gone[v] = true;
        }
        let mut to_new = vec![None; n + 1];
        let mut to_old = vec![0];
        for v in 1..=n {
            if !gone[v] {
                to_old.push(v);
                to_new[v] = Some(to_old.len() - 1);
            }
        }
        let edges: Vec<_> = self
            .edges()
            .filter_map(|(a, b)| Some((to_new[a]?, to_new[b]?)))
            .collect();
        let graph = Graph::from_edges(to_old.len() - 1, &edges).expect("induced subgraph is simple");
        Ok(InducedSubgraph { graph, to_old, to_new })
    }
}

/// Vertex taxonomy used by the equitable-coloring recursions.
///
/// A pre-leaf is a non-leaf vertex all of whose neighbors but at most one
/// are leaves; a special pre-leaf is a pre-leaf of degree two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexClass {
    Leaf,
    PreLeaf,
    SpecialPreLeaf,
    Internal,
}

impl VertexClass {
    pub fn is_pre_leaf(self) -> bool {
        matches!(self, VertexClass::PreLeaf | VertexClass::SpecialPreLeaf)
    }
}

/// An induced subgraph together with the relabeling that produced it.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `to_old[new]` for `new` in `1..=graph.n()`; slot 0 is unused.
    pub to_old: Vec<usize>,
    /// `to_new[old]`, `None` for deleted vertices.
    pub to_new: Vec<Option<usize>>,
}

/// Joins the components of a forest into a single tree by adding one edge
/// per extra component.
///
/// Components are attached in order of their smallest vertex. Each join links
/// a minimum-degree vertex (smallest id among ties) of the tree built so far
/// to a minimum-degree vertex of the next component. Fails with
/// [`Error::CapInfeasible`] when a join would push a degree above
/// `max(degree_cap, max_degree(forest))`.
pub fn complete_forest_to_tree(forest: &Graph, degree_cap: usize) -> Result<Tree> {
    if !forest.is_forest() {
        return Err(Error::NotAForest);
    }
    let comps = forest.components();
    let cap = degree_cap.max(forest.max_degree());
    let mut degree: Vec<usize> = std::iter::once(0)
        .chain(forest.vertices().map(|v| forest.degree(v)))
        .collect();
    let mut edges: Vec<(usize, usize)> = forest.edges().collect();
    let pick = |members: &[usize], degree: &[usize]| -> usize {
        *members
            .iter()
            .min_by_key(|&&v| (degree[v], v))
            .expect("components are nonempty")
    };
    let mut built: Vec<usize> = comps.first().cloned().unwrap_or_default();
    for comp in comps.iter().skip(1) {
        let a = pick(&built, &degree);
        let b = pick(comp, &degree);
        if degree[a] + 1 > cap || degree[b] + 1 > cap {
            return Err(Error::CapInfeasible {
                cap: degree_cap,
                components: comps.len(),
            });
        }
        degree[a] += 1;
        degree[b] += 1;
        edges.push((a, b));
        built.extend_from_slice(comp);
    }
    Tree::from_edges(forest.n(), &edges)
}
