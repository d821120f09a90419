//! Simple undirected graphs, rooted trees and integer vertex functions.

use std::ops::{Add, Index};

use crate::error::{Error, Result};

/// A finite simple undirected graph on the vertices `0..n`.
///
/// Adjacency lists are kept sorted so every traversal is deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, repeated edges and vertices
    /// outside `0..n`.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph { adj, m: edges.len() })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    /// The degree function `d_G` as a vertex function.
    pub fn degrees(&self) -> VertexFn {
        VertexFn::new(self.adj.iter().map(|a| a.len() as i64).collect())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n()
    }

    pub fn is_tree(&self) -> bool {
        self.n() > 0 && self.m + 1 == self.n() && self.is_connected()
    }

    /// `Some(r)` when every vertex has degree `r`.
    pub fn regular_degree(&self) -> Option<usize> {
        let r = self.adj.first()?.len();
        self.adj.iter().all(|a| a.len() == r).then_some(r)
    }
}

/// Free-function form of [`Graph::new`].
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::new(n, edges)
}

/// An integer-valued function on the vertex set (thresholds, increments,
/// increment caps).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexFn(Vec<i64>);

impl VertexFn {
    pub fn new(values: Vec<i64>) -> Self {
        VertexFn(values)
    }

    pub fn constant(n: usize, c: i64) -> Self {
        VertexFn(vec![c; n])
    }

    pub fn zeros(n: usize) -> Self {
        Self::constant(n, 0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn into_values(self) -> Vec<i64> {
        self.0
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Pointwise `self <= other`.
    pub fn le(&self, other: &VertexFn) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// The same function with the value at `u` lowered by one.
    pub fn decremented_at(&self, u: usize) -> VertexFn {
        let mut out = self.clone();
        out.0[u] -= 1;
        out
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.0.len() == n {
            Ok(())
        } else {
            Err(Error::LengthMismatch { expected: n, found: self.0.len() })
        }
    }
}

impl Index<usize> for VertexFn {
    type Output = i64;

    fn index(&self, u: usize) -> &i64 {
        &self.0[u]
    }
}

impl Add for &VertexFn {
    type Output = VertexFn;

    fn add(self, rhs: &VertexFn) -> VertexFn {
        assert_eq!(self.len(), rhs.len(), "vertex functions of different length");
        VertexFn(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl From<Vec<i64>> for VertexFn {
    fn from(values: Vec<i64>) -> Self {
        VertexFn(values)
    }
}

/// A tree together with a root, parent/children structure and a postorder.
#[derive(Clone, Debug)]
pub struct RootedTree {
    graph: Graph,
    root: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    postorder: Vec<usize>,
    capacity: Option<Vec<i64>>,
}

impl RootedTree {
    pub fn new(graph: Graph, root: usize) -> Result<RootedTree> {
        let n = graph.n();
        if !graph.is_tree() {
            return Err(Error::NotATree);
        }
        if root >= n {
            return Err(Error::VertexOutOfRange { vertex: root, n });
        }
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut stack = vec![root];
        let mut seen = vec![false; n];
        seen[root] = true;
        while let Some(u) = stack.pop() {
            for &v in graph.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = Some(u);
                    children[u].push(v);
                    stack.push(v);
                }
            }
        }
        // Explicit-stack postorder; every subtree occupies a contiguous block.
        let mut postorder = Vec::with_capacity(n);
        let mut frames: Vec<(usize, usize)> = vec![(root, 0)];
        while let Some((u, next)) = frames.pop() {
            if next < children[u].len() {
                frames.push((u, next + 1));
                frames.push((children[u][next], 0));
            } else {
                postorder.push(u);
            }
        }
        Ok(RootedTree { graph, root, parent, children, postorder, capacity: None })
    }

    /// Attaches `iota_max` and precomputes `iota_max(V_u)` for every vertex.
    pub fn with_capacities(mut self, iota_max: &VertexFn) -> Result<RootedTree> {
        iota_max.check_len(self.n())?;
        if let Some((vertex, &value)) = iota_max.values().iter().enumerate().find(|(_, v)| **v < 0) {
            return Err(Error::NegativeCapacity { vertex, value });
        }
        let mut cap = iota_max.values().to_vec();
        for &u in &self.postorder {
            if let Some(p) = self.parent[u] {
                cap[p] += cap[u];
            }
        }
        self.capacity = Some(cap);
        Ok(self)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, u: usize) -> Option<usize> {
        self.parent[u]
    }

    pub fn children(&self, u: usize) -> &[usize] {
        &self.children[u]
    }

    pub fn postorder(&self) -> &[usize] {
        &self.postorder
    }

    /// `iota_max(V_u)`, once capacities are attached.
    pub fn subtree_capacity(&self, u: usize) -> Option<i64> {
        self.capacity.as_ref().map(|c| c[u])
    }

    pub fn subtree_sizes(&self) -> Vec<usize> {
        let mut size = vec![1; self.n()];
        for &u in &self.postorder {
            if let Some(p) = self.parent[u] {
                size[p] += size[u];
            }
        }
        size
    }
}

/// Free-function form of [`RootedTree::new`].
pub fn root_tree(g: Graph, r: usize) -> Result<RootedTree> {
    RootedTree::new(g, r)
}

/// Free-function form of [`RootedTree::with_capacities`].
pub fn attach_capacities(t: RootedTree, iota_max: &VertexFn) -> Result<RootedTree> {
    t.with_capacities(iota_max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn single_edge() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
        assert_eq!(g.neighbors(0), &[1]);
        assert_eq!(g.neighbors(1), &[0]);
    }

    #[test]
    fn path_degrees() {
        assert_eq!(p3().degrees().values(), &[1, 2, 1]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(3, &[(0, 1), (0, 1)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(3, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(3, &[(2, 2)]), Err(Error::SelfLoop(2)));
        assert_eq!(Graph::new(3, &[(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
    }

    #[test]
    fn root_path_at_center() {
        let t = RootedTree::new(p3(), 1).unwrap();
        assert_eq!(t.children(1), &[0, 2]);
        assert_eq!(*t.postorder().last().unwrap(), 1);
        assert_eq!(t.parent(1), None);
    }

    #[test]
    fn root_path_at_end() {
        let t = RootedTree::new(p3(), 0).unwrap();
        assert_eq!(t.children(0), &[1]);
        assert_eq!(t.children(1), &[2]);
        assert_eq!(t.postorder(), &[2, 1, 0]);
    }

    #[test]
    fn non_trees_rejected() {
        let tri = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(RootedTree::new(tri, 0).unwrap_err(), Error::NotATree);
        let forest = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(RootedTree::new(forest, 0).unwrap_err(), Error::NotATree);
        let empty = Graph::new(0, &[]).unwrap();
        assert_eq!(RootedTree::new(empty, 0).unwrap_err(), Error::NotATree);
    }

    #[test]
    fn capacities() {
        let t = RootedTree::new(p3(), 1).unwrap().with_capacities(&VertexFn::constant(3, 1)).unwrap();
        assert_eq!((0..3).map(|u| t.subtree_capacity(u).unwrap()).collect::<Vec<_>>(), vec![1, 3, 1]);

        let chain = RootedTree::new(p3(), 0).unwrap().with_capacities(&VertexFn::new(vec![0, 2, 5])).unwrap();
        assert_eq!(chain.subtree_capacity(0), Some(7));

        let err = RootedTree::new(p3(), 0).unwrap().with_capacities(&VertexFn::new(vec![0, -1, 5]));
        assert_eq!(err.unwrap_err(), Error::NegativeCapacity { vertex: 1, value: -1 });
    }

    #[test]
    fn decrement_view() {
        let f = VertexFn::new(vec![1, 2, 3]);
        assert_eq!(f.decremented_at(1).values(), &[1, 1, 3]);
        assert!(f.decremented_at(1).le(&f));
    }
}
