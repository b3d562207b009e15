//! Immutable simple undirected graphs.
//!
//! Vertices are dense indices `0..n`. Edges are stored as canonical `(min, max)`
//! pairs in lexicographic order, and that order is the tie-break for every
//! "pick an edge" step in the crate.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An unordered vertex pair stored with the smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(usize, usize);

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn u(self) -> usize {
        self.0
    }

    pub fn v(self) -> usize {
        self.1
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.0, self.1)
    }

    pub fn touches(self, x: usize) -> bool {
        self.0 == x || self.1 == x
    }

    /// The endpoint opposite `x`. `x` must be an endpoint.
    pub fn other(self, x: usize) -> usize {
        debug_assert!(self.touches(x));
        if self.0 == x {
            self.1
        } else {
            self.0
        }
    }

    pub fn shares_vertex(self, other: Edge) -> bool {
        self.touches(other.0) || self.touches(other.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

/// An induced subgraph together with the map from its vertices back to the parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub to_parent: Vec<usize>,
}

impl InducedSubgraph {
    pub fn parent_edge(&self, e: Edge) -> Edge {
        Edge::new(self.to_parent[e.u()], self.to_parent[e.v()])
    }
}

/// Degree statistics used by the stability bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub delta: usize,
    /// `t[i]` is the number of vertices of degree `i`; absent degrees are omitted.
    pub t: BTreeMap<usize, usize>,
    /// Vertices of degree `delta - 1` that have a neighbor of degree at least `delta - 1`.
    pub s: usize,
}

impl DegreeProfile {
    pub fn t(&self, degree: usize) -> usize {
        self.t.get(&degree).copied().unwrap_or(0)
    }

    pub fn t_delta(&self) -> usize {
        self.t(self.delta)
    }

    pub fn t_delta_minus_one(&self) -> usize {
        if self.delta == 0 {
            0
        } else {
            self.t(self.delta - 1)
        }
    }
}

impl Graph {
    /// Builds a graph from vertex pairs. Duplicate pairs collapse to one edge.
    pub fn from_edge_list<I, P>(n: usize, pairs: I) -> Result<Graph>
    where
        I: IntoIterator<Item = P>,
        P: Into<(usize, usize)>,
    {
        let mut edges = Vec::new();
        for p in pairs {
            let (a, b) = p.into();
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            edges.push(Edge::new(a, b));
        }
        Ok(Graph::from_canonical(n, edges))
    }

    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Graph> {
        Graph::from_edge_list(n, edges.iter().map(|e| e.endpoints()))
    }

    pub fn empty(n: usize) -> Graph {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    // Callers guarantee in-range, loop-free endpoints.
    pub(crate) fn from_canonical(n: usize, mut edges: Vec<Edge>) -> Graph {
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.u()].push(e.v());
            adj[e.v()].push(e.u());
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edge_index(e).is_some()
    }

    /// Position of `e` in the canonical edge order.
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub(crate) fn require_edges(&self) -> Result<()> {
        if self.edges.is_empty() {
            Err(Error::NoEdges)
        } else {
            Ok(())
        }
    }

    /// Vertices of maximum degree, ascending.
    pub fn max_degree_vertices(&self) -> Vec<usize> {
        let delta = self.max_degree();
        (0..self.n).filter(|&v| self.degree(v) == delta).collect()
    }

    pub fn induced(&self, vertices: &[usize]) -> InducedSubgraph {
        let mut to_parent: Vec<usize> = vertices.to_vec();
        to_parent.sort_unstable();
        to_parent.dedup();
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in to_parent.iter().enumerate() {
            local[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| local[e.u()] != usize::MAX && local[e.v()] != usize::MAX)
            .map(|e| Edge::new(local[e.u()], local[e.v()]))
            .collect();
        InducedSubgraph { graph: Graph::from_canonical(to_parent.len(), edges), to_parent }
    }

    /// The core: the subgraph induced by the vertices of maximum degree.
    pub fn core(&self) -> InducedSubgraph {
        self.induced(&self.max_degree_vertices())
    }

    /// Edges whose endpoints both have degree `d`.
    pub fn edges_between_degree(&self, d: usize) -> Vec<Edge> {
        self.edges
            .iter()
            .copied()
            .filter(|e| self.degree(e.u()) == d && self.degree(e.v()) == d)
            .collect()
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let delta = self.max_degree();
        let mut t = BTreeMap::new();
        for v in 0..self.n {
            *t.entry(self.degree(v)).or_insert(0) += 1;
        }
        let s = if delta == 0 {
            0
        } else {
            (0..self.n)
                .filter(|&v| self.degree(v) == delta - 1)
                .filter(|&v| self.adj[v].iter().any(|&w| self.degree(w) + 1 >= delta))
                .count()
        };
        DegreeProfile { delta, t, s }
    }

    /// `G \ F`. Every edge of `f` must be present.
    pub fn remove_edges(&self, f: &[Edge]) -> Result<Graph> {
        let mut drop = vec![false; self.edges.len()];
        for &e in f {
            match self.edge_index(e) {
                Some(i) => drop[i] = true,
                None => return Err(Error::EdgeNotPresent(e)),
            }
        }
        let kept = self
            .edges
            .iter()
            .zip(&drop)
            .filter(|(_, &d)| !d)
            .map(|(&e, _)| e)
            .collect();
        Ok(Graph::from_canonical(self.n, kept))
    }

    /// `G + F` for edges between existing vertices.
    pub fn add_edges(&self, f: &[Edge]) -> Result<Graph> {
        let mut edges = self.edges.clone();
        for &e in f {
            if e.v() >= self.n {
                return Err(Error::VertexOutOfRange { vertex: e.v(), n: self.n });
            }
            if e.u() == e.v() {
                return Err(Error::SelfLoop(e.u()));
            }
            edges.push(e);
        }
        Ok(Graph::from_canonical(self.n, edges))
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if !self.has_edge(a, b) {
                    edges.push(Edge(a, b));
                }
            }
        }
        Graph::from_canonical(self.n, edges)
    }

    /// Vertex sets of the connected components, each ascending, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    pub fn is_acyclic(&self) -> bool {
        // A forest has exactly n - c edges.
        self.edges.len() + self.connected_components().len() == self.n
    }

    /// Two-coloring of the vertices (`false`/`true` sides), if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                let sx = side[x].unwrap();
                for &y in &self.adj[x] {
                    match side[y] {
                        None => {
                            side[y] = Some(!sx);
                            queue.push_back(y);
                        }
                        Some(sy) if sy == sx => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Edges of one cycle, in traversal order, or `None` for a forest.
    ///
    /// The search is a DFS from the smallest vertex with neighbors visited in
    /// ascending order, so the result is deterministic.
    pub fn find_cycle(&self) -> Option<Vec<Edge>> {
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![usize::MAX; self.n];
        for root in 0..self.n {
            if depth[root] != usize::MAX {
                continue;
            }
            depth[root] = 0;
            // (vertex, next neighbor position)
            let mut stack = vec![(root, 0usize)];
            while let Some(&mut (x, ref mut pos)) = stack.last_mut() {
                if *pos == self.adj[x].len() {
                    stack.pop();
                    continue;
                }
                let y = self.adj[x][*pos];
                *pos += 1;
                if y == parent[x] {
                    continue;
                }
                if depth[y] == usize::MAX {
                    depth[y] = depth[x] + 1;
                    parent[y] = x;
                    stack.push((y, 0));
                } else if depth[y] < depth[x] {
                    // back edge x -> ancestor y
                    let mut cycle = vec![Edge::new(x, y)];
                    let mut w = x;
                    while w != y {
                        cycle.push(Edge::new(w, parent[w]));
                        w = parent[w];
                    }
                    return Some(cycle);
                }
            }
        }
        None
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| Edge(e.0 + shift, e.1 + shift)));
        Graph::from_canonical(self.n + other.n, edges)
    }

    /// Graph obtained by relabeling vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let edges = self.edges.iter().map(|e| Edge::new(perm[e.0], perm[e.1])).collect();
        Graph::from_canonical(self.n, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let mut pairs = Vec::new();
        for i in 0..5 {
            pairs.push((i, (i + 1) % 5));
            pairs.push((5 + i, 5 + (i + 2) % 5));
            pairs.push((i, i + 5));
        }
        Graph::from_edge_list(10, pairs).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        Graph::from_edge_list(n, pairs).unwrap()
    }

    #[test]
    fn path_and_dedup() {
        let p3 = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert_eq!(p3.neighbors(1), &[0, 2]);
        let single = Graph::from_edge_list(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(single.edges(), &[Edge::new(0, 1)]);
    }

    #[test]
    fn rejects_loops_and_range() {
        assert_eq!(Graph::from_edge_list(2, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::from_edge_list(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn cores() {
        let p = petersen();
        let core = p.core();
        assert_eq!(core.graph, p);
        assert_eq!(core.to_parent, (0..10).collect::<Vec<_>>());

        let star = Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let core = star.core();
        assert_eq!(core.graph.n(), 1);
        assert_eq!(core.graph.edge_count(), 0);
        assert_eq!(core.to_parent, vec![0]);
    }

    #[test]
    fn profiles() {
        let p = petersen().degree_profile();
        assert_eq!((p.delta, p.t(3), p.s), (3, 10, 0));

        let k23 = Graph::from_edge_list(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let p = k23.degree_profile();
        // every degree-2 vertex sees a degree-3 vertex
        assert_eq!((p.delta, p.t(3), p.t(2), p.s), (3, 2, 3, 3));
    }

    #[test]
    fn removal() {
        let k5 = complete(5);
        let g = k5.remove_edges(&[Edge::new(0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 9);
        let mut degs = g.degrees();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(degs, vec![4, 4, 4, 3, 3]);
        assert_eq!(k5.remove_edges(&[]).unwrap(), k5);
        assert_eq!(
            g.remove_edges(&[Edge::new(0, 1)]),
            Err(Error::EdgeNotPresent(Edge::new(0, 1)))
        );
        assert_eq!(g.complement().edge_count(), 1);
    }

    #[test]
    fn predicates() {
        let star = Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(star.is_acyclic());
        assert!(star.find_cycle().is_none());

        let c6 = Graph::from_edge_list(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert!(c6.is_bipartite());
        assert!(!c6.is_acyclic());
        let cycle = c6.find_cycle().unwrap();
        assert_eq!(cycle.len(), 6);

        let c5 = Graph::from_edge_list(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert!(!c5.is_bipartite());

        let two = Graph::from_edge_list(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.connected_components(), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn found_cycle_is_a_cycle() {
        let g = complete(5).remove_edges(&[Edge::new(0, 1)]).unwrap();
        let cycle = g.find_cycle().unwrap();
        let mut deg = [0; 5];
        for e in &cycle {
            assert!(g.contains(*e));
            deg[e.u()] += 1;
            deg[e.v()] += 1;
        }
        assert!(deg.iter().all(|&d| d == 0 || d == 2));
    }
}
