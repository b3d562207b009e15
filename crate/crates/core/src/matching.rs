//! Maximum cardinality matching on general graphs (Edmonds' blossom algorithm).

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn saturates(&self, v: usize) -> bool {
        self.edges.iter().any(|e| e.touches(v))
    }
}

/// Whether `m` is a set of pairwise non-incident edges of `g`.
pub fn is_matching(g: &Graph, m: &[Edge]) -> Result<bool> {
    let mut hit = vec![false; g.n()];
    for &e in m {
        if !g.contains(e) {
            return Err(Error::EdgeNotPresent(e));
        }
        for x in [e.u(), e.v()] {
            if hit[x] {
                return Ok(false);
            }
            hit[x] = true;
        }
    }
    Ok(true)
}

/// A maximum matching. Roots are tried in ascending vertex order and
/// neighbors in ascending order, so the witness is deterministic.
pub fn maximum_matching(g: &Graph) -> Matching {
    let mut search = Blossom::new(g);
    for root in 0..g.n() {
        if search.mate[root].is_none() {
            if let Some(end) = search.find_augmenting_path(root) {
                search.augment(end);
            }
        }
    }
    let edges = (0..g.n())
        .filter_map(|v| search.mate[v].filter(|&w| v < w).map(|w| Edge::new(v, w)))
        .collect();
    Matching { edges }
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<Option<usize>>,
    parent: Vec<Option<usize>>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![None; n],
            parent: vec![None; n],
            base: (0..n).collect(),
            in_tree: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    /// Lowest common ancestor of the bases of `a` and `b` in the alternating tree.
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            match self.mate[a] {
                Some(m) => a = self.parent[m].expect("matched tree vertex has a parent"),
                None => break,
            }
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            let m = self.mate[b].expect("path to root alternates");
            b = self.parent[m].expect("matched tree vertex has a parent");
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, in_blossom: &mut [bool]) {
        while self.base[v] != b {
            let m = self.mate[v].unwrap();
            in_blossom[self.base[v]] = true;
            in_blossom[self.base[m]] = true;
            self.parent[v] = Some(child);
            child = m;
            v = self.parent[m].unwrap();
        }
    }

    fn contract(&mut self, v: usize, w: usize) {
        let b = self.lca(v, w);
        let mut in_blossom = vec![false; self.g.n()];
        self.mark_path(v, b, w, &mut in_blossom);
        self.mark_path(w, b, v, &mut in_blossom);
        for x in 0..self.g.n() {
            if in_blossom[self.base[x]] {
                self.base[x] = b;
                if !self.in_tree[x] {
                    self.in_tree[x] = true;
                    self.queue.push_back(x);
                }
            }
        }
    }

    /// BFS for an augmenting path from `root`; returns its free endpoint.
    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.parent = vec![None; n];
        self.base = (0..n).collect();
        self.in_tree = vec![false; n];
        self.queue.clear();
        self.in_tree[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &w in self.g.neighbors(v) {
                if self.base[v] == self.base[w] || self.mate[v] == Some(w) {
                    continue;
                }
                let w_is_outer =
                    w == root || self.mate[w].is_some_and(|m| self.parent[m].is_some());
                if w_is_outer {
                    self.contract(v, w);
                } else if self.parent[w].is_none() {
                    self.parent[w] = Some(v);
                    match self.mate[w] {
                        None => return Some(w),
                        Some(m) => {
                            self.in_tree[m] = true;
                            self.queue.push_back(m);
                        }
                    }
                }
            }
        }
        None
    }

    fn augment(&mut self, mut w: usize) {
        loop {
            let v = self.parent[w].expect("augmenting path is rooted");
            let next = self.mate[v];
            self.mate[w] = Some(v);
            self.mate[v] = Some(w);
            match next {
                Some(x) => w = x,
                None => break,
            }
        }
    }
}
