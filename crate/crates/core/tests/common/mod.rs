//! Brute-force oracles shared by the integration tests. They avoid the
//! library's algorithms so agreement is evidence rather than tautology.

#![allow(dead_code)]

use edgestab::{Edge, Graph};

/// Every edge of `g` colored exactly once and no two incident edges share a color.
pub fn is_proper_coloring(g: &Graph, colors: &[(Edge, usize)]) -> bool {
    if colors.len() != g.edge_count() {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    for &(e, c) in colors {
        if !g.contains(e) || !seen.insert(e) {
            return false;
        }
        for &(f, d) in colors {
            if e != f && c == d && e.shares_vertex(f) {
                return false;
            }
        }
    }
    true
}

/// Largest matching: branch on the first edge, either taking it or discarding it.
pub fn matching_number(g: &Graph) -> usize {
    fn go(edges: &[Edge], used: u64) -> usize {
        let Some((first, rest)) = edges.split_first() else { return 0 };
        let bits = 1u64 << first.u() | 1u64 << first.v();
        let skip = go(rest, used);
        if used & bits == 0 {
            skip.max(1 + go(rest, used | bits))
        } else {
            skip
        }
    }
    assert!(g.n() <= 64);
    go(g.edges(), 0)
}

/// Plain depth-first search over edges in index order, trying every color.
pub fn colorable(g: &Graph, k: usize) -> bool {
    fn go(edges: &[Edge], i: usize, k: usize, color: &mut Vec<usize>) -> bool {
        if i == edges.len() {
            return true;
        }
        for c in 0..k {
            if (0..i).all(|j| color[j] != c || !edges[j].shares_vertex(edges[i])) {
                color.push(c);
                if go(edges, i + 1, k, color) {
                    return true;
                }
                color.pop();
            }
        }
        false
    }
    go(g.edges(), 0, k, &mut Vec::new())
}

pub fn chromatic_index(g: &Graph) -> usize {
    (0..).find(|&k| colorable(g, k)).unwrap()
}

/// Minimum number of edges whose removal lowers the chromatic index.
pub fn edge_stability(g: &Graph) -> usize {
    let chi = chromatic_index(g);
    let edges = g.edges();
    for size in 1..=edges.len() {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let f: Vec<Edge> = idx.iter().map(|&i| edges[i]).collect();
            if chromatic_index(&g.remove_edges(&f).unwrap()) < chi {
                return size;
            }
            // next combination
            let mut p = size;
            while p > 0 && idx[p - 1] == edges.len() - size + p - 1 {
                p -= 1;
            }
            if p == 0 {
                break;
            }
            idx[p - 1] += 1;
            for q in p..size {
                idx[q] = idx[q - 1] + 1;
            }
        }
    }
    unreachable!("removing every edge lowers the chromatic index")
}

/// Each component of the edge-induced subgraph is a star: acyclic and free of
/// three-edge paths.
pub fn is_star_forest(edges: &[Edge]) -> bool {
    let n = edges.iter().map(|e| e.v() + 1).max().unwrap_or(0);
    let h = Graph::from_edges(n, edges).unwrap();
    if !h.is_acyclic() {
        return false;
    }
    // a P4 is a middle edge whose endpoints both have another neighbor
    !edges.iter().any(|e| h.degree(e.u()) >= 2 && h.degree(e.v()) >= 2)
}

/// Graph on `n` vertices whose edges are the set bits of `mask` over the lex pair order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut pairs = Vec::new();
    let mut bit = 0;
    for a in 0..n {
        for b in a + 1..n {
            if mask >> bit & 1 == 1 {
                pairs.push((a, b));
            }
            bit += 1;
        }
    }
    Graph::from_edge_list(n, pairs).unwrap()
}
