//! Isomorphism-free enumeration of small graphs.
//!
//! Canonical forms come from an individualization–refinement search: the
//! ordered partition is refined to an equitable one, the first smallest
//! non-singleton cell is individualized vertex by vertex, and the largest
//! adjacency code over all discrete leaves is the canonical code. The tree is
//! explored in full, so the cost grows with the automorphism group; that is
//! fine up to about ten vertices.

use std::collections::HashSet;

use crate::graph::{Edge, Graph};

/// Largest vertex count supported by the bitmask representation.
pub const MAX_CENSUS_N: usize = 16;

/// Upper-triangle adjacency bits of `adj` under `label`, read row by row.
fn code_under(adj: &[u16], order: &[usize]) -> u128 {
    let n = order.len();
    let mut code = 0u128;
    for i in 0..n {
        let row = adj[order[i]];
        for &w in &order[i + 1..n] {
            code = (code << 1) | ((row >> w) & 1) as u128;
        }
    }
    code
}

fn refine(adj: &[u16], cells: &mut Vec<Vec<usize>>) {
    loop {
        let masks: Vec<u16> = cells.iter().map(|c| c.iter().fold(0, |m, &v| m | 1 << v)).collect();
        let mut split_at = None;
        for (ci, cell) in cells.iter().enumerate() {
            if cell.len() < 2 {
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|&m| (adj[v] & m).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            if keyed.first().map(|k| &k.0) != keyed.last().map(|k| &k.0) {
                let mut parts: Vec<Vec<usize>> = Vec::new();
                for (i, (key, v)) in keyed.iter().enumerate() {
                    if i == 0 || keyed[i - 1].0 != *key {
                        parts.push(Vec::new());
                    }
                    parts.last_mut().unwrap().push(*v);
                }
                split_at = Some((ci, parts));
                break;
            }
        }
        match split_at {
            Some((ci, parts)) => {
                cells.splice(ci..=ci, parts);
            }
            None => return,
        }
    }
}

fn search(adj: &[u16], mut cells: Vec<Vec<usize>>, best: &mut Option<(u128, Vec<usize>)>) {
    refine(adj, &mut cells);
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i);
    match target {
        None => {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let code = code_under(adj, &order);
            if best.as_ref().is_none_or(|(b, _)| code > *b) {
                *best = Some((code, order));
            }
        }
        Some(ti) => {
            for &v in &cells[ti] {
                let mut next = cells.clone();
                let rest: Vec<usize> = cells[ti].iter().copied().filter(|&w| w != v).collect();
                next.splice(ti..=ti, [vec![v], rest]);
                search(adj, next, best);
            }
        }
    }
}

fn adjacency_masks(g: &Graph) -> Vec<u16> {
    let mut adj = vec![0u16; g.n()];
    for e in g.edges() {
        adj[e.u()] |= 1 << e.v();
        adj[e.v()] |= 1 << e.u();
    }
    adj
}

/// Canonical code and the vertex order realizing it (`order[i]` gets label `i`).
fn canonical_code(adj: &[u16]) -> (u128, Vec<usize>) {
    let n = adj.len();
    if n == 0 {
        return (0, Vec::new());
    }
    let mut best = None;
    search(adj, vec![(0..n).collect()], &mut best);
    best.expect("search reaches at least one leaf")
}

/// The canonically relabeled copy of `g`; isomorphic graphs map to equal graphs.
pub fn canonical_form(g: &Graph) -> Graph {
    assert!(g.n() <= MAX_CENSUS_N, "canonical_form supports at most {MAX_CENSUS_N} vertices");
    let (_, order) = canonical_code(&adjacency_masks(g));
    let mut perm = vec![0; g.n()];
    for (label, &v) in order.iter().enumerate() {
        perm[v] = label;
    }
    g.relabel(&perm)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

/// One representative of every isomorphism class of graphs on `n` vertices,
/// edgeless graph included, in canonical form and sorted by edge count then edges.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 10, "exhaustive census is limited to 10 vertices");
    let mut level: Vec<Vec<u16>> = vec![vec![]];
    for size in 1..=n {
        let new = size - 1;
        let mut seen: HashSet<u128> = HashSet::new();
        let mut next = Vec::new();
        for adj in &level {
            let degs: Vec<u32> = adj.iter().map(|m| m.count_ones()).collect();
            for nbrs in 0u16..(1 << new) {
                // Every graph arises by deleting a vertex of maximum degree.
                let d = nbrs.count_ones();
                if (0..new).any(|w| degs[w] + ((nbrs >> w) & 1) as u32 > d) {
                    continue;
                }
                let mut ext = adj.clone();
                for (w, m) in ext.iter_mut().enumerate() {
                    if (nbrs >> w) & 1 == 1 {
                        *m |= 1 << new;
                    }
                }
                ext.push(nbrs);
                let (code, order) = canonical_code(&ext);
                if seen.insert(code) {
                    let mut canon = vec![0u16; size];
                    let mut pos = vec![0; size];
                    for (label, &v) in order.iter().enumerate() {
                        pos[v] = label;
                    }
                    for v in 0..size {
                        let mut row = 0u16;
                        for (w, &pw) in pos.iter().enumerate() {
                            if (ext[v] >> w) & 1 == 1 {
                                row |= 1 << pw;
                            }
                        }
                        canon[pos[v]] = row;
                    }
                    next.push(canon);
                }
            }
        }
        level = next;
    }
    let mut graphs: Vec<Graph> = level
        .iter()
        .map(|adj| {
            let edges = (0..n)
                .flat_map(|a| (a + 1..n).filter(move |&b| (adj[a] >> b) & 1 == 1).map(move |b| Edge::new(a, b)))
                .collect();
            Graph::from_canonical(n, edges)
        })
        .collect();
    graphs.sort_by(|a, b| a.edge_count().cmp(&b.edge_count()).then_with(|| a.edges().cmp(b.edges())));
    graphs
}

/// Connected representatives with at least one edge.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(|g| g.edge_count() > 0 && g.is_connected()).collect()
}
