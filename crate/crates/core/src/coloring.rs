//! Proper edge colorings: Vizing's constructive `Δ+1` coloring, the exact
//! `k`-edge-colorability search, and Class 1 / Class 2 classification.

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// A color index in `0..k` for every edge of some graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColoring {
    k: usize,
    /// Sorted by edge.
    assignment: Vec<(Edge, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeClass {
    Class1,
    Class2,
}

impl EdgeColoring {
    pub fn new(k: usize, mut assignment: Vec<(Edge, usize)>) -> Self {
        assignment.sort_unstable();
        EdgeColoring { k, assignment }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn assignment(&self) -> &[(Edge, usize)] {
        &self.assignment
    }

    pub fn color(&self, e: Edge) -> Option<usize> {
        self.assignment
            .binary_search_by(|(f, _)| f.cmp(&e))
            .ok()
            .map(|i| self.assignment[i].1)
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        let mut seen: Vec<usize> = self.assignment.iter().map(|&(_, c)| c).collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

/// True iff no two edges sharing a vertex have the same color and every color is below `k`.
pub fn is_proper(g: &Graph, col: &EdgeColoring) -> Result<bool> {
    let mut seen = vec![Vec::<usize>::new(); g.n()];
    for &e in g.edges() {
        let c = col.color(e).ok_or(Error::MissingColor(e))?;
        if c >= col.k() {
            return Ok(false);
        }
        for x in [e.u(), e.v()] {
            if seen[x].contains(&c) {
                return Ok(false);
            }
            seen[x].push(c);
        }
    }
    Ok(true)
}

/// Fournier: an acyclic core forces Class 1. `false` is inconclusive.
pub fn fournier_class1(g: &Graph) -> bool {
    g.core().graph.is_acyclic()
}

/// Colors `g` with at most `Δ+1` colors using fan rotations and Kempe-chain swaps
/// (the Misra–Gries form of Vizing's proof).
pub fn vizing_color(g: &Graph) -> Result<EdgeColoring> {
    g.require_edges()?;
    let k = g.max_degree() + 1;
    let mut state = VizingState {
        g,
        color: vec![None; g.edge_count()],
        at: vec![vec![None; k]; g.n()],
    };
    for &e in g.edges() {
        state.color_edge(e);
    }
    let assignment = g
        .edges()
        .iter()
        .zip(&state.color)
        .map(|(&e, c)| (e, c.expect("every edge colored")))
        .collect();
    Ok(EdgeColoring::new(k, assignment))
}

struct VizingState<'a> {
    g: &'a Graph,
    color: Vec<Option<usize>>,
    // at[v][c] = neighbor joined to v by the edge of color c
    at: Vec<Vec<Option<usize>>>,
}

impl VizingState<'_> {
    fn edge_color(&self, a: usize, b: usize) -> Option<usize> {
        self.color[self.g.edge_index(Edge::new(a, b)).unwrap()]
    }

    fn is_free(&self, v: usize, c: usize) -> bool {
        self.at[v][c].is_none()
    }

    fn first_free(&self, v: usize) -> usize {
        self.at[v].iter().position(Option::is_none).expect("Δ+1 colors leave one free")
    }

    fn set(&mut self, a: usize, b: usize, c: Option<usize>) {
        let idx = self.g.edge_index(Edge::new(a, b)).unwrap();
        if let Some(old) = self.color[idx] {
            self.at[a][old] = None;
            self.at[b][old] = None;
        }
        self.color[idx] = c;
        if let Some(c) = c {
            self.at[a][c] = Some(b);
            self.at[b][c] = Some(a);
        }
    }

    /// Apply a batch of recolorings without transient conflicts.
    fn recolor(&mut self, changes: &[(usize, usize, usize)]) {
        for &(a, b, _) in changes {
            self.set(a, b, None);
        }
        for &(a, b, c) in changes {
            self.set(a, b, Some(c));
        }
    }

    fn is_fan(&self, u: usize, fan: &[usize]) -> bool {
        fan.windows(2).all(|w| match self.edge_color(u, w[1]) {
            Some(c) => self.is_free(w[0], c),
            None => false,
        })
    }

    fn color_edge(&mut self, e: Edge) {
        let (u, v) = e.endpoints();
        let mut fan = vec![v];
        loop {
            let last = *fan.last().unwrap();
            let next = self.g.neighbors(u).iter().copied().find(|&w| {
                !fan.contains(&w)
                    && self.edge_color(u, w).is_some_and(|c| self.is_free(last, c))
            });
            match next {
                Some(w) => fan.push(w),
                None => break,
            }
        }
        let c = self.first_free(u);
        let d = self.first_free(*fan.last().unwrap());

        // Invert the cd-path starting at u (its first edge has color d).
        let mut path = Vec::new();
        let (mut x, mut want) = (u, d);
        while let Some(y) = self.at[x][want] {
            path.push((x, y, if want == c { d } else { c }));
            x = y;
            want = if want == c { d } else { c };
        }
        self.recolor(&path);

        let w = (0..fan.len())
            .find(|&i| self.is_free(fan[i], d) && self.is_fan(u, &fan[..=i]))
            .expect("Misra-Gries guarantees a rotatable sub-fan");
        let mut changes = Vec::with_capacity(w + 1);
        for j in 0..w {
            let shifted = self.edge_color(u, fan[j + 1]).unwrap();
            changes.push((u, fan[j], shifted));
        }
        changes.push((u, fan[w], d));
        self.recolor(&changes);
    }
}

/// Exact decision: a proper `k`-edge-coloring if one exists.
///
/// Exhaustive backtracking per connected component. Edges are visited by
/// descending maximum endpoint degree, ties in canonical order, and a color
/// not yet used anywhere may only be the smallest unused index. Two sound
/// necessary conditions (`Δ ≤ k`, no overfull odd subgraph) are checked first.
pub fn k_edge_colorable(g: &Graph, k: usize, budget: &mut Budget) -> Result<Option<EdgeColoring>> {
    if g.edge_count() == 0 {
        return Ok(Some(EdgeColoring::new(k, Vec::new())));
    }
    if g.max_degree() > k || has_overfull_subgraph(g.n(), g.edges(), k) {
        return Ok(None);
    }
    let mut assignment = Vec::with_capacity(g.edge_count());
    for comp in g.connected_components() {
        if comp.len() < 2 {
            continue;
        }
        let sub = g.induced(&comp);
        match backtrack(&sub.graph, k, budget)? {
            Some(colors) => {
                for (e, c) in sub.graph.edges().iter().zip(colors) {
                    assignment.push((sub.parent_edge(*e), c));
                }
            }
            None => return Ok(None),
        }
    }
    Ok(Some(EdgeColoring::new(k, assignment)))
}

/// `χ'(G)`, using Fournier's condition as a fast path before the exact search.
pub fn chromatic_index(g: &Graph) -> Result<usize> {
    chromatic_index_with(g, &mut Budget::unlimited())
}

pub fn chromatic_index_with(g: &Graph, budget: &mut Budget) -> Result<usize> {
    g.require_edges()?;
    let delta = g.max_degree();
    if colorable_within(g, delta, budget)? {
        Ok(delta)
    } else {
        Ok(delta + 1)
    }
}

/// `χ'` extended by `χ'(edgeless) = 0`.
pub(crate) fn chromatic_index_or_zero(g: &Graph, budget: &mut Budget) -> Result<usize> {
    if g.edge_count() == 0 {
        Ok(0)
    } else {
        chromatic_index_with(g, budget)
    }
}

pub fn classify(g: &Graph) -> Result<EdgeClass> {
    classify_with(g, &mut Budget::unlimited())
}

pub fn classify_with(g: &Graph, budget: &mut Budget) -> Result<EdgeClass> {
    if chromatic_index_with(g, budget)? == g.max_degree() {
        Ok(EdgeClass::Class1)
    } else {
        Ok(EdgeClass::Class2)
    }
}

/// Whether `χ'(g) ≤ k`, short-circuiting through Vizing's and Fournier's theorems.
pub(crate) fn colorable_within(g: &Graph, k: usize, budget: &mut Budget) -> Result<bool> {
    let delta = g.max_degree();
    if g.edge_count() == 0 || delta < k {
        return Ok(true);
    }
    if delta > k {
        return Ok(false);
    }
    if fournier_class1(g) {
        return Ok(true);
    }
    Ok(k_edge_colorable(g, k, budget)?.is_some())
}

/// Some odd vertex set `S` spans more than `k·(|S|-1)/2` edges, so no `k`-edge-coloring exists.
///
/// Odd vertex subsets are enumerated for graphs on at most 12 vertices; larger
/// graphs only test whole components.
pub(crate) fn has_overfull_subgraph(n: usize, edges: &[Edge], k: usize) -> bool {
    if n <= 12 {
        let mut adj = vec![0u32; n];
        for e in edges {
            adj[e.u()] |= 1 << e.v();
            adj[e.v()] |= 1 << e.u();
        }
        let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
        let mut s: u32 = 1;
        while s <= full {
            let size = s.count_ones() as usize;
            if size >= 3 && size % 2 == 1 {
                let mut twice = 0usize;
                let mut rest = s;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    twice += (adj[v] & s).count_ones() as usize;
                }
                if twice / 2 > k * (size - 1) / 2 {
                    return true;
                }
            }
            s += 1;
        }
        return false;
    }
    let g = Graph::from_canonical(n, edges.to_vec());
    g.connected_components().iter().any(|comp| {
        let m = g.induced(comp).graph.edge_count();
        m > k * (comp.len() / 2)
    })
}

/// Canonical backtracking over one connected graph; returns colors aligned with `g.edges()`.
fn backtrack(g: &Graph, k: usize, budget: &mut Budget) -> Result<Option<Vec<usize>>> {
    if k > 128 {
        return Err(Error::Precondition(format!("exact search supports at most 128 colors, got {k}")));
    }
    let m = g.edge_count();
    let mut order: Vec<usize> = (0..m).collect();
    let edges = g.edges();
    let key = |i: usize| g.degree(edges[i].u()).max(g.degree(edges[i].v()));
    order.sort_by(|&a, &b| key(b).cmp(&key(a)).then(edges[a].cmp(&edges[b])));

    let mut position = vec![0; m];
    for (p, &i) in order.iter().enumerate() {
        position[i] = p;
    }
    // For each step, the later steps whose edges share an endpoint with it.
    let mut later: Vec<Vec<usize>> = vec![Vec::new(); m];
    for p in 0..m {
        let e = edges[order[p]];
        for x in [e.u(), e.v()] {
            for &y in g.neighbors(x) {
                let q = position[g.edge_index(Edge::new(x, y)).unwrap()];
                if q > p {
                    later[p].push(q);
                }
            }
        }
    }
    let ends: Vec<(usize, usize)> = order.iter().map(|&i| edges[i].endpoints()).collect();

    let mut search = Backtracker {
        full: if k == 128 { u128::MAX } else { (1u128 << k) - 1 },
        ends,
        later,
        used: vec![0u128; g.n()],
        colors: vec![usize::MAX; m],
        budget,
    };
    if search.run(0, 0)? {
        let mut out = vec![0; m];
        for (p, &i) in order.iter().enumerate() {
            out[i] = search.colors[p];
        }
        Ok(Some(out))
    } else {
        Ok(None)
    }
}

struct Backtracker<'b> {
    full: u128,
    ends: Vec<(usize, usize)>,
    later: Vec<Vec<usize>>,
    used: Vec<u128>,
    colors: Vec<usize>,
    budget: &'b mut Budget,
}

impl Backtracker<'_> {
    fn available(&self, p: usize) -> u128 {
        let (u, v) = self.ends[p];
        !(self.used[u] | self.used[v]) & self.full
    }

    // `fresh` is the number of distinct colors used so far (colors 0..fresh).
    fn run(&mut self, p: usize, fresh: usize) -> Result<bool> {
        if p == self.ends.len() {
            return Ok(true);
        }
        self.budget.tick()?;
        let (u, v) = self.ends[p];
        let allowed = if fresh >= 127 { self.full } else { (1u128 << (fresh + 1)) - 1 };
        let mut avail = self.available(p) & allowed;
        while avail != 0 {
            let c = avail.trailing_zeros() as usize;
            avail &= avail - 1;
            let bit = 1u128 << c;
            self.used[u] |= bit;
            self.used[v] |= bit;
            self.colors[p] = c;
            let dead_end = self.later[p].iter().any(|&q| self.available(q) == 0);
            if !dead_end && self.run(p + 1, fresh.max(c + 1))? {
                return Ok(true);
            }
            self.used[u] &= !bit;
            self.used[v] &= !bit;
        }
        self.colors[p] = usize::MAX;
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, pairs: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, pairs.iter().copied()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn petersen() -> Graph {
        let mut pairs = Vec::new();
        for i in 0..5 {
            pairs.push((i, (i + 1) % 5));
            pairs.push((5 + i, 5 + (i + 2) % 5));
            pairs.push((i, i + 5));
        }
        graph(10, &pairs)
    }

    fn k33() -> Graph {
        let pairs: Vec<_> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
        graph(6, &pairs)
    }

    #[test]
    fn properness() {
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        let same = EdgeColoring::new(2, vec![(Edge::new(0, 1), 0), (Edge::new(1, 2), 0)]);
        assert!(!is_proper(&p3, &same).unwrap());
        let single = graph(2, &[(0, 1)]);
        assert!(is_proper(&single, &EdgeColoring::new(1, vec![(Edge::new(0, 1), 0)])).unwrap());
        let partial = EdgeColoring::new(2, vec![(Edge::new(0, 1), 0)]);
        assert_eq!(is_proper(&p3, &partial), Err(Error::MissingColor(Edge::new(1, 2))));
    }

    #[test]
    fn vizing_examples() {
        for g in [petersen(), cycle(5), k33()] {
            let col = vizing_color(&g).unwrap();
            assert!(is_proper(&g, &col).unwrap());
            assert!(col.colors_used() <= g.max_degree() + 1);
        }
    }

    #[test]
    fn exact_decisions() {
        let p = petersen();
        assert!(k_edge_colorable(&p, 3, &mut Budget::unlimited()).unwrap().is_none());
        let four = k_edge_colorable(&p, 4, &mut Budget::unlimited()).unwrap().unwrap();
        assert!(is_proper(&p, &four).unwrap());
        let three = k_edge_colorable(&k33(), 3, &mut Budget::unlimited()).unwrap().unwrap();
        assert!(is_proper(&k33(), &three).unwrap());
    }

    #[test]
    fn indices_and_classes() {
        let k5 = Graph::from_edge_list(5, (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b)))).unwrap();
        assert_eq!(chromatic_index(&petersen()).unwrap(), 4);
        assert_eq!(chromatic_index(&k5).unwrap(), 5);
        assert_eq!(chromatic_index(&k33()).unwrap(), 3);
        assert_eq!(classify(&petersen()).unwrap(), EdgeClass::Class2);
        assert_eq!(classify(&k33()).unwrap(), EdgeClass::Class1);
        assert_eq!(chromatic_index(&Graph::empty(3)), Err(Error::NoEdges));
    }

    #[test]
    fn fournier() {
        assert!(fournier_class1(&graph(4, &[(0, 1), (0, 2), (0, 3)])));
        assert!(!fournier_class1(&petersen()));
    }

    #[test]
    fn budget_is_a_distinct_error() {
        let mut tiny = Budget::steps(3);
        let res = k_edge_colorable(&petersen(), 3, &mut tiny);
        assert_eq!(res, Err(Error::BudgetExceeded(3)));
    }

    #[test]
    fn overfull_detection() {
        let k5 = Graph::from_edge_list(5, (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b)))).unwrap();
        assert!(has_overfull_subgraph(5, k5.edges(), 4));
        assert!(!has_overfull_subgraph(10, petersen().edges(), 3));
    }
}
