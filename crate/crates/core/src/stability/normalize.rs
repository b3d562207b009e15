//! Rewriting a minimum mitigating set so every edge meets a vertex of degree
//! at least `Δ-1`, one Vizing-fan replacement at a time.

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::coloring::{is_proper, k_edge_colorable, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

use super::{is_mitigating_with, MitigatingSet};

/// `max(d(u), d(v)) ≥ Δ - 1` for the edge `e`, with `degree` taken in the original graph.
pub fn satisfies_high_degree(degree: &[usize], delta: usize, e: Edge) -> bool {
    degree[e.u()].max(degree[e.v()]) + 1 >= delta
}

/// One replacement `uv → u v_r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplacementStep {
    pub removed: Edge,
    pub inserted: Edge,
    /// The endpoint `u` shared by both edges.
    pub pivot: usize,
    /// `v = v_0, v_1, …, v_r`, all neighbors of the pivot.
    pub fan: Vec<usize>,
    /// The color `c` missing at the pivot.
    pub free_at_pivot: usize,
    /// `c_0, …, c_{r-1}`; `c_j` is missing at `v_j` and sits on `u v_{j+1}`.
    pub fan_colors: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizationTrace {
    pub steps: Vec<ReplacementStep>,
}

/// Turns a minimum mitigating set into one of the same size whose edges all
/// satisfy `max(d(u), d(v)) ≥ Δ - 1`.
///
/// For each violating edge `uv`, a `k`-edge-coloring of `G \ S` is fixed
/// (`k = χ'(G) - 1`) and a fan `v_0 = v, v_1, …` is grown at `u` until it
/// reaches a vertex of degree at least `k` in `G \ S`; `uv` is then swapped for
/// `u v_r`. Whenever the fan instead lets `uv` be colored, `S` was not minimum
/// and [`Error::NotMinimum`] carries the smaller set.
pub fn normalize_min_mitigating(
    g: &Graph,
    t: &[Edge],
    budget: &mut Budget,
) -> Result<(MitigatingSet, NormalizationTrace)> {
    let mut current = MitigatingSet::certify(g, t.to_vec(), budget)?;
    let degree = g.degrees();
    let delta = g.max_degree();
    let k = current.chi_before - 1;
    let mut trace = NormalizationTrace::default();

    while let Some(&bad) = current.edges.iter().find(|&&e| !satisfies_high_degree(&degree, delta, e)) {
        let rest = g.remove_edges(&current.edges)?;
        let coloring = k_edge_colorable(&rest, k, budget)?.ok_or(Error::NotMitigating)?;
        let mut fan = FanState::new(&rest, &coloring, k);
        let (u, v) = bad.endpoints();
        match fan.grow(u, v)? {
            FanOutcome::Replace(step) => {
                let target = g.remove_edges(&current.edges)?.add_edges(&[bad])?.remove_edges(&[step.inserted])?;
                check_coloring(&target, fan.into_coloring())?;
                let mut edges: Vec<Edge> = current.edges.iter().copied().filter(|&e| e != bad).collect();
                edges.push(step.inserted);
                current = MitigatingSet::certify(g, edges, budget)?;
                trace.steps.push(step);
            }
            FanOutcome::Colored => {
                let smaller: Vec<Edge> = current.edges.iter().copied().filter(|&e| e != bad).collect();
                check_coloring(&g.remove_edges(&smaller)?, fan.into_coloring())?;
                if !is_mitigating_with(g, &smaller, budget)? {
                    return Err(Error::Precondition("fan recoloring contradicts the exact search".into()));
                }
                return Err(Error::NotMinimum { given: current.len(), smaller });
            }
        }
    }
    Ok((current, trace))
}

fn check_coloring(g: &Graph, col: EdgeColoring) -> Result<()> {
    let complete = g.edges().iter().all(|&e| col.color(e).is_some())
        && col.assignment().len() == g.edge_count();
    if complete && is_proper(g, &col)? {
        Ok(())
    } else {
        Err(Error::Precondition("fan recoloring produced an improper coloring".into()))
    }
}

enum FanOutcome {
    Replace(ReplacementStep),
    /// The uncolored edge received a color; the state holds a coloring of `G' + uv`.
    Colored,
}

struct FanState<'a> {
    rest: &'a Graph,
    k: usize,
    colors: Vec<(Edge, usize)>,
    at: Vec<Vec<Option<usize>>>,
}

impl<'a> FanState<'a> {
    fn new(rest: &'a Graph, coloring: &EdgeColoring, k: usize) -> Self {
        let mut at = vec![vec![None; k]; rest.n()];
        for &(e, c) in coloring.assignment() {
            at[e.u()][c] = Some(e.v());
            at[e.v()][c] = Some(e.u());
        }
        FanState { rest, k, colors: coloring.assignment().to_vec(), at }
    }

    fn free(&self, x: usize, c: usize) -> bool {
        self.at[x][c].is_none()
    }

    fn first_free(&self, x: usize) -> Option<usize> {
        (0..self.k).find(|&c| self.free(x, c))
    }

    fn color_of(&self, a: usize, b: usize) -> Option<usize> {
        let e = Edge::new(a, b);
        self.colors.iter().find(|(f, _)| *f == e).map(|&(_, c)| c)
    }

    fn uncolor(&mut self, a: usize, b: usize) {
        let e = Edge::new(a, b);
        if let Some(pos) = self.colors.iter().position(|(f, _)| *f == e) {
            let (_, c) = self.colors.swap_remove(pos);
            self.at[a][c] = None;
            self.at[b][c] = None;
        }
    }

    fn paint(&mut self, a: usize, b: usize, c: usize) {
        self.colors.push((Edge::new(a, b), c));
        self.at[a][c] = Some(b);
        self.at[b][c] = Some(a);
    }

    /// Vertices of the alternating path leaving `start` along `first`, then `second`, …
    fn path(&self, start: usize, first: usize, second: usize) -> Vec<usize> {
        let mut verts = vec![start];
        let (mut x, mut want) = (start, first);
        while let Some(y) = self.at[x][want] {
            verts.push(y);
            x = y;
            want = if want == first { second } else { first };
        }
        verts
    }

    fn swap_path(&mut self, verts: &[usize], first: usize, second: usize) {
        let mut changes = Vec::new();
        for (i, w) in verts.windows(2).enumerate() {
            let old = if i % 2 == 0 { first } else { second };
            let new = if old == first { second } else { first };
            changes.push((w[0], w[1], new));
        }
        for &(a, b, _) in &changes {
            self.uncolor(a, b);
        }
        for &(a, b, c) in &changes {
            self.paint(a, b, c);
        }
    }

    fn is_fan(&self, u: usize, fan: &[usize]) -> bool {
        fan.windows(2).all(|w| self.color_of(u, w[1]).is_some_and(|c| self.free(w[0], c)))
    }

    /// Shift colors down the fan prefix `fan[..=w]` (`u fan[j]` takes the color of
    /// `u fan[j+1]`) and give `u fan[w]` the color `last`, or drop it when `None`.
    fn rotate(&mut self, u: usize, fan: &[usize], w: usize, last: Option<usize>) {
        let mut changes: Vec<(usize, usize)> = (0..w)
            .map(|j| (fan[j], self.color_of(u, fan[j + 1]).expect("fan edge is colored")))
            .collect();
        for &x in &fan[1..=w] {
            self.uncolor(u, x);
        }
        if let Some(c) = last {
            changes.push((fan[w], c));
        }
        for (x, c) in changes {
            self.paint(u, x, c);
        }
    }

    fn grow(&mut self, u: usize, v: usize) -> Result<FanOutcome> {
        let c = self
            .first_free(u)
            .ok_or_else(|| Error::Precondition(format!("no color missing at {u}")))?;
        let mut fan = vec![v];
        let mut fan_colors: Vec<usize> = Vec::new();
        loop {
            let i = fan.len() - 1;
            let vi = fan[i];
            if self.rest.degree(vi) >= self.k {
                let step = ReplacementStep {
                    removed: Edge::new(u, v),
                    inserted: Edge::new(u, vi),
                    pivot: u,
                    fan: fan.clone(),
                    free_at_pivot: c,
                    fan_colors,
                };
                self.rotate(u, &fan, i, None);
                return Ok(FanOutcome::Replace(step));
            }
            let ci = self.first_free(vi).expect("degree below k leaves a free color");
            if self.free(u, ci) {
                self.rotate(u, &fan, i, Some(ci));
                return Ok(FanOutcome::Colored);
            }
            if self.free(vi, c) {
                self.rotate(u, &fan, i, Some(c));
                return Ok(FanOutcome::Colored);
            }
            let path = self.path(u, ci, c);
            if *path.last().unwrap() != vi {
                self.swap_path(&path, ci, c);
                let w = (0..=i)
                    .find(|&w| self.free(fan[w], ci) && self.is_fan(u, &fan[..=w]))
                    .ok_or_else(|| Error::Precondition("no rotatable fan prefix".into()))?;
                self.rotate(u, &fan, w, Some(ci));
                return Ok(FanOutcome::Colored);
            }
            if fan_colors.contains(&ci) {
                return Err(Error::Precondition("fan colors repeated despite alternating paths".into()));
            }
            fan_colors.push(ci);
            fan.push(self.at[u][ci].expect("ci is used at u"));
        }
    }

    fn into_coloring(self) -> EdgeColoring {
        EdgeColoring::new(self.k, self.colors)
    }
}
