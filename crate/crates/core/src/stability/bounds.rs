//! Constructive mitigating sets realizing the upper bounds on `es_χ'`.

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::coloring::{chromatic_index_with, EdgeClass};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::matching::maximum_matching;

use super::{MitigatingSet, Method, StabilityReport};

/// Upper bounds on `es_χ'` that apply to a particular graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityBounds {
    /// `⌊(t_Δ - 1)/2⌋`, for Class 2 graphs.
    pub class2: Option<usize>,
    /// `t_Δ` if `s = 0` and the core has no edges, else `t_Δ + ⌊(s - 1)/2⌋`.
    pub general: usize,
    /// `⌊t_Δ + t_{Δ-1}/2⌋`, the headline form of the general bound.
    pub general_headline: usize,
    /// `t_Δ - α'(G_Δ)`, exact for bipartite graphs.
    pub bipartite_formula: Option<usize>,
}

impl StabilityBounds {
    pub fn best(&self) -> usize {
        [self.class2, Some(self.general), self.bipartite_formula]
            .into_iter()
            .flatten()
            .min()
            .unwrap()
    }
}

/// `t + ⌊(s-1)/2⌋` with `⌊-1/2⌋ = -1`.
fn t_plus_half(t: usize, s: usize) -> usize {
    if s == 0 {
        t - 1
    } else {
        t + (s - 1) / 2
    }
}

pub fn stability_bounds(g: &Graph, chi: usize) -> StabilityBounds {
    let profile = g.degree_profile();
    let t = profile.t_delta();
    let core = g.core();
    let core_has_edge = core.graph.edge_count() > 0;
    let general = if profile.s == 0 && !core_has_edge { t } else { t_plus_half(t, profile.s) };
    let class2 = (chi > profile.delta).then(|| (t - 1) / 2);
    let bipartite_formula = g
        .is_bipartite()
        .then(|| t - maximum_matching(&core.graph).len());
    StabilityBounds {
        class2,
        general,
        general_headline: t + profile.t_delta_minus_one() / 2,
        bipartite_formula,
    }
}

/// Deletes one edge from a cycle of maximum-degree vertices (degree measured
/// against the original `Δ`) until those vertices induce a forest.
pub fn class2_bound_set(g: &Graph, budget: &mut Budget) -> Result<MitigatingSet> {
    g.require_edges()?;
    let delta = g.max_degree();
    if chromatic_index_with(g, budget)? == delta {
        return Err(Error::NotClass2);
    }
    let mut h = g.clone();
    let mut removed = Vec::new();
    while h.max_degree() == delta {
        let top: Vec<usize> = (0..h.n()).filter(|&v| h.degree(v) == delta).collect();
        let sub = h.induced(&top);
        let Some(cycle) = sub.graph.find_cycle() else { break };
        let e = cycle.iter().map(|&e| sub.parent_edge(e)).min().unwrap();
        h = h.remove_edges(&[e])?;
        removed.push(e);
    }
    MitigatingSet::certify(g, removed, budget)
}

/// The induction behind the general bound, run as a loop with `d = Δ(G)` fixed:
/// clear every vertex of degree `d`, preferring an edge between two such
/// vertices, then an edge to a degree-`(d-1)` neighbor, then any edge; finally
/// delete edges between degree-`(d-1)` vertices until at most one is left.
pub fn general_bound_set(g: &Graph, budget: &mut Budget) -> Result<MitigatingSet> {
    g.require_edges()?;
    let d = g.max_degree();
    let mut h = g.clone();
    let mut removed = Vec::new();
    loop {
        let pick = if let Some(&e) = h.edges_between_degree(d).first() {
            e
        } else if let Some(w) = (0..h.n()).find(|&w| h.degree(w) == d) {
            let nbrs = h.neighbors(w);
            let x = nbrs.iter().copied().find(|&x| h.degree(x) + 1 == d).unwrap_or(nbrs[0]);
            Edge::new(w, x)
        } else {
            break;
        };
        h = h.remove_edges(&[pick])?;
        removed.push(pick);
    }
    if d >= 2 {
        loop {
            let low = h.edges_between_degree(d - 1);
            if low.len() <= 1 {
                break;
            }
            h = h.remove_edges(&low[..1])?;
            removed.push(low[0]);
        }
    }
    MitigatingSet::certify(g, removed, budget)
}

/// Exact `es_χ'` for bipartite graphs: a maximum matching of the core plus one
/// edge at every unsaturated vertex of maximum degree.
pub fn bipartite_es_set(g: &Graph, budget: &mut Budget) -> Result<StabilityReport> {
    g.require_edges()?;
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    let core = g.core();
    let matching = maximum_matching(&core.graph);
    let mut edges: Vec<Edge> = matching.edges().iter().map(|&e| core.parent_edge(e)).collect();
    for (local, &w) in core.to_parent.iter().enumerate() {
        if !matching.saturates(local) {
            edges.push(Edge::new(w, g.neighbors(w)[0]));
        }
    }
    let es = core.to_parent.len() - matching.len();
    let witness = MitigatingSet::certify(g, edges, budget)?;
    debug_assert_eq!(witness.len(), es);
    let bounds = stability_bounds(g, witness.chi_before);
    Ok(StabilityReport { es, witness, method: Method::BipartiteFormula, bound_value: bounds.best() })
}

/// The constructive set for the strongest applicable theorem: the bipartite
/// formula, else the Class 2 bound, else the general bound.
pub fn mitigate(g: &Graph, budget: &mut Budget) -> Result<StabilityReport> {
    g.require_edges()?;
    if g.is_bipartite() {
        return bipartite_es_set(g, budget);
    }
    let chi = chromatic_index_with(g, budget)?;
    let class = if chi == g.max_degree() { EdgeClass::Class1 } else { EdgeClass::Class2 };
    let (witness, method) = match class {
        EdgeClass::Class2 => (class2_bound_set(g, budget)?, Method::Class2Bound),
        EdgeClass::Class1 => (general_bound_set(g, budget)?, Method::GeneralBound),
    };
    let bounds = stability_bounds(g, chi);
    Ok(StabilityReport { es: witness.len(), witness, method, bound_value: bounds.best() })
}
