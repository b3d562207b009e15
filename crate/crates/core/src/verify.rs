//! Self-checking suites behind `edgestab verify`.
//!
//! Each suite replays one family of results on exhaustive small-graph
//! censuses, seeded random graphs and the named constructions, and reports one
//! [`Check`] per property.

use serde::Serialize;

use crate::budget::Budget;
use crate::census::{all_graphs, connected_graphs};
use crate::coloring::{
    chromatic_index, classify, is_proper, k_edge_colorable, vizing_color, EdgeClass,
};
use crate::error::Result;
use crate::generators::{
    complete_minus_matching, petersen, prop_counterexample, prop_counterexample_pairs, q_chain,
    random_bipartite, random_graph, remark5, remark8_union,
};
use crate::graph::{Edge, Graph};
use crate::io::{parse_graph6, write_graph6};
use crate::matching::maximum_matching;
use crate::stability::{
    bipartite_es_set, class2_bound_set, exact_es, general_bound_set, is_mitigating,
    minimum_mitigating_sets, normalize_min_mitigating, recognize_core3_class2,
    satisfies_high_degree, stability_bounds, ExactOptions,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Thm4,
    Thm7,
    Thm9,
    Sec3,
    Prop11,
    Coloring,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Thm4, Suite::Thm7, Suite::Thm9, Suite::Sec3, Suite::Prop11, Suite::Coloring];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Thm4 => "thm4",
            Suite::Thm7 => "thm7",
            Suite::Thm9 => "thm9",
            Suite::Sec3 => "sec3",
            Suite::Prop11 => "prop11",
            Suite::Coloring => "coloring",
        }
    }

    /// `all` expands to every suite.
    pub fn parse(name: &str) -> Option<Vec<Suite>> {
        if name == "all" {
            return Some(Suite::ALL.to_vec());
        }
        Suite::ALL.iter().copied().find(|s| s.name() == name).map(|s| vec![s])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub detail: String,
}

/// How much of each census and random corpus a run covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Scale {
    /// Largest order for the exhaustive censuses.
    pub census_max: usize,
    /// Largest order for the pruning comparison and the three-vertex-core check.
    pub wide_census_max: usize,
    pub random_graphs: usize,
    pub random_max_n: usize,
    pub normalize_samples: usize,
    pub seed: u64,
}

impl Scale {
    pub fn quick() -> Scale {
        Scale {
            census_max: 6,
            wide_census_max: 7,
            random_graphs: 40,
            random_max_n: 10,
            normalize_samples: 30,
            seed: 0,
        }
    }

    pub fn full() -> Scale {
        Scale {
            census_max: 8,
            wide_census_max: 9,
            random_graphs: 200,
            random_max_n: 12,
            normalize_samples: 100,
            seed: 0,
        }
    }
}

struct Tally {
    suite: &'static str,
    name: String,
    cases: usize,
    failures: Vec<String>,
    note: Option<String>,
}

impl Tally {
    fn new(suite: Suite, name: &str) -> Tally {
        Tally { suite: suite.name(), name: name.to_string(), cases: 0, failures: Vec::new(), note: None }
    }

    fn record(&mut self, g: &Graph, outcome: Result<bool>, what: &str) {
        self.cases += 1;
        match outcome {
            Ok(true) => {}
            Ok(false) => self.failures.push(format!("{what} fails on {}", write_graph6(g))),
            Err(e) => self.failures.push(format!("{what} errored on {}: {e}", write_graph6(g))),
        }
    }

    fn finish(self) -> Check {
        let passed = self.failures.is_empty();
        let mut detail = match self.failures.first() {
            None => format!("{} cases", self.cases),
            Some(first) => format!("{} of {} cases failed; first: {first}", self.failures.len(), self.cases),
        };
        if let Some(note) = self.note {
            detail = format!("{detail} ({note})");
        }
        Check { suite: self.suite, name: self.name, passed, cases: self.cases, detail }
    }
}

/// Connected census graphs on `2..=max` vertices, passed through graph6.
pub fn connected_census(max: usize) -> Vec<Graph> {
    (2..=max)
        .flat_map(connected_graphs)
        .map(|g| parse_graph6(&write_graph6(&g)).expect("writer output parses"))
        .collect()
}

/// Census graphs on `2..=max` vertices with at least one edge.
pub fn nonempty_census(max: usize) -> Vec<Graph> {
    (2..=max).flat_map(all_graphs).filter(|g| g.edge_count() > 0).collect()
}

const DENSITIES: [f64; 4] = [0.25, 0.4, 0.55, 0.7];

pub fn random_corpus(scale: &Scale) -> Vec<Graph> {
    (0..scale.random_graphs)
        .map(|i| {
            let n = 3 + i % (scale.random_max_n - 2);
            random_graph(n, DENSITIES[i % 4], scale.seed + i as u64).expect("valid parameters")
        })
        .collect()
}

pub fn random_bipartite_corpus(scale: &Scale) -> Vec<Graph> {
    let half = scale.random_max_n / 2;
    (0..scale.random_graphs)
        .map(|i| {
            let n1 = 1 + i % half;
            let n2 = 1 + (i / half) % half;
            random_bipartite(n1, n2, DENSITIES[i % 4], scale.seed + i as u64).expect("valid parameters")
        })
        .collect()
}

/// `t_Δ + ⌊(t_{Δ-1}-1)/2⌋` if `t_{Δ-1} ≥ 1`, else `t_Δ - 1` when the core has
/// an edge and `t_Δ` when it does not.
pub fn general_bound_by_profile(g: &Graph) -> usize {
    let p = g.degree_profile();
    let t = p.t_delta();
    let t1 = p.t_delta_minus_one();
    if t1 >= 1 {
        t + (t1 - 1) / 2
    } else if g.core().graph.edge_count() > 0 {
        t - 1
    } else {
        t
    }
}

/// Every component of the edge-induced subgraph is a star.
pub fn is_star_forest(n: usize, edges: &[Edge]) -> bool {
    let mut deg = vec![0usize; n];
    for e in edges {
        deg[e.u()] += 1;
        deg[e.v()] += 1;
    }
    edges.iter().all(|e| deg[e.u()] == 1 || deg[e.v()] == 1)
}

/// Largest matching by exhaustive branching on the first remaining edge.
pub fn brute_force_matching_number(g: &Graph) -> usize {
    fn go(edges: &[Edge], used: u64) -> usize {
        match edges.iter().position(|e| used & (1 << e.u()) == 0 && used & (1 << e.v()) == 0) {
            None => 0,
            Some(i) => {
                let e = edges[i];
                let take = 1 + go(&edges[i + 1..], used | 1 << e.u() | 1 << e.v());
                take.max(go(&edges[i + 1..], used))
            }
        }
    }
    assert!(g.n() <= 64);
    go(g.edges(), 0)
}

fn exact(g: &Graph, prune: bool) -> Result<usize> {
    Ok(exact_es(g, ExactOptions { prune_by_degree: prune }, &mut Budget::unlimited())?.es)
}

pub fn run(suite: Suite, scale: &Scale) -> Vec<Check> {
    match suite {
        Suite::Thm4 => thm4(scale),
        Suite::Thm7 => thm7(scale),
        Suite::Thm9 => thm9(scale),
        Suite::Sec3 => sec3(scale),
        Suite::Prop11 => prop11(),
        Suite::Coloring => coloring(scale),
    }
}

fn thm4(scale: &Scale) -> Vec<Check> {
    let s = Suite::Thm4;
    let mut out = Vec::new();

    let p = petersen();
    let mut t = Tally::new(s, "petersen chi=4, es=2, no single mitigating edge");
    t.record(&p, chromatic_index(&p).map(|c| c == 4), "chi = 4");
    t.record(&p, exact(&p, false).map(|es| es == 2), "es = 2");
    for &e in p.edges() {
        t.record(&p, is_mitigating(&p, &[e]).map(|m| !m), "single edge not mitigating");
    }
    out.push(t.finish());

    let mut t = Tally::new(s, "K_{2n+1} minus s-matching: es = n - s, class2 set within bound");
    for n in 2..=3 {
        for k in 0..n {
            let g = complete_minus_matching(n, k).expect("valid parameters");
            t.record(&g, exact(&g, false).map(|es| es == n - k), "es = n - s");
            let bound = (g.degree_profile().t_delta() - 1) / 2;
            t.record(
                &g,
                class2_bound_set(&g, &mut Budget::unlimited()).map(|f| f.len() <= bound),
                "class2 set size",
            );
        }
    }
    out.push(t.finish());

    let mut t = Tally::new(s, "remark5(k): es = k - 1");
    for k in 2..=3 {
        let g = remark5(k).expect("valid parameters");
        t.record(&g, exact(&g, false).map(|es| es == k - 1), "es = k - 1");
    }
    out.push(t.finish());

    let mut t = Tally::new(s, "class2 set mitigating and within bound on Class 2 census graphs");
    for g in connected_census(scale.census_max) {
        if classify(&g).ok() != Some(EdgeClass::Class2) {
            continue;
        }
        let bound = (g.degree_profile().t_delta() - 1) / 2;
        t.record(&g, class2_bound_set(&g, &mut Budget::unlimited()).map(|f| f.len() <= bound), "class2 set");
    }
    out.push(t.finish());
    out
}

fn thm7(scale: &Scale) -> Vec<Check> {
    let s = Suite::Thm7;
    let mut out = Vec::new();

    let mut t = Tally::new(s, "general set mitigating and within bound (census and random)");
    for g in connected_census(scale.census_max).into_iter().chain(random_corpus(scale)) {
        let outcome = general_bound_set(&g, &mut Budget::unlimited()).map(|f| {
            let by_s = stability_bounds(&g, f.chi_before).general;
            f.len() <= by_s && by_s <= general_bound_by_profile(&g)
        });
        t.record(&g, outcome, "general set");
    }
    out.push(t.finish());

    let mut t = Tally::new(s, "bound attained on remark8 unions");
    let t_max = if scale.census_max >= 8 { 3 } else { 2 };
    for copies in 1..=t_max {
        for k in 0..=5 {
            let g = remark8_union(copies, k).expect("valid parameters");
            t.record(&g, exact(&g, false).map(|es| es == general_bound_by_profile(&g)), "es = bound");
        }
    }
    out.push(t.finish());

    let mut t = Tally::new(s, "bound attained when t_{D-1} = 0 and the core is edgeless");
    for g in connected_census(scale.census_max) {
        let p = g.degree_profile();
        if p.t_delta_minus_one() == 0 && g.core().graph.edge_count() == 0 {
            t.record(&g, exact(&g, false).map(|es| es == p.t_delta()), "es = t_D");
        }
    }
    out.push(t.finish());

    let mut t = Tally::new(s, "q_chain: es(1) < es(2), both within the general bound");
    let q1 = q_chain(1).expect("valid parameters");
    let q2 = q_chain(2).expect("valid parameters");
    let es1 = exact(&q1, false);
    let es2 = exact(&q2, false);
    t.record(&q1, es1.clone().map(|e| e <= general_bound_by_profile(&q1)), "es within bound");
    t.record(&q2, es2.clone().map(|e| e <= general_bound_by_profile(&q2)), "es within bound");
    t.record(&q2, es1.and_then(|a| es2.map(|b| a < b)), "es grows along the chain");
    out.push(t.finish());
    out
}

fn bipartite_corpus(scale: &Scale) -> Vec<Graph> {
    connected_census(scale.census_max)
        .into_iter()
        .filter(Graph::is_bipartite)
        .chain(random_bipartite_corpus(scale))
        .collect()
}

fn thm9(scale: &Scale) -> Vec<Check> {
    let s = Suite::Thm9;
    let corpus = bipartite_corpus(scale);

    let mut formula = Tally::new(s, "bipartite formula equals exact es");
    let mut stars = Tally::new(s, "minimum mitigating sets of connected bipartite graphs are star forests");
    for g in &corpus {
        let outcome = bipartite_es_set(g, &mut Budget::unlimited())
            .and_then(|rep| Ok(rep.es == exact(g, false)?));
        formula.record(g, outcome, "formula");
        if g.is_connected() {
            let outcome = minimum_mitigating_sets(g, &mut Budget::unlimited())
                .map(|(_, sets)| sets.iter().all(|f| is_star_forest(g.n(), f)));
            stars.record(g, outcome, "star forest");
        }
    }
    vec![formula.finish(), stars.finish()]
}

/// Minimum mitigating sets to normalize: every census set containing an edge
/// that violates the degree condition, the `{uv, xy}` sets of the
/// counterexample family, then other census sets up to `normalize_samples`.
fn normalization_samples(scale: &Scale) -> Result<Vec<(Graph, Vec<Edge>)>> {
    let mut violating = Vec::new();
    let mut other = Vec::new();
    for g in connected_census(scale.census_max) {
        let degree = g.degrees();
        let delta = g.max_degree();
        let has_low = g.edges().iter().any(|&e| !satisfies_high_degree(&degree, delta, e));
        if !has_low && other.len() >= scale.normalize_samples {
            continue;
        }
        let (_, sets) = minimum_mitigating_sets(&g, &mut Budget::unlimited())?;
        for f in sets {
            if f.iter().any(|&e| !satisfies_high_degree(&degree, delta, e)) {
                violating.push((g.clone(), f));
            } else {
                other.push((g.clone(), f));
            }
        }
    }
    for k in 2..=3 {
        for choice in 0..prop_counterexample_pairs(k)?.len() {
            let pc = prop_counterexample(k, choice)?;
            let f = vec![pc.uv(), pc.xy()];
            violating.push((pc.graph, f));
        }
    }
    violating.truncate(scale.normalize_samples);
    let fill = scale.normalize_samples - violating.len();
    violating.extend(other.into_iter().take(fill));
    Ok(violating)
}

fn sec3(scale: &Scale) -> Vec<Check> {
    let s = Suite::Sec3;
    let mut prune = Tally::new(s, "exact es agrees with degree pruning on and off");
    for g in nonempty_census(scale.wide_census_max) {
        let outcome = exact(&g, false).and_then(|a| Ok(a == exact(&g, true)?));
        prune.record(&g, outcome, "pruned es");
    }

    let mut norm = Tally::new(s, "normalization keeps size and mitigation and reaches the degree condition");
    match normalization_samples(scale) {
        Ok(samples) => {
            let low = samples
                .iter()
                .filter(|(g, f)| {
                    let degree = g.degrees();
                    f.iter().any(|&e| !satisfies_high_degree(&degree, g.max_degree(), e))
                })
                .count();
            norm.note = Some(format!("{low} sets start with a violating edge"));
            for (g, f) in samples {
                let degree = g.degrees();
                let outcome = normalize_min_mitigating(&g, &f, &mut Budget::unlimited()).map(|(set, _)| {
                    set.len() == f.len()
                        && set.edges.iter().all(|&e| satisfies_high_degree(&degree, g.max_degree(), e))
                });
                norm.record(&g, outcome, "normalization");
            }
        }
        Err(e) => norm.failures.push(format!("collecting samples: {e}")),
    }
    vec![prune.finish(), norm.finish()]
}

fn prop11() -> Vec<Check> {
    let s = Suite::Prop11;
    let mut t = Tally::new(s, "counterexample: chi = 2k+1, es = 2, {uv, xy} mitigating, normalization moves uv");
    for k in 2..=3 {
        let choices = prop_counterexample_pairs(k).map(|p| p.len()).unwrap_or(0);
        for choice in 0..choices {
            let pc = prop_counterexample(k, choice).expect("choice in range");
            let g = &pc.graph;
            let degree = g.degrees();
            let delta = g.max_degree();
            t.record(g, chromatic_index(g).map(|c| c == 2 * k + 1), "chi = 2k+1");
            t.record(g, exact(g, false).map(|es| es == 2), "es = 2");
            t.record(g, is_mitigating(g, &[pc.uv(), pc.xy()]), "{uv, xy} mitigating");
            t.record(g, Ok(!satisfies_high_degree(&degree, delta, pc.uv())), "uv violates the condition");
            let outcome = normalize_min_mitigating(g, &[pc.uv(), pc.xy()], &mut Budget::unlimited())
                .map(|(set, trace)| {
                    !set.edges.contains(&pc.uv())
                        && trace.steps.iter().any(|st| st.removed == pc.uv())
                        && set.edges.iter().all(|&e| satisfies_high_degree(&degree, delta, e))
                });
            t.record(g, outcome, "normalization replaces uv");
        }
    }
    vec![t.finish()]
}

fn coloring(scale: &Scale) -> Vec<Check> {
    let s = Suite::Coloring;
    let census = nonempty_census(scale.census_max);

    let mut vizing = Tally::new(s, "vizing coloring proper with at most D+1 colors");
    let mut acyclic = Tally::new(s, "acyclic core implies Class 1");
    let mut blossom = Tally::new(s, "blossom matching equals brute force");
    for g in census.iter().chain(&random_corpus(scale)) {
        let outcome = vizing_color(g)
            .and_then(|c| Ok(c.colors_used() <= g.max_degree() + 1 && is_proper(g, &c)?));
        vizing.record(g, outcome, "vizing");
        blossom.record(g, Ok(maximum_matching(g).len() == brute_force_matching_number(g)), "matching");
    }
    for g in &census {
        if g.core().graph.is_acyclic() {
            let outcome = k_edge_colorable(g, g.max_degree(), &mut Budget::unlimited()).map(|c| c.is_some());
            acyclic.record(g, outcome, "Delta-colorable");
        }
    }

    let mut core3 = Tally::new(s, "three-vertex-core recognizer agrees with classify");
    for g in connected_census(scale.wide_census_max) {
        if g.max_degree_vertices().len() != 3 {
            continue;
        }
        let outcome = recognize_core3_class2(&g)
            .and_then(|predicted| Ok(predicted == (classify(&g)? == EdgeClass::Class2)));
        core3.record(&g, outcome, "recognizer");
    }
    vec![vizing.finish(), acyclic.finish(), blossom.finish(), core3.finish()]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        assert_eq!(Suite::parse("all").unwrap().len(), 6);
        assert_eq!(Suite::parse("thm9"), Some(vec![Suite::Thm9]));
        assert_eq!(Suite::parse("thm5"), None);
    }

    #[test]
    fn helpers() {
        assert!(is_star_forest(5, &[Edge::new(0, 1), Edge::new(0, 2), Edge::new(3, 4)]));
        assert!(!is_star_forest(4, &[Edge::new(0, 1), Edge::new(1, 2), Edge::new(2, 3)]));
        assert_eq!(brute_force_matching_number(&petersen()), 5);
        assert_eq!(general_bound_by_profile(&petersen()), 9);
    }

    #[test]
    fn prop11_passes() {
        assert!(prop11().iter().all(|c| c.passed));
    }
}
