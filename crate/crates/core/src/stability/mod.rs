//! The chromatic edge stability index `es_χ'` and mitigating sets.
//!
//! A mitigating set `F` satisfies `χ'(G \ F) < χ'(G)`; `es_χ'(G)` is the
//! minimum size of one. `χ'` of an edgeless remainder is taken to be 0.

mod bounds;
mod exact;
mod normalize;
mod recognize;

use serde::{Deserialize, Serialize};

pub use bounds::{
    bipartite_es_set, class2_bound_set, general_bound_set, mitigate, stability_bounds,
    StabilityBounds,
};
pub use exact::{exact_es, minimum_mitigating_sets, ExactOptions};
pub use normalize::{
    normalize_min_mitigating, satisfies_high_degree, NormalizationTrace, ReplacementStep,
};
pub use recognize::{recognize_core3_class2, recognize_k2n1_minus_matching};

use crate::budget::Budget;
use crate::coloring::chromatic_index_or_zero;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// An edge set together with the chromatic indices certifying that it mitigates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MitigatingSet {
    pub edges: Vec<Edge>,
    pub chi_before: usize,
    pub chi_after: usize,
}

impl MitigatingSet {
    /// Computes both chromatic indices and fails with [`Error::NotMitigating`]
    /// unless removal lowers `χ'`.
    pub fn certify(g: &Graph, edges: Vec<Edge>, budget: &mut Budget) -> Result<MitigatingSet> {
        let mut edges = edges;
        edges.sort_unstable();
        edges.dedup();
        let chi_before = chromatic_index_or_zero(g, budget)?;
        let chi_after = chromatic_index_or_zero(&g.remove_edges(&edges)?, budget)?;
        if chi_after < chi_before {
            Ok(MitigatingSet { edges, chi_before, chi_after })
        } else {
            Err(Error::NotMitigating)
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exact,
    Class2Bound,
    GeneralBound,
    BipartiteFormula,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Class2Bound => "class2_bound",
            Method::GeneralBound => "general_bound",
            Method::BipartiteFormula => "bipartite_formula",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityReport {
    /// `es_χ'` for exact and bipartite reports; the witness size (an upper
    /// bound) for the constructive bounds.
    pub es: usize,
    pub witness: MitigatingSet,
    pub method: Method,
    /// Smallest theorem bound applicable to the graph.
    pub bound_value: usize,
}

pub fn is_mitigating(g: &Graph, f: &[Edge]) -> Result<bool> {
    is_mitigating_with(g, f, &mut Budget::unlimited())
}

pub fn is_mitigating_with(g: &Graph, f: &[Edge], budget: &mut Budget) -> Result<bool> {
    let rest = g.remove_edges(f)?;
    Ok(chromatic_index_or_zero(&rest, budget)? < chromatic_index_or_zero(g, budget)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, petersen, star};

    #[test]
    fn mitigating_examples() {
        let p = petersen();
        for &e in p.edges() {
            assert!(!is_mitigating(&p, &[e]).unwrap());
        }
        assert!(!is_mitigating(&p, &[]).unwrap());
        assert_eq!(
            is_mitigating(&p, &[Edge::new(0, 2)]),
            Err(Error::EdgeNotPresent(Edge::new(0, 2)))
        );
        let s = star(3).unwrap();
        assert!(is_mitigating(&s, &[Edge::new(0, 1)]).unwrap());
        // removing everything leaves χ' = 0
        let k2 = complete(2).unwrap();
        assert!(is_mitigating(&k2, k2.edges()).unwrap());
    }

    #[test]
    fn certify_rejects_non_mitigating() {
        let p = petersen();
        let res = MitigatingSet::certify(&p, vec![Edge::new(0, 1)], &mut Budget::unlimited());
        assert_eq!(res, Err(Error::NotMitigating));
    }
}
