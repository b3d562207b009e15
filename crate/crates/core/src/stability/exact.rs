use crate::budget::Budget;
use crate::coloring::{chromatic_index_or_zero, chromatic_index_with, colorable_within};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::matching::maximum_matching;

use super::normalize::satisfies_high_degree;
use super::{stability_bounds, MitigatingSet, Method, StabilityReport};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ExactOptions {
    /// Only enumerate edges with an endpoint of degree at least `Δ-1`. Some
    /// minimum mitigating set always lies inside that edge set.
    pub prune_by_degree: bool,
}

/// `es_χ'(g)` by enumerating edge subsets by increasing size, each size in
/// canonical (lexicographic) order; the witness is the first mitigating subset.
///
/// Sizes below two sound lower bounds are skipped: vertices whose degree exceeds
/// the target `χ'(g) - 1` must each lose an edge, and the remaining edges must fit
/// into `χ'(g) - 1` matchings of every component.
pub fn exact_es(g: &Graph, opts: ExactOptions, budget: &mut Budget) -> Result<StabilityReport> {
    let mut search = SubsetSearch::new(g, opts.prune_by_degree, budget)?;
    let lower = search.lower_bound();
    for size in lower..=search.pool.len() {
        if let Some(found) = search.first_of_size(size, budget)? {
            let rest = g.remove_edges(&found)?;
            let witness = MitigatingSet {
                edges: found,
                chi_before: search.chi,
                chi_after: chromatic_index_or_zero(&rest, budget)?,
            };
            let bounds = stability_bounds(g, search.chi);
            return Ok(StabilityReport {
                es: size,
                witness,
                method: Method::Exact,
                bound_value: bounds.best(),
            });
        }
    }
    Err(Error::Precondition("no mitigating set inside the candidate edge pool".into()))
}

/// `es_χ'(g)` together with every mitigating set of that size, in canonical order.
pub fn minimum_mitigating_sets(g: &Graph, budget: &mut Budget) -> Result<(usize, Vec<Vec<Edge>>)> {
    let mut search = SubsetSearch::new(g, false, budget)?;
    let lower = search.lower_bound();
    for size in lower..=search.pool.len() {
        let all = search.all_of_size(size, budget)?;
        if !all.is_empty() {
            return Ok((size, all));
        }
    }
    Err(Error::Precondition("no mitigating set found".into()))
}

struct SubsetSearch<'g> {
    g: &'g Graph,
    chi: usize,
    target: usize,
    pool: Vec<Edge>,
    degree: Vec<usize>,
    /// How many edges each vertex must lose to reach degree `target`.
    need: Vec<usize>,
    /// `suffix[i][v]`: pool edges at positions `>= i` incident to `v`.
    suffix: Vec<Vec<usize>>,
    chosen: Vec<usize>,
}

impl<'g> SubsetSearch<'g> {
    fn new(g: &'g Graph, prune: bool, budget: &mut Budget) -> Result<Self> {
        let chi = chromatic_index_with(g, budget)?;
        let target = chi - 1;
        let delta = g.max_degree();
        let degree = g.degrees();
        let pool: Vec<Edge> = g
            .edges()
            .iter()
            .copied()
            .filter(|&e| !prune || satisfies_high_degree(&degree, delta, e))
            .collect();
        let need = degree.iter().map(|&d| d.saturating_sub(target)).collect();
        let mut suffix = vec![vec![0; g.n()]; pool.len() + 1];
        for i in (0..pool.len()).rev() {
            suffix[i] = suffix[i + 1].clone();
            suffix[i][pool[i].u()] += 1;
            suffix[i][pool[i].v()] += 1;
        }
        Ok(SubsetSearch {
            g,
            chi,
            target,
            pool,
            degree,
            need,
            suffix,
            chosen: Vec::new(),
        })
    }

    /// Sum over components of the larger of two bounds: the edges needed to
    /// bring every vertex down to degree `target`, and the edges exceeding what
    /// `target` matchings of the component can hold.
    fn lower_bound(&self) -> usize {
        let mut total = 0;
        for comp in self.g.connected_components() {
            let sub = self.g.induced(&comp);
            let need: Vec<usize> = comp.iter().map(|&v| self.need[v]).collect();
            let cover = if need.iter().all(|&x| x <= 1) {
                // minimum edge set meeting every forced vertex
                let forced: Vec<usize> = (0..comp.len()).filter(|&i| need[i] > 0).collect();
                let inner = sub.graph.induced(&forced);
                forced.len() - maximum_matching(&inner.graph).len()
            } else {
                need.iter().sum::<usize>().div_ceil(2)
            };
            let surplus = sub.graph.edge_count().saturating_sub(self.target * (comp.len() / 2));
            total += cover.max(surplus);
        }
        total.max(1)
    }

    fn first_of_size(&mut self, size: usize, budget: &mut Budget) -> Result<Option<Vec<Edge>>> {
        let mut out = Vec::new();
        let mut deficit = self.need.clone();
        let total: usize = deficit.iter().sum();
        self.chosen.clear();
        self.walk(0, size, &mut deficit, total, budget, &mut out, true)?;
        Ok(out.pop())
    }

    fn all_of_size(&mut self, size: usize, budget: &mut Budget) -> Result<Vec<Vec<Edge>>> {
        let mut out = Vec::new();
        let mut deficit = self.need.clone();
        let total: usize = deficit.iter().sum();
        self.chosen.clear();
        self.walk(0, size, &mut deficit, total, budget, &mut out, false)?;
        Ok(out)
    }

    /// Depth-first walk over combinations in lexicographic order. Returns true
    /// when `first_only` is set and a mitigating set has been found.
    #[allow(clippy::too_many_arguments)]
    fn walk(
        &mut self,
        start: usize,
        size: usize,
        deficit: &mut [usize],
        total_deficit: usize,
        budget: &mut Budget,
        out: &mut Vec<Vec<Edge>>,
        first_only: bool,
    ) -> Result<bool> {
        let left = size - self.chosen.len();
        if total_deficit > 2 * left {
            return Ok(false);
        }
        if (0..deficit.len()).any(|v| deficit[v] > self.suffix[start][v]) {
            return Ok(false);
        }
        if left == 0 {
            budget.tick()?;
            if self.leaf_is_mitigating(budget)? {
                out.push(self.chosen.iter().map(|&i| self.pool[i]).collect());
                return Ok(first_only);
            }
            return Ok(false);
        }
        for i in start..=self.pool.len() - left {
            let e = self.pool[i];
            let ends = [e.u(), e.v()];
            let mut lowered = [false; 2];
            for (j, &x) in ends.iter().enumerate() {
                if deficit[x] > 0 {
                    deficit[x] -= 1;
                    lowered[j] = true;
                }
            }
            let gained = lowered.iter().filter(|&&l| l).count();
            self.chosen.push(i);
            let stop = self.walk(i + 1, size, deficit, total_deficit - gained, budget, out, first_only)?;
            self.chosen.pop();
            for (j, &x) in ends.iter().enumerate() {
                if lowered[j] {
                    deficit[x] += 1;
                }
            }
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn leaf_is_mitigating(&self, budget: &mut Budget) -> Result<bool> {
        let mut degree = self.degree.clone();
        for &i in &self.chosen {
            let e = self.pool[i];
            degree[e.u()] -= 1;
            degree[e.v()] -= 1;
        }
        let delta = degree.iter().copied().max().unwrap_or(0);
        if delta > self.target {
            return Ok(false);
        }
        if delta < self.target {
            // Vizing: χ' ≤ Δ + 1 ≤ target
            return Ok(true);
        }
        let removed: Vec<Edge> = self.chosen.iter().map(|&i| self.pool[i]).collect();
        let rest = self.g.remove_edges(&removed)?;
        colorable_within(&rest, self.target, budget)
    }
}
