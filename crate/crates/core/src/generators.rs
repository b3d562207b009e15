//! Deterministic constructors for the named and extremal graph families.
//!
//! Vertex numbering per family:
//!
//! * `petersen`: outer cycle `0..5`, inner pentagram `5..10` (`5+i ~ 5+(i+2)%5`), spokes `i ~ i+5`.
//! * `complete_minus_matching n s`: `K_{2n+1}` without `{0,1}, {2,3}, …, {2s-2,2s-1}`.
//! * `remark5 k`: `K_{2k+1}` on `0..=2k` without `{0,1}`, plus vertex `2k+1` joined to `0`.
//! * `q_graph`: Petersen without its inner edge `{5,7}`; `5` and `7` have degree 2.
//! * `q_chain m`: star center `0` with leaves `1,2,3`; copy `j` of Q occupies
//!   `4+10j .. 4+10j+10`. The center is joined to vertex 5 of copy 0, and vertex 7 of
//!   copy `j` to vertex 5 of copy `j+1`.
//! * `remark8_union t s`: the Class 2 graph `H1` first (omitted when `s ≤ 2`), then `t`
//!   stars, each center followed by its leaves.
//! * `prop_counterexample k xy`: `u = 0`, `A = 1..=k`, `B = k+1..=3k-1`, `C = 3k..=4k-1`,
//!   `v = 4k`.
//! * `star r`: center `0`. `complete_bipartite a b`: sides `0..a` and `a..a+b`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Petersen,
    Complete { n: usize },
    CompleteMinusMatching { n: usize, s: usize },
    Remark5 { k: usize },
    QGraph,
    QChain { m: usize },
    Remark8Union { t: usize, s: usize },
    PropCounterexample { k: usize, xy_choice: usize },
    Star { r: usize },
    CompleteBipartite { a: usize, b: usize },
    Cycle { n: usize },
    Random { n: usize, p: f64, seed: u64 },
    RandomBipartite { n1: usize, n2: usize, p: f64, seed: u64 },
}

pub const FAMILY_NAMES: &[&str] = &[
    "petersen",
    "complete",
    "complete_minus_matching",
    "remark5",
    "q_graph",
    "q_chain",
    "remark8_union",
    "prop_counterexample",
    "star",
    "complete_bipartite",
    "cycle",
    "random",
    "random_bipartite",
];

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Petersen => "petersen",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::CompleteMinusMatching { .. } => "complete_minus_matching",
            FamilySpec::Remark5 { .. } => "remark5",
            FamilySpec::QGraph => "q_graph",
            FamilySpec::QChain { .. } => "q_chain",
            FamilySpec::Remark8Union { .. } => "remark8_union",
            FamilySpec::PropCounterexample { .. } => "prop_counterexample",
            FamilySpec::Star { .. } => "star",
            FamilySpec::CompleteBipartite { .. } => "complete_bipartite",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Random { .. } => "random",
            FamilySpec::RandomBipartite { .. } => "random_bipartite",
        }
    }

    pub fn is_random(&self) -> bool {
        matches!(self, FamilySpec::Random { .. } | FamilySpec::RandomBipartite { .. })
    }

    /// Parses the CLI form `name p1 p2 …`. Random families take their seed separately.
    pub fn parse(name: &str, params: &[String], seed: u64) -> Result<FamilySpec> {
        let int = |i: usize| -> Result<usize> {
            let raw = params
                .get(i)
                .ok_or_else(|| Error::InvalidFamily(format!("{name}: missing parameter {}", i + 1)))?;
            raw.parse()
                .map_err(|_| Error::InvalidFamily(format!("{name}: bad integer {raw:?}")))
        };
        let prob = |i: usize| -> Result<f64> {
            let raw = params
                .get(i)
                .ok_or_else(|| Error::InvalidFamily(format!("{name}: missing probability")))?;
            raw.parse()
                .map_err(|_| Error::InvalidFamily(format!("{name}: bad probability {raw:?}")))
        };
        let arity = |k: usize| -> Result<()> {
            if params.len() > k {
                Err(Error::InvalidFamily(format!("{name}: expected at most {k} parameters")))
            } else {
                Ok(())
            }
        };
        let spec = match name {
            "petersen" => {
                arity(0)?;
                FamilySpec::Petersen
            }
            "complete" => {
                arity(1)?;
                FamilySpec::Complete { n: int(0)? }
            }
            "complete_minus_matching" => {
                arity(2)?;
                FamilySpec::CompleteMinusMatching { n: int(0)?, s: int(1)? }
            }
            "remark5" => {
                arity(1)?;
                FamilySpec::Remark5 { k: int(0)? }
            }
            "q_graph" => {
                arity(0)?;
                FamilySpec::QGraph
            }
            "q_chain" => {
                arity(1)?;
                FamilySpec::QChain { m: int(0)? }
            }
            "remark8_union" => {
                arity(2)?;
                FamilySpec::Remark8Union { t: int(0)?, s: int(1)? }
            }
            "prop_counterexample" => {
                arity(2)?;
                let xy_choice = if params.len() > 1 { int(1)? } else { 0 };
                FamilySpec::PropCounterexample { k: int(0)?, xy_choice }
            }
            "star" => {
                arity(1)?;
                FamilySpec::Star { r: int(0)? }
            }
            "complete_bipartite" => {
                arity(2)?;
                FamilySpec::CompleteBipartite { a: int(0)?, b: int(1)? }
            }
            "cycle" => {
                arity(1)?;
                FamilySpec::Cycle { n: int(0)? }
            }
            "random" => {
                arity(2)?;
                FamilySpec::Random { n: int(0)?, p: prob(1)?, seed }
            }
            "random_bipartite" => {
                arity(3)?;
                FamilySpec::RandomBipartite { n1: int(0)?, n2: int(1)?, p: prob(2)?, seed }
            }
            other => {
                return Err(Error::InvalidFamily(format!(
                    "unknown family {other:?}; expected one of {}",
                    FAMILY_NAMES.join(", ")
                )))
            }
        };
        Ok(spec)
    }

    pub fn generate(&self) -> Result<Graph> {
        match *self {
            FamilySpec::Petersen => Ok(petersen()),
            FamilySpec::Complete { n } => complete(n),
            FamilySpec::CompleteMinusMatching { n, s } => complete_minus_matching(n, s),
            FamilySpec::Remark5 { k } => remark5(k),
            FamilySpec::QGraph => Ok(q_graph()),
            FamilySpec::QChain { m } => q_chain(m),
            FamilySpec::Remark8Union { t, s } => remark8_union(t, s),
            FamilySpec::PropCounterexample { k, xy_choice } => {
                prop_counterexample(k, xy_choice).map(|c| c.graph)
            }
            FamilySpec::Star { r } => star(r),
            FamilySpec::CompleteBipartite { a, b } => complete_bipartite(a, b),
            FamilySpec::Cycle { n } => cycle(n),
            FamilySpec::Random { n, p, seed } => random_graph(n, p, seed),
            FamilySpec::RandomBipartite { n1, n2, p, seed } => random_bipartite(n1, n2, p, seed),
        }
    }
}

fn build(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    Graph::from_edge_list(n, pairs).expect("generator emits valid pairs")
}

pub fn petersen() -> Graph {
    let pairs = (0..5).flat_map(|i| [(i, (i + 1) % 5), (5 + i, 5 + (i + 2) % 5), (i, i + 5)]);
    build(10, pairs)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidFamily(format!("complete: need n >= 2, got {n}")));
    }
    Ok(build(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))))
}

/// `K_{2n+1}` minus `s` independent edges, `0 ≤ s ≤ n-1`.
pub fn complete_minus_matching(n: usize, s: usize) -> Result<Graph> {
    if n == 0 || s >= n {
        return Err(Error::InvalidFamily(format!(
            "complete_minus_matching: need n >= 1 and 0 <= s <= n-1, got n={n}, s={s}"
        )));
    }
    let matching: Vec<Edge> = (0..s).map(|i| Edge::new(2 * i, 2 * i + 1)).collect();
    Ok(complete(2 * n + 1)?.remove_edges(&matching).expect("matching edges exist"))
}

/// `K_{2k+1}` minus an edge `xy`, plus a pendant vertex `z` on `x`.
pub fn remark5(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidFamily("remark5: need k >= 1".into()));
    }
    let n = 2 * k + 1;
    let pairs = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&p| p != (0, 1))
        .chain([(0, n)]);
    Ok(build(n + 1, pairs))
}

pub fn q_graph() -> Graph {
    petersen().remove_edges(&[Edge::new(5, 7)]).expect("inner edge present")
}

pub fn q_chain(m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(Error::InvalidFamily("q_chain: need m >= 1".into()));
    }
    let q = q_graph();
    let mut g = star(3)?;
    for j in 0..m {
        let base = g.n();
        let attach_from = if j == 0 { 0 } else { base - 10 + 7 };
        g = g.disjoint_union(&q);
        g = g.add_edges(&[Edge::new(attach_from, base + 5)])?;
    }
    Ok(g)
}

/// Disjoint union of a Class 2 graph with `s` vertices of maximum degree and
/// `es = ⌊(s-1)/2⌋` (omitted for `s ≤ 2`) with `t` stars one degree larger.
pub fn remark8_union(t: usize, s: usize) -> Result<Graph> {
    if t == 0 {
        return Err(Error::InvalidFamily("remark8_union: need t >= 1".into()));
    }
    let h1 = match s {
        0..=2 => None,
        s if s % 2 == 1 => Some(complete(s)?),
        s => Some(remark5(s / 2)?),
    };
    let leaves = h1.as_ref().map_or(3, |h| h.max_degree() + 1);
    let mut g = h1.unwrap_or_else(|| Graph::empty(0));
    for _ in 0..t {
        g = g.disjoint_union(&star(leaves)?);
    }
    Ok(g)
}

/// The graph with a minimum mitigating set containing an edge of low degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropCounterexample {
    pub graph: Graph,
    pub k: usize,
    pub u: usize,
    pub v: usize,
    pub x: usize,
    pub y: usize,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
}

impl PropCounterexample {
    pub fn uv(&self) -> Edge {
        Edge::new(self.u, self.v)
    }

    pub fn xy(&self) -> Edge {
        Edge::new(self.x, self.y)
    }
}

fn layered_parts(k: usize) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    ((1..=k).collect(), (k + 1..3 * k).collect(), (3 * k..4 * k).collect())
}

/// The layered graph `u – A – B – C – v` without the two extra edges.
fn layered_base(k: usize) -> Graph {
    let (a, b, c) = layered_parts(k);
    let v = 4 * k;
    let mut pairs = Vec::new();
    pairs.extend(a.iter().map(|&x| (0, x)));
    pairs.extend(a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))));
    pairs.extend(b.iter().flat_map(|&x| c.iter().map(move |&y| (x, y))));
    pairs.extend(c.iter().map(|&x| (x, v)));
    build(4 * k + 1, pairs)
}

/// Non-adjacent pairs inside `A ∪ B ∪ C`, in canonical order; `xy_choice` indexes this list.
pub fn prop_counterexample_pairs(k: usize) -> Result<Vec<Edge>> {
    if k < 2 {
        return Err(Error::InvalidFamily(format!("prop_counterexample: need k >= 2, got {k}")));
    }
    let base = layered_base(k);
    let inner = 1..4 * k;
    Ok(inner
        .clone()
        .flat_map(|x| (x + 1..4 * k).map(move |y| Edge::new(x, y)))
        .filter(|e| !base.contains(*e))
        .collect())
}

pub fn prop_counterexample(k: usize, xy_choice: usize) -> Result<PropCounterexample> {
    let pairs = prop_counterexample_pairs(k)?;
    let xy = *pairs.get(xy_choice).ok_or_else(|| {
        Error::InvalidFamily(format!(
            "prop_counterexample: xy_choice {xy_choice} out of range (k={k} admits {})",
            pairs.len()
        ))
    })?;
    let (u, v) = (0, 4 * k);
    let graph = layered_base(k).add_edges(&[Edge::new(u, v), xy])?;
    let (a, b, c) = layered_parts(k);
    Ok(PropCounterexample { graph, k, u, v, x: xy.u(), y: xy.v(), a, b, c })
}

pub fn star(r: usize) -> Result<Graph> {
    if r == 0 {
        return Err(Error::InvalidFamily("star: need r >= 1".into()));
    }
    Ok(build(r + 1, (1..=r).map(|x| (0, x))))
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidFamily("complete_bipartite: both sides must be non-empty".into()));
    }
    Ok(build(a + b, (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y)))))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidFamily(format!("cycle: need n >= 3, got {n}")));
    }
    Ok(build(n, (0..n).map(|i| (i, (i + 1) % n))))
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidFamily(format!("edge probability {p} outside [0, 1]")))
    }
}

/// `G(n, p)` from a ChaCha8 stream; an empty draw gets the edge `{0,1}`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_probability(p)?;
    if n < 2 {
        return Err(Error::InvalidFamily(format!("random: need n >= 2, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen::<f64>() < p {
                pairs.push((a, b));
            }
        }
    }
    if pairs.is_empty() {
        pairs.push((0, 1));
    }
    Ok(build(n, pairs))
}

/// Random bipartite graph with sides `0..n1` and `n1..n1+n2`; an empty draw gets `{0,n1}`.
pub fn random_bipartite(n1: usize, n2: usize, p: f64, seed: u64) -> Result<Graph> {
    check_probability(p)?;
    if n1 == 0 || n2 == 0 {
        return Err(Error::InvalidFamily("random_bipartite: both sides must be non-empty".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for a in 0..n1 {
        for b in n1..n1 + n2 {
            if rng.gen::<f64>() < p {
                pairs.push((a, b));
            }
        }
    }
    if pairs.is_empty() {
        pairs.push((0, n1));
    }
    Ok(build(n1 + n2, pairs))
}
