//! Checkers for the combinatorial properties of I/O DAGs.
//!
//! Each `check_*` function realizes a universally quantified property as a
//! search over removal sets (or routing pairings) and returns a [`Report`]
//! with a verdict plus a certificate: a counterexample on refutation, a
//! witness on success where one is meaningful. Exhaustive searches enumerate
//! subsets in lexicographic order, so the first counterexample is canonical
//! and runs are reproducible. Sampled searches require an explicit seed.
//!
//! Exhaustive enumeration over size-`k` subsets suffices for the `|S| <= k`
//! quantifiers: all the checked predicates are anti-monotone under adding
//! removals, so any smaller violating set extends to a violating set of size
//! exactly `k`.

mod connector;
mod flow;
mod robust;
mod st;

pub use connector::check_connector;
pub use flow::{check_superconcentrator, max_vertex_disjoint};
pub use robust::{
    check_depth_robust, check_edge_depth_robust, check_grate, check_hardness, check_ssdr,
};
pub use st::{check_maximally_st_robust, check_st_robust, find_st_witness};

use crate::graph::{GraphError, NodeId};
use crate::subsets::{binomial, sample_subset, SubsetIter};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use thiserror::Error;

/// Default cap on the number of removal sets a single check may enumerate.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("exhaustive search needs {needed} subsets, over budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("routing search exceeded {steps} steps")]
    RoutingBudget { steps: u64 },
}

/// How a universally quantified property is searched.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum SearchMode {
    /// Enumerate every removal set up to the size bound; refuse (do not
    /// silently sample) when the subset count exceeds `budget`.
    Exhaustive { budget: u64 },
    /// Draw `trials` removal sets uniformly over exact-size subsets.
    Sampled { trials: u64, seed: u64 },
}

impl SearchMode {
    pub fn exhaustive() -> Self {
        SearchMode::Exhaustive {
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn exhaustive_with_budget(budget: u64) -> Self {
        SearchMode::Exhaustive { budget }
    }

    pub fn sampled(trials: u64, seed: u64) -> Self {
        SearchMode::Sampled { trials, seed }
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            SearchMode::Exhaustive { .. } => None,
            SearchMode::Sampled { seed, .. } => Some(*seed),
        }
    }

    pub fn budget(&self) -> u64 {
        match self {
            SearchMode::Exhaustive { budget } => *budget,
            SearchMode::Sampled { .. } => DEFAULT_BUDGET,
        }
    }

    fn validate(&self) -> Result<(), VerifyError> {
        if let SearchMode::Sampled { trials: 0, .. } = self {
            return Err(VerifyError::InvalidParams(
                "sampled mode requires at least one trial".into(),
            ));
        }
        Ok(())
    }

    /// Derives a per-level mode for composite checks that run one search per
    /// parameter value, keeping sampled runs reproducible level by level.
    fn for_level(&self, level: u64) -> SearchMode {
        match *self {
            SearchMode::Exhaustive { budget } => SearchMode::Exhaustive { budget },
            SearchMode::Sampled { trials, seed } => SearchMode::Sampled {
                trials,
                seed: seed.wrapping_add(level.wrapping_mul(0x9e37_79b9_7f4a_7c15)),
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Refuted,
    HoldsOnSample,
}

impl Verdict {
    pub fn passed(self) -> bool {
        matches!(self, Verdict::Holds | Verdict::HoldsOnSample)
    }

    fn for_pass(mode: &SearchMode) -> Verdict {
        match mode {
            SearchMode::Exhaustive { .. } => Verdict::Holds,
            SearchMode::Sampled { .. } => Verdict::HoldsOnSample,
        }
    }
}

/// A pair of surviving terminal sets with certified all-pairs connectivity:
/// every listed input reaches every listed output in the deleted graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StWitness {
    pub inputs: Vec<NodeId>,
    pub outputs: Vec<NodeId>,
    /// Minimum over all witness pairs of the exact longest path length;
    /// 0 when the witness has no pairs.
    pub min_pair_depth: usize,
}

impl StWitness {
    pub fn has_pairs(&self) -> bool {
        !self.inputs.is_empty() && !self.outputs.is_empty()
    }
}

/// Certificate attached to a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Evidence {
    None,
    /// A node removal set (counterexample).
    Nodes { nodes: Vec<NodeId> },
    /// An edge removal set (counterexample), as (src, dst) pairs.
    Edges { edges: Vec<(NodeId, NodeId)> },
    /// A surviving all-pairs witness.
    Witness { witness: StWitness },
    /// An input/output pairing that cannot be routed.
    Pairing { pairing: Vec<(NodeId, NodeId)> },
    /// Terminal subsets that cannot be fully connected (superconcentrator).
    TerminalSets {
        rank: usize,
        inputs: Vec<NodeId>,
        outputs: Vec<NodeId>,
    },
}

/// Outcome of one property check: verdict, parameters, certificate, and how
/// much of the search space was examined.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub property: String,
    pub params: Map<String, Value>,
    pub verdict: Verdict,
    pub evidence: Evidence,
    pub explored: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

impl Report {
    fn new(property: &str, params: Map<String, Value>, mode: &SearchMode) -> Report {
        Report {
            schema: 1,
            property: property.to_string(),
            params,
            verdict: Verdict::Holds,
            evidence: Evidence::None,
            explored: 0,
            seed: mode.seed(),
            wall_ms: None,
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict.passed()
    }

    /// Stable JSON rendering (keys sorted, two-space indent).
    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }
}

/// Builds a params map from key/value pairs.
fn params_from(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn param_fraction(x: f64) -> Value {
    json!(x)
}

/// Drives a search over exact-size subsets of `0..universe`. Calls `violates`
/// per subset; stops at the first violation. Returns `(explored, Some(bad))`
/// on refutation, `(explored, None)` otherwise.
fn scan_subsets<F>(
    universe: usize,
    size: usize,
    mode: &SearchMode,
    mut violates: F,
) -> Result<(u64, Option<Vec<usize>>), VerifyError>
where
    F: FnMut(&[usize]) -> Result<bool, VerifyError>,
{
    mode.validate()?;
    if size > universe {
        return Err(VerifyError::InvalidParams(format!(
            "removal size {size} exceeds universe {universe}"
        )));
    }
    let mut explored = 0u64;
    match *mode {
        SearchMode::Exhaustive { budget } => {
            let needed = binomial(universe, size);
            if needed > budget as u128 {
                return Err(VerifyError::BudgetExceeded { needed, budget });
            }
            let mut it = SubsetIter::new(universe, size);
            while let Some(s) = it.next_subset() {
                explored += 1;
                if violates(s)? {
                    return Ok((explored, Some(s.to_vec())));
                }
            }
            Ok((explored, None))
        }
        SearchMode::Sampled { trials, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..trials {
                let s = sample_subset(&mut rng, universe, size);
                explored += 1;
                if violates(&s)? {
                    return Ok((explored, Some(s)));
                }
            }
            Ok((explored, None))
        }
    }
}
