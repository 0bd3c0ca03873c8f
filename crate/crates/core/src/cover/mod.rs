//! Cover-time CDFs.
//!
//! The exact method sums signed union-hitting CDFs over every non-empty
//! subset of the non-start nodes. The approximations replace that sum by a
//! product of single-node hitting CDFs with pairwise correction ratios.
//! Complete, cycle and path graphs have closed forms that need at most a
//! linear number of absorbing runs.

mod approx;
mod closed;
mod exact;

use crate::chains::{ChainError, DistributionSeries};
use crate::graphs::{transition_matrix, Graph, TransitionMatrix};
use crate::montecarlo::{self, SimulationConfig, SimulationError, StopRule};

pub use approx::{
    cover_approx_all_pairs_run, cover_approx_run, cover_cdf_approx, cover_cdf_approx_all_pairs,
    default_ordering, NodeOrdering,
};
pub use closed::{cover_cdf_complete, cover_cdf_cycle, cover_cdf_path, cover_pmf_complete};
pub use exact::{
    cover_cdf_exact, cover_exact_run, CoverRun, ExactCap, EXACT_CAP_CEILING, EXACT_CAP_DEFAULT,
};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CoverError {
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error(transparent)]
    Simulation(#[from] SimulationError),
    #[error("exact method is capped at {cap} nodes but the graph has {n}; use the approx or monte-carlo method")]
    ExceedsCap { n: usize, cap: usize },
    #[error(
        "exact cap {cap} is above the hard ceiling {ceiling}; pass the force override to allow it"
    )]
    CapAboveCeiling { cap: usize, ceiling: usize },
    #[error("invalid node ordering: {0}")]
    InvalidOrdering(String),
    #[error("graph is not a {expected} graph")]
    WrongShape { expected: &'static str },
    #[error("closed form needs at least 2 nodes, got {0}")]
    TooFewNodes(usize),
    #[error("series horizons differ: {0} vs {1}")]
    HorizonMismatch(usize, usize),
}

/// Computes one cover-time series of a [`CoverQuery`].
#[derive(Debug, Clone, PartialEq)]
pub enum CoverMethod {
    Exact,
    Approx,
    ApproxAllPairs,
    ClosedComplete,
    ClosedCycle,
    ClosedPath,
    MonteCarlo(SimulationConfig),
}

impl CoverMethod {
    pub fn name(&self) -> &'static str {
        match self {
            CoverMethod::Exact => "exact",
            CoverMethod::Approx => "approx",
            CoverMethod::ApproxAllPairs => "approx-all-pairs",
            CoverMethod::ClosedComplete => "closed-complete",
            CoverMethod::ClosedCycle => "closed-cycle",
            CoverMethod::ClosedPath => "closed-path",
            CoverMethod::MonteCarlo(_) => "monte-carlo",
        }
    }
}

/// How the approximation orders the non-start nodes.
#[derive(Debug, Clone, PartialEq, Default)]
pub enum OrderingPolicy {
    /// Depth-first preorder from the start node.
    #[default]
    Dfs,
    Explicit(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoverQuery {
    pub start: usize,
    pub horizon: usize,
    pub method: CoverMethod,
    pub cap: ExactCap,
    pub ordering: OrderingPolicy,
}

impl CoverQuery {
    pub fn new(start: usize, horizon: usize, method: CoverMethod) -> Self {
        CoverQuery {
            start,
            horizon,
            method,
            cap: ExactCap::default(),
            ordering: OrderingPolicy::Dfs,
        }
    }
}

/// Closed-form families recognised structurally.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedShape {
    Complete,
    Cycle,
    Path,
}

/// Detects complete, cycle and path graphs from degrees and edge count.
/// The triangle is reported as complete.
pub fn detect_shape(m: &TransitionMatrix) -> Option<ClosedShape> {
    if closed::is_complete(m) {
        Some(ClosedShape::Complete)
    } else if closed::cycle_order(m, 0).is_some() {
        Some(ClosedShape::Cycle)
    } else if closed::path_endpoints(m).is_some() {
        Some(ClosedShape::Path)
    } else {
        None
    }
}

/// Runs `query` against `graph`.
pub fn cover_cdf(graph: &Graph, query: &CoverQuery) -> Result<DistributionSeries, CoverError> {
    let m = transition_matrix(graph);
    let CoverQuery { start, horizon, .. } = *query;
    match &query.method {
        CoverMethod::Exact => cover_cdf_exact(&m, start, horizon, query.cap),
        CoverMethod::Approx => {
            let ordering = match &query.ordering {
                OrderingPolicy::Dfs => default_ordering(graph, start)?,
                OrderingPolicy::Explicit(order) => {
                    NodeOrdering::explicit(&m, start, order.clone())?
                }
            };
            cover_cdf_approx(&m, start, horizon, &ordering)
        }
        CoverMethod::ApproxAllPairs => cover_cdf_approx_all_pairs(&m, start, horizon),
        CoverMethod::ClosedComplete => {
            crate::chains::check_node(&m, start)?;
            if !closed::is_complete(&m) {
                return Err(CoverError::WrongShape {
                    expected: "complete",
                });
            }
            cover_cdf_complete(m.node_count(), horizon)
        }
        CoverMethod::ClosedCycle => cover_cdf_cycle(&m, start, horizon),
        CoverMethod::ClosedPath => cover_cdf_path(&m, start, horizon),
        CoverMethod::MonteCarlo(config) => {
            let samples =
                montecarlo::simulate_walk_until(graph, start, &StopRule::CoverAll, config)?;
            let ecdf = montecarlo::empirical_cdf(&samples, horizon)?;
            Ok(ecdf.to_series(crate::chains::SeriesKind::Cover))
        }
    }
}

/// `max_t |a(t) - b(t)|`.
pub fn sup_error(a: &DistributionSeries, b: &DistributionSeries) -> Result<f64, CoverError> {
    if a.horizon() != b.horizon() {
        return Err(CoverError::HorizonMismatch(a.horizon(), b.horizon()));
    }
    Ok(a.cdf()
        .iter()
        .zip(b.cdf())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max))
}
