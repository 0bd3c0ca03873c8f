//! First-passage distributions by propagating an occupancy vector through
//! absorbing chains.
//!
//! Every series here is indexed by time `t = 1..=T` and stored 0-based, so
//! `cdf()[t - 1]` is `F(t)`. Propagation is always vector-times-matrix per
//! step; matrix powers are never formed.

mod absorbing;
mod commute;

use serde::Serialize;

use crate::graphs::TransitionMatrix;

pub use absorbing::{
    absorbing_system, hitting_cdf, union_hitting_cdf, AbsorbingSystem, Propagation,
};
pub use commute::{commute_cdf, commute_chain, commute_pmf_convolution, CommuteChain};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ChainError {
    #[error("target set is empty")]
    EmptyTargets,
    #[error("node {node} out of range for a graph with {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },
    #[error("start node {0} is one of the targets")]
    StartIsTarget(usize),
    #[error("commute endpoints must differ, got {0} twice")]
    SameEndpoints(usize),
    #[error("horizon must be at least 1")]
    ZeroHorizon,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesKind {
    Hitting,
    UnionHitting,
    Commute,
    Cover,
}

/// CDF values `F(1..=T)` of a first-passage-type time.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistributionSeries {
    kind: SeriesKind,
    cdf: Vec<f64>,
}

impl DistributionSeries {
    pub fn new(kind: SeriesKind, cdf: Vec<f64>) -> Self {
        DistributionSeries { kind, cdf }
    }

    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    pub fn horizon(&self) -> usize {
        self.cdf.len()
    }

    pub fn cdf(&self) -> &[f64] {
        &self.cdf
    }

    /// `F(t)` for `1 <= t <= T`.
    pub fn at(&self, t: usize) -> f64 {
        self.cdf[t - 1]
    }

    pub fn pmf(&self) -> PmfSeries {
        pmf_from_cdf(self)
    }

    /// Running maximum clipped to `[0, 1]`; for plotting raw approximations.
    pub fn monotone_clamped(&self) -> Self {
        let mut best = 0.0f64;
        let cdf = self
            .cdf
            .iter()
            .map(|&v| {
                best = best.max(v.clamp(0.0, 1.0));
                best
            })
            .collect();
        DistributionSeries {
            kind: self.kind,
            cdf,
        }
    }
}

/// PMF values `p(1..=T)` plus the mass beyond the horizon.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PmfSeries {
    pmf: Vec<f64>,
    tail_mass: f64,
}

impl PmfSeries {
    pub fn new(pmf: Vec<f64>, tail_mass: f64) -> Self {
        PmfSeries { pmf, tail_mass }
    }

    /// Tail mass taken as whatever the values leave of 1.
    pub fn from_values(pmf: Vec<f64>) -> Self {
        let tail_mass = 1.0 - pmf.iter().sum::<f64>();
        PmfSeries { pmf, tail_mass }
    }

    pub fn horizon(&self) -> usize {
        self.pmf.len()
    }

    pub fn pmf(&self) -> &[f64] {
        &self.pmf
    }

    /// `p(t)` for `1 <= t <= T`.
    pub fn at(&self, t: usize) -> f64 {
        self.pmf[t - 1]
    }

    pub fn tail_mass(&self) -> f64 {
        self.tail_mass
    }

    /// Running sums of the PMF, as a CDF of the given kind.
    pub fn cumulative(&self, kind: SeriesKind) -> DistributionSeries {
        let mut acc = 0.0;
        let cdf = self
            .pmf
            .iter()
            .map(|&p| {
                acc += p;
                acc
            })
            .collect();
        DistributionSeries::new(kind, cdf)
    }
}

/// `p(1) = F(1)`, `p(t) = F(t) - F(t-1)`.
pub fn pmf_from_cdf(series: &DistributionSeries) -> PmfSeries {
    let mut prev = 0.0;
    let pmf = series
        .cdf
        .iter()
        .map(|&f| {
            let p = f - prev;
            prev = f;
            p
        })
        .collect();
    PmfSeries {
        pmf,
        tail_mass: 1.0 - prev,
    }
}

/// `ceil(100 n ln n)`, at least 1.
pub fn default_horizon(n: usize) -> usize {
    let n = n as f64;
    ((100.0 * n * n.ln()).ceil() as usize).max(1)
}

pub(crate) fn check_node(m: &TransitionMatrix, node: usize) -> Result<(), ChainError> {
    let n = m.node_count();
    if node >= n {
        return Err(ChainError::NodeOutOfRange { node, n });
    }
    Ok(())
}

pub(crate) fn check_horizon(horizon: usize) -> Result<(), ChainError> {
    if horizon == 0 {
        return Err(ChainError::ZeroHorizon);
    }
    Ok(())
}
