use super::{check_horizon, check_node, ChainError, DistributionSeries, SeriesKind};
use crate::graphs::{StochasticMatrix, TransitionMatrix};

/// Once the unabsorbed mass drops below this, the remaining steps are filled
/// with the limit value. The induced error is bounded by this constant.
const SETTLED_MASS: f64 = 1e-18;

/// A walk matrix whose target rows are replaced by basis rows, so mass that
/// reaches a target stays there.
#[derive(Debug, Clone)]
pub struct AbsorbingSystem {
    targets: Vec<usize>,
    absorbing: Vec<bool>,
    effective: StochasticMatrix,
}

pub fn absorbing_system(
    m: &TransitionMatrix,
    targets: &[usize],
) -> Result<AbsorbingSystem, ChainError> {
    if targets.is_empty() {
        return Err(ChainError::EmptyTargets);
    }
    let n = m.node_count();
    let mut absorbing = vec![false; n];
    for &t in targets {
        check_node(m, t)?;
        absorbing[t] = true;
    }
    let base = m.as_stochastic();
    let effective = StochasticMatrix::from_rows((0..n).map(|i| {
        if absorbing[i] {
            vec![(i, 1.0)]
        } else {
            let (cols, vals) = base.row(i);
            cols.iter().copied().zip(vals.iter().copied()).collect()
        }
    }));
    let mut targets = targets.to_vec();
    targets.sort_unstable();
    targets.dedup();
    Ok(AbsorbingSystem {
        targets,
        absorbing,
        effective,
    })
}

impl AbsorbingSystem {
    pub fn targets(&self) -> &[usize] {
        &self.targets
    }

    pub fn is_absorbing(&self, node: usize) -> bool {
        self.absorbing[node]
    }

    pub fn effective(&self) -> &StochasticMatrix {
        &self.effective
    }

    /// Step-by-step occupancy vectors starting from a point mass at `start`.
    pub fn propagation(&self, start: usize) -> Propagation<'_> {
        let n = self.effective.dim();
        let mut current = vec![0.0; n];
        current[start] = 1.0;
        Propagation {
            matrix: &self.effective,
            current,
            scratch: vec![0.0; n],
        }
    }

    /// Total absorbed mass after each of `1..=horizon` steps from `start`.
    pub fn absorbed_mass_series(&self, start: usize, horizon: usize) -> Vec<f64> {
        let mut out = Vec::with_capacity(horizon);
        let mut run = self.propagation(start);
        while out.len() < horizon {
            let x = run.step();
            let absorbed: f64 = self.targets.iter().map(|&a| x[a]).sum();
            out.push(absorbed);
            let free: f64 = x
                .iter()
                .zip(&self.absorbing)
                .filter(|(_, &a)| !a)
                .map(|(v, _)| v)
                .sum();
            if free < SETTLED_MASS {
                out.resize(horizon, absorbed + free);
            }
        }
        out
    }
}

/// Occupancy vector evolving under a stochastic matrix.
pub struct Propagation<'a> {
    matrix: &'a StochasticMatrix,
    current: Vec<f64>,
    scratch: Vec<f64>,
}

impl Propagation<'_> {
    /// Advances one step and returns the new occupancy vector.
    pub fn step(&mut self) -> &[f64] {
        self.matrix.propagate(&self.current, &mut self.scratch);
        std::mem::swap(&mut self.current, &mut self.scratch);
        &self.current
    }

    pub fn current(&self) -> &[f64] {
        &self.current
    }
}

/// CDF of the hitting time from `start` to `target`.
pub fn hitting_cdf(
    m: &TransitionMatrix,
    start: usize,
    target: usize,
    horizon: usize,
) -> Result<DistributionSeries, ChainError> {
    let series = union_hitting_cdf(m, start, &[target], horizon)?;
    Ok(DistributionSeries::new(
        SeriesKind::Hitting,
        series.cdf().to_vec(),
    ))
}

/// CDF of the first time any node of `targets` is reached from `start`.
pub fn union_hitting_cdf(
    m: &TransitionMatrix,
    start: usize,
    targets: &[usize],
    horizon: usize,
) -> Result<DistributionSeries, ChainError> {
    check_node(m, start)?;
    check_horizon(horizon)?;
    if targets.contains(&start) {
        return Err(ChainError::StartIsTarget(start));
    }
    let system = absorbing_system(m, targets)?;
    Ok(DistributionSeries::new(
        SeriesKind::UnionHitting,
        system.absorbed_mass_series(start, horizon),
    ))
}
