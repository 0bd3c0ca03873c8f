use super::{
    check_horizon, check_node, hitting_cdf, ChainError, DistributionSeries, PmfSeries, SeriesKind,
};
use crate::graphs::{StochasticMatrix, TransitionMatrix};

/// The doubled chain on `2n` states used for commute times.
///
/// States `0..n` are the original walk with every outgoing edge of `j`
/// replaced by a single bridge `j -> n + j`. States `n..2n` are a copy of the
/// walk in which `n + i` is absorbing. Reaching `n + i` from `i` therefore
/// means going `i -> j`, crossing the bridge, then `j -> i`.
#[derive(Debug, Clone)]
pub struct CommuteChain {
    n: usize,
    i: usize,
    j: usize,
    matrix: StochasticMatrix,
}

pub fn commute_chain(m: &TransitionMatrix, i: usize, j: usize) -> Result<CommuteChain, ChainError> {
    check_node(m, i)?;
    check_node(m, j)?;
    if i == j {
        return Err(ChainError::SameEndpoints(i));
    }
    let n = m.node_count();
    let base = m.as_stochastic();
    let row_of = |k: usize, shift: usize| -> Vec<(usize, f64)> {
        let (cols, vals) = base.row(k);
        cols.iter()
            .map(|&c| c + shift)
            .zip(vals.iter().copied())
            .collect()
    };
    let rows = (0..2 * n).map(|s| match s {
        s if s == j => vec![(n + j, 1.0)],
        s if s < n => row_of(s, 0),
        s if s == n + i => vec![(s, 1.0)],
        s => row_of(s - n, n),
    });
    Ok(CommuteChain {
        n,
        i,
        j,
        matrix: StochasticMatrix::from_rows(rows),
    })
}

impl CommuteChain {
    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    pub fn matrix(&self) -> &StochasticMatrix {
        &self.matrix
    }

    /// Occupancy of the absorbing copy `n + i` after each of `1..=steps`
    /// chain steps from a point mass at `i`.
    pub fn absorbed_occupancy(&self, steps: usize) -> Vec<f64> {
        let dim = self.dim();
        let sink = self.n + self.i;
        let mut x = vec![0.0; dim];
        x[self.i] = 1.0;
        let mut y = vec![0.0; dim];
        (0..steps)
            .map(|_| {
                self.matrix.propagate(&x, &mut y);
                std::mem::swap(&mut x, &mut y);
                x[sink]
            })
            .collect()
    }
}

/// CDF of the commute time `h_ij + h_ji`.
///
/// The bridge edge of the doubled chain costs one extra step, so
/// `F(t)` is the sink occupancy after `t + 1` chain steps.
pub fn commute_cdf(
    m: &TransitionMatrix,
    i: usize,
    j: usize,
    horizon: usize,
) -> Result<DistributionSeries, ChainError> {
    check_horizon(horizon)?;
    let chain = commute_chain(m, i, j)?;
    let mut occupancy = chain.absorbed_occupancy(horizon + 1);
    occupancy.remove(0);
    Ok(DistributionSeries::new(SeriesKind::Commute, occupancy))
}

/// Commute-time PMF as the convolution of the two hitting-time PMFs:
/// `p(t) = sum_{s=1}^{t-1} p_ij(s) p_ji(t - s)`.
pub fn commute_pmf_convolution(
    m: &TransitionMatrix,
    i: usize,
    j: usize,
    horizon: usize,
) -> Result<PmfSeries, ChainError> {
    check_horizon(horizon)?;
    check_node(m, i)?;
    check_node(m, j)?;
    if i == j {
        return Err(ChainError::SameEndpoints(i));
    }
    let there = hitting_cdf(m, i, j, horizon)?.pmf();
    let back = hitting_cdf(m, j, i, horizon)?.pmf();
    let pmf = (1..=horizon)
        .map(|t| (1..t).map(|s| there.at(s) * back.at(t - s)).sum())
        .collect();
    Ok(PmfSeries::from_values(pmf))
}
