use rayon::prelude::*;

use super::CoverError;
use crate::chains::{absorbing_system, check_horizon, check_node, DistributionSeries, SeriesKind};
use crate::graphs::TransitionMatrix;

pub const EXACT_CAP_DEFAULT: usize = 16;
pub const EXACT_CAP_CEILING: usize = 24;

/// Subsets are summed in this many fixed chunks, then the chunk sums are
/// added in order, so the result does not depend on the thread count.
const REDUCTION_CHUNKS: u64 = 256;

/// Node limit for inclusion-exclusion. Limits above
/// [`EXACT_CAP_CEILING`] are refused unless `force` is set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactCap {
    pub nodes: usize,
    pub force: bool,
}

impl Default for ExactCap {
    fn default() -> Self {
        ExactCap {
            nodes: EXACT_CAP_DEFAULT,
            force: false,
        }
    }
}

impl ExactCap {
    pub fn new(nodes: usize) -> Self {
        ExactCap {
            nodes,
            force: false,
        }
    }

    fn check(&self, n: usize) -> Result<(), CoverError> {
        if self.nodes > EXACT_CAP_CEILING && !self.force {
            return Err(CoverError::CapAboveCeiling {
                cap: self.nodes,
                ceiling: EXACT_CAP_CEILING,
            });
        }
        if n > self.nodes {
            return Err(CoverError::ExceedsCap { n, cap: self.nodes });
        }
        Ok(())
    }
}

/// Result of a cover computation together with the number of absorbing
/// propagations it ran.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverRun {
    pub series: DistributionSeries,
    pub propagations: u64,
}

/// Inclusion-exclusion over all `2^(n-1) - 1` non-empty subsets `S` of the
/// non-start nodes: `F(t) = sum_S (-1)^(|S|+1) F_S(t)`.
pub fn cover_exact_run(
    m: &TransitionMatrix,
    z: usize,
    horizon: usize,
    cap: ExactCap,
) -> Result<CoverRun, CoverError> {
    check_node(m, z)?;
    check_horizon(horizon)?;
    let n = m.node_count();
    cap.check(n)?;

    let others: Vec<usize> = (0..n).filter(|&v| v != z).collect();
    let total: u64 = (1u64 << others.len()) - 1;
    let chunk = total.div_ceil(REDUCTION_CHUNKS).max(1);
    let chunks = total.div_ceil(chunk);

    let partials: Vec<(Vec<f64>, u64)> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut acc = vec![0.0; horizon];
            let mut visited = 0u64;
            let lo = 1 + c * chunk;
            let hi = (lo + chunk).min(total + 1);
            let mut targets = Vec::with_capacity(others.len());
            for mask in lo..hi {
                targets.clear();
                targets.extend(
                    others
                        .iter()
                        .enumerate()
                        .filter(|(b, _)| mask >> b & 1 == 1)
                        .map(|(_, &v)| v),
                );
                let sign = if targets.len() % 2 == 1 { 1.0 } else { -1.0 };
                let system =
                    absorbing_system(m, &targets).expect("targets are valid non-start nodes");
                for (a, f) in acc.iter_mut().zip(system.absorbed_mass_series(z, horizon)) {
                    *a += sign * f;
                }
                visited += 1;
            }
            (acc, visited)
        })
        .collect();

    let mut cdf = vec![0.0; horizon];
    let mut propagations = 0;
    for (partial, visited) in partials {
        for (c, p) in cdf.iter_mut().zip(partial) {
            *c += p;
        }
        propagations += visited;
    }
    Ok(CoverRun {
        series: DistributionSeries::new(SeriesKind::Cover, cdf),
        propagations,
    })
}

pub fn cover_cdf_exact(
    m: &TransitionMatrix,
    z: usize,
    horizon: usize,
    cap: ExactCap,
) -> Result<DistributionSeries, CoverError> {
    cover_exact_run(m, z, horizon, cap).map(|run| run.series)
}
