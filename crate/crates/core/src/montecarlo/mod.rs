//! Monte Carlo oracle: simulated stopping times, empirical CDFs and
//! Dvoretzky-Kiefer-Wolfowitz confidence bands.
//!
//! Trial `k` draws from a ChaCha8 generator seeded with the configured seed
//! and switched to stream `k`, so every trial is reproducible on its own and
//! results do not depend on how trials are scheduled across threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::chains::{DistributionSeries, SeriesKind};
use crate::graphs::Graph;

/// Identifier of the random stream layout, recorded in output metadata.
pub const RNG_ALGORITHM: &str = "chacha8/seed_from_u64/stream=trial";
pub const STEP_CAP_DEFAULT: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SimulationError {
    #[error("invalid simulation config: {0}")]
    InvalidConfig(&'static str),
    #[error("invalid stop rule: {0}")]
    InvalidRule(String),
    #[error("stopping-time sample is empty")]
    EmptySample,
    #[error("confidence must lie strictly between 0 and 1, got {0}")]
    ConfidenceOutOfRange(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SimulationConfig {
    pub trials: usize,
    pub seed: u64,
    /// Trials still running after this many steps are censored.
    pub step_cap: u64,
}

impl SimulationConfig {
    pub fn new(trials: usize, seed: u64) -> Self {
        SimulationConfig {
            trials,
            seed,
            step_cap: STEP_CAP_DEFAULT,
        }
    }

    fn validate(&self) -> Result<(), SimulationError> {
        if self.trials == 0 {
            return Err(SimulationError::InvalidConfig("trials must be at least 1"));
        }
        if self.step_cap == 0 {
            return Err(SimulationError::InvalidConfig(
                "step cap must be at least 1",
            ));
        }
        Ok(())
    }
}

/// When a simulated walk stops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StopRule {
    /// First visit to the node after time 0.
    HitTarget(usize),
    /// First visit to any node of the set.
    HitAnyOf(Vec<usize>),
    /// Every node of the set visited; the start counts as visited at time 0.
    HitAllOf(Vec<usize>),
    CoverAll,
    /// Reach `j` from `i`, then return to `i`. The walk must start at `i`.
    Commute {
        i: usize,
        j: usize,
    },
}

/// A stopping time, or `None` for a trial censored at the step cap.
pub type StoppingTime = Option<u64>;

/// Runs `config.trials` independent walks from `start` until `rule` fires.
pub fn simulate_walk_until(
    g: &Graph,
    start: usize,
    rule: &StopRule,
    config: &SimulationConfig,
) -> Result<Vec<StoppingTime>, SimulationError> {
    config.validate()?;
    let n = g.node_count();
    let in_range = |v: usize| {
        if v < n {
            Ok(())
        } else {
            Err(SimulationError::InvalidRule(format!(
                "node {v} out of range for {n} nodes"
            )))
        }
    };
    in_range(start)?;
    let goal = match rule {
        StopRule::HitTarget(x) => {
            in_range(*x)?;
            if *x == start {
                return Err(SimulationError::InvalidRule(format!(
                    "target {x} equals the start node"
                )));
            }
            Goal::Any(membership(n, &[*x]))
        }
        StopRule::HitAnyOf(set) => {
            set.iter().try_for_each(|&v| in_range(v))?;
            if set.is_empty() || set.contains(&start) {
                return Err(SimulationError::InvalidRule(
                    "target set must be non-empty and exclude the start".into(),
                ));
            }
            Goal::Any(membership(n, set))
        }
        StopRule::HitAllOf(set) => {
            set.iter().try_for_each(|&v| in_range(v))?;
            if set.is_empty() {
                return Err(SimulationError::InvalidRule("target set is empty".into()));
            }
            Goal::All(membership(n, set))
        }
        StopRule::CoverAll => Goal::All(vec![true; n]),
        StopRule::Commute { i, j } => {
            in_range(*i)?;
            in_range(*j)?;
            if i == j || *i != start {
                return Err(SimulationError::InvalidRule(format!(
                    "commute needs distinct endpoints starting at i (i={i}, j={j}, start={start})"
                )));
            }
            Goal::Commute { i: *i, j: *j }
        }
    };

    Ok((0..config.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            rng.set_stream(trial as u64);
            run_trial(g, start, &goal, config.step_cap, &mut rng)
        })
        .collect())
}

enum Goal {
    Any(Vec<bool>),
    All(Vec<bool>),
    Commute { i: usize, j: usize },
}

fn membership(n: usize, set: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    set.iter().for_each(|&v| m[v] = true);
    m
}

fn run_trial(g: &Graph, start: usize, goal: &Goal, cap: u64, rng: &mut ChaCha8Rng) -> StoppingTime {
    let mut at = start;
    let mut step = || {
        let nb = g.neighbors(at);
        at = nb[rng.gen_range(0..nb.len())];
        at
    };
    match goal {
        Goal::Any(targets) => (1..=cap).find(|_| targets[step()]),
        Goal::All(targets) => {
            let mut seen = vec![false; targets.len()];
            let mut missing = targets.iter().filter(|&&t| t).count();
            if targets[start] {
                seen[start] = true;
                missing -= 1;
            }
            if missing == 0 {
                return Some(0);
            }
            (1..=cap).find(|_| {
                let v = step();
                if targets[v] && !seen[v] {
                    seen[v] = true;
                    missing -= 1;
                }
                missing == 0
            })
        }
        Goal::Commute { i, j } => {
            let mut reached_j = false;
            (1..=cap).find(|_| {
                let v = step();
                if !reached_j {
                    reached_j = v == *j;
                    false
                } else {
                    v == *i
                }
            })
        }
    }
}

/// Empirical CDF of a stopping-time sample over `t = 1..=T`.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalCdf {
    values: Vec<f64>,
    trials: usize,
    censored: usize,
}

impl EmpiricalCdf {
    pub fn horizon(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn at(&self, t: usize) -> f64 {
        self.values[t - 1]
    }

    pub fn trials(&self) -> usize {
        self.trials
    }

    pub fn censored(&self) -> usize {
        self.censored
    }

    pub fn to_series(&self, kind: SeriesKind) -> DistributionSeries {
        DistributionSeries::new(kind, self.values.clone())
    }

    /// Pointwise `F - eps` and `F + eps`, clipped to `[0, 1]`.
    pub fn band(&self, eps: f64) -> (Vec<f64>, Vec<f64>) {
        self.values
            .iter()
            .map(|&v| ((v - eps).max(0.0), (v + eps).min(1.0)))
            .unzip()
    }

    /// `max_t |F_hat(t) - F(t)|` against a model series of the same horizon.
    pub fn sup_distance(&self, model: &[f64]) -> f64 {
        assert_eq!(model.len(), self.values.len(), "horizon mismatch");
        self.values
            .iter()
            .zip(model)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// `F_hat(t)` is the fraction of trials that stopped at or before `t`.
pub fn empirical_cdf(
    samples: &[StoppingTime],
    horizon: usize,
) -> Result<EmpiricalCdf, SimulationError> {
    if samples.is_empty() {
        return Err(SimulationError::EmptySample);
    }
    let mut counts = vec![0usize; horizon + 1];
    let mut censored = 0;
    for s in samples {
        match *s {
            None => censored += 1,
            Some(t) if t as usize <= horizon => counts[t as usize] += 1,
            Some(_) => {}
        }
    }
    let total = samples.len() as f64;
    let mut acc = counts[0];
    let values = (1..=horizon)
        .map(|t| {
            acc += counts[t];
            acc as f64 / total
        })
        .collect();
    Ok(EmpiricalCdf {
        values,
        trials: samples.len(),
        censored,
    })
}

/// DKW half-width: with probability `confidence`,
/// `sup_t |F_hat(t) - F(t)| <= sqrt(ln(2 / (1 - confidence)) / (2 N))`.
pub fn dkw_band(trials: usize, confidence: f64) -> Result<f64, SimulationError> {
    if !(confidence > 0.0 && confidence < 1.0) {
        return Err(SimulationError::ConfidenceOutOfRange(confidence));
    }
    if trials == 0 {
        return Err(SimulationError::EmptySample);
    }
    Ok(((2.0 / (1.0 - confidence)).ln() / (2.0 * trials as f64)).sqrt())
}
