use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::CoverError;
use crate::chains::{
    check_horizon, check_node, hitting_cdf, union_hitting_cdf, DistributionSeries, PmfSeries,
    SeriesKind,
};
use crate::graphs::TransitionMatrix;

/// Absolute-term mass below which the alternating sum is summed in `f64`.
/// Above it, cancellation would eat the result, so exact integers are used.
const WELL_CONDITIONED: f64 = 4.0;

/// Cover CDF of the complete graph `K_n`:
/// `F(t) = sum_{g=1}^{n-1} (-1)^(g-1) C(n-1, g) (1 - ((n-g-1)/(n-1))^t)`.
pub fn cover_cdf_complete(n: usize, horizon: usize) -> Result<DistributionSeries, CoverError> {
    if n < 2 {
        return Err(CoverError::TooFewNodes(n));
    }
    check_horizon(horizon)?;
    // sum_g (-1)^(g-1) C(m, g) = 1, which folds the constant terms into the
    // g = 0 term of sum_{g=0}^{m} (-1)^g C(m, g) ((m-g)/m)^t.
    let m = n - 1;
    Ok(DistributionSeries::new(
        SeriesKind::Cover,
        alternating_power_sums(m, m, 1, horizon),
    ))
}

/// Cover PMF of `K_n`:
/// `p(t) = sum_{g=1}^{n-1} (-1)^(g-1) C(n-2, g-1) (1 - g/(n-1))^(t-1)`.
pub fn cover_pmf_complete(n: usize, horizon: usize) -> Result<PmfSeries, CoverError> {
    if n < 2 {
        return Err(CoverError::TooFewNodes(n));
    }
    check_horizon(horizon)?;
    // Substituting k = g - 1 gives sum_{k=0}^{m-1} (-1)^k C(m-1, k) ((m-1-k)/m)^(t-1).
    let m = n - 1;
    let pmf = alternating_power_sums(m - 1, m, 0, horizon);
    let tail = 1.0 - alternating_power_sums(m, m, horizon, 1)[0];
    Ok(PmfSeries::new(pmf, tail))
}

/// `S(e) = sum_{k=0}^{a} (-1)^k C(a, k) ((a - k) / m)^e` for
/// `e = first, first + 1, ..` (`count` values), with `0^0 = 1`.
fn alternating_power_sums(a: usize, m: usize, first: usize, count: usize) -> Vec<f64> {
    let ln_binom: Vec<f64> = (0..=a).map(|k| ln_choose(a, k)).collect();
    let ln_ratio: Vec<f64> = (0..=a).map(|k| ((a - k) as f64 / m as f64).ln()).collect();
    let term = |k: usize, e: usize| -> f64 {
        if a == k {
            return if e == 0 { 1.0 } else { 0.0 };
        }
        (ln_binom[k] + e as f64 * ln_ratio[k]).exp()
    };

    let mut exact: Option<ExactSums> = None;
    let mut exact_done = false;
    (first..first + count)
        .map(|e| {
            if !exact_done {
                let magnitude: f64 = (0..=a).map(|k| term(k, e)).sum();
                if magnitude > WELL_CONDITIONED {
                    let sums = exact.get_or_insert_with(|| ExactSums::new(a, m, e));
                    sums.advance_to(e);
                    return sums.value();
                }
                exact_done = true;
            }
            (0..=a)
                .map(|k| if k % 2 == 0 { term(k, e) } else { -term(k, e) })
                .sum()
        })
        .collect()
}

/// Integer numerator `sum_k (-1)^k C(a, k) (a - k)^e` over the denominator
/// `m^e`, advanced one exponent at a time.
struct ExactSums {
    binom: Vec<BigInt>,
    powers: Vec<BigInt>,
    denominator: BigUint,
    a: usize,
    m: usize,
    exponent: usize,
}

impl ExactSums {
    fn new(a: usize, m: usize, exponent: usize) -> Self {
        let mut binom = Vec::with_capacity(a + 1);
        let mut c = BigInt::one();
        for k in 0..=a {
            binom.push(c.clone());
            c = c * (a - k) / (k + 1);
        }
        let powers = (0..=a)
            .map(|k| num_traits::pow(BigInt::from(a - k), exponent))
            .collect();
        let denominator = num_traits::pow(BigUint::from(m), exponent);
        ExactSums {
            binom,
            powers,
            denominator,
            a,
            m,
            exponent,
        }
    }

    fn advance_to(&mut self, exponent: usize) {
        while self.exponent < exponent {
            for (k, p) in self.powers.iter_mut().enumerate() {
                *p *= self.a - k;
            }
            self.denominator *= self.m;
            self.exponent += 1;
        }
    }

    fn value(&self) -> f64 {
        let numerator: BigInt = self
            .binom
            .iter()
            .zip(&self.powers)
            .enumerate()
            .map(|(k, (c, p))| if k % 2 == 0 { c * p } else { -(c * p) })
            .sum();
        ratio_to_f64(&numerator, &self.denominator)
    }
}

fn ratio_to_f64(numerator: &BigInt, denominator: &BigUint) -> f64 {
    if numerator.is_zero() {
        return 0.0;
    }
    let magnitude = numerator
        .abs()
        .to_biguint()
        .expect("absolute value is non-negative");
    // Scale so the integer quotient carries 64+ significant bits.
    let shift = denominator.bits() as i64 - magnitude.bits() as i64 + 66;
    let quotient = if shift >= 0 {
        (magnitude << shift as u64) / denominator
    } else {
        magnitude / (denominator << (-shift) as u64)
    };
    let value = scale_by_power_of_two(quotient.to_f64().expect("quotient fits in f64"), -shift);
    if numerator.is_negative() {
        -value
    } else {
        value
    }
}

fn scale_by_power_of_two(mut x: f64, mut exp: i64) -> f64 {
    while exp > 1000 {
        x *= 2f64.powi(1000);
        exp -= 1000;
    }
    while exp < -1000 {
        x *= 2f64.powi(-1000);
        exp += 1000;
    }
    x * 2f64.powi(exp as i32)
}

fn ln_choose(a: usize, k: usize) -> f64 {
    let k = k.min(a - k);
    (0..k)
        .map(|i| ((a - i) as f64).ln() - ((i + 1) as f64).ln())
        .sum()
}

pub(crate) fn is_complete(m: &TransitionMatrix) -> bool {
    let n = m.node_count();
    m.edge_count() == n * (n - 1) / 2
}

/// The non-start nodes of a cycle in walking order from `z`, or `None` if
/// the graph is not a cycle.
pub(crate) fn cycle_order(m: &TransitionMatrix, z: usize) -> Option<Vec<usize>> {
    let n = m.node_count();
    if n < 3 || m.edge_count() != n || (0..n).any(|v| m.degree(v) != 2) {
        return None;
    }
    let mut order = Vec::with_capacity(n - 1);
    let (mut prev, mut cur) = (z, m.neighbors(z)[0]);
    while cur != z {
        order.push(cur);
        let next = m.neighbors(cur).iter().copied().find(|&u| u != prev)?;
        (prev, cur) = (cur, next);
    }
    Some(order)
}

/// The two degree-1 nodes of a path graph, or `None` if it is not a path.
pub(crate) fn path_endpoints(m: &TransitionMatrix) -> Option<(usize, usize)> {
    let n = m.node_count();
    if m.edge_count() != n - 1 || (0..n).any(|v| m.degree(v) > 2) {
        return None;
    }
    let mut ends = (0..n).filter(|&v| m.degree(v) == 1);
    match (ends.next(), ends.next(), ends.next()) {
        (Some(a), Some(b), None) => Some((a, b)),
        _ => None,
    }
}

/// Cover CDF of a cycle started at `z`. With `x_2, .., x_n` the other nodes
/// in walking order, the complements of the reach events are nested along
/// the cycle, giving `F(t) = sum_i P(E_i) - sum_i P(E_i or E_{i+1})`.
pub fn cover_cdf_cycle(
    m: &TransitionMatrix,
    z: usize,
    horizon: usize,
) -> Result<DistributionSeries, CoverError> {
    check_node(m, z)?;
    check_horizon(horizon)?;
    let order = cycle_order(m, z).ok_or(CoverError::WrongShape { expected: "cycle" })?;
    let mut cdf = vec![0.0; horizon];
    for &x in &order {
        let hit = hitting_cdf(m, z, x, horizon)?;
        cdf.iter_mut().zip(hit.cdf()).for_each(|(c, h)| *c += h);
    }
    for pair in order.windows(2) {
        let union = union_hitting_cdf(m, z, pair, horizon)?;
        cdf.iter_mut().zip(union.cdf()).for_each(|(c, u)| *c -= u);
    }
    Ok(DistributionSeries::new(SeriesKind::Cover, cdf))
}

/// Cover CDF of a path started at `z`: the walk has covered the path once
/// it has reached both endpoints.
pub fn cover_cdf_path(
    m: &TransitionMatrix,
    z: usize,
    horizon: usize,
) -> Result<DistributionSeries, CoverError> {
    check_node(m, z)?;
    check_horizon(horizon)?;
    let (first, last) = path_endpoints(m).ok_or(CoverError::WrongShape { expected: "path" })?;
    let cdf = if z == first {
        hitting_cdf(m, z, last, horizon)?.cdf().to_vec()
    } else if z == last {
        hitting_cdf(m, z, first, horizon)?.cdf().to_vec()
    } else {
        let a = hitting_cdf(m, z, first, horizon)?;
        let b = hitting_cdf(m, z, last, horizon)?;
        let u = union_hitting_cdf(m, z, &[first, last], horizon)?;
        (0..horizon)
            .map(|k| a.cdf()[k] + b.cdf()[k] - u.cdf()[k])
            .collect()
    };
    Ok(DistributionSeries::new(SeriesKind::Cover, cdf))
}
