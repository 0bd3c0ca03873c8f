use super::exact::CoverRun;
use super::CoverError;
use crate::chains::{
    check_horizon, check_node, hitting_cdf, union_hitting_cdf, DistributionSeries, SeriesKind,
};
use crate::graphs::{Graph, TransitionMatrix};

/// A permutation of the non-start nodes, with a flag per consecutive pair
/// telling whether an edge joins them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeOrdering {
    start: usize,
    order: Vec<usize>,
    adjacent: Vec<bool>,
}

impl NodeOrdering {
    /// Validates that `order` lists every node except `start` exactly once.
    pub fn explicit(
        m: &TransitionMatrix,
        start: usize,
        order: Vec<usize>,
    ) -> Result<Self, CoverError> {
        check_node(m, start)?;
        let n = m.node_count();
        let mut seen = vec![false; n];
        seen[start] = true;
        for &v in &order {
            if v >= n {
                return Err(CoverError::InvalidOrdering(format!(
                    "node {v} out of range"
                )));
            }
            if seen[v] {
                let what = if v == start {
                    "is the start node"
                } else {
                    "appears twice"
                };
                return Err(CoverError::InvalidOrdering(format!("node {v} {what}")));
            }
            seen[v] = true;
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(CoverError::InvalidOrdering(format!(
                "node {missing} is missing"
            )));
        }
        let adjacent = order
            .windows(2)
            .map(|w| m.neighbors(w[0]).contains(&w[1]))
            .collect();
        Ok(NodeOrdering {
            start,
            order,
            adjacent,
        })
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn adjacent(&self) -> &[bool] {
        &self.adjacent
    }

    fn check_for(&self, m: &TransitionMatrix, z: usize) -> Result<(), CoverError> {
        if self.start != z || self.order.len() + 1 != m.node_count() {
            return Err(CoverError::InvalidOrdering(format!(
                "ordering was built for start {} over {} nodes",
                self.start,
                self.order.len() + 1
            )));
        }
        Ok(())
    }
}

/// Depth-first preorder of a spanning tree rooted at `z` (neighbors visited
/// in increasing index order), with `z` itself dropped.
pub fn default_ordering(g: &Graph, z: usize) -> Result<NodeOrdering, CoverError> {
    let n = g.node_count();
    if z >= n {
        return Err(crate::chains::ChainError::NodeOutOfRange { node: z, n }.into());
    }
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n - 1);
    let mut stack = vec![z];
    while let Some(v) = stack.pop() {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        if v != z {
            order.push(v);
        }
        stack.extend(g.neighbors(v).iter().rev().filter(|&&u| !seen[u]));
    }
    let adjacent = order.windows(2).map(|w| g.has_edge(w[0], w[1])).collect();
    Ok(NodeOrdering {
        start: z,
        order,
        adjacent,
    })
}

/// Neighbor-pair product approximation of the cover CDF.
///
/// With `P_i = P(E_{x_i})` and `J_i = P(E_{x_i} and E_{x_{i+1}})` along the
/// ordering, the estimate `prod_i P_i * prod_i J_i / (P_i P_{i+1})`
/// telescopes to `P_1 * prod_i (J_i / P_i)`, which is how it is evaluated:
/// every factor lies in `[0, 1]` so nothing overflows on long paths.
/// The value at `t` is 0 whenever some `P_i(t)` is 0.
pub fn cover_approx_run(
    m: &TransitionMatrix,
    z: usize,
    horizon: usize,
    ordering: &NodeOrdering,
) -> Result<CoverRun, CoverError> {
    check_node(m, z)?;
    check_horizon(horizon)?;
    ordering.check_for(m, z)?;
    let order = ordering.order();

    let singles = order
        .iter()
        .map(|&x| hitting_cdf(m, z, x, horizon))
        .collect::<Result<Vec<_>, _>>()?;
    let unions = order
        .windows(2)
        .map(|w| union_hitting_cdf(m, z, w, horizon))
        .collect::<Result<Vec<_>, _>>()?;

    let cdf = (1..=horizon)
        .map(|t| {
            if singles.iter().any(|s| s.at(t) == 0.0) {
                return 0.0;
            }
            let mut value = singles[0].at(t);
            for (k, union) in unions.iter().enumerate() {
                let (a, b) = (singles[k].at(t), singles[k + 1].at(t));
                let joint = a + b - union.at(t);
                value *= joint / a;
            }
            value
        })
        .collect();
    Ok(CoverRun {
        series: DistributionSeries::new(SeriesKind::Cover, cdf),
        propagations: (singles.len() + unions.len()) as u64,
    })
}

pub fn cover_cdf_approx(
    m: &TransitionMatrix,
    z: usize,
    horizon: usize,
    ordering: &NodeOrdering,
) -> Result<DistributionSeries, CoverError> {
    cover_approx_run(m, z, horizon, ordering).map(|run| run.series)
}

/// Product approximation with correction ratios over every pair `i < j`.
///
/// Values are reported raw and can exceed 1 when the events are nested.
/// Evaluated in log space with a separate sign.
pub fn cover_approx_all_pairs_run(
    m: &TransitionMatrix,
    z: usize,
    horizon: usize,
) -> Result<CoverRun, CoverError> {
    check_node(m, z)?;
    check_horizon(horizon)?;
    let others: Vec<usize> = (0..m.node_count()).filter(|&v| v != z).collect();
    let singles = others
        .iter()
        .map(|&x| hitting_cdf(m, z, x, horizon))
        .collect::<Result<Vec<_>, _>>()?;
    let mut pairs = Vec::new();
    for a in 0..others.len() {
        for b in a + 1..others.len() {
            pairs.push((
                a,
                b,
                union_hitting_cdf(m, z, &[others[a], others[b]], horizon)?,
            ));
        }
    }

    let cdf = (1..=horizon)
        .map(|t| {
            if singles.iter().any(|s| s.at(t) == 0.0) {
                return 0.0;
            }
            let mut log = singles.iter().map(|s| s.at(t).ln()).sum::<f64>();
            let mut sign = 1.0;
            for (a, b, union) in &pairs {
                let (pa, pb) = (singles[*a].at(t), singles[*b].at(t));
                let joint = pa + pb - union.at(t);
                if joint == 0.0 {
                    return 0.0;
                }
                if joint < 0.0 {
                    sign = -sign;
                }
                log += joint.abs().ln() - pa.ln() - pb.ln();
            }
            sign * log.exp()
        })
        .collect();
    Ok(CoverRun {
        series: DistributionSeries::new(SeriesKind::Cover, cdf),
        propagations: (singles.len() + pairs.len()) as u64,
    })
}

pub fn cover_cdf_approx_all_pairs(
    m: &TransitionMatrix,
    z: usize,
    horizon: usize,
) -> Result<DistributionSeries, CoverError> {
    cover_approx_all_pairs_run(m, z, horizon).map(|run| run.series)
}
