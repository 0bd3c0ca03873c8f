use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, GraphError};

/// Number of Erdos-Renyi draws attempted before giving up on connectivity.
pub const ER_RETRY_BUDGET: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GraphKind {
    Complete,
    Cycle,
    Path,
    /// G(n, p); disconnected draws are rejected and redrawn with `seed + 1`.
    ErdosRenyi {
        p: f64,
        seed: u64,
    },
}

impl GraphKind {
    pub fn name(&self) -> &'static str {
        match self {
            GraphKind::Complete => "complete",
            GraphKind::Cycle => "cycle",
            GraphKind::Path => "path",
            GraphKind::ErdosRenyi { .. } => "erdos_renyi",
        }
    }
}

pub fn generate_graph(kind: GraphKind, n: usize) -> Result<Graph, GraphError> {
    // A simple cycle needs three nodes; C2 would repeat its only edge.
    let min = if kind == GraphKind::Cycle { 3 } else { 2 };
    if n < min {
        return Err(GraphError::TooFewNodes {
            kind: kind.name(),
            min,
            n,
        });
    }
    match kind {
        GraphKind::Complete => {
            let edges: Vec<_> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .collect();
            Graph::new(n, &edges)
        }
        GraphKind::Cycle => {
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::new(n, &edges)
        }
        GraphKind::Path => {
            let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            Graph::new(n, &edges)
        }
        GraphKind::ErdosRenyi { p, seed } => erdos_renyi(n, p, seed),
    }
}

fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(GraphError::InvalidProbability(p));
    }
    for attempt in 0..ER_RETRY_BUDGET {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt as u64));
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen::<f64>() < p {
                    edges.push((i, j));
                }
            }
        }
        match Graph::new(n, &edges) {
            Ok(g) => return Ok(g),
            Err(GraphError::Disconnected { .. } | GraphError::Empty) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(GraphError::ConnectivityNotAchieved {
        attempts: ER_RETRY_BUDGET,
    })
}
