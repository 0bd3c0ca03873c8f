//! Undirected simple connected graphs and the random walk's transition matrix.
//!
//! Nodes are indexed `0..n`. A [`Graph`] is validated on construction: no
//! self-loops, no duplicate edges, and every node reachable from node 0.

mod generate;
mod parse;
mod transition;

use std::collections::VecDeque;

pub use generate::{generate_graph, GraphKind, ER_RETRY_BUDGET};
pub use parse::parse_edge_list;
pub use transition::{
    stationary_distribution, transition_matrix, StochasticMatrix, TransitionMatrix, DENSE_LIMIT,
};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GraphError {
    #[error("graph has no edges")]
    Empty,
    #[error("self-loop at node {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("node {node} out of range for a graph with {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },
    #[error("graph is disconnected: node {unreachable} is not reachable from node 0")]
    Disconnected { unreachable: usize },
    #[error("{kind} graph needs at least {min} nodes, got {n}")]
    TooFewNodes {
        kind: &'static str,
        min: usize,
        n: usize,
    },
    #[error("edge probability must lie in (0, 1], got {0}")]
    InvalidProbability(f64),
    #[error("no connected Erdos-Renyi sample after {attempts} attempts")]
    ConnectivityNotAchieved { attempts: usize },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
}

/// An undirected, simple, connected graph.
///
/// Equality and hashing use the canonical sorted edge list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// Canonical edges `(i, j)` with `i < j`, sorted.
    edges: Vec<(usize, usize)>,
    /// Sorted neighbor lists.
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Validates `edges` over nodes `0..n` and builds the graph. A walk needs
    /// somewhere to go, so graphs without edges are rejected as empty.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n < 2 || edges.is_empty() {
            return Err(GraphError::Empty);
        }
        let mut canonical = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            for node in [a, b] {
                if node >= n {
                    return Err(GraphError::NodeOutOfRange { node, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            canonical.push((a.min(b), a.max(b)));
        }
        canonical.sort_unstable();
        if let Some(w) = canonical.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }

        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in &canonical {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for row in &mut adjacency {
            row.sort_unstable();
        }

        let graph = Graph {
            n,
            edges: canonical,
            adjacency,
        };
        if let Some(unreachable) = graph.first_unreachable() {
            return Err(GraphError::Disconnected { unreachable });
        }
        Ok(graph)
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adjacency[node].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && self.adjacency[a].binary_search(&b).is_ok()
    }

    /// True if the graph has no odd cycle.
    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![None; self.n];
        side[0] = Some(false);
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            let s = side[v].unwrap();
            for &u in &self.adjacency[v] {
                match side[u] {
                    None => {
                        side[u] = Some(!s);
                        queue.push_back(u);
                    }
                    Some(su) if su == s => return false,
                    Some(_) => {}
                }
            }
        }
        true
    }

    fn first_unreachable(&self) -> Option<usize> {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for &u in &self.adjacency[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.iter().position(|&s| !s)
    }
}

/// Builds a validated graph from an edge list.
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
    Graph::new(n, edges)
}
