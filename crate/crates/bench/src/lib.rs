//! Fixed benchmark inputs, shared by the criterion benches.

use rwdist::graphs::{generate_graph, transition_matrix};
use rwdist::{Graph, GraphKind, TransitionMatrix};

/// Connected G(n, 0.3) with a fixed seed.
pub fn random_graph(n: usize) -> Graph {
    generate_graph(GraphKind::ErdosRenyi { p: 0.3, seed: 7 }, n)
        .expect("connected draw within budget")
}

pub fn walk(kind: GraphKind, n: usize) -> (Graph, TransitionMatrix) {
    let g = generate_graph(kind, n).expect("valid generator size");
    let m = transition_matrix(&g);
    (g, m)
}
