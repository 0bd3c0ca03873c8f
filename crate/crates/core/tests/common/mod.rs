//! Helpers shared by the integration tests: the four-node example graph,
//! its printed closed forms, random connected graphs and a brute-force walk
//! enumerator used as an independent oracle.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rwdist::graphs::build_graph;
use rwdist::Graph;

/// Nodes 0..4 with edges 0-1, 0-2, 0-3, 1-2, 2-3.
pub fn four_node() -> Graph {
    build_graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]).unwrap()
}

/// Printed closed form for the stationary-chain entry (0, 3) after t steps.
pub fn m14(t: usize) -> f64 {
    (1.0 - (-2.0f64 / 3.0).powi(t as i32)) / 5.0
}

/// Printed closed form for the hitting CDF from node 0 to node 3.
pub fn d14(t: usize) -> f64 {
    let s = 13f64.sqrt();
    let t = t as i32;
    1.0 - 6f64.powi(-t) / (2.0 * s)
        * ((1.0 - s).powi(t) * (s - 3.0) + (1.0 + s).powi(t) * (s + 3.0))
}

/// Printed closed form for the occupancy of the absorbing copy of node 0 in
/// the doubled chain for the pair (0, 3).
pub fn c15(t: usize) -> f64 {
    let (s, r) = (13f64.sqrt(), 3f64.sqrt());
    let ti = t as i32;
    let half = r.powi(ti);
    let bracket = 13.0 * 2f64.powi(ti) * half * (3.0 + 2.0 * r + 4.0 * half)
        - (1.0 + s).powi(ti) * (65.0 + 19.0 * s)
        + (1.0 - s).powi(ti) * (-65.0 + 19.0 * s)
        + (-2f64).powi(ti) * half * (39.0 - 26.0 * r);
    2f64.powi(-ti - 2) * 3f64.powi(-ti) / 13.0 * bracket
}

/// Connected graph on `n` nodes: a random spanning tree plus each remaining
/// pair with probability `p`.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let mut edges = Vec::new();
    for k in 1..n {
        let parent = rng.gen_range(0..k);
        edges.push((labels[parent].min(labels[k]), labels[parent].max(labels[k])));
    }
    for a in 0..n {
        for b in a + 1..n {
            if !edges.contains(&(a, b)) && rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    build_graph(n, &edges).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `P(cover time = t)` for `t = 1..=horizon` by enumerating every walk of
/// each length. Exponential in `horizon`; only for tiny graphs.
pub fn brute_force_cover_pmf(g: &Graph, start: usize, horizon: usize) -> Vec<f64> {
    let n = g.node_count();
    let full = (1u64 << n) - 1;
    let mut pmf = vec![0.0; horizon];
    // Frontier of (node, visited set, probability) for walks not yet covering.
    let mut frontier = vec![(start, 1u64 << start, 1.0)];
    for slot in pmf.iter_mut() {
        let mut next = Vec::new();
        for &(v, seen, p) in &frontier {
            let q = p / g.degree(v) as f64;
            for &w in g.neighbors(v) {
                let seen = seen | 1 << w;
                if seen == full {
                    *slot += q;
                } else {
                    next.push((w, seen, q));
                }
            }
        }
        frontier = next;
    }
    pmf
}

pub fn assert_close(label: &str, got: f64, want: f64, tol: f64) {
    assert!(
        (got - want).abs() <= tol,
        "{label}: got {got}, want {want}, tolerance {tol}"
    );
}
