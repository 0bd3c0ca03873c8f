//! Time distributions of random walks on undirected graphs.
//!
//! * [`graphs`]: validated graphs, generators, the edge-list format and the
//!   walk's transition matrix.
//! * [`chains`]: hitting, union-hitting and commute time CDFs/PMFs from
//!   absorbing-chain propagation.
//! * [`cover`]: cover-time CDFs, exact by inclusion-exclusion, by the
//!   neighbor-pair product approximation, and in closed form for complete,
//!   cycle and path graphs.
//! * [`montecarlo`]: simulated stopping times with DKW confidence bands.
//!
//! ```
//! use rwdist::graphs::{build_graph, transition_matrix};
//! use rwdist::chains::hitting_cdf;
//!
//! let g = build_graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]).unwrap();
//! let m = transition_matrix(&g);
//! let f = hitting_cdf(&m, 0, 3, 10).unwrap();
//! assert!((f.at(1) - 1.0 / 3.0).abs() < 1e-15);
//! ```

pub mod chains;
pub mod cover;
pub mod graphs;
pub mod montecarlo;

pub use chains::{DistributionSeries, PmfSeries, SeriesKind};
pub use cover::{CoverMethod, CoverQuery, ExactCap, NodeOrdering};
pub use graphs::{Graph, GraphKind, TransitionMatrix};
pub use montecarlo::{EmpiricalCdf, SimulationConfig, StopRule};
