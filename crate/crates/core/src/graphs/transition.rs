use super::Graph;

/// Largest dimension for which [`TransitionMatrix::to_dense`] materializes a
/// full matrix.
pub const DENSE_LIMIT: usize = 1024;

/// A row-stochastic matrix in compressed sparse row form.
///
/// Distributions are row vectors, so one walk step maps `x` to `x * P`.
#[derive(Debug, Clone, PartialEq)]
pub struct StochasticMatrix {
    offsets: Vec<usize>,
    cols: Vec<usize>,
    vals: Vec<f64>,
}

impl StochasticMatrix {
    /// Builds from per-row `(column, probability)` lists.
    pub fn from_rows<I, R>(rows: I) -> Self
    where
        I: IntoIterator<Item = R>,
        R: IntoIterator<Item = (usize, f64)>,
    {
        let mut offsets = vec![0];
        let mut cols = Vec::new();
        let mut vals = Vec::new();
        for row in rows {
            for (c, v) in row {
                cols.push(c);
                vals.push(v);
            }
            offsets.push(cols.len());
        }
        StochasticMatrix {
            offsets,
            cols,
            vals,
        }
    }

    pub fn dim(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Column indices and values of row `i`.
    pub fn row(&self, i: usize) -> (&[usize], &[f64]) {
        let r = self.offsets[i]..self.offsets[i + 1];
        (&self.cols[r.clone()], &self.vals[r])
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        let (cols, vals) = self.row(i);
        cols.iter()
            .zip(vals)
            .filter(|(&c, _)| c == j)
            .map(|(_, &v)| v)
            .sum()
    }

    pub fn row_sum(&self, i: usize) -> f64 {
        self.row(i).1.iter().sum()
    }

    /// One propagation step: `next = current * P`.
    pub fn propagate(&self, current: &[f64], next: &mut [f64]) {
        debug_assert_eq!(current.len(), self.dim());
        next.iter_mut().for_each(|v| *v = 0.0);
        for (i, &mass) in current.iter().enumerate() {
            if mass == 0.0 {
                continue;
            }
            let (cols, vals) = self.row(i);
            for (&c, &v) in cols.iter().zip(vals) {
                next[c] += mass * v;
            }
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let mut row = vec![0.0; n];
                let (cols, vals) = self.row(i);
                for (&c, &v) in cols.iter().zip(vals) {
                    row[c] += v;
                }
                row
            })
            .collect()
    }
}

/// Transition matrix of the simple random walk on a [`Graph`]:
/// `P[i][j] = 1/deg(i)` when `{i, j}` is an edge, else 0.
#[derive(Debug, Clone, PartialEq)]
pub struct TransitionMatrix {
    matrix: StochasticMatrix,
    edge_count: usize,
}

impl TransitionMatrix {
    pub fn node_count(&self) -> usize {
        self.matrix.dim()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, node: usize) -> usize {
        self.matrix.row(node).0.len()
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        self.matrix.row(node).0
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.matrix.entry(i, j)
    }

    pub fn as_stochastic(&self) -> &StochasticMatrix {
        &self.matrix
    }

    /// Dense copy of the matrix, or `None` above [`DENSE_LIMIT`] nodes.
    pub fn to_dense(&self) -> Option<Vec<Vec<f64>>> {
        (self.node_count() <= DENSE_LIMIT).then(|| self.matrix.to_dense())
    }

    /// Occupancy distribution after `steps` unabsorbed walk steps from `start`.
    pub fn occupancy_after(&self, start: usize, steps: usize) -> Vec<f64> {
        let n = self.node_count();
        let mut x = vec![0.0; n];
        x[start] = 1.0;
        let mut y = vec![0.0; n];
        for _ in 0..steps {
            self.matrix.propagate(&x, &mut y);
            std::mem::swap(&mut x, &mut y);
        }
        x
    }
}

pub fn transition_matrix(g: &Graph) -> TransitionMatrix {
    let rows = (0..g.node_count()).map(|i| {
        let p = 1.0 / g.degree(i) as f64;
        g.neighbors(i).iter().map(move |&j| (j, p))
    });
    TransitionMatrix {
        matrix: StochasticMatrix::from_rows(rows),
        edge_count: g.edge_count(),
    }
}

/// Limit occupancy `deg(j) / 2m` of the walk.
pub fn stationary_distribution(g: &Graph) -> Vec<f64> {
    let total = 2.0 * g.edge_count() as f64;
    g.degrees().into_iter().map(|d| d as f64 / total).collect()
}
