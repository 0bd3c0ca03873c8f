use super::{Graph, GraphError};

/// Parses the edge-list text format: the first non-comment line holds `n`,
/// each later non-empty line holds a pair `i j`. Lines starting with `#` are
/// ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let malformed = |message: String| GraphError::Malformed {
            line: line_no,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let Some(count) = n else {
            if fields.len() != 1 {
                return Err(malformed(format!("expected node count, got {line:?}")));
            }
            n = Some(
                fields[0]
                    .parse()
                    .map_err(|_| malformed(format!("invalid node count {:?}", fields[0])))?,
            );
            continue;
        };
        if fields.len() != 2 {
            return Err(malformed(format!(
                "expected two node indices, got {line:?}"
            )));
        }
        let mut pair = [0usize; 2];
        for (slot, field) in pair.iter_mut().zip(&fields) {
            *slot = field
                .parse()
                .map_err(|_| malformed(format!("invalid node index {field:?}")))?;
            if *slot >= count {
                return Err(GraphError::NodeOutOfRange {
                    node: *slot,
                    n: count,
                });
            }
        }
        edges.push((pair[0], pair[1]));
    }
    let n = n.ok_or(GraphError::Empty)?;
    Graph::new(n, &edges)
}
