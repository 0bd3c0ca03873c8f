use std::fmt::Write;

use rwdist::graphs::{generate_graph, parse_edge_list};
use rwdist::{Graph, GraphKind};
use sha2::{Digest, Sha256};

use crate::args::GraphSource;
use crate::Failure;

pub struct Loaded {
    pub graph: Graph,
    /// The `--graph` path or `--generate` spec, as given.
    pub label: String,
    /// Whether the graph came from a seeded random generator.
    pub random: bool,
}

pub fn load(source: &GraphSource, seed: u64) -> Result<Loaded, Failure> {
    if let Some(path) = &source.graph {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::io(format!("cannot read {}: {e}", path.display())))?;
        let graph = parse_edge_list(&text)
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        return Ok(Loaded {
            graph,
            label: path.display().to_string(),
            random: false,
        });
    }
    let spec = source
        .generate
        .as_deref()
        .expect("clap requires one graph source");
    let (kind, n) = parse_generator(spec, seed).map_err(Failure::usage)?;
    let graph = generate_graph(kind, n).map_err(|e| Failure::usage(format!("{spec}: {e}")))?;
    let random = matches!(kind, GraphKind::ErdosRenyi { .. });
    Ok(Loaded {
        graph,
        label: spec.to_string(),
        random,
    })
}

/// Parses `KIND:N[:P]`.
fn parse_generator(spec: &str, seed: u64) -> Result<(GraphKind, usize), String> {
    let parts: Vec<&str> = spec.split(':').collect();
    let bad = || format!("invalid generator `{spec}`; expected KIND:N or erdos_renyi:N:P");
    let n: usize = parts.get(1).and_then(|s| s.parse().ok()).ok_or_else(bad)?;
    let kind = match (parts[0], parts.len()) {
        ("complete", 2) => GraphKind::Complete,
        ("cycle", 2) => GraphKind::Cycle,
        ("path", 2) => GraphKind::Path,
        ("erdos_renyi" | "erdos-renyi" | "er", 3) => {
            let p = parts[2].parse().map_err(|_| bad())?;
            GraphKind::ErdosRenyi { p, seed }
        }
        _ => return Err(bad()),
    };
    Ok((kind, n))
}

/// SHA-256 of the graph in canonical edge-list form.
pub fn graph_hash(g: &Graph) -> String {
    let mut canonical = format!("{}\n", g.node_count());
    for &(a, b) in g.edges() {
        writeln!(canonical, "{a} {b}").unwrap();
    }
    Sha256::digest(canonical.as_bytes())
        .iter()
        .fold(String::with_capacity(64), |mut hex, byte| {
            write!(hex, "{byte:02x}").unwrap();
            hex
        })
}
