use std::fmt::Write;

use serde::Serialize;

use crate::args::Format;

#[derive(Debug, Clone, Serialize)]
pub struct Metadata {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub methods: Vec<String>,
    pub graph: String,
    pub graph_hash: String,
    pub nodes: usize,
    pub edges: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub start: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub targets: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<(usize, usize)>,
    pub horizon: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simulation: Option<SimulationMeta>,
    pub clamped: bool,
    pub version: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct SimulationMeta {
    pub rng: &'static str,
    pub trials: usize,
    pub censored: usize,
    pub step_cap: u64,
    /// 99% DKW half-width.
    pub dkw_epsilon: f64,
}

/// One series with optional confidence band columns.
pub struct Series {
    pub cdf: Vec<f64>,
    pub pmf: Vec<f64>,
    pub band: Option<(Vec<f64>, Vec<f64>)>,
}

#[derive(Serialize)]
struct Record {
    t: usize,
    cdf: f64,
    pmf: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    band_low: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    band_high: Option<f64>,
}

#[derive(Serialize)]
struct SeriesDocument<'a> {
    metadata: &'a Metadata,
    records: Vec<Record>,
}

/// Shortest decimal that round-trips to the same `f64`.
fn num(x: f64) -> String {
    format!("{x:?}")
}

pub fn render_series(meta: &Metadata, series: &Series, format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::from("t,cdf,pmf");
            if series.band.is_some() {
                out += ",band_low,band_high";
            }
            out.push('\n');
            for (k, (c, p)) in series.cdf.iter().zip(&series.pmf).enumerate() {
                write!(out, "{},{},{}", k + 1, num(*c), num(*p)).unwrap();
                if let Some((lo, hi)) = &series.band {
                    write!(out, ",{},{}", num(lo[k]), num(hi[k])).unwrap();
                }
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let records = (0..series.cdf.len())
                .map(|k| Record {
                    t: k + 1,
                    cdf: series.cdf[k],
                    pmf: series.pmf[k],
                    band_low: series.band.as_ref().map(|b| b.0[k]),
                    band_high: series.band.as_ref().map(|b| b.1[k]),
                })
                .collect();
            json(&SeriesDocument {
                metadata: meta,
                records,
            })
        }
    }
}

#[derive(Serialize)]
pub struct SupError {
    pub a: String,
    pub b: String,
    pub value: f64,
}

#[derive(Serialize)]
struct CompareRecord {
    t: usize,
    cdf: serde_json::Map<String, serde_json::Value>,
}

#[derive(Serialize)]
struct CompareDocument<'a> {
    metadata: &'a Metadata,
    records: Vec<CompareRecord>,
    sup_error: &'a [SupError],
}

pub fn render_compare(
    meta: &Metadata,
    names: &[String],
    cdfs: &[Vec<f64>],
    sup: &[SupError],
    format: Format,
) -> String {
    let horizon = cdfs[0].len();
    match format {
        Format::Csv => {
            let mut out = format!("t,{}\n", names.join(","));
            for k in 0..horizon {
                write!(out, "{}", k + 1).unwrap();
                for cdf in cdfs {
                    write!(out, ",{}", num(cdf[k])).unwrap();
                }
                out.push('\n');
            }
            out += "# sup_error";
            for s in sup {
                write!(out, " {}:{}={}", s.a, s.b, num(s.value)).unwrap();
            }
            out.push('\n');
            out
        }
        Format::Json => {
            let records = (0..horizon)
                .map(|k| CompareRecord {
                    t: k + 1,
                    cdf: names
                        .iter()
                        .zip(cdfs)
                        .map(|(name, cdf)| (name.clone(), cdf[k].into()))
                        .collect(),
                })
                .collect();
            json(&CompareDocument {
                metadata: meta,
                records,
                sup_error: sup,
            })
        }
    }
}

fn json<T: Serialize>(doc: &T) -> String {
    let mut out =
        serde_json::to_string(doc).expect("documents hold only finite numbers and strings");
    out.push('\n');
    out
}
