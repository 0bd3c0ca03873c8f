use rwdist::chains::{
    commute_cdf, commute_pmf_convolution, default_horizon, hitting_cdf, pmf_from_cdf,
    union_hitting_cdf,
};
use rwdist::cover::{
    cover_cdf, detect_shape, sup_error, ClosedShape, CoverError, OrderingPolicy, EXACT_CAP_CEILING,
};
use rwdist::montecarlo::{dkw_band, empirical_cdf, simulate_walk_until, RNG_ALGORITHM};
use rwdist::{
    CoverMethod, CoverQuery, DistributionSeries, ExactCap, SeriesKind, SimulationConfig, StopRule,
};

use crate::args::Common;
use crate::args::{
    CommuteArgs, CommuteMethod, CompareArgs, CoverArgs, CoverMethodArg, CoverOptions, HittingArgs,
};
use crate::output::{render_compare, render_series, Metadata, Series, SimulationMeta, SupError};
use crate::source::{graph_hash, load, Loaded};
use crate::Failure;

const BAND_CONFIDENCE: f64 = 0.99;

struct Context {
    loaded: Loaded,
    seed: u64,
    horizon: usize,
}

impl Context {
    fn new(common: &Common) -> Result<Self, Failure> {
        let seed = common.seed.unwrap_or(0);
        let loaded = load(&common.source, seed)?;
        let horizon = common
            .horizon
            .unwrap_or_else(|| default_horizon(loaded.graph.node_count()));
        if horizon == 0 {
            return Err(Failure::usage("horizon must be at least 1"));
        }
        Ok(Context {
            loaded,
            seed,
            horizon,
        })
    }

    fn metadata(&self, command: &'static str, stochastic: bool, clamped: bool) -> Metadata {
        let g = &self.loaded.graph;
        Metadata {
            command,
            method: None,
            methods: Vec::new(),
            graph: self.loaded.label.clone(),
            graph_hash: graph_hash(g),
            nodes: g.node_count(),
            edges: g.edge_count(),
            start: None,
            targets: Vec::new(),
            pair: None,
            horizon: self.horizon,
            seed: (stochastic || self.loaded.random).then_some(self.seed),
            simulation: None,
            clamped,
            version: env!("CARGO_PKG_VERSION"),
        }
    }
}

fn finish(series: DistributionSeries, clamp: bool) -> Series {
    let series = if clamp {
        series.monotone_clamped()
    } else {
        series
    };
    let pmf = pmf_from_cdf(&series).pmf().to_vec();
    Series {
        cdf: series.cdf().to_vec(),
        pmf,
        band: None,
    }
}

pub fn hitting(args: &HittingArgs) -> Result<String, Failure> {
    let ctx = Context::new(&args.common)?;
    let m = rwdist::graphs::transition_matrix(&ctx.loaded.graph);
    let series = match args.target.as_slice() {
        [target] => hitting_cdf(&m, args.start, *target, ctx.horizon),
        targets => union_hitting_cdf(&m, args.start, targets, ctx.horizon),
    }
    .map_err(|e| Failure::usage(e.to_string()))?;
    let mut meta = ctx.metadata("hitting", false, args.common.clamp);
    meta.start = Some(args.start);
    meta.targets = args.target.clone();
    Ok(render_series(
        &meta,
        &finish(series, args.common.clamp),
        args.common.format,
    ))
}

pub fn commute(args: &CommuteArgs) -> Result<String, Failure> {
    let ctx = Context::new(&args.common)?;
    let m = rwdist::graphs::transition_matrix(&ctx.loaded.graph);
    let series = match args.method {
        CommuteMethod::Chain => commute_cdf(&m, args.i, args.j, ctx.horizon),
        CommuteMethod::Convolution => commute_pmf_convolution(&m, args.i, args.j, ctx.horizon)
            .map(|p| p.cumulative(SeriesKind::Commute)),
    }
    .map_err(|e| Failure::usage(e.to_string()))?;
    let mut meta = ctx.metadata("commute", false, args.common.clamp);
    meta.method = Some(format!("{:?}", args.method).to_lowercase());
    meta.pair = Some((args.i, args.j));
    Ok(render_series(
        &meta,
        &finish(series, args.common.clamp),
        args.common.format,
    ))
}

/// A computed cover series, its resolved method name and, for Monte Carlo,
/// the band and run statistics.
struct CoverOutcome {
    name: String,
    series: DistributionSeries,
    band: Option<(Vec<f64>, Vec<f64>)>,
    simulation: Option<SimulationMeta>,
}

fn run_cover(
    ctx: &Context,
    start: usize,
    method: CoverMethodArg,
    options: &CoverOptions,
) -> Result<CoverOutcome, Failure> {
    let graph = &ctx.loaded.graph;
    if method == CoverMethodArg::Mc {
        let config = SimulationConfig::new(options.trials, ctx.seed);
        let samples = simulate_walk_until(graph, start, &StopRule::CoverAll, &config)
            .map_err(|e| Failure::usage(e.to_string()))?;
        let ecdf =
            empirical_cdf(&samples, ctx.horizon).map_err(|e| Failure::usage(e.to_string()))?;
        let eps =
            dkw_band(options.trials, BAND_CONFIDENCE).map_err(|e| Failure::usage(e.to_string()))?;
        return Ok(CoverOutcome {
            name: "mc".into(),
            series: ecdf.to_series(SeriesKind::Cover),
            band: Some(ecdf.band(eps)),
            simulation: Some(SimulationMeta {
                rng: RNG_ALGORITHM,
                trials: ecdf.trials(),
                censored: ecdf.censored(),
                step_cap: config.step_cap,
                dkw_epsilon: eps,
            }),
        });
    }

    let method = match method {
        CoverMethodArg::Exact => CoverMethod::Exact,
        CoverMethodArg::Approx => CoverMethod::Approx,
        CoverMethodArg::ApproxAllPairs => CoverMethod::ApproxAllPairs,
        CoverMethodArg::ClosedComplete => CoverMethod::ClosedComplete,
        CoverMethodArg::ClosedCycle => CoverMethod::ClosedCycle,
        CoverMethodArg::ClosedPath => CoverMethod::ClosedPath,
        CoverMethodArg::Closed => match detect_shape(&rwdist::graphs::transition_matrix(graph)) {
            Some(ClosedShape::Complete) => CoverMethod::ClosedComplete,
            Some(ClosedShape::Cycle) => CoverMethod::ClosedCycle,
            Some(ClosedShape::Path) => CoverMethod::ClosedPath,
            None => {
                return Err(Failure::usage(
                    "no closed form: the graph is not complete, a cycle or a path",
                ))
            }
        },
        CoverMethodArg::Mc => unreachable!(),
    };
    let mut query = CoverQuery::new(start, ctx.horizon, method);
    query.cap = ExactCap {
        nodes: options.cap,
        force: options.force_cap,
    };
    query.ordering = parse_order(&options.order)?;
    let series = cover_cdf(graph, &query).map_err(cover_failure)?;
    Ok(CoverOutcome {
        name: query.method.name().into(),
        series,
        band: None,
        simulation: None,
    })
}

fn parse_order(spec: &str) -> Result<OrderingPolicy, Failure> {
    if spec == "dfs" {
        return Ok(OrderingPolicy::Dfs);
    }
    let list = spec.strip_prefix("explicit:").ok_or_else(|| {
        Failure::usage(format!(
            "invalid --order `{spec}`; expected dfs or explicit:<v1,v2,...>"
        ))
    })?;
    list.split(',')
        .map(|v| {
            v.trim()
                .parse()
                .map_err(|_| Failure::usage(format!("invalid node `{v}` in --order")))
        })
        .collect::<Result<Vec<usize>, _>>()
        .map(OrderingPolicy::Explicit)
}

fn cover_failure(e: CoverError) -> Failure {
    match e {
        CoverError::ExceedsCap { .. } => Failure::refusal(e.to_string()),
        CoverError::CapAboveCeiling { cap, .. } => Failure::refusal(format!(
            "exact cap {cap} is above the hard ceiling {EXACT_CAP_CEILING}; add --force-cap to allow it"
        )),
        e => Failure::usage(e.to_string()),
    }
}

pub fn cover(args: &CoverArgs) -> Result<String, Failure> {
    let ctx = Context::new(&args.common)?;
    let outcome = run_cover(&ctx, args.start, args.method, &args.options)?;
    let mut meta = ctx.metadata("cover", outcome.simulation.is_some(), args.common.clamp);
    meta.method = Some(outcome.name);
    meta.start = Some(args.start);
    meta.simulation = outcome.simulation;
    let mut series = finish(outcome.series, args.common.clamp);
    series.band = outcome.band;
    Ok(render_series(&meta, &series, args.common.format))
}

pub fn compare(args: &CompareArgs) -> Result<String, Failure> {
    if args.method.len() < 2 {
        return Err(Failure::usage(
            "compare needs at least two methods, e.g. --method exact,approx",
        ));
    }
    let ctx = Context::new(&args.common)?;
    let mut names = Vec::new();
    let mut series = Vec::new();
    let mut simulation = None;
    for &method in &args.method {
        let outcome = run_cover(&ctx, args.start, method, &args.options)?;
        names.push(outcome.name);
        simulation = simulation.or(outcome.simulation);
        series.push(if args.common.clamp {
            outcome.series.monotone_clamped()
        } else {
            outcome.series
        });
    }
    let mut sup = Vec::new();
    for a in 0..series.len() {
        for b in a + 1..series.len() {
            let value = sup_error(&series[a], &series[b]).expect("all series share the horizon");
            sup.push(SupError {
                a: names[a].clone(),
                b: names[b].clone(),
                value,
            });
        }
    }
    let mut meta = ctx.metadata("compare", simulation.is_some(), args.common.clamp);
    meta.methods = names.clone();
    meta.start = Some(args.start);
    meta.simulation = simulation;
    let cdfs: Vec<Vec<f64>> = series.iter().map(|s| s.cdf().to_vec()).collect();
    Ok(render_compare(
        &meta,
        &names,
        &cdfs,
        &sup,
        args.common.format,
    ))
}
