mod args;
mod output;

use std::io::BufReader;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::Parser;
use serde::Serialize;
use serde_json::json;

use lambdamin::beta2::Beta2Series;
use lambdamin::exact::{CurveKind, ExactSeries};
use lambdamin::limit::{self, LimitParams};
use lambdamin::sampler::{self, SampleBatch, ValidationRoute};
use lambdamin::{par, selfcheck, EnsembleParams, SeriesAccuracy};

use args::{Cli, Command, Format, Grid, Options, RouteArg};
use output::{num, render, write_out, Table};

/// Fully resolved settings, embedded in every output.
#[derive(Debug, Default, Serialize)]
struct RunConfig {
    command: Option<Command>,
    #[serde(skip_serializing_if = "Option::is_none")]
    beta: Option<f64>,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    n_dim: Option<usize>,
    #[serde(rename = "M", skip_serializing_if = "Option::is_none")]
    m_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    grid: Option<Grid>,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tail_tol: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    quad_tol: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    level: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    route: Option<ValidationRoute>,
    #[serde(skip_serializing_if = "Option::is_none")]
    input: Option<String>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    diagnostics: bool,
    format: Option<Format>,
}

struct Report {
    config: RunConfig,
    table: Table,
    warnings: Vec<String>,
    /// false turns into exit code 1
    passed: bool,
}

impl Report {
    fn ok(config: RunConfig, table: Table, warnings: Vec<String>) -> Self {
        Self {
            config,
            table,
            warnings,
            passed: true,
        }
    }
}

fn need<T: Copy>(v: Option<T>, flag: &str, cmd: &str) -> anyhow::Result<T> {
    v.with_context(|| format!("{cmd} requires {flag}"))
}

fn accuracy(o: &Options) -> anyhow::Result<SeriesAccuracy> {
    Ok(SeriesAccuracy::new(o.tol, o.kmax)?)
}

fn ensemble(o: &Options, cmd: &str) -> anyhow::Result<EnsembleParams> {
    let beta = need(o.beta, "--beta", cmd)?;
    let n = need(o.n_dim, "--N", cmd)?;
    let m = need(o.m_dim, "--M", cmd)?;
    Ok(EnsembleParams::new(beta, n, m)?)
}

fn base_config(cmd: Command, o: &Options, params: &EnsembleParams) -> RunConfig {
    RunConfig {
        command: Some(cmd),
        beta: Some(params.beta()),
        n_dim: Some(params.n_dim()),
        m_dim: Some(params.m_dim()),
        ..RunConfig::default()
    }
    .with_accuracy(o)
}

impl RunConfig {
    fn with_accuracy(mut self, o: &Options) -> Self {
        self.tail_tol = Some(o.tol);
        self.k_max = Some(o.kmax);
        self
    }
}

fn exact_curve(cmd: Command, o: &Options) -> anyhow::Result<Report> {
    let params = ensemble(o, "this command")?;
    let series = ExactSeries::new(&params, &accuracy(o)?)?;
    let grid = match o.grid {
        Some(g) => g,
        None => Grid::new(0.0, 1.0 / params.n_dim() as f64, 51)?,
    };
    let (kind, col) = match cmd {
        Command::ExactPdf => (CurveKind::Density, "P"),
        _ => (CurveKind::Survival, "Q"),
    };
    let curve = series.curve(&grid.values(), kind)?;
    let mut config = base_config(cmd, o, &params);
    config.grid = Some(grid);
    let table = Table::numeric(vec!["x", col], curve.points.iter().map(|&(x, v)| vec![x, v]));
    Ok(Report::ok(config, table, series.warnings()))
}

fn beta2_curve(o: &Options) -> anyhow::Result<Report> {
    if let Some(b) = o.beta {
        if b != 2.0 {
            bail!("beta2-cdf is defined for β = 2 only, got --beta {b}");
        }
    }
    let n = need(o.n_dim, "--N", "beta2-cdf")?;
    let m = need(o.m_dim, "--M", "beta2-cdf")?;
    let series = Beta2Series::new(n, m)?;
    let grid = match o.grid {
        Some(g) => g,
        None => Grid::new(0.0, 1.0 / n as f64, 51)?,
    };
    let xs = grid.values();
    let qs = series.curve(&xs)?;
    let mut warnings = Vec::new();
    if series.outside_envelope() {
        warnings.push(format!(
            "(N, M − N) = ({n}, {}) exceeds the validated envelope N ≤ {}, M − N ≤ {}",
            m - n,
            lambdamin::beta2::EXACT_MAX_N,
            lambdamin::beta2::EXACT_MAX_ALPHA
        ));
    }
    let config = RunConfig {
        command: Some(Command::Beta2Cdf),
        beta: Some(2.0),
        n_dim: Some(n),
        m_dim: Some(m),
        grid: Some(grid),
        ..RunConfig::default()
    };
    let table = Table::numeric(vec!["x", "Q"], xs.into_iter().zip(qs).map(|(x, q)| vec![x, q]));
    Ok(Report::ok(config, table, warnings))
}

fn moments(o: &Options) -> anyhow::Result<Report> {
    let params = ensemble(o, "moments")?;
    let series = ExactSeries::new(&params, &accuracy(o)?)?;
    let ps = if o.p.is_empty() { vec![1] } else { o.p.clone() };
    let mut table = Table::new(vec!["p", "value"]);
    for &p in &ps {
        table.push(vec![json!(p), num(series.moment(p)?)]);
    }
    let mut config = base_config(Command::Moments, o, &params);
    config.p = Some(ps);
    Ok(Report::ok(config, table, series.warnings()))
}

fn limit_curve(cmd: Command, o: &Options) -> anyhow::Result<Report> {
    let beta = need(o.beta, "--beta", "this command")?;
    let m = need(o.m, "--m", "this command")?;
    let lp = LimitParams::new(beta, m)?;
    let acc = accuracy(o)?;
    let grid = o.grid.map_or_else(|| Grid::new(0.0, 20.0, 51), Ok)?;
    let ys = grid.values();
    if ys[0] < 0.0 {
        bail!("y grid must be nonnegative");
    }
    let warnings = limit::envelope_warnings(&lp, grid.stop);
    let density = cmd == Command::LimitPdf;
    let diagnostics = density && o.diagnostics;
    let rows = par::map_slice(&ys, |&y| -> lambdamin::Result<Vec<f64>> {
        if !density {
            return Ok(vec![y, limit::q_limit(&lp, y, &acc)?]);
        }
        let p = limit::p_limit(&lp, y, &acc)?;
        if diagnostics {
            Ok(vec![y, p, limit::p_limit_prefactor_form(&lp, y, &acc)?])
        } else {
            Ok(vec![y, p])
        }
    })
    .into_iter()
    .collect::<lambdamin::Result<Vec<_>>>()?;
    let columns = match (density, diagnostics) {
        (false, _) => vec!["y", "Q"],
        (true, false) => vec!["y", "P"],
        (true, true) => vec!["y", "P", "P_prefactor_form"],
    };
    let config = RunConfig {
        command: Some(cmd),
        beta: Some(beta),
        m: Some(m),
        grid: Some(grid),
        diagnostics,
        ..RunConfig::default()
    }
    .with_accuracy(o);
    Ok(Report::ok(config, Table::numeric(columns, rows), warnings))
}

fn workers(o: &Options) -> anyhow::Result<usize> {
    match o.workers {
        Some(0) => bail!("--workers must be at least 1"),
        Some(w) => Ok(w),
        None => Ok(par::available_workers()),
    }
}

fn sample(o: &Options) -> anyhow::Result<()> {
    if o.format.is_some() {
        bail!("sample writes the sample-file format; --format does not apply");
    }
    let params = ensemble(o, "sample")?;
    let batch = sampler::run_batch(&params, o.samples, o.seed, workers(o)?)?;
    let mut buf = Vec::new();
    batch.write_to(&mut buf)?;
    write_out(o.out.as_deref(), &buf)
}

fn validate(o: &Options) -> anyhow::Result<Report> {
    let batch = match &o.input {
        Some(path) => {
            let f = std::fs::File::open(path).with_context(|| format!("opening {}", path.display()))?;
            SampleBatch::read_from(BufReader::new(f))?
        }
        None => {
            let params = ensemble(o, "validate")?;
            sampler::run_batch(&params, o.samples, o.seed, workers(o)?)?
        }
    };
    let route = o.route.map(|r| match r {
        RouteArg::Exact => ValidationRoute::ExactSeries,
        RouteArg::Quadrature => ValidationRoute::Quadrature,
        RouteArg::SplitHalf => ValidationRoute::SplitHalf,
    });
    let acc = accuracy(o)?;
    let (route, report) = sampler::validate_batch(&batch, route, o.level, &acc, o.quad_tol)?;
    let params = batch.params();
    let mut config = base_config(Command::Validate, o, params);
    config.samples = Some(batch.count());
    config.seed = Some(batch.seed());
    config.quad_tol = (route == ValidationRoute::Quadrature).then_some(o.quad_tol);
    config.level = Some(o.level);
    config.route = Some(route);
    config.input = o.input.as_ref().map(|p| p.display().to_string());
    let mut table = Table::new(vec!["route", "d_stat", "n", "p_value", "level", "pass"]);
    table.push(vec![
        serde_json::to_value(route)?,
        num(report.d_stat),
        num(report.n),
        num(report.p_value),
        num(report.level),
        json!(report.pass),
    ]);
    let mut warnings = lambdamin::exact::envelope_warnings(params);
    if route == ValidationRoute::SplitHalf {
        warnings.push("no analytic reference for these parameters; compared the two halves of the batch".into());
    }
    Ok(Report {
        config,
        table,
        warnings,
        passed: report.pass,
    })
}

fn selfcheck_report() -> Report {
    let outcomes = selfcheck::run_all();
    let mut table = Table::new(vec!["check", "pass", "detail"]);
    let mut passed = true;
    for c in &outcomes {
        passed &= c.pass;
        table.push(vec![json!(c.name), json!(c.pass), json!(c.detail)]);
    }
    let config = RunConfig {
        command: Some(Command::Selfcheck),
        ..RunConfig::default()
    };
    Report {
        config,
        table,
        warnings: Vec::new(),
        passed,
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let o = &cli.opts;
    let cmd = cli.command;
    let report = match cmd {
        Command::ExactCdf | Command::ExactPdf => exact_curve(cmd, o)?,
        Command::Beta2Cdf => beta2_curve(o)?,
        Command::Moments => moments(o)?,
        Command::LimitCdf | Command::LimitPdf => limit_curve(cmd, o)?,
        Command::Sample => {
            sample(o)?;
            return Ok(ExitCode::SUCCESS);
        }
        Command::Validate => validate(o)?,
        Command::Selfcheck => selfcheck_report(),
    };
    let default_format = match cmd {
        Command::Moments | Command::Validate | Command::Selfcheck => Format::Json,
        _ => Format::Csv,
    };
    let format = o.format.unwrap_or(default_format);
    let mut config = report.config;
    config.format = Some(format);
    for w in &report.warnings {
        eprintln!("warning: {w}");
    }
    let text = render(&config, &report.table, &report.warnings, format)?;
    write_out(o.out.as_deref(), text.as_bytes())?;
    Ok(if report.passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
