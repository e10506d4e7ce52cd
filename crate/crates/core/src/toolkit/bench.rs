//! Timing runs over groups of generated instances.
//!
//! Times are wall-clock seconds measured around each solve.

use std::io::Write;
use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;

use crate::bcut::{run_unchecked, SearchOptions};
use crate::error::Result;
use crate::oracle::{box_size, efficient_sets, upper_bounds};
use crate::toolkit::generator::{generate, GeneratorConfig};

/// Shape of one group: `r` criteria, `m` rows, `n` variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Group {
    pub r: usize,
    pub m: usize,
    pub n: usize,
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub groups: Vec<Group>,
    pub seeds: Vec<u64>,
    /// The oracle runs only when the bounding box holds at most this many
    /// lattice points; `None` never runs it.
    pub oracle_threshold: Option<u64>,
    pub search: SearchOptions,
    /// Range overrides applied to every generated instance.
    pub ranges: Option<GeneratorConfig>,
}

/// One solved instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub r: usize,
    pub m: usize,
    pub n: usize,
    pub seed: u64,
    pub cpu_seconds: f64,
    pub nodes: usize,
    pub solutions: usize,
    pub oracle_seconds: Option<f64>,
    pub feasible_points: Option<usize>,
    pub x_e: Option<usize>,
    /// Whether the oracle found the same set.
    pub agrees: Option<bool>,
}

/// Statistics over the records of one group.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub r: usize,
    pub m: usize,
    pub n: usize,
    pub cpu_mean: f64,
    pub cpu_max: f64,
    pub cpu_min: f64,
    pub nodes_mean: f64,
    pub nodes_max: usize,
    pub nodes_min: usize,
    /// Mean `|X_E|`, empty when the oracle was skipped on any instance.
    pub mu: Option<f64>,
}

fn config_for(cfg: &BenchConfig, g: Group, seed: u64) -> GeneratorConfig {
    let mut gen = GeneratorConfig::new(g.n, g.m, g.r, seed);
    if let Some(r) = &cfg.ranges {
        gen.a_range = r.a_range;
        gen.b_range = r.b_range;
        gen.num_range = r.num_range;
        gen.den_range = r.den_range;
        gen.max_attempts = r.max_attempts;
    }
    gen
}

pub fn run_instance(cfg: &BenchConfig, g: Group, seed: u64) -> Result<BenchRecord> {
    let inst = generate(&config_for(cfg, g, seed))?;
    let start = Instant::now();
    let report = run_unchecked(&inst, &cfg.search)?;
    let cpu_seconds = start.elapsed().as_secs_f64();
    let mut rec = BenchRecord {
        r: g.r,
        m: g.m,
        n: g.n,
        seed,
        cpu_seconds,
        nodes: report.nodes_processed,
        solutions: report.solutions.len(),
        oracle_seconds: None,
        feasible_points: None,
        x_e: None,
        agrees: None,
    };
    if let Some(limit) = cfg.oracle_threshold {
        let fits = upper_bounds(&inst)?.is_none_or(|ub| box_size(&ub) <= BigInt::from(limit));
        if fits {
            let start = Instant::now();
            let sets = efficient_sets(&inst, limit)?;
            rec.oracle_seconds = Some(start.elapsed().as_secs_f64());
            rec.feasible_points = Some(sets.feasible.len());
            rec.x_e = Some(sets.x_e.len());
            let mut mine = report.points();
            mine.sort();
            let mut theirs = sets.intersection;
            theirs.sort();
            rec.agrees = Some(mine == theirs);
        }
    }
    Ok(rec)
}

/// Runs every group over every seed, calling `progress` after each instance.
pub fn bench(cfg: &BenchConfig, mut progress: impl FnMut(&BenchRecord)) -> Result<Vec<BenchRecord>> {
    let mut out = Vec::new();
    for &g in &cfg.groups {
        for &seed in &cfg.seeds {
            let rec = run_instance(cfg, g, seed)?;
            progress(&rec);
            out.push(rec);
        }
    }
    Ok(out)
}

/// Groups records by shape, in first-seen order.
pub fn summarize(records: &[BenchRecord]) -> Vec<BenchRow> {
    let mut shapes: Vec<(usize, usize, usize)> = Vec::new();
    for r in records {
        if !shapes.contains(&(r.r, r.m, r.n)) {
            shapes.push((r.r, r.m, r.n));
        }
    }
    shapes
        .into_iter()
        .map(|(r, m, n)| {
            let g: Vec<&BenchRecord> = records
                .iter()
                .filter(|x| (x.r, x.m, x.n) == (r, m, n))
                .collect();
            let len = g.len() as f64;
            let cpu: Vec<f64> = g.iter().map(|x| x.cpu_seconds).collect();
            let nodes: Vec<usize> = g.iter().map(|x| x.nodes).collect();
            let mu = g
                .iter()
                .map(|x| x.x_e)
                .collect::<Option<Vec<_>>>()
                .map(|v| v.iter().sum::<usize>() as f64 / len);
            BenchRow {
                r,
                m,
                n,
                cpu_mean: cpu.iter().sum::<f64>() / len,
                cpu_max: cpu.iter().cloned().fold(f64::MIN, f64::max),
                cpu_min: cpu.iter().cloned().fold(f64::MAX, f64::min),
                nodes_mean: nodes.iter().sum::<usize>() as f64 / len,
                nodes_max: nodes.iter().copied().max().unwrap_or(0),
                nodes_min: nodes.iter().copied().min().unwrap_or(0),
                mu,
            }
        })
        .collect()
}

/// Writes group rows as CSV with the header
/// `r,m,n,cpu_mean,cpu_max,cpu_min,nodes_mean,nodes_max,nodes_min,mu`.
pub fn write_summary_csv(rows: &[BenchRow], out: impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row).map_err(csv_error)?;
    }
    w.flush()?;
    Ok(())
}

/// Writes per-instance records as CSV.
pub fn write_records_csv(records: &[BenchRecord], out: impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for rec in records {
        w.serialize(rec).map_err(csv_error)?;
    }
    w.flush()?;
    Ok(())
}

fn csv_error(e: csv::Error) -> crate::error::Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => io.into(),
        other => std::io::Error::other(format!("{other:?}")).into(),
    }
}
