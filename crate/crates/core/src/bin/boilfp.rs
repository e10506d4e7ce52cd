use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use boilfp::bcut::{run, DrivingObjective, NodeAction, SearchOptions, SearchReport, Strategy};
use boilfp::error::Error;
use boilfp::oracle::{efficient_sets, DEFAULT_BUDGET};
use boilfp::toolkit::bench::{bench, summarize, write_records_csv, write_summary_csv, BenchConfig, Group};
use boilfp::toolkit::format;
use boilfp::toolkit::generator::{generate, GeneratorConfig};
use boilfp::{IntegerPoint, ProblemInstance};

#[derive(Parser)]
#[command(name = "boilfp", version, about = "Exact branch-and-cut over the efficient set of a multiobjective integer linear fractional program")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the branch-and-cut search and print the solution set.
    Solve(SolveArgs),
    /// Enumerate the feasible set and both efficient sets by brute force.
    Enumerate(EnumerateArgs),
    /// Solve and enumerate, then compare the two answers.
    Check(CheckArgs),
    /// Write a random instance.
    Generate(GenerateArgs),
    /// Time groups of random instances and print summary CSV.
    Bench(BenchArgs),
    /// Print one record per search node.
    Trace(SolveArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Objective {
    F1,
    F2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Dfs,
    Bfs,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum OutputFormat {
    Text,
    Csv,
}

#[derive(Args)]
struct SearchArgs {
    /// Utility maximized at every node.
    #[arg(long, value_enum, default_value = "f1")]
    objective: Objective,
    /// Node exploration order.
    #[arg(long, value_enum, default_value = "dfs")]
    strategy: Order,
    /// Abort after this many nodes.
    #[arg(long)]
    max_nodes: Option<usize>,
}

impl SearchArgs {
    fn options(&self) -> SearchOptions {
        SearchOptions {
            strategy: match self.strategy {
                Order::Dfs => Strategy::Dfs,
                Order::Bfs => Strategy::Bfs,
            },
            objective: match self.objective {
                Objective::F1 => DrivingObjective::F1,
                Objective::F2 => DrivingObjective::F2,
            },
            max_nodes: self.max_nodes,
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    instance: PathBuf,
    #[command(flatten)]
    search: SearchArgs,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

#[derive(Args)]
struct EnumerateArgs {
    instance: PathBuf,
    /// Largest bounding box (in lattice points) the enumeration accepts.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

#[derive(Args)]
struct CheckArgs {
    instance: PathBuf,
    #[command(flatten)]
    search: SearchArgs,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    /// Number of criteria.
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; standard output when omitted.
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated shapes `r:m:n`, for example `3:10:5,3:10:10`.
    #[arg(long, default_value = "3:10:5,3:10:10")]
    groups: String,
    /// Seeds per group.
    #[arg(long, default_value_t = 10)]
    seeds: u64,
    /// First seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Run the oracle when the bounding box holds at most this many points.
    #[arg(long)]
    budget: Option<u64>,
    /// Also write per-instance records to this CSV file.
    #[arg(long)]
    records: Option<PathBuf>,
    #[command(flatten)]
    search: SearchArgs,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::AssumptionViolated(_) | Error::UnboundedDomain | Error::ZeroDenominator => 2,
        Error::Parse { .. } => 3,
        Error::EnumerationBudgetExceeded { .. } | Error::NodeLimit(_) => 4,
        _ => 1,
    }
}

fn point_list(points: &[IntegerPoint]) -> String {
    let parts: Vec<String> = points.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn csv_point(p: &IntegerPoint) -> String {
    p.0.iter().map(ToString::to_string).collect::<Vec<_>>().join(";")
}

fn print_solutions(report: &SearchReport, fmt: OutputFormat) -> io::Result<()> {
    let mut out = io::stdout().lock();
    match fmt {
        OutputFormat::Text => {
            writeln!(out, "S = {}", point_list(&report.points()))?;
            for s in &report.solutions {
                writeln!(out, "  {}  Z = {}  f = {}", s.point, s.criteria, s.utility)?;
            }
            writeln!(
                out,
                "nodes: {}  fathomed: infeasible {}, empty H {}, empty H' {}",
                report.nodes_processed,
                report.fathomed.infeasible,
                report.fathomed.empty_h,
                report.fathomed.empty_h_prime
            )?;
        }
        OutputFormat::Csv => {
            writeln!(out, "point,criteria,utility")?;
            for s in &report.solutions {
                let v = |o: &boilfp::ObjectiveVector| {
                    o.0.iter().map(ToString::to_string).collect::<Vec<_>>().join(";")
                };
                writeln!(out, "{},{},{}", csv_point(&s.point), v(&s.criteria), v(&s.utility))?;
            }
        }
    }
    Ok(())
}

fn set_text(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|j| (j + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn print_trace(report: &SearchReport, fmt: OutputFormat) -> io::Result<()> {
    let mut out = io::stdout().lock();
    if fmt == OutputFormat::Csv {
        writeln!(out, "id,parent,depth,action,point,value,H,H'")?;
    }
    for r in &report.trace {
        let point = r.point.as_ref().map_or(String::new(), |p| {
            p.iter().map(ToString::to_string).collect::<Vec<_>>().join(";")
        });
        let value = r.value.as_ref().map_or(String::new(), ToString::to_string);
        let parent = r.parent.map_or(String::new(), |p| p.to_string());
        match fmt {
            OutputFormat::Csv => writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                r.id,
                parent,
                r.depth,
                r.action,
                point,
                value,
                set_text(&r.h).replace(',', ";"),
                set_text(&r.h_prime).replace(',', ";")
            )?,
            OutputFormat::Text => {
                let indent = "  ".repeat(r.depth);
                let detail = match &r.action {
                    NodeAction::Branch { var, floor, children } => format!(
                        "x{} <= {floor} -> node {}, x{} >= {} -> node {}",
                        var + 1,
                        children.0,
                        var + 1,
                        floor + boilfp::Rational::one(),
                        children.1
                    ),
                    NodeAction::Cut { child } => {
                        format!("H = {}, H' = {} -> node {child}", set_text(&r.h), set_text(&r.h_prime))
                    }
                    NodeAction::FathomEmptyH | NodeAction::FathomEmptyHprime => {
                        format!("H = {}, H' = {}", set_text(&r.h), set_text(&r.h_prime))
                    }
                    NodeAction::FathomInfeasible => String::new(),
                };
                let at = if point.is_empty() {
                    String::new()
                } else {
                    format!(" x = ({}) f = {value}", point.replace(';', ", "))
                };
                writeln!(out, "{indent}node {}: {}{at} {detail}", r.id, r.action)?;
            }
        }
    }
    Ok(())
}

fn load(path: &PathBuf) -> Result<ProblemInstance, Error> {
    format::load(path)
}

fn solve(args: &SolveArgs, trace: bool) -> Result<u8, Error> {
    let inst = load(&args.instance)?;
    let report = run(&inst, &args.search.options())?;
    if trace {
        print_trace(&report, args.format)?;
    } else {
        print_solutions(&report, args.format)?;
    }
    Ok(if report.solutions.is_empty() { 1 } else { 0 })
}

fn enumerate(args: &EnumerateArgs) -> Result<u8, Error> {
    let inst = load(&args.instance)?;
    let sets = efficient_sets(&inst, args.budget)?;
    let mut out = io::stdout().lock();
    match args.format {
        OutputFormat::Text => {
            writeln!(out, "D ({} points) = {}", sets.feasible.len(), point_list(&sets.feasible))?;
            writeln!(out, "X_E = {}", point_list(&sets.x_e))?;
            writeln!(out, "X_E' = {}", point_list(&sets.x_e_prime))?;
            writeln!(out, "X_E and X_E' = {}", point_list(&sets.intersection))?;
        }
        OutputFormat::Csv => {
            writeln!(out, "point,in_x_e,in_x_e_prime")?;
            for p in &sets.feasible {
                writeln!(
                    out,
                    "{},{},{}",
                    csv_point(p),
                    sets.x_e.contains(p),
                    sets.x_e_prime.contains(p)
                )?;
            }
        }
    }
    Ok(if sets.feasible.is_empty() { 1 } else { 0 })
}

fn check(args: &CheckArgs) -> Result<u8, Error> {
    let inst = load(&args.instance)?;
    let report = run(&inst, &args.search.options())?;
    let sets = efficient_sets(&inst, args.budget)?;
    let mut mine = report.points();
    mine.sort();
    let mut theirs = sets.intersection.clone();
    theirs.sort();
    let mut out = io::stdout().lock();
    writeln!(out, "branch-and-cut: {}", point_list(&mine))?;
    writeln!(out, "enumeration:    {}", point_list(&theirs))?;
    if mine == theirs {
        writeln!(out, "agree")?;
        Ok(0)
    } else {
        writeln!(out, "DISAGREE")?;
        Ok(1)
    }
}

fn generate_cmd(args: &GenerateArgs) -> Result<u8, Error> {
    let inst = generate(&GeneratorConfig::new(args.n, args.m, args.k, args.seed))?;
    let text = format::to_string(&inst);
    match &args.out {
        Some(path) => std::fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(0)
}

fn parse_groups(list: &str) -> Result<Vec<Group>, Error> {
    list.split(',')
        .map(|g| {
            let parts: Vec<usize> = g
                .trim()
                .split(':')
                .map(|p| p.parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|e| Error::Parse {
                    line: 0,
                    field: "groups".into(),
                    message: format!("`{g}`: {e}"),
                })?;
            match parts[..] {
                [r, m, n] => Ok(Group { r, m, n }),
                _ => Err(Error::Parse {
                    line: 0,
                    field: "groups".into(),
                    message: format!("`{g}` is not r:m:n"),
                }),
            }
        })
        .collect()
}

fn bench_cmd(args: &BenchArgs) -> Result<u8, Error> {
    let cfg = BenchConfig {
        groups: parse_groups(&args.groups)?,
        seeds: (args.seed..args.seed + args.seeds).collect(),
        oracle_threshold: args.budget,
        search: args.search.options(),
        ranges: None,
    };
    let records = bench(&cfg, |r| {
        log::info!(
            "r={} m={} n={} seed={} time={:.3}s nodes={}",
            r.r,
            r.m,
            r.n,
            r.seed,
            r.cpu_seconds,
            r.nodes
        )
    })?;
    write_summary_csv(&summarize(&records), io::stdout().lock())?;
    if let Some(path) = &args.records {
        write_records_csv(&records, std::fs::File::create(path)?)?;
    }
    Ok(0)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Solve(a) => solve(a, false),
        Command::Trace(a) => solve(a, true),
        Command::Enumerate(a) => enumerate(a),
        Command::Check(a) => check(a),
        Command::Generate(a) => generate_cmd(a),
        Command::Bench(a) => bench_cmd(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
