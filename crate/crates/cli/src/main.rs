use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use trapset::asymptotics::{predict, EtsMode, DEFAULT_GIRTH};
use trapset::ensemble::{default_max_retries, realize_degree_sequence, sample_tanner_graph, EnsembleSpec, TannerGraph};
use trapset::enumeration::{
    brute_force_census, census, list_structures, EnumerationError, MultiplicityTable, SearchOptions, Strategy,
};
use trapset::harness::{run_experiment, ExperimentConfig, ReportFormat};
use trapset::structures::{cycle_rank, induce, Category};

#[derive(Parser)]
#[command(name = "trapset", version, about = "Trapping-set census and asymptotics for random LDPC Tanner graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample a Tanner graph from an ensemble.
    Sample(SampleArgs),
    /// Count structures in a graph file.
    Census(CensusArgs),
    /// Tabulate predicted class multiplicities.
    Predict(PredictArgs),
    /// Run a Monte Carlo experiment from a JSON config.
    Experiment(ExperimentArgs),
    /// Check the fast census against brute force on a small graph.
    Oracle(OracleArgs),
}

#[derive(Args)]
struct SpecArgs {
    /// Ensemble spec as JSON.
    #[arg(long, conflicts_with = "regular")]
    spec: Option<PathBuf>,
    /// Biregular ensemble `DV,DC`.
    #[arg(long, value_parser = parse_pair)]
    regular: Option<(usize, usize)>,
    /// Block length, overriding the spec.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args)]
struct SampleArgs {
    #[command(flatten)]
    spec: SpecArgs,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Minimum girth, overriding the spec.
    #[arg(long)]
    girth: Option<usize>,
    #[arg(long)]
    max_retries: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Auto,
    Expansion,
    CycleSeeded,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    ExactB,
    CatalanUpper,
}

#[derive(Args)]
struct CensusArgs {
    graph: PathBuf,
    #[arg(long, default_value_t = 5)]
    a_max: usize,
    #[arg(long, default_value_t = 8)]
    b_max: usize,
    /// Category to count; repeat for several. Defaults to LETS.
    #[arg(long = "category", value_parser = parse_category)]
    categories: Vec<Category>,
    #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
    strategy: StrategyArg,
    #[arg(long)]
    budget: Option<u64>,
    /// Dump every structure as JSON instead of the count table.
    #[arg(long)]
    emit_instances: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PredictArgs {
    #[command(flatten)]
    spec: SpecArgs,
    #[arg(long, default_value_t = 6)]
    a_max: usize,
    #[arg(long, default_value_t = 8)]
    b_max: usize,
    #[arg(long = "category", value_parser = parse_category)]
    categories: Vec<Category>,
    /// Girth assumed by the ETS predictors.
    #[arg(long, default_value_t = DEFAULT_GIRTH)]
    girth: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::ExactB)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExperimentArgs {
    config: PathBuf,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    a_max: Option<usize>,
    #[arg(long)]
    b_max: Option<usize>,
    /// Minimum girth of sampled graphs.
    #[arg(long)]
    girth: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    graph: PathBuf,
    #[arg(long, default_value_t = 5)]
    a_max: usize,
    #[arg(long, default_value_t = 8)]
    b_max: usize,
}

enum Failure {
    /// Comparison or oracle mismatch.
    Mismatch(String),
    Usage(String),
    Budget(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Mismatch(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Mismatch(m) | Failure::Usage(m) | Failure::Budget(m) => m,
        }
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn enumeration(e: EnumerationError) -> Failure {
    match e {
        EnumerationError::BudgetExceeded { .. } | EnumerationError::CycleCap { .. } => Failure::Budget(e.to_string()),
        other => usage(other),
    }
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (x, y) = s.split_once(',').ok_or("expected DV,DC")?;
    let p = |t: &str| t.trim().parse::<usize>().map_err(|e| e.to_string());
    Ok((p(x)?, p(y)?))
}

fn parse_category(s: &str) -> Result<Category, String> {
    s.parse::<Category>().map_err(|e| e.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_out(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display()))),
        None => match std::io::stdout().lock().write_all(text.as_bytes()) {
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(usage(format!("stdout: {e}"))),
            _ => Ok(()),
        },
    }
}

fn load_spec(args: &SpecArgs) -> Result<EnsembleSpec, Failure> {
    let mut spec = match (&args.spec, args.regular) {
        (Some(path), _) => EnsembleSpec::from_json(&read(path)?).map_err(usage)?,
        (None, Some((dv, dc))) => EnsembleSpec::biregular(dv, dc, args.n.unwrap_or(1000)).map_err(usage)?,
        (None, None) => return Err(usage("give --spec FILE or --regular DV,DC")),
    };
    if let Some(n) = args.n {
        spec.n = n;
    }
    spec.validate().map_err(usage)?;
    Ok(spec)
}

fn load_graph(path: &Path) -> Result<TannerGraph, Failure> {
    TannerGraph::from_text(&read(path)?).map_err(usage)
}

fn categories_or_lets(categories: &[Category]) -> Vec<Category> {
    if categories.is_empty() {
        vec![Category::Lets]
    } else {
        categories.to_vec()
    }
}

fn table_json(table: &MultiplicityTable) -> String {
    let rows: Vec<_> = table
        .iter()
        .map(|((c, a, b), count)| json!({"category": c, "a": a, "b": b, "count": count}))
        .collect();
    serde_json::to_string_pretty(&rows).unwrap() + "\n"
}

fn sample(args: SampleArgs) -> Result<(), Failure> {
    let spec = load_spec(&args.spec)?;
    let seq = realize_degree_sequence(&spec).map_err(usage)?;
    let girth = args.girth.or(spec.girth_min);
    let retries = args.max_retries.unwrap_or_else(|| default_max_retries(spec.n));
    let graph = sample_tanner_graph(&seq, args.seed, girth, retries).map_err(usage)?;
    write_out(args.out.as_deref(), &graph.to_text())
}

fn census_cmd(args: CensusArgs) -> Result<(), Failure> {
    let graph = load_graph(&args.graph)?;
    let categories = categories_or_lets(&args.categories);
    let strategy = match args.strategy {
        StrategyArg::Auto => Strategy::Auto,
        StrategyArg::Expansion => Strategy::Expansion,
        StrategyArg::CycleSeeded => Strategy::CycleSeeded,
    };
    let mut options = SearchOptions { strategy, ..SearchOptions::default() };
    if let Some(budget) = args.budget {
        options.budget = budget;
    }
    if args.emit_instances {
        let found = list_structures(&graph, &categories, args.a_max, args.b_max, &options).map_err(enumeration)?;
        let mut dump = Vec::with_capacity(found.len());
        for f in found {
            let ids: Vec<usize> = f.variables.iter().map(|&v| v as usize).collect();
            let inst = induce(&graph, &ids).map_err(usage)?;
            dump.push(json!({
                "S": ids,
                "a": inst.a,
                "b": inst.b,
                "categories": f.categories,
                "cycle_rank": cycle_rank(&inst).cycle_rank,
            }));
        }
        return write_out(args.out.as_deref(), &(serde_json::to_string_pretty(&dump).unwrap() + "\n"));
    }
    let table = census(&graph, &categories, args.a_max, args.b_max, &options).map_err(enumeration)?;
    let text = match args.format {
        Format::Csv => table.to_csv(),
        Format::Json => table_json(&table),
    };
    write_out(args.out.as_deref(), &text)
}

fn predict_cmd(args: PredictArgs) -> Result<(), Failure> {
    let spec = load_spec(&args.spec)?;
    let mode = match args.mode {
        ModeArg::ExactB => EtsMode::ExactB,
        ModeArg::CatalanUpper => EtsMode::CatalanUpper,
    };
    let mut csv = String::from("category,a,b,estimate,lower_factor,formula_id\n");
    let mut rows = Vec::new();
    for category in categories_or_lets(&args.categories) {
        for a in 1..=args.a_max {
            for b in 0..=args.b_max {
                let (estimate, lower, id, note) = match predict::<f64>(&spec, category, a, b, args.girth, mode) {
                    Ok(p) => (p.estimate, p.lower_factor, p.formula_id, p.note),
                    Err(e) => (f64::NAN, f64::NAN, "unsupported", e.to_string()),
                };
                writeln!(csv, "{category},{a},{b},{estimate},{lower},{id}").unwrap();
                rows.push(json!({
                    "category": category, "a": a, "b": b, "estimate": estimate,
                    "lower_factor": lower, "formula_id": id, "note": note,
                }));
            }
        }
    }
    let text = match args.format {
        Format::Csv => csv,
        Format::Json => serde_json::to_string_pretty(&rows).unwrap() + "\n",
    };
    write_out(args.out.as_deref(), &text)
}

fn experiment(args: ExperimentArgs) -> Result<(), Failure> {
    let mut config = ExperimentConfig::from_json(&read(&args.config)?).map_err(usage)?;
    if let Some(seed) = args.seed {
        config.seed = seed;
    }
    if let Some(trials) = args.trials {
        config.trials = trials;
    }
    if let Some(a_max) = args.a_max {
        config.a_max = a_max;
    }
    if let Some(b_max) = args.b_max {
        config.b_max = b_max;
    }
    if args.girth.is_some() {
        config.girth_min = args.girth;
    }
    let report = run_experiment(&config).map_err(|e| {
        if e.is_budget() {
            Failure::Budget(e.to_string())
        } else {
            usage(e)
        }
    })?;
    let format = match args.format {
        Format::Csv => ReportFormat::Csv,
        Format::Json => ReportFormat::Json,
    };
    write_out(args.out.as_deref(), &report.render(format))?;
    let failed = report.failures().count();
    if failed > 0 {
        return Err(Failure::Mismatch(format!("{failed} of {} rows outside tolerance", report.rows.len())));
    }
    Ok(())
}

fn oracle(args: OracleArgs) -> Result<(), Failure> {
    let graph = load_graph(&args.graph)?;
    let brute = brute_force_census(&graph, args.a_max, args.b_max).map_err(enumeration)?;
    let mut mismatches = Vec::new();
    for category in Category::ALL {
        let options = SearchOptions { verify_unique: true, strategy: Strategy::Expansion, ..SearchOptions::default() };
        let fast = census(&graph, &[category], args.a_max, args.b_max, &options).map_err(enumeration)?;
        let want = brute.restrict(category);
        let keys: std::collections::BTreeSet<_> = fast.iter().chain(want.iter()).map(|(k, _)| k).collect();
        for (c, a, b) in keys {
            let (x, y) = (fast.get(c, a, b), want.get(c, a, b));
            if x != y {
                mismatches.push(format!("{c},{a},{b},{x},{y}"));
            }
        }
    }
    if mismatches.is_empty() {
        println!("oracle: census matches brute force ({} classes)", brute.len());
        Ok(())
    } else {
        println!("category,a,b,census,brute_force");
        for line in &mismatches {
            println!("{line}");
        }
        Err(Failure::Mismatch(format!("{} classes differ", mismatches.len())))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Sample(a) => sample(a),
        Command::Census(a) => census_cmd(a),
        Command::Predict(a) => predict_cmd(a),
        Command::Experiment(a) => experiment(a),
        Command::Oracle(a) => oracle(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("trapset: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
