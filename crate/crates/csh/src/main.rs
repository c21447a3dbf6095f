//! `csh`: tableaux combinatorics, chromatic symmetric functions, and
//! degree-0 chromatic symmetric homology from the command line.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use csh::chain::{homology_multiplicities, HomologyOutput, MultiplicityTable, OracleConfig, OracleError};
use csh::character::{character, ClassLabel};
use csh::csf::{
    chromatic_symmetric_function, csf_to_schur, Basis, CsfExpansion, DEFAULT_CSF_BOUND,
};
use csh::graph::Graph;
use csh::partition::Partition;
use csh::sparse::RankMode;
use csh::star::{check_conjecture, mult_general, predict_h10_star, reference_h10_table, StarShape};
use csh::tableau::{enumerate_ssyt, enumerate_syt, f_syt, hook_lengths, kostka};

const EXIT_USAGE: u8 = 1;
const EXIT_INTERNAL: u8 = 2;
const EXIT_CONJECTURE: u8 = 3;

#[derive(Parser)]
#[command(name = "csh", version, about = "Degree-0 chromatic symmetric homology of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tableaux combinatorics: dimensions, Kostka numbers, characters.
    Tableaux {
        #[command(subcommand)]
        sub: TableauxCmd,
    },
    /// Chromatic symmetric function of a graph.
    Csf {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum, default_value_t = BasisArg::Monomial)]
        basis: BasisArg,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Specht-module multiplicities of H_{i,0}(G).
    Homology {
        #[command(flatten)]
        source: GraphSource,
        /// Homological index (default 1).
        #[arg(short, default_value_t = 1)]
        i: usize,
        #[command(flatten)]
        oracle: OracleArgs,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Closed-form H_{1,0} prediction for a star (assumes the vanishing
    /// conjecture).
    Predict {
        /// Number of vertices of the star (n >= 4).
        #[arg(long)]
        star: u32,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Verification harness.
    Verify {
        #[command(subcommand)]
        sub: VerifyCmd,
    },
}

#[derive(Subcommand)]
enum TableauxCmd {
    /// Number of standard Young tableaux of a shape.
    F { lam: String },
    /// Kostka number: SSYT of given shape and content.
    Kostka { lam: String, mu: String },
    /// Count (or list) standard Young tableaux.
    Syt {
        lam: String,
        #[arg(long)]
        list: bool,
    },
    /// Count (or list) semistandard Young tableaux of shape and content.
    Ssyt {
        lam: String,
        mu: String,
        #[arg(long)]
        list: bool,
    },
    /// Irreducible character value at a conjugacy class.
    Character { lam: String, mu: String },
    /// Hook lengths of a shape.
    Hooks { lam: String },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Closed-form reproduction of the published H_{1,0} star tables.
    Table1,
    /// Closed form vs oracle agreement for stars.
    Cross {
        #[arg(long, default_value_t = 6)]
        max_n: u32,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Empirical vanishing-conjecture check on stars.
    Conjecture {
        #[arg(long, default_value_t = 5)]
        max_n: u32,
        #[command(flatten)]
        oracle: OracleArgs,
    },
}

#[derive(Args)]
struct GraphSource {
    /// Star graph on N vertices.
    #[arg(long, value_name = "N")]
    star: Option<u32>,
    /// Graph file: first line "n <edge count>", then one "u v" edge per line.
    #[arg(long, value_name = "FILE")]
    graph: Option<PathBuf>,
}

impl GraphSource {
    fn load(&self) -> Result<(Graph, String), CliError> {
        match (self.star, &self.graph) {
            (Some(n), None) => {
                let g = Graph::star(n).map_err(|e| CliError::usage(e.to_string()))?;
                Ok((g, format!("star({n})")))
            }
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
                let g = Graph::parse(&text).map_err(|e| CliError::usage(e.to_string()))?;
                Ok((g, path.display().to_string()))
            }
            _ => Err(CliError::usage(
                "exactly one graph source required: --star N or --graph FILE".into(),
            )),
        }
    }
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, value_enum, default_value_t = RankModeArg::Auto)]
    rank_mode: RankModeArg,
    /// Permit n = 7 (modular backend only).
    #[arg(long)]
    allow_large: bool,
    /// Seed for modular prime selection.
    #[arg(long, default_value_t = 20260823)]
    seed: u64,
}

impl OracleArgs {
    fn config(&self) -> OracleConfig {
        OracleConfig {
            rank_mode: self.rank_mode.into(),
            allow_large: self.allow_large,
            seed: self.seed,
            ..OracleConfig::default()
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RankModeArg {
    Exact,
    Modular,
    Auto,
}

impl From<RankModeArg> for RankMode {
    fn from(v: RankModeArg) -> RankMode {
        match v {
            RankModeArg::Exact => RankMode::Exact,
            RankModeArg::Modular => RankMode::Modular,
            RankModeArg::Auto => RankMode::Auto,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Monomial,
    Schur,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    fn usage(message: String) -> Self {
        CliError { message, code: EXIT_USAGE }
    }

    fn internal(message: String) -> Self {
        CliError { message, code: EXIT_INTERNAL }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        let code = match e {
            OracleError::SizeBound { .. }
            | OracleError::LargeNeedsModular
            | OracleError::IndexOutOfRange { .. } => EXIT_USAGE,
            _ => EXIT_INTERNAL,
        };
        CliError { message: e.to_string(), code }
    }
}

fn parse_partition(s: &str) -> Result<Partition, CliError> {
    s.parse()
        .map_err(|e| CliError::usage(format!("bad partition `{s}`: {e}")))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not usage errors.
            let benign = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = e.print();
            return if benign { ExitCode::SUCCESS } else { ExitCode::from(EXIT_USAGE) };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Tableaux { sub } => cmd_tableaux(sub),
        Command::Csf { source, basis, format } => cmd_csf(&source, basis, format),
        Command::Homology { source, i, oracle, format } => {
            cmd_homology(&source, i, &oracle.config(), format)
        }
        Command::Predict { star, format } => cmd_predict(star, format),
        Command::Verify { sub } => match sub {
            VerifyCmd::Table1 => cmd_verify_table1(),
            VerifyCmd::Cross { max_n, oracle } => cmd_verify_cross(max_n, &oracle.config()),
            VerifyCmd::Conjecture { max_n, oracle } => {
                cmd_verify_conjecture(max_n, &oracle.config())
            }
        },
    }
}

fn cmd_tableaux(sub: TableauxCmd) -> Result<u8, CliError> {
    match sub {
        TableauxCmd::F { lam } => {
            println!("{}", f_syt(&parse_partition(&lam)?));
        }
        TableauxCmd::Kostka { lam, mu } => {
            println!("{}", kostka(&parse_partition(&lam)?, &parse_partition(&mu)?));
        }
        TableauxCmd::Syt { lam, list } => {
            let tableaux = enumerate_syt(&parse_partition(&lam)?);
            if list {
                for t in &tableaux {
                    println!("{}", rows_string(t.rows()));
                }
            }
            println!("{}", tableaux.len());
        }
        TableauxCmd::Ssyt { lam, mu, list } => {
            let tableaux = enumerate_ssyt(&parse_partition(&lam)?, &parse_partition(&mu)?);
            if list {
                for t in &tableaux {
                    println!("{}", rows_string(t.rows()));
                }
            }
            println!("{}", tableaux.len());
        }
        TableauxCmd::Character { lam, mu } => {
            let lam = parse_partition(&lam)?;
            let mu = parse_partition(&mu)?;
            if lam.n() != mu.n() {
                return Err(CliError::usage(format!(
                    "shape {lam} and class {mu} must partition the same n"
                )));
            }
            println!("{}", character(&lam, &ClassLabel::new(mu)));
        }
        TableauxCmd::Hooks { lam } => {
            println!("{}", rows_string(hook_lengths(&parse_partition(&lam)?).rows()));
        }
    }
    Ok(0)
}

fn rows_string(rows: &[Vec<u32>]) -> String {
    rows.iter()
        .map(|r| {
            r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
        })
        .collect::<Vec<_>>()
        .join(" / ")
}

fn cmd_csf(source: &GraphSource, basis: BasisArg, format: Format) -> Result<u8, CliError> {
    let (g, input) = source.load()?;
    let monomial = chromatic_symmetric_function(&g, DEFAULT_CSF_BOUND)
        .map_err(|e| CliError::usage(e.to_string()))?;
    let expansion = match basis {
        BasisArg::Monomial => monomial,
        BasisArg::Schur => {
            csf_to_schur(&monomial).map_err(|e| CliError::internal(e.to_string()))?
        }
    };
    let symbol = match expansion.basis {
        Basis::Monomial => "m",
        Basis::Schur => "s",
    };
    match format {
        Format::Table => {
            for (lam, coeff) in csf_pairs(&expansion) {
                println!("{symbol}_{{{lam}}}: {coeff}");
            }
        }
        Format::Csv => {
            println!("partition,coefficient");
            for (lam, coeff) in csf_pairs(&expansion) {
                println!("\"{lam}\",{coeff}");
            }
        }
        Format::Json => {
            let result: Vec<Value> = csf_pairs(&expansion)
                .into_iter()
                .map(|(lam, coeff)| {
                    json!({"partition": lam.to_string(), "coefficient": coeff.to_string()})
                })
                .collect();
            print_json(json!({
                "command": "csf",
                "input": {"graph": input, "basis": symbol},
                "metadata": {"vertices": g.n(), "edges": g.edge_count()},
                "result": result,
            }));
        }
    }
    Ok(0)
}

fn csf_pairs(e: &CsfExpansion) -> Vec<(&Partition, i64)> {
    let mut pairs: Vec<(&Partition, i64)> = e
        .coeffs
        .iter()
        .filter(|(_, &c)| c != 0)
        .map(|(p, &c)| (p, c))
        .collect();
    pairs.sort_by(|a, b| a.0.cmp_revlex(b.0));
    pairs
}

fn cmd_homology(
    source: &GraphSource,
    i: usize,
    cfg: &OracleConfig,
    format: Format,
) -> Result<u8, CliError> {
    let (g, input) = source.load()?;
    let out = homology_multiplicities(&g, i, cfg)?;
    match format {
        Format::Table => {
            println!("H_{{{i},0}} of {input}:");
            print_table(&out.table);
            let dims: Vec<String> = out
                .meta
                .chain_dims
                .iter()
                .map(|(j, d)| format!("dim C_{j} = {d}"))
                .collect();
            println!("# {}", dims.join(", "));
            println!("# rank backend: {}", out.meta.backend);
            if !out.meta.primes.is_empty() {
                let primes: Vec<String> =
                    out.meta.primes.iter().map(|p| p.to_string()).collect();
                println!("# primes: {} (seed {})", primes.join(", "), out.meta.seed);
            }
        }
        Format::Csv => {
            println!("partition,multiplicity");
            for (lam, mult) in out.table.iter_revlex() {
                println!("\"{lam}\",{mult}");
            }
        }
        Format::Json => {
            print_json(homology_json(&out, &input, "homology"));
        }
    }
    Ok(0)
}

fn homology_json(out: &HomologyOutput, input: &str, command: &str) -> Value {
    let result: Vec<Value> = out
        .table
        .iter_revlex()
        .into_iter()
        .map(|(lam, mult)| {
            json!({"partition": lam.to_string(), "multiplicity": mult.to_string()})
        })
        .collect();
    let ranks: Vec<Value> = out
        .meta
        .per_lambda
        .iter()
        .map(|d| {
            json!({
                "partition": d.lam.to_string(),
                "chain_multiplicity": d.chain_mult.to_string(),
                "rank_down": d.rank_down.to_string(),
                "rank_up": d.rank_up.to_string(),
                "multiplicity": d.mult.to_string(),
            })
        })
        .collect();
    let dims: Vec<Value> = out
        .meta
        .chain_dims
        .iter()
        .map(|(j, d)| json!({"i": j, "dim": d.to_string()}))
        .collect();
    let primes: Vec<String> = out.meta.primes.iter().map(|p| p.to_string()).collect();
    json!({
        "command": command,
        "input": {"graph": input, "i": out.i},
        "metadata": {
            "chain_dims": dims,
            "isotypic_ranks": ranks,
            "rank_backend": out.meta.backend,
            "primes": primes,
            "seed": out.meta.seed,
        },
        "result": result,
    })
}

fn print_table(table: &MultiplicityTable) {
    if table.is_empty() {
        println!("(zero)");
    } else {
        println!("{}", table.to_text());
    }
}

fn print_json(v: Value) {
    println!("{}", serde_json::to_string_pretty(&v).expect("JSON serialization"));
}

fn cmd_predict(n: u32, format: Format) -> Result<u8, CliError> {
    let pred = predict_h10_star(n).map_err(|e| CliError::usage(e.to_string()))?;
    match format {
        Format::Table => {
            println!("predicted H_{{1,0}} of star({n}) (assumes the vanishing conjecture):");
            print_table(&pred.table);
        }
        Format::Csv => {
            println!("partition,multiplicity");
            for (lam, mult) in pred.table.iter_revlex() {
                println!("\"{lam}\",{mult}");
            }
        }
        Format::Json => {
            let result: Vec<Value> = pred
                .table
                .iter_revlex()
                .into_iter()
                .map(|(lam, mult)| {
                    json!({"partition": lam.to_string(), "multiplicity": mult.to_string()})
                })
                .collect();
            print_json(json!({
                "command": "predict",
                "input": {"graph": format!("star({n})"), "i": 1},
                "metadata": {"assumes_conjecture": true},
                "result": result,
            }));
        }
    }
    Ok(0)
}

fn cmd_verify_table1() -> Result<u8, CliError> {
    let mut all_ok = true;
    for n in 4..=7u32 {
        let reference = reference_h10_table(n).expect("tables exist for n = 4..=7");
        let predicted = predict_h10_star(n)
            .map_err(|e| CliError::internal(e.to_string()))?
            .table;
        let ok = predicted == reference;
        all_ok &= ok;
        println!(
            "table1 star({n}): {} ({} nonzero entries)",
            if ok { "PASS" } else { "FAIL" },
            reference.len()
        );
        if !ok {
            println!("  expected:\n{}", indent(&reference.to_text()));
            println!("  computed:\n{}", indent(&predicted.to_text()));
        }
    }
    if all_ok {
        Ok(0)
    } else {
        Err(CliError::internal("closed form disagrees with the published table".into()))
    }
}

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("    {l}")).collect::<Vec<_>>().join("\n")
}

fn cmd_verify_cross(max_n: u32, cfg: &OracleConfig) -> Result<u8, CliError> {
    let mut all_ok = true;
    for n in 4..=max_n {
        let g = Graph::star(n).expect("n >= 4");
        let oracle = homology_multiplicities(&g, 1, cfg)?;
        let mut mismatches = Vec::new();
        let mut checked = 0usize;
        for ell in 2..=n {
            for k in 0..=(n - ell) / 2 {
                let shape = StarShape::new(n, ell, k)
                    .map_err(|e| CliError::internal(e.to_string()))?;
                let closed = mult_general(&shape)
                    .map_err(|e| CliError::internal(e.to_string()))?;
                let lam = shape.partition();
                let observed = oracle.table.get(&lam);
                checked += 1;
                if closed.to_string() != observed.to_string() {
                    mismatches.push(format!("{lam}: closed {closed}, oracle {observed}"));
                }
            }
        }
        let ok = mismatches.is_empty();
        all_ok &= ok;
        println!(
            "cross star({n}): {} ({checked} shapes, backend {})",
            if ok { "PASS" } else { "FAIL" },
            oracle.meta.backend
        );
        for m in mismatches {
            println!("  {m}");
        }
    }
    if all_ok {
        Ok(0)
    } else {
        Err(CliError::internal("closed form disagrees with the oracle".into()))
    }
}

fn cmd_verify_conjecture(max_n: u32, cfg: &OracleConfig) -> Result<u8, CliError> {
    let mut found = false;
    for n in 4..=max_n {
        let report = check_conjecture(n, cfg)?;
        if report.holds() {
            println!(
                "conjecture star({n}): no violations across i = 0..={}",
                report.tables.len() - 1
            );
        } else {
            found = true;
            println!("conjecture star({n}): {} violation(s)", report.violations.len());
            for v in &report.violations {
                println!("  i = {}, S_{{{}}} multiplicity {}", v.i, v.lam, v.mult);
            }
        }
    }
    Ok(if found { EXIT_CONJECTURE } else { 0 })
}
