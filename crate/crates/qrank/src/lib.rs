//! Command-line front end for exact rank/k-trace matrix counting over
//! GF(q): point queries, full tables, verification suites and Z-set
//! counts, with JSON/CSV output.

pub mod matio;
pub mod record;
pub mod verify;

use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use qrank_core::counts::{count_z, f_count, g_count, CountError, TraceClass};
use qrank_core::oracle::{oracle_z, OracleError, MAX_ENUM_STEPS};
use qrank_core::polyring::f_table_rec;
use qrank_core::qanalogs::{rank_count, QParam};

use record::{OutputRecord, QueryEcho};

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or invalid input (exit 2).
    Usage(String),
    /// A verification or closed/oracle agreement failure (exit 1).
    Failure(String),
    /// An internal invariant breach such as DivisionInexact (exit 3).
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) => 1,
            CliError::Internal(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Failure(m) | CliError::Internal(m) => m,
        }
    }
}

fn count_err(e: CountError) -> CliError {
    match e {
        CountError::DivisionInexact => CliError::Internal(e.to_string()),
        _ => CliError::Usage(e.to_string()),
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "qrank",
    version,
    about = "Exact counts of n x n matrices over GF(q) by rank and k-trace"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count rank-r matrices with k-trace in the given class
    Count(CountArgs),
    /// Emit the full (r x trace-class) table for fixed n, k, q
    Table(TableArgs),
    /// Run identity and oracle verification suites
    Verify(VerifyArgs),
    /// Count rank-r matrices X with tr(AX) = alpha for a concrete A
    Zcount(ZcountArgs),
    /// Print the field context: modulus and element table
    GfInfo(GfInfoArgs),
}

#[derive(Args, Debug)]
pub struct FieldFlags {
    /// Field order q = p^m (alternative to --p/--m)
    #[arg(long)]
    pub q: Option<u64>,
    /// Field characteristic (requires --m)
    #[arg(long)]
    pub p: Option<u64>,
    /// Extension degree (requires --p)
    #[arg(long)]
    pub m: Option<u32>,
}

impl FieldFlags {
    fn resolve(&self) -> Result<QParam, CliError> {
        match (self.q, self.p, self.m) {
            (Some(q), None, None) => {
                QParam::from_order(q).map_err(|e| CliError::Usage(e.to_string()))
            }
            (None, Some(p), Some(m)) => {
                QParam::new(p, m).map_err(|e| CliError::Usage(e.to_string()))
            }
            _ => Err(CliError::Usage(
                "specify the field as --q Q or as --p P --m M".into(),
            )),
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMethod {
    /// Main-theorem closed form
    Closed,
    /// Three-term recursion from the n = k base row
    Rec,
}

#[derive(Args, Debug)]
pub struct CountArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub r: u64,
    #[arg(long)]
    pub k: u64,
    #[command(flatten)]
    pub field: FieldFlags,
    /// Trace class: 0|zero or 1|nonzero
    #[arg(long)]
    pub alpha: String,
    #[arg(long, value_enum, default_value_t = CountMethod::Closed)]
    pub method: CountMethod,
    #[arg(long)]
    pub json: bool,
}

fn parse_trace_class(s: &str) -> Result<TraceClass, CliError> {
    match s {
        "0" | "zero" => Ok(TraceClass::Zero),
        "1" | "nonzero" => Ok(TraceClass::Nonzero),
        other => Err(CliError::Usage(format!(
            "bad --alpha {other:?}: expected 0, 1, zero or nonzero"
        ))),
    }
}

fn class_name(c: TraceClass) -> &'static str {
    match c {
        TraceClass::Zero => "zero",
        TraceClass::Nonzero => "nonzero",
    }
}

pub fn cmd_count(args: &CountArgs) -> Result<(), CliError> {
    let param = args.field.resolve()?;
    let alpha = parse_trace_class(&args.alpha)?;
    if args.n < 1 || args.r > args.n || args.k > args.n {
        return Err(CliError::Usage(
            "count requires 1 <= n, 0 <= r <= n, 0 <= k <= n".into(),
        ));
    }
    let q = param.order();
    let started = Instant::now();
    let (result, method) = match args.method {
        CountMethod::Closed => (
            f_count(args.n, args.r, args.k, q, alpha).map_err(count_err)?,
            "closed_form",
        ),
        CountMethod::Rec => {
            let row = f_table_rec(args.n, args.k, q, alpha).map_err(count_err)?;
            (row[args.r as usize].clone(), "recurrence")
        }
    };
    if args.json {
        let rec = OutputRecord {
            query: QueryEcho {
                n: args.n,
                r: Some(args.r),
                k: Some(args.k),
                p: param.p(),
                m: param.m(),
                alpha: class_name(alpha).into(),
            },
            result: result.to_string(),
            method: method.into(),
            elapsed_ms: started.elapsed().as_millis() as u64,
        };
        println!("{}", rec.to_json());
    } else {
        println!("{result}");
    }
    Ok(())
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub k: u64,
    #[command(flatten)]
    pub field: FieldFlags,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    pub format: TableFormat,
}

pub fn cmd_table(args: &TableArgs) -> Result<(), CliError> {
    let param = args.field.resolve()?;
    if args.k > args.n {
        return Err(CliError::Usage("table requires 0 <= k <= n".into()));
    }
    let q = param.order();
    let mut rows = Vec::new();
    for r in 0..=args.n {
        let f0 = f_count(args.n, r, args.k, q, TraceClass::Zero).map_err(count_err)?;
        let f1 = f_count(args.n, r, args.k, q, TraceClass::Nonzero).map_err(count_err)?;
        let g = g_count(args.n, r, args.k, q);
        let a = rank_count(args.n, r, q);
        rows.push((r, f0, f1, g, a));
    }
    match args.format {
        TableFormat::Csv => {
            println!("r,f0,f1,g,a");
            for (r, f0, f1, g, a) in rows {
                println!("{r},{f0},{f1},{g},{a}");
            }
        }
        TableFormat::Json => {
            let items: Vec<serde_json::Value> = rows
                .into_iter()
                .map(|(r, f0, f1, g, a)| {
                    serde_json::json!({
                        "r": r,
                        "f0": f0.to_string(),
                        "f1": f1.to_string(),
                        "g": g.to_string(),
                        "a": a.to_string(),
                    })
                })
                .collect();
            println!("{}", serde_json::Value::Array(items));
        }
    }
    Ok(())
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Identities,
    Oracle,
    All,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Largest n in the grids (defaults: 6 for identities, 3 for oracle)
    #[arg(long)]
    pub max_n: Option<u64>,
    /// Comma-separated q values
    #[arg(long, default_value = "2,3,5")]
    pub q_list: String,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    #[arg(long, default_value_t = 20240501)]
    pub seed: u64,
}

fn parse_q_list(s: &str) -> Result<Vec<u64>, CliError> {
    let list: Vec<u64> = s
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u64>()
                .map_err(|_| CliError::Usage(format!("bad q value {tok:?}")))
        })
        .collect::<Result<_, _>>()?;
    if list.is_empty() || list.iter().any(|&q| q < 2) {
        return Err(CliError::Usage("--q-list needs integers >= 2".into()));
    }
    Ok(list)
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<(), CliError> {
    let q_list = parse_q_list(&args.q_list)?;
    let mut outcomes = Vec::new();
    if matches!(args.suite, Suite::Identities | Suite::All) {
        outcomes.extend(verify::identities_suite(args.max_n.unwrap_or(6), &q_list));
    }
    if matches!(args.suite, Suite::Oracle | Suite::All) {
        let max_n = args.max_n.unwrap_or(3);
        let checks = verify::oracle_suite(max_n, &q_list, args.workers, args.seed)
            .map_err(CliError::Usage)?;
        outcomes.extend(checks);
    }
    let mut failures = 0usize;
    for outcome in &outcomes {
        if outcome.passed {
            println!("PASS {}", outcome.name);
        } else {
            failures += 1;
            println!(
                "FAIL {}: counterexample {}",
                outcome.name,
                outcome.detail.as_deref().unwrap_or("unknown")
            );
        }
    }
    println!("{} checks, {} failed", outcomes.len(), failures);
    if failures > 0 {
        return Err(CliError::Failure(format!("{failures} checks failed")));
    }
    Ok(())
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZMethod {
    Closed,
    Oracle,
}

#[derive(Args, Debug)]
pub struct ZcountArgs {
    /// Inline spec `p,m;row1;row2;...` (element indices) or a file path
    #[arg(long)]
    pub matrix: String,
    #[arg(long)]
    pub r: u64,
    /// Element index of alpha in the canonical enumeration
    #[arg(long)]
    pub alpha: u64,
    /// Default: run both closed form and oracle and require agreement
    #[arg(long, value_enum)]
    pub method: Option<ZMethod>,
    #[arg(long)]
    pub json: bool,
}

pub fn cmd_zcount(args: &ZcountArgs) -> Result<(), CliError> {
    let (ctx, mat) = matio::load_matrix(&args.matrix).map_err(CliError::Usage)?;
    if mat.n_rows() != mat.n_cols() {
        return Err(CliError::Usage("matrix must be square".into()));
    }
    let n = mat.n_rows() as u64;
    if args.r > n {
        return Err(CliError::Usage("r exceeds the matrix size".into()));
    }
    let alpha = ctx
        .elem(args.alpha)
        .map_err(|_| CliError::Usage(format!("alpha index {} out of range", args.alpha)))?;

    let oracle_feasible = (ctx.order() as u128)
        .checked_pow((n * n) as u32)
        .is_some_and(|s| s <= MAX_ENUM_STEPS);

    let mut results: Vec<(&'static str, BigUint, u64)> = Vec::new();
    let run_closed = args.method != Some(ZMethod::Oracle);
    let run_oracle = match args.method {
        Some(ZMethod::Oracle) => true,
        Some(ZMethod::Closed) => false,
        None => oracle_feasible,
    };
    if run_closed {
        let started = Instant::now();
        let v = count_z(&ctx, &mat, args.r, alpha).map_err(count_err)?;
        results.push(("closed_form", v, started.elapsed().as_millis() as u64));
    }
    if run_oracle {
        let started = Instant::now();
        let v = oracle_z(&ctx, &mat, args.r as usize, alpha).map_err(|e| match e {
            OracleError::TooLarge { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        })?;
        results.push(("oracle", v, started.elapsed().as_millis() as u64));
    }
    if results.len() == 2 && results[0].1 != results[1].1 {
        for (method, value, _) in &results {
            eprintln!("{method}: {value}");
        }
        return Err(CliError::Failure(
            "closed form and oracle disagree: theorem violation".into(),
        ));
    }
    for (method, value, elapsed_ms) in &results {
        if args.json {
            let rec = OutputRecord {
                query: QueryEcho {
                    n,
                    r: Some(args.r),
                    k: Some(ctx.mat_rank(&mat) as u64),
                    p: ctx.p(),
                    m: ctx.m(),
                    alpha: args.alpha.to_string(),
                },
                result: value.to_string(),
                method: (*method).into(),
                elapsed_ms: *elapsed_ms,
            };
            println!("{}", rec.to_json());
        } else if results.len() == 2 {
            println!("{method} {value}");
        } else {
            println!("{value}");
        }
    }
    Ok(())
}

#[derive(Args, Debug)]
pub struct GfInfoArgs {
    #[command(flatten)]
    pub field: FieldFlags,
    /// Print the element table even for large fields
    #[arg(long)]
    pub full: bool,
}

pub fn cmd_gf_info(args: &GfInfoArgs) -> Result<(), CliError> {
    let param = args.field.resolve()?;
    let ctx = qrank_core::gfq::FieldCtx::new(param.p(), param.m())
        .map_err(|e| CliError::Usage(e.to_string()))?;
    println!("GF({}) = GF({}^{})", ctx.order(), ctx.p(), ctx.m());
    println!("modulus: {}", matio::poly_string(ctx.modulus()));
    if ctx.order() <= 256 || args.full {
        println!("elements:");
        for e in ctx.elements() {
            println!("  {}: {}", e.index(), matio::poly_string(&ctx.coeffs(e)));
        }
    } else {
        println!("element table suppressed (q > 256); pass --full to print it");
    }
    Ok(())
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Count(args) => cmd_count(args),
        Command::Table(args) => cmd_table(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Zcount(args) => cmd_zcount(args),
        Command::GfInfo(args) => cmd_gf_info(args),
    }
}
