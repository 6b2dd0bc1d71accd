mod cache;
mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};
use output::{Format, JsonMeta, RenderInfo};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;
use symchar::frobchar::{self, verify, CharName, NamedCharacter};
use symchar::oracle::{self, Variant};
use symchar::symfunc::Basis;
use symchar::Error;

const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Exact graded Frobenius characters of braid-arrangement algebras.
#[derive(Parser)]
#[command(name = "symchar", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a closed formula.
    Compute(ComputeArgs),
    /// Run identity checks between the formulas.
    Verify(VerifyArgs),
    /// Recompute a character by brute force from the algebra presentation.
    Oracle(OracleArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormulaArg {
    C,
    D,
    Ot,
    M,
    R,
    T,
    Lyndon,
    Lambda,
}

impl FormulaArg {
    fn char_name(self) -> CharName {
        match self {
            FormulaArg::C => CharName::C,
            FormulaArg::D => CharName::D,
            FormulaArg::Ot => CharName::OT,
            FormulaArg::M => CharName::M,
            FormulaArg::R => CharName::R,
            FormulaArg::T => CharName::T,
            FormulaArg::Lyndon => CharName::Lyndon,
            FormulaArg::Lambda => CharName::Lambda,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            FormulaArg::C => "c",
            FormulaArg::D => "d",
            FormulaArg::Ot => "ot",
            FormulaArg::M => "m",
            FormulaArg::R => "r",
            FormulaArg::T => "t",
            FormulaArg::Lyndon => "lyndon",
            FormulaArg::Lambda => "lambda",
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BasisArg {
    S,
    P,
    H,
    E,
    M,
}

impl BasisArg {
    fn basis(self) -> Basis {
        match self {
            BasisArg::S => Basis::S,
            BasisArg::P => Basis::P,
            BasisArg::H => Basis::H,
            BasisArg::E => Basis::E,
            BasisArg::M => Basis::M,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Latex,
}

impl FormatArg {
    fn format(self) -> Format {
        match self {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
            FormatArg::Latex => Format::Latex,
        }
    }
}

#[derive(Args)]
struct ComputeArgs {
    /// Which character to compute.
    #[arg(long)]
    formula: FormulaArg,
    /// Number of points / rank parameter.
    #[arg(long)]
    n: u32,
    /// Truncation order for the power-series characters; ignored for the
    /// polynomial ones. Defaults to n + 1.
    #[arg(long)]
    max_q_degree: Option<usize>,
    /// Output basis.
    #[arg(long, value_enum, default_value_t = BasisArg::S)]
    basis: BasisArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Character-table cache directory (also: SYMCHAR_CACHE).
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Disable the on-disk cache entirely.
    #[arg(long)]
    no_cache: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which identity to check; "all" runs the whole suite.
    #[arg(long, default_value = "all")]
    check: String,
    /// Largest n to check.
    #[arg(long)]
    n_max: u32,
    /// Also compare the formulas against the brute-force presentations.
    #[arg(long)]
    oracle: bool,
    /// Largest n for the brute-force comparison.
    #[arg(long, default_value_t = 4)]
    oracle_n_max: u32,
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    #[arg(long)]
    no_cache: bool,
}

#[derive(Args)]
struct OracleArgs {
    /// Which presented algebra to build.
    #[arg(long, value_enum)]
    algebra: AlgebraArg,
    #[arg(long)]
    n: u32,
    /// Largest monomial degree to build.
    #[arg(long)]
    max_degree: usize,
    #[arg(long, value_enum, default_value_t = BasisArg::S)]
    basis: BasisArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AlgebraArg {
    Ot,
    C,
    D,
    M,
}

impl AlgebraArg {
    fn variant(self) -> Variant {
        match self {
            AlgebraArg::Ot => Variant::OT,
            AlgebraArg::C => Variant::C,
            AlgebraArg::D => Variant::D,
            AlgebraArg::M => Variant::M,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            AlgebraArg::Ot => "ot",
            AlgebraArg::C => "c",
            AlgebraArg::D => "d",
            AlgebraArg::M => "m",
        }
    }
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::NotPolynomial { .. } | Error::TooLarge { .. } => 3,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Compute(args) => run_compute(args),
        Command::Verify(args) => run_verify(args),
        Command::Oracle(args) => run_oracle(args),
    }
}

fn run_compute(args: ComputeArgs) -> ExitCode {
    let start = Instant::now();
    let cache_dir = if args.no_cache {
        None
    } else {
        cache::resolve_cache_dir(args.cache_dir.as_deref())
    };
    let (cache_hit, table_ms) = cache::ensure_tables(cache_dir.as_deref(), args.n);
    let named = match NamedCharacter::compute(args.formula.char_name(), args.n, args.max_q_degree)
    {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(error_code(&e));
        }
    };
    let value = named.value.convert(args.basis.basis());
    let info = RenderInfo {
        formula: args.formula.as_str().to_string(),
        n: args.n,
        max_q_degree: args.max_q_degree,
        meta: JsonMeta {
            version: VERSION.to_string(),
            ms: start.elapsed().as_millis(),
            table_ms: Some(table_ms),
            cache_hit: Some(cache_hit),
        },
    };
    println!("{}", output::render(&value, args.format.format(), &info));
    ExitCode::SUCCESS
}

fn run_verify(args: VerifyArgs) -> ExitCode {
    let Some(check) = verify::CheckName::parse(&args.check) else {
        eprintln!("error: unknown check '{}'", args.check);
        return ExitCode::from(2);
    };
    let cache_dir = if args.no_cache {
        None
    } else {
        cache::resolve_cache_dir(args.cache_dir.as_deref())
    };
    cache::ensure_tables(cache_dir.as_deref(), args.n_max);
    let report = match verify::run(check, args.n_max) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(error_code(&e));
        }
    };
    let mut all_pass = true;
    for r in &report.results {
        if r.pass {
            println!("PASS {} n={} ({} ms)", r.name, r.n, r.millis);
        } else {
            all_pass = false;
            let detail = r
                .discrepancy
                .as_ref()
                .map(|d| format!(": {d}"))
                .unwrap_or_default();
            println!("FAIL {} n={}{detail}", r.name, r.n);
        }
    }
    if args.oracle {
        match run_oracle_comparison(args.oracle_n_max) {
            Ok(ok) => all_pass &= ok,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(error_code(&e));
            }
        }
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_oracle_comparison(n_max: u32) -> symchar::Result<bool> {
    let mut all_pass = true;
    let mut report = |label: String, pass: bool, ms: u128| {
        if pass {
            println!("PASS {label} ({ms} ms)");
        } else {
            all_pass = false;
            println!("FAIL {label}");
        }
    };
    for n in 1..=n_max {
        // check through the first vanishing degree of each algebra
        let d = n as usize;
        let start = Instant::now();
        let pass = frobchar::ch_c(n)
            .truncate(d + 1)
            .agrees_with(&oracle::oracle_character(Variant::C, n, d)?);
        report(format!("oracle-c n={n}"), pass, start.elapsed().as_millis());

        let d = (n as usize).max(1) - 1;
        let start = Instant::now();
        let pass = frobchar::ch_d(n)
            .truncate(d + 1)
            .agrees_with(&oracle::oracle_character(Variant::D, n, d)?);
        report(format!("oracle-d n={n}"), pass, start.elapsed().as_millis());

        let start = Instant::now();
        let pass = frobchar::ch_m(n, d + 1)?
            .truncate(d + 1)
            .agrees_with(&oracle::oracle_character(Variant::M, n, d)?);
        report(format!("oracle-m n={n}"), pass, start.elapsed().as_millis());
    }
    for n in 1..=n_max.min(4) {
        let d = 4usize;
        let start = Instant::now();
        let pass = frobchar::ch_ot(n, d).agrees_with(&oracle::oracle_character(Variant::OT, n, d)?);
        report(format!("oracle-ot n={n}"), pass, start.elapsed().as_millis());
    }
    Ok(all_pass)
}

fn run_oracle(args: OracleArgs) -> ExitCode {
    let start = Instant::now();
    let value = match oracle::oracle_character(args.algebra.variant(), args.n, args.max_degree) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(error_code(&e));
        }
    };
    let value = value.convert(args.basis.basis());
    let info = RenderInfo {
        formula: format!("oracle-{}", args.algebra.as_str()),
        n: args.n,
        max_q_degree: Some(args.max_degree),
        meta: JsonMeta {
            version: VERSION.to_string(),
            ms: start.elapsed().as_millis(),
            table_ms: None,
            cache_hit: None,
        },
    };
    println!("{}", output::render(&value, args.format.format(), &info));
    ExitCode::SUCCESS
}
