//! `sdepth`: exact depth and Stanley depth of squarefree monomial
//! ideals, with batch verification of the shipped checks.
//!
//! Exit codes: 0 on success or an all-pass check, 1 when a check finds
//! a failure (or a claimed decomposition does not verify), 2 on usage
//! errors including unparseable ideals.

use std::io::Read;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sdepth_core::construct::{
    certify_weak_conjecture, colon_transform, combine_h1, combine_h2, CombineVariant,
};
use sdepth_core::enumerate::{is_canonical_under_symmetry, IdealFilter, IdealIterator};
use sdepth_core::error::Error;
use sdepth_core::exec::{with_thread_count, ExecMode};
use sdepth_core::harness::{run_frontier, verify_batch_with, CheckId, Report, RunOptions};
use sdepth_core::hochster::hochster_betti;
use sdepth_core::ideal::QuotientPresentation;
use sdepth_core::json::{BettiTableJson, CertificateJson, DecompositionJson, VerdictJson};
use sdepth_core::koszul::{depth, koszul_betti_with, Field};
use sdepth_core::parse::{parse_ideal, parse_monomial};
use sdepth_core::stanley::{sdepth_exact, verify_decomposition};
use sdepth_core::DepthValue;

fn check_list() -> String {
    let mut out = String::from("Checks (for `verify --check <ID>`):\n");
    for c in CheckId::ALL {
        let (lo, hi) = c.feasible_n();
        let range = if lo == hi {
            format!("n = {lo}")
        } else {
            format!("n = {lo}..={hi}")
        };
        out.push_str(&format!("  {:<16} [{}] {}\n", c.as_str(), range, c.description()));
    }
    out.push_str("  weak-conjecture also runs at n = 6 behind --frontier (exploration only).\n");
    out
}

#[derive(Parser)]
#[command(
    name = "sdepth",
    version,
    about = "Exact depth and Stanley depth computations for squarefree monomial ideals",
    after_help = check_list()
)]
struct Cli {
    /// Worker threads for batch commands (default: all cores).
    #[arg(long, global = true, env = "SDEPTH_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Args)]
struct ModuleArgs {
    /// Ring size (number of variables).
    #[arg(long)]
    n: usize,
    /// Treat the ideal itself as the module.
    #[arg(long, conflicts_with_all = ["quotient_of", "inner", "outer"])]
    ideal: Option<String>,
    /// Treat S/I as the module.
    #[arg(long, conflicts_with_all = ["inner", "outer"])]
    quotient_of: Option<String>,
    /// Inner ideal of a quotient presentation J/I.
    #[arg(long, requires = "outer")]
    inner: Option<String>,
    /// Outer ideal of a quotient presentation J/I.
    #[arg(long, requires = "inner")]
    outer: Option<String>,
}

impl ModuleArgs {
    fn presentation(&self) -> Result<QuotientPresentation, Error> {
        if let Some(s) = &self.ideal {
            return QuotientPresentation::of_ideal(parse_ideal(s, self.n)?);
        }
        if let Some(s) = &self.quotient_of {
            return QuotientPresentation::quotient_ring(parse_ideal(s, self.n)?);
        }
        match (&self.inner, &self.outer) {
            (Some(i), Some(j)) => {
                QuotientPresentation::new(parse_ideal(i, self.n)?, parse_ideal(j, self.n)?)
            }
            _ => Err(Error::InvalidPresentation(
                "pass --ideal, --quotient-of, or --inner with --outer".into(),
            )),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BettiMethod {
    Koszul,
    Hochster,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    H1,
    H2Direct,
    H2Filtered,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumFilter {
    All,
    ProperNonzero,
}

#[derive(Subcommand)]
enum Command {
    /// Depth of the module (ring size minus projective dimension).
    Depth {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Exact Stanley depth with a witness decomposition.
    Sdepth {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Multigraded Betti table.
    Betti {
        #[command(flatten)]
        module: ModuleArgs,
        /// koszul works for any presentation; hochster only for S/I.
        #[arg(long, value_enum, default_value_t = BettiMethod::Koszul)]
        method: BettiMethod,
        /// Prime characteristic for the rank computations (default: 0).
        #[arg(long = "char")]
        characteristic: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Minimal primes of an ideal, or associated primes of a quotient.
    Primes {
        #[command(flatten)]
        module: ModuleArgs,
    },
    /// Emit the Stanley decomposition witnessing the exact sdepth.
    Decompose {
        #[command(flatten)]
        module: ModuleArgs,
    },
    /// Transform a decomposition of I into one of (I : v).
    ColonTransform {
        /// Decomposition JSON file ("-" for stdin).
        #[arg(long)]
        decomposition: PathBuf,
        /// Monomial to colon by.
        #[arg(long)]
        v: String,
    },
    /// Combine two decompositions over n-1 variables into one over n.
    Combine {
        #[arg(long, value_enum)]
        variant: Variant,
        /// First input (for h1 the quotient JS/IS; else the ideal I).
        #[arg(long)]
        first: PathBuf,
        /// Second input (h1: I over the small ring; h2-direct: J;
        /// h2-filtered: J/I).
        #[arg(long)]
        second: PathBuf,
    },
    /// Produce a verified certificate for sdepth I >= 1 + depth S/I.
    Certify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ideal: String,
    },
    /// List the squarefree ideals of a small ring.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = EnumFilter::All)]
        filter: EnumFilter,
        /// Keep one representative per variable-permutation class.
        #[arg(long)]
        symmetry: bool,
        /// Print only the count.
        #[arg(long)]
        count: bool,
    },
    /// Run a named check over its exhaustive domain.
    Verify {
        #[arg(long)]
        check: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Record real per-case wall times (reports stop being
        /// byte-identical across runs).
        #[arg(long)]
        timings: bool,
        /// Force sequential execution.
        #[arg(long)]
        sequential: bool,
        /// Exploratory n = 6 run with symmetry reduction (only for
        /// weak-conjecture; not an acceptance gate).
        #[arg(long)]
        frontier: bool,
        /// Wall-clock budget for --frontier, in seconds.
        #[arg(long)]
        budget_secs: Option<u64>,
        /// Resumable checkpoint file for --frontier.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Check a decomposition JSON against its declared target module.
    VerifyDecomposition {
        /// Decomposition JSON file ("-" for stdin).
        #[arg(long)]
        decomposition: PathBuf,
        /// Re-emit the decomposition in canonical JSON.
        #[arg(long)]
        reemit: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    let threads = cli.threads;
    let code = with_thread_count(threads, || match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    });
    std::process::exit(code);
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::CertificateInvalid(_) | Error::InvalidDecomposition(_) => 1,
        _ => 2,
    }
}

fn read_decomposition(path: &PathBuf) -> Result<DecompositionJson, Error> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(path)?
    };
    Ok(serde_json::from_str(&text)?)
}

fn emit_json<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn run(command: Command) -> Result<i32, Error> {
    match command {
        Command::Depth { module, format } => {
            let pres = module.presentation()?;
            let d = depth(&pres)?;
            match (format, d) {
                (Format::Json, DepthValue::Finite(v)) => {
                    emit_json(&serde_json::json!({ "depth": v }))
                }
                (Format::Json, DepthValue::Infinite) => emit_json(&serde_json::json!({
                    "depth": null,
                    "convention": "zero module; depth is +inf by convention"
                })),
                (_, DepthValue::Finite(v)) => println!("{v}"),
                (_, DepthValue::Infinite) => println!("+inf (convention: zero module)"),
            }
            Ok(0)
        }
        Command::Sdepth { module, format } => {
            let pres = module.presentation()?;
            let sd = sdepth_exact(&pres)?;
            let witness = DecompositionJson::from_decomposition(&sd.decomposition(&pres));
            match format {
                Format::Json => emit_json(&serde_json::json!({
                    "sdepth": sd.value,
                    "witness": witness,
                })),
                _ => {
                    println!("{}", sd.value);
                    emit_json(&witness);
                }
            }
            Ok(0)
        }
        Command::Betti {
            module,
            method,
            characteristic,
            format,
        } => {
            let pres = module.presentation()?;
            let field = match characteristic {
                None | Some(0) => Field::Rationals,
                Some(p) => Field::Prime(p),
            };
            let table = match method {
                BettiMethod::Koszul => koszul_betti_with(&pres, field, ExecMode::Parallel)?,
                BettiMethod::Hochster => {
                    if !pres.outer().is_unit() {
                        return Err(Error::InvalidPresentation(
                            "the hochster method applies to quotient rings S/I; pass --quotient-of"
                                .into(),
                        ));
                    }
                    hochster_betti(pres.inner())?
                }
            };
            match format {
                Format::Json => emit_json(&BettiTableJson::from_table(&table)),
                _ => print!("{table}"),
            }
            Ok(0)
        }
        Command::Primes { module } => {
            let pres = module.presentation()?;
            let primes = if pres.inner().is_zero() && !pres.outer().is_unit() {
                pres.outer().minimal_primes()?
            } else {
                pres.ass_primes()?
            };
            for p in primes {
                println!("{p}");
            }
            Ok(0)
        }
        Command::Decompose { module } => {
            let pres = module.presentation()?;
            let sd = sdepth_exact(&pres)?;
            emit_json(&DecompositionJson::from_decomposition(&sd.decomposition(&pres)));
            Ok(0)
        }
        Command::ColonTransform { decomposition, v } => {
            let d = read_decomposition(&decomposition)?.to_decomposition()?;
            let v = parse_monomial(&v, d.n)?;
            let out = colon_transform(&d, &v)?;
            emit_json(&DecompositionJson::from_decomposition(&out));
            Ok(0)
        }
        Command::Combine {
            variant,
            first,
            second,
        } => {
            let a = read_decomposition(&first)?.to_decomposition()?;
            let b = read_decomposition(&second)?.to_decomposition()?;
            let out = match variant {
                Variant::H1 => combine_h1(&a, &b)?,
                Variant::H2Direct => combine_h2(CombineVariant::Direct, &a, &b)?,
                Variant::H2Filtered => combine_h2(CombineVariant::Filtered, &a, &b)?,
            };
            emit_json(&DecompositionJson::from_decomposition(&out));
            Ok(0)
        }
        Command::Certify { n, ideal } => {
            let t = parse_ideal(&ideal, n)?;
            let cert = certify_weak_conjecture(&t)?;
            emit_json(&CertificateJson::from_certificate(&cert));
            Ok(0)
        }
        Command::Enumerate {
            n,
            filter,
            symmetry,
            count,
        } => {
            let filter = match filter {
                EnumFilter::All => IdealFilter::All,
                EnumFilter::ProperNonzero => IdealFilter::ProperNonzero,
            };
            let stream = IdealIterator::new(n, filter)?
                .filter(|i| !symmetry || is_canonical_under_symmetry(i));
            if count {
                println!("{}", stream.count());
            } else {
                let mut total = 0usize;
                for ideal in stream {
                    println!("{ideal}");
                    total += 1;
                }
                eprintln!("total: {total}");
            }
            Ok(0)
        }
        Command::Verify {
            check,
            n,
            format,
            timings,
            sequential,
            frontier,
            budget_secs,
            checkpoint,
        } => {
            if frontier {
                if check != CheckId::WeakConjecture.as_str() {
                    return Err(Error::UnknownCheck(format!(
                        "--frontier only applies to weak-conjecture, not `{check}`"
                    )));
                }
                let status = run_frontier(
                    n,
                    budget_secs.map(Duration::from_secs),
                    checkpoint.as_deref(),
                    |s| {
                        eprintln!(
                            "frontier: processed {} classes, {} failures",
                            s.processed, s.failures
                        )
                    },
                )?;
                emit_json(&status);
                return Ok(if status.failures > 0 { 1 } else { 0 });
            }
            let check = CheckId::parse(&check)?;
            let opts = RunOptions {
                mode: if sequential {
                    ExecMode::Sequential
                } else {
                    ExecMode::Parallel
                },
                timings,
                ..RunOptions::default()
            };
            let report = verify_batch_with(check, n, &opts)?;
            print_report(&report, format);
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::VerifyDecomposition {
            decomposition,
            reemit,
        } => {
            let d = read_decomposition(&decomposition)?.to_decomposition()?;
            let verdict = verify_decomposition(&d);
            if reemit {
                emit_json(&DecompositionJson::from_decomposition(&d));
            } else {
                emit_json(&VerdictJson::from_verdict(&verdict));
            }
            Ok(if verdict.is_valid() { 0 } else { 1 })
        }
    }
}

fn print_report(report: &Report, format: Format) {
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Csv => print!("{}", report.to_csv()),
        Format::Table => {
            println!("check:    {}", report.check);
            println!("n:        {}", report.n);
            println!("cases:    {}", report.summary.cases);
            println!("failures: {}", report.summary.failures);
            if let Some(m) = report.summary.min_margin {
                println!("min margin: {m} (at: {})", report.summary.extremal.join("; "));
            }
            for case in report.cases.iter().filter(|c| !c.pass) {
                println!("FAIL {}", case.label);
                if let Some(detail) = &case.detail {
                    println!("     {detail}");
                }
            }
            println!(
                "result:   {}",
                if report.passed() { "PASS" } else { "FAIL" }
            );
        }
    }
}
