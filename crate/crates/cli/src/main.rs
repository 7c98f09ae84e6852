//! `svtab`: count, list and verify set-valued tableaux from the shell.
//!
//! Exit status: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 internal invariant breach.

use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use svtab::grothendieck::{GrothendieckError, PolynomialReport};
use svtab::shapes::SkewShape;
use svtab::sweep::{sweep, write_csv};
use svtab::tableaux::{count_svt, enumerate_sst, enumerate_svt, SvtIter};
use svtab::verify::{first_failure, run_suite, tally, Fault, Status, Suite, VerifyOptions};
use svtab::{Basis, Formula};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "svtab", version, about = "Set-valued tableaux and Grothendieck polynomials")]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print |SVT(θ,n)| or |SST(θ,n)|.
    Count {
        #[arg(long, value_parser = parse_shape, allow_hyphen_values = true)]
        shape: SkewShape,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Kind::Svt)]
        kind: Kind,
    },
    /// List tableaux in enumeration order.
    Enumerate {
        #[arg(long, value_parser = parse_shape, allow_hyphen_values = true)]
        shape: SkewShape,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        limit: Option<usize>,
        /// Only single-valued (semi-standard) tableaux.
        #[arg(long)]
        sst: bool,
    },
    /// Print a Schur or Grothendieck polynomial.
    Poly {
        #[arg(long, value_parser = parse_shape, allow_hyphen_values = true)]
        shape: SkewShape,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = FormulaArg::Tableaux)]
        formula: FormulaArg,
        #[arg(long, value_enum, default_value_t = BasisArg::Grothendieck)]
        basis: BasisArg,
    },
    /// Run a verification suite over all skew shapes up to a size.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_cells: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long, value_enum, default_value_t = FaultArg::None, hide = true)]
        fault: FaultArg,
    },
    /// Write a CSV table of counts over all skew shapes up to a size.
    Sweep {
        #[arg(long)]
        max_cells: u32,
        #[arg(long)]
        max_n: u32,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Svt,
    Sst,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Jsonl,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormulaArg {
    Tableaux,
    Bialternant,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BasisArg {
    Schur,
    Grothendieck,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FaultArg {
    None,
    SkipGToggle,
}

#[derive(Serialize)]
struct CountJson {
    shape: String,
    n: u32,
    count: String,
}

fn parse_shape(s: &str) -> Result<SkewShape, String> {
    s.parse().map_err(|e: svtab::shapes::ShapeError| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match run(cli, &mut out) {
        Ok(code) => code,
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    };
    if let Err(e) = out.flush() {
        if e.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
        }
    }
    ExitCode::from(code)
}

fn run(cli: Cli, out: &mut impl Write) -> io::Result<u8> {
    match cli.command {
        Command::Count { shape, n, kind } => {
            let count = match kind {
                Kind::Svt => count_svt(&shape, n),
                Kind::Sst => svtab::sweep::sst_count(&shape, n),
            };
            if cli.json {
                let v = CountJson { shape: shape.to_string(), n, count: count.to_string() };
                writeln!(out, "{}", serde_json::to_string(&v).expect("serializable"))?;
            } else {
                writeln!(out, "{count}")?;
            }
            Ok(0)
        }
        Command::Enumerate { shape, n, format, limit, sst } => {
            let iter: SvtIter = match if sst { enumerate_sst(&shape, n) } else { enumerate_svt(&shape, n) } {
                Ok(it) => it,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(EXIT_USAGE);
                }
            };
            let format = if cli.json { Format::Jsonl } else { format };
            for (k, t) in iter.take(limit.unwrap_or(usize::MAX)).enumerate() {
                match format {
                    Format::Text => {
                        if k > 0 {
                            writeln!(out)?;
                        }
                        writeln!(out, "{}", t.render_text())?;
                    }
                    Format::Jsonl => writeln!(out, "{}", t.to_json_string())?,
                }
            }
            Ok(0)
        }
        Command::Poly { shape, n, formula, basis } => {
            let formula = match formula {
                FormulaArg::Tableaux => Formula::Tableaux,
                FormulaArg::Bialternant => Formula::Bialternant,
            };
            let basis = match basis {
                BasisArg::Schur => Basis::Schur,
                BasisArg::Grothendieck => Basis::Grothendieck,
            };
            match PolynomialReport::build(&shape, n, formula, basis) {
                Ok(report) => {
                    if cli.json {
                        let v = serde_json::to_string(&report.to_json()).expect("serializable");
                        writeln!(out, "{v}")?;
                    } else {
                        writeln!(out, "{}", report.value)?;
                    }
                    Ok(0)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    Ok(poly_exit_code(&e))
                }
            }
        }
        Command::Verify { suite, max_cells, max_n, threads, fault } => {
            let fault = match fault {
                FaultArg::None => Fault::None,
                FaultArg::SkipGToggle => Fault::SkipGToggle,
            };
            let opts = VerifyOptions { suite, max_cells, max_n, threads, fault };
            let results = run_suite(&opts);
            for r in &results {
                writeln!(out, "{}", r.to_json())?;
            }
            eprintln!(
                "{} passed, {} failed, {} skipped",
                tally(&results, Status::Pass),
                tally(&results, Status::Fail),
                tally(&results, Status::Skipped)
            );
            match first_failure(&results) {
                Some(f) => {
                    eprintln!(
                        "first failure: suite {} shape {} n={}: {}",
                        f.suite,
                        f.shape,
                        f.n,
                        f.message.as_deref().unwrap_or("").replace('\n', " | ")
                    );
                    Ok(EXIT_VERIFY_FAILED)
                }
                None => Ok(0),
            }
        }
        Command::Sweep { max_cells, max_n, out: path, threads } => {
            let rows = sweep(max_cells, max_n, threads);
            let written = std::fs::File::create(&path).and_then(|f| write_csv(&rows, BufWriter::new(f)));
            if let Err(e) = written {
                eprintln!("error: cannot write {}: {e}", path.display());
                return Ok(EXIT_USAGE);
            }
            if cli.json {
                writeln!(out, "{}", json!({ "rows": rows.len(), "out": path.display().to_string() }))?;
            }
            Ok(0)
        }
    }
}

fn poly_exit_code(e: &GrothendieckError) -> u8 {
    if e.is_internal() {
        EXIT_INTERNAL
    } else {
        EXIT_USAGE
    }
}
