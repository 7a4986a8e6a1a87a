//! Command-line front end: Jones polynomials, Khovanov rank tables, Betti
//! lines, Gaussian fits, data-table reproduction, signatures, and the
//! verification suites.
//!
//! Exit codes: 0 success, 2 usage error, 3 computation contract violation
//! (e.g. a non-exact division signalling invalid input), 4 verification
//! failure.

mod output;
mod table;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use weavekh::diagram::signature_report;
use weavekh::gaussfit::{analyze_line, density, fit_to_json};
use weavekh::jones::jones_w3;
use weavekh::khovanov::table_for;

use output::{sig6, with_meta, CliError, META_COMMENT};

#[derive(Parser)]
#[command(
    name = "weavekh",
    version,
    about = "Exact Jones polynomials, Khovanov rank tables, and Gaussian-fit statistics of weaving knots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Omit the metadata header from csv/json output (for byte-exact golden
    /// comparisons).
    #[arg(long, global = true)]
    no_meta: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Jones polynomial of W(3,n).
    Jones {
        #[arg(short)]
        n: u32,
    },
    /// Khovanov polynomial Kh(t,Q) and bigraded ranks of W(3,n).
    Kh {
        #[arg(short)]
        n: u32,
    },
    /// Betti numbers of W(3,n) along the line j = 2i+1.
    Betti {
        #[arg(short)]
        n: u32,
    },
    /// Gaussian fit of the normalized Betti line of W(3,n).
    Fit {
        #[arg(short)]
        n: u32,
        /// Write a density-curve CSV (x, rho(x), data-if-integer) to FILE.
        #[arg(long, value_name = "FILE")]
        emit_density: Option<PathBuf>,
    },
    /// Reproduce the data tables over one residue class mod 3.
    Table {
        /// Residue class of n mod 3 (1 or 2).
        #[arg(long)]
        residue: u32,
        #[arg(long)]
        start: u32,
        #[arg(long)]
        end: u32,
        /// Write CSV to FILE instead of stdout.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Worker threads for row computation (0 = auto). The env var
        /// WEAVEKH_THREADS overrides this flag.
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Signature of the weaving link W(p,q), by A-smoothing and by closed
    /// form.
    Signature {
        #[arg(short)]
        p: u32,
        #[arg(short)]
        q: u32,
        /// Exit nonzero if the diagram route disagrees with the closed form.
        #[arg(long)]
        check_diagram: bool,
    },
    /// Run the oracle and consistency suites.
    Verify {
        /// Largest n for the per-n suites (oracle-backed checks cap
        /// internally at their enumeration limits).
        #[arg(long, default_value_t = 8)]
        n_max: u32,
        /// Deliberately corrupt one check to exercise the failure path.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Jones { n } => cmd_jones(cli, *n),
        Command::Kh { n } => cmd_kh(cli, *n),
        Command::Betti { n } => cmd_betti(cli, *n),
        Command::Fit { n, emit_density } => cmd_fit(cli, *n, emit_density.as_deref()),
        Command::Table {
            residue,
            start,
            end,
            out,
            threads,
        } => cmd_table(cli, *residue, *start, *end, out.as_deref(), *threads),
        Command::Signature {
            p,
            q,
            check_diagram,
        } => cmd_signature(cli, *p, *q, *check_diagram),
        Command::Verify {
            n_max,
            inject_fault,
        } => verify::cmd_verify(cli.format == Format::Json, cli.no_meta, *n_max, *inject_fault),
    }
}

fn require(cond: bool, msg: &str) -> Result<(), CliError> {
    if cond {
        Ok(())
    } else {
        Err(CliError::Usage(msg.to_string()))
    }
}

fn warn_if_link(n: u32) {
    if n.is_multiple_of(3) {
        eprintln!("warning: 3 | n: closure is a 3-component link; knot-only invariants do not apply");
    }
}

fn cmd_jones(cli: &Cli, n: u32) -> Result<(), CliError> {
    require(n >= 1, "n must be >= 1")?;
    warn_if_link(n);
    let result = jones_w3(n);
    match cli.format {
        Format::Text => println!("{}", result.v),
        Format::Json => println!(
            "{}",
            with_meta(result.to_json(), cli.no_meta)
        ),
        Format::Csv => {
            let mut lines = Vec::new();
            if !cli.no_meta {
                lines.push(META_COMMENT.to_string());
            }
            lines.push("exp,coeff".to_string());
            for (e, c) in result.v.terms() {
                lines.push(format!("{e},{c}"));
            }
            println!("{}", lines.join("\n"));
        }
    }
    Ok(())
}

fn knot_table(n: u32) -> Result<(weavekh::jones::JonesResult, weavekh::khovanov::KhovanovTable), CliError> {
    let jones = jones_w3(n);
    let table = table_for(&jones)?;
    table.check_support()?;
    table.check_euler(&jones.v)?;
    Ok((jones, table))
}

fn cmd_kh(cli: &Cli, n: u32) -> Result<(), CliError> {
    require(n >= 1, "n must be >= 1")?;
    let (_, table) = knot_table(n)?;
    match cli.format {
        Format::Text => println!("{}", table.kh()),
        Format::Json => println!("{}", with_meta(table.to_json(), cli.no_meta)),
        Format::Csv => {
            let mut lines = Vec::new();
            if !cli.no_meta {
                lines.push(META_COMMENT.to_string());
            }
            lines.push("i,j,rank".to_string());
            lines.extend(table.to_csv_rows());
            println!("{}", lines.join("\n"));
        }
    }
    Ok(())
}

fn cmd_betti(cli: &Cli, n: u32) -> Result<(), CliError> {
    require(n >= 1, "n must be >= 1")?;
    let (_, table) = knot_table(n)?;
    match cli.format {
        Format::Text => {
            for (i, r) in table.betti_line() {
                println!("{i} {r}");
            }
        }
        Format::Json => println!("{}", with_meta(table.to_json(), cli.no_meta)),
        Format::Csv => {
            let mut lines = Vec::new();
            if !cli.no_meta {
                lines.push(META_COMMENT.to_string());
            }
            lines.push("i,j,rank".to_string());
            for (i, r) in table.betti_line() {
                lines.push(format!("{},{},{}", i, 2 * i + 1, r));
            }
            println!("{}", lines.join("\n"));
        }
    }
    Ok(())
}

fn cmd_fit(cli: &Cli, n: u32, emit_density: Option<&std::path::Path>) -> Result<(), CliError> {
    require(n >= 1, "n must be >= 1")?;
    let (_, table) = knot_table(n)?;
    let (nb, fit) = analyze_line(n, table.betti_line())?;

    if let Some(path) = emit_density {
        let mut f = std::fs::File::create(path)?;
        if !cli.no_meta {
            writeln!(f, "{META_COMMENT}")?;
        }
        writeln!(f, "x,rho,data")?;
        let lo = -2 * n as i64;
        let hi = 2 * n as i64 + 1;
        let data: std::collections::BTreeMap<i64, f64> = nb.points.iter().cloned().collect();
        for k in (4 * lo)..=(4 * hi) {
            let x = k as f64 / 4.0;
            let rho = density(&fit, x);
            if k % 4 == 0 {
                match data.get(&(k / 4)) {
                    Some(d) => writeln!(f, "{x},{rho:e},{d:e}")?,
                    None => writeln!(f, "{x},{rho:e},0")?,
                }
            } else {
                writeln!(f, "{x},{rho:e},")?;
            }
        }
    }

    match cli.format {
        Format::Text => {
            println!("n      = {n}");
            println!("total  = {}", nb.total);
            println!("points = {}", nb.points.len());
            println!("alpha  = {}", fit.alpha);
            println!("beta   = {}", fit.beta);
            println!("delta  = {}", fit.delta);
            println!("mu     = {}", fit.mu);
            println!("sigma  = {}", fit.sigma);
            println!("A_n    = {}", fit.a_n);
            println!("L2     = {}", sig6(fit.l2));
            println!("L1     = {}", sig6(fit.l1));
        }
        Format::Json => println!("{}", with_meta(fit_to_json(&fit, &nb.total), cli.no_meta)),
        Format::Csv => {
            let mut lines = Vec::new();
            if !cli.no_meta {
                lines.push(META_COMMENT.to_string());
            }
            lines.push(table::CSV_HEADER.to_string());
            lines.push(table::csv_row(&table::TableRow {
                n,
                total: table.total_rank_line(),
                h01: table.h01_paired(),
                sigma: fit.sigma,
                l2: fit.l2,
                l1: fit.l1,
            }));
            println!("{}", lines.join("\n"));
        }
    }
    Ok(())
}

fn cmd_table(
    cli: &Cli,
    residue: u32,
    start: u32,
    end: u32,
    out: Option<&std::path::Path>,
    threads: usize,
) -> Result<(), CliError> {
    require(residue == 1 || residue == 2, "residue must be 1 or 2")?;
    require(
        start % 3 == residue,
        "start must be congruent to the residue mod 3",
    )?;
    // start > end selects nothing and yields a header-only table
    let threads = match std::env::var("WEAVEKH_THREADS") {
        Ok(v) => v
            .parse::<usize>()
            .map_err(|_| CliError::Usage(format!("WEAVEKH_THREADS={v} is not a thread count")))?,
        Err(_) => threads,
    };
    let rows = table::compute_table(residue, start, end, threads)?;

    let text = match cli.format {
        Format::Json => {
            let v = json!({
                "residue": residue,
                "rows": rows.iter().map(table::json_row).collect::<Vec<_>>(),
            });
            with_meta(v, cli.no_meta).to_string()
        }
        Format::Text | Format::Csv => {
            let mut lines = Vec::new();
            if !cli.no_meta {
                lines.push(format!(
                    "{META_COMMENT} table residue={residue} start={start} end={end} fit=ols-log-nonzero-support h01=knight-paired"
                ));
            }
            lines.push(table::CSV_HEADER.to_string());
            lines.extend(rows.iter().map(table::csv_row));
            lines.join("\n")
        }
    };
    match out {
        Some(path) => {
            std::fs::write(path, text + "\n")?;
        }
        None => println!("{text}"),
    }
    Ok(())
}

fn cmd_signature(cli: &Cli, p: u32, q: u32, check_diagram: bool) -> Result<(), CliError> {
    require(p >= 2, "p must be >= 2")?;
    require(q >= 1, "q must be >= 1")?;
    let report = signature_report(p, q);
    let agree = report["agree"].as_bool().unwrap_or(false);
    match cli.format {
        Format::Text => {
            println!(
                "sigma(W({p},{q})) = {} (diagram route {}, closed form {}, {})",
                report["closed_form"],
                report["signature"],
                report["closed_form"],
                if agree { "agree" } else { "DISAGREE" }
            );
        }
        Format::Json => println!("{}", with_meta(report.clone(), cli.no_meta)),
        Format::Csv => {
            let mut lines = Vec::new();
            if !cli.no_meta {
                lines.push(META_COMMENT.to_string());
            }
            lines.push("p,q,c,x,y,o,signature,closed_form,agree".to_string());
            lines.push(format!(
                "{p},{q},{},{},{},{},{},{},{}",
                report["c"],
                report["x"],
                report["y"],
                report["o"],
                report["signature"],
                report["closed_form"],
                agree
            ));
            println!("{}", lines.join("\n"));
        }
    }
    if check_diagram && !agree {
        return Err(CliError::VerifyFailed(format!(
            "diagram signature {} != closed form {} for W({p},{q})",
            report["signature"], report["closed_form"]
        )));
    }
    Ok(())
}
