//! Command-line front end, kept in the library so it can be driven from tests.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on invalid
//! input (bad arguments, out-of-range sizes).

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::charmn::{character_table, mn_character, CycleType};
use crate::eigensolve::{brute_force_comparison, verify_recursive_5cycles, CertificationConfig};
use crate::error::Error;
use crate::permgroup::NeighborStrategy;
use crate::quotient::{quotient_eigenvalues_gamma, quotient_matrix_gamma};
use crate::spectra::{
    conjecture_check_with_limit, full_spectrum_with_limit, hypothesis_check, main_theorem_log_bound,
    table1_report, SecondEigenvalue, Table1Shape, DEFAULT_SPECTRUM_MAX_N,
};
use crate::young::Partition;

/// Overrides the default bound on `n` for exact spectra.
pub const MAX_N_ENV: &str = "CAYLEY_SPECTRA_MAX_N";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "cayley-spectra", version, about = "Exact spectra of Cayley graphs on Sym(n) generated by a class of cycles")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Every eigenvalue of Γ(n,k) with its partition and multiplicity.
    Spectrum {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Largest eigenvalue below the valency, with the partitions affording it.
    Lambda2 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Checks that [n-1,1] affords λ₂ for every 3 <= n <= N, 2 <= k <= n-2.
    Conjecture {
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Closed-form eigenvalues of the low-dimensional shapes against the characters.
    Table1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Restrict to one shape, e.g. "n-2,2".
        #[arg(long)]
        shape: Option<Table1Shape>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Quotient of Γ(n,k) by the cosets of a point stabilizer.
    Quotient {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// One character value χ^λ(τ).
    Char {
        /// Partition, e.g. "3,2" or "2,1^3".
        #[arg(long)]
        partition: Partition,
        /// Cycle type, e.g. "5" or "3,1^2".
        #[arg(long = "type")]
        cycle_type: CycleType,
    },
    /// The full character table of Sym(n) as CSV.
    CharTable {
        #[arg(long)]
        n: usize,
    },
    /// Dense diagonalization of Γ(n,k) compared with the character spectrum.
    Bruteforce {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Numerical certification of the recursive 5-cycle bound on Alt(8).
    #[command(name = "verify-recursive-5cycles")]
    VerifyRecursive5cycles {
        #[arg(long, default_value_t = crate::eigensolve::DEFAULT_TOL)]
        tol: f64,
        #[arg(long, default_value_t = crate::eigensolve::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = crate::eigensolve::DEFAULT_MAX_ITER)]
        max_iter: usize,
        /// Compute neighbours on the fly instead of tabulating them.
        #[arg(long)]
        on_the_fly: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Which arithmetic side conditions hold at (n,k).
    Hypothesis {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Internal(_) | Error::NonIntegral(_) | Error::NotSymmetric(_) => EXIT_VERIFICATION_FAILED,
        _ => EXIT_USAGE,
    }
}

fn max_n() -> Result<usize, Error> {
    match std::env::var(MAX_N_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{MAX_N_ENV}={v:?} is not a non-negative integer"))),
        Err(_) => Ok(DEFAULT_SPECTRUM_MAX_N),
    }
}

fn unsupported(format: Format, command: &str) -> Error {
    Error::Parse(format!("{command} does not support --format {format:?}").to_lowercase())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let mut buffer = Vec::new();
    let result = match cli.threads {
        Some(threads) => match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            Ok(pool) => pool.install(|| execute(cli.command, &mut buffer)),
            Err(e) => Err(Error::Parse(format!("--threads: {e}"))),
        },
        None => execute(cli.command, &mut buffer),
    };
    let result = result.and_then(|code| out.write_all(&buffer).map(|_| code).map_err(io));
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Internal(format!("write failed: {e}"))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Error> {
    match command {
        Command::Spectrum { n, k, format } => {
            let spectrum = full_spectrum_with_limit(n, k, max_n()?)?;
            match format {
                Format::Json => writeln!(out, "{}", spectrum.to_json()),
                Format::Csv => write!(out, "{}", spectrum.to_csv()),
                Format::Table => {
                    let rows: Vec<[String; 3]> = spectrum
                        .entries
                        .iter()
                        .map(|e| [e.partition.bracketed(), e.eigenvalue.to_string(), e.multiplicity.to_string()])
                        .collect();
                    writeln!(out, "Γ({n},{k}), valency {}", spectrum.valency)
                        .and_then(|_| write_table(out, &["partition", "eigenvalue", "multiplicity"], &rows))
                }
            }
            .map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Lambda2 { n, k, format } => {
            let spectrum = full_spectrum_with_limit(n, k, max_n()?)?;
            let second = SecondEigenvalue::from_spectrum(&spectrum)?;
            let witnesses: Vec<String> = second.witnesses.iter().map(Partition::bracketed).collect();
            match format {
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({
                        "n": n,
                        "k": k,
                        "valency": spectrum.valency.to_string(),
                        "lambda2": second.value.to_string(),
                        "witnesses": second.witnesses.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    })
                ),
                Format::Table => writeln!(out, "{}  witnesses: {}", second.value, witnesses.join(" ")),
                Format::Csv => return Err(unsupported(format, "lambda2")),
            }
            .map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Conjecture { n_max, format } => {
            let report = conjecture_check_with_limit(n_max, max_n()?)?;
            match format {
                Format::Json => {
                    let rows: Vec<_> = report
                        .rows
                        .iter()
                        .map(|r| {
                            json!({
                                "n": r.n,
                                "k": r.k,
                                "lambda2": r.lambda2.to_string(),
                                "predicted": r.predicted.to_string(),
                                "witnesses": r.witnesses.iter().map(ToString::to_string).collect::<Vec<_>>(),
                                "pass": r.pass,
                            })
                        })
                        .collect();
                    writeln!(out, "{}", json!({ "all_pass": report.all_pass(), "rows": rows }))
                }
                Format::Table | Format::Csv => {
                    let rows: Vec<[String; 5]> = report
                        .rows
                        .iter()
                        .map(|r| {
                            let w: Vec<String> = r.witnesses.iter().map(Partition::bracketed).collect();
                            [
                                format!("{},{}", r.n, r.k),
                                r.lambda2.to_string(),
                                r.predicted.to_string(),
                                w.join(" "),
                                if r.pass { "ok" } else { "FAIL" }.to_string(),
                            ]
                        })
                        .collect();
                    let header = ["n,k", "lambda2", "[n-1,1]", "witnesses", "status"];
                    if format == Format::Csv {
                        write_csv(out, &header, &rows)
                    } else {
                        write_table(out, &header, &rows)
                    }
                }
            }
            .map_err(io)?;
            Ok(if report.all_pass() { EXIT_OK } else { EXIT_VERIFICATION_FAILED })
        }
        Command::Table1 { n, k, shape, format } => {
            let rows: Vec<_> = table1_report(n, k)?
                .into_iter()
                .filter(|r| shape.is_none_or(|s| s == r.shape))
                .collect();
            if let Some(s) = shape {
                if rows.is_empty() {
                    return Err(Error::OutOfRange(format!("shape [{}] is not defined at n={n}, k={k}", s.identifier())));
                }
            }
            let ok = rows.iter().all(|r| !r.asserted || r.agrees());
            match format {
                Format::Json => {
                    let items: Vec<_> = rows
                        .iter()
                        .map(|r| {
                            json!({
                                "shape": r.shape.identifier(),
                                "partition": r.partition.to_string(),
                                "closed_form": r.closed_form.to_string(),
                                "character_value": r.character_value.to_string(),
                                "agrees": r.agrees(),
                                "asserted": r.asserted,
                            })
                        })
                        .collect();
                    writeln!(out, "{}", json!({ "n": n, "k": k, "all_pass": ok, "rows": items }))
                }
                Format::Table | Format::Csv => {
                    let table: Vec<[String; 5]> = rows
                        .iter()
                        .map(|r| {
                            let status = match (r.agrees(), r.asserted) {
                                (true, _) => "ok",
                                (false, true) => "FAIL",
                                (false, false) => "differs",
                            };
                            [
                                format!("[{}]", r.shape.identifier()),
                                r.partition.bracketed(),
                                r.closed_form.to_string(),
                                r.character_value.to_string(),
                                status.to_string(),
                            ]
                        })
                        .collect();
                    let header = ["shape", "partition", "closed form", "character", "status"];
                    if format == Format::Csv {
                        write_csv(out, &header, &table)
                    } else {
                        write_table(out, &header, &table)
                    }
                }
            }
            .map_err(io)?;
            Ok(if ok { EXIT_OK } else { EXIT_VERIFICATION_FAILED })
        }
        Command::Quotient { n, k, format } => {
            let matrix = quotient_matrix_gamma(n, k)?;
            let eig = quotient_eigenvalues_gamma(n, k)?;
            match format {
                Format::Csv => write!(out, "{}", matrix.to_csv()),
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({
                        "n": n,
                        "k": k,
                        "provenance": matrix.provenance,
                        "matrix": matrix.entries.iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
                        "principal": eig.principal.to_string(),
                        "secondary": eig.secondary.to_string(),
                        "secondary_multiplicity": eig.secondary_multiplicity,
                    })
                ),
                Format::Table => {
                    write!(out, "{}\n{}", matrix.provenance, matrix.to_csv()).and_then(|_| {
                        writeln!(
                            out,
                            "eigenvalues: {} (x1), {} (x{})",
                            eig.principal, eig.secondary, eig.secondary_multiplicity
                        )
                    })
                }
            }
            .map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Char { partition, cycle_type } => {
            writeln!(out, "{}", mn_character(&partition, &cycle_type)?).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::CharTable { n } => {
            write!(out, "{}", character_table(n)?.to_csv()).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Bruteforce { n, k, format } => {
            let cmp = brute_force_comparison(n, k)?;
            let values: std::collections::BTreeSet<i64> = cmp.dense.keys().chain(cmp.character.keys()).copied().collect();
            let count = |m: &std::collections::BTreeMap<i64, u64>, v: i64| m.get(&v).copied().unwrap_or(0);
            match format {
                Format::Json => {
                    let rows: Vec<_> = values
                        .iter()
                        .rev()
                        .map(|&v| json!({ "eigenvalue": v, "dense": count(&cmp.dense, v), "character": count(&cmp.character, v) }))
                        .collect();
                    writeln!(out, "{}", json!({ "n": n, "k": k, "agree": cmp.agree(), "eigenvalues": rows }))
                }
                Format::Table | Format::Csv => {
                    let rows: Vec<[String; 3]> = values
                        .iter()
                        .rev()
                        .map(|&v| [v.to_string(), count(&cmp.dense, v).to_string(), count(&cmp.character, v).to_string()])
                        .collect();
                    let header = ["eigenvalue", "dense", "character"];
                    if format == Format::Csv {
                        write_csv(out, &header, &rows)
                    } else {
                        write_table(out, &header, &rows).and_then(|_| {
                            writeln!(out, "{}", if cmp.agree() { "spectra agree" } else { "SPECTRA DIFFER" })
                        })
                    }
                }
            }
            .map_err(io)?;
            Ok(if cmp.agree() { EXIT_OK } else { EXIT_VERIFICATION_FAILED })
        }
        Command::VerifyRecursive5cycles {
            tol,
            seed,
            max_iter,
            on_the_fly,
            format,
        } => {
            if !(tol > 0.0 && tol < 1.0) {
                return Err(Error::OutOfRange(format!("--tol must lie in (0,1), got {tol}")));
            }
            let config = CertificationConfig {
                tol,
                seed,
                max_iter,
                strategy: if on_the_fly { NeighborStrategy::OnTheFly } else { NeighborStrategy::Auto },
            };
            let report = verify_recursive_5cycles(&config)?;
            match format {
                Format::Json => writeln!(out, "{}", report.to_json()),
                Format::Table | Format::Csv => {
                    let show = |v: Option<i64>, x: f64| v.map_or(format!("{x:.9}"), |v| v.to_string());
                    let rows: Vec<[String; 6]> = report
                        .records
                        .iter()
                        .map(|r| {
                            let worst = r.residuals.iter().copied().fold(0.0, f64::max);
                            [
                                r.k.to_string(),
                                r.valency.to_string(),
                                show(r.lambda2_exact, r.lambda2_numeric),
                                r.rhs_exact.to_string(),
                                format!("{worst:.1e}"),
                                if r.pass { "ok" } else { "FAIL" }.to_string(),
                            ]
                        })
                        .collect();
                    let header = ["k", "|T_k|", "lambda2", "bound", "residual", "status"];
                    if format == Format::Csv {
                        write_csv(out, &header, &rows)
                    } else {
                        write_table(out, &header, &rows).and_then(|_| match &report.certified_formula {
                            Some(f) => writeln!(out, "certified: {f}"),
                            None => writeln!(out, "not certified (stopped at k={})", report.aborted_at.unwrap_or(0)),
                        })
                    }
                }
            }
            .map_err(io)?;
            Ok(if report.all_pass { EXIT_OK } else { EXIT_VERIFICATION_FAILED })
        }
        Command::Hypothesis { n, k, format } => {
            if n < 2 || k > n - 2 {
                return Err(Error::OutOfRange(format!("need 0 <= k <= n-2, got n={n}, k={k}")));
            }
            let flags = hypothesis_check(n, k);
            match format {
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({ "n": n, "k": k, "flags": flags, "log_bound": main_theorem_log_bound(n, k) })
                ),
                Format::Table | Format::Csv => writeln!(
                    out,
                    "in_main_theorem_range  {}\nunique_rimhook_range   {}\nsqrtkfact_bound_holds  {}",
                    flags.in_main_theorem_range, flags.unique_rimhook_range, flags.sqrtkfact_bound_holds
                ),
            }
            .map_err(io)?;
            Ok(EXIT_OK)
        }
    }
}

fn write_table<const N: usize>(out: &mut dyn Write, header: &[&str; N], rows: &[[String; N]]) -> std::io::Result<()> {
    let mut widths = header.map(|h| h.chars().count());
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    writeln!(out, "{}", line(header.to_vec()))?;
    for row in rows {
        writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
    }
    Ok(())
}

fn write_csv<const N: usize>(out: &mut dyn Write, header: &[&str; N], rows: &[[String; N]]) -> std::io::Result<()> {
    let quote = |c: &str| {
        if c.contains([',', '"']) {
            format!("\"{}\"", c.replace('"', "\"\""))
        } else {
            c.to_string()
        }
    };
    writeln!(out, "{}", header.iter().map(|h| quote(h)).collect::<Vec<_>>().join(","))?;
    for row in rows {
        writeln!(out, "{}", row.iter().map(|c| quote(c)).collect::<Vec<_>>().join(","))?;
    }
    Ok(())
}
