//! Command-line front end: every verb reads matrices in the plain text
//! format (rows of whitespace-separated entries, `#` comments allowed) and
//! reports either human-readable text or, with `--json`, one structured
//! object. Exit codes: 0 success, 1 domain error (non-viable input, size
//! guards, shape mismatches), 2 usage or format error.

mod emit;
mod gen;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use transmat::matrix::{self, BinaryMatrix, EquivalenceMode};
use transmat::maximal::{self, MaximalityMethod};
use transmat::matroid;
use transmat::oracle;
use transmat::rank2;
use transmat::tropical::{self, TropMatrix};
use transmat::Error;

#[derive(Parser)]
#[command(name = "transmat", version, about = "Transversal matroid matrix toolkit")]
struct Cli {
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Matroid rank of a binary matrix (maximum matching size).
    Rank { file: PathBuf },
    /// Whether the rank equals the column count.
    Viable { file: PathBuf },
    /// The entrywise-greatest matrix presenting the same matroid.
    Maximalize {
        file: PathBuf,
        /// Write the output matrix to a file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Test maximality.
    IsMaximal {
        file: PathBuf,
        /// fixpoint: rerun the maximalization and compare (exact);
        /// conditions: per-column basis counting (necessary certificate).
        #[arg(long, value_enum, default_value_t = MethodArg::Fixpoint)]
        method: MethodArg,
        /// Print per-column diagnostics.
        #[arg(long)]
        report: bool,
    },
    /// Tropical determinant of a square matrix (`-inf` entries allowed).
    TropDet { file: PathBuf },
    /// Tropical rank (largest nonsingular square minor).
    TropRank {
        file: PathBuf,
        /// Cross-check against the brute-force enumeration.
        #[arg(long)]
        oracle: bool,
    },
    /// Rank of a binary matrix via repeated viability tests.
    TrankViaViability { file: PathBuf },
    /// Classify a two-column matrix into its maximal family.
    #[command(name = "classify2")]
    Classify2 { file: PathBuf },
    /// Canonical representatives of all maximal n-by-2 matrices.
    #[command(name = "enum2")]
    Enum2 { n: usize },
    /// Restrict to the columns of one maximum matching (rank-many columns).
    Reduce { file: PathBuf },
    /// Search for a permutation pair mapping one matrix onto another.
    Equivalent {
        file: PathBuf,
        other: PathBuf,
        /// rc: rows and columns; c: columns only.
        #[arg(long, value_enum, default_value_t = ModeArg::Rc)]
        mode: ModeArg,
    },
    /// Seeded random binary matrix.
    Random {
        n: usize,
        r: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Fixpoint,
    Conditions,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Rc,
    C,
}

enum CliError {
    Domain(String),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => CliError::Usage(e.to_string()),
            other => CliError::Domain(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_binary(path: &Path) -> Result<BinaryMatrix, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(text.parse::<BinaryMatrix>()?)
}

fn read_tropical(path: &Path) -> Result<TropMatrix, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(text.parse::<TropMatrix>()?)
}

fn path_json(path: &Path) -> serde_json::Value {
    json!(path.display().to_string())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Rank { file } => {
            let x = read_binary(&file)?;
            let rank = matroid::rank(&x);
            if cli.json {
                println!("{}", emit::envelope("rank", path_json(&file), json!(rank), None));
            } else {
                println!("{rank}");
            }
        }
        Command::Viable { file } => {
            let x = read_binary(&file)?;
            let viable = maximal::is_viable(&x);
            if cli.json {
                println!("{}", emit::envelope("viable", path_json(&file), json!(viable), None));
            } else {
                println!("{viable}");
            }
        }
        Command::Maximalize { file, output } => {
            let x = read_binary(&file)?;
            let (out, report) = maximal::maximalize(&x)?;
            if let Some(dest) = &output {
                fs::write(dest, out.to_string())
                    .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", dest.display())))?;
            }
            if cli.json {
                println!(
                    "{}",
                    emit::envelope(
                        "maximalize",
                        path_json(&file),
                        emit::matrix_json(&out),
                        Some(emit::report_json(&report)),
                    )
                );
            } else if output.is_none() {
                print!("{out}");
            }
        }
        Command::IsMaximal { file, method, report } => {
            let x = read_binary(&file)?;
            let method = match method {
                MethodArg::Fixpoint => MaximalityMethod::Fixpoint,
                MethodArg::Conditions => MaximalityMethod::Conditions,
            };
            let (verdict, rep) = maximal::is_maximal(&x, method)?;
            if cli.json {
                println!(
                    "{}",
                    emit::envelope(
                        "is-maximal",
                        path_json(&file),
                        json!(verdict),
                        Some(emit::report_json(&rep)),
                    )
                );
            } else {
                println!("{verdict}");
                if report {
                    print!("{}", emit::report_text(&rep));
                }
            }
        }
        Command::TropDet { file } => {
            let t = read_tropical(&file)?;
            let det = tropical::trop_det(&t)?;
            if cli.json {
                println!(
                    "{}",
                    emit::envelope("trop-det", path_json(&file), emit::det_json(&det), None)
                );
            } else {
                println!("{} (multiplicity {})", det.value, det.multiplicity);
            }
        }
        Command::TropRank { file, oracle: with_oracle } => {
            let t = read_tropical(&file)?;
            let rank = tropical::trop_rank(&t)?;
            let cross = if with_oracle { Some(oracle::brute_trop_rank(&t)?) } else { None };
            if cli.json {
                let report = cross.map(|o| json!({ "oracle": o, "agree": o == rank }));
                println!(
                    "{}",
                    emit::envelope("trop-rank", path_json(&file), json!(rank), report)
                );
            } else {
                match cross {
                    Some(o) if o == rank => println!("{rank} (oracle agrees)"),
                    Some(o) => println!("{rank} (oracle disagrees: {o})"),
                    None => println!("{rank}"),
                }
            }
        }
        Command::TrankViaViability { file } => {
            let x = read_binary(&file)?;
            let (rank, trace) = tropical::trank_via_viability(&x)?;
            if cli.json {
                println!(
                    "{}",
                    emit::envelope(
                        "trank-via-viability",
                        path_json(&file),
                        json!(rank),
                        Some(emit::trace_json(rank, &trace)),
                    )
                );
            } else {
                let verdicts: Vec<String> =
                    trace.verdicts.iter().map(bool::to_string).collect();
                println!(
                    "{rank} (appended {} rows; viability: {})",
                    trace.appends,
                    verdicts.join(" ")
                );
            }
        }
        Command::Classify2 { file } => {
            let x = read_binary(&file)?;
            let c = rank2::classify(&x)?;
            if cli.json {
                println!(
                    "{}",
                    emit::envelope(
                        "classify2",
                        path_json(&file),
                        emit::classification_json(&c),
                        None,
                    )
                );
            } else {
                println!("family: {}", c.family);
                println!(
                    "counts: both={} first_only={} second_only={} neither={}",
                    c.counts.both, c.counts.first_only, c.counts.second_only, c.counts.neither
                );
                println!("row_perm: {}", emit::perm_json(&c.perm.rows));
                println!("col_perm: {}", emit::perm_json(&c.perm.cols));
            }
        }
        Command::Enum2 { n } => {
            let reps = rank2::enumerate_maximal_rank2(n)?;
            if cli.json {
                let list: Vec<serde_json::Value> = reps.iter().map(emit::matrix_json).collect();
                println!("{}", emit::envelope("enum2", json!(n), json!(list), None));
            } else {
                for (k, rep) in reps.iter().enumerate() {
                    if k > 0 {
                        println!();
                    }
                    print!("{rep}");
                }
            }
        }
        Command::Reduce { file } => {
            let x = read_binary(&file)?;
            let out = matroid::reduce_to_r_presentation(&x);
            if cli.json {
                println!(
                    "{}",
                    emit::envelope("reduce", path_json(&file), emit::matrix_json(&out), None)
                );
            } else {
                print!("{out}");
            }
        }
        Command::Equivalent { file, other, mode } => {
            let x = read_binary(&file)?;
            let y = read_binary(&other)?;
            let mode = match mode {
                ModeArg::Rc => EquivalenceMode::RowsAndColumns,
                ModeArg::C => EquivalenceMode::ColumnsOnly,
            };
            let witness = matrix::equivalent(&x, &y, mode)?;
            if cli.json {
                let result = match &witness {
                    Some(pair) => {
                        let mut obj = emit::perm_pair_json(pair);
                        obj["equivalent"] = json!(true);
                        obj
                    }
                    None => json!({ "equivalent": false }),
                };
                println!(
                    "{}",
                    emit::envelope(
                        "equivalent",
                        json!([file.display().to_string(), other.display().to_string()]),
                        result,
                        None,
                    )
                );
            } else {
                match witness {
                    Some(pair) => {
                        println!("equivalent");
                        println!("row_perm: {}", emit::perm_json(&pair.rows));
                        println!("col_perm: {}", emit::perm_json(&pair.cols));
                    }
                    None => println!("not equivalent"),
                }
            }
        }
        Command::Random { n, r, seed, density } => {
            if !(0.0..=1.0).contains(&density) {
                return Err(CliError::Usage(format!(
                    "density {density} is outside [0, 1]"
                )));
            }
            let x = gen::random_matrix(n, r, seed, density);
            if cli.json {
                let input = json!({ "n": n, "r": r, "seed": seed, "density": density });
                println!("{}", emit::envelope("random", input, emit::matrix_json(&x), None));
            } else {
                print!("{x}");
            }
        }
    }
    Ok(())
}
