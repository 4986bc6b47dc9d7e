//! `wginv`: JSON in, JSON out. Every verb reads matrices in the shared
//! schema (a square matrix is `{"n": …, "entries": [[…]]}` with entries
//! `"re"`/`"im"` canonical rational strings; a pair is `{"a": …, "w": …}`;
//! a bare matrix given where a pair is expected gets the identity weight).
//!
//! Results go to standard output (or `--output`), human notes to standard
//! error. Exit codes: 0 on success with an affirmative result, 1 when the
//! requested object does not exist or a certificate is inconsistent, 2 on
//! any input error.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use wginv::gen::{generate, standard_corpus, CorpusEntry, Family, GenSpec};
use wginv::ginv::{drazin, group_inverse, moore_penrose};
use wginv::matrix::GMat;
use wginv::theorems::{check, run_suite};
use wginv::weighted::{
    core_decomposition, ep_projection, gen_w_ep, w_drazin, w_ep, w_group, w_star_dmp, WPair,
};

#[derive(Parser)]
#[command(
    name = "wginv",
    about = "Exact weighted generalized inverses, certificates, and corpora",
    version
)]
struct Cli {
    /// Write the JSON result to this file instead of standard output.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run all five weighted classifiers on a pair.
    Classify {
        /// Pair (or matrix) JSON file.
        input: PathBuf,
    },
    /// Compute one generalized inverse, reporting nonexistence via exit 1.
    Inverse {
        input: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Split a pair into its weighted EP core plus nilpotent remainder.
    Decompose { input: PathBuf },
    /// Produce the Hermitian projection certificate for a pair.
    Project { input: PathBuf },
    /// Evaluate one registered theorem checker on a pair.
    Check {
        input: PathBuf,
        /// Registered id, e.g. T2.1 or C5.8.
        #[arg(long)]
        theorem: String,
    },
    /// Emit a deterministic corpus as a JSON array.
    Generate {
        #[arg(long)]
        seed: u64,
        /// Instances to emit. Defaults to 1 with --family, else 30.
        #[arg(long)]
        count: Option<usize>,
        /// Restrict to one family instead of cycling all six.
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        /// Dimension for --family generation (the cycling corpus spans 1-5).
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        magnitude: i64,
    },
    /// Run every registered checker over a corpus file.
    Suite { input: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Mp,
    Group,
    Drazin,
    WGroup,
    WDrazin,
    WEp,
    GenWEp,
    WStarDmp,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    DiagonalWEp,
    BlockStarDmp,
    NonEpIdempotent,
    JordanNilpotent,
    UnitaryConjugated,
    RandomDense,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::DiagonalWEp => Family::DiagonalWEp,
            FamilyArg::BlockStarDmp => Family::BlockStarDmp,
            FamilyArg::NonEpIdempotent => Family::NonEpIdempotent,
            FamilyArg::JordanNilpotent => Family::JordanNilpotent,
            FamilyArg::UnitaryConjugated => Family::UnitaryConjugated,
            FamilyArg::RandomDense => Family::RandomDense,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.cmd) {
        Ok((value, affirmative)) => {
            let text = serde_json::to_string_pretty(&value).expect("serializable result");
            match &cli.output {
                Some(path) => {
                    if let Err(e) = fs::write(path, text + "\n") {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => println!("{text}"),
            }
            if affirmative {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_text(path: &PathBuf) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

/// A pair file, or a single matrix which gets the identity weight.
fn read_pair(path: &PathBuf) -> Result<WPair, String> {
    let text = read_text(path)?;
    match serde_json::from_str::<WPair>(&text) {
        Ok(p) => Ok(p),
        Err(pair_err) => match serde_json::from_str::<GMat>(&text) {
            Ok(a) => {
                let n = a.n();
                Ok(WPair::new(a, GMat::identity(n)).expect("same dimension"))
            }
            Err(_) => Err(format!(
                "{}: neither a pair nor a matrix: {pair_err}",
                path.display()
            )),
        },
    }
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

/// Returns the JSON result plus whether the outcome is affirmative
/// (exit 0) as opposed to a nonexistence/inconsistency report (exit 1).
fn run(cmd: &Cmd) -> Result<(Value, bool), String> {
    match cmd {
        Cmd::Classify { input } => {
            let p = read_pair(input)?;
            let reports = [w_group(&p), w_drazin(&p), w_ep(&p), gen_w_ep(&p), w_star_dmp(&p)];
            let holding: Vec<&str> = reports
                .iter()
                .filter(|r| r.exists)
                .map(|r| r.kind.as_str())
                .collect();
            if holding.is_empty() {
                eprintln!("no weighted inverse class holds for this pair");
            } else {
                eprintln!("classes holding: {}", holding.join(", "));
            }
            let mut obj = Map::new();
            for r in &reports {
                obj.insert(r.kind.as_str().to_string(), to_value(r));
            }
            Ok((Value::Object(obj), true))
        }
        Cmd::Inverse { input, kind } => {
            let p = read_pair(input)?;
            let a = p.a();
            let (value, exists) = match kind {
                Kind::Mp => {
                    let x = moore_penrose(a);
                    (json!({ "kind": "mp", "exists": true, "x": to_value(&x) }), true)
                }
                Kind::Drazin => {
                    let dz = drazin(a);
                    (
                        json!({
                            "kind": "drazin",
                            "exists": true,
                            "x": to_value(&dz.d),
                            "index": dz.index,
                        }),
                        true,
                    )
                }
                Kind::Group => match group_inverse(a) {
                    Some(x) => {
                        (json!({ "kind": "group", "exists": true, "x": to_value(&x) }), true)
                    }
                    None => (json!({ "kind": "group", "exists": false }), false),
                },
                Kind::WGroup => report_value(w_group(&p)),
                Kind::WDrazin => report_value(w_drazin(&p)),
                Kind::WEp => report_value(w_ep(&p)),
                Kind::GenWEp => report_value(gen_w_ep(&p)),
                Kind::WStarDmp => report_value(w_star_dmp(&p)),
            };
            if !exists {
                eprintln!("requested inverse does not exist for this input");
            }
            Ok((value, exists))
        }
        Cmd::Decompose { input } => {
            let p = read_pair(input)?;
            match core_decomposition(&p) {
                Some(cd) => Ok((
                    json!({
                        "exists": true,
                        "x": to_value(&cd.x),
                        "y": to_value(&cd.y),
                        "nil_degree": cd.nil_degree,
                    }),
                    true,
                )),
                None => {
                    eprintln!("pair is not in the eventual class; no decomposition");
                    Ok((json!({ "exists": false }), false))
                }
            }
        }
        Cmd::Project { input } => {
            let p = read_pair(input)?;
            match ep_projection(&p) {
                Some(pc) => Ok((
                    json!({
                        "exists": true,
                        "p": to_value(&pc.p),
                        "m": to_value(&pc.m),
                    }),
                    true,
                )),
                None => {
                    eprintln!("pair is not in the eventual class; no projection certificate");
                    Ok((json!({ "exists": false }), false))
                }
            }
        }
        Cmd::Check { input, theorem } => {
            let p = read_pair(input)?;
            let cert = check(theorem, &p).map_err(|e| e.to_string())?;
            eprintln!(
                "{theorem}: {}",
                if cert.consistent { "consistent" } else { "inconsistent" }
            );
            let consistent = cert.consistent;
            Ok((to_value(&cert), consistent))
        }
        Cmd::Generate {
            seed,
            count,
            family,
            n,
            magnitude,
        } => {
            let entries: Vec<CorpusEntry> = match family {
                Some(f) => {
                    let count = count.unwrap_or(1);
                    let mut seeds = *seed;
                    (0..count)
                        .map(|k| {
                            // Decorrelate instances while keeping the whole
                            // corpus a function of the one seed.
                            seeds = seeds.wrapping_mul(0x2545F4914F6CDD1D).wrapping_add(k as u64 + 1);
                            generate(&GenSpec {
                                family: (*f).into(),
                                n: *n,
                                seed: seeds,
                                magnitude: *magnitude,
                            })
                            .map_err(|e| e.to_string())
                        })
                        .collect::<Result<_, _>>()?
                }
                None => standard_corpus(*seed, count.unwrap_or(30)),
            };
            eprintln!("generated {} instance(s)", entries.len());
            Ok((to_value(&entries), true))
        }
        Cmd::Suite { input } => {
            let text = read_text(input)?;
            let pairs: Vec<WPair> = match serde_json::from_str::<Vec<CorpusEntry>>(&text) {
                Ok(entries) => entries.into_iter().map(|e| e.pair).collect(),
                Err(corpus_err) => serde_json::from_str::<Vec<WPair>>(&text).map_err(|_| {
                    format!(
                        "{}: neither a corpus nor a pair array: {corpus_err}",
                        input.display()
                    )
                })?,
            };
            let summary = run_suite(&pairs);
            eprintln!(
                "{} instance(s), {} inconsistency(ies)",
                summary.instances,
                summary.inconsistencies.len()
            );
            let ok = summary.all_consistent();
            Ok((to_value(&summary), ok))
        }
    }
}

fn report_value(report: wginv::weighted::WInverseReport) -> (Value, bool) {
    let exists = report.exists;
    (to_value(&report), exists)
}
