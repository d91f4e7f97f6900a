use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hamming_vc::constructions::{construct, ConstructionSpec};
use hamming_vc::detect::{detect, witness_from_config, ConfigKind};
use hamming_vc::hamming::{parse_point_set, write_point_set, HammingParams, PointSet};
use hamming_vc::shatter::{vc_dimension, DEFAULT_MAX_K, MAX_SHATTER_SIZE};
use hamming_vc::verify::{
    default_suite, exit_code, run_suite, suite_for, suite_report, threshold_search, threshold_search_unpruned,
    Budget, ClaimId, RequestedMode, DEFAULT_SAMPLES, DEFAULT_WORK_CAP,
};
use hamming_vc::Error;
use serde_json::{json, Value};

mod render;

#[derive(Parser)]
#[command(name = "hamming-vc", version, about = "Neighborhood VC-dimension of subsets of Hamming graphs H(d,q,t)")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Print enumeration checkpoints to stderr
    #[arg(long, global = true)]
    progress: bool,
    /// Worker threads; defaults to one per core
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Exact VC-dimension of a point set, with a shatter witness
    Compute {
        #[command(flatten)]
        input: Input,
        /// Largest shattered-set size to search for
        #[arg(long, default_value_t = DEFAULT_MAX_K as u8, value_parser = clap::value_parser!(u8).range(0..=MAX_SHATTER_SIZE as i64))]
        max_k: u8,
    },
    /// Generate one of the extremal constructions
    Construct {
        #[arg(value_parser = ["u1", "u2", "u3", "diag", "band3", "ustar"])]
        name: String,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        d: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Look for a configuration; exit 0 on a hit, 1 when there is none
    Detect {
        #[arg(value_enum)]
        kind: Kind,
        #[command(flatten)]
        input: Input,
        /// Convert the hit into a shatter witness and validate it
        #[arg(long)]
        emit_witness: bool,
    },
    /// Check claims by enumeration, sampling or construction
    Verify {
        /// Claim ids (P1.1, T1.2, T1.3, C1.4, P1.5, P1.6, P1.8, T1.8t2, L3.1, L4.1) or `all`
        #[arg(required = true)]
        claims: Vec<String>,
        #[arg(long, value_delimiter = ',', default_value = "3,4")]
        q: Vec<u32>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
        mode: ModeArg,
        #[arg(long, required_if_eq("mode", "sampled"))]
        seed: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: u64,
        /// Most subsets an exhaustive check may enumerate
        #[arg(long, default_value_t = DEFAULT_WORK_CAP)]
        cap: u64,
        /// Also write the consolidated JSON report here
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exact size threshold for vc >= k, with a largest set below it
    Threshold {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        q: u32,
        #[arg(long, default_value_t = 1)]
        t: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_WORK_CAP)]
        cap: u64,
        /// Examine every subset instead of pruning
        #[arg(long)]
        unpruned: bool,
        /// Write the certificate set as a point file
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Point-set file
    #[arg(short, long)]
    input: Option<PathBuf>,
    /// Inline construction, `name:q` or `name:d:q`
    #[arg(long)]
    construct: Option<String>,
}

impl Input {
    fn load(&self) -> Result<PointSet, String> {
        match (&self.input, &self.construct) {
            (Some(path), _) => {
                let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
                parse_point_set(&text).map_err(|e| format!("{}: {e}", path.display()))
            }
            (_, Some(spec)) => {
                let spec: ConstructionSpec = spec.parse().map_err(|e: Error| e.to_string())?;
                construct(&spec).map_err(|e| e.to_string())
            }
            _ => unreachable!("clap requires one input"),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    LineTriple,
    Corner,
    Fist,
    Rectangle,
    Pluck,
    FourOnALine,
}

impl From<Kind> for ConfigKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::LineTriple => ConfigKind::LineTriple,
            Kind::Corner => ConfigKind::Corner,
            Kind::Fist => ConfigKind::Fist,
            Kind::Rectangle => ConfigKind::Rectangle,
            Kind::Pluck => ConfigKind::Pluck,
            Kind::FourOnALine => ConfigKind::FourOnALine,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Auto,
    Exhaustive,
    Sampled,
}

fn emit(format: Format, text: String, value: &Value) {
    match format {
        Format::Text => print!("{text}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("serializable")),
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), String> {
    fs::write(path, contents).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(cli: Cli) -> Result<u8, String> {
    let format = cli.format;
    match cli.command {
        Command::Compute { input, max_k } => {
            let u = input.load()?;
            let max_k = max_k as usize;
            let result = vc_dimension(&u, Some(max_k));
            let value = json!({
                "params": u.params(),
                "size": u.len(),
                "dimension": result.dimension,
                "witness": result.witness,
                "refuted_at": result.refuted_at,
            });
            emit(format, render::compute(&u, &result, max_k), &value);
            Ok(0)
        }
        Command::Construct { name, q, d, output } => {
            let spec = ConstructionSpec::from_name(&name, d, q).map_err(|e| e.to_string())?;
            let u = construct(&spec).map_err(|e| e.to_string())?;
            let header = [
                format!("construction: {spec}"),
                format!("ambient: {}", u.params()),
                format!("size: {}", u.len()),
            ];
            let rendered = match format {
                Format::Text => write_point_set(&u, &header),
                Format::Json => {
                    let value = json!({
                        "construction": spec.to_string(),
                        "params": u.params(),
                        "size": u.len(),
                        "points": u.to_vec(),
                    });
                    serde_json::to_string_pretty(&value).expect("serializable") + "\n"
                }
            };
            match output {
                Some(path) => write_file(&path, &rendered)?,
                None => print!("{rendered}"),
            }
            Ok(0)
        }
        Command::Detect { kind, input, emit_witness } => {
            let u = input.load()?;
            let kind = ConfigKind::from(kind);
            let found = detect(kind, &u).map_err(|e| e.to_string())?;
            let witness = match (&found, emit_witness) {
                (Some(c), true) => Some(witness_from_config(c, &u)),
                _ => None,
            };
            let mut value = json!({
                "kind": kind,
                "params": u.params(),
                "size": u.len(),
                "found": found.is_some(),
                "configuration": found,
            });
            match &witness {
                Some(Ok(w)) => {
                    value["witness"] = json!(w);
                    value["witness_valid"] = json!(true);
                }
                Some(Err(e)) => value["witness_error"] = json!(e.to_string()),
                None => {}
            }
            emit(format, render::detect(kind, &u, found.as_ref(), witness.as_ref()), &value);
            Ok(if found.is_some() { 0 } else { 1 })
        }
        Command::Verify {
            claims,
            q,
            d,
            mode,
            seed,
            samples,
            cap,
            output,
        } => {
            let (items, notes) = if claims.len() == 1 && claims[0].eq_ignore_ascii_case("all") {
                if d.is_some() {
                    return Err("--d cannot be combined with `all`".into());
                }
                default_suite(&q)
            } else {
                let ids = claims
                    .iter()
                    .map(|c| c.parse::<ClaimId>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| e.to_string())?;
                suite_for(&ids, d, &q)
            };
            if items.is_empty() {
                return Err(notes.join("\n"));
            }
            let progress: Option<hamming_vc::verify::Progress> = cli.progress.then(|| {
                Arc::new(|done: u64, total: u64| eprintln!("progress: {done}/{total}")) as hamming_vc::verify::Progress
            });
            let budget = Budget {
                cap,
                samples,
                seed: seed.unwrap_or(0),
                mode: match mode {
                    ModeArg::Auto => RequestedMode::Auto,
                    ModeArg::Exhaustive => RequestedMode::Exhaustive,
                    ModeArg::Sampled => RequestedMode::Sampled,
                },
                progress,
            };
            let reports = run_suite(&items, &budget).map_err(|e| e.to_string())?;
            let value = serde_json::to_value(suite_report(&reports, &notes)).expect("serializable");
            if let Some(path) = output {
                write_file(&path, &(serde_json::to_string_pretty(&value).expect("serializable") + "\n"))?;
            }
            emit(format, render::verify(&reports, &notes), &value);
            Ok(exit_code(&reports) as u8)
        }
        Command::Threshold {
            d,
            q,
            t,
            k,
            cap,
            unpruned,
            output,
        } => {
            let params = HammingParams::new(d, q, t).map_err(|e| e.to_string())?;
            let search = if unpruned { threshold_search_unpruned } else { threshold_search };
            let result = match search(params, k, cap) {
                Ok(r) => r,
                Err(e @ Error::WorkCap { .. }) => return Err(format!("infeasible: {e}")),
                Err(e) => return Err(e.to_string()),
            };
            let vc = vc_dimension(&result.certificate, Some(MAX_SHATTER_SIZE));
            if let Some(path) = output {
                let header = [
                    format!("largest subset of {params} with vc < {k}"),
                    format!("size: {}", result.certificate.len()),
                ];
                write_file(&path, &write_point_set(&result.certificate, &header))?;
            }
            let value = json!({
                "params": params,
                "k": k,
                "m_star": result.m_star,
                "certificate": {
                    "size": result.certificate.len(),
                    "points": result.certificate.to_vec(),
                    "vc": vc,
                },
                "work": result.work,
            });
            emit(format, render::threshold(&result, &vc), &value);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            log::warn!("could not size the thread pool: {e}");
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
