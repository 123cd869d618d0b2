//! Command-line front end.
//!
//! Exit codes: 0 on success (and log-concave / all checks passing),
//! 1 when a property violation is found, 2 on usage or input errors.

use std::collections::BTreeMap;
use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;

use wdist::analysis::{self, VerdictMethod, VerdictStatus};
use wdist::code::{GeneratorMatrix, LinearCode, WeightDistribution, DEFAULT_BRUTE_BUDGET};
use wdist::doc::{DistributionDocument, ReportDocument};
use wdist::families::{Family, FamilySpec};
use wdist::macwilliams::macwilliams;
use wdist::tutte::{self, DEFAULT_TUTTE_BUDGET};
use wdist::verify;

#[derive(Parser)]
#[command(name = "wdist", about = "Exact weight distributions of linear codes and their log-concavity")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct FamilyParams {
    /// Family name: full_space, even, simplex, rm1, golay23, golay24,
    /// hamming2, ext_hamming2, hamming_q, rm2, hrm2, prm2, mds
    family: String,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    q: Option<u64>,
}

impl FamilyParams {
    fn to_spec(&self) -> Result<FamilySpec, String> {
        let family = Family::parse(&self.family).map_err(|e| e.to_string())?;
        let mut params = BTreeMap::new();
        for (name, value) in [("n", self.n), ("k", self.k), ("m", self.m), ("q", self.q)] {
            if let Some(v) = value {
                params.insert(name.to_string(), v);
            }
        }
        Ok(FamilySpec::new(family, params))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form weight distribution of a code family
    Family {
        #[command(flatten)]
        family: FamilyParams,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Drop zero counts from the output
        #[arg(long)]
        nonzero: bool,
        /// CSV with an extra log10(count) column for plotting
        #[arg(long)]
        plot_csv: bool,
    },
    /// Log-concavity and unimodality report for a distribution
    Check {
        #[command(flatten)]
        input: DistInput,
    },
    /// MacWilliams transform of a distribution
    Dual {
        #[command(flatten)]
        input: DistInput,
    },
    /// Brute-force weight distribution from a generator matrix file
    Brute {
        matrix: String,
        #[arg(long, default_value_t = DEFAULT_BRUTE_BUDGET)]
        budget: u64,
    },
    /// Weight distribution through the Tutte polynomial of the column matroid
    Tutte {
        matrix: String,
        #[arg(long, default_value_t = DEFAULT_TUTTE_BUDGET)]
        budget: u64,
    },
    /// Generator matrix of a family, in the matrix text format
    Gen {
        #[command(flatten)]
        family: FamilyParams,
    },
    /// Log-concavity threshold quadratic for the MDS family
    MdsThreshold {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Log-concavity verdict for an MDS distribution
    MdsVerdict {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        q: u64,
    },
    /// Run a verification sweep: hamming, ext_hamming, rm2, hrm_prm, mds,
    /// hamming_q, tutte, or all
    Verify { suite: String },
}

/// Either a closed-form family or a distribution document on disk.
#[derive(Args)]
struct DistInput {
    /// Family name (with --n/--k/--m/--q), mutually exclusive with --input
    family: Option<String>,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    q: Option<u64>,
    /// JSON distribution document path
    #[arg(long, conflicts_with = "family")]
    input: Option<String>,
}

impl DistInput {
    fn load(&self) -> Result<(String, WeightDistribution), String> {
        if let Some(path) = &self.input {
            let text = fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
            let doc: DistributionDocument =
                serde_json::from_str(&text).map_err(|e| format!("{path}: {e}"))?;
            return Ok((path.clone(), doc.to_distribution()?));
        }
        let Some(family) = &self.family else {
            return Err("either a family name or --input is required".into());
        };
        let params = FamilyParams {
            family: family.clone(),
            n: self.n,
            k: self.k,
            m: self.m,
            q: self.q,
        };
        let spec = params.to_spec()?;
        let wd = spec.weight_distribution().map_err(|e| e.to_string())?;
        let mut subject = family.clone();
        for (k, v) in &spec.params {
            subject.push_str(&format!(" {k}={v}"));
        }
        Ok((subject, wd))
    }
}

fn print_distribution(wd: &WeightDistribution, format: Format, nonzero: bool, plot: bool) {
    match format {
        Format::Json => {
            let mut doc = DistributionDocument::from_distribution(wd);
            if nonzero {
                // keep indices aligned by emitting weight:count pairs instead
                let nz = analysis::nonzero(wd);
                let pairs: Vec<serde_json::Value> = nz
                    .weights
                    .iter()
                    .zip(&nz.counts)
                    .map(|(w, c)| serde_json::json!({"weight": w, "count": c.to_string()}))
                    .collect();
                let out = serde_json::json!({
                    "q": doc.q, "n": doc.n, "k": doc.k, "nonzero": pairs
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
                return;
            }
            doc.counts = wd.counts.iter().map(|c| c.to_string()).collect();
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Csv => {
            if plot {
                println!("weight,count,log10_count");
            } else {
                println!("weight,count");
            }
            for (w, c) in wd.counts.iter().enumerate() {
                if nonzero && c.is_zero() {
                    continue;
                }
                if plot {
                    let log10 = if c.is_zero() {
                        f64::NEG_INFINITY
                    } else {
                        // presentation only; decisions never touch floats
                        let s = c.to_string();
                        let digits = s.trim_start_matches('-').len();
                        let head: f64 = s[..s.len().min(15)].parse().unwrap_or(0.0);
                        head.abs().log10() + (digits.saturating_sub(15)) as f64
                    };
                    println!("{w},{c},{log10:.6}");
                } else {
                    println!("{w},{c}");
                }
            }
        }
    }
}

fn load_matrix(path: &str) -> Result<LinearCode, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    let gen = GeneratorMatrix::from_text(&text).map_err(|e| e.to_string())?;
    LinearCode::new(gen).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Family {
            family,
            format,
            nonzero,
            plot_csv,
        } => {
            let spec = family.to_spec()?;
            let wd = spec.weight_distribution().map_err(|e| e.to_string())?;
            let format = if plot_csv { Format::Csv } else { format };
            print_distribution(&wd, format, nonzero, plot_csv);
            Ok(0)
        }
        Command::Check { input } => {
            let (subject, wd) = input.load()?;
            let nzd = analysis::nonzero(&wd);
            let report = analysis::gap_report(&nzd);
            let doc = ReportDocument::from_report(subject, &nzd, &report);
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            Ok(if report.log_concave { 0 } else { 1 })
        }
        Command::Dual { input } => {
            let (_, wd) = input.load()?;
            let dual = macwilliams(&wd).map_err(|e| e.to_string())?;
            print_distribution(&dual, Format::Json, false, false);
            Ok(0)
        }
        Command::Brute { matrix, budget } => {
            let code = load_matrix(&matrix)?;
            let wd = code
                .brute_weight_distribution(budget)
                .map_err(|e| e.to_string())?;
            print_distribution(&wd, Format::Json, false, false);
            Ok(0)
        }
        Command::Tutte { matrix, budget } => {
            let code = load_matrix(&matrix)?;
            let wd = tutte::wd_via_tutte(&code, budget).map_err(|e| e.to_string())?;
            print_distribution(&wd, Format::Json, false, false);
            Ok(0)
        }
        Command::Gen { family } => {
            let spec = family.to_spec()?;
            let gen = spec.generator().map_err(|e| e.to_string())?;
            print!("{}", gen.to_text());
            Ok(0)
        }
        Command::MdsThreshold { n, k } => {
            let t = analysis::mds_q0(n, k).map_err(|e| e.to_string())?;
            let out = serde_json::json!({
                "n": n, "k": k, "m": t.m.to_string(),
                "coeffs": [t.coeffs.0.to_string(), t.coeffs.1.to_string(), t.coeffs.2.to_string()],
                "scale": t.scale.to_string(),
                "discriminant": t.discriminant.to_string(),
                "root_intervals": t.root_intervals,
                "q_min_integer": t.q_min_integer,
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            Ok(0)
        }
        Command::MdsVerdict { n, k, q } => {
            let v = analysis::mds_verdict(n, k, q).map_err(|e| e.to_string())?;
            let status = match v.status {
                VerdictStatus::LogConcave => "log_concave",
                VerdictStatus::NotLogConcave => "not_log_concave",
            };
            let method = match v.method {
                VerdictMethod::Theorem => "theorem",
                VerdictMethod::Direct => "direct",
            };
            let out = serde_json::json!({
                "n": n, "k": k, "q": q,
                "status": status,
                "method": method,
                "notes": v.notes,
                "direct_gap_count": v.direct_gap_count,
                "q_min_integer": v.threshold.and_then(|t| t.q_min_integer),
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            Ok(if v.status == VerdictStatus::LogConcave {
                0
            } else {
                1
            })
        }
        Command::Verify { suite } => {
            let Some(rows) = verify::run_suite(&suite) else {
                return Err(format!(
                    "unknown suite {suite:?}; expected hamming, ext_hamming, rm2, hrm_prm, mds, hamming_q, tutte, or all"
                ));
            };
            let mut failures = 0;
            for row in &rows {
                let mark = if row.pass { "PASS" } else { "FAIL" };
                println!(
                    "{mark}  {}: expected {}, observed {}",
                    row.subject, row.expected, row.observed
                );
                if !row.pass {
                    failures += 1;
                }
            }
            println!("{} checks, {failures} failure(s)", rows.len());
            Ok(if failures == 0 { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
