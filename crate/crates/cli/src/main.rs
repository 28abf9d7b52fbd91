//! `ncq`: analyze piecewise-linear instances, verify random corpora, list
//! end sets and compare against sampling oracles.

use std::io::{ErrorKind, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use nonsmooth_cq::corpus::{self, GeneratorConfig, InstanceClass};
use nonsmooth_cq::geometry::NormKind;
use nonsmooth_cq::instance::{self, InstanceDoc};
use nonsmooth_cq::oracle::{compare_with_oracles, OracleComparison, SamplePlan};
use nonsmooth_cq::report::{self, EndsetChoice};
use nonsmooth_cq::Error;

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(name = "ncq", version, about = "Exact constraint-qualification analysis for piecewise-linear inequalities")]
struct Cli {
    /// Seed for corpus generation and oracle sampling.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Oracle comparison tolerance.
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    /// Write the machine-readable result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InstanceArgs {
    /// Instance JSON file.
    file: PathBuf,
    /// Override the instance norm: l1, linf or l2.
    #[arg(long)]
    norm: Option<String>,
    /// Extra basepoint, e.g. "1/2,-3"; may be repeated.
    #[arg(long)]
    basepoint: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Full report at every basepoint.
    Analyze(InstanceArgs),
    /// Run every theorem check on a corpus directory or a generated corpus.
    Verify {
        /// Directory of instance files.
        corpus: Option<PathBuf>,
        /// Generate this many random instances instead.
        #[arg(long)]
        generate: Option<usize>,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Generate extended-valued instances.
        #[arg(long)]
        extended: bool,
        /// Where a minimized counterexample is written on failure.
        #[arg(long, default_value = "counterexample.json")]
        counterexample: PathBuf,
    },
    /// End set of a subdifferential and its distance to the origin.
    Endset {
        #[command(flatten)]
        instance: InstanceArgs,
        /// clarke, frechet, intersection or extended.
        #[arg(long, default_value = "clarke")]
        set: String,
    },
    /// Compare exact results with the sampling oracles.
    OracleCompare {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Random queries of each kind per basepoint.
        #[arg(long, default_value_t = 200)]
        queries: usize,
    },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        input_error(e.to_string())
    }
}

fn load_instance(args: &InstanceArgs) -> Result<InstanceDoc, Failure> {
    let text = std::fs::read_to_string(&args.file)
        .map_err(|e| input_error(format!("{}: {e}", args.file.display())))?;
    let mut doc = InstanceDoc::parse(&text).map_err(|e| input_error(format!("{}: {e}", args.file.display())))?;
    if let Some(n) = &args.norm {
        doc.norm = NormKind::parse(n).ok_or_else(|| input_error(format!("unknown norm {n:?}")))?;
    }
    for p in &args.basepoint {
        let x = instance::parse_point(p)?;
        if x.len() != doc.dim {
            return Err(input_error(format!("basepoint {p:?} has dimension {}, expected {}", x.len(), doc.dim)));
        }
        doc.basepoints.push(x);
    }
    // revalidate so added points are checked against the domain
    InstanceDoc::parse(&doc.to_json())?;
    Ok(doc)
}

/// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
fn say(text: &str) {
    let mut stdout = std::io::stdout().lock();
    match stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()) {
        Err(e) if e.kind() != ErrorKind::BrokenPipe => eprintln!("error writing output: {e}"),
        _ => {}
    }
}

fn emit(out: Option<&Path>, body: &str) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, body).map_err(|e| input_error(format!("{}: {e}", p.display()))),
        None => {
            say(&format!("{body}\n"));
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let out = cli.out.as_deref();
    match &cli.command {
        Command::Analyze(args) => {
            let doc = load_instance(args)?;
            let started = Instant::now();
            let report = report::analyze_instance(&doc)?;
            emit(out, &report.to_json())?;
            eprintln!("analyzed {} basepoint(s) in {:.3}s", doc.basepoints.len(), started.elapsed().as_secs_f64());
            Ok(())
        }
        Command::Verify {
            corpus: dir,
            generate,
            dim,
            extended,
            counterexample,
        } => {
            let instances = match (dir, generate) {
                (Some(_), Some(_)) => return Err(input_error("give a corpus directory or --generate, not both")),
                (Some(d), None) => corpus::load_corpus_dir(d)?,
                (None, Some(n)) => {
                    if !(1..=3).contains(dim) {
                        return Err(input_error("--dim must be 1, 2 or 3"));
                    }
                    let class = if *extended { InstanceClass::Extended } else { InstanceClass::Lipschitz };
                    corpus::generate(&GeneratorConfig::new(*n, *dim, cli.seed.unwrap_or(0)).class(class))
                }
                (None, None) => return Err(input_error("give a corpus directory or --generate N")),
            };
            let started = Instant::now();
            let summary = corpus::verify_corpus(&instances)?;
            match out {
                Some(p) => {
                    emit(Some(p), &summary.to_json())?;
                    say(&summary.table());
                }
                None => say(&summary.table()),
            }
            eprintln!("verified {} instance(s) in {:.3}s", summary.instances, started.elapsed().as_secs_f64());
            if let Some(c) = &summary.counterexample {
                std::fs::write(counterexample, c.instance.to_json())
                    .map_err(|e| input_error(format!("{}: {e}", counterexample.display())))?;
                return Err(Failure {
                    code: EXIT_CHECK_FAILED,
                    message: format!(
                        "check {} failed on {} ({}); minimized instance written to {}",
                        c.check,
                        c.instance_id,
                        c.detail,
                        counterexample.display()
                    ),
                });
            }
            Ok(())
        }
        Command::Endset { instance: args, set } => {
            let choice = EndsetChoice::parse(set).ok_or_else(|| input_error(format!("unknown set {set:?}")))?;
            let doc = load_instance(args)?;
            let f = doc.function()?;
            let norm = doc.norm_spec();
            let mut docs = Vec::new();
            for x in &doc.basepoints {
                match report::endset_listing(&f, x, &norm, choice) {
                    Ok(e) => docs.push(e),
                    Err(e) => eprintln!("basepoint ({}): {e}", report::fmt_point(x)),
                }
            }
            match out {
                Some(p) => emit(Some(p), &serde_json::to_string_pretty(&docs).expect("serializable")),
                None => {
                    for d in &docs {
                        say(&d.text());
                    }
                    Ok(())
                }
            }
        }
        Command::OracleCompare { instance: args, queries } => {
            let doc = load_instance(args)?;
            let f = doc.function()?;
            let mut plan = SamplePlan::new(cli.seed.or(doc.seed).unwrap_or(0));
            if let Some(t) = cli.tolerance {
                plan = plan.with_tolerance(t);
            }
            plan.validate()?;
            let mut total = OracleComparison::default();
            for x in &doc.basepoints {
                total.merge(&compare_with_oracles(&f, x, &plan, *queries)?);
            }
            let mut lines = String::new();
            let mut worst = 1.0f64;
            let mut refuted = 0;
            for (name, t) in total.tallies() {
                worst = worst.min(t.rate());
                refuted += t.contradictions;
                lines.push_str(&format!(
                    "{name:<20} agree {:>5}  disagree {:>3}  refuted {:>3}  degenerate {:>4}  rate {:.4}\n",
                    t.agree,
                    t.disagree,
                    t.contradictions,
                    t.degenerate,
                    t.rate()
                ));
            }
            match out {
                Some(p) => {
                    emit(Some(p), &serde_json::to_string_pretty(&total).expect("serializable"))?;
                    say(&lines);
                }
                None => say(&lines),
            }
            if refuted > 0 {
                return Err(Failure {
                    code: EXIT_CHECK_FAILED,
                    message: format!("{refuted} sampled queries refute the exact answer"),
                });
            }
            if worst < 0.99 {
                return Err(Failure {
                    code: EXIT_CHECK_FAILED,
                    message: format!("oracle agreement {worst:.4} is below 0.99"),
                });
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
