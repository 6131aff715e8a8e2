use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};

use hilbound::instance::InstanceFile;
use hilbound::report::{run, to_sorted_json, Overrides};
use hilbound::reproduce::{reproduce, Example};
use hilbound::search::{search, SearchConfig};

#[derive(Parser)]
#[command(name = "hilbound", version, about = "Hilbert coefficient bounds over numerical semigroup rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Tuning {
    /// Cap on the number of powers and colons computed.
    #[arg(long = "max-n")]
    max_n: Option<u32>,
    /// Random trials per superficial element.
    #[arg(long)]
    trials: Option<u32>,
    /// Number of independently sampled superficial elements.
    #[arg(long)]
    samples: Option<u32>,
    #[arg(long)]
    seed: Option<u64>,
    /// Count unconfirmed superficiality certificates as failures.
    #[arg(long)]
    strict: bool,
}

impl Tuning {
    fn overrides(&self) -> Overrides {
        Overrides { n_max: self.max_n, trials: self.trials, samples: self.samples, seed: self.seed, strict: self.strict }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one instance file and write its report.
    Analyze {
        #[arg(long)]
        input: PathBuf,
        /// Report path; standard output when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        tuning: Tuning,
    },
    /// Rebuild a classical example and check its known invariants.
    Reproduce {
        /// One of h4, t3, rv-sharp, b2-lift.
        example: Example,
        #[arg(long, default_value_t = 3)]
        a: u32,
        #[arg(long, default_value_t = 2)]
        d: u32,
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        tuning: Tuning,
    },
    /// Analyze random instances and collect violations, equality cases and near misses.
    Search {
        #[arg(long, default_value_t = 50)]
        count: u32,
        #[arg(long = "genus-max", default_value_t = 6)]
        genus_max: u32,
        /// Directory receiving summary.json and minimized violations.
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        tuning: Tuning,
    },
}

fn write_or_print(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn analyze_cmd(input: &Path, output: Option<&Path>, tuning: &Tuning) -> anyhow::Result<u8> {
    let instance = match InstanceFile::read(input) {
        Ok(i) => i,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(2);
        }
    };
    let outcome = match run(&instance, &tuning.overrides()) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(e.exit_code() as u8);
        }
    };
    write_or_print(output, &outcome.to_json())?;
    for v in &outcome.violations {
        eprintln!("violation: {v}");
    }
    Ok(if outcome.passed() { 0 } else { 1 })
}

fn reproduce_cmd(example: Example, a: u32, d: u32, output: Option<&Path>, tuning: &Tuning) -> anyhow::Result<u8> {
    if a < 3 || (example == Example::B2Lift && d < 2) {
        eprintln!("error: need a >= 3 (and d >= 2 for b2-lift)");
        return Ok(2);
    }
    let result = match reproduce(example, a, d, &tuning.overrides()) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(1);
        }
    };
    for x in &result.assertions {
        let mark = if x.ok { "ok  " } else { "FAIL" };
        eprintln!("{mark} {}: expected {}, got {}", x.what, x.expected, x.actual);
    }
    if let Some(p) = output {
        write_or_print(Some(p), &to_sorted_json(&result))?;
    }
    Ok(if result.passed() { 0 } else { 1 })
}

fn search_cmd(count: u32, genus_max: u32, output: Option<&Path>, tuning: &Tuning) -> anyhow::Result<u8> {
    if count == 0 {
        eprintln!("error: --count must be at least 1");
        return Ok(2);
    }
    let mut overrides = tuning.overrides();
    let seed = overrides.seed.take().unwrap_or(0);
    let (summary, _) = search(&SearchConfig { count, seed, genus_max, overrides });
    let text = to_sorted_json(&summary);
    match output {
        Some(dir) => {
            fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            fs::write(dir.join("summary.json"), &text)?;
            if !summary.violations.is_empty() {
                let vdir = dir.join("violations");
                fs::create_dir_all(&vdir)?;
                for v in &summary.violations {
                    fs::write(vdir.join(format!("{}.json", v.minimized.id)), v.minimized.to_json())?;
                }
            }
        }
        None => print!("{text}"),
    }
    eprintln!(
        "{} analyzed, {} skipped, {} errors, {} violations",
        summary.analyzed,
        summary.skipped.len(),
        summary.errors.len(),
        summary.violations.len()
    );
    Ok(if summary.clean() { 0 } else { 1 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze { input, output, tuning } => analyze_cmd(input, output.as_deref(), tuning),
        Command::Reproduce { example, a, d, output, tuning } => reproduce_cmd(*example, *a, *d, output.as_deref(), tuning),
        Command::Search { count, genus_max, output, tuning } => search_cmd(*count, *genus_max, output.as_deref(), tuning),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
