//! `catcenter`: batch front end. Loads structure files (plus the bundled
//! suite), runs one command, prints a summary, and optionally writes the
//! full JSON report. Exit status: 0 all laws passed, 1 some law failed,
//! 2 the command could not run.

mod run;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use catcenter::center::Strength;
use catcenter::spec::{parse_spec_in, parse_spec_str, seed_suite, Workspace};
use catcenter::{Error, Side};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::run::{CenterArgs, Outcome, Scope};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "catcenter", version, about = "Exact checks for twisted centers, bimonads and bilax functors")]
struct Cli {
    /// Structure file (TOML); may be repeated. Names not found here resolve
    /// in the bundled suite.
    #[arg(long, global = true)]
    spec: Vec<PathBuf>,
    /// Write the full JSON report here (a directory for `seed-suite`).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Print the JSON report instead of the summary.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the laws of a named structure: category, moncat, functor,
    /// bimonad, lambda, yd, bilax, bilax-transformation.
    Check { kind: String, name: String },
    /// Enumerate a twisted center of a monoidal category.
    Center {
        moncat: String,
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
        #[arg(long, value_enum, default_value = "weak")]
        strength: StrengthArg,
        /// Twisting functors F and G (default: identities).
        #[arg(long, num_args = 2, value_names = ["F", "G"])]
        twist: Option<Vec<String>>,
        /// Also lift the dual of every object.
        #[arg(long)]
        dualize: bool,
    },
    /// List adjunctions per 1-cell of the delooping.
    Adjoints { moncat: String },
    /// Exhaustive enumeration; `yd <bimonad>` is supported.
    Enumerate {
        what: String,
        name: String,
        #[arg(long, default_value_t = 1)]
        max_dim: usize,
    },
    /// Image in the 2-category of mixed distributive laws.
    MapToDist { name: String },
    /// Write the bundled instances as a structure file.
    SeedSuite,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrengthArg {
    Weak,
    Strong,
}

fn load(cli: &Cli) -> Result<Scope, Error> {
    let suite = parse_spec_str(&seed_suite().to_toml()?, "<suite>")?;
    let mut layers: Vec<Workspace> =
        cli.spec.iter().map(|p| parse_spec_in(p, Some(&suite))).collect::<Result<_, _>>()?;
    layers.push(suite);
    Ok(Scope { layers })
}

fn describe(cmd: &Command) -> (String, Vec<String>) {
    match cmd {
        Command::Check { kind, name } => (format!("check {kind}"), vec![name.clone()]),
        Command::Center { moncat, twist, .. } => {
            let mut t = vec![moncat.clone()];
            t.extend(twist.iter().flatten().cloned());
            ("center".into(), t)
        }
        Command::Adjoints { moncat } => ("adjoints".into(), vec![moncat.clone()]),
        Command::Enumerate { what, name, .. } => (format!("enumerate {what}"), vec![name.clone()]),
        Command::MapToDist { name } => ("map-to-dist".into(), vec![name.clone()]),
        Command::SeedSuite => ("seed-suite".into(), vec![]),
    }
}

fn execute(cli: &Cli) -> Result<Outcome, Error> {
    let scope = load(cli)?;
    match &cli.command {
        Command::Check { kind, name } => run::check(&scope, kind, name),
        Command::Center { moncat, side, strength, twist, dualize } => run::center(
            &scope,
            &CenterArgs {
                moncat,
                side: match side {
                    SideArg::Left => Side::Left,
                    SideArg::Right => Side::Right,
                },
                strength: match strength {
                    StrengthArg::Weak => Strength::Weak,
                    StrengthArg::Strong => Strength::Strong,
                },
                twist: twist.as_ref().map(|t| (t[0].as_str(), t[1].as_str())),
                dualize: *dualize,
            },
        ),
        Command::Adjoints { moncat } => run::adjoints(&scope, moncat),
        Command::Enumerate { what, name, max_dim } => run::enumerate(&scope, what, name, *max_dim),
        Command::MapToDist { name } => run::map_to_dist(&scope, name),
        Command::SeedSuite => unreachable!("handled before dispatch"),
    }
}

fn seed(cli: &Cli) -> Result<(), Error> {
    let text = seed_suite().to_toml()?;
    match &cli.out {
        Some(dir) => {
            std::fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
            let path = dir.join("suite.spec");
            std::fs::write(&path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            println!("wrote {}", path.display());
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if matches!(cli.command, Command::SeedSuite) {
        return match seed(&cli) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        };
    }
    let (command, targets) = describe(&cli.command);
    let start = Instant::now();
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let passed = outcome.report.passed();
    let full = json!({
        "schema_version": SCHEMA_VERSION,
        "tool": "catcenter",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "targets": targets,
        "subject": outcome.report.subject,
        "passed": passed,
        "laws": outcome.report.laws,
        "details": outcome.details,
        "elapsed_ms": elapsed_ms,
    });
    let text = serde_json::to_string_pretty(&full).expect("a JSON value serialises");
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, format!("{text}\n")) {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if cli.json {
        println!("{text}");
    } else {
        println!("{command} {}: {}", targets.join(" "), if passed { "PASS" } else { "FAIL" });
        for l in &outcome.report.laws {
            let mark = if l.passed { "ok  " } else { "FAIL" };
            println!("  {mark} {} ({} instances)", l.law, l.instances);
            for w in &l.witnesses {
                println!("       at {w}");
            }
        }
        for s in &outcome.summary {
            println!("{s}");
        }
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
