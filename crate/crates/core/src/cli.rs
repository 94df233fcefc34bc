//! Command-line front end. Exit codes: 0 verified, 1 a check failed,
//! 2 usage or input error.

use std::ffi::OsString;
use std::fs;
use std::ops::Range;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::build::{RefinementScheme, RefinementSpec};
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::instance::InstanceFile;
use crate::label::LabelKind;
use crate::render::{render_svg, RenderOptions};
use crate::verify::{
    batch_run, check_instance, generate_instance, recheck, BatchOptions, EnclosureKind, LabelGenerator, Report,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "tucker-volume", version, about = "Exact volume-sum verification of Tucker and Sperner instances")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Tucker,
    Sperner,
}

impl From<Mode> for LabelKind {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Tucker => LabelKind::Tucker,
            Mode::Sperner => LabelKind::Sperner,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Scheme {
    Barycentric,
    EdgeMidpoint,
}

impl From<Scheme> for RefinementScheme {
    fn from(s: Scheme) -> Self {
        match s {
            Scheme::Barycentric => RefinementScheme::Barycentric,
            Scheme::EdgeMidpoint => RefinementScheme::EdgeMidpoint,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Labels {
    Uniform,
    OddMap,
    OneSided,
}

impl From<Labels> for LabelGenerator {
    fn from(l: Labels) -> Self {
        match l {
            Labels::Uniform => LabelGenerator::Uniform,
            Labels::OddMap => LabelGenerator::OddMap,
            Labels::OneSided => LabelGenerator::OneSided,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Enclosure {
    Shell,
    Square2d,
}

impl From<Enclosure> for EnclosureKind {
    fn from(e: Enclosure) -> Self {
        match e {
            Enclosure::Shell => EnclosureKind::Shell,
            Enclosure::Square2d => EnclosureKind::Square2d,
        }
    }
}

#[derive(clap::Args, Debug)]
struct GenArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=8))]
    dim: u32,
    /// Refinement rounds.
    #[arg(long, default_value_t = 0)]
    refine: u32,
    #[arg(long, value_enum, default_value_t = Scheme::Barycentric)]
    scheme: Scheme,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Mode::Tucker)]
    mode: Mode,
    /// Tucker labeling generator.
    #[arg(long, value_enum, default_value_t = Labels::Uniform)]
    labels: Labels,
    /// Also split one random interior cell after each round.
    #[arg(long)]
    random_interior: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a labeled instance.
    Gen {
        #[command(flatten)]
        args: GenArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run every check on an instance.
    Check {
        instance: PathBuf,
        #[arg(long, value_enum, default_value_t = Enclosure::Shell)]
        enclosure: Enclosure,
        /// Write the report JSON here.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Compare a stored report against a fresh run instead.
        #[arg(long)]
        against: Option<PathBuf>,
    },
    /// Generate and check many instances; stops at the first failure.
    Batch {
        #[arg(long, value_delimiter = ',', default_value = "1,2,3", value_parser = clap::value_parser!(u32).range(1..=8))]
        dims: Vec<u32>,
        /// `a..b`, or `n` for `0..n`.
        #[arg(long, default_value = "0..100", value_parser = parse_range)]
        seeds: Range<u64>,
        #[arg(long, default_value_t = 1)]
        refine: u32,
        #[arg(long, value_enum, default_value_t = Scheme::Barycentric)]
        scheme: Scheme,
        #[arg(long, value_enum, default_value_t = Mode::Tucker)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Labels::Uniform)]
        labels: Labels,
        #[arg(long, value_enum, default_value_t = Enclosure::Shell)]
        enclosure: Enclosure,
        /// Break each instance's labeling before checking (self-test).
        #[arg(long)]
        inject_fault: bool,
        /// Write the summary (and any failing report) as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Draw a planar instance as SVG.
    Render {
        instance: PathBuf,
        #[arg(long)]
        svg: PathBuf,
        /// Rational time `p/q` at which to draw the deformed complex.
        #[arg(long, value_parser = parse_rational)]
        at_time: Option<Rational>,
        #[arg(long)]
        highlight_complementary: bool,
    },
}

fn parse_range(s: &str) -> std::result::Result<Range<u64>, String> {
    let bad = || format!("expected `a..b` or a count, got {s:?}");
    match s.split_once("..") {
        Some((a, b)) => {
            let a: u64 = a.trim().parse().map_err(|_| bad())?;
            let b: u64 = b.trim().parse().map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            Ok(a..b)
        }
        None => Ok(0..s.trim().parse().map_err(|_| bad())?),
    }
}

fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Outcome {
    Verified,
    Failed,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(cli.command) {
        Ok(Outcome::Verified) => EXIT_OK,
        Ok(Outcome::Failed) => EXIT_CHECK_FAILED,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn print_report_summary(r: &Report) {
    println!("instance {} (dim {}, {:?})", r.instance_id, r.dimension, r.mode);
    for c in &r.checks {
        let status = serde_json::to_value(c.status).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
        match &c.witness {
            Some(w) => println!("  {:<28} {status}: {w}", c.name),
            None => println!("  {:<28} {status}", c.name),
        }
    }
    for e in &r.complementary_edges {
        println!("  complementary edge {{{}, {}}} labels ({}, {})", e.endpoints.0, e.endpoints.1, e.labels.0, e.labels.1);
    }
    if let Some(d) = &r.degree {
        println!("  degree {}", d.degree);
    }
}

fn dispatch(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Gen { args, out } => {
            let spec = RefinementSpec {
                scheme: args.scheme.into(),
                rounds: args.refine,
                seed: args.random_interior.then_some(args.seed),
            };
            let inst = generate_instance(args.dim as usize, args.seed, &spec, args.mode.into(), args.labels.into())?;
            inst.write(&out)?;
            Ok(Outcome::Verified)
        }
        Command::Check { instance, enclosure, report, against } => {
            let inst = InstanceFile::read(&instance)?;
            if let Some(stored) = against {
                let stored: Report = serde_json::from_str(&fs::read_to_string(stored)?)?;
                let diffs = recheck(&stored, &inst, enclosure.into());
                if diffs.is_empty() {
                    println!("stored report matches a fresh run");
                    return Ok(Outcome::Verified);
                }
                for d in diffs {
                    println!("mismatch: {d}");
                }
                return Ok(Outcome::Failed);
            }
            let r = check_instance(&inst, enclosure.into());
            print_report_summary(&r);
            match &report {
                Some(path) => fs::write(path, r.to_json()?)?,
                None if !r.passed() => print!("{}", r.to_json()?),
                None => {}
            }
            Ok(if r.passed() { Outcome::Verified } else { Outcome::Failed })
        }
        Command::Batch { dims, seeds, refine, scheme, mode, labels, enclosure, inject_fault, json } => {
            let mut opts = BatchOptions::new(
                dims.into_iter().map(|d| d as usize).collect(),
                seeds,
                RefinementSpec::new(scheme.into(), refine),
                mode.into(),
            );
            opts.labels = labels.into();
            opts.enclosure = enclosure.into();
            opts.inject_fault = inject_fault;
            let summary = batch_run(&opts)?;
            for line in summary.lines() {
                println!("{line}");
            }
            if let Some(path) = json {
                let mut s = serde_json::to_string_pretty(&summary)?;
                s.push('\n');
                fs::write(path, s)?;
            }
            if let Some(r) = &summary.failure {
                print!("{}", r.to_json()?);
                return Ok(Outcome::Failed);
            }
            Ok(Outcome::Verified)
        }
        Command::Render { instance, svg, at_time, highlight_complementary } => {
            let inst = InstanceFile::read(&instance)?;
            let opts = RenderOptions { at_time, highlight_complementary };
            let out = render_svg(&inst.triangulation, &inst.labeling, &opts)?;
            fs::write(svg, out)?;
            Ok(Outcome::Verified)
        }
    }
}
