//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::AtomicBool;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sumgraph_core::cayley_graph::{enumerate_fragments_with, kappa_oracle, FragmentSearch};
use sumgraph_core::{AdditionCayleyGraph, Analyzer, Error, FamilyEntry, GSubset, GroupSpec, KappaReport};

use crate::dot::to_dot;
use crate::json::{set_coords, EntryDoc, FamiliesDoc, FragmentDoc, FragmentsDoc, ReportDoc};
use crate::parse::{format_element, format_group, format_subset, parse_group, parse_subset, ParseError};
use crate::verify::{self, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
/// A verify run stopped by an interrupt before finishing.
pub const EXIT_INTERRUPTED: i32 = 130;

#[derive(Parser, Debug)]
#[command(name = "sumgraph", version, about = "Vertex connectivity of addition Cayley graphs on finite abelian groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Connectivity of one graph by the closed form.
    Kappa {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Also run the max-flow oracle and report agreement.
        #[arg(long)]
        check: bool,
    },
    /// The subgroup families entering the closed form, with scores.
    Families {
        #[command(flatten)]
        instance: InstanceArgs,
    },
    /// Fragments cut off by minimum vertex cuts found by the oracle.
    Fragments {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Search every vertex subset instead of the max-flow cuts (|G| <= 16).
        #[arg(long)]
        exhaustive: bool,
    },
    /// Check the closed form against the oracle over all small groups.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct InstanceArgs {
    /// Cyclic factors, e.g. `4,2`.
    #[arg(long)]
    pub group: String,
    /// Connection set, e.g. `{1,3}`, `{(1,0),(0,1)}` or `complement:{0}`.
    #[arg(long = "set")]
    pub subset: String,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Write the graph in DOT format to this path.
    #[arg(long, value_name = "PATH")]
    pub dump_dot: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_order: u64,
    /// Groups above this order are checked on a seeded sample of subsets.
    #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u64).range(1..))]
    pub sample_threshold: u64,
    /// Subsets drawn per sampled group.
    #[arg(long, default_value_t = 100_000)]
    pub sample_size: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Write counterexamples as JSON lines to this path (stderr otherwise).
    #[arg(long, value_name = "PATH")]
    pub counterexamples: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
}

#[derive(Debug, thiserror::Error)]
enum AppError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl AppError {
    fn exit_code(&self) -> i32 {
        match self {
            AppError::Core(Error::ResourceLimit { .. }) => EXIT_RESOURCE,
            AppError::Core(Error::TheoremViolation(_)) => EXIT_COUNTEREXAMPLE,
            _ => EXIT_USAGE,
        }
    }
}

/// Parses `args` (program name first) and runs the command, returning the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, stop: &AtomicBool) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, out, err, stop) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write, stop: &AtomicBool) -> Result<i32, AppError> {
    match command {
        Command::Kappa { instance, check } => cmd_kappa(&instance, check, out),
        Command::Families { instance } => cmd_families(&instance, out),
        Command::Fragments { instance, exhaustive } => cmd_fragments(&instance, exhaustive, out),
        Command::Verify(args) => cmd_verify(&args, out, err, stop),
    }
}

fn load(instance: &InstanceArgs) -> Result<(GroupSpec, GSubset), AppError> {
    let group = parse_group(&instance.group)?;
    let s = parse_subset(&group, &instance.subset)?;
    if let Some(path) = &instance.dump_dot {
        std::fs::write(path, to_dot(&AdditionCayleyGraph::new(&group, &s)))?;
    }
    Ok((group, s))
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "inf".to_string(), |x| x.to_string())
}

fn entry_text(group: &GroupSpec, e: &FamilyEntry) -> String {
    let mut line = format!("{} score={}", format_subset(group, e.subgroup.members()), e.score);
    if let Some(w) = &e.witness {
        line.push_str(&format!(
            " G0={} g0={}",
            format_subset(group, w.g0_subgroup.members()),
            format_element(group, w.g0)
        ));
    }
    line
}

fn report_text(group: &GroupSpec, s: &GSubset, r: &KappaReport) -> String {
    let mut t = format!("group={}\nS={}\n", format_group(group), format_subset(group, s));
    t.push_str(&format!("kappa={}\nbranch={}\n", r.kappa, r.branch.as_str()));
    t.push_str(&format!("eta={}\nlambda={}\nlambda_star={}\n", opt(r.eta), opt(r.lambda), opt(r.lambda_star)));
    if let Some(w) = &r.witness {
        t.push_str(&format!("witness={}\n", entry_text(group, w)));
    }
    if let Some(f) = &r.fragment {
        t.push_str(&format!(
            "fragment={} boundary={}\n",
            format_subset(group, &f.vertices),
            format_subset(group, &f.boundary)
        ));
    }
    t
}

fn cmd_kappa(instance: &InstanceArgs, check: bool, out: &mut dyn Write) -> Result<i32, AppError> {
    let (group, s) = load(instance)?;
    let report = Analyzer::new(&group)?.kappa_formula(&s)?;
    let oracle = if check { Some(kappa_oracle(&group, &s)?) } else { None };
    let agree = oracle.is_none_or(|k| k == report.kappa);
    match instance.format {
        Format::Json => {
            let mut doc = ReportDoc::new(&group, &s, &report);
            if let Some(k) = oracle {
                doc = doc.with_oracle(k);
            }
            writeln!(out, "{}", doc.to_json())?;
        }
        Format::Human => {
            write!(out, "{}", report_text(&group, &s, &report))?;
            if let Some(k) = oracle {
                writeln!(out, "oracle={k}\n{}", if agree { "agree" } else { "DISAGREE" })?;
            }
        }
    }
    Ok(if agree { EXIT_OK } else { EXIT_COUNTEREXAMPLE })
}

fn cmd_families(instance: &InstanceArgs, out: &mut dyn Write) -> Result<i32, AppError> {
    let (group, s) = load(instance)?;
    let a = Analyzer::new(&group)?;
    let lists = [
        ("H", a.h_family(&s)?),
        ("L", a.l_family(&s)?),
        ("L*", a.lstar_family(&s)?),
    ];
    match instance.format {
        Format::Json => {
            let docs = |v: &[FamilyEntry]| v.iter().map(|e| EntryDoc::new(&group, e)).collect();
            let doc = FamiliesDoc {
                group: group.factors().to_vec(),
                subset: set_coords(&group, &s),
                h: docs(&lists[0].1),
                l: docs(&lists[1].1),
                lstar: docs(&lists[2].1),
            };
            writeln!(out, "{}", serde_json::to_string(&doc).expect("families serialize"))?;
        }
        Format::Human => {
            writeln!(out, "group={}\nS={}", format_group(&group), format_subset(&group, &s))?;
            for (name, entries) in &lists {
                if entries.is_empty() {
                    writeln!(out, "{name}: ∅")?;
                } else {
                    writeln!(out, "{name}:")?;
                    for e in entries {
                        writeln!(out, "  {}", entry_text(&group, e))?;
                    }
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_fragments(instance: &InstanceArgs, exhaustive: bool, out: &mut dyn Write) -> Result<i32, AppError> {
    let (group, s) = load(instance)?;
    let search = if exhaustive { FragmentSearch::Exhaustive } else { FragmentSearch::SweepCuts };
    let kappa = kappa_oracle(&group, &s)?;
    let frags = match enumerate_fragments_with(&group, &s, search) {
        Ok(f) => f,
        Err(Error::NoFragments) => Vec::new(),
        Err(e) => return Err(e.into()),
    };
    let graph = AdditionCayleyGraph::new(&group, &s);
    let verified = frags.iter().all(|f| f.is_fragment(kappa) && graph.boundary(&f.vertices) == f.boundary);
    match instance.format {
        Format::Json => {
            let doc = FragmentsDoc {
                group: group.factors().to_vec(),
                subset: set_coords(&group, &s),
                kappa,
                fragments: frags
                    .iter()
                    .map(|f| FragmentDoc {
                        vertices: set_coords(&group, &f.vertices),
                        boundary: set_coords(&group, &f.boundary),
                    })
                    .collect(),
            };
            writeln!(out, "{}", serde_json::to_string(&doc).expect("fragments serialize"))?;
        }
        Format::Human => {
            writeln!(out, "group={}\nS={}\nkappa={kappa}", format_group(&group), format_subset(&group, &s))?;
            if frags.is_empty() {
                writeln!(out, "no fragments: the graph is complete")?;
            }
            for f in &frags {
                writeln!(
                    out,
                    "fragment={} boundary={} outside={}",
                    format_subset(&group, &f.vertices),
                    format_subset(&group, &f.boundary),
                    format_subset(&group, &f.outside)
                )?;
            }
            if !verified {
                writeln!(out, "boundary re-verification FAILED")?;
            }
        }
    }
    Ok(if verified { EXIT_OK } else { EXIT_COUNTEREXAMPLE })
}

fn verify_config(args: &VerifyArgs) -> VerifyConfig {
    let clamp = |v: u64| usize::try_from(v).unwrap_or(usize::MAX);
    VerifyConfig {
        max_order: clamp(args.max_order),
        sample_threshold: clamp(args.sample_threshold),
        sample_size: args.sample_size,
        seed: args.seed,
        jobs: args.jobs.map_or(VerifyConfig::default().jobs, clamp),
    }
}

fn write_counterexamples(path: Option<&Path>, text: &str, err: &mut dyn Write) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => err.write_all(text.as_bytes()),
    }
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write, stop: &AtomicBool) -> Result<i32, AppError> {
    let outcome = verify::run(&verify_config(args), stop)?;
    write_counterexamples(args.counterexamples.as_deref(), &outcome.counterexamples_jsonl(), err)?;
    match args.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&outcome.summary).expect("summary serializes"))?,
        Format::Human => write!(out, "{}", outcome.summary.to_text())?,
    }
    Ok(if !outcome.summary.is_clean() {
        EXIT_COUNTEREXAMPLE
    } else if outcome.summary.interrupted {
        EXIT_INTERRUPTED
    } else {
        EXIT_OK
    })
}
