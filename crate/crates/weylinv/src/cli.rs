//! Command-line surface: classification, pairing, folding inspection and
//! golden-table verification, with structured output for downstream tools.
//!
//! Exit codes: 0 success, 1 verification failure (or internal error),
//! 2 unparseable command, 3 resource budget exhausted.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::folding;
use crate::golden;
use crate::involutions::{classify, w0_pairing, Classification, InvolutionClass};
use crate::rootsys::{DiagramType, NodeSet, RootSystem};
use crate::weyl::{Budgets, Mode, SubgroupSpec};

#[derive(Parser)]
#[command(name = "weylinv", version, about = "Involutions in finite Coxeter groups and their pairing by the longest element")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Conjugacy classes of involutions, with eigenspace invariants.
    Classify(Job),
    /// The pairing of classes under multiplication by the longest element.
    Pair(Job),
    /// Orbits, folded type and generator images of a diagram folding.
    Fold(Job),
    /// Check the computed classification and pairing against the expected
    /// table; exits nonzero on any failing line.
    Verify(Job),
    /// Machine-readable classification table.
    Table(Job),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SubgroupArg {
    /// The whole group.
    Full,
    /// The centralizer of the longest element.
    Wo,
    /// The subgroup fixed by the canonical diagram automorphism.
    Sigma,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Orbit,
    Auto,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Md,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RealizationArg {
    B,
    C,
}

#[derive(Args)]
struct Job {
    /// Diagram type: A5, BC4, D6, E7, F4, G2:8, H3, or `all` for verify.
    r#type: String,
    #[arg(long, value_enum, default_value = "full")]
    subgroup: SubgroupArg,
    #[arg(long, value_enum, default_value = "auto")]
    mode: ModeArg,
    /// Largest subgroup exhaustive enumeration may materialize.
    #[arg(long, default_value_t = 3_000_000)]
    cap: usize,
    /// Memory allowance for orbit search (bytes; K/M/G suffixes allowed).
    #[arg(long, default_value = "8G")]
    memory_budget: String,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Override the embedded expected tables (verify only).
    #[arg(long)]
    golden_file: Option<std::path::PathBuf>,
    /// Worker count; results are independent of it.
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Which BC realization the `BC` type shorthand picks.
    #[arg(long, value_enum, default_value = "c")]
    realization: RealizationArg,
}

/// Stable schema emitted by `table --format json`.
#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct TableJson {
    pub r#type: String,
    pub spec: String,
    pub classes: Vec<ClassJson>,
    pub pairing: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct ClassJson {
    pub reps: Vec<Vec<usize>>,
    pub dim_minus: usize,
    pub neg_type: Vec<String>,
}

fn parse_memory(s: &str) -> Result<usize, Error> {
    let (digits, mult) = match s.chars().last() {
        Some('K') | Some('k') => (&s[..s.len() - 1], 1usize << 10),
        Some('M') | Some('m') => (&s[..s.len() - 1], 1 << 20),
        Some('G') | Some('g') => (&s[..s.len() - 1], 1 << 30),
        _ => (s, 1),
    };
    digits
        .parse::<usize>()
        .map(|n| n * mult)
        .map_err(|_| Error::ParseType(format!("bad memory budget `{s}`")))
}

impl Job {
    fn diagram(&self) -> Result<DiagramType, Error> {
        let t: DiagramType = self.r#type.parse()?;
        if self.r#type.starts_with("BC") && self.realization == RealizationArg::B {
            return Ok(t.dual_realization());
        }
        Ok(t)
    }

    fn budgets(&self) -> Result<Budgets, Error> {
        if self.threads == 0 {
            return Err(Error::ParseType("--threads must be at least 1".to_string()));
        }
        Ok(Budgets { cap: self.cap, memory_bytes: parse_memory(&self.memory_budget)? })
    }

    fn mode(&self) -> Mode {
        match self.mode {
            ModeArg::Exhaustive => Mode::Exhaustive,
            ModeArg::Orbit => Mode::NegOrbit,
            ModeArg::Auto => Mode::Auto,
        }
    }

    fn spec(&self, sys: &RootSystem) -> Result<SubgroupSpec, Error> {
        Ok(match self.subgroup {
            SubgroupArg::Full => SubgroupSpec::Full,
            SubgroupArg::Wo => SubgroupSpec::CentralizerW0,
            SubgroupArg::Sigma => {
                SubgroupSpec::SigmaFixed(sys.default_fold_automorphism()?)
            }
        })
    }
}

/// Minimal-cardinality representative subsets: exactly the standard ones
/// whenever the class contains any.
fn display_reps(class: &InvolutionClass) -> Vec<NodeSet> {
    let min = class.rep_subsets[0].len();
    class.rep_subsets.iter().copied().filter(|s| s.len() == min).collect()
}

fn table_json(sys: &RootSystem, spec: &SubgroupSpec, cl: &Classification, pairing: &[usize]) -> TableJson {
    let classes = cl
        .classes
        .iter()
        .map(|c| ClassJson {
            reps: display_reps(c).iter().map(|s| s.to_vec()).collect(),
            dim_minus: c.dim_minus,
            neg_type: c.neg_type.0.iter().map(|(t, l)| format!("{t}{l}")).collect(),
        })
        .collect();
    let mut pairs = Vec::new();
    for (i, &j) in pairing.iter().enumerate() {
        if i <= j {
            pairs.push([i, j]);
        }
    }
    TableJson {
        r#type: sys.diagram().to_string(),
        spec: spec.label(),
        classes,
        pairing: pairs,
    }
}

fn reps_string(reps: &[NodeSet]) -> String {
    reps.iter().map(NodeSet::to_string).collect::<Vec<_>>().join(" ")
}

fn run_classify(job: &Job, out: &mut impl std::io::Write) -> Result<(), Error> {
    let sys = RootSystem::build(job.diagram()?)?;
    let spec = job.spec(&sys)?;
    let cl = classify(&sys, &spec, job.mode(), &job.budgets()?)?;
    match job.format {
        FormatArg::Json => {
            let pairing = w0_pairing(&sys, &cl)?;
            let json = serde_json::to_string_pretty(&table_json(&sys, &spec, &cl, &pairing))
                .expect("serialization cannot fail");
            writeln!(out, "{json}").ok();
        }
        FormatArg::Md => {
            writeln!(out, "| class | dim- | dim+ | -1 side | +1 side | size | representatives |")
                .ok();
            writeln!(out, "|---|---|---|---|---|---|---|").ok();
            for (i, c) in cl.classes.iter().enumerate() {
                writeln!(
                    out,
                    "| {} | {} | {} | {} | {} | {} | {} |",
                    i,
                    c.dim_minus,
                    c.dim_plus,
                    c.neg_type,
                    c.plus_type,
                    c.class_size.map_or("?".into(), |s| s.to_string()),
                    reps_string(&display_reps(c)),
                )
                .ok();
            }
        }
        FormatArg::Text => {
            writeln!(
                out,
                "{} ({}, {:?} mode): {} involution classes",
                sys.diagram(),
                spec.label(),
                cl.mode,
                cl.classes.len()
            )
            .ok();
            for (i, c) in cl.classes.iter().enumerate() {
                writeln!(
                    out,
                    "  class {i}: dim- {} dim+ {}  -1side {}  +1side {}  size {}  reps {}",
                    c.dim_minus,
                    c.dim_plus,
                    c.neg_type,
                    c.plus_type,
                    c.class_size.map_or("?".into(), |s| s.to_string()),
                    reps_string(&display_reps(c)),
                )
                .ok();
            }
        }
    }
    Ok(())
}

fn run_pair(job: &Job, out: &mut impl std::io::Write) -> Result<(), Error> {
    let sys = RootSystem::build(job.diagram()?)?;
    let spec = match job.subgroup {
        // Pairing needs w0 central or centralized: pick the table's natural
        // subgroup when the user left the default on a non-central type.
        SubgroupArg::Full if !sys.diagram().w0_is_central() => SubgroupSpec::CentralizerW0,
        _ => job.spec(&sys)?,
    };
    let cl = classify(&sys, &spec, job.mode(), &job.budgets()?)?;
    let pairing = w0_pairing(&sys, &cl)?;
    writeln!(out, "{} ({}): action of w0 on involution classes", sys.diagram(), spec.label()).ok();
    let mut line = 0;
    for (i, &j) in pairing.iter().enumerate() {
        if j < i {
            continue;
        }
        line += 1;
        let left = reps_string(&display_reps(&cl.classes[i]));
        if i == j {
            writeln!(out, "  ({line})  {left}  <->  self").ok();
        } else {
            let right = reps_string(&display_reps(&cl.classes[j]));
            writeln!(out, "  ({line})  {left}  <->  {right}").ok();
        }
    }
    Ok(())
}

fn run_fold(job: &Job, out: &mut impl std::io::Write) -> Result<(), Error> {
    let sys = RootSystem::build(job.diagram()?)?;
    let sigma = sys.default_fold_automorphism()?;
    let f = folding::fold(&sys, &sigma)?;
    writeln!(out, "fold {} along σ = {}", sys.diagram(), sigma).ok();
    writeln!(out, "  folded type: {} (Gram scale {})", f.folded.diagram(), f.gram_scale).ok();
    for (i, orbit) in f.orbits.iter().enumerate() {
        let nodes: Vec<String> = orbit.iter().map(|&x| (x + 1).to_string()).collect();
        let word = sys.word_of(&f.gen_images[i])?;
        writeln!(
            out,
            "  folded node {}: orbit {{{}}}, generator image word {:?} (length {})",
            i + 1,
            nodes.join(","),
            word,
            f.gen_images[i].length()
        )
        .ok();
    }
    Ok(())
}

/// The roster `verify all` walks, every tabulated type at desk scale.
pub fn verify_all_roster() -> Vec<String> {
    let mut v: Vec<String> = Vec::new();
    v.extend((2..=8).map(|n| format!("A{n}")));
    v.extend((2..=7).map(|n| format!("BC{n}")));
    v.extend((4..=8).map(|n| format!("D{n}")));
    v.extend(["E6", "E7", "E8", "F4", "H3", "H4"].map(String::from));
    v.extend((2..=12).map(|n| format!("G2:{n}")));
    v
}

fn run_verify(job: &Job, out: &mut impl std::io::Write) -> Result<bool, Error> {
    let golden_text = match &job.golden_file {
        None => None,
        Some(path) => Some(std::fs::read_to_string(path).map_err(|e| {
            Error::GoldenFormat(format!("cannot read {}: {e}", path.display()))
        })?),
    };
    let names: Vec<String> =
        if job.r#type == "all" { verify_all_roster() } else { vec![job.r#type.clone()] };
    let mut all_pass = true;
    for name in names {
        let t: DiagramType = name.parse()?;
        let t = if name.starts_with("BC") && job.realization == RealizationArg::B {
            t.dual_realization()
        } else {
            t
        };
        let sys = RootSystem::build(t)?;
        let report = golden::verify(&sys, job.mode(), &job.budgets()?, golden_text.as_deref())?;
        write!(out, "{report}").ok();
        all_pass &= report.pass();
    }
    Ok(all_pass)
}

fn run_table(job: &Job, out: &mut impl std::io::Write) -> Result<(), Error> {
    match job.format {
        FormatArg::Json => run_classify(job, out),
        _ => {
            // Text/markdown table: the classification plus pairing arrows.
            run_classify(job, out)?;
            run_pair(job, out)
        }
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::ParseType(_)
        | Error::InvalidDiagram(_)
        | Error::NodeOutOfRange { .. }
        | Error::GoldenFormat(_) => 2,
        Error::CapExceeded { .. } | Error::MemoryBudgetExceeded { .. } => 3,
        _ => 1,
    }
}

/// Entry point; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints its own message; usage problems exit 2.
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let result = match &cli.command {
        Command::Classify(job) => run_classify(job, &mut out).map(|()| true),
        Command::Pair(job) => run_pair(job, &mut out).map(|()| true),
        Command::Fold(job) => run_fold(job, &mut out).map(|()| true),
        Command::Verify(job) => run_verify(job, &mut out),
        Command::Table(job) => run_table(job, &mut out).map(|()| true),
    };
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}
