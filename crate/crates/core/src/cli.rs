//! Command-line surface over the library. Exit codes: 0 when the checked
//! property holds or the construction succeeded, 1 when a property fails
//! (a machine-readable certificate is always printed), 2 for usage and
//! parse errors.
//!
//! Every producing command emits document text that every checking command
//! accepts: where a command expects generators, family members are read as
//! k-set generators; where a command expects a family, a generator payload
//! is expanded with `build` first.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::document::{parse_document, InputDocument, Payload};
use crate::error::Error;
use crate::generators::{build_family, extract_generators, pi_collection};
use crate::intersect::{
    bond_indices, check_collection, intersecting_violation, oracle_witness, witness_construct,
};
use crate::mlcif::{
    enumerate_mlcif, is_maximal_intersecting, named_family, MlcifCatalogue, NamedFamily,
    DEFAULT_ENUMERATION_BUDGET,
};
use crate::sets::{
    has_common_element, left_compressed_violation, shift_stability_violation,
    GeneratorCollection, GeneratorSet, GroundContext, KSet, SetFamily,
};
use crate::shift::compress;

#[derive(Debug, Parser)]
#[command(
    name = "lcif",
    version,
    about = "Construct and check left-compressed intersecting k-uniform set families",
    after_help = "Documents are read from --input or stdin and written to --output or stdout.\n\
                  Format: 'n N' and 'k K' header lines, then one set per line as 'G e1 e2 ..'\n\
                  (generators) or 'S e1 e2 ..' (family members); '#' starts a comment."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Read the input document from a file instead of stdin.
    #[arg(long, global = true, value_name = "FILE")]
    pub input: Option<PathBuf>,

    /// Write the output document to a file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,

    /// Seed for randomized sampling. Accepted for interface stability;
    /// every command here is deterministic and ignores it.
    #[arg(long, global = true, value_name = "SEED")]
    pub seed: Option<u64>,

    /// Worker threads for pairwise checks. Accepted for interface
    /// stability; execution is single-threaded and output never depends
    /// on it.
    #[arg(long, global = true, value_name = "COUNT")]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NamedArg {
    Star,
    A23,
    Hm,
}

impl NamedArg {
    fn family(self) -> NamedFamily {
        match self {
            NamedArg::Star => NamedFamily::Star,
            NamedArg::A23 => NamedFamily::A23,
            NamedArg::Hm => NamedFamily::HiltonMilner,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the family generated by the input sets.
    Build,
    /// Decide the strong-intersection criterion for every pair of input
    /// sets; on failure print the disjoint witness pair.
    #[command(name = "check-generators")]
    CheckGenerators,
    /// Brute-force check that the input family is intersecting.
    #[command(name = "check-family")]
    CheckFamily,
    /// Report both left-compressed predicates for the input family.
    #[command(name = "compressed?")]
    Compressed,
    /// Shift the input family to its left-compressed fixed point; applied
    /// shifts go to stderr as "i j moved" lines.
    Compress,
    /// Extract the maximal sets of a left-compressed family as
    /// generators.
    Generators,
    /// Truncate every generator to its type prefix and prune dominated
    /// ones.
    Pi,
    /// Index condition for a pair of k-sets selected with --pair.
    Bond {
        /// 1-based indices of the two sets to compare (defaults to the
        /// only two sets when the document has exactly two).
        #[arg(long, num_args = 2, value_names = ["I", "J"])]
        pair: Option<Vec<usize>>,
    },
    /// Emit a named reference family.
    Named {
        #[arg(value_enum)]
        name: NamedArg,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// Test whether the input family is maximal intersecting.
    #[command(name = "maximal?")]
    Maximal,
    /// Extend a left-compressed intersecting family by whole closures
    /// until none is addable; the separate maximality verdict goes to
    /// stderr.
    Extend,
    /// Catalogue every maximal left-compressed intersecting family of the
    /// context.
    #[command(name = "enumerate-mlcif")]
    EnumerateMlcif {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Refuse to enumerate when C(n, k) exceeds this many k-sets.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
        budget: usize,
    },
    /// Exhaustive strong-intersection oracle for a pair of sets selected
    /// with --pair.
    Oracle {
        /// 1-based indices of the two sets to compare (defaults to the
        /// only two sets when the document has exactly two).
        #[arg(long, num_args = 2, value_names = ["I", "J"])]
        pair: Option<Vec<usize>>,
    },
}

/// What a run produced; the binary prints the streams and exits with the
/// code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String, stderr: String) -> Self {
        Self {
            code: 0,
            stdout,
            stderr,
        }
    }

    fn fail(stdout: String) -> Self {
        Self {
            code: 1,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Self {
            code: 2,
            stdout: String::new(),
            stderr,
        }
    }
}

/// Parses argv and runs the command. `read_stdin` is only invoked when no
/// --input file is given and the command needs a document.
pub fn run(argv: &[&str], read_stdin: impl FnOnce() -> io::Result<String>) -> Outcome {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render().to_string();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => Outcome::usage(rendered),
            };
        }
    };
    execute(cli, read_stdin)
}

fn execute(cli: Cli, read_stdin: impl FnOnce() -> io::Result<String>) -> Outcome {
    let loader = DocumentLoader {
        input: cli.input.clone(),
        read_stdin,
    };
    let result = match cli.command {
        Command::Build => loader.load().map(|doc| {
            let family = as_family(&doc);
            document_outcome(InputDocument::family(family), String::new())
        }),
        Command::CheckGenerators => loader.load().map(|doc| check_generators(&doc)),
        Command::CheckFamily => loader.load().map(|doc| check_family(&doc)),
        Command::Compressed => loader.load().map(|doc| compressed(&doc)),
        Command::Compress => loader.load().map(|doc| {
            let (fixed, report) = compress(&as_family(&doc));
            let mut stderr = String::new();
            for shift in &report.applied {
                let _ = writeln!(stderr, "{} {} {}", shift.i, shift.j, shift.moved);
            }
            document_outcome(InputDocument::family(fixed), stderr)
        }),
        Command::Generators => loader.load().map(|doc| generators_cmd(&doc)),
        Command::Pi => loader.load().map(|doc| pi_cmd(&doc)),
        Command::Bond { ref pair } => loader.load().map(|doc| bond_cmd(&doc, pair.as_deref())),
        Command::Named { name, n, k } => named_cmd(name, n, k),
        Command::Maximal => loader.load().map(|doc| maximal_cmd(&doc)),
        Command::Extend => loader.load().map(|doc| extend_cmd(&doc)),
        Command::EnumerateMlcif { n, k, budget } => enumerate_cmd(n, k, budget),
        Command::Oracle { ref pair } => loader.load().map(|doc| oracle_cmd(&doc, pair.as_deref())),
    };
    let outcome = match result {
        Ok(outcome) => outcome,
        Err(usage) => usage,
    };
    finish(outcome, &cli.output)
}

/// Routes the document part of an outcome to --output when requested.
/// Certificates and reports stay on their streams either way.
fn finish(outcome: Outcome, output: &Option<PathBuf>) -> Outcome {
    let Some(path) = output else {
        return outcome;
    };
    if outcome.code != 0 {
        return outcome;
    }
    if let Err(err) = fs::write(path, &outcome.stdout) {
        return Outcome::usage(format!("cannot write {}: {err}", path.display()));
    }
    Outcome {
        code: outcome.code,
        stdout: String::new(),
        stderr: outcome.stderr,
    }
}

struct DocumentLoader<F> {
    input: Option<PathBuf>,
    read_stdin: F,
}

impl<F: FnOnce() -> io::Result<String>> DocumentLoader<F> {
    fn load(self) -> Result<InputDocument, Outcome> {
        let text = match self.input {
            Some(path) => fs::read_to_string(&path)
                .map_err(|err| Outcome::usage(format!("cannot read {}: {err}", path.display())))?,
            None => (self.read_stdin)()
                .map_err(|err| Outcome::usage(format!("cannot read stdin: {err}")))?,
        };
        parse_document(&text).map_err(|err| Outcome::usage(err.to_string()))
    }
}

/// Family members are valid k-set generators, so either payload yields a
/// collection.
fn as_generators(doc: &InputDocument) -> GeneratorCollection {
    match doc.payload() {
        Payload::Generators(gc) => gc.clone(),
        Payload::Family(f) => GeneratorCollection::from_dedup(
            f.context(),
            f.members().iter().map(GeneratorSet::from_kset).collect(),
        ),
    }
}

/// A generator payload is expanded into the family it generates.
fn as_family(doc: &InputDocument) -> SetFamily {
    match doc.payload() {
        Payload::Family(f) => f.clone(),
        Payload::Generators(gc) => build_family(gc),
    }
}

fn document_outcome(doc: InputDocument, stderr: String) -> Outcome {
    Outcome::ok(doc.to_string(), stderr)
}

fn check_generators(doc: &InputDocument) -> Outcome {
    let gc = as_generators(doc);
    let report = check_collection(&gc).expect("parsed documents are nonempty");
    let gens = gc.generators();
    let mut out = String::new();
    for pair in &report.pairs {
        match pair.level {
            Some(level) => {
                let _ = writeln!(
                    out,
                    "pair ({},{}) level {level}",
                    gens[pair.left], gens[pair.right]
                );
            }
            None => {
                let _ = writeln!(out, "pair ({},{}) fail", gens[pair.left], gens[pair.right]);
            }
        }
    }
    match report.failure {
        None => Outcome::ok(out, String::new()),
        Some(failure) => {
            let (a, b) = &failure.trace.pair;
            let _ = writeln!(out, "witness pair ({a},{b})");
            Outcome::fail(out)
        }
    }
}

fn check_family(doc: &InputDocument) -> Outcome {
    let family = as_family(doc);
    match intersecting_violation(&family).expect("parsed documents are nonempty") {
        None => {
            let common = has_common_element(&family).expect("nonempty");
            let out = format!(
                "intersecting\ncommon-element {common} (conventions differ on which case is called \"trivial\")\n"
            );
            Outcome::ok(out, String::new())
        }
        Some((a, b)) => Outcome::fail(format!("not intersecting\nwitness pair ({a},{b})\n")),
    }
}

fn compressed(doc: &InputDocument) -> Outcome {
    let family = as_family(doc);
    let down = left_compressed_violation(&family);
    let stable = shift_stability_violation(&family);
    let mut out = String::new();
    let _ = writeln!(out, "down-closed {}", down.is_none());
    let _ = writeln!(out, "shift-stable {}", stable.is_none());
    let mut code = 0;
    if let Some((member, missing)) = down {
        let _ = writeln!(out, "violation member {member} missing {missing}");
        code = 1;
    }
    if let Some((i, j, member)) = stable {
        let _ = writeln!(out, "violation ({i},{j})-shift of {member} missing");
        code = 1;
    }
    Outcome {
        code,
        stdout: out,
        stderr: String::new(),
    }
}

fn generators_cmd(doc: &InputDocument) -> Outcome {
    let family = as_family(doc);
    match extract_generators(&family) {
        Ok(gc) => document_outcome(InputDocument::generators(gc), String::new()),
        Err(Error::NotLeftCompressed { member, missing }) => Outcome::fail(format!(
            "not left-compressed\nviolation member {member} missing {missing}\n"
        )),
        Err(err) => Outcome::usage(err.to_string()),
    }
}

fn pi_cmd(doc: &InputDocument) -> Outcome {
    let gc = as_generators(doc);
    match pi_collection(&gc) {
        Ok(truncated) => document_outcome(InputDocument::generators(truncated), String::new()),
        Err(Error::IncompatibleGenerator { generator }) => Outcome::fail(format!(
            "incompatible generator {generator} (smallest element exceeds k)\n"
        )),
        Err(err) => Outcome::usage(err.to_string()),
    }
}

fn select_pair<'a, T>(sets: &'a [T], pair: Option<&[usize]>) -> Result<(&'a T, &'a T), Outcome> {
    let (i, j) = match pair {
        Some(&[i, j]) => (i, j),
        Some(_) => return Err(Outcome::usage("--pair takes exactly two indices")),
        None if sets.len() == 2 => (1, 2),
        None => {
            return Err(Outcome::usage(format!(
                "--pair I J is required (document has {} sets)",
                sets.len()
            )))
        }
    };
    for idx in [i, j] {
        if idx < 1 || idx > sets.len() {
            return Err(Outcome::usage(format!(
                "pair index {idx} outside 1..={}",
                sets.len()
            )));
        }
    }
    Ok((&sets[i - 1], &sets[j - 1]))
}

fn bond_cmd(doc: &InputDocument, pair: Option<&[usize]>) -> Outcome {
    let ctx = doc.context();
    let gc = as_generators(doc);
    let (left, right) = match select_pair(gc.generators(), pair) {
        Ok(pair) => pair,
        Err(outcome) => return outcome,
    };
    let k = ctx.k() as usize;
    if left.len() != k || right.len() != k {
        return Outcome::usage(format!(
            "bond compares k-sets; selected sets have {} and {} elements (k={k})",
            left.len(),
            right.len()
        ));
    }
    let a = KSet::new(left.elements().to_vec(), &ctx).expect("validated k-set");
    let b = KSet::new(right.elements().to_vec(), &ctx).expect("validated k-set");
    match bond_indices(&a, &b).expect("equal sizes") {
        Some((i, j)) => Outcome::ok(format!("bond holds i {i} j {j}\n"), String::new()),
        None => {
            let trace = witness_construct(left, right, &ctx)
                .expect("bond failure implies the criterion fails");
            let (wa, wb) = &trace.pair;
            Outcome::fail(format!("bond fails\nwitness pair ({wa},{wb})\n"))
        }
    }
}

fn named_cmd(name: NamedArg, n: u32, k: u32) -> Result<Outcome, Outcome> {
    let ctx = GroundContext::new(n, k).map_err(|err| Outcome::usage(err.to_string()))?;
    let family = named_family(name.family(), &ctx);
    Ok(document_outcome(InputDocument::family(family), String::new()))
}

fn maximal_cmd(doc: &InputDocument) -> Outcome {
    let family = as_family(doc);
    match is_maximal_intersecting(&family) {
        Ok(verdict) if verdict.is_maximal => Outcome::ok("maximal\n".into(), String::new()),
        Ok(verdict) => {
            let blocker = verdict.blocker.expect("non-maximal verdicts carry a blocker");
            Outcome::fail(format!("not maximal\nblocker {blocker}\n"))
        }
        Err(Error::NotIntersecting { left, right }) => Outcome::fail(format!(
            "not intersecting\nwitness pair ({left},{right})\n"
        )),
        Err(err) => Outcome::usage(err.to_string()),
    }
}

fn extend_cmd(doc: &InputDocument) -> Outcome {
    let family = as_family(doc);
    match crate::mlcif::greedy_extend(&family) {
        Ok(extended) => {
            let verdict =
                is_maximal_intersecting(&extended).expect("extended families are intersecting");
            let stderr = match verdict.blocker {
                None => "maximal-intersecting true\n".to_string(),
                Some(blocker) => format!("maximal-intersecting false blocker {blocker}\n"),
            };
            document_outcome(InputDocument::family(extended), stderr)
        }
        Err(Error::NotLeftCompressed { member, missing }) => Outcome::fail(format!(
            "not left-compressed\nviolation member {member} missing {missing}\n"
        )),
        Err(Error::NotIntersecting { left, right }) => Outcome::fail(format!(
            "not intersecting\nwitness pair ({left},{right})\n"
        )),
        Err(err) => Outcome::usage(err.to_string()),
    }
}

fn enumerate_cmd(n: u32, k: u32, budget: usize) -> Result<Outcome, Outcome> {
    let ctx = GroundContext::new(n, k).map_err(|err| Outcome::usage(err.to_string()))?;
    match enumerate_mlcif(&ctx, budget) {
        Ok(catalogue) => Ok(Outcome::ok(format_catalogue(&catalogue), String::new())),
        Err(Error::BudgetExceeded { vertices, budget }) => Err(Outcome::usage(format!(
            "refusing to enumerate: {vertices} k-sets exceed the budget {budget} (raise --budget)"
        ))),
        Err(err) => Err(Outcome::usage(err.to_string())),
    }
}

fn format_catalogue(catalogue: &MlcifCatalogue) -> String {
    let mut out = format!(
        "# mlcif catalogue n={} k={}: {} families\n",
        catalogue.context.n(),
        catalogue.context.k(),
        catalogue.entries.len()
    );
    for (idx, entry) in catalogue.entries.iter().enumerate() {
        out.push('\n');
        let _ = writeln!(out, "# family {}", idx + 1);
        let gens: Vec<String> = entry
            .generators
            .generators()
            .iter()
            .map(|g| g.to_string())
            .collect();
        let _ = writeln!(out, "# generators: {}", gens.join(" "));
        out.push_str(&InputDocument::family(entry.family.clone()).to_string());
    }
    out
}

fn oracle_cmd(doc: &InputDocument, pair: Option<&[usize]>) -> Outcome {
    let gc = as_generators(doc);
    let (left, right) = match select_pair(gc.generators(), pair) {
        Ok(pair) => pair,
        Err(outcome) => return outcome,
    };
    match oracle_witness(left.elements(), right.elements()) {
        None => Outcome::ok("strongly intersecting\n".into(), String::new()),
        Some((ga, hb)) => Outcome::fail(format!(
            "not strongly intersecting\nwitness pair ({},{})\n",
            set_string(&ga),
            set_string(&hb)
        )),
    }
}

fn set_string(elements: &[u32]) -> String {
    let inner: Vec<String> = elements.iter().map(u32::to_string).collect();
    format!("{{{}}}", inner.join(","))
}
