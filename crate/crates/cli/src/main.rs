//! Command-line front end. Every subcommand maps to one library call, prints
//! a one-line summary (plus deterministic detail lines) in human mode or a
//! versioned `{status, summary, payload}` document with `--json`, and exits
//! 0 exactly when the status is ok.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use braidmorita_core::Error;
use commands::{DistinguishSpec, Outcome, RepKind, RepSpec};

#[derive(Parser)]
#[command(
    name = "braidmorita",
    version,
    about = "Exact braid-group representations of quasitriangular Hopf algebras \
             and their comodule algebras"
)]
struct Cli {
    /// Print the full result as JSON: {schema_version, status, summary, payload}.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the defining axioms of a serialized object.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Build and interrogate braid-group representations.
    #[command(subcommand)]
    Braidrep(BraidrepCommand),
    /// Solve equation systems over a comodule algebra.
    #[command(subcommand)]
    Classify(ClassifyCommand),
    /// Subgroup enumeration and conjugacy classification for group algebras.
    #[command(subcommand)]
    Group(GroupCommand),
    /// Compare two carriers over one host by their computable invariants.
    Distinguish(DistinguishArgs),
    /// List or export the built-in catalog.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Associativity and unit laws of an algebra file.
    Algebra {
        #[arg(long)]
        algebra: PathBuf,
    },
    /// All bialgebra and antipode axioms of a Hopf file.
    Hopf {
        #[arg(long)]
        hopf: PathBuf,
    },
    /// The R-matrix axioms of the rmatrix stored in a Hopf file.
    Rmatrix {
        #[arg(long)]
        hopf: PathBuf,
    },
    /// The comodule-algebra axioms of a comodule file.
    Comodule {
        #[arg(long)]
        comodule: PathBuf,
    },
    /// The K-matrix axioms of an element of H⊗B given in label syntax.
    Kmatrix {
        #[arg(long)]
        hopf: PathBuf,
        #[arg(long)]
        comodule: PathBuf,
        /// Element of H⊗B, e.g. "1⊗1 + g⊗1".
        #[arg(long)]
        k: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RepType {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "BC", alias = "bc")]
    Bc,
    #[value(name = "D", alias = "d")]
    D,
}

impl From<RepType> for RepKind {
    fn from(t: RepType) -> RepKind {
        match t {
            RepType::A => RepKind::A,
            RepType::Bc => RepKind::Bc,
            RepType::D => RepKind::D,
        }
    }
}

#[derive(Args)]
struct RepArgs {
    /// Hopf file with an rmatrix field.
    #[arg(long)]
    hopf: PathBuf,
    /// Comodule file (types BC and D only).
    #[arg(long)]
    comodule: Option<PathBuf>,
    /// K-matrix in label syntax (types BC and D only).
    #[arg(long)]
    k: Option<String>,
    /// Coxeter type of the braid group presentation.
    #[arg(long = "type", value_enum)]
    rep_type: RepType,
    /// Tensor exponent: the representation acts on H^⊗n (⊗ B).
    #[arg(long, default_value_t = 2)]
    n: usize,
}

impl RepArgs {
    fn spec(&self) -> RepSpec<'_> {
        RepSpec {
            hopf: &self.hopf,
            comodule: self.comodule.as_deref(),
            k: self.k.as_deref(),
            kind: self.rep_type.into(),
            n: self.n,
        }
    }
}

#[derive(Subcommand)]
enum BraidrepCommand {
    /// Construct the representation and report its shape.
    Build(RepArgs),
    /// Verify every defining relation of the presentation.
    Check(RepArgs),
    /// Trace of one braid word, e.g. --word "s1 t s1^-1".
    Trace {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long)]
        word: String,
    },
    /// Traces of all positive words up to a length bound.
    Signature {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long, default_value_t = 3)]
        maxlen: usize,
    },
}

#[derive(Subcommand)]
enum ClassifyCommand {
    /// Solve the K-matrix equations; FINITE, PARAMETRIC, or RESIDUAL.
    Kmatrices {
        #[arg(long)]
        hopf: PathBuf,
        #[arg(long)]
        comodule: PathBuf,
    },
}

#[derive(Subcommand)]
enum GroupCommand {
    /// All subgroups, each with its centralizer.
    Subgroups {
        /// Built-in name (Cn, C2xC2, S3) or path to a group file.
        #[arg(long)]
        group: String,
    },
    /// Conjugation classes of (subgroup, centralizer element) pairs.
    Classify {
        #[arg(long)]
        group: String,
        /// Central involution u selecting the R-matrix, by label.
        #[arg(long)]
        u: String,
    },
}

#[derive(Args)]
struct DistinguishArgs {
    /// Hopf file with an rmatrix field; both carriers must live over it.
    #[arg(long)]
    hopf: PathBuf,
    #[arg(long)]
    left_comodule: PathBuf,
    /// Left K-matrix in label syntax.
    #[arg(long)]
    left_k: String,
    #[arg(long)]
    right_comodule: PathBuf,
    /// Right K-matrix in label syntax.
    #[arg(long)]
    right_k: String,
    /// Tensor exponent for the trace search.
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Longest word tried in the trace search.
    #[arg(long, default_value_t = 3)]
    maxlen: usize,
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Names, dimensions, carriers, and known K-matrices of every entry.
    List,
    /// Write one entry's host and carrier files into a directory.
    Export {
        #[arg(long)]
        name: String,
        #[arg(long)]
        dir: PathBuf,
    },
}

fn dispatch(command: &Command) -> Result<Outcome, Error> {
    match command {
        Command::Verify(VerifyCommand::Algebra { algebra }) => commands::verify_algebra(algebra),
        Command::Verify(VerifyCommand::Hopf { hopf }) => commands::verify_hopf(hopf),
        Command::Verify(VerifyCommand::Rmatrix { hopf }) => commands::verify_rmatrix(hopf),
        Command::Verify(VerifyCommand::Comodule { comodule }) => {
            commands::verify_comodule(comodule)
        }
        Command::Verify(VerifyCommand::Kmatrix { hopf, comodule, k }) => {
            commands::verify_kmatrix(hopf, comodule, k)
        }
        Command::Braidrep(BraidrepCommand::Build(args)) => commands::braidrep_build(&args.spec()),
        Command::Braidrep(BraidrepCommand::Check(args)) => commands::braidrep_check(&args.spec()),
        Command::Braidrep(BraidrepCommand::Trace { rep, word }) => {
            commands::braidrep_trace(&rep.spec(), word)
        }
        Command::Braidrep(BraidrepCommand::Signature { rep, maxlen }) => {
            commands::braidrep_signature(&rep.spec(), *maxlen)
        }
        Command::Classify(ClassifyCommand::Kmatrices { hopf, comodule }) => {
            commands::classify_kmatrices(hopf, comodule)
        }
        Command::Group(GroupCommand::Subgroups { group }) => commands::group_subgroups(group),
        Command::Group(GroupCommand::Classify { group, u }) => commands::group_classify(group, u),
        Command::Distinguish(args) => commands::run_distinguish(&DistinguishSpec {
            hopf: &args.hopf,
            left_comodule: &args.left_comodule,
            left_k: &args.left_k,
            right_comodule: &args.right_comodule,
            right_k: &args.right_k,
            n: args.n,
            maxlen: args.maxlen,
        }),
        Command::Catalog(CatalogCommand::List) => commands::catalog_list(),
        Command::Catalog(CatalogCommand::Export { name, dir }) => {
            commands::catalog_export(name, dir)
        }
    }
}

/// Library errors keep their names so scripts can match on them.
fn error_name(e: &Error) -> String {
    let debug = format!("{e:?}");
    debug
        .split(|c: char| c == '(' || c == '{' || c.is_whitespace())
        .next()
        .unwrap_or("Error")
        .to_string()
}

fn render(result: Result<Outcome, Error>, as_json: bool) -> ExitCode {
    use std::io::Write;

    let (outcome, hard_error) = match result {
        Ok(o) => (o, false),
        Err(e) => {
            let name = error_name(&e);
            let outcome = Outcome {
                ok: false,
                summary: format!("{name}: {e}"),
                payload: json!({ "error": { "name": name, "message": e.to_string() } }),
                detail: Vec::new(),
            };
            (outcome, true)
        }
    };
    // Write failures (e.g. a closed pipe under `head`) must not turn a
    // finished computation into a panic; drop the output and keep the code.
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if as_json {
        let doc = json!({
            "schema_version": 1,
            "status": if outcome.ok { "ok" } else { "fail" },
            "summary": outcome.summary,
            "payload": outcome.payload,
        });
        let text = serde_json::to_string_pretty(&doc).expect("document serializes");
        let _ = writeln!(out, "{text}");
    } else if hard_error {
        eprintln!("error: {}", outcome.summary);
    } else {
        let _ = writeln!(out, "{}", outcome.summary);
        for line in &outcome.detail {
            if writeln!(out, "{line}").is_err() {
                break;
            }
        }
    }
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

/// BRAIDMORITA_THREADS caps the worker pool used for relation checking and
/// signature fan-out; unset or invalid values leave the default.
fn configure_threads() {
    if let Ok(var) = std::env::var("BRAIDMORITA_THREADS") {
        if let Ok(n) = var.trim().parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    render(dispatch(&cli.command), cli.json)
}
