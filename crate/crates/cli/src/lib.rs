//! `ngverify`: generate family graphs, compute invariants, and verify the
//! registered closed-form claims against the exact solvers.
//!
//! Exit codes: 0 on success, 1 when a verification report disagrees with the
//! committed goldens, 2 on any usage or input error.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ng_core::claims::{self, golden, Oracle, Provenance, SweepRequest};
use ng_core::formats;
use ng_core::invariants::InvariantReport;
use ng_core::{Family, FamilySpec, Graph};

pub const THREADS_ENV: &str = "NG_VERIFY_THREADS";

#[derive(Parser, Debug)]
#[command(name = "ngverify", version, about = "Independence, cover and matching numbers of graph families and their complements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit a family instance, e.g. `wheel:4` or `armed_crown:3,4`.
    Gen {
        spec: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report alpha, beta and nu for a graph and its complement.
    Invariants {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = InvariantFormat::Json)]
        format: InvariantFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep claims, print the report, and compare it with the goldens.
    Verify {
        #[command(flatten)]
        target: VerifyTarget,
        /// Upper bound of the `n` range.
        #[arg(long)]
        n_max: Option<usize>,
        /// Upper bound of the `m` range (two-parameter families).
        #[arg(long)]
        m_max: Option<usize>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Md)]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Inspect the claim registry.
    Claims {
        #[command(subcommand)]
        action: ClaimsAction,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Family spec such as `complete:5`.
    spec: Option<String>,
    /// graph6 text, or `-` to read it from standard input.
    #[arg(long)]
    graph6: Option<String>,
    /// Edge-list file, or `-` for standard input.
    #[arg(long)]
    edgelist: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct VerifyTarget {
    /// Claim id such as `C6`.
    claim: Option<String>,
    /// Every registered claim.
    #[arg(long)]
    all: bool,
}

#[derive(Subcommand, Debug)]
enum ClaimsAction {
    List {
        #[arg(long)]
        family: Option<String>,
        #[arg(long, value_enum)]
        provenance: Option<ProvenanceArg>,
        #[arg(long, value_enum, default_value_t = InvariantFormat::Md)]
        format: InvariantFormat,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraphFormat {
    Graph6,
    Dot,
    Edgelist,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum InvariantFormat {
    Json,
    Md,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
    Md,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ProvenanceArg {
    TheoremStatement,
    ProofDerived,
}

/// A failure that ends the run with exit code 2.
#[derive(Debug)]
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

/// Runs one invocation; `args[0]` is the program name.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                2
            } else {
                let _ = write!(stdout, "{rendered}");
                0
            };
        }
    };
    let mut io = Io {
        stdin,
        stdout,
        stderr,
    };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(UsageError(message)) => {
            let _ = writeln!(io.stderr, "ngverify: {}", message.replace('\n', " "));
            2
        }
    }
}

fn dispatch(command: Command, io: &mut Io) -> Result<i32, UsageError> {
    match command {
        Command::Gen { spec, format, out } => {
            let g = spec.parse::<FamilySpec>()?.build();
            let text = match format {
                GraphFormat::Graph6 => formats::encode_graph6(&g)? + "\n",
                GraphFormat::Dot => formats::to_dot(&g, None)?,
                GraphFormat::Edgelist => formats::to_edge_list(&g),
            };
            emit(io, out, &text)?;
            Ok(0)
        }
        Command::Invariants { input, format, out } => {
            let g = read_input(input, io)?;
            let report = InvariantReport::compute(&g);
            let text = match format {
                InvariantFormat::Json => report.to_json(),
                InvariantFormat::Md => report.to_markdown(),
            };
            emit(io, out, &text)?;
            Ok(0)
        }
        Command::Verify {
            target,
            n_max,
            m_max,
            format,
            out,
        } => verify(target, n_max, m_max, format, out, io),
        Command::Claims {
            action:
                ClaimsAction::List {
                    family,
                    provenance,
                    format,
                },
        } => {
            let family = family
                .map(|f| Family::from_name(&f).ok_or_else(|| UsageError(format!("unknown family '{f}'"))))
                .transpose()?;
            let provenance = provenance.map(|p| match p {
                ProvenanceArg::TheoremStatement => Provenance::TheoremStatement,
                ProvenanceArg::ProofDerived => Provenance::ProofDerived,
            });
            let listed = claims::list_claims(family, provenance);
            let text = match format {
                InvariantFormat::Json => claims_json(&listed),
                InvariantFormat::Md => claims_markdown(&listed),
            };
            emit(io, None, &text)?;
            Ok(0)
        }
    }
}

fn read_input(input: InputArgs, io: &mut Io) -> Result<Graph, UsageError> {
    let mut read_source = |path: &PathBuf| -> Result<String, UsageError> {
        if path.as_os_str() == "-" {
            let mut text = String::new();
            io.stdin.read_to_string(&mut text)?;
            Ok(text)
        } else {
            fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))
        }
    };
    Ok(match input {
        InputArgs { spec: Some(spec), .. } => spec.parse::<FamilySpec>()?.build(),
        InputArgs {
            graph6: Some(text), ..
        } => {
            let text = if text == "-" {
                read_source(&PathBuf::from("-"))?
            } else {
                text
            };
            formats::decode_graph6(&text)?
        }
        InputArgs {
            edgelist: Some(path),
            ..
        } => formats::parse_edge_list(&read_source(&path)?)?,
        _ => return Err(UsageError("no input given".into())),
    })
}

fn verify(
    target: VerifyTarget,
    n_max: Option<usize>,
    m_max: Option<usize>,
    format: ReportFormat,
    out: Option<PathBuf>,
    io: &mut Io,
) -> Result<i32, UsageError> {
    let threads = match std::env::var(THREADS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(t) if t > 0 => Some(t),
            _ => return Err(UsageError(format!("{THREADS_ENV} must be a positive integer, got '{v}'"))),
        },
        Err(_) => None,
    };

    let ids: Vec<String> = match (target.claim, target.all) {
        (Some(id), false) => vec![id],
        _ => claims::registry().claims().iter().map(|c| c.id.clone()).collect(),
    };
    let mut requests = Vec::with_capacity(ids.len());
    for id in ids {
        let mut request = SweepRequest::default_for(&id)?;
        let names = claims::registry().get(&id)?.parameter_names();
        for (range, name) in request.ranges.iter_mut().zip(names) {
            let cap = match *name {
                "n" => n_max,
                "m" => m_max,
                _ => None,
            };
            if let Some(hi) = cap {
                *range = *range.start()..=hi;
            }
        }
        requests.push(request);
    }

    let report = claims::sweep(&requests, Oracle::Exact, threads)?;
    let text = match format {
        ReportFormat::Json => report.to_json(),
        ReportFormat::Csv => report.to_csv(),
        ReportFormat::Md => report.to_markdown(),
    };
    emit(io, out, &text)?;

    let check = golden::check_against_goldens(&report)?;
    for m in &check.mismatches {
        writeln!(
            io.stderr,
            "golden mismatch: {} {} {}: golden {:?}/{:?}/{}, got {:?}/{:?}/{}",
            m.golden.claim_id,
            m.golden.params,
            m.golden.quantity,
            m.golden.expected,
            m.golden.oracle,
            m.golden.verdict.name(),
            m.actual.expected,
            m.actual.oracle,
            m.actual.verdict.name()
        )?;
    }
    Ok(if check.is_ok() { 0 } else { 1 })
}

fn emit(io: &mut Io, out: Option<PathBuf>, text: &str) -> Result<(), UsageError> {
    match out {
        Some(path) => fs::write(&path, text).map_err(|e| UsageError(format!("{}: {e}", path.display()))),
        None => Ok(io.stdout.write_all(text.as_bytes())?),
    }
}

fn claims_markdown(listed: &[&claims::Claim]) -> String {
    let mut out = String::from("| id | family | provenance | domain | formulas |\n|---|---|---|---|---|\n");
    for c in listed {
        let formulas: Vec<String> = c
            .formulas
            .iter()
            .map(|(q, f)| format!("{q} = {f}"))
            .collect();
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} |\n",
            c.id,
            c.family,
            c.provenance,
            c.domain_text(),
            formulas.join("<br>")
        ));
    }
    out
}

fn claims_json(listed: &[&claims::Claim]) -> String {
    let entries: Vec<claims::ClaimListing> = listed.iter().map(|c| claims::ClaimListing::from(*c)).collect();
    claims::ClaimListing::to_json(&entries)
}
