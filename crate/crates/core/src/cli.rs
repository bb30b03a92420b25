//! The `sublabel` command line: `construct`, `verify`, `search`, `export`.
//!
//! Exit codes: 0 success (or solutions found), 1 negative result (both
//! verdicts `None`, or an exhaustive search with no solution), 2 usage or
//! validation error.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::constructions::{construct, LabelingKind};
use crate::document::{render_report, to_dot, LabelingDocument};
use crate::graph::{build_family, Digraph, Family, Orientation};
use crate::search::{search, SearchMode, SearchQuery, Side, Target, TargetClass, DEFAULT_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "sublabel",
    version,
    about = "Subtractive magic and antimagic total labelings of digraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a family member with one of its explicit labelings.
    Construct(ConstructArgs),
    /// Classify the labeling in a document.
    Verify(InputArgs),
    /// Exhaustively count labelings of a class.
    Search(SearchArgs),
    /// Render a document as DOT or normalized JSON.
    Export(ExportArgs),
}

#[derive(Debug, Args)]
struct FamilyArgs {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long, value_parser = parse_orientation)]
    orientation: Option<Orientation>,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Labeling kind; omit for a graph-only document.
    #[arg(long, value_parser = parse_kind)]
    labeling: Option<LabelingKind>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Document path; `-` or absent reads stdin.
    input: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long, value_parser = parse_family, required_unless_present = "input")]
    family: Option<Family>,
    #[arg(long, required_unless_present = "input")]
    n: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long, value_parser = parse_orientation)]
    orientation: Option<Orientation>,
    /// Read the digraph from a document instead of a family.
    #[arg(long, conflicts_with_all = ["family", "n", "t", "orientation"])]
    input: Option<PathBuf>,
    /// saml, svml, saal, sval, sa-al, sv-al (or arc-magic, vertex-magic, ...).
    #[arg(long)]
    class: String,
    /// First term of the progression for sa-al / sv-al.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<i64>,
    /// Common difference for sa-al / sv-al.
    #[arg(long)]
    d: Option<i64>,
    #[arg(long)]
    strong: bool,
    #[arg(long)]
    strong_star: bool,
    /// count, first, or collect:K.
    #[arg(long, default_value = "count", value_parser = parse_mode)]
    mode: SearchMode,
    /// Largest |V|+|A| searched.
    #[arg(long, env = "SUBLABEL_SEARCH_CAP", default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
}

#[derive(Debug, Args)]
struct ExportArgs {
    #[arg(long, value_enum)]
    format: ExportFormat,
    input: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
        .map_err(|e: crate::graph::GraphError| e.to_string())
}

fn parse_orientation(s: &str) -> Result<Orientation, String> {
    s.parse()
        .map_err(|e: crate::graph::GraphError| e.to_string())
}

fn parse_kind(s: &str) -> Result<LabelingKind, String> {
    s.parse()
        .map_err(|e: crate::constructions::ConstructionError| e.to_string())
}

fn parse_mode(s: &str) -> Result<SearchMode, String> {
    match s {
        "count" | "count-all" => Ok(SearchMode::CountAll),
        "first" | "first-witness" => Ok(SearchMode::FirstWitness),
        _ => {
            let k = s
                .strip_prefix("collect:")
                .or_else(|| s.strip_prefix("collect-up-to:"))
                .ok_or_else(|| format!("unknown mode '{s}' (count, first, collect:K)"))?;
            match k.parse::<usize>() {
                Ok(k) if k > 0 => Ok(SearchMode::CollectUpTo(k)),
                _ => Err(format!("collect needs a positive count, got '{k}'")),
            }
        }
    }
}

/// Streams handed to a command.
pub struct Io<'a> {
    pub stdin: &'a mut dyn Read,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, io: &mut Io<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                io.stdout.write_all(rendered.as_bytes())
            } else {
                io.stderr.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Construct(a) => cmd_construct(a, io),
        Command::Verify(a) => cmd_verify(a, io),
        Command::Search(a) => cmd_search(a, io),
        Command::Export(a) => cmd_export(a, io),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(io.stderr, "error: {msg}");
            EXIT_INVALID
        }
    }
}

type CmdResult = Result<i32, String>;

fn read_input(path: &Option<PathBuf>, io: &mut Io<'_>) -> Result<LabelingDocument, String> {
    let text = match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?
        }
        _ => {
            let mut s = String::new();
            io.stdin
                .read_to_string(&mut s)
                .map_err(|e| format!("stdin: {e}"))?;
            s
        }
    };
    LabelingDocument::parse(&text).map_err(|e| e.to_string())
}

fn emit(text: &str, out: &Option<PathBuf>, io: &mut Io<'_>) -> Result<(), String> {
    match out {
        Some(p) => {
            fs::write(p, text).map_err(|e| format!("{}: {e}", p.display()))?;
            let _ = writeln!(io.stderr, "wrote {}", p.display());
        }
        None => io
            .stdout
            .write_all(text.as_bytes())
            .map_err(|e| e.to_string())?,
    }
    Ok(())
}

const PATH_ARITHMETIC_NOTE: &str =
    "corrected construction: arc labels 2n-i give arc weights n+2..2n; \
     the variant with arc labels 2n+1-i is not a bijection onto 1..2n-1";

fn cmd_construct(a: ConstructArgs, io: &mut Io<'_>) -> CmdResult {
    let fa = a.family;
    let mut doc = match a.labeling {
        None => {
            let g =
                build_family(fa.family, fa.n, fa.t, fa.orientation).map_err(|e| e.to_string())?;
            LabelingDocument::from_graph(&g)
        }
        Some(kind) => {
            if let Some(o) = fa.orientation {
                let expected = kind.orientation(fa.family);
                if o != expected && LabelingKind::available_for(fa.family).contains(&kind) {
                    return Err(format!(
                        "{kind} for {} uses orientation {expected}, not {o}",
                        fa.family
                    ));
                }
            }
            let (g, l) = construct(fa.family, fa.n, fa.t, kind).map_err(|e| e.to_string())?;
            let mut doc = LabelingDocument::from_labeling(&g, &l);
            doc.labeling = Some(kind);
            doc.classify().map_err(|e| e.to_string())?;
            if fa.family == Family::Path && kind == LabelingKind::SaAl {
                doc.note = Some(PATH_ARITHMETIC_NOTE.to_string());
            }
            doc
        }
    };
    doc.format_version = crate::document::FORMAT_VERSION;
    emit(&(doc.to_json() + "\n"), &a.out, io)?;
    Ok(EXIT_OK)
}

fn cmd_verify(a: InputArgs, io: &mut Io<'_>) -> CmdResult {
    let mut doc = read_input(&a.input, io)?;
    let block = doc.classify().map_err(|e| e.to_string())?;
    let (g, l) = doc.labeled().map_err(|e| e.to_string())?;
    let mut text = render_report(&g, &l, &block);
    text.push_str(&doc.to_json());
    text.push('\n');
    io.stdout
        .write_all(text.as_bytes())
        .map_err(|e| e.to_string())?;
    let negative = block.arc == crate::Verdict::None && block.vertex == crate::Verdict::None;
    Ok(if negative { EXIT_NEGATIVE } else { EXIT_OK })
}

fn search_graph(a: &SearchArgs, io: &mut Io<'_>) -> Result<Digraph, String> {
    if a.input.is_some() {
        let doc = read_input(&a.input, io)?;
        return doc.graph().map_err(|e| e.to_string());
    }
    let family = a.family.expect("clap enforces --family");
    let n = a.n.expect("clap enforces --n");
    build_family(family, n, a.t, a.orientation).map_err(|e| e.to_string())
}

fn cmd_search(a: SearchArgs, io: &mut Io<'_>) -> CmdResult {
    let mut target: Target = a
        .class
        .parse()
        .map_err(|e: crate::search::SearchError| e.to_string())?;
    if a.a.is_some() || a.d.is_some() {
        match target.class {
            TargetClass::Arithmetic { .. } => {
                target.class = TargetClass::Arithmetic { a: a.a, d: a.d }
            }
            _ => return Err("--a/--d only apply to sa-al and sv-al".to_string()),
        }
    }
    let g = search_graph(&a, io)?;
    let q = SearchQuery::new(g, target)
        .strong(a.strong)
        .strong_star(a.strong_star)
        .mode(a.mode)
        .cap(a.cap)
        .workers(a.workers);
    let report = search(&q).map_err(|e| e.to_string())?;

    let side = match target.side {
        Side::Arc => "arc",
        Side::Vertex => "vertex",
    };
    let _ = writeln!(
        io.stderr,
        "{} ({side} side): {} solution(s), {} over {} nodes, {:.1} ms",
        target,
        report.solutions_found,
        if report.exhaustive {
            "exhaustive"
        } else {
            "stopped early"
        },
        report.nodes_visited,
        report.elapsed.as_secs_f64() * 1e3
    );
    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    io.stdout
        .write_all((json + "\n").as_bytes())
        .map_err(|e| e.to_string())?;
    Ok(if report.solutions_found > 0 {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}

fn cmd_export(a: ExportArgs, io: &mut Io<'_>) -> CmdResult {
    let mut doc = read_input(&a.input, io)?;
    let text = match a.format {
        ExportFormat::Dot => to_dot(&doc).map_err(|e| e.to_string())?,
        ExportFormat::Json => {
            doc.graph().map_err(|e| e.to_string())?;
            if doc.total_labeling().map_err(|e| e.to_string())?.is_some() {
                doc.classify().map_err(|e| e.to_string())?;
            }
            doc.to_json() + "\n"
        }
    };
    emit(&text, &a.out, io)?;
    Ok(EXIT_OK)
}
