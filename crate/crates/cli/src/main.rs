use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use jwdyck::projector::{jw, CoeffCache};
use jwdyck::report::{reproduce_paper, run_suite, Report, Suite};
use jwdyck::tiling::{gf, TilingSet};
use jwdyck::{Diagram, DottedPath, Element, Flavor, Method, Scalar};

const CACHE_ENV: &str = "JWDYCK_CACHE_DIR";
const MAX_A: usize = 9;
const MAX_B: usize = 6;

#[derive(Parser)]
#[command(name = "jwdyck", version, about = "Jones-Wenzl projections and Dyck tilings in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Lift the size limits (type A up to 9 strands, type B up to 6)
    #[arg(long, global = true)]
    allow_large: bool,
}

#[derive(Subcommand)]
enum Verb {
    /// Print the full projection on n strands
    Project {
        #[arg(long, value_enum)]
        flavor: FlavorArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Wenzl)]
        method: MethodArg,
    },
    /// Coefficient of one diagram in the projection
    Coeff {
        #[arg(long, value_enum)]
        flavor: FlavorArg,
        #[command(flatten)]
        input: DiagramInput,
        #[arg(long, value_enum, default_value_t = CoeffMethod::Recursive)]
        method: CoeffMethod,
    },
    /// Generating function of the (admissible) cover-inclusive tilings
    Gf {
        #[arg(long, value_enum)]
        flavor: FlavorArg,
        #[command(flatten)]
        input: DiagramInput,
    },
    /// List the tilings above a path with their weights
    Tilings {
        #[arg(long, value_enum)]
        flavor: FlavorArg,
        #[command(flatten)]
        input: DiagramInput,
    },
    /// Run invariant suites up to a given size
    Verify {
        #[arg(long, value_enum)]
        flavor: FlavorArg,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Include wall-clock times per check
        #[arg(long)]
        timings: bool,
    },
    /// Check every worked example against its published value
    ReproducePaper {
        #[arg(long)]
        timings: bool,
    },
}

#[derive(clap::Args)]
#[group(required = true, multiple = true)]
struct DiagramInput {
    /// Diagram text such as "(1,2)(3,6)*(4,5)(7,8)"
    #[arg(long, conflicts_with_all = ["path", "dots"])]
    diagram: Option<String>,
    /// Dyck word such as URUURRUR
    #[arg(long)]
    path: Option<String>,
    /// Dotted caps of the path such as "3-6,7-8"
    #[arg(long, requires = "path")]
    dots: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum FlavorArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Self {
        match f {
            FlavorArg::A => Flavor::A,
            FlavorArg::B => Flavor::B,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Wenzl,
    Morrison,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Wenzl => Method::Wenzl,
            MethodArg::Morrison => Method::Morrison,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CoeffMethod {
    Recursive,
    Tiling,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Relations,
    Projector,
    Equivalence,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Relations => Suite::Relations,
            SuiteArg::Projector => Suite::Projector,
            SuiteArg::Equivalence => Suite::Equivalence,
            SuiteArg::All => Suite::All,
        }
    }
}

fn usage(msg: impl std::fmt::Display) -> ! {
    Cli::command().error(ErrorKind::InvalidValue, msg).exit()
}

struct Output {
    text: String,
    ok: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if let Err(e) = emit(cli.out.as_deref(), &out.text) {
                eprintln!("error: {e:#}");
                return ExitCode::FAILURE;
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

/// Enforces the size limits, or warns on stderr when they are lifted.
fn guard(flavor: Flavor, n: usize, allow_large: bool) {
    let limit = match flavor {
        Flavor::A => MAX_A,
        Flavor::B => MAX_B,
    };
    if n <= limit {
        return;
    }
    if allow_large {
        eprintln!(
            "warning: type {flavor} on {n} strands exceeds the default limit of {limit}; \
             cost grows exponentially in n and may take a very long time"
        );
    } else {
        usage(format!(
            "type {flavor} is limited to {limit} strands (got {n}); pass --allow-large to override"
        ));
    }
}

fn parse_input(flavor: Flavor, input: &DiagramInput) -> (Diagram, DottedPath) {
    let d = match (&input.diagram, &input.path) {
        (Some(text), _) => text
            .parse::<Diagram>()
            .unwrap_or_else(|e| usage(format!("invalid --diagram {text:?}: {e}"))),
        (None, Some(path)) => {
            let p = DottedPath::parse(path, input.dots.as_deref())
                .unwrap_or_else(|e| usage(format!("invalid --path/--dots: {e}")));
            Diagram::from_path(&p)
        }
        (None, None) => usage("one of --diagram or --path is required"),
    };
    if let Err(e) = d.check_flavor(flavor) {
        usage(format!("diagram {d} is not a type {flavor} diagram: {e}"));
    }
    let p = d.to_path();
    (d, p)
}

fn pretty(v: &impl serde::Serialize) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn render_scalar(c: &Scalar, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => pretty(c)?,
        Format::Latex => format!("{}\n", c.to_latex()),
        Format::Text => format!("{}\n", c.to_text()),
    })
}

fn render_report(r: &Report, format: Format, timings: bool) -> Result<Output> {
    let text = match format {
        Format::Json => pretty(&r.to_json(timings))?,
        _ => r.to_text(timings),
    };
    Ok(Output { text, ok: r.passed() })
}

fn run(cli: &Cli) -> Result<Output> {
    let format = cli.format;
    match &cli.verb {
        Verb::Project { flavor, n, method } => {
            let flavor = Flavor::from(*flavor);
            guard(flavor, *n, cli.allow_large);
            let e = jw(flavor, *n, (*method).into())?;
            let text = match format {
                Format::Json => pretty(&e)?,
                Format::Latex => format!("{}\n", e.to_latex()),
                Format::Text => format!("{}\n", e.to_text()),
            };
            Ok(Output::ok(text))
        }
        Verb::Coeff { flavor, input, method } => {
            let flavor = Flavor::from(*flavor);
            let (d, p) = parse_input(flavor, input);
            if *method != CoeffMethod::Recursive {
                guard(flavor, d.n(), cli.allow_large);
            }
            match method {
                CoeffMethod::Recursive => Ok(Output::ok(render_scalar(&recursive(flavor, &d)?, format)?)),
                CoeffMethod::Tiling => Ok(Output::ok(render_scalar(&gf(flavor, &p), format)?)),
                CoeffMethod::Full => full(flavor, &d, &p, format),
            }
        }
        Verb::Gf { flavor, input } => {
            let flavor = Flavor::from(*flavor);
            let (d, p) = parse_input(flavor, input);
            guard(flavor, d.n(), cli.allow_large);
            Ok(Output::ok(render_scalar(&gf(flavor, &p), format)?))
        }
        Verb::Tilings { flavor, input } => {
            let flavor = Flavor::from(*flavor);
            if format == Format::Latex {
                usage("tilings support --format json or text");
            }
            let (d, p) = parse_input(flavor, input);
            guard(flavor, d.n(), cli.allow_large);
            let set = TilingSet::build(flavor, &p);
            let text = match format {
                Format::Json => pretty(&set)?,
                _ => tilings_text(&set),
            };
            Ok(Output::ok(text))
        }
        Verb::Verify { flavor, max_n, suite, timings } => {
            let flavor = Flavor::from(*flavor);
            if format == Format::Latex {
                usage("reports support --format json or text");
            }
            guard(flavor, *max_n, cli.allow_large);
            render_report(&run_suite((*suite).into(), flavor, *max_n), format, *timings)
        }
        Verb::ReproducePaper { timings } => {
            if format == Format::Latex {
                usage("reports support --format json or text");
            }
            render_report(&reproduce_paper(), format, *timings)
        }
    }
}

fn tilings_text(set: &TilingSet) -> String {
    let mut out = format!("mu = {}", set.mu);
    if !set.dots.is_empty() {
        let dots: Vec<String> = set.dots.iter().map(|[i, j]| format!("{i}-{j}")).collect();
        out.push_str(&format!(", dots = {}", dots.join(",")));
    }
    out.push_str(&format!("\n{} tilings\n", set.tilings.len()));
    for (k, t) in set.tilings.iter().enumerate() {
        let tiles: Vec<String> = t
            .tiles
            .iter()
            .map(|tile| {
                let profile = if tile.profile.is_empty() { "box" } else { &tile.profile };
                format!("(h={}, x={}, {profile})", tile.h, tile.start_x)
            })
            .collect();
        let tiles = if tiles.is_empty() { "empty".to_string() } else { tiles.join(" ") };
        out.push_str(&format!("{}: {tiles}  weight {}\n", k + 1, t.weight.to_text()));
    }
    out
}

/// Every method at once; fails when any two disagree.
fn full(flavor: Flavor, d: &Diagram, p: &DottedPath, format: Format) -> Result<Output> {
    let mut values: BTreeMap<&str, Scalar> = BTreeMap::new();
    values.insert("recursive", recursive(flavor, d)?);
    values.insert("tiling", gf(flavor, p));
    if flavor == Flavor::B || d.n() > 0 {
        for method in [Method::Wenzl, Method::Morrison] {
            let e: Element = jw(flavor, d.n(), method)?;
            let name = match method {
                Method::Wenzl => "wenzl",
                Method::Morrison => "morrison",
            };
            values.insert(name, e.coeff(d)?);
        }
    }
    let reference = values["recursive"].clone();
    let agree = values.values().all(|v| *v == reference);
    let text = match format {
        Format::Json => {
            let methods: serde_json::Map<String, Value> = values
                .iter()
                .map(|(k, v)| Ok(((*k).to_string(), serde_json::to_value(v)?)))
                .collect::<Result<_>>()?;
            pretty(&serde_json::json!({ "agree": agree, "methods": methods }))?
        }
        _ => {
            let mut out = String::new();
            for (k, v) in &values {
                let shown = if format == Format::Latex { v.to_latex() } else { v.to_text() };
                out.push_str(&format!("{k}: {shown}\n"));
            }
            out.push_str(if agree { "all methods agree\n" } else { "METHODS DISAGREE\n" });
            out
        }
    };
    Ok(Output { text, ok: agree })
}

type CacheFile = BTreeMap<String, Scalar>;

fn cache_path(flavor: Flavor) -> Option<PathBuf> {
    let dir = std::env::var_os(CACHE_ENV)?;
    Some(PathBuf::from(dir).join(format!("coeff-{flavor}.json")))
}

/// Recursive coefficient, seeded from and written back to the optional
/// on-disk cache.
fn recursive(flavor: Flavor, d: &Diagram) -> Result<Scalar> {
    let cache = CoeffCache::new(flavor);
    let Some(path) = cache_path(flavor) else {
        return Ok(cache.coeff(d)?);
    };
    if path.exists() {
        let raw = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
        let stored: CacheFile =
            serde_json::from_str(&raw).with_context(|| format!("parsing cache {}", path.display()))?;
        for (text, c) in stored {
            let key: Diagram = text
                .parse()
                .with_context(|| format!("bad cache key {text:?} in {}", path.display()))?;
            if key.check_flavor(flavor).is_err() {
                bail!("cache {} holds a diagram of the wrong type: {text}", path.display());
            }
            cache.seed(key, c)?;
        }
    }
    let c = cache.coeff(d)?;
    let snapshot: CacheFile = cache.snapshot().into_iter().map(|(k, v)| (k.to_string(), v)).collect();
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    fs::write(&path, pretty(&snapshot)?).with_context(|| format!("writing {}", path.display()))?;
    Ok(c)
}
