//! The `detours` command line.
//!
//! Exit status: 0 on success, 1 on usage or domain errors (bad graph6,
//! bad indices, empty domain), 2 when `verify` finds a counterexample.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use detour_core::engine::validate_detour;
use detour_core::{
    build, graph6, low_coverage_edges, psi_detours, DetourReport, DetourSearch, Edge, FamilyId,
    Graph, Path, DEFAULT_EMISSION_LIMIT,
};
use serde::Serialize;

use crate::error::{Result, SearchError};
use crate::filter::{DegreeMode, FilterSpec};
use crate::generate::labeled_graphs;
use crate::io::{graph6_lines, Line};
use crate::record::{Engine, ReportRecord, ScanRecord};
use crate::scan::{ErrorPolicy, ScanConfig, ScanStats, Scanner, RESUME_LOG_ENV};
use crate::tabulate::{SearchSummary, Tabulator};
use crate::verify::{MinFourCheck, OddMinNineCheck};
use crate::witness::WitnessCollector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Csv,
    Jsonl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Dp,
    Dfs,
    Auto,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Dp => Engine::Dp,
            EngineArg::Dfs => Engine::Dfs,
            EngineArg::Auto => Engine::Auto,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exact,
    Atleast,
}

impl From<ModeArg> for DegreeMode {
    fn from(m: ModeArg) -> DegreeMode {
        match m {
            ModeArg::Exact => DegreeMode::Exact,
            ModeArg::Atleast => DegreeMode::AtLeast,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "detours",
    version,
    about = "Count and enumerate detours (longest paths) of graphs and scan graph6 catalogs"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// graph6 input file, or `-` for standard input.
    #[arg(long, global = true, default_value = "-")]
    input: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Detour engine; `auto` uses the subset DP up to order 20.
    #[arg(long, global = true, value_enum, default_value_t = EngineArg::Auto)]
    engine: EngineArg,
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Append-only record log; graphs already logged are not recomputed.
    #[arg(long, global = true, env = RESUME_LOG_ENV)]
    resume_log: Option<PathBuf>,
    /// Maximum number of detours listed per graph.
    #[arg(long, global = true, default_value_t = DEFAULT_EMISSION_LIMIT)]
    limit: usize,
    /// How the filter's `k` is read: minimum degree exactly k or at least k.
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Atleast)]
    min_degree_mode: ModeArg,
    /// Comma-separated predicates: n, k, mode, kappa, kappa_min, parity,
    /// f, traceable, connected.
    #[arg(long, global = true, default_value = "")]
    filter: String,
}

#[derive(Debug, Args)]
struct Corpus {
    /// Generate every labeled graph of these orders (at most 7) instead of
    /// reading graph6 input.
    #[arg(long, value_delimiter = ',')]
    generate: Vec<usize>,
    /// Read precomputed JSON-lines records instead of graph6 input.
    #[arg(long, conflicts_with = "generate")]
    records: Option<PathBuf>,
    /// The corpus holds every graph of the class, so minima are exact.
    /// Implied by --generate.
    #[arg(long)]
    complete: bool,
    /// Abort on the first undecodable line instead of skipping it.
    #[arg(long)]
    strict: bool,
    /// Fraction of graphs recomputed with the other engine as a cross-check.
    #[arg(long, default_value_t = 0.01)]
    audit: f64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Detour order L and detour count f of each input graph, with the
    /// minimum-degree bound L >= min(2δ+1, n).
    Count {
        /// graph6 strings; input is read when none are given.
        graphs: Vec<String>,
    },
    /// List every detour (longest path) of each input graph, one
    /// orientation per detour.
    Enumerate { graphs: Vec<String> },
    /// Number of detours through each edge (edges on a detour lie on at
    /// least two when δ >= 2).
    EdgeStats { graphs: Vec<String> },
    /// Build an extremal family member: cycle, bowtie, triangle_cycle (few
    /// detours), H9 (nine detours, connectivity 1), M (nine detours,
    /// 2-connected), H_extended (subdivided order-10 base).
    Families {
        name: String,
        order: Option<usize>,
        #[arg(long, value_enum, default_value_t = Emit::Report)]
        emit: Emit,
        /// graph6 of the order-10 base for H_extended.
        #[arg(long)]
        base: Option<String>,
        /// Extension edge `u,v` of the base for H_extended.
        #[arg(long)]
        edge: Option<String>,
    },
    /// The four or six detours generated from a detour x_1..x_k and boundary
    /// chords x_1x_i and x_kx_j, with the edges covered fewer than four times.
    Psi {
        /// Detour vertices, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        path: Vec<usize>,
        /// 1-based index of the chord from x_1.
        #[arg(long)]
        i: usize,
        /// 1-based index of the chord from x_k.
        #[arg(long)]
        j: usize,
        /// Optional host graph (graph6) in which every path must be a detour.
        #[arg(long)]
        graph: Option<String>,
    },
    /// Filtered scan of a graph6 stream: one record (n, δ, κ, L, f) per
    /// graph passing the filter.
    Scan {
        #[command(flatten)]
        corpus: Corpus,
    },
    /// Minimum detour count a(k,n) and minimum odd detour count b(k,n) over
    /// connected graphs of order n and minimum degree k.
    Tabulate {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Witnesses kept per value.
        #[arg(long, default_value_t = crate::tabulate::DEFAULT_WITNESS_CAP)]
        witnesses: usize,
        #[command(flatten)]
        corpus: Corpus,
    },
    /// Graphs with an exact detour count (filter key `f`), each re-verified;
    /// for example 2-connected graphs with four detours.
    WitnessSearch {
        /// Maximum number of witnesses reported.
        #[arg(long, default_value_t = crate::tabulate::DEFAULT_WITNESS_CAP)]
        cap: usize,
        #[command(flatten)]
        corpus: Corpus,
    },
    /// Check a lower bound on the detour count over a corpus: theorem1 (at
    /// least 4 detours when δ >= 2, n >= 4) or theorem2 (an odd count is at
    /// least 9 when δ >= 2, n >= 9).
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        /// Restrict to graphs of this order.
        #[arg(long)]
        order: Option<usize>,
        #[command(flatten)]
        corpus: Corpus,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    G6,
    Report,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyTarget {
    Theorem1,
    Theorem2,
}

struct Io<'a> {
    stdin: &'a mut dyn BufRead,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

enum Failure {
    Domain(SearchError),
    Counterexample,
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Domain(e.into())
    }
}

impl From<detour_core::Error> for Failure {
    fn from(e: detour_core::Error) -> Self {
        Failure::Domain(e.into())
    }
}

type CliResult = std::result::Result<(), Failure>;

/// Runs the command line with explicit streams and returns the exit status.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                1
            } else {
                let _ = write!(stdout, "{text}");
                0
            };
        }
    };
    let mut io = Io {
        stdin,
        out: stdout,
        err: stderr,
    };
    let status = match dispatch(&cli, &mut io) {
        Ok(()) => 0,
        Err(Failure::Counterexample) => 2,
        Err(Failure::Domain(SearchError::Io(e))) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(io.err, "error: {e}");
            1
        }
    };
    let _ = io.out.flush();
    status
}

fn dispatch(cli: &Cli, io: &mut Io<'_>) -> CliResult {
    let c = &cli.common;
    match &cli.command {
        Command::Count { graphs } => count(c, graphs, io),
        Command::Enumerate { graphs } => listing(c, graphs, io, true),
        Command::EdgeStats { graphs } => listing(c, graphs, io, false),
        Command::Families {
            name,
            order,
            emit,
            base,
            edge,
        } => families(c, name, *order, *emit, base.as_deref(), edge.as_deref(), io),
        Command::Psi { path, i, j, graph } => psi(c, path, *i, *j, graph.as_deref(), io),
        Command::Scan { corpus } => scan_cmd(c, corpus, io),
        Command::Tabulate {
            k,
            n,
            witnesses,
            corpus,
        } => tabulate_cmd(c, *k, *n, *witnesses, corpus, io),
        Command::WitnessSearch { cap, corpus } => witness_cmd(c, *cap, corpus, io),
        Command::Verify {
            target,
            order,
            corpus,
        } => verify_cmd(c, *target, *order, corpus, io),
    }
}

fn degree_mode(c: &Common) -> DegreeMode {
    c.min_degree_mode.into()
}

fn filter(c: &Common) -> Result<FilterSpec> {
    FilterSpec::parse(&c.filter, degree_mode(c))
}

/// graph6 lines from positional arguments, or from `--input`.
fn input_lines<'a>(
    c: &Common,
    positional: &[String],
    stdin: &'a mut dyn BufRead,
) -> Result<Box<dyn Iterator<Item = io::Result<Line>> + 'a>> {
    if !positional.is_empty() {
        let lines: Vec<io::Result<Line>> = positional
            .iter()
            .enumerate()
            .map(|(idx, text)| {
                Ok(Line {
                    number: idx + 1,
                    text: text.trim().to_string(),
                })
            })
            .collect();
        return Ok(Box::new(lines.into_iter()));
    }
    if c.input == "-" {
        Ok(Box::new(graph6_lines(stdin)))
    } else {
        let file = File::open(&c.input)?;
        Ok(Box::new(graph6_lines(BufReader::new(file))))
    }
}

fn decode_all(
    c: &Common,
    positional: &[String],
    stdin: &mut dyn BufRead,
) -> Result<Vec<(String, Graph)>> {
    input_lines(c, positional, stdin)?
        .map(|line| {
            let line = line?;
            let g = graph6::decode(&line.text).map_err(|source| SearchError::Decode {
                line: line.number,
                source,
            })?;
            Ok((line.text, g))
        })
        .collect()
}

fn bound_note(rec: &ScanRecord) -> String {
    if !rec.connected {
        return "bound n/a (disconnected)".to_string();
    }
    let bound = (2 * rec.delta + 1).min(rec.n);
    let verdict = if rec.order >= bound { "ok" } else { "VIOLATED" };
    format!("bound L >= min(2delta+1,n) = {bound} {verdict}")
}

fn write_record(out: &mut dyn Write, format: Format, rec: &ScanRecord) -> io::Result<()> {
    match format {
        Format::Human => writeln!(out, "{}  {}", rec.to_human(), bound_note(rec)),
        Format::Csv => writeln!(out, "{}", rec.to_csv()),
        Format::Jsonl => writeln!(out, "{}", rec.to_json()),
    }
}

fn csv_header(out: &mut dyn Write, format: Format, header: &str) -> io::Result<()> {
    if format == Format::Csv {
        writeln!(out, "{header}")?;
    }
    Ok(())
}

fn count(c: &Common, graphs: &[String], io: &mut Io<'_>) -> CliResult {
    let config = ScanConfig {
        engine: c.engine.into(),
        jobs: c.jobs,
        policy: ErrorPolicy::Abort,
        audit_fraction: 0.0,
        ..ScanConfig::default()
    };
    let mut scanner = Scanner::new(config)?;
    let lines = input_lines(c, graphs, &mut *io.stdin)?;
    let out = &mut *io.out;
    csv_header(out, c.format, ScanRecord::CSV_HEADER)?;
    scanner.run(lines, |rec| Ok(write_record(out, c.format, &rec)?))?;
    Ok(())
}

fn listing(c: &Common, graphs: &[String], io: &mut Io<'_>, paths: bool) -> CliResult {
    let decoded = decode_all(c, graphs, &mut *io.stdin)?;
    let out = &mut *io.out;
    csv_header(
        out,
        c.format,
        if paths {
            "graph6,index,detour"
        } else {
            "graph6,u,v,detours"
        },
    )?;
    for (text, g) in decoded {
        let report = DetourSearch::new(&g)
            .collect_paths(paths)
            .edge_counts(!paths)
            .limit(c.limit)
            .run()?;
        match c.format {
            Format::Jsonl => writeln!(out, "{}", ReportRecord::new(&g, text, &report).to_json())?,
            Format::Csv => write_listing_csv(out, &text, &report)?,
            Format::Human => {
                let rec = ScanRecord::from_report(&g, text, &report);
                writeln!(out, "{}", rec.to_human())?;
                write_listing_human(out, &report)?;
            }
        }
    }
    Ok(())
}

fn write_listing_csv(out: &mut dyn Write, text: &str, report: &DetourReport) -> io::Result<()> {
    for (idx, p) in report.detours.iter().flatten().enumerate() {
        let verts: Vec<String> = p.vertices().iter().map(usize::to_string).collect();
        writeln!(out, "{text},{},{}", idx + 1, verts.join(" "))?;
    }
    for (e, n) in report.edge_counts.iter().flatten() {
        writeln!(out, "{text},{},{},{n}", e.u(), e.v())?;
    }
    Ok(())
}

fn write_listing_human(out: &mut dyn Write, report: &DetourReport) -> io::Result<()> {
    for p in report.detours.iter().flatten() {
        writeln!(out, "{p}")?;
    }
    for (e, n) in report.edge_counts.iter().flatten() {
        writeln!(out, "{e} {n}")?;
    }
    Ok(())
}

fn parse_edge(text: &str) -> Result<Edge> {
    let bad = || SearchError::Filter(format!("edge must be u,v, got {text:?}"));
    let (a, b) = text.split_once(',').ok_or_else(bad)?;
    let a = a.trim().parse().map_err(|_| bad())?;
    let b = b.trim().parse().map_err(|_| bad())?;
    Ok(Edge::new(a, b)?)
}

fn family_id(
    name: &str,
    order: Option<usize>,
    base: Option<&str>,
    edge: Option<&str>,
) -> Result<FamilyId> {
    if matches!(name, "H_extended" | "H") {
        let (Some(order), Some(base), Some(edge)) = (order, base, edge) else {
            return Err(SearchError::Filter(
                "H_extended needs an order, --base GRAPH6 and --edge u,v".into(),
            ));
        };
        let base = graph6::decode(base)?;
        let edge = parse_edge(edge)?;
        let validation = detour_core::validate_h10(&base, edge);
        if !validation.is_valid() {
            return Err(SearchError::Filter(format!(
                "base rejected: {}",
                validation.diagnostics().join("; ")
            )));
        }
        return Ok(FamilyId::HExtended { order, base, edge });
    }
    let fixed = matches!(name, "bowtie" | "H9");
    let order = match (order, fixed) {
        (Some(n), _) => n,
        (None, true) => 0,
        (None, false) => return Err(SearchError::Filter(format!("family {name} needs an order"))),
    };
    let id = FamilyId::from_name(name, order)
        .ok_or_else(|| SearchError::Filter(format!("unknown family {name:?}")))?;
    if fixed && order != 0 && order != id.order() {
        return Err(detour_core::Error::FamilyOrder {
            family: id.name(),
            order,
        }
        .into());
    }
    Ok(id)
}

fn families(
    c: &Common,
    name: &str,
    order: Option<usize>,
    emit: Emit,
    base: Option<&str>,
    edge: Option<&str>,
    io: &mut Io<'_>,
) -> CliResult {
    let id = family_id(name, order, base, edge)?;
    let g = build(&id)?;
    let text = graph6::encode(&g)?;
    let out = &mut *io.out;
    match emit {
        Emit::G6 => writeln!(out, "{text}")?,
        Emit::Dot => {
            writeln!(out, "graph \"{id}\" {{")?;
            for v in 0..g.order() {
                writeln!(out, "  {v};")?;
            }
            for e in g.edges() {
                writeln!(out, "  {} -- {};", e.u(), e.v())?;
            }
            writeln!(out, "}}")?;
        }
        Emit::Report => {
            let rec = ScanRecord::measure(&g, text, c.engine.into())?;
            csv_header(out, c.format, ScanRecord::CSV_HEADER)?;
            write_record(out, c.format, &rec)?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct PsiOutput {
    i: usize,
    j: usize,
    detours: Vec<Vec<usize>>,
    low_coverage: Vec<(usize, usize)>,
}

fn psi(
    c: &Common,
    path: &[usize],
    i: usize,
    j: usize,
    graph: Option<&str>,
    io: &mut Io<'_>,
) -> CliResult {
    let p = Path::new(path.to_vec())?;
    let paths = psi_detours(&p, i, j)?;
    let low = low_coverage_edges(&p, i, j)?;
    if let Some(text) = graph {
        let g = graph6::decode(text)?;
        for q in &paths {
            validate_detour(&g, q)?;
        }
    }
    let out = &mut *io.out;
    match c.format {
        Format::Jsonl => {
            let rec = PsiOutput {
                i,
                j,
                detours: paths.iter().map(|q| q.vertices().to_vec()).collect(),
                low_coverage: low.iter().map(|e| (e.u(), e.v())).collect(),
            };
            writeln!(out, "{}", serde_json::to_string(&rec).expect("serializes"))?;
        }
        Format::Csv => {
            writeln!(out, "index,detour")?;
            for (idx, q) in paths.iter().enumerate() {
                let verts: Vec<String> = q.vertices().iter().map(usize::to_string).collect();
                writeln!(out, "{},{}", idx + 1, verts.join(" "))?;
            }
        }
        Format::Human => {
            for q in &paths {
                writeln!(out, "{q}")?;
            }
            let low: Vec<String> = low.iter().map(Edge::to_string).collect();
            writeln!(out, "low coverage: {}", low.join(" "))?;
        }
    }
    Ok(())
}

/// Feeds every record of the corpus to `sink`; returns whether the corpus
/// is complete.
fn each_record<F>(
    c: &Common,
    corpus: &Corpus,
    spec: &FilterSpec,
    io: &mut Io<'_>,
    mut sink: F,
) -> std::result::Result<bool, Failure>
where
    F: FnMut(ScanRecord) -> Result<()>,
{
    if let Some(path) = &corpus.records {
        let reader = BufReader::new(File::open(path)?);
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let rec: ScanRecord =
                serde_json::from_str(&line).map_err(|source| SearchError::Record {
                    line: idx + 1,
                    source,
                })?;
            if spec.outcome_match(&rec) && spec.order.is_none_or(|n| n == rec.n) {
                sink(rec)?;
            }
        }
        return Ok(corpus.complete);
    }
    let config = ScanConfig {
        filter: spec.clone(),
        engine: c.engine.into(),
        jobs: c.jobs,
        policy: if corpus.strict {
            ErrorPolicy::Abort
        } else {
            ErrorPolicy::Skip
        },
        audit_fraction: corpus.audit,
        resume_log: c.resume_log.clone(),
        ..ScanConfig::default()
    };
    let mut scanner = Scanner::new(config)?;
    let mut stats = ScanStats::default();
    if corpus.generate.is_empty() {
        let lines = input_lines(c, &[], &mut *io.stdin)?;
        stats = scanner.run(lines, &mut sink)?;
    } else {
        for &n in &corpus.generate {
            let part = scanner.run_graphs(labeled_graphs(n, spec)?, &mut sink)?;
            merge_stats(&mut stats, part);
        }
    }
    for e in &stats.errors {
        writeln!(io.err, "skipped: {e}")?;
    }
    writeln!(
        io.err,
        "read {} rejected {} computed {} resumed {} audited {} emitted {} errors {}",
        stats.read,
        stats.rejected,
        stats.computed,
        stats.resumed,
        stats.audited,
        stats.emitted,
        stats.errors.len()
    )?;
    Ok(corpus.complete || !corpus.generate.is_empty())
}

fn merge_stats(into: &mut ScanStats, part: ScanStats) {
    into.read += part.read;
    into.errors.extend(part.errors);
    into.rejected += part.rejected;
    into.computed += part.computed;
    into.resumed += part.resumed;
    into.audited += part.audited;
    into.emitted += part.emitted;
}

fn scan_cmd(c: &Common, corpus: &Corpus, io: &mut Io<'_>) -> CliResult {
    let spec = filter(c)?;
    let format = c.format;
    let mut rows = Vec::new();
    each_record(c, corpus, &spec, io, |rec| {
        rows.push(rec);
        Ok(())
    })?;
    csv_header(io.out, format, ScanRecord::CSV_HEADER)?;
    for rec in &rows {
        write_record(io.out, format, rec)?;
    }
    Ok(())
}

fn tabulate_cmd(
    c: &Common,
    k: usize,
    n: usize,
    cap: usize,
    corpus: &Corpus,
    io: &mut Io<'_>,
) -> CliResult {
    let mode = degree_mode(c);
    let mut spec = filter(c)?;
    spec.order = Some(n);
    spec.min_degree = Some(k);
    spec.connected = true;
    let mut tab = Tabulator::new(k, n, mode, cap);
    let complete = each_record(c, corpus, &spec, io, |rec| {
        tab.observe(&rec);
        Ok(())
    })?;
    let summary = tab.finish(complete)?;
    write_summary(io.out, c.format, &summary)?;
    Ok(())
}

fn write_summary(out: &mut dyn Write, format: Format, s: &SearchSummary) -> io::Result<()> {
    match format {
        Format::Human => writeln!(out, "{}", s.to_human()),
        Format::Csv => writeln!(out, "{}\n{}", SearchSummary::CSV_HEADER, s.to_csv()),
        Format::Jsonl => writeln!(out, "{}", serde_json::to_string(s).expect("serializes")),
    }
}

fn witness_cmd(c: &Common, cap: usize, corpus: &Corpus, io: &mut Io<'_>) -> CliResult {
    let spec = filter(c)?;
    let mut collector = WitnessCollector::new(spec.clone(), cap)?;
    each_record(c, corpus, &spec, io, |rec| collector.observe(&rec))?;
    let matched = collector.matched();
    let found = collector.finish();
    csv_header(io.out, c.format, ScanRecord::CSV_HEADER)?;
    for rec in &found {
        match c.format {
            Format::Human => writeln!(io.out, "{} {}", rec.graph6, rec.to_human())?,
            _ => write_record(io.out, c.format, rec)?,
        }
    }
    writeln!(
        io.err,
        "{matched} matching graphs, {} reported",
        found.len()
    )?;
    Ok(())
}

fn verify_cmd(
    c: &Common,
    target: VerifyTarget,
    order: Option<usize>,
    corpus: &Corpus,
    io: &mut Io<'_>,
) -> CliResult {
    let mut spec = filter(c)?;
    if order.is_some() {
        spec.order = order;
    }
    if spec.min_degree.is_none() {
        spec.min_degree = Some(2);
        spec.degree_mode = DegreeMode::AtLeast;
    }
    spec.connected = true;
    let (pass, counterexamples, body) = match target {
        VerifyTarget::Theorem1 => {
            let mut check = MinFourCheck::default();
            let complete = each_record(c, corpus, &spec, io, |rec| {
                check.observe(&rec);
                Ok(())
            })?;
            let v = check.finish(complete);
            let minima: Vec<String> = v
                .details
                .minima
                .iter()
                .map(|(n, f)| format!("n={n}:{f}"))
                .collect();
            let mut body = format!(
                "minimum four: {} graphs checked, {} corpus, minima {}",
                v.details.checked,
                if v.complete { "complete" } else { "partial" },
                minima.join(" ")
            );
            if !v.unattained.is_empty() {
                body.push_str(&format!(
                    "\nminimum 4 not attained at orders {:?}",
                    v.unattained
                ));
            }
            (
                v.pass,
                v.details.counterexamples.clone(),
                (body, serde_json::to_string(&v)),
            )
        }
        VerifyTarget::Theorem2 => {
            let mut check = OddMinNineCheck::default();
            let complete = each_record(c, corpus, &spec, io, |rec| {
                check.observe(&rec);
                Ok(())
            })?;
            let v = check.finish(complete);
            let minima: Vec<String> = v
                .details
                .odd_minima
                .iter()
                .map(|(n, f)| format!("n={n}:{f}"))
                .collect();
            let mut body = format!(
                "odd minimum nine: {} graphs checked, {} corpus, odd minima {}, 9 attained at orders {:?}",
                v.details.checked,
                if v.complete { "complete" } else { "partial" },
                minima.join(" "),
                v.details.nine_attained()
            );
            if !v.unattained.is_empty() {
                body.push_str(&format!(
                    "\nodd minimum 9 not attained at orders {:?}",
                    v.unattained
                ));
            }
            (
                v.pass,
                v.details.counterexamples.clone(),
                (body, serde_json::to_string(&v)),
            )
        }
    };
    let out = &mut *io.out;
    match c.format {
        Format::Jsonl => writeln!(out, "{}", body.1.expect("serializes"))?,
        Format::Csv => {
            writeln!(out, "{}", ScanRecord::CSV_HEADER)?;
            for rec in &counterexamples {
                writeln!(out, "{}", rec.to_csv())?;
            }
        }
        Format::Human => {
            writeln!(out, "{}", body.0)?;
            for rec in &counterexamples {
                writeln!(out, "counterexample {} {}", rec.graph6, rec.to_human())?;
            }
            writeln!(out, "{}", if pass { "PASS" } else { "FAIL" })?;
        }
    }
    if pass {
        Ok(())
    } else {
        Err(Failure::Counterexample)
    }
}
