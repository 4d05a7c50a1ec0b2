//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when the input is well formed but fails a
//! domain check (general position, distance, verification), 2 on usage or
//! parse errors. Results go to standard output, progress to standard error.

pub mod svg;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;
use sha2::{Digest, Sha256};

use crate::bounds::kappa;
use crate::construct::{construct_menger_paths, Certificate, ConstructError};
use crate::generators::{default_bound, Family, GeneratorSpec};
use crate::geometry::{parse_json, parse_text, to_json, to_text, GeometryError, Point, PointSet, Segment};
use crate::graph::{DisjointnessGraph, GraphError};

#[derive(Parser, Debug)]
#[command(name = "segconn", version, about = "Connectivity of segment disjointness graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check that a point file is in general position.
    Validate {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Degree statistics of D(P) and the κ(n) bound.
    Stats {
        file: PathBuf,
        /// Also compute the exact vertex connectivity.
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        json: bool,
    },
    /// Export D(P) as JSON.
    Graph {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build and verify a path certificate for two segments at distance 2.
    Witness {
        file: PathBuf,
        /// First segment, as `i,j`.
        #[arg(value_parser = parse_segment)]
        a: Segment,
        /// Second segment, as `k,l`.
        #[arg(value_parser = parse_segment)]
        b: Segment,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[command(flatten)]
        render: RenderOpts,
    },
    /// Sample point sets and report the gap δ(D(P)) − κ(n).
    Search(SearchArgs),
    /// Write a generated point set.
    Gen {
        #[arg(value_parser = parse_family)]
        family: Family,
        n: usize,
        #[arg(default_value_t = 0)]
        seed: u64,
        /// Coordinate bound for the random family.
        #[arg(long)]
        bound: Option<u64>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw a point set, optionally with two segments and a certificate.
    Render {
        file: PathBuf,
        #[arg(long, value_parser = parse_segment)]
        a: Option<Segment>,
        #[arg(long, value_parser = parse_segment)]
        b: Option<Segment>,
        /// Certificate JSON whose paths are drawn; supplies a and b.
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[command(flatten)]
        render: RenderOpts,
    },
}

#[derive(Args, Debug, Clone)]
pub struct RenderOpts {
    /// Canvas width in pixels.
    #[arg(long, default_value_t = 800)]
    pub size: u32,
    /// Omit point index labels.
    #[arg(long)]
    pub no_labels: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchFamily {
    Random,
    Convex,
    DoubleChain,
    /// Cycles random, convex, double chain by trial index.
    Mixed,
}

#[derive(Args, Debug, Clone)]
pub struct SearchArgs {
    /// Point count, or an inclusive range `lo..hi`.
    #[arg(long, value_parser = parse_range)]
    pub n: (usize, usize),
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = SearchFamily::Random)]
    pub family: SearchFamily,
    /// Also compute κ(D(P)) for every sample.
    #[arg(long)]
    pub exact: bool,
    #[arg(long)]
    pub json: bool,
    /// Where to save the extremal specimen.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_segment(s: &str) -> Result<Segment, String> {
    let (i, j) = s
        .split_once([',', '-', ':'])
        .ok_or_else(|| format!("expected a segment `i,j`, got {s:?}"))?;
    let i: usize = i.trim().parse().map_err(|e| format!("bad index {i:?}: {e}"))?;
    let j: usize = j.trim().parse().map_err(|e| format!("bad index {j:?}: {e}"))?;
    Segment::try_new(i, j).ok_or_else(|| format!("segment {s:?} has equal endpoints"))
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: crate::generators::GeneratorError| e.to_string())
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let bad = |e: std::num::ParseIntError| format!("bad point count in {s:?}: {e}");
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo.parse().map_err(bad)?, hi.trim_start_matches('=').parse().map_err(bad)?),
        None => {
            let n = s.parse().map_err(bad)?;
            (n, n)
        }
    };
    if lo < 3 || hi < lo {
        return Err(format!("point count range {s:?} must satisfy 3 <= lo <= hi"));
    }
    Ok((lo, hi))
}

/// A failed command together with its exit code.
#[derive(Debug)]
pub enum Failure {
    /// Exit code 1.
    Domain(String),
    /// Exit code 2.
    Usage(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Domain(_) => 1,
            Failure::Usage(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Domain(m) | Failure::Usage(m) => m,
        }
    }
}

impl From<GeometryError> for Failure {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::IndexOutOfRange(..) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::Geometry(g) => g.into(),
            GraphError::UnknownSegment(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<ConstructError> for Failure {
    fn from(e: ConstructError) -> Self {
        match e {
            ConstructError::Geometry(g) => g.into(),
            ConstructError::Graph(g) => g.into(),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure::Usage(format!("{}: {e}", path.display()))
}

fn read_points(path: &Path) -> Result<Vec<Point>, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    let parsed = if text.trim_start().starts_with('{') { parse_json(&text) } else { parse_text(&text) };
    parsed.map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_set(path: &Path) -> Result<PointSet, Failure> {
    Ok(PointSet::new(read_points(path)?)?)
}

fn write_file(path: &Path, bytes: &[u8]) -> CmdResult {
    fs::write(path, bytes).map_err(|e| io_failure(path, e))
}

fn json_line(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli.command, out, err) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> CmdResult {
    out.write_all(text.as_bytes()).map_err(|e| Failure::Usage(format!("stdout: {e}")))
}

pub fn execute(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Validate { file, json } => cmd_validate(file, *json, out),
        Command::Stats { file, exact, json } => cmd_stats(file, *exact, *json, out),
        Command::Graph { file, out: dest } => {
            let g = DisjointnessGraph::build(&read_set(file)?)?;
            let text = json_line(&g.export());
            match dest {
                Some(p) => write_file(p, text.as_bytes()),
                None => emit(out, &text),
            }
        }
        Command::Witness { file, a, b, out: dest, svg: svg_path, render } => {
            cmd_witness(file, a, b, dest.as_deref(), svg_path.as_deref(), render, out)
        }
        Command::Search(args) => cmd_search(args, out, err),
        Command::Gen { family, n, seed, bound, json, out: dest } => {
            cmd_gen(*family, *n, *seed, *bound, *json, dest.as_deref(), out, err)
        }
        Command::Render { file, a, b, certificate, svg: svg_path, render } => {
            let ps = read_set(file)?;
            let mut scene = svg::Scene { a: *a, b: *b, size: render.size, labels: !render.no_labels, ..Default::default() };
            if let Some(c) = certificate {
                let text = fs::read_to_string(c).map_err(|e| io_failure(c, e))?;
                let cert: Certificate =
                    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", c.display())))?;
                for s in cert.paths.iter().flatten() {
                    ps.check_segment(s)?;
                }
                scene.a = scene.a.or(Some(cert.a));
                scene.b = scene.b.or(Some(cert.b));
                scene.paths = cert.paths;
            }
            for s in [scene.a, scene.b].into_iter().flatten() {
                ps.check_segment(&s)?;
            }
            let text = svg::render(&ps, &scene);
            match svg_path {
                Some(p) => write_file(p, text.as_bytes()),
                None => emit(out, &text),
            }
        }
    }
}

fn cmd_validate(file: &Path, json: bool, out: &mut dyn Write) -> CmdResult {
    let pts = read_points(file)?;
    let result = PointSet::new(pts.clone());
    if json {
        let report = match &result {
            Ok(_) => json!({ "valid": true, "n": pts.len() }),
            Err(e) => json!({ "valid": false, "n": pts.len(), "error": e.to_string(), "indices": offending(e) }),
        };
        emit(out, &json_line(&report))?;
    } else {
        match &result {
            Ok(_) => emit(out, &format!("ok: {} points in general position\n", pts.len()))?,
            Err(e) => emit(out, &format!("invalid: {e}\nindices: {:?}\n", offending(e)))?,
        }
    }
    result.map(|_| ()).map_err(|e| Failure::Domain(e.to_string()))
}

fn offending(e: &GeometryError) -> Vec<usize> {
    match e {
        GeometryError::DuplicatePoint(i, j) | GeometryError::TiedAngle(i, j) => vec![*i, *j],
        GeometryError::CollinearTriple(i, j, k) => vec![*i, *j, *k],
        GeometryError::DegenerateOverlap(s, t) => vec![s.lo(), s.hi(), t.lo(), t.hi()],
        GeometryError::CenterCoincides(i) | GeometryError::IndexOutOfRange(i, _) => vec![*i],
        GeometryError::TooFewPoints(_) => vec![],
    }
}

/// The `stats` report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub n: usize,
    pub vertices: usize,
    pub edges: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub kappa_n: u128,
    pub connected: bool,
    pub exact_kappa: Option<usize>,
    pub degree_histogram: BTreeMap<usize, usize>,
}

pub fn stats(ps: &PointSet, exact: bool) -> Result<Stats, GraphError> {
    let g = DisjointnessGraph::build(ps)?;
    let d = g.degree_stats();
    Ok(Stats {
        n: ps.len(),
        vertices: g.vertex_count(),
        edges: g.graph().edge_count(),
        min_degree: d.min,
        max_degree: d.max,
        kappa_n: kappa(ps.len() as u64),
        connected: g.graph().is_connected(),
        exact_kappa: exact.then(|| g.vertex_connectivity()),
        degree_histogram: d.histogram,
    })
}

fn cmd_stats(file: &Path, exact: bool, json: bool, out: &mut dyn Write) -> CmdResult {
    let st = stats(&read_set(file)?, exact)?;
    if json {
        return emit(out, &json_line(&st));
    }
    let mut text = format!(
        "n            {}\nvertices     {}\nedges        {}\nmin degree   {}\nmax degree   {}\nkappa(n)     {}\n",
        st.n, st.vertices, st.edges, st.min_degree, st.max_degree, st.kappa_n
    );
    if let Some(k) = st.exact_kappa {
        text.push_str(&format!("kappa(D(P))  {k}\n"));
    }
    if !st.connected {
        text.push_str("note: D(P) is disconnected, so its connectivity is 0\n");
    }
    emit(out, &text)
}

fn cmd_witness(
    file: &Path,
    a: &Segment,
    b: &Segment,
    dest: Option<&Path>,
    svg_path: Option<&Path>,
    render: &RenderOpts,
    out: &mut dyn Write,
) -> CmdResult {
    let ps = read_set(file)?;
    ps.check_segment(a)?;
    ps.check_segment(b)?;
    let coll = construct_menger_paths(&ps, a, b)?;
    let text = json_line(&coll.certificate());
    match dest {
        Some(p) => write_file(p, text.as_bytes())?,
        None => emit(out, &text)?,
    }
    if let Some(p) = svg_path {
        let scene = svg::Scene {
            a: Some(coll.a),
            b: Some(coll.b),
            paths: coll.paths.clone(),
            size: render.size,
            labels: !render.no_labels,
        };
        write_file(p, svg::render(&ps, &scene).as_bytes())?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_gen(
    family: Family,
    n: usize,
    seed: u64,
    bound: Option<u64>,
    json: bool,
    dest: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let spec = GeneratorSpec { family, n, seed, coordinate_bound: bound.unwrap_or_else(|| default_bound(n)) };
    let ps = spec.generate().map_err(|e| Failure::Usage(e.to_string()))?;
    let text = if json { json_line(&to_json(ps.points())) } else { to_text(ps.points()) };
    let hash = sha256_hex(text.as_bytes());
    match dest {
        Some(p) => {
            write_file(p, text.as_bytes())?;
            emit(out, &format!("{}  sha256 {hash}\n", p.display()))
        }
        None => {
            emit(out, &text)?;
            let _ = writeln!(err, "sha256 {hash}");
            Ok(())
        }
    }
}

/// One sampled set in a `search` run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trial {
    pub trial: usize,
    pub family: String,
    pub n: usize,
    pub seed: u64,
    pub min_degree: usize,
    pub kappa_n: u128,
    pub exact_kappa: Option<usize>,
}

impl Trial {
    pub fn gap(&self) -> u128 {
        self.min_degree as u128 - self.kappa_n.min(self.min_degree as u128)
    }

    pub fn exact_gap(&self) -> Option<i128> {
        self.exact_kappa.map(|k| self.min_degree as i128 - k as i128)
    }

    fn violates(&self) -> bool {
        (self.min_degree as u128) < self.kappa_n || self.exact_kappa.is_some_and(|k| (k as u128) < self.kappa_n)
    }
}

fn trial_spec(args: &SearchArgs, t: usize) -> GeneratorSpec {
    let (lo, hi) = args.n;
    let n = lo + t % (hi - lo + 1);
    let seed = args.seed.wrapping_add(t as u64);
    let family = match args.family {
        SearchFamily::Random => Family::RandomUniform,
        SearchFamily::Convex => Family::Convex,
        SearchFamily::DoubleChain if n >= 4 => Family::DoubleChain,
        SearchFamily::DoubleChain => Family::Convex,
        SearchFamily::Mixed => match t % 3 {
            0 => Family::RandomUniform,
            1 => Family::Convex,
            _ if n >= 4 => Family::DoubleChain,
            _ => Family::Convex,
        },
    };
    GeneratorSpec { family, n, seed, coordinate_bound: default_bound(n) }
}

fn run_trial(args: &SearchArgs, t: usize) -> Result<(Trial, PointSet), Failure> {
    let spec = trial_spec(args, t);
    let ps = spec.generate().map_err(|e| Failure::Domain(format!("trial {t}: {e}")))?;
    let g = DisjointnessGraph::build(&ps)?;
    let trial = Trial {
        trial: t,
        family: spec.family.to_string(),
        n: spec.n,
        seed: spec.seed,
        min_degree: g.degree_stats().min,
        kappa_n: kappa(spec.n as u64),
        exact_kappa: args.exact.then(|| g.vertex_connectivity()),
    };
    Ok((trial, ps))
}

/// The `search` report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub n_min: usize,
    pub n_max: usize,
    pub trials: usize,
    pub seed: u64,
    pub family: SearchFamily,
    pub exact: bool,
    /// δ(D(P)) − κ(n) -> number of samples
    pub gap_histogram: BTreeMap<u128, usize>,
    /// δ(D(P)) − κ(D(P)) -> number of samples
    pub exact_gap_histogram: Option<BTreeMap<i128, usize>>,
    /// Trial with the largest gap (exact gap when computed), lowest index on ties.
    pub extremal: usize,
    pub violations: Vec<usize>,
    pub samples: Vec<Trial>,
}

pub fn search(args: &SearchArgs, err: &mut dyn Write) -> Result<(SearchReport, PointSet), Failure> {
    if args.trials == 0 {
        return Err(Failure::Usage("--trials must be at least 1".into()));
    }
    let step = (args.trials / 10).max(1);
    let mut results: Vec<(Trial, PointSet)> = Vec::with_capacity(args.trials);
    for start in (0..args.trials).step_by(step) {
        let end = (start + step).min(args.trials);
        let chunk: Vec<(Trial, PointSet)> =
            (start..end).into_par_iter().map(|t| run_trial(args, t)).collect::<Result<_, _>>()?;
        results.extend(chunk);
        let _ = writeln!(err, "search: {end}/{} trials", args.trials);
    }
    results.sort_by_key(|(t, _)| t.trial);
    let mut gap_histogram = BTreeMap::new();
    let mut exact_hist = BTreeMap::new();
    for (t, _) in &results {
        *gap_histogram.entry(t.gap()).or_insert(0) += 1;
        if let Some(g) = t.exact_gap() {
            *exact_hist.entry(g).or_insert(0) += 1;
        }
    }
    let score = |t: &Trial| t.exact_gap().unwrap_or(t.gap() as i128);
    let extremal = results
        .iter()
        .map(|(t, _)| t)
        .max_by(|x, y| score(x).cmp(&score(y)).then(y.trial.cmp(&x.trial)))
        .map(|t| t.trial)
        .expect("at least one trial");
    let report = SearchReport {
        n_min: args.n.0,
        n_max: args.n.1,
        trials: args.trials,
        seed: args.seed,
        family: args.family,
        exact: args.exact,
        gap_histogram,
        exact_gap_histogram: args.exact.then_some(exact_hist),
        extremal,
        violations: results.iter().filter(|(t, _)| t.violates()).map(|(t, _)| t.trial).collect(),
        samples: results.iter().map(|(t, _)| t.clone()).collect(),
    };
    let specimen = results.swap_remove(extremal).1;
    Ok((report, specimen))
}

fn cmd_search(args: &SearchArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let (report, specimen) = search(args, err)?;
    if let Some(p) = &args.out {
        write_file(p, to_text(specimen.points()).as_bytes())?;
    }
    if args.json {
        emit(out, &json_line(&report))?;
    } else {
        let mut text = format!(
            "n {}..{}  trials {}  seed {}  family {:?}\n",
            report.n_min, report.n_max, report.trials, report.seed, report.family
        );
        text.push_str("gap delta - kappa(n):\n");
        for (g, c) in &report.gap_histogram {
            text.push_str(&format!("  {g:>4}  {c}\n"));
        }
        if let Some(h) = &report.exact_gap_histogram {
            text.push_str("gap delta - kappa(D(P)):\n");
            for (g, c) in h {
                text.push_str(&format!("  {g:>4}  {c}\n"));
            }
        }
        let t = &report.samples[report.extremal];
        text.push_str(&format!(
            "extremal: trial {} ({} n={} seed {})  delta {}  kappa(n) {}",
            t.trial, t.family, t.n, t.seed, t.min_degree, t.kappa_n
        ));
        if let Some(k) = t.exact_kappa {
            text.push_str(&format!("  kappa(D(P)) {k}"));
        }
        text.push('\n');
        emit(out, &text)?;
    }
    if report.violations.is_empty() {
        Ok(())
    } else {
        Err(Failure::Domain(format!("bound violated on trials {:?}", report.violations)))
    }
}
