use std::fs;
use std::io::Write;
use std::path::Path;

use proxigraph::instances::{
    cube_example_graph, four_path_example, hamming_cube_example, isolated_vertex_example,
    lattice_truncation, printed_cube_pairs, TruncationParams, CUBE_ERRATUM,
    MAX_ENUMERATION_VERTICES,
};
use proxigraph::io::{self, CertificateFile, PartitionFile, SpaceFile};
use proxigraph::path_proximinal::{
    build_threshold_graph, certify_path_proximinal, verify_path_proximinal,
    witness_metric_for_path_bipartite, witness_ultrametric,
};
use proxigraph::paths::{
    be_path_witness, bpath_pairs, is_be_path, is_path_bipartite, is_path_complete,
    one_sided_component, quotient_graph,
};
use proxigraph::proximinal::{verify_proximinal_graph, witness_proximinal_metric};
use proxigraph::sweep::{run_sweep, SweepConfig, Theorem};
use proxigraph::{
    Bipartition, Error, FiniteSemimetricSpace, SimpleGraph, SpaceClass, VertexId, VertexSet,
};

use crate::{CheckKind, WitnessKind};

/// Lines for stdout; the first is the verdict.
pub struct Report {
    pub success: bool,
    pub lines: Vec<String>,
}

impl Report {
    fn verdict(value: bool) -> Self {
        Report {
            success: value,
            lines: vec![value.to_string()],
        }
    }

    fn value(first: impl Into<String>) -> Self {
        Report {
            success: true,
            lines: vec![first.into()],
        }
    }

    fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }
}

#[derive(Debug)]
pub struct CliError {
    pub kind: &'static str,
    pub message: String,
}

impl CliError {
    fn new(kind: &'static str, message: impl Into<String>) -> Self {
        CliError {
            kind,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let kind = match &e {
            Error::Format(_)
            | Error::MalformedRational(_)
            | Error::InvalidLabel(_)
            | Error::DuplicateVertex(_)
            | Error::LoopEdge(_)
            | Error::UnknownEndpoint(_)
            | Error::NotSquare(_)
            | Error::AsymmetricEntry(..)
            | Error::NonzeroDiagonal(_)
            | Error::ZeroOffDiagonal(..)
            | Error::NegativeEntry(..)
            | Error::EmptySet
            | Error::PartsOverlap(_) => "malformed-input",
            Error::VertexMismatch | Error::PartsNotCovering(_) | Error::NotSubset(_) => {
                "vertex-set-mismatch"
            }
            Error::UnknownVertex(_) | Error::WrongSide { .. } => "unknown-vertex",
            Error::SizeExceeded(_) | Error::OutOfRange { .. } => "bound-exceeded",
            Error::UnknownName(_) => "unknown-name",
            _ => "precondition-violation",
        };
        CliError::new(kind, e.to_string())
    }
}

type CliResult = Result<Report, CliError>;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::new("io", format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<SimpleGraph, CliError> {
    io::parse_graph(&read(path)?).map_err(|e| with_path(e, path))
}

fn load_partition(path: &Path) -> Result<Bipartition, CliError> {
    io::parse_partition(&read(path)?).map_err(|e| with_path(e, path))
}

fn load_space(path: &Path) -> Result<FiniteSemimetricSpace, CliError> {
    io::parse_space(&read(path)?).map_err(|e| with_path(e, path))
}

fn with_path(e: Error, path: &Path) -> CliError {
    let mut err = CliError::from(e);
    err.message = format!("{}: {}", path.display(), err.message);
    err
}

/// The partition must cover exactly the graph's vertices.
fn matching_partition(graph: &SimpleGraph, path: &Path) -> Result<Bipartition, CliError> {
    let parts = load_partition(path)?;
    if &parts.union() != graph.vertices() {
        return Err(CliError::new(
            "vertex-set-mismatch",
            "partition A ∪ B differs from the graph's vertex set",
        ));
    }
    Ok(parts)
}

fn matching_space(graph: &SimpleGraph, path: &Path) -> Result<FiniteSemimetricSpace, CliError> {
    let space = load_space(path)?;
    if &space.point_set() != graph.vertices() {
        return Err(CliError::new(
            "vertex-set-mismatch",
            "space points differ from the graph's vertex set",
        ));
    }
    Ok(space)
}

fn set_text(set: &VertexSet) -> String {
    let labels: Vec<&str> = set.iter().map(VertexId::as_str).collect();
    format!("{{{}}}", labels.join(", "))
}

pub fn classify(space: &Path) -> CliResult {
    Ok(Report::value(load_space(space)?.classify().to_string()))
}

pub fn check(kind: CheckKind, graph: &Path, partition: &Path, space: Option<&Path>) -> CliResult {
    let g = load_graph(graph)?;
    let parts = matching_partition(&g, partition)?;
    let need_space = || {
        space
            .ok_or_else(|| CliError::new("missing-space-file", "this check needs --space"))
            .and_then(|p| matching_space(&g, p))
    };
    match kind {
        CheckKind::PathBipartite => Ok(path_bipartite_report(&g, &parts)),
        CheckKind::PathComplete => {
            let pairs = bpath_pairs(&g, &parts)?;
            let missing = parts
                .a()
                .iter()
                .flat_map(|a| parts.b().iter().map(move |b| (a.clone(), b.clone())))
                .find(|pair| !pairs.contains(pair));
            let mut report = Report::verdict(missing.is_none());
            match missing {
                None => report.line(format!(
                    "all {} pairs of A × B are joined by be-paths",
                    pairs.len()
                )),
                Some((a, b)) => report.line(format!("({a},{b}) is not joined by any be-path")),
            }
            Ok(report)
        }
        CheckKind::PathProximinal => {
            let s = need_space()?;
            let ok = verify_path_proximinal(&g, &parts, &s)?;
            let mut report = Report::verdict(ok);
            let dist = s.set_distance(parts.a(), parts.b())?;
            report.line(format!("dist(A,B) = {dist}"));
            if !ok {
                let threshold = build_threshold_graph(&s, &parts)?;
                if let Some(e) = threshold.edges().symmetric_difference(g.edges()).next() {
                    let d = s.distance(e.first(), e.second())?;
                    let present = if g.edges().contains(e) {
                        "is an edge"
                    } else {
                        "is not an edge"
                    };
                    report.line(format!(
                        "{e} {present} but d = {d} against threshold {dist}"
                    ));
                } else {
                    report
                        .lines
                        .extend(path_bipartite_report(&g, &parts).lines.into_iter().skip(1));
                }
            }
            Ok(report)
        }
        CheckKind::Proximinal => {
            let s = need_space()?;
            let ok = verify_proximinal_graph(&g, &parts, &s)?;
            let mut report = Report::verdict(ok);
            let dist = s.set_distance(parts.a(), parts.b())?;
            report.line(format!("dist(A,B) = {dist}"));
            if !ok {
                if let Some(e) = g.edges().iter().find(|e| !parts.is_cross(e)) {
                    report.line(format!("{e} lies inside one part"));
                } else {
                    for a in parts.a() {
                        for b in parts.b() {
                            let d = s.distance(a, b)?;
                            if g.has_edge(a, b) != (d == dist) {
                                report.line(format!(
                                    "pair ({a},{b}) has d = {d} but edge presence is {}",
                                    g.has_edge(a, b)
                                ));
                                return Ok(report);
                            }
                        }
                    }
                }
            }
            Ok(report)
        }
    }
}

fn path_bipartite_report(g: &SimpleGraph, parts: &Bipartition) -> Report {
    let ok = is_path_bipartite(g, parts);
    let mut report = Report::verdict(ok);
    match one_sided_component(g, parts) {
        None => report.line("every component meets both A and B"),
        Some(c) => {
            let side = if c.iter().all(|v| parts.a().contains(v)) {
                "A"
            } else {
                "B"
            };
            report.line(format!(
                "component {} lies entirely in {side}",
                set_text(&c)
            ));
        }
    }
    report
}

pub fn bpath(
    graph: &Path,
    partition: &Path,
    witness: Option<&[String]>,
    quotient: bool,
) -> CliResult {
    let g = load_graph(graph)?;
    let parts = matching_partition(&g, partition)?;
    if let Some([a, b]) = witness {
        let a = VertexId::new(a.as_str())?;
        let b = VertexId::new(b.as_str())?;
        return Ok(match be_path_witness(&g, &parts, &a, &b)? {
            Some(w) => {
                // re-validate before printing
                if is_be_path(&g, w.path().vertices(), &parts)?.is_none() {
                    return Err(CliError::new(
                        "internal",
                        "constructed path failed validation",
                    ));
                }
                let mut report = Report::verdict(true);
                report.line(w.path().to_string());
                report
            }
            None => {
                let mut report = Report::verdict(false);
                report.line(format!("pair-not-in-bpath: ({a},{b})"));
                report
            }
        });
    }
    let pairs = bpath_pairs(&g, &parts)?;
    let mut report = Report::value(io::pairs_to_json(&pairs));
    if quotient {
        report.lines.extend(
            quotient_graph(&g, &parts)?
                .to_dot()
                .lines()
                .map(String::from),
        );
    }
    Ok(report)
}

pub fn witness(
    kind: WitnessKind,
    graph: &Path,
    partition: Option<&Path>,
    out_dir: Option<&Path>,
) -> CliResult {
    let g = load_graph(graph)?;
    let need_parts = || {
        partition
            .ok_or_else(|| {
                CliError::new(
                    "missing-partition-file",
                    "this witness needs a partition file",
                )
            })
            .and_then(|p| matching_partition(&g, p))
    };
    let failed = |reason: &str| {
        let mut report = Report::verdict(false);
        report.line(reason.to_string());
        Ok(report)
    };
    let (parts, space, verified) = match kind {
        WitnessKind::Metric => {
            let parts = need_parts()?;
            if g.is_empty() {
                return failed("empty-graph");
            }
            let space = match witness_metric_for_path_bipartite(&g, &parts) {
                Ok(s) => s,
                Err(Error::NotPathBipartite) => return failed("not-path-bipartite"),
                Err(e) => return Err(e.into()),
            };
            let ok = verify_path_proximinal(&g, &parts, &space)?;
            (parts, space, ok)
        }
        WitnessKind::ProximinalMetric => {
            let parts = need_parts()?;
            let space = match witness_proximinal_metric(&g, &parts) {
                Ok(s) => s,
                Err(Error::EmptyGraph) => return failed("empty-graph"),
                Err(Error::NotBipartiteWithParts(..)) => return failed("not-bipartite"),
                Err(e) => return Err(e.into()),
            };
            let ok = verify_proximinal_graph(&g, &parts, &space)?;
            (parts, space, ok)
        }
        WitnessKind::Ultrametric => {
            if g.vertex_count() == 0 || g.is_empty() {
                return failed("empty-graph");
            }
            let Some(cert) = witness_ultrametric(&g) else {
                return failed("not-degree-one");
            };
            let ok = cert.verify()? && cert.space.classify() == SpaceClass::Ultrametric;
            (cert.parts, cert.space, ok)
        }
    };
    if !verified {
        return Err(CliError::new(
            "internal",
            "constructed witness failed re-verification",
        ));
    }
    let mut report = Report::verdict(true);
    report.line(format!("class: {}", space.classify()));
    report.line(format!(
        "dist(A,B) = {}",
        space.set_distance(parts.a(), parts.b())?
    ));
    match out_dir {
        Some(dir) => {
            let files = write_bundle(dir, Some(&g), Some(&parts), Some(&space))?;
            report.lines.extend(files);
        }
        None => report.lines.extend(
            io::certificate_to_json(&g, &parts, &space)
                .lines()
                .map(String::from),
        ),
    }
    Ok(report)
}

fn write_file(dir: &Path, name: &str, text: &str) -> Result<String, CliError> {
    let path = dir.join(name);
    let mut file = fs::File::create(&path)
        .map_err(|e| CliError::new("io", format!("{}: {e}", path.display())))?;
    writeln!(file, "{text}")
        .map_err(|e| CliError::new("io", format!("{}: {e}", path.display())))?;
    Ok(format!("wrote {}", path.display()))
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("file types serialize")
}

/// Writes whichever of graph.json, partition.json, space.json are given, plus
/// certificate.json when all three are.
fn write_bundle(
    dir: &Path,
    graph: Option<&SimpleGraph>,
    parts: Option<&Bipartition>,
    space: Option<&FiniteSemimetricSpace>,
) -> Result<Vec<String>, CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::new("io", format!("{}: {e}", dir.display())))?;
    let mut written = Vec::new();
    if let Some(g) = graph {
        written.push(write_file(dir, "graph.json", &io::graph_to_json(g))?);
    }
    if let Some(p) = parts {
        written.push(write_file(
            dir,
            "partition.json",
            &to_json(&PartitionFile::from_partition(p)),
        )?);
    }
    if let Some(s) = space {
        written.push(write_file(
            dir,
            "space.json",
            &to_json(&SpaceFile::from_space(s)),
        )?);
    }
    if let (Some(g), Some(p), Some(s)) = (graph, parts, space) {
        written.push(write_file(
            dir,
            "certificate.json",
            &to_json(&CertificateFile::new(g, p, s)),
        )?);
    }
    Ok(written)
}

/// Reads PROXIGRAPH_MAX_N, if set.
fn env_max_n() -> Result<Option<usize>, CliError> {
    match std::env::var("PROXIGRAPH_MAX_N") {
        Err(_) => Ok(None),
        Ok(text) => {
            let n: usize = text.trim().parse().map_err(|_| {
                CliError::new(
                    "malformed-input",
                    format!("PROXIGRAPH_MAX_N={text} is not a count"),
                )
            })?;
            if n > MAX_ENUMERATION_VERTICES {
                return Err(CliError::new(
                    "bound-exceeded",
                    format!("PROXIGRAPH_MAX_N={n} exceeds the hard cap {MAX_ENUMERATION_VERTICES}"),
                ));
            }
            Ok(Some(n))
        }
    }
}

pub fn verify(
    theorem: &str,
    max_n: Option<usize>,
    min_n: usize,
    instances: Option<usize>,
    seed: u64,
    jobs: usize,
) -> CliResult {
    let theorem: Theorem = theorem.parse().map_err(|_| {
        CliError::new(
            "unknown-theorem-id",
            format!("unknown theorem id {theorem}"),
        )
    })?;
    let mut config = SweepConfig::for_theorem(theorem);
    if let Some(n) = max_n.or(env_max_n()?) {
        config.max_n = n;
    }
    config.min_n = min_n;
    if let Some(i) = instances {
        config.instances = i;
    }
    config.seed = seed;
    config.jobs = jobs;

    let mut next_mark = 1000;
    let report = run_sweep(theorem, &config, |checked| {
        if checked >= next_mark {
            eprintln!("{theorem}: {checked} instances checked");
            next_mark = (checked / 1000 + 1) * 1000;
        }
    })?;
    let mut out = Report::verdict(report.passed());
    out.line(format!("theorem: {theorem}"));
    out.line(format!("instances: {}", report.instances_checked));
    out.line(format!(
        "bounds: n in {}..={}, {} randomized, seed {}",
        config.min_n, config.max_n, config.instances, config.seed
    ));
    match report.counterexample {
        None => out.line("counterexamples: 0"),
        Some(c) => out.line(format!("counterexample: {c}")),
    }
    Ok(out)
}

fn claim(report: &mut Report, label: &str, value: impl std::fmt::Display, holds: bool) {
    report.success &= holds;
    report.line(format!("{label}: {value}"));
}

pub fn example(name: &str, (n, m, k): (u32, u32, u32), out_dir: Option<&Path>) -> CliResult {
    let mut report = Report {
        success: true,
        lines: Vec::new(),
    };
    let mut files = Vec::new();
    match name {
        "ex3.1" => {
            let (g, parts) = cube_example_graph();
            claim(
                &mut report,
                "vertices",
                g.vertex_count(),
                g.vertex_count() == 16,
            );
            claim(&mut report, "edges", g.edge_count(), g.edge_count() == 25);
            claim(
                &mut report,
                "path-bipartite",
                is_path_bipartite(&g, &parts),
                is_path_bipartite(&g, &parts),
            );
            report.line(format!("erratum: {CUBE_ERRATUM}"));
            if let Some(dir) = out_dir {
                files = write_bundle(dir, Some(&g), Some(&parts), None)?;
            }
        }
        "ex3.2" => {
            let (space, parts) = hamming_cube_example();
            let dist = space.set_distance(parts.a(), parts.b())?;
            let g = build_threshold_graph(&space, &parts)?;
            let pairs = bpath_pairs(&g, &parts)?;
            let printed = printed_cube_pairs();
            let strict_subset =
                printed.iter().all(|p| pairs.contains(p)) && printed.len() < pairs.len();
            claim(
                &mut report,
                "dist",
                dist,
                dist == proxigraph::metric::int(1),
            );
            claim(&mut report, "edges", g.edge_count(), g.edge_count() == 32);
            let pp = verify_path_proximinal(&g, &parts, &space)?;
            claim(&mut report, "path-proximinal", pp, pp);
            let pc = is_path_complete(&g, &parts)?;
            claim(&mut report, "path-complete", pc, pc);
            claim(&mut report, "B_path pairs", pairs.len(), pairs.len() == 64);
            claim(
                &mut report,
                "listed 46-pair B_path is a strict subset (erratum)",
                strict_subset,
                strict_subset,
            );
            let x = |s: &str| VertexId::new(s).expect("valid label");
            let omitted = printed.iter().all(|p| *p != (x("x2"), x("x5")));
            let witness = be_path_witness(&g, &parts, &x("x2"), &x("x5"))?;
            let shown = witness
                .as_ref()
                .map_or("none".to_string(), |w| w.path().to_string());
            claim(
                &mut report,
                "omitted pair (x2,x5) joined by",
                shown,
                omitted && witness.is_some(),
            );
            report.line(format!("erratum: {CUBE_ERRATUM}"));
            if let Some(dir) = out_dir {
                files = write_bundle(dir, Some(&g), Some(&parts), Some(&space))?;
            }
        }
        "ex3.7" => {
            let (g, parts) = four_path_example();
            let pairs = bpath_pairs(&g, &parts)?;
            let excluded = !pairs.contains(&(VertexId::new("a1")?, VertexId::new("b2")?));
            claim(&mut report, "connected", g.is_connected(), g.is_connected());
            claim(&mut report, "B_path pairs", pairs.len(), pairs.len() == 3);
            claim(&mut report, "(a1,b2) excluded", excluded, excluded);
            let pc = is_path_complete(&g, &parts)?;
            claim(&mut report, "path-complete", pc, !pc);
            if let Some(dir) = out_dir {
                files = write_bundle(dir, Some(&g), Some(&parts), None)?;
            }
        }
        "ex3.12" => {
            let params = TruncationParams::new(n, m, k)?;
            let (space, parts) = lattice_truncation(params)?;
            let dist = space.set_distance(parts.a(), parts.b())?;
            let g = build_threshold_graph(&space, &parts)?;
            report.line(format!("points: {}", space.len()));
            claim(
                &mut report,
                "dist",
                dist,
                dist == proxigraph::metric::int(2),
            );
            let class = space.classify();
            claim(&mut report, "class", class, class == SpaceClass::Metric);
            let pc = is_path_complete(&g, &parts)?;
            claim(&mut report, "path-complete", pc, pc);
            let pp = verify_path_proximinal(&g, &parts, &space)?;
            claim(&mut report, "path-proximinal", pp, pp);
            if let Some(dir) = out_dir {
                files = write_bundle(dir, Some(&g), Some(&parts), Some(&space))?;
            }
        }
        "ex3.16" => {
            let (g, space) = isolated_vertex_example();
            let isolated = g.isolated_vertices();
            let x1 = isolated.contains(&VertexId::new("x1")?);
            claim(&mut report, "isolated", set_text(&isolated), x1);
            let none = certify_path_proximinal(&g).is_none();
            claim(
                &mut report,
                "path-proximinal certificate",
                if none { "absent" } else { "present" },
                none,
            );
            report.line(format!(
                "summary: x1 isolated; {}",
                if none {
                    "not path-proximinal"
                } else {
                    "path-proximinal"
                }
            ));
            if let Some(dir) = out_dir {
                files = write_bundle(dir, Some(&g), None, Some(&space))?;
            }
        }
        other => {
            return Err(CliError::new(
                "unknown-name",
                format!("unknown example {other}"),
            ))
        }
    }
    report.lines.insert(0, report.success.to_string());
    report.lines.extend(files);
    Ok(report)
}

pub fn export_dot(graph: &Path, quotient: Option<&Path>) -> CliResult {
    let g = load_graph(graph)?;
    let dot = match quotient {
        None => g.to_dot(),
        Some(p) => quotient_graph(&g, &matching_partition(&g, p)?)?.to_dot(),
    };
    Ok(Report {
        success: true,
        lines: dot.lines().map(String::from).collect(),
    })
}
