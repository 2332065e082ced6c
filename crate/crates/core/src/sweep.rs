//! Exhaustive and seeded sweeps that cross-check each equivalence in the
//! crate against an independent computation.
//!
//! A sweep walks a deterministic stream of units (labeled graphs or seeds),
//! expands each unit into instances, and stops at the first counterexample.
//! Results are buffered per chunk and consumed in stream order, so the report
//! does not depend on the number of worker threads.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Bipartition, SimpleGraph};
use crate::instances::{
    all_bipartitions, enumerate_labeled_graphs, random_graph, random_semimetric_space,
    random_ultrametric_space, MAX_ENUMERATION_VERTICES,
};
use crate::metric::{int, FiniteSemimetricSpace, Rational, SpaceClass};
use crate::path_proximinal::{
    all_degrees_one, best_proximity_covers_parts, build_threshold_graph, certify_path_proximinal,
    components_are_pairs, parts_reach_best_proximity, ultrametric_connectivity,
    verify_path_proximinal, within_part_separation, witness_ultrametric,
};
use crate::paths::{
    bpath_pairs, enumerate_be_paths, find_path_bipartite_partition, is_path_bipartite,
    is_path_complete, pairs_from_be_paths, quotient_graph, union_of_be_paths,
};
use crate::proximinal::{
    build_proximinal_graph, verify_proximinal_graph, witness_proximinal_metric,
};

/// Units handed to workers at a time.
const CHUNK: usize = 256;

/// Seeds scanned per requested instance before a quota sweep gives up.
const SEED_BUDGET_FACTOR: u64 = 200;

/// The checkable equivalences, keyed by short identifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// `t3.4`: component criterion for joined pairs equals be-path enumeration.
    ComponentCriterion,
    /// `t3.6`: path-completeness equals complete-bipartiteness of the quotient.
    QuotientCompleteness,
    /// `t3.9`: path-bipartite iff the graph is the union of its be-paths.
    BePathUnion,
    /// `t3.16`: a path-proximinal certificate exists iff there is no isolated vertex.
    IsolatedVertexCertificate,
    /// `t2.1`: in an ultrametric, `diam(B) <= dist(A, B)` iff every `b` is a best approximation.
    UltrametricDiameter,
    /// `t3.10`: ultrametric certificates exist exactly for perfect matchings.
    UltrametricMatching,
    /// `c2.9`: with a singleton part, connected iff path-complete.
    SingletonPartConnectivity,
    /// `c3.10`: some partition makes the graph path-bipartite iff there is no isolated vertex.
    PartitionExistence,
    /// `c3.12`: proximinal and path-proximinal over an ultrametric iff all components are pairs.
    MatchingComponents,
    /// `p3.22`: best proximity pairs cover both parts iff no vertex is isolated.
    BestProximityCoverage,
    /// `p3.9`: a proximinal graph without isolated vertices is path-proximinal
    /// iff same-part points are farther apart than `dist(A, B)`.
    WithinPartSeparation,
    /// `t3.5`: the threshold graph is path-bipartite iff each part reaches its best proximity points.
    StructuralConditions,
}

impl Theorem {
    pub const ALL: [Theorem; 12] = [
        Theorem::ComponentCriterion,
        Theorem::QuotientCompleteness,
        Theorem::BePathUnion,
        Theorem::IsolatedVertexCertificate,
        Theorem::UltrametricDiameter,
        Theorem::UltrametricMatching,
        Theorem::SingletonPartConnectivity,
        Theorem::PartitionExistence,
        Theorem::MatchingComponents,
        Theorem::BestProximityCoverage,
        Theorem::WithinPartSeparation,
        Theorem::StructuralConditions,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::ComponentCriterion => "t3.4",
            Theorem::QuotientCompleteness => "t3.6",
            Theorem::BePathUnion => "t3.9",
            Theorem::IsolatedVertexCertificate => "t3.16",
            Theorem::UltrametricDiameter => "t2.1",
            Theorem::UltrametricMatching => "t3.10",
            Theorem::SingletonPartConnectivity => "c2.9",
            Theorem::PartitionExistence => "c3.10",
            Theorem::MatchingComponents => "c3.12",
            Theorem::BestProximityCoverage => "p3.22",
            Theorem::WithinPartSeparation => "p3.9",
            Theorem::StructuralConditions => "t3.5",
        }
    }

    /// Largest exhaustive graph size used when none is given.
    pub fn default_max_n(self) -> usize {
        match self {
            Theorem::ComponentCriterion
            | Theorem::QuotientCompleteness
            | Theorem::BePathUnion
            | Theorem::SingletonPartConnectivity => 5,
            _ => 6,
        }
    }

    /// Seeds (or, for `t3.10`, qualifying random instances) used when none is given.
    pub fn default_instances(self) -> usize {
        match self {
            Theorem::UltrametricDiameter => 1000,
            Theorem::UltrametricMatching => 500,
            _ => 200,
        }
    }

    fn is_exhaustive(self) -> bool {
        !matches!(
            self,
            Theorem::UltrametricDiameter | Theorem::StructuralConditions
        )
    }

    fn is_seeded(self) -> bool {
        matches!(
            self,
            Theorem::UltrametricDiameter
                | Theorem::UltrametricMatching
                | Theorem::MatchingComponents
                | Theorem::BestProximityCoverage
                | Theorem::WithinPartSeparation
                | Theorem::StructuralConditions
        )
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Bounds for a sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    /// Smallest labeled graph size in exhaustive families.
    pub min_n: usize,
    /// Largest labeled graph size in exhaustive families, at most 7.
    pub max_n: usize,
    /// Number of seeds in randomized families; for `t3.10`, the number of
    /// qualifying random ultrametric instances.
    pub instances: usize,
    /// First seed; seeds run consecutively from here.
    pub seed: u64,
    /// Worker threads; 0 or 1 runs on the calling thread.
    pub jobs: usize,
}

impl SweepConfig {
    pub fn for_theorem(theorem: Theorem) -> Self {
        SweepConfig {
            min_n: 1,
            max_n: theorem.default_max_n(),
            instances: theorem.default_instances(),
            seed: 0,
            jobs: 1,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_n > MAX_ENUMERATION_VERTICES {
            return Err(Error::SizeExceeded(format!(
                "max-n {} exceeds the hard cap {MAX_ENUMERATION_VERTICES}",
                self.max_n
            )));
        }
        if self.min_n == 0 || self.min_n > self.max_n {
            return Err(Error::OutOfRange {
                what: "min-n",
                value: self.min_n.to_string(),
                allowed: format!("1..={}", self.max_n),
            });
        }
        Ok(())
    }
}

/// Outcome of a sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub theorem: Theorem,
    pub instances_checked: usize,
    pub counterexample: Option<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

type Outcome = std::result::Result<(), String>;

/// Runs the sweep for `theorem`. `progress` receives the running instance
/// count after every unit.
pub fn run_sweep(
    theorem: Theorem,
    config: &SweepConfig,
    mut progress: impl FnMut(usize),
) -> Result<SweepReport> {
    config.validate()?;
    let runner = Runner::new(config.jobs)?;
    let mut tally = Tally {
        checked: 0,
        counterexample: None,
    };

    if theorem.is_exhaustive() {
        for n in config.min_n..=config.max_n {
            let graphs = enumerate_labeled_graphs(n)?;
            runner.drive(graphs, None, &mut tally, &mut progress, |g| {
                graph_unit(theorem, g)
            });
            if tally.counterexample.is_some() {
                return Ok(tally.into_report(theorem));
            }
        }
    }

    if theorem.is_seeded() {
        let start = tally.checked;
        let seeds = seed_stream(config.seed);
        if theorem == Theorem::UltrametricMatching {
            let budget = (config.instances as u64)
                .saturating_mul(SEED_BUDGET_FACTOR)
                .max(1000);
            runner.drive(
                seeds.take(budget as usize),
                Some(config.instances),
                &mut tally,
                &mut progress,
                |&s| ultrametric_matching_seed(s),
            );
            let found = tally.checked - start;
            if tally.counterexample.is_none() && found < config.instances {
                return Err(Error::PreconditionViolation(format!(
                    "only {found} qualifying instances in {budget} seeds"
                )));
            }
        } else {
            runner.drive(
                seeds.take(config.instances),
                None,
                &mut tally,
                &mut progress,
                |&s| seed_unit(theorem, s),
            );
        }
    }
    Ok(tally.into_report(theorem))
}

fn seed_stream(first: u64) -> impl Iterator<Item = u64> {
    (0u64..).map(move |i| first.wrapping_add(i))
}

struct Tally {
    checked: usize,
    counterexample: Option<String>,
}

impl Tally {
    fn into_report(self, theorem: Theorem) -> SweepReport {
        SweepReport {
            theorem,
            instances_checked: self.checked,
            counterexample: self.counterexample,
        }
    }
}

struct Runner {
    #[cfg(feature = "parallel")]
    pool: Option<rayon::ThreadPool>,
}

impl Runner {
    fn new(jobs: usize) -> Result<Self> {
        #[cfg(feature = "parallel")]
        {
            let pool = if jobs > 1 {
                Some(
                    rayon::ThreadPoolBuilder::new()
                        .num_threads(jobs)
                        .build()
                        .map_err(|e| Error::PreconditionViolation(e.to_string()))?,
                )
            } else {
                None
            };
            Ok(Runner { pool })
        }
        #[cfg(not(feature = "parallel"))]
        {
            let _ = jobs;
            Ok(Runner {})
        }
    }

    fn map_chunk<U, F>(&self, chunk: &[U], check: &F) -> Vec<Vec<Outcome>>
    where
        U: Sync,
        F: Fn(&U) -> Vec<Outcome> + Sync,
    {
        #[cfg(feature = "parallel")]
        if let Some(pool) = &self.pool {
            use rayon::prelude::*;
            return pool.install(|| chunk.par_iter().map(check).collect());
        }
        chunk.iter().map(check).collect()
    }

    /// Consumes `units` in order until a counterexample, exhaustion, or
    /// `limit` further instances have been checked.
    fn drive<U, F>(
        &self,
        units: impl Iterator<Item = U>,
        limit: Option<usize>,
        tally: &mut Tally,
        progress: &mut impl FnMut(usize),
        check: F,
    ) where
        U: Sync,
        F: Fn(&U) -> Vec<Outcome> + Sync,
    {
        let stop_at = limit.map(|l| tally.checked + l);
        let mut units = units.peekable();
        while units.peek().is_some() {
            let chunk: Vec<U> = units.by_ref().take(CHUNK).collect();
            for outcomes in self.map_chunk(&chunk, &check) {
                progress(tally.checked);
                for outcome in outcomes {
                    if stop_at == Some(tally.checked) {
                        progress(tally.checked);
                        return;
                    }
                    tally.checked += 1;
                    if let Err(msg) = outcome {
                        tally.counterexample = Some(msg);
                        progress(tally.checked);
                        return;
                    }
                }
            }
            progress(tally.checked);
            if stop_at == Some(tally.checked) {
                return;
            }
        }
    }
}

fn describe(graph: &SimpleGraph, parts: Option<&Bipartition>) -> String {
    let edges: Vec<String> = graph.edges().iter().map(|e| e.to_string()).collect();
    let mut text = format!(
        "graph on {} vertices with edges [{}]",
        graph.vertex_count(),
        edges.join(", ")
    );
    if let Some(p) = parts {
        text.push_str(&format!(" and partition {}", describe_parts(p)));
    }
    text
}

fn describe_parts(parts: &Bipartition) -> String {
    let list =
        |s: &crate::graph::VertexSet| s.iter().map(|v| v.as_str()).collect::<Vec<_>>().join(",");
    format!("A={{{}}} B={{{}}}", list(parts.a()), list(parts.b()))
}

fn fail(what: &str, context: String) -> Outcome {
    Err(format!("{what}: {context}"))
}

/// Folds a library error into a counterexample.
fn guard(context: impl FnOnce() -> String, check: impl FnOnce() -> Result<Outcome>) -> Outcome {
    check().unwrap_or_else(|e| Err(format!("unexpected error {e}: {}", context())))
}

fn per_partition(
    graph: &SimpleGraph,
    check: impl Fn(&Bipartition) -> Result<Outcome>,
) -> Vec<Outcome> {
    per_partition_where(graph, |_| true, check)
}

/// Like [`per_partition`], over the partitions accepted by `applies` only.
fn per_partition_where(
    graph: &SimpleGraph,
    applies: impl Fn(&Bipartition) -> bool,
    check: impl Fn(&Bipartition) -> Result<Outcome>,
) -> Vec<Outcome> {
    match all_bipartitions(graph.vertices()) {
        Ok(parts) => parts
            .filter(|p| applies(p))
            .map(|p| guard(|| describe(graph, Some(&p)), || check(&p)))
            .collect(),
        Err(_) => Vec::new(),
    }
}

fn graph_unit(theorem: Theorem, g: &SimpleGraph) -> Vec<Outcome> {
    match theorem {
        Theorem::BePathUnion => per_partition(g, |p| {
            let union = union_of_be_paths(g, p, MAX_ENUMERATION_VERTICES)?;
            Ok(if is_path_bipartite(g, p) == (&union == g) {
                Ok(())
            } else {
                fail(
                    "path-bipartite disagrees with be-path union",
                    describe(g, Some(p)),
                )
            })
        }),
        Theorem::ComponentCriterion => per_partition(g, |p| {
            let pairs = bpath_pairs(g, p)?;
            let enumerated =
                pairs_from_be_paths(&enumerate_be_paths(g, p, MAX_ENUMERATION_VERTICES)?, p);
            if pairs != enumerated {
                return Ok(fail(
                    "component criterion disagrees with enumeration",
                    describe(g, Some(p)),
                ));
            }
            // a joined pair forces its whole component rectangle
            let induced_a = g.induced_subgraph(p.a())?;
            let induced_b = g.induced_subgraph(p.b())?;
            let (_, comp_a) = induced_a.component_index();
            let (_, comp_b) = induced_b.component_index();
            for (a, b) in &pairs {
                for (a2, b2) in p.a().iter().flat_map(|x| p.b().iter().map(move |y| (x, y))) {
                    if comp_a[a2] == comp_a[a]
                        && comp_b[b2] == comp_b[b]
                        && !pairs.contains(&(a2.clone(), b2.clone()))
                    {
                        return Ok(fail(
                            "joined pairs are not closed under components",
                            describe(g, Some(p)),
                        ));
                    }
                }
            }
            Ok(Ok(()))
        }),
        Theorem::QuotientCompleteness => per_partition(g, |p| {
            let q = quotient_graph(g, p)?;
            Ok(if is_path_complete(g, p)? == q.is_complete_bipartite() {
                Ok(())
            } else {
                fail(
                    "path-complete disagrees with quotient",
                    describe(g, Some(p)),
                )
            })
        }),
        Theorem::SingletonPartConnectivity => per_partition_where(
            g,
            |p| p.a().len().min(p.b().len()) == 1 && is_path_bipartite(g, p),
            |p| {
                Ok(if g.is_connected() == is_path_complete(g, p)? {
                    Ok(())
                } else {
                    fail(
                        "connectivity disagrees with path-completeness",
                        describe(g, Some(p)),
                    )
                })
            },
        ),
        Theorem::IsolatedVertexCertificate => vec![guard(
            || describe(g, None),
            || {
                let cert = certify_path_proximinal(g);
                if cert.is_some() == g.has_isolated_vertex() {
                    return Ok(fail(
                        "certificate presence disagrees with isolated vertices",
                        describe(g, None),
                    ));
                }
                if let Some(c) = cert {
                    let report = c.space.proximity_report(&c.parts)?;
                    if !c.verify()? || report.distance <= int(0) || report.pairs.is_empty() {
                        return Ok(fail("certificate does not verify", describe(g, None)));
                    }
                }
                Ok(Ok(()))
            },
        )],
        Theorem::PartitionExistence => vec![guard(
            || describe(g, None),
            || {
                let exists = match all_bipartitions(g.vertices()) {
                    Ok(mut parts) => parts.any(|p| is_path_bipartite(g, &p)),
                    Err(_) => false,
                };
                let found = find_path_bipartite_partition(g);
                let found_ok = found.as_ref().is_none_or(|p| is_path_bipartite(g, p));
                Ok(
                    if exists != g.has_isolated_vertex() && found.is_some() == exists && found_ok {
                        Ok(())
                    } else {
                        fail(
                            "partition search disagrees with isolated vertices",
                            describe(g, None),
                        )
                    },
                )
            },
        )],
        Theorem::UltrametricMatching => vec![guard(
            || describe(g, None),
            || {
                let cert = witness_ultrametric(g);
                if cert.is_some() != all_degrees_one(g) {
                    return Ok(fail(
                        "ultrametric witness disagrees with degree test",
                        describe(g, None),
                    ));
                }
                if let Some(c) = cert {
                    let ok = c.space.satisfies_strong_triangle()
                        && c.space.classify() == SpaceClass::Ultrametric
                        && c.graph.is_bipartite_with(&c.parts)
                        && c.space.set_distance(c.parts.a(), c.parts.b())? == int(1)
                        && c.verify()?;
                    if !ok {
                        return Ok(fail(
                            "ultrametric witness does not verify",
                            describe(g, None),
                        ));
                    }
                }
                Ok(Ok(()))
            },
        )],
        Theorem::MatchingComponents => vec![guard(
            || describe(g, None),
            || {
                let cert = witness_ultrametric(g);
                if cert.is_some() != components_are_pairs(g) {
                    return Ok(fail(
                        "ultrametric witness disagrees with component sizes",
                        describe(g, None),
                    ));
                }
                if let Some(c) = cert {
                    if !c.verify()? || !verify_proximinal_graph(&c.graph, &c.parts, &c.space)? {
                        return Ok(fail(
                            "matching witness is not proximinal and path-proximinal",
                            describe(g, None),
                        ));
                    }
                }
                Ok(Ok(()))
            },
        )],
        Theorem::BestProximityCoverage => per_partition_where(
            g,
            |p| !g.is_empty() && g.is_bipartite_with(p),
            |p| {
                let space = witness_proximinal_metric(g, p)?;
                Ok(
                    if best_proximity_covers_parts(g, p, &space)? != g.has_isolated_vertex() {
                        Ok(())
                    } else {
                        fail(
                            "coverage disagrees with isolated vertices",
                            describe(g, Some(p)),
                        )
                    },
                )
            },
        ),
        Theorem::WithinPartSeparation => per_partition_where(
            g,
            |p| !g.is_empty() && !g.has_isolated_vertex() && g.is_bipartite_with(p),
            |p| {
                let space = witness_proximinal_metric(g, p)?;
                separation_outcome(g, p, &space)
            },
        ),
        Theorem::UltrametricDiameter | Theorem::StructuralConditions => Vec::new(),
    }
}

fn separation_outcome(
    g: &SimpleGraph,
    p: &Bipartition,
    space: &FiniteSemimetricSpace,
) -> Result<Outcome> {
    Ok(
        if verify_path_proximinal(g, p, space)? == within_part_separation(space, p)? {
            Ok(())
        } else {
            fail(
                "path-proximinal disagrees with within-part separation",
                describe(g, Some(p)),
            )
        },
    )
}

fn per_space_partition(
    seed: u64,
    space: Result<FiniteSemimetricSpace>,
    check: impl Fn(&FiniteSemimetricSpace, &Bipartition) -> Result<Outcome>,
) -> Vec<Outcome> {
    per_space_partition_where(seed, space, |_, _| Ok(true), check)
}

/// Like [`per_space_partition`], over the partitions accepted by `applies` only.
fn per_space_partition_where(
    seed: u64,
    space: Result<FiniteSemimetricSpace>,
    applies: impl Fn(&FiniteSemimetricSpace, &Bipartition) -> Result<bool>,
    check: impl Fn(&FiniteSemimetricSpace, &Bipartition) -> Result<Outcome>,
) -> Vec<Outcome> {
    let space = match space {
        Ok(s) => s,
        Err(e) => return vec![Err(format!("seed {seed}: generator failed: {e}"))],
    };
    let parts = all_bipartitions(&space.point_set()).expect("generated spaces have 2..=8 points");
    parts
        .filter(|p| applies(&space, p).unwrap_or(true))
        .map(|p| {
            guard(
                || format!("seed {seed}, {}", describe_parts(&p)),
                || check(&space, &p),
            )
        })
        .collect()
}

fn seed_unit(theorem: Theorem, seed: u64) -> Vec<Outcome> {
    let ctx = |p: &Bipartition| format!("seed {seed}, {}", describe_parts(p));
    match theorem {
        Theorem::UltrametricDiameter => {
            let n = 2 + (seed % 7) as usize;
            per_space_partition(seed, random_ultrametric_space(n, seed), |s, p| {
                let (stmt1, stmt2) = s.ultrametric_diameter_criterion(p)?;
                Ok(if stmt1 == stmt2 {
                    Ok(())
                } else {
                    fail("diameter criterion disagrees", ctx(p))
                })
            })
        }
        Theorem::StructuralConditions => {
            let n = 2 + (seed % 6) as usize;
            per_space_partition(seed, random_semimetric_space(n, seed), |s, p| {
                let g = build_threshold_graph(s, p)?;
                Ok(
                    if parts_reach_best_proximity(s, p)? == is_path_bipartite(&g, p) {
                        Ok(())
                    } else {
                        fail(
                            "structural conditions disagree with path-bipartiteness",
                            ctx(p),
                        )
                    },
                )
            })
        }
        Theorem::BestProximityCoverage => {
            let n = 2 + (seed % 6) as usize;
            per_space_partition(seed, random_semimetric_space(n, seed), |s, p| {
                let g = build_proximinal_graph(s, p)?;
                Ok(
                    if best_proximity_covers_parts(&g, p, s)? != g.has_isolated_vertex() {
                        Ok(())
                    } else {
                        fail("coverage disagrees with isolated vertices", ctx(p))
                    },
                )
            })
        }
        Theorem::MatchingComponents => {
            let n = 2 + (seed % 7) as usize;
            let qualifies = |s: &FiniteSemimetricSpace, p: &Bipartition| {
                verify_path_proximinal(&build_proximinal_graph(s, p)?, p, s)
            };
            per_space_partition_where(
                seed,
                random_ultrametric_space(n, seed),
                qualifies,
                |s, p| {
                    let proximinal = build_proximinal_graph(s, p)?;
                    Ok(if components_are_pairs(&proximinal) {
                        Ok(())
                    } else {
                        fail(
                        "proximinal and path-proximinal graph has a component of size other than 2",
                        ctx(p),
                    )
                    })
                },
            )
        }
        Theorem::WithinPartSeparation => perturbed_separation(seed),
        _ => Vec::new(),
    }
}

/// One random bipartite graph without isolated vertices, its witness metric,
/// and a random rescaling of the within-part distances.
fn perturbed_separation(seed: u64) -> Vec<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=6usize);
    let g = match random_graph(n, Rational::new(2, 3), seed) {
        Ok(g) => g,
        Err(e) => return vec![Err(format!("seed {seed}: generator failed: {e}"))],
    };
    let labels: Vec<_> = g.vertices().iter().cloned().collect();
    let mask: u32 = rng.gen_range(1..(1u32 << n) - 1);
    let parts = Bipartition::new(
        labels
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, v)| v.clone())
            .collect(),
        labels
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 0)
            .map(|(_, v)| v.clone())
            .collect(),
    )
    .expect("mask is neither empty nor full");
    let cross = match g.induced_bipartite_subgraph(&parts) {
        Ok(c) => c,
        Err(e) => return vec![Err(format!("seed {seed}: {e}"))],
    };
    if cross.is_empty() || cross.has_isolated_vertex() {
        return Vec::new();
    }
    let choices = [
        Rational::new(1, 2),
        int(1),
        Rational::new(3, 2),
        int(2),
        int(3),
    ];
    let mut within = std::collections::BTreeMap::new();
    for (i, x) in labels.iter().enumerate() {
        for y in &labels[i + 1..] {
            if parts.side(x) == parts.side(y) {
                within.insert(
                    (x.clone(), y.clone()),
                    choices[rng.gen_range(0..choices.len())],
                );
            }
        }
    }
    vec![guard(
        || format!("seed {seed}, {}", describe(&cross, Some(&parts))),
        || {
            let space = FiniteSemimetricSpace::from_fn(labels.clone(), |x, y| {
                let key = if x < y {
                    (x.clone(), y.clone())
                } else {
                    (y.clone(), x.clone())
                };
                match within.get(&key) {
                    Some(d) => *d,
                    None if cross.has_edge(x, y) => int(1),
                    None => int(2),
                }
            })?;
            if !verify_proximinal_graph(&cross, &parts, &space)? {
                return Ok(fail(
                    "perturbation broke the proximinal graph",
                    describe(&cross, Some(&parts)),
                ));
            }
            separation_outcome(&cross, &parts, &space)
        },
    )]
}

/// Qualifying instances from one random ultrametric: partitions whose
/// threshold graph is bipartite with the parts and path-proximinal.
fn ultrametric_matching_seed(seed: u64) -> Vec<Outcome> {
    let n = 2 + (seed % 7) as usize;
    let space = match random_ultrametric_space(n, seed) {
        Ok(s) => s,
        Err(e) => return vec![Err(format!("seed {seed}: generator failed: {e}"))],
    };
    let mut outcomes = Vec::new();
    for p in all_bipartitions(&space.point_set()).expect("generated spaces have 2..=8 points") {
        let ctx = || format!("seed {seed}, {}", describe_parts(&p));
        let qualifying = build_threshold_graph(&space, &p).and_then(|g| {
            let ok = g.is_bipartite_with(&p) && verify_path_proximinal(&g, &p, &space)?;
            Ok(ok.then_some(g))
        });
        match qualifying {
            Err(e) => outcomes.push(Err(format!("unexpected error {e}: {}", ctx()))),
            Ok(None) => {}
            Ok(Some(g)) => outcomes.push(guard(ctx, || {
                if !components_are_pairs(&g) {
                    return Ok(fail(
                        "threshold graph has a component of size other than 2",
                        ctx(),
                    ));
                }
                if !ultrametric_connectivity(&g, &p, &space)?.all_equal() {
                    return Ok(fail("connectivity statements disagree", ctx()));
                }
                Ok(Ok(()))
            })),
        }
    }
    outcomes
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(_theorem: Theorem) -> SweepConfig {
        SweepConfig {
            min_n: 1,
            max_n: 4,
            instances: 30,
            seed: 7,
            jobs: 1,
        }
    }

    #[test]
    fn ids_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(t.id().parse::<Theorem>().unwrap(), t);
        }
        assert_eq!(
            "t9.9".parse::<Theorem>(),
            Err(Error::UnknownName("t9.9".into()))
        );
    }

    #[test]
    fn every_theorem_passes_small_sweeps() {
        for t in Theorem::ALL {
            let report = run_sweep(t, &small(t), |_| {}).unwrap();
            assert!(report.passed(), "{t}: {:?}", report.counterexample);
            assert!(report.instances_checked > 0, "{t}");
        }
    }

    #[test]
    fn be_path_union_counts_four_vertex_instances() {
        let cfg = SweepConfig {
            min_n: 4,
            max_n: 4,
            ..small(Theorem::BePathUnion)
        };
        let report = run_sweep(Theorem::BePathUnion, &cfg, |_| {}).unwrap();
        assert_eq!(report.instances_checked, 64 * 14);
    }

    #[test]
    fn quota_sweep_stops_at_requested_count() {
        let cfg = SweepConfig {
            instances: 17,
            ..small(Theorem::UltrametricMatching)
        };
        let report = run_sweep(Theorem::UltrametricMatching, &cfg, |_| {}).unwrap();
        // exhaustive part on n <= 4 plus exactly 17 random instances
        let graphs: usize = (1..=4).map(|n| 1usize << (n * (n - 1) / 2)).sum();
        assert_eq!(report.instances_checked, graphs + 17);
    }

    #[test]
    fn bounds_are_enforced() {
        let cfg = SweepConfig {
            max_n: 8,
            ..small(Theorem::BePathUnion)
        };
        assert!(matches!(
            run_sweep(Theorem::BePathUnion, &cfg, |_| {}),
            Err(Error::SizeExceeded(_))
        ));
        let cfg = SweepConfig {
            min_n: 5,
            max_n: 4,
            ..small(Theorem::BePathUnion)
        };
        assert!(run_sweep(Theorem::BePathUnion, &cfg, |_| {}).is_err());
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn worker_count_does_not_change_reports() {
        for t in [
            Theorem::ComponentCriterion,
            Theorem::UltrametricDiameter,
            Theorem::UltrametricMatching,
        ] {
            let one = run_sweep(t, &small(t), |_| {}).unwrap();
            let four = run_sweep(
                t,
                &SweepConfig {
                    jobs: 4,
                    ..small(t)
                },
                |_| {},
            )
            .unwrap();
            assert_eq!(one, four);
        }
    }

    #[test]
    fn progress_is_monotone() {
        let mut seen = Vec::new();
        run_sweep(
            Theorem::IsolatedVertexCertificate,
            &small(Theorem::IsolatedVertexCertificate),
            |c| seen.push(c),
        )
        .unwrap();
        assert!(seen.windows(2).all(|w| w[0] <= w[1]));
        assert!(!seen.is_empty());
    }
}
