//! Path-proximinal graphs: threshold graphs of a space at `dist(A, B)` that
//! are also path-bipartite, with witness metrics and ultrametrics.

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Edge, SimpleGraph, VertexSet};
use crate::metric::{FiniteSemimetricSpace, SpaceClass};
use crate::paths::{find_path_bipartite_partition, is_path_bipartite, is_path_complete};
use crate::proximinal::{edge_metric, verify_proximinal_graph};

/// A graph with parts and a space for which it is path-proximinal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathProximinalCertificate {
    pub graph: SimpleGraph,
    pub parts: Bipartition,
    pub space: FiniteSemimetricSpace,
}

impl PathProximinalCertificate {
    pub fn verify(&self) -> Result<bool> {
        verify_path_proximinal(&self.graph, &self.parts, &self.space)
    }
}

/// The graph on all points with `{x, y}` an edge iff `0 < d(x, y) <= dist(A, B)`.
pub fn build_threshold_graph(
    space: &FiniteSemimetricSpace,
    parts: &Bipartition,
) -> Result<SimpleGraph> {
    parts.ensure_covers(&space.point_set())?;
    let threshold = space.set_distance(parts.a(), parts.b())?;
    let points = space.points();
    let mut edges = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if space.at(i, j) <= threshold {
                edges.push(Edge::new(points[i].clone(), points[j].clone())?);
            }
        }
    }
    SimpleGraph::from_edges(space.point_set(), edges)
}

/// True iff `graph` is the threshold graph of `space` at `dist(A, B)`, is
/// path-bipartite for `parts`, and both parts are proximinal.
pub fn verify_path_proximinal(
    graph: &SimpleGraph,
    parts: &Bipartition,
    space: &FiniteSemimetricSpace,
) -> Result<bool> {
    if graph.vertices() != &space.point_set() {
        return Err(Error::VertexMismatch);
    }
    if parts.ensure_covers(graph.vertices()).is_err() {
        return Ok(false);
    }
    Ok(space.is_proximinal(parts.a())?
        && space.is_proximinal(parts.b())?
        && &build_threshold_graph(space, parts)? == graph
        && is_path_bipartite(graph, parts))
}

/// Checks that every point of `A ∖ A0` reaches `A0` inside the threshold
/// graph restricted to `A`, and likewise for `B`.
pub fn parts_reach_best_proximity(
    space: &FiniteSemimetricSpace,
    parts: &Bipartition,
) -> Result<bool> {
    let graph = build_threshold_graph(space, parts)?;
    let report = space.proximity_report(parts)?;
    Ok(
        part_reaches(&graph, parts.a(), &report.a0)?
            && part_reaches(&graph, parts.b(), &report.b0)?,
    )
}

fn part_reaches(graph: &SimpleGraph, part: &VertexSet, targets: &VertexSet) -> Result<bool> {
    let induced = graph.induced_subgraph(part)?;
    // A component of G[part] is fine iff it contains a target.
    Ok(induced
        .connected_components()
        .iter()
        .all(|c| c.iter().any(|v| targets.contains(v))))
}

/// A `{0, 1, 2}` metric for which a path-bipartite `graph` is path-proximinal.
pub fn witness_metric_for_path_bipartite(
    graph: &SimpleGraph,
    parts: &Bipartition,
) -> Result<FiniteSemimetricSpace> {
    if !is_path_bipartite(graph, parts) {
        return Err(Error::NotPathBipartite);
    }
    edge_metric(graph)
}

/// A path-proximinal certificate for any graph without isolated vertices.
pub fn certify_path_proximinal(graph: &SimpleGraph) -> Option<PathProximinalCertificate> {
    let parts = find_path_bipartite_partition(graph)?;
    let space = witness_metric_for_path_bipartite(graph, &parts).ok()?;
    Some(PathProximinalCertificate {
        graph: graph.clone(),
        parts,
        space,
    })
}

/// For a graph proximinal with respect to `space`, whether every point of
/// each part lies in a best proximity pair (`A0 = A` and `B0 = B`).
pub fn best_proximity_covers_parts(
    graph: &SimpleGraph,
    parts: &Bipartition,
    space: &FiniteSemimetricSpace,
) -> Result<bool> {
    if !verify_proximinal_graph(graph, parts, space)? {
        return Err(Error::NotAProximinalGraph);
    }
    let report = space.proximity_report(parts)?;
    Ok(&report.a0 == parts.a() && &report.b0 == parts.b())
}

/// True iff distinct points of the same part are farther apart than `dist(A, B)`.
pub fn within_part_separation(space: &FiniteSemimetricSpace, parts: &Bipartition) -> Result<bool> {
    parts.ensure_covers(&space.point_set())?;
    let dist = space.set_distance(parts.a(), parts.b())?;
    for part in [parts.a(), parts.b()] {
        for x in part {
            for y in part.range(x..).skip(1) {
                if space.distance(x, y)? <= dist {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// True iff every vertex has exactly one neighbor. False for a graph with no vertices.
pub fn all_degrees_one(graph: &SimpleGraph) -> bool {
    graph.vertex_count() > 0 && graph.vertices().iter().all(|v| graph.degree(v) == 1)
}

/// An ultrametric certificate for a perfect matching, or `None` otherwise.
///
/// For each edge the smaller label goes to `A`. Distances are 1 on edges and 2
/// on other distinct pairs.
pub fn witness_ultrametric(graph: &SimpleGraph) -> Option<PathProximinalCertificate> {
    if !all_degrees_one(graph) {
        return None;
    }
    let a: VertexSet = graph.edges().iter().map(|e| e.first().clone()).collect();
    let b: VertexSet = graph.edges().iter().map(|e| e.second().clone()).collect();
    let parts = Bipartition::new(a, b).ok()?;
    let space = edge_metric(graph).ok()?;
    Some(PathProximinalCertificate {
        graph: graph.clone(),
        parts,
        space,
    })
}

/// True iff every connected component has exactly two vertices.
pub fn components_are_pairs(graph: &SimpleGraph) -> bool {
    let comps = graph.connected_components();
    !comps.is_empty() && comps.iter().all(|c| c.len() == 2)
}

/// Four statements about a path-proximinal graph over an ultrametric space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UltrametricConnectivity {
    pub connected: bool,
    pub complete: bool,
    pub cross_complete: bool,
    pub path_complete: bool,
}

impl UltrametricConnectivity {
    pub fn all_equal(&self) -> bool {
        self.connected == self.complete
            && self.complete == self.cross_complete
            && self.cross_complete == self.path_complete
    }
}

/// Evaluates connectedness, completeness, complete-bipartiteness of `G[A, B]`,
/// and path-completeness for a bipartite path-proximinal graph of an ultrametric.
pub fn ultrametric_connectivity(
    graph: &SimpleGraph,
    parts: &Bipartition,
    space: &FiniteSemimetricSpace,
) -> Result<UltrametricConnectivity> {
    if space.classify() != SpaceClass::Ultrametric {
        return Err(Error::PreconditionViolation(
            "space is not ultrametric".into(),
        ));
    }
    if !graph.is_bipartite_with(parts) {
        return Err(Error::PreconditionViolation(
            "graph is not bipartite with the given parts".into(),
        ));
    }
    if !verify_path_proximinal(graph, parts, space)? {
        return Err(Error::PreconditionViolation(
            "graph is not path-proximinal".into(),
        ));
    }
    let cross = graph.induced_bipartite_subgraph(parts)?;
    Ok(UltrametricConnectivity {
        connected: graph.is_connected(),
        complete: graph.is_complete(),
        cross_complete: cross.edge_count() == parts.a().len() * parts.b().len(),
        path_complete: is_path_complete(graph, parts)?,
    })
}
