//! Browser bindings for the demo page.
//!
//! Every exported function takes and returns JSON text so the page can stay
//! plain JavaScript. Failures come back as `{"error": "..."}`.

use serde::Serialize;
use serde_json::json;
use wasm_bindgen::prelude::wasm_bindgen;

use proxigraph::instances::{lattice_points, lattice_truncation, TruncationParams};
use proxigraph::io::{parse_graph, parse_partition, SpaceFile};
use proxigraph::path_proximinal::{
    build_threshold_graph, verify_path_proximinal, witness_metric_for_path_bipartite,
    witness_ultrametric,
};
use proxigraph::paths::{
    be_path_witness, bpath_pairs, find_path_bipartite_partition, is_path_bipartite,
    is_path_complete, one_sided_component, quotient_graph,
};
use proxigraph::{Bipartition, Error, SimpleGraph, VertexId};

fn labels<'a>(set: impl IntoIterator<Item = &'a VertexId>) -> Vec<String> {
    set.into_iter().map(|v| v.to_string()).collect()
}

fn edges(graph: &SimpleGraph) -> Vec<[String; 2]> {
    graph
        .edges()
        .iter()
        .map(|e| [e.first().to_string(), e.second().to_string()])
        .collect()
}

fn respond(result: Result<serde_json::Value, Error>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

#[derive(Serialize)]
struct Quotient {
    a_components: Vec<Vec<String>>,
    b_components: Vec<Vec<String>>,
    edges: Vec<(usize, usize)>,
}

/// Path structure of a graph with a partition: path-bipartiteness, joined
/// pairs, path-completeness, the component quotient, and a witness metric
/// when one exists.
#[wasm_bindgen]
pub fn analyze(graph_json: &str, partition_json: &str) -> String {
    respond((|| {
        let graph = parse_graph(graph_json)?;
        let parts = parse_partition(partition_json)?;
        parts.ensure_covers(graph.vertices())?;
        if parts.union() != *graph.vertices() {
            return Err(Error::VertexMismatch);
        }
        let path_bipartite = is_path_bipartite(&graph, &parts);
        let reason = one_sided_component(&graph, &parts).map(|c| {
            format!(
                "component {{{}}} meets only one part",
                labels(&c).join(", ")
            )
        });
        let pairs = bpath_pairs(&graph, &parts)?;
        let q = quotient_graph(&graph, &parts)?;
        let quotient = Quotient {
            a_components: q.a_components.iter().map(labels).collect(),
            b_components: q.b_components.iter().map(labels).collect(),
            edges: q.edges.iter().copied().collect(),
        };
        let witness = if path_bipartite {
            Some(SpaceFile::from_space(&witness_metric_for_path_bipartite(
                &graph, &parts,
            )?))
        } else {
            None
        };
        Ok(json!({
            "vertices": labels(graph.vertices()),
            "edges": edges(&graph),
            "A": labels(parts.a()),
            "B": labels(parts.b()),
            "path_bipartite": path_bipartite,
            "reason": reason,
            "pairs": pairs.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect::<Vec<_>>(),
            "pair_count": pairs.len(),
            "cross_count": parts.a().len() * parts.b().len(),
            "path_complete": is_path_complete(&graph, &parts)?,
            "quotient": quotient,
            "witness_metric": witness,
        }))
    })())
}

/// A be-path from `a ∈ A` to `b ∈ B`, or `{"path": null}` when the pair is not joined.
#[wasm_bindgen]
pub fn be_path(graph_json: &str, partition_json: &str, a: &str, b: &str) -> String {
    respond((|| {
        let graph = parse_graph(graph_json)?;
        let parts = parse_partition(partition_json)?;
        let w = be_path_witness(&graph, &parts, &VertexId::new(a)?, &VertexId::new(b)?)?;
        Ok(json!({
            "path": w.as_ref().map(|w| labels(w.path().vertices())),
            "crossing_index": w.as_ref().map(|w| w.crossing_index()),
        }))
    })())
}

/// The truncated complex-lattice space with its threshold graph.
#[wasm_bindgen]
pub fn truncation(n: u32, m: u32, k: u32) -> String {
    respond((|| {
        let params = TruncationParams::new(n, m, k)?;
        let (space, parts) = lattice_truncation(params)?;
        let graph = build_threshold_graph(&space, &parts)?;
        let points: Vec<_> = lattice_points(params)
            .into_iter()
            .map(|p| json!({ "label": p.label.as_str(), "re": p.re, "im": p.im }))
            .collect();
        Ok(json!({
            "points": points,
            "edges": edges(&graph),
            "A": labels(parts.a()),
            "B": labels(parts.b()),
            "dist": space.set_distance(parts.a(), parts.b())?.to_string(),
            "class": space.classify().to_string(),
            "path_complete": is_path_complete(&graph, &parts)?,
            "path_proximinal": verify_path_proximinal(&graph, &parts, &space)?,
        }))
    })())
}

/// A certificate that the graph is path-proximinal. `kind` is `metric`
/// (any graph without isolated vertices) or `ultrametric` (perfect matchings).
#[wasm_bindgen]
pub fn certify(graph_json: &str, kind: &str) -> String {
    respond((|| {
        let graph = parse_graph(graph_json)?;
        let found: Option<(Bipartition, _)> = match kind {
            "metric" => match find_path_bipartite_partition(&graph) {
                Some(parts) => {
                    let space = witness_metric_for_path_bipartite(&graph, &parts)?;
                    Some((parts, space))
                }
                None => None,
            },
            "ultrametric" => witness_ultrametric(&graph).map(|c| (c.parts, c.space)),
            other => return Err(Error::UnknownName(other.to_string())),
        };
        let Some((parts, space)) = found else {
            let reason = if kind == "metric" {
                "the graph has an isolated vertex"
            } else {
                "some vertex does not have exactly one neighbor"
            };
            return Ok(json!({ "certified": false, "reason": reason }));
        };
        Ok(json!({
            "certified": true,
            "verified": verify_path_proximinal(&graph, &parts, &space)?,
            "A": labels(parts.a()),
            "B": labels(parts.b()),
            "class": space.classify().to_string(),
            "dist": space.set_distance(parts.a(), parts.b())?.to_string(),
            "space": SpaceFile::from_space(&space),
        }))
    })())
}
