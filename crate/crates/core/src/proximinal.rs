//! Proximinal bipartite graphs: edges are exactly the best proximity pairs.

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Edge, SimpleGraph};
use crate::metric::{int, FiniteSemimetricSpace};

/// A graph, its parts, and a space for which the graph is proximinal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProximinalGraphCertificate {
    pub graph: SimpleGraph,
    pub parts: Bipartition,
    pub space: FiniteSemimetricSpace,
}

impl ProximinalGraphCertificate {
    pub fn verify(&self) -> Result<bool> {
        verify_proximinal_graph(&self.graph, &self.parts, &self.space)
    }
}

/// The bipartite graph joining `a ∈ A` and `b ∈ B` iff `d(a, b) = dist(A, B)`.
pub fn build_proximinal_graph(
    space: &FiniteSemimetricSpace,
    parts: &Bipartition,
) -> Result<SimpleGraph> {
    parts.ensure_covers(&space.point_set())?;
    let report = space.proximity_report(parts)?;
    let edges = report
        .pairs
        .into_iter()
        .map(|(a, b)| Edge::new(a, b))
        .collect::<Result<Vec<_>>>()?;
    SimpleGraph::from_edges(space.point_set(), edges)
}

/// True iff `graph` is bipartite with `parts`, both parts are proximinal, and
/// cross adjacency matches attainment of `dist(A, B)`.
pub fn verify_proximinal_graph(
    graph: &SimpleGraph,
    parts: &Bipartition,
    space: &FiniteSemimetricSpace,
) -> Result<bool> {
    if graph.vertices() != &space.point_set() {
        return Err(Error::VertexMismatch);
    }
    if !graph.is_bipartite_with(parts) {
        return Ok(false);
    }
    if !space.is_proximinal(parts.a())? || !space.is_proximinal(parts.b())? {
        return Ok(false);
    }
    let dist = space.set_distance(parts.a(), parts.b())?;
    for a in parts.a() {
        for b in parts.b() {
            if graph.has_edge(a, b) != (space.distance(a, b)? == dist) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A metric with values in `{0, 1, 2}` for which `graph` is proximinal.
///
/// Edges get distance 1, all other distinct pairs distance 2.
pub fn witness_proximinal_metric(
    graph: &SimpleGraph,
    parts: &Bipartition,
) -> Result<FiniteSemimetricSpace> {
    parts.ensure_covers(graph.vertices())?;
    if let Some(e) = graph.edges().iter().find(|e| !parts.is_cross(e)) {
        return Err(Error::NotBipartiteWithParts(
            e.first().to_string(),
            e.second().to_string(),
        ));
    }
    if graph.is_empty() {
        return Err(Error::EmptyGraph);
    }
    edge_metric(graph)
}

/// The `{0, 1, 2}` metric of a graph: 1 on edges, 2 on other distinct pairs.
pub(crate) fn edge_metric(graph: &SimpleGraph) -> Result<FiniteSemimetricSpace> {
    let points = graph.vertices().iter().cloned().collect();
    FiniteSemimetricSpace::from_fn(
        points,
        |x, y| if graph.has_edge(x, y) { int(1) } else { int(2) },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexId;
    use crate::metric::{Rational, SpaceClass};

    fn pts(labels: &[&str]) -> Vec<VertexId> {
        labels.iter().map(|s| VertexId::new(*s).unwrap()).collect()
    }

    #[test]
    fn two_point_space_gives_k2() {
        let s = FiniteSemimetricSpace::from_fn(pts(&["a", "b"]), |_, _| int(1)).unwrap();
        let parts = Bipartition::from_labels(["a"], ["b"]).unwrap();
        let g = build_proximinal_graph(&s, &parts).unwrap();
        assert_eq!(g, SimpleGraph::build(["a", "b"], [("a", "b")]).unwrap());
        assert!(verify_proximinal_graph(&g, &parts, &s).unwrap());
    }

    #[test]
    fn unique_minimum_gives_single_edge() {
        let s = FiniteSemimetricSpace::from_fn(pts(&["a1", "a2", "b1", "b2"]), |x, y| {
            let mut pair = [x.as_str(), y.as_str()];
            pair.sort();
            if pair == ["a1", "b1"] {
                int(1)
            } else {
                int(2)
            }
        })
        .unwrap();
        let parts = Bipartition::from_labels(["a1", "a2"], ["b1", "b2"]).unwrap();
        let g = build_proximinal_graph(&s, &parts).unwrap();
        assert_eq!(g.edge_count(), 1);

        // deleting the edge or adding a within-part edge breaks verification
        let no_edge = SimpleGraph::build(["a1", "a2", "b1", "b2"], []).unwrap();
        assert!(!verify_proximinal_graph(&no_edge, &parts, &s).unwrap());
        let within =
            SimpleGraph::build(["a1", "a2", "b1", "b2"], [("a1", "b1"), ("a1", "a2")]).unwrap();
        assert!(!verify_proximinal_graph(&within, &parts, &s).unwrap());
    }

    #[test]
    fn vertex_mismatch_is_an_error() {
        let s = FiniteSemimetricSpace::from_fn(pts(&["a", "b"]), |_, _| int(1)).unwrap();
        let parts = Bipartition::from_labels(["a"], ["b"]).unwrap();
        let g = SimpleGraph::build(["a", "c"], [("a", "c")]).unwrap();
        assert_eq!(
            verify_proximinal_graph(&g, &parts, &s),
            Err(Error::VertexMismatch)
        );
    }

    #[test]
    fn star_witness() {
        let g = SimpleGraph::build(
            ["c", "l1", "l2", "l3"],
            [("c", "l1"), ("c", "l2"), ("c", "l3")],
        )
        .unwrap();
        let parts = Bipartition::from_labels(["c"], ["l1", "l2", "l3"]).unwrap();
        let s = witness_proximinal_metric(&g, &parts).unwrap();
        let id = |x: &str| VertexId::new(x).unwrap();
        assert_eq!(s.distance(&id("c"), &id("l2")).unwrap(), int(1));
        assert_eq!(s.distance(&id("l1"), &id("l3")).unwrap(), int(2));
        assert_eq!(s.classify(), SpaceClass::Metric);
        assert!(verify_proximinal_graph(&g, &parts, &s).unwrap());
        assert_eq!(
            s.set_distance(parts.a(), parts.b()).unwrap(),
            Rational::from_integer(1)
        );
    }

    #[test]
    fn witness_errors() {
        let empty = SimpleGraph::build(["a1", "a2", "b1", "b2"], []).unwrap();
        let parts = Bipartition::from_labels(["a1", "a2"], ["b1", "b2"]).unwrap();
        assert_eq!(
            witness_proximinal_metric(&empty, &parts),
            Err(Error::EmptyGraph)
        );
        let inside = SimpleGraph::build(["a1", "a2", "b1", "b2"], [("a1", "a2")]).unwrap();
        assert!(matches!(
            witness_proximinal_metric(&inside, &parts),
            Err(Error::NotBipartiteWithParts(..))
        ));
    }
}
