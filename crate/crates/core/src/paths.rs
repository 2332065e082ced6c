//! Be-paths, path-bipartite graphs, the set of be-path-joined pairs, and the
//! component quotient graph.
//!
//! A be-path of `(A, B)` is a simple path inside `A ∪ B` with exactly one edge
//! meeting both parts. Membership of `(a, b)` in the joined-pair set is decided
//! through components of `G[A]` and `G[B]`; [`enumerate_be_paths`] is the
//! exhaustive oracle for the same set.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{Bipartition, PathSeq, Side, SimpleGraph, VertexId, VertexSet};

/// Default vertex bound for exhaustive be-path enumeration.
pub const DEFAULT_ENUMERATION_BOUND: usize = 10;

pub type VertexPair = (VertexId, VertexId);

/// A be-path with the position of its unique crossing edge.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BePathWitness {
    path: PathSeq,
    crossing_index: usize,
}

impl BePathWitness {
    pub fn path(&self) -> &PathSeq {
        &self.path
    }

    /// Index `i` such that `{path[i], path[i + 1]}` is the crossing edge.
    pub fn crossing_index(&self) -> usize {
        self.crossing_index
    }

    pub fn crossing_edge(&self) -> (&VertexId, &VertexId) {
        let v = self.path.vertices();
        (&v[self.crossing_index], &v[self.crossing_index + 1])
    }

    /// Endpoints ordered as `(a, b)` with `a ∈ A` and `b ∈ B`.
    pub fn joined_pair(&self, parts: &Bipartition) -> VertexPair {
        let (first, last) = (self.path.first().clone(), self.path.last().clone());
        if parts.side(&first) == Some(Side::A) {
            (first, last)
        } else {
            (last, first)
        }
    }
}

/// Checks whether `seq` is a be-path of `parts` in `graph`.
///
/// Fails with `NotAPath` when `seq` is not a simple path of `graph`.
pub fn is_be_path(
    graph: &SimpleGraph,
    seq: &[VertexId],
    parts: &Bipartition,
) -> Result<Option<BePathWitness>> {
    let path = PathSeq::in_graph(graph, seq.to_vec())?;
    if path.vertices().iter().any(|v| parts.side(v).is_none()) {
        return Ok(None);
    }
    let crossings: Vec<usize> = path
        .steps()
        .enumerate()
        .filter(|(_, (u, v))| parts.side(u) != parts.side(v))
        .map(|(i, _)| i)
        .collect();
    Ok(match crossings.as_slice() {
        [i] => Some(BePathWitness {
            path,
            crossing_index: *i,
        }),
        _ => None,
    })
}

/// True iff `V(G) = A ∪ B` and every component of `graph` meets both parts.
pub fn is_path_bipartite(graph: &SimpleGraph, parts: &Bipartition) -> bool {
    if &parts.union() != graph.vertices() {
        return false;
    }
    graph
        .connected_components()
        .iter()
        .all(|c| c.iter().any(|v| parts.a().contains(v)) && c.iter().any(|v| parts.b().contains(v)))
}

/// The first component meeting only one part, if any.
pub fn one_sided_component(graph: &SimpleGraph, parts: &Bipartition) -> Option<VertexSet> {
    graph.connected_components().into_iter().find(|c| {
        !(c.iter().any(|v| parts.a().contains(v)) && c.iter().any(|v| parts.b().contains(v)))
    })
}

struct PartComponents {
    a: Vec<VertexSet>,
    b: Vec<VertexSet>,
    a_index: BTreeMap<VertexId, usize>,
    b_index: BTreeMap<VertexId, usize>,
}

fn part_components(graph: &SimpleGraph, parts: &Bipartition) -> Result<PartComponents> {
    let (a, a_index) = graph.induced_subgraph(parts.a())?.component_index();
    let (b, b_index) = graph.induced_subgraph(parts.b())?.component_index();
    Ok(PartComponents {
        a,
        b,
        a_index,
        b_index,
    })
}

/// All `(a, b) ∈ A × B` joined by some be-path in `graph`.
///
/// A pair is joined iff the subgraph induced by the union of the component of
/// `a` in `G[A]` and the component of `b` in `G[B]` is connected.
pub fn bpath_pairs(graph: &SimpleGraph, parts: &Bipartition) -> Result<BTreeSet<VertexPair>> {
    parts.ensure_covers(graph.vertices())?;
    let comps = part_components(graph, parts)?;
    let mut pairs = BTreeSet::new();
    for ca in &comps.a {
        for cb in &comps.b {
            let joined: VertexSet = ca.union(cb).cloned().collect();
            if graph.induced_subgraph(&joined)?.is_connected() {
                for a in ca {
                    for b in cb {
                        pairs.insert((a.clone(), b.clone()));
                    }
                }
            }
        }
    }
    Ok(pairs)
}

/// A canonical be-path from `a ∈ A` to `b ∈ B`, or `None` when none exists.
///
/// The path runs inside `G[A]` from `a` to a crossing edge, then inside `G[B]`
/// to `b`. The crossing edge minimizes total length, ties broken by label.
pub fn be_path_witness(
    graph: &SimpleGraph,
    parts: &Bipartition,
    a: &VertexId,
    b: &VertexId,
) -> Result<Option<BePathWitness>> {
    parts.ensure_covers(graph.vertices())?;
    if !parts.a().contains(a) {
        return Err(Error::WrongSide {
            vertex: a.to_string(),
            part: 'A',
        });
    }
    if !parts.b().contains(b) {
        return Err(Error::WrongSide {
            vertex: b.to_string(),
            part: 'B',
        });
    }
    let ga = graph.induced_subgraph(parts.a())?;
    let gb = graph.induced_subgraph(parts.b())?;
    let from_a = ga.bfs_distances(a);
    let from_b = gb.bfs_distances(b);

    let best = graph
        .edges()
        .iter()
        .filter(|e| parts.is_cross(e))
        .map(|e| {
            if parts.a().contains(e.first()) {
                (e.first(), e.second())
            } else {
                (e.second(), e.first())
            }
        })
        .filter_map(|(a0, b0)| Some((from_a.get(a0)? + from_b.get(b0)?, a0, b0)))
        .min();
    let Some((_, a0, b0)) = best else {
        return Ok(None);
    };

    let mut order = ga
        .shortest_path_unchecked(a, a0)
        .map_or_else(|| vec![a.clone()], |p| p.vertices().to_vec());
    let crossing_index = order.len() - 1;
    let mut tail = gb
        .shortest_path_unchecked(b, b0)
        .map_or_else(|| vec![b.clone()], |p| p.vertices().to_vec());
    tail.reverse();
    order.extend(tail);
    Ok(Some(BePathWitness {
        path: PathSeq::from_trusted(order),
        crossing_index,
    }))
}

/// Every be-path of `parts` in `graph`, by depth-first extension.
///
/// Each path appears once per direction.
pub fn enumerate_be_paths(
    graph: &SimpleGraph,
    parts: &Bipartition,
    max_vertices: usize,
) -> Result<BTreeSet<BePathWitness>> {
    if graph.vertex_count() > max_vertices {
        return Err(Error::SizeExceeded(format!(
            "{} vertices exceeds the enumeration bound {max_vertices}",
            graph.vertex_count()
        )));
    }
    parts.ensure_covers(graph.vertices())?;

    let mut found = BTreeSet::new();
    let mut stack: Vec<VertexId> = Vec::new();
    let mut on_path = VertexSet::new();
    for root in graph.vertices() {
        stack.push(root.clone());
        on_path.insert(root.clone());
        extend(graph, parts, &mut stack, &mut on_path, None, &mut found);
        on_path.remove(root);
        stack.pop();
    }
    Ok(found)
}

fn extend(
    graph: &SimpleGraph,
    parts: &Bipartition,
    stack: &mut Vec<VertexId>,
    on_path: &mut VertexSet,
    crossing: Option<usize>,
    found: &mut BTreeSet<BePathWitness>,
) {
    if let Some(i) = crossing {
        found.insert(BePathWitness {
            path: PathSeq::from_trusted(stack.clone()),
            crossing_index: i,
        });
    }
    let last = stack.last().expect("stack holds the root").clone();
    let next: Vec<VertexId> = graph
        .neighbors(&last)
        .filter(|w| !on_path.contains(*w))
        .cloned()
        .collect();
    for w in next {
        let crosses = parts.side(&last) != parts.side(&w);
        let crossing = match (crossing, crosses) {
            (Some(_), true) => continue,
            (Some(i), false) => Some(i),
            (None, true) => Some(stack.len() - 1),
            (None, false) => None,
        };
        on_path.insert(w.clone());
        stack.push(w.clone());
        extend(graph, parts, stack, on_path, crossing, found);
        stack.pop();
        on_path.remove(&w);
    }
}

/// Joined pairs read off an enumeration of be-paths.
pub fn pairs_from_be_paths<'a>(
    paths: impl IntoIterator<Item = &'a BePathWitness>,
    parts: &Bipartition,
) -> BTreeSet<VertexPair> {
    paths.into_iter().map(|w| w.joined_pair(parts)).collect()
}

/// Union of all enumerated be-paths; a graph with no vertices when there are none.
pub fn union_of_be_paths(
    graph: &SimpleGraph,
    parts: &Bipartition,
    max_vertices: usize,
) -> Result<SimpleGraph> {
    let paths = enumerate_be_paths(graph, parts, max_vertices)?;
    let pieces: Vec<SimpleGraph> = paths.iter().map(|w| w.path.to_graph()).collect();
    if pieces.is_empty() {
        return SimpleGraph::from_edges(VertexSet::new(), []);
    }
    SimpleGraph::union(&pieces)
}

/// True iff every pair of `A × B` is joined by a be-path.
pub fn is_path_complete(graph: &SimpleGraph, parts: &Bipartition) -> Result<bool> {
    let pairs = bpath_pairs(graph, parts)?;
    Ok(pairs.len() == parts.a().len() * parts.b().len())
}

/// Bipartite graph on the components of `G[A]` and `G[B]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientGraph {
    pub a_components: Vec<VertexSet>,
    pub b_components: Vec<VertexSet>,
    /// `(i, j)` joins `a_components[i]` and `b_components[j]`.
    pub edges: BTreeSet<(usize, usize)>,
}

impl QuotientGraph {
    pub fn a_representative(&self, i: usize) -> &VertexId {
        self.a_components[i]
            .first()
            .expect("components are nonempty")
    }

    pub fn b_representative(&self, j: usize) -> &VertexId {
        self.b_components[j]
            .first()
            .expect("components are nonempty")
    }

    pub fn is_complete_bipartite(&self) -> bool {
        self.edges.len() == self.a_components.len() * self.b_components.len()
    }

    /// DOT text; nodes are named `A:<rep>` and `B:<rep>` after the smallest label.
    pub fn to_dot(&self) -> String {
        let name = |side: char, rep: &VertexId| {
            format!("\"{}:{}\"", side, crate::graph::escape_dot(rep.as_str()))
        };
        let mut out = String::from("graph Q {\n");
        for i in 0..self.a_components.len() {
            out.push_str(&format!("  {};\n", name('A', self.a_representative(i))));
        }
        for j in 0..self.b_components.len() {
            out.push_str(&format!("  {};\n", name('B', self.b_representative(j))));
        }
        for &(i, j) in &self.edges {
            out.push_str(&format!(
                "  {} -- {};\n",
                name('A', self.a_representative(i)),
                name('B', self.b_representative(j))
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// The component quotient of `graph` for `parts`.
///
/// Two components are joined when some edge of `graph` runs between them.
pub fn quotient_graph(graph: &SimpleGraph, parts: &Bipartition) -> Result<QuotientGraph> {
    parts.ensure_covers(graph.vertices())?;
    let comps = part_components(graph, parts)?;
    let edges = graph
        .edges()
        .iter()
        .filter_map(|e| {
            let (u, v) = (e.first(), e.second());
            match (comps.a_index.get(u), comps.b_index.get(v)) {
                (Some(&i), Some(&j)) => Some((i, j)),
                _ => match (comps.a_index.get(v), comps.b_index.get(u)) {
                    (Some(&i), Some(&j)) => Some((i, j)),
                    _ => None,
                },
            }
        })
        .collect();
    Ok(QuotientGraph {
        a_components: comps.a,
        b_components: comps.b,
        edges,
    })
}

/// A covering partition making `graph` path-bipartite, or `None` when the
/// graph has an isolated vertex.
///
/// `A` takes the smallest label of each component; `B` takes the rest.
pub fn find_path_bipartite_partition(graph: &SimpleGraph) -> Option<Bipartition> {
    if graph.vertex_count() == 0 || graph.has_isolated_vertex() {
        return None;
    }
    let mut a = VertexSet::new();
    let mut b = VertexSet::new();
    for comp in graph.connected_components() {
        let mut it = comp.into_iter();
        a.extend(it.next());
        b.extend(it);
    }
    Bipartition::new(a, b).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::vertex_set;

    fn v(s: &str) -> VertexId {
        VertexId::new(s).unwrap()
    }

    fn seq(labels: &[&str]) -> Vec<VertexId> {
        labels.iter().map(|s| v(s)).collect()
    }

    fn p4() -> (SimpleGraph, Bipartition) {
        (
            SimpleGraph::build(
                ["a1", "b1", "a2", "b2"],
                [("a1", "b1"), ("b1", "a2"), ("a2", "b2")],
            )
            .unwrap(),
            Bipartition::from_labels(["a1", "a2"], ["b1", "b2"]).unwrap(),
        )
    }

    fn k2() -> (SimpleGraph, Bipartition) {
        (
            SimpleGraph::build(["a", "b"], [("a", "b")]).unwrap(),
            Bipartition::from_labels(["a"], ["b"]).unwrap(),
        )
    }

    fn pair(a: &str, b: &str) -> VertexPair {
        (v(a), v(b))
    }

    #[test]
    fn be_path_recognition() {
        let (g, parts) = p4();
        assert_eq!(
            is_be_path(&g, &seq(&["a1", "b1", "a2"]), &parts).unwrap(),
            None
        );
        let w = is_be_path(&g, &seq(&["b1", "a2"]), &parts)
            .unwrap()
            .unwrap();
        assert_eq!(w.crossing_index(), 0);
        assert!(matches!(
            is_be_path(&g, &seq(&["a1", "a2"]), &parts),
            Err(Error::NotAPath(_))
        ));
    }

    #[test]
    fn path_bipartite_decision() {
        let (g, parts) = p4();
        assert!(is_path_bipartite(&g, &parts));
        let two = SimpleGraph::build(["a", "b", "c", "d"], [("a", "b"), ("c", "d")]).unwrap();
        let parts = Bipartition::from_labels(["a", "b"], ["c", "d"]).unwrap();
        assert!(!is_path_bipartite(&two, &parts));
        assert_eq!(
            one_sided_component(&two, &parts),
            Some(vertex_set(["a", "b"]).unwrap())
        );
        let iso = SimpleGraph::build(["a", "b", "c"], [("a", "b")]).unwrap();
        for parts in [
            Bipartition::from_labels(["a"], ["b", "c"]).unwrap(),
            Bipartition::from_labels(["a", "c"], ["b"]).unwrap(),
            Bipartition::from_labels(["c"], ["a", "b"]).unwrap(),
        ] {
            assert!(!is_path_bipartite(&iso, &parts));
        }
    }

    #[test]
    fn bpath_pairs_small_cases() {
        let (g, parts) = k2();
        assert_eq!(
            bpath_pairs(&g, &parts).unwrap(),
            BTreeSet::from([pair("a", "b")])
        );
        let (g, parts) = p4();
        assert_eq!(
            bpath_pairs(&g, &parts).unwrap(),
            BTreeSet::from([pair("a1", "b1"), pair("a2", "b1"), pair("a2", "b2")])
        );
        let partial = Bipartition::from_labels(["a1"], ["b1"]).unwrap();
        assert!(matches!(
            bpath_pairs(&g, &partial),
            Err(Error::PartsNotCovering(_))
        ));
    }

    #[test]
    fn witnesses() {
        let (g, parts) = p4();
        assert_eq!(
            be_path_witness(&g, &parts, &v("a1"), &v("b2")).unwrap(),
            None
        );
        let w = be_path_witness(&g, &parts, &v("a1"), &v("b1"))
            .unwrap()
            .unwrap();
        assert_eq!(w.path().vertices(), seq(&["a1", "b1"]).as_slice());
        let w = be_path_witness(&g, &parts, &v("a2"), &v("b1"))
            .unwrap()
            .unwrap();
        assert!(is_be_path(&g, w.path().vertices(), &parts)
            .unwrap()
            .is_some());
        assert!(matches!(
            be_path_witness(&g, &parts, &v("b1"), &v("b2")),
            Err(Error::WrongSide { part: 'A', .. })
        ));
        let (g, parts) = k2();
        let w = be_path_witness(&g, &parts, &v("a"), &v("b"))
            .unwrap()
            .unwrap();
        assert_eq!(w.path().len(), 2);
    }

    #[test]
    fn enumeration_small_cases() {
        let (g, parts) = k2();
        assert_eq!(enumerate_be_paths(&g, &parts, 10).unwrap().len(), 2);

        let (g, parts) = p4();
        let all = enumerate_be_paths(&g, &parts, 10).unwrap();
        let joined = pairs_from_be_paths(&all, &parts);
        assert_eq!(joined, bpath_pairs(&g, &parts).unwrap());
        assert!(!joined.contains(&pair("a1", "b2")));

        let empty = SimpleGraph::build(["a", "b"], []).unwrap();
        let parts = Bipartition::from_labels(["a"], ["b"]).unwrap();
        assert!(enumerate_be_paths(&empty, &parts, 10).unwrap().is_empty());
        assert!(matches!(
            enumerate_be_paths(&empty, &parts, 1),
            Err(Error::SizeExceeded(_))
        ));
    }

    #[test]
    fn union_of_be_paths_cases() {
        let (g, parts) = p4();
        assert_eq!(union_of_be_paths(&g, &parts, 10).unwrap(), g);
        let iso = SimpleGraph::build(["a", "b", "c"], [("a", "b")]).unwrap();
        let parts = Bipartition::from_labels(["a"], ["b", "c"]).unwrap();
        let (k2g, _) = k2();
        assert_eq!(union_of_be_paths(&iso, &parts, 10).unwrap(), k2g);
    }

    #[test]
    fn completeness_and_quotient() {
        let (g, parts) = p4();
        assert!(!is_path_complete(&g, &parts).unwrap());
        let q = quotient_graph(&g, &parts).unwrap();
        assert_eq!(q.a_components.len(), 2);
        assert_eq!(q.b_components.len(), 2);
        assert_eq!(q.edges.len(), 3);
        // ({a1}, {b2}) is the missing edge
        assert!(!q.edges.contains(&(0, 1)));
        assert!(!q.is_complete_bipartite());

        let (g, parts) = k2();
        assert!(is_path_complete(&g, &parts).unwrap());
        let q = quotient_graph(&g, &parts).unwrap();
        assert_eq!(q.edges.len(), 1);
        assert!(q.is_complete_bipartite());
        assert!(q.to_dot().contains("\"A:a\" -- \"B:b\";"));
    }

    #[test]
    fn partition_finder() {
        let (g, _) = k2();
        let parts = find_path_bipartite_partition(&g).unwrap();
        assert_eq!(parts.a(), &vertex_set(["a"]).unwrap());
        assert_eq!(parts.b(), &vertex_set(["b"]).unwrap());
        let iso = SimpleGraph::build(["a", "b", "c"], [("a", "b")]).unwrap();
        assert_eq!(find_path_bipartite_partition(&iso), None);
    }
}
