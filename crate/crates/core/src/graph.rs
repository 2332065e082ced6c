//! Finite simple graphs keyed by text labels.
//!
//! Every traversal expands neighbors in label order, so component lists,
//! shortest paths, and anything derived from them are reproducible.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vertex label: nonempty, no whitespace.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct VertexId(String);

impl VertexId {
    pub fn new(label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        if label.is_empty() || label.chars().any(char::is_whitespace) {
            return Err(Error::InvalidLabel(label));
        }
        Ok(VertexId(label))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for VertexId {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        VertexId::new(s)
    }
}

impl TryFrom<&str> for VertexId {
    type Error = Error;

    fn try_from(s: &str) -> Result<Self> {
        VertexId::new(s)
    }
}

impl From<VertexId> for String {
    fn from(v: VertexId) -> String {
        v.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub type VertexSet = BTreeSet<VertexId>;

/// Parses a list of labels into a vertex set, rejecting invalid labels.
pub fn vertex_set<I, S>(labels: I) -> Result<VertexSet>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    labels
        .into_iter()
        .map(|s| VertexId::new(s.as_ref()))
        .collect()
}

/// An unordered pair of distinct vertices, stored with the smaller label first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(VertexId, VertexId);

impl Edge {
    pub fn new(u: VertexId, v: VertexId) -> Result<Self> {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Ok(Edge(u, v)),
            std::cmp::Ordering::Greater => Ok(Edge(v, u)),
            std::cmp::Ordering::Equal => Err(Error::LoopEdge(u.0)),
        }
    }

    pub fn first(&self) -> &VertexId {
        &self.0
    }

    pub fn second(&self) -> &VertexId {
        &self.1
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        &self.0 == v || &self.1 == v
    }

    /// The endpoint opposite `v`, if `v` is an endpoint.
    pub fn other(&self, v: &VertexId) -> Option<&VertexId> {
        if &self.0 == v {
            Some(&self.1)
        } else if &self.1 == v {
            Some(&self.0)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.0, self.1)
    }
}

/// A finite simple graph. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    vertices: VertexSet,
    edges: BTreeSet<Edge>,
    adjacency: BTreeMap<VertexId, VertexSet>,
}

impl SimpleGraph {
    /// Builds a graph from labels and label pairs. Duplicate edges collapse.
    pub fn build<V, E, S>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        E: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let mut vset = VertexSet::new();
        for label in vertices {
            let v = VertexId::new(label.as_ref())?;
            if !vset.insert(v.clone()) {
                return Err(Error::DuplicateVertex(v.0));
            }
        }
        let mut eset = BTreeSet::new();
        for (u, v) in edges {
            let u = VertexId::new(u.as_ref())?;
            let v = VertexId::new(v.as_ref())?;
            if u == v {
                return Err(Error::LoopEdge(u.0));
            }
            for end in [&u, &v] {
                if !vset.contains(end) {
                    return Err(Error::UnknownEndpoint(end.0.clone()));
                }
            }
            eset.insert(Edge::new(u, v)?);
        }
        Ok(Self::from_parts(vset, eset))
    }

    /// Assembles a graph from an already validated vertex and edge set.
    ///
    /// Panics if an edge endpoint is missing from `vertices`.
    pub(crate) fn from_parts(vertices: VertexSet, edges: BTreeSet<Edge>) -> Self {
        let mut adjacency: BTreeMap<VertexId, VertexSet> = vertices
            .iter()
            .map(|v| (v.clone(), VertexSet::new()))
            .collect();
        for e in &edges {
            adjacency
                .get_mut(&e.0)
                .expect("edge endpoint must be a vertex")
                .insert(e.1.clone());
            adjacency
                .get_mut(&e.1)
                .expect("edge endpoint must be a vertex")
                .insert(e.0.clone());
        }
        SimpleGraph {
            vertices,
            edges,
            adjacency,
        }
    }

    /// Like [`SimpleGraph::build`] but for vertex ids that are already validated.
    pub fn from_edges(vertices: VertexSet, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let edges: BTreeSet<Edge> = edges.into_iter().collect();
        for e in &edges {
            for end in [e.first(), e.second()] {
                if !vertices.contains(end) {
                    return Err(Error::UnknownEndpoint(end.to_string()));
                }
            }
        }
        Ok(Self::from_parts(vertices, edges))
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// True when the graph has no edges.
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        self.vertices.contains(v)
    }

    pub fn has_edge(&self, u: &VertexId, v: &VertexId) -> bool {
        self.adjacency.get(u).is_some_and(|n| n.contains(v))
    }

    /// Neighbors of `v` in label order; empty for unknown vertices.
    pub fn neighbors<'a>(&'a self, v: &VertexId) -> impl Iterator<Item = &'a VertexId> + 'a {
        self.adjacency.get(v).into_iter().flatten()
    }

    pub fn degree(&self, v: &VertexId) -> usize {
        self.adjacency.get(v).map_or(0, BTreeSet::len)
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        self.adjacency
            .iter()
            .filter(|(_, n)| n.is_empty())
            .map(|(v, _)| v.clone())
            .collect()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adjacency.values().any(BTreeSet::is_empty)
    }

    /// True if every vertex of `self` and every edge of `self` is in `other`.
    pub fn is_subgraph_of(&self, other: &SimpleGraph) -> bool {
        self.vertices.is_subset(&other.vertices) && self.edges.is_subset(&other.edges)
    }

    /// The subgraph induced by `subset`.
    pub fn induced_subgraph(&self, subset: &VertexSet) -> Result<SimpleGraph> {
        if subset.is_empty() {
            return Err(Error::EmptySet);
        }
        if let Some(v) = subset.iter().find(|v| !self.contains(v)) {
            return Err(Error::NotSubset(v.to_string()));
        }
        Ok(self.induced_unchecked(subset))
    }

    fn induced_unchecked(&self, subset: &VertexSet) -> SimpleGraph {
        let edges = self
            .edges
            .iter()
            .filter(|e| subset.contains(&e.0) && subset.contains(&e.1))
            .cloned()
            .collect();
        SimpleGraph::from_parts(subset.clone(), edges)
    }

    /// The subgraph on `A ∪ B` that keeps only edges with one end in each part.
    pub fn induced_bipartite_subgraph(&self, parts: &Bipartition) -> Result<SimpleGraph> {
        if let Some(v) = parts.iter().find(|v| !self.contains(v)) {
            return Err(Error::NotSubset(v.to_string()));
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| parts.is_cross(e))
            .cloned()
            .collect();
        Ok(SimpleGraph::from_parts(parts.union(), edges))
    }

    /// Vertex sets of the connected components, ordered by smallest label.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut components = Vec::new();
        // Iterating in label order means each new root is the smallest label of
        // its component, which yields the required ordering for free.
        for root in &self.vertices {
            if seen.contains(root) {
                continue;
            }
            let mut block = VertexSet::new();
            let mut queue = VecDeque::from([root.clone()]);
            seen.insert(root.clone());
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(&v) {
                    if seen.insert(w.clone()) {
                        queue.push_back(w.clone());
                    }
                }
                block.insert(v);
            }
            components.push(block);
        }
        components
    }

    /// Maps each vertex to the index of its component in [`connected_components`](Self::connected_components).
    pub fn component_index(&self) -> (Vec<VertexSet>, BTreeMap<VertexId, usize>) {
        let components = self.connected_components();
        let index = components
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.iter().map(move |v| (v.clone(), i)))
            .collect();
        (components, index)
    }

    /// True iff there is exactly one connected component.
    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return false;
        }
        let root = self.vertices.first().expect("nonempty");
        self.bfs_parents(root).len() == self.vertices.len()
    }

    /// The subgraph without isolated vertices and with every edge kept.
    pub fn prune_isolated(&self) -> Result<SimpleGraph> {
        if self.edges.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let vertices = self
            .edges
            .iter()
            .flat_map(|e| [e.0.clone(), e.1.clone()])
            .collect();
        Ok(SimpleGraph::from_parts(vertices, self.edges.clone()))
    }

    fn bfs_parents(&self, root: &VertexId) -> BTreeMap<VertexId, Option<VertexId>> {
        let mut parent = BTreeMap::from([(root.clone(), None)]);
        let mut queue = VecDeque::from([root.clone()]);
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(&v) {
                if !parent.contains_key(w) {
                    parent.insert(w.clone(), Some(v.clone()));
                    queue.push_back(w.clone());
                }
            }
        }
        parent
    }

    /// Breadth-first distances from `root` within its component.
    pub fn bfs_distances(&self, root: &VertexId) -> BTreeMap<VertexId, usize> {
        let mut dist = BTreeMap::from([(root.clone(), 0usize)]);
        let mut queue = VecDeque::from([root.clone()]);
        while let Some(v) = queue.pop_front() {
            let d = dist[&v];
            for w in self.neighbors(&v) {
                if !dist.contains_key(w) {
                    dist.insert(w.clone(), d + 1);
                    queue.push_back(w.clone());
                }
            }
        }
        dist
    }

    /// A shortest path from `u` to `v`, or `None` when they lie in different components.
    pub fn find_path(&self, u: &VertexId, v: &VertexId) -> Result<Option<PathSeq>> {
        for end in [u, v] {
            if !self.contains(end) {
                return Err(Error::UnknownVertex(end.to_string()));
            }
        }
        if u == v {
            return Err(Error::EqualEndpoints(u.to_string()));
        }
        Ok(self.shortest_path_unchecked(u, v))
    }

    /// Shortest vertex sequence from `u` to `v` (a single vertex when they coincide).
    pub(crate) fn shortest_path_unchecked(&self, u: &VertexId, v: &VertexId) -> Option<PathSeq> {
        let parent = self.bfs_parents(u);
        if !parent.contains_key(v) {
            return None;
        }
        let mut order = vec![v.clone()];
        let mut cur = v;
        while let Some(Some(p)) = parent.get(cur) {
            order.push(p.clone());
            cur = p;
        }
        order.reverse();
        Some(PathSeq { order })
    }

    /// Vertex and edge union of a nonempty list of graphs.
    pub fn union<'a, I>(graphs: I) -> Result<SimpleGraph>
    where
        I: IntoIterator<Item = &'a SimpleGraph>,
    {
        let mut any = false;
        let mut vertices = VertexSet::new();
        let mut edges = BTreeSet::new();
        for g in graphs {
            any = true;
            vertices.extend(g.vertices.iter().cloned());
            edges.extend(g.edges.iter().cloned());
        }
        if !any {
            return Err(Error::EmptyList);
        }
        Ok(SimpleGraph::from_parts(vertices, edges))
    }

    /// True iff every two distinct vertices are adjacent.
    pub fn is_complete(&self) -> bool {
        let n = self.vertices.len();
        self.edges.len() == n * n.saturating_sub(1) / 2
    }

    /// True iff no edge lies inside one part. Parts must cover the vertex set.
    pub fn is_bipartite_with(&self, parts: &Bipartition) -> bool {
        parts.union() == self.vertices && self.edges.iter().all(|e| parts.is_cross(e))
    }

    /// DOT text with vertices in label order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in &self.vertices {
            out.push_str(&format!("  \"{}\";\n", escape_dot(v.as_str())));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "  \"{}\" -- \"{}\";\n",
                escape_dot(e.0.as_str()),
                escape_dot(e.1.as_str())
            ));
        }
        out.push_str("}\n");
        out
    }
}

pub(crate) fn escape_dot(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// A simple path `(u0, ..., uk)` with `k >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathSeq {
    order: Vec<VertexId>,
}

impl PathSeq {
    /// Validates `order` as a simple path in `graph`.
    pub fn in_graph(graph: &SimpleGraph, order: Vec<VertexId>) -> Result<Self> {
        if order.len() < 2 {
            return Err(Error::NotAPath("a path needs at least two vertices".into()));
        }
        let mut seen = VertexSet::new();
        for v in &order {
            if !graph.contains(v) {
                return Err(Error::UnknownVertex(v.to_string()));
            }
            if !seen.insert(v.clone()) {
                return Err(Error::NotAPath(format!("vertex {v} repeats")));
            }
        }
        for w in order.windows(2) {
            if !graph.has_edge(&w[0], &w[1]) {
                return Err(Error::NotAPath(format!(
                    "{} and {} are not adjacent",
                    w[0], w[1]
                )));
            }
        }
        Ok(PathSeq { order })
    }

    pub(crate) fn from_trusted(order: Vec<VertexId>) -> Self {
        debug_assert!(order.len() >= 2);
        PathSeq { order }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn first(&self) -> &VertexId {
        &self.order[0]
    }

    pub fn last(&self) -> &VertexId {
        self.order.last().expect("path is nonempty")
    }

    /// Consecutive vertex pairs.
    pub fn steps(&self) -> impl Iterator<Item = (&VertexId, &VertexId)> {
        self.order.windows(2).map(|w| (&w[0], &w[1]))
    }

    /// The path as a graph on its own vertices and edges.
    pub fn to_graph(&self) -> SimpleGraph {
        let vertices = self.order.iter().cloned().collect();
        let edges = self
            .steps()
            .map(|(u, v)| Edge::new(u.clone(), v.clone()).expect("path vertices are distinct"))
            .collect();
        SimpleGraph::from_parts(vertices, edges)
    }
}

impl fmt::Display for PathSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.order.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Which part of a [`Bipartition`] a vertex belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

/// An ordered pair of disjoint nonempty vertex sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    a: VertexSet,
    b: VertexSet,
}

impl Bipartition {
    pub fn new(a: VertexSet, b: VertexSet) -> Result<Self> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::EmptySet);
        }
        if let Some(v) = a.intersection(&b).next() {
            return Err(Error::PartsOverlap(v.to_string()));
        }
        Ok(Bipartition { a, b })
    }

    pub fn from_labels<I, J, S, T>(a: I, b: J) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        J: IntoIterator<Item = T>,
        S: AsRef<str>,
        T: AsRef<str>,
    {
        Bipartition::new(vertex_set(a)?, vertex_set(b)?)
    }

    pub fn a(&self) -> &VertexSet {
        &self.a
    }

    pub fn b(&self) -> &VertexSet {
        &self.b
    }

    pub fn side(&self, v: &VertexId) -> Option<Side> {
        if self.a.contains(v) {
            Some(Side::A)
        } else if self.b.contains(v) {
            Some(Side::B)
        } else {
            None
        }
    }

    /// True iff the edge meets both parts.
    pub fn is_cross(&self, e: &Edge) -> bool {
        matches!(
            (self.side(e.first()), self.side(e.second())),
            (Some(Side::A), Some(Side::B)) | (Some(Side::B), Some(Side::A))
        )
    }

    pub fn iter(&self) -> impl Iterator<Item = &VertexId> {
        self.a.iter().chain(self.b.iter())
    }

    pub fn union(&self) -> VertexSet {
        self.iter().cloned().collect()
    }

    /// The same partition with the parts exchanged.
    pub fn swapped(&self) -> Bipartition {
        Bipartition {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    /// Checks that `A ∪ B` equals `vertices`.
    pub fn ensure_covers(&self, vertices: &VertexSet) -> Result<()> {
        if let Some(v) = vertices.iter().find(|v| self.side(v).is_none()) {
            return Err(Error::PartsNotCovering(format!("{v} is in neither part")));
        }
        if let Some(v) = self.iter().find(|v| !vertices.contains(*v)) {
            return Err(Error::PartsNotCovering(format!("{v} is not a vertex")));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> VertexId {
        VertexId::new(s).unwrap()
    }

    fn p4() -> SimpleGraph {
        SimpleGraph::build(
            ["a1", "b1", "a2", "b2"],
            [("a1", "b1"), ("b1", "a2"), ("a2", "b2")],
        )
        .unwrap()
    }

    fn two_edges() -> SimpleGraph {
        SimpleGraph::build(["a", "b", "c", "d"], [("a", "b"), ("c", "d")]).unwrap()
    }

    #[test]
    fn build_k2_and_errors() {
        let k2 = SimpleGraph::build(["a", "b"], [("a", "b")]).unwrap();
        assert_eq!(k2.edge_count(), 1);
        assert_eq!(
            SimpleGraph::build(["a"], [("a", "a")]),
            Err(Error::LoopEdge("a".into()))
        );
        assert_eq!(
            SimpleGraph::build(["a", "a"], Vec::<(&str, &str)>::new()),
            Err(Error::DuplicateVertex("a".into()))
        );
        assert_eq!(
            SimpleGraph::build(["a"], [("a", "z")]),
            Err(Error::UnknownEndpoint("z".into()))
        );
        assert!(matches!(
            SimpleGraph::build(["a b"], []),
            Err(Error::InvalidLabel(_))
        ));
    }

    #[test]
    fn duplicate_and_reversed_edges_collapse() {
        let g = SimpleGraph::build(["a", "b"], [("a", "b"), ("b", "a"), ("a", "b")]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn induced_subgraph_cases() {
        let g = p4();
        let s = vertex_set(["a1", "a2"]).unwrap();
        let h = g.induced_subgraph(&s).unwrap();
        assert_eq!(h.vertex_count(), 2);
        assert!(h.is_empty());
        assert_eq!(g.induced_subgraph(g.vertices()).unwrap(), g);
        assert_eq!(g.induced_subgraph(&VertexSet::new()), Err(Error::EmptySet));
        assert_eq!(
            g.induced_subgraph(&vertex_set(["zz"]).unwrap()),
            Err(Error::NotSubset("zz".into()))
        );
    }

    #[test]
    fn induced_bipartite_keeps_cross_edges() {
        let g = p4();
        let parts = Bipartition::from_labels(["a1", "a2"], ["b1", "b2"]).unwrap();
        assert_eq!(g.induced_bipartite_subgraph(&parts).unwrap(), g);

        let k2 = SimpleGraph::build(["a", "b"], [("a", "b")]).unwrap();
        let parts = Bipartition::from_labels(["a"], ["b"]).unwrap();
        assert_eq!(k2.induced_bipartite_subgraph(&parts).unwrap(), k2);

        let parts = Bipartition::from_labels(["a1"], ["q"]).unwrap();
        assert!(matches!(
            g.induced_bipartite_subgraph(&parts),
            Err(Error::NotSubset(_))
        ));
    }

    #[test]
    fn components_and_connectivity() {
        let comps = two_edges().connected_components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 2));
        assert_eq!(comps[0], vertex_set(["a", "b"]).unwrap());
        assert!(p4().is_connected());
        assert!(!two_edges().is_connected());
        let single = SimpleGraph::build(["x"], []).unwrap();
        assert!(single.is_connected());
    }

    #[test]
    fn prune_isolated_cases() {
        let g = SimpleGraph::build(["a", "b", "c"], [("a", "b")]).unwrap();
        let k2 = SimpleGraph::build(["a", "b"], [("a", "b")]).unwrap();
        assert_eq!(g.prune_isolated().unwrap(), k2);
        assert_eq!(p4().prune_isolated().unwrap(), p4());
        let empty = SimpleGraph::build(["a", "b", "c"], []).unwrap();
        assert_eq!(empty.prune_isolated(), Err(Error::EmptyGraph));
    }

    #[test]
    fn find_path_cases() {
        let g = p4();
        let path = g.find_path(&v("a1"), &v("b2")).unwrap().unwrap();
        assert_eq!(path.vertices(), &[v("a1"), v("b1"), v("a2"), v("b2")]);
        assert_eq!(two_edges().find_path(&v("a"), &v("c")).unwrap(), None);
        assert_eq!(
            g.find_path(&v("a1"), &v("a1")),
            Err(Error::EqualEndpoints("a1".into()))
        );
        assert_eq!(
            g.find_path(&v("a1"), &v("q")),
            Err(Error::UnknownVertex("q".into()))
        );
    }

    #[test]
    fn union_cases() {
        let g = p4();
        let pieces: Vec<SimpleGraph> = g
            .edges()
            .iter()
            .map(|e| {
                SimpleGraph::build(
                    [e.first().as_str(), e.second().as_str()],
                    [(e.first().as_str(), e.second().as_str())],
                )
                .unwrap()
            })
            .collect();
        assert_eq!(SimpleGraph::union(&pieces).unwrap(), g);
        assert_eq!(SimpleGraph::union([&g]).unwrap(), g);
        assert_eq!(
            SimpleGraph::union(std::iter::empty()),
            Err(Error::EmptyList)
        );
    }

    #[test]
    fn path_seq_validation() {
        let g = p4();
        assert!(PathSeq::in_graph(&g, vec![v("a1"), v("b1")]).is_ok());
        assert!(matches!(
            PathSeq::in_graph(&g, vec![v("a1"), v("a2")]),
            Err(Error::NotAPath(_))
        ));
        assert!(matches!(
            PathSeq::in_graph(&g, vec![v("a1"), v("b1"), v("a1")]),
            Err(Error::NotAPath(_))
        ));
        assert!(matches!(
            PathSeq::in_graph(&g, vec![v("a1")]),
            Err(Error::NotAPath(_))
        ));
    }

    #[test]
    fn bipartition_validation() {
        assert_eq!(
            Bipartition::from_labels(["a"], Vec::<&str>::new()),
            Err(Error::EmptySet)
        );
        assert_eq!(
            Bipartition::from_labels(["a", "b"], ["b"]),
            Err(Error::PartsOverlap("b".into()))
        );
    }

    #[test]
    fn dot_lists_vertices_in_label_order() {
        let dot = p4().to_dot();
        let a1 = dot.find("\"a1\";").unwrap();
        let b2 = dot.find("\"b2\";").unwrap();
        assert!(a1 < b2);
        assert!(dot.contains("\"a1\" -- \"b1\";"));
    }
}
