//! JSON file formats for graphs, partitions, spaces, and certificates.
//!
//! Graph: `{"vertices": [..], "edges": [[u, v], ..]}`.
//! Partition: `{"A": [..], "B": [..]}`.
//! Space: `{"points": [..], "distances": [[..], ..]}` with entries that are
//! JSON integers or `"p/q"` strings.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{vertex_set, Bipartition, SimpleGraph, VertexId};
use crate::metric::{FiniteSemimetricSpace, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartitionFile {
    #[serde(rename = "A")]
    pub a: Vec<String>,
    #[serde(rename = "B")]
    pub b: Vec<String>,
}

/// A distance entry as written in a space file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DistanceEntry {
    Integer(i64),
    Text(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceFile {
    pub points: Vec<String>,
    pub distances: Vec<Vec<DistanceEntry>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    pub graph: GraphFile,
    pub partition: PartitionFile,
    pub space: SpaceFile,
}

/// Parses `"n"` or `"p/q"` with `q > 0`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::MalformedRational(text.to_string());
    let parse_int = |s: &str| -> Result<i64> {
        if s.is_empty()
            || !s
                .trim_start_matches('-')
                .bytes()
                .all(|b| b.is_ascii_digit())
        {
            return Err(bad());
        }
        s.parse().map_err(|_| bad())
    };
    match text.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(text)?)),
        Some((p, q)) => {
            let p = parse_int(p)?;
            let q = parse_int(q)?;
            if q <= 0 {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
    }
}

impl DistanceEntry {
    pub fn to_rational(&self) -> Result<Rational> {
        match self {
            DistanceEntry::Integer(n) => Ok(Rational::from_integer(*n)),
            DistanceEntry::Text(s) => parse_rational(s),
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        if r.is_integer() {
            DistanceEntry::Integer(*r.numer())
        } else {
            DistanceEntry::Text(format!("{}/{}", r.numer(), r.denom()))
        }
    }
}

impl GraphFile {
    pub fn from_graph(graph: &SimpleGraph) -> Self {
        GraphFile {
            vertices: graph.vertices().iter().map(|v| v.to_string()).collect(),
            edges: graph
                .edges()
                .iter()
                .map(|e| [e.first().to_string(), e.second().to_string()])
                .collect(),
        }
    }

    pub fn to_graph(&self) -> Result<SimpleGraph> {
        SimpleGraph::build(
            self.vertices.iter().map(String::as_str),
            self.edges.iter().map(|[u, v]| (u.as_str(), v.as_str())),
        )
    }
}

impl PartitionFile {
    pub fn from_partition(parts: &Bipartition) -> Self {
        PartitionFile {
            a: parts.a().iter().map(|v| v.to_string()).collect(),
            b: parts.b().iter().map(|v| v.to_string()).collect(),
        }
    }

    pub fn to_partition(&self) -> Result<Bipartition> {
        let a = vertex_set(&self.a)?;
        let b = vertex_set(&self.b)?;
        if a.len() != self.a.len() || b.len() != self.b.len() {
            return Err(Error::Format("partition lists repeat a vertex".into()));
        }
        Bipartition::new(a, b)
    }
}

impl SpaceFile {
    pub fn from_space(space: &FiniteSemimetricSpace) -> Self {
        SpaceFile {
            points: space.points().iter().map(|p| p.to_string()).collect(),
            distances: space
                .rows()
                .into_iter()
                .map(|r| r.into_iter().map(DistanceEntry::from_rational).collect())
                .collect(),
        }
    }

    pub fn to_space(&self) -> Result<FiniteSemimetricSpace> {
        let points = self
            .points
            .iter()
            .map(|p| VertexId::new(p.as_str()))
            .collect::<Result<Vec<_>>>()?;
        let rows = self
            .distances
            .iter()
            .map(|r| {
                r.iter()
                    .map(DistanceEntry::to_rational)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        FiniteSemimetricSpace::new(points, rows)
    }
}

impl CertificateFile {
    pub fn new(graph: &SimpleGraph, parts: &Bipartition, space: &FiniteSemimetricSpace) -> Self {
        CertificateFile {
            graph: GraphFile::from_graph(graph),
            partition: PartitionFile::from_partition(parts),
            space: SpaceFile::from_space(space),
        }
    }

    pub fn load(&self) -> Result<(SimpleGraph, Bipartition, FiniteSemimetricSpace)> {
        Ok((
            self.graph.to_graph()?,
            self.partition.to_partition()?,
            self.space.to_space()?,
        ))
    }
}

fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("file types always serialize")
}

pub fn parse_graph(text: &str) -> Result<SimpleGraph> {
    from_json::<GraphFile>(text)?.to_graph()
}

pub fn parse_partition(text: &str) -> Result<Bipartition> {
    from_json::<PartitionFile>(text)?.to_partition()
}

pub fn parse_space(text: &str) -> Result<FiniteSemimetricSpace> {
    from_json::<SpaceFile>(text)?.to_space()
}

pub fn parse_certificate(text: &str) -> Result<(SimpleGraph, Bipartition, FiniteSemimetricSpace)> {
    from_json::<CertificateFile>(text)?.load()
}

pub fn graph_to_json(graph: &SimpleGraph) -> String {
    to_json(&GraphFile::from_graph(graph))
}

pub fn partition_to_json(parts: &Bipartition) -> String {
    to_json(&PartitionFile::from_partition(parts))
}

pub fn space_to_json(space: &FiniteSemimetricSpace) -> String {
    to_json(&SpaceFile::from_space(space))
}

pub fn certificate_to_json(
    graph: &SimpleGraph,
    parts: &Bipartition,
    space: &FiniteSemimetricSpace,
) -> String {
    to_json(&CertificateFile::new(graph, parts, space))
}

/// Sorted list of two-element lists.
pub fn pairs_to_json(pairs: &BTreeSet<(VertexId, VertexId)>) -> String {
    let list: Vec<[&str; 2]> = pairs
        .iter()
        .map(|(a, b)| [a.as_str(), b.as_str()])
        .collect();
    serde_json::to_string(&list).expect("pairs always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{cube_example_graph, lattice_truncation, TruncationParams};
    use proptest::prelude::*;

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3").unwrap(), Rational::from_integer(3));
        assert_eq!(parse_rational("6/4").unwrap(), Rational::new(3, 2));
        for bad in ["", "1/0", "1/-2", "a/b", "1/2/3", "1.5", " 1", "/2", "1/"] {
            assert!(
                matches!(parse_rational(bad), Err(Error::MalformedRational(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn space_file_rejects_floats_and_ragged_rows() {
        let floats = r#"{"points": ["a", "b"], "distances": [[0, 1.5], [1.5, 0]]}"#;
        assert!(matches!(parse_space(floats), Err(Error::Format(_))));
        let ragged = r#"{"points": ["a", "b"], "distances": [[0, 1], [1]]}"#;
        assert!(matches!(parse_space(ragged), Err(Error::NotSquare(_))));
        let asym = r#"{"points": ["a", "b"], "distances": [[0, 1], ["2", 0]]}"#;
        assert_eq!(parse_space(asym), Err(Error::AsymmetricEntry(0, 1)));
    }

    #[test]
    fn graph_and_partition_files() {
        let g = parse_graph(r#"{"vertices": ["a", "b"], "edges": [["a", "b"]]}"#).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(matches!(
            parse_graph(r#"{"vertices": ["a"]}"#),
            Err(Error::Format(_))
        ));
        let p = parse_partition(r#"{"A": ["a"], "B": ["b"]}"#).unwrap();
        assert_eq!(p.a().len(), 1);
        assert!(parse_partition(r#"{"A": ["a", "a"], "B": ["b"]}"#).is_err());
    }

    #[test]
    fn certificate_round_trip() {
        let (space, parts) = lattice_truncation(TruncationParams::new(2, 1, 1).unwrap()).unwrap();
        let graph = crate::path_proximinal::build_threshold_graph(&space, &parts).unwrap();
        let text = certificate_to_json(&graph, &parts, &space);
        assert_eq!(parse_certificate(&text).unwrap(), (graph, parts, space));
    }

    #[test]
    fn cube_graph_round_trip() {
        let (g, parts) = cube_example_graph();
        assert_eq!(parse_graph(&graph_to_json(&g)).unwrap(), g);
        assert_eq!(parse_partition(&partition_to_json(&parts)).unwrap(), parts);
    }

    proptest! {
        #[test]
        fn random_graph_files_round_trip(n in 1usize..9, seed in any::<u64>(), num in 0i64..=4) {
            let g = crate::instances::random_graph(n, Rational::new(num, 4), seed).unwrap();
            prop_assert_eq!(parse_graph(&graph_to_json(&g)).unwrap(), g);
        }

        #[test]
        fn random_space_files_round_trip(n in 1usize..9, seed in any::<u64>()) {
            let s = crate::instances::random_semimetric_space(n, seed).unwrap();
            prop_assert_eq!(parse_space(&space_to_json(&s)).unwrap(), s);
        }
    }
}
