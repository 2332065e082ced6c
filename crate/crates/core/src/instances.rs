//! Instance generators: the Hamming cube examples, the complex-lattice
//! truncation, and exhaustive and seeded random families for sweeps.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Edge, SimpleGraph, VertexId, VertexSet};
use crate::metric::{int, FiniteSemimetricSpace, Rational};

/// Largest vertex count accepted by [`enumerate_labeled_graphs`].
pub const MAX_ENUMERATION_VERTICES: usize = 7;
/// Largest dimension accepted by [`hypercube_space`].
pub const MAX_CUBE_DIMENSION: usize = 10;
/// Largest point count of [`lattice_truncation`].
pub const MAX_TRUNCATION_POINTS: usize = 200;

fn id(label: impl Into<String>) -> VertexId {
    VertexId::new(label).expect("generated labels are valid")
}

fn out_of_range(what: &'static str, value: impl ToString, allowed: &str) -> Error {
    Error::OutOfRange {
        what,
        value: value.to_string(),
        allowed: allowed.to_string(),
    }
}

fn hamming(p: &str, q: &str) -> i64 {
    p.bytes().zip(q.bytes()).filter(|(a, b)| a != b).count() as i64
}

/// All `2^dim` bit strings with the Hamming distance.
pub fn hypercube_space(dim: usize) -> Result<FiniteSemimetricSpace> {
    if !(1..=MAX_CUBE_DIMENSION).contains(&dim) {
        return Err(out_of_range("dimension", dim, "1..=10"));
    }
    let points = (0..1usize << dim)
        .map(|bits| id(format!("{bits:0dim$b}")))
        .collect();
    FiniteSemimetricSpace::from_fn(points, |p, q| int(hamming(p.as_str(), q.as_str())))
}

/// Sixteen named points of the 4-cube, `(name, bits)`.
///
/// The source listing assigns `1111` to both x14 and x16; x14 is taken as
/// `1110`, the only choice consistent with its listed neighbors x5, x6, x16.
pub const CUBE_POINTS: [(&str, &str); 16] = [
    ("x1", "1000"),
    ("x2", "0100"),
    ("x3", "0010"),
    ("x4", "0001"),
    ("x5", "1010"),
    ("x6", "1100"),
    ("x7", "1001"),
    ("x8", "0000"),
    ("x9", "0110"),
    ("x10", "0101"),
    ("x11", "0011"),
    ("x12", "0111"),
    ("x13", "1101"),
    ("x14", "1110"),
    ("x15", "1011"),
    ("x16", "1111"),
];

/// Note attached to reports on the cube examples.
pub const CUBE_ERRATUM: &str =
    "x14 corrected from (1,1,1,1) to (1,1,1,0): the listing duplicates x16, and only (1,1,1,0) is at Hamming distance 1 from x5, x6 and x16";

const CUBE_EDGES: [(u8, u8); 25] = [
    (1, 5),
    (1, 6),
    (1, 7),
    (1, 8),
    (2, 6),
    (2, 9),
    (2, 10),
    (3, 5),
    (3, 8),
    (3, 9),
    (3, 11),
    (4, 7),
    (4, 8),
    (4, 10),
    (5, 14),
    (5, 15),
    (6, 13),
    (6, 14),
    (7, 15),
    (9, 12),
    (10, 12),
    (11, 12),
    (13, 16),
    (14, 16),
    (15, 16),
];

const CUBE_A: [u8; 8] = [1, 2, 3, 4, 9, 10, 11, 12];
const CUBE_B: [u8; 8] = [5, 6, 7, 8, 13, 14, 15, 16];

/// The 46 joined pairs listed for the cube example; a strict subset of the
/// true set, which is all of `A × B`.
pub const PRINTED_CUBE_PAIRS: [(u8, u8); 46] = [
    (1, 5),
    (1, 6),
    (1, 7),
    (1, 8),
    (1, 13),
    (1, 14),
    (1, 15),
    (1, 16),
    (2, 6),
    (2, 13),
    (2, 16),
    (3, 5),
    (3, 8),
    (3, 14),
    (3, 15),
    (3, 16),
    (4, 7),
    (4, 8),
    (4, 13),
    (4, 15),
    (4, 16),
    (9, 5),
    (9, 6),
    (9, 8),
    (9, 13),
    (9, 14),
    (9, 15),
    (9, 16),
    (10, 6),
    (10, 8),
    (10, 13),
    (10, 14),
    (10, 16),
    (11, 5),
    (11, 8),
    (11, 14),
    (11, 15),
    (11, 16),
    (12, 5),
    (12, 6),
    (12, 7),
    (12, 8),
    (12, 13),
    (12, 14),
    (12, 15),
    (12, 16),
];

fn x(i: u8) -> VertexId {
    id(format!("x{i}"))
}

/// Pairs of [`PRINTED_CUBE_PAIRS`] as vertex ids.
pub fn printed_cube_pairs() -> Vec<(VertexId, VertexId)> {
    PRINTED_CUBE_PAIRS
        .iter()
        .map(|&(a, b)| (x(a), x(b)))
        .collect()
}

fn cube_partition() -> Bipartition {
    Bipartition::new(
        CUBE_A.iter().map(|&i| x(i)).collect(),
        CUBE_B.iter().map(|&i| x(i)).collect(),
    )
    .expect("cube parts are disjoint and nonempty")
}

fn cube_bits(label: &VertexId) -> &'static str {
    CUBE_POINTS
        .iter()
        .find(|(name, _)| *name == label.as_str())
        .map(|(_, bits)| *bits)
        .expect("cube label")
}

/// The connected 16-vertex, 25-edge cube subgraph with its 8/8 partition.
pub fn cube_example_graph() -> (SimpleGraph, Bipartition) {
    let vertices: VertexSet = (1..=16).map(x).collect();
    let edges = CUBE_EDGES
        .iter()
        .map(|&(u, v)| Edge::new(x(u), x(v)).expect("distinct endpoints"));
    let graph = SimpleGraph::from_edges(vertices, edges).expect("listed endpoints are vertices");
    (graph, cube_partition())
}

/// The named 4-cube points with the Hamming distance and the same partition.
pub fn hamming_cube_example() -> (FiniteSemimetricSpace, Bipartition) {
    let points = (1..=16).map(x).collect();
    let space =
        FiniteSemimetricSpace::from_fn(points, |p, q| int(hamming(cube_bits(p), cube_bits(q))))
            .expect("Hamming distance is a metric");
    (space, cube_partition())
}

/// The Hamming-1 graph on part `A` of the cube example, where x1 is isolated,
/// together with the restricted space.
pub fn isolated_vertex_example() -> (SimpleGraph, FiniteSemimetricSpace) {
    let (space, parts) = hamming_cube_example();
    let space = space
        .restrict(parts.a())
        .expect("A is a subset of the cube");
    let points = space.points();
    let mut edges = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if space.at(i, j) == int(1) {
                edges.push(Edge::new(points[i].clone(), points[j].clone()).expect("distinct"));
            }
        }
    }
    let graph = SimpleGraph::from_edges(space.point_set(), edges).expect("edges on points");
    (graph, space)
}

/// The path `(a1, b1, a2, b2)` with parts `{a1, a2}` and `{b1, b2}`.
pub fn four_path_example() -> (SimpleGraph, Bipartition) {
    let graph = SimpleGraph::build(
        ["a1", "b1", "a2", "b2"],
        [("a1", "b1"), ("b1", "a2"), ("a2", "b2")],
    )
    .expect("valid path");
    let parts = Bipartition::from_labels(["a1", "a2"], ["b1", "b2"]).expect("valid parts");
    (graph, parts)
}

/// Index bounds of the lattice truncation: `A = {1..=n}` on the real axis and
/// `B = {p + qi : 0 <= p <= m, 1 <= q <= k}`, with `n, m, k >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncationParams {
    pub n: u32,
    pub m: u32,
    pub k: u32,
}

impl TruncationParams {
    pub fn new(n: u32, m: u32, k: u32) -> Result<Self> {
        if n == 0 {
            return Err(out_of_range("n", n, ">= 1"));
        }
        if m == 0 {
            // with only real part 0 in B the set distance becomes 5/2
            return Err(out_of_range("m", m, ">= 1"));
        }
        if k == 0 {
            return Err(out_of_range("k", k, ">= 1"));
        }
        Ok(TruncationParams { n, m, k })
    }

    pub fn point_count(&self) -> usize {
        self.n as usize + (self.m as usize + 1) * self.k as usize
    }
}

/// A lattice point label and its coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePoint {
    pub label: VertexId,
    pub re: i64,
    pub im: i64,
}

/// The truncated lattice points in label-independent order: `A` first.
pub fn lattice_points(params: TruncationParams) -> Vec<LatticePoint> {
    let a = (1..=params.n as i64).map(|re| LatticePoint {
        label: id(re.to_string()),
        re,
        im: 0,
    });
    let b = (0..=params.m as i64).flat_map(|re| {
        (1..=params.k as i64).map(move |im| LatticePoint {
            label: id(format!("{re}+{im}i")),
            re,
            im,
        })
    });
    a.chain(b).collect()
}

/// Distance between distinct lattice points: `|Δre| / 2 + |Δim| + 1`.
pub fn lattice_distance(p: &LatticePoint, q: &LatticePoint) -> Rational {
    if p == q {
        return int(0);
    }
    Rational::new((p.re - q.re).abs(), 2) + int((p.im - q.im).abs() + 1)
}

/// The finite truncation of the complex-lattice space with its partition.
pub fn lattice_truncation(
    params: TruncationParams,
) -> Result<(FiniteSemimetricSpace, Bipartition)> {
    let count = params.point_count();
    if count > MAX_TRUNCATION_POINTS {
        return Err(Error::SizeExceeded(format!(
            "{count} points exceeds the truncation bound {MAX_TRUNCATION_POINTS}"
        )));
    }
    let pts = lattice_points(params);
    let rows = pts
        .iter()
        .map(|p| pts.iter().map(|q| lattice_distance(p, q)).collect())
        .collect();
    let space = FiniteSemimetricSpace::new(pts.iter().map(|p| p.label.clone()).collect(), rows)?;
    let a = pts
        .iter()
        .filter(|p| p.im == 0)
        .map(|p| p.label.clone())
        .collect();
    let b = pts
        .iter()
        .filter(|p| p.im != 0)
        .map(|p| p.label.clone())
        .collect();
    Ok((space, Bipartition::new(a, b)?))
}

/// Every labeled graph on `v1..vn`, in bitmask order over the pairs `(i, j)`, `i < j`.
pub fn enumerate_labeled_graphs(n: usize) -> Result<LabeledGraphs> {
    if !(1..=MAX_ENUMERATION_VERTICES).contains(&n) {
        return Err(out_of_range("vertex count", n, "1..=7"));
    }
    let labels: Vec<VertexId> = (1..=n).map(|i| id(format!("v{i}"))).collect();
    let pairs = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| Edge::new(labels[i].clone(), labels[j].clone()).expect("distinct labels"))
        .collect::<Vec<_>>();
    let end = 1u64 << pairs.len();
    Ok(LabeledGraphs {
        vertices: labels.into_iter().collect(),
        pairs,
        next: 0,
        end,
    })
}

/// Iterator returned by [`enumerate_labeled_graphs`].
#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    vertices: VertexSet,
    pairs: Vec<Edge>,
    next: u64,
    end: u64,
}

impl Iterator for LabeledGraphs {
    type Item = SimpleGraph;

    fn next(&mut self) -> Option<SimpleGraph> {
        if self.next >= self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let edges = self
            .pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, e)| e.clone())
            .collect();
        Some(SimpleGraph::from_parts(self.vertices.clone(), edges))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}

/// All ordered covering pairs `(A, B)` of disjoint nonempty sets, `2^n - 2` in total.
pub fn all_bipartitions(vertices: &VertexSet) -> Result<impl Iterator<Item = Bipartition>> {
    let items: Vec<VertexId> = vertices.iter().cloned().collect();
    let n = items.len();
    if n < 2 {
        return Err(out_of_range("vertex count", n, ">= 2"));
    }
    if n > 20 {
        return Err(out_of_range("vertex count", n, "<= 20"));
    }
    Ok((1u32..(1u32 << n) - 1).map(move |mask| {
        let (a, b): (Vec<_>, Vec<_>) = items
            .iter()
            .enumerate()
            .partition(|(i, _)| mask >> i & 1 == 1);
        Bipartition::new(
            a.into_iter().map(|(_, v)| v.clone()).collect(),
            b.into_iter().map(|(_, v)| v.clone()).collect(),
        )
        .expect("mask is neither empty nor full")
    }))
}

fn point_labels(n: usize) -> Vec<VertexId> {
    (1..=n).map(|i| id(format!("p{i}"))).collect()
}

/// A random ultrametric on `p1..pn` from a laminar hierarchy.
///
/// Each block of two or more points is cut into two or three groups at the
/// block's level; child blocks get a level of `1/4`, `2/4` or `3/4` of their
/// parent's. Two points are at the level of the smallest block separating them.
pub fn random_ultrametric_space(n: usize, seed: u64) -> Result<FiniteSemimetricSpace> {
    if !(2..=16).contains(&n) {
        return Err(out_of_range("point count", n, "2..=16"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut table = vec![vec![int(0); n]; n];
    let top = int(rng.gen_range(1..=4));
    split_block((0..n).collect(), top, &mut rng, &mut table);
    FiniteSemimetricSpace::new(point_labels(n), table)
}

fn split_block(
    mut block: Vec<usize>,
    level: Rational,
    rng: &mut ChaCha8Rng,
    table: &mut [Vec<Rational>],
) {
    if block.len() < 2 {
        return;
    }
    block.shuffle(rng);
    let groups = rng.gen_range(2..=block.len().min(3));
    let mut cuts: Vec<usize> = (1..block.len()).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts.into_iter().take(groups - 1).collect();
    cuts.sort_unstable();
    let mut children = Vec::with_capacity(groups);
    let mut start = 0;
    for c in cuts.into_iter().chain([block.len()]) {
        children.push(block[start..c].to_vec());
        start = c;
    }
    for (gi, g) in children.iter().enumerate() {
        for h in &children[gi + 1..] {
            for &p in g {
                for &q in h {
                    table[p][q] = level;
                    table[q][p] = level;
                }
            }
        }
    }
    for child in children {
        let child_level = level * Rational::new(rng.gen_range(1..=3), 4);
        split_block(child, child_level, rng, table);
    }
}

/// A random semimetric on `p1..pn` with distances in `{1/2, 1, ..., 4}`.
pub fn random_semimetric_space(n: usize, seed: u64) -> Result<FiniteSemimetricSpace> {
    if !(1..=16).contains(&n) {
        return Err(out_of_range("point count", n, "1..=16"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut table = vec![vec![int(0); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let d = Rational::new(rng.gen_range(1..=8), 2);
            table[i][j] = d;
            table[j][i] = d;
        }
    }
    FiniteSemimetricSpace::new(point_labels(n), table)
}

/// A seeded random graph on `v1..vn`, each edge present with probability `p`.
pub fn random_graph(n: usize, p: Rational, seed: u64) -> Result<SimpleGraph> {
    if n == 0 {
        return Err(out_of_range("vertex count", n, ">= 1"));
    }
    if p < int(0) || p > int(1) {
        return Err(out_of_range("edge probability", p, "[0, 1]"));
    }
    let num =
        u32::try_from(*p.numer()).map_err(|_| out_of_range("edge probability", p, "[0, 1]"))?;
    let den =
        u32::try_from(*p.denom()).map_err(|_| out_of_range("edge probability", p, "[0, 1]"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels: Vec<VertexId> = (1..=n).map(|i| id(format!("v{i}"))).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_ratio(num, den) {
                edges.push(Edge::new(labels[i].clone(), labels[j].clone())?);
            }
        }
    }
    SimpleGraph::from_edges(labels.into_iter().collect(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::vertex_set;
    use crate::metric::SpaceClass;

    fn labels(names: &[&str]) -> VertexSet {
        vertex_set(names).unwrap()
    }

    #[test]
    fn hypercube_small_cases() {
        let q1 = hypercube_space(1).unwrap();
        assert_eq!(q1.len(), 2);
        assert_eq!(q1.at(0, 1), int(1));
        let q4 = hypercube_space(4).unwrap();
        assert_eq!(q4.len(), 16);
        assert_eq!(q4.distance(&id("0000"), &id("1111")).unwrap(), int(4));
        assert!(hypercube_space(0).is_err());
        assert!(hypercube_space(11).is_err());
    }

    #[test]
    fn hypercube_unit_pairs() {
        for dim in 1..=6 {
            let q = hypercube_space(dim).unwrap();
            let ones = (0..q.len())
                .flat_map(|i| (i + 1..q.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| q.at(i, j) == int(1))
                .count();
            assert_eq!(ones, dim << (dim - 1));
        }
    }

    #[test]
    fn cube_points_are_distinct_and_edges_are_unit() {
        let bits: std::collections::BTreeSet<_> = CUBE_POINTS.iter().map(|(_, b)| *b).collect();
        assert_eq!(bits.len(), 16);
        let (g, parts) = cube_example_graph();
        assert_eq!(g.edge_count(), 25);
        assert_eq!(parts.union(), *g.vertices());
        for e in g.edges() {
            assert_eq!(hamming(cube_bits(e.first()), cube_bits(e.second())), 1);
        }
    }

    #[test]
    fn printed_pairs_are_cross_pairs() {
        let (_, parts) = cube_example_graph();
        let pairs = printed_cube_pairs();
        let distinct: std::collections::BTreeSet<_> = pairs.iter().cloned().collect();
        assert_eq!(distinct.len(), 46);
        assert!(pairs
            .iter()
            .all(|(a, b)| parts.a().contains(a) && parts.b().contains(b)));
    }

    #[test]
    fn lattice_truncation_values() {
        let (s, parts) = lattice_truncation(TruncationParams::new(2, 2, 2).unwrap()).unwrap();
        assert_eq!(s.len(), 2 + 3 * 2);
        assert_eq!(s.distance(&id("1"), &id("2")).unwrap(), Rational::new(3, 2));
        assert_eq!(s.distance(&id("1"), &id("1+1i")).unwrap(), int(2));
        assert_eq!(s.set_distance(parts.a(), parts.b()).unwrap(), int(2));
        assert_eq!(s.classify(), SpaceClass::Metric);
        assert!(TruncationParams::new(0, 1, 1).is_err());
        assert!(TruncationParams::new(1, 0, 1).is_err());
        assert!(matches!(
            lattice_truncation(TruncationParams::new(1, 99, 2).unwrap()),
            Err(Error::SizeExceeded(_))
        ));
    }

    #[test]
    fn labeled_graph_counts() {
        assert_eq!(enumerate_labeled_graphs(2).unwrap().count(), 2);
        assert_eq!(enumerate_labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(5).unwrap().count(), 1024);
        let all: std::collections::BTreeSet<_> = enumerate_labeled_graphs(4)
            .unwrap()
            .map(|g| g.edges().clone())
            .collect();
        assert_eq!(all.len(), 64);
        assert!(enumerate_labeled_graphs(0).is_err());
        assert!(enumerate_labeled_graphs(8).is_err());
    }

    #[test]
    fn bipartition_counts() {
        assert_eq!(all_bipartitions(&labels(&["a", "b"])).unwrap().count(), 2);
        assert_eq!(
            all_bipartitions(&labels(&["a", "b", "c"])).unwrap().count(),
            6
        );
        assert_eq!(
            all_bipartitions(&labels(&["a", "b", "c", "d"]))
                .unwrap()
                .count(),
            14
        );
        assert!(all_bipartitions(&labels(&["a"])).is_err());
    }

    #[test]
    fn random_ultrametric_is_ultrametric_and_deterministic() {
        let two = random_ultrametric_space(2, 9).unwrap();
        assert!(two.at(0, 1) > int(0));
        for seed in 0..200 {
            let n = 2 + (seed as usize % 7);
            let s = random_ultrametric_space(n, seed).unwrap();
            assert_eq!(s.classify(), SpaceClass::Ultrametric, "seed {seed}");
            assert_eq!(s, random_ultrametric_space(n, seed).unwrap());
        }
        assert!(random_ultrametric_space(1, 0).is_err());
        assert!(random_ultrametric_space(17, 0).is_err());
    }

    #[test]
    fn random_graph_extremes() {
        assert!(random_graph(5, int(0), 1).unwrap().is_empty());
        assert!(random_graph(5, int(1), 1).unwrap().is_complete());
        let half = Rational::new(1, 2);
        assert_eq!(
            random_graph(6, half, 42).unwrap(),
            random_graph(6, half, 42).unwrap()
        );
        assert!(random_graph(3, int(2), 0).is_err());
        assert!(random_graph(0, half, 0).is_err());
    }
}
