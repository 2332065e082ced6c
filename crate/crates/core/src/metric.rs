//! Finite semimetric spaces with exact rational distances.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{Bipartition, VertexId, VertexSet};

/// Exact distance values.
pub type Rational = num_rational::Rational64;

/// Shorthand for an integer-valued [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n)
}

/// Strongest axiom a space satisfies. Ordered from weakest to strongest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpaceClass {
    Semimetric,
    Metric,
    Ultrametric,
}

impl fmt::Display for SpaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpaceClass::Semimetric => "Semimetric",
            SpaceClass::Metric => "Metric",
            SpaceClass::Ultrametric => "Ultrametric",
        })
    }
}

/// A finite point set with a symmetric, positive-definite distance table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSemimetricSpace {
    points: Vec<VertexId>,
    index: BTreeMap<VertexId, usize>,
    table: Vec<Rational>,
}

impl FiniteSemimetricSpace {
    /// Validates a square distance table indexed by `points`.
    pub fn new(points: Vec<VertexId>, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = points.len();
        if rows.len() != n {
            return Err(Error::NotSquare(format!(
                "{} rows for {} points",
                rows.len(),
                n
            )));
        }
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::NotSquare(format!(
                "row {i} has {} entries, expected {n}",
                r.len()
            )));
        }
        let mut index = BTreeMap::new();
        for (i, p) in points.iter().enumerate() {
            if index.insert(p.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(p.to_string()));
            }
        }
        for i in 0..n {
            if !rows[i][i].is_zero() {
                return Err(Error::NonzeroDiagonal(i));
            }
            for j in 0..n {
                if rows[i][j].is_negative() {
                    return Err(Error::NegativeEntry(i, j));
                }
                if rows[i][j] != rows[j][i] {
                    return Err(Error::AsymmetricEntry(i.min(j), i.max(j)));
                }
                if i != j && rows[i][j].is_zero() {
                    return Err(Error::ZeroOffDiagonal(i, j));
                }
            }
        }
        let table = rows.into_iter().flatten().collect();
        Ok(FiniteSemimetricSpace {
            points,
            index,
            table,
        })
    }

    /// Builds a space from a distance function evaluated on distinct pairs.
    pub fn from_fn<F>(points: Vec<VertexId>, mut dist: F) -> Result<Self>
    where
        F: FnMut(&VertexId, &VertexId) -> Rational,
    {
        let rows = points
            .iter()
            .map(|x| {
                points
                    .iter()
                    .map(|y| if x == y { Rational::zero() } else { dist(x, y) })
                    .collect()
            })
            .collect();
        FiniteSemimetricSpace::new(points, rows)
    }

    pub fn points(&self) -> &[VertexId] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point_set(&self) -> VertexSet {
        self.points.iter().cloned().collect()
    }

    pub fn contains(&self, p: &VertexId) -> bool {
        self.index.contains_key(p)
    }

    pub fn index_of(&self, p: &VertexId) -> Result<usize> {
        self.index
            .get(p)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(p.to_string()))
    }

    /// Distance by position in [`points`](Self::points).
    pub fn at(&self, i: usize, j: usize) -> Rational {
        self.table[i * self.points.len() + j]
    }

    pub fn distance(&self, x: &VertexId, y: &VertexId) -> Result<Rational> {
        Ok(self.at(self.index_of(x)?, self.index_of(y)?))
    }

    /// Rows of the distance table in point order.
    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.table
            .chunks(self.points.len().max(1))
            .map(<[_]>::to_vec)
            .collect()
    }

    fn indices(&self, set: &VertexSet) -> Result<Vec<usize>> {
        set.iter().map(|p| self.index_of(p)).collect()
    }

    /// Sorted set of all distinct distance values, zero included.
    pub fn distance_values(&self) -> BTreeSet<Rational> {
        self.table.iter().copied().collect()
    }

    pub fn satisfies_triangle(&self) -> bool {
        let n = self.len();
        (0..n)
            .all(|a| (0..n).all(|b| (0..n).all(|c| self.at(a, b) <= self.at(a, c) + self.at(c, b))))
    }

    pub fn satisfies_strong_triangle(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| self.at(a, b) <= self.at(a, c).max(self.at(c, b))))
        })
    }

    /// The strongest class whose axiom holds over all ordered triples.
    pub fn classify(&self) -> SpaceClass {
        if !self.satisfies_triangle() {
            SpaceClass::Semimetric
        } else if self.satisfies_strong_triangle() {
            SpaceClass::Ultrametric
        } else {
            SpaceClass::Metric
        }
    }

    /// Minimum of `d(a, b)` over `A × B`.
    pub fn set_distance(&self, a: &VertexSet, b: &VertexSet) -> Result<Rational> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::EmptySet);
        }
        let ia = self.indices(a)?;
        let ib = self.indices(b)?;
        Ok(ia
            .iter()
            .flat_map(|&i| ib.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.at(i, j))
            .min()
            .expect("both sets are nonempty"))
    }

    /// All points of `set` nearest to `x`.
    pub fn best_approximations(&self, x: &VertexId, set: &VertexSet) -> Result<VertexSet> {
        if set.is_empty() {
            return Err(Error::EmptySet);
        }
        let ix = self.index_of(x)?;
        let scored = set
            .iter()
            .map(|p| Ok((self.at(ix, self.index_of(p)?), p)))
            .collect::<Result<Vec<_>>>()?;
        let best = scored.iter().map(|(d, _)| *d).min().expect("nonempty");
        Ok(scored
            .into_iter()
            .filter(|(d, _)| *d == best)
            .map(|(_, p)| p.clone())
            .collect())
    }

    /// Whether every point has a best approximation in `set`.
    ///
    /// Minima over finite sets are always attained, so this holds for every
    /// nonempty subset; the scan is kept so the check stays explicit.
    pub fn is_proximinal(&self, set: &VertexSet) -> Result<bool> {
        if set.is_empty() {
            return Err(Error::EmptySet);
        }
        for p in &self.points {
            if self.best_approximations(p, set)?.is_empty() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Set distance, best proximity pairs, and their projections.
    pub fn proximity_report(&self, parts: &Bipartition) -> Result<ProximityReport> {
        let distance = self.set_distance(parts.a(), parts.b())?;
        let mut pairs = BTreeSet::new();
        for a in parts.a() {
            let ia = self.index_of(a)?;
            for b in parts.b() {
                if self.at(ia, self.index_of(b)?) == distance {
                    pairs.insert((a.clone(), b.clone()));
                }
            }
        }
        let a0 = pairs.iter().map(|(a, _)| a.clone()).collect();
        let b0 = pairs.iter().map(|(_, b)| b.clone()).collect();
        Ok(ProximityReport {
            distance,
            a0,
            b0,
            pairs,
        })
    }

    /// Largest pairwise distance within `set`; zero for empty sets and singletons.
    pub fn diameter(&self, set: &VertexSet) -> Result<Rational> {
        let idx = self.indices(set)?;
        Ok(idx
            .iter()
            .flat_map(|&i| idx.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.at(i, j))
            .max()
            .unwrap_or_else(Rational::zero))
    }

    /// Evaluates both sides of the ultrametric diameter criterion for `(A, B)`.
    ///
    /// The first flag is `diam(B) <= dist(A, B)`. The second is the conjunction
    /// of: `A0` is proximinal, `B0 = B`, and every pair in `A0 × B0` attains
    /// `dist(A, B)`. In an ultrametric space the two flags always agree.
    pub fn ultrametric_diameter_criterion(&self, parts: &Bipartition) -> Result<(bool, bool)> {
        if self.classify() != SpaceClass::Ultrametric {
            return Err(Error::NotUltrametric);
        }
        let report = self.proximity_report(parts)?;
        let diameter_bound = self.diameter(parts.b())? <= report.distance;

        let a0_proximinal = !report.a0.is_empty() && self.is_proximinal(&report.a0)?;
        let b0_full = &report.b0 == parts.b();
        let mut all_best = true;
        'scan: for a in &report.a0 {
            for b in &report.b0 {
                if self.distance(a, b)? != report.distance {
                    all_best = false;
                    break 'scan;
                }
            }
        }
        Ok((diameter_bound, a0_proximinal && b0_full && all_best))
    }

    /// Restriction of the space to `subset`, preserving point order.
    pub fn restrict(&self, subset: &VertexSet) -> Result<FiniteSemimetricSpace> {
        self.indices(subset)?;
        let points: Vec<VertexId> = self
            .points
            .iter()
            .filter(|p| subset.contains(*p))
            .cloned()
            .collect();
        let idx: Vec<usize> = points.iter().map(|p| self.index[p]).collect();
        let rows = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| self.at(i, j)).collect())
            .collect();
        FiniteSemimetricSpace::new(points, rows)
    }
}

/// Best proximity structure of a pair of point sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProximityReport {
    pub distance: Rational,
    pub a0: VertexSet,
    pub b0: VertexSet,
    pub pairs: BTreeSet<(VertexId, VertexId)>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::vertex_set;

    fn pts(labels: &[&str]) -> Vec<VertexId> {
        labels.iter().map(|s| VertexId::new(*s).unwrap()).collect()
    }

    fn table(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect()
    }

    fn triangle(ab: i64, ac: i64, bc: i64) -> FiniteSemimetricSpace {
        FiniteSemimetricSpace::new(
            pts(&["a", "b", "c"]),
            table(&[&[0, ab, ac], &[ab, 0, bc], &[ac, bc, 0]]),
        )
        .unwrap()
    }

    #[test]
    fn build_space_validation() {
        assert!(FiniteSemimetricSpace::new(pts(&["a", "b"]), table(&[&[0, 1], &[1, 0]])).is_ok());
        assert_eq!(
            FiniteSemimetricSpace::new(pts(&["a", "b"]), table(&[&[0, 1], &[2, 0]])),
            Err(Error::AsymmetricEntry(0, 1))
        );
        assert_eq!(
            FiniteSemimetricSpace::new(pts(&["a", "b"]), table(&[&[1, 1], &[1, 0]])),
            Err(Error::NonzeroDiagonal(0))
        );
        assert_eq!(
            FiniteSemimetricSpace::new(pts(&["a", "b"]), table(&[&[0, 0], &[0, 0]])),
            Err(Error::ZeroOffDiagonal(0, 1))
        );
        assert_eq!(
            FiniteSemimetricSpace::new(pts(&["a", "b"]), table(&[&[0, -1], &[-1, 0]])),
            Err(Error::NegativeEntry(0, 1))
        );
        assert!(matches!(
            FiniteSemimetricSpace::new(pts(&["a", "b"]), table(&[&[0, 1]])),
            Err(Error::NotSquare(_))
        ));
    }

    #[test]
    fn classify_cases() {
        assert_eq!(triangle(1, 1, 1).classify(), SpaceClass::Ultrametric);
        // d(a,b)=5, d(a,c)=1, d(c,b)=1
        assert_eq!(triangle(5, 1, 1).classify(), SpaceClass::Semimetric);
        assert_eq!(triangle(3, 4, 5).classify(), SpaceClass::Metric);
    }

    #[test]
    fn set_distance_and_approximations() {
        let s = triangle(1, 2, 3);
        let a = vertex_set(["a"]).unwrap();
        let bc = vertex_set(["b", "c"]).unwrap();
        assert_eq!(s.set_distance(&a, &bc).unwrap(), int(1));
        assert_eq!(s.set_distance(&a, &a).unwrap(), int(0));
        assert_eq!(s.set_distance(&a, &VertexSet::new()), Err(Error::EmptySet));
        assert!(matches!(
            s.set_distance(&a, &vertex_set(["q"]).unwrap()),
            Err(Error::UnknownVertex(_))
        ));
        let x = VertexId::new("a").unwrap();
        assert_eq!(
            s.best_approximations(&x, &bc).unwrap(),
            vertex_set(["b"]).unwrap()
        );
        assert_eq!(s.best_approximations(&x, &s.point_set()).unwrap(), a);
        assert!(s.is_proximinal(&bc).unwrap());
        assert!(s.is_proximinal(&s.point_set()).unwrap());
        assert_eq!(s.is_proximinal(&VertexSet::new()), Err(Error::EmptySet));
    }

    #[test]
    fn proximity_report_unique_minimum() {
        let s = FiniteSemimetricSpace::from_fn(pts(&["a1", "a2", "b1", "b2"]), |x, y| {
            let pair = [x.as_str(), y.as_str()];
            if pair == ["a1", "b1"] || pair == ["b1", "a1"] {
                int(1)
            } else {
                int(2)
            }
        })
        .unwrap();
        let parts = Bipartition::from_labels(["a1", "a2"], ["b1", "b2"]).unwrap();
        let r = s.proximity_report(&parts).unwrap();
        assert_eq!(r.distance, int(1));
        assert_eq!(r.a0, vertex_set(["a1"]).unwrap());
        assert_eq!(r.b0, vertex_set(["b1"]).unwrap());
        assert_eq!(r.pairs.len(), 1);
    }

    #[test]
    fn proximity_report_two_points() {
        let s = FiniteSemimetricSpace::new(pts(&["a", "b"]), table(&[&[0, 3], &[3, 0]])).unwrap();
        let parts = Bipartition::from_labels(["a"], ["b"]).unwrap();
        let r = s.proximity_report(&parts).unwrap();
        assert_eq!(r.distance, int(3));
        assert_eq!(r.pairs.len(), 1);
    }

    #[test]
    fn diameter_cases() {
        let s = triangle(1, 2, 2);
        assert_eq!(s.diameter(&vertex_set(["a"]).unwrap()).unwrap(), int(0));
        assert_eq!(s.diameter(&VertexSet::new()).unwrap(), int(0));
        assert_eq!(
            s.diameter(&vertex_set(["a", "b"]).unwrap()).unwrap(),
            int(1)
        );
        assert_eq!(s.diameter(&s.point_set()).unwrap(), int(2));
    }

    fn four_point(rows: &[&[i64]]) -> FiniteSemimetricSpace {
        FiniteSemimetricSpace::new(pts(&["a1", "a2", "b1", "b2"]), table(rows)).unwrap()
    }

    #[test]
    fn diameter_criterion_examples() {
        // d(a1,a2)=2, d(b1,b2)=1, cross distances 2
        let s = four_point(&[&[0, 2, 2, 2], &[2, 0, 2, 2], &[2, 2, 0, 1], &[2, 2, 1, 0]]);
        assert_eq!(s.classify(), SpaceClass::Ultrametric);
        let parts = Bipartition::from_labels(["a1", "a2"], ["b1", "b2"]).unwrap();
        assert_eq!(
            s.ultrametric_diameter_criterion(&parts).unwrap(),
            (true, true)
        );
        assert_eq!(
            s.ultrametric_diameter_criterion(&parts.swapped()).unwrap(),
            (true, true)
        );

        // d(b1,b2)=3, cross 3 except d(a1,b1)=1; d(a1,a2)=3 keeps it ultrametric
        let s = four_point(&[&[0, 3, 1, 3], &[3, 0, 3, 3], &[1, 3, 0, 3], &[3, 3, 3, 0]]);
        assert_eq!(s.classify(), SpaceClass::Ultrametric);
        assert_eq!(
            s.ultrametric_diameter_criterion(&parts).unwrap(),
            (false, false)
        );

        assert_eq!(
            triangle(5, 1, 1).ultrametric_diameter_criterion(
                &Bipartition::from_labels(["a"], ["b", "c"]).unwrap()
            ),
            Err(Error::NotUltrametric)
        );
    }

    #[test]
    fn restrict_keeps_distances() {
        let s = triangle(1, 2, 3);
        let r = s.restrict(&vertex_set(["b", "c"]).unwrap()).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(r.at(0, 1), int(3));
    }
}
