//! Triangular range counting and reporting over a fixed point set.
//!
//! "Inside" always means strictly interior. The closed variants exist for
//! collecting candidates that may sit on a query edge.
//!
//! Two backends answer every query identically: a linear scan
//! ([`Backend::BruteForce`]) and a 2-d tree ([`Backend::Hierarchical`]).
//! Query corners may be rational; data points are integers. Each public
//! query bumps exactly one counter in [`QueryStats`].

mod form;
mod kdtree;

use std::collections::HashSet;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{bit_len, GeometryError, Point, Triangle};
use form::{coefficient_limit, PreparedTriangle};
use kdtree::KdTree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("duplicate point {0}")]
    DuplicatePoint(Point),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Backend {
    BruteForce,
    #[default]
    Hierarchical,
}

impl std::str::FromStr for Backend {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "brute" | "brute-force" | "brute_force" => Ok(Backend::BruteForce),
            "hierarchical" | "kd" | "kdtree" => Ok(Backend::Hierarchical),
            other => Err(format!("unknown backend {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct QueryStats {
    pub count_queries: u64,
    pub report_queries: u64,
    pub reported_points_total: u64,
}

impl QueryStats {
    /// Component-wise `self - earlier`.
    pub fn since(&self, earlier: &QueryStats) -> QueryStats {
        QueryStats {
            count_queries: self.count_queries - earlier.count_queries,
            report_queries: self.report_queries - earlier.report_queries,
            reported_points_total: self.reported_points_total - earlier.reported_points_total,
        }
    }
}

#[derive(Debug, Default)]
struct AtomicStats {
    count: AtomicU64,
    report: AtomicU64,
    reported: AtomicU64,
}

mod sealed {
    use super::{GeometryError, Point, PreparedTriangle, Triangle};

    pub trait Prepare {
        fn prepare(&self, limit: u32) -> Result<PreparedTriangle, GeometryError>;
    }

    impl Prepare for Triangle {
        fn prepare(&self, limit: u32) -> Result<PreparedTriangle, GeometryError> {
            PreparedTriangle::from_triangle(self, limit)
        }
    }

    impl Prepare for &Triangle {
        fn prepare(&self, limit: u32) -> Result<PreparedTriangle, GeometryError> {
            PreparedTriangle::from_triangle(self, limit)
        }
    }

    // Integer corners skip the rational conversion entirely.
    impl Prepare for [Point; 3] {
        fn prepare(&self, limit: u32) -> Result<PreparedTriangle, GeometryError> {
            PreparedTriangle::from_points(self[0], self[1], self[2], limit)
        }
    }
}

/// Anything that can be turned into a query triangle: [`Triangle`],
/// `&Triangle`, or three integer corners.
pub trait QueryRegion: sealed::Prepare {}

impl<T: sealed::Prepare> QueryRegion for T {}

#[derive(Debug)]
enum Index {
    Scan,
    Tree(KdTree),
}

/// Preprocessed point set answering triangle queries.
#[derive(Debug)]
pub struct RangeOracle {
    /// Sorted ascending; never mutated after build.
    points: Vec<Point>,
    backend: Backend,
    index: Index,
    limit: u32,
    max_abs: u64,
    stats: AtomicStats,
}

impl RangeOracle {
    pub fn build(points: &[Point], backend: Backend) -> Result<Self, OracleError> {
        let mut seen = HashSet::with_capacity(points.len());
        for &p in points {
            if !seen.insert(p) {
                return Err(OracleError::DuplicatePoint(p));
            }
        }
        let mut sorted = points.to_vec();
        sorted.sort_unstable();
        let max_abs = sorted.iter().map(|p| p.max_abs()).max().unwrap_or(0);
        let index = match backend {
            Backend::BruteForce => Index::Scan,
            Backend::Hierarchical => Index::Tree(KdTree::build(&sorted)),
        };
        Ok(RangeOracle {
            points: sorted,
            backend,
            index,
            limit: coefficient_limit(bit_len(max_abs)),
            max_abs,
            stats: AtomicStats::default(),
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The point set, ascending.
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    /// Largest absolute coordinate in the set (at least 1).
    pub fn max_abs_coord(&self) -> u64 {
        self.max_abs.max(1)
    }

    pub fn stats(&self) -> QueryStats {
        QueryStats {
            count_queries: self.stats.count.load(AtomicOrdering::Relaxed),
            report_queries: self.stats.report.load(AtomicOrdering::Relaxed),
            reported_points_total: self.stats.reported.load(AtomicOrdering::Relaxed),
        }
    }

    fn run(&self, tri: &PreparedTriangle, closed: bool, out: Option<&mut Vec<Point>>) -> usize {
        match &self.index {
            Index::Tree(t) => t.query(tri, closed, out),
            Index::Scan => {
                let mut n = 0;
                match out {
                    Some(v) => {
                        for &p in &self.points {
                            if tri.contains(p, closed) {
                                v.push(p);
                                n += 1;
                            }
                        }
                    }
                    None => n = self.points.iter().filter(|&&p| tri.contains(p, closed)).count(),
                }
                n
            }
        }
    }

    /// Number of points strictly inside `t`.
    pub fn count_interior(&self, t: impl QueryRegion) -> Result<usize, OracleError> {
        let tri = t.prepare(self.limit)?;
        self.stats.count.fetch_add(1, AtomicOrdering::Relaxed);
        Ok(self.run(&tri, false, None))
    }

    /// Number of points on the edges or corners of `t`.
    pub fn count_on_boundary(&self, t: impl QueryRegion) -> Result<usize, OracleError> {
        let tri = t.prepare(self.limit)?;
        self.stats.count.fetch_add(1, AtomicOrdering::Relaxed);
        Ok(self.run(&tri, true, None) - self.run(&tri, false, None))
    }

    /// Points strictly inside `t`, ascending.
    pub fn report_interior(&self, t: impl QueryRegion) -> Result<Vec<Point>, OracleError> {
        self.report(t, false)
    }

    /// Points inside or on the boundary of `t`, ascending.
    pub fn report_closed(&self, t: impl QueryRegion) -> Result<Vec<Point>, OracleError> {
        self.report(t, true)
    }

    fn report(&self, t: impl QueryRegion, closed: bool) -> Result<Vec<Point>, OracleError> {
        let tri = t.prepare(self.limit)?;
        let mut out = Vec::new();
        self.run(&tri, closed, Some(&mut out));
        if self.backend == Backend::Hierarchical {
            out.sort_unstable();
        }
        self.stats.report.fetch_add(1, AtomicOrdering::Relaxed);
        self.stats.reported.fetch_add(out.len() as u64, AtomicOrdering::Relaxed);
        Ok(out)
    }
}
