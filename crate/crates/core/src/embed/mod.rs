//! Point-set embedding of a plane 3-tree when every point must be used.
//!
//! The outer vertices go to the three hull corners (six ways to assign
//! them). Each internal node of the representative tree then needs the one
//! point of its region that splits the remaining points into the sizes of
//! its three children. [`Mode::Baseline`] tries every point of the region;
//! [`Mode::Improved`] first narrows the search to a thin wedge found by
//! bisection, see [`split`].

pub mod split;

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{convex_hull, locate_int, Point, PointLocation};
use crate::plane3tree::RepTree;
use crate::range_oracle::{Backend, OracleError, RangeOracle};

pub use split::{find_representative_point, find_split_points, SplitPoints};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Baseline,
    #[default]
    Improved,
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "baseline" => Ok(Mode::Baseline),
            "improved" => Ok(Mode::Improved),
            other => Err(format!("unknown mode {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NoEmbeddingReason {
    /// The convex hull of the points does not have exactly three corners.
    HullNotThree,
    /// A non-corner point lies on the hull triangle's boundary.
    HullBoundaryOccupied,
    /// Some internal node had no point splitting its region correctly,
    /// under every outer assignment.
    NoValidRepresentative,
}

/// `assignment[v]` is the point vertex `v` is drawn at.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mapping {
    pub assignment: Vec<Point>,
}

impl Mapping {
    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Found(Mapping),
    NoEmbedding(NoEmbeddingReason),
}

impl Outcome {
    pub fn is_found(&self) -> bool {
        matches!(self, Outcome::Found(_))
    }

    pub fn mapping(&self) -> Option<&Mapping> {
        match self {
            Outcome::Found(m) => Some(m),
            Outcome::NoEmbedding(_) => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct AlgoStats {
    pub recursion_nodes: u64,
    pub count_queries: u64,
    pub report_queries: u64,
    pub candidates_checked: u64,
    pub binary_search_steps: u64,
    /// Largest number of bisection steps spent at a single node.
    pub max_node_binary_search_steps: u64,
    /// Nodes whose candidate wedge held more than `2 * (n2 + 1)` points.
    pub candidate_overflow_nodes: u64,
    /// Bisections that never hit their target count, so the count jump
    /// was located exactly from collinear points.
    pub pinned_searches: u64,
}

impl AlgoStats {
    pub(crate) fn record_node_search(&mut self, c: split::SearchCounters) {
        self.binary_search_steps += c.steps;
        self.max_node_binary_search_steps = self.max_node_binary_search_steps.max(c.steps);
        self.pinned_searches += c.pinned;
    }

    pub fn add(&mut self, other: &AlgoStats) {
        self.recursion_nodes += other.recursion_nodes;
        self.count_queries += other.count_queries;
        self.report_queries += other.report_queries;
        self.candidates_checked += other.candidates_checked;
        self.binary_search_steps += other.binary_search_steps;
        self.max_node_binary_search_steps = self.max_node_binary_search_steps.max(other.max_node_binary_search_steps);
        self.candidate_overflow_nodes += other.candidate_overflow_nodes;
        self.pinned_searches += other.pinned_searches;
    }
}

/// One outer assignment: `outer[i]` is the point given to `tree.outer()[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttemptReport {
    pub outer: [Point; 3],
    pub found: bool,
    pub stats: AlgoStats,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbedResult {
    pub outcome: Outcome,
    /// Totals over all attempts.
    pub stats: AlgoStats,
    /// Attempts in the order they ran; empty when the hull checks fail.
    pub attempts: Vec<AttemptReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("graph has {expected} vertices but {got} points were given")]
    SizeMismatch { expected: usize, got: usize },
    #[error("graph has {needed} vertices but only {got} points were given")]
    TooFewPoints { needed: usize, got: usize },
    #[error("duplicate point {0}")]
    DuplicatePoint(Point),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal error: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EmbedOptions {
    pub mode: Mode,
    pub backend: Backend,
}

pub fn embed(tree: &RepTree, points: &[Point], mode: Mode) -> Result<EmbedResult, EmbedError> {
    embed_with(tree, points, &EmbedOptions { mode, ..EmbedOptions::default() })
}

pub fn embed_with(tree: &RepTree, points: &[Point], opts: &EmbedOptions) -> Result<EmbedResult, EmbedError> {
    let n = tree.vertex_count();
    if points.len() != n {
        return Err(EmbedError::SizeMismatch { expected: n, got: points.len() });
    }
    let mut seen = HashSet::with_capacity(n);
    for &p in points {
        if !seen.insert(p) {
            return Err(EmbedError::DuplicatePoint(p));
        }
    }
    let no = |reason| EmbedResult {
        outcome: Outcome::NoEmbedding(reason),
        stats: AlgoStats::default(),
        attempts: Vec::new(),
    };
    let hull = match convex_hull(points) {
        Ok(h) if h.len() == 3 => h,
        _ => return Ok(no(NoEmbeddingReason::HullNotThree)),
    };
    if !check_hull_boundary(points, &hull) {
        return Ok(no(NoEmbeddingReason::HullBoundaryOccupied));
    }

    let oracle = RangeOracle::build(points, opts.backend)?;
    let mut total = AlgoStats::default();
    let mut attempts = Vec::with_capacity(6);
    for outer in outer_mappings(&hull) {
        let (found, stats) = try_outer_mapping(tree, &oracle, outer, opts.mode)?;
        total.add(&stats);
        attempts.push(AttemptReport { outer, found: found.is_some(), stats });
        if let Some(m) = found {
            return Ok(EmbedResult { outcome: Outcome::Found(m), stats: total, attempts });
        }
    }
    Ok(EmbedResult { outcome: Outcome::NoEmbedding(NoEmbeddingReason::NoValidRepresentative), stats: total, attempts })
}

/// True iff no point other than the three hull corners lies on the
/// boundary of the hull triangle.
pub fn check_hull_boundary(points: &[Point], hull: &[Point]) -> bool {
    let [a, b, c] = match hull {
        &[a, b, c] => [a, b, c],
        _ => return false,
    };
    points.iter().all(|&p| !matches!(locate_int(p, a, b, c), Ok(PointLocation::OnEdge(_))))
}

/// The six assignments of hull corners to the outer vertices, as
/// permutations of the corners sorted ascending, in lexicographic order.
pub fn outer_mappings(hull: &[Point]) -> Vec<[Point; 3]> {
    let mut h = hull.to_vec();
    h.sort_unstable();
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    PERMS.iter().map(|p| [h[p[0]], h[p[1]], h[p[2]]]).collect()
}

/// Runs the top-down placement for one fixed outer assignment.
pub fn try_outer_mapping(
    tree: &RepTree,
    oracle: &RangeOracle,
    outer: [Point; 3],
    mode: Mode,
) -> Result<(Option<Mapping>, AlgoStats), EmbedError> {
    let before = oracle.stats();
    let mut stats = AlgoStats::default();
    let mut assigned: Vec<Option<Point>> = vec![None; tree.vertex_count()];
    for (&v, &p) in tree.outer().iter().zip(&outer) {
        assigned[v] = Some(p);
    }

    let mut ok = true;
    let mut stack = vec![tree.root()];
    while let Some(id) = stack.pop() {
        let node = tree.node(id);
        let (Some(ch), Some(rep)) = (node.children, node.rep) else { continue };
        stats.recursion_nodes += 1;
        let corners = node
            .region
            .map(|v| assigned[v].ok_or_else(|| EmbedError::Internal(format!("region corner {v} not placed"))));
        let corners = [corners[0].clone()?, corners[1].clone()?, corners[2].clone()?];
        let sizes = ch.map(|c| tree.node(c).size);
        let u = match mode {
            Mode::Improved => split::representative_improved(oracle, corners, sizes, &mut stats)?,
            Mode::Baseline => split::representative_baseline(oracle, corners, sizes, &mut stats)?,
        };
        let Some(u) = u else {
            ok = false;
            break;
        };
        assigned[rep] = Some(u);
        stack.extend(ch.iter().rev().filter(|&&c| !tree.node(c).is_leaf()));
    }

    let delta = oracle.stats().since(&before);
    stats.count_queries = delta.count_queries;
    stats.report_queries = delta.report_queries;
    if !ok {
        return Ok((None, stats));
    }
    let assignment = assigned
        .into_iter()
        .enumerate()
        .map(|(v, p)| p.ok_or_else(|| EmbedError::Internal(format!("vertex {v} never placed"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((Some(Mapping { assignment }), stats))
}
