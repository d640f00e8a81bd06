//! Independent check of a straight-line drawing.
//!
//! It only uses the geometric predicates and the representative tree, never
//! the embedders. Edge pairs are pruned by bounding boxes and nothing else.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::HarnessError;
use crate::embed::Mapping;
use crate::geometry::{
    convex_hull, cross_int, locate_int, segments_properly_cross_int, strictly_on_segment_int, Point, PointLocation,
};
use crate::plane3tree::{validate_and_build, NodeId, PlaneGraphInput, VertexId};

/// Violations past this many are counted but not listed.
pub const MAX_LISTED_VIOLATIONS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerifyMode {
    /// Every point is used exactly once.
    #[default]
    Exact,
    /// Vertices go to distinct points of a possibly larger set.
    Generalized,
}

pub type Edge = (VertexId, VertexId);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Two vertices share a point.
    NotInjective {
        v1: VertexId,
        v2: VertexId,
    },
    /// A vertex is drawn at a point outside the point set.
    UnknownPoint {
        v: VertexId,
    },
    /// Exact mode only: a point of the set is not used.
    NotSurjective {
        point: Point,
    },
    EdgeCrossing {
        e1: Edge,
        e2: Edge,
    },
    /// A vertex lies in the relative interior of an edge not incident to it.
    VertexOnEdge {
        v: VertexId,
        e: Edge,
    },
    /// Exact mode only: an unused point lies on an edge.
    PointOnEdge {
        point: Point,
        e: Edge,
    },
    OuterFaceWrong,
    /// The representative of this tree node is not strictly inside its region.
    FaceStructureChanged {
        node: NodeId,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifierReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
    /// Total found, including any not listed.
    pub violation_count: usize,
}

struct Collector {
    list: Vec<Violation>,
    total: usize,
}

impl Collector {
    fn push(&mut self, v: Violation) {
        self.total += 1;
        if self.list.len() < MAX_LISTED_VIOLATIONS {
            self.list.push(v);
        }
    }
}

pub fn verify(
    graph: &PlaneGraphInput,
    points: &[Point],
    mapping: &Mapping,
    mode: VerifyMode,
) -> Result<VerifierReport, HarnessError> {
    let n = graph.n;
    if mapping.assignment.len() != n {
        return Err(HarnessError::SizeMismatch(format!(
            "mapping has {} entries for {n} vertices",
            mapping.assignment.len()
        )));
    }
    match mode {
        VerifyMode::Exact if points.len() != n => {
            return Err(HarnessError::SizeMismatch(format!("{} points for {n} vertices", points.len())));
        }
        VerifyMode::Generalized if points.len() < n => {
            return Err(HarnessError::SizeMismatch(format!("{} points for {n} vertices", points.len())));
        }
        _ => {}
    }
    let tree = validate_and_build(graph)?;
    let pos = &mapping.assignment;
    let mut out = Collector { list: Vec::new(), total: 0 };

    // (a) injective, into the set, and onto it in exact mode.
    let set: HashSet<Point> = points.iter().copied().collect();
    let mut first_at: HashMap<Point, VertexId> = HashMap::with_capacity(n);
    for (v, &p) in pos.iter().enumerate() {
        if !set.contains(&p) {
            out.push(Violation::UnknownPoint { v });
        }
        if let Some(&w) = first_at.get(&p) {
            out.push(Violation::NotInjective { v1: w, v2: v });
        } else {
            first_at.insert(p, v);
        }
    }
    if mode == VerifyMode::Exact {
        let mut unused: Vec<Point> = points.iter().copied().filter(|p| !first_at.contains_key(p)).collect();
        unused.sort_unstable();
        for &point in &unused {
            out.push(Violation::NotSurjective { point });
        }
    }

    let edges: Vec<Edge> = graph.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();

    // Edges sorted by left end, so a pair can only meet while the second
    // starts before the first ends.
    let bbox = |&(u, v): &Edge| {
        let (p, q) = (pos[u], pos[v]);
        (p.x().min(q.x()), p.x().max(q.x()), p.y().min(q.y()), p.y().max(q.y()))
    };
    let boxes: Vec<(i64, i64, i64, i64)> = edges.iter().map(bbox).collect();
    let mut by_x: Vec<usize> = (0..edges.len()).collect();
    by_x.sort_unstable_by_key(|&i| boxes[i].0);

    // (b) non-adjacent edges must not cross. Touching configurations are
    // reported by (c) instead.
    let mut crossings: Vec<(usize, usize)> = (0..by_x.len())
        .into_par_iter()
        .flat_map_iter(|r| {
            let i = by_x[r];
            let (a, b) = edges[i];
            let s1 = (pos[a], pos[b]);
            let bi = boxes[i];
            let mut found = Vec::new();
            for &j in by_x[r + 1..].iter().take_while(|&&j| boxes[j].0 <= bi.1) {
                let (c, d) = edges[j];
                let bj = boxes[j];
                if bj.2 > bi.3 || bj.3 < bi.2 || a == c || a == d || b == c || b == d {
                    continue;
                }
                let s2 = (pos[c], pos[d]);
                let touches = strictly_on_segment_int(s1.0, s1.1, s2.0)
                    || strictly_on_segment_int(s1.0, s1.1, s2.1)
                    || strictly_on_segment_int(s2.0, s2.1, s1.0)
                    || strictly_on_segment_int(s2.0, s2.1, s1.1);
                if !touches && segments_properly_cross_int(s1, s2) {
                    found.push((i.min(j), i.max(j)));
                }
            }
            found
        })
        .collect();
    crossings.sort_unstable();
    for (i, j) in crossings {
        out.push(Violation::EdgeCrossing { e1: edges[i], e2: edges[j] });
    }

    // (c) no vertex, and in exact mode no point at all, inside an edge.
    let mut candidates: Vec<(Point, Option<VertexId>)> = pos.iter().enumerate().map(|(w, &p)| (p, Some(w))).collect();
    if mode == VerifyMode::Exact {
        candidates.extend(points.iter().filter(|p| !first_at.contains_key(p)).map(|&p| (p, None)));
    }
    candidates.sort_unstable_by_key(|&(p, w)| (p.x(), w.is_none(), w, p.y()));
    let on_edges: Vec<Vec<Violation>> = edges
        .par_iter()
        .zip(boxes.par_iter())
        .map(|(&(a, b), &(x0, x1, y0, y1))| {
            let start = candidates.partition_point(|&(p, _)| p.x() < x0);
            let mut found = Vec::new();
            for &(p, w) in candidates[start..].iter().take_while(|&&(p, _)| p.x() <= x1) {
                if p.y() < y0 || p.y() > y1 || w == Some(a) || w == Some(b) {
                    continue;
                }
                if strictly_on_segment_int(pos[a], pos[b], p) {
                    found.push(match w {
                        Some(v) => Violation::VertexOnEdge { v, e: (a, b) },
                        None => Violation::PointOnEdge { point: p, e: (a, b) },
                    });
                }
            }
            found
        })
        .collect();
    for v in on_edges.into_iter().flatten() {
        out.push(v);
    }

    // (d) outer vertices on the hull corners, everything else strictly inside.
    let [o0, o1, o2] = graph.outer.map(|v| pos[v]);
    let outer_ok = cross_int(o0, o1, o2) != 0 && {
        let mut used: Vec<Point> = pos.clone();
        used.sort_unstable();
        used.dedup();
        let mut hull = convex_hull(&used).unwrap_or_default();
        let mut want = vec![o0, o1, o2];
        hull.sort_unstable();
        want.sort_unstable();
        hull == want
            && (0..n)
                .filter(|v| !graph.outer.contains(v))
                .all(|v| locate_int(pos[v], o0, o1, o2) == Ok(PointLocation::Interior))
    };
    if !outer_ok {
        out.push(Violation::OuterFaceWrong);
    }

    // (e) each representative strictly inside its region.
    for (id, node) in tree.nodes().iter().enumerate() {
        let Some(rep) = node.rep else { continue };
        let [x, y, z] = node.region.map(|v| pos[v]);
        if locate_int(pos[rep], x, y, z) != Ok(PointLocation::Interior) {
            out.push(Violation::FaceStructureChanged { node: id });
        }
    }

    Ok(VerifierReport { valid: out.total == 0, violations: out.list, violation_count: out.total })
}
