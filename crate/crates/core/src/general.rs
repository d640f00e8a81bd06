//! Embedding onto a superset of points (`k >= n`) by dynamic programming.
//!
//! `Embed(node, a, b, c)` asks whether the subtree at `node` can be drawn
//! with its region corners on points `a`, `b`, `c`. For an internal node it
//! holds iff some point `u` strictly inside `abc` makes all three children
//! embeddable on `(a, b, u)`, `(u, b, c)` and `(a, u, c)`. Leaves only need
//! a non-degenerate triangle. Unused points are unconstrained, so they may
//! lie on drawn edges.

use std::collections::{HashMap, HashSet};

use crate::embed::{EmbedError, Mapping};
use crate::geometry::{cross_int, locate_int, Point, PointLocation};
use crate::plane3tree::{NodeId, RepTree};

/// Indices into the point list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DpKey {
    pub node: NodeId,
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

/// Memo over internal-node keys. A stored `Some(u)` is the witness point.
#[derive(Debug, Clone, Default)]
pub struct DpTable {
    memo: HashMap<DpKey, Option<usize>>,
    entries_evaluated: u64,
}

impl DpTable {
    pub fn new() -> Self {
        DpTable::default()
    }

    pub fn entries_evaluated(&self) -> u64 {
        self.entries_evaluated
    }

    pub fn get(&self, key: &DpKey) -> Option<Option<usize>> {
        self.memo.get(key).copied()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    pub fn keys(&self) -> impl Iterator<Item = &DpKey> {
        self.memo.keys()
    }
}

#[derive(Debug, Clone)]
pub struct GeneralOutcome {
    pub mapping: Option<Mapping>,
    pub table: DpTable,
}

fn collinear(points: &[Point], a: usize, b: usize, c: usize) -> bool {
    cross_int(points[a], points[b], points[c]) == 0
}

/// Memoised truth value of `key`. `key`'s corners must be pairwise distinct.
pub fn dp_evaluate(key: DpKey, table: &mut DpTable, tree: &RepTree, points: &[Point]) -> bool {
    let DpKey { node, a, b, c } = key;
    if collinear(points, a, b, c) {
        return false;
    }
    let Some(children) = tree.node(node).children else {
        return true;
    };
    if let Some(v) = table.memo.get(&key) {
        return v.is_some();
    }
    let need = tree.node(node).size;
    let (pa, pb, pc) = (points[a], points[b], points[c]);
    let inside: Vec<usize> =
        (0..points.len()).filter(|&i| locate_int(points[i], pa, pb, pc) == Ok(PointLocation::Interior)).collect();
    let mut witness = None;
    // A subtree with `need` internal vertices needs that many interior points.
    if inside.len() >= need {
        let [r1, r2, r3] = children;
        for &u in &inside {
            if dp_evaluate(DpKey { node: r1, a, b, c: u }, table, tree, points)
                && dp_evaluate(DpKey { node: r2, a: u, b, c }, table, tree, points)
                && dp_evaluate(DpKey { node: r3, a, b: u, c }, table, tree, points)
            {
                witness = Some(u);
                break;
            }
        }
    }
    table.memo.insert(key, witness);
    table.entries_evaluated += 1;
    witness.is_some()
}

fn reconstruct(top: DpKey, table: &DpTable, tree: &RepTree, points: &[Point]) -> Mapping {
    let mut assignment = vec![points[0]; tree.vertex_count()];
    let outer = tree.node(top.node).region;
    assignment[outer[0]] = points[top.a];
    assignment[outer[1]] = points[top.b];
    assignment[outer[2]] = points[top.c];
    let mut stack = vec![top];
    while let Some(key) = stack.pop() {
        let node = tree.node(key.node);
        let (Some([r1, r2, r3]), Some(rep)) = (node.children, node.rep) else { continue };
        let u = table.memo[&key].expect("reconstruction follows true entries only");
        assignment[rep] = points[u];
        let DpKey { a, b, c, .. } = key;
        stack.push(DpKey { node: r1, a, b, c: u });
        stack.push(DpKey { node: r2, a: u, b, c });
        stack.push(DpKey { node: r3, a, b: u, c });
    }
    Mapping { assignment }
}

pub fn embed_general(tree: &RepTree, points: &[Point]) -> Result<Option<Mapping>, EmbedError> {
    embed_general_with_table(tree, points).map(|o| o.mapping)
}

/// As [`embed_general`], also returning the memo table.
pub fn embed_general_with_table(tree: &RepTree, points: &[Point]) -> Result<GeneralOutcome, EmbedError> {
    let n = tree.vertex_count();
    let k = points.len();
    if k < n {
        return Err(EmbedError::TooFewPoints { needed: n, got: k });
    }
    let mut seen = HashSet::with_capacity(k);
    for &p in points {
        if !seen.insert(p) {
            return Err(EmbedError::DuplicatePoint(p));
        }
    }
    let mut table = DpTable::new();
    let root = tree.root();
    for a in 0..k {
        for b in 0..k {
            if b == a {
                continue;
            }
            for c in 0..k {
                if c == a || c == b {
                    continue;
                }
                let key = DpKey { node: root, a, b, c };
                if dp_evaluate(key, &mut table, tree, points) {
                    let mapping = reconstruct(key, &table, tree, points);
                    return Ok(GeneralOutcome { mapping: Some(mapping), table });
                }
            }
        }
    }
    Ok(GeneralOutcome { mapping: None, table })
}
