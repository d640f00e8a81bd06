//! Static 2-d tree over the input points.
//!
//! Points are permuted so each node owns a contiguous slice. A query walks
//! the tree and settles whole nodes whenever the node's bounding box is
//! entirely inside or outside the query triangle. Edges that a box clears
//! are dropped from the active mask for the whole subtree.

use std::cmp::Ordering;

use super::form::{BBox, PreparedTriangle};
use crate::geometry::Point;

const LEAF_SIZE: usize = 8;
const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
struct Node {
    bbox: BBox,
    lo: u32,
    hi: u32,
    left: u32,
    right: u32,
}

#[derive(Clone, Debug)]
pub(crate) struct KdTree {
    points: Vec<Point>,
    nodes: Vec<Node>,
}

impl KdTree {
    pub fn build(points: &[Point]) -> KdTree {
        let mut tree = KdTree { points: points.to_vec(), nodes: Vec::with_capacity(2 * points.len() / LEAF_SIZE + 1) };
        if !points.is_empty() {
            tree.build_node(0, points.len(), 0);
        }
        tree
    }

    fn build_node(&mut self, lo: usize, hi: usize, depth: usize) -> u32 {
        let id = self.nodes.len() as u32;
        let bbox = BBox::of(&self.points[lo..hi]);
        self.nodes.push(Node { bbox, lo: lo as u32, hi: hi as u32, left: NONE, right: NONE });
        if hi - lo > LEAF_SIZE {
            let mid = lo + (hi - lo) / 2;
            let slice = &mut self.points[lo..hi];
            if depth.is_multiple_of(2) {
                slice.select_nth_unstable_by_key(mid - lo, |p| (p.x(), p.y()));
            } else {
                slice.select_nth_unstable_by_key(mid - lo, |p| (p.y(), p.x()));
            }
            let left = self.build_node(lo, mid, depth + 1);
            let right = self.build_node(mid, hi, depth + 1);
            let node = &mut self.nodes[id as usize];
            node.left = left;
            node.right = right;
        }
        id
    }

    /// Counts points inside `tri` (closed or open), pushing them into `out`
    /// when it is given.
    pub fn query(&self, tri: &PreparedTriangle, closed: bool, mut out: Option<&mut Vec<Point>>) -> usize {
        if self.nodes.is_empty() {
            return 0;
        }
        let mut total = 0;
        let mut stack: Vec<(u32, u8)> = vec![(0, 0b111)];
        while let Some((id, mut mask)) = stack.pop() {
            let node = &self.nodes[id as usize];
            let mut outside = false;
            for (e, form) in tri.forms.iter().enumerate() {
                if mask & (1 << e) == 0 {
                    continue;
                }
                let (lo, hi) = form.sign_range(&node.bbox);
                let (out_test, in_test) = if closed {
                    (hi == Ordering::Less, lo != Ordering::Less)
                } else {
                    (hi != Ordering::Greater, lo == Ordering::Greater)
                };
                if out_test {
                    outside = true;
                    break;
                }
                if in_test {
                    mask &= !(1 << e);
                }
            }
            if outside {
                continue;
            }
            let range = node.lo as usize..node.hi as usize;
            if mask == 0 {
                total += range.len();
                if let Some(v) = out.as_deref_mut() {
                    v.extend_from_slice(&self.points[range]);
                }
                continue;
            }
            if node.left == NONE {
                for &p in &self.points[range] {
                    let hit = tri.forms.iter().enumerate().all(|(e, f)| {
                        if mask & (1 << e) == 0 {
                            return true;
                        }
                        let s = f.sign_at(p.x(), p.y());
                        s == Ordering::Greater || (closed && s == Ordering::Equal)
                    });
                    if hit {
                        total += 1;
                        if let Some(v) = out.as_deref_mut() {
                            v.push(p);
                        }
                    }
                }
            } else {
                stack.push((node.right, mask));
                stack.push((node.left, mask));
            }
        }
        total
    }
}
