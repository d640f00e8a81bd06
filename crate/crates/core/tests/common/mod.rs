#![allow(dead_code)]

use std::collections::HashSet;

use p3embed::embed::Mapping;
use p3embed::geometry::{locate_int, Point, PointLocation};
use p3embed::harness::{verify, VerifyMode};
use p3embed::plane3tree::{PlaneGraphInput, RepTree};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn p(x: i64, y: i64) -> Point {
    Point::new(x, y).unwrap()
}

pub fn k4() -> PlaneGraphInput {
    PlaneGraphInput::new(4, vec![(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)], [0, 1, 2])
}

/// Points strictly inside `abc`, by direct scan.
pub fn scan_count(points: &[Point], a: Point, b: Point, c: Point) -> usize {
    points.iter().filter(|&&q| locate_int(q, a, b, c) == Ok(PointLocation::Interior)).count()
}

pub fn random_points(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> Vec<Point> {
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let q = p(rng.gen_range(lo..=hi), rng.gen_range(lo..=hi));
        if seen.insert(q) {
            out.push(q);
        }
    }
    out
}

/// Three corners plus `inner` distinct points strictly inside them.
pub fn triangle_with_interior(rng: &mut ChaCha8Rng, inner: usize, size: i64) -> Vec<Point> {
    let corners = [p(0, 0), p(size, rng.gen_range(0..=size / 4)), p(rng.gen_range(0..=size / 4), size)];
    let mut seen: HashSet<Point> = corners.iter().copied().collect();
    let mut out = corners.to_vec();
    while out.len() < inner + 3 {
        let q = p(rng.gen_range(0..=size), rng.gen_range(0..=size));
        if locate_int(q, corners[0], corners[1], corners[2]) == Ok(PointLocation::Interior) && seen.insert(q) {
            out.push(q);
        }
    }
    out
}

/// Exhaustive search over injective vertex-to-point maps, pruned only by
/// requiring each representative to sit strictly inside its region (a
/// condition the verifier also enforces) and accepted by the verifier.
pub fn brute_force_embeddable(graph: &PlaneGraphInput, tree: &RepTree, points: &[Point], mode: VerifyMode) -> bool {
    let order = tree.internal_nodes_bfs();
    let mut assign: Vec<Option<usize>> = vec![None; graph.n];
    let mut used = vec![false; points.len()];
    let outer = graph.outer;
    let k = points.len();
    for a in 0..k {
        for b in 0..k {
            for c in 0..k {
                if a == b || b == c || a == c {
                    continue;
                }
                assign[outer[0]] = Some(a);
                assign[outer[1]] = Some(b);
                assign[outer[2]] = Some(c);
                used[a] = true;
                used[b] = true;
                used[c] = true;
                let ok = place(graph, tree, points, &order, 0, &mut assign, &mut used, mode);
                used[a] = false;
                used[b] = false;
                used[c] = false;
                if ok {
                    return true;
                }
            }
        }
    }
    false
}

#[allow(clippy::too_many_arguments)]
fn place(
    graph: &PlaneGraphInput,
    tree: &RepTree,
    points: &[Point],
    order: &[usize],
    i: usize,
    assign: &mut Vec<Option<usize>>,
    used: &mut Vec<bool>,
    mode: VerifyMode,
) -> bool {
    if i == order.len() {
        let m = Mapping { assignment: assign.iter().map(|a| points[a.unwrap()]).collect() };
        return verify(graph, points, &m, mode).unwrap().valid;
    }
    let node = tree.node(order[i]);
    let rep = node.rep.unwrap();
    let [x, y, z] = node.region.map(|v| points[assign[v].unwrap()]);
    for u in 0..points.len() {
        if used[u] || locate_int(points[u], x, y, z) != Ok(PointLocation::Interior) {
            continue;
        }
        used[u] = true;
        assign[rep] = Some(u);
        let ok = place(graph, tree, points, order, i + 1, assign, used, mode);
        used[u] = false;
        assign[rep] = None;
        if ok {
            return true;
        }
    }
    false
}

/// Points satisfying the three count equations for the region `xyz` with
/// child sizes `sizes`, by direct scan.
pub fn root_count_solutions(points: &[Point], [x, y, z]: [Point; 3], sizes: [usize; 3]) -> Vec<Point> {
    points
        .iter()
        .copied()
        .filter(|&u| locate_int(u, x, y, z) == Ok(PointLocation::Interior))
        .filter(|&u| {
            scan_count(points, x, u, y) == sizes[0]
                && scan_count(points, y, u, z) == sizes[1]
                && scan_count(points, z, u, x) == sizes[2]
        })
        .collect()
}
