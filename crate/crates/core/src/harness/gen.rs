//! Random plane 3-trees and planted yes-instances.

use std::collections::HashSet;

use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::format::{Expected, InstanceFile};
use super::HarnessError;
use crate::embed::Mapping;
use crate::geometry::{locate_int, strictly_on_segment_int, Point, PointLocation};
use crate::plane3tree::PlaneGraphInput;

/// Default half-width of the coordinate box for generated instances.
pub const DEFAULT_GEN_COORD_BOUND: i64 = 1_000_000;

/// Builds a plane 3-tree on `n` vertices by `n - 3` insertions, each into a
/// uniformly chosen current face. Vertex `v > 2` is the `v - 3`-th insertion.
pub fn gen_plane3tree(n: usize, seed: u64) -> Result<PlaneGraphInput, HarnessError> {
    if n < 3 {
        return Err(HarnessError::Generate(format!("need n >= 3, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = vec![(0, 1), (1, 2), (2, 0)];
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2]];
    for p in 3..n {
        let i = rng.gen_range(0..faces.len());
        let [x, y, z] = faces[i];
        faces[i] = [x, y, p];
        faces.push([p, y, z]);
        faces.push([x, p, z]);
        edges.extend([(x, p), (y, p), (z, p)]);
    }
    Ok(PlaneGraphInput::new(n, edges, [0, 1, 2]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenOptions {
    /// Reject any point collinear with two earlier ones (corners included).
    pub general_position: bool,
    /// Half-width of the coordinate box. The three corners sit near its
    /// corners; the smallest usable value grows roughly like `sqrt(n)` in
    /// collinear mode and like `n` in general position.
    pub coord_bound: i64,
}

impl Default for GenOptions {
    fn default() -> Self {
        GenOptions { general_position: true, coord_bound: DEFAULT_GEN_COORD_BOUND }
    }
}

pub fn gen_yes_instance(n: usize, seed: u64, coord_bound: i64) -> Result<InstanceFile, HarnessError> {
    gen_yes_instance_with(n, seed, &GenOptions { coord_bound, ..GenOptions::default() })
}

/// Sign-normalised primitive direction from `a` to `b`.
fn direction(a: Point, b: Point) -> (i64, i64) {
    let (dx, dy) = (b.x() - a.x(), b.y() - a.y());
    let g = dx.gcd(&dy);
    let (dx, dy) = (dx / g, dy / g);
    if dx < 0 || (dx == 0 && dy < 0) {
        (-dx, -dy)
    } else {
        (dx, dy)
    }
}

fn sample_points(
    rng: &mut ChaCha8Rng,
    corners: [Point; 3],
    count: usize,
    opts: &GenOptions,
) -> Result<Vec<Point>, HarnessError> {
    let b = opts.coord_bound;
    let [a, bc, c] = corners;
    let mut chosen: Vec<Point> = corners.to_vec();
    let mut seen: HashSet<Point> = chosen.iter().copied().collect();
    let budget = 200 * (count + 10);
    let mut tries = 0;
    let mut dirs = HashSet::new();
    while chosen.len() < count + 3 {
        tries += 1;
        if tries > budget {
            return Err(HarnessError::Generate(format!("coordinate bound {b} too small for {count} interior points")));
        }
        let q = Point::with_bound(rng.gen_range(-b..=b), rng.gen_range(-b..=b), b)
            .map_err(|e| HarnessError::Generate(e.to_string()))?;
        if seen.contains(&q) || locate_int(q, a, bc, c) != Ok(PointLocation::Interior) {
            continue;
        }
        if opts.general_position {
            dirs.clear();
            if !chosen.iter().all(|&p| dirs.insert(direction(q, p))) {
                continue;
            }
        }
        seen.insert(q);
        chosen.push(q);
    }
    Ok(chosen.split_off(3))
}

struct Region {
    corners: [Point; 3],
    ids: [usize; 3],
    inside: Vec<Point>,
}

/// Chooses a representative for each region top-down. Returns false when
/// some region has no point whose three chords are free of other points.
fn partition(
    rng: &mut ChaCha8Rng,
    corners: [Point; 3],
    inside: Vec<Point>,
    edges: &mut Vec<(usize, usize)>,
    placed: &mut Vec<Point>,
) -> bool {
    let mut stack = vec![Region { corners, ids: [0, 1, 2], inside }];
    while let Some(Region { corners, ids, mut inside }) = stack.pop() {
        if inside.is_empty() {
            continue;
        }
        let [x, y, z] = corners;
        inside.shuffle(rng);
        let pick = inside.iter().position(|&u| {
            inside.iter().all(|&q| {
                !(strictly_on_segment_int(u, x, q)
                    || strictly_on_segment_int(u, y, q)
                    || strictly_on_segment_int(u, z, q))
            })
        });
        let Some(i) = pick else { return false };
        let u = inside.swap_remove(i);
        let id = placed.len();
        placed.push(u);
        edges.extend([(ids[0], id), (ids[1], id), (ids[2], id)]);
        let mut parts: [Vec<Point>; 3] = Default::default();
        for q in inside {
            let k = if locate_int(q, x, y, u) == Ok(PointLocation::Interior) {
                0
            } else if locate_int(q, u, y, z) == Ok(PointLocation::Interior) {
                1
            } else {
                2
            };
            parts[k].push(q);
        }
        let [p0, p1, p2] = parts;
        stack.push(Region { corners: [x, y, u], ids: [ids[0], ids[1], id], inside: p0 });
        stack.push(Region { corners: [u, y, z], ids: [id, ids[1], ids[2]], inside: p1 });
        stack.push(Region { corners: [x, u, z], ids: [ids[0], id, ids[2]], inside: p2 });
    }
    true
}

/// Builds a point set and a plane 3-tree together so a drawing exists,
/// recording it as the witness. Vertex ids and point order are shuffled.
pub fn gen_yes_instance_with(n: usize, seed: u64, opts: &GenOptions) -> Result<InstanceFile, HarnessError> {
    if n < 3 {
        return Err(HarnessError::Generate(format!("need n >= 3, got {n}")));
    }
    let b = opts.coord_bound;
    if b < 4 {
        return Err(HarnessError::Generate(format!("coordinate bound {b} too small")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let jitter = (b / 8).max(1);
    let pt = |x, y| Point::with_bound(x, y, b).map_err(|e| HarnessError::Generate(e.to_string()));
    let corners = [pt(-b, -b)?, pt(b, -b + rng.gen_range(0..jitter))?, pt(rng.gen_range(-jitter..=jitter), b)?];

    let mut built = None;
    for _ in 0..64 {
        let inside = sample_points(&mut rng, corners, n - 3, opts)?;
        let mut edges = vec![(0, 1), (1, 2), (2, 0)];
        let mut placed = corners.to_vec();
        if partition(&mut rng, corners, inside, &mut edges, &mut placed) {
            built = Some((edges, placed));
            break;
        }
    }
    let Some((edges, placed)) = built else {
        return Err(HarnessError::Generate("no chord-free partition found".into()));
    };

    let mut relabel: Vec<usize> = (0..n).collect();
    relabel.shuffle(&mut rng);
    let mut assignment = vec![placed[0]; n];
    for (old, &p) in placed.iter().enumerate() {
        assignment[relabel[old]] = p;
    }
    let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(u, v)| (relabel[u], relabel[v])).collect();
    edges.shuffle(&mut rng);
    let mut points = placed;
    points.shuffle(&mut rng);
    Ok(InstanceFile {
        graph: PlaneGraphInput::new(n, edges, [relabel[0], relabel[1], relabel[2]]),
        points,
        expected: Some(Expected::Embeddable),
        witness: Some(Mapping { assignment }),
    })
}
