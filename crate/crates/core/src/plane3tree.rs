//! Plane 3-tree recognition and the ordered representative tree.
//!
//! Input is purely combinatorial: an edge list plus the outer triangle in
//! counterclockwise order. Recognition peels interior degree-3 vertices
//! (lowest id first) until only the outer triangle is left, then replays
//! the insertions top-down. Every replayed vertex must land in a face that
//! exists at that moment, which is what rules out non-planar 3-trees.
//!
//! Region convention, used everywhere in the crate: inserting `p` into the
//! region `(x, y, z)` creates the children `(x, y, p)`, `(p, y, z)` and
//! `(x, p, z)`, in that order. All three keep the winding of the parent, so
//! every region is counterclockwise when the outer triple is.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type VertexId = usize;
pub type NodeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("malformed graph: {0}")]
    Malformed(String),
    #[error("outer triple ({0}, {1}, {2}) is not a face triangle of the graph")]
    BadOuterFace(VertexId, VertexId, VertexId),
    #[error("not a plane 3-tree: {0}")]
    NotTriangulated(String),
    #[error("graph is disconnected")]
    Disconnected,
}

/// A plane 3-tree given combinatorially.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaneGraphInput {
    pub n: usize,
    pub edges: Vec<(VertexId, VertexId)>,
    /// Outer vertices, declared counterclockwise.
    pub outer: [VertexId; 3],
}

impl PlaneGraphInput {
    pub fn new(n: usize, edges: Vec<(VertexId, VertexId)>, outer: [VertexId; 3]) -> Self {
        PlaneGraphInput { n, edges, outer }
    }

    /// The complete graph on three vertices.
    pub fn triangle() -> Self {
        PlaneGraphInput::new(3, vec![(0, 1), (1, 2), (2, 0)], [0, 1, 2])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepNode {
    /// Representative vertex; `None` for leaves.
    pub rep: Option<VertexId>,
    /// Bounding vertices of the region, in region order.
    pub region: [VertexId; 3],
    /// Number of internal nodes in this subtree, this node included.
    pub size: usize,
    pub children: Option<[NodeId; 3]>,
}

impl RepNode {
    pub fn is_leaf(&self) -> bool {
        self.children.is_none()
    }
}

/// Ordered ternary representative tree stored as an arena.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepTree {
    nodes: Vec<RepNode>,
    root: NodeId,
    vertex_count: usize,
}

impl RepTree {
    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn node(&self, id: NodeId) -> &RepNode {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[RepNode] {
        &self.nodes
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn outer(&self) -> [VertexId; 3] {
        self.nodes[self.root].region
    }

    pub fn internal_count(&self) -> usize {
        self.nodes.iter().filter(|n| !n.is_leaf()).count()
    }

    /// Internal node ids in breadth-first order from the root.
    pub fn internal_nodes_bfs(&self) -> Vec<NodeId> {
        let mut out = Vec::with_capacity(self.vertex_count.saturating_sub(3));
        let mut queue = VecDeque::from([self.root]);
        while let Some(id) = queue.pop_front() {
            if let Some(ch) = self.nodes[id].children {
                out.push(id);
                queue.extend(ch);
            }
        }
        out
    }
}

/// Recomputes every `size` field bottom-up: leaves get 0, internal nodes
/// one more than the sum over their children.
pub fn subtree_sizes(mut tree: RepTree) -> RepTree {
    // Children are always created after their parent, so a reverse sweep
    // over any parent-first order is a valid post-order.
    let mut order = Vec::with_capacity(tree.nodes.len());
    let mut stack = vec![tree.root];
    while let Some(id) = stack.pop() {
        order.push(id);
        if let Some(ch) = tree.nodes[id].children {
            stack.extend(ch);
        }
    }
    for &id in order.iter().rev() {
        tree.nodes[id].size = match tree.nodes[id].children {
            None => 0,
            Some(ch) => 1 + ch.iter().map(|&c| tree.nodes[c].size).sum::<usize>(),
        };
    }
    tree
}

fn sorted3(mut t: [VertexId; 3]) -> [VertexId; 3] {
    t.sort_unstable();
    t
}

/// Validates that `input` is a plane 3-tree with the declared outer face and
/// builds its representative tree.
pub fn validate_and_build(input: &PlaneGraphInput) -> Result<RepTree, TreeError> {
    let n = input.n;
    if n < 3 {
        return Err(TreeError::Malformed(format!("need at least 3 vertices, got {n}")));
    }
    let [a, b, c] = input.outer;
    if input.outer.iter().any(|&v| v >= n) {
        return Err(TreeError::Malformed(format!("outer vertex out of range 0..{n}")));
    }
    if a == b || b == c || a == c {
        return Err(TreeError::Malformed("outer vertices must be distinct".into()));
    }

    let mut adj: Vec<HashSet<VertexId>> = vec![HashSet::new(); n];
    for &(u, v) in &input.edges {
        if u >= n || v >= n {
            return Err(TreeError::Malformed(format!("edge ({u}, {v}) out of range 0..{n}")));
        }
        if u == v {
            return Err(TreeError::Malformed(format!("self-loop at {u}")));
        }
        if !adj[u].insert(v) || !adj[v].insert(u) {
            return Err(TreeError::Malformed(format!("duplicate edge ({u}, {v})")));
        }
    }
    if !(adj[a].contains(&b) && adj[b].contains(&c) && adj[c].contains(&a)) {
        return Err(TreeError::BadOuterFace(a, b, c));
    }

    // Connectivity.
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([a]);
    seen[a] = true;
    let mut reached = 1;
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                reached += 1;
                queue.push_back(v);
            }
        }
    }
    if reached != n {
        return Err(TreeError::Disconnected);
    }

    if input.edges.len() != 3 * n - 6 {
        return Err(TreeError::NotTriangulated(format!(
            "{} edges, a triangulation on {n} vertices has {}",
            input.edges.len(),
            3 * n - 6
        )));
    }

    let is_outer = |v: VertexId| v == a || v == b || v == c;
    let peelable = |adj: &[HashSet<VertexId>], v: VertexId| -> Option<[VertexId; 3]> {
        if adj[v].len() != 3 {
            return None;
        }
        let mut it = adj[v].iter().copied();
        let t = [it.next()?, it.next()?, it.next()?];
        let pairwise = adj[t[0]].contains(&t[1]) && adj[t[1]].contains(&t[2]) && adj[t[0]].contains(&t[2]);
        pairwise.then(|| sorted3(t))
    };

    // Peel: lowest id among currently peelable interior vertices.
    let mut removed = vec![false; n];
    let mut heap: BinaryHeap<Reverse<VertexId>> =
        (0..n).filter(|&v| !is_outer(v) && adj[v].len() == 3).map(Reverse).collect();
    let mut peeled: Vec<(VertexId, [VertexId; 3])> = Vec::with_capacity(n - 3);
    while let Some(Reverse(v)) = heap.pop() {
        if removed[v] {
            continue;
        }
        let Some(tri) = peelable(&adj, v) else { continue };
        removed[v] = true;
        for &w in &tri {
            adj[w].remove(&v);
            if !is_outer(w) && !removed[w] && adj[w].len() == 3 {
                heap.push(Reverse(w));
            }
        }
        adj[v].clear();
        peeled.push((v, tri));
    }
    if peeled.len() != n - 3 {
        return Err(TreeError::NotTriangulated(format!(
            "peeling stalled with {} interior vertices left",
            n - 3 - peeled.len()
        )));
    }

    // Replay insertions top-down.
    let mut nodes = vec![RepNode { rep: None, region: [a, b, c], size: 0, children: None }];
    let mut faces: HashMap<[VertexId; 3], NodeId> = HashMap::from([(sorted3([a, b, c]), 0)]);
    for &(p, tri) in peeled.iter().rev() {
        let Some(id) = faces.remove(&tri) else {
            return Err(TreeError::NotTriangulated(format!(
                "vertex {p} attaches to {tri:?}, which is not a face at that point"
            )));
        };
        let [x, y, z] = nodes[id].region;
        let regions = [[x, y, p], [p, y, z], [x, p, z]];
        let base = nodes.len();
        for (k, r) in regions.into_iter().enumerate() {
            faces.insert(sorted3(r), base + k);
            nodes.push(RepNode { rep: None, region: r, size: 0, children: None });
        }
        nodes[id].rep = Some(p);
        nodes[id].children = Some([base, base + 1, base + 2]);
    }

    Ok(subtree_sizes(RepTree { nodes, root: 0, vertex_count: n }))
}
