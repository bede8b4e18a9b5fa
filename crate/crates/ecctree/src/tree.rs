//! Tree representation and metric computations.
//!
//! Trees are simple connected acyclic graphs on at least two vertices,
//! labelled `0..n-1`. All distance-related quantities are measured in edges.

use std::fmt;

use thiserror::Error;

/// Hard cap on the number of vertices. Far beyond anything the rest of the
/// crate enumerates; it only guards against pathological input files.
pub const MAX_ORDER: usize = 100_000;

/// Errors produced when building or parsing a tree.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    /// The edge set does not describe a tree (wrong edge count, a cycle,
    /// a duplicate edge, or a disconnected graph).
    #[error("not a tree: {0}")]
    NotATree(String),
    /// A vertex label outside `0..n`.
    #[error("vertex label {label} out of range for order {order}")]
    BadLabel { label: usize, order: usize },
}

/// Errors produced when reading the edge-list text format.
#[derive(Debug, Error)]
pub enum EdgeListError {
    #[error("edge list line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error(transparent)]
    Tree(#[from] TreeError),
}

/// An unrooted tree on `n >= 2` vertices labelled `0..n-1`.
///
/// Stored as sorted adjacency lists; construction validates connectivity
/// and the edge count, so every `Tree` value is a genuine tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    adj: Vec<Vec<u32>>,
}

impl Tree {
    /// Builds a tree from `n` and exactly `n - 1` edges.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, TreeError> {
        if n < 2 {
            return Err(TreeError::NotATree(format!(
                "order {n} is below the minimum of 2"
            )));
        }
        if n > MAX_ORDER {
            return Err(TreeError::NotATree(format!(
                "order {n} exceeds the supported maximum {MAX_ORDER}"
            )));
        }
        if edges.len() != n - 1 {
            return Err(TreeError::NotATree(format!(
                "expected {} edges for order {n}, got {}",
                n - 1,
                edges.len()
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for &x in &[u, v] {
                if x >= n {
                    return Err(TreeError::BadLabel { label: x, order: n });
                }
            }
            if u == v {
                return Err(TreeError::NotATree(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        for list in &mut adj {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(TreeError::NotATree("duplicate edge".into()));
            }
        }
        let t = Tree { adj };
        // n - 1 edges and connectivity together rule out cycles.
        if t.bfs_distances(0).contains(&u32::MAX) {
            return Err(TreeError::NotATree("graph is disconnected".into()));
        }
        Ok(t)
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Degree of `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbours of `v` in increasing label order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&w| w as usize)
    }

    /// All edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .filter(move |&&v| (v as usize) > u)
                .map(move |&v| (u, v as usize))
        })
    }

    /// BFS distances from `src`; unreachable vertices (impossible for a
    /// validated tree) are `u32::MAX`.
    pub(crate) fn bfs_distances(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.order()];
        let mut queue = std::collections::VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                let w = w as usize;
                if dist[w] == u32::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// BFS distances and parents from `src`. The parent of `src` is itself.
    pub(crate) fn bfs_with_parents(&self, src: usize) -> (Vec<u32>, Vec<usize>) {
        let n = self.order();
        let mut dist = vec![u32::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        dist[src] = 0;
        parent[src] = src;
        queue.push_back(src);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                let w = w as usize;
                if dist[w] == u32::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        (dist, parent)
    }

    /// Full distance matrix; `n` breadth-first searches.
    pub fn all_pairs_distances(&self) -> Vec<Vec<u32>> {
        (0..self.order()).map(|v| self.bfs_distances(v)).collect()
    }

    /// Eccentricities, radius, diameter and centre, via a double sweep:
    /// in a tree the eccentricity of `v` is the larger of its distances to
    /// the two endpoints of a longest path.
    pub fn ecc_profile(&self) -> EccProfile {
        let d0 = self.bfs_distances(0);
        let a = argmax_min_label(&d0);
        let da = self.bfs_distances(a);
        let b = argmax_min_label(&da);
        let db = self.bfs_distances(b);
        let ecc: Vec<u32> = da.iter().zip(&db).map(|(&x, &y)| x.max(y)).collect();
        let radius = *ecc.iter().min().expect("nonempty tree");
        let diameter = *ecc.iter().max().expect("nonempty tree");
        let center: Vec<usize> = ecc
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e == radius)
            .map(|(v, _)| v)
            .collect();
        EccProfile {
            eccentricities: ecc,
            radius,
            diameter,
            center,
        }
    }

    /// Vertices of degree one, in increasing label order.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.order()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// A longest path, computed by double BFS. Deterministic: both sweeps
    /// start from the smallest-labelled candidate and the result is
    /// oriented with the smaller endpoint label first.
    pub fn longest_path(&self) -> Vec<usize> {
        let d0 = self.bfs_distances(0);
        let a = argmax_min_label(&d0);
        let (da, parent) = self.bfs_with_parents(a);
        let b = argmax_min_label(&da);
        let mut path = Vec::with_capacity(da[b] as usize + 1);
        let mut v = b;
        loop {
            path.push(v);
            if v == a {
                break;
            }
            v = parent[v];
        }
        if path[0] > *path.last().expect("path is nonempty") {
            path.reverse();
        }
        path
    }

    /// Whether deleting all leaves yields a (possibly empty) path.
    pub fn is_caterpillar(&self) -> bool {
        self.backbone_check().is_some()
    }

    /// The backbone (non-leaf vertices ordered along their path) when this
    /// tree is a caterpillar with at least one non-leaf vertex.
    pub fn caterpillar_backbone(&self) -> Option<Vec<usize>> {
        self.backbone_check().filter(|b| !b.is_empty())
    }

    /// `Some(backbone)` iff caterpillar; the backbone may be empty (P2).
    fn backbone_check(&self) -> Option<Vec<usize>> {
        let n = self.order();
        let non_leaf: Vec<usize> = (0..n).filter(|&v| self.degree(v) > 1).collect();
        if non_leaf.is_empty() {
            return Some(Vec::new());
        }
        // The non-leaf vertices of a tree always induce a subtree, so it is
        // a path iff every induced degree is at most two.
        let mut induced_deg = vec![0usize; n];
        for &v in &non_leaf {
            induced_deg[v] = self.neighbors(v).filter(|&w| self.degree(w) > 1).count();
            if induced_deg[v] > 2 {
                return None;
            }
        }
        if non_leaf.len() == 1 {
            return Some(non_leaf);
        }
        let mut ends = non_leaf.iter().copied().filter(|&v| induced_deg[v] <= 1);
        let start = ends.next().expect("a finite path has an endpoint");
        let mut backbone = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while backbone.len() < non_leaf.len() {
            let next = self
                .neighbors(cur)
                .find(|&w| self.degree(w) > 1 && w != prev)
                .expect("backbone path is connected");
            backbone.push(next);
            prev = cur;
            cur = next;
        }
        if backbone[0] > *backbone.last().expect("nonempty") {
            backbone.reverse();
        }
        Some(backbone)
    }

    /// Canonical form identifying this tree up to isomorphism: an AHU
    /// encoding rooted at the centre vertex, or at the central edge when
    /// the diameter is odd.
    pub fn canonical_form(&self) -> CanonicalForm {
        let prof = self.ecc_profile();
        match *prof.center.as_slice() {
            [c] => {
                let mut bytes = vec![1u8];
                bytes.extend(self.ahu_encoding(c, None));
                CanonicalForm(bytes)
            }
            [c1, c2] => {
                let e1 = self.ahu_encoding(c1, Some(c2));
                let e2 = self.ahu_encoding(c2, Some(c1));
                let (lo, hi) = if e1 <= e2 { (e1, e2) } else { (e2, e1) };
                let mut bytes = vec![2u8];
                bytes.extend(lo);
                bytes.extend(hi);
                CanonicalForm(bytes)
            }
            _ => unreachable!("a tree has one or two centre vertices"),
        }
    }

    /// AHU bracket encoding of the subtree reachable from `root` without
    /// crossing into `blocked`. Iterative to keep deep paths off the stack.
    fn ahu_encoding(&self, root: usize, blocked: Option<usize>) -> Vec<u8> {
        let n = self.order();
        let mut parent = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut stack = vec![root];
        parent[root] = root;
        while let Some(v) = stack.pop() {
            order.push(v);
            for w in self.neighbors(v) {
                if Some(w) != blocked && parent[w] == usize::MAX {
                    parent[w] = v;
                    stack.push(w);
                }
            }
        }
        let mut enc: Vec<Option<Vec<u8>>> = vec![None; n];
        for &v in order.iter().rev() {
            let mut children: Vec<Vec<u8>> = self
                .neighbors(v)
                .filter(|&w| Some(w) != blocked && w != root && parent[w] == v)
                .map(|w| enc[w].take().expect("children processed before parent"))
                .collect();
            children.sort_unstable();
            let mut e = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
            e.push(b'(');
            for c in children {
                e.extend(c);
            }
            e.push(b')');
            enc[v] = Some(e);
        }
        enc[root].take().expect("root encoding")
    }

    /// Serialises to the edge-list text format: first line `n`, then one
    /// `u v` line per edge in sorted order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.order());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Whether two trees are isomorphic.
pub fn is_isomorphic(a: &Tree, b: &Tree) -> bool {
    a.order() == b.order() && a.canonical_form() == b.canonical_form()
}

/// Parses the edge-list text format. The first non-comment line holds `n`,
/// followed by `n - 1` lines `u v`. Lines starting with `#` and blank lines
/// are ignored.
pub fn parse_edge_list(text: &str) -> Result<Tree, EdgeListError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let lineno = idx + 1;
        if n.is_none() {
            n = Some(line.parse().map_err(|_| EdgeListError::Format {
                line: lineno,
                msg: format!("expected vertex count, got {line:?}"),
            })?);
            continue;
        }
        let mut it = line.split_whitespace();
        let (u, v) = match (it.next(), it.next(), it.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => {
                return Err(EdgeListError::Format {
                    line: lineno,
                    msg: format!("expected `u v`, got {line:?}"),
                })
            }
        };
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| EdgeListError::Format {
                line: lineno,
                msg: format!("bad vertex label {s:?}"),
            })
        };
        edges.push((parse(u)?, parse(v)?));
    }
    let n = n.ok_or(EdgeListError::Format {
        line: 0,
        msg: "empty input".into(),
    })?;
    Ok(Tree::from_edge_list(n, &edges)?)
}

/// Index of the maximum value, preferring the smallest index on ties.
fn argmax_min_label(values: &[u32]) -> usize {
    let mut best = 0;
    for (i, &v) in values.iter().enumerate() {
        if v > values[best] {
            best = i;
        }
    }
    best
}

/// Eccentricities together with the derived radius, diameter and centre.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EccProfile {
    /// Per-vertex eccentricity in edges.
    pub eccentricities: Vec<u32>,
    pub radius: u32,
    pub diameter: u32,
    /// Centre vertices in increasing label order; one or two for a tree.
    pub center: Vec<usize>,
}

impl EccProfile {
    /// The eccentricities in nondecreasing order.
    pub fn sorted(&self) -> Vec<u32> {
        let mut s = self.eccentricities.clone();
        s.sort_unstable();
        s
    }
}

/// A total-order key identifying a tree up to isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}
