//! The mate rewiring: an eccentricity-preserving modification that moves a
//! tree strictly closer to a caterpillar.
//!
//! For a non-caterpillar tree, fix a longest path `P = v0,...,vd` and a
//! vertex `vj` on it with a non-leaf neighbour `u` off the path, oriented
//! so that `j >= d/2`. Every subtree hanging off `u` away from the path is
//! re-attached at `v_{j+1}`. The result has the same eccentric sequence
//! and strictly more leaves, so iterating terminates in a caterpillar.

use thiserror::Error;

use crate::tree::Tree;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransformError {
    #[error("tree is already a caterpillar")]
    AlreadyCaterpillar,
}

/// Record of one mate step, sufficient to reproduce and audit it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MateTrace {
    /// The longest path used, oriented so that `j >= d/2`.
    pub path: Vec<usize>,
    /// Position of the attachment vertex `vj` on `path`.
    pub j: usize,
    /// The off-path non-leaf neighbour of `vj` whose subtrees move.
    pub u: usize,
    /// Neighbours of `u` re-attached at `v_{j+1}`, in increasing order.
    pub moved: Vec<usize>,
    /// `U`: all vertices separated from the path by `u`.
    pub moved_vertices: Vec<usize>,
    /// `L`: the `vj`-side of the cut edge `vj v_{j+1}`, minus `U`.
    pub near_side: Vec<usize>,
    /// `R`: the `v_{j+1}`-side of the cut edge.
    pub far_side: Vec<usize>,
}

/// Vertices reachable from `start` without passing through `blocked`,
/// including `start` itself.
fn component_avoiding(t: &Tree, start: usize, blocked: usize) -> Vec<bool> {
    let mut seen = vec![false; t.order()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for w in t.neighbors(v) {
            if w != blocked && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

/// Applies one mate step. Deterministic: the candidate `(vj, u)` with the
/// largest oriented index `j` is chosen, ties broken by the smallest label
/// of `u`.
pub fn mate(t: &Tree) -> Result<(Tree, MateTrace), TransformError> {
    if t.is_caterpillar() {
        return Err(TransformError::AlreadyCaterpillar);
    }
    let mut path = t.longest_path();
    let d = path.len() - 1;
    let mut on_path = vec![false; t.order()];
    for &v in &path {
        on_path[v] = true;
    }
    // Candidates: (oriented index of vj, label of u, original index).
    let mut chosen: Option<(usize, usize, usize)> = None;
    for (j, &vj) in path.iter().enumerate() {
        for u in t.neighbors(vj) {
            if !on_path[u] && t.degree(u) > 1 {
                let oriented = j.max(d - j);
                let cand = (oriented, u, j);
                let better = match chosen {
                    None => true,
                    Some((bj, bu, _)) => oriented > bj || (oriented == bj && u < bu),
                };
                if better {
                    chosen = Some(cand);
                }
            }
        }
    }
    let (_, u, orig_j) = chosen.expect("a non-caterpillar has an off-path non-leaf neighbour");
    if 2 * orig_j < d {
        path.reverse();
    }
    let j = orig_j.max(d - orig_j);
    let vj = path[j];
    let vj1 = path[j + 1];
    debug_assert!(j + 1 < d, "off-path branches sit strictly inside the path");

    let u_comp = component_avoiding(t, u, vj);
    let vj_comp = component_avoiding(t, vj, vj1);
    let moved: Vec<usize> = t.neighbors(u).filter(|&z| z != vj).collect();
    let moved_vertices: Vec<usize> = (0..t.order()).filter(|&v| u_comp[v] && v != u).collect();
    let near_side: Vec<usize> = (0..t.order())
        .filter(|&v| vj_comp[v] && !u_comp[v])
        .collect();
    let far_side: Vec<usize> = (0..t.order()).filter(|&v| !vj_comp[v]).collect();

    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(t.order() - 1);
    for (a, b) in t.edges() {
        if (a == u && moved.contains(&b)) || (b == u && moved.contains(&a)) {
            continue;
        }
        edges.push((a, b));
    }
    for &z in &moved {
        edges.push((vj1, z));
    }
    let rewired = Tree::from_edge_list(t.order(), &edges).expect("rewiring preserves the tree");
    debug_assert!(rewired.leaves().len() > t.leaves().len());
    let trace = MateTrace {
        path,
        j,
        u,
        moved,
        moved_vertices,
        near_side,
        far_side,
    };
    Ok((rewired, trace))
}

/// Iterates [`mate`] until the tree is a caterpillar; returns the result
/// and the number of steps. Each step adds a leaf, so at most `n` steps.
pub fn caterpillarize(t: &Tree) -> (Tree, usize) {
    let mut current = t.clone();
    let mut steps = 0;
    loop {
        match mate(&current) {
            Ok((next, _)) => {
                current = next;
                steps += 1;
                assert!(steps <= t.order(), "mate failed to make progress");
            }
            Err(TransformError::AlreadyCaterpillar) => return (current, steps),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::EccSequence;
    use crate::testutil::{fig1_tree, path, spider};

    #[test]
    fn mate_rejects_caterpillars() {
        assert_eq!(mate(&fig1_tree()), Err(TransformError::AlreadyCaterpillar));
        assert_eq!(mate(&path(5)), Err(TransformError::AlreadyCaterpillar));
    }

    #[test]
    fn mate_on_small_spider() {
        let s = spider(&[2, 2, 2]);
        let before = EccSequence::of_tree(&s);
        let (t, trace) = mate(&s).unwrap();
        assert!(t.is_caterpillar());
        assert_eq!(EccSequence::of_tree(&t), before);
        assert_eq!(before, EccSequence::new(2, vec![3, 3]).unwrap());
        assert!(t.leaves().len() > s.leaves().len());
        assert!(trace.j * 2 >= trace.path.len() - 1);
    }

    #[test]
    fn mate_distance_deltas_are_plus_minus_two() {
        let s = spider(&[3, 3, 3]);
        let (t, trace) = mate(&s).unwrap();
        let before = s.all_pairs_distances();
        let after = t.all_pairs_distances();
        let in_moved = |v: usize| trace.moved_vertices.contains(&v);
        let in_far = |v: usize| trace.far_side.contains(&v);
        for a in 0..s.order() {
            for b in a + 1..s.order() {
                let delta = after[a][b] as i64 - before[a][b] as i64;
                let crossing_far = (in_moved(a) && in_far(b)) || (in_moved(b) && in_far(a));
                let crossing_u = (in_moved(a) && b == trace.u) || (in_moved(b) && a == trace.u);
                let expected = if crossing_far {
                    -2
                } else if crossing_u {
                    2
                } else {
                    0
                };
                assert_eq!(delta, expected, "pair ({a},{b})");
            }
        }
    }

    #[test]
    fn caterpillarize_examples() {
        let (c, steps) = caterpillarize(&spider(&[2, 2, 2]));
        assert!(c.is_caterpillar());
        assert_eq!(steps, 1);

        let (c, steps) = caterpillarize(&fig1_tree());
        assert_eq!(steps, 0);
        assert_eq!(c, fig1_tree());

        let s = spider(&[3, 3, 3]);
        let (c, steps) = caterpillarize(&s);
        assert!(c.is_caterpillar());
        assert!(steps <= 2, "expected at most 2 steps, took {steps}");
        assert_eq!(EccSequence::of_tree(&c), EccSequence::of_tree(&s));
    }
}
