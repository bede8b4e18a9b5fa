//! Isomorphism-free generation of trees.
//!
//! Free trees are produced by walking all canonical rooted level sequences
//! with the classic successor rule (start at the path, end at the star,
//! each step truncates at the last entry above 2 and tiles the pattern
//! from its parent), keeping exactly those rooted trees whose root is the
//! canonical choice of centre for the underlying free tree. Every free
//! tree then appears exactly once, in a deterministic order.
//!
//! Labelled trees decoded from Prüfer words serve as a small-order oracle:
//! deduplicating them by canonical form must reproduce the free-tree
//! stream exactly.

use rand::Rng;
use thiserror::Error;

use crate::tree::Tree;

/// Default cap on the order for free-tree enumeration.
pub const DEFAULT_MAX_N: usize = 18;

/// Cap on the order for exhaustive labelled-tree (Prüfer) enumeration;
/// there are `n^(n-2)` words, so this grows fast.
pub const LABELED_MAX_N: usize = 9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error("order {requested} is outside the supported range 2..={cap}")]
    SizeLimit { requested: usize, cap: usize },
}

/// Streams one representative per isomorphism class of trees on `n`
/// vertices, up to the default cap.
pub fn free_trees(n: usize) -> Result<FreeTrees, EnumError> {
    free_trees_capped(n, DEFAULT_MAX_N)
}

/// [`free_trees`] with an explicit cap.
pub fn free_trees_capped(n: usize, cap: usize) -> Result<FreeTrees, EnumError> {
    if n < 2 || n > cap {
        return Err(EnumError::SizeLimit { requested: n, cap });
    }
    Ok(FreeTrees {
        levels: Some((1..=n as u32).collect()),
    })
}

/// Iterator over free trees; see [`free_trees`].
pub struct FreeTrees {
    /// The next rooted level sequence to examine, or `None` when finished.
    levels: Option<Vec<u32>>,
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        loop {
            let seq = self.levels.take()?;
            self.levels = successor(&seq);
            let tree = tree_from_levels(&seq);
            if root_is_canonical_center(&tree, &seq) {
                return Some(tree);
            }
        }
    }
}

/// The next canonical rooted level sequence after `seq`, or `None` when
/// `seq` is the star `[1, 2, 2, ..., 2]`.
fn successor(seq: &[u32]) -> Option<Vec<u32>> {
    let n = seq.len();
    let p = (0..n).rev().find(|&i| seq[i] > 2)?;
    let q = (0..p)
        .rev()
        .find(|&i| seq[i] == seq[p] - 1)
        .expect("every non-root level has a parent level to its left");
    let mut next = seq[..p].to_vec();
    for i in p..n {
        let copied = next[i - (p - q)];
        next.push(copied);
    }
    Some(next)
}

/// Builds the tree encoded by a level sequence: vertex `i` is the `i`-th
/// vertex in preorder, attached to the most recent vertex one level up.
fn tree_from_levels(seq: &[u32]) -> Tree {
    let n = seq.len();
    let mut last_at_level = vec![usize::MAX; n + 2];
    last_at_level[seq[0] as usize] = 0;
    let mut edges = Vec::with_capacity(n - 1);
    for (i, &lev) in seq.iter().enumerate().skip(1) {
        let parent = last_at_level[lev as usize - 1];
        edges.push((parent, i));
        last_at_level[lev as usize] = i;
    }
    Tree::from_edge_list(n, &edges).expect("level sequences encode trees")
}

/// Whether vertex 0 (the root of the generated rooted tree) is the
/// canonical rooting of the underlying free tree: it must be a centre
/// vertex, and for bicentral trees its canonical level sequence must not
/// lose to the one rooted at the other centre.
fn root_is_canonical_center(tree: &Tree, seq: &[u32]) -> bool {
    let prof = tree.ecc_profile();
    match *prof.center.as_slice() {
        [c] => c == 0,
        [c1, c2] => {
            if c1 != 0 && c2 != 0 {
                return false;
            }
            let other = if c1 == 0 { c2 } else { c1 };
            debug_assert_eq!(canonical_level_seq(tree, 0), seq);
            seq >= canonical_level_seq(tree, other).as_slice()
        }
        _ => unreachable!("a tree has one or two centre vertices"),
    }
}

/// The canonical (lexicographically maximal) level sequence of `tree`
/// rooted at `root`: children blocks are concatenated in decreasing order.
fn canonical_level_seq(tree: &Tree, root: usize) -> Vec<u32> {
    let n = tree.order();
    let (depth, parent) = tree.bfs_with_parents(root);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by_key(|&v| depth[v]);
    let mut seqs: Vec<Option<Vec<u32>>> = vec![None; n];
    for &v in order.iter().rev() {
        let mut children: Vec<Vec<u32>> = tree
            .neighbors(v)
            .filter(|&w| w != root && parent[w] == v)
            .map(|w| seqs[w].take().expect("children before parents"))
            .collect();
        children.sort_unstable();
        children.reverse();
        let mut s = Vec::with_capacity(1 + children.iter().map(Vec::len).sum::<usize>());
        s.push(depth[v] + 1);
        for c in children {
            s.extend(c);
        }
        seqs[v] = Some(s);
    }
    seqs[root].take().expect("root sequence")
}

/// Streams all `n^(n-2)` labelled trees on `n` vertices via Prüfer words.
pub fn labeled_trees(n: usize) -> Result<LabeledTrees, EnumError> {
    if !(2..=LABELED_MAX_N).contains(&n) {
        return Err(EnumError::SizeLimit {
            requested: n,
            cap: LABELED_MAX_N,
        });
    }
    Ok(LabeledTrees {
        n,
        word: Some(vec![0; n.saturating_sub(2)]),
    })
}

/// Iterator over labelled trees; see [`labeled_trees`].
pub struct LabeledTrees {
    n: usize,
    word: Option<Vec<usize>>,
}

impl Iterator for LabeledTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        let word = self.word.take()?;
        let tree = prufer_decode(&word, self.n);
        // Odometer step over words in 0..n per digit.
        let mut next = word;
        for digit in next.iter_mut().rev() {
            if *digit + 1 < self.n {
                *digit += 1;
                self.word = Some(next);
                return Some(tree);
            }
            *digit = 0;
        }
        Some(tree)
    }
}

/// Decodes a Prüfer word of length `n - 2` into the labelled tree on
/// `0..n`.
pub fn prufer_decode(word: &[usize], n: usize) -> Tree {
    assert_eq!(word.len(), n - 2, "Prüfer word length must be n - 2");
    let mut degree = vec![1u32; n];
    for &v in word {
        degree[v] += 1;
    }
    let mut leaves = std::collections::BinaryHeap::new();
    for (v, &d) in degree.iter().enumerate() {
        if d == 1 {
            leaves.push(std::cmp::Reverse(v));
        }
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in word {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("a leaf is always available");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(std::cmp::Reverse(v));
        }
    }
    let std::cmp::Reverse(a) = leaves.pop().expect("two vertices remain");
    let std::cmp::Reverse(b) = leaves.pop().expect("two vertices remain");
    edges.push((a, b));
    Tree::from_edge_list(n, &edges).expect("Prüfer decoding yields a tree")
}

/// A uniformly random labelled tree on `n >= 2` vertices.
pub fn random_labeled_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Tree {
    assert!(n >= 2, "trees need at least two vertices");
    let word: Vec<usize> = (0..n.saturating_sub(2))
        .map(|_| rng.gen_range(0..n))
        .collect();
    prufer_decode(&word, n)
}
