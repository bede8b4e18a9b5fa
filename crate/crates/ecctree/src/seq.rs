//! Eccentric sequences of trees: validity testing, the compact
//! `(r; m2,...,ml)` form, and the extremal caterpillar constructions.
//!
//! A nondecreasing sequence of positive integers is *tree eccentric* when
//! some tree realises it as its sorted list of vertex eccentricities. For
//! `n > 2` this holds iff (i) the smallest value `a1` satisfies either
//! `a1 = an/2` with `a2 != a1`, or `a1 = a2 = (an+1)/2` with `a3 != a2`,
//! and (ii) every value in `(a1, an]` occurs at least twice outside the
//! first position. The single edge, with sequence `(1, 1)`, is the one
//! valid sequence of length two.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::tree::{Tree, TreeError};

/// Why a sequence fails to be tree eccentric.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvalidReason {
    /// The radius/centre condition (i) fails.
    CenterCondition,
    /// Some value in `(a1, an]` is missing or occurs only once (ii).
    MultiplicityGap,
    NotSorted,
    TooShort,
}

impl fmt::Display for InvalidReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            InvalidReason::CenterCondition => "CenterCondition",
            InvalidReason::MultiplicityGap => "MultiplicityGap",
            InvalidReason::NotSorted => "NotSorted",
            InvalidReason::TooShort => "TooShort",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeqError {
    #[error("invalid sequence: {0}")]
    Invalid(InvalidReason),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    /// The sequence already has `m_j = 2` for every `j >= 3`.
    #[error("sequence is not reducible")]
    NotReducible,
    #[error(transparent)]
    Tree(#[from] TreeError),
}

/// A tree eccentric sequence in compact form: the radius `r` plus the
/// multiplicities `m2,...,ml` of the eccentricity values `r+1,...,r+l-1`.
/// The centre multiplicity `m1` is forced by the parity of the diameter
/// and is not stored, so invalid centre counts cannot be represented.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EccSequence {
    radius: u32,
    mults: Vec<u32>,
}

impl EccSequence {
    /// Builds a compact sequence, validating that every multiplicity is at
    /// least two and that the implied diameter lies in `{2r-1, 2r}`.
    pub fn new(radius: u32, mults: Vec<u32>) -> Result<Self, SeqError> {
        if radius == 0 {
            return Err(SeqError::Invalid(InvalidReason::CenterCondition));
        }
        if mults.iter().any(|&m| m < 2) {
            return Err(SeqError::Invalid(InvalidReason::MultiplicityGap));
        }
        let len = mults.len() as u32;
        if len != radius && len + 1 != radius {
            return Err(SeqError::Invalid(InvalidReason::CenterCondition));
        }
        Ok(EccSequence { radius, mults })
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn diameter(&self) -> u32 {
        self.radius + self.mults.len() as u32
    }

    /// Number of distinct eccentricity values, `l`.
    pub fn levels(&self) -> usize {
        self.mults.len() + 1
    }

    /// `m1`: one centre vertex for even diameter, two for odd.
    pub fn center_multiplicity(&self) -> u32 {
        if self.diameter().is_multiple_of(2) {
            1
        } else {
            2
        }
    }

    /// The multiplicities `m2,...,ml`.
    pub fn multiplicities(&self) -> &[u32] {
        &self.mults
    }

    /// Order of any tree realising this sequence.
    pub fn order(&self) -> usize {
        self.center_multiplicity() as usize + self.mults.iter().map(|&m| m as usize).sum::<usize>()
    }

    /// The full nondecreasing eccentricity list.
    pub fn to_sorted(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.order());
        for _ in 0..self.center_multiplicity() {
            out.push(self.radius);
        }
        for (i, &m) in self.mults.iter().enumerate() {
            for _ in 0..m {
                out.push(self.radius + 1 + i as u32);
            }
        }
        out
    }

    /// Tests whether a nondecreasing list of positive integers is a tree
    /// eccentric sequence, returning its compact form when it is.
    pub fn validate_sorted(seq: &[u32]) -> Result<Self, SeqError> {
        if seq.len() < 2 {
            return Err(SeqError::Invalid(InvalidReason::TooShort));
        }
        if seq.contains(&0) {
            // Eccentricities of a tree on two or more vertices are >= 1.
            return Err(SeqError::Invalid(InvalidReason::CenterCondition));
        }
        if seq.windows(2).any(|w| w[0] > w[1]) {
            return Err(SeqError::Invalid(InvalidReason::NotSorted));
        }
        let a1 = seq[0];
        let an = *seq.last().expect("nonempty");
        // Condition (i). For the length-2 sequence (1,1) the `a3` clause is
        // vacuous, which accepts exactly the single-edge tree.
        let even_center = 2 * a1 == an && seq[1] != a1;
        let odd_center = seq[1] == a1 && 2 * a1 == an + 1 && seq.get(2) != Some(&a1);
        if !even_center && !odd_center {
            return Err(SeqError::Invalid(InvalidReason::CenterCondition));
        }
        // Condition (ii): every value in (a1, an] occurs at least twice.
        // After (i) the first run has length m1 <= 2 and sits entirely in
        // the allowed positions, so plain run counting suffices.
        let mut mults = Vec::with_capacity((an - a1) as usize);
        let mut expected = a1 + 1;
        let mut i = if even_center { 1 } else { 2 };
        while i < seq.len() {
            let v = seq[i];
            let mut run = 0;
            while i < seq.len() && seq[i] == v {
                run += 1;
                i += 1;
            }
            if v != expected || run < 2 {
                return Err(SeqError::Invalid(InvalidReason::MultiplicityGap));
            }
            mults.push(run);
            expected += 1;
        }
        if expected != an + 1 {
            return Err(SeqError::Invalid(InvalidReason::MultiplicityGap));
        }
        EccSequence::new(a1, mults)
    }

    /// The eccentric sequence of a tree, in compact form.
    pub fn of_tree(t: &Tree) -> Self {
        let prof = t.ecc_profile();
        let sorted = prof.sorted();
        let radius = prof.radius;
        let mut mults = vec![0u32; (prof.diameter - radius) as usize];
        for &e in &sorted {
            if e > radius {
                mults[(e - radius - 1) as usize] += 1;
            }
        }
        let seq = EccSequence { radius, mults };
        debug_assert_eq!(EccSequence::validate_sorted(&sorted).as_ref(), Ok(&seq));
        seq
    }

    /// Builds the extremal caterpillar `T(r; m2,...,ml)`: the path
    /// `v0,...,v_{r+l-1}` with `m_j - 2` pendant vertices attached to
    /// `v_{l+1-j}` for each `j` in `2..=l`. Path vertices take labels
    /// `0..=d`; pendant labels continue in construction order.
    pub fn build_extremal(&self) -> Tree {
        let d = self.diameter() as usize;
        let l = self.levels();
        let n = self.order();
        let mut edges: Vec<(usize, usize)> = (0..d).map(|i| (i, i + 1)).collect();
        let mut next = d + 1;
        for (idx, &m) in self.mults.iter().enumerate() {
            let j = idx + 2;
            let attach = l + 1 - j;
            for _ in 0..m - 2 {
                edges.push((attach, next));
                next += 1;
            }
        }
        let t = Tree::from_edge_list(n, &edges).expect("extremal construction is a tree");
        debug_assert_eq!(&EccSequence::of_tree(&t), self);
        t
    }

    /// The reduction step towards `T_{d,n}`: with `i` the largest index in
    /// `3..=l` having `m_i > 2`, merge `m_i - 2` into `m_{i-1}` and set
    /// `m_i = 2`. Preserves order, radius and diameter.
    pub fn reduce(&self) -> Result<Self, SeqError> {
        let l = self.levels();
        let i = (3..=l)
            .rev()
            .find(|&i| self.mults[i - 2] > 2)
            .ok_or(SeqError::NotReducible)?;
        let mut mults = self.mults.clone();
        mults[i - 3] += mults[i - 2] - 2;
        mults[i - 2] = 2;
        let reduced = EccSequence {
            radius: self.radius,
            mults,
        };
        debug_assert_eq!(reduced.order(), self.order());
        Ok(reduced)
    }
}

impl fmt::Display for EccSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.radius)?;
        for (i, m) in self.mults.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// Builds `T_{d,n}`: the path of order `d + 1` with `n - d - 1` pendant
/// edges at a centre vertex (the lower-indexed one when `d` is odd).
/// Equals `T(ceil(d/2); n-d+1, 2, ..., 2)`.
pub fn build_tdn(n: usize, d: usize) -> Result<Tree, SeqError> {
    if d < 2 || d + 1 > n {
        return Err(SeqError::BadParameters(format!(
            "need 2 <= d <= n-1, got n={n}, d={d}"
        )));
    }
    let radius = (d as u32).div_ceil(2);
    let mut mults = vec![2u32; d / 2];
    mults[0] = (n - d + 1) as u32;
    Ok(EccSequence::new(radius, mults)?.build_extremal())
}

/// Two non-isomorphic trees with the same eccentric sequence and, for every
/// `k >= n + 1 - ceil(d/2)`, the same k-Steiner–Wiener index. Both attach
/// `n - d - 1` pendants to the path `v0,...,vd`; the second moves one
/// pendant across the relevant path edge.
pub fn counterexample_pair(n: usize, d: usize) -> Result<(Tree, Tree), SeqError> {
    if d < 3 || n < d + 3 {
        return Err(SeqError::BadParameters(format!(
            "need d >= 3 and n >= d+3, got n={n}, d={d}"
        )));
    }
    let (lo, hi) = if d % 2 == 1 {
        ((d - 1) / 2, d.div_ceil(2))
    } else {
        ((d - 2) / 2, (d + 2) / 2)
    };
    let path_edges: Vec<(usize, usize)> = (0..d).map(|i| (i, i + 1)).collect();
    let mut e1 = path_edges.clone();
    for p in d + 1..n {
        e1.push((lo, p));
    }
    let mut e2 = path_edges;
    for p in d + 1..n - 1 {
        e2.push((lo, p));
    }
    e2.push((hi, n - 1));
    let t1 = Tree::from_edge_list(n, &e1)?;
    let t2 = Tree::from_edge_list(n, &e2)?;
    Ok((t1, t2))
}

/// A sequence as given on the command line: either the full sorted form
/// `2,2,3,3,3` or the compact form `2;3` (radius, then `m2,...,ml`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceSpec {
    Full(Vec<u32>),
    Compact { radius: u32, mults: Vec<u32> },
}

/// A syntactically malformed sequence string (as opposed to a well-formed
/// sequence that fails the eccentricity conditions).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("malformed sequence: {0}")]
pub struct SeqParseError(pub String);

impl FromStr for SequenceSpec {
    type Err = SeqParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(SeqParseError("empty string".into()));
        }
        let parse_list = |part: &str| -> Result<Vec<u32>, SeqParseError> {
            if part.trim().is_empty() {
                return Ok(Vec::new());
            }
            part.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<u32>()
                        .map_err(|_| SeqParseError(format!("bad number {tok:?}")))
                })
                .collect()
        };
        if let Some((head, tail)) = s.split_once(';') {
            let radius = head
                .trim()
                .parse::<u32>()
                .map_err(|_| SeqParseError(format!("bad radius {head:?}")))?;
            Ok(SequenceSpec::Compact {
                radius,
                mults: parse_list(tail)?,
            })
        } else {
            let values = parse_list(s)?;
            if values.is_empty() {
                return Err(SeqParseError("empty sequence".into()));
            }
            Ok(SequenceSpec::Full(values))
        }
    }
}

impl SequenceSpec {
    /// Resolves the parsed spec into a validated eccentric sequence.
    pub fn validate(&self) -> Result<EccSequence, SeqError> {
        match self {
            SequenceSpec::Full(values) => EccSequence::validate_sorted(values),
            SequenceSpec::Compact { radius, mults } => EccSequence::new(*radius, mults.clone()),
        }
    }
}
