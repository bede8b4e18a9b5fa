//! Distance-based topological indices of trees with a given eccentric
//! sequence.
//!
//! The crate provides:
//!
//! * [`tree`] — a validated tree type with metric computations
//!   (distances, eccentricities, longest paths, caterpillar tests) and
//!   AHU canonical forms for isomorphism testing;
//! * [`seq`] — eccentric sequences: the validity test for nondecreasing
//!   integer sequences, conversion to and from the compact
//!   `(r; m2,...,ml)` form, and the extremal caterpillar constructions
//!   `T(r; m2,...,ml)` and `T_{d,n}`;
//! * [`indices`] — Wiener-type indices `W(T;g)` for monotone weight
//!   functions (Wiener, hyper-Wiener, Harary, generalised Wiener,
//!   reciprocal complementary Wiener) in exact rational arithmetic,
//!   Steiner distances and the k-Steiner–Wiener index via both subset
//!   enumeration and the edge-split formula;
//! * [`transform`] — the eccentricity-preserving mate rewiring and its
//!   iteration to a caterpillar;
//! * [`enumerate`] — isomorphism-free generation of all trees of a given
//!   order by canonical level sequences, plus labelled trees via Prüfer
//!   decoding as an independent oracle;
//! * [`verify`] — an engine that sweeps all trees of a given order,
//!   groups them by eccentric sequence (or diameter) and checks that the
//!   extremal tree for each index is the expected construction.

pub mod enumerate;
pub mod indices;
pub mod seq;
pub mod transform;
pub mod tree;
pub mod verify;

pub use enumerate::{free_trees, free_trees_capped, labeled_trees, random_labeled_tree, EnumError};
pub use indices::{
    binomial, binomial_split_max, steiner_distance, sw_k_bruteforce, sw_k_formula, wiener_type,
    IndexError, IndexSpec, IndexValue, Monotonicity, WeightFunction,
};
pub use seq::{build_tdn, counterexample_pair, EccSequence, InvalidReason, SeqError, SequenceSpec};
pub use transform::{caterpillarize, mate, MateTrace, TransformError};
pub use tree::{
    is_isomorphic, parse_edge_list, CanonicalForm, EccProfile, EdgeListError, Tree, TreeError,
};
pub use verify::{
    classify_by_sequence, verify_by_spec, verify_diameter, verify_steiner, verify_wiener_type,
    ClassFlags, ClassReport, VerifyError, VerifyReport, DEFAULT_SWEEP_CAP,
};
