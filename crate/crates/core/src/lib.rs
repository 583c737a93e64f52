//! NPN classification of Boolean functions from signature vectors.
//!
//! Functions are given as [`TruthTable`]s. The [`signatures`] module computes
//! ordered vectors of cofactor counts (face characteristics), variable
//! influences (point-face characteristics) and local sensitivities (point
//! characteristics). Their polarity-normalized concatenation, the
//! [`MixedSignatureVector`], is invariant under input negation, input
//! permutation and output negation, so [`classify`] can bucket functions by
//! key equality without enumerating transforms. The [`oracle`] module provides
//! an exhaustive exact canonicalizer for small arities.

pub mod classifier;
pub mod error;
pub mod oracle;
pub mod signatures;
pub mod truthtable;

pub use classifier::{classify, compare, Classification, ComparisonReport};
pub use error::{Error, Result};
pub use oracle::{
    all_functions, enumerate_transforms, exact_classify, npn_canonical, CanonicalForm,
};
pub use signatures::{
    build_msv, DistanceGrid, MixedSignatureVector, SensitivityMaxima, SignatureFamily,
    SignatureSelection, SignatureVectors,
};
pub use truthtable::{NpTransform, TruthTable, MAX_VARS};
