//! Signature-based NPN classification.
//!
//! Each function is mapped to its [`MixedSignatureVector`] and functions are
//! grouped by exact key equality. Equal keys are necessary for NPN
//! equivalence, so every signature class is a union of exact NPN classes.

use std::collections::HashMap;
use std::hash::Hash;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::signatures::{build_msv, SignatureSelection};
use crate::truthtable::TruthTable;

/// Keys are computed in parallel over chunks of this many functions, then
/// grouped sequentially in input order.
const CHUNK: usize = 1 << 14;

/// A partition of a set of truth tables into numbered classes.
///
/// Class ids are dense, starting at 0, and assigned in order of first
/// appearance in the input.
#[derive(Clone, Debug)]
pub struct Classification {
    num_vars: usize,
    selection: Option<SignatureSelection>,
    input_count: usize,
    functions: Vec<TruthTable>,
    class_ids: Vec<usize>,
    classes: Vec<Vec<usize>>,
    index: HashMap<TruthTable, usize>,
}

impl Classification {
    /// Deduplicates `functions` and groups them by `key`.
    pub(crate) fn group_by<K, F>(
        functions: &[TruthTable],
        selection: Option<SignatureSelection>,
        key: F,
    ) -> Result<Self>
    where
        K: Hash + Eq + Send,
        F: Fn(&TruthTable) -> Result<K> + Sync,
    {
        let first = functions.first().ok_or(Error::EmptyInput)?;
        let num_vars = first.num_vars();
        if let Some(bad) = functions.iter().find(|f| f.num_vars() != num_vars) {
            return Err(Error::UnsupportedArity(bad.num_vars()));
        }

        let mut index = HashMap::with_capacity(functions.len());
        let mut unique = Vec::with_capacity(functions.len());
        for f in functions {
            if !index.contains_key(f) {
                index.insert(f.clone(), unique.len());
                unique.push(f.clone());
            }
        }

        let mut by_key: HashMap<K, usize> = HashMap::new();
        let mut class_ids = Vec::with_capacity(unique.len());
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (c, chunk) in unique.chunks(CHUNK).enumerate() {
            let keys = chunk.par_iter().map(&key).collect::<Result<Vec<K>>>()?;
            for (i, k) in keys.into_iter().enumerate() {
                let next = classes.len();
                let id = *by_key.entry(k).or_insert(next);
                if id == next {
                    classes.push(Vec::new());
                }
                classes[id].push(c * CHUNK + i);
                class_ids.push(id);
            }
        }

        Ok(Self {
            num_vars,
            selection,
            input_count: functions.len(),
            functions: unique,
            class_ids,
            classes,
            index,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// The signature families used, or `None` for an exact classification.
    pub fn selection(&self) -> Option<SignatureSelection> {
        self.selection
    }

    /// Number of input functions before deduplication.
    pub fn input_count(&self) -> usize {
        self.input_count
    }

    pub fn unique_count(&self) -> usize {
        self.functions.len()
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Distinct input functions in order of first appearance.
    pub fn functions(&self) -> &[TruthTable] {
        &self.functions
    }

    /// Class of a function, if it was part of the input.
    pub fn class_of(&self, f: &TruthTable) -> Option<usize> {
        self.index.get(f).map(|&i| self.class_ids[i])
    }

    /// Class of every distinct function, parallel to [`Self::functions`].
    pub fn class_ids(&self) -> &[usize] {
        &self.class_ids
    }

    pub fn members(&self, class: usize) -> impl Iterator<Item = &TruthTable> {
        self.classes[class].iter().map(|&i| &self.functions[i])
    }

    /// One representative (the first member) per class.
    pub fn representatives(&self) -> Vec<TruthTable> {
        self.classes
            .iter()
            .map(|c| self.functions[c[0]].clone())
            .collect()
    }

    /// True iff every class of `self` lies inside a single class of `other`.
    /// Both must cover the same function set.
    pub fn refines(&self, other: &Classification) -> Result<bool> {
        check_same_functions(self, other)?;
        Ok(self.classes.iter().all(|members| {
            let target = other.class_of(&self.functions[members[0]]);
            members
                .iter()
                .all(|&i| other.class_of(&self.functions[i]) == target)
        }))
    }
}

/// Classifies `functions` by their mixed signature vectors under `sel`.
///
/// Duplicates are removed first. All functions must share one arity.
pub fn classify(functions: &[TruthTable], sel: SignatureSelection) -> Result<Classification> {
    Classification::group_by(functions, Some(sel), |f| Ok(build_msv(f, sel)?.key()))
}

/// Signature classification measured against an exact classification.
#[derive(Clone, Debug, PartialEq)]
pub struct ComparisonReport {
    pub sig_class_count: usize,
    pub exact_class_count: usize,
    /// `sig_class_count / exact_class_count`.
    pub accuracy: f64,
    /// Pairs of exactly-equivalent functions that were put in different
    /// signature classes. For every exact class split across `k` signature
    /// classes, `k - 1` witness pairs are listed, each pairing the first member
    /// of the class with the first member of another signature class.
    pub violations: Vec<(TruthTable, TruthTable)>,
}

impl ComparisonReport {
    pub fn is_sound(&self) -> bool {
        self.violations.is_empty()
    }
}

fn check_same_functions(a: &Classification, b: &Classification) -> Result<()> {
    if a.unique_count() != b.unique_count()
        || a.num_vars != b.num_vars
        || a.functions.iter().any(|f| !b.index.contains_key(f))
    {
        return Err(Error::InputMismatch);
    }
    Ok(())
}

/// Compares a signature classification against an exact one over the same
/// function set.
pub fn compare(sig: &Classification, exact: &Classification) -> Result<ComparisonReport> {
    check_same_functions(sig, exact)?;
    let mut violations = Vec::new();
    for members in &exact.classes {
        let first = &exact.functions[members[0]];
        let mut seen = vec![sig.class_of(first).expect("same function set")];
        for &i in &members[1..] {
            let f = &exact.functions[i];
            let id = sig.class_of(f).expect("same function set");
            if !seen.contains(&id) {
                seen.push(id);
                violations.push((first.clone(), f.clone()));
            }
        }
    }
    Ok(ComparisonReport {
        sig_class_count: sig.num_classes(),
        exact_class_count: exact.num_classes(),
        accuracy: sig.num_classes() as f64 / exact.num_classes() as f64,
        violations,
    })
}
