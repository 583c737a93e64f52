//! Exact NPN canonicalization by exhaustive transform enumeration.
//!
//! The canonical representative of a function is the smallest table, read as
//! an unsigned integer, over all `n! * 2^(n+1)` NPN transforms of it. There is
//! no pruning: every transform is applied and compared. This is slow by
//! construction and only meant as ground truth for small arities.

use crate::classifier::Classification;
use crate::error::{Error, Result};
use crate::truthtable::{NpTransform, TruthTable};

/// Largest arity the oracle accepts (`6! * 2^7 = 92160` transforms).
pub const ORACLE_MAX_VARS: usize = 6;

fn check_arity(vars: usize) -> Result<()> {
    if vars > ORACLE_MAX_VARS {
        return Err(Error::OracleArityLimit {
            vars,
            max: ORACLE_MAX_VARS,
        });
    }
    if vars == 0 {
        return Err(Error::UnsupportedArity(0));
    }
    Ok(())
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        // Next lexicographic permutation.
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| current[i] < current[i + 1])
        else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
}

/// Every NPN transform on `n` variables exactly once: permutations in
/// lexicographic order, then input-negation masks, then output negation.
pub fn enumerate_transforms(n: usize) -> Result<Vec<NpTransform>> {
    check_arity(n)?;
    let mut out = Vec::with_capacity((1..=n).product::<usize>() << (n + 1));
    for perm in permutations(n) {
        for mask in 0..1u32 << n {
            for out_neg in [false, true] {
                out.push(NpTransform::new(perm.clone(), mask, out_neg)?);
            }
        }
    }
    Ok(out)
}

/// A canonical representative and a transform reaching it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub representative: TruthTable,
    /// The first transform (in enumeration order) with
    /// `input.apply(transform) == representative`.
    pub transform: NpTransform,
}

fn canonical_with(f: &TruthTable, transforms: &[NpTransform]) -> Result<CanonicalForm> {
    let vars = f.num_vars();
    check_arity(vars)?;
    let mut best = u64::MAX;
    let mut best_t = &transforms[0];
    for t in transforms {
        if t.num_vars() != vars {
            return Err(Error::UnsupportedArity(t.num_vars()));
        }
        let g = f.apply_to_word(t);
        if g < best {
            best = g;
            best_t = t;
        }
    }
    Ok(CanonicalForm {
        representative: TruthTable::from_words(vars, vec![best])?,
        transform: best_t.clone(),
    })
}

/// Canonical form of `f`.
pub fn npn_canonical(f: &TruthTable) -> Result<CanonicalForm> {
    let transforms = enumerate_transforms(f.num_vars())?;
    canonical_with(f, &transforms)
}

/// Partitions `functions` into exact NPN classes.
pub fn exact_classify(functions: &[TruthTable]) -> Result<Classification> {
    let vars = functions.first().ok_or(Error::EmptyInput)?.num_vars();
    check_arity(vars)?;
    let transforms = enumerate_transforms(vars)?;
    Classification::group_by(functions, None, |f| {
        Ok(canonical_with(f, &transforms)?.representative)
    })
}

/// Every truth table on `n` variables, in increasing integer order. Only
/// practical for `n <= 4`.
pub fn all_functions(n: usize) -> Result<Vec<TruthTable>> {
    if n > 4 {
        return Err(Error::UnsupportedArity(n));
    }
    (0..1u64 << (1 << n))
        .map(|v| TruthTable::from_words(n, vec![v]))
        .collect()
}
