//! Input negation, input permutation and output negation.

use super::{TruthTable, MAX_VARS};
use crate::error::{Error, Result};

/// An NP transform with optional output negation.
///
/// Applying `t` to `f` yields `g(X) = out ^ f(P(X ^ neg_mask))`, where bit `i`
/// of `P(Z)` is bit `perm[i]` of `Z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NpTransform {
    perm: Vec<u8>,
    neg_mask: u32,
    out_neg: bool,
}

impl NpTransform {
    pub fn new(perm: Vec<usize>, neg_mask: u32, out_neg: bool) -> Result<Self> {
        let vars = perm.len();
        if !(1..=MAX_VARS).contains(&vars) {
            return Err(Error::UnsupportedArity(vars));
        }
        let mut seen = 0u32;
        for &p in &perm {
            if p >= vars || seen >> p & 1 == 1 {
                return Err(Error::InvalidTransform(format!(
                    "{perm:?} is not a permutation of 0..{vars}"
                )));
            }
            seen |= 1 << p;
        }
        if neg_mask >> vars != 0 {
            return Err(Error::InvalidTransform(format!(
                "negation mask {neg_mask:#x} exceeds {vars} variables"
            )));
        }
        Ok(Self {
            perm: perm.into_iter().map(|p| p as u8).collect(),
            neg_mask,
            out_neg,
        })
    }

    pub fn identity(vars: usize) -> Result<Self> {
        Self::new((0..vars).collect(), 0, false)
    }

    /// Pure output negation.
    pub fn output_negation(vars: usize) -> Result<Self> {
        Self::new((0..vars).collect(), 0, true)
    }

    pub fn num_vars(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.perm.iter().map(|&p| p as usize)
    }

    pub fn neg_mask(&self) -> u32 {
        self.neg_mask
    }

    pub fn out_neg(&self) -> bool {
        self.out_neg
    }

    /// `P(z)`: bit `i` of the result is bit `perm[i]` of `z`.
    fn permute_word(&self, z: u32) -> u32 {
        self.perm
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &p)| acc | ((z >> p) & 1) << i)
    }

    /// `P^-1(z)`: bit `perm[i]` of the result is bit `i` of `z`.
    fn unpermute_word(&self, z: u32) -> u32 {
        self.perm
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &p)| acc | ((z >> i) & 1) << p)
    }

    /// The transform equivalent to applying `self` and then `next`.
    pub fn then(&self, next: &NpTransform) -> Result<Self> {
        if next.num_vars() != self.num_vars() {
            return Err(Error::UnsupportedArity(next.num_vars()));
        }
        let perm = self.perm.iter().map(|&p| next.perm[p as usize]).collect();
        Ok(Self {
            perm,
            neg_mask: next.neg_mask ^ next.unpermute_word(self.neg_mask),
            out_neg: self.out_neg ^ next.out_neg,
        })
    }

    pub fn inverse(&self) -> Self {
        let mut perm = vec![0u8; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            perm[p as usize] = i as u8;
        }
        Self {
            perm,
            neg_mask: self.permute_word(self.neg_mask),
            out_neg: self.out_neg,
        }
    }
}

impl TruthTable {
    /// Applies `t`; the transform must have the same variable count.
    pub fn apply(&self, t: &NpTransform) -> Result<TruthTable> {
        let vars = self.num_vars();
        if t.num_vars() != vars {
            return Err(Error::UnsupportedArity(t.num_vars()));
        }
        let mut out = TruthTable::zeros(vars)?;
        self.apply_into(t, &mut out.words);
        Ok(out)
    }

    /// Applies `t` to a table of at most six variables, returning the single
    /// result word. The caller guarantees matching arity.
    pub(crate) fn apply_to_word(&self, t: &NpTransform) -> u64 {
        debug_assert!(self.num_vars() <= 6 && t.num_vars() == self.num_vars());
        let mut out = [0u64];
        self.apply_into(t, &mut out);
        out[0]
    }

    fn apply_into(&self, t: &NpTransform, out: &mut [u64]) {
        // Walk the inputs in Gray-code order so that the permuted source word
        // changes by one image bit per step.
        let mut images = [0u32; MAX_VARS];
        for (b, image) in images.iter_mut().enumerate().take(t.num_vars()) {
            *image = t.permute_word(1 << b);
        }
        let mut src = t.permute_word(t.neg_mask);
        let flip = if t.out_neg { 1u64 } else { 0 };
        for k in 0..self.num_bits() {
            if k > 0 {
                src ^= images[k.trailing_zeros() as usize];
            }
            let x = k ^ (k >> 1);
            let value = (self.words[src as usize >> 6] >> (src & 63)) & 1 ^ flip;
            out[x >> 6] |= value << (x & 63);
        }
    }
}
