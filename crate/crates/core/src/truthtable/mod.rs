//! Bit-parallel truth tables.
//!
//! A [`TruthTable`] over `n` variables stores the `2^n` outputs of a Boolean
//! function packed into 64-bit words. Bit `X` of the table is `f(X)`, where the
//! input word is read little-endian: variable 0 is bit 0 of `X`, variable 1
//! is bit 1, and so on. Variables are 0-based throughout the crate, so the
//! conventional `x1` is variable 0.
//!
//! Tables with fewer than six variables occupy the low `2^n` bits of a single
//! word; the unused high bits are always zero.

mod transform;

pub use transform::NpTransform;

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported variable count.
pub const MAX_VARS: usize = 16;

/// `VAR_MASKS[v]` has bit `X` set iff bit `v` of `X` is one.
pub(crate) const VAR_MASKS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

#[inline]
pub(crate) fn word_count(vars: usize) -> usize {
    if vars <= 6 {
        1
    } else {
        1 << (vars - 6)
    }
}

#[inline]
pub(crate) fn tail_mask(vars: usize) -> u64 {
    if vars >= 6 {
        !0
    } else {
        (1u64 << (1u32 << vars)) - 1
    }
}

fn check_vars(vars: usize) -> Result<()> {
    if (1..=MAX_VARS).contains(&vars) {
        Ok(())
    } else {
        Err(Error::UnsupportedArity(vars))
    }
}

/// Immutable truth table of an `n`-variable Boolean function, `1 <= n <= 16`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    vars: u8,
    words: Box<[u64]>,
}

impl TruthTable {
    /// The constant-0 function.
    pub fn zeros(vars: usize) -> Result<Self> {
        check_vars(vars)?;
        Ok(Self {
            vars: vars as u8,
            words: vec![0; word_count(vars)].into_boxed_slice(),
        })
    }

    /// The constant-1 function.
    pub fn ones(vars: usize) -> Result<Self> {
        Ok(Self::zeros(vars)?.negate_output())
    }

    /// Builds a table from packed words, least significant word first.
    /// Bits above `2^n` are discarded.
    pub fn from_words(vars: usize, words: impl Into<Vec<u64>>) -> Result<Self> {
        check_vars(vars)?;
        let mut words = words.into();
        let expected = word_count(vars);
        if words.len() != expected {
            return Err(Error::InvalidLength {
                expected: expected * 16,
                found: words.len() * 16,
            });
        }
        words[0] &= tail_mask(vars);
        Ok(Self {
            vars: vars as u8,
            words: words.into_boxed_slice(),
        })
    }

    /// Builds a table by evaluating `f` on every input word `0..2^n`.
    pub fn from_fn(vars: usize, mut f: impl FnMut(usize) -> bool) -> Result<Self> {
        let mut table = Self::zeros(vars)?;
        for x in 0..table.num_bits() {
            if f(x) {
                table.words[x >> 6] |= 1 << (x & 63);
            }
        }
        Ok(table)
    }

    /// The projection `f(X) = x_var`.
    pub fn projection(vars: usize, var: usize) -> Result<Self> {
        check_vars(vars)?;
        if var >= vars {
            return Err(Error::InvalidVariable { var, vars });
        }
        Self::from_fn(vars, |x| (x >> var) & 1 == 1)
    }

    /// Parses a hex string, most significant digit first (bit `2^n - 1` is the
    /// high bit of the leftmost digit). An optional `0x` prefix is accepted and
    /// digits are case-insensitive. Tables with one or two variables use a
    /// single digit whose unused high bits must be zero.
    pub fn from_hex(hex: &str, vars: usize) -> Result<Self> {
        check_vars(vars)?;
        let digits = hex
            .strip_prefix("0x")
            .or_else(|| hex.strip_prefix("0X"))
            .unwrap_or(hex);
        let expected = hex_digits(vars);
        let found = digits.chars().count();
        if found != expected {
            return Err(Error::InvalidLength { expected, found });
        }
        let mut table = Self::zeros(vars)?;
        for (k, c) in digits.chars().rev().enumerate() {
            let d = c.to_digit(16).ok_or(Error::InvalidDigit(c))? as u64;
            table.words[k / 16] |= d << ((k % 16) * 4);
        }
        if table.words[0] & !tail_mask(vars) != 0 {
            return Err(Error::InvalidDigit(digits.chars().next().unwrap_or('?')));
        }
        Ok(table)
    }

    /// Uppercase hex rendering, the inverse of [`TruthTable::from_hex`].
    pub fn to_hex(&self) -> String {
        const DIGITS: &[u8; 16] = b"0123456789ABCDEF";
        let count = hex_digits(self.num_vars());
        (0..count)
            .rev()
            .map(|k| {
                let d = (self.words[k / 16] >> ((k % 16) * 4)) & 0xF;
                DIGITS[d as usize] as char
            })
            .collect()
    }

    #[inline]
    pub fn num_vars(&self) -> usize {
        self.vars as usize
    }

    /// Number of rows, `2^n`.
    #[inline]
    pub fn num_bits(&self) -> usize {
        1 << self.vars
    }

    /// Packed words, least significant first.
    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// `f(word)`.
    pub fn evaluate(&self, word: usize) -> Result<bool> {
        if word >= self.num_bits() {
            return Err(Error::InvalidWord {
                word,
                vars: self.num_vars(),
            });
        }
        Ok(self.bit(word))
    }

    /// `f(word)` without range checking beyond the slice bound.
    #[inline]
    pub fn bit(&self, word: usize) -> bool {
        (self.words[word >> 6] >> (word & 63)) & 1 == 1
    }

    /// `|f|`, the number of input words mapped to one.
    pub fn satisfy_count(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    /// True iff `|f| = 2^(n-1)`.
    pub fn is_balanced(&self) -> bool {
        self.satisfy_count() as usize == self.num_bits() / 2
    }

    /// Complements every output bit.
    pub fn negate_output(&self) -> Self {
        let mut words = self.words.clone();
        for w in words.iter_mut() {
            *w = !*w;
        }
        words[0] &= tail_mask(self.num_vars());
        Self {
            vars: self.vars,
            words,
        }
    }

    /// Satisfy count of the cofactor fixing each `(variable, value)` pair of
    /// `assignment`. An empty assignment yields `|f|`.
    pub fn cofactor_count(&self, assignment: &[(usize, bool)]) -> Result<u32> {
        let vars = self.num_vars();
        let mut ones = 0u32;
        let mut zeros = 0u32;
        for &(var, value) in assignment {
            if var >= vars {
                return Err(Error::InvalidVariable { var, vars });
            }
            let bit = 1u32 << var;
            if (ones | zeros) & bit != 0 {
                return Err(Error::InvalidAssignment(var));
            }
            if value {
                ones |= bit;
            } else {
                zeros |= bit;
            }
        }
        Ok(self.masked_count(ones, zeros))
    }

    /// Counts the one-bits at words `X` with `X & ones == ones` and
    /// `X & zeros == 0`. Both masks must be disjoint and within range.
    pub(crate) fn masked_count(&self, ones: u32, zeros: u32) -> u32 {
        let mut mask = tail_mask(self.num_vars());
        for (v, &m) in VAR_MASKS.iter().enumerate() {
            if ones >> v & 1 == 1 {
                mask &= m;
            }
            if zeros >> v & 1 == 1 {
                mask &= !m;
            }
        }
        let ones_hi = ones & !0x3F;
        let zeros_hi = zeros & !0x3F;
        if ones_hi == 0 && zeros_hi == 0 {
            return self.words.iter().map(|w| (w & mask).count_ones()).sum();
        }
        self.words
            .iter()
            .enumerate()
            .filter(|&(k, _)| {
                let hi = (k as u32) << 6;
                hi & ones_hi == ones_hi && hi & zeros_hi == 0
            })
            .map(|(_, w)| (w & mask).count_ones())
            .sum()
    }

    /// Boolean difference with respect to `var`: bit `X` is set iff
    /// `f(X) != f(X ^ (1 << var))`, i.e. iff `f` is sensitive to `var` at `X`.
    pub fn diff_vector(&self, var: usize) -> Result<Self> {
        let vars = self.num_vars();
        if var >= vars {
            return Err(Error::InvalidVariable { var, vars });
        }
        Ok(self.diff_vector_unchecked(var))
    }

    pub(crate) fn diff_vector_unchecked(&self, var: usize) -> Self {
        let mut words = self.words.clone();
        if var < 6 {
            let shift = 1u32 << var;
            let hi = VAR_MASKS[var];
            for w in words.iter_mut() {
                let swapped = ((*w & hi) >> shift) | ((*w & !hi) << shift);
                *w ^= swapped;
            }
            words[0] &= tail_mask(self.num_vars());
        } else {
            let stride = 1usize << (var - 6);
            for (k, w) in words.iter_mut().enumerate() {
                *w ^= self.words[k ^ stride];
            }
        }
        Self {
            vars: self.vars,
            words,
        }
    }
}

fn hex_digits(vars: usize) -> usize {
    ((1usize << vars) / 4).max(1)
}

impl std::ops::Not for &TruthTable {
    type Output = TruthTable;

    fn not(self) -> TruthTable {
        self.negate_output()
    }
}

/// Orders by variable count, then by the table read as an unsigned integer.
impl Ord for TruthTable {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vars
            .cmp(&other.vars)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for TruthTable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthTable(n={}, {})", self.vars, self.to_hex())
    }
}
