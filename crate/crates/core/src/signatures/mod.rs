//! Ordered signature vectors of Boolean functions.
//!
//! Every vector here is a sorted multiset (or a histogram grid built from
//! one), which makes it invariant under input permutation and input negation:
//!
//! * `ocv(f, l)`: satisfy counts of all cofactors fixing `l` variables.
//! * `oiv(f)`: per-variable influence, counted as the number of sensitive
//!   input pairs (half the popcount of the Boolean difference).
//! * `osv(f)`, `osv0(f)`, `osv1(f)`: local sensitivities over all words, the
//!   0-words and the 1-words.
//! * `osdv(f)`, `osdv0(f)`, `osdv1(f)`: for each sensitivity `s` and Hamming
//!   distance `d`, the number of unordered word pairs that both have
//!   sensitivity `s` and lie at distance `d`.
//!
//! [`build_msv`] concatenates a selection of these families into the key used
//! by the classifier, after normalizing output polarity.

mod msv;
mod profile;

pub use msv::{build_msv, MixedSignatureVector, MsvKey, SignatureFamily, SignatureSelection};

use crate::error::{Error, Result};
use crate::truthtable::TruthTable;
use profile::SensitivityProfile;

/// An `(n + 1) x n` grid of pair counts. Row `s` is a sensitivity value in
/// `0..=n`, column `d - 1` a Hamming distance `d` in `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DistanceGrid {
    vars: usize,
    cells: Vec<u32>,
}

impl DistanceGrid {
    pub(crate) fn zeros(vars: usize) -> Self {
        Self {
            vars,
            cells: vec![0; (vars + 1) * vars],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.vars
    }

    /// Number of pairs with sensitivity `sens` at distance `dist`.
    pub fn get(&self, sens: usize, dist: usize) -> u32 {
        assert!(sens <= self.vars && (1..=self.vars).contains(&dist));
        self.cells[sens * self.vars + dist - 1]
    }

    pub fn row(&self, sens: usize) -> &[u32] {
        &self.cells[sens * self.vars..(sens + 1) * self.vars]
    }

    pub(crate) fn row_mut(&mut self, sens: usize) -> &mut [u32] {
        &mut self.cells[sens * self.vars..(sens + 1) * self.vars]
    }

    /// Row-major cells.
    pub fn as_slice(&self) -> &[u32] {
        &self.cells
    }
}

/// Maximum local sensitivity over all words, over 0-words and over 1-words.
/// A maximum over an empty word set is 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SensitivityMaxima {
    pub all: u32,
    pub zero: u32,
    pub one: u32,
}

/// Ordered sensitivity vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OsvSplit {
    pub all: Vec<u32>,
    pub zero: Vec<u32>,
    pub one: Vec<u32>,
}

/// Ordered sensitivity distance vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OsdvSplit {
    pub all: DistanceGrid,
    pub zero: DistanceGrid,
    pub one: DistanceGrid,
}

/// Every signature of one function, unnormalized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureVectors {
    pub num_vars: usize,
    pub satisfy_count: u32,
    pub ocv1: Vec<u32>,
    pub ocv2: Vec<u32>,
    pub oiv: Vec<u32>,
    pub osv: Vec<u32>,
    pub osv0: Vec<u32>,
    pub osv1: Vec<u32>,
    pub osdv: DistanceGrid,
    pub osdv0: DistanceGrid,
    pub osdv1: DistanceGrid,
    pub total_influence: u32,
    pub sensitivity: SensitivityMaxima,
}

impl SignatureVectors {
    pub fn compute(f: &TruthTable) -> Self {
        let profile = SensitivityProfile::new(f);
        let osv = profile.osv();
        let osdv = profile.osdv();
        let ocv1_counts = positive_cofactors(f);
        Self {
            num_vars: f.num_vars(),
            satisfy_count: f.satisfy_count(),
            ocv1: ocv1_from(f, &ocv1_counts),
            ocv2: ocv2_from(f, &ocv1_counts),
            oiv: sorted(profile.influences().to_vec()),
            osv: osv.all,
            osv0: osv.zero,
            osv1: osv.one,
            osdv: osdv.all,
            osdv0: osdv.zero,
            osdv1: osdv.one,
            total_influence: profile.influences().iter().sum(),
            sensitivity: profile.maxima(),
        }
    }
}

fn sorted(mut v: Vec<u32>) -> Vec<u32> {
    v.sort_unstable();
    v
}

/// Ordered cofactor vector of order `order`: the sorted satisfy counts of the
/// cofactors over every `order`-subset of variables and every assignment to
/// it. Order 0 yields `[|f|]`.
pub fn ocv(f: &TruthTable, order: usize) -> Result<Vec<u32>> {
    let vars = f.num_vars();
    if order > vars {
        return Err(Error::InvalidArity { order, vars });
    }
    let mut out = Vec::new();
    for subset in 0u32..(1 << vars) {
        if subset.count_ones() as usize != order {
            continue;
        }
        // Enumerate the assignments to `subset` as its submasks.
        let mut ones = subset;
        loop {
            out.push(f.masked_count(ones, subset & !ones));
            if ones == 0 {
                break;
            }
            ones = (ones - 1) & subset;
        }
    }
    Ok(sorted(out))
}

/// `|f_{x_v = 1}|` for every variable `v`.
fn positive_cofactors(f: &TruthTable) -> Vec<u32> {
    (0..f.num_vars())
        .map(|v| f.masked_count(1 << v, 0))
        .collect()
}

pub(crate) fn ocv1_from(f: &TruthTable, positive: &[u32]) -> Vec<u32> {
    let total = f.satisfy_count();
    sorted(positive.iter().flat_map(|&c1| [total - c1, c1]).collect())
}

/// Second-order cofactors from the `11` counts by inclusion-exclusion.
pub(crate) fn ocv2_from(f: &TruthTable, positive: &[u32]) -> Vec<u32> {
    let total = f.satisfy_count();
    let vars = f.num_vars();
    let mut out = Vec::with_capacity(vars * vars.saturating_sub(1) * 2);
    for a in 0..vars {
        for b in a + 1..vars {
            let c11 = f.masked_count(1 << a | 1 << b, 0);
            let c10 = positive[a] - c11;
            let c01 = positive[b] - c11;
            out.extend([c11, c10, c01, total - c11 - c10 - c01]);
        }
    }
    sorted(out)
}

/// Per-variable influences in variable order (not sorted).
pub fn influences(f: &TruthTable) -> Vec<u32> {
    (0..f.num_vars())
        .map(|v| f.diff_vector_unchecked(v).satisfy_count() / 2)
        .collect()
}

/// Ordered influence vector.
pub fn oiv(f: &TruthTable) -> Vec<u32> {
    sorted(influences(f))
}

/// Sum of all variable influences.
pub fn total_influence(f: &TruthTable) -> u32 {
    influences(f).iter().sum()
}

/// Local sensitivity of every input word, indexed by the word.
pub fn local_sensitivities(f: &TruthTable) -> Vec<u8> {
    SensitivityProfile::new(f).local_sensitivities()
}

pub fn osv_split(f: &TruthTable) -> OsvSplit {
    SensitivityProfile::new(f).osv()
}

pub fn osdv_split(f: &TruthTable) -> OsdvSplit {
    SensitivityProfile::new(f).osdv()
}

pub fn max_sensitivity(f: &TruthTable) -> SensitivityMaxima {
    SensitivityProfile::new(f).maxima()
}

#[cfg(test)]
mod tests;
