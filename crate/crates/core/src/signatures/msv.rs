//! The mixed signature vector (MSV): a polarity-normalized concatenation of
//! selected signature families, used as the classification key.

use std::fmt;
use std::str::FromStr;

use super::profile::SensitivityProfile;
use super::{ocv1_from, ocv2_from, positive_cofactors, sorted};
use crate::error::{Error, Result};
use crate::truthtable::TruthTable;

/// A family of signature vectors that can be included in an MSV.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SignatureFamily {
    /// First-order ordered cofactor vector.
    Ocv1,
    /// Second-order ordered cofactor vector.
    Ocv2,
    /// Ordered influence vector.
    Oiv,
    /// Ordered 1- and 0-sensitivity vectors.
    Osv,
    /// Ordered 1- and 0-sensitivity distance vectors.
    Osdv,
}

impl SignatureFamily {
    pub const ALL: [SignatureFamily; 5] = [
        SignatureFamily::Ocv1,
        SignatureFamily::Ocv2,
        SignatureFamily::Oiv,
        SignatureFamily::Osv,
        SignatureFamily::Osdv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SignatureFamily::Ocv1 => "ocv1",
            SignatureFamily::Ocv2 => "ocv2",
            SignatureFamily::Oiv => "oiv",
            SignatureFamily::Osv => "osv",
            SignatureFamily::Osdv => "osdv",
        }
    }

    fn bit(self) -> u8 {
        1 << self as u8
    }
}

/// A non-empty set of signature families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignatureSelection {
    bits: u8,
}

impl SignatureSelection {
    pub const ALL: SignatureSelection = SignatureSelection { bits: 0b1_1111 };

    pub fn new(families: impl IntoIterator<Item = SignatureFamily>) -> Result<Self> {
        let bits = families.into_iter().fold(0, |acc, f| acc | f.bit());
        if bits == 0 {
            return Err(Error::InvalidSelection(
                "at least one signature family is required".into(),
            ));
        }
        Ok(Self { bits })
    }

    pub fn contains(self, family: SignatureFamily) -> bool {
        self.bits & family.bit() != 0
    }

    pub fn families(self) -> impl Iterator<Item = SignatureFamily> {
        SignatureFamily::ALL
            .into_iter()
            .filter(move |&f| self.contains(f))
    }

    pub fn is_superset_of(self, other: SignatureSelection) -> bool {
        self.bits & other.bits == other.bits
    }

    /// All 31 non-empty selections.
    pub fn all_subsets() -> impl Iterator<Item = SignatureSelection> {
        (1u8..32).map(|bits| SignatureSelection { bits })
    }
}

impl Default for SignatureSelection {
    fn default() -> Self {
        Self::ALL
    }
}

impl fmt::Display for SignatureSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Self::ALL {
            return f.write_str("all");
        }
        let names: Vec<_> = self.families().map(SignatureFamily::name).collect();
        f.write_str(&names.join(","))
    }
}

/// Parses `all` or a comma-separated list of `ocv1`, `ocv2`, `oiv`, `osv`,
/// `osdv` (case-insensitive).
impl FromStr for SignatureSelection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut families = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let lower = part.to_ascii_lowercase();
            if lower == "all" {
                return Ok(Self::ALL);
            }
            let family = SignatureFamily::ALL
                .into_iter()
                .find(|f| f.name() == lower)
                .ok_or_else(|| Error::InvalidSelection(format!("unknown family {part:?}")))?;
            families.push(family);
        }
        Self::new(families)
    }
}

/// The classification key of one function under one selection.
///
/// Layout: `n, |f*|`, then for each selected family in order: `ocv1`, `ocv2`,
/// `oiv`, `osv1 osv0`, `osdv1 osdv0` (grids row-major), all computed on the
/// polarity-normalized function `f*`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MixedSignatureVector {
    selection: SignatureSelection,
    values: Vec<u32>,
}

impl MixedSignatureVector {
    pub fn selection(&self) -> SignatureSelection {
        self.selection
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Compact, injective encoding of this vector for use as a map key.
    pub fn key(&self) -> MsvKey {
        MsvKey::encode(self.selection, &self.values)
    }
}

/// Byte encoding of an MSV: the selection tag followed by run-length encoded
/// values, every integer written as LEB128. Two keys are equal iff the
/// vectors are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MsvKey(Box<[u8]>);

impl MsvKey {
    fn encode(selection: SignatureSelection, values: &[u32]) -> Self {
        fn push(out: &mut Vec<u8>, mut v: u32) {
            while v >= 0x80 {
                out.push((v as u8) | 0x80);
                v >>= 7;
            }
            out.push(v as u8);
        }
        let mut out = Vec::with_capacity(values.len() / 4 + 8);
        out.push(selection.bits);
        let mut rest = values;
        while let Some(&v) = rest.first() {
            let run = rest.iter().take_while(|&&x| x == v).count();
            push(&mut out, v);
            push(&mut out, run as u32);
            rest = &rest[run..];
        }
        MsvKey(out.into_boxed_slice())
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// Selected signature families of one polarity of a function.
#[derive(Clone, Debug, Default)]
struct Families {
    count: u32,
    ocv1: Vec<u32>,
    ocv2: Vec<u32>,
    oiv: Vec<u32>,
    osv1: Vec<u32>,
    osv0: Vec<u32>,
    osdv1: Vec<u32>,
    osdv0: Vec<u32>,
}

impl Families {
    fn compute(f: &TruthTable, sel: SignatureSelection) -> Self {
        use SignatureFamily::*;
        let mut out = Families {
            count: f.satisfy_count(),
            ..Default::default()
        };
        if sel.contains(Ocv1) || sel.contains(Ocv2) {
            let positive = positive_cofactors(f);
            if sel.contains(Ocv1) {
                out.ocv1 = ocv1_from(f, &positive);
            }
            if sel.contains(Ocv2) {
                out.ocv2 = ocv2_from(f, &positive);
            }
        }
        if sel.contains(Oiv) || sel.contains(Osv) || sel.contains(Osdv) {
            let profile = SensitivityProfile::new(f);
            if sel.contains(Oiv) {
                out.oiv = sorted(profile.influences().to_vec());
            }
            if sel.contains(Osv) {
                let osv = profile.osv();
                out.osv1 = osv.one;
                out.osv0 = osv.zero;
            }
            if sel.contains(Osdv) {
                let (zero, one) = profile.restricted_osdv();
                out.osdv1 = one.as_slice().to_vec();
                out.osdv0 = zero.as_slice().to_vec();
            }
        }
        out
    }

    /// The same families for the output-negated function. Cofactor counts
    /// complement within their face and reverse order; influences are
    /// unchanged; the 0- and 1-sides swap.
    fn negated(&self, vars: usize) -> Self {
        let complement = |v: &[u32], face: u32| v.iter().rev().map(|&c| face - c).collect();
        Families {
            count: (1u32 << vars) - self.count,
            ocv1: complement(&self.ocv1, 1 << (vars - 1)),
            ocv2: if vars >= 2 {
                complement(&self.ocv2, 1 << (vars - 2))
            } else {
                Vec::new()
            },
            oiv: self.oiv.clone(),
            osv1: self.osv0.clone(),
            osv0: self.osv1.clone(),
            osdv1: self.osdv0.clone(),
            osdv0: self.osdv1.clone(),
        }
    }

    fn flatten(&self, vars: usize, sel: SignatureSelection) -> Vec<u32> {
        use SignatureFamily::*;
        let mut out = vec![vars as u32, self.count];
        if sel.contains(Ocv1) {
            out.extend(&self.ocv1);
        }
        if sel.contains(Ocv2) {
            out.extend(&self.ocv2);
        }
        if sel.contains(Oiv) {
            out.extend(&self.oiv);
        }
        if sel.contains(Osv) {
            out.extend(&self.osv1);
            out.extend(&self.osv0);
        }
        if sel.contains(Osdv) {
            out.extend(&self.osdv1);
            out.extend(&self.osdv0);
        }
        out
    }
}

/// Builds the MSV of `f`.
///
/// Output polarity is normalized first: a function with more than `2^(n-1)`
/// ones is replaced by its complement. For a balanced function both
/// polarities are flattened and the lexicographically smaller sequence is
/// kept.
pub fn build_msv(f: &TruthTable, sel: SignatureSelection) -> Result<MixedSignatureVector> {
    if sel.bits == 0 || sel.bits & !SignatureSelection::ALL.bits != 0 {
        return Err(Error::InvalidSelection(format!("{:#b}", sel.bits)));
    }
    let vars = f.num_vars();
    let half = 1u32 << (vars - 1);
    let families = Families::compute(f, sel);
    let values = match families.count.cmp(&half) {
        std::cmp::Ordering::Less => families.flatten(vars, sel),
        std::cmp::Ordering::Greater => families.negated(vars).flatten(vars, sel),
        std::cmp::Ordering::Equal => {
            let direct = families.flatten(vars, sel);
            let negated = families.negated(vars).flatten(vars, sel);
            direct.min(negated)
        }
    };
    Ok(MixedSignatureVector {
        selection: sel,
        values,
    })
}

#[cfg(test)]
pub(crate) fn flatten_direct(f: &TruthTable, sel: SignatureSelection) -> Vec<u32> {
    Families::compute(f, sel).flatten(f.num_vars(), sel)
}

#[cfg(test)]
pub(crate) fn flatten_via_negation(f: &TruthTable, sel: SignatureSelection) -> Vec<u32> {
    Families::compute(f, sel)
        .negated(f.num_vars())
        .flatten(f.num_vars(), sel)
}
