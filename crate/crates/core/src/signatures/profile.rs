//! Bit-sliced local sensitivity counting.

use super::{DistanceGrid, OsdvSplit, OsvSplit, SensitivityMaxima};
use crate::truthtable::{tail_mask, TruthTable};

/// Local sensitivities of every word of one function, stored as bit planes:
/// bit `X` of `planes[p]` is bit `p` of `sen(f, X)`.
pub(crate) struct SensitivityProfile<'a> {
    f: &'a TruthTable,
    influences: Vec<u32>,
    planes: Vec<Vec<u64>>,
}

impl<'a> SensitivityProfile<'a> {
    pub(crate) fn new(f: &'a TruthTable) -> Self {
        let vars = f.num_vars();
        let width = (usize::BITS - vars.leading_zeros()) as usize;
        let words = f.words().len();
        let mut planes = vec![vec![0u64; words]; width];
        let mut influences = Vec::with_capacity(vars);
        for v in 0..vars {
            let diff = f.diff_vector_unchecked(v);
            influences.push(diff.satisfy_count() / 2);
            for (k, &d) in diff.words().iter().enumerate() {
                let mut carry = d;
                for plane in planes.iter_mut() {
                    if carry == 0 {
                        break;
                    }
                    let next = plane[k] & carry;
                    plane[k] ^= carry;
                    carry = next;
                }
            }
        }
        Self {
            f,
            influences,
            planes,
        }
    }

    pub(crate) fn influences(&self) -> &[u32] {
        &self.influences
    }

    pub(crate) fn local_sensitivities(&self) -> Vec<u8> {
        (0..self.f.num_bits())
            .map(|x| {
                self.planes.iter().enumerate().fold(0u8, |acc, (p, plane)| {
                    acc | (((plane[x >> 6] >> (x & 63)) & 1) as u8) << p
                })
            })
            .collect()
    }

    /// Bitset of the words with sensitivity exactly `sens`.
    fn level(&self, sens: usize, k: usize) -> u64 {
        let mut eq = tail_mask(self.f.num_vars());
        for (p, plane) in self.planes.iter().enumerate() {
            eq &= if sens >> p & 1 == 1 {
                plane[k]
            } else {
                !plane[k]
            };
        }
        eq
    }

    /// `hist[v][s]`: number of words with `f(X) = v` and sensitivity `s`.
    pub(crate) fn histogram(&self) -> [Vec<u32>; 2] {
        let vars = self.f.num_vars();
        let mut hist = [vec![0u32; vars + 1], vec![0u32; vars + 1]];
        for (k, &w) in self.f.words().iter().enumerate() {
            for s in 0..=vars {
                let eq = self.level(s, k);
                hist[1][s] += (eq & w).count_ones();
                hist[0][s] += (eq & !w).count_ones();
            }
        }
        hist
    }

    pub(crate) fn osv(&self) -> OsvSplit {
        let [h0, h1] = self.histogram();
        let expand = |h: &[u32]| -> Vec<u32> {
            h.iter()
                .enumerate()
                .flat_map(|(s, &c)| std::iter::repeat_n(s as u32, c as usize))
                .collect()
        };
        let merged: Vec<u32> = h0.iter().zip(&h1).map(|(a, b)| a + b).collect();
        OsvSplit {
            all: expand(&merged),
            zero: expand(&h0),
            one: expand(&h1),
        }
    }

    pub(crate) fn maxima(&self) -> SensitivityMaxima {
        let [h0, h1] = self.histogram();
        let top = |h: &[u32]| h.iter().rposition(|&c| c > 0).unwrap_or(0) as u32;
        SensitivityMaxima {
            all: top(&h0).max(top(&h1)),
            zero: top(&h0),
            one: top(&h1),
        }
    }

    /// `lists[v][s]`: the words with `f(X) = v` and sensitivity `s`, ascending.
    fn bucket_lists(&self) -> [Vec<Vec<u32>>; 2] {
        let vars = self.f.num_vars();
        let mut lists = [vec![Vec::new(); vars + 1], vec![Vec::new(); vars + 1]];
        let valid = tail_mask(vars);
        for (k, &w) in self.f.words().iter().enumerate() {
            let base = (k as u32) << 6;
            for s in 0..=vars {
                let eq = self.level(s, k);
                for (v, mut bits) in [(0, eq & !w & valid), (1, eq & w)] {
                    while bits != 0 {
                        lists[v][s].push(base | bits.trailing_zeros());
                        bits &= bits - 1;
                    }
                }
            }
        }
        lists
    }

    fn grid(&self, lists: &[Vec<u32>]) -> DistanceGrid {
        let vars = self.f.num_vars();
        let mut grid = DistanceGrid::zeros(vars);
        let mut hist = vec![0u32; vars + 1];
        for (s, words) in lists.iter().enumerate() {
            if words.len() < 2 {
                continue;
            }
            hist.iter_mut().for_each(|h| *h = 0);
            for (i, &a) in words.iter().enumerate() {
                for &b in &words[i + 1..] {
                    hist[(a ^ b).count_ones() as usize] += 1;
                }
            }
            grid.row_mut(s).copy_from_slice(&hist[1..]);
        }
        grid
    }

    /// `(osdv0, osdv1)`: pairs restricted to 0-words and to 1-words.
    pub(crate) fn restricted_osdv(&self) -> (DistanceGrid, DistanceGrid) {
        let [zero, one] = self.bucket_lists();
        (self.grid(&zero), self.grid(&one))
    }

    pub(crate) fn osdv(&self) -> OsdvSplit {
        let vars = self.f.num_vars();
        let [zero_lists, one_lists] = self.bucket_lists();
        let zero = self.grid(&zero_lists);
        let one = self.grid(&one_lists);
        let mut all = DistanceGrid::zeros(vars);
        for s in 0..=vars {
            let row = all.row_mut(s);
            for ((cell, z), o) in row.iter_mut().zip(zero.row(s)).zip(one.row(s)) {
                *cell = z + o;
            }
            for &a in &zero_lists[s] {
                for &b in &one_lists[s] {
                    row[(a ^ b).count_ones() as usize - 1] += 1;
                }
            }
        }
        OsdvSplit { all, zero, one }
    }
}
