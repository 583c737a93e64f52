use proptest::prelude::*;

use super::msv::{flatten_direct, flatten_via_negation};
use super::*;
use crate::truthtable::NpTransform;

fn tt(hex: &str, vars: usize) -> TruthTable {
    TruthTable::from_hex(hex, vars).unwrap()
}

/// Local sensitivity straight from the definition.
fn naive_sensitivity(f: &TruthTable, x: usize) -> u32 {
    (0..f.num_vars())
        .filter(|&i| f.bit(x) != f.bit(x ^ (1 << i)))
        .count() as u32
}

/// Distance-grid by enumerating all word pairs, optionally restricted to an
/// output value.
fn naive_grid(f: &TruthTable, value: Option<bool>) -> Vec<u32> {
    let n = f.num_vars();
    let mut cells = vec![0u32; (n + 1) * n];
    let keep = |x: usize| value.is_none_or(|v| f.bit(x) == v);
    for x in 0..f.num_bits() {
        for y in x + 1..f.num_bits() {
            let (sx, sy) = (naive_sensitivity(f, x), naive_sensitivity(f, y));
            if sx == sy && keep(x) && keep(y) {
                let d = (x ^ y).count_ones() as usize;
                cells[sx as usize * n + d - 1] += 1;
            }
        }
    }
    cells
}

fn naive_osv(f: &TruthTable, value: Option<bool>) -> Vec<u32> {
    let mut v: Vec<u32> = (0..f.num_bits())
        .filter(|&x| value.is_none_or(|b| f.bit(x) == b))
        .map(|x| naive_sensitivity(f, x))
        .collect();
    v.sort_unstable();
    v
}

#[test]
fn majority_row_of_worked_examples() {
    let s = SignatureVectors::compute(&tt("E8", 3));
    assert_eq!(s.ocv1, [1, 1, 1, 3, 3, 3]);
    assert_eq!(s.ocv2, [0, 0, 0, 1, 1, 1, 1, 1, 1, 2, 2, 2]);
    assert_eq!(s.oiv, [2, 2, 2]);
    assert_eq!(s.osv1, [0, 2, 2, 2]);
    assert_eq!(s.osv0, [0, 2, 2, 2]);
    assert_eq!(s.osv, [0, 0, 2, 2, 2, 2, 2, 2]);
    assert_eq!(s.osdv1.as_slice(), [0, 0, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0]);
    assert_eq!(s.osdv.as_slice(), [0, 0, 1, 0, 0, 0, 6, 6, 3, 0, 0, 0]);
    assert_eq!(s.osdv1.get(2, 2), 3);
    assert_eq!(s.total_influence, 6);
    assert_eq!(
        s.sensitivity,
        SensitivityMaxima {
            all: 2,
            zero: 2,
            one: 2
        }
    );
}

#[test]
fn projection_row_of_worked_examples() {
    let s = SignatureVectors::compute(&tt("AA", 3));
    assert_eq!(s.ocv1, [0, 2, 2, 2, 2, 4]);
    assert_eq!(s.ocv2, [0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2]);
    assert_eq!(s.oiv, [0, 0, 4]);
    assert_eq!(s.osv1, [1, 1, 1, 1]);
    assert_eq!(s.osv0, [1, 1, 1, 1]);
    assert_eq!(s.osv, [1; 8]);
    assert_eq!(s.osdv1.as_slice(), [0, 0, 0, 4, 2, 0, 0, 0, 0, 0, 0, 0]);
    assert_eq!(s.osdv.as_slice(), [0, 0, 0, 12, 12, 4, 0, 0, 0, 0, 0, 0]);
}

#[test]
fn parity_and_constants() {
    let parity = tt("96", 3);
    assert_eq!(oiv(&parity), [4, 4, 4]);
    assert_eq!(local_sensitivities(&parity), [3; 8]);
    assert_eq!(total_influence(&parity), 12);
    assert_eq!(
        osdv_split(&parity).all.as_slice(),
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 12, 12, 4]
    );
    assert_eq!(
        max_sensitivity(&parity),
        SensitivityMaxima {
            all: 3,
            zero: 3,
            one: 3
        }
    );

    let zero = tt("00", 3);
    assert_eq!(local_sensitivities(&zero), [0; 8]);
    assert_eq!(total_influence(&zero), 0);
    assert_eq!(oiv(&zero), [0, 0, 0]);

    let one = tt("FF", 3);
    let split = osv_split(&one);
    assert_eq!(split.one, [0; 8]);
    assert!(split.zero.is_empty());
    assert_eq!(
        max_sensitivity(&one),
        SensitivityMaxima {
            all: 0,
            zero: 0,
            one: 0
        }
    );
}

#[test]
fn majority_top_word_is_insensitive() {
    assert_eq!(local_sensitivities(&tt("E8", 3))[0b111], 0);
}

#[test]
fn general_ocv() {
    let maj = tt("E8", 3);
    assert_eq!(ocv(&maj, 0).unwrap(), [4]);
    assert_eq!(ocv(&maj, 1).unwrap(), [1, 1, 1, 3, 3, 3]);
    assert_eq!(ocv(&maj, 2).unwrap(), [0, 0, 0, 1, 1, 1, 1, 1, 1, 2, 2, 2]);
    assert_eq!(ocv(&maj, 3).unwrap(), [0, 0, 0, 0, 1, 1, 1, 1]);
    assert_eq!(ocv(&tt("AA", 3), 1).unwrap(), [0, 2, 2, 2, 2, 4]);
    assert_eq!(ocv(&maj, 4), Err(Error::InvalidArity { order: 4, vars: 3 }));
}

#[test]
fn single_variable_functions() {
    let f = tt("2", 1);
    let s = SignatureVectors::compute(&f);
    assert_eq!(s.ocv1, [0, 1]);
    assert!(s.ocv2.is_empty());
    assert_eq!(s.oiv, [1]);
    assert_eq!(s.osdv.as_slice(), [0, 1]);
    let msv = build_msv(&f, SignatureSelection::ALL).unwrap();
    assert_eq!(
        msv,
        build_msv(&tt("1", 1), SignatureSelection::ALL).unwrap()
    );
}

#[test]
fn msv_examples() {
    let all = SignatureSelection::ALL;
    let maj = build_msv(&tt("E8", 3), all).unwrap();
    assert_eq!(maj, build_msv(&tt("17", 3), all).unwrap());
    assert_ne!(maj, build_msv(&tt("AA", 3), all).unwrap());
    assert_eq!(maj.key(), build_msv(&tt("17", 3), all).unwrap().key());
    assert_ne!(maj.key(), build_msv(&tt("AA", 3), all).unwrap().key());
}

#[test]
fn msv_layout() {
    // Unbalanced, fewer ones than zeros: no normalization.
    let and3 = tt("80", 3);
    let sel: SignatureSelection = "oiv,osv".parse().unwrap();
    let msv = build_msv(&and3, sel).unwrap();
    let mut expected = vec![3, 1];
    expected.extend(oiv(&and3));
    let split = osv_split(&and3);
    expected.extend(split.one);
    expected.extend(split.zero);
    assert_eq!(msv.values(), expected.as_slice());
}

#[test]
fn selection_parsing() {
    assert_eq!(
        "all".parse::<SignatureSelection>(),
        Ok(SignatureSelection::ALL)
    );
    assert_eq!(
        "ocv1,ocv2,oiv,osv,osdv".parse::<SignatureSelection>(),
        Ok(SignatureSelection::ALL)
    );
    let sel: SignatureSelection = "OIV, osdv".parse().unwrap();
    assert_eq!(sel.to_string(), "oiv,osdv");
    assert!(matches!(
        "".parse::<SignatureSelection>(),
        Err(Error::InvalidSelection(_))
    ));
    assert!(matches!(
        "walsh".parse::<SignatureSelection>(),
        Err(Error::InvalidSelection(_))
    ));
    assert_eq!(SignatureSelection::all_subsets().count(), 31);
    assert!(SignatureSelection::ALL.is_superset_of(sel));
    assert!(!sel.is_superset_of(SignatureSelection::ALL));
}

fn table(max_vars: usize) -> impl Strategy<Value = TruthTable> {
    (1..=max_vars).prop_flat_map(|vars| {
        proptest::collection::vec(any::<u64>(), crate::truthtable::word_count(vars))
            .prop_map(move |w| TruthTable::from_words(vars, w).unwrap())
    })
}

/// Tables with a prescribed number of ones, to exercise balanced functions.
fn balanced_table(max_vars: usize) -> impl Strategy<Value = TruthTable> {
    (1..=max_vars).prop_flat_map(|vars| {
        let bits = 1usize << vars;
        let pattern: Vec<bool> = (0..bits).map(|i| i < bits / 2).collect();
        Just(pattern)
            .prop_shuffle()
            .prop_map(move |p| TruthTable::from_fn(vars, |x| p[x]).unwrap())
    })
}

fn transform(vars: usize) -> impl Strategy<Value = NpTransform> {
    (
        Just((0..vars).collect::<Vec<_>>()).prop_shuffle(),
        0u32..(1 << vars),
        any::<bool>(),
    )
        .prop_map(|(p, m, o)| NpTransform::new(p, m, o).unwrap())
}

fn with_transform(
    tables: impl Strategy<Value = TruthTable>,
) -> impl Strategy<Value = (TruthTable, NpTransform)> {
    tables.prop_flat_map(|f| {
        let vars = f.num_vars();
        (Just(f), transform(vars))
    })
}

fn selection() -> impl Strategy<Value = SignatureSelection> {
    (1u8..32).prop_map(|bits| {
        SignatureSelection::new(
            SignatureFamily::ALL
                .into_iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, f)| f),
        )
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn vectors_match_definitions(f in table(7)) {
        let s = SignatureVectors::compute(&f);
        prop_assert_eq!(&s.osv, &naive_osv(&f, None));
        prop_assert_eq!(&s.osv0, &naive_osv(&f, Some(false)));
        prop_assert_eq!(&s.osv1, &naive_osv(&f, Some(true)));
        prop_assert_eq!(s.osdv.as_slice().to_vec(), naive_grid(&f, None));
        prop_assert_eq!(s.osdv0.as_slice().to_vec(), naive_grid(&f, Some(false)));
        prop_assert_eq!(s.osdv1.as_slice().to_vec(), naive_grid(&f, Some(true)));
        prop_assert_eq!(&s.ocv1, &ocv(&f, 1).unwrap());
        if f.num_vars() >= 2 {
            prop_assert_eq!(&s.ocv2, &ocv(&f, 2).unwrap());
        }
        let local: Vec<u32> = local_sensitivities(&f).into_iter().map(u32::from).collect();
        let naive: Vec<u32> = (0..f.num_bits()).map(|x| naive_sensitivity(&f, x)).collect();
        prop_assert_eq!(local, naive);
    }

    #[test]
    fn vector_invariants(f in table(10)) {
        let s = SignatureVectors::compute(&f);
        let n = f.num_vars();
        for v in [&s.ocv1, &s.ocv2, &s.oiv, &s.osv, &s.osv0, &s.osv1] {
            prop_assert!(v.windows(2).all(|w| w[0] <= w[1]));
        }
        prop_assert_eq!(s.ocv1.len(), 2 * n);
        prop_assert_eq!(s.ocv2.len(), n * n.saturating_sub(1) * 2);
        prop_assert_eq!(s.oiv.len(), n);
        prop_assert_eq!(s.osv0.len() + s.osv1.len(), f.num_bits());
        prop_assert_eq!(s.osv1.len(), s.satisfy_count as usize);
        let mut merged = [s.osv0.clone(), s.osv1.clone()].concat();
        merged.sort_unstable();
        prop_assert_eq!(&merged, &s.osv);
        prop_assert_eq!(s.oiv.iter().sum::<u32>(), s.total_influence);
        prop_assert_eq!(s.osv.iter().sum::<u32>(), 2 * s.total_influence);
        prop_assert!(s.oiv.iter().all(|&i| i as usize <= f.num_bits() / 2));
        prop_assert!(s.osv.iter().all(|&x| x as usize <= n));
        for (grid, osv) in [(&s.osdv, &s.osv), (&s.osdv0, &s.osv0), (&s.osdv1, &s.osv1)] {
            for sens in 0..=n {
                let m = osv.iter().filter(|&&x| x as usize == sens).count() as u64;
                let row: u64 = grid.row(sens).iter().map(|&c| c as u64).sum();
                prop_assert_eq!(row, m * m.saturating_sub(1) / 2);
            }
        }
        prop_assert_eq!(s.sensitivity.all, s.osv.last().copied().unwrap_or(0));
        prop_assert_eq!(s.sensitivity.zero, s.osv0.last().copied().unwrap_or(0));
        prop_assert_eq!(s.sensitivity.one, s.osv1.last().copied().unwrap_or(0));
    }

    #[test]
    fn output_negation_swaps_sides(f in table(9)) {
        let s = SignatureVectors::compute(&f);
        let g = SignatureVectors::compute(&f.negate_output());
        prop_assert_eq!(&g.osv1, &s.osv0);
        prop_assert_eq!(&g.osv0, &s.osv1);
        prop_assert_eq!(&g.osdv1, &s.osdv0);
        prop_assert_eq!(&g.osdv0, &s.osdv1);
        prop_assert_eq!(&g.osdv, &s.osdv);
        prop_assert_eq!(&g.oiv, &s.oiv);
    }

    #[test]
    fn negated_families_match_direct(f in table(9), sel in selection()) {
        prop_assert_eq!(flatten_direct(&f.negate_output(), sel), flatten_via_negation(&f, sel));
    }

    #[test]
    fn unbalanced_pn_invariance((f, t) in with_transform(table(8))) {
        prop_assume!(!f.is_balanced());
        let t = NpTransform::new(t.perm().collect(), t.neg_mask(), false).unwrap();
        let s = SignatureVectors::compute(&f);
        let g = SignatureVectors::compute(&f.apply(&t).unwrap());
        prop_assert_eq!(&s.ocv1, &g.ocv1);
        prop_assert_eq!(&s.ocv2, &g.ocv2);
        prop_assert_eq!(&s.oiv, &g.oiv);
        prop_assert_eq!(&s.osv0, &g.osv0);
        prop_assert_eq!(&s.osv1, &g.osv1);
        prop_assert_eq!(&s.osdv0, &g.osdv0);
        prop_assert_eq!(&s.osdv1, &g.osdv1);
    }

    #[test]
    fn msv_npn_invariance((f, t) in with_transform(table(8)), sel in selection()) {
        let g = f.apply(&t).unwrap();
        prop_assert_eq!(build_msv(&f, sel).unwrap(), build_msv(&g, sel).unwrap());
    }

    #[test]
    fn msv_npn_invariance_balanced((f, t) in with_transform(balanced_table(7))) {
        // A balanced function against the negation of a transformed copy.
        let g = f.apply(&t).unwrap().negate_output();
        prop_assert_eq!(
            build_msv(&f, SignatureSelection::ALL).unwrap(),
            build_msv(&g, SignatureSelection::ALL).unwrap()
        );
    }

    #[test]
    fn msv_is_deterministic(f in table(10)) {
        let a = build_msv(&f, SignatureSelection::ALL).unwrap();
        let b = build_msv(&f.clone(), SignatureSelection::ALL).unwrap();
        prop_assert_eq!(a.key(), b.key());
        prop_assert_eq!(a, b);
    }
}
