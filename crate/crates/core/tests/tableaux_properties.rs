mod common;

use common::{all_fillings, tableau_invariants};
use orthostraight::tableaux::{enumerate_gl_standard, is_gl_standard, on_standard_report, Partition, Tableau};
use proptest::prelude::*;

#[test]
fn exhaustive_invariants() {
    let bad = tableau_invariants();
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn gl_enumeration_matches_brute_force() {
    for n in 2..=4 {
        for r in 0..=4 {
            for shape in Partition::all_of(r) {
                let mut brute: Vec<Tableau> = all_fillings(&shape, n).into_iter().filter(|t| is_gl_standard(t, n)).collect();
                brute.sort_by(|a, b| a.prec(b).unwrap());
                assert_eq!(enumerate_gl_standard(&shape, n), brute, "shape {shape} n={n}");
            }
        }
    }
}

fn letter_text() -> impl Strategy<Value = String> {
    prop_oneof![(1usize..6).prop_map(|k| format!("{k}b")), (1usize..6).prop_map(|k| k.to_string()), Just("0".to_string())]
}

fn tableau_text() -> impl Strategy<Value = String> {
    proptest::collection::vec(1usize..4, 1..4).prop_flat_map(|mut lens| {
        lens.sort_unstable_by(|a, b| b.cmp(a));
        let rows: Vec<_> = lens.into_iter().map(|k| proptest::collection::vec(letter_text(), k)).collect();
        rows.prop_map(|rows| rows.iter().map(|r| r.join(" ")).collect::<Vec<_>>().join("; "))
    })
}

proptest! {
    #[test]
    fn text_roundtrip(text in tableau_text()) {
        let t: Tableau = text.parse().unwrap();
        prop_assert_eq!(t.to_string(), text.clone());
        prop_assert_eq!(t.to_string().parse::<Tableau>().unwrap(), t);
    }

    #[test]
    fn ragged_rows_are_rejected(a in 1usize..3, extra in 1usize..3) {
        let short = vec!["1"; a].join(" ");
        let long = vec!["2"; a + extra].join(" ");
        let text = format!("{short}; {long}");
        prop_assert!(text.parse::<Tableau>().is_err());
    }

    #[test]
    fn standard_report_implies_gl(text in tableau_text(), n in 3usize..8) {
        let t: Tableau = text.parse().unwrap();
        if t.uses_only(n) && on_standard_report(&t, n).standard {
            prop_assert!(is_gl_standard(&t, n));
        }
    }
}
