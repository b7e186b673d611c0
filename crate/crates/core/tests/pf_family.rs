use numsemi::buchweitz::{buchweitz_test, gap_sumset};
use numsemi::pfseq::predicted_g2_cardinality;
use numsemi::{
    build_pf, corollary_bound, decompose_pf, enumerate_genus, is_pf_semigroup, paste,
    schubert_to_d, verify_sequence, verify_window, AnchoredSeq, DiffSeq,
};
use proptest::prelude::*;

fn seq(v: &[u32]) -> DiffSeq {
    DiffSeq::new(v.to_vec()).unwrap()
}

const EXAMPLES: [&[u32]; 6] = [
    &[1, 3, 3, 2],
    &[2, 4, 3],
    &[1, 4, 3],
    &[7, 1, 2, 1],
    &[1, 2, 2, 1],
    &[2, 3, 1, 1],
];

#[test]
fn examples_hold_on_twenty_genera_above_the_bound() {
    for d in EXAMPLES.map(seq) {
        let bound = corollary_bound(&d).unwrap().corollary_bound.unwrap();
        for g in bound..=bound + 20 {
            let s = build_pf(&d, g).unwrap();
            assert!(is_pf_semigroup(&s), "{d}@{g}");
            assert!(buchweitz_test(&s, 2).unwrap().is_buchweitz, "{d}@{g}");
            let (gg, t) = (s.genus() as i64, s.type_() as i64);
            assert_eq!(t, d.t() as i64);
            assert_eq!(s.frobenius(), 2 * gg - 2 * t + 1);
            assert_eq!(s.multiplicity() as i64, gg - t + 1);
            assert_eq!(
                gap_sumset(&s, 2).unwrap().len() as u64,
                predicted_g2_cardinality(&d, g).unwrap()
            );
            assert!(verify_sequence(&d.reverse(), g).unwrap());
            assert_eq!(schubert_to_d(&s.schubert_index()).unwrap(), d);
        }
    }
}

#[test]
fn paste_chain_is_sound() {
    let base = AnchoredSeq { seq: seq(&[1, 4, 3]), genus: 22 };
    let mut acc = AnchoredSeq { seq: seq(&[2, 4, 3]), genus: 23 };
    for want in [48, 73, 98] {
        acc = paste(&acc, &base, 2).unwrap();
        assert_eq!(acc.genus, want);
        let window = verify_window(&acc.seq, want..=want + 20).unwrap();
        assert!(window.iter().all(|&(_, ok)| ok), "{acc}");
    }
}

#[test]
fn census_pf_semigroups_cover_their_interval() {
    for g in 2..=18 {
        enumerate_genus(g, |s| {
            if !is_pf_semigroup(s) {
                return;
            }
            let t = s.type_();
            assert_eq!(s.frobenius() % 2, 1);
            let blocks = decompose_pf(s).unwrap();
            let top = blocks.iter().map(|b| b.genus - 1).max().unwrap();
            assert_eq!(top, g - t, "{s}");
        });
    }
}

fn sequence_and_genus() -> impl Strategy<Value = (DiffSeq, u32)> {
    prop::collection::vec(1u32..=7, 1..=9)
        .prop_filter_map("pair-sum condition", |v| {
            let d = DiffSeq::new(v).unwrap();
            let bound = corollary_bound(&d).unwrap().corollary_bound?;
            Some((d, bound))
        })
        .prop_flat_map(|(d, bound)| (Just(d), bound..bound + 40))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn sufficient_conditions_imply_direct_check((d, g) in sequence_and_genus()) {
        let s = build_pf(&d, g).unwrap();
        prop_assert!(is_pf_semigroup(&s));
        prop_assert_eq!(
            gap_sumset(&s, 2).unwrap().len() as u64,
            predicted_g2_cardinality(&d, g).unwrap()
        );
        prop_assert!(verify_sequence(&d, g).unwrap());
        prop_assert!(verify_sequence(&d.reverse(), g).unwrap());
    }

    #[test]
    fn a_and_d_are_inverse(v in prop::collection::vec(1u32..50, 0..12)) {
        let d = DiffSeq::new(v).unwrap();
        let a = d.to_a();
        prop_assert_eq!(a.as_slice().last(), Some(&1));
        prop_assert_eq!(a.to_d(), d.clone());
        prop_assert_eq!(a.as_slice()[0], d.sum() + 1);
    }
}
