use diceways_core::oracle::{brute_partitions, DEFAULT_BUDGET};
use diceways_core::polygonal::{
    check_all_positive, count_partitions_with_parts, ordered_representation_counts,
    polygonal_number, polygonal_series, unordered_representation_counts, Coverage, PartSet,
    PolygonalSpec,
};
use diceways_core::series::Count;
use proptest::prelude::*;

#[test]
fn closed_forms_for_triangles_and_squares() {
    for j in 0..=100u64 {
        assert_eq!(polygonal_number(3, j), j * (j + 1) / 2);
        assert_eq!(polygonal_number(4, j), j * j);
    }
}

#[test]
fn ordered_counts_match_brute_force() {
    // Four squares summing to 7: only 4+1+1+1, in 4 arrangements.
    let sq4 = ordered_representation_counts(4, 4, 60).unwrap();
    assert_eq!(sq4.coeff(7), Count::from(4));
    for (sides, k) in [(3u64, 3u32), (4, 4), (5, 3)] {
        let p = ordered_representation_counts(sides, k, 60).unwrap();
        let parts = PartSet::polygonal(sides, 60).unwrap();
        for n in 0..=60u64 {
            let brute = brute_partitions(&parts, k as usize, n, true, DEFAULT_BUDGET).unwrap();
            assert_eq!(p.coeff(n as i64), brute, "m={sides} k={k} N={n}");
        }
    }
}

#[test]
fn ordered_counts_are_series_power() {
    let spec = PolygonalSpec::new(6, 200).unwrap();
    let direct = polygonal_series(&spec).pow(6, None).unwrap();
    assert_eq!(ordered_representation_counts(6, 6, 200).unwrap(), direct);
}

#[test]
fn three_triangles_cover_a_thousand() {
    let cube = ordered_representation_counts(3, 3, 1000).unwrap();
    assert_eq!(check_all_positive(&cube, 1000).unwrap(), Coverage::Complete);
}

#[test]
fn four_squares_by_unordered_count() {
    let squares = PartSet::polygonal(4, 300).unwrap();
    let s = unordered_representation_counts(&squares, 4, 300);
    assert_eq!(check_all_positive(&s, 300).unwrap(), Coverage::Complete);
    let r = unordered_representation_counts(&squares, 3, 300);
    assert_eq!(check_all_positive(&r, 300).unwrap(), Coverage::FirstGap(7));
}

proptest! {
    #[test]
    fn unordered_matches_multiset_enumeration(
        raw in prop::collection::btree_set(0u64..=30, 1..=6),
        k in 0usize..=5,
        sum in 0u64..=60,
    ) {
        let parts = PartSet::new(raw.into_iter().collect()).unwrap();
        let brute = brute_partitions(&parts, k, sum, false, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(count_partitions_with_parts(&parts, k, sum), brute);
    }

    #[test]
    fn ordered_and_unordered_positivity_agree(sides in 3u64..=8, k in 1u32..=4) {
        let bound = 150;
        let ordered = ordered_representation_counts(sides, k, bound).unwrap();
        let parts = PartSet::polygonal(sides, bound as u64).unwrap();
        let unordered = unordered_representation_counts(&parts, k as usize, bound);
        for n in 0..=bound as i64 {
            let zero = Count::from(0);
            prop_assert_eq!(ordered.coeff(n) > zero, unordered.coeff(n) > Count::from(0));
        }
    }
}
