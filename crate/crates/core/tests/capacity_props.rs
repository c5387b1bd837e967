use num_bigint::BigUint;
use proptest::prelude::*;
use rectcap_core::{
    cardinality, enumerate, oracle_distribution, oracle_total, rect_capacity, Budget, Family, FamilySpec,
    RectSpec, Restriction,
};

/// Counts placements cell by cell: a rectangle with lower-left corner at
/// column `c`, row `b` fits when every covered column reaches row `b + r - 1`.
fn placements(word: &[u32], r: u32, s: u32) -> u64 {
    let s = s as usize;
    let top = word.iter().copied().max().unwrap_or(0);
    let mut count = 0;
    for c in 0..word.len() {
        if c + s > word.len() {
            break;
        }
        for b in 1..=top {
            if word[c..c + s].iter().all(|&h| h >= b + r - 1) {
                count += 1;
            }
        }
    }
    count
}

fn rect(r: u32, s: u32) -> RectSpec {
    RectSpec::new(r, s).unwrap()
}

proptest! {
    #[test]
    fn matches_cell_count(word in prop::collection::vec(1u32..=9, 0..14), r in 1u32..=5, s in 1u32..=6) {
        prop_assert_eq!(rect_capacity(&word, rect(r, s)), placements(&word, r, s));
    }

    #[test]
    fn nonincreasing_in_both_sides(word in prop::collection::vec(1u32..=9, 0..14), r in 1u32..=5, s in 1u32..=6) {
        let c = rect_capacity(&word, rect(r, s));
        prop_assert!(rect_capacity(&word, rect(r + 1, s)) <= c);
        prop_assert!(rect_capacity(&word, rect(r, s + 1)) <= c);
    }
}

#[test]
fn oracle_is_consistent_with_counts_and_totals() {
    let budget = Budget::default();
    let specs = [
        FamilySpec::nondecreasing(),
        FamilySpec::smirnov(),
        FamilySpec::nondecreasing().with(Restriction::MinLetter(2)),
        FamilySpec::smirnov().with(Restriction::MinLetterBarredFirst(2)),
    ];
    for spec in specs {
        for k in 2..=4u32 {
            for n in 0..=6usize {
                for r in 1..=3u32 {
                    for s in 1..=3u32 {
                        let d = oracle_distribution(spec, n, k, rect(r, s), budget).unwrap();
                        assert_eq!(d.word_count(), cardinality(spec, n, k).unwrap());
                        let summed: u64 = enumerate(spec, n, k)
                            .unwrap()
                            .map(|w| rect_capacity(&w.0, rect(r, s)))
                            .sum();
                        assert_eq!(d.total(), BigUint::from(summed));
                        assert_eq!(oracle_total(spec, n, k, rect(r, s), budget).unwrap(), d.total());
                        assert!(!d.poly.has_negative_exponent() && !d.poly.has_negative_coefficient());
                        let bound = if n >= s as usize && k >= r {
                            ((n - s as usize + 1) as i64) * i64::from(k - r + 1)
                        } else {
                            0
                        };
                        assert!(d.poly.max_exp().unwrap_or(0) <= bound, "{spec} n={n} k={k} r={r} s={s}");
                    }
                }
            }
        }
    }
}

#[test]
fn short_words_hold_nothing() {
    for family in [Family::Nondecreasing, Family::Smirnov] {
        for s in 2..=5u32 {
            for n in 0..s as usize {
                let total = oracle_total(FamilySpec::new(family, Restriction::None), n, 3, rect(1, s), Budget::default());
                assert_eq!(total.unwrap(), BigUint::default());
            }
        }
    }
}
