use proptest::prelude::*;

use kbound::blocks::{closed_form_count, evaluate, BlockQuery, EllProfile, Exactness, Verdict};
use kbound::combinatorics::{
    ell_compositions, multipartition_count, p_ell, partition_count, Partition,
};
use kbound::lseries::{block_count_by_enumeration, block_count_proof_path, build_inventory};
use kbound::oracle::{gmpn_class_count, multipartition_enumerate};
use kbound::{GroupFamily, Nat};

fn odd_profile() -> impl Strategy<Value = (u64, u64, u64)> {
    prop::sample::select(vec![3u64, 5, 7, 11, 13]).prop_flat_map(|ell| {
        let divisors: Vec<u64> = (1..ell).filter(|d| (ell - 1) % d == 0).collect();
        (Just(ell), prop::sample::select(divisors), 1u64..=3)
    })
}

fn weighted_family() -> impl Strategy<Value = GroupFamily> {
    prop::sample::select(vec![
        GroupFamily::Gl,
        GroupFamily::Gu,
        GroupFamily::Sp,
        GroupFamily::SoOdd,
        GroupFamily::GoEvenPlus,
        GroupFamily::GoEvenMinus,
        GroupFamily::SoEvenPlus,
        GroupFamily::SoEvenMinus,
    ])
}

proptest! {
    #[test]
    fn convolution(s in 0u64..8, s2 in 0u64..8, n in 0u64..30) {
        let sum: Nat = (0..=n)
            .map(|t| multipartition_count(s, t) * multipartition_count(s2, n - t))
            .sum();
        prop_assert_eq!(sum, multipartition_count(s + s2, n));
    }

    #[test]
    fn listing_matches_recurrence(s in 0u64..=6, t in 0u64..=10) {
        prop_assert_eq!(multipartition_enumerate(s, t).unwrap(), multipartition_count(s, t));
    }

    #[test]
    fn compositions_are_counted(ell in 2u64..8, w in 0u64..60) {
        let list = ell_compositions(ell, w);
        prop_assert_eq!(Nat::from(list.len()), p_ell(ell, w));
        for c in &list {
            prop_assert_eq!(c.total(), w);
        }
        let mut sorted = list.clone();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), list.len());
    }

    #[test]
    fn conjugation_is_an_involution(parts in prop::collection::vec(1u64..10, 1..8)) {
        let p = Partition::new(parts).unwrap();
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
        prop_assert_eq!(p.hook_lengths().len() as u64, p.size());
    }

    #[test]
    fn two_routes_agree((ell, d, a) in odd_profile(), w in 0u64..=10, family in weighted_family()) {
        prop_assume!(!family.is_even_orthogonal() || family.is_bc_type());
        let closed = closed_form_count(family, ell, d, a, w).unwrap();
        if matches!(family, GroupFamily::SoEvenPlus | GroupFamily::SoEvenMinus) {
            // Only an upper bound is claimed for SO^±; it coincides with GO^±.
            let go = closed_form_count(GroupFamily::GoEvenPlus, ell, d, a, w).unwrap();
            prop_assert_eq!(closed, go);
        } else {
            prop_assert_eq!(closed, block_count_proof_path(family, ell, d, a, w).unwrap());
        }
    }

    #[test]
    fn verdicts_are_consistent((ell, d, a) in odd_profile(), w in 0u64..=12, family in weighted_family()) {
        let q = BlockQuery::weighted(family, EllProfile::new(ell, d, a).unwrap(), w);
        let inv = evaluate(&q).unwrap();
        prop_assert!(!inv.verdict.is_failure());
        prop_assert_eq!(inv.abelian_defect, w < ell);
        if inv.exactness == Exactness::UpperBound {
            prop_assert!(family.is_even_orthogonal() && !family.is_linear_type());
        }
        if inv.verdict == Verdict::HoldsEqualityAbelian {
            prop_assert!(w < ell);
        }
    }

    #[test]
    fn monotone_in_weight(s in 1u64..6, t in 0u64..30) {
        prop_assert!(multipartition_count(s, t) <= multipartition_count(s, t + 1));
        prop_assert!(multipartition_count(s, t) <= multipartition_count(s + 1, t));
    }
}

#[test]
fn wreath_class_counts() {
    for (m, n) in [(1u64, 4u64), (2, 3), (3, 2), (2, 4), (3, 3), (5, 2)] {
        assert_eq!(Nat::from(gmpn_class_count(m, 1, n).unwrap()), multipartition_count(m, n));
    }
    for (d, n) in [(1u64, 3u64), (1, 4), (2, 2), (2, 3), (3, 2)] {
        assert_eq!(
            Nat::from(gmpn_class_count(2 * d, 2, n).unwrap()),
            kbound::combinatorics::irr_count_g2d_2_n(d, n)
        );
    }
}

#[test]
fn stream_and_grouped_sums_agree() {
    for (family, ell, d, a, w) in [
        (GroupFamily::Gl, 3, 1, 1, 5),
        (GroupFamily::Gu, 5, 2, 1, 4),
        (GroupFamily::Sp, 7, 3, 1, 4),
        (GroupFamily::GoEvenMinus, 5, 4, 2, 3),
    ] {
        let inv = build_inventory(family, ell, d, a, w).unwrap();
        assert_eq!(
            block_count_by_enumeration(&inv, w),
            block_count_proof_path(family, ell, d, a, w).unwrap()
        );
    }
}

#[test]
fn partition_values() {
    // Euler's pentagonal recurrence against a direct count of partitions.
    for t in 0..25 {
        assert_eq!(
            partition_count(t),
            Nat::from(kbound::combinatorics::partitions(t).count() as u64)
        );
    }
}
