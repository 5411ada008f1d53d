use num_traits::{One, Zero};
use proptest::prelude::*;

use t0enum_core::exactmath::{
    b_tau, binom, binom_count, c_tau, count, factorial, falling, lambda, nu, nu_le, partition_types, pow2,
    stirling1, stirling1_row, stirling2, stirling2_row, Count, PartitionType,
};
use t0enum_core::RowConvention;

#[test]
fn falling_power_of_two_expands_in_signed_stirling() {
    for m in 1..=8 {
        for n in 1..=8 {
            let lhs: Count = (1..=n).map(|i| num_traits::pow(pow2(i), m) * stirling1(n, i)).sum();
            assert_eq!(lhs, falling(&pow2(m), n), "m={m} n={n}");
        }
    }
}

#[test]
fn stirling_matrices_are_inverse() {
    for n in 0..=10 {
        for k in 0..=n {
            let dot: Count = (k..=n).map(|j| stirling2(n, j) * stirling1(j, k)).sum();
            assert_eq!(dot, count(u8::from(n == k)), "n={n} k={k}");
        }
    }
}

#[test]
fn partition_type_weights_sum_to_bell_and_factorial() {
    for n in 1..=8 {
        let types = partition_types(n);
        let bell: Count = (0..=n).map(|k| stirling2(n, k)).sum();
        assert_eq!(types.iter().map(b_tau).sum::<Count>(), bell);
        assert_eq!(types.iter().map(c_tau).sum::<Count>(), factorial(n));
        for k in 1..=n {
            let signed: Count = types
                .iter()
                .filter(|t| t.blocks() == k)
                .map(|t| if (n - k) % 2 == 0 { c_tau(t) } else { -c_tau(t) })
                .sum();
            assert_eq!(signed, stirling1(n, k), "n={n} k={k}");
        }
    }
}

#[test]
fn block_unions_of_singletons_are_binomials() {
    for n in 1..=7 {
        let singletons = PartitionType::new(vec![n]);
        for k in 0..=n {
            assert_eq!(nu(&singletons, k), binom(n as i64, k as i64));
        }
        assert_eq!(nu_le(&singletons, n), pow2(n) - 1);
    }
    let tau = PartitionType::new(vec![1, 1, 0]);
    assert_eq!(nu(&tau, 2), count(1));
    assert_eq!(nu_le(&tau, 2), count(2));
    assert_eq!(nu_le(&tau, tau.sigma()), pow2(tau.blocks()) - 1);
}

#[test]
fn lambda_reference_values() {
    assert_eq!(lambda(RowConvention::Ordered, &count(3), 2), count(9));
    assert_eq!(lambda(RowConvention::OrderedDistinct, &count(4), 2), count(12));
    assert_eq!(lambda(RowConvention::Multiset, &count(3), 4), count(15));
    assert_eq!(lambda(RowConvention::Multiset, &count(2), 3), count(4));
    assert_eq!(lambda(RowConvention::UnorderedDistinct, &count(4), 2), count(6));
}

proptest! {
    #[test]
    fn pascal_rule(n in 1i64..60, k in 1i64..60) {
        prop_assert_eq!(binom(n, k), binom(n - 1, k - 1) + binom(n - 1, k));
    }

    #[test]
    fn binomial_is_falling_over_factorial(x in 0u64..10_000, j in 0usize..12) {
        let x = count(x);
        prop_assert_eq!(binom_count(&x, j) * factorial(j), falling(&x, j));
    }

    #[test]
    fn stirling_recurrences(n in 1usize..25, k in 1usize..25) {
        prop_assert_eq!(stirling2(n, k), k * stirling2(n - 1, k) + stirling2(n - 1, k - 1));
        prop_assert_eq!(stirling1(n, k), stirling1(n - 1, k - 1) - (n - 1) * stirling1(n - 1, k));
    }

    #[test]
    fn stirling_rows_match_entries(n in 0usize..30) {
        let s1 = stirling1_row(n);
        let s2 = stirling2_row(n);
        for k in 0..=n {
            prop_assert_eq!(&s1[k], &stirling1(n, k));
            prop_assert_eq!(&s2[k], &stirling2(n, k));
        }
        let signed_total: Count = s1.iter().sum();
        prop_assert_eq!(signed_total.is_zero(), n >= 2);
    }

    #[test]
    fn lambda_conventions_are_consistent(i in 0u64..40, j in 0usize..8) {
        let x = count(i);
        let distinct = lambda(RowConvention::OrderedDistinct, &x, j);
        prop_assert_eq!(&distinct, &falling(&x, j));
        prop_assert_eq!(lambda(RowConvention::UnorderedDistinct, &x, j) * factorial(j), distinct);
        prop_assert_eq!(lambda(RowConvention::Ordered, &x, j), num_traits::pow(x.clone(), j));
        let multiset = lambda(RowConvention::Multiset, &x, j);
        let expected = if i + j as u64 == 0 { Count::one() } else { binom_count(&(x + j - 1u32), j) };
        prop_assert_eq!(multiset, expected);
    }
}
