use std::collections::BTreeSet;

use faclr::ring::{ratio, Rational};
use faclr::shapes::{
    chains, dim_skew, factorial, h_between, h_skew, interval, partitions_in_box, Partition,
    SkewShape,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0usize..=6, 0..=5).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

/// Standard tableaux of ν/μ counted by removing corners one at a time.
fn count_standard(mu: &Partition, nu: &Partition) -> BigInt {
    if mu == nu {
        return BigInt::from(1);
    }
    nu.covers_below()
        .into_iter()
        .filter(|(p, _)| mu.is_subset_of(p))
        .map(|(p, _)| count_standard(mu, &p))
        .sum()
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(p in partition()) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
    }

    #[test]
    fn upward_covers_count_distinct_parts(p in partition()) {
        let distinct: BTreeSet<usize> = p.parts().iter().copied().collect();
        prop_assert_eq!(p.covers_above(None).len(), distinct.len() + 1);
    }

    #[test]
    fn hook_product_matches_standard_count(p in partition()) {
        prop_assume!(p.size() <= 8);
        let dim = count_standard(&Partition::empty(), &p);
        prop_assert_eq!(p.hook_product() * &dim, factorial(p.size()));
        prop_assert_eq!(dim_skew(&SkewShape::normal(p.clone())), dim);
    }

    #[test]
    fn skew_dimension_counts_chains(a in partition(), b in partition()) {
        let (mu, nu) = if a.is_subset_of(&b) { (a, b) } else { (Partition::empty(), b) };
        prop_assume!(nu.size() - mu.size() <= 7);
        let shape = SkewShape::new(nu.clone(), mu.clone()).unwrap();
        let n_chains = chains(&mu, &nu).unwrap().count();
        prop_assert_eq!(dim_skew(&shape), BigInt::from(n_chains));
        prop_assert_eq!(dim_skew(&shape), count_standard(&mu, &nu));
    }
}

#[test]
fn skew_hook_datum() {
    let theta: SkewShape = "3,2/1".parse().unwrap();
    assert_eq!(dim_skew(&theta), BigInt::from(5));
    assert_eq!(h_skew(&theta), ratio(24, 5));
    assert_eq!(
        h_between(&"1".parse().unwrap(), &"3,2".parse().unwrap()).unwrap(),
        ratio(24, 5)
    );
}

#[test]
fn normal_hook_is_integer_product() {
    for p in partitions_in_box(3, 3) {
        assert_eq!(
            h_skew(&SkewShape::normal(p.clone())),
            Rational::from_integer(p.hook_product())
        );
    }
}

#[test]
fn box_and_interval_sizes() {
    assert_eq!(partitions_in_box(2, 2).len(), 6);
    assert_eq!(partitions_in_box(3, 3).len(), 20);
    assert_eq!(partitions_in_box(4, 4).len(), 70);
    let all = partitions_in_box(3, 3);
    let lo: Partition = "1".parse().unwrap();
    let hi: Partition = "3,2".parse().unwrap();
    let expected = all
        .iter()
        .filter(|p| lo.is_subset_of(p) && p.is_subset_of(&hi))
        .count();
    assert_eq!(interval(&lo, &hi).len(), expected);
}

#[test]
fn chain_from_non_contained_is_an_error() {
    assert!(chains(&"2".parse().unwrap(), &"1,1".parse().unwrap()).is_err());
}
