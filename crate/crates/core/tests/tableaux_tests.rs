use faclr::shapes::{
    chains, dim_skew, partitions_in_box, skew_shapes_in_box, Partition, ShapeChain, SkewShape,
};
use faclr::tableaux::{
    enumerate_barred, enumerate_barred_k, enumerate_ssyt, enumerate_t, ssyt_count, Tableau,
};
use faclr::Error;
use num_bigint::BigInt;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn ssyt_enumeration_matches_count() {
    for theta in skew_shapes_in_box(3, 3) {
        for n in 1..=3 {
            let listed = enumerate_ssyt(&theta, n).count();
            assert_eq!(BigInt::from(listed), ssyt_count(&theta, n), "{theta} n={n}");
        }
    }
}

#[test]
fn every_barred_assignment_revalidates() {
    let theta: SkewShape = "3,2/1".parse().unwrap();
    for mu in partitions_in_box(2, 3) {
        for nu in partitions_in_box(2, 3) {
            if !mu.is_subset_of(&nu) {
                continue;
            }
            for b in enumerate_t(&theta, &mu, &nu, 2).unwrap() {
                assert!(b.validate(), "{}", b.tableau);
                assert_eq!(b.bars.len(), nu.size() - mu.size());
            }
        }
    }
}

#[test]
fn barred_set_is_bounded_by_tableaux_times_choices() {
    let theta: SkewShape = "2,2".parse().unwrap();
    let (mu, nu) = (p("1"), p("2,1"));
    let total = enumerate_t(&theta, &mu, &nu, 2).unwrap().count();
    let bound = ssyt_count(&theta, 2)
        * dim_skew(&SkewShape::new(nu.clone(), mu.clone()).unwrap())
        * BigInt::from(binomial(theta.size(), 2));
    assert!(BigInt::from(total) <= bound);
    assert!(total > 0);
}

#[test]
fn example_set_for_skew_theta() {
    let theta: SkewShape = "3,2/1".parse().unwrap();
    let chain = ShapeChain::from_yamanouchi(p("2,1"), &[2, 1]).unwrap();
    assert_eq!(chain.end(), &p("3,2"));
    let got: Vec<String> = enumerate_barred(&theta, &chain, 2)
        .map(|b| b.tableau.to_string())
        .collect();
    let mut expected = vec![
        ". 1 1 / 1' 2'",
        ". 1' 2' / 1 2",
        ". 1 2' / 1' 2",
        ". 1 2 / 1' 2'",
        ". 1' 2' / 2 2",
    ];
    let mut got_sorted = got.clone();
    got_sorted.sort();
    expected.sort();
    assert_eq!(got_sorted, expected);
    for s in expected {
        let t = Tableau::parse_rows(s).unwrap();
        assert_eq!(t.to_string(), s);
    }
}

#[test]
fn k_index_is_checked() {
    let chain = ShapeChain::from_yamanouchi(p("1"), &[1, 2]).unwrap();
    let theta: SkewShape = "2,1".parse().unwrap();
    assert_eq!(
        enumerate_barred_k(&theta, &chain, 0, 2).err(),
        Some(Error::IndexOutOfRange { index: 0, len: 2 })
    );
    assert!(enumerate_barred_k(&theta, &chain, 3, 2).is_err());
    assert!(enumerate_barred_k(&theta, &chain, 2, 2).is_ok());
}

#[test]
fn chains_partition_the_barred_set() {
    let theta: SkewShape = "2,1".parse().unwrap();
    let (mu, nu) = (p("1"), p("2,1"));
    let per_chain: usize = chains(&mu, &nu)
        .unwrap()
        .map(|r| enumerate_barred(&theta, &r, 2).count())
        .sum();
    assert_eq!(per_chain, enumerate_t(&theta, &mu, &nu, 2).unwrap().count());
}
