use faclr::facschur::{
    eval_at_partition, fac_schur, fac_schur_det, fac_schur_skew, g_coeff, schur, schur_tableau,
    shifted_schur, vanishing_diagonal, SeqSpec,
};
use faclr::ring::{MultiPoly, Rational};
use faclr::shapes::{partitions_in_box, Partition, SkewShape};

fn small(n: usize, max: usize) -> Vec<Partition> {
    partitions_in_box(n, max)
        .into_iter()
        .filter(|p| p.size() <= max)
        .collect()
}

#[test]
fn two_definitions_agree() {
    let a = SeqSpec::symbolic_a();
    for n in 1..=3 {
        for lambda in small(n, 4) {
            assert_eq!(
                fac_schur_det(&lambda, n, &a).unwrap(),
                fac_schur(&lambda, n, &a).unwrap(),
                "{lambda} n={n}"
            );
            assert_eq!(
                schur(&lambda, n).unwrap(),
                schur_tableau(&lambda, n).unwrap(),
                "{lambda} n={n}"
            );
        }
    }
}

#[test]
fn top_component_is_classical_and_rest_is_lower() {
    let a = SeqSpec::symbolic_a();
    for n in 1..=3 {
        for lambda in small(n, 4) {
            let f = fac_schur(&lambda, n, &a).unwrap();
            let s = schur(&lambda, n).unwrap();
            assert_eq!(f.homogeneous_component(lambda.size() as u32), s);
            let rest = &f - &s;
            assert!(
                rest.x_degree().is_none_or(|d| d < lambda.size() as u32),
                "{lambda}"
            );
        }
    }
}

#[test]
fn vanishing_and_diagonal_values() {
    let n = 3;
    let parts = partitions_in_box(3, 2);
    for lambda in &parts {
        for rho in &parts {
            let v = eval_at_partition(lambda, rho, n).unwrap();
            if !lambda.is_subset_of(rho) {
                assert!(v.is_zero(), "{lambda} at {rho}");
            } else if lambda == rho {
                assert_eq!(
                    v,
                    vanishing_diagonal(lambda, n, &SeqSpec::symbolic_a()).unwrap()
                );
            }
        }
    }
}

#[test]
fn shifted_diagonal_is_hook_product() {
    let n = 3;
    for lambda in partitions_in_box(3, 3) {
        let d = vanishing_diagonal(&lambda, n, &SeqSpec::Shifted).unwrap();
        assert_eq!(
            d,
            MultiPoly::constant(Rational::from_integer(lambda.hook_product())),
            "{lambda}"
        );
        let point: Vec<MultiPoly> = (1..=n)
            .map(|k| MultiPoly::integer((lambda.part(k) + n - k) as i64))
            .collect();
        let direct = shifted_schur(&lambda, n)
            .unwrap()
            .compose_x(&point)
            .unwrap();
        assert_eq!(direct, d);
    }
}

#[test]
fn classical_expansion_reassembles() {
    for n in 1..=3 {
        for lambda in small(n, 4) {
            let mut total = MultiPoly::zero();
            for nu in partitions_in_box(n, 4) {
                if nu.is_subset_of(&lambda) {
                    total += &(&g_coeff(&lambda, &nu, n).unwrap() * &schur(&nu, n).unwrap());
                }
            }
            assert_eq!(
                total,
                fac_schur(&lambda, n, &SeqSpec::symbolic_a()).unwrap(),
                "{lambda} n={n}"
            );
        }
    }
}

#[test]
fn skew_of_normal_is_normal() {
    let b = SeqSpec::symbolic_b();
    for lambda in partitions_in_box(2, 2) {
        assert_eq!(
            fac_schur_skew(&SkewShape::normal(lambda.clone()), 2, &b).unwrap(),
            fac_schur(&lambda, 2, &b).unwrap()
        );
    }
}

#[test]
fn zero_sequence_gives_classical() {
    for lambda in partitions_in_box(3, 2) {
        assert_eq!(
            fac_schur(&lambda, 3, &SeqSpec::Zero).unwrap(),
            schur(&lambda, 3).unwrap()
        );
    }
}
