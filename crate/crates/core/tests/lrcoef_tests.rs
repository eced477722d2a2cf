use faclr::facschur::{a_rho_values, fac_schur_skew_at, SeqSpec};
use faclr::lrcoef::{
    a_weight_value, c_base, c_hh, c_recurrence, c_tableau, c_tableau_all, classical_lr,
    classical_lr_fits, classical_lr_lattice, f_hook, f_hook_rational, f_tableau, h_eval,
    hprime_eval, s_of_r, telescoping_sum, Recurrence,
};
use faclr::ring::{Family, IndexRule, MultiPoly, Rational, Specialization};
use faclr::shapes::{
    chains, factorial, h_between, interval, partitions_in_box, skew_shapes_in_box, Partition,
    ShapeChain, SkewShape,
};
use faclr::tableaux::Tableau;
use faclr::verify::random_points;
use num_bigint::BigInt;
use num_traits::{One, Zero};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn sym() -> (SeqSpec, SeqSpec) {
    (SeqSpec::symbolic_a(), SeqSpec::symbolic_b())
}

fn shifted_point() -> Specialization {
    Specialization::with_rules(IndexRule::Shifted, IndexRule::Shifted)
}

#[test]
fn classical_counts_agree_and_are_symmetric() {
    let parts: Vec<Partition> = partitions_in_box(6, 6)
        .into_iter()
        .filter(|q| q.size() <= 6)
        .collect();
    for nu in &parts {
        for lambda in &parts {
            for mu in &parts {
                if lambda.size() + mu.size() != nu.size()
                    || !lambda.is_subset_of(nu)
                    || !mu.is_subset_of(nu)
                {
                    continue;
                }
                let x = classical_lr_lattice(lambda, mu, nu);
                assert_eq!(x, classical_lr_fits(lambda, mu, nu), "{lambda} {mu} {nu}");
                assert_eq!(
                    x,
                    classical_lr_lattice(mu, lambda, nu),
                    "{lambda} {mu} {nu}"
                );
            }
        }
    }
}

#[test]
fn classical_example_tableau_fits() {
    let t = Tableau::parse_rows("1 1 / 2 2 / 3").unwrap();
    let target: SkewShape = "4,3,1/2,1".parse().unwrap();
    assert!(faclr::tableaux::fits(&t, &target).unwrap().is_some());
    assert!(classical_lr(&p("2,2,1"), &p("2,1"), &p("4,3,1")).unwrap() >= BigInt::one());
}

#[test]
fn base_case_matches_tableau_engine() {
    let (a, b) = sym();
    for theta in skew_shapes_in_box(3, 3) {
        if theta.size() > 4 {
            continue;
        }
        for mu in partitions_in_box(3, 2) {
            let base = c_base(&theta, &mu, 3, &a, &b).unwrap();
            let tab = c_tableau(&theta, &mu, &mu, 3, &a, &b).unwrap().value;
            assert_eq!(base, tab, "{theta} {mu}");
        }
    }
}

#[test]
fn recurrence_matches_tableau_on_two_rows() {
    let (a, b) = sym();
    let top = p("2,1");
    for theta in skew_shapes_in_box(2, 2)
        .into_iter()
        .filter(|t| t.outer().is_subset_of(&top))
    {
        let mut rec = Recurrence::new(&theta, 2, &a, &b);
        for mu in partitions_in_box(2, 2) {
            for nu in partitions_in_box(2, 2) {
                let t = c_tableau(&theta, &mu, &nu, 2, &a, &b).unwrap().value;
                assert_eq!(rec.coeff(&mu, &nu).unwrap(), t, "{theta} {mu} {nu}");
            }
        }
    }
    let one = c_recurrence(&"1".parse().unwrap(), &p("1"), &p("1,1"), 2, &a, &b).unwrap();
    assert_eq!(one.value, MultiPoly::one());
}

#[test]
fn all_targets_at_once_matches_single_targets() {
    let (a, b) = sym();
    let theta: SkewShape = "2,1/1".parse().unwrap();
    let mu = p("1");
    let all = c_tableau_all(&theta, &mu, 3, &a, &b).unwrap();
    for nu in partitions_in_box(3, 3) {
        let one = c_tableau(&theta, &mu, &nu, 3, &a, &b).unwrap().value;
        assert_eq!(all.get(&nu).cloned().unwrap_or_default(), one, "{nu}");
    }
}

/// The five tableaux of the skew example, each weight computed from the
/// displayed bars: an unbarred cell after j bars sits at the j-th diagram.
#[test]
fn example_chain_sum_by_hand() {
    let (a, b) = sym();
    let n = 2;
    let chain = ShapeChain::from_yamanouchi(p("2,1"), &[2, 1]).unwrap();
    let theta: SkewShape = "3,2/1".parse().unwrap();
    let mut total = MultiPoly::zero();
    for s in [
        ". 1 1 / 1' 2'",
        ". 1' 2' / 1 2",
        ". 1 2' / 1' 2",
        ". 1 2 / 1' 2'",
        ". 1' 2' / 2 2",
    ] {
        let t = Tableau::parse_rows(s).unwrap();
        let mut bars = 0;
        let mut prod = MultiPoly::one();
        for (cell, e) in t.in_column_order() {
            if t.is_barred(cell) {
                bars += 1;
                continue;
            }
            let rho = chain.diagram(bars);
            let idx = (rho.part(e) + n - e + 1) as i64;
            prod = &prod * &(&MultiPoly::a(idx) - &MultiPoly::b(e as i64 + cell.content()));
        }
        total += &prod;
    }
    assert_eq!(s_of_r(&theta, &chain, n, &a, &b).unwrap(), total);
}

#[test]
fn chain_sums_add_up_to_coefficient() {
    let (a, b) = sym();
    for theta in ["2,1", "3,2/1", "2,2/1", "1,1"] {
        let theta: SkewShape = theta.parse().unwrap();
        for (mu, nu) in [("1", "2,1"), ("0", "1,1"), ("1", "3"), ("2,1", "3,2")] {
            let (mu, nu) = (p(mu), p(nu));
            let sum: MultiPoly = chains(&mu, &nu)
                .unwrap()
                .map(|r| s_of_r(&theta, &r, 3, &a, &b).unwrap())
                .sum();
            assert_eq!(sum, c_tableau(&theta, &mu, &nu, 3, &a, &b).unwrap().value);
        }
    }
}

#[test]
fn top_degree_is_classical_and_beyond_vanishes() {
    let (a, b) = sym();
    let parts = partitions_in_box(3, 2);
    for theta in &parts {
        let th = SkewShape::normal(theta.clone());
        for mu in &parts {
            for nu in partitions_in_box(3, 3) {
                let c = c_tableau(&th, mu, &nu, 3, &a, &b).unwrap().value;
                if nu.size() == theta.size() + mu.size() {
                    let k = classical_lr(theta, mu, &nu).unwrap();
                    assert_eq!(c, MultiPoly::constant(Rational::from_integer(k)));
                } else if nu.size() > theta.size() + mu.size() {
                    assert!(c.is_zero());
                }
            }
        }
    }
}

#[test]
fn shifted_chain_sums_are_hook_ratios() {
    let s = shifted_point();
    let parts = partitions_in_box(3, 3);
    for mu in &parts {
        for rho in &parts {
            if !mu.is_subset_of(rho) {
                continue;
            }
            let h = h_between(mu, rho).unwrap();
            assert_eq!(h_eval(mu, rho, 3, &s).unwrap(), h.recip(), "{mu} {rho}");
            let sign = if (rho.size() - mu.size()) % 2 == 0 {
                1
            } else {
                -1
            };
            assert_eq!(
                hprime_eval(mu, rho, 3, &s).unwrap(),
                h.recip() * Rational::from_integer(sign.into())
            );
        }
    }
    assert_eq!(
        hprime_eval(&p("1"), &p("3,2"), 2, &s).unwrap(),
        Rational::new(5.into(), 24.into())
    );
}

#[test]
fn dual_chain_sums_cancel() {
    let parts = partitions_in_box(3, 2);
    for s in random_points(11, 3, (1, 8), (0, 0)) {
        for rho in &parts {
            for nu in &parts {
                if !rho.is_subset_of(nu) || rho == nu {
                    continue;
                }
                let total: Rational = interval(rho, nu)
                    .iter()
                    .map(|sigma| {
                        hprime_eval(rho, sigma, 3, &s).unwrap() * h_eval(sigma, nu, 3, &s).unwrap()
                    })
                    .sum();
                assert!(total.is_zero(), "{rho} {nu}");
            }
        }
    }
}

#[test]
fn ratio_of_evaluations_is_chain_sum() {
    let n = 3;
    let parts = partitions_in_box(3, 2);
    for s in random_points(5, 3, (1, 8), (0, 0)) {
        let a = SeqSpec::from_specialization(&s, Family::A);
        for mu in &parts {
            for nu in &parts {
                if !mu.is_subset_of(nu) {
                    continue;
                }
                let point = a_rho_values(nu, n, &a).unwrap();
                let num = fac_schur_skew_at(&SkewShape::normal(mu.clone()), &a, &point).unwrap();
                let den = fac_schur_skew_at(&SkewShape::normal(nu.clone()), &a, &point).unwrap();
                let q = num.as_constant().unwrap() / den.as_constant().unwrap();
                assert_eq!(q, h_eval(mu, nu, n, &s).unwrap());
            }
        }
    }
}

#[test]
fn telescoping_identity_vanishes() {
    for (i, s) in random_points(3, 4, (1, 5), (0, 0)).into_iter().enumerate() {
        for k in 2..=5 {
            let u: Vec<Rational> = (1..=k as i64).map(|j| a_weight_single(&s, j)).collect();
            assert!(telescoping_sum(&u).unwrap().is_zero(), "point {i}, k={k}");
        }
    }
}

fn a_weight_single(s: &Specialization, j: i64) -> Rational {
    s.value(faclr::ring::VarRef::a(j)).unwrap()
}

#[test]
fn hh_matches_tableau_at_random_points() {
    let n = 2;
    let parts = partitions_in_box(2, 2);
    let thetas: Vec<SkewShape> = ["1", "2", "1,1", "2,1", "2,1/1"]
        .iter()
        .map(|t| t.parse().unwrap())
        .collect();
    for s in random_points(99, 10, (1, 6), (-2, 6)) {
        let a = SeqSpec::from_specialization(&s, Family::A);
        let b = SeqSpec::from_specialization(&s, Family::B);
        for theta in &thetas {
            for mu in &parts {
                for nu in &parts {
                    let x = c_hh(theta, mu, nu, n, &s).unwrap();
                    let y = c_tableau(theta, mu, nu, n, &a, &b).unwrap().value;
                    assert_eq!(MultiPoly::constant(x), y, "{theta} {mu} {nu}");
                }
            }
        }
    }
}

#[test]
fn weight_needs_assigned_values() {
    assert!(a_weight_value(&p("1"), 2, &Specialization::new()).is_err());
    assert_eq!(
        a_weight_value(&p("1"), 2, &shifted_point()).unwrap(),
        Rational::from_integer(2.into())
    );
}

fn column(k: usize) -> Partition {
    Partition::new(vec![1; k]).unwrap()
}

fn two_column(n: usize, r: usize) -> Partition {
    let mut v = vec![2; r];
    v.extend(vec![1; n - r]);
    Partition::new(v).unwrap()
}

#[test]
fn column_square_values() {
    for n in 1..=5 {
        let col = column(n);
        for r in 0..=n {
            let nu = two_column(n, r);
            let closed: Rational = (0..=r)
                .map(|k| {
                    let sign = if (r - k) % 2 == 0 { 1 } else { -1 };
                    Rational::new(
                        factorial(n + 1) * sign,
                        factorial(k) * factorial(r - k) * BigInt::from(n - k + 1),
                    )
                })
                .sum();
            let expected = factorial(n - r);
            assert_eq!(closed, Rational::from_integer(expected.clone()));
            assert_eq!(f_hook(&col, &col, &nu).unwrap(), expected, "n={n} r={r}");
            assert_eq!(
                f_tableau(&col, &col, &nu, n).unwrap(),
                expected,
                "n={n} r={r}"
            );
        }
    }
}

#[test]
fn hook_formula_is_transpose_invariant() {
    let parts = partitions_in_box(3, 3);
    for lambda in &parts {
        for mu in &parts {
            for nu in &parts {
                assert_eq!(
                    f_hook_rational(lambda, mu, nu).unwrap(),
                    f_hook_rational(&lambda.conjugate(), &mu.conjugate(), &nu.conjugate()).unwrap()
                );
            }
        }
    }
}

#[test]
fn shifted_top_degree_is_classical() {
    let parts = partitions_in_box(2, 2);
    for lambda in &parts {
        for mu in &parts {
            for nu in partitions_in_box(3, 3) {
                if nu.size() == lambda.size() + mu.size() {
                    assert_eq!(
                        f_tableau(lambda, mu, &nu, 3).unwrap(),
                        classical_lr(lambda, mu, &nu).unwrap()
                    );
                }
            }
        }
    }
    assert_eq!(f_hook(&p("1"), &p("1"), &p("1")).unwrap(), BigInt::one());
    assert!(f_hook(&p("2"), &p("0"), &p("1")).unwrap().is_zero());
}
