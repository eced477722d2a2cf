//! Identity checks grouped into named suites, each reporting pass/fail counts.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::facschur::{
    a_rho_values, eval_at_partition, fac_schur_skew_at, vanishing_diagonal, SeqSpec,
};
use crate::lrcoef::{
    a_weight_seq, c_hh, c_tableau, classical_lr, f_hook, f_tableau_within, h_eval, s_k_pm, s_of_r,
    Recurrence,
};
use crate::oracle::{product_expand_with, Oracle};
use crate::ring::{Family, MultiPoly, Rational, Specialization, VarRef};
use crate::shapes::{
    chains, factorial, partitions_in_box, skew_shapes_in_box, Partition, SkewShape,
};

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_POINTS: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Vanishing,
    Degeneration,
    Fact,
    Symmetry,
    SPlusMinus,
    Hh,
    Stability,
    OracleAgreement,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Vanishing,
        Suite::Degeneration,
        Suite::Fact,
        Suite::Symmetry,
        Suite::SPlusMinus,
        Suite::Hh,
        Suite::Stability,
        Suite::OracleAgreement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Vanishing => "vanishing",
            Suite::Degeneration => "degeneration",
            Suite::Fact => "fact",
            Suite::Symmetry => "symmetry",
            Suite::SPlusMinus => "s-plus-minus",
            Suite::Hh => "hh",
            Suite::Stability => "stability",
            Suite::OracleAgreement => "oracle-agreement",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

/// Parameters shared by the suites. Each suite reads the fields it needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub n: usize,
    pub rows: usize,
    pub cols: usize,
    pub seed: u64,
    pub points: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            n: 3,
            rows: 3,
            cols: 3,
            seed: DEFAULT_SEED,
            points: DEFAULT_POINTS,
        }
    }
}

impl RunConfig {
    pub fn with_box(mut self, rows: usize, cols: usize) -> Self {
        self.rows = rows;
        self.cols = cols;
        self
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.n = n;
        self
    }

    fn box_shape(&self) -> Partition {
        Partition::rectangle(self.rows, self.cols)
    }

    /// Partitions in the box that fit in n rows.
    fn partitions(&self) -> Vec<Partition> {
        partitions_in_box(self.rows.min(self.n), self.cols)
    }
}

const MAX_LISTED: usize = 20;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.to_string(),
            ..Default::default()
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.fail(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.failed += 1;
        if self.failures.len() < MAX_LISTED {
            self.failures.push(what);
        }
    }

    fn record<T>(&mut self, r: Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.fail(format!("{}: {e}", what()));
                None
            }
        }
    }

    fn merge(&mut self, other: SuiteReport) {
        self.passed += other.passed;
        self.failed += other.failed;
        let room = MAX_LISTED.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
    }

    fn merged(name: &str, parts: Vec<SuiteReport>) -> Self {
        let mut out = SuiteReport::new(name);
        for p in parts {
            out.merge(p);
        }
        out
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} passed, {} failed",
            self.name, self.passed, self.failed
        )?;
        for line in &self.failures {
            write!(f, "\n  {line}")?;
        }
        Ok(())
    }
}

pub fn run_suite(suite: Suite, cfg: &RunConfig) -> SuiteReport {
    let mut report = match suite {
        Suite::Vanishing => vanishing(cfg),
        Suite::Degeneration => degeneration(cfg),
        Suite::Fact => fact(cfg.n),
        Suite::Symmetry => symmetry(cfg),
        Suite::SPlusMinus => s_plus_minus(cfg),
        Suite::Hh => hh(cfg),
        Suite::Stability => stability(cfg),
        Suite::OracleAgreement => oracle_agreement(cfg),
    };
    report.name = suite.name().to_string();
    report
}

/// s_λ(a_ρ|a) = 0 for λ ⊄ ρ, and the hook-type product on the diagonal.
pub fn vanishing(cfg: &RunConfig) -> SuiteReport {
    let n = cfg.n;
    let parts = cfg.partitions();
    let reports = parts
        .par_iter()
        .map(|lambda| {
            let mut r = SuiteReport::new("vanishing");
            for rho in &parts {
                let what = || format!("s_{{{lambda}}}(a_{{{rho}}}|a), n={n}");
                let Some(v) = r.record(eval_at_partition(lambda, rho, n), what) else {
                    continue;
                };
                if !lambda.is_subset_of(rho) {
                    r.check(v.is_zero(), || format!("{}: expected 0, got {v}", what()));
                } else if lambda == rho {
                    let Some(d) =
                        r.record(vanishing_diagonal(lambda, n, &SeqSpec::symbolic_a()), what)
                    else {
                        continue;
                    };
                    r.check(v == d, || format!("{}: {v} != {d}", what()));
                }
            }
            r
        })
        .collect();
    SuiteReport::merged("vanishing", reports)
}

/// Top-degree coefficients are the classical constants; beyond that they vanish.
pub fn degeneration(cfg: &RunConfig) -> SuiteReport {
    let n = cfg.n;
    let parts = cfg.partitions();
    let (a, b) = (SeqSpec::symbolic_a(), SeqSpec::symbolic_b());
    let reports = parts
        .par_iter()
        .map(|theta| {
            let mut r = SuiteReport::new("degeneration");
            let th = SkewShape::normal(theta.clone());
            for mu in &parts {
                for nu in &parts {
                    let top = theta.size() + mu.size();
                    if nu.size() < top {
                        continue;
                    }
                    let what = || format!("c^{{{nu}}}_{{{theta};{mu}}}, n={n}");
                    let Some(c) = r.record(c_tableau(&th, mu, nu, n, &a, &b), what) else {
                        continue;
                    };
                    if nu.size() > top {
                        r.check(c.value.is_zero(), || {
                            format!("{}: expected 0, got {}", what(), c.value)
                        });
                        continue;
                    }
                    let Some(count) = r.record(classical_lr(theta, mu, nu), what) else {
                        continue;
                    };
                    let expected = MultiPoly::constant(Rational::from_integer(count));
                    r.check(c.value == expected, || {
                        format!("{}: {} != {expected}", what(), c.value)
                    });
                }
            }
            r
        })
        .collect();
    SuiteReport::merged("degeneration", reports)
}

fn column(k: usize) -> Partition {
    Partition::new(vec![1; k]).expect("column is a partition")
}

/// f^{(2^r 1^{m−r})}_{(1^m)(1^m)} = (m−r)! and every other ν ⊆ (2^m) gives 0,
/// for 1 ≤ m ≤ `n_max`.
pub fn fact(n_max: usize) -> SuiteReport {
    let reports = (1..=n_max)
        .into_par_iter()
        .map(|m| {
            let mut r = SuiteReport::new("fact");
            let col = column(m);
            let bound = Partition::rectangle(m, 2);
            let what = || format!("f_{{1^{m};1^{m}}}, n={m}");
            let Some(all) = r.record(f_tableau_within(&col, &col, m, &bound), what) else {
                return r;
            };
            for nu in partitions_in_box(m, 2) {
                let twos = nu.parts().iter().filter(|&&p| p == 2).count();
                let expected = if nu.len() == m {
                    factorial(m - twos)
                } else {
                    BigInt::zero()
                };
                let got = all.get(&nu).cloned().unwrap_or_default();
                r.check(got == expected, || {
                    format!("f^{{{nu}}}_{{1^{m};1^{m}}}: {got} != {expected}")
                });
            }
            r
        })
        .collect();
    SuiteReport::merged("fact", reports)
}

/// f^{νᵗ}_{λᵗμᵗ} = f^ν_{λμ} over a box, with n equal to the larger box side.
pub fn symmetry(cfg: &RunConfig) -> SuiteReport {
    let n = cfg.rows.max(cfg.cols);
    let bound = cfg.box_shape();
    let bound_t = bound.conjugate();
    let parts = partitions_in_box(cfg.rows, cfg.cols);
    let reports = parts
        .par_iter()
        .map(|lambda| {
            let mut r = SuiteReport::new("symmetry");
            for mu in &parts {
                let what = || format!("f_{{{lambda};{mu}}}, n={n}");
                let Some(direct) = r.record(f_tableau_within(lambda, mu, n, &bound), what) else {
                    continue;
                };
                let Some(dual) = r.record(
                    f_tableau_within(&lambda.conjugate(), &mu.conjugate(), n, &bound_t),
                    what,
                ) else {
                    continue;
                };
                for nu in &parts {
                    let x = direct.get(nu).cloned().unwrap_or_default();
                    let y = dual.get(&nu.conjugate()).cloned().unwrap_or_default();
                    r.check(x == y, || {
                        format!("{}: f^{{{nu}}} = {x} but transposed gives {y}", what())
                    });
                }
            }
            r
        })
        .collect();
    SuiteReport::merged("symmetry", reports)
}

/// Bar-move identities on every chain: per-k differences, their sum, and the
/// cancellation of interior terms across all chains from μ to ν.
pub fn s_plus_minus(cfg: &RunConfig) -> SuiteReport {
    let n = cfg.n;
    let (a, b) = (SeqSpec::symbolic_a(), SeqSpec::symbolic_b());
    let shapes = skew_shapes_in_box(cfg.rows.min(n), cfg.cols);
    let parts = cfg.partitions();
    let reports = shapes
        .par_iter()
        .map(|theta| {
            let mut r = SuiteReport::new("s-plus-minus");
            for mu in &parts {
                for nu in &parts {
                    if !mu.is_subset_of(nu) || mu == nu {
                        continue;
                    }
                    let what = || format!("theta={theta}, {mu} -> {nu}, n={n}");
                    if let Some(res) = r.record(bar_identities(theta, mu, nu, n, &a, &b), what) {
                        for msg in res {
                            r.check(msg.is_none(), || {
                                format!("{}: {}", what(), msg.clone().unwrap_or_default())
                            });
                        }
                    }
                }
            }
            r
        })
        .collect();
    SuiteReport::merged("s-plus-minus", reports)
}

fn bar_identities(
    theta: &SkewShape,
    mu: &Partition,
    nu: &Partition,
    n: usize,
    a: &SeqSpec,
    b: &SeqSpec,
) -> Result<Vec<Option<String>>> {
    let mut out = Vec::new();
    let mut interior_minus = MultiPoly::zero();
    let mut interior_plus = MultiPoly::zero();
    for chain in chains(mu, nu)? {
        let l = chain.len();
        let s = s_of_r(theta, &chain, n, a, b)?;
        let mut total = MultiPoly::zero();
        for k in 1..=l {
            let (plus, minus) = s_k_pm(theta, &chain, k, n, a, b)?;
            let step =
                &a_weight_seq(chain.diagram(k), n, a)? - &a_weight_seq(chain.diagram(k - 1), n, a)?;
            let diff = &plus - &minus;
            let expected = &step * &s;
            out.push(
                (diff != expected)
                    .then(|| format!("k={k} on {:?}: {diff} != {expected}", chain.yamanouchi())),
            );
            total += &diff;
            if k < l {
                interior_minus += &minus;
            }
            if k > 1 {
                interior_plus += &plus;
            }
        }
        let span = &a_weight_seq(nu, n, a)? - &a_weight_seq(mu, n, a)?;
        let expected = &span * &s;
        out.push((total != expected).then(|| {
            format!(
                "sum over k on {:?}: {total} != {expected}",
                chain.yamanouchi()
            )
        }));
    }
    out.push(
        (interior_minus != interior_plus)
            .then(|| format!("interior sums: {interior_minus} != {interior_plus}")),
    );
    Ok(out)
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(
        BigInt::from(rng.gen_range(-1_000_000i64..=1_000_000)),
        BigInt::from(rng.gen_range(1i64..=97)),
    )
}

/// A seeded point: pairwise-distinct rationals for a_lo..=a_hi and arbitrary
/// rationals for b_lo..=b_hi.
pub fn random_point(rng: &mut ChaCha8Rng, a: (i64, i64), b: (i64, i64)) -> Specialization {
    let mut s = Specialization::new();
    let mut used = Vec::new();
    for i in a.0..=a.1 {
        let v = loop {
            let v = random_rational(rng);
            if !used.contains(&v) {
                break v;
            }
        };
        used.push(v.clone());
        s.set(VarRef::a(i), v);
    }
    for i in b.0..=b.1 {
        s.set(VarRef::b(i), random_rational(rng));
    }
    s
}

pub fn random_points(seed: u64, count: usize, a: (i64, i64), b: (i64, i64)) -> Vec<Specialization> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_point(&mut rng, a, b)).collect()
}

/// Skew shapes whose outer diagram lies in (2,1).
pub fn small_thetas() -> Vec<SkewShape> {
    let top = Partition::new(vec![2, 1]).expect("valid");
    skew_shapes_in_box(2, 2)
        .into_iter()
        .filter(|t| t.outer().is_subset_of(&top))
        .collect()
}

/// At seeded random points: s_μ(a_ν|a)/s_ν(a_ν|a) = H(μ,ν), and c_hh agrees
/// with the tableau sum for θ inside (2,1).
pub fn hh(cfg: &RunConfig) -> SuiteReport {
    let n = cfg.n;
    let parts = cfg.partitions();
    let thetas = small_thetas();
    let hi = (n + cfg.cols + 2) as i64;
    let points = random_points(cfg.seed, cfg.points, (1, hi), (-(n as i64) - 2, hi));
    let reports = points
        .par_iter()
        .enumerate()
        .map(|(idx, s)| {
            let mut r = SuiteReport::new("hh");
            let aseq = SeqSpec::from_specialization(s, Family::A);
            let bseq = SeqSpec::from_specialization(s, Family::B);
            for mu in &parts {
                for nu in &parts {
                    if !mu.is_subset_of(nu) {
                        continue;
                    }
                    let what = || format!("point {idx}: H({mu},{nu}), n={n}");
                    if let Some(v) = r.record(ratio_check(mu, nu, n, &aseq, s), what) {
                        r.check(v.is_none(), || {
                            format!("{}: {}", what(), v.clone().unwrap_or_default())
                        });
                    }
                    for theta in &thetas {
                        let what = || format!("point {idx}: c^{{{nu}}}_{{{theta};{mu}}}, n={n}");
                        let Some(x) = r.record(c_hh(theta, mu, nu, n, s), what) else {
                            continue;
                        };
                        let Some(y) = r.record(c_tableau(theta, mu, nu, n, &aseq, &bseq), what)
                        else {
                            continue;
                        };
                        let y = y.value.as_constant().unwrap_or_default();
                        r.check(x == y, || format!("{}: hh {x} != tableau {y}", what()));
                    }
                }
            }
            r
        })
        .collect();
    SuiteReport::merged("hh", reports)
}

fn ratio_check(
    mu: &Partition,
    nu: &Partition,
    n: usize,
    aseq: &SeqSpec,
    s: &Specialization,
) -> Result<Option<String>> {
    let point = a_rho_values(nu, n, aseq)?;
    let num = fac_schur_skew_at(&SkewShape::normal(mu.clone()), aseq, &point)?;
    let den = fac_schur_skew_at(&SkewShape::normal(nu.clone()), aseq, &point)?;
    let (Some(num), Some(den)) = (num.as_constant(), den.as_constant()) else {
        return Ok(Some("non-constant evaluation".into()));
    };
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let h = h_eval(mu, nu, n, s)?;
    let q = num / den;
    Ok((q != h).then(|| format!("{q} != {h}")))
}

/// f_tableau(λ,μ,ν,m) is the same for m = n₀, n₀+1, n₀+2 with n₀ the
/// longest of the three lengths.
pub fn stability(cfg: &RunConfig) -> SuiteReport {
    let bound = cfg.box_shape();
    let parts = partitions_in_box(cfg.rows, cfg.cols);
    let reports = parts
        .par_iter()
        .map(|lambda| {
            let mut r = SuiteReport::new("stability");
            for mu in &parts {
                let start = lambda.len().max(mu.len()).max(1);
                let mut maps: BTreeMap<usize, BTreeMap<Partition, BigInt>> = BTreeMap::new();
                for m in start..=cfg.rows.max(start) + 2 {
                    let what = || format!("f_{{{lambda};{mu}}}, n={m}");
                    if let Some(map) = r.record(f_tableau_within(lambda, mu, m, &bound), what) {
                        maps.insert(m, map);
                    }
                }
                for nu in &parts {
                    let n0 = start.max(nu.len());
                    let vals: Vec<BigInt> = (n0..=n0 + 2)
                        .map(|m| {
                            maps.get(&m)
                                .and_then(|x| x.get(nu))
                                .cloned()
                                .unwrap_or_default()
                        })
                        .collect();
                    r.check(vals.windows(2).all(|w| w[0] == w[1]), || {
                        format!(
                            "f^{{{nu}}}_{{{lambda};{mu}}} for n={n0}..{}: {vals:?}",
                            n0 + 2
                        )
                    });
                }
            }
            r
        })
        .collect();
    SuiteReport::merged("stability", reports)
}

/// Four engines on f^ν_{λμ}: tableau sum, hook formula, shifted recurrence,
/// and the basis-expansion oracle.
pub fn oracle_agreement(cfg: &RunConfig) -> SuiteReport {
    let n = cfg.n;
    let bound = cfg.box_shape();
    let parts = cfg.partitions();
    let shifted = SeqSpec::Shifted;
    let reports = parts
        .par_iter()
        .map(|lambda| {
            let mut r = SuiteReport::new("oracle-agreement");
            let theta = SkewShape::normal(lambda.clone());
            let mut oracle = Oracle::new(n, &shifted);
            let mut rec = Recurrence::new(&theta, n, &shifted, &shifted);
            for mu in &parts {
                let what = || format!("f_{{{lambda};{mu}}}, n={n}");
                let Some(tab) = r.record(f_tableau_within(lambda, mu, n, &bound), what) else {
                    continue;
                };
                let Some(exp) =
                    r.record(product_expand_with(&mut oracle, &theta, mu, &shifted), what)
                else {
                    continue;
                };
                for nu in &parts {
                    let what = || format!("f^{{{nu}}}_{{{lambda};{mu}}}, n={n}");
                    match four_values(&tab, &exp.coeff(nu), &mut rec, lambda, mu, nu) {
                        Ok(vals) => r.check(vals.iter().all(|v| *v == vals[0]), || {
                            format!("{}: tableau/hook/recurrence/oracle = {vals:?}", what())
                        }),
                        Err(e) => r.fail(format!("{}: {e}", what())),
                    }
                }
            }
            r
        })
        .collect();
    SuiteReport::merged("oracle-agreement", reports)
}

fn integer_of(p: &MultiPoly) -> Result<BigInt> {
    let c = p
        .as_constant()
        .ok_or_else(|| Error::NonIntegerResult(p.to_string()))?;
    if !c.is_integer() {
        return Err(Error::NonIntegerResult(p.to_string()));
    }
    Ok(c.to_integer())
}

fn four_values(
    tab: &BTreeMap<Partition, BigInt>,
    oracle: &MultiPoly,
    rec: &mut Recurrence,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<[BigInt; 4]> {
    Ok([
        tab.get(nu).cloned().unwrap_or_default(),
        f_hook(lambda, mu, nu)?,
        integer_of(&rec.coeff(mu, nu)?)?,
        integer_of(oracle)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> RunConfig {
        RunConfig::default().with_box(2, 2).with_n(2)
    }

    #[test]
    fn suites_pass_on_small_box() {
        for suite in Suite::ALL {
            let cfg = if suite == Suite::Fact {
                small().with_n(4)
            } else {
                small()
            };
            let report = run_suite(suite, &cfg);
            assert!(report.ok(), "{report}");
            assert!(report.passed > 0, "{report}");
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn points_are_seeded_and_distinct() {
        let p = random_points(7, 3, (1, 8), (0, 4));
        assert_eq!(p, random_points(7, 3, (1, 8), (0, 4)));
        assert!(p.iter().all(|s| s.is_distinct_on(Family::A)));
        assert_ne!(p, random_points(8, 3, (1, 8), (0, 4)));
    }
}
