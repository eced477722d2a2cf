//! The acceptance criteria, each a self-contained exact check.

use std::fmt;
use std::time::Instant;

use crate::cli;
use crate::error::Result;
use crate::facschur::{fac_schur, fac_schur_det, g_coeff, schur, SeqSpec};
use crate::ring::{ratio, MultiPoly};
use crate::shapes::{dim_skew, h_skew, partitions_in_box, Partition, SkewShape};
use crate::verify::{run_suite, RunConfig, Suite, SuiteReport, DEFAULT_POINTS, DEFAULT_SEED};

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: u32,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{tag} {:>2} {}: {} ({} ms)",
            self.id, self.title, self.detail, self.millis
        )
    }
}

pub struct Criterion {
    pub id: u32,
    pub title: &'static str,
    check: fn() -> (bool, String),
}

impl Criterion {
    pub fn run(&self) -> Outcome {
        let start = Instant::now();
        let (passed, detail) = (self.check)();
        Outcome {
            id: self.id,
            title: self.title,
            passed,
            detail,
            millis: start.elapsed().as_millis(),
        }
    }
}

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            id: 1,
            title: "determinant and tableau definitions agree",
            check: dual_definition,
        },
        Criterion {
            id: 2,
            title: "vanishing at a_rho",
            check: || suite(Suite::Vanishing, cfg33()),
        },
        Criterion {
            id: 3,
            title: "four-engine agreement for f",
            check: || suite(Suite::OracleAgreement, cfg33()),
        },
        Criterion {
            id: 4,
            title: "square of the column coefficients",
            check: || suite(Suite::Fact, RunConfig::default().with_n(6)),
        },
        Criterion {
            id: 5,
            title: "degeneration to classical LR",
            check: || suite(Suite::Degeneration, cfg33()),
        },
        Criterion {
            id: 6,
            title: "transpose symmetry of f",
            check: || {
                suite(
                    Suite::Symmetry,
                    RunConfig::default().with_box(4, 4).with_n(4),
                )
            },
        },
        Criterion {
            id: 7,
            title: "skew hook product of 3,2/1",
            check: skew_hook_datum,
        },
        Criterion {
            id: 8,
            title: "H ratio and c_hh at random points",
            check: || suite(Suite::Hh, cfg33()),
        },
        Criterion {
            id: 9,
            title: "bar-move identities",
            check: || {
                suite(
                    Suite::SPlusMinus,
                    RunConfig::default().with_box(2, 2).with_n(2),
                )
            },
        },
        Criterion {
            id: 10,
            title: "expansion in classical Schur polynomials",
            check: g_expansion,
        },
        Criterion {
            id: 11,
            title: "stability in n",
            check: || suite(Suite::Stability, cfg33()),
        },
        Criterion {
            id: 12,
            title: "deterministic table and verify output",
            check: determinism,
        },
    ]
}

pub fn run_all() -> Vec<Outcome> {
    criteria().iter().map(Criterion::run).collect()
}

fn cfg33() -> RunConfig {
    RunConfig {
        n: 3,
        rows: 3,
        cols: 3,
        seed: DEFAULT_SEED,
        points: DEFAULT_POINTS,
    }
}

fn suite(s: Suite, cfg: RunConfig) -> (bool, String) {
    summarize(run_suite(s, &cfg))
}

fn summarize(r: SuiteReport) -> (bool, String) {
    let mut detail = format!("{} checks passed, {} failed", r.passed, r.failed);
    if let Some(first) = r.failures.first() {
        detail.push_str(&format!("; first failure: {first}"));
    }
    (r.ok() && r.passed > 0, detail)
}

fn small_partitions(max_size: usize, n: usize) -> Vec<Partition> {
    partitions_in_box(n, max_size)
        .into_iter()
        .filter(|p| p.size() <= max_size)
        .collect()
}

fn dual_definition() -> (bool, String) {
    let a = SeqSpec::symbolic_a();
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in [2, 3] {
        for lambda in small_partitions(4, n) {
            let same = fac_schur_det(&lambda, n, &a)
                .and_then(|d| fac_schur(&lambda, n, &a).map(|t| d == t));
            checked += 1;
            if !matches!(same, Ok(true)) {
                bad.push(format!("{lambda} (n={n})"));
            }
        }
    }
    (
        bad.is_empty(),
        format!("{checked} shapes compared, mismatches: {bad:?}"),
    )
}

fn skew_hook_datum() -> (bool, String) {
    let theta: SkewShape = "3,2/1".parse().expect("valid shape");
    let h = h_skew(&theta);
    let d = dim_skew(&theta);
    let ok = h == ratio(24, 5) && d == 5.into();
    (
        ok,
        format!("h = {}, dim = {d}", crate::ring::format_rational(&h)),
    )
}

fn g_reassembles(lambda: &Partition, n: usize) -> Result<bool> {
    let mut total = MultiPoly::zero();
    for nu in partitions_in_box(n, lambda.part(1)) {
        if nu.is_subset_of(lambda) {
            total += &(&g_coeff(lambda, &nu, n)? * &schur(&nu, n)?);
        }
    }
    Ok(total == fac_schur(lambda, n, &SeqSpec::symbolic_a())?)
}

fn g_expansion() -> (bool, String) {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 1..=3 {
        for lambda in small_partitions(4, n) {
            checked += 1;
            if !matches!(g_reassembles(&lambda, n), Ok(true)) {
                bad.push(format!("{lambda} (n={n})"));
            }
        }
    }
    (
        bad.is_empty(),
        format!("{checked} shapes reassembled, mismatches: {bad:?}"),
    )
}

fn capture(args: &[&str]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(args.iter().map(|s| s.to_string()), &mut out, &mut err);
    (code, out)
}

fn determinism() -> (bool, String) {
    let runs: [&[&str]; 3] = [
        &[
            "faclr", "table", "--fs", "--box", "2x2", "--n", "2", "--format", "json",
        ],
        &[
            "faclr", "table", "--box", "2x2", "--n", "2", "--format", "csv",
        ],
        &[
            "faclr", "verify", "--box", "2x2", "--n", "2", "--seed", "42", "--format", "json",
        ],
    ];
    let mut notes = Vec::new();
    let mut ok = true;
    for args in runs {
        let (c1, first) = capture(args);
        let (c2, second) = capture(args);
        let same = c1 == 0 && c2 == 0 && first == second && !first.is_empty();
        ok &= same;
        notes.push(format!(
            "{}: {} bytes{}",
            args[1..].join(" "),
            first.len(),
            if same { "" } else { " DIFFER" }
        ));
    }
    (ok, notes.join("; "))
}
