//! Coefficient engines for c^ν_{θμ}(a,b) and its shifted specialization
//! f^ν_{λμ}.
//!
//! * [`c_tableau`] sums the weight
//!   ∏_{α unbarred} ((a_{ρ(α)})_{T(α)} − b_{T(α)+c(α)}) over 𝒯(θ, ν/μ), where
//!   (a_ρ)_k = a_{ρ_k+n−k+1}. For each plain tableau the sum over chains and
//!   bar placements is folded into a walk along the column word whose state is
//!   the current diagram ρ; [`s_of_r`] is the literal per-chain sum.
//! * [`Recurrence`] runs induction on |ν/μ| starting from s_θ(a_μ|b).
//! * [`c_hh`] evaluates the H/H' chain sums at a rational point.
//! * [`f_tableau`] and [`f_hook`] give the integers f^ν_{λμ}.

use std::collections::{BTreeMap, HashMap};
use std::ops::AddAssign;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::facschur::{a_rho_values, fac_schur_skew_at, SeqSpec};
use crate::ring::{Family, MultiPoly, Rational, Specialization, VarRef};
use crate::shapes::{
    a_rho_indices, chains, h_between, interval, Cell, Partition, ShapeChain, SkewShape,
};
use crate::tableaux::{
    column_word, enumerate_barred, enumerate_barred_k, enumerate_ssyt, fits, is_lattice,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Tableau,
    Recurrence,
    Hook,
    Oracle,
    Classical,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Tableau => "tableau",
            Engine::Recurrence => "recurrence",
            Engine::Hook => "hook",
            Engine::Oracle => "oracle",
            Engine::Classical => "classical",
        }
    }
}

impl std::str::FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tableau" => Ok(Engine::Tableau),
            "recurrence" => Ok(Engine::Recurrence),
            "hook" => Ok(Engine::Hook),
            "oracle" => Ok(Engine::Oracle),
            "classical" => Ok(Engine::Classical),
            _ => Err(Error::Parse(format!("unknown engine `{s}`"))),
        }
    }
}

/// A coefficient tagged with the engine that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LRResult {
    pub theta: SkewShape,
    pub mu: Partition,
    pub nu: Partition,
    pub n: usize,
    pub value: MultiPoly,
    pub engine: Engine,
}

impl LRResult {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "theta": self.theta.to_string(),
            "mu": self.mu.to_string(),
            "nu": self.nu.to_string(),
            "n": self.n,
            "engine": self.engine,
            "value": self.value,
        })
    }
}

fn check_len(p: &Partition, n: usize) -> Result<()> {
    if p.len() > n {
        return Err(Error::TooLong {
            partition: p.to_string(),
            n,
        });
    }
    Ok(())
}

/// Index of (a_ρ)_k = a_{ρ_k+n−k+1}.
pub fn a_rho_index(rho: &Partition, k: usize, n: usize) -> i64 {
    (rho.part(k) + n - k + 1) as i64
}

/// |a_ρ| under a sequence.
pub fn a_weight_seq(rho: &Partition, n: usize, seq: &SeqSpec) -> Result<MultiPoly> {
    a_rho_indices(rho, n)?
        .into_iter()
        .map(|i| seq.term(i))
        .sum()
}

/// (a_ρ)_e − b_{e+c(α)}.
pub fn cell_factor(
    rho: &Partition,
    entry: usize,
    cell: Cell,
    n: usize,
    aseq: &SeqSpec,
    bseq: &SeqSpec,
) -> Result<MultiPoly> {
    Ok(&aseq.term(a_rho_index(rho, entry, n))? - &bseq.term(entry as i64 + cell.content())?)
}

/// Values the tableau walk can accumulate.
trait Weight: Clone + for<'a> AddAssign<&'a Self> {
    fn nothing() -> Self;
    fn unit() -> Self;
    fn times(&self, other: &Self) -> Self;
    fn is_zero(&self) -> bool;
}

impl Weight for MultiPoly {
    fn nothing() -> Self {
        MultiPoly::zero()
    }
    fn unit() -> Self {
        MultiPoly::one()
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
}

impl Weight for BigInt {
    fn nothing() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// Σ over T ∈ 𝒯(θ, ν/μ) for every reachable ν ⊆ `bound` at once, or only
/// for ν = `bound` when `exact` is set.
///
/// Walking cw(T) left to right, each cell is either barred (the current
/// diagram grows in row T(α)) or unbarred (its factor is taken at the
/// current diagram, which is ρ(α)).
fn tableau_walk<W: Weight>(
    theta: &SkewShape,
    mu: &Partition,
    bound: Option<&Partition>,
    exact: bool,
    n: usize,
    mut factor: impl FnMut(&Partition, usize, Cell) -> Result<W>,
) -> Result<BTreeMap<Partition, W>> {
    let mut cache: HashMap<(Partition, usize, i64), W> = HashMap::new();
    let mut total: BTreeMap<Partition, W> = BTreeMap::new();
    let target_size = bound.filter(|_| exact).map(Partition::size);
    for t in enumerate_ssyt(theta, n) {
        let order = t.in_column_order();
        let mut states: HashMap<Partition, W> = HashMap::new();
        states.insert(mu.clone(), W::unit());
        for (idx, &(cell, e)) in order.iter().enumerate() {
            let remaining = order.len() - idx - 1;
            let mut next: HashMap<Partition, W> = HashMap::new();
            for (rho, v) in states {
                if let Some(sigma) = rho.add_cell(e) {
                    let fits_bound = bound.is_none_or(|b| sigma.is_subset_of(b));
                    let reachable =
                        target_size.is_none_or(|s| s.saturating_sub(sigma.size()) <= remaining);
                    if fits_bound && reachable {
                        *next.entry(sigma).or_insert_with(W::nothing) += &v;
                    }
                }
                if target_size.is_some_and(|s| s.saturating_sub(rho.size()) > remaining) {
                    continue;
                }
                let key = (rho.clone(), e, cell.content());
                let f = match cache.get(&key) {
                    Some(f) => f.clone(),
                    None => {
                        let f = factor(&rho, e, cell)?;
                        cache.insert(key, f.clone());
                        f
                    }
                };
                if !f.is_zero() {
                    *next.entry(rho).or_insert_with(W::nothing) += &v.times(&f);
                }
            }
            states = next;
        }
        for (rho, v) in states {
            if !exact || bound == Some(&rho) {
                *total.entry(rho).or_insert_with(W::nothing) += &v;
            }
        }
    }
    total.retain(|_, v| !v.is_zero());
    Ok(total)
}

/// c^ν_{θμ}(a,b) by the barred-tableau sum.
pub fn c_tableau(
    theta: &SkewShape,
    mu: &Partition,
    nu: &Partition,
    n: usize,
    aseq: &SeqSpec,
    bseq: &SeqSpec,
) -> Result<LRResult> {
    check_len(mu, n)?;
    check_len(nu, n)?;
    let value = if mu.is_subset_of(nu) {
        tableau_walk(theta, mu, Some(nu), true, n, |rho, e, cell| {
            cell_factor(rho, e, cell, n, aseq, bseq)
        })?
        .remove(nu)
        .unwrap_or_default()
    } else {
        MultiPoly::zero()
    };
    Ok(LRResult {
        theta: theta.clone(),
        mu: mu.clone(),
        nu: nu.clone(),
        n,
        value,
        engine: Engine::Tableau,
    })
}

/// All nonzero c^ν_{θμ}(a,b) for fixed θ and μ, keyed by ν.
pub fn c_tableau_all(
    theta: &SkewShape,
    mu: &Partition,
    n: usize,
    aseq: &SeqSpec,
    bseq: &SeqSpec,
) -> Result<BTreeMap<Partition, MultiPoly>> {
    check_len(mu, n)?;
    tableau_walk(theta, mu, None, false, n, |rho, e, cell| {
        cell_factor(rho, e, cell, n, aseq, bseq)
    })
}

fn shifted_factor(rho: &Partition, e: usize, cell: Cell, n: usize) -> BigInt {
    BigInt::from(rho.part(e) as i64 + n as i64 - 2 * e as i64 - cell.content() + 1)
}

/// f^ν_{λμ} from the integer weight ρ(α)_{T(α)} + n − 2T(α) − c(α) + 1.
pub fn f_tableau(lambda: &Partition, mu: &Partition, nu: &Partition, n: usize) -> Result<BigInt> {
    check_len(lambda, n)?;
    check_len(mu, n)?;
    check_len(nu, n)?;
    if !mu.is_subset_of(nu) {
        return Ok(BigInt::zero());
    }
    let theta = SkewShape::normal(lambda.clone());
    Ok(tableau_walk(&theta, mu, Some(nu), true, n, |rho, e, cell| {
        Ok(shifted_factor(rho, e, cell, n))
    })?
    .remove(nu)
    .unwrap_or_default())
}

/// Every nonzero f^ν_{λμ} for fixed λ, μ with l(ν) ≤ n.
pub fn f_tableau_all(
    lambda: &Partition,
    mu: &Partition,
    n: usize,
) -> Result<BTreeMap<Partition, BigInt>> {
    f_tableau_walk(lambda, mu, n, None)
}

/// Every nonzero f^ν_{λμ} with ν ⊆ `bound` and l(ν) ≤ n.
pub fn f_tableau_within(
    lambda: &Partition,
    mu: &Partition,
    n: usize,
    bound: &Partition,
) -> Result<BTreeMap<Partition, BigInt>> {
    f_tableau_walk(lambda, mu, n, Some(bound))
}

fn f_tableau_walk(
    lambda: &Partition,
    mu: &Partition,
    n: usize,
    bound: Option<&Partition>,
) -> Result<BTreeMap<Partition, BigInt>> {
    check_len(lambda, n)?;
    check_len(mu, n)?;
    if bound.is_some_and(|b| !mu.is_subset_of(b)) {
        return Ok(BTreeMap::new());
    }
    let theta = SkewShape::normal(lambda.clone());
    tableau_walk(&theta, mu, bound, false, n, |rho, e, cell| {
        Ok(shifted_factor(rho, e, cell, n))
    })
}

/// c^μ_{θμ}(a,b) = s_θ(a_μ|b).
pub fn c_base(
    theta: &SkewShape,
    mu: &Partition,
    n: usize,
    aseq: &SeqSpec,
    bseq: &SeqSpec,
) -> Result<MultiPoly> {
    check_len(mu, n)?;
    fac_schur_skew_at(theta, bseq, &a_rho_values(mu, n, aseq)?)
}

/// Memoized recurrence on |ν/μ|:
/// c^ν_{θμ} = (Σ_{μ→μ'} c^ν_{θμ'} − Σ_{ν'→ν} c^{ν'}_{θμ}) / (|a_ν| − |a_μ|).
pub struct Recurrence {
    theta: SkewShape,
    n: usize,
    aseq: SeqSpec,
    bseq: SeqSpec,
    memo: HashMap<(Partition, Partition), MultiPoly>,
}

impl Recurrence {
    pub fn new(theta: &SkewShape, n: usize, aseq: &SeqSpec, bseq: &SeqSpec) -> Self {
        Recurrence {
            theta: theta.clone(),
            n,
            aseq: aseq.clone(),
            bseq: bseq.clone(),
            memo: HashMap::new(),
        }
    }

    pub fn coeff(&mut self, mu: &Partition, nu: &Partition) -> Result<MultiPoly> {
        check_len(mu, self.n)?;
        check_len(nu, self.n)?;
        if !mu.is_subset_of(nu) {
            return Ok(MultiPoly::zero());
        }
        let key = (mu.clone(), nu.clone());
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let value = if mu == nu {
            c_base(&self.theta, mu, self.n, &self.aseq, &self.bseq)?
        } else {
            let mut diff = MultiPoly::zero();
            for (up, _) in mu.covers_above(Some(nu)) {
                diff += &self.coeff(&up, nu)?;
            }
            for (down, _) in nu.covers_below() {
                if mu.is_subset_of(&down) {
                    diff -= &self.coeff(mu, &down)?;
                }
            }
            let denom =
                &a_weight_seq(nu, self.n, &self.aseq)? - &a_weight_seq(mu, self.n, &self.aseq)?;
            if denom.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            diff.exact_div(&denom)?
        };
        self.memo.insert(key, value.clone());
        Ok(value)
    }
}

pub fn c_recurrence(
    theta: &SkewShape,
    mu: &Partition,
    nu: &Partition,
    n: usize,
    aseq: &SeqSpec,
    bseq: &SeqSpec,
) -> Result<LRResult> {
    let value = Recurrence::new(theta, n, aseq, bseq).coeff(mu, nu)?;
    Ok(LRResult {
        theta: theta.clone(),
        mu: mu.clone(),
        nu: nu.clone(),
        n,
        value,
        engine: Engine::Recurrence,
    })
}

fn check_chain_len(chain: &ShapeChain, n: usize) -> Result<()> {
    chain.diagrams().iter().try_for_each(|d| check_len(d, n))
}

/// 𝒮(R): the contribution of a single chain.
pub fn s_of_r(
    theta: &SkewShape,
    chain: &ShapeChain,
    n: usize,
    aseq: &SeqSpec,
    bseq: &SeqSpec,
) -> Result<MultiPoly> {
    check_chain_len(chain, n)?;
    let mut total = MultiPoly::zero();
    for b in enumerate_barred(theta, chain, n) {
        let mut prod = MultiPoly::one();
        for (cell, rho) in &b.rho_of {
            let e = b
                .tableau
                .get(*cell)
                .expect("assigned cell is in the tableau");
            prod = &prod * &cell_factor(rho, e, *cell, n, aseq, bseq)?;
        }
        total += &prod;
    }
    Ok(total)
}

/// (𝒮_k⁺(R), 𝒮_k⁻(R)).
pub fn s_k_pm(
    theta: &SkewShape,
    chain: &ShapeChain,
    k: usize,
    n: usize,
    aseq: &SeqSpec,
    bseq: &SeqSpec,
) -> Result<(MultiPoly, MultiPoly)> {
    check_chain_len(chain, n)?;
    let mut plus = MultiPoly::zero();
    let mut minus = MultiPoly::zero();
    for kb in enumerate_barred_k(theta, chain, k, n)? {
        let mut p = MultiPoly::one();
        let mut m = MultiPoly::one();
        for (cell, rho) in &kb.rho_plus {
            let e = kb
                .tableau
                .get(*cell)
                .expect("assigned cell is in the tableau");
            p = &p * &cell_factor(rho, e, *cell, n, aseq, bseq)?;
            m = &m * &cell_factor(&kb.rho_minus[cell], e, *cell, n, aseq, bseq)?;
        }
        plus += &p;
        minus += &m;
    }
    Ok((plus, minus))
}

/// |a_ρ| at a point; every needed a-index must have a value.
pub fn a_weight_value(rho: &Partition, n: usize, s: &Specialization) -> Result<Rational> {
    let mut total = Rational::zero();
    for i in a_rho_indices(rho, n)? {
        let v = VarRef::a(i);
        total += s.value(v).ok_or(Error::UnassignedVariable(v))?;
    }
    Ok(total)
}

struct Weights<'a> {
    n: usize,
    s: &'a Specialization,
    cache: HashMap<Partition, Rational>,
}

impl Weights<'_> {
    fn get(&mut self, rho: &Partition) -> Result<Rational> {
        if let Some(w) = self.cache.get(rho) {
            return Ok(w.clone());
        }
        let w = a_weight_value(rho, self.n, self.s)?;
        self.cache.insert(rho.clone(), w.clone());
        Ok(w)
    }
}

/// H(μ, ρ) = Σ_chains 1 / ∏_{i<r} (|a_ρ| − |a_{ρ⁽ⁱ⁾}|).
pub fn h_eval(mu: &Partition, rho: &Partition, n: usize, s: &Specialization) -> Result<Rational> {
    let mut w = Weights {
        n,
        s,
        cache: HashMap::new(),
    };
    let top = w.get(rho)?;
    let mut total = Rational::zero();
    for chain in chains(mu, rho)? {
        let mut prod = Rational::one();
        for d in &chain.diagrams()[..chain.len()] {
            prod *= &top - w.get(d)?;
        }
        if prod.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        total += prod.recip();
    }
    Ok(total)
}

/// H'(ρ, ν) = Σ_chains 1 / ∏_{i>r} (|a_ρ| − |a_{ρ⁽ⁱ⁾}|).
pub fn hprime_eval(
    rho: &Partition,
    nu: &Partition,
    n: usize,
    s: &Specialization,
) -> Result<Rational> {
    let mut w = Weights {
        n,
        s,
        cache: HashMap::new(),
    };
    let bottom = w.get(rho)?;
    let mut total = Rational::zero();
    for chain in chains(rho, nu)? {
        let mut prod = Rational::one();
        for d in &chain.diagrams()[1..] {
            prod *= &bottom - w.get(d)?;
        }
        if prod.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        total += prod.recip();
    }
    Ok(total)
}

/// c^ν_{θμ} = Σ_{μ⊆ρ⊆ν} s_θ(a_ρ|b) H(μ,ρ) H'(ρ,ν) at a rational point.
pub fn c_hh(
    theta: &SkewShape,
    mu: &Partition,
    nu: &Partition,
    n: usize,
    s: &Specialization,
) -> Result<Rational> {
    check_len(mu, n)?;
    check_len(nu, n)?;
    let aseq = SeqSpec::from_specialization(s, Family::A);
    let bseq = SeqSpec::from_specialization(s, Family::B);
    let mut total = Rational::zero();
    for rho in interval(mu, nu) {
        let s_theta = fac_schur_skew_at(theta, &bseq, &a_rho_values(&rho, n, &aseq)?)?;
        let s_theta = s_theta
            .as_constant()
            .ok_or_else(|| Error::UnassignedVariable(s_theta.variables()[0]))?;
        if s_theta.is_zero() {
            continue;
        }
        total += s_theta * h_eval(mu, &rho, n, s)? * hprime_eval(&rho, nu, n, s)?;
    }
    Ok(total)
}

/// Σ_{i=1}^{k} 1 / ((u₁−u₂)⋯(u₁−u_i)(u_k−u_i)⋯(u_k−u_{k−1})).
pub fn telescoping_sum(u: &[Rational]) -> Result<Rational> {
    let k = u.len();
    let mut total = Rational::zero();
    for i in 1..=k {
        let mut prod = Rational::one();
        for j in 2..=i {
            prod *= &u[0] - &u[j - 1];
        }
        for j in i..k {
            prod *= &u[k - 1] - &u[j - 1];
        }
        if prod.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        total += prod.recip();
    }
    Ok(total)
}

fn union(a: &Partition, b: &Partition) -> Partition {
    let len = a.len().max(b.len());
    Partition::new((1..=len).map(|i| a.part(i).max(b.part(i))).collect())
        .expect("union of partitions is a partition")
}

/// f^ν_{λμ} = Σ_{λ,μ⊆ρ⊆ν} (−1)^{|ν/ρ|} h(ρ) / (h(ν/ρ) h(ρ/λ) h(ρ/μ)).
pub fn f_hook(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigInt> {
    let total = f_hook_rational(lambda, mu, nu)?;
    if !total.is_integer() {
        return Err(Error::NonIntegerResult(crate::ring::format_rational(
            &total,
        )));
    }
    Ok(total.to_integer())
}

pub fn f_hook_rational(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Rational> {
    let low = union(lambda, mu);
    let mut total = Rational::zero();
    for rho in interval(&low, nu) {
        let sign = if (nu.size() - rho.size()).is_multiple_of(2) {
            1
        } else {
            -1
        };
        let num = Rational::from_integer(rho.hook_product() * sign);
        let den = h_between(&rho, nu)? * h_between(lambda, &rho)? * h_between(mu, &rho)?;
        total += num / den;
    }
    Ok(total)
}

/// Number of semistandard θ-tableaux fitting ν/μ.
pub fn fits_count(theta: &SkewShape, mu: &Partition, nu: &Partition) -> Result<BigInt> {
    if !mu.is_subset_of(nu) || theta.size() + mu.size() != nu.size() {
        return Ok(BigInt::zero());
    }
    let target = SkewShape::new(nu.clone(), mu.clone())?;
    let mut count = BigInt::zero();
    for t in enumerate_ssyt(theta, nu.len()) {
        if fits(&t, &target)?.is_some() {
            count += 1;
        }
    }
    Ok(count)
}

/// c^ν_{λμ} as the number of ν/μ-tableaux of weight λ with lattice column word.
pub fn classical_lr_lattice(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    if !mu.is_subset_of(nu) || lambda.size() + mu.size() != nu.size() {
        return BigInt::zero();
    }
    let shape = SkewShape::new(nu.clone(), mu.clone()).expect("containment checked");
    let n = lambda.len();
    let mut count = BigInt::zero();
    for t in enumerate_ssyt(&shape, n) {
        if t.weight(n) == lambda.parts() && is_lattice(&column_word(&t)) {
            count += 1;
        }
    }
    count
}

pub fn classical_lr_fits(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    fits_count(&SkewShape::normal(lambda.clone()), mu, nu).expect("containment checked")
}

/// c^ν_{λμ}, computed both ways and required to agree.
pub fn classical_lr(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigInt> {
    let by_lattice = classical_lr_lattice(lambda, mu, nu);
    let by_fits = classical_lr_fits(lambda, mu, nu);
    if by_lattice != by_fits {
        return Err(Error::EngineDisagreement(format!(
            "c^{nu}_{{{lambda};{mu}}}: lattice count {by_lattice} vs fits count {by_fits}"
        )));
    }
    Ok(by_lattice)
}
