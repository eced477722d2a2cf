//! Partitions, skew diagrams and saturated chains in Young's lattice.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{MultiPoly, Rational, VarRef};

/// A weakly decreasing sequence of positive parts. The empty partition is
/// the empty sequence.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Parse(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The partition `(c^r)`, r rows of length c.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition(vec![cols; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Length l(λ): the number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The 1-based part λ_i, zero past the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn is_subset_of(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count())
                .collect(),
        )
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Cell::new(i + 1, j)))
    }

    /// Adds a cell at the end of row `row` (1-based) if the result is a
    /// partition.
    pub fn add_cell(&self, row: usize) -> Option<Partition> {
        if row == 0 || row > self.len() + 1 || self.part(row) + 1 > self.part(row - 1) {
            return None;
        }
        let mut parts = self.0.clone();
        if row > parts.len() {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Some(Partition(parts))
    }

    pub fn remove_cell(&self, row: usize) -> Option<Partition> {
        if row == 0 || row > self.len() || self.part(row) == self.part(row + 1) {
            return None;
        }
        let mut parts = self.0.clone();
        parts[row - 1] -= 1;
        if parts[row - 1] == 0 {
            parts.pop();
        }
        Some(Partition(parts))
    }

    /// All σ with self → σ (and σ ⊆ bound), with the row of the added cell,
    /// in increasing row order.
    pub fn covers_above(&self, bound: Option<&Partition>) -> Vec<(Partition, usize)> {
        (1..=self.len() + 1)
            .filter_map(|r| self.add_cell(r).map(|p| (p, r)))
            .filter(|(p, _)| bound.is_none_or(|b| p.is_subset_of(b)))
            .collect()
    }

    /// All σ with σ → self, with the row of the removed cell.
    pub fn covers_below(&self) -> Vec<(Partition, usize)> {
        (1..=self.len())
            .filter_map(|r| self.remove_cell(r).map(|p| (p, r)))
            .collect()
    }

    pub fn hook_product(&self) -> BigInt {
        let conj = self.conjugate();
        self.cells()
            .map(|c| BigInt::from(self.part(c.row) - c.col + conj.part(c.col) - c.row + 1))
            .product()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("invalid partition `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

pub fn contains(mu: &Partition, nu: &Partition) -> bool {
    mu.is_subset_of(nu)
}

fn not_contained(inner: &Partition, outer: &Partition) -> Error {
    Error::NotContained {
        inner: inner.to_string(),
        outer: outer.to_string(),
    }
}

/// A cell (row, column), both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// c(α) = j − i.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// ν/μ with μ ⊆ ν.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.is_subset_of(&outer) {
            return Err(not_contained(&inner, &outer));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn normal(shape: Partition) -> Self {
        SkewShape {
            outer: shape,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_normal(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.row >= 1
            && c.col >= 1
            && c.col <= self.outer.part(c.row)
            && c.col > self.inner.part(c.row).min(self.outer.part(c.row))
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        (1..=self.rows())
            .flat_map(|i| {
                (self.inner.part(i) + 1..=self.outer.part(i)).map(move |j| Cell::new(i, j))
            })
            .collect()
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((o, i)) => SkewShape::new(o.parse()?, i.parse()?),
            None => Ok(SkewShape::normal(s.parse()?)),
        }
    }
}

impl From<Partition> for SkewShape {
    fn from(p: Partition) -> Self {
        SkewShape::normal(p)
    }
}

/// A saturated chain μ = ρ⁽⁰⁾ → … → ρ⁽ˡ⁾ = ν together with its Yamanouchi
/// symbol r₁…r_l.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShapeChain {
    diagrams: Vec<Partition>,
    rows: Vec<usize>,
}

impl ShapeChain {
    /// Rebuilds the chain from its start and Yamanouchi symbol.
    pub fn from_yamanouchi(start: Partition, rows: &[usize]) -> Result<Self> {
        let mut diagrams = vec![start];
        for &r in rows {
            let next = diagrams
                .last()
                .and_then(|p| p.add_cell(r))
                .ok_or_else(|| Error::Parse(format!("row {r} does not extend the chain")))?;
            diagrams.push(next);
        }
        Ok(ShapeChain {
            diagrams,
            rows: rows.to_vec(),
        })
    }

    pub fn trivial(shape: Partition) -> Self {
        ShapeChain {
            diagrams: vec![shape],
            rows: Vec::new(),
        }
    }

    pub fn diagrams(&self) -> &[Partition] {
        &self.diagrams
    }

    /// ρ⁽ⁱ⁾ for 0 ≤ i ≤ l.
    pub fn diagram(&self, i: usize) -> &Partition {
        &self.diagrams[i]
    }

    pub fn yamanouchi(&self) -> &[usize] {
        &self.rows
    }

    /// l, the number of steps.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn start(&self) -> &Partition {
        &self.diagrams[0]
    }

    pub fn end(&self) -> &Partition {
        self.diagrams
            .last()
            .expect("chain has at least one diagram")
    }
}

impl fmt::Display for ShapeChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ds: Vec<String> = self.diagrams.iter().map(|d| format!("({d})")).collect();
        write!(f, "{}", ds.join(" -> "))
    }
}

/// Lazily enumerates saturated chains from `mu` to `nu` in lexicographic
/// order of their Yamanouchi symbols.
pub struct Chains {
    target: Partition,
    diagrams: Vec<Partition>,
    rows: Vec<usize>,
    options: Vec<(Vec<(Partition, usize)>, usize)>,
    trivial: bool,
}

impl Iterator for Chains {
    type Item = ShapeChain;

    fn next(&mut self) -> Option<ShapeChain> {
        if self.trivial {
            self.trivial = false;
            self.options.clear();
            return Some(ShapeChain::trivial(self.target.clone()));
        }
        loop {
            let (opts, next) = self.options.last_mut()?;
            if *next >= opts.len() {
                self.options.pop();
                self.diagrams.pop();
                self.rows.pop();
                continue;
            }
            let (sigma, row) = opts[*next].clone();
            *next += 1;
            if sigma == self.target {
                let mut diagrams = self.diagrams.clone();
                diagrams.push(sigma);
                let mut rows = self.rows.clone();
                rows.push(row);
                return Some(ShapeChain { diagrams, rows });
            }
            let opts = sigma.covers_above(Some(&self.target));
            self.diagrams.push(sigma);
            self.rows.push(row);
            self.options.push((opts, 0));
        }
    }
}

pub fn chains(mu: &Partition, nu: &Partition) -> Result<Chains> {
    if !mu.is_subset_of(nu) {
        return Err(not_contained(mu, nu));
    }
    Ok(Chains {
        target: nu.clone(),
        diagrams: vec![mu.clone()],
        rows: Vec::new(),
        options: vec![(mu.covers_above(Some(nu)), 0)],
        trivial: mu == nu,
    })
}

/// Number of standard tableaux of the skew shape (saturated chain count).
pub fn dim_skew(shape: &SkewShape) -> BigInt {
    fn count(rho: &Partition, top: &Partition, memo: &mut HashMap<Partition, BigInt>) -> BigInt {
        if rho == top {
            return BigInt::one();
        }
        if let Some(v) = memo.get(rho) {
            return v.clone();
        }
        let total = rho
            .covers_above(Some(top))
            .iter()
            .map(|(sigma, _)| count(sigma, top, memo))
            .sum::<BigInt>();
        memo.insert(rho.clone(), total.clone());
        total
    }
    count(shape.inner(), shape.outer(), &mut HashMap::new())
}

/// h(ν/μ) = |ν/μ|! / dim ν/μ.
pub fn h_skew(shape: &SkewShape) -> Rational {
    let fact: BigInt = (1..=shape.size()).map(BigInt::from).product();
    Rational::new(fact, dim_skew(shape))
}

pub fn h_between(inner: &Partition, outer: &Partition) -> Result<Rational> {
    Ok(h_skew(&SkewShape::new(outer.clone(), inner.clone())?))
}

fn check_len(rho: &Partition, n: usize) -> Result<()> {
    if rho.len() > n {
        return Err(Error::TooLong {
            partition: rho.to_string(),
            n,
        });
    }
    Ok(())
}

/// Indices of a_ρ = (a_{ρ₁+n}, …, a_{ρ_n+1}).
pub fn a_rho_indices(rho: &Partition, n: usize) -> Result<Vec<i64>> {
    check_len(rho, n)?;
    Ok((1..=n).map(|i| (rho.part(i) + n - i + 1) as i64).collect())
}

pub fn a_rho_point(rho: &Partition, n: usize) -> Result<Vec<VarRef>> {
    Ok(a_rho_indices(rho, n)?.into_iter().map(VarRef::a).collect())
}

/// |a_ρ| as a linear polynomial in the a-variables.
pub fn a_weight(rho: &Partition, n: usize) -> Result<MultiPoly> {
    Ok(a_rho_indices(rho, n)?.into_iter().map(MultiPoly::a).sum())
}

/// Every partition fitting in a `rows × cols` box, ordered by size and then
/// lexicographically.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Partition> {
    fn rec(prefix: &mut Vec<usize>, rows: usize, max: usize, out: &mut Vec<Partition>) {
        out.push(Partition(prefix.clone()));
        if prefix.len() == rows {
            return;
        }
        for p in 1..=max {
            prefix.push(p);
            rec(prefix, rows, p, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), rows, cols, &mut out);
    out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
    out
}

/// All ρ with `lower ⊆ ρ ⊆ upper`.
pub fn interval(lower: &Partition, upper: &Partition) -> Vec<Partition> {
    if !lower.is_subset_of(upper) {
        return Vec::new();
    }
    partitions_in_box(upper.len(), upper.part(1))
        .into_iter()
        .filter(|p| lower.is_subset_of(p) && p.is_subset_of(upper))
        .collect()
}

/// Every skew shape κ ⊆ λ inside the box, including normal shapes.
pub fn skew_shapes_in_box(rows: usize, cols: usize) -> Vec<SkewShape> {
    let all = partitions_in_box(rows, cols);
    let mut out = Vec::new();
    for outer in &all {
        for inner in &all {
            if inner.is_subset_of(outer) {
                out.push(SkewShape {
                    outer: outer.clone(),
                    inner: inner.clone(),
                });
            }
        }
    }
    out
}

pub fn factorial(k: usize) -> BigInt {
    (1..=k).map(BigInt::from).product()
}
