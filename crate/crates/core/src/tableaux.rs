//! Semistandard tableaux, column words, and the barred tableau sets used by
//! the coefficient engines.
//!
//! Column order lists cells from the right-most column to the left, top to
//! bottom inside a column; it is the reading order of the column word, so a
//! column-ordered run of barred cells reads off as a subword of `cw(T)`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::shapes::{chains, Cell, Chains, Partition, ShapeChain, SkewShape};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: SkewShape,
    /// Entries in row-major cell order.
    entries: Vec<usize>,
    barred: BTreeSet<Cell>,
}

impl Tableau {
    /// Builds a tableau from row-major entries; checks semistandardness.
    pub fn new(shape: SkewShape, entries: Vec<usize>) -> Result<Self> {
        let t = Tableau {
            shape,
            entries,
            barred: BTreeSet::new(),
        };
        if t.entries.len() != t.shape.size() {
            return Err(Error::SizeMismatch {
                cells: t.entries.len(),
                target: t.shape.size(),
            });
        }
        if !t.is_semistandard() {
            return Err(Error::Parse(format!(
                "filling of {} is not semistandard",
                t.shape
            )));
        }
        Ok(t)
    }

    /// Parses rows separated by `/`, entries by spaces; `.` marks a cell of
    /// the inner shape and a trailing `'` marks a barred entry.
    pub fn parse_rows(s: &str) -> Result<Self> {
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        let mut entries = Vec::new();
        let mut barred = BTreeSet::new();
        for (i, row) in s.split('/').enumerate() {
            let mut skipped = 0;
            let mut len = 0;
            for tok in row.split_whitespace() {
                len += 1;
                if tok == "." {
                    skipped += 1;
                    continue;
                }
                let (num, bar) = match tok.strip_suffix('\'') {
                    Some(t) => (t, true),
                    None => (tok, false),
                };
                let v: usize = num
                    .parse()
                    .map_err(|_| Error::Parse(format!("invalid entry `{tok}`")))?;
                if bar {
                    barred.insert(Cell::new(i + 1, len));
                }
                entries.push(v);
            }
            outer.push(len);
            inner.push(skipped);
        }
        let shape = SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)?;
        let mut t = Tableau::new(shape, entries)?;
        t.barred = barred;
        Ok(t)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn barred(&self) -> &BTreeSet<Cell> {
        &self.barred
    }

    pub fn is_barred(&self, c: Cell) -> bool {
        self.barred.contains(&c)
    }

    pub fn with_bars(&self, bars: impl IntoIterator<Item = Cell>) -> Tableau {
        Tableau {
            shape: self.shape.clone(),
            entries: self.entries.clone(),
            barred: bars.into_iter().collect(),
        }
    }

    pub fn cells(&self) -> Vec<Cell> {
        self.shape.cells()
    }

    pub fn get(&self, c: Cell) -> Option<usize> {
        let idx = self.cells().iter().position(|&d| d == c)?;
        Some(self.entries[idx])
    }

    /// (cell, entry) pairs in row-major order.
    pub fn filled(&self) -> impl Iterator<Item = (Cell, usize)> + '_ {
        self.shape
            .cells()
            .into_iter()
            .zip(self.entries.iter().copied())
    }

    /// (cell, entry) pairs in column order.
    pub fn in_column_order(&self) -> Vec<(Cell, usize)> {
        let mut v: Vec<(Cell, usize)> = self.filled().collect();
        v.sort_by_key(|(c, _)| (std::cmp::Reverse(c.col), c.row));
        v
    }

    pub fn weight(&self, n: usize) -> Vec<usize> {
        let mut w = vec![0; n];
        for &e in &self.entries {
            if e >= 1 && e <= n {
                w[e - 1] += 1;
            }
        }
        w
    }

    pub fn is_semistandard(&self) -> bool {
        let map: HashMap<Cell, usize> = self.filled().collect();
        map.iter().all(|(c, &v)| {
            v >= 1
                && map
                    .get(&Cell::new(c.row, c.col + 1))
                    .is_none_or(|&r| v <= r)
                && map.get(&Cell::new(c.row + 1, c.col)).is_none_or(|&b| v < b)
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct CellJson {
            row: usize,
            col: usize,
            entry: usize,
            barred: bool,
        }
        let cells: Vec<CellJson> = self
            .filled()
            .map(|(c, e)| CellJson {
                row: c.row,
                col: c.col,
                entry: e,
                barred: self.is_barred(c),
            })
            .collect();
        serde_json::json!({ "shape": self.shape.to_string(), "cells": cells })
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut rows: BTreeMap<usize, Vec<String>> = BTreeMap::new();
        for i in 1..=self.shape.rows() {
            rows.insert(i, vec![".".to_string(); self.shape.inner().part(i)]);
        }
        for (c, e) in self.filled() {
            let bar = if self.is_barred(c) { "'" } else { "" };
            rows.entry(c.row).or_default().push(format!("{e}{bar}"));
        }
        let lines: Vec<String> = rows.values().map(|r| r.join(" ")).collect();
        write!(f, "{}", lines.join(" / "))
    }
}

/// Lazily enumerates the semistandard fillings of a skew shape with entries
/// in 1..=n, in lexicographic order of the row-major entry vector.
pub struct Ssyt {
    shape: SkewShape,
    cells: Vec<Cell>,
    left: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
    vals: Vec<usize>,
    n: usize,
    started: bool,
    done: bool,
}

impl Ssyt {
    fn lower(&self, p: usize) -> usize {
        let l = self.left[p].map_or(1, |q| self.vals[q]);
        let a = self.above[p].map_or(1, |q| self.vals[q] + 1);
        l.max(a)
    }
}

impl Iterator for Ssyt {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.done {
            return None;
        }
        let k = self.cells.len();
        if k == 0 {
            self.done = true;
            return Some(Tableau {
                shape: self.shape.clone(),
                entries: Vec::new(),
                barred: BTreeSet::new(),
            });
        }
        let mut p = if self.started { k - 1 } else { 0 };
        self.started = true;
        loop {
            let v = if self.vals[p] == 0 {
                self.lower(p)
            } else {
                self.vals[p] + 1
            };
            if v > self.n {
                self.vals[p] = 0;
                if p == 0 {
                    self.done = true;
                    return None;
                }
                p -= 1;
                continue;
            }
            self.vals[p] = v;
            if p + 1 == k {
                return Some(Tableau {
                    shape: self.shape.clone(),
                    entries: self.vals.clone(),
                    barred: BTreeSet::new(),
                });
            }
            p += 1;
            self.vals[p] = 0;
        }
    }
}

pub fn enumerate_ssyt(shape: &SkewShape, n: usize) -> Ssyt {
    let cells = shape.cells();
    let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let left = cells
        .iter()
        .map(|c| {
            (c.col > 1)
                .then(|| index.get(&Cell::new(c.row, c.col - 1)).copied())
                .flatten()
        })
        .collect();
    let above = cells
        .iter()
        .map(|c| {
            (c.row > 1)
                .then(|| index.get(&Cell::new(c.row - 1, c.col)).copied())
                .flatten()
        })
        .collect();
    Ssyt {
        shape: shape.clone(),
        vals: vec![0; cells.len()],
        cells,
        left,
        above,
        n,
        started: false,
        done: n == 0 && shape.size() > 0,
    }
}

/// Counts semistandard fillings by chaining horizontal strips from the
/// inner shape to the outer one, one strip per entry value.
pub fn ssyt_count(shape: &SkewShape, n: usize) -> BigInt {
    let outer = shape.outer();
    let mut layer: HashMap<Partition, BigInt> = HashMap::new();
    layer.insert(shape.inner().clone(), BigInt::one());
    for _ in 0..n {
        let mut next: HashMap<Partition, BigInt> = HashMap::new();
        for (rho, count) in &layer {
            for sigma in horizontal_strips(rho, outer) {
                *next.entry(sigma).or_insert_with(BigInt::zero) += count;
            }
        }
        layer = next;
    }
    layer.remove(outer).unwrap_or_default()
}

fn horizontal_strips(rho: &Partition, outer: &Partition) -> Vec<Partition> {
    // σ ⊇ ρ within `outer` with ρ_{i-1} ≥ σ_i (so no two added cells share a column).
    let rows = outer.len();
    let mut out = Vec::new();
    let mut current = vec![0usize; rows];
    fn rec(
        i: usize,
        rows: usize,
        rho: &Partition,
        outer: &Partition,
        current: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if i > rows {
            out.push(Partition::new(current.clone()).expect("strip keeps partition order"));
            return;
        }
        let lo = rho.part(i);
        let hi = outer
            .part(i)
            .min(if i == 1 { usize::MAX } else { rho.part(i - 1) });
        for v in lo..=hi {
            current[i - 1] = v;
            rec(i + 1, rows, rho, outer, current, out);
        }
    }
    rec(1, rows, rho, outer, &mut current, &mut out);
    out
}

/// The reverse column word cw(T).
pub fn column_word(t: &Tableau) -> Vec<usize> {
    t.in_column_order().into_iter().map(|(_, e)| e).collect()
}

/// Lattice permutation test: every prefix has at least as many i as i+1.
pub fn is_lattice(word: &[usize]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &w in word {
        if w == 0 {
            return false;
        }
        if counts.len() < w {
            counts.resize(w, 0);
        }
        counts[w - 1] += 1;
        if w > 1 && counts[w - 1] > counts[w - 2] {
            return false;
        }
    }
    true
}

/// Returns the chain encoded by cw(T) if T fits the target skew shape.
pub fn fits(t: &Tableau, target: &SkewShape) -> Result<Option<ShapeChain>> {
    if t.shape().size() != target.size() {
        return Err(Error::SizeMismatch {
            cells: t.shape().size(),
            target: target.size(),
        });
    }
    let word = column_word(t);
    let mut rho = target.inner().clone();
    for &r in &word {
        match rho.add_cell(r) {
            Some(next) if next.is_subset_of(target.outer()) => rho = next,
            _ => return Ok(None),
        }
    }
    Ok(Some(ShapeChain::from_yamanouchi(
        target.inner().clone(),
        &word,
    )?))
}

/// A barred tableau with its ρ(α) assignment on unbarred cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarAssignment {
    pub tableau: Tableau,
    pub chain: Arc<ShapeChain>,
    /// α₁ < … < α_l in column order.
    pub bars: Vec<Cell>,
    pub rho_of: BTreeMap<Cell, Partition>,
}

impl BarAssignment {
    /// Re-checks every invariant of a member of 𝒯(θ, R).
    pub fn validate(&self) -> bool {
        let t = &self.tableau;
        if !t.is_semistandard() || t.barred().len() != self.bars.len() {
            return false;
        }
        let order = t.in_column_order();
        let pos: HashMap<Cell, usize> = order
            .iter()
            .enumerate()
            .map(|(i, (c, _))| (*c, i))
            .collect();
        let r = self.chain.yamanouchi();
        if self.bars.len() != r.len() {
            return false;
        }
        for (i, c) in self.bars.iter().enumerate() {
            if !t.is_barred(*c) || t.get(*c) != Some(r[i]) {
                return false;
            }
            if i > 0 && pos[&self.bars[i - 1]] >= pos[c] {
                return false;
            }
        }
        order.iter().all(|(c, _)| {
            if t.is_barred(*c) {
                return !self.rho_of.contains_key(c);
            }
            let before = self.bars.iter().filter(|b| pos[b] < pos[c]).count();
            self.rho_of.get(c) == Some(self.chain.diagram(before))
        })
    }
}

/// A member of 𝒯_k(θ, R) with both modified assignments ρ⁺ and ρ⁻.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KBarAssignment {
    pub tableau: Tableau,
    pub chain: Arc<ShapeChain>,
    pub k: usize,
    pub rho_plus: BTreeMap<Cell, Partition>,
    pub rho_minus: BTreeMap<Cell, Partition>,
    /// Unbarred cells with α_{k−1} < α < α_{k+1}.
    pub window: BTreeSet<Cell>,
}

/// Every increasing position sequence p₁ < … < p_l with word[p_i] = pattern[i].
fn embeddings(word: &[usize], pattern: &[usize]) -> Vec<Vec<usize>> {
    fn rec(
        word: &[usize],
        pattern: &[usize],
        from: usize,
        acc: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let Some((&first, rest)) = pattern.split_first() else {
            out.push(acc.clone());
            return;
        };
        // leave room for the rest of the pattern
        let last = word.len().saturating_sub(rest.len());
        for p in from..last {
            if word[p] == first {
                acc.push(p);
                rec(word, rest, p + 1, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(word, pattern, 0, &mut Vec::new(), &mut out);
    out
}

fn bar_assignments(t: &Tableau, chain: &Arc<ShapeChain>) -> Vec<BarAssignment> {
    let order = t.in_column_order();
    let word: Vec<usize> = order.iter().map(|&(_, e)| e).collect();
    embeddings(&word, chain.yamanouchi())
        .into_iter()
        .map(|positions| {
            let bars: Vec<Cell> = positions.iter().map(|&p| order[p].0).collect();
            let mut rho_of = BTreeMap::new();
            let mut seen = 0;
            for (p, (c, _)) in order.iter().enumerate() {
                if seen < positions.len() && positions[seen] == p {
                    seen += 1;
                } else {
                    rho_of.insert(*c, chain.diagram(seen).clone());
                }
            }
            BarAssignment {
                tableau: t.with_bars(bars.iter().copied()),
                chain: Arc::clone(chain),
                bars,
                rho_of,
            }
        })
        .collect()
}

/// 𝒯(θ, R): semistandard θ-tableaux with a column-ordered run of barred
/// cells carrying the Yamanouchi symbol of R.
pub fn enumerate_barred(
    theta: &SkewShape,
    chain: &ShapeChain,
    n: usize,
) -> impl Iterator<Item = BarAssignment> {
    let chain = Arc::new(chain.clone());
    enumerate_ssyt(theta, n).flat_map(move |t| bar_assignments(&t, &chain))
}

/// 𝒯(θ, ν/μ), the disjoint union of 𝒯(θ, R) over all chains R from μ to ν.
pub fn enumerate_t(
    theta: &SkewShape,
    mu: &Partition,
    nu: &Partition,
    n: usize,
) -> Result<impl Iterator<Item = BarAssignment>> {
    let theta = theta.clone();
    let all: Chains = chains(mu, nu)?;
    Ok(all.flat_map(move |r| enumerate_barred(&theta, &r, n).collect::<Vec<_>>()))
}

/// 𝒯_k(θ, R): the k-th bar (1-based) is omitted.
pub fn enumerate_barred_k(
    theta: &SkewShape,
    chain: &ShapeChain,
    k: usize,
    n: usize,
) -> Result<impl Iterator<Item = KBarAssignment>> {
    let l = chain.len();
    if k == 0 || k > l {
        return Err(Error::IndexOutOfRange { index: k, len: l });
    }
    let chain = Arc::new(chain.clone());
    let mut pattern = chain.yamanouchi().to_vec();
    pattern.remove(k - 1);
    Ok(enumerate_ssyt(theta, n).flat_map(move |t| {
        let order = t.in_column_order();
        let word: Vec<usize> = order.iter().map(|&(_, e)| e).collect();
        let chain = Arc::clone(&chain);
        embeddings(&word, &pattern)
            .into_iter()
            .map(|positions| {
                let mut rho_plus = BTreeMap::new();
                let mut rho_minus = BTreeMap::new();
                let mut window = BTreeSet::new();
                let mut seen = 0;
                for (p, (c, _)) in order.iter().enumerate() {
                    if seen < positions.len() && positions[seen] == p {
                        seen += 1;
                        continue;
                    }
                    // `seen` bars precede this cell; bar indices skip k.
                    let (plus, minus) = if seen + 1 < k {
                        (seen, seen)
                    } else if seen + 1 == k {
                        window.insert(*c);
                        (k, k - 1)
                    } else {
                        (seen + 1, seen + 1)
                    };
                    rho_plus.insert(*c, chain.diagram(plus).clone());
                    rho_minus.insert(*c, chain.diagram(minus).clone());
                }
                let bars = positions.iter().map(|&p| order[p].0);
                KBarAssignment {
                    tableau: t.with_bars(bars),
                    chain: Arc::clone(&chain),
                    k,
                    rho_plus,
                    rho_minus,
                    window,
                }
            })
            .collect::<Vec<_>>()
    }))
}
