//! Sparse multivariate polynomials over exact rationals.
//!
//! Variables come in three indexed families: `x1..xn`, and the integer
//! indexed sequences `a_i`, `b_i`. Polynomials are kept in canonical form,
//! a map from monomials to nonzero rational coefficients, so structural
//! equality is polynomial equality.
//!
//! Canonical order of monomials (used for text and JSON output) compares the
//! sorted `(variable, exponent)` lists lexicographically, where variables are
//! ordered by family `x < a < b` and then by index. Division uses the graded
//! lexicographic order with `x1` the most significant variable.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    X,
    A,
    B,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::X => 'x',
            Family::A => 'a',
            Family::B => 'b',
        }
    }

    fn from_letter(c: char) -> Option<Family> {
        match c {
            'x' => Some(Family::X),
            'a' => Some(Family::A),
            'b' => Some(Family::B),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarRef {
    pub family: Family,
    pub index: i64,
}

impl VarRef {
    pub fn new(family: Family, index: i64) -> Self {
        VarRef { family, index }
    }

    pub fn x(index: usize) -> Self {
        VarRef::new(Family::X, index as i64)
    }

    pub fn a(index: i64) -> Self {
        VarRef::new(Family::A, index)
    }

    pub fn b(index: i64) -> Self {
        VarRef::new(Family::B, index)
    }
}

impl fmt::Display for VarRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.index)
    }
}

impl FromStr for VarRef {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::Parse(format!("invalid variable `{s}`")))?;
        let index: i64 = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("invalid variable index in `{s}`")))?;
        Ok(VarRef { family, index })
    }
}

/// A power product; entries sorted by variable, exponents strictly positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(VarRef, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: VarRef) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarRef, u32)>) -> Self {
        let mut acc: BTreeMap<VarRef, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *acc.entry(v).or_insert(0) += e;
        }
        Monomial(acc.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[(VarRef, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn x_degree(&self) -> u32 {
        self.0
            .iter()
            .filter(|(v, _)| v.family == Family::X)
            .map(|&(_, e)| e)
            .sum()
    }

    pub fn exponent(&self, v: VarRef) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == v {
                let f = other.0[j].1;
                j += 1;
                match e.cmp(&f) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((v, e - f)),
                }
            } else {
                out.push((v, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    /// Splits into the x-part and the remaining (a, b) part.
    pub fn split_x(&self) -> (Monomial, Monomial) {
        let (x, rest): (Vec<_>, Vec<_>) = self.0.iter().partition(|(v, _)| v.family == Family::X);
        (Monomial(x), Monomial(rest))
    }

    /// Graded lexicographic comparison; the smallest variable in `VarRef`
    /// order is the most significant.
    pub fn grlex_cmp(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.lex_cmp(other))
    }

    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }

    fn swap_x(&self, i: usize, j: usize) -> Monomial {
        let (vi, vj) = (VarRef::x(i), VarRef::x(j));
        Monomial::from_pairs(self.0.iter().map(|&(v, e)| {
            if v == vi {
                (vj, e)
            } else if v == vj {
                (vi, e)
            } else {
                (v, e)
            }
        }))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " * ")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq)]
struct GrlexKey(Monomial);

impl Ord for GrlexKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.grlex_cmp(&other.0)
    }
}

impl PartialOrd for GrlexKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical sparse polynomial: no zero coefficients are ever stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        MultiPoly::term(c, Monomial::one())
    }

    pub fn integer(c: i64) -> Self {
        MultiPoly::constant(rat(c))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn var(v: VarRef) -> Self {
        MultiPoly::term(Rational::one(), Monomial::var(v))
    }

    pub fn x(i: usize) -> Self {
        MultiPoly::var(VarRef::x(i))
    }

    pub fn a(i: i64) -> Self {
        MultiPoly::var(VarRef::a(i))
    }

    pub fn b(i: i64) -> Self {
        MultiPoly::var(VarRef::b(i))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The value of a constant polynomial, `None` otherwise.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut out = MultiPoly::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Total degree in the x-variables, `None` for the zero polynomial.
    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::x_degree).max()
    }

    pub fn variables(&self) -> Vec<VarRef> {
        let mut vs: Vec<VarRef> = self
            .terms
            .keys()
            .flat_map(|m| m.entries().iter().map(|&(v, _)| v))
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn is_free_of(&self, family: Family) -> bool {
        self.terms
            .keys()
            .all(|m| m.entries().iter().all(|(v, _)| v.family != family))
    }

    /// Terms whose total x-degree is exactly `d`.
    pub fn homogeneous_component(&self, d: u32) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.x_degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Groups terms by their x-part: `self = sum_m m * coeffs[m]`.
    pub fn x_coefficients(&self) -> BTreeMap<Monomial, MultiPoly> {
        let mut out: BTreeMap<Monomial, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (x, rest) = m.split_x();
            out.entry(x).or_default().add_term(rest, c.clone());
        }
        out
    }

    pub fn swap_x(&self, i: usize, j: usize) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (m.swap_x(i, j), c.clone())))
    }

    /// Exact quotient `self / d`; fails unless the remainder is zero.
    pub fn exact_div(&self, d: &MultiPoly) -> Result<MultiPoly> {
        let (lead_m, lead_c) = d
            .terms
            .iter()
            .max_by(|a, b| a.0.grlex_cmp(b.0))
            .ok_or(Error::DivisionByZero)?;
        let mut work: BTreeMap<GrlexKey, Rational> = self
            .terms
            .iter()
            .map(|(m, c)| (GrlexKey(m.clone()), c.clone()))
            .collect();
        let mut quotient = MultiPoly::zero();
        while let Some((GrlexKey(m), c)) = work.pop_last() {
            let q_m = m.div(lead_m).ok_or(Error::NotDivisible)?;
            let q_c = c / lead_c;
            for (dm, dc) in &d.terms {
                if dm == lead_m {
                    continue;
                }
                let key = GrlexKey(dm.mul(&q_m));
                let delta = -(dc * &q_c);
                match work.get_mut(&key) {
                    Some(v) => {
                        *v += delta;
                        if v.is_zero() {
                            work.remove(&key);
                        }
                    }
                    None => {
                        work.insert(key, delta);
                    }
                }
            }
            quotient.add_term(q_m, q_c);
        }
        Ok(quotient)
    }

    /// Replaces each x_i (1-based) by `values[i-1]`; variables of other
    /// families are left untouched.
    pub fn compose_x(&self, values: &[MultiPoly]) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut acc = MultiPoly::constant(c.clone());
            let mut rest = Vec::new();
            for &(v, e) in m.entries() {
                if v.family == Family::X {
                    let value = usize::try_from(v.index - 1)
                        .ok()
                        .and_then(|i| values.get(i))
                        .ok_or(Error::UnassignedVariable(v))?;
                    acc = &acc * &value.pow(e);
                } else {
                    rest.push((v, e));
                }
            }
            out += &(&acc * &MultiPoly::term(Rational::one(), Monomial::from_pairs(rest)));
        }
        Ok(out)
    }

    pub fn substitute(&self, s: &Specialization) -> Result<MultiPoly> {
        let assigns_x = s.assigns_family(Family::X);
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for &(v, e) in m.entries() {
                if v.family == Family::X && !assigns_x {
                    rest.push((v, e));
                    continue;
                }
                match s.value(v) {
                    Some(val) => coeff *= num_traits::pow(val, e as usize),
                    None if v.family == Family::X => return Err(Error::UnassignedVariable(v)),
                    None => rest.push((v, e)),
                }
            }
            out.add_term(Monomial::from_pairs(rest), coeff);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<MultiPoly> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{} * {m}", format_rational(&abs))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

impl FromStr for MultiPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(MultiPoly::zero());
        }
        let mut out = MultiPoly::zero();
        let mut rest = s;
        let mut negative = false;
        if let Some(r) = rest.strip_prefix('-') {
            negative = true;
            rest = r;
        }
        loop {
            let plus = rest.find(" + ");
            let minus = rest.find(" - ");
            let (chunk, next) = match (plus, minus) {
                (None, None) => (rest, None),
                (Some(p), None) => (&rest[..p], Some((&rest[p + 3..], false))),
                (None, Some(q)) => (&rest[..q], Some((&rest[q + 3..], true))),
                (Some(p), Some(q)) if p < q => (&rest[..p], Some((&rest[p + 3..], false))),
                (Some(_), Some(q)) => (&rest[..q], Some((&rest[q + 3..], true))),
            };
            let (m, mut c) = parse_term(chunk)?;
            if negative {
                c = -c;
            }
            out.add_term(m, c);
            match next {
                Some((r, neg)) => {
                    rest = r;
                    negative = neg;
                }
                None => break,
            }
        }
        Ok(out)
    }
}

fn parse_term(s: &str) -> Result<(Monomial, Rational)> {
    let mut coeff = Rational::one();
    let mut pairs = Vec::new();
    for (k, factor) in s.split(" * ").enumerate() {
        let factor = factor.trim();
        let starts_numeric = factor.chars().next().is_some_and(|c| c.is_ascii_digit());
        if k == 0 && starts_numeric {
            coeff = parse_rational(factor)?;
            continue;
        }
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => (
                n,
                e.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("invalid exponent in `{factor}`")))?,
            ),
            None => (factor, 1),
        };
        pairs.push((name.parse::<VarRef>()?, exp));
    }
    Ok((Monomial::from_pairs(pairs), coeff))
}

struct FamilyJson<'a>(&'a [(VarRef, u32)]);

impl Serialize for FamilyJson<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (v, e) in self.0 {
            map.serialize_entry(&v.index.to_string(), e)?;
        }
        map.end()
    }
}

struct MonomialJson<'a>(&'a Monomial);

impl Serialize for MonomialJson<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let entries = self.0.entries();
        let groups: Vec<(char, &[(VarRef, u32)])> = [Family::X, Family::A, Family::B]
            .into_iter()
            .filter_map(|fam| {
                let start = entries.iter().position(|(v, _)| v.family == fam)?;
                let len = entries[start..]
                    .iter()
                    .take_while(|(v, _)| v.family == fam)
                    .count();
                Some((fam.letter(), &entries[start..start + len]))
            })
            .collect();
        let mut map = serializer.serialize_map(Some(groups.len()))?;
        for (letter, group) in groups {
            map.serialize_entry(&letter.to_string(), &FamilyJson(group))?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct TermOut<'a> {
    c: String,
    m: MonomialJson<'a>,
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermOut<'_>> = self
            .terms
            .iter()
            .map(|(m, c)| TermOut {
                c: format_rational(c),
                m: MonomialJson(m),
            })
            .collect();
        let mut map = serializer.serialize_map(Some(1))?;
        map.serialize_entry("terms", &terms)?;
        map.end()
    }
}

#[derive(Deserialize)]
struct TermIn {
    c: String,
    m: BTreeMap<String, BTreeMap<String, u32>>,
}

#[derive(Deserialize)]
struct PolyIn {
    terms: Vec<TermIn>,
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = PolyIn::deserialize(deserializer)?;
        let mut out = MultiPoly::zero();
        for t in raw.terms {
            let c = parse_rational(&t.c).map_err(D::Error::custom)?;
            let mut pairs = Vec::new();
            for (fam, group) in t.m {
                let family = fam
                    .chars()
                    .next()
                    .and_then(Family::from_letter)
                    .filter(|_| fam.len() == 1)
                    .ok_or_else(|| D::Error::custom(format!("unknown family `{fam}`")))?;
                for (idx, e) in group {
                    let index: i64 = idx
                        .parse()
                        .map_err(|_| D::Error::custom(format!("invalid index `{idx}`")))?;
                    pairs.push((VarRef::new(family, index), e));
                }
            }
            out.add_term(Monomial::from_pairs(pairs), c);
        }
        Ok(out)
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl std::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(iter: I) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for p in iter {
            out += &p;
        }
        out
    }
}

/// How unassigned indices of the `a` or `b` family are treated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum IndexRule {
    #[default]
    Symbolic,
    Zero,
    /// `a_i = i - 1`
    Shifted,
}

/// A (partial) point: explicit rational values plus a fallback rule for each
/// of the `a` and `b` families.
///
/// If any x-variable is assigned, every x-variable met during substitution
/// must be; a specialization with no x-assignments leaves x symbolic.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Specialization {
    assignments: BTreeMap<VarRef, Rational>,
    pub a_rule: IndexRule,
    pub b_rule: IndexRule,
}

impl Specialization {
    pub fn new() -> Self {
        Specialization::default()
    }

    pub fn with_rules(a_rule: IndexRule, b_rule: IndexRule) -> Self {
        Specialization {
            assignments: BTreeMap::new(),
            a_rule,
            b_rule,
        }
    }

    pub fn assign(mut self, v: VarRef, value: Rational) -> Self {
        self.assignments.insert(v, value);
        self
    }

    pub fn set(&mut self, v: VarRef, value: Rational) {
        self.assignments.insert(v, value);
    }

    pub fn assignments(&self) -> &BTreeMap<VarRef, Rational> {
        &self.assignments
    }

    pub fn assigns_family(&self, family: Family) -> bool {
        self.assignments.keys().any(|v| v.family == family)
    }

    /// The value a variable takes, or `None` if it stays symbolic.
    pub fn value(&self, v: VarRef) -> Option<Rational> {
        if let Some(q) = self.assignments.get(&v) {
            return Some(q.clone());
        }
        let rule = match v.family {
            Family::X => return None,
            Family::A => self.a_rule,
            Family::B => self.b_rule,
        };
        match rule {
            IndexRule::Symbolic => None,
            IndexRule::Zero => Some(Rational::zero()),
            IndexRule::Shifted => Some(rat(v.index - 1)),
        }
    }

    /// Whether the assigned values of `family` are pairwise distinct.
    pub fn is_distinct_on(&self, family: Family) -> bool {
        let mut seen: Vec<&Rational> = self
            .assignments
            .iter()
            .filter(|(v, _)| v.family == family)
            .map(|(_, q)| q)
            .collect();
        let before = seen.len();
        seen.sort();
        seen.dedup();
        seen.len() == before
    }
}

/// Admissible index ranges for the `a` and `b` families of one run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarWindow {
    pub n: usize,
    pub a: (i64, i64),
    pub b: (i64, i64),
}

impl VarWindow {
    pub fn check_var(&self, v: VarRef) -> Result<()> {
        let (lo, hi) = match v.family {
            Family::X => (1, self.n as i64),
            Family::A => self.a,
            Family::B => self.b,
        };
        if v.index < lo || v.index > hi {
            return Err(Error::OutOfWindow {
                family: v.family.letter(),
                index: v.index,
                lo,
                hi,
            });
        }
        Ok(())
    }

    pub fn check(&self, p: &MultiPoly) -> Result<()> {
        p.variables()
            .into_iter()
            .try_for_each(|v| self.check_var(v))
    }
}
