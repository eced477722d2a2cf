//! Classical, factorial and shifted Schur polynomials.
//!
//! Two constructions of s_λ(x|a) are provided and kept in agreement by the
//! tests: the tableau sum over (x_{T(α)} − a_{T(α)+c(α)}) and the ratio of
//! the alternant det[(x_j|a)^{λ_i+n−i}] by the Vandermonde product.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::{rat, Family, IndexRule, MultiPoly, Rational, Specialization};
use crate::shapes::{a_rho_indices, Partition, SkewShape};
use crate::tableaux::{enumerate_ssyt, enumerate_t};

/// What the sequence a (or b) is taken to be.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeqSpec {
    /// a_i stays the variable of the given family.
    Symbolic(Family),
    /// a_i = i − 1.
    Shifted,
    Zero,
    /// Explicit rational values over a finite index window.
    Explicit(Arc<BTreeMap<i64, Rational>>),
}

impl SeqSpec {
    pub fn symbolic_a() -> Self {
        SeqSpec::Symbolic(Family::A)
    }

    pub fn symbolic_b() -> Self {
        SeqSpec::Symbolic(Family::B)
    }

    pub fn explicit(values: BTreeMap<i64, Rational>) -> Self {
        SeqSpec::Explicit(Arc::new(values))
    }

    /// The sequence of `family` values fixed by a specialization. Unassigned
    /// indices follow the specialization's rule for that family.
    pub fn from_specialization(s: &Specialization, family: Family) -> Self {
        let rule = match family {
            Family::A => s.a_rule,
            Family::B => s.b_rule,
            Family::X => IndexRule::Symbolic,
        };
        let values: BTreeMap<i64, Rational> = s
            .assignments()
            .iter()
            .filter(|(v, _)| v.family == family)
            .map(|(v, q)| (v.index, q.clone()))
            .collect();
        match rule {
            IndexRule::Zero if values.is_empty() => SeqSpec::Zero,
            IndexRule::Shifted if values.is_empty() => SeqSpec::Shifted,
            IndexRule::Symbolic if values.is_empty() => SeqSpec::Symbolic(family),
            _ => SeqSpec::explicit(values),
        }
    }

    pub fn is_numeric(&self) -> bool {
        !matches!(self, SeqSpec::Symbolic(_))
    }

    /// The i-th term as a polynomial.
    pub fn term(&self, i: i64) -> Result<MultiPoly> {
        Ok(match self {
            SeqSpec::Symbolic(fam) => MultiPoly::var(crate::ring::VarRef::new(*fam, i)),
            SeqSpec::Shifted => MultiPoly::integer(i - 1),
            SeqSpec::Zero => MultiPoly::zero(),
            SeqSpec::Explicit(values) => match values.get(&i) {
                Some(q) => MultiPoly::constant(q.clone()),
                None => {
                    let lo = values.keys().next().copied().unwrap_or(0);
                    let hi = values.keys().next_back().copied().unwrap_or(-1);
                    return Err(Error::OutOfWindow {
                        family: '#',
                        index: i,
                        lo,
                        hi,
                    });
                }
            },
        })
    }
}

impl fmt::Display for SeqSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeqSpec::Symbolic(fam) => write!(f, "symbolic-{}", fam.letter()),
            SeqSpec::Shifted => write!(f, "shifted"),
            SeqSpec::Zero => write!(f, "zero"),
            SeqSpec::Explicit(v) => write!(f, "explicit[{}]", v.len()),
        }
    }
}

impl FromStr for SeqSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "symbolic-a" | "a" => Ok(SeqSpec::symbolic_a()),
            "symbolic-b" | "b" => Ok(SeqSpec::symbolic_b()),
            "shifted" => Ok(SeqSpec::Shifted),
            "zero" => Ok(SeqSpec::Zero),
            _ => {
                // comma list of rationals, indexed from 1
                let values = s
                    .split(',')
                    .enumerate()
                    .map(|(i, q)| Ok((i as i64 + 1, crate::ring::parse_rational(q)?)))
                    .collect::<Result<BTreeMap<_, _>>>()
                    .map_err(|_| Error::Parse(format!("unknown sequence `{s}`")))?;
                Ok(SeqSpec::explicit(values))
            }
        }
    }
}

fn check_len(lambda: &Partition, n: usize) -> Result<()> {
    if lambda.len() > n {
        return Err(Error::TooLong {
            partition: lambda.to_string(),
            n,
        });
    }
    Ok(())
}

/// (y|a)^k = (y − a₁)⋯(y − a_k).
pub fn falling_product(y: &MultiPoly, k: usize, seq: &SeqSpec) -> Result<MultiPoly> {
    let mut out = MultiPoly::one();
    for i in 1..=k {
        out = &out * &(y - &seq.term(i as i64)?);
    }
    Ok(out)
}

pub fn determinant(m: &[Vec<MultiPoly>]) -> MultiPoly {
    fn rec(m: &[Vec<MultiPoly>], cols: &[usize]) -> MultiPoly {
        let row = m.len() - cols.len();
        if cols.is_empty() {
            return MultiPoly::one();
        }
        let mut out = MultiPoly::zero();
        for (k, &c) in cols.iter().enumerate() {
            if m[row][c].is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&d| d != c).collect();
            let term = &m[row][c] * &rec(m, &rest);
            if k % 2 == 0 {
                out += &term;
            } else {
                out -= &term;
            }
        }
        out
    }
    let cols: Vec<usize> = (0..m.len()).collect();
    rec(m, &cols)
}

/// ∏_{i<j} (x_i − x_j).
pub fn vandermonde(n: usize) -> MultiPoly {
    let mut out = MultiPoly::one();
    for i in 1..=n {
        for j in i + 1..=n {
            out = &out * &(&MultiPoly::x(i) - &MultiPoly::x(j));
        }
    }
    out
}

/// Ratio of alternants det[(x_j|a)^{λ_i+n−i}] / ∏_{i<j}(x_i − x_j).
pub fn fac_schur_det(lambda: &Partition, n: usize, seq: &SeqSpec) -> Result<MultiPoly> {
    check_len(lambda, n)?;
    let mut matrix = Vec::with_capacity(n);
    for i in 1..=n {
        let k = lambda.part(i) + n - i;
        let row = (1..=n)
            .map(|j| falling_product(&MultiPoly::x(j), k, seq))
            .collect::<Result<Vec<_>>>()?;
        matrix.push(row);
    }
    determinant(&matrix).exact_div(&vandermonde(n))
}

/// Classical Schur polynomial by the bialternant formula.
pub fn schur(lambda: &Partition, n: usize) -> Result<MultiPoly> {
    fac_schur_det(lambda, n, &SeqSpec::Zero)
}

/// Classical Schur polynomial as a sum of x^T over semistandard tableaux.
pub fn schur_tableau(lambda: &Partition, n: usize) -> Result<MultiPoly> {
    fac_schur(lambda, n, &SeqSpec::Zero)
}

/// s_θ evaluated at x = `point`: Σ_T ∏_{α∈θ} (point[T(α)] − seq_{T(α)+c(α)}),
/// entries ranging over 1..=point.len().
pub fn fac_schur_skew_at(
    theta: &SkewShape,
    seq: &SeqSpec,
    point: &[MultiPoly],
) -> Result<MultiPoly> {
    let mut factors: HashMap<(usize, i64), MultiPoly> = HashMap::new();
    let mut total = MultiPoly::zero();
    for t in enumerate_ssyt(theta, point.len()) {
        let mut prod = MultiPoly::one();
        for (cell, e) in t.filled() {
            let key = (e, cell.content());
            let f = match factors.entry(key) {
                Entry::Occupied(o) => o.into_mut(),
                Entry::Vacant(v) => v.insert(&point[e - 1] - &seq.term(e as i64 + cell.content())?),
            };
            prod = &prod * f;
            if prod.is_zero() {
                break;
            }
        }
        total += &prod;
    }
    Ok(total)
}

fn x_vars(n: usize) -> Vec<MultiPoly> {
    (1..=n).map(MultiPoly::x).collect()
}

/// Skew factorial Schur polynomial s_θ(x|seq) in x₁..x_n.
pub fn fac_schur_skew(theta: &SkewShape, n: usize, seq: &SeqSpec) -> Result<MultiPoly> {
    fac_schur_skew_at(theta, seq, &x_vars(n))
}

/// Factorial Schur polynomial s_λ(x|seq), tableau route.
pub fn fac_schur(lambda: &Partition, n: usize, seq: &SeqSpec) -> Result<MultiPoly> {
    check_len(lambda, n)?;
    fac_schur_skew(&SkewShape::normal(lambda.clone()), n, seq)
}

/// s*_λ(x): the factorial Schur polynomial at a_i = i − 1.
pub fn shifted_schur(lambda: &Partition, n: usize) -> Result<MultiPoly> {
    fac_schur(lambda, n, &SeqSpec::Shifted)
}

/// The point x = a_ρ under a sequence.
pub fn a_rho_values(rho: &Partition, n: usize, seq: &SeqSpec) -> Result<Vec<MultiPoly>> {
    a_rho_indices(rho, n)?
        .into_iter()
        .map(|i| seq.term(i))
        .collect()
}

/// s_λ(a_ρ|a) with a symbolic.
pub fn eval_at_partition(lambda: &Partition, rho: &Partition, n: usize) -> Result<MultiPoly> {
    check_len(lambda, n)?;
    let point = a_rho_values(rho, n, &SeqSpec::symbolic_a())?;
    fac_schur(lambda, n, &SeqSpec::symbolic_a())?.compose_x(&point)
}

/// ∏_{(i,j)∈λ} (a_{λ_i+n−i+1} − a_{n−λᵗ_j+j}), the value of s_λ(a_λ|a).
pub fn vanishing_diagonal(lambda: &Partition, n: usize, seq: &SeqSpec) -> Result<MultiPoly> {
    check_len(lambda, n)?;
    let conj = lambda.conjugate();
    let mut out = MultiPoly::one();
    for c in lambda.cells() {
        let left = (lambda.part(c.row) + n - c.row + 1) as i64;
        let right = n as i64 - conj.part(c.col) as i64 + c.col as i64;
        out = &out * &(&seq.term(left)? - &seq.term(right)?);
    }
    Ok(out)
}

/// g_{λν}(a) with s_λ(x|a) = Σ_ν g_{λν}(a) s_ν(x).
pub fn g_coeff(lambda: &Partition, nu: &Partition, n: usize) -> Result<MultiPoly> {
    check_len(lambda, n)?;
    let theta =
        SkewShape::new(lambda.clone(), nu.clone()).map(|_| SkewShape::normal(lambda.clone()))?;
    let mut total = MultiPoly::zero();
    for b in enumerate_t(&theta, &Partition::empty(), nu, n)? {
        let mut prod = MultiPoly::one();
        for (cell, e) in b.tableau.filled() {
            if !b.tableau.is_barred(cell) {
                prod = &prod * &MultiPoly::a(e as i64 + cell.content());
            }
        }
        total += &prod;
    }
    let sign = if (lambda.size() - nu.size()).is_multiple_of(2) {
        1
    } else {
        -1
    };
    Ok(total.scale(&rat(sign)))
}
