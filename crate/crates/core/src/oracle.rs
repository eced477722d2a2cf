//! Brute-force expansion of symmetric polynomials in the factorial Schur basis.
//!
//! Works by repeatedly peeling off the lex-leading x-monomial of the top
//! x-degree component. That monomial is x^λ for a partition λ and s_λ(x|a)
//! has leading term x^λ with coefficient 1, so subtracting the coefficient
//! times s_λ(x|a) removes it.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::facschur::{fac_schur, fac_schur_skew, SeqSpec};
use crate::ring::{Family, MultiPoly, VarRef};
use crate::shapes::{Partition, SkewShape};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Expansion {
    pub coeffs: BTreeMap<Partition, MultiPoly>,
    pub remainder: MultiPoly,
}

impl Expansion {
    pub fn coeff(&self, nu: &Partition) -> MultiPoly {
        self.coeffs.get(nu).cloned().unwrap_or_default()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: serde_json::Map<String, serde_json::Value> = self
            .coeffs
            .iter()
            .map(|(k, v)| {
                (
                    k.to_string(),
                    serde_json::to_value(v).expect("polynomials serialize"),
                )
            })
            .collect();
        serde_json::json!({ "coeffs": coeffs, "remainder": self.remainder })
    }
}

/// Expander with a cache of basis elements for fixed n and a-sequence.
pub struct Oracle {
    n: usize,
    aseq: SeqSpec,
    basis: HashMap<Partition, MultiPoly>,
}

impl Oracle {
    pub fn new(n: usize, aseq: &SeqSpec) -> Self {
        Oracle {
            n,
            aseq: aseq.clone(),
            basis: HashMap::new(),
        }
    }

    pub fn basis(&mut self, lambda: &Partition) -> Result<&MultiPoly> {
        if !self.basis.contains_key(lambda) {
            let s = fac_schur(lambda, self.n, &self.aseq)?;
            self.basis.insert(lambda.clone(), s);
        }
        Ok(&self.basis[lambda])
    }

    pub fn expand(&mut self, p: &MultiPoly) -> Result<Expansion> {
        check_symmetric(p, self.n)?;
        let mut out = Expansion::default();
        let mut rest = p.clone();
        let mut last: Option<(u32, Vec<u32>)> = None;
        while let Some(d) = rest.x_degree() {
            let (lead, c) = leading_x_term(&rest.homogeneous_component(d), self.n);
            let key = (d, lead.clone());
            if last.as_ref().is_some_and(|prev| key >= *prev) {
                return Err(Error::NonTerminating(format!(
                    "leading exponent {lead:?} in degree {d} did not decrease"
                )));
            }
            last = Some(key);
            if lead.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::NotSymmetric(1, 2));
            }
            let lambda = Partition::new(lead.iter().map(|&e| e as usize).collect())?;
            let step = &c * self.basis(&lambda)?;
            rest -= &step;
            *out.coeffs.entry(lambda).or_default() += &c;
        }
        out.coeffs.retain(|_, v| !v.is_zero());
        out.remainder = rest;
        Ok(out)
    }
}

fn check_symmetric(p: &MultiPoly, n: usize) -> Result<()> {
    for v in p.variables() {
        if v.family == Family::X && !(1..=n as i64).contains(&v.index) {
            return Err(Error::OutOfWindow {
                family: 'x',
                index: v.index,
                lo: 1,
                hi: n as i64,
            });
        }
    }
    for i in 1..n {
        if p.swap_x(i, i + 1) != *p {
            return Err(Error::NotSymmetric(i, i + 1));
        }
    }
    Ok(())
}

/// Lex-largest x-exponent vector of a nonzero polynomial and its coefficient.
fn leading_x_term(p: &MultiPoly, n: usize) -> (Vec<u32>, MultiPoly) {
    p.x_coefficients()
        .into_iter()
        .map(|(m, c)| {
            (
                (1..=n)
                    .map(|i| m.exponent(VarRef::x(i)))
                    .collect::<Vec<_>>(),
                c,
            )
        })
        .max_by(|x, y| x.0.cmp(&y.0))
        .expect("nonzero polynomial has a leading term")
}

pub fn expand(p: &MultiPoly, n: usize, aseq: &SeqSpec) -> Result<Expansion> {
    Oracle::new(n, aseq).expand(p)
}

/// Expansion of s_θ(x|b) s_μ(x|a) in the basis s_ν(x|a).
pub fn product_expand(
    theta: &SkewShape,
    mu: &Partition,
    n: usize,
    aseq: &SeqSpec,
    bseq: &SeqSpec,
) -> Result<Expansion> {
    let mut oracle = Oracle::new(n, aseq);
    product_expand_with(&mut oracle, theta, mu, bseq)
}

/// As [`product_expand`], reusing an oracle's basis cache.
pub fn product_expand_with(
    oracle: &mut Oracle,
    theta: &SkewShape,
    mu: &Partition,
    bseq: &SeqSpec,
) -> Result<Expansion> {
    if mu.len() > oracle.n {
        return Err(Error::TooLong {
            partition: mu.to_string(),
            n: oracle.n,
        });
    }
    let p = &fac_schur_skew(theta, oracle.n, bseq)? * oracle.basis(mu)?;
    oracle.expand(&p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lrcoef::c_tableau;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn basis_element_expands_to_itself() {
        let a = SeqSpec::symbolic_a();
        for lam in ["2,1", "3", "1,1,1", "0"] {
            let e = expand(&fac_schur(&p(lam), 3, &a).unwrap(), 3, &a).unwrap();
            assert_eq!(e.coeffs.len(), 1);
            assert_eq!(e.coeff(&p(lam)), MultiPoly::one());
            assert!(e.remainder.is_zero());
        }
    }

    #[test]
    fn square_of_single_box() {
        let a = SeqSpec::symbolic_a();
        let s1 = fac_schur(&p("1"), 2, &a).unwrap();
        let e = expand(&(&s1 * &s1), 2, &a).unwrap();
        assert_eq!(e.coeff(&p("2")), MultiPoly::one());
        assert_eq!(e.coeff(&p("1,1")), MultiPoly::one());
        assert_eq!(e.coeff(&p("1")), "a3 - a2".parse().unwrap());
        let theta = SkewShape::normal(p("1"));
        let empty = c_tableau(&theta, &p("1"), &Partition::empty(), 2, &a, &a).unwrap();
        assert_eq!(e.coeff(&Partition::empty()), empty.value);
    }

    #[test]
    fn rejects_asymmetric() {
        let a = SeqSpec::symbolic_a();
        assert_eq!(
            expand(&MultiPoly::x(1), 2, &a).unwrap_err(),
            Error::NotSymmetric(1, 2)
        );
        assert!(matches!(
            expand(&MultiPoly::x(3), 2, &a),
            Err(Error::OutOfWindow { .. })
        ));
    }

    #[test]
    fn empty_theta_gives_mu() {
        let (a, b) = (SeqSpec::symbolic_a(), SeqSpec::symbolic_b());
        let e =
            product_expand(&SkewShape::normal(Partition::empty()), &p("2,1"), 2, &a, &b).unwrap();
        assert_eq!(e.coeffs.len(), 1);
        assert_eq!(e.coeff(&p("2,1")), MultiPoly::one());
    }
}
