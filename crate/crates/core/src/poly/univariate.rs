use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::context::VariableContext;
use super::monomial::Monomial;
use super::polynomial::{format_rational, Polynomial};
use crate::error::{Error, Result};
use crate::Rational;

/// Dense univariate polynomial over the rationals, used for curve
/// substitutions and kernel computations over the rational function field.
/// `coeffs[i]` is the coefficient of `t^i`; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    pub fn constant(value: Rational) -> Self {
        if value.is_zero() {
            UniPoly::zero()
        } else {
            UniPoly {
                coeffs: vec![value],
            }
        }
    }

    /// The parameter itself.
    pub fn parameter() -> Self {
        UniPoly {
            coeffs: vec![Rational::zero(), Rational::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, index: usize) -> Rational {
        self.coeffs
            .get(index)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Index of the lowest nonzero coefficient (t-adic valuation).
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let mut coeffs = vec![Rational::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let mut coeffs = vec![Rational::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, factor: &Rational) -> UniPoly {
        if factor.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn pow(&self, exponent: u32) -> UniPoly {
        let mut result = UniPoly::one();
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.coeffs.len() < divisor.coeffs.len() {
            return (UniPoly::zero(), self.clone());
        }
        let dd = divisor.coeffs.len() - 1;
        let lead = divisor.coeffs.last().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for shift in (0..quot.len()).rev() {
            let top = rem[shift + dd].clone();
            if top.is_zero() {
                continue;
            }
            let factor = top / &lead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let delta = c * &factor;
                rem[shift + i] -= delta;
            }
            quot[shift] = factor;
        }
        rem.truncate(dd);
        (UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem))
    }

    /// Exact quotient, or `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &UniPoly) -> Option<UniPoly> {
        if self.is_zero() {
            return Some(UniPoly::zero());
        }
        let (q, r) = self.div_rem(divisor);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y);
            x = y;
            y = r;
        }
        x.make_monic()
    }

    pub fn make_monic(&self) -> UniPoly {
        match self.leading_coeff() {
            None => UniPoly::zero(),
            Some(lead) => {
                let inv = lead.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn evaluate(&self, at: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// Constant term, the value at `t = 0`.
    pub fn at_zero(&self) -> Rational {
        self.coeff(0)
    }

    /// View as a multivariate polynomial over a single-variable context.
    pub fn to_polynomial(&self, context: &Arc<VariableContext>) -> Result<Polynomial> {
        if context.arity() != 1 {
            return Err(Error::ArityMismatch {
                expected: 1,
                got: context.arity(),
            });
        }
        let pairs = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c.clone(), Monomial::from_exponents(vec![i as u32])))
            .collect();
        Ok(Polynomial::from_terms(context, pairs))
    }

    /// Extract from a polynomial over a single-variable context.
    pub fn from_polynomial(p: &Polynomial) -> Result<UniPoly> {
        if p.context().arity() != 1 {
            return Err(Error::ArityMismatch {
                expected: 1,
                got: p.context().arity(),
            });
        }
        let mut coeffs = Vec::new();
        for term in p.terms() {
            let deg = term.monomial.exponent(0) as usize;
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, Rational::zero());
            }
            coeffs[deg] = term.coeff.clone();
        }
        Ok(UniPoly::from_coeffs(coeffs))
    }
}

impl fmt::Display for UniPoly {
    /// Same term conventions as the multivariate printer, parameter `t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        let mut first = true;
        for (deg, coeff) in self.coeffs.iter().enumerate().rev() {
            if coeff.is_zero() {
                continue;
            }
            let abs = coeff.abs();
            if first {
                first = false;
                if deg == 0 {
                    out.push_str(&format_rational(coeff));
                    continue;
                }
                if !coeff.abs().is_one() || coeff.is_negative() {
                    out.push_str(&format_rational(coeff));
                    out.push('*');
                }
            } else {
                out.push_str(if coeff.is_negative() { " - " } else { " + " });
                if deg == 0 {
                    out.push_str(&format_rational(&abs));
                    continue;
                }
                if !abs.is_one() {
                    out.push_str(&format_rational(&abs));
                    out.push('*');
                }
            }
            out.push('t');
            if deg > 1 {
                out.push_str(&format!("^{deg}"));
            }
        }
        write!(f, "{out}")
    }
}
