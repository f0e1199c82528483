use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::context::{same_context, VariableContext};
use super::monomial::Monomial;
use super::univariate::UniPoly;
use crate::error::{Error, Result};
use crate::Rational;

/// One coefficient–monomial pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: Rational,
    pub monomial: Monomial,
}

/// Multivariate polynomial with exact rational coefficients in canonical
/// form: no zero coefficients, terms strictly decreasing in the context's
/// monomial order. Equal polynomials have identical term sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    context: Arc<VariableContext>,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(context: &Arc<VariableContext>) -> Self {
        Polynomial {
            context: Arc::clone(context),
            terms: Vec::new(),
        }
    }

    pub fn one(context: &Arc<VariableContext>) -> Self {
        Self::constant(context, Rational::one())
    }

    pub fn constant(context: &Arc<VariableContext>, value: Rational) -> Self {
        let mut terms = Vec::new();
        if !value.is_zero() {
            terms.push(Term {
                coeff: value,
                monomial: Monomial::one(context.arity()),
            });
        }
        Polynomial {
            context: Arc::clone(context),
            terms,
        }
    }

    pub fn variable(context: &Arc<VariableContext>, index: usize) -> Self {
        Polynomial {
            context: Arc::clone(context),
            terms: vec![Term {
                coeff: Rational::one(),
                monomial: Monomial::variable(context.arity(), index),
            }],
        }
    }

    /// Build from arbitrary (coefficient, monomial) pairs; sorts, merges and
    /// drops zeros to restore canonical form.
    pub fn from_terms(context: &Arc<VariableContext>, pairs: Vec<(Rational, Monomial)>) -> Self {
        let order = context.order();
        let mut pairs = pairs;
        pairs.sort_by(|a, b| order.compare(&b.1, &a.1));
        let mut terms: Vec<Term> = Vec::with_capacity(pairs.len());
        for (coeff, monomial) in pairs {
            debug_assert_eq!(monomial.arity(), context.arity());
            if let Some(last) = terms.last_mut() {
                if last.monomial == monomial {
                    last.coeff += coeff;
                    if last.coeff.is_zero() {
                        terms.pop();
                    }
                    continue;
                }
            }
            if !coeff.is_zero() {
                terms.push(Term { coeff, monomial });
            }
        }
        Polynomial {
            context: Arc::clone(context),
            terms,
        }
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.context
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].monomial.is_one())
    }

    /// The constant value when the polynomial has no nonconstant term.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 && self.terms[0].monomial.is_one() {
            return Some(self.terms[0].coeff.clone());
        }
        None
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    /// Everything but the leading term.
    pub fn tail(&self) -> Polynomial {
        Polynomial {
            context: Arc::clone(&self.context),
            terms: self.terms.iter().skip(1).cloned().collect(),
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.monomial.total_degree()).max()
    }

    pub fn same_context_as(&self, other: &Polynomial) -> bool {
        same_context(&self.context, &other.context)
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        if !self.same_context_as(other) {
            return Err(Error::ContextMismatch);
        }
        Ok(self.add_impl(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        if !self.same_context_as(other) {
            return Err(Error::ContextMismatch);
        }
        Ok(self.add_impl(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if !self.same_context_as(other) {
            return Err(Error::ContextMismatch);
        }
        Ok(self.mul_impl(other))
    }

    pub fn pow(&self, exponent: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.context);
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_impl(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_impl(&base);
            }
        }
        result
    }

    pub fn scale(&self, factor: &Rational) -> Polynomial {
        if factor.is_zero() {
            return Polynomial::zero(&self.context);
        }
        Polynomial {
            context: Arc::clone(&self.context),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * factor,
                    monomial: t.monomial.clone(),
                })
                .collect(),
        }
    }

    /// Multiply by a single term. Preserves canonical ordering.
    pub fn mul_term(&self, coeff: &Rational, monomial: &Monomial) -> Polynomial {
        if coeff.is_zero() {
            return Polynomial::zero(&self.context);
        }
        Polynomial {
            context: Arc::clone(&self.context),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * coeff,
                    monomial: t.monomial.mul(monomial),
                })
                .collect(),
        }
    }

    pub fn make_monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some(lead) => {
                let inv = lead.coeff.recip();
                self.scale(&inv)
            }
        }
    }

    /// Exact evaluation at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.context.arity() {
            return Err(Error::ArityMismatch {
                expected: self.context.arity(),
                got: point.len(),
            });
        }
        let mut total = Rational::zero();
        for term in &self.terms {
            let mut value = term.coeff.clone();
            for (i, &e) in term.monomial.exponents().iter().enumerate() {
                if e > 0 {
                    value *= rat_pow(&point[i], e);
                }
            }
            total += value;
        }
        Ok(total)
    }

    /// Compose with a rational curve: substitute `curve[i]` (a univariate
    /// polynomial in the parameter) for the i-th variable and expand.
    pub fn substitute_curve(&self, curve: &[UniPoly]) -> Result<UniPoly> {
        if curve.len() != self.context.arity() {
            return Err(Error::ArityMismatch {
                expected: self.context.arity(),
                got: curve.len(),
            });
        }
        let mut total = UniPoly::zero();
        for term in &self.terms {
            let mut value = UniPoly::constant(term.coeff.clone());
            for (i, &e) in term.monomial.exponents().iter().enumerate() {
                if e > 0 {
                    value = value.mul(&curve[i].pow(e));
                }
            }
            total = total.add(&value);
        }
        Ok(total)
    }

    /// Reinterpret in another context containing (at least) the same
    /// variables; used to lift polynomials into extended contexts or to
    /// re-canonicalize under a different monomial order.
    pub fn in_context(&self, target: &Arc<VariableContext>) -> Result<Polynomial> {
        if same_context(&self.context, target) {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.context.arity());
        for name in self.context.names() {
            let idx = target.index_of(name).ok_or_else(|| {
                Error::InvalidInstance(format!("variable `{name}` missing from target context"))
            })?;
            map.push(idx);
        }
        let pairs = self
            .terms
            .iter()
            .map(|t| {
                let mut exps = vec![0u32; target.arity()];
                for (i, &e) in t.monomial.exponents().iter().enumerate() {
                    exps[map[i]] = e;
                }
                (t.coeff.clone(), Monomial::from_exponents(exps))
            })
            .collect();
        Ok(Polynomial::from_terms(target, pairs))
    }

    fn add_impl(&self, other: &Polynomial, subtract: bool) -> Polynomial {
        let order = self.context.order();
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => terms.push((*a.next().unwrap()).clone()),
                (None, Some(_)) => {
                    let t = b.next().unwrap();
                    terms.push(Term {
                        coeff: if subtract { -&t.coeff } else { t.coeff.clone() },
                        monomial: t.monomial.clone(),
                    });
                }
                (Some(x), Some(y)) => match order.compare(&x.monomial, &y.monomial) {
                    std::cmp::Ordering::Greater => terms.push((*a.next().unwrap()).clone()),
                    std::cmp::Ordering::Less => {
                        let t = b.next().unwrap();
                        terms.push(Term {
                            coeff: if subtract { -&t.coeff } else { t.coeff.clone() },
                            monomial: t.monomial.clone(),
                        });
                    }
                    std::cmp::Ordering::Equal => {
                        let x = a.next().unwrap();
                        let y = b.next().unwrap();
                        let coeff = if subtract {
                            &x.coeff - &y.coeff
                        } else {
                            &x.coeff + &y.coeff
                        };
                        if !coeff.is_zero() {
                            terms.push(Term {
                                coeff,
                                monomial: x.monomial.clone(),
                            });
                        }
                    }
                },
            }
        }
        Polynomial {
            context: Arc::clone(&self.context),
            terms,
        }
    }

    fn mul_impl(&self, other: &Polynomial) -> Polynomial {
        let mut pairs = Vec::with_capacity(self.terms.len() * other.terms.len());
        for x in &self.terms {
            for y in &other.terms {
                pairs.push((&x.coeff * &y.coeff, x.monomial.mul(&y.monomial)));
            }
        }
        Polynomial::from_terms(&self.context, pairs)
    }

    fn fmt_monomial(&self, monomial: &Monomial, out: &mut String) {
        let mut first = true;
        for (i, &e) in monomial.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                out.push('*');
            }
            first = false;
            out.push_str(self.context.name(i));
            if e > 1 {
                out.push_str(&format!("^{e}"));
            }
        }
    }

    /// One term, without sign handling: `coeff` must be positive unless
    /// `signed` is set (used only for the leading term).
    fn fmt_term(&self, coeff: &Rational, monomial: &Monomial, signed: bool, out: &mut String) {
        if monomial.is_one() {
            out.push_str(&format_rational(coeff));
            return;
        }
        if signed || !coeff.is_one() {
            out.push_str(&format_rational(coeff));
            out.push('*');
        }
        self.fmt_monomial(monomial, out);
    }
}

/// `p/q` in lowest terms, `p` when the denominator is one.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

fn rat_pow(base: &Rational, exponent: u32) -> Rational {
    let mut result = Rational::one();
    let mut acc = base.clone();
    let mut e = exponent;
    while e > 0 {
        if e & 1 == 1 {
            result *= &acc;
        }
        e >>= 1;
        if e > 0 {
            acc = &acc * &acc;
        }
    }
    result
}

impl fmt::Display for Polynomial {
    /// Canonical text: terms in context order, explicit `*` and `^`,
    /// parseable back by the polynomial grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, term) in self.terms.iter().enumerate() {
            if i == 0 {
                self.fmt_term(
                    &term.coeff,
                    &term.monomial,
                    term.coeff.is_negative(),
                    &mut out,
                );
            } else {
                if term.coeff.is_negative() {
                    out.push_str(" - ");
                } else {
                    out.push_str(" + ");
                }
                self.fmt_term(&term.coeff.abs(), &term.monomial, false, &mut out);
            }
        }
        write!(f, "{out}")
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial context mismatch")
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$checked(&rhs).expect("polynomial context mismatch")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
