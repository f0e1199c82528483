use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{same_context, Monomial, Polynomial, VariableContext};

/// Reduced Gröbner basis: elements are monic, no leading monomial divides
/// another, every tail is fully reduced, sorted decreasing by leading
/// monomial. `steps` records the S-polynomial reductions spent producing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    context: Arc<VariableContext>,
    elements: Vec<Polynomial>,
    steps: u64,
}

impl GroebnerBasis {
    pub fn context(&self) -> &Arc<VariableContext> {
        &self.context
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    /// The basis of the unit ideal is exactly `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant() && !self.elements[0].is_zero()
    }

    /// Remainder of full multivariate division; zero exactly when `f` lies
    /// in the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        let f = if same_context(f.context(), &self.context) {
            f.clone()
        } else {
            f.in_context(&self.context)
                .map_err(|_| Error::ContextMismatch)?
        };
        Ok(reduce_full(&f, &self.elements, None))
    }

    pub fn reduces_to_zero(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Exhaustive Buchberger certificate: every S-polynomial of every pair
    /// of basis elements reduces to zero against the basis.
    pub fn certify(&self) -> bool {
        for i in 0..self.elements.len() {
            for j in (i + 1)..self.elements.len() {
                let s = s_polynomial(&self.elements[i], &self.elements[j]);
                if !reduce_full(&s, &self.elements, None).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Reducedness of the stored elements: monic, pairwise non-dividing
    /// leading monomials, fully reduced tails.
    pub fn is_reduced(&self) -> bool {
        use num_traits::One;
        for (i, f) in self.elements.iter().enumerate() {
            let Some(lead) = f.leading_term() else {
                return false;
            };
            if !lead.coeff.is_one() {
                return false;
            }
            for (j, g) in self.elements.iter().enumerate() {
                if i == j {
                    continue;
                }
                let glm = g.leading_monomial().unwrap();
                if glm.divides(&lead.monomial) {
                    return false;
                }
                if f.terms()[1..].iter().any(|t| glm.divides(&t.monomial)) {
                    return false;
                }
            }
        }
        true
    }
}

/// S-polynomial of two nonzero polynomials.
pub(crate) fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let fl = f.leading_term().expect("S-polynomial of zero");
    let gl = g.leading_term().expect("S-polynomial of zero");
    let lcm = fl.monomial.lcm(&gl.monomial);
    let fm = lcm.checked_div(&fl.monomial).unwrap();
    let gm = lcm.checked_div(&gl.monomial).unwrap();
    &f.mul_term(&fl.coeff.recip(), &fm) - &g.mul_term(&gl.coeff.recip(), &gm)
}

/// Full division remainder of `f` against `reducers` (optionally skipping
/// one index), scanning reducers in slice order.
pub(crate) fn reduce_full(
    f: &Polynomial,
    reducers: &[Polynomial],
    skip: Option<usize>,
) -> Polynomial {
    let mut p = f.clone();
    let mut remainder: Vec<(crate::Rational, Monomial)> = Vec::new();
    'outer: while let Some(lead) = p.leading_term().cloned() {
        for (k, g) in reducers.iter().enumerate() {
            if Some(k) == skip {
                continue;
            }
            let Some(glead) = g.leading_term() else {
                continue;
            };
            if glead.monomial.divides(&lead.monomial) {
                let mono = lead.monomial.checked_div(&glead.monomial).unwrap();
                let coeff = &lead.coeff / &glead.coeff;
                p = &p - &g.mul_term(&coeff, &mono);
                continue 'outer;
            }
        }
        remainder.push((lead.coeff, lead.monomial));
        p = p.tail();
    }
    Polynomial::from_terms(f.context(), remainder)
}

fn pair_key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Buchberger's algorithm with the product and chain criteria and the
/// normal pair-selection strategy (smallest lcm degree, then smallest pair
/// indices). Deterministic for fixed input. Zero generators are ignored.
/// `budget` bounds the number of S-polynomial reductions.
pub fn buchberger(
    context: &Arc<VariableContext>,
    generators: &[Polynomial],
    budget: u64,
) -> Result<GroebnerBasis> {
    if budget == 0 {
        return Err(Error::OutOfRange("step budget must be positive".into()));
    }
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in generators {
        if !same_context(g.context(), context) {
            return Err(Error::ContextMismatch);
        }
        if !g.is_zero() {
            basis.push(g.make_monic());
        }
    }
    if basis.is_empty() {
        return Ok(GroebnerBasis {
            context: Arc::clone(context),
            elements: Vec::new(),
            steps: 0,
        });
    }
    if basis.iter().any(|g| g.is_constant()) {
        return Ok(unit_basis(context, 0));
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }
    let mut steps: u64 = 0;

    while !pairs.is_empty() {
        let selected = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, &(i, j))| {
                let lcm = basis[i]
                    .leading_monomial()
                    .unwrap()
                    .lcm(basis[j].leading_monomial().unwrap());
                (lcm.total_degree(), i, j)
            })
            .map(|(idx, _)| idx)
            .unwrap();
        let (i, j) = pairs.swap_remove(selected);

        let li = basis[i].leading_monomial().unwrap();
        let lj = basis[j].leading_monomial().unwrap();
        if li.is_coprime_with(lj) {
            continue;
        }
        let lcm = li.lcm(lj);
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&lcm)
                && !pairs.contains(&pair_key(i, k))
                && !pairs.contains(&pair_key(j, k))
        });
        if chained {
            continue;
        }

        steps += 1;
        if steps > budget {
            return Err(Error::BudgetExhausted { budget });
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let remainder = reduce_full(&s, &basis, None);
        if remainder.is_zero() {
            continue;
        }
        let remainder = remainder.make_monic();
        if remainder.is_constant() {
            return Ok(unit_basis(context, steps));
        }
        let fresh = basis.len();
        for k in 0..fresh {
            pairs.push((k, fresh));
        }
        basis.push(remainder);
    }

    // Minimal basis: drop elements whose leading monomial is divisible by
    // another's; among equal leading monomials keep the earliest.
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let li = basis[i].leading_monomial().unwrap().clone();
        for (j, g) in basis.iter().enumerate() {
            if i == j || !keep[j] {
                continue;
            }
            let lj = g.leading_monomial().unwrap();
            if lj.divides(&li) && (*lj != li || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut reduced: Vec<Polynomial> = basis
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(g, _)| g)
        .collect();

    // Tail reduction; leading terms are untouched because no other leading
    // monomial divides them.
    for i in 0..reduced.len() {
        let f = reduced[i].clone();
        reduced[i] = reduce_full(&f, &reduced, Some(i));
    }

    let order = context.order();
    reduced.sort_by(|a, b| {
        order.compare(b.leading_monomial().unwrap(), a.leading_monomial().unwrap())
    });

    Ok(GroebnerBasis {
        context: Arc::clone(context),
        elements: reduced,
        steps,
    })
}

fn unit_basis(context: &Arc<VariableContext>, steps: u64) -> GroebnerBasis {
    GroebnerBasis {
        context: Arc::clone(context),
        elements: vec![Polynomial::one(context)],
        steps,
    }
}
