//! Gröbner-basis engine: Buchberger's algorithm, normal forms, ideal and
//! radical membership, variety dimension and variety comparison.

mod buchberger;

use std::sync::{Arc, OnceLock};

use itertools::Itertools;

pub use buchberger::{buchberger, GroebnerBasis};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, VariableContext};

/// Default bound on S-polynomial reductions per basis computation.
pub const DEFAULT_STEP_BUDGET: u64 = 200_000;

/// Polynomial ideal with lazily cached reduced Gröbner basis. The cache is
/// written at most once; concurrent readers of a completed cache are safe.
#[derive(Debug)]
pub struct Ideal {
    context: Arc<VariableContext>,
    generators: Vec<Polynomial>,
    cache: OnceLock<GroebnerBasis>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let cache = OnceLock::new();
        if let Some(basis) = self.cache.get() {
            let _ = cache.set(basis.clone());
        }
        Ideal {
            context: Arc::clone(&self.context),
            generators: self.generators.clone(),
            cache,
        }
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.context == other.context && self.generators == other.generators
    }
}
impl Eq for Ideal {}

impl Ideal {
    pub fn new(context: &Arc<VariableContext>, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if !crate::poly::same_context(g.context(), context) {
                return Err(Error::ContextMismatch);
            }
        }
        Ok(Ideal {
            context: Arc::clone(context),
            generators,
            cache: OnceLock::new(),
        })
    }

    /// The zero ideal (whole space as variety).
    pub fn zero(context: &Arc<VariableContext>) -> Self {
        Ideal {
            context: Arc::clone(context),
            generators: Vec::new(),
            cache: OnceLock::new(),
        }
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.context
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.iter().all(|g| g.is_zero())
    }

    /// Reduced Gröbner basis in this ideal's context order, computed once
    /// and cached. A cache hit ignores `budget`.
    pub fn basis(&self, budget: u64) -> Result<&GroebnerBasis> {
        if let Some(basis) = self.cache.get() {
            return Ok(basis);
        }
        let basis = buchberger(&self.context, &self.generators, budget)?;
        let _ = self.cache.set(basis);
        Ok(self.cache.get().expect("cache was just populated"))
    }

    pub fn cached_basis(&self) -> Option<&GroebnerBasis> {
        self.cache.get()
    }

    /// Ideal membership: `f` reduces to zero against the basis.
    pub fn contains(&self, f: &Polynomial, budget: u64) -> Result<bool> {
        self.basis(budget)?.reduces_to_zero(f)
    }

    /// Membership in the radical: `f` vanishes on the zero set, decided by
    /// adjoining a fresh variable `w` and testing whether `1` lies in
    /// `I + (1 - w f)` under an elimination order dominated by `w`.
    pub fn radical_contains(&self, f: &Polynomial, budget: u64) -> Result<bool> {
        self.radical_contains_counted(f, budget).map(|(ok, _)| ok)
    }

    /// As [`Ideal::radical_contains`], also reporting the S-polynomial
    /// reductions spent.
    pub fn radical_contains_counted(&self, f: &Polynomial, budget: u64) -> Result<(bool, u64)> {
        if f.is_zero() {
            return Ok((true, 0));
        }
        if self.is_zero_ideal() {
            // Only the zero polynomial vanishes on the whole space.
            return Ok((false, 0));
        }
        let (extended, fresh) = self.context.extended_for_elimination("_w")?;
        let mut gens = Vec::with_capacity(self.generators.len() + 1);
        for g in &self.generators {
            gens.push(g.in_context(&extended)?);
        }
        let f_ext = f
            .in_context(&extended)
            .map_err(|_| Error::ContextMismatch)?;
        let w = Polynomial::variable(&extended, fresh);
        gens.push(&Polynomial::one(&extended) - &(&w * &f_ext));
        let basis = buchberger(&extended, &gens, budget)?;
        Ok((basis.is_unit(), basis.steps()))
    }

    /// True when the reduced basis is `{1}`; order-independent.
    pub fn is_unit(&self, budget: u64) -> Result<bool> {
        Ok(self.basis(budget)?.is_unit())
    }

    /// Dimension of the zero set: the largest cardinality of a variable
    /// subset containing the support of no leading monomial of the reduced
    /// basis; `-1` for the unit ideal (empty zero set), the full arity for
    /// the zero ideal.
    pub fn dimension(&self, budget: u64) -> Result<i64> {
        let basis = self.basis(budget)?;
        if basis.is_unit() {
            return Ok(-1);
        }
        let leading: Vec<&Monomial> = basis
            .elements()
            .iter()
            .map(|g| g.leading_monomial().expect("basis elements are nonzero"))
            .collect();
        let arity = self.context.arity();
        for size in (0..=arity).rev() {
            for subset in (0..arity).combinations(size) {
                let admits = !leading
                    .iter()
                    .any(|m| m.support().all(|v| subset.contains(&v)));
                if admits {
                    return Ok(size as i64);
                }
            }
        }
        unreachable!("the empty subset always admits a proper ideal")
    }

    /// Set-theoretic equality of zero sets: every generator of each ideal
    /// lies in the radical of the other. The ideals must share variable
    /// names; monomial orders may differ.
    pub fn same_variety(&self, other: &Ideal, budget: u64) -> Result<bool> {
        self.same_variety_counted(other, budget).map(|(ok, _)| ok)
    }

    /// As [`Ideal::same_variety`], also reporting reduction steps spent.
    pub fn same_variety_counted(&self, other: &Ideal, budget: u64) -> Result<(bool, u64)> {
        if self.context.names() != other.context.names() {
            return Err(Error::ContextMismatch);
        }
        let mut steps = 0;
        for g in &self.generators {
            let (ok, s) = other.radical_contains_counted(g, budget)?;
            steps += s;
            if !ok {
                return Ok((false, steps));
            }
        }
        for g in &other.generators {
            let (ok, s) = self.radical_contains_counted(g, budget)?;
            steps += s;
            if !ok {
                return Ok((false, steps));
            }
        }
        Ok((true, steps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, MonomialOrder};
    use crate::Rational;

    const BUDGET: u64 = DEFAULT_STEP_BUDGET;

    fn lex_ctx() -> Arc<VariableContext> {
        VariableContext::lex(vec!["x", "y"]).unwrap()
    }

    fn grevlex_ctx() -> Arc<VariableContext> {
        VariableContext::grevlex(vec!["x", "y"]).unwrap()
    }

    fn ideal(ctx: &Arc<VariableContext>, gens: &[&str]) -> Ideal {
        let polys = gens
            .iter()
            .map(|g| parse_polynomial(g, ctx).unwrap())
            .collect();
        Ideal::new(ctx, polys).unwrap()
    }

    #[test]
    fn circle_line_elimination() {
        // Hand oracle: substituting x = y into x^2 + y^2 - 1 gives
        // 2 y^2 - 1, so the reduced lex basis is {x - y, y^2 - 1/2}.
        let ctx = lex_ctx();
        let i = ideal(&ctx, &["x^2 + y^2 - 1", "x - y"]);
        let basis = i.basis(BUDGET).unwrap();
        let expect: Vec<Polynomial> = ["x - y", "y^2 - 1/2"]
            .iter()
            .map(|s| parse_polynomial(s, &ctx).unwrap())
            .collect();
        assert_eq!(basis.elements(), expect.as_slice());
        assert!(basis.certify());
        assert!(basis.is_reduced());
    }

    #[test]
    fn unit_and_monomial_ideals() {
        let ctx = grevlex_ctx();
        let unit = ideal(&ctx, &["x", "1"]);
        assert!(unit.basis(BUDGET).unwrap().is_unit());

        let single = ideal(&ctx, &["x^2"]);
        let basis = single.basis(BUDGET).unwrap();
        assert_eq!(basis.elements().len(), 1);
        assert_eq!(basis.elements()[0], parse_polynomial("x^2", &ctx).unwrap());
    }

    #[test]
    fn zero_generators_are_ignored() {
        let ctx = grevlex_ctx();
        let i = ideal(&ctx, &["0", "x", "0"]);
        let basis = i.basis(BUDGET).unwrap();
        assert_eq!(basis.elements(), &[parse_polynomial("x", &ctx).unwrap()]);
    }

    #[test]
    fn normal_form_examples() {
        let ctx = lex_ctx();
        let i = ideal(&ctx, &["x - y"]);
        let basis = i.basis(BUDGET).unwrap();
        let f = parse_polynomial("x^2 + y^2", &ctx).unwrap();
        assert_eq!(
            basis.normal_form(&f).unwrap(),
            parse_polynomial("2*y^2", &ctx).unwrap()
        );

        // generators reduce to zero
        let j = ideal(&ctx, &["x^2 + y^2 - 1", "x - y"]);
        let jb = j.basis(BUDGET).unwrap();
        for g in j.generators() {
            assert!(jb.reduces_to_zero(g).unwrap());
        }

        // constants are irreducible against {x, y}
        let k = ideal(&ctx, &["x", "y"]);
        let one = Polynomial::one(&ctx);
        assert_eq!(k.basis(BUDGET).unwrap().normal_form(&one).unwrap(), one);
    }

    #[test]
    fn membership_examples() {
        let ctx = grevlex_ctx();
        let x_ideal = ideal(&ctx, &["x"]);
        assert!(x_ideal
            .contains(&parse_polynomial("x*y", &ctx).unwrap(), BUDGET)
            .unwrap());

        let x2 = ideal(&ctx, &["x^2"]);
        assert!(!x2
            .contains(&parse_polynomial("x", &ctx).unwrap(), BUDGET)
            .unwrap());

        let diff = ideal(&ctx, &["x - y"]);
        assert!(diff
            .contains(&parse_polynomial("x^2 - y^2", &ctx).unwrap(), BUDGET)
            .unwrap());
    }

    #[test]
    fn radical_membership_examples() {
        let ctx = grevlex_ctx();
        assert!(ideal(&ctx, &["x^2"])
            .radical_contains(&parse_polynomial("x", &ctx).unwrap(), BUDGET)
            .unwrap());
        assert!(!ideal(&ctx, &["y"])
            .radical_contains(&parse_polynomial("x", &ctx).unwrap(), BUDGET)
            .unwrap());
        // (x + y)^3 lies in (x^2, y^2) term by term
        assert!(ideal(&ctx, &["x^2", "y^2"])
            .radical_contains(&parse_polynomial("x + y", &ctx).unwrap(), BUDGET)
            .unwrap());
    }

    #[test]
    fn rabinowitsch_certificates_have_small_power() {
        // Wherever radical membership holds for small data, some power at
        // most 6 must be an actual member.
        let ctx = grevlex_ctx();
        let cases = [
            (vec!["x^2"], "x"),
            (vec!["x^2", "y^2"], "x + y"),
            (vec!["x*y", "x^2"], "x"),
            (vec!["x^2 - y^2", "x + y"], "x + y"),
        ];
        for (gens, f_text) in cases {
            let i = ideal(&ctx, &gens);
            let f = parse_polynomial(f_text, &ctx).unwrap();
            assert!(i.radical_contains(&f, BUDGET).unwrap(), "case {gens:?}");
            let mut witnessed = false;
            for power in 1..=6u32 {
                if i.contains(&f.pow(power), BUDGET).unwrap() {
                    witnessed = true;
                    break;
                }
            }
            assert!(witnessed, "no power certificate for {gens:?} / {f_text}");
        }
    }

    #[test]
    fn rabinowitsch_power_certificates_on_random_ideals() {
        use rand::{Rng, SeedableRng};
        use rand_chacha::ChaCha8Rng;

        // Whenever radical membership holds for degree <= 2 data in two
        // variables, some power f^N with N <= 6 is an actual member.
        let ctx = grevlex_ctx();
        let monomials = [(0u32, 0u32), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)];
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let random_poly = |rng: &mut ChaCha8Rng| {
            let terms = monomials
                .iter()
                .map(|&(a, b)| {
                    (
                        Rational::from_integer(rng.gen_range(-2i64..=2).into()),
                        crate::poly::Monomial::from_exponents(vec![a, b]),
                    )
                })
                .collect();
            Polynomial::from_terms(&ctx, terms)
        };
        let mut hits = 0;
        for _ in 0..25 {
            let mut f = random_poly(&mut rng);
            while f.is_zero() {
                f = random_poly(&mut rng);
            }
            let h = random_poly(&mut rng);
            // V(f^2, f h) = V(f), so f is always a radical member here
            let ideal = Ideal::new(&ctx, vec![f.pow(2), f.checked_mul(&h).unwrap()]).unwrap();
            for probe in [f.clone(), random_poly(&mut rng)] {
                if !ideal.radical_contains(&probe, BUDGET).unwrap() {
                    continue;
                }
                hits += 1;
                let witnessed = (1..=6u32).any(|p| ideal.contains(&probe.pow(p), BUDGET).unwrap());
                assert!(witnessed, "no power certificate for probe = {probe}");
            }
        }
        assert!(hits >= 25, "constructed radical members were not detected");
    }

    #[test]
    fn unit_ideal_detection() {
        let ctx = grevlex_ctx();
        assert!(ideal(&ctx, &["x", "x + 1"]).is_unit(BUDGET).unwrap());
        assert!(!ideal(&ctx, &["x", "y"]).is_unit(BUDGET).unwrap());
        assert!(!Ideal::zero(&ctx).is_unit(BUDGET).unwrap());
    }

    #[test]
    fn dimension_examples() {
        let ctx = grevlex_ctx();
        assert_eq!(ideal(&ctx, &["x", "y"]).dimension(BUDGET).unwrap(), 0);
        assert_eq!(ideal(&ctx, &["x*y"]).dimension(BUDGET).unwrap(), 1);
        assert_eq!(ideal(&ctx, &["1"]).dimension(BUDGET).unwrap(), -1);
        assert_eq!(Ideal::zero(&ctx).dimension(BUDGET).unwrap(), 2);

        let space = VariableContext::grevlex(vec!["x", "y", "z"]).unwrap();
        // a curve and a surface in three-space
        assert_eq!(
            ideal(&space, &["y - x^2", "z - x^3"])
                .dimension(BUDGET)
                .unwrap(),
            1
        );
        assert_eq!(ideal(&space, &["x + y + z"]).dimension(BUDGET).unwrap(), 2);
    }

    #[test]
    fn same_variety_examples() {
        let ctx = grevlex_ctx();
        assert!(ideal(&ctx, &["x^2"])
            .same_variety(&ideal(&ctx, &["x"]), BUDGET)
            .unwrap());
        assert!(!ideal(&ctx, &["x"])
            .same_variety(&ideal(&ctx, &["y"]), BUDGET)
            .unwrap());
        assert!(ideal(&ctx, &["x^2 - y^2", "x - y"])
            .same_variety(&ideal(&ctx, &["x - y"]), BUDGET)
            .unwrap());
    }

    #[test]
    fn decisions_are_order_independent() {
        let g = grevlex_ctx();
        let l = lex_ctx();
        let suites: Vec<Vec<&str>> = vec![
            vec!["x^2 + y^2 - 1", "x - y"],
            vec!["x*y", "x^2"],
            vec!["x + 1", "y - 1"],
            vec!["x^2 - y", "y^2 - x"],
        ];
        let probes = ["x", "y", "x - y", "x*y - 1", "x^2 - y^2"];
        for gens in &suites {
            let ig = ideal(&g, gens);
            let il = ideal(&l, gens);
            assert_eq!(
                ig.is_unit(BUDGET).unwrap(),
                il.is_unit(BUDGET).unwrap(),
                "unit verdict differs on {gens:?}"
            );
            assert_eq!(
                ig.dimension(BUDGET).unwrap(),
                il.dimension(BUDGET).unwrap(),
                "dimension differs on {gens:?}"
            );
            for probe in &probes {
                let pg = parse_polynomial(probe, &g).unwrap();
                let pl = parse_polynomial(probe, &l).unwrap();
                assert_eq!(
                    ig.contains(&pg, BUDGET).unwrap(),
                    il.contains(&pl, BUDGET).unwrap(),
                    "membership differs on {gens:?} / {probe}"
                );
                assert_eq!(
                    ig.radical_contains(&pg, BUDGET).unwrap(),
                    il.radical_contains(&pl, BUDGET).unwrap(),
                    "radical membership differs on {gens:?} / {probe}"
                );
            }
            assert!(ig.same_variety_counted(&il, BUDGET).unwrap().0);
        }
    }

    #[test]
    fn produced_bases_certify_and_generators_reduce() {
        let ctx = grevlex_ctx();
        let suites: Vec<Vec<&str>> = vec![
            vec!["x^2 + y^2 - 1", "x - y"],
            vec!["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"],
            vec!["x*y - 1", "x^2 + y^2 - 4"],
            vec!["x^2", "x*y + y^3"],
        ];
        for gens in &suites {
            let i = ideal(&ctx, gens);
            let basis = i.basis(BUDGET).unwrap();
            assert!(
                basis.certify(),
                "S-polynomial certificate failed on {gens:?}"
            );
            assert!(basis.is_reduced(), "basis not reduced on {gens:?}");
            for g in i.generators() {
                assert!(basis.reduces_to_zero(g).unwrap());
            }
        }
    }

    #[test]
    fn matches_externally_computed_bases() {
        // Reduced bases cross-checked against an independent computer
        // algebra system, up to monic scaling.
        let cases = vec![
            (
                vec!["x", "y", "z"],
                vec!["y - x^2", "z - x^3"],
                MonomialOrder::Lex,
                vec!["x^2 - y", "x*y - z", "x*z - y^2", "y^3 - z^2"],
            ),
            (
                vec!["x", "y", "z"],
                vec!["y - x^2", "z - x^3"],
                MonomialOrder::GrevLex,
                vec!["x^2 - y", "x*y - z", "y^2 - x*z"],
            ),
            (
                vec!["x", "y"],
                vec!["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"],
                MonomialOrder::GrevLex,
                vec!["x^2", "x*y", "y^2 - 1/2*x"],
            ),
            (
                vec!["x", "y", "z"],
                vec!["x^2 + y + z - 1", "x + y^2 + z - 1", "x + y + z^2 - 1"],
                MonomialOrder::Lex,
                vec![
                    "x + y + z^2 - 1",
                    "y^2 - y - z^2 + z",
                    "y*z^2 + 1/2*z^4 - 1/2*z^2",
                    "z^6 - 4*z^4 + 4*z^3 - z^2",
                ],
            ),
            (
                vec!["x", "y", "z"],
                vec!["x^2 + y + z - 1", "x + y^2 + z - 1", "x + y + z^2 - 1"],
                MonomialOrder::GrevLex,
                vec!["x^2 + y + z - 1", "y^2 + x + z - 1", "z^2 + x + y - 1"],
            ),
        ];
        for (vars, gens, order, expect) in cases {
            let ctx =
                VariableContext::new(vars.iter().map(|s| s.to_string()).collect(), order).unwrap();
            let i = ideal(&ctx, &gens);
            let basis = i.basis(BUDGET).unwrap();
            let expected: Vec<Polynomial> = expect
                .iter()
                .map(|s| parse_polynomial(s, &ctx).unwrap())
                .collect();
            assert_eq!(
                basis.elements(),
                expected.as_slice(),
                "{gens:?} under {order}"
            );
        }
    }

    #[test]
    fn random_bases_pass_the_exhaustive_certificate() {
        use rand::{Rng, SeedableRng};
        use rand_chacha::ChaCha8Rng;

        let three = VariableContext::grevlex(vec!["x", "y", "z"]).unwrap();
        let contexts = [grevlex_ctx(), lex_ctx(), three];
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for trial in 0..30 {
            let ctx = &contexts[trial % contexts.len()];
            let arity = ctx.arity();
            let gen_count = rng.gen_range(2..=3);
            let gens: Vec<Polynomial> = (0..gen_count)
                .map(|_| {
                    let terms = (0..rng.gen_range(1..=4))
                        .map(|_| {
                            let exps: Vec<u32> = (0..arity).map(|_| rng.gen_range(0..=2)).collect();
                            (
                                Rational::from_integer(rng.gen_range(-3i64..=3).into()),
                                crate::poly::Monomial::from_exponents(exps),
                            )
                        })
                        .collect();
                    Polynomial::from_terms(ctx, terms)
                })
                .collect();
            let i = Ideal::new(ctx, gens).unwrap();
            let basis = i.basis(BUDGET).unwrap();
            assert!(basis.certify(), "certificate failed on trial {trial}");
            assert!(basis.is_reduced(), "unreduced basis on trial {trial}");
            for g in i.generators() {
                assert!(basis.reduces_to_zero(g).unwrap(), "trial {trial}");
            }
        }
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let ctx = lex_ctx();
        let i = ideal(&ctx, &["x^2 + y^2 - 1", "x^3 - y^3 - 1", "x*y - 2"]);
        match i.basis(1) {
            Err(Error::BudgetExhausted { budget: 1 }) => {}
            other => panic!("expected budget exhaustion, got {other:?}"),
        }
    }
}
