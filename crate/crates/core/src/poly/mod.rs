//! Exact multivariate polynomial arithmetic over arbitrary-precision
//! rationals, the polynomial text parser, and dense univariate polynomials
//! for curve parameters.

mod context;
mod monomial;
mod parser;
mod polynomial;
mod univariate;

pub use context::{same_context, MonomialOrder, VariableContext};
pub use monomial::Monomial;
pub use parser::{parse_polynomial, parse_rational};
pub use polynomial::{format_rational, Polynomial, Term};
pub use univariate::UniPoly;

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use num_traits::{One, Zero};

    use super::*;
    use crate::Rational;

    fn ctx() -> Arc<VariableContext> {
        VariableContext::grevlex(vec!["x", "y"]).unwrap()
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn additive_inverse_gives_empty_term_sequence() {
        let c = ctx();
        let x = Polynomial::variable(&c, 0);
        let sum = &x + &(-&x);
        assert!(sum.is_zero());
        assert!(sum.terms().is_empty());
    }

    #[test]
    fn binomial_square() {
        let c = ctx();
        let s = parse_polynomial("x + y", &c).unwrap();
        let sq = &s * &s;
        assert_eq!(sq, parse_polynomial("x^2 + 2*x*y + y^2", &c).unwrap());
    }

    #[test]
    fn zeroth_power_is_one() {
        let c = ctx();
        let p = parse_polynomial("x + 1", &c).unwrap();
        assert_eq!(p.pow(0), Polynomial::one(&c));
    }

    #[test]
    fn evaluation_examples() {
        let c = ctx();
        let p = parse_polynomial("x^2 + y", &c).unwrap();
        assert_eq!(p.evaluate(&[rat(1, 2), rat(1, 3)]).unwrap(), rat(7, 12));

        let q = parse_polynomial("x^2*y - 5/3*x + 2", &c).unwrap();
        assert_eq!(
            q.evaluate(&[Rational::zero(), Rational::zero()]).unwrap(),
            rat(2, 1)
        );

        let r = parse_polynomial("x^2 - y^2", &c).unwrap();
        assert_eq!(
            r.evaluate(&[rat(3, 1), rat(3, 1)]).unwrap(),
            Rational::zero()
        );
        assert!(r.evaluate(&[rat(3, 1)]).is_err());
    }

    #[test]
    fn curve_substitution_examples() {
        let c = ctx();
        let t = UniPoly::parameter();
        let t2 = t.mul(&t);

        let xy = parse_polynomial("x*y", &c).unwrap();
        assert_eq!(
            xy.substitute_curve(&[t.clone(), t2.clone()]).unwrap(),
            t.pow(3)
        );

        let sum = parse_polynomial("x + y", &c).unwrap();
        assert_eq!(
            sum.substitute_curve(&[t.clone(), t.scale(&rat(2, 1))])
                .unwrap(),
            t.scale(&rat(3, 1))
        );

        let diff = parse_polynomial("x^2 - y^2", &c).unwrap();
        assert!(diff
            .substitute_curve(&[t.clone(), t.clone()])
            .unwrap()
            .is_zero());
        assert!(diff.substitute_curve(std::slice::from_ref(&t)).is_err());
    }

    #[test]
    fn context_mismatch_is_detected() {
        let a = Polynomial::variable(&ctx(), 0);
        let other = VariableContext::lex(vec!["x", "y"]).unwrap();
        let b = Polynomial::variable(&other, 0);
        assert!(a.checked_add(&b).is_err());
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn display_round_trip_examples() {
        let c = ctx();
        for text in [
            "x^2*y - 3/2",
            "0",
            "-1*x + y",
            "2/3*x^2 - x*y + 5",
            "x^4 + x^2*y^2 - 7/2*y",
        ] {
            let p = parse_polynomial(text, &c).unwrap();
            let reparsed = parse_polynomial(&p.to_string(), &c).unwrap();
            assert_eq!(p, reparsed, "round trip failed for `{text}`");
        }
    }

    #[test]
    fn monic_normalization() {
        let c = ctx();
        let p = parse_polynomial("3*x^2 - 6*y", &c).unwrap();
        let m = p.make_monic();
        assert!(m.leading_term().unwrap().coeff.is_one());
        assert_eq!(m, parse_polynomial("x^2 - 2*y", &c).unwrap());
    }

    mod properties {
        use proptest::prelude::*;

        use super::*;

        fn arb_rational() -> impl Strategy<Value = Rational> {
            (-9i64..=9, 1i64..=5).prop_map(|(n, d)| rat(n, d))
        }

        fn arb_poly() -> impl Strategy<Value = Polynomial> {
            proptest::collection::vec((arb_rational(), 0u32..=3, 0u32..=3), 0..6).prop_map(
                |terms| {
                    let c = ctx();
                    Polynomial::from_terms(
                        &c,
                        terms
                            .into_iter()
                            .map(|(q, a, b)| (q, Monomial::from_exponents(vec![a, b])))
                            .collect(),
                    )
                },
            )
        }

        proptest! {
            #[test]
            fn addition_commutes_termwise(a in arb_poly(), b in arb_poly()) {
                let ab = a.checked_add(&b).unwrap();
                let ba = b.checked_add(&a).unwrap();
                prop_assert_eq!(ab.terms(), ba.terms());
            }

            #[test]
            fn multiplication_distributes_exactly(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
                let lhs = a.checked_mul(&b.checked_add(&c).unwrap()).unwrap();
                let rhs = a.checked_mul(&b).unwrap().checked_add(&a.checked_mul(&c).unwrap()).unwrap();
                prop_assert_eq!(lhs.terms(), rhs.terms());
            }

            #[test]
            fn evaluation_is_a_ring_homomorphism(
                a in arb_poly(),
                b in arb_poly(),
                x in arb_rational(),
                y in arb_rational(),
            ) {
                let point = [x, y];
                let prod = a.checked_mul(&b).unwrap();
                prop_assert_eq!(
                    prod.evaluate(&point).unwrap(),
                    a.evaluate(&point).unwrap() * b.evaluate(&point).unwrap()
                );
                let sum = a.checked_add(&b).unwrap();
                prop_assert_eq!(
                    sum.evaluate(&point).unwrap(),
                    a.evaluate(&point).unwrap() + b.evaluate(&point).unwrap()
                );
            }

            #[test]
            fn printer_round_trips(p in arb_poly()) {
                let reparsed = parse_polynomial(&p.to_string(), p.context()).unwrap();
                prop_assert_eq!(reparsed.terms(), p.terms());
            }
        }
    }
}
