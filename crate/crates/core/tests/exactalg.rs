use kvertex_core::exactalg::{pade_reconstruct, PadeFit};
use kvertex_core::{q, Assignment, BigRational, LaurentPoly, Monomial, RatFun, Var};
use proptest::prelude::*;

fn v(x: Var) -> RatFun {
    RatFun::var(x)
}

fn mono(pairs: &[(Var, i32)]) -> RatFun {
    RatFun::monomial(Monomial::from_pairs(pairs))
}

#[test]
fn specialize_constant_and_cancellation() {
    let a = Assignment::new().with(Var::T1, q(3, 5)).with(Var::T2, q(7, 2));
    assert_eq!(RatFun::one().eval(&a).unwrap(), q(1, 1));
    let x = mono(&[(Var::T1, 2)]).sub(&mono(&[(Var::T1, -2)]));
    assert_eq!(x.div(&x).unwrap().eval(&a).unwrap(), q(1, 1));
}

#[test]
fn specialize_direct_evaluation() {
    let f = mono(&[(Var::T1, 2)]).add(&mono(&[(Var::T2, 2)]));
    let a = Assignment::new().with(Var::T1, q(2, 1)).with(Var::T2, q(3, 1));
    assert_eq!(f.eval(&a).unwrap(), q(13, 1));
}

#[test]
fn specialize_reports_vanishing_denominator() {
    let f = RatFun::one().div(&v(Var::T1).sub(&RatFun::one())).unwrap();
    let a = Assignment::new().with(Var::T1, q(1, 1));
    assert_eq!(f.eval(&a), Err(kvertex_core::ExactError::DenominatorVanishes));
}

#[test]
fn lowest_term_single_dominant_term() {
    let a = v(Var::Aux);
    let f = a.mul(&v(Var::T1)).add(&a.mul(&a));
    assert_eq!(f.lowest_term(Var::Aux).unwrap(), (1, v(Var::T1)));
}

#[test]
fn lowest_term_regular_at_zero() {
    let a = v(Var::Aux);
    let f = RatFun::one().add(&a).div(&RatFun::one().sub(&a)).unwrap();
    let (e, g) = f.lowest_term(Var::Aux).unwrap();
    assert_eq!(e, 0);
    assert_eq!(g, RatFun::one());
}

/// Cross weight factor of the splitting argument: the roof of
/// `-w (1 - t1^-1)(1 - t2^-1)` with `w ~ a`, written in square-root variables.
#[test]
fn cross_weight_roof_factor_tends_to_one() {
    let wh = mono(&[(Var::Aux, 1), (Var::T1, 3), (Var::A1, 1), (Var::A2, -1)]);
    let wh_inv = wh.inv().unwrap();
    let t1h = v(Var::T1);
    let t2h = v(Var::T2);
    let hh = t1h.mul(&t2h);
    let num = wh
        .sub(&wh_inv)
        .mul(&wh.div(&hh).unwrap().sub(&wh_inv.mul(&hh)));
    let den = wh
        .div(&t1h)
        .unwrap()
        .sub(&wh_inv.mul(&t1h))
        .mul(&wh.div(&t2h).unwrap().sub(&wh_inv.mul(&t2h)));
    let f = num.div(&den).unwrap();
    let (e, g) = f.lowest_term(Var::Aux).unwrap();
    assert_eq!(e, 0);
    assert_eq!(g, RatFun::one());
}

#[test]
fn lowest_term_of_zero_is_an_error() {
    assert!(RatFun::zero().lowest_term(Var::Aux).is_err());
}

#[test]
fn canonical_text_form() {
    let f = mono(&[(Var::T1, 2), (Var::Q, -1)]).scale(&q(-3, 4)).add(&RatFun::one());
    assert_eq!(f.to_string(), "1 - 3/4*T1^2*Q^-1");
}

#[test]
fn pade_examples() {
    let ones: Vec<BigRational> = (0..7).map(|_| q(1, 1)).collect();
    let fit = pade_reconstruct(&ones, 0, 1).unwrap();
    assert_eq!(fit.den, vec![q(1, 1), q(-1, 1)]);

    let target = PadeFit {
        num: vec![q(1, 1), q(2, 1)],
        den: vec![q(1, 1), q(-3, 1), q(1, 1)],
    };
    // independent expansion of (1+2z)/(1-3z+z^2): s_k = 3 s_{k-1} - s_{k-2} (+ numerator)
    let mut s = vec![q(1, 1), q(5, 1)];
    for k in 2..=8 {
        let next = q(3, 1) * &s[k - 1] - &s[k - 2];
        s.push(next);
    }
    let fit = pade_reconstruct(&s, 1, 2).unwrap();
    assert_eq!(fit, target);
    assert_eq!(
        fit.to_ratfun(),
        RatFun::from_poly(LaurentPoly::one().add(&LaurentPoly::var(Var::Z).scale(&q(2, 1))))
            .div(&RatFun::from_poly(
                LaurentPoly::one()
                    .sub(&LaurentPoly::var(Var::Z).scale(&q(3, 1)))
                    .add(&LaurentPoly::monomial(Monomial::var(Var::Z, 2)))
            ))
            .unwrap()
    );
}

#[test]
fn pade_polynomial_case() {
    let s: Vec<BigRational> = (0..4).map(|_| q(1, 1)).collect();
    let fit = pade_reconstruct(&s, 3, 0).unwrap();
    assert_eq!(fit.num, s);
}

const VARS: [Var; 3] = [Var::T1, Var::T2, Var::Aux];

fn poly_strategy(max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((0usize..3, -2i32..3), (0usize..3, -2i32..3), -4i64..5), 1..=max_terms)
        .prop_map(|terms| {
            LaurentPoly::from_terms(terms.into_iter().map(|((v1, e1), (v2, e2), c)| {
                (
                    Monomial::from_pairs(&[(VARS[v1], e1), (VARS[v2], e2)]),
                    q(c, 1),
                )
            }))
        })
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly_strategy(3).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfun_strategy() -> impl Strategy<Value = RatFun> {
    (poly_strategy(3), nonzero_poly())
        .prop_map(|(n, d)| RatFun::from_poly(n).div(&RatFun::from_poly(d)).unwrap())
}

fn point() -> Assignment {
    Assignment::new()
        .with(Var::T1, q(3, 7))
        .with(Var::T2, q(11, 5))
        .with(Var::Aux, q(13, 17))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_ring_axioms(a in poly_strategy(4), b in poly_strategy(4), c in poly_strategy(4)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly_strategy(4), b in nonzero_poly()) {
        let (_, _, g) = b.normalize();
        prop_assert_eq!(a.mul(&g).exact_div(&g), Some(a));
    }

    #[test]
    fn ratfun_field_axioms(a in ratfun_strategy(), b in ratfun_strategy(), c in ratfun_strategy()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        if !b.is_zero() {
            prop_assert_eq!(a.div(&b).unwrap().mul(&b), a.clone());
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in ratfun_strategy(), b in ratfun_strategy()) {
        let p = point();
        if let (Ok(x), Ok(y)) = (a.eval(&p), b.eval(&p)) {
            prop_assert_eq!(a.mul(&b).eval(&p).unwrap(), &x * &y);
            prop_assert_eq!(a.add(&b).eval(&p).unwrap(), &x + &y);
        }
    }

    #[test]
    fn lowest_term_matches_small_parameter_limit(f in ratfun_strategy()) {
        prop_assume!(!f.is_zero());
        let (e, g) = f.lowest_term(Var::Aux).unwrap();
        let rest = Assignment::new().with(Var::T1, q(3, 7)).with(Var::T2, q(11, 5));
        let Ok(limit) = g.eval(&rest) else { return Ok(()); };
        // f / Aux^e evaluated at shrinking Aux approaches the limit monotonically
        let scaled = f.div(&RatFun::monomial(Monomial::var(Var::Aux, e))).unwrap();
        let mut last: Option<BigRational> = None;
        for k in 4..8u32 {
            let eps = BigRational::new(1.into(), num_bigint_pow(10, k));
            let Ok(val) = scaled.eval(&rest.clone().with(Var::Aux, eps)) else { return Ok(()); };
            let gap = (&val - &limit).abs();
            if let Some(prev) = &last {
                prop_assert!(gap <= *prev);
            }
            last = Some(gap);
        }
    }

    #[test]
    fn pade_recovers_generated_fraction(
        num in prop::collection::vec(-5i64..6, 1..3),
        den in prop::collection::vec(-5i64..6, 0..3),
    ) {
        let mut d = vec![q(1, 1)];
        d.extend(den.iter().map(|&c| q(c, 1)));
        let fit = PadeFit { num: num.iter().map(|&c| q(c, 1)).collect(), den: d };
        let s = fit.expand(10);
        let (m, n) = (num.len() - 1, den.len());
        let found = pade_reconstruct(&s, m, n).unwrap();
        prop_assert!(found.predicts(&s));
        prop_assert_eq!(found.to_ratfun(), fit.to_ratfun());
    }
}

fn num_bigint_pow(b: u32, k: u32) -> kvertex_core::BigInt {
    kvertex_core::BigInt::from(b).pow(k)
}

trait Abs {
    fn abs(&self) -> Self;
}

impl Abs for BigRational {
    fn abs(&self) -> Self {
        if *self < q(0, 1) {
            -self.clone()
        } else {
            self.clone()
        }
    }
}
