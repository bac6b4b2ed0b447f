use kvertex_core::combinat::{enumerate_degree_data, enumerate_multipartitions};
use kvertex_core::{
    q, Assignment, BigRational, Cell, DegreeData, Field, Monomial, MultiPartition, Partition,
    RatFun, Specializer, Var, VarMap,
};
use kvertex_locvertex::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn mp(s: &str) -> MultiPartition {
    s.parse().unwrap()
}

fn mono(pairs: &[(Var, i32)]) -> Monomial {
    Monomial::from_pairs(pairs)
}

// `w^{1/2} - w^{-1/2}` for a full-unit weight, with the symbols standing for square roots.
fn half_diff(w: &Monomial) -> RatFun {
    let s = RatFun::monomial(*w);
    s.sub(&s.inv().unwrap())
}

fn conv() -> VertexConvention {
    VertexConvention::default()
}

fn sym() -> VarMap<RatFun> {
    VarMap::symbolic()
}

#[test]
fn corner_box_weight() {
    let l = mp("[[1]]");
    let w = box_weight(&l, &Cell { comp: 0, x: 0, y: 0 }, &Framing::standard(1)).unwrap();
    assert_eq!(w, Monomial::var(Var::A1, 1));
}

#[test]
fn box_weight_at_2_1() {
    let l = mp("[[3,2]]");
    let w = box_weight(&l, &Cell { comp: 0, x: 2, y: 1 }, &Framing::standard(1));
    assert!(w.is_err());
    let l = mp("[[3,3]]");
    let w = box_weight(&l, &Cell { comp: 0, x: 2, y: 1 }, &Framing::standard(1)).unwrap();
    assert_eq!(w, mono(&[(Var::A1, 1), (Var::T1, 2), (Var::T2, 1)]));
}

#[test]
fn scaled_component_carries_aux() {
    let l = mp("[[1],[1]]");
    let w = box_weight(&l, &Cell { comp: 1, x: 0, y: 0 }, &Framing::split(1, 1)).unwrap();
    assert_eq!(w, mono(&[(Var::A2, 1), (Var::Aux, 1)]));
}

#[test]
fn box_outside_shape_is_rejected() {
    let l = mp("[[1]]");
    assert!(box_weight(&l, &Cell { comp: 0, x: 1, y: 0 }, &Framing::standard(1)).is_err());
}

#[test]
fn taut_character_examples() {
    let l = mp("[[1]]");
    let c = taut_character(&l, &DegreeData::zero(&l), &Framing::standard(1), conv()).unwrap();
    assert_eq!(c, Character::weight(Monomial::var(Var::A1, 1)));

    let d = DegreeData::from_values(&l, vec![vec![vec![2]]]).unwrap();
    let c = taut_character(&l, &d, &Framing::standard(1), VertexConvention::literal()).unwrap();
    assert_eq!(c, Character::weight(mono(&[(Var::A1, 1), (Var::Q, 2)])));
    let c = taut_character(&l, &d, &Framing::standard(1), conv()).unwrap();
    assert_eq!(c, Character::weight(mono(&[(Var::A1, 1), (Var::Q, -2)])));

    let l = mp("[[2],[1]]");
    let c = taut_character(&l, &DegreeData::zero(&l), &Framing::standard(2), conv()).unwrap();
    let mut want = Character::zero();
    want.add_term(Monomial::var(Var::A1, 1), 1);
    want.add_term(mono(&[(Var::A1, 1), (Var::T1, 1)]), 1);
    want.add_term(Monomial::var(Var::A2, 1), 1);
    assert_eq!(c, want);
}

#[test]
fn single_box_tangent_character() {
    let l = mp("[[1]]");
    let s = s_character(&l, &DegreeData::zero(&l), &Framing::standard(1), conv()).unwrap();
    let mut inv = Character::zero();
    inv.add_term(Monomial::var(Var::T1, -1), 1);
    inv.add_term(Monomial::var(Var::T2, -1), 1);
    assert_eq!(s, inv);
    // the dual is t1 + t2
    let mut t = Character::zero();
    t.add_term(Monomial::var(Var::T1, 1), 1);
    t.add_term(Monomial::var(Var::T2, 1), 1);
    assert_eq!(s.dual(), t);
}

#[test]
fn empty_shape_has_empty_character() {
    let l = MultiPartition::new(vec![Partition::empty()]);
    let s = s_character(&l, &DegreeData::zero(&l), &Framing::standard(1), conv()).unwrap();
    assert!(s.is_empty());
}

#[test]
fn two_box_rank_two_tangent_character() {
    let l = mp("[[1],[1]]");
    let s = s_character(&l, &DegreeData::zero(&l), &Framing::standard(2), conv()).unwrap();
    // t1^-1 and t2^-1 appear twice
    assert_eq!(s.len(), 6);
    assert_eq!(s.rank(), 8);
    assert!(!s.has_negative());
    let ratio = |a: Var, b: Var| s.terms().any(|(m, _)| m.exp(a) == 1 && m.exp(b) == -1);
    assert!(ratio(Var::A1, Var::A2));
    assert!(ratio(Var::A2, Var::A1));
}

#[test]
fn tangent_dimension_is_2nr() {
    for r in 1..=3usize {
        for n in 0..=3u32 {
            for l in enumerate_multipartitions(n, r) {
                let s = s_character(&l, &DegreeData::zero(&l), &Framing::standard(r), conv()).unwrap();
                assert_eq!(s.rank(), 2 * n as i64 * r as i64, "{l}");
                assert!(!s.has_negative(), "{l}");
                assert_eq!(s.constant_term(), 0, "{l}");
            }
        }
    }
}

#[test]
fn tvir_at_zero_degree_is_tangent() {
    for l in enumerate_multipartitions(3, 2) {
        let z = DegreeData::zero(&l);
        let f = Framing::standard(2);
        assert_eq!(
            tvir_character(&l, &z, &f, conv()).unwrap(),
            s_character(&l, &z, &f, conv()).unwrap()
        );
    }
}

#[test]
fn tvir_single_box_degree_one() {
    let l = mp("[[1]]");
    let f = Framing::standard(1);
    let d = DegreeData::from_values(&l, vec![vec![vec![1]]]).unwrap();
    let t = tvir_character(&l, &d, &f, conv()).unwrap();
    assert_eq!(t.constant_term(), 0);
    // multiply back by (1 - q)
    let s0 = s_character(&l, &DegreeData::zero(&l), &f, conv()).unwrap();
    let s1 = s_character(&l, &d, &f, conv()).unwrap();
    let mut one_minus_q = Character::weight(Monomial::var(Var::Q, 1));
    one_minus_q = Character::one().sub(&one_minus_q);
    assert_eq!(t.sub(&s0).mul(&one_minus_q), s1.sub(&s0));
    // the other quotient sign divides by (q - 1)
    let other = VertexConvention { quotient: Quotient::QMinusOne, ..conv() };
    let t2 = tvir_character(&l, &d, &f, other).unwrap();
    assert_eq!(s0.sub(&t2).mul(&one_minus_q), s1.sub(&s0));
}

#[test]
fn tvir_is_constant_free() {
    for r in 1..=2usize {
        for n in 0..=3u32 {
            for l in enumerate_multipartitions(n, r) {
                for k in 0..=3u32 {
                    for d in enumerate_degree_data(&l, k, conv().mono) {
                        let t = tvir_character(&l, &d, &Framing::standard(r), conv()).unwrap();
                        assert_eq!(t.constant_term(), 0, "{l} {d}");
                    }
                }
            }
        }
    }
}

#[test]
fn literal_convention_produces_constant_terms() {
    let l = mp("[[1]]");
    let c = VertexConvention::literal();
    let d = DegreeData::from_values(&l, vec![vec![vec![1]]]).unwrap();
    let t = tvir_character(&l, &d, &Framing::standard(1), c).unwrap();
    assert_ne!(t.constant_term(), 0);
}

#[test]
fn roof_hat_examples() {
    let vm = sym();
    assert!(roof_hat(&Character::zero(), &vm).unwrap().is_one());
    let w = mono(&[(Var::T1, 1), (Var::A1, -1)]);
    let got = roof_hat(&Character::weight(w), &vm).unwrap();
    assert_eq!(got, half_diff(&w).inv().unwrap());
    let w2 = mono(&[(Var::T2, 2), (Var::Q, 1)]);
    let mut c = Character::weight(w);
    c.add_term(w2, -1);
    let got = roof_hat(&c, &vm).unwrap();
    assert_eq!(got, half_diff(&w2).div(&half_diff(&w)).unwrap());
}

#[test]
fn roof_hat_rejects_constant_term() {
    let mut c = Character::one();
    c.add_term(Monomial::var(Var::T1, 1), 1);
    assert_eq!(roof_hat(&c, &sym()), Err(LocError::ConstantTermPresent(1)));
}

#[test]
fn descendent_examples() {
    let vm = sym();
    let f = Framing::standard(1);
    let l = mp("[[1]]");
    let z = DegreeData::zero(&l);
    assert!(descendent_eval(&Descendent::One, &l, &z, &f, conv(), &vm).unwrap().is_one());
    for k in 0..4u32 {
        let d = DegreeData::from_values(&l, vec![vec![vec![k]]]).unwrap();
        let got = descendent_eval(&Descendent::Power(1), &l, &d, &f, conv(), &vm).unwrap();
        // x = a1 q^{-k}; symbols are square roots
        let want = RatFun::monomial(mono(&[(Var::A1, 2), (Var::Q, -2 * k as i32)]));
        assert_eq!(got, want);
    }
    let l = mp("[[2]]");
    let d = DegreeData::from_values(&l, vec![vec![vec![0, 1]]]).unwrap();
    let got = descendent_eval(&Descendent::Elementary(2), &l, &d, &f, conv(), &vm).unwrap();
    let want = RatFun::monomial(mono(&[(Var::A1, 4), (Var::Q, -2), (Var::T1, 2)]));
    assert_eq!(got, want);
}

#[test]
fn empty_vertex_is_one() {
    let l = MultiPartition::new(vec![Partition::empty(), Partition::empty()]);
    let v = bare_vertex(&l, &Descendent::Power(1), 3, &Framing::standard(2), conv(), &sym()).unwrap();
    assert!(v.coeff(0).is_zero());
    let v = bare_vertex(&l, &Descendent::One, 3, &Framing::standard(2), conv(), &sym()).unwrap();
    assert!(v.coeff(0).is_one());
    for k in 1..=3 {
        assert!(v.coeff(k).is_zero());
    }
}

#[test]
fn single_box_vertex_low_orders() {
    let vm = sym();
    let l = mp("[[1]]");
    let f = Framing::standard(1);
    let v = bare_vertex(&l, &Descendent::One, 1, &f, conv(), &vm).unwrap();
    let t1 = Monomial::var(Var::T1, 1);
    let t2 = Monomial::var(Var::T2, 1);
    let z0 = half_diff(&t1).mul(&half_diff(&t2)).inv().unwrap();
    assert_eq!(*v.coeff(0), z0);

    let d = DegreeData::from_values(&l, vec![vec![vec![1]]]).unwrap();
    let tv = tvir_character(&l, &d, &f, conv()).unwrap();
    let z1 = roof_hat(&tv, &vm).unwrap().neg().mul(&RatFun::monomial(Monomial::var(Var::Q, -1)));
    assert_eq!(*v.coeff(1), z1);
}

#[test]
fn specialization_commutes_with_vertex() {
    let a = Specializer::new(7).draw(&[Var::T1, Var::T2, Var::Q, Var::A1, Var::A2]);
    let num = VarMap::<BigRational>::from_assignment(&a);
    for l in enumerate_multipartitions(2, 2) {
        let f = Framing::standard(2);
        let tau = Descendent::Power(1);
        let s = bare_vertex(&l, &tau, 2, &f, conv(), &sym()).unwrap();
        let n = bare_vertex(&l, &tau, 2, &f, conv(), &num).unwrap();
        for k in 0..=2 {
            assert_eq!(s.coeff(k).eval(&a).unwrap(), *n.coeff(k), "{l} z^{k}");
        }
    }
}

#[test]
fn schur_with_too_few_boxes_vanishes() {
    let l = mp("[[1]]");
    let tau = Descendent::Schur(Partition::new(vec![1, 1]).unwrap());
    let r = descendent_eval(&tau, &l, &DegreeData::zero(&l), &Framing::standard(1), conv(), &sym());
    assert!(r.unwrap().is_zero());
}

#[test]
fn schur_matches_elementary_and_power_sums() {
    // s[2] = (p1^2 + p2)/2, s[1,1] = e2
    let xs: Vec<BigRational> = vec![q(2, 3), q(5, 7), q(-1, 4)];
    let s2 = Descendent::Schur(Partition::new(vec![2]).unwrap()).eval(&xs).unwrap();
    let p1 = Descendent::Power(1).eval(&xs).unwrap();
    let p2 = Descendent::Power(2).eval(&xs).unwrap();
    assert_eq!(s2, (p1.clone() * p1 + p2) / q(2, 1));
    let s11 = Descendent::Schur(Partition::new(vec![1, 1]).unwrap()).eval(&xs).unwrap();
    assert_eq!(s11, Descendent::Elementary(2).eval(&xs).unwrap());
}

#[test]
fn cross_term_limit_per_box() {
    // phi/(a a_j) - a a_j/(phi t1 t2 q) for phi = a1, one box of the unscaled group
    let vm = sym();
    let phi = Monomial::var(Var::A1, 1);
    let aaj = mono(&[(Var::Aux, 1), (Var::A2, 1)]);
    let mut c = Character::weight(phi.mul(&aaj.inv()));
    c.add_term(aaj.mul(&phi.inv()).mul(&mono(&[(Var::T1, -1), (Var::T2, -1), (Var::Q, -1)])), -1);
    let (e, g) = roof_hat(&c, &vm).unwrap().lowest_term(Var::Aux).unwrap();
    assert_eq!(e, 0);
    let want = RatFun::monomial(mono(&[(Var::T1, 1), (Var::T2, 1), (Var::Q, 1)])).neg();
    assert_eq!(g, want);
}

#[test]
fn cross_weight_roof_limit_is_one() {
    let vm = sym();
    let w = mono(&[(Var::Aux, 1), (Var::A2, 1), (Var::A1, -1)]);
    let mut c = Character::zero();
    let h = |a: i32, b: i32| mono(&[(Var::T1, a), (Var::T2, b)]);
    // -w (1 - t1^-1)(1 - t2^-1)
    c.add_term(w, -1);
    c.add_term(w.mul(&h(-1, 0)), 1);
    c.add_term(w.mul(&h(0, -1)), 1);
    c.add_term(w.mul(&h(-1, -1)), -1);
    let (e, g) = roof_hat(&c, &vm).unwrap().lowest_term(Var::Aux).unwrap();
    assert_eq!((e, g.is_one()), (0, true));
}

fn partial_values() -> VarMap<RatFun> {
    let a = Assignment::new()
        .with(Var::T1, q(3, 2))
        .with(Var::T2, q(5, 7))
        .with(Var::Q, q(11, 13))
        .with(Var::A1, q(2, 3))
        .with(Var::A2, q(17, 19))
        .with(Var::A3, q(23, 29));
    VarMap::partial(&a)
}

#[test]
fn facver_trivial_at_zero() {
    for form in [ShiftForm::Printed, ShiftForm::Mirrored] {
        let r = facver_check(&Descendent::One, 0, 1, 1, 3, conv(), form, &sym()).unwrap();
        assert_eq!(r.entries.len(), 4);
        assert!(r.all_pass());
    }
}

#[test]
fn facver_single_box_symbolic() {
    let r = facver_check(&Descendent::One, 1, 1, 1, 2, conv(), ShiftForm::Printed, &sym()).unwrap();
    assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
    assert!(r.entries.iter().all(|e| e.exponent == 0));
}

#[test]
fn facver_mirrored_shifts_fail() {
    let r = facver_check(&Descendent::One, 1, 1, 1, 2, conv(), ShiftForm::Mirrored, &sym()).unwrap();
    assert!(!r.all_pass());
}

#[test]
fn quotient_sign_exchanges_the_shift_placement() {
    // with the (q - 1) quotient only the mirrored placement holds
    let other = VertexConvention { quotient: Quotient::QMinusOne, ..conv() };
    let vm = partial_values();
    for tau in [Descendent::One, Descendent::Power(1)] {
        for n in 1..=2 {
            let m = facver_check(&tau, n, 1, 1, 2, other, ShiftForm::Mirrored, &vm).unwrap();
            let p = facver_check(&tau, n, 1, 1, 2, other, ShiftForm::Printed, &vm).unwrap();
            assert!(m.all_pass() && !p.all_pass(), "{tau} n={n}");
        }
    }
}

#[test]
fn facver_all_splits_and_descendents() {
    let vm = partial_values();
    let taus = [
        Descendent::One,
        Descendent::Power(1),
        Descendent::Elementary(2),
        Descendent::Schur(Partition::new(vec![2]).unwrap()),
    ];
    for (r1, r2) in [(1, 1), (2, 1), (1, 2)] {
        for tau in &taus {
            for n in 0..=2 {
                let r = facver_check(tau, n, r1, r2, 3, conv(), ShiftForm::Printed, &vm).unwrap();
                assert!(r.all_pass(), "({r1},{r2}) {tau} n={n}");
            }
        }
    }
}

#[test]
fn facver_three_boxes() {
    let vm = partial_values();
    for tau in [Descendent::One, Descendent::Schur(Partition::new(vec![2]).unwrap())] {
        let r = facver_check(&tau, 3, 1, 1, 3, conv(), ShiftForm::Printed, &vm).unwrap();
        assert!(r.all_pass(), "{tau}");
    }
}

#[test]
fn vertex_sum_is_order_independent() {
    let vm = partial_values();
    let f = Framing::standard(2);
    let tau = Descendent::Elementary(2);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for l in enumerate_multipartitions(2, 2) {
        let v = bare_vertex(&l, &tau, 3, &f, conv(), &vm).unwrap();
        for k in 0..=3u32 {
            let mut ds = enumerate_degree_data(&l, k, conv().mono);
            ds.shuffle(&mut rng);
            let mut s = RatFun::zero();
            for d in ds.iter().rev() {
                s = s.add(&fixed_point_term(&l, d, &tau, &f, conv(), &vm).unwrap());
            }
            assert_eq!(s, *v.coeff(k as usize), "{l} z^{k}");
        }
    }
}

fn small_rational() -> impl Strategy<Value = BigRational> {
    (1i64..40, 1i64..40)
        .prop_filter("not one", |(a, b)| a != b)
        .prop_map(|(a, b)| q(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn roof_hat_is_multiplicative(
        e1 in prop::collection::vec(-2i32..3, 3),
        e2 in prop::collection::vec(-2i32..3, 3),
        m1 in -2i64..3,
        m2 in -2i64..3,
    ) {
        let w1 = mono(&[(Var::T1, e1[0]), (Var::T2, e1[1]), (Var::A1, e1[2])]);
        let w2 = mono(&[(Var::T1, e2[0]), (Var::Q, e2[1]), (Var::A2, e2[2])]);
        prop_assume!(w1 != Monomial::one() && w2 != Monomial::one());
        let c1 = Character::term(w1, m1);
        let c2 = Character::term(w2, m2);
        let vm = sym();
        let lhs = roof_hat(&c1.add(&c2), &vm).unwrap();
        let rhs = roof_hat(&c1, &vm).unwrap().mul(&roof_hat(&c2, &vm).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn facver_random_points(
        t1 in small_rational(),
        t2 in small_rational(),
        qq in small_rational(),
        a1 in small_rational(),
        a2 in small_rational(),
        which in 0usize..3,
    ) {
        prop_assume!(t1 != t2 && a1 != a2);
        let a = Assignment::new()
            .with(Var::T1, t1).with(Var::T2, t2).with(Var::Q, qq)
            .with(Var::A1, a1).with(Var::A2, a2);
        let vm = VarMap::partial(&a);
        let tau = [Descendent::One, Descendent::Power(1), Descendent::Elementary(2)][which].clone();
        for n in 1..=2 {
            let r = facver_check(&tau, n, 1, 1, 2, conv(), ShiftForm::Printed, &vm);
            match r {
                Ok(r) => prop_assert!(r.all_pass()),
                // a drawn point can hit a pole of some coefficient
                Err(LocError::Exact(_)) => {}
                Err(e) => return Err(TestCaseError::fail(format!("{e}"))),
            }
        }
    }
}

#[test]
fn facver_termwise_symbolic_two_boxes() {
    for tau in [Descendent::One, Descendent::Power(1), Descendent::Elementary(2)] {
        let r = facver_check_termwise(&tau, 2, 1, 1, 3, conv(), ShiftForm::Printed, &sym()).unwrap();
        assert!(r.all_pass(), "{tau}");
        assert!(r.entries.iter().all(|e| e.exponent >= 0));
    }
}

#[test]
fn termwise_and_summed_agree_on_verdicts() {
    let vm = partial_values();
    for form in [ShiftForm::Printed, ShiftForm::Mirrored] {
        let a = facver_check(&Descendent::Power(1), 2, 1, 1, 2, conv(), form, &vm).unwrap();
        let b = facver_check_termwise(&Descendent::Power(1), 2, 1, 1, 2, conv(), form, &vm).unwrap();
        assert_eq!(a.all_pass(), b.all_pass());
    }
}

