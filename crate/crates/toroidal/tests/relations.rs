use kvertex_core::{q, BigRational, Specializer, Var};
use kvertex_toroidal::{
    alpha, arbitrate_macdonald, relation_suite, Algebra, AlphaReading, Fock, FockConventions, FockParams,
    LatticeVector, MacdonaldConvention, SignReading, Slope,
};
use proptest::prelude::*;

fn params(seed: u64) -> FockParams<BigRational> {
    let a = Specializer::new(seed).draw(&[Var::T1, Var::T2]);
    FockParams::new(a.get(Var::T1).unwrap().clone(), a.get(Var::T2).unwrap().clone())
}

fn fixed() -> FockParams<BigRational> {
    FockParams::new(q(3, 2), q(5, 7))
}

#[test]
fn arbitration_selects_one_convention() {
    let v = arbitrate_macdonald(&fixed(), FockConventions::default(), AlphaReading::Negated, 3).unwrap();
    let passing: Vec<_> = v.iter().filter(|x| x.pass()).map(|x| x.convention).collect();
    assert_eq!(passing, vec![MacdonaldConvention::FullInverse]);
    assert!(v.iter().all(|x| x.eigencheck));
}

#[test]
fn relation_suite_n4_range3() {
    for seed in [1, 2, 3] {
        let alg = Algebra::with_defaults(params(seed));
        let r = relation_suite(&alg, 3, 4).unwrap();
        let bad: Vec<_> = r.iter().filter(|c| !c.pass).collect();
        assert!(bad.is_empty(), "seed {seed}: {bad:?}");
    }
}

#[test]
fn alternative_readings_fail() {
    {
        let reading = AlphaReading::Symmetric;
        let alg = Algebra::new(Fock::new(fixed(), FockConventions::default()), reading);
        let r = relation_suite(&alg, 2, 3).unwrap();
        assert!(r.iter().any(|c| !c.pass), "{reading:?}");
    }
    let conv = FockConventions { sign: SignReading::Unsigned, ..FockConventions::default() };
    let alg = Algebra::new(Fock::new(fixed(), conv), AlphaReading::Negated);
    let r = relation_suite(&alg, 2, 3).unwrap();
    assert!(r.iter().any(|c| !c.pass));
}

#[test]
fn printed_alpha_reading_is_half_integral() {
    let alg = Algebra::new(Fock::new(fixed(), FockConventions::default()), AlphaReading::Printed);
    let err = relation_suite(&alg, 2, 3).unwrap_err();
    assert!(matches!(err, kvertex_toroidal::ToroidalError::HalfIntegralAlpha(..)));
}

#[test]
fn lattice_vector_basics() {
    let v = LatticeVector::new(4, -6).unwrap();
    assert_eq!(v.deg(), 2);
    assert_eq!(v.primitive(), (LatticeVector::new(2, -3).unwrap(), 2));
    assert_eq!(v.eps(), 1);
    assert_eq!(LatticeVector::new(0, 3).unwrap().eps(), 1);
    assert_eq!(LatticeVector::new(0, -3).unwrap().eps(), -1);
    assert_eq!(LatticeVector::new(-1, 5).unwrap().eps(), -1);
    assert!(LatticeVector::new(0, 0).is_err());
    let (u, w) = LatticeVector::new(1, 1).unwrap().decompose().unwrap();
    assert_eq!((u, w), (LatticeVector::new(0, 1).unwrap(), LatticeVector::new(1, 0).unwrap()));
}

#[test]
fn alpha_readings_on_a_pair() {
    let u = LatticeVector::new(1, 1).unwrap();
    let w = LatticeVector::new(-1, 0).unwrap();
    // eps_u = 1, eps_w = -1, eps_{u+w} = 1, det(u, w) = 1
    assert_eq!(alpha(u, w, AlphaReading::Symmetric).unwrap(), (1, 0));
    assert_eq!(alpha(u, w, AlphaReading::Negated).unwrap(), (-1, 0));
    assert_eq!(alpha(w, u, AlphaReading::Symmetric).unwrap(), (1, 0));
}

#[test]
fn slopes() {
    let w = Slope::new(2, -4).unwrap();
    assert_eq!((w.num(), w.den()), (-1, 2));
    assert_eq!(w.alpha(3), LatticeVector::new(6, -3).unwrap());
    assert_eq!(Slope::infinity().alpha(2), LatticeVector::new(0, 2).unwrap());
    let f: Vec<String> = Slope::farey_negative(3).iter().map(|s| s.to_string()).collect();
    assert_eq!(f, vec!["-1", "-2/3", "-1/2", "-1/3"]);
    assert_eq!(Slope::window(2, 1).len(), 5);
}

proptest! {
    #[test]
    fn decomposition_spans_an_empty_triangle(a in -30i32..30, b in -30i32..30) {
        prop_assume!(a != 0 && b != 0);
        let v = LatticeVector::new(a, b).unwrap();
        prop_assume!(v.deg() == 1);
        let (u, w) = v.decompose().unwrap();
        prop_assert_eq!((u.a + w.a, u.b + w.b), (a, b));
        prop_assert_eq!(u.det(w).abs(), 1);
        prop_assert!(u.a * a >= 0 && u.b * b >= 0 && w.a * a >= 0 && w.b * b >= 0);
    }
}
