use kvertex_core::{q, BigRational, Field, Matrix, Specializer, Var, VarMap};
use kvertex_qde::*;
use kvertex_toroidal::{Algebra, CoproductTwist, EvalExponent, FockParams, TensorContext, TensorSpace};
use proptest::prelude::*;

fn algebra(seed: u64) -> Algebra<BigRational> {
    let a = Specializer::new(seed).draw(&[Var::T1, Var::T2]);
    Algebra::with_defaults(FockParams::new(a.get(Var::T1).unwrap().clone(), a.get(Var::T2).unwrap().clone()))
}

fn pair_ctx(alg: &Algebra<BigRational>, n: u32) -> TensorContext<'_, BigRational> {
    TensorContext::new(alg, TensorSpace::new(2, n), vec![BigRational::one(); 2]).unwrap()
}

/// Random matrix supported on blocks of equal bidegree.
fn block_diagonal(ctx: &TensorContext<'_, BigRational>, seed: u64) -> Matrix<BigRational> {
    let mut s = Specializer::new(seed);
    let sp = ctx.space();
    let mut d = Matrix::zeros(sp.dim(), sp.dim());
    for i in 0..sp.dim() {
        for j in 0..sp.dim() {
            let (a, b) = (&sp.basis()[i], &sp.basis()[j]);
            if a[0].size() == b[0].size() && a[1].size() == b[1].size() {
                d.set(i, j, s.scalar());
            }
        }
    }
    d
}

#[test]
fn wkz_solution_with_identity_diagonal_is_e() {
    let alg = algebra(1);
    let z = q(11, 13);
    for n in [2, 3] {
        let ctx = pair_ctx(&alg, n);
        let s = GroupSplit::pair();
        let j = solve_wkz(&ctx, &s, &z, &ctx.identity()).unwrap();
        assert_eq!(j, ctx.e_op(&z, &[0], &[1], s.twist).unwrap());
        assert!(wkz_residual_vanishes(&ctx, &s, &z, &j).unwrap());
        assert!(is_lower_triangular(&ctx, &s, &j));
    }
}

#[test]
fn wkz_at_degree_zero_returns_the_diagonal() {
    let alg = algebra(2);
    let ctx = pair_ctx(&alg, 0);
    let d = Matrix::diagonal(&[q(7, 3)]);
    assert_eq!(solve_wkz(&ctx, &GroupSplit::pair(), &q(2, 1), &d).unwrap(), d);
}

#[test]
fn wkz_rejects_bad_diagonals() {
    let alg = algebra(2);
    let ctx = pair_ctx(&alg, 2);
    let s = GroupSplit::pair();
    let mut d = ctx.identity();
    d.set(1, 0, q(1, 1));
    assert_eq!(solve_wkz(&ctx, &s, &q(2, 1), &d).unwrap_err(), QdeError::NotBlockDiagonal);
    let small = Matrix::<BigRational>::identity(2);
    assert!(matches!(solve_wkz(&ctx, &s, &q(2, 1), &small), Err(QdeError::DimensionMismatch { .. })));
}

#[test]
fn wkz_residual_detects_a_perturbation() {
    let alg = algebra(3);
    let ctx = pair_ctx(&alg, 2);
    let s = GroupSplit::pair();
    let z = q(3, 5);
    let mut j = solve_wkz(&ctx, &s, &z, &ctx.identity()).unwrap();
    let last = ctx.space().dim() - 1;
    let x = j.get(last, 0).plus(&q(1, 1));
    j.set(last, 0, x);
    assert!(!wkz_residual_vanishes(&ctx, &s, &z, &j).unwrap());
}

#[test]
fn closed_form_e_solves_the_equation() {
    let alg = algebra(4);
    let ctx = pair_ctx(&alg, 3);
    assert!(univ_qkz_holds(&ctx, &GroupSplit::pair(), &q(5, 7)).unwrap());
}

#[test]
fn hbar_omega_conjugation_scalar() {
    let alg = algebra(5);
    let ctx = TensorContext::new(&alg, TensorSpace::new(3, 2), vec![BigRational::one(); 3]).unwrap();
    for (first, second) in [(vec![0], vec![1]), (vec![0, 1], vec![2]), (vec![0], vec![1, 2])] {
        let equal = first.len() == second.len();
        let s = GroupSplit::new(first, second, CoproductTwist::Inverted);
        for k in 1..=2 {
            let o = hbar_omega_conjugation(&ctx, &s, k).unwrap();
            assert!(o.corrected, "k = {k}");
            assert_eq!(o.printed, equal, "k = {k}");
        }
    }
}

#[test]
fn triple_product_lemma() {
    let alg = algebra(6);
    let ctx = TensorContext::new(&alg, TensorSpace::new(3, 2), vec![BigRational::one(); 3]).unwrap();
    for k in 1..=2 {
        assert!(triple_product_holds(&ctx, k).unwrap());
    }
}

#[test]
fn cocycle_holds_with_the_inverted_twist_only() {
    for seed in [1, 2, 3] {
        let alg = algebra(seed);
        let z = q(11, 13);
        assert!(cocycle_sides(&alg, 2, &z, CoproductTwist::Inverted).unwrap().holds(), "seed {seed}");
        assert!(!cocycle_sides(&alg, 2, &z, CoproductTwist::AsPrinted).unwrap().holds(), "seed {seed}");
    }
}

#[test]
fn cocycle_boundary() {
    assert!(cocycle_boundary_holds(&algebra(7), 2, &q(3, 4)).unwrap());
}

#[test]
fn e_series_matches_the_closed_form_at_small_z() {
    // E(z) is polynomial in z on the truncation once every exponent is nilpotent;
    // compare the series against the closed form at a rational point.
    let alg = algebra(8);
    let ctx = pair_ctx(&alg, 1);
    let s = GroupSplit::pair();
    let order = 30;
    let series = e_series(&ctx, &s, order).unwrap();
    assert!(series[0].is_identity());
    let z = q(1, 3);
    let mut sum = Matrix::zeros(ctx.space().dim(), ctx.space().dim());
    let mut zk = BigRational::one();
    for c in &series {
        sum = sum.plus(&c.scaled(&zk));
        zk = zk.times(&z);
    }
    let exact = ctx.e_op(&z, &[0], &[1], s.twist).unwrap();
    let diff = exact.minus(&sum);
    // geometric tail: entries agree to within 3^{-order} times a bounded constant
    for i in 0..diff.rows() {
        for j in 0..diff.cols() {
            let d = diff.get(i, j).clone();
            let d = if d < BigRational::zero() { -d } else { d };
            assert!(d < q(1, 1_000_000), "{i} {j}");
        }
    }
}

#[test]
fn factorization_right_hand_side_structure() {
    let vm = VarMap::from_assignment(&Specializer::new(3).draw(&RANK_ONE_VARS));
    let r = RankOne::new(vm, QdeConventions::default()).unwrap();
    let caps: Vec<_> = (0..=2).map(|n| r.solve_psi(n, 4).unwrap()).collect();
    let ctx = TensorContext::new(r.algebra(), TensorSpace::new(2, 2), vec![BigRational::one(); 2]).unwrap();
    assert!(factorization_structure(&ctx, &caps, &caps, 4).unwrap().holds());
}

fn wall_point() -> WallPoint {
    WallPoint { t1h: q(3, 2), t2h: q(5, 7), a1: q(2, 1), a2: q(7, 3) }
}

#[test]
fn limits_under_inverse_evaluation() {
    let r = proposition8(&wall_point(), 2, 2, EvalExponent::Inverse).unwrap();
    assert!(r.shift_independent);
    assert!(r.walls.iter().all(|w| w.is_identity.is_none()));
    assert_eq!(r.r_infinity_is_hbar_omega, Some(false));
    assert_eq!(r.r_infinity_is_hbar_degree, Some(true));
    assert_eq!(r.product_limit, None);
    assert!(!r.holds());
}

#[test]
fn limits_under_direct_evaluation() {
    let r = proposition8(&wall_point(), 2, 2, EvalExponent::Direct).unwrap();
    assert!(r.shift_independent);
    assert!(r.walls_hold());
    assert_eq!(r.r_infinity_is_identity, Some(true));
    assert_eq!(r.r_infinity_is_hbar_omega, Some(false));
    assert_eq!(r.product_limit, Some(false));
    assert!(!r.holds());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn wkz_with_a_block_diagonal_start_is_e_times_it(seed in 1u64..5000, zn in 2i64..40) {
        let alg = algebra(seed);
        let ctx = pair_ctx(&alg, 2);
        let s = GroupSplit::pair();
        let z = q(zn, 41);
        let d = block_diagonal(&ctx, seed + 1);
        let j = solve_wkz(&ctx, &s, &z, &d).unwrap();
        prop_assert_eq!(&j, &ctx.e_op(&z, &[0], &[1], s.twist).unwrap().times(&d));
        prop_assert!(wkz_residual_vanishes(&ctx, &s, &z, &j).unwrap());
    }
}
