use kvertex_core::{q, BigRational, Field, Matrix, Monomial, Partition, RatFun, Specializer, Var};
use kvertex_toroidal::fock::{macdonald_block, z_lambda};
use kvertex_toroidal::{Algebra, Fock, FockConventions, FockParams, LatticeVector, MacdonaldConvention};
use proptest::prelude::*;

fn fixed() -> FockParams<BigRational> {
    FockParams::new(q(3, 2), q(5, 7))
}

fn symbolic() -> FockParams<RatFun> {
    FockParams::new(RatFun::var(Var::T1), RatFun::var(Var::T2))
}

fn part(p: &[u32]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

fn fock() -> Fock<BigRational> {
    Fock::new(fixed(), FockConventions::default())
}

#[test]
fn p1_is_macdonald_of_degree_one() {
    let f = fock();
    let b = f.macdonald(1).unwrap();
    assert_eq!(b.to_power, Matrix::identity(1));
}

#[test]
fn degree_two_polynomials_are_orthogonal() {
    let f = fock();
    let b = f.macdonald(2).unwrap();
    let (qq, tt) = (q(9, 4), q(49, 25));
    // <p_l, p_m> = delta z_l prod (1 - q^l_i)/(1 - t^l_i), written out for (2) and (1,1)
    let w2 = q(2, 1) * (q(1, 1) - qq.clone() * qq.clone()) / (q(1, 1) - tt.clone() * tt.clone());
    let w11 = q(2, 1) * ((q(1, 1) - qq.clone()) / (q(1, 1) - tt.clone())).pow(2);
    let ip = (b.to_power.get(0, 0) * b.to_power.get(0, 1)) * w2 + (b.to_power.get(1, 0) * b.to_power.get(1, 1)) * w11;
    assert_eq!(ip, q(0, 1));
    // P_{(1,1)} = m_{(1,1)} = e_2 = (p_1^2 - p_2)/2
    assert_eq!(b.to_power.get(0, 1), &q(-1, 2));
    assert_eq!(b.to_power.get(1, 1), &q(1, 2));
}

#[test]
fn z_lambda_values() {
    assert_eq!(z_lambda(&part(&[1, 1, 1])), 6.into());
    assert_eq!(z_lambda(&part(&[2, 2, 1])), 8.into());
    assert_eq!(z_lambda(&part(&[3])), 3.into());
}

#[test]
fn eigencheck_and_distinct_eigenvalues_to_degree_four() {
    let f = fock();
    for n in 0..=4 {
        assert!(f.eigencheck(n).unwrap(), "n = {n}");
        let labels = f.table(n);
        let eig: Vec<_> = labels.parts().iter().map(|nu| f.eigenvalue(1, nu).unwrap()).collect();
        for i in 0..eig.len() {
            for j in 0..i {
                assert_ne!(eig[i], eig[j]);
            }
        }
    }
}

#[test]
fn eigenvalues_distinct_at_random_points() {
    for seed in 0..3 {
        let a = Specializer::new(seed).draw(&[Var::T1, Var::T2]);
        let p = FockParams::new(a.get(Var::T1).unwrap().clone(), a.get(Var::T2).unwrap().clone());
        let f = Fock::new(p, FockConventions::default());
        let eig: Vec<_> = f.table(3).parts().iter().map(|nu| f.eigenvalue(1, nu).unwrap()).collect();
        assert!(eig[0] != eig[1] && eig[1] != eig[2] && eig[0] != eig[2]);
    }
}

#[test]
fn symbolic_macdonald_degree_three() {
    let f = Fock::new(symbolic(), FockConventions::default());
    for n in 0..=3 {
        assert!(f.eigencheck(n).unwrap());
    }
}

#[test]
fn heis_examples() {
    let f = fock();
    // -1 d/dp_1 applied to p_1
    assert_eq!(f.heis_block(1, 1).unwrap().unwrap().get(0, 0), &q(-1, 1));
    let c = (q(3, 2) - q(2, 3)) * (q(5, 7) - q(7, 5));
    assert_eq!(f.heis_block(-1, 0).unwrap().unwrap().get(0, 0), &(q(1, 1) / c));
    assert!(f.heis_block(2, 1).unwrap().is_none());
}

#[test]
fn heisenberg_relation_on_truncations() {
    let alg = Algebra::with_defaults(fixed());
    let p = alg.params().clone();
    for k in 1..=3 {
        let kk = p.central_k(1).unwrap().powi(k).unwrap();
        let s = kk.minus(&Field::recip(&kk).unwrap()).over(&p.n_coeff(k).unwrap()).unwrap();
        for n in 0..=4 {
            let c = alg.comm(LatticeVector::new(-k as i32, 0).unwrap(), LatticeVector::new(k as i32, 0).unwrap(), n);
            let c = c.unwrap().unwrap();
            assert_eq!(c, Matrix::identity(alg.fock().dim(n)).scaled(&s));
        }
    }
    // k = 1 with K = hbar^{-1/2}: (hbar^{1/2} - hbar^{-1/2})/n_1 for [e_1, e_{-1}]
    let h = p.hh();
    let s = h.minus(&Field::recip(&h).unwrap()).over(&p.n_coeff(1).unwrap()).unwrap();
    let c = alg.comm(LatticeVector::new(1, 0).unwrap(), LatticeVector::new(-1, 0).unwrap(), 2).unwrap().unwrap();
    assert_eq!(c, Matrix::identity(2).scaled(&s));
}

/// Direct sum of the first `terms` terms of the infinite series with the
/// exact geometric remainder added back.
fn series_eigenvalue(m: i64, nu: &[u32], terms: i64) -> BigRational {
    let (t1, t2) = (q(9, 4), q(25, 49));
    let mut s = q(0, 1);
    for i in 1..=terms {
        let nui = nu.get(i as usize - 1).copied().unwrap_or(0) as i64;
        s += t1.powi(m * (nui - 1)).unwrap() * t2.powi(m * (i - 1)).unwrap();
    }
    let rest = t1.powi(-m).unwrap() * t2.powi(m * terms).unwrap() / (q(1, 1) - t2.powi(m).unwrap());
    let sign = if m > 0 { q(1, 1) } else { q(-1, 1) };
    sign * (s + rest) / (q(1, 1) - t1.powi(m).unwrap())
}

#[test]
fn slope_infinity_tail() {
    let f = fock();
    for m in [1, 2, -1] {
        assert_eq!(f.eigenvalue(m, &Partition::empty()).unwrap(), series_eigenvalue(m, &[], 50));
        assert_eq!(f.eigenvalue(m, &part(&[1])).unwrap(), series_eigenvalue(m, &[1], 50));
        assert_eq!(f.eigenvalue(m, &part(&[3, 1])).unwrap(), series_eigenvalue(m, &[3, 1], 50));
    }
    // the 50-term partial sum alone is within 10^-13 of the closed form
    let t1 = q(9, 4);
    let t2 = q(25, 49);
    let partial: BigRational = (1..=50).map(|i| t1.powi(-1).unwrap() * t2.powi(i - 1).unwrap()).sum::<BigRational>()
        / (q(1, 1) - t1.clone());
    let gap = f.eigenvalue(1, &Partition::empty()).unwrap() - partial;
    assert!(gap.clone() * gap < q(1, 1) / BigRational::from_integer(10.into()).powi(26).unwrap());
}

#[test]
fn adding_a_box_changes_the_eigenvalue_by_one_monomial() {
    let f = Fock::new(symbolic(), FockConventions::default());
    for n in 0..=3 {
        for nu in f.table(n).parts() {
            let e = f.eigenvalue(1, nu).unwrap();
            let mut rows = nu.parts().to_vec();
            rows.push(0);
            for i in 0..rows.len() {
                if i > 0 && rows[i] + 1 > rows[i - 1] {
                    continue;
                }
                let mut r = rows.clone();
                r[i] += 1;
                r.retain(|&x| x > 0);
                let d = f.eigenvalue(1, &Partition::new(r).unwrap()).unwrap().sub(&e);
                let (m, c) = d.numerator().as_term().expect("single monomial");
                assert!(d.is_polynomial());
                // -t1^{nu_i - 1} t2^{i}
                assert_eq!(c, q(-1, 1));
                assert_eq!(m, Monomial::from_pairs(&[(Var::T1, 2 * rows[i] as i32 - 2), (Var::T2, 2 * i as i32)]));
            }
        }
    }
}

#[test]
fn diagonal_operators_commute() {
    let f = fock();
    for n in 0..=3 {
        let a = f.diag_block(1, n).unwrap();
        let b = f.diag_block(-2, n).unwrap();
        assert_eq!(a.times(&b), b.times(&a));
    }
}

#[test]
fn central_k_examples() {
    let p = symbolic();
    assert_eq!(p.central_k(1).unwrap(), RatFun::monomial(Monomial::from_pairs(&[(Var::T1, -1), (Var::T2, -1)])));
    assert_eq!(p.central_k(0).unwrap(), RatFun::one());
    assert_eq!(p.central_k(2).unwrap(), p.hbar().recip().unwrap());
}

#[test]
fn n_coeff_examples() {
    let p = symbolic();
    let (t1, t2) = (RatFun::var(Var::T1), RatFun::var(Var::T2));
    let h = t1.mul(&t2);
    let expect = t1
        .sub(&t1.inv().unwrap())
        .mul(&t2.sub(&t2.inv().unwrap()))
        .mul(&h.inv().unwrap().sub(&h));
    assert_eq!(p.n_coeff(1).unwrap(), expect);
    let swapped = FockParams::new(RatFun::var(Var::T2), RatFun::var(Var::T1));
    for k in 1..=3 {
        assert_eq!(p.n_coeff(k).unwrap(), swapped.n_coeff(k).unwrap());
    }
    // t1 = t2 = s^2: n_2 = (s^2 - s^-2)^2 (s^-4 - s^4)/2
    let s = q(3, 2);
    let same = FockParams::new(s.clone(), s.clone());
    let s2 = s.clone() * s.clone();
    let expect = (s2.clone() - s2.recip()).pow(2) * (s2.pow(-2) - s2.pow(2)) / q(2, 1);
    assert_eq!(same.n_coeff(2).unwrap(), expect);
}

#[test]
fn generator_base_cases() {
    let alg = Algebra::with_defaults(fixed());
    for n in 0..=3 {
        let e = alg.block(LatticeVector::new(1, 0).unwrap(), n).unwrap();
        let h = alg.fock().heis_block(1, n).unwrap();
        assert_eq!(e.map(|x| (*x).clone()), h);
    }
}

#[test]
fn generator_collinear_examples() {
    let alg = Algebra::with_defaults(fixed());
    for n in 0..=3 {
        assert!(alg.collinear_opposite(LatticeVector::new(1, 1).unwrap(), n).unwrap());
        assert!(alg.collinear_opposite(LatticeVector::new(2, 1).unwrap(), n).unwrap());
        assert!(alg.triangle_closure(n).unwrap());
    }
}

#[test]
fn other_conventions_fail_the_closure() {
    for c in [MacdonaldConvention::HalfRoots, MacdonaldConvention::Full, MacdonaldConvention::HalfInverse] {
        let conv = FockConventions { macdonald: c, ..FockConventions::default() };
        let alg = Algebra::new(Fock::new(fixed(), conv), Default::default());
        assert!(!(0..=2).all(|n| alg.triangle_closure(n).unwrap()), "{c}");
    }
}

fn rational() -> impl Strategy<Value = BigRational> {
    (1i64..40, 1i64..40).prop_filter("not one", |(a, b)| a != b).prop_map(|(a, b)| q(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn macdonald_unitriangular_and_eigen(t1 in rational(), t2 in rational()) {
        let f = Fock::new(FockParams::new(t1, t2), FockConventions::default());
        for n in 0..=3 {
            prop_assert!(f.eigencheck(n).unwrap());
        }
    }

    #[test]
    fn gram_schmidt_is_orthogonal(qq in rational(), tt in rational()) {
        let table = std::sync::Arc::new(kvertex_toroidal::PartitionTable::new(3));
        let b = macdonald_block(table.clone(), &qq, &tt).unwrap();
        for i in 0..3 {
            for j in 0..i {
                let mut s = q(0, 1);
                for (r, l) in table.parts().iter().enumerate() {
                    let mut w = BigRational::from_integer(z_lambda(l));
                    for &k in l.parts() {
                        w = w * (q(1, 1) - qq.powi(k as i64).unwrap()) / (q(1, 1) - tt.powi(k as i64).unwrap());
                    }
                    s += b.to_power.get(r, i) * b.to_power.get(r, j) * w;
                }
                prop_assert_eq!(s, q(0, 1));
            }
        }
    }
}
