//! The dynamical cocycle identity for Y = E(z) on three rank-one factors, and
//! the structure of the right-hand side of the capping factorization.

use kvertex_core::{Field, Matrix};
use kvertex_toroidal::{series_identity, series_times, Algebra, CoproductTwist, MatrixSeries, TensorContext, TensorSpace};

use crate::capping::CappingSeries;
use crate::wkz::GroupSplit;
use crate::QdeError;

/// Both sides of
/// Y^{(2),(1)}(z) Y^{(1),(1)}(z hbar^{1/2}) = Y^{(1),(2)}(z) Y^{(1),(1)}(z hbar^{-1/2})
/// on the degree-N truncation of three rank-one factors.
pub struct CocycleSides<F: Field> {
    pub lhs: Matrix<F>,
    pub rhs: Matrix<F>,
}

impl<F: Field> CocycleSides<F> {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn cocycle_sides<F: Field>(
    alg: &Algebra<F>,
    max_degree: u32,
    z: &F,
    twist: CoproductTwist,
) -> Result<CocycleSides<F>, QdeError> {
    let ctx = TensorContext::new(alg, TensorSpace::new(3, max_degree), vec![F::one(); 3])?;
    let h = alg.params().hh();
    let lhs = ctx
        .e_op(z, &[0, 1], &[2], twist)?
        .times(&ctx.e_op(&z.times(&h), &[0], &[1], twist)?);
    let rhs = ctx
        .e_op(z, &[0], &[1, 2], twist)?
        .times(&ctx.e_op(&z.over(&h)?, &[1], &[2], twist)?);
    Ok(CocycleSides { lhs, rhs })
}

/// Y^{(r),(0)} = Y^{(0),(r)} = 1: E(z) with an empty group on either side.
pub fn cocycle_boundary_holds<F: Field>(alg: &Algebra<F>, max_degree: u32, z: &F) -> Result<bool, QdeError> {
    let ctx = TensorContext::new(alg, TensorSpace::new(2, max_degree), vec![F::one(); 2])?;
    for twist in [CoproductTwist::AsPrinted, CoproductTwist::Inverted] {
        for (g1, g2) in [(vec![0, 1], vec![]), (vec![], vec![0, 1])] {
            if !ctx.e_op(z, &g1, &g2, twist)?.is_identity() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// E(z) as a power series around z = 0 through `order`, from
/// x/(1 - z^{-k} x) = -sum_{j>=1} z^{kj} x^{1-j}.
pub fn e_series<F: Field>(ctx: &TensorContext<'_, F>, s: &GroupSplit, order: usize) -> Result<MatrixSeries<F>, QdeError> {
    let dim = ctx.space().dim();
    let p = ctx.algebra().params().clone();
    let h = p.hh();
    let (r1, r2) = (s.first.len() as i64, s.second.len() as i64);
    let mut x: MatrixSeries<F> = vec![Matrix::zeros(dim, dim); order + 1];
    for k in 1..=ctx.space().max_degree() as i64 {
        let pair = ctx
            .alpha_group(-(k as i32), &s.first, s.twist)?
            .times(&ctx.alpha_group(k as i32, &s.second, s.twist)?);
        if pair.is_zero() {
            continue;
        }
        let xk = h.powi(k * (r1 - r2))?;
        let nk = p.n_coeff(k)?;
        let mut j = 1;
        while (k * j) as usize <= order {
            let c = nk.times(&xk.powi(1 - j)?).negated();
            x[(k * j) as usize] = x[(k * j) as usize].plus(&pair.scaled(&c));
            j += 1;
        }
    }
    // exp of a nilpotent series without constant term
    let mut out = series_identity(dim, order);
    let mut term = series_identity(dim, order);
    for m in 1..=order + dim {
        term = series_times(&term, &x);
        let inv = F::from_int(m as i64).recip()?;
        term = term.iter().map(|t| t.scaled(&inv)).collect();
        if term.iter().all(Matrix::is_zero) {
            break;
        }
        out = out.iter().zip(&term).map(|(a, b)| a.plus(b)).collect();
    }
    Ok(out)
}

/// Psi(z c) as a series: the k-th coefficient scaled by c^k.
pub fn rescaled<F: Field>(psi: &[Matrix<F>], c: &F) -> Result<MatrixSeries<F>, QdeError> {
    let mut out = Vec::with_capacity(psi.len());
    let mut ck = F::one();
    for p in psi {
        out.push(p.scaled(&ck));
        ck = ck.times(c);
    }
    Ok(out)
}

/// (Psi_1(z c1) x Psi_2(z c2)) on the two-factor space in the product
/// Macdonald basis; `caps[n]` holds the capping series of degree n.
pub fn tensor_capping<F: Field>(
    ctx: &TensorContext<'_, F>,
    caps1: &[CappingSeries<F>],
    caps2: &[CappingSeries<F>],
    c1: &F,
    c2: &F,
    order: usize,
) -> Result<MatrixSeries<F>, QdeError> {
    let sp = ctx.space();
    let dim = sp.dim();
    let s1: Vec<MatrixSeries<F>> = caps1.iter().map(|c| rescaled(&c.psi, c1)).collect::<Result<_, _>>()?;
    let s2: Vec<MatrixSeries<F>> = caps2.iter().map(|c| rescaled(&c.psi, c2)).collect::<Result<_, _>>()?;
    let mut out = vec![Matrix::zeros(dim, dim); order + 1];
    for (i, ti) in sp.basis().iter().enumerate() {
        for (j, tj) in sp.basis().iter().enumerate() {
            let (n1, n2) = (ti[0].size(), ti[1].size());
            if tj[0].size() != n1 || tj[1].size() != n2 {
                continue;
            }
            let (c1, c2) = (&caps1[n1 as usize], &caps2[n2 as usize]);
            let (a1, b1) = (c1.labels.index_of(&ti[0]).expect("label"), c1.labels.index_of(&tj[0]).expect("label"));
            let (a2, b2) = (c2.labels.index_of(&ti[1]).expect("label"), c2.labels.index_of(&tj[1]).expect("label"));
            for k in 0..=order {
                let mut acc = F::zero();
                for l in 0..=k {
                    acc = acc.plus(&s1[n1 as usize][l].get(a1, b1).times(s2[n2 as usize][k - l].get(a2, b2)));
                }
                out[k].set(i, j, acc);
            }
        }
    }
    Ok(out)
}

/// Structure of Y^{(1),(1)}(z) (Psi^{(1)}(z hbar^{1/2}) x Psi^{(1)}(z hbar^{-1/2})):
/// lower triangular at every order, its diagonal blocks equal to the tensor
/// product of the capping operators, with identity constant term.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorizationStructure {
    pub lower_triangular: bool,
    pub diagonal_is_tensor: bool,
    pub invertible_diagonal: bool,
}

impl FactorizationStructure {
    pub fn holds(&self) -> bool {
        self.lower_triangular && self.diagonal_is_tensor && self.invertible_diagonal
    }
}

pub fn factorization_structure<F: Field>(
    ctx: &TensorContext<'_, F>,
    caps1: &[CappingSeries<F>],
    caps2: &[CappingSeries<F>],
    order: usize,
) -> Result<FactorizationStructure, QdeError> {
    let s = GroupSplit::pair();
    let h = ctx.algebra().params().hh();
    let (to, from) = ctx.macdonald_change()?;
    let y: MatrixSeries<F> = e_series(ctx, &s, order)?.iter().map(|m| from.times(m).times(&to)).collect();
    let t = tensor_capping(ctx, caps1, caps2, &h, &h.recip()?, order)?;
    let prod = series_times(&y, &t);
    let sp = ctx.space();
    let mut out = FactorizationStructure { lower_triangular: true, diagonal_is_tensor: true, invertible_diagonal: true };
    for (k, m) in prod.iter().enumerate() {
        for i in 0..sp.dim() {
            for j in 0..sp.dim() {
                let (ni, nj) = (sp.basis()[i][0].size(), sp.basis()[j][0].size());
                if ni < nj && !m.get(i, j).is_zero() {
                    out.lower_triangular = false;
                }
                if ni == nj && m.get(i, j) != t[k].get(i, j) {
                    out.diagonal_is_tensor = false;
                }
            }
        }
    }
    out.invertible_diagonal = prod[0].is_identity();
    Ok(out)
}
