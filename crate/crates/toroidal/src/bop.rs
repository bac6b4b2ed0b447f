//! The operator B(z) on one Fock space as a power series in z.

use kvertex_core::{BigInt, BigRational, Field, Matrix};

use crate::algebra::Algebra;
use crate::lattice::{LatticeVector, Slope};
use crate::ToroidalError;

/// Coefficient of the normal ordered exponent for slope w = -b/d.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum BReading {
    /// n_k hbar^{-kd/2}/(1 - z^{-kd} q^{k n(w)} hbar^{-kd/2})
    Printed,
    /// -n_k hbar^{-kd/2}/(1 - z^{-kd} q^{-k(d-b)} hbar^{-kd/2})
    #[default]
    Adjusted,
}

/// Power series in z with square matrix coefficients, index = z-order.
pub type MatrixSeries<F> = Vec<Matrix<F>>;

pub fn series_identity<F: Field>(dim: usize, order: usize) -> MatrixSeries<F> {
    let mut s = vec![Matrix::zeros(dim, dim); order + 1];
    s[0] = Matrix::identity(dim);
    s
}

pub fn series_times<F: Field>(x: &[Matrix<F>], y: &[Matrix<F>]) -> MatrixSeries<F> {
    let order = x.len().min(y.len()) - 1;
    let (r, c) = (x[0].rows(), y[0].cols());
    let mut out = vec![Matrix::zeros(r, c); order + 1];
    for i in 0..=order {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..=order - i {
            if !y[j].is_zero() {
                out[i + j] = out[i + j].plus(&x[i].times(&y[j]));
            }
        }
    }
    out
}

fn scalar_times<F: Field>(x: &[F], y: &[F]) -> Vec<F> {
    let mut out = vec![F::zero(); x.len()];
    for i in 0..x.len() {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..x.len() - i {
            out[i + j] = out[i + j].plus(&x[i].times(&y[j]));
        }
    }
    out
}

/// z-series of the coefficient f_k for slope w, expanded around z = 0 by
/// 1/(1 - z^{-a} c) = -sum_{j>=1} z^{aj} c^{-j}.
fn coefficient_series<F: Field>(
    alg: &Algebra<F>,
    w: Slope,
    k: i32,
    q: &F,
    reading: BReading,
    order: usize,
) -> Result<Vec<F>, ToroidalError> {
    let p = alg.params();
    let (b, d) = (-w.num(), w.den());
    let h = p.hh().powi(-(k * d) as i64)?;
    let (sign, qexp) = match reading {
        BReading::Printed => (F::one(), (k * w.num()) as i64),
        BReading::Adjusted => (F::one().negated(), -(k * (d - b)) as i64),
    };
    let c = q.powi(qexp)?.times(&h);
    let lead = sign.times(&p.n_coeff(k as i64)?).times(&h).negated();
    let cinv = c.recip()?;
    let mut s = vec![F::zero(); order + 1];
    let step = (k * d) as usize;
    let mut j = 1;
    let mut pow = cinv.clone();
    while step * j <= order {
        s[step * j] = lead.times(&pow);
        pow = pow.times(&cinv);
        j += 1;
    }
    Ok(s)
}

/// B(z) on F_{(n)} at evaluation parameter 1 (B does not depend on it), as
/// z-series through `order`. `q` is the full parameter q.
pub fn b_series<F: Field>(
    alg: &Algebra<F>,
    n: u32,
    order: usize,
    q: &F,
    reading: BReading,
) -> Result<MatrixSeries<F>, ToroidalError> {
    let dim = alg.fock().dim(n);
    let mut total = series_identity(dim, order);
    // larger slopes to the left, w = -1 rightmost
    for w in Slope::farey_negative(n as i32).into_iter().rev() {
        total = series_times(&total, &slope_factor(alg, w, n, order, q, reading)?);
    }
    Ok(total)
}

/// :exp(sum_k f_k alpha^w_{-k} alpha^w_k): on F_{(n)}, summed over the
/// multiplicities m_k with sum m_k k d <= n.
pub fn slope_factor<F: Field>(
    alg: &Algebra<F>,
    w: Slope,
    n: u32,
    order: usize,
    q: &F,
    reading: BReading,
) -> Result<MatrixSeries<F>, ToroidalError> {
    let dim = alg.fock().dim(n);
    let d = w.den();
    let kmax = n as i32 / d;
    let mut fk = Vec::new();
    for k in 1..=kmax {
        fk.push(coefficient_series(alg, w, k, q, reading, order)?);
    }
    let mut out = series_identity(dim, order);
    let mut mults = vec![0u32; kmax as usize];
    loop {
        // next multiset in lexicographic order within the degree budget
        let mut i = 0;
        loop {
            if i == mults.len() {
                return Ok(out);
            }
            mults[i] += 1;
            let used: i32 = mults.iter().enumerate().map(|(j, &m)| (j as i32 + 1) * m as i32).sum();
            if used * d <= n as i32 {
                break;
            }
            mults[i] = 0;
            i += 1;
        }
        let mut coeff = vec![F::zero(); order + 1];
        coeff[0] = F::one();
        let mut creators = Vec::new();
        let mut annihilators = Vec::new();
        for (j, &m) in mults.iter().enumerate() {
            let k = j as i32 + 1;
            let mut fact = BigInt::from(1);
            for t in 1..=m {
                coeff = scalar_times(&coeff, &fk[j]);
                fact *= BigInt::from(t);
            }
            let inv = F::from_rational(&BigRational::new(BigInt::from(1), fact));
            coeff = coeff.iter().map(|x| x.times(&inv)).collect();
            for _ in 0..m {
                creators.push(w.alpha(-k));
                annihilators.push(w.alpha(k));
            }
        }
        let mut word: Vec<LatticeVector> = creators;
        word.extend(annihilators);
        let Some(op) = alg.compose(&word, n)? else { continue };
        for (t, c) in coeff.iter().enumerate() {
            if !c.is_zero() {
                out[t] = out[t].plus(&op.scaled(c));
            }
        }
    }
}
