//! The rank one quantum difference equation, its fundamental solution and the
//! capped vertex.

use std::sync::Arc;

use kvertex_core::{Field, Matrix, MultiPartition, SeriesZ, Var, VarMap};
use kvertex_locvertex::{bare_vertex, Descendent, Framing, VertexConvention};
use kvertex_toroidal::{b_series, Algebra, BReading, FockParams, MatrixSeries, PartitionTable};

use crate::bundle::{fixed_point_normalization, DiagonalLineBundle, KHalfSign, LineBundleChoice};
use crate::QdeError;

/// Convention switches of the capping computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct QdeConventions {
    pub bundle: LineBundleChoice,
    pub k_sign: KHalfSign,
    pub b_reading: BReading,
    pub vertex: VertexConvention,
}

/// Fundamental solution Psi(z) = sum Psi_k z^k on one degree, in the
/// Macdonald basis, with the M(z) series it was solved from.
#[derive(Clone, Debug)]
pub struct CappingSeries<F: Field> {
    pub labels: Arc<PartitionTable>,
    pub psi: MatrixSeries<F>,
    pub m: MatrixSeries<F>,
    pub o1: Vec<F>,
    pub q: F,
}

impl<F: Field> CappingSeries<F> {
    pub fn order(&self) -> usize {
        self.psi.len() - 1
    }

    /// Psi(zq) O(1) - M(z) Psi(z) vanishes through the computed order, with
    /// both sides recomposed from full matrix products.
    pub fn residual_vanishes(&self) -> Result<bool, QdeError> {
        qde_residual_vanishes(&self.psi, &self.m, &self.o1, &self.q)
    }
}

/// Rank one setting: parameter values and the algebra acting on F(a).
pub struct RankOne<F: Field> {
    vm: VarMap<F>,
    alg: Algebra<F>,
    conv: QdeConventions,
}

impl<F: Field> RankOne<F> {
    pub fn new(vm: VarMap<F>, conv: QdeConventions) -> Result<Self, QdeError> {
        let alg = Algebra::with_defaults(FockParams::from_varmap(&vm)?);
        Ok(RankOne { vm, alg, conv })
    }

    pub fn values(&self) -> &VarMap<F> {
        &self.vm
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.alg
    }

    pub fn conventions(&self) -> QdeConventions {
        self.conv
    }

    /// The full parameter q.
    pub fn q(&self) -> Result<F, QdeError> {
        let h = self.vm.get(Var::Q)?;
        Ok(h.times(h))
    }

    pub fn labels(&self, n: u32) -> Arc<PartitionTable> {
        self.alg.fock().table(n)
    }

    pub fn bundle(&self, n: u32) -> Result<DiagonalLineBundle<F>, QdeError> {
        DiagonalLineBundle::new(self.labels(n).parts(), self.conv.bundle, self.conv.k_sign, &self.vm)
    }

    /// M(z) = O(1) B(z) on F_{(n)} in the Macdonald basis, through `order`.
    pub fn m_series(&self, n: u32, order: usize) -> Result<MatrixSeries<F>, QdeError> {
        let b = b_series(&self.alg, n, order, &self.q()?, self.conv.b_reading)?;
        let mac = self.alg.fock().macdonald(n)?;
        let o = Matrix::diagonal(&self.bundle(n)?.o1);
        Ok(b.iter().map(|bk| o.times(&mac.from_power).times(bk).times(&mac.to_power)).collect())
    }

    pub fn solve_psi(&self, n: u32, order: usize) -> Result<CappingSeries<F>, QdeError> {
        let m = self.m_series(n, order)?;
        let o1 = self.bundle(n)?.o1;
        let q = self.q()?;
        let psi = solve_psi(&m, &o1, &q)?;
        Ok(CappingSeries { labels: self.labels(n), psi, m, o1, q })
    }

    /// Bare vertices at every fixed point of degree n, in label order.
    pub fn bare_vertices(&self, n: u32, tau: &Descendent, order: usize) -> Result<Vec<SeriesZ<F>>, QdeError> {
        let framing = Framing::standard(1);
        self.labels(n)
            .parts()
            .iter()
            .map(|p| {
                let l = MultiPartition::single(p.clone());
                Ok(bare_vertex(&l, tau, order, &framing, self.conv.vertex, &self.vm)?)
            })
            .collect()
    }

    /// Capped vertex Psi V at every fixed point of degree n.
    pub fn capped_vertices(
        &self,
        psi: &CappingSeries<F>,
        tau: &Descendent,
        order: usize,
    ) -> Result<Vec<SeriesZ<F>>, QdeError> {
        let n = psi.labels.get(0).size();
        let bare = self.bare_vertices(n, tau, order)?;
        let c: Vec<F> = psi
            .labels
            .parts()
            .iter()
            .map(|p| fixed_point_normalization(p, &self.vm))
            .collect::<Result<_, _>>()?;
        capped_from_parts(&psi.psi, &bare, &c, order)
    }
}

/// sum_j Psi_j (c V)_{k-j} / c at each order, per fixed point.
pub fn capped_from_parts<F: Field>(
    psi: &[Matrix<F>],
    bare: &[SeriesZ<F>],
    c: &[F],
    order: usize,
) -> Result<Vec<SeriesZ<F>>, QdeError> {
    let d = bare.len();
    if psi.len() <= order {
        return Err(QdeError::DimensionMismatch { expected: order + 1, got: psi.len() });
    }
    let mut out = Vec::with_capacity(d);
    for i in 0..d {
        let mut s = SeriesZ::zero(order);
        for k in 0..=order {
            let mut acc = F::zero();
            for (j, pj) in psi.iter().enumerate().take(k + 1) {
                for m in 0..d {
                    let x = pj.get(i, m);
                    if !x.is_zero() {
                        acc = acc.plus(&x.times(&c[m]).times(bare[m].coeff(k - j)));
                    }
                }
            }
            s.set(k, acc.over(&c[i])?);
        }
        out.push(s);
    }
    Ok(out)
}

/// Order by order solution of Psi(zq) O(1) = M(z) Psi(z) with Psi(0) = 1:
/// (q^k O_m - O_l) (Psi_k)_{lm} = (sum_{j<k} M_{k-j} Psi_j)_{lm}.
pub fn solve_psi<F: Field>(m: &[Matrix<F>], o1: &[F], q: &F) -> Result<MatrixSeries<F>, QdeError> {
    let d = o1.len();
    let mut psi = vec![Matrix::identity(d)];
    let mut qk = F::one();
    for k in 1..m.len() {
        qk = qk.times(q);
        let mut rhs = Matrix::zeros(d, d);
        for j in 0..k {
            rhs = rhs.plus(&m[k - j].times(&psi[j]));
        }
        let mut p = Matrix::zeros(d, d);
        for l in 0..d {
            for c in 0..d {
                let x = rhs.get(l, c);
                let den = qk.times(&o1[c]).minus(&o1[l]);
                if den.is_zero() {
                    if x.is_zero() {
                        continue;
                    }
                    return Err(QdeError::ResonantSpecialization { order: k, row: l, col: c });
                }
                if !x.is_zero() {
                    p.set(l, c, x.over(&den)?);
                }
            }
        }
        psi.push(p);
    }
    Ok(psi)
}

/// q^k Psi_k O(1) = sum_{j<=k} M_{k-j} Psi_j at every computed order.
pub fn qde_residual_vanishes<F: Field>(
    psi: &[Matrix<F>],
    m: &[Matrix<F>],
    o1: &[F],
    q: &F,
) -> Result<bool, QdeError> {
    let o = Matrix::diagonal(o1);
    let order = psi.len().min(m.len());
    for k in 0..order {
        let lhs = psi[k].times(&o).scaled(&q.powi(k as i64)?);
        let mut rhs = Matrix::zeros(o1.len(), o1.len());
        for j in 0..=k {
            rhs = rhs.plus(&m[k - j].times(&psi[j]));
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
