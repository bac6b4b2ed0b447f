//! Diagonal data at the fixed points of the Hilbert scheme: O(1), K^{1/2} and
//! the fixed-point normalizations.

use kvertex_core::{DegreeData, Field, Monomial, MultiPartition, Partition, Var, VarMap};
use kvertex_locvertex::{s_character, Framing, VertexConvention};

use crate::QdeError;

/// Which eigenvalue O(1) takes at a fixed point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LineBundleChoice {
    /// prod_box a t1^x t2^y, times hbar^{shift/2}
    Determinant { hbar_half_shift: i32 },
    /// the inverse of the determinant
    Dual,
}

impl Default for LineBundleChoice {
    fn default() -> Self {
        LineBundleChoice::Determinant { hbar_half_shift: 0 }
    }
}

/// Overall sign of the square root of the canonical class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum KHalfSign {
    #[default]
    Plus,
    Minus,
}

/// O(1) and K^{1/2} at every fixed point of one degree.
#[derive(Clone, Debug)]
pub struct DiagonalLineBundle<F: Field> {
    pub o1: Vec<F>,
    pub k_half: Vec<F>,
}

fn rank_one(p: &Partition) -> MultiPartition {
    MultiPartition::single(p.clone())
}

/// prod_box a t1^x t2^y as a monomial in square-root symbols.
fn determinant(p: &Partition) -> Monomial {
    let mut m = Monomial::one();
    for (x, y) in p.boxes() {
        m = m.mul(&Monomial::from_pairs(&[(Var::A1, 2), (Var::T1, 2 * x as i32), (Var::T2, 2 * y as i32)]));
    }
    m
}

/// Tangent weights at the fixed point in full units (t1 + t2 for one box):
/// the dual of S at zero degree.
fn tangent(p: &Partition) -> Result<kvertex_locvertex::Character, QdeError> {
    let l = rank_one(p);
    Ok(s_character(&l, &DegreeData::zero(&l), &Framing::standard(1), VertexConvention::default())?.dual())
}

impl<F: Field> DiagonalLineBundle<F> {
    pub fn new(labels: &[Partition], choice: LineBundleChoice, sign: KHalfSign, vm: &VarMap<F>) -> Result<Self, QdeError> {
        let mut o1 = Vec::with_capacity(labels.len());
        let mut k_half = Vec::with_capacity(labels.len());
        for p in labels {
            let det = determinant(p);
            let m = match choice {
                LineBundleChoice::Determinant { hbar_half_shift: s } => {
                    det.mul(&Monomial::from_pairs(&[(Var::T1, s), (Var::T2, s)]))
                }
                LineBundleChoice::Dual => det.inv(),
            };
            o1.push(vm.mono(&m)?);
            // prod_w w^{-1/2}: a full-unit weight read in square-root symbols
            let mut k = F::one();
            for (w, mult) in tangent(p)?.terms() {
                k = k.times(&vm.mono(&w.inv())?.powi(mult)?);
            }
            if sign == KHalfSign::Minus {
                k = k.negated();
            }
            k_half.push(k);
        }
        Ok(DiagonalLineBundle { o1, k_half })
    }

    pub fn dim(&self) -> usize {
        self.o1.len()
    }
}

/// 1 / prod_{w in T_lambda} (1 - w^{-1}): the factor relating the z^0 vertex
/// coefficient to tau K^{1/2}.
pub fn localization_weight<F: Field>(p: &Partition, vm: &VarMap<F>) -> Result<F, QdeError> {
    let mut den = F::one();
    for (w, mult) in tangent(p)?.terms() {
        let x = F::one().minus(&vm.mono(&w.inv().pow(2))?);
        den = den.times(&x.powi(mult)?);
    }
    Ok(den.recip()?)
}

/// c_lambda = prod_s (1 - t1^{a(s)} t2^{-l(s)-1}) t1^{x(s)} t2^{2y(s)}: the
/// diagonal change from fixed-point classes to the Macdonald basis used by the
/// capping operator.
pub fn fixed_point_normalization<F: Field>(p: &Partition, vm: &VarMap<F>) -> Result<F, QdeError> {
    let mut c = F::one();
    for (x, y) in p.boxes() {
        let (a, l) = (p.arm(x, y), p.leg(x, y));
        let w = Monomial::from_pairs(&[(Var::T1, 2 * a), (Var::T2, -2 * (l + 1))]);
        let shift = Monomial::from_pairs(&[(Var::T1, 2 * x as i32), (Var::T2, 4 * y as i32)]);
        c = c.times(&F::one().minus(&vm.mono(&w)?)).times(&vm.mono(&shift)?);
    }
    Ok(c)
}
