use kvertex_core::combinat::{enumerate_degree_data, CombinatError};
use kvertex_core::{
    Cell, DegreeData, Field, Monomial, Monotonicity, MultiPartition, SeriesZ, Var, VarMap,
};

use crate::{Character, Descendent, Framing, LocError};

/// Sign conventions of the localization formula.
///
/// `taut_q` is the power of `q^{d}` attached to each box in the tautological
/// character, `descendent_q` the one used when evaluating descendents, and
/// `mono` the direction of the stability condition on degree data, and
/// `quotient` the sign of the denominator in the virtual tangent space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VertexConvention {
    pub taut_q: i32,
    pub descendent_q: i32,
    pub mono: Monotonicity,
    pub quotient: Quotient,
}

/// Denominator of the degree correction in `T^vir`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quotient {
    /// `(S(d) - S(0))/(q - 1)`
    QMinusOne,
    /// `(S(d) - S(0))/(1 - q)`
    OneMinusQ,
}

impl Default for VertexConvention {
    fn default() -> Self {
        VertexConvention {
            taut_q: -1,
            descendent_q: -1,
            mono: Monotonicity::Increasing,
            quotient: Quotient::OneMinusQ,
        }
    }
}

impl VertexConvention {
    /// `q^{+d}` everywhere with plane partitions.
    pub fn literal() -> Self {
        VertexConvention {
            taut_q: 1,
            descendent_q: 1,
            mono: Monotonicity::Decreasing,
            quotient: Quotient::QMinusOne,
        }
    }

    pub fn describe(&self) -> String {
        format!(
            "taut q^({}d), descendent q^({}d), {:?} degree data, {:?}",
            self.taut_q, self.descendent_q, self.mono, self.quotient
        )
    }
}

fn check_rank(lambda: &MultiPartition, framing: &Framing) -> Result<(), LocError> {
    if lambda.rank() != framing.rank() {
        return Err(LocError::FramingMismatch {
            framing: framing.rank(),
            rank: lambda.rank(),
        });
    }
    Ok(())
}

/// `phi(box) = a_{n(box)} t1^x t2^y` as a full-unit monomial.
pub fn box_weight(lambda: &MultiPartition, cell: &Cell, framing: &Framing) -> Result<Monomial, LocError> {
    if !lambda.contains(cell) || cell.comp >= framing.rank() {
        return Err(CombinatError::BoxOutsideShape {
            comp: cell.comp,
            x: cell.x,
            y: cell.y,
        }
        .into());
    }
    Ok(framing.weights()[cell.comp]
        .mul(&Monomial::var(Var::T1, cell.x as i32))
        .mul(&Monomial::var(Var::T2, cell.y as i32)))
}

/// `V = sum_box phi(box) q^{taut_q d(box)}`.
pub fn taut_character(
    lambda: &MultiPartition,
    d: &DegreeData,
    framing: &Framing,
    conv: VertexConvention,
) -> Result<Character, LocError> {
    check_rank(lambda, framing)?;
    if d.shape() != lambda {
        return Err(CombinatError::ShapeMismatch.into());
    }
    let mut c = Character::zero();
    for cell in lambda.cells() {
        let k = d.get(&cell)? as i32;
        c.add_term(
            box_weight(lambda, &cell, framing)?.mul(&Monomial::var(Var::Q, conv.taut_q * k)),
            1,
        );
    }
    Ok(c)
}

/// `S = W* V + W V* t1^-1 t2^-1 - V* V (1 - t1^-1)(1 - t2^-1)`.
pub fn s_character(
    lambda: &MultiPartition,
    d: &DegreeData,
    framing: &Framing,
    conv: VertexConvention,
) -> Result<Character, LocError> {
    let v = taut_character(lambda, d, framing, conv)?;
    let w = framing.character();
    let inv_hbar = Character::weight(Monomial::from_pairs(&[(Var::T1, -1), (Var::T2, -1)]));
    let one = Character::one();
    let f1 = one.sub(&Character::weight(Monomial::var(Var::T1, -1)));
    let f2 = one.sub(&Character::weight(Monomial::var(Var::T2, -1)));
    Ok(w
        .dual()
        .mul(&v)
        .add(&w.mul(&v.dual()).mul(&inv_hbar))
        .sub(&v.dual().mul(&v).mul(&f1).mul(&f2)))
}

/// `T^vir = S(0) + (S(d) - S(0))/(q - 1)`, or over `1 - q`.
pub fn tvir_character(
    lambda: &MultiPartition,
    d: &DegreeData,
    framing: &Framing,
    conv: VertexConvention,
) -> Result<Character, LocError> {
    let s0 = s_character(lambda, &DegreeData::zero(lambda), framing, conv)?;
    let sd = s_character(lambda, d, framing, conv)?;
    let corr = sd.sub(&s0).div_q_minus_one()?;
    Ok(match conv.quotient {
        Quotient::QMinusOne => s0.add(&corr),
        Quotient::OneMinusQ => s0.sub(&corr),
    })
}

/// `prod_w a(w)^m` with `a(w) = 1/(w^{1/2} - w^{-1/2})`.
pub fn roof_hat<F: Field>(c: &Character, vm: &VarMap<F>) -> Result<F, LocError> {
    let k = c.constant_term();
    if k != 0 {
        return Err(LocError::ConstantTermPresent(k));
    }
    let mut num = F::one();
    let mut den = F::one();
    for (m, mult) in c.terms() {
        let s = vm.mono(m)?;
        let f = s.minus(&s.recip()?);
        let p = f.powi(mult.unsigned_abs() as i64)?;
        if mult > 0 {
            den = den.times(&p);
        } else {
            num = num.times(&p);
        }
    }
    Ok(num.over(&den)?)
}

/// Value of the descendent at `x_box = phi(box) q^{descendent_q d(box)}`.
pub fn descendent_eval<F: Field>(
    tau: &Descendent,
    lambda: &MultiPartition,
    d: &DegreeData,
    framing: &Framing,
    conv: VertexConvention,
    vm: &VarMap<F>,
) -> Result<F, LocError> {
    let mut xs = Vec::new();
    for cell in lambda.cells() {
        let k = d.get(&cell)? as i32;
        let w = box_weight(lambda, &cell, framing)?
            .mul(&Monomial::var(Var::Q, conv.descendent_q * k));
        xs.push(vm.mono(&w.pow(2))?);
    }
    tau.eval(&xs)
}

/// Coefficient of a single fixed point `(lambda, d)`, without the `z` power.
pub fn fixed_point_term<F: Field>(
    lambda: &MultiPartition,
    d: &DegreeData,
    tau: &Descendent,
    framing: &Framing,
    conv: VertexConvention,
    vm: &VarMap<F>,
) -> Result<F, LocError> {
    let r = framing.rank() as i32;
    let k = d.total() as i32;
    let tv = tvir_character(lambda, d, framing, conv)?;
    let mut x = roof_hat(&tv, vm)?.times(&descendent_eval(tau, lambda, d, framing, conv, vm)?);
    x = x.times(&vm.mono(&Monomial::var(Var::Q, -r * k))?);
    if (r * k) % 2 != 0 {
        x = x.negated();
    }
    Ok(x)
}

/// Bare vertex at `lambda` through `z^order`.
pub fn bare_vertex<F: Field>(
    lambda: &MultiPartition,
    tau: &Descendent,
    order: usize,
    framing: &Framing,
    conv: VertexConvention,
    vm: &VarMap<F>,
) -> Result<SeriesZ<F>, LocError> {
    check_rank(lambda, framing)?;
    let mut s = SeriesZ::zero(order);
    for k in 0..=order {
        let mut c = F::zero();
        for d in enumerate_degree_data(lambda, k as u32, conv.mono) {
            c = c.plus(&fixed_point_term(lambda, &d, tau, framing, conv, vm)?);
        }
        s.set(k, c);
    }
    Ok(s)
}
