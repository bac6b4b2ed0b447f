use kvertex_core::combinat::{enumerate_degree_data, enumerate_multipartitions};
use kvertex_core::{DegreeData, Field, Monomial, MultiPartition, RatFun, SeriesZ, Var, VarMap};

use crate::{
    bare_vertex, fixed_point_term, roof_hat, s_character, Descendent, Framing, LocError,
    VertexConvention,
};

/// One compared coefficient of the factorization identity.
#[derive(Clone, Debug)]
pub struct FacverEntry {
    pub lambda: MultiPartition,
    pub order: usize,
    /// Leading power of the splitting parameter on the left-hand side.
    pub exponent: i32,
    pub pass: bool,
}

/// Placement of the `z` shifts on the two factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShiftForm {
    /// `V^{(r1),tau}(z hbar^{r2/2}) V^{(r2),1}(z hbar^{-r1/2} q^{-r1})`.
    Printed,
    /// `V^{(r1),tau}(z hbar^{-r2/2} q^{-r2}) V^{(r2),1}(z hbar^{r1/2})`: the roles of
    /// the scaled and unscaled groups exchanged.
    Mirrored,
}

impl ShiftForm {
    /// Shift monomials (square-root units) applied to `z` in the first and
    /// second factor.
    pub fn shifts(self, r1: usize, r2: usize) -> (Monomial, Monomial) {
        let (r1, r2) = (r1 as i32, r2 as i32);
        let hh = |e: i32| Monomial::from_pairs(&[(Var::T1, e), (Var::T2, e)]);
        match self {
            ShiftForm::Printed => (hh(r2), hh(-r1).mul(&Monomial::var(Var::Q, -2 * r1))),
            ShiftForm::Mirrored => (hh(-r2).mul(&Monomial::var(Var::Q, -2 * r2)), hh(r1)),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct FacverReport {
    pub entries: Vec<FacverEntry>,
}

impl FacverReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &FacverEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }
}

/// Compare `lim_{a->0} V^{(r)}` with the shifted product of rank-`r1` and
/// rank-`r2` vertices, coefficient by coefficient, for every fixed point of
/// total size `n`. Both sides are taken in the basis of fixed-point classes
/// normalized by the tangent roof (see [`normalized`]).
///
/// Symbols left symbolic in `vm` stay symbolic; `Aux` must be symbolic.
#[allow(clippy::too_many_arguments)]
pub fn facver_check(
    tau: &Descendent,
    n: u32,
    r1: usize,
    r2: usize,
    order: usize,
    conv: VertexConvention,
    form: ShiftForm,
    vm: &VarMap<RatFun>,
) -> Result<FacverReport, LocError> {
    let mut report = FacverReport::default();
    let split = Framing::split(r1, r2);
    let f1 = Framing::standard(r1);
    let f2 = Framing::range(r1 + 1, r2);
    let one = Descendent::One;
    let (s1, s2) = form.shifts(r1, r2);
    let (s1, s2) = (vm.mono(&s1)?, vm.mono(&s2)?);
    for lambda in enumerate_multipartitions(n, r1 + r2) {
        let (l1, l2) = lambda.split(r1);
        let lhs = normalized(&lambda, tau, order, &split, conv, vm)?;
        let v1 = normalized(&l1, tau, order, &f1, conv, vm)?.rescale_arg(&s1)?;
        let v2 = normalized(&l2, &one, order, &f2, conv, vm)?.rescale_arg(&s2)?;
        let rhs: SeriesZ<RatFun> = v1.times(&v2);
        for k in 0..=order {
            let (exponent, pass) = compare_limit(lhs.coeff(k), rhs.coeff(k))?;
            report.entries.push(FacverEntry {
                lambda: lambda.clone(),
                order: k,
                exponent,
                pass,
            });
        }
    }
    Ok(report)
}

/// `a^0` coefficient of `l` compared with `r`; returns the leading exponent and the verdict.
fn compare_limit(l: &RatFun, r: &RatFun) -> Result<(i32, bool), LocError> {
    if l.is_zero() {
        return Ok((0, r.is_zero()));
    }
    let (e, g) = l.lowest_term(Var::Aux)?;
    Ok(match e {
        0 => (0, g == *r),
        e if e > 0 => (e, r.is_zero()),
        e => (e, false),
    })
}

/// Same identity checked one fixed point at a time: the term of `(lambda, d)`
/// on the left against the product of the terms of `(lambda_1, d_1)` and
/// `(lambda_2, d_2)` on the right. Passing every term implies the summed
/// identity, and the individual terms stay small enough for fully symbolic
/// parameters.
#[allow(clippy::too_many_arguments)]
pub fn facver_check_termwise(
    tau: &Descendent,
    n: u32,
    r1: usize,
    r2: usize,
    order: usize,
    conv: VertexConvention,
    form: ShiftForm,
    vm: &VarMap<RatFun>,
) -> Result<FacverReport, LocError> {
    let mut report = FacverReport::default();
    let split = Framing::split(r1, r2);
    let f1 = Framing::standard(r1);
    let f2 = Framing::range(r1 + 1, r2);
    let one = Descendent::One;
    let (s1, s2) = form.shifts(r1, r2);
    let (s1, s2) = (vm.mono(&s1)?, vm.mono(&s2)?);
    let tangent_roof = |l: &MultiPartition, f: &Framing| -> Result<RatFun, LocError> {
        let t = s_character(l, &DegreeData::zero(l), f, conv)?;
        Ok(roof_hat(&t, vm)?.inv()?)
    };
    for lambda in enumerate_multipartitions(n, r1 + r2) {
        let (l1, l2) = lambda.split(r1);
        let (n0, n1, n2) = (
            tangent_roof(&lambda, &split)?,
            tangent_roof(&l1, &f1)?,
            tangent_roof(&l2, &f2)?,
        );
        for k in 0..=order {
            let mut exponent = 0;
            let mut pass = true;
            for d in enumerate_degree_data(&lambda, k as u32, conv.mono) {
                let (d1, d2) = d.split(r1);
                let lhs = fixed_point_term(&lambda, &d, tau, &split, conv, vm)?.mul(&n0);
                let rhs = fixed_point_term(&l1, &d1, tau, &f1, conv, vm)?
                    .mul(&n1)
                    .mul(&s1.powi(d1.total() as i64)?)
                    .mul(&fixed_point_term(&l2, &d2, &one, &f2, conv, vm)?)
                    .mul(&n2)
                    .mul(&s2.powi(d2.total() as i64)?);
                let (e, ok) = compare_limit(&lhs, &rhs)?;
                exponent = exponent.min(e);
                pass &= ok;
            }
            report.entries.push(FacverEntry {
                lambda: lambda.clone(),
                order: k,
                exponent,
                pass,
            });
        }
    }
    Ok(report)
}

/// Vertex in the basis of fixed-point classes divided by the tangent roof
/// `a(T_lambda)`, so that the `z^0` coefficient is `tau(lambda, 0)`.
pub fn normalized(
    lambda: &MultiPartition,
    tau: &Descendent,
    order: usize,
    framing: &Framing,
    conv: VertexConvention,
    vm: &VarMap<RatFun>,
) -> Result<SeriesZ<RatFun>, LocError> {
    let t = s_character(lambda, &DegreeData::zero(lambda), framing, conv)?;
    let norm = roof_hat(&t, vm)?.inv()?;
    Ok(bare_vertex(lambda, tau, order, framing, conv, vm)?.scaled(&norm))
}
