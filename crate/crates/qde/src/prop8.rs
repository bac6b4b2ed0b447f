//! Limits of the wall R-matrices of F(a1) x F(a a2) as a -> 0.

use kvertex_core::{BigRational, Field, Matrix, RatFun, Var};
use kvertex_toroidal::{
    exp_nilpotent, limit_at_zero, r_infinity_eigenvalue, r_infinity_variable, Algebra, AlphaReading, CoproductTwist,
    EvalExponent, Fock, FockConventions, FockParams, Slope, TensorContext, TensorSpace, WallSign,
};

use crate::QdeError;

/// Limit of one wall factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WallLimit {
    pub slope: Slope,
    pub sign: WallSign,
    /// `None` if some entry has a pole at a = 0.
    pub is_identity: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct Proposition8Report {
    pub eval: EvalExponent,
    pub max_degree: u32,
    /// R^-_0 has no dependence on a (checked with every parameter symbolic).
    pub shift_independent: bool,
    /// R^-_w for w > 0 and R^+_w for w < 0 in the slope window.
    pub walls: Vec<WallLimit>,
    /// R_infinity(0) = hbar^{-Omega}; `None` if the limit does not exist.
    pub r_infinity_is_hbar_omega: Option<bool>,
    /// R_infinity(0) = hbar^{n1 + n2}.
    pub r_infinity_is_hbar_degree: Option<bool>,
    /// R_infinity(0) = 1.
    pub r_infinity_is_identity: Option<bool>,
    /// The windowed product tends to (R^-_0)^{-1} hbar^Omega.
    pub product_limit: Option<bool>,
}

impl Proposition8Report {
    pub fn walls_hold(&self) -> bool {
        self.walls.iter().all(|w| w.is_identity == Some(true))
    }

    pub fn holds(&self) -> bool {
        self.shift_independent
            && self.walls_hold()
            && self.r_infinity_is_hbar_omega == Some(true)
            && self.product_limit == Some(true)
    }
}

/// Numeric torus weights and framings; the splitting parameter a = Aux^2 stays symbolic.
#[derive(Clone, Debug)]
pub struct WallPoint {
    pub t1h: BigRational,
    pub t2h: BigRational,
    pub a1: BigRational,
    pub a2: BigRational,
}

fn algebra<F: Field>(params: FockParams<F>, eval: EvalExponent) -> Algebra<F> {
    let conv = FockConventions { eval, ..FockConventions::default() };
    Algebra::new(Fock::new(params, conv), AlphaReading::default())
}

fn aux_squared() -> RatFun {
    RatFun::var(Var::Aux).mul(&RatFun::var(Var::Aux))
}

/// R^-_0 with t1, t2, a1, a2 and a all symbolic does not involve a.
pub fn slope_zero_shift_independent(max_degree: u32, eval: EvalExponent) -> Result<bool, QdeError> {
    let params = FockParams::new(RatFun::var(Var::T1), RatFun::var(Var::T2));
    let alg = algebra(params, eval);
    let a1 = RatFun::var(Var::A1).mul(&RatFun::var(Var::A1));
    let a2 = RatFun::var(Var::A2).mul(&RatFun::var(Var::A2)).mul(&aux_squared());
    let ctx = TensorContext::new(&alg, TensorSpace::new(2, max_degree), vec![a1, a2])?;
    let r = ctx.wall_r(Slope::new(0, 1)?, WallSign::Minus, 0, 1)?;
    let free = (0..r.rows()).all(|i| (0..r.cols()).all(|j| !r.get(i, j).uses(Var::Aux)));
    Ok(free && r == ctx.r0_minus(&[0], &[1], CoproductTwist::AsPrinted)?)
}

fn limit_is(m: &Matrix<RatFun>, expect: &Matrix<RatFun>) -> Result<Option<bool>, QdeError> {
    Ok(limit_at_zero(m, Var::Aux)?.map(|l| &l == expect))
}

/// R_infinity^{-1} through its eigenvalues on products of Macdonald polynomials.
fn r_infinity_inverse(ctx: &TensorContext<'_, RatFun>, u: &RatFun) -> Result<Matrix<RatFun>, QdeError> {
    let d = ctx.space().diagonal(|t| Ok(r_infinity_eigenvalue(ctx.algebra(), &t[0], &t[1], u)?.recip()?))?;
    let (to, from) = ctx.macdonald_change()?;
    Ok(to.times(&d).times(&from))
}

/// All four statements on F(a1) x F(a a2) truncated at `max_degree`, with the
/// slope window d(w) <= max_degree, |n(w)| <= `max_num`.
pub fn proposition8(
    point: &WallPoint,
    max_degree: u32,
    max_num: i32,
    eval: EvalExponent,
) -> Result<Proposition8Report, QdeError> {
    let c = |x: &BigRational| RatFun::constant(x.clone());
    let alg = algebra(FockParams::new(c(&point.t1h), c(&point.t2h)), eval);
    let a = aux_squared();
    let evals = vec![c(&point.a1), c(&point.a2).mul(&a)];
    let ctx = TensorContext::new(&alg, TensorSpace::new(2, max_degree), evals)?;
    let id = ctx.identity();

    let slopes: Vec<Slope> =
        Slope::window(max_degree as i32, max_num).into_iter().filter(|w| w.num() != 0).collect();
    let mut walls = Vec::new();
    for &w in &slopes {
        let sign = if w.num() > 0 { WallSign::Minus } else { WallSign::Plus };
        let r = ctx.wall_r(w, sign, 0, 1)?;
        walls.push(WallLimit { slope: w, sign, is_identity: limit_is(&r, &id)? });
    }

    let u = r_infinity_variable(eval, &c(&point.a1), &c(&point.a2), &a)?;
    let rinf = kvertex_toroidal::r_infinity(&ctx, &u)?;
    let hbar = alg.params().hbar();
    let hbar_degree = ctx.space().diagonal(|t| Ok(hbar.powi((t[0].size() + t[1].size()) as i64)?))?;
    let r_infinity_is_hbar_omega = limit_is(&rinf, &ctx.hbar_omega(&[0], &[1], -1)?)?;
    let r_infinity_is_hbar_degree = limit_is(&rinf, &hbar_degree)?;
    let r_infinity_is_identity = limit_is(&rinf, &id)?;

    // prod_{w >= 0, decreasing} (R^-_w)^{-1} R_inf^{-1} prod_{w < 0, increasing} (R^+_w)^{-1}
    let mut prod = id.clone();
    let mut nonneg: Vec<Slope> = slopes.iter().copied().filter(|w| w.num() > 0).collect();
    nonneg.push(Slope::new(0, 1)?);
    nonneg.sort_by(|x, y| y.cmp_value(*x));
    for w in nonneg {
        prod = prod.times(&exp_nilpotent(&ctx.wall_exponent(w, WallSign::Minus, 0, 1)?.negated())?);
    }
    prod = prod.times(&r_infinity_inverse(&ctx, &u)?);
    for &w in slopes.iter().filter(|w| w.num() < 0) {
        prod = prod.times(&exp_nilpotent(&ctx.wall_exponent(w, WallSign::Plus, 0, 1)?.negated())?);
    }
    let expect = ctx
        .r0_minus_inverse(&[0], &[1], CoproductTwist::AsPrinted)?
        .times(&ctx.hbar_omega(&[0], &[1], 1)?);
    let product_limit = limit_is(&prod, &expect)?;

    Ok(Proposition8Report {
        eval,
        max_degree,
        shift_independent: slope_zero_shift_independent(max_degree, eval)?,
        walls,
        r_infinity_is_hbar_omega,
        r_infinity_is_hbar_degree,
        r_infinity_is_identity,
        product_limit,
    })
}
