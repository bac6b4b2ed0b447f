use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Assignment, ExactError, LaurentPoly, Monomial, RatFun, Var, NVARS};

/// Exact field operations shared by specialized (rational) and symbolic
/// (rational-function) computations.
pub trait Field: Clone + fmt::Debug + fmt::Display + PartialEq + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: &BigRational) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    fn recip(&self) -> Result<Self, ExactError>;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    fn over(&self, o: &Self) -> Result<Self, ExactError> {
        Ok(self.times(&o.recip()?))
    }

    fn powi(&self, e: i64) -> Result<Self, ExactError> {
        let mut base = if e < 0 { self.recip()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.times(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.times(&base);
            }
        }
        Ok(acc)
    }

    fn scaled(&self, r: &BigRational) -> Self {
        self.times(&Self::from_rational(r))
    }

    fn is_one(&self) -> bool {
        self.minus(&Self::one()).is_zero()
    }
}

impl Field for BigRational {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn recip(&self) -> Result<Self, ExactError> {
        if Zero::is_zero(self) {
            Err(ExactError::DivisionByZero)
        } else {
            Ok(BigRational::recip(self))
        }
    }
    fn powi(&self, e: i64) -> Result<Self, ExactError> {
        if Zero::is_zero(self) && e < 0 {
            return Err(ExactError::DivisionByZero);
        }
        Ok(self.pow(e as i32))
    }
}

impl Field for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn one() -> Self {
        RatFun::one()
    }
    fn from_rational(r: &BigRational) -> Self {
        RatFun::constant(r.clone())
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn recip(&self) -> Result<Self, ExactError> {
        self.inv()
    }
    fn scaled(&self, r: &BigRational) -> Self {
        self.scale(r)
    }
}

/// Values of the ring symbols inside a field `F`: either the symbols
/// themselves (symbolic mode) or exact rationals (specialized mode), or a mix.
#[derive(Clone, Debug)]
pub struct VarMap<F: Field> {
    vals: [Option<F>; NVARS],
}

impl<F: Field> VarMap<F> {
    pub fn empty() -> Self {
        VarMap {
            vals: Default::default(),
        }
    }

    pub fn set(&mut self, v: Var, x: F) {
        self.vals[v.index()] = Some(x);
    }

    pub fn with(mut self, v: Var, x: F) -> Self {
        self.set(v, x);
        self
    }

    pub fn get(&self, v: Var) -> Result<&F, ExactError> {
        self.vals[v.index()].as_ref().ok_or(ExactError::Unassigned(v))
    }

    pub fn mono(&self, m: &Monomial) -> Result<F, ExactError> {
        let mut r = F::one();
        for v in Var::ALL {
            let e = m.exp(v);
            if e != 0 {
                r = r.times(&self.get(v)?.powi(e as i64)?);
            }
        }
        Ok(r)
    }

    pub fn poly(&self, p: &LaurentPoly) -> Result<F, ExactError> {
        let mut r = F::zero();
        for (m, c) in p.terms() {
            r = r.plus(&self.mono(m)?.scaled(c));
        }
        Ok(r)
    }

    pub fn ratfun(&self, f: &RatFun) -> Result<F, ExactError> {
        let mut r = self.poly(f.numerator())?;
        for (p, m) in f.denominator_factors() {
            r = r.over(&self.poly(p)?.powi(m as i64)?)?;
        }
        Ok(r)
    }
}

impl VarMap<BigRational> {
    pub fn from_assignment(a: &Assignment) -> Self {
        let mut m = VarMap::empty();
        for (v, x) in a.assigned() {
            m.set(v, x.clone());
        }
        m
    }
}

impl VarMap<RatFun> {
    /// Every symbol stands for itself.
    pub fn symbolic() -> Self {
        Self::partial(&Assignment::new())
    }

    /// Assigned symbols become constants, the rest stay symbolic.
    pub fn partial(a: &Assignment) -> Self {
        let mut m = VarMap::empty();
        for v in Var::ALL {
            match a.get(v) {
                Some(x) => m.set(v, RatFun::constant(x.clone())),
                None => m.set(v, RatFun::var(v)),
            }
        }
        m
    }
}
