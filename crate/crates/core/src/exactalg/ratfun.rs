use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Assignment, ExactError, LaurentPoly, Monomial, Var};

/// Rational function: a Laurent numerator over a product of normalized
/// polynomial factors with multiplicities.
///
/// Factors are genuine polynomials with no monomial content and leading
/// coefficient 1. No gcd is ever computed; common factors are removed by
/// trial division against the stored factors only. Equality is decided by
/// bringing both sides to a common denominator, which is exact.
#[derive(Clone)]
pub struct RatFun {
    num: LaurentPoly,
    den: BTreeMap<LaurentPoly, u32>,
}

impl RatFun {
    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        RatFun {
            num,
            den: BTreeMap::new(),
        }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn integer(n: i64) -> Self {
        Self::from_poly(LaurentPoly::integer(n))
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::from_poly(LaurentPoly::monomial(m))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(LaurentPoly::var(v))
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator_factors(&self) -> impl Iterator<Item = (&LaurentPoly, u32)> {
        self.den.iter().map(|(f, m)| (f, *m))
    }

    pub fn denominator(&self) -> LaurentPoly {
        product(&self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.den.is_empty() {
            self.num.as_constant()
        } else {
            None
        }
    }

    fn reduce(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let keys: Vec<LaurentPoly> = self.den.keys().cloned().collect();
        for f in keys {
            let mut mult = self.den[&f];
            while mult > 0 {
                match self.num.exact_div(&f) {
                    Some(q) => {
                        self.num = q;
                        mult -= 1;
                    }
                    None => break,
                }
            }
            if mult == 0 {
                self.den.remove(&f);
            } else {
                self.den.insert(f, mult);
            }
        }
        self
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return RatFun::zero();
        }
        let mut den = self.den.clone();
        for (f, m) in &o.den {
            *den.entry(f.clone()).or_insert(0) += m;
        }
        RatFun {
            num: self.num.mul(&o.num),
            den,
        }
        .reduce()
    }

    fn combine(&self, o: &Self, sign: bool) -> Self {
        if self.den == o.den {
            let num = if sign {
                self.num.add(&o.num)
            } else {
                self.num.sub(&o.num)
            };
            return RatFun {
                num,
                den: self.den.clone(),
            }
            .reduce();
        }
        let mut lcm = self.den.clone();
        for (f, m) in &o.den {
            let e = lcm.entry(f.clone()).or_insert(0);
            *e = (*e).max(*m);
        }
        let lift = |x: &RatFun| {
            let mut p = x.num.clone();
            for (f, m) in &lcm {
                let have = x.den.get(f).copied().unwrap_or(0);
                if *m > have {
                    p = p.mul(&f.pow(m - have));
                }
            }
            p
        };
        let a = lift(self);
        let b = lift(o);
        let num = if sign { a.add(&b) } else { a.sub(&b) };
        RatFun { num, den: lcm }.reduce()
    }

    pub fn add(&self, o: &Self) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        self.combine(o, true)
    }

    pub fn sub(&self, o: &Self) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        self.combine(o, false)
    }

    pub fn neg(&self) -> Self {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return RatFun::zero();
        }
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.num.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let (c, m, p) = self.num.normalize();
        let num = product(&self.den).shift(&m.inv()).scale(&c.recip());
        let mut den = BTreeMap::new();
        if p.as_constant().is_none() {
            den.insert(p, 1);
        }
        Ok(RatFun { num, den }.reduce())
    }

    pub fn div(&self, o: &Self) -> Result<Self, ExactError> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self, ExactError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut r = RatFun::one();
        for _ in 0..e.unsigned_abs() {
            r = r.mul(&base);
        }
        Ok(r)
    }

    pub fn eval(&self, a: &Assignment) -> Result<BigRational, ExactError> {
        let mut d = BigRational::one();
        for (f, m) in &self.den {
            let v = f.eval(a)?;
            if v.is_zero() {
                return Err(ExactError::DenominatorVanishes);
            }
            d *= v.pow(*m as i32);
        }
        Ok(self.num.eval(a)? / d)
    }

    /// Substitute the assigned variables and keep the rest symbolic.
    pub fn substitute(&self, a: &Assignment) -> Result<RatFun, ExactError> {
        let mut r = RatFun::from_poly(self.num.substitute(a)?);
        for (f, m) in &self.den {
            let g = RatFun::from_poly(f.substitute(a)?);
            if g.is_zero() {
                return Err(ExactError::DenominatorVanishes);
            }
            r = r.div(&g.pow(*m as i64)?)?;
        }
        Ok(r)
    }

    /// Leading behaviour at `v -> 0`: returns `(e, g)` with `f = v^e g (1 + O(v))`
    /// and `g` free of `v`.
    pub fn lowest_term(&self, v: Var) -> Result<(i32, RatFun), ExactError> {
        let (mut e, c) = self.num.lowest_in(v).ok_or(ExactError::ZeroInput)?;
        let mut g = RatFun::from_poly(c);
        for (f, m) in &self.den {
            let (ef, cf) = f.lowest_in(v).ok_or(ExactError::ZeroInput)?;
            e -= ef * (*m as i32);
            g = g.div(&RatFun::from_poly(cf).pow(*m as i64)?)?;
        }
        Ok((e, g))
    }

    pub fn uses(&self, v: Var) -> bool {
        self.num.uses(v) || self.den.keys().any(|f| f.uses(v))
    }
}

fn product(den: &BTreeMap<LaurentPoly, u32>) -> LaurentPoly {
    let mut p = LaurentPoly::one();
    for (f, m) in den {
        p = p.mul(&f.pow(*m));
    }
    p
}

impl PartialEq for RatFun {
    fn eq(&self, o: &Self) -> bool {
        self.sub(o).is_zero()
    }
}

impl From<LaurentPoly> for RatFun {
    fn from(p: LaurentPoly) -> Self {
        RatFun::from_poly(p)
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/(", self.num)?;
        for (i, (p, m)) in self.den.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "({p})")?;
            if *m > 1 {
                write!(f, "^{m}")?;
            }
        }
        f.write_str(")")
    }
}

impl Default for RatFun {
    fn default() -> Self {
        RatFun::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;

    fn t1() -> RatFun {
        RatFun::var(Var::T1)
    }

    #[test]
    fn cancellation_by_trial_division() {
        let x = t1().mul(&t1()).sub(&t1().pow(-2).unwrap());
        let r = x.div(&x).unwrap();
        assert!(r.as_constant() == Some(q(1, 1)));
    }

    #[test]
    fn lowest_term_regular_point() {
        let a = RatFun::var(Var::Aux);
        let f = RatFun::one().add(&a).div(&RatFun::one().sub(&a)).unwrap();
        let (e, g) = f.lowest_term(Var::Aux).unwrap();
        assert_eq!(e, 0);
        assert_eq!(g, RatFun::one());
    }

    #[test]
    fn lowest_term_dominant_monomial() {
        let a = RatFun::var(Var::Aux);
        let x = RatFun::var(Var::T2);
        let f = a.mul(&x).add(&a.mul(&a));
        let (e, g) = f.lowest_term(Var::Aux).unwrap();
        assert_eq!(e, 1);
        assert_eq!(g, x);
    }
}
