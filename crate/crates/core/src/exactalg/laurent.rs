use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Assignment, ExactError, Monomial, Var};

/// Sparse Laurent polynomial with exact rational coefficients.
///
/// Terms are kept in a `BTreeMap`, so iteration follows the lexicographic
/// order on exponent vectors and the last entry is the leading term.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, BigRational::one())
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var(v, 1))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(it: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value if the polynomial has no non-trivial monomial.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Single term `(m, c)` if the polynomial is a nonzero monomial multiple.
    pub fn as_term(&self) -> Option<(Monomial, BigRational)> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            Some((*m, c.clone()))
        } else {
            None
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                *old += c;
                if old.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, -c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn shift(&self, s: &Monomial) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.mul(s), c.clone())).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = LaurentPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.add_term(m1.mul(m2), c1 * c2);
            }
        }
        r
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = LaurentPoly::one();
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    /// Componentwise minimum of the exponents (the monomial content).
    pub fn min_exponents(&self) -> Monomial {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(m) => *m,
            None => return Monomial::one(),
        };
        it.fold(first, |acc, m| acc.meet(m))
    }

    /// Split a nonzero polynomial as `c * m * p` with `p` a genuine polynomial
    /// free of monomial content and with leading coefficient 1.
    pub fn normalize(&self) -> (BigRational, Monomial, LaurentPoly) {
        let content = self.min_exponents();
        let p = self.shift(&content.inv());
        let lc = p.leading().map(|(_, c)| c.clone()).unwrap_or_else(BigRational::one);
        let p = p.scale(&lc.recip());
        (lc, content, p)
    }

    /// Exact quotient `self / g` in the Laurent ring, if it exists. `g` must be
    /// free of monomial content.
    pub fn exact_div(&self, g: &LaurentPoly) -> Option<LaurentPoly> {
        if g.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let content = self.min_exponents();
        let mut rem = self.shift(&content.inv());
        let (glm, glc) = g.leading().map(|(m, c)| (*m, c.clone()))?;
        let glm_inv = glm.inv();
        let mut quot = LaurentPoly::zero();
        while let Some((lm, lc)) = rem.leading().map(|(m, c)| (*m, c.clone())) {
            let qm = lm.mul(&glm_inv);
            if !qm.is_nonnegative() {
                return None;
            }
            let qc = lc / &glc;
            for (m, c) in &g.terms {
                rem.add_term(m.mul(&qm), -(c * &qc));
            }
            quot.add_term(qm, qc);
        }
        Some(quot.shift(&content))
    }

    /// Evaluate with every occurring variable assigned.
    pub fn eval(&self, a: &Assignment) -> Result<BigRational, ExactError> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            total += c * a.eval_monomial(m)?;
        }
        Ok(total)
    }

    /// Substitute the assigned variables, keep the others symbolic.
    pub fn substitute(&self, a: &Assignment) -> Result<LaurentPoly, ExactError> {
        let mut r = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let (rest, val) = a.split_monomial(m)?;
            r.add_term(rest, c * val);
        }
        Ok(r)
    }

    /// Lowest power of `v` and the coefficient polynomial in front of it.
    pub fn lowest_in(&self, v: Var) -> Option<(i32, LaurentPoly)> {
        let e = self.terms.keys().map(|m| m.exp(v)).min()?;
        let strip = Monomial::var(v, -e);
        let coeff = LaurentPoly::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.exp(v) == e)
                .map(|(m, c)| (m.mul(&strip), c.clone())),
        );
        Some((e, coeff))
    }

    pub fn uses(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) != 0)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}
