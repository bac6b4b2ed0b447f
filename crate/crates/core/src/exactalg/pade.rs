use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{ExactError, LaurentPoly, Matrix, Monomial, RatFun, Var};

/// A fitted fraction `p(z)/q(z)` with `q(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadeFit {
    pub num: Vec<BigRational>,
    pub den: Vec<BigRational>,
}

impl PadeFit {
    /// Taylor coefficients of `p/q` through `order`.
    pub fn expand(&self, order: usize) -> Vec<BigRational> {
        let mut s: Vec<BigRational> = Vec::with_capacity(order + 1);
        for i in 0..=order {
            let mut x = self.num.get(i).cloned().unwrap_or_else(BigRational::zero);
            for j in 1..self.den.len().min(i + 1) {
                x -= &self.den[j] * &s[i - j];
            }
            s.push(x);
        }
        s
    }

    /// Whether the fit reproduces every given coefficient.
    pub fn predicts(&self, s: &[BigRational]) -> bool {
        s.is_empty() || self.expand(s.len() - 1) == s
    }

    pub fn degrees(&self) -> (usize, usize) {
        let deg = |v: &[BigRational]| v.iter().rposition(|x| !x.is_zero()).unwrap_or(0);
        (deg(&self.num), deg(&self.den))
    }

    pub fn to_ratfun(&self) -> RatFun {
        let poly = |v: &[BigRational]| {
            LaurentPoly::from_terms(
                v.iter()
                    .enumerate()
                    .map(|(i, c)| (Monomial::var(Var::Z, i as i32), c.clone())),
            )
        };
        RatFun::from_poly(poly(&self.num))
            .div(&RatFun::from_poly(poly(&self.den)))
            .expect("q(0) = 1 is nonzero")
    }
}

impl fmt::Display for PadeFit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ratfun())
    }
}

/// Fit `p/q` with `deg p <= m`, `deg q <= n`, `q(0) = 1` to the first
/// `m + n + 1` coefficients of `s`.
pub fn pade_reconstruct(s: &[BigRational], m: usize, n: usize) -> Result<PadeFit, ExactError> {
    let needed = m + n + 1;
    if s.len() < needed {
        return Err(ExactError::InsufficientOrder {
            needed,
            got: s.len(),
        });
    }
    let at = |i: isize| -> BigRational {
        if i < 0 {
            BigRational::zero()
        } else {
            s[i as usize].clone()
        }
    };
    let mut den = vec![BigRational::one()];
    if n > 0 {
        let a = Matrix::from_fn(n, n, |r, c| at((m + 1 + r) as isize - (c + 1) as isize));
        let rhs: Vec<BigRational> = (0..n).map(|r| -at((m + 1 + r) as isize)).collect();
        let x = a.solve_any(&rhs).ok_or(ExactError::PadeInconsistent)?;
        den.extend(x);
    }
    let num: Vec<BigRational> = (0..=m)
        .map(|i| {
            let mut x = BigRational::zero();
            for (j, qj) in den.iter().enumerate().take(i + 1) {
                x += qj * &s[i - j];
            }
            x
        })
        .collect();
    let fit = PadeFit { num, den };
    if !fit.predicts(&s[..needed]) {
        return Err(ExactError::PadeInconsistent);
    }
    Ok(fit)
}
