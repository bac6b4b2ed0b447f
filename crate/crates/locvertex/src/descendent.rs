use std::fmt;

use kvertex_core::{Field, Partition};

use crate::LocError;

/// Symmetric Laurent polynomial in the Chern roots, as an expression tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Descendent {
    One,
    /// `p[k] = sum x_i^k`, any integer `k`.
    Power(i32),
    /// `e[k]`.
    Elementary(i32),
    /// `s[lambda]`.
    Schur(Partition),
    Product(Box<Descendent>, Box<Descendent>),
    Sum(Box<Descendent>, Box<Descendent>),
    Negate(Box<Descendent>),
}

impl Descendent {
    pub fn product(a: Descendent, b: Descendent) -> Self {
        Descendent::Product(Box::new(a), Box::new(b))
    }

    pub fn sum(a: Descendent, b: Descendent) -> Self {
        Descendent::Sum(Box::new(a), Box::new(b))
    }

    pub fn negate(a: Descendent) -> Self {
        Descendent::Negate(Box::new(a))
    }

    /// No negative powers of the roots occur.
    pub fn is_polynomial(&self) -> bool {
        match self {
            Descendent::Power(k) => *k >= 0,
            Descendent::One | Descendent::Elementary(_) | Descendent::Schur(_) => true,
            Descendent::Product(a, b) | Descendent::Sum(a, b) => a.is_polynomial() && b.is_polynomial(),
            Descendent::Negate(a) => a.is_polynomial(),
        }
    }

    /// Evaluate at the given roots.
    pub fn eval<F: Field>(&self, xs: &[F]) -> Result<F, LocError> {
        Ok(match self {
            Descendent::One => F::one(),
            Descendent::Power(k) => {
                let mut s = F::zero();
                for x in xs {
                    s = s.plus(&x.powi(*k as i64)?);
                }
                s
            }
            Descendent::Elementary(k) => elementary(xs, *k).into_iter().last().unwrap(),
            Descendent::Schur(l) => schur(xs, l),
            Descendent::Product(a, b) => a.eval(xs)?.times(&b.eval(xs)?),
            Descendent::Sum(a, b) => a.eval(xs)?.plus(&b.eval(xs)?),
            Descendent::Negate(a) => a.eval(xs)?.negated(),
        })
    }

    fn prec(&self) -> u8 {
        match self {
            Descendent::Sum(..) => 0,
            Descendent::Product(..) => 1,
            Descendent::Negate(_) => 2,
            _ => 3,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.prec() < min {
            f.write_str("(")?;
            self.fmt_at(f, 0)?;
            return f.write_str(")");
        }
        match self {
            Descendent::One => f.write_str("1"),
            Descendent::Power(k) => write!(f, "p[{k}]"),
            Descendent::Elementary(k) => write!(f, "e[{k}]"),
            Descendent::Schur(l) => write!(f, "s[{l}]"),
            Descendent::Sum(a, b) => {
                a.fmt_at(f, 0)?;
                f.write_str(" + ")?;
                b.fmt_at(f, 1)
            }
            Descendent::Product(a, b) => {
                a.fmt_at(f, 1)?;
                f.write_str("*")?;
                b.fmt_at(f, 2)
            }
            Descendent::Negate(a) => {
                f.write_str("-")?;
                a.fmt_at(f, 2)
            }
        }
    }
}

impl fmt::Display for Descendent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

/// `e_0, ..., e_k` of the roots (zero beyond the number of roots).
fn elementary<F: Field>(xs: &[F], k: i32) -> Vec<F> {
    if k < 0 {
        return vec![F::zero()];
    }
    let k = k as usize;
    let mut e = vec![F::zero(); k + 1];
    e[0] = F::one();
    for x in xs {
        for j in (1..=k).rev() {
            e[j] = e[j].plus(&e[j - 1].times(x));
        }
    }
    e
}

/// Complete homogeneous `h_0..h_k` from the elementary ones.
fn complete<F: Field>(xs: &[F], k: usize) -> Vec<F> {
    let e = elementary(xs, k as i32);
    let mut h = vec![F::one()];
    for m in 1..=k {
        let mut s = F::zero();
        for i in 1..=m {
            let t = e[i].times(&h[m - i]);
            s = if i % 2 == 1 { s.plus(&t) } else { s.minus(&t) };
        }
        h.push(s);
    }
    h
}

/// Jacobi-Trudi determinant `det h_{l_i - i + j}`.
/// Jacobi-Trudi; vanishes on its own when `l` has more parts than there are variables.
fn schur<F: Field>(xs: &[F], l: &Partition) -> F {
    let parts = l.parts();
    let n = parts.len();
    if n == 0 {
        return F::one();
    }
    let top = (parts[0] as usize) + n;
    let h = complete(xs, top);
    let entry = |i: usize, j: usize| -> F {
        let idx = parts[i] as i64 - i as i64 + j as i64;
        if idx < 0 {
            F::zero()
        } else {
            h[idx as usize].clone()
        }
    };
    let m = kvertex_core::Matrix::from_fn(n, n, entry);
    determinant(m)
}

fn determinant<F: Field>(mut m: kvertex_core::Matrix<F>) -> F {
    let n = m.rows();
    let mut det = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m.get(r, c).is_zero()) else {
            return F::zero();
        };
        if p != c {
            for j in 0..n {
                let a = m.get(p, j).clone();
                let b = m.get(c, j).clone();
                m.set(p, j, b);
                m.set(c, j, a);
            }
            det = det.negated();
        }
        let piv = m.get(c, c).clone();
        det = det.times(&piv);
        let inv = piv.recip().expect("nonzero pivot");
        for r in c + 1..n {
            let f = m.get(r, c).times(&inv);
            if f.is_zero() {
                continue;
            }
            for j in c..n {
                let v = m.get(r, j).minus(&m.get(c, j).times(&f));
                m.set(r, j, v);
            }
        }
    }
    det
}
