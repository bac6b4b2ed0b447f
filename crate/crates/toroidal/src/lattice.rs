//! Lattice vectors, slopes and the central exponent of the triangle relation.

use std::fmt;

use crate::ToroidalError;

/// Nonzero vector (a, b) of Z^2 labelling the generator e_{(a,b)}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector {
    pub a: i32,
    pub b: i32,
}

fn gcd(mut x: i32, mut y: i32) -> i32 {
    x = x.abs();
    y = y.abs();
    while y != 0 {
        let r = x % y;
        x = y;
        y = r;
    }
    x
}

impl LatticeVector {
    pub fn new(a: i32, b: i32) -> Result<Self, ToroidalError> {
        if a == 0 && b == 0 {
            return Err(ToroidalError::ZeroVector);
        }
        Ok(LatticeVector { a, b })
    }

    pub fn deg(self) -> i32 {
        gcd(self.a, self.b)
    }

    /// +1 on the upper half plane {a > 0} union {a = 0, b > 0}.
    pub fn eps(self) -> i32 {
        if self.a > 0 || (self.a == 0 && self.b > 0) {
            1
        } else {
            -1
        }
    }

    pub fn det(self, o: LatticeVector) -> i32 {
        self.a * o.b - self.b * o.a
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> LatticeVector {
        LatticeVector { a: -self.a, b: -self.b }
    }

    pub fn scaled(self, k: i32) -> LatticeVector {
        LatticeVector { a: k * self.a, b: k * self.b }
    }

    /// (v0, g) with v = g v0 and v0 primitive.
    pub fn primitive(self) -> (LatticeVector, i32) {
        let g = self.deg();
        (LatticeVector { a: self.a / g, b: self.b / g }, g)
    }

    /// Split a primitive vector with both components nonzero into two lattice
    /// vectors u + w spanning an empty triangle (|det(u, w)| = 1), both in the
    /// same quadrant as v: the two Farey parents of |b|/|a|.
    pub fn decompose(self) -> Result<(LatticeVector, LatticeVector), ToroidalError> {
        let (x, y) = (self.a.abs(), self.b.abs());
        let (sx, sy) = (self.a.signum(), self.b.signum());
        for x1 in 0..=x {
            for y1 in 0..=y {
                if (x1, y1) == (0, 0) || (x1, y1) == (x, y) {
                    continue;
                }
                if (x1 * y - y1 * x).abs() == 1 {
                    let u = LatticeVector { a: sx * x1, b: sy * y1 };
                    let w = LatticeVector { a: self.a - u.a, b: self.b - u.b };
                    return Ok((u, w));
                }
            }
        }
        Err(ToroidalError::NoDecomposition(self.a, self.b))
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Reading of the central exponent alpha(a, b) in the triangle relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum AlphaReading {
    /// Both branches as printed, including `eps_b b + eps_b b` in the second.
    Printed,
    /// f (eps_a a + eps_b b - eps_{a+b}(a+b))/2 with f = eps_a or eps_b.
    Symmetric,
    /// The symmetric reading with the overall sign reversed.
    #[default]
    Negated,
}

/// Central exponent alpha(u, w) as a (possibly zero) vector.
pub fn alpha(u: LatticeVector, w: LatticeVector, reading: AlphaReading) -> Result<(i32, i32), ToroidalError> {
    let s = LatticeVector { a: u.a + w.a, b: u.b + w.b };
    let (eu, ew, es) = (u.eps(), w.eps(), s.eps());
    let first = u.det(w) > 0;
    let (f, inner) = if first || reading != AlphaReading::Printed {
        let inner = (eu * u.a + ew * w.a - es * s.a, eu * u.b + ew * w.b - es * s.b);
        (if first { eu } else { ew }, inner)
    } else {
        (ew, (2 * ew * w.a - es * s.a, 2 * ew * w.b - es * s.b))
    };
    if inner.0 % 2 != 0 || inner.1 % 2 != 0 {
        return Err(ToroidalError::HalfIntegralAlpha(inner.0, inner.1));
    }
    let sign = if reading == AlphaReading::Negated { -1 } else { 1 };
    Ok((sign * f * inner.0 / 2, sign * f * inner.1 / 2))
}

/// Rational slope w = n/d in lowest terms, d >= 0; infinity is (1, 0).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Slope {
    num: i32,
    den: i32,
}

impl Slope {
    pub fn new(num: i32, den: i32) -> Result<Self, ToroidalError> {
        if num == 0 && den == 0 {
            return Err(ToroidalError::ZeroVector);
        }
        let g = gcd(num, den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 || (d == 0 && n < 0) {
            n = -n;
            d = -d;
        }
        Ok(Slope { num: n, den: d })
    }

    pub fn infinity() -> Self {
        Slope { num: 1, den: 0 }
    }

    pub fn num(self) -> i32 {
        self.num
    }

    pub fn den(self) -> i32 {
        self.den
    }

    pub fn is_infinite(self) -> bool {
        self.den == 0
    }

    /// alpha^w_k = e_{(d k, n k)}
    pub fn alpha(self, k: i32) -> LatticeVector {
        LatticeVector { a: self.den * k, b: self.num * k }
    }

    /// Comparison as rationals; infinity is largest.
    pub fn cmp_value(self, o: Slope) -> std::cmp::Ordering {
        match (self.is_infinite(), o.is_infinite()) {
            (true, true) => std::cmp::Ordering::Equal,
            (true, false) => std::cmp::Ordering::Greater,
            (false, true) => std::cmp::Ordering::Less,
            _ => ((self.num as i64) * (o.den as i64)).cmp(&((o.num as i64) * (self.den as i64))),
        }
    }

    /// Finite slopes with 1 <= d <= max_den and |n| <= max_num, increasing.
    pub fn window(max_den: i32, max_num: i32) -> Vec<Slope> {
        let mut out = Vec::new();
        for d in 1..=max_den {
            for n in -max_num..=max_num {
                if gcd(n, d) == 1 {
                    out.push(Slope { num: n, den: d });
                }
            }
        }
        out.sort_by(|x, y| x.cmp_value(*y));
        out
    }

    /// Farey slopes -b/d in [-1, 0) with d <= max_den, increasing.
    pub fn farey_negative(max_den: i32) -> Vec<Slope> {
        let mut out = Vec::new();
        for d in 1..=max_den {
            for b in 1..=d {
                if gcd(b, d) == 1 {
                    out.push(Slope { num: -b, den: d });
                }
            }
        }
        out.sort_by(|x, y| x.cmp_value(*y));
        out
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str("inf")
        } else if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}
