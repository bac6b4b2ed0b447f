use std::fmt;

/// Number of symbols in the parameter ring.
pub const NVARS: usize = 8;

/// Symbols of the parameter ring. `T1`, `T2`, `Q`, `A1..A3`, `Aux` are square
/// roots of t1, t2, q, a_i and the splitting parameter a; `Z` is the degree
/// variable itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    T1,
    T2,
    Q,
    A1,
    A2,
    A3,
    Aux,
    Z,
}

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::T1,
        Var::T2,
        Var::Q,
        Var::A1,
        Var::A2,
        Var::A3,
        Var::Aux,
        Var::Z,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Framing variable of the i-th factor, 1-based.
    pub fn framing(i: usize) -> Var {
        match i {
            1 => Var::A1,
            2 => Var::A2,
            3 => Var::A3,
            _ => panic!("framing index {i} out of range 1..=3"),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::T1 => "T1",
            Var::T2 => "T2",
            Var::Q => "Q",
            Var::A1 => "A1",
            Var::A2 => "A2",
            Var::A3 => "A3",
            Var::Aux => "Aaux",
            Var::Z => "Z",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == s)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector over [`Var::ALL`]. Ordered lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub [i32; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(v: Var, e: i32) -> Self {
        let mut m = [0; NVARS];
        m[v.index()] = e;
        Monomial(m)
    }

    pub fn from_pairs(pairs: &[(Var, i32)]) -> Self {
        let mut m = Monomial::one();
        for &(v, e) in pairs {
            m.0[v.index()] += e;
        }
        m
    }

    pub fn exp(&self, v: Var) -> i32 {
        self.0[v.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(o.0.iter()) {
            *a += b;
        }
        Monomial(m)
    }

    pub fn inv(&self) -> Monomial {
        Monomial(self.0.map(|e| -e))
    }

    pub fn pow(&self, k: i32) -> Monomial {
        Monomial(self.0.map(|e| e * k))
    }

    /// Componentwise minimum.
    pub fn meet(&self, o: &Monomial) -> Monomial {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(o.0.iter()) {
            *a = (*a).min(*b);
        }
        Monomial(m)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    /// Halve every exponent; `None` if some exponent is odd.
    pub fn halve(&self) -> Option<Monomial> {
        if self.0.iter().any(|e| e % 2 != 0) {
            return None;
        }
        Some(Monomial(self.0.map(|e| e / 2)))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "{}^{}", v.name(), e)?;
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}
