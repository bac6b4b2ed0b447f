use std::collections::BTreeMap;
use std::fmt;

use kvertex_core::{Monomial, Var};

use crate::LocError;

/// Virtual character: monomials in the full (not square-root) parameters
/// with integer multiplicities. A key `m` stands for the weight whose square
/// root is the square-root-variable monomial with the same exponents.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Character {
    terms: BTreeMap<Monomial, i64>,
}

impl Character {
    pub fn zero() -> Self {
        Character::default()
    }

    pub fn weight(m: Monomial) -> Self {
        Self::term(m, 1)
    }

    pub fn term(m: Monomial, c: i64) -> Self {
        let mut ch = Character::zero();
        ch.add_term(m, c);
        ch
    }

    pub fn one() -> Self {
        Self::weight(Monomial::one())
    }

    pub fn add_term(&mut self, m: Monomial, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(m).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().map(|(m, c)| (m, *c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, *c);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, -*c);
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Character::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.add_term(m1.mul(m2), c1 * c2);
            }
        }
        r
    }

    pub fn dual(&self) -> Self {
        Character {
            terms: self.terms.iter().map(|(m, c)| (m.inv(), *c)).collect(),
        }
    }

    pub fn constant_term(&self) -> i64 {
        self.terms.get(&Monomial::one()).copied().unwrap_or(0)
    }

    /// Sum of multiplicities (virtual rank).
    pub fn rank(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn has_negative(&self) -> bool {
        self.terms.values().any(|&c| c < 0)
    }

    /// Exact quotient by `(q - 1)`: terms are grouped by their q-free part
    /// and each group is split into geometric sums
    /// `(q^k - 1)/(q - 1) = 1 + q + ... + q^{k-1}`.
    pub fn div_q_minus_one(&self) -> Result<Self, LocError> {
        let mut groups: BTreeMap<Monomial, Vec<(i32, i64)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut rest = *m;
            let k = m.exp(Var::Q);
            rest.0[Var::Q.index()] = 0;
            groups.entry(rest).or_default().push((k, *c));
        }
        let mut out = Character::zero();
        let q = |i: i32, rest: &Monomial| rest.mul(&Monomial::var(Var::Q, i));
        for (rest, group) in groups {
            if group.iter().map(|(_, c)| c).sum::<i64>() != 0 {
                return Err(LocError::NonDivisible);
            }
            // sum c_k q^k = sum c_k (q^k - 1)
            for (k, c) in group {
                if k > 0 {
                    for i in 0..k {
                        out.add_term(q(i, &rest), c);
                    }
                } else if k < 0 {
                    for i in k..0 {
                        out.add_term(q(i, &rest), -c);
                    }
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| if *c == 1 { m.to_string() } else { format!("{c}*{m}") })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Framing weights `a_i` of the components, as full-unit monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Framing(Vec<Monomial>);

impl Framing {
    /// `a_1, ..., a_r`.
    pub fn standard(r: usize) -> Self {
        Framing((1..=r).map(|i| Monomial::var(Var::framing(i), 1)).collect())
    }

    /// `a_{first}, ..., a_{first+r-1}`.
    pub fn range(first: usize, r: usize) -> Self {
        Framing(
            (first..first + r)
                .map(|i| Monomial::var(Var::framing(i), 1))
                .collect(),
        )
    }

    /// The splitting substitution `a_j -> a a_j` for `j > r1`.
    pub fn split(r1: usize, r2: usize) -> Self {
        let mut f = Framing::standard(r1 + r2);
        for m in &mut f.0[r1..] {
            *m = m.mul(&Monomial::var(Var::Aux, 1));
        }
        f
    }

    pub fn from_weights(w: Vec<Monomial>) -> Self {
        Framing(w)
    }

    pub fn weights(&self) -> &[Monomial] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// `W = a_1 + ... + a_r`.
    pub fn character(&self) -> Character {
        let mut c = Character::zero();
        for m in &self.0 {
            c.add_term(*m, 1);
        }
        c
    }
}
