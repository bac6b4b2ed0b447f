//! Tensor products of Fock spaces truncated by total degree, and the operators
//! built on them: slope 0 coproduct, E(z), wall R-matrices, R_infinity.
//!
//! Every operator here preserves or raises the degree of the earlier factors
//! against the later ones with total degree fixed, so the dense matrices on
//! the truncated basis are exact when annihilators act first.

use std::collections::HashMap;
use std::sync::Arc;

use kvertex_core::{Field, Matrix, Partition, RatFun, Var};

use crate::algebra::Algebra;
use crate::fock::{exp_nilpotent, EvalExponent, PartitionTable};
use crate::lattice::{LatticeVector, Slope};
use crate::ToroidalError;

/// Basis of F(a_1) x ... x F(a_m): tuples of partitions with total size at
/// most `max_degree`.
#[derive(Debug, Clone)]
pub struct TensorSpace {
    factors: usize,
    max_degree: u32,
    basis: Vec<Vec<Partition>>,
    index: HashMap<Vec<Partition>, usize>,
}

impl TensorSpace {
    pub fn new(factors: usize, max_degree: u32) -> Self {
        let mut basis = Vec::new();
        fn rec(left: usize, budget: u32, cur: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) {
            if left == 0 {
                out.push(cur.clone());
                return;
            }
            for n in 0..=budget {
                for p in kvertex_core::combinat::enumerate_partitions(n) {
                    cur.push(p);
                    rec(left - 1, budget - n, cur, out);
                    cur.pop();
                }
            }
        }
        rec(factors, max_degree, &mut Vec::new(), &mut basis);
        basis.sort_by_key(|t| t.iter().map(Partition::size).sum::<u32>());
        let index = basis.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        TensorSpace { factors, max_degree, basis, index }
    }

    pub fn factors(&self) -> usize {
        self.factors
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Partition>] {
        &self.basis
    }

    pub fn index_of(&self, t: &[Partition]) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// Total degree of the factors in `group` for basis element `i`.
    pub fn group_degree(&self, i: usize, group: &[usize]) -> u32 {
        group.iter().map(|&f| self.basis[i][f].size()).sum()
    }

    /// Diagonal operator with entry `f(tuple)`.
    pub fn diagonal<F: Field>(
        &self,
        mut f: impl FnMut(&[Partition]) -> Result<F, ToroidalError>,
    ) -> Result<Matrix<F>, ToroidalError> {
        let d: Vec<F> = self.basis.iter().map(|t| f(t)).collect::<Result<_, _>>()?;
        Ok(Matrix::diagonal(&d))
    }
}

/// Twist of the slope 0 coproduct.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum CoproductTwist {
    /// Delta(a_{-k}) = a_{-k} x 1 + K^{-k} x a_{-k}, Delta(a_k) = a_k x K^k + 1 x a_k
    #[default]
    AsPrinted,
    /// Delta(a_{-k}) = a_{-k} x 1 + K^{k} x a_{-k}, Delta(a_k) = a_k x K^{-k} + 1 x a_k
    Inverted,
}

/// A generator on one tensor factor for the symbolic coproduct.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoproductGen {
    One,
    /// K_{(1,0)}^e
    K(i32),
    /// alpha_k = e_{(k,0)}, k signed
    Alpha(i32),
}

/// A tensor of generators, one per factor.
pub type CoproductTerm = Vec<CoproductGen>;

/// Apply Delta to the factor at `pos` of every term.
pub fn coproduct_at(terms: &[CoproductTerm], pos: usize, twist: CoproductTwist) -> Vec<CoproductTerm> {
    let mut out = Vec::new();
    for t in terms {
        let split = |a: CoproductGen, b: CoproductGen| {
            let mut u = t[..pos].to_vec();
            u.push(a);
            u.push(b);
            u.extend_from_slice(&t[pos + 1..]);
            u
        };
        match t[pos] {
            CoproductGen::One => out.push(split(CoproductGen::One, CoproductGen::One)),
            CoproductGen::K(e) => out.push(split(CoproductGen::K(e), CoproductGen::K(e))),
            CoproductGen::Alpha(k) => {
                let s = if twist == CoproductTwist::AsPrinted { 1 } else { -1 };
                if k < 0 {
                    out.push(split(CoproductGen::Alpha(k), CoproductGen::One));
                    out.push(split(CoproductGen::K(s * k), CoproductGen::Alpha(k)));
                } else {
                    out.push(split(CoproductGen::Alpha(k), CoproductGen::K(s * k)));
                    out.push(split(CoproductGen::One, CoproductGen::Alpha(k)));
                }
            }
        }
    }
    out
}

/// Operators on a tensor space of rank-one Fock factors with evaluation
/// parameters `evals`.
pub struct TensorContext<'a, F: Field> {
    alg: &'a Algebra<F>,
    space: TensorSpace,
    evals: Vec<F>,
}

impl<'a, F: Field> TensorContext<'a, F> {
    pub fn new(alg: &'a Algebra<F>, space: TensorSpace, evals: Vec<F>) -> Result<Self, ToroidalError> {
        if evals.len() != space.factors() {
            return Err(ToroidalError::FactorOutOfRange(evals.len()));
        }
        Ok(TensorContext { alg, space, evals })
    }

    pub fn space(&self) -> &TensorSpace {
        &self.space
    }

    pub fn algebra(&self) -> &Algebra<F> {
        self.alg
    }

    pub fn identity(&self) -> Matrix<F> {
        Matrix::identity(self.space.dim())
    }

    fn table(&self, n: u32) -> Arc<PartitionTable> {
        self.alg.fock().table(n)
    }

    /// e_v acting on one factor, evaluated at that factor's parameter.
    pub fn generator(&self, factor: usize, v: LatticeVector) -> Result<Matrix<F>, ToroidalError> {
        if factor >= self.space.factors() {
            return Err(ToroidalError::FactorOutOfRange(factor));
        }
        let scale = self.alg.fock().eval_scalar(v.b, &self.evals[factor])?;
        let dim = self.space.dim();
        let mut out = Matrix::zeros(dim, dim);
        let mut blocks: HashMap<u32, Option<Arc<Matrix<F>>>> = HashMap::new();
        for (j, t) in self.space.basis().iter().enumerate() {
            let n = t[factor].size();
            let target = n as i64 - v.a as i64;
            if target < 0 {
                continue;
            }
            if let std::collections::hash_map::Entry::Vacant(e) = blocks.entry(n) {
                e.insert(self.alg.block(v, n)?);
            }
            let Some(b) = blocks[&n].as_ref() else { continue };
            let src = self.table(n);
            let tgt = self.table(target as u32);
            let col = src.index_of(&t[factor]).expect("partition of its size");
            let mut tuple = t.clone();
            for row in 0..tgt.len() {
                let x = b.get(row, col);
                if x.is_zero() {
                    continue;
                }
                tuple[factor] = tgt.get(row).clone();
                if let Some(i) = self.space.index_of(&tuple) {
                    out.add_at(i, j, &x.times(&scale));
                }
            }
        }
        Ok(out)
    }

    /// K_{(1,0)}^e on one factor.
    fn central_on(&self, e: i32) -> Result<F, ToroidalError> {
        self.alg.central((e, 0), 1)
    }

    /// Realize a term of the symbolic coproduct, factor by factor.
    pub fn realize(&self, term: &CoproductTerm) -> Result<Matrix<F>, ToroidalError> {
        let mut acc = self.identity();
        for (f, g) in term.iter().enumerate() {
            match *g {
                CoproductGen::One => {}
                CoproductGen::K(e) => acc = acc.scaled(&self.central_on(e)?),
                CoproductGen::Alpha(k) => acc = self.generator(f, LatticeVector { a: k, b: 0 })?.times(&acc),
            }
        }
        Ok(acc)
    }

    /// Iterated coproduct of alpha_k on the factors of `group`, as a sum of
    /// one term per factor with K-scalars on the others.
    pub fn alpha_group(&self, k: i32, group: &[usize], twist: CoproductTwist) -> Result<Matrix<F>, ToroidalError> {
        let s = if twist == CoproductTwist::AsPrinted { 1 } else { -1 };
        let r = group.len() as i32;
        let mut acc = Matrix::zeros(self.space.dim(), self.space.dim());
        for (p, &f) in group.iter().enumerate() {
            let p = p as i32;
            // earlier factors carry K^{s k} for k < 0; later ones K^{s k} for k > 0
            let e = if k < 0 { s * k * p } else { s * k * (r - 1 - p) };
            let g = self.generator(f, LatticeVector { a: k, b: 0 })?;
            acc = acc.plus(&g.scaled(&self.central_on(e)?));
        }
        Ok(acc)
    }

    /// hbar^Omega on the two groups: hbar^{(n1 r2 + n2 r1)/2}.
    pub fn hbar_omega(&self, g1: &[usize], g2: &[usize], power: i64) -> Result<Matrix<F>, ToroidalError> {
        let h = self.alg.params().hh();
        let (r1, r2) = (g1.len() as i64, g2.len() as i64);
        self.space.diagonal(|t| {
            let n1: i64 = g1.iter().map(|&f| t[f].size() as i64).sum();
            let n2: i64 = g2.iter().map(|&f| t[f].size() as i64).sum();
            Ok(h.powi(power * (n1 * r2 + n2 * r1))?)
        })
    }

    /// z^d on a group: multiplication by z^{degree}.
    pub fn z_degree(&self, group: &[usize], z: &F, power: i64) -> Result<Matrix<F>, ToroidalError> {
        self.space.diagonal(|t| {
            let n: i64 = group.iter().map(|&f| t[f].size() as i64).sum();
            Ok(z.powi(power * n)?)
        })
    }

    /// Exponent sum_k c_k alpha_{-k}(g1) alpha_k(g2) with the given
    /// coefficients c_1, c_2, ... (truncated where the degree budget ends).
    fn slope0_pairing(
        &self,
        g1: &[usize],
        g2: &[usize],
        twist: CoproductTwist,
        coeff: impl Fn(i64) -> Result<F, ToroidalError>,
    ) -> Result<Matrix<F>, ToroidalError> {
        let mut x = Matrix::zeros(self.space.dim(), self.space.dim());
        for k in 1..=self.space.max_degree() as i32 {
            let a = self.alpha_group(-k, g1, twist)?;
            let b = self.alpha_group(k, g2, twist)?;
            x = x.plus(&a.times(&b).scaled(&coeff(k as i64)?));
        }
        Ok(x)
    }

    /// R^-_0 = exp(sum n_k alpha_{-k} x alpha_k) between two groups.
    pub fn r0_minus(&self, g1: &[usize], g2: &[usize], twist: CoproductTwist) -> Result<Matrix<F>, ToroidalError> {
        let p = self.alg.params().clone();
        exp_nilpotent(&self.slope0_pairing(g1, g2, twist, |k| p.n_coeff(k))?)
    }

    /// (R^-_0)^{-1}, by negating the exponent.
    pub fn r0_minus_inverse(
        &self,
        g1: &[usize],
        g2: &[usize],
        twist: CoproductTwist,
    ) -> Result<Matrix<F>, ToroidalError> {
        let p = self.alg.params().clone();
        exp_nilpotent(&self.slope0_pairing(g1, g2, twist, |k| Ok(p.n_coeff(k)?.negated()))?)
    }

    /// Exponent of E(z): sum_k n_k x_k/(1 - z^{-k} x_k) alpha_{-k} x alpha_k
    /// with x_k = K^{-k} x K^k the central scalar on the two groups.
    pub fn e_exponent(&self, z: &F, g1: &[usize], g2: &[usize], twist: CoproductTwist) -> Result<Matrix<F>, ToroidalError> {
        let p = self.alg.params().clone();
        let h = p.hh();
        let (r1, r2) = (g1.len() as i64, g2.len() as i64);
        self.slope0_pairing(g1, g2, twist, |k| {
            let x = h.powi(k * (r1 - r2))?;
            let den = F::one().minus(&z.powi(-k)?.times(&x));
            Ok(p.n_coeff(k)?.times(&x).over(&den)?)
        })
    }

    /// E(z) between two groups.
    pub fn e_op(&self, z: &F, g1: &[usize], g2: &[usize], twist: CoproductTwist) -> Result<Matrix<F>, ToroidalError> {
        exp_nilpotent(&self.e_exponent(z, g1, g2, twist)?)
    }

    /// E(z)^{-1}, by negating the exponent.
    pub fn e_op_inverse(
        &self,
        z: &F,
        g1: &[usize],
        g2: &[usize],
        twist: CoproductTwist,
    ) -> Result<Matrix<F>, ToroidalError> {
        exp_nilpotent(&self.e_exponent(z, g1, g2, twist)?.negated())
    }

    /// R^{+-}_w = exp(sum n_k alpha^w_{+-k} x alpha^w_{-+k}) between two
    /// rank-one factors (finite slope).
    pub fn wall_r(&self, w: Slope, sign: WallSign, f1: usize, f2: usize) -> Result<Matrix<F>, ToroidalError> {
        exp_nilpotent(&self.wall_exponent(w, sign, f1, f2)?)
    }

    /// sum_k n_k alpha^w_{+-k} x alpha^w_{-+k} on the truncation.
    pub fn wall_exponent(&self, w: Slope, sign: WallSign, f1: usize, f2: usize) -> Result<Matrix<F>, ToroidalError> {
        let mut x = Matrix::zeros(self.space.dim(), self.space.dim());
        let s = if sign == WallSign::Plus { 1 } else { -1 };
        let mut k = 1;
        while w.den() * k <= self.space.max_degree() as i32 {
            let a = self.generator(f1, w.alpha(s * k))?;
            let b = self.generator(f2, w.alpha(-s * k))?;
            // the factors commute; put the annihilating one on the right
            let ab = if s > 0 { b.times(&a) } else { a.times(&b) };
            x = x.plus(&ab.scaled(&self.alg.params().n_coeff(k as i64)?));
            k += 1;
        }
        Ok(x)
    }

    /// Change of basis to products of Macdonald polynomials: column
    /// (nu_1, ..., nu_m) is P_{nu_1} x ... x P_{nu_m} in power sums.
    pub fn macdonald_change(&self) -> Result<(Matrix<F>, Matrix<F>), ToroidalError> {
        let dim = self.space.dim();
        let mut to = Matrix::zeros(dim, dim);
        let mut from = Matrix::zeros(dim, dim);
        for (j, t) in self.space.basis().iter().enumerate() {
            for (i, s) in self.space.basis().iter().enumerate() {
                if t.iter().zip(s).any(|(a, b)| a.size() != b.size()) {
                    continue;
                }
                let mut x = F::one();
                let mut y = F::one();
                for (a, b) in s.iter().zip(t) {
                    let m = self.alg.fock().macdonald(a.size())?;
                    let (ia, ib) = (m.labels.index_of(a).expect("label"), m.labels.index_of(b).expect("label"));
                    x = x.times(m.to_power.get(ia, ib));
                    y = y.times(m.from_power.get(ia, ib));
                }
                to.set(i, j, x);
                from.set(i, j, y);
            }
        }
        Ok((to, from))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WallSign {
    Plus,
    Minus,
}

/// Weights of a character with multiplicities: (t1 exponent, t2 exponent) -> m.
pub type Character = HashMap<(i32, i32), i64>;

fn boxes_character(p: &Partition, dual: bool) -> Character {
    let s = if dual { -1 } else { 1 };
    let mut c = Character::new();
    for (x, y) in p.boxes() {
        *c.entry((s * x as i32, s * y as i32)).or_default() += 1;
    }
    c
}

/// -V_nu^* - hbar V_mu + (1-t1)(1-t2) V_nu^* V_mu
pub fn r_infinity_character(nu: &Partition, mu: &Partition) -> Character {
    let vn = boxes_character(nu, true);
    let vm = boxes_character(mu, false);
    let mut z = Character::new();
    for (&w, &m) in &vn {
        *z.entry(w).or_default() -= m;
    }
    for (&(i, j), &m) in &vm {
        *z.entry((i + 1, j + 1)).or_default() -= m;
    }
    for (&(i1, j1), &m1) in &vn {
        for (&(i2, j2), &m2) in &vm {
            let (i, j) = (i1 + i2, j1 + j2);
            for (di, dj, s) in [(0, 0, 1), (1, 0, -1), (0, 1, -1), (1, 1, 1)] {
                *z.entry((i + di, j + dj)).or_default() += s * m1 * m2;
            }
        }
    }
    z.retain(|_, m| *m != 0);
    z
}

/// The variable u of R_infinity: a1/(a a2) for a^{-m} evaluation, its
/// inverse otherwise.
pub fn r_infinity_variable<F: Field>(
    eval: EvalExponent,
    a1: &F,
    a2: &F,
    a: &F,
) -> Result<F, ToroidalError> {
    let u = a1.over(&a.times(a2))?;
    Ok(match eval {
        EvalExponent::Inverse => u,
        EvalExponent::Direct => u.recip()?,
    })
}

/// Eigenvalue of R_infinity = exp(sum n_k e_{(0,-k)} x e_{(0,k)}) on
/// P_nu x P_mu in closed form: prod_w ((1 - u w/hbar)/(1 - u w))^{m_w}.
/// Normalized to 1 on the vacuum: the vacuum eigenvalue is a common scalar
/// (an infinite product over t1^{-i} t2^{-j}, not rational in u).
pub fn r_infinity_eigenvalue<F: Field>(
    alg: &Algebra<F>,
    nu: &Partition,
    mu: &Partition,
    u: &F,
) -> Result<F, ToroidalError> {
    let p = alg.params();
    let (t1, t2, hbar) = (p.t1(), p.t2(), p.hbar());
    let mut out = F::one();
    for ((i, j), m) in r_infinity_character(nu, mu) {
        let w = t1.powi(i as i64)?.times(&t2.powi(j as i64)?);
        let uw = u.times(&w);
        let num = F::one().minus(&uw.over(&hbar)?);
        let den = F::one().minus(&uw);
        out = out.times(&num.over(&den)?.powi(m)?);
    }
    Ok(out)
}

/// Dual route for R_infinity: the u^k coefficient of the exponent from the
/// slope infinity eigenvalues, n_k lambda_{-k}(nu) lambda_k(mu) minus its
/// vacuum value, against
/// the u^k coefficient of the log of the closed form,
/// (1/k) sum_w m_w w^k (1 - hbar^{-k}), for k = 1..=order.
pub fn r_infinity_exponent_check<F: Field>(
    alg: &Algebra<F>,
    nu: &Partition,
    mu: &Partition,
    order: i64,
) -> Result<bool, ToroidalError> {
    let p = alg.params();
    let (t1, t2, hbar) = (p.t1(), p.t2(), p.hbar());
    let z = r_infinity_character(nu, mu);
    for k in 1..=order {
        let f = alg.fock();
        let empty = Partition::empty();
        let pair = f.eigenvalue(-k, nu)?.times(&f.eigenvalue(k, mu)?);
        let vacuum = f.eigenvalue(-k, &empty)?.times(&f.eigenvalue(k, &empty)?);
        let series = p.n_coeff(k)?.times(&pair.minus(&vacuum));
        let mut closed = F::zero();
        for (&(i, j), &m) in &z {
            let w = t1.powi(i as i64 * k)?.times(&t2.powi(j as i64 * k)?);
            closed = closed.plus(&w.times(&F::from_int(m)));
        }
        let closed = closed.times(&F::one().minus(&hbar.powi(-k)?)).over(&F::from_int(k))?;
        if series != closed {
            return Ok(false);
        }
    }
    Ok(true)
}

/// R_infinity between factors 0 and 1 of a two-factor context, in the
/// power-sum basis.
pub fn r_infinity<F: Field>(ctx: &TensorContext<'_, F>, u: &F) -> Result<Matrix<F>, ToroidalError> {
    let d = ctx.space().diagonal(|t| r_infinity_eigenvalue(ctx.algebra(), &t[0], &t[1], u))?;
    let (to, from) = ctx.macdonald_change()?;
    Ok(to.times(&d).times(&from))
}

/// Entrywise limit as `var` -> 0 of a matrix of rational functions; `None`
/// if some entry has a pole there.
pub fn limit_at_zero(m: &Matrix<RatFun>, var: Var) -> Result<Option<Matrix<RatFun>>, ToroidalError> {
    let mut out = Matrix::zeros(m.rows(), m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let x = m.get(i, j);
            if x.is_zero() {
                continue;
            }
            let (e, c) = x.lowest_term(var)?;
            if e < 0 {
                return Ok(None);
            }
            if e == 0 {
                out.set(i, j, c);
            }
        }
    }
    Ok(Some(out))
}
