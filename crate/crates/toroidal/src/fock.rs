//! Truncated Fock space in the power-sum basis: Macdonald blocks and the
//! slope 0 / slope infinity generator actions.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use kvertex_core::combinat::enumerate_partitions;
use kvertex_core::{BigInt, BigRational, Field, Matrix, Partition, Var, VarMap};
use num_traits::One;

use crate::ToroidalError;

/// Partitions of one degree with a reverse index.
#[derive(Debug)]
pub struct PartitionTable {
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
}

impl PartitionTable {
    pub fn new(n: u32) -> Self {
        let parts = enumerate_partitions(n);
        let index = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        PartitionTable { parts, index }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn get(&self, i: usize) -> &Partition {
        &self.parts[i]
    }

    pub fn parts(&self) -> &[Partition] {
        &self.parts
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }
}

/// Identification of the Macdonald parameters (q, t) with the torus weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MacdonaldConvention {
    /// (t1^{1/2}, t2^{1/2})
    HalfRoots,
    /// (t1, t2)
    Full,
    /// (t1^{1/2}, t2^{-1/2})
    HalfInverse,
    /// (t1, t2^{-1})
    FullInverse,
}

impl MacdonaldConvention {
    pub const CANDIDATES: [MacdonaldConvention; 4] = [
        MacdonaldConvention::HalfRoots,
        MacdonaldConvention::Full,
        MacdonaldConvention::HalfInverse,
        MacdonaldConvention::FullInverse,
    ];

    pub fn qt<F: Field>(self, p: &FockParams<F>) -> Result<(F, F), ToroidalError> {
        Ok(match self {
            MacdonaldConvention::HalfRoots => (p.t1h.clone(), p.t2h.clone()),
            MacdonaldConvention::Full => (p.t1(), p.t2()),
            MacdonaldConvention::HalfInverse => (p.t1h.clone(), p.t2h.recip()?),
            MacdonaldConvention::FullInverse => (p.t1(), p.t2().recip()?),
        })
    }
}

impl fmt::Display for MacdonaldConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MacdonaldConvention::HalfRoots => "(q,t)=(t1^1/2,t2^1/2)",
            MacdonaldConvention::Full => "(q,t)=(t1,t2)",
            MacdonaldConvention::HalfInverse => "(q,t)=(t1^1/2,t2^-1/2)",
            MacdonaldConvention::FullInverse => "(q,t)=(t1,t2^-1)",
        })
    }
}

/// Reading of the sign factor in the slope infinity eigenvalue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum SignReading {
    /// sign(m)
    #[default]
    OfM,
    /// constant +1
    Unsigned,
}

/// How the evaluation parameter enters `e_{(0,m)}`: as `a^{-m}` or `a^{m}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum EvalExponent {
    #[default]
    Inverse,
    Direct,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FockConventions {
    pub macdonald: MacdonaldConvention,
    pub sign: SignReading,
    pub eval: EvalExponent,
}

impl Default for FockConventions {
    fn default() -> Self {
        FockConventions {
            macdonald: MacdonaldConvention::FullInverse,
            sign: SignReading::OfM,
            eval: EvalExponent::Inverse,
        }
    }
}

/// Torus weights by their square roots.
#[derive(Clone, Debug, PartialEq)]
pub struct FockParams<F: Field> {
    pub t1h: F,
    pub t2h: F,
}

impl<F: Field> FockParams<F> {
    pub fn new(t1h: F, t2h: F) -> Self {
        FockParams { t1h, t2h }
    }

    pub fn from_varmap(vm: &VarMap<F>) -> Result<Self, ToroidalError> {
        Ok(FockParams { t1h: vm.get(Var::T1)?.clone(), t2h: vm.get(Var::T2)?.clone() })
    }

    pub fn t1(&self) -> F {
        self.t1h.times(&self.t1h)
    }

    pub fn t2(&self) -> F {
        self.t2h.times(&self.t2h)
    }

    /// hbar^{1/2}
    pub fn hh(&self) -> F {
        self.t1h.times(&self.t2h)
    }

    pub fn hbar(&self) -> F {
        self.t1().times(&self.t2())
    }

    /// (t1^{k/2} - t1^{-k/2})(t2^{k/2} - t2^{-k/2})
    pub fn c_coeff(&self, k: i64) -> Result<F, ToroidalError> {
        let a = self.t1h.powi(k)?.minus(&self.t1h.powi(-k)?);
        let b = self.t2h.powi(k)?.minus(&self.t2h.powi(-k)?);
        Ok(a.times(&b))
    }

    /// n_k = c(k)(hbar^{-k/2} - hbar^{k/2})/k
    pub fn n_coeff(&self, k: i64) -> Result<F, ToroidalError> {
        let h = self.hh();
        let d = h.powi(-k)?.minus(&h.powi(k)?);
        Ok(self.c_coeff(k)?.times(&d).over(&F::from_int(k))?)
    }

    /// Scalar of K_{(1,0)} on a tensor product of `rank` Fock spaces.
    pub fn central_k(&self, rank: i64) -> Result<F, ToroidalError> {
        Ok(self.hh().powi(-rank)?)
    }
}

/// Change of basis between Macdonald polynomials and power sums at one degree.
/// Column `j` of `to_power` is `P_{labels[j]}` in power-sum coordinates.
#[derive(Debug)]
pub struct MacdonaldBlock<F: Field> {
    pub labels: Arc<PartitionTable>,
    pub to_power: Matrix<F>,
    pub from_power: Matrix<F>,
}

/// z_lambda = prod_k k^{m_k} m_k!
pub fn z_lambda(l: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (k, m) in l.multiplicities() {
        for i in 1..=m {
            z *= BigInt::from(k) * BigInt::from(i);
        }
    }
    z
}

/// Transition p_lambda = sum_mu L[lambda][mu] m_mu at degree n.
pub fn power_to_monomial(table: &PartitionTable) -> Matrix<BigRational> {
    fn count(parts: &[u32], bins: &mut [u32]) -> u64 {
        match parts.split_first() {
            None => bins.iter().all(|&b| b == 0) as u64,
            Some((&p, rest)) => {
                let mut c = 0;
                for i in 0..bins.len() {
                    if bins[i] >= p {
                        bins[i] -= p;
                        c += count(rest, bins);
                        bins[i] += p;
                    }
                }
                c
            }
        }
    }
    let d = table.len();
    Matrix::from_fn(d, d, |i, j| {
        let mut bins = table.get(j).parts().to_vec();
        BigRational::from_integer(BigInt::from(count(table.get(i).parts(), &mut bins)))
    })
}

/// Monic Macdonald polynomials of degree n by Gram-Schmidt from the monomial
/// basis, in increasing dominance-compatible order.
pub fn macdonald_block<F: Field>(
    table: Arc<PartitionTable>,
    q: &F,
    t: &F,
) -> Result<MacdonaldBlock<F>, ToroidalError> {
    let d = table.len();
    let linv = power_to_monomial(&table).inverse()?;
    let mut weight = Vec::with_capacity(d);
    for l in table.parts() {
        let mut w = F::from_rational(&BigRational::from_integer(z_lambda(l)));
        for &k in l.parts() {
            let num = F::one().minus(&q.powi(k as i64)?);
            let den = F::one().minus(&t.powi(k as i64)?);
            w = w.times(&num).over(&den)?;
        }
        weight.push(w);
    }
    let ip = |x: &[F], y: &[F]| -> F {
        let mut s = F::zero();
        for i in 0..d {
            if !x[i].is_zero() && !y[i].is_zero() {
                s = s.plus(&x[i].times(&y[i]).times(&weight[i]));
            }
        }
        s
    };
    let mut done: Vec<(usize, Vec<F>, F)> = Vec::new();
    for mu in (0..d).rev() {
        let mut v: Vec<F> = (0..d).map(|j| F::from_rational(linv.get(mu, j))).collect();
        for (_, u, uu) in &done {
            let c = ip(&v, u).over(uu)?;
            if !c.is_zero() {
                for (a, b) in v.iter_mut().zip(u) {
                    *a = a.minus(&c.times(b));
                }
            }
        }
        let vv = ip(&v, &v);
        done.push((mu, v, vv));
    }
    let mut to_power = Matrix::zeros(d, d);
    for (mu, v, _) in done {
        for (i, x) in v.into_iter().enumerate() {
            to_power.set(i, mu, x);
        }
    }
    let from_power = to_power.inverse()?;
    Ok(MacdonaldBlock { labels: table, to_power, from_power })
}

/// Matrix of the zero mode of the Macdonald vertex operator
/// exp(sum (1-t^{-k}) p_k z^k/k) exp(-sum (1-q^k) d/dp_k z^{-k}) at degree n.
/// Its eigenvalue on P_nu is 1 + (t-1) sum_i (q^{nu_i} - 1) t^{-i}.
pub fn macdonald_operator<F: Field>(table: &PartitionTable, q: &F, t: &F) -> Result<Matrix<F>, ToroidalError> {
    let d = table.len();
    let n = table.get(0).size();
    let mut creation: Vec<F> = Vec::new();
    let mut annihilation: Vec<F> = Vec::new();
    for k in 1..=n.max(1) as i64 {
        creation.push(F::one().minus(&t.powi(-k)?).over(&F::from_int(k))?);
        annihilation.push(F::one().minus(&q.powi(k)?).negated());
    }
    let mut out = Matrix::zeros(d, d);
    for (j, lam) in table.parts().iter().enumerate() {
        // (p_k + b_k z^{-k})^{m_k}: choose how many of each part survive
        let mults = lam.multiplicities();
        let mut stack: Vec<(usize, Vec<u32>, F)> = vec![(0, Vec::new(), F::one())];
        while let Some((i, kept, coeff)) = stack.pop() {
            if i == mults.len() {
                let kept_size: u32 = kept.iter().sum();
                let s = n - kept_size;
                for rho in enumerate_partitions(s) {
                    let mut c = coeff.clone();
                    for (k, m) in rho.multiplicities() {
                        let ck = creation[k as usize - 1].powi(m as i64)?;
                        c = c.times(&ck).over(&F::from_int(factorial(m)))?;
                    }
                    let mut parts = kept.clone();
                    parts.extend_from_slice(rho.parts());
                    parts.sort_unstable_by(|a, b| b.cmp(a));
                    let target = Partition::new(parts).expect("sorted positive parts");
                    let row = table.index_of(&target).expect("same degree");
                    out.add_at(row, j, &c);
                }
                continue;
            }
            let (k, m) = mults[i];
            for keep in 0..=m {
                let binom = F::from_int(binomial(m, keep));
                let b = annihilation[k as usize - 1].powi((m - keep) as i64)?;
                let mut kept2 = kept.clone();
                kept2.extend(std::iter::repeat_n(k, keep as usize));
                stack.push((i + 1, kept2, coeff.times(&binom).times(&b)));
            }
        }
    }
    Ok(out)
}

pub fn macdonald_operator_eigenvalue<F: Field>(nu: &Partition, q: &F, t: &F) -> Result<F, ToroidalError> {
    let mut s = F::zero();
    for (i, &p) in nu.parts().iter().enumerate() {
        let term = q.powi(p as i64)?.minus(&F::one()).times(&t.powi(-(i as i64) - 1)?);
        s = s.plus(&term);
    }
    Ok(F::one().plus(&t.minus(&F::one()).times(&s)))
}

fn factorial(m: u32) -> i64 {
    (1..=m as i64).product()
}

fn binomial(m: u32, k: u32) -> i64 {
    factorial(m) / (factorial(k) * factorial(m - k))
}

/// One Fock space F(a) truncated by degree, with generator blocks at a = 1.
#[derive(Debug)]
pub struct Fock<F: Field> {
    params: FockParams<F>,
    conv: FockConventions,
    tables: RwLock<HashMap<u32, Arc<PartitionTable>>>,
    mac: RwLock<HashMap<u32, Arc<MacdonaldBlock<F>>>>,
}

impl<F: Field> Fock<F> {
    pub fn new(params: FockParams<F>, conv: FockConventions) -> Self {
        Fock { params, conv, tables: RwLock::new(HashMap::new()), mac: RwLock::new(HashMap::new()) }
    }

    pub fn params(&self) -> &FockParams<F> {
        &self.params
    }

    pub fn conventions(&self) -> FockConventions {
        self.conv
    }

    pub fn table(&self, n: u32) -> Arc<PartitionTable> {
        if let Some(t) = self.tables.read().expect("table cache").get(&n) {
            return t.clone();
        }
        let t = Arc::new(PartitionTable::new(n));
        self.tables.write().expect("table cache").entry(n).or_insert(t).clone()
    }

    pub fn dim(&self, n: u32) -> usize {
        self.table(n).len()
    }

    pub fn macdonald(&self, n: u32) -> Result<Arc<MacdonaldBlock<F>>, ToroidalError> {
        if let Some(b) = self.mac.read().expect("macdonald cache").get(&n) {
            return Ok(b.clone());
        }
        let (q, t) = self.conv.macdonald.qt(&self.params)?;
        let b = Arc::new(macdonald_block(self.table(n), &q, &t)?);
        Ok(self.mac.write().expect("macdonald cache").entry(n).or_insert(b).clone())
    }

    /// Eigenvalue of e_{(0,m)} on P_nu at a = 1.
    pub fn eigenvalue(&self, m: i64, nu: &Partition) -> Result<F, ToroidalError> {
        let t1 = self.params.t1();
        let t2 = self.params.t2();
        let t1m = t1.powi(-m)?;
        let mut s = t1m.over(&F::one().minus(&t2.powi(m)?))?;
        for (i, &p) in nu.parts().iter().enumerate() {
            let term = t1.powi(m * (p as i64 - 1))?.minus(&t1m).times(&t2.powi(m * i as i64)?);
            s = s.plus(&term);
        }
        let s = s.over(&F::one().minus(&t1.powi(m)?))?;
        Ok(match self.conv.sign {
            SignReading::OfM if m < 0 => s.negated(),
            _ => s,
        })
    }

    /// Scalar by which the evaluation parameter enters a generator of
    /// b-component `b`.
    pub fn eval_scalar(&self, b: i32, a: &F) -> Result<F, ToroidalError> {
        Ok(match self.conv.eval {
            EvalExponent::Inverse => a.powi(-(b as i64))?,
            EvalExponent::Direct => a.powi(b as i64)?,
        })
    }

    /// e_{(m,0)} from degree n to degree n - m; `None` if the target degree
    /// is negative.
    pub fn heis_block(&self, m: i64, n: u32) -> Result<Option<Matrix<F>>, ToroidalError> {
        let target = n as i64 - m;
        if target < 0 {
            return Ok(None);
        }
        let src = self.table(n);
        let tgt = self.table(target as u32);
        let mut out = Matrix::zeros(tgt.len(), src.len());
        if m < 0 {
            let k = (-m) as u32;
            let s = self.params.c_coeff(-m)?.recip()?;
            for (j, l) in src.parts().iter().enumerate() {
                let row = tgt.index_of(&l.with_part(k)).expect("degree matches");
                out.add_at(row, j, &s);
            }
        } else {
            let k = m as u32;
            for (j, l) in src.parts().iter().enumerate() {
                let mult = l.parts().iter().filter(|&&p| p == k).count() as i64;
                if let Some(rest) = l.without_part(k) {
                    let row = tgt.index_of(&rest).expect("degree matches");
                    out.add_at(row, j, &F::from_int(-m * mult));
                }
            }
        }
        Ok(Some(out))
    }

    /// e_{(0,m)} at degree n, at a = 1, in the power-sum basis.
    pub fn diag_block(&self, m: i64, n: u32) -> Result<Matrix<F>, ToroidalError> {
        let b = self.macdonald(n)?;
        let eig: Vec<F> =
            b.labels.parts().iter().map(|nu| self.eigenvalue(m, nu)).collect::<Result<_, _>>()?;
        Ok(b.to_power.times(&Matrix::diagonal(&eig)).times(&b.from_power))
    }

    /// Checks that every P_nu of degree n is an eigenvector of the Macdonald
    /// vertex operator with the expected eigenvalue and that the transition to
    /// monomials is unitriangular in dominance order.
    pub fn eigencheck(&self, n: u32) -> Result<bool, ToroidalError> {
        let b = self.macdonald(n)?;
        let (q, t) = self.conv.macdonald.qt(&self.params)?;
        let op = macdonald_operator(&b.labels, &q, &t)?;
        let image = op.times(&b.to_power);
        for (j, nu) in b.labels.parts().iter().enumerate() {
            let e = macdonald_operator_eigenvalue(nu, &q, &t)?;
            for i in 0..b.labels.len() {
                if *image.get(i, j) != b.to_power.get(i, j).times(&e) {
                    return Ok(false);
                }
            }
        }
        self.unitriangular(n)
    }

    /// Coefficients of P_nu on m_mu vanish unless mu <= nu, and equal 1 at mu = nu.
    pub fn unitriangular(&self, n: u32) -> Result<bool, ToroidalError> {
        let b = self.macdonald(n)?;
        let l = power_to_monomial(&b.labels).map(F::from_rational);
        // m-coordinates: P = sum_lambda x_lambda p_lambda = sum_mu (x L)_mu m_mu
        let m_coords = l.transpose().times(&b.to_power);
        for (j, nu) in b.labels.parts().iter().enumerate() {
            for (i, mu) in b.labels.parts().iter().enumerate() {
                let c = m_coords.get(i, j);
                if i == j {
                    if !c.is_one() {
                        return Ok(false);
                    }
                } else if !c.is_zero() && !nu.dominates(mu) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Exact exponential of a nilpotent matrix.
pub fn exp_nilpotent<F: Field>(x: &Matrix<F>) -> Result<Matrix<F>, ToroidalError> {
    let d = x.rows();
    let mut out = Matrix::identity(d);
    let mut term = Matrix::identity(d);
    for k in 1..=d + 1 {
        term = term.times(x).scaled(&F::from_rational(&BigRational::new(BigInt::one(), BigInt::from(k))));
        if term.is_zero() {
            return Ok(out);
        }
        out = out.plus(&term);
    }
    if term.is_zero() {
        Ok(out)
    } else {
        Err(ToroidalError::NotNilpotent)
    }
}
