//! Generators e_{(a,b)} on one Fock space, built from the slope 0 and slope
//! infinity actions through the collinear and triangle relations.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use kvertex_core::{Field, Matrix};

use crate::fock::{Fock, FockConventions, FockParams, MacdonaldConvention};
use crate::lattice::{alpha, AlphaReading, LatticeVector};
use crate::ToroidalError;

type Block<F> = Option<Arc<Matrix<F>>>;

/// Exact degree blocks of every generator on F(1), memoized per
/// (vector, source degree). A block maps degree n to degree n - a.
#[derive(Debug)]
pub struct Algebra<F: Field> {
    fock: Fock<F>,
    reading: AlphaReading,
    memo: RwLock<HashMap<(LatticeVector, u32), Block<F>>>,
    psi_memo: RwLock<HashMap<(LatticeVector, i32, u32), Block<F>>>,
}

impl<F: Field> Algebra<F> {
    pub fn new(fock: Fock<F>, reading: AlphaReading) -> Self {
        Algebra { fock, reading, memo: RwLock::new(HashMap::new()), psi_memo: RwLock::new(HashMap::new()) }
    }

    pub fn with_defaults(params: FockParams<F>) -> Self {
        Algebra::new(Fock::new(params, FockConventions::default()), AlphaReading::default())
    }

    pub fn fock(&self) -> &Fock<F> {
        &self.fock
    }

    pub fn params(&self) -> &FockParams<F> {
        self.fock.params()
    }

    pub fn alpha_reading(&self) -> AlphaReading {
        self.reading
    }

    /// Scalar of K_{(x,y)} on a tensor product of `rank` Fock spaces.
    pub fn central(&self, v: (i32, i32), rank: i64) -> Result<F, ToroidalError> {
        self.params().central_k(rank)?.powi(v.0 as i64).map_err(Into::into)
    }

    /// Block of e_v from degree n at evaluation parameter 1.
    pub fn block(&self, v: LatticeVector, n: u32) -> Result<Block<F>, ToroidalError> {
        if let Some(b) = self.memo.read().expect("generator cache").get(&(v, n)) {
            return Ok(b.clone());
        }
        let b = self.build(v, n)?.map(Arc::new);
        self.memo.write().expect("generator cache").insert((v, n), b.clone());
        Ok(b)
    }

    /// Block of e_v from degree n at evaluation parameter a.
    pub fn block_at(&self, v: LatticeVector, n: u32, a: &F) -> Result<Option<Matrix<F>>, ToroidalError> {
        match self.block(v, n)? {
            None => Ok(None),
            Some(b) => Ok(Some(b.scaled(&self.fock.eval_scalar(v.b, a)?))),
        }
    }

    fn zeros(&self, target: i64, n: u32) -> Matrix<F> {
        Matrix::zeros(self.fock.dim(target as u32), self.fock.dim(n))
    }

    /// Product e_{vs[0]} ... e_{vs[last]} applied from the right, from degree n.
    /// `None` if the final degree is negative; a zero matrix if only an
    /// intermediate degree is.
    pub fn compose(&self, vs: &[LatticeVector], n: u32) -> Result<Option<Matrix<F>>, ToroidalError> {
        let target = n as i64 - vs.iter().map(|v| v.a as i64).sum::<i64>();
        if target < 0 {
            return Ok(None);
        }
        let mut cur = n;
        let mut acc = Matrix::identity(self.fock.dim(n));
        for v in vs.iter().rev() {
            match self.block(*v, cur)? {
                None => return Ok(Some(self.zeros(target, n))),
                Some(b) => {
                    acc = b.times(&acc);
                    cur = (cur as i64 - v.a as i64) as u32;
                }
            }
        }
        Ok(Some(acc))
    }

    /// [e_u, e_w] from degree n.
    pub fn comm(&self, u: LatticeVector, w: LatticeVector, n: u32) -> Result<Option<Matrix<F>>, ToroidalError> {
        let uw = self.compose(&[u, w], n)?;
        let wu = self.compose(&[w, u], n)?;
        Ok(match (uw, wu) {
            (Some(x), Some(y)) => Some(x.minus(&y)),
            _ => None,
        })
    }

    fn build(&self, v: LatticeVector, n: u32) -> Result<Option<Matrix<F>>, ToroidalError> {
        if (n as i64) < v.a as i64 {
            return Ok(None);
        }
        if v.b == 0 {
            return self.fock.heis_block(v.a as i64, n);
        }
        if v.a == 0 {
            return Ok(Some(self.fock.diag_block(v.b as i64, n)?));
        }
        let (v0, g) = v.primitive();
        if g == 1 {
            let (u, w) = v.decompose()?;
            let c = self.comm(u, w, n)?.expect("target degree checked");
            return Ok(Some(c.scaled(&self.triangle_factor(u, w)?.recip()?)));
        }
        // g n_g e_{g v0} = g Psi_g - sum_{j<g} j n_j e_{j v0} Psi_{g-j}
        let mut acc = self.psi(v0, g, n)?.expect("target degree checked").scaled(&F::from_int(g as i64));
        for j in 1..g {
            let Some(p) = self.psi(v0, g - j, n)? else { continue };
            let mid = n as i64 - ((g - j) * v0.a) as i64;
            let Some(l) = self.block(v0.scaled(j), mid as u32)? else { continue };
            let c = self.params().n_coeff(j as i64)?.times(&F::from_int(j as i64));
            acc = acc.minus(&l.times(&p).scaled(&c));
        }
        let norm = self.params().n_coeff(g as i64)?.times(&F::from_int(g as i64));
        Ok(Some(acc.scaled(&norm.recip()?)))
    }

    /// eps_{u,w} K_{alpha(u,w)} for the triangle relation.
    pub fn triangle_factor(&self, u: LatticeVector, w: LatticeVector) -> Result<F, ToroidalError> {
        let eps = if u.det(w) > 0 { F::one() } else { F::one().negated() };
        Ok(eps.times(&self.central(alpha(u, w, self.reading)?, 1)?))
    }

    /// Block of Psi_{k v0} from degree n, v0 primitive with nonzero components
    /// or an axis vector.
    pub fn psi(&self, v0: LatticeVector, k: i32, n: u32) -> Result<Option<Arc<Matrix<F>>>, ToroidalError> {
        if let Some(b) = self.psi_memo.read().expect("psi cache").get(&(v0, k, n)) {
            return Ok(b.clone());
        }
        let b = self.build_psi(v0, k, n)?.map(Arc::new);
        self.psi_memo.write().expect("psi cache").insert((v0, k, n), b.clone());
        Ok(b)
    }

    fn build_psi(&self, v0: LatticeVector, k: i32, n: u32) -> Result<Option<Matrix<F>>, ToroidalError> {
        if (n as i64) < (k * v0.a) as i64 {
            return Ok(None);
        }
        if k == 0 {
            return Ok(Some(Matrix::identity(self.fock.dim(n))));
        }
        let n1 = self.params().n_coeff(1)?;
        if k == 1 {
            return Ok(self.block(v0, n)?.map(|b| b.scaled(&n1)));
        }
        if v0.a == 0 || v0.b == 0 {
            // axis directions: exponentiate the Heisenberg generators directly
            let mut acc = Matrix::zeros(self.fock.dim((n as i64 - (k * v0.a) as i64) as u32), self.fock.dim(n));
            for j in 1..=k {
                let Some(p) = self.psi(v0, k - j, n)? else { continue };
                let mid = n as i64 - ((k - j) * v0.a) as i64;
                let Some(l) = self.block(v0.scaled(j), mid as u32)? else { continue };
                let c = self.params().n_coeff(j as i64)?.times(&F::from_int(j as i64));
                acc = acc.plus(&l.times(&p).scaled(&c));
            }
            return Ok(Some(acc.scaled(&F::from_int(k as i64).recip()?)));
        }
        let (u, _) = v0.decompose()?;
        let w = LatticeVector::new(k * v0.a - u.a, k * v0.b - u.b)?;
        let c = self.comm(u, w, n)?.expect("target degree checked");
        Ok(Some(c.scaled(&n1.over(&self.triangle_factor(u, w)?)?)))
    }

    /// [e_v, e_{-v}] = (K_v^{-1} - K_v)/n_{deg v} at degree n.
    pub fn collinear_opposite(&self, v: LatticeVector, n: u32) -> Result<bool, ToroidalError> {
        let Some(c) = self.comm(v, v.neg(), n)? else { return Ok(true) };
        let k = self.central((v.a, v.b), 1)?;
        let s = k.recip()?.minus(&k).over(&self.params().n_coeff(v.deg() as i64)?)?;
        Ok(c == Matrix::identity(self.fock.dim(n)).scaled(&s))
    }

    /// [e_v, e_w] = 0 for v, w on the same ray.
    pub fn collinear_commute(&self, v: LatticeVector, w: LatticeVector, n: u32) -> Result<bool, ToroidalError> {
        Ok(self.comm(v, w, n)?.is_none_or(|c| c.is_zero()))
    }

    /// [e_{(1,1)}, e_{(-1,0)}] against eps K_alpha e_{(0,1)} with e_{(0,1)}
    /// taken directly from the slope infinity action.
    pub fn triangle_closure(&self, n: u32) -> Result<bool, ToroidalError> {
        let u = LatticeVector { a: 1, b: 1 };
        let w = LatticeVector { a: -1, b: 0 };
        let c = self.comm(u, w, n)?.expect("degree preserved");
        let d = self.fock.diag_block(1, n)?;
        Ok(c == d.scaled(&self.triangle_factor(u, w)?))
    }
}

/// Outcome of one relation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: String,
    pub pass: bool,
}

/// Collinear relations for all +-v with components in [-range, range] and
/// the triangle closure, at every degree up to `max_degree`.
pub fn relation_suite<F: Field>(
    alg: &Algebra<F>,
    range: i32,
    max_degree: u32,
) -> Result<Vec<RelationCheck>, ToroidalError> {
    let mut out = Vec::new();
    let mut vectors = Vec::new();
    for a in -range..=range {
        for b in -range..=range {
            if let Ok(v) = LatticeVector::new(a, b) {
                vectors.push(v);
            }
        }
    }
    for &v in vectors.iter().filter(|v| v.eps() > 0) {
        let mut pass = true;
        for n in 0..=max_degree {
            pass &= alg.collinear_opposite(v, n)?;
        }
        out.push(RelationCheck { name: format!("[e{v}, e{}]", v.neg()), pass });
    }
    for &v in &vectors {
        let (v0, g) = v.primitive();
        for &w in &vectors {
            let (w0, h) = w.primitive();
            if v0 == w0 && g < h {
                let mut pass = true;
                for n in 0..=max_degree {
                    pass &= alg.collinear_commute(v, w, n)?;
                }
                out.push(RelationCheck { name: format!("[e{v}, e{w}] = 0"), pass });
            }
        }
    }
    let mut pass = true;
    for n in 0..=max_degree {
        pass &= alg.triangle_closure(n)?;
    }
    out.push(RelationCheck { name: "[e(1,1), e(-1,0)] = eps K e(0,1)".into(), pass });
    Ok(out)
}

/// Outcome of testing one Macdonald convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConventionVerdict {
    pub convention: MacdonaldConvention,
    pub eigencheck: bool,
    pub relations: bool,
}

impl ConventionVerdict {
    pub fn pass(&self) -> bool {
        self.eigencheck && self.relations
    }
}

/// Tries every candidate (q, t) identification: each must give genuine
/// Macdonald polynomials and make the relations close on degrees up to
/// `max_degree`.
pub fn arbitrate_macdonald<F: Field>(
    params: &FockParams<F>,
    base: FockConventions,
    reading: AlphaReading,
    max_degree: u32,
) -> Result<Vec<ConventionVerdict>, ToroidalError> {
    let mut out = Vec::new();
    for c in MacdonaldConvention::CANDIDATES {
        let conv = FockConventions { macdonald: c, ..base };
        let alg = Algebra::new(Fock::new(params.clone(), conv), reading);
        let mut eigencheck = true;
        for n in 0..=max_degree {
            eigencheck &= alg.fock().eigencheck(n)?;
        }
        let mut relations = true;
        for n in 0..=max_degree {
            relations &= alg.triangle_closure(n)?;
            for (a, b) in [(1, 1), (1, 2), (2, 1), (1, -1)] {
                relations &= alg.collinear_opposite(LatticeVector { a, b }, n)?;
            }
        }
        out.push(ConventionVerdict { convention: c, eigencheck, relations });
    }
    Ok(out)
}
