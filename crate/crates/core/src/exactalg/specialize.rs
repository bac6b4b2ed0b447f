use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{ExactError, Monomial, Var, NVARS};

/// Partial map from symbols to exact rationals.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment {
    vals: [Option<BigRational>; NVARS],
}

impl Assignment {
    pub fn new() -> Self {
        Assignment::default()
    }

    pub fn with(mut self, v: Var, x: BigRational) -> Self {
        self.set(v, x);
        self
    }

    pub fn set(&mut self, v: Var, x: BigRational) {
        self.vals[v.index()] = Some(x);
    }

    pub fn unset(&mut self, v: Var) {
        self.vals[v.index()] = None;
    }

    pub fn get(&self, v: Var) -> Option<&BigRational> {
        self.vals[v.index()].as_ref()
    }

    pub fn eval_monomial(&self, m: &Monomial) -> Result<BigRational, ExactError> {
        let mut r = BigRational::one();
        for v in Var::ALL {
            let e = m.exp(v);
            if e == 0 {
                continue;
            }
            let x = self.get(v).ok_or(ExactError::Unassigned(v))?;
            if x.is_zero() {
                if e < 0 {
                    return Err(ExactError::DenominatorVanishes);
                }
                return Ok(BigRational::zero());
            }
            r *= x.pow(e);
        }
        Ok(r)
    }

    /// Split `m` into its unassigned part and the value of the assigned part.
    pub fn split_monomial(&self, m: &Monomial) -> Result<(Monomial, BigRational), ExactError> {
        let mut rest = *m;
        let mut val = BigRational::one();
        for v in Var::ALL {
            let e = m.exp(v);
            if e == 0 {
                continue;
            }
            if let Some(x) = self.get(v) {
                if x.is_zero() {
                    if e < 0 {
                        return Err(ExactError::DenominatorVanishes);
                    }
                    return Ok((Monomial::one(), BigRational::zero()));
                }
                val *= x.pow(e);
                rest.0[v.index()] = 0;
            }
        }
        Ok((rest, val))
    }

    pub fn assigned(&self) -> impl Iterator<Item = (Var, &BigRational)> {
        Var::ALL
            .into_iter()
            .filter_map(move |v| self.get(v).map(|x| (v, x)))
    }
}

const PRIMES: [i64; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

/// Seeded source of generic rational specializations.
///
/// Every requested variable receives a ratio `p/p'` of two distinct small
/// primes, and no prime is reused across variables of the same draw.
#[derive(Clone, Debug)]
pub struct Specializer {
    rng: ChaCha8Rng,
}

impl Specializer {
    pub fn new(seed: u64) -> Self {
        Specializer {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn draw(&mut self, vars: &[Var]) -> Assignment {
        assert!(2 * vars.len() <= PRIMES.len(), "too many variables to specialize");
        let mut pool = PRIMES.to_vec();
        pool.shuffle(&mut self.rng);
        let mut a = Assignment::new();
        for (i, v) in vars.iter().enumerate() {
            let x = BigRational::new(BigInt::from(pool[2 * i]), BigInt::from(pool[2 * i + 1]));
            a.set(*v, x);
        }
        a
    }

    /// A random rational in the same style, for a free-standing parameter such as z.
    pub fn scalar(&mut self) -> BigRational {
        let mut pool = PRIMES.to_vec();
        pool.shuffle(&mut self.rng);
        BigRational::new(BigInt::from(pool[0]), BigInt::from(pool[1]))
    }
}
