use super::{ExactError, Field};

/// Power series in z truncated at a fixed order (coefficients `0..=order`).
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesZ<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> SeriesZ<F> {
    pub fn zero(order: usize) -> Self {
        SeriesZ {
            coeffs: vec![F::zero(); order + 1],
        }
    }

    pub fn constant(c: F, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn from_coeffs(coeffs: Vec<F>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the z^0 coefficient");
        SeriesZ { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &F {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn set(&mut self, k: usize, x: F) {
        self.coeffs[k] = x;
    }

    pub fn add_at(&mut self, k: usize, x: &F) {
        self.coeffs[k] = self.coeffs[k].plus(x);
    }

    pub fn truncate(&self, order: usize) -> Self {
        SeriesZ {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn plus(&self, o: &Self) -> Self {
        let d = self.order().min(o.order());
        SeriesZ {
            coeffs: (0..=d).map(|k| self.coeffs[k].plus(&o.coeffs[k])).collect(),
        }
    }

    pub fn minus(&self, o: &Self) -> Self {
        let d = self.order().min(o.order());
        SeriesZ {
            coeffs: (0..=d).map(|k| self.coeffs[k].minus(&o.coeffs[k])).collect(),
        }
    }

    pub fn times(&self, o: &Self) -> Self {
        let d = self.order().min(o.order());
        let mut r = Self::zero(d);
        for i in 0..=d {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=d - i {
                if !o.coeffs[j].is_zero() {
                    r.coeffs[i + j] = r.coeffs[i + j].plus(&self.coeffs[i].times(&o.coeffs[j]));
                }
            }
        }
        r
    }

    pub fn scaled(&self, c: &F) -> Self {
        SeriesZ {
            coeffs: self.coeffs.iter().map(|x| x.times(c)).collect(),
        }
    }

    /// The series of `f(c z)`.
    pub fn rescale_arg(&self, c: &F) -> Result<Self, ExactError> {
        let mut p = F::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            out.push(x.times(&p));
            p = p.times(c);
        }
        Ok(SeriesZ { coeffs: out })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|x| x.is_zero())
    }
}
