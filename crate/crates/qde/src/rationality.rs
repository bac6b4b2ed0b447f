//! Pade scan of a z-series with extra-order prediction.

use kvertex_core::exactalg::{pade_reconstruct, PadeFit};
use kvertex_core::BigRational;

/// Outcome of a rationality scan.
#[derive(Clone, Debug)]
pub struct RationalityReport {
    /// Largest index of the supplied coefficients.
    pub order: usize,
    /// Largest m + n attempted.
    pub max_total: usize,
    /// Smallest (m, n) by m + n, then m, that predicts every supplied order.
    pub fit: Option<((usize, usize), PadeFit)>,
    pub attempts: usize,
}

impl RationalityReport {
    pub fn is_rational(&self) -> bool {
        self.fit.is_some()
    }

    pub fn degrees(&self) -> Option<(usize, usize)> {
        self.fit.as_ref().map(|(d, _)| *d)
    }

    /// Orders beyond the m + n + 1 used by the fit, all predicted exactly.
    pub fn extra_orders(&self) -> usize {
        self.degrees().map_or(0, |(m, n)| self.order - (m + n))
    }
}

/// Scan (m, n) with m + n <= `max_total` (default: order - 2) for a fraction
/// whose expansion matches every coefficient of `series`.
pub fn rationality_check(series: &[BigRational], max_total: Option<usize>) -> RationalityReport {
    let order = series.len().saturating_sub(1);
    let cap = order.saturating_sub(2);
    let max_total = max_total.map_or(cap, |t| t.min(cap));
    let mut attempts = 0;
    if series.len() >= 3 {
        for total in 0..=max_total {
            for m in 0..=total {
                let n = total - m;
                attempts += 1;
                if let Ok(fit) = pade_reconstruct(series, m, n) {
                    if fit.predicts(series) {
                        return RationalityReport { order, max_total, fit: Some(((m, n), fit)), attempts };
                    }
                }
            }
        }
    }
    RationalityReport { order, max_total, fit: None, attempts }
}

/// Taylor coefficients 1/k! of exp(z) through `order`: the negative control.
pub fn exp_series(order: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(order + 1);
    let mut f = BigRational::from_integer(1.into());
    for k in 0..=order {
        if k > 0 {
            f /= BigRational::from_integer((k as i64).into());
        }
        out.push(f.clone());
    }
    out
}
