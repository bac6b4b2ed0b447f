//! The tau = 1 capped vertex in rank one and the arbitration of the O(1) and
//! K^{1/2} conventions it decides.

use kvertex_core::{BigRational, DegreeData, Field, MultiPartition, Specializer, Var, VarMap};
use kvertex_locvertex::{descendent_eval, Descendent, Framing};

use crate::bundle::{localization_weight, KHalfSign, LineBundleChoice};
use crate::capping::{QdeConventions, RankOne};
use crate::QdeError;

/// Variables a rank one computation is specialized in.
pub const RANK_ONE_VARS: [Var; 4] = [Var::T1, Var::T2, Var::Q, Var::A1];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassicalEntry {
    pub degree: u32,
    /// z^1 .. z^order vanish at every fixed point.
    pub higher_orders_vanish: bool,
    /// z^0 = localization_weight * tau * K^{1/2} at every fixed point.
    pub constant_term_matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalReport {
    pub bundle: LineBundleChoice,
    pub k_sign: KHalfSign,
    pub order: usize,
    pub entries: Vec<ClassicalEntry>,
}

impl ClassicalReport {
    pub fn higher_orders_vanish(&self) -> bool {
        self.entries.iter().all(|e| e.higher_orders_vanish)
    }

    pub fn holds(&self) -> bool {
        self.entries.iter().all(|e| e.higher_orders_vanish && e.constant_term_matches)
    }
}

/// Capped vertex of `tau` for degrees 1..=max_degree through z^order.
pub fn classical_check<F: Field>(
    r: &RankOne<F>,
    tau: &Descendent,
    max_degree: u32,
    order: usize,
) -> Result<ClassicalReport, QdeError> {
    let vm = r.values();
    let mut entries = Vec::new();
    for n in 1..=max_degree {
        let psi = r.solve_psi(n, order)?;
        let capped = r.capped_vertices(&psi, tau, order)?;
        let k_half = r.bundle(n)?.k_half;
        let mut higher = true;
        let mut constant = true;
        for (i, p) in psi.labels.parts().iter().enumerate() {
            let s = &capped[i];
            higher &= (1..=order).all(|k| s.coeff(k).is_zero());
            let l = MultiPartition::single(p.clone());
            let t = descendent_eval(tau, &l, &DegreeData::zero(&l), &Framing::standard(1), r.conventions().vertex, vm)?;
            constant &= *s.coeff(0) == localization_weight(p, vm)?.times(&t).times(&k_half[i]);
        }
        entries.push(ClassicalEntry { degree: n, higher_orders_vanish: higher, constant_term_matches: constant });
    }
    let c = r.conventions();
    Ok(ClassicalReport { bundle: c.bundle, k_sign: c.k_sign, order, entries })
}

/// O(1) and K^{1/2} candidates tried by the arbitration.
pub fn bundle_candidates() -> Vec<(LineBundleChoice, KHalfSign)> {
    let bundles = [
        LineBundleChoice::Determinant { hbar_half_shift: 0 },
        LineBundleChoice::Determinant { hbar_half_shift: 1 },
        LineBundleChoice::Determinant { hbar_half_shift: -1 },
        LineBundleChoice::Dual,
    ];
    bundles
        .into_iter()
        .flat_map(|b| [KHalfSign::Plus, KHalfSign::Minus].map(|s| (b, s)))
        .collect()
}

/// `classical_check` with tau = 1 under every candidate convention.
pub fn arbitrate_classical(
    vm: &VarMap<BigRational>,
    base: QdeConventions,
    max_degree: u32,
    order: usize,
) -> Result<Vec<ClassicalReport>, QdeError> {
    let mut out = Vec::new();
    for (bundle, k_sign) in bundle_candidates() {
        let r = RankOne::new(vm.clone(), QdeConventions { bundle, k_sign, ..base })?;
        out.push(classical_check(&r, &Descendent::One, max_degree, order)?);
    }
    Ok(out)
}

/// Draw parameter values from consecutive seeds until `run` gets through
/// without hitting a resonance; returns the seed that worked.
pub fn at_generic_point<T>(
    seed: u64,
    tries: usize,
    vars: &[Var],
    mut run: impl FnMut(VarMap<BigRational>) -> Result<T, QdeError>,
) -> Result<(u64, T), QdeError> {
    for s in seed..seed + tries as u64 {
        let vm = VarMap::from_assignment(&Specializer::new(s).draw(vars));
        match run(vm) {
            Err(QdeError::ResonantSpecialization { .. } | QdeError::NonInvertibleAd { .. }) => continue,
            other => return other.map(|t| (s, t)),
        }
    }
    Err(QdeError::NoGenericPoint(tries))
}
