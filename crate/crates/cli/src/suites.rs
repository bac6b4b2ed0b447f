//! Verification suites.

use std::collections::BTreeMap;

use kvertex_core::{BigRational, Field, RatFun, Specializer, Var, VarMap};
use kvertex_locvertex::{facver_check, facver_check_termwise, FacverReport, ShiftForm, VertexConvention};
use kvertex_qde::{
    arbitrate_classical, cocycle_boundary_holds, cocycle_sides, hbar_omega_conjugation, is_lower_triangular,
    proposition8, solve_wkz, triple_product_holds, univ_qkz_holds, GroupSplit, Proposition8Report,
    QdeConventions, WallPoint, RANK_ONE_VARS,
};
use kvertex_toroidal::fock::macdonald_operator_eigenvalue;
use kvertex_toroidal::{
    arbitrate_macdonald, relation_suite, Algebra, AlphaReading, CoproductTwist, EvalExponent, FockConventions,
    FockParams, TensorContext, TensorSpace,
};
use serde_json::{json, Value};

use crate::config::{Job, Mode, Suite};
use crate::report::Check;
use crate::run::drawn;
use crate::CliError;

type SuiteOutput = (Value, Vec<Check>, BTreeMap<String, String>);

fn conventions(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn fock_conventions() -> Vec<(&'static str, String)> {
    let f = FockConventions::default();
    vec![
        ("macdonald", format!("{:?}", f.macdonald)),
        ("sign", format!("{:?}", f.sign)),
        ("eval", format!("{:?}", f.eval)),
        ("alpha", format!("{:?}", AlphaReading::default())),
    ]
}

fn params(job: &Job) -> FockParams<BigRational> {
    let a = drawn(job, &[Var::T1, Var::T2]);
    FockParams::new(a.get(Var::T1).expect("drawn").clone(), a.get(Var::T2).expect("drawn").clone())
}

fn scalar(job: &Job, salt: u64) -> BigRational {
    Specializer::new(job.config.seed.unwrap_or(0).wrapping_add(salt)).scalar()
}

pub fn run_suite(job: &Job, suite: Suite) -> Result<SuiteOutput, CliError> {
    match suite {
        Suite::Relations => relations(job),
        Suite::Macdonald => macdonald(job),
        Suite::Facver => facver(job),
        Suite::Wkz => wkz(job),
        Suite::Cocycle => cocycle(job),
        Suite::Rlimit => rlimit(job),
        Suite::Classical => classical(job),
        Suite::All => all(job),
    }
}

fn relations(job: &Job) -> Result<SuiteOutput, CliError> {
    let alg = Algebra::with_defaults(params(job));
    let checks: Vec<Check> = relation_suite(&alg, 3, job.config.truncation)?
        .into_iter()
        .map(|c| Check::new(c.name, c.pass))
        .collect();
    let result = json!({ "range": 3, "relations": checks.len() });
    Ok((result, checks, conventions(&fock_conventions())))
}

fn macdonald(job: &Job) -> Result<SuiteOutput, CliError> {
    let p = params(job);
    let n = job.config.truncation;
    let verdicts = arbitrate_macdonald(&p, FockConventions::default(), AlphaReading::default(), n)?;
    let passing: Vec<_> = verdicts.iter().filter(|v| v.pass()).map(|v| v.convention).collect();
    let mut checks = vec![Check::new("exactly one (q,t) convention passes", passing.len() == 1)
        .with_witness(format!("{passing:?}"))];
    checks.push(Check::new(
        "selected convention is the default",
        passing == [FockConventions::default().macdonald],
    ));
    let alg = Algebra::with_defaults(p.clone());
    let (q, t) = FockConventions::default().macdonald.qt(&p)?;
    for d in 0..=n {
        let labels = alg.fock().table(d);
        let eig: Vec<BigRational> = labels
            .parts()
            .iter()
            .map(|nu| macdonald_operator_eigenvalue(nu, &q, &t))
            .collect::<Result<_, _>>()?;
        let distinct = (0..eig.len()).all(|i| (0..i).all(|j| eig[i] != eig[j]));
        checks.push(Check::new(format!("degree {d}: eigencheck"), alg.fock().eigencheck(d)?));
        checks.push(Check::new(format!("degree {d}: distinct eigenvalues"), distinct));
        checks.push(Check::new(format!("degree {d}: dominance unitriangular"), alg.fock().unitriangular(d)?));
    }
    let result = json!({
        "candidates": verdicts.iter().map(|v| json!({
            "convention": format!("{:?}", v.convention),
            "eigencheck": v.eigencheck,
            "relations": v.relations,
        })).collect::<Vec<_>>(),
    });
    Ok((result, checks, conventions(&fock_conventions())))
}

/// Splits (1, r - 1) for r >= 2 and (1, 1) otherwise.
fn split(r: u32) -> (usize, usize) {
    if r >= 2 {
        (1, r as usize - 1)
    } else {
        (1, 1)
    }
}

fn facver_checks(report: &FacverReport, label: &str) -> Check {
    let mut c = Check::new(label, report.all_pass());
    if let Some(f) = report.failures().next() {
        c = c.with_witness(format!("{} at z^{} (a-exponent {})", f.lambda, f.order, f.exponent));
    }
    c
}

fn facver(job: &Job) -> Result<SuiteOutput, CliError> {
    let c = &job.config;
    let (r1, r2) = split(c.r);
    let conv = VertexConvention::default();
    let mut checks = Vec::new();
    let mut entries = 0;
    for n in 0..=c.n {
        let report = match c.mode {
            Mode::Symbolic => {
                let vm = VarMap::<RatFun>::partial(&job.fixed);
                facver_check_termwise(&job.tau, n, r1, r2, c.order, conv, ShiftForm::Printed, &vm)?
            }
            Mode::Specialized => {
                let vars = crate::run::rank_vars((r1 + r2) as u32);
                let vm = VarMap::<RatFun>::partial(&drawn(job, &vars));
                facver_check(&job.tau, n, r1, r2, c.order, conv, ShiftForm::Printed, &vm)?
            }
        };
        entries += report.entries.len();
        checks.push(facver_checks(&report, &format!("n={n} ({r1},{r2}) {}", job.tau)));
    }
    let route = match c.mode {
        Mode::Symbolic => "termwise, symbolic",
        Mode::Specialized => "summed, specialized with a symbolic",
    };
    let result = json!({ "split": [r1, r2], "route": route, "coefficients": entries });
    let conv_list = [("vertex", conv.describe()), ("shifts", format!("{:?}", ShiftForm::Printed))];
    Ok((result, checks, conventions(&conv_list)))
}

fn wkz(job: &Job) -> Result<SuiteOutput, CliError> {
    let alg = Algebra::with_defaults(params(job));
    let n = job.config.truncation;
    let z = scalar(job, 101);
    let ctx = TensorContext::new(&alg, TensorSpace::new(2, n), vec![BigRational::one(); 2])?;
    let s = GroupSplit::pair();
    let j = solve_wkz(&ctx, &s, &z, &ctx.identity())?;
    let e = ctx.e_op(&z, &[0], &[1], s.twist)?;
    let mut checks = vec![
        Check::new("E(z) solves the wall KZ equation", univ_qkz_holds(&ctx, &s, &z)?),
        Check::new("recursive solution with identity diagonal equals E(z)", j == e),
        Check::new("recursive solution is lower triangular", is_lower_triangular(&ctx, &s, &j)),
    ];
    let triple = TensorContext::new(&alg, TensorSpace::new(3, n.min(2)), vec![BigRational::one(); 3])?;
    let mut printed = Vec::new();
    for (first, second) in [(vec![0], vec![1]), (vec![0, 1], vec![2]), (vec![0], vec![1, 2])] {
        let g = GroupSplit::new(first, second, CoproductTwist::Inverted);
        for k in 1..=n.min(2) as i32 {
            let o = hbar_omega_conjugation(&triple, &g, k)?;
            checks.push(Check::new(format!("hbar^Omega conjugation {:?}|{:?} k={k}", g.first, g.second), o.corrected));
            printed.push(o.printed);
        }
    }
    for k in 1..=n.min(2) as i32 {
        checks.push(Check::new(format!("triple product k={k}"), triple_product_holds(&triple, k)?));
    }
    let result = json!({ "z": crate::parse::rational_text(&z), "printed_conjugation_scalar": printed });
    let mut conv = fock_conventions();
    conv.push(("conjugation_scalar", "hbar^{k(r2-r1)/2}".into()));
    Ok((result, checks, conventions(&conv)))
}

fn cocycle(job: &Job) -> Result<SuiteOutput, CliError> {
    let alg = Algebra::with_defaults(params(job));
    let n = job.config.truncation;
    let z = scalar(job, 202);
    let inverted = cocycle_sides(&alg, n, &z, CoproductTwist::Inverted)?.holds();
    let printed = cocycle_sides(&alg, n, &z, CoproductTwist::AsPrinted)?.holds();
    let checks = vec![
        Check::new("cocycle identity (1,1,1)", inverted),
        Check::new("boundary Y^{(r),(0)} = Y^{(0),(r)} = 1", cocycle_boundary_holds(&alg, n, &z)?),
    ];
    let result = json!({ "z": crate::parse::rational_text(&z), "twist_as_printed_holds": printed });
    let mut conv = fock_conventions();
    conv.push(("coproduct_twist", format!("{:?}", CoproductTwist::Inverted)));
    Ok((result, checks, conventions(&conv)))
}

fn limit_text(x: Option<bool>) -> Value {
    match x {
        None => json!("no limit"),
        Some(b) => json!(b),
    }
}

fn prop8_json(r: &Proposition8Report) -> Value {
    json!({
        "eval": format!("{:?}", r.eval),
        "shift_independent": r.shift_independent,
        "walls": r.walls.iter().map(|w| json!({
            "slope": w.slope.to_string(),
            "sign": format!("{:?}", w.sign),
            "limit_is_identity": limit_text(w.is_identity),
        })).collect::<Vec<_>>(),
        "r_infinity_is_hbar_minus_omega": limit_text(r.r_infinity_is_hbar_omega),
        "r_infinity_is_hbar_degree": limit_text(r.r_infinity_is_hbar_degree),
        "r_infinity_is_identity": limit_text(r.r_infinity_is_identity),
        "product_limit": limit_text(r.product_limit),
    })
}

fn rlimit(job: &Job) -> Result<SuiteOutput, CliError> {
    let a = drawn(job, &[Var::T1, Var::T2, Var::A1, Var::A2]);
    let get = |v| a.get(v).expect("drawn").clone();
    let point = WallPoint { t1h: get(Var::T1), t2h: get(Var::T2), a1: get(Var::A1), a2: get(Var::A2) };
    let n = job.config.truncation;
    let max_num = n as i32;
    let main = proposition8(&point, n, max_num, EvalExponent::default())?;
    let other = proposition8(&point, n, max_num, EvalExponent::Direct)?;
    let bad_wall = main
        .walls
        .iter()
        .find(|w| w.is_identity != Some(true))
        .map(|w| format!("{:?} wall at slope {}", w.sign, w.slope));
    let mut walls = Check::new("R^-_w(0) = 1 (w > 0), R^+_w(0) = 1 (w < 0)", main.walls_hold());
    if let Some(w) = bad_wall {
        walls = walls.with_witness(w);
    }
    let checks = vec![
        Check::new("R^-_0 independent of the shift", main.shift_independent),
        walls,
        Check::new("R_inf(0) = hbar^{-Omega}", main.r_infinity_is_hbar_omega == Some(true))
            .with_witness(format!("R_inf(0) = hbar^(n1+n2): {:?}", main.r_infinity_is_hbar_degree)),
        Check::new("ordered product limit", main.product_limit == Some(true)),
    ];
    let result = json!({ "slope_window": { "max_den": n, "max_num": max_num }, "default": prop8_json(&main), "direct": prop8_json(&other) });
    Ok((result, checks, conventions(&fock_conventions())))
}

fn classical(job: &Job) -> Result<SuiteOutput, CliError> {
    let vm = VarMap::<BigRational>::from_assignment(&drawn(job, &RANK_ONE_VARS));
    let c = &job.config;
    let base = QdeConventions::default();
    let reports = arbitrate_classical(&vm, base, c.n, c.order)?;
    let default = reports
        .iter()
        .find(|r| r.bundle == base.bundle && r.k_sign == base.k_sign)
        .expect("default is a candidate");
    let passing: Vec<String> =
        reports.iter().filter(|r| r.holds()).map(|r| format!("{:?} {:?}", r.bundle, r.k_sign)).collect();
    let mut checks = Vec::new();
    for e in &default.entries {
        checks.push(Check::new(format!("n={}: z^1..z^{} vanish", e.degree, c.order), e.higher_orders_vanish));
        checks.push(Check::new(format!("n={}: z^0 = tau K^(1/2) times the normalization", e.degree), e.constant_term_matches));
    }
    checks.push(Check::new("some candidate convention passes", !passing.is_empty()));
    let result = json!({
        "candidates": reports.iter().map(|r| json!({
            "line_bundle": format!("{:?}", r.bundle),
            "k_half_sign": format!("{:?}", r.k_sign),
            "higher_orders_vanish": r.higher_orders_vanish(),
            "holds": r.holds(),
        })).collect::<Vec<_>>(),
        "passing": passing,
    });
    let conv = [
        ("line_bundle", format!("{:?}", base.bundle)),
        ("k_half_sign", format!("{:?}", base.k_sign)),
        ("vertex", base.vertex.describe()),
    ];
    Ok((result, checks, conventions(&conv)))
}

fn all(job: &Job) -> Result<SuiteOutput, CliError> {
    let jobs = job
        .config
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
        .max(1);
    let mut outputs: Vec<Option<Result<SuiteOutput, CliError>>> = Suite::EACH.iter().map(|_| None).collect();
    for chunk in Suite::EACH.iter().enumerate().collect::<Vec<_>>().chunks(jobs) {
        std::thread::scope(|s| {
            let handles: Vec<_> =
                chunk.iter().map(|&(i, &suite)| (i, s.spawn(move || run_suite(job, suite)))).collect();
            for (i, h) in handles {
                outputs[i] = Some(h.join().expect("suite thread panicked"));
            }
        });
    }
    let mut result = serde_json::Map::new();
    let mut checks = Vec::new();
    let mut conv = BTreeMap::new();
    for (suite, out) in Suite::EACH.iter().zip(outputs) {
        let (r, c, k) = out.expect("every suite ran")?;
        result.insert(suite.name().into(), r);
        checks.extend(c.into_iter().map(|mut c| {
            c.name = format!("{}: {}", suite.name(), c.name);
            c
        }));
        conv.extend(k.into_iter().map(|(key, v)| (format!("{}.{key}", suite.name()), v)));
    }
    Ok((Value::Object(result), checks, conv))
}
