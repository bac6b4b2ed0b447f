//! Command execution: every command returns a report; a failed identity is a
//! failed check, not an error.

use std::collections::BTreeMap;

use kvertex_core::combinat::enumerate_multipartitions;
use kvertex_core::{Assignment, BigRational, Field, RatFun, Specializer, Var, VarMap};
use kvertex_locvertex::{bare_vertex, Framing, VertexConvention};
use kvertex_qde::{
    exp_series, rationality_check, QdeConventions, RankOne, RationalityReport, RANK_ONE_VARS,
};
use serde_json::{json, Value};

use crate::config::{Command, Job, Mode};
use crate::report::{matrix_json, series_json, Check, ExactText, Meta, Report};
use crate::suites::run_suite;
use crate::CliError;

/// Drawn values for `vars` from the job seed, with explicit assignments on top.
pub fn drawn(job: &Job, vars: &[Var]) -> Assignment {
    let mut a = Specializer::new(job.config.seed.unwrap_or(0)).draw(vars);
    for (v, x) in job.fixed.assigned() {
        a.set(v, x.clone());
    }
    a
}

pub fn rank_vars(r: u32) -> Vec<Var> {
    let mut v = vec![Var::T1, Var::T2, Var::Q];
    v.extend([Var::A1, Var::A2, Var::A3].into_iter().take(r as usize));
    v
}

fn meta(job: &Job, conventions: BTreeMap<String, String>) -> Meta {
    let c = &job.config;
    let mut params = BTreeMap::new();
    params.insert("n".into(), json!(c.n));
    params.insert("r".into(), json!(c.r));
    params.insert("D".into(), json!(c.order));
    params.insert("N".into(), json!(c.truncation));
    params.insert("tau".into(), json!(job.tau.to_string()));
    params.insert("mode".into(), json!(c.mode));
    if let Some(s) = c.suite {
        params.insert("suite".into(), json!(s));
    }
    if let Some(t) = c.pade_total {
        params.insert("pade_total".into(), json!(t));
    }
    if !c.params.is_empty() {
        params.insert("params".into(), json!(c.params));
    }
    let command = match c.suite {
        Some(s) => format!("verify {}", s.name()),
        None => json!(c.command).as_str().unwrap_or_default().to_string(),
    };
    Meta { command, params, seed: c.seed, conventions }
}

fn vertex_conventions(v: VertexConvention) -> BTreeMap<String, String> {
    BTreeMap::from([("vertex".to_string(), v.describe())])
}

fn qde_conventions(c: QdeConventions) -> BTreeMap<String, String> {
    let mut m = vertex_conventions(c.vertex);
    m.insert("line_bundle".into(), format!("{:?}", c.bundle));
    m.insert("k_half_sign".into(), format!("{:?}", c.k_sign));
    m.insert("b_reading".into(), format!("{:?}", c.b_reading));
    m.insert("macdonald".into(), format!("{:?}", kvertex_toroidal::FockConventions::default().macdonald));
    m
}

pub fn run(job: &Job) -> Result<Report, CliError> {
    match job.config.command {
        Command::Vertex => match job.config.mode {
            Mode::Symbolic => vertex(job, &VarMap::<RatFun>::partial(&job.fixed)),
            Mode::Specialized => vertex(job, &VarMap::<BigRational>::from_assignment(&drawn(job, &rank_vars(job.config.r)))),
        },
        Command::Capped => capped(job),
        Command::Psi => match job.config.mode {
            Mode::Symbolic => psi_symbolic(job),
            Mode::Specialized => {
                let vm = VarMap::<BigRational>::from_assignment(&drawn(job, &RANK_ONE_VARS));
                let (result, checks) = psi(job, &vm)?;
                Ok(Report { meta: meta(job, qde_conventions(QdeConventions::default())), result, checks })
            }
        },
        Command::Verify => {
            let suite = job.config.suite.expect("validated");
            let (result, checks, conventions) = run_suite(job, suite)?;
            Ok(Report { meta: meta(job, conventions), result, checks })
        }
    }
}

fn vertex<F: Field + ExactText>(job: &Job, vm: &VarMap<F>) -> Result<Report, CliError> {
    let c = &job.config;
    let conv = VertexConvention::default();
    let framing = Framing::standard(c.r as usize);
    let mut points = Vec::new();
    for l in enumerate_multipartitions(c.n, c.r as usize) {
        let s = bare_vertex(&l, &job.tau, c.order, &framing, conv, vm)?;
        points.push(json!({ "lambda": l.to_string(), "series": series_json(&s) }));
    }
    Ok(Report { meta: meta(job, vertex_conventions(conv)), result: json!({ "fixed_points": points }), checks: vec![] })
}

fn fit_json(rep: &RationalityReport) -> Value {
    match &rep.fit {
        None => json!({ "rational": false, "max_total": rep.max_total, "attempts": rep.attempts }),
        Some(((m, n), fit)) => json!({
            "rational": true,
            "degrees": [m, n],
            "extra_orders": rep.extra_orders(),
            "numerator": fit.num.iter().map(ExactText::exact_text).collect::<Vec<_>>(),
            "denominator": fit.den.iter().map(ExactText::exact_text).collect::<Vec<_>>(),
            "fraction": fit.to_string(),
        }),
    }
}

fn capped(job: &Job) -> Result<Report, CliError> {
    let c = &job.config;
    let conv = QdeConventions::default();
    let vm = VarMap::<BigRational>::from_assignment(&drawn(job, &RANK_ONE_VARS));
    let r = RankOne::new(vm, conv)?;
    let psi = r.solve_psi(c.n, c.order)?;
    let series = r.capped_vertices(&psi, &job.tau, c.order)?;
    let mut checks = vec![Check::new("qde residual", psi.residual_vanishes()?)];
    let mut points = Vec::new();
    for (p, s) in psi.labels.parts().iter().zip(&series) {
        let rep = rationality_check(s.coeffs(), c.pade_total);
        let mut check = Check::new(format!("rational {p}"), rep.is_rational());
        if let Some((m, n)) = rep.degrees() {
            check = check.with_witness(format!("({m},{n}) with {} extra orders", rep.extra_orders()));
        }
        checks.push(check);
        points.push(json!({ "lambda": p.to_string(), "series": series_json(s), "fit": fit_json(&rep) }));
    }
    let control = rationality_check(&exp_series(c.order), c.pade_total);
    checks.push(Check::new("exp(z) rejected", !control.is_rational()));
    Ok(Report { meta: meta(job, qde_conventions(conv)), result: json!({ "fixed_points": points }), checks })
}

fn psi<F: Field + ExactText>(job: &Job, vm: &VarMap<F>) -> Result<(Value, Vec<Check>), CliError> {
    let c = &job.config;
    let r = RankOne::new(vm.clone(), QdeConventions::default())?;
    let s = r.solve_psi(c.n, c.order)?;
    let labels: Vec<String> = s.labels.parts().iter().map(ToString::to_string).collect();
    let result = json!({
        "labels": labels,
        "o1": s.o1.iter().map(ExactText::exact_text).collect::<Vec<_>>(),
        "psi": s.psi.iter().map(matrix_json).collect::<Vec<_>>(),
    });
    Ok((result, vec![Check::new("qde residual", s.residual_vanishes()?)]))
}

/// Symbolic solve, spot-checked against the specialized solve at three points.
fn psi_symbolic(job: &Job) -> Result<Report, CliError> {
    let c = &job.config;
    let (result, mut checks) = psi(job, &VarMap::<RatFun>::partial(&job.fixed))?;
    let sym = RankOne::new(VarMap::<RatFun>::partial(&job.fixed), QdeConventions::default())?.solve_psi(c.n, c.order)?;
    let base = c.seed.unwrap_or(1);
    for seed in base..base + 3 {
        let mut a = Specializer::new(seed).draw(&RANK_ONE_VARS);
        for (v, x) in job.fixed.assigned() {
            a.set(v, x.clone());
        }
        let num = RankOne::new(VarMap::from_assignment(&a), QdeConventions::default())?.solve_psi(c.n, c.order)?;
        let mut same = true;
        for (ms, mn) in sym.psi.iter().zip(&num.psi) {
            for i in 0..ms.rows() {
                for j in 0..ms.cols() {
                    same &= ms.get(i, j).eval(&a)? == *mn.get(i, j);
                }
            }
        }
        checks.push(Check::new(format!("specializes at seed {seed}"), same));
    }
    Ok(Report { meta: meta(job, qde_conventions(QdeConventions::default())), result, checks })
}
