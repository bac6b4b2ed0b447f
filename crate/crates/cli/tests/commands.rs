use kvertex_cli::{run, CliError, Command, JobConfig, Mode, Suite};

fn verify(suite: Suite, n_trunc: u32, seed: u64) -> JobConfig {
    JobConfig::verify(suite, n_trunc, seed)
}

#[test]
fn json_config_with_defaults() {
    let c = JobConfig::from_json(r#"{"command": "verify", "suite": "relations", "N": 3, "seed": 7, "mode": "specialized"}"#)
        .unwrap();
    assert_eq!(c.command, Command::Verify);
    assert_eq!(c.suite, Some(Suite::Relations));
    assert_eq!((c.n, c.r, c.order, c.truncation), (1, 1, 3, 3));
    assert_eq!(c.tau, "1");
    let back = JobConfig::from_json(&serde_json::to_string(&c).unwrap()).unwrap();
    assert_eq!(back, c);
}

#[test]
fn json_config_rejects_unknown_fields() {
    assert!(matches!(JobConfig::from_json(r#"{"command": "vertex", "depth": 3}"#), Err(CliError::Json(_))));
    assert!(matches!(JobConfig::from_json(r#"{"command": "draw"}"#), Err(CliError::Json(_))));
}

fn config_error(c: &JobConfig) -> String {
    match c.validate() {
        Err(CliError::Config(m)) => m,
        other => panic!("{other:?}"),
    }
}

#[test]
fn validation() {
    let mut c = JobConfig::new(Command::Psi);
    c.n = 3;
    c.truncation = 2;
    assert!(config_error(&c).contains("N must be at least n"));
    let mut c = JobConfig::new(Command::Vertex);
    c.mode = Mode::Specialized;
    assert!(config_error(&c).contains("seed"));
    let mut c = JobConfig::new(Command::Capped);
    c.seed = Some(1);
    assert!(config_error(&c).contains("specialized"));
    let mut c = JobConfig::new(Command::Vertex);
    c.r = 4;
    assert!(config_error(&c).contains("r must be"));
    let mut c = JobConfig::new(Command::Vertex);
    c.params.insert("T3".into(), "2".into());
    assert!(config_error(&c).contains("unknown parameter"));
    c.params.clear();
    c.params.insert("Aux".into(), "2".into());
    assert!(config_error(&c).contains("unknown parameter"));
    let c = JobConfig { suite: None, ..JobConfig::new(Command::Verify) };
    assert!(config_error(&c).contains("suite"));
    let c = JobConfig { tau: "p[-1]".into(), mode: Mode::Symbolic, ..verify(Suite::Facver, 2, 1) };
    assert!(config_error(&c).contains("polynomial"));
    let c = JobConfig { tau: "p[".into(), ..JobConfig::new(Command::Vertex) };
    assert!(matches!(c.validate(), Err(CliError::Syntax { pos: 2, .. })));
}

#[test]
fn single_box_vertex_starts_with_the_tangent_roof() {
    let job = JobConfig::new(Command::Vertex).validate().unwrap();
    let r = run(&job).unwrap();
    let s = &r.result["fixed_points"][0]["series"];
    assert_eq!(r.result["fixed_points"][0]["lambda"], "[[1]]");
    assert_eq!(s.as_array().unwrap().len(), 4);
    // 1/((T1 - T1^-1)(T2 - T2^-1)) in square-root symbols
    assert_eq!(s[0], "(T1^1*T2^1)/((1 - T2^2 - T1^2 + T1^2*T2^2))");
}

#[test]
fn explicit_parameters_override_the_draw() {
    let mut c = JobConfig::new(Command::Vertex);
    c.mode = Mode::Specialized;
    c.seed = Some(4);
    c.order = 0;
    c.params.insert("T1".into(), "2".into());
    c.params.insert("T2".into(), "3".into());
    let r = run(&c.validate().unwrap()).unwrap();
    // 6 / ((1 - 4)(1 - 9))
    assert_eq!(r.result["fixed_points"][0]["series"][0], "1/4");
}

#[test]
fn reports_are_byte_identical_for_the_same_seed() {
    for c in [
        verify(Suite::Wkz, 2, 5),
        verify(Suite::Classical, 2, 5),
        JobConfig { n: 2, order: 4, seed: Some(9), mode: Mode::Specialized, ..JobConfig::new(Command::Psi) },
    ] {
        let job = c.validate().unwrap();
        assert_eq!(run(&job).unwrap().to_json(), run(&job).unwrap().to_json());
    }
}

#[test]
fn relations_pass() {
    let r = run(&verify(Suite::Relations, 3, 7).validate().unwrap()).unwrap();
    assert!(r.all_pass());
    assert!(r.checks.len() > 20);
    assert_eq!(r.meta.seed, Some(7));
    assert_eq!(r.meta.command, "verify relations");
}

#[test]
fn capped_power_sum_fits_a_fraction() {
    let c = JobConfig {
        tau: "p[1]".into(),
        order: 12,
        seed: Some(3),
        mode: Mode::Specialized,
        ..JobConfig::new(Command::Capped)
    };
    let r = run(&c.validate().unwrap()).unwrap();
    assert!(r.all_pass(), "{}", r.to_json());
    let fit = &r.result["fixed_points"][0]["fit"];
    assert_eq!(fit["degrees"], serde_json::json!([1, 1]));
    assert!(fit["extra_orders"].as_u64().unwrap() >= 8);
    assert!(fit["numerator"][0].as_str().unwrap().contains('/'));
}

#[test]
fn symbolic_psi_is_spot_checked() {
    let c = JobConfig { n: 1, order: 2, truncation: 1, ..JobConfig::new(Command::Psi) };
    let r = run(&c.validate().unwrap()).unwrap();
    assert!(r.all_pass());
    assert_eq!(r.checks.iter().filter(|c| c.name.starts_with("specializes")).count(), 3);
}

#[test]
fn wall_limits_report_their_failures() {
    let r = run(&verify(Suite::Rlimit, 2, 3).validate().unwrap()).unwrap();
    assert!(r.check("R^-_0 independent of the shift").unwrap().passed());
    assert!(!r.check("R_inf(0) = hbar^{-Omega}").unwrap().passed());
    assert_eq!(r.result["direct"]["r_infinity_is_identity"], true);
}

#[test]
fn all_suites_aggregate_in_a_fixed_order() {
    let mut c = verify(Suite::All, 2, 2);
    c.jobs = Some(3);
    let a = run(&c.validate().unwrap()).unwrap();
    c.jobs = Some(1);
    let b = run(&c.validate().unwrap()).unwrap();
    assert_eq!(a.to_json(), b.to_json());
    let first: Vec<&str> = a.checks.iter().map(|c| c.name.split(':').next().unwrap()).collect();
    assert_eq!(first.first(), Some(&"relations"));
    assert_eq!(first.last(), Some(&"classical"));
    assert!(a.checks.iter().filter(|c| !c.passed()).all(|c| c.name.starts_with("rlimit")));
}
