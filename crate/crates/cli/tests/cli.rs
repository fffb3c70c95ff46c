use twocm_cli::corpus::corpus;
use twocm_cli::model::{emit, parse};
use twocm_cli::resolve::resolve;
use twocm_cli::{run, Command, Options};

#[test]
fn corpus_round_trips_through_emit_and_parse() {
    for (name, m) in corpus() {
        let text = emit(&m);
        let back = parse(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(back, m, "{name} does not round-trip");
    }
}

#[test]
fn corpus_resolves_and_verifies() {
    for (name, m) in corpus() {
        let r = resolve(&m).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(!r.xmods.is_empty(), "{name} defines no xmod");
    }
}

#[test]
fn parse_errors_carry_line_and_column() {
    let bad = "seed 1\n\n[group G]\ncyclic two\n";
    let e = parse(bad).unwrap_err();
    assert_eq!(e.line, 4);
    assert!(e.col > 1, "column should point at the offending token");
    assert!(e.to_string().contains("line 4"));
}

#[test]
fn unknown_name_is_an_error_not_a_failed_report() {
    let err = run(&Command::Verify { xmod: "nonsense".into() }, &Options::default());
    assert!(err.is_err());
}

#[test]
fn verify_and_pi_commands_pass_on_the_corpus() {
    let opts = Options::default();
    for xmod in ["fixA", "fixB", "fixC_z2", "fixC_s3", "fixD"] {
        let r = run(&Command::Verify { xmod: xmod.into() }, &opts).unwrap();
        assert!(r.passed, "verify {xmod}:\n{}", r.text());
    }
    let r = run(&Command::Pi { xmod: "fixB".into() }, &opts).unwrap();
    assert!(r.passed);
    assert!(r.notes.iter().any(|n| n.contains("π1 = 1") && n.contains("π3 = 1")), "{:?}", r.notes);
    let r = run(&Command::Pi { xmod: "fixD".into() }, &opts).unwrap();
    assert!(r.notes.iter().any(|n| n.contains("π2") && n.contains("order 2")), "{:?}", r.notes);
}

#[test]
fn q1_and_kernel_laws_commands_pass() {
    let opts = Options { samples: Some(300), probe_depth: Some(2), ..Options::default() };
    let r = run(&Command::Q1 { xmod: "fixC_z2".into() }, &opts).unwrap();
    assert!(r.passed, "{}", r.text());
    assert!(r.notes.iter().any(|n| n.contains("basis size 2")));
    let r = run(&Command::Laws { suite: "kernel".into(), xmod: "fixC_z2".into() }, &opts).unwrap();
    assert!(r.passed, "{}", r.text());
    let r = run(&Command::Laws { suite: "identities".into(), xmod: "fixD".into() }, &opts).unwrap();
    assert!(r.passed, "{}", r.text());
}

#[test]
fn lax_commands_on_the_demo_cells() {
    let opts = Options { samples: Some(300), probe_depth: Some(2), ..Options::default() };
    let r = run(&Command::Lax { op: "check".into(), cells: vec!["swap".into()] }, &opts).unwrap();
    assert!(r.passed, "{}", r.text());
    let r = run(&Command::Lax { op: "target".into(), cells: vec!["swap".into()] }, &opts).unwrap();
    assert!(r.passed, "{}", r.text());
    let r = run(&Command::Lax { op: "invert".into(), cells: vec!["swap".into()] }, &opts).unwrap();
    assert!(r.passed, "{}", r.text());
    let r = run(&Command::Twofold { op: "check".into(), cells: vec!["rot2".into()] }, &opts).unwrap();
    assert!(r.passed, "{}", r.text());
    let r = run(&Command::Homotopy { op: "check".into(), cells: vec!["swap".into()] }, &opts).unwrap();
    assert!(r.passed, "{}", r.text());
}

#[test]
fn counterexample_command_reports_both_directions() {
    let r = run(&Command::Counterexample, &Options::default()).unwrap();
    assert!(r.passed, "{}", r.text());
    assert!(r.notes.iter().any(|n| n.contains("not found within bounds")));
    assert!(r.notes.iter().any(|n| n.contains("2x = 0")));
}

#[test]
fn text_and_json_reports_agree_on_pass_fail() {
    let r = run(&Command::Verify { xmod: "fixD".into() }, &Options::default()).unwrap();
    let text = r.text();
    let json: serde_json::Value = serde_json::from_str(&r.json()).unwrap();
    assert_eq!(json["passed"].as_bool().unwrap(), text.contains("overall: PASS"));
    assert_eq!(json["command"].as_str().unwrap(), r.command);
}

#[test]
fn reports_are_deterministic_given_seed() {
    let opts = Options { seed: 7, ..Options::default() };
    let a = run(&Command::Verify { xmod: "fixB".into() }, &opts).unwrap();
    let b = run(&Command::Verify { xmod: "fixB".into() }, &opts).unwrap();
    assert_eq!(a.json().replace(&format!("\"wall_ms\": {}", a.wall_ms), ""),
               b.json().replace(&format!("\"wall_ms\": {}", b.wall_ms), ""));
}

#[test]
fn pathspace_command_passes_on_fix_d() {
    let opts = Options { samples: Some(300), probe_depth: Some(2), ..Options::default() };
    let r = run(&Command::Pathspace { xmod: "fixD".into() }, &opts).unwrap();
    assert!(r.passed, "{}", r.text());
}

#[test]
fn fix_b_lifting_table_value() {
    // {1,1} = 1 in L (i.e., delta of it is 2).
    let (_, m) = corpus().into_iter().find(|(n, _)| n == "fixB").unwrap();
    let r = resolve(&m).unwrap();
    let b = &r.xmods["fixB"];
    let one = b.e.int(1);
    let lifted = b.lift.lift(&one, &one);
    assert_eq!(lifted, b.l.int(1));
    assert_eq!(b.delta.apply(&lifted), b.e.int(2));
}
