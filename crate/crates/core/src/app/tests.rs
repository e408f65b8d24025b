use super::*;

fn run_on(command: Command, inputs: &[&str]) -> RunOutput {
    let mut c = RunConfig::new(command);
    for i in inputs {
        c = c.input(*i);
    }
    run(&c)
}

#[test]
fn torus_dimension_of_fib_is_two() {
    let mut c = RunConfig::new(Command::Dim).input("fib.fusion");
    c.genus = Some(1);
    let r = run(&c);
    assert_eq!(r.status, 0, "{}", r.stderr);
    assert_eq!(r.stdout, "2\n");
}

#[test]
fn dim_with_boundary_labels() {
    let mut c = RunConfig::new(Command::Dim).input("fib.fusion");
    c.boundary = vec!["tau".into(); 3];
    assert_eq!(run(&c).stdout, "1\n");
}

#[test]
fn dims_from_surfaces_file() {
    let r = run_on(Command::Dim, &["fib.fusion", "fib.surfaces"]);
    assert_eq!(r.status, 0, "{}", r.stderr);
    assert!(r.stdout.contains("torus: 2\n"), "{}", r.stdout);
    assert!(r.stdout.contains("genus2: 5\n"), "{}", r.stdout);
}

#[test]
fn genus_two_invariant_of_z2() {
    let mut c = RunConfig::new(Command::Invariant).input("z2.algebra");
    c.genus = Some(2);
    assert_eq!(run(&c).stdout, "4\n");
}

#[test]
fn validate_corpus_inputs_pass() {
    for f in ["fib.fusion", "s3.fusion", "fib_x_z2.fusion", "fib.algebra", "m2.category"] {
        let r = run_on(Command::Validate, &[f]);
        assert_eq!(r.status, 0, "{f}: {}{}", r.stdout, r.stderr);
    }
}

#[test]
fn machine_mode_is_key_value() {
    let mut c = RunConfig::new(Command::Blocks).input("fib_x_z2.fusion");
    c.machine = true;
    let r = run(&c);
    assert!(r.stdout.starts_with("blocks = 2\n"), "{}", r.stdout);
    assert!(r.stdout.lines().all(|l| l.contains(" = ")));
}

#[test]
fn missing_file_is_input_error() {
    let r = run_on(Command::Validate, &["nowhere.fusion"]);
    assert_eq!(r.status, 2);
    assert!(r.stderr.contains("cannot read"));
}

#[test]
fn broken_word_reports_layer() {
    let r = run_on(Command::EvalWord, &["z2.algebra", "broken.word"]);
    assert_eq!(r.status, 2);
    assert!(r.stderr.contains("layer"), "{}", r.stderr);
}

#[test]
fn evaluating_torus_word_gives_dimension() {
    let r = run_on(Command::EvalWord, &["fib.algebra", "torus.word"]);
    assert_eq!(r.stdout, "2\n", "{}", r.stderr);
}

#[test]
fn dual_numbers_are_not_separable() {
    let r = run_on(Command::CheckSeparable, &["dual.algebra"]);
    assert_eq!(r.status, 1);
    assert!(r.stdout.contains("semisimple: no"));
    let r = run_on(Command::CheckSeparable, &["m2.algebra", "m2.element"]);
    assert_eq!(r.status, 0, "{}", r.stdout);
    let r = run_on(Command::CheckSeparable, &["m2.algebra", "m2_unnormalized.element"]);
    assert_eq!(r.status, 1);
}

#[test]
fn enumeration_output_parses_back() {
    let r = run_on(Command::Enumerate, &[]);
    assert_eq!(r.status, 0);
    let blocks: Vec<&str> = r.stdout.split("\n\n").collect();
    assert_eq!(blocks.len(), 2);
    for b in blocks {
        parse(Kind::Fusion, b).unwrap();
    }
}

#[test]
fn karoubi_with_listed_idempotent_validates() {
    let r = run_on(Command::Complete(Completion::Karoubi), &["m2.category", "m2_diag.idempotents"]);
    assert_eq!(r.status, 0, "{}{}", r.stdout, r.stderr);
    let r = run_on(Command::Complete(Completion::Karoubi), &["m2.category", "m2_bad.idempotents"]);
    assert_eq!(r.status, 2);
}

#[test]
fn report_flags_bad_twists() {
    let r = run_on(Command::Report, &["fib.fusion", "fib.surfaces", "fib.twists"]);
    assert_eq!(r.status, 0, "{}{}", r.stdout, r.stderr);
    let r = run_on(Command::Report, &["fib.fusion", "bad.twists"]);
    assert_eq!(r.status, 1, "{}", r.stdout);
}
