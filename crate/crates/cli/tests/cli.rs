use std::process::{Command, Output};

fn verlinde(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verlinde"))
        .args(args)
        .env_remove("VERLINDE_CORPUS")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

// the console examples in the README

#[test]
fn torus_dimension_of_fibonacci() {
    let o = verlinde(&["dim", "--genus", "1", "fib.fusion"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "2\n");
}

#[test]
fn pair_of_pants_coloured_by_tau() {
    let o = verlinde(&["dim", "--boundary", "tau,tau,tau", "fib.fusion"]);
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn genus_two_invariant_of_z2() {
    let o = verlinde(&["invariant", "--genus", "2", "z2.algebra"]);
    assert_eq!(stdout(&o), "4\n");
}

#[test]
fn invariant_table() {
    let o = verlinde(&["invariant", "--max-genus", "3", "fib.algebra"]);
    assert_eq!(stdout(&o), "genus 0: 1\ngenus 1: 2\ngenus 2: 5\ngenus 3: 15\n");
}

#[test]
fn validate_exit_codes() {
    assert_eq!(verlinde(&["validate", "fib.fusion"]).status.code(), Some(0));
    assert_eq!(verlinde(&["check-separable", "dual.algebra"]).status.code(), Some(1));
    let o = verlinde(&["validate", "missing.fusion"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cannot read"));
}

#[test]
fn machine_output() {
    let o = verlinde(&["--machine", "blocks", "fib_x_z2.fusion"]);
    let text = stdout(&o);
    assert!(text.starts_with("blocks = 2\n"), "{text}");
}

#[test]
fn parse_errors_carry_positions() {
    let dir = std::env::temp_dir().join(format!("verlinde-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.fusion");
    std::fs::write(&path, "rank 2\nN 0 0 x 1\n").unwrap();
    let o = verlinde(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"), "{:?}", o);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn corpus_directory_override() {
    let dir = std::env::temp_dir().join(format!("verlinde-corpus-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    // a file named like a shipped one takes precedence over the built-in copy
    std::fs::write(dir.join("z2.fusion"), "rank 1\nunit 0\nN 0 0 0 1\n").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_verlinde"))
        .args(["dim", "--genus", "1", "z2.fusion"])
        .env("VERLINDE_CORPUS", &dir)
        .output()
        .unwrap();
    assert_eq!(stdout(&o), "1\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn grid_flag_parses_rationals() {
    let o = verlinde(&["--machine", "complete", "karoubi", "k.category", "--grid", "0,1/2,1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("objects = 2"), "{}", stdout(&o));
    let o = verlinde(&["complete", "karoubi", "k.category", "--grid", "0,x"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn enumerate_lists_two_rings() {
    let text = stdout(&verlinde(&["enumerate", "--rank", "2", "--max-coeff", "1"]));
    assert_eq!(text.matches("# ring").count(), 2);
}

#[test]
fn validate_fibonacci_output() {
    let o = verlinde(&["validate", "fib.fusion"]);
    assert_eq!(
        stdout(&o),
        "fusion ring: rank 2, 1 unit component(s)\naxioms: ok\npairing: ok\ngluing: ok (49 evaluations)\n"
    );
}
