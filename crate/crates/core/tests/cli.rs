//! End-to-end checks of the command-line interface: output formats, exit
//! codes (0 success, 1 input error, 2 certificate), and file round-trips.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_lexelim")
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("lexelim-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn order_accepts_chordal_and_certifies_c4() {
    let p4 = write_temp("p4", "4 3\n0 1\n1 2\n2 3\n");
    let o = run(&["order", p4.to_str().unwrap(), "--class", "c8"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0 1 2 3\nELIMINATION OK c8\n");

    let c4 = write_temp("c4", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    let o = run(&["order", c4.to_str().unwrap(), "--class", "c8"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o), "0 1 3 2\nCERTIFICATE i=4 W=1 3\n");
}

#[test]
fn parse_errors_exit_1_with_line_numbers() {
    let bad = write_temp("bad", "3 2\n0 1\nnot an edge\n");
    let o = run(&["order", bad.to_str().unwrap(), "--class", "c8"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 3"), "stderr was: {err}");

    let o = run(&["order", "/nonexistent/file", "--class", "c8"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn clique_outputs_and_exit_codes() {
    let k4 = write_temp("k4", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let o = run(&["clique", k4.to_str().unwrap(), "--algo", "chordal"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "WEIGHT 4\nCLIQUE 0 1 2 3\n");

    let c4 = write_temp("c4w", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    let o = run(&["clique", c4.to_str().unwrap(), "--algo", "ehf"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "WEIGHT 2\nCLIQUE 0 1\n");

    let o = run(&["clique", c4.to_str().unwrap(), "--algo", "chordal"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with("CERTIFICATE "));

    // Weighted file: chordal path on a path graph.
    let p3 = write_temp("p3w", "3 2\n0 1\n1 2\nweights 5 1 5\n");
    let o = run(&["clique", p3.to_str().unwrap(), "--algo", "chordal"]);
    assert_eq!(stdout(&o), "WEIGHT 6\nCLIQUE 0 1\n");

    let petersen = write_temp(
        "petersen",
        "10 15\n0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n1 6\n2 7\n3 8\n4 9\n5 7\n7 9\n9 6\n6 8\n8 5\n",
    );
    let o = run(&["clique", petersen.to_str().unwrap(), "--algo", "c6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("WEIGHT 2\n"));

    // Brute force over the cap is an input error.
    let big: String = {
        let mut s = String::from("25 0\n");
        s.push('\n');
        s
    };
    let big = write_temp("big", &big);
    let o = run(&["clique", big.to_str().unwrap(), "--algo", "brute"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn recognize_lists_kinds_and_classes() {
    let k23 = write_temp("k23", "5 6\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n");
    let o = run(&["recognize", k23.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("Theta 0 1 2 3 4"));
    assert!(out.contains("SquareTheta 0 1 2 3 4"));
    assert!(out.ends_with("CLASSES: C2 C3 C6 EvenSignable\n"));

    // Chordal input: no configurations beyond the small patterns, all
    // classes listed.
    let tree = write_temp("tree", "4 3\n0 1\n0 2\n0 3\n");
    let out = stdout(&run(&["recognize", tree.to_str().unwrap()]));
    assert!(!out.contains("Hole"));
    assert!(out
        .ends_with("CLASSES: C1 C2 C3 C4 C5 C6 C7 C8 OddSignable EvenSignable\n"));

    // The universal wheel over C6.
    let wheel = write_temp(
        "w6",
        "7 12\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n6 0\n6 1\n6 2\n6 3\n6 4\n6 5\n",
    );
    let out = stdout(&run(&["recognize", wheel.to_str().unwrap()]));
    for line in [
        "Wheel 0 1 2 3 4 5 6",
        "ThreeWheel 0 1 2 3 4 5 6",
        "UniversalWheel 0 1 2 3 4 5 6",
        "EvenWheel 0 1 2 3 4 5 6",
    ] {
        assert!(out.contains(line), "missing `{line}` in:\n{out}");
    }

    // Over the cap: input error.
    let o = run(&["recognize", k23.to_str().unwrap(), "--cap", "3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_flag_certifies_off_class_inputs() {
    // K_{2,3} is not in C4: the sweep from 0 ends at hub 1 whose earlier
    // neighbors {2,3,4} form a stable triple. The verified run reports the
    // elimination violation; the bare run trips over the same triple during
    // the two-clique labeling pass.
    let k23 = write_temp("k23-c4", "5 6\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n");
    let o = run(&["clique", k23.to_str().unwrap(), "--algo", "c4", "--verify"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o), "CERTIFICATE i=5 W=2 3 4\n");

    let o = run(&["clique", k23.to_str().unwrap(), "--algo", "c4"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o), "CERTIFICATE i=5 OFFENDER=4\n");
}

#[test]
fn color_command() {
    let c5 = write_temp("c5", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    let o = run(&["color", c5.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("COLORS 3\nASSIGNMENT "));

    let c6 = write_temp("c6", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    let o = run(&["color", c6.to_str().unwrap()]);
    assert!(stdout(&o).starts_with("COLORS 2\n"));
}

#[test]
fn generate_roundtrip_and_dimacs() {
    let o = run(&["generate", "theta", "2", "2", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "5 6\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n");

    // Generated output parses back through both commands.
    let k23 = write_temp("gen", &stdout(&o));
    let o = run(&["recognize", k23.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));

    // DIMACS dialect reads the same graph.
    let dimacs = write_temp(
        "dimacs",
        "c theta(2,2,2)\np edge 5 6\ne 1 3\ne 1 4\ne 1 5\ne 2 3\ne 2 4\ne 2 5\n",
    );
    let a = stdout(&run(&["recognize", k23.to_str().unwrap()]));
    let b = stdout(&run(&["recognize", dimacs.to_str().unwrap()]));
    assert_eq!(a, b);

    // Bad parameters exit 1.
    let o = run(&["generate", "theta", "1", "2", "2"]);
    assert_eq!(o.status.code(), Some(1));

    // Seeded generation is reproducible.
    let a = stdout(&run(&["generate", "random", "8", "1/2", "--seed", "9"]));
    let b = stdout(&run(&["generate", "random", "8", "1/2", "--seed", "9"]));
    assert_eq!(a, b);
}
