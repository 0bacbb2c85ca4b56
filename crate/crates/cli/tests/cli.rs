use std::io::Write as _;
use std::process::Command;

use gyrorep::{builtin, text};
use gyrorep_cli::run;
use tempfile::NamedTempFile;

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("gyrorep").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn file_with(content: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(content.as_bytes()).unwrap();
    f
}

#[test]
fn emitted_table_round_trips() {
    for name in ["g8", "klein", "cyclic:5"] {
        let (code, table, _) = cli(&["info", &format!("builtin:{name}"), "--emit-table"]);
        assert_eq!(code, 0);
        assert_eq!(text::parse_table(&table).unwrap(), builtin(name).unwrap());
        let f = file_with(&table);
        let (code, out, _) = cli(&["verify", f.path().to_str().unwrap()]);
        assert_eq!(code, 0, "{out}");
    }
}

#[test]
fn json_is_byte_stable() {
    let commands: [&[&str]; 6] = [
        &["--json", "regrep", "builtin:g8", "--field", "f:3"],
        &["--json", "decompose", "builtin:g8", "--field", "q"],
        &["--json", "converse", "builtin:klein", "-p", "2"],
        &["--json", "chain", "builtin:g8", "-p", "2"],
        &["--json", "gyr-table", "builtin:g8"],
        &["--json", "mobius-check", "--seed", "7", "--samples", "200"],
    ];
    for args in commands {
        let first = cli(args);
        assert_eq!(first, cli(args), "{args:?}");
        serde_json::from_str::<serde_json::Value>(&first.1).unwrap();
    }
}

#[test]
fn parse_errors_cite_lines() {
    let f = file_with("# a broken table\n3\n0 1 2\n1 2 0\n2 0 q\n");
    let (code, _, err) = cli(&["info", f.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 5"), "{err}");
}

#[test]
fn verify_reports_non_gyrogroups() {
    let mut rows = builtin("g8").unwrap().cayley_rows();
    rows[1][0] = 2;
    let body: Vec<String> = rows.iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")).collect();
    let f = file_with(&format!("8\n{}\n", body.join("\n")));
    let (code, out, _) = cli(&["verify", f.path().to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.starts_with("gyrogroup: no"), "{out}");
    let (code, _, _) = cli(&["lgyr", f.path().to_str().unwrap()]);
    assert_eq!(code, 2);
}

#[test]
fn maschke_with_a_subspace_file() {
    let f = file_with("1 1 0 0\n");
    let (code, out, err) = cli(&["maschke", "builtin:g8", "--field", "f:5", "--subspace", f.path().to_str().unwrap()]);
    // span{(1,1,0,0)} is not invariant for G8.
    assert_eq!(code, 1, "{out}{err}");
    assert!(err.contains("not invariant"));
    let f = file_with("1 1 1 1\n");
    let (code, out, _) = cli(&["maschke", "builtin:g8", "--field", "f:5", "--subspace", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("W = ker π: dim 3"), "{out}");
    let (code, _, err) = cli(&["maschke", "builtin:g8", "--field", "f:2", "--subspace", "fix"]);
    assert_eq!(code, 1);
    assert!(err.contains("divides"));
}

#[test]
fn decompose_a_representation_file() {
    // Z/3 acting on Q^3 by cyclic shifts; over GF(7) it splits into three lines.
    let rep = "3\n1 0 0\n0 1 0\n0 0 1\n\n0 0 1\n1 0 0\n0 1 0\n\n0 1 0\n0 0 1\n1 0 0\n";
    let f = file_with(rep);
    let path = f.path().to_str().unwrap();
    let (code, out, _) = cli(&["decompose", "builtin:cyclic:3", "--field", "f:7", "--rep", path]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("dims: 1 1 1"), "{out}");
    // Over Q only the constants split off; the heuristic cannot rule out a
    // rational line in the sum-zero plane, so that summand stays undecided.
    let (code, out, _) = cli(&["decompose", "builtin:cyclic:3", "--field", "q", "--rep", path]);
    assert_eq!(code, 0);
    assert!(out.contains("dims: 2 1"), "{out}");
    assert!(out.contains("dim 2, irreducibility unknown"), "{out}");
    let (code, _, err) = cli(&["decompose", "builtin:cyclic:4", "--field", "q", "--rep", path]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn search_bound_is_enforced() {
    let (code, _, err) = cli(&["converse", "builtin:klein", "-p", "2", "--bound", "4"]);
    assert_eq!(code, 2);
    assert!(err.contains("--bound"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_gyrorep");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code().unwrap();
    assert_eq!(status(&["verify", "builtin:g8"]), 0);
    assert_eq!(status(&["converse", "builtin:g8", "-p", "2"]), 1);
    assert_eq!(status(&["converse", "builtin:g8"]), 2);
    let out = Command::new(bin).args(["lgyr", "builtin:g8"]).output().unwrap();
    assert!(String::from_utf8_lossy(&out.stdout).contains("classes: {0,3} {1,2} {4,6} {5,7}"));
}
