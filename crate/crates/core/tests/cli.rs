use std::process::{Command, Output};

fn hermgf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hermgf")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn hermite_examples() {
    for (args, expected) in [
        (&["hermite", "--kind", "h", "--n", "3"][..], "u^3 + 3*u\n"),
        (&["hermite", "--kind", "H", "--n", "2"][..], "4*u^2 - 2\n"),
        (&["hermite", "--kind", "h", "--n", "0"][..], "1\n"),
    ] {
        let o = hermgf(args);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), expected);
    }
    assert_eq!(hermgf(&["hermite", "--kind", "q", "--n", "2"]).status.code(), Some(2));
    assert_eq!(hermgf(&["hermite", "--n", "-1"]).status.code(), Some(2));
}

#[test]
fn verify_json_report() {
    let o = hermgf(&["--format", "json", "verify", "main", "--order", "12"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        r#"{"identity":"main","order":12,"status":"verified","mismatch":null}"#
    );
    // byte-identical on a second run
    assert_eq!(o.stdout, hermgf(&["--format", "json", "verify", "main", "--order", "12"]).stdout);
}

#[test]
fn verify_exit_codes() {
    assert_eq!(hermgf(&["verify", "doetsch", "--order", "0"]).status.code(), Some(0));
    assert_eq!(hermgf(&["verify", "main", "--order", "-1"]).status.code(), Some(2));
    assert_eq!(hermgf(&["verify", "no-such", "--order", "3"]).status.code(), Some(2));

    let all = hermgf(&["--format", "json", "verify", "all", "--order", "4"]);
    assert_eq!(all.status.code(), Some(0));
    let reports: serde_json::Value = serde_json::from_slice(&all.stdout).unwrap();
    let reports = reports.as_array().unwrap();
    assert_eq!(reports.len(), 10);
    assert!(reports.iter().all(|r| r["status"] == "verified"));
}

#[test]
fn oracle_examples() {
    let o = hermgf(&["oracle", "matchings", "--n", "3"]);
    assert_eq!(stdout(&o), "u^3 + 3*u\n");
    let o = hermgf(&["oracle", "wtrees", "--n", "2"]);
    assert_eq!(stdout(&o), "36\n");

    let o = hermgf(&["oracle", "graphs", "--n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("acyclic-only: u^3\n"));
    assert!(text.contains("unicyclic-only: 3*u\n"));
    assert!(text.ends_with("check: pass\n"));

    assert_eq!(hermgf(&["oracle", "wtrees", "--n", "9"]).status.code(), Some(2));
    assert_eq!(hermgf(&["oracle", "graphs", "--n", "5"]).status.code(), Some(2));
}

#[test]
fn expand_series() {
    let o = hermgf(&["expand", "w", "--order", "3"]);
    assert_eq!(stdout(&o), "z^0: u\nz^1: 3*u^2\nz^2: 18*u^3\nz^3: 135*u^4\n");
    let o = hermgf(&["expand", "lhs-doetsch", "--order", "1"]);
    assert_eq!(stdout(&o), "z^0: 1\nz^1: u^2 + 1\n");
}
