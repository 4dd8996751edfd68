//! End-to-end tests of the `rnn` binary: exit codes, JSON shape, stdin
//! handling and format conversion.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn rnn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rnn"))
        .args(args)
        .env_remove("RNN_BUDGET")
        .output()
        .expect("binary runs")
}

fn rnn_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rnn"))
        .args(args)
        .env_remove("RNN_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn invariants_text_exit_ok() {
    let out = rnn(&["invariants", "--gen", "cycle:7"]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = stdout(&out);
    assert!(text.contains("r_min") && text.contains("r_max"), "{text}");
}

#[test]
fn invariants_json_payload() {
    let out = rnn(&["invariants", "--gen", "cycle:7", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["payload"]["n"], 7);
    assert_eq!(v["payload"]["m"], 7);
    assert_eq!(v["payload"]["chi"], 3);
    assert_eq!(v["payload"]["r_min"], 3);
    assert_eq!(v["payload"]["r_max"], 5);
    assert_eq!(v["exact"], true);
}

#[test]
fn stdin_graph6_input() {
    // "Bw" is the triangle
    let out = rnn_stdin(&["invariants", "-", "--json"], "Bw\n");
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["payload"]["n"], 3);
    assert_eq!(v["payload"]["r_min"], 3);
}

#[test]
fn parse_error_is_exit_2() {
    let out = rnn_stdin(&["invariants", "-"], "\u{7f}not graph6\n");
    assert_eq!(out.status.code(), Some(2), "{out:?}");
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn missing_file_is_exit_2() {
    let out = rnn(&["invariants", "/nonexistent/graph.g6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn require_connected_rejects_null_graph() {
    let out = rnn(&["invariants", "--gen", "null:4", "--require-connected"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tiny_budget_is_exit_3() {
    let out = rnn(&["--budget", "1", "invariants", "--gen", "cycle:13"]);
    assert_eq!(out.status.code(), Some(3), "{out:?}");
}

#[test]
fn budget_env_variable_applies() {
    let out = Command::new(env!("CARGO_BIN_EXE_rnn"))
        .args(["invariants", "--gen", "cycle:13"])
        .env("RNN_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    // explicit flag wins over the environment
    let out = Command::new(env!("CARGO_BIN_EXE_rnn"))
        .args(["--budget", "100000000", "invariants", "--gen", "cycle:13"])
        .env("RNN_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_family_formula_mismatch_is_exit_1() {
    // the published odd-cycle maximum formula fails from n = 9 on
    let out = rnn(&["verify", "prop2.3", "--odd", "3..9"]);
    assert_eq!(out.status.code(), Some(1), "{}", stdout(&out));
    let out = rnn(&["verify", "prop2.3", "--odd", "3..7"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn verify_random_corpus_json() {
    let out = rnn(&[
        "verify", "thm1.1", "--random", "10", "--seed", "7", "--max-n", "7", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["all_pass"], true);
    assert_eq!(v["rows"].as_array().unwrap().len(), 10);
}

#[test]
fn verify_random_without_seed_is_exit_2() {
    let out = rnn(&["verify", "thm1.1", "--random", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_unknown_id_is_exit_2() {
    let out = rnn(&["verify", "no-such-result"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn colour_emits_valid_colouring() {
    let out = rnn(&["colour", "--gen", "cycle:5"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let assignment = v["payload"]["colouring"]["assignment"].as_array().unwrap();
    assert_eq!(assignment.len(), 5);
    assert_eq!(v["payload"]["colouring"]["k"], 3);
}

#[test]
fn rainbow_reports_user_colouring() {
    let out = rnn_stdin(
        &["rainbow", "--gen", "cycle:7", "--colouring", "-"],
        r#"{"k":3,"assignment":[0,1,0,1,0,1,2]}"#,
    );
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["payload"]["count"], 3);
}

#[test]
fn rainbow_rejects_wrong_length() {
    let out = rnn_stdin(
        &["rainbow", "--gen", "cycle:7", "--colouring", "-"],
        r#"{"k":2,"assignment":[0,1]}"#,
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn convert_round_trips_between_formats() {
    let out = rnn(&["convert", "--gen", "cycle:5", "--to", "dimacs"]);
    assert_eq!(out.status.code(), Some(0));
    let dimacs = stdout(&out);
    assert!(dimacs.starts_with("p edge 5 5"), "{dimacs}");

    let out = rnn_stdin(&["convert", "-", "--to", "graph6"], &dimacs);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let g6 = stdout(&out);

    let direct = rnn(&["convert", "--gen", "cycle:5", "--to", "graph6"]);
    assert_eq!(stdout(&direct), g6);
}

#[test]
fn threads_flag_does_not_change_json() {
    let one = rnn(&["invariants", "--gen", "sunlet:7", "--json", "--witness"]);
    let eight = rnn(&["--threads", "8", "invariants", "--gen", "sunlet:7", "--json", "--witness"]);
    assert_eq!(one.status.code(), Some(0));
    let strip = |o: &Output| {
        let mut v: serde_json::Value = serde_json::from_str(&stdout(o)).unwrap();
        v.as_object_mut().unwrap().remove("wall_ms");
        v
    };
    assert_eq!(strip(&one), strip(&eight));
}
