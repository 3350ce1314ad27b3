//! End-to-end tests of the `sja` binary: exit codes, output stability, and
//! the interactive loop.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use semijoin::corpus;
use semijoin::parse::render_database;

fn sja() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sja"))
}

fn write_corpus(dir: &Path, name: &str) -> Vec<PathBuf> {
    let entry = corpus::entry(name).unwrap();
    entry
        .databases
        .iter()
        .map(|(stem, db)| {
            let path = dir.join(format!("{stem}.db"));
            std::fs::write(&path, render_database(db)).unwrap();
            path
        })
        .collect()
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn eval_prints_sorted_tuples_and_respects_empty_check() {
    let dir = tempfile::tempdir().unwrap();
    let files = write_corpus(dir.path(), "figure1");
    let out = sja()
        .arg("eval")
        .arg(&files[0])
        .arg("(S semijoin[x1 != y1] S)")
        .arg("--machine")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "(1)\n(2)\n");

    // empty result with --empty-check exits 1
    let out = sja()
        .arg("eval")
        .arg(&files[0])
        .arg("(S diff S)")
        .arg("--empty-check")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_of(&out), "");

    // nonempty with --empty-check exits 0
    let out = sja()
        .arg("eval")
        .arg(&files[0])
        .arg("S")
        .arg("--empty-check")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn eval_reports_unknown_relations_with_exit_code_two() {
    let dir = tempfile::tempdir().unwrap();
    let files = write_corpus(dir.path(), "figure1");
    let out = sja().arg("eval").arg(&files[0]).arg("Q").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("unknown relation `Q`"));
}

#[test]
fn eval_reads_expressions_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let files = write_corpus(dir.path(), "figure1");
    let expr_path = dir.path().join("query.sja");
    std::fs::write(&expr_path, "project[1](T)\n").unwrap();
    let out = sja()
        .arg("eval")
        .arg(&files[0])
        .arg(format!("@{}", expr_path.display()))
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "(a)\n(b)\n");
}

#[test]
fn game_verdicts_and_machine_output_are_stable() {
    let dir = tempfile::tempdir().unwrap();
    let d4 = write_corpus(dir.path(), "cycle-4");
    let d5 = write_corpus(dir.path(), "cycle-5");
    let run = || {
        sja()
            .arg("game")
            .arg(&d4[0])
            .arg(&d5[0])
            .args(["--rounds", "inf", "--machine"])
            .output()
            .unwrap()
    };
    let first = run();
    let second = run();
    assert!(first.status.success());
    assert_eq!(stdout_of(&first), "winner=duplicator\nrank=inf\n");
    assert_eq!(stdout_of(&first), stdout_of(&second));
}

#[test]
fn game_on_the_same_file_twice_is_duplicator_won() {
    let dir = tempfile::tempdir().unwrap();
    let files = write_corpus(dir.path(), "figure2");
    let out = sja()
        .arg("game")
        .arg(&files[0])
        .arg(&files[0])
        .args(["--rounds", "inf"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("winner: duplicator"));
}

#[test]
fn game_reports_the_ordered_product_survival() {
    let dir = tempfile::tempdir().unwrap();
    let files = write_corpus(dir.path(), "product-5");
    let out = sja()
        .arg("game")
        .arg(&files[0])
        .arg(&files[1])
        .args(["--rounds", "2", "--machine"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "winner=duplicator\nrank=2\n");
}

#[test]
fn game_rejects_tuples_outside_the_space_listing_valid_ones() {
    let dir = tempfile::tempdir().unwrap();
    let d4 = write_corpus(dir.path(), "cycle-4");
    let out = sja()
        .arg("game")
        .arg(&d4[0])
        .arg(&d4[0])
        .args(["--left", "(9,9)"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = stderr_of(&out);
    assert!(err.contains("valid tuples"));
    assert!(err.contains("(1,2)"));
}

#[test]
fn distinguish_separates_the_triangle_from_the_square() {
    let dir = tempfile::tempdir().unwrap();
    let d3 = write_corpus(dir.path(), "cycle-3");
    let d4 = write_corpus(dir.path(), "cycle-4");
    let out = sja()
        .arg("distinguish")
        .arg(&d3[0])
        .arg(&d4[0])
        .arg("--machine")
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("verdict=separation"));
    assert!(text.contains("rounds=2"));
    assert!(text.contains("member_left=true"));
    assert!(text.contains("member_right=false"));
}

#[test]
fn distinguish_certifies_identical_files_indistinguishable() {
    let dir = tempfile::tempdir().unwrap();
    let d4 = write_corpus(dir.path(), "cycle-4");
    let out = sja()
        .arg("distinguish")
        .arg(&d4[0])
        .arg(&d4[0])
        .arg("--machine")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("verdict=indistinguishable"));
}

#[test]
fn distinguish_reports_exceeded_budgets() {
    let dir = tempfile::tempdir().unwrap();
    let d3 = write_corpus(dir.path(), "cycle-3");
    let d4 = write_corpus(dir.path(), "cycle-4");
    let out = sja()
        .arg("distinguish")
        .arg(&d3[0])
        .arg(&d4[0])
        .args(["--max-rank", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("budget"));
}

#[test]
fn corpus_list_and_emit_match_the_library() {
    let out = sja().args(["corpus", "list"]).output().unwrap();
    assert!(out.status.success());
    let lines: Vec<_> = stdout_of(&out).lines().map(String::from).collect();
    assert!(lines.len() >= 10);

    let dir = tempfile::tempdir().unwrap();
    let out = sja()
        .args(["corpus", "emit", "figure1", "--out"])
        .arg(dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    for (stem, db) in &corpus::entry("figure1").unwrap().databases {
        let written = std::fs::read_to_string(dir.path().join(format!("{stem}.db"))).unwrap();
        assert_eq!(written, render_database(db));
    }

    let out = sja()
        .args(["corpus", "emit", "nonsense", "--out"])
        .arg(dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_subset_passes_and_prints_rows() {
    let out = sja()
        .args(["check", "--suite", "paper", "--only", "1,2,4"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 3);
    assert!(text.lines().all(|l| l.contains("PASS")));
    let again = sja()
        .args(["check", "--suite", "nonsense"])
        .output()
        .unwrap();
    assert_eq!(again.status.code(), Some(2));
}

fn run_interactive(args: &[&str], script: &str) -> Output {
    let mut child = sja()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(script.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

#[test]
fn interactive_engine_as_spoiler_wins_within_its_rank() {
    let dir = tempfile::tempdir().unwrap();
    let d3 = write_corpus(dir.path(), "cycle-3");
    let d4 = write_corpus(dir.path(), "cycle-4");
    // survival rank 1: any human line loses within 2 rounds; feed plenty of
    // answers, the engine must end the game before they run out
    let script = "(1,2)\n(2,3)\n(3,1)\n(1,2)\n(2,3)\n(3,1)\n";
    let out = run_interactive(
        &[
            "game",
            d3[0].to_str().unwrap(),
            d4[0].to_str().unwrap(),
            "--interactive",
            "--play",
            "duplicator",
        ],
        script,
    );
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(
        text.contains("spoiler wins after 2 round(s)") || text.contains("no legal answer"),
        "{text}"
    );
}

#[test]
fn interactive_rejects_illegal_answers_and_accepts_legal_ones() {
    let dir = tempfile::tempdir().unwrap();
    let d4 = write_corpus(dir.path(), "cycle-4");
    // identical databases: engine concedes at once (no winning line)
    let out = run_interactive(
        &[
            "game",
            d4[0].to_str().unwrap(),
            d4[0].to_str().unwrap(),
            "--interactive",
            "--play",
            "duplicator",
        ],
        "",
    );
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("engine concedes"));

    // human as spoiler: illegal move is rejected, game continues
    let d5 = write_corpus(dir.path(), "cycle-5");
    let script = "left (9,9)\nleft (1,2)\nquit\n";
    let out = run_interactive(
        &[
            "game",
            d4[0].to_str().unwrap(),
            d5[0].to_str().unwrap(),
            "--interactive",
            "--play",
            "spoiler",
        ],
        script,
    );
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("not in the left tuple space"), "{text}");
    assert!(text.contains("duplicator answers"), "{text}");
}

#[test]
fn interactive_human_duplicator_survives_with_legal_answers() {
    let dir = tempfile::tempdir().unwrap();
    let d4 = write_corpus(dir.path(), "cycle-4");
    let d5 = write_corpus(dir.path(), "cycle-5");
    // duplicator-won pair: engine concedes immediately
    let out = run_interactive(
        &[
            "game",
            d4[0].to_str().unwrap(),
            d5[0].to_str().unwrap(),
            "--interactive",
            "--play",
            "duplicator",
        ],
        "",
    );
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("engine concedes"));
}

#[test]
fn interactive_round_cap_declares_the_duplicator() {
    let dir = tempfile::tempdir().unwrap();
    let d3 = write_corpus(dir.path(), "cycle-3");
    let d4 = write_corpus(dir.path(), "cycle-4");
    // human spoiler plays one round badly; the cap then ends the game
    let script = "left (1,2)\nleft (2,3)\n";
    let out = run_interactive(
        &[
            "game",
            d3[0].to_str().unwrap(),
            d4[0].to_str().unwrap(),
            "--interactive",
            "--play",
            "spoiler",
            "--rounds",
            "2",
        ],
        script,
    );
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("duplicator survived 2 round(s)"), "{text}");
}
