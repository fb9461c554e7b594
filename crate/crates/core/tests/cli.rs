mod common;

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use common::*;

fn rouge2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rouge2")).args(args).output().expect("spawn rouge2")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn data_lines(stdout: &[u8]) -> Vec<Vec<String>> {
    String::from_utf8(stdout.to_vec())
        .unwrap()
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(String::from).collect())
        .collect()
}

#[test]
fn table_run_prints_csv_and_exits_zero() {
    let (s, r) = (systems_dir(), references_dir());
    let out = rouge2(&["--systems", path(&s), "--references", path(&r), "--metric", "rouge1"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stderr.is_empty());
    let stdout = String::from_utf8(out.stdout.clone()).unwrap();
    assert!(stdout.starts_with(
        "task,system,measure,settings,references,aggregation,recall,precision,f_score,recall_full,precision_full,f_score_full\n"
    ));
    let rows = data_lines(&out.stdout);
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0][..9], ["phone", "sys1", "ROUGE-1", "none", "1", "mean", "0.462", "0.750", "0.571"]);
    assert_eq!(rows[1][6..9], ["0.692", "0.196", "0.305"]);
}

#[test]
fn stopwords_and_synonyms_flags() {
    let (s, r) = (systems_dir(), references_dir());
    let dict = example_dir().join("synonyms.txt");
    let out = rouge2(&[
        "--systems", path(&s), "--references", path(&r), "--metric", "rouge1",
        "--remove-stopwords", "--synonyms", path(&dict),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let rows = data_lines(&out.stdout);
    assert_eq!(rows[0][3], "StopWordRemoval+Synonyms");
    assert_eq!(rows[0][6..9], ["1.000", "0.833", "0.909"]);
    assert_eq!(rows[1][6..9], ["1.000", "0.217", "0.357"]);
}

#[test]
fn topic_uniq_synonyms_uses_gold_tags() {
    let (s, r) = (systems_dir(), references_dir());
    let dict = example_dir().join("synonyms.txt");
    let out = rouge2(&[
        "--systems", path(&s), "--references", path(&r), "--metric", "topicUniq",
        "--pos", "NN,JJ", "--synonyms", path(&dict),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let rows = data_lines(&out.stdout);
    assert_eq!(rows[0][2..4], ["ROUGE-TopicUniq", "pos=NN|JJ+Synonyms"]);
    assert_eq!(rows[0][6..9], ["1.000", "1.000", "1.000"]);
    assert_eq!(rows[1][6..9], ["1.000", "0.455", "0.625"]);
}

#[test]
fn output_file_matches_stdout() {
    let (s, r) = (systems_dir(), references_dir());
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("report.csv");
    let args = ["--systems", path(&s), "--references", path(&r), "--metric", "rouge2", "--metric", "topic", "--pos", "NN|JJ"];
    let printed = rouge2(&args);
    let written = rouge2(&[&args[..], &["--output", path(&file)]].concat());
    assert_eq!(written.status.code(), Some(0));
    assert!(written.stdout.is_empty());
    assert_eq!(fs::read(&file).unwrap(), printed.stdout);
    assert_eq!(data_lines(&printed.stdout).len(), 4);
}

#[test]
fn missing_systems_dir_exits_one() {
    let r = references_dir();
    let out = rouge2(&["--systems", "/no/such/systems", "--references", path(&r), "--metric", "rouge1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("/no/such/systems"));
}

#[test]
fn usage_errors_exit_one() {
    let out = rouge2(&["--metric", "topic"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
    assert!(out.stdout.is_empty());

    let (s, r) = (systems_dir(), references_dir());
    let out = rouge2(&["--systems", path(&s), "--references", path(&r), "--metric", "topic"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--pos"));
}

#[test]
fn help_exits_zero() {
    let out = rouge2(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("--metric"));
}

#[test]
fn unmatched_system_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let (s, r) = (dir.path().join("sys"), dir.path().join("ref"));
    fs::create_dir_all(&s).unwrap();
    fs::create_dir_all(&r).unwrap();
    fs::write(s.join("phone_sys1.txt"), SYS_SUM1).unwrap();
    fs::write(s.join("laptop_sys1.txt"), "A fast laptop.").unwrap();
    fs::write(r.join("phone.1.txt"), REF_SUM).unwrap();

    let out = rouge2(&["--systems", path(&s), "--references", path(&r), "--metric", "rouge1"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(data_lines(&out.stdout).len(), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("laptop_sys1"));
}

#[test]
fn topic_without_tags_or_lexicon_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let (s, r) = (dir.path().join("sys"), dir.path().join("ref"));
    fs::create_dir_all(&s).unwrap();
    fs::create_dir_all(&r).unwrap();
    fs::write(s.join("phone_sys1.txt"), SYS_SUM1).unwrap();
    fs::write(r.join("phone.1.txt"), REF_SUM).unwrap();
    let args = ["--systems", path(&s), "--references", path(&r), "--metric", "rouge1", "--metric", "topic", "--pos", "NN,JJ"];

    let out = rouge2(&args);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(data_lines(&out.stdout).len(), 1);

    // With the fixture lexicon the plain summaries tag exactly like the gold files.
    let lexicon = example_dir().join("lexicon.tsv");
    let out = rouge2(&[&args[..], &["--lexicon", path(&lexicon)]].concat());
    assert_eq!(out.status.code(), Some(0));
    let rows = data_lines(&out.stdout);
    assert_eq!(rows[1][6..9], ["0.800", "0.667", "0.727"]);
}

#[test]
fn unparseable_file_name_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let (s, r) = (dir.path().join("sys"), dir.path().join("ref"));
    fs::create_dir_all(&s).unwrap();
    fs::create_dir_all(&r).unwrap();
    fs::write(s.join("nounderscore.txt"), SYS_SUM1).unwrap();
    fs::write(r.join("phone.1.txt"), REF_SUM).unwrap();
    let out = rouge2(&["--systems", path(&s), "--references", path(&r), "--metric", "rouge1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("nounderscore.txt"));
}

#[test]
fn missing_synonym_file_exits_one() {
    let (s, r) = (systems_dir(), references_dir());
    let out = rouge2(&["--systems", path(&s), "--references", path(&r), "--metric", "rouge1", "--synonyms", "/no/dict.txt"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("/no/dict.txt"));
}
