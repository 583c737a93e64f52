use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn npnsig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_npnsig"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn field<'a>(text: &'a str, label: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(label)?.strip_prefix(':').map(str::trim))
        .unwrap_or_else(|| panic!("no {label} line in:\n{text}"))
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_owned()
}

fn write_space(p: &Path, n: usize) {
    let tables = (0..1u32 << (1 << n))
        .map(|v| format!("{v:0w$X}\n", w = ((1usize << n) / 4).max(1)))
        .collect::<String>();
    fs::write(p, format!("n={n}\n{tables}")).unwrap();
}

#[test]
fn sigs_prints_labelled_vectors() {
    let o = npnsig(&["sigs", "--n", "3", "--tt", "E8"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(field(&out, "ocv1"), "1 1 1 3 3 3");
    assert_eq!(field(&out, "oiv"), "2 2 2");
    assert_eq!(field(&out, "osv1"), "0 2 2 2");
}

#[test]
fn sigs_rejects_bad_hex_with_code_2() {
    let o = npnsig(&["sigs", "--n", "3", "--tt", "GG"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains('G'));
}

#[test]
fn sigs_rejects_unknown_family() {
    let o = npnsig(&["sigs", "--n", "3", "--tt", "E8", "--sigs", "oiv,xyz"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gen_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let (a, b) = (path(&dir, "a.txt"), path(&dir, "b.txt"));
    for p in [&a, &b] {
        let o = npnsig(&[
            "gen", "--n", "5", "--count", "50", "--seed", "9", "--output", p,
        ]);
        assert_eq!(o.status.code(), Some(0));
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let c = path(&dir, "c.txt");
    npnsig(&[
        "gen", "--n", "5", "--count", "50", "--seed", "10", "--output", &c,
    ]);
    assert_ne!(fs::read(&a).unwrap(), fs::read(&c).unwrap());
}

#[test]
fn gen_zero_count_is_rejected() {
    let dir = TempDir::new().unwrap();
    let o = npnsig(&[
        "gen",
        "--n",
        "3",
        "--count",
        "0",
        "--output",
        &path(&dir, "x"),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gen_consecutive_counts_up_from_seed() {
    let dir = TempDir::new().unwrap();
    let p = path(&dir, "c.txt");
    let o = npnsig(&[
        "gen",
        "--n",
        "3",
        "--count",
        "3",
        "--seed",
        "254",
        "--consecutive",
        "--output",
        &p,
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&p).unwrap();
    let tables: Vec<&str> = text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with("n="))
        .collect();
    assert_eq!(tables, ["FE", "FF", "00"]);
}

#[test]
fn gen_into_missing_directory_is_io_error() {
    let dir = TempDir::new().unwrap();
    let p = path(&dir, "missing/out.txt");
    let o = npnsig(&["gen", "--n", "3", "--count", "1", "--output", &p]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn classify_round_trip() {
    let dir = TempDir::new().unwrap();
    let (input, output) = (path(&dir, "in.txt"), path(&dir, "out.jsonl"));
    fs::write(&input, "n=3\nE8\n17\nAA\nE8\n").unwrap();
    let o = npnsig(&["classify", "--input", &input, "--output", &output]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let records: Vec<serde_json::Value> = fs::read_to_string(&output)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(records.len(), 5);
    assert_eq!(records[0]["class"], records[1]["class"]);
    assert_eq!(records[0]["class"], records[3]["class"]);
    assert_ne!(records[0]["class"], records[2]["class"]);
    let summary = &records[4];
    assert_eq!(summary["n"], 3);
    assert_eq!(summary["functions"], 4);
    assert_eq!(summary["unique"], 3);
    assert_eq!(summary["classes"], 2);
    assert_eq!(summary["selection"], "all");
}

#[test]
fn classify_generated_corpus() {
    let dir = TempDir::new().unwrap();
    let (input, output) = (path(&dir, "g.txt"), path(&dir, "o.jsonl"));
    npnsig(&[
        "gen", "--n", "8", "--count", "200", "--seed", "1", "--output", &input,
    ]);
    let o = npnsig(&[
        "classify", "--input", &input, "--n", "8", "--output", &output,
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fs::read_to_string(&output).unwrap().lines().count(), 201);
}

#[test]
fn classify_empty_corpus_is_rejected() {
    let dir = TempDir::new().unwrap();
    let (input, output) = (path(&dir, "e.txt"), path(&dir, "o"));
    fs::write(&input, "# nothing here\nn=4\n").unwrap();
    let o = npnsig(&["classify", "--input", &input, "--output", &output]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn classify_reports_corpus_line() {
    let dir = TempDir::new().unwrap();
    let (input, output) = (path(&dir, "bad.txt"), path(&dir, "o"));
    fs::write(&input, "n=3\nE8\nZ1\n").unwrap();
    let o = npnsig(&["classify", "--input", &input, "--output", &output]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains(":3:"));
}

#[test]
fn classify_missing_input_is_io_error() {
    let dir = TempDir::new().unwrap();
    let o = npnsig(&[
        "classify",
        "--input",
        &path(&dir, "nope"),
        "--n",
        "3",
        "--output",
        &path(&dir, "o"),
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn compare_full_spaces_is_exact() {
    let dir = TempDir::new().unwrap();
    for (n, classes) in [(3, "14"), (4, "222")] {
        let input = dir.path().join(format!("space{n}.txt"));
        write_space(&input, n);
        let o = npnsig(&["compare", "--input", input.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        let out = stdout(&o);
        assert_eq!(field(&out, "exact_classes"), classes);
        assert_eq!(field(&out, "signature_classes"), classes);
        assert_eq!(field(&out, "violations"), "0");
    }
}

#[test]
fn compare_weak_selection_is_still_sound() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("space4.txt");
    write_space(&input, 4);
    let o = npnsig(&[
        "compare",
        "--input",
        input.to_str().unwrap(),
        "--sigs",
        "ocv1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(field(&out, "violations"), "0");
    assert!(field(&out, "signature_classes").parse::<usize>().unwrap() < 222);
}

#[test]
fn compare_above_oracle_bound_is_rejected() {
    let dir = TempDir::new().unwrap();
    let input = path(&dir, "n7.txt");
    npnsig(&["gen", "--n", "7", "--count", "5", "--output", &input]);
    let o = npnsig(&["compare", "--input", &input]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bench_rejects_unordered_sizes() {
    let o = npnsig(&["bench", "--n", "5", "--sizes", "100,10"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bench_reports_each_size() {
    let o = npnsig(&["bench", "--n", "5", "--sizes", "100,1000", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("100") && out.contains("1000"));
}
