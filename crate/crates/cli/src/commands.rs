//! Implementations of the `npnsig` subcommands. Each writes its report to the
//! given writer so the commands can be driven from tests.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::time::{Duration, Instant};

use npn_core::signatures::SignatureVectors;
use npn_core::{
    build_msv, classify, compare, exact_classify, SignatureFamily, SignatureSelection, TruthTable,
};
use serde::Serialize;

use crate::corpus::{self, Corpus};
use crate::error::{CliError, Result};
use crate::generate;

fn join(values: &[u32]) -> String {
    values
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn line(out: &mut impl Write, label: &str, values: &[u32]) -> std::io::Result<()> {
    if values.is_empty() {
        writeln!(out, "{label}:")
    } else {
        writeln!(out, "{label}: {}", join(values))
    }
}

/// Prints the signature vectors of one function, unnormalized, in MSV order,
/// followed by scalar summaries and the normalized MSV.
pub fn sigs(out: &mut impl Write, vars: usize, hex: &str, sel: SignatureSelection) -> Result<()> {
    use SignatureFamily::*;
    let f = TruthTable::from_hex(hex, vars)?;
    let s = SignatureVectors::compute(&f);
    let msv = build_msv(&f, sel)?;
    let io = CliError::io("<stdout>");
    (|| -> std::io::Result<()> {
        writeln!(out, "n: {}", s.num_vars)?;
        writeln!(out, "satisfy_count: {}", s.satisfy_count)?;
        if sel.contains(Ocv1) {
            line(out, "ocv1", &s.ocv1)?;
        }
        if sel.contains(Ocv2) {
            line(out, "ocv2", &s.ocv2)?;
        }
        if sel.contains(Oiv) {
            line(out, "oiv", &s.oiv)?;
        }
        if sel.contains(Osv) {
            line(out, "osv1", &s.osv1)?;
            line(out, "osv0", &s.osv0)?;
            line(out, "osv", &s.osv)?;
        }
        if sel.contains(Osdv) {
            line(out, "osdv1", s.osdv1.as_slice())?;
            line(out, "osdv0", s.osdv0.as_slice())?;
            line(out, "osdv", s.osdv.as_slice())?;
        }
        writeln!(out, "total_influence: {}", s.total_influence)?;
        let m = s.sensitivity;
        writeln!(out, "sensitivity: {} {} {}", m.all, m.zero, m.one)?;
        line(out, "msv", msv.values())
    })()
    .map_err(io)
}

pub fn read_corpus(path: &Path, vars: Option<usize>) -> Result<Corpus> {
    let text = fs::read_to_string(path).map_err(CliError::io(path))?;
    let corpus = corpus::parse(&text, vars, &path.display().to_string())?;
    if corpus.tables.is_empty() {
        return Err(npn_core::Error::EmptyInput.into());
    }
    Ok(corpus)
}

#[derive(Serialize)]
struct Record<'a> {
    tt: &'a str,
    class: usize,
}

/// Final record of a `classify` output file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifySummary {
    pub n: usize,
    pub functions: usize,
    pub unique: usize,
    pub classes: usize,
    pub selection: String,
    pub elapsed_ms: u128,
}

/// Classifies a corpus and writes one JSON record per input line, then the
/// summary record.
pub fn classify_file(
    input: &Path,
    vars: Option<usize>,
    sel: SignatureSelection,
    output: &Path,
) -> Result<ClassifySummary> {
    let corpus = read_corpus(input, vars)?;
    let start = Instant::now();
    let classes = classify(&corpus.tables, sel)?;
    let elapsed = start.elapsed();
    let summary = ClassifySummary {
        n: corpus.vars,
        functions: classes.input_count(),
        unique: classes.unique_count(),
        classes: classes.num_classes(),
        selection: sel.to_string(),
        elapsed_ms: elapsed.as_millis(),
    };
    let file = fs::File::create(output).map_err(CliError::io(output))?;
    let mut w = BufWriter::new(file);
    (|| -> std::io::Result<()> {
        for t in &corpus.tables {
            let class = classes.class_of(t).expect("classified");
            let hex = t.to_hex();
            serde_json::to_writer(&mut w, &Record { tt: &hex, class })?;
            writeln!(w)?;
        }
        serde_json::to_writer(&mut w, &summary)?;
        writeln!(w)?;
        w.flush()
    })()
    .map_err(CliError::io(output))?;
    Ok(summary)
}

/// Signature classes against the exact oracle. Returns the report after
/// printing it; violations are an error (exit code 4).
pub fn compare_file(
    out: &mut impl Write,
    input: &Path,
    vars: Option<usize>,
    sel: SignatureSelection,
) -> Result<npn_core::ComparisonReport> {
    let corpus = read_corpus(input, vars)?;
    let exact = exact_classify(&corpus.tables)?;
    let sig = classify(&corpus.tables, sel)?;
    let report = compare(&sig, &exact)?;
    (|| -> std::io::Result<()> {
        writeln!(out, "selection: {sel}")?;
        writeln!(out, "functions: {}", sig.input_count())?;
        writeln!(out, "unique: {}", sig.unique_count())?;
        writeln!(out, "signature_classes: {}", report.sig_class_count)?;
        writeln!(out, "exact_classes: {}", report.exact_class_count)?;
        writeln!(out, "accuracy: {:.6}", report.accuracy)?;
        writeln!(out, "violations: {}", report.violations.len())?;
        for (a, b) in &report.violations {
            writeln!(out, "violation: {a} {b}")?;
        }
        Ok(())
    })()
    .map_err(CliError::io("<stdout>"))?;
    if !report.is_sound() {
        return Err(CliError::Violations(report.violations.len()));
    }
    Ok(report)
}

/// Generates tables for `gen` and `bench`.
pub fn generate_tables(
    vars: usize,
    count: usize,
    seed: u64,
    consecutive: bool,
) -> Result<Vec<TruthTable>> {
    if count == 0 {
        return Err(CliError::Usage("--count must be at least 1".into()));
    }
    let tables = if consecutive {
        generate::consecutive(vars, count, seed)?
    } else {
        generate::uniform(vars, count, seed)?
    };
    Ok(tables)
}

pub fn gen_file(
    output: &Path,
    vars: usize,
    count: usize,
    seed: u64,
    consecutive: bool,
) -> Result<()> {
    let tables = generate_tables(vars, count, seed, consecutive)?;
    let mode = if consecutive {
        "consecutive"
    } else {
        "uniform"
    };
    let comment = format!(
        "npnsig gen: prng={} seed={seed} count={count} mode={mode}",
        generate::PRNG
    );
    let file = fs::File::create(output).map_err(CliError::io(output))?;
    let mut w = BufWriter::new(file);
    corpus::write(&mut w, vars, Some(&comment), tables)
        .and_then(|_| w.flush())
        .map_err(CliError::io(output))
}

/// One row of the `bench` timing table.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub size: usize,
    pub elapsed: Duration,
    /// Functions per second.
    pub throughput: f64,
    /// Elapsed time relative to the previous row.
    pub ratio: Option<f64>,
}

/// Times end-to-end classification of random corpora of each size. Corpus
/// generation is excluded from the timing.
pub fn bench(
    vars: usize,
    sizes: &[usize],
    seed: u64,
    sel: SignatureSelection,
) -> Result<Vec<BenchRow>> {
    if sizes.is_empty() {
        return Err(CliError::Usage(
            "--sizes must list at least one size".into(),
        ));
    }
    if sizes[0] == 0 || sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::Usage(
            "--sizes must be positive and strictly ascending".into(),
        ));
    }
    // Warm up the thread pool and caches.
    classify(
        &generate_tables(vars, sizes[0].min(1000), seed ^ 1, false)?,
        sel,
    )?;

    let mut rows: Vec<BenchRow> = Vec::with_capacity(sizes.len());
    for &size in sizes {
        let tables = generate_tables(vars, size, seed, false)?;
        let start = Instant::now();
        classify(&tables, sel)?;
        let elapsed = start.elapsed();
        let ratio = rows
            .last()
            .map(|prev| elapsed.as_secs_f64() / prev.elapsed.as_secs_f64());
        rows.push(BenchRow {
            size,
            elapsed,
            throughput: size as f64 / elapsed.as_secs_f64(),
            ratio,
        });
    }
    Ok(rows)
}

pub fn print_bench(out: &mut impl Write, rows: &[BenchRow]) -> Result<()> {
    (|| -> std::io::Result<()> {
        writeln!(out, "size\telapsed_ms\tthroughput_per_s\tratio")?;
        for r in rows {
            let ratio = r.ratio.map_or("-".to_string(), |x| format!("{x:.3}"));
            writeln!(
                out,
                "{}\t{:.3}\t{:.0}\t{}",
                r.size,
                r.elapsed.as_secs_f64() * 1e3,
                r.throughput,
                ratio
            )?;
        }
        Ok(())
    })()
    .map_err(CliError::io("<stdout>"))
}
