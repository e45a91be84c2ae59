//! Markdown, CSV and JSON renderings.
//!
//! All output uses LF line endings and plain decimal integers. JSON objects
//! are emitted with keys in sorted order and no insignificant whitespace.

use binocont_core::identity::SubsetAnalysis;
use binocont_core::verify::VerifySummary;
use binocont_core::{BigInt, IdentityReport};
use clap::ValueEnum;
use serde::Serialize;
use serde_json::value::RawValue;
use std::fmt::Write as _;

use crate::BenchRow;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Markdown,
    Csv,
    Json,
}

/// Big integers go into JSON as bare number tokens.
fn json_int(v: &BigInt) -> Box<RawValue> {
    RawValue::from_string(v.to_string()).expect("decimal integer is valid JSON")
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new())
}

fn csv_finish(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
}

fn md_row<S: AsRef<str>>(out: &mut String, cells: impl IntoIterator<Item = S>) {
    out.push('|');
    for c in cells {
        out.push(' ');
        out.push_str(c.as_ref());
        out.push_str(" |");
    }
    out.push('\n');
}

fn md_rule(out: &mut String, columns: usize) {
    out.push('|');
    for _ in 0..columns {
        out.push_str("---|");
    }
    out.push('\n');
}

fn braces(subset: &[u32]) -> String {
    let inner: Vec<String> = subset.iter().map(u32::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

pub fn sum(report: &IdentityReport, format: OutputFormat) -> String {
    let cells = [
        report.n.to_string(),
        report.l.to_string(),
        report.left.to_string(),
        report.right.to_string(),
        report.equal.to_string(),
    ];
    match format {
        OutputFormat::Markdown => {
            let mut out = String::new();
            md_row(&mut out, ["n", "l", "left", "right", "equal"]);
            md_rule(&mut out, 5);
            md_row(&mut out, &cells);
            out
        }
        OutputFormat::Csv => {
            let mut w = csv_writer();
            w.write_record(["n", "l", "left", "right", "equal"])
                .unwrap();
            w.write_record(&cells).unwrap();
            csv_finish(w)
        }
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct SumJson {
                equal: bool,
                l: u32,
                left: Box<RawValue>,
                n: u32,
                right: Box<RawValue>,
            }
            to_json(&SumJson {
                equal: report.equal,
                l: report.l,
                left: json_int(&report.left),
                n: report.n,
                right: json_int(&report.right),
            })
        }
    }
}

/// `reports` must be row-major: `l` outer, `n` inner, both from 1.
pub fn table(n_max: u32, l_max: u32, reports: &[IdentityReport], format: OutputFormat) -> String {
    debug_assert_eq!(reports.len(), (n_max * l_max) as usize);
    let header: Vec<String> = std::iter::once("l\\n".to_string())
        .chain((1..=n_max).map(|n| n.to_string()))
        .collect();
    let rows = reports.chunks(n_max as usize).map(|row| {
        std::iter::once(row[0].l.to_string())
            .chain(row.iter().map(|r| r.left.to_string()))
            .collect::<Vec<String>>()
    });
    match format {
        OutputFormat::Markdown => {
            let mut out = String::new();
            md_row(&mut out, &header);
            md_rule(&mut out, header.len());
            for row in rows {
                md_row(&mut out, &row);
            }
            out
        }
        OutputFormat::Csv => {
            let mut w = csv_writer();
            w.write_record(&header).unwrap();
            for row in rows {
                w.write_record(&row).unwrap();
            }
            csv_finish(w)
        }
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Cell {
                l: u32,
                n: u32,
                value: Box<RawValue>,
            }
            let cells: Vec<Cell> = reports
                .iter()
                .map(|r| Cell {
                    l: r.l,
                    n: r.n,
                    value: json_int(&r.left),
                })
                .collect();
            to_json(&cells)
        }
    }
}

pub fn subsets(analysis: &SubsetAnalysis, format: OutputFormat) -> String {
    let values: Vec<String> = analysis
        .collision_values()
        .iter()
        .map(BigInt::to_string)
        .collect();
    match format {
        OutputFormat::Markdown => {
            let mut out = String::new();
            md_row(&mut out, ["I", "u_I", "v_I"]);
            md_rule(&mut out, 3);
            for r in &analysis.records {
                md_row(
                    &mut out,
                    [braces(&r.subset), r.u.to_string(), r.v.to_string()],
                );
            }
            out.push('\n');
            md_row(&mut out, ["value", "I (u_I)", "J (v_J)"]);
            md_rule(&mut out, 3);
            for c in &analysis.collisions {
                md_row(
                    &mut out,
                    [
                        c.value.to_string(),
                        braces(&c.u_subset),
                        braces(&c.v_subset),
                    ],
                );
            }
            out.push('\n');
            let _ = writeln!(out, "full value: {}", analysis.full_value);
            let _ = writeln!(out, "collision values: {}", values.join(", "));
            let _ = writeln!(
                out,
                "only trivial collisions: {}",
                analysis.only_trivial_collisions()
            );
            out
        }
        OutputFormat::Csv => {
            let mut w = csv_writer();
            w.write_record(["subset", "u", "v"]).unwrap();
            for r in &analysis.records {
                w.write_record([braces(&r.subset), r.u.to_string(), r.v.to_string()])
                    .unwrap();
            }
            let mut out = csv_finish(w);
            out.push('\n');
            let mut w = csv_writer();
            w.write_record(["value", "u_subset", "v_subset"]).unwrap();
            for c in &analysis.collisions {
                w.write_record([
                    c.value.to_string(),
                    braces(&c.u_subset),
                    braces(&c.v_subset),
                ])
                .unwrap();
            }
            out.push_str(&csv_finish(w));
            out
        }
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Record {
                subset: Vec<u32>,
                u: Box<RawValue>,
                v: Box<RawValue>,
            }
            #[derive(Serialize)]
            struct CollisionJson {
                u_subset: Vec<u32>,
                v_subset: Vec<u32>,
                value: Box<RawValue>,
            }
            #[derive(Serialize)]
            struct SubsetsJson {
                collision_values: Vec<Box<RawValue>>,
                collisions: Vec<CollisionJson>,
                full_value: Box<RawValue>,
                l: u32,
                n: u32,
                only_trivial_collisions: bool,
                records: Vec<Record>,
            }
            to_json(&SubsetsJson {
                collision_values: analysis.collision_values().iter().map(json_int).collect(),
                collisions: analysis
                    .collisions
                    .iter()
                    .map(|c| CollisionJson {
                        u_subset: c.u_subset.clone(),
                        v_subset: c.v_subset.clone(),
                        value: json_int(&c.value),
                    })
                    .collect(),
                full_value: json_int(&analysis.full_value),
                l: analysis.l,
                n: analysis.n,
                only_trivial_collisions: analysis.only_trivial_collisions(),
                records: analysis
                    .records
                    .iter()
                    .map(|r| Record {
                        subset: r.subset.clone(),
                        u: json_int(&r.u),
                        v: json_int(&r.v),
                    })
                    .collect(),
            })
        }
    }
}

/// Wall time is left out except in JSON, where it is its own field.
pub fn verify(summary: &VerifySummary, format: OutputFormat) -> String {
    match format {
        OutputFormat::Markdown => {
            let mut out = String::new();
            md_row(&mut out, ["suite", "checked", "failed"]);
            md_rule(&mut out, 3);
            for t in &summary.suites {
                md_row(
                    &mut out,
                    [
                        t.suite.name().to_string(),
                        t.checked.to_string(),
                        t.failed.to_string(),
                    ],
                );
            }
            md_row(
                &mut out,
                [
                    "total".to_string(),
                    summary.checked.to_string(),
                    summary.failed.to_string(),
                ],
            );
            out.push('\n');
            let _ = writeln!(out, "checked={} failed={}", summary.checked, summary.failed);
            for f in &summary.failures {
                let _ = writeln!(out, "FAILED {} {}", f.check, f.params);
            }
            out
        }
        OutputFormat::Csv => {
            let mut w = csv_writer();
            w.write_record(["suite", "checked", "failed"]).unwrap();
            for t in &summary.suites {
                w.write_record([
                    t.suite.name().to_string(),
                    t.checked.to_string(),
                    t.failed.to_string(),
                ])
                .unwrap();
            }
            w.write_record([
                "total".to_string(),
                summary.checked.to_string(),
                summary.failed.to_string(),
            ])
            .unwrap();
            let mut out = csv_finish(w);
            if !summary.failures.is_empty() {
                out.push('\n');
                let mut w = csv_writer();
                w.write_record(["check", "params"]).unwrap();
                for f in &summary.failures {
                    w.write_record([f.check, f.params.as_str()]).unwrap();
                }
                out.push_str(&csv_finish(w));
            }
            out
        }
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct FailureJson<'a> {
                check: &'a str,
                params: &'a str,
            }
            #[derive(Serialize)]
            struct TallyJson {
                checked: u64,
                failed: u64,
                suite: &'static str,
            }
            #[derive(Serialize)]
            struct SummaryJson<'a> {
                checked: u64,
                failed: u64,
                failures: Vec<FailureJson<'a>>,
                suites: Vec<TallyJson>,
                wall_time_ms: u128,
            }
            to_json(&SummaryJson {
                checked: summary.checked,
                failed: summary.failed,
                failures: summary
                    .failures
                    .iter()
                    .map(|f| FailureJson {
                        check: f.check,
                        params: &f.params,
                    })
                    .collect(),
                suites: summary
                    .suites
                    .iter()
                    .map(|t| TallyJson {
                        checked: t.checked,
                        failed: t.failed,
                        suite: t.suite.name(),
                    })
                    .collect(),
                wall_time_ms: summary.wall_time_ms,
            })
        }
    }
}

pub fn bench(rows: &[BenchRow], agree: bool, format: OutputFormat) -> String {
    let header = ["strategy", "n", "degree", "reps", "total_ms", "mean_us"];
    let cells: Vec<[String; 6]> = rows
        .iter()
        .map(|r| {
            [
                r.strategy.name().to_string(),
                r.n.to_string(),
                r.degree.to_string(),
                r.reps.to_string(),
                format!("{:.3}", r.total_ms),
                format!("{:.1}", r.total_ms * 1e3 / f64::from(r.reps)),
            ]
        })
        .collect();
    match format {
        OutputFormat::Markdown => {
            let mut out = String::new();
            let _ = writeln!(out, "outputs agree: {agree}\n");
            md_row(&mut out, header);
            md_rule(&mut out, header.len());
            for c in &cells {
                md_row(&mut out, c);
            }
            out
        }
        OutputFormat::Csv => {
            let mut w = csv_writer();
            w.write_record(header).unwrap();
            for c in &cells {
                w.write_record(c).unwrap();
            }
            csv_finish(w)
        }
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct RowJson<'a> {
                degree: String,
                mean_us: f64,
                n: i64,
                reps: u32,
                strategy: &'a str,
                total_ms: f64,
            }
            #[derive(Serialize)]
            struct BenchJson<'a> {
                agree: bool,
                runs: Vec<RowJson<'a>>,
            }
            to_json(&BenchJson {
                agree,
                runs: rows
                    .iter()
                    .map(|r| RowJson {
                        degree: r.degree.to_string(),
                        mean_us: r.total_ms * 1e3 / f64::from(r.reps),
                        n: r.n,
                        reps: r.reps,
                        strategy: r.strategy.name(),
                        total_ms: r.total_ms,
                    })
                    .collect(),
            })
        }
    }
}
