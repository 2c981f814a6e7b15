//! JSON and CSV output for classification reports and sequence tables.
//!
//! JSON objects are emitted with sorted keys so output is byte-stable.

use serde_json::{json, Value};

use crate::wilf::ClassificationReport;

/// One output row: a pattern label and its counts from `n = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceRow {
    pub pattern: String,
    pub counts: Vec<u64>,
}

pub fn classification_value(report: &ClassificationReport) -> Value {
    let classes: Vec<Value> = report
        .wilf_classes
        .iter()
        .map(|c| {
            json!({
                "representative": c.representative().text(),
                "members": c.members.iter().map(|m| m.text()).collect::<Vec<_>>(),
                "counts": c.sequence.counts,
            })
        })
        .collect();
    json!({
        "k": report.k,
        "set": report.set,
        "mode": report.mode,
        "n_max": report.n_max,
        "symmetry_class_count": report.symmetry_class_count,
        "wilf_class_count": report.wilf_classes.len(),
        "caveat": if report.caveat {
            "classes are distinct up to n_max; equal sequences are not a proof of equivalence"
        } else {
            ""
        },
        "classes": classes,
    })
}

pub fn classification_json(report: &ClassificationReport) -> String {
    to_json(&classification_value(report))
}

pub fn to_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values serialize");
    s.push('\n');
    s
}

/// One row per symmetry-class representative, grouped by Wilf class.
pub fn classification_rows(report: &ClassificationReport) -> Vec<SequenceRow> {
    report
        .wilf_classes
        .iter()
        .flat_map(|c| {
            c.members.iter().map(move |m| SequenceRow { pattern: m.text(), counts: c.sequence.counts.clone() })
        })
        .collect()
}

pub fn classification_csv(report: &ClassificationReport) -> String {
    sequences_csv(&classification_rows(report), report.n_max)
}

/// Header `pattern,n0,n1,...` then one row per pattern.
pub fn sequences_csv(rows: &[SequenceRow], n_max: usize) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["pattern".to_string()];
    header.extend((0..=n_max).map(|n| format!("n{n}")));
    w.write_record(&header).expect("in-memory write");
    for row in rows {
        let mut rec = vec![row.pattern.clone()];
        rec.extend(row.counts.iter().map(u64::to_string));
        w.write_record(&rec).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}
