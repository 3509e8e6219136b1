//! State files in, reports out.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classify::{classify, consistency_check, ClassificationResult, ConsistencyReport, CutSemantics};
use crate::error::{Error, Result};
use crate::links::standard_models;
use crate::profile::{build_profile, SplittingEntry};
use crate::state::{qubit_label, PureState, StateDocument};

/// Full analysis of one state. JSON keys follow field order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub state_label: String,
    pub profile: Vec<SplittingEntry>,
    /// Present for three-qubit states only.
    pub classification: Option<ClassificationResult>,
    pub tool_version: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub consistency: Vec<ConsistencyReport>,
}

impl ReportDocument {
    /// Profiles `state` and, for three qubits, classifies it and checks it
    /// against every standard link model under `semantics`.
    pub fn analyze(state: &PureState, label: &str, semantics: CutSemantics) -> Result<Self> {
        let profile = build_profile(state, label)?;
        let (classification, consistency) = if profile.num_qubits == 3 {
            let identity = [0, 1, 2];
            let checks = standard_models()
                .iter()
                .map(|m| consistency_check(&profile, m, &identity, semantics))
                .collect::<Result<Vec<_>>>()?;
            (Some(classify(&profile)?), checks)
        } else {
            (None, Vec::new())
        };
        Ok(Self {
            state_label: profile.state_label,
            profile: profile.entries,
            classification,
            tool_version: crate::TOOL_VERSION.to_owned(),
            consistency,
        })
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    #[default]
    Table,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "table" => Ok(ReportFormat::Table),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(format!("unknown format {other:?} (expected json, table or csv)")),
        }
    }
}

/// Parses a state document from text.
pub fn parse_state(text: &str) -> Result<PureState> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let doc: StateDocument = serde_json::from_value(value).map_err(|e| Error::Schema(e.to_string()))?;
    let expected = 1usize.checked_shl(doc.num_qubits as u32).unwrap_or(0);
    if doc.num_qubits == 0 || doc.num_qubits > crate::state::MAX_QUBITS {
        return Err(Error::Schema(format!("num_qubits {} outside 1..=10", doc.num_qubits)));
    }
    if doc.amplitudes.len() != expected {
        return Err(Error::Schema(format!(
            "{} amplitudes given, num_qubits = {} needs {expected}",
            doc.amplitudes.len(),
            doc.num_qubits
        )));
    }
    PureState::try_from(doc).map_err(|e| match e {
        Error::NonFinite { .. } => Error::Schema(e.to_string()),
        other => other,
    })
}

pub fn read_state_file(path: impl AsRef<Path>) -> Result<PureState> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_state(&text)
}

pub fn parse_report(text: &str) -> Result<ReportDocument> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Probability text for json-free formats: at most 15 significant digits.
fn format_probability(p: f64) -> String {
    let rounded: f64 = format!("{p:.14e}").parse().unwrap_or(p);
    rounded.to_string()
}

pub fn render_report(doc: &ReportDocument, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(doc).expect("report serializes");
            s.push('\n');
            s
        }
        ReportFormat::Csv => render_csv(doc),
        ReportFormat::Table => render_table(doc),
    }
}

fn render_csv(doc: &ReportDocument) -> String {
    let mut out = String::from("qubit,outcome,probability,rank\n");
    for e in &doc.profile {
        let rank = e.rank.map(|r| r.to_string()).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{rank}",
            qubit_label(e.qubit),
            e.outcome,
            format_probability(e.probability)
        );
    }
    out
}

fn render_table(doc: &ReportDocument) -> String {
    const HEADER: [&str; 5] = [
        "Qubit Measured",
        "Outcome",
        "Probability",
        "Post-Measurement State",
        "Schmidt Rank",
    ];
    let rows: Vec<[String; 5]> = doc
        .profile
        .iter()
        .map(|e| {
            [
                qubit_label(e.qubit).to_string(),
                format!("|{}>", e.outcome),
                format!("{:.4}", e.probability),
                e.post_state
                    .as_ref()
                    .map_or_else(|| "-".to_owned(), |s| s.to_ket_string(6)),
                e.rank.map_or_else(|| "-".to_owned(), |r| r.to_string()),
            ]
        })
        .collect();
    let mut widths = HEADER.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[&str]| -> String {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join(" | ").trim_end().to_owned()
    };

    let mut out = format!("state: {}\n", doc.state_label);
    out.push_str(&line(&HEADER));
    out.push('\n');
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    out.push_str(&rule.join("-+-"));
    out.push('\n');
    for row in &rows {
        let cells: Vec<&str> = row.iter().map(String::as_str).collect();
        out.push_str(&line(&cells));
        out.push('\n');
    }

    match &doc.classification {
        None => out.push_str("analogue: n/a (classification needs 3 qubits)\n"),
        Some(c) => {
            let _ = writeln!(out, "analogue: {}", c.primary_analogue);
            if let Some(center) = c.center {
                let _ = writeln!(out, "center: {}", qubit_label(center));
            }
            if !c.borromean_outcomes.is_empty() {
                let list: Vec<String> = c
                    .borromean_outcomes
                    .iter()
                    .map(|&(q, o)| format!("{}|{o}>", qubit_label(q)))
                    .collect();
                let _ = writeln!(out, "borromean outcomes: {}", list.join(", "));
            }
            if !doc.consistency.is_empty() {
                let _ = writeln!(out, "consistency ({}):", doc.consistency[0].semantics);
                for r in &doc.consistency {
                    let detail = if r.consistent {
                        "consistent".to_owned()
                    } else {
                        let cuts: Vec<String> = r.mismatches.iter().map(|m| qubit_label(m.qubit).to_string()).collect();
                        format!("mismatch at cut {}", cuts.join(", "))
                    };
                    let _ = writeln!(out, "  {}: {detail}", r.model);
                }
            }
            out.push_str("notes:\n");
            for note in &c.notes {
                let _ = writeln!(out, "  {note}");
            }
        }
    }
    let _ = writeln!(out, "tool version: {}", doc.tool_version);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::Analogue;
    use crate::state::{fidelity, CanonicalState};

    fn report(s: CanonicalState) -> ReportDocument {
        ReportDocument::analyze(&s.construct(), s.name(), CutSemantics::Possibilistic).unwrap()
    }

    #[test]
    fn parse_state_documents() {
        let bell = parse_state(r#"{"num_qubits": 2, "amplitudes": [[1,0],[0,0],[0,0],[1,0]]}"#).unwrap();
        assert!((fidelity(&bell, &CanonicalState::BellPhiPlus.construct()).unwrap() - 1.0).abs() < 1e-12);

        let star = parse_state(
            r#"{"num_qubits": 3, "amplitudes": [[0.5,0],[0,0],[0,0],[0,0],[0.5,0],[0.5,0],[0,0],[0.5,0]]}"#,
        )
        .unwrap();
        assert!((fidelity(&star, &CanonicalState::Star.construct()).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn parse_state_errors() {
        let short = parse_state(r#"{"num_qubits": 2, "amplitudes": [[1,0],[0,0],[0,0]]}"#);
        assert!(matches!(short, Err(Error::Schema(_))), "{short:?}");
        assert!(matches!(
            parse_state(r#"{"amplitudes": [[1,0],[0,0]]}"#),
            Err(Error::Schema(_))
        ));
        assert!(matches!(
            parse_state(r#"{"num_qubits": 1, "amplitudes": [1, 0]}"#),
            Err(Error::Schema(_))
        ));
        assert!(matches!(parse_state("{not json"), Err(Error::Parse(_))));
        assert!(matches!(
            parse_state(r#"{"num_qubits": 64, "amplitudes": []}"#),
            Err(Error::Schema(_))
        ));
        assert_eq!(
            parse_state(r#"{"num_qubits": 1, "amplitudes": [[0,0],[0,0]]}"#).unwrap_err(),
            Error::ZeroVector
        );
    }

    #[test]
    fn missing_file_names_path() {
        let err = read_state_file("/definitely/not/here.json").unwrap_err();
        assert!(matches!(&err, Error::Io { path, .. } if path == "/definitely/not/here.json"));
        assert!(err.to_string().contains("/definitely/not/here.json"));
    }

    #[test]
    fn wwbar_table() {
        let text = render_report(&report(CanonicalState::WWBar), ReportFormat::Table);
        let rows: Vec<&str> = text.lines().filter(|l| l.contains("| |")).collect();
        assert_eq!(rows.len(), 6);
        for r in &rows {
            let cells: Vec<&str> = r.split(" | ").map(str::trim).collect();
            assert_eq!(cells[2], "0.5000", "{r}");
            assert_eq!(cells[4], "2", "{r}");
        }
        assert!(text.contains("analogue: HOPF3"));
        assert!(text
            .lines()
            .nth(1)
            .unwrap()
            .starts_with("Qubit Measured | Outcome | Probability"));
    }

    #[test]
    fn star_csv() {
        let text = render_report(&report(CanonicalState::Star), ReportFormat::Csv);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "qubit,outcome,probability,rank");
        assert!(lines.contains(&"A,1,0.75,2"), "{text}");
        assert!(lines.contains(&"C,0,0.5,1"), "{text}");
        assert_eq!(lines.len(), 7);
    }

    #[test]
    fn csv_leaves_null_ranks_blank() {
        let doc =
            ReportDocument::analyze(&PureState::basis(3, 0).unwrap(), "zero", CutSemantics::Possibilistic).unwrap();
        let text = render_report(&doc, ReportFormat::Csv);
        assert!(text.lines().any(|l| l == "A,1,0,"));
    }

    #[test]
    fn json_round_trip_and_keys() {
        let doc = report(CanonicalState::Star);
        let text = render_report(&doc, ReportFormat::Json);
        assert_eq!(parse_report(&text).unwrap(), doc);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        let class = &value["classification"];
        assert_eq!(class["primary_analogue"], "CHAIN3");
        assert_eq!(class["center"], "C");
        assert_eq!(class["borromean_outcomes"], serde_json::json!([["A", 0], ["B", 1]]));
        for key in ["state_label", "profile", "classification", "tool_version"] {
            assert!(value.get(key).is_some(), "{key}");
        }
        let first = text.find("\"state_label\"").unwrap();
        let last = text.find("\"tool_version\"").unwrap();
        assert!(first < text.find("\"profile\"").unwrap() && last > text.find("\"classification\"").unwrap());
    }

    #[test]
    fn empty_notes_round_trip() {
        let mut doc = report(CanonicalState::Ghz);
        doc.classification.as_mut().unwrap().notes.clear();
        doc.consistency.clear();
        let text = render_report(&doc, ReportFormat::Json);
        assert_eq!(parse_report(&text).unwrap(), doc);
        assert_eq!(doc.classification.unwrap().primary_analogue, Analogue::Borromean);
    }

    #[test]
    fn non_three_qubit_reports() {
        let doc = report(CanonicalState::Dicke42);
        assert!(doc.classification.is_none());
        assert_eq!(doc.profile.len(), 8);
        assert!(render_report(&doc, ReportFormat::Table).contains("analogue: n/a"));
    }

    #[test]
    fn probability_formatting() {
        assert_eq!(format_probability(0.75), "0.75");
        assert_eq!(format_probability(0.5000000000000001), "0.5");
        assert_eq!(format_probability(1.0 / 3.0), "0.333333333333333");
        assert_eq!(format_probability(0.0), "0");
    }
}
