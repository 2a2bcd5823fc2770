//! Batches of outcomes with run metadata, and their JSON, CSV and table
//! renderings.
//!
//! The JSON form is line oriented: a `{"metadata": ...}` line, one outcome
//! object per line, then a `{"summary": ...}` line. Parsing it back yields
//! the same [`Report`], and re-rendering yields the same bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::checks::{CheckId, CheckOutcome, Params};
use crate::exact::{format_rational, parse_rational};
use crate::grid::GridSpec;
use crate::padic::Valuation;
use crate::sequences::SequenceValue;

/// Output encodings shared by every command.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Table,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub timestamp: String,
    pub tool_version: String,
    pub grid: GridSpec,
    pub jobs: usize,
    #[serde(default)]
    pub warnings: Vec<String>,
}

impl Metadata {
    /// Metadata stamped with the current UTC time and this crate's version.
    pub fn now(grid: GridSpec, jobs: usize, warnings: Vec<String>) -> Self {
        Metadata {
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            grid,
            jobs,
            warnings,
        }
    }
}

/// Tallies over a report's outcomes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    /// Evaluated but below the required valuation.
    pub failed: usize,
    /// Could not be evaluated.
    pub errored: usize,
    /// The subset of `failed` that are conjectural statements.
    pub conjectural_failed: usize,
    /// Every failing conjectural case, as `ID p=.. n=..`.
    pub conjecture_violations: Vec<String>,
    /// Smallest achieved valuation per check among evaluated outcomes.
    pub min_achieved_valuation: BTreeMap<CheckId, Valuation>,
}

impl Summary {
    pub fn of(outcomes: &[CheckOutcome]) -> Self {
        let mut s = Summary {
            total: outcomes.len(),
            passed: 0,
            failed: 0,
            errored: 0,
            conjectural_failed: 0,
            conjecture_violations: Vec::new(),
            min_achieved_valuation: BTreeMap::new(),
        };
        for o in outcomes {
            match o.achieved_valuation {
                None => s.errored += 1,
                Some(v) => {
                    s.min_achieved_valuation
                        .entry(o.check_id)
                        .and_modify(|m| *m = (*m).min(v))
                        .or_insert(v);
                    if o.passed {
                        s.passed += 1;
                    } else {
                        s.failed += 1;
                        if o.is_conjectural() {
                            s.conjectural_failed += 1;
                            s.conjecture_violations.push(format!(
                                "{} {}",
                                o.check_id,
                                o.case().params_text()
                            ));
                        }
                    }
                }
            }
        }
        s
    }

    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub metadata: Metadata,
    pub outcomes: Vec<CheckOutcome>,
    pub summary: Summary,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReportError {
    #[error("line {line}: {reason}")]
    Line { line: usize, reason: String },
    #[error("missing {0} line")]
    Missing(&'static str),
    #[error("summary does not match the outcomes")]
    SummaryMismatch,
}

#[derive(Serialize, Deserialize)]
struct MetadataLine {
    metadata: Metadata,
}

#[derive(Serialize, Deserialize)]
struct SummaryLine {
    summary: Summary,
}

impl Report {
    pub fn new(metadata: Metadata, outcomes: Vec<CheckOutcome>) -> Self {
        let summary = Summary::of(&outcomes);
        Report {
            metadata,
            outcomes,
            summary,
        }
    }

    /// 0 when every outcome passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.summary.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json_lines(),
            Format::Csv => outcomes_csv(&self.outcomes),
            Format::Table => self.to_table(),
        }
    }

    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        let meta = MetadataLine {
            metadata: self.metadata.clone(),
        };
        out.push_str(&serde_json::to_string(&meta).expect("metadata serializes"));
        out.push('\n');
        for o in &self.outcomes {
            out.push_str(&outcome_json(o));
            out.push('\n');
        }
        let summary = SummaryLine {
            summary: self.summary.clone(),
        };
        out.push_str(&serde_json::to_string(&summary).expect("summary serializes"));
        out.push('\n');
        out
    }

    /// Parses [`Report::to_json_lines`] output, checking the summary against
    /// the outcomes.
    pub fn from_json_lines(text: &str) -> Result<Self, ReportError> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| (i + 1, l))
            .collect();
        let bad = |line: usize, e: serde_json::Error| ReportError::Line {
            line,
            reason: e.to_string(),
        };
        let (&(first_no, first), rest) = lines
            .split_first()
            .ok_or(ReportError::Missing("metadata"))?;
        let (&(last_no, last), middle) =
            rest.split_last().ok_or(ReportError::Missing("summary"))?;
        let meta: MetadataLine = serde_json::from_str(first).map_err(|e| bad(first_no, e))?;
        let summary: SummaryLine = serde_json::from_str(last).map_err(|e| bad(last_no, e))?;
        let outcomes = middle
            .iter()
            .map(|&(no, l)| serde_json::from_str::<CheckOutcome>(l).map_err(|e| bad(no, e)))
            .collect::<Result<Vec<_>, _>>()?;
        let report = Report::new(meta.metadata, outcomes);
        if report.summary != summary.summary {
            return Err(ReportError::SummaryMismatch);
        }
        Ok(report)
    }

    fn to_table(&self) -> String {
        let mut out = outcomes_table(&self.outcomes);
        out.push('\n');
        out.push_str(&self.summary_text());
        for w in &self.metadata.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        out
    }

    /// Human-readable summary block, also used alongside CSV output.
    pub fn summary_text(&self) -> String {
        let s = &self.summary;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "total {}: {} passed, {} failed, {} errored",
            s.total, s.passed, s.failed, s.errored
        );
        if s.conjectural_failed > 0 {
            let _ = writeln!(
                out,
                "FLAGGED: {} conjectural failure(s)",
                s.conjectural_failed
            );
            for v in &s.conjecture_violations {
                let _ = writeln!(out, "  conjecture violated: {v}");
            }
        }
        let width = s
            .min_achieved_valuation
            .keys()
            .map(|id| id.name().len())
            .max()
            .unwrap_or(0);
        for (id, v) in &s.min_achieved_valuation {
            let _ = writeln!(out, "  min valuation {:width$}  {v}", id.name());
        }
        out
    }
}

/// The JSON object for one outcome, with fields in the documented order.
pub fn outcome_json(o: &CheckOutcome) -> String {
    serde_json::to_string(o).expect("outcomes serialize")
}

const CSV_HEADER: [&str; 8] = [
    "check_id",
    "params",
    "passed",
    "required_valuation",
    "achieved_valuation",
    "lhs",
    "rhs",
    "note",
];

/// `p=5;n=1`, in the check's canonical parameter order.
fn params_cell(o: &CheckOutcome) -> String {
    o.case().params_text().replace(' ', ";")
}

fn parse_params_cell(s: &str) -> Result<Params, String> {
    let mut out = Params::new();
    for part in s.split(';').filter(|p| !p.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| format!("bad parameter {part:?}"))?;
        let v: i64 = v
            .parse()
            .map_err(|_| format!("bad parameter value {part:?}"))?;
        out.insert(k.to_string(), v);
    }
    Ok(out)
}

pub fn outcomes_csv(outcomes: &[CheckOutcome]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for o in outcomes {
        let opt = |x: &Option<_>| x.as_ref().map(format_rational).unwrap_or_default();
        w.write_record([
            o.check_id.name().to_string(),
            params_cell(o),
            o.passed.to_string(),
            o.required_valuation.to_string(),
            o.achieved_valuation
                .map(|v| v.to_string())
                .unwrap_or_default(),
            opt(&o.lhs),
            opt(&o.rhs),
            o.note.clone(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

/// Parses [`outcomes_csv`] output.
pub fn parse_outcomes_csv(text: &str) -> Result<Vec<CheckOutcome>, ReportError> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header = r.headers().map_err(|e| ReportError::Line {
        line: 1,
        reason: e.to_string(),
    })?;
    if header.iter().ne(CSV_HEADER) {
        return Err(ReportError::Line {
            line: 1,
            reason: "unexpected header".into(),
        });
    }
    let mut out = Vec::new();
    for (i, rec) in r.records().enumerate() {
        let line = i + 2;
        let bad = |reason: String| ReportError::Line { line, reason };
        let rec = rec.map_err(|e| bad(e.to_string()))?;
        let opt_rat = |s: &str| {
            if s.is_empty() {
                Ok(None)
            } else {
                parse_rational(s).map(Some)
            }
        };
        let check_id: CheckId = rec[0]
            .parse()
            .map_err(|e: crate::checks::CheckError| bad(e.to_string()))?;
        out.push(CheckOutcome {
            check_id,
            params: parse_params_cell(&rec[1]).map_err(bad)?,
            passed: rec[2]
                .parse()
                .map_err(|_| bad(format!("bad passed {:?}", &rec[2])))?,
            required_valuation: rec[3]
                .parse()
                .map_err(|_| bad(format!("bad valuation {:?}", &rec[3])))?,
            achieved_valuation: match &rec[4] {
                "" => None,
                s => Some(s.parse().map_err(|_| bad(format!("bad valuation {s:?}")))?),
            },
            lhs: opt_rat(&rec[5]).map_err(bad)?,
            rhs: opt_rat(&rec[6]).map_err(bad)?,
            note: rec[7].to_string(),
        });
    }
    Ok(out)
}

fn status(o: &CheckOutcome) -> &'static str {
    match (o.is_error(), o.passed) {
        (true, _) => "ERROR",
        (false, true) => "pass",
        (false, false) if o.is_conjectural() => "FAIL*",
        (false, false) => "FAIL",
    }
}

/// One row per outcome; the exact witnesses are left to JSON and CSV.
pub fn outcomes_table(outcomes: &[CheckOutcome]) -> String {
    let rows: Vec<[String; 6]> = outcomes
        .iter()
        .map(|o| {
            [
                o.check_id.name().to_string(),
                o.case().params_text(),
                status(o).to_string(),
                o.required_valuation.to_string(),
                o.achieved_valuation
                    .map(|v| v.to_string())
                    .unwrap_or_else(|| "-".into()),
                o.note.clone(),
            ]
        })
        .collect();
    let header = ["CHECK", "PARAMS", "STATUS", "REQ", "ACH", "NOTE"].map(String::from);
    table(&header, &rows)
}

/// Every field of a single outcome, witnesses included.
pub fn outcome_detail(o: &CheckOutcome) -> String {
    let mut out = String::new();
    let opt = |x: &Option<_>| {
        x.as_ref()
            .map(format_rational)
            .unwrap_or_else(|| "-".into())
    };
    let _ = writeln!(out, "check     {}", o.check_id);
    let _ = writeln!(out, "statement {}", o.check_id.description());
    let _ = writeln!(out, "params    {}", o.case().params_text());
    let _ = writeln!(out, "status    {}", status(o));
    let _ = writeln!(out, "required  {}", o.required_valuation);
    let _ = writeln!(
        out,
        "achieved  {}",
        o.achieved_valuation
            .map(|v| v.to_string())
            .unwrap_or_else(|| "-".into())
    );
    let _ = writeln!(out, "lhs       {}", opt(&o.lhs));
    let _ = writeln!(out, "rhs       {}", opt(&o.rhs));
    if !o.note.is_empty() {
        let _ = writeln!(out, "note      {}", o.note);
    }
    out
}

/// A single outcome in the requested format.
pub fn render_outcome(o: &CheckOutcome, format: Format) -> String {
    match format {
        Format::Json => outcome_json(o) + "\n",
        Format::Csv => outcomes_csv(std::slice::from_ref(o)),
        Format::Table => outcome_detail(o),
    }
}

/// A sequence value as emitted by `seq`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceRow {
    pub family: String,
    pub index: u64,
    pub n: u64,
    pub value: String,
}

impl From<&SequenceValue> for SequenceRow {
    fn from(v: &SequenceValue) -> Self {
        let value = if v.value.is_integer() {
            v.value.numer().to_string()
        } else {
            format_rational(&v.value)
        };
        SequenceRow {
            family: v.family.name().to_string(),
            index: v.index,
            n: v.n,
            value,
        }
    }
}

pub fn render_sequence(values: &[SequenceValue], format: Format) -> String {
    let rows: Vec<SequenceRow> = values.iter().map(SequenceRow::from).collect();
    match format {
        Format::Json => rows
            .iter()
            .map(|r| serde_json::to_string(r).expect("rows serialize") + "\n")
            .collect(),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in &rows {
                w.serialize(r).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush"))
                .expect("csv output is utf-8")
        }
        Format::Table => {
            let body: Vec<[String; 4]> = rows
                .into_iter()
                .map(|r| [r.family, r.index.to_string(), r.n.to_string(), r.value])
                .collect();
            table(&["FAMILY", "INDEX", "N", "VALUE"].map(String::from), &body)
        }
    }
}

fn table<const W: usize>(header: &[String; W], rows: &[[String; W]]) -> String {
    let mut widths: [usize; W] = std::array::from_fn(|i| header[i].chars().count());
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(header).chain(rows) {
        let mut line = String::new();
        for (i, (cell, w)) in row.iter().zip(widths).enumerate() {
            if i + 1 == W {
                line.push_str(cell);
            } else {
                let pad = w - cell.chars().count();
                let _ = write!(line, "{cell}{}  ", " ".repeat(pad));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
