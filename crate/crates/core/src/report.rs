//! Tabular verdicts, one row per checked instance, rendered as CSV or as an
//! aligned plain-text table.

use std::fmt;
use std::time::Duration;

use serde::Serialize;

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Skipped,
    Fail,
    /// The solver hit its time limit before deciding the instance.
    Timeout,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Skipped => "skipped",
            Verdict::Fail => "fail",
            Verdict::Timeout => "timeout",
        })
    }
}

impl From<crate::bounds::Status> for Verdict {
    fn from(s: crate::bounds::Status) -> Self {
        match s {
            crate::bounds::Status::Pass => Verdict::Pass,
            crate::bounds::Status::Fail => Verdict::Fail,
            crate::bounds::Status::Skipped => Verdict::Skipped,
        }
    }
}

/// Verdict on one instance of one theorem.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub params: String,
    pub expected: String,
    pub computed: String,
    pub status: Verdict,
    #[serde(rename = "ms")]
    pub elapsed_ms: u128,
    pub notes: String,
}

impl TheoremReport {
    pub fn new(
        theorem: impl Into<String>,
        params: impl Into<String>,
        expected: impl Into<String>,
        computed: impl Into<String>,
        status: Verdict,
        elapsed: Duration,
    ) -> Self {
        Self {
            theorem: theorem.into(),
            params: params.into(),
            expected: expected.into(),
            computed: computed.into(),
            status,
            elapsed_ms: elapsed.as_millis(),
            notes: String::new(),
        }
    }

    pub fn with_note(mut self, note: impl AsRef<str>) -> Self {
        let note = note.as_ref();
        if !note.is_empty() {
            if !self.notes.is_empty() {
                self.notes.push_str("; ");
            }
            self.notes.push_str(note);
        }
        self
    }
}

/// Worst verdict over the rows: timeout > fail > skipped > pass. An empty
/// table passes.
pub fn overall(rows: &[TheoremReport]) -> Verdict {
    rows.iter()
        .map(|r| r.status)
        .max()
        .map(|v| {
            if v == Verdict::Skipped {
                Verdict::Pass
            } else {
                v
            }
        })
        .unwrap_or(Verdict::Pass)
}

pub fn to_csv(rows: &[TheoremReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    if rows.is_empty() {
        w.write_record([
            "theorem", "params", "expected", "computed", "status", "ms", "notes",
        ])
        .map_err(csv_err)?;
    }
    for r in rows {
        w.serialize(r).map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| csv_err(e.into_error().into()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn csv_err(e: csv::Error) -> crate::error::Error {
    crate::error::Error::Io(std::io::Error::other(e))
}

pub fn to_pretty(rows: &[TheoremReport]) -> String {
    let header = [
        "theorem", "params", "expected", "computed", "status", "ms", "notes",
    ];
    let cells: Vec<[String; 7]> = rows
        .iter()
        .map(|r| {
            [
                r.theorem.clone(),
                r.params.clone(),
                r.expected.clone(),
                r.computed.clone(),
                r.status.to_string(),
                r.elapsed_ms.to_string(),
                r.notes.clone(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |row: &[String]| {
        let mut s = String::new();
        for (i, (c, w)) in row.iter().zip(widths).enumerate() {
            if i + 1 == row.len() {
                s.push_str(c);
            } else {
                s.push_str(&format!("{c:<w$}  "));
            }
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(&header.map(String::from));
    for row in &cells {
        out.push_str(&line(row));
    }
    let counts = [
        Verdict::Pass,
        Verdict::Fail,
        Verdict::Skipped,
        Verdict::Timeout,
    ]
    .map(|v| format!("{v}: {}", rows.iter().filter(|r| r.status == v).count()));
    out.push_str(&format!("-- {} rows; {}\n", rows.len(), counts.join(", ")));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(status: Verdict) -> TheoremReport {
        TheoremReport::new("t", "n=5", "2", "2", status, Duration::from_millis(3))
    }

    #[test]
    fn overall_takes_worst_row() {
        assert_eq!(overall(&[]), Verdict::Pass);
        assert_eq!(
            overall(&[row(Verdict::Pass), row(Verdict::Skipped)]),
            Verdict::Pass
        );
        assert_eq!(
            overall(&[row(Verdict::Fail), row(Verdict::Pass)]),
            Verdict::Fail
        );
        assert_eq!(
            overall(&[row(Verdict::Fail), row(Verdict::Timeout)]),
            Verdict::Timeout
        );
    }

    #[test]
    fn csv_has_header_and_quotes_commas() {
        let r = row(Verdict::Pass).with_note("a, b");
        let out = to_csv(&[r]).unwrap();
        let mut lines = out.lines();
        assert_eq!(
            lines.next(),
            Some("theorem,params,expected,computed,status,ms,notes")
        );
        assert_eq!(lines.next(), Some("t,n=5,2,2,pass,3,\"a, b\""));
        assert!(to_csv(&[]).unwrap().starts_with("theorem,"));
    }

    #[test]
    fn pretty_is_aligned_with_summary() {
        let out = to_pretty(&[row(Verdict::Pass), row(Verdict::Fail)]);
        assert!(out.starts_with("theorem  params"));
        assert!(out.ends_with("-- 2 rows; pass: 1, fail: 1, skipped: 0, timeout: 0\n"));
    }
}
