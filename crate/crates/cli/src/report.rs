use std::collections::BTreeMap;

use ainf_core::bar::TruncationPolicy;
use ainf_core::f2::{ChainComplex, DegreeRange};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, status: Status, detail: Option<String>) -> Self {
        Check {
            name: name.into(),
            status,
            detail,
        }
    }

    pub fn from_result(name: impl Into<String>, r: Result<String, String>) -> Self {
        match r {
            Ok(d) => Check::new(name, Status::Pass, Some(d).filter(|d| !d.is_empty())),
            Err(d) => Check::new(name, Status::Fail, Some(d)),
        }
    }
}

/// Trusted degrees; `null` ends are unbounded.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Range {
    pub lo: Option<i64>,
    pub hi: Option<i64>,
}

impl Range {
    /// `None` for an empty range.
    pub fn of(r: DegreeRange) -> Option<Range> {
        if r.is_empty() {
            return None;
        }
        Some(Range {
            lo: (r.lo != i64::MIN).then_some(r.lo),
            hi: (r.hi != i64::MAX).then_some(r.hi),
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub degree: i64,
    pub dimension: usize,
    pub trusted: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub policy: Option<TruncationPolicy>,
    /// Present for homology reports; `null` when no degree is trusted.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trusted_range: Option<Option<Range>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<Vec<Row>>,
    #[serde(flatten)]
    pub extra: BTreeMap<String, serde_json::Value>,
    pub checks: Vec<Check>,
    pub passed: bool,
    /// Rows for `--format csv`; the Betti table unless a command sets its own.
    #[serde(skip)]
    pub table: Option<(Vec<&'static str>, Vec<Vec<String>>)>,
}

impl Report {
    pub fn new(command: String) -> Self {
        Report {
            command,
            input: None,
            policy: None,
            trusted_range: None,
            betti: None,
            extra: BTreeMap::new(),
            checks: Vec::new(),
            passed: true,
            table: None,
        }
    }

    pub fn check(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extra(&mut self, key: &str, v: impl Serialize) {
        self.extra
            .insert(key.to_string(), serde_json::to_value(v).expect("report values serialize"));
    }

    pub fn finish(mut self) -> Self {
        self.passed = self.checks.iter().all(|c| c.status != Status::Fail);
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let (header, rows) = match &self.table {
            Some((h, r)) => (h.clone(), r.clone()),
            None => (
                vec!["degree", "dimension", "trusted"],
                self.betti
                    .iter()
                    .flatten()
                    .map(|r| vec![r.degree.to_string(), r.dimension.to_string(), r.trusted.to_string()])
                    .collect(),
            ),
        };
        let mut s = header.join(",");
        s.push('\n');
        for r in rows {
            s.push_str(&r.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(","));
            s.push('\n');
        }
        s
    }
}

fn csv_field(f: &str) -> String {
    if f.contains([',', '"', '\n']) {
        format!("\"{}\"", f.replace('"', "\"\""))
    } else {
        f.to_string()
    }
}

/// Homology on `degrees`, or on every stored trusted degree.
///
/// Degrees outside the stored part of a trusted range hold no chains, so
/// their homology is zero.
pub fn betti_rows(c: &ChainComplex, degrees: Option<DegreeRange>, check_d2: bool) -> (Vec<Row>, Check) {
    let range = degrees.unwrap_or_else(|| c.trusted_stored());
    let d2 = if !check_d2 {
        Check::new("d2", Status::Skipped, None)
    } else {
        let t = c.trusted_stored();
        let bad = c.d2_failures(DegreeRange::new(t.lo.saturating_add(1), t.hi));
        if bad.is_empty() {
            Check::new("d2", Status::Pass, None)
        } else {
            Check::new("d2", Status::Fail, Some(format!("boundary squares to nonzero at degrees {bad:?}")))
        }
    };
    let h = c.homology_dims_unchecked(range);
    let rows = range
        .iter()
        .map(|d| Row {
            degree: d,
            dimension: h.get(&d).copied().unwrap_or(0),
            trusted: c.trusted_range().contains(d),
        })
        .collect();
    (rows, d2)
}
