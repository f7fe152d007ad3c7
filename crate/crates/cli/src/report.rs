//! Report shapes. JSON follows `schema/report.schema.json`.

use std::fmt::Write;

use omnisearch::dsl::ParseError;
use omnisearch::search::SearchStats;
use omnisearch::Classification;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Counterexample,
    Found,
    None,
    Classified,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Counterexample => "counterexample",
            Verdict::Found => "found",
            Verdict::None => "none",
            Verdict::Classified => "classified",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ClassificationJson {
    #[serde(rename = "finite")]
    Finite(u64),
    #[serde(rename = "atLeast")]
    AtLeast(u64),
}

impl From<Classification> for ClassificationJson {
    fn from(c: Classification) -> Self {
        match c {
            Classification::Finite(n) => ClassificationJson::Finite(n),
            Classification::AtLeast(f) => ClassificationJson::AtLeast(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub prefix: String,
    pub classification: ClassificationJson,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub predicate_evals: u64,
    pub bit_reads: u64,
}

impl From<SearchStats> for Stats {
    fn from(s: SearchStats) -> Self {
        Stats {
            predicate_evals: s.predicate_evals,
            bit_reads: s.bit_reads,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub query: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// `inhabited` or `empty`; decide-sum only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decision: Option<&'static str>,
    pub stats: Stats,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "query: {}", self.query);
        let _ = writeln!(s, "verdict: {}", self.verdict.as_str());
        if let Some(d) = self.decision {
            let _ = writeln!(s, "decision: {d}");
        }
        if let Some(w) = &self.witness {
            let _ = writeln!(s, "witness: {}", w.prefix);
            let _ = match w.classification {
                ClassificationJson::Finite(n) => writeln!(s, "classification: finite {n}"),
                ClassificationJson::AtLeast(f) => writeln!(s, "classification: at least {f}"),
            };
        }
        let _ = writeln!(
            s,
            "stats: predicate_evals={} bit_reads={}",
            self.stats.predicate_evals, self.stats.bit_reads
        );
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrorDetail {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offset: Option<usize>,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrorReport {
    pub query: String,
    pub error: ErrorDetail,
}

impl ErrorReport {
    pub fn parse(query: String, e: &ParseError) -> Self {
        ErrorReport {
            query,
            error: ErrorDetail {
                kind: "parse",
                offset: Some(e.offset()),
                message: e.to_string(),
            },
        }
    }

    pub fn fuel(query: String) -> Self {
        ErrorReport {
            query,
            error: ErrorDetail {
                kind: "fuel",
                offset: None,
                message: "step budget exhausted".into(),
            },
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("report serializes");
        s.push('\n');
        s
    }
}
