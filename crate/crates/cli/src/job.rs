//! Job description and the report a job produces.

use std::path::PathBuf;

use hopfcyc::homology::Model;
use hopfcyc::Report;
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum ModelChoice {
    Bicomplex,
    Mixed,
    Both,
}

impl ModelChoice {
    pub fn models(self) -> Vec<Model> {
        match self {
            ModelChoice::Bicomplex => vec![Model::Bicomplex],
            ModelChoice::Mixed => vec![Model::Mixed],
            ModelChoice::Both => vec![Model::Bicomplex, Model::Mixed],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Control {
    CorruptedAntipode,
    CorruptedB,
    DroppedFactor,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum XiChoice {
    Printed,
    Shifted,
}

#[derive(Clone, Debug, Serialize)]
pub struct JobSpec {
    pub command: String,
    pub inputs: Vec<PathBuf>,
    pub coefficients: Option<PathBuf>,
    pub controls: Vec<Control>,
    pub xi_form: XiChoice,
    pub field: String,
    pub degree: usize,
    pub buffer: usize,
    /// Compare `J` at buffers `buffer` and `buffer + 1`.
    pub certify: bool,
    pub model: ModelChoice,
    #[serde(skip)]
    pub parallel: bool,
    #[serde(skip)]
    pub output: Option<PathBuf>,
}

/// One titled block of a report.
#[derive(Clone, Debug, Serialize)]
pub struct Section {
    pub name: String,
    pub report: Report,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub data: Value,
    #[serde(skip)]
    pub text: Vec<String>,
}

impl Section {
    pub fn new(name: impl Into<String>) -> Self {
        Section { name: name.into(), report: Report::new(), data: Value::Null, text: Vec::new() }
    }

    pub fn with_report(name: impl Into<String>, report: Report) -> Self {
        Section { report, ..Section::new(name) }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub job: JobSpec,
    pub sections: Vec<Section>,
    pub ok: bool,
}

impl Outcome {
    pub fn new(job: JobSpec, sections: Vec<Section>) -> Self {
        let ok = sections.iter().all(|s| s.report.is_empty());
        Outcome { job, sections, ok }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for s in &self.sections {
            let status = if s.report.is_empty() { "ok" } else { "FAILED" };
            out.push_str(&format!("== {} [{status}]\n", s.name));
            for l in &s.text {
                out.push_str(&format!("   {l}\n"));
            }
            for f in &s.report.failures {
                out.push_str(&format!("   failed identity: {} ({})\n", f.identity, f.location));
            }
        }
        let n = self.sections.iter().filter(|s| !s.report.is_empty()).count();
        out.push_str(&format!("{} sections, {} failed\n", self.sections.len(), n));
        out
    }
}

/// Right-aligned columns under a header row.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> Vec<String> {
    let mut w: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (k, c) in r.iter().enumerate() {
            w[k] = w[k].max(c.len());
        }
    }
    let fmt = |cells: Vec<String>| cells.iter().enumerate().map(|(k, c)| format!("{c:>width$}", width = w[k])).collect::<Vec<_>>().join("  ");
    let mut out = vec![fmt(header.iter().map(|h| h.to_string()).collect())];
    out.extend(rows.iter().map(|r| fmt(r.clone())));
    out
}
