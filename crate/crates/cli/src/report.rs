use std::collections::BTreeMap;
use std::fmt::Write as _;

use hha_core::{AxiomReport, Error, Violation};
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct InputHash {
    pub name: String,
    pub sha256: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub elapsed_ms: u128,
}

/// The machine-readable outcome of one command. `verdict` is `pass`
/// exactly when `violations` is empty.
#[derive(Clone, Debug, Serialize)]
pub struct ReportFile {
    pub command: String,
    pub inputs: Vec<InputHash>,
    pub verdict: Verdict,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub dimensions: BTreeMap<String, usize>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub findings: BTreeMap<String, Value>,
    pub timing: Timing,
}

/// Exit code for a library error: 1 when a mathematical check failed,
/// 2 for malformed input or a violated hypothesis.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ClosureFailure(_)
        | Error::BimoduleCheckFailure(_)
        | Error::BicomoduleCheckFailure(_)
        | Error::CoactionInterchangeFailure(_)
        | Error::CrossingCheckFailure(_)
        | Error::YDCheckFailure(_)
        | Error::FourAngleCheckFailure(_)
        | Error::DoubleModuleCheckFailure(_)
        | Error::IsomorphismFailure(_) => 1,
        _ => 2,
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl ReportFile {
    pub fn new(command: &str, inputs: Vec<InputHash>) -> ReportFile {
        ReportFile {
            command: command.into(),
            inputs,
            verdict: Verdict::Pass,
            violations: Vec::new(),
            notes: Vec::new(),
            dimensions: BTreeMap::new(),
            findings: BTreeMap::new(),
            timing: Timing { elapsed_ms: 0 },
        }
    }

    pub fn absorb(&mut self, rep: AxiomReport) {
        self.violations.extend(rep.violations);
        self.notes.extend(rep.notes);
        self.settle();
    }

    pub fn require(&mut self, law: &str, ok: bool) {
        let mut rep = AxiomReport::new();
        rep.require(law, ok);
        self.absorb(rep);
    }

    pub fn dim(&mut self, name: &str, d: usize) {
        self.dimensions.insert(name.into(), d);
    }

    pub fn finding(&mut self, name: &str, v: impl Serialize) {
        let v = serde_json::to_value(v).expect("findings serialize");
        self.findings.insert(name.into(), v);
    }

    /// Records a library error as a single violation.
    pub fn error(&mut self, e: &Error) -> u8 {
        let mut rep = AxiomReport::new();
        rep.fail(e.to_string());
        self.absorb(rep);
        let code = exit_code(e);
        if code == 2 {
            self.verdict = Verdict::Error;
        }
        code
    }

    fn settle(&mut self) {
        if !self.violations.is_empty() && self.verdict == Verdict::Pass {
            self.verdict = Verdict::Fail;
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self.verdict {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Error => 2,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let verdict = match self.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Error => "error",
        };
        let _ = writeln!(s, "{}: {verdict}", self.command);
        for i in &self.inputs {
            let _ = writeln!(s, "  input {} sha256 {}", i.name, i.sha256);
        }
        for (k, d) in &self.dimensions {
            let _ = writeln!(s, "  dim {k} = {d}");
        }
        for (k, v) in &self.findings {
            let _ = writeln!(s, "  {k} = {v}");
        }
        for v in &self.violations {
            if v.index.is_empty() {
                let _ = writeln!(s, "  violated: {}", v.axiom);
            } else {
                let show = |xs: &[hha_core::exactlin::Scalar]| {
                    xs.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                let _ = writeln!(
                    s,
                    "  violated: {} at {:?}: lhs [{}] rhs [{}]",
                    v.axiom,
                    v.index,
                    show(&v.lhs),
                    show(&v.rhs)
                );
            }
        }
        for n in &self.notes {
            let _ = writeln!(s, "  note: {n}");
        }
        let _ = writeln!(s, "  elapsed {} ms", self.timing.elapsed_ms);
        s
    }
}
