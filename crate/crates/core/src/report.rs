use serde::Serialize;

use crate::error::Result;
use crate::exactlin::{LinMap, Scalar, TensorIndex};

/// One failed law instance, with enough data to replay it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: String,
    pub index: Vec<usize>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

/// Outcome of an axiom sweep. `passed` holds exactly when `violations` is
/// empty. Violations appear grouped by law, in check order, and within a law
/// by basis multi-index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
    /// Checks that could not be carried out, with the reason.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Default for AxiomReport {
    fn default() -> Self {
        AxiomReport::new()
    }
}

impl AxiomReport {
    pub fn new() -> AxiomReport {
        AxiomReport {
            passed: true,
            violations: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
        self.passed = false;
    }

    /// Records a failure that is not tied to a basis element.
    pub fn fail(&mut self, axiom: impl Into<String>) {
        self.push(Violation {
            axiom: axiom.into(),
            index: Vec::new(),
            lhs: Vec::new(),
            rhs: Vec::new(),
        });
    }

    pub fn require(&mut self, axiom: impl Into<String>, ok: bool) {
        if !ok {
            self.fail(axiom);
        }
    }

    /// Compares two maps on a tensor-product domain with factor dimensions
    /// `dims`, recording each basis element where they differ.
    pub fn compare(
        &mut self,
        axiom: &str,
        dims: &[usize],
        lhs: &LinMap,
        rhs: &LinMap,
    ) -> Result<bool> {
        let idx = TensorIndex::new(dims);
        let bad = lhs.differing_columns(rhs)?;
        for &c in &bad {
            self.push(Violation {
                axiom: axiom.to_string(),
                index: idx.unflatten(c),
                lhs: lhs.column(c),
                rhs: rhs.column(c),
            });
        }
        Ok(bad.is_empty())
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn merge(&mut self, other: AxiomReport) {
        for v in other.violations {
            self.push(v);
        }
        self.notes.extend(other.notes);
    }

    /// Merges `other`, prefixing each law name with `scope`.
    pub fn merge_scoped(&mut self, scope: &str, other: AxiomReport) {
        for mut v in other.violations {
            v.axiom = format!("{scope}: {}", v.axiom);
            self.push(v);
        }
        self.notes
            .extend(other.notes.into_iter().map(|n| format!("{scope}: {n}")));
    }

    /// One line naming each violated law with its violation count.
    pub fn summary(&self) -> String {
        self.axioms()
            .iter()
            .map(|a| {
                let k = self.violations.iter().filter(|v| v.axiom == *a).count();
                format!("{a} ({k})")
            })
            .collect::<Vec<_>>()
            .join("; ")
    }

    pub fn axioms(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for v in &self.violations {
            if !out.contains(&v.axiom.as_str()) {
                out.push(&v.axiom);
            }
        }
        out
    }

    pub fn mentions(&self, needle: &str) -> bool {
        self.violations.iter().any(|v| v.axiom.contains(needle))
    }
}
