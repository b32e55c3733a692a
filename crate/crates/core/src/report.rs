use serde::{Deserialize, Serialize};

/// Result of checking one axiom: its name, whether it held, and if it did not,
/// a human-readable witness (basis indices or labels where it first broke).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl AxiomCheck {
    pub fn pass(axiom: &str) -> Self {
        AxiomCheck {
            axiom: axiom.to_string(),
            passed: true,
            witness: None,
        }
    }

    pub fn fail(axiom: &str, witness: impl Into<String>) -> Self {
        AxiomCheck {
            axiom: axiom.to_string(),
            passed: false,
            witness: Some(witness.into()),
        }
    }
}

/// Structured outcome of a verifier. Never collapse this to a bare boolean at
/// an API boundary: callers deserve to know which axiom failed and where.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub checks: Vec<AxiomCheck>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport { checks: Vec::new() }
    }

    pub fn push(&mut self, check: AxiomCheck) {
        self.checks.push(check);
    }

    pub fn record(&mut self, axiom: &str, ok: bool, witness: impl FnOnce() -> String) {
        if ok {
            self.checks.push(AxiomCheck::pass(axiom));
        } else {
            self.checks.push(AxiomCheck::fail(axiom, witness()));
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// First failing axiom name, if any.
    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl Default for CheckReport {
    fn default() -> Self {
        Self::new()
    }
}

impl std::fmt::Display for CheckReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for check in &self.checks {
            if check.passed {
                writeln!(f, "ok   {}", check.axiom)?;
            } else {
                writeln!(
                    f,
                    "FAIL {} ({})",
                    check.axiom,
                    check.witness.as_deref().unwrap_or("no witness")
                )?;
            }
        }
        Ok(())
    }
}
