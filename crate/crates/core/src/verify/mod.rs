//! Exact certification of Post-Lie and Post-Hopf identities.
//!
//! Every check evaluates a residual with exact arithmetic; a check passes
//! only when all of its residuals are zero.

mod convolution;
mod finite;
mod fixtures;
mod hopf;
mod matrix;
mod primitives;
mod selftest;

pub use convolution::{convolution_inverse, convolution_inverse_with_limit, ConvolutionInverse, GradedEndo, CONVOLUTION_MAX_BUDGET};
pub use finite::{check_left_postlie, check_right_postlie, opposite, ConstantEntry, ConstantsFile, FinPostLie};
pub use fixtures::{left_graft_fixture, trivial_fixture, truncated_tree_fixture, truncated_word_fixture};
pub use hopf::{hopf_relation_suite, hopf_suite_on, Engine, FaultyStar};
pub use matrix::Matrix;
pub use primitives::{
    decorated_tree_counts, pbw_dims, primitive_kernel, primitive_kernel_of, symmetrization_check, PbwSeries, PrimitiveKernel,
    PRIMITIVE_MAX_DEGREE,
};

pub use selftest::{selftest, SELFTEST_MAX_BUDGET};

use std::fmt;

use serde::Serialize;

use crate::linear::{LinComb, SerialTerm};

/// A failing case: the inputs and the nonzero residual.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub inputs: Vec<String>,
    pub residual: Vec<SerialTerm>,
}

impl Witness {
    pub fn new<B: Ord + Clone + fmt::Display>(inputs: Vec<String>, residual: &LinComb<B>) -> Witness {
        Witness {
            inputs,
            residual: residual.to_serial(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The outcome of one identity over all of its cases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub status: Status,
    pub cases: usize,
    /// First failing case in enumeration order.
    pub witness: Option<Witness>,
}

impl AxiomCheck {
    /// Builds a check from per-case results in enumeration order.
    pub fn from_cases(axiom: &str, results: Vec<Option<Witness>>) -> AxiomCheck {
        let cases = results.len();
        let witness = results.into_iter().flatten().next();
        AxiomCheck {
            axiom: axiom.to_string(),
            status: if witness.is_some() { Status::Fail } else { Status::Pass },
            cases,
            witness,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Results of a family of checks on one subject.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub subject: String,
    pub checks: Vec<AxiomCheck>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl AxiomReport {
    pub fn new(subject: impl Into<String>) -> AxiomReport {
        AxiomReport {
            subject: subject.into(),
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, check: AxiomCheck) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    pub fn check(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for c in &self.checks {
            let tag = if c.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "  {tag} {} ({} cases)", c.axiom, c.cases)?;
            if let Some(w) = &c.witness {
                writeln!(f, "    inputs: {}", w.inputs.join(", "))?;
                let terms: Vec<String> = w.residual.iter().map(|t| format!("{} {}", t.coefficient, t.term)).collect();
                writeln!(f, "    residual: {}", terms.join(" + "))?;
            }
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
