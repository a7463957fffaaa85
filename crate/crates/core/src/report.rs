//! Check reports: every checker returns the full list of violating basis
//! tuples, not just a verdict, so a failing instance can be diagnosed.

use std::fmt;

use crate::scalar::{format_vec, Scalar};

/// A single failed identity instance: which identity family, at which basis
/// tuple, and the exact left-minus-right defect vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Stable name of the identity family (e.g. `fundamental`, `rep/l-m`).
    pub identity: String,
    /// Basis indices of the free variables, in the order the family's
    /// documentation lists them.
    pub tuple: Vec<usize>,
    /// The exact value of `lhs - rhs` at that tuple.
    pub defect: Vec<Scalar>,
}

impl Violation {
    pub fn new(identity: impl Into<String>, tuple: &[usize], defect: Vec<Scalar>) -> Self {
        Violation { identity: identity.into(), tuple: tuple.to_vec(), defect }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at {:?}: defect {}",
            self.identity,
            self.tuple,
            format_vec(&self.defect)
        )
    }
}

/// Outcome of one checker run. The report passes exactly when no identity
/// instance had a nonzero defect.
///
/// `violations` lists the failures in a deterministic order (families in the
/// order the checker documents them, tuples lexicographically within each
/// family), independent of how the sweep was parallelized. [`truncated`]
/// caps the listing for display while keeping the true count.
///
/// [`truncated`]: CheckReport::truncated
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    /// Number of identity instances evaluated.
    pub checked: usize,
    /// Total number of violations found, even if the listing was truncated.
    pub total_violations: usize,
    /// The recorded violations (all of them, unless truncated).
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn from_violations(checked: usize, violations: Vec<Violation>) -> Self {
        CheckReport { checked, total_violations: violations.len(), violations }
    }

    /// `true` when every checked identity instance held exactly.
    pub fn passed(&self) -> bool {
        self.total_violations == 0
    }

    /// Concatenates two reports (violation order: `self` then `other`).
    pub fn merge(mut self, other: CheckReport) -> Self {
        self.checked += other.checked;
        self.total_violations += other.total_violations;
        self.violations.extend(other.violations);
        self
    }

    /// Keeps at most `cap` violations in the listing; `total_violations`
    /// still reports the full count.
    pub fn truncated(mut self, cap: usize) -> Self {
        self.violations.truncate(cap);
        self
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "pass ({} identity instances)", self.checked)
        } else {
            writeln!(
                f,
                "FAIL: {} violation(s) in {} identity instances",
                self.total_violations, self.checked
            )?;
            for v in &self.violations {
                writeln!(f, "  {v}")?;
            }
            if self.violations.len() < self.total_violations {
                writeln!(f, "  ... {} more", self.total_violations - self.violations.len())?;
            }
            Ok(())
        }
    }
}
