//! The ten acceptance criteria of the desitter crate, each reduced to a
//! list of numeric checks with explicit bounds.

pub mod criteria;
pub mod sampling;

use std::fmt::Write as _;
use std::time::Duration;

/// How a check's value is compared with its bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    /// `value < bound`.
    Below,
    /// `value > bound`.
    Above,
}

/// A single numeric comparison.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub bound: f64,
    pub kind: Bound,
    /// Reason the check is known to be unattainable, when it is.
    pub documented: Option<&'static str>,
}

impl Check {
    pub fn below(name: impl Into<String>, value: f64, bound: f64) -> Self {
        Self {
            name: name.into(),
            value,
            bound,
            kind: Bound::Below,
            documented: None,
        }
    }

    pub fn above(name: impl Into<String>, value: f64, bound: f64) -> Self {
        Self {
            name: name.into(),
            value,
            bound,
            kind: Bound::Above,
            documented: None,
        }
    }

    /// Marks the check as a known, analysed failure.
    pub fn documented(mut self, reason: &'static str) -> Self {
        self.documented = Some(reason);
        self
    }

    pub fn passed(&self) -> bool {
        match self.kind {
            Bound::Below => self.value < self.bound,
            Bound::Above => self.value > self.bound,
        }
    }

    fn describe(&self) -> String {
        let op = match (self.kind, self.passed()) {
            (Bound::Below, true) => "<",
            (Bound::Below, false) => ">=",
            (Bound::Above, true) => ">",
            (Bound::Above, false) => "<=",
        };
        format!("{} {:.3e} {} {:.0e}", self.name, self.value, op, self.bound)
    }
}

/// Outcome of one criterion.
#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: u32,
    pub title: &'static str,
    pub checks: Vec<Check>,
    pub elapsed: Duration,
    pub runtime_limit: Option<Duration>,
    pub notes: Vec<String>,
}

impl CriterionReport {
    pub fn within_runtime(&self) -> bool {
        self.runtime_limit.is_none_or(|l| self.elapsed < l)
    }

    pub fn passed(&self) -> bool {
        self.within_runtime() && self.checks.iter().all(Check::passed)
    }

    /// Failing checks without a documented reason, plus a runtime overrun.
    pub fn undocumented_failures(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .checks
            .iter()
            .filter(|c| !c.passed() && c.documented.is_none())
            .map(Check::describe)
            .collect();
        if !self.within_runtime() {
            out.push(format!("runtime {:.2?} over limit", self.elapsed));
        }
        out
    }

    /// One line: `criterion N [title]: PASS|FAIL ...`.
    pub fn line(&self) -> String {
        let mut s = format!("criterion {:>2} [{}]: ", self.id, self.title);
        let failing: Vec<&Check> = self.checks.iter().filter(|c| !c.passed()).collect();
        if self.passed() {
            let worst = self
                .checks
                .iter()
                .filter(|c| c.kind == Bound::Below)
                .max_by(|a, b| (a.value / a.bound).total_cmp(&(b.value / b.bound)));
            s.push_str("PASS");
            if let Some(w) = worst {
                let _ = write!(s, " (worst: {})", w.describe());
            }
        } else if self.undocumented_failures().is_empty() {
            s.push_str("FAIL (documented: ");
            let parts: Vec<String> = failing
                .iter()
                .map(|c| format!("{}; {}", c.describe(), c.documented.unwrap_or("")))
                .collect();
            s.push_str(&parts.join(" | "));
            s.push(')');
        } else {
            s.push_str("FAIL (");
            s.push_str(&self.undocumented_failures().join(" | "));
            s.push(')');
        }
        let _ = write!(s, " [{} checks, {:.2?}]", self.checks.len(), self.elapsed);
        s
    }
}

/// Runs all criteria in order.
pub fn run_all(seed: u64) -> Vec<CriterionReport> {
    (1..=10).map(|id| criteria::run(id, seed)).collect()
}
