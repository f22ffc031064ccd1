//! Pass/fail verdicts with witnesses.

use std::fmt;

use crate::scalar::Scalar;

/// One violated equality: condition id, the basis indices it was evaluated on,
/// and both sides as coordinate vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub condition: String,
    pub witness: Vec<usize>,
    pub left: Vec<Scalar>,
    pub right: Vec<Scalar>,
}

impl Failure {
    fn key(&self) -> (&str, &[usize]) {
        (&self.condition, &self.witness)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Scalar]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        write!(
            f,
            "{} at {:?}: [{}] != [{}]",
            self.condition,
            self.witness,
            join(&self.left),
            join(&self.right)
        )
    }
}

/// Failures kept sorted by (condition, witness). Empty means pass.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    failures: Vec<Failure>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn push(&mut self, failure: Failure) {
        let pos = self
            .failures
            .partition_point(|f| f.key() <= failure.key());
        self.failures.insert(pos, failure);
    }

    /// Records a failure unless `left == right`.
    pub fn expect_eq(
        &mut self,
        condition: &str,
        witness: &[usize],
        left: &[Scalar],
        right: &[Scalar],
    ) {
        if left != right {
            self.push(Failure {
                condition: condition.to_string(),
                witness: witness.to_vec(),
                left: left.to_vec(),
                right: right.to_vec(),
            });
        }
    }

    /// Records a failure unless `value` is zero; the right side is reported as zeros.
    pub fn expect_zero(&mut self, condition: &str, witness: &[usize], value: &[Scalar]) {
        if value.iter().any(|s| !s.is_zero()) {
            let zeros = value.iter().map(|s| s.field().zero()).collect::<Vec<_>>();
            self.push(Failure {
                condition: condition.to_string(),
                witness: witness.to_vec(),
                left: value.to_vec(),
                right: zeros,
            });
        }
    }

    /// A failure with no coordinate payload (e.g. a rank condition).
    pub fn fail(&mut self, condition: &str, witness: &[usize]) {
        self.push(Failure {
            condition: condition.to_string(),
            witness: witness.to_vec(),
            left: Vec::new(),
            right: Vec::new(),
        });
    }

    pub fn merge(&mut self, other: Report) {
        for f in other.failures {
            self.push(f);
        }
    }

    /// Same report with every condition id prefixed, for nested checks.
    pub fn prefixed(self, prefix: &str) -> Report {
        let mut out = Report::new();
        for mut f in self.failures {
            f.condition = format!("{prefix}{}", f.condition);
            out.push(f);
        }
        out
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn len(&self) -> usize {
        self.failures.len()
    }

    pub fn is_empty(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failures(&self) -> &[Failure] {
        &self.failures
    }

    pub fn conditions(&self) -> Vec<&str> {
        let mut c: Vec<&str> = self.failures.iter().map(|f| f.condition.as_str()).collect();
        c.dedup();
        c
    }

    pub fn has(&self, condition: &str) -> bool {
        self.failures.iter().any(|f| f.condition == condition)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "pass");
        }
        writeln!(f, "{} failure(s)", self.len())?;
        for fail in &self.failures {
            writeln!(f, "  {fail}")?;
        }
        Ok(())
    }
}
