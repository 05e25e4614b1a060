//! Outcome of an identity sweep. Failures are data, not errors.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    /// Which identity failed, e.g. `wdvv` or `open-wdvv-2`.
    pub check: String,
    /// 1-based indices of the failing instance.
    pub indices: Vec<usize>,
    /// Usually the leading term of the nonzero residual.
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub name: String,
    /// Number of identities evaluated.
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report {
            name: name.into(),
            checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn fail(&mut self, check: &str, indices: Vec<usize>, detail: impl Into<String>) {
        self.failures.push(Failure {
            check: check.to_string(),
            indices,
            detail: detail.into(),
        });
    }

    /// Records a boolean outcome.
    pub fn expect(&mut self, ok: bool, check: &str, indices: Vec<usize>, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(check, indices, detail());
        }
    }

    pub fn absorb(&mut self, other: Report) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }

    /// Whether some failure of `check` was recorded at exactly `indices`.
    pub fn failed_at(&self, check: &str, indices: &[usize]) -> bool {
        self.failures.iter().any(|f| f.check == check && f.indices == indices)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "{status} {} ({} identities checked)", self.name, self.checked)?;
        for fl in self.failures.iter().take(20) {
            writeln!(f, "  {} at {:?}: {}", fl.check, fl.indices, fl.detail)?;
        }
        if self.failures.len() > 20 {
            writeln!(f, "  ... {} more", self.failures.len() - 20)?;
        }
        Ok(())
    }
}
