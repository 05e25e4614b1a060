use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Var {
    pub name: String,
    /// Quasi-homogeneous degree; zero for variables that carry no grading
    /// (unknown coefficients of an ansatz, say).
    pub weight: BigRational,
    /// Whether negative exponents are allowed.
    pub laurent: bool,
}

/// Ordered list of variables shared by a family of polynomials.
///
/// At most one variable may be Laurent. The order fixes the monomial order
/// used for canonical serialization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarTable {
    vars: Vec<Var>,
}

impl VarTable {
    pub fn new(vars: Vec<Var>) -> Result<Arc<Self>> {
        let laurent = vars.iter().filter(|v| v.laurent).count();
        if laurent > 1 {
            return Err(Error::InvalidVarTable(
                "at most one variable may carry negative exponents".into(),
            ));
        }
        for (i, v) in vars.iter().enumerate() {
            if v.weight.is_negative() {
                return Err(Error::InvalidVarTable(format!(
                    "negative weight on `{}`",
                    v.name
                )));
            }
            if v.name.is_empty() || vars[..i].iter().any(|w| w.name == v.name) {
                return Err(Error::InvalidVarTable(format!(
                    "empty or duplicate name `{}`",
                    v.name
                )));
            }
        }
        Ok(Arc::new(VarTable { vars }))
    }

    /// Unweighted, non-Laurent variables.
    pub fn plain<S: AsRef<str>>(names: &[S]) -> Arc<Self> {
        Self::new(
            names
                .iter()
                .map(|n| Var {
                    name: n.as_ref().to_string(),
                    weight: BigRational::zero(),
                    laurent: false,
                })
                .collect(),
        )
        .expect("plain variable names must be distinct")
    }

    pub fn builder() -> VarTableBuilder {
        VarTableBuilder { vars: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.vars[idx].name
    }

    pub fn weight(&self, idx: usize) -> &BigRational {
        &self.vars[idx].weight
    }

    pub fn is_laurent(&self, idx: usize) -> bool {
        self.vars[idx].laurent
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn names(&self) -> Vec<String> {
        self.vars.iter().map(|v| v.name.clone()).collect()
    }
}

pub struct VarTableBuilder {
    vars: Vec<Var>,
}

impl VarTableBuilder {
    pub fn var(mut self, name: impl Into<String>, weight: BigRational) -> Self {
        self.vars.push(Var {
            name: name.into(),
            weight,
            laurent: false,
        });
        self
    }

    pub fn laurent_var(mut self, name: impl Into<String>, weight: BigRational) -> Self {
        self.vars.push(Var {
            name: name.into(),
            weight,
            laurent: true,
        });
        self
    }

    pub fn build(self) -> Result<Arc<VarTable>> {
        VarTable::new(self.vars)
    }
}

/// `t1, …, tn` style names.
pub fn indexed_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn rejects_two_laurent_slots() {
        let err = VarTable::builder()
            .laurent_var("s", BigRational::one())
            .laurent_var("u", BigRational::one())
            .build();
        assert!(err.is_err());
    }

    #[test]
    fn rejects_duplicate_names() {
        assert!(VarTable::new(vec![
            Var { name: "x".into(), weight: BigRational::zero(), laurent: false },
            Var { name: "x".into(), weight: BigRational::zero(), laurent: false },
        ])
        .is_err());
    }
}
