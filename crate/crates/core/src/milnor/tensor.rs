use std::sync::Arc;

use serde_json::{json, Value};

use crate::exactalg::{MPoly, VarTable};

/// Rank-3 array `c^a_{bc}` of polynomial entries. Indices are 0-based, so
/// `get(0, b, c)` is the coefficient along the first basis vector.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureTensor {
    dim: usize,
    vars: Arc<VarTable>,
    entries: Vec<MPoly>,
}

impl StructureTensor {
    pub fn zeros(vars: &Arc<VarTable>, dim: usize) -> Self {
        StructureTensor {
            dim,
            vars: vars.clone(),
            entries: vec![MPoly::zero(vars); dim * dim * dim],
        }
    }

    pub fn from_fn<F: FnMut(usize, usize, usize) -> MPoly>(
        vars: &Arc<VarTable>,
        dim: usize,
        mut f: F,
    ) -> Self {
        let mut t = Self::zeros(vars, dim);
        for a in 0..dim {
            for b in 0..dim {
                for c in 0..dim {
                    t.entries[(a * dim + b) * dim + c] = f(a, b, c);
                }
            }
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> &MPoly {
        &self.entries[(a * self.dim + b) * self.dim + c]
    }

    pub fn set(&mut self, a: usize, b: usize, c: usize, p: MPoly) {
        let d = self.dim;
        self.entries[(a * d + b) * d + c] = p;
    }

    /// `c^a_{bc} = c^a_{cb}` for all indices.
    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|a| {
            (0..self.dim).all(|b| (0..b).all(|c| self.get(a, b, c) == self.get(a, c, b)))
        })
    }

    /// `[[[c^a_{bc}]_c]_b]_a` with every entry in the JSON polynomial form.
    pub fn to_json(&self) -> Value {
        let d = self.dim;
        let rows: Vec<Value> = (0..d)
            .map(|a| {
                json!((0..d)
                    .map(|b| json!((0..d).map(|c| self.get(a, b, c).to_json()).collect::<Vec<_>>()))
                    .collect::<Vec<_>>())
            })
            .collect();
        Value::Array(rows)
    }
}
