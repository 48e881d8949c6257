use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Row sizes `(n_1, ..., n_r)` of the coordinate space, flattened row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VariableLayout {
    rows: Arc<[usize]>,
    offsets: Arc<[usize]>,
}

impl VariableLayout {
    pub fn new(row_sizes: &[usize]) -> Result<Self> {
        if row_sizes.is_empty() || row_sizes.contains(&0) {
            return Err(Error::Config(format!("invalid row sizes {row_sizes:?}")));
        }
        let mut offsets = Vec::with_capacity(row_sizes.len());
        let mut acc = 0;
        for &n in row_sizes {
            offsets.push(acc);
            acc += n;
        }
        Ok(Self { rows: row_sizes.into(), offsets: offsets.into() })
    }

    /// A single row of `n` variables.
    pub fn flat(n: usize) -> Self {
        Self::new(&[n]).expect("n > 0")
    }

    /// The staircase `(1, 2, ..., n)`.
    pub fn staircase(n: usize) -> Self {
        Self::new(&(1..=n).collect::<Vec<_>>()).expect("n > 0")
    }

    pub fn row_sizes(&self) -> &[usize] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.offsets.last().unwrap() + self.rows.last().unwrap()
    }

    /// Flat index of `(k, i)`; both zero-based.
    pub fn index(&self, k: usize, i: usize) -> usize {
        assert!(i < self.rows[k], "column {i} out of range for row {k}");
        self.offsets[k] + i
    }

    pub fn row_col(&self, flat: usize) -> (usize, usize) {
        let k = self.offsets.partition_point(|&o| o <= flat) - 1;
        (k, flat - self.offsets[k])
    }

    pub fn row_range(&self, k: usize) -> std::ops::Range<usize> {
        self.offsets[k]..self.offsets[k] + self.rows[k]
    }

    /// Name of the variable at a flat index: `x1` for flat layouts, `x[k,i]` otherwise.
    pub fn var_name(&self, flat: usize) -> String {
        if self.rows.len() == 1 {
            format!("x{}", flat + 1)
        } else {
            let (k, i) = self.row_col(flat);
            format!("x[{},{}]", k + 1, i + 1)
        }
    }
}

impl fmt::Debug for VariableLayout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Layout{:?}", &*self.rows)
    }
}
