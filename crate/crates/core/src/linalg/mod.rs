//! Exact linear algebra over [`Field`]s of characteristic other than two.
//!
//! Everything here is deterministic: elimination always takes the leftmost
//! pivot column and the topmost candidate row, so two calls on equal input
//! produce bit-identical output.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::{Matrix, Rref};
pub use scalar::{Field, Fp, Scalar, MAX_MODULUS};
pub use subspace::{solve_and_project, Subspace};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: Field, found: Field },
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("empty column block")]
    EmptyBlock,
    #[error("column block {start}..{end} exceeds {cols} columns")]
    BlockOutOfRange { start: usize, end: usize, cols: usize },
    #[error("fields of characteristic 2 are not supported")]
    Characteristic2,
    #[error("{0} is not an odd prime modulus below 2^31")]
    InvalidModulus(u64),
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
}

pub(crate) fn check_field(expected: Field, values: &[Scalar]) -> Result<(), LinalgError> {
    match values.iter().find(|x| x.field() != expected) {
        Some(x) => Err(LinalgError::FieldMismatch { expected, found: x.field() }),
        None => Ok(()),
    }
}

/// Reduces `rows` in place to reduced row-echelon form, dropping zero rows,
/// and returns the pivot columns.
pub(crate) fn reduce_rows(rows: &mut Vec<Vec<Scalar>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..cols {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let inv = rows[next][col].inv().expect("nonzero pivot");
        if !inv.is_one() {
            for x in rows[next][col..].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let support: Vec<usize> = (col..cols).filter(|&c| !rows[next][c].is_zero()).collect();
        let (before, rest) = rows.split_at_mut(next);
        let (pivot_row, after) = rest.split_first_mut().expect("pivot row");
        for row in before.iter_mut().chain(after.iter_mut()) {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for &c in &support {
                row[c] -= &(&factor * &pivot_row[c]);
            }
        }
        pivots.push(col);
        next += 1;
    }
    rows.truncate(pivots.len());
    pivots
}

/// Insertion-ordered echelon basis that accepts rows one at a time.
///
/// Each stored row is monic at its pivot and zero at the pivots of every row
/// stored before it, so reducing a new row against the stored rows in
/// insertion order clears all stored pivots.
#[derive(Clone, Debug)]
pub(crate) struct RowReducer {
    cols: usize,
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl RowReducer {
    pub(crate) fn new(cols: usize) -> Self {
        RowReducer { cols, rows: Vec::new() }
    }

    /// Reduces `row` against the stored rows; returns it fully reduced.
    pub(crate) fn reduce(&self, mut row: Vec<Scalar>) -> Vec<Scalar> {
        debug_assert_eq!(row.len(), self.cols);
        for (pivot, stored) in &self.rows {
            if row[*pivot].is_zero() {
                continue;
            }
            let factor = row[*pivot].clone();
            for (c, value) in stored.iter().enumerate().skip(*pivot) {
                if !value.is_zero() {
                    row[c] -= &(&factor * value);
                }
            }
        }
        row
    }

    /// Adds a row. Returns the pivot of the reduced row, or `None` if it was
    /// already in the span.
    pub(crate) fn insert(&mut self, row: Vec<Scalar>) -> Option<usize> {
        let mut row = self.reduce(row);
        let pivot = row.iter().position(|x| !x.is_zero())?;
        let inv = row[pivot].inv().expect("nonzero pivot");
        for x in row.iter_mut().skip(pivot) {
            *x = &*x * &inv;
        }
        self.rows.push((pivot, row));
        Some(pivot)
    }
}
