//! JSON documents for algebras and maps.
//!
//! Scalars are strings (`"3"`, `"-1/2"`) so rationals survive exactly;
//! indices are 0-based. A map matrix is a list of rows, and column `j` holds
//! the coordinates of the image of basis element `j`.
//!
//! ```json
//! {
//!   "name": "T2",
//!   "dim": 3,
//!   "field": {"type": "rational"},
//!   "labels": ["e11", "e12", "e22"],
//!   "unit": ["1", "0", "1"],
//!   "table": [{"i": 0, "j": 0, "k": 0, "c": "1"}, {"i": 0, "j": 1, "k": 1, "c": "1"},
//!             {"i": 1, "j": 2, "k": 1, "c": "1"}, {"i": 2, "j": 2, "k": 2, "c": "1"}]
//! }
//! ```

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError};
use crate::linalg::{Field, Matrix, Scalar};
use crate::maps::LinearMap;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("JSON error at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("{path}: {message}")]
    Field { path: String, message: String },
    #[error("algebra {name:?} fails validation: {source}")]
    Invalid {
        name: String,
        #[source]
        source: AlgebraError,
    },
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        IoError::Json { line: e.line(), column: e.column(), message: e.to_string() }
    }
}

fn field_error(path: impl Into<String>, message: impl Into<String>) -> IoError {
    IoError::Field { path: path.into(), message: message.into() }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldSpec {
    Rational,
    Prime { p: u64 },
}

impl FieldSpec {
    pub fn to_field(&self) -> Result<Field, IoError> {
        match *self {
            FieldSpec::Rational => Ok(Field::Rational),
            FieldSpec::Prime { p } => Field::prime(p).map_err(|e| field_error("field.p", e.to_string())),
        }
    }

    pub fn from_field(field: Field) -> FieldSpec {
        match field {
            Field::Rational => FieldSpec::Rational,
            Field::Prime(p) => FieldSpec::Prime { p },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub name: String,
    pub dim: usize,
    pub field: FieldSpec,
    pub labels: Vec<String>,
    pub unit: Vec<String>,
    pub table: Vec<TableEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDocument {
    pub algebra: String,
    pub matrix: Vec<Vec<String>>,
}

fn parse_scalar(field: Field, text: &str, path: impl Fn() -> String) -> Result<Scalar, IoError> {
    field.parse(text).map_err(|e| field_error(path(), e.to_string()))
}

fn check_index(value: usize, dim: usize, path: impl Fn() -> String) -> Result<usize, IoError> {
    if value < dim {
        Ok(value)
    } else {
        Err(field_error(path(), format!("index {value} out of range for dimension {dim}")))
    }
}

impl AlgebraDocument {
    /// Builds and validates the algebra.
    pub fn to_algebra(&self) -> Result<Algebra, IoError> {
        let field = self.field.to_field()?;
        let n = self.dim;
        if n == 0 {
            return Err(field_error("dim", "dimension must be at least 1"));
        }
        if self.labels.len() != n {
            return Err(field_error("labels", format!("expected {n} labels, found {}", self.labels.len())));
        }
        if self.unit.len() != n {
            return Err(field_error("unit", format!("expected {n} coordinates, found {}", self.unit.len())));
        }
        let unit = self
            .unit
            .iter()
            .enumerate()
            .map(|(r, s)| parse_scalar(field, s, || format!("unit[{r}]")))
            .collect::<Result<Vec<_>, _>>()?;
        let mut entries = Vec::with_capacity(self.table.len());
        for (r, e) in self.table.iter().enumerate() {
            let i = check_index(e.i, n, || format!("table[{r}].i"))?;
            let j = check_index(e.j, n, || format!("table[{r}].j"))?;
            let k = check_index(e.k, n, || format!("table[{r}].k"))?;
            entries.push((i, j, k, parse_scalar(field, &e.c, || format!("table[{r}].c"))?));
        }
        let invalid = |source: AlgebraError| IoError::Invalid { name: self.name.clone(), source };
        let algebra = Algebra::new(self.name.clone(), field, self.labels.clone(), unit, entries).map_err(invalid)?;
        algebra.validate().map_err(|e| invalid(e.into()))?;
        Ok(algebra)
    }

    /// Sparse table in `(i, j, k)` order.
    pub fn from_algebra(algebra: &Algebra) -> AlgebraDocument {
        AlgebraDocument {
            name: algebra.name().to_string(),
            dim: algebra.dim(),
            field: FieldSpec::from_field(algebra.field()),
            labels: algebra.labels().to_vec(),
            unit: algebra.unit().coords().iter().map(ToString::to_string).collect(),
            table: algebra.entries().map(|(i, j, k, c)| TableEntry { i, j, k, c: c.to_string() }).collect(),
        }
    }
}

impl MapDocument {
    /// Reads the matrix in the coordinates of `algebra`, whose name must match.
    pub fn to_map(&self, algebra: &Algebra) -> Result<LinearMap, IoError> {
        if self.algebra != algebra.name() {
            return Err(field_error(
                "algebra",
                format!("map refers to {:?} but the algebra is {:?}", self.algebra, algebra.name()),
            ));
        }
        let n = algebra.dim();
        let field = algebra.field();
        if self.matrix.len() != n {
            return Err(field_error("matrix", format!("expected {n} rows, found {}", self.matrix.len())));
        }
        let mut rows = Vec::with_capacity(n);
        for (r, row) in self.matrix.iter().enumerate() {
            if row.len() != n {
                return Err(field_error(format!("matrix[{r}]"), format!("expected {n} entries, found {}", row.len())));
            }
            rows.push(
                row.iter()
                    .enumerate()
                    .map(|(c, s)| parse_scalar(field, s, || format!("matrix[{r}][{c}]")))
                    .collect::<Result<Vec<_>, _>>()?,
            );
        }
        let matrix = Matrix::from_rows(field, n, rows).map_err(|e| field_error("matrix", e.to_string()))?;
        LinearMap::new(matrix).map_err(|e| field_error("matrix", e.to_string()))
    }

    pub fn from_map(algebra: &Algebra, map: &LinearMap) -> MapDocument {
        MapDocument {
            algebra: algebra.name().to_string(),
            matrix: map.matrix().to_rows().iter().map(|row| row.iter().map(ToString::to_string).collect()).collect(),
        }
    }
}

pub fn algebra_from_json(text: &str) -> Result<Algebra, IoError> {
    serde_json::from_str::<AlgebraDocument>(text)?.to_algebra()
}

pub fn algebra_to_json(algebra: &Algebra) -> String {
    serde_json::to_string_pretty(&AlgebraDocument::from_algebra(algebra)).expect("documents serialize")
}

pub fn map_from_json(text: &str, algebra: &Algebra) -> Result<LinearMap, IoError> {
    serde_json::from_str::<MapDocument>(text)?.to_map(algebra)
}

pub fn map_to_json(algebra: &Algebra, map: &LinearMap) -> String {
    serde_json::to_string_pretty(&MapDocument::from_map(algebra, map)).expect("documents serialize")
}
