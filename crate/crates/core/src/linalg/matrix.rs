use std::fmt;

use super::{check_field, reduce_rows, Field, LinalgError, Scalar, Subspace};

/// Dense row-major matrix over a single [`Field`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Result of [`Matrix::rref`]: the nonzero rows of the reduced row-echelon
/// form, with their pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from rows of equal length whose entries all lie in `field`.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Matrix, LinalgError> {
        let n_rows = rows.len();
        let mut data = Vec::with_capacity(n_rows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch { expected: cols, found: row.len() });
            }
            check_field(field, &row)?;
            data.extend(row);
        }
        Ok(Matrix { field, rows: n_rows, cols, data })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged integer matrix");
                r.iter().map(|&x| field.from_i64(x)).collect()
            })
            .collect();
        Matrix::from_rows(field, cols, rows).expect("integer rows are well formed")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    /// Panics if `value` is not from this matrix's field.
    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        assert_eq!(value.field(), self.field, "field mismatch in matrix entry");
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[Scalar]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        check_field(self.field, v)?;
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch { expected: self.field, found: other.field });
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.data[r * other.cols + c] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, k: &Scalar) -> Matrix {
        Matrix { data: self.data.iter().map(|x| x * k).collect(), ..self.clone() }
    }

    fn zip_with(&self, other: &Matrix, op: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix, LinalgError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch { expected: self.field, found: other.field });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| op(a, b)).collect();
        Ok(Matrix { data, ..self.clone() })
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(field: Field, cols: usize, parts: &[Matrix]) -> Result<Matrix, LinalgError> {
        let mut data = Vec::new();
        let mut rows = 0;
        for part in parts {
            if part.cols != cols {
                return Err(LinalgError::DimensionMismatch { expected: cols, found: part.cols });
            }
            if part.field != field {
                return Err(LinalgError::FieldMismatch { expected: field, found: part.field });
            }
            data.extend_from_slice(&part.data);
            rows += part.rows;
        }
        Ok(Matrix { field, rows, cols, data })
    }

    /// The unique reduced row-echelon form (nonzero rows only).
    pub fn rref(&self) -> Rref {
        let mut rows = self.to_rows();
        let pivots = reduce_rows(&mut rows, self.cols);
        let rank = pivots.len();
        let matrix = Matrix::from_rows(self.field, self.cols, rows).expect("reduced rows keep shape");
        Rref { matrix, pivots, rank }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// `{ v : self · v = 0 }` as a canonical subspace of `F^cols`.
    pub fn nullspace(&self) -> Subspace {
        let Rref { matrix: reduced, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let basis = (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![self.field.zero(); self.cols];
                v[free] = self.field.one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -reduced.get(r, free);
                }
                v
            })
            .collect();
        Subspace::from_vectors(self.field, self.cols, basis).expect("kernel vectors are well formed")
    }

    /// A particular solution of `self · x = rhs` with every free variable set
    /// to zero, or `None` if the system is inconsistent.
    pub fn solve(&self, rhs: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
        if rhs.len() != self.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.rows, found: rhs.len() });
        }
        check_field(self.field, rhs)?;
        let mut rows: Vec<Vec<Scalar>> = self
            .to_rows()
            .into_iter()
            .zip(rhs)
            .map(|(mut row, b)| {
                row.push(b.clone());
                row
            })
            .collect();
        let pivots = reduce_rows(&mut rows, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &p) in rows.iter().zip(&pivots) {
            x[p] = row[self.cols].clone();
        }
        Ok(Some(x))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn rref_of_dependent_rows() {
        let r = Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.matrix, Matrix::from_i64(Q, &[&[1, 2]]));
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn rref_identity_and_swap() {
        let id = Matrix::identity(Q, 3);
        let r = id.rref();
        assert_eq!((r.matrix, r.rank), (id, 3));
        let swapped = Matrix::from_i64(Q, &[&[0, 1], &[1, 0]]).rref();
        assert_eq!(swapped.matrix, Matrix::identity(Q, 2));
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let f5 = Field::prime(5).unwrap();
        let rows = vec![vec![Q.one(), f5.one()]];
        assert_eq!(
            Matrix::from_rows(Q, 2, rows),
            Err(LinalgError::FieldMismatch { expected: Q, found: f5 })
        );
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(Matrix::zeros(Q, 2, 3).nullspace().dim(), 3);
        assert_eq!(Matrix::identity(Q, 4).nullspace().dim(), 0);
        let k = Matrix::from_i64(Q, &[&[1, 1, 0]]).nullspace();
        assert_eq!(k.dim(), 2);
        assert!(k.contains(&[Q.one(), -Q.one(), Q.zero()]).unwrap());
    }

    #[test]
    fn solve_particular_and_inconsistent() {
        let m = Matrix::from_i64(Q, &[&[1, 1, 0], &[0, 0, 1]]);
        let x = m.solve(&[Q.from_i64(3), Q.from_i64(2)]).unwrap().unwrap();
        assert_eq!(x, vec![Q.from_i64(3), Q.zero(), Q.from_i64(2)]);
        let m = Matrix::from_i64(Q, &[&[1, 1], &[2, 2]]);
        assert_eq!(m.solve(&[Q.one(), Q.one()]).unwrap(), None);
    }

    #[test]
    fn prime_field_rref() {
        let f3 = Field::prime(3).unwrap();
        // 1 + 2 = 0 mod 3, so the rows are dependent
        let r = Matrix::from_i64(f3, &[&[1, 1], &[2, 2], &[1, 4]]).rref();
        assert_eq!(r.rank, 1);
    }
}
