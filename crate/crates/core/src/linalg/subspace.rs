use std::ops::Range;

use super::{check_field, reduce_rows, Field, LinalgError, Matrix, Scalar};

/// A subspace of `F^m` stored by its reduced row-echelon basis.
///
/// The basis is canonical: two subspaces over the same field are equal as
/// sets exactly when the stored bases are equal entry by entry, so the derived
/// `PartialEq` is set equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    /// The span of `vectors`, each of length `ambient`.
    pub fn from_vectors(field: Field, ambient: usize, vectors: Vec<Vec<Scalar>>) -> Result<Subspace, LinalgError> {
        let mut rows = Vec::with_capacity(vectors.len());
        for v in vectors {
            if v.len() != ambient {
                return Err(LinalgError::AmbientMismatch { left: ambient, right: v.len() });
            }
            check_field(field, &v)?;
            if v.iter().any(|x| !x.is_zero()) {
                rows.push(v);
            }
        }
        let pivots = reduce_rows(&mut rows, ambient);
        Ok(Subspace { field, ambient, basis: rows, pivots })
    }

    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace { field, ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        let basis = (0..ambient)
            .map(|i| (0..ambient).map(|j| if i == j { field.one() } else { field.zero() }).collect())
            .collect();
        Subspace { field, ambient, basis, pivots: (0..ambient).collect() }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// Canonical basis rows.
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<(), LinalgError> {
        if v.len() != self.ambient {
            return Err(LinalgError::AmbientMismatch { left: self.ambient, right: v.len() });
        }
        check_field(self.field, v)
    }

    fn check_compatible(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch { expected: self.field, found: other.field });
        }
        Ok(())
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in
    /// the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
        self.check_vector(v)?;
        // In RREF the coordinate along row r is the entry at its pivot.
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, row) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (x, b) in residual.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &(c * b);
                }
            }
        }
        Ok(residual.iter().all(Scalar::is_zero).then_some(coords))
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool, LinalgError> {
        Ok(self.coordinates(v)?.is_some())
    }

    /// `self ⊆ other`.
    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_compatible(other)?;
        for v in &self.basis {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_compatible(other)?;
        let vectors = self.basis.iter().chain(&other.basis).cloned().collect();
        Subspace::from_vectors(self.field, self.ambient, vectors)
    }

    /// Intersection by the kernel method: solve `Σ xᵢuᵢ = Σ yⱼvⱼ` and map the
    /// kernel back through the `u` basis.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.field, self.ambient));
        }
        let a = self.dim();
        let cols = a + other.dim();
        let rows = (0..self.ambient)
            .map(|coord| {
                self.basis
                    .iter()
                    .map(|u| u[coord].clone())
                    .chain(other.basis.iter().map(|v| -&v[coord]))
                    .collect()
            })
            .collect();
        let system = Matrix::from_rows(self.field, cols, rows)?;
        let kernel = system.nullspace();
        let vectors = kernel
            .basis
            .iter()
            .map(|k| self.combine(&k[..a]))
            .collect();
        Subspace::from_vectors(self.field, self.ambient, vectors)
    }

    /// `Σ coeffs[r] · basis[r]`.
    pub fn combine(&self, coeffs: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coeffs.len(), self.dim(), "coefficient count must match dimension");
        let mut out = vec![self.field.zero(); self.ambient];
        for (c, row) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (x, b) in out.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x += &(c * b);
                }
            }
        }
        out
    }

    /// Image of the subspace under the coordinate restriction to `block`.
    pub fn project(&self, block: Range<usize>) -> Result<Subspace, LinalgError> {
        check_block(&block, self.ambient)?;
        let vectors = self.basis.iter().map(|v| v[block.clone()].to_vec()).collect();
        Subspace::from_vectors(self.field, block.len(), vectors)
    }
}

fn check_block(block: &Range<usize>, cols: usize) -> Result<(), LinalgError> {
    if block.is_empty() {
        return Err(LinalgError::EmptyBlock);
    }
    if block.end > cols {
        return Err(LinalgError::BlockOutOfRange { start: block.start, end: block.end, cols });
    }
    Ok(())
}

/// `{ v|block : M v = 0 }`: existential quantification over the coordinates
/// outside `block`.
pub fn solve_and_project(m: &Matrix, block: Range<usize>) -> Result<Subspace, LinalgError> {
    check_block(&block, m.cols())?;
    m.nullspace().project(block)
}
