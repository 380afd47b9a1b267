use std::fmt;

use crate::algebra::{Algebra, AlgebraElement};
use crate::linalg::{Field, LinalgError, Matrix, Scalar};

/// A linear map `A → A` in coordinates: column `j` is the image of `e_j`.
///
/// Maps are vectorized column by column, so entry `(i, j)` sits at index
/// `j·n + i` and the images of consecutive basis vectors are consecutive
/// blocks of length `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Result<LinearMap, LinalgError> {
        if matrix.rows() != matrix.cols() {
            return Err(LinalgError::DimensionMismatch { expected: matrix.rows(), found: matrix.cols() });
        }
        Ok(LinearMap { matrix })
    }

    pub fn zero(field: Field, n: usize) -> LinearMap {
        LinearMap { matrix: Matrix::zeros(field, n, n) }
    }

    pub fn identity(field: Field, n: usize) -> LinearMap {
        LinearMap { matrix: Matrix::identity(field, n) }
    }

    /// Builds the map from its images `f(e_0), …, f(e_{n-1})`.
    pub fn from_images(field: Field, images: &[AlgebraElement]) -> Result<LinearMap, LinalgError> {
        let n = images.len();
        let mut matrix = Matrix::zeros(field, n, n);
        for (j, image) in images.iter().enumerate() {
            if image.dim() != n {
                return Err(LinalgError::DimensionMismatch { expected: n, found: image.dim() });
            }
            for (i, c) in image.coords().iter().enumerate() {
                if c.field() != field {
                    return Err(LinalgError::FieldMismatch { expected: field, found: c.field() });
                }
                matrix.set(i, j, c.clone());
            }
        }
        Ok(LinearMap { matrix })
    }

    /// Inverse of [`LinearMap::to_vec`].
    pub fn from_vec(field: Field, n: usize, v: &[Scalar]) -> Result<LinearMap, LinalgError> {
        if v.len() != n * n {
            return Err(LinalgError::DimensionMismatch { expected: n * n, found: v.len() });
        }
        let images: Vec<AlgebraElement> = v.chunks(n.max(1)).take(n).map(|c| AlgebraElement::new(c.to_vec())).collect();
        LinearMap::from_images(field, &images)
    }

    /// `x ↦ α∘x`.
    pub fn jordan_multiplication(algebra: &Algebra, alpha: &AlgebraElement) -> LinearMap {
        LinearMap { matrix: algebra.jordan_mul_matrix(alpha.coords()) }
    }

    /// `x ↦ a·x`.
    pub fn left_multiplication(algebra: &Algebra, a: &AlgebraElement) -> LinearMap {
        LinearMap { matrix: algebra.left_mul_matrix(a.coords()) }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn to_vec(&self) -> Vec<Scalar> {
        (0..self.dim()).flat_map(|j| self.matrix.column(j)).collect()
    }

    pub fn image_of_basis(&self, j: usize) -> AlgebraElement {
        AlgebraElement::new(self.matrix.column(j))
    }

    pub fn apply(&self, x: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::new(self.matrix.mul_vec(x.coords()).expect("element matches map dimension"))
    }

    pub(crate) fn apply_raw(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(x).expect("element matches map dimension")
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        LinearMap { matrix: self.matrix.add(&other.matrix).expect("maps of equal shape") }
    }

    pub fn sub(&self, other: &LinearMap) -> LinearMap {
        LinearMap { matrix: self.matrix.sub(&other.matrix).expect("maps of equal shape") }
    }

    pub fn scale(&self, k: &Scalar) -> LinearMap {
        LinearMap { matrix: self.matrix.scale(k) }
    }

    /// Renders the images of the basis, one `label ↦ image` per line.
    pub fn describe(&self, algebra: &Algebra) -> String {
        (0..self.dim())
            .map(|j| format!("{} ↦ {}", algebra.labels()[j], algebra.format(&self.image_of_basis(j))))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.matrix)
    }
}
