//! Assembly of the homogeneous systems whose solution sets are the map spaces.
//!
//! Unknowns are one or more linear maps `A → A`, each vectorized column by
//! column into a block of `n²` coordinates. Every defining identity is imposed
//! on basis pairs `(e_i, e_j)` in lexicographic order, contributing `n` rows
//! (one per output coordinate) per pair.

use crate::algebra::Algebra;
use crate::linalg::{Field, Matrix, Scalar};

/// Basis-level products and multiplication operators of an algebra.
pub(crate) struct BasisData {
    pub n: usize,
    pub field: Field,
    pub unit: Vec<Scalar>,
    pub basis: Vec<Vec<Scalar>>,
    /// `prod[i][j] = e_i e_j`
    pub prod: Vec<Vec<Vec<Scalar>>>,
    /// `jordan[i][j] = e_i ∘ e_j`
    pub jordan: Vec<Vec<Vec<Scalar>>>,
    /// `v ↦ e_i v`
    pub left: Vec<Matrix>,
    /// `v ↦ v e_j`
    pub right: Vec<Matrix>,
    /// `v ↦ v ∘ e_j`
    pub jmul: Vec<Matrix>,
}

impl BasisData {
    pub fn new(algebra: &Algebra) -> BasisData {
        let n = algebra.dim();
        let basis: Vec<Vec<Scalar>> = (0..n).map(|i| algebra.basis_element(i).into_coords()).collect();
        let prod = basis.iter().map(|x| basis.iter().map(|y| algebra.mul(x, y)).collect()).collect();
        let jordan = basis.iter().map(|x| basis.iter().map(|y| algebra.jordan_raw(x, y)).collect()).collect();
        BasisData {
            n,
            field: algebra.field(),
            unit: algebra.unit_coords().to_vec(),
            left: basis.iter().map(|e| algebra.left_mul_matrix(e)).collect(),
            right: basis.iter().map(|e| algebra.right_mul_matrix(e)).collect(),
            jmul: basis.iter().map(|e| algebra.jordan_mul_matrix(e)).collect(),
            basis,
            prod,
            jordan,
        }
    }
}

/// `coeff · T(u(v))` where `u` is the unknown map in `block`, `v` the input
/// vector and `T` an optional linear operator applied afterwards.
pub(crate) struct Term<'a> {
    pub block: usize,
    pub coeff: Scalar,
    pub input: &'a [Scalar],
    pub post: Option<&'a Matrix>,
}

pub(crate) struct SystemBuilder {
    n: usize,
    cols: usize,
    field: Field,
    rows: Vec<Vec<Scalar>>,
}

impl SystemBuilder {
    pub fn new(field: Field, n: usize, blocks: usize) -> SystemBuilder {
        SystemBuilder { n, cols: blocks * n * n, field, rows: Vec::new() }
    }

    /// Appends the `n` rows of `Σ terms = 0`.
    pub fn push(&mut self, terms: &[Term<'_>]) {
        let n = self.n;
        let mut block = vec![vec![self.field.zero(); self.cols]; n];
        for term in terms {
            for (l, vl) in term.input.iter().enumerate() {
                if vl.is_zero() {
                    continue;
                }
                let s = &term.coeff * vl;
                for m in 0..n {
                    let col = term.block * n * n + l * n + m;
                    match term.post {
                        None => block[m][col] += &s,
                        Some(op) => {
                            for (k, row) in block.iter_mut().enumerate() {
                                let t = op.get(k, m);
                                if !t.is_zero() {
                                    row[col] += &(&s * t);
                                }
                            }
                        }
                    }
                }
            }
        }
        self.rows.extend(block);
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn into_rows(self) -> Vec<Vec<Scalar>> {
        self.rows
    }

    pub fn build(self) -> Matrix {
        Matrix::from_rows(self.field, self.cols, self.rows).expect("rows have system width")
    }
}
