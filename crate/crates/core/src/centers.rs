//! The center `Z(A)` and its two Jordan-flavoured relaxations
//!
//! * `Z_J(A) = { a : [[a,x],y] = 0 for all x, y }`
//! * `Z_Q(A) = { a : [a,[x,y]] = 0 for all x, y }`
//!
//! each computed as a nullspace of constraints imposed on basis elements
//! only, which is enough by bilinearity. Also decides semiprimeness in
//! characteristic zero through the trace form.

use thiserror::Error;

use crate::algebra::Algebra;
use crate::linalg::{Field, Matrix, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CenterError {
    #[error("{0} must be contained in {1}")]
    ChainViolation(&'static str, &'static str),
    #[error("semiprimeness via the trace form needs characteristic 0, got {0}")]
    UnsupportedField(Field),
}

/// `F·1 ⊆ Z ⊆ Z_J ⊆ Z_Q`, checked on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterChain {
    pub z: Subspace,
    pub z_j: Subspace,
    pub z_q: Subspace,
}

fn stacked_nullspace(algebra: &Algebra, blocks: Vec<Matrix>) -> Subspace {
    let n = algebra.dim();
    Matrix::vstack(algebra.field(), n, &blocks).expect("operator blocks are n x n").nullspace()
}

fn basis_coords(algebra: &Algebra) -> Vec<Vec<crate::linalg::Scalar>> {
    (0..algebra.dim()).map(|i| algebra.basis_element(i).into_coords()).collect()
}

pub fn center(algebra: &Algebra) -> Subspace {
    let blocks = basis_coords(algebra).iter().map(|e| algebra.bracket_matrix(e)).collect();
    stacked_nullspace(algebra, blocks)
}

pub fn z_jordan(algebra: &Algebra) -> Subspace {
    let brackets: Vec<Matrix> = basis_coords(algebra).iter().map(|e| algebra.bracket_matrix(e)).collect();
    let mut blocks = Vec::with_capacity(brackets.len() * brackets.len());
    for inner in &brackets {
        for outer in &brackets {
            // a ↦ [[a, e_i], e_j]
            blocks.push(outer.mul(inner).expect("square operators"));
        }
    }
    stacked_nullspace(algebra, blocks)
}

pub fn z_quasi(algebra: &Algebra) -> Subspace {
    let basis = basis_coords(algebra);
    let mut blocks = Vec::new();
    for x in &basis {
        for y in &basis {
            let commutator = algebra.lie_raw(x, y);
            if commutator.iter().any(|c| !c.is_zero()) {
                blocks.push(algebra.bracket_matrix(&commutator));
            }
        }
    }
    if blocks.is_empty() {
        return Subspace::full(algebra.field(), algebra.dim());
    }
    stacked_nullspace(algebra, blocks)
}

pub fn center_chain(algebra: &Algebra) -> Result<CenterChain, CenterError> {
    let chain = CenterChain { z: center(algebra), z_j: z_jordan(algebra), z_q: z_quasi(algebra) };
    let scalars = Subspace::from_vectors(algebra.field(), algebra.dim(), vec![algebra.unit().into_coords()])
        .expect("unit has algebra shape");
    let links = [
        (&scalars, &chain.z, "F·1", "Z"),
        (&chain.z, &chain.z_j, "Z", "Z_J"),
        (&chain.z_j, &chain.z_q, "Z_J", "Z_Q"),
    ];
    for (small, large, a, b) in links {
        if !small.is_subspace_of(large).expect("same ambient") {
            return Err(CenterError::ChainViolation(a, b));
        }
    }
    Ok(chain)
}

/// Radical of the form `(a, b) ↦ tr(L_a L_b) = tr(L_{ab})`. Over a field of
/// characteristic zero this is the Jacobson radical.
pub fn trace_form_radical(algebra: &Algebra) -> Result<Subspace, CenterError> {
    if algebra.field() != Field::Rational {
        return Err(CenterError::UnsupportedField(algebra.field()));
    }
    let n = algebra.dim();
    let field = algebra.field();
    let traces: Vec<_> = (0..n)
        .map(|k| {
            let l = algebra.left_mul_matrix(algebra.basis_element(k).coords());
            (0..n).fold(field.zero(), |acc, i| acc + l.get(i, i))
        })
        .collect();
    let mut gram = Matrix::zeros(field, n, n);
    for i in 0..n {
        for j in 0..n {
            let mut t = field.zero();
            for (k, c) in algebra.basis_product(i, j) {
                t += &(c * &traces[*k]);
            }
            gram.set(i, j, t);
        }
    }
    Ok(gram.nullspace())
}

pub fn is_semiprime_char0(algebra: &Algebra) -> Result<bool, CenterError> {
    Ok(trace_form_radical(algebra)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraElement;
    use crate::catalog;

    const Q: Field = Field::Rational;

    fn span(algebra: &Algebra, labels: &[&[&str]]) -> Subspace {
        let vectors = labels
            .iter()
            .map(|terms| {
                terms
                    .iter()
                    .fold(algebra.zero(), |acc: AlgebraElement, l| acc.add(&algebra.element(l)))
                    .into_coords()
            })
            .collect();
        Subspace::from_vectors(Q, algebra.dim(), vectors).unwrap()
    }

    #[test]
    fn primer_chain_matches_displayed_bases() {
        let p = catalog::primer_algebra(Q).unwrap().algebra;
        let chain = center_chain(&p).unwrap();
        assert_eq!(chain.z, span(&p, &[&["1"], &["e13", "e24"], &["e14"]]));
        assert_eq!(chain.z_j, span(&p, &[&["1"], &["e13"], &["e24"], &["e14"]]));
        assert_eq!(chain.z_q, span(&p, &[&["1"], &["e13"], &["e24"], &["e14"], &["e23"]]));
    }

    #[test]
    fn triangular_and_matrix_centers() {
        let t2 = catalog::upper_triangular(2, Q).unwrap().algebra;
        assert_eq!(center(&t2).dim(), 1);
        assert_eq!(z_jordan(&t2).dim(), 1);
        assert_eq!(z_quasi(&t2), span(&t2, &[&["e11", "e22"], &["e12"]]));
        let m2 = catalog::matrix_algebra(2, Q).unwrap().algebra;
        assert_eq!(center(&m2).dim(), 1);
        let m3 = catalog::matrix_algebra(3, Q).unwrap().algebra;
        assert_eq!(z_quasi(&m3).dim(), 1);
    }

    #[test]
    fn grassmann_is_jordan_central() {
        let g = catalog::grassmann3(Q).unwrap().algebra;
        let chain = center_chain(&g).unwrap();
        assert_eq!(chain.z.dim(), 2);
        assert!(chain.z_j.is_full());
        assert!(chain.z_q.is_full());
    }

    #[test]
    fn semiprime_by_trace_form() {
        let semiprime = |a: &Algebra| is_semiprime_char0(a).unwrap();
        assert!(semiprime(&catalog::matrix_algebra(2, Q).unwrap().algebra));
        assert!(!semiprime(&catalog::upper_triangular(2, Q).unwrap().algebra));
        let p = catalog::primer_algebra(Q).unwrap().algebra;
        assert!(!semiprime(&p));
        // e14 spans a nilpotent ideal with e14·A·e14 = 0, so it is radical
        let radical = trace_form_radical(&p).unwrap();
        assert!(radical.contains(p.element("e14").coords()).unwrap());
        let f5 = Field::prime(5).unwrap();
        let m2 = catalog::matrix_algebra(2, f5).unwrap().algebra;
        assert_eq!(is_semiprime_char0(&m2), Err(CenterError::UnsupportedField(f5)));
    }
}
