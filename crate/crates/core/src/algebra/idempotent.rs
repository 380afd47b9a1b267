use crate::linalg::{Matrix, Scalar, Subspace};

use super::{Algebra, AlgebraElement, AlgebraError};

/// An element `e` with `e·e = e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Idempotent {
    element: AlgebraElement,
}

impl Idempotent {
    pub fn new(algebra: &Algebra, element: AlgebraElement) -> Result<Idempotent, AlgebraError> {
        if algebra.multiply(&element, &element)? != element {
            return Err(AlgebraError::NotIdempotent);
        }
        Ok(Idempotent { element })
    }

    pub fn element(&self) -> &AlgebraElement {
        &self.element
    }

    /// `e^⊥ = 1 − e`.
    pub fn complement(&self, algebra: &Algebra) -> AlgebraElement {
        algebra.unit().sub(&self.element)
    }

    /// `e ∉ {0, 1}`.
    pub fn is_nontrivial(&self, algebra: &Algebra) -> bool {
        !self.element.is_zero() && self.element != algebra.unit()
    }
}

/// The four Peirce corners `eAe`, `eAe^⊥`, `e^⊥Ae`, `e^⊥Ae^⊥`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Peirce {
    pub e_a_e: Subspace,
    pub e_a_perp: Subspace,
    pub perp_a_e: Subspace,
    pub perp_a_perp: Subspace,
}

impl Peirce {
    pub fn dims(&self) -> [usize; 4] {
        [self.e_a_e.dim(), self.e_a_perp.dim(), self.perp_a_e.dim(), self.perp_a_perp.dim()]
    }

    pub fn corners(&self) -> [&Subspace; 4] {
        [&self.e_a_e, &self.e_a_perp, &self.perp_a_e, &self.perp_a_perp]
    }
}

fn sandwich(algebra: &Algebra, left: &[Scalar], right: &[Scalar]) -> Subspace {
    let images = (0..algebra.dim())
        .map(|i| {
            let e = algebra.basis_element(i);
            algebra.mul(&algebra.mul(left, e.coords()), right)
        })
        .collect();
    Subspace::from_vectors(algebra.field(), algebra.dim(), images).expect("images have algebra shape")
}

/// Peirce decomposition of `algebra` relative to `e`.
pub fn peirce(algebra: &Algebra, e: &Idempotent) -> Peirce {
    let e_coords = e.element().coords();
    let perp = e.complement(algebra);
    let perp = perp.coords();
    Peirce {
        e_a_e: sandwich(algebra, e_coords, e_coords),
        e_a_perp: sandwich(algebra, e_coords, perp),
        perp_a_e: sandwich(algebra, perp, e_coords),
        perp_a_perp: sandwich(algebra, perp, perp),
    }
}

/// Elements of `corner` killed by right multiplication with every vector of
/// `right_killers` and left multiplication with every vector of `left_killers`.
fn annihilated_part(algebra: &Algebra, corner: &Subspace, right_killers: &Subspace, left_killers: &Subspace) -> Subspace {
    let field = algebra.field();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let images: Vec<Vec<Vec<Scalar>>> = corner
        .basis()
        .iter()
        .map(|w| {
            let mut out: Vec<Vec<Scalar>> = right_killers.basis().iter().map(|m| algebra.mul(w, m)).collect();
            out.extend(left_killers.basis().iter().map(|n| algebra.mul(n, w)));
            out
        })
        .collect();
    let constraints = right_killers.dim() + left_killers.dim();
    for c in 0..constraints {
        for coord in 0..algebra.dim() {
            rows.push(images.iter().map(|per_basis| per_basis[c][coord].clone()).collect());
        }
    }
    let system = Matrix::from_rows(field, corner.dim(), rows).expect("constraint rows have corner width");
    let kernel = system.nullspace();
    let vectors = kernel.basis().iter().map(|k| corner.combine(k)).collect();
    Subspace::from_vectors(field, algebra.dim(), vectors).expect("combinations have algebra shape")
}

/// Whether the corners of a nontrivial idempotent `e` are faithful:
///
/// * `exe · eAe^⊥ = 0 = e^⊥Ae · exe` forces `exe = 0`, and
/// * `eAe^⊥ · e^⊥xe^⊥ = 0 = e^⊥xe^⊥ · e^⊥Ae` forces `e^⊥xe^⊥ = 0`.
///
/// Each side is a linear condition on the corner, so the check is two
/// nullspace computations.
pub fn satisfies_corner_condition(algebra: &Algebra, e: &Idempotent) -> Result<bool, AlgebraError> {
    if !e.is_nontrivial(algebra) {
        return Err(AlgebraError::TrivialIdempotent);
    }
    let p = peirce(algebra, e);
    let e_side = annihilated_part(algebra, &p.e_a_e, &p.e_a_perp, &p.perp_a_e);
    // On the e^⊥ side eAe^⊥ acts from the left and e^⊥Ae from the right.
    let perp_side = annihilated_part(algebra, &p.perp_a_perp, &p.perp_a_e, &p.e_a_perp);
    Ok(e_side.is_zero() && perp_side.is_zero())
}

/// The least subspace containing `generators` (and the unit when
/// `include_unit`) that is closed under multiplication.
pub fn subalgebra_generated(
    algebra: &Algebra,
    generators: &[AlgebraElement],
    include_unit: bool,
) -> Result<Subspace, AlgebraError> {
    if generators.is_empty() {
        return Err(AlgebraError::EmptyGenerators);
    }
    let mut vectors = Vec::new();
    for g in generators {
        algebra.check(g)?;
        vectors.push(g.coords().to_vec());
    }
    if include_unit {
        vectors.push(algebra.unit_coords().to_vec());
    }
    let field = algebra.field();
    let n = algebra.dim();
    let mut space = Subspace::from_vectors(field, n, vectors)?;
    loop {
        let basis = space.basis();
        let mut next: Vec<Vec<Scalar>> = basis.to_vec();
        for x in basis {
            for y in basis {
                next.push(algebra.mul(x, y));
            }
        }
        let grown = Subspace::from_vectors(field, n, next)?;
        if grown.dim() == space.dim() {
            return Ok(space);
        }
        space = grown;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::Field;

    const Q: Field = Field::Rational;

    fn idempotent(algebra: &Algebra, label: &str) -> Idempotent {
        Idempotent::new(algebra, algebra.element(label)).unwrap()
    }

    #[test]
    fn peirce_dimensions() {
        let t2 = catalog::upper_triangular(2, Q).unwrap().algebra;
        assert_eq!(peirce(&t2, &idempotent(&t2, "e11")).dims(), [1, 1, 0, 1]);
        let m2 = catalog::matrix_algebra(2, Q).unwrap().algebra;
        assert_eq!(peirce(&m2, &idempotent(&m2, "e11")).dims(), [1, 1, 1, 1]);
        let one = Idempotent::new(&m2, m2.unit()).unwrap();
        assert_eq!(peirce(&m2, &one).dims(), [4, 0, 0, 0]);
    }

    #[test]
    fn peirce_corners_split_the_algebra() {
        let m3 = catalog::matrix_algebra(3, Q).unwrap().algebra;
        let e = Idempotent::new(&m3, m3.element("e11").add(&m3.element("e22"))).unwrap();
        let p = peirce(&m3, &e);
        let corners = p.corners();
        let total = corners.iter().fold(Subspace::zero(Q, 9), |acc, c| acc.sum(c).unwrap());
        assert!(total.is_full());
        for a in 0..4 {
            for b in a + 1..4 {
                assert!(corners[a].intersect(corners[b]).unwrap().is_zero());
            }
        }
        // eAe · e^⊥Ae^⊥ = 0
        for x in p.e_a_e.basis() {
            for y in p.perp_a_perp.basis() {
                assert!(m3.mul(x, y).iter().all(Scalar::is_zero));
            }
        }
    }

    #[test]
    fn non_idempotent_is_rejected() {
        let m2 = catalog::matrix_algebra(2, Q).unwrap().algebra;
        assert_eq!(Idempotent::new(&m2, m2.element("e12")), Err(AlgebraError::NotIdempotent));
    }

    #[test]
    fn corner_condition_examples() {
        let m2 = catalog::matrix_algebra(2, Q).unwrap().algebra;
        assert!(satisfies_corner_condition(&m2, &idempotent(&m2, "e11")).unwrap());
        let t2 = catalog::upper_triangular(2, Q).unwrap().algebra;
        assert!(satisfies_corner_condition(&t2, &idempotent(&t2, "e11")).unwrap());
        let f = catalog::matrix_algebra(1, Q).unwrap();
        let ff = catalog::direct_sum(&[f.clone(), f]).unwrap().algebra;
        let e = Idempotent::new(&ff, ff.basis_element(0)).unwrap();
        assert!(!satisfies_corner_condition(&ff, &e).unwrap());
        let one = Idempotent::new(&m2, m2.unit()).unwrap();
        assert_eq!(satisfies_corner_condition(&m2, &one), Err(AlgebraError::TrivialIdempotent));
    }

    #[test]
    fn generated_subalgebras() {
        let m2 = catalog::matrix_algebra(2, Q).unwrap().algebra;
        assert_eq!(subalgebra_generated(&m2, &[m2.unit()], false).unwrap().dim(), 1);
        let e11 = m2.element("e11");
        let gens = [e11.clone(), e11.add(&m2.element("e12")), e11.add(&m2.element("e21"))];
        assert_eq!(subalgebra_generated(&m2, &gens, false).unwrap().dim(), 4);
        let t2 = catalog::upper_triangular(2, Q).unwrap().algebra;
        let e11 = t2.element("e11");
        let gens = [e11.clone(), e11.add(&t2.element("e12"))];
        assert!(subalgebra_generated(&t2, &gens, true).unwrap().is_full());
        assert_eq!(subalgebra_generated(&t2, &[], true), Err(AlgebraError::EmptyGenerators));
    }
}
