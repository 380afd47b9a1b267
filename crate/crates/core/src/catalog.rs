//! Deterministic builders for the example algebras, all realized over the
//! base field, with matrix-unit labels (`e13` is the unit in row 1, column 3).

use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::{Algebra, AlgebraElement, AlgebraError};
use crate::linalg::{Field, Scalar};
use crate::maps::LinearMap;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("invalid size: {0}")]
    InvalidSize(String),
    #[error("unknown catalog algebra {0:?}")]
    UnknownName(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A catalog algebra with the data needed to check results about it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub algebra: Algebra,
    /// Known dimensions, keyed by quantity name (`"Z"`, `"QJCent"`, …).
    pub expected: BTreeMap<&'static str, usize>,
    pub notes: Vec<String>,
    /// Idempotents generating the whole algebra, when it is generated by
    /// idempotents.
    pub idempotent_generators: Option<Vec<AlgebraElement>>,
    /// A nontrivial idempotent to decompose along, if one is known.
    pub split_idempotent: Option<AlgebraElement>,
    /// Whether `split_idempotent` exhibits the algebra as triangular
    /// (`e^⊥Ae = 0`).
    pub triangular: bool,
}

impl CatalogEntry {
    fn new(algebra: Algebra) -> Result<CatalogEntry, CatalogError> {
        algebra.validate().map_err(AlgebraError::from)?;
        let mut expected = BTreeMap::new();
        expected.insert("dim", algebra.dim());
        Ok(CatalogEntry {
            algebra,
            expected,
            notes: Vec::new(),
            idempotent_generators: None,
            split_idempotent: None,
            triangular: false,
        })
    }

    fn expect(mut self, values: &[(&'static str, usize)]) -> Self {
        self.expected.extend(values.iter().copied());
        self
    }

    fn note(mut self, text: &str) -> Self {
        self.notes.push(text.to_string());
        self
    }

    pub fn name(&self) -> &str {
        self.algebra.name()
    }
}

fn unit_label(n: usize, i: usize, j: usize) -> String {
    if n < 10 {
        format!("e{i}{j}")
    } else {
        format!("e{i}_{j}")
    }
}

/// Algebra of `n×n` matrices on the matrix units `e_ij` with `allowed(i, j)`,
/// ordered row by row. `allowed` must describe a unital subalgebra.
fn matrix_units(
    name: String,
    n: usize,
    field: Field,
    allowed: impl Fn(usize, usize) -> bool,
) -> Result<(Algebra, Vec<(usize, usize)>), CatalogError> {
    let positions: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| allowed(i, j)).collect();
    let index: BTreeMap<(usize, usize), usize> = positions.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let mut entries = Vec::new();
    for (a, &(i, j)) in positions.iter().enumerate() {
        for (b, &(k, l)) in positions.iter().enumerate() {
            if j == k {
                entries.push((a, b, index[&(i, l)], field.one()));
            }
        }
    }
    let mut unit = vec![field.zero(); positions.len()];
    for i in 0..n {
        unit[index[&(i, i)]] = field.one();
    }
    let labels = positions.iter().map(|&(i, j)| unit_label(n, i + 1, j + 1)).collect();
    Ok((Algebra::new(name, field, labels, unit, entries)?, positions))
}

/// `e_ii` and `e_ii + e_ij` for every allowed off-diagonal position.
fn idempotent_generators(algebra: &Algebra, positions: &[(usize, usize)]) -> Vec<AlgebraElement> {
    let field = algebra.field();
    let n = algebra.dim();
    let find = |p: (usize, usize)| positions.iter().position(|&q| q == p).expect("diagonal unit present");
    let mut gens: Vec<AlgebraElement> =
        positions.iter().filter(|(i, j)| i == j).map(|&p| AlgebraElement::basis(field, n, find(p))).collect();
    for (k, &(i, j)) in positions.iter().enumerate() {
        if i != j {
            gens.push(AlgebraElement::from_terms(field, n, &[(find((i, i)), 1), (k, 1)]));
        }
    }
    gens
}

fn check_field(field: Field) -> Result<(), CatalogError> {
    if let Field::Prime(p) = field {
        Field::prime(p).map_err(|e| CatalogError::InvalidSize(e.to_string()))?;
    }
    Ok(())
}

/// `M_n(F)`.
pub fn matrix_algebra(n: usize, field: Field) -> Result<CatalogEntry, CatalogError> {
    check_field(field)?;
    if n == 0 {
        return Err(CatalogError::InvalidSize("matrix algebra needs n >= 1".into()));
    }
    let (algebra, positions) = matrix_units(format!("M{n}"), n, field, |_, _| true)?;
    let gens = idempotent_generators(&algebra, &positions);
    let mut entry = CatalogEntry::new(algebra)?.expect(&[("Z", 1), ("Z_J", 1), ("Z_Q", 1), ("Cent", 1), ("QJCent", 1)]);
    if n >= 2 {
        entry = entry.note("full matrix algebra: Z_Q = Z and QJCent = Cent");
        entry.split_idempotent = Some(entry.algebra.element(&unit_label(n, 1, 1)));
    }
    entry.idempotent_generators = Some(gens);
    Ok(entry)
}

/// `T_n(F)`, upper triangular matrices.
pub fn upper_triangular(n: usize, field: Field) -> Result<CatalogEntry, CatalogError> {
    check_field(field)?;
    if n == 0 {
        return Err(CatalogError::InvalidSize("triangular algebra needs n >= 1".into()));
    }
    let (algebra, positions) = matrix_units(format!("T{n}"), n, field, |i, j| i <= j)?;
    let gens = idempotent_generators(&algebra, &positions);
    let mut entry = CatalogEntry::new(algebra)?.expect(&[("Z", 1), ("Z_J", 1), ("Cent", 1), ("JCent", 1)]);
    if n >= 2 {
        entry = entry.note("triangular: JCent = Cent, but QJCent ≠ JCent via x ↦ e1n∘x");
        entry.split_idempotent = Some(entry.algebra.element(&unit_label(n, 1, 1)));
        entry.triangular = true;
    }
    if n == 2 {
        entry = entry.expect(&[("Z_Q", 2), ("QJCent", 2)]);
    }
    entry.idempotent_generators = Some(gens);
    Ok(entry)
}

/// Block upper triangular matrices with diagonal blocks of the given sizes:
/// the finite-dimensional nest algebras.
pub fn block_upper_triangular(block_sizes: &[usize], field: Field) -> Result<CatalogEntry, CatalogError> {
    check_field(field)?;
    if block_sizes.is_empty() || block_sizes.contains(&0) {
        return Err(CatalogError::InvalidSize("block sizes must be nonempty and positive".into()));
    }
    let block_of: Vec<usize> = block_sizes.iter().enumerate().flat_map(|(b, &s)| std::iter::repeat_n(b, s)).collect();
    let n = block_of.len();
    let name = format!(
        "block-{}",
        block_sizes.iter().map(ToString::to_string).collect::<Vec<_>>().join("-")
    );
    let (algebra, positions) = matrix_units(name, n, field, |i, j| block_of[i] <= block_of[j])?;
    let gens = idempotent_generators(&algebra, &positions);
    let mut entry = CatalogEntry::new(algebra)?.expect(&[("Z", 1), ("Cent", 1), ("JCent", 1)]);
    if block_sizes.len() >= 2 {
        let first = block_sizes[0];
        let e = (0..first).fold(entry.algebra.zero(), |acc, i| acc.add(&entry.algebra.element(&unit_label(n, i + 1, i + 1))));
        entry.split_idempotent = Some(e);
        entry.triangular = true;
        entry = entry.note("triangular along the first diagonal block");
    }
    entry.idempotent_generators = Some(gens);
    Ok(entry)
}

/// `{ r·1 + s·e12 + t·e23 + u·e13 } ⊆ T_3(F)`, an algebra satisfying
/// `[[x, y], z] = 0`.
pub fn grassmann3(field: Field) -> Result<CatalogEntry, CatalogError> {
    let t3 = upper_triangular(3, field)?.algebra;
    let basis = [t3.unit(), t3.element("e12"), t3.element("e23"), t3.element("e13")];
    let labels = ["1", "e12", "e23", "e13"].map(String::from).to_vec();
    let algebra = Algebra::from_basis("grassmann3", &t3, &basis, labels)?;
    Ok(CatalogEntry::new(algebra)?
        .expect(&[("Z", 2), ("Z_J", 4), ("Z_Q", 4), ("Cent", 2), ("JCent", 4), ("QJCent", 4)])
        .note("Z = span{1, e13} is a proper subspace of Z_J = Z_Q = A"))
}

/// `{ r·1 + s(e12+e34) + t1·e13 + t2·e24 + u·e14 + v·e23 } ⊆ M_4(F)`, with
/// strict inclusions `Z ⊂ Z_J ⊂ Z_Q`.
pub fn primer_algebra(field: Field) -> Result<CatalogEntry, CatalogError> {
    let m4 = matrix_algebra(4, field)?.algebra;
    let basis = [
        m4.unit(),
        m4.element("e12").add(&m4.element("e34")),
        m4.element("e13"),
        m4.element("e24"),
        m4.element("e14"),
        m4.element("e23"),
    ];
    let labels = ["1", "e12+e34", "e13", "e24", "e14", "e23"].map(String::from).to_vec();
    let algebra = Algebra::from_basis("primer", &m4, &basis, labels)?;
    Ok(CatalogEntry::new(algebra)?
        .expect(&[("Z", 3), ("Z_J", 4), ("Z_Q", 5), ("Cent", 3), ("JCent", 4), ("QJCent", 5)])
        .note("Z = span{1, e13+e24, e14}, Z_J adds e13 and e24 separately, Z_Q adds e23"))
}

/// Direct sum of algebras over a common field; labels become `label#k` for
/// the `k`-th summand (1-based).
pub fn direct_sum(entries: &[CatalogEntry]) -> Result<CatalogEntry, CatalogError> {
    let Some(first) = entries.first() else {
        return Err(CatalogError::InvalidSize("direct sum of nothing".into()));
    };
    let field = first.algebra.field();
    let mut labels = Vec::new();
    let mut unit: Vec<Scalar> = Vec::new();
    let mut table = Vec::new();
    let mut offsets = Vec::new();
    for (k, entry) in entries.iter().enumerate() {
        let a = &entry.algebra;
        if a.field() != field {
            return Err(AlgebraError::from(crate::linalg::LinalgError::FieldMismatch { expected: field, found: a.field() }).into());
        }
        let offset = labels.len();
        offsets.push(offset);
        labels.extend(a.labels().iter().map(|l| format!("{l}#{}", k + 1)));
        unit.extend(a.unit().into_coords());
        table.extend(a.entries().map(|(i, j, m, c)| (i + offset, j + offset, m + offset, c.clone())));
    }
    let name = entries.iter().map(CatalogEntry::name).collect::<Vec<_>>().join("+");
    let algebra = Algebra::new(name, field, labels, unit, table)?;
    let mut entry = CatalogEntry::new(algebra)?;
    if entries.len() >= 2 {
        let n = entry.algebra.dim();
        let mut e = vec![field.zero(); n];
        let first_unit = first.algebra.unit().into_coords();
        e[..first_unit.len()].clone_from_slice(&first_unit);
        entry.split_idempotent = Some(AlgebraElement::new(e));
    }
    Ok(entry.note("direct sum: summand units are central idempotents"))
}

/// The maps `f, h` on [`primer_algebra`] with
/// `f(x)∘y + x∘f(y) = h(x∘y)`: `f` sends the `1`-coordinate `r` to `2r·e23`
/// and `h` sends `(r, s)` to `s·e13 + 4r·e23 + s·e24`.
pub fn primer_example_maps(primer: &Algebra) -> (LinearMap, LinearMap) {
    let field = primer.field();
    let n = primer.dim();
    let two = field.from_i64(2);
    let four = field.from_i64(4);
    let e23 = primer.element("e23");
    let s = primer.index_of("e12+e34").expect("primer basis");
    let one = primer.index_of("1").expect("primer basis");
    let mut f_images = vec![primer.zero(); n];
    f_images[one] = e23.scale(&two);
    let mut h_images = vec![primer.zero(); n];
    h_images[one] = e23.scale(&four);
    h_images[s] = primer.element("e13").add(&primer.element("e24"));
    (
        LinearMap::from_images(field, &f_images).expect("images match dimension"),
        LinearMap::from_images(field, &h_images).expect("images match dimension"),
    )
}

/// The seven algebras every structural check runs on.
pub fn standard(field: Field) -> Result<Vec<CatalogEntry>, CatalogError> {
    Ok(vec![
        matrix_algebra(2, field)?,
        matrix_algebra(3, field)?,
        upper_triangular(2, field)?,
        upper_triangular(3, field)?,
        block_upper_triangular(&[2, 1], field)?,
        grassmann3(field)?,
        primer_algebra(field)?,
    ])
}

/// Looks up `M<n>`, `T<n>`, `block-<a>-<b>-…`, `grassmann3`, `primer`, `F`
/// (the one-dimensional algebra) or `FxF`.
pub fn by_name(name: &str, field: Field) -> Result<CatalogEntry, CatalogError> {
    let unknown = || CatalogError::UnknownName(name.to_string());
    let size = |digits: &str| digits.parse::<usize>().map_err(|_| unknown());
    match name {
        "grassmann3" => grassmann3(field),
        "primer" => primer_algebra(field),
        "F" => Ok(matrix_algebra(1, field)?.algebra.renamed("F")).and_then(CatalogEntry::new),
        "FxF" => {
            let f = matrix_algebra(1, field)?;
            let sum = direct_sum(&[f.clone(), f])?;
            Ok(CatalogEntry { algebra: sum.algebra.renamed("FxF"), ..sum })
        }
        _ => {
            if let Some(rest) = name.strip_prefix("block-") {
                let sizes = rest.split('-').map(size).collect::<Result<Vec<_>, _>>()?;
                block_upper_triangular(&sizes, field)
            } else if let Some(rest) = name.strip_prefix('M') {
                matrix_algebra(size(rest)?, field)
            } else if let Some(rest) = name.strip_prefix('T') {
                upper_triangular(size(rest)?, field)
            } else {
                Err(unknown())
            }
        }
    }
}

/// Names accepted by [`by_name`] for the standard entries plus the small
/// extras.
pub const NAMES: [&str; 10] = ["M2", "M3", "T2", "T3", "block-2-1", "grassmann3", "primer", "F", "FxF", "M1"];

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    /// Multiplies two 4×4 integer matrices.
    fn matmul(a: &[[i64; 4]; 4], b: &[[i64; 4]; 4]) -> [[i64; 4]; 4] {
        let mut c = [[0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                c[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
            }
        }
        c
    }

    fn unit_matrix(positions: &[(usize, usize)]) -> [[i64; 4]; 4] {
        let mut m = [[0; 4]; 4];
        for &(i, j) in positions {
            m[i - 1][j - 1] += 1;
        }
        m
    }

    #[test]
    fn primer_products_match_matrix_multiplication() {
        let p = primer_algebra(Q).unwrap().algebra;
        let embedding: Vec<[[i64; 4]; 4]> = vec![
            unit_matrix(&[(1, 1), (2, 2), (3, 3), (4, 4)]),
            unit_matrix(&[(1, 2), (3, 4)]),
            unit_matrix(&[(1, 3)]),
            unit_matrix(&[(2, 4)]),
            unit_matrix(&[(1, 4)]),
            unit_matrix(&[(2, 3)]),
        ];
        let to_matrix = |x: &AlgebraElement| {
            let mut m = [[0i64; 4]; 4];
            for (c, b) in x.coords().iter().zip(&embedding) {
                let c: i64 = c.to_string().parse().expect("integer coordinates");
                for i in 0..4 {
                    for j in 0..4 {
                        m[i][j] += c * b[i][j];
                    }
                }
            }
            m
        };
        for i in 0..6 {
            for j in 0..6 {
                let product = p.multiply(&p.basis_element(i), &p.basis_element(j)).unwrap();
                assert_eq!(to_matrix(&product), matmul(&embedding[i], &embedding[j]), "pair ({i}, {j})");
            }
        }
        let e23 = p.element("e23");
        let x = p.element("e12+e34");
        assert_eq!(p.multiply(&e23, &x).unwrap(), p.element("e24"));
        assert_eq!(p.multiply(&x, &e23).unwrap(), p.element("e13"));
        assert!(p.jordan(&x, &x).unwrap().is_zero());
    }

    #[test]
    fn builders_validate_and_have_expected_sizes() {
        assert_eq!(matrix_algebra(2, Q).unwrap().algebra.dim(), 4);
        assert_eq!(upper_triangular(3, Q).unwrap().algebra.dim(), 6);
        assert_eq!(block_upper_triangular(&[2, 1], Q).unwrap().algebra.dim(), 7);
        assert_eq!(grassmann3(Q).unwrap().algebra.dim(), 4);
        assert_eq!(primer_algebra(Q).unwrap().algebra.dim(), 6);
        for entry in standard(Field::prime(7).unwrap()).unwrap() {
            entry.algebra.validate().unwrap();
        }
    }

    #[test]
    fn invalid_sizes_are_rejected() {
        assert!(matches!(matrix_algebra(0, Q), Err(CatalogError::InvalidSize(_))));
        assert!(matches!(block_upper_triangular(&[2, 0], Q), Err(CatalogError::InvalidSize(_))));
        assert!(matches!(by_name("X5", Q), Err(CatalogError::UnknownName(_))));
        assert!(matches!(matrix_algebra(2, Field::Prime(2)), Err(CatalogError::InvalidSize(_))));
    }

    #[test]
    fn grassmann_satisfies_double_commutator_identity() {
        let g = grassmann3(Q).unwrap().algebra;
        for i in 0..4 {
            for j in 0..4 {
                let xy = g.lie(&g.basis_element(i), &g.basis_element(j)).unwrap();
                for k in 0..4 {
                    assert!(g.lie(&xy, &g.basis_element(k)).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn lookup_by_name() {
        for name in NAMES {
            let entry = by_name(name, Q).unwrap();
            assert!(entry.algebra.dim() >= 1, "{name}");
        }
        assert_eq!(by_name("block-1-2-1", Q).unwrap().algebra.dim(), 11);
        assert_eq!(by_name("FxF", Q).unwrap().algebra.labels(), ["e11#1", "e11#2"]);
    }

    #[test]
    fn primer_example_maps_match_their_description() {
        let p = primer_algebra(Q).unwrap().algebra;
        let (f, h) = primer_example_maps(&p);
        let two_e23 = p.element("e23").scale(&Q.from_i64(2));
        assert_eq!(f.apply(&p.unit()), two_e23);
        let x = p.element("e12+e34");
        assert_eq!(h.apply(&x), p.element("e13").add(&p.element("e24")));
    }
}
