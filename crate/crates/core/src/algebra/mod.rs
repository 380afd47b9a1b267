//! Unital associative algebras given by structure constants.
//!
//! An algebra of dimension `n` has basis `e_0, …, e_{n-1}` and a sparse table
//! `e_i · e_j = Σ_k c_ijk e_k`. Elements are coordinate vectors in that basis.

mod idempotent;

pub use idempotent::{peirce, satisfies_corner_condition, subalgebra_generated, Idempotent, Peirce};

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::linalg::{check_field, Field, LinalgError, Matrix, Scalar, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("element has {found} coordinates, algebra has dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("expected {expected} labels, found {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("idempotent must differ from 0 and 1")]
    TrivialIdempotent,
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("basis vectors are linearly dependent")]
    DependentBasis,
    #[error("product of basis elements {left} and {right} leaves the span")]
    NotClosed { left: usize, right: usize },
    #[error("unit is not in the span of the basis")]
    UnitNotInSpan,
    #[error("invalid algebra: {0}")]
    Invalid(#[from] ValidationError),
}

/// First axiom violation found by [`Algebra::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("characteristic {0} is not supported (need an odd prime or 0)")]
    Characteristic(u64),
    #[error("unit fails u·e{index} = e{index}: got {got:?}")]
    LeftUnit { index: usize, got: Vec<String> },
    #[error("unit fails e{index}·u = e{index}: got {got:?}")]
    RightUnit { index: usize, got: Vec<String> },
    #[error("(e{i}e{j})e{k} = {left:?} but e{i}(e{j}e{k}) = {right:?}")]
    Associativity { i: usize, j: usize, k: usize, left: Vec<String>, right: Vec<String> },
}

/// A coordinate vector in an algebra's basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    coords: Vec<Scalar>,
}

impl AlgebraElement {
    pub fn new(coords: Vec<Scalar>) -> Self {
        AlgebraElement { coords }
    }

    pub fn zero(field: Field, dim: usize) -> Self {
        AlgebraElement { coords: vec![field.zero(); dim] }
    }

    pub fn basis(field: Field, dim: usize, index: usize) -> Self {
        let mut x = Self::zero(field, dim);
        x.coords[index] = field.one();
        x
    }

    /// `Σ c·e_i` from `(index, integer coefficient)` pairs.
    pub fn from_terms(field: Field, dim: usize, terms: &[(usize, i64)]) -> Self {
        let mut x = Self::zero(field, dim);
        for &(i, c) in terms {
            x.coords[i] += &field.from_i64(c);
        }
        x
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        Self::new(self.coords.iter().map(|a| a * k).collect())
    }
}

/// A finite-dimensional algebra over a field, stored by sparse structure
/// constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    name: String,
    field: Field,
    dim: usize,
    table: BTreeMap<(usize, usize), Vec<(usize, Scalar)>>,
    unit: Vec<Scalar>,
    labels: Vec<String>,
}

impl Algebra {
    /// Assembles an algebra from `(i, j, k, c_ijk)` entries. Duplicate entries
    /// are summed and zero constants dropped. Only shapes and fields are
    /// checked here; the axioms are checked by [`Algebra::validate`].
    pub fn new(
        name: impl Into<String>,
        field: Field,
        labels: Vec<String>,
        unit: Vec<Scalar>,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Algebra, AlgebraError> {
        let dim = labels.len();
        if unit.len() != dim {
            return Err(AlgebraError::DimensionMismatch { expected: dim, found: unit.len() });
        }
        check_field(field, &unit)?;
        let mut dense: BTreeMap<(usize, usize), BTreeMap<usize, Scalar>> = BTreeMap::new();
        for (i, j, k, c) in entries {
            for index in [i, j, k] {
                if index >= dim {
                    return Err(AlgebraError::IndexOutOfRange { index, dim });
                }
            }
            check_field(field, std::slice::from_ref(&c))?;
            *dense.entry((i, j)).or_default().entry(k).or_insert_with(|| field.zero()) += &c;
        }
        let table = dense
            .into_iter()
            .map(|(pair, terms)| (pair, terms.into_iter().filter(|(_, c)| !c.is_zero()).collect::<Vec<_>>()))
            .filter(|(_, terms)| !terms.is_empty())
            .collect();
        Ok(Algebra { name: name.into(), field, dim, table, unit, labels })
    }

    /// The algebra spanned by `basis` inside `ambient`, with structure
    /// constants re-expressed in that basis. The span must contain the unit
    /// and be closed under multiplication.
    pub fn from_basis(
        name: impl Into<String>,
        ambient: &Algebra,
        basis: &[AlgebraElement],
        labels: Vec<String>,
    ) -> Result<Algebra, AlgebraError> {
        if labels.len() != basis.len() {
            return Err(AlgebraError::LabelCount { expected: basis.len(), found: labels.len() });
        }
        let field = ambient.field;
        for b in basis {
            ambient.check(b)?;
        }
        // Columns are the basis vectors; coordinates come from solving.
        let rows = (0..ambient.dim)
            .map(|r| basis.iter().map(|b| b.coords[r].clone()).collect())
            .collect();
        let columns = Matrix::from_rows(field, basis.len(), rows)?;
        if columns.rank() != basis.len() {
            return Err(AlgebraError::DependentBasis);
        }
        let express = |v: &[Scalar]| columns.solve(v).expect("shapes agree");
        let mut entries = Vec::new();
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                let product = ambient.mul(&x.coords, &y.coords);
                let coords = express(&product).ok_or(AlgebraError::NotClosed { left: i, right: j })?;
                entries.extend(coords.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (i, j, k, c)));
            }
        }
        let unit = express(&ambient.unit).ok_or(AlgebraError::UnitNotInSpan)?;
        Algebra::new(name, field, labels, unit, entries)
    }

    /// The subalgebra on the canonical basis of `space`, labelled by the
    /// ambient expansion of each basis vector.
    pub fn subalgebra(&self, name: impl Into<String>, space: &Subspace) -> Result<Algebra, AlgebraError> {
        let basis: Vec<AlgebraElement> = space.basis().iter().cloned().map(AlgebraElement::new).collect();
        let labels = basis.iter().map(|b| self.format(b)).collect();
        Algebra::from_basis(name, self, &basis, labels)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> AlgebraElement {
        AlgebraElement::new(self.unit.clone())
    }

    pub(crate) fn unit_coords(&self) -> &[Scalar] {
        &self.unit
    }

    /// Nonzero structure constants as `(i, j, k, c_ijk)`, ordered by `(i, j, k)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        self.table.iter().flat_map(|(&(i, j), terms)| terms.iter().map(move |(k, c)| (i, j, *k, c)))
    }

    /// `e_i · e_j` as sparse `(k, c)` terms.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        self.table.get(&(i, j)).map_or(&[], Vec::as_slice)
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement::zero(self.field, self.dim)
    }

    pub fn basis_element(&self, index: usize) -> AlgebraElement {
        AlgebraElement::basis(self.field, self.dim, index)
    }

    /// Basis index of the element labelled `label`.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The basis element labelled `label`. Panics if absent.
    pub fn element(&self, label: &str) -> AlgebraElement {
        let index = self.index_of(label).unwrap_or_else(|| panic!("no basis element labelled {label}"));
        self.basis_element(index)
    }

    pub(crate) fn check(&self, x: &AlgebraElement) -> Result<(), AlgebraError> {
        if x.dim() != self.dim {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim, found: x.dim() });
        }
        check_field(self.field, &x.coords)?;
        Ok(())
    }

    /// Product on raw coordinate slices; lengths must equal `dim`.
    pub(crate) fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (&(i, j), terms) in &self.table {
            if x[i].is_zero() || y[j].is_zero() {
                continue;
            }
            let xy = &x[i] * &y[j];
            for (k, c) in terms {
                out[*k] += &(&xy * c);
            }
        }
        out
    }

    pub(crate) fn jordan_raw(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let a = self.mul(x, y);
        let b = self.mul(y, x);
        a.iter().zip(&b).map(|(p, q)| p + q).collect()
    }

    pub(crate) fn lie_raw(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let a = self.mul(x, y);
        let b = self.mul(y, x);
        a.iter().zip(&b).map(|(p, q)| p - q).collect()
    }

    pub fn multiply(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.check(x)?;
        self.check(y)?;
        Ok(AlgebraElement::new(self.mul(&x.coords, &y.coords)))
    }

    /// Jordan product `x∘y = xy + yx`.
    pub fn jordan(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.check(x)?;
        self.check(y)?;
        Ok(AlgebraElement::new(self.jordan_raw(&x.coords, &y.coords)))
    }

    /// Lie bracket `[x, y] = xy − yx`.
    pub fn lie(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.check(x)?;
        self.check(y)?;
        Ok(AlgebraElement::new(self.lie_raw(&x.coords, &y.coords)))
    }

    /// Matrix of `v ↦ x·v` (column `m` is `x·e_m`).
    pub fn left_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        self.operator_matrix(|e| self.mul(x, e))
    }

    /// Matrix of `v ↦ v·x`.
    pub fn right_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        self.operator_matrix(|e| self.mul(e, x))
    }

    /// Matrix of `v ↦ v∘x`.
    pub fn jordan_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        self.operator_matrix(|e| self.jordan_raw(e, x))
    }

    /// Matrix of `v ↦ [v, x]`.
    pub fn bracket_matrix(&self, x: &[Scalar]) -> Matrix {
        self.operator_matrix(|e| self.lie_raw(e, x))
    }

    fn operator_matrix(&self, op: impl Fn(&[Scalar]) -> Vec<Scalar>) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dim, self.dim);
        for col in 0..self.dim {
            let image = op(self.basis_element(col).coords());
            for (row, value) in image.into_iter().enumerate() {
                if !value.is_zero() {
                    m.set(row, col, value);
                }
            }
        }
        m
    }

    /// Checks characteristic, the unit axioms, and associativity on every basis
    /// triple, reporting the first violation.
    pub fn validate(&self) -> Result<(), ValidationError> {
        if let Field::Prime(p) = self.field {
            if Field::prime(p).is_err() {
                return Err(ValidationError::Characteristic(p));
            }
        }
        let show = |v: Vec<Scalar>| v.iter().map(ToString::to_string).collect::<Vec<_>>();
        for index in 0..self.dim {
            let e = self.basis_element(index);
            let left = self.mul(&self.unit, e.coords());
            if left != e.coords {
                return Err(ValidationError::LeftUnit { index, got: show(left) });
            }
            let right = self.mul(e.coords(), &self.unit);
            if right != e.coords {
                return Err(ValidationError::RightUnit { index, got: show(right) });
            }
        }
        let basis: Vec<AlgebraElement> = (0..self.dim).map(|i| self.basis_element(i)).collect();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.mul(basis[i].coords(), basis[j].coords());
                for k in 0..self.dim {
                    let left = self.mul(&ij, basis[k].coords());
                    let jk = self.mul(basis[j].coords(), basis[k].coords());
                    let right = self.mul(basis[i].coords(), &jk);
                    if left != right {
                        return Err(ValidationError::Associativity { i, j, k, left: show(left), right: show(right) });
                    }
                }
            }
        }
        Ok(())
    }

    /// Renders `x` with this algebra's labels, e.g. `2e23 - (1/2)e13`.
    pub fn format(&self, x: &AlgebraElement) -> String {
        format_coords(&self.labels, x.coords())
    }

    /// Returns a copy with a different display name.
    pub fn renamed(mut self, name: impl Into<String>) -> Algebra {
        self.name = name.into();
        self
    }
}

pub(crate) fn format_coords(labels: &[String], coords: &[Scalar]) -> String {
    let mut out = String::new();
    for (label, c) in labels.iter().zip(coords) {
        if c.is_zero() {
            continue;
        }
        let text = c.to_string();
        let (negative, magnitude) = match text.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, text),
        };
        let sign = match (out.is_empty(), negative) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        let label = if label.contains(['+', '-', ' ']) { format!("({label})") } else { label.clone() };
        let term = if magnitude == "1" {
            label
        } else if magnitude.contains('/') {
            format!("({magnitude}){label}")
        } else {
            format!("{magnitude}{label}")
        };
        out.push_str(sign);
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {} over {})", self.name, self.dim, self.field)
    }
}
