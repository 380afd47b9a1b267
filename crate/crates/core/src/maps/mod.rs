//! Spaces of centralizer- and derivation-type maps, as canonical subspaces of
//! the `n²`-dimensional space of linear maps `A → A`.
//!
//! | kind     | defining identity (all `x, y`)                         |
//! |----------|--------------------------------------------------------|
//! | `Der`    | `f(xy) = f(x)y + xf(y)`                                |
//! | `JDer`   | `f(x∘y) = f(x)∘y + x∘f(y)`                             |
//! | `Cent`   | `f(xy) = f(x)y = xf(y)`                                |
//! | `JCent`  | `f(x∘y) = f(x)∘y`                                      |
//! | `QJCent` | `f(x)∘y = x∘f(y)`                                      |
//! | `QJDer`  | `f(x)∘y + x∘f(y) = h(x∘y)` for some linear `h`         |
//! | `GJDer`  | `f(x)∘y + x∘g(y) = h(x∘y)` for some linear `g, h`      |
//! | `FGDer`  | the maps `h` occurring in the `GJDer` identity          |
//!
//! `QJDer` is computed from the equivalent linear condition
//! `f(x)∘y + x∘f(y) = f(x∘y) + α∘(x∘y)` with `α = f(1)/2` (put `y = 1` to
//! find `h = f + α∘·`). The existential form is kept as
//! [`qjder_space_by_projection`] for cross-checking.

mod linear_map;
mod system;

pub use linear_map::LinearMap;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraElement};
use crate::linalg::{solve_and_project, LinalgError, Matrix, Scalar, Subspace};
use system::{BasisData, SystemBuilder, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MapKind {
    Der,
    JDer,
    Cent,
    JCent,
    QJCent,
    QJDer,
    GJDer,
    FGDer,
}

impl MapKind {
    pub const ALL: [MapKind; 8] = [
        MapKind::Cent,
        MapKind::JCent,
        MapKind::QJCent,
        MapKind::Der,
        MapKind::JDer,
        MapKind::QJDer,
        MapKind::GJDer,
        MapKind::FGDer,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MapKind::Der => "Der",
            MapKind::JDer => "JDer",
            MapKind::Cent => "Cent",
            MapKind::JCent => "JCent",
            MapKind::QJCent => "QJCent",
            MapKind::QJDer => "QJDer",
            MapKind::GJDer => "GJDer",
            MapKind::FGDer => "FGDer",
        }
    }
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A basis pair `(e_i, e_j)` at which an identity fails, with both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub pair: (usize, usize),
    pub left: AlgebraElement,
    pub right: AlgebraElement,
}

impl Violation {
    pub fn describe(&self, algebra: &Algebra) -> String {
        let labels = algebra.labels();
        format!(
            "at (x, y) = ({}, {}): left = {}, right = {}",
            labels[self.pair.0],
            labels[self.pair.1],
            algebra.format(&self.left),
            algebra.format(&self.right)
        )
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at basis pair ({}, {})", self.pair.0, self.pair.1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("map acts on dimension {found}, algebra has dimension {expected}")]
    Shape { expected: usize, found: usize },
    #[error("map is not in {kind}: identity fails {violation}")]
    NotMember { kind: MapKind, violation: Violation },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

/// A map space together with the kind of maps it holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapSpace {
    kind: MapKind,
    n: usize,
    space: Subspace,
}

impl MapSpace {
    pub fn kind(&self) -> MapKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// The underlying subspace of `F^{n²}` (column-stacked maps).
    pub fn subspace(&self) -> &Subspace {
        &self.space
    }

    pub fn contains(&self, f: &LinearMap) -> bool {
        f.dim() == self.n && self.space.contains(&f.to_vec()).unwrap_or(false)
    }

    pub fn basis_maps(&self) -> Vec<LinearMap> {
        self.space
            .basis()
            .iter()
            .map(|v| LinearMap::from_vec(self.space.field(), self.n, v).expect("basis vector has n² entries"))
            .collect()
    }
}

fn one(data: &BasisData) -> Scalar {
    data.field.one()
}

fn neg_one(data: &BasisData) -> Scalar {
    -data.field.one()
}

fn assemble(algebra: &Algebra, blocks: usize, mut pair_terms: impl FnMut(&BasisData, usize, usize, &mut SystemBuilder)) -> Matrix {
    let data = BasisData::new(algebra);
    let mut builder = SystemBuilder::new(data.field, data.n, blocks);
    for i in 0..data.n {
        for j in 0..data.n {
            pair_terms(&data, i, j, &mut builder);
        }
    }
    builder.build()
}

fn kernel_space(algebra: &Algebra, kind: MapKind, system: Matrix) -> MapSpace {
    MapSpace { kind, n: algebra.dim(), space: system.nullspace() }
}

fn projected_space(algebra: &Algebra, kind: MapKind, system: Matrix, block: usize) -> MapSpace {
    let n2 = algebra.dim() * algebra.dim();
    let space = if n2 == 0 {
        Subspace::zero(algebra.field(), 0)
    } else {
        solve_and_project(&system, block * n2..(block + 1) * n2).expect("block inside system")
    };
    MapSpace { kind, n: algebra.dim(), space }
}

/// Constraint matrix whose kernel is the given directly-defined space.
/// `GJDer` and `FGDer` are existential and have no such matrix.
pub fn constraint_matrix(algebra: &Algebra, kind: MapKind) -> Option<Matrix> {
    let m = match kind {
        MapKind::Der => assemble(algebra, 1, |d, i, j, b| {
            b.push(&[
                Term { block: 0, coeff: one(d), input: &d.prod[i][j], post: None },
                Term { block: 0, coeff: neg_one(d), input: &d.basis[i], post: Some(&d.right[j]) },
                Term { block: 0, coeff: neg_one(d), input: &d.basis[j], post: Some(&d.left[i]) },
            ])
        }),
        MapKind::JDer => assemble(algebra, 1, |d, i, j, b| {
            b.push(&[
                Term { block: 0, coeff: one(d), input: &d.jordan[i][j], post: None },
                Term { block: 0, coeff: neg_one(d), input: &d.basis[i], post: Some(&d.jmul[j]) },
                Term { block: 0, coeff: neg_one(d), input: &d.basis[j], post: Some(&d.jmul[i]) },
            ])
        }),
        MapKind::Cent => assemble(algebra, 1, |d, i, j, b| {
            b.push(&[
                Term { block: 0, coeff: one(d), input: &d.prod[i][j], post: None },
                Term { block: 0, coeff: neg_one(d), input: &d.basis[i], post: Some(&d.right[j]) },
            ]);
            b.push(&[
                Term { block: 0, coeff: one(d), input: &d.prod[i][j], post: None },
                Term { block: 0, coeff: neg_one(d), input: &d.basis[j], post: Some(&d.left[i]) },
            ]);
        }),
        MapKind::JCent => assemble(algebra, 1, |d, i, j, b| {
            b.push(&[
                Term { block: 0, coeff: one(d), input: &d.jordan[i][j], post: None },
                Term { block: 0, coeff: neg_one(d), input: &d.basis[i], post: Some(&d.jmul[j]) },
            ])
        }),
        MapKind::QJCent => assemble(algebra, 1, |d, i, j, b| {
            b.push(&[
                Term { block: 0, coeff: one(d), input: &d.basis[i], post: Some(&d.jmul[j]) },
                Term { block: 0, coeff: neg_one(d), input: &d.basis[j], post: Some(&d.jmul[i]) },
            ])
        }),
        MapKind::QJDer => {
            let half = algebra.field().ratio(1, 2).expect("characteristic is not 2");
            assemble(algebra, 1, |d, i, j, b| {
                let by_pair_product = algebra.jordan_mul_matrix(&d.jordan[i][j]);
                b.push(&[
                    Term { block: 0, coeff: one(d), input: &d.basis[i], post: Some(&d.jmul[j]) },
                    Term { block: 0, coeff: one(d), input: &d.basis[j], post: Some(&d.jmul[i]) },
                    Term { block: 0, coeff: neg_one(d), input: &d.jordan[i][j], post: None },
                    Term { block: 0, coeff: -&half, input: &d.unit, post: Some(&by_pair_product) },
                ])
            })
        }
        MapKind::GJDer | MapKind::FGDer => return None,
    };
    Some(m)
}

fn direct_space(algebra: &Algebra, kind: MapKind) -> MapSpace {
    let system = constraint_matrix(algebra, kind).expect("directly defined kind");
    kernel_space(algebra, kind, system)
}

pub fn der_space(algebra: &Algebra) -> MapSpace {
    direct_space(algebra, MapKind::Der)
}

pub fn jder_space(algebra: &Algebra) -> MapSpace {
    direct_space(algebra, MapKind::JDer)
}

pub fn cent_space(algebra: &Algebra) -> MapSpace {
    direct_space(algebra, MapKind::Cent)
}

pub fn jcent_space(algebra: &Algebra) -> MapSpace {
    direct_space(algebra, MapKind::JCent)
}

pub fn qjcent_space(algebra: &Algebra) -> MapSpace {
    direct_space(algebra, MapKind::QJCent)
}

pub fn qjder_space(algebra: &Algebra) -> MapSpace {
    direct_space(algebra, MapKind::QJDer)
}

/// Unknowns `(f, g, h)` of `f(x)∘y + x∘g(y) − h(x∘y) = 0`.
fn triple_system(algebra: &Algebra) -> Matrix {
    assemble(algebra, 3, |d, i, j, b| {
        b.push(&[
            Term { block: 0, coeff: one(d), input: &d.basis[i], post: Some(&d.jmul[j]) },
            Term { block: 1, coeff: one(d), input: &d.basis[j], post: Some(&d.jmul[i]) },
            Term { block: 2, coeff: neg_one(d), input: &d.jordan[i][j], post: None },
        ])
    })
}

pub fn gjder_space(algebra: &Algebra) -> MapSpace {
    projected_space(algebra, MapKind::GJDer, triple_system(algebra), 0)
}

pub fn fgder_space(algebra: &Algebra) -> MapSpace {
    projected_space(algebra, MapKind::FGDer, triple_system(algebra), 2)
}

/// `QJDer` from its existential definition: project the solutions `(f, h)` of
/// `f(x)∘y + x∘f(y) = h(x∘y)` onto `f`.
pub fn qjder_space_by_projection(algebra: &Algebra) -> MapSpace {
    let system = assemble(algebra, 2, |d, i, j, b| {
        b.push(&[
            Term { block: 0, coeff: one(d), input: &d.basis[i], post: Some(&d.jmul[j]) },
            Term { block: 0, coeff: one(d), input: &d.basis[j], post: Some(&d.jmul[i]) },
            Term { block: 1, coeff: neg_one(d), input: &d.jordan[i][j], post: None },
        ])
    });
    projected_space(algebra, MapKind::QJDer, system, 0)
}

/// Computes the space of the given kind.
pub fn space(algebra: &Algebra, kind: MapKind) -> MapSpace {
    match kind {
        MapKind::GJDer => gjder_space(algebra),
        MapKind::FGDer => fgder_space(algebra),
        _ => direct_space(algebra, kind),
    }
}

fn check_shape(algebra: &Algebra, f: &LinearMap) -> Result<(), MapError> {
    if f.dim() != algebra.dim() {
        return Err(MapError::Shape { expected: algebra.dim(), found: f.dim() });
    }
    if f.field() != algebra.field() {
        return Err(LinalgError::FieldMismatch { expected: algebra.field(), found: f.field() }.into());
    }
    Ok(())
}

fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// First basis pair where `f` breaks the defining identity of `kind`, with
/// both sides evaluated. Existential kinds (`GJDer`, `FGDer`) are not
/// supported here.
pub fn first_violation(algebra: &Algebra, kind: MapKind, f: &LinearMap) -> Result<Option<Violation>, MapError> {
    check_shape(algebra, f)?;
    let data = BasisData::new(algebra);
    let n = data.n;
    let images: Vec<Vec<Scalar>> = (0..n).map(|j| f.image_of_basis(j).into_coords()).collect();
    let half = algebra.field().ratio(1, 2).expect("characteristic is not 2");
    let alpha: Vec<Scalar> = f.apply_raw(&data.unit).iter().map(|c| c * &half).collect();
    for i in 0..n {
        for j in 0..n {
            let sides: Vec<(Vec<Scalar>, Vec<Scalar>)> = match kind {
                MapKind::Der => vec![(
                    f.apply_raw(&data.prod[i][j]),
                    add(&algebra.mul(&images[i], &data.basis[j]), &algebra.mul(&data.basis[i], &images[j])),
                )],
                MapKind::JDer => vec![(
                    f.apply_raw(&data.jordan[i][j]),
                    add(&algebra.jordan_raw(&images[i], &data.basis[j]), &algebra.jordan_raw(&data.basis[i], &images[j])),
                )],
                MapKind::Cent => {
                    let fxy = f.apply_raw(&data.prod[i][j]);
                    vec![
                        (fxy.clone(), algebra.mul(&images[i], &data.basis[j])),
                        (fxy, algebra.mul(&data.basis[i], &images[j])),
                    ]
                }
                MapKind::JCent => {
                    vec![(f.apply_raw(&data.jordan[i][j]), algebra.jordan_raw(&images[i], &data.basis[j]))]
                }
                MapKind::QJCent => vec![(
                    algebra.jordan_raw(&images[i], &data.basis[j]),
                    algebra.jordan_raw(&data.basis[i], &images[j]),
                )],
                MapKind::QJDer => vec![(
                    add(&algebra.jordan_raw(&images[i], &data.basis[j]), &algebra.jordan_raw(&data.basis[i], &images[j])),
                    add(&f.apply_raw(&data.jordan[i][j]), &algebra.jordan_raw(&alpha, &data.jordan[i][j])),
                )],
                MapKind::GJDer | MapKind::FGDer => {
                    return Err(MapError::Inconsistent(format!("{kind} has no pointwise identity")))
                }
            };
            for (left, right) in sides {
                if left != right {
                    return Ok(Some(Violation {
                        pair: (i, j),
                        left: AlgebraElement::new(left),
                        right: AlgebraElement::new(right),
                    }));
                }
            }
        }
    }
    Ok(None)
}

fn require(algebra: &Algebra, kind: MapKind, f: &LinearMap) -> Result<(), MapError> {
    match first_violation(algebra, kind, f)? {
        Some(violation) => Err(MapError::NotMember { kind, violation }),
        None => Ok(()),
    }
}

/// First basis pair where `f(x)∘y + x∘g(y) = h(x∘y)` fails.
pub fn check_generalized_identity(
    algebra: &Algebra,
    f: &LinearMap,
    g: &LinearMap,
    h: &LinearMap,
) -> Option<Violation> {
    let n = algebra.dim();
    for i in 0..n {
        for j in 0..n {
            let x = algebra.basis_element(i);
            let y = algebra.basis_element(j);
            let left = add(
                &algebra.jordan_raw(f.apply(&x).coords(), y.coords()),
                &algebra.jordan_raw(x.coords(), g.apply(&y).coords()),
            );
            let right = h.apply_raw(&algebra.jordan_raw(x.coords(), y.coords()));
            if left != right {
                return Some(Violation { pair: (i, j), left: AlgebraElement::new(left), right: AlgebraElement::new(right) });
            }
        }
    }
    None
}

/// `f = f1 + f2` with `f1 = (f+g)/2 ∈ QJDer` and `f2 = (f−g)/2 ∈ QJCent`,
/// where `(g, h)` witnesses `f(x)∘y + x∘g(y) = h(x∘y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GjDecomposition {
    pub f1: LinearMap,
    pub f2: LinearMap,
    pub g: LinearMap,
    pub h: LinearMap,
}

/// Splits a generalized Jordan derivation into its quasi Jordan derivation
/// and quasi Jordan centralizer parts.
///
/// The witness is the particular solution, with all free parameters zero, of
/// the system in the unknowns `(h, g − f)` taken in that order. Putting
/// `g − f` last makes the choice `g = f` whenever one exists, so Jordan
/// centralizers and Jordan derivations come back with `f2 = 0`.
pub fn decompose_gjder(algebra: &Algebra, f: &LinearMap) -> Result<GjDecomposition, MapError> {
    check_shape(algebra, f)?;
    let data = BasisData::new(algebra);
    let n = data.n;
    let field = data.field;
    let images: Vec<Vec<Scalar>> = (0..n).map(|j| f.image_of_basis(j).into_coords()).collect();

    // h(e_i∘e_j) − e_i∘δ(e_j) = f(e_i)∘e_j + e_i∘f(e_j), with δ = g − f
    let mut builder = SystemBuilder::new(field, n, 2);
    let mut rhs = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            builder.push(&[
                Term { block: 0, coeff: one(&data), input: &data.jordan[i][j], post: None },
                Term { block: 1, coeff: neg_one(&data), input: &data.basis[j], post: Some(&data.jmul[i]) },
            ]);
            rhs.extend(add(
                &algebra.jordan_raw(&images[i], &data.basis[j]),
                &algebra.jordan_raw(&data.basis[i], &images[j]),
            ));
        }
    }
    let cols = builder.cols();
    let rows = builder.into_rows();
    let system = Matrix::from_rows(field, cols, rows.clone())?;
    let Some(solution) = system.solve(&rhs)? else {
        let violation = locate_inconsistency(algebra, f, &rows, &rhs, cols);
        return Err(MapError::NotMember { kind: MapKind::GJDer, violation });
    };
    let n2 = n * n;
    let h = LinearMap::from_vec(field, n, &solution[..n2])?;
    let delta = LinearMap::from_vec(field, n, &solution[n2..])?;
    let g = f.add(&delta);
    let half = field.ratio(1, 2).expect("characteristic is not 2");
    let f1 = f.add(&g).scale(&half);
    let f2 = f.sub(&g).scale(&half);
    if let Some(v) = check_generalized_identity(algebra, f, &g, &h) {
        return Err(MapError::Inconsistent(format!("witness fails the generalized identity: {}", v.describe(algebra))));
    }
    if first_violation(algebra, MapKind::QJDer, &f1)?.is_some() || first_violation(algebra, MapKind::QJCent, &f2)?.is_some() {
        return Err(MapError::Inconsistent("decomposition parts are not in QJDer and QJCent".into()));
    }
    Ok(GjDecomposition { f1, f2, g, h })
}

/// Finds the first basis pair whose constraints make the witness system
/// unsolvable, and evaluates both sides of the generalized identity there
/// using the witness for all earlier pairs.
fn locate_inconsistency(algebra: &Algebra, f: &LinearMap, rows: &[Vec<Scalar>], rhs: &[Scalar], cols: usize) -> Violation {
    let n = algebra.dim();
    let field = algebra.field();
    let mut reducer = crate::linalg::RowReducer::new(cols + 1);
    let mut failing = None;
    'pairs: for p in 0..n * n {
        for r in p * n..(p + 1) * n {
            let mut row = rows[r].clone();
            row.push(rhs[r].clone());
            if reducer.insert(row) == Some(cols) {
                failing = Some(p);
                break 'pairs;
            }
        }
    }
    let p = failing.expect("inconsistent system has a failing pair");
    let prefix = Matrix::from_rows(field, cols, rows[..p * n].to_vec()).expect("prefix rows");
    let witness = prefix
        .solve(&rhs[..p * n])
        .expect("prefix shapes agree")
        .expect("constraints before the failing pair are consistent");
    let n2 = n * n;
    let h = LinearMap::from_vec(field, n, &witness[..n2]).expect("block size");
    let g = f.add(&LinearMap::from_vec(field, n, &witness[n2..]).expect("block size"));
    let (i, j) = (p / n, p % n);
    let x = algebra.basis_element(i);
    let y = algebra.basis_element(j);
    let left = add(
        &algebra.jordan_raw(f.apply(&x).coords(), y.coords()),
        &algebra.jordan_raw(x.coords(), g.apply(&y).coords()),
    );
    let right = h.apply_raw(&algebra.jordan_raw(x.coords(), y.coords()));
    Violation { pair: (i, j), left: AlgebraElement::new(left), right: AlgebraElement::new(right) }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// `f = (α∘·) + d` with `α∘·` a Jordan centralizer and `d` a Jordan derivation.
    Split { jcent_part: LinearMap, jder_part: LinearMap },
    /// `α ∉ Z_J`: `[[α, e_i], e_j] = value ≠ 0` at `pair`.
    Obstructed { pair: (usize, usize), value: AlgebraElement },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QjDerClassification {
    /// `f(1)/2`
    pub alpha: AlgebraElement,
    pub verdict: Verdict,
}

fn half_image_of_unit(algebra: &Algebra, f: &LinearMap) -> AlgebraElement {
    let half = algebra.field().ratio(1, 2).expect("characteristic is not 2");
    f.apply(&algebra.unit()).scale(&half)
}

/// Decides whether a quasi Jordan derivation lies in `JCent + JDer`, which
/// happens exactly when `f(1) ∈ Z_J`.
pub fn classify_qjder(algebra: &Algebra, f: &LinearMap) -> Result<QjDerClassification, MapError> {
    require(algebra, MapKind::QJDer, f)?;
    let alpha = half_image_of_unit(algebra, f);
    let n = algebra.dim();
    for i in 0..n {
        for j in 0..n {
            let inner = algebra.lie_raw(alpha.coords(), algebra.basis_element(i).coords());
            let value = algebra.lie_raw(&inner, algebra.basis_element(j).coords());
            if value.iter().any(|c| !c.is_zero()) {
                return Ok(QjDerClassification {
                    alpha,
                    verdict: Verdict::Obstructed { pair: (i, j), value: AlgebraElement::new(value) },
                });
            }
        }
    }
    let jcent_part = LinearMap::jordan_multiplication(algebra, &alpha);
    let jder_part = f.sub(&jcent_part);
    if let Some(v) = first_violation(algebra, MapKind::JDer, &jder_part)? {
        return Err(MapError::Inconsistent(format!("Jordan derivation part fails {}", v.describe(algebra))));
    }
    Ok(QjDerClassification { alpha, verdict: Verdict::Split { jcent_part, jder_part } })
}

/// For a quasi Jordan centralizer `f`, the element `α = f(1)/2`; then
/// `f = α∘·` and `α ∈ Z_Q`.
pub fn extract_alpha(algebra: &Algebra, f: &LinearMap) -> Result<AlgebraElement, MapError> {
    require(algebra, MapKind::QJCent, f)?;
    let alpha = half_image_of_unit(algebra, f);
    if LinearMap::jordan_multiplication(algebra, &alpha) != *f {
        return Err(MapError::Inconsistent("f differs from x ↦ α∘x".into()));
    }
    let n = algebra.dim();
    for i in 0..n {
        for j in 0..n {
            let c = algebra.lie_raw(algebra.basis_element(i).coords(), algebra.basis_element(j).coords());
            if algebra.lie_raw(alpha.coords(), &c).iter().any(|x| !x.is_zero()) {
                return Err(MapError::Inconsistent(format!("α fails [α, [e{i}, e{j}]] = 0")));
            }
        }
    }
    Ok(alpha)
}
