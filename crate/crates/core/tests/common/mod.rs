//! Test-only oracle and random algebra generator.
//!
//! The oracle never touches the library's system assembly or row reduction:
//! it evaluates each defining identity on the elementary maps `E_ml`
//! (`e_l ↦ e_m`, everything else ↦ 0) through the public product functions,
//! stacks the residuals as columns, and ranks the result with its own
//! elimination.
#![allow(dead_code)]

use jordanlab::algebra::{subalgebra_generated, Algebra, AlgebraElement};
use jordanlab::catalog;
use jordanlab::linalg::{Field, Scalar};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
        rows.swap(rank, p);
        let inv = rows[rank][c].inv().expect("nonzero pivot");
        let pivot: Vec<Scalar> = rows[rank].iter().map(|x| x * &inv).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[c].is_zero() {
                continue;
            }
            let k = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot) {
                *x = &*x - &(&k * y);
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

/// The map sending `e_l` to `e_m`.
fn elementary(a: &Algebra, m: usize, l: usize) -> impl Fn(&AlgebraElement) -> AlgebraElement + '_ {
    move |x: &AlgebraElement| a.basis_element(m).scale(&x.coords()[l])
}

fn jordan(a: &Algebra, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
    a.jordan(x, y).unwrap()
}

fn mul(a: &Algebra, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
    a.multiply(x, y).unwrap()
}

type Map<'a> = &'a dyn Fn(&AlgebraElement) -> AlgebraElement;

/// Residuals of one identity for maps `(f, g, h)` at the basis pair `(x, y)`.
pub type Identity = fn(&Algebra, Map<'_>, Map<'_>, Map<'_>, &AlgebraElement, &AlgebraElement) -> Vec<AlgebraElement>;

pub fn der(a: &Algebra, f: Map<'_>, _: Map<'_>, _: Map<'_>, x: &AlgebraElement, y: &AlgebraElement) -> Vec<AlgebraElement> {
    vec![f(&mul(a, x, y)).sub(&mul(a, &f(x), y)).sub(&mul(a, x, &f(y)))]
}

pub fn jder(a: &Algebra, f: Map<'_>, _: Map<'_>, _: Map<'_>, x: &AlgebraElement, y: &AlgebraElement) -> Vec<AlgebraElement> {
    vec![f(&jordan(a, x, y)).sub(&jordan(a, &f(x), y)).sub(&jordan(a, x, &f(y)))]
}

pub fn cent(a: &Algebra, f: Map<'_>, _: Map<'_>, _: Map<'_>, x: &AlgebraElement, y: &AlgebraElement) -> Vec<AlgebraElement> {
    let fxy = f(&mul(a, x, y));
    vec![fxy.sub(&mul(a, &f(x), y)), fxy.sub(&mul(a, x, &f(y)))]
}

pub fn jcent(a: &Algebra, f: Map<'_>, _: Map<'_>, _: Map<'_>, x: &AlgebraElement, y: &AlgebraElement) -> Vec<AlgebraElement> {
    vec![f(&jordan(a, x, y)).sub(&jordan(a, &f(x), y))]
}

pub fn qjcent(a: &Algebra, f: Map<'_>, _: Map<'_>, _: Map<'_>, x: &AlgebraElement, y: &AlgebraElement) -> Vec<AlgebraElement> {
    vec![jordan(a, &f(x), y).sub(&jordan(a, x, &f(y)))]
}

/// `f(x)∘y + x∘g(y) − h(x∘y)`; with `g = f` this is the existential form
/// of the quasi Jordan derivation identity.
pub fn generalized(a: &Algebra, f: Map<'_>, g: Map<'_>, h: Map<'_>, x: &AlgebraElement, y: &AlgebraElement) -> Vec<AlgebraElement> {
    vec![jordan(a, &f(x), y).add(&jordan(a, x, &g(y))).sub(&h(&jordan(a, x, y)))]
}

fn zero_map(a: &Algebra) -> impl Fn(&AlgebraElement) -> AlgebraElement + '_ {
    move |_: &AlgebraElement| a.zero()
}

/// Columns of the constraint matrix of `identity` in the unknown blocks
/// listed in `blocks` (0 = f, 1 = g, 2 = h); absent blocks are zero maps.
fn constraint_columns(a: &Algebra, identity: Identity, blocks: &[usize]) -> Vec<Vec<Scalar>> {
    let n = a.dim();
    let zero = zero_map(a);
    let mut columns = Vec::new();
    for &block in blocks {
        for l in 0..n {
            for m in 0..n {
                let e = elementary(a, m, l);
                let maps: [Map<'_>; 3] = match block {
                    0 => [&e, &zero, &zero],
                    1 => [&zero, &e, &zero],
                    _ => [&zero, &zero, &e],
                };
                let mut column = Vec::new();
                for i in 0..n {
                    for j in 0..n {
                        let (x, y) = (a.basis_element(i), a.basis_element(j));
                        for r in identity(a, maps[0], maps[1], maps[2], &x, &y) {
                            column.extend(r.into_coords());
                        }
                    }
                }
                columns.push(column);
            }
        }
    }
    columns
}

fn transpose(columns: Vec<Vec<Scalar>>) -> Vec<Vec<Scalar>> {
    let rows = columns.first().map_or(0, Vec::len);
    (0..rows).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect()
}

fn kernel_dim(a: &Algebra, identity: Identity, blocks: &[usize]) -> usize {
    let n = a.dim();
    blocks.len() * n * n - rank(transpose(constraint_columns(a, identity, blocks)))
}

/// Dimension of `{ f : identity(f) = 0 }` for a single-map identity.
pub fn oracle_dim(a: &Algebra, identity: Identity) -> usize {
    kernel_dim(a, identity, &[0])
}

/// Dimension of the linearized quasi Jordan derivation space: the set of
/// `f` for which some `h` satisfies the generalized identity with `g = f`.
pub fn oracle_qjder_dim(a: &Algebra) -> usize {
    fn with_g_equal_f(a: &Algebra, f: Map<'_>, _: Map<'_>, h: Map<'_>, x: &AlgebraElement, y: &AlgebraElement) -> Vec<AlgebraElement> {
        generalized(a, f, f, h, x, y)
    }
    // projection of the (f, h)-kernel onto f: dim K − dim (K ∩ {f = 0})
    kernel_dim(a, with_g_equal_f, &[0, 2]) - kernel_dim(a, with_g_equal_f, &[2])
}

/// Dimension of the projection of the `(f, g, h)`-kernel onto `block`.
pub fn oracle_projection_dim(a: &Algebra, block: usize) -> usize {
    let others: Vec<usize> = (0..3).filter(|&b| b != block).collect();
    kernel_dim(a, generalized, &[0, 1, 2]) - kernel_dim(a, generalized, &others)
}

fn small_scalar(rng: &mut ChaCha8Rng, field: Field) -> Scalar {
    field.from_i64(rng.gen_range(-2..=2))
}

/// A random unital subalgebra of `T4` or `M3` of dimension at most 5,
/// generated by one or two sparse random elements.
pub fn random_algebra(rng: &mut ChaCha8Rng, field: Field, index: usize) -> Algebra {
    let ambient = if rng.gen_bool(0.5) {
        catalog::upper_triangular(4, field).unwrap().algebra
    } else {
        catalog::matrix_algebra(3, field).unwrap().algebra
    };
    let n = ambient.dim();
    loop {
        let count = rng.gen_range(1..=2);
        let gens: Vec<AlgebraElement> = (0..count)
            .map(|_| {
                let mut coords = vec![field.zero(); n];
                for _ in 0..rng.gen_range(1..=3) {
                    coords[rng.gen_range(0..n)] = small_scalar(rng, field);
                }
                AlgebraElement::new(coords)
            })
            .collect();
        let span = subalgebra_generated(&ambient, &gens, true).unwrap();
        if span.dim() <= 5 {
            return ambient.subalgebra(format!("{}-sub{index}", ambient.name()), &span).unwrap();
        }
    }
}
