mod common;

use jordanlab::algebra::Algebra;
use jordanlab::centers;
use jordanlab::linalg::{solve_and_project, Field, Matrix, Scalar, Subspace};
use jordanlab::maps::{self, MapKind};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::prime(7).unwrap()), Just(Field::prime(3).unwrap())]
}

fn matrix(field: Field, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-3i64..=3, rows * cols).prop_map(move |entries| {
        let rows = entries.chunks(cols).map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
        Matrix::from_rows(field, cols, rows).unwrap()
    })
}

fn field_and_matrix() -> impl Strategy<Value = Matrix> {
    (fields(), 1usize..6, 1usize..6).prop_flat_map(|(f, r, c)| matrix(f, r, c))
}

fn subspace_pair() -> impl Strategy<Value = (Subspace, Subspace)> {
    (fields(), 1usize..6, 0usize..5, 0usize..5).prop_flat_map(|(f, n, a, b)| {
        (matrix(f, a.max(1), n), matrix(f, b.max(1), n), Just(a), Just(b)).prop_map(move |(u, w, a, b)| {
            let span = |m: Matrix, k: usize| Subspace::from_vectors(f, n, m.to_rows().into_iter().take(k).collect()).unwrap();
            (span(u, a), span(w, b))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent_and_rank_is_transpose_invariant(m in field_and_matrix()) {
        let once = m.rref();
        let twice = once.matrix.rref();
        prop_assert_eq!(&twice.matrix, &once.matrix);
        prop_assert_eq!(m.rank(), m.transpose().rank());
        prop_assert_eq!(once.pivots.len(), once.rank);
    }

    #[test]
    fn nullspace_is_annihilated_and_has_complementary_dimension(m in field_and_matrix()) {
        let kernel = m.nullspace();
        prop_assert_eq!(kernel.dim() + m.rank(), m.cols());
        for v in kernel.basis() {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn solutions_solve(m in field_and_matrix(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x: Vec<Scalar> = (0..m.cols()).map(|_| m.field().from_i64(rand::Rng::gen_range(&mut rng, -3..=3))).collect();
        let b = m.mul_vec(&x).unwrap();
        let solution = m.solve(&b).unwrap().expect("b is in the column space");
        prop_assert_eq!(m.mul_vec(&solution).unwrap(), b);
    }

    #[test]
    fn grassmann_dimension_formula((u, w) in subspace_pair()) {
        let sum = u.sum(&w).unwrap();
        let meet = u.intersect(&w).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + w.dim());
        prop_assert!(meet.is_subspace_of(&u).unwrap() && meet.is_subspace_of(&w).unwrap());
        prop_assert!(u.is_subspace_of(&sum).unwrap() && w.is_subspace_of(&sum).unwrap());
        prop_assert_eq!(u.intersect(&w).unwrap(), w.intersect(&u).unwrap());
    }

    #[test]
    fn canonical_basis_ignores_the_spanning_set((u, _) in subspace_pair(), k in 1i64..=2) {
        let field = u.field();
        // scaled, reversed and padded with a combination of the others
        let mut generators: Vec<Vec<Scalar>> = u.basis().iter().rev().map(|v| v.iter().map(|x| x * &field.from_i64(k)).collect()).collect();
        if u.dim() >= 2 {
            generators.push(u.basis()[0].iter().zip(&u.basis()[1]).map(|(a, b)| a + b).collect());
        }
        prop_assert_eq!(Subspace::from_vectors(field, u.ambient_dim(), generators).unwrap(), u.clone());
    }
}

/// Every vector of a subspace over a small prime field.
fn enumerate(s: &Subspace) -> Vec<Vec<Scalar>> {
    let p = s.field().characteristic() as i64;
    let mut out = vec![vec![s.field().zero(); s.ambient_dim()]];
    for b in s.basis() {
        out = out
            .iter()
            .flat_map(|v| (0..p).map(move |c| v.iter().zip(b).map(|(x, y)| x + &(&s.field().from_i64(c) * y)).collect()))
            .collect();
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn projection_matches_brute_force_over_f3(m in (1usize..5, 2usize..7).prop_flat_map(|(r, c)| matrix(Field::prime(3).unwrap(), r, c)), split in 1usize..6) {
        let cols = m.cols();
        let end = split.min(cols);
        let projected = solve_and_project(&m, 0..end).unwrap();
        let mut brute: Vec<Vec<Scalar>> = enumerate(&m.nullspace()).into_iter().map(|v| v[..end].to_vec()).collect();
        brute.sort_by_key(|v| format!("{v:?}"));
        brute.dedup();
        let mut fast = enumerate(&projected);
        fast.sort_by_key(|v| format!("{v:?}"));
        prop_assert_eq!(fast, brute);
    }
}

fn random_algebra(seed: u64, field: Field) -> Algebra {
    common::random_algebra(&mut ChaCha8Rng::seed_from_u64(seed), field, 0)
}

fn algebra_fields() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::prime(7).unwrap())]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_subalgebras_are_valid(seed in any::<u64>(), field in algebra_fields()) {
        let a = random_algebra(seed, field);
        prop_assert!(a.dim() <= 5);
        prop_assert!(a.validate().is_ok());
    }

    #[test]
    fn jacobi_and_jordan_bracket_identities(seed in any::<u64>(), field in algebra_fields()) {
        let a = random_algebra(seed, field);
        let n = a.dim();
        for i in 0..n {
            for j in 0..n {
                let (x, y) = (a.basis_element(i), a.basis_element(j));
                for k in 0..n {
                    let z = a.basis_element(k);
                    let cyc = a.lie(&a.lie(&x, &y).unwrap(), &z).unwrap()
                        .add(&a.lie(&a.lie(&y, &z).unwrap(), &x).unwrap())
                        .add(&a.lie(&a.lie(&z, &x).unwrap(), &y).unwrap());
                    prop_assert!(cyc.is_zero());
                    // (α∘x)∘y − x∘(α∘y) = [α, [x, y]] with α = z
                    let left = a.jordan(&a.jordan(&z, &x).unwrap(), &y).unwrap().sub(&a.jordan(&x, &a.jordan(&z, &y).unwrap()).unwrap());
                    prop_assert_eq!(left, a.lie(&z, &a.lie(&x, &y).unwrap()).unwrap());
                }
            }
        }
    }

    #[test]
    fn center_and_map_space_chains(seed in any::<u64>(), field in algebra_fields()) {
        let a = random_algebra(seed, field);
        prop_assert!(centers::center_chain(&a).is_ok());
        let s = |k| maps::space(&a, k).subspace().clone();
        prop_assert!(s(MapKind::Cent).is_subspace_of(&s(MapKind::JCent)).unwrap());
        prop_assert!(s(MapKind::JCent).is_subspace_of(&s(MapKind::QJCent)).unwrap());
        prop_assert!(s(MapKind::Der).is_subspace_of(&s(MapKind::JDer)).unwrap());
        let split = s(MapKind::JCent).sum(&s(MapKind::JDer)).unwrap();
        prop_assert!(s(MapKind::JDer).is_subspace_of(&split).unwrap());
        prop_assert!(split.is_subspace_of(&s(MapKind::QJDer)).unwrap());
        prop_assert_eq!(s(MapKind::GJDer), s(MapKind::QJCent).sum(&s(MapKind::QJDer)).unwrap());
        prop_assert_eq!(s(MapKind::JCent), s(MapKind::QJCent).intersect(&s(MapKind::QJDer)).unwrap());
        prop_assert!(s(MapKind::JCent).intersect(&s(MapKind::JDer)).unwrap().is_zero());
        prop_assert_eq!(s(MapKind::QJDer), maps::qjder_space_by_projection(&a).subspace().clone());
    }

    #[test]
    fn decomposition_round_trips(seed in any::<u64>(), field in algebra_fields()) {
        let a = random_algebra(seed, field);
        for f in maps::gjder_space(&a).basis_maps() {
            let d = maps::decompose_gjder(&a, &f).unwrap();
            prop_assert_eq!(d.f1.add(&d.f2), f.clone());
            prop_assert_eq!(maps::check_generalized_identity(&a, &f, &d.g, &d.h), None);
        }
    }
}
