//! Randomized properties of the exact linear algebra layer.

use liecoh::linalg::{Matrix, Subspace};
use liecoh::scalar::Scalar;
use proptest::prelude::*;

fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3, -2i64..=2)
        .prop_map(|(num, den, im)| &Scalar::rat(num, den) + &Scalar::rat_i(im, 1))
}

fn matrix_strategy(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(scalar_strategy(), c), r)
            .prop_map(Matrix::from_rows)
    })
}

fn vector_strategy(len: usize) -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::vec(scalar_strategy(), len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity_is_column_count(m in matrix_strategy(4)) {
        let rank = m.rank();
        let nullity = m.nullspace().len();
        prop_assert_eq!(rank + nullity, m.cols());
        // Every reported kernel vector really is killed by the matrix.
        for v in m.nullspace() {
            prop_assert!(m.apply(&v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn row_space_is_presentation_independent(m in matrix_strategy(4), perm_seed in 0usize..24) {
        let rows: Vec<Vec<Scalar>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
        let space = Subspace::from_vectors(m.cols(), &rows);

        // Reverse the generators, duplicate one, and rescale another; the
        // canonical form must not move.
        let mut shuffled: Vec<Vec<Scalar>> = rows.iter().rev().cloned().collect();
        if !shuffled.is_empty() {
            let dup = shuffled[perm_seed % shuffled.len()].clone();
            shuffled.push(dup);
            let k = perm_seed % shuffled.len();
            let scaled: Vec<Scalar> = shuffled[k].iter().map(|x| &Scalar::from_int(3) * x).collect();
            shuffled[k] = scaled;
        }
        let space2 = Subspace::from_vectors(m.cols(), &shuffled);
        prop_assert_eq!(&space, &space2);
        prop_assert!(space.contains_subspace(&space2) && space2.contains_subspace(&space));
    }

    #[test]
    fn solve_returns_actual_solutions(m in matrix_strategy(4), seed in proptest::collection::vec(-3i64..=3, 4)) {
        let x: Vec<Scalar> = (0..m.cols()).map(|j| Scalar::from_int(seed[j % seed.len()])).collect();
        let b = m.apply(&x);
        // A solution must exist (we built b from one); the returned vector
        // must satisfy the system exactly.
        let y = m.solve(&b);
        prop_assert!(y.is_some());
        prop_assert_eq!(m.apply(&y.unwrap()), b);
    }

    #[test]
    fn quotient_basis_complements_the_subspace(m in matrix_strategy(3), v in vector_strategy(3)) {
        // The span of (subspace basis ∪ quotient representatives) is the
        // whole ambient space, and the two parts meet trivially.
        let rows: Vec<Vec<Scalar>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
        let ambient = m.cols();
        let sub = Subspace::from_vectors(ambient, &rows);
        let full = Subspace::full_space(ambient);
        let reps = full.quotient_basis(&sub);
        prop_assert_eq!(reps.len(), ambient - sub.dim());
        let mut all = rows.clone();
        all.extend(reps.iter().cloned());
        prop_assert_eq!(Subspace::from_vectors(ambient, &all).dim(), ambient);
        // Reduction maps any vector into the subspace's canonical complement:
        // reducing twice changes nothing.
        let sized: Vec<Scalar> = (0..ambient)
            .map(|i| v.get(i).cloned().unwrap_or_else(Scalar::zero))
            .collect();
        let reduced = sub.reduce(&sized);
        prop_assert_eq!(sub.reduce(&reduced), reduced);
    }

    #[test]
    fn inverse_round_trips(m in matrix_strategy(3)) {
        if m.is_square() {
            if let Some(inv) = m.inverse() {
                prop_assert_eq!(&m * &inv, Matrix::identity(m.rows()));
                prop_assert_eq!(&inv * &m, Matrix::identity(m.rows()));
            }
        }
    }
}
