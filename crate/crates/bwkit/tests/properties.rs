//! Property-based invariants of the exact algebra layer and the closed
//! forms built on it.

use bwkit::bw_spin1::wth_mapping;
use bwkit::matrix::ExactMatrix;
use bwkit::quanta::propagator;
use bwkit::scalar::{rat, rational_string, ExactScalar};
use bwkit::scenario::parse_rational;
use bwkit::spinor::epsilon4;
use num::{BigRational, One, Zero};
use proptest::prelude::*;

fn scalar_strategy() -> impl Strategy<Value = ExactScalar> {
    (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4)
        .prop_map(|(rn, rd, in_, id)| ExactScalar::new(rat(rn, rd), rat(in_, id)))
}

fn matrix_strategy(rows: usize, cols: usize) -> impl Strategy<Value = ExactMatrix> {
    proptest::collection::vec(scalar_strategy(), rows * cols).prop_map(move |v| {
        ExactMatrix::from_fn(rows, cols, |i, j| v[i * cols + j].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rref_is_idempotent_and_rank_bounded(m in matrix_strategy(4, 5)) {
        let (r, rank, pivots) = m.rref();
        prop_assert!(rank <= 4);
        prop_assert_eq!(pivots.len(), rank);
        let (r2, rank2, _) = r.rref();
        prop_assert_eq!(&r2, &r);
        prop_assert_eq!(rank2, rank);
    }

    #[test]
    fn rref_preserves_the_row_space(m in matrix_strategy(3, 4)) {
        let basis = m.rref().0.row_basis();
        for i in 0..3 {
            prop_assert!(basis.contains(&m.row(i)).unwrap());
        }
        let original = m.row_basis();
        prop_assert_eq!(original.rank(), basis.rank());
    }

    #[test]
    fn rank_nullity_theorem(m in matrix_strategy(4, 6)) {
        prop_assert_eq!(m.rank() + m.nullspace().len(), 6);
        for v in m.nullspace() {
            prop_assert!(m.mat_mul(&v).unwrap().is_zero());
        }
    }

    #[test]
    fn scalars_form_a_field(a in scalar_strategy(), b in scalar_strategy(), c in scalar_strategy()) {
        let left = (a.clone() + b.clone()) * c.clone();
        let right = a.clone() * c.clone() + b.clone() * c.clone();
        prop_assert_eq!(left, right);
        if !a.is_zero() {
            prop_assert_eq!(a.clone() * a.inv().unwrap(), ExactScalar::one());
        }
        prop_assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn rational_strings_round_trip(n in -999i64..=999, d in 1i64..=999) {
        let r = rat(n, d);
        prop_assert_eq!(parse_rational(&rational_string(&r)).unwrap(), r);
    }

    #[test]
    fn epsilon_is_totally_antisymmetric(a in 1usize..=4, b in 1usize..=4, c in 1usize..=4, d in 1usize..=4) {
        prop_assert_eq!(epsilon4(a, b, c, d), -epsilon4(b, a, c, d));
        prop_assert_eq!(epsilon4(a, b, c, d), -epsilon4(a, b, d, c));
        if a == b || c == d {
            prop_assert_eq!(epsilon4(a, b, c, d), 0);
        }
    }

    #[test]
    fn propagator_always_collapses_at_equal_masses(
        x in -5i64..=5, y in -5i64..=5, z in -5i64..=5, k0 in -5i64..=5, m in 1i64..=6,
    ) {
        let spatial = [rat(x, 1), rat(y, 2), rat(z, 3)];
        let mass = rat(m, 1);
        match propagator(&spatial, &rat(k0, 1), &mass, &mass) {
            Ok(val) => {
                let scale = ExactScalar::from_rational(
                    BigRational::one() / (&val.k_squared + &mass * &mass),
                );
                prop_assert_eq!(val.matrix, ExactMatrix::identity(4).scale(&scale));
            }
            // Pole hits are legitimate rejections, never silent wrong values.
            Err(e) => prop_assert!(e.to_string().contains("pole")),
        }
    }

    #[test]
    fn wth_branches_always_satisfy_their_substitution(
        an in -8i64..=8, bn in -8i64..=8, cn in -8i64..=8, den in 1i64..=3, flip in proptest::bool::ANY,
    ) {
        let a = rat(an, den);
        let b = rat(bn, den);
        let c = rat(cn, den);
        let d = if flip { -&b } else { b.clone() };
        prop_assume!(!(a.is_zero() && c.is_zero()));
        let params = [a, b, c, d];
        let branches = wth_mapping(&params).unwrap();
        for br in &branches {
            prop_assert!(br.satisfies_substitution(&params));
        }
    }
}
