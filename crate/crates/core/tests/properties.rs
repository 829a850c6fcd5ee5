use num_bigint::BigInt;
use proptest::prelude::*;
use symquot::algebra::Polynomial;
use symquot::certify::{shell_a_invariant, stanley_check};
use symquot::sl2::{ab_series, sym_power_characters, SL2Module};
use symquot::torus::{invariant_series_dp, shell_series, stable_reduction, WeightMatrix};
use symquot::{expand, reconstruct, HilbertSeries, DEFAULT_GUARD};

fn numerator() -> impl Strategy<Value = Polynomial<BigInt>> {
    prop::collection::vec(-5i64..=5, 1..6)
        .prop_map(|mut c| {
            c[0] = c[0].max(1);
            Polynomial::new(c.into_iter().map(BigInt::from).collect())
        })
}

fn denominator() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..=4, 0..5)
}

fn weight_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=2, 2usize..=4).prop_flat_map(|(l, n)| {
        prop::collection::vec(prop::collection::vec(-2i64..=2, n), l)
    })
}

fn wm(rows: &[Vec<i64>]) -> WeightMatrix {
    WeightMatrix::from_rows(rows).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reconstruct_inverts_expand(num in numerator(), den in denominator()) {
        let h = HilbertSeries::new(num, den.clone());
        let bound = 40;
        let back = reconstruct(&expand(&h, bound), &den, DEFAULT_GUARD).unwrap();
        prop_assert_eq!(back, h);
    }

    #[test]
    fn expansion_is_multiplicative(a in numerator(), da in denominator(), b in numerator(), db in denominator()) {
        let (x, y) = (HilbertSeries::new(a, da), HilbertSeries::new(b, db));
        let prod = &x * &y;
        prop_assert_eq!(expand(&prod, 20), &expand(&x, 20) * &expand(&y, 20));
    }

    #[test]
    fn shell_series_a_invariant(l in 0usize..6, extra in 0usize..6) {
        let n = l + extra;
        prop_assume!(n > 0);
        let h = shell_series(l, n);
        let v = stanley_check(&h).unwrap();
        prop_assert_eq!(v.a_invariant, Some(shell_a_invariant(l as u64, n as u64)));
        prop_assert_eq!(v.dimension, (2 * n - l) as u64);
    }

    #[test]
    fn dp_is_invariant_under_column_moves(rows in weight_matrix(), seed in any::<u64>()) {
        let a = wm(&rows);
        let base = invariant_series_dp(&a, 8).unwrap();
        let n = a.dimension();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.rotate_left((seed as usize) % n);
        prop_assert_eq!(invariant_series_dp(&a.permute_columns(&perm), 8).unwrap(), base.clone());
        // Swapping z_j and w_j negates column j.
        let j = (seed as usize / 7) % n;
        let flipped: Vec<Vec<i64>> = rows
            .iter()
            .map(|r| r.iter().enumerate().map(|(k, &x)| if k == j { -x } else { x }).collect())
            .collect();
        prop_assert_eq!(invariant_series_dp(&wm(&flipped), 8).unwrap(), base);
    }

    #[test]
    fn dp_is_invariant_under_row_operations(rows in weight_matrix(), c in -2i64..=2) {
        prop_assume!(rows.len() == 2);
        let a = wm(&rows);
        let mixed = vec![
            rows[0].clone(),
            rows[1].iter().zip(&rows[0]).map(|(x, y)| x + c * y).collect(),
        ];
        prop_assert_eq!(invariant_series_dp(&wm(&mixed), 8).unwrap(), invariant_series_dp(&a, 8).unwrap());
    }

    #[test]
    fn dp_prefix_stability(rows in weight_matrix()) {
        let a = wm(&rows);
        let long = invariant_series_dp(&a, 10).unwrap();
        prop_assert_eq!(long.truncate(6), invariant_series_dp(&a, 6).unwrap());
    }

    #[test]
    fn stable_reduction_is_idempotent(rows in weight_matrix()) {
        let once = stable_reduction(&wm(&rows));
        let r = &once.reduced_matrix;
        let twice = stable_reduction(r);
        prop_assert!(twice.removed_unstable_columns.is_empty());
        prop_assert_eq!(twice.removed_trivial_columns, 0);
        prop_assert_eq!(twice.reduced_dimension(), r.dimension());
        prop_assert_eq!(twice.reduced_rank(), r.torus_rank());
    }

    #[test]
    fn symmetric_power_characters_are_symmetric(irreps in prop::collection::vec(0u32..=3, 1..4)) {
        let v = SL2Module::from_labels(&irreps);
        for chi in sym_power_characters(&v, 5) {
            prop_assert!(chi.is_symmetric());
            prop_assert!(chi.terms().all(|(_, c)| *c > BigInt::from(0)));
        }
        let ab = ab_series(&v, 5);
        prop_assert_eq!(ab.a.coeff(0), &BigInt::from(1));
        prop_assert_eq!(ab.b.coeff(0), &BigInt::from(0));
        prop_assert!(ab.a.coeffs().iter().chain(ab.b.coeffs()).all(|c| *c >= BigInt::from(0)));
    }
}
