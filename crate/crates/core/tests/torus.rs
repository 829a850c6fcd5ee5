mod common;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symquot::algebra::Polynomial;
use symquot::certify::shell_a_invariant;
use symquot::torus::{
    invariant_series_dp, largeness_report, minimal_generators, quotient_series, shell_diagnostics,
    shell_hilbert, stable_reduction, Verdict, WeightMatrix,
};
use symquot::{expand, HilbertSeries};

use common::{big_u, torus_invariant_counts};

fn wm(rows: &[Vec<i64>]) -> WeightMatrix {
    WeightMatrix::from_rows(rows).unwrap()
}

fn random_stable_faithful(rng: &mut ChaCha8Rng, max_l: usize, max_n: usize, max_entry: i64) -> Vec<Vec<i64>> {
    loop {
        let l = rng.gen_range(1..=max_l);
        let n = rng.gen_range(l + 1..=max_n);
        let rows: Vec<Vec<i64>> = (0..l)
            .map(|_| (0..n).map(|_| rng.gen_range(-max_entry..=max_entry)).collect())
            .collect();
        let r = largeness_report(&wm(&rows)).unwrap();
        if r.stable && r.faithful_up_to_finite {
            return rows;
        }
    }
}

#[test]
fn opposite_weights_against_enumeration() {
    let rows = vec![vec![1, -1]];
    let q = quotient_series(&wm(&rows), 8, None).unwrap();
    let expected = HilbertSeries::new(Polynomial::new(vec![1.into(), 0.into(), 1.into()]), vec![2, 2]);
    assert_eq!(q.series, expected);
    assert_eq!(q.verdict.a_invariant, Some(-2));
    assert!(q.verdict.graded_gorenstein);
    let brute = big_u(&torus_invariant_counts(&rows, 8));
    let invariants = symquot::TruncatedSeries::new(brute);
    assert_eq!(invariants.mul_one_minus_t_pow(2), q.truncated);
}

#[test]
fn identity_modules_reduce_to_a_point() {
    for n in 1..=4 {
        let a = WeightMatrix::identity(n);
        let trace = stable_reduction(&a);
        assert!(trace.is_empty());
        assert_eq!(trace.removed_unstable_columns.len(), n);
        let diag = shell_diagnostics(&a).unwrap();
        assert!(diag.unreduced);
        assert!(diag.complete_intersection);
        assert_eq!(diag.shell_a_invariant, Some(0));
        assert_eq!(diag.shell_rational, Verdict::No);
        assert_eq!(quotient_series(&a, 10, None).unwrap().series, HilbertSeries::one());
    }
}

#[test]
fn shell_series_of_opposite_weights() {
    let h = shell_hilbert(&wm(&[vec![1, -1]])).unwrap();
    assert_eq!(h, HilbertSeries::free(4).multiply_by_factors(&[2]));
    assert_eq!(shell_a_invariant(1, 2), -2);
}

#[test]
fn dp_matches_enumeration_on_mixed_signs() {
    let cases = [
        vec![vec![1, 2, -3]],
        vec![vec![1, -1, 0]],
        vec![vec![2, -1, -1], vec![0, 1, -1]],
        vec![vec![1, 1, 1]],
    ];
    for rows in cases {
        let dp = invariant_series_dp(&wm(&rows), 8).unwrap();
        let brute = big_u(&torus_invariant_counts(&rows, 8));
        assert_eq!(dp.coeffs(), &brute[..], "weights {rows:?}");
    }
}

#[test]
fn zero_columns_are_free_factors() {
    let with = quotient_series(&wm(&[vec![1, -1, 0]]), 16, None).unwrap();
    let without = quotient_series(&wm(&[vec![1, -1]]), 16, None).unwrap();
    assert_eq!(with.series, without.series.divide_by_factors(&[1, 1]));
    assert_eq!(with.trace.removed_trivial_columns, 1);
}

#[test]
fn random_stable_faithful_quotients_are_gorenstein() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..12 {
        let rows = random_stable_faithful(&mut rng, 2, 5, 2);
        let a = wm(&rows);
        let q = quotient_series(&a, 24, None).unwrap();
        assert!(q.verdict.certified(), "weights {rows:?}: {}", q.series);
        assert_eq!(q.exact_agrees, Some(true), "weights {rows:?}");
        assert_eq!(expand(&q.series, 24), q.truncated);
    }
}

#[test]
fn generator_lower_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..8 {
        let rows = random_stable_faithful(&mut rng, 2, 5, 2);
        let a = wm(&rows);
        let trace = stable_reduction(&a);
        let r = &trace.reduced_matrix;
        let gens = minimal_generators(r, 12).unwrap();
        let bound = 3 * (r.dimension() - r.torus_rank());
        assert!(gens.len() >= bound, "weights {rows:?}: {} < {bound}", gens.len());
    }
}

#[test]
fn largeness_of_circle_actions() {
    let r = largeness_report(&wm(&[vec![1, 1, -1, -1]])).unwrap();
    assert!(r.stable && r.faithful_up_to_finite);
    assert_eq!(r.max_k_modular, Some(3));
    assert!(r.one_large);
    let r = largeness_report(&wm(&[vec![2, -2]])).unwrap();
    assert_eq!(r.finite_kernel_order, Some(BigInt::from(2)));
    assert_eq!(r.max_k_modular, Some(1));
    let r = largeness_report(&wm(&[vec![1, 1]])).unwrap();
    assert!(!r.stable);
}
