use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::coeffring::{prime_pool, reduce_mod, PrimeModulus};
use crate::mpoly::{parse_poly, MPoly};

fn int_matrix(rows: &[&[i64]]) -> ExactMatrix<BigInt> {
    ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect())
}

fn random_matrix(n: usize, bound: i64, rng: &mut ChaCha8Rng) -> ExactMatrix<BigInt> {
    ExactMatrix::from_rows(
        (0..n).map(|_| (0..n).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect()).collect(),
    )
}

fn sym(s: &str) -> MPoly<BigInt> {
    parse_poly(s, Some(0)).unwrap()
}

#[test]
fn small_determinants() {
    let ring = IntegerRing::new();
    let id = int_matrix(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
    assert_eq!(ring.det(&id).unwrap(), BigInt::from(1));
    assert_eq!(ring.det(&int_matrix(&[&[1, 2], &[3, 4]])).unwrap(), BigInt::from(-2));
    let diag = int_matrix(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]]);
    assert_eq!(ring.det(&diag).unwrap(), BigInt::from(30));
    assert_eq!(IntegerRing::fraction_free().det(&diag).unwrap(), BigInt::from(30));
    let empty: ExactMatrix<BigInt> = ExactMatrix::from_rows(vec![]);
    assert_eq!(ring.det(&empty).unwrap(), BigInt::from(1));
}

#[test]
fn non_square_is_rejected() {
    let m = int_matrix(&[&[1, 2, 3], &[4, 5, 6]]);
    assert!(matches!(IntegerRing::new().det(&m), Err(LinalgError::NotSquare(2, 3))));
}

#[test]
fn symbolic_two_by_two() {
    let m = ExactMatrix::from_rows(vec![vec![sym("u"), sym("v")], vec![sym("w"), sym("t")]]);
    assert_eq!(PolyRing.det(&m).unwrap(), sym("u*t - v*w"));
}

#[test]
fn zero_pivot_needs_row_swap() {
    let m = int_matrix(&[&[0, 1, 2], &[3, 0, 1], &[1, 1, 0]]);
    let expected = det_int_small(&[
        vec![0.into(), 1.into(), 2.into()],
        vec![3.into(), 0.into(), 1.into()],
        vec![1.into(), 1.into(), 0.into()],
    ]);
    assert_eq!(IntegerRing::fraction_free().det(&m).unwrap(), expected);
    assert_eq!(IntegerRing::new().det(&m).unwrap(), expected);
}

#[test]
fn crt_agrees_with_bareiss_on_random_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for n in 1..=8 {
        for bound in [3i64, 1_000_000_007] {
            let m = random_matrix(n, bound, &mut rng);
            let bareiss = det_fraction_free(&IntegerRing::fraction_free(), &m).unwrap();
            assert_eq!(det_modular_crt(&m, None).unwrap(), bareiss, "n={n}");
        }
    }
}

#[test]
fn large_entries_need_many_primes() {
    let big = BigInt::from(1) << 200u32;
    let m = ExactMatrix::from_rows(vec![vec![big.clone(), BigInt::from(1)], vec![BigInt::from(1), big.clone()]]);
    assert_eq!(det_modular_crt(&m, None).unwrap(), &big * &big - 1);
    assert!(hadamard_bound_bits(&m) >= 400);
}

#[test]
fn prime_field_determinant_matches_reduction() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let p = prime_pool()[5];
    let field = PrimeField::new(PrimeModulus::new(p).unwrap());
    for n in [3, 6, 10] {
        let m = random_matrix(n, 50, &mut rng);
        let exact = IntegerRing::new().det(&m).unwrap();
        let reduced = m.map(|v| reduce_mod(v, p));
        assert_eq!(field.det(&reduced).unwrap(), reduce_mod(&exact, p));
    }
}

#[test]
fn det_by_interpolation_examples() {
    let m = ExactMatrix::from_rows(vec![vec![sym("t"), sym("1")], vec![sym("1"), sym("t")]]);
    assert_eq!(det_by_interpolation(&m, &[(7, 2)]).unwrap(), sym("t^2 - 1"));
    let constant = ExactMatrix::from_rows(vec![vec![sym("2"), sym("1")], vec![sym("1"), sym("3")]]);
    assert_eq!(det_by_interpolation(&constant, &[]).unwrap(), sym("5"));
    let linear = ExactMatrix::from_rows(vec![vec![sym("u + 1"), sym("2")], vec![sym("1"), sym("1")]]);
    assert_eq!(det_by_interpolation(&linear, &[(4, 1)]).unwrap(), sym("u - 1"));
    let two = ExactMatrix::from_rows(vec![vec![sym("u"), sym("v")], vec![sym("v"), sym("u")]]);
    assert_eq!(det_by_interpolation(&two, &[(4, 2), (5, 2)]).unwrap(), sym("u^2 - v^2"));
}

#[test]
fn insufficient_bound_is_detected() {
    let m = ExactMatrix::from_rows(vec![vec![sym("t^2"), sym("1")], vec![sym("1"), sym("t")]]);
    let err = det_by_interpolation(&m, &[(7, 2)]).unwrap_err();
    assert!(matches!(err, LinalgError::Interpolation(InterpError::InsufficientBound(7))));
}

#[test]
fn interpolation_skips_unusable_points() {
    // values of (u - 3)(u + 2) but refusing u = 0 and u = 1
    let f = |pt: &[(usize, BigInt)]| -> Result<PointOutcome, ()> {
        let u = &pt[0].1;
        if u.is_zero() || *u == BigInt::from(1) {
            return Ok(PointOutcome::Skip);
        }
        Ok(PointOutcome::Value((u - 3) * (u + 2)))
    };
    assert_eq!(interpolate(&[(4, 2)], f).unwrap(), sym("u^2 - u - 6"));
    let never = |_: &[(usize, BigInt)]| -> Result<PointOutcome, ()> { Ok(PointOutcome::Skip) };
    assert!(matches!(interpolate(&[(4, 1)], never), Err(InterpError::TooManySkipped { .. })));
}

#[test]
fn non_integral_interpolant_is_reported() {
    // u (u - 1) / 2 takes integer values at integers but has rational coefficients
    let f = |pt: &[(usize, BigInt)]| -> Result<PointOutcome, ()> {
        let u = &pt[0].1;
        Ok(PointOutcome::Value(u * (u - 1) / 2))
    };
    assert_eq!(interpolate(&[(4, 2)], f), Err(InterpError::NotIntegral));
}

#[test]
fn adjugate_inverts_up_to_determinant() {
    let m: Vec<Vec<BigInt>> =
        [[2i64, 1, 0], [1, 3, 1], [0, 1, 4]].iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let adj = adjugate_int(&m);
    let det = det_int_small(&m);
    for i in 0..3 {
        for j in 0..3 {
            let s: BigInt = (0..3).map(|k| &m[i][k] * &adj[k][j]).sum();
            assert_eq!(s, if i == j { det.clone() } else { BigInt::zero() });
        }
    }
}

fn arb_matrix(n: usize) -> impl Strategy<Value = ExactMatrix<BigInt>> {
    prop::collection::vec(-20i64..20, n * n).prop_map(move |v| {
        ExactMatrix::from_rows(v.chunks(n).map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    })
}

fn mul(a: &ExactMatrix<BigInt>, b: &ExactMatrix<BigInt>) -> ExactMatrix<BigInt> {
    let n = a.rows();
    ExactMatrix::from_rows(
        (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a.get(i, k) * b.get(k, j)).sum()).collect()).collect(),
    )
}

proptest! {
    #[test]
    fn determinant_is_multiplicative(a in arb_matrix(4), b in arb_matrix(4)) {
        let ring = IntegerRing::new();
        prop_assert_eq!(ring.det(&mul(&a, &b)).unwrap(), ring.det(&a).unwrap() * ring.det(&b).unwrap());
    }

    #[test]
    fn row_swap_and_transpose(a in arb_matrix(5), r in 0usize..5, s in 0usize..5) {
        prop_assume!(r != s);
        let ring = IntegerRing::new();
        let d = ring.det(&a).unwrap();
        let mut swapped = a.clone();
        swapped.swap_rows(r, s);
        prop_assert_eq!(ring.det(&swapped).unwrap(), -d.clone());
        prop_assert_eq!(ring.det(&a.transpose()).unwrap(), d);
    }
}
