use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::coeffring::{prime_pool, PrimeModulus};
use crate::exactla::{det_int_small, IntegerRing, PrimeField};
use crate::mpoly::{monomials_of_degree, parse_poly, MPoly, RationalMapData};
use crate::resultant::random_unimodular;

fn map(n: usize, d: u32, forms: &[&str]) -> RationalMapData {
    let forms = forms.iter().map(|s| parse_poly(s, Some(n)).unwrap()).collect();
    RationalMapData::new(n, d, forms).unwrap()
}

fn random_map(n: usize, d: u32, rng: &mut ChaCha8Rng) -> RationalMapData {
    let forms = (0..n)
        .map(|_| {
            let terms = monomials_of_degree(n, d - 1).into_iter().map(|m| (m, BigInt::from(rng.gen_range(-3i64..=3))));
            MPoly::from_terms(n, terms)
        })
        .collect();
    RationalMapData::new(n, d, forms).unwrap()
}

fn value(m: &RationalMapData) -> BigInt {
    eigendisc(&IntegerRing::new(), m, &EigenOptions::default()).unwrap().value
}

#[test]
fn matrix_map_of_the_line() {
    // psi = A x with A = [[a, b], [c, d]]
    for (a, b, c, dd) in [(1i64, 2i64, 3i64, 4i64), (2, 0, 0, 2), (5, -1, 7, 3)] {
        let m = map(2, 2, &[&format!("{a}*x0 + ({b})*x1"), &format!("{c}*x0 + ({dd})*x1")]);
        let expected = (a - dd).pow(2) + 4 * b * c;
        assert_eq!(value(&m), BigInt::from(-expected));
    }
}

#[test]
fn binary_cubic_minor_matches_classical_formula() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10 {
        let m = random_map(2, 3, &mut rng);
        let delta = EigenMinors::new(&m).binary();
        let c = |i: u16| delta.coeff(&crate::mpoly::Monomial::from_exps(&[3 - i, i])).cloned().unwrap_or_default();
        let (a, b, cc, d) = (c(0), c(1), c(2), c(3));
        let classical = &b * &b * &cc * &cc - 4 * &a * &cc * &cc * &cc - 4 * &b * &b * &b * &d
            - 27 * &a * &a * &d * &d
            + 18 * &a * &b * &cc * &d;
        assert_eq!(value(&m), classical);
    }
}

#[test]
fn minors_satisfy_syzygies() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for (n, d) in [(3, 3), (3, 4), (4, 3)] {
        let minors = EigenMinors::new(&random_map(n, d, &mut rng));
        assert!(minors.syzygy_holds());
        assert_eq!(minors.pair(1, 2), -minors.pair(2, 1));
    }
    let m = random_map(3, 3, &mut rng);
    let e = EigenMinors::new(&m);
    let expected = &(&MPoly::var(2, 3) * m.form(1)) - &(&MPoly::var(1, 3) * m.form(2));
    assert_eq!(e.ternary(0), expected);
}

#[test]
fn tensor_and_polar_map_agree() {
    let cubic = parse_poly("6*x0^3 + 3*x0^2*x1 - 6*x0*x1*x2 + 9*x2^2*x1", Some(3)).unwrap();
    let t = TensorData::symmetric_of_form(&cubic, 3).unwrap();
    assert!(t.is_symmetric());
    assert_eq!(t.entry(&[0, 1, 2]), MPoly::from_i64(-1, 0));
    let from_tensor = tensor_to_map(&t).unwrap();
    let polar = polar_map(&cubic, 3).unwrap();
    assert_eq!(polar, from_tensor.scaled(&BigInt::from(3)));
}

#[test]
fn dense_tensor_layout() {
    // a_{ijk} = 1 only at (1, 0, 1): psi_1 = x0 x1
    let mut values = vec![MPoly::zero(0); 8];
    values[0b101] = MPoly::from_i64(1, 0);
    let t = TensorData::from_dense(2, 3, values, false).unwrap();
    let m = tensor_to_map(&t).unwrap();
    assert!(m.form(0).is_zero());
    assert_eq!(*m.form(1), parse_poly("x0*x1", Some(2)).unwrap());
}

#[test]
fn asymmetric_entries_are_rejected() {
    let one = MPoly::from_i64(1, 0);
    let err = TensorData::from_dense(2, 2, vec![one.clone(), one.clone(), MPoly::zero(0), one], true).unwrap_err();
    assert!(matches!(err, TensorError::NotSymmetric(_)));
    let err = TensorData::from_pairs(2, 2, vec![(vec![0, 2], MPoly::from_i64(1, 0))], false).unwrap_err();
    assert!(matches!(err, TensorError::BadIndex(_)));
}

#[test]
fn degree_bookkeeping_balances() {
    for d in 3..9 {
        for n in 2..=4 {
            assert!(degree_table(n, d).balanced(), "n={n} d={d}");
        }
    }
    assert_eq!(degree_table(3, 3).eigendisc, 24);
    assert_eq!(degree_table(4, 3).eigendisc, 96);
}

#[test]
fn index_choices_are_permutations() {
    assert_eq!(index_choices(3).len(), 6);
    assert_eq!(index_choices(4).len(), 24);
    assert_eq!(index_choices(4)[0], vec![0, 1, 2, 3]);
    let m = map(3, 3, &["x0^2", "x1^2", "x2^2"]);
    let err = eigendisc_at_index(&IntegerRing::new(), &m, &[0, 1, 1], 0).unwrap_err();
    assert_eq!(err, EigenError::InvalidIndex(vec![0, 1, 1]));
}

#[test]
fn all_index_tuples_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let ring = IntegerRing::new();
    for _ in 0..4 {
        let m = random_map(3, 3, &mut rng);
        let values: Vec<BigInt> = index_choices(3)
            .iter()
            .filter_map(|idx| eigendisc_at_index(&ring, &m, idx, 0).ok())
            .map(|r| r.value)
            .collect();
        assert!(values.len() >= 2);
        assert!(values.windows(2).all(|w| w[0] == w[1]));
    }
}

#[test]
fn certificate_verifies_and_detects_tampering() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let ring = IntegerRing::new();
    let mut r = eigendisc(&ring, &random_map(3, 3, &mut rng), &EigenOptions::default()).unwrap();
    assert!(r.verify(&ring));
    assert_eq!(r.cofactors.iter().map(|c| c.power).collect::<Vec<_>>(), vec![1, 2]);
    r.cofactors[1].value += 1;
    assert!(!r.verify(&ring));
}

#[test]
fn scaling_law() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let lambda = BigInt::from(-2);
    for (n, d) in [(2, 3), (3, 3)] {
        let m = random_map(n, d, &mut rng);
        let scaled = value(&m.scaled(&lambda));
        assert_eq!(scaled, value(&m) * lambda.pow(eigendisc_degree(n, d) as u32));
    }
}

#[test]
fn conjugation_law() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let phi3: Vec<Vec<BigInt>> =
        [[1i64, 1, 0], [0, 2, 1], [1, 0, 1]].iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let phi2: Vec<Vec<BigInt>> = [[2i64, 1], [1, -1]].iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    for (n, d, phi) in [(2, 3, &phi2), (3, 3, &phi3)] {
        let m = random_map(n, d, &mut rng);
        let det = det_int_small(phi);
        let e = conjugation_exponent(n, d) as u32;
        assert_eq!(value(&m.conjugate(phi)), value(&m) * det.pow(e));
    }
    assert_eq!(conjugation_exponent(3, 3), 32);
    assert_eq!(conjugation_exponent(4, 3), 120);
}

#[test]
fn unimodular_conjugation_preserves_value() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let m = random_map(3, 3, &mut rng);
    let phi = random_unimodular(3, &mut rng);
    assert_eq!(value(&m.conjugate(&phi)), value(&m));
}

#[test]
fn degenerate_map_uses_conjugation_and_matches_perturbation() {
    // Fermat-type polar map: every restriction psi_k|x_k=0 is x_a x_b and
    // the resultant cofactor vanishes for all index tuples.
    let m = map(3, 3, &["3*x0^2 + x1*x2", "6*x1^2 + x0*x2", "9*x2^2 + x0*x1"]);
    let strict = EigenOptions { robust: false, ..EigenOptions::default() };
    assert!(matches!(
        eigendisc(&IntegerRing::new(), &m, &strict),
        Err(EigenError::VanishingCofactors(_))
    ));
    let r = eigendisc(&IntegerRing::new(), &m, &EigenOptions::default()).unwrap();
    assert!(r.change.is_some());
    let direction = map(3, 3, &["x0*x1 + x2^2", "x0^2 - x1*x2", "x1^2 + 2*x0*x2"]);
    let limit = eigendisc_perturbed(&m, &direction, &EigenOptions::default()).unwrap();
    assert_eq!(limit.constant_value().unwrap(), r.value);
}

#[test]
fn robust_path_is_deterministic_for_a_seed() {
    let m = map(3, 3, &["3*x0^2 + x1*x2", "3*x1^2 + x0*x2", "3*x2^2 + x0*x1"]);
    let opts = EigenOptions { seed: 42, ..EigenOptions::default() };
    let a = eigendisc(&IntegerRing::new(), &m, &opts).unwrap();
    let b = eigendisc(&IntegerRing::new(), &m, &opts).unwrap();
    assert_eq!(a, b);
}

#[test]
fn parametric_matches_pointwise() {
    let m = map(3, 3, &["x0^2 + u*x1*x2", "x1^2 - x0*x2 + x2^2", "2*x2^2 + x0*x1 - u*x0^2"]);
    assert_eq!(default_bounds(&m), vec![(4, 24)]);
    let p = eigendisc_parametric(&m, None, &EigenOptions::default()).unwrap();
    for u in [-3i64, 5, 17] {
        let at = p.eval_params(&[(4, BigInt::from(u))]).constant_value().unwrap();
        assert_eq!(at, value(&m.eval_params(&[(4, BigInt::from(u))])));
    }
}

#[test]
fn parametric_with_too_small_bound_fails() {
    let m = map(2, 3, &["u*x0^2 + x1^2", "x0*x1"]);
    let err = eigendisc_parametric(&m, Some(&[(4, 1)]), &EigenOptions::default()).unwrap_err();
    assert!(matches!(err, EigenError::Interpolation(_)));
}

#[test]
fn prime_field_matches_integer_reduction() {
    let mut rng = ChaCha8Rng::seed_from_u64(18);
    let m = random_map(3, 3, &mut rng);
    let exact = value(&m);
    let p = prime_pool()[3];
    let field = PrimeField::new(PrimeModulus::new(p).unwrap());
    let r = eigendisc(&field, &m, &EigenOptions::default()).unwrap();
    assert_eq!(r.value, crate::coeffring::reduce_mod(&exact, p));
    let mm = eigendisc_multimodular(&m, &EigenOptions::default(), 2, 1, 16).unwrap();
    assert!(mm.stable);
    assert_eq!(mm.value, exact);
}

#[test]
fn quaternary_index_tuples_agree_mod_p() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    let m = random_map(4, 3, &mut rng);
    let field = PrimeField::new(PrimeModulus::new(prime_pool()[0]).unwrap());
    let a = eigendisc_at_index(&field, &m, &[0, 1, 2, 3], 0).unwrap();
    let b = eigendisc_at_index(&field, &m, &[1, 2, 3, 0], 0).unwrap();
    assert!(a.verify(&field));
    assert_eq!(a.cofactors.len(), 5);
    assert_eq!(a.value, b.value);
}
