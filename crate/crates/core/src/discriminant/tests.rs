use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::exactla::{IntegerRing, PolyRing};
use crate::mpoly::{monomials_of_degree, parse_poly};
use crate::resultant::resultant_robust;

fn p(s: &str, arity: usize) -> MPoly<BigInt> {
    parse_poly(s, Some(arity)).unwrap()
}

fn zz() -> IntegerRing {
    IntegerRing::new()
}

fn random_form(nvars: usize, degree: u32, rng: &mut ChaCha8Rng, range: i64) -> MPoly<BigInt> {
    MPoly::from_terms(
        nvars,
        monomials_of_degree(nvars, degree)
            .into_iter()
            .map(|m| (m, BigInt::from(rng.gen_range(-range..=range)))),
    )
}

#[test]
fn jacobian_of_diagonal_forms() {
    let j = jacobian_minor(&[p("x0^2", 3), p("x1^2", 3)], 2);
    assert_eq!(j, p("4*x0*x1", 3));
    let j = jacobian_minor(&[p("x0^2", 3), p("x2^2", 3)], 1);
    assert_eq!(j, p("-4*x0*x2", 3));
}

#[test]
fn jacobian_with_linear_form() {
    let j = jacobian_minor(&[p("x0 + 2*x1 - x2", 3), p("x0*x2", 3)], 0);
    // rows (2, -1), (0, x0); minor without column 0
    assert_eq!(j, p("2*x0", 3));
}

#[test]
fn binary_quadratic_is_4ac_minus_b2() {
    let f = p("u*x0^2 + v*x0*x1 + w*x1^2", 2);
    let expected = p("4*u*w - v^2", 0);
    for witness in 0..2 {
        assert_eq!(discriminant_ci(&PolyRing, std::slice::from_ref(&f), &[2], witness, 0).unwrap(), expected);
    }
}

#[test]
fn binary_cubic_matches_classical_formula() {
    let f = p("u*x0^3 + v*x0^2*x1 + w*x0*x1^2 + t*x1^3", 2);
    let classical = p("v^2*w^2 - 4*u*w^3 - 4*v^3*t - 27*u^2*t^2 + 18*u*v*w*t", 0);
    let d = discriminant_ci(&PolyRing, &[f], &[3], 0, 0).unwrap();
    assert_eq!(d, classical);
}

#[test]
fn planted_double_root_vanishes() {
    let f = p("(x0 - x1)^2 * (x0 + 2*x1)", 2);
    assert_eq!(discriminant_robust(&zz(), &[f], &[3], 0).unwrap(), BigInt::from(0));
}

#[test]
fn sphere_and_line() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let q = p("x0^2 + x1^2 + x2^2", 3);
    for _ in 0..3 {
        let l = random_form(3, 1, &mut rng, 7);
        let all = discriminant_all_witnesses(&zz(), &[q.clone(), l], &[2, 1], 0).unwrap();
        assert!(all.len() >= 2);
        assert!(all.iter().all(|(_, v)| *v == all[0].1));
        assert_ne!(all[0].1, BigInt::from(0));
    }
}

#[test]
fn witness_independence_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for degrees in [[2u32, 2], [1, 3], [2, 3]] {
        let forms: Vec<MPoly<BigInt>> = degrees.iter().map(|&d| random_form(3, d, &mut rng, 4)).collect();
        let all = discriminant_all_witnesses(&zz(), &forms, &degrees, 0).unwrap();
        assert_eq!(all.len(), 3, "{degrees:?}");
        assert!(all.iter().all(|(_, v)| *v == all[0].1), "{degrees:?}: {all:?}");
    }
}

#[test]
fn degree_law() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let degrees = [2u32, 2];
    let forms: Vec<MPoly<BigInt>> = degrees.iter().map(|&d| random_form(3, d, &mut rng, 3)).collect();
    let base = discriminant_robust(&zz(), &forms, &degrees, 0).unwrap();
    let lambda = BigInt::from(2);
    for i in 0..2 {
        let mut scaled = forms.clone();
        scaled[i] = scaled[i].scalar_mul(&lambda);
        let v = discriminant_robust(&zz(), &scaled, &degrees, 0).unwrap();
        assert_eq!(v, &base * lambda.pow(partial_degree(&degrees, i) as u32));
    }
    assert_eq!(partial_degree(&[2, 2], 0), 6);
}

#[test]
fn polarization_binary_and_ternary() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let g0 = random_form(2, 2, &mut rng, 5);
    let g0b = random_form(2, 3, &mut rng, 5);
    let lhs = discriminant_robust(&zz(), &[&g0 * &g0b], &[5], 0).unwrap();
    let r = resultant_robust(&zz(), &[g0.clone(), g0b.clone()], &[2, 3], 0).unwrap();
    let rhs = discriminant_robust(&zz(), &[g0], &[2], 0).unwrap()
        * discriminant_robust(&zz(), &[g0b], &[3], 0).unwrap()
        * &r
        * &r;
    assert_eq!(lhs, rhs);

    let g0 = random_form(3, 1, &mut rng, 5);
    let g0b = random_form(3, 1, &mut rng, 5);
    let g1 = random_form(3, 2, &mut rng, 5);
    let lhs = discriminant_robust(&zz(), &[&g0 * &g0b, g1.clone()], &[2, 2], 0).unwrap();
    let r = resultant_robust(&zz(), &[g0.clone(), g0b.clone(), g1.clone()], &[1, 1, 2], 0).unwrap();
    let sign = BigInt::from(if 2 % 2 == 0 { 1 } else { -1 });
    let rhs = sign
        * discriminant_robust(&zz(), &[g0, g1.clone()], &[1, 2], 0).unwrap()
        * discriminant_robust(&zz(), &[g0b, g1], &[1, 2], 0).unwrap()
        * &r
        * &r;
    assert_eq!(lhs, rhs);
}

#[test]
fn failing_witness_and_coordinate_change_agree() {
    // f(1, 0) = 0 so the x1 witness vanishes.
    let f = p("x1*(x0 + 2*x1)*(3*x0 - x1)", 2);
    assert_eq!(discriminant_ci(&zz(), std::slice::from_ref(&f), &[3], 1, 0), Err(DiscError::WitnessVanishes(1)));
    let direct = discriminant_ci(&zz(), std::slice::from_ref(&f), &[3], 0, 0).unwrap();
    let phi: Vec<Vec<BigInt>> = [[1, 1], [1, 2]].iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let changed = f.linear_change(&phi);
    let forced = discriminant_ci(&zz(), &[changed], &[3], 1, 0).unwrap();
    assert_eq!(direct, forced);
    assert_eq!(discriminant_robust(&zz(), &[f], &[3], 0).unwrap(), direct);
}

#[test]
fn invariance_weight() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let degrees = [2u32, 2];
    let forms: Vec<MPoly<BigInt>> = degrees.iter().map(|&d| random_form(3, d, &mut rng, 3)).collect();
    let phi: Vec<Vec<BigInt>> =
        [[1, 1, 0], [0, 1, 1], [1, 0, 1]].iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let det = det_int_small(&phi);
    assert_eq!(det, BigInt::from(2));
    let changed: Vec<MPoly<BigInt>> = forms.iter().map(|f| f.linear_change(&phi)).collect();
    let a = discriminant_robust(&zz(), &forms, &degrees, 0).unwrap();
    let b = discriminant_robust(&zz(), &changed, &degrees, 0).unwrap();
    assert_eq!(b, a * det.pow(discriminant_weight(&degrees) as u32));
}

#[test]
fn degenerate_degrees_rejected() {
    let f = [p("x0", 3), p("x1", 3)];
    assert_eq!(discriminant_ci(&zz(), &f, &[1, 1], 0, 0), Err(DiscError::DegenerateDegrees));
}
