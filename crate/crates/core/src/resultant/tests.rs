use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::coeffring::{prime_pool, PrimeModulus};
use crate::exactla::{interpolate, IntegerRing, PointOutcome, PolyRing, PrimeField};
use crate::mpoly::parse_poly;

fn p(s: &str, arity: usize) -> MPoly<BigInt> {
    parse_poly(s, Some(arity)).unwrap()
}

fn random_form(nvars: usize, degree: u32, rng: &mut ChaCha8Rng, range: i64) -> MPoly<BigInt> {
    MPoly::from_terms(
        nvars,
        monomials_of_degree(nvars, degree)
            .into_iter()
            .map(|m| (m, BigInt::from(rng.gen_range(-range..=range)))),
    )
}

fn zz() -> IntegerRing {
    IntegerRing::new()
}

#[test]
fn sylvester_examples() {
    let r = resultant_binary(&zz(), &p("x0^2", 2), &p("x1^2", 2), 2, 2).unwrap();
    assert_eq!(r, BigInt::from(1));
    let r = resultant_binary(&zz(), &p("x0 - x1", 2), &p("x0 + x1", 2), 1, 1).unwrap();
    assert_eq!(r, BigInt::from(2));
    let g0 = p("u*x0 + v*x1", 2);
    let g1 = p("w*x0 + t*x1", 2);
    let r = resultant_binary(&PolyRing, &g0, &g1, 1, 1).unwrap();
    assert_eq!(r, p("u*t - v*w", 0));
}

#[test]
fn sylvester_with_vanishing_leading_terms() {
    // Declared degree 2 without an x0^2 term; (1 : 0) is a common root.
    let r = resultant_binary(&zz(), &p("x0*x1", 2), &p("x1", 2), 2, 1).unwrap();
    assert_eq!(r, BigInt::from(0));
    // Res(x0, x0 + x1) * Res(x1, x0 + x1) = 1 * (-1)
    let r = resultant_binary(&zz(), &p("x0*x1", 2), &p("x0 + x1", 2), 2, 1).unwrap();
    assert_eq!(r, BigInt::from(-1));
    let r = resultant_binary(&zz(), &p("x1^2", 2), &p("x0", 2), 2, 1).unwrap();
    assert_eq!(r, BigInt::from(1));
}

#[test]
fn macaulay_examples() {
    let forms = [p("x0^2", 3), p("x1^3", 3), p("x2^4", 3)];
    assert_eq!(resultant_macaulay(&zz(), &forms, &[2, 3, 4]).unwrap(), BigInt::from(1));
    let forms = [p("x0", 3), p("x1", 3), p("x2^2 + x0*x1", 3)];
    assert_eq!(resultant_macaulay(&zz(), &forms, &[1, 1, 2]).unwrap(), BigInt::from(1));
}

#[test]
fn linear_forms_give_coefficient_determinant() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..10 {
        let rows: Vec<Vec<BigInt>> =
            (0..3).map(|_| (0..3).map(|_| BigInt::from(rng.gen_range(-9..=9))).collect()).collect();
        let forms: Vec<MPoly<BigInt>> = rows
            .iter()
            .map(|r| MPoly::from_terms(3, (0..3).map(|j| (Monomial::var(j), r[j].clone()))))
            .collect();
        let expected = det_int_small(&rows);
        assert_eq!(resultant_robust(&zz(), &forms, &[1, 1, 1], 0).unwrap(), expected);
    }
}

#[test]
fn normalization_small_tuples() {
    for nvars in 1..=4usize {
        let mut tuple = vec![1u32; nvars];
        loop {
            let nu: u32 = tuple.iter().map(|d| d - 1).sum::<u32>() + 1;
            if nu <= 7 {
                let forms: Vec<MPoly<BigInt>> = (0..nvars)
                    .map(|i| MPoly::monomial(BigInt::from(1), Monomial::var_pow(i, tuple[i] as u16), nvars))
                    .collect();
                assert_eq!(resultant_macaulay(&zz(), &forms, &tuple).unwrap(), BigInt::from(1), "{tuple:?}");
            }
            let mut k = 0;
            while k < nvars {
                tuple[k] += 1;
                if tuple.iter().map(|d| d - 1).sum::<u32>() < 7 {
                    break;
                }
                tuple[k] = 1;
                k += 1;
            }
            if k == nvars {
                break;
            }
        }
    }
}

#[test]
fn sylvester_agrees_with_macaulay() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..20 {
        let d0 = rng.gen_range(1..=4);
        let d1 = rng.gen_range(1..=4);
        let g0 = random_form(2, d0, &mut rng, 5);
        let g1 = random_form(2, d1, &mut rng, 5);
        let s = resultant_binary(&zz(), &g0, &g1, d0, d1).unwrap();
        let m = resultant_robust(&zz(), &[g0, g1], &[d0, d1], 3).unwrap();
        assert_eq!(s, m);
    }
}

#[test]
fn multiplicativity_and_homogeneity() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..6 {
        let (a, b, c, e) = (rng.gen_range(1..=2), rng.gen_range(1..=2), rng.gen_range(1..=2), rng.gen_range(1..=2));
        let g0 = random_form(3, a, &mut rng, 3);
        let g0b = random_form(3, b, &mut rng, 3);
        let g1 = random_form(3, c, &mut rng, 3);
        let g2 = random_form(3, e, &mut rng, 3);
        let lhs = resultant_robust(&zz(), &[&g0 * &g0b, g1.clone(), g2.clone()], &[a + b, c, e], 0).unwrap();
        let r0 = resultant_robust(&zz(), &[g0.clone(), g1.clone(), g2.clone()], &[a, c, e], 0).unwrap();
        let r1 = resultant_robust(&zz(), &[g0b.clone(), g1.clone(), g2.clone()], &[b, c, e], 0).unwrap();
        assert_eq!(lhs, &r0 * &r1);
        let lambda = BigInt::from(3);
        let scaled = resultant_robust(&zz(), &[g0.clone(), g1.scalar_mul(&lambda), g2.clone()], &[a, c, e], 0).unwrap();
        assert_eq!(scaled, &r0 * lambda.pow(a * e));
    }
}

#[test]
fn planted_common_root_vanishes_mod_p() {
    let field = PrimeField::new(PrimeModulus::new(prime_pool()[0]).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..5 {
        // Forms vanishing at (1 : 2 : -1): add a multiple of (x1 - 2 x0) and (x2 + x0).
        let l1 = p("x1 - 2*x0", 3);
        let l2 = p("x2 + x0", 3);
        let forms: Vec<MPoly<BigInt>> = [2u32, 2, 3]
            .iter()
            .map(|&d| &(&random_form(3, d - 1, &mut rng, 50) * &l1) + &(&random_form(3, d - 1, &mut rng, 50) * &l2))
            .collect();
        assert_eq!(resultant_robust(&field, &forms, &[2, 2, 3], 1).unwrap(), 0);
    }
}

#[test]
fn robust_handles_vanishing_denominator() {
    let forms = [p("x1^2", 3), p("x0^2", 3), p("x2^2", 3)];
    assert_eq!(resultant_macaulay(&zz(), &forms, &[2, 2, 2]), Err(ResultantError::NonGeneric));
    assert_eq!(resultant_robust(&zz(), &forms, &[2, 2, 2], 9).unwrap(), BigInt::from(1));
}

#[test]
fn robust_matches_perturbation_limit() {
    // g has no x2^2 term; compare with the t -> 0 limit of g + t*h.
    let forms = [p("x1^2 + x0*x2", 3), p("x0^2 - x1*x2 + x0*x1", 3), p("x0*x2 + 3*x1^2 - x2*x1", 3)];
    let h = [p("x2^2", 3), p("x1^2 + x2^2", 3), p("x2^2 - x0^2", 3)];
    let robust = resultant_robust(&zz(), &forms, &[2, 2, 2], 5).unwrap();
    let family = interpolate::<ResultantError, _>(&[(7, 12)], |pt| {
        if pt[0].1 == BigInt::from(0) {
            return Ok(PointOutcome::Skip);
        }
        let t = &pt[0].1;
        let perturbed: Vec<MPoly<BigInt>> = forms.iter().zip(&h).map(|(g, h)| g + &h.scalar_mul(t)).collect();
        resultant_robust(&zz(), &perturbed, &[2, 2, 2], 0).map(PointOutcome::Value)
    })
    .unwrap();
    let limit = family.eval_params(&[(7, BigInt::from(0))]).constant_value().unwrap();
    assert_eq!(robust, limit);
}

#[test]
fn genuine_common_root_gives_zero() {
    let forms = [p("x0*x1", 3), p("x1*x2 + x0^2", 3), p("x1^3 + x0*x2^2", 3)];
    assert_eq!(resultant_robust(&zz(), &forms, &[2, 2, 3], 2).unwrap(), BigInt::from(0));
}

#[test]
fn change_of_coordinates_with_nonunit_determinant() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let forms: Vec<MPoly<BigInt>> = [1u32, 2, 2].iter().map(|&d| random_form(3, d, &mut rng, 4)).collect();
    let direct = resultant_robust(&zz(), &forms, &[1, 2, 2], 0).unwrap();
    let phi: Vec<Vec<BigInt>> =
        [[2, 1, 0], [0, 1, 1], [1, 0, 1]].iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    assert_eq!(det_int_small(&phi), BigInt::from(3));
    assert_eq!(resultant_via_change(&zz(), &forms, &[1, 2, 2], &phi).unwrap(), direct);
}

#[test]
fn constant_form() {
    let forms = [p("5", 3), p("x1^2 + x0*x2", 3), p("x2^3", 3)];
    assert_eq!(resultant_macaulay(&zz(), &forms, &[0, 2, 3]).unwrap(), BigInt::from(5).pow(6));
}

#[test]
fn division() {
    assert_eq!(resultant_division(&zz(), &BigInt::from(6), &BigInt::from(2)).unwrap(), BigInt::from(3));
    assert_eq!(resultant_division(&zz(), &BigInt::from(7), &BigInt::from(2)), Err(ResultantError::NotDivisible));
    assert_eq!(resultant_division(&zz(), &BigInt::from(7), &BigInt::from(0)), Err(ResultantError::ZeroFactor));
    let a = p("u^2 - v^2", 0);
    let b = p("u - v", 0);
    assert_eq!(resultant_division(&PolyRing, &a, &b).unwrap(), p("u + v", 0));
}

#[test]
fn audit_dump_has_labels() {
    let sys = MacaulaySystem::build(&zz(), &[p("x0 + x1", 2), p("x0 - x1", 2)], &[1, 1]).unwrap();
    let dump = sys.numerator.audit_dump();
    assert!(dump.contains("x0"));
    assert!(dump.contains("g1"));
}
