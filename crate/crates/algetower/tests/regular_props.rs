//! Properties of quaternion polynomial functions and regularity checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use algetower::regular::{
    check_regular, check_regular_everywhere, residual_polynomials, QuaternionPolynomial,
};
use algetower::suite::{seed_from_env, DEFAULT_SEED};
use algetower::{rat, rint, Algebra, Rat};

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed_from_env().unwrap_or(DEFAULT_SEED))
}

fn rand_rat(rng: &mut ChaCha8Rng) -> Rat {
    rat(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

fn rand_quat(rng: &mut ChaCha8Rng) -> [Rat; 4] {
    std::array::from_fn(|_| rand_rat(rng))
}

fn rand_monomials(rng: &mut ChaCha8Rng) -> Vec<Vec<[Rat; 4]>> {
    (0..rng.gen_range(1..=3))
        .map(|_| {
            let degree = rng.gen_range(0..=3);
            (0..=degree).map(|_| rand_quat(rng)).collect()
        })
        .collect()
}

#[test]
fn expansion_respects_evaluation() {
    let mut rng = rng();
    let h = Algebra::h();
    for _ in 0..100 {
        let monomials = rand_monomials(&mut rng);
        let f = QuaternionPolynomial::build(&monomials).unwrap();
        let p = rand_quat(&mut rng);
        let x = h.element(p.to_vec()).unwrap();

        // Evaluate the noncommutative product directly in the algebra.
        let mut direct = h.zero_element();
        for constants in &monomials {
            let mut term = h.element(constants[0].to_vec()).unwrap();
            for c in &constants[1..] {
                term = term.mul(&x).unwrap();
                term = term.mul(&h.element(c.to_vec()).unwrap()).unwrap();
            }
            direct = direct.add(&term).unwrap();
        }
        assert_eq!(f.eval(&p).to_vec(), direct.coords());
    }
}

#[test]
fn residuals_are_linear_in_the_function() {
    let mut rng = rng();
    for _ in 0..50 {
        let f = QuaternionPolynomial::build(&rand_monomials(&mut rng)).unwrap();
        let g = QuaternionPolynomial::build(&rand_monomials(&mut rng)).unwrap();
        let alpha = rand_rat(&mut rng);
        let combined = f.scale(&alpha).add(&g);
        let p = rand_quat(&mut rng);

        let rf = check_regular(&f, &p).system;
        let rg = check_regular(&g, &p).system;
        let rc = check_regular(&combined, &p).system;
        for i in 0..4 {
            assert_eq!(rc[i], &alpha * &rf[i] + &rg[i]);
        }
    }
}

#[test]
fn pointwise_checks_agree_with_identical_vanishing() {
    let mut rng = rng();
    // Regular everywhere means regular at every sampled point; the converse
    // spot-check: a function failing somewhere has a nonzero residual
    // polynomial.
    for f in [
        QuaternionPolynomial::fueter_variable(),
        QuaternionPolynomial::constant(&[rint(2), rint(0), rint(-5), rint(1)]),
    ] {
        let (regular, _) = check_regular_everywhere(&f);
        assert!(regular);
        for _ in 0..20 {
            assert!(check_regular(&f, &rand_quat(&mut rng)).regular);
        }
    }
    let f = QuaternionPolynomial::<Rat>::x_squared();
    let (regular, residuals) = check_regular_everywhere(&f);
    assert!(!regular);
    assert!(residuals.iter().any(|r| !r.is_zero()));
}

#[test]
fn residual_polynomials_evaluate_to_pointwise_residuals() {
    let mut rng = rng();
    for _ in 0..50 {
        let f = QuaternionPolynomial::build(&rand_monomials(&mut rng)).unwrap();
        let residuals = residual_polynomials(&f);
        let p = rand_quat(&mut rng);
        let report = check_regular(&f, &p);
        for (poly, value) in residuals.iter().zip(&report.system) {
            assert_eq!(&poly.eval(&p), value);
        }
    }
}

#[test]
fn linear_space_of_regular_functions() {
    let mut rng = rng();
    // Rational combinations of regular functions stay regular.
    let fueter = QuaternionPolynomial::<Rat>::fueter_variable();
    for _ in 0..20 {
        let alpha = rand_rat(&mut rng);
        let c = QuaternionPolynomial::constant(&rand_quat(&mut rng));
        let combined = fueter.scale(&alpha).add(&c);
        let (regular, _) = check_regular_everywhere(&combined);
        assert!(regular);
    }
}
