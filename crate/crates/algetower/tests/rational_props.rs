//! Field-axiom and round-trip properties of the rational scalar.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use algetower::rational::{format_rational, parse_rational, try_div, try_inv};
use algetower::suite::{seed_from_env, DEFAULT_SEED};
use algetower::Rat;

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed_from_env().unwrap_or(DEFAULT_SEED))
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rat {
    Rat::new(
        BigInt::from(rng.gen_range(-1000i64..=1000)),
        BigInt::from(rng.gen_range(1i64..=1000)),
    )
}

#[test]
fn field_axioms_hold_on_random_triples() {
    let mut rng = rng();
    for _ in 0..10_000 {
        let a = random_rational(&mut rng);
        let b = random_rational(&mut rng);
        let c = random_rational(&mut rng);

        assert_eq!((&a + &b) + &c, &a + (&b + &c));
        assert_eq!((&a * &b) * &c, &a * (&b * &c));
        assert_eq!(&a + &b, &b + &a);
        assert_eq!(&a * &b, &b * &a);
        assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        assert_eq!(&a + (-&a), Rat::zero());
        if !a.is_zero() {
            assert_eq!(&a * &try_inv(&a).unwrap(), Rat::one());
        }
    }
}

#[test]
fn canonical_form_is_maintained() {
    let mut rng = rng();
    for _ in 0..10_000 {
        let a = random_rational(&mut rng);
        let b = random_rational(&mut rng);
        let sum = &a + &b;
        assert!(sum.denom() > &BigInt::zero());
        assert!(num_integer::gcd(sum.numer().clone(), sum.denom().clone()).is_one());
        // Zero is always 0/1.
        let zero = &a - &a;
        assert!(zero.numer().is_zero());
        assert!(zero.denom().is_one());
    }
}

#[test]
fn parse_is_inverse_of_format() {
    let mut rng = rng();
    for _ in 0..10_000 {
        let a = random_rational(&mut rng);
        let text = format_rational(&a);
        assert_eq!(parse_rational(&text).unwrap(), a, "round trip of {text}");
    }
}

#[test]
fn division_by_zero_is_an_error_not_a_panic() {
    let one = Rat::one();
    assert!(try_div(&one, &Rat::zero()).is_err());
    assert!(try_inv(&Rat::zero()).is_err());
}
