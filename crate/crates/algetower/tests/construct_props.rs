//! Properties of tensor products, towers and index bookkeeping.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use algetower::construct::{
    flatten_coords, lift_linear_map, reindex_coords, tensor_product, tower_compose, FiberMatrix,
    IndexPairing, TowerSpec,
};
use algetower::suite::{seed_from_env, DEFAULT_SEED};
use algetower::{rat, rint, Algebra, Rat};

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed_from_env().unwrap_or(DEFAULT_SEED))
}

fn rand_rat(rng: &mut ChaCha8Rng) -> Rat {
    rat(rng.gen_range(-8..=8), rng.gen_range(1..=5))
}

#[test]
fn tensor_of_associative_factors_is_associative() {
    let c = Algebra::complex();
    let h = Algebra::h();
    for (outer, inner) in [(&c, &c), (&c, &h), (&h, &c), (&h, &h)] {
        let t = tensor_product(outer, inner);
        let report = t.structure_report();
        assert!(report.unital, "tensor of unital factors must be unital");
        assert!(
            report.associative,
            "tensor of associative factors must be associative"
        );
    }
    // Noncommutativity of a factor carries over.
    assert!(!tensor_product(&c, &h).structure_report().commutative);
}

#[test]
fn towers_with_scalar_constants_reduce_to_tensors() {
    let c = Algebra::complex();
    let h = Algebra::h();
    for inner in [&c, &h, &tensor_product(&c, &h)] {
        let spec = TowerSpec::scalar(c.clone(), inner);
        assert!(spec.has_scalar_constants());
        assert_eq!(tower_compose(&spec).unwrap(), tensor_product(&c, inner));
    }
}

#[test]
fn nonscalar_tower_is_not_a_tensor_of_its_outer() {
    // Two-dimensional fiber with w^2 = i over the complex field.
    let spec = TowerSpec::from_sparse(
        Algebra::complex(),
        2,
        &[
            (0, 0, 0, 0, rint(1)),
            (1, 0, 0, 1, rint(1)),
            (1, 0, 1, 0, rint(1)),
            (0, 1, 1, 1, rint(1)),
        ],
    )
    .unwrap();
    assert!(!spec.has_scalar_constants());
    let towered = tower_compose(&spec).unwrap();
    assert_eq!(towered.dim(), 4);
    let report = towered.structure_report();
    assert!(report.unital && report.associative);
    // w * w = i: pair (outer 0, inner 1) squared lands on (outer 1, inner 0).
    let w = towered.basis_element(1);
    assert_eq!(w.mul(&w).unwrap(), towered.basis_element(2));
}

#[test]
fn reindex_round_trips_on_random_coordinates() {
    let mut rng = rng();
    for pairing in [
        IndexPairing::new(2, 4),
        IndexPairing::new(4, 2),
        IndexPairing::new(3, 5),
    ] {
        for _ in 0..100 {
            let flat: Vec<Rat> = (0..pairing.flat_dim())
                .map(|_| rand_rat(&mut rng))
                .collect();
            let fibered = reindex_coords(&flat, pairing).unwrap();
            assert_eq!(flatten_coords(&fibered, pairing).unwrap(), flat);
        }
    }
}

#[test]
fn lifting_is_linear_in_the_map() {
    let mut rng = rng();
    let c = Algebra::complex();
    for _ in 0..50 {
        let mut f = FiberMatrix::identity(4, 2);
        let mut g = FiberMatrix::identity(4, 2);
        let mut sum = FiberMatrix::identity(4, 2);
        let alpha = rand_rat(&mut rng);
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..2 {
                    let a = rand_rat(&mut rng);
                    let b = rand_rat(&mut rng);
                    f.set(i, j, k, a.clone());
                    g.set(i, j, k, b.clone());
                    sum.set(i, j, k, &alpha * &a + &b);
                }
            }
        }
        let lifted_sum = lift_linear_map(&sum, &c).unwrap();
        let combined = lift_linear_map(&f, &c)
            .unwrap()
            .scale(&alpha)
            .add(&lift_linear_map(&g, &c).unwrap())
            .unwrap();
        assert_eq!(lifted_sum, combined);
    }
}
