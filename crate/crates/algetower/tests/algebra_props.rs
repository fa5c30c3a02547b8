//! Structural properties of element arithmetic and multiplication
//! operators, on randomized data with a fixed seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use algetower::algebra::{rotate_vector, AlgebraTable};
use algetower::construct::tensor_product;
use algetower::suite::{seed_from_env, DEFAULT_SEED};
use algetower::{rat, rint, Algebra, Rat};

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed_from_env().unwrap_or(DEFAULT_SEED))
}

fn rand_rat(rng: &mut ChaCha8Rng) -> Rat {
    rat(rng.gen_range(-8..=8), rng.gen_range(1..=5))
}

fn rand_element<'a>(rng: &mut ChaCha8Rng, alg: &'a Algebra) -> algetower::Element<'a> {
    alg.element((0..alg.dim()).map(|_| rand_rat(rng)).collect())
        .expect("matching length")
}

fn sample_algebras() -> Vec<Algebra> {
    vec![
        Algebra::complex(),
        Algebra::h(),
        Algebra::quaternion(rint(2), rint(3)).unwrap(),
        Algebra::quaternion(rint(1), rint(-1)).unwrap(),
        tensor_product(&Algebra::complex(), &Algebra::h()),
    ]
}

#[test]
fn multiplication_is_bilinear() {
    let mut rng = rng();
    for alg in sample_algebras() {
        for _ in 0..50 {
            let x = rand_element(&mut rng, &alg);
            let y = rand_element(&mut rng, &alg);
            let z = rand_element(&mut rng, &alg);
            let alpha = rand_rat(&mut rng);

            let left = x.scale(&alpha).add(&y).unwrap().mul(&z).unwrap();
            let right = x
                .mul(&z)
                .unwrap()
                .scale(&alpha)
                .add(&y.mul(&z).unwrap())
                .unwrap();
            assert_eq!(left, right);

            let left = z.mul(&x.scale(&alpha).add(&y).unwrap()).unwrap();
            let right = z
                .mul(&x)
                .unwrap()
                .scale(&alpha)
                .add(&z.mul(&y).unwrap())
                .unwrap();
            assert_eq!(left, right);
        }
    }
}

#[test]
fn conjugate_product_is_the_norm_times_unit() {
    let mut rng = rng();
    for (a, b) in [(-1, -1), (2, 3), (1, -1), (-1, 5)] {
        let alg = Algebra::quaternion(rint(a), rint(b)).unwrap();
        for _ in 0..100 {
            let x = rand_element(&mut rng, &alg);
            let product = x.mul(&x.conjugate().unwrap()).unwrap();
            let norm = x.norm_sq().unwrap();
            assert_eq!(product.coords()[0], norm);
            assert!(product.coords()[1..].iter().all(|c| c == &rint(0)));
        }
    }
}

#[test]
fn norm_is_multiplicative_on_the_division_algebra() {
    let mut rng = rng();
    let h = Algebra::h();
    for _ in 0..200 {
        let x = rand_element(&mut rng, &h);
        let y = rand_element(&mut rng, &h);
        let product_norm = x.mul(&y).unwrap().norm_sq().unwrap();
        assert_eq!(product_norm, x.norm_sq().unwrap() * y.norm_sq().unwrap());
    }
}

#[test]
fn rotation_preserves_the_quadratic_form() {
    let mut rng = rng();
    let h = Algebra::h();
    for _ in 0..100 {
        let q = rand_element(&mut rng, &h);
        if q.norm_sq().unwrap() == rint(0) {
            continue;
        }
        let v = [rand_rat(&mut rng), rand_rat(&mut rng), rand_rat(&mut rng)];
        let image = rotate_vector(&q, &v).unwrap();
        let form = |w: &[Rat; 3]| w.iter().map(|c| c * c).fold(rint(0), |acc, c| acc + c);
        assert_eq!(form(&image), form(&v));
    }
}

#[test]
fn multiplication_matrices_realize_the_product() {
    let mut rng = rng();
    for alg in sample_algebras() {
        for _ in 0..50 {
            let a = rand_element(&mut rng, &alg);
            let x = rand_element(&mut rng, &alg);
            let left = a.left_mul_matrix();
            assert_eq!(left.apply(x.coords()).unwrap(), a.mul(&x).unwrap().coords());
            let right = a.right_mul_matrix();
            assert_eq!(
                right.apply(x.coords()).unwrap(),
                x.mul(&a).unwrap().coords()
            );
        }
    }
}

#[test]
fn float_instantiation_multiplies_like_the_exact_one() {
    // The same generic kernel over f64: spot-check a product against the
    // exact table.
    let hf = AlgebraTable::<f64>::h();
    let x = hf.element(vec![1.0, 2.0, 3.0, 4.0]).unwrap();
    let y = hf.element(vec![0.5, -1.0, 0.0, 2.0]).unwrap();
    let got = x.mul(&y).unwrap();

    let h = Algebra::h();
    let xe = h.element(vec![rint(1), rint(2), rint(3), rint(4)]).unwrap();
    let ye = h
        .element(vec![rat(1, 2), rint(-1), rint(0), rint(2)])
        .unwrap();
    let expected = xe.mul(&ye).unwrap();
    for (g, e) in got.coords().iter().zip(expected.coords()) {
        let e: f64 = e.numer().to_string().parse::<f64>().unwrap()
            / e.denom().to_string().parse::<f64>().unwrap();
        assert!((g - e).abs() < 1e-12);
    }
}
