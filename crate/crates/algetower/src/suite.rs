//! The theorem verification suite: every closed-form table and every
//! equivalence the crate implements, checked exactly and reported as one
//! row per theorem.
//!
//! Expected tables and sign patterns are frozen here as literal data,
//! independent of the construction code they validate. Randomized property
//! rows derive their generator from one master seed, so identical seeds
//! produce identical reports; [`seed_from_env`] wires the `ALGETOWER_SEED`
//! environment variable into that seed.

// Index loops below mirror the tensor index notation they verify.
#![allow(clippy::needless_range_loop, clippy::type_complexity)]

use std::array;
use std::fmt::Debug;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{rotate_vector, rotation_angle_check};
use crate::construct::{
    flatten_coords, lift_linear_map, reindex_coords, tensor_product, FiberMatrix, IndexPairing,
    TowerSpec,
};
use crate::linmap::{
    self, left_regular_generators, matrix_to_standard, sandwich_check, solve_commutant,
    standard_to_matrix, StandardComponents,
};
use crate::matrix::Matrix;
use crate::poly::CoordPolynomial;
use crate::regular::{
    check_regular, check_regular_everywhere, check_regular_via_standard, cr_like_at,
    cr_like_everywhere, gateaux_differential, gateaux_differential_grouped, residual_polynomials,
    standard_combination_polynomials, QuaternionPolynomial,
};
use crate::{rat, rint, Algebra, Rat, RatMatrix};

pub const DEFAULT_SEED: u64 = 20260809;

/// Seed override from the `ALGETOWER_SEED` environment variable.
pub fn seed_from_env() -> Option<u64> {
    std::env::var("ALGETOWER_SEED").ok()?.parse().ok()
}

/// One verified fact, keyed by the theorem it reproduces.
#[derive(Debug, Clone)]
pub struct Check {
    pub id: &'static str,
    pub theorem: &'static str,
    /// Acceptance-criterion groups this row belongs to (1..=10).
    pub criteria: &'static [u8],
    pub passed: bool,
    pub cases: usize,
    pub detail: String,
}

struct Probe {
    cases: usize,
    failures: Vec<String>,
}

impl Probe {
    fn new() -> Self {
        Probe {
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, condition: bool, context: impl FnOnce() -> String) {
        self.cases += 1;
        if !condition {
            self.failures.push(context());
        }
    }

    fn eq<V: PartialEq + Debug + ?Sized>(
        &mut self,
        got: &V,
        want: &V,
        label: impl FnOnce() -> String,
    ) {
        self.cases += 1;
        if got != want {
            self.failures
                .push(format!("{}: got {:?}, want {:?}", label(), got, want));
        }
    }

    fn finish(
        self,
        id: &'static str,
        theorem: &'static str,
        criteria: &'static [u8],
        summary: &str,
    ) -> Check {
        let passed = self.failures.is_empty();
        let detail = if passed {
            format!("{summary} ({} cases)", self.cases)
        } else {
            let mut issues = self.failures;
            issues.truncate(3);
            format!("FAILED: {}", issues.join("; "))
        };
        Check {
            id,
            theorem,
            criteria,
            passed,
            cases: self.cases,
            detail,
        }
    }
}

fn rand_rat(rng: &mut ChaCha8Rng) -> Rat {
    rat(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

fn rand_coords(rng: &mut ChaCha8Rng, dim: usize) -> Vec<Rat> {
    (0..dim).map(|_| rand_rat(rng)).collect()
}

fn rand_matrix(rng: &mut ChaCha8Rng, dim: usize) -> RatMatrix {
    Matrix::from_fn(dim, |_, _| rand_rat(rng))
}

fn rand_quat(rng: &mut ChaCha8Rng) -> [Rat; 4] {
    array::from_fn(|_| rand_rat(rng))
}

/// Random sum of at most three monomials of degree at most three.
fn rand_function(rng: &mut ChaCha8Rng) -> QuaternionPolynomial<Rat> {
    let monomial_count = rng.gen_range(1..=3);
    let monomials: Vec<Vec<[Rat; 4]>> = (0..monomial_count)
        .map(|_| {
            let degree = rng.gen_range(0..=3);
            (0..=degree).map(|_| rand_quat(rng)).collect()
        })
        .collect();
    QuaternionPolynomial::build(&monomials).expect("monomials are nonempty")
}

fn row_rng(seed: u64, row: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (row.wrapping_mul(0x9e37_79b9_7f4a_7c15)))
}

/// Runs every check with the given master seed, in theorem order.
pub fn run_all(seed: u64) -> Vec<Check> {
    vec![
        thm_3_1(),
        thm_3_2(),
        thm_3_3(),
        def_4_1(),
        rotation_4_6(row_rng(seed, 4)),
        thm_5_1(),
        thm_5_2(row_rng(seed, 6)),
        thm_5_3(row_rng(seed, 7)),
        thm_5_4(),
        thm_5_5(),
        thm_5_6(),
        thm_5_7(row_rng(seed, 11)),
        thm_6_1(),
        thm_6_2(),
        thm_6_3(),
        thm_6_4(row_rng(seed, 14)),
        thm_7_1(),
        thm_7_2(),
        thm_7_3(),
        thm_7_4(row_rng(seed, 18)),
        tensor_grouping(),
        thm_8_1(row_rng(seed, 19)),
        thm_8_2(row_rng(seed, 20)),
        thm_9_1(row_rng(seed, 21)),
        thm_9_2(row_rng(seed, 22)),
        thm_9_3(row_rng(seed, 23)),
        regular_examples(),
        thm_10_1(),
        x_squared_10_5(),
        thm_10_2(),
        fd_oracle(row_rng(seed, 28)),
    ]
}

// ---------------------------------------------------------------------------
// Frozen expected data
// ---------------------------------------------------------------------------

/// Complex structural constants: the four nonzero entries.
const COMPLEX_CONSTANTS: [(usize, usize, usize, i64); 4] =
    [(0, 0, 0, 1), (1, 0, 1, 1), (1, 1, 0, 1), (0, 1, 1, -1)];

/// Classical quaternion structural constants: the sixteen nonzero entries.
const H_CONSTANTS: [(usize, usize, usize, i64); 16] = [
    (0, 0, 0, 1),
    (1, 0, 1, 1),
    (2, 0, 2, 1),
    (3, 0, 3, 1),
    (1, 1, 0, 1),
    (0, 1, 1, -1),
    (3, 1, 2, 1),
    (2, 1, 3, -1),
    (2, 2, 0, 1),
    (3, 2, 1, -1),
    (0, 2, 2, -1),
    (1, 2, 3, 1),
    (3, 3, 0, 1),
    (2, 3, 1, 1),
    (1, 3, 2, -1),
    (0, 3, 3, -1),
];

/// Nonzero constants of `E(F, a, b)` as coefficient codes over `(a, b)`:
/// 1, a, b, -1, -a, -b, -ab.
fn generic_quaternion_constants(a: &Rat, b: &Rat) -> Vec<(usize, usize, usize, Rat)> {
    let one = rint(1);
    let ab = a.clone() * b.clone();
    vec![
        (0, 0, 0, one.clone()),
        (1, 0, 1, one.clone()),
        (2, 0, 2, one.clone()),
        (3, 0, 3, one.clone()),
        (1, 1, 0, one.clone()),
        (0, 1, 1, a.clone()),
        (3, 1, 2, one.clone()),
        (2, 1, 3, a.clone()),
        (2, 2, 0, one.clone()),
        (3, 2, 1, -one.clone()),
        (0, 2, 2, b.clone()),
        (1, 2, 3, -b.clone()),
        (3, 3, 0, one.clone()),
        (2, 3, 1, -a.clone()),
        (1, 3, 2, b.clone()),
        (0, 3, 3, -ab),
    ]
}

/// Product table of the tensor algebra of the complex field with the
/// quaternions, over the seven non-unit basis vectors `1(x)i, 1(x)j,
/// 1(x)k, i(x)1, i(x)i, i(x)j, i(x)k` (flat indices 1..=7): entry
/// `(sign, flat index of the product)`.
const CXH_PRODUCT_TABLE: [[(i8, usize); 7]; 7] = [
    [(-1, 0), (1, 3), (-1, 2), (1, 5), (-1, 4), (1, 7), (-1, 6)],
    [(-1, 3), (-1, 0), (1, 1), (1, 6), (-1, 7), (-1, 4), (1, 5)],
    [(1, 2), (-1, 1), (-1, 0), (1, 7), (1, 6), (-1, 5), (-1, 4)],
    [(1, 5), (1, 6), (1, 7), (-1, 0), (-1, 1), (-1, 2), (-1, 3)],
    [(-1, 4), (1, 7), (-1, 6), (-1, 1), (1, 0), (-1, 3), (1, 2)],
    [(-1, 7), (-1, 4), (1, 5), (-1, 2), (1, 3), (1, 0), (-1, 1)],
    [(1, 6), (-1, 5), (-1, 4), (-1, 3), (-1, 2), (1, 1), (1, 0)],
];

/// Matrix entries of the two-sided representation over `E(R, a, b)`,
/// frozen from the displayed solution: `expected[(i, j)]` as a function of
/// the sixteen components. Rows list `(i, j, [(coeff code, k, r); 4])` with
/// coefficient codes 1, -1, a, b, ab, -a, -b, -ab applied to `S[k][r]`.
fn expected_matrix_from_components(a: &Rat, b: &Rat, s: &StandardComponents<Rat>) -> RatMatrix {
    let ab = a.clone() * b.clone();
    let one = rint(1);
    let c = |code: i8| -> Rat {
        match code {
            1 => one.clone(),
            -1 => -one.clone(),
            2 => a.clone(),
            -2 => -a.clone(),
            3 => b.clone(),
            -3 => -b.clone(),
            4 => ab.clone(),
            -4 => -ab.clone(),
            _ => unreachable!("unknown coefficient code"),
        }
    };
    // (row, col, [(code, k, r); 4])
    let rows: [(usize, usize, [(i8, usize, usize); 4]); 16] = [
        (0, 0, [(1, 0, 0), (2, 1, 1), (3, 2, 2), (-4, 3, 3)]),
        (1, 1, [(1, 0, 0), (2, 1, 1), (-3, 2, 2), (4, 3, 3)]),
        (2, 2, [(1, 0, 0), (-2, 1, 1), (3, 2, 2), (4, 3, 3)]),
        (3, 3, [(1, 0, 0), (-2, 1, 1), (-3, 2, 2), (-4, 3, 3)]),
        (1, 0, [(1, 0, 1), (1, 1, 0), (-3, 2, 3), (3, 3, 2)]),
        (0, 1, [(2, 0, 1), (2, 1, 0), (4, 2, 3), (-4, 3, 2)]),
        (3, 2, [(-1, 0, 1), (1, 1, 0), (3, 2, 3), (3, 3, 2)]),
        (2, 3, [(-2, 0, 1), (2, 1, 0), (-4, 2, 3), (-4, 3, 2)]),
        (2, 0, [(1, 0, 2), (2, 1, 3), (1, 2, 0), (-2, 3, 1)]),
        (3, 1, [(1, 0, 2), (2, 1, 3), (-1, 2, 0), (2, 3, 1)]),
        (0, 2, [(3, 0, 2), (-4, 1, 3), (3, 2, 0), (4, 3, 1)]),
        (1, 3, [(3, 0, 2), (-4, 1, 3), (-3, 2, 0), (-4, 3, 1)]),
        (3, 0, [(1, 0, 3), (1, 1, 2), (-1, 2, 1), (1, 3, 0)]),
        (2, 1, [(2, 0, 3), (2, 1, 2), (2, 2, 1), (-2, 3, 0)]),
        (1, 2, [(-3, 0, 3), (3, 1, 2), (3, 2, 1), (3, 3, 0)]),
        (0, 3, [(-4, 0, 3), (4, 1, 2), (-4, 2, 1), (-4, 3, 0)]),
    ];
    let mut out: RatMatrix = Matrix::zero(4);
    for (i, j, terms) in rows {
        let mut acc = rint(0);
        for (code, k, r) in terms {
            acc += c(code) * s.get(k, r).clone();
        }
        *out.get_mut(i, j) = acc;
    }
    out
}

/// Components from matrix entries, frozen from the displayed inverse
/// solution. Coefficient codes over `(a, b)`: q = 1/4, qa = 1/(4a),
/// qb = 1/(4b), qab = 1/(4ab), each signed.
fn expected_components_from_matrix(a: &Rat, b: &Rat, m: &RatMatrix) -> StandardComponents<Rat> {
    let q = rat(1, 4);
    let qa = q.clone() / a.clone();
    let qb = q.clone() / b.clone();
    let qab = qa.clone() / b.clone();
    let c = |code: i8| -> Rat {
        match code {
            1 => q.clone(),
            -1 => -q.clone(),
            2 => qa.clone(),
            -2 => -qa.clone(),
            3 => qb.clone(),
            -3 => -qb.clone(),
            4 => qab.clone(),
            -4 => -qab.clone(),
            _ => unreachable!("unknown coefficient code"),
        }
    };
    // (k, r, [(code, row, col); 4]) — each component from four matrix entries.
    let rows: [(usize, usize, [(i8, usize, usize); 4]); 16] = [
        (0, 0, [(1, 0, 0), (1, 1, 1), (1, 2, 2), (1, 3, 3)]),
        (1, 1, [(2, 0, 0), (2, 1, 1), (-2, 2, 2), (-2, 3, 3)]),
        (2, 2, [(3, 0, 0), (-3, 1, 1), (3, 2, 2), (-3, 3, 3)]),
        (3, 3, [(-4, 0, 0), (4, 1, 1), (4, 2, 2), (-4, 3, 3)]),
        (1, 0, [(2, 0, 1), (1, 1, 0), (2, 2, 3), (1, 3, 2)]),
        (0, 1, [(2, 0, 1), (1, 1, 0), (-2, 2, 3), (-1, 3, 2)]),
        (3, 2, [(-4, 0, 1), (3, 1, 0), (-4, 2, 3), (3, 3, 2)]),
        (2, 3, [(4, 0, 1), (-3, 1, 0), (-4, 2, 3), (3, 3, 2)]),
        (2, 0, [(3, 0, 2), (-3, 1, 3), (1, 2, 0), (-1, 3, 1)]),
        (3, 1, [(4, 0, 2), (-4, 1, 3), (-2, 2, 0), (2, 3, 1)]),
        (0, 2, [(3, 0, 2), (3, 1, 3), (1, 2, 0), (1, 3, 1)]),
        (1, 3, [(-4, 0, 2), (-4, 1, 3), (2, 2, 0), (2, 3, 1)]),
        (3, 0, [(-4, 0, 3), (3, 1, 2), (-2, 2, 1), (1, 3, 0)]),
        (2, 1, [(-4, 0, 3), (3, 1, 2), (2, 2, 1), (-1, 3, 0)]),
        (1, 2, [(4, 0, 3), (3, 1, 2), (2, 2, 1), (1, 3, 0)]),
        (0, 3, [(-4, 0, 3), (-3, 1, 2), (2, 2, 1), (1, 3, 0)]),
    ];
    let mut out = StandardComponents::zero(4);
    for (k, r, terms) in rows {
        let mut acc = rint(0);
        for (code, row, col) in terms {
            acc += c(code) * m.get(row, col).clone();
        }
        out.set(k, r, acc);
    }
    out
}

fn unit_components(dim: usize, k: usize, r: usize) -> StandardComponents<Rat> {
    let mut s = StandardComponents::zero(dim);
    s.set(k, r, rint(1));
    s
}

fn unit_matrix(dim: usize, i: usize, j: usize) -> RatMatrix {
    let mut m: RatMatrix = Matrix::zero(dim);
    *m.get_mut(i, j) = rint(1);
    m
}

// ---------------------------------------------------------------------------
// Section 3: the complex field
// ---------------------------------------------------------------------------

fn thm_3_1() -> Check {
    let mut probe = Probe::new();
    let c = Algebra::complex();

    let mut expected: Vec<(usize, usize, usize, Rat)> = COMPLEX_CONSTANTS
        .iter()
        .map(|&(k, i, j, v)| (k, i, j, rint(v)))
        .collect();
    expected.sort();
    probe.eq(&c.sparse_constants(), &expected, || {
        "complex constants".to_string()
    });

    // The two-sided representation collapses to the coefficient patterns
    // f00 - f11 on the diagonal and +/-(f01 + f10) off it.
    let pattern = |k: usize, r: usize| -> RatMatrix {
        let (diag, off) = match (k, r) {
            (0, 0) => (rint(1), rint(0)),
            (1, 1) => (rint(-1), rint(0)),
            _ => (rint(0), rint(1)),
        };
        Matrix::from_rows(vec![vec![diag.clone(), -off.clone()], vec![off, diag]]).expect("2x2")
    };
    for k in 0..2 {
        for r in 0..2 {
            let got = standard_to_matrix(&unit_components(2, k, r), &c).expect("complex is ok");
            probe.eq(&got, &pattern(k, r), || format!("unit component ({k},{r})"));
        }
    }

    // The assembled relations of the linear-function matrix.
    let commutant = solve_commutant(&c, &left_regular_generators(&c)).expect("square generators");
    probe.eq(&commutant.dimension, &2, || "commutant dimension".into());
    probe.eq(
        &commutant.relations.render(),
        &vec![
            "f[0][0] = f[1][1]".to_string(),
            "f[0][1] = -f[1][0]".to_string(),
        ],
        || "complex relations".into(),
    );

    probe.finish(
        "complex-cr",
        "Thm 3.1",
        &[1, 4, 6],
        "complex constants, component patterns and relations match",
    )
}

fn thm_3_2() -> Check {
    let mut probe = Probe::new();
    let c = Algebra::complex();
    let commutant = solve_commutant(&c, &left_regular_generators(&c)).expect("square generators");
    for m in &commutant.basis {
        probe.eq(m.get(0, 0), m.get(1, 1), || "diagonal equality".into());
        probe.eq(&m.get(1, 0).clone(), &(-m.get(0, 1).clone()), || {
            "antisymmetric off-diagonal".into()
        });
    }
    probe.finish(
        "complex-jacobian-cr",
        "Thm 3.2",
        &[],
        "commutant matrices satisfy the Jacobian relations",
    )
}

fn thm_3_3() -> Check {
    let mut probe = Probe::new();
    let c = Algebra::complex();
    let commutant = solve_commutant(&c, &left_regular_generators(&c)).expect("square generators");
    for m in &commutant.basis {
        let defect = sandwich_check(m, &c).expect("unital");
        probe.check(defect.is_zero(), || format!("sandwich of {m:?} nonzero"));
    }
    let conjugation =
        Matrix::from_rows(vec![vec![rint(1), rint(0)], vec![rint(0), rint(-1)]]).expect("2x2");
    let defect = sandwich_check(&conjugation, &c).expect("unital");
    probe.eq(defect.coords(), &[rint(2), rint(0)][..], || {
        "conjugation defect".into()
    });
    probe.finish(
        "complex-operator-form",
        "Thm 3.3",
        &[],
        "operator form annihilates exactly the holomorphic maps",
    )
}

// ---------------------------------------------------------------------------
// Section 4: quaternion algebras
// ---------------------------------------------------------------------------

fn def_4_1() -> Check {
    let mut probe = Probe::new();

    let h = Algebra::h();
    let mut expected: Vec<(usize, usize, usize, Rat)> = H_CONSTANTS
        .iter()
        .map(|&(k, i, j, v)| (k, i, j, rint(v)))
        .collect();
    expected.sort();
    probe.eq(&h.sparse_constants(), &expected, || {
        "classical quaternion constants".into()
    });

    for (a, b) in [
        (rint(2), rint(3)),
        (rint(1), rint(-1)),
        (rat(1, 2), rint(5)),
    ] {
        let alg = Algebra::quaternion(a.clone(), b.clone()).expect("nonzero parameters");
        let mut expected = generic_quaternion_constants(&a, &b);
        expected.retain(|(_, _, _, v)| !v.is_zero());
        expected.sort_by_key(|x| (x.0, x.1, x.2));
        probe.eq(&alg.sparse_constants(), &expected, || {
            format!("constants at a={a}, b={b}")
        });
    }

    let spot = Algebra::quaternion(rint(2), rint(3)).expect("nonzero parameters");
    probe.eq(spot.constant(0, 1, 1), &rint(2), || "i^2 = a".into());
    probe.eq(spot.constant(0, 2, 2), &rint(3), || "j^2 = b".into());
    probe.eq(spot.constant(0, 3, 3), &rint(-6), || "k^2 = -ab".into());

    probe.check(Algebra::quaternion(rint(0), rint(1)).is_err(), || {
        "a = 0 accepted".into()
    });
    probe.check(Algebra::quaternion(rint(1), rint(0)).is_err(), || {
        "b = 0 accepted".into()
    });

    // Norm and inverse on the division case.
    let x = h
        .element(vec![rint(1), rint(1), rint(1), rint(1)])
        .expect("dim 4");
    probe.eq(&x.norm_sq().expect("quaternion"), &rint(4), || {
        "norm of 1+i+j+k".into()
    });
    let inv = x.invert().expect("nonzero norm");
    probe.eq(
        &x.mul(&inv).expect("same algebra"),
        &h.basis_element(0),
        || "x * x^{-1} = 1".into(),
    );

    probe.finish(
        "quaternion-tables",
        "Def 4.1",
        &[1],
        "quaternion constant tables reproduce the frozen entries",
    )
}

fn rotation_4_6(mut rng: ChaCha8Rng) -> Check {
    let mut probe = Probe::new();
    let h = Algebra::h();

    let q = h
        .element(vec![rint(1), rint(1), rint(0), rint(0)])
        .expect("dim 4");
    let examples = [
        ([0, 1, 0], [0, 0, 1]),
        ([0, 0, 1], [0, -1, 0]),
        ([1, 0, 0], [1, 0, 0]),
    ];
    for (input, output) in examples {
        let v = input.map(rint);
        let got = rotate_vector(&q, &v).expect("classical quaternions");
        probe.eq(&got, &output.map(rint), || format!("rotation of {input:?}"));
    }

    // The quadratic form is preserved exactly on random rational data.
    for _ in 0..1000 {
        let coords = rand_coords(&mut rng, 4);
        let q = match h.element(coords) {
            Ok(q) if !q.norm_sq().expect("quaternion").is_zero() => q,
            _ => continue,
        };
        let v: [Rat; 4 - 1] = array::from_fn(|_| rand_rat(&mut rng));
        let image = rotate_vector(&q, &v).expect("classical quaternions");
        let form = |w: &[Rat; 3]| {
            w.iter()
                .map(|c| c.clone() * c.clone())
                .fold(rint(0), |acc, c| acc + c)
        };
        probe.eq(&form(&image), &form(&v), || "quadratic form drift".into());
    }

    // Float view: the induced rotation angle is twice the half-angle.
    for _ in 0..100 {
        let alpha: f64 = rng.gen_range(0.02..1.55);
        let axis = [
            rng.gen_range(-1.0..1.0f64),
            rng.gen_range(-1.0..1.0f64),
            rng.gen_range(-1.0..1.0f64),
        ];
        let len = (axis[0].powi(2) + axis[1].powi(2) + axis[2].powi(2)).sqrt();
        if len < 1e-3 {
            continue;
        }
        let s = alpha.sin() / len;
        let q = [alpha.cos(), axis[0] * s, axis[1] * s, axis[2] * s];
        let angle = rotation_angle_check(&q).expect("unit quaternion");
        probe.check((angle - 2.0 * alpha).abs() <= 1e-9, || {
            format!("angle {angle} vs 2*{alpha}")
        });
    }

    probe.finish(
        "rotation",
        "§4 rotation",
        &[9],
        "vector rotation is exact and the float angle check agrees",
    )
}

// ---------------------------------------------------------------------------
// Section 5: towers
// ---------------------------------------------------------------------------

/// Two-dimensional algebra over the complex field with `w^2 = i`: the
/// smallest tower whose inner constants are not scalars.
fn nonscalar_tower() -> TowerSpec<Rat> {
    TowerSpec::from_sparse(
        Algebra::complex(),
        2,
        &[
            (0, 0, 0, 0, rint(1)),
            (1, 0, 0, 1, rint(1)),
            (1, 0, 1, 0, rint(1)),
            (0, 1, 1, 1, rint(1)),
        ],
    )
    .expect("indices in range")
}

fn fiber_unit_products_consistent(probe: &mut Probe, spec: &TowerSpec<Rat>, label: &str) {
    let towered = match crate::construct::tower_compose(spec) {
        Ok(t) => t,
        Err(e) => {
            probe.check(false, || format!("{label}: compose failed: {e}"));
            return;
        }
    };
    let od = spec.outer().dim();
    let id = spec.inner_dim();
    let pairing = IndexPairing::new(od, id);
    for i in 0..id {
        for k in 0..id {
            for d in 0..od {
                for b in 0..id {
                    // Product of fiber units e(0,i) e(0,k): both routes give
                    // the expanded inner constant.
                    let direct = towered.constant(
                        pairing.flatten(d, b),
                        pairing.flatten(0, i),
                        pairing.flatten(0, k),
                    );
                    probe.eq(direct, spec.constant(b, d, i, k), || {
                        format!("{label}: fiber-unit product ({i},{k}) at ({d},{b})")
                    });
                }
            }
        }
    }
}

fn thm_5_1() -> Check {
    let mut probe = Probe::new();
    let c = Algebra::complex();
    let h = Algebra::h();
    let cxh = tensor_product(&c, &h);

    let scalar_spec = TowerSpec::scalar(c.clone(), &h);
    probe.check(scalar_spec.has_scalar_constants(), || {
        "scalar spec not detected as scalar".into()
    });
    match crate::construct::tower_compose(&scalar_spec) {
        Ok(towered) => probe.eq(&towered, &cxh, || "tower vs tensor (C, H)".into()),
        Err(e) => probe.check(false, || format!("compose failed: {e}")),
    }

    let nested_spec = TowerSpec::scalar(c.clone(), &cxh);
    match crate::construct::tower_compose(&nested_spec) {
        Ok(towered) => probe.eq(&towered, &tensor_product(&c, &cxh), || {
            "tower vs tensor (C, CxH)".into()
        }),
        Err(e) => probe.check(false, || format!("compose failed: {e}")),
    }

    fiber_unit_products_consistent(&mut probe, &scalar_spec, "scalar tower");
    fiber_unit_products_consistent(&mut probe, &nonscalar_tower(), "w^2=i tower");

    probe.finish(
        "tower-reduction",
        "Thm 5.1",
        &[3],
        "scalar towers equal tensor products and fiber-unit products agree",
    )
}

fn thm_5_2(mut rng: ChaCha8Rng) -> Check {
    let mut probe = Probe::new();
    let pairing = IndexPairing::new(2, 4);

    // The element 1 (x) 1 has inner coordinate 0 equal to the unit.
    let mut flat = vec![rint(0); 8];
    flat[0] = rint(1);
    let fibered = reindex_coords(&flat, pairing).expect("length 8");
    probe.eq(&fibered[0], &vec![rint(1), rint(0)], || {
        "unit fiber coordinate".into()
    });

    // i (x) j sits at inner coordinate 2 with value i.
    let mut flat = vec![rint(0); 8];
    flat[pairing.flatten(1, 2)] = rint(1);
    let fibered = reindex_coords(&flat, pairing).expect("length 8");
    probe.eq(&fibered[2], &vec![rint(0), rint(1)], || {
        "i (x) j fiber coordinate".into()
    });

    for pairing in [
        IndexPairing::new(2, 4),
        IndexPairing::new(2, 8),
        IndexPairing::new(4, 3),
    ] {
        for _ in 0..100 {
            let flat = rand_coords(&mut rng, pairing.flat_dim());
            let fibered = reindex_coords(&flat, pairing).expect("length matches");
            let back = flatten_coords(&fibered, pairing).expect("shape matches");
            probe.eq(&back, &flat, || "round trip".into());
        }
    }

    probe.finish(
        "coordinate-reindexing",
        "Thm 5.2",
        &[],
        "flat and fiber coordinates are interchangeable",
    )
}

fn rand_fiber_matrix(rng: &mut ChaCha8Rng, inner: usize, outer: usize) -> FiberMatrix<Rat> {
    let mut m = FiberMatrix::identity(inner, outer);
    for i in 0..inner {
        for j in 0..inner {
            for c in 0..outer {
                m.set(i, j, c, rand_rat(rng));
            }
        }
    }
    m
}

fn thm_5_3(mut rng: ChaCha8Rng) -> Check {
    let mut probe = Probe::new();
    let c = Algebra::complex();
    let cxh = tensor_product(&c, &Algebra::h());

    // Left multiplication by i (x) 1 is the flat action of the scalar i.
    let scalar_action = cxh.basis_element(4).left_mul_matrix();
    for _ in 0..50 {
        let map = rand_fiber_matrix(&mut rng, 4, 2);
        let lifted = lift_linear_map(&map, &c).expect("dimensions agree");
        let left = lifted.mul(&scalar_action).expect("same dim");
        let right = scalar_action.mul(&lifted).expect("same dim");
        probe.eq(&left, &right, || {
            "lifted map does not commute with the scalar action".into()
        });
    }

    // Conversely the commutant of that action has exactly the dimension of
    // the fiber-valued matrices: 4 x 4 entries with 2 coordinates each.
    let commutant = solve_commutant(&cxh, &[scalar_action]).expect("square generators");
    probe.eq(&commutant.dimension, &32, || "commutant dimension".into());

    probe.finish(
        "fiber-linearity",
        "Thm 5.3",
        &[],
        "lifted maps are exactly the maps linear over the scalar action",
    )
}

fn in_scope_algebras() -> Vec<(&'static str, Algebra)> {
    let c = Algebra::complex();
    let h = Algebra::h();
    let cxh = tensor_product(&c, &h);
    let cxcxh = tensor_product(&c, &cxh);
    vec![
        ("C", c),
        ("H", h),
        (
            "E(2,3)",
            Algebra::quaternion(rint(2), rint(3)).expect("nonzero"),
        ),
        (
            "E(1,-1)",
            Algebra::quaternion(rint(1), rint(-1)).expect("nonzero"),
        ),
        ("CxH", cxh),
        ("CxCxH", cxcxh),
    ]
}

fn thm_5_4() -> Check {
    let mut probe = Probe::new();
    for (name, algebra) in in_scope_algebras() {
        let generators = left_regular_generators(&algebra);
        for idx in 0..algebra.dim() {
            let right = algebra.basis_element(idx).right_mul_matrix();
            for (gen_idx, g) in generators.iter().enumerate() {
                let fg = right.mul(g).expect("same dim");
                let gf = g.mul(&right).expect("same dim");
                probe.eq(&fg, &gf, || {
                    format!("{name}: right-mult {idx} vs generator {gen_idx}")
                });
            }
        }
    }
    probe.finish(
        "right-multiplication-linearity",
        "Thm 5.4",
        &[10],
        "right multiplications commute with every left multiplication",
    )
}

fn thm_5_5() -> Check {
    let mut probe = Probe::new();
    let c = Algebra::complex();
    let commutant = solve_commutant(&c, &left_regular_generators(&c)).expect("square generators");
    probe.eq(&commutant.dimension, &2, || "dimension".into());
    probe.eq(
        &commutant.relations.render(),
        &vec![
            "f[0][0] = f[1][1]".to_string(),
            "f[0][1] = -f[1][0]".to_string(),
        ],
        || "relations".into(),
    );
    probe.eq(
        &commutant.relations.regenerate_basis(),
        &commutant.basis,
        || "relations do not regenerate the basis".into(),
    );
    probe.finish(
        "complex-linear-maps",
        "Thm 5.5",
        &[4],
        "complex-linear maps have dimension 2 with the expected relations",
    )
}

fn thm_5_6() -> Check {
    let mut probe = Probe::new();
    let h = Algebra::h();
    let commutant = solve_commutant(&h, &left_regular_generators(&h)).expect("square generators");
    probe.eq(&commutant.dimension, &4, || "dimension".into());
    let expected: Vec<String> = [
        "f[0][0] = f[1][1] = f[2][2] = f[3][3]",
        "f[0][1] = -f[1][0] = -f[2][3] = f[3][2]",
        "f[0][2] = f[1][3] = -f[2][0] = -f[3][1]",
        "f[0][3] = -f[1][2] = f[2][1] = -f[3][0]",
    ]
    .map(String::from)
    .to_vec();
    probe.eq(&commutant.relations.render(), &expected, || {
        "relations".into()
    });

    // The solution space is exactly the right multiplications.
    for m in &commutant.basis {
        let c = h.element(m.column(0)).expect("dim 4");
        probe.eq(&c.right_mul_matrix(), m, || {
            "basis matrix is not a right multiplication".into()
        });
    }
    probe.finish(
        "quaternion-linear-maps",
        "Thm 5.6",
        &[4],
        "H-linear maps have dimension 4 with the expected sign chains",
    )
}

fn thm_5_7(mut rng: ChaCha8Rng) -> Check {
    let mut probe = Probe::new();
    let c = Algebra::complex();
    let pairing = IndexPairing::new(2, 4);

    // The identity map lifts to the identity matrix.
    let identity = lift_linear_map(&FiberMatrix::identity(4, 2), &c).expect("dimensions agree");
    probe.eq(&identity, &Matrix::identity(8), || "identity lift".into());

    for _ in 0..100 {
        let map = rand_fiber_matrix(&mut rng, 4, 2);
        let lifted = lift_linear_map(&map, &c).expect("dimensions agree");
        let flat = rand_coords(&mut rng, 8);
        let via_flat = lifted.apply(&flat).expect("length 8");

        // Fiber route: multiply each coefficient in the outer algebra.
        let fibered = reindex_coords(&flat, pairing).expect("length 8");
        let mut image_fibered = vec![vec![rint(0); 2]; 4];
        for i in 0..4 {
            for (j, a_j) in fibered.iter().enumerate() {
                let coeff = c.element(map.coeff(i, j).to_vec()).expect("dim 2");
                let factor = c.element(a_j.clone()).expect("dim 2");
                let term = coeff.mul(&factor).expect("same algebra");
                for (slot, t) in image_fibered[i].iter_mut().zip(term.coords()) {
                    *slot = slot.clone() + t.clone();
                }
            }
        }
        let via_fiber = flatten_coords(&image_fibered, pairing).expect("shape matches");
        probe.eq(&via_flat, &via_fiber, || "lift action mismatch".into());
    }

    probe.finish(
        "map-lifting",
        "Thm 5.7",
        &[],
        "lifted matrices act like their fiber-valued originals",
    )
}

// ---------------------------------------------------------------------------
// Section 6: the tensor algebra C (x) H
// ---------------------------------------------------------------------------

fn thm_6_1() -> Check {
    let mut probe = Probe::new();
    let t = tensor_product(&Algebra::complex(), &Algebra::h());
    probe.check(t.is_unital(), || "tensor table not unital".into());
    for r in 0..8 {
        // Unit row and column.
        let e0 = t.basis_element(0);
        let er = t.basis_element(r);
        probe.eq(&e0.mul(&er).expect("same algebra"), &er, || {
            format!("1 * e{r}")
        });
        probe.eq(&er.mul(&e0).expect("same algebra"), &er, || {
            format!("e{r} * 1")
        });
    }
    for (row, entries) in CXH_PRODUCT_TABLE.iter().enumerate() {
        for (col, &(sign, target)) in entries.iter().enumerate() {
            let left = t.basis_element(row + 1);
            let right = t.basis_element(col + 1);
            let got = left.mul(&right).expect("same algebra");
            let expected = t.basis_element(target).scale(&rint(sign as i64));
            probe.eq(&got, &expected, || {
                format!("product e{} * e{}", row + 1, col + 1)
            });
        }
    }
    probe.finish(
        "cxh-product-table",
        "Thm 6.1",
        &[2],
        "all 64 tensor products match the frozen table",
    )
}

fn thm_6_2() -> Check {
    let mut probe = Probe::new();
    let c = Algebra::complex();
    let h = Algebra::h();
    let t = tensor_product(&c, &h);
    let pairing = IndexPairing::new(2, 4);
    for d in 0..2 {
        for b in 0..4 {
            for j in 0..2 {
                for i in 0..4 {
                    for m in 0..2 {
                        for k in 0..4 {
                            let got = t.constant(
                                pairing.flatten(d, b),
                                pairing.flatten(j, i),
                                pairing.flatten(m, k),
                            );
                            let want = c.constant(d, j, m).clone() * h.constant(b, i, k).clone();
                            probe.eq(got, &want, || format!("constant ({d}{b},{j}{i},{m}{k})"));
                        }
                    }
                }
            }
        }
    }
    probe.finish(
        "cxh-constants",
        "Thm 6.2",
        &[],
        "every tensor constant is the product of its factor constants",
    )
}

fn cxh_commutant() -> linmap::Commutant<Rat> {
    let t = tensor_product(&Algebra::complex(), &Algebra::h());
    // Generators: left multiplication by the two basis vectors spanning the
    // complex factor, 1 (x) 1 and i (x) 1.
    let generators = vec![
        t.basis_element(0).left_mul_matrix(),
        t.basis_element(4).left_mul_matrix(),
    ];
    solve_commutant(&t, &generators).expect("square generators")
}

fn cxh_pattern_holds(probe: &mut Probe, m: &RatMatrix, label: &str) {
    for j in 0..4 {
        for i in 0..4 {
            probe.eq(m.get(j, i), m.get(4 + j, 4 + i), || {
                format!("{label}: block equality at ({j},{i})")
            });
            probe.eq(
                &m.get(4 + j, i).clone(),
                &(-m.get(j, 4 + i).clone()),
                || format!("{label}: block antisymmetry at ({j},{i})"),
            );
        }
    }
}

fn thm_6_3() -> Check {
    let mut probe = Probe::new();
    let commutant = cxh_commutant();
    probe.eq(&commutant.dimension, &32, || "dimension".into());
    for (idx, m) in commutant.basis.iter().enumerate() {
        cxh_pattern_holds(&mut probe, m, &format!("basis {idx}"));
    }

    // Rendered relations: every entry of the top half leads a two-term
    // chain into the bottom half.
    let mut expected = Vec::new();
    for j in 0..4 {
        for i in 0..4 {
            expected.push(format!("f[{j}][{i}] = f[{}][{}]", j + 4, i + 4));
        }
        for i in 0..4 {
            expected.push(format!("f[{j}][{}] = -f[{}][{i}]", i + 4, j + 4));
        }
    }
    probe.eq(&commutant.relations.render(), &expected, || {
        "relations".into()
    });

    probe.finish(
        "cxh-linear-maps",
        "Thm 6.3",
        &[4],
        "maps linear over the complex factor have dimension 32 with paired entries",
    )
}

fn thm_6_4(mut rng: ChaCha8Rng) -> Check {
    let mut probe = Probe::new();
    let commutant = cxh_commutant();
    // Any constant-Jacobian map assembled from the solution space satisfies
    // the same partial-derivative relations.
    for round in 0..20 {
        let mut m: RatMatrix = Matrix::zero(8);
        for basis in &commutant.basis {
            m = m.add(&basis.scale(&rand_rat(&mut rng))).expect("same dim");
        }
        cxh_pattern_holds(&mut probe, &m, &format!("combination {round}"));
    }
    probe.finish(
        "cxh-jacobians",
        "Thm 6.4",
        &[],
        "random members of the solution space satisfy the Jacobian relations",
    )
}

// ---------------------------------------------------------------------------
// Section 7: the tensor algebra C (x) (C (x) H)
// ---------------------------------------------------------------------------

fn cxcxh() -> Algebra {
    let c = Algebra::complex();
    tensor_product(&c, &tensor_product(&c, &Algebra::h()))
}

fn thm_7_1() -> Check {
    let mut probe = Probe::new();
    let c = Algebra::complex();
    let h = Algebra::h();
    let t = cxcxh();
    let flat = |p: usize, j: usize, i: usize| p * 8 + j * 4 + i;
    for r in 0..2 {
        for d in 0..2 {
            for b in 0..4 {
                for p in 0..2 {
                    for j in 0..2 {
                        for i in 0..4 {
                            for q in 0..2 {
                                for m in 0..2 {
                                    for k in 0..4 {
                                        let got =
                                            t.constant(flat(r, d, b), flat(p, j, i), flat(q, m, k));
                                        let want = c.constant(r, p, q).clone()
                                            * c.constant(d, j, m).clone()
                                            * h.constant(b, i, k).clone();
                                        probe.eq(got, &want, || {
                                            format!("constant ({r}{d}{b},{p}{j}{i},{q}{m}{k})")
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    probe.finish(
        "cxcxh-constants",
        "Thm 7.1",
        &[],
        "every constant is the triple product of its factor constants",
    )
}

fn thm_7_2() -> Check {
    let mut probe = Probe::new();
    let c = Algebra::complex();
    let h = Algebra::h();
    let t = cxcxh();
    let flat = |p: usize, j: usize, i: usize| p * 8 + j * 4 + i;
    // For each choice of complex indices the whole quaternion slice is the
    // quaternion table up to the sign of the complex products.
    for p in 0..2 {
        for q in 0..2 {
            for j in 0..2 {
                for m in 0..2 {
                    let (r, s1) = if c.constant(0, p, q).is_zero() {
                        (1, c.constant(1, p, q).clone())
                    } else {
                        (0, c.constant(0, p, q).clone())
                    };
                    let (d, s2) = if c.constant(0, j, m).is_zero() {
                        (1, c.constant(1, j, m).clone())
                    } else {
                        (0, c.constant(0, j, m).clone())
                    };
                    let sign = s1 * s2;
                    for b in 0..4 {
                        for i in 0..4 {
                            for k in 0..4 {
                                let got = t.constant(flat(r, d, b), flat(p, j, i), flat(q, m, k));
                                let want = h.constant(b, i, k).clone() * sign.clone();
                                probe.eq(got, &want, || {
                                    format!("slice ({p}{j},{q}{m}) at ({b},{i},{k})")
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    probe.finish(
        "cxcxh-slices",
        "Thm 7.2",
        &[2],
        "each complex index choice reproduces the signed quaternion table",
    )
}

fn cxcxh_commutant() -> linmap::Commutant<Rat> {
    let t = cxcxh();
    // Left multiplication by i(x)(1(x)1) (flat 8) and 1(x)(i(x)1) (flat 4).
    let generators = vec![
        t.basis_element(8).left_mul_matrix(),
        t.basis_element(4).left_mul_matrix(),
    ];
    solve_commutant(&t, &generators).expect("square generators")
}

fn cxcxh_pattern_holds(probe: &mut Probe, m: &RatMatrix, label: &str) {
    for j in 0..4 {
        for i in 0..4 {
            let base = m.get(j, i).clone();
            probe.eq(m.get(4 + j, 4 + i), &base, || {
                format!("{label}: chain 1 at ({j},{i})")
            });
            probe.eq(m.get(8 + j, 8 + i), &base, || {
                format!("{label}: chain 1 at ({j},{i})")
            });
            probe.eq(m.get(12 + j, 12 + i), &base, || {
                format!("{label}: chain 1 at ({j},{i})")
            });

            let q = m.get(j, 4 + i).clone();
            probe.eq(&m.get(4 + j, i).clone(), &(-q.clone()), || {
                format!("{label}: chain 2 at ({j},{i})")
            });
            probe.eq(m.get(8 + j, 12 + i), &q, || {
                format!("{label}: chain 2 at ({j},{i})")
            });
            probe.eq(&m.get(12 + j, 8 + i).clone(), &(-q.clone()), || {
                format!("{label}: chain 2 at ({j},{i})")
            });

            let r = m.get(j, 8 + i).clone();
            probe.eq(m.get(4 + j, 12 + i), &r, || {
                format!("{label}: chain 3 at ({j},{i})")
            });
            probe.eq(&m.get(8 + j, i).clone(), &(-r.clone()), || {
                format!("{label}: chain 3 at ({j},{i})")
            });
            probe.eq(&m.get(12 + j, 4 + i).clone(), &(-r.clone()), || {
                format!("{label}: chain 3 at ({j},{i})")
            });

            let s = m.get(j, 12 + i).clone();
            probe.eq(&m.get(4 + j, 8 + i).clone(), &(-s.clone()), || {
                format!("{label}: chain 4 at ({j},{i})")
            });
            probe.eq(&m.get(8 + j, 4 + i).clone(), &(-s.clone()), || {
                format!("{label}: chain 4 at ({j},{i})")
            });
            probe.eq(m.get(12 + j, i), &s, || {
                format!("{label}: chain 4 at ({j},{i})")
            });
        }
    }
}

fn thm_7_3() -> Check {
    let mut probe = Probe::new();
    let commutant = cxcxh_commutant();
    probe.eq(&commutant.dimension, &64, || "dimension".into());
    for (idx, m) in commutant.basis.iter().enumerate() {
        cxcxh_pattern_holds(&mut probe, m, &format!("basis {idx}"));
    }

    // Rendered relations: four-term chains led from the top four rows.
    let mut expected = Vec::new();
    for j in 0..4 {
        for i in 0..4 {
            expected.push(format!(
                "f[{j}][{i}] = f[{}][{}] = f[{}][{}] = f[{}][{}]",
                j + 4,
                i + 4,
                j + 8,
                i + 8,
                j + 12,
                i + 12
            ));
        }
        for i in 0..4 {
            expected.push(format!(
                "f[{j}][{}] = -f[{}][{i}] = f[{}][{}] = -f[{}][{}]",
                i + 4,
                j + 4,
                j + 8,
                i + 12,
                j + 12,
                i + 8
            ));
        }
        for i in 0..4 {
            expected.push(format!(
                "f[{j}][{}] = f[{}][{}] = -f[{}][{i}] = -f[{}][{}]",
                i + 8,
                j + 4,
                i + 12,
                j + 8,
                j + 12,
                i + 4
            ));
        }
        for i in 0..4 {
            expected.push(format!(
                "f[{j}][{}] = -f[{}][{}] = -f[{}][{}] = f[{}][{i}]",
                i + 12,
                j + 4,
                i + 8,
                j + 8,
                i + 4,
                j + 12
            ));
        }
    }
    probe.eq(&commutant.relations.render(), &expected, || {
        "relations".into()
    });

    probe.finish(
        "cxcxh-linear-maps",
        "Thm 7.3",
        &[4],
        "maps linear over both complex factors have dimension 64 with four-term chains",
    )
}

fn thm_7_4(mut rng: ChaCha8Rng) -> Check {
    let mut probe = Probe::new();
    let commutant = cxcxh_commutant();
    for round in 0..5 {
        let mut m: RatMatrix = Matrix::zero(16);
        for basis in &commutant.basis {
            m = m.add(&basis.scale(&rand_rat(&mut rng))).expect("same dim");
        }
        cxcxh_pattern_holds(&mut probe, &m, &format!("combination {round}"));
    }
    probe.finish(
        "cxcxh-jacobians",
        "Thm 7.4",
        &[],
        "random members of the solution space satisfy the Jacobian relations",
    )
}

/// The grouping demonstration: over the rationals the doubled complex
/// factor does not collapse. The sixteen-dimensional algebra is genuinely
/// larger than the tensor algebra with one complex factor, with twice its
/// commutant; the construction itself is associative, so bracketing the
/// three factors either way yields the same table, and the collapse claim
/// fails only because the complex-times-complex factor has dimension 4,
/// not 2.
fn tensor_grouping() -> Check {
    let mut probe = Probe::new();
    let c = Algebra::complex();
    let h = Algebra::h();
    let cxh = tensor_product(&c, &h);
    let doubled = tensor_product(&c, &cxh);

    probe.eq(&doubled.dim(), &16, || {
        "dimension of the doubled algebra".into()
    });
    probe.eq(&cxh.dim(), &8, || {
        "dimension of the single-factor algebra".into()
    });

    let single_commutant = cxh_commutant();
    let double_commutant = cxcxh_commutant();
    probe.eq(&single_commutant.dimension, &32, || {
        "single-factor commutant".into()
    });
    probe.eq(&double_commutant.dimension, &64, || {
        "double-factor commutant".into()
    });

    let cxc = tensor_product(&c, &c);
    probe.eq(&cxc.dim(), &4, || "dimension of C (x) C".into());
    let report = cxc.structure_report();
    probe.check(report.commutative && report.unital, || {
        "C (x) C must be commutative and unital".into()
    });

    // Bracketing does not matter for the flat construction itself.
    probe.eq(&tensor_product(&cxc, &h), &doubled, || {
        "tensor tables under the two groupings".into()
    });

    probe.finish(
        "tensor-grouping",
        "§7 grouping",
        &[],
        "the doubled complex factor enlarges the algebra instead of collapsing",
    )
}

// ---------------------------------------------------------------------------
// Section 8: the component conversion over E(R, a, b)
// ---------------------------------------------------------------------------

fn sample_parameters() -> Vec<(Rat, Rat)> {
    vec![
        (rint(-1), rint(-1)),
        (rint(2), rint(3)),
        (rint(1), rint(-1)),
    ]
}

fn thm_8_1(mut rng: ChaCha8Rng) -> Check {
    let mut probe = Probe::new();
    for (a, b) in sample_parameters() {
        let alg = Algebra::quaternion(a.clone(), b.clone()).expect("nonzero parameters");

        // Forward direction on every unit component: linearity makes this a
        // complete check of the coefficient table.
        for k in 0..4 {
            for r in 0..4 {
                let std = unit_components(4, k, r);
                let got = standard_to_matrix(&std, &alg).expect("associative unital");
                let want = expected_matrix_from_components(&a, &b, &std);
                probe.eq(&got, &want, || {
                    format!("forward unit ({k},{r}) at a={a}, b={b}")
                });
            }
        }

        // Inverse direction on every unit matrix entry.
        for i in 0..4 {
            for j in 0..4 {
                let m = unit_matrix(4, i, j);
                let got = matrix_to_standard(&m, &alg).expect("nonsingular blocks");
                let want = expected_components_from_matrix(&a, &b, &m);
                probe.eq(&got, &want, || {
                    format!("inverse unit ({i},{j}) at a={a}, b={b}")
                });
            }
        }

        // A few random dense checks of both frozen tables.
        for _ in 0..10 {
            let m = rand_matrix(&mut rng, 4);
            let std = matrix_to_standard(&m, &alg).expect("nonsingular blocks");
            probe.eq(&std, &expected_components_from_matrix(&a, &b, &m), || {
                format!("inverse random at a={a}, b={b}")
            });
            probe.eq(
                &standard_to_matrix(&std, &alg).expect("associative unital"),
                &expected_matrix_from_components(&a, &b, &std),
                || format!("forward random at a={a}, b={b}"),
            );
        }
    }
    probe.finish(
        "component-formulas",
        "Thm 8.1",
        &[5],
        "both conversion directions match the frozen coefficient tables",
    )
}

fn thm_8_2(mut rng: ChaCha8Rng) -> Check {
    let mut probe = Probe::new();
    for (a, b) in sample_parameters() {
        let alg = Algebra::quaternion(a.clone(), b.clone()).expect("nonzero parameters");
        probe.check(linmap::standard_block_inverses(&alg).is_ok(), || {
            format!("singular block at a={a}, b={b}")
        });
        for _ in 0..100 {
            let m = rand_matrix(&mut rng, 4);
            let std = matrix_to_standard(&m, &alg).expect("nonsingular blocks");
            let back = standard_to_matrix(&std, &alg).expect("associative unital");
            probe.eq(&back, &m, || format!("round trip at a={a}, b={b}"));
        }
        for _ in 0..20 {
            let std = StandardComponents::new(rand_matrix(&mut rng, 4));
            let m = standard_to_matrix(&std, &alg).expect("associative unital");
            let back = matrix_to_standard(&m, &alg).expect("nonsingular blocks");
            probe.eq(&back, &std, || {
                format!("reverse round trip at a={a}, b={b}")
            });
        }
    }
    probe.finish(
        "component-bijection",
        "Thm 8.2",
        &[5],
        "the component conversion is an exact bijection at every sample",
    )
}

// ---------------------------------------------------------------------------
// Section 9: regular functions
// ---------------------------------------------------------------------------

fn thm_9_1(mut rng: ChaCha8Rng) -> Check {
    let mut probe = Probe::new();
    let h = Algebra::h();
    for _ in 0..100 {
        let f = rand_function(&mut rng);
        for _ in 0..10 {
            let p = rand_quat(&mut rng);
            let report = check_regular(&f, &p);
            probe.eq(&report.system, &report.operator, || {
                "operator and system residuals differ".into()
            });
            // The operator form as a row * matrix * column contraction.
            let sandwich = sandwich_check(&f.jacobian_at(&p), &h).expect("unital");
            probe.eq(sandwich.coords(), &report.operator[..], || {
                "sandwich contraction differs from the operator residual".into()
            });
        }
    }
    probe.finish(
        "regularity-equivalence",
        "Thm 9.1",
        &[8],
        "operator, system and sandwich residuals agree on random functions",
    )
}

fn thm_9_2(mut rng: ChaCha8Rng) -> Check {
    let mut probe = Probe::new();
    let minus_two = rint(-2);
    for _ in 0..100 {
        let f = rand_function(&mut rng);
        for _ in 0..10 {
            let p = rand_quat(&mut rng);
            let report = check_regular(&f, &p);
            let std_report = check_regular_via_standard(&f, &p).expect("nonsingular blocks");
            probe.eq(&report.regular, &std_report.regular, || {
                "verdicts differ".into()
            });
            for (r, c) in report.system.iter().zip(&std_report.combinations) {
                probe.eq(r, &(minus_two.clone() * c.clone()), || {
                    "residual is not -2 times the component combination".into()
                });
            }
        }
    }
    // The same identity holds between the residual polynomials.
    for f in [
        QuaternionPolynomial::x_squared(),
        QuaternionPolynomial::x_cubed(),
        QuaternionPolynomial::conjugation(),
        rand_function(&mut rng),
    ] {
        let residuals = residual_polynomials(&f);
        let combos = standard_combination_polynomials(&f).expect("nonsingular blocks");
        for (r, c) in residuals.iter().zip(&combos) {
            probe.eq(r, &c.scale(&minus_two), || {
                "polynomial identity fails".into()
            });
        }
    }
    probe.finish(
        "component-regularity",
        "Thm 9.2",
        &[8],
        "component combinations are -1/2 of the coordinate residuals",
    )
}

fn thm_9_3(mut rng: ChaCha8Rng) -> Check {
    let mut probe = Probe::new();

    // Worked example: the degree-one regular function has components
    // S10 = S01 = -1/2 and differential -i at dx = 1.
    let mut std = StandardComponents::zero(4);
    std.set(1, 0, rat(-1, 2));
    std.set(0, 1, rat(-1, 2));
    let dx = [rint(1), rint(0), rint(0), rint(0)];
    probe.eq(
        &gateaux_differential(&std, &dx),
        &[rint(0), rint(-1), rint(0), rint(0)],
        || "differential of the degree-one regular function".into(),
    );

    // On components satisfying the vanishing combinations the grouped form
    // is an identity for the full contraction.
    for _ in 0..50 {
        let mut std = StandardComponents::zero(4);
        for k in 1..4 {
            for r in 0..4 {
                std.set(k, r, rand_rat(&mut rng));
            }
        }
        let s = |k: usize, r: usize| std.get(k, r).clone();
        let forced = [
            rint(0) - s(1, 1) - s(2, 2) - s(3, 3),
            s(1, 0) + s(2, 3) - s(3, 2),
            rint(0) - s(1, 3) + s(2, 0) + s(3, 1),
            s(1, 2) - s(2, 1) + s(3, 0),
        ];
        for (r, value) in forced.into_iter().enumerate() {
            std.set(0, r, value);
        }
        let dx = rand_quat(&mut rng);
        probe.eq(
            &gateaux_differential(&std, &dx),
            &gateaux_differential_grouped(&std, &dx),
            || "grouped differential differs from the contraction".into(),
        );
    }
    probe.finish(
        "gateaux-differential",
        "Thm 9.3",
        &[],
        "the grouped differential equals the full contraction on regular components",
    )
}

fn regular_examples() -> Check {
    let mut probe = Probe::new();

    let constant = QuaternionPolynomial::constant(&[rint(3), rint(-1), rint(0), rint(7)]);
    let (regular, _) = check_regular_everywhere(&constant);
    probe.check(regular, || "constant not regular".into());

    let fueter = QuaternionPolynomial::<Rat>::fueter_variable();
    let (regular, residuals) = check_regular_everywhere(&fueter);
    probe.check(regular, || "degree-one regular function rejected".into());
    probe.check(residuals.iter().all(CoordPolynomial::is_zero), || {
        "nonzero residual polynomials".into()
    });

    let identity = QuaternionPolynomial::<Rat>::variable();
    let report = check_regular(&identity, &[rint(0), rint(0), rint(0), rint(0)]);
    probe.check(!report.regular, || {
        "identity map accepted as regular".into()
    });
    probe.eq(&report.system[0], &rint(-2), || "identity residual".into());
    probe.eq(
        &report.system[1..],
        &[rint(0), rint(0), rint(0)][..],
        || "identity residual tail".into(),
    );

    probe.finish(
        "regular-examples",
        "§9 examples",
        &[7],
        "constants and the degree-one function are regular; the identity is not",
    )
}

// ---------------------------------------------------------------------------
// Section 10: the relaxed conditions
// ---------------------------------------------------------------------------

fn thm_10_1() -> Check {
    let mut probe = Probe::new();
    let conj = QuaternionPolynomial::<Rat>::conjugation();
    let report = cr_like_everywhere(&conj);
    probe.check(!report.diagonal_equal, || {
        "conjugation passed the diagonal condition".into()
    });
    let at_origin = cr_like_at(&conj, &[rint(0), rint(0), rint(0), rint(0)]);
    probe.eq(&at_origin.diagonal[0], &rint(1), || "d y0 / d x0".into());
    probe.eq(&at_origin.diagonal[1], &rint(-1), || "d y1 / d x1".into());
    probe.check(at_origin.antisymmetric, || {
        "conjugation off-diagonals nonzero".into()
    });
    probe.finish(
        "conjugation-fails",
        "Thm 10.1",
        &[7],
        "conjugation violates the equal-diagonal condition (1 vs -1)",
    )
}

fn x_squared_10_5() -> Check {
    let mut probe = Probe::new();
    let f = QuaternionPolynomial::<Rat>::x_squared();

    // Coordinates.
    let x = |i: usize| CoordPolynomial::<Rat>::var(i);
    let two = rint(2);
    let expected_y0 = x(0)
        .mul(&x(0))
        .sub(&x(1).mul(&x(1)))
        .sub(&x(2).mul(&x(2)))
        .sub(&x(3).mul(&x(3)));
    probe.eq(f.coord(0), &expected_y0, || "y0".into());
    for i in 1..4 {
        probe.eq(&f.coord(i), &&x(0).mul(&x(i)).scale(&two), || {
            format!("y{i}")
        });
    }

    // Jacobian entries.
    let jac = f.jacobian_symbolic();
    for j in 0..4 {
        let sign = if j == 0 { rint(2) } else { rint(-2) };
        probe.eq(&jac[0][j], &x(j).scale(&sign), || {
            format!("jacobian (0,{j})")
        });
    }
    for i in 1..4 {
        for j in 0..4 {
            let expected = if j == 0 {
                x(i).scale(&two)
            } else if j == i {
                x(0).scale(&two)
            } else {
                CoordPolynomial::zero()
            };
            probe.eq(&jac[i][j], &expected, || format!("jacobian ({i},{j})"));
        }
    }

    probe.check(cr_like_everywhere(&f).holds(), || {
        "x^2 fails the relaxed conditions".into()
    });

    probe.finish(
        "x-squared-derivative",
        "§10 x^2",
        &[7],
        "x^2 has the expected Jacobian and satisfies both relaxed conditions",
    )
}

fn thm_10_2() -> Check {
    let mut probe = Probe::new();
    let f = QuaternionPolynomial::<Rat>::x_cubed();

    // The two diagonal partials, as polynomials.
    let x = |i: usize| CoordPolynomial::<Rat>::var(i);
    let sq = |i: usize| x(i).mul(&x(i));
    let three = rint(3);
    let d00 = sq(0)
        .scale(&three)
        .sub(&sq(1).scale(&three))
        .sub(&sq(2).scale(&three))
        .sub(&sq(3).scale(&three));
    let d11 = sq(0)
        .scale(&three)
        .sub(&sq(1).scale(&three))
        .sub(&sq(2))
        .sub(&sq(3));
    let jac = f.jacobian_symbolic();
    probe.eq(&jac[0][0], &d00, || "d y0 / d x0".into());
    probe.eq(&jac[1][1], &d11, || "d y1 / d x1".into());

    // Witness point: the two differ, 0 vs 2.
    let witness = [rint(1), rint(0), rint(1), rint(0)];
    let report = cr_like_at(&f, &witness);
    probe.check(!report.diagonal_equal, || {
        "x^3 passed the diagonal condition".into()
    });
    probe.eq(&report.diagonal[0], &rint(0), || {
        "d y0 / d x0 at witness".into()
    });
    probe.eq(&report.diagonal[1], &rint(2), || {
        "d y1 / d x1 at witness".into()
    });

    // At a point with x2 = x3 = 0 the two agree; the failure needs the
    // asymmetric quadratic terms.
    let report = cr_like_at(&f, &[rint(1), rint(1), rint(0), rint(0)]);
    probe.eq(&report.diagonal[0], &report.diagonal[1], || {
        "diagonal values at (1,1,0,0)".into()
    });

    probe.finish(
        "x-cubed-fails",
        "Thm 10.2",
        &[7],
        "x^3 has the expected diagonal partials and fails at the witness point",
    )
}

// ---------------------------------------------------------------------------
// Derivative oracle
// ---------------------------------------------------------------------------

fn fd_oracle(mut rng: ChaCha8Rng) -> Check {
    let mut probe = Probe::new();
    let h8 = rat(1, 8);
    let h16 = rat(1, 16);
    let four = rint(4);

    let central = |f: &QuaternionPolynomial<Rat>, p: &[Rat; 4], j: usize, h: &Rat| -> [Rat; 4] {
        let mut plus = p.clone();
        plus[j] = plus[j].clone() + h.clone();
        let mut minus = p.clone();
        minus[j] = minus[j].clone() - h.clone();
        let up = f.eval(&plus);
        let down = f.eval(&minus);
        array::from_fn(|i| (up[i].clone() - down[i].clone()) / (rint(2) * h.clone()))
    };

    for _ in 0..40 {
        let f = rand_function(&mut rng);
        let p = rand_quat(&mut rng);
        let jac = f.jacobian_at(&p);
        for j in 0..4 {
            let d8 = central(&f, &p, j, &h8);
            let d16 = central(&f, &p, j, &h16);
            for i in 0..4 {
                let err8 = d8[i].clone() - jac.get(i, j).clone();
                let err16 = d16[i].clone() - jac.get(i, j).clone();
                // Degree <= 3 means the error is exactly quadratic in the
                // step: quartering the step quarters it.
                probe.eq(&err8, &(four.clone() * err16), || {
                    format!("error ratio at coordinate {i}, variable {j}")
                });
            }
        }
    }

    // Affine functions differentiate exactly.
    for _ in 0..10 {
        let f = QuaternionPolynomial::build(&[
            vec![rand_quat(&mut rng)],
            vec![rand_quat(&mut rng), rand_quat(&mut rng)],
        ])
        .expect("monomials are nonempty");
        let p = rand_quat(&mut rng);
        let jac = f.jacobian_at(&p);
        for j in 0..4 {
            let d8 = central(&f, &p, j, &h8);
            for i in 0..4 {
                probe.eq(&d8[i], jac.get(i, j), || {
                    format!("affine exactness at coordinate {i}, variable {j}")
                });
            }
        }
    }

    probe.finish(
        "finite-difference-oracle",
        "FD oracle",
        &[10],
        "central differences agree with symbolic partials at the exact quadratic rate",
    )
}
