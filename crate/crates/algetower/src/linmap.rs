//! Linear maps of an algebra: commutants, Cauchy-Riemann-style relations,
//! and the standard-component representation.
//!
//! A matrix `f` is linear over a subalgebra exactly when it commutes with
//! the left-multiplication operators of that subalgebra, `f G = G f`. The
//! solver computes the exact nullspace of that condition over the rational
//! scalar and canonicalizes it to a reduced echelon basis, from which the
//! entry relations (`f[0][0] = f[1][1]`, `f[0][1] = -f[1][0]`, ...) are read
//! off deterministically.
//!
//! Standard components represent a map as a two-sided multiplication sum
//! `x -> sum f^{kr} e_k x e_r`; for a quaternion-type algebra the passage
//! between components and the coordinate matrix is an exact bijection,
//! implemented by solving four 4x4 blocks.

use thiserror::Error;

use crate::algebra::{AlgElement, AlgebraError, AlgebraTable};
use crate::elim;
use crate::matrix::{Matrix, MatrixError};
use crate::Scalar;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinMapError {
    #[error("matrix dimension {matrix} does not match algebra dimension {algebra}")]
    DimensionMismatch { matrix: usize, algebra: usize },
    #[error("operation requires a unital algebra")]
    NotUnital,
    #[error("operation requires an associative algebra")]
    NotAssociative,
    #[error("operation requires a quaternion-type algebra E(F,a,b)")]
    NotQuaternion,
    #[error("block system {block} of the component conversion is singular")]
    SingularBlock { block: usize },
    #[error("basis matrices are linearly dependent")]
    DependentBasis,
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// One chain of equal-up-to-sign entries: `lead = sign * entry` for each
/// link, with the lead chosen as the row-major-first entry of the chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub lead: (usize, usize),
    pub links: Vec<(i8, (usize, usize))>,
}

/// A dependent entry that is a general linear combination of free entries;
/// no in-scope algebra produces one, but the renderer supports it.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralRelation<T> {
    pub entry: (usize, usize),
    pub terms: Vec<(T, (usize, usize))>,
}

/// Affine relations among matrix entries, derived from a canonical reduced
/// echelon basis of a matrix space. Free entries are chosen by first
/// occurrence in row-major order; relations plus free entries determine
/// every entry.
#[derive(Debug, Clone, PartialEq)]
pub struct RelationSet<T> {
    matrix_dim: usize,
    free: Vec<(usize, usize)>,
    chains: Vec<Chain>,
    zeros: Vec<(usize, usize)>,
    general: Vec<GeneralRelation<T>>,
}

impl<T: Scalar> RelationSet<T> {
    pub fn matrix_dim(&self) -> usize {
        self.matrix_dim
    }

    pub fn free_entries(&self) -> &[(usize, usize)] {
        &self.free
    }

    pub fn chains(&self) -> &[Chain] {
        &self.chains
    }

    pub fn zero_entries(&self) -> &[(usize, usize)] {
        &self.zeros
    }

    pub fn general_relations(&self) -> &[GeneralRelation<T>] {
        &self.general
    }

    /// Relation lines in the display form `f[0][1] = -f[1][0] = ...`,
    /// chains first, then general relations, then vanishing entries.
    pub fn render(&self) -> Vec<String> {
        let entry = |(r, c): (usize, usize)| format!("f[{r}][{c}]");
        let mut lines = Vec::new();
        for chain in &self.chains {
            let mut line = entry(chain.lead);
            for (sign, link) in &chain.links {
                line.push_str(" = ");
                if *sign < 0 {
                    line.push('-');
                }
                line.push_str(&entry(*link));
            }
            lines.push(line);
        }
        for rel in &self.general {
            let mut line = format!("{} =", entry(rel.entry));
            for (idx, (coeff, at)) in rel.terms.iter().enumerate() {
                if idx == 0 {
                    line.push_str(&format!(" {} {}", coeff, entry(*at)));
                } else if coeff.is_negative() {
                    line.push_str(&format!(" - {} {}", coeff.abs(), entry(*at)));
                } else {
                    line.push_str(&format!(" + {} {}", coeff, entry(*at)));
                }
            }
            lines.push(line);
        }
        for zero in &self.zeros {
            lines.push(format!("{} = 0", entry(*zero)));
        }
        lines
    }

    /// Rebuilds the canonical basis from the relations alone: one matrix per
    /// free entry. Used to confirm that the relation set regenerates the
    /// solution space it was derived from.
    pub fn regenerate_basis(&self) -> Vec<Matrix<T>> {
        self.free
            .iter()
            .enumerate()
            .map(|(idx, &lead)| {
                let mut m = Matrix::zero(self.matrix_dim);
                *m.get_mut(lead.0, lead.1) = T::one();
                for chain in self.chains.iter().filter(|c| c.lead == lead) {
                    for (sign, link) in &chain.links {
                        *m.get_mut(link.0, link.1) = if *sign < 0 {
                            T::zero() - T::one()
                        } else {
                            T::one()
                        };
                    }
                }
                for rel in &self.general {
                    for (coeff, at) in &rel.terms {
                        if *at == self.free[idx] {
                            *m.get_mut(rel.entry.0, rel.entry.1) = coeff.clone();
                        }
                    }
                }
                m
            })
            .collect()
    }
}

/// Result of [`solve_commutant`]: the exact solution space of
/// `f G = G f` for every generator `G`.
#[derive(Debug, Clone, PartialEq)]
pub struct Commutant<T> {
    pub dimension: usize,
    pub basis: Vec<Matrix<T>>,
    pub relations: RelationSet<T>,
}

/// Left-multiplication matrices of every basis element; the default
/// generator set for [`solve_commutant`].
pub fn left_regular_generators<T: Scalar>(algebra: &AlgebraTable<T>) -> Vec<Matrix<T>> {
    (0..algebra.dim())
        .map(|i| algebra.basis_element(i).left_mul_matrix())
        .collect()
}

/// Solves `f G = G f` for all generators `G` over the algebra's coordinate
/// space. The basis is returned in canonical reduced echelon form (row-major
/// vectorization), so identical inputs produce identical relation text.
pub fn solve_commutant<T: Scalar>(
    algebra: &AlgebraTable<T>,
    generators: &[Matrix<T>],
) -> Result<Commutant<T>, LinMapError> {
    let n = algebra.dim();
    for g in generators {
        if g.dim() != n {
            return Err(LinMapError::DimensionMismatch {
                matrix: g.dim(),
                algebra: n,
            });
        }
    }

    let unknowns = n * n;
    let mut rows: Vec<Vec<T>> = Vec::new();
    for g in generators {
        for i in 0..n {
            for p in 0..n {
                // (f g)[i][p] - (g f)[i][p] = 0
                let mut row = vec![T::zero(); unknowns];
                for j in 0..n {
                    let coeff = g.get(j, p);
                    if !coeff.is_zero() {
                        row[i * n + j] = row[i * n + j].clone() + coeff.clone();
                    }
                }
                for q in 0..n {
                    let coeff = g.get(i, q);
                    if !coeff.is_zero() {
                        row[q * n + p] = row[q * n + p].clone() - coeff.clone();
                    }
                }
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }

    let raw_basis = elim::nullspace(rows, unknowns);
    let (canonical, pivots) = elim::canonical_basis(raw_basis, unknowns);
    let basis: Vec<Matrix<T>> = canonical
        .iter()
        .map(|v| Matrix::from_vec(n, v.clone()).expect("vector has n*n entries"))
        .collect();
    let relations = relations_from_canonical(n, &canonical, &pivots);
    Ok(Commutant {
        dimension: basis.len(),
        basis,
        relations,
    })
}

/// Derives the relation set of an arbitrary independent list of matrices
/// spanning a matrix space. Fails if the matrices are linearly dependent.
pub fn extract_relations<T: Scalar>(basis: &[Matrix<T>]) -> Result<RelationSet<T>, LinMapError> {
    let n = match basis.first() {
        Some(m) => m.dim(),
        None => 0,
    };
    if basis.iter().any(|m| m.dim() != n) {
        return Err(LinMapError::DimensionMismatch {
            matrix: basis.iter().map(Matrix::dim).max().unwrap_or(0),
            algebra: n,
        });
    }
    let vectors: Vec<Vec<T>> = basis.iter().map(Matrix::to_vec).collect();
    let (canonical, pivots) = elim::canonical_basis(vectors, n * n);
    if canonical.len() != basis.len() {
        return Err(LinMapError::DependentBasis);
    }
    Ok(relations_from_canonical(n, &canonical, &pivots))
}

fn relations_from_canonical<T: Scalar>(
    matrix_dim: usize,
    canonical: &[Vec<T>],
    pivots: &[usize],
) -> RelationSet<T> {
    let unknowns = matrix_dim * matrix_dim;
    let at = |flat: usize| (flat / matrix_dim, flat % matrix_dim);
    let mut is_pivot = vec![false; unknowns];
    for &p in pivots {
        is_pivot[p] = true;
    }

    let mut chains: Vec<Chain> = pivots
        .iter()
        .map(|&p| Chain {
            lead: at(p),
            links: Vec::new(),
        })
        .collect();
    let mut zeros = Vec::new();
    let mut general = Vec::new();

    for col in (0..unknowns).filter(|&c| !is_pivot[c]) {
        let support: Vec<usize> = (0..canonical.len())
            .filter(|&r| !canonical[r][col].is_zero())
            .collect();
        match support.as_slice() {
            [] => zeros.push(at(col)),
            [r] if canonical[*r][col].abs().is_one() => {
                let sign = if canonical[*r][col].is_negative() {
                    -1
                } else {
                    1
                };
                chains[*r].links.push((sign, at(col)));
            }
            _ => general.push(GeneralRelation {
                entry: at(col),
                terms: support
                    .iter()
                    .map(|&r| (canonical[r][col].clone(), at(pivots[r])))
                    .collect(),
            }),
        }
    }

    chains.retain(|c| !c.links.is_empty());
    RelationSet {
        matrix_dim,
        free: pivots.iter().map(|&p| at(p)).collect(),
        chains,
        zeros,
        general,
    }
}

/// Standard components of a linear map: the table `f^{kr}` representing
/// `x -> sum f^{kr} e_k x e_r`.
#[derive(Debug, Clone, PartialEq)]
pub struct StandardComponents<T> {
    table: Matrix<T>,
}

impl<T: Scalar> StandardComponents<T> {
    pub fn new(table: Matrix<T>) -> Self {
        StandardComponents { table }
    }

    pub fn zero(dim: usize) -> Self {
        StandardComponents {
            table: Matrix::zero(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn get(&self, k: usize, r: usize) -> &T {
        self.table.get(k, r)
    }

    pub fn set(&mut self, k: usize, r: usize, value: T) {
        *self.table.get_mut(k, r) = value;
    }

    pub fn table(&self) -> &Matrix<T> {
        &self.table
    }
}

fn require_unital_associative<T: Scalar>(algebra: &AlgebraTable<T>) -> Result<(), LinMapError> {
    let report = algebra.structure_report();
    if !report.unital {
        return Err(LinMapError::NotUnital);
    }
    if !report.associative {
        return Err(LinMapError::NotAssociative);
    }
    Ok(())
}

/// Coordinate matrix of `x -> sum f^{kr} e_k x e_r`:
/// `f^i_j = f^{kr} C[p][k][j] C[i][p][r]`, contracted over `k, r, p`.
pub fn standard_to_matrix<T: Scalar>(
    std: &StandardComponents<T>,
    algebra: &AlgebraTable<T>,
) -> Result<Matrix<T>, LinMapError> {
    let n = algebra.dim();
    if std.dim() != n {
        return Err(LinMapError::DimensionMismatch {
            matrix: std.dim(),
            algebra: n,
        });
    }
    require_unital_associative(algebra)?;
    let mut out: Matrix<T> = Matrix::zero(n);
    for k in 0..n {
        for r in 0..n {
            let f_kr = std.get(k, r);
            if f_kr.is_zero() {
                continue;
            }
            for j in 0..n {
                for p in 0..n {
                    let c_kj = algebra.constant(p, k, j);
                    if c_kj.is_zero() {
                        continue;
                    }
                    for i in 0..n {
                        let c_pr = algebra.constant(i, p, r);
                        if c_pr.is_zero() {
                            continue;
                        }
                        let delta = f_kr.clone() * c_kj.clone() * c_pr.clone();
                        *out.get_mut(i, j) = out.get(i, j).clone() + delta;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The component conversion splits into four 4x4 blocks: matrix entries
/// `(i, j)` with `i = j ^ g` depend exactly on the components `(k, k ^ g)`,
/// because basis products in a quaternion-type algebra land on the
/// XOR-indexed basis vector.
fn block_system<T: Scalar>(algebra: &AlgebraTable<T>, group: usize) -> Matrix<T> {
    Matrix::from_fn(4, |j, k| {
        let mut acc = T::zero();
        for p in 0..4 {
            let c_kj = algebra.constant(p, k, j);
            if c_kj.is_zero() {
                continue;
            }
            let c_pr = algebra.constant(j ^ group, p, k ^ group);
            if !c_pr.is_zero() {
                acc = acc + c_kj.clone() * c_pr.clone();
            }
        }
        acc
    })
}

/// Exact inverses of the four block systems of the component conversion.
/// Their existence for every `a, b != 0` is the bijectivity statement the
/// acceptance suite asserts.
pub fn standard_block_inverses<T: Scalar>(
    algebra: &AlgebraTable<T>,
) -> Result<[Matrix<T>; 4], LinMapError> {
    if algebra.quaternion_params().is_none() {
        return Err(LinMapError::NotQuaternion);
    }
    let mut blocks = Vec::with_capacity(4);
    for g in 0..4 {
        let system = block_system(algebra, g);
        blocks.push(elim::invert(&system).map_err(|_| LinMapError::SingularBlock { block: g })?);
    }
    Ok(blocks.try_into().expect("four blocks"))
}

/// Standard components of a coordinate matrix over a quaternion-type
/// algebra; the exact two-sided inverse of [`standard_to_matrix`].
pub fn matrix_to_standard<T: Scalar>(
    matrix: &Matrix<T>,
    algebra: &AlgebraTable<T>,
) -> Result<StandardComponents<T>, LinMapError> {
    if matrix.dim() != algebra.dim() {
        return Err(LinMapError::DimensionMismatch {
            matrix: matrix.dim(),
            algebra: algebra.dim(),
        });
    }
    let inverses = standard_block_inverses(algebra)?;
    let mut std = StandardComponents::zero(4);
    for (g, inverse) in inverses.iter().enumerate() {
        let rhs: Vec<T> = (0..4).map(|j| matrix.get(j ^ g, j).clone()).collect();
        let solution = inverse.apply(&rhs).expect("block is 4x4");
        for (k, value) in solution.into_iter().enumerate() {
            std.set(k, k ^ g, value);
        }
    }
    Ok(std)
}

/// The contraction `sum_j e_j * (column_j of M as an element)`, computed in
/// the algebra. The column order matches the expansion of the operator
/// `sum_j e_j d/dx^j`, so the result vanishes exactly when that operator
/// annihilates the linear map with Jacobian `M`.
pub fn sandwich_check<'a, T: Scalar>(
    matrix: &Matrix<T>,
    algebra: &'a AlgebraTable<T>,
) -> Result<AlgElement<'a, T>, LinMapError> {
    let n = algebra.dim();
    if matrix.dim() != n {
        return Err(LinMapError::DimensionMismatch {
            matrix: matrix.dim(),
            algebra: n,
        });
    }
    if !algebra.is_unital() {
        return Err(LinMapError::NotUnital);
    }
    let mut acc = algebra.zero_element();
    for j in 0..n {
        let column = algebra.element(matrix.column(j))?;
        let term = algebra.basis_element(j).mul(&column)?;
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rint, Algebra, Rat, RatMatrix};

    fn m(rows: &[&[i64]]) -> RatMatrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rint(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn complex_commutant_gives_cauchy_riemann_relations() {
        let c = Algebra::complex();
        let generators = left_regular_generators(&c);
        let commutant = solve_commutant(&c, &generators).unwrap();
        assert_eq!(commutant.dimension, 2);
        assert_eq!(
            commutant.relations.render(),
            vec!["f[0][0] = f[1][1]", "f[0][1] = -f[1][0]"]
        );
    }

    #[test]
    fn h_commutant_matches_right_multiplications() {
        let h = Algebra::h();
        let commutant = solve_commutant(&h, &left_regular_generators(&h)).unwrap();
        assert_eq!(commutant.dimension, 4);
        assert_eq!(
            commutant.relations.render(),
            vec![
                "f[0][0] = f[1][1] = f[2][2] = f[3][3]",
                "f[0][1] = -f[1][0] = -f[2][3] = f[3][2]",
                "f[0][2] = f[1][3] = -f[2][0] = -f[3][1]",
                "f[0][3] = -f[1][2] = f[2][1] = -f[3][0]",
            ]
        );
        // Every basis matrix is a right multiplication x -> x*c.
        for basis_matrix in &commutant.basis {
            let c_coords: Vec<Rat> = basis_matrix.column(0);
            let c = h.element(c_coords).unwrap();
            assert_eq!(&c.right_mul_matrix(), basis_matrix);
        }
    }

    #[test]
    fn unconstrained_space_has_no_relations() {
        let c = Algebra::complex();
        let commutant = solve_commutant(&c, &[Matrix::identity(2)]).unwrap();
        assert_eq!(commutant.dimension, 4);
        assert!(commutant.relations.render().is_empty());
        assert_eq!(commutant.relations.free_entries().len(), 4);
    }

    #[test]
    fn relations_regenerate_the_basis() {
        let h = Algebra::h();
        let commutant = solve_commutant(&h, &left_regular_generators(&h)).unwrap();
        assert_eq!(commutant.relations.regenerate_basis(), commutant.basis);
    }

    #[test]
    fn extract_relations_rejects_dependent_input() {
        let a = m(&[&[1, 0], &[0, 1]]);
        let b = m(&[&[2, 0], &[0, 2]]);
        assert!(matches!(
            extract_relations(&[a, b]),
            Err(LinMapError::DependentBasis)
        ));
    }

    #[test]
    fn general_coefficients_render_as_linear_equations() {
        let basis = vec![m(&[&[1, 0], &[2, 0]])];
        let relations = extract_relations(&basis).unwrap();
        assert_eq!(
            relations.render(),
            vec!["f[1][0] = 2 f[0][0]", "f[0][1] = 0", "f[1][1] = 0"]
        );
        assert_eq!(relations.regenerate_basis(), basis);
    }

    #[test]
    fn standard_to_matrix_complex_patterns() {
        let c = Algebra::complex();
        // Only f^{00} = 1: the identity map x -> 1*x*1.
        let mut std = StandardComponents::zero(2);
        std.set(0, 0, rint(1));
        assert_eq!(standard_to_matrix(&std, &c).unwrap(), Matrix::identity(2));

        // f^{00} = f^{11} = 1: x + i x i = 0.
        std.set(1, 1, rint(1));
        assert!(standard_to_matrix(&std, &c).unwrap().is_zero());
    }

    #[test]
    fn standard_to_matrix_quaternion_sandwich() {
        let alg = Algebra::quaternion(rint(2), rint(3)).unwrap();
        let mut std = StandardComponents::zero(4);
        std.set(1, 1, rint(1));
        let matrix = standard_to_matrix(&std, &alg).unwrap();
        assert_eq!(
            matrix,
            m(&[&[2, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, -2, 0], &[0, 0, 0, -2]])
        );

        // At a = b = -1 this is the matrix of x -> i x i.
        let h = Algebra::h();
        let mut std_h = StandardComponents::zero(4);
        std_h.set(1, 1, rint(1));
        let matrix_h = standard_to_matrix(&std_h, &h).unwrap();
        let i = h.basis_element(1);
        for col in 0..4 {
            let image = i.mul(&h.basis_element(col)).unwrap().mul(&i).unwrap();
            assert_eq!(&matrix_h.column(col), image.coords());
        }
    }

    #[test]
    fn matrix_to_standard_of_identity() {
        for (a, b) in [(-1, -1), (2, 3), (1, -1)] {
            let alg = Algebra::quaternion(rint(a), rint(b)).unwrap();
            let std = matrix_to_standard(&Matrix::identity(4), &alg).unwrap();
            for k in 0..4 {
                for r in 0..4 {
                    let expected = if (k, r) == (0, 0) { rint(1) } else { rint(0) };
                    assert_eq!(*std.get(k, r), expected, "component ({k},{r})");
                }
            }
        }
    }

    #[test]
    fn matrix_to_standard_of_fueter_variable_jacobian() {
        // Jacobian of x^1 - i x^0: entry [0][1] = 1, [1][0] = -1.
        let h = Algebra::h();
        let jac = m(&[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]]);
        let std = matrix_to_standard(&jac, &h).unwrap();
        assert_eq!(*std.get(1, 0), rat(-1, 2));
        assert_eq!(*std.get(0, 1), rat(-1, 2));
        assert_eq!(*std.get(2, 3), rint(0));
        assert_eq!(*std.get(3, 2), rint(0));
        for k in 0..4 {
            assert_eq!(*std.get(k, k), rint(0));
        }
        assert_eq!(standard_to_matrix(&std, &h).unwrap(), jac);
    }

    #[test]
    fn component_conversion_requires_quaternion_table() {
        let c = Algebra::complex();
        assert!(matches!(
            matrix_to_standard(&Matrix::identity(2), &c),
            Err(LinMapError::NotQuaternion)
        ));
    }

    #[test]
    fn two_sided_representation_needs_unit_and_associativity() {
        let non_unital = Algebra::from_sparse(1, &[]).unwrap();
        let std = StandardComponents::zero(1);
        assert!(matches!(
            standard_to_matrix(&std, &non_unital),
            Err(LinMapError::NotUnital)
        ));

        // e1 e1 = e2, e1 e2 = e1 is unital but not associative:
        // (e1 e1) e1 = 0 while e1 (e1 e1) = e1.
        let non_assoc = Algebra::from_sparse(
            3,
            &[
                (0, 0, 0, rint(1)),
                (1, 0, 1, rint(1)),
                (2, 0, 2, rint(1)),
                (1, 1, 0, rint(1)),
                (2, 2, 0, rint(1)),
                (2, 1, 1, rint(1)),
                (1, 1, 2, rint(1)),
            ],
        )
        .unwrap();
        assert!(!non_assoc.structure_report().associative);
        let std = StandardComponents::zero(3);
        assert!(matches!(
            standard_to_matrix(&std, &non_assoc),
            Err(LinMapError::NotAssociative)
        ));
    }

    #[test]
    fn relation_text_is_independent_of_basis_order() {
        let h = Algebra::h();
        let commutant = solve_commutant(&h, &left_regular_generators(&h)).unwrap();
        let mut reversed = commutant.basis.clone();
        reversed.reverse();
        let relations = extract_relations(&reversed).unwrap();
        assert_eq!(relations.render(), commutant.relations.render());
    }

    #[test]
    fn sandwich_examples() {
        let c = Algebra::complex();
        let holomorphic = sandwich_check(&Matrix::identity(2), &c).unwrap();
        assert!(holomorphic.is_zero());

        let conjugation = m(&[&[1, 0], &[0, -1]]);
        let not_holomorphic = sandwich_check(&conjugation, &c).unwrap();
        assert_eq!(not_holomorphic.coords(), &[rint(2), rint(0)]);

        let h = Algebra::h();
        let identity_defect = sandwich_check(&Matrix::identity(4), &h).unwrap();
        assert_eq!(
            identity_defect.coords(),
            &[rint(-2), rint(0), rint(0), rint(0)]
        );
    }
}
