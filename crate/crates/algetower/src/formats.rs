//! JSON interchange formats: algebra tables, coordinate matrices, tower
//! specifications and quaternion functions.
//!
//! Scalars travel as canonical rational text (`p/q` or `p`). An algebra file
//! is `{"dim": n, "labels": [...], "constants": [[k, i, j, "p/q"], ...]}`
//! with omitted triples zero; the same document is emitted back, with the
//! constants sorted, so outputs are byte-stable.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, AlgebraTable};
use crate::construct::{ConstructError, TowerSpec};
use crate::matrix::{Matrix, MatrixError};
use crate::rational::{format_rational, parse_rational, RationalError};
use crate::regular::{QuaternionPolynomial, RegularError};
use crate::{Algebra, Rat, RatMatrix};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FormatError {
    #[error("invalid scalar {text:?} in {context}: {source}")]
    Scalar {
        context: String,
        text: String,
        source: RationalError,
    },
    #[error("unknown builtin algebra {0:?}")]
    UnknownAlgebra(String),
    #[error("monomial item {0:?} is neither a constant nor \"x\"")]
    BadMonomialItem(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Function(#[from] RegularError),
}

fn parse_scalar(text: &str, context: &str) -> Result<Rat, FormatError> {
    parse_rational(text).map_err(|source| FormatError::Scalar {
        context: context.to_string(),
        text: text.to_string(),
        source,
    })
}

/// On-disk form of an algebra table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    pub labels: Vec<String>,
    pub constants: Vec<(usize, usize, usize, String)>,
}

pub fn algebra_to_file(algebra: &Algebra) -> AlgebraFile {
    AlgebraFile {
        dim: algebra.dim(),
        labels: algebra.labels().to_vec(),
        constants: algebra
            .sparse_constants()
            .into_iter()
            .map(|(k, i, j, v)| (k, i, j, format_rational(&v)))
            .collect(),
    }
}

pub fn algebra_from_file(file: &AlgebraFile) -> Result<Algebra, FormatError> {
    let mut entries = Vec::with_capacity(file.constants.len());
    for (k, i, j, text) in &file.constants {
        entries.push((
            *k,
            *i,
            *j,
            parse_scalar(text, &format!("constant ({k},{i},{j})"))?,
        ));
    }
    let labels = if file.labels.is_empty() {
        None
    } else {
        Some(file.labels.clone())
    };
    Ok(AlgebraTable::from_sparse_labeled(
        file.dim, &entries, labels,
    )?)
}

/// Parameter-free builtin algebras addressable by name on the CLI.
pub fn builtin_algebra(name: &str) -> Option<Algebra> {
    use crate::construct::tensor_product;
    match name {
        "complex" | "C" => Some(Algebra::complex()),
        "H" | "h" => Some(Algebra::h()),
        "CxH" => Some(tensor_product(&Algebra::complex(), &Algebra::h())),
        "CxCxH" => {
            let inner = tensor_product(&Algebra::complex(), &Algebra::h());
            Some(tensor_product(&Algebra::complex(), &inner))
        }
        _ => None,
    }
}

/// Square table of rational text, row-major; used for both coordinate
/// matrices and standard components.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableFile {
    pub rows: Vec<Vec<String>>,
}

pub fn matrix_to_file(matrix: &RatMatrix) -> TableFile {
    TableFile {
        rows: matrix
            .rows()
            .map(|row| row.iter().map(format_rational).collect())
            .collect(),
    }
}

pub fn matrix_from_file(file: &TableFile) -> Result<RatMatrix, FormatError> {
    let mut rows = Vec::with_capacity(file.rows.len());
    for (i, row) in file.rows.iter().enumerate() {
        let mut parsed = Vec::with_capacity(row.len());
        for (j, text) in row.iter().enumerate() {
            parsed.push(parse_scalar(text, &format!("entry ({i},{j})"))?);
        }
        rows.push(parsed);
    }
    Ok(Matrix::from_rows(rows)?)
}

/// On-disk form of a tower: the outer algebra (builtin name or inline
/// table), the fiber dimension, and the expanded inner constants
/// `[b, c, i, k, "p/q"]`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TowerFile {
    pub outer: AlgebraRef,
    pub inner_dim: usize,
    pub constants: Vec<(usize, usize, usize, usize, String)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Name(String),
    Inline(AlgebraFile),
}

pub fn resolve_algebra_ref(reference: &AlgebraRef) -> Result<Algebra, FormatError> {
    match reference {
        AlgebraRef::Name(name) => {
            builtin_algebra(name).ok_or_else(|| FormatError::UnknownAlgebra(name.clone()))
        }
        AlgebraRef::Inline(file) => algebra_from_file(file),
    }
}

pub fn tower_from_file(file: &TowerFile) -> Result<TowerSpec<Rat>, FormatError> {
    let outer = resolve_algebra_ref(&file.outer)?;
    let mut entries = Vec::with_capacity(file.constants.len());
    for (b, c, i, k, text) in &file.constants {
        entries.push((
            *b,
            *c,
            *i,
            *k,
            parse_scalar(text, &format!("tower constant ({b},{c},{i},{k})"))?,
        ));
    }
    Ok(TowerSpec::from_sparse(outer, file.inner_dim, &entries)?)
}

/// A function file is a list of monomials; each monomial interleaves
/// constant quaternions (4-tuples of rational text) with the symbol `"x"`.
/// Missing constants around an `"x"` default to one, so `["x"]` is the
/// identity and `[c, "x", c']` is `c * x * c'`.
pub type FunctionFile = Vec<Vec<MonomialItem>>;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MonomialItem {
    Var(String),
    Constant([String; 4]),
}

pub fn function_from_file(file: &FunctionFile) -> Result<QuaternionPolynomial<Rat>, FormatError> {
    let one = || {
        [
            Rat::from_integer(1.into()),
            Rat::from_integer(0.into()),
            Rat::from_integer(0.into()),
            Rat::from_integer(0.into()),
        ]
    };
    let mut monomials: Vec<Vec<[Rat; 4]>> = Vec::with_capacity(file.len());
    for monomial in file {
        // Canonicalize to alternating constants c0, x, c1, ..., cm by
        // inserting implicit units and merging adjacent constants.
        let mut constants: Vec<[Rat; 4]> = vec![one()];
        for item in monomial {
            match item {
                MonomialItem::Var(symbol) if symbol == "x" => constants.push(one()),
                MonomialItem::Var(symbol) => {
                    return Err(FormatError::BadMonomialItem(symbol.clone()));
                }
                MonomialItem::Constant(texts) => {
                    let mut parsed = one();
                    for (slot, text) in parsed.iter_mut().zip(texts) {
                        *slot = parse_scalar(text, "monomial constant")?;
                    }
                    let last = constants.last().expect("starts nonempty");
                    let merged = quaternion_scalar_product(last, &parsed);
                    *constants.last_mut().expect("starts nonempty") = merged;
                }
            }
        }
        monomials.push(constants);
    }
    Ok(QuaternionPolynomial::build(&monomials)?)
}

fn quaternion_scalar_product(a: &[Rat; 4], b: &[Rat; 4]) -> [Rat; 4] {
    let h = Algebra::h();
    let x = h.element(a.to_vec()).expect("four coordinates");
    let y = h.element(b.to_vec()).expect("four coordinates");
    let product = x.mul(&y).expect("same algebra").into_coords();
    let mut it = product.into_iter();
    std::array::from_fn(|_| it.next().expect("dim 4"))
}

/// Comma-separated rationals, e.g. `1,-1/2,0,3`, as used by CLI flags.
pub fn parse_coord_list(text: &str) -> Result<Vec<Rat>, FormatError> {
    text.split(',')
        .map(|part| parse_scalar(part.trim(), "coordinate list"))
        .collect()
}

pub fn format_coord_list(coords: &[Rat]) -> Vec<String> {
    coords.iter().map(format_rational).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rint};

    #[test]
    fn algebra_file_round_trip() {
        let h = Algebra::h();
        let file = algebra_to_file(&h);
        let json = serde_json::to_string(&file).unwrap();
        let parsed: AlgebraFile = serde_json::from_str(&json).unwrap();
        let restored = algebra_from_file(&parsed).unwrap();
        assert_eq!(restored, h);
        assert_eq!(restored.labels(), h.labels());
    }

    #[test]
    fn algebra_file_reports_bad_scalar() {
        let file = AlgebraFile {
            dim: 1,
            labels: vec!["1".into()],
            constants: vec![(0, 0, 0, "1/0".into())],
        };
        assert!(matches!(
            algebra_from_file(&file),
            Err(FormatError::Scalar { .. })
        ));
    }

    #[test]
    fn builtin_names_resolve() {
        assert_eq!(builtin_algebra("complex").unwrap().dim(), 2);
        assert_eq!(builtin_algebra("CxH").unwrap().dim(), 8);
        assert_eq!(builtin_algebra("CxCxH").unwrap().dim(), 16);
        assert!(builtin_algebra("octonions").is_none());
    }

    #[test]
    fn matrix_file_round_trip() {
        let m = Matrix::from_rows(vec![vec![rat(1, 2), rint(0)], vec![rint(-3), rint(7)]]).unwrap();
        let restored = matrix_from_file(&matrix_to_file(&m)).unwrap();
        assert_eq!(restored, m);
    }

    #[test]
    fn function_file_parses_fueter_variable() {
        let json = r#"[
            [["0","-1/2","0","0"], "x"],
            [["-1/2","0","0","0"], "x", ["0","1","0","0"]]
        ]"#;
        let file: FunctionFile = serde_json::from_str(json).unwrap();
        let f = function_from_file(&file).unwrap();
        assert_eq!(f, QuaternionPolynomial::fueter_variable());
    }

    #[test]
    fn function_file_bare_x_is_identity() {
        let file: FunctionFile = serde_json::from_str(r#"[["x"]]"#).unwrap();
        let f = function_from_file(&file).unwrap();
        assert_eq!(f, QuaternionPolynomial::variable());
    }

    #[test]
    fn function_file_merges_adjacent_constants() {
        // [i, j] with no x in between collapses to the constant i*j = k.
        let file: FunctionFile =
            serde_json::from_str(r#"[[["0","1","0","0"], ["0","0","1","0"]]]"#).unwrap();
        let f = function_from_file(&file).unwrap();
        let k = [rint(0), rint(0), rint(0), rint(1)];
        assert_eq!(f, QuaternionPolynomial::constant(&k));
    }

    #[test]
    fn function_file_rejects_unknown_symbol() {
        let file: FunctionFile = serde_json::from_str(r#"[["y"]]"#).unwrap();
        assert!(matches!(
            function_from_file(&file),
            Err(FormatError::BadMonomialItem(_))
        ));
    }

    #[test]
    fn coord_list_round_trip() {
        let coords = parse_coord_list("1, -1/2, 0, 3").unwrap();
        assert_eq!(coords, vec![rint(1), rat(-1, 2), rint(0), rint(3)]);
        assert_eq!(format_coord_list(&coords), vec!["1", "-1/2", "0", "3"]);
        assert!(parse_coord_list("1,,2").is_err());
    }
}
