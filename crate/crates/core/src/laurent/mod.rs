//! Hermitian forms over Λ = Z[t, t⁻¹] with the involution `t ↦ t⁻¹`.
//!
//! Deciding whether a form is extended from the integers is not attempted.
//! Extension is certified by an explicit change of basis, and known
//! non-extended forms are recorded in an [`AxiomRegistry`].

mod matrix;
mod poly;
mod registry;

use num_traits::ToPrimitive;
use thiserror::Error;

use crate::intforms::{FormError, IntForm};

pub use matrix::LambdaMatrix;
pub use poly::LaurentPoly;
pub use registry::{Axiom, AxiomRegistry, RegistryError, HT_AXIOM_ID};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not hermitian at ({row}, {col})")]
    NotHermitian { row: usize, col: usize },
    #[error("augmentation is not unimodular: {0}")]
    NotUnimodularAfterAugmentation(FormError),
    #[error("augmented entry ({row}, {col}) does not fit in 64 bits")]
    EntryOverflow { row: usize, col: usize },
    #[error("rank mismatch: form has rank {form}, witness has rank {witness}")]
    RankMismatch { form: usize, witness: usize },
}

/// A square Λ-matrix equal to its conjugate transpose.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HermitianLambdaForm {
    matrix: LambdaMatrix,
}

impl HermitianLambdaForm {
    pub fn new(rows: Vec<Vec<LaurentPoly>>) -> Result<Self, LaurentError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(LaurentError::NotSquare);
        }
        for i in 0..n {
            for j in i..n {
                if rows[i][j].conjugate() != rows[j][i] {
                    return Err(LaurentError::NotHermitian { row: i, col: j });
                }
            }
        }
        Ok(HermitianLambdaForm { matrix: LambdaMatrix::from_rows(rows) })
    }

    pub fn rank(&self) -> usize {
        self.matrix.dim()
    }

    pub fn entry(&self, i: usize, j: usize) -> &LaurentPoly {
        self.matrix.get(i, j)
    }

    pub fn matrix(&self) -> &LambdaMatrix {
        &self.matrix
    }

    pub fn determinant(&self) -> LaurentPoly {
        self.matrix.determinant()
    }

    pub fn is_nonsingular(&self) -> bool {
        self.determinant().is_unit()
    }

    /// Substitutes `t = 1`.
    pub fn augment(&self) -> Result<IntForm, LaurentError> {
        let n = self.rank();
        let mut gram = vec![vec![0i64; n]; n];
        for (i, row) in gram.iter_mut().enumerate() {
            for (j, g) in row.iter_mut().enumerate() {
                *g = self.entry(i, j).eval_one().to_i64().ok_or(LaurentError::EntryOverflow { row: i, col: j })?;
            }
        }
        IntForm::new(gram).map_err(LaurentError::NotUnimodularAfterAugmentation)
    }

    /// Orthogonal sum.
    pub fn direct_sum(&self, other: &HermitianLambdaForm) -> HermitianLambdaForm {
        HermitianLambdaForm { matrix: block_sum(&self.matrix, &other.matrix) }
    }
}

pub(crate) fn block_sum(a: &LambdaMatrix, b: &LambdaMatrix) -> LambdaMatrix {
    let (n, m) = (a.dim(), b.dim());
    let mut rows = vec![vec![LaurentPoly::zero(); n + m]; n + m];
    for i in 0..n {
        for j in 0..n {
            rows[i][j] = a.get(i, j).clone();
        }
    }
    for i in 0..m {
        for j in 0..m {
            rows[n + i][n + j] = b.get(i, j).clone();
        }
    }
    LambdaMatrix::from_rows(rows)
}

/// The rank-4 form with `s = t + t⁻¹`:
///
/// ```text
/// 1+s+s²  s+s²    1+s  s
/// s+s²    1+s+s²  s    1+s
/// 1+s     s       2    0
/// s       1+s     0    2
/// ```
pub fn ht_matrix_a() -> HermitianLambdaForm {
    let one = LaurentPoly::one();
    let s = LaurentPoly::s();
    let s2 = &s * &s;
    let a = &(&one + &s) + &s2;
    let b = &s + &s2;
    let c = &one + &s;
    let two = LaurentPoly::constant(2);
    let zero = LaurentPoly::zero();
    HermitianLambdaForm::new(vec![
        vec![a.clone(), b.clone(), c.clone(), s.clone()],
        vec![b, a, s.clone(), c.clone()],
        vec![c.clone(), s.clone(), two.clone(), zero.clone()],
        vec![s, c, zero, two],
    ])
    .expect("A is hermitian")
}

pub fn conjugate(p: &LaurentPoly) -> LaurentPoly {
    p.conjugate()
}

pub fn determinant(m: &HermitianLambdaForm) -> LaurentPoly {
    m.determinant()
}

pub fn is_nonsingular(m: &HermitianLambdaForm) -> bool {
    m.is_nonsingular()
}

pub fn augment(m: &HermitianLambdaForm) -> Result<IntForm, LaurentError> {
    m.augment()
}

/// The constant Λ-form with the same Gram matrix.
pub fn extend_from_integer(f: &IntForm) -> HermitianLambdaForm {
    HermitianLambdaForm { matrix: LambdaMatrix::from_integers(f.gram()) }
}

/// Checks `p* · extend(b) · p = n` with `det p` a unit of Λ. Verifies only.
pub fn verify_extension_witness(
    n: &HermitianLambdaForm,
    p: &LambdaMatrix,
    b: &IntForm,
) -> Result<bool, LaurentError> {
    if p.dim() != n.rank() {
        return Err(LaurentError::RankMismatch { form: n.rank(), witness: p.dim() });
    }
    if b.rank() != n.rank() {
        return Err(LaurentError::RankMismatch { form: n.rank(), witness: b.rank() });
    }
    if !p.determinant().is_unit() {
        return Ok(false);
    }
    let product = p.conj_transpose().mul(&LambdaMatrix::from_integers(b.gram())).mul(p);
    Ok(&product == n.matrix())
}
