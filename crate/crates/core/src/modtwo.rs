//! Nondegenerate symmetric bilinear forms over GF(2).
//!
//! Such a form is determined up to isometry by its rank and by whether it is
//! alternating (zero diagonal). Alternating forms have even rank and are sums
//! of the hyperbolic plane; the others are diagonalizable to `I_n`.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModTwoError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("entry ({row}, {col}) is not 0 or 1")]
    NotBinary { row: usize, col: usize },
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("form is degenerate")]
    Degenerate,
}

/// Bit-packed rows; bit `j` of word `j / 64` in row `i` is entry `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModTwoForm {
    n: usize,
    rows: Vec<Vec<u64>>,
}

fn words(n: usize) -> usize {
    n.div_ceil(64)
}

fn get(row: &[u64], j: usize) -> bool {
    row[j / 64] >> (j % 64) & 1 == 1
}

fn set(row: &mut [u64], j: usize) {
    row[j / 64] |= 1 << (j % 64);
}

/// Row reduction over GF(2) of the augmented system `M x = b`. Returns a
/// solution when `M` is invertible.
fn solve(rows: &[Vec<u64>], n: usize, rhs: &[bool]) -> Option<Vec<bool>> {
    let mut m: Vec<(Vec<u64>, bool)> = rows.iter().cloned().zip(rhs.iter().copied()).collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| get(&m[r].0, col))?;
        m.swap(col, pivot);
        let (prow, pb) = m[col].clone();
        for (r, (row, b)) in m.iter_mut().enumerate() {
            if r != col && get(row, col) {
                for (w, p) in row.iter_mut().zip(&prow) {
                    *w ^= p;
                }
                *b ^= pb;
            }
        }
    }
    Some(m.into_iter().map(|(_, b)| b).collect())
}

impl ModTwoForm {
    pub fn new(matrix: Vec<Vec<u8>>) -> Result<Self, ModTwoError> {
        let n = matrix.len();
        if matrix.iter().any(|r| r.len() != n) {
            return Err(ModTwoError::NotSquare);
        }
        let mut rows = vec![vec![0u64; words(n)]; n];
        for i in 0..n {
            for j in 0..n {
                match matrix[i][j] {
                    0 => {}
                    1 => set(&mut rows[i], j),
                    _ => return Err(ModTwoError::NotBinary { row: i, col: j }),
                }
                if matrix[i][j] != matrix[j][i] {
                    return Err(ModTwoError::NotSymmetric { row: i.min(j), col: i.max(j) });
                }
            }
        }
        if solve(&rows, n, &vec![false; n]).is_none() {
            return Err(ModTwoError::Degenerate);
        }
        Ok(ModTwoForm { n, rows })
    }

    pub fn zero() -> Self {
        ModTwoForm { n: 0, rows: Vec::new() }
    }

    pub fn hyperbolic() -> Self {
        ModTwoForm::new(vec![vec![0, 1], vec![1, 0]]).expect("H is nondegenerate")
    }

    pub fn identity(n: usize) -> Self {
        let mut rows = vec![vec![0u64; words(n)]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            set(row, i);
        }
        ModTwoForm { n, rows }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> u8 {
        u8::from(get(&self.rows[i], j))
    }

    pub fn matrix(&self) -> Vec<Vec<u8>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.entry(i, j)).collect()).collect()
    }

    pub fn is_alternating(&self) -> bool {
        (0..self.n).all(|i| !get(&self.rows[i], i))
    }

    /// The unique `c` with `x·x = x·c` for every `x`, i.e. `G c = diag(G)`.
    pub fn characteristic_element(&self) -> Vec<u8> {
        let diag: Vec<bool> = (0..self.n).map(|i| get(&self.rows[i], i)).collect();
        solve(&self.rows, self.n, &diag)
            .expect("nondegenerate form")
            .into_iter()
            .map(u8::from)
            .collect()
    }

    pub fn class(&self) -> ModTwoClass {
        if self.is_alternating() {
            ModTwoClass::Alternating(self.n)
        } else {
            ModTwoClass::NonAlternating(self.n)
        }
    }

    pub fn direct_sum(&self, other: &ModTwoForm) -> ModTwoForm {
        let n = self.n + other.n;
        let mut rows = vec![vec![0u64; words(n)]; n];
        for i in 0..self.n {
            for j in 0..self.n {
                if get(&self.rows[i], j) {
                    set(&mut rows[i], j);
                }
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                if get(&other.rows[i], j) {
                    set(&mut rows[self.n + i], self.n + j);
                }
            }
        }
        ModTwoForm { n, rows }
    }
}

/// Isometry class: alternating forms of (even) rank, or non-alternating forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModTwoClass {
    Alternating(usize),
    NonAlternating(usize),
}

impl ModTwoClass {
    pub fn rank(&self) -> usize {
        match *self {
            ModTwoClass::Alternating(n) | ModTwoClass::NonAlternating(n) => n,
        }
    }

    /// A representative: `k/2` hyperbolic planes, or `I_n`.
    pub fn representative(&self) -> ModTwoForm {
        match *self {
            ModTwoClass::Alternating(n) => (0..n / 2).fold(ModTwoForm::zero(), |f, _| f.direct_sum(&ModTwoForm::hyperbolic())),
            ModTwoClass::NonAlternating(n) => ModTwoForm::identity(n),
        }
    }
}

impl fmt::Display for ModTwoClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModTwoClass::Alternating(n) => write!(f, "{}H", n / 2),
            ModTwoClass::NonAlternating(n) => write!(f, "I_{n}"),
        }
    }
}

pub fn classify_z2(f: &ModTwoForm) -> ModTwoClass {
    f.class()
}

pub fn direct_sum_z2(f: &ModTwoForm, g: &ModTwoForm) -> ModTwoForm {
    f.direct_sum(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Z2Obstruction {
    RankDeficit,
    /// An alternating form has no non-alternating summand.
    NonAlternatingInAlternating,
    /// Odd rank difference, so the complement would be alternating of odd rank.
    OddAlternatingComplement,
    /// Equal ranks with `x` non-alternating and `y` alternating.
    ParityMismatch,
}

impl fmt::Display for Z2Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Z2Obstruction::RankDeficit => "rank of the summand exceeds the rank of the form",
            Z2Obstruction::NonAlternatingInAlternating => "an alternating form has no non-alternating summand",
            Z2Obstruction::OddAlternatingComplement => "complement would be alternating of odd rank",
            Z2Obstruction::ParityMismatch => "forms of equal rank with different alternating type",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Z2Split {
    Yes { complement: ModTwoClass },
    No(Z2Obstruction),
}

impl Z2Split {
    pub fn is_yes(&self) -> bool {
        matches!(self, Z2Split::Yes { .. })
    }
}

/// Does some nondegenerate `L` satisfy `y ⊕ L ≅ x`?
pub fn split_off_z2(x: &ModTwoForm, y: &ModTwoForm) -> Z2Split {
    let (n, m) = (x.rank(), y.rank());
    if m > n {
        return Z2Split::No(Z2Obstruction::RankDeficit);
    }
    let r = n - m;
    if x.is_alternating() {
        if !y.is_alternating() {
            return Z2Split::No(Z2Obstruction::NonAlternatingInAlternating);
        }
        if r % 2 == 1 {
            return Z2Split::No(Z2Obstruction::OddAlternatingComplement);
        }
        return Z2Split::Yes { complement: ModTwoClass::Alternating(r) };
    }
    if r == 0 {
        return if y.is_alternating() {
            Z2Split::No(Z2Obstruction::ParityMismatch)
        } else {
            Z2Split::Yes { complement: ModTwoClass::Alternating(0) }
        };
    }
    // y ⊕ I_r is non-alternating of rank n; I_r is always a valid complement
    Z2Split::Yes { complement: ModTwoClass::NonAlternating(r) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate() {
        assert_eq!(ModTwoForm::new(vec![vec![1, 1], vec![1, 1]]), Err(ModTwoError::Degenerate));
        assert_eq!(ModTwoForm::new(vec![vec![0]]), Err(ModTwoError::Degenerate));
        assert_eq!(ModTwoForm::new(vec![vec![2]]), Err(ModTwoError::NotBinary { row: 0, col: 0 }));
    }

    #[test]
    fn characteristic_elements() {
        assert_eq!(ModTwoForm::hyperbolic().characteristic_element(), vec![0, 0]);
        assert_eq!(ModTwoForm::identity(3).characteristic_element(), vec![1, 1, 1]);
        let f = ModTwoForm::new(vec![vec![1, 1], vec![1, 0]]).unwrap();
        // G c = (1, 0): c = (0, 1)
        assert_eq!(f.characteristic_element(), vec![0, 1]);
    }

    #[test]
    fn split_rules() {
        let h = ModTwoForm::hyperbolic();
        let i2 = ModTwoForm::identity(2);
        assert!(split_off_z2(&i2.direct_sum(&h), &h).is_yes());
        assert_eq!(split_off_z2(&h, &i2), Z2Split::No(Z2Obstruction::NonAlternatingInAlternating));
        assert_eq!(split_off_z2(&i2, &h), Z2Split::No(Z2Obstruction::ParityMismatch));
        assert_eq!(split_off_z2(&h.direct_sum(&h), &h), Z2Split::Yes { complement: ModTwoClass::Alternating(2) });
        assert_eq!(
            split_off_z2(&ModTwoForm::identity(3), &h),
            Z2Split::Yes { complement: ModTwoClass::NonAlternating(1) }
        );
    }

    #[test]
    fn wide_forms_pack_across_words() {
        let f = ModTwoForm::identity(70).direct_sum(&ModTwoForm::hyperbolic());
        assert_eq!(f.rank(), 72);
        assert_eq!(f.entry(70, 71), 1);
        assert_eq!(f.characteristic_element().iter().filter(|&&b| b == 1).count(), 70);
    }
}
