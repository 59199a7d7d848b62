//! Square matrices over Λ and their determinants.

use super::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LambdaMatrix {
    rows: Vec<Vec<LaurentPoly>>,
}

impl LambdaMatrix {
    /// Caller guarantees the rows form a square matrix.
    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == rows.len()));
        LambdaMatrix { rows }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_rows(
            (0..n)
                .map(|i| (0..n).map(|j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() }).collect())
                .collect(),
        )
    }

    pub fn from_integers(m: &[Vec<i64>]) -> Self {
        Self::from_rows(m.iter().map(|r| r.iter().map(|&x| LaurentPoly::constant(x)).collect()).collect())
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<LaurentPoly>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        self.rows[i][j] = v;
    }

    /// Transpose with every entry conjugated.
    pub fn conj_transpose(&self) -> Self {
        let n = self.dim();
        Self::from_rows((0..n).map(|i| (0..n).map(|j| self.rows[j][i].conjugate()).collect()).collect())
    }

    pub fn mul(&self, other: &LambdaMatrix) -> LambdaMatrix {
        let n = self.dim();
        Self::from_rows(
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            (0..n).fold(LaurentPoly::zero(), |acc, k| &acc + &(&self.rows[i][k] * &other.rows[k][j]))
                        })
                        .collect()
                })
                .collect(),
        )
    }

    /// Fraction-free (Bareiss) determinant. Each row is first divided by its
    /// lowest power of `t`, and the factor restored at the end.
    pub fn determinant(&self) -> LaurentPoly {
        let n = self.dim();
        if n == 0 {
            return LaurentPoly::one();
        }
        let mut m = self.rows.clone();
        let mut t_power = 0i64;
        for row in m.iter_mut() {
            if let Some(lo) = row.iter().filter_map(LaurentPoly::min_exp).min() {
                t_power += lo;
                for e in row.iter_mut() {
                    *e = e.shift(-lo);
                }
            }
        }
        let mut negate = false;
        let mut prev = LaurentPoly::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return LaurentPoly::zero();
                };
                m.swap(k, swap);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
                }
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].shift(t_power);
        if negate {
            -det
        } else {
            det
        }
    }
}
