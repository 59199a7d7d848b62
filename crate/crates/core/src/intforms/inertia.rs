//! Exact inertia of a symmetric integer matrix.
//!
//! Symmetric Gaussian elimination over the rationals. A nonzero diagonal
//! entry is pivoted directly; when every remaining diagonal entry vanishes
//! an off-diagonal 2x2 block `[[0, b], [b, 0]]` is eliminated instead, which
//! contributes one positive and one negative direction.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
    pub determinant: BigRational,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

pub(crate) fn inertia(gram: &[Vec<i64>]) -> Inertia {
    let n = gram.len();
    let mut a: Vec<Vec<BigRational>> = gram
        .iter()
        .map(|row| row.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut out = Inertia {
        positive: 0,
        negative: 0,
        zero: 0,
        determinant: BigRational::one(),
    };

    while !active.is_empty() {
        if let Some(pos) = active.iter().position(|&i| !a[i][i].is_zero()) {
            let p = active.remove(pos);
            let d = a[p][p].clone();
            if d.is_positive() {
                out.positive += 1;
            } else {
                out.negative += 1;
            }
            out.determinant *= &d;
            for &j in &active {
                if a[j][p].is_zero() {
                    continue;
                }
                let f = &a[j][p] / &d;
                for &k in &active {
                    if a[p][k].is_zero() {
                        continue;
                    }
                    let delta = &f * &a[p][k];
                    a[j][k] -= delta;
                }
            }
            continue;
        }

        // all remaining diagonal entries are zero
        let mut block = None;
        'search: for (ii, &i) in active.iter().enumerate() {
            for &j in &active[ii + 1..] {
                if !a[i][j].is_zero() {
                    block = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((i, j)) = block else {
            out.zero += active.len();
            out.determinant = BigRational::zero();
            break;
        };
        let b = a[i][j].clone();
        out.positive += 1;
        out.negative += 1;
        out.determinant *= -(&b * &b);
        active.retain(|&k| k != i && k != j);
        // Schur complement against [[0, b], [b, 0]]^{-1} = [[0, 1/b], [1/b, 0]]
        for &k in &active {
            let (aki, akj) = (a[k][i].clone(), a[k][j].clone());
            if aki.is_zero() && akj.is_zero() {
                continue;
            }
            for &l in &active {
                let delta = (&aki * &a[j][l] + &akj * &a[i][l]) / &b;
                if !delta.is_zero() {
                    a[k][l] -= delta;
                }
            }
        }
    }
    out
}
