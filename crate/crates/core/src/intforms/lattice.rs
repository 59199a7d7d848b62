//! Short-vector enumeration and the isometric embedding search.
//!
//! The embedding search looks for integer vectors `v_1, ..., v_m` inside the
//! ambient lattice whose Gram matrix is exactly the target Gram. Because the
//! target is unimodular, the span of the `v_i` is an orthogonal summand and its
//! orthogonal complement is again unimodular; the complement basis is computed
//! by an integer kernel and returned with the witness so it can be checked.
//!
//! For definite ambient forms the candidate sets are complete (Fincke-Pohst
//! enumeration with exact rational pruning), so `NotFound` is a proof of
//! non-existence. For indefinite ambient forms the candidates come from a
//! coordinate box and `NotFound` only means "not found in the box".

use std::collections::BTreeMap;

use num_rational::Ratio;
use num_traits::Zero;
use thiserror::Error;

use super::{IntForm, SearchLimits};

type Q = Ratio<i128>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("ambient rank {rank} exceeds the configured cap {cap}")]
    RankTooLarge { rank: usize, cap: usize },
    #[error("complement of the embedded sublattice is not unimodular")]
    ComplementNotUnimodular,
}

/// Basis vectors of the embedded copy, plus a basis of its orthogonal complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingWitness {
    pub vectors: Vec<Vec<i64>>,
    pub complement_basis: Vec<Vec<i64>>,
    pub complement: IntForm,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Embedding {
    Found(EmbeddingWitness),
    NotFound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub outcome: Embedding,
    /// `true` when the candidate sets were complete, so `NotFound` is conclusive.
    pub exhaustive: bool,
}

impl EmbeddingReport {
    pub fn is_found(&self) -> bool {
        matches!(self.outcome, Embedding::Found(_))
    }

    /// A conclusive answer: either a witness, or an exhaustive miss.
    pub fn is_conclusive(&self) -> bool {
        self.is_found() || self.exhaustive
    }
}

/// Ordering used to break ties between witnesses: earlier nonzero coordinates
/// first, then smaller absolute values, then positive before negative.
fn witness_key(v: &[i64]) -> Vec<(bool, u64, bool)> {
    v.iter().map(|&c| (c == 0, c.unsigned_abs(), c < 0)).collect()
}

fn to_f64(q: &Q) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

/// Fincke-Pohst coefficients: `q(x) = sum_i c[i][i] (x_i + sum_{j>i} c[i][j] x_j)^2`.
fn quadratic_coefficients(gram: &[Vec<i64>]) -> Vec<Vec<Q>> {
    let n = gram.len();
    let mut q: Vec<Vec<Q>> = gram
        .iter()
        .map(|row| row.iter().map(|&x| Q::from_integer(x as i128)).collect())
        .collect();
    for i in 0..n {
        for j in i + 1..n {
            q[j][i] = q[i][j];
            q[i][j] = q[i][j] / q[i][i];
        }
        for k in i + 1..n {
            for l in k..n {
                q[k][l] = q[k][l] - q[k][i] * q[i][l];
            }
        }
    }
    q
}

/// All vectors `v` with `v^T G v == norm` for a positive definite `G`.
pub(crate) fn vectors_of_norm(gram: &[Vec<i64>], norm: i64) -> Vec<Vec<i64>> {
    let n = gram.len();
    if n == 0 || norm <= 0 {
        return Vec::new();
    }
    let q = quadratic_coefficients(gram);
    let mut out = Vec::new();
    let mut x = vec![0i64; n];
    enumerate_level(&q, n - 1, Q::from_integer(norm as i128), &mut x, &mut out);
    out
}

fn enumerate_level(q: &[Vec<Q>], i: usize, remaining: Q, x: &mut [i64], out: &mut Vec<Vec<i64>>) {
    let n = q.len();
    let mut center = Q::zero();
    for j in i + 1..n {
        if x[j] != 0 {
            center += q[i][j] * Q::from_integer(x[j] as i128);
        }
    }
    let radius = (to_f64(&(remaining / q[i][i]))).max(0.0).sqrt();
    let c = to_f64(&center);
    let lo = (-c - radius).floor() as i64 - 1;
    let hi = (-c + radius).ceil() as i64 + 1;
    for xi in lo..=hi {
        let shifted = Q::from_integer(xi as i128) + center;
        let term = q[i][i] * shifted * shifted;
        if term > remaining {
            continue;
        }
        x[i] = xi;
        let rest = remaining - term;
        if i == 0 {
            if rest.is_zero() {
                out.push(x.to_vec());
            }
        } else {
            enumerate_level(q, i - 1, rest, x, out);
        }
    }
    x[i] = 0;
}

/// Number of vectors of the given norm in a definite form (sign-adjusted).
pub(crate) fn count_vectors_of_norm(form: &IntForm, norm: i64) -> usize {
    positive_gram(form).map_or(0, |g| vectors_of_norm(&g, norm).len())
}

/// Gram of the form made positive definite, if the form is definite.
fn positive_gram(form: &IntForm) -> Option<Vec<Vec<i64>>> {
    if !form.is_definite() || form.rank() == 0 {
        return None;
    }
    if form.signature() > 0 {
        Some(form.gram().to_vec())
    } else {
        Some(form.gram().iter().map(|r| r.iter().map(|x| -x).collect()).collect())
    }
}

fn box_vectors(gram: &[Vec<i64>], bound: i64) -> BTreeMap<i64, Vec<Vec<i64>>> {
    let n = gram.len();
    let mut out: BTreeMap<i64, Vec<Vec<i64>>> = BTreeMap::new();
    let mut v = vec![-bound; n];
    loop {
        if v.iter().any(|&c| c != 0) {
            out.entry(quadratic(gram, &v)).or_default().push(v.clone());
        }
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            if v[k] < bound {
                v[k] += 1;
                break;
            }
            v[k] = -bound;
            k += 1;
        }
    }
}

fn quadratic(gram: &[Vec<i64>], v: &[i64]) -> i64 {
    let mut s = 0;
    for (i, row) in gram.iter().enumerate() {
        if v[i] == 0 {
            continue;
        }
        for (j, &g) in row.iter().enumerate() {
            s += v[i] * g * v[j];
        }
    }
    s
}

fn mat_vec(gram: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    gram.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

struct Candidate {
    v: Vec<i64>,
    gv: Vec<i64>,
}

/// Searches for an isometric copy of `y` inside `x` with unimodular orthogonal
/// complement, using the default limits.
pub fn embedding_oracle(x: &IntForm, y: &IntForm) -> Result<EmbeddingReport, OracleError> {
    embedding_oracle_with(x, y, &SearchLimits::default())
}

pub fn embedding_oracle_with(
    x: &IntForm,
    y: &IntForm,
    limits: &SearchLimits,
) -> Result<EmbeddingReport, OracleError> {
    let n = x.rank();
    let m = y.rank();
    let definite = x.is_definite();
    if definite && n > limits.definite_cap {
        return Err(OracleError::RankTooLarge { rank: n, cap: limits.definite_cap });
    }
    if !definite && n > limits.indefinite_rank_cap {
        return Err(OracleError::RankTooLarge { rank: n, cap: limits.indefinite_rank_cap });
    }
    let not_found = |exhaustive| Ok(EmbeddingReport { outcome: Embedding::NotFound, exhaustive });
    if m > n {
        return not_found(true);
    }
    if m == 0 {
        let basis: Vec<Vec<i64>> =
            (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        return Ok(EmbeddingReport {
            outcome: Embedding::Found(EmbeddingWitness {
                vectors: Vec::new(),
                complement_basis: basis,
                complement: x.clone(),
            }),
            exhaustive: true,
        });
    }

    let gram = x.gram();
    let target = y.gram();
    let mut pools: BTreeMap<i64, Vec<Candidate>> = BTreeMap::new();
    let wanted: Vec<i64> = (0..m).map(|i| target[i][i]).collect();

    if definite {
        let sign = x.signature().signum();
        // a definite lattice only contains definite sublattices of the same sign
        if !(y.is_definite() && y.signature().signum() == sign) {
            return not_found(true);
        }
        let positive = positive_gram(x).expect("definite form of positive rank");
        for &w in &wanted {
            pools.entry(w).or_insert_with(|| {
                vectors_of_norm(&positive, w * sign)
                    .into_iter()
                    .map(|v| Candidate { gv: mat_vec(gram, &v), v })
                    .collect()
            });
        }
    } else {
        let mut by_norm = box_vectors(gram, limits.indefinite_box);
        for &w in &wanted {
            pools.entry(w).or_insert_with(|| {
                let vs = by_norm.remove(&w).unwrap_or_default();
                vs.into_iter().map(|v| Candidate { gv: mat_vec(gram, &v), v }).collect()
            });
        }
    }
    for pool in pools.values_mut() {
        pool.sort_by_key(|c| witness_key(&c.v));
    }

    let mut chosen: Vec<usize> = Vec::with_capacity(m);
    if !search(0, target, &wanted, &pools, &mut chosen) {
        return not_found(definite);
    }
    let picked: Vec<&Candidate> =
        chosen.iter().enumerate().map(|(d, &k)| &pools[&wanted[d]][k]).collect();
    let vectors: Vec<Vec<i64>> = picked.iter().map(|c| c.v.clone()).collect();
    let constraints: Vec<Vec<i64>> = picked.iter().map(|c| c.gv.clone()).collect();
    let complement_basis = integer_kernel(&constraints, n);
    let complement_gram: Vec<Vec<i64>> = complement_basis
        .iter()
        .map(|a| {
            let ga = mat_vec(gram, a);
            complement_basis.iter().map(|b| b.iter().zip(&ga).map(|(p, q)| p * q).sum()).collect()
        })
        .collect();
    let complement = IntForm::new(complement_gram).map_err(|_| OracleError::ComplementNotUnimodular)?;
    Ok(EmbeddingReport {
        outcome: Embedding::Found(EmbeddingWitness { vectors, complement_basis, complement }),
        exhaustive: definite,
    })
}

fn search(
    depth: usize,
    target: &[Vec<i64>],
    wanted: &[i64],
    pools: &BTreeMap<i64, Vec<Candidate>>,
    chosen: &mut Vec<usize>,
) -> bool {
    if depth == target.len() {
        return true;
    }
    let pool = &pools[&wanted[depth]];
    'next: for (k, cand) in pool.iter().enumerate() {
        for (prev_depth, &prev) in chosen.iter().enumerate() {
            let prev_c = &pools[&wanted[prev_depth]][prev];
            let ip: i64 = cand.v.iter().zip(&prev_c.gv).map(|(a, b)| a * b).sum();
            if ip != target[depth][prev_depth] {
                continue 'next;
            }
        }
        chosen.push(k);
        if search(depth + 1, target, wanted, pools, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Basis of the integer kernel `{v : A v = 0}` of a full-row-rank matrix, via
/// unimodular column operations.
pub(crate) fn integer_kernel(rows: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut u: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect();
    let col_op = |a: &mut Vec<Vec<i128>>, u: &mut Vec<Vec<i128>>, dst: usize, src: usize, q: i128| {
        for row in a.iter_mut() {
            row[dst] -= q * row[src];
        }
        for row in u.iter_mut() {
            row[dst] -= q * row[src];
        }
    };
    let swap_cols = |a: &mut Vec<Vec<i128>>, u: &mut Vec<Vec<i128>>, i: usize, j: usize| {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
        for row in u.iter_mut() {
            row.swap(i, j);
        }
    };
    let mut pivot = 0;
    for r in 0..a.len() {
        if pivot == n {
            break;
        }
        for c in pivot + 1..n {
            while a[r][c] != 0 {
                let q = a[r][pivot] / a[r][c];
                col_op(&mut a, &mut u, pivot, c, q);
                swap_cols(&mut a, &mut u, pivot, c);
            }
        }
        if a[r][pivot] != 0 {
            pivot += 1;
        }
    }
    (pivot..n)
        .map(|c| u.iter().map(|row| i64::try_from(row[c]).expect("kernel entry fits in i64")).collect())
        .collect()
}
