//! Corpora and small exact helpers shared by the integration tests.
#![allow(dead_code)]

use fourdom::domination::form_records;
use fourdom::intforms::IntForm;
use fourdom::laurent::AxiomRegistry;
use fourdom::manifolds::{non_extension_pair, ExtensionStatus, ManifoldDescriptor, W2Type};

/// Largest rank of the integer forms in the descriptor corpora.
pub const CORPUS_RANK: usize = 4;

pub fn corpus_forms() -> Vec<IntForm> {
    form_records(CORPUS_RANK).into_iter().map(|r| r.form).collect()
}

/// Every valid finite cyclic descriptor with `n` in 2..=5 over the corpus forms.
pub fn fc_corpus() -> Vec<ManifoldDescriptor> {
    let registry = AxiomRegistry::builtin();
    let mut out = Vec::new();
    for n in 2..=5u64 {
        let w2s: &[W2Type] = if n % 2 == 0 {
            &[W2Type::TypeI, W2Type::TypeII, W2Type::TypeIII]
        } else {
            &[W2Type::Spin, W2Type::NonSpin]
        };
        for form in corpus_forms() {
            for &w2 in w2s {
                for ks in [0, 1] {
                    let d = ManifoldDescriptor::FiniteCyclic { n, form: form.clone(), w2, ks };
                    if d.is_valid(&registry) {
                        out.push(d);
                    }
                }
            }
        }
    }
    out
}

pub fn sc_corpus() -> Vec<ManifoldDescriptor> {
    let registry = AxiomRegistry::builtin();
    corpus_forms()
        .into_iter()
        .flat_map(|f| [0, 1].map(|ks| ManifoldDescriptor::simply_connected(f.clone(), ks)))
        .filter(|d| d.is_valid(&registry))
        .collect()
}

/// π1 = Z descriptors without equivariant data, plus the registered pair.
pub fn ic_corpus() -> Vec<ManifoldDescriptor> {
    let registry = AxiomRegistry::builtin();
    let mut out: Vec<ManifoldDescriptor> = corpus_forms()
        .into_iter()
        .flat_map(|f| {
            [0, 1].map(|ks| ManifoldDescriptor::InfiniteCyclic {
                int_form: f.clone(),
                lambda_form: None,
                extension_status: ExtensionStatus::Unknown,
                ks,
            })
        })
        .filter(|d| d.is_valid(&registry))
        .collect();
    let (x, y) = non_extension_pair();
    out.push(x);
    out.push(y);
    out
}

pub fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &v)| v).collect()).collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

/// All symmetric integer matrices of the given rank with entries in
/// `lo..=hi` and determinant ±1, in lexicographic order of the upper triangle.
pub fn unimodular_matrices(rank: usize, lo: i64, hi: i64) -> Vec<Vec<Vec<i64>>> {
    let slots: Vec<(usize, usize)> = (0..rank).flat_map(|i| (i..rank).map(move |j| (i, j))).collect();
    let width = (hi - lo + 1) as u64;
    let total = width.pow(slots.len() as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut m = vec![vec![0i64; rank]; rank];
        let mut c = code;
        for &(i, j) in &slots {
            let v = lo + (c % width) as i64;
            c /= width;
            m[i][j] = v;
            m[j][i] = v;
        }
        if det(&m).abs() == 1 {
            out.push(m);
        }
    }
    out
}

/// Coefficients of `det(λI - m)` from the constant term up, by
/// Faddeev–LeVerrier in exact integer arithmetic.
pub fn char_poly(m: &[Vec<i64>]) -> Vec<i128> {
    let n = m.len();
    let a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let mul = |x: &Vec<Vec<i128>>, y: &Vec<Vec<i128>>| -> Vec<Vec<i128>> {
        (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| x[i][k] * y[k][j]).sum()).collect()).collect()
    };
    // coeffs[n - k] = c_k with p(λ) = Σ c_k λ^(n-k), c_0 = 1
    let mut c = vec![0i128; n + 1];
    c[0] = 1;
    let mut mk: Vec<Vec<i128>> = vec![vec![0; n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{k-1} I
        let mut next = mul(&a, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += c[k - 1];
        }
        mk = next;
        let am = mul(&a, &mk);
        let trace: i128 = (0..n).map(|i| am[i][i]).sum();
        assert_eq!(trace % k as i128, 0);
        c[k] = -trace / k as i128;
    }
    c.reverse();
    c
}

fn sign_changes(coeffs: impl Iterator<Item = i128>) -> usize {
    let signs: Vec<i128> = coeffs.filter(|&c| c != 0).map(i128::signum).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// (positive, negative) eigenvalue counts of a symmetric matrix by
/// Descartes' rule on its real-rooted characteristic polynomial.
pub fn descartes_inertia(m: &[Vec<i64>]) -> (usize, usize) {
    let p = char_poly(m);
    let positive = sign_changes(p.iter().copied());
    let negative = sign_changes(p.iter().enumerate().map(|(k, &c)| if k % 2 == 1 { -c } else { c }));
    (positive, negative)
}

/// `uᵀ g u` for integer matrices.
pub fn congruent(g: &[Vec<i64>], u: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = g.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).flat_map(|k| (0..n).map(move |l| (k, l))).map(|(k, l)| u[k][i] * g[k][l] * u[l][j]).sum()).collect())
        .collect()
}
