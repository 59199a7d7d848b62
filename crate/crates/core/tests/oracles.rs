//! Decision procedures checked against brute-force oracles.

mod common;

use std::collections::{BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fourdom::intforms::{classify, is_isomorphic, Iso};
use fourdom::laurent::{ht_matrix_a, HermitianLambdaForm, LambdaMatrix, LaurentPoly};
use fourdom::modtwo::{classify_z2, split_off_z2, ModTwoClass, ModTwoForm, Z2Split};

fn bits(code: u32, n: usize) -> Vec<u8> {
    (0..n).map(|i| ((code >> i) & 1) as u8).collect()
}

/// Every nondegenerate symmetric matrix over GF(2) of rank `n`.
fn all_z2_forms(n: usize) -> Vec<ModTwoForm> {
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    (0u32..(1 << slots.len()))
        .filter_map(|code| {
            let mut m = vec![vec![0u8; n]; n];
            for (k, &(i, j)) in slots.iter().enumerate() {
                let b = ((code >> k) & 1) as u8;
                m[i][j] = b;
                m[j][i] = b;
            }
            ModTwoForm::new(m).ok()
        })
        .collect()
}

fn pair(f: &ModTwoForm, u: &[u8], v: &[u8]) -> u8 {
    let n = f.rank();
    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).fold(0, |s, (i, j)| s ^ (u[i] & f.entry(i, j) & v[j]))
}

/// Invertible `n × n` matrices over GF(2), as column lists.
fn gl2(n: usize) -> Vec<Vec<Vec<u8>>> {
    let vecs: Vec<Vec<u8>> = (1u32..(1 << n)).map(|c| bits(c, n)).collect();
    let mut out = Vec::new();
    let mut cols: Vec<Vec<u8>> = Vec::new();
    fn independent(cols: &[Vec<u8>], v: &[u8]) -> bool {
        // v is outside the span of cols
        let k = cols.len();
        (0u32..(1 << k)).all(|mask| {
            let mut s = vec![0u8; v.len()];
            for (i, c) in cols.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    s.iter_mut().zip(c).for_each(|(a, b)| *a ^= b);
                }
            }
            s != v
        })
    }
    fn go(n: usize, vecs: &[Vec<u8>], cols: &mut Vec<Vec<u8>>, out: &mut Vec<Vec<Vec<u8>>>) {
        if cols.len() == n {
            out.push(cols.clone());
            return;
        }
        for v in vecs {
            if independent(cols, v) {
                cols.push(v.clone());
                go(n, vecs, cols, out);
                cols.pop();
            }
        }
    }
    go(n, &vecs, &mut cols, &mut out);
    out
}

#[test]
fn z2_classes_are_congruence_orbits() {
    for n in 0..=3 {
        let forms = all_z2_forms(n);
        let group = gl2(n);
        assert_eq!(group.len(), [1, 1, 6, 168][n]);
        // orbit label: the lexicographically smallest congruent matrix
        let orbit = |f: &ModTwoForm| -> Vec<Vec<u8>> {
            group
                .iter()
                .map(|p| (0..n).map(|i| (0..n).map(|j| pair(f, &p[i], &p[j])).collect()).collect::<Vec<Vec<u8>>>())
                .min()
                .unwrap_or_default()
        };
        let mut by_class: HashMap<ModTwoClass, BTreeSet<Vec<Vec<u8>>>> = HashMap::new();
        for f in &forms {
            by_class.entry(classify_z2(f)).or_default().insert(orbit(f));
        }
        // each class is one orbit, and distinct classes are distinct orbits
        assert!(by_class.values().all(|o| o.len() == 1), "rank {n}: {by_class:?}");
        let orbits: BTreeSet<_> = by_class.values().flatten().collect();
        assert_eq!(orbits.len(), by_class.len());
    }
}

/// Complement classes of all isometric copies of `y` in `x`.
fn z2_embeddings(x: &ModTwoForm, y: &ModTwoForm) -> BTreeSet<(usize, bool)> {
    let (n, m) = (x.rank(), y.rank());
    let mut out = BTreeSet::new();
    if m > n {
        return out;
    }
    fn go(x: &ModTwoForm, y: &ModTwoForm, chosen: &mut Vec<Vec<u8>>, out: &mut BTreeSet<(usize, bool)>) {
        let (n, m) = (x.rank(), y.rank());
        if chosen.len() == m {
            let perp: Vec<Vec<u8>> = (0u32..(1 << n))
                .map(|c| bits(c, n))
                .filter(|w| chosen.iter().all(|v| pair(x, w, v) == 0))
                .collect();
            assert_eq!(perp.len(), 1 << (n - m));
            let alternating = perp.iter().all(|w| pair(x, w, w) == 0);
            out.insert((n - m, alternating));
            return;
        }
        let k = chosen.len();
        for c in 0u32..(1 << n) {
            let v = bits(c, n);
            if (0..k).all(|i| pair(x, &chosen[i], &v) == y.entry(i, k)) && pair(x, &v, &v) == y.entry(k, k) {
                chosen.push(v);
                go(x, y, chosen, out);
                chosen.pop();
            }
        }
    }
    go(x, y, &mut Vec::new(), &mut out);
    out
}

#[test]
fn z2_split_matches_subspace_search() {
    let ambient: Vec<ModTwoForm> = (0..=4).flat_map(all_z2_forms).collect();
    let summands: Vec<ModTwoForm> = (0..=2).flat_map(all_z2_forms).collect();
    let mut checked = 0;
    for x in &ambient {
        for y in &summands {
            let found = z2_embeddings(x, y);
            match split_off_z2(x, y) {
                Z2Split::Yes { complement } => {
                    let key = (complement.rank(), matches!(complement, ModTwoClass::Alternating(_)));
                    assert!(found.contains(&key), "{:?} in {:?}: {complement} not among {found:?}", y.matrix(), x.matrix());
                }
                Z2Split::No(reason) => assert!(found.is_empty(), "{:?} in {:?}: {reason}", y.matrix(), x.matrix()),
            }
            checked += 1;
        }
    }
    assert!(checked > 500);
}

fn random_poly(rng: &mut ChaCha8Rng) -> LaurentPoly {
    let terms: Vec<(i64, i64)> = (0..rng.gen_range(0..3)).map(|_| (rng.gen_range(-2..=2), rng.gen_range(-2..=2))).collect();
    LaurentPoly::from_terms(terms)
}

/// A product of elementary matrices and a diagonal unit.
fn random_unit_matrix(rng: &mut ChaCha8Rng, n: usize) -> LambdaMatrix {
    let mut p = LambdaMatrix::identity(n);
    for _ in 0..3 {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i == j {
            continue;
        }
        let mut e = LambdaMatrix::identity(n);
        e.set(i, j, random_poly(rng));
        p = p.mul(&e);
    }
    let mut d = LambdaMatrix::identity(n);
    let k = rng.gen_range(0..n);
    d.set(k, k, LaurentPoly::monomial(if rng.gen_bool(0.5) { 1 } else { -1 }, rng.gen_range(-2..=2)));
    p.mul(&d)
}

#[test]
fn unit_congruence_preserves_a() {
    let a = ht_matrix_a();
    let base = a.augment().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for trial in 0..60 {
        let p = random_unit_matrix(&mut rng, a.rank());
        assert!(p.determinant().is_unit(), "trial {trial}");
        let b = p.conj_transpose().mul(a.matrix()).mul(&p);
        let form = HermitianLambdaForm::new(b.rows().to_vec()).expect("congruent form is hermitian");
        assert_eq!(form.determinant(), LaurentPoly::one(), "trial {trial}");
        let aug = form.augment().expect("augmentation stays unimodular");
        assert_eq!(aug.invariants(), base.invariants());
        assert_eq!(classify(&aug), classify(&base));
        assert_eq!(is_isomorphic(&aug, &base), Iso::Yes);
    }
}
