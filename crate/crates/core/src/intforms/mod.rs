//! Symmetric unimodular bilinear forms over the integers.
//!
//! Indefinite forms are classified by rank, signature and parity. Definite
//! forms are resolved against the catalog `{±I_n, ±E8, ±(E8 ⊕ I_k)}`, which is
//! complete up to rank 9; beyond the configured cap answers are `Undecided`.

mod inertia;
mod lattice;

use std::fmt;

use thiserror::Error;

use crate::modtwo::ModTwoForm;

pub(crate) use inertia::inertia;
pub use lattice::{
    embedding_oracle, embedding_oracle_with, Embedding, EmbeddingReport, EmbeddingWitness, OracleError,
};

/// Largest rank for which the definite catalog is complete.
pub const CATALOG_RANK_LIMIT: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// Parity of an orthogonal sum.
    pub fn combine(self, other: Parity) -> Parity {
        if self == Parity::Even && other == Parity::Even {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("matrix is not unimodular (determinant {determinant})")]
    NotUnimodular { determinant: String },
}

/// Limits for the definite-form machinery.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchLimits {
    /// Largest definite rank handled by the embedding search.
    pub definite_cap: usize,
    /// Largest indefinite rank accepted by the (box-bounded) embedding search.
    pub indefinite_rank_cap: usize,
    /// Coordinate bound for the indefinite box search.
    pub indefinite_box: i64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { definite_cap: 9, indefinite_rank_cap: 6, indefinite_box: 3 }
    }
}

impl SearchLimits {
    pub fn with_definite_cap(cap: usize) -> Self {
        SearchLimits { definite_cap: cap, ..Self::default() }
    }
}

/// Rank, signature and parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Invariants {
    pub rank: usize,
    pub signature: i64,
    pub parity: Parity,
}

impl fmt::Display for Invariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rank {}, signature {}, {}", self.rank, self.signature, self.parity)
    }
}

/// A symmetric unimodular integer form with cached invariants.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntForm {
    gram: Vec<Vec<i64>>,
    signature: i64,
    parity: Parity,
}

impl IntForm {
    /// Validates a Gram matrix: square, symmetric, determinant ±1.
    pub fn new(gram: Vec<Vec<i64>>) -> Result<Self, FormError> {
        let n = gram.len();
        if gram.iter().any(|row| row.len() != n) {
            return Err(FormError::NotSquare);
        }
        for i in 0..n {
            for j in i + 1..n {
                if gram[i][j] != gram[j][i] {
                    return Err(FormError::NotSymmetric { row: i, col: j });
                }
            }
        }
        let inertia = inertia(&gram);
        let det = &inertia.determinant;
        if !(det.is_integer() && (det.numer() == &1.into() || det.numer() == &(-1).into())) {
            return Err(FormError::NotUnimodular { determinant: det.to_string() });
        }
        let parity = if gram.iter().enumerate().all(|(i, row)| row[i] % 2 == 0) {
            Parity::Even
        } else {
            Parity::Odd
        };
        let signature = inertia.signature();
        // even unimodular forms have signature divisible by 8
        assert!(parity == Parity::Odd || signature % 8 == 0, "even unimodular form with signature {signature}");
        Ok(IntForm { gram, signature, parity })
    }

    /// The rank-0 form (conventionally even).
    pub fn zero() -> Self {
        IntForm { gram: Vec::new(), signature: 0, parity: Parity::Even }
    }

    pub fn hyperbolic() -> Self {
        IntForm { gram: vec![vec![0, 1], vec![1, 0]], signature: 0, parity: Parity::Even }
    }

    /// E8, with the basis ordered outward from the branch node of its Dynkin diagram.
    pub fn e8() -> Self {
        const EDGES: [(usize, usize); 7] = [(0, 1), (0, 2), (0, 3), (2, 4), (3, 5), (5, 6), (6, 7)];
        let mut g = vec![vec![0i64; 8]; 8];
        for (i, row) in g.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (a, b) in EDGES {
            g[a][b] = -1;
            g[b][a] = -1;
        }
        IntForm { gram: g, signature: 8, parity: Parity::Even }
    }

    /// `p` copies of ⟨1⟩ followed by `q` copies of ⟨−1⟩.
    pub fn diagonal(p: usize, q: usize) -> Self {
        let n = p + q;
        let gram = (0..n)
            .map(|i| (0..n).map(|j| if i != j { 0 } else if i < p { 1 } else { -1 }).collect())
            .collect();
        let parity = if n == 0 { Parity::Even } else { Parity::Odd };
        IntForm { gram, signature: p as i64 - q as i64, parity }
    }

    /// The augmentation (t = 1) of the rank-4 hermitian matrix `A`.
    pub fn a1() -> Self {
        IntForm::new(vec![vec![7, 6, 3, 2], vec![6, 7, 2, 3], vec![3, 2, 2, 0], vec![2, 3, 0, 2]])
            .expect("A(1) is unimodular")
    }

    pub fn negated(&self) -> Self {
        IntForm {
            gram: self.gram.iter().map(|r| r.iter().map(|x| -x).collect()).collect(),
            signature: -self.signature,
            parity: self.parity,
        }
    }

    /// Block-diagonal sum; invariants add without re-elimination.
    pub fn direct_sum(&self, other: &IntForm) -> Self {
        let (n, m) = (self.rank(), other.rank());
        let mut gram = vec![vec![0i64; n + m]; n + m];
        for i in 0..n {
            gram[i][..n].copy_from_slice(&self.gram[i]);
        }
        for i in 0..m {
            gram[n + i][n..].copy_from_slice(&other.gram[i]);
        }
        IntForm {
            gram,
            signature: self.signature + other.signature,
            parity: self.parity.combine(other.parity),
        }
    }

    /// `k`-fold orthogonal sum of `self`.
    pub fn repeat(&self, k: usize) -> Self {
        (0..k).fold(IntForm::zero(), |acc, _| acc.direct_sum(self))
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn signature(&self) -> i64 {
        self.signature
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn invariants(&self) -> Invariants {
        Invariants { rank: self.rank(), signature: self.signature, parity: self.parity }
    }

    /// `|signature| == rank`; the rank-0 form counts as definite.
    pub fn is_definite(&self) -> bool {
        self.signature.unsigned_abs() as usize == self.rank()
    }

    pub fn is_indefinite(&self) -> bool {
        !self.is_definite()
    }

    /// `b2 - |sigma|`, the quantity governing connected-sum splittings.
    pub fn indefiniteness(&self) -> usize {
        self.rank() - self.signature.unsigned_abs() as usize
    }
}

pub fn make_form(matrix: Vec<Vec<i64>>) -> Result<IntForm, FormError> {
    IntForm::new(matrix)
}

pub fn direct_sum(f: &IntForm, g: &IntForm) -> IntForm {
    f.direct_sum(g)
}

/// An entry of the definite catalog: `±(E8^e ⊕ I_ones)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CatalogForm {
    pub negative: bool,
    pub e8: bool,
    pub ones: usize,
}

impl CatalogForm {
    pub fn rank(&self) -> usize {
        self.ones + if self.e8 { 8 } else { 0 }
    }

    pub fn form(&self) -> IntForm {
        let mut f = if self.e8 { IntForm::e8() } else { IntForm::zero() };
        f = f.direct_sum(&IntForm::diagonal(self.ones, 0));
        if self.negative {
            f.negated()
        } else {
            f
        }
    }
}

impl fmt::Display for CatalogForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.negative { "-" } else { "" };
        match (self.e8, self.ones) {
            (false, 0) => f.write_str("0"),
            (false, k) => write!(f, "{sign}I_{k}"),
            (true, 0) => write!(f, "{sign}E8"),
            (true, k) => write!(f, "{sign}(E8+I_{k})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormClass {
    IndefiniteOdd { p: usize, q: usize },
    /// `b` hyperbolic planes and `c` copies of E8 (negative `c` for −E8).
    IndefiniteEven { b: usize, c: i64 },
    DefiniteCatalog(CatalogForm),
    DefiniteUnclassified(Invariants),
}

impl fmt::Display for FormClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormClass::IndefiniteOdd { p, q } => write!(f, "I({p},{q})"),
            FormClass::IndefiniteEven { b, c } => write!(f, "{b}H+{c}E8"),
            FormClass::DefiniteCatalog(c) => write!(f, "{c}"),
            FormClass::DefiniteUnclassified(inv) => write!(f, "definite({inv})"),
        }
    }
}

impl FormClass {
    /// A Gram matrix in the class (none for unclassified definite forms).
    pub fn representative(&self) -> Option<IntForm> {
        match *self {
            FormClass::IndefiniteOdd { p, q } => Some(IntForm::diagonal(p, q)),
            FormClass::IndefiniteEven { b, c } => {
                let e8 = if c < 0 { IntForm::e8().negated() } else { IntForm::e8() };
                Some(IntForm::hyperbolic().repeat(b).direct_sum(&e8.repeat(c.unsigned_abs() as usize)))
            }
            FormClass::DefiniteCatalog(c) => Some(c.form()),
            FormClass::DefiniteUnclassified(_) => None,
        }
    }
}

/// Every isometry class of unimodular forms of the given rank, for
/// `rank <= CATALOG_RANK_LIMIT`.
pub fn form_classes(rank: usize) -> Vec<FormClass> {
    assert!(rank <= CATALOG_RANK_LIMIT, "form classes are only catalogued up to rank {CATALOG_RANK_LIMIT}");
    if rank == 0 {
        return vec![FormClass::DefiniteCatalog(CatalogForm { negative: false, e8: false, ones: 0 })];
    }
    let mut out = Vec::new();
    for p in 0..=rank {
        let q = rank - p;
        out.push(if p >= 1 && q >= 1 {
            FormClass::IndefiniteOdd { p, q }
        } else {
            FormClass::DefiniteCatalog(CatalogForm { negative: p == 0, e8: false, ones: rank })
        });
    }
    if rank > 8 {
        for negative in [false, true] {
            out.push(FormClass::DefiniteCatalog(CatalogForm { negative, e8: true, ones: rank - 8 }));
        }
    }
    if rank.is_multiple_of(2) {
        let cmax = (rank / 8) as i64;
        for c in -cmax..=cmax {
            let b = (rank - 8 * c.unsigned_abs() as usize) / 2;
            out.push(if b >= 1 {
                FormClass::IndefiniteEven { b, c }
            } else {
                FormClass::DefiniteCatalog(CatalogForm { negative: c < 0, e8: true, ones: 0 })
            });
        }
    }
    out
}

pub fn classify(f: &IntForm) -> FormClass {
    classify_with(f, &SearchLimits::default())
}

pub fn classify_with(f: &IntForm, limits: &SearchLimits) -> FormClass {
    let rank = f.rank();
    let sig = f.signature();
    if f.is_indefinite() {
        return match f.parity() {
            Parity::Odd => FormClass::IndefiniteOdd {
                p: ((rank as i64 + sig) / 2) as usize,
                q: ((rank as i64 - sig) / 2) as usize,
            },
            Parity::Even => FormClass::IndefiniteEven {
                b: (rank - 8 * (sig.unsigned_abs() as usize / 8)) / 2,
                c: sig / 8,
            },
        };
    }
    catalog_entry(f, limits).map_or(FormClass::DefiniteUnclassified(f.invariants()), FormClass::DefiniteCatalog)
}

/// Identifies a definite form with a catalog entry and confirms it by an
/// isometry witness.
fn catalog_entry(f: &IntForm, limits: &SearchLimits) -> Option<CatalogForm> {
    let rank = f.rank();
    if rank == 0 {
        return Some(CatalogForm { negative: false, e8: false, ones: 0 });
    }
    if rank > CATALOG_RANK_LIMIT.min(limits.definite_cap) {
        return None;
    }
    let negative = f.signature() < 0;
    let candidates: Vec<CatalogForm> = match f.parity() {
        Parity::Even => vec![CatalogForm { negative, e8: true, ones: rank.checked_sub(8)? }],
        Parity::Odd => {
            let mut c = vec![CatalogForm { negative, e8: false, ones: rank }];
            if rank > 8 {
                c.push(CatalogForm { negative, e8: true, ones: rank - 8 });
            }
            c
        }
    };
    candidates.into_iter().find(|c| {
        c.rank() == rank
            && embedding_oracle_with(f, &c.form(), limits).map(|r| r.is_found()).unwrap_or(false)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Iso {
    Yes,
    No,
    Undecided,
}

pub fn is_isomorphic(f: &IntForm, g: &IntForm) -> Iso {
    is_isomorphic_with(f, g, &SearchLimits::default())
}

pub fn is_isomorphic_with(f: &IntForm, g: &IntForm, limits: &SearchLimits) -> Iso {
    if f.invariants() != g.invariants() {
        return Iso::No;
    }
    if f.is_indefinite() || f.rank() == 0 {
        return Iso::Yes;
    }
    if f.rank() > limits.definite_cap {
        return Iso::Undecided;
    }
    // isometric lattices have the same number of vectors of each norm
    for norm in 1..=2 {
        if lattice::count_vectors_of_norm(f, norm) != lattice::count_vectors_of_norm(g, norm) {
            return Iso::No;
        }
    }
    match embedding_oracle_with(f, g, limits) {
        Ok(r) if r.is_found() => Iso::Yes,
        Ok(_) => Iso::No,
        Err(_) => Iso::Undecided,
    }
}

/// Whether some unimodular form has the given invariants.
pub fn exists_unimodular(rank: usize, signature: i64, parity: Parity) -> bool {
    let abs = signature.unsigned_abs() as usize;
    let congruent = (rank as i64 - signature).rem_euclid(2) == 0;
    if rank == 0 {
        return signature == 0 && parity == Parity::Even;
    }
    match parity {
        Parity::Odd => abs <= rank && congruent,
        Parity::Even => signature % 8 == 0 && (rank == abs || (rank >= abs + 2 && congruent)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitObstruction {
    RankDeficit { rank_difference: i64 },
    SignatureExceedsRank { signature_difference: i64, rank_difference: i64 },
    SignatureRankParity { signature_difference: i64, rank_difference: i64 },
    OddSummandOfEvenForm,
    NoUnimodularComplement(Invariants),
    /// Definite case: the catalog decomposition of the summand does not fit.
    NoDefiniteComplement { ambient: CatalogForm, summand: CatalogForm },
    NoIsometricEmbedding,
}

impl fmt::Display for SplitObstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SplitObstruction::RankDeficit { rank_difference } => {
                write!(f, "rank difference {rank_difference} is negative")
            }
            SplitObstruction::SignatureExceedsRank { signature_difference, rank_difference } => write!(
                f,
                "|signature difference| {} exceeds rank difference {rank_difference}",
                signature_difference.abs()
            ),
            SplitObstruction::SignatureRankParity { signature_difference, rank_difference } => write!(
                f,
                "signature difference {signature_difference} and rank difference {rank_difference} differ mod 2"
            ),
            SplitObstruction::OddSummandOfEvenForm => f.write_str("an even form has no odd orthogonal summand"),
            SplitObstruction::NoUnimodularComplement(inv) => {
                write!(f, "no unimodular complement with {inv} and matching parity")
            }
            SplitObstruction::NoDefiniteComplement { ambient, summand } => {
                write!(f, "{summand} is not an orthogonal summand of {ambient}")
            }
            SplitObstruction::NoIsometricEmbedding => f.write_str("exhaustive search found no isometric embedding"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Undecided {
    DefiniteRankCap { rank: usize, cap: usize },
}

impl fmt::Display for Undecided {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Undecided::DefiniteRankCap { rank, cap } => {
                write!(f, "definite form of rank {rank} is beyond the cap {cap}")
            }
        }
    }
}

/// Does some unimodular `L` satisfy `y ⊕ L ≅ x`?
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitDecision {
    Yes { complement: Invariants },
    No(SplitObstruction),
    Undecided(Undecided),
}

impl SplitDecision {
    pub fn is_yes(&self) -> bool {
        matches!(self, SplitDecision::Yes { .. })
    }

    pub fn is_no(&self) -> bool {
        matches!(self, SplitDecision::No(_))
    }
}

pub fn split_off(x: &IntForm, y: &IntForm) -> SplitDecision {
    split_off_with(x, y, &SearchLimits::default())
}

pub fn split_off_with(x: &IntForm, y: &IntForm, limits: &SearchLimits) -> SplitDecision {
    let r = x.rank() as i64 - y.rank() as i64;
    let s = x.signature() - y.signature();
    if r < 0 {
        return SplitDecision::No(SplitObstruction::RankDeficit { rank_difference: r });
    }
    if s.abs() > r {
        return SplitDecision::No(SplitObstruction::SignatureExceedsRank {
            signature_difference: s,
            rank_difference: r,
        });
    }
    if (r - s).rem_euclid(2) != 0 {
        return SplitDecision::No(SplitObstruction::SignatureRankParity {
            signature_difference: s,
            rank_difference: r,
        });
    }
    if x.parity() == Parity::Even && y.parity() == Parity::Odd {
        return SplitDecision::No(SplitObstruction::OddSummandOfEvenForm);
    }
    let rank = r as usize;

    if x.is_indefinite() {
        // y ⊕ L is then indefinite with x's invariants, hence isomorphic to x
        let parities: &[Parity] = match (x.parity(), y.parity()) {
            (Parity::Even, _) => &[Parity::Even],
            (Parity::Odd, Parity::Even) => &[Parity::Odd],
            (Parity::Odd, Parity::Odd) => &[Parity::Odd, Parity::Even],
        };
        return parities
            .iter()
            .find(|&&p| exists_unimodular(rank, s, p))
            .map(|&parity| SplitDecision::Yes { complement: Invariants { rank, signature: s, parity } })
            .unwrap_or(SplitDecision::No(SplitObstruction::NoUnimodularComplement(Invariants {
                rank,
                signature: s,
                parity: x.parity(),
            })));
    }

    if y.rank() == 0 {
        return SplitDecision::Yes { complement: x.invariants() };
    }
    if x.rank() <= CATALOG_RANK_LIMIT.min(limits.definite_cap) {
        // |s| <= r forces y definite of the same sign as x
        if let (Some(cx), Some(cy)) = (catalog_entry(x, limits), catalog_entry(y, limits)) {
            let e8 = i32::from(cx.e8) - i32::from(cy.e8);
            let ones = cx.ones as i64 - cy.ones as i64;
            if e8 < 0 || ones < 0 {
                return SplitDecision::No(SplitObstruction::NoDefiniteComplement { ambient: cx, summand: cy });
            }
            let parity = if ones > 0 { Parity::Odd } else { Parity::Even };
            return SplitDecision::Yes { complement: Invariants { rank, signature: s, parity } };
        }
    }
    match embedding_oracle_with(x, y, limits) {
        Ok(report) => match report.outcome {
            Embedding::Found(w) => SplitDecision::Yes { complement: w.complement.invariants() },
            Embedding::NotFound => SplitDecision::No(SplitObstruction::NoIsometricEmbedding),
        },
        Err(_) => SplitDecision::Undecided(Undecided::DefiniteRankCap { rank: x.rank(), cap: limits.definite_cap }),
    }
}

pub fn mod2_reduction(f: &IntForm) -> ModTwoForm {
    let bits: Vec<Vec<u8>> = f.gram().iter().map(|r| r.iter().map(|x| x.rem_euclid(2) as u8).collect()).collect();
    ModTwoForm::new(bits).expect("reduction of a unimodular form is nondegenerate")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(rank: usize, signature: i64, parity: Parity) -> Invariants {
        Invariants { rank, signature, parity }
    }

    #[test]
    fn make_form_examples() {
        assert_eq!(IntForm::hyperbolic().invariants(), inv(2, 0, Parity::Even));
        let id4 = make_form(IntForm::diagonal(4, 0).gram().to_vec()).unwrap();
        assert_eq!(id4.invariants(), inv(4, 4, Parity::Odd));
        assert_eq!(IntForm::a1().invariants(), inv(4, 4, Parity::Odd));
    }

    #[test]
    fn make_form_rejects_bad_input() {
        assert_eq!(make_form(vec![vec![1, 2], vec![3, 1]]), Err(FormError::NotSymmetric { row: 0, col: 1 }));
        assert!(matches!(make_form(vec![vec![2]]), Err(FormError::NotUnimodular { .. })));
        assert_eq!(make_form(vec![vec![1, 0]]), Err(FormError::NotSquare));
        assert!(matches!(make_form(vec![vec![1, 1], vec![1, 1]]), Err(FormError::NotUnimodular { .. })));
    }

    #[test]
    fn builtins_validate() {
        for f in [IntForm::e8(), IntForm::hyperbolic(), IntForm::diagonal(2, 3)] {
            let again = IntForm::new(f.gram().to_vec()).unwrap();
            assert_eq!(again, f);
        }
    }

    #[test]
    fn direct_sum_examples() {
        let h = IntForm::hyperbolic();
        assert_eq!(h.direct_sum(&IntForm::zero()), h);
        assert_eq!(h.direct_sum(&IntForm::e8()).invariants(), inv(10, 8, Parity::Even));
        let s = IntForm::diagonal(1, 0).direct_sum(&IntForm::diagonal(0, 1));
        assert_eq!(s.invariants(), inv(2, 0, Parity::Odd));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&IntForm::diagonal(1, 1)), FormClass::IndefiniteOdd { p: 1, q: 1 });
        let he8 = IntForm::hyperbolic().direct_sum(&IntForm::e8());
        assert_eq!(classify(&he8), FormClass::IndefiniteEven { b: 1, c: 1 });
        assert_eq!(
            classify(&IntForm::a1()),
            FormClass::DefiniteCatalog(CatalogForm { negative: false, e8: false, ones: 4 })
        );
        assert_eq!(
            classify(&IntForm::e8().negated()),
            FormClass::DefiniteCatalog(CatalogForm { negative: true, e8: true, ones: 0 })
        );
        assert_eq!(
            classify(&IntForm::e8().direct_sum(&IntForm::diagonal(1, 0))),
            FormClass::DefiniteCatalog(CatalogForm { negative: false, e8: true, ones: 1 })
        );
        assert_eq!(
            classify(&IntForm::diagonal(10, 0)),
            FormClass::DefiniteUnclassified(inv(10, 10, Parity::Odd))
        );
    }

    #[test]
    fn isomorphism_examples() {
        let h = IntForm::hyperbolic();
        assert_eq!(is_isomorphic(&h, &IntForm::diagonal(1, 1)), Iso::No);
        let one = IntForm::diagonal(1, 0);
        assert_eq!(is_isomorphic(&h.direct_sum(&one), &one.direct_sum(&h)), Iso::Yes);
        assert_eq!(is_isomorphic(&IntForm::a1(), &IntForm::diagonal(4, 0)), Iso::Yes);
        let e8i1 = IntForm::e8().direct_sum(&one);
        assert_eq!(is_isomorphic(&e8i1, &IntForm::diagonal(9, 0)), Iso::No);
        assert_eq!(is_isomorphic(&IntForm::diagonal(10, 0), &IntForm::diagonal(10, 0)), Iso::Undecided);
    }

    #[test]
    fn exists_unimodular_examples() {
        assert!(exists_unimodular(1, 1, Parity::Odd));
        assert!(!exists_unimodular(6, 8, Parity::Even));
        assert!(exists_unimodular(10, 8, Parity::Even));
        assert!(exists_unimodular(0, 0, Parity::Even));
        assert!(!exists_unimodular(0, 0, Parity::Odd));
        assert!(!exists_unimodular(2, 2, Parity::Even));
        // the construction behind (10, 8, Even)
        let f = IntForm::e8().direct_sum(&IntForm::hyperbolic());
        assert_eq!(IntForm::new(f.gram().to_vec()).unwrap().invariants(), inv(10, 8, Parity::Even));
    }

    #[test]
    fn split_off_examples() {
        let h = IntForm::hyperbolic();
        assert_eq!(split_off(&h.direct_sum(&h), &h), SplitDecision::Yes { complement: inv(2, 0, Parity::Even) });
        assert_eq!(
            split_off(&IntForm::e8(), &h),
            SplitDecision::No(SplitObstruction::SignatureExceedsRank { signature_difference: 8, rank_difference: 6 })
        );
        let x = IntForm::diagonal(1, 1).direct_sum(&h);
        assert_eq!(split_off(&x, &h), SplitDecision::Yes { complement: inv(2, 0, Parity::Odd) });
    }

    #[test]
    fn split_off_definite_uses_catalog() {
        let one = IntForm::diagonal(1, 0);
        let e8i1 = IntForm::e8().direct_sum(&one);
        assert!(split_off(&e8i1, &one).is_yes());
        assert!(split_off(&e8i1, &IntForm::e8()).is_yes());
        assert!(split_off(&e8i1, &IntForm::diagonal(2, 0)).is_no());
        assert!(split_off(&IntForm::diagonal(9, 0), &IntForm::e8()).is_no());
        assert!(matches!(
            split_off(&IntForm::diagonal(11, 0), &IntForm::diagonal(2, 0)),
            SplitDecision::Undecided(_)
        ));
        assert!(split_off(&IntForm::diagonal(11, 0), &IntForm::zero()).is_yes());
    }

    #[test]
    fn mod2_reduction_examples() {
        assert!(!mod2_reduction(&IntForm::diagonal(2, 0)).is_alternating());
        assert!(mod2_reduction(&IntForm::hyperbolic()).is_alternating());
        let e8 = mod2_reduction(&IntForm::e8());
        assert!(e8.is_alternating());
        assert_eq!(e8.rank(), 8);
    }
}
