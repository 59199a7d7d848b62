//! Descriptors of closed oriented 4-manifolds with fundamental group 1, Z or Z/n.
//!
//! A descriptor records exactly the data of the homeomorphism classification:
//! the intersection form, the w2-type and the Kirby-Siebenmann invariant (plus,
//! for π1 = Z, an optional equivariant form with its extension status).
//! Connected sums are modeled only when at most one summand has nontrivial π1.

use std::fmt;

use thiserror::Error;

use crate::intforms::{mod2_reduction, IntForm, Parity};
use crate::laurent::{self, AxiomRegistry, HermitianLambdaForm, LambdaMatrix};
use crate::modtwo::ModTwoForm;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum W2Type {
    /// Totally non-spin.
    TypeI,
    /// Spin.
    TypeII,
    /// Almost spin: universal cover spin, manifold not.
    TypeIII,
    Spin,
    NonSpin,
}

impl W2Type {
    pub fn is_spin(self) -> bool {
        matches!(self, W2Type::TypeII | W2Type::Spin)
    }

    fn for_even_order(self) -> bool {
        matches!(self, W2Type::TypeI | W2Type::TypeII | W2Type::TypeIII)
    }
}

impl fmt::Display for W2Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            W2Type::TypeI => "I",
            W2Type::TypeII => "II",
            W2Type::TypeIII => "III",
            W2Type::Spin => "spin",
            W2Type::NonSpin => "nonspin",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtensionStatus {
    /// `p* · extend(b) · p` equals the equivariant form.
    ExtendedWitness { p: LambdaMatrix, b: IntForm },
    /// The equivariant form is a registered non-extended form.
    RegisteredNonExtended(String),
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ManifoldDescriptor {
    SimplyConnected {
        form: IntForm,
        ks: u8,
    },
    InfiniteCyclic {
        int_form: IntForm,
        lambda_form: Option<HermitianLambdaForm>,
        extension_status: ExtensionStatus,
        ks: u8,
    },
    FiniteCyclic {
        n: u64,
        form: IntForm,
        w2: W2Type,
        ks: u8,
    },
}

/// Fundamental group of a descriptor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pi1 {
    Trivial,
    Z,
    Zn(u64),
}

impl fmt::Display for Pi1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pi1::Trivial => f.write_str("1"),
            Pi1::Z => f.write_str("Z"),
            Pi1::Zn(n) => write!(f, "Z/{n}"),
        }
    }
}

/// `σ/8 mod 2`, the Kirby-Siebenmann invariant forced on spin manifolds.
pub fn spin_ks(signature: i64) -> u8 {
    signature.div_euclid(8).rem_euclid(2) as u8
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    KsNotBinary(u8),
    /// Spin (or even simply connected) manifolds have `ks = σ/8 mod 2`.
    SpinKs { expected: u8, found: u8 },
    OrderTooSmall(u64),
    W2FamilyMismatch { n: u64, w2: W2Type },
    /// Even order: even form iff type II or III. Odd order: spin iff even form.
    W2ParityMismatch { w2: W2Type, parity: Parity },
    LambdaRankMismatch { int_rank: usize, lambda_rank: usize },
    LambdaSingular,
    LambdaAugmentationInvalid,
    LambdaAugmentationMismatch,
    StatusWithoutLambda,
    ExtensionWitnessInvalid,
    UnknownAxiom(String),
    AxiomMismatch(String),
}

impl Violation {
    /// Stable identifier of the violated invariant.
    pub fn name(&self) -> &'static str {
        match self {
            Violation::KsNotBinary(_) => "ks-binary",
            Violation::SpinKs { .. } => "spin-ks",
            Violation::OrderTooSmall(_) => "order-at-least-2",
            Violation::W2FamilyMismatch { .. } => "w2-family",
            Violation::W2ParityMismatch { .. } => "w2-parity",
            Violation::LambdaRankMismatch { .. } => "lambda-rank",
            Violation::LambdaSingular => "lambda-nonsingular",
            Violation::LambdaAugmentationInvalid => "lambda-augmentation-unimodular",
            Violation::LambdaAugmentationMismatch => "lambda-augmentation-invariants",
            Violation::StatusWithoutLambda => "extension-status-needs-lambda",
            Violation::ExtensionWitnessInvalid => "extension-witness",
            Violation::UnknownAxiom(_) => "axiom-registered",
            Violation::AxiomMismatch(_) => "axiom-form",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::KsNotBinary(k) => write!(f, "ks must be 0 or 1, got {k}"),
            Violation::SpinKs { expected, found } => {
                write!(f, "spin manifold must have ks = signature/8 mod 2 = {expected}, got {found}")
            }
            Violation::OrderTooSmall(n) => write!(f, "cyclic order must be at least 2, got {n}"),
            Violation::W2FamilyMismatch { n, w2 } => write!(f, "w2-type {w2} is not defined for order {n}"),
            Violation::W2ParityMismatch { w2, parity } => write!(f, "w2-type {w2} is incompatible with an {parity} form"),
            Violation::LambdaRankMismatch { int_rank, lambda_rank } => {
                write!(f, "equivariant form has rank {lambda_rank}, integral form has rank {int_rank}")
            }
            Violation::LambdaSingular => f.write_str("equivariant form is singular over the Laurent ring"),
            Violation::LambdaAugmentationInvalid => f.write_str("augmentation of the equivariant form is not unimodular"),
            Violation::LambdaAugmentationMismatch => {
                f.write_str("augmentation of the equivariant form has different rank, signature or parity")
            }
            Violation::StatusWithoutLambda => f.write_str("extension status given without an equivariant form"),
            Violation::ExtensionWitnessInvalid => f.write_str("extension witness does not verify"),
            Violation::UnknownAxiom(id) => write!(f, "no registered axiom {id:?}"),
            Violation::AxiomMismatch(id) => write!(f, "equivariant form differs from registered axiom {id:?}"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ManifoldError {
    #[error("connected sums of two manifolds with nontrivial fundamental group are not modeled")]
    UnsupportedPi1Combination,
    #[error("operation requires a finite cyclic fundamental group")]
    NotFiniteCyclic,
    #[error("invalid descriptor: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    InvalidDescriptor(Vec<Violation>),
}

impl ManifoldDescriptor {
    pub fn s4() -> Self {
        Self::simply_connected(IntForm::zero(), 0)
    }

    pub fn s1_x_s3() -> Self {
        ManifoldDescriptor::InfiniteCyclic {
            int_form: IntForm::zero(),
            lambda_form: Some(laurent::extend_from_integer(&IntForm::zero())),
            extension_status: ExtensionStatus::ExtendedWitness { p: LambdaMatrix::identity(0), b: IntForm::zero() },
            ks: 0,
        }
    }

    pub fn s2_x_s2() -> Self {
        Self::simply_connected(IntForm::hyperbolic(), 0)
    }

    pub fn cp2() -> Self {
        Self::simply_connected(IntForm::diagonal(1, 0), 0)
    }

    pub fn cp2_bar() -> Self {
        Self::simply_connected(IntForm::diagonal(0, 1), 0)
    }

    /// The topological E8 manifold (ks = 1).
    pub fn e8_manifold() -> Self {
        Self::simply_connected(IntForm::e8(), 1)
    }

    pub fn simply_connected(form: IntForm, ks: u8) -> Self {
        ManifoldDescriptor::SimplyConnected { form, ks }
    }

    pub fn pi1(&self) -> Pi1 {
        match self {
            ManifoldDescriptor::SimplyConnected { .. } => Pi1::Trivial,
            ManifoldDescriptor::InfiniteCyclic { .. } => Pi1::Z,
            ManifoldDescriptor::FiniteCyclic { n, .. } => Pi1::Zn(*n),
        }
    }

    /// The integral intersection form.
    pub fn form(&self) -> &IntForm {
        match self {
            ManifoldDescriptor::SimplyConnected { form, .. } | ManifoldDescriptor::FiniteCyclic { form, .. } => form,
            ManifoldDescriptor::InfiniteCyclic { int_form, .. } => int_form,
        }
    }

    pub fn ks(&self) -> u8 {
        match self {
            ManifoldDescriptor::SimplyConnected { ks, .. }
            | ManifoldDescriptor::InfiniteCyclic { ks, .. }
            | ManifoldDescriptor::FiniteCyclic { ks, .. } => *ks,
        }
    }

    pub fn w2(&self) -> Option<W2Type> {
        match self {
            ManifoldDescriptor::FiniteCyclic { w2, .. } => Some(*w2),
            _ => None,
        }
    }

    pub fn betti(&self) -> [usize; 5] {
        let b1 = usize::from(self.pi1() == Pi1::Z);
        [1, b1, self.form().rank(), b1, 1]
    }

    /// Euler characteristic `2 - 2β1 + β2`.
    pub fn chi(&self) -> i64 {
        let [_, b1, b2, _, _] = self.betti();
        2 - 2 * b1 as i64 + b2 as i64
    }

    pub fn signature(&self) -> i64 {
        self.form().signature()
    }

    pub fn validate(&self, registry: &AxiomRegistry) -> Vec<Violation> {
        validate(self, registry)
    }

    pub fn is_valid(&self, registry: &AxiomRegistry) -> bool {
        validate(self, registry).is_empty()
    }
}

pub fn validate(d: &ManifoldDescriptor, registry: &AxiomRegistry) -> Vec<Violation> {
    let mut out = Vec::new();
    let ks = d.ks();
    if ks > 1 {
        out.push(Violation::KsNotBinary(ks));
    }
    let form = d.form();
    let spin_check = |out: &mut Vec<Violation>| {
        let expected = spin_ks(form.signature());
        if ks != expected {
            out.push(Violation::SpinKs { expected, found: ks });
        }
    };
    match d {
        ManifoldDescriptor::SimplyConnected { .. } => {
            if form.parity() == Parity::Even {
                spin_check(&mut out);
            }
        }
        ManifoldDescriptor::InfiniteCyclic { lambda_form, extension_status, .. } => {
            // H1 = Z has no 2-torsion, so an even form means spin
            if form.parity() == Parity::Even {
                spin_check(&mut out);
            }
            validate_lambda(form, lambda_form.as_ref(), extension_status, registry, &mut out);
        }
        ManifoldDescriptor::FiniteCyclic { n, w2, .. } => {
            if *n < 2 {
                out.push(Violation::OrderTooSmall(*n));
            }
            let even_order = n % 2 == 0;
            if w2.for_even_order() != even_order {
                out.push(Violation::W2FamilyMismatch { n: *n, w2: *w2 });
            } else {
                let even_form = form.parity() == Parity::Even;
                let consistent = if even_order {
                    even_form == matches!(w2, W2Type::TypeII | W2Type::TypeIII)
                } else {
                    even_form == (*w2 == W2Type::Spin)
                };
                if !consistent {
                    out.push(Violation::W2ParityMismatch { w2: *w2, parity: form.parity() });
                }
                if w2.is_spin() {
                    spin_check(&mut out);
                }
            }
        }
    }
    out
}

fn validate_lambda(
    int_form: &IntForm,
    lambda: Option<&HermitianLambdaForm>,
    status: &ExtensionStatus,
    registry: &AxiomRegistry,
    out: &mut Vec<Violation>,
) {
    let Some(lambda) = lambda else {
        if *status != ExtensionStatus::Unknown {
            out.push(Violation::StatusWithoutLambda);
        }
        return;
    };
    if lambda.rank() != int_form.rank() {
        out.push(Violation::LambdaRankMismatch { int_rank: int_form.rank(), lambda_rank: lambda.rank() });
        return;
    }
    if !lambda.is_nonsingular() {
        out.push(Violation::LambdaSingular);
    }
    match lambda.augment() {
        Ok(aug) if aug.invariants() == int_form.invariants() => {}
        Ok(_) => out.push(Violation::LambdaAugmentationMismatch),
        Err(_) => out.push(Violation::LambdaAugmentationInvalid),
    }
    match status {
        ExtensionStatus::ExtendedWitness { p, b } => {
            if laurent::verify_extension_witness(lambda, p, b) != Ok(true) {
                out.push(Violation::ExtensionWitnessInvalid);
            }
        }
        ExtensionStatus::RegisteredNonExtended(id) => match registry.get(id) {
            None => out.push(Violation::UnknownAxiom(id.clone())),
            Some(axiom) if axiom != lambda => out.push(Violation::AxiomMismatch(id.clone())),
            Some(_) => {}
        },
        ExtensionStatus::Unknown => {}
    }
}

/// Connected sum. The summand with nontrivial π1 (if any) contributes the
/// leading block of the form; a simply connected summand is appended.
pub fn connected_sum(d1: &ManifoldDescriptor, d2: &ManifoldDescriptor) -> Result<ManifoldDescriptor, ManifoldError> {
    use ManifoldDescriptor::*;
    let (big, sc_form, sc_ks) = match (d1, d2) {
        (SimplyConnected { form: f1, ks: k1 }, SimplyConnected { form: f2, ks: k2 }) => {
            return Ok(SimplyConnected { form: f1.direct_sum(f2), ks: (k1 + k2) % 2 });
        }
        (other, SimplyConnected { form, ks }) | (SimplyConnected { form, ks }, other) => (other, form, *ks),
        _ => return Err(ManifoldError::UnsupportedPi1Combination),
    };
    Ok(match big {
        FiniteCyclic { n, form, w2, ks } => {
            let sc_even = sc_form.parity() == Parity::Even;
            let w2 = match (*w2, sc_even) {
                (w, true) => w,
                (W2Type::TypeII | W2Type::TypeIII | W2Type::TypeI, false) => W2Type::TypeI,
                (W2Type::Spin | W2Type::NonSpin, false) => W2Type::NonSpin,
            };
            FiniteCyclic { n: *n, form: form.direct_sum(sc_form), w2, ks: (ks + sc_ks) % 2 }
        }
        InfiniteCyclic { int_form, lambda_form, extension_status, ks } => {
            let lambda_form = lambda_form.as_ref().map(|l| l.direct_sum(&laurent::extend_from_integer(sc_form)));
            let extension_status = match extension_status {
                _ if sc_form.rank() == 0 => extension_status.clone(),
                ExtensionStatus::ExtendedWitness { p, b } => ExtensionStatus::ExtendedWitness {
                    p: laurent::block_sum(p, &LambdaMatrix::identity(sc_form.rank())),
                    b: b.direct_sum(sc_form),
                },
                _ => ExtensionStatus::Unknown,
            };
            InfiniteCyclic { int_form: int_form.direct_sum(sc_form), lambda_form, extension_status, ks: (ks + sc_ks) % 2 }
        }
        SimplyConnected { .. } => unreachable!("handled above"),
    })
}

/// `d # k(S²×S²)`.
pub fn stabilize(d: &ManifoldDescriptor, k: usize) -> ManifoldDescriptor {
    let mut out = d.clone();
    for _ in 0..k {
        out = connected_sum(&out, &ManifoldDescriptor::s2_x_s2()).expect("simply connected summand");
    }
    out
}

/// The rational homology 4-spheres with finite cyclic π1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SigmaLabel {
    SigmaStar(u64),
    SigmaZero(u64),
    SigmaOne(u64, u8),
}

impl SigmaLabel {
    pub fn descriptor(&self) -> ManifoldDescriptor {
        let (n, w2, ks) = match *self {
            SigmaLabel::SigmaStar(n) => (n, W2Type::Spin, 0),
            SigmaLabel::SigmaZero(n) => (n, W2Type::TypeII, 0),
            SigmaLabel::SigmaOne(n, i) => (n, W2Type::TypeIII, i),
        };
        ManifoldDescriptor::FiniteCyclic { n, form: IntForm::zero(), w2, ks }
    }

    /// The other member of a homotopy-equivalent, non-homeomorphic pair.
    pub fn homotopy_partner(&self) -> Option<SigmaLabel> {
        match *self {
            SigmaLabel::SigmaOne(n, i) => Some(SigmaLabel::SigmaOne(n, 1 - i)),
            _ => None,
        }
    }

    /// GF(2) block contributed to the mod-2 intersection form, for even order:
    /// the alternating plane for Σ0, the rank-2 identity for Σ1,i.
    pub fn z2_block(&self) -> ModTwoForm {
        match self {
            SigmaLabel::SigmaStar(_) => ModTwoForm::zero(),
            SigmaLabel::SigmaZero(_) => ModTwoForm::hyperbolic(),
            SigmaLabel::SigmaOne(..) => ModTwoForm::identity(2),
        }
    }
}

impl fmt::Display for SigmaLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SigmaLabel::SigmaStar(n) => write!(f, "SigmaStar({n})"),
            SigmaLabel::SigmaZero(n) => write!(f, "Sigma0({n})"),
            SigmaLabel::SigmaOne(n, i) => write!(f, "Sigma1({n},{i})"),
        }
    }
}

pub fn rhs_catalog(n: u64) -> Vec<SigmaLabel> {
    if n % 2 == 1 {
        vec![SigmaLabel::SigmaStar(n)]
    } else {
        vec![SigmaLabel::SigmaZero(n), SigmaLabel::SigmaOne(n, 0), SigmaLabel::SigmaOne(n, 1)]
    }
}

/// `X = Σ # M` with `M` simply connected and `I_M = I_X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub sigma: SigmaLabel,
    pub m: ManifoldDescriptor,
}

impl Decomposition {
    pub fn reassemble(&self) -> ManifoldDescriptor {
        connected_sum(&self.sigma.descriptor(), &self.m).expect("Σ # simply connected")
    }
}

/// Primary decomposition plus, for type I, the two alternates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decompositions {
    pub primary: Decomposition,
    pub alternates: Vec<Decomposition>,
}

impl Decompositions {
    pub fn all(&self) -> impl Iterator<Item = &Decomposition> {
        std::iter::once(&self.primary).chain(&self.alternates)
    }
}

pub fn decompose(d: &ManifoldDescriptor, registry: &AxiomRegistry) -> Result<Decompositions, ManifoldError> {
    let ManifoldDescriptor::FiniteCyclic { n, form, w2, ks } = d else {
        return Err(ManifoldError::NotFiniteCyclic);
    };
    let violations = validate(d, registry);
    if !violations.is_empty() {
        return Err(ManifoldError::InvalidDescriptor(violations));
    }
    let (n, ks) = (*n, *ks);
    let spin = spin_ks(form.signature());
    let part = |sigma, m_ks| Decomposition { sigma, m: ManifoldDescriptor::simply_connected(form.clone(), m_ks) };
    let (primary, alternates) = match w2 {
        W2Type::Spin | W2Type::NonSpin => (part(SigmaLabel::SigmaStar(n), ks), vec![]),
        W2Type::TypeII => (part(SigmaLabel::SigmaZero(n), spin), vec![]),
        W2Type::TypeIII => (part(SigmaLabel::SigmaOne(n, (ks + spin) % 2), spin), vec![]),
        W2Type::TypeI => (
            part(SigmaLabel::SigmaZero(n), ks),
            vec![part(SigmaLabel::SigmaOne(n, 0), ks), part(SigmaLabel::SigmaOne(n, 1), 1 - ks)],
        ),
    };
    Ok(Decompositions { primary, alternates })
}

/// The mod-2 intersection form, with a flag when it relies on the order-2
/// models of the Σ-block for a larger even order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Z2Form {
    pub form: ModTwoForm,
    pub extrapolated: bool,
}

pub fn z2_form(d: &ManifoldDescriptor, registry: &AxiomRegistry) -> Result<Z2Form, ManifoldError> {
    let dec = decompose(d, registry)?;
    let ManifoldDescriptor::FiniteCyclic { n, form, .. } = d else {
        return Err(ManifoldError::NotFiniteCyclic);
    };
    let reduced = mod2_reduction(form);
    if n % 2 == 1 {
        return Ok(Z2Form { form: reduced, extrapolated: false });
    }
    Ok(Z2Form { form: reduced.direct_sum(&dec.primary.sigma.z2_block()), extrapolated: *n > 2 })
}

/// π1 = Z fixture pair: equal integral forms, one equivariant form extended
/// from the integers and one registered as non-extended.
pub fn non_extension_pair() -> (ManifoldDescriptor, ManifoldDescriptor) {
    let a1 = IntForm::a1();
    let x = ManifoldDescriptor::InfiniteCyclic {
        int_form: a1.clone(),
        lambda_form: Some(laurent::extend_from_integer(&a1)),
        extension_status: ExtensionStatus::ExtendedWitness { p: LambdaMatrix::identity(4), b: a1.clone() },
        ks: 0,
    };
    let y = ManifoldDescriptor::InfiniteCyclic {
        int_form: a1,
        lambda_form: Some(laurent::ht_matrix_a()),
        extension_status: ExtensionStatus::RegisteredNonExtended(laurent::HT_AXIOM_ID.to_string()),
        ks: 0,
    };
    (x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modtwo::ModTwoClass;

    fn reg() -> AxiomRegistry {
        AxiomRegistry::builtin()
    }

    fn fc(n: u64, form: IntForm, w2: W2Type, ks: u8) -> ManifoldDescriptor {
        ManifoldDescriptor::FiniteCyclic { n, form, w2, ks }
    }

    #[test]
    fn validate_examples() {
        assert!(ManifoldDescriptor::e8_manifold().is_valid(&reg()));
        let bad = fc(2, IntForm::diagonal(1, 0), W2Type::TypeII, 0);
        assert_eq!(
            validate(&bad, &reg()),
            vec![Violation::W2ParityMismatch { w2: W2Type::TypeII, parity: Parity::Odd }]
        );
        let h1 = ManifoldDescriptor::simply_connected(IntForm::hyperbolic(), 1);
        assert_eq!(validate(&h1, &reg()), vec![Violation::SpinKs { expected: 0, found: 1 }]);
    }

    #[test]
    fn validate_lambda_data() {
        let (x, y) = non_extension_pair();
        assert!(x.is_valid(&reg()));
        assert!(y.is_valid(&reg()));
        assert_eq!(validate(&y, &AxiomRegistry::empty()), vec![Violation::UnknownAxiom("ht-A".into())]);
        let ManifoldDescriptor::InfiniteCyclic { int_form, lambda_form, .. } = y else { unreachable!() };
        let forged = ManifoldDescriptor::InfiniteCyclic {
            int_form: int_form.clone(),
            lambda_form: lambda_form.clone(),
            extension_status: ExtensionStatus::ExtendedWitness { p: LambdaMatrix::identity(4), b: int_form },
            ks: 0,
        };
        assert_eq!(validate(&forged, &reg()), vec![Violation::ExtensionWitnessInvalid]);
    }

    #[test]
    fn betti_and_chi() {
        assert_eq!(ManifoldDescriptor::s1_x_s3().chi(), 0);
        assert_eq!(SigmaLabel::SigmaZero(2).descriptor().chi(), 2);
        assert_eq!(ManifoldDescriptor::s2_x_s2().chi(), 4);
    }

    #[test]
    fn connected_sum_examples() {
        let x = connected_sum(&SigmaLabel::SigmaZero(2).descriptor(), &ManifoldDescriptor::s2_x_s2()).unwrap();
        assert_eq!(x, fc(2, IntForm::hyperbolic(), W2Type::TypeII, 0));
        let odd = ManifoldDescriptor::simply_connected(IntForm::diagonal(1, 1), 0);
        let y = connected_sum(&SigmaLabel::SigmaOne(2, 0).descriptor(), &odd).unwrap();
        assert_eq!(y.w2(), Some(W2Type::TypeI));
        assert_eq!(connected_sum(&y, &ManifoldDescriptor::s4()).unwrap(), y);
        assert_eq!(
            connected_sum(&ManifoldDescriptor::s1_x_s3(), &SigmaLabel::SigmaStar(3).descriptor()),
            Err(ManifoldError::UnsupportedPi1Combination)
        );
    }

    #[test]
    fn sums_with_infinite_cyclic_stay_valid() {
        let x = connected_sum(&ManifoldDescriptor::s1_x_s3(), &ManifoldDescriptor::cp2()).unwrap();
        assert!(x.is_valid(&reg()));
        let (_, y) = non_extension_pair();
        let ys = stabilize(&y, 1);
        assert!(ys.is_valid(&reg()));
        assert!(matches!(ys, ManifoldDescriptor::InfiniteCyclic { extension_status: ExtensionStatus::Unknown, .. }));
    }

    #[test]
    fn stabilize_examples() {
        let s = stabilize(&ManifoldDescriptor::s1_x_s3(), 3);
        assert_eq!(s.form().indefiniteness(), 6);
        assert_eq!(stabilize(&s, 0), s);
    }

    #[test]
    fn catalog() {
        assert_eq!(rhs_catalog(3), vec![SigmaLabel::SigmaStar(3)]);
        let even = rhs_catalog(2);
        assert_eq!(even.len(), 3);
        for label in even.iter().chain(&rhs_catalog(5)) {
            let d = label.descriptor();
            assert!(d.is_valid(&reg()));
            assert_eq!(d.chi(), 2);
        }
        assert_eq!(even[1].homotopy_partner(), Some(even[2]));
    }

    #[test]
    fn z2_forms_of_sigma_models() {
        let z = z2_form(&SigmaLabel::SigmaZero(2).descriptor(), &reg()).unwrap();
        assert_eq!(z.form.class(), ModTwoClass::Alternating(2));
        assert!(!z.extrapolated);
        let one = z2_form(&SigmaLabel::SigmaOne(2, 0).descriptor(), &reg()).unwrap();
        assert_eq!(one.form, ModTwoForm::identity(2));
        let odd = z2_form(&fc(3, IntForm::diagonal(1, 0), W2Type::NonSpin, 0), &reg()).unwrap();
        assert_eq!(odd.form, ModTwoForm::identity(1));
        assert!(z2_form(&SigmaLabel::SigmaZero(4).descriptor(), &reg()).unwrap().extrapolated);
    }

    #[test]
    fn decompose_examples() {
        let d = decompose(&fc(2, IntForm::hyperbolic(), W2Type::TypeII, 0), &reg()).unwrap();
        assert_eq!(d.primary.sigma, SigmaLabel::SigmaZero(2));
        assert_eq!(d.primary.m, ManifoldDescriptor::s2_x_s2());
        let d = decompose(&fc(2, IntForm::zero(), W2Type::TypeIII, 1), &reg()).unwrap();
        assert_eq!(d.primary.sigma, SigmaLabel::SigmaOne(2, 1));
        assert_eq!(d.primary.m, ManifoldDescriptor::s4());
        let x = fc(2, IntForm::diagonal(1, 0), W2Type::TypeI, 0);
        let d = decompose(&x, &reg()).unwrap();
        assert_eq!(d.all().count(), 3);
        for part in d.all() {
            assert_eq!(part.reassemble(), x);
        }
    }
}
