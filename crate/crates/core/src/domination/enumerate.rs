//! Finite enumerations of homeomorphism and stable classes.

use crate::intforms::{form_classes, FormClass, IntForm, Invariants, Parity};
use crate::manifolds::{connected_sum, spin_ks, ExtensionStatus, ManifoldDescriptor, Pi1, W2Type};

use super::{Decision, DominationError, Engine, Evidence, Rule, HT_THRESHOLD, STABILIZATION};

/// Largest β2 handled by the enumerators (the definite catalog limit).
pub const ENUMERATION_CAP: usize = 9;

/// A form class with a representative Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormRecord {
    pub class: FormClass,
    pub form: IntForm,
}

impl FormRecord {
    fn sort_key(&self) -> (usize, i64, Parity, String) {
        (self.form.rank(), self.form.signature(), self.form.parity(), self.class.to_string())
    }
}

/// All form classes of rank at most `max_rank`, ordered by
/// (rank, signature, parity, class label).
pub fn form_records(max_rank: usize) -> Vec<FormRecord> {
    let mut out: Vec<FormRecord> = (0..=max_rank)
        .flat_map(form_classes)
        .map(|class| FormRecord { form: class.representative().expect("catalog class"), class })
        .collect();
    out.sort_by_key(FormRecord::sort_key);
    out
}

fn ks_values(form: &IntForm) -> Vec<u8> {
    match form.parity() {
        Parity::Odd => vec![0, 1],
        Parity::Even => vec![spin_ks(form.signature())],
    }
}

fn check_bound(bound: usize) -> Result<(), DominationError> {
    if bound > ENUMERATION_CAP {
        Err(DominationError::BoundTooLarge { bound, cap: ENUMERATION_CAP })
    } else {
        Ok(())
    }
}

/// Every simply connected class with `β2 <= bound`: each form class with both
/// values of ks when odd, and the forced value when even.
pub fn enumerate_simply_connected(bound: usize) -> Result<Vec<ManifoldDescriptor>, DominationError> {
    check_bound(bound)?;
    Ok(form_records(bound)
        .into_iter()
        .flat_map(|r| ks_values(&r.form).into_iter().map(move |ks| ManifoldDescriptor::simply_connected(r.form.clone(), ks)))
        .collect())
}

/// A stable class `Y # 3(S²×S²) ≅ N # S¹×S³`, recorded by the invariants of
/// `I_Y` and ks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableClass {
    pub invariants: Invariants,
    pub ks: u8,
    pub representative: ManifoldDescriptor,
}

/// `S¹×S³ # k(S²×S²)`-style π1 = Z manifold without equivariant data.
fn bare_infinite_cyclic() -> ManifoldDescriptor {
    ManifoldDescriptor::InfiniteCyclic {
        int_form: IntForm::zero(),
        lambda_form: None,
        extension_status: ExtensionStatus::Unknown,
        ks: 0,
    }
}

/// The universal π1 = Z dominator for a β2 bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalDominator {
    pub bound: usize,
    /// Simply connected summands, one per class with `β2 <= bound + 6`.
    pub summands: Vec<ManifoldDescriptor>,
    pub descriptor: ManifoldDescriptor,
}

impl UniversalDominator {
    /// Certifies domination of a π1 = Z manifold with `β2 <= bound`: its
    /// stabilization splits as `M # S¹×S³` and `M` is one of the summands.
    pub fn certify(&self, engine: &Engine, x: &ManifoldDescriptor) -> Result<Decision, DominationError> {
        engine.check_valid("x", x)?;
        if x.pi1() != Pi1::Z {
            return Err(DominationError::Pi1Mismatch { x: x.pi1(), y: Pi1::Z });
        }
        if x.form().rank() > self.bound {
            return Ok(Decision::unknown(
                Rule::OutsideClassification,
                format!("beta2 = {} exceeds the dominator bound {}", x.form().rank(), self.bound),
            ));
        }
        let stabilized = x.form().direct_sum(&IntForm::hyperbolic().repeat(STABILIZATION));
        let m = self
            .summands
            .iter()
            .find(|m| m.form().invariants() == stabilized.invariants() && m.ks() == x.ks())
            .expect("every stabilized class is a summand");
        Ok(Decision::yes(
            Rule::ThmUniversalZ,
            vec![
                Evidence::Stabilization { k: STABILIZATION },
                Evidence::Indefiniteness { form: stabilized.clone(), at_least: HT_THRESHOLD },
                Evidence::Summand { m: m.clone(), form: stabilized },
            ],
        ))
    }
}

impl Engine {
    /// Stable classes of π1 = Z targets of `x`.
    pub fn enumerate_stable_targets_z(&self, x: &ManifoldDescriptor) -> Result<Vec<StableClass>, DominationError> {
        if x.pi1() != Pi1::Z {
            return Err(DominationError::Pi1Mismatch { x: x.pi1(), y: Pi1::Z });
        }
        self.check_valid("x", x)?;
        let bound = x.form().rank();
        check_bound(bound)?;
        let h3 = IntForm::hyperbolic().repeat(STABILIZATION);
        let stabilized = x.form().direct_sum(&h3);
        let mut out: Vec<StableClass> = Vec::new();
        for record in form_records(bound) {
            if !crate::intforms::split_off_with(&stabilized, &record.form.direct_sum(&h3), &self.limits).is_yes() {
                continue;
            }
            for ks in ks_values(&record.form) {
                let invariants = record.form.invariants();
                if out.iter().any(|c| c.invariants == invariants && c.ks == ks) {
                    continue;
                }
                let n = ManifoldDescriptor::simply_connected(record.form.clone(), ks);
                let representative = connected_sum(&bare_infinite_cyclic(), &n).expect("simply connected summand");
                out.push(StableClass { invariants, ks, representative });
            }
        }
        Ok(out)
    }

    /// Every valid descriptor with the same finite cyclic π1 and `β2 <= β2(x)`,
    /// paired with the domination decision.
    pub fn enumerate_targets_zn(
        &self,
        x: &ManifoldDescriptor,
    ) -> Result<Vec<(ManifoldDescriptor, Decision)>, DominationError> {
        let Pi1::Zn(n) = x.pi1() else {
            return Err(crate::manifolds::ManifoldError::NotFiniteCyclic.into());
        };
        self.check_valid("x", x)?;
        let bound = x.form().rank();
        check_bound(bound)?;
        let w2s: &[W2Type] = if n % 2 == 0 {
            &[W2Type::TypeI, W2Type::TypeII, W2Type::TypeIII]
        } else {
            &[W2Type::Spin, W2Type::NonSpin]
        };
        let mut keyed = Vec::new();
        for record in form_records(bound) {
            for &w2 in w2s {
                for ks in [0, 1] {
                    let d = ManifoldDescriptor::FiniteCyclic { n, form: record.form.clone(), w2, ks };
                    if d.is_valid(&self.registry) {
                        let key = (record.form.rank(), record.form.signature(), record.form.parity(), w2, ks, record.class.to_string());
                        keyed.push((key, d));
                    }
                }
            }
        }
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        keyed
            .into_iter()
            .map(|(_, d)| {
                let dec = self.dominates(x, &d)?;
                Ok((d, dec))
            })
            .collect()
    }

    /// `S¹×S³ # (every simply connected class with β2 <= bound + 6)`.
    pub fn universal_dominator_z(&self, bound: usize) -> Result<UniversalDominator, DominationError> {
        if bound + STABILIZATION * 2 > ENUMERATION_CAP {
            return Err(DominationError::BoundTooLarge { bound, cap: ENUMERATION_CAP - STABILIZATION * 2 });
        }
        let summands = enumerate_simply_connected(bound + STABILIZATION * 2)?;
        let descriptor = summands
            .iter()
            .fold(bare_infinite_cyclic(), |acc, m| connected_sum(&acc, m).expect("simply connected summand"));
        Ok(UniversalDominator { bound, summands, descriptor })
    }
}

/// Number of form classes of rank at most `bound`.
pub fn count_form_classes(bound: usize) -> usize {
    (0..=bound).map(|r| form_classes(r).len()).sum()
}
