//! Degree-one map (1-domination) decisions between descriptors.
//!
//! Every answer is a [`Decision`]: `Yes` with a certificate whose evidence can
//! be re-checked by the other modules, `No` with a named necessary condition
//! that fails, or `Unknown` when the question is open or out of reach.

mod decision;
mod enumerate;

use std::fmt;

use thiserror::Error;

use crate::intforms::{split_off_with, IntForm, SearchLimits, SplitDecision};
use crate::laurent::{self, AxiomRegistry};
use crate::manifolds::{
    decompose, stabilize, validate, ExtensionStatus, ManifoldDescriptor, ManifoldError, Pi1, Violation, W2Type,
};
use crate::modtwo::split_off_z2;

pub use decision::{Certificate, Decision, Evidence, Obstruction, Rule, Unresolved};
pub use enumerate::{
    count_form_classes, enumerate_simply_connected, form_records, FormRecord, StableClass, UniversalDominator,
    ENUMERATION_CAP,
};

/// `β2 - |σ|` threshold above which a π1 = Z manifold splits off `S¹×S³`.
pub const HT_THRESHOLD: usize = 6;

/// Number of `S²×S²` summands used for stabilization.
pub const STABILIZATION: usize = 3;

/// Label attached to certificates that rely on the order-2 Σ-block models.
pub const Z2_EXTRAPOLATED_LABEL: &str = "z2-sigma-block=extrapolated";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DominationError {
    #[error("invalid descriptor {role}: {}", .violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    InvalidDescriptor { role: &'static str, violations: Vec<Violation> },
    #[error("fundamental groups do not match ({x} vs {y})")]
    Pi1Mismatch { x: Pi1, y: Pi1 },
    #[error("bound {bound} exceeds the cap {cap}")]
    BoundTooLarge { bound: usize, cap: usize },
    #[error("group is not finite abelian")]
    NotFiniteAbelian,
    #[error(transparent)]
    Manifold(#[from] ManifoldError),
}

/// Group data used by the Euler-characteristic calculators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupDescriptor {
    Trivial,
    InfiniteCyclic,
    FiniteCyclic(u64),
    /// Invariant factors `d1 | d2 | ...`, at least two of them, each `>= 2`.
    FiniteAbelian(Vec<u64>),
    /// Any group, known only through `β1`.
    General { beta1: u64 },
}

impl GroupDescriptor {
    /// Normalizes invariant factors: none is trivial, one is cyclic.
    pub fn finite_abelian(factors: Vec<u64>) -> Result<Self, String> {
        if factors.iter().any(|&d| d < 2) {
            return Err("invariant factors must be at least 2".into());
        }
        if factors.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err("invariant factors must divide one another in order".into());
        }
        Ok(match factors.as_slice() {
            [] => GroupDescriptor::Trivial,
            [n] => GroupDescriptor::FiniteCyclic(*n),
            _ => GroupDescriptor::FiniteAbelian(factors),
        })
    }

    pub fn of(pi1: Pi1) -> Self {
        match pi1 {
            Pi1::Trivial => GroupDescriptor::Trivial,
            Pi1::Z => GroupDescriptor::InfiniteCyclic,
            Pi1::Zn(n) => GroupDescriptor::FiniteCyclic(n),
        }
    }

    pub fn beta1(&self) -> u64 {
        match self {
            GroupDescriptor::InfiniteCyclic => 1,
            GroupDescriptor::General { beta1 } => *beta1,
            _ => 0,
        }
    }

    pub fn is_finite_abelian(&self) -> bool {
        matches!(self, GroupDescriptor::Trivial | GroupDescriptor::FiniteCyclic(_) | GroupDescriptor::FiniteAbelian(_))
    }
}

/// Minimal Euler characteristic of a closed orientable 4-manifold with the group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chi4 {
    Value(i64),
    LowerBound(i64),
}

impl fmt::Display for Chi4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Chi4::Value(v) => write!(f, "{v}"),
            Chi4::LowerBound(v) => write!(f, ">= {v}"),
        }
    }
}

pub fn chi4(g: &GroupDescriptor) -> Chi4 {
    match g {
        GroupDescriptor::Trivial | GroupDescriptor::FiniteCyclic(_) => Chi4::Value(2),
        GroupDescriptor::InfiniteCyclic => Chi4::Value(0),
        GroupDescriptor::FiniteAbelian(_) => Chi4::LowerBound(2),
        GroupDescriptor::General { beta1 } => Chi4::LowerBound(2 - 2 * *beta1 as i64),
    }
}

/// Whether a rational homology 4-sphere can have this group.
pub fn rhs_realizable(g: &GroupDescriptor, chi4_known: i64) -> bool {
    g.beta1() == 0 && g.is_finite_abelian() && chi4_known == 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EulerCheck {
    Consistent,
    Violation { chi_x: i64, chi_y: i64 },
}

pub fn euler_check(x: &ManifoldDescriptor, y: &ManifoldDescriptor) -> Result<EulerCheck, DominationError> {
    if x.pi1() != y.pi1() {
        return Err(DominationError::Pi1Mismatch { x: x.pi1(), y: y.pi1() });
    }
    let (chi_x, chi_y) = (x.chi(), y.chi());
    Ok(if chi_x < chi_y { EulerCheck::Violation { chi_x, chi_y } } else { EulerCheck::Consistent })
}

/// Emitted when a degree-one map between manifolds of equal Euler
/// characteristic and equal π1 forces a homotopy equivalence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigidityReport {
    pub chi: i64,
    pub statement: &'static str,
}

pub fn rigidity(x: &ManifoldDescriptor, y: &ManifoldDescriptor, dec: &Decision) -> Option<RigidityReport> {
    (dec.is_yes() && x.pi1() == y.pi1() && x.chi() == y.chi())
        .then(|| RigidityReport { chi: x.chi(), statement: "homotopy equivalent" })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AbelianTargets {
    /// Targets with this group may exist, with `chi_min <= χ <= chi_max`.
    Possible { chi_min: i64, chi_max: i64 },
    Excluded(String),
}

/// Targets with finite abelian π1 must have π1 inside `Tor H1(x)`.
pub fn finite_abelian_targets_bound(x: &ManifoldDescriptor, g: &GroupDescriptor) -> Result<AbelianTargets, DominationError> {
    if !g.is_finite_abelian() {
        return Err(DominationError::NotFiniteAbelian);
    }
    let torsion = match x.pi1() {
        Pi1::Zn(n) => n,
        Pi1::Trivial | Pi1::Z => 1,
    };
    let embeds = match g {
        GroupDescriptor::Trivial => true,
        GroupDescriptor::FiniteCyclic(m) => torsion % m == 0,
        _ => false,
    };
    if !embeds {
        return Ok(AbelianTargets::Excluded(format!("group does not embed in Tor H1 = Z/{torsion}")));
    }
    Ok(AbelianTargets::Possible { chi_min: 2, chi_max: 2 + x.form().rank() as i64 })
}

/// Whether a surjection `π1(x) → π1(y)` exists.
fn pi1_surjects(x: Pi1, y: Pi1) -> bool {
    match (x, y) {
        (_, Pi1::Trivial) => true,
        (Pi1::Z, Pi1::Z | Pi1::Zn(_)) => true,
        (Pi1::Zn(n), Pi1::Zn(m)) => n % m == 0,
        _ => false,
    }
}

/// Decision engine with its configuration. The default uses the built-in
/// registry with Z2 extrapolation off.
#[derive(Debug, Clone, Default)]
pub struct Engine {
    pub registry: AxiomRegistry,
    pub limits: SearchLimits,
    /// Use the order-2 Σ-block models for every even order.
    pub z2_extrapolation: bool,
}

impl Engine {
    pub fn new(registry: AxiomRegistry, limits: SearchLimits, z2_extrapolation: bool) -> Self {
        Engine { registry, limits, z2_extrapolation }
    }

    pub fn with_z2_extrapolation(mut self, on: bool) -> Self {
        self.z2_extrapolation = on;
        self
    }

    fn check_valid(&self, role: &'static str, d: &ManifoldDescriptor) -> Result<(), DominationError> {
        let violations = validate(d, &self.registry);
        if violations.is_empty() {
            Ok(())
        } else {
            Err(DominationError::InvalidDescriptor { role, violations })
        }
    }

    /// Integral splitting `I_y ⊕ L ≅ I_x`, as evidence or a terminal decision.
    fn split(&self, x: &IntForm, y: &IntForm) -> Result<Evidence, Decision> {
        match split_off_with(x, y, &self.limits) {
            SplitDecision::Yes { complement } => Ok(Evidence::Split { x: x.clone(), y: y.clone(), complement }),
            SplitDecision::No(reason) => Err(Decision::no(
                Rule::LemmaSplitting,
                format!("intersection form of the target is not an orthogonal summand: {reason}"),
                &[("rank_x", x.rank() as i64), ("rank_y", y.rank() as i64), ("sigma_x", x.signature()), ("sigma_y", y.signature())],
            )),
            SplitDecision::Undecided(reason) => Err(Decision::unknown(Rule::DefiniteRankCap, reason.to_string())),
        }
    }

    pub fn dominates(&self, x: &ManifoldDescriptor, y: &ManifoldDescriptor) -> Result<Decision, DominationError> {
        self.check_valid("x", x)?;
        self.check_valid("y", y)?;
        if x == y {
            return Ok(Decision::yes(Rule::Homeomorphic, vec![Evidence::Homeomorphic { x: x.clone(), y: y.clone() }]));
        }
        if x.pi1() == y.pi1() {
            if let EulerCheck::Violation { chi_x, chi_y } = euler_check(x, y)? {
                return Ok(Decision::no(
                    Rule::ThmEuler,
                    "Euler characteristic of the source is smaller than that of the target",
                    &[("chi_x", chi_x), ("chi_y", chi_y)],
                ));
            }
        }
        Ok(match (x.pi1(), y.pi1()) {
            (Pi1::Trivial, Pi1::Trivial) => self.simply_connected(x, y),
            (Pi1::Z, Pi1::Z) => self.infinite_cyclic(x, y),
            (Pi1::Zn(a), Pi1::Zn(b)) if a == b => self.finite_cyclic(x, y)?,
            (Pi1::Zn(_), Pi1::Trivial) => self.finite_to_simply_connected(x, y)?,
            (Pi1::Z, Pi1::Trivial) if x.form().indefiniteness() >= HT_THRESHOLD => self.infinite_to_simply_connected(x, y),
            _ => self.mixed(x, y),
        })
    }

    fn simply_connected(&self, x: &ManifoldDescriptor, y: &ManifoldDescriptor) -> Decision {
        match self.split(x.form(), y.form()) {
            Ok(ev) => Decision::yes(Rule::PropDw, vec![ev]),
            Err(d) => d,
        }
    }

    fn infinite_cyclic(&self, x: &ManifoldDescriptor, y: &ManifoldDescriptor) -> Decision {
        let split = match self.split(x.form(), y.form()) {
            Ok(ev) => ev,
            Err(d) => return d,
        };
        if y.form().rank() == 0 {
            return Decision::yes(Rule::PropQStar, vec![Evidence::RankZeroTarget { y: y.clone() }]);
        }
        if let (
            ManifoldDescriptor::InfiniteCyclic { lambda_form: Some(lx), extension_status: ExtensionStatus::ExtendedWitness { p, b }, .. },
            ManifoldDescriptor::InfiniteCyclic { extension_status: ExtensionStatus::RegisteredNonExtended(id), .. },
        ) = (x, y)
        {
            let witness_ok = laurent::verify_extension_witness(lx, p, b) == Ok(true);
            if witness_ok && x.form().rank() == y.form().rank() && self.registry.get(id).is_some() {
                return Decision::no(
                    Rule::ThmNon1Dom,
                    format!(
                        "equal second Betti numbers force an isometry of equivariant forms, \
                         but the source is extended from Z and the target is registered as {id:?}"
                    ),
                    &[("beta2", x.form().rank() as i64)],
                );
            }
        }
        let (ix, iy) = (x.form().indefiniteness(), y.form().indefiniteness());
        if ix >= HT_THRESHOLD && iy >= HT_THRESHOLD {
            return Decision::yes(
                Rule::ThmHtDecomp,
                vec![
                    split,
                    Evidence::Indefiniteness { form: x.form().clone(), at_least: HT_THRESHOLD },
                    Evidence::Indefiniteness { form: y.form().clone(), at_least: HT_THRESHOLD },
                ],
            );
        }
        Decision::unknown(
            Rule::Pi1ZSufficiencyOpen,
            "integral splitting holds but its sufficiency is open for pi1 = Z; \
             the stabilized pair is decided by stably-dominates",
        )
    }

    fn finite_cyclic(&self, x: &ManifoldDescriptor, y: &ManifoldDescriptor) -> Result<Decision, DominationError> {
        let (ManifoldDescriptor::FiniteCyclic { n, w2: wx, .. }, ManifoldDescriptor::FiniteCyclic { w2: wy, .. }) = (x, y) else {
            unreachable!("dispatched on finite cyclic pair");
        };
        let n = *n;
        let split = match self.split(x.form(), y.form()) {
            Ok(ev) => ev,
            Err(d) => return Ok(d),
        };
        let spin_ok = match wx {
            W2Type::TypeII | W2Type::Spin => matches!(wy, W2Type::TypeII | W2Type::Spin),
            W2Type::TypeIII => matches!(wy, W2Type::TypeII | W2Type::TypeIII),
            _ => true,
        };
        if !spin_ok {
            return Ok(Decision::no(
                Rule::LemmaSpin,
                format!("a type {wx} manifold cannot 1-dominate a type {wy} manifold with the same pi1"),
                &[("n", n as i64)],
            ));
        }
        let even = n % 2 == 0;
        let open_cell = even && *wx == W2Type::TypeIII && *wy == W2Type::TypeII;
        if open_cell && n > 2 && !self.z2_extrapolation {
            return Ok(Decision::unknown(
                Rule::Z2ExtrapolationDisabled,
                format!("the mod-2 condition for order {n} needs the extrapolated sigma-block models"),
            ));
        }
        let zx = crate::manifolds::z2_form(x, &self.registry)?;
        let zy = crate::manifolds::z2_form(y, &self.registry)?;
        if !split_off_z2(&zx.form, &zy.form).is_yes() {
            return Ok(Decision::no(
                Rule::LemmaSplittingZ2,
                "mod-2 intersection form of the target is not an orthogonal summand",
                &[("rank_x", zx.form.rank() as i64), ("rank_y", zy.form.rank() as i64)],
            ));
        }
        if open_cell {
            return Ok(Decision::unknown(
                Rule::OpenQuestion,
                "type III source and type II target: both splitting conditions hold, sufficiency is open",
            ));
        }
        let dx = decompose(x, &self.registry)?;
        let dy = decompose(y, &self.registry)?;
        let target = dy.primary.clone();
        let (rule, source) = if !even {
            (Rule::CaseA, dx.primary.clone())
        } else {
            match wx {
                W2Type::TypeII => (Rule::CaseB, dx.primary.clone()),
                W2Type::TypeIII => (Rule::CaseC, dx.primary.clone()),
                _ => {
                    let matching = dx.all().find(|p| p.sigma == target.sigma).expect("type I has every even-order sigma");
                    (Rule::CaseD, matching.clone())
                }
            }
        };
        let mut evidence = vec![
            split,
            Evidence::SplitZ2 { x: zx.form, y: zy.form },
            Evidence::Decomposition { manifold: x.clone(), part: source.clone() },
            Evidence::Decomposition { manifold: y.clone(), part: target.clone() },
        ];
        if source.sigma != target.sigma {
            evidence.push(Evidence::HomotopyEquivalent { a: source.sigma, b: target.sigma });
        }
        let mut cert = Certificate::new(rule, evidence);
        if zx.extrapolated || zy.extrapolated {
            cert.labels.push(Z2_EXTRAPOLATED_LABEL.to_string());
        }
        Ok(Decision::Yes(cert))
    }

    fn finite_to_simply_connected(&self, x: &ManifoldDescriptor, y: &ManifoldDescriptor) -> Result<Decision, DominationError> {
        let split = match self.split(x.form(), y.form()) {
            Ok(ev) => ev,
            Err(d) => return Ok(d),
        };
        let part = decompose(x, &self.registry)?.primary;
        Ok(Decision::yes(Rule::LemmaPinch, vec![Evidence::Decomposition { manifold: x.clone(), part }, split]))
    }

    fn infinite_to_simply_connected(&self, x: &ManifoldDescriptor, y: &ManifoldDescriptor) -> Decision {
        match self.split(x.form(), y.form()) {
            Ok(split) => Decision::yes(
                Rule::ThmHtDecomp,
                vec![Evidence::Indefiniteness { form: x.form().clone(), at_least: HT_THRESHOLD }, split],
            ),
            Err(d) => d,
        }
    }

    fn mixed(&self, x: &ManifoldDescriptor, y: &ManifoldDescriptor) -> Decision {
        if !pi1_surjects(x.pi1(), y.pi1()) {
            return Decision::no(
                Rule::Pi1Surjection,
                format!("a degree-one map is surjective on pi1, and {} does not surject onto {}", x.pi1(), y.pi1()),
                &[],
            );
        }
        if let Err(d) = self.split(x.form(), y.form()) {
            return d;
        }
        if *y == ManifoldDescriptor::s4() {
            return Decision::yes(Rule::LemmaPinch, vec![Evidence::RankZeroTarget { y: y.clone() }]);
        }
        Decision::unknown(
            Rule::OutsideClassification,
            format!("pi1 pair ({}, {}) is outside the classification cases", x.pi1(), y.pi1()),
        )
    }

    /// Stable 1-domination for π1 = Z, decided on `I ⊕ 3H`.
    pub fn stably_dominates(&self, x: &ManifoldDescriptor, y: &ManifoldDescriptor) -> Result<Decision, DominationError> {
        if x.pi1() != Pi1::Z || y.pi1() != Pi1::Z {
            return Err(DominationError::Pi1Mismatch { x: x.pi1(), y: y.pi1() });
        }
        self.check_valid("x", x)?;
        self.check_valid("y", y)?;
        let h3 = IntForm::hyperbolic().repeat(STABILIZATION);
        let (sx, sy) = (x.form().direct_sum(&h3), y.form().direct_sum(&h3));
        Ok(match self.split(&sx, &sy) {
            Ok(split) => Decision::yes(
                Rule::ThmStably1Dom,
                vec![
                    Evidence::Stabilization { k: STABILIZATION },
                    split,
                    Evidence::Indefiniteness { form: sx, at_least: HT_THRESHOLD },
                    Evidence::Indefiniteness { form: sy, at_least: HT_THRESHOLD },
                ],
            ),
            Err(d) => d,
        })
    }

    /// The smallest-χ manifold with the same π1 that `x` dominates.
    pub fn minimal_target(&self, x: &ManifoldDescriptor) -> Result<(ManifoldDescriptor, Decision), DominationError> {
        self.check_valid("x", x)?;
        Ok(match x.pi1() {
            Pi1::Trivial => {
                let s4 = ManifoldDescriptor::s4();
                let d = Decision::yes(Rule::LemmaPinch, vec![Evidence::RankZeroTarget { y: s4.clone() }]);
                (s4, d)
            }
            Pi1::Z => {
                let t = ManifoldDescriptor::s1_x_s3();
                let d = Decision::yes(Rule::PropQStar, vec![Evidence::RankZeroTarget { y: t.clone() }]);
                (t, d)
            }
            Pi1::Zn(_) => {
                let part = decompose(x, &self.registry)?.primary;
                let t = part.sigma.descriptor();
                let d = Decision::yes(Rule::LemmaPinch, vec![Evidence::Decomposition { manifold: x.clone(), part }]);
                (t, d)
            }
        })
    }

    pub fn stabilize(&self, d: &ManifoldDescriptor, k: usize) -> ManifoldDescriptor {
        stabilize(d, k)
    }
}
