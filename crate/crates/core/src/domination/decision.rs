//! Three-valued decisions with re-checkable certificates.

use std::fmt;

use crate::intforms::{split_off_with, IntForm, Invariants, SearchLimits, SplitDecision};
use crate::laurent::AxiomRegistry;
use crate::manifolds::{decompose, Decomposition, ManifoldDescriptor, SigmaLabel};
use crate::modtwo::{split_off_z2, ModTwoForm};

/// Every rule a decision can cite. Tags are stable identifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    Homeomorphic,
    PropDw,
    PropQStar,
    ThmHtDecomp,
    CaseA,
    CaseB,
    CaseC,
    CaseD,
    LemmaPinch,
    ThmStably1Dom,
    ThmUniversalZ,
    LemmaSplitting,
    LemmaSplittingZ2,
    LemmaSpin,
    ThmNon1Dom,
    ThmEuler,
    Pi1Surjection,
    OpenQuestion,
    Pi1ZSufficiencyOpen,
    DefiniteRankCap,
    OutsideClassification,
    Z2ExtrapolationDisabled,
}

impl Rule {
    pub const ALL: [Rule; 22] = [
        Rule::Homeomorphic,
        Rule::PropDw,
        Rule::PropQStar,
        Rule::ThmHtDecomp,
        Rule::CaseA,
        Rule::CaseB,
        Rule::CaseC,
        Rule::CaseD,
        Rule::LemmaPinch,
        Rule::ThmStably1Dom,
        Rule::ThmUniversalZ,
        Rule::LemmaSplitting,
        Rule::LemmaSplittingZ2,
        Rule::LemmaSpin,
        Rule::ThmNon1Dom,
        Rule::ThmEuler,
        Rule::Pi1Surjection,
        Rule::OpenQuestion,
        Rule::Pi1ZSufficiencyOpen,
        Rule::DefiniteRankCap,
        Rule::OutsideClassification,
        Rule::Z2ExtrapolationDisabled,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Rule::Homeomorphic => "homeomorphic",
            Rule::PropDw => "prop:dw",
            Rule::PropQStar => "prop:q-star",
            Rule::ThmHtDecomp => "thm:ht-decomp",
            Rule::CaseA => "thm:1domn:case-a",
            Rule::CaseB => "thm:1domn:case-b",
            Rule::CaseC => "thm:1domn:case-c",
            Rule::CaseD => "thm:1domn:case-d",
            Rule::LemmaPinch => "lemma:pinch",
            Rule::ThmStably1Dom => "thm:stably-1dom",
            Rule::ThmUniversalZ => "thm:universal-z",
            Rule::LemmaSplitting => "lemma:splitting",
            Rule::LemmaSplittingZ2 => "lemma:splitting-z2",
            Rule::LemmaSpin => "lemma:spin",
            Rule::ThmNon1Dom => "thm:non-1dom",
            Rule::ThmEuler => "thm:euler",
            Rule::Pi1Surjection => "pi1-surjection",
            Rule::OpenQuestion => "open-question",
            Rule::Pi1ZSufficiencyOpen => "pi1-z-sufficiency-open",
            Rule::DefiniteRankCap => "definite-rank-cap",
            Rule::OutsideClassification => "outside-classification",
            Rule::Z2ExtrapolationDisabled => "z2-extrapolation-disabled",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Rule> {
        Rule::ALL.into_iter().find(|r| r.tag() == tag)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// One re-checkable fact cited by a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    /// `y ⊕ L ≅ x` with `L` of the given invariants.
    Split { x: IntForm, y: IntForm, complement: Invariants },
    SplitZ2 { x: ModTwoForm, y: ModTwoForm },
    /// `manifold = sigma # m`.
    Decomposition { manifold: ManifoldDescriptor, part: Decomposition },
    /// `rank - |signature| >= at_least`.
    Indefiniteness { form: IntForm, at_least: usize },
    Homeomorphic { x: ManifoldDescriptor, y: ManifoldDescriptor },
    HomotopyEquivalent { a: SigmaLabel, b: SigmaLabel },
    RankZeroTarget { y: ManifoldDescriptor },
    Stabilization { k: usize },
    /// `m` is a summand with intersection form matching `form`.
    Summand { m: ManifoldDescriptor, form: IntForm },
}

impl Evidence {
    pub fn kind(&self) -> &'static str {
        match self {
            Evidence::Split { .. } => "split",
            Evidence::SplitZ2 { .. } => "split-z2",
            Evidence::Decomposition { .. } => "decomposition",
            Evidence::Indefiniteness { .. } => "indefiniteness",
            Evidence::Homeomorphic { .. } => "homeomorphic",
            Evidence::HomotopyEquivalent { .. } => "homotopy-equivalent",
            Evidence::RankZeroTarget { .. } => "rank-zero-target",
            Evidence::Stabilization { .. } => "stabilization",
            Evidence::Summand { .. } => "summand",
        }
    }

    pub fn recheck(&self, limits: &SearchLimits, registry: &AxiomRegistry) -> bool {
        match self {
            Evidence::Split { x, y, complement } => {
                split_off_with(x, y, limits) == SplitDecision::Yes { complement: *complement }
            }
            Evidence::SplitZ2 { x, y } => split_off_z2(x, y).is_yes(),
            Evidence::Decomposition { manifold, part } => {
                decompose(manifold, registry).is_ok_and(|d| d.all().any(|p| p == part))
            }
            Evidence::Indefiniteness { form, at_least } => form.indefiniteness() >= *at_least,
            Evidence::Homeomorphic { x, y } => x == y,
            Evidence::HomotopyEquivalent { a, b } => a == b || a.homotopy_partner() == Some(*b),
            Evidence::RankZeroTarget { y } => y.form().rank() == 0,
            Evidence::Stabilization { .. } => true,
            Evidence::Summand { m, form } => {
                m.is_valid(registry) && m.form().invariants() == form.invariants() && form.is_indefinite()
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub rule: Rule,
    pub evidence: Vec<Evidence>,
    /// Qualifiers such as `z2-sigma-block=extrapolated`.
    pub labels: Vec<String>,
}

impl Certificate {
    pub fn new(rule: Rule, evidence: Vec<Evidence>) -> Self {
        Certificate { rule, evidence, labels: Vec::new() }
    }

    pub fn recheck(&self, limits: &SearchLimits, registry: &AxiomRegistry) -> bool {
        self.evidence.iter().all(|e| e.recheck(limits, registry))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Obstruction {
    pub rule: Rule,
    pub detail: String,
    pub values: Vec<(String, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unresolved {
    pub rule: Rule,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Yes(Certificate),
    No(Obstruction),
    Unknown(Unresolved),
}

impl Decision {
    pub fn yes(rule: Rule, evidence: Vec<Evidence>) -> Self {
        Decision::Yes(Certificate::new(rule, evidence))
    }

    pub fn no(rule: Rule, detail: impl Into<String>, values: &[(&str, i64)]) -> Self {
        Decision::No(Obstruction {
            rule,
            detail: detail.into(),
            values: values.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        })
    }

    pub fn unknown(rule: Rule, detail: impl Into<String>) -> Self {
        Decision::Unknown(Unresolved { rule, detail: detail.into() })
    }

    pub fn rule(&self) -> Rule {
        match self {
            Decision::Yes(c) => c.rule,
            Decision::No(o) => o.rule,
            Decision::Unknown(u) => u.rule,
        }
    }

    /// `"yes"`, `"no"` or `"unknown"`.
    pub fn outcome(&self) -> &'static str {
        match self {
            Decision::Yes(_) => "yes",
            Decision::No(_) => "no",
            Decision::Unknown(_) => "unknown",
        }
    }

    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Decision::No(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Decision::Unknown(_))
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decision::Yes(c) => {
                write!(f, "yes [{}]", c.rule)?;
                for l in &c.labels {
                    write!(f, " ({l})")?;
                }
                Ok(())
            }
            Decision::No(o) => write!(f, "no [{}]: {}", o.rule, o.detail),
            Decision::Unknown(u) => write!(f, "unknown [{}]: {}", u.rule, u.detail),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_are_unique_and_round_trip() {
        let mut tags: Vec<&str> = Rule::ALL.iter().map(|r| r.tag()).collect();
        for r in Rule::ALL {
            assert_eq!(Rule::from_tag(r.tag()), Some(r));
        }
        tags.sort_unstable();
        tags.dedup();
        assert_eq!(tags.len(), Rule::ALL.len());
    }

    #[test]
    fn forged_split_evidence_fails_recheck() {
        let e = Evidence::Split {
            x: IntForm::e8(),
            y: IntForm::hyperbolic(),
            complement: IntForm::diagonal(6, 0).invariants(),
        };
        assert!(!e.recheck(&SearchLimits::default(), &AxiomRegistry::builtin()));
    }
}
