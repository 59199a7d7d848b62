//! Invariants asserted over the generated descriptor corpora.

mod common;

use std::collections::BTreeMap;

use fourdom::domination::{
    enumerate_simply_connected, finite_abelian_targets_bound, AbelianTargets, Engine, GroupDescriptor, ENUMERATION_CAP,
};
use fourdom::intforms::IntForm;
use fourdom::laurent::AxiomRegistry;
use fourdom::manifolds::{ManifoldDescriptor, W2Type};
use fourdom::wire;

#[test]
fn corpus_sizes() {
    // 17 forms of rank <= 4, three of them even
    assert_eq!(common::corpus_forms().len(), 17);
    assert_eq!(common::fc_corpus().len(), 2 * (3 * 3 + 14 * 2) + 2 * (3 + 14 * 2));
}

#[test]
fn spin_type_propagates_along_yes() {
    let engine = Engine::default().with_z2_extrapolation(true);
    let corpus = common::fc_corpus();
    for x in &corpus {
        for y in corpus.iter().filter(|y| y.pi1() == x.pi1()) {
            if !engine.dominates(x, y).unwrap().is_yes() {
                continue;
            }
            let (wx, wy) = (x.w2().unwrap(), y.w2().unwrap());
            if wx.is_spin() {
                assert!(wy.is_spin(), "{x:?} -> {y:?}");
            }
            if wx == W2Type::TypeIII {
                assert!(matches!(wy, W2Type::TypeII | W2Type::TypeIII), "{x:?} -> {y:?}");
            }
        }
    }
}

#[test]
fn wire_round_trip() {
    let registry = AxiomRegistry::builtin();
    let mut all = common::sc_corpus();
    all.extend(common::ic_corpus());
    all.extend(common::fc_corpus());
    for d in &all {
        let text = wire::descriptor_to_json(d).to_string();
        assert_eq!(&wire::parse_descriptor(&text, &registry).unwrap(), d, "{text}");
    }
}

#[test]
fn zn_targets_have_no_duplicate_yes() {
    let engine = Engine::default().with_z2_extrapolation(true);
    let corpus = common::fc_corpus();
    for x in corpus.iter().step_by(7) {
        let targets = engine.enumerate_targets_zn(x).unwrap();
        let yes: Vec<&ManifoldDescriptor> = targets.iter().filter(|(_, d)| d.is_yes()).map(|(t, _)| t).collect();
        for (i, a) in yes.iter().enumerate() {
            assert!(yes[i + 1..].iter().all(|b| b != a));
        }
        assert!(targets.iter().all(|(t, _)| t.form().rank() <= x.form().rank() && t.pi1() == x.pi1()));
        assert!(yes.contains(&x), "{x:?} dominates itself");
    }
}

#[test]
fn stable_domination_is_weaker() {
    let engine = Engine::default();
    let corpus = common::ic_corpus();
    for x in &corpus {
        for y in &corpus {
            if engine.dominates(x, y).unwrap().is_yes() {
                assert!(engine.stably_dominates(x, y).unwrap().is_yes(), "{x:?} -> {y:?}");
            }
        }
    }
}

#[test]
fn finite_abelian_target_bounds() {
    let x = ManifoldDescriptor::FiniteCyclic { n: 6, form: IntForm::diagonal(1, 1), w2: W2Type::NonSpin, ks: 0 };
    assert!(matches!(finite_abelian_targets_bound(&x, &GroupDescriptor::FiniteCyclic(4)).unwrap(), AbelianTargets::Excluded(_)));
    assert_eq!(
        finite_abelian_targets_bound(&x, &GroupDescriptor::FiniteCyclic(3)).unwrap(),
        AbelianTargets::Possible { chi_min: 2, chi_max: 4 }
    );
}

#[test]
fn enumeration_counts_match_golden_file() {
    let golden: BTreeMap<String, usize> = serde_json::from_str(include_str!("golden/enumeration_counts.json")).unwrap();
    assert_eq!(golden.len(), ENUMERATION_CAP + 1);
    for bound in 0..=ENUMERATION_CAP {
        let list = enumerate_simply_connected(bound).unwrap();
        assert_eq!(Some(&list.len()), golden.get(&bound.to_string()), "bound {bound}");
        assert!(list.iter().all(|d| d.form().rank() <= bound));
    }
}
