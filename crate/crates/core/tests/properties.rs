mod common;

use proptest::prelude::*;

use fourdom::domination::{Engine, Rule};
use fourdom::intforms::{classify, split_off, IntForm, SplitDecision};
use fourdom::laurent::LaurentPoly;
use fourdom::manifolds::{connected_sum, ManifoldDescriptor};
use fourdom::modtwo::ModTwoForm;

fn block() -> impl Strategy<Value = IntForm> {
    prop_oneof![
        4 => Just(IntForm::diagonal(1, 0)),
        4 => Just(IntForm::diagonal(0, 1)),
        3 => Just(IntForm::hyperbolic()),
        1 => Just(IntForm::e8()),
        1 => Just(IntForm::e8().negated()),
    ]
}

/// Direct sums of standard blocks with total rank at most `cap`.
fn standard_form(cap: usize) -> impl Strategy<Value = IntForm> {
    prop::collection::vec(block(), 0..6).prop_map(move |blocks| {
        blocks.iter().fold(IntForm::zero(), |acc, b| if acc.rank() + b.rank() <= cap { acc.direct_sum(b) } else { acc })
    })
}

/// A product of elementary integer matrices `I + c·e_ij`.
fn elementary_ops() -> impl Strategy<Value = Vec<(usize, usize, i64)>> {
    prop::collection::vec((0usize..16, 0usize..16, prop_oneof![Just(-1i64), Just(1)]), 0..5)
}

fn unimodular(n: usize, ops: &[(usize, usize, i64)]) -> Vec<Vec<i64>> {
    let mut u: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for &(i, j, c) in ops {
        let (i, j) = (i % n.max(1), j % n.max(1));
        if i == j {
            continue;
        }
        // column operation: col_j += c·col_i
        for row in u.iter_mut() {
            row[j] += c * row[i];
        }
    }
    u
}

fn planes(k: usize) -> ModTwoForm {
    (0..k).fold(ModTwoForm::zero(), |acc, _| acc.direct_sum(&ModTwoForm::hyperbolic()))
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, -4i64..=4), 0..4).prop_map(LaurentPoly::from_terms)
}

fn sc_descriptor() -> impl Strategy<Value = ManifoldDescriptor> {
    prop::sample::select(common::sc_corpus())
}

fn cyclic_descriptor() -> impl Strategy<Value = ManifoldDescriptor> {
    let mut all = common::sc_corpus();
    all.extend(common::ic_corpus());
    all.extend(common::fc_corpus());
    prop::sample::select(all)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn invariants_survive_congruence(base in standard_form(10), ops in elementary_ops()) {
        let u = unimodular(base.rank(), &ops);
        let g = IntForm::new(common::congruent(base.gram(), &u)).expect("congruent to a unimodular form");
        prop_assert_eq!(g.invariants(), base.invariants());
        prop_assert_eq!(classify(&g), classify(&base));
        let (pos, neg) = common::descartes_inertia(g.gram());
        prop_assert_eq!(pos + neg, g.rank());
        prop_assert_eq!(pos as i64 - neg as i64, g.signature());
    }

    #[test]
    fn summands_split_off(x in standard_form(5), y in standard_form(4)) {
        let sum = x.direct_sum(&y);
        match split_off(&sum, &y) {
            SplitDecision::Yes { complement } => {
                prop_assert_eq!(complement.rank, x.rank());
                prop_assert_eq!(complement.signature, x.signature());
                if sum.is_definite() {
                    prop_assert_eq!(complement.parity, x.parity());
                }
            }
            other => prop_assert!(false, "{:?}", other),
        }
    }

    #[test]
    fn connected_sum_is_additive(a in cyclic_descriptor(), b in sc_descriptor()) {
        let s = connected_sum(&a, &b).expect("simply connected summand");
        prop_assert_eq!(s.chi(), a.chi() + b.chi() - 2);
        prop_assert_eq!(s.signature(), a.signature() + b.signature());
        prop_assert_eq!(s.ks(), a.ks() ^ b.ks());
        prop_assert_eq!(s.pi1(), a.pi1());
        prop_assert!(s.is_valid(&fourdom::laurent::AxiomRegistry::builtin()));
    }

    #[test]
    fn domination_is_reflexive(x in cyclic_descriptor()) {
        let d = Engine::default().dominates(&x, &x).unwrap();
        prop_assert_eq!(d.rule(), Rule::Homeomorphic);
    }

    #[test]
    fn conjugation_is_a_ring_involution(p in poly(), q in poly()) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!((&p * &q).conjugate(), &p.conjugate() * &q.conjugate());
        prop_assert_eq!((&p + &q).conjugate(), &p.conjugate() + &q.conjugate());
        prop_assert_eq!((&p * &q).eval_one(), p.eval_one() * q.eval_one());
        prop_assert!((&p * &p.conjugate()).is_self_conjugate());
    }

    #[test]
    fn exact_division_inverts_multiplication(p in poly(), q in poly()) {
        prop_assume!(!q.is_zero());
        prop_assert_eq!((&p * &q).exact_div(&q), Some(p));
    }

    #[test]
    fn z2_direct_sums(a in 0usize..3, b in 0usize..3, i in 0usize..3, j in 0usize..3) {
        let f = planes(a).direct_sum(&ModTwoForm::identity(i));
        let g = planes(b).direct_sum(&ModTwoForm::identity(j));
        let s = f.direct_sum(&g);
        prop_assert_eq!(s.is_alternating(), f.is_alternating() && g.is_alternating());
        let mut c = f.characteristic_element();
        c.extend(g.characteristic_element());
        prop_assert_eq!(s.characteristic_element(), c);
    }
}
