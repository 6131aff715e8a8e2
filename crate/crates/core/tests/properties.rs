use proptest::prelude::*;

use hilbound_core::analysis::{analyze, AnalysisOptions};
use hilbound_core::bounds::evaluate;
use hilbound_core::{reduce, FractionalModule, NumericalSemigroup, Rational, SeriesElement};

fn semigroup() -> impl Strategy<Value = NumericalSemigroup> {
    prop::collection::vec(2u32..10, 2..4).prop_filter_map("generators share a factor", |g| {
        NumericalSemigroup::from_generators(&g).ok()
    })
}

/// A polynomial whose exponents are picked among the first semigroup elements.
fn ring_element(s: &NumericalSemigroup) -> impl Strategy<Value = SeriesElement> {
    let members: Vec<u32> = s.elements_below(s.conductor() + 12).filter(|&e| e > 0).collect();
    prop::collection::vec((0..members.len(), -3i64..=3), 1..4).prop_filter_map("zero element", move |terms| {
        let f = SeriesElement::polynomial(terms.into_iter().map(|(i, c)| (members[i], Rational::from_int(c))));
        (!f.is_zero()).then_some(f)
    })
}

fn ring_and_elements(n: usize) -> impl Strategy<Value = (NumericalSemigroup, Vec<SeriesElement>)> {
    semigroup().prop_flat_map(move |s| {
        let elems = prop::collection::vec(ring_element(&s), 1..=n);
        (Just(s), elems)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn reduce_is_idempotent((s, gens) in ring_and_elements(3), f_idx in 0usize..3) {
        let module = FractionalModule::from_generators(&s, &gens).unwrap();
        let basis = module.standard_basis();
        let f = gens[f_idx % gens.len()].mul(&gens[0]).add(&SeriesElement::monomial(s.multiplicity(), Rational::ONE));
        if let Ok(once) = reduce(&f, &basis, &s) {
            let twice = reduce(&once, &basis, &s).unwrap();
            prop_assert_eq!(once, twice);
        }
    }

    #[test]
    fn module_ignores_generator_order((s, gens) in ring_and_elements(3)) {
        let forward = FractionalModule::from_generators(&s, &gens).unwrap();
        let mut reversed = gens.clone();
        reversed.reverse();
        prop_assert_eq!(&forward, &FractionalModule::from_generators(&s, &reversed).unwrap());
        let mut doubled = gens.clone();
        doubled.push(gens[0].add(&gens[gens.len() - 1]));
        prop_assert_eq!(&forward, &FractionalModule::from_generators(&s, &doubled).unwrap());
    }

    #[test]
    fn monomial_value_sets(s in semigroup(), picks in prop::collection::vec(0usize..8, 1..4)) {
        let members: Vec<u32> = s.elements_below(s.conductor() + 10).filter(|&e| e > 0).collect();
        let exps: Vec<u32> = picks.iter().map(|&i| members[i % members.len()]).collect();
        let ideal = FractionalModule::monomial_ideal(&s, &exps).unwrap();
        let values = ideal.value_set();
        let top = s.conductor() + 2 * exps.iter().max().unwrap() + 2;
        for n in 0..top {
            let brute = exps.iter().any(|&e| n >= e && s.contains((n - e) as i64));
            prop_assert_eq!(values.contains(n), brute, "n = {}", n);
        }
    }

    #[test]
    fn length_is_additive((s, gens) in ring_and_elements(2)) {
        let a = FractionalModule::ring(&s);
        let i = FractionalModule::ideal(&s, &gens).unwrap();
        let i2 = i.product(&i).unwrap();
        let whole = a.length_quotient(&i2).unwrap();
        prop_assert_eq!(whole, a.length_quotient(&i).unwrap() + i.length_quotient(&i2).unwrap());
        prop_assert!(a.length_quotient(&FractionalModule::ring(&s)).unwrap() == 0);
    }

    #[test]
    fn principal_colength_is_valuation((s, gens) in ring_and_elements(1)) {
        let x = &gens[0];
        let m = FractionalModule::maximal_ideal(&s);
        let xm = m.scaled(x).unwrap();
        prop_assert_eq!(m.length_quotient(&xm).unwrap(), x.valuation().unwrap());
        let a = FractionalModule::ring(&s);
        prop_assert_eq!(a.length_quotient(&a.scaled(x).unwrap()).unwrap(), x.valuation().unwrap());
    }

    #[test]
    fn analysis_self_checks((s, gens) in ring_and_elements(2), on_maximal in any::<bool>()) {
        let i = FractionalModule::ideal(&s, &gens).unwrap();
        let module = if on_maximal { FractionalModule::maximal_ideal(&s) } else { FractionalModule::ring(&s) };
        let opts = AnalysisOptions { samples: 2, ..AnalysisOptions::default() };
        let analysis = analyze(&i, &module, 0, &opts).unwrap();
        for c in &analysis.checks {
            prop_assert!(c.holds, "{} failed: {}", c.id, c.detail);
        }
        let report = evaluate(&analysis.invariants).unwrap();
        prop_assert!(report.violations().is_empty(), "{:?}", report.violations());
        let lifted = evaluate(&analysis.invariants.lift(1)).unwrap();
        prop_assert!(lifted.violations().is_empty(), "{:?}", lifted.violations());
    }
}
