use bowtie_core::bowtie::{build_bowtie, components, up_avg_check};
use bowtie_core::census::{underlying_graph, TriadCensus};
use bowtie_core::pipeline::{theorem_pipeline, verify_instance, PipelineOptions};
use bowtie_core::search::{exhaustive_search, guided_search, is_config, ExhaustiveOutcome};
use bowtie_core::triple_system::{dilute, generate_random_linear, generate_steiner, parse, serialize};
use bowtie_core::{LinearTripleSystem, Rational, SearchBudget};
use proptest::prelude::*;

fn arb_system() -> impl Strategy<Value = LinearTripleSystem> {
    (3usize..40, 1i128..=20, any::<u64>())
        .prop_map(|(n, num, seed)| generate_random_linear(n, Rational::new(num, 20), seed))
}

fn arb_diluted() -> impl Strategy<Value = LinearTripleSystem> {
    (
        prop::sample::select(vec![7usize, 9, 13, 15, 19, 21, 25]),
        1i128..=20,
        any::<u64>(),
    )
        .prop_map(|(n, num, seed)| dilute(&generate_steiner(n).unwrap(), Rational::new(num, 20), seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bowtie_identities(h in prop_oneof![arb_system(), arb_diluted()]) {
        let u = underlying_graph(&h);
        let c = TriadCensus::compute(&u);
        let b = build_bowtie(&h);
        let m = h.m() as u128;
        prop_assert_eq!(u.edge_count() as u128, 3 * m);
        prop_assert_eq!(b.edge_count() as u128 + 3 * m, 3 * c.kappa_triangle);
        prop_assert_eq!(4 * b.order() as u128 + 3 * m, c.kappa_cherry);
        prop_assert!(b.max_degree() <= 8);
        let degree_sum: usize = (0..b.order()).map(|v| b.degree(v)).sum();
        prop_assert_eq!(degree_sum, 2 * b.edge_count());
        if let Some((avg, bound)) = up_avg_check(&b, &components(&b)) {
            prop_assert!(avg <= bound);
        }
    }

    #[test]
    fn generated_systems_verify(h in prop_oneof![arb_system(), arb_diluted()]) {
        let checks = verify_instance(&h).unwrap();
        let failed: Vec<_> = checks.iter().filter(|c| c.violated()).collect();
        prop_assert!(failed.is_empty(), "{:?}", failed);
        prop_assert_eq!(parse(&serialize(&h)).unwrap(), h);
    }

    #[test]
    fn witnesses_are_sound(h in arb_diluted(), k in 3usize..7) {
        let b = build_bowtie(&h);
        let comps = components(&b);
        if let Some(c) = guided_search(&h, &b, &comps, k, SearchBudget::unlimited()).found() {
            prop_assert!(is_config(&h, c.edges(), k + 3, k).unwrap());
            let exhaustive = exhaustive_search(&h, k, k + 3, SearchBudget::unlimited());
            prop_assert!(matches!(exhaustive, ExhaustiveOutcome::Found(_)));
        }
        let report = theorem_pipeline(&h, &PipelineOptions::new(k)).unwrap();
        if let Some(w) = &report.search.witness {
            prop_assert!(is_config(&h, &w.edge_indices, k + 3, k).unwrap());
        }
        prop_assert!(report.violations().next().is_none());
    }
}
