//! Randomized invariants over small contexts.

use proptest::prelude::*;

use lcif_core::document::{parse_document, InputDocument};
use lcif_core::generators::build_family;
use lcif_core::intersect::{criterion, strongly_intersecting_oracle, witness_construct};
use lcif_core::sets::{
    is_left_compressed_downclosed, is_left_compressed_shiftstable, leq, lower_closure, preceq,
    GeneratorCollection, GeneratorSet, GroundContext, SetFamily,
};
use lcif_core::shift::compress;

fn arb_context() -> impl Strategy<Value = GroundContext> {
    (4u32..=10)
        .prop_flat_map(|n| (Just(n), 2u32..=n / 2))
        .prop_map(|(n, k)| GroundContext::new(n, k).unwrap())
}

fn arb_family() -> impl Strategy<Value = SetFamily> {
    arb_context().prop_flat_map(|ctx| {
        let all = ctx.ksets();
        let len = all.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |mask| {
            let members = all
                .iter()
                .zip(&mask)
                .filter(|(_, keep)| **keep)
                .map(|(s, _)| s.clone())
                .collect();
            SetFamily::new(ctx, members).unwrap()
        })
    })
}

fn arb_generator(ctx: GroundContext) -> impl Strategy<Value = GeneratorSet> {
    let universe: Vec<u32> = (1..=ctx.n()).collect();
    proptest::sample::subsequence(universe, 1..=ctx.k() as usize)
        .prop_map(move |elements| GeneratorSet::new(elements, &ctx).unwrap())
}

fn arb_collection() -> impl Strategy<Value = GeneratorCollection> {
    arb_context().prop_flat_map(|ctx| {
        proptest::collection::vec(arb_generator(ctx), 1..=4)
            .prop_map(move |gens| GeneratorCollection::new(ctx, dedup(gens)).unwrap())
    })
}

fn dedup(mut gens: Vec<GeneratorSet>) -> Vec<GeneratorSet> {
    gens.sort();
    gens.dedup();
    gens
}

proptest! {
    #[test]
    fn document_round_trip(gc in arb_collection(), as_family in any::<bool>()) {
        let doc = if as_family {
            InputDocument::family(build_family(&gc))
        } else {
            InputDocument::generators(gc)
        };
        let reparsed = parse_document(&doc.to_string()).unwrap();
        prop_assert_eq!(reparsed, doc);
    }

    #[test]
    fn compression_reaches_a_stable_family(f in arb_family()) {
        let (fixed, report) = compress(&f);
        prop_assert_eq!(fixed.len(), f.len());
        prop_assert_eq!(report.input_size, report.output_size);
        prop_assert!(is_left_compressed_shiftstable(&fixed));
        prop_assert!(is_left_compressed_downclosed(&fixed));
        let (again, second) = compress(&fixed);
        prop_assert_eq!(again, fixed);
        prop_assert!(second.applied.is_empty());
    }

    #[test]
    fn closure_members_are_exactly_the_dominated_ksets(ctx in arb_context(), idx in any::<prop::sample::Index>()) {
        let all = ctx.ksets();
        let a = &all[idx.index(all.len())];
        let closure = lower_closure(a, &ctx);
        prop_assert!(closure.contains(a));
        for s in &all {
            prop_assert_eq!(
                closure.contains(s),
                leq(s.elements(), a.elements()).unwrap()
            );
        }
    }

    #[test]
    fn built_families_match_the_domination_filter(gc in arb_collection()) {
        let built = build_family(&gc);
        prop_assert!(is_left_compressed_downclosed(&built));
        for s in gc.context().ksets() {
            let dominated = gc
                .generators()
                .iter()
                .any(|g| preceq(s.elements(), g.elements()));
            prop_assert_eq!(built.contains(&s), dominated);
        }
    }

    #[test]
    fn criterion_agrees_with_oracle(gc in arb_collection()) {
        for g in gc.generators() {
            for h in gc.generators() {
                prop_assert_eq!(
                    criterion(g.elements(), h.elements()).holds,
                    strongly_intersecting_oracle(g.elements(), h.elements())
                );
            }
        }
    }

    #[test]
    fn failing_pairs_yield_sound_witnesses(gc in arb_collection()) {
        let ctx = gc.context();
        for g in gc.generators() {
            for h in gc.generators() {
                if criterion(g.elements(), h.elements()).holds {
                    continue;
                }
                let trace = witness_construct(g, h, &ctx).unwrap();
                let (a, b) = &trace.pair;
                prop_assert!(!a.intersects(b));
                prop_assert!(preceq(a.elements(), g.elements()));
                prop_assert!(preceq(b.elements(), h.elements()));
            }
        }
    }
}
