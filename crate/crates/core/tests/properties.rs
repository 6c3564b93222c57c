use proptest::prelude::*;

use polyarc_core::shelling::{parse_order, shell_coloured_convex, shell_coloured_punctured};
use polyarc_core::{
    arcs_cross, build_complex, cut_along_loop, enumerate_arcs, enumerate_triangulations,
    extend_to_triangulation, flip, is_permitted, Arc, ArcComplex, Colour, GreedyConfig,
    PolygonSpec,
};

fn spec_strategy(
    convex: std::ops::RangeInclusive<usize>,
    punctured: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = PolygonSpec> {
    prop_oneof![
        convex.prop_map(|m| (m, false)),
        punctured.prop_map(|m| (m, true)),
    ]
    .prop_flat_map(|(m, p)| {
        proptest::collection::vec(prop_oneof![Just(Colour::Red), Just(Colour::Blue)], m)
            .prop_filter("needs a blue vertex", |c| c.contains(&Colour::Blue))
            .prop_map(move |c| PolygonSpec::new(m, p, c).unwrap())
    })
}

/// A greedily pruned, pairwise disjoint subset of the (permitted) arcs.
fn independent_subset(spec: &PolygonSpec, permitted_only: bool, picks: &[usize]) -> Vec<Arc> {
    let arcs = enumerate_arcs(spec, permitted_only);
    let mut out: Vec<Arc> = Vec::new();
    for &p in picks {
        let a = arcs[p % arcs.len()];
        if !out.contains(&a) && out.iter().all(|&b| !arcs_cross(spec, a, b).unwrap()) {
            out.push(a);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn crossing_is_symmetric_and_irreflexive(spec in spec_strategy(4..=10, 2..=7), i in 0usize..1000, j in 0usize..1000) {
        let arcs = enumerate_arcs(&spec, false);
        let (a, b) = (arcs[i % arcs.len()], arcs[j % arcs.len()]);
        prop_assert!(!arcs_cross(&spec, a, a).unwrap());
        prop_assert_eq!(arcs_cross(&spec, a, b).unwrap(), arcs_cross(&spec, b, a).unwrap());
    }

    #[test]
    fn text_forms_round_trip(spec in spec_strategy(4..=10, 2..=7), i in 0usize..1000) {
        prop_assert_eq!(spec.to_string().parse::<PolygonSpec>().unwrap(), spec.clone());
        let arcs = enumerate_arcs(&spec, false);
        let a = arcs[i % arcs.len()];
        prop_assert_eq!(a.to_string().parse::<Arc>().unwrap(), a);
    }

    #[test]
    fn extension_contains_input_and_is_idempotent(
        spec in spec_strategy(4..=10, 2..=7),
        permitted_only in any::<bool>(),
        picks in proptest::collection::vec(0usize..1000, 0..6),
    ) {
        let partial = independent_subset(&spec, permitted_only, &picks);
        let t = extend_to_triangulation(&spec, &partial, permitted_only).unwrap();
        prop_assert_eq!(t.len(), spec.triangulation_size());
        prop_assert!(partial.iter().all(|&a| t.contains(a)));
        if permitted_only {
            prop_assert!(t.is_permitted());
        }
        let again = extend_to_triangulation(&spec, t.arcs(), permitted_only).unwrap();
        prop_assert_eq!(again, t);
    }

    #[test]
    fn flips_are_involutions(spec in spec_strategy(4..=8, 2..=5), permitted_only in any::<bool>(), picks in proptest::collection::vec(0usize..1000, 0..4), k in 0usize..100) {
        let partial = independent_subset(&spec, permitted_only, &picks);
        let t = extend_to_triangulation(&spec, &partial, permitted_only).unwrap();
        let arc = t.arcs()[k % t.len()];
        if let Some((u, added)) = flip(&t, arc, permitted_only).unwrap() {
            prop_assert!(!t.contains(added));
            prop_assert!(u.contains(added) && !u.contains(arc));
            let (back, restored) = flip(&u, added, permitted_only).unwrap().unwrap();
            prop_assert_eq!(restored, arc);
            prop_assert_eq!(back, t);
        }
    }

    #[test]
    fn constructed_orders_round_trip_through_files(spec in spec_strategy(4..=8, 2..=5)) {
        let cfg = GreedyConfig::default();
        let constructed = if spec.is_punctured() {
            shell_coloured_punctured(&spec, &cfg).unwrap()
        } else {
            shell_coloured_convex(&spec, &cfg).unwrap()
        };
        prop_assert!(constructed.repair.is_none());
        let order = constructed.order;
        let reread = parse_order(&spec, true, &order.to_text()).unwrap();
        prop_assert_eq!(reread.faces(), order.faces());
        prop_assert_eq!(reread.provenance(), order.provenance());

        let complex = order.complex();
        let text = complex.to_text();
        prop_assert_eq!(&ArcComplex::parse_text(&spec, &text).unwrap(), complex);
        prop_assert_eq!(&ArcComplex::from_document(&complex.to_document()).unwrap(), complex);
    }
}

/// Cutting along a loop is a bijection between the arcs disjoint from it and
/// the diagonals of the cut polygon, preserving crossings and colours.
#[test]
fn loop_cut_is_a_bijection() {
    for m in 2..=6 {
        let spec = PolygonSpec::uncoloured(m, true).unwrap();
        let all = enumerate_arcs(&spec, false);
        for v in 0..m {
            let l = Arc::loop_at(v);
            let cut = cut_along_loop(&spec, l).unwrap();
            let cs = cut.cut_spec();
            let disjoint: Vec<Arc> = all
                .iter()
                .copied()
                .filter(|&a| a != l && !arcs_cross(&spec, a, l).unwrap())
                .collect();
            let images: Vec<Arc> = disjoint.iter().map(|&a| cut.to_cut(a).unwrap()).collect();
            for &a in &all {
                if a == l || arcs_cross(&spec, a, l).unwrap() {
                    assert_eq!(cut.to_cut(a), None, "{a} at L({v})");
                }
            }
            for (&a, &d) in disjoint.iter().zip(&images) {
                assert_eq!(cut.from_cut(d), a);
            }
            if m >= 3 {
                let mut diagonals = enumerate_arcs(cs, false);
                diagonals.sort_unstable();
                let mut sorted = images.clone();
                sorted.sort_unstable();
                assert_eq!(sorted, diagonals, "m={m} v={v}");
                for (x, &a) in disjoint.iter().enumerate() {
                    for (y, &b) in disjoint.iter().enumerate() {
                        assert_eq!(
                            arcs_cross(&spec, a, b).unwrap(),
                            arcs_cross(cs, images[x], images[y]).unwrap()
                        );
                    }
                }
            } else {
                assert!(images.is_empty());
            }
        }
    }
}

/// Each punctured triangulation has exactly one loop, and permitted ones
/// carry it at a blue vertex.
#[test]
fn unique_loop() {
    for m in 2..=6 {
        for c in polyarc_core::sweep::colourings(m, true) {
            let spec = PolygonSpec::new(m, true, c).unwrap();
            for permitted_only in [false, true] {
                for t in enumerate_triangulations(&spec, permitted_only).unwrap() {
                    let loops: Vec<Arc> =
                        t.arcs().iter().copied().filter(|a| a.is_loop()).collect();
                    assert_eq!(loops.len(), 1, "{spec}: {t}");
                    if permitted_only {
                        assert!(spec.is_blue(loops[0].endpoints().0));
                        assert!(t.arcs().iter().all(|&a| is_permitted(&spec, a)));
                    }
                }
            }
        }
    }
}

#[test]
fn permitted_complex_is_a_subcomplex() {
    let spec: PolygonSpec = "P:m=7;punctured=0;colours=BRRBRBR".parse().unwrap();
    let full = build_complex(&spec, false).unwrap();
    let permitted = build_complex(&spec, true).unwrap();
    let full_faces = full.faces();
    // every permitted triangulation is also a triangulation outright
    for &f in permitted.faces() {
        assert!(full_faces.contains(&f));
    }
    assert!(permitted.len() < full.len());
}
