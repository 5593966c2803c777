use latgraph_core::catalog::{group_from_str, Limits};
use latgraph_core::format::{GraphDoc, LatticeDoc};
use latgraph_core::iso::{compare_groups, DEFAULT_BUDGET};
use latgraph_core::reconstruct::{epow_from_lattice, lattice_from_epow, roundtrip};
use latgraph_core::{build_lattice, epow_oracle, pow_oracle};
use proptest::prelude::*;

fn factor() -> impl Strategy<Value = String> {
    prop_oneof![
        (1usize..=12).prop_map(|n| format!("Z({n})")),
        (2usize..=6).prop_map(|k| format!("D({})", 2 * k)),
        Just("Q(8)".to_owned()),
        Just("S(3)".to_owned()),
        Just("A(4)".to_owned()),
    ]
}

fn expr() -> impl Strategy<Value = String> {
    prop::collection::vec(factor(), 1..=3)
        .prop_map(|fs| fs.join("x"))
        .prop_filter("small enough", |e| {
            group_from_str(e, &Limits { max_order: 96, ..Limits::default() }).is_ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn every_reconstruction_matches(e in expr()) {
        let g = group_from_str(&e, &Limits::default()).unwrap();
        let report = roundtrip(&g, DEFAULT_BUDGET).unwrap();
        prop_assert!(report.all_passed(), "{e}: {report:?}");
    }

    #[test]
    fn json_documents_reingest(e in expr()) {
        let g = group_from_str(&e, &Limits::default()).unwrap();
        let l = build_lattice(&g).lattice;
        let text = LatticeDoc::of(&l).to_json();
        let back = LatticeDoc::parse_lattice(&text).unwrap();
        prop_assert_eq!(&back, &l);

        let pow = pow_oracle(&g);
        let doc = GraphDoc::from_json(&GraphDoc::simple(&pow).to_json()).unwrap();
        prop_assert_eq!(doc.to_simple().unwrap(), pow);

        let labeled = epow_from_lattice(&l).unwrap();
        let doc = GraphDoc::from_json(&GraphDoc::labeled(&labeled).to_json()).unwrap();
        prop_assert_eq!(doc.canonical_labels(), Some(labeled.labels.clone()));
        let recovered = lattice_from_epow(&doc.to_simple().unwrap()).unwrap();
        prop_assert_eq!(recovered.orders(), l.orders());
    }

    #[test]
    fn self_comparison_is_all_true(e in expr()) {
        let g = group_from_str(&e, &Limits::default()).unwrap();
        prop_assert_eq!(compare_groups(&g, &g).unwrap().flags(), [true; 4]);
        prop_assert_eq!(epow_oracle(&g).vertex_count(), g.order());
    }
}
