use std::collections::BTreeSet;

use dighom_core::catalog::{
    connected_forms, connected_forms_exhaustive, match_fixture, run_catalog, CatalogOptions,
};
use dighom_core::lasso::lasso_rigidity;
use dighom_core::reductions::FilterConfig;
use dighom_core::{canonical_form, is_reducible, is_rigid, parse_graph6};

#[test]
fn generator_agrees_with_exhaustive_dedup() {
    for n in 1..=7 {
        assert_eq!(
            connected_forms(n).unwrap(),
            connected_forms_exhaustive(n).unwrap(),
            "n = {n}"
        );
    }
    assert_eq!(connected_forms(7).unwrap().len(), 853);
    assert!(connected_forms_exhaustive(8).is_err());
}

#[test]
fn eight_point_catalog_is_frozen() {
    let r = run_catalog(8, &CatalogOptions::default()).unwrap();
    assert_eq!(r.total_connected, 11117);
    assert_eq!(r.lemma_survivors.count, 160);
    assert_eq!(r.class_count(), 28);
    assert_eq!(r.irreducible_classes.iter().filter(|c| c.rigid).count(), 26);
    assert_eq!(
        r.irreducible_classes
            .iter()
            .filter(|c| c.lasso_certified)
            .count(),
        3
    );
    let named: BTreeSet<_> = r
        .irreducible_classes
        .iter()
        .filter_map(|c| c.matched_fixture.clone())
        .collect();
    let want: BTreeSet<String> = ["C8", "IMG8_1", "IMG8_2", "IMG8_3", "IMG8_4"]
        .map(String::from)
        .into();
    assert_eq!(named, want);
}

#[test]
fn nine_point_catalog_is_frozen() {
    let r = run_catalog(9, &CatalogOptions::default()).unwrap();
    assert_eq!(r.total_connected, 261080);
    assert_eq!(r.lemma_survivors.count, 3251);
    assert_eq!(r.class_count(), 547);
}

#[test]
fn report_invariants_hold() {
    for n in 5..=8 {
        let r = run_catalog(n, &CatalogOptions::default()).unwrap();
        let survivors: BTreeSet<_> = r
            .lemma_survivors
            .graphs
            .iter()
            .map(|s| canonical_form(&parse_graph6(&s.graph6).unwrap()))
            .collect();
        assert_eq!(survivors.len(), r.lemma_survivors.count);
        let classes: Vec<_> = r
            .irreducible_classes
            .iter()
            .map(|c| parse_graph6(&c.graph6).unwrap())
            .collect();
        let forms: BTreeSet<_> = classes.iter().map(canonical_form).collect();
        assert_eq!(
            forms.len(),
            classes.len(),
            "classes pairwise non-isomorphic"
        );
        assert!(forms.is_subset(&survivors));
        for (g, c) in classes.iter().zip(&r.irreducible_classes) {
            assert!(!is_reducible(g));
            assert_eq!(c.rigid, is_rigid(g));
            assert_eq!(c.matched_fixture, match_fixture(g));
        }
    }
}

#[test]
fn lasso_certificates_are_sound_on_survivors() {
    for n in 5..=8 {
        let r = run_catalog(n, &CatalogOptions::default()).unwrap();
        for s in &r.lemma_survivors.graphs {
            let g = parse_graph6(&s.graph6).unwrap();
            if let Some(cert) = lasso_rigidity(&g) {
                assert!(cert.verify(&g));
                assert!(is_rigid(&g), "{}", s.graph6);
            }
        }
    }
}

#[test]
fn output_is_independent_of_worker_count() {
    let render = |threads: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| {
                let options = CatalogOptions {
                    filter: FilterConfig::Fast,
                    shard_dir: None,
                };
                serde_json::to_string(&run_catalog(8, &options).unwrap()).unwrap()
            })
    };
    let one = render(1);
    assert_eq!(one, render(4));
    assert_eq!(one, render(4));
}

#[test]
fn fast_filter_keeps_every_class() {
    for n in 6..=8 {
        let plain = run_catalog(n, &CatalogOptions::default()).unwrap();
        let fast = run_catalog(
            n,
            &CatalogOptions {
                filter: FilterConfig::Fast,
                shard_dir: None,
            },
        )
        .unwrap();
        assert!(fast.lemma_survivors.count <= plain.lemma_survivors.count);
        assert_eq!(
            fast.irreducible_classes, plain.irreducible_classes,
            "n = {n}"
        );
    }
}
