//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p dighom-core --test acceptance`. Failing criteria are
//! reported but do not fail the run unless `ACCEPTANCE_STRICT=1` is set.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use dighom_core::catalog::{
    connected_forms, connected_forms_exhaustive, enumerate_connected_graphs, run_catalog,
    CatalogOptions, CatalogReport,
};
use dighom_core::fixtures::{klein_swap, named_image};
use dighom_core::lasso::{lasso_rigidity, verify_lasso, Lasso};
use dighom_core::loops::{compute_lm, CountStatus};
use dighom_core::maps::{homotopic_maps, one_step_related, pointed_equivalence_obstruction};
use dighom_core::reductions::path_pair_conditions;
use dighom_core::{
    are_homotopy_equivalent, are_isomorphic, canonical_form, encode_graph6, is_continuous,
    is_pointed_rigid, is_reducible, is_rigid, parse_graph6, reduce_to_core, DigitalImage, ImageMap,
    SearchBudget,
};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn img(name: &str) -> DigitalImage {
    named_image(name).unwrap()
}

fn lm_exact(x: &DigitalImage, m: usize) -> Option<usize> {
    let t = compute_lm(x, m, &SearchBudget::default()).unwrap();
    (t.status == CountStatus::Exact).then_some(t.count)
}

fn criterion_1() -> Outcome {
    let mut bad = Vec::new();
    for m in 5..=8 {
        let c = DigitalImage::cycle(m).unwrap();
        for i in 1..=8 {
            let want = match i {
                1 => 1,
                _ if i == m => 2,
                _ => 0,
            };
            let got = lm_exact(&c, i);
            if got != Some(want) {
                bad.push(format!("L_{i}(C_{m}) = {got:?}"));
            }
        }
    }
    outcome(
        bad.is_empty(),
        if bad.is_empty() {
            "32 exact values".into()
        } else {
            bad.join(", ")
        },
    )
}

fn criterion_2() -> Outcome {
    let x = img("IMG7_1");
    let got: Vec<Option<usize>> = (1..=6).map(|m| lm_exact(&x, m)).collect();
    let want = vec![Some(1), Some(0), Some(0), Some(0), Some(4), Some(2)];
    outcome(got == want, format!("L_1..L_6 = {got:?}"))
}

fn matches(report: &CatalogReport, names: &[&str]) -> bool {
    let found: BTreeSet<&str> = report
        .irreducible_classes
        .iter()
        .filter_map(|c| c.matched_fixture.as_deref())
        .collect();
    report.class_count() == names.len() && found == names.iter().copied().collect()
}

fn criterion_3() -> Outcome {
    let options = CatalogOptions::default();
    let small_cores = (1..=4).all(|n| {
        enumerate_connected_graphs(n)
            .unwrap()
            .iter()
            .all(|g| reduce_to_core(g).core.n() == 1)
    });
    let r5 = run_catalog(5, &options).unwrap();
    let r6 = run_catalog(6, &options).unwrap();
    let r7 = run_catalog(7, &options).unwrap();
    let pass = small_cores
        && matches(&r5, &["C5"])
        && r6.total_connected == 112
        && r6.lemma_survivors.count == 2
        && matches(&r6, &["C6"])
        && r7.total_connected == 853
        && r7.lemma_survivors.count == 15
        && matches(&r7, &["C7", "IMG7_1", "IMG7_2"]);
    outcome(
        pass,
        format!(
            "n≤4 point cores: {small_cores}; n=5 classes {}; n=6 {}/{}/{}; n=7 {}/{}/{}",
            r5.class_count(),
            r6.total_connected,
            r6.lemma_survivors.count,
            r6.class_count(),
            r7.total_connected,
            r7.lemma_survivors.count,
            r7.class_count()
        ),
    )
}

/// Map witnesses as printed, with point 6 of X12 read as `6 ↦ 1`.
fn appendix_map(i: usize) -> Option<Vec<usize>> {
    let cyc5 = |rest: [usize; 2]| vec![1, 2, 3, 4, 0, rest[0], rest[1]];
    match i {
        5 => Some(vec![1, 2, 3, 4, 5, 0, 2]),
        7 => Some(cyc5([0, 4])),
        8 => Some(cyc5([2, 3])),
        12 => Some(cyc5([0, 1])),
        13 => Some(cyc5([1, 1])),
        15 => Some(cyc5([3, 0])),
        _ => None,
    }
}

fn appendix_paths(i: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let pair = |p: &[usize], q: &[usize]| Some((p.to_vec(), q.to_vec()));
    match i {
        4 => pair(&[0, 1, 2], &[3, 4, 5]),
        6 | 9 => pair(&[1, 2], &[0, 3]),
        10 => pair(&[3, 0, 6], &[2, 1, 5]),
        11 => pair(&[0, 3], &[1, 2]),
        14 => pair(&[0, 1], &[6, 2]),
        _ => None,
    }
}

fn criterion_4() -> Outcome {
    let mut bad = Vec::new();
    for i in 1..=15 {
        let x = img(&format!("APPENDIX_{i}"));
        let reducible = is_reducible(&x);
        if reducible != (i > 3) {
            bad.push(format!("X{i} reducible = {reducible}"));
        }
        if i <= 3 {
            continue;
        }
        let ok = if let Some(values) = appendix_map(i) {
            let f = ImageMap::new(values);
            let id = ImageMap::identity(7);
            is_continuous(&x, &x, &f)
                && one_step_related(&x, &id, &f).unwrap()
                && !f.is_surjective_onto(7)
        } else if let Some((p, q)) = appendix_paths(i) {
            path_pair_conditions(&x, &p, &q)
        } else {
            false
        };
        if !ok {
            bad.push(format!("X{i} witness rejected"));
        }
    }
    outcome(
        bad.is_empty(),
        if bad.is_empty() {
            "12 witnesses replayed; X1..X3 irreducible".into()
        } else {
            bad.join(", ")
        },
    )
}

fn criterion_5() -> Outcome {
    let r = run_catalog(8, &CatalogOptions::default()).unwrap();
    let names = ["C8", "IMG8_1", "IMG8_2", "IMG8_3", "IMG8_4"];
    let found: Vec<_> = names
        .iter()
        .map(|name| {
            r.irreducible_classes
                .iter()
                .find(|c| c.matched_fixture.as_deref() == Some(name))
        })
        .collect();
    let all_found = found.iter().all(Option::is_some);
    let images: Vec<DigitalImage> = names.iter().map(|n| img(n)).collect();
    let distinct =
        (0..5).all(|i| (i + 1..5).all(|j| are_isomorphic(&images[i], &images[j]).is_none()));
    let non_cycles = &found[1..];
    let rigid = non_cycles.iter().all(|c| c.is_some_and(|c| c.rigid));
    let lassoed: Vec<&str> = names[1..]
        .iter()
        .zip(non_cycles)
        .filter(|(_, c)| c.is_some_and(|c| c.lasso_certified))
        .map(|(n, _)| *n)
        .collect();
    let pass =
        r.lemma_survivors.count == 106 && all_found && distinct && rigid && lassoed.len() == 4;
    outcome(
        pass,
        format!(
            "connected {}, survivors {} (expected 106), classes {}, fixtures found {all_found}, \
             pairwise distinct {distinct}, non-cycles rigid {rigid}, lasso-certified {lassoed:?} (expected all four)",
            r.total_connected,
            r.lemma_survivors.count,
            r.class_count()
        ),
    )
}

fn criterion_6() -> Outcome {
    let r = run_catalog(9, &CatalogOptions::default()).unwrap();
    outcome(
        r.lemma_survivors.count == 2132,
        format!(
            "connected {}, survivors {} (expected 2132), classes {}",
            r.total_connected,
            r.lemma_survivors.count,
            r.class_count()
        ),
    )
}

fn criterion_7() -> Outcome {
    let rigid_ok = ["IMG7_2", "IMG8_1", "IMG8_2", "IMG8_3", "IMG8_4"]
        .iter()
        .all(|n| is_rigid(&img(n)));
    let cycles_ok = (4..=12).all(|m| !is_rigid(&DigitalImage::cycle(m).unwrap()));
    let klein = img("KLEIN");
    let swap = ImageMap::new(klein_swap());
    let klein_ok = !is_rigid(&klein)
        && is_continuous(&klein, &klein, &swap)
        && homotopic_maps(
            &klein,
            &klein,
            &ImageMap::identity(10),
            &swap,
            &SearchBudget::default(),
        )
        .unwrap()
        .witness()
        .is_some_and(|chain| chain.verify(&klein, &klein).is_ok());
    let x = img("IMG7_2");
    let listed = [
        (vec![1, 4, 6], vec![6, 3, 0, 2, 5]),
        (vec![0, 1, 4, 6], vec![6, 3, 0, 2, 5]),
        (vec![4, 6], vec![6, 3, 0, 2, 5]),
        (vec![4, 1, 2], vec![2, 5, 6, 3, 0]),
        (vec![6, 4, 1, 2], vec![2, 5, 6, 3, 0]),
    ];
    let valid = listed
        .iter()
        .filter(|(path, cycle)| {
            verify_lasso(
                &x,
                &Lasso {
                    path: path.clone(),
                    cycle: cycle.clone(),
                },
            )
        })
        .count();
    let certified = lasso_rigidity(&x).is_some();
    outcome(
        rigid_ok && cycles_ok && klein_ok && certified && valid == listed.len(),
        format!(
            "exact rigidity {rigid_ok}, cycles non-rigid {cycles_ok}, KLEIN swap ≃ id {klein_ok}, \
             IMG7_2 lasso certificate {certified}, listed lassos valid {valid}/{}",
            listed.len()
        ),
    )
}

fn criterion_8() -> Outcome {
    let x6 = img("X6");
    let c5 = DigitalImage::cycle(5).unwrap();
    let equivalent = are_homotopy_equivalent(&x6, &c5);
    let pointed = (0..6).all(|b| is_pointed_rigid(&x6, b).unwrap());
    let obstructed = (0..6).all(|b| {
        pointed_equivalence_obstruction(&x6, b, &c5)
            .unwrap()
            .is_some()
    });
    outcome(
        equivalent && pointed && obstructed,
        format!("X6 ≃ C5 {equivalent}, pointed rigid at all points {pointed}, no pointed equivalence {obstructed}"),
    )
}

fn criterion_9() -> Outcome {
    let checks = [
        ("inverse continuity", common::inverse_continuity(5)),
        ("path pulling", common::path_pulling_all_fixtures()),
        (
            "L_m additivity",
            common::lm_additivity(&["C5", "C6", "C7", "IMG7_1", "X6"], 8),
        ),
        (
            "L_m invariance",
            common::lm_invariance_under_reductions(7, 7),
        ),
        (
            "rotation vs search",
            common::rotation_matches_search(&["C5", "C6", "C7", "IMG7_1"], 5..=7, 2),
        ),
    ];
    let pass = checks.iter().all(|(_, r)| r.is_ok());
    let detail = checks
        .iter()
        .map(|(name, r)| match r {
            Ok(k) => format!("{name} {k} cases"),
            Err(e) => format!("{name} FAILED: {e}"),
        })
        .collect::<Vec<_>>()
        .join("; ");
    outcome(pass, detail)
}

fn criterion_10() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=7 {
        if connected_forms(n).unwrap() != connected_forms_exhaustive(n).unwrap() {
            bad.push(format!("generators differ at n = {n}"));
        }
    }
    let sizes: Vec<usize> = (6..=7).map(|n| connected_forms(n).unwrap().len()).collect();
    if sizes != [112, 853] {
        bad.push(format!("sizes {sizes:?}"));
    }
    let mut round_trips = 0;
    for n in 1..=8 {
        for g in enumerate_connected_graphs(n).unwrap() {
            let back = parse_graph6(&encode_graph6(&g)).unwrap();
            if back != g || canonical_form(&back) != canonical_form(&g) {
                bad.push(format!("graph6 round trip fails on {}", encode_graph6(&g)));
            }
            round_trips += 1;
        }
    }
    outcome(
        bad.is_empty(),
        if bad.is_empty() {
            format!("generators agree for n ≤ 7; {round_trips} graph6 round trips")
        } else {
            bad.join(", ")
        },
    )
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn main() {
    let criteria: [Criterion; 10] = [
        ("L_m tables of cycles", criterion_1, Duration::from_secs(1)),
        ("L_m of IMG7_1", criterion_2, Duration::from_secs(1)),
        ("small catalogs", criterion_3, Duration::from_secs(60)),
        ("appendix replay", criterion_4, Duration::from_secs(5)),
        ("n = 8 catalog", criterion_5, Duration::from_secs(600)),
        ("n = 9 survivors", criterion_6, Duration::from_secs(3600)),
        ("rigidity suite", criterion_7, Duration::from_secs(5)),
        (
            "pointed rigidity of X6",
            criterion_8,
            Duration::from_secs(1),
        ),
        ("property suites", criterion_9, Duration::from_secs(300)),
        (
            "generator cross-validation",
            criterion_10,
            Duration::from_secs(60),
        ),
    ];
    let mut failures = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut result = run();
        let elapsed = start.elapsed();
        if elapsed > *limit {
            result.pass = false;
            result
                .detail
                .push_str(&format!("; over time limit {limit:?}"));
        }
        if !result.pass {
            failures += 1;
        }
        println!(
            "criterion {:>2} {} {name}: {} [{:.2?}]",
            i + 1,
            if result.pass { "PASS" } else { "FAIL" },
            result.detail,
            elapsed
        );
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 && std::env::var("ACCEPTANCE_STRICT").is_ok_and(|v| v == "1") {
        std::process::exit(1);
    }
}
