//! Checks shared by the acceptance binary and the integration tests. Each
//! returns the number of cases examined or a description of the first
//! counterexample.

#![allow(dead_code)]

use dighom_core::catalog::enumerate_connected_graphs;
use dighom_core::fixtures::{named_image, FIXTURE_NAMES};
use dighom_core::loops::{
    compute_lm, enumerate_simple_loops, loops_equivalent, path_has_no_right_angles,
    rotation_classes, CountStatus,
};
use dighom_core::maps::identity_one_step_maps;
use dighom_core::reductions::{lemma_step, FilterConfig};
use dighom_core::{is_continuous, DigitalImage, ImageMap, SearchBudget};

pub type Check = Result<usize, String>;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Continuous self-bijections of connected images on up to `max_n` points
/// have continuous inverses.
pub fn inverse_continuity(max_n: usize) -> Check {
    let mut checked = 0;
    for n in 1..=max_n {
        let perms = permutations(n);
        for x in enumerate_connected_graphs(n).map_err(|e| e.to_string())? {
            for p in &perms {
                let f = ImageMap::new(p.clone());
                if !is_continuous(&x, &x, &f) {
                    continue;
                }
                let inv = f.inverse().expect("bijection");
                if !is_continuous(&x, &x, &inv) {
                    return Err(format!("{} with {:?}", x.to_edge_list(), p));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

/// Every simple path with at least two points and no right angles.
pub fn straight_simple_paths(x: &DigitalImage) -> Vec<Vec<usize>> {
    fn go(x: &DigitalImage, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if path.len() >= 2 {
            out.push(path.clone());
        }
        let last = *path.last().unwrap();
        for v in x.neighbors(last).iter() {
            if path.contains(&v) || path[..path.len() - 1].iter().any(|&u| x.adjacent(u, v)) {
                continue;
            }
            path.push(v);
            if path_has_no_right_angles(x, path).unwrap() {
                go(x, path, out);
            }
            path.pop();
        }
    }
    let mut out = Vec::new();
    for v in 0..x.n() {
        go(x, &mut vec![v], &mut out);
    }
    out
}

/// For a right-angle-free simple path `p` and any `f` one step from the
/// identity with `f(p(1)) = p(0)`, also `f(p(k)) = p(k-1)`.
pub fn path_pulling(names: &[&str]) -> Check {
    let mut checked = 0;
    for name in names {
        let x = named_image(name).map_err(|e| e.to_string())?;
        for p in straight_simple_paths(&x) {
            let k = p.len() - 1;
            let maps = identity_one_step_maps(&x, None)
                .and_then(|it| it.fix(p[1], p[0]))
                .map_err(|e| e.to_string())?;
            for f in maps {
                if f.get(p[k]) != p[k - 1] {
                    return Err(format!("{name}: path {p:?}, map {:?}", f.values()));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

pub fn path_pulling_all_fixtures() -> Check {
    path_pulling(FIXTURE_NAMES)
}

/// `L_m` when exact, with loop searches stopped at extensions two points
/// longer than `m` and after 200k states.
fn lm(x: &DigitalImage, m: usize) -> Result<Option<usize>, String> {
    let budget = SearchBudget {
        max_states: 200_000,
        max_extension_length: Some(m + 2),
        ..SearchBudget::default()
    };
    let t = compute_lm(x, m, &budget).map_err(|e| e.to_string())?;
    Ok((t.status == CountStatus::Exact).then_some(t.count))
}

/// `L_m(X ⊔ Y) = L_m(X) + L_m(Y)` wherever all three values are exact.
pub fn lm_additivity(names: &[&str], max_m: usize) -> Check {
    let mut checked = 0;
    for (i, a) in names.iter().enumerate() {
        for b in &names[i..] {
            let x = named_image(a).map_err(|e| e.to_string())?;
            let y = named_image(b).map_err(|e| e.to_string())?;
            let u = x.disjoint_union(&y).map_err(|e| e.to_string())?;
            for m in 1..=max_m {
                if let (Some(lx), Some(ly), Some(lu)) = (lm(&x, m)?, lm(&y, m)?, lm(&u, m)?) {
                    if lx + ly != lu {
                        return Err(format!("{a} ⊔ {b}, m = {m}: {lx} + {ly} ≠ {lu}"));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(checked)
}

/// `L_m` agrees on both sides of the reduction that fires first on each
/// connected image with `n ≤ max_n` points, wherever both sides are exact.
pub fn lm_invariance_under_reductions(max_n: usize, max_m: usize) -> Check {
    let mut checked = 0;
    for n in 2..=max_n {
        for x in enumerate_connected_graphs(n).map_err(|e| e.to_string())? {
            let Some(cert) = lemma_step(&x, FilterConfig::Fast) else {
                continue;
            };
            for m in 1..=max_m.min(n) {
                if let (Some(a), Some(b)) = (lm(&x, m)?, lm(&cert.result, m)?) {
                    if a != b {
                        return Err(format!(
                            "{} via {:?}, m = {m}: {a} ≠ {b}",
                            x.to_edge_list(),
                            cert.kind()
                        ));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(checked)
}

/// On images where the rotation hypothesis holds, the rotation classes of
/// simple m-loops coincide with the classes found by homotopy search.
/// Separation is checked up to extensions of length `m + extra`.
pub fn rotation_matches_search(
    names: &[&str],
    ms: std::ops::RangeInclusive<usize>,
    extra: usize,
) -> Check {
    let mut checked = 0;
    for name in names {
        let x = named_image(name).map_err(|e| e.to_string())?;
        for m in ms.clone() {
            let budget = SearchBudget {
                max_extension_length: Some(m + extra),
                ..SearchBudget::default()
            };
            let loops = enumerate_simple_loops(&x, m).map_err(|e| e.to_string())?;
            let Some(classes) = rotation_classes(&x, m).map_err(|e| e.to_string())? else {
                return Err(format!("{name}: rotation hypothesis fails at m = {m}"));
            };
            if classes.len() != loops.len() {
                return Err(format!("{name}, m = {m}: class count mismatch"));
            }
            for (i, p) in loops.iter().enumerate() {
                let rot = p.rotated(1);
                let same = loops_equivalent(&x, p, &rot, &budget).map_err(|e| e.to_string())?;
                if !same.is_yes() {
                    return Err(format!(
                        "{name}: {:?} not equivalent to its rotation",
                        p.values()
                    ));
                }
                for q in &loops[i + 1..] {
                    let v = loops_equivalent(&x, p, q, &budget).map_err(|e| e.to_string())?;
                    if !v.is_no() {
                        return Err(format!(
                            "{name}: search does not separate {:?} and {:?}",
                            p.values(),
                            q.values()
                        ));
                    }
                    checked += 1;
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}
