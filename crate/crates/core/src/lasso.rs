//! Lasso certificates: a sufficient condition for rigidity.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::image::DigitalImage;
use crate::loops::{corner_is_straight, enumerate_simple_loops, is_simple_path, DigitalLoop};

/// A simple path `r` ending where a simple loop `p` starts (`r(k) = p(c_0)`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Lasso {
    pub path: Vec<usize>,
    #[serde(rename = "loop")]
    pub cycle: Vec<usize>,
}

/// Replays every clause of the lasso definition, including the absence of
/// right angles on the path, on the loop, and at the junction.
pub fn verify_lasso(x: &DigitalImage, lasso: &Lasso) -> bool {
    let (r, p) = (&lasso.path, &lasso.cycle);
    let m = p.len();
    if r.len() < 2 || m < 5 || r.last() != p.first() {
        return false;
    }
    if !is_simple_path(x, r) || !DigitalLoop::from_values(p.clone()).is_simple(x) {
        return false;
    }
    let before = r[r.len() - 2];
    let junction = r[r.len() - 1];
    let ends = [p[1], p[m - 1]];
    if ends.iter().any(|&e| e == before || x.adjacent(e, before)) {
        return false;
    }
    let path_straight = r
        .windows(3)
        .all(|w| corner_is_straight(x, w[0], w[1], w[2]));
    let loop_straight =
        (0..m).all(|i| corner_is_straight(x, p[(i + m - 1) % m], p[i], p[(i + 1) % m]));
    let junction_straight = ends
        .iter()
        .all(|&e| corner_is_straight(x, before, junction, e));
    path_straight && loop_straight && junction_straight
}

/// Right-angle-free simple loops of each length, rotated to start at each
/// of their points, for the lasso search.
struct LoopIndex {
    /// `by_root[m][v]`: loops of length `m` starting at `v`, sorted.
    by_root: Vec<Vec<Vec<Vec<usize>>>>,
}

impl LoopIndex {
    fn new(x: &DigitalImage) -> Self {
        let n = x.n();
        let mut by_root = vec![vec![Vec::new(); n]; n + 1];
        for (m, slot) in by_root.iter_mut().enumerate().skip(5) {
            for p in enumerate_simple_loops(x, m).expect("m ≥ 5") {
                let v = p.values();
                if !(0..m).all(|i| corner_is_straight(x, v[(i + m - 1) % m], v[i], v[(i + 1) % m]))
                {
                    continue;
                }
                for k in 0..m {
                    let rotated = p.rotated(k).values().to_vec();
                    slot[rotated[0]].push(rotated);
                }
            }
            for loops in slot.iter_mut() {
                loops.sort();
            }
        }
        LoopIndex { by_root }
    }
}

/// Simple right-angle-free paths on `k + 1` points extending `prefix`, in
/// lexicographic order.
fn straight_paths(x: &DigitalImage, prefix: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if prefix.len() == k + 1 {
        out.push(prefix.clone());
        return;
    }
    let last = *prefix.last().expect("nonempty");
    for v in x.neighbors(last).iter() {
        if prefix.contains(&v) {
            continue;
        }
        // no chords back to earlier points
        if prefix[..prefix.len() - 1].iter().any(|&u| x.adjacent(u, v)) {
            continue;
        }
        if prefix.len() >= 2 && !corner_is_straight(x, prefix[prefix.len() - 2], last, v) {
            continue;
        }
        prefix.push(v);
        straight_paths(x, prefix, k, out);
        prefix.pop();
    }
}

fn search(x: &DigitalImage, index: &LoopIndex, x_cur: usize, x_prev: usize) -> Option<Lasso> {
    let n = x.n();
    for k in 1..n {
        let mut paths = Vec::new();
        straight_paths(x, &mut vec![x_prev, x_cur], k, &mut paths);
        if paths.is_empty() {
            // longer paths extend shorter ones, so none exist either
            return None;
        }
        for m in 5..=n {
            for path in &paths {
                let root = *path.last().expect("nonempty");
                for cycle in &index.by_root[m][root] {
                    let lasso = Lasso {
                        path: path.clone(),
                        cycle: cycle.clone(),
                    };
                    if verify_lasso(x, &lasso) {
                        return Some(lasso);
                    }
                }
            }
        }
    }
    None
}

/// The first right-angle-free lasso whose path starts `x_prev, x`: shortest
/// path, then shortest loop, then lexicographic.
pub fn find_lasso(x: &DigitalImage, x_cur: usize, x_prev: usize) -> Result<Option<Lasso>> {
    for v in [x_cur, x_prev] {
        if v >= x.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: x.n(),
            });
        }
    }
    if !x.adjacent(x_cur, x_prev) {
        return Err(Error::Precondition(format!(
            "{x_prev} and {x_cur} are not adjacent"
        )));
    }
    Ok(search(x, &LoopIndex::new(x), x_cur, x_prev))
}

/// One lasso per ordered adjacent pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RigidityCertificate {
    pub lassos: Vec<PairLasso>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairLasso {
    /// `(r(0), r(1))`.
    pub pair: (usize, usize),
    #[serde(flatten)]
    pub lasso: Lasso,
}

impl RigidityCertificate {
    /// Every lasso verifies, starts with its pair, and every ordered adjacent
    /// pair is covered.
    pub fn verify(&self, x: &DigitalImage) -> bool {
        let mut covered = std::collections::HashSet::new();
        for entry in &self.lassos {
            let (a, b) = entry.pair;
            if entry.lasso.path.first() != Some(&a)
                || entry.lasso.path.get(1) != Some(&b)
                || !verify_lasso(x, &entry.lasso)
            {
                return false;
            }
            covered.insert(entry.pair);
        }
        x.edges()
            .into_iter()
            .all(|(u, v)| covered.contains(&(u, v)) && covered.contains(&(v, u)))
    }
}

/// Some when every ordered adjacent pair has a lasso, which proves rigidity.
/// None says nothing about rigidity.
pub fn lasso_rigidity(x: &DigitalImage) -> Option<RigidityCertificate> {
    let index = LoopIndex::new(x);
    let mut lassos = Vec::new();
    for (u, v) in x.edges() {
        for (a, b) in [(u, v), (v, u)] {
            let lasso = search(x, &index, b, a)?;
            lassos.push(PairLasso {
                pair: (a, b),
                lasso,
            });
        }
    }
    lassos.sort_by_key(|e| e.pair);
    Some(RigidityCertificate { lassos })
}
