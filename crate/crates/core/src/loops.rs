//! Loops and paths in an image, trivial extensions, loop equivalence and the
//! loop-counting invariant `L_m`.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::image::DigitalImage;
use crate::maps::{Exhaustion, HomotopyChain, ImageMap, OneStepMaps, SearchBudget, Verdict};

/// An m-loop: a continuous map `C_m → X`, stored as its values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DigitalLoop {
    values: Vec<usize>,
}

/// A path: a continuous map `[0,k] → X`, stored as its `k + 1` values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DigitalPath {
    values: Vec<usize>,
}

fn check_range(x: &DigitalImage, values: &[usize]) -> Result<()> {
    match values.iter().find(|&&v| v >= x.n()) {
        Some(&v) => Err(Error::VertexOutOfRange {
            vertex: v,
            n: x.n(),
        }),
        None => Ok(()),
    }
}

impl DigitalLoop {
    /// Checks continuity from `C_m` (consecutive values cyclically adjacent
    /// or equal).
    pub fn new(x: &DigitalImage, values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyCycle);
        }
        check_range(x, &values)?;
        let m = values.len();
        if let Some(i) = (0..m).find(|&i| !x.adjacent_or_equal(values[i], values[(i + 1) % m])) {
            return Err(Error::Precondition(format!(
                "loop is not continuous between positions {i} and {}",
                (i + 1) % m
            )));
        }
        Ok(DigitalLoop { values })
    }

    pub(crate) fn from_values(values: Vec<usize>) -> Self {
        DigitalLoop { values }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Length `m` of the domain `C_m`.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn as_map(&self) -> ImageMap {
        ImageMap::new(self.values.clone())
    }

    /// `c_i ↦ p(c_{i+k})`.
    pub fn rotated(&self, k: usize) -> Self {
        let m = self.values.len();
        DigitalLoop {
            values: (0..m).map(|i| self.values[(i + k) % m]).collect(),
        }
    }

    /// `c_i ↦ p(c_{-i})`, the same points traversed the other way from the
    /// same root.
    pub fn reversed(&self) -> Self {
        let m = self.values.len();
        DigitalLoop {
            values: (0..m).map(|i| self.values[(m - i) % m]).collect(),
        }
    }

    /// Lexicographically least rotation.
    pub fn canonical_rotation(&self) -> Self {
        (0..self.len())
            .map(|k| self.rotated(k))
            .min()
            .unwrap_or_else(|| self.clone())
    }

    /// Injective, consecutive points adjacent, and no other adjacencies
    /// among its points.
    pub fn is_simple(&self, x: &DigitalImage) -> bool {
        let m = self.len();
        if m < 3 || check_range(x, &self.values).is_err() {
            return false;
        }
        let s: VertexSet = self.values.iter().copied().collect();
        s.len() == m
            && (0..m).all(|i| {
                let expected = VertexSet::singleton(self.values[(i + 1) % m])
                    .with(self.values[(i + m - 1) % m]);
                x.neighbors(self.values[i]).intersection(s) == expected
            })
    }
}

impl DigitalPath {
    pub fn new(x: &DigitalImage, values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Precondition(
                "a path needs at least one point".into(),
            ));
        }
        check_range(x, &values)?;
        if let Some(i) = (1..values.len()).find(|&i| !x.adjacent_or_equal(values[i - 1], values[i]))
        {
            return Err(Error::Precondition(format!(
                "path is not continuous between positions {} and {i}",
                i - 1
            )));
        }
        Ok(DigitalPath { values })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// The endpoint `k` of the domain `[0,k]`.
    pub fn length(&self) -> usize {
        self.values.len() - 1
    }

    /// Injective, consecutive points adjacent, and no other adjacencies.
    pub fn is_simple(&self, x: &DigitalImage) -> bool {
        is_simple_path(x, &self.values)
    }
}

pub(crate) fn is_simple_path(x: &DigitalImage, values: &[usize]) -> bool {
    if values.is_empty() || check_range(x, values).is_err() {
        return false;
    }
    let s: VertexSet = values.iter().copied().collect();
    let k = values.len();
    s.len() == k
        && (0..k).all(|i| {
            let mut expected = VertexSet::EMPTY;
            if i > 0 {
                expected.insert(values[i - 1]);
            }
            if i + 1 < k {
                expected.insert(values[i + 1]);
            }
            x.neighbors(values[i]).intersection(s) == expected
        })
}

/// Whether the corner `a – b – c` is free of right angles: `b` is the only
/// point adjacent to both `a` and `c`.
#[inline]
pub fn corner_is_straight(x: &DigitalImage, a: usize, b: usize, c: usize) -> bool {
    a != c && x.neighbors(a).intersection(x.neighbors(c)) == VertexSet::singleton(b)
}

/// Right-angle test for a simple path.
pub fn path_has_no_right_angles(x: &DigitalImage, path: &[usize]) -> Result<bool> {
    if !is_simple_path(x, path) {
        return Err(Error::NotSimple(format!("{path:?}")));
    }
    Ok(path
        .windows(3)
        .all(|w| corner_is_straight(x, w[0], w[1], w[2])))
}

/// Right-angle test for a simple loop, corners taken cyclically.
pub fn loop_has_no_right_angles(x: &DigitalImage, p: &DigitalLoop) -> Result<bool> {
    if !p.is_simple(x) {
        return Err(Error::NotSimple(format!("{:?}", p.values)));
    }
    Ok(loop_corners_straight(x, &p.values))
}

fn loop_corners_straight(x: &DigitalImage, v: &[usize]) -> bool {
    let m = v.len();
    (0..m).all(|i| corner_is_straight(x, v[(i + m - 1) % m], v[i], v[(i + 1) % m]))
}

fn edge_in_triangle(x: &DigitalImage, u: usize, v: usize) -> bool {
    !x.neighbors(u).intersection(x.neighbors(v)).is_empty()
}

/// All simple m-loops for `m ≥ 3`: both orientations of every induced
/// m-cycle, each rooted at its least point.
pub fn enumerate_simple_loops(x: &DigitalImage, m: usize) -> Result<Vec<DigitalLoop>> {
    if m < 3 {
        return Err(Error::Precondition(format!(
            "simple loops are enumerated for m ≥ 3, got {m}"
        )));
    }
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(m);
    for root in 0..x.n() {
        // only points above the root, so each cycle is rooted at its minimum
        let allowed = x.vertices().difference(VertexSet::full(root + 1));
        path.push(root);
        grow_induced(x, m, allowed, VertexSet::EMPTY, &mut path, &mut out);
        path.pop();
    }
    out.sort();
    Ok(out)
}

/// `blocked` holds the points adjacent to some interior path point, which
/// can no longer be used without creating a chord.
fn grow_induced(
    x: &DigitalImage,
    m: usize,
    allowed: VertexSet,
    blocked: VertexSet,
    path: &mut Vec<usize>,
    out: &mut Vec<DigitalLoop>,
) {
    let root = path[0];
    let last = *path.last().expect("nonempty");
    if path.len() == m {
        if x.adjacent(last, root) {
            out.push(DigitalLoop::from_values(path.clone()));
        }
        return;
    }
    let on_path: VertexSet = path.iter().copied().collect();
    let mut candidates = x
        .neighbors(last)
        .intersection(allowed)
        .difference(on_path)
        .difference(blocked);
    let closing = path.len() + 1 == m;
    if closing {
        candidates = candidates.intersection(x.neighbors(root));
    } else if path.len() > 1 {
        // only the closing step may touch the root again
        candidates = candidates.difference(x.neighbors(root));
    }
    for v in candidates.iter() {
        let interior_block = if path.len() > 1 {
            x.neighbors(last)
        } else {
            VertexSet::EMPTY
        };
        path.push(v);
        grow_induced(x, m, allowed, blocked.union(interior_block), path, out);
        path.pop();
    }
}

/// The trivial extension of `p` to length `n` with every pause at the final
/// point.
pub fn trivial_extension(p: &DigitalLoop, n: usize) -> Result<DigitalLoop> {
    if n < p.len() {
        return Err(Error::Precondition(format!(
            "cannot extend a {}-loop to length {n}",
            p.len()
        )));
    }
    let mut values = p.values.clone();
    let last = *values.last().ok_or(Error::EmptyCycle)?;
    values.resize(n, last);
    Ok(DigitalLoop { values })
}

/// Removes cyclically consecutive repeated points; a constant loop reduces to
/// a 1-loop.
pub fn cyclic_reduce(p: &DigitalLoop) -> DigitalLoop {
    let mut v = p.values.clone();
    v.dedup();
    while v.len() > 1 && v.first() == v.last() {
        v.pop();
    }
    DigitalLoop { values: v }
}

fn extension_bound(x: &DigitalImage, longest: usize, budget: &SearchBudget) -> usize {
    budget
        .max_extension_length
        .unwrap_or(longest + x.n())
        .max(longest)
}

enum LoopSearch {
    Found(HomotopyChain),
    Exhausted,
    OutOfBudget(String),
}

/// Breadth-first search over continuous n-loops from `start`, with loops
/// identified up to rotation of the domain (a loop is one step from each of
/// its unit rotations, so rotation classes are unions of homotopy classes'
/// members). Returns the chain of actual loops ending at the first loop that
/// satisfies `is_target`.
fn search_loops(
    x: &DigitalImage,
    start: &DigitalLoop,
    budget: &SearchBudget,
    states_used: &mut usize,
    mut is_target: impl FnMut(&[usize]) -> bool,
) -> LoopSearch {
    let n = start.len();
    let domain = DigitalImage::cycle(n).expect("n ≥ 1");
    if is_target(&start.values) {
        return LoopSearch::Found(HomotopyChain::constant(start.as_map()));
    }
    let mut loops: Vec<ImageMap> = vec![start.as_map()];
    let mut meta: Vec<(usize, usize)> = vec![(usize::MAX, 1)];
    let mut seen: HashSet<DigitalLoop> = HashSet::new();
    seen.insert(start.canonical_rotation());
    let mut queue = VecDeque::from([0usize]);
    let mut truncated = false;
    while let Some(i) = queue.pop_front() {
        let depth = meta[i].1;
        if depth >= budget.max_chain_length {
            truncated = true;
            continue;
        }
        let current = loops[i].clone();
        for g in OneStepMaps::new(&domain, x, &current).expect("shape checked") {
            let key = DigitalLoop::from_values(g.values().to_vec()).canonical_rotation();
            if seen.contains(&key) {
                continue;
            }
            if *states_used + seen.len() >= budget.max_states {
                return LoopSearch::OutOfBudget(format!(
                    "visited {} loops without deciding",
                    *states_used + seen.len()
                ));
            }
            seen.insert(key);
            let j = loops.len();
            let hit = is_target(g.values());
            loops.push(g);
            meta.push((i, depth + 1));
            if hit {
                let mut path = vec![j];
                let mut k = j;
                while meta[k].0 != usize::MAX {
                    k = meta[k].0;
                    path.push(k);
                }
                path.reverse();
                let maps = path.into_iter().map(|k| loops[k].clone()).collect();
                *states_used += seen.len();
                return LoopSearch::Found(HomotopyChain::new(maps).expect("nonempty"));
            }
            queue.push_back(j);
        }
    }
    *states_used += seen.len();
    if truncated {
        LoopSearch::OutOfBudget(format!(
            "loop homotopies longer than {} steps were not explored",
            budget.max_chain_length
        ))
    } else {
        LoopSearch::Exhausted
    }
}

/// Extends `chain` by unit rotations of the domain until it ends at `target`,
/// which must be a rotation of its current end.
fn rotate_into(chain: HomotopyChain, target: &[usize]) -> HomotopyChain {
    let end = DigitalLoop::from_values(chain.end().values().to_vec());
    let n = end.len();
    let Some(k) = (0..n).find(|&k| end.rotated(k).values == target) else {
        return chain;
    };
    let steps: Vec<ImageMap> = if k <= n - k {
        (1..=k).map(|s| end.rotated(s).as_map()).collect()
    } else {
        (1..=n - k).map(|s| end.rotated(n - s).as_map()).collect()
    };
    let mut maps = chain.maps().to_vec();
    maps.extend(steps);
    HomotopyChain::new(maps).expect("nonempty")
}

/// Decides `p ≈ q` by searching, for each length `n` from the longer loop's
/// length up to the extension bound, the homotopy class of the trivial
/// extension of `p` for the trivial extension of `q` or any rotation of it.
///
/// A `Yes` carries a homotopy between the two length-`n` extensions. `No`
/// only certifies that no extension up to the bound works.
pub fn loops_equivalent(
    x: &DigitalImage,
    p: &DigitalLoop,
    q: &DigitalLoop,
    budget: &SearchBudget,
) -> Result<Verdict<HomotopyChain>> {
    budget.validate()?;
    for l in [p, q] {
        DigitalLoop::new(x, l.values.clone())?;
    }
    let longest = p.len().max(q.len());
    let bound = extension_bound(x, longest, budget);
    let mut used = 0;
    let mut unknown = None;
    for n in longest..=bound {
        let pn = trivial_extension(p, n)?;
        let qn = trivial_extension(q, n)?;
        let targets: HashSet<Vec<usize>> = (0..n).map(|k| qn.rotated(k).values).collect();
        match search_loops(x, &pn, budget, &mut used, |v| targets.contains(v)) {
            LoopSearch::Found(chain) => return Ok(Verdict::Yes(rotate_into(chain, &qn.values))),
            LoopSearch::Exhausted => {}
            LoopSearch::OutOfBudget(reason) => {
                unknown = Some(reason);
                break;
            }
        }
    }
    Ok(match unknown {
        Some(reason) => Verdict::Unknown(reason),
        None => Verdict::No(Exhaustion::UpToExtension(bound)),
    })
}

/// Whether `p` is ≈ some shorter loop. `Yes` carries a homotopy from a
/// trivial extension of `p` to a loop whose pauses, once removed, leave fewer
/// than `len(p)` points; `No` means none was found up to the extension bound.
pub fn loop_reducible(
    x: &DigitalImage,
    p: &DigitalLoop,
    budget: &SearchBudget,
) -> Result<Verdict<HomotopyChain>> {
    budget.validate()?;
    DigitalLoop::new(x, p.values.clone())?;
    let m = p.len();
    let bound = extension_bound(x, m, budget);
    let mut used = 0;
    for n in m..=bound {
        let pn = trivial_extension(p, n)?;
        let shorter = |v: &[usize]| cyclic_reduce(&DigitalLoop::from_values(v.to_vec())).len() < m;
        match search_loops(x, &pn, budget, &mut used, shorter) {
            LoopSearch::Found(chain) => return Ok(Verdict::Yes(chain)),
            LoopSearch::Exhausted => {}
            LoopSearch::OutOfBudget(reason) => return Ok(Verdict::Unknown(reason)),
        }
    }
    Ok(Verdict::No(Exhaustion::UpToExtension(bound)))
}

/// Whether every simple m-loop is right-angle free with no edge on a
/// triangle. Under this hypothesis homotopic simple m-loops are rotations of
/// one another.
pub fn rotation_hypothesis_holds(x: &DigitalImage, loops: &[DigitalLoop]) -> bool {
    loops.iter().all(|p| {
        let v = &p.values;
        let m = v.len();
        loop_corners_straight(x, v) && (0..m).all(|i| !edge_in_triangle(x, v[i], v[(i + 1) % m]))
    })
}

/// Exact classes of simple m-loops when the rotation hypothesis holds: one
/// class per oriented loop up to rotation. `None` when it does not apply.
pub fn rotation_classes(x: &DigitalImage, m: usize) -> Result<Option<Vec<DigitalLoop>>> {
    let loops = enumerate_simple_loops(x, m)?;
    Ok(rotation_hypothesis_holds(x, &loops).then_some(loops))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CountStatus {
    Exact,
    /// Some loop was kept as irreducible, or two loops were kept apart, on
    /// the strength of a bounded search; the true value can only be smaller.
    UpperBound,
}

/// `L_m` with one representative per class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LoopClassTable {
    pub m: usize,
    pub count: usize,
    pub status: CountStatus,
    /// Representative vertex sequences, empty for `m ≤ 4`.
    pub representatives: Vec<DigitalLoop>,
}

/// Union-find over loop indices.
struct Classes(Vec<usize>);

impl Classes {
    fn find(&mut self, i: usize) -> usize {
        let mut r = i;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut j = i;
        while self.0[j] != r {
            let next = self.0[j];
            self.0[j] = r;
            j = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.0[hi] = lo;
        }
    }
}

/// The number of ≈-classes of simple irreducible m-loops.
///
/// `m = 1` counts components and `m = 2, 3, 4` give zero. For larger `m` the
/// rotation classes are exact when the rotation hypothesis holds; otherwise
/// loops are screened for reducibility and grouped by [`loops_equivalent`].
pub fn compute_lm(x: &DigitalImage, m: usize, budget: &SearchBudget) -> Result<LoopClassTable> {
    budget.validate()?;
    let table = |count, status, representatives| LoopClassTable {
        m,
        count,
        status,
        representatives,
    };
    match m {
        0 => Err(Error::Precondition("L_m is defined for m ≥ 1".into())),
        1 => Ok(table(x.components().count, CountStatus::Exact, Vec::new())),
        2..=4 => Ok(table(0, CountStatus::Exact, Vec::new())),
        _ => {
            let loops = enumerate_simple_loops(x, m)?;
            if rotation_hypothesis_holds(x, &loops) {
                return Ok(table(loops.len(), CountStatus::Exact, loops));
            }
            let mut exact = true;
            let mut irreducible = Vec::new();
            for p in loops {
                match loop_reducible(x, &p, budget)? {
                    Verdict::Yes(_) => {}
                    Verdict::No(_) | Verdict::Unknown(_) => {
                        exact = false;
                        irreducible.push(p);
                    }
                }
            }
            let mut classes = Classes((0..irreducible.len()).collect());
            for i in 0..irreducible.len() {
                for j in i + 1..irreducible.len() {
                    if classes.find(i) == classes.find(j) {
                        continue;
                    }
                    match loops_equivalent(x, &irreducible[i], &irreducible[j], budget)? {
                        Verdict::Yes(_) => classes.union(i, j),
                        _ => exact = false,
                    }
                }
            }
            let mut reps: HashMap<usize, DigitalLoop> = HashMap::new();
            for (i, p) in irreducible.iter().enumerate() {
                let root = classes.find(i);
                reps.entry(root).or_insert_with(|| p.clone());
            }
            let mut representatives: Vec<DigitalLoop> = reps.into_values().collect();
            representatives.sort();
            let status = if exact {
                CountStatus::Exact
            } else {
                CountStatus::UpperBound
            };
            Ok(table(representatives.len(), status, representatives))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::named_image;

    fn lp(v: &[usize]) -> DigitalLoop {
        DigitalLoop::from_values(v.to_vec())
    }

    #[test]
    fn simple_loops_of_cycles() {
        let c5 = DigitalImage::cycle(5).unwrap();
        let loops = enumerate_simple_loops(&c5, 5).unwrap();
        assert_eq!(loops, vec![lp(&[0, 1, 2, 3, 4]), lp(&[0, 4, 3, 2, 1])]);
        assert!(enumerate_simple_loops(&c5, 4).unwrap().is_empty());
        assert!(enumerate_simple_loops(&c5, 2).is_err());
        let k4 = DigitalImage::complete(4).unwrap();
        assert_eq!(enumerate_simple_loops(&k4, 3).unwrap().len(), 8);
        assert!(enumerate_simple_loops(&k4, 4).unwrap().is_empty());
    }

    #[test]
    fn simple_loops_of_img7_1() {
        let x = named_image("IMG7_1").unwrap();
        assert_eq!(enumerate_simple_loops(&x, 5).unwrap().len(), 4);
        assert_eq!(enumerate_simple_loops(&x, 6).unwrap().len(), 2);
        assert_eq!(enumerate_simple_loops(&x, 4).unwrap().len(), 0);
        assert_eq!(enumerate_simple_loops(&x, 7).unwrap().len(), 0);
    }

    #[test]
    fn right_angles() {
        let c5 = DigitalImage::cycle(5).unwrap();
        assert!(path_has_no_right_angles(&c5, &[0, 1, 2, 3]).unwrap());
        let c4 = DigitalImage::cycle(4).unwrap();
        assert!(!path_has_no_right_angles(&c4, &[0, 1, 2]).unwrap());
        assert!(path_has_no_right_angles(&c4, &[0, 2]).is_err());
        let klein = named_image("KLEIN").unwrap();
        // the crossing edges put every inner corner on a 4-loop, e.g. 4–0–1 with 6 and 9
        assert!(!loop_has_no_right_angles(&klein, &lp(&[0, 1, 2, 3, 4])).unwrap());
        assert!(!corner_is_straight(&klein, 4, 0, 1));
    }

    #[test]
    fn extensions_and_reduction() {
        let p = lp(&[0, 1, 2, 3, 4]);
        assert_eq!(trivial_extension(&p, 5).unwrap(), p);
        assert_eq!(
            trivial_extension(&p, 7).unwrap(),
            lp(&[0, 1, 2, 3, 4, 4, 4])
        );
        assert!(trivial_extension(&p, 4).is_err());
        assert_eq!(cyclic_reduce(&trivial_extension(&p, 9).unwrap()), p);
        assert_eq!(cyclic_reduce(&lp(&[0, 1, 1, 2, 0, 0])), lp(&[0, 1, 2]));
        assert_eq!(cyclic_reduce(&lp(&[3, 3, 3, 3])), lp(&[3]));
        assert_eq!(cyclic_reduce(&p), p);
    }

    #[test]
    fn equivalence_on_c5() {
        let c5 = DigitalImage::cycle(5).unwrap();
        let p = lp(&[0, 1, 2, 3, 4]);
        let budget = SearchBudget::default();
        assert!(loops_equivalent(&c5, &p, &p, &budget).unwrap().is_yes());
        let chain = loops_equivalent(&c5, &p, &p.rotated(2), &budget).unwrap();
        let chain = chain.witness().unwrap();
        chain.verify(&DigitalImage::cycle(5).unwrap(), &c5).unwrap();
        assert_eq!(chain.end().values(), p.rotated(2).values());
        assert_eq!(
            loops_equivalent(&c5, &p, &p.reversed(), &budget).unwrap(),
            Verdict::No(Exhaustion::UpToExtension(10))
        );
    }

    #[test]
    fn four_loops_reduce() {
        let c4 = DigitalImage::cycle(4).unwrap();
        let v = loop_reducible(&c4, &lp(&[0, 1, 2, 3]), &SearchBudget::default()).unwrap();
        assert!(v.is_yes());
        let c5 = DigitalImage::cycle(5).unwrap();
        let v = loop_reducible(&c5, &lp(&[0, 1, 2, 3, 4]), &SearchBudget::default()).unwrap();
        assert!(v.is_no());
    }

    #[test]
    fn lm_of_cycles() {
        let budget = SearchBudget::default();
        for m in 5..=8 {
            let c = DigitalImage::cycle(m).unwrap();
            for i in 1..=8 {
                let t = compute_lm(&c, i, &budget).unwrap();
                let expected = match i {
                    1 => 1,
                    _ if i == m => 2,
                    _ => 0,
                };
                assert_eq!(
                    (t.count, t.status),
                    (expected, CountStatus::Exact),
                    "C{m} L{i}"
                );
            }
        }
    }

    #[test]
    fn rotation_classes_match_search() {
        let budget = SearchBudget::default();
        let x = named_image("IMG7_1").unwrap();
        assert_eq!(rotation_classes(&x, 5).unwrap().unwrap().len(), 4);
        assert_eq!(rotation_classes(&x, 6).unwrap().unwrap().len(), 2);
        let c6 = DigitalImage::cycle(6).unwrap();
        let loops = rotation_classes(&c6, 6).unwrap().unwrap();
        assert!(loops_equivalent(&c6, &loops[0], &loops[1], &budget)
            .unwrap()
            .is_no());
    }

    #[test]
    fn nested_outer_loop_shrinks_at_length_six() {
        let x = named_image("NESTED").unwrap();
        let outer = lp(&[0, 1, 2, 3, 4, 5]);
        let inner = lp(&[6, 7, 8, 9, 10]);
        let budget = SearchBudget::default();
        let v = loops_equivalent(&x, &outer, &inner, &budget).unwrap();
        let chain = v.witness().expect("outer and inner loops are equivalent");
        assert_eq!(chain.start().len(), 6);
        chain.verify(&DigitalImage::cycle(6).unwrap(), &x).unwrap();
        assert!(loop_reducible(&x, &outer, &budget).unwrap().is_yes());
    }
}
