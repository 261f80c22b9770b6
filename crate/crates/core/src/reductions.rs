//! Lemma-based reductions with replayable certificates.
//!
//! Each rule produces a self-map `h` of the source image together with a
//! homotopy chain from `h` to the identity; the reduced image is the induced
//! subimage on `h(X)`. This is enough to rebuild a full homotopy equivalence
//! between source and result.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::image::DigitalImage;
use crate::maps::{
    is_continuous, one_step_related, EquivalenceCertificate, HomotopyChain, ImageMap,
};

/// Rule-specific data that justifies a reduction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReductionWitness {
    /// A complete subimage every point is adjacent to or in.
    DominatingClique { clique: Vec<usize> },
    /// `N[absorbed] ⊆ N[into]`.
    NeighborhoodAbsorption { absorbed: usize, into: usize },
    /// Parallel injective paths; `p` collapses onto `q`.
    PathReduction { p: Vec<usize>, q: Vec<usize> },
    /// A perfect elimination ordering of a connected chordal image.
    ChordalCollapse { elimination_order: Vec<usize> },
    /// A nonsurjective self-map one step from the identity.
    OneStepNonsurjective { map: ImageMap },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionKind {
    DominatingClique,
    NeighborhoodAbsorption,
    PathReduction,
    ChordalCollapse,
    OneStepNonsurjective,
}

impl ReductionWitness {
    pub fn kind(&self) -> ReductionKind {
        match self {
            ReductionWitness::DominatingClique { .. } => ReductionKind::DominatingClique,
            ReductionWitness::NeighborhoodAbsorption { .. } => {
                ReductionKind::NeighborhoodAbsorption
            }
            ReductionWitness::PathReduction { .. } => ReductionKind::PathReduction,
            ReductionWitness::ChordalCollapse { .. } => ReductionKind::ChordalCollapse,
            ReductionWitness::OneStepNonsurjective { .. } => ReductionKind::OneStepNonsurjective,
        }
    }
}

/// A witness plus the image it reduces to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionCertificate {
    pub witness: ReductionWitness,
    /// The reduced image, serialized as graph6.
    pub result: DigitalImage,
    /// `kept[i]` is the source vertex that became result vertex `i`.
    pub kept: Vec<usize>,
}

impl ReductionCertificate {
    /// Builds the certificate for `witness`, which is trusted here; call
    /// [`ReductionCertificate::verify`] to check it.
    pub fn from_retraction(source: &DigitalImage, witness: ReductionWitness) -> Self {
        let chain = retraction_chain(source, &witness);
        let (result, kept) = source.induced(chain.start().image_set());
        ReductionCertificate {
            witness,
            result,
            kept,
        }
    }

    pub fn kind(&self) -> ReductionKind {
        self.witness.kind()
    }

    /// The self-map `h` of the source whose image is the result.
    pub fn retraction(&self, source: &DigitalImage) -> ImageMap {
        retraction_chain(source, &self.witness).start().clone()
    }

    /// Homotopy from the retraction to the identity of the source.
    pub fn homotopy(&self, source: &DigitalImage) -> HomotopyChain {
        retraction_chain(source, &self.witness)
    }

    /// Re-checks the rule's hypotheses against `source` and replays the
    /// homotopy.
    pub fn verify(&self, source: &DigitalImage) -> Result<()> {
        check_witness(source, &self.witness)?;
        let chain = retraction_chain(source, &self.witness);
        chain.verify(source, source)?;
        if !chain.end().is_identity() {
            return Err(Error::Precondition(
                "homotopy must end at the identity".into(),
            ));
        }
        let (result, kept) = source.induced(chain.start().image_set());
        if result != self.result || kept != self.kept {
            return Err(Error::Precondition(
                "recorded result does not match the witness".into(),
            ));
        }
        if result.n() >= source.n() {
            return Err(Error::Precondition(
                "reduction does not remove any point".into(),
            ));
        }
        Ok(())
    }

    /// Homotopy equivalence between the source and the result: the
    /// retraction one way, the inclusion the other.
    pub fn equivalence(&self, source: &DigitalImage) -> Result<EquivalenceCertificate> {
        let chain = retraction_chain(source, &self.witness);
        let h = chain.start();
        let mut index = vec![usize::MAX; source.n()];
        for (i, &v) in self.kept.iter().enumerate() {
            index[v] = i;
        }
        let f = ImageMap::new(
            h.values()
                .iter()
                .map(|&v| {
                    let i = index[v];
                    if i == usize::MAX {
                        Err(Error::Precondition("retraction leaves the result".into()))
                    } else {
                        Ok(i)
                    }
                })
                .collect::<Result<_>>()?,
        );
        let g = ImageMap::new(self.kept.clone());
        let fg = crate::maps::compose(&f, &g)?;
        let id_y = ImageMap::identity(self.kept.len());
        let chain_fg = if fg == id_y {
            HomotopyChain::constant(id_y)
        } else {
            HomotopyChain::new(vec![fg, id_y])?
        };
        Ok(EquivalenceCertificate {
            f,
            g,
            chain_gf: chain,
            chain_fg,
        })
    }
}

fn dedup_chain(mut maps: Vec<ImageMap>) -> HomotopyChain {
    maps.dedup();
    HomotopyChain::new(maps).expect("nonempty")
}

/// Chain from the rule's retraction to the identity.
fn retraction_chain(source: &DigitalImage, witness: &ReductionWitness) -> HomotopyChain {
    let n = source.n();
    let id = ImageMap::identity(n);
    match witness {
        ReductionWitness::DominatingClique { clique } => {
            let s: VertexSet = clique.iter().copied().collect();
            // x goes to the first clique point it touches, then everything to
            // the first clique point
            let f: Vec<usize> = (0..n)
                .map(|x| {
                    source
                        .closed_neighborhood(x)
                        .intersection(s)
                        .first()
                        .unwrap_or(x)
                })
                .collect();
            let c = ImageMap::constant(n, clique.first().copied().unwrap_or(0));
            dedup_chain(vec![c, ImageMap::new(f), id])
        }
        ReductionWitness::NeighborhoodAbsorption { absorbed, into } => {
            let mut h = id.clone().into_values();
            if *absorbed < n {
                h[*absorbed] = *into;
            }
            dedup_chain(vec![ImageMap::new(h), id])
        }
        ReductionWitness::PathReduction { p, q } => {
            let mut h = id.clone().into_values();
            for (&a, &b) in p.iter().zip(q) {
                if a < n {
                    h[a] = b;
                }
            }
            dedup_chain(vec![ImageMap::new(h), id])
        }
        ReductionWitness::ChordalCollapse { elimination_order } => {
            // absorb each vertex into a later neighbor, composing as we go
            let mut position = vec![usize::MAX; n];
            for (i, &v) in elimination_order.iter().enumerate() {
                if v < n {
                    position[v] = i;
                }
            }
            let mut current = id.clone().into_values();
            let mut slices = vec![id.clone()];
            for &v in elimination_order
                .iter()
                .take(elimination_order.len().saturating_sub(1))
            {
                let Some(target) = source
                    .neighbors(v)
                    .iter()
                    .find(|&u| position[u] != usize::MAX && position[u] > position[v])
                else {
                    continue;
                };
                for x in current.iter_mut() {
                    if *x == v {
                        *x = target;
                    }
                }
                slices.push(ImageMap::new(current.clone()));
            }
            slices.reverse();
            dedup_chain(slices)
        }
        ReductionWitness::OneStepNonsurjective { map } => dedup_chain(vec![map.clone(), id]),
    }
}

fn check_witness(x: &DigitalImage, witness: &ReductionWitness) -> Result<()> {
    let fail = |msg: &str| Err(Error::Precondition(msg.to_string()));
    let n = x.n();
    let in_range = |vs: &[usize]| {
        vs.iter()
            .find(|&&v| v >= n)
            .map_or(Ok(()), |&v| Err(Error::VertexOutOfRange { vertex: v, n }))
    };
    match witness {
        ReductionWitness::DominatingClique { clique } => {
            in_range(clique)?;
            if clique.is_empty() || !is_clique(x, clique) {
                return fail("not a nonempty complete subimage");
            }
            if !is_dominating(x, clique) {
                return fail("some point is neither in nor adjacent to the clique");
            }
            Ok(())
        }
        ReductionWitness::NeighborhoodAbsorption { absorbed, into } => {
            in_range(&[*absorbed, *into])?;
            if absorbed == into
                || !x
                    .closed_neighborhood(*absorbed)
                    .is_subset(x.closed_neighborhood(*into))
            {
                return fail("closed neighborhoods are not nested");
            }
            Ok(())
        }
        ReductionWitness::PathReduction { p, q } => {
            in_range(p)?;
            in_range(q)?;
            if !path_pair_conditions(x, p, q) {
                return fail("path pair does not meet the path-reduction conditions");
            }
            Ok(())
        }
        ReductionWitness::ChordalCollapse { elimination_order } => {
            in_range(elimination_order)?;
            let mut sorted = elimination_order.clone();
            sorted.sort_unstable();
            if sorted != (0..n).collect::<Vec<_>>() {
                return fail("not an ordering of all points");
            }
            if !x.is_connected() {
                return fail("image is not connected");
            }
            if !is_perfect_elimination_ordering(x, elimination_order) {
                return fail("not a perfect elimination ordering");
            }
            Ok(())
        }
        ReductionWitness::OneStepNonsurjective { map } => {
            map.check_shape(x, x)?;
            if !is_continuous(x, x, map) {
                return fail("map is not continuous");
            }
            if !one_step_related(x, &ImageMap::identity(n), map)? {
                return fail("map is not one step from the identity");
            }
            if map.is_surjective_onto(n) {
                return fail("map is surjective");
            }
            Ok(())
        }
    }
}

fn is_clique(x: &DigitalImage, vs: &[usize]) -> bool {
    let s: VertexSet = vs.iter().copied().collect();
    vs.iter().all(|&v| s.without(v).is_subset(x.neighbors(v)))
}

fn is_dominating(x: &DigitalImage, vs: &[usize]) -> bool {
    let covered = vs.iter().fold(VertexSet::EMPTY, |acc, &v| {
        acc.union(x.closed_neighborhood(v))
    });
    covered == x.vertices()
}

/// Smallest dominating complete subimage, lexicographically first among those
/// of that size. Only fires on images of at least two points.
pub fn dominating_clique_reduction(x: &DigitalImage) -> Option<ReductionCertificate> {
    if x.n() < 2 {
        return None;
    }
    for size in 1..=x.n() {
        let mut chosen = Vec::with_capacity(size);
        if let Some(clique) = find_clique(x, size, 0, VertexSet::EMPTY, x.vertices(), &mut chosen) {
            return Some(ReductionCertificate::from_retraction(
                x,
                ReductionWitness::DominatingClique { clique },
            ));
        }
    }
    None
}

/// Lexicographic search for a dominating clique of exactly `size` points.
/// `candidates` holds the points adjacent to everything chosen so far.
fn find_clique(
    x: &DigitalImage,
    size: usize,
    from: usize,
    covered: VertexSet,
    candidates: VertexSet,
    chosen: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if chosen.len() == size {
        return (covered == x.vertices()).then(|| chosen.clone());
    }
    for v in candidates.iter().filter(|&v| v >= from) {
        chosen.push(v);
        let found = find_clique(
            x,
            size,
            v + 1,
            covered.union(x.closed_neighborhood(v)),
            candidates.intersection(x.neighbors(v)),
            chosen,
        );
        chosen.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// First pair `(x, y)` in lexicographic order with `x ≠ y` and `N[x] ⊆ N[y]`;
/// `x` is absorbed into `y`.
pub fn neighborhood_absorption(x: &DigitalImage) -> Option<ReductionCertificate> {
    let n = x.n();
    for a in 0..n {
        let na = x.closed_neighborhood(a);
        // a nesting partner must be a neighbor
        for b in x.neighbors(a).iter() {
            if na.is_subset(x.closed_neighborhood(b)) {
                return Some(ReductionCertificate::from_retraction(
                    x,
                    ReductionWitness::NeighborhoodAbsorption {
                        absorbed: a,
                        into: b,
                    },
                ));
            }
        }
    }
    None
}

/// Whether `(p, q)` meets the path-reduction hypotheses (containments read
/// non-strictly), removes at least one point, and collapses continuously.
pub fn path_pair_conditions(x: &DigitalImage, p: &[usize], q: &[usize]) -> bool {
    let n = x.n();
    if p.len() != q.len() || p.len() < 2 || p.iter().chain(q).any(|&v| v >= n) {
        return false;
    }
    let injective = |path: &[usize]| {
        let s: VertexSet = path.iter().copied().collect();
        s.len() == path.len() && path.windows(2).all(|w| x.adjacent(w[0], w[1]))
    };
    if !injective(p) || !injective(q) {
        return false;
    }
    let k = p.len() - 1;
    for i in 0..=k {
        if !x.adjacent_or_equal(p[i], q[i]) {
            return false;
        }
        let mut allowed = x.closed_neighborhood(q[i]);
        if i > 0 {
            allowed.insert(p[i - 1]);
        }
        if i < k {
            allowed.insert(p[i + 1]);
        }
        if !x.closed_neighborhood(p[i]).is_subset(allowed) {
            return false;
        }
    }
    let w: VertexSet = p.iter().copied().collect();
    let z: VertexSet = q.iter().copied().collect();
    if w.difference(z).is_empty() {
        return false;
    }
    let mut h: Vec<usize> = (0..n).collect();
    for (&a, &b) in p.iter().zip(q) {
        h[a] = b;
    }
    is_continuous(x, x, &ImageMap::new(h))
}

/// Searches parallel injective paths `p`, `q` on `k + 1` points for
/// `k = 1..=max_len`, shortest first, then least `(p, q)` lexicographically.
pub fn path_reduction_step(x: &DigitalImage, max_len: usize) -> Option<ReductionCertificate> {
    let n = x.n();
    for k in 1..=max_len.min(n.saturating_sub(1)) {
        let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
        let mut p = Vec::with_capacity(k + 1);
        let mut q = Vec::with_capacity(k + 1);
        for p0 in 0..n {
            if best.as_ref().is_some_and(|(bp, _)| bp[0] < p0) {
                break;
            }
            for q0 in x.closed_neighborhood(p0).iter() {
                p.push(p0);
                q.push(q0);
                extend_path_pair(x, k, &mut p, &mut q, &mut best);
                p.pop();
                q.pop();
            }
        }
        if let Some((p, q)) = best {
            return Some(ReductionCertificate::from_retraction(
                x,
                ReductionWitness::PathReduction { p, q },
            ));
        }
    }
    None
}

/// Extends `(p, q)` to `k + 1` points, keeping the least complete pair.
fn extend_path_pair(
    x: &DigitalImage,
    k: usize,
    p: &mut Vec<usize>,
    q: &mut Vec<usize>,
    best: &mut Option<(Vec<usize>, Vec<usize>)>,
) {
    let i = p.len() - 1;
    // points of N[p(i)] outside N[q(i)] ∪ {p(i-1)} must be p(i+1)
    let mut excess = x
        .closed_neighborhood(p[i])
        .difference(x.closed_neighborhood(q[i]));
    if i > 0 {
        excess.remove(p[i - 1]);
    }
    if i == k {
        if excess.is_empty() && path_pair_conditions(x, p, q) {
            let candidate = (p.clone(), q.clone());
            if best.as_ref().is_none_or(|b| candidate < *b) {
                *best = Some(candidate);
            }
        }
        return;
    }
    if excess.len() > 1 {
        return;
    }
    let used_p: VertexSet = p.iter().copied().collect();
    let used_q: VertexSet = q.iter().copied().collect();
    let mut next_p = x.neighbors(p[i]).difference(used_p);
    if let Some(forced) = excess.first() {
        next_p = next_p.intersection(VertexSet::singleton(forced));
    }
    for a in next_p.iter() {
        let next_q = x
            .neighbors(q[i])
            .difference(used_q)
            .intersection(x.closed_neighborhood(a));
        for b in next_q.iter() {
            p.push(a);
            q.push(b);
            extend_path_pair(x, k, p, q, best);
            p.pop();
            q.pop();
        }
    }
}

/// Maximum-cardinality search; the reverse of the visit order is a perfect
/// elimination ordering exactly when the image is chordal.
pub fn maximum_cardinality_search(x: &DigitalImage) -> Vec<usize> {
    let n = x.n();
    let mut weight = vec![0usize; n];
    let mut visited = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited.contains(v))
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unvisited vertex remains");
        visited.insert(v);
        order.push(v);
        for u in x.neighbors(v).difference(visited).iter() {
            weight[u] += 1;
        }
    }
    order.reverse();
    order
}

pub fn is_perfect_elimination_ordering(x: &DigitalImage, order: &[usize]) -> bool {
    let mut later = x.vertices();
    for &v in order {
        later.remove(v);
        let forward: Vec<usize> = x.neighbors(v).intersection(later).iter().collect();
        if !is_clique(x, &forward) {
            return false;
        }
    }
    true
}

pub fn is_chordal(x: &DigitalImage) -> bool {
    is_perfect_elimination_ordering(x, &maximum_cardinality_search(x))
}

/// Collapses a connected chordal image to a point. Chordal images have no
/// induced cycle of length four or more, which is exactly the hypothesis of
/// the collapse theorem.
pub fn chordal_collapse(x: &DigitalImage) -> Option<ReductionCertificate> {
    if x.n() < 2 || !x.is_connected() {
        return None;
    }
    let order = maximum_cardinality_search(x);
    is_perfect_elimination_ordering(x, &order).then(|| {
        ReductionCertificate::from_retraction(
            x,
            ReductionWitness::ChordalCollapse {
                elimination_order: order,
            },
        )
    })
}

/// Which rules [`lemma_reduce_fully`] may use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FilterConfig {
    /// Dominating cliques and neighborhood absorption only.
    #[default]
    Paper,
    /// Adds chordal collapse and path reduction.
    Fast,
}

impl std::fmt::Display for FilterConfig {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FilterConfig::Paper => "paper",
            FilterConfig::Fast => "fast",
        })
    }
}

impl std::str::FromStr for FilterConfig {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(FilterConfig::Paper),
            "fast" => Ok(FilterConfig::Fast),
            other => Err(Error::Precondition(format!(
                "unknown filter `{other}` (expected paper or fast)"
            ))),
        }
    }
}

/// First rule that fires on `x`, trying cliques, absorption, then (for the
/// fast configuration) chordal collapse and path reduction.
pub fn lemma_step(x: &DigitalImage, config: FilterConfig) -> Option<ReductionCertificate> {
    dominating_clique_reduction(x)
        .or_else(|| neighborhood_absorption(x))
        .or_else(|| match config {
            FilterConfig::Paper => None,
            FilterConfig::Fast => chordal_collapse(x).or_else(|| path_reduction_step(x, x.n())),
        })
}

/// Applies rules until none fires. Returns the final image, the map from its
/// vertices to source vertices, and the certificates in order.
pub fn lemma_reduce_fully(
    x: &DigitalImage,
    config: FilterConfig,
) -> (DigitalImage, Vec<usize>, Vec<ReductionCertificate>) {
    let mut current = x.clone();
    let mut kept: Vec<usize> = (0..x.n()).collect();
    let mut steps = Vec::new();
    while let Some(cert) = lemma_step(&current, config) {
        kept = cert.kept.iter().map(|&v| kept[v]).collect();
        current = cert.result.clone();
        steps.push(cert);
    }
    (current, kept, steps)
}
