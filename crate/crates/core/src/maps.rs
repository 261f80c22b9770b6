//! Maps between images, continuity, one-step homotopy, and the exact
//! decision procedures built on one-step search: reducibility, rigidity,
//! pointed rigidity, cores and homotopy equivalence.

use std::collections::HashMap;
use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::canon::are_isomorphic;
use crate::error::{Error, Result};
use crate::image::DigitalImage;
use crate::reductions::{ReductionCertificate, ReductionWitness};

/// A total function between the vertex sets of two images: vertex `x` of the
/// domain is sent to `values[x]` in the codomain. Serialized as a bare array.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ImageMap {
    values: Vec<usize>,
}

impl ImageMap {
    pub fn new(values: Vec<usize>) -> Self {
        ImageMap { values }
    }

    pub fn identity(n: usize) -> Self {
        ImageMap {
            values: (0..n).collect(),
        }
    }

    pub fn constant(n: usize, value: usize) -> Self {
        ImageMap {
            values: vec![value; n],
        }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn into_values(self) -> Vec<usize> {
        self.values
    }

    /// Size of the domain.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    #[inline]
    pub fn get(&self, x: usize) -> usize {
        self.values[x]
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// The set of values taken.
    pub fn image_set(&self) -> VertexSet {
        self.values.iter().copied().collect()
    }

    pub fn is_surjective_onto(&self, n: usize) -> bool {
        self.image_set() == VertexSet::full(n)
    }

    /// Checks that the map is total from `domain` into `codomain`.
    pub fn check_shape(&self, domain: &DigitalImage, codomain: &DigitalImage) -> Result<()> {
        if self.values.len() != domain.n() {
            return Err(Error::DomainMismatch {
                expected: domain.n(),
                found: self.values.len(),
            });
        }
        if let Some(&v) = self.values.iter().find(|&&v| v >= codomain.n()) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: codomain.n(),
            });
        }
        Ok(())
    }

    /// Inverse of a bijection, if this is one onto `0..len`.
    pub fn inverse(&self) -> Option<ImageMap> {
        let n = self.values.len();
        let mut inv = vec![usize::MAX; n];
        for (x, &y) in self.values.iter().enumerate() {
            if y >= n || inv[y] != usize::MAX {
                return None;
            }
            inv[y] = x;
        }
        Some(ImageMap { values: inv })
    }
}

impl From<Vec<usize>> for ImageMap {
    fn from(values: Vec<usize>) -> Self {
        ImageMap { values }
    }
}

/// Whether `f` sends every edge of `domain` to an edge or a single point.
pub fn is_continuous(domain: &DigitalImage, codomain: &DigitalImage, f: &ImageMap) -> bool {
    if f.check_shape(domain, codomain).is_err() {
        return false;
    }
    domain
        .edges()
        .into_iter()
        .all(|(u, v)| codomain.adjacent_or_equal(f.get(u), f.get(v)))
}

/// `g ∘ f`. Fails when some value of `f` lies outside the domain of `g`.
pub fn compose(g: &ImageMap, f: &ImageMap) -> Result<ImageMap> {
    if let Some(&v) = f.values.iter().find(|&&v| v >= g.len()) {
        return Err(Error::DomainMismatch {
            expected: g.len(),
            found: v + 1,
        });
    }
    Ok(ImageMap {
        values: f.values.iter().map(|&v| g.values[v]).collect(),
    })
}

/// One-step homotopy of continuous maps: `f(x) ⟷= g(x)` for every `x`.
pub fn one_step_related(codomain: &DigitalImage, f: &ImageMap, g: &ImageMap) -> Result<bool> {
    if f.len() != g.len() {
        return Err(Error::DomainMismatch {
            expected: f.len(),
            found: g.len(),
        });
    }
    Ok(f.values
        .iter()
        .zip(&g.values)
        .all(|(&a, &b)| a < codomain.n() && b < codomain.n() && codomain.adjacent_or_equal(a, b)))
}

/// Lazy enumeration of the continuous maps `g: domain → codomain` that are
/// one-step homotopic to a base map `h`, i.e. `g(x) ∈ N[h(x)]` for all `x`.
///
/// Backtracking assigns domain vertices in descending degree order (ties by
/// index) and tries candidate values in ascending order; each candidate set is
/// the base neighborhood intersected with `N[g(y)]` for every already-assigned
/// neighbor `y`, so continuity is enforced incrementally. Maps come out in
/// lexicographic order of their values along that vertex order.
pub struct OneStepMaps<'a> {
    domain: &'a DigitalImage,
    codomain: &'a DigitalImage,
    base: Vec<usize>,
    order: Vec<usize>,
    /// For each depth, the domain neighbors of `order[depth]` assigned earlier.
    earlier: Vec<Vec<usize>>,
    fixed: Vec<Option<usize>>,
    remaining: Vec<VertexSet>,
    values: Vec<usize>,
    depth: usize,
    started: bool,
    done: bool,
}

impl<'a> OneStepMaps<'a> {
    pub fn new(
        domain: &'a DigitalImage,
        codomain: &'a DigitalImage,
        base: &ImageMap,
    ) -> Result<Self> {
        base.check_shape(domain, codomain)?;
        let n = domain.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(domain.degree(v)), v));
        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let earlier = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                domain
                    .neighbors(v)
                    .iter()
                    .filter(|&u| position[u] < i)
                    .collect()
            })
            .collect();
        Ok(OneStepMaps {
            domain,
            codomain,
            base: base.values.clone(),
            order,
            earlier,
            fixed: vec![None; n],
            remaining: vec![VertexSet::EMPTY; n],
            values: vec![0; n],
            depth: 0,
            started: false,
            done: false,
        })
    }

    /// Restricts the enumeration to maps with `g(x) = value`.
    pub fn fix(mut self, x: usize, value: usize) -> Result<Self> {
        if x >= self.domain.n() {
            return Err(Error::VertexOutOfRange {
                vertex: x,
                n: self.domain.n(),
            });
        }
        if value >= self.codomain.n() {
            return Err(Error::VertexOutOfRange {
                vertex: value,
                n: self.codomain.n(),
            });
        }
        self.fixed[x] = Some(value);
        Ok(self)
    }

    fn candidates(&self, depth: usize) -> VertexSet {
        let x = self.order[depth];
        let mut c = self.codomain.closed_neighborhood(self.base[x]);
        if let Some(v) = self.fixed[x] {
            c = c.intersection(VertexSet::singleton(v));
        }
        for &y in &self.earlier[depth] {
            c = c.intersection(self.codomain.closed_neighborhood(self.values[y]));
        }
        c
    }
}

impl Iterator for OneStepMaps<'_> {
    type Item = ImageMap;

    fn next(&mut self) -> Option<ImageMap> {
        let n = self.order.len();
        if self.done {
            return None;
        }
        if n == 0 {
            self.done = true;
            return Some(ImageMap::new(Vec::new()));
        }
        if !self.started {
            self.started = true;
            self.depth = 0;
            self.remaining[0] = self.candidates(0);
        } else {
            // resume after the last emitted leaf
            self.depth = n - 1;
        }
        loop {
            let d = self.depth;
            match self.remaining[d].first() {
                None => {
                    if d == 0 {
                        self.done = true;
                        return None;
                    }
                    self.depth -= 1;
                }
                Some(v) => {
                    self.remaining[d].remove(v);
                    self.values[self.order[d]] = v;
                    if d + 1 == n {
                        return Some(ImageMap::new(self.values.clone()));
                    }
                    self.depth += 1;
                    self.remaining[d + 1] = self.candidates(d + 1);
                }
            }
        }
    }
}

/// Continuous self-maps one-step homotopic to the identity, optionally
/// fixing a basepoint (pointed one-step homotopy).
pub fn identity_one_step_maps(
    image: &DigitalImage,
    fixed_point: Option<usize>,
) -> Result<OneStepMaps<'_>> {
    let it = OneStepMaps::new(image, image, &ImageMap::identity(image.n()))?;
    match fixed_point {
        Some(p) => it.fix(p, p),
        None => Ok(it),
    }
}

/// First nonsurjective self-map one-step homotopic to the identity.
///
/// A finite image is reducible exactly when such a map exists, so `None`
/// certifies irreducibility.
pub fn reducibility_witness(image: &DigitalImage) -> Option<ImageMap> {
    let n = image.n();
    identity_one_step_maps(image, None)
        .expect("identity has the right shape")
        .find(|f| !f.is_surjective_onto(n))
}

pub fn is_reducible(image: &DigitalImage) -> bool {
    reducibility_witness(image).is_some()
}

/// First non-identity map one-step homotopic to the identity; `None` means
/// the image is rigid (any homotopy out of the identity has a first step
/// that leaves it).
pub fn rigidity_witness(image: &DigitalImage) -> Option<ImageMap> {
    identity_one_step_maps(image, None)
        .expect("identity has the right shape")
        .find(|f| !f.is_identity())
}

pub fn is_rigid(image: &DigitalImage) -> bool {
    rigidity_witness(image).is_none()
}

/// Pointed analogue of [`rigidity_witness`] with the basepoint held fixed.
pub fn pointed_rigidity_witness(
    image: &DigitalImage,
    basepoint: usize,
) -> Result<Option<ImageMap>> {
    if basepoint >= image.n() {
        return Err(Error::VertexOutOfRange {
            vertex: basepoint,
            n: image.n(),
        });
    }
    Ok(identity_one_step_maps(image, Some(basepoint))?.find(|f| !f.is_identity()))
}

pub fn is_pointed_rigid(image: &DigitalImage, basepoint: usize) -> Result<bool> {
    Ok(pointed_rigidity_witness(image, basepoint)?.is_none())
}

/// Why a pointed image cannot be pointed homotopy equivalent to another one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointedObstruction {
    pub basepoint: usize,
    pub source_points: usize,
    pub target_points: usize,
}

/// If `(x, basepoint)` is pointed rigid and has more points than `y`, no
/// pointed homotopy equivalence to `y` exists: `g∘f` would be pointed
/// homotopic to the identity, hence equal to it, forcing `f` to be injective.
pub fn pointed_equivalence_obstruction(
    x: &DigitalImage,
    basepoint: usize,
    y: &DigitalImage,
) -> Result<Option<PointedObstruction>> {
    let rigid = is_pointed_rigid(x, basepoint)?;
    Ok((rigid && x.n() > y.n()).then_some(PointedObstruction {
        basepoint,
        source_points: x.n(),
        target_points: y.n(),
    }))
}

/// A finite sequence of continuous maps with consecutive slices one-step
/// related: the slices `H(·,0), .., H(·,k)` of a homotopy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HomotopyChain {
    maps: Vec<ImageMap>,
}

impl HomotopyChain {
    pub fn new(maps: Vec<ImageMap>) -> Result<Self> {
        if maps.is_empty() {
            return Err(Error::Precondition(
                "a homotopy chain needs at least one map".into(),
            ));
        }
        Ok(HomotopyChain { maps })
    }

    pub fn constant(f: ImageMap) -> Self {
        HomotopyChain { maps: vec![f] }
    }

    pub fn maps(&self) -> &[ImageMap] {
        &self.maps
    }

    /// Number of slices.
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn start(&self) -> &ImageMap {
        &self.maps[0]
    }

    pub fn end(&self) -> &ImageMap {
        self.maps.last().expect("chains are nonempty")
    }

    /// Concatenates `other` after `self`; `other` must start where `self` ends.
    pub fn then(mut self, other: HomotopyChain) -> Result<Self> {
        if self.end() != other.start() {
            return Err(Error::Precondition("chains do not meet".into()));
        }
        self.maps.extend(other.maps.into_iter().skip(1));
        Ok(self)
    }

    pub fn reversed(mut self) -> Self {
        self.maps.reverse();
        self
    }

    /// Applies `post ∘ (·) ∘ pre` to every slice. Continuous pre- and
    /// post-composition preserves one-step relations.
    pub fn conjugate(&self, pre: &ImageMap, post: &ImageMap) -> Result<Self> {
        let maps = self
            .maps
            .iter()
            .map(|h| compose(post, &compose(h, pre)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(HomotopyChain { maps })
    }

    /// Replays the chain: every slice continuous, consecutive slices one-step
    /// related.
    pub fn verify(&self, domain: &DigitalImage, codomain: &DigitalImage) -> Result<()> {
        for (t, f) in self.maps.iter().enumerate() {
            f.check_shape(domain, codomain)?;
            if !is_continuous(domain, codomain, f) {
                return Err(Error::Precondition(format!("slice {t} is not continuous")));
            }
        }
        for (t, w) in self.maps.windows(2).enumerate() {
            if !one_step_related(codomain, &w[0], &w[1])? {
                return Err(Error::Precondition(format!(
                    "slices {t} and {} are not one-step related",
                    t + 1
                )));
            }
        }
        Ok(())
    }
}

/// Maps `f: X → Y`, `g: Y → X` with replayable homotopies `g∘f ≃ id_X` and
/// `f∘g ≃ id_Y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceCertificate {
    pub f: ImageMap,
    pub g: ImageMap,
    /// From `g∘f` to `id_X`.
    pub chain_gf: HomotopyChain,
    /// From `f∘g` to `id_Y`.
    pub chain_fg: HomotopyChain,
}

impl EquivalenceCertificate {
    pub fn verify(&self, x: &DigitalImage, y: &DigitalImage) -> Result<()> {
        for (name, map, dom, cod) in [("f", &self.f, x, y), ("g", &self.g, y, x)] {
            map.check_shape(dom, cod)?;
            if !is_continuous(dom, cod, map) {
                return Err(Error::Precondition(format!("{name} is not continuous")));
            }
        }
        self.chain_gf.verify(x, x)?;
        self.chain_fg.verify(y, y)?;
        if *self.chain_gf.start() != compose(&self.g, &self.f)?
            || !self.chain_gf.end().is_identity()
        {
            return Err(Error::Precondition(
                "chain_gf must run from g∘f to id_X".into(),
            ));
        }
        if *self.chain_fg.start() != compose(&self.f, &self.g)?
            || !self.chain_fg.end().is_identity()
        {
            return Err(Error::Precondition(
                "chain_fg must run from f∘g to id_Y".into(),
            ));
        }
        Ok(())
    }

    /// Certificate for the inverse direction.
    pub fn inverse(&self) -> Self {
        EquivalenceCertificate {
            f: self.g.clone(),
            g: self.f.clone(),
            chain_gf: self.chain_fg.clone(),
            chain_fg: self.chain_gf.clone(),
        }
    }
}

/// A sequence of reductions from an image down to an irreducible core.
#[derive(Clone, Debug, Serialize)]
pub struct CoreReduction {
    pub core: DigitalImage,
    /// `kept[i]` is the source vertex that became core vertex `i`.
    pub kept: Vec<usize>,
    pub steps: Vec<ReductionCertificate>,
}

impl CoreReduction {
    /// Retraction `X → core` and inclusion `core → X` with both homotopies,
    /// assembled from the per-step one-step homotopies.
    pub fn equivalence(&self, source: &DigitalImage) -> Result<EquivalenceCertificate> {
        let mut current = source.clone();
        let mut cert = EquivalenceCertificate {
            f: ImageMap::identity(source.n()),
            g: ImageMap::identity(source.n()),
            chain_gf: HomotopyChain::constant(ImageMap::identity(source.n())),
            chain_fg: HomotopyChain::constant(ImageMap::identity(source.n())),
        };
        for step in &self.steps {
            let next = step.equivalence(&current)?;
            cert = chain_equivalences(&cert, &next)?;
            current = step.result.clone();
        }
        Ok(cert)
    }
}

/// Composes `X ≃ Y` (via `a`) with `Y ≃ Z` (via `b`) into `X ≃ Z`.
pub fn chain_equivalences(
    a: &EquivalenceCertificate,
    b: &EquivalenceCertificate,
) -> Result<EquivalenceCertificate> {
    let f = compose(&b.f, &a.f)?;
    let g = compose(&a.g, &b.g)?;
    // g∘f = a.g ∘ (b.g∘b.f) ∘ a.f ≃ a.g ∘ a.f ≃ id_X
    let chain_gf = b.chain_gf.conjugate(&a.f, &a.g)?.then(a.chain_gf.clone())?;
    // f∘g = b.f ∘ (a.f∘a.g) ∘ b.g ≃ b.f ∘ b.g ≃ id_Z
    let chain_fg = a.chain_fg.conjugate(&b.g, &b.f)?.then(b.chain_fg.clone())?;
    Ok(EquivalenceCertificate {
        f,
        g,
        chain_gf,
        chain_fg,
    })
}

/// Repeatedly retracts onto the image of the first nonsurjective one-step
/// witness until the image is irreducible.
pub fn reduce_to_core(image: &DigitalImage) -> CoreReduction {
    let mut current = image.clone();
    let mut kept: Vec<usize> = (0..image.n()).collect();
    let mut steps = Vec::new();
    while let Some(f) = reducibility_witness(&current) {
        let cert = ReductionCertificate::from_retraction(
            &current,
            ReductionWitness::OneStepNonsurjective { map: f },
        );
        kept = cert.kept.iter().map(|&v| kept[v]).collect();
        current = cert.result.clone();
        steps.push(cert);
    }
    CoreReduction {
        core: current,
        kept,
        steps,
    }
}

/// Exact homotopy-equivalence test: irreducible images are homotopy
/// equivalent iff isomorphic, so compare cores.
pub fn are_homotopy_equivalent(a: &DigitalImage, b: &DigitalImage) -> bool {
    let ca = reduce_to_core(a).core;
    let cb = reduce_to_core(b).core;
    are_isomorphic(&ca, &cb).is_some()
}

/// A full equivalence certificate between `a` and `b` when they are homotopy
/// equivalent: retract `a` to its core, cross by an isomorphism of cores,
/// include into `b`.
pub fn homotopy_equivalence(
    a: &DigitalImage,
    b: &DigitalImage,
) -> Result<Option<EquivalenceCertificate>> {
    let ra = reduce_to_core(a);
    let rb = reduce_to_core(b);
    let Some(phi) = are_isomorphic(&ra.core, &rb.core) else {
        return Ok(None);
    };
    let phi = ImageMap::new(phi);
    let phi_inv = phi.inverse().expect("isomorphisms are bijections");
    let k = ra.core.n();
    let iso = EquivalenceCertificate {
        f: phi.clone(),
        g: phi_inv.clone(),
        chain_gf: HomotopyChain::constant(ImageMap::identity(k)),
        chain_fg: HomotopyChain::constant(ImageMap::identity(k)),
    };
    let to_core_a = ra.equivalence(a)?;
    let from_core_b = rb.equivalence(b)?.inverse();
    let cert = chain_equivalences(&chain_equivalences(&to_core_a, &iso)?, &from_core_b)?;
    Ok(Some(cert))
}

/// Limits for bounded searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    /// Cap on distinct states visited by a single breadth-first search.
    pub max_states: usize,
    /// Cap on the number of slices in a homotopy chain.
    pub max_chain_length: usize,
    /// Longest trivial extension tried for loops; `None` means loop length
    /// plus the number of points.
    pub max_extension_length: Option<usize>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_states: 10_000_000,
            max_chain_length: 64,
            max_extension_length: None,
        }
    }
}

impl SearchBudget {
    pub fn validate(&self) -> Result<()> {
        if self.max_states == 0
            || self.max_chain_length == 0
            || self.max_extension_length == Some(0)
        {
            return Err(Error::Precondition(
                "search budget caps must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// How thoroughly a negative answer was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "scope", content = "bound", rename_all = "snake_case")]
pub enum Exhaustion {
    /// The whole reachable space was explored.
    Complete,
    /// Every trivial-extension length up to the bound was exhausted; longer
    /// extensions were not examined.
    UpToExtension(usize),
}

/// Three-valued answer of a bounded search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "detail", rename_all = "snake_case")]
pub enum Verdict<W> {
    Yes(W),
    No(Exhaustion),
    Unknown(String),
}

impl<W> Verdict<W> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Verdict::No(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::Unknown(_))
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Yes(w) => Some(w),
            _ => None,
        }
    }
}

/// Outcome of a breadth-first search over maps.
pub(crate) enum BfsOutcome {
    Found(HomotopyChain),
    Exhausted,
    OutOfBudget(String),
}

/// Breadth-first search over continuous maps `domain → codomain`, edges given
/// by one-step homotopy, from `start` until `is_target` holds.
pub(crate) fn bfs_maps(
    domain: &DigitalImage,
    codomain: &DigitalImage,
    start: &ImageMap,
    budget: &SearchBudget,
    mut is_target: impl FnMut(&ImageMap) -> bool,
) -> BfsOutcome {
    if is_target(start) {
        return BfsOutcome::Found(HomotopyChain::constant(start.clone()));
    }
    // parent index and depth for each visited state
    let mut states: Vec<ImageMap> = vec![start.clone()];
    let mut meta: Vec<(usize, usize)> = vec![(usize::MAX, 1)];
    let mut seen: HashMap<ImageMap, usize> = HashMap::new();
    seen.insert(start.clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    let mut truncated = false;
    while let Some(i) = queue.pop_front() {
        let depth = meta[i].1;
        if depth >= budget.max_chain_length {
            truncated = true;
            continue;
        }
        let current = states[i].clone();
        let neighbors = OneStepMaps::new(domain, codomain, &current).expect("shape checked");
        for g in neighbors {
            if seen.contains_key(&g) {
                continue;
            }
            if seen.len() >= budget.max_states {
                return BfsOutcome::OutOfBudget(format!(
                    "visited {} maps without deciding",
                    seen.len()
                ));
            }
            let j = states.len();
            seen.insert(g.clone(), j);
            states.push(g.clone());
            meta.push((i, depth + 1));
            if is_target(&g) {
                let mut path = vec![j];
                let mut k = j;
                while meta[k].0 != usize::MAX {
                    k = meta[k].0;
                    path.push(k);
                }
                path.reverse();
                let maps = path.into_iter().map(|k| states[k].clone()).collect();
                return BfsOutcome::Found(HomotopyChain { maps });
            }
            queue.push_back(j);
        }
    }
    if truncated {
        BfsOutcome::OutOfBudget(format!(
            "homotopy chains longer than {} slices were not explored",
            budget.max_chain_length
        ))
    } else {
        BfsOutcome::Exhausted
    }
}

/// Decides `f ≃ g` by breadth-first search over continuous maps.
pub fn homotopic_maps(
    domain: &DigitalImage,
    codomain: &DigitalImage,
    f: &ImageMap,
    g: &ImageMap,
    budget: &SearchBudget,
) -> Result<Verdict<HomotopyChain>> {
    budget.validate()?;
    for h in [f, g] {
        h.check_shape(domain, codomain)?;
        if !is_continuous(domain, codomain, h) {
            return Err(Error::Precondition("maps must be continuous".into()));
        }
    }
    Ok(match bfs_maps(domain, codomain, f, budget, |h| h == g) {
        BfsOutcome::Found(chain) => Verdict::Yes(chain),
        BfsOutcome::Exhausted => Verdict::No(Exhaustion::Complete),
        BfsOutcome::OutOfBudget(reason) => Verdict::Unknown(reason),
    })
}
