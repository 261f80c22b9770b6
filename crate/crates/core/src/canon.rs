//! Canonical labeling and isomorphism testing for small images.
//!
//! Ordered-partition refinement (counts of neighbors in each cell) followed by
//! an individualize-and-refine search over the first smallest non-singleton
//! cell. Every leaf is a discrete partition, i.e. a labeling; the canonical form
//! is the lexicographically largest relabeled adjacency matrix over all leaves.
//! Branches are pruned with twin transpositions and with automorphisms found
//! at equal leaves that fix the current individualization prefix.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::bitset::VertexSet;
use crate::graph6::encode_graph6;
use crate::image::DigitalImage;

/// Isomorphism-invariant code of an image: row `i` is the neighbor bitset of
/// the vertex labeled `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// The canonically labeled image.
    pub fn image(&self) -> DigitalImage {
        DigitalImage::from_neighborhoods(self.rows.iter().map(|&r| VertexSet(r)).collect())
    }

    pub fn graph6(&self) -> String {
        encode_graph6(&self.image())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.graph6())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.graph6())
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.graph6())
    }
}

/// A canonical labeling: `perm[v]` is the canonical label of vertex `v`.
#[derive(Clone, Debug)]
pub struct Labeling {
    pub perm: Vec<usize>,
    pub form: CanonicalForm,
}

pub fn canonical_labeling(g: &DigitalImage) -> Labeling {
    canonical_labeling_colored(g, &vec![0; g.n()])
}

/// Canonical labeling of a vertex-colored image. Vertices of smaller color
/// receive smaller labels, so equal forms from equal color multisets imply a
/// color-preserving isomorphism.
pub fn canonical_labeling_colored(g: &DigitalImage, colors: &[usize]) -> Labeling {
    assert_eq!(colors.len(), g.n());
    let mut palette: Vec<usize> = colors.to_vec();
    palette.sort_unstable();
    palette.dedup();
    let cells: Vec<VertexSet> = palette
        .iter()
        .map(|&c| (0..g.n()).filter(|&v| colors[v] == c).collect())
        .collect();
    let mut search = Search {
        g,
        best: None,
        automorphisms: Vec::new(),
    };
    let mut prefix = Vec::new();
    search.run(cells, &mut prefix);
    let (rows, perm) = search.best.unwrap_or_default();
    Labeling {
        perm,
        form: CanonicalForm { rows },
    }
}

pub fn canonical_form(g: &DigitalImage) -> CanonicalForm {
    canonical_labeling(g).form
}

/// Returns a bijection `phi` with `u ~ v` in `a` iff `phi[u] ~ phi[v]` in `b`,
/// or `None` when the images are not isomorphic.
pub fn are_isomorphic(a: &DigitalImage, b: &DigitalImage) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return None;
    }
    let mut da: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return None;
    }
    let la = canonical_labeling(a);
    let lb = canonical_labeling(b);
    if la.form != lb.form {
        return None;
    }
    let mut inv_b = vec![0; b.n()];
    for (v, &l) in lb.perm.iter().enumerate() {
        inv_b[l] = v;
    }
    Some(la.perm.iter().map(|&l| inv_b[l]).collect())
}

/// Whether some automorphism of `g` maps `u` to `v`.
pub fn same_orbit(g: &DigitalImage, u: usize, v: usize) -> bool {
    if u == v {
        return true;
    }
    if g.degree(u) != g.degree(v) {
        return false;
    }
    let mark = |w: usize| {
        let mut c = vec![0; g.n()];
        c[w] = 1;
        canonical_labeling_colored(g, &c).form
    };
    mark(u) == mark(v)
}

/// Orbits of the automorphism group, as a representative per vertex
/// (the smallest vertex of its orbit).
pub fn orbit_representatives(g: &DigitalImage) -> Vec<usize> {
    let mut rep: Vec<usize> = (0..g.n()).collect();
    for v in 0..g.n() {
        if let Some(u) = (0..v).find(|&u| rep[u] == u && same_orbit(g, u, v)) {
            rep[v] = u;
        }
    }
    rep
}

struct Search<'a> {
    g: &'a DigitalImage,
    best: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

const MAX_STORED_AUTOMORPHISMS: usize = 128;

impl Search<'_> {
    fn run(&mut self, mut cells: Vec<VertexSet>, prefix: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        if cells.len() == self.g.n() {
            self.leaf(&cells);
            return;
        }
        let (t, cell) = cells
            .iter()
            .copied()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|&(i, c)| (c.len(), i))
            .expect("non-discrete partition has a non-singleton cell");
        let mut tried: Vec<usize> = Vec::new();
        for v in cell.iter() {
            if tried.iter().any(|&u| self.are_twins(u, v)) {
                continue;
            }
            if !tried.is_empty() && self.equivalent_under_stabilizer(prefix, &tried, v) {
                continue;
            }
            tried.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..t]);
            next.push(VertexSet::singleton(v));
            next.push(cell.without(v));
            next.extend_from_slice(&cells[t + 1..]);
            prefix.push(v);
            self.run(next, prefix);
            prefix.pop();
        }
    }

    fn are_twins(&self, u: usize, v: usize) -> bool {
        self.g.neighbors(u).without(v) == self.g.neighbors(v).without(u)
    }

    /// Is `v` in the orbit of some tried vertex under the automorphisms found so
    /// far that fix every vertex of `prefix`?
    fn equivalent_under_stabilizer(&self, prefix: &[usize], tried: &[usize], v: usize) -> bool {
        let n = self.g.n();
        let gens: Vec<&Vec<usize>> = self
            .automorphisms
            .iter()
            .filter(|a| prefix.iter().all(|&p| a[p] == p))
            .collect();
        if gens.is_empty() {
            return false;
        }
        let mut orbit = VertexSet::singleton(v);
        let mut frontier = orbit;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for w in frontier.iter() {
                for a in &gens {
                    next.insert(a[w]);
                }
            }
            frontier = next.difference(orbit);
            orbit = orbit.union(frontier);
        }
        debug_assert!(orbit.iter().all(|w| w < n));
        tried.iter().any(|&u| orbit.contains(u))
    }

    fn leaf(&mut self, cells: &[VertexSet]) {
        let n = self.g.n();
        let mut perm = vec![0; n];
        for (label, cell) in cells.iter().enumerate() {
            perm[cell.first().expect("singleton cell")] = label;
        }
        let mut rows = vec![0u64; n];
        for v in 0..n {
            rows[perm[v]] = self
                .g
                .neighbors(v)
                .iter()
                .fold(0u64, |acc, u| acc | 1 << perm[u]);
        }
        match &self.best {
            None => self.best = Some((rows, perm)),
            Some((best_rows, best_perm)) => match rows.cmp(best_rows) {
                std::cmp::Ordering::Greater => self.best = Some((rows, perm)),
                std::cmp::Ordering::Equal => {
                    if self.automorphisms.len() < MAX_STORED_AUTOMORPHISMS {
                        // sigma = best^-1 ∘ perm
                        let mut inv = vec![0; n];
                        for (v, &l) in best_perm.iter().enumerate() {
                            inv[l] = v;
                        }
                        let sigma: Vec<usize> = perm.iter().map(|&l| inv[l]).collect();
                        if sigma.iter().enumerate().any(|(i, &s)| i != s) {
                            self.automorphisms.push(sigma);
                        }
                    }
                }
                std::cmp::Ordering::Less => {}
            },
        }
    }
}

/// Refines an ordered partition until every vertex of a cell has the same
/// number of neighbors in each cell. Split cells keep their position and are
/// ordered by signature, so the result is isomorphism-invariant.
fn refine(g: &DigitalImage, cells: &mut Vec<VertexSet>) {
    loop {
        let mut out: Vec<VertexSet> = Vec::with_capacity(g.n());
        let mut sigs: Vec<(Vec<u8>, usize)> = Vec::new();
        for &cell in cells.iter() {
            if cell.len() == 1 {
                out.push(cell);
                continue;
            }
            sigs.clear();
            for v in cell.iter() {
                let nb = g.neighbors(v);
                let sig: Vec<u8> = cells
                    .iter()
                    .map(|c| nb.intersection(*c).len() as u8)
                    .collect();
                sigs.push((sig, v));
            }
            sigs.sort_unstable();
            let mut start = 0;
            for i in 1..=sigs.len() {
                if i == sigs.len() || sigs[i].0 != sigs[start].0 {
                    out.push(sigs[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        let split = out.len() > cells.len();
        *cells = out;
        if !split {
            return;
        }
    }
}
