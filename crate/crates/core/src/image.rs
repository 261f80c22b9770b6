//! Finite digital images: a vertex set `0..n` with a symmetric, antireflexive
//! adjacency relation, i.e. a simple graph.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Bitset adjacency caps images at 64 points.
pub const MAX_VERTICES: usize = 64;

/// An immutable digital image.
///
/// Adjacency is kept as one open-neighborhood bitset per vertex; the closed
/// neighborhood `N[x] = N(x) ∪ {x}` used by continuity checks is one OR away.
/// Display labels are carried along but take no part in equality or hashing.
#[derive(Clone)]
pub struct DigitalImage {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl DigitalImage {
    /// Builds an image from an edge list. Duplicate and reversed pairs are merged.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(DigitalImage {
            n,
            adj,
            labels: None,
        })
    }

    /// Builds an image directly from neighborhood bitsets, which must already be
    /// symmetric and loop-free.
    pub(crate) fn from_neighborhoods(adj: Vec<VertexSet>) -> Self {
        debug_assert!(adj.len() <= MAX_VERTICES);
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(v, s)| !s.contains(v) && s.iter().all(|u| adj[u].contains(v))));
        DigitalImage {
            n: adj.len(),
            adj,
            labels: None,
        }
    }

    /// The image with no adjacencies on `n` points.
    pub fn discrete(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    /// The one-point image.
    pub fn point() -> Self {
        DigitalImage {
            n: 1,
            adj: vec![VertexSet::EMPTY],
            labels: None,
        }
    }

    /// The m-gon `C_m`. For `m = 1` this is a point and for `m = 2` a single edge.
    pub fn cycle(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::EmptyCycle);
        }
        let edges: Vec<_> = match m {
            1 => vec![],
            2 => vec![(0, 1)],
            _ => (0..m).map(|i| (i, (i + 1) % m)).collect(),
        };
        Self::new(m, &edges)
    }

    /// The digital interval `[0,k]` with 2-adjacency.
    pub fn interval(k: usize) -> Result<Self> {
        let edges: Vec<_> = (0..k).map(|i| (i, i + 1)).collect();
        Self::new(k + 1, &edges)
    }

    /// The complete graph on `n` points.
    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::new(n, &edges)
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Self {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of a vertex: its label if present, else its index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// `N[v]`: `v` together with everything adjacent to it.
    #[inline]
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// `u ⟷= v`.
    #[inline]
    pub fn adjacent_or_equal(&self, u: usize, v: usize) -> bool {
        u == v || self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Induced subimage on `keep`, with vertices renumbered in ascending order.
    /// Returns the subimage and, for each new vertex, the original vertex.
    pub fn induced(&self, keep: VertexSet) -> (DigitalImage, Vec<usize>) {
        let kept: Vec<usize> = keep.iter().filter(|&v| v < self.n).collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in kept.iter().enumerate() {
            index[v] = i;
        }
        let adj = kept
            .iter()
            .map(|&v| {
                self.adj[v]
                    .intersection(keep)
                    .iter()
                    .map(|u| index[u])
                    .collect()
            })
            .collect();
        let mut sub = DigitalImage::from_neighborhoods(adj);
        if let Some(labels) = &self.labels {
            sub.labels = Some(kept.iter().map(|&v| labels[v].clone()).collect());
        }
        (sub, kept)
    }

    /// The image with the vertices in `remove` deleted.
    pub fn without(&self, remove: VertexSet) -> (DigitalImage, Vec<usize>) {
        self.induced(self.vertices().difference(remove))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> DigitalImage {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for v in 0..self.n {
            adj[perm[v]] = self.adj[v].iter().map(|u| perm[u]).collect();
        }
        let mut out = DigitalImage::from_neighborhoods(adj);
        if let Some(labels) = &self.labels {
            let mut l = vec![String::new(); self.n];
            for v in 0..self.n {
                l[perm[v]] = labels[v].clone();
            }
            out.labels = Some(l);
        }
        out
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &DigitalImage) -> Result<DigitalImage> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|s| VertexSet(s.0 << self.n)));
        Ok(DigitalImage::from_neighborhoods(adj))
    }

    /// Adds a vertex adjacent to exactly `neighbors`; it receives index `n`.
    pub fn with_vertex(&self, neighbors: VertexSet) -> DigitalImage {
        let v = self.n;
        let mut adj = self.adj.clone();
        for u in neighbors.iter() {
            adj[u].insert(v);
        }
        adj.push(neighbors);
        DigitalImage::from_neighborhoods(adj)
    }

    /// Vertices reachable from `start` by paths staying inside `within`.
    pub fn reachable_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut reached = VertexSet::singleton(start);
        let mut frontier = reached;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(within).difference(reached);
            reached = reached.union(frontier);
        }
        reached
    }

    /// Partition into path components.
    pub fn components(&self) -> ComponentPartition {
        let mut assignment = vec![usize::MAX; self.n];
        let mut count = 0;
        let all = self.vertices();
        for start in 0..self.n {
            if assignment[start] != usize::MAX {
                continue;
            }
            for v in self.reachable_within(start, all).iter() {
                assignment[v] = count;
            }
            count += 1;
        }
        ComponentPartition { assignment, count }
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reachable_within(0, self.vertices()) == self.vertices()
    }

    /// Vertices whose removal splits their component (articulation points).
    pub fn cut_vertices(&self) -> VertexSet {
        let all = self.vertices();
        (0..self.n)
            .filter(|&v| {
                let Some(u) = self.adj[v].first() else {
                    return false;
                };
                let component = self.reachable_within(v, all).without(v);
                self.reachable_within(u, all.without(v)) != component
            })
            .collect()
    }

    /// Parses the edge-list text format: first non-comment line `n`, then one
    /// `u v` pair per line. `#` starts a comment.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|e| Error::EdgeList {
                    line: line_no,
                    reason: format!("`{s}`: {e}"),
                })
            };
            match (n, fields.as_slice()) {
                (None, [count]) => n = Some(parse(count)?),
                (None, _) => {
                    return Err(Error::EdgeList {
                        line: line_no,
                        reason: "expected the vertex count".into(),
                    })
                }
                (Some(_), [u, v]) => edges.push((parse(u)?, parse(v)?)),
                (Some(_), _) => {
                    return Err(Error::EdgeList {
                        line: line_no,
                        reason: "expected `u v`".into(),
                    })
                }
            }
        }
        let n = n.ok_or(Error::EdgeList {
            line: 0,
            reason: "empty input".into(),
        })?;
        Self::new(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Graphviz rendering for external drawing tools.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph \"{name}\" {{\n");
        for v in 0..self.n {
            out.push_str(&format!("  {v} [label=\"{}\"];\n", self.label(v)));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl PartialEq for DigitalImage {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for DigitalImage {}

impl Hash for DigitalImage {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj.hash(state);
    }
}

impl fmt::Debug for DigitalImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DigitalImage(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Connected components: `assignment[v]` is the component index of `v`,
/// numbered in order of each component's smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPartition {
    pub assignment: Vec<usize>,
    pub count: usize,
}

impl ComponentPartition {
    pub fn members(&self, component: usize) -> VertexSet {
        self.assignment
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == component)
            .map(|(v, _)| v)
            .collect()
    }
}
