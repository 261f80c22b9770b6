//! Isomorph-free enumeration of connected images and the homotopy-type
//! catalog built on it.
//!
//! Generation is by canonical augmentation: a connected image on `n` points
//! is produced from a connected parent on `n - 1` points by adding a point
//! adjacent to a nonempty set, and kept only when the added point lies in the
//! orbit of the canonically chosen removable point (a non-cut point of
//! maximum degree, largest canonical label among ties). Each isomorphism class
//! then has exactly one parent class; duplicates from a single parent are
//! removed by canonical form.

use std::collections::{BTreeMap, HashSet};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::canon::{canonical_form, canonical_labeling, same_orbit, CanonicalForm};
use crate::error::{Error, Result};
use crate::fixtures::{named_image, FIXTURE_NAMES};
use crate::graph6::{encode_graph6, parse_graph6};
use crate::image::DigitalImage;
use crate::lasso::lasso_rigidity;
use crate::maps::{is_reducible, is_rigid};
use crate::reductions::{lemma_step, FilterConfig};

/// Largest order the built-in generator accepts.
pub const MAX_CATALOG_N: usize = 9;

/// Largest order the exhaustive edge-subset generator accepts.
pub const MAX_EXHAUSTIVE_N: usize = 7;

fn check_order(n: usize, max: usize) -> Result<()> {
    if n == 0 || n > max {
        return Err(Error::Precondition(format!(
            "supported orders are 1..={max}, got {n}"
        )));
    }
    Ok(())
}

/// Children of one parent accepted by the augmentation test, deduplicated.
fn augment(parent: &CanonicalForm) -> Vec<CanonicalForm> {
    let p = parent.image();
    let n = p.n();
    let v = n;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << n) {
        let s = VertexSet(mask);
        let g = p.with_vertex(s);
        let deg_v = s.len();
        let removable = g.vertices().difference(g.cut_vertices());
        let max_deg = removable.iter().map(|u| g.degree(u)).max().unwrap_or(0);
        if deg_v < max_deg {
            continue;
        }
        let labeling = canonical_labeling(&g);
        let chosen = removable
            .iter()
            .filter(|&u| g.degree(u) == max_deg)
            .max_by_key(|&u| labeling.perm[u])
            .expect("the added point is removable");
        if chosen != v && !same_orbit(&g, chosen, v) {
            continue;
        }
        if seen.insert(labeling.form.clone()) {
            out.push(labeling.form);
        }
    }
    out
}

fn next_level(parents: &[CanonicalForm]) -> Vec<CanonicalForm> {
    let mut out: Vec<CanonicalForm> = parents.par_iter().flat_map_iter(augment).collect();
    out.par_sort_unstable();
    out
}

/// One canonical form per isomorphism class of connected images on `n`
/// points, sorted.
pub fn connected_forms(n: usize) -> Result<Vec<CanonicalForm>> {
    check_order(n, MAX_CATALOG_N)?;
    let mut level = vec![canonical_form(&DigitalImage::point())];
    for _ in 1..n {
        level = next_level(&level);
    }
    Ok(level)
}

/// Canonically labeled representatives of the connected images on `n` points.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<DigitalImage>> {
    Ok(connected_forms(n)?
        .iter()
        .map(CanonicalForm::image)
        .collect())
}

/// Independent generator: every edge subset on `n` labeled points, kept when
/// connected and deduplicated by canonical form. Feasible for `n ≤ 7`.
pub fn connected_forms_exhaustive(n: usize) -> Result<Vec<CanonicalForm>> {
    check_order(n, MAX_EXHAUSTIVE_N)?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let total = 1u64 << pairs.len();
    let chunk = 1u64 << 12;
    let forms: HashSet<CanonicalForm> = (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|c| {
            let mut local = HashSet::new();
            for mask in c * chunk..((c + 1) * chunk).min(total) {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                if edges.len() + 1 < n {
                    continue;
                }
                let g = DigitalImage::new(n, &edges).expect("valid pairs");
                if g.is_connected() {
                    local.insert(canonical_form(&g));
                }
            }
            local
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    let mut out: Vec<CanonicalForm> = forms.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

/// Canonical forms of the named fixtures, first name wins.
fn fixture_index() -> BTreeMap<CanonicalForm, String> {
    let mut index = BTreeMap::new();
    for name in FIXTURE_NAMES {
        let x = named_image(name).expect("fixture names resolve");
        index
            .entry(canonical_form(&x))
            .or_insert_with(|| name.to_string());
    }
    index
}

/// Which fixture, if any, is isomorphic to `x`.
pub fn match_fixture(x: &DigitalImage) -> Option<String> {
    fixture_index().get(&canonical_form(x)).cloned()
}

#[derive(Clone, Debug, Default)]
pub struct CatalogOptions {
    pub filter: FilterConfig,
    /// Directory for checkpoint shards of the last enumeration level. Shards
    /// already present are read back instead of recomputed.
    pub shard_dir: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurvivorEntry {
    pub graph6: String,
    pub irreducible: bool,
    pub matched_fixture: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassEntry {
    pub graph6: String,
    pub edges: usize,
    pub rigid: bool,
    /// A lasso certificate covers every ordered adjacent pair.
    pub lasso_certified: bool,
    pub matched_fixture: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurvivorList {
    pub count: usize,
    pub graphs: Vec<SurvivorEntry>,
}

/// Homotopy types of connected images on `n` points. Every class is a
/// filter survivor that the exact one-step test finds irreducible; classes
/// are pairwise non-isomorphic since survivors are distinct canonical forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogReport {
    pub n: usize,
    pub filter: FilterConfig,
    pub total_connected: usize,
    pub lemma_survivors: SurvivorList,
    pub irreducible_classes: Vec<ClassEntry>,
}

impl CatalogReport {
    pub fn class_count(&self) -> usize {
        self.irreducible_classes.len()
    }

    /// Plain-text table.
    pub fn to_table(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("n = {}  filter = {}\n", self.n, self.filter));
        s.push_str(&format!("connected images      {}\n", self.total_connected));
        s.push_str(&format!(
            "filter survivors      {}\n",
            self.lemma_survivors.count
        ));
        s.push_str(&format!("irreducible classes   {}\n", self.class_count()));
        if !self.irreducible_classes.is_empty() {
            s.push_str(&format!(
                "\n{:<14} {:>5}  {:<6} {:<6} {}\n",
                "graph6", "edges", "rigid", "lasso", "fixture"
            ));
            for c in &self.irreducible_classes {
                s.push_str(&format!(
                    "{:<14} {:>5}  {:<6} {:<6} {}\n",
                    c.graph6,
                    c.edges,
                    c.rigid,
                    c.lasso_certified,
                    c.matched_fixture.as_deref().unwrap_or("-")
                ));
            }
        }
        s
    }
}

/// Runs the catalog on the built-in generator.
pub fn run_catalog(n: usize, options: &CatalogOptions) -> Result<CatalogReport> {
    check_order(n, MAX_CATALOG_N)?;
    let forms = match &options.shard_dir {
        None => connected_forms(n)?,
        Some(dir) => {
            let parents = if n == 1 {
                Vec::new()
            } else {
                connected_forms(n - 1)?
            };
            if n == 1 {
                connected_forms(1)?
            } else {
                sharded_level(&parents, n, dir)?
            }
        }
    };
    Ok(catalog_from_forms(n, forms, options.filter))
}

/// Runs the catalog on externally supplied images, which must all have the
/// same number of points. Disconnected inputs and repeated isomorphism
/// classes are dropped.
pub fn run_catalog_on(images: &[DigitalImage], filter: FilterConfig) -> Result<CatalogReport> {
    let n = images.first().map_or(0, DigitalImage::n);
    if let Some(bad) = images.iter().find(|g| g.n() != n) {
        return Err(Error::Precondition(format!(
            "mixed orders in input: {n} and {}",
            bad.n()
        )));
    }
    let mut forms: Vec<CanonicalForm> = images
        .par_iter()
        .filter(|g| g.is_connected() && g.n() > 0)
        .map(canonical_form)
        .collect();
    forms.par_sort_unstable();
    forms.dedup();
    Ok(catalog_from_forms(n, forms, filter))
}

fn catalog_from_forms(n: usize, forms: Vec<CanonicalForm>, filter: FilterConfig) -> CatalogReport {
    let survivors: Vec<(CanonicalForm, DigitalImage)> = forms
        .par_iter()
        .filter_map(|f| {
            let g = f.image();
            lemma_step(&g, filter).is_none().then(|| (f.clone(), g))
        })
        .collect();
    let index = fixture_index();
    let flags: Vec<bool> = survivors
        .par_iter()
        .map(|(_, g)| !is_reducible(g))
        .collect();
    let graphs: Vec<SurvivorEntry> = survivors
        .iter()
        .zip(&flags)
        .map(|((f, g), &irreducible)| SurvivorEntry {
            graph6: encode_graph6(g),
            irreducible,
            matched_fixture: index.get(f).cloned(),
        })
        .collect();
    let irreducible_classes: Vec<ClassEntry> = survivors
        .par_iter()
        .zip(&flags)
        .filter(|(_, &irr)| irr)
        .map(|((f, g), _)| ClassEntry {
            graph6: encode_graph6(g),
            edges: g.edge_count(),
            rigid: is_rigid(g),
            lasso_certified: lasso_rigidity(g).is_some(),
            matched_fixture: index.get(f).cloned(),
        })
        .collect();
    CatalogReport {
        n,
        filter,
        total_connected: forms.len(),
        lemma_survivors: SurvivorList {
            count: graphs.len(),
            graphs,
        },
        irreducible_classes,
    }
}

const SHARD_PARENTS: usize = 256;
const SHARD_DONE: &str = "# complete";

/// Builds level `n` from `parents` in shards of [`SHARD_PARENTS`] parents,
/// each written to `dir` as one graph6 per line with a completion marker.
fn sharded_level(parents: &[CanonicalForm], n: usize, dir: &Path) -> Result<Vec<CanonicalForm>> {
    fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
    let mut out = Vec::new();
    for (i, chunk) in parents.chunks(SHARD_PARENTS).enumerate() {
        let path = dir.join(format!("n{n}-part{i:04}.g6"));
        if let Some(forms) = read_shard(&path)? {
            out.extend(forms);
            continue;
        }
        let forms = next_level(chunk);
        write_shard(&path, &forms)?;
        out.extend(forms);
    }
    out.par_sort_unstable();
    Ok(out)
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Precondition(format!("{}: {e}", path.display()))
}

fn read_shard(path: &Path) -> Result<Option<Vec<CanonicalForm>>> {
    let Ok(text) = fs::read_to_string(path) else {
        return Ok(None);
    };
    if text.lines().last() != Some(SHARD_DONE) {
        return Ok(None);
    }
    text.lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| parse_graph6(l).map(|g| canonical_form(&g)))
        .collect::<Result<Vec<_>>>()
        .map(Some)
}

fn write_shard(path: &Path, forms: &[CanonicalForm]) -> Result<()> {
    let tmp = path.with_extension("tmp");
    let mut file = fs::File::create(&tmp).map_err(|e| io_error(&tmp, e))?;
    for f in forms {
        writeln!(file, "{}", f.graph6()).map_err(|e| io_error(&tmp, e))?;
    }
    writeln!(file, "{SHARD_DONE}").map_err(|e| io_error(&tmp, e))?;
    drop(file);
    fs::rename(&tmp, path).map_err(|e| io_error(path, e))
}

/// Reads one graph6 string per line, skipping blank lines and `#` comments.
pub fn read_graph6_lines(text: &str) -> Result<Vec<DigitalImage>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_graph6)
        .collect()
}
