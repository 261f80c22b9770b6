//! Digital homotopy theory of finite simple graphs.
//!
//! A digital image is a finite set with a symmetric, antireflexive adjacency
//! relation. This crate decides reducibility, rigidity and homotopy
//! equivalence of images exactly, computes the loop-counting invariant `L_m`,
//! finds lasso rigidity certificates, and enumerates connected images up to
//! isomorphism to catalog their homotopy types.

pub mod bitset;
pub mod canon;
pub mod catalog;
pub mod error;
pub mod fixtures;
pub mod graph6;
pub mod image;
pub mod lasso;
pub mod loops;
pub mod maps;
pub mod reductions;

pub use bitset::VertexSet;
pub use canon::{are_isomorphic, canonical_form, CanonicalForm};
pub use catalog::{run_catalog, CatalogOptions, CatalogReport};
pub use error::{Error, Result};
pub use fixtures::named_image;
pub use graph6::{encode_graph6, parse_graph6};
pub use image::{ComponentPartition, DigitalImage};
pub use lasso::{find_lasso, lasso_rigidity, verify_lasso, Lasso, RigidityCertificate};
pub use maps::{
    are_homotopy_equivalent, is_continuous, is_pointed_rigid, is_reducible, is_rigid,
    reduce_to_core, EquivalenceCertificate, Exhaustion, HomotopyChain, ImageMap, SearchBudget,
    Verdict,
};
pub use reductions::{FilterConfig, ReductionCertificate, ReductionWitness};
