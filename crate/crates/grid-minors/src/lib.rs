//! Grid-minor toolkit: randomized extraction of apex vertices and
//! `K_{3,t}` minors from graphs with large grid minors, with verifiable
//! certificates for every step.
//!
//! The crate is organised around checkable witnesses:
//!
//! - [`model::MinorModel`] certifies a minor via branch sets and
//!   representing edges; [`model::verify_minor_model`] re-checks one.
//! - [`decomposition::TreeDecomposition`] certifies a width bound;
//!   [`decomposition::verify_decomposition`] re-checks one.
//! - The extractors in [`apex`] and [`k3t`] are Las Vegas searches: they
//!   retry random choices until a candidate passes verification, so a
//!   returned certificate is always valid and failures are explicit
//!   (`TrialsExhausted`), never silent.
//! - [`oracle`] holds small-instance ground truth (exact treewidth, minor
//!   containment, planarity) used to cross-check everything else.
//!
//! Heavy loops (per-branch-set verification, per-bag treewidth, extraction
//! trials) run data-parallel under the default `parallel` feature; every
//! such entry point has a sequential `_seq` twin with identical output.

pub mod apex;
pub mod arith;
pub mod contraction;
pub mod decomposition;
pub mod error;
pub mod generators;
pub mod graph;
pub mod grid;
pub mod io;
pub mod k3t;
pub mod layering;
pub mod lower_bound;
pub mod model;
pub mod oracle;
pub mod random;
pub mod transform;

pub use apex::{
    apex_block_size, apex_exact_threshold, apex_grid_threshold, extract_apex, extract_apex_seq,
    simple_threshold, ApexExtraction, ApexInstance, SubgridScheme,
};
pub use contraction::{contract_partition, lift_model};
pub use decomposition::{
    contracted_layer_graph, layered_path_decomposition, ttw_upper, ttw_upper_seq,
    verify_decomposition, LayeredDecomposition, TreeDecomposition,
};
pub use error::{Error, Result};
pub use generators::{
    embedded_grid_model, grid_with_apex, random_connected_graph, random_grid_partition_model,
    ApexAttachment,
};
pub use graph::Graph;
pub use grid::{make_grid, GridSpec};
pub use io::{
    read_decomposition, read_graph, read_model, read_witness, write_decomposition, write_graph,
    write_model, write_witness, ModelFile,
};
pub use k3t::{
    extract_k3t, extract_k3t_seq, genus_grid_threshold, genus_to_k3t, greedy_independent_set,
    k3t_grid_threshold, k3t_guarantee, k3t_pattern, ColumnSelection, Digraph, K3tExtraction,
    K3tGuarantee, SurvivorSets,
};
pub use layering::{bfs_layering, centre_paths, radius_and_centre, BfsLayering, CentrePaths};
pub use lower_bound::{
    apex_lb_params, lower_bound_graph, lower_bound_params_genus, verify_lower_bound,
    LowerBoundWitness,
};
pub use model::{verify_minor_model, verify_minor_model_seq, MinorModel};
pub use oracle::{exact_treewidth, minor_test, planarity_test, MinorOutcome, OracleLimits};
pub use random::TrialConfig;
pub use transform::{
    contract_subgrids, crop_grid_model, double_model, k2t_model, shrink_grid_model_avoiding,
    DoubledModel,
};
