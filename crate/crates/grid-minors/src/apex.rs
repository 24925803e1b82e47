//! Randomized extraction of an apex-graph model from a bounded-radius
//! graph with a large grid minor.
//!
//! Given a graph `g` whose eccentricity from a centre `alpha` is at most
//! `r`, a model of a large grid in `g`, and a model of `H = A - z` in a
//! small `k x l` grid, the extractor builds a verified model of the apex
//! graph `A` itself. The big grid is carved into `n x n` blocks
//! (`n = 4(r-1)d + 1` where `d` is the apex degree); each branch set of
//! `H` becomes a union of block-aligned crosses and bars whose offsets are
//! sampled uniformly per block, and the apex vertex is realised by path
//! suffixes towards `alpha` that provably miss every other branch set
//! unless some sampled offset collides with a precomputed risk pair — in
//! which case the trial is rejected and the offsets are resampled.

use crate::contraction::{contract_partition, lift_model};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::grid::{make_grid, GridSpec};
use crate::layering::{centre_paths, CentrePaths};
use crate::model::{verify_minor_model, MinorModel};
use crate::random::{trial_rng, TrialConfig};
use crate::transform::{crop_grid_model, double_model, shrink_grid_model_avoiding, DoubledModel};
use num_bigint::BigUint;
use rand::Rng;
use std::collections::{BTreeMap, BTreeSet};

/// An apex graph `A` split at its apex vertex `z`: the pattern `A - z`
/// (with compacted vertex ids) plus the neighbourhood of `z` expressed in
/// pattern ids.
#[derive(Clone, Debug)]
pub struct ApexInstance {
    apex: Graph,
    z: usize,
    pattern: Graph,
    z_neighbors: Vec<usize>,
}

impl ApexInstance {
    pub fn new(apex: Graph, z: usize) -> Result<Self> {
        if z >= apex.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: z,
                len: apex.vertex_count(),
            });
        }
        if apex.vertex_count() < 2 {
            return Err(Error::InvalidArgument(
                "an apex graph needs at least two vertices".into(),
            ));
        }
        if apex.degree(z) == 0 {
            return Err(Error::InvalidArgument(
                "the apex vertex must have at least one neighbour".into(),
            ));
        }
        let compact = |w: usize| if w < z { w } else { w - 1 };
        let mut pattern = Graph::new(apex.vertex_count() - 1);
        for (u, v) in apex.edges() {
            if u != z && v != z {
                pattern.add_edge(compact(u), compact(v));
            }
        }
        let z_neighbors = apex.neighbors(z).iter().map(|&w| compact(w)).collect();
        Ok(ApexInstance {
            apex,
            z,
            pattern,
            z_neighbors,
        })
    }

    pub fn apex(&self) -> &Graph {
        &self.apex
    }

    pub fn z(&self) -> usize {
        self.z
    }

    /// `A - z`, over ids `0..order-1` (ids above `z` shifted down by one).
    pub fn pattern(&self) -> &Graph {
        &self.pattern
    }

    /// Neighbours of `z`, as pattern ids.
    pub fn z_neighbors(&self) -> &[usize] {
        &self.z_neighbors
    }

    /// Degree of the apex vertex.
    pub fn degree(&self) -> usize {
        self.z_neighbors.len()
    }

    /// Number of vertices of `A`.
    pub fn order(&self) -> usize {
        self.apex.vertex_count()
    }

    /// Pattern id of an `A`-vertex other than `z`.
    pub fn pattern_id(&self, w: usize) -> usize {
        debug_assert_ne!(w, self.z);
        if w < self.z {
            w
        } else {
            w - 1
        }
    }
}

/// The `n x n` block structure of a `2kn x 2ln` grid: block `(a, b)` with
/// `a` in `1..=2k`, `b` in `1..=2l` holds the cells
/// `(a, b, p, q) = ((a-1)n + p, (b-1)n + q)` for `p, q` in `1..=n`.
#[derive(Clone, Debug)]
pub struct SubgridScheme {
    n: usize,
    big: GridSpec,
    block: GridSpec,
}

impl SubgridScheme {
    /// `k x l` is the grid of the input pattern model *before* doubling,
    /// so blocks are indexed by the `2k x 2l` doubled grid.
    pub fn new(k: usize, l: usize, n: usize) -> Result<Self> {
        if k == 0 || l == 0 || n == 0 {
            return Err(Error::InvalidArgument(format!(
                "scheme parameters must be positive, got k={k}, l={l}, n={n}"
            )));
        }
        Ok(SubgridScheme {
            n,
            big: GridSpec::new(2 * k * n, 2 * l * n)?,
            block: GridSpec::new(2 * k, 2 * l)?,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Addressing of the full `2kn x 2ln` grid.
    pub fn big_spec(&self) -> &GridSpec {
        &self.big
    }

    /// Addressing of the `2k x 2l` block grid.
    pub fn block_spec(&self) -> &GridSpec {
        &self.block
    }

    fn check_block(&self, a: usize, b: usize, i: usize) -> Result<()> {
        if !self.block.contains(a, b) || !(1..=self.n).contains(&i) {
            return Err(Error::InvalidArgument(format!(
                "block index (a={a}, b={b}, i={i}) outside a {}x{} scheme with n={}",
                self.block.rows(),
                self.block.cols(),
                self.n
            )));
        }
        Ok(())
    }

    /// Grid vertex id of `(a, b, p, q)`.
    pub fn cell(&self, a: usize, b: usize, p: usize, q: usize) -> usize {
        self.big.id((a - 1) * self.n + p, (b - 1) * self.n + q)
    }
}

/// The two bars and the cross of a block: the horizontal bar fixes the
/// second in-block coordinate at `i`, the vertical bar the first, and the
/// cross is their union (`2n - 1` cells, since the bars share one cell).
pub fn bars_and_cross(
    s: &SubgridScheme,
    a: usize,
    b: usize,
    i: usize,
) -> Result<(Vec<usize>, Vec<usize>, Vec<usize>)> {
    s.check_block(a, b, i)?;
    let horizontal: Vec<usize> = (1..=s.n()).map(|p| s.cell(a, b, p, i)).collect();
    let vertical: Vec<usize> = (1..=s.n()).map(|p| s.cell(a, b, i, p)).collect();
    let mut cross: Vec<usize> = horizontal.iter().chain(&vertical).copied().collect();
    cross.sort_unstable();
    cross.dedup();
    Ok((horizontal, vertical, cross))
}

/// A place where a sampled offset could make the apex branch set collide
/// with another branch set: `cell` is the diagonal cell `(a, b, i, i)` of
/// the block holding some anchor, and `hit` is an interior vertex of
/// `cell`'s path to the centre. The pair fires when the block's sampled
/// offset equals `i` and `hit` is swallowed by a branch set other than
/// `pattern_vertex`'s.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RiskPair {
    /// Pattern vertex whose anchor lies in this block.
    pub pattern_vertex: usize,
    /// Block coordinates `(a, b)`.
    pub block: (usize, usize),
    /// Diagonal index `i`.
    pub diag: usize,
    /// Grid vertex id of `(a, b, i, i)`.
    pub cell: usize,
    /// Interior vertex of the cell's centre path.
    pub hit: usize,
}

/// Enumerates every risk pair: for each neighbour `u` of the apex vertex,
/// every diagonal cell of `u`'s anchor block, paired with each interior
/// vertex of that cell's path to the centre. `cp` must be computed on the
/// contracted host whose first vertices are the grid cells, in grid order.
/// At most `d * n * (r - 1)` pairs exist when paths have at most `r - 1`
/// interior vertices.
pub fn risk_pairs(
    scheme: &SubgridScheme,
    dm: &DoubledModel,
    cp: &CentrePaths,
    z_neighbors: &[usize],
) -> Result<Vec<RiskPair>> {
    let mut pairs = Vec::new();
    for &u in z_neighbors {
        let anchor = *dm
            .anchors
            .get(u)
            .ok_or(Error::MissingAnchor { vertex: u })?;
        let (a, b) = dm.spec.coord(anchor);
        for i in 1..=scheme.n() {
            let cell = scheme.cell(a, b, i, i);
            for hit in cp.internal(cell) {
                pairs.push(RiskPair {
                    pattern_vertex: u,
                    block: (a, b),
                    diag: i,
                    cell,
                    hit,
                });
            }
        }
    }
    Ok(pairs)
}

/// Pattern-vertex owner of each doubled-grid cell (`usize::MAX` where
/// uncovered).
fn block_owners(dm: &DoubledModel) -> Vec<usize> {
    let mut owner = vec![usize::MAX; dm.model.host.vertex_count()];
    for (u, set) in dm.model.branch_sets.iter().enumerate() {
        for &c in set {
            owner[c] = u;
        }
    }
    owner
}

/// Builds the candidate branch sets over the big grid for one offset
/// vector: per covered block a cross at the block's own offset, plus bars
/// that reach towards the next block for every doubled-grid edge inside a
/// branch set or representing a pattern edge. Returns the sets and the
/// cell-owner array.
fn assemble_sets(
    scheme: &SubgridScheme,
    dm: &DoubledModel,
    offsets: &[usize],
    j_owner: &[usize],
) -> (Vec<Vec<usize>>, Vec<usize>) {
    let n = scheme.n();
    let block = scheme.block_spec();
    let mut owner = vec![usize::MAX; scheme.big_spec().vertex_count()];
    let mut sets: Vec<Vec<usize>> = vec![Vec::new(); dm.model.branch_sets.len()];

    fn add(owner: &mut [usize], sets: &mut [Vec<usize>], u: usize, cell: usize) {
        if owner[cell] == usize::MAX {
            owner[cell] = u;
            sets[u].push(cell);
        } else {
            debug_assert_eq!(owner[cell], u, "blocks of distinct branch sets never mix");
        }
    }

    for (u, bset) in dm.model.branch_sets.iter().enumerate() {
        for &jc in bset {
            let (a, b) = dm.spec.coord(jc);
            let m = offsets[block.id(a, b)];
            for p in 1..=n {
                add(&mut owner, &mut sets, u, scheme.cell(a, b, p, m));
                add(&mut owner, &mut sets, u, scheme.cell(a, b, m, p));
            }
            // Bars towards the next block of the same branch set; the
            // neighbouring block's cross meets them at its first cell.
            if a < block.rows() && j_owner[dm.spec.id(a + 1, b)] == u {
                let m2 = offsets[block.id(a + 1, b)];
                for p in 1..=n {
                    add(&mut owner, &mut sets, u, scheme.cell(a, b, p, m2));
                }
            }
            if b < block.cols() && j_owner[dm.spec.id(a, b + 1)] == u {
                let m2 = offsets[block.id(a, b + 1)];
                for p in 1..=n {
                    add(&mut owner, &mut sets, u, scheme.cell(a, b, m2, p));
                }
            }
        }
    }

    // Bars realising representing edges: the lower (or left) block grows a
    // bar at the offset of the opposite block.
    for (&(u, v), &(e1, e2)) in &dm.model.rep_edges {
        let (eu, ev) = if j_owner[e1] == u { (e1, e2) } else { (e2, e1) };
        let (a1, b1) = dm.spec.coord(eu);
        let (a2, b2) = dm.spec.coord(ev);
        if a2 == a1 + 1 {
            let m = offsets[block.id(a2, b2)];
            for p in 1..=n {
                add(&mut owner, &mut sets, u, scheme.cell(a1, b1, p, m));
            }
        } else if a1 == a2 + 1 {
            let m = offsets[block.id(a1, b1)];
            for p in 1..=n {
                add(&mut owner, &mut sets, v, scheme.cell(a2, b2, p, m));
            }
        } else if b2 == b1 + 1 {
            let m = offsets[block.id(a2, b2)];
            for p in 1..=n {
                add(&mut owner, &mut sets, u, scheme.cell(a1, b1, m, p));
            }
        } else {
            let m = offsets[block.id(a1, b1)];
            for p in 1..=n {
                add(&mut owner, &mut sets, v, scheme.cell(a2, b2, m, p));
            }
        }
    }

    for set in &mut sets {
        set.sort_unstable();
    }
    (sets, owner)
}

/// Representing edges of the candidate model: for each pattern edge, the
/// grid edge joining the lower/left block's bar end to the opposite
/// block's cross, oriented with the key's first vertex's cell first.
fn candidate_rep_edges(
    scheme: &SubgridScheme,
    dm: &DoubledModel,
    offsets: &[usize],
    j_owner: &[usize],
) -> BTreeMap<(usize, usize), (usize, usize)> {
    let n = scheme.n();
    let block = scheme.block_spec();
    let mut reps = BTreeMap::new();
    for (&(u, v), &(e1, e2)) in &dm.model.rep_edges {
        let (eu, ev) = if j_owner[e1] == u { (e1, e2) } else { (e2, e1) };
        let (a1, b1) = dm.spec.coord(eu);
        let (a2, b2) = dm.spec.coord(ev);
        let pair = if a2 == a1 + 1 {
            let m = offsets[block.id(a2, b2)];
            (scheme.cell(a1, b1, n, m), scheme.cell(a2, b2, 1, m))
        } else if a1 == a2 + 1 {
            let m = offsets[block.id(a1, b1)];
            (scheme.cell(a1, b1, 1, m), scheme.cell(a2, b2, n, m))
        } else if b2 == b1 + 1 {
            let m = offsets[block.id(a2, b2)];
            (scheme.cell(a1, b1, m, n), scheme.cell(a2, b2, m, 1))
        } else {
            let m = offsets[block.id(a1, b1)];
            (scheme.cell(a1, b1, m, 1), scheme.cell(a2, b2, m, n))
        };
        reps.insert((u, v), pair);
    }
    reps
}

fn check_offsets(scheme: &SubgridScheme, offsets: &[usize]) -> Result<()> {
    let blocks = scheme.block_spec().vertex_count();
    if offsets.len() != blocks {
        return Err(Error::InvalidArgument(format!(
            "expected {blocks} block offsets, got {}",
            offsets.len()
        )));
    }
    if let Some(&bad) = offsets.iter().find(|&&m| m < 1 || m > scheme.n()) {
        return Err(Error::InvalidArgument(format!(
            "offset {bad} outside 1..={}",
            scheme.n()
        )));
    }
    Ok(())
}

/// Assembles the full pattern model in the `2kn x 2ln` grid for a given
/// offset vector. Any valid offsets produce a valid model; offsets only
/// matter for what the apex branch set must later avoid.
pub fn candidate_model(
    scheme: &SubgridScheme,
    dm: &DoubledModel,
    offsets: &[usize],
) -> Result<MinorModel> {
    check_offsets(scheme, offsets)?;
    if (dm.spec.rows(), dm.spec.cols()) != (scheme.block_spec().rows(), scheme.block_spec().cols())
    {
        return Err(Error::NotAGrid {
            rows: scheme.block_spec().rows(),
            cols: scheme.block_spec().cols(),
        });
    }
    let j_owner = block_owners(dm);
    let (sets, _) = assemble_sets(scheme, dm, offsets, &j_owner);
    let reps = candidate_rep_edges(scheme, dm, offsets, &j_owner);
    let (host, _) = make_grid(scheme.big_spec().rows(), scheme.big_spec().cols())?;
    Ok(MinorModel::new(host, dm.model.pattern.clone(), sets, reps))
}

/// Successful extraction: the verified apex-graph model plus the number of
/// sampling trials it took (1-based).
#[derive(Clone, Debug)]
pub struct ApexExtraction {
    pub model: MinorModel,
    pub trials: u32,
}

/// Extracts a verified model of the apex graph from `g`.
///
/// `gm` must be a model of the `gm_spec` grid in `g` with dimensions at
/// least `(2kn+1) x (2ln+1)`, and `hm` a model of `inst.pattern()` in the
/// `k x l` grid `hm_spec`. The centre `alpha` must see every vertex of `g`
/// within distance `r`. Offsets are resampled (independently per trial)
/// until no risk pair fires; the certificate is then assembled, lifted
/// back through the grid model's contraction, verified, and returned.
/// Trials may be examined in parallel, but the returned certificate is
/// always the lowest-numbered clean trial's.
#[allow(clippy::too_many_arguments)]
pub fn extract_apex(
    g: &Graph,
    alpha: usize,
    r: usize,
    gm: &MinorModel,
    gm_spec: &GridSpec,
    inst: &ApexInstance,
    hm: &MinorModel,
    hm_spec: &GridSpec,
    cfg: TrialConfig,
) -> Result<ApexExtraction> {
    extract_impl(
        g,
        alpha,
        r,
        gm,
        gm_spec,
        inst,
        hm,
        hm_spec,
        cfg,
        cfg!(feature = "parallel"),
    )
}

/// Single-threaded variant of [`extract_apex`]; same certificate for the
/// same inputs and seed.
#[allow(clippy::too_many_arguments)]
pub fn extract_apex_seq(
    g: &Graph,
    alpha: usize,
    r: usize,
    gm: &MinorModel,
    gm_spec: &GridSpec,
    inst: &ApexInstance,
    hm: &MinorModel,
    hm_spec: &GridSpec,
    cfg: TrialConfig,
) -> Result<ApexExtraction> {
    extract_impl(g, alpha, r, gm, gm_spec, inst, hm, hm_spec, cfg, false)
}

const TRIAL_BATCH: u32 = 16;

#[allow(clippy::too_many_arguments)]
fn extract_impl(
    g: &Graph,
    alpha: usize,
    r: usize,
    gm: &MinorModel,
    gm_spec: &GridSpec,
    inst: &ApexInstance,
    hm: &MinorModel,
    hm_spec: &GridSpec,
    cfg: TrialConfig,
    parallel: bool,
) -> Result<ApexExtraction> {
    if r == 0 {
        return Err(Error::InvalidArgument(
            "the radius bound must be at least 1".into(),
        ));
    }
    if alpha >= g.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: alpha,
            len: g.vertex_count(),
        });
    }
    if hm.pattern != *inst.pattern() {
        return Err(Error::InvalidArgument(
            "the small-grid model's pattern is not the apex graph minus its apex vertex".into(),
        ));
    }
    for (v, &dv) in g.distances(alpha).iter().enumerate() {
        if dv == usize::MAX {
            return Err(Error::Unreachable {
                from: alpha,
                vertex: v,
            });
        }
        if dv > r {
            return Err(Error::RadiusExceeded {
                witness: format!("vertex {v}"),
                distance: dv,
                bound: r,
            });
        }
    }

    let d = inst.degree();
    let n = 4 * (r - 1) * d + 1;
    let (k, l) = (hm_spec.rows(), hm_spec.cols());
    let (rows, cols) = (2 * k * n, 2 * l * n);
    if gm_spec.rows() < rows + 1 || gm_spec.cols() < cols + 1 {
        return Err(Error::DimensionTooSmall {
            need_rows: rows + 1,
            need_cols: cols + 1,
            got_rows: gm_spec.rows(),
            got_cols: gm_spec.cols(),
        });
    }

    // Work inside a grid model that avoids the centre and has the exact
    // block-aligned dimensions.
    let (shrunk, shrunk_spec) = shrink_grid_model_avoiding(gm, gm_spec, alpha)?;
    let (cropped, big) = crop_grid_model(&shrunk, &shrunk_spec, rows, cols)?;

    // Contract each grid branch set to one vertex; cell ids come first in
    // the quotient, in grid order, so grid ids are quotient ids.
    let (quotient, map) = contract_partition(g, &cropped.branch_sets)?;
    let cells = big.vertex_count();
    let alpha_q = map[alpha];
    debug_assert!(alpha_q >= cells, "the centre is outside every branch set");
    let cp = centre_paths(&quotient, alpha_q)?;

    let dm = double_model(hm, hm_spec)?;
    let scheme = SubgridScheme::new(k, l, n)?;
    let j_owner = block_owners(&dm);
    let pairs = risk_pairs(&scheme, &dm, &cp, inst.z_neighbors())?;

    let limit = cfg.limit_or(8 * n as u32);
    let block_spec = scheme.block_spec();
    let blocks = block_spec.vertex_count();

    let sample = |trial: u32| -> Vec<usize> {
        let mut rng = trial_rng(cfg.seed, trial as u64);
        (0..blocks).map(|_| rng.gen_range(1..=n)).collect()
    };
    let clean = |trial: u32| -> Option<u32> {
        let offsets = sample(trial);
        let (_, owner) = assemble_sets(&scheme, &dm, &offsets, &j_owner);
        let bad = pairs.iter().any(|p| {
            offsets[block_spec.id(p.block.0, p.block.1)] == p.diag
                && p.hit < cells
                && owner[p.hit] != usize::MAX
                && owner[p.hit] != p.pattern_vertex
        });
        (!bad).then_some(trial)
    };

    let mut winner = None;
    let mut start = 0u32;
    while winner.is_none() && start < limit {
        let end = (start + TRIAL_BATCH).min(limit);
        winner = first_clean(start..end, parallel, &clean);
        start = end;
    }
    let trial = winner.ok_or(Error::TrialsExhausted { trials: limit })?;

    // Assemble the certificate for the winning trial.
    let offsets = sample(trial);
    let (sets, owner) = assemble_sets(&scheme, &dm, &offsets, &j_owner);
    let pattern_reps = candidate_rep_edges(&scheme, &dm, &offsets, &j_owner);

    // The apex branch set: for each neighbour u of z, walk the centre path
    // of u's sampled anchor cell and keep the strict suffix after its last
    // vertex inside u's own candidate set. No-risk-pair firing guarantees
    // the suffix avoids every other candidate set; cutting at the *last*
    // own vertex makes it avoid u's set as well.
    let mut apex_set: BTreeSet<usize> = BTreeSet::new();
    let mut apex_edges: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for &u in inst.z_neighbors() {
        let (a, b) = dm.spec.coord(dm.anchors[u]);
        let m = offsets[block_spec.id(a, b)];
        let anchor_cell = scheme.cell(a, b, m, m);
        let path = cp.path(anchor_cell);
        let last_own = path
            .iter()
            .rposition(|&v| v < cells && owner[v] == u)
            .ok_or_else(|| Error::Defect("anchor cell missing from its own set".into()))?;
        if last_own + 1 >= path.len() {
            return Err(Error::Defect(
                "the centre lies inside a candidate branch set".into(),
            ));
        }
        apex_set.extend(&path[last_own + 1..]);
        apex_edges.insert(u, (path[last_own], path[last_own + 1]));
    }

    let t = inst.order();
    let z = inst.z();
    let mut branch_sets = vec![Vec::new(); t];
    for w in 0..t {
        branch_sets[w] = if w == z {
            apex_set.iter().copied().collect()
        } else {
            sets[inst.pattern_id(w)].clone()
        };
    }
    let mut rep_edges = BTreeMap::new();
    for (w1, w2) in inst.apex.edges() {
        let value = if w1 == z || w2 == z {
            let u = inst.pattern_id(if w1 == z { w2 } else { w1 });
            let (in_u, in_z) = apex_edges[&u];
            if w1 == z {
                (in_z, in_u)
            } else {
                (in_u, in_z)
            }
        } else {
            pattern_reps[&(inst.pattern_id(w1), inst.pattern_id(w2))]
        };
        rep_edges.insert((w1, w2), value);
    }

    let quotient_model = MinorModel::new(quotient, inst.apex.clone(), branch_sets, rep_edges);
    let lifted = lift_model(g, &map, &quotient_model)?;
    if let Err(violations) = verify_minor_model(&lifted) {
        let msgs: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
        return Err(Error::Defect(format!(
            "extracted certificate failed verification: {}",
            msgs.join("; ")
        )));
    }
    Ok(ApexExtraction {
        model: lifted,
        trials: trial + 1,
    })
}

/// First trial in the range accepted by `clean`; under parallelism the
/// whole range is examined and the minimum taken, so the winner matches
/// the sequential scan.
fn first_clean<F>(range: std::ops::Range<u32>, parallel: bool, clean: &F) -> Option<u32>
where
    F: Fn(u32) -> Option<u32> + Sync,
{
    if parallel {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            return range.into_par_iter().filter_map(clean).min();
        }
    }
    range.into_iter().find_map(clean)
}

/// The grid side length beyond which a graph of radius `r` with an
/// excluded `t`-vertex apex minor of apex degree `d` cannot go.
pub fn apex_grid_threshold(r: u64, t: u64, d: u64) -> Result<u64> {
    if r < 1 {
        return Err(Error::InvalidArgument("radius must be at least 1".into()));
    }
    if t < 2 {
        return Err(Error::InvalidArgument(
            "an apex graph has at least 2 vertices".into(),
        ));
    }
    if d < 1 || d > t - 1 {
        return Err(Error::InvalidArgument(format!(
            "apex degree {d} outside 1..={}",
            t - 1
        )));
    }
    16u64
        .checked_mul(r)
        .and_then(|x| x.checked_mul(t))
        .and_then(|x| x.checked_mul(d))
        .ok_or_else(|| Error::InvalidArgument("threshold overflows 64 bits".into()))
}

/// Block size `n = 4(r-1)d + 1` used by the extractor.
pub fn apex_block_size(r: u64, d: u64) -> Result<u64> {
    if r < 1 || d < 1 {
        return Err(Error::InvalidArgument(
            "radius and apex degree must be at least 1".into(),
        ));
    }
    Ok(4 * (r - 1) * d + 1)
}

/// Exact grid dimensions `(2kn + 1, 2ln + 1)` that force an apex minor,
/// given a `k x l` pattern-grid model.
pub fn apex_exact_threshold(k: u64, l: u64, r: u64, d: u64) -> Result<(u64, u64)> {
    if k < 1 || l < 1 {
        return Err(Error::InvalidArgument(
            "grid dimensions must be at least 1".into(),
        ));
    }
    let n = apex_block_size(r, d)?;
    Ok((2 * k * n + 1, 2 * l * n + 1))
}

/// `(2t - 2)^r`: the grid bound obtained by iterating the one-layer
/// argument `r` times, exact at any size.
pub fn simple_threshold(t: u64, r: u32) -> Result<BigUint> {
    if t < 2 {
        return Err(Error::InvalidArgument(
            "an apex graph has at least 2 vertices".into(),
        ));
    }
    Ok(BigUint::from(2 * t - 2).pow(r))
}
