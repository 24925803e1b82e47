//! Ready-made hosts and models: grid-plus-apex fixtures, identity grid
//! embeddings, and seeded random graphs and grid partitions for property
//! suites and benchmarks.

use crate::contraction::contract_partition;
use crate::error::{Error, Result};
use crate::graph::{find_cross_edge, Graph};
use crate::grid::{make_grid, GridSpec};
use crate::model::MinorModel;
use crate::random::trial_rng;
use rand::seq::SliceRandom;
use rand::Rng;
use std::collections::BTreeMap;

/// Which grid cells the extra apex vertex is joined to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ApexAttachment {
    /// Every cell; the result has radius 1 from the apex.
    All,
    /// Cells whose coordinate sum is even; every other cell has all its
    /// neighbours attached, so the radius is exactly 2 (for grids with at
    /// least two cells).
    EvenCoordinateSum,
    /// Cells with both coordinates even. Odd-odd cells end up at distance
    /// 3, so this does *not* give radius 2; kept for contrast and for
    /// exercising radius-violation handling.
    BothCoordinatesEven,
}

impl ApexAttachment {
    fn admits(self, x: usize, y: usize) -> bool {
        match self {
            ApexAttachment::All => true,
            ApexAttachment::EvenCoordinateSum => (x + y).is_multiple_of(2),
            ApexAttachment::BothCoordinatesEven => x.is_multiple_of(2) && y.is_multiple_of(2),
        }
    }
}

/// A `rows x cols` grid plus one apex vertex (the highest id) joined to
/// the cells selected by `attach`.
pub fn grid_with_apex(
    rows: usize,
    cols: usize,
    attach: ApexAttachment,
) -> Result<(Graph, GridSpec, usize)> {
    let (grid, spec) = make_grid(rows, cols)?;
    let apex = grid.vertex_count();
    let mut g = Graph::new(apex + 1);
    for (u, v) in grid.edges() {
        g.add_edge(u, v);
    }
    let mut attached = false;
    for x in 1..=rows {
        for y in 1..=cols {
            if attach.admits(x, y) {
                g.add_edge(spec.id(x, y), apex);
                attached = true;
            }
        }
    }
    if !attached {
        return Err(Error::InvalidArgument(
            "no cell matches the attachment rule; the apex would be isolated".into(),
        ));
    }
    Ok((g, spec, apex))
}

/// The identity model of a `rows x cols` grid on the leading vertices of
/// `g`: cell `(x, y)` is the singleton branch set `{id(x, y)}`. The host
/// must contain all grid edges among those vertices for the model to be
/// valid.
pub fn embedded_grid_model(g: &Graph, rows: usize, cols: usize) -> Result<(MinorModel, GridSpec)> {
    let (pattern, spec) = make_grid(rows, cols)?;
    if g.vertex_count() < pattern.vertex_count() {
        return Err(Error::InvalidArgument(format!(
            "host has {} vertices, fewer than the {} grid cells",
            g.vertex_count(),
            pattern.vertex_count()
        )));
    }
    let branch_sets = (0..pattern.vertex_count()).map(|v| vec![v]).collect();
    let rep_edges = pattern.edges().map(|(u, v)| ((u, v), (u, v))).collect();
    Ok((
        MinorModel::new(g.clone(), pattern, branch_sets, rep_edges),
        spec,
    ))
}

/// A seeded random connected graph: a random attachment tree on `n`
/// vertices plus up to `extra` additional random edges (duplicate draws
/// are skipped, so the final edge count may be lower).
pub fn random_connected_graph(n: usize, extra: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut rng = trial_rng(seed, 0);
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(rng.gen_range(0..v), v);
    }
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// A seeded random model inside a `rows x cols` grid: the grid is split
/// into `parts` connected pieces by multi-source random growth, and the
/// model's pattern is the quotient graph of the pieces. Always verifies.
pub fn random_grid_partition_model(
    rows: usize,
    cols: usize,
    parts: usize,
    seed: u64,
) -> Result<(MinorModel, GridSpec)> {
    let (grid, spec) = make_grid(rows, cols)?;
    let n = grid.vertex_count();
    if parts < 1 || parts > n {
        return Err(Error::InvalidArgument(format!(
            "cannot split {n} cells into {parts} parts"
        )));
    }
    let mut rng = trial_rng(seed, 1);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut part_of = vec![usize::MAX; n];
    for (i, &cell) in order[..parts].iter().enumerate() {
        part_of[cell] = i;
    }
    let mut unassigned = n - parts;
    while unassigned > 0 {
        let boundary: Vec<(usize, usize)> = grid
            .edges()
            .flat_map(|(u, v)| [(u, v), (v, u)])
            .filter(|&(u, v)| part_of[u] != usize::MAX && part_of[v] == usize::MAX)
            .collect();
        let &(u, v) = boundary
            .get(rng.gen_range(0..boundary.len()))
            .expect("a connected grid always has a boundary edge");
        part_of[v] = part_of[u];
        unassigned -= 1;
    }
    let mut sets: Vec<Vec<usize>> = vec![Vec::new(); parts];
    for (cell, &p) in part_of.iter().enumerate() {
        sets[p].push(cell);
    }
    let (pattern, _) = contract_partition(&grid, &sets)?;
    let mut rep_edges = BTreeMap::new();
    for (i, j) in pattern.edges() {
        let (a, b) =
            find_cross_edge(&grid, &sets[i], &sets[j]).expect("quotient edges have a crossing");
        rep_edges.insert((i, j), (a, b));
    }
    Ok((MinorModel::new(grid, pattern, sets, rep_edges), spec))
}
