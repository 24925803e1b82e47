//! Generators for the radius-`r` lower-bound family: a `(2r-1)k` square
//! grid whose `(2r-1) x (2r-1)` blocks carry diagonal shortcut edges, plus
//! one apex vertex joined to every block centre.
//!
//! The diagonals give every block cell a path of length at most `r-1` to
//! its centre (Chebyshev metric), so the whole graph has radius at most
//! `r`; removing the apex leaves a planar graph, which witnesses Euler
//! genus at most `2k^2` (one handle per apex edge). The grid itself stays
//! an intact subgraph, so the family shows the grid-size thresholds cannot
//! be lowered below `(2r-1)k`.

use crate::arith::{ceil_sqrt_ratio, floor_sqrt_ratio};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::grid::{make_grid, GridSpec};
use crate::oracle::planarity_test;

/// Structural witness accompanying a generated lower-bound graph.
#[derive(Clone, Debug)]
pub struct LowerBoundWitness {
    /// The apex vertex (the highest id).
    pub apex: usize,
    /// Block centres, i.e. the exact neighbourhood of the apex.
    pub w_set: Vec<usize>,
    /// Side lengths of the grid core, both `(2r-1)k`.
    pub grid_dims: (usize, usize),
    /// The graph without the apex: grid plus diagonal shortcuts.
    pub planar_part: Graph,
    /// The added non-grid edges, as host vertex pairs.
    pub diagonal_edges: Vec<(usize, usize)>,
}

/// Builds the radius-`r` lower-bound graph with `k^2` blocks.
///
/// Block `(bx, by)` (1-based) spans rows and columns
/// `(2r-1)(b-1)+1 ..= (2r-1)b`; its centre is
/// `((2r-1)bx - (r-1), (2r-1)by - (r-1))`. Each block gains both of its
/// main diagonals as unit-cell shortcut edges; the two diagonals use
/// distinct unit faces (the block side `2r-1` is odd), so planarity is
/// preserved.
pub fn lower_bound_graph(r: usize, k: usize) -> Result<(Graph, GridSpec, LowerBoundWitness)> {
    if r < 1 || k < 1 {
        return Err(Error::InvalidArgument(
            "radius and block count must be at least 1".into(),
        ));
    }
    let b = 2 * r - 1;
    let side = b * k;
    let (grid, spec) = make_grid(side, side)?;

    let mut planar_part = grid.clone();
    let mut diagonal_edges = Vec::new();
    for bx in 1..=k {
        for by in 1..=k {
            let (lo_x, lo_y) = (b * (bx - 1) + 1, b * (by - 1) + 1);
            for i in 0..b - 1 {
                let main = (
                    spec.id(lo_x + i, lo_y + i),
                    spec.id(lo_x + i + 1, lo_y + i + 1),
                );
                let anti = (
                    spec.id(lo_x + i, lo_y + b - 1 - i),
                    spec.id(lo_x + i + 1, lo_y + b - 2 - i),
                );
                planar_part.add_edge(main.0, main.1);
                planar_part.add_edge(anti.0, anti.1);
                diagonal_edges.push(main);
                diagonal_edges.push(anti);
            }
        }
    }

    let apex = planar_part.vertex_count();
    let mut g = Graph::new(apex + 1);
    for (u, v) in planar_part.edges() {
        g.add_edge(u, v);
    }
    let mut w_set = Vec::with_capacity(k * k);
    for bx in 1..=k {
        for by in 1..=k {
            let centre = spec.id(b * bx - (r - 1), b * by - (r - 1));
            w_set.push(centre);
            g.add_edge(centre, apex);
        }
    }
    w_set.sort_unstable();

    let witness = LowerBoundWitness {
        apex,
        w_set,
        grid_dims: (side, side),
        planar_part,
        diagonal_edges,
    };
    Ok((g, spec, witness))
}

/// Re-checks every structural claim of a lower-bound witness against the
/// graph it came with: the grid is an intact subgraph under the identity
/// coordinate map, the apex's neighbourhood is exactly the block centres,
/// every vertex lies within distance `r` of the apex, and the apex-free
/// part is planar.
pub fn verify_lower_bound(
    g: &Graph,
    spec: &GridSpec,
    witness: &LowerBoundWitness,
    r: usize,
    k: usize,
) -> Result<()> {
    let b = 2 * r - 1;
    let side = b * k;
    if witness.grid_dims != (side, side)
        || spec.rows() != side
        || spec.cols() != side
        || g.vertex_count() != side * side + 1
    {
        return Err(Error::Defect("witness dimensions do not match".into()));
    }
    let (grid, _) = make_grid(side, side)?;
    for (u, v) in grid.edges() {
        if !g.has_edge(u, v) {
            return Err(Error::Defect(format!("grid edge {u}-{v} missing")));
        }
    }
    let mut expected_w: Vec<usize> = (1..=k)
        .flat_map(|bx| (1..=k).map(move |by| (bx, by)))
        .map(|(bx, by)| spec.id(b * bx - (r - 1), b * by - (r - 1)))
        .collect();
    expected_w.sort_unstable();
    if witness.w_set != expected_w {
        return Err(Error::Defect("block centres are misplaced".into()));
    }
    if g.neighbors(witness.apex) != expected_w.as_slice() {
        return Err(Error::Defect(
            "the apex neighbourhood differs from the block centres".into(),
        ));
    }
    for (v, &dv) in g.distances(witness.apex).iter().enumerate() {
        if dv > r {
            return Err(Error::RadiusExceeded {
                witness: format!("vertex {v}"),
                distance: dv,
                bound: r,
            });
        }
    }
    if witness.planar_part.vertex_count() != side * side {
        return Err(Error::Defect("planar part has the wrong order".into()));
    }
    for (u, v) in witness.planar_part.edges() {
        if !g.has_edge(u, v) {
            return Err(Error::Defect(format!(
                "planar-part edge {u}-{v} missing from the graph"
            )));
        }
    }
    if !planarity_test(&witness.planar_part) {
        return Err(Error::Defect("the apex-free part is not planar".into()));
    }
    Ok(())
}

/// Parameters realising Euler genus at most `g`: `k = floor(sqrt(g/2))`
/// blocks (so `2k^2 <= g`) and grid side `n = (2r-1)k`.
pub fn lower_bound_params_genus(g: u64, r: u64) -> Result<(u64, u64)> {
    if g < 2 {
        return Err(Error::InvalidArgument(
            "genus must be at least 2 to fit one handle pair".into(),
        ));
    }
    if r < 1 {
        return Err(Error::InvalidArgument("radius must be at least 1".into()));
    }
    let k = floor_sqrt_ratio(g, 2);
    debug_assert!(2 * k * k <= g);
    Ok((k, (2 * r - 1) * k))
}

/// Parameters for the apex-minor-free variant: `k = ceil(sqrt((t-3)/6)) - 1`
/// blocks and grid side `n = (2r-1)k`; the returned flag checks
/// `2k^2 < (t-3)/3` (equivalently `6k^2 < t-3`), which holds for every
/// `k >= 0`.
pub fn apex_lb_params(t: u64, r: u64) -> Result<(u64, u64, bool)> {
    if t < 4 {
        return Err(Error::InvalidArgument(
            "a planar triangulation needs at least 4 vertices".into(),
        ));
    }
    if r < 1 {
        return Err(Error::InvalidArgument("radius must be at least 1".into()));
    }
    let k = ceil_sqrt_ratio(t - 3, 6) - 1;
    let genus_check = 6 * k * k < t - 3;
    Ok((k, (2 * r - 1) * k, genus_check))
}
