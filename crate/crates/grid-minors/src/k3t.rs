//! Randomized extraction of a `K_{3,t}` model from a bounded-radius graph
//! with a large grid minor, plus the closed-form grid-size thresholds for
//! `K_{3,t}`-minor-free and bounded-genus graphs.
//!
//! The extractor contracts the grid model, randomly selects one column
//! out of every `2r`-wide band, and resamples until more than half of a
//! fixed anchor set has its centre path disjoint from the selected
//! columns. The three large branch sets are built from the selected
//! columns and one spare row on each side; every surviving anchor grows
//! into a horizontal path between two selected columns and becomes one
//! centre of the `K_{3,t}`.

use crate::arith::{ceil_sqrt, gcd};
use crate::contraction::{contract_partition, lift_model};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::grid::GridSpec;
use crate::layering::{centre_paths, CentrePaths};
use crate::model::{verify_minor_model, verify_minor_model_seq, MinorModel};
use crate::random::{trial_rng, TrialConfig};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// The lower bound `(n - 4r + 2)(m - 4r + 2) / (8r(2r - 1))` on the
/// number of centres extractable from an `n x m` grid at radius `r`,
/// kept as an exact reduced fraction together with its integer form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct K3tGuarantee {
    pub numerator: i128,
    pub denominator: i128,
    /// `ceil` of the fraction when both factors are positive, else 0
    /// (grids of at most `4r - 2` in either dimension promise nothing).
    pub t: u64,
}

impl fmt::Display for K3tGuarantee {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator == 1 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

pub fn k3t_guarantee(n: u64, m: u64, r: u64) -> Result<K3tGuarantee> {
    if n < 1 || m < 1 || r < 1 {
        return Err(Error::InvalidArgument(
            "grid dimensions and radius must be at least 1".into(),
        ));
    }
    let f1 = n as i128 - (4 * r as i128 - 2);
    let f2 = m as i128 - (4 * r as i128 - 2);
    let num = f1 * f2;
    let den = 8 * r as i128 * (2 * r as i128 - 1);
    let (numerator, denominator) = if num == 0 {
        (0, 1)
    } else {
        let g = gcd(num.unsigned_abs(), den as u128) as i128;
        (num / g, den / g)
    };
    let t = if f1 > 0 && f2 > 0 {
        u64::try_from((num + den - 1) / den)
            .map_err(|_| Error::InvalidArgument("guarantee overflows 64 bits".into()))?
    } else {
        0
    };
    Ok(K3tGuarantee {
        numerator,
        denominator,
        t,
    })
}

/// Adjacency-list digraph used for the conflict relation between
/// surviving anchors.
#[derive(Clone, Debug, Default)]
pub struct Digraph {
    out: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Digraph {
            out: vec![Vec::new(); n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    /// Adds `u -> v`, ignoring duplicates.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if !self.out[u].contains(&v) {
            self.out[u].push(v);
        }
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }
}

/// Independent set in the undirected graph underlying `q`, by repeatedly
/// taking a minimum-degree vertex and deleting its neighbourhood. When
/// every out-degree is at most `cap`, the average total degree is at most
/// `2 * cap`, so the result has at least `|V| / (2 * cap + 1)` vertices.
pub fn greedy_independent_set(q: &Digraph, cap: usize) -> Result<Vec<usize>> {
    let n = q.vertex_count();
    for v in 0..n {
        if q.out_degree(v) > cap {
            return Err(Error::OutDegreeExceeded {
                vertex: v,
                degree: q.out_degree(v),
                cap,
            });
        }
    }
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for u in 0..n {
        for &v in q.out_neighbors(u) {
            if u != v {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
    }
    let mut alive = vec![true; n];
    let mut chosen = Vec::new();
    loop {
        let pick = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| adj[v].iter().filter(|&&w| alive[w]).count());
        let Some(v) = pick else { break };
        chosen.push(v);
        alive[v] = false;
        for &w in adj[v].clone().iter() {
            alive[w] = false;
        }
    }
    chosen.sort_unstable();
    debug_assert!(
        chosen.len() * (2 * cap + 1) >= n,
        "greedy independent set fell below the degree bound"
    );
    Ok(chosen)
}

/// One random column choice per `2r`-wide band: band `i` (1-based)
/// contributes column `chosen[i-1]` drawn from
/// `{2(i-1)r + 1, ..., 2ir - 1}`, alternating between the two sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnSelection {
    /// Number of anchor bands; `p + 1` columns are chosen.
    pub p: usize,
    /// Chosen column per band, ascending.
    pub chosen: Vec<usize>,
    /// Columns of odd-numbered bands (first side).
    pub x_columns: Vec<usize>,
    /// Columns of even-numbered bands (second side).
    pub y_columns: Vec<usize>,
}

impl ColumnSelection {
    fn draw(rng: &mut ChaCha8Rng, p: usize, r: usize) -> Self {
        let chosen: Vec<usize> = (1..=p + 1)
            .map(|i| rng.gen_range(2 * (i - 1) * r + 1..=2 * i * r - 1))
            .collect();
        let x_columns = chosen.iter().copied().step_by(2).collect();
        let y_columns = chosen.iter().copied().skip(1).step_by(2).collect();
        ColumnSelection {
            p,
            chosen,
            x_columns,
            y_columns,
        }
    }

    /// Checks band membership, disjointness, and alternation against the
    /// grid width `n` and radius `r`.
    pub fn verify(&self, n: usize, r: usize) -> Result<()> {
        if self.chosen.len() != self.p + 1 {
            return Err(Error::InvalidArgument(format!(
                "expected {} chosen columns, got {}",
                self.p + 1,
                self.chosen.len()
            )));
        }
        for (idx, &c) in self.chosen.iter().enumerate() {
            let i = idx + 1;
            let (lo, hi) = (2 * (i - 1) * r + 1, 2 * i * r - 1);
            if c < lo || c > hi || c > n {
                return Err(Error::InvalidArgument(format!(
                    "column {c} for band {i} outside {lo}..={hi} (grid width {n})"
                )));
            }
        }
        let xs: Vec<usize> = self.chosen.iter().copied().step_by(2).collect();
        let ys: Vec<usize> = self.chosen.iter().copied().skip(1).step_by(2).collect();
        if xs != self.x_columns || ys != self.y_columns {
            return Err(Error::InvalidArgument(
                "side columns do not alternate with the chosen columns".into(),
            ));
        }
        Ok(())
    }
}

/// The shrinking chain of anchor sets, as grid vertex ids: `base` (every
/// band centre in the middle rows), `surviving` (centre path avoids the
/// selected columns), `independent` (pairwise non-conflicting), and
/// `kept` (rows `row` and `m - row + 1` freed for the side sets).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurvivorSets {
    pub base: Vec<usize>,
    pub surviving: Vec<usize>,
    pub independent: Vec<usize>,
    pub kept: Vec<usize>,
    /// The freed row index `q` in `1..=2r-1`.
    pub row: usize,
}

impl SurvivorSets {
    /// The chain must shrink: `kept ⊆ independent ⊆ surviving ⊆ base`.
    pub fn verify(&self) -> Result<()> {
        let base: BTreeSet<_> = self.base.iter().collect();
        let surviving: BTreeSet<_> = self.surviving.iter().collect();
        let independent: BTreeSet<_> = self.independent.iter().collect();
        let kept: BTreeSet<_> = self.kept.iter().collect();
        if !kept.is_subset(&independent)
            || !independent.is_subset(&surviving)
            || !surviving.is_subset(&base)
        {
            return Err(Error::InvalidArgument(
                "survivor sets do not form a shrinking chain".into(),
            ));
        }
        Ok(())
    }
}

/// Successful extraction: the verified model, the achieved number of
/// centres `t`, the number of column resamplings (1-based), and the
/// intermediate selection data for inspection.
#[derive(Clone, Debug)]
pub struct K3tExtraction {
    pub model: MinorModel,
    pub t: u64,
    pub trials: u32,
    pub selection: ColumnSelection,
    pub survivors: SurvivorSets,
}

/// `K_{3,t}`: vertices `0, 1, 2` joined to each of `3..3+t`.
pub fn k3t_pattern(t: usize) -> Graph {
    let mut g = Graph::new(3 + t);
    for c in 0..t {
        g.add_edge(0, 3 + c);
        g.add_edge(1, 3 + c);
        g.add_edge(2, 3 + c);
    }
    g
}

/// Anchor grid positions: `(row, column, band)` with the column at every
/// band centre `2ir` and the row in the middle band `s+1..=m-s`.
fn anchor_cells(spec: &GridSpec, p: usize, r: usize) -> Vec<(usize, usize, usize)> {
    let (m, s) = (spec.rows(), 2 * r - 1);
    let mut anchors = Vec::with_capacity(p * (m - 2 * s));
    for band in 1..=p {
        for row in s + 1..=m - s {
            anchors.push((row, 2 * band * r, band));
        }
    }
    anchors
}

/// Side of each column under a selection: 0 = unselected, 1 = first side,
/// 2 = second side.
fn column_sides(sel: &ColumnSelection, n: usize) -> Vec<u8> {
    let mut side = vec![0u8; n + 1];
    for (idx, &c) in sel.chosen.iter().enumerate() {
        side[c] = if idx % 2 == 0 { 1 } else { 2 };
    }
    side
}

/// Indices of anchors whose centre-path interior avoids the selected
/// columns entirely.
fn surviving_anchors(
    spec: &GridSpec,
    anchors: &[(usize, usize, usize)],
    side: &[u8],
    cp: &CentrePaths,
    cells: usize,
) -> Vec<usize> {
    anchors
        .iter()
        .enumerate()
        .filter(|&(_, &(row, col, _))| {
            cp.internal(spec.id(row, col))
                .iter()
                .all(|&v| v >= cells || side[spec.coord(v).1] == 0)
        })
        .map(|(idx, _)| idx)
        .collect()
}

/// Resamples column selections until more than half the anchors survive;
/// returns the selection, the survivor indices, and the 1-based trial
/// count. This loop is intentionally sequential: a single selection test
/// is linear in the anchor count.
fn sample_selection(
    spec: &GridSpec,
    anchors: &[(usize, usize, usize)],
    cp: &CentrePaths,
    cells: usize,
    p: usize,
    r: usize,
    cfg: TrialConfig,
) -> Result<(ColumnSelection, Vec<usize>, u32)> {
    let limit = cfg.limit_or(64);
    for trial in 0..limit {
        let mut rng = trial_rng(cfg.seed, trial as u64);
        let sel = ColumnSelection::draw(&mut rng, p, r);
        debug_assert!(sel.verify(spec.cols(), r).is_ok());
        let side = column_sides(&sel, spec.cols());
        let survivors = surviving_anchors(spec, anchors, &side, cp, cells);
        if 2 * survivors.len() > anchors.len() {
            return Ok((sel, survivors, trial + 1));
        }
    }
    Err(Error::TrialsExhausted { trials: limit })
}

/// Extracts a verified `K_{3,t}` model from `g`, with `t` at least
/// `k3t_guarantee(n, m, r).t` for an `n`-column, `m`-row grid model.
///
/// `gm` must be a valid model of the `gm_spec` grid in `g` whose branch
/// sets avoid `alpha` (shrink the model around `alpha` first if needed),
/// and every vertex of `g` must be within distance `r` of `alpha`.
pub fn extract_k3t(
    g: &Graph,
    alpha: usize,
    r: usize,
    gm: &MinorModel,
    gm_spec: &GridSpec,
    cfg: TrialConfig,
) -> Result<K3tExtraction> {
    extract_impl(g, alpha, r, gm, gm_spec, cfg, cfg!(feature = "parallel"))
}

/// Single-threaded variant of [`extract_k3t`]; same certificate for the
/// same inputs and seed.
pub fn extract_k3t_seq(
    g: &Graph,
    alpha: usize,
    r: usize,
    gm: &MinorModel,
    gm_spec: &GridSpec,
    cfg: TrialConfig,
) -> Result<K3tExtraction> {
    extract_impl(g, alpha, r, gm, gm_spec, cfg, false)
}

fn extract_impl(
    g: &Graph,
    alpha: usize,
    r: usize,
    gm: &MinorModel,
    gm_spec: &GridSpec,
    cfg: TrialConfig,
    parallel: bool,
) -> Result<K3tExtraction> {
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
    if gm
        .branch_sets
        .iter()
        .any(|s| s.binary_search(&alpha).is_ok())
    {
        return Err(Error::InvalidArgument(
            "a grid branch set contains the centre; shrink the model around it first".into(),
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

    let (m, n) = (gm_spec.rows(), gm_spec.cols());
    let guarantee = k3t_guarantee(n as u64, m as u64, r as u64)?;
    if guarantee.t == 0 {
        return Err(Error::GuaranteeZero);
    }
    let s = 2 * r - 1;
    let p = (n - 2 * r + 1) / (2 * r);

    // Contract each grid branch set to one vertex; cell ids come first in
    // the quotient, in grid order.
    let (quotient, map) = contract_partition(g, &gm.branch_sets)?;
    let cells = gm_spec.vertex_count();
    let alpha_q = map[alpha];
    debug_assert!(alpha_q >= cells);
    let cp = centre_paths(&quotient, alpha_q)?;

    let anchors = anchor_cells(gm_spec, p, r);
    let (sel, surviving, trials) = sample_selection(gm_spec, &anchors, &cp, cells, p, r, cfg)?;
    let side = column_sides(&sel, n);

    // Horizontal runs between the two columns flanking each surviving
    // anchor, recorded cell-by-cell for the conflict relation.
    let mut run_of_cell = vec![usize::MAX; cells];
    for (si, &ai) in surviving.iter().enumerate() {
        let (row, _, band) = anchors[ai];
        let (lo, hi) = (sel.chosen[band - 1], sel.chosen[band]);
        for col in lo + 1..hi {
            run_of_cell[gm_spec.id(row, col)] = si;
        }
    }

    let mut conflicts = Digraph::new(surviving.len());
    for (si, &ai) in surviving.iter().enumerate() {
        let (row, col, _) = anchors[ai];
        for &v in &cp.internal(gm_spec.id(row, col)) {
            if v < cells && run_of_cell[v] != usize::MAX && run_of_cell[v] != si {
                conflicts.add_edge(si, run_of_cell[v]);
            }
        }
    }
    let independent = greedy_independent_set(&conflicts, r - 1)?;

    // Re-check pairwise independence directly on the runs.
    let in_independent: BTreeSet<usize> = independent.iter().copied().collect();
    for &si in &independent {
        let (row, col, _) = anchors[surviving[si]];
        for &v in &cp.internal(gm_spec.id(row, col)) {
            if v < cells
                && run_of_cell[v] != usize::MAX
                && run_of_cell[v] != si
                && in_independent.contains(&run_of_cell[v])
            {
                return Err(Error::Defect(format!(
                    "anchors {si} and {} conflict inside the independent set",
                    run_of_cell[v]
                )));
            }
        }
    }

    // Free one row near each horizontal edge of the grid: drop the
    // anchors whose centre paths touch rows q and m-q+1 for the q with
    // the fewest such anchors.
    let touches_row = |si: usize, j: usize| -> bool {
        let (row, col, _) = anchors[surviving[si]];
        cp.internal(gm_spec.id(row, col)).iter().any(|&v| {
            v < cells && {
                let rr = gm_spec.coord(v).0;
                rr == j || rr == m - j + 1
            }
        })
    };
    let q = (1..=s)
        .min_by_key(|&j| independent.iter().filter(|&&si| touches_row(si, j)).count())
        .expect("s >= 1");
    let kept: Vec<usize> = independent
        .iter()
        .copied()
        .filter(|&si| !touches_row(si, q))
        .collect();

    let t = kept.len() as u64;
    if t < guarantee.t {
        return Err(Error::Defect(format!(
            "only {t} centres remain, below the guaranteed {}",
            guarantee.t
        )));
    }

    let cell_of = |si: usize| {
        let (row, col, _) = anchors[surviving[si]];
        gm_spec.id(row, col)
    };
    let survivors = SurvivorSets {
        base: anchors
            .iter()
            .map(|&(row, col, _)| gm_spec.id(row, col))
            .collect(),
        surviving: surviving
            .iter()
            .map(|&ai| {
                let (row, col, _) = anchors[ai];
                gm_spec.id(row, col)
            })
            .collect(),
        independent: independent.iter().map(|&si| cell_of(si)).collect(),
        kept: {
            let mut v: Vec<usize> = kept.iter().map(|&si| cell_of(si)).collect();
            v.sort_unstable();
            v
        },
        row: q,
    };
    debug_assert!(survivors.verify().is_ok());

    // Assemble the three side sets. The first side keeps its columns up
    // to row m-s and gains all of row q; the second keeps its columns
    // from row s+1 down and gains all of row m-q+1.
    let mut first_side: BTreeSet<usize> = BTreeSet::new();
    for &c in &sel.x_columns {
        for row in 1..=m - s {
            first_side.insert(gm_spec.id(row, c));
        }
    }
    for col in 1..=n {
        first_side.insert(gm_spec.id(q, col));
    }
    let mut second_side: BTreeSet<usize> = BTreeSet::new();
    for &c in &sel.y_columns {
        for row in s + 1..=m {
            second_side.insert(gm_spec.id(row, c));
        }
    }
    for col in 1..=n {
        second_side.insert(gm_spec.id(m - q + 1, col));
    }

    // Centres in ascending anchor-cell order, so certificates are
    // independent of intermediate index bookkeeping.
    let mut kept_sorted = kept;
    kept_sorted.sort_unstable_by_key(|&si| cell_of(si));

    let mut third_side: BTreeSet<usize> = BTreeSet::new();
    third_side.insert(alpha_q);
    let mut branch_sets: Vec<Vec<usize>> = Vec::with_capacity(3 + kept_sorted.len());
    branch_sets.push(first_side.iter().copied().collect());
    branch_sets.push(second_side.iter().copied().collect());
    branch_sets.push(Vec::new()); // third side filled below
    let mut rep_edges: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();

    for (c, &si) in kept_sorted.iter().enumerate() {
        let (row, col, band) = anchors[surviving[si]];
        let (lo, hi) = (sel.chosen[band - 1], sel.chosen[band]);
        let run: Vec<usize> = (lo + 1..hi).map(|y| gm_spec.id(row, y)).collect();
        let centre_id = 3 + c;

        // The run's two outer cells touch the flanking columns, one per
        // side depending on the band's parity.
        let (first_col, first_end, second_col, second_end) = if band % 2 == 1 {
            (lo, lo + 1, hi, hi - 1)
        } else {
            (hi, hi - 1, lo, lo + 1)
        };
        debug_assert_eq!(side[first_col], 1);
        debug_assert_eq!(side[second_col], 2);
        rep_edges.insert(
            (0, centre_id),
            (gm_spec.id(row, first_col), gm_spec.id(row, first_end)),
        );
        rep_edges.insert(
            (1, centre_id),
            (gm_spec.id(row, second_col), gm_spec.id(row, second_end)),
        );

        // Connect the run to the centre set by the strict suffix of the
        // anchor's centre path after its last vertex inside the run; the
        // suffix avoids every other branch set by construction.
        let path = cp.path(gm_spec.id(row, col));
        let last_in_run = path
            .iter()
            .rposition(|&v| v < cells && run_of_cell[v] == si)
            .ok_or_else(|| Error::Defect("anchor missing from its own run".into()))?;
        if last_in_run + 1 >= path.len() {
            return Err(Error::Defect(
                "the centre lies inside a horizontal run".into(),
            ));
        }
        third_side.extend(&path[last_in_run + 1..]);
        rep_edges.insert((2, centre_id), (path[last_in_run + 1], path[last_in_run]));

        branch_sets.push(run);
    }
    branch_sets[2] = third_side.iter().copied().collect();

    let pattern = k3t_pattern(kept_sorted.len());
    let quotient_model = MinorModel::new(quotient, pattern, branch_sets, rep_edges);
    let lifted = lift_model(g, &map, &quotient_model)?;
    let verdict = if parallel {
        verify_minor_model(&lifted)
    } else {
        verify_minor_model_seq(&lifted)
    };
    if let Err(violations) = verdict {
        let msgs: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
        return Err(Error::Defect(format!(
            "extracted certificate failed verification: {}",
            msgs.join("; ")
        )));
    }
    Ok(K3tExtraction {
        model: lifted,
        t,
        trials,
        selection: sel,
        survivors,
    })
}

/// Smallest grid side ruled out for `K_{3,t}`-minor-free graphs of radius
/// `r`: `ceil(4r(1 + sqrt(t - 1)))`, via exact integer square roots.
pub fn k3t_grid_threshold(t: u64, r: u64) -> Result<u64> {
    if t < 1 || r < 1 {
        return Err(Error::InvalidArgument("t and r must be at least 1".into()));
    }
    let inner = (16 * r * r)
        .checked_mul(t - 1)
        .ok_or_else(|| Error::InvalidArgument("threshold overflows 64 bits".into()))?;
    4u64.checked_mul(r)
        .and_then(|base| base.checked_add(ceil_sqrt(inner)))
        .ok_or_else(|| Error::InvalidArgument("threshold overflows 64 bits".into()))
}

/// Same bound for graphs of Euler genus `g`: `ceil(4r(1 + sqrt(2g + 2)))`.
pub fn genus_grid_threshold(g: u64, r: u64) -> Result<u64> {
    if r < 1 {
        return Err(Error::InvalidArgument("radius must be at least 1".into()));
    }
    let inner = (16 * r * r)
        .checked_mul(2 * g + 2)
        .ok_or_else(|| Error::InvalidArgument("threshold overflows 64 bits".into()))?;
    4u64.checked_mul(r)
        .and_then(|base| base.checked_add(ceil_sqrt(inner)))
        .ok_or_else(|| Error::InvalidArgument("threshold overflows 64 bits".into()))
}

/// Euler genus at most `g` forces `K_{3,2g+3}`-minor-freeness.
pub fn genus_to_k3t(g: u64) -> u64 {
    2 * g + 3
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::make_grid;

    /// A grid plus one extra vertex adjacent to the selected cells.
    fn grid_with_apex(
        rows: usize,
        cols: usize,
        attach: impl Fn(usize, usize) -> bool,
    ) -> (Graph, GridSpec, usize) {
        let (grid, spec) = make_grid(rows, cols).unwrap();
        let apex = grid.vertex_count();
        let mut g = Graph::new(apex + 1);
        for (u, v) in grid.edges() {
            g.add_edge(u, v);
        }
        for x in 1..=rows {
            for y in 1..=cols {
                if attach(x, y) {
                    g.add_edge(spec.id(x, y), apex);
                }
            }
        }
        (g, spec, apex)
    }

    fn embedded_grid_model(g: &Graph, rows: usize, cols: usize) -> (MinorModel, GridSpec) {
        let (pattern, spec) = make_grid(rows, cols).unwrap();
        let branch_sets = (0..pattern.vertex_count()).map(|v| vec![v]).collect();
        let rep_edges = pattern.edges().map(|(u, v)| ((u, v), (u, v))).collect();
        (
            MinorModel::new(g.clone(), pattern, branch_sets, rep_edges),
            spec,
        )
    }

    #[test]
    fn guarantee_matches_hand_computations() {
        let g = k3t_guarantee(20, 20, 1).unwrap();
        assert_eq!((g.numerator, g.denominator, g.t), (81, 2, 41));
        assert_eq!(g.to_string(), "81/2");

        let g = k3t_guarantee(18, 18, 2).unwrap();
        assert_eq!((g.numerator, g.denominator, g.t), (3, 1, 3));
        assert_eq!(g.to_string(), "3");

        let g = k3t_guarantee(30, 30, 2).unwrap();
        assert_eq!(g.t, 12);

        // Both factors non-positive: the fraction is positive but the
        // bound promises nothing for grids at most 4r-2 on a side.
        let g = k3t_guarantee(4, 4, 2).unwrap();
        assert_eq!((g.numerator, g.denominator, g.t), (1, 12, 0));
        // One factor non-positive.
        let g = k3t_guarantee(4, 10, 2).unwrap();
        assert!(g.numerator < 0);
        assert_eq!(g.t, 0);
        // A zero factor.
        let g = k3t_guarantee(6, 10, 2).unwrap();
        assert_eq!((g.numerator, g.denominator, g.t), (0, 1, 0));

        assert!(k3t_guarantee(0, 5, 1).is_err());
        assert!(k3t_guarantee(5, 5, 0).is_err());
    }

    #[test]
    fn greedy_independent_set_meets_its_bound() {
        // Edgeless: everything is independent.
        let q = Digraph::new(5);
        assert_eq!(greedy_independent_set(&q, 0).unwrap(), vec![0, 1, 2, 3, 4]);

        // Directed 9-cycle with cap 1: bound is 3, optimum is 4.
        let mut q = Digraph::new(9);
        for v in 0..9 {
            q.add_edge(v, (v + 1) % 9);
        }
        let is = greedy_independent_set(&q, 1).unwrap();
        assert!(is.len() >= 3);
        for w in is.windows(2) {
            assert!(w[1] != w[0] + 1);
        }
        assert!(!(is.contains(&0) && is.contains(&8)));

        // Out-star: all three leaves survive.
        let mut q = Digraph::new(4);
        q.add_edge(0, 1);
        q.add_edge(0, 2);
        q.add_edge(0, 3);
        let is = greedy_independent_set(&q, 3).unwrap();
        assert_eq!(is, vec![1, 2, 3]);

        // Cap violations name the offending vertex.
        assert!(matches!(
            greedy_independent_set(&q, 2),
            Err(Error::OutDegreeExceeded {
                vertex: 0,
                degree: 3,
                cap: 2
            })
        ));
    }

    #[test]
    fn greedy_independent_set_on_random_digraphs() {
        let cap = 2;
        for seed in 0..50u64 {
            let mut rng = trial_rng(seed, 0);
            let n = rng.gen_range(1..=40);
            let mut q = Digraph::new(n);
            for u in 0..n {
                for _ in 0..rng.gen_range(0..=cap) {
                    let v = rng.gen_range(0..n);
                    if v != u {
                        q.add_edge(u, v);
                    }
                }
            }
            let is = greedy_independent_set(&q, cap).unwrap();
            assert!(is.len() * (2 * cap + 1) >= n, "seed {seed}");
            for (ai, &a) in is.iter().enumerate() {
                for &b in &is[ai + 1..] {
                    assert!(!q.out_neighbors(a).contains(&b), "seed {seed}");
                    assert!(!q.out_neighbors(b).contains(&a), "seed {seed}");
                }
            }
        }
    }

    #[test]
    fn radius_one_fixture_is_deterministic_and_full() {
        // With r=1 every band is one column wide, so the selection is
        // forced and every anchor survives with an empty path interior.
        let (g, _, apex) = grid_with_apex(20, 20, |_, _| true);
        let (gm, gm_spec) = embedded_grid_model(&g, 20, 20);
        for seed in [1u64, 7, 1000] {
            let out = extract_k3t(&g, apex, 1, &gm, &gm_spec, TrialConfig::new(seed)).unwrap();
            assert_eq!(out.t, 162);
            assert_eq!(out.trials, 1);
            assert_eq!(out.model.pattern, k3t_pattern(162));
            assert_eq!(verify_minor_model(&out.model), Ok(()));
            assert_eq!(out.selection.p, 9);
            assert_eq!(
                out.selection.chosen,
                vec![1, 3, 5, 7, 9, 11, 13, 15, 17, 19]
            );
            assert_eq!(out.survivors.base.len(), 162);
            assert_eq!(out.survivors.kept.len(), 162);
            out.selection.verify(20, 1).unwrap();
            out.survivors.verify().unwrap();

            let seq = extract_k3t_seq(&g, apex, 1, &gm, &gm_spec, TrialConfig::new(seed)).unwrap();
            assert_eq!(out.model, seq.model);
        }
    }

    #[test]
    fn radius_two_fixture_meets_the_guarantee() {
        // Attaching the apex to every cell of even coordinate sum gives
        // radius exactly 2: every odd-sum cell has all its neighbours
        // attached.
        let (g, _, apex) = grid_with_apex(30, 30, |x, y| (x + y) % 2 == 0);
        let (gm, gm_spec) = embedded_grid_model(&g, 30, 30);
        let want = k3t_guarantee(30, 30, 2).unwrap().t;
        assert_eq!(want, 12);
        for seed in 0..6u64 {
            let out = extract_k3t(&g, apex, 2, &gm, &gm_spec, TrialConfig::new(seed)).unwrap();
            assert!(out.t >= want, "seed {seed}: t = {}", out.t);
            assert_eq!(verify_minor_model(&out.model), Ok(()));
            out.selection.verify(30, 2).unwrap();
            out.survivors.verify().unwrap();
            let seq = extract_k3t_seq(&g, apex, 2, &gm, &gm_spec, TrialConfig::new(seed)).unwrap();
            assert_eq!(out.model, seq.model);
            assert_eq!(out.t, seq.t);
        }
    }

    #[test]
    fn resampling_terminates_quickly_on_the_radius_two_fixture() {
        let (g, _, apex) = grid_with_apex(30, 30, |x, y| (x + y) % 2 == 0);
        let (gm, gm_spec) = embedded_grid_model(&g, 30, 30);
        let (quotient, map) = contract_partition(&g, &gm.branch_sets).unwrap();
        let cells = gm_spec.vertex_count();
        let cp = centre_paths(&quotient, map[apex]).unwrap();
        let p = (30 - 4 + 1) / 4;
        let anchors = anchor_cells(&gm_spec, p, 2);
        let mut total = 0u64;
        for seed in 0..500u64 {
            let (_, _, trials) =
                sample_selection(&gm_spec, &anchors, &cp, cells, p, 2, TrialConfig::new(seed))
                    .unwrap();
            total += u64::from(trials);
        }
        assert!(
            total <= 3 * 500,
            "mean resampling count {} exceeds 3",
            total as f64 / 500.0
        );
    }

    #[test]
    fn degenerate_and_invalid_inputs_error_out() {
        // Guarantee zero at 4x4, r=2.
        let (g, _, apex) = grid_with_apex(4, 4, |_, _| true);
        let (gm, gm_spec) = embedded_grid_model(&g, 4, 4);
        assert!(matches!(
            extract_k3t(&g, apex, 2, &gm, &gm_spec, TrialConfig::new(0)),
            Err(Error::GuaranteeZero)
        ));

        // Attaching only to both-coordinates-even cells leaves odd-odd
        // corners at distance 3, so the radius-2 precondition fails.
        let (g, _, apex) = grid_with_apex(30, 30, |x, y| x % 2 == 0 && y % 2 == 0);
        let (gm, gm_spec) = embedded_grid_model(&g, 30, 30);
        assert!(matches!(
            extract_k3t(&g, apex, 2, &gm, &gm_spec, TrialConfig::new(0)),
            Err(Error::RadiusExceeded {
                distance: 3,
                bound: 2,
                ..
            })
        ));

        // The centre must not be covered by the grid model.
        let (g, spec) = make_grid(10, 10).unwrap();
        let (gm, gm_spec) = embedded_grid_model(&g, 10, 10);
        let centre = spec.id(5, 5);
        assert!(matches!(
            extract_k3t(&g, centre, 10, &gm, &gm_spec, TrialConfig::new(0)),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn threshold_formulas() {
        assert_eq!(k3t_grid_threshold(3, 1).unwrap(), 10);
        assert_eq!(k3t_grid_threshold(1, 1).unwrap(), 4);
        assert_eq!(k3t_grid_threshold(1, 5).unwrap(), 20);
        assert_eq!(k3t_grid_threshold(10, 2).unwrap(), 32);
        assert!(k3t_grid_threshold(0, 1).is_err());
        assert!(k3t_grid_threshold(3, 0).is_err());

        assert_eq!(genus_grid_threshold(0, 1).unwrap(), 10);
        assert_eq!(genus_grid_threshold(1, 1).unwrap(), 12);
        for g in 0..=20 {
            for r in 1..=5 {
                assert_eq!(
                    genus_grid_threshold(g, r).unwrap(),
                    k3t_grid_threshold(genus_to_k3t(g), r).unwrap(),
                    "g={g}, r={r}"
                );
            }
        }

        assert_eq!(genus_to_k3t(0), 3);
        assert_eq!(genus_to_k3t(1), 5);
        assert_eq!(genus_to_k3t(10), 23);
    }
}
