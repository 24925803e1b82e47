//! Transformations of grid models: doubling with anchor vertices, the
//! complete-bipartite comb layout, block contraction, cropping, and
//! shrinking around a forbidden host vertex.

use crate::arith::ceil_sqrt;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::grid::{is_grid_graph, make_grid, GridSpec};
use crate::model::{verify_minor_model, MinorModel};
use std::collections::BTreeMap;

/// A pattern model in a doubled grid, carrying one anchor vertex per
/// branch set. Anchors have both coordinates odd, so they are never
/// endpoints of representing edges (those always have an even coordinate).
#[derive(Clone, Debug)]
pub struct DoubledModel {
    /// The pattern's model in the `2k x 2l` grid.
    pub model: MinorModel,
    /// Addressing of the doubled host grid.
    pub spec: GridSpec,
    /// Anchor host vertex per pattern vertex; lies in that branch set.
    pub anchors: Vec<usize>,
}

fn check_valid(m: &MinorModel) -> Result<()> {
    verify_minor_model(m).map_err(Error::InvalidModel)
}

fn check_grid(g: &Graph, spec: &GridSpec) -> Result<()> {
    if is_grid_graph(g, spec) {
        Ok(())
    } else {
        Err(Error::NotAGrid {
            rows: spec.rows(),
            cols: spec.cols(),
        })
    }
}

/// Index of the branch set containing each host vertex (`usize::MAX` when
/// uncovered). Assumes the model verifies, so sets are disjoint.
fn owner_array(m: &MinorModel) -> Vec<usize> {
    let mut owner = vec![usize::MAX; m.host.vertex_count()];
    for (u, set) in m.branch_sets.iter().enumerate() {
        for &h in set {
            owner[h] = u;
        }
    }
    owner
}

/// Blows a model in the `k x l` grid up to the `2k x 2l` grid: each host
/// cell `(x, y)` becomes the 2x2 block `{2x-1, 2x} x {2y-1, 2y}`, and each
/// representing edge moves to the even-coordinate edge between the
/// corresponding blocks. The all-odd corner `(2x-1, 2y-1)` of the
/// lexicographically least cell of each branch set is recorded as that
/// vertex's anchor; no anchor touches a representing edge.
pub fn double_model(m: &MinorModel, host_spec: &GridSpec) -> Result<DoubledModel> {
    check_valid(m)?;
    check_grid(&m.host, host_spec)?;
    let (big_host, big_spec) = make_grid(2 * host_spec.rows(), 2 * host_spec.cols())?;
    let owner = owner_array(m);

    let mut branch_sets = Vec::with_capacity(m.branch_sets.len());
    let mut anchors = Vec::with_capacity(m.branch_sets.len());
    for set in &m.branch_sets {
        let mut blown = Vec::with_capacity(4 * set.len());
        for &cell in set {
            let (x, y) = host_spec.coord(cell);
            blown.push(big_spec.id(2 * x - 1, 2 * y - 1));
            blown.push(big_spec.id(2 * x - 1, 2 * y));
            blown.push(big_spec.id(2 * x, 2 * y - 1));
            blown.push(big_spec.id(2 * x, 2 * y));
        }
        // Branch sets are sorted, so the first cell is row-major least,
        // which coincides with lexicographic order on coordinates.
        let (ax, ay) = host_spec.coord(set[0]);
        anchors.push(big_spec.id(2 * ax - 1, 2 * ay - 1));
        branch_sets.push(blown);
    }

    let mut rep_edges = BTreeMap::new();
    for (&(u, v), &(a, b)) in &m.rep_edges {
        // Orient the host edge so its first endpoint sits in u's set.
        let (a, b) = if owner[a] == u { (a, b) } else { (b, a) };
        let (x1, y1) = host_spec.coord(a);
        let (x2, y2) = host_spec.coord(b);
        let pair = if x2 == x1 + 1 {
            (big_spec.id(2 * x1, 2 * y1), big_spec.id(2 * x1 + 1, 2 * y1))
        } else if x1 == x2 + 1 {
            (
                big_spec.id(2 * x1 - 1, 2 * y1),
                big_spec.id(2 * x1 - 2, 2 * y1),
            )
        } else if y2 == y1 + 1 {
            (big_spec.id(2 * x1, 2 * y1), big_spec.id(2 * x1, 2 * y1 + 1))
        } else {
            (
                big_spec.id(2 * x1, 2 * y1 - 1),
                big_spec.id(2 * x1, 2 * y1 - 2),
            )
        };
        rep_edges.insert((u, v), pair);
    }

    let model = MinorModel::new(big_host, m.pattern.clone(), branch_sets, rep_edges);
    debug_assert_eq!(verify_minor_model(&model), Ok(()));
    Ok(DoubledModel {
        model,
        spec: big_spec,
        anchors,
    })
}

/// Builds a model of the complete bipartite graph with sides {2, t} inside
/// a grid of at most `3s x (s+2)` cells, where `s = ceil(sqrt(t))`.
///
/// Pattern vertex 0 and 1 are the two side vertices (comb-shaped branch
/// sets: a full boundary column plus every third row as teeth); vertices
/// `2..t+2` are the centres, one singleton cell each, wedged between a
/// tooth of each comb.
pub fn k2t_model(t: usize) -> Result<(MinorModel, GridSpec)> {
    if t == 0 {
        return Err(Error::InvalidArgument(
            "the bipartite side size t must be positive".into(),
        ));
    }
    let s = ceil_sqrt(t as u64) as usize;
    let rows = 3 * s;
    let cols = s + 2;
    let (host, spec) = make_grid(rows, cols)?;

    let mut side1 = Vec::new();
    let mut side2 = Vec::new();
    for x in 1..=rows {
        side1.push(spec.id(x, 1));
        side2.push(spec.id(x, cols));
        if x % 3 == 1 {
            for y in 2..=cols - 1 {
                side1.push(spec.id(x, y));
            }
        }
        if x % 3 == 0 {
            for y in 2..=cols - 1 {
                side2.push(spec.id(x, y));
            }
        }
    }

    let mut centres = Vec::with_capacity(t);
    'outer: for x in 1..=rows {
        if x % 3 != 2 {
            continue;
        }
        for y in 2..=cols - 1 {
            centres.push((x, y));
            if centres.len() == t {
                break 'outer;
            }
        }
    }
    debug_assert_eq!(centres.len(), t);

    let mut pattern = Graph::new(t + 2);
    let mut branch_sets = vec![side1, side2];
    let mut rep_edges = BTreeMap::new();
    for (j, &(x, y)) in centres.iter().enumerate() {
        let c = 2 + j;
        pattern.add_edge(0, c);
        pattern.add_edge(1, c);
        branch_sets.push(vec![spec.id(x, y)]);
        // The tooth above belongs to side 0, the tooth below to side 1.
        rep_edges.insert((0, c), (spec.id(x - 1, y), spec.id(x, y)));
        rep_edges.insert((1, c), (spec.id(x + 1, y), spec.id(x, y)));
    }

    let model = MinorModel::new(host, pattern, branch_sets, rep_edges);
    debug_assert_eq!(verify_minor_model(&model), Ok(()));
    Ok((model, spec))
}

/// Contracts a grid-pattern model by `p x p` blocks: the branch set of the
/// quotient cell `(i, j)` is the union over the block
/// `{p(i-1)+1 .. pi} x {p(j-1)+1 .. pj}`, and quotient representing edges
/// reuse the input's representing edges on block boundaries.
pub fn contract_subgrids(
    m: &MinorModel,
    pattern_spec: &GridSpec,
    p: usize,
) -> Result<(MinorModel, GridSpec)> {
    if p == 0 {
        return Err(Error::InvalidArgument("block size must be positive".into()));
    }
    check_valid(m)?;
    check_grid(&m.pattern, pattern_spec)?;
    let (n, mcols) = (pattern_spec.rows(), pattern_spec.cols());
    if n % p != 0 {
        return Err(Error::NotDivisible {
            value: n,
            divisor: p,
        });
    }
    if mcols % p != 0 {
        return Err(Error::NotDivisible {
            value: mcols,
            divisor: p,
        });
    }
    let (qr, qc) = (n / p, mcols / p);
    let (quotient, qspec) = make_grid(qr, qc)?;

    let mut branch_sets = vec![Vec::new(); qspec.vertex_count()];
    for i in 1..=qr {
        for j in 1..=qc {
            let mut union = Vec::new();
            for x in p * (i - 1) + 1..=p * i {
                for y in p * (j - 1) + 1..=p * j {
                    union.extend_from_slice(&m.branch_sets[pattern_spec.id(x, y)]);
                }
            }
            branch_sets[qspec.id(i, j)] = union;
        }
    }

    let mut rep_edges = BTreeMap::new();
    for i in 1..=qr {
        for j in 1..=qc {
            if i < qr {
                // Boundary edge between blocks (i, j) and (i+1, j), taken in
                // the block's first column.
                let y = p * (j - 1) + 1;
                let old = (pattern_spec.id(p * i, y), pattern_spec.id(p * i + 1, y));
                rep_edges.insert((qspec.id(i, j), qspec.id(i + 1, j)), m.rep_edges[&old]);
            }
            if j < qc {
                let x = p * (i - 1) + 1;
                let old = (pattern_spec.id(x, p * j), pattern_spec.id(x, p * j + 1));
                rep_edges.insert((qspec.id(i, j), qspec.id(i, j + 1)), m.rep_edges[&old]);
            }
        }
    }

    let out = MinorModel::new(m.host.clone(), quotient, branch_sets, rep_edges);
    debug_assert_eq!(verify_minor_model(&out), Ok(()));
    Ok((out, qspec))
}

/// Restricts a grid-pattern model to its first `rows x cols` cells,
/// discarding the remaining branch sets.
pub fn crop_grid_model(
    m: &MinorModel,
    pattern_spec: &GridSpec,
    rows: usize,
    cols: usize,
) -> Result<(MinorModel, GridSpec)> {
    check_valid(m)?;
    check_grid(&m.pattern, pattern_spec)?;
    if rows == 0 || cols == 0 || rows > pattern_spec.rows() || cols > pattern_spec.cols() {
        return Err(Error::DimensionTooSmall {
            need_rows: rows,
            need_cols: cols,
            got_rows: pattern_spec.rows(),
            got_cols: pattern_spec.cols(),
        });
    }
    let (small, sspec) = make_grid(rows, cols)?;
    let mut branch_sets = vec![Vec::new(); sspec.vertex_count()];
    let mut rep_edges = BTreeMap::new();
    for x in 1..=rows {
        for y in 1..=cols {
            branch_sets[sspec.id(x, y)] = m.branch_sets[pattern_spec.id(x, y)].clone();
            if x < rows {
                let old = (pattern_spec.id(x, y), pattern_spec.id(x + 1, y));
                rep_edges.insert((sspec.id(x, y), sspec.id(x + 1, y)), m.rep_edges[&old]);
            }
            if y < cols {
                let old = (pattern_spec.id(x, y), pattern_spec.id(x, y + 1));
                rep_edges.insert((sspec.id(x, y), sspec.id(x, y + 1)), m.rep_edges[&old]);
            }
        }
    }
    let out = MinorModel::new(m.host.clone(), small, branch_sets, rep_edges);
    debug_assert_eq!(verify_minor_model(&out), Ok(()));
    Ok((out, sspec))
}

/// Shrinks an `N x M` grid model to `(N-1) x (M-1)` so that no branch set
/// contains the host vertex `v`.
///
/// If `v` lies in the branch set of cell `(i0, j0)`, pattern row `i0` and
/// column `j0` are deleted and the survivors relabelled; when the deleted
/// row (or column) has surviving neighbours on both sides, each deleted
/// cell's branch set is merged into its neighbour above (resp. to the
/// left), which keeps those neighbours host-adjacent across the gap via
/// the input's own representing edges. The cell `(i0, j0)` itself is
/// discarded. If `v` is in no branch set, the last row and column are
/// trimmed.
pub fn shrink_grid_model_avoiding(
    m: &MinorModel,
    pattern_spec: &GridSpec,
    v: usize,
) -> Result<(MinorModel, GridSpec)> {
    check_valid(m)?;
    check_grid(&m.pattern, pattern_spec)?;
    let (n, mcols) = (pattern_spec.rows(), pattern_spec.cols());
    if n < 2 || mcols < 2 {
        return Err(Error::DimensionTooSmall {
            need_rows: 2,
            need_cols: 2,
            got_rows: n,
            got_cols: mcols,
        });
    }
    if v >= m.host.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            len: m.host.vertex_count(),
        });
    }

    let hit = m
        .branch_sets
        .iter()
        .position(|set| set.binary_search(&v).is_ok());
    let (i0, j0) = match hit {
        Some(cell) => pattern_spec.coord(cell),
        None => (n, mcols),
    };
    // A merge is needed only when the deleted line is interior, i.e. the
    // survivors on either side of it become neighbours after relabelling.
    let merge_rows = (2..n).contains(&i0);
    let merge_cols = (2..mcols).contains(&j0);
    let old_row = |x: usize| if x < i0 { x } else { x + 1 };
    let old_col = |y: usize| if y < j0 { y } else { y + 1 };

    let (small, sspec) = make_grid(n - 1, mcols - 1)?;
    let mut branch_sets = vec![Vec::new(); sspec.vertex_count()];
    for xn in 1..=n - 1 {
        for yn in 1..=mcols - 1 {
            let (x, y) = (old_row(xn), old_col(yn));
            let mut set = m.branch_sets[pattern_spec.id(x, y)].clone();
            if merge_rows && x == i0 - 1 {
                set.extend_from_slice(&m.branch_sets[pattern_spec.id(i0, y)]);
            }
            if merge_cols && y == j0 - 1 {
                set.extend_from_slice(&m.branch_sets[pattern_spec.id(x, j0)]);
            }
            branch_sets[sspec.id(xn, yn)] = set;
        }
    }

    let mut rep_edges = BTreeMap::new();
    for xn in 1..=n - 1 {
        for yn in 1..=mcols - 1 {
            let (x, y) = (old_row(xn), old_col(yn));
            if xn < n - 1 {
                // Across a deleted interior row, the old boundary edge from
                // the merged row still joins the two new sets.
                let x2 = old_row(xn + 1);
                let old = if x2 == x + 1 { (x, y) } else { (i0, y) };
                let key = (
                    pattern_spec.id(old.0, old.1),
                    pattern_spec.id(old.0 + 1, old.1),
                );
                rep_edges.insert((sspec.id(xn, yn), sspec.id(xn + 1, yn)), m.rep_edges[&key]);
            }
            if yn < mcols - 1 {
                let y2 = old_col(yn + 1);
                let old = if y2 == y + 1 { (x, y) } else { (x, j0) };
                let key = (
                    pattern_spec.id(old.0, old.1),
                    pattern_spec.id(old.0, old.1 + 1),
                );
                rep_edges.insert((sspec.id(xn, yn), sspec.id(xn, yn + 1)), m.rep_edges[&key]);
            }
        }
    }

    let out = MinorModel::new(m.host.clone(), small, branch_sets, rep_edges);
    if out
        .branch_sets
        .iter()
        .any(|set| set.binary_search(&v).is_ok())
    {
        return Err(Error::Defect(format!(
            "shrunken model still touches host vertex {v}"
        )));
    }
    debug_assert_eq!(verify_minor_model(&out), Ok(()));
    Ok((out, sspec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::identity_model;
    use crate::oracle::{minor_test, MinorOutcome, OracleLimits};

    fn complete_graph(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    fn k4_in_three_by_three() -> (MinorModel, GridSpec) {
        let (g, spec) = make_grid(3, 3).unwrap();
        match minor_test(&g, &complete_graph(4), &OracleLimits::default()).unwrap() {
            MinorOutcome::Minor(m) => (m, spec),
            MinorOutcome::NotMinor => panic!("search must find this model"),
        }
    }

    #[test]
    fn doubling_the_smallest_model() {
        let (host, spec) = make_grid(1, 1).unwrap();
        let m = MinorModel::new(host, Graph::new(1), vec![vec![0]], BTreeMap::new());
        let d = double_model(&m, &spec).unwrap();
        assert_eq!(verify_minor_model(&d.model), Ok(()));
        assert_eq!(d.model.branch_sets, vec![vec![0, 1, 2, 3]]);
        assert_eq!(d.anchors, vec![d.spec.id(1, 1)]);
    }

    #[test]
    fn doubling_a_complete_graph_model() {
        let (m, spec) = k4_in_three_by_three();
        let d = double_model(&m, &spec).unwrap();
        assert_eq!(verify_minor_model(&d.model), Ok(()));
        assert_eq!(d.spec.rows(), 6);
        assert_eq!(d.spec.cols(), 6);
        assert_eq!(d.anchors.len(), 4);
        for (u, (old, new)) in m.branch_sets.iter().zip(&d.model.branch_sets).enumerate() {
            assert_eq!(new.len(), 4 * old.len(), "branch set {u}");
            assert!(new.binary_search(&d.anchors[u]).is_ok());
        }
        for (u, &a) in d.anchors.iter().enumerate() {
            let (x, y) = d.spec.coord(a);
            assert_eq!((x % 2, y % 2), (1, 1), "anchor of {u} must be odd-odd");
            for &(p, q) in d.model.rep_edges.values() {
                assert_ne!(a, p);
                assert_ne!(a, q);
            }
        }
        for &(p, q) in d.model.rep_edges.values() {
            let (x1, y1) = d.spec.coord(p);
            let (x2, y2) = d.spec.coord(q);
            assert!(x1 % 2 == 0 || y1 % 2 == 0);
            assert!(x2 % 2 == 0 || y2 % 2 == 0);
        }
    }

    #[test]
    fn doubling_rejects_non_grid_hosts() {
        let g = complete_graph(4);
        let m = identity_model(&g);
        let spec = GridSpec::new(2, 2).unwrap();
        assert!(matches!(
            double_model(&m, &spec),
            Err(Error::NotAGrid { rows: 2, cols: 2 })
        ));
    }

    #[test]
    fn bipartite_comb_models_verify() {
        for t in [1usize, 2, 3, 4, 5, 8, 9, 10, 16, 23] {
            let (m, spec) = k2t_model(t).unwrap();
            assert_eq!(verify_minor_model(&m), Ok(()), "t = {t}");
            assert_eq!(m.pattern.vertex_count(), t + 2);
            assert_eq!(m.pattern.edge_count(), 2 * t);
            let s = ceil_sqrt(t as u64) as usize;
            assert!(spec.rows() <= 3 * s);
            assert!(spec.cols() <= s + 2);
            for c in 2..t + 2 {
                assert_eq!(m.branch_sets[c].len(), 1, "centres are singletons");
            }
        }
    }

    #[test]
    fn bipartite_comb_dimension_examples() {
        let (_, spec) = k2t_model(4).unwrap();
        assert!(spec.rows() <= 6 && spec.cols() <= 4);
        let (_, spec) = k2t_model(9).unwrap();
        assert!(spec.rows() <= 9 && spec.cols() <= 5);
        assert!(k2t_model(0).is_err());
    }

    #[test]
    fn block_contraction_matches_the_quotient_grid() {
        let (g, spec) = make_grid(12, 12).unwrap();
        let m = identity_model(&g);
        let (q, qspec) = contract_subgrids(&m, &spec, 3).unwrap();
        assert_eq!(verify_minor_model(&q), Ok(()));
        assert_eq!((qspec.rows(), qspec.cols()), (4, 4));
        assert_eq!(q.pattern, make_grid(4, 4).unwrap().0);
        // Each quotient branch set is exactly its 3x3 block of host cells.
        for i in 1..=4 {
            for j in 1..=4 {
                let mut expected = Vec::new();
                for x in 3 * i - 2..=3 * i {
                    for y in 3 * j - 2..=3 * j {
                        expected.push(spec.id(x, y));
                    }
                }
                expected.sort_unstable();
                assert_eq!(q.branch_sets[qspec.id(i, j)], expected);
            }
        }
    }

    #[test]
    fn block_contraction_identity_and_errors() {
        let (g, spec) = make_grid(6, 4).unwrap();
        let m = identity_model(&g);
        let (same, same_spec) = contract_subgrids(&m, &spec, 1).unwrap();
        assert_eq!(same, m);
        assert_eq!(same_spec, spec);
        assert!(matches!(
            contract_subgrids(&m, &spec, 5),
            Err(Error::NotDivisible {
                value: 6,
                divisor: 5
            })
        ));
    }

    #[test]
    fn block_contraction_composes() {
        let (g, spec) = make_grid(12, 12).unwrap();
        let m = identity_model(&g);
        let (by_two, spec_two) = contract_subgrids(&m, &spec, 2).unwrap();
        let (then_three, _) = contract_subgrids(&by_two, &spec_two, 3).unwrap();
        let (by_six, _) = contract_subgrids(&m, &spec, 6).unwrap();
        assert_eq!(then_three.branch_sets, by_six.branch_sets);
        assert_eq!(then_three.pattern, by_six.pattern);
        assert_eq!(verify_minor_model(&then_three), Ok(()));
    }

    #[test]
    fn cropping_keeps_the_leading_cells() {
        let (g, spec) = make_grid(5, 5).unwrap();
        let m = identity_model(&g);
        let (c, cspec) = crop_grid_model(&m, &spec, 3, 2).unwrap();
        assert_eq!(verify_minor_model(&c), Ok(()));
        assert_eq!((cspec.rows(), cspec.cols()), (3, 2));
        for x in 1..=3 {
            for y in 1..=2 {
                assert_eq!(c.branch_sets[cspec.id(x, y)], vec![spec.id(x, y)]);
            }
        }
        let (full, _) = crop_grid_model(&m, &spec, 5, 5).unwrap();
        assert_eq!(full, m);
        assert!(crop_grid_model(&m, &spec, 6, 5).is_err());
    }

    #[test]
    fn shrinking_around_an_interior_cell() {
        let (g, spec) = make_grid(3, 3).unwrap();
        let m = identity_model(&g);
        let v = spec.id(2, 2);
        let (s, sspec) = shrink_grid_model_avoiding(&m, &spec, v).unwrap();
        assert_eq!(verify_minor_model(&s), Ok(()));
        assert_eq!((sspec.rows(), sspec.cols()), (2, 2));
        for set in &s.branch_sets {
            assert!(set.binary_search(&v).is_err());
        }
        // The cell that swallowed the deleted band.
        assert_eq!(
            s.branch_sets[sspec.id(1, 1)],
            vec![spec.id(1, 1), spec.id(1, 2), spec.id(2, 1)]
        );
        assert_eq!(s.branch_sets[sspec.id(2, 2)], vec![spec.id(3, 3)]);
    }

    #[test]
    fn shrinking_when_the_vertex_is_uncovered_trims_the_boundary() {
        // Host: a 4x4 grid plus one extra vertex hanging off cell (1,1).
        let (grid, spec) = make_grid(4, 4).unwrap();
        let mut host = Graph::new(17);
        for (u, v) in grid.edges() {
            host.add_edge(u, v);
        }
        host.add_edge(spec.id(1, 1), 16);
        let m = MinorModel::new(
            host,
            grid,
            (0..16).map(|v| vec![v]).collect(),
            identity_model(&make_grid(4, 4).unwrap().0).rep_edges,
        );
        let (s, sspec) = shrink_grid_model_avoiding(&m, &spec, 16).unwrap();
        assert_eq!(verify_minor_model(&s), Ok(()));
        assert_eq!((sspec.rows(), sspec.cols()), (3, 3));
        for x in 1..=3 {
            for y in 1..=3 {
                assert_eq!(s.branch_sets[sspec.id(x, y)], vec![spec.id(x, y)]);
            }
        }
    }

    #[test]
    fn shrinking_larger_interior_cases_verify() {
        let (g, spec) = make_grid(5, 6).unwrap();
        let m = identity_model(&g);
        for x in 1..=5 {
            for y in 1..=6 {
                let v = spec.id(x, y);
                let (s, sspec) = shrink_grid_model_avoiding(&m, &spec, v).unwrap();
                assert_eq!(verify_minor_model(&s), Ok(()), "v = ({x},{y})");
                assert_eq!((sspec.rows(), sspec.cols()), (4, 5));
                assert!(s
                    .branch_sets
                    .iter()
                    .all(|set| set.binary_search(&v).is_err()));
            }
        }
    }

    #[test]
    fn shrinking_the_two_by_two_grid() {
        let (g, spec) = make_grid(2, 2).unwrap();
        let m = identity_model(&g);
        let (s, sspec) = shrink_grid_model_avoiding(&m, &spec, spec.id(1, 1)).unwrap();
        assert_eq!((sspec.rows(), sspec.cols()), (1, 1));
        assert_eq!(s.branch_sets, vec![vec![spec.id(2, 2)]]);
        assert_eq!(verify_minor_model(&s), Ok(()));
    }

    #[test]
    fn shrinking_a_single_line_fails() {
        let (g, spec) = make_grid(1, 4).unwrap();
        let m = identity_model(&g);
        assert!(matches!(
            shrink_grid_model_avoiding(&m, &spec, 0),
            Err(Error::DimensionTooSmall { .. })
        ));
    }
}
