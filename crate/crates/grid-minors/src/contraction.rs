//! Contraction of disjoint connected vertex sets, and lifting of minor
//! models back through a contraction.

use crate::error::{Error, Result};
use crate::graph::{find_cross_edge, Graph};
use crate::model::MinorModel;

/// Contracts each part to a single vertex, keeping the result simple
/// (parallel edges merged, loops dropped). Vertices outside every part
/// survive as singletons.
///
/// New ids: part `i` becomes vertex `i`; untouched vertices follow in
/// ascending old-id order. Returns the quotient graph and the old -> new
/// vertex map.
pub fn contract_partition(g: &Graph, parts: &[Vec<usize>]) -> Result<(Graph, Vec<usize>)> {
    let n = g.vertex_count();
    let mut map = vec![usize::MAX; n];
    for (i, part) in parts.iter().enumerate() {
        if part.is_empty() {
            return Err(Error::InvalidArgument(format!("part {i} is empty")));
        }
        for &v in part {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, len: n });
            }
            if map[v] != usize::MAX {
                return Err(Error::OverlappingParts { vertex: v });
            }
            map[v] = i;
        }
        if !g.is_connected_subset(part) {
            return Err(Error::DisconnectedPart { part: i });
        }
    }
    let mut next = parts.len();
    for slot in map.iter_mut() {
        if *slot == usize::MAX {
            *slot = next;
            next += 1;
        }
    }
    let mut edges = Vec::with_capacity(g.edge_count());
    for (u, v) in g.edges() {
        let (a, b) = (map[u], map[v]);
        if a != b {
            edges.push((a.min(b), a.max(b)));
        }
    }
    let quotient = Graph::from_edges(next, &edges)?;
    Ok((quotient, map))
}

/// Pulls a minor model of a quotient graph back to the original graph `g`:
/// each branch set is replaced by the union of the contracted sets it
/// names, and each representing edge by a concrete `g`-edge between those
/// unions. `map` is the old-to-new vertex map returned by
/// [`contract_partition`]; `model.host` must be the quotient.
pub fn lift_model(g: &Graph, map: &[usize], model: &MinorModel) -> Result<MinorModel> {
    if map.len() != g.vertex_count() {
        return Err(Error::InvalidArgument(format!(
            "vertex map covers {} vertices but the graph has {}",
            map.len(),
            g.vertex_count()
        )));
    }
    let quot_n = model.host.vertex_count();
    let mut lift: Vec<Vec<usize>> = vec![Vec::new(); quot_n];
    for (old, &new) in map.iter().enumerate() {
        if new >= quot_n {
            return Err(Error::VertexOutOfRange {
                vertex: new,
                len: quot_n,
            });
        }
        lift[new].push(old);
    }

    let mut branch_sets = Vec::with_capacity(model.branch_sets.len());
    for set in &model.branch_sets {
        let mut lifted = Vec::new();
        for &v in set {
            lifted.extend_from_slice(&lift[v]);
        }
        branch_sets.push(lifted);
    }

    let mut rep_edges = std::collections::BTreeMap::new();
    for (&(u, v), &(p, q)) in &model.rep_edges {
        match find_cross_edge(g, &lift[p], &lift[q]) {
            Some(edge) => {
                rep_edges.insert((u, v), edge);
            }
            None => {
                return Err(Error::Defect(format!(
                    "no original edge realises quotient edge {p}-{q}"
                )))
            }
        }
    }

    Ok(MinorModel::new(
        g.clone(),
        model.pattern.clone(),
        branch_sets,
        rep_edges,
    ))
}
