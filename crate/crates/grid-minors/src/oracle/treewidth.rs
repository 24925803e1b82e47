//! Exact treewidth by dynamic programming over vertex subsets, in the
//! elimination-ordering formulation, with a witness decomposition.

use crate::decomposition::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::OracleLimits;

/// Exact treewidth of `g` (−1 for the empty graph) together with a witness
/// tree decomposition of that width.
///
/// For each subset `S` the table holds the best possible maximum
/// back-degree over orderings that eliminate exactly `S` first; the
/// back-degree of `v` counts vertices outside `S` reachable from `v`
/// through `S`, which is `v`'s degree once `S` is gone and fill-in applied.
pub fn exact_treewidth(g: &Graph, limits: &OracleLimits) -> Result<(i64, TreeDecomposition)> {
    limits.validate()?;
    let n = g.vertex_count();
    if n > limits.max_tw_vertices {
        return Err(Error::SizeLimit {
            what: "treewidth oracle vertex count",
            size: n,
            limit: limits.max_tw_vertices,
        });
    }
    if n == 0 {
        return Ok((-1, TreeDecomposition::new(Vec::new(), Graph::new(0))));
    }

    let adj = adjacency_masks(g);
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut table = vec![u8::MAX; (full as usize) + 1];
    table[0] = 0;
    for s in 1..=full {
        let mut best = u8::MAX;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = s & !(1u32 << v);
            let q = reach_outside(&adj, rest, v).count_ones() as u8;
            let cand = table[rest as usize].max(q);
            best = best.min(cand);
        }
        table[s as usize] = best;
    }
    let tw = i64::from(table[full as usize]);

    // Recover an optimal elimination order by walking the table backwards:
    // the vertex chosen at each step is the one eliminated last so far.
    let mut order = vec![0usize; n];
    let mut s = full;
    let mut slot = n;
    while s != 0 {
        let mut bits = s;
        let mut chosen = None;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = s & !(1u32 << v);
            let q = reach_outside(&adj, rest, v).count_ones() as u8;
            if table[rest as usize].max(q) == table[s as usize] {
                chosen = Some(v);
                break;
            }
        }
        let v = chosen.expect("table entry must be achieved by some vertex");
        slot -= 1;
        order[slot] = v;
        s &= !(1u32 << v);
    }

    let decomposition = decomposition_from_order(g, &order);
    debug_assert_eq!(decomposition.width(), tw);
    Ok((tw, decomposition))
}

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (0..g.vertex_count())
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(0u32, |acc, &w| acc | (1u32 << w))
        })
        .collect()
}

/// Vertices outside `through | {v}` reachable from `v` via paths whose
/// interior lies in `through`.
fn reach_outside(adj: &[u32], through: u32, v: usize) -> u32 {
    let start = 1u32 << v;
    let mut seen = start;
    let mut frontier = start;
    let mut outside = 0u32;
    while frontier != 0 {
        let mut next = 0u32;
        let mut bits = frontier;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= adj[u];
        }
        next &= !seen;
        seen |= next;
        outside |= next & !through;
        frontier = next & through;
    }
    outside & !start
}

/// Tree decomposition from an elimination order via fill-in simulation:
/// bag of `v` is `v` plus its not-yet-eliminated neighbours at elimination
/// time, attached to the bag of the earliest-eliminated such neighbour.
fn decomposition_from_order(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = order.len();
    let mut position = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut adj = adjacency_masks(g);
    let mut alive: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };

    let mut bags = Vec::with_capacity(n);
    let mut tree = Graph::new(n);
    for (i, &v) in order.iter().enumerate() {
        let nb = adj[v] & alive & !(1u32 << v);
        let mut bag = vec![v];
        let mut parent: Option<usize> = None;
        let mut bits = nb;
        while bits != 0 {
            let w = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            bag.push(w);
            if parent.is_none_or(|p| position[w] < position[p]) {
                parent = Some(w);
            }
        }
        bags.push(bag);
        match parent {
            Some(p) => tree.add_edge(i, position[p]),
            None if i + 1 < n => tree.add_edge(i, i + 1),
            None => {}
        }
        // Fill in: the surviving neighbourhood becomes a clique.
        let mut bits = nb;
        while bits != 0 {
            let w = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            adj[w] |= nb & !(1u32 << w);
        }
        alive &= !(1u32 << v);
    }
    TreeDecomposition::new(bags, tree)
}
