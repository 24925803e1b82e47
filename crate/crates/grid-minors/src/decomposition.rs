//! Tree decompositions, their verifier, and the BFS-layered path
//! decomposition whose bags have small-radius contracted supergraphs.

use crate::contraction::contract_partition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::layering::{bfs_layering, BfsLayering};
use crate::oracle::{exact_treewidth, OracleLimits};
use std::collections::BTreeMap;
use std::fmt;

/// A tree decomposition: one bag per node of `tree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    /// Bag of each tree node, sorted vertex ids.
    pub bags: Vec<Vec<usize>>,
    /// Tree over bag indices (checked by the verifier, not on construction).
    pub tree: Graph,
    /// True when `tree` is a path with nodes in bag order.
    pub path: bool,
}

impl TreeDecomposition {
    pub fn new(bags: Vec<Vec<usize>>, tree: Graph) -> Self {
        let path = is_bag_order_path(&tree);
        let mut bags = bags;
        for bag in &mut bags {
            bag.sort_unstable();
            bag.dedup();
        }
        TreeDecomposition { bags, tree, path }
    }

    /// Path decomposition with nodes joined in the given bag order.
    pub fn from_path(bags: Vec<Vec<usize>>) -> Self {
        let n = bags.len();
        let mut tree = Graph::new(n);
        for i in 1..n {
            tree.add_edge(i - 1, i);
        }
        TreeDecomposition::new(bags, tree)
    }

    /// Max bag size − 1; −1 for an empty decomposition.
    pub fn width(&self) -> i64 {
        self.bags
            .iter()
            .map(|b| b.len() as i64 - 1)
            .max()
            .unwrap_or(-1)
    }
}

fn is_bag_order_path(tree: &Graph) -> bool {
    let n = tree.vertex_count();
    if n <= 1 {
        return true;
    }
    if tree.edge_count() != n - 1 {
        return false;
    }
    (1..n).all(|i| tree.has_edge(i - 1, i))
}

/// A reason a `TreeDecomposition` is not valid for a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompositionViolation {
    /// `tree` has the wrong node count for `bags`.
    TreeSizeMismatch {
        nodes: usize,
        bags: usize,
    },
    /// `tree` is not acyclic and connected.
    TreeNotATree,
    BagVertexOutOfRange {
        node: usize,
        vertex: usize,
    },
    /// Some graph vertex appears in no bag.
    VertexCoverage {
        vertex: usize,
    },
    /// Some graph edge has no bag containing both endpoints.
    EdgeCoverage {
        u: usize,
        v: usize,
    },
    /// The tree nodes whose bags contain `vertex` are not connected.
    OccurrenceSubtree {
        vertex: usize,
    },
}

impl fmt::Display for DecompositionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecompositionViolation::TreeSizeMismatch { nodes, bags } => {
                write!(f, "tree has {nodes} nodes but {bags} bags were given")
            }
            DecompositionViolation::TreeNotATree => {
                write!(f, "decomposition tree is not acyclic and connected")
            }
            DecompositionViolation::BagVertexOutOfRange { node, vertex } => {
                write!(f, "bag {node} contains out-of-range vertex {vertex}")
            }
            DecompositionViolation::VertexCoverage { vertex } => {
                write!(f, "vertex coverage: vertex {vertex} appears in no bag")
            }
            DecompositionViolation::EdgeCoverage { u, v } => {
                write!(f, "edge coverage: edge {u}-{v} is contained in no bag")
            }
            DecompositionViolation::OccurrenceSubtree { vertex } => write!(
                f,
                "occurrence subtree: bags containing vertex {vertex} do not form a connected subtree"
            ),
        }
    }
}

/// Checks vertex coverage, edge coverage, and connectivity of each vertex's
/// occurrence set. The width (max bag size − 1) is reported either way.
pub fn verify_decomposition(
    g: &Graph,
    d: &TreeDecomposition,
) -> (std::result::Result<(), Vec<DecompositionViolation>>, i64) {
    let width = d.width();
    let mut violations = Vec::new();

    if d.tree.vertex_count() != d.bags.len() {
        violations.push(DecompositionViolation::TreeSizeMismatch {
            nodes: d.tree.vertex_count(),
            bags: d.bags.len(),
        });
        return (Err(violations), width);
    }
    let nodes = d.bags.len();
    let tree_ok = if nodes == 0 {
        true
    } else {
        d.tree.edge_count() == nodes - 1 && d.tree.is_connected()
    };
    if !tree_ok {
        violations.push(DecompositionViolation::TreeNotATree);
        return (Err(violations), width);
    }

    let n = g.vertex_count();
    let mut occurrences: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (node, bag) in d.bags.iter().enumerate() {
        for &v in bag {
            if v >= n {
                violations.push(DecompositionViolation::BagVertexOutOfRange { node, vertex: v });
            } else {
                occurrences[v].push(node);
            }
        }
    }

    for (v, occ) in occurrences.iter().enumerate() {
        if occ.is_empty() {
            violations.push(DecompositionViolation::VertexCoverage { vertex: v });
        } else if !d.tree.is_connected_subset(occ) {
            violations.push(DecompositionViolation::OccurrenceSubtree { vertex: v });
        }
    }

    for (u, v) in g.edges() {
        let covered = d
            .bags
            .iter()
            .any(|bag| bag.binary_search(&u).is_ok() && bag.binary_search(&v).is_ok());
        if !covered {
            violations.push(DecompositionViolation::EdgeCoverage { u, v });
        }
    }

    if violations.is_empty() {
        (Ok(()), width)
    } else {
        (Err(violations), width)
    }
}

/// Path decomposition read off a BFS layering from `root`: first bag is the
/// root with its first two layers, then each bag is two consecutive layers.
#[derive(Clone, Debug)]
pub struct LayeredDecomposition {
    pub base: TreeDecomposition,
    pub root: usize,
    pub layering: BfsLayering,
}

/// Builds the bag sequence ({u} ∪ V_1 ∪ V_2, V_2 ∪ V_3, V_3 ∪ V_4, …) over
/// the BFS layers V_i from `u`. With eccentricity e there are max(1, e−1)
/// bags; for e ≤ 2 the single bag is the whole vertex set.
pub fn layered_path_decomposition(g: &Graph, u: usize) -> Result<LayeredDecomposition> {
    let layering = bfs_layering(g, u)?;
    let e = layering.eccentricity();
    let layer = |i: usize| -> &[usize] {
        if i <= e {
            &layering.layers[i]
        } else {
            &[]
        }
    };

    let bag_count = std::cmp::max(1, e.saturating_sub(1));
    let mut bags = Vec::with_capacity(bag_count);
    let mut first = vec![u];
    first.extend_from_slice(layer(1));
    first.extend_from_slice(layer(2));
    bags.push(first);
    for i in 2..=e.saturating_sub(1) {
        let mut bag = layer(i).to_vec();
        bag.extend_from_slice(layer(i + 1));
        bags.push(bag);
    }

    Ok(LayeredDecomposition {
        base: TreeDecomposition::from_path(bags),
        root: u,
        layering,
    })
}

/// The graph `G_i` obtained from the subgraph on layers 0..=i+1 by
/// contracting layers 0..i into one vertex, with that vertex's id and the
/// positions of the surviving layer vertices.
#[derive(Clone, Debug)]
pub struct ContractedLayer {
    pub graph: Graph,
    /// The contraction vertex `u_i`.
    pub centre: usize,
    /// Original vertex (in V_i ∪ V_{i+1}) -> vertex of `graph`.
    pub vertex_map: BTreeMap<usize, usize>,
}

/// Contracts layers 0..i of the BFS layering from `u` into a single vertex
/// and keeps layers i and i+1 around it. Every result has radius ≤ 2 from
/// the contraction vertex.
pub fn contracted_layer_graph(g: &Graph, u: usize, i: usize) -> Result<ContractedLayer> {
    if i < 1 {
        return Err(Error::InvalidArgument(
            "layer index must be at least 1".into(),
        ));
    }
    let layering = bfs_layering(g, u)?;
    let e = layering.eccentricity();
    if i > e {
        return Err(Error::InvalidArgument(format!(
            "layer {i} out of range: eccentricity of vertex {u} is {e}"
        )));
    }

    // Induced subgraph on layers 0..=min(i+1, e), then contract 0..i.
    let top = std::cmp::min(i + 1, e);
    let mut keep: Vec<usize> = Vec::new();
    for layer in &layering.layers[..=top] {
        keep.extend_from_slice(layer);
    }
    keep.sort_unstable();
    let (sub, sub_vertices) = g.induced(&keep);
    let mut sub_id = BTreeMap::new();
    for (new, &old) in sub_vertices.iter().enumerate() {
        sub_id.insert(old, new);
    }

    let core: Vec<usize> = layering.layers[..i]
        .iter()
        .flatten()
        .map(|v| sub_id[v])
        .collect();
    let (graph, map) = contract_partition(&sub, &[core])?;
    let centre = 0; // the single explicit part gets the first new id

    let mut vertex_map = BTreeMap::new();
    for layer in &layering.layers[i..=top] {
        for &v in layer {
            vertex_map.insert(v, map[sub_id[&v]]);
        }
    }
    Ok(ContractedLayer {
        graph,
        centre,
        vertex_map,
    })
}

/// Upper bound on tree-treewidth: the maximum exact treewidth over the bags
/// of the layered path decomposition rooted at `u`. Bags are solved
/// independently (in parallel under the `parallel` feature).
pub fn ttw_upper(g: &Graph, u: usize, limits: &OracleLimits) -> Result<i64> {
    ttw_upper_impl(g, u, limits, cfg!(feature = "parallel"))
}

/// Single-threaded variant of [`ttw_upper`].
pub fn ttw_upper_seq(g: &Graph, u: usize, limits: &OracleLimits) -> Result<i64> {
    ttw_upper_impl(g, u, limits, false)
}

fn ttw_upper_impl(g: &Graph, u: usize, limits: &OracleLimits, parallel: bool) -> Result<i64> {
    let decomposition = layered_path_decomposition(g, u)?;
    let bags = &decomposition.base.bags;
    let solve = |bag: &Vec<usize>| -> Result<i64> {
        let (sub, _) = g.induced(bag);
        let (tw, _) = exact_treewidth(&sub, limits)?;
        Ok(tw)
    };
    let results: Vec<Result<i64>> = if parallel {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            bags.par_iter().map(solve).collect()
        }
        #[cfg(not(feature = "parallel"))]
        {
            bags.iter().map(solve).collect()
        }
    } else {
        bags.iter().map(solve).collect()
    };
    let mut best = i64::MIN;
    for r in results {
        best = best.max(r?);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::make_grid;
    use crate::layering::radius_and_centre;

    fn path_graph(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    fn complete_graph(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    #[test]
    fn single_bag_covers_complete_graph() {
        let g = complete_graph(5);
        let d = TreeDecomposition::from_path(vec![(0..5).collect()]);
        let (ok, width) = verify_decomposition(&g, &d);
        assert_eq!(ok, Ok(()));
        assert_eq!(width, 4);
    }

    #[test]
    fn path_decomposition_of_path_has_width_one() {
        let g = path_graph(5);
        let bags = (1..5).map(|i| vec![i - 1, i]).collect();
        let d = TreeDecomposition::from_path(bags);
        assert!(d.path);
        let (ok, width) = verify_decomposition(&g, &d);
        assert_eq!(ok, Ok(()));
        assert_eq!(width, 1);
    }

    #[test]
    fn missing_edge_pair_reported_as_edge_coverage() {
        let g = complete_graph(3);
        let d = TreeDecomposition::from_path(vec![vec![0, 1], vec![1, 2]]);
        let (result, _) = verify_decomposition(&g, &d);
        let violations = result.unwrap_err();
        assert_eq!(
            violations,
            vec![DecompositionViolation::EdgeCoverage { u: 0, v: 2 }]
        );
        assert!(violations[0].to_string().contains("edge coverage"));
    }

    #[test]
    fn scattered_occurrences_reported_as_subtree_violation() {
        let g = path_graph(3);
        let d = TreeDecomposition::from_path(vec![vec![0, 1], vec![1, 2], vec![0, 2]]);
        let (result, _) = verify_decomposition(&g, &d);
        assert!(result
            .unwrap_err()
            .iter()
            .any(|v| matches!(v, DecompositionViolation::OccurrenceSubtree { vertex: 0 })));
    }

    #[test]
    fn uncovered_vertex_reported() {
        let g = path_graph(2);
        let d = TreeDecomposition::from_path(vec![vec![0]]);
        let (result, _) = verify_decomposition(&g, &d);
        assert!(result
            .unwrap_err()
            .iter()
            .any(|v| matches!(v, DecompositionViolation::VertexCoverage { vertex: 1 })));
    }

    #[test]
    fn layered_bags_on_path_match_expected_sequence() {
        let g = path_graph(5);
        let d = layered_path_decomposition(&g, 0).unwrap();
        assert_eq!(d.base.bags, vec![vec![0, 1, 2], vec![2, 3], vec![3, 4]]);
        let (ok, width) = verify_decomposition(&g, &d.base);
        assert_eq!(ok, Ok(()));
        assert_eq!(width, 2);
    }

    #[test]
    fn diameter_one_graph_gets_single_full_bag() {
        let g = complete_graph(4);
        let d = layered_path_decomposition(&g, 2).unwrap();
        assert_eq!(d.base.bags, vec![vec![0, 1, 2, 3]]);
        assert_eq!(verify_decomposition(&g, &d.base).0, Ok(()));
    }

    #[test]
    fn single_vertex_graph_decomposes() {
        let g = Graph::new(1);
        let d = layered_path_decomposition(&g, 0).unwrap();
        assert_eq!(d.base.bags, vec![vec![0]]);
        assert_eq!(verify_decomposition(&g, &d.base).0, Ok(()));
    }

    #[test]
    fn grid_layered_decomposition_verifies() {
        let (g, spec) = make_grid(5, 5).unwrap();
        for u in [0, spec.id(3, 3), spec.id(5, 5)] {
            let d = layered_path_decomposition(&g, u).unwrap();
            assert_eq!(verify_decomposition(&g, &d.base).0, Ok(()));
        }
    }

    #[test]
    fn first_contracted_layer_keeps_root() {
        let g = path_graph(4);
        let c = contracted_layer_graph(&g, 0, 1).unwrap();
        // Contracting the singleton layer {u} changes nothing structurally.
        assert_eq!(c.graph.vertex_count(), 3);
        assert_eq!(c.graph.edge_count(), 2);
        assert_eq!(c.centre, 0);
    }

    #[test]
    fn contracted_layer_of_path_is_short_path() {
        let g = path_graph(6);
        let c = contracted_layer_graph(&g, 0, 3).unwrap();
        assert_eq!(c.graph.vertex_count(), 3);
        assert_eq!(c.graph.edge_count(), 2);
        assert!(c.graph.has_edge(c.centre, c.vertex_map[&3]));
        assert!(c.graph.has_edge(c.vertex_map[&3], c.vertex_map[&4]));
        let (radius, _) = radius_and_centre(&c.graph).unwrap();
        assert!(radius <= 2);
    }

    #[test]
    fn contracted_layers_of_grid_have_radius_at_most_two() {
        let (g, spec) = make_grid(6, 6).unwrap();
        let u = spec.id(1, 1);
        let layering = bfs_layering(&g, u).unwrap();
        for i in 1..=layering.eccentricity() {
            let c = contracted_layer_graph(&g, u, i).unwrap();
            let centre_ecc = crate::layering::eccentricity(&c.graph, c.centre).unwrap();
            assert!(
                centre_ecc <= 2,
                "layer {i} has centre eccentricity {centre_ecc}"
            );
            // Every layer-i vertex is adjacent to the contraction vertex.
            for &v in &layering.layers[i] {
                assert!(c.graph.has_edge(c.centre, c.vertex_map[&v]));
            }
        }
    }

    #[test]
    fn layer_graph_index_out_of_range_rejected() {
        let g = path_graph(3);
        assert!(matches!(
            contracted_layer_graph(&g, 0, 0),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            contracted_layer_graph(&g, 0, 5),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn ttw_upper_on_tree_is_one() {
        // A spider: three legs of length 3 from a hub.
        let mut g = Graph::new(10);
        for leg in 0..3 {
            let base = 1 + leg * 3;
            g.add_edge(0, base);
            g.add_edge(base, base + 1);
            g.add_edge(base + 1, base + 2);
        }
        let limits = OracleLimits::default();
        assert_eq!(ttw_upper(&g, 0, &limits).unwrap(), 1);
        assert_eq!(ttw_upper_seq(&g, 5, &limits).unwrap(), 1);
    }

    #[test]
    fn ttw_upper_on_complete_graph_is_clique_width() {
        let g = complete_graph(6);
        let limits = OracleLimits::default();
        assert_eq!(ttw_upper(&g, 0, &limits).unwrap(), 5);
    }
}
