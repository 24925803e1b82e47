//! BFS layerings, radius/centre computation, and shortest paths to a centre.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::VecDeque;

/// Distance layers from a centre: `layers[i]` holds every vertex at
/// distance exactly `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BfsLayering {
    pub centre: usize,
    pub layers: Vec<Vec<usize>>,
}

impl BfsLayering {
    /// Eccentricity of the centre.
    pub fn eccentricity(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn layer_of(&self, v: usize) -> Option<usize> {
        self.layers.iter().position(|l| l.binary_search(&v).is_ok())
    }
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            len: g.vertex_count(),
        });
    }
    Ok(())
}

fn first_unreachable(dist: &[usize]) -> Option<usize> {
    dist.iter().position(|&d| d == usize::MAX)
}

/// Partitions the vertices into distance layers from `v`. Fails on a
/// disconnected graph, naming an unreachable vertex.
pub fn bfs_layering(g: &Graph, v: usize) -> Result<BfsLayering> {
    check_vertex(g, v)?;
    let dist = g.distances(v);
    if let Some(w) = first_unreachable(&dist) {
        return Err(Error::Unreachable { from: v, vertex: w });
    }
    let ecc = dist.iter().copied().max().unwrap_or(0);
    let mut layers = vec![Vec::new(); ecc + 1];
    for (w, &d) in dist.iter().enumerate() {
        layers[d].push(w);
    }
    Ok(BfsLayering { centre: v, layers })
}

/// Eccentricity of `v`, failing on a disconnected graph.
pub fn eccentricity(g: &Graph, v: usize) -> Result<usize> {
    check_vertex(g, v)?;
    let dist = g.distances(v);
    if let Some(w) = first_unreachable(&dist) {
        return Err(Error::Unreachable { from: v, vertex: w });
    }
    Ok(dist.into_iter().max().unwrap_or(0))
}

/// Minimum eccentricity and the smallest vertex attaining it.
pub fn radius_and_centre(g: &Graph) -> Result<(usize, usize)> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut best: Option<(usize, usize)> = None;
    for v in 0..g.vertex_count() {
        let ecc = eccentricity(g, v)?;
        if best.is_none_or(|(r, _)| ecc < r) {
            best = Some((ecc, v));
        }
    }
    Ok(best.unwrap())
}

/// Shortest paths from every vertex to a common centre, all taken from one
/// BFS tree so that any two paths agree on their shared suffix.
#[derive(Clone, Debug)]
pub struct CentrePaths {
    pub centre: usize,
    parent: Vec<usize>,
    dist: Vec<usize>,
}

impl CentrePaths {
    pub fn dist(&self, x: usize) -> usize {
        self.dist[x]
    }

    /// The path from `x` to the centre, inclusive of both endpoints.
    pub fn path(&self, x: usize) -> Vec<usize> {
        let mut path = vec![x];
        let mut cur = x;
        while cur != self.centre {
            cur = self.parent[cur];
            path.push(cur);
        }
        path
    }

    /// Internal vertices of the path from `x` to the centre.
    pub fn internal(&self, x: usize) -> Vec<usize> {
        let path = self.path(x);
        if path.len() <= 2 {
            Vec::new()
        } else {
            path[1..path.len() - 1].to_vec()
        }
    }
}

/// Builds the BFS tree rooted at `alpha`; fails on a disconnected graph.
/// Parents are deterministic: each vertex is adopted by the smallest-id
/// neighbour in the previous layer reached first in BFS order.
pub fn centre_paths(g: &Graph, alpha: usize) -> Result<CentrePaths> {
    check_vertex(g, alpha)?;
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    dist[alpha] = 0;
    parent[alpha] = alpha;
    let mut queue = VecDeque::from([alpha]);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    if let Some(w) = first_unreachable(&dist) {
        return Err(Error::Unreachable {
            from: alpha,
            vertex: w,
        });
    }
    Ok(CentrePaths {
        centre: alpha,
        parent,
        dist,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::make_grid;

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|v| (v, v + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn star_layers_from_hub() {
        let layering = bfs_layering(&star(5), 0).unwrap();
        assert_eq!(layering.layers.len(), 2);
        assert_eq!(layering.layers[0], vec![0]);
        assert_eq!(layering.layers[1], vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn path_layers_are_singletons() {
        let layering = bfs_layering(&path(5), 0).unwrap();
        assert_eq!(layering.layers.len(), 5);
        for (i, layer) in layering.layers.iter().enumerate() {
            assert_eq!(layer, &vec![i]);
        }
    }

    #[test]
    fn five_by_five_grid_layer_sizes_from_middle() {
        let (g, spec) = make_grid(5, 5).unwrap();
        let layering = bfs_layering(&g, spec.id(3, 3)).unwrap();
        let sizes: Vec<_> = layering.layers.iter().map(|l| l.len()).collect();
        assert_eq!(sizes, vec![1, 4, 8, 8, 4]);
    }

    #[test]
    fn layer_index_matches_distance() {
        let (g, _) = make_grid(4, 5).unwrap();
        let layering = bfs_layering(&g, 7).unwrap();
        for (v, d) in g.distances(7).into_iter().enumerate() {
            assert_eq!(layering.layer_of(v), Some(d));
        }
    }

    #[test]
    fn disconnected_graph_names_unreachable_vertex() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        match bfs_layering(&g, 0) {
            Err(Error::Unreachable { from: 0, vertex }) => assert_eq!(vertex, 2),
            other => panic!("expected unreachable error, got {other:?}"),
        }
    }

    #[test]
    fn complete_graph_radius() {
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                edges.push((u, v));
            }
        }
        let g = Graph::from_edges(4, &edges).unwrap();
        assert_eq!(radius_and_centre(&g).unwrap(), (1, 0));
    }

    #[test]
    fn path_radius_and_centre() {
        assert_eq!(radius_and_centre(&path(5)).unwrap(), (2, 2));
    }

    #[test]
    fn five_by_five_grid_radius_and_centre() {
        let (g, spec) = make_grid(5, 5).unwrap();
        assert_eq!(radius_and_centre(&g).unwrap(), (4, spec.id(3, 3)));
    }

    #[test]
    fn radius_lower_bounds_all_eccentricities() {
        let (g, _) = make_grid(3, 7).unwrap();
        let (radius, _) = radius_and_centre(&g).unwrap();
        for v in 0..g.vertex_count() {
            assert!(radius <= eccentricity(&g, v).unwrap());
        }
    }

    #[test]
    fn dominant_centre_gives_empty_interiors() {
        let g = star(6);
        let cp = centre_paths(&g, 0).unwrap();
        for v in 1..=6 {
            assert!(cp.internal(v).is_empty());
        }
    }

    #[test]
    fn path_interior_is_the_middle() {
        let cp = centre_paths(&path(4), 0).unwrap();
        assert_eq!(cp.path(3), vec![3, 2, 1, 0]);
        assert_eq!(cp.internal(3), vec![2, 1]);
    }

    #[test]
    fn grid_interiors_are_short() {
        let (g, spec) = make_grid(4, 4).unwrap();
        let cp = centre_paths(&g, spec.id(1, 1)).unwrap();
        let ecc = eccentricity(&g, spec.id(1, 1)).unwrap();
        for v in 0..g.vertex_count() {
            assert!(cp.internal(v).len() < ecc);
            assert_eq!(cp.internal(v).len(), cp.dist(v).saturating_sub(1));
        }
    }

    #[test]
    fn paths_share_suffixes() {
        let (g, spec) = make_grid(4, 4).unwrap();
        let cp = centre_paths(&g, spec.id(2, 2)).unwrap();
        for v in 0..g.vertex_count() {
            let p = cp.path(v);
            assert_eq!(p[0], v);
            assert_eq!(*p.last().unwrap(), spec.id(2, 2));
            for w in p.windows(2) {
                assert!(g.has_edge(w[0], w[1]));
            }
            for (i, &w) in p.iter().enumerate() {
                assert_eq!(cp.path(w), p[i..].to_vec());
            }
        }
    }
}
