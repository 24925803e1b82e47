//! Simple undirected graphs over dense 0-based vertex ids.

use crate::error::{Error, Result};
use std::collections::VecDeque;

/// A simple undirected graph: no loops, no parallel edges.
///
/// Adjacency lists are kept sorted, so iteration order is deterministic
/// everywhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Creates a graph with `n` vertices and no edges.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops and out-of-range
    /// endpoints. Duplicate edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
            }
            let hi = u.max(v);
            if hi >= n {
                return Err(Error::VertexOutOfRange { vertex: hi, len: n });
            }
            pairs.push((u.min(v), u.max(v)));
        }
        pairs.sort_unstable();
        pairs.dedup();
        for &(u, v) in &pairs {
            g.adj[u].push(v);
            g.adj[v].push(u);
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        g.edge_count = pairs.len();
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Adds an edge. Panics on loops or out-of-range vertices; adding an
    /// existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loop at vertex {u}");
        assert!(
            u < self.adj.len() && v < self.adj.len(),
            "vertex out of range"
        );
        match self.adj[u].binary_search(&v) {
            Ok(_) => {}
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.edge_count += 1;
            }
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    /// All edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.adj.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == n
    }

    /// Induced subgraph on `vertices` (which must be distinct and in range).
    /// Returns the subgraph together with the list mapping new id -> old id;
    /// new ids follow the order of `vertices`.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut local = vec![usize::MAX; self.adj.len()];
        for (i, &v) in vertices.iter().enumerate() {
            assert!(v < self.adj.len(), "vertex out of range");
            assert!(local[v] == usize::MAX, "duplicate vertex {v}");
            local[v] = i;
        }
        let mut g = Graph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = local[w];
                if j != usize::MAX && j > i {
                    g.add_edge(i, j);
                }
            }
        }
        (g, vertices.to_vec())
    }

    /// Checks that `set` induces a connected subgraph. `set` must be sorted
    /// or at least duplicate-free.
    pub fn is_connected_subset(&self, set: &[usize]) -> bool {
        if set.is_empty() {
            return false;
        }
        if set.len() == 1 {
            return set[0] < self.adj.len();
        }
        let mut member = vec![false; self.adj.len()];
        for &v in set {
            if v >= self.adj.len() {
                return false;
            }
            member[v] = true;
        }
        let mut seen = vec![false; self.adj.len()];
        let mut queue = VecDeque::from([set[0]]);
        seen[set[0]] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if member[v] && !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == set.len()
    }

    /// Distances from `source` (usize::MAX where unreachable).
    pub fn distances(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.adj.len()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

/// Finds a concrete edge of `g` with one endpoint in `a` and the other in
/// `b`, scanning deterministically (smallest endpoint in `a` first).
pub fn find_cross_edge(g: &Graph, a: &[usize], b: &[usize]) -> Option<(usize, usize)> {
    let mut in_b = vec![false; g.vertex_count()];
    for &v in b {
        in_b[v] = true;
    }
    let mut a_sorted = a.to_vec();
    a_sorted.sort_unstable();
    for &u in &a_sorted {
        for &w in g.neighbors(u) {
            if in_b[w] {
                return Some((u, w));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_dedups_and_sorts() {
        let g = Graph::from_edges(4, &[(1, 0), (0, 1), (2, 3), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn from_edges_rejects_loops_and_range() {
        assert!(Graph::from_edges(2, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn connectivity_checks() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert!(g.is_connected_subset(&[0, 1]));
        assert!(!g.is_connected_subset(&[1, 2]));
        let h = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(h.is_connected());
    }

    #[test]
    fn induced_subgraph_keeps_order() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let (sub, map) = g.induced(&[4, 0, 1]);
        assert_eq!(map, vec![4, 0, 1]);
        assert_eq!(sub.edge_count(), 2);
        assert!(sub.has_edge(0, 1) && sub.has_edge(1, 2));
    }

    #[test]
    fn cross_edge_found_deterministically() {
        let g = Graph::from_edges(4, &[(0, 2), (1, 3), (0, 3)]).unwrap();
        assert_eq!(find_cross_edge(&g, &[1, 0], &[2, 3]), Some((0, 2)));
        assert_eq!(find_cross_edge(&g, &[1], &[2]), None);
    }
}
