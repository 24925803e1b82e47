//! Planarity testing with the left-right (edge-orientation) criterion.
//!
//! Both passes are iterative with explicit stacks, so graphs with
//! hundreds of thousands of edges are fine. Only the verdict is computed;
//! no embedding is extracted.

use crate::graph::Graph;

/// True iff `g` is planar. Dense graphs (`m > 3n − 6`) are rejected by
/// edge count alone; everything else goes through the left-right test.
pub fn planarity_test(g: &Graph) -> bool {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n <= 4 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    LeftRight::new(g).run()
}

const UNSET: usize = usize::MAX;

#[derive(Clone, Copy, Default, PartialEq, Eq)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Default)]
struct ConflictPair {
    l: Interval,
    r: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.l, &mut self.r);
    }
}

struct Frame {
    v: usize,
    idx: usize,
    /// Edge whose post-processing runs when control returns to this frame.
    pending: Option<usize>,
}

/// One undirected edge id per graph edge; during the orientation pass each
/// edge is directed exactly once and keeps that id.
struct LeftRight<'a> {
    g: &'a Graph,
    /// Adjacency with undirected edge ids.
    adj: Vec<Vec<(usize, usize)>>,
    /// Tail of the oriented edge (UNSET until oriented).
    esrc: Vec<usize>,
    edst: Vec<usize>,
    height: Vec<usize>,
    parent_edge: Vec<Option<usize>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<usize>,
    roots: Vec<usize>,
    // Testing pass state.
    ordered: Vec<Vec<usize>>,
    stack: Vec<ConflictPair>,
    stack_bottom: Vec<usize>,
    lowpt_edge: Vec<usize>,
    refs: Vec<Option<usize>>,
}

impl<'a> LeftRight<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.vertex_count();
        let m = g.edge_count();
        let mut adj = vec![Vec::new(); n];
        let mut edst = vec![0usize; m];
        let mut esrc_init = vec![0usize; m];
        for (k, (u, v)) in g.edges().enumerate() {
            adj[u].push((v, k));
            adj[v].push((u, k));
            esrc_init[k] = u;
            edst[k] = v;
        }
        LeftRight {
            g,
            adj,
            esrc: vec![UNSET; m],
            edst,
            height: vec![UNSET; n],
            parent_edge: vec![None; n],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting: vec![0; m],
            roots: Vec::new(),
            ordered: Vec::new(),
            stack: Vec::new(),
            stack_bottom: vec![0; m],
            lowpt_edge: (0..m).collect(),
            refs: vec![None; m],
        }
    }

    fn run(&mut self) -> bool {
        self.orient();
        self.sort_by_nesting();
        for root_idx in 0..self.roots.len() {
            if !self.test_from(self.roots[root_idx]) {
                return false;
            }
        }
        true
    }

    /// Orientation pass: DFS assigning heights, edge directions, low
    /// points, and nesting depths.
    fn orient(&mut self) {
        for s in 0..self.g.vertex_count() {
            if self.height[s] != UNSET {
                continue;
            }
            self.roots.push(s);
            self.height[s] = 0;
            let mut frames = vec![Frame {
                v: s,
                idx: 0,
                pending: None,
            }];
            while let Some(top) = frames.last_mut() {
                let v = top.v;
                if let Some(k) = top.pending.take() {
                    self.finish_edge(k, v);
                }
                if top.idx < self.adj[v].len() {
                    let (w, k) = self.adj[v][top.idx];
                    top.idx += 1;
                    if self.esrc[k] != UNSET {
                        continue; // already oriented (e.g. the parent edge)
                    }
                    self.esrc[k] = v;
                    self.edst[k] = w;
                    self.lowpt[k] = self.height[v];
                    self.lowpt2[k] = self.height[v];
                    if self.height[w] == UNSET {
                        // tree edge
                        self.parent_edge[w] = Some(k);
                        self.height[w] = self.height[v] + 1;
                        top.pending = Some(k);
                        frames.push(Frame {
                            v: w,
                            idx: 0,
                            pending: None,
                        });
                    } else {
                        // back edge
                        self.lowpt[k] = self.height[w];
                        self.finish_edge(k, v);
                    }
                } else {
                    frames.pop();
                }
            }
        }
    }

    /// Nesting depth of `k` plus low-point propagation into the parent
    /// edge of its tail `v`; runs once `k`'s subtree (if any) is done.
    fn finish_edge(&mut self, k: usize, v: usize) {
        self.nesting[k] = 2 * self.lowpt[k];
        if self.lowpt2[k] < self.height[v] {
            self.nesting[k] += 1; // chordal: has a second return below v
        }
        if let Some(e) = self.parent_edge[v] {
            use std::cmp::Ordering;
            match self.lowpt[k].cmp(&self.lowpt[e]) {
                Ordering::Less => {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[k]);
                    self.lowpt[e] = self.lowpt[k];
                }
                Ordering::Greater => {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[k]);
                }
                Ordering::Equal => {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[k]);
                }
            }
        }
    }

    fn sort_by_nesting(&mut self) {
        let n = self.g.vertex_count();
        let mut ordered = vec![Vec::new(); n];
        for (v, slot) in ordered.iter_mut().enumerate() {
            for &(_, k) in &self.adj[v] {
                if self.esrc[k] == v {
                    slot.push(k);
                }
            }
            slot.sort_by_key(|&k| self.nesting[k]);
        }
        self.ordered = ordered;
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        match i.high {
            None => false,
            Some(h) => self.lowpt[h] > self.lowpt[b],
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.l.low, p.r.low) {
            (None, None) => usize::MAX,
            (Some(l), None) => self.lowpt[l],
            (None, Some(r)) => self.lowpt[r],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
        }
    }

    /// Testing pass from one DFS root; false means a left-right conflict
    /// (the graph is non-planar).
    fn test_from(&mut self, s: usize) -> bool {
        let mut frames = vec![Frame {
            v: s,
            idx: 0,
            pending: None,
        }];
        while let Some(top) = frames.last_mut() {
            let v = top.v;
            if let Some(k) = top.pending.take() {
                if !self.post_edge(k, v) {
                    return false;
                }
            }
            if top.idx < self.ordered[v].len() {
                let k = self.ordered[v][top.idx];
                top.idx += 1;
                self.stack_bottom[k] = self.stack.len();
                let w = self.edst[k];
                if self.parent_edge[w] == Some(k) {
                    // tree edge: descend, post-process on return
                    top.pending = Some(k);
                    frames.push(Frame {
                        v: w,
                        idx: 0,
                        pending: None,
                    });
                } else {
                    // back edge
                    self.lowpt_edge[k] = k;
                    self.stack.push(ConflictPair {
                        l: Interval::default(),
                        r: Interval {
                            low: Some(k),
                            high: Some(k),
                        },
                    });
                    if !self.post_edge(k, v) {
                        return false;
                    }
                }
            } else {
                if let Some(e) = self.parent_edge[v] {
                    let u = self.esrc[e];
                    self.trim_back_edges(u);
                    if self.lowpt[e] < self.height[u] {
                        // e has a return edge: remember the highest one
                        if let Some(p) = self.stack.last() {
                            let hl = p.l.high;
                            let hr = p.r.high;
                            self.refs[e] = match (hl, hr) {
                                (Some(l), None) => Some(l),
                                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                                _ => hr,
                            };
                        }
                    }
                }
                frames.pop();
            }
        }
        true
    }

    /// Constraint integration for edge `k` out of `v`, after its subtree
    /// (or the back edge itself) has been handled.
    fn post_edge(&mut self, k: usize, v: usize) -> bool {
        if self.lowpt[k] < self.height[v] {
            // k has a return edge below v
            let e = self.parent_edge[v].expect("roots have height 0, so no return edge");
            if k == self.ordered[v][0] {
                self.lowpt_edge[e] = self.lowpt_edge[k];
            } else if !self.add_constraints(k, e) {
                return false;
            }
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::default();
        // Merge return edges of ei into p.r.
        while let Some(mut q) = self.stack.pop() {
            if !q.l.empty() {
                q.swap();
            }
            if !q.l.empty() {
                return false; // interleaved on both sides
            }
            let q_low = q.r.low.expect("stacked intervals always carry a low edge");
            if self.lowpt[q_low] > self.lowpt[e] {
                // merge intervals
                if p.r.empty() {
                    p.r.high = q.r.high;
                } else if let Some(prl) = p.r.low {
                    self.refs[prl] = q.r.high;
                }
                p.r.low = q.r.low;
            } else {
                // align with the parent's lowest return edge
                self.refs[q_low] = Some(self.lowpt_edge[e]);
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        // Merge conflicting return edges of earlier siblings into p.l.
        while let Some(&t) = self.stack.last() {
            if !self.conflicting(&t.l, ei) && !self.conflicting(&t.r, ei) {
                break;
            }
            let mut q = self.stack.pop().expect("peeked above");
            if self.conflicting(&q.r, ei) {
                q.swap();
            }
            if self.conflicting(&q.r, ei) {
                return false; // conflicts on both sides
            }
            // merge the interval below lowpt(ei) into p.r
            if let Some(prl) = p.r.low {
                self.refs[prl] = q.r.high;
            }
            if q.r.low.is_some() {
                p.r.low = q.r.low;
            }
            if p.l.empty() {
                p.l.high = q.l.high;
            } else if let Some(pll) = p.l.low {
                self.refs[pll] = q.l.high;
            }
            p.l.low = q.l.low;
        }
        if !(p.l.empty() && p.r.empty()) {
            self.stack.push(p);
        }
        true
    }

    /// Drops or shortens intervals whose return edges end at `u`, which is
    /// about to stop being the current DFS head.
    fn trim_back_edges(&mut self, u: usize) {
        while let Some(top) = self.stack.last() {
            if self.lowest(top) == self.height[u] {
                self.stack.pop();
            } else {
                break;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            // trim left interval
            while let Some(h) = p.l.high {
                if self.edst[h] == u {
                    p.l.high = self.refs[h];
                } else {
                    break;
                }
            }
            if p.l.high.is_none() {
                if let Some(pll) = p.l.low {
                    self.refs[pll] = p.r.low;
                    p.l.low = None;
                }
            }
            // trim right interval
            while let Some(h) = p.r.high {
                if self.edst[h] == u {
                    p.r.high = self.refs[h];
                } else {
                    break;
                }
            }
            if p.r.high.is_none() {
                if let Some(prl) = p.r.low {
                    self.refs[prl] = p.l.low;
                    p.r.low = None;
                }
            }
            self.stack.push(p);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::make_grid;

    fn complete_graph(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::new(a + b);
        for u in 0..a {
            for v in 0..b {
                g.add_edge(u, a + v);
            }
        }
        g
    }

    /// Replaces every edge with a path of `parts` edges.
    fn subdivide(g: &Graph, parts: usize) -> Graph {
        assert!(parts >= 1);
        let n = g.vertex_count();
        let extra = (parts - 1) * g.edge_count();
        let mut out = Graph::new(n + extra);
        let mut next = n;
        for (u, v) in g.edges() {
            let mut prev = u;
            for _ in 0..parts - 1 {
                out.add_edge(prev, next);
                prev = next;
                next += 1;
            }
            out.add_edge(prev, v);
        }
        out
    }

    fn petersen() -> Graph {
        let mut g = Graph::new(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5); // outer cycle
            g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
            g.add_edge(i, 5 + i); // spokes
        }
        g
    }

    #[test]
    fn small_graphs_are_planar() {
        assert!(planarity_test(&Graph::new(0)));
        assert!(planarity_test(&Graph::new(3)));
        assert!(planarity_test(&complete_graph(4)));
    }

    #[test]
    fn kuratowski_graphs_are_nonplanar() {
        assert!(!planarity_test(&complete_graph(5)));
        assert!(!planarity_test(&complete_bipartite(3, 3)));
    }

    #[test]
    fn near_kuratowski_graphs_are_planar() {
        let k5_minus = {
            let edges: Vec<_> = complete_graph(5).edges().skip(1).collect();
            Graph::from_edges(5, &edges).unwrap()
        };
        assert!(planarity_test(&k5_minus));
        let k33_minus = {
            let edges: Vec<_> = complete_bipartite(3, 3).edges().skip(1).collect();
            Graph::from_edges(6, &edges).unwrap()
        };
        assert!(planarity_test(&k33_minus));
    }

    #[test]
    fn grids_are_planar() {
        for (r, c) in [(1, 1), (2, 5), (6, 6), (13, 4)] {
            assert!(planarity_test(&make_grid(r, c).unwrap().0));
        }
    }

    #[test]
    fn petersen_graph_is_nonplanar() {
        assert!(!planarity_test(&petersen()));
    }

    #[test]
    fn subdivision_preserves_the_verdict() {
        assert!(!planarity_test(&subdivide(&complete_bipartite(3, 3), 7)));
        assert!(!planarity_test(&subdivide(&complete_graph(5), 5)));
        assert!(planarity_test(&subdivide(&make_grid(4, 4).unwrap().0, 6)));
    }

    #[test]
    fn hundred_thousand_edge_instances() {
        // ~99.5k edges, planar.
        let (grid, _) = make_grid(200, 250).unwrap();
        assert_eq!(grid.edge_count(), 200 * 249 + 250 * 199);
        assert!(planarity_test(&grid));
        // ~100k edges, odd one crossing structure: a subdivided K_{3,3}.
        let big = subdivide(&complete_bipartite(3, 3), 11_111);
        assert!(big.edge_count() >= 99_999);
        assert!(!planarity_test(&big));
    }

    #[test]
    fn dense_graphs_shortcut_matches_full_test() {
        // K_6 trips the edge-count filter; K_{4,4} does not but is still
        // non-planar (it contains K_{3,3}).
        assert!(!planarity_test(&complete_graph(6)));
        let k44 = complete_bipartite(4, 4);
        assert!(3 * k44.vertex_count() - 6 >= k44.edge_count());
        assert!(!planarity_test(&k44));
    }

    #[test]
    fn disconnected_graphs_judged_per_component() {
        // A planar component next to a K_5.
        let mut g = Graph::new(11);
        for (u, v) in make_grid(2, 3).unwrap().0.edges() {
            g.add_edge(u, v);
        }
        for u in 6..11 {
            for v in u + 1..11 {
                g.add_edge(u, v);
            }
        }
        assert!(!planarity_test(&g));
        // Two planar components.
        let mut h = Graph::new(10);
        for (u, v) in make_grid(2, 2).unwrap().0.edges() {
            h.add_edge(u, v);
            h.add_edge(u + 4, v + 4);
        }
        assert!(planarity_test(&h));
    }

    #[test]
    fn forests_and_cycles_are_planar() {
        let mut path = Graph::new(50);
        for i in 1..50 {
            path.add_edge(i - 1, i);
        }
        assert!(planarity_test(&path));
        let mut cyc = path.clone();
        cyc.add_edge(0, 49);
        assert!(planarity_test(&cyc));
    }
}
