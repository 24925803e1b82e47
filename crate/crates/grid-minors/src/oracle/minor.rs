//! Exhaustive minor containment for small patterns: branch-and-bound over
//! branch-set assignments with connectivity pruning, plus a brute-force
//! partition enumerator used to cross-check negative answers.

use crate::error::{Error, Result};
use crate::graph::{find_cross_edge, Graph};
use crate::model::{verify_minor_model, MinorModel};
use crate::oracle::{planarity_test, OracleLimits};
use std::collections::{BTreeMap, HashSet};

/// Answer of [`minor_test`].
#[derive(Clone, Debug)]
pub enum MinorOutcome {
    /// A verified model of the pattern in the host.
    Minor(MinorModel),
    NotMinor,
}

impl MinorOutcome {
    pub fn is_minor(&self) -> bool {
        matches!(self, MinorOutcome::Minor(_))
    }
}

/// Decides whether `h` is a minor of `g` by exhaustive search. Every
/// returned model passes [`verify_minor_model`]; `NotMinor` is only
/// reported after the search space is exhausted.
///
/// Pattern vertices are processed by descending degree and host candidates
/// tried by descending degree, so dense parts of the pattern fail fast.
pub fn minor_test(g: &Graph, h: &Graph, limits: &OracleLimits) -> Result<MinorOutcome> {
    limits.validate()?;
    let hn = h.vertex_count();
    let gn = g.vertex_count();
    if hn > limits.max_minor_pattern {
        return Err(Error::SizeLimit {
            what: "minor oracle pattern vertex count",
            size: hn,
            limit: limits.max_minor_pattern,
        });
    }
    if gn > limits.max_minor_host {
        return Err(Error::SizeLimit {
            what: "minor oracle host vertex count",
            size: gn,
            limit: limits.max_minor_host,
        });
    }

    if hn > gn || h.edge_count() > g.edge_count() {
        return Ok(MinorOutcome::NotMinor);
    }
    if hn == 0 {
        let model = MinorModel::new(g.clone(), h.clone(), Vec::new(), BTreeMap::new());
        return Ok(MinorOutcome::Minor(model));
    }
    // Minors of planar graphs are planar. Only applied to hosts too big for
    // the brute-force cross-check, so small-host answers stay independent
    // of the planarity oracle.
    if gn > 16 && !planarity_test(h) && planarity_test(g) {
        return Ok(MinorOutcome::NotMinor);
    }

    let mut search = Search::new(g, h, limits.max_search_steps);
    let found = search.solve()?;
    match found {
        Some(masks) => {
            let model = model_from_masks(g, h, &masks)?;
            Ok(MinorOutcome::Minor(model))
        }
        None => Ok(MinorOutcome::NotMinor),
    }
}

struct Search<'a> {
    host: &'a Graph,
    adj: Vec<u64>,
    /// Pattern vertices by descending degree (ties: smaller id first).
    vertex_order: Vec<usize>,
    /// Pattern edges ordered so both endpoints appear as early as possible
    /// in `vertex_order`.
    edge_order: Vec<(usize, usize)>,
    /// Host vertices by descending degree (ties: smaller id first).
    candidate_order: Vec<usize>,
    /// Position of each host vertex in `candidate_order`.
    candidate_pos: Vec<usize>,
    /// For each pattern vertex, the earlier interchangeable pattern
    /// vertices (same neighbourhood up to each other). Their branch sets
    /// can be permuted freely, so roots are forced into candidate order.
    twin_preds: Vec<Vec<usize>>,
    failed: HashSet<Vec<u64>>,
    steps_left: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn new(host: &'a Graph, pattern: &Graph, budget: u64) -> Self {
        let adj: Vec<u64> = (0..host.vertex_count())
            .map(|v| {
                host.neighbors(v)
                    .iter()
                    .fold(0u64, |acc, &w| acc | (1u64 << w))
            })
            .collect();
        let mut vertex_order: Vec<usize> = (0..pattern.vertex_count()).collect();
        vertex_order.sort_by_key(|&v| (std::cmp::Reverse(pattern.degree(v)), v));
        let mut rank = vec![0usize; pattern.vertex_count()];
        for (i, &v) in vertex_order.iter().enumerate() {
            rank[v] = i;
        }
        let mut edge_order: Vec<(usize, usize)> = pattern.edges().collect();
        edge_order.sort_by_key(|&(u, v)| {
            let (a, b) = (rank[u].min(rank[v]), rank[u].max(rank[v]));
            (b, a)
        });
        let mut candidate_order: Vec<usize> = (0..host.vertex_count()).collect();
        candidate_order.sort_by_key(|&v| (std::cmp::Reverse(host.degree(v)), v));
        let mut candidate_pos = vec![0usize; host.vertex_count()];
        for (pos, &v) in candidate_order.iter().enumerate() {
            candidate_pos[v] = pos;
        }
        let twin_preds = twin_predecessors(pattern, &vertex_order);
        Search {
            host,
            adj,
            vertex_order,
            edge_order,
            candidate_order,
            candidate_pos,
            twin_preds,
            failed: HashSet::new(),
            steps_left: budget,
            budget,
        }
    }

    fn solve(&mut self) -> Result<Option<Vec<u64>>> {
        let mut masks = vec![0u64; self.vertex_order.len()];
        if self.grow(&mut masks)? {
            Ok(Some(masks))
        } else {
            Ok(None)
        }
    }

    fn neighbourhood(&self, mask: u64) -> u64 {
        let mut out = 0u64;
        let mut bits = mask;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            out |= self.adj[v];
        }
        out
    }

    fn reaches(&self, from: u64, target: u64, allowed: u64) -> bool {
        let mut seen = from;
        let mut frontier = from;
        while frontier != 0 {
            if seen & target != 0 {
                return true;
            }
            let next = self.neighbourhood(frontier) & !seen & (allowed | target);
            seen |= next;
            frontier = next;
        }
        seen & target != 0
    }

    fn grow(&mut self, masks: &mut Vec<u64>) -> Result<bool> {
        if self.steps_left == 0 {
            return Err(Error::SizeLimit {
                what: "minor oracle search steps",
                size: self.budget as usize,
                limit: self.budget as usize,
            });
        }
        self.steps_left -= 1;
        if self.failed.contains(masks.as_slice()) {
            return Ok(false);
        }

        let used: u64 = masks.iter().fold(0, |acc, &m| acc | m);
        let free = !used
            & if self.host.vertex_count() == 64 {
                u64::MAX
            } else {
                (1u64 << self.host.vertex_count()) - 1
            };

        // Screen every pending pattern edge for feasibility and pick the
        // one with the fewest growth candidates to branch on (fail first).
        let mut target: Option<(usize, usize, u64, u64)> = None;
        let mut target_width = u32::MAX;
        for edge_idx in 0..self.edge_order.len() {
            let (u, v) = self.edge_order[edge_idx];
            if masks[u] == 0 || masks[v] == 0 {
                continue;
            }
            let nu = self.neighbourhood(masks[u]);
            if nu & masks[v] != 0 {
                continue;
            }
            if !self.reaches(masks[u], masks[v], free) {
                self.failed.insert(masks.clone());
                return Ok(false);
            }
            let cand_u = nu & free;
            let cand_v = self.neighbourhood(masks[v]) & free;
            let width = (cand_u | cand_v).count_ones();
            if width == 0 {
                self.failed.insert(masks.clone());
                return Ok(false);
            }
            if width < target_width {
                target_width = width;
                target = Some((u, v, cand_u, cand_v));
            }
        }

        if let Some((u, v, mut cand_u, mut cand_v)) = target {
            // A connecting path stays inside one free component touching
            // both sides, so growth candidates outside such components
            // can be skipped on this branch.
            let mut linking = 0u64;
            for comp in self.free_components(free) {
                let nc = self.neighbourhood(comp);
                if nc & masks[u] != 0 && nc & masks[v] != 0 {
                    linking |= comp;
                }
            }
            cand_u &= linking;
            cand_v &= linking;
            for cand_idx in 0..self.candidate_order.len() {
                let c = self.candidate_order[cand_idx];
                let bit = 1u64 << c;
                if cand_u & bit != 0 {
                    masks[u] |= bit;
                    if self.grow(masks)? {
                        return Ok(true);
                    }
                    masks[u] &= !bit;
                }
                if cand_v & bit != 0 {
                    masks[v] |= bit;
                    if self.grow(masks)? {
                        return Ok(true);
                    }
                    masks[v] &= !bit;
                }
            }
            self.failed.insert(masks.clone());
            return Ok(false);
        }

        // No edge pending: root the next unassigned pattern vertex.
        let mut unassigned = 0usize;
        let mut next_root = None;
        for &u in &self.vertex_order {
            if masks[u] == 0 {
                unassigned += 1;
                if next_root.is_none() {
                    next_root = Some(u);
                }
            }
        }
        match next_root {
            None => Ok(true),
            Some(u) => {
                if (free.count_ones() as usize) < unassigned {
                    self.failed.insert(masks.clone());
                    return Ok(false);
                }
                // A future connection to a rooted neighbour runs through
                // free vertices only, so it stays inside one free
                // component; the root is only viable inside a component
                // adjacent to every rooted pattern-neighbour of `u`.
                let rooted_neighbour_sets: Vec<u64> =
                    self.host_masks_of_rooted_neighbours(u, masks);
                let mut allowed = 0u64;
                for comp in self.free_components(free) {
                    if rooted_neighbour_sets
                        .iter()
                        .all(|&b| self.neighbourhood(b) & comp != 0)
                    {
                        allowed |= comp;
                    }
                }
                // Interchangeable predecessors force this root strictly
                // later in candidate order than their earliest vertex.
                let mut min_pos = 0usize;
                for pred_idx in 0..self.twin_preds[u].len() {
                    let w = self.twin_preds[u][pred_idx];
                    if masks[w] != 0 {
                        let earliest = self.earliest_position(masks[w]);
                        min_pos = min_pos.max(earliest + 1);
                    }
                }
                for cand_idx in min_pos..self.candidate_order.len() {
                    let c = self.candidate_order[cand_idx];
                    let bit = 1u64 << c;
                    if allowed & bit == 0 {
                        continue;
                    }
                    masks[u] = bit;
                    if self.grow(masks)? {
                        return Ok(true);
                    }
                    masks[u] = 0;
                }
                self.failed.insert(masks.clone());
                Ok(false)
            }
        }
    }

    fn host_masks_of_rooted_neighbours(&self, u: usize, masks: &[u64]) -> Vec<u64> {
        self.edge_order
            .iter()
            .filter_map(|&(a, b)| {
                if a == u && masks[b] != 0 {
                    Some(masks[b])
                } else if b == u && masks[a] != 0 {
                    Some(masks[a])
                } else {
                    None
                }
            })
            .collect()
    }

    /// Connected components of the free host vertices, as masks.
    fn free_components(&self, free: u64) -> Vec<u64> {
        let mut comps = Vec::new();
        let mut rest = free;
        while rest != 0 {
            let seed = 1u64 << rest.trailing_zeros();
            let mut comp = seed;
            loop {
                let grown = (self.neighbourhood(comp) & free) | comp;
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            comps.push(comp);
            rest &= !comp;
        }
        comps
    }

    fn earliest_position(&self, mask: u64) -> usize {
        let mut best = usize::MAX;
        let mut bits = mask;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            best = best.min(self.candidate_pos[v]);
        }
        best
    }
}

/// For each pattern vertex, the earlier (in `vertex_order`) members of its
/// interchangeability class. Two pattern vertices are interchangeable when
/// their neighbourhoods agree outside the pair itself, so swapping their
/// branch sets turns any valid model into another valid model; rooting
/// them in candidate order is then no loss of generality.
fn twin_predecessors(pattern: &Graph, vertex_order: &[usize]) -> Vec<Vec<usize>> {
    let p = pattern.vertex_count();
    let nb: Vec<u64> = (0..p)
        .map(|v| {
            pattern
                .neighbors(v)
                .iter()
                .fold(0u64, |acc, &w| acc | (1u64 << w))
        })
        .collect();
    let twins = |u: usize, w: usize| -> bool { (nb[u] & !(1u64 << w)) == (nb[w] & !(1u64 << u)) };
    // Greedy mutual-twin classes, scanned in root order so every class
    // member lists exactly the classmates rooted before it.
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut preds = vec![Vec::new(); p];
    for &u in vertex_order {
        let mut placed = false;
        for class in &mut classes {
            if class.iter().all(|&w| twins(u, w)) {
                preds[u] = class.clone();
                class.push(u);
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push(vec![u]);
        }
    }
    preds
}

fn model_from_masks(g: &Graph, h: &Graph, masks: &[u64]) -> Result<MinorModel> {
    let branch_sets: Vec<Vec<usize>> = masks
        .iter()
        .map(|&m| {
            let mut set = Vec::new();
            let mut bits = m;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                set.push(v);
            }
            set
        })
        .collect();
    let mut rep_edges = BTreeMap::new();
    for (u, v) in h.edges() {
        let edge = find_cross_edge(g, &branch_sets[u], &branch_sets[v]).ok_or_else(|| {
            Error::Defect(format!(
                "search returned branch sets with no host edge for pattern edge {u}-{v}"
            ))
        })?;
        rep_edges.insert((u, v), edge);
    }
    let model = MinorModel::new(g.clone(), h.clone(), branch_sets, rep_edges);
    if let Err(violations) = verify_minor_model(&model) {
        return Err(Error::Defect(format!(
            "search returned an invalid model: {}",
            violations
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join("; ")
        )));
    }
    Ok(model)
}

/// Reference answer by brute force: tries every assignment of host vertices
/// to pattern branch sets (or none), checking connectivity and edge
/// coverage at the leaves. Exponential; for cross-checking on small hosts.
pub fn minor_by_enumeration(g: &Graph, h: &Graph) -> bool {
    let n = g.vertex_count();
    let p = h.vertex_count();
    if p == 0 {
        return true;
    }
    if p > n {
        return false;
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(0u64, |acc, &w| acc | (1u64 << w))
        })
        .collect();
    let edges: Vec<(usize, usize)> = h.edges().collect();
    let mut class_masks = vec![0u64; p];
    assign(&adj, &edges, &mut class_masks, 0, n, p)
}

fn assign(
    adj: &[u64],
    pattern_edges: &[(usize, usize)],
    class_masks: &mut Vec<u64>,
    next: usize,
    n: usize,
    p: usize,
) -> bool {
    if next == n {
        return class_masks.iter().all(|&m| connected_mask(adj, m))
            && pattern_edges.iter().all(|&(u, v)| {
                let mut touch = false;
                let mut bits = class_masks[u];
                while bits != 0 {
                    let a = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    if adj[a] & class_masks[v] != 0 {
                        touch = true;
                        break;
                    }
                }
                touch
            });
    }
    let empties = class_masks.iter().filter(|&&m| m == 0).count();
    let remaining = n - next;
    if empties > remaining {
        return false;
    }
    let bit = 1u64 << next;
    for c in 0..p {
        class_masks[c] |= bit;
        if assign(adj, pattern_edges, class_masks, next + 1, n, p) {
            return true;
        }
        class_masks[c] &= !bit;
    }
    // Leave `next` unused.
    if empties < remaining && assign(adj, pattern_edges, class_masks, next + 1, n, p) {
        return true;
    }
    false
}

fn connected_mask(adj: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return false;
    }
    let start = 1u64 << mask.trailing_zeros();
    let mut seen = start;
    loop {
        let mut next = 0u64;
        let mut bits = seen;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= adj[v];
        }
        next &= mask & !seen;
        if next == 0 {
            break;
        }
        seen |= next;
    }
    seen == mask
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::make_grid;

    fn limits() -> OracleLimits {
        OracleLimits::default()
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

    fn path_graph(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    fn cycle_graph(n: usize) -> Graph {
        let mut g = path_graph(n);
        g.add_edge(0, n - 1);
        g
    }

    #[test]
    fn complete_four_is_minor_of_small_grid() {
        let (g, _) = make_grid(3, 3).unwrap();
        let outcome = minor_test(&g, &complete_graph(4), &limits()).unwrap();
        assert!(outcome.is_minor());
    }

    #[test]
    fn complete_five_is_not_minor_of_grids() {
        let k5 = complete_graph(5);
        // Small host: decided by the raw search.
        let (small, _) = make_grid(4, 4).unwrap();
        assert!(!minor_test(&small, &k5, &limits()).unwrap().is_minor());
        // Larger host: the planarity shortcut kicks in.
        let (big, _) = make_grid(7, 7).unwrap();
        assert!(!minor_test(&big, &k5, &limits()).unwrap().is_minor());
    }

    #[test]
    fn single_edge_is_minor_of_any_connected_pair() {
        let h = Graph::from_edges(2, &[(0, 1)]).unwrap();
        for g in [path_graph(2), path_graph(5), complete_graph(3)] {
            assert!(minor_test(&g, &h, &limits()).unwrap().is_minor());
        }
    }

    #[test]
    fn cycle_contracts_to_triangle_but_path_does_not() {
        let k3 = complete_graph(3);
        assert!(minor_test(&cycle_graph(5), &k3, &limits())
            .unwrap()
            .is_minor());
        assert!(!minor_test(&path_graph(12), &k3, &limits())
            .unwrap()
            .is_minor());
    }

    #[test]
    fn narrow_grid_has_no_complete_four_minor() {
        // 2×n grids have treewidth 2.
        let (g, _) = make_grid(2, 4).unwrap();
        assert!(!minor_test(&g, &complete_graph(4), &limits())
            .unwrap()
            .is_minor());
    }

    #[test]
    fn empty_pattern_is_always_a_minor() {
        let outcome = minor_test(&path_graph(3), &Graph::new(0), &limits()).unwrap();
        assert!(outcome.is_minor());
    }

    #[test]
    fn pattern_larger_than_host_is_rejected_quickly() {
        assert!(!minor_test(&path_graph(3), &complete_graph(4), &limits())
            .unwrap()
            .is_minor());
    }

    #[test]
    fn enumeration_agrees_on_small_instances() {
        let k3 = complete_graph(3);
        let k4 = complete_graph(4);
        let cases: Vec<(Graph, Graph, bool)> = vec![
            (path_graph(8), k3.clone(), false),
            (cycle_graph(6), k3.clone(), true),
            (make_grid(2, 4).unwrap().0, k4.clone(), false),
            (make_grid(3, 3).unwrap().0, k4.clone(), true),
            (path_graph(12), k3, false),
        ];
        for (g, h, expected) in cases {
            assert_eq!(minor_by_enumeration(&g, &h), expected);
            assert_eq!(minor_test(&g, &h, &limits()).unwrap().is_minor(), expected);
        }
    }

    #[test]
    fn size_limits_enforced() {
        let big_host = Graph::new(65);
        assert!(matches!(
            minor_test(&big_host, &complete_graph(3), &limits()),
            Err(Error::SizeLimit { .. })
        ));
        let big_pattern = complete_graph(7);
        assert!(matches!(
            minor_test(&path_graph(10), &big_pattern, &limits()),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn returned_models_verify() {
        let (g, _) = make_grid(3, 4).unwrap();
        for h in [complete_graph(4), cycle_graph(5), path_graph(4)] {
            match minor_test(&g, &h, &limits()).unwrap() {
                MinorOutcome::Minor(model) => {
                    assert_eq!(verify_minor_model(&model), Ok(()));
                    assert_eq!(model.pattern, h);
                }
                MinorOutcome::NotMinor => panic!("expected a minor"),
            }
        }
    }
}
