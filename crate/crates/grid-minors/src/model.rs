//! Minor models (branch sets plus representing edges) and their verifier.

use crate::graph::Graph;
use std::collections::BTreeMap;
use std::fmt;

/// Witness that `pattern` is a minor of `host`: one non-empty connected
/// branch set per pattern vertex, pairwise disjoint, plus a host edge
/// representing each pattern edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorModel {
    pub host: Graph,
    pub pattern: Graph,
    /// Branch set of each pattern vertex, sorted host vertex ids.
    pub branch_sets: Vec<Vec<usize>>,
    /// Pattern edge `(u, v)` with `u < v` -> host edge, first endpoint in
    /// the branch set of `u`.
    pub rep_edges: BTreeMap<(usize, usize), (usize, usize)>,
}

impl MinorModel {
    /// Normalizes branch sets (sorts them) without validating anything.
    pub fn new(
        host: Graph,
        pattern: Graph,
        mut branch_sets: Vec<Vec<usize>>,
        rep_edges: BTreeMap<(usize, usize), (usize, usize)>,
    ) -> Self {
        for set in &mut branch_sets {
            set.sort_unstable();
        }
        MinorModel {
            host,
            pattern,
            branch_sets,
            rep_edges,
        }
    }
}

/// A reason a `MinorModel` is not a valid witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelViolation {
    BranchSetCount {
        expected: usize,
        found: usize,
    },
    EmptyBranchSet {
        vertex: usize,
    },
    HostVertexOutOfRange {
        vertex: usize,
        host_vertex: usize,
    },
    DuplicateHostVertex {
        vertex: usize,
        host_vertex: usize,
    },
    Disjointness {
        u: usize,
        v: usize,
        host_vertex: usize,
    },
    Connectivity {
        vertex: usize,
    },
    MissingRepEdge {
        u: usize,
        v: usize,
    },
    ExtraRepEdge {
        u: usize,
        v: usize,
    },
    RepEdgeNotInHost {
        u: usize,
        v: usize,
        a: usize,
        b: usize,
    },
    RepEdgeEndpoints {
        u: usize,
        v: usize,
        a: usize,
        b: usize,
    },
}

impl fmt::Display for ModelViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelViolation::BranchSetCount { expected, found } => write!(
                f,
                "branch set count: expected {expected} sets, found {found}"
            ),
            ModelViolation::EmptyBranchSet { vertex } => {
                write!(f, "empty branch set for pattern vertex {vertex}")
            }
            ModelViolation::HostVertexOutOfRange {
                vertex,
                host_vertex,
            } => write!(
                f,
                "branch set of pattern vertex {vertex} contains out-of-range host vertex {host_vertex}"
            ),
            ModelViolation::DuplicateHostVertex {
                vertex,
                host_vertex,
            } => write!(
                f,
                "branch set of pattern vertex {vertex} lists host vertex {host_vertex} twice"
            ),
            ModelViolation::Disjointness { u, v, host_vertex } => write!(
                f,
                "disjointness: branch sets of pattern vertices {u} and {v} share host vertex {host_vertex}"
            ),
            ModelViolation::Connectivity { vertex } => write!(
                f,
                "connectivity: branch set of pattern vertex {vertex} is not connected in the host"
            ),
            ModelViolation::MissingRepEdge { u, v } => {
                write!(f, "no representing edge for pattern edge {u}-{v}")
            }
            ModelViolation::ExtraRepEdge { u, v } => {
                write!(f, "representing edge given for non-edge {u}-{v} of the pattern")
            }
            ModelViolation::RepEdgeNotInHost { u, v, a, b } => write!(
                f,
                "edge coverage: representing edge {a}-{b} for pattern edge {u}-{v} is not a host edge"
            ),
            ModelViolation::RepEdgeEndpoints { u, v, a, b } => write!(
                f,
                "representing edge {a}-{b} does not join the branch sets of pattern vertices {u} and {v}"
            ),
        }
    }
}

/// Checks the three model invariants (disjointness, connectivity, one
/// representing host edge per pattern edge). Violations name the offending
/// branch set or edge.
pub fn verify_minor_model(m: &MinorModel) -> Result<(), Vec<ModelViolation>> {
    verify_impl(m, cfg!(feature = "parallel"))
}

/// Single-threaded variant of [`verify_minor_model`].
pub fn verify_minor_model_seq(m: &MinorModel) -> Result<(), Vec<ModelViolation>> {
    verify_impl(m, false)
}

fn verify_impl(m: &MinorModel, parallel: bool) -> Result<(), Vec<ModelViolation>> {
    let mut violations = Vec::new();
    let host_n = m.host.vertex_count();
    let pattern_n = m.pattern.vertex_count();

    if m.branch_sets.len() != pattern_n {
        violations.push(ModelViolation::BranchSetCount {
            expected: pattern_n,
            found: m.branch_sets.len(),
        });
        return Err(violations);
    }

    let mut owner: Vec<usize> = vec![usize::MAX; host_n];
    for (u, set) in m.branch_sets.iter().enumerate() {
        if set.is_empty() {
            violations.push(ModelViolation::EmptyBranchSet { vertex: u });
            continue;
        }
        let mut prev = usize::MAX;
        for &h in set {
            if h >= host_n {
                violations.push(ModelViolation::HostVertexOutOfRange {
                    vertex: u,
                    host_vertex: h,
                });
                continue;
            }
            if h == prev {
                violations.push(ModelViolation::DuplicateHostVertex {
                    vertex: u,
                    host_vertex: h,
                });
                continue;
            }
            prev = h;
            if owner[h] != usize::MAX {
                violations.push(ModelViolation::Disjointness {
                    u: owner[h],
                    v: u,
                    host_vertex: h,
                });
            } else {
                owner[h] = u;
            }
        }
    }
    if !violations.is_empty() {
        // Connectivity and edge checks would only repeat the damage.
        return Err(violations);
    }

    let disconnected = connectivity_violations(m, parallel);
    violations.extend(disconnected);

    for (u, v) in m.pattern.edges() {
        match m.rep_edges.get(&(u, v)) {
            None => violations.push(ModelViolation::MissingRepEdge { u, v }),
            Some(&(a, b)) => {
                if a >= host_n || b >= host_n || !m.host.has_edge(a, b) {
                    violations.push(ModelViolation::RepEdgeNotInHost { u, v, a, b });
                } else {
                    let ends_ok =
                        (owner[a] == u && owner[b] == v) || (owner[a] == v && owner[b] == u);
                    if !ends_ok {
                        violations.push(ModelViolation::RepEdgeEndpoints { u, v, a, b });
                    }
                }
            }
        }
    }
    for &(u, v) in m.rep_edges.keys() {
        if u >= pattern_n || v >= pattern_n || !m.pattern.has_edge(u, v) {
            violations.push(ModelViolation::ExtraRepEdge { u, v });
        }
    }

    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

fn connectivity_violations(m: &MinorModel, parallel: bool) -> Vec<ModelViolation> {
    let check = |(u, set): (usize, &Vec<usize>)| -> Option<ModelViolation> {
        if m.host.is_connected_subset(set) {
            None
        } else {
            Some(ModelViolation::Connectivity { vertex: u })
        }
    };
    if parallel {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            return m
                .branch_sets
                .par_iter()
                .enumerate()
                .filter_map(check)
                .collect();
        }
    }
    m.branch_sets.iter().enumerate().filter_map(check).collect()
}

/// Identity model of a graph in itself: singleton branch sets and each edge
/// representing itself.
pub fn identity_model(g: &Graph) -> MinorModel {
    let branch_sets = (0..g.vertex_count()).map(|v| vec![v]).collect();
    let rep_edges = g.edges().map(|(u, v)| ((u, v), (u, v))).collect();
    MinorModel {
        host: g.clone(),
        pattern: g.clone(),
        branch_sets,
        rep_edges,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::make_grid;

    fn k4_in_three_by_three() -> MinorModel {
        // Top row, bottom-left L, right column tail, and the centre cell.
        let (host, spec) = make_grid(3, 3).unwrap();
        let mut pattern = Graph::new(4);
        for u in 0..4 {
            for v in u + 1..4 {
                pattern.add_edge(u, v);
            }
        }
        let b0 = vec![spec.id(1, 1), spec.id(1, 2), spec.id(1, 3)];
        let b1 = vec![spec.id(2, 1), spec.id(3, 1), spec.id(3, 2)];
        let b2 = vec![spec.id(2, 3), spec.id(3, 3)];
        let b3 = vec![spec.id(2, 2)];
        let mut rep = BTreeMap::new();
        rep.insert((0, 1), (spec.id(1, 1), spec.id(2, 1)));
        rep.insert((0, 2), (spec.id(1, 3), spec.id(2, 3)));
        rep.insert((0, 3), (spec.id(1, 2), spec.id(2, 2)));
        rep.insert((1, 2), (spec.id(3, 2), spec.id(3, 3)));
        rep.insert((1, 3), (spec.id(2, 1), spec.id(2, 2)));
        rep.insert((2, 3), (spec.id(2, 3), spec.id(2, 2)));
        MinorModel::new(host, pattern, vec![b0, b1, b2, b3], rep)
    }

    #[test]
    fn identity_model_verifies() {
        let (g, _) = make_grid(4, 4).unwrap();
        assert_eq!(verify_minor_model(&identity_model(&g)), Ok(()));
    }

    #[test]
    fn shared_vertex_reported_as_disjointness() {
        let mut m = identity_model(&make_grid(2, 2).unwrap().0);
        m.branch_sets[1] = vec![0];
        let violations = verify_minor_model(&m).unwrap_err();
        assert!(violations.iter().any(|v| matches!(
            v,
            ModelViolation::Disjointness {
                u: 0,
                v: 1,
                host_vertex: 0
            }
        )));
        assert!(violations[0].to_string().contains("disjointness"));
    }

    #[test]
    fn scattered_branch_set_reported_as_connectivity() {
        let (host, spec) = make_grid(3, 3).unwrap();
        let pattern = Graph::new(1);
        let m = MinorModel::new(
            host,
            pattern,
            vec![vec![spec.id(1, 1), spec.id(3, 3)]],
            BTreeMap::new(),
        );
        let violations = verify_minor_model(&m).unwrap_err();
        assert_eq!(violations, vec![ModelViolation::Connectivity { vertex: 0 }]);
        assert!(violations[0].to_string().contains("connectivity"));
    }

    #[test]
    fn missing_and_bogus_rep_edges_reported() {
        let (host, _) = make_grid(2, 2).unwrap();
        let pattern = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let m = MinorModel::new(
            host.clone(),
            pattern.clone(),
            vec![vec![0], vec![3]],
            BTreeMap::new(),
        );
        let violations = verify_minor_model(&m).unwrap_err();
        assert_eq!(
            violations,
            vec![ModelViolation::MissingRepEdge { u: 0, v: 1 }]
        );

        let mut rep = BTreeMap::new();
        rep.insert((0, 1), (0, 3));
        let m = MinorModel::new(host, pattern, vec![vec![0], vec![3]], rep);
        let violations = verify_minor_model(&m).unwrap_err();
        assert!(matches!(
            violations[0],
            ModelViolation::RepEdgeNotInHost { a: 0, b: 3, .. }
        ));
    }

    #[test]
    fn rep_edge_in_either_orientation_accepted() {
        let (host, _) = make_grid(1, 2).unwrap();
        let pattern = Graph::from_edges(2, &[(0, 1)]).unwrap();
        for rep_pair in [(0usize, 1usize), (1, 0)] {
            let mut rep = BTreeMap::new();
            rep.insert((0, 1), rep_pair);
            let m = MinorModel::new(host.clone(), pattern.clone(), vec![vec![0], vec![1]], rep);
            assert_eq!(verify_minor_model(&m), Ok(()));
        }
    }

    #[test]
    fn handcrafted_complete_graph_model_verifies() {
        let m = k4_in_three_by_three();
        assert_eq!(verify_minor_model(&m), Ok(()));
        assert_eq!(verify_minor_model_seq(&m), Ok(()));
    }
}
