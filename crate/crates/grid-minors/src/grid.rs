//! Grid graphs and the coordinate <-> vertex-id bijection.

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// Addressing scheme for a grid graph: 1-based coordinates `(x, y)` with
/// `x` in `1..=rows` (first coordinate) and `y` in `1..=cols` (second
/// coordinate), mapped row-major onto 0-based vertex ids. Two cells are
/// adjacent exactly when their coordinates differ by 1 in one position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSpec {
    rows: usize,
    cols: usize,
}

impl GridSpec {
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidArgument(format!(
                "grid dimensions must be positive, got {rows}x{cols}"
            )));
        }
        Ok(GridSpec { rows, cols })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn vertex_count(&self) -> usize {
        self.rows * self.cols
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        (1..=self.rows).contains(&x) && (1..=self.cols).contains(&y)
    }

    /// Vertex id of cell `(x, y)`.
    pub fn id(&self, x: usize, y: usize) -> usize {
        assert!(
            self.contains(x, y),
            "cell ({x},{y}) outside {}x{} grid",
            self.rows,
            self.cols
        );
        (x - 1) * self.cols + (y - 1)
    }

    /// Cell coordinates of a vertex id.
    pub fn coord(&self, id: usize) -> (usize, usize) {
        assert!(id < self.vertex_count(), "id {id} outside grid");
        (id / self.cols + 1, id % self.cols + 1)
    }

    /// Ids of every cell in the grid, row-major.
    pub fn ids(&self) -> impl Iterator<Item = usize> {
        0..self.vertex_count()
    }
}

/// Builds the `rows x cols` grid graph together with its addressing scheme.
pub fn make_grid(rows: usize, cols: usize) -> Result<(Graph, GridSpec)> {
    let spec = GridSpec::new(rows, cols)?;
    let mut g = Graph::new(spec.vertex_count());
    for x in 1..=rows {
        for y in 1..=cols {
            if x < rows {
                g.add_edge(spec.id(x, y), spec.id(x + 1, y));
            }
            if y < cols {
                g.add_edge(spec.id(x, y), spec.id(x, y + 1));
            }
        }
    }
    Ok((g, spec))
}

/// Checks that `g` is exactly the grid graph described by `spec`.
pub fn is_grid_graph(g: &Graph, spec: &GridSpec) -> bool {
    match make_grid(spec.rows(), spec.cols()) {
        Ok((expected, _)) => *g == expected,
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_by_one_grid_is_a_single_vertex() {
        let (g, _) = make_grid(1, 1).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn two_by_three_grid_edge_count() {
        let (g, _) = make_grid(2, 3).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 7);
    }

    #[test]
    fn adjacency_follows_unit_coordinate_steps() {
        let (g, spec) = make_grid(2, 2).unwrap();
        assert!(g.has_edge(spec.id(1, 1), spec.id(1, 2)));
        assert!(g.has_edge(spec.id(1, 1), spec.id(2, 1)));
        assert!(!g.has_edge(spec.id(1, 1), spec.id(2, 2)));
    }

    #[test]
    fn edge_count_formula_holds() {
        for rows in 1..=6 {
            for cols in 1..=6 {
                let (g, _) = make_grid(rows, cols).unwrap();
                assert_eq!(g.edge_count(), rows * (cols - 1) + cols * (rows - 1));
            }
        }
    }

    #[test]
    fn zero_dimension_rejected() {
        assert!(make_grid(0, 3).is_err());
        assert!(make_grid(3, 0).is_err());
    }

    #[test]
    fn coordinate_bijection_round_trips() {
        let spec = GridSpec::new(4, 7).unwrap();
        for id in spec.ids() {
            let (x, y) = spec.coord(id);
            assert_eq!(spec.id(x, y), id);
        }
        assert_eq!(spec.id(1, 1), 0);
        assert_eq!(spec.id(2, 1), 7);
    }
}
