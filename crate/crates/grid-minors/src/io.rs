//! On-disk formats.
//!
//! Graphs are plain text: a header `p <n> <m>`, an optional `grid <rows>
//! <cols>` line when the leading vertices form a grid in row-major order,
//! then `m` lines `e <u> <v>` with 0-based ids, ascending, one edge per
//! line. Models, decompositions, and lower-bound witnesses are JSON with
//! `BTreeMap`-sorted keys, so re-running a command with the same inputs
//! reproduces the output byte for byte.

use crate::decomposition::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::grid::GridSpec;
use crate::lower_bound::LowerBoundWitness;
use crate::model::MinorModel;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

fn bad(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

/// Renders a graph (and an optional grid header) in the text format.
pub fn write_graph(g: &Graph, spec: Option<&GridSpec>) -> String {
    let mut out = format!("p {} {}\n", g.vertex_count(), g.edge_count());
    if let Some(spec) = spec {
        out.push_str(&format!("grid {} {}\n", spec.rows(), spec.cols()));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

/// Parses the text format; returns the graph and the grid header, if any.
pub fn read_graph(text: &str) -> Result<(Graph, Option<GridSpec>)> {
    let mut g: Option<Graph> = None;
    let mut spec = None;
    let mut promised = 0usize;
    let mut edges_seen = 0usize;
    let mut last_line = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let no = idx + 1;
        last_line = no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let kind = fields.next().unwrap();
        let mut field = |what: &str| -> Result<usize> {
            fields
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| bad(no, format!("bad {what} in a '{kind}' line")))
        };
        match (kind, &mut g) {
            ("p", Some(_)) => return Err(bad(no, "duplicate 'p' line")),
            ("p", None) => {
                let n = field("vertex count")?;
                promised = field("edge count")?;
                g = Some(Graph::new(n));
            }
            (_, None) => return Err(bad(no, "graph files start with a 'p <n> <m>' line")),
            ("grid", Some(g)) => {
                let rows = field("row count")?;
                let cols = field("column count")?;
                let n = g.vertex_count();
                if rows * cols > n {
                    return Err(bad(
                        no,
                        format!("grid header {rows}x{cols} exceeds the {n} vertices"),
                    ));
                }
                spec = Some(GridSpec::new(rows, cols)?);
            }
            ("e", Some(g)) => {
                let u = field("endpoint")?;
                let v = field("endpoint")?;
                let n = g.vertex_count();
                if u == v || u >= n || v >= n {
                    return Err(bad(no, format!("edge {u}-{v} out of range")));
                }
                g.add_edge(u, v);
                edges_seen += 1;
            }
            (other, Some(_)) => return Err(bad(no, format!("unknown line kind '{other}'"))),
        }
    }
    let g = g.ok_or_else(|| bad(last_line, "empty graph file"))?;
    if edges_seen != promised || g.edge_count() != promised {
        return Err(bad(
            last_line,
            format!(
                "header promises {promised} edges, found {edges_seen} lines ({} distinct)",
                g.edge_count()
            ),
        ));
    }
    Ok((g, spec))
}

#[derive(Serialize, Deserialize)]
struct GraphDto {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl GraphDto {
    fn from_graph(g: &Graph) -> Self {
        GraphDto {
            n: g.vertex_count(),
            edges: g.edges().collect(),
        }
    }

    fn into_graph(self) -> Result<Graph> {
        Graph::from_edges(self.n, &self.edges)
    }
}

/// A model as stored on disk: the model itself plus optional extras —
/// doubling anchors, and the grid geometry of the host and/or pattern
/// when one of them is a grid (so downstream commands need no
/// out-of-band dimension arguments).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelFile {
    pub model: MinorModel,
    pub anchors: Option<Vec<usize>>,
    pub host_grid: Option<GridSpec>,
    pub pattern_grid: Option<GridSpec>,
}

impl ModelFile {
    pub fn new(model: MinorModel) -> Self {
        ModelFile {
            model,
            anchors: None,
            host_grid: None,
            pattern_grid: None,
        }
    }

    pub fn with_anchors(mut self, anchors: Vec<usize>) -> Self {
        self.anchors = Some(anchors);
        self
    }

    pub fn with_host_grid(mut self, spec: GridSpec) -> Self {
        self.host_grid = Some(spec);
        self
    }

    pub fn with_pattern_grid(mut self, spec: GridSpec) -> Self {
        self.pattern_grid = Some(spec);
        self
    }
}

#[derive(Serialize, Deserialize)]
struct ModelDto {
    host: GraphDto,
    pattern: GraphDto,
    branch_sets: BTreeMap<String, Vec<usize>>,
    rep_edges: BTreeMap<String, (usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    anchors: Option<BTreeMap<String, usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    host_grid: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pattern_grid: Option<(usize, usize)>,
}

fn edge_key(u: usize, v: usize) -> String {
    format!("{u}-{v}")
}

fn parse_edge_key(key: &str) -> Result<(usize, usize)> {
    let (u, v) = key
        .split_once('-')
        .ok_or_else(|| invalid(format!("edge key '{key}' is not of the form 'u-v'")))?;
    Ok((
        u.parse()
            .map_err(|_| invalid(format!("bad edge key '{key}'")))?,
        v.parse()
            .map_err(|_| invalid(format!("bad edge key '{key}'")))?,
    ))
}

/// Serializes a model file as JSON.
pub fn write_model(file: &ModelFile) -> String {
    let m = &file.model;
    let dto = ModelDto {
        host: GraphDto::from_graph(&m.host),
        pattern: GraphDto::from_graph(&m.pattern),
        branch_sets: m
            .branch_sets
            .iter()
            .enumerate()
            .map(|(v, set)| (v.to_string(), set.clone()))
            .collect(),
        rep_edges: m
            .rep_edges
            .iter()
            .map(|(&(u, v), &pair)| (edge_key(u, v), pair))
            .collect(),
        anchors: file.anchors.as_ref().map(|a| {
            a.iter()
                .enumerate()
                .map(|(v, &host)| (v.to_string(), host))
                .collect()
        }),
        host_grid: file.host_grid.map(|s| (s.rows(), s.cols())),
        pattern_grid: file.pattern_grid.map(|s| (s.rows(), s.cols())),
    };
    let mut text = serde_json::to_string_pretty(&dto).expect("plain data serializes");
    text.push('\n');
    text
}

/// Parses a model JSON file.
pub fn read_model(text: &str) -> Result<ModelFile> {
    let dto: ModelDto = serde_json::from_str(text)?;
    let host = dto.host.into_graph()?;
    let pattern = dto.pattern.into_graph()?;
    let np = pattern.vertex_count();
    let mut branch_sets = vec![Vec::new(); np];
    for (key, set) in dto.branch_sets {
        let v: usize = key
            .parse()
            .map_err(|_| invalid(format!("bad branch-set key '{key}'")))?;
        if v >= np {
            return Err(invalid(format!(
                "branch-set key {v} exceeds the pattern order {np}"
            )));
        }
        branch_sets[v] = set;
    }
    let mut rep_edges = BTreeMap::new();
    for (key, pair) in dto.rep_edges {
        rep_edges.insert(parse_edge_key(&key)?, pair);
    }
    let anchors = match dto.anchors {
        None => None,
        Some(map) => {
            let mut anchors = vec![usize::MAX; np];
            for (key, host_v) in map {
                let v: usize = key
                    .parse()
                    .map_err(|_| invalid(format!("bad anchor key '{key}'")))?;
                if v >= np {
                    return Err(invalid(format!("anchor key {v} exceeds the pattern order")));
                }
                anchors[v] = host_v;
            }
            if anchors.contains(&usize::MAX) {
                return Err(invalid("anchors must cover every pattern vertex"));
            }
            Some(anchors)
        }
    };
    let grid = |dims: Option<(usize, usize)>| -> Result<Option<GridSpec>> {
        dims.map(|(r, c)| GridSpec::new(r, c)).transpose()
    };
    Ok(ModelFile {
        model: MinorModel::new(host, pattern, branch_sets, rep_edges),
        anchors,
        host_grid: grid(dto.host_grid)?,
        pattern_grid: grid(dto.pattern_grid)?,
    })
}

#[derive(Serialize, Deserialize)]
struct DecompositionDto {
    bags: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

/// Serializes a decomposition: ordered bags plus explicit tree edges.
pub fn write_decomposition(td: &TreeDecomposition) -> String {
    let dto = DecompositionDto {
        bags: td.bags.clone(),
        edges: td.tree.edges().collect(),
    };
    let mut text = serde_json::to_string_pretty(&dto).expect("plain data serializes");
    text.push('\n');
    text
}

pub fn read_decomposition(text: &str) -> Result<TreeDecomposition> {
    let dto: DecompositionDto = serde_json::from_str(text)?;
    let tree = Graph::from_edges(dto.bags.len(), &dto.edges)?;
    Ok(TreeDecomposition::new(dto.bags, tree))
}

#[derive(Serialize, Deserialize)]
struct WitnessDto {
    apex: usize,
    w: Vec<usize>,
    grid: (usize, usize),
    diagonal_edges: Vec<(usize, usize)>,
    /// How the shortcut edges were laid out; the block-diagonal pattern is
    /// one of several ways to keep every cell near its block centre.
    gadget: String,
}

const DIAGONAL_GADGET: &str = "per-block main and anti diagonals";

/// Serializes a lower-bound witness (without the planar part, which is
/// recoverable from the graph by dropping the apex).
pub fn write_witness(w: &LowerBoundWitness) -> String {
    let dto = WitnessDto {
        apex: w.apex,
        w: w.w_set.clone(),
        grid: w.grid_dims,
        diagonal_edges: w.diagonal_edges.clone(),
        gadget: DIAGONAL_GADGET.to_string(),
    };
    let mut text = serde_json::to_string_pretty(&dto).expect("plain data serializes");
    text.push('\n');
    text
}

/// Parses a witness JSON file, rebuilding the planar part from `g` by
/// taking everything except the apex.
pub fn read_witness(text: &str, g: &Graph) -> Result<LowerBoundWitness> {
    let dto: WitnessDto = serde_json::from_str(text)?;
    if dto.apex + 1 != g.vertex_count() {
        return Err(invalid(format!(
            "witness apex {} is not the last vertex of the {}-vertex graph",
            dto.apex,
            g.vertex_count()
        )));
    }
    let keep: Vec<usize> = (0..dto.apex).collect();
    let (planar_part, _) = g.induced(&keep);
    Ok(LowerBoundWitness {
        apex: dto.apex,
        w_set: dto.w,
        grid_dims: dto.grid,
        planar_part,
        diagonal_edges: dto.diagonal_edges,
    })
}
