//! Finite multigraph core with paired directed edges (darts).
//!
//! Every undirected edge is stored as a pair of opposite darts; the pairing is
//! a fixed-point-free involution. Loops are allowed and contribute two darts
//! at one vertex (degree 2). Graphs are immutable after construction;
//! "mutating" operations return new graphs.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("no edge between vertices {0} and {1}")]
    NoSuchEdge(usize, usize),
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    VertexOutOfRange(usize, usize),
    #[error("graph too large for this operation: {0} vertices exceeds guard {1}")]
    SizeGuard(usize, usize),
    #[error("malformed graph JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid graph data: {0}")]
    Invalid(String),
}

/// A directed edge. `pair` is the index of the opposite dart.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dart {
    pub origin: usize,
    pub terminus: usize,
    pub pair: usize,
}

#[derive(Clone, Debug)]
pub struct Graph {
    labels: Vec<Option<String>>,
    darts: Vec<Dart>,
    out: Vec<Vec<usize>>,
}

impl Graph {
    /// Assembles a graph from raw darts, checking the involution invariants.
    pub fn from_darts(labels: Vec<Option<String>>, darts: Vec<Dart>) -> Result<Self, GraphError> {
        let n = labels.len();
        for (i, d) in darts.iter().enumerate() {
            if d.origin >= n || d.terminus >= n {
                return Err(GraphError::Invalid(format!(
                    "dart {} references missing vertex",
                    i
                )));
            }
            if d.pair >= darts.len() || d.pair == i {
                return Err(GraphError::Invalid(format!("dart {} has invalid pair", i)));
            }
            let p = &darts[d.pair];
            if p.pair != i || p.origin != d.terminus || p.terminus != d.origin {
                return Err(GraphError::Invalid(format!(
                    "dart {} pairing is inconsistent",
                    i
                )));
            }
        }
        let mut out = vec![Vec::new(); n];
        for (i, d) in darts.iter().enumerate() {
            out[d.origin].push(i);
        }
        Ok(Graph { labels, darts, out })
    }

    /// Builds from an undirected edge list with multiplicities. Vertices are
    /// `0..num_vertices`; loops (`u == v`) are allowed.
    pub fn from_edges(
        num_vertices: usize,
        labels: Option<Vec<String>>,
        edges: &[(usize, usize, usize)],
    ) -> Result<Self, GraphError> {
        let labels: Vec<Option<String>> = match labels {
            Some(l) => {
                if l.len() != num_vertices {
                    return Err(GraphError::Invalid(format!(
                        "{} labels for {} vertices",
                        l.len(),
                        num_vertices
                    )));
                }
                l.into_iter().map(Some).collect()
            }
            None => vec![None; num_vertices],
        };
        let mut darts = Vec::new();
        for &(u, v, mult) in edges {
            if u >= num_vertices {
                return Err(GraphError::VertexOutOfRange(u, num_vertices));
            }
            if v >= num_vertices {
                return Err(GraphError::VertexOutOfRange(v, num_vertices));
            }
            for _ in 0..mult {
                let i = darts.len();
                darts.push(Dart {
                    origin: u,
                    terminus: v,
                    pair: i + 1,
                });
                darts.push(Dart {
                    origin: v,
                    terminus: u,
                    pair: i,
                });
            }
        }
        Self::from_darts(labels, darts)
    }

    /// The simple complete graph on `{1..m}`, with `m(m−1)` darts.
    pub fn complete(m: usize) -> Graph {
        let labels: Vec<String> = (1..=m).map(|i| i.to_string()).collect();
        let mut edges = Vec::new();
        for u in 0..m {
            for v in u + 1..m {
                edges.push((u, v, 1));
            }
        }
        Graph::from_edges(m, Some(labels), &edges).expect("valid construction")
    }

    /// The cycle graph on `m ≥ 3` vertices.
    pub fn cycle(m: usize) -> Graph {
        assert!(m >= 3, "cycle graph needs at least 3 vertices");
        let edges: Vec<(usize, usize, usize)> = (0..m).map(|i| (i, (i + 1) % m, 1)).collect();
        Graph::from_edges(m, None, &edges).expect("valid construction")
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn dart_count(&self) -> usize {
        self.darts.len()
    }

    pub fn edge_count(&self) -> usize {
        self.darts.len() / 2
    }

    pub fn dart(&self, i: usize) -> &Dart {
        &self.darts[i]
    }

    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    pub fn darts_at(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels[v].as_deref()
    }

    /// Label if present, else the vertex index as a string.
    pub fn display_label(&self, v: usize) -> String {
        self.labels[v].clone().unwrap_or_else(|| v.to_string())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.vertex_count() {
            return Err(GraphError::Invalid("label count mismatch".into()));
        }
        self.labels = labels.into_iter().map(Some).collect();
        Ok(self)
    }

    pub fn find_vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.as_deref() == Some(label))
    }

    /// Number of darts from `u` to `v` (a loop at `v` counts both darts).
    pub fn dart_multiplicity(&self, u: usize, v: usize) -> usize {
        self.out[u]
            .iter()
            .filter(|&&d| self.darts[d].terminus == v)
            .count()
    }

    pub fn loop_count(&self) -> usize {
        self.darts.iter().filter(|d| d.origin == d.terminus).count() / 2
    }

    /// `A[u][v]` = number of darts `u → v`. Symmetric; row sums are degrees.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.vertex_count();
        let mut a = vec![vec![0i64; n]; n];
        for d in &self.darts {
            a[d.origin][d.terminus] += 1;
        }
        a
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg: Vec<usize> = (0..self.vertex_count()).map(|v| self.degree(v)).collect();
        deg.sort_unstable();
        deg
    }

    pub fn is_regular(&self) -> Option<usize> {
        let n = self.vertex_count();
        if n == 0 {
            return Some(0);
        }
        let d = self.degree(0);
        (1..n).all(|v| self.degree(v) == d).then_some(d)
    }

    /// True iff the graph has one connected component. The vertexless graph
    /// counts as connected by convention.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &d in &self.out[v] {
                let w = self.darts[d].terminus;
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    /// Removes one dart `u → v` and its pair (decrements multiplicity by one).
    pub fn delete_undirected_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let n = self.vertex_count();
        if u >= n {
            return Err(GraphError::VertexOutOfRange(u, n));
        }
        if v >= n {
            return Err(GraphError::VertexOutOfRange(v, n));
        }
        let d = self
            .out
            .get(u)
            .and_then(|ds| ds.iter().find(|&&d| self.darts[d].terminus == v))
            .copied()
            .ok_or(GraphError::NoSuchEdge(u, v))?;
        self.delete_dart_pairs(&[d])
    }

    /// Removes the listed darts together with their pairs, reindexing the rest.
    pub fn delete_dart_pairs(&self, doomed: &[usize]) -> Result<Graph, GraphError> {
        let mut dead = vec![false; self.darts.len()];
        for &d in doomed {
            dead[d] = true;
            dead[self.darts[d].pair] = true;
        }
        let mut remap = vec![usize::MAX; self.darts.len()];
        let mut kept = Vec::new();
        for (i, d) in self.darts.iter().enumerate() {
            if !dead[i] {
                remap[i] = kept.len();
                kept.push(*d);
            }
        }
        for d in &mut kept {
            d.pair = remap[d.pair];
        }
        Graph::from_darts(self.labels.clone(), kept)
    }

    /// Structural validation; returns human-readable violations (empty = ok).
    pub fn validate(&self) -> Vec<String> {
        let mut issues = Vec::new();
        for (i, d) in self.darts.iter().enumerate() {
            if d.pair == i {
                issues.push(format!("dart {} is its own pair", i));
                continue;
            }
            let p = &self.darts[d.pair];
            if p.pair != i {
                issues.push(format!("pair(pair({})) ≠ {}", i, i));
            }
            if p.origin != d.terminus || p.terminus != d.origin {
                issues.push(format!("dart {} pair does not reverse it", i));
            }
        }
        issues
    }

    /// GraphViz DOT output (undirected; one line per edge pair).
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for v in 0..self.vertex_count() {
            match &self.labels[v] {
                Some(l) => writeln!(s, "  {} [label=\"{}\"];", v, l).unwrap(),
                None => writeln!(s, "  {};", v).unwrap(),
            }
        }
        for (i, d) in self.darts.iter().enumerate() {
            if i < d.pair {
                writeln!(s, "  {} -- {};", d.origin, d.terminus).unwrap();
            }
        }
        s.push_str("}\n");
        s
    }

    /// Canonical undirected edge multiset `(min, max) → multiplicity`.
    pub fn edge_multiset(&self) -> BTreeMap<(usize, usize), usize> {
        let mut m = BTreeMap::new();
        for (i, d) in self.darts.iter().enumerate() {
            if i < d.pair {
                let key = (d.origin.min(d.terminus), d.origin.max(d.terminus));
                *m.entry(key).or_insert(0) += 1;
            }
        }
        m
    }

    pub fn to_json(&self) -> String {
        let vertices: Vec<JsonVertex> = (0..self.vertex_count())
            .map(|v| JsonVertex {
                id: v,
                label: self.labels[v].clone(),
            })
            .collect();
        let edges: Vec<JsonEdge> = self
            .edge_multiset()
            .into_iter()
            .map(|((u, v), multiplicity)| JsonEdge { u, v, multiplicity })
            .collect();
        serde_json::to_string_pretty(&JsonGraph { vertices, edges }).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Graph, GraphError> {
        let parsed: JsonGraph = serde_json::from_str(text)?;
        let n = parsed.vertices.len();
        let mut index_of_id = HashMap::new();
        let mut labels = Vec::with_capacity(n);
        for (i, v) in parsed.vertices.iter().enumerate() {
            if index_of_id.insert(v.id, i).is_some() {
                return Err(GraphError::Invalid(format!("duplicate vertex id {}", v.id)));
            }
            labels.push(v.label.clone());
        }
        let mut darts = Vec::new();
        for e in &parsed.edges {
            let u = *index_of_id.get(&e.u).ok_or_else(|| {
                GraphError::Invalid(format!("edge references missing vertex id {}", e.u))
            })?;
            let v = *index_of_id.get(&e.v).ok_or_else(|| {
                GraphError::Invalid(format!("edge references missing vertex id {}", e.v))
            })?;
            if e.multiplicity == 0 {
                return Err(GraphError::Invalid(format!(
                    "edge {}–{} has multiplicity 0",
                    e.u, e.v
                )));
            }
            for _ in 0..e.multiplicity {
                let i = darts.len();
                darts.push(Dart {
                    origin: u,
                    terminus: v,
                    pair: i + 1,
                });
                darts.push(Dart {
                    origin: v,
                    terminus: u,
                    pair: i,
                });
            }
        }
        Graph::from_darts(labels, darts)
    }
}

/// Equality up to dart order: same labels and same undirected edge multiset.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.edge_multiset() == other.edge_multiset()
    }
}
impl Eq for Graph {}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    vertices: Vec<JsonVertex>,
    edges: Vec<JsonEdge>,
}

#[derive(Serialize, Deserialize)]
struct JsonVertex {
    id: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct JsonEdge {
    u: usize,
    v: usize,
    #[serde(default = "one")]
    multiplicity: usize,
}

fn one() -> usize {
    1
}

pub const ISO_GUARD: usize = 200;

/// Searches for a vertex bijection preserving dart multiplicities, by iterated
/// neighborhood-multiset refinement plus backtracking on the refined partition.
/// The returned map is re-verified against both graphs before it is returned.
pub fn isomorphic(g1: &Graph, g2: &Graph) -> Result<Option<Vec<usize>>, GraphError> {
    if g1.vertex_count() > ISO_GUARD {
        return Err(GraphError::SizeGuard(g1.vertex_count(), ISO_GUARD));
    }
    if g2.vertex_count() > ISO_GUARD {
        return Err(GraphError::SizeGuard(g2.vertex_count(), ISO_GUARD));
    }
    if g1.vertex_count() != g2.vertex_count()
        || g1.dart_count() != g2.dart_count()
        || g1.degree_sequence() != g2.degree_sequence()
    {
        return Ok(None);
    }
    let n = g1.vertex_count();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    let c1: Vec<usize> = (0..n).map(|v| g1.degree(v)).collect();
    let c2: Vec<usize> = (0..n).map(|v| g2.degree(v)).collect();
    Ok(search(g1, g2, c1, c2))
}

/// One refinement round: color' = (color, sorted multiset of neighbor colors),
/// renumbered consistently across both graphs. Returns None on mismatch.
fn refine(
    g1: &Graph,
    g2: &Graph,
    mut c1: Vec<usize>,
    mut c2: Vec<usize>,
) -> Option<(Vec<usize>, Vec<usize>)> {
    loop {
        let sig = |g: &Graph, c: &[usize], v: usize| -> (usize, Vec<usize>) {
            let mut nb: Vec<usize> = g
                .darts_at(v)
                .iter()
                .map(|&d| c[g.dart(d).terminus])
                .collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let mut dict: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        let sigs1: Vec<_> = (0..c1.len()).map(|v| sig(g1, &c1, v)).collect();
        let sigs2: Vec<_> = (0..c2.len()).map(|v| sig(g2, &c2, v)).collect();
        for s in sigs1.iter().chain(sigs2.iter()) {
            let next = dict.len();
            dict.entry(s.clone()).or_insert(next);
        }
        let n1: Vec<usize> = sigs1.iter().map(|s| dict[s]).collect();
        let n2: Vec<usize> = sigs2.iter().map(|s| dict[s]).collect();
        let mut h1 = vec![0usize; dict.len()];
        let mut h2 = vec![0usize; dict.len()];
        for &c in &n1 {
            h1[c] += 1;
        }
        for &c in &n2 {
            h2[c] += 1;
        }
        if h1 != h2 {
            return None;
        }
        let stable = n1 == c1 && n2 == c2;
        c1 = n1;
        c2 = n2;
        if stable {
            return Some((c1, c2));
        }
    }
}

fn search(g1: &Graph, g2: &Graph, c1: Vec<usize>, c2: Vec<usize>) -> Option<Vec<usize>> {
    let (c1, c2) = refine(g1, g2, c1, c2)?;
    let n = c1.len();
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &c) in c1.iter().enumerate() {
        cells.entry(c).or_default().push(v);
    }
    let target = cells
        .iter()
        .filter(|(_, vs)| vs.len() > 1)
        .min_by_key(|(_, vs)| vs.len())
        .map(|(&c, _)| c);
    match target {
        None => {
            // Discrete partition: match vertices by color and verify.
            let mut by_color2 = BTreeMap::new();
            for (v, &c) in c2.iter().enumerate() {
                by_color2.insert(c, v);
            }
            let mut map = vec![0usize; n];
            for (v, &c) in c1.iter().enumerate() {
                map[v] = *by_color2.get(&c)?;
            }
            verify_isomorphism(g1, g2, &map).then_some(map)
        }
        Some(color) => {
            let u = cells[&color][0];
            let fresh = n + c1.iter().chain(c2.iter()).max().unwrap() + 1;
            let candidates: Vec<usize> = (0..n).filter(|&v| c2[v] == color).collect();
            for v in candidates {
                let mut d1 = c1.clone();
                let mut d2 = c2.clone();
                d1[u] = fresh;
                d2[v] = fresh;
                if let Some(map) = search(g1, g2, d1, d2) {
                    return Some(map);
                }
            }
            None
        }
    }
}

/// Checks `map` is a bijection preserving dart multiplicities in both directions.
pub fn verify_isomorphism(g1: &Graph, g2: &Graph, map: &[usize]) -> bool {
    let n = g1.vertex_count();
    if g2.vertex_count() != n || map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in map {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    if g1.dart_count() != g2.dart_count() {
        return false;
    }
    for u in 0..n {
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for &d in g1.darts_at(u) {
            *counts.entry(map[g1.dart(d).terminus]).or_insert(0) += 1;
        }
        for (w, c) in counts {
            if g2.dart_multiplicity(map[u], w) != c {
                return false;
            }
        }
        if g1.degree(u) != g2.degree(map[u]) {
            return false;
        }
    }
    true
}
