//! Labeled graphs, spanning subgraphs with partition types, and canonical
//! component tableaux.

use thiserror::Error;

use crate::partition::Partition;
use crate::tableau::Tableau;

/// A simple graph on vertices 1..=n with edges stored as ordered pairs
/// (u, v), u < v. The position of an edge in `edges` is its global index;
/// differential signs depend on this ordering, so it is kept explicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: u32,
    edges: Vec<(u32, u32)>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({0}, {1}) is out of range or not u < v")]
    BadEdge(u32, u32),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(u32, u32),
    #[error("star graph needs at least 2 vertices, got {0}")]
    StarTooSmall(u32),
    #[error("cannot parse graph: {0}")]
    Parse(String),
}

impl Graph {
    /// Builds a graph with edges sorted lexicographically.
    pub fn new(n: u32, mut edges: Vec<(u32, u32)>) -> Result<Self, GraphError> {
        edges.sort_unstable();
        Self::with_edge_order(n, edges)
    }

    /// Builds a graph keeping the given edge order. Used when the effect of
    /// the edge ordering on differential signs is itself under test.
    pub fn with_edge_order(n: u32, edges: Vec<(u32, u32)>) -> Result<Self, GraphError> {
        for &(u, v) in &edges {
            if u == 0 || v == 0 || u >= v || v > n {
                return Err(GraphError::BadEdge(u, v));
            }
        }
        let mut sorted = edges.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Graph { n, edges })
    }

    /// The star on n >= 2 vertices: vertex 1 adjacent to every other vertex.
    pub fn star(n: u32) -> Result<Self, GraphError> {
        if n < 2 {
            return Err(GraphError::StarTooSmall(n));
        }
        Graph::new(n, (2..=n).map(|v| (1, v)).collect())
    }

    /// Plain-text format: first line `<n> <edge count>`, then one `u v` pair
    /// per line with `1 <= u < v <= n`; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut header: Option<(u32, usize)> = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            if header.is_none() {
                if toks.len() != 2 {
                    return Err(GraphError::Parse(format!(
                        "line {}: expected `<n> <edge count>`, got `{line}`",
                        lineno + 1
                    )));
                }
                let n = toks[0].parse().map_err(|_| {
                    GraphError::Parse(format!("line {}: bad vertex count", lineno + 1))
                })?;
                let count = toks[1].parse().map_err(|_| {
                    GraphError::Parse(format!("line {}: bad edge count", lineno + 1))
                })?;
                header = Some((n, count));
            } else {
                if toks.len() != 2 {
                    return Err(GraphError::Parse(format!(
                        "line {}: expected `u v`, got `{line}`",
                        lineno + 1
                    )));
                }
                let u = toks[0].parse().map_err(|_| {
                    GraphError::Parse(format!("line {}: bad endpoint", lineno + 1))
                })?;
                let v = toks[1].parse().map_err(|_| {
                    GraphError::Parse(format!("line {}: bad endpoint", lineno + 1))
                })?;
                edges.push((u, v));
            }
        }
        let (n, count) =
            header.ok_or_else(|| GraphError::Parse("missing `<n> <edge count>` line".into()))?;
        if edges.len() != count {
            return Err(GraphError::Parse(format!(
                "declared {count} edges but found {}",
                edges.len()
            )));
        }
        Graph::new(n, edges)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The same graph with the edge list reversed.
    pub fn reversed_edge_order(&self) -> Graph {
        let mut edges = self.edges.clone();
        edges.reverse();
        Graph { n: self.n, edges }
    }

    /// Applies a vertex relabeling; `perm[v - 1]` is the new label of `v`.
    pub fn relabel(&self, perm: &[u32]) -> Graph {
        assert_eq!(perm.len(), self.n as usize);
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u as usize - 1], perm[v as usize - 1]);
                (a.min(b), a.max(b))
            })
            .collect();
        Graph::new(self.n, edges).expect("relabeling preserves validity")
    }

    /// The spanning subgraph keeping the edges at the given (sorted) indices.
    pub fn spanning_subgraph(&self, edge_indices: Vec<usize>) -> SpanningSubgraph {
        debug_assert!(edge_indices.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edge_indices.iter().all(|&i| i < self.edges.len()));
        let edges: Vec<(u32, u32)> = edge_indices.iter().map(|&i| self.edges[i]).collect();
        let components = components_of(self.n, &edges);
        SpanningSubgraph { n: self.n, edge_indices, edges, components }
    }

    /// All spanning subgraphs with exactly i edges, ordered by the
    /// lexicographic order of their index sets in the global edge order.
    pub fn spanning_subgraphs(&self, i: usize) -> Vec<SpanningSubgraph> {
        assert!(i <= self.edges.len());
        combinations(self.edges.len(), i)
            .into_iter()
            .map(|idx| self.spanning_subgraph(idx))
            .collect()
    }
}

/// All i-element subsets of 0..m in lexicographic order.
pub fn combinations(m: usize, i: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(i);
    fn rec(m: usize, i: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == i {
            out.push(cur.clone());
            return;
        }
        let need = i - cur.len();
        for v in start..=(m - need) {
            cur.push(v);
            rec(m, i, v + 1, cur, out);
            cur.pop();
        }
    }
    if i <= m {
        rec(m, i, 0, &mut cur, &mut out);
    }
    out
}

/// A spanning subgraph: the full vertex set plus a subset of the parent's
/// edges. Connected components are cached in the canonical order used to
/// build the component tableau: decreasing size, then increasing minimum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningSubgraph {
    n: u32,
    edge_indices: Vec<usize>,
    edges: Vec<(u32, u32)>,
    components: Vec<Vec<u32>>,
}

impl SpanningSubgraph {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Indices into the parent's edge list, ascending.
    pub fn edge_indices(&self) -> &[usize] {
        &self.edge_indices
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Connected components, each sorted ascending, ordered by decreasing
    /// size then increasing minimum.
    pub fn components(&self) -> &[Vec<u32>] {
        &self.components
    }

    /// Component sizes in decreasing order.
    pub fn partition_type(&self) -> Partition {
        Partition::new(self.components.iter().map(|c| c.len() as u32).collect())
            .expect("component sizes form a partition")
    }

    /// Row i = the i-th component under the canonical component order.
    pub fn canonical_tableau(&self) -> Tableau {
        Tableau::new(self.partition_type(), self.components.clone())
            .expect("components match their own sizes")
    }
}

fn components_of(n: u32, edges: &[(u32, u32)]) -> Vec<Vec<u32>> {
    let mut parent: Vec<usize> = (0..n as usize).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for &(u, v) in edges {
        let ru = find(&mut parent, u as usize - 1);
        let rv = find(&mut parent, v as usize - 1);
        if ru != rv {
            parent[ru] = rv;
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<u32>> = Default::default();
    for v in 0..n as usize {
        let root = find(&mut parent, v);
        groups.entry(root).or_default().push(v as u32 + 1);
    }
    let mut comps: Vec<Vec<u32>> = groups.into_values().collect();
    comps.sort_by_key(|c| (std::cmp::Reverse(c.len()), c[0]));
    comps
}
