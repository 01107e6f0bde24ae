//! Simple undirected labeled graphs and the structural machinery built on them:
//! graph6 and edge-list I/O, cyclomatic number, simple-cycle enumeration,
//! pendent vertices, base extraction and the tricyclic classification.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("base is empty: every component of the input is a tree")]
    EmptyBase,
    #[error("graph is not tricyclic (connected with m = n + 2 required)")]
    NotTricyclic,
    #[error("tricyclic graph has {0} simple cycles, expected one of 3, 4, 6, 7")]
    UnexpectedCycleCount(usize),
    #[error("graph too large for this operation: n = {n}, limit {limit}")]
    TooLarge { n: usize, limit: usize },
}

/// Number of simple cycles of a tricyclic graph. Every connected graph with
/// m = n + 2 has exactly 3, 4, 6 or 7 simple cycles, so these four values
/// classify the tricyclic graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TricyclicClass {
    C3,
    C4,
    C6,
    C7,
}

impl TricyclicClass {
    pub const ALL: [TricyclicClass; 4] = [
        TricyclicClass::C3,
        TricyclicClass::C4,
        TricyclicClass::C6,
        TricyclicClass::C7,
    ];

    pub fn cycle_count(self) -> usize {
        match self {
            TricyclicClass::C3 => 3,
            TricyclicClass::C4 => 4,
            TricyclicClass::C6 => 6,
            TricyclicClass::C7 => 7,
        }
    }
}

impl TryFrom<usize> for TricyclicClass {
    type Error = GraphError;

    fn try_from(j: usize) -> Result<Self, GraphError> {
        match j {
            3 => Ok(TricyclicClass::C3),
            4 => Ok(TricyclicClass::C4),
            6 => Ok(TricyclicClass::C6),
            7 => Ok(TricyclicClass::C7),
            _ => Err(GraphError::UnexpectedCycleCount(j)),
        }
    }
}

impl fmt::Display for TricyclicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_count())
    }
}

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// No self-loops, no parallel edges. Edges are kept sorted with u < v, and
/// neighbor sets are derived at construction, so two structurally equal
/// graphs compare equal as values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<BTreeSet<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let (u, v) = (a.min(b), a.max(b));
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if !seen.insert((u, v)) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
        }
        let edges: Vec<(usize, usize)> = seen.into_iter().collect();
        let mut adj = vec![BTreeSet::new(); n];
        for &(u, v) in &edges {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn empty(n: usize) -> Graph {
        Graph::new(n, []).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    /// Star with center 0 and n-1 leaves.
    pub fn star(n: usize) -> Graph {
        assert!(n >= 1);
        Graph::new(n, (1..n).map(|i| (0, i))).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].contains(&v)
    }

    /// New graph with the given extra edges added.
    pub fn with_edges_added(
        &self,
        extra: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        Graph::new(self.n, self.edges.iter().copied().chain(extra))
    }

    /// Relabeled copy: vertex v becomes `perm[v]`. `perm` must be a permutation
    /// of 0..n-1.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        debug_assert!({
            let mut seen = vec![false; self.n];
            perm.iter().all(|&p| p < self.n && !std::mem::replace(&mut seen[p], true))
        });
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v]))).unwrap()
    }

    /// Induced subgraph on `keep` (in the given order), together with the map
    /// from new labels back to the original ones.
    pub fn induced(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut back = vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            back[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| back[u] != usize::MAX && back[v] != usize::MAX)
            .map(|&(u, v)| (back[u], back[v]));
        (Graph::new(keep.len(), edges).unwrap(), keep.to_vec())
    }

    /// Vertex sets of the connected components.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Cyclomatic number r(G) = m - n + c, the dimension of the cycle space.
    pub fn cyclomatic_number(&self) -> usize {
        self.m() + self.components().len() - self.n
    }

    /// A graph is tricyclic when it is connected with m = n + 2.
    pub fn is_tricyclic(&self) -> bool {
        self.is_connected() && self.m() == self.n + 2
    }

    /// All vertices of degree exactly 1.
    pub fn pendent_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// The base: the maximal subgraph without pendent vertices, obtained by
    /// deleting degree-1 vertices until none remain. Fails when nothing with
    /// an edge survives, i.e. when every component is a tree.
    pub fn base(&self) -> Result<BaseResult, GraphError> {
        let mut alive = vec![true; self.n];
        let mut deg: Vec<usize> = self.degrees();
        loop {
            let peel: Vec<usize> = (0..self.n).filter(|&v| alive[v] && deg[v] == 1).collect();
            if peel.is_empty() {
                break;
            }
            for &v in &peel {
                alive[v] = false;
                for &w in &self.adj[v] {
                    if alive[w] {
                        deg[w] -= 1;
                    }
                }
                deg[v] = 0;
            }
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| alive[v]).collect();
        let (graph, vertex_map) = self.induced(&keep);
        if graph.m() == 0 {
            return Err(GraphError::EmptyBase);
        }
        Ok(BaseResult { graph, vertex_map })
    }

    /// Every simple cycle (length >= 3), each reported once as a vertex
    /// sequence starting from its smallest vertex.
    ///
    /// Backtracking over paths anchored at the smallest cycle vertex; a cycle
    /// is closed only when the second vertex is smaller than the last, so each
    /// undirected cycle appears in exactly one orientation.
    pub fn simple_cycles(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        let mut on_path = vec![false; self.n];
        for anchor in 0..self.n {
            path.push(anchor);
            on_path[anchor] = true;
            self.extend_cycle(anchor, anchor, &mut path, &mut on_path, &mut out);
            on_path[anchor] = false;
            path.pop();
        }
        out
    }

    fn extend_cycle(
        &self,
        anchor: usize,
        v: usize,
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        for &w in &self.adj[v] {
            if w == anchor {
                if path.len() >= 3 && path[1] < *path.last().unwrap() {
                    out.push(path.clone());
                }
            } else if w > anchor && !on_path[w] {
                path.push(w);
                on_path[w] = true;
                self.extend_cycle(anchor, w, path, on_path, out);
                on_path[w] = false;
                path.pop();
            }
        }
    }

    pub fn count_simple_cycles(&self) -> usize {
        self.simple_cycles().len()
    }

    /// Classification of a tricyclic graph by the number of simple cycles of
    /// its base (equivalently, of the graph itself).
    pub fn tricyclic_class(&self) -> Result<TricyclicClass, GraphError> {
        if !self.is_tricyclic() {
            return Err(GraphError::NotTricyclic);
        }
        let base = self.base()?;
        TricyclicClass::try_from(base.graph.count_simple_cycles())
    }

    // ----- graph6 ------------------------------------------------------

    /// Decode a graph6 string (short form, n <= 62).
    pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
        let mut s = text.trim_end_matches(['\r', '\n']);
        if let Some(rest) = s.strip_prefix(">>graph6<<") {
            s = rest;
        }
        let bytes = s.as_bytes();
        let head = *bytes.first().ok_or(GraphError::Graph6 {
            offset: 0,
            reason: "empty input".into(),
        })?;
        if head == 126 {
            return Err(GraphError::Graph6 {
                offset: 0,
                reason: "long-form graph6 (n > 62) is not supported".into(),
            });
        }
        if !(63..=125).contains(&head) {
            return Err(GraphError::Graph6 {
                offset: 0,
                reason: format!("invalid order byte 0x{head:02x}"),
            });
        }
        let n = (head - 63) as usize;
        let nbits = n * n.saturating_sub(1) / 2;
        let nbytes = nbits.div_ceil(6);
        if bytes.len() != 1 + nbytes {
            return Err(GraphError::Graph6 {
                offset: bytes.len().min(1 + nbytes),
                reason: format!(
                    "expected {} data bytes for n = {}, found {}",
                    nbytes,
                    n,
                    bytes.len() - 1
                ),
            });
        }
        let mut values = Vec::with_capacity(nbytes);
        for (i, &b) in bytes[1..].iter().enumerate() {
            if !(63..=126).contains(&b) {
                return Err(GraphError::Graph6 {
                    offset: 1 + i,
                    reason: format!("invalid data byte 0x{b:02x}"),
                });
            }
            values.push(b - 63);
        }
        let bit = |k: usize| -> bool { values[k / 6] >> (5 - k % 6) & 1 == 1 };
        // Upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
        let mut edges = Vec::new();
        let mut k = 0;
        for col in 1..n {
            for row in 0..col {
                if bit(k) {
                    edges.push((row, col));
                }
                k += 1;
            }
        }
        for pad in nbits..nbytes * 6 {
            if bit(pad) {
                return Err(GraphError::Graph6 {
                    offset: 1 + pad / 6,
                    reason: "nonzero padding bits".into(),
                });
            }
        }
        Graph::new(n, edges)
    }

    /// Encode as graph6 (short form); fails for n > 62.
    pub fn to_graph6(&self) -> Result<String, GraphError> {
        if self.n > 62 {
            return Err(GraphError::TooLarge { n: self.n, limit: 62 });
        }
        let nbits = self.n * self.n.saturating_sub(1) / 2;
        let mut values = vec![0u8; nbits.div_ceil(6)];
        let mut k = 0;
        for col in 1..self.n {
            for row in 0..col {
                if self.has_edge(row, col) {
                    values[k / 6] |= 1 << (5 - k % 6);
                }
                k += 1;
            }
        }
        let mut out = String::with_capacity(1 + values.len());
        out.push((self.n as u8 + 63) as char);
        out.extend(values.iter().map(|&v| (v + 63) as char));
        Ok(out)
    }

    // ----- edge-list text format ----------------------------------------

    /// Parse the plain edge-list format: a first line "n m" followed by
    /// m lines "u v" with 0 <= u < v < n.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (line0, header) = lines.next().ok_or(GraphError::EdgeList {
            line: 1,
            reason: "missing header line \"n m\"".into(),
        })?;
        let mut it = header.split_whitespace();
        let parse_num = |tok: Option<&str>, line: usize| -> Result<usize, GraphError> {
            tok.ok_or(GraphError::EdgeList {
                line,
                reason: "expected two integers".into(),
            })?
            .parse()
            .map_err(|_| GraphError::EdgeList {
                line,
                reason: "expected two integers".into(),
            })
        };
        let n = parse_num(it.next(), line0 + 1)?;
        let m = parse_num(it.next(), line0 + 1)?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (li, l) = lines.next().ok_or(GraphError::EdgeList {
                line: line0 + 1,
                reason: format!("expected {m} edge lines"),
            })?;
            let mut it = l.split_whitespace();
            let u = parse_num(it.next(), li + 1)?;
            let v = parse_num(it.next(), li + 1)?;
            if u >= v {
                return Err(GraphError::EdgeList {
                    line: li + 1,
                    reason: format!("edge must satisfy u < v, got {u} {v}"),
                });
            }
            edges.push((u, v));
        }
        if let Some((li, _)) = lines.next() {
            return Err(GraphError::EdgeList {
                line: li + 1,
                reason: "trailing content after the declared edges".into(),
            });
        }
        Graph::new(n, edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Base of a graph plus the map from base labels back to the original ones.
#[derive(Debug, Clone)]
pub struct BaseResult {
    pub graph: Graph,
    /// `vertex_map[i]` is the original label of base vertex i.
    pub vertex_map: Vec<usize>,
}
