//! Simple undirected graphs, vertex labelings, red/blue edge colorings, and
//! generators for the graph families used throughout the crate.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored as `(i, j)` with `i < j`, sorted lexicographically; an
/// edge's position in that order is its edge id. Equality ignores names.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    ids: HashMap<(usize, usize), usize>,
    names: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges, and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpec(
                "a graph needs at least one vertex".into(),
            ));
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidSpec(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidSpec(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if !set.insert(ordered(u, v)) {
                return Err(Error::InvalidSpec(format!("duplicate edge ({u}, {v})")));
            }
        }
        Ok(Self::from_sorted(n, set.into_iter().collect()))
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        let mut ids = HashMap::with_capacity(edges.len());
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u].push(v);
            adj[v].push(u);
            ids.insert((u, v), id);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Self {
            n,
            edges,
            adj,
            ids,
            names: None,
        }
    }

    /// Builds a graph from an edge list that may repeat edges; duplicates are merged.
    fn from_edge_set(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let set: BTreeSet<_> = edges.into_iter().map(|(u, v)| ordered(u, v)).collect();
        Self::from_sorted(n, set.into_iter().collect())
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                got: names.len(),
            });
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.ids.get(&ordered(u, v)).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display name of a vertex: its stored name, or its index.
    pub fn name(&self, v: usize) -> String {
        match &self.names {
            Some(names) => names[v].clone(),
            None => v.to_string(),
        }
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Edge ids of the closed walk `vertices[0], ..., vertices[len-1], vertices[0]`,
    /// provided it is a simple cycle of this graph.
    pub fn cycle_edge_ids(&self, vertices: &[usize]) -> Result<Vec<usize>> {
        if vertices.len() < 3 {
            return Err(Error::NotACycle(format!(
                "{} vertices is too short",
                vertices.len()
            )));
        }
        let mut seen = BTreeSet::new();
        for &v in vertices {
            if v >= self.n {
                return Err(Error::NotACycle(format!("vertex {v} is out of range")));
            }
            if !seen.insert(v) {
                return Err(Error::NotACycle(format!("vertex {v} repeats")));
            }
        }
        (0..vertices.len())
            .map(|i| {
                let (u, v) = (vertices[i], vertices[(i + 1) % vertices.len()]);
                self.edge_id(u, v)
                    .ok_or_else(|| Error::NotACycle(format!("({u}, {v}) is not an edge")))
            })
            .collect()
    }

    /// Every simple cycle, each as a vertex sequence starting at its smallest
    /// vertex and listed once (one orientation). Exponential: small graphs only.
    pub fn simple_cycles(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        let mut on_path = vec![false; self.n];
        for start in 0..self.n {
            path.push(start);
            on_path[start] = true;
            self.extend_cycles(start, &mut path, &mut on_path, &mut out);
            on_path[start] = false;
            path.pop();
        }
        out
    }

    fn extend_cycles(
        &self,
        start: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        for &w in &self.adj[last] {
            if w == start && path.len() >= 3 && path[1] < last {
                out.push(path.clone());
            } else if w > start && !on_path[w] {
                path.push(w);
                on_path[w] = true;
                self.extend_cycles(start, path, on_path, out);
                on_path[w] = false;
                path.pop();
            }
        }
    }

    /// Subgraph induced on `vertices`, reindexed in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let index: HashMap<usize, usize> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((*index.get(&u)?, *index.get(&v)?)));
        Graph::from_edge_set(vertices.len(), edges)
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n,
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
            names: self.names.clone(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("graph serializes")
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let raw: GraphJson = serde_json::from_str(text)?;
        raw.try_into()
    }
}

/// Wire format: `{ "n": int, "edges": [[i,j],...], "names": [...]? }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(raw: GraphJson) -> Result<Self> {
        let g = Graph::new(raw.n, raw.edges.iter().map(|e| (e[0], e[1])))?;
        match raw.names {
            Some(names) => g.with_names(names),
            None => Ok(g),
        }
    }
}

/// Integer labels indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Labeling {
    pub labels: Vec<i64>,
}

impl Labeling {
    pub fn new(labels: Vec<i64>) -> Self {
        Self { labels }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn get(&self, v: usize) -> i64 {
        self.labels[v]
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.labels
    }

    /// `|L(u) - L(v)|`.
    pub fn difference(&self, u: usize, v: usize) -> i64 {
        (self.labels[u] - self.labels[v]).abs()
    }

    pub fn is_injective(&self) -> bool {
        let set: BTreeSet<_> = self.labels.iter().collect();
        set.len() == self.labels.len()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("labeling serializes")
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

/// A color for every edge of a graph, indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    colors: Vec<Color>,
}

/// Wire format: `{"red": [[i,j],...]}`; every other edge is blue.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringJson {
    pub red: Vec<[usize; 2]>,
}

impl EdgeColoring {
    pub fn from_colors(colors: Vec<Color>) -> Self {
        Self { colors }
    }

    pub fn all_blue(g: &Graph) -> Self {
        Self {
            colors: vec![Color::Blue; g.edge_count()],
        }
    }

    /// Colors the listed edges red and the rest blue.
    pub fn from_red_edges(g: &Graph, red: &[(usize, usize)]) -> Result<Self> {
        let mut c = Self::all_blue(g);
        for &(u, v) in red {
            let id = g
                .edge_id(u, v)
                .ok_or_else(|| Error::InvalidColoring(format!("({u}, {v}) is not an edge")))?;
            c.colors[id] = Color::Red;
        }
        Ok(c)
    }

    /// Bit `i` of `mask` set means edge `i` is red.
    pub fn from_red_mask(g: &Graph, mask: u64) -> Self {
        let colors = (0..g.edge_count())
            .map(|i| {
                if mask >> i & 1 == 1 {
                    Color::Red
                } else {
                    Color::Blue
                }
            })
            .collect();
        Self { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, edge_id: usize) -> Color {
        self.colors[edge_id]
    }

    pub fn set(&mut self, edge_id: usize, color: Color) {
        self.colors[edge_id] = color;
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn is_red(&self, edge_id: usize) -> bool {
        self.colors[edge_id] == Color::Red
    }

    /// Fails unless the coloring has exactly one entry per edge of `g`.
    pub fn check_total(&self, g: &Graph) -> Result<()> {
        if self.colors.len() == g.edge_count() {
            Ok(())
        } else {
            Err(Error::SizeMismatch {
                expected: g.edge_count(),
                got: self.colors.len(),
            })
        }
    }

    pub fn red_edges(&self, g: &Graph) -> Vec<(usize, usize)> {
        g.edges()
            .iter()
            .zip(&self.colors)
            .filter(|(_, &c)| c == Color::Red)
            .map(|(&e, _)| e)
            .collect()
    }

    pub fn red_count(&self) -> usize {
        self.colors.iter().filter(|&&c| c == Color::Red).count()
    }

    pub fn blue_count(&self) -> usize {
        self.colors.len() - self.red_count()
    }

    pub fn red_degrees(&self, g: &Graph) -> Vec<usize> {
        let mut deg = vec![0; g.vertex_count()];
        for (u, v) in self.red_edges(g) {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn to_json(&self, g: &Graph) -> ColoringJson {
        ColoringJson {
            red: self.red_edges(g).into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_json_string(&self, g: &Graph) -> String {
        serde_json::to_string(&self.to_json(g)).expect("coloring serializes")
    }

    pub fn from_json_str(g: &Graph, text: &str) -> Result<Self> {
        let raw: ColoringJson = serde_json::from_str(text)?;
        let red: Vec<_> = raw.red.iter().map(|e| (e[0], e[1])).collect();
        Self::from_red_edges(g, &red)
    }
}

/// Graph families with parameters. See [`generate`] for vertex orderings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilySpec {
    /// Path with `n` edges and `n + 1` vertices.
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
    /// `n` triangles sharing vertex 0.
    DutchWindmill(usize),
    /// `k` five-page triangular books whose spines form a path.
    BookStack(usize),
    PaperMill(usize, usize),
    /// Circulant on `n` vertices with connection set `S`.
    Circulant(usize, Vec<usize>),
    /// `Circulant(n, {1, k})`.
    Circ1k(usize, usize),
    /// Underlying graph of the colored fan (`CF` for 0, `CF_k` otherwise).
    ColoredFan(usize),
}

fn parse_list(params: &str) -> Result<Vec<usize>> {
    params
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad family parameter {s:?}")))
        })
        .collect()
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Mini-language `name:params`, e.g. `circ:12,5`, `windmill:5`,
    /// `papermill:2,3`, `circulant:10;1,3`, `multipartite:3,3,3`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected name:params, got {s:?}")))?;
        let name = name.trim().to_ascii_lowercase();
        if name == "circulant" {
            let (n, set) = params
                .split_once(';')
                .ok_or_else(|| Error::Parse("circulant expects n;s1,s2,...".into()))?;
            let n = parse_list(n)?;
            if n.len() != 1 {
                return Err(Error::Parse("circulant expects a single n".into()));
            }
            return Ok(FamilySpec::Circulant(n[0], parse_list(set)?));
        }
        let p = parse_list(params)?;
        let arity = |want: usize| -> Result<()> {
            if p.len() == want {
                Ok(())
            } else {
                Err(Error::Parse(format!(
                    "family {name} takes {want} parameter(s), got {}",
                    p.len()
                )))
            }
        };
        Ok(match name.as_str() {
            "path" => {
                arity(1)?;
                FamilySpec::Path(p[0])
            }
            "cycle" => {
                arity(1)?;
                FamilySpec::Cycle(p[0])
            }
            "complete" | "k" => {
                arity(1)?;
                FamilySpec::Complete(p[0])
            }
            "bipartite" | "kbip" => {
                arity(2)?;
                FamilySpec::CompleteBipartite(p[0], p[1])
            }
            "multipartite" => FamilySpec::CompleteMultipartite(p),
            "windmill" => {
                arity(1)?;
                FamilySpec::DutchWindmill(p[0])
            }
            "bookstack" | "stack" => {
                arity(1)?;
                FamilySpec::BookStack(p[0])
            }
            "papermill" => {
                arity(2)?;
                FamilySpec::PaperMill(p[0], p[1])
            }
            "circ" => {
                arity(2)?;
                FamilySpec::Circ1k(p[0], p[1])
            }
            "fan" => {
                arity(1)?;
                FamilySpec::ColoredFan(p[0])
            }
            other => return Err(Error::Parse(format!("unknown family {other:?}"))),
        })
    }
}

fn join(p: &[usize]) -> String {
    p.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite(r, s) => write!(f, "bipartite:{r},{s}"),
            FamilySpec::CompleteMultipartite(p) => write!(f, "multipartite:{}", join(p)),
            FamilySpec::DutchWindmill(n) => write!(f, "windmill:{n}"),
            FamilySpec::BookStack(k) => write!(f, "bookstack:{k}"),
            FamilySpec::PaperMill(n, k) => write!(f, "papermill:{n},{k}"),
            FamilySpec::Circulant(n, s) => write!(f, "circulant:{n};{}", join(s)),
            FamilySpec::Circ1k(n, k) => write!(f, "circ:{n},{k}"),
            FamilySpec::ColoredFan(k) => write!(f, "fan:{k}"),
        }
    }
}

fn invalid(what: String) -> Error {
    Error::InvalidSpec(what)
}

/// Checks `3 <= n` and `1 <= k <= n/2`.
pub fn check_circ1k(n: usize, k: usize) -> Result<()> {
    if n < 3 || k == 0 || 2 * k > n {
        return Err(invalid(format!(
            "Circ({n},{k}) needs n >= 3 and 1 <= k <= n/2"
        )));
    }
    Ok(())
}

/// Edge sets of the generated families.
///
/// Vertex orderings:
/// - paths, cycles, circulants: `v_1..v_n` are indices `0..n-1`;
/// - complete multipartite: parts in order, consecutive indices;
/// - windmill: center 0, triangle `i` on `2i+1, 2i+2`;
/// - book stack: spine `u_0..u_k` first, then five pages per book, book by book;
/// - paper mill: center 0, then for each blade a book stack block
///   (spine then pages), the spine ends adjacent to the center;
/// - colored fan: see [`colored_fan`].
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    match *spec {
        FamilySpec::Path(n) => {
            if n == 0 {
                return Err(invalid("path needs at least one edge".into()));
            }
            Ok(Graph::from_edge_set(n + 1, (0..n).map(|i| (i, i + 1))))
        }
        FamilySpec::Cycle(n) => {
            if n < 3 {
                return Err(invalid(format!("cycle needs n >= 3, got {n}")));
            }
            Ok(Graph::from_edge_set(n, (0..n).map(|i| (i, (i + 1) % n))))
        }
        FamilySpec::Complete(n) => {
            if n == 0 {
                return Err(invalid("complete graph needs n >= 1".into()));
            }
            Ok(Graph::from_edge_set(
                n,
                (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))),
            ))
        }
        FamilySpec::CompleteBipartite(r, s) => {
            generate(&FamilySpec::CompleteMultipartite(vec![r, s]))
        }
        FamilySpec::CompleteMultipartite(ref parts) => {
            if parts.is_empty() || parts.contains(&0) {
                return Err(invalid("multipartite parts must be nonempty".into()));
            }
            let mut part_of = Vec::new();
            for (p, &size) in parts.iter().enumerate() {
                part_of.extend(std::iter::repeat_n(p, size));
            }
            let n = part_of.len();
            let edges = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| part_of[i] != part_of[j]);
            Ok(Graph::from_edge_set(n, edges.collect::<Vec<_>>()))
        }
        FamilySpec::DutchWindmill(n) => {
            if n == 0 {
                return Err(invalid("windmill needs n >= 1".into()));
            }
            let edges = (0..n).flat_map(|i| {
                let (a, b) = (2 * i + 1, 2 * i + 2);
                [(0, a), (0, b), (a, b)]
            });
            Ok(Graph::from_edge_set(2 * n + 1, edges))
        }
        FamilySpec::BookStack(k) => {
            if k == 0 {
                return Err(invalid("book stack needs k >= 1".into()));
            }
            let mut edges = Vec::new();
            book_stack_edges(0, k, &mut edges);
            Ok(Graph::from_edge_set(6 * k + 1, edges))
        }
        FamilySpec::PaperMill(n, k) => {
            if n == 0 || k == 0 {
                return Err(invalid("paper mill needs n, k >= 1".into()));
            }
            let block = 6 * k + 1;
            let mut edges = Vec::new();
            for i in 0..n {
                let base = 1 + i * block;
                book_stack_edges(base, k, &mut edges);
                edges.push((0, base));
                edges.push((0, base + k));
            }
            Ok(Graph::from_edge_set(1 + n * block, edges))
        }
        FamilySpec::Circulant(n, ref set) => {
            if n < 3 {
                return Err(invalid(format!("circulant needs n >= 3, got {n}")));
            }
            let mut norm = BTreeSet::new();
            for &s in set {
                let s = s % n;
                if s == 0 {
                    return Err(invalid("circulant connection set contains 0 mod n".into()));
                }
                norm.insert(s.min(n - s));
            }
            let edges = norm
                .iter()
                .flat_map(|&s| (0..n).map(move |i| (i, (i + s) % n)))
                .collect::<Vec<_>>();
            Ok(Graph::from_edge_set(n, edges))
        }
        FamilySpec::Circ1k(n, k) => {
            check_circ1k(n, k)?;
            generate(&FamilySpec::Circulant(n, vec![1, k]))
        }
        FamilySpec::ColoredFan(k) => Ok(colored_fan(k).0),
    }
}

/// Spine `base..=base+k`, then book `j`'s pages at `base+k+1+5j ..`.
fn book_stack_edges(base: usize, k: usize, edges: &mut Vec<(usize, usize)>) {
    for j in 0..k {
        let (s, t) = (base + j, base + j + 1);
        edges.push((s, t));
        for page in 0..5 {
            let p = base + k + 1 + 5 * j + page;
            edges.push((s, p));
            edges.push((t, p));
        }
    }
}

/// Vertex indices of the spine `u_0..u_k` of blade `i` of `PaperMill(n, k)`.
pub fn paper_mill_spine(k: usize, blade: usize) -> Vec<usize> {
    let base = 1 + blade * (6 * k + 1);
    (base..=base + k).collect()
}

/// Page vertices of book `j` (spine edge `u_j u_{j+1}`) of blade `i`.
pub fn paper_mill_pages(k: usize, blade: usize, book: usize) -> Vec<usize> {
    let base = 1 + blade * (6 * k + 1) + k + 1 + 5 * book;
    (base..base + 5).collect()
}

/// Which cycle of the generating set of `Circ(n, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CycleKind {
    /// `g_{i+1}`: the cycle through inside edge `(i, i+k mod n)`, 0-based `i`.
    Inside(usize),
    Outside,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratingCycle {
    pub kind: CycleKind,
    pub vertices: Vec<usize>,
}

/// Generating cycles of `Circ(n, k)`: the `(k+1)`-cycles with exactly one
/// inside edge, then the outside cycle.
///
/// For `k = 1` there are no inside edges. For `k = n/2` each inside edge is
/// listed once, from its lower endpoint.
pub fn generating_cycles(n: usize, k: usize) -> Result<Vec<GeneratingCycle>> {
    check_circ1k(n, k)?;
    let inside = match k {
        1 => 0,
        _ if 2 * k == n => n / 2,
        _ => n,
    };
    let mut out: Vec<GeneratingCycle> = (0..inside)
        .map(|i| GeneratingCycle {
            kind: CycleKind::Inside(i),
            vertices: (0..=k).map(|t| (i + t) % n).collect(),
        })
        .collect();
    out.push(GeneratingCycle {
        kind: CycleKind::Outside,
        vertices: (0..n).collect(),
    });
    Ok(out)
}

/// The colored fan. `k = 0` gives `CF` on `a, b, c, d` (indices 0..4) with
/// red `ab, bc` and blue `ad, bd, cd`. `k >= 1` gives `CF_k` with
/// `a_1..a_{k+3}` at indices `0..k+3` and `b_1..b_k` after them.
pub fn colored_fan(k: usize) -> (Graph, EdgeColoring) {
    if k == 0 {
        let g = Graph::from_edge_set(4, [(0, 1), (1, 2), (0, 3), (1, 3), (2, 3)])
            .with_names(["a", "b", "c", "d"].map(String::from).to_vec())
            .expect("four names");
        let c = EdgeColoring::from_red_edges(&g, &[(0, 1), (1, 2)]).expect("edges exist");
        return (g, c);
    }
    let a = |i: usize| i - 1; // a_i, 1-based
    let b = |i: usize| k + 3 + i - 1; // b_i, 1-based
    let mut red = Vec::new();
    let mut blue = Vec::new();
    for i in 1..k + 3 {
        red.push((a(i), a(i + 1)));
    }
    for i in 1..k {
        red.push((b(i), b(i + 1)));
    }
    // zigzag a_2, b_1, a_3, b_2, ..., a_{k+1}, b_k, a_{k+2}
    for i in 1..=k {
        blue.push((a(i + 1), b(i)));
        blue.push((b(i), a(i + 2)));
    }
    blue.push((a(1), b(1)));
    blue.push((a(k + 3), b(k)));
    let names = (1..=k + 3)
        .map(|i| format!("a_{i}"))
        .chain((1..=k).map(|i| format!("b_{i}")))
        .collect();
    let g = Graph::from_edge_set(2 * k + 3, red.iter().chain(&blue).copied())
        .with_names(names)
        .expect("names match");
    let c = EdgeColoring::from_red_edges(&g, &red).expect("edges exist");
    (g, c)
}
