//! Red/blue edge colorings and the 2-odd characterization.
//!
//! A coloring is 2-odd when red degrees are at most 2, the red subgraph is a
//! forest, and every cycle carries an even number of blue edges. The last two
//! conditions together say that sides can be assigned so that red edges stay
//! on one side and blue edges cross, which is what the parity union-find
//! tracks.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{
    check_circ1k, generate, generating_cycles, Color, EdgeColoring, FamilySpec, GeneratingCycle,
    Graph, Labeling,
};
use crate::labeling::{label_cycle, CycleMethod};

/// Union-find over vertices where every element carries its parity relative
/// to its root. Union by size and no path compression, so every union can be
/// undone in LIFO order.
#[derive(Debug, Clone)]
pub(crate) struct ParityDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    parity: Vec<u8>,
    history: Vec<(usize, usize)>,
}

impl ParityDsu {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
            parity: vec![0; n],
            history: Vec::new(),
        }
    }

    pub(crate) fn find(&self, mut x: usize) -> (usize, u8) {
        let mut p = 0;
        while self.parent[x] != x {
            p ^= self.parity[x];
            x = self.parent[x];
        }
        (x, p)
    }

    /// Records `side(a) xor side(b) == d`. `Err` on contradiction, `Ok(false)`
    /// when already implied.
    pub(crate) fn union(&mut self, a: usize, b: usize, d: u8) -> std::result::Result<bool, ()> {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return if pa ^ pb == d { Ok(false) } else { Err(()) };
        }
        let (child, root) = if self.size[ra] < self.size[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[child] = root;
        self.parity[child] = pa ^ pb ^ d;
        self.size[root] += self.size[child];
        self.history.push((child, root));
        Ok(true)
    }

    pub(crate) fn checkpoint(&self) -> usize {
        self.history.len()
    }

    pub(crate) fn rollback(&mut self, to: usize) {
        while self.history.len() > to {
            let (child, root) = self.history.pop().unwrap();
            self.size[root] -= self.size[child];
            self.parent[child] = child;
            self.parity[child] = 0;
        }
    }
}

/// Side of the bipartition of the red-contracted graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    RedDegreeExceeded(usize),
    /// Closed vertex sequence whose edges are all red.
    AllRedCycle(Vec<usize>),
    /// Closed vertex sequence with an odd number of blue edges.
    OddBlueCycle(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub satisfied: bool,
    pub violation: Option<Violation>,
    pub bipartition: Option<Vec<Side>>,
}

impl ConditionReport {
    fn violated(v: Violation) -> Self {
        Self {
            satisfied: false,
            violation: Some(v),
            bipartition: None,
        }
    }
}

/// Why a graph has no 2-odd coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Refutation {
    /// Every one of this many colorings failed the conditions.
    Enumerated { colorings: u64 },
    /// The propagation search finished without a coloring.
    Search { nodes: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoOddColoringOutcome {
    Coloring(EdgeColoring),
    NotTwoOdd(Refutation),
    Unknown { nodes: u64 },
}

/// Red where the labels differ by exactly 2, blue where they differ by an odd number.
pub fn labeling_to_coloring(g: &Graph, l: &Labeling) -> Result<EdgeColoring> {
    if l.len() != g.vertex_count() {
        return Err(Error::SizeMismatch {
            expected: g.vertex_count(),
            got: l.len(),
        });
    }
    let colors = g
        .edges()
        .iter()
        .map(|&(u, v)| match l.difference(u, v) {
            2 => Ok(Color::Red),
            d if d % 2 == 1 => Ok(Color::Blue),
            difference => Err(Error::NotTwoOddLabeling { u, v, difference }),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EdgeColoring::from_colors(colors))
}

/// Path between `from` and `to` in the forest given as adjacency lists, by BFS.
fn forest_path(adj: &[Vec<usize>], from: usize, to: usize) -> Vec<usize> {
    let mut prev = vec![usize::MAX; adj.len()];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for &y in &adj[x] {
            if prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![to];
    let mut x = to;
    while x != from {
        x = prev[x];
        path.push(x);
    }
    path.reverse();
    path
}

fn find_red_cycle(g: &Graph, c: &EdgeColoring) -> Option<Vec<usize>> {
    let mut dsu = ParityDsu::new(g.vertex_count());
    let mut adj = vec![Vec::new(); g.vertex_count()];
    for (u, v) in c.red_edges(g) {
        if dsu.union(u, v, 0).unwrap() {
            adj[u].push(v);
            adj[v].push(u);
        } else {
            return Some(forest_path(&adj, u, v));
        }
    }
    None
}

/// BFS spanning forest with side parities (red keeps the side, blue flips it).
/// Returns the sides, or a closed walk with an odd number of blue edges.
fn side_parities(g: &Graph, c: &EdgeColoring) -> std::result::Result<Vec<u8>, Vec<usize>> {
    let n = g.vertex_count();
    let flip = |u: usize, v: usize| u8::from(!c.is_red(g.edge_id(u, v).unwrap()));
    let mut par = vec![u8::MAX; n];
    let mut tree = vec![Vec::new(); n];
    for s in 0..n {
        if par[s] != u8::MAX {
            continue;
        }
        par[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if par[y] == u8::MAX {
                    par[y] = par[x] ^ flip(x, y);
                    tree[x].push(y);
                    tree[y].push(x);
                    queue.push_back(y);
                }
            }
        }
    }
    for &(u, v) in g.edges() {
        if par[u] ^ par[v] != flip(u, v) {
            return Err(forest_path(&tree, u, v));
        }
    }
    Ok(par)
}

/// Checks red degree at most 2, a red forest, and consistent sides.
///
/// Violations are reported in that order, each with a certificate that can be
/// re-checked against `g` and `c`.
pub fn verify_coloring_conditions(g: &Graph, c: &EdgeColoring) -> ConditionReport {
    if c.check_total(g).is_err() {
        return ConditionReport {
            satisfied: false,
            violation: None,
            bipartition: None,
        };
    }
    if let Some(v) = c.red_degrees(g).iter().position(|&d| d > 2) {
        return ConditionReport::violated(Violation::RedDegreeExceeded(v));
    }
    if let Some(cycle) = find_red_cycle(g, c) {
        return ConditionReport::violated(Violation::AllRedCycle(cycle));
    }
    match side_parities(g, c) {
        Err(cycle) => ConditionReport::violated(Violation::OddBlueCycle(cycle)),
        Ok(par) => ConditionReport {
            satisfied: true,
            violation: None,
            bipartition: Some(
                par.into_iter()
                    .map(|p| if p == 0 { Side::A } else { Side::B })
                    .collect(),
            ),
        },
    }
}

/// A 2-odd labeling that is color-satisfying for `c`.
///
/// Side A red paths get runs of odd labels and side B red paths runs of even
/// labels, each path starting 2 above the previous path of its side.
pub fn construct_2odd_labeling(g: &Graph, c: &EdgeColoring) -> Result<Labeling> {
    let report = verify_coloring_conditions(g, c);
    let sides = match (report.satisfied, report.bipartition) {
        (true, Some(sides)) => sides,
        _ => {
            return Err(Error::InvalidColoring(format!(
                "conditions fail: {:?}",
                report.violation
            )))
        }
    };
    let n = g.vertex_count();
    let mut red_adj = vec![Vec::new(); n];
    for (u, v) in c.red_edges(g) {
        red_adj[u].push(v);
        red_adj[v].push(u);
    }
    let mut labels = vec![None; n];
    let mut next = [1i64, 0i64];
    for start in 0..n {
        if labels[start].is_some() || red_adj[start].len() > 1 {
            continue;
        }
        let side = usize::from(sides[start] == Side::B);
        let (mut prev, mut cur) = (usize::MAX, start);
        loop {
            labels[cur] = Some(next[side]);
            next[side] += 2;
            match red_adj[cur].iter().find(|&&w| w != prev) {
                Some(&w) => {
                    prev = cur;
                    cur = w;
                }
                None => break,
            }
        }
    }
    let labels = labels
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::ConstructionFailed("a red component is not a path".into()))?;
    Ok(Labeling::new(labels))
}

fn circ_graph(n: usize, k: usize) -> Result<Graph> {
    generate(&FamilySpec::Circ1k(n, k))
}

/// Index of outside edge `v_s v_{s+1}` (1-based `s`, with `s = n` meaning `v_n v_1`).
fn outside_edge(g: &Graph, n: usize, s: usize) -> usize {
    let (a, b) = ((s + n - 1) % n, s % n);
    g.edge_id(a, b).expect("outside edge")
}

/// Red outside edges at starts `n, k, 2k, ..., mk`, plus the inside edge of each
/// generating cycle that holds both `n` and `mk` or none of the red starts.
fn every_kth_coloring(g: &Graph, n: usize, k: usize, m: usize) -> EdgeColoring {
    let mut c = EdgeColoring::all_blue(g);
    let mut starts = vec![false; n + 1];
    starts[n] = true;
    for j in 1..=m {
        starts[j * k] = true;
    }
    for s in (1..=n).filter(|&s| starts[s]) {
        c.set(outside_edge(g, n, s), Color::Red);
    }
    for i in 1..=n {
        let window: Vec<usize> = (0..k).map(|t| (i - 1 + t) % n + 1).collect();
        let hits = window.iter().filter(|&&s| starts[s]).count();
        let both_ends = window.contains(&n) && window.contains(&(m * k));
        if hits == 0 || both_ends {
            let (a, b) = (i - 1, (i - 1 + k) % n);
            c.set(g.edge_id(a, b).expect("inside edge"), Color::Red);
        }
    }
    c
}

fn largest_multiplier(n: usize, k: usize, odd: bool) -> usize {
    let mut m = (n - 1) / k;
    if (m % 2 == 1) != odd {
        m -= 1;
    }
    m
}

/// [`every_kth_coloring`] with multiplier `m`, stepping `m` down by 2 while
/// the result fails the conditions. For `k = 2` and `n = 1 mod 4` the largest
/// even `m` gives `mk = n - 1`, and the inside edge `v_{n-1} v_1` closes a
/// red triangle with the two red outside edges at `v_n`; `m - 2` works there.
fn every_kth_repaired(g: &Graph, n: usize, k: usize, m: usize) -> Result<EdgeColoring> {
    let mut m = m;
    loop {
        let c = every_kth_coloring(g, n, k, m);
        if verify_coloring_conditions(g, &c).satisfied {
            return Ok(c);
        }
        if m < 2 {
            return Err(Error::ConstructionFailed(format!(
                "no every-kth coloring of Circ({n},{k}) passes"
            )));
        }
        m -= 2;
    }
}

fn exhaust_colorings(g: &Graph) -> TwoOddColoringOutcome {
    let m = g.edge_count();
    for mask in 0..1u64 << m {
        let c = EdgeColoring::from_red_mask(g, mask);
        if verify_coloring_conditions(g, &c).satisfied {
            return TwoOddColoringOutcome::Coloring(c);
        }
    }
    TwoOddColoringOutcome::NotTwoOdd(Refutation::Enumerated { colorings: 1 << m })
}

/// The explicit 2-odd coloring of `Circ(n, k)`, chosen by the parities of
/// `n` and `k`. `Circ(5, 2) = K_5` is refuted by enumerating all colorings.
pub fn circulant_2odd_coloring(n: usize, k: usize) -> Result<TwoOddColoringOutcome> {
    check_circ1k(n, k)?;
    let g = circ_graph(n, k)?;
    if (n, k) == (5, 2) {
        return Ok(exhaust_colorings(&g));
    }
    let c = if k == 1 {
        let method = if n <= 5 {
            CycleMethod::Lookup
        } else {
            CycleMethod::Goldbach
        };
        labeling_to_coloring(&g, &label_cycle(n, method)?)?
    } else if n.is_multiple_of(2) && k.is_multiple_of(2) && 2 * k < n {
        every_kth_repaired(&g, n, k, largest_multiplier(n, k, true))?
    } else if n.is_multiple_of(2) && k.is_multiple_of(2) {
        let red: Vec<_> = (0..n / 2).map(|i| (i, i + k)).collect();
        EdgeColoring::from_red_edges(&g, &red)?
    } else if n.is_multiple_of(2) {
        EdgeColoring::all_blue(&g)
    } else if k % 2 == 1 {
        let mut red = vec![(0, 1)];
        red.extend((2..=k + 1).map(|i| ((i - 1 + n - k) % n, i - 1)));
        EdgeColoring::from_red_edges(&g, &red)?
    } else {
        every_kth_repaired(&g, n, k, largest_multiplier(n, k, false))?
    };
    if !verify_coloring_conditions(&g, &c).satisfied {
        return Err(Error::ConstructionFailed(format!(
            "coloring of Circ({n},{k}) fails the 2-odd conditions"
        )));
    }
    Ok(TwoOddColoringOutcome::Coloring(c))
}

/// Red degree at most 2 and a positive even number of blue edges on every
/// generating cycle of `Circ(n, k)`.
///
/// This does not look for all-red cycles: a red cycle that is not itself
/// generating (the red triangle `v_1 v_3 v_5` in `Circ(6, 2)`, say) passes
/// here and fails [`verify_coloring_conditions`].
pub fn verify_generating_cycles(n: usize, k: usize, c: &EdgeColoring) -> Result<bool> {
    let g = circ_graph(n, k)?;
    c.check_total(&g)?;
    if c.red_degrees(&g).iter().any(|&d| d > 2) {
        return Ok(false);
    }
    for cycle in generating_cycles(n, k)? {
        let ids = g.cycle_edge_ids(&cycle.vertices)?;
        let blue = ids.iter().filter(|&&e| !c.is_red(e)).count();
        if blue == 0 || blue % 2 == 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Fixed-width bitset over GF(2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Gf2Vec(Vec<u64>);

impl Gf2Vec {
    pub(crate) fn zeros(bits: usize) -> Self {
        Self(vec![0; bits.div_ceil(64)])
    }

    pub(crate) fn from_ones(bits: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(bits);
        for i in ones {
            v.flip(i);
        }
        v
    }

    pub(crate) fn flip(&mut self, i: usize) {
        self.0[i / 64] ^= 1 << (i % 64);
    }

    pub(crate) fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub(crate) fn xor_with(&mut self, other: &Self) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a ^= b;
        }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub(crate) fn lowest_one(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
}

/// Generating cycles whose edge sets have symmetric difference equal to the
/// edges of `cycle`, found by elimination over GF(2).
pub fn cycle_space_decompose(n: usize, k: usize, cycle: &[usize]) -> Result<Vec<GeneratingCycle>> {
    let g = circ_graph(n, k)?;
    let target_ids = g.cycle_edge_ids(cycle)?;
    let gens = generating_cycles(n, k)?;
    let m = g.edge_count();
    // reduced rows: (edge vector, combination of generating cycles)
    let mut rows: Vec<(usize, Gf2Vec, Gf2Vec)> = Vec::new();
    for (i, gc) in gens.iter().enumerate() {
        let mut v = Gf2Vec::from_ones(m, g.cycle_edge_ids(&gc.vertices)?);
        let mut comb = Gf2Vec::from_ones(gens.len(), [i]);
        for (pivot, rv, rc) in &rows {
            if v.get(*pivot) {
                v.xor_with(rv);
                comb.xor_with(rc);
            }
        }
        if let Some(pivot) = v.lowest_one() {
            rows.push((pivot, v, comb));
        }
    }
    let mut target = Gf2Vec::from_ones(m, target_ids);
    let mut comb = Gf2Vec::zeros(gens.len());
    for (pivot, rv, rc) in &rows {
        if target.get(*pivot) {
            target.xor_with(rv);
            comb.xor_with(rc);
        }
    }
    if !target.is_zero() {
        return Err(Error::ConstructionFailed(
            "cycle is outside the span of the generating cycles".into(),
        ));
    }
    Ok(gens
        .into_iter()
        .enumerate()
        .filter(|(i, _)| comb.get(*i))
        .map(|(_, gc)| gc)
        .collect())
}

struct ColoringSearch<'a> {
    g: &'a Graph,
    colors: Vec<Option<Color>>,
    sides: ParityDsu,
    red: ParityDsu,
    red_degree: Vec<u8>,
    trail: Vec<usize>,
    nodes: u64,
    budget: u64,
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

impl ColoringSearch<'_> {
    fn assign(&mut self, e: usize, color: Color) -> bool {
        let (u, v) = self.g.edge(e);
        if color == Color::Red {
            if self.red_degree[u] >= 2
                || self.red_degree[v] >= 2
                || self.red.union(u, v, 0) != Ok(true)
            {
                return false;
            }
            self.red_degree[u] += 1;
            self.red_degree[v] += 1;
        }
        self.colors[e] = Some(color);
        self.trail.push(e);
        let d = u8::from(color == Color::Blue);
        self.sides.union(u, v, d).is_ok()
    }

    fn undo_to(&mut self, mark: (usize, usize, usize)) {
        while self.trail.len() > mark.0 {
            let e = self.trail.pop().unwrap();
            if self.colors[e] == Some(Color::Red) {
                let (u, v) = self.g.edge(e);
                self.red_degree[u] -= 1;
                self.red_degree[v] -= 1;
            }
            self.colors[e] = None;
        }
        self.sides.rollback(mark.1);
        self.red.rollback(mark.2);
    }

    fn mark(&self) -> (usize, usize, usize) {
        (
            self.trail.len(),
            self.sides.checkpoint(),
            self.red.checkpoint(),
        )
    }

    /// Forces colors until nothing changes. `false` on contradiction.
    fn propagate(&mut self) -> bool {
        loop {
            let mut changed = false;
            for e in 0..self.g.edge_count() {
                if self.colors[e].is_some() {
                    continue;
                }
                let (u, v) = self.g.edge(e);
                let red_blocked = self.red_degree[u] >= 2
                    || self.red_degree[v] >= 2
                    || self.red.find(u).0 == self.red.find(v).0;
                let (su, pu) = self.sides.find(u);
                let (sv, pv) = self.sides.find(v);
                let forced = if su == sv {
                    Some(if pu == pv { Color::Red } else { Color::Blue })
                } else if red_blocked {
                    Some(Color::Blue)
                } else {
                    None
                };
                match forced {
                    Some(Color::Red) if red_blocked => return false,
                    Some(color) => {
                        if !self.assign(e, color) {
                            return false;
                        }
                        changed = true;
                    }
                    None => {}
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn run(&mut self) -> Step {
        if !self.propagate() {
            return Step::Exhausted;
        }
        let Some(e) = self.colors.iter().position(Option::is_none) else {
            return Step::Found;
        };
        for color in [Color::Blue, Color::Red] {
            if self.nodes >= self.budget {
                return Step::OutOfBudget;
            }
            self.nodes += 1;
            let mark = self.mark();
            if self.assign(e, color) {
                match self.run() {
                    Step::Exhausted => {}
                    done => return done,
                }
            }
            self.undo_to(mark);
        }
        Step::Exhausted
    }
}

/// Default node budget of [`find_2odd_coloring`].
pub const DEFAULT_COLORING_BUDGET: u64 = 10_000_000;

/// Decides whether `g` has a 2-odd coloring.
///
/// Edges are decided in lexicographic order, blue before red, and every
/// decision is followed by propagation: an edge inside one side component is
/// forced by the component's parity (so the third edge of a triangle with two
/// decided edges is forced), and an edge that cannot be red is forced blue.
/// Search nodes are counted against `budget`.
pub fn find_2odd_coloring(g: &Graph, budget: u64) -> TwoOddColoringOutcome {
    let n = g.vertex_count();
    let mut search = ColoringSearch {
        g,
        colors: vec![None; g.edge_count()],
        sides: ParityDsu::new(n),
        red: ParityDsu::new(n),
        red_degree: vec![0; n],
        trail: Vec::new(),
        nodes: 0,
        budget,
    };
    match search.run() {
        Step::Found => {
            let colors = search.colors.into_iter().map(Option::unwrap).collect();
            TwoOddColoringOutcome::Coloring(EdgeColoring::from_colors(colors))
        }
        Step::Exhausted => TwoOddColoringOutcome::NotTwoOdd(Refutation::Search {
            nodes: search.nodes,
        }),
        Step::OutOfBudget => TwoOddColoringOutcome::Unknown {
            nodes: search.nodes,
        },
    }
}
