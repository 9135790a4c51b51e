//! Labeling verifiers and explicit prime distance constructions.
//!
//! Every constructor checks its own output with [`verify_labeling`] before
//! returning it.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::coloring::{verify_coloring_conditions, Side};
use crate::error::{Error, Result};
use crate::graph::{
    generate, paper_mill_pages, paper_mill_spine, EdgeColoring, FamilySpec, Graph, Labeling,
};
use crate::numtheory::{
    self, goldbach_pair, is_prime, prime_ap_from, prime_pairs_with_gap, prime_sum,
};
use crate::search::{decide_prime_distance, DecisionOutcome, SearchConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    /// Adjacent labels differ by a prime.
    PrimeDistance,
    /// Adjacent labels differ by an odd number or by exactly 2.
    TwoOdd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FailureReason {
    NotPrime,
    EvenNotTwo,
    DuplicateLabel,
    /// A red edge whose difference is not 2.
    RedNotTwo,
    /// A blue edge whose difference is even.
    BlueEven,
    /// The labeling does not have one label per vertex; `u` is the vertex
    /// count and `v` the label count.
    LabelCount,
}

/// One failed check. For `DuplicateLabel`, `u` and `v` are two vertices
/// sharing a label (not necessarily adjacent) and `difference` is 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub u: usize,
    pub v: usize,
    pub difference: i64,
    pub reason: FailureReason,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub valid: bool,
    pub failures: Vec<Failure>,
}

impl VerifyReport {
    fn from_failures(failures: Vec<Failure>) -> Self {
        Self {
            valid: failures.is_empty(),
            failures,
        }
    }
}

fn structural_failures(g: &Graph, l: &Labeling) -> Vec<Failure> {
    if l.len() != g.vertex_count() {
        return vec![Failure {
            u: g.vertex_count(),
            v: l.len(),
            difference: 0,
            reason: FailureReason::LabelCount,
        }];
    }
    let mut first = std::collections::HashMap::new();
    let mut out = Vec::new();
    for (v, &x) in l.as_slice().iter().enumerate() {
        if let Some(&u) = first.get(&x) {
            out.push(Failure {
                u,
                v,
                difference: 0,
                reason: FailureReason::DuplicateLabel,
            });
        } else {
            first.insert(x, v);
        }
    }
    out
}

/// Injectivity, then the edge condition of `mode` on every edge.
pub fn verify_labeling(g: &Graph, l: &Labeling, mode: Mode) -> VerifyReport {
    let mut failures = structural_failures(g, l);
    if l.len() == g.vertex_count() {
        for &(u, v) in g.edges() {
            let d = l.difference(u, v);
            let reason = match mode {
                Mode::PrimeDistance if !is_prime(d) => Some(FailureReason::NotPrime),
                Mode::TwoOdd if d % 2 == 0 && d != 2 => Some(FailureReason::EvenNotTwo),
                _ => None,
            };
            if let Some(reason) = reason {
                failures.push(Failure {
                    u,
                    v,
                    difference: d,
                    reason,
                });
            }
        }
    }
    VerifyReport::from_failures(failures)
}

/// Red edges must differ by exactly 2; blue edges by an odd prime
/// (`PrimeDistance`) or an odd number (`TwoOdd`).
pub fn verify_color_satisfying(
    g: &Graph,
    c: &EdgeColoring,
    l: &Labeling,
    mode: Mode,
) -> VerifyReport {
    let mut failures = structural_failures(g, l);
    if c.len() != g.edge_count() {
        return VerifyReport::from_failures(failures);
    }
    if l.len() == g.vertex_count() {
        for (id, &(u, v)) in g.edges().iter().enumerate() {
            let d = l.difference(u, v);
            let reason = if c.is_red(id) {
                (d != 2).then_some(FailureReason::RedNotTwo)
            } else if d % 2 == 0 {
                Some(FailureReason::BlueEven)
            } else if mode == Mode::PrimeDistance && !is_prime(d) {
                Some(FailureReason::NotPrime)
            } else {
                None
            };
            if let Some(reason) = reason {
                failures.push(Failure {
                    u,
                    v,
                    difference: d,
                    reason,
                });
            }
        }
    }
    let mut report = VerifyReport::from_failures(failures);
    if c.len() != g.edge_count() {
        report.valid = false;
    }
    report
}

fn checked(g: &Graph, labels: Vec<i64>, what: &str) -> Result<Labeling> {
    let l = Labeling::new(labels);
    let report = verify_labeling(g, &l, Mode::PrimeDistance);
    if report.valid {
        Ok(l)
    } else {
        Err(Error::ConstructionFailed(format!(
            "{what}: labels {:?} fail with {:?}",
            l.labels, report.failures
        )))
    }
}

/// `0, 3, 6, ..., 3n` along the path with `n` edges.
pub fn label_path(n: usize) -> Result<Labeling> {
    let g = generate(&FamilySpec::Path(n))?;
    checked(&g, (0..=n as i64).map(|i| 3 * i).collect(), "path")
}

/// Largest label considered by the progression search behind the bipartite labelings.
pub const AP_SEARCH_LIMIT: u64 = numtheory::SIEVE_LIMIT;

/// Labels for sides of sizes `r` and `s` from an odd prime progression
/// `p - (r-1)d, ..., p + (s-1)d`: side A gets `0, d, ..., (r-1)d`, side B gets
/// `p, p + d, ..., p + (s-1)d`. Every cross difference is a term.
fn progression_sides(r: usize, s: usize) -> Result<(Vec<i64>, Vec<i64>)> {
    let (start, d) = prime_ap_from(r + s - 1, 3, AP_SEARCH_LIMIT)?;
    let (start, d) = (start as i64, d as i64);
    let p = start + (r as i64 - 1) * d;
    let a = (0..r as i64).map(|i| i * d).collect();
    let b = (0..s as i64).map(|i| p + i * d).collect();
    Ok((a, b))
}

/// `K_{r,s}` labeled from a prime progression of length `r + s - 1`.
/// Vertices follow [`generate`]: side A first, then side B.
pub fn label_bipartite(r: usize, s: usize) -> Result<Labeling> {
    if r == 0 || s == 0 {
        return Err(Error::InvalidSpec("both sides must be nonempty".into()));
    }
    let g = generate(&FamilySpec::CompleteBipartite(r, s))?;
    let (mut a, b) = progression_sides(r, s)?;
    a.extend(b);
    checked(&g, a, "bipartite")
}

/// Any bipartite graph, labeled as a subgraph of the complete bipartite graph
/// on its sides.
pub fn label_bipartite_graph(g: &Graph) -> Result<Labeling> {
    let report = verify_coloring_conditions(g, &EdgeColoring::all_blue(g));
    let Some(sides) = report.bipartition.filter(|_| report.satisfied) else {
        return Err(Error::InvalidSpec("graph is not bipartite".into()));
    };
    let r = sides.iter().filter(|&&s| s == Side::A).count();
    let s = sides.len() - r;
    if s == 0 {
        return checked(g, (0..r as i64).collect(), "edgeless");
    }
    let (a, b) = progression_sides(r, s)?;
    let (mut ia, mut ib) = (a.into_iter(), b.into_iter());
    let labels = sides
        .iter()
        .map(|side| match side {
            Side::A => ia.next().unwrap(),
            Side::B => ib.next().unwrap(),
        })
        .collect();
    checked(g, labels, "bipartite")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CycleMethod {
    /// Fixed labelings of `C_3`, `C_4`, `C_5`.
    Lookup,
    /// `0, 2, ..., 2n-4, p_1` with `2n - 4 = p_1 + p_2`.
    Goldbach,
    /// `0, 2, ..., 2n-8, p+2n-8, p_1+p_2, p_1` with `p+2n-8` a sum of three primes.
    Vinogradov,
    /// `2n - 5 + p` as a sum of 2 to 6 primes.
    Ramare,
}

/// Cycle labeling with the default method: lookup for `n <= 5`, Goldbach above.
pub fn label_cycle_default(n: usize) -> Result<Labeling> {
    label_cycle(
        n,
        if n <= 5 {
            CycleMethod::Lookup
        } else {
            CycleMethod::Goldbach
        },
    )
}

pub fn label_cycle(n: usize, method: CycleMethod) -> Result<Labeling> {
    match method {
        CycleMethod::Ramare => label_cycle_ramare(n, None),
        _ => {
            let g = generate(&FamilySpec::Cycle(n))?;
            let labels = match method {
                CycleMethod::Lookup => cycle_lookup(n)?,
                CycleMethod::Goldbach => cycle_goldbach(n)?,
                _ => cycle_vinogradov(n)?,
            };
            checked(&g, labels, "cycle")
        }
    }
}

fn cycle_lookup(n: usize) -> Result<Vec<i64>> {
    Ok(match n {
        3 => vec![0, 3, 5],
        4 => vec![0, 3, 8, 11],
        5 => vec![0, 3, 6, 9, 11],
        _ => return Err(Error::InvalidSpec(format!("no stored labeling of C_{n}"))),
    })
}

fn evens_through(last: i64) -> impl Iterator<Item = i64> {
    (0..=last).step_by(2)
}

fn cycle_goldbach(n: usize) -> Result<Vec<i64>> {
    if n < 6 {
        return Err(Error::InvalidSpec(format!(
            "Goldbach labeling needs n >= 6, got {n}"
        )));
    }
    let m = 2 * n as i64 - 4;
    let pair = goldbach_pair(m as u64, m as u64)?;
    let mut labels: Vec<i64> = evens_through(m).collect();
    labels.push(pair.largest() as i64);
    Ok(labels)
}

fn cycle_vinogradov(n: usize) -> Result<Vec<i64>> {
    if n < 4 {
        return Err(Error::InvalidSpec(format!(
            "Vinogradov labeling needs n >= 4, got {n}"
        )));
    }
    let shift = 2 * n as u64 - 8;
    let sieve = numtheory::PrimeSet::global();
    for p in sieve.primes_from(4 * n as u64 + 1) {
        let Ok(d) = prime_sum(p + shift, 3) else {
            continue;
        };
        if d.largest() <= shift {
            return Err(Error::ConstructionFailed(format!(
                "largest part {} does not exceed 2n - 8 = {shift}",
                d.largest()
            )));
        }
        let mut labels: Vec<i64> = evens_through(shift as i64).collect();
        labels.push((p + shift) as i64);
        labels.push(d.prefix_sum(2) as i64);
        labels.push(d.largest() as i64);
        return Ok(labels);
    }
    Err(Error::NotFound(format!("no prime p > 4n for C_{n}")))
}

/// Ramaré-style cycle labeling. `terms` forces the number of primes in the
/// decomposition of `2n - 5 + p`; by default the fewest that work.
///
/// Five terms need `n >= 9` and six need `n >= 10`, since the even run
/// `0, 2, ..., 2n - 18` (or `2n - 20`) must be nonempty.
pub fn label_cycle_ramare(n: usize, terms: Option<usize>) -> Result<Labeling> {
    if n < 8 {
        return Err(Error::InvalidSpec(format!(
            "Ramare labeling needs n >= 8, got {n}"
        )));
    }
    if let Some(t) = terms {
        let min_n = match t {
            2..=4 => 8,
            5 => 9,
            6 => 10,
            _ => return Err(Error::InvalidSpec(format!("term count {t} outside 2..=6"))),
        };
        if n < min_n {
            return Err(Error::InvalidSpec(format!(
                "{t} terms need n >= {min_n}, got {n}"
            )));
        }
    }
    let g = generate(&FamilySpec::Cycle(n))?;
    let n64 = n as i64;
    let sieve = numtheory::PrimeSet::global();
    let p = sieve
        .primes_from(10 * n as u64 + 1)
        .next()
        .ok_or_else(|| Error::NotFound("no prime above 10n".into()))?;
    let target = 2 * n as u64 - 5 + p;
    let candidates: Vec<usize> = match terms {
        Some(t) => vec![t],
        None => (2..=6).filter(|&t| t <= 4 || n >= t + 4).collect(),
    };
    let mut last_err = None;
    for t in candidates {
        let d = match prime_sum(target, t) {
            Ok(d) => d,
            Err(e) => {
                last_err = Some(e);
                continue;
            }
        };
        if d.largest() as i64 <= 2 * n64 - 5 {
            return Err(Error::ConstructionFailed(format!(
                "largest part {} does not exceed 2n - 5",
                d.largest()
            )));
        }
        let run_end = match t {
            2 => 2 * n64 - 8,
            3 => 2 * n64 - 10,
            4 => 2 * n64 - 12,
            5 => 2 * n64 - 18,
            _ => 2 * n64 - 20,
        };
        let mut labels: Vec<i64> = evens_through(run_end).collect();
        if t >= 5 {
            labels.extend([2 * n64 - 15, 2 * n64 - 10]);
        }
        labels.push(2 * n64 - 5);
        labels.push(target as i64);
        labels.extend((1..t).rev().map(|j| d.prefix_sum(j) as i64));
        return checked(&g, labels, "cycle");
    }
    Err(last_err.unwrap_or_else(|| Error::NotFound("no decomposition".into())))
}

/// Center 0 and one twin prime pair per triangle, skipping pairs that share
/// a prime with an earlier pair.
pub fn label_dutch_windmill(n: usize) -> Result<Labeling> {
    let g = generate(&FamilySpec::DutchWindmill(n))?;
    let mut labels = vec![0i64];
    let mut last = 0u64;
    let mut min = 3u64;
    while labels.len() < 2 * n + 1 {
        let (p, q) = prime_pairs_with_gap(2, 1, min, false)?[0];
        min = p + 1;
        if p <= last {
            continue;
        }
        labels.extend([p as i64, q as i64]);
        last = q;
    }
    checked(&g, labels, "windmill")
}

/// Extra room between consecutive blades of the paper mill labeling.
const BLADE_SPACING: u64 = 200;

/// Paper mill labeling: spine `i` is `p_i, p_i + 2, ..., p_i + 2k` with
/// `p_i` and `p_i + 2k` prime, and each page over spine labels `s, s + 2` is
/// `s + 2 + q` or `s - q` for a twin pair `(q, q + 2)`.
///
/// Pages of a later blade stay above every label of the earlier blades, so
/// blades never collide.
pub fn label_paper_mill(n: usize, k: usize) -> Result<Labeling> {
    let g = generate(&FamilySpec::PaperMill(n, k))?;
    let mut labels = vec![0i64; g.vertex_count()];
    let mut used: HashSet<i64> = HashSet::from([0]);
    let twins: Vec<i64> = prime_pairs_with_gap(2, 64, 3, false)?
        .into_iter()
        .map(|(q, _)| q as i64)
        .collect();
    let gap = 2 * k as u64;
    let mut min = 2u64;
    let mut floor: Option<i64> = None;
    for blade in 0..n {
        let (p, _) = prime_pairs_with_gap(gap, 1, min, false)?[0];
        let spine = paper_mill_spine(k, blade);
        for (j, &v) in spine.iter().enumerate() {
            let x = p as i64 + 2 * j as i64;
            labels[v] = x;
            used.insert(x);
        }
        let mut block_max = p as i64 + gap as i64;
        for book in 0..k {
            let s = p as i64 + 2 * book as i64;
            let mut options = twins.iter().flat_map(|&q| [s + 2 + q, s - q]);
            for v in paper_mill_pages(k, blade, book) {
                let x = options
                    .find(|x| !used.contains(x) && floor.is_none_or(|f| *x > f))
                    .ok_or_else(|| Error::NotFound("ran out of twin prime pairs".into()))?;
                labels[v] = x;
                used.insert(x);
                block_max = block_max.max(x);
            }
        }
        floor = Some(block_max);
        min = block_max as u64 + gap + BLADE_SPACING;
    }
    checked(&g, labels, "paper mill")
}

fn search_fallback(g: &Graph, what: &str) -> Result<Labeling> {
    let cfg = SearchConfig {
        label_bound: 40 * g.vertex_count() as i64,
        ..SearchConfig::default()
    };
    match decide_prime_distance(g, &cfg) {
        DecisionOutcome::Witness { labeling, .. } => Ok(labeling),
        other => Err(Error::ConstructionFailed(format!(
            "{what}: construction unavailable and search gave {other:?}"
        ))),
    }
}

/// Explicit labels of `Circ(2m+1, 3)` for `v_1..v_{2m+1}`, in three cases by `m mod 3`.
///
/// The sequences hold for `m = 7` and `m >= 9`. At `m = 4, 5, 6, 8` they
/// produce repeated labels or non-prime differences.
pub fn circulant_k3_formula(m: usize) -> Vec<i64> {
    let n = 2 * m + 1;
    let mi = m as i64;
    let t = mi / 3;
    let mut x = vec![0i64; n + 1];
    let base = |pos: usize| -> i64 {
        let i = (pos as i64 - 1) / 3;
        match pos % 3 {
            1 => 11 * i - 5,
            2 => 11 * i - 2,
            _ => 11 * i + 1,
        }
    };
    x[1] = 4;
    x[2] = 2;
    x[3] = -1;
    let upper = |x: &mut Vec<i64>, from: usize, c: i64, offs: [i64; 3]| {
        for pos in from..2 * m {
            let j = pos as i64 / 3;
            x[pos] = c - 11 * j + offs[pos % 3];
        }
    };
    match m % 3 {
        0 => {
            for pos in 4..m {
                x[pos] = base(pos);
            }
            x[m] = 11 * t - 2;
            x[m + 1] = 11 * t + 1;
            x[m + 2] = 11 * t + 4;
            upper(&mut x, m + 3, 22 * t, [2, -1, -4]);
        }
        1 => {
            let big = 11 * t;
            for pos in 4..m {
                x[pos] = base(pos);
            }
            x[m] = big + 7;
            x[m + 1] = big + 10;
            x[m + 2] = big - 7;
            upper(&mut x, m + 3, 2 * big, [10, 7, 2]);
        }
        _ => {
            let big = 11 * t;
            for pos in 4..m.saturating_sub(3) {
                x[pos] = base(pos);
            }
            if m >= 5 {
                x[m - 3] = big - 11;
                x[m - 2] = big - 8;
                x[m - 1] = big - 5;
            }
            x[m] = big + 6;
            x[m + 1] = big + 9;
            upper(&mut x, m + 2, 2 * big, [18, 13, 10]);
        }
    }
    x[2 * m] = 0;
    x[2 * m + 1] = -3;
    x.remove(0);
    x
}

/// Prime distance labeling of `Circ(n, 3)` for `n > 7`.
///
/// Odd `n` uses [`circulant_k3_formula`]; when the formula fails
/// verification (small `n`), or `n` is even and the graph too large for a
/// progression labeling, bounded search takes over.
pub fn label_circulant_k3(n: usize) -> Result<Labeling> {
    if n <= 7 {
        return Err(Error::InvalidSpec(format!(
            "Circ(n,3) needs n > 7, got {n}"
        )));
    }
    let g = generate(&FamilySpec::Circ1k(n, 3))?;
    if n % 2 == 1 {
        if let Ok(l) = checked(&g, circulant_k3_formula(n / 2), "Circ(n,3)") {
            return Ok(l);
        }
    } else if let Ok(l) = label_bipartite_graph(&g) {
        return Ok(l);
    }
    search_fallback(&g, "Circ(n,3)")
}

/// Explicit labels of `Circ(n, n/2)`, `n >= 12` with `4 | n`, from the
/// prime `p` and `p - 3n/2 + 10 = q_1 + q_2 + q_3`.
pub fn circulant_half_formula(n: usize, p: i64, q: [i64; 3]) -> Vec<i64> {
    let h = n / 2;
    let c = 3 * h as i64;
    let mut x = vec![0i64; n + 1];
    x[n] = 0;
    for j in 1..=h - 4 {
        x[n - j] = 7 + 3 * (j as i64 - 1);
        x[h - j] = 5 + 3 * (j as i64 - 1);
    }
    x[h] = 2;
    x[1] = p;
    x[2] = q[0] + q[1] + c - 10;
    x[3] = q[0] + c - 10;
    x[h + 1] = p + 2;
    x[h + 2] = q[0] + q[1] + c - 8;
    x[h + 3] = q[0] + c - 8;
    x.remove(0);
    x
}

/// Prime distance labeling of `Circ(n, n/2)` for `n >= 4` with `4 | n`.
///
/// `n = 4, 8` come from search. Above that, `p` runs over primes with
/// `p - 3n/2 + 10 >= 9` until [`circulant_half_formula`] verifies.
pub fn label_circulant_half(n: usize) -> Result<Labeling> {
    if n < 4 || !n.is_multiple_of(4) {
        return Err(Error::InvalidSpec(format!(
            "Circ(n,n/2) needs 4 | n, got {n}"
        )));
    }
    let g = generate(&FamilySpec::Circ1k(n, n / 2))?;
    if n < 12 {
        return search_fallback(&g, "Circ(n,n/2)");
    }
    let shift = 3 * n as u64 / 2 - 10;
    let sieve = numtheory::PrimeSet::global();
    let mut last = None;
    for p in sieve.primes_from(shift + 9).take(1000) {
        let Ok(d) = prime_sum(p - shift, 3) else {
            continue;
        };
        if d.parts.contains(&2) {
            continue;
        }
        let q = [d.parts[0] as i64, d.parts[1] as i64, d.parts[2] as i64];
        match checked(&g, circulant_half_formula(n, p as i64, q), "Circ(n,n/2)") {
            Ok(l) => return Ok(l),
            Err(e) => last = Some(e),
        }
    }
    Err(last.unwrap_or_else(|| Error::NotFound("no admissible prime".into())))
}
