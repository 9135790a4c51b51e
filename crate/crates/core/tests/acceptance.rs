//! Acceptance run: one PASS/FAIL line per criterion, with timings.
//!
//! Run with `cargo test -p prime-distance --test acceptance`.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use prime_distance::coloring::{
    circulant_2odd_coloring, construct_2odd_labeling, cycle_space_decompose, find_2odd_coloring,
    labeling_to_coloring, verify_coloring_conditions, Refutation, TwoOddColoringOutcome,
};
use prime_distance::graph::{
    colored_fan, generate, generating_cycles, paper_mill_spine, Color, EdgeColoring, FamilySpec,
    Graph, Labeling,
};
use prime_distance::labeling::{
    circulant_k3_formula, label_bipartite, label_circulant_half, label_circulant_k3, label_cycle,
    label_cycle_ramare, label_dutch_windmill, label_paper_mill, label_path, verify_labeling,
    CycleMethod, Mode,
};
use prime_distance::search::{
    colored_automorphisms, conjecture_sweep, decide_color_satisfying, decide_prime_distance,
    enumerate_color_satisfying, witness_classes, DecisionOutcome, SearchConfig, SweepConfig,
    Verdict,
};

type Outcome = Result<String, String>;

/// Number, name, time limit, check.
type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn family(spec: FamilySpec) -> Graph {
    generate(&spec).expect("family generates")
}

/// Shifted so the minimum is 0, then the smaller of that and its negation.
fn normalize(labels: &[i64]) -> Vec<i64> {
    let shift = |v: Vec<i64>| {
        let m = *v.iter().min().unwrap();
        v.into_iter().map(|x| x - m).collect::<Vec<_>>()
    };
    let a = shift(labels.to_vec());
    let b = shift(labels.iter().map(|x| -x).collect());
    a.min(b)
}

/// Equal up to translation, negation and a colored automorphism.
fn equivalent(g: &Graph, c: &EdgeColoring, x: &[i64], y: &[i64]) -> bool {
    let target = normalize(y);
    colored_automorphisms(g, c, 10).iter().any(|perm| {
        let moved: Vec<i64> = (0..x.len()).map(|v| x[perm[v]]).collect();
        normalize(&moved) == target
    })
}

fn valid(g: &Graph, l: &Labeling) -> bool {
    verify_labeling(g, l, Mode::PrimeDistance).valid
}

/// Blue-parity and all-red conditions by enumerating every simple cycle.
fn cycle_oracle(g: &Graph, cycles: &[Vec<usize>], c: &EdgeColoring) -> bool {
    if c.red_degrees(g).iter().any(|&d| d > 2) {
        return false;
    }
    cycles.iter().all(|cyc| {
        let ids = g.cycle_edge_ids(cyc).unwrap();
        let blue = ids.iter().filter(|&&e| !c.is_red(e)).count();
        blue > 0 && blue % 2 == 0
    })
}

fn c1_exact_labelings() -> Outcome {
    for (n, expected) in [
        (3, vec![0, 3, 5]),
        (4, vec![0, 3, 8, 11]),
        (5, vec![0, 3, 6, 9, 11]),
    ] {
        let g = family(FamilySpec::Cycle(n));
        let blue = EdgeColoring::all_blue(&g);
        let l = label_cycle(n, CycleMethod::Lookup).map_err(|e| e.to_string())?;
        ensure(equivalent(&g, &blue, &l.labels, &expected), || {
            format!("C_{n}: {:?}", l.labels)
        })?;
    }
    let c3 = family(FamilySpec::Cycle(3));
    let cfg = SearchConfig {
        label_bound: 10,
        ..Default::default()
    };
    let found = decide_prime_distance(&c3, &cfg);
    let c3_witness = found
        .witness()
        .ok_or("no C_3 witness at B = 10")?
        .labels
        .clone();
    ensure(
        equivalent(&c3, &EdgeColoring::all_blue(&c3), &c3_witness, &[0, 3, 5]),
        || format!("C_3 search gave {c3_witness:?}"),
    )?;
    for n in 1..=50 {
        let l = label_path(n).map_err(|e| e.to_string())?;
        let expected: Vec<i64> = (0..=n as i64).map(|i| 3 * i).collect();
        ensure(l.labels == expected, || format!("P_{n}: {:?}", l.labels))?;
    }
    let (g, c) = colored_fan(0);
    let cfg = SearchConfig {
        label_bound: 50,
        ..Default::default()
    };
    let out =
        decide_color_satisfying(&g, &c, Mode::PrimeDistance, &cfg).map_err(|e| e.to_string())?;
    let w = out.witness().ok_or("no CF witness")?;
    ensure(equivalent(&g, &c, &w.labels, &[0, 2, 4, 7]), || {
        format!("CF: {:?}", w.labels)
    })?;
    Ok(format!(
        "C_3 search witness {c3_witness:?}, CF witness {:?}",
        w.labels
    ))
}

fn c2_cycle_constructors() -> Outcome {
    let mut checked = 0;
    let check = |n: usize, l: Labeling| -> Result<(), String> {
        ensure(valid(&family(FamilySpec::Cycle(n)), &l), || {
            format!("C_{n} invalid: {:?}", l.labels)
        })
    };
    for n in 6..=500 {
        check(
            n,
            label_cycle(n, CycleMethod::Goldbach).map_err(|e| format!("Goldbach C_{n}: {e}"))?,
        )?;
        checked += 1;
    }
    for n in 4..=200 {
        check(
            n,
            label_cycle(n, CycleMethod::Vinogradov)
                .map_err(|e| format!("Vinogradov C_{n}: {e}"))?,
        )?;
        checked += 1;
    }
    let mut per_terms = BTreeMap::new();
    for n in 8..=100 {
        check(
            n,
            label_cycle_ramare(n, None).map_err(|e| format!("Ramare C_{n}: {e}"))?,
        )?;
        checked += 1;
        for t in 2..=6 {
            if let Ok(l) = label_cycle_ramare(n, Some(t)) {
                check(n, l)?;
                checked += 1;
                *per_terms.entry(t).or_insert(0) += 1;
            }
        }
    }
    ensure(
        (2..=6).all(|t| per_terms.get(&t).is_some_and(|&c| c > 0)),
        || format!("term counts exercised: {per_terms:?}"),
    )?;
    Ok(format!(
        "{checked} cycle labelings verified; forced term counts {per_terms:?}"
    ))
}

fn c3_windmills() -> Outcome {
    for n in 1..=100 {
        let l = label_dutch_windmill(n).map_err(|e| format!("D_{n}: {e}"))?;
        ensure(valid(&family(FamilySpec::DutchWindmill(n)), &l), || {
            format!("D_{n} invalid")
        })?;
    }
    for n in 1..=5 {
        for k in 1..=5 {
            let l = label_paper_mill(n, k).map_err(|e| format!("M_{n},{k}: {e}"))?;
            let g = family(FamilySpec::PaperMill(n, k));
            ensure(valid(&g, &l), || format!("M_{n},{k} invalid"))?;
            for blade in 0..n {
                let spine = paper_mill_spine(k, blade);
                let d = l.difference(spine[0], spine[k]);
                ensure(d == 2 * k as i64, || {
                    format!("M_{n},{k} blade {blade}: spine ends differ by {d}")
                })?;
            }
        }
    }
    Ok("D_1..D_100 and M_{n,k} for n, k in 1..5 verified".into())
}

fn c4_circulant_colorings() -> Outcome {
    let mut cells = 0;
    for n in 3..=60 {
        for k in 1..=n / 2 {
            let out = circulant_2odd_coloring(n, k).map_err(|e| format!("({n},{k}): {e}"))?;
            match out {
                TwoOddColoringOutcome::NotTwoOdd(Refutation::Enumerated { colorings })
                    if (n, k) == (5, 2) =>
                {
                    ensure(colorings == 1 << 10, || {
                        format!("(5,2) enumerated {colorings}")
                    })?
                }
                TwoOddColoringOutcome::Coloring(c) if (n, k) != (5, 2) => {
                    let g = family(FamilySpec::Circ1k(n, k));
                    ensure(verify_coloring_conditions(&g, &c).satisfied, || {
                        format!("({n},{k}) fails")
                    })?;
                }
                other => return Err(format!("({n},{k}): unexpected {other:?}")),
            }
            cells += 1;
        }
    }
    Ok(format!(
        "{cells} cells; (5,2) refuted over all 1024 colorings"
    ))
}

fn c5_characterization() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x2_0dd);
    let (mut trials, mut satisfied) = (0, 0);
    for n in 3..=12 {
        for k in 1..=n / 2 {
            let g = family(FamilySpec::Circ1k(n, k));
            let cycles = g.simple_cycles();
            let base = match circulant_2odd_coloring(n, k).unwrap() {
                TwoOddColoringOutcome::Coloring(c) => Some(c),
                _ => None,
            };
            for t in 0..200 {
                let c = match (&base, t % 2) {
                    (Some(b), 0) => {
                        let mut c = b.clone();
                        for _ in 0..rng.gen_range(0..3) {
                            let e = rng.gen_range(0..g.edge_count());
                            c.set(e, if c.is_red(e) { Color::Blue } else { Color::Red });
                        }
                        c
                    }
                    _ => {
                        let density = rng.gen_range(0.05..0.5);
                        let mut mask = 0u64;
                        for e in 0..g.edge_count() {
                            if rng.gen_bool(density) {
                                mask |= 1 << e;
                            }
                        }
                        EdgeColoring::from_red_mask(&g, mask)
                    }
                };
                let fast = verify_coloring_conditions(&g, &c).satisfied;
                ensure(fast == cycle_oracle(&g, &cycles, &c), || {
                    format!(
                        "Circ({n},{k}) red {:?}: verifier says {fast}",
                        c.red_edges(&g)
                    )
                })?;
                trials += 1;
                satisfied += fast as usize;
            }
        }
    }
    Ok(format!(
        "{trials} colorings agree with the cycle oracle ({satisfied} satisfied)"
    ))
}

fn c6_impossibility() -> Outcome {
    let k5 = family(FamilySpec::Complete(5));
    ensure(
        matches!(
            find_2odd_coloring(&k5, u64::MAX),
            TwoOddColoringOutcome::NotTwoOdd(_)
        ),
        || "K_5 not refuted".into(),
    )?;
    let t = Instant::now();
    let k333 = family(FamilySpec::CompleteMultipartite(vec![3, 3, 3]));
    ensure(
        matches!(
            find_2odd_coloring(&k333, u64::MAX),
            TwoOddColoringOutcome::NotTwoOdd(_)
        ),
        || "K_3,3,3 not refuted".into(),
    )?;
    let k333_secs = t.elapsed().as_secs_f64();
    ensure(k333_secs < 600.0, || {
        format!("K_3,3,3 took {k333_secs:.1}s")
    })?;
    let cfg = SearchConfig {
        label_bound: 200,
        node_budget: u64::MAX,
        ..Default::default()
    };
    let mut nodes = Vec::new();
    for k in 1..=5 {
        let (g, c) = colored_fan(k);
        let e = enumerate_color_satisfying(&g, &c, Mode::PrimeDistance, &cfg, usize::MAX)
            .map_err(|e| e.to_string())?;
        ensure(e.complete && e.witnesses.is_empty(), || {
            format!(
                "CF_{k}: complete {} witnesses {}",
                e.complete,
                e.witnesses.len()
            )
        })?;
        nodes.push(e.nodes);
    }
    let (g, c) = colored_fan(0);
    let e = enumerate_color_satisfying(&g, &c, Mode::PrimeDistance, &cfg, usize::MAX)
        .map_err(|e| e.to_string())?;
    let classes = witness_classes(&g, &c, &e.witnesses);
    ensure(e.complete && classes.len() == 1, || {
        format!("CF classes: {classes:?}")
    })?;
    Ok(format!(
        "K_3,3,3 refuted in {k333_secs:.2}s; CF_1..CF_5 empty at B=200 (nodes {nodes:?}); CF class {:?}",
        classes[0].labels
    ))
}

fn conjectured_not(n: usize, k: usize) -> bool {
    let odd = n % 2 == 1;
    (odd && n >= 5 && (k == 2 || k == (n - 1) / 2)) || (n, k) == (6, 2)
}

fn c7_sweep() -> Outcome {
    let cfg = SweepConfig::default();
    let rows = conjecture_sweep(14, &cfg).map_err(|e| e.to_string())?;
    let mut problems = Vec::new();
    for r in &rows {
        let g = family(FamilySpec::Circ1k(r.n, r.k));
        let evidence = r.evidence.as_ref().map_or("-".to_string(), |e| match e {
            DecisionOutcome::NoWithinBound { bound, .. } => {
                format!("no_witness_within_bound(B={bound})")
            }
            other => other.kind().to_string(),
        });
        println!(
            "    Circ({:2},{:2}) {:16} {:28} {:12} nodes={:<11} {:.2}s",
            r.n,
            r.k,
            r.outcome.kind(),
            evidence,
            format!("{:?}", r.verdict),
            r.nodes,
            r.seconds
        );
        if r.verdict != Verdict::Consistent {
            problems.push(format!("({},{}) {:?}", r.n, r.k, r.verdict));
        }
        if let DecisionOutcome::ProvenYes { .. } = r.outcome {
            if !r.witness().is_some_and(|w| valid(&g, w)) {
                problems.push(format!("({},{}) has no valid witness", r.n, r.k));
            }
        }
        if conjectured_not(r.n, r.k) {
            let ok = match &r.evidence {
                Some(DecisionOutcome::NoWithinBound { bound, .. }) => *bound == 40 * r.n as i64,
                Some(DecisionOutcome::ProvenNot { .. }) => true,
                _ => false,
            };
            if !ok || r.witness().is_some() {
                problems.push(format!(
                    "({},{}) expected no witness, got {evidence}",
                    r.n, r.k
                ));
            }
        }
    }
    let nodes: u64 = rows.iter().map(|r| r.nodes).sum();
    ensure(problems.is_empty(), || problems.join("; "))?;
    Ok(format!(
        "{} cells consistent, {nodes} search nodes in total",
        rows.len()
    ))
}

fn c8_formula_repairs() -> Outcome {
    let mut direct = Vec::new();
    for n in (9..=41).step_by(2) {
        let g = family(FamilySpec::Circ1k(n, 3));
        let l = label_circulant_k3(n).map_err(|e| format!("Circ({n},3): {e}"))?;
        ensure(valid(&g, &l), || format!("Circ({n},3) invalid"))?;
        if valid(&g, &Labeling::new(circulant_k3_formula((n - 1) / 2))) {
            direct.push(n);
        }
    }
    for n in [4, 8, 12, 16, 20, 24] {
        let g = family(FamilySpec::Circ1k(n, n / 2));
        let l = label_circulant_half(n).map_err(|e| format!("Circ({n},{}): {e}", n / 2))?;
        ensure(valid(&g, &l), || format!("Circ({n},{}) invalid", n / 2))?;
    }
    let corrections = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../CORRECTIONS.md");
    let text = std::fs::read_to_string(&corrections).map_err(|e| format!("CORRECTIONS.md: {e}"))?;
    ensure(
        text.contains("Circ(n,3)") && text.contains("Circ(n,n/2)"),
        || "CORRECTIONS.md does not cover both circulant families".into(),
    )?;
    Ok(format!(
        "closed-form Circ(n,3) labeling verifies directly for n in {direct:?}"
    ))
}

fn c9_properties() -> Outcome {
    let mut count = 0;
    // round trip: every constructor output passes the verifier
    for (r, s) in [(1, 1), (1, 2), (2, 2), (2, 3), (3, 3), (3, 5), (4, 4)] {
        let l = label_bipartite(r, s).map_err(|e| e.to_string())?;
        ensure(
            valid(&family(FamilySpec::CompleteBipartite(r, s)), &l),
            || format!("K_{r},{s}"),
        )?;
        count += 1;
    }
    for n in 3..=30 {
        let g = family(FamilySpec::Cycle(n));
        let method = if n <= 5 {
            CycleMethod::Lookup
        } else {
            CycleMethod::Goldbach
        };
        ensure(valid(&g, &label_cycle(n, method).unwrap()), || {
            format!("C_{n}")
        })?;
        count += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for n in 3..=8 {
        for k in 1..=n / 2 {
            let g = family(FamilySpec::Circ1k(n, k));
            let gens = generating_cycles(n, k).unwrap();
            // parity closure: blue parity of a cycle is the sum over its decomposition
            for cyc in g.simple_cycles() {
                let parts = cycle_space_decompose(n, k, &cyc).map_err(|e| e.to_string())?;
                let mut sum = vec![false; g.edge_count()];
                for p in &parts {
                    ensure(gens.contains(p), || {
                        format!("Circ({n},{k}): {p:?} is not generating")
                    })?;
                    for e in g.cycle_edge_ids(&p.vertices).unwrap() {
                        sum[e] ^= true;
                    }
                }
                let mut own = vec![false; g.edge_count()];
                for e in g.cycle_edge_ids(&cyc).unwrap() {
                    own[e] = true;
                }
                ensure(sum == own, || {
                    format!("Circ({n},{k}): {cyc:?} decomposes wrongly")
                })?;
                let mask: u64 = rng.gen::<u64>() & ((1u64 << g.edge_count()) - 1);
                let c = EdgeColoring::from_red_mask(&g, mask);
                let blue = |edges: Vec<usize>| edges.iter().filter(|&&e| !c.is_red(e)).count() % 2;
                let parity = parts
                    .iter()
                    .map(|p| blue(g.cycle_edge_ids(&p.vertices).unwrap()))
                    .sum::<usize>()
                    % 2;
                ensure(parity == blue(g.cycle_edge_ids(&cyc).unwrap()), || {
                    format!("Circ({n},{k}): parity of {cyc:?} is not additive")
                })?;
                count += 1;
            }
            // labeling to coloring: a 2-odd labeling induces a condition-passing coloring
            if let TwoOddColoringOutcome::Coloring(c) = circulant_2odd_coloring(n, k).unwrap() {
                let l = construct_2odd_labeling(&g, &c).map_err(|e| e.to_string())?;
                ensure(verify_labeling(&g, &l, Mode::TwoOdd).valid, || {
                    format!("Circ({n},{k}) 2-odd")
                })?;
                let back = labeling_to_coloring(&g, &l).map_err(|e| e.to_string())?;
                ensure(verify_coloring_conditions(&g, &back).satisfied, || {
                    format!("Circ({n},{k}) induced coloring fails")
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} property checks"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            1,
            "exact labelings",
            Duration::from_secs(1),
            c1_exact_labelings,
        ),
        (
            2,
            "cycle constructor sweep",
            Duration::from_secs(30),
            c2_cycle_constructors,
        ),
        (
            3,
            "windmills and paper mills",
            Duration::from_secs(30),
            c3_windmills,
        ),
        (
            4,
            "2-odd circulant colorings",
            Duration::from_secs(60),
            c4_circulant_colorings,
        ),
        (
            5,
            "characterization vs cycle oracle",
            Duration::from_secs(600),
            c5_characterization,
        ),
        (
            6,
            "impossibility results",
            Duration::from_secs(660),
            c6_impossibility,
        ),
        (
            7,
            "conjecture sweep n <= 14",
            Duration::from_secs(1800),
            c7_sweep,
        ),
        (
            8,
            "formula repairs",
            Duration::from_secs(600),
            c8_formula_repairs,
        ),
        (
            9,
            "property suites",
            Duration::from_secs(600),
            c9_properties,
        ),
    ];
    let mut failed = 0;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        let verdict = match &result {
            Ok(_) if start.elapsed() <= limit => "PASS",
            _ => "FAIL",
        };
        let detail = match result {
            Ok(d) => d,
            Err(e) => e,
        };
        println!(
            "criterion {id} [{name}]: {verdict} ({secs:.2}s, limit {}s) {detail}",
            limit.as_secs()
        );
        if verdict == "FAIL" {
            failed += 1;
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
