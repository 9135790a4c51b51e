use proptest::prelude::*;

use prime_distance::coloring::{
    construct_2odd_labeling, cycle_space_decompose, find_2odd_coloring, labeling_to_coloring,
    verify_coloring_conditions, TwoOddColoringOutcome,
};
use prime_distance::graph::{generate, FamilySpec};
use prime_distance::labeling::{verify_labeling, Mode};
use prime_distance::numtheory::{goldbach_pair, is_prime, prime_sum};
use prime_distance::search::{decide_prime_distance, DecisionOutcome, SearchConfig};
use prime_distance::{EdgeColoring, Graph, Labeling};

fn trial_division(n: i64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Random simple graph on up to `max_n` vertices.
fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let m = pairs.len();
        proptest::collection::vec(any::<bool>(), m).prop_map(move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e);
            Graph::new(n, edges).unwrap()
        })
    })
}

fn naive_valid(g: &Graph, l: &[i64], mode: Mode) -> bool {
    let distinct = (0..l.len()).all(|i| (i + 1..l.len()).all(|j| l[i] != l[j]));
    distinct
        && g.edges().iter().all(|&(u, v)| {
            let d = (l[u] - l[v]).abs();
            match mode {
                Mode::PrimeDistance => trial_division(d),
                Mode::TwoOdd => d == 2 || d % 2 == 1,
            }
        })
}

/// Every coloring of a graph with few edges; `true` if one passes.
fn brute_two_odd(g: &Graph) -> bool {
    (0..1u64 << g.edge_count())
        .any(|mask| verify_coloring_conditions(g, &EdgeColoring::from_red_mask(g, mask)).satisfied)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn verifier_matches_naive(g in graph(7), raw in proptest::collection::vec(-30i64..30, 7)) {
        let l = &raw[..g.vertex_count()];
        for mode in [Mode::PrimeDistance, Mode::TwoOdd] {
            let r = verify_labeling(&g, &Labeling::new(l.to_vec()), mode);
            prop_assert_eq!(r.valid, naive_valid(&g, l, mode));
            prop_assert_eq!(r.valid, r.failures.is_empty());
        }
    }

    #[test]
    fn induced_coloring_of_2odd_labeling_passes(raw in proptest::collection::btree_set(-40i64..40, 2..9)) {
        // the graph of all 2-odd pairs among the labels
        let labels: Vec<i64> = raw.into_iter().collect();
        let n = labels.len();
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| {
            let d = (labels[u] - labels[v]).abs();
            d == 2 || d % 2 == 1
        });
        let g = Graph::new(n, edges.collect::<Vec<_>>()).unwrap();
        let l = Labeling::new(labels);
        let c = labeling_to_coloring(&g, &l).unwrap();
        prop_assert!(verify_coloring_conditions(&g, &c).satisfied);
        let rebuilt = construct_2odd_labeling(&g, &c).unwrap();
        prop_assert!(verify_labeling(&g, &rebuilt, Mode::TwoOdd).valid);
        prop_assert_eq!(labeling_to_coloring(&g, &rebuilt).unwrap(), c);
    }

    #[test]
    fn coloring_search_matches_exhaustion(g in graph(6)) {
        prop_assume!(g.edge_count() <= 12);
        let found = match find_2odd_coloring(&g, u64::MAX) {
            TwoOddColoringOutcome::Coloring(c) => {
                prop_assert!(verify_coloring_conditions(&g, &c).satisfied);
                true
            }
            TwoOddColoringOutcome::NotTwoOdd(_) => false,
            TwoOddColoringOutcome::Unknown { .. } => unreachable!("unbounded budget"),
        };
        prop_assert_eq!(found, brute_two_odd(&g));
    }

    #[test]
    fn search_witnesses_verify(g in graph(6)) {
        let cfg = SearchConfig { label_bound: 30, ..Default::default() };
        match decide_prime_distance(&g, &cfg) {
            DecisionOutcome::Witness { labeling, .. } => {
                prop_assert!(verify_labeling(&g, &labeling, Mode::PrimeDistance).valid);
            }
            DecisionOutcome::ProvenNot { .. } => prop_assert!(!brute_two_odd(&g)),
            DecisionOutcome::NoWithinBound { .. } => {}
            other => prop_assert!(false, "unexpected {:?}", other),
        }
    }

    #[test]
    fn goldbach_and_prime_sums(half in 6u64..5000, terms in 2usize..=6) {
        let m = 2 * half;
        let pair = goldbach_pair(m, m).unwrap();
        prop_assert_eq!(pair.parts.iter().sum::<u64>(), m);
        prop_assert!(pair.parts.iter().all(|&p| is_prime(p as i64)));
        // a sum of an odd number of odd primes is odd
        let target = if terms % 2 == 0 { m } else { m + 3 };
        let d = prime_sum(target, terms).unwrap();
        prop_assert_eq!(d.parts.len(), terms);
        prop_assert_eq!(d.parts.iter().sum::<u64>(), target);
        prop_assert!(d.parts.windows(2).all(|w| w[0] >= w[1]));
        prop_assert!(d.parts.iter().all(|&p| trial_division(p as i64)));
    }

    #[test]
    fn family_strings_round_trip(n in 3usize..20, k in 1usize..10) {
        prop_assume!(k <= n / 2);
        let spec = FamilySpec::Circ1k(n, k);
        let parsed: FamilySpec = spec.to_string().parse().unwrap();
        prop_assert_eq!(&parsed, &spec);
        let g = generate(&spec).unwrap();
        prop_assert_eq!(Graph::from_json_str(&g.to_json_string()).unwrap(), g);
    }

    #[test]
    fn decomposition_covers_random_cycles(n in 3usize..=9, k in 1usize..=4, pick in any::<prop::sample::Index>()) {
        prop_assume!(k <= n / 2);
        let g = generate(&FamilySpec::Circ1k(n, k)).unwrap();
        let cycles = g.simple_cycles();
        let cyc = &cycles[pick.index(cycles.len())];
        let parts = cycle_space_decompose(n, k, cyc).unwrap();
        let mut sum = vec![false; g.edge_count()];
        for p in &parts {
            for e in g.cycle_edge_ids(&p.vertices).unwrap() {
                sum[e] ^= true;
            }
        }
        let mut own = vec![false; g.edge_count()];
        for e in g.cycle_edge_ids(cyc).unwrap() {
            own[e] = true;
        }
        prop_assert_eq!(sum, own);
    }
}
