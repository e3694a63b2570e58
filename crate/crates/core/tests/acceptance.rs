//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits non-zero
//! if any criterion fails. All comparisons are exact.

mod common;

use std::time::Instant;

use berge_core::constructions::*;
use berge_core::engine::{berge_matching, contains_berge, AuxiliaryBipartite, MatchOutcome};
use berge_core::hrg::{parse_coloring, serialize_coloring};
use berge_core::search::{
    all_colorings_contain, ramsey_value, search_with, verify_coloring, SearchCertificate,
    SearchConfig, Target, TargetSpec, Verdict,
};
use berge_core::trees::{
    classify_tree, generate_trees, product_exceeds_shifted_sum, tree_bijection, SpecialTree,
    TreeClass,
};
use berge_core::Graph;
use common::*;
use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Randomized oracle comparisons, per the criterion.
const CONTAINMENT_INSTANCES: usize = 200;
const MATCHING_INSTANCES: usize = 500;
const GOODNESS_INSTANCES: usize = 2000;
const PRODUCT_TUPLES: usize = 10_000;
const ERDOS_ATTEMPTS: usize = 100;
const ERDOS_SEEDS: u64 = 5;

struct Outcome {
    passed: bool,
    summary: String,
    failures: Vec<String>,
}

impl Outcome {
    fn new(summary: impl Into<String>, failures: Vec<String>) -> Self {
        Outcome {
            passed: failures.is_empty(),
            summary: summary.into(),
            failures,
        }
    }
}

fn trees(k: usize) -> Vec<Graph> {
    generate_trees(k).unwrap()
}

/// Checks a claimed value: `ALL_CONTAIN` at `expected`, a re-verified counterexample below it.
fn check_value(targets: &TargetSpec, expected: usize, failures: &mut Vec<String>) -> usize {
    let cfg = SearchConfig::new(true);
    match ramsey_value(3, 2, targets, 1, 7, &cfg) {
        Ok(v) => {
            let text = serialize_coloring(&v.lower);
            let reparsed = parse_coloring(&text).unwrap();
            let clean = verify_coloring(&reparsed, targets)
                .unwrap()
                .iter()
                .all(|r| r.witness.is_none());
            let cert = SearchCertificate::parse(&v.upper.to_text()).unwrap();
            if !clean || !cert.verdict.is_all_contain() {
                failures.push(format!("R({targets}): certificate did not re-verify"));
            }
            if v.value != expected {
                failures.push(format!(
                    "R({targets}) = {} by exhaustive search (counterexample on {} vertices: {:?}), claimed {expected}",
                    v.value,
                    v.lower.base().n_vertices(),
                    v.lower.colors()
                ));
            }
            v.value
        }
        Err(e) => {
            failures.push(format!("R({targets}): {e}"));
            0
        }
    }
}

fn criterion_1() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for k in 2..=5 {
        for a in trees(k) {
            for b in trees(k) {
                let both_stars = k == 5 && a == Graph::star(5) && b == Graph::star(5);
                let claimed = match (k, both_stars) {
                    (5, true) => 6,
                    (5, false) => 5,
                    _ => k + 1,
                };
                check_value(&TargetSpec::graphs(&[a.clone(), b]), claimed, &mut failures);
                checked += 1;
            }
        }
    }
    for i in 3..=5 {
        for j in 2..i {
            for a in trees(i) {
                for b in trees(j) {
                    check_value(&TargetSpec::graphs(&[a.clone(), b]), i, &mut failures);
                    checked += 1;
                }
            }
        }
    }
    Outcome::new(
        format!("small Berge tree Ramsey values, {checked} ordered tree pairs"),
        failures,
    )
}

fn criterion_2() -> Outcome {
    let mut failures = Vec::new();
    check_value(&TargetSpec::parse("K4,K3").unwrap(), 5, &mut failures);
    for (n, m) in [(4, 3), (4, 4), (5, 3)] {
        let col = construct_prop5_lower(n, m).unwrap();
        let targets = TargetSpec::parse(&format!("K{n},K{m}")).unwrap();
        let report = verify_coloring(&col, &targets).unwrap();
        if report.iter().any(|r| r.witness.is_some()) {
            failures.push(format!("lower-bound coloring for (n,m)=({n},{m}) contains a target"));
        }
    }
    Outcome::new("R(K4,K3)=5 and lower-bound colorings for (4,3),(4,4),(5,3)", failures)
}

fn criterion_3() -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    let mut expect = |what: String, checks: Vec<PropertyCheck>| {
        count += 1;
        for p in checks.iter().filter(|p| !p.passed) {
            failures.push(format!("{what}: {}", p.name));
        }
    };
    for c in [2u8, 3] {
        for n in 2 * c as usize..=10 {
            let col = construct_theorem2_lower(n, c).unwrap();
            expect(format!("thm2 n={n} c={c}"), theorem2_properties(&col));
        }
    }
    for c in 2u8..=4 {
        for r in 3..=5usize {
            if r >= 2 * c as usize {
                continue;
            }
            for n in 1..=40 {
                let s = theorem3i_part_size(n, c);
                if s == 0 || c as usize * s > 12 {
                    continue;
                }
                let col = construct_theorem3i_lower(n, c, r).unwrap();
                expect(format!("thm3i n={n} c={c} r={r}"), theorem3i_properties(&col, n));
            }
        }
    }
    for k in 3..=6 {
        let col = construct_prop7_lower(k).unwrap();
        expect(format!("prop7 k={k}"), prop7_properties(&col, k));
    }
    expect("s5 cyclic".into(), s5_cyclic_properties(&construct_s5_cyclic()));
    for n in 4..=6 {
        for seed in 0..3 {
            let p4 = construct_prop4(n, 3, seed).unwrap();
            let targets = TargetSpec::new(vec![Target::Complete(n); 3]);
            let report = verify_coloring(&p4.coloring, &targets).unwrap();
            let mut checks = prop4_properties(&p4);
            checks.push(PropertyCheck {
                name: "no_monochromatic_berge_k_n".into(),
                passed: report.iter().all(|r| r.witness.is_none()),
            });
            expect(format!("prop4 n={n} c=3 seed={seed}"), checks);
        }
    }
    Outcome::new(format!("construction certificates, {count} instances"), failures)
}

fn criterion_4() -> Outcome {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(4);

    for i in 0..CONTAINMENT_INSTANCES {
        let n = rng.gen_range(2..=5);
        let r = rng.gen_range(2..=n.min(4));
        let p = rng.gen_range(0.2..0.9);
        let h = random_hypergraph(&mut rng, r, n, p);
        let k = rng.gen_range(1..=n);
        let p = rng.gen_range(0.2..0.8);
        let g = random_graph(&mut rng, k, p);
        let fast = contains_berge(&h, &g);
        if let Some(emb) = &fast {
            if let Err(e) = emb.validate(&g, &h) {
                failures.push(format!("containment instance {i}: invalid embedding: {e}"));
            }
        }
        if fast.is_some() != brute_contains_berge(&h, &g) {
            failures.push(format!("containment instance {i}: disagrees with brute force"));
        }
    }

    for i in 0..MATCHING_INSTANCES {
        let a = rng.gen_range(0..=6);
        let b = rng.gen_range(0..=8);
        let p = rng.gen_range(0.1..0.7);
        let adjacency: Vec<Vec<usize>> = (0..a).map(|_| (0..b).filter(|_| rng.gen_bool(p)).collect()).collect();
        let gamma = AuxiliaryBipartite {
            part_a: (0..a).map(|x| (x, x + 1)).collect(),
            part_b: (0..b).map(|y| vec![y]).collect(),
            adjacency: adjacency.clone(),
        };
        let exists = brute_sdr(&adjacency);
        match berge_matching(&gamma) {
            MatchOutcome::Saturating(assign) => {
                let distinct = assign.iter().all_unique();
                let adjacent = assign.iter().enumerate().all(|(x, y)| adjacency[x].contains(y));
                if !exists || !distinct || !adjacent || assign.len() != a {
                    failures.push(format!("matching instance {i}: bad saturating matching"));
                }
            }
            MatchOutcome::Blocked(v) => {
                let nbrs: Vec<usize> = v.edges.iter().flat_map(|&x| adjacency[x].iter().copied()).unique().sorted().collect();
                let mut claimed = v.neighbors.clone();
                claimed.sort_unstable();
                if exists || nbrs != claimed || nbrs.len() >= v.edges.len() {
                    failures.push(format!("matching instance {i}: bad Hall violator"));
                }
            }
        }
    }

    for i in 0..GOODNESS_INSTANCES {
        let nv = rng.gen_range(1..=7);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, nv, p);
        let r = rng.gen_range(2..=6);
        let n = rng.gen_range(nv.max(r - 2)..=nv + 4);
        let offset = rng.gen_range(1..=2);
        let fast = is_good(&g, n, r, offset).unwrap();
        if fast.is_some() != brute_is_good(&g, n, r, offset) {
            failures.push(format!("goodness instance {i}: disagrees with the all-subsets oracle"));
        }
        if let Some(w) = fast {
            if w.v1.len() != r - 2 || w.margins.iter().any(|&m| m < 0) {
                failures.push(format!("goodness instance {i}: malformed witness"));
            }
        }
    }
    Outcome::new(
        format!(
            "oracle agreement: {CONTAINMENT_INSTANCES} containment, {MATCHING_INSTANCES} matching, {GOODNESS_INSTANCES} goodness instances"
        ),
        failures,
    )
}

fn criterion_5() -> Outcome {
    let mut failures = Vec::new();
    let mut n_trees = 0;
    for n in 1..=8 {
        for t in trees(n) {
            n_trees += 1;
            for root in 0..n {
                let f = tree_bijection(&t, root).unwrap();
                let keys_ok = f.keys().copied().eq((0..n).filter(|&v| v != root));
                let mut images: Vec<(usize, usize)> = f.values().copied().collect();
                images.sort_unstable();
                let onto = images == t.edges();
                let contains = f.iter().all(|(&u, &(a, b))| u == a || u == b);
                if !(keys_ok && onto && contains) {
                    failures.push(format!("bijection fails on {:?} rooted at {root}", t.edges()));
                }
            }
            if n >= 6 {
                if let Err(msg) = check_classification(&t) {
                    failures.push(format!("classification of {:?}: {msg}", t.edges()));
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..PRODUCT_TUPLES {
        let c = rng.gen_range(1..=8);
        let ns: Vec<u64> = (0..c).map(|_| rng.gen_range(1..=30)).collect();
        let product: u128 = ns.iter().map(|&x| x as u128).product();
        let sum: u128 = ns.iter().map(|&x| x as u128).sum();
        if !product_exceeds_shifted_sum(&ns) || product + c as u128 <= sum {
            failures.push(format!("product inequality fails on {ns:?}"));
        }
    }
    Outcome::new(
        format!("tree bijection on {n_trees} trees x all roots, classification n=6..8, {PRODUCT_TUPLES} product tuples"),
        failures,
    )
}

fn check_classification(t: &Graph) -> Result<(), String> {
    let class = classify_tree(t).map_err(|e| e.to_string())?;
    let (i, ii, iii) = (tree_case_i(t), tree_case_ii(t), tree_case_iii(t));
    if !(i || ii || iii) {
        return Err("no case holds by brute force".into());
    }
    match class {
        TreeClass::CaseIII(kind) => {
            let ok = match kind {
                SpecialTree::Star => is_star(t),
                SpecialTree::P6 => brute_graph_key(t) == brute_graph_key(&Graph::path(6)),
            };
            ok.then_some(()).ok_or_else(|| "case (iii) witness wrong".to_string())
        }
        TreeClass::CaseII { independent, adjacent } => {
            if iii {
                return Err("case (iii) holds but (ii) was returned".into());
            }
            let covers = |(a, b): ((usize, usize), (usize, usize))| {
                let vs = [a.0, a.1, b.0, b.1];
                t.has_edge(a.0, a.1)
                    && t.has_edge(b.0, b.1)
                    && t.edges().iter().all(|e| vs.contains(&e.0) || vs.contains(&e.1))
            };
            let shares = |(a, b): ((usize, usize), (usize, usize))| {
                a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1
            };
            (covers(independent) && !shares(independent) && covers(adjacent) && shares(adjacent) && adjacent.0 != adjacent.1)
                .then_some(())
                .ok_or_else(|| "case (ii) witness wrong".to_string())
        }
        TreeClass::CaseI { vertex, hub, kept, reduced } => {
            if ii || iii {
                return Err("a preferred case holds but (i) was returned".into());
            }
            let leaf = |v: usize| t.degree(v) == 1;
            let inner: Vec<usize> = t.neighbors(vertex).iter().copied().filter(|&w| !leaf(w)).collect();
            let expect_kept: Vec<usize> = (0..t.n_vertices())
                .filter(|&w| w != vertex && !(leaf(w) && t.has_edge(vertex, w)))
                .collect();
            let ok = !leaf(vertex)
                && inner == vec![hub]
                && kept == expect_kept
                && reduced == t.induced(&kept)
                && reduced.is_tree()
                && (kept.len() >= 6 || (kept.len() == 5 && !is_star(&reduced)));
            ok.then_some(()).ok_or_else(|| "case (i) witness wrong".to_string())
        }
    }
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    for (n, bound) in [(8, 6), (16, 8), (32, 10)] {
        if clique_bound(n) != bound {
            failures.push(format!("clique bound for n={n} is {}, expected {bound}", clique_bound(n)));
        }
        for seed in 0..ERDOS_SEEDS {
            match erdos_coloring(n, seed, ERDOS_ATTEMPTS) {
                Ok(col) => {
                    let omega = bron_kerbosch(&col.class_masks(1)).max(bron_kerbosch(&col.class_masks(2)));
                    if omega >= bound || omega != col.max_clique_found {
                        failures.push(format!(
                            "n={n} seed={seed}: clique {omega}, reported {}",
                            col.max_clique_found
                        ));
                    }
                }
                Err(e) => failures.push(format!("n={n} seed={seed}: {e}")),
            }
        }
    }
    Outcome::new(format!("pair colorings for n in {{8,16,32}}, {ERDOS_SEEDS} seeds each"), failures)
}

/// Orbits of `c`-colorings of the `r`-subsets of `n` points under `S_n`.
fn burnside(n: usize, r: usize, c: u64) -> u64 {
    let subsets: Vec<Vec<usize>> = (0..n).combinations(r).collect();
    let mut total = 0;
    let mut count = 0;
    for perm in (0..n).permutations(n) {
        count += 1;
        let image = |s: &Vec<usize>| {
            let mut t: Vec<usize> = s.iter().map(|&v| perm[v]).collect();
            t.sort_unstable();
            subsets.iter().position(|u| *u == t).unwrap()
        };
        let mut seen = vec![false; subsets.len()];
        let mut cycles = 0;
        for start in 0..subsets.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = image(&subsets[i]);
            }
        }
        total += c.pow(cycles);
    }
    total / count
}

fn criterion_7() -> Outcome {
    let mut failures = Vec::new();
    let mut graphs: Vec<Graph> = (2..=5).flat_map(trees).collect();
    graphs.push(Graph::complete(3));
    graphs.push(Graph::complete(4));
    let mut suites: Vec<TargetSpec> = Vec::new();
    for a in &graphs {
        for b in &graphs {
            suites.push(TargetSpec::graphs(&[a.clone(), b.clone()]));
        }
    }
    for fam in ["tree4,tree4", "tree5,tree4", "tree5,tree5", "tree3,K3"] {
        suites.push(TargetSpec::parse(fam).unwrap());
    }
    let mut runs = 0;
    for targets in &suites {
        for n in 1..=5 {
            let on = all_colorings_contain(3, 2, targets, n, true).unwrap();
            let off = all_colorings_contain(3, 2, targets, n, false).unwrap();
            runs += 1;
            if on.verdict != off.verdict || on.canonical_classes != off.canonical_classes {
                failures.push(format!("N={n} targets {targets}: symmetry on/off disagree"));
            }
        }
    }
    let always = |c: u8| TargetSpec::new(vec![Target::Complete(1); c as usize]);
    for (r, c) in [(3usize, 2u8), (3, 3), (2, 2), (2, 3)] {
        let expected = burnside(4, r, c as u64);
        let on = all_colorings_contain(r, c, &always(c), 4, true).unwrap();
        let off = all_colorings_contain(r, c, &always(c), 4, false).unwrap();
        let threaded = search_with(
            r,
            c,
            &always(c),
            4,
            &SearchConfig {
                threads: 4,
                ..SearchConfig::new(true)
            },
        )
        .unwrap();
        let ok = on.verdict == Verdict::AllContain
            && on.colorings_enumerated == expected
            && on.canonical_classes == Some(expected)
            && off.canonical_classes == Some(expected)
            && threaded == on;
        if !ok {
            failures.push(format!(
                "N=4 r={r} c={c}: classes on={:?} off={:?}, Burnside {expected}",
                on.canonical_classes, off.canonical_classes
            ));
        }
    }
    Outcome::new(
        format!("symmetry on/off agreement on {runs} searches; Burnside orbit counts at N=4"),
        failures,
    )
}

fn main() {
    let criteria: [(usize, fn() -> Outcome); 7] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
    ];
    let mut all = true;
    for (id, run) in criteria {
        let start = Instant::now();
        let out = run();
        let secs = start.elapsed().as_secs_f64();
        let tag = if out.passed { "PASS" } else { "FAIL" };
        println!("{tag} criterion {id}: {} [{secs:.1}s]", out.summary);
        for f in &out.failures {
            println!("    {f}");
        }
        all &= out.passed;
    }
    if !all {
        std::process::exit(1);
    }
}
