//! Acceptance run: one line per criterion, nonzero exit if any fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use skelreal::cli::{Instance, InstanceFile};
use skelreal::explorer::{
    enumerate_realizations, fig2_instance, fig2_realizations, fig2_swap, verify_counterexample,
    EnumerationMode, OracleLimit,
};
use skelreal::graph::{
    decompose_into_alternating_circuits, symmetric_difference, DegreeSequence, LabeledGraph,
};
use skelreal::matching::{brute_force_max_matching, max_weight_perfect_matching, WeightedGraph};
use skelreal::skeleton::{Bone, Partition, SkeletonGraph};
use skelreal::solvers::{
    alpha_sweep, bipartition_range, bipartition_realize, crossing_count, even_cycle_alpha_range,
    even_cycle_realize, odd_cycle_weights, unicyclic_solve, BipartitionOutcome,
};
use skelreal::swaps::{apply_swap, regular_swap_sequence};
use skelreal::tutte::{build_gadget, count_canonical_matchings, FactorSpec};

const COUNTEREXAMPLE_BUDGET: Duration = Duration::from_secs(5);
const MATCHING_TRIALS: usize = 500;
const MATCHING_MAX_N: usize = 12;
const TUTTE_TRIALS: usize = 200;
const TUTTE_MAX_N: usize = 7;
const TUTTE_MAX_EDGES: usize = 14;
const LADDER_MAX_N: usize = 7;
const LADDER_MIN_PARTITIONS: usize = 100;
const SWAP_TRIALS: usize = 200;
const SWAP_MAX_N: usize = 9;
const ODD_CYCLE_TRIALS: usize = 100;
const EVEN_CYCLE_TRIALS: usize = 100;
const UNICYCLIC_TRIALS: usize = 50;
/// Instances are drawn with at most this many chords so the oracle stays fast.
const MAX_CHORDS: usize = 28;

struct Outcome {
    pass: bool,
    detail: String,
}

type Criterion = (&'static str, fn() -> Outcome);

fn outcome(failures: &[String], detail: String) -> Outcome {
    if failures.is_empty() {
        Outcome { pass: true, detail }
    } else {
        let shown: Vec<&str> = failures.iter().take(3).map(String::as_str).collect();
        Outcome {
            pass: false,
            detail: format!(
                "{detail}; {} failures, first: {}",
                failures.len(),
                shown.join(" | ")
            ),
        }
    }
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("counterexample reproduction", c1_counterexample),
        ("counterexample swap", c2_counterexample_swap),
        ("matching oracle equivalence", c3_matching),
        ("tutte bijection", c4_tutte),
        ("parity ladder", c5_ladder),
        ("regular swap sequences", c6_swap_sequences),
        ("odd cycle", c7_odd_cycle),
        ("even cycle", c8_even_cycle),
        ("unicyclic dispatch", c9_unicyclic),
        ("cli contract", c10_cli),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Outcome {
                pass: false,
                detail: format!("panicked: {msg}"),
            }
        });
        if !result.pass {
            failed += 1;
        }
        println!(
            "criterion {:>2} {} {name}: {} [{:.2?}]",
            i + 1,
            if result.pass { "PASS" } else { "FAIL" },
            result.detail,
            start.elapsed()
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

fn c1_counterexample() -> Outcome {
    let report = verify_counterexample().unwrap();
    let mut failures: Vec<String> = report
        .checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| format!("{}: {}", c.name, c.detail))
        .collect();
    if report.elapsed >= COUNTEREXAMPLE_BUDGET {
        failures.push(format!("took {:.2?}", report.elapsed));
    }
    let detail = format!(
        "{} realizations, swap components {:?}, with double swaps {:?}",
        report.realizations.len(),
        report.swap_components,
        report.double_components
    );
    outcome(&failures, detail)
}

fn c2_counterexample_swap() -> Outcome {
    let (d, s) = fig2_instance();
    let r = enumerate_realizations(&d, &s, EnumerationMode::Consistent, &OracleLimit::default())
        .unwrap();
    let [g1, g2, _] = fig2_realizations();
    let mut failures = Vec::new();
    let (Some(i1), Some(i2)) = (r.index_of(&g1), r.index_of(&g2)) else {
        return outcome(&["G1 or G2 not enumerated".into()], String::new());
    };
    let sw = fig2_swap();
    let from = r.get(i1).unwrap();
    match apply_swap(from, &sw) {
        Ok(h) if &h == r.get(i2).unwrap() => {}
        Ok(_) => failures.push("swap result is not G2".into()),
        Err(e) => failures.push(format!("swap not applicable: {e}")),
    }
    match skelreal::swaps::is_preserving(&sw, from, &s) {
        Ok(true) => {}
        other => failures.push(format!("is_preserving gave {other:?}")),
    }
    let name = |v: usize| skelreal::explorer::FIG2_LABELS[v];
    let text = format!("{}{},{}{}", name(sw.a), name(sw.b), name(sw.c), name(sw.d));
    outcome(&failures, format!("{text} takes G1 to G2"))
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> LabeledGraph {
    let mut g = LabeledGraph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

fn c3_matching() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut failures = Vec::new();
    let mut feasible = 0;
    for t in 0..MATCHING_TRIALS {
        let n = rng.gen_range(0..=MATCHING_MAX_N);
        let p = rng.gen_range(0.1..0.9);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v, rng.gen_range(-10..=20)));
                }
            }
        }
        let h = WeightedGraph::from_edges(n, edges).unwrap();
        let fast = max_weight_perfect_matching(&h);
        let slow = brute_force_max_matching(&h).unwrap();
        match (&fast, &slow) {
            (None, None) => {}
            (Some(a), Some(b)) => {
                feasible += 1;
                if a.total_weight != b.total_weight || !a.is_valid_perfect_for(&h) {
                    failures.push(format!(
                        "trial {t}: weight {} vs {}",
                        a.total_weight, b.total_weight
                    ));
                }
            }
            _ => failures.push(format!("trial {t}: feasibility differs")),
        }
    }
    outcome(
        &failures,
        format!("{MATCHING_TRIALS} graphs, {feasible} with a perfect matching"),
    )
}

/// Counts edge subsets of `g` whose degrees equal `f`.
fn count_f_factors(g: &LabeledGraph, f: &[usize]) -> u64 {
    let edges: Vec<_> = g.edges().collect();
    let mut count = 0;
    for mask in 0u32..(1 << edges.len()) {
        let mut deg = vec![0; g.n()];
        for (k, &(u, v)) in edges.iter().enumerate() {
            if mask >> k & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        if deg == f {
            count += 1;
        }
    }
    count
}

/// Counts perfect matchings by always matching the lowest free vertex.
fn count_perfect_matchings(h: &WeightedGraph) -> u64 {
    let n = h.n();
    let mut adj = vec![Vec::new(); n];
    for &(u, v, _) in h.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    fn go(adj: &[Vec<usize>], used: &mut [bool]) -> u64 {
        let Some(u) = used.iter().position(|&x| !x) else {
            return 1;
        };
        used[u] = true;
        let mut total = 0;
        for &v in &adj[u] {
            if !used[v] {
                used[v] = true;
                total += go(adj, used);
                used[v] = false;
            }
        }
        used[u] = false;
        total
    }
    go(&adj, &mut vec![false; n])
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

fn c4_tutte() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut failures = Vec::new();
    let (mut nonzero, mut raw_checked) = (0, 0);
    for t in 0..TUTTE_TRIALS {
        let n = rng.gen_range(1..=TUTTE_MAX_N);
        let p = rng.gen_range(0.2..0.9);
        let mut g = random_graph(&mut rng, n, p);
        let mut edges: Vec<_> = g.edges().collect();
        edges.shuffle(&mut rng);
        for &(u, v) in edges.iter().skip(TUTTE_MAX_EDGES) {
            g.remove_edge(u, v).unwrap();
        }
        let f: Vec<usize> = if rng.gen_bool(0.6) {
            let sub = LabeledGraph::from_edges(
                n,
                g.edges().filter(|_| rng.gen_bool(0.5)).collect::<Vec<_>>(),
            )
            .unwrap();
            sub.degree_sequence().0
        } else {
            (0..n).map(|v| rng.gen_range(0..=g.degree(v))).collect()
        };
        let want = count_f_factors(&g, &f);
        let gadget = build_gadget(&FactorSpec::new(g.clone(), f.clone()).unwrap(), |_| 0).unwrap();
        let got = count_canonical_matchings(&gadget);
        if want > 0 {
            nonzero += 1;
        }
        if want != got {
            failures.push(format!(
                "trial {t}: {want} f-factors, {got} canonical matchings"
            ));
        }
        // Every f-factor lifts to the same number of raw matchings.
        let lift: u64 = (0..n).map(|v| factorial(g.degree(v) - f[v])).product();
        if lift <= 24 && gadget.graph.n() <= 40 && want <= 200 {
            raw_checked += 1;
            let raw = count_perfect_matchings(&gadget.graph);
            if raw != want * lift {
                failures.push(format!(
                    "trial {t}: {raw} raw matchings, expected {want} x {lift}"
                ));
            }
        }
    }
    outcome(
        &failures,
        format!("{TUTTE_TRIALS} pairs, {nonzero} with an f-factor, raw matching count checked on {raw_checked}"),
    )
}

fn erdos_gallai(d: &[usize]) -> bool {
    if d.iter().sum::<usize>() % 2 == 1 {
        return false;
    }
    let n = d.len();
    (1..=n).all(|k| {
        let left: usize = d[..k].iter().sum();
        let right: usize = k * (k - 1) + d[k..].iter().map(|&x| x.min(k)).sum::<usize>();
        left <= right
    })
}

/// Nonincreasing sequences of length `n` with entries below `n`.
fn sorted_sequences(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in 0..=max {
            cur.push(x);
            go(n, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n - 1, &mut Vec::new(), &mut out);
    out
}

fn c5_ladder() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut failures = Vec::new();
    let (mut sequences, mut partitions) = (0, 0);
    for n in 2..=LADDER_MAX_N {
        for seq in sorted_sequences(n).into_iter().filter(|s| erdos_gallai(s)) {
            sequences += 1;
            let d = DegreeSequence::new(seq.clone());
            let whole = SkeletonGraph::all_chords(Partition::from_class_of(vec![0; n]).unwrap());
            let all =
                enumerate_realizations(&d, &whole, EnumerationMode::Weak, &OracleLimit::default())
                    .unwrap();
            for _ in 0..2 {
                partitions += 1;
                let mut class_of: Vec<usize> = (0..n).map(|_| rng.gen_range(0..2)).collect();
                class_of[0] = 0;
                class_of[rng.gen_range(1..n)] = 1;
                let p = Partition::from_class_of(class_of.clone()).unwrap();
                let seen: BTreeSet<usize> =
                    all.graphs().iter().map(|g| crossing_count(g, &p)).collect();
                let tag = format!("d={seq:?} classes={class_of:?}");
                let Some(range) = bipartition_range(&d, &p).unwrap() else {
                    failures.push(format!("{tag}: no range"));
                    continue;
                };
                let ladder: BTreeSet<usize> = (range.eps_min..=range.eps_max).step_by(2).collect();
                if ladder != seen {
                    failures.push(format!("{tag}: ladder {ladder:?}, oracle {seen:?}"));
                }
                for k in 0..=d.sum() / 2 {
                    match bipartition_realize(&d, &p, k).unwrap() {
                        BipartitionOutcome::Realized(g) => {
                            if !seen.contains(&k)
                                || g.degree_sequence() != d
                                || crossing_count(&g, &p) != k
                            {
                                failures.push(format!("{tag}: bad witness for k={k}"));
                            }
                        }
                        _ if seen.contains(&k) => failures.push(format!("{tag}: k={k} missed")),
                        _ => {}
                    }
                }
            }
        }
    }
    let detail = format!("{sequences} sorted graphical sequences, {partitions} bipartitions");
    if partitions < LADDER_MIN_PARTITIONS {
        failures.push(format!("only {partitions} bipartitions"));
    }
    outcome(&failures, detail)
}

/// Applies up to `steps` random swaps to `g`, each built from two random edges.
fn swap_walk(rng: &mut ChaCha8Rng, g: &LabeledGraph, steps: usize) -> LabeledGraph {
    let mut h = g.clone();
    for _ in 0..steps {
        let edges: Vec<_> = h.edges().collect();
        if edges.len() < 2 {
            break;
        }
        let pick: Vec<_> = edges.choose_multiple(rng, 2).copied().collect();
        let ((a, b), (mut c, mut d)) = (pick[0], pick[1]);
        if rng.gen_bool(0.5) {
            std::mem::swap(&mut c, &mut d);
        }
        if let Ok(sw) = skelreal::swaps::Swap::new(a, b, c, d) {
            if sw.is_applicable(&h) {
                h = apply_swap(&h, &sw).unwrap();
            }
        }
    }
    h
}

fn c6_swap_sequences() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut failures = Vec::new();
    let (mut total_len, mut total_bound, mut multi) = (0, 0, 0);
    for t in 0..SWAP_TRIALS {
        let n = rng.gen_range(4..=SWAP_MAX_N);
        let p = rng.gen_range(0.2..0.8);
        let g = random_graph(&mut rng, n, p);
        let steps = rng.gen_range(1..=60);
        let g2 = swap_walk(&mut rng, &g, steps);
        let delta = symmetric_difference(&g, &g2).unwrap();
        let circuits = decompose_into_alternating_circuits(&delta).unwrap();
        if circuits.len() > 1 {
            multi += 1;
        }
        let bound = delta.r() - circuits.len();
        let seq = match regular_swap_sequence(&g, &g2) {
            Ok(seq) => seq,
            Err(e) => {
                failures.push(format!("trial {t}: {e}"));
                continue;
            }
        };
        let d = g.degree_sequence();
        let mut h = g.clone();
        for sw in &seq {
            match apply_swap(&h, sw) {
                Ok(next) if next.degree_sequence() == d => h = next,
                _ => {
                    failures.push(format!("trial {t}: {sw} does not apply"));
                    break;
                }
            }
        }
        if h != g2 {
            failures.push(format!("trial {t}: replay misses the target"));
        }
        if seq.len() > bound {
            failures.push(format!("trial {t}: {} swaps, bound {bound}", seq.len()));
        }
        total_len += seq.len();
        total_bound += bound;
    }
    outcome(
        &failures,
        format!("{SWAP_TRIALS} pairs ({multi} with several circuits), {total_len} swaps against a bound of {total_bound}"),
    )
}

/// Class sizes up to `max` whose bones hold at most `MAX_CHORDS` chords.
fn class_sizes(
    rng: &mut ChaCha8Rng,
    classes: usize,
    bones: &[(usize, usize)],
    max: usize,
) -> Vec<usize> {
    loop {
        let sizes: Vec<usize> = (0..classes).map(|_| rng.gen_range(1..=max)).collect();
        let chords: usize = bones.iter().map(|&(a, b)| sizes[a] * sizes[b]).sum();
        if chords <= MAX_CHORDS {
            return sizes;
        }
    }
}

/// A skeleton with unspecified weights, and a degree sequence that is usually
/// realizable by a random chord subset.
fn random_instance(
    rng: &mut ChaCha8Rng,
    classes: usize,
    bones: &[(usize, usize)],
    max_size: usize,
) -> (DegreeSequence, SkeletonGraph) {
    let sizes = class_sizes(rng, classes, bones, max_size);
    let class_of: Vec<usize> = sizes
        .iter()
        .enumerate()
        .flat_map(|(c, &k)| std::iter::repeat_n(c, k))
        .collect();
    let n = class_of.len();
    let p = Partition::from_class_of(class_of).unwrap();
    let s = SkeletonGraph::new(
        p,
        bones.iter().map(|&(a, b)| Bone::new(a, b, None)).collect(),
    )
    .unwrap();
    let d = if rng.gen_bool(0.8) {
        let keep = rng.gen_range(0.2..0.9);
        let edges: Vec<_> = s
            .chords()
            .into_iter()
            .filter(|_| rng.gen_bool(keep))
            .collect();
        LabeledGraph::from_edges(n, edges)
            .unwrap()
            .degree_sequence()
    } else {
        let cap = s.chord_graph();
        DegreeSequence::new((0..n).map(|v| rng.gen_range(0..=cap.degree(v))).collect())
    };
    (d, s)
}

fn cycle_bones(len: usize) -> Vec<(usize, usize)> {
    (0..len).map(|i| (i, (i + 1) % len)).collect()
}

fn weak_oracle(d: &DegreeSequence, s: &SkeletonGraph) -> Vec<LabeledGraph> {
    enumerate_realizations(d, s, EnumerationMode::Weak, &OracleLimit::default())
        .unwrap()
        .graphs()
        .to_vec()
}

fn c7_odd_cycle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut failures = Vec::new();
    let mut feasible = 0;
    for t in 0..ODD_CYCLE_TRIALS {
        let len = if rng.gen_bool(0.6) { 3 } else { 5 };
        let (d, s) = random_instance(&mut rng, len, &cycle_bones(len), 3);
        let oracle = weak_oracle(&d, &s);
        let solution = odd_cycle_weights(&d, &s).unwrap();
        let solver_feasible =
            solution.is_some() && skelreal::tutte::weak_realize(&d, &s).unwrap().is_some();
        if solver_feasible != !oracle.is_empty() {
            failures.push(format!(
                "trial {t}: solver {solver_feasible}, oracle {} realizations",
                oracle.len()
            ));
            continue;
        }
        if let Some(sol) = solution.filter(|_| solver_feasible) {
            feasible += 1;
            if oracle.iter().any(|g| s.bone_counts(g) != sol.weights) {
                failures.push(format!(
                    "trial {t}: oracle bone counts differ from {:?}",
                    sol.weights
                ));
            }
        }
    }
    outcome(
        &failures,
        format!("{ODD_CYCLE_TRIALS} instances, {feasible} feasible"),
    )
}

fn c8_even_cycle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut failures = Vec::new();
    let (mut feasible, mut wide, mut values, mut violations, mut fallbacks) = (0, 0, 0, 0, 0);
    for t in 0..EVEN_CYCLE_TRIALS {
        let len = if rng.gen_bool(0.6) { 4 } else { 6 };
        let (d, s) = random_instance(&mut rng, len, &cycle_bones(len), 4);
        let oracle = weak_oracle(&d, &s);
        let range = even_cycle_alpha_range(&d, &s).unwrap();
        let Some(range) = range else {
            if !oracle.is_empty() {
                failures.push(format!(
                    "trial {t}: no range but {} realizations",
                    oracle.len()
                ));
            }
            continue;
        };
        feasible += 1;
        if range.alpha_max > range.alpha_min {
            wide += 1;
        }
        let bone = range.bone;
        let seen: BTreeSet<u64> = oracle.iter().map(|g| s.bone_counts(g)[bone]).collect();
        let interval: BTreeSet<u64> = (range.alpha_min..=range.alpha_max).collect();
        if seen != interval {
            failures.push(format!("trial {t}: interval {interval:?}, oracle {seen:?}"));
        }
        let sweep = alpha_sweep(&d, &s, bone, &OracleLimit::default())
            .unwrap()
            .unwrap();
        violations += sweep.violations;
        fallbacks += sweep.fallbacks;
        if !sweep.missing.is_empty() {
            failures.push(format!("trial {t}: sweep missed {:?}", sweep.missing));
        }
        for alpha in range.alpha_min..=range.alpha_max {
            values += 1;
            match even_cycle_realize(&d, &s, alpha).unwrap() {
                Some(g) => {
                    let counts = s.bone_counts(&g);
                    let fixed = s
                        .with_weights(&counts.iter().map(|&c| Some(c)).collect::<Vec<_>>())
                        .unwrap();
                    let ok = g.degree_sequence() == d
                        && counts[bone] == alpha
                        && fixed.check_consistency(&g).unwrap().is_consistent();
                    if !ok {
                        failures.push(format!("trial {t}: invalid witness for alpha={alpha}"));
                    }
                }
                None => failures.push(format!("trial {t}: no witness for alpha={alpha}")),
            }
        }
    }
    outcome(
        &failures,
        format!(
            "{EVEN_CYCLE_TRIALS} instances, {feasible} feasible ({wide} with several alpha), {values} alpha values, \
             {violations} step violations, {fallbacks} enumeration fallbacks"
        ),
    )
}

/// A cycle of length 3 to 5 with pendant classes hung off earlier classes.
fn unicyclic_bones(rng: &mut ChaCha8Rng) -> (usize, Vec<(usize, usize)>) {
    let len = rng.gen_range(3..=5);
    let mut bones = cycle_bones(len);
    let extra = rng.gen_range(1..=3);
    for c in len..len + extra {
        bones.push((rng.gen_range(0..c), c));
    }
    bones.shuffle(rng);
    (len + extra, bones)
}

fn c9_unicyclic() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut failures = Vec::new();
    let (mut feasible, mut functions) = (0, 0);
    for t in 0..UNICYCLIC_TRIALS {
        let (classes, bones) = unicyclic_bones(&mut rng);
        let (d, s) = random_instance(&mut rng, classes, &bones, 3);
        let seen: BTreeSet<Vec<u64>> = weak_oracle(&d, &s)
            .iter()
            .map(|g| s.bone_counts(g))
            .collect();
        let solved = match unicyclic_solve(&d, &s) {
            Ok(sols) => sols,
            Err(e) => {
                failures.push(format!("trial {t}: {e}"));
                continue;
            }
        };
        let got: BTreeSet<Vec<u64>> = solved.iter().map(|w| w.weights.clone()).collect();
        if got != seen {
            failures.push(format!("trial {t}: solver {got:?}, oracle {seen:?}"));
        }
        for w in &solved {
            if s.bone_counts(&w.witness) != w.weights || w.witness.degree_sequence() != d {
                failures.push(format!(
                    "trial {t}: witness does not realize {:?}",
                    w.weights
                ));
            }
        }
        if !seen.is_empty() {
            feasible += 1;
        }
        functions += seen.len();
    }
    outcome(
        &failures,
        format!("{UNICYCLIC_TRIALS} skeletons, {feasible} feasible, {functions} weight functions"),
    )
}

fn c10_cli() -> Outcome {
    let mut failures = Vec::new();
    for (name, args) in common::GOLDEN_CASES {
        if let Err(e) = common::check_golden(name, args) {
            failures.push(e.lines().next().unwrap_or_default().to_string());
        }
    }
    for (args, env, code) in common::EXIT_CASES {
        let r = common::run(args, env);
        if r.code != *code {
            failures.push(format!("{args:?}: exit {} instead of {code}", r.code));
        }
    }
    let fixtures = [
        "fig2.json",
        "triangle.json",
        "even_cycle.json",
        "path_mismatch.json",
        "zero_degrees.json",
    ];
    for name in fixtures {
        let text = common::read(&common::fixture(name));
        let ok = InstanceFile::parse(&text)
            .ok()
            .filter(|f| f.emit() == text)
            .and_then(|f| Instance::from_file(&f).ok().map(|i| i.to_file() == f))
            .unwrap_or(false);
        if !ok {
            failures.push(format!("{name} does not round trip"));
        }
    }
    let detail = format!(
        "{} golden outputs, {} exit code cases, {} round trips",
        common::GOLDEN_CASES.len(),
        common::EXIT_CASES.len(),
        fixtures.len()
    );
    outcome(&failures, detail)
}
