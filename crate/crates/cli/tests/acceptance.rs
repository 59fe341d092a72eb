//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Run with `cargo test -p sumgraph --test acceptance`.

use std::sync::atomic::AtomicBool;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sumgraph::app;
use sumgraph::groups::{abelian_groups_of_order, abelian_groups_up_to};
use sumgraph::verify::{self, Outcome, VerifyConfig};
use sumgraph_core::abelian_group::make_group;
use sumgraph_core::cayley_graph::kappa_oracle;
use sumgraph_core::{AdditionCayleyGraph, Analyzer, Branch, Element, GSubset, GroupSpec, Subgroup};

const PROPERTY_CASES: usize = 10_000;

struct Line {
    id: &'static str,
    pass: bool,
    detail: String,
}

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn sweep(max_order: usize) -> (Outcome, Duration) {
    let config = VerifyConfig {
        max_order,
        sample_threshold: 16,
        jobs: jobs(),
        ..VerifyConfig::default()
    };
    let start = Instant::now();
    let out = verify::run(&config, &AtomicBool::new(false)).expect("sweep configuration is valid");
    (out, start.elapsed())
}

fn proper_subset_count(max_order: usize) -> usize {
    abelian_groups_up_to(max_order).iter().map(|g| (1usize << g.order()) - 1).sum()
}

fn criterion_1(full: &Outcome, full_time: Duration, small: &Outcome, small_time: Duration) -> Line {
    let s = &full.summary;
    let expected = proper_subset_count(16);
    let pass = s.mismatches == 0
        && s.instances == expected
        && s.groups == 25
        && !s.interrupted
        && small.summary.mismatches == 0
        && small.summary.instances == proper_subset_count(12)
        && full_time <= Duration::from_secs(600)
        && small_time <= Duration::from_secs(30);
    Line {
        id: "1 oracle equivalence",
        pass,
        detail: format!(
            "{} groups, {}/{} proper subsets, mismatches={}, order<=16 in {:.1}s, order<=12 in {:.1}s",
            s.groups,
            s.instances,
            expected,
            s.mismatches,
            full_time.as_secs_f64(),
            small_time.as_secs_f64()
        ),
    }
}

fn criterion_2(full: &Outcome) -> Line {
    let s = &full.summary;
    Line {
        id: "2 uniqueness of the qualifying strict two-coset subgroup",
        pass: s.theorem2_violations == 0 && s.lambda_star_instances > 0,
        detail: format!(
            "violations={}, lambda-star instances={}",
            s.theorem2_violations, s.lambda_star_instances
        ),
    }
}

fn criterion_3(full: &Outcome) -> Line {
    let s = &full.summary;
    let g = make_group(&[4]).unwrap();
    let set = GSubset::from_indices(4, [1, 3]);
    let a = Analyzer::new(&g).unwrap();
    // Independent evaluation of min |S+H| - |H| over H with S + H ≠ G.
    let simple_expr = a
        .lattice()
        .subgroups()
        .iter()
        .filter_map(|h| {
            let sh = naive_sumset(&g, &set, h.members());
            (!sh.is_full()).then(|| sh.len() as isize - h.order() as isize)
        })
        .min();
    let oracle = kappa_oracle(&g, &set).unwrap();
    let guard = oracle == 2 && simple_expr == Some(0) && a.kappa_simple(&set).unwrap() == Some(0);
    Line {
        id: "3 subgroup minimum below the degree",
        pass: s.simple_violations == 0 && s.below_degree > 0 && guard,
        detail: format!(
            "violations={} over {} instances with kappa<|S|; Z4 {{1,3}}: kappa={oracle}, subgroup minimum={simple_expr:?}",
            s.simple_violations, s.below_degree
        ),
    }
}

fn criterion_4(full: &Outcome) -> Line {
    let s = &full.summary;
    Line {
        id: "4 corollaries",
        pass: s.corollary_failures == 0 && s.connected > 0 && s.doubles_met_applicable > 0,
        detail: format!(
            "failures={} over {} connected instances, {} with S meeting 2*G",
            s.corollary_failures, s.connected, s.doubles_met_applicable
        ),
    }
}

fn criterion_5() -> Line {
    let mut cases = 0;
    let mut bad = Vec::new();
    for n in (4..=16).step_by(2) {
        for g in abelian_groups_of_order(n) {
            let a = Analyzer::new(&g).unwrap();
            for h in a.lattice().subgroups().iter().filter(|h| h.order() * 2 == n) {
                let s = h.members().complement();
                let r = a.kappa_formula(&s).unwrap();
                let oracle = kappa_oracle(&g, &s).unwrap();
                cases += 1;
                if r.kappa != n / 2 || oracle != n / 2 {
                    bad.push(format!("{:?}", g.factors()));
                }
            }
        }
    }

    let z8 = make_group(&[8]).unwrap();
    let s8 = GSubset::from_indices(8, [1]);
    let r8 = Analyzer::new(&z8).unwrap().kappa_formula(&s8).unwrap();
    let b_ok = r8.kappa == 0
        && r8.branch == Branch::LambdaStar
        && r8.witness.as_ref().is_some_and(|w| w.subgroup.is_trivial())
        && kappa_oracle(&z8, &s8).unwrap() == 0;

    let g = make_group(&[4, 2]).unwrap();
    let x = g.element(&[1, 0]).unwrap();
    let cyclic = naive_generated(&g, x);
    let mut s = cyclic.complement();
    s.insert(x);
    let r = Analyzer::new(&g).unwrap().kappa_formula(&s).unwrap();
    let c_ok = r.kappa == 4
        && r.branch == Branch::LambdaStar
        && r.eta.is_none_or(|e| e >= 5)
        && kappa_oracle(&g, &s).unwrap() == 4;

    Line {
        id: "5 named cases",
        pass: bad.is_empty() && cases > 0 && b_ok && c_ok,
        detail: format!(
            "(a) {cases} index-2 complements, failures {bad:?}; (b) Z8 {{1}}: kappa={} branch={}; (c) Z4+Z2: kappa={} branch={} eta={:?}",
            r8.kappa,
            r8.branch.as_str(),
            r.kappa,
            r.branch.as_str(),
            r.eta
        ),
    }
}

fn criterion_6(full: &Outcome) -> Line {
    let s = &full.summary;
    Line {
        id: "6 fragment period identities",
        pass: s.fragment_failures == 0 && s.fragments_checked > 0,
        detail: format!(
            "failures={} over {} fragments from {} instances with kappa<|S|",
            s.fragment_failures, s.fragments_checked, s.below_degree
        ),
    }
}

// Independent reference implementations for the property suites.

fn naive_sumset(g: &GroupSpec, a: &GSubset, b: &GSubset) -> GSubset {
    let mut out = g.empty_set();
    for x in a.iter() {
        for y in b.iter() {
            out.insert(g.add(x, y));
        }
    }
    out
}

fn naive_period(g: &GroupSpec, a: &GSubset) -> GSubset {
    GSubset::from_elements(
        g.order(),
        g.elements().filter(|&t| a.iter().all(|x| a.contains(g.add(x, t)))),
    )
}

fn naive_generated(g: &GroupSpec, x: Element) -> GSubset {
    let mut out = g.empty_set();
    let mut y = g.zero();
    loop {
        out.insert(y);
        y = g.add(y, x);
        if y == g.zero() {
            return out;
        }
    }
}

/// Least `m >= 1` with `m * x ∈ L` for every `x ∈ K`.
fn naive_section_exponent(g: &GroupSpec, k: &GSubset, l: &GSubset) -> usize {
    (1..=g.order())
        .find(|&m| k.iter().all(|x| l.contains(g.mul(m, x))))
        .expect("m = |G| always works")
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize, nonempty: bool) -> GSubset {
    loop {
        let density = rng.gen_range(0.05..0.95);
        let s = GSubset::from_indices(n, (0..n).filter(|_| rng.gen_bool(density)));
        if !nonempty || !s.is_empty() {
            return s;
        }
    }
}

struct Pool {
    groups: Vec<(GroupSpec, Analyzer)>,
}

impl Pool {
    fn new(max_order: usize) -> Self {
        let groups = abelian_groups_up_to(max_order)
            .into_iter()
            .filter(|g| g.order() > 1)
            .map(|g| {
                let a = Analyzer::new(&g).unwrap();
                (g, a)
            })
            .collect();
        Pool { groups }
    }

    fn pick(&self, rng: &mut ChaCha8Rng) -> &(GroupSpec, Analyzer) {
        self.groups.choose(rng).unwrap()
    }
}

/// Draws until `PROPERTY_CASES` pairs satisfy `|A+B| <= |A|+|B|-1`; returns
/// the draw count and failures.
fn kneser(rng: &mut ChaCha8Rng, pool: &Pool) -> (usize, usize) {
    let mut applicable = 0;
    let mut draws = 0;
    let mut failures = 0;
    while applicable < PROPERTY_CASES {
        draws += 1;
        let (g, _) = pool.pick(rng);
        let n = g.order();
        let a = small_subset(rng, n);
        let b = small_subset(rng, n);
        let ab = naive_sumset(g, &a, &b);
        if sumgraph_core::sumsets::sumset(g, &a, &b) != ab {
            failures += 1;
            continue;
        }
        if ab.len() + 1 > a.len() + b.len() {
            if sumgraph_core::sumsets::kneser_identity(g, &a, &b).is_some() {
                failures += 1;
            }
            continue;
        }
        applicable += 1;
        let h = naive_period(g, &ab);
        let ah = naive_sumset(g, &a, &h);
        let bh = naive_sumset(g, &b, &h);
        if ab.len() + h.len() != ah.len() + bh.len() {
            failures += 1;
        }
        if sumgraph_core::sumsets::kneser_identity(g, &a, &b) != Some(true) {
            failures += 1;
        }
    }
    (draws, failures)
}

/// A non-empty subset of at most about half the group.
fn small_subset(rng: &mut ChaCha8Rng, n: usize) -> GSubset {
    let k = rng.gen_range(1..=(n / 2).max(1));
    let all: Vec<usize> = (0..n).collect();
    GSubset::from_indices(n, all.choose_multiple(rng, k).copied())
}

/// Chains `L ≤ G0` with `G0/L` cyclic of 2-power order and `2∗G + L ⊊ G0`.
fn directsum_chains(g: &GroupSpec, a: &Analyzer) -> Vec<(Subgroup, Subgroup)> {
    let subs = a.lattice().subgroups();
    let doubles = GSubset::from_elements(g.order(), g.elements().map(|x| g.double(x)));
    let mut out = Vec::new();
    for l in subs {
        for g0 in subs.iter().filter(|k| l.is_subgroup_of(k)) {
            let index = g0.order() / l.order();
            if !index.is_power_of_two() {
                continue;
            }
            let cyclic = g0.elements().any(|x| {
                naive_sumset(g, &naive_generated(g, x), l.members()) == *g0.members()
            });
            let dl = naive_sumset(g, &doubles, l.members());
            if cyclic && dl.is_subset(g0.members()) && dl != *g0.members() {
                out.push((l.clone(), g0.clone()));
            }
        }
    }
    out
}

fn directsum(rng: &mut ChaCha8Rng, pool: &Pool) -> (usize, usize) {
    let chains: Vec<(usize, Vec<(Subgroup, Subgroup)>)> = pool
        .groups
        .iter()
        .enumerate()
        .map(|(i, (g, a))| (i, directsum_chains(g, a)))
        .filter(|(_, c)| !c.is_empty())
        .collect();
    let mut failures = 0;
    for _ in 0..PROPERTY_CASES {
        let (i, list) = chains.choose(rng).unwrap();
        let (l, g0) = list.choose(rng).unwrap();
        let g = &pool.groups[*i].0;
        let whole = g.full_set();
        let lhs = naive_section_exponent(g, &whole, l.members());
        let rhs = naive_section_exponent(g, g0.members(), l.members());
        let lib = sumgraph_core::abelian_group::exponent_of_quotient(g, l).unwrap();
        if lhs != rhs || lib != lhs {
            failures += 1;
        }
    }
    (chains.iter().map(|(_, c)| c.len()).sum(), failures)
}

fn subgroup_list(entries: &[sumgraph_core::FamilyEntry]) -> Vec<Subgroup> {
    let mut v: Vec<Subgroup> = entries.iter().map(|e| e.subgroup.clone()).collect();
    v.sort();
    v
}

fn shift(rng: &mut ChaCha8Rng, pool: &Pool) -> usize {
    let mut failures = 0;
    for _ in 0..PROPERTY_CASES {
        let (g, a) = pool.pick(rng);
        let n = g.order();
        let s = random_subset(rng, n, false);
        if s.is_full() {
            continue;
        }
        let x = g.element_at(rng.gen_range(0..n)).unwrap();
        let two_x = g.double(x);
        let shifted = GSubset::from_elements(n, s.iter().map(|y| g.sub(y, two_x)));
        let same_h = subgroup_list(&a.h_family(&s).unwrap()) == subgroup_list(&a.h_family(&shifted).unwrap());
        let same_l = subgroup_list(&a.lstar_family(&s).unwrap()) == subgroup_list(&a.lstar_family(&shifted).unwrap());
        let k1 = a.kappa_formula(&s).unwrap().kappa;
        let k2 = a.kappa_formula(&shifted).unwrap().kappa;
        if !(same_h && same_l && k1 == k2) {
            failures += 1;
        }
    }
    failures
}

fn neighborhood(rng: &mut ChaCha8Rng, pool: &Pool) -> usize {
    let mut failures = 0;
    for _ in 0..PROPERTY_CASES {
        let (g, _) = pool.pick(rng);
        let n = g.order();
        let s = random_subset(rng, n, false);
        let a = random_subset(rng, n, false);
        let graph = AdditionCayleyGraph::new(g, &s);
        // Vertices y adjacent to some a ∈ A, by the edge rule a + y ∈ S.
        let expected = GSubset::from_elements(
            n,
            g.elements().filter(|&y| a.iter().any(|x| s.contains(g.add(x, y)))),
        );
        let diff = GSubset::from_elements(
            n,
            s.iter().flat_map(|t| a.iter().map(move |x| (t, x))).map(|(t, x)| g.sub(t, x)),
        );
        if graph.neighborhood(&a) != expected || expected != diff {
            failures += 1;
        }
    }
    failures
}

fn degree(rng: &mut ChaCha8Rng, pool: &Pool) -> usize {
    let mut failures = 0;
    for _ in 0..PROPERTY_CASES {
        let (g, _) = pool.pick(rng);
        let n = g.order();
        let s = random_subset(rng, n, false);
        let graph = AdditionCayleyGraph::new(g, &s);
        let simple = graph.simple();
        for x in g.elements() {
            let count = g.elements().filter(|&y| s.contains(g.add(x, y))).count();
            let looped = s.contains(g.double(x)) as usize;
            if count != s.len() || graph.degree(x) != s.len() || simple.degree(x.index()) + looped != s.len() {
                failures += 1;
                break;
            }
        }
    }
    failures
}

fn criterion_7() -> Line {
    let pool = Pool::new(16);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let (kneser_draws, kneser_fail) = kneser(&mut rng, &pool);
    let (chain_count, directsum_fail) = directsum(&mut rng, &pool);
    let shift_fail = shift(&mut rng, &pool);
    let nbhd_fail = neighborhood(&mut rng, &pool);
    let degree_fail = degree(&mut rng, &pool);
    let total = kneser_fail + directsum_fail + shift_fail + nbhd_fail + degree_fail;
    Line {
        id: "7 property suites",
        pass: total == 0 && chain_count > 0,
        detail: format!(
            "{PROPERTY_CASES} cases each; Kneser {kneser_fail} failures ({kneser_draws} draws for {PROPERTY_CASES} small sumsets), \
             exponent {directsum_fail} ({chain_count} chains), shift {shift_fail}, neighborhood {nbhd_fail}, degree {degree_fail}"
        ),
    }
}

fn verify_via_cli(jobs: usize, dir: &std::path::Path) -> (i32, Vec<u8>, Vec<u8>) {
    let path = dir.join(format!("counterexamples-{jobs}.jsonl"));
    let args = [
        "sumgraph",
        "verify",
        "--max-order",
        "24",
        "--sample-threshold",
        "12",
        "--sample-size",
        "400",
        "--seed",
        "20240611",
        "--format",
        "json",
        "--jobs",
        &jobs.to_string(),
        "--counterexamples",
        path.to_str().unwrap(),
    ];
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = app::run(args, &mut out, &mut err, &AtomicBool::new(false));
    (code, out, std::fs::read(&path).unwrap_or_default())
}

fn criterion_8() -> Line {
    let dir = tempfile::tempdir().unwrap();
    let (c1, s1, f1) = verify_via_cli(1, dir.path());
    let (c3, s3, f3) = verify_via_cli(3, dir.path());
    let pass = c1 == 0 && c3 == 0 && s1 == s3 && f1 == f3 && f1.is_empty() && !s1.is_empty();
    Line {
        id: "8 determinism across worker counts",
        pass,
        detail: format!(
            "exit codes {c1}/{c3}, summaries identical: {}, counterexample files identical: {} ({} bytes)",
            s1 == s3,
            f1 == f3,
            f1.len()
        ),
    }
}

fn main() {
    let (small, small_time) = sweep(12);
    let (full, full_time) = sweep(16);
    let lines = [
        criterion_1(&full, full_time, &small, small_time),
        criterion_2(&full),
        criterion_3(&full),
        criterion_4(&full),
        criterion_5(),
        criterion_6(&full),
        criterion_7(),
        criterion_8(),
    ];
    let mut failed = 0;
    for l in &lines {
        println!("{} criterion {}: {}", if l.pass { "PASS" } else { "FAIL" }, l.id, l.detail);
        failed += !l.pass as usize;
    }
    if !full.counterexamples.is_empty() {
        eprintln!("{}", full.counterexamples_jsonl());
    }
    println!("acceptance: {} of {} criteria passed", lines.len() - failed, lines.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
