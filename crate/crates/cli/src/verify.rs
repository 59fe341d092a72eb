//! The verification sweep: every abelian group up to a given order, every
//! proper subset (or a seeded sample of them), each checked against the
//! max-flow oracle and the derived invariants.

use std::sync::atomic::{AtomicBool, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sumgraph_core::cayley_graph::{is_complete, is_connected, quotient_graph, DEFAULT_ORACLE_LIMIT};
use sumgraph_core::connectivity::{coset_fragment, two_coset_fragment, Corollaries};
use sumgraph_core::sumsets::period;
use sumgraph_core::{
    AdditionCayleyGraph, Analyzer, Branch, Error, Fragment, GSubset, GroupSpec, KappaReport,
};

use crate::groups::abelian_groups_up_to;
use crate::json::{set_coords, Coords, ReportDoc};

/// Largest order swept exhaustively, whatever the sample threshold says.
pub const EXHAUSTIVE_LIMIT: usize = 30;

/// Subsets per work unit.
const CHUNK: usize = 2048;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_order: usize,
    /// Groups above this order get a seeded sample of subsets.
    pub sample_threshold: usize,
    /// Subsets drawn per sampled group.
    pub sample_size: usize,
    pub seed: u64,
    pub jobs: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_order: 16,
            sample_threshold: 16,
            sample_size: 100_000,
            seed: 0,
            jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub groups: usize,
    pub instances: usize,
    /// Formula and oracle disagree, or the formula failed an internal check.
    pub mismatches: usize,
    /// Two qualifying strict two-coset subgroups, or one alongside `η < |S|`.
    pub theorem2_violations: usize,
    /// `κ < |S|` but `κ` differs from the plain subgroup minimum.
    pub simple_violations: usize,
    pub corollary_failures: usize,
    /// Oracle fragments failing the period identities when `κ < |S|`.
    pub fragment_failures: usize,
    /// Reported fragment or family witness failing re-verification.
    pub witness_failures: usize,
    /// Coset criterion for connectivity disagrees with search.
    pub criterion_mismatches: usize,
    /// Instances with at least one failure.
    pub counterexamples: usize,
    pub connected: usize,
    pub below_degree: usize,
    pub lambda_star_instances: usize,
    pub fragments_checked: usize,
    /// Instances where the small-`S` (or no `Z4 ⊕ Z2`) case applied.
    pub eta_or_degree_applicable: usize,
    /// Instances with `S ∩ 2∗G ≠ ∅`.
    pub doubles_met_applicable: usize,
    pub interrupted: bool,
}

impl Summary {
    fn merge(&mut self, o: &Summary) {
        self.groups += o.groups;
        self.instances += o.instances;
        self.mismatches += o.mismatches;
        self.theorem2_violations += o.theorem2_violations;
        self.simple_violations += o.simple_violations;
        self.corollary_failures += o.corollary_failures;
        self.fragment_failures += o.fragment_failures;
        self.witness_failures += o.witness_failures;
        self.criterion_mismatches += o.criterion_mismatches;
        self.counterexamples += o.counterexamples;
        self.connected += o.connected;
        self.below_degree += o.below_degree;
        self.lambda_star_instances += o.lambda_star_instances;
        self.fragments_checked += o.fragments_checked;
        self.eta_or_degree_applicable += o.eta_or_degree_applicable;
        self.doubles_met_applicable += o.doubles_met_applicable;
        self.interrupted |= o.interrupted;
    }

    pub fn is_clean(&self) -> bool {
        self.counterexamples == 0
    }

    /// `key=value` lines in field order.
    pub fn to_text(&self) -> String {
        let value = serde_json::to_value(self).expect("summary serializes");
        let mut out = String::new();
        for (k, v) in value.as_object().expect("summary is an object") {
            out.push_str(&format!("{k}={v}\n"));
        }
        out
    }
}

/// One failing instance, replayable with `kappa --group G --set S --check`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub group: Vec<usize>,
    pub subset: Vec<Coords>,
    pub failures: Vec<String>,
    pub oracle: usize,
    pub report: Option<ReportDoc>,
    pub error: Option<String>,
}

/// A unit's tally and its counterexamples keyed by (group index, mask).
type UnitResult = (Summary, Vec<(usize, u64, Counterexample)>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub summary: Summary,
    /// Sorted by group (in sweep order) and then subset bitmask.
    pub counterexamples: Vec<Counterexample>,
}

impl Outcome {
    pub fn counterexamples_jsonl(&self) -> String {
        self.counterexamples
            .iter()
            .map(|c| serde_json::to_string(c).expect("counterexamples serialize") + "\n")
            .collect()
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// The subsets visited for group number `index` of order `n`: all proper
/// subsets, or `sample_size` seeded draws from them (with replacement).
fn subset_masks(config: &VerifyConfig, index: usize, n: usize) -> Vec<u64> {
    let full = full_mask(n);
    if n <= config.sample_threshold {
        return (0..full).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(index as u64);
    (0..config.sample_size)
        .map(|_| loop {
            let m = rng.gen::<u64>() & full;
            if m != full {
                break m;
            }
        })
        .collect()
}

fn validate(config: &VerifyConfig) -> Result<(), Error> {
    if config.max_order == 0 || config.sample_threshold == 0 || config.jobs == 0 {
        return Err(Error::InvalidInput("max order, sample threshold and jobs must be at least 1"));
    }
    if config.max_order > DEFAULT_ORACLE_LIMIT {
        return Err(Error::ResourceLimit {
            what: "group order for the max-flow oracle",
            size: config.max_order,
            limit: DEFAULT_ORACLE_LIMIT,
        });
    }
    let exhaustive = config.max_order.min(config.sample_threshold);
    if exhaustive > EXHAUSTIVE_LIMIT {
        return Err(Error::ResourceLimit {
            what: "group order for the exhaustive subset sweep",
            size: exhaustive,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    Ok(())
}

/// Runs the sweep. Once `stop` is set, remaining work is skipped and the
/// partial summary is marked `interrupted`.
pub fn run(config: &VerifyConfig, stop: &AtomicBool) -> Result<Outcome, Error> {
    validate(config)?;
    let groups = abelian_groups_up_to(config.max_order);
    let analyzers = groups.iter().map(Analyzer::new).collect::<Result<Vec<_>, _>>()?;
    let mut units: Vec<(usize, Vec<u64>)> = Vec::new();
    for (i, g) in groups.iter().enumerate() {
        let masks = subset_masks(config, i, g.order());
        units.extend(masks.chunks(CHUNK).map(|c| (i, c.to_vec())));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|_| Error::InvalidInput("could not start worker threads"))?;
    let results: Vec<UnitResult> = pool.install(|| {
        units
            .par_iter()
            .map(|(i, masks)| run_unit(&analyzers[*i], *i, masks, stop))
            .collect()
    });

    let mut summary = Summary {
        groups: groups.len(),
        ..Summary::default()
    };
    let mut found = Vec::new();
    for (s, c) in results {
        summary.merge(&s);
        found.extend(c);
    }
    found.sort_by_key(|(i, m, _)| (*i, *m));
    Ok(Outcome {
        summary,
        counterexamples: found.into_iter().map(|(_, _, c)| c).collect(),
    })
}

fn run_unit(
    analyzer: &Analyzer,
    index: usize,
    masks: &[u64],
    stop: &AtomicBool,
) -> UnitResult {
    let mut summary = Summary::default();
    let mut found = Vec::new();
    let n = analyzer.group().order();
    for &m in masks {
        if stop.load(Ordering::Relaxed) {
            summary.interrupted = true;
            break;
        }
        let s = GSubset::from_mask(n, m);
        if let Some(c) = check_instance(analyzer, &s, &mut summary) {
            found.push((index, m, c));
        }
    }
    (summary, found)
}

/// Runs every check on one instance, tallying into `summary`; returns the
/// counterexample record if anything failed.
pub fn check_instance(analyzer: &Analyzer, s: &GSubset, summary: &mut Summary) -> Option<Counterexample> {
    let group = analyzer.group();
    let size = s.len();
    let graph = AdditionCayleyGraph::new(group, s);
    let simple = graph.simple();
    let oracle = simple.connectivity();
    let mut failures: Vec<&'static str> = Vec::new();
    summary.instances += 1;

    let report = analyzer.kappa_formula(s);
    match &report {
        Ok(r) => {
            if r.kappa != oracle {
                failures.push("kappa-mismatch");
                summary.mismatches += 1;
            }
            if r.branch == Branch::LambdaStar {
                summary.lambda_star_instances += 1;
            }
            if !witness_holds(analyzer, &graph, s, r, oracle) {
                failures.push("witness");
                summary.witness_failures += 1;
            }
        }
        Err(_) => {
            failures.push("formula-error");
            summary.mismatches += 1;
        }
    }

    let eta = analyzer.eta(s).expect("subset matches the group");
    let lstar = analyzer.lstar_family(s).expect("subset matches the group");
    let qualifying = lstar.iter().filter(|e| e.score < size).count();
    if qualifying > 1 || (qualifying == 1 && eta.is_some_and(|e| e < size)) {
        failures.push("uniqueness");
        summary.theorem2_violations += 1;
    }

    let cor = Corollaries::evaluate(analyzer, s, oracle).expect("subset matches the group");
    if cor.simple_below_degree.failed() {
        failures.push("simple-below-degree");
        summary.simple_violations += 1;
    }
    let mut corollary_failed = false;
    for (name, check) in cor.all().into_iter().skip(1) {
        if check.failed() {
            failures.push(name);
            corollary_failed = true;
        }
    }
    summary.corollary_failures += corollary_failed as usize;
    summary.eta_or_degree_applicable += cor.eta_or_degree.applicable as usize;
    summary.doubles_met_applicable += cor.doubles_met.applicable as usize;

    let connected = is_connected(group, s);
    if connected != simple.is_connected() || connected != analyzer.connectivity_criterion(s) {
        failures.push("connectivity-criterion");
        summary.criterion_mismatches += 1;
    }
    summary.connected += connected as usize;

    if oracle < size {
        summary.below_degree += 1;
        let (kappa, frags) = graph.oracle_fragments().expect("order within oracle bound");
        summary.fragments_checked += frags.len();
        if kappa != oracle || frags.is_empty() || !frags.iter().all(|f| period_identities_hold(analyzer, &graph, s, f, oracle)) {
            failures.push("fragment-period");
            summary.fragment_failures += 1;
        }
    }

    if failures.is_empty() {
        return None;
    }
    summary.counterexamples += 1;
    let (report, error) = match report {
        Ok(r) => (Some(ReportDoc::new(group, s, &r).with_oracle(oracle)), None),
        Err(e) => (None, Some(e.to_string())),
    };
    Some(Counterexample {
        group: group.factors().to_vec(),
        subset: set_coords(group, s),
        failures: failures.into_iter().map(String::from).collect(),
        oracle,
        report,
        error,
    })
}

/// For a fragment `A` with `H = π(S - A)`: `A ⊆ S - A`, `A + H = A`,
/// `κ = |S + H| - |H|`, and the quotient graph of `φ_H(S)` has connectivity
/// `|φ_H(S)| - 1`.
pub fn period_identities_hold(
    analyzer: &Analyzer,
    graph: &AdditionCayleyGraph,
    s: &GSubset,
    f: &Fragment,
    kappa: usize,
) -> bool {
    let group = analyzer.group();
    let nbhd = graph.neighborhood(&f.vertices);
    let h = period(group, &nbhd);
    let lattice = analyzer.lattice();
    let Some(idx) = lattice.index_of(&h) else { return false };
    let cosets = lattice.cosets(idx);
    let hits = cosets.hits(s);
    f.is_fragment(kappa)
        && f.vertices.is_subset(&nbhd)
        && cosets.saturate(&f.vertices) == f.vertices
        && hits >= 1
        && kappa == (hits - 1) * h.order()
        && quotient_graph(cosets, s).connectivity() == hits - 1
}

/// Re-verifies the reported fragment and family witness against the graph.
fn witness_holds(
    analyzer: &Analyzer,
    graph: &AdditionCayleyGraph,
    s: &GSubset,
    r: &KappaReport,
    oracle: usize,
) -> bool {
    let group: &GroupSpec = analyzer.group();
    let Some(frag) = &r.fragment else {
        return r.branch == Branch::Complete && is_complete(group, s) && r.witness.is_none();
    };
    let rebuilt = Fragment::of(graph, frag.vertices.clone());
    if rebuilt != *frag || !rebuilt.is_fragment(oracle) {
        return false;
    }
    match (r.branch, &r.witness) {
        (Branch::Eta, Some(entry)) => {
            entry.score == r.kappa
                && coset_fragment(group, s, &entry.subgroup).is_ok_and(|f| f.boundary.len() == entry.score)
        }
        (Branch::LambdaStar, Some(entry)) => {
            let Some(w) = &entry.witness else { return false };
            entry.score == r.kappa
                && analyzer.lstar_check(s, &entry.subgroup).ok().flatten().as_ref() == Some(w)
                && two_coset_fragment(group, s, &entry.subgroup, &w.g0_subgroup, w.g0)
                    .is_ok_and(|f| f.boundary.len() == entry.score)
        }
        (Branch::Degree, None) => r.kappa == s.len() && frag.vertices.len() == 1,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_default(max_order: usize) -> Outcome {
        let config = VerifyConfig {
            max_order,
            jobs: 1,
            ..VerifyConfig::default()
        };
        run(&config, &AtomicBool::new(false)).unwrap()
    }

    #[test]
    fn trivial_sweep() {
        let out = run_default(1);
        assert_eq!(out.summary.instances, 1);
        assert_eq!(out.summary.mismatches, 0);
        assert!(out.summary.is_clean());
    }

    #[test]
    fn sweep_to_order_8_is_clean() {
        let out = run_default(8);
        // 2^n - 1 proper subsets per group.
        let expected: usize = abelian_groups_up_to(8).iter().map(|g| (1 << g.order()) - 1).sum();
        assert_eq!(out.summary.instances, expected);
        assert!(out.summary.is_clean(), "{:?}", out.counterexamples);
        assert!(out.summary.lambda_star_instances > 0);
        assert!(out.summary.fragments_checked > 0);
    }

    #[test]
    fn wrong_kappa_is_reported() {
        // A tampered oracle value trips the corollary and fragment checks.
        let g = sumgraph_core::abelian_group::make_group(&[5]).unwrap();
        let a = Analyzer::new(&g).unwrap();
        let s = GSubset::from_indices(5, [1, 4]);
        let graph = AdditionCayleyGraph::new(&g, &s);
        let (_, frags) = graph.oracle_fragments().unwrap();
        assert!(period_identities_hold(&a, &graph, &s, &frags[0], 1));
        assert!(!period_identities_hold(&a, &graph, &s, &frags[0], 0));
    }

    #[test]
    fn limits() {
        let stop = AtomicBool::new(false);
        let big = VerifyConfig {
            max_order: 65,
            ..VerifyConfig::default()
        };
        assert!(matches!(run(&big, &stop), Err(Error::ResourceLimit { .. })));
        let wide = VerifyConfig {
            max_order: 40,
            sample_threshold: 40,
            ..VerifyConfig::default()
        };
        assert!(matches!(run(&wide, &stop), Err(Error::ResourceLimit { .. })));
    }

    #[test]
    fn interrupted_runs_report_partial_counts() {
        let config = VerifyConfig {
            max_order: 6,
            jobs: 1,
            ..VerifyConfig::default()
        };
        let out = run(&config, &AtomicBool::new(true)).unwrap();
        assert!(out.summary.interrupted);
        assert_eq!(out.summary.instances, 0);
    }
}
