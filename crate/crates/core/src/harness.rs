//! Executable checks of the rewriting system's properties.
//!
//! Each check takes one instance and answers pass or fail; the batch runner
//! feeds them seeded random instances. Failures carry the instance and seed
//! so they can be replayed.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hitting::min_hitting_set_bounded;
use crate::hypergraph::{EdgeId, Hypergraph, NodeId, RawHypergraph};
use crate::iso::{CanonicalForm, Canonizer, IsomorphismWitness};
use crate::rewrite::{apply, find_all, reduce, ReductionTrace, RuleApplication, Strategy};

/// Parameters for [`random_hypergraph`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeneratorParams {
    pub max_nodes: usize,
    pub max_edges: usize,
    /// Probability of each node/edge incidence, in `[0, 1]`.
    pub density: f64,
    /// Number of dominations forced into the instance after sampling.
    pub planted_dominations: usize,
    pub seed: u64,
}

impl GeneratorParams {
    fn check(&self) -> Result<()> {
        if self.max_nodes == 0 {
            return Err(Error::Parameter("max_nodes must be positive".into()));
        }
        if !(0.0..=1.0).contains(&self.density) {
            return Err(Error::Parameter(format!(
                "density must lie in [0, 1], got {}",
                self.density
            )));
        }
        Ok(())
    }
}

/// Samples a hypergraph from a ChaCha8 stream seeded with `params.seed`.
///
/// `|V|` is uniform in `[1, max_nodes]` and `|E|` uniform in
/// `[0, max_edges]`; each incidence pair is then kept with probability
/// `density`. Each planted domination picks, with equal odds, either a node
/// whose edge set is overwritten by a random subset of another node's, or an
/// edge whose node set is overwritten by a superset of another edge's. Ids
/// are `v1..vn` and `e1..em`.
pub fn random_hypergraph(params: &GeneratorParams) -> Result<Hypergraph> {
    params.check()?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let n = rng.gen_range(1..=params.max_nodes as u64) as usize;
    let m = rng.gen_range(0..=params.max_edges as u64) as usize;
    let mut matrix = vec![vec![false; m]; n];
    for row in matrix.iter_mut() {
        for bit in row.iter_mut() {
            *bit = rng.gen_bool(params.density);
        }
    }
    for _ in 0..params.planted_dominations {
        if rng.gen_bool(0.5) {
            if n < 2 {
                continue;
            }
            let (target, other) = distinct_pair(&mut rng, n);
            let source = matrix[other].clone();
            for (bit, &keep) in matrix[target].iter_mut().zip(&source) {
                *bit = keep && rng.gen_bool(0.5);
            }
        } else {
            if m < 2 {
                continue;
            }
            let (target, other) = distinct_pair(&mut rng, m);
            for row in matrix.iter_mut() {
                row[target] = row[other] || rng.gen_bool(params.density);
            }
        }
    }
    let raw = RawHypergraph {
        nodes: (1..=n)
            .map(|i| NodeId::new(format!("v{i}")).expect("valid id"))
            .collect(),
        edges: (1..=m)
            .map(|j| EdgeId::new(format!("e{j}")).expect("valid id"))
            .collect(),
        incidence: matrix
            .iter()
            .enumerate()
            .flat_map(|(i, row)| {
                row.iter().enumerate().filter(|(_, &b)| b).map(move |(j, _)| {
                    (
                        NodeId::new(format!("v{}", i + 1)).expect("valid id"),
                        EdgeId::new(format!("e{}", j + 1)).expect("valid id"),
                    )
                })
            })
            .collect(),
    };
    Hypergraph::try_from(raw)
}

fn distinct_pair(rng: &mut ChaCha8Rng, len: usize) -> (usize, usize) {
    let a = rng.gen_range(0..len as u64) as usize;
    let mut b = rng.gen_range(0..len as u64 - 1) as usize;
    if b >= a {
        b += 1;
    }
    (a, b)
}

/// Fisher-Yates with 64-bit draws, so shuffles match across platforms.
fn shuffle<T>(rng: &mut ChaCha8Rng, items: &mut [T]) {
    for i in (1..items.len()).rev() {
        let j = rng.gen_range(0..=i as u64) as usize;
        items.swap(i, j);
    }
}

/// Every hypergraph on nodes `v1..vn` and edges `e1..em` for all
/// `n <= max_nodes` and `m <= max_edges`, one per incidence pattern.
pub fn all_hypergraphs(max_nodes: usize, max_edges: usize) -> impl Iterator<Item = Hypergraph> {
    (0..=max_nodes).flat_map(move |n| {
        (0..=max_edges).flat_map(move |m| {
            assert!(n * m < 64, "too many incidence patterns to enumerate");
            (0..1u64 << (n * m)).map(move |pattern| {
                let nodes: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
                let edges = (0..m).map(|j| {
                    let members: Vec<String> = (0..n)
                        .filter(|i| pattern & (1 << (i * m + j)) != 0)
                        .map(|i| format!("v{}", i + 1))
                        .collect();
                    (format!("e{}", j + 1), members)
                });
                Hypergraph::from_edge_lists(nodes, edges).expect("generated ids are valid")
            })
        })
    })
}

/// A bijective renaming of a hypergraph's ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabelling {
    pub node_map: BTreeMap<NodeId, NodeId>,
    pub edge_map: BTreeMap<EdgeId, EdgeId>,
}

impl Relabelling {
    pub fn rule(&self, r: &RuleApplication) -> RuleApplication {
        match r {
            RuleApplication::EdgeDomination { removed, witness } => RuleApplication::EdgeDomination {
                removed: self.edge_map[removed].clone(),
                witness: self.edge_map[witness].clone(),
            },
            RuleApplication::NodeDomination { removed, witness } => RuleApplication::NodeDomination {
                removed: self.node_map[removed].clone(),
                witness: self.node_map[witness].clone(),
            },
        }
    }
}

/// Renames nodes to `n<k>` and edges to `f<k>` under seeded random
/// permutations of `0..|V|` and `0..|E|`.
pub fn random_relabelling(h: &Hypergraph, seed: u64) -> Relabelling {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut node_labels: Vec<usize> = (0..h.node_count()).collect();
    let mut edge_labels: Vec<usize> = (0..h.edge_count()).collect();
    shuffle(&mut rng, &mut node_labels);
    shuffle(&mut rng, &mut edge_labels);
    Relabelling {
        node_map: h
            .nodes()
            .zip(node_labels)
            .map(|(v, k)| (v.clone(), NodeId::new(format!("n{k}")).expect("valid id")))
            .collect(),
        edge_map: h
            .edges()
            .zip(edge_labels)
            .map(|(e, k)| (e.clone(), EdgeId::new(format!("f{k}")).expect("valid id")))
            .collect(),
    }
}

/// Outcome of [`check_diamond`] on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiamondReport {
    pub instance: Hypergraph,
    /// Unordered pairs of distinct applicable rules examined.
    pub divergent_pairs_checked: usize,
    /// Pairs whose one-step results were already isomorphic.
    pub closed_without_steps: usize,
    /// Pairs with no completion of at most one step per side.
    pub failures: Vec<(RuleApplication, RuleApplication)>,
}

impl DiamondReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that every pair of one-step rewrites of `h` can be brought to
/// isomorphic hypergraphs with at most one more step on each side.
///
/// For rules `r1`, `r2` with results `H1`, `H2`, the completions tried are
/// `H1` itself and each one-step successor of `H1`, against `H2` and its
/// successors. The zero-step completion matters for twin edges (or twin
/// nodes) removed by each other: after one is gone the other may have lost
/// its witness, but the two results are isomorphic.
pub fn check_diamond(h: &Hypergraph, canonizer: &Canonizer) -> Result<DiamondReport> {
    let rules = find_all(h);
    let mut closures: Vec<(CanonicalForm, HashSet<CanonicalForm>)> = Vec::with_capacity(rules.len());
    for r in &rules {
        let h1 = apply(h, r)?;
        let own = canonizer.form(&h1)?;
        let mut reach = HashSet::new();
        reach.insert(own.clone());
        let mut removed_seen = BTreeSet::new();
        for next in find_all(&h1) {
            if removed_seen.insert((next.kind(), next.removed().to_string())) {
                reach.insert(canonizer.form(&apply(&h1, &next)?)?);
            }
        }
        closures.push((own, reach));
    }
    let mut report = DiamondReport {
        instance: h.clone(),
        divergent_pairs_checked: 0,
        closed_without_steps: 0,
        failures: Vec::new(),
    };
    for i in 0..rules.len() {
        for j in i + 1..rules.len() {
            report.divergent_pairs_checked += 1;
            let (own_i, reach_i) = &closures[i];
            let (own_j, reach_j) = &closures[j];
            if own_i == own_j {
                report.closed_without_steps += 1;
            } else if reach_i.is_disjoint(reach_j) {
                report.failures.push((rules[i].clone(), rules[j].clone()));
            }
        }
    }
    Ok(report)
}

/// The strategy set used by the confluence checks: both lexicographic
/// strategies followed by `random` seeded strategies derived from `seed`.
pub fn strategy_suite(seed: u64, random: usize) -> Vec<Strategy> {
    let mut out = vec![Strategy::LexNodeFirst, Strategy::LexEdgeFirst];
    out.extend((0..random as u64).map(|k| Strategy::Random(seed.wrapping_mul(31).wrapping_add(k))));
    out
}

/// Reduces `h` under every strategy and reports whether all minimal forms
/// are isomorphic.
pub fn check_confluence(h: &Hypergraph, strategies: &[Strategy], canonizer: &Canonizer) -> Result<bool> {
    if strategies.is_empty() {
        return Err(Error::Parameter("at least one strategy is required".into()));
    }
    let mut first: Option<CanonicalForm> = None;
    for &s in strategies {
        let (minimal, _) = reduce(h, s);
        let form = canonizer.form(&minimal)?;
        match &first {
            None => first = Some(form),
            Some(f) if *f != form => return Ok(false),
            Some(_) => {}
        }
    }
    Ok(true)
}

/// Checks that rule applicability and rule results commute with a seeded
/// random renaming of `h`.
pub fn check_rule_lifting(h: &Hypergraph, relabel_seed: u64) -> bool {
    let relabelling = random_relabelling(h, relabel_seed);
    let Ok(renamed) = h.relabel(&relabelling.node_map, &relabelling.edge_map) else {
        return false;
    };
    let expected: BTreeSet<RuleApplication> = find_all(h).iter().map(|r| relabelling.rule(r)).collect();
    let actual: BTreeSet<RuleApplication> = find_all(&renamed).into_iter().collect();
    if expected != actual {
        return false;
    }
    find_all(h).iter().all(|r| {
        let (Ok(before), Ok(after)) = (apply(h, r), apply(&renamed, &relabelling.rule(r))) else {
            return false;
        };
        // the renaming restricted to what survived is an isomorphism after -> before
        let witness = IsomorphismWitness {
            node_map: before
                .nodes()
                .map(|v| (relabelling.node_map[v].clone(), v.clone()))
                .collect(),
            edge_map: before
                .edges()
                .map(|e| (relabelling.edge_map[e].clone(), e.clone()))
                .collect(),
        };
        witness.verify(&before, &after)
    })
}

/// Checks that the minimum hitting-set size (or infeasibility) of `h` is
/// unchanged by every single applicable rule and by a full reduction.
pub fn check_hs_preservation(h: &Hypergraph, max_nodes: usize) -> Result<bool> {
    let base = min_hitting_set_bounded(h, max_nodes)?.size();
    for r in find_all(h) {
        if min_hitting_set_bounded(&apply(h, &r)?, max_nodes)?.size() != base {
            return Ok(false);
        }
    }
    let (minimal, _) = reduce(h, Strategy::LexNodeFirst);
    Ok(min_hitting_set_bounded(&minimal, max_nodes)?.size() == base)
}

/// Checks that `trace` replays from `start` with each step deleting exactly
/// one object, and that it is no longer than `|V| + |E|`.
pub fn check_trace_bound(start: &Hypergraph, trace: &ReductionTrace) -> bool {
    if trace.len() > start.size() {
        return false;
    }
    let mut current = start.clone();
    for r in &trace.steps {
        let Ok(next) = apply(&current, r) else {
            return false;
        };
        if next.size() + 1 != current.size() || next.incidence_count() > current.incidence_count() {
            return false;
        }
        current = next;
    }
    true
}

/// The property families the batch runner can check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    Diamond,
    Confluence,
    Lifting,
    HittingSet,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Check::Diamond => "diamond",
            Check::Confluence => "confluence",
            Check::Lifting => "lifting",
            Check::HittingSet => "hitting-set",
        })
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "diamond" => Ok(Check::Diamond),
            "confluence" => Ok(Check::Confluence),
            "lifting" => Ok(Check::Lifting),
            "hitting-set" => Ok(Check::HittingSet),
            other => Err(Error::Parameter(format!("unknown check `{other}`"))),
        }
    }
}

/// A seeded batch of random instances for one check.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BatchConfig {
    pub check: Check,
    pub count: usize,
    pub seed: u64,
    pub max_nodes: usize,
    pub max_edges: usize,
    pub density: f64,
    pub planted_dominations: usize,
    /// Random strategies per instance for [`Check::Confluence`].
    pub random_strategies: usize,
    pub canonizer: Canonizer,
    pub hs_max_nodes: usize,
}

impl BatchConfig {
    pub fn new(check: Check, count: usize, seed: u64) -> Self {
        BatchConfig {
            check,
            count,
            seed,
            max_nodes: 8,
            max_edges: 8,
            density: 0.35,
            planted_dominations: 2,
            random_strategies: 8,
            canonizer: Canonizer::default(),
            hs_max_nodes: crate::hitting::DEFAULT_MAX_NODES,
        }
    }

    /// Seed of the `index`-th instance.
    pub fn instance_seed(&self, index: usize) -> u64 {
        self.seed.wrapping_add(index as u64)
    }

    pub fn params(&self, index: usize) -> GeneratorParams {
        GeneratorParams {
            max_nodes: self.max_nodes,
            max_edges: self.max_edges,
            density: self.density,
            planted_dominations: self.planted_dominations,
            seed: self.instance_seed(index),
        }
    }
}

/// Result of one instance in a batch.
#[derive(Clone, Debug)]
pub struct CaseOutcome {
    pub index: usize,
    pub seed: u64,
    pub instance: Hypergraph,
    /// `Ok(true)` pass, `Ok(false)` property violated, `Err` the check could
    /// not run (capacity).
    pub verdict: Result<bool>,
    /// Whether every reduction of the instance stayed within the
    /// termination bound.
    pub traces_within_bound: bool,
}

/// Runs one check on one instance, also checking every reduction trace it
/// produces against the termination bound.
pub fn run_case(config: &BatchConfig, index: usize) -> Result<CaseOutcome> {
    let seed = config.instance_seed(index);
    let instance = random_hypergraph(&config.params(index))?;
    let strategies = strategy_suite(seed, config.random_strategies);
    let traces_within_bound = strategies.iter().all(|&s| {
        let (_, trace) = reduce(&instance, s);
        check_trace_bound(&instance, &trace)
    });
    let verdict = match config.check {
        Check::Diamond => check_diamond(&instance, &config.canonizer).map(|r| r.passed()),
        Check::Confluence => check_confluence(&instance, &strategies, &config.canonizer),
        Check::Lifting => Ok(check_rule_lifting(&instance, seed)),
        Check::HittingSet => check_hs_preservation(&instance, config.hs_max_nodes),
    };
    Ok(CaseOutcome {
        index,
        seed,
        instance,
        verdict,
        traces_within_bound,
    })
}

/// Runs a whole batch in parallel; outcomes come back in index order.
pub fn run_batch(config: &BatchConfig) -> Result<Vec<CaseOutcome>> {
    config.params(0).check()?;
    (0..config.count).into_par_iter().map(|i| run_case(config, i)).collect()
}
