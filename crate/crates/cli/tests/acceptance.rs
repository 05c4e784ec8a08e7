//! Acceptance suite. Prints one `PASS`/`FAIL` line per criterion and exits
//! non-zero if any criterion fails.

use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hyperkernel::fixtures::{self, alternating_chain};
use hyperkernel::format;
use hyperkernel::harness::{
    all_hypergraphs, check_diamond, check_hs_preservation, check_trace_bound, random_hypergraph, random_relabelling,
    run_batch, strategy_suite, BatchConfig, Check, GeneratorParams,
};
use hyperkernel::{
    apply, brute_force_isomorphic, find_all, is_isomorphic, is_minimal, min_hitting_set, reduce, Canonizer, Hypergraph,
    RuleKind, Strategy,
};
use rayon::prelude::*;

const SEED: u64 = 1;

type Verdict = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn(&Path) -> Verdict,
}

fn main() -> ExitCode {
    let dir = tempfile::tempdir().expect("temporary directory");
    let criteria = [
        Criterion {
            id: 1,
            name: "twin replay",
            limit: secs(1),
            run: twin_replay,
        },
        Criterion {
            id: 2,
            name: "alternating replay",
            limit: secs(1),
            run: alternating_replay,
        },
        Criterion {
            id: 3,
            name: "exhaustive diamond",
            limit: secs(300),
            run: exhaustive_diamond,
        },
        Criterion {
            id: 4,
            name: "sampled confluence",
            limit: secs(300),
            run: sampled_confluence,
        },
        Criterion {
            id: 5,
            name: "hitting-set preservation",
            limit: secs(300),
            run: hitting_set,
        },
        Criterion {
            id: 6,
            name: "isomorphism oracle",
            limit: secs(300),
            run: isomorphism_oracle,
        },
        Criterion {
            id: 7,
            name: "termination bound",
            limit: secs(300),
            run: termination_bound,
        },
        Criterion {
            id: 8,
            name: "rule lifting",
            limit: secs(60),
            run: lifting,
        },
        Criterion {
            id: 9,
            name: "chain scaling",
            limit: secs(3),
            run: chain_scaling,
        },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let verdict = (c.run)(dir.path());
        let elapsed = start.elapsed();
        let verdict = match verdict {
            Ok(detail) if elapsed > c.limit => Err(format!("{detail}; took {elapsed:.2?}, limit {:?}", c.limit)),
            other => other,
        };
        match verdict {
            Ok(detail) => println!("PASS {} {}: {detail} ({elapsed:.2?})", c.id, c.name),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {}: {detail} ({elapsed:.2?})", c.id, c.name);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Runs the binary, returning (exit code, stdout).
fn cli(args: &[&str]) -> Result<(i32, String), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_hyperkernel"))
        .args(args)
        .output()
        .map_err(|e| format!("cannot run hyperkernel: {e}"))?;
    let code = out.status.code().ok_or("hyperkernel killed by signal")?;
    Ok((code, String::from_utf8_lossy(&out.stdout).into_owned()))
}

fn write(dir: &Path, name: &str, h: &Hypergraph) -> Result<String, String> {
    let path: PathBuf = dir.join(name);
    std::fs::write(&path, format::to_text(h)).map_err(|e| e.to_string())?;
    Ok(path.to_string_lossy().into_owned())
}

fn parse(text: &str) -> Hypergraph {
    format::parse(text.as_bytes()).expect("literal document")
}

fn twin_replay(dir: &Path) -> Verdict {
    let h = fixtures::twin();
    let rules = find_all(&h);
    ensure(
        rules.len() == 2 && rules.iter().all(|r| r.kind() == RuleKind::Node),
        || format!("expected two node rules, found {rules:?}"),
    )?;
    let h1 = apply(&h, &rules[0]).map_err(|e| e.to_string())?;
    let h2 = apply(&h, &rules[1]).map_err(|e| e.to_string())?;
    ensure(h1 == parse("nodes: v2\nedge e: v2\n"), || {
        format!("first result {h1:?}")
    })?;
    ensure(h2 == parse("nodes: v1\nedge e: v1\n"), || {
        format!("second result {h2:?}")
    })?;
    ensure(is_minimal(&h1) && is_minimal(&h2), || "results are not minimal".into())?;
    let (a, b) = (write(dir, "h1.hg", &h1)?, write(dir, "h2.hg", &h2)?);
    let (code, out) = cli(&["iso", &a, &b])?;
    ensure(code == 0 && out.trim() == "isomorphic", || {
        format!("`iso` gave exit {code}: {out}")
    })?;
    for f in [&a, &b] {
        let (code, _) = cli(&["minimal", f])?;
        ensure(code == 0, || format!("`minimal {f}` exited {code}"))?;
    }
    Ok("H1 = ({v2},{e}), H2 = ({v1},{e}), both minimal, iso exit 0".into())
}

fn alternating_replay(dir: &Path) -> Verdict {
    let h = fixtures::alternating();
    let mut strategies = strategy_suite(SEED, 8);
    strategies.push(Strategy::Random(u64::MAX));
    for &s in &strategies {
        let (g, trace) = reduce(&h, s);
        let removed: Vec<&str> = trace.steps.iter().map(|r| r.removed()).collect();
        ensure(removed == ["v1", "e2", "v3", "e4"], || {
            format!("{s}: removed {removed:?}")
        })?;
        let kinds: Vec<RuleKind> = trace.kinds().collect();
        ensure(
            kinds == [RuleKind::Node, RuleKind::Edge, RuleKind::Node, RuleKind::Edge],
            || format!("{s}: kinds {kinds:?}"),
        )?;
        let mut current = h.clone();
        for r in &trace.steps {
            let applicable = find_all(&current);
            ensure(applicable == [r.clone()], || {
                format!("{s}: before {r}, applicable {applicable:?}")
            })?;
            current = apply(&current, r).map_err(|e| e.to_string())?;
        }
        ensure((g.node_count(), g.edge_count()) == (5, 5) && is_minimal(&g), || {
            format!("{s}: result has {} nodes, {} edges", g.node_count(), g.edge_count())
        })?;
    }
    let file = write(dir, "alt.hg", &h)?;
    let (code, out) = cli(&[
        "reduce",
        &file,
        "--strategy",
        "lex-node-first",
        "--trace",
        "-o",
        &format!("{file}.min"),
    ])?;
    let lines: Vec<&str> = out.lines().collect();
    ensure(code == 0 && lines.len() == 4, || {
        format!("`reduce --trace` exit {code}, output {out:?}")
    })?;
    let (code, _) = cli(&["minimal", &format!("{file}.min")])?;
    ensure(code == 0, || "reduced output is not minimal".into())?;
    Ok(format!(
        "{} strategies, forced v1 e2 v3 e4, 5 nodes 5 edges",
        strategies.len()
    ))
}

fn exhaustive_diamond(_: &Path) -> Verdict {
    let instances: Vec<Hypergraph> = all_hypergraphs(3, 3).collect();
    let canonizer = Canonizer::default();
    let reports = instances
        .par_iter()
        .map(|h| check_diamond(h, &canonizer))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let pairs: usize = reports.iter().map(|r| r.divergent_pairs_checked).sum();
    let zero_step: usize = reports.iter().map(|r| r.closed_without_steps).sum();
    if let Some(bad) = reports.iter().find(|r| !r.passed()) {
        return Err(format!("diamond fails on {:?}: {:?}", bad.instance, bad.failures));
    }
    Ok(format!(
        "{} hypergraphs, {pairs} divergent pairs, {zero_step} closed with zero steps, 0 failures",
        instances.len()
    ))
}

fn batch_verdict(config: &BatchConfig) -> Verdict {
    let outcomes = run_batch(config).map_err(|e| e.to_string())?;
    for case in &outcomes {
        match &case.verdict {
            Ok(true) => {}
            Ok(false) => {
                return Err(format!(
                    "{} fails at seed {}:\n{}",
                    config.check,
                    case.seed,
                    format::to_text(&case.instance)
                ))
            }
            Err(e) => return Err(format!("{} could not run at seed {}: {e}", config.check, case.seed)),
        }
    }
    let rules: usize = outcomes.iter().map(|c| find_all(&c.instance).len()).sum();
    Ok(format!(
        "{} instances, {rules} initially applicable rules, 0 failures",
        outcomes.len()
    ))
}

fn confluence_config() -> BatchConfig {
    BatchConfig::new(Check::Confluence, 500, SEED)
}

fn hitting_set_config() -> BatchConfig {
    BatchConfig {
        max_nodes: 12,
        max_edges: 12,
        ..BatchConfig::new(Check::HittingSet, 300, SEED)
    }
}

fn sampled_confluence(_: &Path) -> Verdict {
    let config = confluence_config();
    ensure(strategy_suite(SEED, config.random_strategies).len() == 10, || {
        "expected 10 strategies".into()
    })?;
    batch_verdict(&config).map(|d| format!("{d}, 10 strategies each"))
}

fn hitting_set(_: &Path) -> Verdict {
    let detail = batch_verdict(&hitting_set_config())?;
    let alt = fixtures::alternating();
    let (minimal, _) = reduce(&alt, Strategy::LexNodeFirst);
    let before = min_hitting_set(&alt).map_err(|e| e.to_string())?.size();
    let after = min_hitting_set(&minimal).map_err(|e| e.to_string())?.size();
    ensure(before == Some(4) && after == Some(4), || {
        format!("H_alt sizes {before:?} -> {after:?}")
    })?;
    ensure(check_hs_preservation(&alt, 20).map_err(|e| e.to_string())?, || {
        "H_alt single steps".into()
    })?;
    Ok(format!("{detail}; H_alt size 4 before and after"))
}

fn isomorphism_oracle(_: &Path) -> Verdict {
    let mut instances = Vec::new();
    for k in 0..200u64 {
        let h = random_hypergraph(&GeneratorParams {
            max_nodes: 5,
            max_edges: 5,
            density: 0.4,
            planted_dominations: 1,
            seed: SEED + k,
        })
        .map_err(|e| e.to_string())?;
        let r = random_relabelling(&h, k);
        let copy = h.relabel(&r.node_map, &r.edge_map).map_err(|e| e.to_string())?;
        instances.push(h);
        instances.push(copy);
    }
    ensure(instances.iter().all(|h| h.size() <= 10), || {
        "instance above 10 objects".into()
    })?;
    let canonizer = Canonizer::default();
    let results: Vec<Result<(usize, usize), String>> = (0..instances.len())
        .into_par_iter()
        .map(|i| {
            let (mut pairs, mut iso) = (0, 0);
            for j in i..instances.len() {
                let (a, b) = (&instances[i], &instances[j]);
                let fast = canonizer.isomorphism(a, b).map_err(|e| e.to_string())?;
                let slow = brute_force_isomorphic(a, b).map_err(|e| e.to_string())?;
                if fast.is_some() != slow {
                    return Err(format!(
                        "disagreement on instances {i} and {j}: fast {}, brute force {slow}",
                        fast.is_some()
                    ));
                }
                if let Some(w) = fast {
                    if !w.verify(a, b) {
                        return Err(format!("invalid witness for instances {i} and {j}"));
                    }
                    iso += 1;
                }
                pairs += 1;
            }
            Ok((pairs, iso))
        })
        .collect();
    let (mut pairs, mut iso) = (0, 0);
    for r in results {
        let (p, i) = r?;
        pairs += p;
        iso += i;
    }
    // spot check the free function too
    let (a, b) = (&instances[0], &instances[1]);
    ensure(is_isomorphic(a, b).map_err(|e| e.to_string())?.is_some(), || {
        "relabelled copy not isomorphic".into()
    })?;
    Ok(format!(
        "{pairs} pairs over 200 instances and their relabellings, {iso} isomorphic, 0 disagreements"
    ))
}

fn termination_bound(_: &Path) -> Verdict {
    let mut instances: Vec<Hypergraph> = all_hypergraphs(3, 3).collect();
    for config in [confluence_config(), hitting_set_config()] {
        for i in 0..config.count {
            instances.push(random_hypergraph(&config.params(i)).map_err(|e| e.to_string())?);
        }
    }
    let traces: usize = instances
        .par_iter()
        .enumerate()
        .map(|(i, h)| {
            let strategies = strategy_suite(SEED + i as u64, 8);
            for &s in &strategies {
                let (_, trace) = reduce(h, s);
                if !check_trace_bound(h, &trace) {
                    return Err(format!(
                        "{s} trace {trace} violates the bound on\n{}",
                        format::to_text(h)
                    ));
                }
            }
            Ok(strategies.len())
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .sum();
    Ok(format!(
        "{} instances, {traces} traces within |V|+|E|, one object per step",
        instances.len()
    ))
}

fn lifting(_: &Path) -> Verdict {
    batch_verdict(&BatchConfig::new(Check::Lifting, 200, SEED))
}

fn chain_scaling(dir: &Path) -> Verdict {
    let mut lens = Vec::new();
    for length in [7usize, 15, 31] {
        let start = Instant::now();
        let file = dir.join(format!("chain{length}.hg")).to_string_lossy().into_owned();
        let (code, _) = cli(&["chain", "--length", &length.to_string(), "-o", &file])?;
        ensure(code == 0, || format!("`chain --length {length}` exited {code}"))?;
        for strategy in ["lex-node-first", "lex-edge-first", "random"] {
            let out_file = format!("{file}.{strategy}");
            let (code, out) = cli(&[
                "reduce",
                &file,
                "--strategy",
                strategy,
                "--seed",
                "5",
                "--trace",
                "-o",
                &out_file,
            ])?;
            ensure(code == 0, || format!("reduce exited {code}"))?;
            let kinds: Vec<&str> = out.lines().map(|l| l.split(' ').next().unwrap_or("")).collect();
            let expected = length.div_ceil(2);
            ensure(kinds.len() == expected, || {
                format!("L={length} {strategy}: {} steps, expected {expected}", kinds.len())
            })?;
            let alternating = kinds
                .iter()
                .enumerate()
                .all(|(i, k)| *k == if i % 2 == 0 { "node" } else { "edge" });
            ensure(alternating, || format!("L={length} {strategy}: kinds {kinds:?}"))?;
            let (code, _) = cli(&["minimal", &out_file])?;
            ensure(code == 0, || format!("L={length} {strategy}: result not minimal"))?;
        }
        let h = alternating_chain(length).map_err(|e| e.to_string())?;
        let mut current = h;
        while !is_minimal(&current) {
            let rules = find_all(&current);
            ensure(rules.len() == 1, || {
                format!("L={length}: {} applicable rules", rules.len())
            })?;
            current = apply(&current, &rules[0]).map_err(|e| e.to_string())?;
        }
        ensure(start.elapsed() < secs(1), || {
            format!("L={length} took {:.2?}", start.elapsed())
        })?;
        lens.push(format!("L={length}: {}", length.div_ceil(2)));
    }
    Ok(format!("forced alternating traces, {}", lens.join(", ")))
}
