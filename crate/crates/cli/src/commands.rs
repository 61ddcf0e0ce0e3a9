use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use hyperpd::bounds::{check_bounds_with, CheckOptions};
use hyperpd::campaign::{run_campaign, CampaignConfig};
use hyperpd::generators::{
    bht_tight, counterexample, generalized_squid, random_connected_uniform, squid, GsquidSpec, StrongVertex,
};
use hyperpd::solvers::{all_minimum_kpds, k_power_domination_number, verify_witness, SizeHypothesis};
use hyperpd::solvers::verify_lemmas as run_lemmas;
use hyperpd::{parse_hgr, serialize_hgr_with_comments, ForcingRule, Hypergraph, SolveError, VERSION};
use serde_json::json;

use crate::{CampaignArgs, Failure, GenerateCmd};

fn load(path: &Path) -> Result<Hypergraph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    parse_hgr(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn solve_failure(e: SolveError) -> Failure {
    match e {
        SolveError::EmptyHypergraph => Failure::infeasible(e.to_string()),
        other => Failure::input(other.to_string()),
    }
}

/// Writes to stdout, tolerating a closed pipe (e.g. `| head`).
fn out(text: &str) {
    let _ = io::stdout().lock().write_all(text.as_bytes());
}

fn print_json(value: &serde_json::Value) {
    out(&(serde_json::to_string_pretty(value).expect("json") + "\n"));
}

pub fn solve(input: &Path, k: usize, rule: ForcingRule, all: bool, table: bool) -> Result<(), Failure> {
    let h = load(input)?;
    let result = if all {
        all_minimum_kpds(&h, k, rule)
    } else {
        k_power_domination_number(&h, k, rule)
    }
    .map_err(solve_failure)?;

    if let Some(bad) = result.witnesses.iter().find(|w| !verify_witness(&h, w, k, rule)) {
        return Err(Failure::inconsistent(format!(
            "witness {:?} failed re-verification",
            bad.to_one_based()
        )));
    }
    let witnesses: Vec<Vec<usize>> = result.witnesses.iter().map(|w| w.to_one_based()).collect();
    print_json(&json!({
        "schema": "hyperpd.solve/1",
        "n": h.vertex_count(),
        "m": h.edge_count(),
        "k": k,
        "rule": rule,
        "gamma_pk": result.optimum,
        "witnesses": witnesses,
        "nodes_explored": result.nodes_explored,
    }));
    if table {
        eprintln!("n = {}, m = {}, k = {k}, rule = {rule}", h.vertex_count(), h.edge_count());
        eprintln!("gamma_pk = {}  ({} nodes)", result.optimum, result.nodes_explored);
        for w in &witnesses {
            eprintln!("  witness {w:?}");
        }
    }
    Ok(())
}

fn emit(h: &Hypergraph, comments: Vec<String>, output: Option<PathBuf>) -> Result<(), Failure> {
    let mut lines = vec![format!("generated by hyperpd {VERSION}")];
    lines.extend(comments);
    let text = serialize_hgr_with_comments(h, &lines);
    match output {
        Some(path) => fs::write(&path, text).map_err(|e| Failure::input(format!("{}: {e}", path.display()))),
        None => {
            out(&text);
            Ok(())
        }
    }
}

fn parse_strong_edge(text: &str) -> Result<Vec<StrongVertex>, Failure> {
    text.split(',')
        .map(|item| {
            let (spine, index) = item
                .trim()
                .split_once('.')
                .ok_or_else(|| Failure::input(format!("strong vertex {item:?}: expected spine.index")))?;
            let parse = |s: &str| {
                s.parse::<usize>()
                    .ok()
                    .filter(|&v| v >= 1)
                    .ok_or_else(|| Failure::input(format!("strong vertex {item:?}: indices are 1-based integers")))
            };
            Ok(StrongVertex {
                spine: parse(spine)? - 1,
                index: parse(index)? - 1,
            })
        })
        .collect()
}

pub fn generate(cmd: GenerateCmd) -> Result<(), Failure> {
    let gen_err = |e: hyperpd::GeneratorError| Failure::input(e.to_string());
    match cmd {
        GenerateCmd::Squid { base, k, output } => {
            let b = load(&base)?;
            let h = squid(&b, k).map_err(gen_err)?;
            let name = base.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            emit(&h, vec!["family squid".into(), format!("param base {name}"), format!("param k {k}")], output)
        }
        GenerateCmd::Gsquid {
            k,
            r,
            x,
            strong_edges,
            chain,
            output,
        } => {
            let mut spec = GsquidSpec::new(k, r, x.clone());
            for e in &strong_edges {
                spec.strong_edges.push(parse_strong_edge(e)?);
            }
            if chain {
                spec = spec.chain_spines().map_err(gen_err)?;
            }
            let h = generalized_squid(&spec).map_err(gen_err)?;
            let xs: Vec<String> = x.iter().map(ToString::to_string).collect();
            let mut comments = vec![
                "family gsquid".into(),
                format!("param d {}", x.len()),
                format!("param k {k}"),
                format!("param r {r}"),
                format!("param x {}", xs.join(",")),
            ];
            for e in &spec.strong_edges {
                let items: Vec<String> = e.iter().map(|v| format!("{}.{}", v.spine + 1, v.index + 1)).collect();
                comments.push(format!("param strong-edge {}", items.join(",")));
            }
            emit(&h, comments, output)
        }
        GenerateCmd::Counterexample { k, ell, output } => {
            let h = counterexample(k, ell).map_err(gen_err)?;
            emit(
                &h,
                vec!["family counterexample".into(), format!("param k {k}"), format!("param ell {ell}")],
                output,
            )
        }
        GenerateCmd::Bht { r, output } => {
            let h = bht_tight(r).map_err(gen_err)?;
            emit(&h, vec!["family bht".into(), format!("param r {r}")], output)
        }
        GenerateCmd::Random { n, r, m, seed, output } => {
            let h = random_connected_uniform(n, r, m, seed).map_err(gen_err)?;
            emit(
                &h,
                vec![
                    "family random".into(),
                    format!("param n {n}"),
                    format!("param r {r}"),
                    format!("param m {m}"),
                    format!("param seed {seed}"),
                ],
                output,
            )
        }
    }
}

pub fn check(input: &Path, k: usize, rule: ForcingRule, gamma: bool, table: bool) -> Result<(), Failure> {
    let h = load(input)?;
    let report = check_bounds_with(
        &h,
        k,
        &CheckOptions {
            rule,
            include_gamma: gamma,
            ..Default::default()
        },
    )
    .map_err(solve_failure)?;
    print_json(&serde_json::to_value(&report).expect("json"));
    if table {
        eprintln!("gamma_pk = {}  witness {:?}", report.gamma_pk, report.witness);
        for b in &report.bounds {
            let value = b.value.map(|v| v.to_string()).unwrap_or_else(|| "-".into());
            eprintln!("  {:<16} {:>8}  {:?}", b.name, value, b.verdict);
        }
    }
    if !report.witness_verified {
        return Err(Failure::inconsistent("solver witness failed re-verification"));
    }
    Ok(())
}

pub fn verify_lemmas(input: &Path, k: usize, hypothesis: SizeHypothesis, table: bool) -> Result<(), Failure> {
    let h = load(input)?;
    let (lower, upper) = run_lemmas(&h, k, hypothesis).map_err(solve_failure)?;
    print_json(&json!({
        "schema": "hyperpd.lemmas/1",
        "lemma4": lower,
        "lemma5": upper,
    }));
    if table {
        eprintln!("lemma4: {:?}", lower.outcome);
        eprintln!("lemma5: {:?}", upper.outcome);
        for e in &lower.entries {
            eprintln!("  v = {:<4} deg_w = {:<3} |epn| = {}", e.vertex, e.white_degree, e.epn_size);
        }
    }
    Ok(())
}

pub fn campaign(args: CampaignArgs, table: bool) -> Result<(), Failure> {
    let mut config = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
            toml::from_str::<CampaignConfig>(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?
        }
        None => CampaignConfig::default(),
    };
    if let Some(f) = args.family {
        config.family = f;
    }
    if !args.ranks.is_empty() {
        config.ranks = args.ranks;
    }
    if let Some(v) = args.n_min {
        config.n_min = v;
    }
    if let Some(v) = args.n_max {
        config.n_max = v;
    }
    if args.m_min.is_some() {
        config.m_min = args.m_min;
    }
    if args.m_max.is_some() {
        config.m_max = args.m_max;
    }
    if !args.k.is_empty() {
        config.budgets = args.k;
    }
    if let Some(v) = args.samples {
        config.samples = v;
    }
    if let Some(v) = args.seed {
        config.seed = v;
    }
    if !args.rules.is_empty() {
        config.rules = args.rules;
    }
    if !args.checks.is_empty() {
        config.checks = args.checks;
    }
    if args.gamma {
        config.include_gamma = true;
    }
    if let Some(h) = args.hypothesis {
        config.lemma_hypothesis = h;
    }
    if let Some(ms) = args.timeout_ms {
        config.timeout_ms = (ms > 0).then_some(ms);
    }
    if args.timings {
        config.record_timings = true;
    }

    let report = run_campaign(&config).map_err(|e| Failure::input(e.to_string()))?;
    let text = report.to_json();
    let line = report.summary.line();
    match &args.output {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
            out(&(line + "\n"));
        }
        None => {
            out(&text);
            eprintln!("{line}");
        }
    }
    if table {
        for (bound, tally) in &report.summary.verdicts {
            eprintln!("  {bound:<28} {tally:?}");
        }
        for f in report
            .summary
            .violations
            .iter()
            .chain(&report.summary.lemma_failures)
            .chain(&report.summary.separations)
        {
            eprintln!("  instance {}: {}", f.index, f.finding);
        }
    }
    if report.summary.inconsistencies > 0 {
        return Err(Failure::inconsistent("a solver witness failed re-verification"));
    }
    Ok(())
}
