//! One function per subcommand.

use std::fmt::Write as _;
use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use tvacc_core::format::{parse_graph, parse_vertex_fn, write_graph, write_vertex_fn};
use tvacc_core::matching::{conjecture1_check, khza_check, theorem2_check, RegularCase};
use tvacc_core::oracle::{vacc_bruteforce, vacc_formula_avg};
use tvacc_core::spread::min_dynamic_monopoly;
use tvacc_core::{
    compute_hull, dyn_tree, gen, is_dynamic_monopoly, solve_vacc, BoundReport, Error, ExtInt, Graph, RootedTree,
    VertexFn, VertexSet,
};

use crate::{CliError, Family, Outcome};

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_owned(), source })
}

fn in_file(path: &Path) -> impl FnOnce(Error) -> CliError + '_ {
    move |error| CliError::Core { error, context: Some(path.display().to_string()) }
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    parse_graph(&read(path)?).map_err(in_file(path))
}

/// A literal `const c` unless a file of that name exists.
fn load_fn(arg: &str, n: usize) -> Result<VertexFn, CliError> {
    let path = Path::new(arg);
    if arg.trim_start().starts_with("const") && !path.exists() {
        return parse_vertex_fn(arg, n).map_err(|error| CliError::Core { error, context: Some(format!("`{arg}`")) });
    }
    parse_vertex_fn(&read(path)?, n).map_err(in_file(path))
}

fn ext(x: ExtInt) -> Value {
    match x {
        ExtInt::Finite(v) => json!(v),
        ExtInt::NegInf => json!("-inf"),
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn hull(graph: &Path, thresholds: &str, seeds: &[usize]) -> Result<Outcome, CliError> {
    let g = load_graph(graph)?;
    let tau = load_fn(thresholds, g.n())?;
    if let Some(&vertex) = seeds.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex, n: g.n() }.into());
    }
    let seed = VertexSet::from_vertices(g.n(), seeds.iter().copied());
    let h = compute_hull(&g, &tau, &seed);
    let monopoly = h.is_full();
    debug_assert_eq!(monopoly, is_dynamic_monopoly(&g, &tau, &seed));
    Ok(Outcome {
        command: "hull",
        inputs: json!({ "graph": graph.display().to_string(), "thresholds": thresholds, "seeds": seed.to_vec() }),
        result: json!({ "hull": h.to_vec(), "is_monopoly": monopoly }),
        text: format!("hull: {}\nis_monopoly: {monopoly}\n", join(h.iter())),
        holds: true,
    })
}

pub fn vacc(
    tree: &Path,
    thresholds: &str,
    iota_max: &str,
    budget: i64,
    root: usize,
    emit: Option<&Path>,
) -> Result<Outcome, CliError> {
    let g = load_graph(tree)?;
    let tau = load_fn(thresholds, g.n())?;
    let cap = load_fn(iota_max, g.n())?;
    let t = RootedTree::new(g, root)?;
    let solution = solve_vacc(&t, &tau, &cap, budget)?;
    let achieved = dyn_tree(&t, &(&tau + &solution.increment))?;
    if achieved != solution.value {
        return Err(CliError::SelfCheck(format!(
            "increment yields dyn {achieved}, expected {}",
            solution.value
        )));
    }
    if let Some(path) = emit {
        std::fs::write(path, write_vertex_fn(&solution.increment))
            .map_err(|source| CliError::Write { path: path.to_owned(), source })?;
    }
    Ok(Outcome {
        command: "vacc",
        inputs: json!({
            "tree": tree.display().to_string(),
            "thresholds": thresholds,
            "iota_max": iota_max,
            "budget": budget,
            "root": root,
        }),
        result: json!({ "vacc": solution.value, "increment": solution.increment.values() }),
        text: format!("vacc: {}\nincrement: {}\n", solution.value, join(solution.increment.values())),
        holds: true,
    })
}

pub fn dyn_size(graph: &Path, thresholds: &str, tree_mode: bool, size_limit: usize) -> Result<Outcome, CliError> {
    let g = load_graph(graph)?;
    let tau = load_fn(thresholds, g.n())?;
    let (value, monopoly) = if tree_mode {
        (dyn_tree(&RootedTree::new(g, 0)?, &tau)?, None)
    } else {
        let m = min_dynamic_monopoly(&g, &tau, size_limit)?;
        (m.len() as i64, Some(m.to_vec()))
    };
    let mut text = format!("dyn: {value}\n");
    if let Some(m) = &monopoly {
        let _ = writeln!(text, "monopoly: {}", join(m));
    }
    Ok(Outcome {
        command: "dyn",
        inputs: json!({
            "graph": graph.display().to_string(),
            "thresholds": thresholds,
            "mode": if tree_mode { "tree" } else { "exact" },
            "size_limit": size_limit,
        }),
        result: json!({ "dyn": value, "monopoly": monopoly }),
        text,
        holds: true,
    })
}

fn verdict(holds: bool) -> &'static str {
    if holds {
        "holds"
    } else {
        "FAILS"
    }
}

pub fn check_formula(graph: &Path, total: Option<i64>, size_limit: usize) -> Result<Outcome, CliError> {
    let g = load_graph(graph)?;
    let totals = match total {
        Some(t) => t..=t,
        None => 0..=2 * g.m() as i64 + g.n() as i64,
    };
    let cap = VertexFn::new(g.degrees().values().iter().map(|d| d + 1).collect());
    let zero = VertexFn::zeros(g.n());
    let (mut reports, mut text, mut all) = (Vec::new(), String::new(), true);
    for t in totals.clone() {
        let formula = vacc_formula_avg(&g, t)?;
        let exhaustive = vacc_bruteforce(&g, &zero, &cap, t, size_limit)?;
        let holds = exhaustive == ExtInt::Finite(formula as i64);
        all &= holds;
        reports.push(json!({ "total": t, "formula": formula, "bruteforce": ext(exhaustive), "holds": holds }));
        let _ = writeln!(text, "total {t}: formula {formula}, exhaustive {exhaustive}, {}", verdict(holds));
    }
    let _ = writeln!(text, "{}", verdict(all));
    Ok(Outcome {
        command: "check formula",
        inputs: json!({ "graph": graph.display().to_string(), "total": total, "size_limit": size_limit }),
        result: json!({ "holds": all, "reports": reports }),
        text,
        holds: all,
    })
}

#[derive(Clone, Copy)]
pub enum Bound {
    Khza,
    Conjecture1,
    Theorem2,
}

impl Bound {
    fn name(self) -> &'static str {
        match self {
            Bound::Khza => "check khza",
            Bound::Conjecture1 => "check conjecture1",
            Bound::Theorem2 => "check theorem2",
        }
    }

    fn run(self, g: &Graph, b: i64, size_limit: usize) -> tvacc_core::Result<BoundReport> {
        match self {
            Bound::Khza => khza_check(g, b, size_limit),
            Bound::Conjecture1 => conjecture1_check(g, b, size_limit),
            Bound::Theorem2 => theorem2_check(g, b, size_limit),
        }
    }

    /// Every budget the statement speaks about.
    fn budgets(self, g: &Graph) -> Result<std::ops::RangeInclusive<i64>, CliError> {
        match self {
            Bound::Khza if !g.is_tree() => Err(Error::NotATree.into()),
            Bound::Khza | Bound::Conjecture1 => Ok(0..=2 * g.m() as i64),
            Bound::Theorem2 => {
                let r = g.regular_degree().ok_or(Error::NotRegular)? as i64;
                let range = ((2 * r - 1) * (r + 1)).max(0)..=r * g.n() as i64;
                if range.is_empty() {
                    return Err(CliError::Invalid(format!(
                        "no admissible budget: {}..={} is empty",
                        range.start(),
                        range.end()
                    )));
                }
                Ok(range)
            }
        }
    }
}

fn report_json(b: i64, r: &BoundReport) -> Value {
    let case = r.case.as_ref().map(|c| match c {
        RegularCase::LargeMatching { size } => json!({ "kind": "large_matching", "size": size }),
        RegularCase::SmallMatching { cover } => json!({ "kind": "small_matching", "cover": cover }),
    });
    json!({
        "budget": b,
        "lhs": ext(r.lhs),
        "rhs": r.rhs,
        "ratio": r.ratio().map(|q| json!({ "num": q.numer(), "den": q.denom() })),
        "witness_edges": r.witness.edges(),
        "case": case,
        "holds": r.holds,
    })
}

fn report_text(b: i64, r: &BoundReport) -> String {
    let ratio = r.ratio().map_or_else(|| "undefined".to_owned(), |q| q.to_string());
    let witness = r.witness.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ");
    let case = match &r.case {
        Some(RegularCase::LargeMatching { size }) => format!(", large matching (size {size})"),
        Some(RegularCase::SmallMatching { cover }) => format!(", small matching (cover {cover})"),
        None => String::new(),
    };
    format!(
        "budget {b}: lhs {}, rhs {}, ratio {ratio}, witness [{witness}]{case}, {}\n",
        r.lhs,
        r.rhs,
        verdict(r.holds)
    )
}

pub fn check_bound(bound: Bound, graph: &Path, budget: Option<i64>, size_limit: usize) -> Result<Outcome, CliError> {
    let g = load_graph(graph)?;
    let budgets = match budget {
        Some(b) => b..=b,
        None => bound.budgets(&g)?,
    };
    let (mut reports, mut text, mut all) = (Vec::new(), String::new(), true);
    for b in budgets {
        let report = bound.run(&g, b, size_limit)?;
        all &= report.holds;
        reports.push(report_json(b, &report));
        text.push_str(&report_text(b, &report));
    }
    let _ = writeln!(text, "{}", verdict(all));
    Ok(Outcome {
        command: bound.name(),
        inputs: json!({ "graph": graph.display().to_string(), "budget": budget, "size_limit": size_limit }),
        result: json!({ "holds": all, "reports": reports }),
        text,
        holds: all,
    })
}

pub fn generate(family: Family, n: usize, seed: u64) -> Result<Outcome, CliError> {
    let g = match family {
        Family::Path => gen::path(n),
        Family::Star => gen::star(n),
        Family::Cycle if n < 3 => return Err(CliError::Invalid("a cycle needs at least 3 vertices".into())),
        Family::Cycle => gen::cycle(n),
        Family::RandomTree if n == 0 => return Err(CliError::Invalid("a tree needs at least 1 vertex".into())),
        Family::RandomTree => gen::random_tree(n, &mut ChaCha8Rng::seed_from_u64(seed)),
    };
    let name = match family {
        Family::Path => "path",
        Family::Star => "star",
        Family::Cycle => "cycle",
        Family::RandomTree => "random-tree",
    };
    Ok(Outcome {
        command: "gen",
        inputs: json!({ "family": name, "n": n, "seed": seed }),
        result: json!({ "n": g.n(), "m": g.m(), "edges": g.edges() }),
        text: write_graph(&g),
        holds: true,
    })
}
