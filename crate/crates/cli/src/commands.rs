use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use chromsym::classifier::{classify, verify_classification, VerifyMode};
use chromsym::io::{expansion_csv, ExpansionJson, GraphSpec};
use chromsym::oracle::{coloring_count, monomial_to_schur, x_in_monomial, KostkaMatrix};
use chromsym::partitions::all_partitions;
use chromsym::posets_graphs::poset_from_covers;
use chromsym::schur_engine::{
    coefficient, expand_schur, positivity_scan, OrderKind, PositivityReport, Route, Subject,
};
use chromsym::sequences::{nsp_bruteforce, nsp_chain_union, DEFAULT_NSP_CAP};
use chromsym::symfunc::SymFunc;
use chromsym::tabloids::{
    count_srh_tabloids, enumerate_srh_g_tabloids, enumerate_srh_tabloids, render_ascii, signed_content_counts,
    signed_tally, TabloidJson,
};
use chromsym::Partition;

use crate::{Cli, Command, Failure, Format, GraphArgs, OptionalGraphArgs, Outcome, RouteArg, VerifyArg};

type Run = Result<Outcome, Failure>;

impl From<chromsym::Error> for Failure {
    fn from(e: chromsym::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn usage(flag: &str, msg: impl std::fmt::Display) -> Failure {
    Failure::Usage(format!("{flag}: {msg}"))
}

fn ok(text: String) -> Run {
    Ok(Outcome { text, failed: false })
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

fn parse_partition(flag: &str, text: &str) -> Result<Partition, Failure> {
    text.parse().map_err(|e: chromsym::Error| usage(flag, e))
}

fn read_spec(flag: &str, path: &Path) -> Result<GraphSpec, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(flag, format!("{}: {e}", path.display())))?;
    let spec = GraphSpec::from_json(&text).map_err(|e| usage(flag, e))?;
    let kind_ok = match (flag, &spec) {
        ("--poset", GraphSpec::Poset { .. }) | ("--graph", GraphSpec::Graph { .. }) => true,
        ("--poset", _) | ("--graph", _) => false,
        _ => true,
    };
    if !kind_ok {
        return Err(usage(flag, format!("{} does not describe a {}", path.display(), &flag[2..])));
    }
    Ok(spec)
}

fn spec_from(
    multipartite: &Option<String>,
    poset: &Option<std::path::PathBuf>,
    graph: &Option<std::path::PathBuf>,
) -> Result<Option<(GraphSpec, &'static str)>, Failure> {
    if let Some(text) = multipartite {
        let lambda = parse_partition("--multipartite", text)?;
        return Ok(Some((GraphSpec::Multipartite { multipartite: lambda }, "--multipartite")));
    }
    if let Some(path) = poset {
        return Ok(Some((read_spec("--poset", path)?, "--poset")));
    }
    if let Some(path) = graph {
        return Ok(Some((read_spec("--graph", path)?, "--graph")));
    }
    Ok(None)
}

/// Reads the graph spec, checks it against the vertex cap and builds it.
fn subject(cli: &Cli, spec: &GraphSpec, flag: &str) -> Result<Subject, Failure> {
    check_vertices(cli, flag, spec.size())?;
    spec.to_subject().map_err(|e| usage(flag, e))
}

fn check_vertices(cli: &Cli, flag: &str, size: usize) -> Result<(), Failure> {
    if size as u64 > cli.max_vertices {
        return Err(usage(
            flag,
            format!("{size} vertices exceed --max-vertices {}", cli.max_vertices),
        ));
    }
    Ok(())
}

fn graph_subject(cli: &Cli, args: &GraphArgs) -> Result<(GraphSpec, Subject), Failure> {
    let (spec, flag) = spec_from(&args.multipartite, &args.poset, &args.graph)?
        .ok_or_else(|| Failure::Usage("one of --multipartite, --poset, --graph is required".into()))?;
    let subject = subject(cli, &spec, flag)?;
    Ok((spec, subject))
}

fn route(arg: RouteArg) -> Route {
    match arg {
        RouteArg::Auto => Route::Auto,
        RouteArg::Ww => Route::Ww,
        RouteArg::Tabloid => Route::Tabloid,
        RouteArg::Tail => Route::Tail,
        RouteArg::Closed => Route::Closed,
        RouteArg::Oracle => Route::Oracle,
    }
}

pub fn run(cli: &Cli) -> Run {
    match &cli.command {
        Command::Expand { graph, route: r, format } => expand(cli, graph, route(*r), *format),
        Command::Coeff {
            graph,
            lambda,
            route: r,
            format,
        } => coeff(cli, graph, lambda, route(*r), *format),
        Command::Classify { lambda, verify } => classify_cmd(cli, lambda, *verify),
        Command::Verify { graph } => verify(cli, graph),
        Command::Tabloids { shape, graph, format } => tabloids(cli, shape, graph, *format),
        Command::Nsp { lambda, poset } => nsp(lambda.as_deref(), poset.as_deref()),
        Command::OracleCheck { max_n } => oracle_check(cli, *max_n as usize),
    }
}

fn ascii_expansion(f: &SymFunc) -> String {
    let mut out = String::new();
    for (lambda, value) in f.terms() {
        let _ = writeln!(out, "{value:>12}  s_{lambda}");
    }
    if out.is_empty() {
        out.push_str("0\n");
    }
    out
}

fn expand(cli: &Cli, args: &GraphArgs, route: Route, format: Format) -> Run {
    let (spec, subject) = graph_subject(cli, args)?;
    let f = expand_schur(&subject, route).map_err(|e| usage("--route", e))?;
    ok(match format {
        Format::Json => ExpansionJson::new(spec, &f).to_json(),
        Format::Csv => expansion_csv(&f),
        Format::Ascii => ascii_expansion(&f),
    })
}

fn coeff(cli: &Cli, args: &GraphArgs, lambda: &str, route: Route, format: Format) -> Run {
    let (_, subject) = graph_subject(cli, args)?;
    let lambda = parse_partition("--lambda", lambda)?;
    let report = coefficient(&subject, &lambda, route).map_err(|e| usage("--route", e))?;
    ok(match format {
        Format::Json => json(&report),
        Format::Csv => {
            let parts: Vec<String> = lambda.parts().iter().map(usize::to_string).collect();
            format!("partition;value\n{};{}\n", parts.join(","), report.value)
        }
        Format::Ascii => format!("[s_{}] = {} ({})\n", report.lambda, report.value, report.route),
    })
}

fn classify_cmd(cli: &Cli, lambda: &str, verify: Option<VerifyArg>) -> Run {
    let lambda = parse_partition("--lambda", lambda)?;
    let report = match verify {
        None => classify(&lambda).map_err(|e| usage("--lambda", e))?,
        Some(mode) => {
            let mode = match mode {
                VerifyArg::Witness => VerifyMode::Witness,
                VerifyArg::Full => {
                    check_vertices(cli, "--lambda", lambda.weight())?;
                    VerifyMode::FullScan
                }
            };
            verify_classification(&lambda, mode, cli.max_vertices as usize).map_err(|e| usage("--lambda", e))?
        }
    };
    Ok(Outcome {
        text: json(&report),
        failed: verify.is_some() && !report.verified,
    })
}

#[derive(Serialize)]
struct RouteCheck {
    route: Route,
    agrees: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_difference: Option<Partition>,
}

#[derive(Serialize)]
struct VerifyReport {
    n: usize,
    routes: Vec<RouteCheck>,
    positivity: PositivityReport,
}

fn verify(cli: &Cli, args: &GraphArgs) -> Run {
    let (_, subject) = graph_subject(cli, args)?;
    let reference = expand_schur(&subject, Route::Oracle)?;
    let mut routes = vec![Route::Ww, Route::Tabloid];
    if subject.kind() == OrderKind::Incomparability {
        routes.push(Route::Tail);
    }
    if subject.closed_family().is_some() {
        routes.push(Route::Closed);
    }
    let mut checks = Vec::new();
    for route in routes {
        let f = expand_schur(&subject, route)?;
        let first_difference = all_partitions(subject.size())
            .into_iter()
            .find(|mu| f.coeff(mu) != reference.coeff(mu));
        checks.push(RouteCheck {
            route,
            agrees: first_difference.is_none(),
            first_difference,
        });
    }
    let positivity = positivity_scan(&subject, cli.max_vertices as usize)?;
    let failed = checks.iter().any(|c| !c.agrees);
    let report = VerifyReport {
        n: subject.size(),
        routes: checks,
        positivity,
    };
    Ok(Outcome {
        text: json(&report),
        failed,
    })
}

fn tabloids(cli: &Cli, shape: &str, args: &OptionalGraphArgs, format: Format) -> Run {
    let shape = parse_partition("--shape", shape)?;
    if format == Format::Csv {
        return Err(usage("--format", "tabloids are rendered as ascii or json"));
    }
    let cap = BigUint::from(cli.max_tabloids);
    let too_many = |count: BigUint| usage("--shape", format!("{count} tabloids exceed --max-tabloids {cap}"));
    match spec_from(&args.multipartite, &args.poset, &args.graph)? {
        None => {
            let count = count_srh_tabloids(&shape);
            if count > cap {
                return Err(too_many(count));
            }
            let list = enumerate_srh_tabloids(&shape);
            ok(match format {
                Format::Json => json(&list.iter().map(TabloidJson::from_tabloid).collect::<Vec<_>>()),
                _ => list.iter().map(|t| render_ascii(t, None)).collect::<Vec<_>>().join("\n"),
            })
        }
        Some((spec, flag)) => {
            let subject = subject(cli, &spec, flag)?;
            if shape.weight() != subject.size() {
                return Err(usage(
                    "--shape",
                    format!("shape of size {} does not match {} vertices", shape.weight(), subject.size()),
                ));
            }
            let tally = signed_tally(subject.graph(), subject.order(), &shape, false)?;
            let count = tally.positive + tally.negative;
            if count > cap {
                return Err(too_many(count));
            }
            let list = enumerate_srh_g_tabloids(subject.graph(), subject.order(), &shape)?;
            let order = subject.order();
            ok(match format {
                Format::Json => json(&list.iter().map(|t| TabloidJson::from_filled(t, order)).collect::<Vec<_>>()),
                _ => list
                    .iter()
                    .map(|t| render_ascii(t.tabloid(), Some((t, order))))
                    .collect::<Vec<_>>()
                    .join("\n"),
            })
        }
    }
}

fn nsp(lambda: Option<&str>, poset: Option<&Path>) -> Run {
    match (lambda, poset) {
        (Some(text), None) => ok(nsp_chain_union(&parse_partition("--lambda", text)?).to_string()),
        (None, Some(path)) => {
            let GraphSpec::Poset { n, covers, .. } = read_spec("--poset", path)? else {
                unreachable!("read_spec checks the kind")
            };
            let order = poset_from_covers(n, &covers).map_err(|e| usage("--poset", e))?;
            let count = nsp_bruteforce(&order, DEFAULT_NSP_CAP).map_err(|e| usage("--poset", e))?;
            ok(count.to_string())
        }
        _ => Err(Failure::Usage("nsp needs exactly one of --lambda, --poset".into())),
    }
}

struct CheckRow {
    name: &'static str,
    cases: usize,
    failures: Vec<String>,
}

fn oracle_check(cli: &Cli, max_n: usize) -> Run {
    check_vertices(cli, "--max-n", max_n)?;
    let mut rows = Vec::new();

    let mut routes = CheckRow {
        name: "routes match oracle on K_lambda",
        cases: 0,
        failures: Vec::new(),
    };
    let mut special = CheckRow {
        name: "specialization matches colorings",
        cases: 0,
        failures: Vec::new(),
    };
    for n in 1..=max_n {
        for lambda in all_partitions(n) {
            let subject = Subject::multipartite(&lambda)?;
            let reference = monomial_to_schur(&x_in_monomial(subject.graph(), max_n)?, max_n)?;
            let mut candidates = vec![Route::Ww, Route::Tabloid, Route::Tail];
            if subject.closed_family().is_some() {
                candidates.push(Route::Closed);
            }
            for route in candidates {
                routes.cases += 1;
                if expand_schur(&subject, route)? != reference {
                    routes.failures.push(format!("{lambda} via {route}"));
                }
            }
            for q in 0..=4 {
                special.cases += 1;
                let want = BigInt::from(coloring_count(subject.graph(), q, max_n)?);
                if reference.specialize_ones(q) != want {
                    special.failures.push(format!("{lambda} at q={q}"));
                }
            }
        }
    }
    rows.push(routes);
    rows.push(special);

    let mut inverse = CheckRow {
        name: "inverse Kostka equals signed tabloids",
        cases: 0,
        failures: Vec::new(),
    };
    for n in 0..=max_n.min(8) {
        let k = KostkaMatrix::new(n);
        let inv = k.inverse();
        for (j, lambda) in k.partitions().iter().enumerate() {
            inverse.cases += 1;
            let counts = signed_content_counts(lambda);
            let agrees = k
                .partitions()
                .iter()
                .enumerate()
                .all(|(i, mu)| counts.get(mu).cloned().unwrap_or_default() == inv[i][j]);
            if !agrees {
                inverse.failures.push(lambda.to_string());
            }
        }
    }
    rows.push(inverse);

    let mut nsp = CheckRow {
        name: "N_sp closed count matches enumeration",
        cases: 0,
        failures: Vec::new(),
    };
    for n in 0..=max_n.min(DEFAULT_NSP_CAP) {
        for lambda in all_partitions(n) {
            nsp.cases += 1;
            let order = chromsym::posets_graphs::Poset::chain_union(&lambda)?;
            if nsp_bruteforce(&order, DEFAULT_NSP_CAP)? != nsp_chain_union(&lambda) {
                nsp.failures.push(lambda.to_string());
            }
        }
    }
    rows.push(nsp);

    let width = rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
    let mut text = format!("{:<width$}  {:>6}  result\n", "check", "cases");
    for row in &rows {
        let status = if row.failures.is_empty() { "PASS" } else { "FAIL" };
        let _ = write!(text, "{:<width$}  {:>6}  {status}", row.name, row.cases);
        if !row.failures.is_empty() {
            let _ = write!(text, " ({})", row.failures.join("; "));
        }
        text.push('\n');
    }
    Ok(Outcome {
        text,
        failed: rows.iter().any(|r| !r.failures.is_empty()),
    })
}
