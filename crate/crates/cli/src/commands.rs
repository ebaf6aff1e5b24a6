//! Command implementations. Each fills a [`Report`] and returns a
//! [`Failure`] on error; partial results recorded before a failure are kept.

use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use srg_chroma::arith::{format_rational, int, Rational};
use srg_chroma::chroma::{
    chromatic_bounds, exact_chromatic, verify_coloring, ChromaError, Coloring, LowerBound, UpperSource,
};
use srg_chroma::graph::Graph;
use srg_chroma::packing::{
    build_representation, lift_cross_product, maehara_lift, representation_to_packing, verify, PackingCertificate,
    PackingError,
};
use srg_chroma::quadrangle::{build_gq_with_limit, find_spread, QuadrangleError, SpreadCertificate};
use srg_chroma::srg::{
    assumption_holds, ceil_u64, compare_table, complement_params, eigenvalues, gq_complement_params,
    gq_point_graph_params, hoffman_chromatic_lower, parse_table_expected, parse_table_rows, spectrum, table1,
    SrgError, SrgParams, TABLE1_DATA, TABLE1_EXPECTED,
};

use crate::config::Config;
use crate::report::{digest, ExitCode, Failure, Report, CITED, COMPUTED_BOUND, COMPUTED_EXACT};

/// Resolved settings shared by all commands.
#[derive(Debug, Clone)]
pub struct Context {
    pub config: Config,
    pub data_dir: Option<PathBuf>,
    pub budget: Option<u64>,
}

impl Context {
    fn spread_budget(&self) -> u64 {
        self.budget.unwrap_or(self.config.spread_budget)
    }

    fn chroma_budget(&self) -> u64 {
        self.budget.unwrap_or(self.config.chroma_budget)
    }

    /// `path` as given, or relative to the data directory if it does not exist.
    fn resolve(&self, path: &Path) -> PathBuf {
        match &self.data_dir {
            Some(dir) if !path.exists() && path.is_relative() => {
                let candidate = dir.join(path);
                if candidate.exists() {
                    candidate
                } else {
                    path.to_path_buf()
                }
            }
            _ => path.to_path_buf(),
        }
    }

    fn read(&self, path: &Path, report: &mut Report) -> Result<Vec<u8>, Failure> {
        let resolved = self.resolve(path);
        let bytes = std::fs::read(&resolved)
            .map_err(|e| Failure::new(ExitCode::Usage, format!("cannot read {}: {e}", resolved.display())))?;
        report.input_digest = digest(&bytes);
        Ok(bytes)
    }
}

/// A chromatic number known from the literature for a graph beyond the
/// exact solver, keyed by SRG parameters.
#[derive(Debug, Clone, Copy)]
pub struct CitedChromatic {
    pub params: (u64, u64, u64, u64),
    pub chi: u64,
    pub source: &'static str,
}

pub const CITED_CHROMATIC: &[CitedChromatic] = &[CitedChromatic {
    params: (275, 162, 105, 81),
    chi: 55,
    source: "Haemers (1995): the Hoffman bound is attained for the complement of the McLaughlin graph",
}];

fn cited(params: (u64, u64, u64, u64)) -> Option<&'static CitedChromatic> {
    CITED_CHROMATIC.iter().find(|c| c.params == params)
}

fn params_json(p: (u64, u64, u64, u64)) -> Value {
    json!({ "v": p.0, "k": p.1, "lambda": p.2, "mu": p.3 })
}

fn write_output(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::new(ExitCode::Usage, format!("cannot write {}: {e}", path.display())))
}

fn srg_failure(e: &SrgError) -> Failure {
    match e {
        SrgError::AssumptionViolated { complement, .. } => {
            let f = Failure::new(ExitCode::Assumption, e.to_string());
            match complement {
                Some(c) if assumption_holds(c) => {
                    f.with_hint(format!("the complement {c} satisfies the condition; rerun with --complement"))
                }
                _ => f,
            }
        }
        SrgError::ConferenceGraph { .. } => Failure::new(ExitCode::Conference, e.to_string()),
        _ => Failure::new(ExitCode::Verification, e.to_string()),
    }
}

fn packing_failure(e: PackingError) -> Failure {
    match e {
        PackingError::Srg(s) => srg_failure(&s),
        PackingError::NonUniformRadii(_)
        | PackingError::CentersNotOnUnitSphere(..)
        | PackingError::DegenerateRadius(_) => Failure::new(ExitCode::LiftPrecondition, e.to_string()),
        other => Failure::new(ExitCode::Verification, other.to_string()),
    }
}

fn quadrangle_failure(e: QuadrangleError) -> Failure {
    match e {
        QuadrangleError::Field(_) | QuadrangleError::UnsupportedSize { .. } => {
            Failure::new(ExitCode::Usage, e.to_string())
        }
        QuadrangleError::SearchBudgetExceeded(_) => Failure::new(ExitCode::Budget, e.to_string())
            .with_hint("raise --budget or spread_budget in the config file"),
        other => Failure::new(ExitCode::Verification, other.to_string()),
    }
}

fn parse_graph(bytes: &[u8]) -> Result<Graph, Failure> {
    let text = std::str::from_utf8(bytes)
        .map_err(|_| Failure::new(ExitCode::Usage, "graph6 input is not ASCII"))?;
    Graph::from_graph6(text).map_err(|e| Failure::new(ExitCode::Usage, e.to_string()))
}

fn srg_params(g: &Graph) -> Result<SrgParams, Failure> {
    let check = g
        .srg_check()
        .map_err(|e| Failure::new(ExitCode::Verification, e.to_string()))?;
    check.params().map_err(|e| srg_failure(&e))
}

// ---------------------------------------------------------------- table1

pub fn table1_cmd(ctx: &Context, report: &mut Report) -> Result<(), Failure> {
    let load = |name: &str, bundled: &'static str| -> Result<(String, String), Failure> {
        match &ctx.data_dir {
            Some(dir) if dir.join(name).exists() => {
                let path = dir.join(name);
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Failure::new(ExitCode::Usage, format!("cannot read {}: {e}", path.display())))?;
                Ok((text, path.display().to_string()))
            }
            _ => Ok((bundled.to_string(), "bundled".to_string())),
        }
    };
    let (rows_text, rows_source) = load("table1.txt", TABLE1_DATA)?;
    let (expected_text, expected_source) = load("table1_expected.txt", TABLE1_EXPECTED)?;
    report.input_digest = digest(format!("{rows_text}\0{expected_text}").as_bytes());
    report.set("sources", json!({ "rows": rows_source, "expected": expected_source }));

    let bad_data = |e: srg_chroma::srg::TableParseError| Failure::new(ExitCode::Usage, format!("table data: {e}"));
    let rows = parse_table_rows(&rows_text).map_err(bad_data)?;
    let expected = parse_table_expected(&expected_text).map_err(bad_data)?;
    let entries = table1(&rows);
    let rows_json: Vec<Value> = entries
        .iter()
        .map(|e| {
            let (v, k, l, m) = e.row.tuple;
            let mut row = json!({ "name": e.row.name, "v": v, "k": k, "lambda": l, "mu": m });
            match &e.cells {
                Ok(c) => {
                    row["r"] = c.r.into();
                    row["f"] = c.f.into();
                    row["s"] = c.s.into();
                    row["g"] = c.g.into();
                    row["hoffman"] = format_rational(&c.hoffman).into();
                }
                Err(err) => row["error"] = err.to_string().into(),
            }
            row
        })
        .collect();
    report.set("rows", rows_json);
    let mismatches = compare_table(&entries, &expected);
    report.set(
        "mismatches",
        mismatches
            .iter()
            .map(|m| json!({ "row": m.row + 1, "name": m.name, "column": m.column, "expected": m.expected, "found": m.found }))
            .collect::<Vec<_>>(),
    );
    report.set("all_match", mismatches.is_empty());
    report.label("rows.parameters", CITED);
    report.label("rows.cells", COMPUTED_EXACT);
    report.label("expected", CITED);
    if let Some(first) = mismatches.first() {
        let row_error = entries.iter().find_map(|e| e.cells.as_ref().err());
        let detail = row_error.map(|e| format!("; {e}")).unwrap_or_default();
        return Err(Failure::new(
            ExitCode::Verification,
            format!("{} cell mismatch(es), first: {first}{detail}", mismatches.len()),
        ));
    }
    Ok(())
}

// ---------------------------------------------------------------- gen

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum GenKind {
    Gq,
    GqComplement,
    HalvedCube,
}

pub const MAX_HALVED_CUBE: u32 = 12;

pub fn gen_cmd(
    ctx: &Context,
    kind: GenKind,
    q: Option<u64>,
    n: Option<u32>,
    out: Option<&Path>,
    report: &mut Report,
) -> Result<(), Failure> {
    let need_q = || q.ok_or_else(|| Failure::new(ExitCode::Usage, "--q is required for this kind"));
    let (graph, expected, canonical) = match kind {
        GenKind::Gq | GenKind::GqComplement => {
            let q = need_q()?;
            let s = build_gq_with_limit(q, ctx.config.max_q).map_err(quadrangle_failure)?;
            let points = s.point_graph();
            report.set("q", q);
            if kind == GenKind::Gq {
                (points, gq_point_graph_params(q, q * q), format!("gen gq q={q}"))
            } else {
                (points.complement(), gq_complement_params(q), format!("gen gq-complement q={q}"))
            }
        }
        GenKind::HalvedCube => {
            let n = n.ok_or_else(|| Failure::new(ExitCode::Usage, "--n is required for halved-cube"))?;
            if !(1..=MAX_HALVED_CUBE).contains(&n) {
                return Err(Failure::new(
                    ExitCode::Usage,
                    format!("--n must lie in 1..={MAX_HALVED_CUBE}"),
                ));
            }
            report.set("n", n);
            (Graph::halved_cube(n), Err(SrgError::OutOfRange(0)), format!("gen halved-cube n={n}"))
        }
    };
    report.input_digest = digest(canonical.as_bytes());
    report.set("order", graph.order());
    report.set("edges", graph.edge_count());
    let check = graph.srg_check();
    report.set(
        "srg",
        match &check {
            Ok(c) => params_json(c.tuple()),
            Err(_) => Value::Null,
        },
    );
    report.label("srg", COMPUTED_EXACT);
    if let (Ok(expected), Ok(c)) = (&expected, &check) {
        if expected.tuple() != c.tuple() {
            return Err(Failure::new(
                ExitCode::Verification,
                format!("construction has parameters {:?}, expected {expected}", c.tuple()),
            ));
        }
    }
    if let Err(e) = &check {
        report.set("srg_error", e.to_string());
    }
    let g6 = graph.to_graph6();
    match out {
        Some(path) => {
            write_output(path, &format!("{g6}\n"))?;
            report.set("graph6_path", path.display().to_string());
        }
        None => report.set("graph6", g6),
    }
    Ok(())
}

// ---------------------------------------------------------------- pack

pub fn pack_cmd(
    ctx: &Context,
    input: &Path,
    out: Option<&Path>,
    complement: bool,
    report: &mut Report,
) -> Result<(), Failure> {
    let bytes = ctx.read(input, report)?;
    let mut g = parse_graph(&bytes)?;
    if complement {
        g = g.complement();
    }
    report.set("complemented", complement);
    let p = srg_params(&g)?;
    report.set("params", params_json(p.tuple()));
    if !assumption_holds(&p) {
        return Err(srg_failure(&SrgError::AssumptionViolated {
            params: p,
            complement: complement_params(&p).ok(),
        }));
    }
    let rep = build_representation(&g, &p).map_err(packing_failure)?;
    let sp = &rep.spectrum;
    report.set("spectrum", json!({ "r": sp.r, "s": sp.s, "f": sp.f, "g": sp.g }));
    report.set("dimension", sp.f);
    report.set("sq_radius", format_rational(&rep.angles.sq_radius));
    report.set("cos_alpha", format_rational(&rep.angles.cos_alpha));
    report.set("cos_beta", format_rational(&rep.angles.cos_beta));
    let hoffman = hoffman_chromatic_lower(&p).map_err(|e| srg_failure(&e))?;
    report.set("hoffman", format_rational(&hoffman));
    report.set("chromatic_lower_bound", ceil_u64(&hoffman));

    let cert = representation_to_packing(&rep);
    let v = verify(&cert).map_err(packing_failure)?;
    let round_trip = v.tangency_graph == g;
    report.set(
        "verdicts",
        json!({
            "gram_matches_eigenprojection": true,
            "psd": true,
            "rank": v.rank,
            "rank_equals_f": v.rank as u64 == sp.f,
            "tangencies": v.tangencies,
            "tangency_round_trip": round_trip,
        }),
    );
    report.label("spectrum", COMPUTED_EXACT);
    report.label("dimension", COMPUTED_EXACT);
    report.label("hoffman", COMPUTED_EXACT);
    report.label("verdicts", COMPUTED_EXACT);
    if !round_trip {
        return Err(Failure::new(ExitCode::Verification, "tangency graph differs from the input graph"));
    }
    if let Some(path) = out {
        write_output(path, &cert.to_json())?;
        report.set("certificate", path.display().to_string());
    }
    Ok(())
}

// ---------------------------------------------------------------- lift

/// Chromatic number of a base graph: exact by search when small enough,
/// otherwise from bounds, exact when they meet.
struct BaseChromatic {
    value: usize,
    exact: bool,
    method: String,
}

fn lower_source_name(b: &LowerBound) -> String {
    match b {
        LowerBound::Clique(c) => format!("clique of size {}", c.len()),
        LowerBound::Independence { alpha } => format!("v/alpha with alpha = {alpha}"),
        LowerBound::Hoffman(h) => format!("Hoffman bound {}", format_rational(h)),
        LowerBound::Search => "exhaustive search".to_string(),
    }
}

fn upper_source_name(u: &UpperSource) -> String {
    match u {
        UpperSource::Greedy => "greedy coloring".to_string(),
        UpperSource::CliquePartition { size } => format!("partition of the complement into {size}-cliques"),
    }
}

fn base_chromatic(ctx: &Context, g: &Graph) -> BaseChromatic {
    if g.order() <= ctx.config.exact_max_vertices {
        if let Ok(r) = exact_chromatic(g, ctx.chroma_budget()) {
            return BaseChromatic {
                value: r.chi,
                exact: true,
                method: "exact branch and bound".into(),
            };
        }
    }
    let b = chromatic_bounds(g, Some(ctx.spread_budget()));
    let exact = b.lower == b.upper;
    BaseChromatic {
        value: b.lower,
        exact,
        method: format!(
            "{} (lower) {} {} (upper {})",
            lower_source_name(&b.lower_source),
            if exact { "meets" } else { "below" },
            upper_source_name(&b.upper_source),
            b.upper
        ),
    }
}

pub fn lift_cmd(ctx: &Context, input: &Path, out: Option<&Path>, report: &mut Report) -> Result<(), Failure> {
    let bytes = ctx.read(input, report)?;
    let text = String::from_utf8_lossy(&bytes);
    let base = PackingCertificate::from_json(&text).map_err(packing_failure)?;
    let base_v = verify(&base).map_err(|e| Failure::new(ExitCode::Verification, format!("input certificate: {e}")))?;
    report.set(
        "base",
        json!({ "n": base.n, "dimension": base.dimension, "tangencies": base_v.tangencies }),
    );
    let lifted = maehara_lift(&base).map_err(packing_failure)?;
    let rho_sq = base.sq_radii[0].clone();
    let lifted_v = verify(&lifted).map_err(|e| Failure::new(ExitCode::Verification, format!("lifted certificate: {e}")))?;
    let join = base_v.tangency_graph.join_with_k2();
    let is_join = lifted_v.tangency_graph == join;
    report.set(
        "lifted",
        json!({
            "n": lifted.n,
            "dimension": lifted.dimension,
            "sq_radius_small": format_rational(&rho_sq),
            "sq_radius_big": format_rational(&lifted.sq_radii[base.n]),
            "cross_radius_product": format_rational(&lift_cross_product(&rho_sq)),
            "tangencies": lifted_v.tangencies,
        }),
    );
    report.set(
        "verdicts",
        json!({ "base_verified": true, "lifted_verified": true, "rank": lifted_v.rank, "tangency_graph_is_join_with_k2": is_join }),
    );
    report.label("lifted", COMPUTED_EXACT);
    report.label("verdicts", COMPUTED_EXACT);
    if !is_join {
        return Err(Failure::new(ExitCode::Verification, "lifted tangency graph is not the join with K2"));
    }

    let b = base_chromatic(ctx, &base_v.tangency_graph);
    let mut claim = json!({ "base": b.value, "base_exact": b.exact, "base_method": b.method });
    let lifted_exact = (b.exact && join.order() <= ctx.config.exact_max_vertices)
        .then(|| exact_chromatic(&join, ctx.chroma_budget()).ok())
        .flatten();
    match lifted_exact {
        Some(r) => {
            if r.chi != b.value + 2 {
                return Err(Failure::new(
                    ExitCode::Verification,
                    format!("lifted chromatic number {} differs from base + 2 = {}", r.chi, b.value + 2),
                ));
            }
            claim["value"] = r.chi.into();
            claim["kind"] = "exact".into();
            claim["method"] = "exact branch and bound on the lifted tangency graph".into();
            report.label("chi", COMPUTED_EXACT);
        }
        None => {
            claim["value"] = (b.value + 2).into();
            claim["kind"] = if b.exact { "exact" } else { "lower_bound" }.into();
            claim["method"] = "base chromatic number plus two: joining K2 adds exactly two colors".into();
            report.label("chi", if b.exact { COMPUTED_EXACT } else { COMPUTED_BOUND });
        }
    }
    report.set("chi", claim);
    if let Some(path) = out {
        write_output(path, &lifted.to_json())?;
        report.set("certificate", path.display().to_string());
    }
    Ok(())
}

// ---------------------------------------------------------------- spread / color

pub fn spread_cmd(
    ctx: &Context,
    q: u64,
    out: Option<&Path>,
    include_coloring: bool,
    report: &mut Report,
) -> Result<(), Failure> {
    report.input_digest = digest(format!("{} q={q}", report.command).as_bytes());
    report.set("q", q);
    let s = build_gq_with_limit(q, ctx.config.max_q).map_err(quadrangle_failure)?;
    report.set("points", s.point_count());
    report.set("lines", s.lines().len());
    let sp = find_spread(&s, Some(ctx.spread_budget())).map_err(quadrangle_failure)?;
    let cert = SpreadCertificate::new(&s, &sp).map_err(quadrangle_failure)?;
    let colors = cert.verify().map_err(quadrangle_failure)?;
    report.set("spread_size", sp.lines.len());
    if !include_coloring {
        report.set("spread", sp.lines.clone());
    }

    let complement = s.point_graph().complement();
    let p = srg_params(&complement)?;
    let coloring = Coloring {
        colors: cert.coloring.clone(),
    };
    let proper = verify_coloring(&complement, &coloring).map_err(|e| Failure::new(ExitCode::Verification, e.to_string()))?;
    let lower = ceil_u64(&hoffman_chromatic_lower(&p).map_err(|e| srg_failure(&e))?);
    let exact = proper && lower as usize == colors;
    report.set("complement_params", params_json(p.tuple()));
    report.set("colors", colors);
    if include_coloring {
        report.set("coloring", cert.coloring.clone());
    }
    report.set(
        "verdicts",
        json!({ "gq_axioms": true, "spread_partition": true, "coloring_proper": proper }),
    );
    report.set(
        "sandwich",
        json!({ "lower": lower, "upper": colors, "chi": if exact { Value::from(colors) } else { Value::Null }, "exact": exact }),
    );
    report.label("sandwich.lower", COMPUTED_EXACT);
    report.label("sandwich.upper", COMPUTED_EXACT);
    if let Some(path) = out {
        write_output(path, &cert.to_json())?;
        report.set("certificate", path.display().to_string());
    }
    if !proper {
        return Err(Failure::new(ExitCode::Verification, "spread coloring is not proper"));
    }
    Ok(())
}

// ---------------------------------------------------------------- verify

pub fn verify_cmd(ctx: &Context, input: &Path, report: &mut Report) -> Result<(), Failure> {
    let bytes = ctx.read(input, report)?;
    let text = String::from_utf8_lossy(&bytes);
    if text.trim_start().starts_with('{') {
        let value: Value = serde_json::from_str(&text)
            .map_err(|e| Failure::new(ExitCode::Verification, format!("invalid JSON: {e}")))?;
        if value.get("gram").is_some() {
            report.set("kind", "packing_certificate");
            verify_packing(&text, report)
        } else if value.get("spread").is_some() {
            report.set("kind", "spread_certificate");
            verify_spread(&text, report)
        } else {
            Err(Failure::new(ExitCode::Verification, "JSON is neither a packing nor a spread certificate"))
        }
    } else {
        report.set("kind", "graph6");
        verify_graph(&bytes, report)
    }
}

fn verify_packing(text: &str, report: &mut Report) -> Result<(), Failure> {
    let c = PackingCertificate::from_json(text).map_err(|e| Failure::new(ExitCode::Verification, e.to_string()))?;
    report.set("n", c.n);
    report.set("dimension", c.dimension);
    let v = verify(&c).map_err(|e| Failure::new(ExitCode::Verification, e.to_string()))?;
    report.set(
        "verdicts",
        json!({ "psd": true, "rank": v.rank, "rank_equals_dimension": true, "tangencies_recomputed": v.tangencies, "declared_match": true, "no_overlaps": true }),
    );
    let params = v.tangency_graph.srg_check().ok().map(|c| params_json(c.tuple()));
    report.set("tangency_graph_srg", params.unwrap_or(Value::Null));
    report.label("verdicts", COMPUTED_EXACT);
    Ok(())
}

fn verify_spread(text: &str, report: &mut Report) -> Result<(), Failure> {
    let cert = SpreadCertificate::from_json(text).map_err(|e| Failure::new(ExitCode::Verification, e.to_string()))?;
    report.set("q", cert.q);
    let colors = cert.verify().map_err(|e| Failure::new(ExitCode::Verification, e.to_string()))?;
    report.set("colors", colors);
    let lower = gq_complement_params(cert.q)
        .and_then(|p| hoffman_chromatic_lower(&p))
        .map(|h| ceil_u64(&h))
        .ok();
    report.set(
        "sandwich",
        json!({ "lower": lower, "upper": colors, "exact": lower == Some(colors as u64) }),
    );
    report.set("verdicts", json!({ "gq_axioms": true, "spread_partition": true, "coloring_proper": true }));
    report.label("verdicts", COMPUTED_EXACT);
    Ok(())
}

fn verify_graph(bytes: &[u8], report: &mut Report) -> Result<(), Failure> {
    let g = parse_graph(bytes).map_err(|f| Failure::new(ExitCode::Verification, f.message))?;
    report.set("order", g.order());
    report.set("edges", g.edge_count());
    let check = g
        .srg_check()
        .map_err(|e| Failure::new(ExitCode::Verification, e.to_string()))?;
    report.set("params", params_json(check.tuple()));
    let p = check.params().map_err(|e| Failure::new(ExitCode::Verification, e.to_string()))?;
    report.label("params", COMPUTED_EXACT);
    report.set("assumption_holds", assumption_holds(&p));
    let comp = complement_params(&p).ok();
    report.set("complement_params", comp.map(|c| params_json(c.tuple())).unwrap_or(Value::Null));
    match eigenvalues(&p) {
        Ok((r, s)) => {
            // multiplicities from whichever of the graph and its complement meets the condition
            let (f, g_mult) = match (spectrum(&p), comp.as_ref().map(spectrum)) {
                (Ok(sp), _) => (Some(sp.f), Some(sp.g)),
                (_, Some(Ok(sp))) => (Some(sp.g), Some(sp.f)),
                _ => (None, None),
            };
            report.set("eigenvalues", json!({ "k": p.k, "r": r, "s": s, "f": f, "g": g_mult }));
            let hoffman = Rational::from_integer(1.into()) - int(p.k as i64) / int(s);
            report.set("hoffman", format_rational(&hoffman));
            report.label("hoffman", COMPUTED_EXACT);
        }
        Err(SrgError::ConferenceGraph { delta_sq, .. }) => {
            report.set("conference_graph", true);
            report.set("discriminant", delta_sq);
        }
        Err(e) => return Err(Failure::new(ExitCode::Verification, e.to_string())),
    }
    if let Some(c) = comp {
        if let Some(entry) = cited(c.tuple()) {
            report.set("cited_complement_chi", json!({ "value": entry.chi, "source": entry.source }));
            report.label("cited_complement_chi", CITED);
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- chroma

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChromaMode {
    Exact,
    Bounds,
    Auto,
}

fn lower_json(b: &LowerBound, order: usize) -> Value {
    let kind = match b {
        LowerBound::Clique(_) => "clique",
        LowerBound::Independence { .. } => "independence",
        LowerBound::Hoffman(_) => "hoffman",
        LowerBound::Search => "search",
    };
    let mut v = json!({ "kind": kind, "value": b.value(order), "detail": lower_source_name(b) });
    if let LowerBound::Hoffman(h) = b {
        v["hoffman"] = format_rational(h).into();
    }
    v
}

pub fn chroma_cmd(
    ctx: &Context,
    input: &Path,
    mode: ChromaMode,
    complement: bool,
    report: &mut Report,
) -> Result<(), Failure> {
    let bytes = ctx.read(input, report)?;
    let mut g = parse_graph(&bytes)?;
    if complement {
        g = g.complement();
    }
    report.set("complemented", complement);
    report.set("order", g.order());
    report.set("edges", g.edge_count());
    let check = g.srg_check().ok();
    report.set("srg", check.map(|c| params_json(c.tuple())).unwrap_or(Value::Null));
    if let Some(entry) = check.and_then(|c| cited(c.tuple())) {
        report.set("cited_chi", json!({ "value": entry.chi, "source": entry.source }));
        report.label("cited_chi", CITED);
    }
    let cap = ctx.config.exact_max_vertices;
    let mode = match mode {
        ChromaMode::Auto if g.order() <= cap => ChromaMode::Exact,
        ChromaMode::Auto => ChromaMode::Bounds,
        m => m,
    };
    match mode {
        ChromaMode::Exact => {
            if g.order() > cap {
                return Err(Failure::new(
                    ExitCode::Usage,
                    format!("{} vertices exceed the exact solver cap of {cap}", g.order()),
                )
                .with_hint("use --bounds"));
            }
            report.set("mode", "exact");
            match exact_chromatic(&g, ctx.chroma_budget()) {
                Ok(r) => {
                    report.set("chi", r.chi);
                    report.set("lower_bound", lower_json(&r.lower_bound, g.order()));
                    report.set("nodes", r.nodes);
                    report.set("witness", r.witness.colors);
                    report.label("chi", COMPUTED_EXACT);
                    Ok(())
                }
                Err(ChromaError::BudgetExceeded { nodes, lower, upper }) => {
                    report.set("lower", lower);
                    report.set("upper", upper);
                    report.label("lower", COMPUTED_BOUND);
                    report.label("upper", COMPUTED_BOUND);
                    Err(Failure::new(
                        ExitCode::Budget,
                        format!("search budget of {nodes} nodes exhausted with {lower} <= chi <= {upper}"),
                    )
                    .with_hint("raise --budget or chroma_budget in the config file"))
                }
                Err(e) => Err(Failure::new(ExitCode::Usage, e.to_string())),
            }
        }
        _ => {
            report.set("mode", "bounds");
            let b = chromatic_bounds(&g, Some(ctx.spread_budget()));
            report.set("lower", lower_json(&b.lower_source, g.order()));
            report.set("upper", json!({ "value": b.upper, "detail": upper_source_name(&b.upper_source) }));
            report.set("exact", b.lower == b.upper);
            if b.lower == b.upper {
                report.set("chi", b.lower);
                report.label("chi", COMPUTED_EXACT);
            }
            report.set("witness", b.witness.colors);
            report.label("lower", COMPUTED_BOUND);
            report.label("upper", COMPUTED_BOUND);
            Ok(())
        }
    }
}
