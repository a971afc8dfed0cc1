use std::io::Read as _;
use std::path::Path;

use cfc_core::io::{
    parse_coloring, parse_edge_list, write_coloring, write_edge_list_with_comments,
};
use cfc_core::theorems::{certify_sharpness, run_harness, CorpusModel, HarnessConfig};
use cfc_core::{
    block_decomposition, cfc_bracket, count_cut_edges, cut_edge_profile, exact_cfc, find_cut_edges,
    two_coloring, verify_with, Budget, Edge, Error, FamilySpec, Graph, TheoremId, VerifyStrategy,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::render::{dot_coloring, dot_graph, text_from_json};
use crate::{Format, InputArgs, VerifyArgs};

pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_HYPOTHESIS: u8 = 3;
pub const EXIT_BUDGET: u8 = 4;
pub const EXIT_COUNTEREXAMPLE: u8 = 5;

pub struct Done {
    pub output: String,
    pub code: u8,
}

impl Done {
    fn ok(output: String) -> Self {
        Done { output, code: 0 }
    }
}

#[derive(Debug)]
pub struct Failure {
    pub message: String,
    pub code: u8,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            code: EXIT_USAGE,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. }
            | Error::ParamOutOfRange(_)
            | Error::UnknownTheorem(_)
            | Error::InvalidVertex { .. }
            | Error::SelfLoop(_)
            | Error::EmptyGraph => EXIT_USAGE,
            Error::HypothesisViolated(_)
            | Error::CompleteGraph
            | Error::NotConnected
            | Error::TrivialGraph => EXIT_HYPOTHESIS,
            Error::BudgetExhausted { .. } => EXIT_BUDGET,
            _ => EXIT_FAILURE,
        };
        Failure {
            message: e.to_string(),
            code,
        }
    }
}

type Outcome = Result<Done, Failure>;

fn read_text(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let read = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| Failure {
        message: format!("cannot read {}: {e}", path.display()),
        code: EXIT_FAILURE,
    })?;
    Ok(text)
}

fn load_graph(input: &InputArgs) -> Result<(Graph, String), Failure> {
    match (&input.path, &input.family) {
        (Some(path), None) => {
            let g = parse_edge_list(&read_text(path)?).map_err(|e| Failure {
                message: format!("{}: {e}", path.display()),
                code: EXIT_USAGE,
            })?;
            Ok((g, path.display().to_string()))
        }
        (None, Some(spec)) => {
            let spec: FamilySpec = spec.parse()?;
            Ok((spec.generate()?, spec.to_string()))
        }
        _ => Err(Failure::usage(
            "give exactly one of an input path or --family",
        )),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn emit(value: &Value, format: Format) -> Result<String, Failure> {
    match format {
        Format::Json => Ok(to_json(value)),
        Format::Text => Ok(text_from_json(value)),
        Format::Dot => Err(Failure::usage(
            "dot output is not available for this command",
        )),
    }
}

#[derive(Serialize)]
struct ProfileSummary {
    is_linear_forest: bool,
    component_orders: Vec<usize>,
    two_color_shape: bool,
    construction_applies: bool,
}

#[derive(Serialize)]
struct AnalyzeReport {
    source: String,
    n: usize,
    m: usize,
    connected: bool,
    complete: bool,
    min_degree: usize,
    min_nonadjacent_degree_sum: Option<usize>,
    cut_edge_count: Option<usize>,
    cut_edges: Option<Vec<Edge>>,
    cut_edge_profile: Option<ProfileSummary>,
    block_count: Option<usize>,
    nontrivial_block_count: Option<usize>,
    cut_vertices: Option<Vec<usize>>,
    cfc_bounds: Option<(usize, usize)>,
}

pub fn analyze(input: &InputArgs, format: Option<Format>) -> Outcome {
    let (g, source) = load_graph(input)?;
    let connected = g.is_connected()?;
    let mut report = AnalyzeReport {
        source,
        n: g.vertex_count(),
        m: g.edge_count(),
        connected,
        complete: g.is_complete(),
        min_degree: g.min_degree()?,
        min_nonadjacent_degree_sum: g.min_nonadjacent_degree_sum(),
        cut_edge_count: None,
        cut_edges: None,
        cut_edge_profile: None,
        block_count: None,
        nontrivial_block_count: None,
        cut_vertices: None,
        cfc_bounds: None,
    };
    if connected {
        let cut_edges = find_cut_edges(&g)?;
        let profile = cut_edge_profile(&g)?;
        report.cut_edge_count = Some(cut_edges.len());
        report.cut_edges = Some(cut_edges);
        report.cut_edge_profile = Some(ProfileSummary {
            is_linear_forest: profile.is_linear_forest,
            component_orders: profile.component_orders.clone(),
            two_color_shape: profile.has_two_color_shape(),
            construction_applies: !g.is_complete() && profile.admits_two_coloring_construction(),
        });
        if g.vertex_count() > 1 {
            let d = block_decomposition(&g)?;
            report.block_count = Some(d.blocks.len());
            report.nontrivial_block_count = Some(d.nontrivial_blocks().count());
            report.cut_vertices = Some(d.cut_vertices.clone());
        }
        report.cfc_bounds = Some(cfc_bracket(&g)?);
    }
    let output = match format.unwrap_or(Format::Json) {
        Format::Dot => dot_graph(&g, report.cut_edges.as_deref().unwrap_or(&[])),
        other => emit(&serde_json::to_value(&report).expect("serializable"), other)?,
    };
    Ok(Done::ok(output))
}

pub fn color2(
    input: &InputArgs,
    check: Option<&Path>,
    format: Option<Format>,
    out: Option<&Path>,
) -> Outcome {
    let (g, source) = load_graph(input)?;
    let coloring = match check {
        Some(path) => parse_coloring(&read_text(path)?)
            .and_then(|file| file.bind(&g))
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?,
        None => two_coloring(&g)?,
    };
    let verdict = verify_with(&coloring, VerifyStrategy::Auto)?;
    let verified = verdict.is_conflict_free_connected;
    if let (Some(path), None) = (out, check) {
        std::fs::write(path, write_coloring(&coloring)).map_err(|e| Failure {
            message: format!("cannot write {}: {e}", path.display()),
            code: EXIT_FAILURE,
        })?;
    }
    let output = match format.unwrap_or(Format::Json) {
        Format::Json => to_json(&json!({
            "source": source,
            "n": g.vertex_count(),
            "m": g.edge_count(),
            "mode": if check.is_some() { "check" } else { "construct" },
            "verified": verified,
            "failing_pair": verdict.failing_pair,
            "coloring": coloring,
        })),
        Format::Text => {
            let mut text = write_coloring(&coloring);
            text.push_str(&format!("# verified: {verified}\n"));
            text
        }
        Format::Dot => dot_coloring(&coloring),
    };
    Ok(Done {
        output,
        code: if verified { 0 } else { EXIT_FAILURE },
    })
}

pub fn cfc(
    input: &InputArgs,
    max_colors: usize,
    budget: Option<u64>,
    format: Option<Format>,
) -> Outcome {
    let (g, source) = load_graph(input)?;
    let format = format.unwrap_or(Format::Json);
    if g.vertex_count() == 1 {
        let value = json!({ "source": source, "n": 1, "m": 0, "status": "exact", "value": 0, "method": "trivial" });
        return Ok(Done::ok(emit(&value, format)?));
    }
    let budget = budget.map(Budget).unwrap_or_default();
    match exact_cfc(&g, max_colors, budget) {
        Ok(result) => {
            let value = json!({
                "source": source,
                "n": g.vertex_count(),
                "m": g.edge_count(),
                "status": "exact",
                "value": result.value,
                "method": result.method,
                "lower_bound": result.lower_bound,
                "stats": result.stats,
                "coloring": result.coloring,
            });
            eprintln!("search time: {:?}", result.stats.elapsed);
            let output = match format {
                Format::Dot => dot_coloring(&result.coloring),
                other => emit(&value, other)?,
            };
            Ok(Done::ok(output))
        }
        Err(Error::BudgetExhausted { lower, upper }) => {
            let value = json!({
                "source": source,
                "n": g.vertex_count(),
                "m": g.edge_count(),
                "status": "budget-exhausted",
                "lower": lower,
                "upper": upper,
            });
            Ok(Done {
                output: emit(
                    &value,
                    if format == Format::Dot {
                        Format::Json
                    } else {
                        format
                    },
                )?,
                code: EXIT_BUDGET,
            })
        }
        Err(e) => Err(e.into()),
    }
}

pub fn gen(family: &str, params: &[usize], format: Option<Format>) -> Outcome {
    let spec = FamilySpec::parse_parts(family, params)?;
    let g = spec.generate()?;
    let min_degree = g.min_degree()?;
    let cut = count_cut_edges(&g)?;
    let output = match format.unwrap_or(Format::Text) {
        Format::Text => {
            let comments = vec![
                format!("family: {spec}"),
                format!("n: {}", g.vertex_count()),
                format!("min degree: {min_degree}"),
                format!("cut edges: {cut}"),
            ];
            write_edge_list_with_comments(&g, &comments)
        }
        Format::Json => to_json(&json!({
            "spec": spec,
            "n": g.vertex_count(),
            "m": g.edge_count(),
            "min_degree": min_degree,
            "cut_edges": cut,
            "edges": g.edges(),
        })),
        Format::Dot => dot_graph(&g, &find_cut_edges(&g)?),
    };
    Ok(Done::ok(output))
}

/// Parameters for a sharpness family, inline (`sharpness:H:3:4`) or from flags.
fn sharpness_spec(rest: &str, args: &VerifyArgs) -> Result<FamilySpec, Failure> {
    if rest.contains([':', ',', ' ']) {
        return Ok(rest.parse()?);
    }
    let flag = |value: Option<usize>, name: &str| {
        value.ok_or_else(|| Failure::usage(format!("sharpness:{rest} needs --{name}")))
    };
    let params = match rest {
        "H" => vec![flag(args.k, "k")?, flag(args.t, "t")?],
        "R" | "D" => vec![flag(args.k, "k")?],
        "S" | "remark4-H" => vec![flag(args.t, "t")?],
        "remark6-G" => vec![],
        _ => vec![flag(args.n, "n")?],
    };
    Ok(FamilySpec::parse_parts(rest, &params)?)
}

pub fn verify(args: &VerifyArgs, format: Option<Format>) -> Outcome {
    let format = format.unwrap_or(Format::Json);
    let budget = args.budget.map(Budget).unwrap_or_default();
    if let Some(rest) = args.target.strip_prefix("sharpness:") {
        let spec = sharpness_spec(rest, args)?;
        let report = certify_sharpness(spec, budget)?;
        let value = serde_json::to_value(&report).expect("serializable");
        return Ok(Done {
            output: emit(&value, format)?,
            code: if report.passed { 0 } else { EXIT_FAILURE },
        });
    }

    let theorem: TheoremId = args.target.parse()?;
    let mut config = HarnessConfig::for_theorem(theorem);
    config.trials = args.trials;
    config.seed = args.seed;
    config.budget = budget;
    if args.k.is_some() {
        config.k = args.k;
    }
    config.n_min = args.n_min.unwrap_or(config.n_min);
    config.n_max = args.n_max.unwrap_or(config.n_max);
    if config.n_min < 2 || config.n_min > config.n_max {
        return Err(Failure::usage(format!(
            "need 2 <= n-min <= n-max, got {}..{}",
            config.n_min, config.n_max
        )));
    }
    if let Some(model) = &args.model {
        config.model = model.parse::<CorpusModel>()?;
    }
    if let Some(dir) = &args.counterexample_dir {
        std::fs::create_dir_all(dir).map_err(|e| Failure {
            message: format!("cannot create {}: {e}", dir.display()),
            code: EXIT_FAILURE,
        })?;
        config.counterexample_dir = Some(dir.clone());
    }
    let report = run_harness(&config)?;
    let value = serde_json::to_value(&report).expect("serializable");
    Ok(Done {
        output: emit(&value, format)?,
        code: if report.conclusion_fail_count > 0 {
            EXIT_COUNTEREXAMPLE
        } else {
            0
        },
    })
}
