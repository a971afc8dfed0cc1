//! Executable hypotheses and conclusions of the degree-condition results,
//! a seeded counterexample-hunting harness, and sharpness certificates for
//! the extremal families.
//!
//! Every numeric clause is an integer inequality `lhs >= rhs` obtained by
//! clearing denominators, e.g. `delta >= (n - 4) / 5` is checked as
//! `5 * delta >= n - 4`. A clause's `margin` is `lhs - rhs`.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use rand::Rng;
use serde::{Serialize, Serializer};

use crate::coloring::{two_coloring, verify_with, VerifyStrategy};
use crate::decomposition::{count_cut_edges, cut_edge_profile, CutEdgeProfile};
use crate::error::{Error, Result};
use crate::families::{
    gen_random_clique_tree, gen_random_connected, gen_random_glued_blocks, trial_rng, FamilySpec,
};
use crate::graph::Graph;
use crate::io::write_edge_list_with_comments;
use crate::solver::{exists_two_coloring, Budget};

/// Largest edge count on which the exhaustive two-coloring oracle is run.
pub const ORACLE_EDGE_LIMIT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    CfcTwoShape,
    OrderTwoCutEdges,
    Bridgeless,
    Construction,
    MinDegreeCutEdges,
    DegreeSumCutEdges,
    MinDegreeLarge,
    MinDegreeMid,
    MinDegreeSmall,
    QuarterDegree,
    DegreeSumCfcTwo,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::CfcTwoShape,
        TheoremId::OrderTwoCutEdges,
        TheoremId::Bridgeless,
        TheoremId::Construction,
        TheoremId::MinDegreeCutEdges,
        TheoremId::DegreeSumCutEdges,
        TheoremId::MinDegreeLarge,
        TheoremId::MinDegreeMid,
        TheoremId::MinDegreeSmall,
        TheoremId::QuarterDegree,
        TheoremId::DegreeSumCfcTwo,
    ];

    pub fn label(self) -> &'static str {
        match self {
            TheoremId::CfcTwoShape => "2.2",
            TheoremId::OrderTwoCutEdges => "2.3",
            TheoremId::Bridgeless => "2.4",
            TheoremId::Construction => "2.6",
            TheoremId::MinDegreeCutEdges => "3.1",
            TheoremId::DegreeSumCutEdges => "3.4",
            TheoremId::MinDegreeLarge => "4.1",
            TheoremId::MinDegreeMid => "4.2",
            TheoremId::MinDegreeSmall => "4.3",
            TheoremId::QuarterDegree => "4.4",
            TheoremId::DegreeSumCfcTwo => "4.5",
        }
    }

    /// Human-readable conclusion being checked.
    pub fn claim(self) -> &'static str {
        match self {
            TheoremId::CfcTwoShape => {
                "cut-edge subgraph is a linear forest with components of at most 3 edges"
            }
            TheoremId::MinDegreeCutEdges | TheoremId::DegreeSumCutEdges => "at most k-2 cut edges",
            _ => "cfc = 2",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.label() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.label())
    }
}

/// One hypothesis clause evaluated on one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: &'static str,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub margin: Option<i64>,
    pub detail: String,
}

impl Clause {
    fn flag(name: &'static str, holds: bool, detail: impl Into<String>) -> Self {
        Clause {
            name,
            holds,
            margin: None,
            detail: detail.into(),
        }
    }

    fn at_least(name: &'static str, lhs: i64, rhs: i64, what: String) -> Self {
        Clause {
            name,
            holds: lhs >= rhs,
            margin: Some(lhs - rhs),
            detail: format!("{what}: {lhs} >= {rhs}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConclusionMode {
    /// Read off the structure (cut-edge count or shape).
    Structural,
    /// Explicit two-coloring, verified.
    Constructive,
    /// Exhaustive two-coloring sweep.
    Oracle,
    /// Not evaluated or not decidable within limits.
    Undecided,
}

/// Evaluation of one result on one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub theorem: TheoremId,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub n: usize,
    pub m: usize,
    pub clauses: Vec<Clause>,
    pub hypothesis_holds: bool,
    pub claim: &'static str,
    pub conclusion_holds: Option<bool>,
    pub mode: ConclusionMode,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl TheoremCheck {
    pub fn is_counterexample(&self) -> bool {
        self.hypothesis_holds && self.conclusion_holds == Some(false)
    }

    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }

    pub fn failing_clauses(&self) -> Vec<&'static str> {
        self.clauses
            .iter()
            .filter(|c| !c.holds)
            .map(|c| c.name)
            .collect()
    }
}

/// When to spend effort on the conclusion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Evaluate {
    Always,
    WhenHypothesisHolds,
}

struct Decision {
    holds: Option<bool>,
    mode: ConclusionMode,
    note: Option<String>,
}

/// Decides `cfc(g) = 2`. The explicit two-coloring is tried first unless
/// `prefer_oracle` is set and the graph is small enough for the sweep.
fn decide_cfc_two(
    g: &Graph,
    profile: &CutEdgeProfile,
    budget: Budget,
    prefer_oracle: bool,
) -> Result<Decision> {
    if g.is_complete() {
        return Ok(Decision {
            holds: Some(false),
            mode: ConclusionMode::Structural,
            note: Some("complete graph: cfc = 1".into()),
        });
    }
    let oracle_ok = g.edge_count() <= ORACLE_EDGE_LIMIT;
    let mut note = None;
    if profile.admits_two_coloring_construction() && !(prefer_oracle && oracle_ok) {
        let coloring = two_coloring(g)?;
        let verdict = verify_with(&coloring, VerifyStrategy::Auto)?;
        if verdict.is_conflict_free_connected {
            return Ok(Decision {
                holds: Some(true),
                mode: ConclusionMode::Constructive,
                note: None,
            });
        }
        note = Some(format!(
            "explicit two-coloring fails at pair {:?}",
            verdict.failing_pair
        ));
    }
    if oracle_ok {
        return match exists_two_coloring(g, budget) {
            Ok(outcome) => Ok(Decision {
                holds: Some(outcome.exists()),
                mode: ConclusionMode::Oracle,
                note,
            }),
            Err(Error::BudgetExhausted { .. }) => Ok(Decision {
                holds: None,
                mode: ConclusionMode::Undecided,
                note: Some("oracle budget exhausted".into()),
            }),
            Err(e) => Err(e),
        };
    }
    Ok(Decision {
        holds: None,
        mode: ConclusionMode::Undecided,
        note: note.or_else(|| Some(format!("{} edges exceed the oracle limit", g.edge_count()))),
    })
}

fn i(x: usize) -> i64 {
    x as i64
}

fn non_complete(g: &Graph) -> Clause {
    Clause::flag(
        "non-complete",
        !g.is_complete(),
        if g.is_complete() {
            "complete"
        } else {
            "not complete"
        },
    )
}

fn linear_forest(profile: &CutEdgeProfile) -> Clause {
    Clause::flag(
        "linear-forest",
        profile.is_linear_forest,
        format!("cut-edge component orders {:?}", profile.component_orders),
    )
}

fn finish(
    theorem: TheoremId,
    g: &Graph,
    k: Option<usize>,
    clauses: Vec<Clause>,
    conclusion: Option<(Option<bool>, ConclusionMode)>,
    notes: Vec<String>,
) -> TheoremCheck {
    let hypothesis_holds = clauses.iter().all(|c| c.holds);
    let (conclusion_holds, mode) = conclusion.unwrap_or((None, ConclusionMode::Undecided));
    TheoremCheck {
        theorem,
        k,
        n: g.vertex_count(),
        m: g.edge_count(),
        clauses,
        hypothesis_holds,
        claim: theorem.claim(),
        conclusion_holds,
        mode,
        notes,
    }
}

/// `n >= k^2` and `delta >= (n-k+1)/k` imply at most `k-2` cut edges.
pub fn check_min_degree_cut_edges(g: &Graph, k: usize) -> Result<TheoremCheck> {
    if k < 3 {
        return Err(Error::ParamOutOfRange(format!(
            "min-degree cut-edge check needs k >= 3, got {k}"
        )));
    }
    g.require_connected()?;
    let (n, delta) = (g.vertex_count(), g.min_degree()?);
    let clauses = vec![
        Clause::at_least("order", i(n), i(k * k), "n >= k^2".into()),
        Clause::at_least(
            "min-degree",
            i(k * delta),
            i(n) - i(k) + 1,
            format!("k*delta >= n-k+1 with delta = {delta}"),
        ),
    ];
    let cut = count_cut_edges(g)?;
    let holds = cut + 2 <= k;
    let notes = vec![format!("{cut} cut edges")];
    Ok(finish(
        TheoremId::MinDegreeCutEdges,
        g,
        Some(k),
        clauses,
        Some((Some(holds), ConclusionMode::Structural)),
        notes,
    ))
}

/// Order thresholds for the degree-sum cut-edge check: `(stated, derived)`,
/// using the numerator constants `+3` and `+2` respectively, each maxed with
/// `k^2 + k` and rounded up.
pub fn degree_sum_order_thresholds(k: usize) -> (usize, usize) {
    let k = k as i64;
    let bound = |c: i64| {
        let num = (k / 2) * k * (k - 2) + k * k - 5 * k + c;
        let den = k - 4;
        let ceil = (num + den - 1).div_euclid(den);
        ceil.max(k * k + k) as usize
    };
    (bound(3), bound(2))
}

/// Degree-sum condition `deg x + deg y >= (2n-2k+1)/k` on non-adjacent
/// pairs, with `n` above the order threshold, implies at most `k-2` cut edges.
pub fn check_degree_sum_cut_edges(g: &Graph, k: usize) -> Result<TheoremCheck> {
    if k < 5 {
        return Err(Error::ParamOutOfRange(format!(
            "degree-sum cut-edge check needs k >= 5, got {k}"
        )));
    }
    g.require_connected()?;
    let n = g.vertex_count();
    let (stated, derived) = degree_sum_order_thresholds(k);
    let extra = {
        let kk = k as i64;
        let num = (kk / 2) * kk * (kk - 2) + kk * kk - 5 * kk + 3;
        (num + kk - 5).div_euclid(kk - 4)
    };
    let mut clauses = vec![
        Clause::at_least("order-quadratic", i(n), i(k * k + k), "n >= k^2+k".into()),
        Clause::at_least(
            "order-extra",
            i(n),
            extra,
            "n >= ceil((floor(k/2)k(k-2)+k^2-5k+3)/(k-4))".into(),
        ),
    ];
    let mut notes = vec![format!(
        "order threshold {stated} as stated (ceiling applied); {derived} with the +2 numerator"
    )];
    if (n >= stated) != (n >= derived) {
        notes.push(format!("n = {n} lies between the two order thresholds"));
    }
    clauses.push(match g.min_nonadjacent_degree_sum() {
        Some(sigma) => Clause::at_least(
            "degree-sum",
            i(k * sigma),
            2 * i(n) - 2 * i(k) + 1,
            format!("k*sigma >= 2n-2k+1 with sigma = {sigma}"),
        ),
        None => Clause::flag("degree-sum", true, "complete graph: no non-adjacent pair"),
    });
    let cut = count_cut_edges(g)?;
    notes.push(format!("{cut} cut edges"));
    Ok(finish(
        TheoremId::DegreeSumCutEdges,
        g,
        Some(k),
        clauses,
        Some((Some(cut + 2 <= k), ConclusionMode::Structural)),
        notes,
    ))
}

/// Hypothesis clauses of the degree conditions for `cfc = 2`.
fn cfc_two_clauses(g: &Graph, which: TheoremId, profile: &CutEdgeProfile) -> Result<Vec<Clause>> {
    let n = i(g.vertex_count());
    let delta = g.min_degree()?;
    let d = i(delta);
    let min_degree = |name, scale: i64, rhs: i64, what: &str| {
        Clause::at_least(name, scale * d, rhs, format!("{what} with delta = {delta}"))
    };
    let clauses = match which {
        TheoremId::MinDegreeLarge => vec![
            non_complete(g),
            Clause::at_least("order", n, 25, "n >= 25".into()),
            linear_forest(profile),
            min_degree("min-degree", 5, n - 4, "5*delta >= n-4"),
        ],
        TheoremId::MinDegreeMid => vec![
            non_complete(g),
            Clause::at_least("order-min", n, 9, "n >= 9".into()),
            Clause::at_least("order-max", 24, n, "n <= 24".into()),
            linear_forest(profile),
            min_degree("min-degree-3", 1, 3, "delta >= 3"),
            min_degree("min-degree", 5, n - 4, "5*delta >= n-4"),
        ],
        TheoremId::MinDegreeSmall => vec![
            non_complete(g),
            Clause::at_least("order-min", n, 4, "n >= 4".into()),
            Clause::at_least("order-max", 8, n, "n <= 8".into()),
            linear_forest(profile),
            min_degree("min-degree-2", 1, 2, "delta >= 2"),
        ],
        TheoremId::QuarterDegree => vec![
            non_complete(g),
            Clause::at_least("order", n, 16, "n >= 16".into()),
            min_degree("min-degree", 4, n - 3, "4*delta >= n-3"),
        ],
        TheoremId::DegreeSumCfcTwo => {
            let degree_sum = match g.min_nonadjacent_degree_sum() {
                Some(sigma) => Clause::at_least(
                    "degree-sum",
                    5 * i(sigma),
                    2 * n - 9,
                    format!("5*sigma >= 2n-9 with sigma = {sigma}"),
                ),
                None => Clause::flag("degree-sum", true, "complete graph: no non-adjacent pair"),
            };
            vec![
                non_complete(g),
                Clause::at_least("order", n, 33, "n >= 33".into()),
                linear_forest(profile),
                degree_sum,
            ]
        }
        other => {
            return Err(Error::ParamOutOfRange(format!(
                "{other} is not a cfc = 2 degree condition"
            )))
        }
    };
    Ok(clauses)
}

/// Degree conditions whose hypotheses imply `cfc = 2` (ids 4.1 to 4.5).
pub fn check_cfc_two_condition(
    g: &Graph,
    which: TheoremId,
    budget: Budget,
) -> Result<TheoremCheck> {
    check_cfc_two_condition_with(g, which, budget, Evaluate::Always)
}

pub fn check_cfc_two_condition_with(
    g: &Graph,
    which: TheoremId,
    budget: Budget,
    evaluate: Evaluate,
) -> Result<TheoremCheck> {
    g.require_connected()?;
    let profile = cut_edge_profile(g)?;
    let clauses = cfc_two_clauses(g, which, &profile)?;
    let hypothesis = clauses.iter().all(|c| c.holds);
    conclude_cfc_two(
        g, which, None, clauses, hypothesis, &profile, budget, evaluate, false,
    )
}

#[allow(clippy::too_many_arguments)]
fn conclude_cfc_two(
    g: &Graph,
    which: TheoremId,
    k: Option<usize>,
    clauses: Vec<Clause>,
    hypothesis: bool,
    profile: &CutEdgeProfile,
    budget: Budget,
    evaluate: Evaluate,
    prefer_oracle: bool,
) -> Result<TheoremCheck> {
    let mut notes = Vec::new();
    let conclusion = if hypothesis || evaluate == Evaluate::Always {
        let decision = decide_cfc_two(g, profile, budget, prefer_oracle)?;
        notes.extend(decision.note);
        if hypothesis && decision.holds.is_none() && evaluate == Evaluate::Always {
            return Err(Error::OracleInfeasible {
                edges: g.edge_count(),
            });
        }
        Some((decision.holds, decision.mode))
    } else {
        None
    };
    Ok(finish(which, g, k, clauses, conclusion, notes))
}

/// Cut-edge structure results (ids 2.2, 2.3, 2.4, 2.6).
///
/// [`TheoremId::CfcTwoShape`] takes `cfc = 2` (decided by the exhaustive
/// oracle only) as its hypothesis and the cut-edge shape as its conclusion.
/// [`TheoremId::OrderTwoCutEdges`] also requires a non-complete graph, since
/// `K2` has a single order-2 cut-edge component and `cfc = 1`.
pub fn check_structural(
    g: &Graph,
    which: TheoremId,
    budget: Budget,
    evaluate: Evaluate,
) -> Result<TheoremCheck> {
    g.require_connected()?;
    let profile = cut_edge_profile(g)?;
    match which {
        TheoremId::CfcTwoShape => {
            if g.vertex_count() == 1 {
                return Err(Error::TrivialGraph);
            }
            let cfc_two = if g.is_complete() {
                false
            } else if g.edge_count() <= ORACLE_EDGE_LIMIT {
                exists_two_coloring(g, budget)?.exists()
            } else {
                return Err(Error::OracleInfeasible {
                    edges: g.edge_count(),
                });
            };
            let clauses = vec![Clause::flag(
                "cfc-two",
                cfc_two,
                "decided by exhaustive two-coloring sweep",
            )];
            let shape = profile.has_two_color_shape();
            let notes = vec![format!(
                "cut-edge component orders {:?}, linear forest: {}",
                profile.component_orders, profile.is_linear_forest
            )];
            Ok(finish(
                which,
                g,
                None,
                clauses,
                Some((Some(shape), ConclusionMode::Structural)),
                notes,
            ))
        }
        TheoremId::OrderTwoCutEdges => {
            let all_order_two = profile.component_orders.iter().all(|&o| o == 2);
            let clauses = vec![
                non_complete(g),
                linear_forest(&profile),
                Clause::flag(
                    "components-order-2",
                    all_order_two,
                    format!("component orders {:?}", profile.component_orders),
                ),
            ];
            let hyp = clauses.iter().all(|c| c.holds);
            conclude_cfc_two(
                g, which, None, clauses, hyp, &profile, budget, evaluate, true,
            )
        }
        TheoremId::Bridgeless => {
            let clauses = vec![
                non_complete(g),
                Clause::flag(
                    "bridgeless",
                    profile.is_empty(),
                    format!("{} cut edges", profile.cut_edges.len()),
                ),
            ];
            let hyp = clauses.iter().all(|c| c.holds);
            conclude_cfc_two(
                g, which, None, clauses, hyp, &profile, budget, evaluate, true,
            )
        }
        TheoremId::Construction => {
            let clauses = vec![
                non_complete(g),
                Clause::flag(
                    "construction-shape",
                    profile.admits_two_coloring_construction(),
                    format!(
                        "component orders {:?}, linear forest: {}",
                        profile.component_orders, profile.is_linear_forest
                    ),
                ),
            ];
            let hyp = clauses.iter().all(|c| c.holds);
            conclude_cfc_two(
                g, which, None, clauses, hyp, &profile, budget, evaluate, false,
            )
        }
        other => Err(Error::ParamOutOfRange(format!(
            "{other} is not a cut-edge structure result"
        ))),
    }
}

/// Dispatches to the check for `id`; `k` defaults to 3 for the min-degree
/// cut-edge check and 5 for the degree-sum one.
pub fn check_theorem(
    g: &Graph,
    id: TheoremId,
    k: Option<usize>,
    budget: Budget,
) -> Result<TheoremCheck> {
    check_theorem_with(g, id, k, budget, Evaluate::Always)
}

pub fn check_theorem_with(
    g: &Graph,
    id: TheoremId,
    k: Option<usize>,
    budget: Budget,
    evaluate: Evaluate,
) -> Result<TheoremCheck> {
    match id {
        TheoremId::MinDegreeCutEdges => check_min_degree_cut_edges(g, k.unwrap_or(3)),
        TheoremId::DegreeSumCutEdges => check_degree_sum_cut_edges(g, k.unwrap_or(5)),
        TheoremId::MinDegreeLarge
        | TheoremId::MinDegreeMid
        | TheoremId::MinDegreeSmall
        | TheoremId::QuarterDegree
        | TheoremId::DegreeSumCfcTwo => check_cfc_two_condition_with(g, id, budget, evaluate),
        _ => check_structural(g, id, budget, evaluate),
    }
}

/// Random graph model for harness trials.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CorpusModel {
    /// `G(n, p)` conditioned on connectivity, `p` uniform in `p_range`.
    Gnp,
    /// 2-connected blocks glued by shared vertices and sparse bridges.
    GluedBlocks,
    /// Cliques of random order strung together by bridges.
    CliqueTree,
    /// Each trial picks one of the above uniformly.
    Mixed,
}

impl FromStr for CorpusModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gnp" => Ok(CorpusModel::Gnp),
            "glued-blocks" => Ok(CorpusModel::GluedBlocks),
            "clique-tree" => Ok(CorpusModel::CliqueTree),
            "mixed" => Ok(CorpusModel::Mixed),
            other => Err(Error::ParamOutOfRange(format!(
                "unknown corpus model `{other}`"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct HarnessConfig {
    pub theorem: TheoremId,
    pub trials: u64,
    pub seed: u64,
    pub n_min: usize,
    pub n_max: usize,
    pub k: Option<usize>,
    pub p_range: (f64, f64),
    pub model: CorpusModel,
    /// Trials whose graph has more edges are skipped.
    pub max_edges: Option<usize>,
    pub budget: Budget,
    /// Where to write the first counterexample, if any.
    pub counterexample_dir: Option<PathBuf>,
}

impl HarnessConfig {
    /// Defaults that put the order range inside each theorem's scope.
    pub fn for_theorem(theorem: TheoremId) -> Self {
        let (n_min, n_max, k, model, max_edges) = match theorem {
            TheoremId::CfcTwoShape => (2, 7, None, CorpusModel::Mixed, Some(12)),
            TheoremId::OrderTwoCutEdges => (4, 9, None, CorpusModel::Mixed, None),
            TheoremId::Bridgeless => (4, 9, None, CorpusModel::Gnp, None),
            TheoremId::Construction => (4, 40, None, CorpusModel::GluedBlocks, None),
            TheoremId::MinDegreeCutEdges => (9, 14, Some(3), CorpusModel::Mixed, None),
            TheoremId::DegreeSumCutEdges => (33, 40, Some(5), CorpusModel::Mixed, None),
            TheoremId::MinDegreeLarge => (25, 32, None, CorpusModel::Mixed, None),
            TheoremId::MinDegreeMid => (9, 24, None, CorpusModel::Mixed, None),
            TheoremId::MinDegreeSmall => (4, 8, None, CorpusModel::Mixed, None),
            TheoremId::QuarterDegree => (16, 20, None, CorpusModel::Mixed, None),
            TheoremId::DegreeSumCfcTwo => (33, 40, None, CorpusModel::Mixed, None),
        };
        HarnessConfig {
            theorem,
            trials: 200,
            seed: 0,
            n_min,
            n_max,
            k,
            p_range: (0.15, 0.6),
            model,
            max_edges,
            budget: Budget::default(),
            counterexample_dir: None,
        }
    }

    pub fn sample(&self, index: u64) -> Result<Graph> {
        let mut rng = trial_rng(self.seed, index);
        let n = rng.gen_range(self.n_min..=self.n_max);
        let model = match self.model {
            CorpusModel::Mixed => match rng.gen_range(0..3) {
                0 => CorpusModel::Gnp,
                1 => CorpusModel::GluedBlocks,
                _ => CorpusModel::CliqueTree,
            },
            m => m,
        };
        match model {
            CorpusModel::GluedBlocks if n >= 4 => gen_random_glued_blocks(n, &mut rng),
            CorpusModel::CliqueTree => gen_random_clique_tree(n, &mut rng),
            _ => {
                let (lo, hi) = self.p_range;
                let p = if hi > lo { rng.gen_range(lo..=hi) } else { lo };
                gen_random_connected(n, p, &mut rng)
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClauseTally {
    pub holds: u64,
    pub fails: u64,
}

/// Aggregate over harness trials.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub trials: u64,
    pub seed: u64,
    pub n_range: (usize, usize),
    pub model: CorpusModel,
    pub hypothesis_pass_count: u64,
    pub conclusion_fail_count: u64,
    /// Trials whose hypothesis held but whose conclusion could not be decided.
    pub undecided_count: u64,
    /// Trials skipped for exceeding the edge cap or oracle limit.
    pub skipped_count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample_trial: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample_path: Option<String>,
    pub clause_breakdown: BTreeMap<String, ClauseTally>,
    pub conclusion_modes: BTreeMap<String, u64>,
    #[serde(skip)]
    pub counterexample: Option<Graph>,
}

/// Samples `trials` graphs, evaluates the hypothesis on each and the
/// conclusion wherever the hypothesis holds. Trials are independent; trial
/// `i` draws from stream `i` of the master seed.
pub fn run_harness(config: &HarnessConfig) -> Result<TheoremReport> {
    let mut report = TheoremReport {
        theorem: config.theorem,
        k: config.k,
        trials: config.trials,
        seed: config.seed,
        n_range: (config.n_min, config.n_max),
        model: config.model,
        hypothesis_pass_count: 0,
        conclusion_fail_count: 0,
        undecided_count: 0,
        skipped_count: 0,
        counterexample_trial: None,
        counterexample_path: None,
        clause_breakdown: BTreeMap::new(),
        conclusion_modes: BTreeMap::new(),
        counterexample: None,
    };

    for trial in 0..config.trials {
        let g = config.sample(trial)?;
        if config.max_edges.is_some_and(|cap| g.edge_count() > cap) {
            report.skipped_count += 1;
            continue;
        }
        let check = match check_theorem_with(
            &g,
            config.theorem,
            config.k,
            config.budget,
            Evaluate::WhenHypothesisHolds,
        ) {
            Ok(check) => check,
            Err(Error::OracleInfeasible { .. }) | Err(Error::TrivialGraph) => {
                report.skipped_count += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        for clause in &check.clauses {
            let tally = report
                .clause_breakdown
                .entry(clause.name.to_string())
                .or_default();
            if clause.holds {
                tally.holds += 1;
            } else {
                tally.fails += 1;
            }
        }
        if !check.hypothesis_holds {
            continue;
        }
        report.hypothesis_pass_count += 1;
        let mode = serde_plain_mode(check.mode);
        *report.conclusion_modes.entry(mode).or_default() += 1;
        match check.conclusion_holds {
            Some(true) => {}
            None => report.undecided_count += 1,
            Some(false) => {
                report.conclusion_fail_count += 1;
                if report.counterexample.is_none() {
                    report.counterexample_trial = Some(trial);
                    if let Some(dir) = &config.counterexample_dir {
                        let path = dir.join(format!(
                            "counterexample-{}-seed{}-trial{}.edges",
                            config.theorem, config.seed, trial
                        ));
                        let comments = vec![
                            format!(
                                "counterexample to {} (seed {}, trial {})",
                                config.theorem, config.seed, trial
                            ),
                            format!("claim: {}", check.claim),
                        ];
                        std::fs::write(&path, write_edge_list_with_comments(&g, &comments))
                            .map_err(|e| {
                                Error::ParamOutOfRange(format!(
                                    "cannot write {}: {e}",
                                    path.display()
                                ))
                            })?;
                        report.counterexample_path = Some(path.display().to_string());
                    }
                    report.counterexample = Some(g);
                }
            }
        }
    }
    Ok(report)
}

fn serde_plain_mode(mode: ConclusionMode) -> String {
    match mode {
        ConclusionMode::Structural => "structural",
        ConclusionMode::Constructive => "constructive",
        ConclusionMode::Oracle => "oracle",
        ConclusionMode::Undecided => "undecided",
    }
    .to_string()
}

/// How a sharpness family misses a hypothesis and violates a conclusion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SharpnessReport {
    pub family: String,
    pub theorem: TheoremId,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub n: usize,
    pub m: usize,
    pub clauses: Vec<Clause>,
    /// The clause the family is built to miss.
    pub tight_clause: &'static str,
    pub expected_margin: i64,
    pub margin: Option<i64>,
    /// Every other failing clause is one the family may also miss.
    pub only_expected_failures: bool,
    pub claim: &'static str,
    /// `None` when the graph is too large for any certificate.
    pub claim_certified: Option<bool>,
    pub certificate: String,
    pub passed: bool,
}

/// Evidence that `cfc >= 3`: the exhaustive sweep when small enough,
/// otherwise a cut-edge shape that rules out two colors.
fn certify_cfc_at_least_three(g: &Graph, budget: Budget) -> Result<(Option<bool>, String)> {
    if g.is_complete() {
        return Ok((Some(false), "complete graph".into()));
    }
    if g.edge_count() <= ORACLE_EDGE_LIMIT {
        let outcome = exists_two_coloring(g, budget)?;
        return Ok((
            Some(!outcome.exists()),
            format!(
                "exhaustive two-coloring sweep over {} colorings",
                outcome.stats.colorings_examined
            ),
        ));
    }
    let profile = cut_edge_profile(g)?;
    if !profile.has_two_color_shape() {
        return Ok((
            Some(true),
            format!(
                "cut-edge subgraph rules out two colors (orders {:?}, linear forest: {})",
                profile.component_orders, profile.is_linear_forest
            ),
        ));
    }
    Ok((
        None,
        format!("{} edges exceed the oracle limit", g.edge_count()),
    ))
}

/// Checks that a sharpness family misses its theorem's hypothesis by exactly
/// the advertised margin while violating the conclusion.
pub fn certify_sharpness(spec: FamilySpec, budget: Budget) -> Result<SharpnessReport> {
    let g = spec.generate()?;
    let n = g.vertex_count();
    let degree_theorem = |n: usize| {
        if n >= 25 {
            TheoremId::MinDegreeLarge
        } else {
            TheoremId::MinDegreeMid
        }
    };
    // (theorem, k, tight clause, expected margin, clauses allowed to fail too)
    let (theorem, k, tight, expected, also): (
        TheoremId,
        Option<usize>,
        &'static str,
        i64,
        &[&str],
    ) = match spec {
        FamilySpec::S { .. } => (degree_theorem(n), None, "min-degree", -1, &["min-degree-3"]),
        FamilySpec::FiveCliquePath { .. } => {
            (degree_theorem(n), None, "min-degree", -1, &["min-degree-3"])
        }
        FamilySpec::TriangleEnds { .. } if n <= 24 => (
            TheoremId::MinDegreeMid,
            None,
            "min-degree-3",
            -1,
            &["min-degree"],
        ),
        FamilySpec::Path { .. } if (5..=8).contains(&n) => {
            (TheoremId::MinDegreeSmall, None, "min-degree-2", -1, &[])
        }
        FamilySpec::CliqueStar { .. } if n >= 16 => {
            (TheoremId::QuarterDegree, None, "min-degree", -1, &[])
        }
        FamilySpec::UnevenCliqueStar => (TheoremId::QuarterDegree, None, "order", -1, &[]),
        FamilySpec::ThreeCliquePath { n } => (
            TheoremId::DegreeSumCfcTwo,
            None,
            "order",
            n as i64 - 33,
            &[],
        ),
        FamilySpec::H { k, .. } => (
            TheoremId::MinDegreeCutEdges,
            Some(k),
            "min-degree",
            -1,
            &["order"],
        ),
        FamilySpec::R { k } => (TheoremId::MinDegreeCutEdges, Some(k), "order", -1, &[]),
        FamilySpec::D { k } => (
            TheoremId::DegreeSumCutEdges,
            Some(k),
            "order-quadratic",
            -1,
            &["order-extra"],
        ),
        other => {
            return Err(Error::ParamOutOfRange(format!(
                "{other} is not a sharpness family at these parameters"
            )))
        }
    };
    let check = match theorem {
        TheoremId::MinDegreeCutEdges => check_min_degree_cut_edges(&g, k.unwrap_or(3))?,
        TheoremId::DegreeSumCutEdges => check_degree_sum_cut_edges(&g, k.unwrap_or(5))?,
        _ => check_cfc_two_condition_with(&g, theorem, budget, Evaluate::WhenHypothesisHolds)?,
    };

    let margin = check.clause(tight).and_then(|c| c.margin);
    let only_expected_failures = check
        .failing_clauses()
        .iter()
        .all(|name| *name == tight || also.contains(name));
    let (claim, claim_certified, certificate) = match theorem {
        TheoremId::MinDegreeCutEdges | TheoremId::DegreeSumCutEdges => {
            let k = k.expect("cut-edge theorems carry k");
            let cut = count_cut_edges(&g)?;
            (
                "more than k-2 cut edges",
                Some(cut + 2 > k),
                format!("{cut} cut edges, k = {k}"),
            )
        }
        _ => {
            let (certified, how) = certify_cfc_at_least_three(&g, budget)?;
            ("cfc >= 3", certified, how)
        }
    };
    let passed = !check.hypothesis_holds
        && margin == Some(expected)
        && only_expected_failures
        && claim_certified != Some(false);
    Ok(SharpnessReport {
        family: spec.to_string(),
        theorem,
        k,
        n,
        m: g.edge_count(),
        clauses: check.clauses,
        tight_clause: tight,
        expected_margin: expected,
        margin,
        only_expected_failures,
        claim,
        claim_certified,
        certificate,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_d, gen_h, gen_r, gen_s};

    #[test]
    fn theorem_ids_parse() {
        for id in TheoremId::ALL {
            assert_eq!(id.label().parse::<TheoremId>().unwrap(), id);
        }
        assert_eq!(
            "9.9".parse::<TheoremId>(),
            Err(Error::UnknownTheorem("9.9".into()))
        );
    }

    #[test]
    fn min_degree_cut_edge_examples() {
        let r3 = check_min_degree_cut_edges(&gen_r(3).unwrap(), 3).unwrap();
        assert!(!r3.clause("order").unwrap().holds);
        assert!(!r3.hypothesis_holds);

        let h = check_min_degree_cut_edges(&gen_h(3, 3).unwrap(), 3).unwrap();
        assert!(!h.clause("min-degree").unwrap().holds);
        assert_eq!(h.clause("min-degree").unwrap().margin, Some(-1));

        let k9 = check_min_degree_cut_edges(&Graph::complete(9), 3).unwrap();
        assert!(k9.hypothesis_holds);
        assert_eq!(k9.conclusion_holds, Some(true));
        assert!(check_min_degree_cut_edges(&Graph::complete(9), 2).is_err());
    }

    #[test]
    fn degree_sum_thresholds() {
        assert_eq!(degree_sum_order_thresholds(5), (33, 32));
        // k = 6: floor(6/2)*6*4 + 36 - 30 + 3 = 81, /2 -> 41; max with 42
        assert_eq!(degree_sum_order_thresholds(6), (42, 42));
    }

    #[test]
    fn degree_sum_cut_edge_examples() {
        let d = check_degree_sum_cut_edges(&gen_d(5).unwrap(), 5).unwrap();
        assert!(!d.clause("order-quadratic").unwrap().holds);
        assert!(d.clause("degree-sum").unwrap().holds);
        assert_eq!(d.conclusion_holds, Some(false));

        let h = check_degree_sum_cut_edges(&gen_h(5, 7).unwrap(), 5).unwrap();
        assert!(h.clause("order-quadratic").unwrap().holds);
        let ds = h.clause("degree-sum").unwrap();
        // sigma = 12, 5 * 12 = 60 < 61 = 2 * 35 - 10 + 1
        assert_eq!(ds.margin, Some(-1));
        assert!(!h.hypothesis_holds);

        let k40 = check_degree_sum_cut_edges(&Graph::complete(40), 5).unwrap();
        assert!(k40.hypothesis_holds);
        assert_eq!(k40.conclusion_holds, Some(true));
    }

    #[test]
    fn degree_sum_flags_between_thresholds() {
        let g = Graph::complete(32);
        let check = check_degree_sum_cut_edges(&g, 5).unwrap();
        assert!(check.notes.iter().any(|n| n.contains("between")));
    }

    #[test]
    fn quarter_degree_on_bipartite_graph() {
        // C(G) empty, 4 * delta >= n - 3: K_{8,8} minus nothing, delta 8, n 16
        let edges = (0..8).flat_map(|u| (8..16).map(move |v| (u, v)));
        let g = Graph::new(16, edges).unwrap();
        let check =
            check_cfc_two_condition(&g, TheoremId::QuarterDegree, Budget::default()).unwrap();
        assert!(check.hypothesis_holds);
        assert_eq!(check.conclusion_holds, Some(true));
        assert_eq!(check.mode, ConclusionMode::Constructive);
    }

    #[test]
    fn small_order_on_long_path() {
        let g = Graph::path(6);
        let check =
            check_cfc_two_condition(&g, TheoremId::MinDegreeSmall, Budget::default()).unwrap();
        assert!(!check.clause("min-degree-2").unwrap().holds);
        assert_eq!(check.conclusion_holds, Some(false));
        assert_eq!(check.mode, ConclusionMode::Oracle);
    }

    #[test]
    fn large_order_on_s5() {
        let g = gen_s(5).unwrap();
        let check = check_cfc_two_condition_with(
            &g,
            TheoremId::MinDegreeLarge,
            Budget::default(),
            Evaluate::WhenHypothesisHolds,
        )
        .unwrap();
        assert_eq!(check.clause("min-degree").unwrap().margin, Some(-1));
        assert!(!check.hypothesis_holds);
        assert_eq!(check.mode, ConclusionMode::Undecided);
    }

    #[test]
    fn structural_checks() {
        let c5 = Graph::cycle(5);
        let c = check_structural(
            &c5,
            TheoremId::Bridgeless,
            Budget::default(),
            Evaluate::Always,
        )
        .unwrap();
        assert!(c.hypothesis_holds);
        assert_eq!(c.conclusion_holds, Some(true));
        assert_eq!(c.mode, ConclusionMode::Oracle);

        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let c = check_structural(
            &star,
            TheoremId::CfcTwoShape,
            Budget::default(),
            Evaluate::Always,
        )
        .unwrap();
        assert!(!c.hypothesis_holds);
        assert_eq!(c.conclusion_holds, Some(false));

        let c = check_structural(
            &Graph::path(2),
            TheoremId::OrderTwoCutEdges,
            Budget::default(),
            Evaluate::Always,
        )
        .unwrap();
        assert!(!c.hypothesis_holds);
    }

    #[test]
    fn harness_is_reproducible() {
        let mut config = HarnessConfig::for_theorem(TheoremId::MinDegreeCutEdges);
        config.trials = 40;
        config.seed = 9;
        let a = run_harness(&config).unwrap();
        let b = run_harness(&config).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.conclusion_fail_count, 0);
        assert!(a.hypothesis_pass_count > 0);
    }

    #[test]
    fn harness_records_counterexamples() {
        // no counterexample exists, so nothing may be written
        let dir = std::env::temp_dir().join(format!("cfc-harness-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let mut config = HarnessConfig::for_theorem(TheoremId::CfcTwoShape);
        config.trials = 30;
        config.seed = 1;
        config.counterexample_dir = Some(dir.clone());
        let report = run_harness(&config).unwrap();
        assert_eq!(report.conclusion_fail_count, 0);
        assert!(report.counterexample_path.is_none());
        std::fs::remove_dir_all(dir).ok();
    }

    #[test]
    fn sharpness_of_s3() {
        let report = certify_sharpness(FamilySpec::S { t: 3 }, Budget::default()).unwrap();
        assert_eq!(report.theorem, TheoremId::MinDegreeMid);
        assert_eq!(report.margin, Some(-1));
        assert!(report.only_expected_failures, "{:?}", report.clauses);
        assert_eq!(report.claim_certified, Some(true));
        assert!(report.passed);
    }

    #[test]
    fn sharpness_of_small_families() {
        for spec in [
            FamilySpec::TriangleEnds { t: 5 },
            FamilySpec::FiveCliquePath { n: 15 },
            FamilySpec::FiveCliquePath { n: 20 },
            FamilySpec::Path { n: 6 },
            FamilySpec::CliqueStar { n: 16 },
            FamilySpec::UnevenCliqueStar,
            FamilySpec::ThreeCliquePath { n: 32 },
            FamilySpec::H { k: 3, t: 3 },
            FamilySpec::H { k: 4, t: 5 },
            FamilySpec::R { k: 4 },
            FamilySpec::D { k: 5 },
        ] {
            let report = certify_sharpness(spec, Budget::default()).unwrap();
            assert!(report.passed, "{spec}: {report:#?}");
        }
        assert!(certify_sharpness(FamilySpec::Cycle { n: 5 }, Budget::default()).is_err());
    }
}
