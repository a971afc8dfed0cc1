//! Exact conflict-free connection numbers by exhaustive search.
//!
//! Colorings with palette `{1..t}` are enumerated with the first edge fixed to
//! color 1 and, for `t >= 3`, the first non-1 edge fixed to color 2; every
//! other coloring is a palette permutation of one of these. Within a palette,
//! candidates are ordered by the number of edges not colored 1, then
//! lexicographically by position, then by a base-`(t-1)` counter over the
//! non-1 colors. Only candidates that use all `t` colors are verified, since
//! smaller palettes have been ruled out before `t` is tried.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::coloring::{
    two_coloring, verify_conflict_free_connected, Color, EdgeColoring, PathSearch,
};
use crate::decomposition::cut_edge_profile;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Cap on `(coloring, vertex pair)` verification steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budget(pub u64);

impl Budget {
    pub const UNLIMITED: Budget = Budget(u64::MAX);
}

impl Default for Budget {
    fn default() -> Self {
        Budget(2_000_000_000)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverOptions {
    /// Start the sweep at the cheap lower bound from the cut-edge shape.
    pub use_structural_bounds: bool,
    /// Accept the explicit two-coloring as the witness when it applies.
    pub use_construction: bool,
    /// Fix the first edge to color 1 (and the first non-1 edge to color 2).
    pub break_symmetry: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            use_structural_bounds: true,
            use_construction: true,
            break_symmetry: true,
        }
    }
}

impl SolverOptions {
    /// Pure search: no structural shortcuts, only colorings and the verifier.
    pub fn oracle() -> Self {
        SolverOptions {
            use_structural_bounds: false,
            use_construction: false,
            break_symmetry: true,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Candidates enumerated, including ones skipped for using fewer colors.
    pub colorings_examined: u64,
    /// Candidates skipped without verification.
    pub prunes: u64,
    pub pair_checks: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Complete graphs need one color.
    Complete,
    /// The explicit two-coloring, verified.
    Construction,
    /// Exhaustive sweep.
    Sweep,
    /// All edges distinct; every path is conflict-free.
    DistinctColors,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfcResult<'g> {
    pub value: usize,
    pub coloring: EdgeColoring<'g>,
    pub method: Method,
    pub lower_bound: usize,
    pub stats: SearchStats,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoColoringOutcome<'g> {
    pub witness: Option<EdgeColoring<'g>>,
    pub stats: SearchStats,
}

impl TwoColoringOutcome<'_> {
    pub fn exists(&self) -> bool {
        self.witness.is_some()
    }
}

/// Bounds on `cfc(g)` from structure alone: `(1, 1)` for complete graphs,
/// otherwise lower 2 (3 when the cut-edge subgraph is not a linear forest of
/// paths with at most three edges) and upper 2 when the explicit two-coloring
/// applies, else the edge count.
pub fn cfc_bracket(g: &Graph) -> Result<(usize, usize)> {
    g.require_connected()?;
    if g.vertex_count() == 1 {
        return Ok((0, 0));
    }
    if g.is_complete() {
        return Ok((1, 1));
    }
    let profile = cut_edge_profile(g)?;
    let lower = if profile.has_two_color_shape() { 2 } else { 3 };
    let upper = if profile.admits_two_coloring_construction() {
        2
    } else {
        g.edge_count()
    };
    Ok((lower, upper.max(lower)))
}

struct BudgetExhausted;

/// Verifies candidate colorings, checking the pair that failed last first.
struct Checker<'a> {
    g: &'a Graph,
    search: PathSearch,
    cached: Option<(usize, usize)>,
    budget: u64,
    stats: SearchStats,
}

impl<'a> Checker<'a> {
    fn new(g: &'a Graph, palette: usize, budget: Budget) -> Self {
        Checker {
            g,
            search: PathSearch::new(g.vertex_count(), palette),
            cached: None,
            budget: budget.0,
            stats: SearchStats::default(),
        }
    }

    fn spend(&mut self, steps: u64) -> std::result::Result<(), BudgetExhausted> {
        self.stats.pair_checks += steps;
        if self.stats.pair_checks > self.budget {
            Err(BudgetExhausted)
        } else {
            Ok(())
        }
    }

    /// `colors` are dense ids `0..palette`.
    fn check(&mut self, colors: &[usize]) -> std::result::Result<bool, BudgetExhausted> {
        let g = self.g;
        if let Some((u, v)) = self.cached {
            self.spend(1)?;
            if !self.search.run(g, colors, u, &[v], |_, _| {}).is_empty() {
                return Ok(false);
            }
        }
        let n = g.vertex_count();
        let mut targets = Vec::with_capacity(n);
        for u in 0..n {
            targets.clear();
            targets.extend(u + 1..n);
            let unresolved = self.search.run(g, colors, u, &targets, |_, _| {});
            let resolved = targets.len() - unresolved.len();
            self.spend(resolved as u64 + u64::from(!unresolved.is_empty()))?;
            if let Some(&v) = unresolved.first() {
                self.cached = Some((u, v));
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Next `k`-combination of `0..len` in lexicographic order.
fn next_combination(indices: &mut [usize], len: usize) -> bool {
    let k = indices.len();
    for i in (0..k).rev() {
        if indices[i] < len - k + i {
            indices[i] += 1;
            for j in i + 1..k {
                indices[j] = indices[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Searches colorings that use exactly `palette` colors. Returns the first
/// conflict-free connection coloring found, as dense ids `0..palette`.
fn sweep(
    checker: &mut Checker<'_>,
    palette: usize,
    break_symmetry: bool,
) -> std::result::Result<Option<Vec<usize>>, BudgetExhausted> {
    let m = checker.g.edge_count();
    if palette == 0 || palette > m {
        return Ok(None);
    }
    let free: Vec<usize> = if break_symmetry {
        (1..m).collect()
    } else {
        (0..m).collect()
    };
    let mut colors = vec![0usize; m];

    let max_weight = if palette == 1 { 0 } else { free.len() };
    for weight in 0..=max_weight {
        // need at least palette - 1 non-1 edges to see every color
        if weight + 1 < palette {
            let free_digits = if break_symmetry && weight > 0 {
                weight - 1
            } else {
                weight
            };
            let skipped = binomial(free.len(), weight)
                .saturating_mul((palette as u64 - 1).saturating_pow(free_digits as u32));
            checker.stats.colorings_examined =
                checker.stats.colorings_examined.saturating_add(skipped);
            checker.stats.prunes = checker.stats.prunes.saturating_add(skipped);
            continue;
        }
        let mut chosen: Vec<usize> = (0..weight).collect();
        loop {
            colors.iter_mut().for_each(|c| *c = 0);
            // digits over the non-1 colors 1..palette (dense); the first
            // chosen edge is pinned to dense color 1 when breaking symmetry
            let mut digits = vec![0usize; weight];
            loop {
                checker.stats.colorings_examined += 1;
                for (slot, &pos) in chosen.iter().enumerate() {
                    colors[free[pos]] = digits[slot] + 1;
                }
                if uses_all(&colors, palette) {
                    if checker.check(&colors)? {
                        return Ok(Some(colors));
                    }
                } else {
                    checker.stats.prunes += 1;
                }
                let pinned = usize::from(break_symmetry && weight > 0);
                if !increment(&mut digits[pinned..], palette - 1) {
                    break;
                }
            }
            if !next_combination(&mut chosen, free.len()) {
                break;
            }
        }
    }
    Ok(None)
}

/// Base-`radix` counter, least significant digit last.
fn increment(digits: &mut [usize], radix: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}

fn uses_all(colors: &[usize], palette: usize) -> bool {
    if palette >= 64 {
        let mut seen = vec![false; palette];
        colors.iter().for_each(|&c| seen[c] = true);
        return seen.iter().all(|&s| s);
    }
    let mut seen = 0u64;
    for &c in colors {
        seen |= 1 << c;
    }
    seen.count_ones() as usize == palette
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| {
        acc.saturating_mul((n - i) as u64) / (i as u64 + 1)
    })
}

fn to_coloring<'g>(g: &'g Graph, dense: &[usize]) -> EdgeColoring<'g> {
    let colors = dense.iter().map(|&c| c as Color + 1).collect();
    EdgeColoring::new(g, colors).expect("sweep colorings cover every edge")
}

/// Exhaustive search over two-colorings of a connected non-complete graph.
pub fn exists_two_coloring(g: &Graph, budget: Budget) -> Result<TwoColoringOutcome<'_>> {
    exists_two_coloring_with(g, budget, true)
}

/// As [`exists_two_coloring`], optionally without fixing the first edge.
pub fn exists_two_coloring_with(
    g: &Graph,
    budget: Budget,
    break_symmetry: bool,
) -> Result<TwoColoringOutcome<'_>> {
    g.require_connected()?;
    if g.is_complete() {
        return Err(Error::CompleteGraph);
    }
    let start = Instant::now();
    let mut checker = Checker::new(g, 2, budget);
    let found = sweep(&mut checker, 2, break_symmetry).map_err(|_| Error::BudgetExhausted {
        lower: 2,
        upper: g.edge_count().max(2),
    })?;
    let mut stats = checker.stats;
    stats.elapsed = start.elapsed();
    Ok(TwoColoringOutcome {
        witness: found.map(|dense| to_coloring(g, &dense)),
        stats,
    })
}

pub fn exact_cfc(g: &Graph, max_colors: usize, budget: Budget) -> Result<CfcResult<'_>> {
    exact_cfc_with(g, max_colors, budget, SolverOptions::default())
}

/// Smallest `t <= max_colors` admitting a conflict-free connection coloring.
pub fn exact_cfc_with(
    g: &Graph,
    max_colors: usize,
    budget: Budget,
    options: SolverOptions,
) -> Result<CfcResult<'_>> {
    if max_colors == 0 {
        return Err(Error::NonPositive);
    }
    g.require_connected()?;
    if g.vertex_count() == 1 {
        return Err(Error::TrivialGraph);
    }
    let start = Instant::now();
    let finish = |value, coloring, method, lower_bound, mut stats: SearchStats| {
        stats.elapsed = start.elapsed();
        CfcResult {
            value,
            coloring,
            method,
            lower_bound,
            stats,
        }
    };

    if g.is_complete() {
        let coloring = EdgeColoring::uniform(g, 1);
        return Ok(finish(
            1,
            coloring,
            Method::Complete,
            1,
            SearchStats::default(),
        ));
    }
    let m = g.edge_count();
    let (lower, upper) = if options.use_structural_bounds {
        cfc_bracket(g)?
    } else {
        (2, m)
    };

    if options.use_construction && upper == 2 && lower <= 2 && max_colors >= 2 {
        if let Ok(coloring) = two_coloring(g) {
            if verify_conflict_free_connected(&coloring)?.is_conflict_free_connected {
                return Ok(finish(
                    2,
                    coloring,
                    Method::Construction,
                    2,
                    SearchStats::default(),
                ));
            }
        }
    }

    let mut stats = SearchStats::default();
    for t in lower..=max_colors.min(m) {
        if t == m {
            let coloring = EdgeColoring::new(g, (1..=m as Color).collect())?;
            return Ok(finish(t, coloring, Method::DistinctColors, lower, stats));
        }
        let remaining = Budget(budget.0.saturating_sub(stats.pair_checks));
        let mut checker = Checker::new(g, t, remaining);
        let found = sweep(&mut checker, t, options.break_symmetry);
        stats.colorings_examined += checker.stats.colorings_examined;
        stats.prunes += checker.stats.prunes;
        stats.pair_checks += checker.stats.pair_checks;
        match found {
            Ok(Some(dense)) => {
                return Ok(finish(
                    t,
                    to_coloring(g, &dense),
                    Method::Sweep,
                    lower,
                    stats,
                ));
            }
            Ok(None) => {}
            Err(BudgetExhausted) => {
                return Err(Error::BudgetExhausted {
                    lower: t,
                    upper: upper.max(t),
                })
            }
        }
    }
    Err(Error::NoColoringWithinMax(max_colors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::cfc_path_formula;
    use crate::families::{gen_s, gen_triangle_ends_path};

    fn star3() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn small_values() {
        let budget = Budget::default();
        assert_eq!(exact_cfc(&Graph::complete(4), 5, budget).unwrap().value, 1);
        assert_eq!(exact_cfc(&Graph::complete(3), 5, budget).unwrap().value, 1);
        assert_eq!(exact_cfc(&Graph::cycle(4), 5, budget).unwrap().value, 2);
        let oracle = SolverOptions::oracle();
        assert_eq!(
            exact_cfc_with(&Graph::path(5), 5, budget, oracle)
                .unwrap()
                .value,
            3
        );
        assert_eq!(
            exact_cfc_with(&Graph::cycle(4), 5, budget, oracle)
                .unwrap()
                .value,
            2
        );
    }

    #[test]
    fn witness_is_verified_and_uses_value_colors() {
        for g in [
            Graph::cycle(5),
            Graph::path(6),
            star3(),
            gen_triangle_ends_path(5).unwrap(),
        ] {
            let r = exact_cfc_with(&g, 6, Budget::default(), SolverOptions::oracle()).unwrap();
            assert_eq!(r.coloring.palette_size(), r.value);
            assert!(
                verify_conflict_free_connected(&r.coloring)
                    .unwrap()
                    .is_conflict_free_connected
            );
        }
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(
            exact_cfc(&Graph::new(1, []).unwrap(), 3, Budget::default()).unwrap_err(),
            Error::TrivialGraph
        );
        assert_eq!(
            exact_cfc(&Graph::new(3, [(0, 1)]).unwrap(), 3, Budget::default()).unwrap_err(),
            Error::NotConnected
        );
        assert_eq!(
            exact_cfc(&Graph::cycle(4), 0, Budget::default()).unwrap_err(),
            Error::NonPositive
        );
        assert_eq!(
            exact_cfc_with(
                &Graph::path(5),
                2,
                Budget::default(),
                SolverOptions::oracle()
            )
            .unwrap_err(),
            Error::NoColoringWithinMax(2)
        );
        assert_eq!(
            exists_two_coloring(&Graph::complete(3), Budget::default()).unwrap_err(),
            Error::CompleteGraph
        );
        // K2 is complete
        assert_eq!(
            exact_cfc(&Graph::path(2), 3, Budget::default())
                .unwrap()
                .value,
            1
        );
    }

    #[test]
    fn budget_exhaustion_reports_bracket() {
        let g = gen_s(3).unwrap();
        let err = exact_cfc(&g, 3, Budget(50)).unwrap_err();
        assert_eq!(
            err,
            Error::BudgetExhausted {
                lower: 2,
                upper: 19
            }
        );
        assert!(matches!(
            exists_two_coloring(&g, Budget(10)),
            Err(Error::BudgetExhausted { .. })
        ));
    }

    #[test]
    fn brackets() {
        assert_eq!(cfc_bracket(&Graph::complete(5)).unwrap(), (1, 1));
        assert_eq!(cfc_bracket(&Graph::cycle(6)).unwrap(), (2, 2));
        assert_eq!(cfc_bracket(&star3()).unwrap(), (3, 3));
        assert_eq!(cfc_bracket(&Graph::new(1, []).unwrap()).unwrap(), (0, 0));
        // brute force agrees for the star
        let star = star3();
        let r = exact_cfc_with(&star, 3, Budget::default(), SolverOptions::oracle()).unwrap();
        assert_eq!(r.value, 3);
    }

    #[test]
    fn two_coloring_existence() {
        let c5 = Graph::cycle(5);
        assert!(exists_two_coloring(&c5, Budget::default())
            .unwrap()
            .exists());
        let h = gen_triangle_ends_path(5).unwrap();
        let out = exists_two_coloring(&h, Budget::default()).unwrap();
        assert!(!out.exists());
        assert_eq!(out.stats.colorings_examined, 1 << 9);
    }

    #[test]
    fn paths_match_formula() {
        for edges in 1..=6 {
            let g = Graph::path(edges + 1);
            let r = exact_cfc_with(&g, 4, Budget::default(), SolverOptions::oracle()).unwrap();
            assert_eq!(
                r.value,
                cfc_path_formula(edges).unwrap(),
                "path with {edges} edges"
            );
        }
    }

    #[test]
    fn combinations_enumerate_binomially() {
        let mut count = 1;
        let mut idx = vec![0, 1, 2];
        while next_combination(&mut idx, 6) {
            count += 1;
        }
        assert_eq!(count, 20);
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn sweep_counts_every_palette_coloring() {
        // without symmetry breaking, a palette-3 sweep over a failing graph
        // enumerates all 3^m colorings
        let g = Graph::path(5); // 4 edges, cfc 3
        let mut checker = Checker::new(&g, 2, Budget::UNLIMITED);
        assert!(sweep(&mut checker, 2, false).ok().unwrap().is_none());
        assert_eq!(checker.stats.colorings_examined, 16);
        let mut checker = Checker::new(&g, 2, Budget::UNLIMITED);
        assert!(sweep(&mut checker, 2, true).ok().unwrap().is_none());
        assert_eq!(checker.stats.colorings_examined, 8);

        let g = Graph::path(4);
        let mut checker = Checker::new(&g, 3, Budget::UNLIMITED);
        // weights 0 and 1 are skipped wholesale (1 + 6), then the second
        // weight-2 coloring uses all three colors and is accepted
        assert!(sweep(&mut checker, 3, false).ok().unwrap().is_some());
        assert_eq!(checker.stats.colorings_examined, 9);

        // more colors than edges: nothing to enumerate
        let g = Graph::path(3);
        let mut checker = Checker::new(&g, 3, Budget::UNLIMITED);
        assert!(sweep(&mut checker, 3, false).ok().unwrap().is_none());
        assert_eq!(checker.stats.colorings_examined, 0);
    }
}
