//! Edge colorings and conflict-free connectivity.
//!
//! A path is conflict-free when some color appears on exactly one of its
//! edges; a coloring makes the graph conflict-free connected when every pair
//! of distinct vertices is joined by such a path.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::decomposition::{
    block_decomposition, cut_edge_profile, select_block_matching, BlockDecomposition,
    BlockMatching, CutEdgeProfile,
};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

pub type Color = u32;

/// Positive color per edge of a borrowed graph, indexed by edge index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring<'g> {
    graph: &'g Graph,
    colors: Vec<Color>,
}

impl<'g> EdgeColoring<'g> {
    pub fn new(graph: &'g Graph, colors: Vec<Color>) -> Result<Self> {
        if colors.len() != graph.edge_count() {
            return Err(Error::ColoringMismatch(format!(
                "{} colors for {} edges",
                colors.len(),
                graph.edge_count()
            )));
        }
        if colors.contains(&0) {
            return Err(Error::ColoringMismatch("color ids start at 1".into()));
        }
        Ok(EdgeColoring { graph, colors })
    }

    pub fn uniform(graph: &'g Graph, color: Color) -> Self {
        EdgeColoring::new(graph, vec![color; graph.edge_count()])
            .expect("uniform coloring is valid")
    }

    /// Builds a coloring from explicit `(edge, color)` entries, which must
    /// cover every edge exactly once.
    pub fn from_entries<I>(graph: &'g Graph, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Edge, Color)>,
    {
        let mut colors = vec![0; graph.edge_count()];
        for ((u, v), c) in entries {
            let idx = graph
                .edge_index(u, v)
                .ok_or_else(|| Error::ColoringMismatch(format!("{u} {v} is not an edge")))?;
            if colors[idx] != 0 {
                return Err(Error::ColoringMismatch(format!(
                    "edge {u} {v} colored twice"
                )));
            }
            if c == 0 {
                return Err(Error::ColoringMismatch("color ids start at 1".into()));
            }
            colors[idx] = c;
        }
        if let Some(idx) = colors.iter().position(|&c| c == 0) {
            let (u, v) = graph.edges()[idx];
            return Err(Error::ColoringMismatch(format!(
                "edge {u} {v} has no color"
            )));
        }
        Ok(EdgeColoring { graph, colors })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// Colors by edge index.
    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<Color> {
        self.graph.edge_index(u, v).map(|i| self.colors[i])
    }

    pub fn entries(&self) -> impl Iterator<Item = (Edge, Color)> + '_ {
        self.graph
            .edges()
            .iter()
            .copied()
            .zip(self.colors.iter().copied())
    }

    pub fn palette_size(&self) -> usize {
        let mut distinct = self.colors.clone();
        distinct.sort_unstable();
        distinct.dedup();
        distinct.len()
    }

    /// Renumbers colors `1, 2, ...` in order of first occurrence along the
    /// canonical edge order.
    pub fn normalized(&self) -> EdgeColoring<'g> {
        let mut relabel: HashMap<Color, Color> = HashMap::new();
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                let next = relabel.len() as Color + 1;
                *relabel.entry(c).or_insert(next)
            })
            .collect();
        EdgeColoring {
            graph: self.graph,
            colors,
        }
    }
}

impl Serialize for EdgeColoring<'_> {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let edges: Vec<(usize, usize, Color)> =
            self.entries().map(|((u, v), c)| (u, v, c)).collect();
        let mut s = serializer.serialize_struct("EdgeColoring", 2)?;
        s.serialize_field("palette_size", &self.palette_size())?;
        s.serialize_field("edges", &edges)?;
        s.end()
    }
}

pub fn normalize_coloring<'g>(coloring: &EdgeColoring<'g>) -> EdgeColoring<'g> {
    coloring.normalized()
}

/// True iff `path` is a simple path of the colored graph on which some color
/// occurs exactly once.
pub fn is_conflict_free_path(coloring: &EdgeColoring<'_>, path: &[usize]) -> Result<bool> {
    let g = coloring.graph();
    if path.len() < 2 {
        return Err(Error::NotAPath("fewer than two vertices".into()));
    }
    let mut seen = vec![false; g.vertex_count()];
    for &v in path {
        if v >= g.vertex_count() {
            return Err(Error::NotAPath(format!("vertex {v} out of range")));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::NotAPath(format!("vertex {v} repeats")));
        }
    }
    let mut counts: BTreeMap<Color, usize> = BTreeMap::new();
    for w in path.windows(2) {
        let c = coloring
            .color_of(w[0], w[1])
            .ok_or_else(|| Error::NotAPath(format!("{} {} is not an edge", w[0], w[1])))?;
        *counts.entry(c).or_default() += 1;
    }
    Ok(counts.values().any(|&n| n == 1))
}

/// Outcome of checking every vertex pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CfcVerdict {
    pub is_conflict_free_connected: bool,
    /// A conflict-free path for each resolved pair `(u, v)`, `u < v`.
    #[serde(skip)]
    pub witness_paths: BTreeMap<(usize, usize), Vec<usize>>,
    pub failing_pair: Option<(usize, usize)>,
}

/// Depth-first enumeration of simple paths out of a source, tracking how many
/// times each color occurs on the current path.
///
/// A branch is cut once every palette color already occurs at least twice:
/// counts only grow along an extension, so no conflict-free path can follow.
/// Colors are dense ids `0..palette`.
pub(crate) struct PathSearch {
    palette: usize,
    counts: Vec<u32>,
    singles: usize,
    saturated: usize,
    on_path: Vec<bool>,
    pending: Vec<bool>,
    // (vertex, next neighbor position, color of entering edge)
    stack: Vec<(usize, usize, usize)>,
}

impl PathSearch {
    pub(crate) fn new(vertex_count: usize, palette: usize) -> Self {
        PathSearch {
            palette,
            counts: vec![0; palette],
            singles: 0,
            saturated: 0,
            on_path: vec![false; vertex_count],
            pending: vec![false; vertex_count],
            stack: Vec::with_capacity(vertex_count),
        }
    }

    #[inline]
    fn push_color(&mut self, c: usize) {
        self.counts[c] += 1;
        match self.counts[c] {
            1 => self.singles += 1,
            2 => {
                self.singles -= 1;
                self.saturated += 1
            }
            _ => {}
        }
    }

    #[inline]
    fn pop_color(&mut self, c: usize) {
        match self.counts[c] {
            1 => self.singles -= 1,
            2 => {
                self.singles += 1;
                self.saturated -= 1
            }
            _ => {}
        }
        self.counts[c] -= 1;
    }

    /// Searches simple paths from `source` until every vertex in `targets`
    /// has been reached by a conflict-free path. Calls `found` with the path
    /// when a target is first resolved. Returns the targets left unresolved,
    /// in ascending order.
    pub(crate) fn run<F>(
        &mut self,
        g: &Graph,
        colors: &[usize],
        source: usize,
        targets: &[usize],
        mut found: F,
    ) -> Vec<usize>
    where
        F: FnMut(usize, &[(usize, usize, usize)]),
    {
        let mut remaining = 0;
        for &t in targets {
            if t != source && !self.pending[t] {
                self.pending[t] = true;
                remaining += 1;
            }
        }

        self.on_path[source] = true;
        self.stack.clear();
        self.stack.push((source, 0, usize::MAX));
        while remaining > 0 {
            let Some(top) = self.stack.last_mut() else {
                break;
            };
            let (v, pos, _) = *top;
            let Some(&w) = g.neighbors(v).get(pos) else {
                let (v, _, c) = self.stack.pop().expect("non-empty stack");
                self.on_path[v] = false;
                if c != usize::MAX {
                    self.pop_color(c);
                }
                continue;
            };
            top.1 += 1;
            if self.on_path[w] {
                continue;
            }
            let c = colors[g.edge_index(v, w).expect("adjacent")];
            self.push_color(c);
            if self.singles > 0 && self.pending[w] {
                self.pending[w] = false;
                remaining -= 1;
                self.stack.push((w, 0, c));
                found(w, &self.stack);
                self.stack.pop();
            }
            if self.singles == 0 && self.saturated == self.palette {
                self.pop_color(c);
                continue;
            }
            self.on_path[w] = true;
            self.stack.push((w, 0, c));
        }

        // unwind whatever is left on the stack
        while let Some((v, _, c)) = self.stack.pop() {
            self.on_path[v] = false;
            if c != usize::MAX {
                self.pop_color(c);
            }
        }
        let mut unresolved = Vec::new();
        for &t in targets {
            if std::mem::take(&mut self.pending[t]) {
                unresolved.push(t);
            }
        }
        unresolved
    }
}

/// Maps arbitrary color ids to dense ids `0..palette`.
pub(crate) fn dense_colors(colors: &[Color]) -> (Vec<usize>, usize) {
    let mut ids: HashMap<Color, usize> = HashMap::new();
    let dense = colors
        .iter()
        .map(|&c| {
            let next = ids.len();
            *ids.entry(c).or_insert(next)
        })
        .collect();
    (dense, ids.len())
}

/// Checks every pair `u < v` in lexicographic order by exhaustive simple-path
/// enumeration from `u`, stopping at the first pair that has no
/// conflict-free path.
///
/// The enumeration is exponential in the worst case; it is meant for graphs
/// with up to a few dozen edges.
pub fn verify_conflict_free_connected(coloring: &EdgeColoring<'_>) -> Result<CfcVerdict> {
    let g = coloring.graph();
    g.require_connected()?;
    let n = g.vertex_count();
    let (colors, palette) = dense_colors(coloring.colors());
    let mut search = PathSearch::new(n, palette);
    let mut witness_paths = BTreeMap::new();

    for u in 0..n {
        let targets: Vec<usize> = (u + 1..n).collect();
        let unresolved = search.run(g, &colors, u, &targets, |w, stack| {
            witness_paths.insert((u, w), stack.iter().map(|f| f.0).collect());
        });
        if let Some(&v) = unresolved.first() {
            return Ok(CfcVerdict {
                is_conflict_free_connected: false,
                witness_paths,
                failing_pair: Some((u, v)),
            });
        }
    }
    Ok(CfcVerdict {
        is_conflict_free_connected: true,
        witness_paths,
        failing_pair: None,
    })
}

/// Which verifier to run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerifyStrategy {
    /// Exhaustive simple-path enumeration.
    Enumerate,
    /// Disjoint-paths flow check, polynomial time.
    Linkage,
    /// Enumeration up to [`ENUMERATION_EDGE_LIMIT`] edges, linkage above.
    #[default]
    Auto,
}

/// Largest edge count for which [`VerifyStrategy::Auto`] enumerates paths.
pub const ENUMERATION_EDGE_LIMIT: usize = 25;

pub fn verify_with(coloring: &EdgeColoring<'_>, strategy: VerifyStrategy) -> Result<CfcVerdict> {
    let enumerate = match strategy {
        VerifyStrategy::Enumerate => true,
        VerifyStrategy::Linkage => false,
        VerifyStrategy::Auto => coloring.graph().edge_count() <= ENUMERATION_EDGE_LIMIT,
    };
    if enumerate {
        verify_conflict_free_connected(coloring)
    } else {
        crate::linkage::verify_conflict_free_connected_linkage(coloring)
    }
}

/// The explicit two-coloring: matching edges get color 2, the largest
/// cut-edge component `Q_k` is colored along its path by order
/// (2: `1`; 3: `1, 2`; 4: `1, 2, 1`), everything else gets color 1.
pub fn construct_two_coloring<'g>(
    g: &'g Graph,
    d: &BlockDecomposition,
    profile: &CutEdgeProfile,
    matching: &BlockMatching,
) -> Result<EdgeColoring<'g>> {
    if g.is_complete() {
        return Err(Error::CompleteGraph);
    }
    if !profile.admits_two_coloring_construction() {
        return Err(Error::HypothesisViolated(format!(
            "cut-edge subgraph has component orders {:?}{}; need all 2 except the largest, at most 4",
            profile.component_orders,
            if profile.is_linear_forest {
                ""
            } else {
                " and is not a linear forest"
            }
        )));
    }
    if matching.chosen.len() != d.nontrivial_blocks().count() || !matching.is_matching() {
        return Err(Error::HypothesisViolated(
            "block matching must pick one disjoint edge per nontrivial block".into(),
        ));
    }

    let mut colors = vec![1; g.edge_count()];
    for (_, (u, v)) in &matching.chosen {
        let idx = g
            .edge_index(*u, *v)
            .ok_or_else(|| Error::ColoringMismatch(format!("{u} {v} is not an edge")))?;
        colors[idx] = 2;
    }
    if let Some(q) = profile.largest() {
        let along: &[Color] = match q.order() {
            2 => &[1],
            3 => &[1, 2],
            _ => &[1, 2, 1],
        };
        let path_edges = q.path_edges().expect("linear forest components are paths");
        for (&(u, v), &c) in path_edges.iter().zip(along) {
            let idx = g.edge_index(u, v).expect("cut edge belongs to graph");
            colors[idx] = c;
        }
    }
    EdgeColoring::new(g, colors)
}

/// Runs the decomposition pipeline and builds the explicit two-coloring.
pub fn two_coloring(g: &Graph) -> Result<EdgeColoring<'_>> {
    let d = block_decomposition(g)?;
    let profile = cut_edge_profile(g)?;
    let matching = select_block_matching(&d);
    construct_two_coloring(g, &d, &profile, &matching)
}

/// `ceil(log2(edge_count + 1))`, the conflict-free connection number of a
/// path with `edge_count` edges.
pub fn cfc_path_formula(edge_count: usize) -> Result<usize> {
    if edge_count == 0 {
        return Err(Error::NonPositive);
    }
    // ceil(log2(m + 1)) is the bit length of m
    Ok((usize::BITS - edge_count.leading_zeros()) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::gen_h;
    use proptest::prelude::*;

    fn colored_path(colors: &[Color]) -> (Graph, Vec<Color>) {
        (Graph::path(colors.len() + 1), colors.to_vec())
    }

    #[test]
    fn single_edge_path() {
        let (g, c) = colored_path(&[7]);
        let col = EdgeColoring::new(&g, c).unwrap();
        assert!(is_conflict_free_path(&col, &[0, 1]).unwrap());
    }

    #[test]
    fn monochromatic_two_edge_path() {
        let (g, c) = colored_path(&[1, 1]);
        let col = EdgeColoring::new(&g, c).unwrap();
        assert!(!is_conflict_free_path(&col, &[0, 1, 2]).unwrap());
    }

    #[test]
    fn one_two_one_path() {
        let (g, c) = colored_path(&[1, 2, 1]);
        let col = EdgeColoring::new(&g, c).unwrap();
        assert!(is_conflict_free_path(&col, &[0, 1, 2, 3]).unwrap());
    }

    #[test]
    fn not_a_path() {
        let g = Graph::cycle(4);
        let col = EdgeColoring::uniform(&g, 1);
        assert!(matches!(
            is_conflict_free_path(&col, &[0, 2]),
            Err(Error::NotAPath(_))
        ));
        assert!(matches!(
            is_conflict_free_path(&col, &[0, 1, 2, 3, 0]),
            Err(Error::NotAPath(_))
        ));
        assert!(matches!(
            is_conflict_free_path(&col, &[0]),
            Err(Error::NotAPath(_))
        ));
    }

    #[test]
    fn k3_monochromatic_is_cfc() {
        let g = Graph::complete(3);
        let verdict = verify_conflict_free_connected(&EdgeColoring::uniform(&g, 1)).unwrap();
        assert!(verdict.is_conflict_free_connected);
        assert_eq!(verdict.witness_paths.len(), 3);
    }

    #[test]
    fn c4_monochromatic_fails_on_opposite_pair() {
        let g = Graph::cycle(4);
        let verdict = verify_conflict_free_connected(&EdgeColoring::uniform(&g, 1)).unwrap();
        assert!(!verdict.is_conflict_free_connected);
        assert_eq!(verdict.failing_pair, Some((0, 2)));
    }

    #[test]
    fn verify_requires_connected() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            verify_conflict_free_connected(&EdgeColoring::uniform(&g, 1)),
            Err(Error::NotConnected)
        );
    }

    #[test]
    fn normalization() {
        let g = Graph::path(4);
        let col = EdgeColoring::new(&g, vec![5, 5, 9]).unwrap();
        assert_eq!(col.normalized().colors(), &[1, 1, 2]);
        let normal = EdgeColoring::new(&g, vec![1, 2, 1]).unwrap();
        assert_eq!(normal.normalized(), normal);
        let g = Graph::path(5);
        let col = EdgeColoring::new(&g, vec![3, 1, 3, 2]).unwrap();
        assert_eq!(normalize_coloring(&col).colors(), &[1, 2, 1, 3]);
        assert_eq!(col.palette_size(), 3);
    }

    #[test]
    fn coloring_shape_is_checked() {
        let g = Graph::path(3);
        assert!(EdgeColoring::new(&g, vec![1]).is_err());
        assert!(EdgeColoring::new(&g, vec![1, 0]).is_err());
        assert!(EdgeColoring::from_entries(&g, [((0, 1), 1)]).is_err());
        assert!(EdgeColoring::from_entries(&g, [((0, 1), 1), ((1, 0), 2)]).is_err());
        let c = EdgeColoring::from_entries(&g, [((2, 1), 2), ((0, 1), 1)]).unwrap();
        assert_eq!(c.colors(), &[1, 2]);
    }

    #[test]
    fn path_formula() {
        assert_eq!(cfc_path_formula(1), Ok(1));
        assert_eq!(cfc_path_formula(2), Ok(2));
        assert_eq!(cfc_path_formula(3), Ok(2));
        assert_eq!(cfc_path_formula(4), Ok(3));
        assert_eq!(cfc_path_formula(7), Ok(3));
        assert_eq!(cfc_path_formula(8), Ok(4));
        assert_eq!(cfc_path_formula(0), Err(Error::NonPositive));
    }

    #[test]
    fn construction_on_c5() {
        let g = Graph::cycle(5);
        let col = two_coloring(&g).unwrap();
        assert_eq!(col.colors(), &[2, 1, 1, 1, 1]);
        assert!(
            verify_conflict_free_connected(&col)
                .unwrap()
                .is_conflict_free_connected
        );
    }

    #[test]
    fn construction_colors_order_four_component_121() {
        // two triangles joined by the bridge path 2-3-4-5
        let g = Graph::new(
            9,
            [
                (0, 1),
                (0, 2),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (5, 7),
                (6, 7),
                (7, 8),
                (6, 8),
            ],
        )
        .unwrap();
        let col = two_coloring(&g).unwrap();
        assert_eq!(col.color_of(2, 3), Some(1));
        assert_eq!(col.color_of(3, 4), Some(2));
        assert_eq!(col.color_of(4, 5), Some(1));
        assert!(
            verify_conflict_free_connected(&col)
                .unwrap()
                .is_conflict_free_connected
        );
    }

    #[test]
    fn construction_on_h33() {
        let g = gen_h(3, 3).unwrap();
        let col = two_coloring(&g).unwrap();
        assert_eq!(col.color_of(0, 1), Some(1));
        assert_eq!(col.color_of(1, 2), Some(2));
        // one edge per triangle plus the second bridge
        assert_eq!(col.colors().iter().filter(|&&c| c == 2).count(), 4);
        assert!(
            verify_conflict_free_connected(&col)
                .unwrap()
                .is_conflict_free_connected
        );
    }

    #[test]
    fn construction_rejects_bad_inputs() {
        assert_eq!(two_coloring(&Graph::complete(4)), Err(Error::CompleteGraph));
        assert!(matches!(
            two_coloring(&Graph::path(6)),
            Err(Error::HypothesisViolated(_))
        ));
    }

    /// Every simple path between `u` and `v`, by plain recursion.
    fn all_simple_paths(g: &Graph, u: usize, v: usize) -> Vec<Vec<usize>> {
        fn go(g: &Graph, v: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let last = *path.last().unwrap();
            if last == v {
                out.push(path.clone());
                return;
            }
            for &w in g.neighbors(last) {
                if !path.contains(&w) {
                    path.push(w);
                    go(g, v, path, out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(g, v, &mut vec![u], &mut out);
        out
    }

    fn arb_colored_graph() -> impl Strategy<Value = (Graph, Vec<Color>)> {
        (2usize..=7)
            .prop_flat_map(|n| {
                let extra = prop::collection::vec((0..n, 0..n), 0..10);
                (Just(n), extra, 1u32..=3)
            })
            .prop_flat_map(|(n, extra, palette)| {
                // spanning path keeps the graph connected
                let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
                edges.extend(extra.into_iter().filter(|(u, v)| u != v));
                let g = Graph::new(n, edges).unwrap();
                let m = g.edge_count();
                (Just(g), prop::collection::vec(1..=palette, m))
            })
    }

    proptest! {
        #[test]
        fn pruned_search_matches_full_enumeration((g, colors) in arb_colored_graph()) {
            let col = EdgeColoring::new(&g, colors).unwrap();
            let verdict = verify_conflict_free_connected(&col).unwrap();
            let n = g.vertex_count();
            let mut expected_fail = None;
            'outer: for u in 0..n {
                for v in u + 1..n {
                    let ok = all_simple_paths(&g, u, v)
                        .iter()
                        .any(|p| is_conflict_free_path(&col, p).unwrap());
                    if !ok {
                        expected_fail = Some((u, v));
                        break 'outer;
                    }
                }
            }
            prop_assert_eq!(verdict.failing_pair, expected_fail);
            prop_assert_eq!(verdict.is_conflict_free_connected, expected_fail.is_none());
            for (&(u, v), path) in &verdict.witness_paths {
                prop_assert_eq!(path[0], u);
                prop_assert_eq!(*path.last().unwrap(), v);
                prop_assert!(is_conflict_free_path(&col, path).unwrap());
            }
        }

        #[test]
        fn verdict_invariant_under_color_permutation((g, colors) in arb_colored_graph(), shift in 1u32..5) {
            let col = EdgeColoring::new(&g, colors.clone()).unwrap();
            // c -> (c + shift) mod 4 + 1 is a bijection on 1..=4
            let permuted: Vec<Color> = colors.iter().map(|&c| (c + shift) % 4 + 1).collect();
            let other = EdgeColoring::new(&g, permuted).unwrap();
            let a = verify_conflict_free_connected(&col).unwrap();
            let b = verify_conflict_free_connected(&other).unwrap();
            prop_assert_eq!(a.is_conflict_free_connected, b.is_conflict_free_connected);
            prop_assert_eq!(a.failing_pair, b.failing_pair);
        }

        #[test]
        fn splitting_a_color_class_keeps_witnesses((g, colors) in arb_colored_graph(), pick in any::<prop::sample::Index>()) {
            let col = EdgeColoring::new(&g, colors.clone()).unwrap();
            let verdict = verify_conflict_free_connected(&col).unwrap();
            prop_assume!(verdict.is_conflict_free_connected);
            let target = colors[pick.index(colors.len())];
            // split `target` into itself and fresh color 10 by alternating
            let mut toggle = false;
            let split: Vec<Color> = colors
                .iter()
                .map(|&c| {
                    if c == target {
                        toggle = !toggle;
                        if toggle { 10 } else { c }
                    } else {
                        c
                    }
                })
                .collect();
            let refined = EdgeColoring::new(&g, split).unwrap();
            for path in verdict.witness_paths.values() {
                prop_assert!(is_conflict_free_path(&refined, path).unwrap());
            }
        }

        #[test]
        fn path_verdict_depends_only_on_color_multiset(colors in prop::collection::vec(1u32..4, 1..8), rot in 0usize..8) {
            let g = Graph::path(colors.len() + 1);
            let path: Vec<usize> = (0..=colors.len()).collect();
            let mut rotated = colors.clone();
            let len = rotated.len();
            rotated.rotate_left(rot % len);
            let a = is_conflict_free_path(&EdgeColoring::new(&g, colors).unwrap(), &path).unwrap();
            let b = is_conflict_free_path(&EdgeColoring::new(&g, rotated).unwrap(), &path).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}
