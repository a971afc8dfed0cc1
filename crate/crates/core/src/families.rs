//! Deterministic constructions of the extremal graphs, plus seeded random
//! corpora for property tests and the theorem harness.
//!
//! "Attaching" a clique to a vertex means that vertex becomes one of the
//! clique's vertices. Structural vertices (path, hub or center) are numbered
//! first, clique fill-ins follow in block order.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Accumulates edges while handing out fresh vertex ids.
struct Builder {
    next: usize,
    edges: Vec<Edge>,
}

impl Builder {
    fn new(reserved: usize) -> Self {
        Builder {
            next: reserved,
            edges: Vec::new(),
        }
    }

    fn fresh(&mut self, count: usize) -> Vec<usize> {
        let ids = (self.next..self.next + count).collect();
        self.next += count;
        ids
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    fn clique(&mut self, vertices: &[usize]) {
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                self.edges.push((u, v));
            }
        }
    }

    /// Clique of order `order` through the existing vertices `anchors`.
    fn clique_on(&mut self, anchors: &[usize], order: usize) {
        let mut members = anchors.to_vec();
        members.extend(self.fresh(order - anchors.len()));
        self.clique(&members);
    }

    fn build(self) -> Graph {
        Graph::new(self.next, self.edges).expect("constructions only emit valid edges")
    }
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::ParamOutOfRange(what()))
    }
}

/// Path on `k` vertices with a `K_t` attached at every path vertex.
pub fn gen_h(k: usize, t: usize) -> Result<Graph> {
    check(k >= 3 && t >= 3, || {
        format!("H needs k >= 3 and t >= 3, got k={k}, t={t}")
    })?;
    let mut b = Builder::new(k);
    for v in 1..k {
        b.edge(v - 1, v);
    }
    for v in 0..k {
        b.clique_on(&[v], t);
    }
    Ok(b.build())
}

/// Central `K_{k-1}` whose vertices are each joined by a cut edge to one of
/// `k-1` outer copies of `K_k`. Vertices `0..k-1` are the center.
pub fn gen_r(k: usize) -> Result<Graph> {
    check(k >= 3, || format!("R needs k >= 3, got k={k}"))?;
    let center: Vec<usize> = (0..k - 1).collect();
    let mut b = Builder::new(k - 1);
    b.clique(&center);
    for &c in &center {
        let outer = b.fresh(k);
        b.edge(c, outer[0]);
        b.clique(&outer);
    }
    Ok(b.build())
}

/// Path `v0..v5` with `K_t` attached at `v0, v1, v4, v5` and one more `K_t`
/// containing the edge `v2 v3`. Vertex `i` is `v_i`.
pub fn gen_s(t: usize) -> Result<Graph> {
    check(t >= 3, || format!("S needs t >= 3, got t={t}"))?;
    let mut b = Builder::new(6);
    for v in 1..6 {
        b.edge(v - 1, v);
    }
    for v in [0, 1] {
        b.clique_on(&[v], t);
    }
    b.clique_on(&[2, 3], t);
    for v in [4, 5] {
        b.clique_on(&[v], t);
    }
    Ok(b.build())
}

/// Hub vertex 0 joined by a cut edge to each of `k-1` copies of `K_{k+2}`.
pub fn gen_d(k: usize) -> Result<Graph> {
    check(k >= 5, || format!("D needs k >= 5, got k={k}"))?;
    let mut b = Builder::new(1);
    for _ in 0..k - 1 {
        let block = b.fresh(k + 2);
        b.edge(0, block[0]);
        b.clique(&block);
    }
    Ok(b.build())
}

/// Two triangles whose chosen vertices are joined by a path of order `t`.
/// Vertices `0..t` are the path.
pub fn gen_triangle_ends_path(t: usize) -> Result<Graph> {
    check(t >= 5, || format!("remark4-H needs t >= 5, got t={t}"))?;
    let mut b = Builder::new(t);
    for v in 1..t {
        b.edge(v - 1, v);
    }
    b.clique_on(&[0], 3);
    b.clique_on(&[t - 1], 3);
    Ok(b.build())
}

/// Five copies of `K_{n/5}` strung together by single edges.
pub fn gen_five_clique_path(n: usize) -> Result<Graph> {
    check(n.is_multiple_of(5) && n / 5 >= 3, || {
        format!("remark4-G needs n divisible by 5 with n/5 >= 3, got n={n}")
    })?;
    gen_h(5, n / 5)
}

/// Four copies of `K_{n/4}`; the first is joined to the other three.
pub fn gen_clique_star(n: usize) -> Result<Graph> {
    check(n.is_multiple_of(4) && n >= 4, || {
        format!("remark6-H needs n divisible by 4, got n={n}")
    })?;
    star_of_cliques([n / 4; 4])
}

/// Cliques of orders 1, 4, 5, 5; the singleton is joined to the other three.
pub fn gen_uneven_clique_star() -> Result<Graph> {
    star_of_cliques([1, 4, 5, 5])
}

fn star_of_cliques(orders: [usize; 4]) -> Result<Graph> {
    let mut b = Builder::new(4);
    for v in 1..4 {
        b.edge(0, v);
    }
    for (v, &order) in orders.iter().enumerate() {
        b.clique_on(&[v], order);
    }
    Ok(b.build())
}

/// Path `v1 u1 u2 v2 v3` with `K_{(n-2)/3}` identified at `v1`, `v2`, `v3`.
/// Vertices `0..5` follow the path order.
pub fn gen_three_clique_path(n: usize) -> Result<Graph> {
    check(n % 3 == 2 && (5..=32).contains(&n), || {
        format!("remark7-G needs n = 2 mod 3 with 5 <= n <= 32, got n={n}")
    })?;
    let s = (n - 2) / 3;
    let mut b = Builder::new(5);
    for v in 1..5 {
        b.edge(v - 1, v);
    }
    for v in [0, 3, 4] {
        b.clique_on(&[v], s);
    }
    Ok(b.build())
}

/// Every named construction with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    #[serde(rename = "H")]
    H {
        k: usize,
        t: usize,
    },
    #[serde(rename = "R")]
    R {
        k: usize,
    },
    #[serde(rename = "S")]
    S {
        t: usize,
    },
    #[serde(rename = "D")]
    D {
        k: usize,
    },
    #[serde(rename = "remark4-H")]
    TriangleEnds {
        t: usize,
    },
    #[serde(rename = "remark4-G")]
    FiveCliquePath {
        n: usize,
    },
    #[serde(rename = "remark6-H")]
    CliqueStar {
        n: usize,
    },
    #[serde(rename = "remark6-G")]
    UnevenCliqueStar,
    #[serde(rename = "remark7-G")]
    ThreeCliquePath {
        n: usize,
    },
    /// Path with `n` vertices.
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
}

impl FamilySpec {
    pub fn generate(&self) -> Result<Graph> {
        match *self {
            FamilySpec::H { k, t } => gen_h(k, t),
            FamilySpec::R { k } => gen_r(k),
            FamilySpec::S { t } => gen_s(t),
            FamilySpec::D { k } => gen_d(k),
            FamilySpec::TriangleEnds { t } => gen_triangle_ends_path(t),
            FamilySpec::FiveCliquePath { n } => gen_five_clique_path(n),
            FamilySpec::CliqueStar { n } => gen_clique_star(n),
            FamilySpec::UnevenCliqueStar => gen_uneven_clique_star(),
            FamilySpec::ThreeCliquePath { n } => gen_three_clique_path(n),
            FamilySpec::Path { n } => {
                check(n >= 1, || "path needs n >= 1".into())?;
                Ok(Graph::path(n))
            }
            FamilySpec::Cycle { n } => {
                check(n >= 3, || format!("cycle needs n >= 3, got n={n}"))?;
                Ok(Graph::cycle(n))
            }
            FamilySpec::Complete { n } => {
                check(n >= 1, || "complete needs n >= 1".into())?;
                Ok(Graph::complete(n))
            }
        }
    }

    pub fn id(&self) -> &'static str {
        match self {
            FamilySpec::H { .. } => "H",
            FamilySpec::R { .. } => "R",
            FamilySpec::S { .. } => "S",
            FamilySpec::D { .. } => "D",
            FamilySpec::TriangleEnds { .. } => "remark4-H",
            FamilySpec::FiveCliquePath { .. } => "remark4-G",
            FamilySpec::CliqueStar { .. } => "remark6-H",
            FamilySpec::UnevenCliqueStar => "remark6-G",
            FamilySpec::ThreeCliquePath { .. } => "remark7-G",
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Complete { .. } => "complete",
        }
    }

    /// Parses an id followed by its integer parameters, e.g. `H 3 4`,
    /// `remark4-H 5` or `S:3`.
    pub fn parse_parts(id: &str, params: &[usize]) -> Result<Self> {
        let want = |count: usize| {
            check(params.len() == count, || {
                format!("{id} takes {count} parameter(s), got {}", params.len())
            })
        };
        let spec = match id {
            "H" => {
                want(2)?;
                FamilySpec::H {
                    k: params[0],
                    t: params[1],
                }
            }
            "R" => want(1).map(|_| FamilySpec::R { k: params[0] })?,
            "S" => want(1).map(|_| FamilySpec::S { t: params[0] })?,
            "D" => want(1).map(|_| FamilySpec::D { k: params[0] })?,
            "remark4-H" => want(1).map(|_| FamilySpec::TriangleEnds { t: params[0] })?,
            "remark4-G" => want(1).map(|_| FamilySpec::FiveCliquePath { n: params[0] })?,
            "remark6-H" => want(1).map(|_| FamilySpec::CliqueStar { n: params[0] })?,
            "remark6-G" => want(0).map(|_| FamilySpec::UnevenCliqueStar)?,
            "remark7-G" => want(1).map(|_| FamilySpec::ThreeCliquePath { n: params[0] })?,
            "path" => want(1).map(|_| FamilySpec::Path { n: params[0] })?,
            "cycle" => want(1).map(|_| FamilySpec::Cycle { n: params[0] })?,
            "complete" => want(1).map(|_| FamilySpec::Complete { n: params[0] })?,
            other => return Err(Error::ParamOutOfRange(format!("unknown family `{other}`"))),
        };
        Ok(spec)
    }

    fn params(&self) -> Vec<usize> {
        match *self {
            FamilySpec::H { k, t } => vec![k, t],
            FamilySpec::R { k } | FamilySpec::D { k } => vec![k],
            FamilySpec::S { t } | FamilySpec::TriangleEnds { t } => vec![t],
            FamilySpec::UnevenCliqueStar => vec![],
            FamilySpec::FiveCliquePath { n }
            | FamilySpec::CliqueStar { n }
            | FamilySpec::ThreeCliquePath { n }
            | FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Complete { n } => vec![n],
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id())?;
        for p in self.params() {
            write!(f, " {p}")?;
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s
            .split(|c: char| c.is_whitespace() || c == ':' || c == ',')
            .filter(|p| !p.is_empty());
        let id = parts
            .next()
            .ok_or_else(|| Error::ParamOutOfRange("empty family spec".into()))?;
        let params = parts
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::ParamOutOfRange(format!("bad parameter `{p}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        FamilySpec::parse_parts(id, &params)
    }
}

/// Seeded generator; per-trial streams come from [`trial_rng`].
pub type CorpusRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> CorpusRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent generator for trial `index` of a run with master `seed`.
pub fn trial_rng(seed: u64, index: u64) -> CorpusRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

pub const MAX_RETRIES: usize = 10_000;

/// `G(n, p)` conditioned on connectivity by rejection sampling.
pub fn gen_random_connected<R: Rng>(n: usize, edge_probability: f64, rng: &mut R) -> Result<Graph> {
    check(n >= 2, || format!("random graph needs n >= 2, got n={n}"))?;
    check(edge_probability > 0.0 && edge_probability <= 1.0, || {
        format!("edge probability must lie in (0, 1], got {edge_probability}")
    })?;
    for _ in 0..MAX_RETRIES {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(edge_probability) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, edges)?;
        if g.is_connected()? {
            return Ok(g);
        }
    }
    Err(Error::RetriesExhausted(MAX_RETRIES))
}

/// Random connected graph built from small 2-connected blocks glued along a
/// random tree, either by sharing a vertex or through a single bridge, with
/// optional pendant edges and at most one bridge path of length 2 or 3.
///
/// No two bridges share an endpoint except along that one path, so the
/// cut-edge subgraph is a linear forest with all components of order 2 except
/// possibly one of order at most 4.
pub fn gen_random_glued_blocks<R: Rng>(max_vertices: usize, rng: &mut R) -> Result<Graph> {
    check(max_vertices >= 4, || {
        format!("glued blocks need at least 4 vertices, got {max_vertices}")
    })?;
    let mut next = 0usize;
    let mut edges: Vec<Edge> = Vec::new();
    let mut bridge_end = Vec::<bool>::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut long_path_used = false;

    let mut fresh = |count: usize, bridge_end: &mut Vec<bool>| {
        let ids: Vec<usize> = (next..next + count).collect();
        next += count;
        bridge_end.resize(next, false);
        ids
    };

    let target = rng.gen_range(4..=max_vertices);
    loop {
        let size = rng.gen_range(3..=6usize).min(target);
        let used = bridge_end.len();
        if !blocks.is_empty() && used + size + 2 > target {
            break;
        }
        // 2-connected block: Hamiltonian cycle plus random chords
        let mut members = Vec::with_capacity(size);
        let mut shared = None;
        if let Some(parent) = (!blocks.is_empty()).then(|| rng.gen_range(0..blocks.len())) {
            let anchor = blocks[parent][rng.gen_range(0..blocks[parent].len())];
            match rng.gen_range(0..4) {
                0 | 1 => shared = Some(anchor),
                kind => {
                    let hop_count = if kind == 3 && !long_path_used {
                        long_path_used = true;
                        rng.gen_range(2..=3)
                    } else {
                        1
                    };
                    if !bridge_end[anchor] {
                        let mut prev = anchor;
                        bridge_end[anchor] = true;
                        for _ in 1..hop_count {
                            let mid = fresh(1, &mut bridge_end)[0];
                            bridge_end[mid] = true;
                            edges.push((prev, mid));
                            prev = mid;
                        }
                        let entry = fresh(1, &mut bridge_end)[0];
                        bridge_end[entry] = true;
                        edges.push((prev, entry));
                        members.push(entry);
                    } else {
                        shared = Some(anchor);
                    }
                }
            }
        }
        if let Some(v) = shared {
            members.push(v);
        }
        let extra = size - members.len();
        members.extend(fresh(extra, &mut bridge_end));
        for i in 0..size {
            edges.push((members[i], members[(i + 1) % size]));
        }
        for i in 0..size {
            for j in i + 2..size {
                if (i, j) != (0, size - 1) && rng.gen_bool(0.35) {
                    edges.push((members[i], members[j]));
                }
            }
        }
        blocks.push(members);
    }

    // pendant edges at vertices not already touching a bridge
    let pendants = rng.gen_range(0..=2usize);
    for _ in 0..pendants {
        if bridge_end.len() >= target {
            break;
        }
        let anchor = rng.gen_range(0..bridge_end.len());
        if bridge_end[anchor] {
            continue;
        }
        bridge_end[anchor] = true;
        let leaf = fresh(1, &mut bridge_end)[0];
        bridge_end[leaf] = true;
        edges.push((anchor, leaf));
    }
    Graph::new(bridge_end.len(), edges)
}

/// Random cliques of order 1 to 6 on exactly `n` vertices, each joined to an
/// earlier clique by a bridge, plus an occasional second link that turns the
/// bridge into a 4-cycle.
pub fn gen_random_clique_tree<R: Rng>(n: usize, rng: &mut R) -> Result<Graph> {
    check(n >= 2, || format!("clique tree needs n >= 2, got n={n}"))?;
    let mut b = Builder::new(0);
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    while b.next < n {
        let order = rng.gen_range(1..=6usize).min(n - b.next);
        let members = b.fresh(order);
        b.clique(&members);
        if !cliques.is_empty() {
            let parent = &cliques[rng.gen_range(0..cliques.len())];
            let x = parent[rng.gen_range(0..parent.len())];
            let y = members[rng.gen_range(0..members.len())];
            b.edge(x, y);
            if parent.len() > 1 && members.len() > 1 && rng.gen_bool(0.2) {
                let x2 = *parent.iter().find(|&&v| v != x).expect("order >= 2");
                let y2 = *members.iter().find(|&&v| v != y).expect("order >= 2");
                b.edge(x2, y2);
            }
        }
        cliques.push(members);
    }
    Ok(b.build())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{count_cut_edges, cut_edge_profile};

    fn metrics(g: &Graph) -> (usize, usize, usize) {
        (
            g.vertex_count(),
            g.min_degree().unwrap(),
            count_cut_edges(g).unwrap(),
        )
    }

    #[test]
    fn h_family() {
        assert_eq!(metrics(&gen_h(3, 3).unwrap()), (9, 2, 2));
        assert_eq!(metrics(&gen_h(5, 3).unwrap()), (15, 2, 4));
        let g = gen_h(3, 4).unwrap();
        assert_eq!(metrics(&g), (12, 3, 2));
        assert_eq!(cut_edge_profile(&g).unwrap().component_orders, vec![3]);
        assert!(gen_h(2, 3).is_err());
        assert!(gen_h(3, 2).is_err());
    }

    #[test]
    fn r_family() {
        // n = k^2 - 1 and min degree k - 1 hold for every k; the cut-edge
        // count is k - 1 only from k = 4 on, because the central K2 of R(3)
        // is itself a bridge.
        assert_eq!(metrics(&gen_r(3).unwrap()), (8, 2, 3));
        assert_eq!(metrics(&gen_r(4).unwrap()), (15, 3, 3));
        let g = gen_r(5).unwrap();
        assert_eq!(metrics(&g), (24, 4, 4));
        assert_eq!(cut_edge_profile(&g).unwrap().component_orders, vec![2; 4]);
        assert!(gen_r(2).is_err());
    }

    #[test]
    fn s_family() {
        let g = gen_s(3).unwrap();
        assert_eq!(g.vertex_count(), 15);
        assert_eq!(g.edge_count(), 19);
        assert_eq!(g.min_degree().unwrap(), 2);
        assert_eq!(cut_edge_profile(&g).unwrap().component_orders, vec![3, 3]);
        let g = gen_s(4).unwrap();
        assert_eq!((g.vertex_count(), g.min_degree().unwrap()), (20, 3));
        assert!(gen_s(2).is_err());
    }

    #[test]
    fn d_family() {
        let g = gen_d(5).unwrap();
        assert_eq!(g.vertex_count(), 29);
        assert_eq!(count_cut_edges(&g).unwrap(), 4);
        assert_eq!(g.min_nonadjacent_degree_sum(), Some(10));
        let g = gen_d(6).unwrap();
        assert_eq!((g.vertex_count(), count_cut_edges(&g).unwrap()), (41, 5));
        assert!(gen_d(4).is_err());
    }

    #[test]
    fn sharpness_graphs() {
        let g = gen_triangle_ends_path(5).unwrap();
        assert_eq!(
            (g.vertex_count(), g.edge_count(), g.min_degree().unwrap()),
            (9, 10, 2)
        );
        assert!(gen_triangle_ends_path(4).is_err());

        let g = gen_five_clique_path(15).unwrap();
        assert_eq!((g.vertex_count(), g.min_degree().unwrap()), (15, 2));
        assert!(gen_five_clique_path(16).is_err());
        assert!(gen_five_clique_path(10).is_err());

        let g = gen_clique_star(16).unwrap();
        assert_eq!((g.vertex_count(), g.min_degree().unwrap()), (16, 3));
        assert!(!cut_edge_profile(&g).unwrap().is_linear_forest);
        assert!(gen_clique_star(10).is_err());

        let g = gen_uneven_clique_star().unwrap();
        assert_eq!((g.vertex_count(), g.min_degree().unwrap()), (15, 3));
        assert!(!cut_edge_profile(&g).unwrap().is_linear_forest);

        let g = gen_three_clique_path(32).unwrap();
        assert_eq!(g.vertex_count(), 32);
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.degree(2), 2);
        // min pair sum (n + 1) / 3 = 11 against (2n - 9) / 5 = 11
        assert_eq!(g.min_nonadjacent_degree_sum(), Some(11));
        let p = cut_edge_profile(&g).unwrap();
        assert_eq!(p.components[0].path, Some(vec![0, 1, 2, 3, 4]));
        assert!(gen_three_clique_path(33).is_err());
        assert!(gen_three_clique_path(30).is_err());
    }

    #[test]
    fn spec_parsing_round_trips() {
        for s in [
            "H 3 4",
            "R 3",
            "S 3",
            "D 5",
            "remark4-H 5",
            "remark6-G",
            "path 5",
            "complete 4",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert_eq!("S:3".parse::<FamilySpec>().unwrap(), FamilySpec::S { t: 3 });
        assert!("H 3".parse::<FamilySpec>().is_err());
        assert!("Q 3".parse::<FamilySpec>().is_err());
        assert!("path x".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(gen_s(4).unwrap(), gen_s(4).unwrap());
        let a = gen_random_connected(8, 0.5, &mut seeded_rng(42)).unwrap();
        let b = gen_random_connected(8, 0.5, &mut seeded_rng(42)).unwrap();
        assert_eq!(a, b);
        let a = gen_random_glued_blocks(30, &mut trial_rng(7, 3)).unwrap();
        let b = gen_random_glued_blocks(30, &mut trial_rng(7, 3)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn dense_random_is_complete() {
        let g = gen_random_connected(6, 1.0, &mut seeded_rng(1)).unwrap();
        assert_eq!(g, Graph::complete(6));
    }

    #[test]
    fn random_rejects_bad_params() {
        assert!(gen_random_connected(1, 0.5, &mut seeded_rng(1)).is_err());
        assert!(gen_random_connected(5, 0.0, &mut seeded_rng(1)).is_err());
        assert_eq!(
            gen_random_connected(40, 0.001, &mut seeded_rng(1)),
            Err(Error::RetriesExhausted(MAX_RETRIES))
        );
    }

    #[test]
    fn min_degree_filter_bounds_cut_edges() {
        // with 3 * delta >= n - 2 and n >= 9 there is at most one cut edge
        let mut accepted = 0;
        for i in 0..300 {
            let mut rng = trial_rng(11, i);
            let n = rng.gen_range(9..=14);
            let g = gen_random_connected(n, 0.35, &mut rng).unwrap();
            if 3 * g.min_degree().unwrap() + 2 >= n {
                accepted += 1;
                assert!(count_cut_edges(&g).unwrap() <= 1);
            }
        }
        assert!(accepted > 0);
    }

    #[test]
    fn glued_blocks_satisfy_construction_shape() {
        for i in 0..200 {
            let g = gen_random_glued_blocks(40, &mut trial_rng(5, i)).unwrap();
            assert!(g.vertex_count() <= 40);
            assert!(g.is_connected().unwrap());
            let p = cut_edge_profile(&g).unwrap();
            assert!(
                p.admits_two_coloring_construction(),
                "{:?}",
                p.component_orders
            );
        }
    }
}
