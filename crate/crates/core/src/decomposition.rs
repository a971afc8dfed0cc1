//! Bridges, blocks, the block-cut tree, the cut-edge subgraph `C(G)` and a
//! matching that picks one edge from every nontrivial block.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{canonical, Edge, Graph};

/// A maximal connected subgraph without a cut vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    /// Sorted canonical edges.
    pub edges: Vec<Edge>,
    /// Sorted vertex set.
    pub vertices: Vec<usize>,
}

impl Block {
    /// A trivial block is a single edge, which is then a cut edge.
    pub fn is_trivial(&self) -> bool {
        self.edges.len() == 1
    }
}

/// Bipartite tree with block nodes and cut-vertex nodes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BlockCutTree {
    /// `(block index, cut vertex)` pairs, sorted.
    pub links: Vec<(usize, usize)>,
}

impl BlockCutTree {
    pub fn blocks_at(&self, cut_vertex: usize) -> impl Iterator<Item = usize> + '_ {
        self.links
            .iter()
            .filter(move |&&(_, c)| c == cut_vertex)
            .map(|&(b, _)| b)
    }

    pub fn cut_vertices_of(&self, block: usize) -> impl Iterator<Item = usize> + '_ {
        self.links
            .iter()
            .filter(move |&&(b, _)| b == block)
            .map(|&(_, c)| c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    /// Blocks ordered by their smallest edge.
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<usize>,
    pub cut_edges: Vec<Edge>,
    pub block_tree: BlockCutTree,
    /// Block index of every edge, by edge index.
    #[serde(skip)]
    pub block_of_edge: Vec<usize>,
}

impl BlockDecomposition {
    pub fn nontrivial_blocks(&self) -> impl Iterator<Item = (usize, &Block)> {
        self.blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| !b.is_trivial())
    }
}

struct LowLink {
    bridges: Vec<Edge>,
    blocks: Vec<Vec<Edge>>,
}

/// Iterative Hopcroft-Tarjan pass from vertex 0 collecting bridges and the
/// edge sets of biconnected components. Only the component of vertex 0 is
/// visited.
fn lowlink(g: &Graph) -> LowLink {
    const UNSEEN: usize = usize::MAX;
    let n = g.vertex_count();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut bridges = Vec::new();
    let mut blocks = Vec::new();
    if n == 0 {
        return LowLink { bridges, blocks };
    }

    let mut edge_stack: Vec<Edge> = Vec::new();
    // (vertex, parent, next neighbor position)
    let mut frames: Vec<(usize, usize, usize)> = vec![(0, UNSEEN, 0)];
    disc[0] = 0;
    low[0] = 0;
    let mut clock = 1;

    while let Some(frame) = frames.last_mut() {
        let (v, parent, pos) = *frame;
        if let Some(&w) = g.neighbors(v).get(pos) {
            frame.2 += 1;
            if w == parent {
                continue;
            }
            if disc[w] == UNSEEN {
                disc[w] = clock;
                low[w] = clock;
                clock += 1;
                edge_stack.push(canonical(v, w));
                frames.push((w, v, 0));
            } else if disc[w] < disc[v] {
                low[v] = low[v].min(disc[w]);
                edge_stack.push(canonical(v, w));
            }
            continue;
        }

        frames.pop();
        if parent == UNSEEN {
            continue;
        }
        low[parent] = low[parent].min(low[v]);
        if low[v] > disc[parent] {
            bridges.push(canonical(parent, v));
        }
        if low[v] >= disc[parent] {
            let tree_edge = canonical(parent, v);
            let mut block = Vec::new();
            while let Some(e) = edge_stack.pop() {
                block.push(e);
                if e == tree_edge {
                    break;
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
    }
    bridges.sort_unstable();
    LowLink { bridges, blocks }
}

/// Edges whose removal disconnects `g`, in canonical order.
pub fn find_cut_edges(g: &Graph) -> Result<Vec<Edge>> {
    g.require_connected()?;
    Ok(lowlink(g).bridges)
}

pub fn count_cut_edges(g: &Graph) -> Result<usize> {
    find_cut_edges(g).map(|e| e.len())
}

pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition> {
    g.require_connected()?;
    if g.vertex_count() == 1 {
        return Err(Error::TrivialGraph);
    }
    let LowLink { bridges, blocks } = lowlink(g);

    let mut blocks: Vec<Block> = blocks
        .into_iter()
        .map(|edges| {
            let vertices: BTreeSet<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
            Block {
                edges,
                vertices: vertices.into_iter().collect(),
            }
        })
        .collect();
    blocks.sort_by(|a, b| a.edges[0].cmp(&b.edges[0]));

    let mut block_of_edge = vec![usize::MAX; g.edge_count()];
    let mut membership: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, block) in blocks.iter().enumerate() {
        for &(u, v) in &block.edges {
            let idx = g.edge_index(u, v).expect("block edge belongs to graph");
            block_of_edge[idx] = i;
        }
        for &v in &block.vertices {
            membership.entry(v).or_default().push(i);
        }
    }

    let mut cut_vertices = Vec::new();
    let mut links = Vec::new();
    for (&v, owners) in &membership {
        if owners.len() >= 2 {
            cut_vertices.push(v);
            links.extend(owners.iter().map(|&b| (b, v)));
        }
    }
    links.sort_unstable();

    Ok(BlockDecomposition {
        blocks,
        cut_vertices,
        cut_edges: bridges,
        block_tree: BlockCutTree { links },
        block_of_edge,
    })
}

/// One connected component of `C(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutEdgeComponent {
    pub vertices: Vec<usize>,
    pub edges: Vec<Edge>,
    /// Vertex sequence when the component is a path, starting from its
    /// lowest-index endpoint.
    pub path: Option<Vec<usize>>,
}

impl CutEdgeComponent {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// Edges listed along the path, when the component is one.
    pub fn path_edges(&self) -> Option<Vec<Edge>> {
        self.path
            .as_ref()
            .map(|p| p.windows(2).map(|w| canonical(w[0], w[1])).collect())
    }
}

/// The subgraph induced by the cut edges, classified.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutEdgeProfile {
    pub cut_edges: Vec<Edge>,
    /// Sorted by order ascending, ties by smallest vertex.
    pub components: Vec<CutEdgeComponent>,
    pub is_linear_forest: bool,
    pub component_orders: Vec<usize>,
    pub max_component_edges: usize,
}

impl CutEdgeProfile {
    pub fn from_cut_edges(cut_edges: Vec<Edge>) -> Self {
        let mut adjacency: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(u, v) in &cut_edges {
            adjacency.entry(u).or_default().push(v);
            adjacency.entry(v).or_default().push(u);
        }
        let is_linear_forest = adjacency.values().all(|nbrs| nbrs.len() <= 2);

        let mut seen = BTreeSet::new();
        let mut components = Vec::new();
        for &start in adjacency.keys() {
            if !seen.insert(start) {
                continue;
            }
            let mut vertices = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &adjacency[&u] {
                    if seen.insert(w) {
                        vertices.push(w);
                        queue.push_back(w);
                    }
                }
            }
            vertices.sort_unstable();
            let mut edges: Vec<Edge> = cut_edges
                .iter()
                .copied()
                .filter(|(u, _)| vertices.binary_search(u).is_ok())
                .collect();
            edges.sort_unstable();

            // Cut edges never form a cycle, so max degree <= 2 means path.
            let is_path = vertices.iter().all(|v| adjacency[v].len() <= 2);
            let path = is_path.then(|| {
                let first = *vertices
                    .iter()
                    .find(|v| adjacency[v].len() <= 1)
                    .expect("a finite tree path has an endpoint");
                let mut walk = vec![first];
                let mut prev = usize::MAX;
                let mut cur = first;
                while let Some(&next) = adjacency[&cur].iter().find(|&&w| w != prev) {
                    walk.push(next);
                    prev = cur;
                    cur = next;
                }
                walk
            });
            components.push(CutEdgeComponent {
                vertices,
                edges,
                path,
            });
        }
        components.sort_by_key(|c| (c.order(), c.vertices[0]));

        let component_orders = components.iter().map(CutEdgeComponent::order).collect();
        let max_component_edges = components.iter().map(|c| c.edges.len()).max().unwrap_or(0);
        CutEdgeProfile {
            cut_edges,
            components,
            is_linear_forest,
            component_orders,
            max_component_edges,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.cut_edges.is_empty()
    }

    /// The component `Q_k` of largest order (last in sort order).
    pub fn largest(&self) -> Option<&CutEdgeComponent> {
        self.components.last()
    }

    /// Necessary shape for `cfc = 2`: a linear forest whose components have
    /// at most three edges each.
    pub fn has_two_color_shape(&self) -> bool {
        self.is_linear_forest && self.max_component_edges <= 3
    }

    /// Shape under which the explicit two-coloring applies: edgeless, or a
    /// linear forest whose components all have order 2 except possibly the
    /// largest, which has order at most 4.
    pub fn admits_two_coloring_construction(&self) -> bool {
        if !self.is_linear_forest {
            return false;
        }
        match self.component_orders.split_last() {
            None => true,
            Some((&last, rest)) => last <= 4 && rest.iter().all(|&o| o == 2),
        }
    }
}

pub fn cut_edge_profile(g: &Graph) -> Result<CutEdgeProfile> {
    find_cut_edges(g).map(CutEdgeProfile::from_cut_edges)
}

/// One edge from every nontrivial block, pairwise vertex-disjoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockMatching {
    /// `(block index, chosen edge)` in block order.
    pub chosen: Vec<(usize, Edge)>,
}

impl BlockMatching {
    pub fn edges(&self) -> Vec<Edge> {
        let mut edges: Vec<Edge> = self.chosen.iter().map(|&(_, e)| e).collect();
        edges.sort_unstable();
        edges
    }

    pub fn is_matching(&self) -> bool {
        let mut used = BTreeSet::new();
        self.chosen
            .iter()
            .all(|&(_, (u, v))| used.insert(u) && used.insert(v))
    }
}

/// Picks, from every nontrivial block, its lowest edge avoiding the cut
/// vertex through which the block hangs off the block-cut tree rooted at the
/// lowest cut vertex.
///
/// A cut vertex `c` has exactly one block on the root side; every other block
/// at `c` has `c` as its attachment and avoids it, so chosen edges never meet.
pub fn select_block_matching(d: &BlockDecomposition) -> BlockMatching {
    let mut attachment: Vec<Option<usize>> = vec![None; d.blocks.len()];
    if let Some(&root) = d.cut_vertices.first() {
        let mut block_seen = vec![false; d.blocks.len()];
        let mut cut_seen = BTreeSet::from([root]);
        let mut queue = VecDeque::from([root]);
        while let Some(c) = queue.pop_front() {
            for b in d.block_tree.blocks_at(c) {
                if block_seen[b] {
                    continue;
                }
                block_seen[b] = true;
                attachment[b] = Some(c);
                for next in d.block_tree.cut_vertices_of(b) {
                    if cut_seen.insert(next) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }

    let chosen = d
        .nontrivial_blocks()
        .map(|(i, block)| {
            let edge = block
                .edges
                .iter()
                .copied()
                .find(|&(u, v)| Some(u) != attachment[i] && Some(v) != attachment[i])
                .expect("a 2-connected block minus one vertex keeps an edge");
            (i, edge)
        })
        .collect();
    BlockMatching { chosen }
}
