//! Simple undirected graphs on dense vertex indices `0..n`.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// An undirected edge in canonical form: smaller endpoint first.
pub type Edge = (usize, usize);

#[inline]
pub fn canonical(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Immutable simple undirected graph.
///
/// Edges are stored sorted in canonical order, so two graphs built from the
/// same edge set compare equal regardless of input order or duplication. The
/// position of an edge in [`Graph::edges`] is its *edge index*, which is what
/// colorings are keyed by.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new<I>(vertex_count: usize, edge_list: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut edges = Vec::new();
        for (u, v) in edge_list {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::InvalidVertex {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            edges.push(canonical(u, v));
        }
        edges.sort_unstable();
        edges.dedup();

        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            vertex_count,
            edges,
            adjacency,
        })
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph edges are valid")
    }

    pub fn path(order: usize) -> Self {
        Graph::new(order, (1..order).map(|v| (v - 1, v))).expect("path edges are valid")
    }

    pub fn cycle(order: usize) -> Self {
        let edges = (0..order).map(|v| (v, (v + 1) % order));
        Graph::new(order, edges).expect("cycle edges are valid")
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical sorted order.
    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbors of `v` in ascending order.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Position of edge `{u, v}` in canonical order.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&canonical(u, v)).ok()
    }

    pub fn is_connected(&self) -> Result<bool> {
        if self.vertex_count == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut seen = vec![false; self.vertex_count];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &w in self.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        Ok(reached == self.vertex_count)
    }

    /// Errors with [`Error::NotConnected`] unless the graph is connected.
    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected()? {
            Ok(())
        } else {
            Err(Error::NotConnected)
        }
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count;
        self.edges.len() == n * n.saturating_sub(1) / 2
    }

    pub fn degree_view(&self) -> Result<VertexDegreeView> {
        let degrees: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        let min_degree = *degrees.iter().min().ok_or(Error::EmptyGraph)?;
        Ok(VertexDegreeView {
            degrees,
            min_degree,
        })
    }

    /// Minimum degree, or an error for the empty graph.
    pub fn min_degree(&self) -> Result<usize> {
        self.degree_view().map(|view| view.min_degree)
    }

    /// Smallest `deg(x) + deg(y)` over non-adjacent pairs `x != y`; `None`
    /// when the graph is complete.
    pub fn min_nonadjacent_degree_sum(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for x in 0..self.vertex_count {
            let nbrs = self.neighbors(x);
            let mut next = nbrs.iter().peekable();
            for y in x + 1..self.vertex_count {
                while next.next_if(|&&w| w < y).is_some() {}
                if next.next_if_eq(&&y).is_some() {
                    continue;
                }
                let sum = self.degree(x) + self.degree(y);
                best = Some(best.map_or(sum, |b| b.min(sum)));
            }
        }
        best
    }
}

/// Per-vertex degrees together with the minimum degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexDegreeView {
    pub degrees: Vec<usize>,
    pub min_degree: usize,
}
