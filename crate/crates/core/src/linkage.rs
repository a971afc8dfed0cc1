//! Polynomial conflict-free connectivity check.
//!
//! A pair `u, v` has a path on which color `c` occurs exactly once, on edge
//! `ab`, iff the graph without its `c`-colored edges has two vertex-disjoint
//! paths linking `{u, v}` to `{a, b}` (either pairing works, since `ab` is
//! undirected). That is a unit vertex-capacity max-flow of value 2.

use std::collections::{BTreeMap, VecDeque};

use crate::coloring::{dense_colors, CfcVerdict, EdgeColoring};
use crate::error::Result;
use crate::graph::Graph;

#[derive(Clone, Copy)]
struct Arc {
    to: usize,
    cap: u8,
    rev: usize,
    forward: bool,
}

/// Split-vertex flow network over one color's complement.
struct Network {
    arcs: Vec<Vec<Arc>>,
    base_len: Vec<usize>,
    source: usize,
    sink: usize,
}

impl Network {
    /// Vertex `x` is split into `2x` (in) and `2x + 1` (out).
    fn without_color(g: &Graph, colors: &[usize], color: usize) -> Self {
        let n = g.vertex_count();
        let mut net = Network {
            arcs: vec![Vec::new(); 2 * n + 2],
            base_len: Vec::new(),
            source: 2 * n,
            sink: 2 * n + 1,
        };
        for x in 0..n {
            net.add(2 * x, 2 * x + 1);
        }
        for (idx, &(x, y)) in g.edges().iter().enumerate() {
            if colors[idx] != color {
                net.add(2 * x + 1, 2 * y);
                net.add(2 * y + 1, 2 * x);
            }
        }
        net.base_len = net.arcs.iter().map(Vec::len).collect();
        net
    }

    fn add(&mut self, from: usize, to: usize) {
        let rev_from = self.arcs[to].len();
        let rev_to = self.arcs[from].len();
        self.arcs[from].push(Arc {
            to,
            cap: 1,
            rev: rev_from,
            forward: true,
        });
        self.arcs[to].push(Arc {
            to: from,
            cap: 0,
            rev: rev_to,
            forward: false,
        });
    }

    /// Drops terminal arcs and restores all capacities.
    fn reset(&mut self) {
        for (list, &len) in self.arcs.iter_mut().zip(&self.base_len) {
            list.truncate(len);
            for arc in list.iter_mut() {
                arc.cap = u8::from(arc.forward);
            }
        }
    }

    fn augment(&mut self) -> bool {
        let nodes = self.arcs.len();
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; nodes];
        let mut queue = VecDeque::from([self.source]);
        parent[self.source] = Some((self.source, usize::MAX));
        while let Some(x) = queue.pop_front() {
            if x == self.sink {
                break;
            }
            for (i, arc) in self.arcs[x].iter().enumerate() {
                if arc.cap > 0 && parent[arc.to].is_none() {
                    parent[arc.to] = Some((x, i));
                    queue.push_back(arc.to);
                }
            }
        }
        if parent[self.sink].is_none() {
            return false;
        }
        let mut node = self.sink;
        while node != self.source {
            let (prev, i) = parent[node].expect("on augmenting path");
            let rev = self.arcs[prev][i].rev;
            self.arcs[prev][i].cap -= 1;
            self.arcs[node][rev].cap += 1;
            node = prev;
        }
        true
    }

    /// Follows saturated forward arcs from `in(start)` to the sink.
    fn trace(&self, start: usize) -> Vec<usize> {
        let mut path = vec![start];
        let mut node = 2 * start;
        loop {
            let next = self.arcs[node]
                .iter()
                .find(|arc| arc.forward && arc.cap == 0)
                .map(|arc| arc.to)
                .expect("flow continues to the sink");
            if next == self.sink {
                return path;
            }
            if node % 2 == 1 {
                path.push(next / 2);
            }
            node = next;
        }
    }

    /// Two disjoint paths from `{u, v}` to `{a, b}`, joined through `ab`
    /// into one `u`-`v` path.
    fn link(&mut self, u: usize, v: usize, a: usize, b: usize) -> Option<Vec<usize>> {
        self.reset();
        let (s, t) = (self.source, self.sink);
        self.add(s, 2 * u);
        self.add(s, 2 * v);
        self.add(2 * a + 1, t);
        self.add(2 * b + 1, t);
        if !(self.augment() && self.augment()) {
            return None;
        }
        let mut from_u = self.trace(u);
        let mut from_v = self.trace(v);
        from_v.reverse();
        from_u.append(&mut from_v);
        Some(from_u)
    }
}

/// Same contract as [`crate::coloring::verify_conflict_free_connected`], in
/// `O(n^2 m^2)` time. Witness paths may differ from the enumerating verifier.
pub fn verify_conflict_free_connected_linkage(coloring: &EdgeColoring<'_>) -> Result<CfcVerdict> {
    let g = coloring.graph();
    g.require_connected()?;
    let n = g.vertex_count();
    let (colors, palette) = dense_colors(coloring.colors());
    let mut networks: Vec<Network> = (0..palette)
        .map(|c| Network::without_color(g, &colors, c))
        .collect();

    let mut witness_paths = BTreeMap::new();
    for u in 0..n {
        'pairs: for v in u + 1..n {
            if g.has_edge(u, v) {
                witness_paths.insert((u, v), vec![u, v]);
                continue;
            }
            for (idx, &(a, b)) in g.edges().iter().enumerate() {
                if let Some(path) = networks[colors[idx]].link(u, v, a, b) {
                    witness_paths.insert((u, v), path);
                    continue 'pairs;
                }
            }
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
