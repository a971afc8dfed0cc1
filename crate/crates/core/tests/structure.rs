use cfc_core::families::{
    gen_random_clique_tree, gen_random_connected, gen_random_glued_blocks, seeded_rng,
};
use cfc_core::{
    block_decomposition, cut_edge_profile, find_cut_edges, select_block_matching, Graph,
};
use proptest::prelude::*;

/// Is `g` still connected after deleting edge `idx`?
fn connected_without(g: &Graph, idx: usize) -> bool {
    let kept = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != idx)
        .map(|(_, &e)| e);
    Graph::new(g.vertex_count(), kept)
        .unwrap()
        .is_connected()
        .unwrap()
}

fn random_graph(seed: u64, n: usize, kind: u8) -> Graph {
    let mut rng = seeded_rng(seed);
    match kind {
        0 => gen_random_connected(n, 0.25, &mut rng).unwrap(),
        1 => gen_random_glued_blocks(n.max(4), &mut rng).unwrap(),
        _ => gen_random_clique_tree(n, &mut rng).unwrap(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn cut_edges_match_deletion_oracle(seed in any::<u64>(), n in 2usize..16, kind in 0u8..3) {
        let g = random_graph(seed, n, kind);
        let bridges = find_cut_edges(&g).unwrap();
        let expected: Vec<_> = (0..g.edge_count())
            .filter(|&i| !connected_without(&g, i))
            .map(|i| g.edges()[i])
            .collect();
        prop_assert_eq!(bridges, expected);
    }

    #[test]
    fn blocks_partition_edges(seed in any::<u64>(), n in 2usize..16, kind in 0u8..3) {
        let g = random_graph(seed, n, kind);
        let d = block_decomposition(&g).unwrap();
        let mut all: Vec<_> = d.blocks.iter().flat_map(|b| b.edges.iter().copied()).collect();
        all.sort_unstable();
        prop_assert_eq!(&all[..], g.edges());
        // a connected graph's block-cut tree has (#blocks + #cut vertices - 1) links
        prop_assert_eq!(d.block_tree.links.len(), d.blocks.len() + d.cut_vertices.len() - 1);
        // trivial blocks are exactly the cut edges
        let mut trivial: Vec<_> = d.blocks.iter().filter(|b| b.is_trivial()).map(|b| b.edges[0]).collect();
        trivial.sort_unstable();
        prop_assert_eq!(trivial, d.cut_edges.clone());
        // cut vertices are exactly the vertices whose removal disconnects
        for v in 0..g.vertex_count() {
            let kept = g.edges().iter().copied().filter(|&(a, b)| a != v && b != v);
            let rest = Graph::new(g.vertex_count(), kept).unwrap();
            let others: Vec<usize> = (0..g.vertex_count()).filter(|&x| x != v).collect();
            let splits = others.iter().any(|&x| {
                !reachable(&rest, others[0]).contains(&x)
            });
            prop_assert_eq!(d.cut_vertices.contains(&v), splits, "vertex {}", v);
        }
    }

    #[test]
    fn block_matching_is_a_matching(seed in any::<u64>(), n in 4usize..30) {
        let g = random_graph(seed, n, 1);
        let d = block_decomposition(&g).unwrap();
        let matching = select_block_matching(&d);
        prop_assert!(matching.is_matching());
        prop_assert_eq!(matching.chosen.len(), d.nontrivial_blocks().count());
        for (block, edge) in &matching.chosen {
            prop_assert!(d.blocks[*block].edges.contains(edge));
        }
    }

    #[test]
    fn profile_components_cover_cut_edges(seed in any::<u64>(), n in 2usize..20, kind in 0u8..3) {
        let g = random_graph(seed, n, kind);
        let profile = cut_edge_profile(&g).unwrap();
        let total: usize = profile.components.iter().map(|c| c.edges.len()).sum();
        prop_assert_eq!(total, profile.cut_edges.len());
        let mut orders = profile.component_orders.clone();
        orders.sort_unstable();
        prop_assert_eq!(&orders, &profile.component_orders);
        for c in &profile.components {
            // components of a forest: one fewer edge than vertices
            prop_assert_eq!(c.edges.len() + 1, c.order());
            if profile.is_linear_forest {
                let path = c.path.as_ref().unwrap();
                prop_assert_eq!(path.len(), c.order());
                prop_assert_eq!(c.path_edges().unwrap().len(), c.edges.len());
            }
        }
    }
}

fn reachable(g: &Graph, start: usize) -> Vec<usize> {
    let mut seen = vec![false; g.vertex_count()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(x) = stack.pop() {
        for &y in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    (0..g.vertex_count()).filter(|&v| seen[v]).collect()
}

#[test]
fn glued_blocks_stay_within_bound() {
    for seed in 0..300 {
        let mut rng = seeded_rng(seed);
        let g = gen_random_glued_blocks(8, &mut rng).unwrap();
        assert!(
            g.vertex_count() <= 8,
            "seed {seed}: {} vertices",
            g.vertex_count()
        );
        assert!(g.is_connected().unwrap());
    }
}
