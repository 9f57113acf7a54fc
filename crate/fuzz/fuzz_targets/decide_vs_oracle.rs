#![no_main]

//! Byte 0 picks n in 2..=10, the next bytes give the upper-triangle adjacency
//! bits, and one label byte per vertex puts it in A (0), B (1) or neither.

use libfuzzer_sys::fuzz_target;
use monosep::graph::{Graph, VertexSet};
use monosep::separation::{decide, separable_oracle, verify_witness};

fuzz_target!(|data: &[u8]| {
    let Some((&head, rest)) = data.split_first() else {
        return;
    };
    let n = 2 + head as usize % 9;
    let pairs = n * (n - 1) / 2;
    let adj_bytes = pairs.div_ceil(8);
    if rest.len() < adj_bytes + n {
        return;
    }
    let (adj, labels) = rest.split_at(adj_bytes);
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if adj[k / 8] >> (k % 8) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    let g = Graph::from_edges(n, edges).unwrap();
    let a = VertexSet::from_ids(n, (0..n).filter(|&v| labels[v] % 3 == 0));
    let b = VertexSet::from_ids(n, (0..n).filter(|&v| labels[v] % 3 == 1));
    if a.is_empty() || b.is_empty() {
        return;
    }
    let result = decide(&g, &a, &b).unwrap();
    let truth = separable_oracle(&g, &a, &b).unwrap();
    assert_eq!(result.separable, truth.is_some());
    if let Some(h) = &result.witness {
        assert!(verify_witness(&g, &a, &b, h));
    }
});
