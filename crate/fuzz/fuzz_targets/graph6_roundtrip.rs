#![no_main]

use abfactor::graph::{emit_graph6, parse_graph6, Graph, GRAPH6_MAX_N};
use libfuzzer_sys::fuzz_target;

// First byte picks the order, the rest are adjacency bits in pair order.
fuzz_target!(|data: &[u8]| {
    let Some((&first, bits)) = data.split_first() else {
        return;
    };
    let n = first as usize % (GRAPH6_MAX_N + 1);
    let mut edges = Vec::new();
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits.get(i / 8).is_some_and(|b| b >> (i % 8) & 1 == 1) {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    let g = Graph::from_edges(n, edges).unwrap();
    let text = emit_graph6(&g).unwrap();
    assert_eq!(parse_graph6(&text).unwrap(), g);
});
