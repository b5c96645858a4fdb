#![no_main]

use abfactor::graph::{emit_graph6, parse_graph6, parse_graph6_bytes};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = parse_graph6_bytes(data) {
        let text = emit_graph6(&g).unwrap();
        assert_eq!(parse_graph6(&text).unwrap(), g);
    }
});
