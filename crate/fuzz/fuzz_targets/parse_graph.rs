#![no_main]

use libfuzzer_sys::fuzz_target;
use monosep::graph::parse_graph;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = parse_graph(text) {
        // accepted graphs survive a round trip
        assert_eq!(parse_graph(&g.to_edge_list()).unwrap(), g);
    }
});
