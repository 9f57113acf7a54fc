#![no_main]

use libfuzzer_sys::fuzz_target;
use monosep::convexity::parse_hypergraph;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(h) = parse_hypergraph(text) {
        assert!(!h.edges().is_empty());
        assert_eq!(parse_hypergraph(&h.to_text()).unwrap(), h);
    }
});
