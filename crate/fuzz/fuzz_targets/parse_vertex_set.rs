#![no_main]

use libfuzzer_sys::fuzz_target;
use monosep::graph::VertexSet;

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    if let Ok(set) = VertexSet::parse_ids(text, n as usize) {
        let ids: Vec<String> = set.iter().map(|v| v.to_string()).collect();
        assert_eq!(VertexSet::parse_ids(&ids.join(","), n as usize).unwrap(), set);
    }
});
