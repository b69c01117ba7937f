#![no_main]

use libfuzzer_sys::fuzz_target;
use wrapsurg::parse::parse_tangle;
use wrapsurg::tangles::{apply_moves, normalize};

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    if let Ok(t) = parse_tangle(src) {
        assert_eq!(parse_tangle(&t.to_string()).unwrap(), t);
        let nf = normalize(&t);
        assert_eq!(apply_moves(&t, &nf.moves), Some(nf.representative));
    }
});
