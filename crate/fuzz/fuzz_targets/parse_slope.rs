#![no_main]

use libfuzzer_sys::fuzz_target;
use wrapsurg::parse::parse_slope;

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    if let Ok(s) = parse_slope(src) {
        assert_eq!(parse_slope(&s.to_string()).unwrap(), s);
    }
});
