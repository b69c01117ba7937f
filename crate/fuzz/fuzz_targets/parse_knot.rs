#![no_main]

use libfuzzer_sys::fuzz_target;
use wrapsurg::classify::{classify, exceptional_slopes};
use wrapsurg::parse::parse_knot;
use wrapsurg::Slope;

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    if let Ok(k) = parse_knot(src) {
        assert_eq!(parse_knot(&k.to_string()).unwrap(), k);
        for (r, c) in exceptional_slopes(&k) {
            assert!(r.is_integral());
            assert_eq!(classify(&k, &r), c);
        }
        let _ = classify(&k, &Slope::integer(0));
    }
});
