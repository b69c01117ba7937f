#![no_main]

use libfuzzer_sys::fuzz_target;
use wrapsurg::dbc_montesinos;
use wrapsurg::parse::parse_link;

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    if let Ok(link) = parse_link(src) {
        let _ = dbc_montesinos(&link);
    }
});
