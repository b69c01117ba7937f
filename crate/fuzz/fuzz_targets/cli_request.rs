#![no_main]

use libfuzzer_sys::fuzz_target;
use wrapsurg_cli::{batch, execute};

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    let one = execute(src.split_whitespace());
    assert!([0, 2, 3].contains(&one.code));
    let many = batch(src);
    assert!([0, 2, 3].contains(&many.code));
});
