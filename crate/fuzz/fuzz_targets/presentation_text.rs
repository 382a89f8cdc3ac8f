//! Presentation text parser: no panics, and accepted input round-trips.

#![no_main]

use fib_core::presentations::Presentation;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = Presentation::parse_text(text) {
        let again = Presentation::parse_text(&p.to_text()).expect("printed presentation parses");
        assert_eq!(again, p);
    }
});
