//! Tietze script parser and replay: no panics on any accepted script.

#![no_main]

use fib_core::presentations::{verify_tietze_script, TietzeScript};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 8192 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(s) = TietzeScript::from_json(text) {
        if let (Some(start), Some(target)) = (&s.start, &s.target) {
            let _ = verify_tietze_script(start, &s, target);
        }
    }
});
