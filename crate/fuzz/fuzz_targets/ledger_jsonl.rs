//! Ledger parser and checker: no panics, and every parsed entry gets a
//! verdict.

#![no_main]

use fib_core::ledger::{check_str, parse_ledger};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 8192 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(report) = check_str(text) {
        let entries = parse_ledger(text).expect("checked ledger parses");
        assert_eq!(report.entries.len(), entries.len());
    }
});
