//! Statements that parse must round-trip through printing.
#![no_main]

use libfuzzer_sys::fuzz_target;
use syllogistic::parse_statement;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(s) = parse_statement(text) {
        assert_eq!(parse_statement(&s.to_string()).as_ref(), Ok(&s));
    }
});
