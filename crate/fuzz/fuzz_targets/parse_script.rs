//! Scripts that parse must reprint identically and never panic the kernel.
#![no_main]

use libfuzzer_sys::fuzz_target;
use syllogistic::kernel::check_proof;
use syllogistic::script::{effective_system, parse_script, print_script};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(proof) = parse_script(text) else { return };
    assert_eq!(parse_script(&print_script(&proof, None)).as_ref(), Ok(&proof));
    if let Ok(system) = effective_system(&proof) {
        let _ = check_proof(&proof, &system);
    }
});
