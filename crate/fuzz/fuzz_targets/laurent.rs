#![no_main]
use libfuzzer_sys::fuzz_target;
use qrt::ring::parse_laurent;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(p) = parse_laurent(s) {
            assert_eq!(parse_laurent(&p.to_string()).unwrap(), p);
        }
    }
});
