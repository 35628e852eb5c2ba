#![no_main]
use libfuzzer_sys::fuzz_target;
use qrt::ring::parse_multi;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(p) = parse_multi(s, 3) {
            assert_eq!(parse_multi(&p.to_string(), 3).unwrap(), p);
        }
    }
});
