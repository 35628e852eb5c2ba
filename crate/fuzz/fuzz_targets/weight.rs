#![no_main]
use libfuzzer_sys::fuzz_target;
use qrt::rootdata::RootDatum;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    for t in ["A1", "B2", "G2"] {
        let rd = RootDatum::of(t).unwrap();
        if let Ok(w) = rd.parse_weight(s) {
            assert_eq!(rd.parse_weight(&w.to_string()).unwrap(), w);
        }
    }
});
