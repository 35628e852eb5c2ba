#![no_main]
use libfuzzer_sys::fuzz_target;
use qrt::drinfeld::UWord;
use qrt::rootdata::RootDatum;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let rd = RootDatum::of("B2").unwrap();
    if let Ok(w) = UWord::parse_for(s, &rd) {
        assert_eq!(UWord::parse_for(&w.to_string(), &rd).unwrap(), w);
    }
});
