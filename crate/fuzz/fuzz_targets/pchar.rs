#![no_main]
use libfuzzer_sys::fuzz_target;
use qrt::charring::PChar;
use qrt::ring::LaurentPoly;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(f) = PChar::<LaurentPoly>::parse(s) {
        let back = PChar::<LaurentPoly>::parse(&f.to_string()).unwrap();
        if f.is_zero() {
            assert!(back.is_zero());
        } else {
            assert_eq!(back, f);
        }
    }
});
