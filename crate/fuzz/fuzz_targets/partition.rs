#![no_main]
use libfuzzer_sys::fuzz_target;
use qrt::springer::{springer_total_cohomology_dim, Partition};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = s.parse::<Partition>() {
        assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
        let _ = springer_total_cohomology_dim(&p);
    }
});
