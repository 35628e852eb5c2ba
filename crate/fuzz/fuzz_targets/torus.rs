#![no_main]
use libfuzzer_sys::fuzz_target;
use qrt::charring::TorusPoint;
use qrt::ring::{parse_laurent_in, CycCtx, CycScalar};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let ctx = CycCtx::level(12);
    let vals: Result<Vec<_>, _> = s
        .split(',')
        .map(|p| parse_laurent_in(p.trim(), "x").map(|l| CycScalar::from_generator_poly(ctx, &l)))
        .collect();
    if let Ok(vals) = vals {
        if let Ok(t) = TorusPoint::new(&ctx, vals) {
            let _ = t.pow(12);
        }
    }
});
