//! Quantum integers, factorials and binomials in `Z[q, q^-1]`.

use super::LaurentPoly;

/// `[n]_{q^d} = (q^{dn} - q^{-dn}) / (q^d - q^{-d})`.
///
/// Computed as the symmetric sum `q^{d(n-1)} + q^{d(n-3)} + ... + q^{-d(n-1)}`,
/// negated for negative `n`.
pub fn quantum_int(n: i64, d: u32) -> LaurentPoly {
    assert!(d > 0, "quantum_int requires d >= 1");
    let d = d as i64;
    let m = n.abs();
    let mut p = LaurentPoly::zero();
    for j in 0..m {
        p += &LaurentPoly::q_pow(d * (m - 1 - 2 * j));
    }
    if n < 0 {
        -p
    } else {
        p
    }
}

/// `[n]_{q^d}! = [1][2]...[n]`, with `[0]! = 1`.
pub fn quantum_factorial(n: u32, d: u32) -> LaurentPoly {
    (1..=n as i64).map(|m| quantum_int(m, d)).product()
}

/// Gaussian binomial `[n choose k]_{q^d}` (zero unless `0 <= k <= n`).
pub fn quantum_binomial(n: u32, k: u32, d: u32) -> LaurentPoly {
    if k > n {
        return LaurentPoly::zero();
    }
    let num = quantum_factorial(n, d);
    let den = &quantum_factorial(k, d) * &quantum_factorial(n - k, d);
    num.div_exact(&den)
        .expect("quantum binomial coefficients lie in Z[q, q^-1]")
}

/// `q^d - q^{-d}`
pub fn q_minus_qinv(d: u32) -> LaurentPoly {
    LaurentPoly::from_terms([(d as i64, 1), (-(d as i64), -1)])
}
