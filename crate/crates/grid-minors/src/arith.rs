//! Exact integer square-root bracketing, used by every closed-form
//! threshold so no formula ever goes through floating point.

/// Largest `c` with `c * c <= x`.
pub fn floor_sqrt(x: u64) -> u64 {
    if x == 0 {
        return 0;
    }
    // Start from the float estimate and correct it; f64 has enough
    // precision to land within one step of the truth for any u64.
    let mut c = (x as f64).sqrt() as u64;
    while c.checked_mul(c).is_none_or(|sq| sq > x) {
        c -= 1;
    }
    while (c + 1).checked_mul(c + 1).is_some_and(|sq| sq <= x) {
        c += 1;
    }
    c
}

/// Smallest `c` with `c * c >= x`.
pub fn ceil_sqrt(x: u64) -> u64 {
    if x == 0 {
        return 0;
    }
    let f = floor_sqrt(x);
    if f * f == x {
        f
    } else {
        f + 1
    }
}

/// Smallest `c >= 0` with `c * c * den >= num`, i.e. the ceiling of
/// `sqrt(num / den)` taken over the rationals.
pub fn ceil_sqrt_ratio(num: u64, den: u64) -> u64 {
    assert!(den > 0, "zero denominator");
    ceil_sqrt(num.div_ceil(den))
}

/// Largest `c >= 0` with `c * c * den <= num`, i.e. the floor of
/// `sqrt(num / den)` taken over the rationals.
pub fn floor_sqrt_ratio(num: u64, den: u64) -> u64 {
    assert!(den > 0, "zero denominator");
    floor_sqrt(num / den)
}

/// Greatest common divisor by Euclid's algorithm; `gcd(0, 0) = 0`.
pub fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
