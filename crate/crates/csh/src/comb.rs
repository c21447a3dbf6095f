//! Small exact-arithmetic helpers shared across modules.

use num_bigint::BigUint;
use num_traits::One;

pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// n! / (b_1! b_2! ... b_r!) for block sizes summing to n.
pub fn multinomial(blocks: &[u32]) -> BigUint {
    let n: u64 = blocks.iter().map(|&b| u64::from(b)).sum();
    let mut acc = factorial(n);
    for &b in blocks {
        acc /= factorial(u64::from(b));
    }
    acc
}
