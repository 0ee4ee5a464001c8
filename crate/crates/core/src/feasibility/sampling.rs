//! Halton points with exact rational coordinates.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::rational::Rational;

const PRIMES: [u64; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

/// Van der Corput radical inverse of `index` in `base`, in `[0, 1)`.
pub fn radical_inverse(mut index: u64, base: u64) -> Rational {
    let mut num: u64 = 0;
    let mut den: u64 = 1;
    while index > 0 {
        num = num * base + index % base;
        den *= base;
        index /= base;
    }
    Rational::new(num.into(), den.into())
}

/// The `index`-th Halton point in `(0,1)^dim` (index 0 is skipped as it is
/// the origin). Dimensions beyond the built-in prime table reuse primes with
/// a shifted index.
pub fn halton_point(index: u64, dim: usize) -> Vec<Rational> {
    (0..dim)
        .map(|d| {
            let base = PRIMES[d % PRIMES.len()];
            let shift = (d / PRIMES.len()) as u64 * 7919;
            radical_inverse(index + 1 + shift, base)
        })
        .collect()
}

/// `count` consecutive Halton points scaled by `scale`.
pub fn halton(count: usize, dim: usize, scale: &Rational) -> Vec<Vec<Rational>> {
    (0..count as u64)
        .map(|i| halton_point(i, dim).into_iter().map(|x| x * scale).collect())
        .collect()
}

/// `1 / 2^j`.
pub(crate) fn dyadic(j: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use num_traits::{Signed, Zero};

    #[test]
    fn first_terms() {
        assert_eq!(radical_inverse(1, 2), ratio(1, 2));
        assert_eq!(radical_inverse(2, 2), ratio(1, 4));
        assert_eq!(radical_inverse(3, 2), ratio(3, 4));
        assert_eq!(radical_inverse(1, 3), ratio(1, 3));
        assert_eq!(radical_inverse(4, 3), ratio(4, 9));
    }

    #[test]
    fn points_are_interior() {
        for p in halton(200, 20, &int(1)) {
            assert!(p.iter().all(|x| x.is_positive() && *x < int(1)));
        }
        assert!(!halton_point(0, 3).iter().any(Zero::is_zero));
        assert_eq!(dyadic(3), ratio(1, 8));
    }
}
