//! Exact rational scalars.
//!
//! Every quantity in this crate is a [`Scalar`]: an arbitrary-precision
//! rational number kept in canonical reduced form (gcd 1, positive
//! denominator) by construction.  Arithmetic is exact; there is no rounding
//! anywhere in the kernel.

use alloc::vec::Vec;

pub use num_rational::BigRational;
pub use num_traits::{One, Signed, Zero};

use num_bigint::BigInt;

/// Exact rational scalar: arbitrary precision, always reduced, denominator
/// always positive.
pub type Scalar = BigRational;

/// The integer `n` as a scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// The fraction `n/d` as a scalar (reduced automatically).  Panics on `d = 0`.
pub fn ratio(n: i64, d: i64) -> Scalar {
    assert!(d != 0, "zero denominator");
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// `x` raised to a small non-negative integer power.
pub fn pow_u(x: &Scalar, n: u32) -> Scalar {
    let mut acc = Scalar::one();
    for _ in 0..n {
        acc *= x;
    }
    acc
}

/// Sum of a slice of scalars.
pub fn sum<'a, I: IntoIterator<Item = &'a Scalar>>(xs: I) -> Scalar {
    let mut acc = Scalar::zero();
    for x in xs {
        acc += x;
    }
    acc
}

/// The nearest double to an exact rational (the only lossy conversion in
/// the crate; used at output boundaries).
pub fn to_f64(x: &Scalar) -> f64 {
    num_traits::ToPrimitive::to_f64(x).expect("every rational rounds to a double")
}

/// The exact rational value of a finite double (`None` for NaN/infinite).
pub fn from_f64(x: f64) -> Option<Scalar> {
    Scalar::from_float(x)
}

/// A vector of zeros of the given length.
pub fn zeros(n: usize) -> Vec<Scalar> {
    alloc::vec![Scalar::zero(); n]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_is_reduced_with_positive_denominator() {
        let x = ratio(4, -6);
        assert_eq!(x, ratio(-2, 3));
        assert!(x.denom() > &BigInt::from(0));
    }

    #[test]
    fn display_is_p_over_q() {
        assert_eq!(alloc::format!("{}", ratio(-3, 4)), "-3/4");
        assert_eq!(alloc::format!("{}", int(7)), "7");
    }

    #[test]
    fn pow_u_small_cases() {
        assert_eq!(pow_u(&ratio(2, 3), 3), ratio(8, 27));
        assert_eq!(pow_u(&int(0), 0), int(1));
    }

    #[test]
    fn double_conversions_are_exact_where_possible() {
        assert_eq!(to_f64(&ratio(1, 4)), 0.25);
        assert_eq!(from_f64(0.375), Some(ratio(3, 8)));
        assert_eq!(from_f64(f64::NAN), None);
        // from_f64 is exact: the binary value of 0.1, not 1/10.
        assert_ne!(from_f64(0.1), Some(ratio(1, 10)));
        assert_eq!(to_f64(&from_f64(0.1).unwrap()), 0.1);
    }
}
