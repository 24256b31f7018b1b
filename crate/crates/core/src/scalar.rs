//! Exact rational scalars.
//!
//! Every numeric value in this crate is a [`Scalar`]: an arbitrary-precision
//! rational kept reduced with a positive denominator. There is no floating
//! point anywhere; equality of results is always exact equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

/// Scalar from a machine integer.
pub fn sc(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Scalar from a numerator/denominator pair.
pub fn sc_frac(num: i64, den: i64) -> Scalar {
    assert!(den != 0, "zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parse a rational literal `p`, `-p`, or `p/q`.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let s = text.trim();
    let err = |msg: &str| Error::InvalidInput(format!("bad rational {s:?}: {msg}"));
    let (num_str, den_str) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), Some(b.trim())),
        None => (s, None),
    };
    let num: BigInt = num_str
        .parse()
        .map_err(|_| err("numerator is not an integer"))?;
    let den: BigInt = match den_str {
        Some(d) => d
            .parse()
            .map_err(|_| err("denominator is not an integer"))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

/// Canonical `p/q` string (omits `/q` when q = 1). Inverse of [`parse_scalar`].
pub fn scalar_string(x: &Scalar) -> String {
    x.to_string()
}

/// Integer power with signed exponent; `base^0 = 1`, negative exponents invert.
pub fn scalar_pow(base: &Scalar, exp: i64) -> Scalar {
    if exp >= 0 {
        num_traits::pow::pow(base.clone(), exp as usize)
    } else {
        assert!(!base.is_zero(), "zero base with negative exponent");
        num_traits::pow::pow(base.recip(), (-exp) as usize)
    }
}

/// Binomial coefficient C(n, k) as a scalar; 0 when k > n.
pub fn binomial(n: usize, k: usize) -> Scalar {
    if k > n {
        return Scalar::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    BigRational::from_integer(acc)
}

/// (-1)^k as a scalar.
pub fn neg_one_pow(k: usize) -> Scalar {
    if k.is_multiple_of(2) {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

/// True when the scalar is a nonnegative integer.
pub fn is_nonneg_integer(x: &Scalar) -> bool {
    x.is_integer() && !x.is_negative()
}
