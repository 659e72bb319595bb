//! Arbitrary-precision rationals used by the exact oracles.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

pub type Rational = num_rational::BigRational;

/// `num / den` as an exact rational. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(x: i64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().expect("rational fits in f64")
}

/// `p/q` rendering, or just `p` for integers.
pub fn display(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `χ/(χ−1)`, the chromatic lower bound on `λ_max`.
pub fn chi_ratio(chi: usize) -> Rational {
    rat(chi as i64, chi as i64 - 1)
}
