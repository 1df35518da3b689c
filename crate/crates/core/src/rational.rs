//! Exact rational arithmetic helpers.
//!
//! All core computations use [`Rational`], an arbitrary-precision fraction kept
//! in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::ParseRationalError;

/// Arbitrary-precision exact fraction.
pub type Rational = num_rational::BigRational;

/// Builds `n / d` from machine integers. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical text form: `p` when the denominator is one, `p/q` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `p/q` or a finite decimal literal such as `2.75` or `-0.5`.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    let bad = || ParseRationalError(s.to_string());
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    let all_digits = |t: &str| t.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(int_part) || !all_digits(frac_part) {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().map_err(|_| bad())?
    };
    let denom = num_traits::pow(BigInt::from(10u32), frac_part.len());
    let r = Rational::new(numer, denom);
    Ok(if neg { -r } else { r })
}

/// Lossy conversion for human-readable reports only.
pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Number of bisection steps used by the exact root bracketing helpers.
pub const BISECTION_STEPS: usize = 64;

/// Largest dyadic `g` found by bisection with `g^den <= x^num`, i.e. a rational
/// lower bound on `x^(num/den)` for `x >= 0`.
///
/// The returned value always satisfies the integer inequality exactly, so it can
/// be used inside certificates without any floating point.
pub fn pow_ratio_lower(x: &Rational, num: u32, den: u32) -> Rational {
    assert!(den > 0, "root degree must be positive");
    assert!(!x.is_negative(), "base must be non-negative");
    let target = num_traits::pow(x.clone(), num as usize);
    let fits = |g: &Rational| num_traits::pow(g.clone(), den as usize) <= target;
    let mut lo = Rational::zero();
    let mut hi = upper_seed(x, num, den);
    for _ in 0..BISECTION_STEPS {
        let mid = (&lo + &hi) / int(2);
        if fits(&mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Smallest dyadic `g` found by bisection with `g^den >= x^num`: a rational
/// upper bound on `x^(num/den)`.
pub fn pow_ratio_upper(x: &Rational, num: u32, den: u32) -> Rational {
    assert!(den > 0, "root degree must be positive");
    assert!(!x.is_negative(), "base must be non-negative");
    let target = num_traits::pow(x.clone(), num as usize);
    let covers = |g: &Rational| num_traits::pow(g.clone(), den as usize) >= target;
    let mut lo = Rational::zero();
    let mut hi = upper_seed(x, num, den);
    if covers(&lo) {
        return lo;
    }
    for _ in 0..BISECTION_STEPS {
        let mid = (&lo + &hi) / int(2);
        if covers(&mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

// max(1, x)^ceil(num/den) is at least x^(num/den).
fn upper_seed(x: &Rational, num: u32, den: u32) -> Rational {
    let base = if *x > Rational::one() {
        x.ceil()
    } else {
        Rational::one()
    };
    num_traits::pow(base, num.div_ceil(den) as usize)
}

/// `gcd`-normalised check used by tests: denominator positive and coprime.
pub fn is_normalized(r: &Rational) -> bool {
    r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
}
