//! Integer and rational helpers: exact roots, power enclosures, dyadic bounds.
//!
//! Everything here is exact unless the name says otherwise. Enclosure
//! functions return closed rational intervals `[lo, hi]` that are guaranteed
//! to contain the true real value.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `⌊√n⌋` for `n ≥ 0`.
pub fn isqrt(n: &BigInt) -> BigInt {
    debug_assert!(!n.is_negative());
    n.sqrt()
}

pub fn is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact `x^e` for a rational base and (possibly negative) integer exponent.
pub fn pow_rat(x: &BigRational, e: i64) -> BigRational {
    // num-rational's Pow takes i32; stay within that when delegating.
    let mag = e.unsigned_abs() as u32;
    let num = x.numer().pow(mag);
    let den = x.denom().pow(mag);
    if e >= 0 {
        BigRational::new(num, den)
    } else {
        BigRational::new(den, num)
    }
}

/// `⌊x^(1/b)⌋` for rational `x ≥ 0` and `b ≥ 1`.
pub fn nth_root_floor_rat(x: &BigRational, b: u32) -> BigInt {
    assert!(b >= 1 && !x.is_negative());
    let mut r = x.floor().to_integer().nth_root(b);
    // floor(x) <= x can make the integer root undershoot; fix upward.
    loop {
        let next = &r + 1u32;
        if BigRational::from_integer(next.pow(b)) <= *x {
            r = next;
        } else {
            return r;
        }
    }
}

/// `⌈x^(1/b)⌉` for rational `x ≥ 0`.
pub fn nth_root_ceil_rat(x: &BigRational, b: u32) -> BigInt {
    let f = nth_root_floor_rat(x, b);
    if BigRational::from_integer(f.pow(b)) == *x {
        f
    } else {
        f + 1u32
    }
}

/// Exact `⌊x^(a/b)⌋` for rational `x ≥ 0`, integer `a ≥ 0`, `b ≥ 1`.
pub fn rational_pow_floor(x: &BigRational, a: u32, b: u32) -> BigInt {
    nth_root_floor_rat(&pow_rat(x, a as i64), b)
}

/// Exact `⌈x^(a/b)⌉` for rational `x ≥ 0`, integer `a ≥ 0`, `b ≥ 1`.
pub fn rational_pow_ceil(x: &BigRational, a: u32, b: u32) -> BigInt {
    nth_root_ceil_rat(&pow_rat(x, a as i64), b)
}

/// Certified enclosure of `x^(a/b)` for rational `x > 0` (or `x = 0` with
/// `a > 0`). The returned dyadic interval has width at most `2^-prec`
/// relative to the root's integer part scale.
pub fn rational_pow_enclosure(
    x: &BigRational,
    a: i64,
    b: u32,
    prec: u32,
) -> (BigRational, BigRational) {
    assert!(b >= 1 && !x.is_negative());
    if a == 0 {
        return (BigRational::one(), BigRational::one());
    }
    if x.is_zero() {
        assert!(a > 0, "0 raised to a negative power");
        return (BigRational::zero(), BigRational::zero());
    }
    let y = pow_rat(x, a.abs());
    let (lo, hi) = nth_root_enclosure(&y, b, prec);
    if a >= 0 {
        (lo, hi)
    } else {
        (hi.recip(), lo.recip())
    }
}

/// Certified enclosure of `y^(1/b)` for rational `y > 0`.
pub fn nth_root_enclosure(y: &BigRational, b: u32, prec: u32) -> (BigRational, BigRational) {
    assert!(y.is_positive());
    let scale = BigInt::one() << prec;
    let scaled = y * BigRational::from_integer(scale.pow(b));
    let k = scaled.floor().to_integer();
    let r = k.nth_root(b);
    (
        BigRational::new(r.clone(), scale.clone()),
        BigRational::new(r + 1u32, scale),
    )
}

/// Enclosure of `x^e` for a rational exponent given as `BigRational`.
/// The exponent denominator must fit in `u32`.
pub fn pow_enclosure(x: &BigRational, e: &BigRational, prec: u32) -> (BigRational, BigRational) {
    let a = e
        .numer()
        .to_i64()
        .expect("exponent numerator out of range");
    let b = e
        .denom()
        .to_u32()
        .expect("exponent denominator out of range");
    if b == 1 {
        let v = pow_rat(x, a);
        return (v.clone(), v);
    }
    rational_pow_enclosure(x, a, b, prec)
}

/// Exact `x^e` when the rational exponent happens to be an integer.
pub fn pow_exact_if_integer(x: &BigRational, e: &BigRational) -> Option<BigRational> {
    if e.denom().is_one() {
        let a = e.numer().to_i64()?;
        Some(pow_rat(x, a))
    } else {
        None
    }
}

/// Compare `lhs^le` with `rhs^re` exactly (both bases non-negative).
pub fn cmp_pow(lhs: &BigRational, le: u32, rhs: &BigRational, re: u32) -> std::cmp::Ordering {
    pow_rat(lhs, le as i64).cmp(&pow_rat(rhs, re as i64))
}

/// Fractional part of `x`, reduced into `[0, 1)`.
pub fn frac_mod1(x: &BigRational) -> BigRational {
    x - x.floor()
}

/// Convert to `f64`, saturating rather than panicking.
pub fn rat_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Exact rational value of an `f64` (every finite float is dyadic).
pub fn rat_from_f64(x: f64) -> Option<BigRational> {
    BigRational::from_float(x)
}

/// Natural log of a positive big integer as `f64`, usable far beyond the
/// `f64` overflow range.
pub fn ln_big(n: &BigInt) -> f64 {
    assert!(n.is_positive());
    let bits = n.bits();
    if bits <= 52 {
        return n.to_f64().unwrap().ln();
    }
    let shift = bits - 52;
    let top = (n >> shift).to_f64().unwrap();
    top.ln() + (shift as f64) * std::f64::consts::LN_2
}
