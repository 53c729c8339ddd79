//! Exact rational arithmetic helpers.

use alloc::string::String;
use alloc::string::ToString;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// The rational type used for every charge, coordinate and constant.
pub type Q = num_rational::BigRational;

/// Rational from an integer pair.
pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn qi(num: i64) -> Q {
    Q::from_integer(BigInt::from(num))
}

pub fn is_zero(x: &Q) -> bool {
    x.is_zero()
}

pub fn is_negative(x: &Q) -> bool {
    x.is_negative()
}

/// Renders `x` as `num/den` in lowest terms (`num` alone for integers).
pub fn display(x: &Q) -> String {
    if x.denom() == &BigInt::from(1) {
        x.numer().to_string()
    } else {
        let mut s = x.numer().to_string();
        s.push('/');
        s.push_str(&x.denom().to_string());
        s
    }
}

/// Parses `p`, `p/q` or `-p/q`.
pub fn parse(s: &str) -> Option<Q> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Q::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(Q::from_integer(n))
    }
}

/// Decimal expansion with `digits` fractional digits, truncated toward zero.
/// Used only for reports; never for decisions.
pub fn decimal(x: &Q, digits: u32) -> String {
    let neg = x.is_negative();
    let abs = x.abs();
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = (abs * Q::from_integer(scale.clone())).trunc();
    let v = scaled.numer().clone();
    let ipart = &v / &scale;
    let fpart = &v % &scale;
    let mut frac = fpart.to_string();
    while (frac.len() as u32) < digits {
        frac.insert(0, '0');
    }
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        alloc::format!("{sign}{ipart}")
    } else {
        alloc::format!("{sign}{ipart}.{frac}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        let x = parse("49/170").unwrap();
        assert_eq!(x, q(49, 170));
        assert_eq!(display(&x), "49/170");
        assert_eq!(display(&qi(-3)), "-3");
        assert_eq!(parse("14/-4").unwrap(), q(-7, 2));
        assert!(parse("1/0").is_none());
    }

    #[test]
    fn decimal_truncates() {
        assert_eq!(decimal(&q(1, 3), 4), "0.3333");
        assert_eq!(decimal(&q(-1, 2), 2), "-0.50");
        assert_eq!(decimal(&qi(7), 0), "7");
    }
}
