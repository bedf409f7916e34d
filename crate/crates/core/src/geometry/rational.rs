//! Exact rational scalars and their `p/q` text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn zero() -> Q {
    Q::zero()
}

pub fn one() -> Q {
    Q::one()
}

/// `1/n`.
pub fn recip(n: usize) -> Q {
    q(1, n as i64)
}

/// `1/(n + 1/2) = 2/(2n + 1)`.
pub fn half_recip(n: usize) -> Q {
    q(2, 2 * n as i64 + 1)
}

pub fn in_unit_interval(x: &Q) -> bool {
    *x >= Q::zero() && *x <= Q::one()
}

/// Lowest-terms `p/q`, always with an explicit denominator.
pub fn format_q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Accepts `p/q` or an integer; the result is reduced.
pub fn parse_q(text: &str) -> Option<Q> {
    let text = text.trim();
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (text.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if d.is_zero() {
        return None;
    }
    Some(Q::new(n, d))
}

/// Decimal rendering rounded half away from zero to `digits` places, using
/// integer arithmetic only.
pub fn format_decimal(x: &Q, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = x * Q::from_integer(scale.clone());
    let (n, d) = (scaled.numer().clone(), scaled.denom().clone());
    let negative = n < BigInt::zero();
    let n = if negative { -n } else { n };
    let rounded: BigInt = (n * 2 + &d) / (d * 2);
    let int_part = &rounded / &scale;
    let frac_part = &rounded % &scale;
    let sign = if negative && !rounded.is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = digits as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_forms() {
        assert_eq!(format_q(&q(2, 4)), "1/2");
        assert_eq!(format_q(&int(1)), "1/1");
        assert_eq!(format_q(&q(-3, 6)), "-1/2");
        assert_eq!(parse_q("6/8"), Some(q(3, 4)));
        assert_eq!(parse_q("7"), Some(int(7)));
        assert_eq!(parse_q("1/0"), None);
        assert_eq!(parse_q("x"), None);
    }

    #[test]
    fn decimals() {
        assert_eq!(format_decimal(&q(1, 3), 3), "0.333");
        assert_eq!(format_decimal(&q(2, 3), 3), "0.667");
        assert_eq!(format_decimal(&q(1, 2000), 3), "0.001");
        assert_eq!(format_decimal(&q(-1, 2000), 3), "-0.001");
        assert_eq!(format_decimal(&q(-1, 3000), 3), "0.000");
        assert_eq!(format_decimal(&int(960), 3), "960.000");
    }

    #[test]
    fn loop_apexes() {
        assert_eq!(half_recip(1), q(2, 3));
        assert_eq!(half_recip(2), q(2, 5));
        assert!(in_unit_interval(&one()) && !in_unit_interval(&q(-1, 5)));
    }
}
